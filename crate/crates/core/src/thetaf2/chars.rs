use std::fmt;

use crate::error::{Error, Result};

/// Largest genus whose characteristics fit the bitmask layout.
pub const MAX_GENUS: usize = 7;

/// A theta characteristic `[a; b]` in F₂^{2g}; bit `k` of `top` is
/// `a_{k+1}` and likewise for `bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaChar {
    g: usize,
    top: u32,
    bottom: u32,
}

impl ThetaChar {
    pub fn new(g: usize, top: u32, bottom: u32) -> Self {
        assert!((1..=MAX_GENUS).contains(&g), "genus {g} out of range");
        let mask = (1u32 << g) - 1;
        assert!(
            top & !mask == 0 && bottom & !mask == 0,
            "bits beyond genus {g}"
        );
        ThetaChar { g, top, bottom }
    }

    pub fn zero(g: usize) -> Self {
        ThetaChar::new(g, 0, 0)
    }

    /// From the packed vector produced by [`ThetaChar::to_bits`].
    pub fn from_bits(g: usize, bits: u32) -> Self {
        let mask = (1u32 << g) - 1;
        ThetaChar::new(g, bits & mask, (bits >> g) & mask)
    }

    /// `top` in the low `g` bits, `bottom` above.
    pub fn to_bits(self) -> u32 {
        self.top | (self.bottom << self.g)
    }

    pub fn from_vectors(a: &[u8], b: &[u8]) -> Self {
        assert_eq!(a.len(), b.len());
        let pack = |v: &[u8]| {
            v.iter()
                .enumerate()
                .fold(0u32, |acc, (k, &x)| acc | (((x & 1) as u32) << k))
        };
        ThetaChar::new(a.len(), pack(a), pack(b))
    }

    pub fn genus(self) -> usize {
        self.g
    }

    pub fn top(self) -> u32 {
        self.top
    }

    pub fn bottom(self) -> u32 {
        self.bottom
    }

    pub fn is_zero(self) -> bool {
        self.top == 0 && self.bottom == 0
    }

    /// `e_*(ζ) = (−1)^{a·b}`.
    pub fn e_star(self) -> i32 {
        if (self.top & self.bottom).count_ones() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(self) -> bool {
        self.e_star() == 1
    }
}

impl std::ops::Add for ThetaChar {
    type Output = ThetaChar;

    fn add(self, rhs: ThetaChar) -> ThetaChar {
        assert_eq!(self.g, rhs.g, "genus mismatch");
        ThetaChar {
            g: self.g,
            top: self.top ^ rhs.top,
            bottom: self.bottom ^ rhs.bottom,
        }
    }
}

impl fmt::Display for ThetaChar {
    /// `top:bottom`, each written `a₁a₂…a_g`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let row = |v: u32| {
            (0..self.g)
                .map(|k| if v >> k & 1 == 1 { '1' } else { '0' })
                .collect::<String>()
        };
        write!(f, "{}:{}", row(self.top), row(self.bottom))
    }
}

impl std::str::FromStr for ThetaChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("characteristic {s:?}"));
        let (a, b) = s.split_once(':').ok_or_else(bad)?;
        if a.len() != b.len() || a.is_empty() || a.len() > MAX_GENUS {
            return Err(bad());
        }
        let bits = |t: &str| -> Result<Vec<u8>> {
            t.chars()
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(bad()),
                })
                .collect()
        };
        Ok(ThetaChar::from_vectors(&bits(a)?, &bits(b)?))
    }
}

/// One characteristic per line.
pub fn dump(chars: &[ThetaChar]) -> String {
    chars.iter().map(|c| format!("{c}\n")).collect()
}

pub fn parse_dump(text: &str) -> Result<Vec<ThetaChar>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.trim().parse())
        .collect()
}

/// `e(ζ₁,ζ₂,ζ₃) = e_*(ζ₁)e_*(ζ₂)e_*(ζ₃)e_*(ζ₁+ζ₂+ζ₃)`.
pub fn e_triple(z1: ThetaChar, z2: ThetaChar, z3: ThetaChar) -> i32 {
    z1.e_star() * z2.e_star() * z3.e_star() * (z1 + z2 + z3).e_star()
}

/// `⟨[a;b],[c;d]⟩ = a·d + b·c` over F₂.
pub fn symplectic_pair(z: ThetaChar, x: ThetaChar) -> u8 {
    assert_eq!(z.g, x.g, "genus mismatch");
    (((z.top & x.bottom).count_ones() + (z.bottom & x.top).count_ones()) % 2) as u8
}

/// `η₁, …, η_{2g+2}` (index 0 holds `η₁`).
pub fn eta_basis(g: usize) -> Vec<ThetaChar> {
    let mut out = Vec::with_capacity(2 * g + 2);
    for i in 1..=g {
        let top = 1 << (i - 1);
        out.push(ThetaChar::new(g, top, (1 << (i - 1)) - 1));
        out.push(ThetaChar::new(g, top, (1 << i) - 1));
    }
    out.push(ThetaChar::new(g, 0, (1 << g) - 1));
    out.push(ThetaChar::zero(g));
    out
}

/// `η_S = Σ_{i∈S} η_i`; any subset of `B_g` is accepted.
pub fn char_of_subset(s: &[usize], g: usize) -> ThetaChar {
    let eta = eta_basis(g);
    s.iter().fold(ThetaChar::zero(g), |acc, &i| {
        assert!((1..=2 * g + 2).contains(&i), "index {i} outside B_{g}");
        acc + eta[i - 1]
    })
}

/// The even subset `S ⊆ {1..2g+1}` with `η_S = ζ`; the other member of
/// its class is the complement `S′` in `B_g`.
pub fn subset_of_char(z: ThetaChar) -> Vec<usize> {
    let g = z.g;
    let n = 2 * g;
    // η₁..η_{2g} form a basis: eliminate over the packed vectors
    let eta = eta_basis(g);
    let mut rows: Vec<(u32, u32)> = (0..n).map(|i| (eta[i].to_bits(), 1u32 << i)).collect();
    let mut target = (z.to_bits(), 0u32);
    for bit in (0..n).rev() {
        let Some(p) = rows.iter().position(|r| r.0 >> bit & 1 == 1) else {
            continue;
        };
        let pivot = rows.swap_remove(p);
        for r in rows.iter_mut() {
            if r.0 >> bit & 1 == 1 {
                r.0 ^= pivot.0;
                r.1 ^= pivot.1;
            }
        }
        if target.0 >> bit & 1 == 1 {
            target.0 ^= pivot.0;
            target.1 ^= pivot.1;
        }
    }
    debug_assert_eq!(target.0, 0);
    let mut s: Vec<usize> = (0..n)
        .filter(|i| target.1 >> i & 1 == 1)
        .map(|i| i + 1)
        .collect();
    if s.len() % 2 == 1 {
        // η_{2g+1} = Σ_{i≤2g} η_i, so the complement in {1..2g+1} has the same image
        s = (1..=2 * g + 1).filter(|i| !s.contains(i)).collect();
    }
    s
}

/// Equal numbers of odd and even indices.
pub fn is_balanced_subset(s: &[usize]) -> bool {
    let odd = s.iter().filter(|&&i| i % 2 == 1).count();
    2 * odd == s.len()
}

pub fn is_balanced(z: ThetaChar) -> bool {
    is_balanced_subset(&subset_of_char(z))
}

/// All `2^{2g}` characteristics in order of their packed bits.
pub fn all_chars(g: usize) -> impl Iterator<Item = ThetaChar> {
    (0..1u32 << (2 * g)).map(move |b| ThetaChar::from_bits(g, b))
}

/// `U_g ⊕ S` for the class of `ζ`, normalized to the member containing 1.
/// Has `g+1` elements exactly when `ζ` is balanced.
pub fn thomae_support(z: ThetaChar) -> Vec<usize> {
    let g = z.g;
    let s = subset_of_char(z);
    let t: Vec<usize> = (1..=2 * g + 2)
        .filter(|&i| (i % 2 == 1) != s.contains(&i))
        .collect();
    if t.contains(&1) {
        t
    } else {
        (1..=2 * g + 2).filter(|i| !t.contains(i)).collect()
    }
}

pub(crate) fn check_genus(z: ThetaChar, g: usize) -> Result<()> {
    if z.g != g {
        return Err(Error::PreconditionViolated(format!(
            "characteristic of genus {} where {g} expected",
            z.g
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xor_sum(v: &[ThetaChar]) -> ThetaChar {
        v.iter().fold(ThetaChar::zero(v[0].genus()), |a, &b| a + b)
    }

    #[test]
    fn eta_table() {
        let e = eta_basis(1);
        let expect = [(1, 0), (1, 1), (0, 1), (0, 0)];
        for (c, (t, b)) in e.iter().zip(expect) {
            assert_eq!((c.top(), c.bottom()), (t, b));
        }
        for g in 1..=4 {
            let e = eta_basis(g);
            assert!(xor_sum(&e).is_zero());
            assert!(e[2 * g + 1].is_zero());
            assert_eq!(e[2 * g], ThetaChar::new(g, 0, (1 << g) - 1));
        }
    }

    #[test]
    fn subset_round_trip() {
        assert_eq!(char_of_subset(&[1, 2], 1), ThetaChar::new(1, 0, 1));
        assert_eq!(subset_of_char(ThetaChar::new(1, 1, 1)), vec![1, 3]);
        assert_eq!(char_of_subset(&[2, 4], 1), ThetaChar::new(1, 1, 1));
        assert!(char_of_subset(&[], 2).is_zero());
        for g in 1..=4 {
            for z in all_chars(g) {
                let s = subset_of_char(z);
                assert_eq!(s.len() % 2, 0);
                assert!(!s.contains(&(2 * g + 2)));
                assert_eq!(char_of_subset(&s, g), z);
                let comp: Vec<usize> = (1..=2 * g + 2).filter(|i| !s.contains(i)).collect();
                assert_eq!(char_of_subset(&comp, g), z);
                assert_eq!(is_balanced_subset(&s), is_balanced_subset(&comp));
            }
        }
    }

    #[test]
    fn e_star_examples() {
        assert_eq!(ThetaChar::zero(1).e_star(), 1);
        assert_eq!(ThetaChar::new(1, 1, 1).e_star(), -1);
        assert!(is_balanced_subset(&[1, 2]));
        assert!(!is_balanced_subset(&[1, 3]));
    }

    #[test]
    fn e_star_against_subsets() {
        for g in 1..=4 {
            for z in all_chars(g) {
                let s = subset_of_char(z);
                let sym = (1..=2 * g + 2)
                    .filter(|&i| (i % 2 == 1) != s.contains(&i))
                    .count();
                let exp = (g + 1).abs_diff(sym) / 2;
                assert_eq!(z.e_star(), if exp % 2 == 0 { 1 } else { -1 }, "{z}");
                if is_balanced(z) {
                    assert_eq!(z.e_star(), 1);
                    assert_eq!(thomae_support(z).len(), g + 1);
                }
            }
        }
    }

    #[test]
    fn e_star_quadratic_form() {
        for g in 1..=2 {
            for z in all_chars(g) {
                for x in all_chars(g) {
                    let sign = if symplectic_pair(z, x) == 1 { -1 } else { 1 };
                    assert_eq!((z + x).e_star(), z.e_star() * x.e_star() * sign);
                }
            }
        }
    }

    #[test]
    fn dump_round_trip() {
        let v: Vec<ThetaChar> = all_chars(2).collect();
        let text = dump(&v);
        assert!(text.starts_with("00:00\n10:00\n01:00\n"));
        assert_eq!(parse_dump(&text).unwrap(), v);
        assert!("10:1".parse::<ThetaChar>().is_err());
        assert!("1x:10".parse::<ThetaChar>().is_err());
    }
}
