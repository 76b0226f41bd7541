use super::chars::{e_triple, ThetaChar};
use crate::error::{Error, Result};

/// Basis of the even-summand linear relations among `s`: coefficient
/// masks `c` with `Σ c_i = 0` and `Σ c_i s_i = 0`.
fn even_relations(s: &[ThetaChar]) -> Vec<u128> {
    // augmented vectors (ζ, 1); eliminate while tracking combinations
    let mut rows: Vec<(u64, u128)> = Vec::new();
    let mut kernel = Vec::new();
    for (i, z) in s.iter().enumerate() {
        let g = z.genus();
        let mut v = (z.to_bits() as u64) | 1 << (2 * g);
        let mut c = 1u128 << i;
        for &(r, rc) in &rows {
            if v ^ r < v {
                v ^= r;
                c ^= rc;
            }
        }
        if v == 0 {
            kernel.push(c);
        } else {
            rows.push((v, c));
            rows.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        }
    }
    kernel
}

fn satisfies(s: &[ThetaChar], c: u128) -> bool {
    let g = s[0].genus();
    let sum = s
        .iter()
        .enumerate()
        .filter(|(i, _)| c >> i & 1 == 1)
        .fold(ThetaChar::zero(g), |a, (_, &z)| a + z);
    sum.is_zero() && c.count_ones() % 2 == 0
}

/// Decides whether some `M ∈ Sp_g(F₂)` carries `s₁` to `s₂` termwise, by
/// comparing the even-summand relations, the `e_*` values and all `e`
/// triples.
pub fn frobenius_same_orbit(s1: &[ThetaChar], s2: &[ThetaChar]) -> Result<bool> {
    if s1.len() != s2.len() {
        return Err(Error::LengthMismatch(s1.len(), s2.len()));
    }
    if s1.is_empty() {
        return Ok(true);
    }
    if s1.len() > 128 {
        return Err(Error::PreconditionViolated(
            "at most 128 characteristics".into(),
        ));
    }
    let g = s1[0].genus();
    if s1.iter().chain(s2).any(|z| z.genus() != g) {
        return Err(Error::PreconditionViolated(
            "characteristics of different genus".into(),
        ));
    }
    if s1.iter().zip(s2).any(|(a, b)| a.e_star() != b.e_star()) {
        return Ok(false);
    }
    if !even_relations(s1).into_iter().all(|c| satisfies(s2, c))
        || !even_relations(s2).into_iter().all(|c| satisfies(s1, c))
    {
        return Ok(false);
    }
    let n = s1.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                if e_triple(s1[i], s1[j], s1[k]) != e_triple(s2[i], s2[j], s2[k]) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `M·ζ = M′ζ + ((A′C)₀; (B′D)₀)` for `M = (A B; C D) ∈ SL₂(F₂)`, `g = 1`.
pub fn act_genus_one(m: [u8; 4], z: ThetaChar) -> ThetaChar {
    let [a, b, c, d] = m.map(u32::from);
    let (x, y) = (z.top(), z.bottom());
    ThetaChar::new(1, (a * x + c * y + a * c) & 1, (b * x + d * y + b * d) & 1)
}

/// The six elements of `Sp₁(F₂) = SL₂(F₂)` as `[A, B, C, D]`.
pub fn sp2_f2() -> Vec<[u8; 4]> {
    let mut out = Vec::new();
    for bits in 0..16u8 {
        let m = [bits & 1, bits >> 1 & 1, bits >> 2 & 1, bits >> 3 & 1];
        if (m[0] * m[3] + m[1] * m[2]) % 2 == 1 {
            out.push(m);
        }
    }
    out
}

/// Orbit relation by enumerating the group.
pub fn same_orbit_brute_force_genus_one(s1: &[ThetaChar], s2: &[ThetaChar]) -> bool {
    s1.len() == s2.len()
        && sp2_f2()
            .into_iter()
            .any(|m| s1.iter().zip(s2).all(|(&a, &b)| act_genus_one(m, a) == b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::thetaf2::chars::all_chars;

    fn sequences(len: usize) -> Vec<Vec<ThetaChar>> {
        let chars: Vec<ThetaChar> = all_chars(1).collect();
        let mut out = vec![Vec::new()];
        for _ in 0..len {
            out = out
                .into_iter()
                .flat_map(|s| chars.iter().map(move |&c| [s.clone(), vec![c]].concat()))
                .collect();
        }
        out
    }

    #[test]
    fn group_action_is_well_formed() {
        let g = sp2_f2();
        assert_eq!(g.len(), 6);
        for m in &g {
            let images: std::collections::HashSet<_> =
                all_chars(1).map(|z| act_genus_one(*m, z)).collect();
            assert_eq!(images.len(), 4);
            for z in all_chars(1) {
                assert_eq!(act_genus_one(*m, z).e_star(), z.e_star());
            }
        }
    }

    #[test]
    fn trivial_cases() {
        let s: Vec<ThetaChar> = all_chars(2).collect();
        assert!(frobenius_same_orbit(&s, &s).unwrap());
        let odd = ThetaChar::new(1, 1, 1);
        assert!(!frobenius_same_orbit(&[odd], &[ThetaChar::zero(1)]).unwrap());
        assert!(frobenius_same_orbit(&[odd], &[]).is_err());
    }

    #[test]
    fn agrees_with_brute_force_genus_one() {
        for len in 1..=4 {
            let seqs = sequences(len);
            for a in &seqs {
                for b in &seqs {
                    assert_eq!(
                        frobenius_same_orbit(a, b).unwrap(),
                        same_orbit_brute_force_genus_one(a, b),
                        "{a:?} vs {b:?}"
                    );
                }
            }
        }
    }
}
