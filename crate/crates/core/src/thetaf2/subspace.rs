use super::chars::{is_balanced, subset_of_char, symplectic_pair, ThetaChar};
use crate::error::{Error, Result};

/// A subspace of F₂^{2g} held by its reduced row-echelon basis over the
/// packed vectors of [`ThetaChar::to_bits`]: pivots are leading (highest)
/// bits, in decreasing order, and every pivot column is clear in the
/// other rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct F2Subspace {
    g: usize,
    rows: Vec<u32>,
}

fn leading_bit(v: u32) -> u32 {
    31 - v.leading_zeros()
}

impl F2Subspace {
    pub fn zero(g: usize) -> Self {
        F2Subspace {
            g,
            rows: Vec::new(),
        }
    }

    /// The span of `gens`, reduced to canonical form.
    pub fn span(g: usize, gens: &[ThetaChar]) -> Self {
        let mut rows: Vec<u32> = Vec::new();
        for z in gens {
            assert_eq!(z.genus(), g, "genus mismatch");
            let mut v = z.to_bits();
            for &r in &rows {
                if v >> leading_bit(r) & 1 == 1 {
                    v ^= r;
                }
            }
            if v == 0 {
                continue;
            }
            let p = leading_bit(v);
            for r in rows.iter_mut() {
                if *r >> p & 1 == 1 {
                    *r ^= v;
                }
            }
            rows.push(v);
            rows.sort_unstable_by(|a, b| b.cmp(a));
        }
        F2Subspace { g, rows }
    }

    pub fn genus(&self) -> usize {
        self.g
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> Vec<ThetaChar> {
        self.rows
            .iter()
            .map(|&r| ThetaChar::from_bits(self.g, r))
            .collect()
    }

    /// All `2^d` elements, indexed by coefficient bitmask over the basis.
    pub fn elements(&self) -> Vec<ThetaChar> {
        (0..1u32 << self.dim())
            .map(|mask| {
                let v = self
                    .rows
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| mask >> k & 1 == 1)
                    .fold(0, |a, (_, &r)| a ^ r);
                ThetaChar::from_bits(self.g, v)
            })
            .collect()
    }

    pub fn contains(&self, z: ThetaChar) -> bool {
        let mut v = z.to_bits();
        for &r in &self.rows {
            if v >> leading_bit(r) & 1 == 1 {
                v ^= r;
            }
        }
        v == 0
    }

    /// The symplectic pairing vanishes on all pairs of basis vectors.
    pub fn is_isotropic(&self) -> bool {
        let b = self.basis();
        b.iter()
            .enumerate()
            .all(|(i, &x)| b[i + 1..].iter().all(|&y| symplectic_pair(x, y) == 0))
    }

    pub fn all_balanced(&self) -> bool {
        self.elements().into_iter().all(is_balanced)
    }
}

/// `[n choose k]_2`.
pub fn gaussian_binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        num *= (1u128 << (n - i)) - 1;
        den *= (1u128 << (i + 1)) - 1;
    }
    num / den
}

/// Every `d`-dimensional subspace of F₂^{2g} exactly once, generated
/// directly in canonical form: pivot sets in lexicographic order, then the
/// free entries counted upward.
pub fn enumerate_subspaces(g: usize, d: usize) -> Vec<F2Subspace> {
    let n = 2 * g;
    let mut out = Vec::new();
    if d > n {
        return out;
    }
    let mut pivots: Vec<usize> = (0..d).collect();
    loop {
        // descending pivots: row k has its leading bit at pivots_desc[k]
        let desc: Vec<usize> = pivots.iter().rev().copied().collect();
        let free: Vec<Vec<usize>> = desc
            .iter()
            .map(|&p| (0..p).filter(|c| !pivots.contains(c)).collect())
            .collect();
        let total_free: usize = free.iter().map(Vec::len).sum();
        for mut assign in 0..1u64 << total_free {
            let rows: Vec<u32> = desc
                .iter()
                .zip(&free)
                .map(|(&p, cols)| {
                    let mut v = 1u32 << p;
                    for &c in cols {
                        v |= ((assign & 1) as u32) << c;
                        assign >>= 1;
                    }
                    v
                })
                .collect();
            out.push(F2Subspace { g, rows });
        }
        // next combination
        let mut i = d;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if pivots[i] < n - d + i {
                pivots[i] += 1;
                for k in i + 1..d {
                    pivots[k] = pivots[k - 1] + 1;
                }
                break;
            }
        }
    }
}

/// A pairing of `B_g` into balanced blocks `u₁..u_{g+1}` and the subspace
/// `H ⊆ F₂^{g+1}` with `V = {η_{S_h} : h ∈ H}`, `S_h = ∪_{h_i≠0} u_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalancedStructure {
    pub blocks: Vec<[usize; 2]>,
    /// Basis of `H`; bit `i` is the coefficient of `u_{i+1}`.
    pub h_basis: Vec<u32>,
}

impl BalancedStructure {
    pub fn subset_of(&self, h: u32) -> Vec<usize> {
        let mut s: Vec<usize> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(i, _)| h >> i & 1 == 1)
            .flat_map(|(_, b)| *b)
            .collect();
        s.sort_unstable();
        s
    }

    pub fn h_elements(&self) -> Vec<u32> {
        (0..1u32 << self.h_basis.len())
            .map(|m| {
                self.h_basis
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| m >> k & 1 == 1)
                    .fold(0, |a, (_, &h)| a ^ h)
            })
            .collect()
    }
}

/// Refines the Venn atoms of the basis subsets into balanced pairs by
/// matching the k-th smallest odd index with the k-th smallest even one
/// in each atom.
pub fn balanced_structure(v: &F2Subspace) -> Result<BalancedStructure> {
    if !v.is_isotropic() || !v.all_balanced() {
        return Err(Error::PreconditionViolated(
            "subspace must be isotropic with balanced elements".into(),
        ));
    }
    let n = 2 * v.genus() + 2;
    let subsets: Vec<Vec<usize>> = v.basis().into_iter().map(subset_of_char).collect();
    let signature = |i: usize| -> u32 {
        subsets
            .iter()
            .enumerate()
            .filter(|(_, s)| s.contains(&i))
            .fold(0, |a, (k, _)| a | 1 << k)
    };
    let mut atoms: Vec<(u32, Vec<usize>)> = Vec::new();
    for i in 1..=n {
        let sig = signature(i);
        match atoms.iter_mut().find(|(s, _)| *s == sig) {
            Some((_, a)) => a.push(i),
            None => atoms.push((sig, vec![i])),
        }
    }
    let mut blocks: Vec<([usize; 2], u32)> = Vec::new();
    for (sig, atom) in &atoms {
        let odd: Vec<usize> = atom.iter().copied().filter(|i| i % 2 == 1).collect();
        let even: Vec<usize> = atom.iter().copied().filter(|i| i % 2 == 0).collect();
        if odd.len() != even.len() {
            return Err(Error::PreconditionViolated(format!(
                "unbalanced atom {atom:?}"
            )));
        }
        for (o, e) in odd.into_iter().zip(even) {
            blocks.push(([o.min(e), o.max(e)], *sig));
        }
    }
    blocks.sort_unstable();
    let h_basis = (0..subsets.len())
        .map(|k| {
            blocks
                .iter()
                .enumerate()
                .filter(|(_, (_, s))| s >> k & 1 == 1)
                .fold(0u32, |a, (i, _)| a | 1 << i)
        })
        .collect();
    Ok(BalancedStructure {
        blocks: blocks.into_iter().map(|(b, _)| b).collect(),
        h_basis,
    })
}
