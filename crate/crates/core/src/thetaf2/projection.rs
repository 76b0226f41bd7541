use num_bigint::BigInt;
use num_rational::BigRational;

use super::chars::{char_of_subset, check_genus, subset_of_char, ThetaChar};
use super::subspace::{enumerate_subspaces, F2Subspace};
use super::thomae::{g_tilde, n_count, q_squared};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::invariants::{star_poly, tensor, tmap, witt_grade};
use crate::polyring::{Polynomial, Rational, VarContext};

fn check_split(g: usize, g1: usize, g2: usize) -> Result<()> {
    if g1 == 0 || g2 == 0 || g1 + g2 != g {
        return Err(Error::PreconditionViolated(format!(
            "{g1} + {g2} is not a split of genus {g}"
        )));
    }
    Ok(())
}

/// Coordinate projection onto the first `g₁` and last `g₂` columns of
/// `[a; b]`.
pub fn pi_project(z: ThetaChar, g1: usize, g2: usize) -> Result<(ThetaChar, ThetaChar)> {
    check_split(z.genus(), g1, g2)?;
    let lo = (1u32 << g1) - 1;
    let left = ThetaChar::new(g1, z.top() & lo, z.bottom() & lo);
    let right = ThetaChar::new(g2, z.top() >> g1, z.bottom() >> g1);
    Ok((left, right))
}

fn project_subspace(
    v: &F2Subspace,
    g1: usize,
    g2: usize,
    f: impl Fn(ThetaChar) -> Result<(ThetaChar, ThetaChar)>,
) -> Result<(F2Subspace, F2Subspace)> {
    let images = v.basis().into_iter().map(f).collect::<Result<Vec<_>>>()?;
    let (l, r): (Vec<_>, Vec<_>) = images.into_iter().unzip();
    Ok((F2Subspace::span(g1, &l), F2Subspace::span(g2, &r)))
}

pub fn pi_project_subspace(
    v: &F2Subspace,
    g1: usize,
    g2: usize,
) -> Result<(F2Subspace, F2Subspace)> {
    project_subspace(v, g1, g2, |z| pi_project(z, g1, g2))
}

/// The splitting of `η_S` seen by the Witt map on branch points: the part
/// of `S` in `{1..2g₁+1}`, and the part in `{2g₁+2..2g+2}` shifted down by
/// `2g₁+1`. Since `η_{2g_i+2} = 0`, odd parts need no completion.
pub fn witt_restrict(z: ThetaChar, g1: usize, g2: usize) -> Result<(ThetaChar, ThetaChar)> {
    check_split(z.genus(), g1, g2)?;
    let s = subset_of_char(z);
    let cut = 2 * g1 + 1;
    let left: Vec<usize> = s.iter().copied().filter(|&i| i <= cut).collect();
    let right: Vec<usize> = s
        .iter()
        .copied()
        .filter(|&i| i > cut)
        .map(|i| i - cut)
        .collect();
    Ok((char_of_subset(&left, g1), char_of_subset(&right, g2)))
}

pub fn witt_restrict_subspace(
    v: &F2Subspace,
    g1: usize,
    g2: usize,
) -> Result<(F2Subspace, F2Subspace)> {
    project_subspace(v, g1, g2, |z| witt_restrict(z, g1, g2))
}

fn star_power(q: &Polynomial, g: usize, k: u32) -> Result<Option<Polynomial>> {
    if q.is_zero() {
        return Ok(None);
    }
    Ok(Some(star_poly(q, 4 * g as u32)?.pow(k)?))
}

fn tensor_or_zero(
    p: Option<Polynomial>,
    q: Option<Polynomial>,
    g1: usize,
    g2: usize,
) -> Result<Polynomial> {
    match (p, q) {
        (Some(p), Some(q)) => tensor(&p, &q),
        _ => Ok(Polynomial::zero(VarContext::blocks(2 * g1 + 1, 2 * g2 + 1))),
    }
}

/// `T^{(grade)} Q_V²` at the Witt grade for weight `4g`.
pub fn witt_image_q(v: &F2Subspace, g1: usize, g2: usize) -> Result<Polynomial> {
    check_split(v.genus(), g1, g2)?;
    tmap(
        &q_squared(v)?,
        2 * g1 + 1,
        2 * g2 + 1,
        witt_grade(g1, g2, 4),
    )
}

/// Both sides of `W(Q_V²) = Q_{π₁V}^{2^{1+d−d₁}} Q_{π₂V}^{2^{1+d−d₂}}` with
/// coordinate projections, compared after `∗ ⊗ ∗`.
pub fn witt_q_coordinate(v: &F2Subspace, g1: usize, g2: usize) -> Result<(Polynomial, Polynomial)> {
    let lhs = witt_image_q(v, g1, g2)?;
    let (v1, v2) = pi_project_subspace(v, g1, g2)?;
    let d = v.dim();
    let p = star_power(&q_squared(&v1)?, g1, 1 << (d - v1.dim()))?;
    let q = star_power(&q_squared(&v2)?, g2, 1 << (d - v2.dim()))?;
    Ok((lhs, tensor_or_zero(p, q, g1, g2)?))
}

/// Both sides of `W(Q_V²) = Q²_{V₁} ⊗ Q²_{V₂}` with `(V₁, V₂)` from
/// [`witt_restrict_subspace`], compared after `∗ ⊗ ∗`.
pub fn witt_q_restricted(v: &F2Subspace, g1: usize, g2: usize) -> Result<(Polynomial, Polynomial)> {
    let lhs = witt_image_q(v, g1, g2)?;
    let (v1, v2) = witt_restrict_subspace(v, g1, g2)?;
    let p = star_power(&q_squared(&v1)?, g1, 1)?;
    let q = star_power(&q_squared(&v2)?, g2, 1)?;
    Ok((lhs, tensor_or_zero(p, q, g1, g2)?))
}

/// Both sides of `W G̃^{(g)}_d = Σ_{d₁,d₂} N_{d₁,d₂;d} G̃^{(g₁)}_{d₁} ⊗ G̃^{(g₂)}_{d₂}`,
/// compared after `∗ ⊗ ∗`.
pub fn witt_g_tilde(
    g1: usize,
    g2: usize,
    d: usize,
    budget: &Budget,
) -> Result<(Polynomial, Polynomial)> {
    let g = g1 + g2;
    let lhs = tmap(
        &g_tilde(g, d, budget)?,
        2 * g1 + 1,
        2 * g2 + 1,
        witt_grade(g1, g2, 4),
    )?;
    let mut rhs = Polynomial::zero(VarContext::blocks(2 * g1 + 1, 2 * g2 + 1));
    for d1 in 0..=d.min(g1) {
        let p = star_power(&g_tilde(g1, d1, budget)?, g1, 1)?;
        for d2 in 0..=d.min(g2) {
            let n = n_count(d1 as u32, d2 as u32, d as u32);
            if n == 0u8.into() {
                continue;
            }
            let q = star_power(&g_tilde(g2, d2, budget)?, g2, 1)?;
            let term = tensor_or_zero(p.clone(), q, g1, g2)?;
            let c = Rational::from_big(BigRational::from_integer(BigInt::from(n)));
            rhs.add_assign(&term.scale(&c))?;
            budget.check(&rhs, "Witt image of G̃")?;
        }
    }
    Ok((lhs, rhs))
}

/// Per-subspace outcome of both Witt checks over all `V` with `dim V ≤ g`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WittTally {
    pub subspaces: usize,
    pub coordinate_pass: usize,
    pub restricted_pass: usize,
}

pub fn witt_q_tally(g1: usize, g2: usize) -> Result<WittTally> {
    let g = g1 + g2;
    let mut t = WittTally::default();
    for d in 0..=g {
        for v in enumerate_subspaces(g, d) {
            t.subspaces += 1;
            let (l, r) = witt_q_coordinate(&v, g1, g2)?;
            t.coordinate_pass += (l == r) as usize;
            let (l, r) = witt_q_restricted(&v, g1, g2)?;
            t.restricted_pass += (l == r) as usize;
        }
    }
    Ok(t)
}

/// `{η_{σ(S)} : η_S ∈ V}`.
pub fn permute_subspace(v: &F2Subspace, sigma: &[usize]) -> Result<F2Subspace> {
    let g = v.genus();
    if sigma.len() != 2 * g + 2 {
        return Err(Error::LengthMismatch(sigma.len(), 2 * g + 2));
    }
    let images: Vec<ThetaChar> = v
        .basis()
        .into_iter()
        .map(|z| {
            check_genus(z, g)?;
            let s: Vec<usize> = subset_of_char(z)
                .into_iter()
                .map(|i| sigma[i - 1])
                .collect();
            Ok(char_of_subset(&s, g))
        })
        .collect::<Result<_>>()?;
    Ok(F2Subspace::span(g, &images))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::perm;

    #[test]
    fn projection_examples() {
        let z = ThetaChar::from_vectors(&[1, 0], &[1, 1]);
        let (l, r) = pi_project(z, 1, 1).unwrap();
        assert_eq!((l, r), (ThetaChar::new(1, 1, 1), ThetaChar::new(1, 0, 1)));
        let (l, r) = pi_project(ThetaChar::zero(2), 1, 1).unwrap();
        assert!(l.is_zero() && r.is_zero());
        assert!(pi_project(z, 2, 0).is_err());
    }

    #[test]
    fn restriction_is_an_isomorphism() {
        for (g1, g2) in [(1, 1), (1, 2), (2, 1)] {
            let g = g1 + g2;
            let mut seen = std::collections::HashSet::new();
            for z in super::super::chars::all_chars(g) {
                let (l, r) = witt_restrict(z, g1, g2).unwrap();
                assert!(seen.insert((l, r)));
                assert_eq!(z.e_star(), l.e_star() * r.e_star());
            }
        }
    }

    #[test]
    fn restricted_witt_identity_genus_two() {
        let t = witt_q_tally(1, 1).unwrap();
        assert_eq!(t.subspaces, 51);
        assert_eq!(t.restricted_pass, 51);
    }

    #[test]
    fn corrected_wgg_genus_two() {
        let b = Budget::unlimited();
        for d in 0..=2 {
            let (l, r) = witt_g_tilde(1, 1, d, &b).unwrap();
            assert_eq!(l, r, "d={d}");
        }
    }

    #[test]
    fn q_equivariance() {
        for d in 0..=2 {
            for v in enumerate_subspaces(2, d) {
                let q = q_squared(&v).unwrap();
                for s in perm::s_u_generators(2) {
                    let w = permute_subspace(&v, &s).unwrap();
                    assert_eq!(q.permute_vars(&s).unwrap(), q_squared(&w).unwrap());
                }
            }
        }
    }
}
