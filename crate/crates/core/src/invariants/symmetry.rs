use rayon::prelude::*;

use super::forms::membership_sw;
use super::perm::{self, Perm};
use super::witt::nu;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Rational, Var, VarContext};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Group {
    /// The full symmetric group on the branch points.
    Full,
    /// The theta group `S_U`.
    Theta,
}

pub fn is_invariant_under(f: &Polynomial, gens: &[Perm]) -> Result<bool> {
    for s in gens {
        if f.permute_vars(s)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Σ_{σ ∈ perms} σ(f)` as a deterministic parallel reduction.
pub fn sum_over(f: &Polynomial, perms: &[Perm], budget: &Budget) -> Result<Polynomial> {
    let ctx = f.ctx();
    let chunk = perms.len().div_ceil(rayon::current_num_threads()).max(1);
    let total = perms
        .par_chunks(chunk)
        .map(|part| -> Result<Polynomial> {
            let mut acc = Polynomial::zero(ctx);
            for s in part {
                acc.add_assign(&f.permute_vars(s)?)?;
                budget.check(&acc, "symmetrization")?;
            }
            Ok(acc)
        })
        .try_reduce(|| Polynomial::zero(ctx), |a, b| a.add(&b))?;
    Ok(total)
}

/// Sum over every permutation of the branch points, term by term.
pub fn symmetrize_direct(f: &Polynomial, budget: &Budget) -> Result<Polynomial> {
    sum_over(f, &perm::all_permutations(f.ctx().r), budget)
}

fn genus_of(f: &Polynomial) -> Result<usize> {
    let r = f.ctx().r;
    if r < 4 || r % 2 == 1 {
        return Err(Error::PreconditionViolated(format!(
            "{r} branch points is not 2g+2"
        )));
    }
    Ok(r / 2 - 1)
}

/// `Σ_{σ∈G} σ(f)`.
///
/// For the full group an `S_U`-invariant input is summed over one
/// representative per coset and scaled by `|S_U|`; other inputs fall back
/// to the direct sum.
pub fn symmetrize(f: &Polynomial, group: Group, budget: &Budget) -> Result<Polynomial> {
    let g = genus_of(f)?;
    match group {
        Group::Theta => sum_over(f, &perm::s_u_elements(g), budget),
        Group::Full => {
            if is_invariant_under(f, &perm::s_u_generators(g))? {
                let order = 2 * (1..=g as i64 + 1).product::<i64>().pow(2);
                let reps = sum_over(f, &perm::s_u_coset_reps(g), budget)?;
                Ok(reps.scale(&Rational::from_int(order)))
            } else {
                symmetrize_direct(f, budget)
            }
        }
    }
}

/// `ν_{2g₁+1,2g₂+1}(f)` with its bound `(w/g)(2g₁g₂+g₁+g₂)` for every
/// split `g₁ + g₂ = g` with both parts positive.
pub fn valuations(f: &Polynomial, g: usize, w: u32) -> Result<Vec<(usize, usize, u32, u32)>> {
    let mut out = Vec::new();
    for g1 in 1..g {
        let g2 = g - g1;
        let v = nu(f, 2 * g1 + 1, 2 * g2 + 1)?;
        let bound = w * (2 * g1 * g2 + g1 + g2) as u32 / g as u32;
        out.push((g1, g2, v, bound));
    }
    Ok(out)
}

/// Membership in `B_g^k = S_{kg/2}(2g+2)₀(S_U)`.
pub fn membership_b(f: &Polynomial, g: usize, k: u32) -> Result<bool> {
    if k % 2 == 1 {
        return Err(Error::PreconditionViolated(format!("weight {k} is odd")));
    }
    let w = k * g as u32 / 2;
    if !membership_sw(f, w, 2 * g + 2) {
        return Ok(false);
    }
    if !is_invariant_under(f, &perm::s_u_generators(g))? {
        return Ok(false);
    }
    Ok(valuations(f, g, w)?.iter().all(|&(_, _, v, b)| v <= b))
}

/// `P_T(x) = ∏_{i∈T}(x − a_i)` in the context with `x` and `y`.
fn p_t(ctx: VarContext, t: &[usize], v: Var) -> Result<Polynomial> {
    let mut p = Polynomial::one(ctx);
    for &i in t {
        p = p.mul(&Polynomial::diff(ctx, v, Var::A(i)))?;
    }
    Ok(p)
}

/// `(P_U(x)P_{U′}(y) − P_U(y)P_{U′}(x))·h`.
pub fn morozov_integrand(h: &Polynomial, g: usize) -> Result<Polynomial> {
    let ctx = VarContext::branch(2 * g + 2).with_xy();
    ctx.validate()?;
    let (u, up) = (perm::u_set(g), perm::u_prime_set(g));
    let bracket = p_t(ctx, &u, Var::X)?
        .mul(&p_t(ctx, &up, Var::Y)?)?
        .sub(&p_t(ctx, &u, Var::Y)?.mul(&p_t(ctx, &up, Var::X)?)?)?;
    bracket.mul(&h.embed(ctx)?)
}

/// Swaps `x` and `y`.
pub fn swap_xy(f: &Polynomial) -> Result<Polynomial> {
    let ctx = f.ctx();
    let (ix, iy) = (ctx.require(Var::X)?, ctx.require(Var::Y)?);
    let map: Vec<Option<usize>> = (0..ctx.nvars())
        .map(|i| {
            Some(if i == ix {
                iy
            } else if i == iy {
                ix
            } else {
                i
            })
        })
        .collect();
    f.remap(ctx, &map)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorozovOutcome {
    /// The integrand is fixed by the generators of `S̃_U`.
    pub tilde_invariant: bool,
    /// Swapping `x ↔ y` negates the integrand.
    pub antisymmetric: bool,
    /// The full symmetrization vanishes.
    pub vanishes: bool,
}

/// Full symmetrization of the integrand over `S_{2g+2}`, computed as
/// `|S̃_U| · Σ_τ τ(F)` over coset representatives once the integrand's
/// `S̃_U`-invariance is established (direct sum otherwise).
pub fn morozov_check(h: &Polynomial, g: usize, budget: &Budget) -> Result<MorozovOutcome> {
    let f = morozov_integrand(h, g)?;
    budget.check(&f, "Morozov integrand")?;
    let antisymmetric = swap_xy(&f)? == f.neg();
    let tilde_invariant = is_invariant_under(&f, &perm::s_u_tilde_generators(g))?;
    let total = if tilde_invariant {
        sum_over(&f, &perm::s_u_tilde_coset_reps(g), budget)?
    } else {
        sum_over(&f, &perm::all_permutations(2 * g + 2), budget)?
    };
    Ok(MorozovOutcome {
        tilde_invariant,
        antisymmetric,
        vanishes: total.is_zero(),
    })
}
