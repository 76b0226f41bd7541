use super::forms::{delta, delta_pair, InvariantForm};
use super::star::{star, star_poly};
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Var, VarContext};

/// `f(a₁,…,a_{r₁}, α₁+t,…,α_{r₂}+t)`.
fn shifted(f: &Polynomial, r1: usize, r2: usize) -> Result<Polynomial> {
    f.shift_right_block(r1, r2)
}

/// Valuation `ν_{r₁,r₂}(f)`: the `t`-degree after shifting the right block.
pub fn nu(f: &Polynomial, r1: usize, r2: usize) -> Result<u32> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let s = shifted(f, r1, r2)?;
    let t = s.ctx().index(Var::T).unwrap();
    Ok(s.degree_in(t).unwrap_or(0))
}

/// `T^{(j)}_{r₁,r₂} f`: the coefficient of `t^j`, in the block context
/// `a₁..a_{r₁}, α₁..α_{r₂}`.
pub fn tmap(f: &Polynomial, r1: usize, r2: usize, j: u32) -> Result<Polynomial> {
    shifted(f, r1, r2)?.coeff_of(Var::T, j)
}

/// The grade `j(2g₁g₂+g₁+g₂)` at which the Witt map reads off `T`.
pub fn witt_grade(g1: usize, g2: usize, j: u32) -> u32 {
    j * (2 * g1 * g2 + g1 + g2) as u32
}

/// Image of a weight-`gj` form under `T` at the Witt grade; equals
/// `(∗⊗∗)` of its Witt image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WittImage {
    pub poly: Polynomial,
    pub g1: usize,
    pub g2: usize,
    pub j: u32,
}

impl WittImage {
    pub fn of(f: &Polynomial, g1: usize, g2: usize, j: u32) -> Result<Self> {
        let poly = tmap(f, 2 * g1 + 1, 2 * g2 + 1, witt_grade(g1, g2, j))?;
        Ok(WittImage { poly, g1, g2, j })
    }
}

/// `p ⊗ q`: `p` in `a₁..a_{r₁}`, `q` in `α₁..α_{r₂}`.
pub fn tensor(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    let (r1, r2) = (p.ctx().r, q.ctx().r);
    if p.ctx().has_aux() || q.ctx().has_aux() {
        return Err(Error::PreconditionViolated(
            "tensor factors must be branch-only".into(),
        ));
    }
    let ctx = VarContext::blocks(r1, r2);
    ctx.validate()?;
    let left = p.remap(ctx, &(0..r1).map(Some).collect::<Vec<_>>())?;
    let right = q.remap(ctx, &(0..r2).map(|j| Some(r1 + j)).collect::<Vec<_>>())?;
    left.mul(&right)
}

/// Factors a block polynomial as `p ⊗ q`, with `p`'s graded-lex leading
/// coefficient normalized to 1.
pub fn split_tensor(w: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    let ctx = w.ctx();
    if ctx.t || ctx.x || ctx.y {
        return Err(Error::PreconditionViolated(
            "expected a two-block context".into(),
        ));
    }
    let (r1, r2) = (ctx.r, ctx.right);
    let (lead, _) = w.leading_term().ok_or(Error::ZeroPolynomial)?;
    let lmask = |m: crate::polyring::Monomial| {
        let mut x = m;
        for j in 0..r2 {
            x = x.with_exp(r1 + j, 0);
        }
        x
    };
    let rmask = |m: crate::polyring::Monomial| {
        let mut x = m;
        for i in 0..r1 {
            x = x.with_exp(i, 0);
        }
        x
    };
    let (u, v) = (lmask(lead), rmask(lead));
    let lctx = VarContext::branch(r1);
    let rctx = VarContext::branch(r2);
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (m, c) in w.terms() {
        if rmask(*m) == v {
            left.push(((0..r1).map(|i| m.exp(i)).collect::<Vec<_>>(), c.clone()));
        }
        if lmask(*m) == u {
            right.push((
                (0..r2).map(|j| m.exp(r1 + j)).collect::<Vec<_>>(),
                c.clone(),
            ));
        }
    }
    let p = Polynomial::from_terms(lctx, left);
    let q = Polynomial::from_terms(rctx, right);
    let (_, lc) = p.leading_term().ok_or(Error::NotPureTensor)?;
    let p = p.scale(&lc.recip());
    let pu = p.coeff(crate::polyring::Monomial::from_exponents(
        &(0..r1).map(|i| u.exp(i)).collect::<Vec<_>>(),
    ));
    let q = q.scale(&pu.recip());
    if tensor(&p, &q)? != *w {
        return Err(Error::NotPureTensor);
    }
    Ok((p, q))
}

/// Checks `W_{g₁,g₂}(f) = p ⊗ q` through `T^{(grade)} f = ∗p ⊗ ∗q`, after
/// confirming the valuation bound for `f`.
pub fn witt_check(
    f: &InvariantForm,
    p: &InvariantForm,
    q: &InvariantForm,
    g1: usize,
    g2: usize,
    j: u32,
) -> Result<bool> {
    let grade = witt_grade(g1, g2, j);
    let v = nu(&f.poly, 2 * g1 + 1, 2 * g2 + 1)?;
    if v > grade {
        return Err(Error::ValuationViolation {
            nu: v,
            bound: grade,
        });
    }
    let lhs = tmap(&f.poly, 2 * g1 + 1, 2 * g2 + 1, grade)?;
    let rhs = tensor(&star(p)?, &star(q)?)?;
    Ok(lhs == rhs)
}

/// `π₁T = T ∩ {1..2g₁+1}`.
pub fn pi1_subset(t: &[usize], g1: usize) -> Vec<usize> {
    t.iter().copied().filter(|&x| x <= 2 * g1 + 1).collect()
}

/// `π₂T = {x − (2g₁+1) : x ∈ T, x ≥ 2g₁+2}`.
pub fn pi2_subset(t: &[usize], g1: usize) -> Vec<usize> {
    t.iter()
        .copied()
        .filter(|&x| x > 2 * g1 + 1)
        .map(|x| x - (2 * g1 + 1))
        .collect()
}

fn complement(t: &[usize], n: usize) -> Vec<usize> {
    (1..=n).filter(|x| !t.contains(x)).collect()
}

/// The three-case closed form for `T^{(2g₁g₂+g₁+g₂)}(Δ_TΔ_{T′})`, `|T| = g+1`.
pub fn delta_pair_witt_closed_form(t: &[usize], g1: usize, g2: usize) -> Result<Polynomial> {
    let g = g1 + g2;
    let n = 2 * g + 2;
    if t.len() != g + 1 || t.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::PreconditionViolated(format!(
            "{t:?} is not a (g+1)-subset"
        )));
    }
    let tc = complement(t, n);
    let ctx = VarContext::blocks(2 * g1 + 1, 2 * g2 + 1);
    let m = pi1_subset(t, g1).len();
    let (left_set, right_set) = if m == g1 + 1 {
        (pi1_subset(t, g1), pi2_subset(&tc, g1))
    } else if m == g1 {
        (pi1_subset(&tc, g1), pi2_subset(t, g1))
    } else {
        return Ok(Polynomial::zero(ctx));
    };
    // (Δ_{π₁T} Δ_{(π₁T)′})^* ⊗ (Δ_{(π₂T′)′} Δ_{π₂T′})^*, complements in B_{g_i}
    let left = star_poly(&delta_pair(&left_set, 2 * g1 + 2), g1 as u32)?;
    let right = star_poly(&delta_pair(&right_set, 2 * g2 + 2), g2 as u32)?;
    tensor(&left, &right)
}

/// `T^{(4g₁g₂+2g₁+2g₂+1)} Δ_{B_g} = Δ_{{1..2g₁+1}} ⊗ Δ_{{1..2g₂+1}}`, as a
/// pair `(computed, expected)`.
pub fn discriminant_witt(g1: usize, g2: usize) -> Result<(Polynomial, Polynomial)> {
    let g = g1 + g2;
    let n = 2 * g + 2;
    let d = delta(&(1..=n).collect::<Vec<_>>(), VarContext::branch(n));
    let r1 = 2 * g1 + 1;
    let r2 = 2 * g2 + 1;
    let lhs = tmap(&d, r1, r2, (r1 * r2) as u32)?;
    let rhs = tensor(
        &delta(&(1..=r1).collect::<Vec<_>>(), VarContext::branch(r1)),
        &delta(&(1..=r2).collect::<Vec<_>>(), VarContext::branch(r2)),
    )?;
    Ok((lhs, rhs))
}
