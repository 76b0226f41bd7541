use super::forms::{delta, InvariantForm};
use super::perm::{u_prime_set, u_set};
use super::star::star_poly;
use crate::error::{Error, Result};
use crate::polyring::{Monomial, Polynomial, Rational, VarContext};

/// `Φ̄_{mn}` (with `bar`) or `Φ_{mn}`: set `a_m = a_n = 0`, then divide
/// exactly by `(∏_{ℓ≠m,n} a_ℓ)^j` and compact the surviving indices.
pub fn phi(f: &Polynomial, m: usize, n: usize, j: u32, bar: bool) -> Result<Polynomial> {
    let ctx = f.ctx();
    let r = ctx.r;
    if m == n || m == 0 || n == 0 || m > r || n > r || ctx.has_aux() {
        return Err(Error::PreconditionViolated(format!(
            "Φ_{{{m},{n}}} on {ctx}"
        )));
    }
    let z = f.set_zero(m - 1).set_zero(n - 1);
    if bar {
        return Ok(z);
    }
    let mut exps = vec![j; r];
    exps[m - 1] = 0;
    exps[n - 1] = 0;
    let divisor = Polynomial::from_terms(ctx, vec![(exps, Rational::ONE)]);
    let q = z.exact_div(&divisor)?;
    let mut map = Vec::with_capacity(r);
    let mut next = 0;
    for i in 1..=r {
        if i == m || i == n {
            map.push(None);
        } else {
            map.push(Some(next));
            next += 1;
        }
    }
    q.remap(VarContext::branch(r - 2), &map)
}

/// True iff every `Φ_{mn} f` vanishes.
pub fn is_cusp(f: &Polynomial, j: u32) -> Result<bool> {
    let r = f.ctx().r;
    for m in 1..=r {
        for n in m + 1..=r {
            if !phi(f, m, n, j, false)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `Δ_{B_g} Δ_{U_g} Δ_{U′_g}`.
pub fn cusp_divisor(g: usize) -> Polynomial {
    let r = 2 * g + 2;
    let ctx = VarContext::branch(r);
    delta(&(1..=r).collect::<Vec<_>>(), ctx)
        .mul(&delta(&u_set(g), ctx))
        .and_then(|p| p.mul(&delta(&u_prime_set(g), ctx)))
        .expect("degree bound")
}

/// The quotient `f` in `h = Δ_{B_g} Δ_{U_g} Δ_{U′_g} f`.
pub fn cusp_factor(h: &Polynomial, g: usize) -> Result<Polynomial> {
    h.exact_div(&cusp_divisor(g))
}

/// `Φ̄_{ij}(∗f) = 0` for all `i < j < 2g+2`, where `f` has weight `w`.
pub fn starred_phi_bar_vanishes(f: &Polynomial, w: u32) -> Result<bool> {
    let s = star_poly(f, w)?;
    let r = s.ctx().r;
    for i in 1..=r {
        for j in i + 1..=r {
            if !phi(&s, i, j, 0, true)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `c` with `Φ̄_{mn}(∗h₁) = c·a_k^{e}`, where `k` is the remaining index.
fn surviving_coefficient(s: &Polynomial, m: usize, n: usize, e: u32) -> Result<Rational> {
    let z = phi(s, m, n, 0, true)?;
    let k = (1..=3).find(|x| *x != m && *x != n).unwrap();
    let mono = Monomial::var(k - 1, e);
    let c = z.coeff(mono);
    if z != Polynomial::from_terms(s.ctx(), vec![(mono.exponents(3), c.clone())]) {
        return Err(Error::PreconditionViolated(
            "Φ̄ of ∗h₁ is not a monomial".into(),
        ));
    }
    Ok(c)
}

/// Outcome of the two relations tying `Φ` of `f` to a Witt image
/// `W_{g−1,1} f = h₂ ⊗ h₁`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiRelations {
    pub last_pair: bool,
    pub second_pair: bool,
}

/// For `f ∈ B_g^k` with `W_{g−1,1} f = h₂ ⊗ h₁`:
///
/// * `∗Φ_{2g+1,2g+2} f = (−1)^{k/2} (∗h₂) Φ̄_{2,3}(∗h₁) α₁^{−k/2}`
/// * `∗Φ_{2g,2g+2} f = (∗h₂) Φ̄_{1,3}(∗h₁) (−α₂)^{−k/2}`
///
/// `Φ̄(∗h₁)` is a pure power of the surviving `α`, so both right-hand sides
/// are scalar multiples of `∗h₂`.
pub fn phi_witt_relations(
    f: &InvariantForm,
    h2: &InvariantForm,
    h1: &InvariantForm,
    g: usize,
    k: u32,
) -> Result<PhiRelations> {
    if g < 2 || k % 2 == 1 || h1.r != 4 || h2.r != 2 * g || f.r != 2 * g + 2 {
        return Err(Error::PreconditionViolated(
            "relation needs f ∈ B_g^k, h₂ ∈ genus g−1, h₁ ∈ genus 1".into(),
        ));
    }
    let j = k / 2;
    let target = VarContext::branch(2 * g - 1);
    let lhs = |m: usize| -> Result<Polynomial> {
        let p = phi(&f.poly, m, 2 * g + 2, j, false)?;
        if p.is_zero() {
            Ok(Polynomial::zero(target))
        } else {
            star_poly(&p, (g as u32 - 1) * j)
        }
    };
    let s1 = star_poly(&h1.poly, h1.w)?;
    let s2 = star_poly(&h2.poly, h2.w)?;
    let sign = if j % 2 == 1 {
        Rational::from_int(-1)
    } else {
        Rational::ONE
    };
    let c23 = surviving_coefficient(&s1, 2, 3, j)?;
    let c13 = surviving_coefficient(&s1, 1, 3, j)?;
    let rhs1 = s2.scale(&(&sign * &c23));
    let rhs2 = s2.scale(&(&sign * &c13));
    Ok(PhiRelations {
        last_pair: lhs(2 * g + 1)? == rhs1,
        second_pair: lhs(2 * g)? == rhs2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::forms::{delta_pair, h_form, membership_sw};
    use crate::invariants::perm::subsets_of_size;
    use crate::Budget;

    #[test]
    fn phi_on_delta_pairs() {
        for t in subsets_of_size(6, 3) {
            let f = delta_pair(&t, 6);
            let tc: Vec<usize> = (1..=6).filter(|x| !t.contains(x)).collect();
            for m in 1..=6 {
                for n in m + 1..=6 {
                    let p = phi(&f, m, n, 1, false).unwrap();
                    let same_side =
                        (t.contains(&m) && t.contains(&n)) || (tc.contains(&m) && tc.contains(&n));
                    if same_side {
                        assert!(p.is_zero());
                    } else {
                        let (a, b) = if t.contains(&m) { (m, n) } else { (n, m) };
                        let ts: Vec<usize> = t.iter().copied().filter(|&x| x != a).collect();
                        let tcs: Vec<usize> = tc.iter().copied().filter(|&x| x != b).collect();
                        // reindex to 1..4
                        let re = |x: usize| x - (x > m) as usize - (x > n) as usize;
                        let ts: Vec<usize> = ts.into_iter().map(re).collect();
                        let tcs: Vec<usize> = tcs.into_iter().map(re).collect();
                        let c = VarContext::branch(4);
                        let expect = delta(&ts, c).mul(&delta(&tcs, c)).unwrap();
                        assert!(p == expect || p == expect.neg(), "T={t:?} m={m} n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn cusp_examples() {
        let h1 = h_form(1, &Budget::unlimited()).unwrap();
        assert_eq!(
            cusp_factor(&h1.poly, 1).unwrap(),
            Polynomial::one(VarContext::branch(4))
        );
        assert!(is_cusp(&h1.poly, 4).unwrap());
        let c = VarContext::branch(4);
        let b = delta(&[1, 2, 3, 4], c);
        assert!(is_cusp(&b.mul(&b).unwrap(), 6).unwrap());
        let uu = delta(&[1, 3], c).mul(&delta(&[2, 4], c)).unwrap();
        assert!(!is_cusp(&uu, 1).unwrap());
        let m = Polynomial::from_terms(c, vec![(vec![1, 1, 1, 1], Rational::ONE)]);
        assert!(matches!(cusp_factor(&m, 1), Err(Error::NotDivisible)));
        assert!(starred_phi_bar_vanishes(&h1.poly, 4).unwrap());
    }

    #[test]
    fn phi_relations_on_theta_null() {
        // f = (Δ_UΔ_U′)² ∈ B_2^4 with W_{1,1} f = h ⊗ h, h = (Δ_{13}Δ_{24})²
        let c6 = VarContext::branch(6);
        let f = delta(&u_set(2), c6)
            .mul(&delta(&u_prime_set(2), c6))
            .unwrap()
            .pow(2)
            .unwrap();
        let c4 = VarContext::branch(4);
        let h = delta(&[1, 3], c4)
            .mul(&delta(&[2, 4], c4))
            .unwrap()
            .pow(2)
            .unwrap();
        assert!(membership_sw(&f, 4, 6));
        let f = InvariantForm::new(f, 4).unwrap();
        let h = InvariantForm::new(h, 2).unwrap();
        assert!(crate::invariants::witt::witt_check(&f, &h, &h, 1, 1, 2).unwrap());
        let rel = phi_witt_relations(&f, &h, &h, 2, 4).unwrap();
        assert!(rel.last_pair && rel.second_pair);
    }
}
