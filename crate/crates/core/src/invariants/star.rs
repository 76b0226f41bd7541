use super::forms::InvariantForm;
use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Var, VarContext};

/// `∗f`: the coefficient of `a_r^w`, a polynomial in `a₁..a_{r−1}`.
pub fn star(f: &InvariantForm) -> Result<Polynomial> {
    star_poly(&f.poly, f.w)
}

/// `star` on a bare polynomial of weight `w`.
pub fn star_poly(f: &Polynomial, w: u32) -> Result<Polynomial> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ctx = f.ctx();
    if ctx.has_aux() || ctx.r == 0 {
        return Err(Error::PreconditionViolated(
            "star needs branch points only".into(),
        ));
    }
    let top = f.degree_in(ctx.r - 1).unwrap_or(0);
    if top != w {
        return Err(Error::UnexpectedTopDegree {
            found: top,
            expected: w,
        });
    }
    f.coeff_of(Var::A(ctx.r), w)
}

/// Inverse of the star map.
///
/// With `∗f = Σ c_e b^e` the form is recovered as
/// `f = Σ c_e ∏_{i<r} (a_r − a_i)^{w − e_i}`: flip exponents, then
/// substitute `b_i = a_r − a_i`.
pub fn unstar(fs: &Polynomial, w: u32, r: usize) -> Result<InvariantForm> {
    let ctx_in = VarContext::branch(r - 1);
    if fs.ctx() != ctx_in {
        return Err(Error::ContextMismatch(
            fs.ctx().to_string(),
            ctx_in.to_string(),
        ));
    }
    if !fs.translation_derivative().is_zero() {
        return Err(Error::NotTranslationInvariant);
    }
    let md = fs.max_degrees();
    if let Some(&d) = md[..r - 1].iter().find(|&&d| d > w) {
        return Err(Error::DegreeExceedsWeight {
            degree: d,
            weight: w,
        });
    }
    let ctx = VarContext::branch(r);
    // G(c) = Σ c_e (−1)^{|w−e|} c^{w−e}, so that G(a_i − a_r) = Σ c_e ∏(a_r − a_i)^{w−e_i}
    let mut terms = Vec::with_capacity(fs.len());
    for (m, c) in fs.terms() {
        let mut exps = vec![0u32; r];
        let mut flips = 0u32;
        for (i, e) in exps.iter_mut().enumerate().take(r - 1) {
            *e = w - m.exp(i);
            flips += *e;
        }
        let coeff = if flips % 2 == 1 { -c } else { c.clone() };
        terms.push((exps, coeff));
    }
    let mut f = Polynomial::from_terms(ctx, terms);
    for i in 0..r - 1 {
        f = f.shift_var(i, r - 1, -1)?;
    }
    let form = InvariantForm::new_unchecked(f, w);
    if form.poly.is_zero() || star(&form)? != *fs {
        return Err(Error::ReconstructionMismatch);
    }
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::forms::{delta, enumerate_alternating, h_form, psi, AltSequence};
    use crate::polyring::Rational;
    use crate::Budget;

    #[test]
    fn star_of_discriminant() {
        for r in 2..=6 {
            let full: Vec<usize> = (1..=r).collect();
            let d = InvariantForm::new(delta(&full, VarContext::branch(r)), r as u32 - 1).unwrap();
            assert_eq!(
                star(&d).unwrap(),
                delta(&full[..r - 1], VarContext::branch(r - 1))
            );
            assert_eq!(unstar(&star(&d).unwrap(), r as u32 - 1, r).unwrap(), d);
        }
    }

    #[test]
    fn star_of_psi() {
        let e = AltSequence::new(vec![1, 2, 3, 4]).unwrap();
        let es = AltSequence::new(vec![1, 2, 3]).unwrap();
        assert_eq!(star_poly(&psi(&e, true), 2).unwrap(), psi(&es, false).neg());
    }

    #[test]
    fn star_of_h1() {
        let h = h_form(1, &Budget::unlimited()).unwrap();
        let c3 = VarContext::branch(3);
        let d = delta(&[1, 2, 3], c3);
        let mut sum = Polynomial::zero(c3);
        for e in enumerate_alternating(3) {
            sum = sum
                .add(&d.mul(&d).unwrap().exact_div(&psi(&e, false)).unwrap())
                .unwrap();
        }
        assert_eq!(star(&h).unwrap(), sum.scale(&Rational::new(1, 2)));
        assert_eq!(unstar(&star(&h).unwrap(), 4, 4).unwrap(), h);
    }

    #[test]
    fn trivial_and_rejected() {
        let one = Polynomial::one(VarContext::branch(3));
        assert_eq!(
            unstar(&one, 0, 4).unwrap().poly,
            Polynomial::one(VarContext::branch(4))
        );
        let a1 = Polynomial::var(VarContext::branch(3), Var::A(1));
        assert!(matches!(
            unstar(&a1, 1, 4),
            Err(Error::NotTranslationInvariant)
        ));
        let z = InvariantForm::new_unchecked(Polynomial::zero(VarContext::branch(4)), 1);
        assert!(matches!(star(&z), Err(Error::ZeroPolynomial)));
        let d = delta(&[1, 2, 3, 4], VarContext::branch(4));
        assert!(matches!(
            star_poly(&d, 2),
            Err(Error::UnexpectedTopDegree {
                found: 3,
                expected: 2
            })
        ));
    }
}
