use crate::error::{Error, Result};
use crate::polyring::{Polynomial, Rational, Var, VarContext};

/// `Coeff(t^{3w}, f(a₁,…,a_{r−3}, t, t, t))`, a polynomial in `r−3`
/// branch points.
pub fn triple_collapse(f: &Polynomial, w: u32, r: usize) -> Result<Polynomial> {
    if r < 4 || f.ctx() != VarContext::branch(r) {
        return Err(Error::PreconditionViolated(format!(
            "triple collapse needs r ≥ 4, got {}",
            f.ctx()
        )));
    }
    let ctx = VarContext::branch(r - 3).with_t();
    let t = ctx.index(Var::T).unwrap();
    let map: Vec<Option<usize>> = (0..r)
        .map(|i| Some(if i < r - 3 { i } else { t }))
        .collect();
    f.remap(ctx, &map)?.coeff_of(Var::T, 3 * w)
}

/// Compares both sides of
/// `f(a₁,…,a_{r−3},u,u,u) = ∏(u−a_i)^w · C(1/(u−a₁),…,1/(u−a_{r−3}))`
/// where `C` is the triple collapse, at the point `(a, u)`.
pub fn collapse_identity_at(f: &Polynomial, w: u32, a: &[Rational], u: &Rational) -> Result<bool> {
    let r = f.ctx().r;
    if a.len() + 3 != r {
        return Err(Error::LengthMismatch(a.len() + 3, r));
    }
    if a.iter().any(|x| x == u) {
        return Err(Error::PreconditionViolated(
            "u must differ from every a_i".into(),
        ));
    }
    let c = triple_collapse(f, w, r)?;
    let mut point = a.to_vec();
    point.extend([u.clone(), u.clone(), u.clone()]);
    let lhs = f.eval_rational(&point)?;
    let mut prefactor = Rational::ONE;
    let mut inv = Vec::with_capacity(a.len());
    for x in a {
        let d = u - x;
        prefactor = &prefactor * &d.pow(w);
        inv.push(d.recip());
    }
    let rhs = &prefactor * &c.eval_rational(&inv)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::forms::delta;
    use crate::polyring::product_of_differences;

    #[test]
    fn collapse_examples() {
        let c = VarContext::branch(4);
        let p = Polynomial::diff(c, Var::A(1), Var::A(3))
            .mul(&Polynomial::diff(c, Var::A(2), Var::A(4)))
            .unwrap();
        assert!(triple_collapse(&p, 1, 4).unwrap().is_zero());

        // complete bipartite product between {1,2,3} and {4,5,6}: w = 3, C = −1
        let factors: Vec<(usize, usize, u32)> = (1..=3)
            .flat_map(|i| (4..=6).map(move |j| (i, j, 1)))
            .collect();
        let f = product_of_differences(VarContext::branch(6), &factors).unwrap();
        let col = triple_collapse(&f, 3, 6).unwrap();
        assert_eq!(
            col,
            Polynomial::constant(VarContext::branch(3), Rational::from_int(-1))
        );
        let a = [
            Rational::from_int(2),
            Rational::new(-1, 3),
            Rational::from_int(7),
        ];
        assert!(collapse_identity_at(&f, 3, &a, &Rational::new(5, 2)).unwrap());

        let d = delta(&[1, 2, 3, 4, 5, 6], VarContext::branch(6));
        let d2 = d.mul(&d).unwrap();
        assert!(triple_collapse(&d2, 10, 6).unwrap().is_zero());
        assert!(collapse_identity_at(&d2, 10, &a, &Rational::new(5, 2)).unwrap());
    }
}
