use rayon::prelude::*;

use super::perm::{self, Perm};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::polyring::{product_of_differences, Polynomial, Rational, Var, VarContext};

/// `Δ_T = ∏_{i>j ∈ T} (a_i − a_j)`.
pub fn delta(t: &[usize], ctx: VarContext) -> Polynomial {
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    let mut factors = Vec::new();
    for (x, &i) in sorted.iter().enumerate() {
        for &j in &sorted[..x] {
            factors.push((i, j, 1));
        }
    }
    product_of_differences(ctx, &factors).expect("degree bound")
}

/// `Δ_T · Δ_{T′}` with `T′` the complement in `{1..r}`.
pub fn delta_pair(t: &[usize], r: usize) -> Polynomial {
    let ctx = VarContext::branch(r);
    let comp: Vec<usize> = (1..=r).filter(|x| !t.contains(x)).collect();
    delta(t, ctx).mul(&delta(&comp, ctx)).expect("same context")
}

/// A permutation of `1..r` alternating odd and even, starting odd.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AltSequence(Vec<usize>);

impl AltSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        let r = entries.len();
        let mut seen = vec![false; r + 1];
        for (pos, &e) in entries.iter().enumerate() {
            if e == 0 || e > r || seen[e] || e % 2 != (pos + 1) % 2 {
                return Err(Error::PreconditionViolated(format!(
                    "{entries:?} is not an alternating sequence"
                )));
            }
            seen[e] = true;
        }
        Ok(AltSequence(entries))
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The permutation `k ↦ e_k`, so that `σ(ψ_{id}) = ψ_e`.
    pub fn as_perm(&self) -> Perm {
        self.0.clone()
    }
}

/// Every alternating sequence of length `r`, lexicographically sorted.
///
/// For even `r = 2g+2` there are `((g+1)!)²`. Odd `r` is accepted as
/// well, giving the sets `E_{2g+1}` that appear in starred forms.
pub fn enumerate_alternating(r: usize) -> Vec<AltSequence> {
    let odds: Vec<usize> = (1..=r).filter(|x| x % 2 == 1).collect();
    let evens: Vec<usize> = (1..=r).filter(|x| x % 2 == 0).collect();
    let mut out = Vec::new();
    for po in perm::permutations_of(&odds) {
        for pe in perm::permutations_of(&evens) {
            let seq: Vec<usize> = (0..r)
                .map(|i| if i % 2 == 0 { po[i / 2] } else { pe[i / 2] })
                .collect();
            out.push(AltSequence(seq));
        }
    }
    out.sort();
    out
}

/// `ψ′_e = ∏_{i<r}(a_{e_i} − a_{e_{i+1}})`, and with `closed` the extra
/// factor `(a_{e_r} − a_{e_1})` giving `ψ_e`.
pub fn psi(e: &AltSequence, closed: bool) -> Polynomial {
    let s = e.entries();
    let r = s.len();
    let ctx = VarContext::branch(r);
    let mut factors: Vec<(usize, usize, u32)> = s.windows(2).map(|w| (w[0], w[1], 1)).collect();
    if closed && r > 1 {
        factors.push((s[r - 1], s[0], 1));
    }
    product_of_differences(ctx, &factors).expect("degree bound")
}

/// A polynomial known to lie in `S_w(r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantForm {
    pub poly: Polynomial,
    pub r: usize,
    pub w: u32,
}

impl InvariantForm {
    /// Wraps `poly` after checking membership in `S_w(r)`.
    pub fn new(poly: Polynomial, w: u32) -> Result<Self> {
        let r = poly.ctx().r;
        if !membership_sw(&poly, w, r) {
            return Err(Error::PreconditionViolated(format!(
                "polynomial is not in S_{w}({r})"
            )));
        }
        Ok(InvariantForm { poly, r, w })
    }

    /// Wraps without validation; for forms whose membership is already
    /// established.
    pub fn new_unchecked(poly: Polynomial, w: u32) -> Self {
        let r = poly.ctx().r;
        InvariantForm { poly, r, w }
    }
}

/// Membership in `S_w(r)`, tested on generators of `SL₂`: homogeneity of
/// degree `wr/2` (dilations), degree exactly `w` in every variable,
/// vanishing translation derivative, and invariance under `reversal`.
pub fn membership_sw(f: &Polynomial, w: u32, r: usize) -> bool {
    if f.is_zero() || f.ctx() != VarContext::branch(r) {
        return false;
    }
    let wr = w as usize * r;
    if wr % 2 == 1 {
        return false;
    }
    if !f.is_homogeneous() || f.total_degree() != Some((wr / 2) as u32) {
        return false;
    }
    if (0..r).any(|i| f.degree_in(i) != Some(w)) {
        return false;
    }
    if !f.translation_derivative().is_zero() {
        return false;
    }
    matches!(f.reversal(w), Ok(ref p) if p == f)
}

/// `Δ_{B_g}/ψ_{id}` for the identity sequence: the product of the
/// differences not used by `ψ_{id}`, with the sign of the used ones.
fn delta_over_psi_identity(r: usize) -> Polynomial {
    let ctx = VarContext::branch(r);
    let in_cycle = |i: usize, j: usize| j == i + 1 || (i == 1 && j == r);
    let mut factors = Vec::new();
    for i in 1..=r {
        for j in i + 1..=r {
            if !in_cycle(i, j) {
                factors.push((j, i, 1));
            }
        }
    }
    // ψ_id has r−1 factors (a_k − a_{k+1}) = −(a_{k+1} − a_k) and the
    // closing factor (a_r − a_1) which matches Δ's orientation.
    let p = product_of_differences(ctx, &factors).expect("degree bound");
    if (r - 1) % 2 == 1 {
        p.neg()
    } else {
        p
    }
}

/// `H_g = −1/(2^g (g+1)) · Δ_{B_g}² · Σ_{e∈E_{2g+2}} 1/ψ_e`.
///
/// Computed as `Δ · Σ_e Δ/ψ_e`. Each `Δ/ψ_e` is the relabeling
/// `sgn(σ_e) · σ_e(Δ/ψ_id)` of one fixed polynomial, so the sum costs one
/// relabel per sequence; the product with `Δ` is then taken one linear
/// factor at a time.
pub fn h_form(g: usize, budget: &Budget) -> Result<InvariantForm> {
    if g == 0 {
        return Err(Error::PreconditionViolated(
            "genus must be at least 1".into(),
        ));
    }
    let r = 2 * g + 2;
    let ctx = VarContext::branch(r);
    ctx.validate()?;
    let base = delta_over_psi_identity(r);
    budget.check(&base, "Δ/ψ")?;
    let seqs = enumerate_alternating(r);
    let chunk = seqs.len().div_ceil(rayon::current_num_threads()).max(1);
    let sum = seqs
        .par_chunks(chunk)
        .map(|part| -> Result<Polynomial> {
            let mut acc = Polynomial::zero(ctx);
            for e in part {
                let sigma = e.as_perm();
                let term = base.permute_vars(&sigma)?;
                if perm::sign(&sigma) < 0 {
                    acc = acc.sub(&term)?;
                } else {
                    acc.add_assign(&term)?;
                }
                budget.check(&acc, "Σ Δ/ψ_e")?;
            }
            Ok(acc)
        })
        .try_reduce(|| Polynomial::zero(ctx), |a, b| a.add(&b))?;
    budget.check(&sum, "Σ Δ/ψ_e")?;
    let mut acc = sum;
    for i in 1..=r {
        for j in 1..i {
            acc = acc.mul(&Polynomial::diff(ctx, Var::A(i), Var::A(j)))?;
            budget.check(&acc, "H_g")?;
        }
    }
    let scale = Rational::new(-1, (1i64 << g) * (g as i64 + 1));
    let h = acc.scale(&scale);
    Ok(InvariantForm::new_unchecked(h, 4 * g as u32))
}

/// `H_g(a)` at a point with distinct coordinates, evaluated from the
/// defining sum without expanding any polynomial.
pub fn h_form_at(g: usize, a: &[Rational]) -> Result<Rational> {
    let r = 2 * g + 2;
    if g == 0 || a.len() != r {
        return Err(Error::LengthMismatch(a.len(), r));
    }
    let mut disc = Rational::ONE;
    for i in 0..r {
        for j in 0..i {
            let d = &a[i] - &a[j];
            if d.is_zero() {
                return Err(Error::PreconditionViolated(
                    "coordinates must be distinct".into(),
                ));
            }
            disc = &disc * &d;
        }
    }
    let mut total = Rational::ZERO;
    for e in enumerate_alternating(r) {
        let s = e.entries();
        let mut psi_e = Rational::ONE;
        for k in 0..r {
            psi_e = &psi_e * &(&a[s[k] - 1] - &a[s[(k + 1) % r] - 1]);
        }
        total = &total + &psi_e.recip();
    }
    let scale = Rational::new(-1, (1i64 << g) * (g as i64 + 1));
    Ok(&(&scale * &(&disc * &disc)) * &total)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_examples() {
        let c = VarContext::branch(3);
        assert_eq!(delta(&[1, 2], c), Polynomial::diff(c, Var::A(2), Var::A(1)));
        assert_eq!(delta(&[1], c), Polynomial::one(c));
        let d = Polynomial::diff(c, Var::A(2), Var::A(1))
            .mul(&Polynomial::diff(c, Var::A(3), Var::A(1)))
            .unwrap()
            .mul(&Polynomial::diff(c, Var::A(3), Var::A(2)))
            .unwrap();
        assert_eq!(delta(&[1, 2, 3], c), d);
    }

    #[test]
    fn alternating_sequences() {
        let four: Vec<Vec<usize>> = enumerate_alternating(4)
            .iter()
            .map(|e| e.entries().to_vec())
            .collect();
        assert_eq!(
            four,
            vec![
                vec![1, 2, 3, 4],
                vec![1, 4, 3, 2],
                vec![3, 2, 1, 4],
                vec![3, 4, 1, 2]
            ]
        );
        assert_eq!(enumerate_alternating(6).len(), 36);
        assert_eq!(enumerate_alternating(8).len(), 576);
        assert_eq!(enumerate_alternating(2).len(), 1);
        assert_eq!(enumerate_alternating(3).len(), 2);
        assert!(AltSequence::new(vec![2, 1, 3, 4]).is_err());
    }

    #[test]
    fn psi_rotation_invariant() {
        let e = AltSequence::new(vec![1, 4, 3, 6, 5, 2]).unwrap();
        let rot = AltSequence::new(vec![3, 6, 5, 2, 1, 4]).unwrap();
        assert_eq!(psi(&e, true), psi(&rot, true));
        assert_ne!(psi(&e, false), psi(&rot, false));
    }

    #[test]
    fn delta_over_psi_matches_division() {
        for r in [4, 6] {
            let ctx = VarContext::branch(r);
            let d = delta(&(1..=r).collect::<Vec<_>>(), ctx);
            let id = AltSequence::new((1..=r).collect()).unwrap();
            assert_eq!(
                d.exact_div(&psi(&id, true)).unwrap(),
                delta_over_psi_identity(r)
            );
        }
    }

    #[test]
    fn genus_one_closed_form() {
        let h = h_form(1, &Budget::unlimited()).unwrap();
        let c = VarContext::branch(4);
        let expect = delta(&[1, 2, 3, 4], c)
            .mul(&delta(&[1, 3], c))
            .unwrap()
            .mul(&delta(&[2, 4], c))
            .unwrap();
        assert_eq!(h.poly, expect);
        assert!(membership_sw(&h.poly, 4, 4));
    }

    #[test]
    fn pointwise_evaluation_matches_expansion() {
        let b = Budget::unlimited();
        for g in 1..=2 {
            let h = h_form(g, &b).unwrap().poly;
            let a: Vec<Rational> = (0..2 * g + 2)
                .map(|i| Rational::new((i * i) as i64 + 2, i as i64 + 3))
                .collect();
            assert_eq!(h_form_at(g, &a).unwrap(), h.eval_rational(&a).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        assert!(matches!(
            h_form(2, &Budget::terms(100)),
            Err(Error::ResourceBudgetExceeded { .. })
        ));
    }

    #[test]
    fn membership_examples() {
        let c = VarContext::branch(4);
        let b = delta(&[1, 2, 3, 4], c);
        assert!(membership_sw(&b.mul(&b).unwrap(), 6, 4));
        assert!(!membership_sw(
            &Polynomial::diff(c, Var::A(1), Var::A(2)),
            1,
            4
        ));
        // a sum of products in which every variable occurs once
        let d12 = Polynomial::diff(c, Var::A(1), Var::A(2));
        let d34 = Polynomial::diff(c, Var::A(3), Var::A(4));
        let d13 = Polynomial::diff(c, Var::A(1), Var::A(3));
        let d24 = Polynomial::diff(c, Var::A(2), Var::A(4));
        let p = d12.mul(&d34).unwrap().add(&d13.mul(&d24).unwrap()).unwrap();
        assert!(membership_sw(&p, 1, 4));
    }
}
