use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;

use super::chars::{is_balanced, thomae_support, ThetaChar};
use super::subspace::{enumerate_subspaces, F2Subspace};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::invariants::InvariantForm;
use crate::polyring::{product_of_differences, Polynomial, Rational, VarContext};

fn pairs_within(t: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    t.iter()
        .enumerate()
        .flat_map(move |(k, &i)| t[k + 1..].iter().map(move |&j| (i.min(j), i.max(j))))
}

/// Image of `θ[η_{U⊕T}]⁴`:
/// `(−1)^{⌊(g+1)/2⌋} ∏_{i<j∈T}(a_i−a_j) ∏_{i<j∈T′}(a_i−a_j)`.
pub fn thomae4(t: &[usize], g: usize) -> Result<Polynomial> {
    let n = 2 * g + 2;
    let mut t = t.to_vec();
    t.sort_unstable();
    t.dedup();
    if t.len() != g + 1 || t.iter().any(|&i| i == 0 || i > n) {
        return Err(Error::PreconditionViolated(format!(
            "{t:?} is not a (g+1)-subset of B_{g}"
        )));
    }
    let tc: Vec<usize> = (1..=n).filter(|i| !t.contains(i)).collect();
    let factors: Vec<(usize, usize, u32)> = pairs_within(&t)
        .chain(pairs_within(&tc))
        .map(|(i, j)| (i, j, 1))
        .collect();
    let p = product_of_differences(VarContext::branch(n), &factors)?;
    Ok(if (g + 1) / 2 % 2 == 1 { p.neg() } else { p })
}

/// `ρ(θ[ζ]⁴)`; zero for unbalanced `ζ`.
pub fn thomae4_char(z: ThetaChar) -> Result<Polynomial> {
    let g = z.genus();
    if !is_balanced(z) {
        return Ok(Polynomial::zero(VarContext::branch(2 * g + 2)));
    }
    thomae4(&thomae_support(z), g)
}

/// Exponents `4m_{ij}/2^d` of `Q_V²` for `i < j`, where `m_{ij}` counts
/// the elements of `V` whose Thomae support puts `i` and `j` on the same
/// side. `None` unless `V` is isotropic with only balanced elements.
pub fn q_squared_exponents(v: &F2Subspace) -> Result<Option<Vec<(usize, usize, u32)>>> {
    if !v.is_isotropic() || !v.all_balanced() {
        return Ok(None);
    }
    let n = 2 * v.genus() + 2;
    let d = v.dim() as u32;
    let mut m = vec![vec![0u32; n + 1]; n + 1];
    for z in v.elements() {
        let t = thomae_support(z);
        let tc: Vec<usize> = (1..=n).filter(|i| !t.contains(i)).collect();
        for (i, j) in pairs_within(&t).chain(pairs_within(&tc)) {
            m[i][j] += 1;
        }
    }
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            let count = m[i][j];
            if (4 * count) % (1 << d) != 0 {
                return Err(Error::ExponentNotIntegral { count, dim: d });
            }
            let e = (4 * count) >> d;
            if e > 0 {
                out.push((i, j, e));
            }
        }
    }
    Ok(Some(out))
}

/// `Q_V² = ∏_{i<j}(a_i−a_j)^{4m_{ij}/2^d}`, zero unless `V` is isotropic
/// with only balanced elements.
pub fn q_squared(v: &F2Subspace) -> Result<Polynomial> {
    let ctx = VarContext::branch(2 * v.genus() + 2);
    match q_squared_exponents(v)? {
        None => Ok(Polynomial::zero(ctx)),
        Some(factors) => product_of_differences(ctx, &factors),
    }
}

/// `G̃^{(g)}_d = Σ_{dim V = d} Q_V²`.
pub fn g_tilde(g: usize, d: usize, budget: &Budget) -> Result<Polynomial> {
    let ctx = VarContext::branch(2 * g + 2);
    ctx.validate()?;
    let spaces = enumerate_subspaces(g, d);
    let chunk = spaces.len().div_ceil(rayon::current_num_threads()).max(1);
    spaces
        .par_chunks(chunk)
        .map(|part| -> Result<Polynomial> {
            let mut acc = Polynomial::zero(ctx);
            for v in part {
                let q = q_squared(v)?;
                if !q.is_zero() {
                    acc.add_assign(&q)?;
                    budget.check(&acc, "G̃")?;
                }
            }
            Ok(acc)
        })
        .try_reduce(
            || Polynomial::zero(ctx),
            |a, b| {
                let s = a.add(&b)?;
                budget.check(&s, "G̃")?;
                Ok(s)
            },
        )
}

/// Number of `V ⊆ F₂^{2g₁} ⊕ F₂^{2g₂}` of dimension `d` with fixed
/// projections of dimensions `d₁` and `d₂`.
pub fn n_count(d1: u32, d2: u32, d: u32) -> BigUint {
    if d1 > d || d2 > d || d > d1 + d2 {
        return BigUint::from(0u8);
    }
    let two = |e: u32| BigUint::from(1u8) << e;
    let mut num = BigUint::from(1u8);
    let mut den = BigUint::from(1u8);
    for j in 0..d1 + d2 - d {
        num *= (two(d1) - two(j)) * (two(d2) - two(j));
        den *= two(d1 + d2 - d) - two(j);
    }
    debug_assert!((&num % &den) == BigUint::from(0u8));
    num / den
}

/// `c_i = (−1)^i 2^{i(i−1)/2}`.
pub fn k_coefficient(i: u32) -> BigInt {
    let c = BigInt::from(1u8) << (i * i.saturating_sub(1) / 2);
    if i % 2 == 1 {
        -c
    } else {
        c
    }
}

/// `c_n c_m = Σ_i c_i N_{n,m;i}`.
pub fn key_identity_holds(n: u32, m: u32) -> bool {
    let rhs: BigInt = (0..=n + m)
        .map(|i| k_coefficient(i) * BigInt::from(n_count(n, m, i)))
        .sum();
    k_coefficient(n) * k_coefficient(m) == rhs
}

/// `K^{(g)} = 2^{−g} Σ_{i=0}^{g} (−1)^i 2^{i(i−1)/2} G̃^{(g)}_i`.
pub fn k_form(g: usize, budget: &Budget) -> Result<InvariantForm> {
    if g == 0 {
        return Err(Error::PreconditionViolated(
            "genus must be at least 1".into(),
        ));
    }
    let ctx = VarContext::branch(2 * g + 2);
    let mut acc = Polynomial::zero(ctx);
    for i in 0..=g {
        let gt = g_tilde(g, i, budget)?;
        let c = Rational::from_big(num_rational::BigRational::from_integer(k_coefficient(
            i as u32,
        )));
        acc.add_assign(&gt.scale(&c))?;
        budget.check(&acc, "K")?;
    }
    let k = acc.scale(&Rational::new(1, 1i64 << g));
    Ok(InvariantForm::new_unchecked(k, 4 * g as u32))
}

/// `K^{(g)}(a)`, evaluating each `Q_V²` at the point directly.
pub fn k_form_at(g: usize, a: &[Rational]) -> Result<Rational> {
    if g == 0 || a.len() != 2 * g + 2 {
        return Err(Error::LengthMismatch(a.len(), 2 * g + 2));
    }
    let mut total = Rational::ZERO;
    for i in 0..=g {
        let mut gt = Rational::ZERO;
        for v in enumerate_subspaces(g, i) {
            if let Some(factors) = q_squared_exponents(&v)? {
                let q = factors.iter().fold(Rational::ONE, |acc, &(p, q, e)| {
                    &acc * &(&a[p - 1] - &a[q - 1]).pow(e)
                });
                gt = &gt + &q;
            }
        }
        let c = Rational::from_big(num_rational::BigRational::from_integer(k_coefficient(
            i as u32,
        )));
        total = &total + &(&c * &gt);
    }
    Ok(&total * &Rational::new(1, 1i64 << g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{h_form, membership_b, perm};
    use crate::polyring::Var;
    use crate::thetaf2::chars::char_of_subset;

    fn b4() -> VarContext {
        VarContext::branch(4)
    }

    fn d(i: usize, j: usize) -> Polynomial {
        Polynomial::diff(b4(), Var::A(i), Var::A(j))
    }

    #[test]
    fn thomae_examples() {
        assert_eq!(
            thomae4(&[1, 3], 1).unwrap(),
            d(1, 3).mul(&d(2, 4)).unwrap().neg()
        );
        assert_eq!(
            thomae4(&[1, 2], 1).unwrap(),
            d(1, 2).mul(&d(3, 4)).unwrap().neg()
        );
        assert!(thomae4_char(ThetaChar::new(1, 1, 1)).unwrap().is_zero());
        // ζ = 0 ↔ T = U
        assert_eq!(
            thomae4_char(ThetaChar::zero(1)).unwrap(),
            thomae4(&[1, 3], 1).unwrap()
        );
    }

    #[test]
    fn q_squared_examples() {
        let q0 = q_squared(&F2Subspace::zero(1)).unwrap();
        assert_eq!(
            q0,
            d(1, 3)
                .pow(4)
                .unwrap()
                .mul(&d(2, 4).pow(4).unwrap())
                .unwrap()
        );
        let v = F2Subspace::span(1, &[char_of_subset(&[1, 2], 1)]);
        let expect = d(1, 3)
            .mul(&d(2, 4))
            .unwrap()
            .mul(&d(2, 3))
            .unwrap()
            .mul(&d(1, 4))
            .unwrap()
            .pow(2)
            .unwrap();
        assert_eq!(q_squared(&v).unwrap(), expect);
        let v = F2Subspace::span(1, &[char_of_subset(&[1, 3], 1)]);
        assert!(q_squared(&v).unwrap().is_zero());
    }

    #[test]
    fn q_squared_exponent_range() {
        for g in 1..=3 {
            for dim in 0..=g {
                for v in enumerate_subspaces(g, dim) {
                    for (_, _, e) in q_squared_exponents(&v).unwrap().unwrap_or_default() {
                        assert!(e <= 4 && e % 2 == 0);
                    }
                }
            }
        }
    }

    #[test]
    fn g_tilde_genus_one() {
        let b = Budget::unlimited();
        assert_eq!(
            g_tilde(1, 0, &b).unwrap(),
            q_squared(&F2Subspace::zero(1)).unwrap()
        );
        let v12 = F2Subspace::span(1, &[char_of_subset(&[1, 2], 1)]);
        let v14 = F2Subspace::span(1, &[char_of_subset(&[1, 4], 1)]);
        let expect = q_squared(&v12)
            .unwrap()
            .add(&q_squared(&v14).unwrap())
            .unwrap();
        assert_eq!(g_tilde(1, 1, &b).unwrap(), expect);
        assert!(g_tilde(1, 2, &b).unwrap().is_zero());
    }

    #[test]
    fn n_counts() {
        assert_eq!(n_count(0, 0, 0), BigUint::from(1u8));
        assert_eq!(n_count(1, 1, 2), BigUint::from(1u8));
        assert_eq!(n_count(2, 1, 2), BigUint::from(3u8));
        assert_eq!(n_count(1, 1, 1), BigUint::from(1u8));
        assert_eq!(n_count(2, 1, 4), BigUint::from(0u8));
        for n in 0..=4 {
            for m in 0..=4 {
                assert!(key_identity_holds(n, m), "n={n} m={m}");
            }
        }
    }

    #[test]
    fn n_count_brute_force() {
        // subspaces of F₂^a ⊕ F₂^b projecting onto the full factors
        for (a, b) in [(1usize, 1usize), (2, 1), (1, 2), (2, 2)] {
            let total = a + b;
            for dim in 0..=total {
                let mut count = 0u32;
                for v in enumerate_subspaces_flat(total, dim) {
                    let p1 = rank(&v.iter().map(|x| x & ((1 << a) - 1)).collect::<Vec<_>>());
                    let p2 = rank(&v.iter().map(|x| x >> a).collect::<Vec<_>>());
                    if p1 == a && p2 == b {
                        count += 1;
                    }
                }
                assert_eq!(
                    BigUint::from(count),
                    n_count(a as u32, b as u32, dim as u32),
                    "a={a} b={b} d={dim}"
                );
            }
        }
    }

    fn rank(v: &[u32]) -> usize {
        let mut rows: Vec<u32> = Vec::new();
        for &x in v {
            let mut x = x;
            for &r in &rows {
                x = x.min(x ^ r);
            }
            if x != 0 {
                rows.push(x);
                rows.sort_unstable_by(|a, b| b.cmp(a));
            }
        }
        rows.len()
    }

    /// Bases of all `dim`-subspaces of F₂^n, by distinct sorted element sets.
    fn enumerate_subspaces_flat(n: usize, dim: usize) -> Vec<Vec<u32>> {
        let mut seen = std::collections::BTreeSet::new();
        let mut out = Vec::new();
        let vecs: Vec<u32> = (1..1u32 << n).collect();
        let mut stack: Vec<(usize, Vec<u32>)> = vec![(0, Vec::new())];
        while let Some((start, basis)) = stack.pop() {
            if basis.len() == dim {
                let mut el: Vec<u32> = (0..1u32 << dim)
                    .map(|m| {
                        basis
                            .iter()
                            .enumerate()
                            .filter(|(k, _)| m >> k & 1 == 1)
                            .fold(0, |a, (_, &b)| a ^ b)
                    })
                    .collect();
                el.sort_unstable();
                if seen.insert(el) {
                    out.push(basis);
                }
                continue;
            }
            for (k, &x) in vecs.iter().enumerate().skip(start) {
                let mut b = basis.clone();
                b.push(x);
                if rank(&b) == b.len() {
                    stack.push((k + 1, b));
                }
            }
        }
        out
    }

    #[test]
    fn k_form_genus_one_and_two() {
        let b = Budget::unlimited();
        let k1 = k_form(1, &b).unwrap();
        assert_eq!(k1.poly, h_form(1, &b).unwrap().poly);
        let k2 = k_form(2, &b).unwrap();
        assert!(k2.poly.denominator_lcm() <= num_bigint::BigInt::from(4));
        assert!(membership_b(&k2.poly, 2, 8).unwrap());
        assert_eq!(k2.poly, h_form(2, &b).unwrap().poly);
    }

    #[test]
    fn k_form_at_matches_expansion() {
        let k = k_form(2, &Budget::unlimited()).unwrap().poly;
        let a: Vec<Rational> = (0..6)
            .map(|i| Rational::new(3 * i as i64 - 7, i as i64 + 2))
            .collect();
        assert_eq!(k_form_at(2, &a).unwrap(), k.eval_rational(&a).unwrap());
        let b: Vec<Rational> = (0..8)
            .map(|i| Rational::new(i * i + 3 * i - 5, 2))
            .collect();
        assert_eq!(
            k_form_at(3, &b).unwrap(),
            crate::invariants::h_form_at(3, &b).unwrap()
        );
    }

    #[test]
    fn g_tilde_is_theta_invariant() {
        let b = Budget::unlimited();
        for dim in 0..=2 {
            let gt = g_tilde(2, dim, &b).unwrap();
            for s in perm::s_u_generators(2) {
                assert_eq!(gt.permute_vars(&s).unwrap(), gt);
            }
        }
    }
}
