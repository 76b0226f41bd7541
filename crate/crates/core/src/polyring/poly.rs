use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use rustc_hash::FxHashMap;

use super::context::{Var, VarContext, MAX_VARS};
use super::monomial::{Monomial, MAX_EXP};
use super::rational::Rational;
use crate::error::{Error, Result};

pub type TermMap = FxHashMap<Monomial, Rational>;

/// Sparse polynomial with exact rational coefficients.
///
/// Terms live in an unordered map; no stored coefficient is zero. Ordering
/// is imposed only when a canonical view is needed (serialization, leading
/// terms, display).
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ctx: VarContext,
    terms: TermMap,
}

/// Products with more coefficient multiplications than this are split
/// across the rayon pool.
const PAR_MUL_THRESHOLD: usize = 1 << 16;

fn accumulate(map: &mut TermMap, m: Monomial, c: Rational) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        std::collections::hash_map::Entry::Occupied(mut e) => {
            *e.get_mut() += &c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        std::collections::hash_map::Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

fn binomial_row(n: u32) -> Vec<Rational> {
    let mut row = vec![num_bigint::BigInt::from(1)];
    for k in 0..n {
        let next = &row[k as usize] * (n - k) / (k + 1);
        row.push(next);
    }
    row.into_iter().map(Rational::from).collect()
}

impl Polynomial {
    pub fn zero(ctx: VarContext) -> Self {
        Polynomial {
            ctx,
            terms: TermMap::default(),
        }
    }

    pub fn constant(ctx: VarContext, c: Rational) -> Self {
        let mut p = Self::zero(ctx);
        if !c.is_zero() {
            p.terms.insert(Monomial::ONE, c);
        }
        p
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::constant(ctx, Rational::ONE)
    }

    /// The variable `v` as a polynomial. Panics if `v` is not in `ctx`.
    pub fn var(ctx: VarContext, v: Var) -> Self {
        let idx = ctx.index(v).expect("variable not in context");
        let mut p = Self::zero(ctx);
        p.terms.insert(Monomial::var(idx, 1), Rational::ONE);
        p
    }

    /// `u − v`.
    pub fn diff(ctx: VarContext, u: Var, v: Var) -> Self {
        let i = ctx.index(u).expect("variable not in context");
        let j = ctx.index(v).expect("variable not in context");
        let mut p = Self::zero(ctx);
        if i != j {
            p.terms.insert(Monomial::var(i, 1), Rational::ONE);
            p.terms.insert(Monomial::var(j, 1), Rational::from_int(-1));
        }
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, summing
    /// repeated monomials.
    pub fn from_terms<I>(ctx: VarContext, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut map = TermMap::default();
        for (exps, c) in terms {
            assert_eq!(exps.len(), ctx.nvars(), "exponent vector length");
            accumulate(&mut map, Monomial::from_exponents(&exps), c);
        }
        Polynomial { ctx, terms: map }
    }

    pub(crate) fn from_map(ctx: VarContext, mut terms: TermMap) -> Self {
        terms.retain(|_, c| !c.is_zero());
        Polynomial { ctx, terms }
    }

    pub fn ctx(&self) -> VarContext {
        self.ctx
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Constant term, or `None` if the polynomial is not constant.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::ZERO),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Terms in descending graded-lex order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<_> = self.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        v.sort_unstable_by(|a, b| b.0.grlex_cmp(a.0));
        v
    }

    /// Graded-lex leading term.
    pub fn leading_term(&self) -> Option<(Monomial, Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| a.0.grlex_cmp(*b.0))
            .map(|(m, c)| (*m, c.clone()))
    }

    fn check_ctx(&self, other: &Polynomial) -> Result<()> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch(
                self.ctx.to_string(),
                other.ctx.to_string(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let (big, small) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            accumulate(&mut terms, *m, c.clone());
        }
        Ok(Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    pub fn add_assign(&mut self, other: &Polynomial) -> Result<()> {
        self.check_ctx(other)?;
        for (m, c) in &other.terms {
            accumulate(&mut self.terms, *m, c.clone());
        }
        Ok(())
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, *m, -c);
        }
        Ok(Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&Rational::from_int(-1))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.ctx);
        }
        let terms = self.terms.iter().map(|(m, x)| (*m, x * c)).collect();
        Polynomial {
            ctx: self.ctx,
            terms,
        }
    }

    /// Per-variable maximum exponents; all zeros for the zero polynomial.
    pub fn max_degrees(&self) -> [u32; MAX_VARS] {
        let mut out = [0u32; MAX_VARS];
        let n = self.ctx.nvars();
        for m in self.terms.keys() {
            for (i, o) in out.iter_mut().enumerate().take(n) {
                *o = (*o).max(m.exp(i));
            }
        }
        out
    }

    /// Degree in the variable at position `idx`; `None` for zero.
    pub fn degree_in(&self, idx: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(idx)).max()
    }

    pub fn degree_in_var(&self, v: Var) -> Result<Option<u32>> {
        let idx = self.ctx.require(v)?;
        Ok(self.degree_in(idx))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    /// True for zero and for polynomials whose terms share one degree.
    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(|m| m.total_degree());
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(self.ctx));
        }
        let da = self.max_degrees();
        let db = other.max_degrees();
        if da.iter().zip(db.iter()).any(|(x, y)| x + y > MAX_EXP) {
            return Err(Error::ExponentOverflow(MAX_EXP));
        }
        let (outer, inner) = if self.len() >= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        let inner_terms: Vec<(Monomial, Rational)> =
            inner.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
        let work = outer.len().saturating_mul(inner.len());
        let threads = rayon::current_num_threads();
        let terms = if work > PAR_MUL_THRESHOLD && threads > 1 {
            let outer_terms: Vec<(Monomial, Rational)> =
                outer.terms.iter().map(|(m, c)| (*m, c.clone())).collect();
            let chunk = outer_terms.len().div_ceil(threads).max(1);
            outer_terms
                .par_chunks(chunk)
                .map(|part| {
                    let mut map = TermMap::default();
                    for (m1, c1) in part {
                        for (m2, c2) in &inner_terms {
                            accumulate(&mut map, m1.mul(*m2), c1 * c2);
                        }
                    }
                    map
                })
                .reduce(TermMap::default, |a, b| {
                    let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
                    for (m, c) in small {
                        accumulate(&mut big, m, c);
                    }
                    big
                })
        } else {
            let mut map = TermMap::with_capacity_and_hasher(outer.len() * 2, Default::default());
            for (m1, c1) in &outer.terms {
                for (m2, c2) in &inner_terms {
                    accumulate(&mut map, m1.mul(*m2), c1 * c2);
                }
            }
            map
        };
        Ok(Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    pub fn pow(&self, n: u32) -> Result<Polynomial> {
        let mut acc = Polynomial::one(self.ctx);
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Multiplies by the monomial `m` with coefficient `c`.
    pub fn mul_term(&self, m: Monomial, c: &Rational) -> Result<Polynomial> {
        let n = self.ctx.nvars();
        let md = self.max_degrees();
        if (0..n).any(|i| md[i] + m.exp(i) > MAX_EXP) {
            return Err(Error::ExponentOverflow(MAX_EXP));
        }
        if c.is_zero() {
            return Ok(Polynomial::zero(self.ctx));
        }
        let terms = self.terms.iter().map(|(k, x)| (k.mul(m), x * c)).collect();
        Ok(Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    /// Returns `h` with `h · divisor = self`, or `NotDivisible`.
    pub fn exact_div(&self, divisor: &Polynomial) -> Result<Polynomial> {
        self.check_ctx(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Polynomial::zero(self.ctx));
        }
        if divisor.len() == 1 {
            let (m, c) = divisor
                .terms
                .iter()
                .next()
                .map(|(m, c)| (*m, c.clone()))
                .unwrap();
            let inv = c.recip();
            let mut terms = TermMap::with_capacity_and_hasher(self.len(), Default::default());
            for (k, x) in &self.terms {
                let q = k.div(m).ok_or(Error::NotDivisible)?;
                terms.insert(q, x * &inv);
            }
            return Ok(Polynomial {
                ctx: self.ctx,
                terms,
            });
        }
        // cheap necessary condition on per-variable degrees
        let n = self.ctx.nvars();
        let (dp, dq) = (self.max_degrees(), divisor.max_degrees());
        if (0..n).any(|i| dq[i] > dp[i]) {
            return Err(Error::NotDivisible);
        }
        let (lm, lc) = divisor.leading_term().unwrap();
        let inv_lc = lc.recip();
        let div_terms: Vec<(Monomial, Rational)> = divisor
            .terms
            .iter()
            .filter(|(m, _)| **m != lm)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        let mut rem: BTreeMap<_, Rational> = self
            .terms
            .iter()
            .map(|(m, c)| (m.grlex_key(), c.clone()))
            .collect();
        let mut quot = TermMap::default();
        while let Some((key, c)) = rem.pop_last() {
            let qm = key.monomial().div(lm).ok_or(Error::NotDivisible)?;
            let qc = &c * &inv_lc;
            for (m, dc) in &div_terms {
                let k = qm.mul(*m).grlex_key();
                let delta = &qc * dc;
                match rem.entry(k) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        *e.get_mut() -= &delta;
                        if e.get().is_zero() {
                            e.remove();
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-delta);
                    }
                }
            }
            quot.insert(qm, qc);
        }
        Ok(Polynomial {
            ctx: self.ctx,
            terms: quot,
        })
    }

    /// Coefficient of `v^k`, as a polynomial in the context without `v`.
    pub fn coeff_of(&self, v: Var, k: u32) -> Result<Polynomial> {
        let idx = self.ctx.require(v)?;
        let ctx = self.ctx.without(v);
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(idx) == k)
            .map(|(m, c)| (m.with_exp(idx, 0).delete_var(idx), c.clone()))
            .collect();
        Ok(Polynomial { ctx, terms })
    }

    /// Substitutes `x_target ↦ x_target + sign · x_by` (positions in the
    /// current context) and expands.
    pub fn shift_var(&self, target: usize, by: usize, sign: i64) -> Result<Polynomial> {
        assert!(target != by);
        assert!(sign == 1 || sign == -1);
        let md = self.max_degrees();
        if md[target] + md[by] > MAX_EXP {
            return Err(Error::ExponentOverflow(MAX_EXP));
        }
        let rows: Vec<Vec<Rational>> = (0..=md[target])
            .map(|e| {
                let mut row = binomial_row(e);
                if sign < 0 {
                    for (k, c) in row.iter_mut().enumerate() {
                        if k % 2 == 1 {
                            *c = -&*c;
                        }
                    }
                }
                row
            })
            .collect();
        let mut out = TermMap::with_capacity_and_hasher(self.len() * 2, Default::default());
        for (m, c) in &self.terms {
            let e = m.exp(target);
            if e == 0 {
                accumulate(&mut out, *m, c.clone());
                continue;
            }
            let eb = m.exp(by);
            for (k, b) in rows[e as usize].iter().enumerate() {
                let k = k as u32;
                let nm = m.with_exp(target, e - k).with_exp(by, eb + k);
                accumulate(&mut out, nm, c * b);
            }
        }
        Ok(Polynomial {
            ctx: self.ctx,
            terms: out,
        })
    }

    /// Relabels variables into `ctx`: old position `i` goes to `map[i]`.
    /// Variables sent to the same target multiply; a variable mapped to
    /// `None` must not occur.
    pub fn remap(&self, ctx: VarContext, map: &[Option<usize>]) -> Result<Polynomial> {
        let n = self.ctx.nvars();
        assert_eq!(map.len(), n);
        ctx.validate()?;
        let md = self.max_degrees();
        let mut bound = [0u32; MAX_VARS];
        for i in 0..n {
            match map[i] {
                Some(j) => {
                    assert!(j < ctx.nvars());
                    bound[j] += md[i];
                }
                None if md[i] > 0 => {
                    return Err(Error::PreconditionViolated(format!(
                        "variable {:?} occurs but is dropped",
                        self.ctx.var_at(i)
                    )))
                }
                None => {}
            }
        }
        if bound.iter().any(|&b| b > MAX_EXP) {
            return Err(Error::ExponentOverflow(MAX_EXP));
        }
        let mut out = TermMap::with_capacity_and_hasher(self.len(), Default::default());
        for (m, c) in &self.terms {
            let mut nm = 0u128;
            for (i, target) in map.iter().enumerate() {
                if let Some(j) = target {
                    let e = m.exp(i);
                    if e > 0 {
                        nm += Monomial::var(*j, e).0;
                    }
                }
            }
            accumulate(&mut out, Monomial(nm), c.clone());
        }
        Ok(Polynomial { ctx, terms: out })
    }

    /// Moves the polynomial into a larger context, keeping each variable.
    pub fn embed(&self, ctx: VarContext) -> Result<Polynomial> {
        let map: Vec<Option<usize>> = (0..self.ctx.nvars())
            .map(|i| ctx.index(self.ctx.var_at(i)))
            .collect();
        self.remap(ctx, &map)
    }

    /// Sets the variable at position `idx` to zero (same context).
    pub fn set_zero(&self, idx: usize) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.exp(idx) == 0)
            .map(|(m, c)| (*m, c.clone()))
            .collect();
        Polynomial {
            ctx: self.ctx,
            terms,
        }
    }

    /// `f(a₁,…,a_{r₁}, α₁+t,…,α_{r₂}+t)` for `f` in `r₁+r₂` branch points.
    pub fn shift_right_block(&self, r1: usize, r2: usize) -> Result<Polynomial> {
        if self.ctx != VarContext::branch(r1 + r2) {
            return Err(Error::ContextMismatch(
                self.ctx.to_string(),
                VarContext::branch(r1 + r2).to_string(),
            ));
        }
        let ctx = VarContext::blocks(r1, r2).with_t();
        ctx.validate()?;
        // a_{r1+j} and α_j occupy the same position; t is appended
        let mut p = Polynomial {
            ctx,
            terms: self.terms.clone(),
        };
        let t = ctx.index(Var::T).unwrap();
        for j in 1..=r2 {
            p = p.shift_var(ctx.index(Var::Alpha(j)).unwrap(), t, 1)?;
        }
        Ok(p)
    }

    /// `σ(f) = f(a_{σ(1)},…,a_{σ(r)})`; `sigma[i-1] = σ(i)`, 1-based.
    pub fn permute_vars(&self, sigma: &[usize]) -> Result<Polynomial> {
        let r = self.ctx.r;
        if sigma.len() != r {
            return Err(Error::PreconditionViolated(format!(
                "permutation of length {} for {r} branch points",
                sigma.len()
            )));
        }
        let mut seen = vec![false; r];
        for &s in sigma {
            if s == 0 || s > r || seen[s - 1] {
                return Err(Error::PreconditionViolated(format!(
                    "{sigma:?} is not a permutation"
                )));
            }
            seen[s - 1] = true;
        }
        let mut branch_mask = 0u128;
        for i in 0..r {
            branch_mask |= Monomial::var(i, 0xff).0;
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = m.0 & !branch_mask;
                for (i, &s) in sigma.iter().enumerate() {
                    let e = m.exp(i);
                    if e > 0 {
                        nm |= Monomial::var(s - 1, e).0;
                    }
                }
                (Monomial(nm), c.clone())
            })
            .collect();
        Ok(Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    /// Inversion `z ↦ −1/z` with cocycle: sends `c·a^e` to
    /// `c·(−1)^{|e|}·(−1)^{rw}·a^{w−e}`.
    pub fn reversal(&self, w: u32) -> Result<Polynomial> {
        if self.ctx.has_aux() {
            return Err(Error::PreconditionViolated(
                "reversal needs branch points only".into(),
            ));
        }
        let r = self.ctx.r;
        let md = self.max_degrees();
        if let Some(&d) = md[..r].iter().find(|&&d| d > w) {
            return Err(Error::DegreeExceedsWeight {
                degree: d,
                weight: w,
            });
        }
        let global_odd = (r as u64 * w as u64) % 2 == 1;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut nm = Monomial::ONE;
                for i in 0..r {
                    nm = nm.with_exp(i, w - m.exp(i));
                }
                let odd = (m.total_degree() % 2 == 1) ^ global_odd;
                (nm, if odd { -c } else { c.clone() })
            })
            .collect();
        Ok(Polynomial {
            ctx: self.ctx,
            terms,
        })
    }

    /// `Σ_i ∂f/∂a_i`; zero exactly when `f` is invariant under the common
    /// translation `a_i ↦ a_i + s`.
    pub fn translation_derivative(&self) -> Polynomial {
        let mut out = TermMap::default();
        for (m, c) in &self.terms {
            for i in 0..self.ctx.r {
                let e = m.exp(i);
                if e > 0 {
                    accumulate(
                        &mut out,
                        m.with_exp(i, e - 1),
                        c * &Rational::from_int(e as i64),
                    );
                }
            }
        }
        Polynomial {
            ctx: self.ctx,
            terms: out,
        }
    }

    pub fn eval_rational(&self, point: &[Rational]) -> Result<Rational> {
        let n = self.ctx.nvars();
        if point.len() != n {
            return Err(Error::PreconditionViolated(format!(
                "point has {} coordinates, context has {n} variables",
                point.len()
            )));
        }
        let md = self.max_degrees();
        let powers: Vec<Vec<Rational>> = (0..n)
            .map(|i| {
                let mut v = vec![Rational::ONE];
                for k in 0..md[i] as usize {
                    let next = &v[k] * &point[i];
                    v.push(next);
                }
                v
            })
            .collect();
        let mut acc = Rational::ZERO;
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, pw) in powers.iter().enumerate() {
                let e = m.exp(i) as usize;
                if e > 0 {
                    term = &term * &pw[e];
                }
            }
            acc += &term;
        }
        Ok(acc)
    }

    /// Partial evaluation: substitutes rational values for the variables
    /// listed in `assign` (positions), keeping the context.
    pub fn substitute_values(&self, assign: &[(usize, Rational)]) -> Polynomial {
        let mut out = TermMap::default();
        for (m, c) in &self.terms {
            let mut nm = *m;
            let mut coeff = c.clone();
            for (idx, val) in assign {
                let e = m.exp(*idx);
                if e > 0 {
                    coeff = &coeff * &val.pow(e);
                    nm = nm.with_exp(*idx, 0);
                }
            }
            accumulate(&mut out, nm, coeff);
        }
        Polynomial {
            ctx: self.ctx,
            terms: out,
        }
    }

    /// Least common denominator of the coefficients.
    pub fn denominator_lcm(&self) -> num_bigint::BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(num_bigint::BigInt::from(1), |acc, c| acc.lcm(&c.denom()))
    }

    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

/// Product of `(a_i − a_j)^e` over the listed `(i, j, e)`, branch indices
/// 1-based.
pub fn product_of_differences(
    ctx: VarContext,
    factors: &[(usize, usize, u32)],
) -> Result<Polynomial> {
    let mut p = Polynomial::one(ctx);
    for &(i, j, e) in factors {
        let lin = Polynomial::diff(ctx, Var::A(i), Var::A(j));
        for _ in 0..e {
            p = p.mul(&lin)?;
        }
    }
    Ok(p)
}

/// Sum of polynomials in one context.
pub fn sum<'a, I>(ctx: VarContext, parts: I) -> Result<Polynomial>
where
    I: IntoIterator<Item = &'a Polynomial>,
{
    let mut acc = Polynomial::zero(ctx);
    for p in parts {
        acc.add_assign(p)?;
    }
    Ok(acc)
}

fn var_name(v: Var) -> String {
    match v {
        Var::A(i) => format!("a{i}"),
        Var::Alpha(j) => format!("alpha{j}"),
        Var::T => "t".into(),
        Var::X => "x".into(),
        Var::Y => "y".into(),
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let n = self.ctx.nvars();
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.signum() < 0;
            let abs = if neg { -&c } else { c };
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors = Vec::new();
            for i in 0..n {
                match m.exp(i) {
                    0 => {}
                    1 => factors.push(var_name(self.ctx.var_at(i))),
                    e => factors.push(format!("{}^{e}", var_name(self.ctx.var_at(i)))),
                }
            }
            let coeff = if abs.is_integer() {
                abs.numer().to_string()
            } else {
                abs.to_string()
            };
            if factors.is_empty() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{coeff}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.ctx, self)
    }
}
