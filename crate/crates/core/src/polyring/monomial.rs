use std::cmp::Ordering;

use super::context::MAX_VARS;

/// Largest exponent a single variable may carry.
pub const MAX_EXP: u32 = u8::MAX as u32;

/// Exponent vector packed one byte per variable, variable 0 in the most
/// significant byte. With that layout integer order on the packed word is
/// lexicographic order on the exponent vector, and monomial multiplication
/// is integer addition as long as no byte overflows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub u128);

#[inline]
fn shift(idx: usize) -> u32 {
    debug_assert!(idx < MAX_VARS);
    ((MAX_VARS - 1 - idx) * 8) as u32
}

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        assert!(exps.len() <= MAX_VARS);
        let mut m = 0u128;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXP, "exponent {e} too large");
            m |= (e as u128) << shift(i);
        }
        Monomial(m)
    }

    pub fn var(idx: usize, e: u32) -> Monomial {
        assert!(e <= MAX_EXP);
        Monomial((e as u128) << shift(idx))
    }

    #[inline]
    pub fn exp(self, idx: usize) -> u32 {
        ((self.0 >> shift(idx)) & 0xff) as u32
    }

    #[inline]
    pub fn with_exp(self, idx: usize, e: u32) -> Monomial {
        debug_assert!(e <= MAX_EXP);
        let s = shift(idx);
        Monomial((self.0 & !(0xffu128 << s)) | ((e as u128) << s))
    }

    pub fn exponents(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exp(i)).collect()
    }

    #[inline]
    pub fn total_degree(self) -> u32 {
        let mut x = self.0;
        let mut s = 0u32;
        while x != 0 {
            s += (x & 0xff) as u32;
            x >>= 8;
        }
        s
    }

    /// Product; the caller guarantees no per-variable overflow.
    #[inline]
    pub fn mul(self, other: Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }

    /// Quotient `self / other`, if `other` divides `self`.
    pub fn div(self, other: Monomial) -> Option<Monomial> {
        if self.divisible_by(other) {
            Some(Monomial(self.0 - other.0))
        } else {
            None
        }
    }

    pub fn divisible_by(self, other: Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exp(i) >= other.exp(i))
    }

    /// Graded lexicographic comparison: total degree, then lex with the
    /// first variable most significant.
    pub fn grlex_cmp(self, other: Monomial) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then(self.0.cmp(&other.0))
    }

    pub fn grlex_key(self) -> GrlexKey {
        GrlexKey(self.total_degree(), self.0)
    }

    /// Removes variable `idx` (which must have exponent zero or be
    /// discarded by the caller) and shifts later variables down.
    pub fn delete_var(self, idx: usize) -> Monomial {
        let s = shift(idx);
        // bytes above idx stay, bytes below shift up one position
        let high_mask: u128 = if s + 8 >= 128 { 0 } else { !0u128 << (s + 8) };
        let low_mask: u128 = if s == 0 { 0 } else { (1u128 << s) - 1 };
        let high = self.0 & high_mask;
        let low = self.0 & low_mask;
        Monomial(high | (low << 8))
    }

    /// Inserts a zero-exponent variable at position `idx`.
    pub fn insert_var(self, idx: usize) -> Monomial {
        let s = shift(idx);
        let keep_mask: u128 = if s + 8 >= 128 { 0 } else { !0u128 << (s + 8) };
        let high = self.0 & keep_mask;
        let rest = (self.0 & !keep_mask) >> 8;
        Monomial(high | rest)
    }
}

/// Sort key realising graded lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GrlexKey(pub u32, pub u128);

impl GrlexKey {
    pub fn monomial(self) -> Monomial {
        Monomial(self.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pack_unpack() {
        let m = Monomial::from_exponents(&[3, 0, 7, 255]);
        assert_eq!(m.exponents(5), vec![3, 0, 7, 255, 0]);
        assert_eq!(m.total_degree(), 265);
        assert_eq!(m.with_exp(1, 2).exponents(4), vec![3, 2, 7, 255]);
    }

    #[test]
    fn grlex() {
        let a = Monomial::from_exponents(&[1, 0, 0]);
        let b = Monomial::from_exponents(&[0, 2, 0]);
        let c = Monomial::from_exponents(&[0, 1, 1]);
        assert_eq!(a.grlex_cmp(b), Ordering::Less);
        assert_eq!(b.grlex_cmp(c), Ordering::Greater);
        assert!(a.grlex_key() < b.grlex_key());
    }

    #[test]
    fn delete_and_insert() {
        let m = Monomial::from_exponents(&[1, 2, 3, 4]);
        assert_eq!(m.delete_var(1).exponents(4), vec![1, 3, 4, 0]);
        assert_eq!(m.delete_var(0).exponents(4), vec![2, 3, 4, 0]);
        assert_eq!(m.insert_var(2).exponents(5), vec![1, 2, 0, 3, 4]);
        assert_eq!(m.insert_var(2).delete_var(2), m);
        let last = Monomial::var(15, 9);
        assert_eq!(last.delete_var(15), Monomial::ONE);
    }

    #[test]
    fn division() {
        let m = Monomial::from_exponents(&[2, 1]);
        assert_eq!(
            m.div(Monomial::from_exponents(&[1, 1])),
            Some(Monomial::from_exponents(&[1, 0]))
        );
        assert_eq!(m.div(Monomial::from_exponents(&[0, 2])), None);
    }
}
