use super::{sqrt_lower, sqrt_upper, Rational};
use crate::error::{Error, Result};
use num_traits::{Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

/// An exact value `a + b*sqrt(c)` with rational `a`, `b` and radicand
/// `c >= 0`. Values over the same radicand form a field; comparisons across
/// different radicands are rejected (use [`super::RadicalSum`] for those).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticNumber {
    a: Rational,
    b: Rational,
    c: Rational,
}

impl QuadraticNumber {
    pub fn new(a: Rational, b: Rational, c: Rational) -> Result<Self> {
        if c.is_negative() {
            return Err(Error::NegativeRadicand);
        }
        Ok(Self::new_unchecked(a, b, c))
    }

    fn new_unchecked(a: Rational, mut b: Rational, mut c: Rational) -> Self {
        if c.is_zero() || b.is_zero() {
            b = Rational::zero();
            c = Rational::zero();
        }
        QuadraticNumber { a, b, c }
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new_unchecked(a, Rational::zero(), Rational::zero())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn radical_coeff(&self) -> &Rational {
        &self.b
    }

    pub fn radicand(&self) -> &Rational {
        &self.c
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// The exact rational value when there is no radical part.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.is_rational() {
            Some(&self.a)
        } else {
            None
        }
    }

    /// Exact sign of `a + b*sqrt(c)`.
    pub fn sign(&self) -> Ordering {
        let sa = self.a.cmp(&Rational::zero());
        let sb = self.b.cmp(&Rational::zero());
        if sb == Ordering::Equal {
            return sa;
        }
        if sa == Ordering::Equal {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: compare a^2 against b^2 c; the larger magnitude wins.
        let lhs = &self.a * &self.a;
        let rhs = &self.b * &self.b * &self.c;
        match lhs.cmp(&rhs) {
            Ordering::Equal => Ordering::Equal,
            Ordering::Greater => sa,
            Ordering::Less => sb,
        }
    }

    /// Exact comparison of two values over the same radicand.
    pub fn cmp_same_radicand(&self, other: &Self) -> Result<Ordering> {
        let diff = self.checked_sub(other)?;
        Ok(diff.sign())
    }

    fn compatible_radicand(&self, other: &Self) -> Result<Rational> {
        if self.b.is_zero() {
            Ok(other.c.clone())
        } else if other.b.is_zero() || self.c == other.c {
            Ok(self.c.clone())
        } else {
            Err(Error::RadicandMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let c = self.compatible_radicand(other)?;
        Ok(Self::new_unchecked(
            &self.a + &other.a,
            &self.b + &other.b,
            c,
        ))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let c = self.compatible_radicand(other)?;
        Ok(Self::new_unchecked(
            &self.a - &other.a,
            &self.b - &other.b,
            c,
        ))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let c = self.compatible_radicand(other)?;
        Ok(Self::new_unchecked(
            &self.a * &other.a + &self.b * &other.b * &c,
            &self.a * &other.b + &self.b * &other.a,
            c,
        ))
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new_unchecked(&self.a * k, &self.b * k, self.c.clone())
    }

    /// Division within the same quadratic field, by conjugate
    /// rationalization; fails on radicand mismatch or a zero divisor.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        if other.sign() == std::cmp::Ordering::Equal {
            return Err(Error::InvalidParams("division by zero".into()));
        }
        let c = self.compatible_radicand(other)?;
        // The conjugate trick degenerates when sqrt(c) is rational (the
        // norm a^2 - b^2 c vanishes for nonzero values); collapse first.
        let denom = &other.a * &other.a - &other.b * &other.b * &c;
        if denom.is_zero() {
            let root = super::rational_sqrt_exact(&c)
                .expect("zero norm forces a perfect-square radicand");
            let value = &other.a + &other.b * root;
            return Ok(self.scale(&value.recip()));
        }
        let conj = Self::new_unchecked(other.a.clone(), -other.b.clone(), c);
        let num = self.checked_mul(&conj)?;
        Ok(num.scale(&denom.recip()))
    }

    pub fn add_rational(&self, k: &Rational) -> Self {
        Self::new_unchecked(&self.a + k, self.b.clone(), self.c.clone())
    }

    pub fn neg(&self) -> Self {
        Self::new_unchecked(-self.a.clone(), -self.b.clone(), self.c.clone())
    }

    /// Rational bracket `[lo, hi]` of the exact value, each side within
    /// `|b| * 2^-bits` of it.
    pub fn bounds(&self, bits: u32) -> (Rational, Rational) {
        if self.b.is_zero() {
            return (self.a.clone(), self.a.clone());
        }
        let slo = sqrt_lower(&self.c, bits);
        let shi = sqrt_upper(&self.c, bits);
        if self.b.is_positive() {
            (&self.a + &self.b * slo, &self.a + &self.b * shi)
        } else {
            (&self.a + &self.b * shi, &self.a + &self.b * slo)
        }
    }

    pub fn to_f64(&self) -> f64 {
        let a = self.a.to_f64().unwrap_or(f64::NAN);
        let b = self.b.to_f64().unwrap_or(f64::NAN);
        let c = self.c.to_f64().unwrap_or(f64::NAN);
        a + b * c.sqrt()
    }
}

impl fmt::Display for QuadraticNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.c)
        }
    }
}

/// Exact sign of a quadratic value; the free-function form of
/// [`QuadraticNumber::sign`].
pub fn quad_sign(q: &QuadraticNumber) -> Ordering {
    q.sign()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn quad(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> QuadraticNumber {
        QuadraticNumber::new(rat(a.0, a.1), rat(b.0, b.1), rat(c.0, c.1)).unwrap()
    }

    #[test]
    fn sign_cases() {
        assert_eq!(quad((0, 1), (0, 1), (5, 1)).sign(), Ordering::Equal);
        assert_eq!(quad((-1, 1), (1, 1), (2, 1)).sign(), Ordering::Greater);
        // 3 - 2*sqrt(2) > 0 since 9 > 8.
        assert_eq!(quad((3, 1), (-2, 1), (2, 1)).sign(), Ordering::Greater);
        // 1 - sqrt(2) < 0.
        assert_eq!(quad((1, 1), (-1, 1), (2, 1)).sign(), Ordering::Less);
        // 2 - sqrt(4) = 0.
        assert_eq!(quad((2, 1), (-1, 1), (4, 1)).sign(), Ordering::Equal);
    }

    #[test]
    fn negative_radicand_rejected() {
        assert!(QuadraticNumber::new(rat_int(0), rat_int(1), rat_int(-1)).is_err());
    }

    #[test]
    fn mixed_radicand_rejected() {
        let x = quad((0, 1), (1, 1), (2, 1));
        let y = quad((0, 1), (1, 1), (3, 1));
        assert!(x.cmp_same_radicand(&y).is_err());
        // A rational value compares against anything.
        let r = QuadraticNumber::from_rational(rat_int(1));
        assert_eq!(x.cmp_same_radicand(&r).unwrap(), Ordering::Greater);
    }

    #[test]
    fn arithmetic_same_radicand() {
        let x = quad((1, 2), (1, 1), (2, 1)); // 1/2 + sqrt(2)
        let y = quad((0, 1), (2, 1), (2, 1)); // 2 sqrt(2)
        let s = x.checked_add(&y).unwrap();
        assert_eq!(s, quad((1, 2), (3, 1), (2, 1)));
        let p = x.checked_mul(&y).unwrap(); // sqrt(2)(1/2 + sqrt2)*2 = 4 + sqrt(2)
        assert_eq!(p, quad((4, 1), (1, 1), (2, 1)));
    }

    #[test]
    fn bounds_bracket_value() {
        let x = quad((1, 1), (-3, 1), (2, 1));
        let (lo, hi) = x.bounds(50);
        assert!(lo <= hi);
        // value = 1 - 3 sqrt2 = -3.2426...
        assert!(lo < rat(-32426, 10000) && hi > rat(-32427, 10000));
    }
}
