use super::{QuadraticNumber, Rational};
use num_traits::Zero;
use std::cmp::Ordering;

/// An exact element of `Q(sqrt(b_1), ..., sqrt(b_k))` for a small fixed list
/// of non-negative rational radicands, stored as coefficients over the
/// subset-product basis: `coeffs[mask]` multiplies
/// `sqrt(prod of bases[i] for i in mask)`.
///
/// Closed under ring operations, which makes the recursive sign procedure
/// terminate: split on the last radicand, compare the squares of the two
/// halves in the smaller field. The convex pipeline needs `k <= 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadicalSum {
    bases: Vec<Rational>,
    coeffs: Vec<Rational>,
}

impl RadicalSum {
    pub fn zero(bases: &[Rational]) -> Self {
        assert!(bases.len() <= 4, "radical basis too large");
        for b in bases {
            assert!(*b >= Rational::zero(), "negative radicand");
        }
        RadicalSum {
            bases: bases.to_vec(),
            coeffs: vec![Rational::zero(); 1 << bases.len()],
        }
    }

    pub fn from_rational(bases: &[Rational], q: Rational) -> Self {
        let mut s = Self::zero(bases);
        s.coeffs[0] = q;
        s
    }

    /// The single term `coeff * sqrt(prod bases[i] for i in mask)`.
    pub fn term(bases: &[Rational], mask: usize, coeff: Rational) -> Self {
        let mut s = Self::zero(bases);
        s.coeffs[mask] = coeff;
        s
    }

    /// Embeds `a + b*sqrt(c)` where `c` must be `bases[base_idx]`.
    pub fn from_quadratic(bases: &[Rational], base_idx: usize, q: &QuadraticNumber) -> Self {
        let mut s = Self::zero(bases);
        s.coeffs[0] = q.rational_part().clone();
        if !q.radical_coeff().is_zero() {
            debug_assert_eq!(q.radicand(), &bases[base_idx]);
            s.coeffs[1 << base_idx] = q.radical_coeff().clone();
        }
        s
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.bases, other.bases);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        RadicalSum {
            bases: self.bases.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.bases, other.bases);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        RadicalSum {
            bases: self.bases.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        RadicalSum {
            bases: self.bases.clone(),
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Self {
        RadicalSum {
            bases: self.bases.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.bases, other.bases);
        let mut out = Self::zero(&self.bases);
        for (m1, c1) in self.coeffs.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (m2, c2) in other.coeffs.iter().enumerate() {
                if c2.is_zero() {
                    continue;
                }
                // sqrt(S1)*sqrt(S2) = sqrt(S1 xor S2) * prod(S1 and S2)
                let mut factor = c1 * c2;
                let mut common = m1 & m2;
                let mut i = 0;
                while common != 0 {
                    if common & 1 == 1 {
                        factor *= &self.bases[i];
                    }
                    common >>= 1;
                    i += 1;
                }
                out.coeffs[m1 ^ m2] += factor;
            }
        }
        out
    }

    pub fn is_zero_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Exact sign of the real value.
    pub fn sign(&self) -> Ordering {
        sign_rec(&self.bases, &self.coeffs)
    }

    pub fn to_f64(&self) -> f64 {
        let mut total = 0.0;
        for (mask, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut radicand = 1.0;
            for (i, b) in self.bases.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    radicand *= super::to_f64(b);
                }
            }
            total += super::to_f64(c) * radicand.sqrt();
        }
        total
    }
}

fn sign_rec(bases: &[Rational], coeffs: &[Rational]) -> Ordering {
    let k = bases.len();
    if k == 0 {
        return coeffs[0].cmp(&Rational::zero());
    }
    let half = 1 << (k - 1);
    let (lo, hi) = coeffs.split_at(half);
    let sub_bases = &bases[..k - 1];
    let c = &bases[k - 1];
    // value = A + B * sqrt(c) with A, B in the field over sub_bases.
    if c.is_zero() || hi.iter().all(|x| x.is_zero()) {
        return sign_rec(sub_bases, lo);
    }
    let sa = sign_rec(sub_bases, lo);
    let sb = sign_rec(sub_bases, hi);
    if sb == Ordering::Equal {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    if sa == sb {
        return sa;
    }
    // Opposite signs: compare A^2 with B^2 * c in the smaller field.
    let a = RadicalSum {
        bases: sub_bases.to_vec(),
        coeffs: lo.to_vec(),
    };
    let b = RadicalSum {
        bases: sub_bases.to_vec(),
        coeffs: hi.to_vec(),
    };
    let diff = a.mul(&a).sub(&b.mul(&b).scale(c));
    match diff.sign() {
        Ordering::Equal => Ordering::Equal,
        Ordering::Greater => sa,
        Ordering::Less => sb,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{rat, rat_int};

    fn bases2() -> Vec<Rational> {
        vec![rat_int(2), rat_int(3)]
    }

    #[test]
    fn sign_of_mixed_radicals() {
        // sqrt(2) + sqrt(3) - sqrt(2*3) + 1/2 > 0
        let b = bases2();
        let x = RadicalSum::term(&b, 0b01, rat_int(1))
            .add(&RadicalSum::term(&b, 0b10, rat_int(1)))
            .add(&RadicalSum::term(&b, 0b11, rat_int(-1)))
            .add(&RadicalSum::from_rational(&b, rat(1, 2)));
        assert_eq!(x.sign(), Ordering::Greater);

        // sqrt(2) + sqrt(3) < sqrt(2) + 2  i.e. sqrt(3) - 2 < 0
        let y = RadicalSum::term(&b, 0b10, rat_int(1)).sub(&RadicalSum::from_rational(&b, rat_int(2)));
        assert_eq!(y.sign(), Ordering::Less);
    }

    #[test]
    fn zero_from_dependent_radicands() {
        // sqrt(8) - 2*sqrt(2) = 0 even though the radicands differ.
        let b = vec![rat_int(2), rat_int(8)];
        let x = RadicalSum::term(&b, 0b10, rat_int(1)).sub(&RadicalSum::term(&b, 0b01, rat_int(2)));
        assert_eq!(x.sign(), Ordering::Equal);
    }

    #[test]
    fn product_folds_common_radicands() {
        let b = bases2();
        // (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6
        let s = RadicalSum::term(&b, 0b01, rat_int(1)).add(&RadicalSum::term(&b, 0b10, rat_int(1)));
        let sq = s.mul(&s);
        assert_eq!(sq.coeffs[0], rat_int(5));
        assert_eq!(sq.coeffs[0b11], rat_int(2));
        assert!(sq.coeffs[0b01].is_zero() && sq.coeffs[0b10].is_zero());
    }

    #[test]
    fn three_radicand_sign() {
        // sqrt(2)+sqrt(3)-sqrt(5) is positive but tiny-ish: 1.414+1.732-2.236
        let b = vec![rat_int(2), rat_int(3), rat_int(5)];
        let x = RadicalSum::term(&b, 0b001, rat_int(1))
            .add(&RadicalSum::term(&b, 0b010, rat_int(1)))
            .add(&RadicalSum::term(&b, 0b100, rat_int(-1)));
        assert_eq!(x.sign(), Ordering::Greater);
        // and sqrt(2)+sqrt(3) < sqrt(5) + 1
        let y = x.sub(&RadicalSum::from_rational(&b, rat_int(1)));
        assert_eq!(y.sign(), Ordering::Less);
    }
}
