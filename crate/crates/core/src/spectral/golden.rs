//! Exact arithmetic in `Z[φ]` and its fraction field `Q(φ)`, with `φ² = φ + 1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

/// The golden ratio as a float.
pub const PHI: f64 = 1.618_033_988_749_895;

/// `a + bφ` with integer coordinates.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, Serialize)]
pub struct GoldenNumber {
    pub a: i64,
    pub b: i64,
}

impl GoldenNumber {
    pub const ZERO: GoldenNumber = GoldenNumber { a: 0, b: 0 };
    pub const ONE: GoldenNumber = GoldenNumber { a: 1, b: 0 };
    pub const PHI: GoldenNumber = GoldenNumber { a: 0, b: 1 };
    /// `φ⁻¹ = φ - 1`.
    pub const PHI_INV: GoldenNumber = GoldenNumber { a: -1, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        GoldenNumber { a, b }
    }

    pub const fn int(a: i64) -> Self {
        GoldenNumber { a, b: 0 }
    }

    /// `φⁿ` for any integer `n`; negative powers use `φ⁻¹ = φ - 1`.
    pub fn phi_pow(n: i32) -> Self {
        let base = if n >= 0 { Self::PHI } else { Self::PHI_INV };
        base.pow(n.unsigned_abs())
    }

    pub fn pow(self, n: u32) -> Self {
        (0..n).fold(Self::ONE, |acc, _| acc * self)
    }

    /// Galois conjugate `a + b(1 - φ)`.
    pub fn conjugate(self) -> Self {
        GoldenNumber::new(self.a + self.b, -self.b)
    }

    /// `x · conj(x) = a² + ab - b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a + self.a * self.b - self.b * self.b
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn to_f64(self) -> f64 {
        self.a as f64 + self.b as f64 * PHI
    }

    /// Exact sign: `2x = (2a + b) + b√5`.
    pub fn signum(self) -> Ordering {
        let p = 2 * self.a as i128 + self.b as i128;
        let q = self.b as i128;
        match (p.cmp(&0), q.cmp(&0)) {
            (Ordering::Equal, s) | (s, Ordering::Equal) => s,
            (s, t) if s == t => s,
            (s, _) => {
                // opposite signs: compare p² against 5q²
                match (p * p).cmp(&(5 * q * q)) {
                    Ordering::Greater => s,
                    Ordering::Less => s.reverse(),
                    Ordering::Equal => Ordering::Equal,
                }
            }
        }
    }

    pub fn is_positive(self) -> bool {
        self.signum() == Ordering::Greater
    }
}

impl PartialOrd for GoldenNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GoldenNumber {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum()
    }
}

impl Add for GoldenNumber {
    type Output = GoldenNumber;
    fn add(self, o: Self) -> Self {
        GoldenNumber::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for GoldenNumber {
    type Output = GoldenNumber;
    fn sub(self, o: Self) -> Self {
        GoldenNumber::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for GoldenNumber {
    type Output = GoldenNumber;
    fn neg(self) -> Self {
        GoldenNumber::new(-self.a, -self.b)
    }
}

impl Mul for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, o: Self) -> Self {
        GoldenNumber::new(
            self.a * o.a + self.b * o.b,
            self.a * o.b + self.b * o.a + self.b * o.b,
        )
    }
}

impl Mul<i64> for GoldenNumber {
    type Output = GoldenNumber;
    fn mul(self, k: i64) -> Self {
        GoldenNumber::new(self.a * k, self.b * k)
    }
}

impl std::iter::Sum for GoldenNumber {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::ZERO, |a, b| a + b)
    }
}

impl From<i64> for GoldenNumber {
    fn from(a: i64) -> Self {
        GoldenNumber::int(a)
    }
}

impl fmt::Display for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "φ"),
            (0, -1) => write!(f, "-φ"),
            (0, b) => write!(f, "{b}φ"),
            (a, 1) => write!(f, "{a}+φ"),
            (a, -1) => write!(f, "{a}-φ"),
            (a, b) if b < 0 => write!(f, "{a}{b}φ"),
            (a, b) => write!(f, "{a}+{b}φ"),
        }
    }
}

impl fmt::Debug for GoldenNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A quotient `num / den` of elements of `Z[φ]`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct GoldenFraction {
    pub num: GoldenNumber,
    pub den: GoldenNumber,
}

impl GoldenFraction {
    pub fn new(num: GoldenNumber, den: GoldenNumber) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        GoldenFraction { num, den }
    }

    pub fn to_f64(self) -> f64 {
        self.num.to_f64() / self.den.to_f64()
    }
}

impl PartialEq for GoldenFraction {
    fn eq(&self, o: &Self) -> bool {
        self.num * o.den == o.num * self.den
    }
}

impl Eq for GoldenFraction {}

impl fmt::Display for GoldenFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

/// `a + bφ` with rational coordinates: the field `Q(φ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoldenRational {
    pub a: BigRational,
    pub b: BigRational,
}

impl GoldenRational {
    pub fn zero() -> Self {
        GoldenRational {
            a: BigRational::zero(),
            b: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GoldenRational {
            a: BigRational::one(),
            b: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        GoldenRational {
            a: &self.a + &o.a,
            b: &self.b + &o.b,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        GoldenRational {
            a: &self.a - &o.a,
            b: &self.b - &o.b,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let bd = &self.b * &o.b;
        GoldenRational {
            a: &self.a * &o.a + &bd,
            b: &self.a * &o.b + &self.b * &o.a + bd,
        }
    }

    pub fn inv(&self) -> Option<Self> {
        let norm = &self.a * &self.a + &self.a * &self.b - &self.b * &self.b;
        if norm.is_zero() {
            return None;
        }
        Some(GoldenRational {
            a: (&self.a + &self.b) / &norm,
            b: -&self.b / norm,
        })
    }

    /// Converts to `Z[φ]` when both coordinates are integers that fit.
    pub fn to_integral(&self) -> Option<GoldenNumber> {
        if !self.a.is_integer() || !self.b.is_integer() {
            return None;
        }
        Some(GoldenNumber::new(
            self.a.to_integer().to_i64()?,
            self.b.to_integer().to_i64()?,
        ))
    }

    pub fn denominators(&self) -> [BigInt; 2] {
        [self.a.denom().abs(), self.b.denom().abs()]
    }
}

impl From<GoldenNumber> for GoldenRational {
    fn from(g: GoldenNumber) -> Self {
        GoldenRational {
            a: BigRational::from_integer(g.a.into()),
            b: BigRational::from_integer(g.b.into()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_squared() {
        let phi = GoldenNumber::PHI;
        assert_eq!(phi * phi, phi + GoldenNumber::ONE);
        assert_eq!(phi * GoldenNumber::PHI_INV, GoldenNumber::ONE);
    }

    #[test]
    fn eighth_power() {
        assert_eq!(GoldenNumber::phi_pow(8) * 2, GoldenNumber::new(26, 42));
        assert_eq!(GoldenNumber::phi_pow(-2), GoldenNumber::new(2, -1));
    }

    #[test]
    fn exact_sign() {
        assert!(GoldenNumber::PHI_INV.is_positive());
        assert!(!GoldenNumber::new(2, -2).is_positive());
        assert!(GoldenNumber::new(-1, 1) < GoldenNumber::ONE);
        assert_eq!(GoldenNumber::ZERO.signum(), Ordering::Equal);
    }

    #[test]
    fn display_forms() {
        assert_eq!(GoldenNumber::new(3, 6).to_string(), "3+6φ");
        assert_eq!(GoldenNumber::new(1, 0).to_string(), "1");
        assert_eq!(GoldenNumber::new(0, 1).to_string(), "φ");
        assert_eq!(GoldenNumber::new(2, -1).to_string(), "2-φ");
    }

    #[test]
    fn rational_inverse() {
        let x: GoldenRational = GoldenNumber::new(26, 42).into();
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), GoldenRational::one());
    }

    #[test]
    fn fraction_equality() {
        let half = GoldenFraction::new(GoldenNumber::ONE, GoldenNumber::int(2));
        let same = GoldenFraction::new(GoldenNumber::PHI, GoldenNumber::new(0, 2));
        assert_eq!(half, same);
    }
}
