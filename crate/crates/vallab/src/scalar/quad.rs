use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::{parse_rational, Rational, Scalar, ScalarMode};
use crate::error::Error;

/// Element `a + b*sqrt(2)` of the real quadratic field generated by sqrt(2).
///
/// The representation is canonical because sqrt(2) is irrational: two
/// elements are equal iff their components are. Order is decided exactly by
/// case analysis on the component signs, comparing `a^2` against `2 b^2`
/// where the signs disagree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadScalar {
    a: Rational,
    b: Rational,
}

impl QuadScalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        QuadScalar { a, b }
    }

    pub fn from_parts(a: Rational, b: Rational) -> Self {
        Self::new(a, b)
    }

    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &Rational {
        &self.b
    }

    pub fn sqrt2_value() -> Self {
        QuadScalar::new(Rational::zero(), Rational::one())
    }

    fn sign_impl(&self) -> i8 {
        let sa = Scalar::sign(&self.a);
        let sb = Scalar::sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Signs disagree: |a| vs |b|*sqrt(2) decided on squares.
        let a2 = self.a.clone() * self.a.clone();
        let b2_twice = Rational::from_int(2) * self.b.clone() * self.b.clone();
        match a2.cmp(&b2_twice) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0, // only possible for a = b = 0
        }
    }
}

impl From<Rational> for QuadScalar {
    fn from(a: Rational) -> Self {
        QuadScalar::new(a, Rational::zero())
    }
}

impl fmt::Debug for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for QuadScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*r2", self.b);
        }
        if Scalar::sign(&self.b) < 0 {
            write!(f, "{}-{}*r2", self.a, -self.b.clone())
        } else {
            write!(f, "{}+{}*r2", self.a, self.b)
        }
    }
}

impl PartialOrd for QuadScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QuadScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.clone() - other.clone();
        match diff.sign_impl() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for QuadScalar {
    type Output = QuadScalar;
    fn add(self, rhs: Self) -> Self {
        QuadScalar::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for QuadScalar {
    type Output = QuadScalar;
    fn sub(self, rhs: Self) -> Self {
        QuadScalar::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Mul for QuadScalar {
    type Output = QuadScalar;
    fn mul(self, rhs: Self) -> Self {
        // (a + b r)(c + d r) = ac + 2bd + (ad + bc) r with r^2 = 2.
        let a = self.a.clone() * rhs.a.clone()
            + Rational::from_int(2) * self.b.clone() * rhs.b.clone();
        let b = self.a * rhs.b + self.b * rhs.a;
        QuadScalar::new(a, b)
    }
}

impl Div for QuadScalar {
    type Output = QuadScalar;
    fn div(self, rhs: Self) -> Self {
        let norm = rhs.a.clone() * rhs.a.clone()
            - Rational::from_int(2) * rhs.b.clone() * rhs.b.clone();
        assert!(!norm.is_zero(), "division by zero QuadScalar");
        let conj = QuadScalar::new(rhs.a, -rhs.b);
        let prod = self * conj;
        QuadScalar::new(prod.a / norm.clone(), prod.b / norm)
    }
}

impl Neg for QuadScalar {
    type Output = QuadScalar;
    fn neg(self) -> Self {
        QuadScalar::new(-self.a, -self.b)
    }
}

impl AddAssign for QuadScalar {
    fn add_assign(&mut self, rhs: Self) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl SubAssign for QuadScalar {
    fn sub_assign(&mut self, rhs: Self) {
        self.a -= rhs.a;
        self.b -= rhs.b;
    }
}

impl MulAssign for QuadScalar {
    fn mul_assign(&mut self, rhs: Self) {
        *self = self.clone() * rhs;
    }
}

impl Zero for QuadScalar {
    fn zero() -> Self {
        QuadScalar::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for QuadScalar {
    fn one() -> Self {
        QuadScalar::new(Rational::one(), Rational::zero())
    }
}

impl Sum for QuadScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| acc + x)
    }
}

impl Scalar for QuadScalar {
    const MODE: ScalarMode = ScalarMode::Quad;

    fn from_rational(q: Rational) -> Self {
        QuadScalar::from(q)
    }

    fn sign(&self) -> i8 {
        self.sign_impl()
    }

    fn components(&self) -> (Rational, Rational) {
        (self.a.clone(), self.b.clone())
    }

    fn sqrt2() -> Option<Self> {
        Some(QuadScalar::sqrt2_value())
    }

    fn to_f64(&self) -> f64 {
        Scalar::to_f64(&self.a) + Scalar::to_f64(&self.b) * std::f64::consts::SQRT_2
    }

    fn parse(text: &str) -> Result<Self, Error> {
        // Accepts plain rational literals; the sqrt(2) part comes in through
        // the JSON object form.
        Ok(QuadScalar::from(parse_rational(text)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::pow_u;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn qs(a: (i64, i64), b: (i64, i64)) -> QuadScalar {
        QuadScalar::new(q(a.0, a.1), q(b.0, b.1))
    }

    #[test]
    fn addition_is_componentwise() {
        let x = qs((1, 1), (1, 1));
        let y = qs((2, 1), (-3, 1));
        assert_eq!(x.clone() + y, qs((3, 1), (-2, 1)));
        assert_eq!(x.clone() + QuadScalar::zero(), x);
        let r = qs((1, 2), (0, 1)) + qs((1, 3), (0, 1));
        assert_eq!(r, qs((5, 6), (0, 1)));
    }

    #[test]
    fn sign_by_square_comparison() {
        assert_eq!(qs((3, 1), (-2, 1)).sign(), 1); // 3 - 2 r2 > 0 since 9 > 8
        assert_eq!(QuadScalar::zero().sign(), 0);
        assert_eq!(qs((1, 1), (-1, 1)).sign(), -1); // 1 - r2 < 0 since 1 < 2
        assert_eq!(qs((-3, 1), (2, 1)).sign(), -1);
        assert_eq!(qs((0, 1), (1, 1)).sign(), 1);
    }

    #[test]
    fn field_identities() {
        let x = qs((2, 3), (-5, 7));
        let y = qs((1, 2), (3, 4));
        assert_eq!(x.clone() * y.clone() / y.clone(), x);
        let r2 = QuadScalar::sqrt2_value();
        assert_eq!(r2.clone() * r2, QuadScalar::from_int(2));
        assert_eq!(pow_u(&qs((1, 1), (1, 1)), 2), qs((3, 1), (2, 1)));
    }

    #[test]
    fn order_is_consistent_with_value() {
        let x = qs((1, 1), (0, 1));
        let y = qs((0, 1), (1, 1)); // sqrt(2)
        assert!(x < y);
        assert!(y > x);
        assert_eq!(y.cmp(&y.clone()), Ordering::Equal);
    }
}
