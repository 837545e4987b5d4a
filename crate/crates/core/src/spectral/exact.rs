//! Eigenvalues of the form `c * sqrt(k)` with `c` rational and `k` squarefree.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = Ratio<i128>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactEigenvalue {
    coefficient: Rational,
    radicand: u64,
}

impl ExactEigenvalue {
    /// `coefficient * sqrt(radicand)`, with square factors moved out of the radicand.
    pub fn new(coefficient: Rational, radicand: u64) -> Self {
        if coefficient.is_zero() || radicand == 0 {
            return Self::zero();
        }
        let (outside, inside) = extract_square(radicand);
        Self { coefficient: coefficient * Rational::from_integer(outside as i128), radicand: inside }
    }

    pub fn zero() -> Self {
        Self { coefficient: Rational::zero(), radicand: 1 }
    }

    pub fn integer(value: i128) -> Self {
        Self { coefficient: Rational::from_integer(value), radicand: 1 }
    }

    /// `sqrt(value)` in canonical form.
    pub fn sqrt(value: u64) -> Self {
        Self::new(Rational::from_integer(1), value)
    }

    pub fn coefficient(&self) -> &Rational {
        &self.coefficient
    }

    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    pub fn is_rational(&self) -> bool {
        self.radicand == 1
    }

    pub fn is_integer(&self) -> bool {
        self.is_rational() && self.coefficient.is_integer()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    pub fn neg(&self) -> Self {
        Self { coefficient: -self.coefficient, radicand: self.radicand }
    }

    pub fn abs(&self) -> Self {
        Self { coefficient: self.coefficient.abs(), radicand: self.radicand }
    }

    pub fn to_f64(&self) -> f64 {
        let c = self.coefficient.to_f64().unwrap_or(f64::NAN);
        if self.radicand == 1 {
            c
        } else {
            c * (self.radicand as f64).sqrt()
        }
    }

    fn signum(&self) -> i32 {
        if self.coefficient.is_zero() {
            0
        } else if self.coefficient.is_positive() {
            1
        } else {
            -1
        }
    }

    /// `c^2 * k` as a reduced fraction, if it fits.
    fn square(&self) -> Option<(u128, u128)> {
        let n = self.coefficient.numer().unsigned_abs();
        let d = self.coefficient.denom().unsigned_abs();
        let num = n.checked_mul(n)?.checked_mul(u128::from(self.radicand))?;
        Some((num, d.checked_mul(d)?))
    }
}

/// Splits `n` as `outside^2 * inside` with `inside` squarefree.
fn extract_square(mut n: u64) -> (u64, u64) {
    let mut outside = 1u64;
    let mut inside = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        outside *= d.pow(e / 2);
        if e % 2 == 1 {
            inside *= d;
        }
        d += if d == 2 { 1 } else { 2 };
    }
    (outside, inside * n)
}

impl Ord for ExactEigenvalue {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (self.signum(), other.signum());
        if a != b || a == 0 {
            return a.cmp(&b);
        }
        if self.radicand == other.radicand {
            return self.coefficient.cmp(&other.coefficient);
        }
        let magnitude = match (self.square(), other.square()) {
            (Some((n1, d1)), Some((n2, d2))) => match (n1.checked_mul(d2), n2.checked_mul(d1)) {
                (Some(l), Some(r)) => l.cmp(&r),
                _ => self.to_f64().abs().total_cmp(&other.to_f64().abs()),
            },
            _ => self.to_f64().abs().total_cmp(&other.to_f64().abs()),
        };
        if a > 0 {
            magnitude
        } else {
            magnitude.reverse()
        }
    }
}

impl PartialOrd for ExactEigenvalue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Renders as `3`, `−1`, `√3`, `2√6`, `−√3` or `3/2` (minus sign is U+2212).
impl fmt::Display for ExactEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficient.is_negative() {
            f.write_str("\u{2212}")?;
        }
        let numer = self.coefficient.numer().unsigned_abs();
        let denom = self.coefficient.denom().unsigned_abs();
        if self.radicand == 1 {
            write!(f, "{numer}")?;
        } else {
            if numer != 1 {
                write!(f, "{numer}")?;
            }
            write!(f, "\u{221a}{}", self.radicand)?;
        }
        if denom != 1 {
            write!(f, "/{denom}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn canonical_form() {
        let v = ExactEigenvalue::sqrt(8);
        assert_eq!((v.coefficient(), v.radicand()), (&r(2, 1), 2));
        assert_eq!(ExactEigenvalue::sqrt(24), ExactEigenvalue::new(r(2, 1), 6));
        assert_eq!(ExactEigenvalue::sqrt(9), ExactEigenvalue::integer(3));
        assert_eq!(ExactEigenvalue::new(r(0, 1), 7), ExactEigenvalue::zero());
        assert_eq!(ExactEigenvalue::new(r(5, 1), 0), ExactEigenvalue::zero());
        assert_eq!(ExactEigenvalue::sqrt(1).radicand(), 1);
        assert_eq!(extract_square(2 * 2 * 3 * 3 * 3 * 7), (6, 21));
        assert_eq!(extract_square(999_983 * 999_983), (999_983, 1));
    }

    #[test]
    fn ordering() {
        let mut v = [
            ExactEigenvalue::integer(1),
            ExactEigenvalue::sqrt(3).neg(),
            ExactEigenvalue::zero(),
            ExactEigenvalue::sqrt(3),
            ExactEigenvalue::integer(-1),
            ExactEigenvalue::sqrt(8),
            ExactEigenvalue::integer(2),
        ];
        v.sort();
        let rendered: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        assert_eq!(rendered, ["\u{2212}\u{221a}3", "\u{2212}1", "0", "1", "\u{221a}3", "2", "2\u{221a}2"]);
        for w in v.windows(2) {
            assert!(w[0].to_f64() < w[1].to_f64());
        }
        assert!(ExactEigenvalue::sqrt(2).neg() > ExactEigenvalue::sqrt(3).neg());
    }

    #[test]
    fn display() {
        assert_eq!(ExactEigenvalue::new(r(3, 2), 1).to_string(), "3/2");
        assert_eq!(ExactEigenvalue::new(r(-3, 2), 5).to_string(), "\u{2212}3\u{221a}5/2");
        assert_eq!(ExactEigenvalue::sqrt(24).to_string(), "2\u{221a}6");
        assert_eq!(ExactEigenvalue::integer(26).to_string(), "26");
    }

    #[test]
    fn values() {
        assert!((ExactEigenvalue::sqrt(24).to_f64() - 24f64.sqrt()).abs() < 1e-14);
        assert!(ExactEigenvalue::integer(4).is_integer());
        assert!(!ExactEigenvalue::new(r(1, 2), 1).is_integer());
        assert!(!ExactEigenvalue::sqrt(3).is_rational());
    }
}
