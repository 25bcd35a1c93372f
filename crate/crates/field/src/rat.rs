//! Rationals with an `i64` fast path that promotes to `BigRational` on overflow.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;

#[derive(Clone)]
pub enum Rat {
    S(Ratio<i64>),
    /// boxed so the common case stays small
    B(Box<BigRational>),
}

impl Rat {
    pub fn int(n: i64) -> Rat {
        Rat::S(Ratio::from_integer(n))
    }

    pub fn new(num: i64, den: i64) -> Rat {
        assert!(den != 0, "zero denominator");
        Rat::S(Ratio::new(num, den))
    }

    pub fn from_big(r: BigRational) -> Rat {
        // demote when it fits
        if let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) {
            if n != i64::MIN && d != i64::MIN {
                return Rat::S(Ratio::new_raw(n, d));
            }
        }
        Rat::B(Box::new(r))
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Rat::S(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Rat::B(b) => (**b).clone(),
        }
    }

    pub fn zero() -> Rat {
        Rat::int(0)
    }

    pub fn one() -> Rat {
        Rat::int(1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Rat::S(r) => r.is_zero(),
            Rat::B(b) => b.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Rat::S(r) => r.is_one(),
            Rat::B(b) => b.is_one(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Rat::S(r) => r.numer().signum() as i32,
            Rat::B(b) => {
                if b.is_positive() {
                    1
                } else if b.is_negative() {
                    -1
                } else {
                    0
                }
            }
        }
    }

    /// Numerator and (positive) denominator.
    pub fn parts(&self) -> (BigInt, BigInt) {
        let b = self.to_big();
        (b.numer().clone(), b.denom().clone())
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Rat::S(r) => *r.numer() as f64 / *r.denom() as f64,
            Rat::B(b) => b.as_ref().to_f64().unwrap_or(f64::NAN),
        }
    }

    pub fn add(&self, o: &Rat) -> Rat {
        if let (Rat::S(x), Rat::S(y)) = (self, o) {
            if *x.denom() == 1 && *y.denom() == 1 {
                if let Some(n) = i64::checked_add(*x.numer(), *y.numer()) {
                    return Rat::S(Ratio::new_raw(n, 1));
                }
            }
            if let Some(r) = x.checked_add(y) {
                return Rat::S(r);
            }
        }
        Rat::from_big(self.to_big() + o.to_big())
    }

    pub fn sub(&self, o: &Rat) -> Rat {
        if let (Rat::S(x), Rat::S(y)) = (self, o) {
            if *x.denom() == 1 && *y.denom() == 1 {
                if let Some(n) = i64::checked_sub(*x.numer(), *y.numer()) {
                    return Rat::S(Ratio::new_raw(n, 1));
                }
            }
            if let Some(r) = x.checked_sub(y) {
                return Rat::S(r);
            }
        }
        Rat::from_big(self.to_big() - o.to_big())
    }

    pub fn mul(&self, o: &Rat) -> Rat {
        if let (Rat::S(x), Rat::S(y)) = (self, o) {
            if *x.denom() == 1 && *y.denom() == 1 {
                if let Some(n) = i64::checked_mul(*x.numer(), *y.numer()) {
                    return Rat::S(Ratio::new_raw(n, 1));
                }
            }
            if let Some(r) = x.checked_mul(y) {
                return Rat::S(r);
            }
        }
        Rat::from_big(self.to_big() * o.to_big())
    }

    pub fn neg(&self) -> Rat {
        match self {
            Rat::S(r) if *r.numer() != i64::MIN => Rat::S(-*r),
            _ => Rat::from_big(-self.to_big()),
        }
    }

    /// Panics on zero; callers check first.
    pub fn recip(&self) -> Rat {
        assert!(!self.is_zero(), "reciprocal of zero");
        match self {
            Rat::S(r) if *r.numer() != i64::MIN => Rat::S(r.recip()),
            _ => Rat::from_big(self.to_big().recip()),
        }
    }
}

impl PartialEq for Rat {
    fn eq(&self, o: &Rat) -> bool {
        match (self, o) {
            (Rat::S(x), Rat::S(y)) => x == y,
            // both reduced, and S is used whenever the value fits
            (Rat::B(x), Rat::B(y)) => x == y,
            _ => self.to_big() == o.to_big(),
        }
    }
}

impl Eq for Rat {}

impl PartialOrd for Rat {
    fn partial_cmp(&self, o: &Rat) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Rat {
    fn cmp(&self, o: &Rat) -> Ordering {
        match (self, o) {
            (Rat::S(x), Rat::S(y)) => x.cmp(y),
            _ => self.to_big().cmp(&o.to_big()),
        }
    }
}

impl std::hash::Hash for Rat {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        let (n, d) = self.parts();
        n.hash(h);
        d.hash(h);
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rat::S(r) => write!(f, "{}", r),
            Rat::B(b) => write!(f, "{}", b),
        }
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Rat {
        Rat::int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rat::int(i64::MAX);
        let p = big.mul(&Rat::int(4));
        assert!(matches!(p, Rat::B(_)));
        let back = p.mul(&Rat::new(1, 4));
        assert!(matches!(back, Rat::S(_)));
        assert_eq!(back, Rat::int(i64::MAX));
    }

    #[test]
    fn mixed_equality() {
        let a = Rat::new(3, 7);
        let b = Rat::B(Box::new(BigRational::new(BigInt::from(6), BigInt::from(14))));
        assert_eq!(a, b);
    }
}
