//! The field Q(w) with w a primitive sixth root of unity: w^2 = w - 1, w^3 = -1.
//!
//! Elements are stored as `a + b w` with exact rational `a`, `b`.

mod rat;

pub use rat::Rat;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed field element: {0}")]
    Malformed(String),
}

/// `a + b w`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fe {
    pub a: Rat,
    pub b: Rat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

impl Fe {
    pub fn new(a: Rat, b: Rat) -> Fe {
        Fe { a, b }
    }

    pub fn zero() -> Fe {
        Fe::new(Rat::zero(), Rat::zero())
    }

    pub fn one() -> Fe {
        Fe::int(1)
    }

    pub fn int(n: i64) -> Fe {
        Fe::new(Rat::int(n), Rat::zero())
    }

    /// The rational `num/den`.
    pub fn frac(num: i64, den: i64) -> Fe {
        Fe::new(Rat::new(num, den), Rat::zero())
    }

    /// `a + b w` with integer parts.
    pub fn ints(a: i64, b: i64) -> Fe {
        Fe::new(Rat::int(a), Rat::int(b))
    }

    pub fn rational(r: Rat) -> Fe {
        Fe::new(r, Rat::zero())
    }

    pub fn omega() -> Fe {
        Fe::ints(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// True when the element lies in Q.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field norm `a^2 + a b + b^2`.
    pub fn norm(&self) -> Rat {
        self.a.mul(&self.a).add(&self.a.mul(&self.b)).add(&self.b.mul(&self.b))
    }

    pub fn inv(&self) -> Result<Fe, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.norm().recip();
        Ok(Fe::new(self.a.add(&self.b).mul(&n), self.b.neg().mul(&n)))
    }

    pub fn checked_div(&self, o: &Fe) -> Result<Fe, FieldError> {
        Ok(self * &o.inv()?)
    }

    /// Non-negative power; never fails.
    pub fn powu(&self, k: u32) -> Fe {
        self.pow(k as i64).expect("non-negative power")
    }

    pub fn pow(&self, k: i64) -> Result<Fe, FieldError> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        let mut base = self.clone();
        let mut e = k as u64;
        let mut acc = Fe::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        Ok(acc)
    }

    pub fn scale(&self, r: &Rat) -> Fe {
        Fe::new(self.a.mul(r), self.b.mul(r))
    }

    /// Complex value with w = exp(i pi/3), for floating-point spot checks.
    pub fn to_complex(&self) -> (f64, f64) {
        let (a, b) = (self.a.to_f64(), self.b.to_f64());
        (a + b * 0.5, b * 3f64.sqrt() / 2.0)
    }

    /// `[a_num, a_den, b_num, b_den]`, reduced, positive denominators.
    pub fn to_ints(&self) -> [BigInt; 4] {
        let (an, ad) = self.a.parts();
        let (bn, bd) = self.b.parts();
        [an, ad, bn, bd]
    }

    pub fn from_ints(v: &[BigInt; 4]) -> Result<Fe, FieldError> {
        use num_traits::Zero;
        if v[1].is_zero() || v[3].is_zero() {
            return Err(FieldError::Malformed("zero denominator".into()));
        }
        Ok(Fe::new(
            Rat::from_big(BigRational::new(v[0].clone(), v[1].clone())),
            Rat::from_big(BigRational::new(v[2].clone(), v[3].clone())),
        ))
    }
}

impl Fe {
    /// Square root inside the field, when there is one. Of the two roots the
    /// one with nonnegative real part is returned (positive imaginary part
    /// on the imaginary axis).
    pub fn sqrt(&self) -> Option<Fe> {
        // a + b w = u + v s with s = sqrt(-3)
        let half = Rat::new(1, 2);
        let u = self.a.add(&self.b.mul(&half));
        let v = self.b.mul(&half);
        let n = rat_sqrt(&u.mul(&u).add(&Rat::int(3).mul(&v.mul(&v))))?;
        // root p + r s has p^2 + 3 r^2 = n and p^2 - 3 r^2 = u
        let p = rat_sqrt(&u.add(&n).mul(&half))?;
        let r = if p.is_zero() { rat_sqrt(&n.sub(&u).mul(&Rat::new(1, 6)))? } else { v.mul(&p.mul(&Rat::int(2)).recip()) };
        // s = 2w - 1
        Some(Fe::new(p.sub(&r), r.mul(&Rat::int(2))))
    }
}

fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.signum() < 0 {
        return None;
    }
    let (n, d) = x.parts();
    let (rn, rd) = (n.sqrt(), d.sqrt());
    (&rn * &rn == n && &rd * &rd == d).then(|| Rat::from_big(BigRational::new(rn, rd)))
}

/// Accepts `p/q`, `p/q w`, `p/q + r/s w` and the `Display` form.
impl FromStr for Fe {
    type Err = FieldError;
    fn from_str(s: &str) -> Result<Fe, FieldError> {
        let t: String = s.chars().filter(|c| !c.is_whitespace() && *c != '(' && *c != ')').collect();
        let bad = || FieldError::Malformed(format!("not a field element: {s:?}"));
        let rat = |x: &str| -> Result<Rat, FieldError> {
            let (n, d) = x.split_once('/').unwrap_or((x, "1"));
            let n = BigInt::from_str(n).map_err(|_| bad())?;
            let d = BigInt::from_str(d).map_err(|_| bad())?;
            if num_traits::Zero::is_zero(&d) {
                return Err(bad());
            }
            Ok(Rat::from_big(BigRational::new(n, d)))
        };
        let Some(body) = t.strip_suffix('w') else {
            return Ok(Fe::rational(rat(&t)?));
        };
        let sign = |ch: char| body.char_indices().skip(1).filter(|(_, c)| *c == ch).last().map(|(i, _)| i);
        // `a+-b` comes from the display form
        let cut = sign('+').or_else(|| sign('-'));
        let (a, b) = match cut {
            Some(i) => (rat(&body[..i])?, &body[i..]),
            None => (Rat::zero(), body),
        };
        let b = match b.trim_start_matches('+') {
            "" => Rat::one(),
            "-" => Rat::int(-1),
            x => rat(x)?,
        };
        Ok(Fe::new(a, b))
    }
}

/// `field_arith` as a single entry point.
pub fn field_arith(x: &Fe, y: &Fe, kind: ArithKind) -> Result<Fe, FieldError> {
    Ok(match kind {
        ArithKind::Add => x + y,
        ArithKind::Sub => x - y,
        ArithKind::Mul => x * y,
        ArithKind::Div => x.checked_div(y)?,
    })
}

/// `w^k`, reduced with w^6 = 1.
pub fn omega_pow(k: i64) -> Fe {
    match k.rem_euclid(6) {
        0 => Fe::ints(1, 0),
        1 => Fe::ints(0, 1),
        2 => Fe::ints(-1, 1),
        3 => Fe::ints(-1, 0),
        4 => Fe::ints(0, -1),
        _ => Fe::ints(1, -1),
    }
}

/// Loop fugacity `n = -(q^4 + q^-4)`.
pub fn loop_weight(q: &Fe) -> Result<Fe, FieldError> {
    let q4 = q.pow(4)?;
    let qm4 = q4.inv()?;
    Ok(-(&q4 + &qm4))
}

impl<'a> Add<&'a Fe> for &'a Fe {
    type Output = Fe;
    fn add(self, o: &Fe) -> Fe {
        Fe::new(self.a.add(&o.a), self.b.add(&o.b))
    }
}

impl<'a> Sub<&'a Fe> for &'a Fe {
    type Output = Fe;
    fn sub(self, o: &Fe) -> Fe {
        Fe::new(self.a.sub(&o.a), self.b.sub(&o.b))
    }
}

impl<'a> Mul<&'a Fe> for &'a Fe {
    type Output = Fe;
    fn mul(self, o: &Fe) -> Fe {
        // (a + b w)(c + d w) = ac + (ad + bc) w + bd (w - 1)
        if self.b.is_zero() && o.b.is_zero() {
            return Fe::new(self.a.mul(&o.a), Rat::zero());
        }
        let ac = self.a.mul(&o.a);
        let bd = self.b.mul(&o.b);
        let ad = self.a.mul(&o.b);
        let bc = self.b.mul(&o.a);
        Fe::new(ac.sub(&bd), ad.add(&bc).add(&bd))
    }
}

impl Neg for &Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        Fe::new(self.a.neg(), self.b.neg())
    }
}

macro_rules! owned_ops {
    ($tr:ident, $f:ident) => {
        impl $tr<Fe> for Fe {
            type Output = Fe;
            fn $f(self, o: Fe) -> Fe {
                (&self).$f(&o)
            }
        }
        impl<'a> $tr<&'a Fe> for Fe {
            type Output = Fe;
            fn $f(self, o: &Fe) -> Fe {
                (&self).$f(o)
            }
        }
        impl<'a> $tr<Fe> for &'a Fe {
            type Output = Fe;
            fn $f(self, o: Fe) -> Fe {
                self.$f(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

impl Neg for Fe {
    type Output = Fe;
    fn neg(self) -> Fe {
        -&self
    }
}

impl AddAssign<&Fe> for Fe {
    fn add_assign(&mut self, o: &Fe) {
        self.a = self.a.add(&o.a);
        self.b = self.b.add(&o.b);
    }
}

impl SubAssign<&Fe> for Fe {
    fn sub_assign(&mut self, o: &Fe) {
        self.a = self.a.sub(&o.a);
        self.b = self.b.sub(&o.b);
    }
}

impl MulAssign<&Fe> for Fe {
    fn mul_assign(&mut self, o: &Fe) {
        *self = &*self * o;
    }
}

impl From<i64> for Fe {
    fn from(n: i64) -> Fe {
        Fe::int(n)
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "({})w", self.b),
            _ => write!(f, "{} + ({})w", self.a, self.b),
        }
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({})", self)
    }
}

impl Serialize for Fe {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v = self.to_ints();
        let nums: Vec<serde_json::Number> = v
            .iter()
            .map(|x| serde_json::Number::from_str(&x.to_string()).expect("integer literal"))
            .collect();
        nums.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Fe {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Fe, D::Error> {
        let nums: Vec<serde_json::Number> = Vec::deserialize(d)?;
        if nums.len() != 4 {
            return Err(D::Error::custom("expected [a_num, a_den, b_num, b_den]"));
        }
        let mut v: Vec<BigInt> = Vec::with_capacity(4);
        for n in &nums {
            v.push(BigInt::from_str(&n.to_string()).map_err(D::Error::custom)?);
        }
        let arr: [BigInt; 4] = v.try_into().expect("length checked");
        Fe::from_ints(&arr).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn square_roots() {
        for x in [Fe::ints(3, -2), Fe::frac(4, 9), Fe::omega(), Fe::ints(-7, 5), Fe::int(-3)] {
            let y = &x * &x;
            let r = y.sqrt().unwrap();
            assert_eq!(&r * &r, y);
        }
        assert!(Fe::int(2).sqrt().is_none());
        assert!(Fe::omega().sqrt().is_none());
    }

    #[test]
    fn parse_forms() {
        for x in [Fe::ints(3, -2), Fe::frac(-4, 9), Fe::new(Rat::zero(), Rat::new(5, 7)), Fe::zero()] {
            assert_eq!(x.to_string().parse::<Fe>().unwrap(), x);
        }
        assert_eq!("1/2-3/4w".parse::<Fe>().unwrap(), Fe::new(Rat::new(1, 2), Rat::new(-3, 4)));
        assert_eq!("-w".parse::<Fe>().unwrap(), Fe::ints(0, -1));
        assert!("1/0".parse::<Fe>().is_err());
        assert!("x".parse::<Fe>().is_err());
    }

    #[test]
    fn relation() {
        let w = Fe::omega();
        assert_eq!(&w * &w, Fe::ints(-1, 1));
        assert_eq!(w.pow(3).unwrap(), Fe::int(-1));
    }

    #[test]
    fn json_shape() {
        let x = Fe::new(Rat::new(-3, 6), Rat::new(2, 1));
        let s = serde_json::to_string(&x).unwrap();
        assert_eq!(s, "[-1,2,2,1]");
        let y: Fe = serde_json::from_str(&s).unwrap();
        assert_eq!(x, y);
    }
}
