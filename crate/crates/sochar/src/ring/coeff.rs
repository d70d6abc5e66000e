//! Coefficient ring: arbitrary-precision integers, optionally extended by a
//! dense univariate polynomial in the interpolation parameter `a`.
//!
//! The zero integer is the unique zero; a polynomial that degenerates to a
//! constant is normalized back to the integer variant, so structural equality
//! is canonical equality.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;

use super::RingError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Coefficient {
    Int(BigInt),
    /// Coefficients in ascending degree; length >= 2 and no trailing zeros.
    Alpha(Vec<BigInt>),
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient::Int(BigInt::zero())
    }

    pub fn one() -> Self {
        Coefficient::Int(BigInt::one())
    }

    pub fn from_i64(v: i64) -> Self {
        Coefficient::Int(BigInt::from(v))
    }

    /// The interpolation parameter itself.
    pub fn alpha() -> Self {
        Coefficient::Alpha(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Coefficient::Int(v) if v.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Coefficient::Int(v) if v.is_one())
    }

    pub fn alpha_degree(&self) -> usize {
        match self {
            Coefficient::Int(_) => 0,
            Coefficient::Alpha(v) => v.len() - 1,
        }
    }

    fn normalize(mut v: Vec<BigInt>) -> Self {
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        match v.len() {
            0 => Coefficient::zero(),
            1 => Coefficient::Int(v.pop().unwrap()),
            _ => Coefficient::Alpha(v),
        }
    }

    fn as_vec(&self) -> Vec<BigInt> {
        match self {
            Coefficient::Int(c) => vec![c.clone()],
            Coefficient::Alpha(v) => v.clone(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Coefficient::Int(a + b),
            _ => {
                let a = self.as_vec();
                let b = rhs.as_vec();
                let mut out = vec![BigInt::zero(); a.len().max(b.len())];
                for (i, c) in a.iter().enumerate() {
                    out[i] += c;
                }
                for (i, c) in b.iter().enumerate() {
                    out[i] += c;
                }
                Self::normalize(out)
            }
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        match self {
            Coefficient::Int(a) => Coefficient::Int(-a),
            Coefficient::Alpha(v) => Coefficient::Alpha(v.iter().map(|c| -c).collect()),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        match (self, rhs) {
            (Coefficient::Int(a), Coefficient::Int(b)) => Coefficient::Int(a * b),
            _ => {
                let a = self.as_vec();
                let b = rhs.as_vec();
                let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
                for (i, ca) in a.iter().enumerate() {
                    if ca.is_zero() {
                        continue;
                    }
                    for (j, cb) in b.iter().enumerate() {
                        out[i + j] += ca * cb;
                    }
                }
                Self::normalize(out)
            }
        }
    }

    /// Exact division; any remainder is an error.
    pub fn exact_div(&self, den: &Self) -> Result<Self, RingError> {
        if den.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        match (self, den) {
            (Coefficient::Int(a), Coefficient::Int(b)) => {
                let (q, r) = a.div_rem(b);
                if r.is_zero() {
                    Ok(Coefficient::Int(q))
                } else {
                    Err(RingError::InexactDivision)
                }
            }
            (Coefficient::Alpha(v), Coefficient::Int(b)) => {
                let mut out = Vec::with_capacity(v.len());
                for c in v {
                    let (q, r) = c.div_rem(b);
                    if !r.is_zero() {
                        return Err(RingError::InexactDivision);
                    }
                    out.push(q);
                }
                Ok(Self::normalize(out))
            }
            (_, Coefficient::Alpha(d)) => {
                let mut rem = self.as_vec();
                if rem.len() < d.len() {
                    return Err(RingError::InexactDivision);
                }
                let mut quot = vec![BigInt::zero(); rem.len() - d.len() + 1];
                let dl = d.last().unwrap();
                loop {
                    while rem.last().map_or(false, |c| c.is_zero()) {
                        rem.pop();
                    }
                    if rem.is_empty() {
                        break;
                    }
                    if rem.len() < d.len() {
                        return Err(RingError::InexactDivision);
                    }
                    let (q, r) = rem.last().unwrap().div_rem(dl);
                    if !r.is_zero() {
                        return Err(RingError::InexactDivision);
                    }
                    let shift = rem.len() - d.len();
                    quot[shift] = q.clone();
                    for (i, c) in d.iter().enumerate() {
                        let t = &q * c;
                        rem[shift + i] -= t;
                    }
                }
                Ok(Self::normalize(quot))
            }
        }
    }

    /// Specialize the parameter to an integer value.
    pub fn substitute_alpha(&self, value: &BigInt) -> Self {
        match self {
            Coefficient::Int(c) => Coefficient::Int(c.clone()),
            Coefficient::Alpha(v) => {
                let mut acc = BigInt::zero();
                for c in v.iter().rev() {
                    acc = acc * value + c;
                }
                Coefficient::Int(acc)
            }
        }
    }

    pub fn abs_int(&self) -> Result<BigInt, RingError> {
        match self {
            Coefficient::Int(c) => Ok(c.abs()),
            Coefficient::Alpha(_) => Err(RingError::AlphaNotInteger),
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            Coefficient::Int(c) => Value::String(c.to_string()),
            Coefficient::Alpha(v) => {
                json!({ "alpha": v.iter().map(|c| c.to_string()).collect::<Vec<_>>() })
            }
        }
    }
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficient::Int(c) => write!(f, "{}", c),
            Coefficient::Alpha(v) => {
                let mut first = true;
                for (i, c) in v.iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    if first {
                        if c.is_negative() {
                            write!(f, "-")?;
                        }
                        first = false;
                    } else if c.is_negative() {
                        write!(f, " - ")?;
                    } else {
                        write!(f, " + ")?;
                    }
                    let a = c.abs();
                    if i == 0 {
                        write!(f, "{}", a)?;
                    } else {
                        if !a.is_one() {
                            write!(f, "{}*", a)?;
                        }
                        if i == 1 {
                            write!(f, "a")?;
                        } else {
                            write!(f, "a^{}", i)?;
                        }
                    }
                }
                if first {
                    write!(f, "0")?;
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_alpha_normalizes_to_int() {
        let a = Coefficient::alpha();
        let d = a.sub(&a);
        assert_eq!(d, Coefficient::zero());
        let c = a.mul(&Coefficient::zero());
        assert!(matches!(c, Coefficient::Int(_)));
    }

    #[test]
    fn alpha_exact_division() {
        // (1 - a^2) / (1 - a) = 1 + a
        let one = Coefficient::one();
        let a = Coefficient::alpha();
        let num = one.sub(&a.mul(&a));
        let den = one.sub(&a);
        let q = num.exact_div(&den).unwrap();
        assert_eq!(q, one.add(&a));
        assert!(num.exact_div(&a).is_err());
    }

    #[test]
    fn substitute() {
        // 2 - 3a at a = 2 -> -4
        let c = Coefficient::from_i64(2).sub(&Coefficient::from_i64(3).mul(&Coefficient::alpha()));
        assert_eq!(
            c.substitute_alpha(&BigInt::from(2)),
            Coefficient::from_i64(-4)
        );
    }
}
