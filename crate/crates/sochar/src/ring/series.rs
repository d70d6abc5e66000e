//! Multivariate power series in a second alphabet, truncated at a total-degree
//! cap, with Laurent-polynomial coefficients in the first alphabet.
//!
//! All arithmetic discards terms above the cap, so equality at a given cap
//! means equality of the underlying identities modulo that degree.

use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::coeff::Coefficient;
use super::laurent::LaurentPoly;
use super::RingError;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncatedSeries {
    coeff_vars: usize,
    vars: usize,
    cap: usize,
    terms: BTreeMap<Vec<u32>, LaurentPoly>,
}

impl TruncatedSeries {
    pub fn zero(coeff_vars: usize, vars: usize, cap: usize) -> Self {
        TruncatedSeries {
            coeff_vars,
            vars,
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(coeff_vars: usize, vars: usize, cap: usize) -> Self {
        let mut s = Self::zero(coeff_vars, vars, cap);
        s.terms.insert(vec![0; vars], LaurentPoly::one(coeff_vars));
        s
    }

    pub fn constant(
        coeff_vars: usize,
        vars: usize,
        cap: usize,
        c: LaurentPoly,
    ) -> Result<Self, RingError> {
        Self::term(coeff_vars, vars, cap, vec![0; vars], c)
    }

    pub fn term(
        coeff_vars: usize,
        vars: usize,
        cap: usize,
        exp: Vec<u32>,
        c: LaurentPoly,
    ) -> Result<Self, RingError> {
        if exp.len() != vars {
            return Err(RingError::ShapeMismatch {
                detail: format!("series exponent length {} != vars {}", exp.len(), vars),
            });
        }
        if c.vars() != coeff_vars {
            return Err(RingError::ShapeMismatch {
                detail: format!("coefficient vars {} != {}", c.vars(), coeff_vars),
            });
        }
        let mut s = Self::zero(coeff_vars, vars, cap);
        if !c.is_zero() && exp.iter().map(|&d| d as usize).sum::<usize>() <= cap {
            s.terms.insert(exp, c);
        }
        Ok(s)
    }

    /// Interpret a Laurent polynomial in the series alphabet (all exponents
    /// must be integral and nonnegative) as a truncated series.
    pub fn from_polynomial(
        p: &LaurentPoly,
        coeff_vars: usize,
        cap: usize,
    ) -> Result<Self, RingError> {
        let vars = p.vars();
        let mut s = Self::zero(coeff_vars, vars, cap);
        for (e, c) in p.iter() {
            let mut exp = Vec::with_capacity(vars);
            let mut deg = 0usize;
            for &d in e {
                if d < 0 || d % 2 != 0 {
                    return Err(RingError::NotPolynomial);
                }
                exp.push((d / 2) as u32);
                deg += (d / 2) as usize;
            }
            if deg <= cap {
                s.terms
                    .insert(exp, LaurentPoly::constant(coeff_vars, c.clone()));
            }
        }
        Ok(s)
    }

    pub fn coeff_vars(&self) -> usize {
        self.coeff_vars
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<u32>, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> LaurentPoly {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(|| LaurentPoly::zero(self.coeff_vars))
    }

    fn check_shape(&self, rhs: &Self) -> Result<(), RingError> {
        if self.coeff_vars != rhs.coeff_vars || self.vars != rhs.vars || self.cap != rhs.cap {
            return Err(RingError::ShapeMismatch {
                detail: format!(
                    "series ({},{},{}) vs ({},{},{})",
                    self.coeff_vars, self.vars, self.cap, rhs.coeff_vars, rhs.vars, rhs.cap
                ),
            });
        }
        Ok(())
    }

    fn insert_add(&mut self, exp: Vec<u32>, c: LaurentPoly) {
        if c.is_zero() || exp.iter().map(|&d| d as usize).sum::<usize>() > self.cap {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().try_add(&c).expect("coefficient shape");
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_shape(rhs)?;
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.insert_add(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self, RingError> {
        self.try_add(&rhs.neg_ref())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, RingError> {
        self.check_shape(rhs)?;
        let mut out = Self::zero(self.coeff_vars, self.vars, self.cap);
        for (ea, ca) in &self.terms {
            let da: usize = ea.iter().map(|&d| d as usize).sum();
            for (eb, cb) in &rhs.terms {
                let db: usize = eb.iter().map(|&d| d as usize).sum();
                if da + db > self.cap {
                    continue;
                }
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_add(exp, ca.try_mul(cb)?);
            }
        }
        Ok(out)
    }

    pub fn neg_ref(&self) -> Self {
        TruncatedSeries {
            coeff_vars: self.coeff_vars,
            vars: self.vars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), c.neg_ref()))
                .collect(),
        }
    }

    /// Multiply every coefficient by a Laurent polynomial in the first alphabet.
    pub fn scale_poly(&self, p: &LaurentPoly) -> Result<Self, RingError> {
        if p.vars() != self.coeff_vars {
            return Err(RingError::ShapeMismatch {
                detail: format!("scale vars {} != coeff vars {}", p.vars(), self.coeff_vars),
            });
        }
        let mut out = Self::zero(self.coeff_vars, self.vars, self.cap);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.try_mul(p)?);
        }
        Ok(out)
    }

    /// Drop the cap to a smaller bound; truncation is a ring homomorphism.
    pub fn truncate(&self, new_cap: usize) -> Self {
        let mut out = Self::zero(self.coeff_vars, self.vars, new_cap.min(self.cap));
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.clone());
        }
        out
    }

    /// Divide every integer coefficient exactly by 2.
    pub fn try_halve(&self) -> Result<Self, RingError> {
        let two = LaurentPoly::constant(self.coeff_vars, Coefficient::from_i64(2));
        let mut out = Self::zero(self.coeff_vars, self.vars, self.cap);
        for (e, c) in &self.terms {
            out.insert_add(e.clone(), c.exact_div(&two)?);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(e, c)| json!({ "exp": e, "coeff": c.to_json() }))
            .collect();
        json!({
            "coeff_vars": self.coeff_vars,
            "vars": self.vars,
            "cap": self.cap,
            "terms": terms,
        })
    }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_add(rhs).expect("shape mismatch in +")
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_sub(rhs).expect("shape mismatch in -")
    }
}

impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.try_mul(rhs).expect("shape mismatch in *")
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        self.neg_ref()
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut mono = String::new();
            for (i, &d) in e.iter().enumerate() {
                if d == 0 {
                    continue;
                }
                if !mono.is_empty() {
                    mono.push('*');
                }
                if d == 1 {
                    mono.push_str(&format!("y{}", i + 1));
                } else {
                    mono.push_str(&format!("y{}^{}", i + 1, d));
                }
            }
            if mono.is_empty() {
                write!(f, "({})", c)?;
            } else {
                write!(f, "({})*{}", c, mono)?;
            }
        }
        Ok(())
    }
}

/// Truncated expansion of `1/(1 - m*y_j)` where `m` is a Laurent monomial (or
/// any polynomial) in the first alphabet.
pub fn geometric(
    coeff_vars: usize,
    vars: usize,
    cap: usize,
    m: &LaurentPoly,
    j: usize,
) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(coeff_vars, vars, cap);
    let mut power = LaurentPoly::one(coeff_vars);
    for d in 0..=cap {
        let mut exp = vec![0u32; vars];
        exp[j] = d as u32;
        out.insert_add(exp, power.clone());
        if d < cap {
            power = power.try_mul(m).expect("shape");
        }
    }
    out
}

/// Truncated expansion of `1/(1 - c)` for a series `c` with zero constant term.
pub fn inverse_one_minus(c: &TruncatedSeries) -> Result<TruncatedSeries, RingError> {
    if !c.coeff(&vec![0; c.vars()]).is_zero() {
        return Err(RingError::NotPolynomial);
    }
    let mut acc = TruncatedSeries::one(c.coeff_vars(), c.vars(), c.cap());
    let mut power = TruncatedSeries::one(c.coeff_vars(), c.vars(), c.cap());
    for _ in 1..=c.cap() {
        power = power.try_mul(c)?;
        if power.is_zero() {
            break;
        }
        acc = acc.try_add(&power)?;
    }
    Ok(acc)
}
