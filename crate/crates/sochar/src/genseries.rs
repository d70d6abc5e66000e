//! Coefficient families of the generating functions that fill determinant
//! entries.
//!
//! Six families expand to Laurent polynomials in `x_1..x_N` (with `x^{-1}`
//! partners where the kind says so), and one family expands to truncated
//! power series. Coefficients are computed eagerly up to the requested order
//! by convolving per-variable geometric factors, then cached per family
//! instance: determinant entries re-request overlapping indices heavily.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::ring::{Coefficient, LaurentPoly, TruncatedSeries};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SeriesKind {
    /// prod_i 1/((1 - x_i z)(1 - x_i^{-1} z)); zero for n < 0.
    HPm,
    /// prod_i (1 + x_i z)(1 + x_i^{-1} z); a polynomial of degree 2N in z.
    EPm,
    /// prod_i 1/(1 - x_i z); ordinary complete homogeneous coefficients.
    HPlain,
    /// (1 - a z) * HPm: h_n - a h_{n-1}.
    HBarAlpha,
    /// 1/(1 - a z) * HPm: sum_k a^k h_{n-k}.
    HBcAlpha,
    /// (1 - a z^2) * HPm: h_n - a h_{n-2}.
    HTildeAlpha,
}

/// A cached family of z-expansion coefficients over a fixed alphabet.
pub struct SeriesFamily {
    kind: SeriesKind,
    vars: usize,
    cache: RefCell<HashMap<i64, LaurentPoly>>,
    inner_h: Option<Box<SeriesFamily>>,
}

impl SeriesFamily {
    pub fn new(kind: SeriesKind, vars: usize) -> Self {
        let inner_h = match kind {
            SeriesKind::HBarAlpha | SeriesKind::HBcAlpha | SeriesKind::HTildeAlpha => {
                Some(Box::new(SeriesFamily::new(SeriesKind::HPm, vars)))
            }
            _ => None,
        };
        SeriesFamily {
            kind,
            vars,
            cache: RefCell::new(HashMap::new()),
            inner_h,
        }
    }

    pub fn kind(&self) -> SeriesKind {
        self.kind
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    /// Coefficient of z^n; zero outside the support.
    pub fn coeff(&self, n: i64) -> LaurentPoly {
        if n < 0 {
            return LaurentPoly::zero(self.vars);
        }
        if let Some(p) = self.cache.borrow().get(&n) {
            return p.clone();
        }
        let p = self.compute(n);
        self.cache.borrow_mut().insert(n, p.clone());
        p
    }

    /// Fill the cache up to the given order.
    pub fn warm_up(&self, order: i64) {
        for n in 0..=order {
            let _ = self.coeff(n);
        }
    }

    fn compute(&self, n: i64) -> LaurentPoly {
        let base = match self.kind {
            SeriesKind::HPm => Some(BaseKind::Hpm),
            SeriesKind::EPm => Some(BaseKind::Epm),
            SeriesKind::HPlain => Some(BaseKind::Hplain),
            _ => None,
        };
        if let Some(base) = base {
            // fill the cache for the whole prefix in one pass
            let table = self.base_table(n, base);
            let mut cache = self.cache.borrow_mut();
            for (m, p) in table.iter().enumerate() {
                cache.entry(m as i64).or_insert_with(|| p.clone());
            }
            return table[n as usize].clone();
        }
        let h = self
            .inner_h
            .as_ref()
            .expect("parameter kinds carry an inner family");
        let a = LaurentPoly::constant(self.vars, Coefficient::alpha());
        match self.kind {
            SeriesKind::HBarAlpha => h
                .coeff(n)
                .try_sub(&h.coeff(n - 1).try_mul(&a).unwrap())
                .unwrap(),
            SeriesKind::HBcAlpha => {
                let mut acc = LaurentPoly::zero(self.vars);
                let mut apow = LaurentPoly::one(self.vars);
                for k in 0..=n {
                    acc = acc
                        .try_add(&h.coeff(n - k).try_mul(&apow).unwrap())
                        .unwrap();
                    if k < n {
                        apow = apow.try_mul(&a).unwrap();
                    }
                }
                acc
            }
            SeriesKind::HTildeAlpha => h
                .coeff(n)
                .try_sub(&h.coeff(n - 2).try_mul(&a).unwrap())
                .unwrap(),
            _ => unreachable!(),
        }
    }

    /// Per-variable convolution table for the three parameter-free kinds.
    fn base_table(&self, order: i64, base: BaseKind) -> Vec<LaurentPoly> {
        let order = order as usize;
        let mut table = vec![LaurentPoly::zero(self.vars); order + 1];
        table[0] = LaurentPoly::one(self.vars);
        for i in 0..self.vars {
            let mut next = vec![LaurentPoly::zero(self.vars); order + 1];
            for d in 0..=order {
                let factor = base.factor(self.vars, i, d);
                if factor.is_zero() {
                    continue;
                }
                for m in 0..=order - d {
                    if table[m].is_zero() {
                        continue;
                    }
                    next[m + d] = next[m + d]
                        .try_add(&table[m].try_mul(&factor).unwrap())
                        .unwrap();
                }
            }
            table = next;
        }
        table
    }
}

#[derive(Clone, Copy)]
enum BaseKind {
    Hpm,
    Epm,
    Hplain,
}

impl BaseKind {
    /// Coefficient of z^d in the single-variable factor for variable `i`.
    fn factor(self, vars: usize, i: usize, d: usize) -> LaurentPoly {
        match self {
            // 1/((1-x z)(1-x^{-1} z)): x^d + x^{d-2} + ... + x^{-d}
            BaseKind::Hpm => {
                let mut p = LaurentPoly::zero(vars);
                let mut e = -(d as i32);
                while e <= d as i32 {
                    p = p.try_add(&LaurentPoly::var_pow(vars, i, 2 * e)).unwrap();
                    e += 2;
                }
                p
            }
            // (1+xz)(1+x^{-1}z): 1, x + x^{-1}, 1
            BaseKind::Epm => match d {
                0 => LaurentPoly::one(vars),
                1 => LaurentPoly::var(vars, i)
                    .try_add(&LaurentPoly::var_pow(vars, i, -2))
                    .unwrap(),
                2 => LaurentPoly::one(vars),
                _ => LaurentPoly::zero(vars),
            },
            // 1/(1-xz): x^d
            BaseKind::Hplain => LaurentPoly::var_pow(vars, i, 2 * d as i32),
        }
    }
}

/// The symmetric family f_n: coefficients of
/// `prod_i 1/((1 - x_i z)(1 - x_i z^{-1}))`, materialized as truncated power
/// series in the alphabet itself. f_{-n} = f_n holds by construction.
pub struct FSeries {
    coeff_vars: usize,
    vars: usize,
    cap: usize,
    table: RefCell<Option<HashMap<i64, TruncatedSeries>>>,
}

impl FSeries {
    pub fn new(coeff_vars: usize, vars: usize, cap: usize) -> Self {
        FSeries {
            coeff_vars,
            vars,
            cap,
            table: RefCell::new(None),
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn coeff(&self, n: i64) -> TruncatedSeries {
        let n = n.abs();
        if n > self.cap as i64 {
            // minimum total degree of f_n is |n|
            return TruncatedSeries::zero(self.coeff_vars, self.vars, self.cap);
        }
        if self.table.borrow().is_none() {
            *self.table.borrow_mut() = Some(self.build_table());
        }
        self.table
            .borrow()
            .as_ref()
            .unwrap()
            .get(&n)
            .cloned()
            .unwrap_or_else(|| TruncatedSeries::zero(self.coeff_vars, self.vars, self.cap))
    }

    /// Convolve the per-variable expansions over the window |n| <= cap;
    /// anything outside has minimum degree above the cap.
    fn build_table(&self) -> HashMap<i64, TruncatedSeries> {
        let w = self.cap as i64;
        let zero = TruncatedSeries::zero(self.coeff_vars, self.vars, self.cap);
        let mut table: HashMap<i64, TruncatedSeries> = HashMap::new();
        table.insert(
            0,
            TruncatedSeries::one(self.coeff_vars, self.vars, self.cap),
        );
        for i in 0..self.vars {
            let mut next: HashMap<i64, TruncatedSeries> = HashMap::new();
            for d in -w..=w {
                let factor = self.single_var(i, d);
                if factor.is_zero() {
                    continue;
                }
                for (m, acc) in &table {
                    let n = m + d;
                    if n.abs() > w || acc.is_zero() {
                        continue;
                    }
                    let add = acc.try_mul(&factor).unwrap();
                    let entry = next.entry(n).or_insert_with(|| zero.clone());
                    *entry = entry.try_add(&add).unwrap();
                }
            }
            table = next;
        }
        table
    }

    /// Coefficient of z^d in 1/((1 - y_i z)(1 - y_i z^{-1})):
    /// y_i^{|d|} + y_i^{|d|+2} + ... truncated at the cap.
    fn single_var(&self, i: usize, d: i64) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(self.coeff_vars, self.vars, self.cap);
        let mut deg = d.unsigned_abs() as usize;
        while deg <= self.cap {
            let mut exp = vec![0u32; self.vars];
            exp[i] = deg as u32;
            s = s
                .try_add(
                    &TruncatedSeries::term(
                        self.coeff_vars,
                        self.vars,
                        self.cap,
                        exp,
                        LaurentPoly::one(self.coeff_vars),
                    )
                    .unwrap(),
                )
                .unwrap();
            deg += 2;
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Coefficient;
    use num_bigint::BigInt;

    fn xpm(vars: usize, i: usize) -> LaurentPoly {
        LaurentPoly::var(vars, i)
            .try_add(&LaurentPoly::var_pow(vars, i, -2))
            .unwrap()
    }

    #[test]
    fn h_pm_small_values() {
        let h = SeriesFamily::new(SeriesKind::HPm, 1);
        h.warm_up(2);
        assert!(h.coeff(-1).is_zero());
        assert!(h.coeff(0).is_one());
        assert_eq!(h.coeff(1), xpm(1, 0));
        // h_2 = x^2 + 1 + x^-2
        let expect = LaurentPoly::var_pow(1, 0, 4)
            .try_add(&LaurentPoly::one(1))
            .unwrap()
            .try_add(&LaurentPoly::var_pow(1, 0, -4))
            .unwrap();
        assert_eq!(h.coeff(2), expect);
    }

    #[test]
    fn e_pm_small_values() {
        let e = SeriesFamily::new(SeriesKind::EPm, 1);
        assert!(e.coeff(0).is_one());
        assert_eq!(e.coeff(1), xpm(1, 0));
        assert!(e.coeff(2).is_one());
        assert!(e.coeff(3).is_zero());
    }

    #[test]
    fn alpha_families_at_one_variable() {
        let hbar = SeriesFamily::new(SeriesKind::HBarAlpha, 1);
        let expect = xpm(1, 0)
            .try_sub(&LaurentPoly::constant(1, Coefficient::alpha()))
            .unwrap();
        assert_eq!(hbar.coeff(1), expect);

        let hbc = SeriesFamily::new(SeriesKind::HBcAlpha, 1);
        let expect = xpm(1, 0)
            .try_add(&LaurentPoly::constant(1, Coefficient::alpha()))
            .unwrap();
        assert_eq!(hbc.coeff(1), expect);

        let htilde = SeriesFamily::new(SeriesKind::HTildeAlpha, 1);
        assert_eq!(htilde.coeff(1), xpm(1, 0));
    }

    #[test]
    fn alpha_families_specialize_to_h() {
        let zero = BigInt::from(0);
        for vars in 1..=2usize {
            let h = SeriesFamily::new(SeriesKind::HPm, vars);
            for kind in [
                SeriesKind::HBarAlpha,
                SeriesKind::HBcAlpha,
                SeriesKind::HTildeAlpha,
            ] {
                let fam = SeriesFamily::new(kind, vars);
                for n in 0..=6 {
                    assert_eq!(fam.coeff(n).substitute_alpha(&zero), h.coeff(n));
                }
            }
        }
    }

    #[test]
    fn alpha_families_invert_their_denominators() {
        // Independent oracle from the defining products. With
        // d_m = (-1)^m e_m(x^pm) the full denominator expansion, the three
        // families must satisfy
        //   sum_k hbar_k d_{n-k}          = [z^n] (1 - a z)
        //   sum_k hbc_k  d_{n-k} (1,-a)-convolved = delta_{n,0}
        //   sum_k htilde_k d_{n-k}        = [z^n] (1 - a z^2)
        let alpha = LaurentPoly::constant(2, Coefficient::alpha());
        let vars = 2usize;
        let e = SeriesFamily::new(SeriesKind::EPm, vars);
        let signed_e = |m: i64| {
            let v = e.coeff(m);
            if m % 2 == 1 {
                v.neg_ref()
            } else {
                v
            }
        };
        let convolve = |fam: &SeriesFamily, n: i64| {
            let mut acc = LaurentPoly::zero(vars);
            for k in 0..=n {
                acc = acc
                    .try_add(&fam.coeff(k).try_mul(&signed_e(n - k)).unwrap())
                    .unwrap();
            }
            acc
        };
        let hbar = SeriesFamily::new(SeriesKind::HBarAlpha, vars);
        let hbc = SeriesFamily::new(SeriesKind::HBcAlpha, vars);
        let htilde = SeriesFamily::new(SeriesKind::HTildeAlpha, vars);
        for n in 0..=7i64 {
            let expect_bar = match n {
                0 => LaurentPoly::one(vars),
                1 => alpha.neg_ref(),
                _ => LaurentPoly::zero(vars),
            };
            assert_eq!(convolve(&hbar, n), expect_bar, "hbar at n={n}");
            let expect_tilde = match n {
                0 => LaurentPoly::one(vars),
                2 => alpha.neg_ref(),
                _ => LaurentPoly::zero(vars),
            };
            assert_eq!(convolve(&htilde, n), expect_tilde, "htilde at n={n}");
            // for hbc the denominator gains the extra (1 - a z) factor
            let mut acc = convolve(&hbc, n);
            if n >= 1 {
                let prev = convolve(&hbc, n - 1);
                acc = acc.try_sub(&prev.try_mul(&alpha).unwrap()).unwrap();
            }
            let expect_bc = if n == 0 {
                LaurentPoly::one(vars)
            } else {
                LaurentPoly::zero(vars)
            };
            assert_eq!(acc, expect_bc, "hbc at n={n}");
        }
    }

    #[test]
    fn h_e_convolution_is_delta() {
        for vars in 1..=3usize {
            let h = SeriesFamily::new(SeriesKind::HPm, vars);
            let e = SeriesFamily::new(SeriesKind::EPm, vars);
            for n in 0..=8i64 {
                let mut acc = LaurentPoly::zero(vars);
                for k in 0..=n {
                    let term = h.coeff(k).try_mul(&e.coeff(n - k)).unwrap();
                    let term = if (n - k) % 2 == 1 {
                        term.neg_ref()
                    } else {
                        term
                    };
                    acc = acc.try_add(&term).unwrap();
                }
                if n == 0 {
                    assert!(acc.is_one());
                } else {
                    assert!(acc.is_zero(), "convolution failed at n={} vars={}", n, vars);
                }
            }
        }
    }

    #[test]
    fn f_symmetry_and_one_variable_values() {
        let f = FSeries::new(0, 1, 5);
        assert_eq!(f.coeff(1), f.coeff(-1));
        // f_1 = y + y^3 + y^5 at cap 5
        let mut expect = TruncatedSeries::zero(0, 1, 5);
        for d in [1u32, 3, 5] {
            expect = expect
                .try_add(&TruncatedSeries::term(0, 1, 5, vec![d], LaurentPoly::one(0)).unwrap())
                .unwrap();
        }
        assert_eq!(f.coeff(1), expect);
    }

    #[test]
    fn f_matches_h_convolution() {
        // f_n = sum_i h_i h_{i+n} truncated
        for vars in 1..=2usize {
            let cap = 8usize;
            let f = FSeries::new(0, vars, cap);
            let h = SeriesFamily::new(SeriesKind::HPlain, vars);
            for n in 0..=4i64 {
                let mut acc = TruncatedSeries::zero(0, vars, cap);
                for i in 0..=cap as i64 {
                    let prod = h.coeff(i).try_mul(&h.coeff(i + n)).unwrap();
                    acc = acc
                        .try_add(&TruncatedSeries::from_polynomial(&prod, 0, cap).unwrap())
                        .unwrap();
                }
                assert_eq!(f.coeff(n), acc, "f_{} mismatch at {} vars", n, vars);
            }
        }
    }
}
