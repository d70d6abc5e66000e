//! Named identity suites. Each suite computes a left and a right side by
//! independent routes and reports exact equality per instance.
//!
//! Truncated suites enumerate partition sums up to a weight bound chosen so
//! that every omitted term sits entirely above the degree cap; the bound
//! arguments are documented on each suite. Every suite also carries one
//! documented mutation of its right-hand side, used to demonstrate that the
//! comparator can fail:
//!
//! * `cauchy_so`: the numerator factor (1 + y_1) is dropped.
//! * `cauchy_reduced`: the kernel factor (1 - x_1^{-1} y_1) is dropped.
//! * `skew_cauchy_so`: the kernel prefactor is dropped entirely.
//! * `toeplitz_hankel`: the first identity's reflected shift 2l+2 becomes 2l+1.
//! * `littlewood`: the all-partition case drops prod_i 1/(1 - x_i).
//! * `transitions`: a sign is inserted into the even-orthogonal sum.
//! * `branching`: the inner sum keeps only the zero partition.
//! * `vandermonde`: the factor (1 - x_1) becomes (1 + x_1).
//! * `orthogonality`: the witness-word sign compensation is dropped.
//! * `dual_pairing`: the sign (-1)^{|mu|} is dropped from the closed form.

use rayon::prelude::*;
use serde_json::{json, Value};
use std::time::{Duration, Instant};

use crate::characters::{
    dual_skew_fn, o_char, schur, so_bialternant, so_jt, so_skew_jt, sp_char, DualKind,
};
use crate::partitions::{
    epsilon_subtractions, generalized_partitions, interlacings_same_length, partitions_up_to,
    GeneralizedPartition,
};
use crate::ring::{
    det_auto, geometric, inverse_one_minus, LaurentPoly, SquareMatrix, TruncatedSeries,
};

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: &'static str,
    pub instance: Value,
    pub pass: bool,
    pub detail: Option<String>,
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub wall: Duration,
}

impl SuiteReport {
    /// Canonical JSON; wall time is excluded so that identical invocations
    /// produce byte-identical streams.
    pub fn to_json(&self) -> Value {
        let mut obj = json!({
            "suite": self.suite,
            "instance": self.instance,
            "status": if self.pass { "pass" } else { "fail" },
        });
        if let Some(d) = &self.detail {
            obj["detail"] = Value::String(d.clone());
        }
        if !self.pass {
            if let Some(l) = &self.lhs {
                obj["lhs"] = l.clone();
            }
            if let Some(r) = &self.rhs {
                obj["rhs"] = r.clone();
            }
        }
        obj
    }
}

/// One named comparison inside a suite instance.
struct Check {
    label: String,
    lhs: Value,
    rhs: Value,
    equal: bool,
}

impl Check {
    fn series(label: impl Into<String>, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Self {
        Check {
            label: label.into(),
            lhs: lhs.to_json(),
            rhs: rhs.to_json(),
            equal: lhs == rhs,
        }
    }

    fn poly(label: impl Into<String>, lhs: &LaurentPoly, rhs: &LaurentPoly) -> Self {
        Check {
            label: label.into(),
            lhs: lhs.to_json(),
            rhs: rhs.to_json(),
            equal: lhs == rhs,
        }
    }

    fn fact(label: impl Into<String>, ok: bool) -> Self {
        Check {
            label: label.into(),
            lhs: Value::Bool(ok),
            rhs: Value::Bool(true),
            equal: ok,
        }
    }
}

fn assemble(
    suite: &'static str,
    instance: Value,
    checks: Vec<Check>,
    detail: Option<String>,
    started: Instant,
) -> SuiteReport {
    let failing = checks.iter().find(|c| !c.equal);
    match failing {
        None => SuiteReport {
            suite,
            instance,
            pass: true,
            detail,
            lhs: None,
            rhs: None,
            wall: started.elapsed(),
        },
        Some(c) => SuiteReport {
            suite,
            instance,
            pass: false,
            detail: Some(match &detail {
                Some(d) => format!("{}; failed: {}", d, c.label),
                None => format!("failed: {}", c.label),
            }),
            lhs: Some(c.lhs.clone()),
            rhs: Some(c.rhs.clone()),
            wall: started.elapsed(),
        },
    }
}

/// Expansion of prod_{i<nx} prod_{j<k} 1/((1 - x_i y_j)(1 - x_i^{-1} y_j)).
/// With `drop_first_inverse` the (1 - x_1^{-1} y_1) factor is omitted.
fn cauchy_kernel(nx: usize, k: usize, cap: usize, drop_first_inverse: bool) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(nx, k, cap);
    for i in 0..nx {
        for j in 0..k {
            let xp = LaurentPoly::var(nx, i);
            acc = acc.try_mul(&geometric(nx, k, cap, &xp, j)).unwrap();
            if drop_first_inverse && i == 0 && j == 0 {
                continue;
            }
            let xm = LaurentPoly::var_pow(nx, i, -2);
            acc = acc.try_mul(&geometric(nx, k, cap, &xm, j)).unwrap();
        }
    }
    acc
}

/// Series expansion of 1/(1 - m) for a monomial m in the series alphabet.
fn inv_one_minus_mono(nx: usize, k: usize, cap: usize, mono: &[u32]) -> TruncatedSeries {
    let step: usize = mono.iter().map(|&d| d as usize).sum();
    let mut acc = TruncatedSeries::zero(nx, k, cap);
    let mut m = 0usize;
    while m * step <= cap {
        let exp: Vec<u32> = mono.iter().map(|&d| d * m as u32).collect();
        acc = acc
            .try_add(&TruncatedSeries::term(nx, k, cap, exp, LaurentPoly::one(nx)).unwrap())
            .unwrap();
        m += 1;
        if step == 0 {
            break;
        }
    }
    acc
}

/// Series expansion of 1/(1 + x_j) = 1/(1 - (-x_j)).
fn inv_one_plus_var(nx: usize, k: usize, cap: usize, j: usize) -> TruncatedSeries {
    let mut exp = vec![0u32; k];
    exp[j] = 1;
    let minus_xj = TruncatedSeries::term(nx, k, cap, exp, LaurentPoly::one(nx))
        .unwrap()
        .neg_ref();
    inverse_one_minus(&minus_xj).unwrap()
}

fn pjson(p: &GeneralizedPartition) -> Value {
    p.to_json()
}

/// Cauchy identity for odd orthogonal characters against Schur polynomials:
/// sum over partitions of length <= N of so_mu(x) s_mu(y) equals
/// prod (1 + y_k) prod_{k<l} (1 - y_k y_l) / prod (1 - x_i y_j)(1 - x_i^{-1} y_j),
/// truncated at total y-degree `cap`. Since s_mu is homogeneous of degree
/// |mu|, the mu-sum stops at |mu| <= cap with nothing omitted below the cap.
pub fn suite_cauchy_so(n: usize, cap: usize, mutate: bool) -> SuiteReport {
    let t = Instant::now();
    let instance = json!({ "n": n, "deg": cap, "mutate": mutate });
    let mut lhs = TruncatedSeries::zero(n, n, cap);
    for mu in partitions_up_to(cap, n) {
        let so = so_jt(&mu, n).unwrap();
        let s = schur(&mu, n).unwrap();
        let term = TruncatedSeries::from_polynomial(&s, n, cap)
            .unwrap()
            .scale_poly(&so)
            .unwrap();
        lhs = lhs.try_add(&term).unwrap();
    }
    let mut numerator = LaurentPoly::one(n);
    for kv in 0..n {
        if mutate && kv == 0 {
            continue;
        }
        let f = LaurentPoly::one(n)
            .try_add(&LaurentPoly::var(n, kv))
            .unwrap();
        numerator = numerator.try_mul(&f).unwrap();
    }
    for a in 0..n {
        for b in a + 1..n {
            let f = LaurentPoly::one(n)
                .try_sub(
                    &LaurentPoly::var(n, a)
                        .try_mul(&LaurentPoly::var(n, b))
                        .unwrap(),
                )
                .unwrap();
            numerator = numerator.try_mul(&f).unwrap();
        }
    }
    let rhs = TruncatedSeries::from_polynomial(&numerator, n, cap)
        .unwrap()
        .try_mul(&cauchy_kernel(n, n, cap, false))
        .unwrap();
    let checks = vec![Check::series("cauchy", &lhs, &rhs)];
    assemble("cauchy_so", instance, checks, None, t)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReducedKind {
    Sp,
    So,
    O,
}

impl ReducedKind {
    pub fn name(self) -> &'static str {
        match self {
            ReducedKind::Sp => "sp",
            ReducedKind::So => "so",
            ReducedKind::O => "o",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "sp" => Some(ReducedKind::Sp),
            "so" => Some(ReducedKind::So),
            "o" => Some(ReducedKind::O),
            _ => None,
        }
    }
}

/// Reduced Cauchy identities at lambda = mu = 0 and K = N:
/// sum_rho X_rho(x) X*_rho(y) = prod 1/((1 - x_i y_j)(1 - x_i^{-1} y_j)),
/// plus the classical identities against s_rho(y). The rho-sum stops at
/// |rho| <= cap: every entry product in the dual determinant has minimum
/// y-degree at least |rho|.
///
/// The even orthogonal dual determinant is evaluated in both readings: the
/// raw determinant, and the determinant divided by two for a zero last index
/// (the reflection rule behind the O* entries has a fixed point there, which
/// duplicates every expansion term). The report records which reading holds;
/// the corrected one is the pass criterion.
pub fn suite_cauchy_reduced(kind: ReducedKind, n: usize, cap: usize, mutate: bool) -> SuiteReport {
    let t = Instant::now();
    let instance = json!({ "kind": kind.name(), "n": n, "deg": cap, "mutate": mutate });
    let zero_label = GeneralizedPartition::empty().padded(n);
    let charfn = |p: &GeneralizedPartition| match kind {
        ReducedKind::Sp => sp_char(p, n).unwrap(),
        ReducedKind::So => so_jt(p, n).unwrap(),
        ReducedKind::O => o_char(p, n).unwrap(),
    };
    let dual = match kind {
        ReducedKind::Sp => DualKind::SpStar,
        ReducedKind::So => DualKind::SoStar,
        ReducedKind::O => DualKind::OStar,
    };
    let mut dual_raw = TruncatedSeries::zero(n, n, cap);
    let mut classical = TruncatedSeries::zero(n, n, cap);
    for rho in generalized_partitions(cap, n) {
        let ch = charfn(&rho);
        let star = dual_skew_fn(dual, &rho, &zero_label, n, n, cap).unwrap();
        dual_raw = dual_raw.try_add(&star.scale_poly(&ch).unwrap()).unwrap();
    }
    for rho in partitions_up_to(cap, n) {
        let ch = charfn(&rho);
        let s = schur(&rho, n).unwrap();
        classical = classical
            .try_add(
                &TruncatedSeries::from_polynomial(&s, n, cap)
                    .unwrap()
                    .scale_poly(&ch)
                    .unwrap(),
            )
            .unwrap();
    }
    let kernel = cauchy_kernel(n, n, cap, mutate);
    let mut checks = Vec::new();
    let mut detail = None;
    match kind {
        ReducedKind::O => {
            let raw_matches = dual_raw == kernel;
            let corrected = dual_raw.try_halve();
            let corrected_matches = corrected.as_ref().map_or(false, |c| *c == kernel);
            detail = Some(format!(
                "dual readings: raw determinant {}, halved {}",
                if raw_matches { "matches" } else { "differs" },
                if corrected_matches {
                    "matches"
                } else {
                    "differs"
                }
            ));
            match corrected {
                Ok(c) => checks.push(Check::series("dual cauchy (halved)", &c, &kernel)),
                Err(_) => checks.push(Check::fact("dual determinant divisible by two", false)),
            }
        }
        _ => checks.push(Check::series("dual cauchy", &dual_raw, &kernel)),
    }
    // classical prefactors
    let mut pref = LaurentPoly::one(n);
    match kind {
        ReducedKind::Sp | ReducedKind::So => {
            if kind == ReducedKind::So {
                for j in 0..n {
                    pref = pref
                        .try_mul(
                            &LaurentPoly::one(n)
                                .try_add(&LaurentPoly::var(n, j))
                                .unwrap(),
                        )
                        .unwrap();
                }
            }
            for a in 0..n {
                for b in a + 1..n {
                    let f = LaurentPoly::one(n)
                        .try_sub(
                            &LaurentPoly::var(n, a)
                                .try_mul(&LaurentPoly::var(n, b))
                                .unwrap(),
                        )
                        .unwrap();
                    pref = pref.try_mul(&f).unwrap();
                }
            }
        }
        ReducedKind::O => {
            for a in 0..n {
                for b in a..n {
                    let f = LaurentPoly::one(n)
                        .try_sub(
                            &LaurentPoly::var(n, a)
                                .try_mul(&LaurentPoly::var(n, b))
                                .unwrap(),
                        )
                        .unwrap();
                    pref = pref.try_mul(&f).unwrap();
                }
            }
        }
    }
    let classical_rhs = TruncatedSeries::from_polynomial(&pref, n, cap)
        .unwrap()
        .try_mul(&kernel)
        .unwrap();
    checks.push(Check::series(
        "classical cauchy",
        &classical,
        &classical_rhs,
    ));
    assemble("cauchy_reduced", instance, checks, detail, t)
}

/// Skew Cauchy identity: for mu of declared length l and lambda contained in
/// length l+N,
/// sum_rho so_{rho/mu}(x) SO*_{rho/lambda}(y)
///   = kernel * sum_tau so_{lambda/tau}(x) SO*_{mu/tau}(y).
/// The rho-sum stops at |rho| <= |lambda| + cap and the tau-sum at
/// |tau| <= |mu| + cap: the dual determinant for rho/lambda has minimum
/// y-degree |rho| - |lambda| (entrywise bound on the f-indices), so omitted
/// terms cannot reach the cap; symmetrically for tau.
pub fn suite_skew_cauchy_so(
    lambda: &GeneralizedPartition,
    mu: &GeneralizedPartition,
    n: usize,
    k: usize,
    cap: usize,
    mutate: bool,
) -> SuiteReport {
    let t = Instant::now();
    let instance = json!({
        "lambda": pjson(lambda), "mu": pjson(mu), "n": n, "k": k, "deg": cap, "mutate": mutate
    });
    let l = mu.len();
    let lam_padded = lambda.padded(l + n);
    let rho_bound = (lambda.weight_int() as usize) + cap;
    let mut lhs = TruncatedSeries::zero(n, k, cap);
    for rho in generalized_partitions(rho_bound, l + n) {
        let so = so_skew_jt(&rho, mu, n).unwrap();
        if so.is_zero() {
            continue;
        }
        let star = dual_skew_fn(DualKind::SoStar, &rho, &lam_padded, n, k, cap).unwrap();
        lhs = lhs.try_add(&star.scale_poly(&so).unwrap()).unwrap();
    }
    let tau_bound = (mu.weight_int() as usize) + cap;
    let mut tau_sum = TruncatedSeries::zero(n, k, cap);
    for tau in generalized_partitions(tau_bound, l) {
        let so = so_skew_jt(&lam_padded, &tau, n).unwrap();
        if so.is_zero() {
            continue;
        }
        let star = dual_skew_fn(DualKind::SoStar, mu, &tau, n, k, cap).unwrap();
        tau_sum = tau_sum.try_add(&star.scale_poly(&so).unwrap()).unwrap();
    }
    let rhs = if mutate {
        tau_sum
    } else {
        cauchy_kernel(n, k, cap, false).try_mul(&tau_sum).unwrap()
    };
    let checks = vec![Check::series("skew cauchy", &lhs, &rhs)];
    assemble("skew_cauchy_so", instance, checks, None, t)
}

/// Toeplitz/Hankel determinants in the symmetric f-family over x_1..x_l:
/// with a = lambda_i - i + j,
///   det(f_a - f_{lambda_i - i - j + 2l + 2}) = s_lambda / prod_{i<j}(1 - x_i x_j)
///   det(f_a - f_{lambda_i - i - j + 2l + 1}) = s_lambda / (prod_j (1 + x_j) prod_{i<j}(1 - x_i x_j))
///   det(f_a + f_{lambda_i - i - j + 2l}) / 2 = s_lambda / prod_{i<=j}(1 - x_i x_j)
///
/// In the third determinant the reflected index at column j = l coincides
/// with the direct one, so the last column is identically doubled and the
/// determinant always carries an exact factor of two, not only when the last
/// part vanishes. The halving is performed by exact division; an inexact
/// halving is itself a failure.
pub fn suite_toeplitz_hankel(
    lambda: &GeneralizedPartition,
    l: usize,
    cap: usize,
    mutate: bool,
) -> SuiteReport {
    let t = Instant::now();
    let lam = lambda.padded(l);
    let instance = json!({ "lambda": pjson(&lam), "l": l, "deg": cap, "mutate": mutate });
    let f = crate::genseries::FSeries::new(0, l, cap);
    let fdet = |plus: bool, shift: i64| -> TruncatedSeries {
        if l == 0 {
            return TruncatedSeries::one(0, l, cap);
        }
        let rows: Vec<Vec<TruncatedSeries>> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| {
                        let (i1, j1) = (i as i64 + 1, j as i64 + 1);
                        let a = f.coeff(lam.part_int(i) - i1 + j1);
                        let b = f.coeff(lam.part_int(i) - i1 - j1 + shift);
                        if plus {
                            a.try_add(&b).unwrap()
                        } else {
                            a.try_sub(&b).unwrap()
                        }
                    })
                    .collect()
            })
            .collect();
        crate::ring::det_cofactor(&SquareMatrix::new(rows).unwrap())
    };
    let s = TruncatedSeries::from_polynomial(&schur(&lam, l).unwrap(), 0, cap).unwrap();
    let mut pair_product = TruncatedSeries::one(0, l, cap); // prod_{i<j} 1/(1-x_i x_j)
    for a in 0..l {
        for b in a + 1..l {
            let mut mono = vec![0u32; l];
            mono[a] = 1;
            mono[b] = 1;
            pair_product = pair_product
                .try_mul(&inv_one_minus_mono(0, l, cap, &mono))
                .unwrap();
        }
    }
    let mut all_pairs = pair_product.clone(); // prod_{i<=j} 1/(1-x_i x_j)
    for a in 0..l {
        let mut mono = vec![0u32; l];
        mono[a] = 2;
        all_pairs = all_pairs
            .try_mul(&inv_one_minus_mono(0, l, cap, &mono))
            .unwrap();
    }
    let mut plus_factor = TruncatedSeries::one(0, l, cap); // prod_j 1/(1+x_j)
    for j in 0..l {
        plus_factor = plus_factor
            .try_mul(&inv_one_plus_var(0, l, cap, j))
            .unwrap();
    }

    let shift1 = if mutate {
        2 * l as i64 + 1
    } else {
        2 * l as i64 + 2
    };
    let d1 = fdet(false, shift1);
    let rhs1 = s.try_mul(&pair_product).unwrap();
    let d2 = fdet(false, 2 * l as i64 + 1);
    let rhs2 = s
        .try_mul(&pair_product)
        .unwrap()
        .try_mul(&plus_factor)
        .unwrap();
    let d3 = fdet(true, 2 * l as i64);
    let rhs3 = s.try_mul(&all_pairs).unwrap();

    let mut checks = vec![
        Check::series("hankel minus, shift 2l+2", &d1, &rhs1),
        Check::series("hankel minus, shift 2l+1", &d2, &rhs2),
    ];
    match d3.try_halve() {
        Ok(h) => checks.push(Check::series("hankel plus, shift 2l, halved", &h, &rhs3)),
        Err(_) => checks.push(Check::fact(
            "hankel plus determinant divisible by two",
            false,
        )),
    }
    assemble("toeplitz_hankel", instance, checks, None, t)
}

/// Classical Littlewood identities over x_1..x_l, truncated at `cap`; the
/// partition sums stop at |lambda| <= cap:
///   sum over even-conjugate lambda of s_lambda = prod_{i<j} 1/(1 - x_i x_j)
///   sum over all lambda of s_lambda = prod_i 1/(1-x_i) prod_{i<j} 1/(1 - x_i x_j)
///   sum over even lambda of s_lambda = prod_{i<=j} 1/(1 - x_i x_j)
pub fn suite_littlewood(l: usize, cap: usize, mutate: bool) -> SuiteReport {
    let t = Instant::now();
    let instance = json!({ "l": l, "deg": cap, "mutate": mutate });
    let mut conj_even = TruncatedSeries::zero(0, l, cap);
    let mut all = TruncatedSeries::zero(0, l, cap);
    let mut even = TruncatedSeries::zero(0, l, cap);
    for lam in partitions_up_to(cap, l) {
        let s = TruncatedSeries::from_polynomial(&schur(&lam, l).unwrap(), 0, cap).unwrap();
        all = all.try_add(&s).unwrap();
        if lam.is_even() {
            even = even.try_add(&s).unwrap();
        }
        if lam.conjugate().unwrap().is_even() {
            conj_even = conj_even.try_add(&s).unwrap();
        }
    }
    let mut pair_product = TruncatedSeries::one(0, l, cap);
    for a in 0..l {
        for b in a + 1..l {
            let mut mono = vec![0u32; l];
            mono[a] = 1;
            mono[b] = 1;
            pair_product = pair_product
                .try_mul(&inv_one_minus_mono(0, l, cap, &mono))
                .unwrap();
        }
    }
    let mut all_pairs = pair_product.clone();
    for a in 0..l {
        let mut mono = vec![0u32; l];
        mono[a] = 2;
        all_pairs = all_pairs
            .try_mul(&inv_one_minus_mono(0, l, cap, &mono))
            .unwrap();
    }
    let mut single = TruncatedSeries::one(0, l, cap);
    if !mutate {
        for j in 0..l {
            let mut mono = vec![0u32; l];
            mono[j] = 1;
            single = single
                .try_mul(&inv_one_minus_mono(0, l, cap, &mono))
                .unwrap();
        }
    }
    let checks = vec![
        Check::series("conjugate-even sum", &conj_even, &pair_product),
        Check::series(
            "all-partition sum",
            &all,
            &single.try_mul(&pair_product).unwrap(),
        ),
        Check::series("even sum", &even, &all_pairs),
    ];
    assemble("littlewood", instance, checks, None, t)
}

/// Transition identities composed both ways for every lambda in the grid:
/// so_lambda = sum over 0/1 subtractions of sp, and
/// so_lambda = sum over same-length interlacings of o.
pub fn suite_transitions(n: usize, max_weight: usize, mutate: bool) -> SuiteReport {
    let t = Instant::now();
    let instance = json!({ "n": n, "max_weight": max_weight, "mutate": mutate });
    let mut checks = Vec::new();
    for lambda in partitions_up_to(max_weight, n) {
        let so = so_jt(&lambda, n).unwrap();
        let padded = lambda.padded(n);
        let mut sp_sum = LaurentPoly::zero(n);
        for (mu, _) in epsilon_subtractions(&padded) {
            sp_sum = sp_sum.try_add(&sp_char(&mu, n).unwrap()).unwrap();
        }
        checks.push(Check::poly(
            format!("so = sum sp at {lambda}"),
            &so,
            &sp_sum,
        ));
        let mut o_sum = LaurentPoly::zero(n);
        for mu in interlacings_same_length(&padded) {
            let term = o_char(&mu, n).unwrap();
            let negate = mutate && (lambda.weight_int() - mu.weight_int()) % 2 != 0;
            o_sum = if negate {
                o_sum.try_sub(&term).unwrap()
            } else {
                o_sum.try_add(&term).unwrap()
            };
        }
        checks.push(Check::poly(format!("so = sum o at {lambda}"), &so, &o_sum));
    }
    assemble("transitions", instance, checks, None, t)
}

/// Branching at one inner and one outer variable: the two-variable character
/// equals the sum over inner partitions of so_mu(y) so_{lambda/mu}(x). The
/// mu-sum runs one step past containment and the suite asserts that the
/// extra skew character vanishes rather than assuming it.
pub fn suite_branching(lambda: &GeneralizedPartition, mutate: bool) -> SuiteReport {
    let t = Instant::now();
    let instance = json!({ "lambda": pjson(lambda), "mutate": mutate });
    let combined = so_bialternant(lambda, 2).unwrap();
    let lam_padded = lambda.padded(2);
    let top = lambda.part_int(0) + 1;
    let mut checks = Vec::new();
    let mut sum = LaurentPoly::zero(2);
    for t_part in 0..=top {
        if mutate && t_part > 0 {
            continue;
        }
        let mu = GeneralizedPartition::from_ints(&[t_part]).unwrap();
        let outer = so_jt(&mu, 1).unwrap().embed(2, 0).unwrap();
        let skew = so_skew_jt(&lam_padded, &mu, 1)
            .unwrap()
            .embed(2, 1)
            .unwrap();
        if t_part == top {
            checks.push(Check::fact(
                format!("skew character vanishes past containment at inner {t_part}"),
                skew.is_zero(),
            ));
        }
        sum = sum.try_add(&outer.try_mul(&skew).unwrap()).unwrap();
    }
    checks.push(Check::poly("branching", &combined, &sum));
    assemble("branching", instance, checks, None, t)
}

/// Vandermonde-type identity:
/// det(x_i^{j-1} - x_i^{2N-j}) = prod_i (1 - x_i) prod_{i<j} (x_j - x_i) (1 - x_i x_j).
pub fn suite_vandermonde(n: usize, mutate: bool) -> SuiteReport {
    let t = Instant::now();
    let instance = json!({ "n": n, "mutate": mutate });
    let rows: Vec<Vec<LaurentPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = LaurentPoly::var_pow(n, i, 2 * j as i32);
                    let b = LaurentPoly::var_pow(n, i, 2 * (2 * n as i32 - 1 - j as i32));
                    a.try_sub(&b).unwrap()
                })
                .collect()
        })
        .collect();
    let lhs = if n == 0 {
        LaurentPoly::one(0)
    } else {
        det_auto(&SquareMatrix::new(rows).unwrap())
    };
    let mut rhs = LaurentPoly::one(n);
    for i in 0..n {
        let sign_flip = mutate && i == 0;
        let xi = LaurentPoly::var(n, i);
        let f = if sign_flip {
            LaurentPoly::one(n).try_add(&xi).unwrap()
        } else {
            LaurentPoly::one(n).try_sub(&xi).unwrap()
        };
        rhs = rhs.try_mul(&f).unwrap();
    }
    for a in 0..n {
        for b in a + 1..n {
            let diff = LaurentPoly::var(n, b)
                .try_sub(&LaurentPoly::var(n, a))
                .unwrap();
            let pair = LaurentPoly::one(n)
                .try_sub(
                    &LaurentPoly::var(n, a)
                        .try_mul(&LaurentPoly::var(n, b))
                        .unwrap(),
                )
                .unwrap();
            rhs = rhs.try_mul(&diff).unwrap().try_mul(&pair).unwrap();
        }
    }
    let checks = vec![Check::poly("vandermonde", &lhs, &rhs)];
    assemble("vandermonde", instance, checks, None, t)
}

/// Orthogonality of the canonical basis, exercised through the straightening
/// engine: each bra is presented as a non-canonical witness word (its leading
/// mode reflected once) and each ket as a reversed word; the engine must
/// recover the canonical forms with the predicted signs, making the pairing
/// table the identity matrix.
pub fn suite_orthogonality(max_weight: usize, max_len: usize, mutate: bool) -> SuiteReport {
    use crate::fock::{pair, straighten, ModeMonomial};
    let t = Instant::now();
    let instance = json!({ "max_weight": max_weight, "max_len": max_len, "mutate": mutate });
    let mut checks = Vec::new();
    for len in 0..=max_len {
        let labels = generalized_partitions(max_weight, len);
        for a in &labels {
            // witness bra: reflect the vacuum-adjacent mode once; the engine
            // must fold it back with one sign flip
            let mut bra_modes: Vec<i64> = (0..len).map(|i| a.part_int(i)).collect();
            let mut bra_comp = 1i64;
            if len > 0 {
                let last = bra_modes[len - 1];
                bra_modes[len - 1] = -last - 1;
                bra_comp = -1;
            }
            if mutate {
                bra_comp = 1;
            }
            let bra = straighten(&ModeMonomial::bra(bra_modes));
            for b in &labels {
                // witness ket: reversed word, compensated by the sign of the
                // reversal permutation
                let mut ket_modes: Vec<i64> = Vec::with_capacity(len);
                for i in 0..len {
                    let src = len - 1 - i; // position of the part placed here
                    ket_modes.push(b.part_int(src) - (src as i64 + 1) + (i as i64 + 1));
                }
                let ket_comp = if (len / 2) % 2 == 0 { 1i64 } else { -1 };
                let ket = straighten(&ModeMonomial::ket(ket_modes));
                let v = bra_comp * ket_comp * pair(&bra, &ket).unwrap();
                let expected = if a == b { 1 } else { 0 };
                if v != expected {
                    checks.push(Check::fact(
                        format!("pairing <{a}|{b}> = {v}, expected {expected}"),
                        false,
                    ));
                }
            }
        }
    }
    checks.push(Check::fact("pairing table is the identity", true));
    assemble("orthogonality", instance, checks, None, t)
}

/// Dual-conjugate pairing computed by the straightening engine against its
/// closed form (-1)^{|mu|} [conjugate(lambda) = mu]. The closed form is
/// stated for lambda_1 at most the declared length of mu and the comparison
/// stays on that domain; outside it the pairing is genuinely nonzero (the
/// single raising mode against the bare vacuum already reflects to -1).
pub fn suite_dual_pairing(max_weight: usize, mutate: bool) -> SuiteReport {
    use crate::fock::dual_conjugate_pair;
    let t = Instant::now();
    let instance = json!({ "max_weight": max_weight, "mutate": mutate });
    let mut checks = Vec::new();
    let mus = partitions_up_to(max_weight, max_weight.max(1));
    let lambdas = partitions_up_to(max_weight, max_weight.max(1));
    for mu in &mus {
        for lambda in &lambdas {
            // the closed form applies on lambda_1 <= declared length of mu
            if lambda.part_int(0) > mu.len() as i64 {
                continue;
            }
            let engine = dual_conjugate_pair(mu, lambda);
            let conj = lambda.conjugate().unwrap();
            let mut expected: i64 = if conj == mu.normalized() {
                if mu.weight_int() % 2 == 0 {
                    1
                } else {
                    -1
                }
            } else {
                0
            };
            if mutate {
                expected = expected.abs();
            }
            if engine != expected {
                checks.push(Check::fact(
                    format!("dual pairing at mu={mu} lambda={lambda}: {engine} vs {expected}"),
                    false,
                ));
            }
        }
    }
    checks.push(Check::fact("dual pairing matches the closed form", true));
    assemble("dual_pairing", instance, checks, None, t)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    CauchySo,
    CauchyReduced,
    SkewCauchySo,
    ToeplitzHankel,
    Littlewood,
    Transitions,
    Branching,
    Vandermonde,
    Orthogonality,
    DualPairing,
}

impl Suite {
    pub const ALL: [Suite; 10] = [
        Suite::CauchySo,
        Suite::CauchyReduced,
        Suite::SkewCauchySo,
        Suite::ToeplitzHankel,
        Suite::Littlewood,
        Suite::Transitions,
        Suite::Branching,
        Suite::Vandermonde,
        Suite::Orthogonality,
        Suite::DualPairing,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::CauchySo => "cauchy_so",
            Suite::CauchyReduced => "cauchy_reduced",
            Suite::SkewCauchySo => "skew_cauchy_so",
            Suite::ToeplitzHankel => "toeplitz_hankel",
            Suite::Littlewood => "littlewood",
            Suite::Transitions => "transitions",
            Suite::Branching => "branching",
            Suite::Vandermonde => "vandermonde",
            Suite::Orthogonality => "orthogonality",
            Suite::DualPairing => "dual_pairing",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.iter().copied().find(|x| x.name() == s)
    }
}

/// Grid overrides from the command line; unset fields take the defaults.
#[derive(Clone, Default, Debug)]
pub struct Grid {
    pub n: Option<usize>,
    pub k: Option<usize>,
    pub deg: Option<usize>,
    pub len: Option<usize>,
    pub kind: Option<ReducedKind>,
    pub lambda: Option<GeneralizedPartition>,
    pub mu: Option<GeneralizedPartition>,
}

/// Check explicit overrides against each suite's hypotheses before running.
pub fn validate_grid(suite: Suite, g: &Grid) -> Result<(), String> {
    let lam_len = g.lambda.as_ref().map(|l| l.nonzero_len());
    match suite {
        Suite::SkewCauchySo => {
            if let Some(ll) = lam_len {
                let bound = g.mu.as_ref().map_or(0, |m| m.len()) + g.n.unwrap_or(1);
                if ll > bound {
                    return Err(format!(
                        "skew cauchy requires the outer length {} to be at most l(mu) + N = {}",
                        ll, bound
                    ));
                }
            }
        }
        Suite::Branching => {
            if let Some(ll) = lam_len {
                if ll > 2 {
                    return Err("branching runs at one inner and one outer variable; \
                         the partition may have at most 2 parts"
                        .into());
                }
            }
        }
        Suite::ToeplitzHankel => {
            if let (Some(ll), Some(l)) = (lam_len, g.len) {
                if ll > l {
                    return Err(format!(
                        "toeplitz-hankel at {} rows cannot hold a partition with {} parts",
                        l, ll
                    ));
                }
            }
        }
        _ => {}
    }
    Ok(())
}

enum Job {
    CauchySo(usize, usize),
    CauchyReduced(ReducedKind, usize, usize),
    SkewCauchy(
        GeneralizedPartition,
        GeneralizedPartition,
        usize,
        usize,
        usize,
    ),
    Th(GeneralizedPartition, usize, usize),
    Littlewood(usize, usize),
    Transitions(usize, usize),
    Branching(GeneralizedPartition),
    Vandermonde(usize),
    Orthogonality(usize, usize),
    DualPairing(usize),
}

fn jobs(suite: Suite, g: &Grid) -> Vec<Job> {
    let ns = |dflt: Vec<usize>| -> Vec<usize> { g.n.map(|n| vec![n]).unwrap_or(dflt) };
    match suite {
        Suite::CauchySo => {
            let d = g.deg.unwrap_or(6);
            ns(vec![1, 2])
                .into_iter()
                .map(|n| Job::CauchySo(n, d))
                .collect()
        }
        Suite::CauchyReduced => {
            let d = g.deg.unwrap_or(4);
            let kinds = g.kind.map(|k| vec![k]).unwrap_or(vec![
                ReducedKind::Sp,
                ReducedKind::So,
                ReducedKind::O,
            ]);
            let mut out = Vec::new();
            for n in ns(vec![1, 2]) {
                for k in &kinds {
                    out.push(Job::CauchyReduced(*k, n, d));
                }
            }
            out
        }
        Suite::SkewCauchySo => {
            let d = g.deg.unwrap_or(5);
            let n = g.n.unwrap_or(1);
            let k = g.k.unwrap_or(1);
            let mut out = Vec::new();
            if let (Some(lam), Some(mu)) = (&g.lambda, &g.mu) {
                out.push(Job::SkewCauchy(lam.clone(), mu.clone(), n, k, d));
                return out;
            }
            // default grid: l(mu) <= 1, |lambda| <= 2, |mu| <= 2, subject to
            // the hypothesis l(lambda) <= l(mu) + N
            let lambdas: Vec<GeneralizedPartition> = partitions_up_to(2, 2);
            for lam in &lambdas {
                if lam.nonzero_len() <= n {
                    out.push(Job::SkewCauchy(
                        lam.clone(),
                        GeneralizedPartition::empty(),
                        n,
                        k,
                        d,
                    ));
                }
                if lam.nonzero_len() > 1 + n {
                    continue;
                }
                for mw in 0..=2i64 {
                    let mu = GeneralizedPartition::from_ints(&[mw]).unwrap();
                    out.push(Job::SkewCauchy(lam.clone(), mu, n, k, d));
                }
            }
            out
        }
        Suite::ToeplitzHankel => {
            let d = g.deg.unwrap_or(8);
            match &g.lambda {
                Some(lam) => {
                    let l = g.len.unwrap_or_else(|| lam.nonzero_len().max(1));
                    vec![Job::Th(lam.padded(l), l, d)]
                }
                None => {
                    let lens = g.len.map(|l| vec![l]).unwrap_or(vec![1, 2, 3]);
                    let mut out = Vec::new();
                    for l in lens {
                        for lam in partitions_up_to(4, l) {
                            out.push(Job::Th(lam.padded(l), l, d));
                        }
                    }
                    out
                }
            }
        }
        Suite::Littlewood => {
            let d = g.deg.unwrap_or(4);
            let lens = g.len.map(|l| vec![l]).unwrap_or(vec![1, 2, 3]);
            lens.into_iter().map(|l| Job::Littlewood(l, d)).collect()
        }
        Suite::Transitions => {
            let w = g.deg.unwrap_or(5);
            ns(vec![1, 2, 3])
                .into_iter()
                .map(|n| Job::Transitions(n, w))
                .collect()
        }
        Suite::Branching => match &g.lambda {
            Some(lam) => vec![Job::Branching(lam.clone())],
            None => partitions_up_to(4, 2)
                .into_iter()
                .map(Job::Branching)
                .collect(),
        },
        Suite::Vandermonde => ns(vec![1, 2, 3])
            .into_iter()
            .map(Job::Vandermonde)
            .collect(),
        Suite::Orthogonality => {
            vec![Job::Orthogonality(g.deg.unwrap_or(5), g.len.unwrap_or(4))]
        }
        Suite::DualPairing => vec![Job::DualPairing(g.deg.unwrap_or(6))],
    }
}

fn run_job(job: &Job, mutate: bool) -> SuiteReport {
    match job {
        Job::CauchySo(n, d) => suite_cauchy_so(*n, *d, mutate),
        Job::CauchyReduced(k, n, d) => suite_cauchy_reduced(*k, *n, *d, mutate),
        Job::SkewCauchy(lam, mu, n, k, d) => suite_skew_cauchy_so(lam, mu, *n, *k, *d, mutate),
        Job::Th(lam, l, d) => suite_toeplitz_hankel(lam, *l, *d, mutate),
        Job::Littlewood(l, d) => suite_littlewood(*l, *d, mutate),
        Job::Transitions(n, w) => suite_transitions(*n, *w, mutate),
        Job::Branching(lam) => suite_branching(lam, mutate),
        Job::Vandermonde(n) => suite_vandermonde(*n, mutate),
        Job::Orthogonality(w, l) => suite_orthogonality(*w, *l, mutate),
        Job::DualPairing(w) => suite_dual_pairing(*w, mutate),
    }
}

/// Run a suite over its (possibly overridden) grid. Instances are
/// independent; with `threads > 1` they run on a local pool, and reports
/// come back in grid order either way.
pub fn run_suite(suite: Suite, grid: &Grid, mutate: bool, threads: usize) -> Vec<SuiteReport> {
    let js = jobs(suite, grid);
    if threads > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("thread pool");
        pool.install(|| js.par_iter().map(|j| run_job(j, mutate)).collect())
    } else {
        js.iter().map(|j| run_job(j, mutate)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gp(parts: &[i64]) -> GeneralizedPartition {
        GeneralizedPartition::from_ints(parts).unwrap()
    }

    #[test]
    fn cauchy_so_small() {
        assert!(suite_cauchy_so(1, 4, false).pass);
        assert!(!suite_cauchy_so(1, 4, true).pass);
    }

    #[test]
    fn cauchy_reduced_small() {
        for kind in [ReducedKind::Sp, ReducedKind::So, ReducedKind::O] {
            let r = suite_cauchy_reduced(kind, 1, 4, false);
            assert!(r.pass, "reduced {} failed: {:?}", kind.name(), r.detail);
        }
        assert!(!suite_cauchy_reduced(ReducedKind::So, 1, 4, true).pass);
    }

    #[test]
    fn o_reading_is_reported() {
        let r = suite_cauchy_reduced(ReducedKind::O, 1, 4, false);
        let d = r.detail.expect("reading detail");
        assert!(d.contains("raw determinant differs"));
        assert!(d.contains("halved matches"));
    }

    #[test]
    fn skew_cauchy_small() {
        let e = GeneralizedPartition::empty();
        assert!(suite_skew_cauchy_so(&e, &e, 1, 1, 4, false).pass);
        assert!(suite_skew_cauchy_so(&gp(&[1]), &gp(&[0]), 1, 1, 4, false).pass);
        assert!(suite_skew_cauchy_so(&gp(&[1]), &gp(&[1]), 1, 1, 4, false).pass);
        assert!(!suite_skew_cauchy_so(&gp(&[1]), &gp(&[1]), 1, 1, 4, true).pass);
    }

    #[test]
    fn toeplitz_hankel_small() {
        assert!(suite_toeplitz_hankel(&gp(&[1]), 1, 6, false).pass);
        assert!(suite_toeplitz_hankel(&GeneralizedPartition::empty(), 1, 6, false).pass);
        assert!(!suite_toeplitz_hankel(&gp(&[1]), 1, 6, true).pass);
    }

    #[test]
    fn littlewood_small() {
        assert!(suite_littlewood(1, 4, false).pass);
        assert!(suite_littlewood(2, 4, false).pass);
        assert!(!suite_littlewood(2, 4, true).pass);
    }

    #[test]
    fn transitions_small() {
        assert!(suite_transitions(1, 3, false).pass);
        assert!(!suite_transitions(2, 3, true).pass);
    }

    #[test]
    fn branching_small() {
        assert!(suite_branching(&gp(&[1]), false).pass);
        assert!(!suite_branching(&gp(&[1]), true).pass);
    }

    #[test]
    fn vandermonde_small() {
        for n in 1..=2 {
            assert!(suite_vandermonde(n, false).pass);
        }
        assert!(!suite_vandermonde(2, true).pass);
    }

    #[test]
    fn truncation_soundness() {
        // a passing series suite still passes at a lower cap
        for d in [3, 4] {
            assert!(suite_cauchy_so(1, d, false).pass);
            assert!(suite_skew_cauchy_so(&gp(&[1]), &gp(&[0]), 1, 1, d, false).pass);
        }
    }

    #[test]
    fn parallel_matches_serial() {
        let grid = Grid::default();
        let a = run_suite(Suite::Vandermonde, &grid, false, 1);
        let b = run_suite(Suite::Vandermonde, &grid, false, 2);
        assert_eq!(a.len(), b.len());
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.pass, y.pass);
            assert_eq!(x.instance, y.instance);
        }
    }
}
