//! Replay the Cauchy-type identities as exact truncated-series equalities:
//! the classical identity against Schur polynomials, the reduced identities
//! against the dual functions SO*/SP*/O*, and the skew version.
//!
//! ```bash
//! cargo run -p sochar --example cauchy_identities
//! ```

use sochar::verify::{suite_cauchy_reduced, suite_cauchy_so, suite_skew_cauchy_so, ReducedKind};
use sochar::{dual_skew_fn, DualKind, GeneralizedPartition};

fn main() {
    let r = suite_cauchy_so(2, 5, false);
    println!(
        "cauchy identity, N = 2, cap 5: {}",
        if r.pass { "pass" } else { "FAIL" }
    );

    for kind in [ReducedKind::Sp, ReducedKind::So, ReducedKind::O] {
        let r = suite_cauchy_reduced(kind, 1, 4, false);
        println!(
            "reduced cauchy, kind {}: {}{}",
            kind.name(),
            if r.pass { "pass" } else { "FAIL" },
            r.detail.map(|d| format!("  ({d})")).unwrap_or_default()
        );
    }

    let lambda = GeneralizedPartition::from_ints(&[1]).unwrap();
    let mu = GeneralizedPartition::from_ints(&[1]).unwrap();
    let r = suite_skew_cauchy_so(&lambda, &mu, 1, 1, 4, false);
    println!(
        "skew cauchy, lambda = {lambda}, mu = {mu}: {}",
        if r.pass { "pass" } else { "FAIL" }
    );

    // A mutated comparator must fail; the report carries both sides.
    let broken = suite_cauchy_so(1, 4, true);
    println!(
        "mutated cauchy (numerator factor dropped): {}",
        if broken.pass {
            "pass"
        } else {
            "FAIL as expected"
        }
    );

    // The dual functions themselves are small determinants in the symmetric
    // f-family; a few values at one variable, cap 4:
    println!("\ndual function samples (one variable, cap 4):");
    let z = GeneralizedPartition::from_ints(&[0]).unwrap();
    let so_star = dual_skew_fn(DualKind::SoStar, &z, &z, 0, 1, 4).unwrap();
    println!("  SO* at (0)/(0): {so_star}");
    let sp_star = dual_skew_fn(DualKind::SpStar, &z, &z, 0, 1, 4).unwrap();
    println!("  SP* at (0)/(0): {sp_star}");
    let o_star = dual_skew_fn(DualKind::OStar, &z, &z, 0, 1, 4).unwrap();
    println!("  O*  at (0)/(0): {o_star}  (raw determinant doubles; suites halve it)");
}
