//! Toeplitz/Hankel-type determinants in the symmetric f-family and the
//! classical Littlewood identities they reduce to at the empty partition.
//!
//! ```bash
//! cargo run -p sochar --example toeplitz_hankel
//! ```

use sochar::verify::{suite_littlewood, suite_toeplitz_hankel};
use sochar::{FSeries, GeneralizedPartition};

fn main() {
    // f_n collects products of complete homogeneous coefficients; it is
    // symmetric in n and supported in degrees >= |n|.
    let f = FSeries::new(0, 1, 6);
    println!("f-family at one variable, cap 6:");
    for n in -2..=2i64 {
        println!("  f_{n} = {}", f.coeff(n));
    }

    // det(f_{l_i-i+j} - f_{l_i-i-j+2l+2}) telescopes to the Schur polynomial
    // over a pair product; two siblings change the shift and sign.
    for lam in [vec![], vec![1], vec![2, 1]] {
        let l = lam.len().max(1);
        let lambda = GeneralizedPartition::from_ints(&lam).unwrap().padded(l);
        let r = suite_toeplitz_hankel(&lambda, l, 8, false);
        println!(
            "toeplitz-hankel at lambda = {lambda}, l = {l}: {}",
            if r.pass { "pass" } else { "FAIL" }
        );
    }

    // At the empty partition the right-hand sides are the Littlewood
    // products.
    for l in 1..=3usize {
        let r = suite_littlewood(l, 4, false);
        println!(
            "littlewood identities, {l} variable(s): {}",
            if r.pass { "pass" } else { "FAIL" }
        );
    }
}
