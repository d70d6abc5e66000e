//! Enumerate odd orthogonal Gelfand-Tsetlin chains and rebuild the character
//! monomial by monomial.
//!
//! ```bash
//! cargo run -p sochar --example gt_patterns
//! ```

use sochar::{gt_chains, so_skew_jt, GeneralizedPartition, LaurentPoly};

fn main() {
    let lambda = GeneralizedPartition::from_ints(&[2, 1]).unwrap();
    let mu = GeneralizedPartition::from_ints(&[1]).unwrap();
    let n = 1;

    let chains = gt_chains(&mu, &lambda, n).unwrap();
    println!(
        "chains from {mu} to {lambda} with {n} variable(s): {}",
        chains.len()
    );
    for chain in &chains {
        let rows: Vec<String> = chain.rows.iter().map(|r| r.to_string()).collect();
        let exps: Vec<String> = (0..n)
            .map(|i| {
                let d = chain.exponent_doubled(i);
                if d % 2 == 0 {
                    format!("{}", d / 2)
                } else {
                    format!("{d}/2")
                }
            })
            .collect();
        println!("  {}  ->  x^({})", rows.join(" < "), exps.join(", "));
    }

    // The monomials sum to the skew character.
    let mut total = LaurentPoly::zero(n);
    for chain in &chains {
        let mut mono = LaurentPoly::one(n);
        for i in 0..n {
            mono = mono
                .try_mul(&LaurentPoly::var_pow(
                    n,
                    i,
                    chain.exponent_doubled(i) as i32,
                ))
                .unwrap();
        }
        total = total.try_add(&mono).unwrap();
    }
    let skew = so_skew_jt(&lambda, &mu, n).unwrap();
    println!("sum of monomials: {total}");
    println!("skew character:   {skew}");
    assert_eq!(total, skew);

    // Odd rows admit half-integer pivots; all three appear for the single
    // box at one variable.
    let one = GeneralizedPartition::from_ints(&[1]).unwrap();
    let empty = GeneralizedPartition::empty();
    println!("\nchains for {one} over the empty shape:");
    for chain in gt_chains(&empty, &one, 1).unwrap() {
        let rows: Vec<String> = chain.rows.iter().map(|r| r.to_string()).collect();
        println!("  {}", rows.join(" < "));
    }
}
