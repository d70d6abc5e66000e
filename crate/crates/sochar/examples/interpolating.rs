//! The three interpolating Schur families: formal-parameter determinants
//! that specialize to the classical characters at distinguished values.
//!
//! ```bash
//! cargo run -p sochar --example interpolating
//! ```

use num_bigint::BigInt;
use sochar::{
    bd_epsilon_expansion, o_char, s_bc, s_bd, s_cd, so_jt, sp_char, GeneralizedPartition,
};

fn main() {
    let lambda = GeneralizedPartition::from_ints(&[2, 1]).unwrap();
    let n = 2;

    let bd = s_bd(&lambda, n).unwrap();
    let bc = s_bc(&lambda, n).unwrap();
    let cd = s_cd(&lambda, n).unwrap();
    println!("lambda = {lambda}, N = {n}");
    println!("  s_BD(x; a) = {bd}");
    println!("  s_BC(x; a) = {bc}");
    println!("  s_CD(x; a) = {cd}");

    let so = so_jt(&lambda, n).unwrap();
    let sp = sp_char(&lambda, n).unwrap();
    let o = o_char(&lambda, n).unwrap();
    let at = |p: &sochar::LaurentPoly, v: i64| p.substitute_alpha(&BigInt::from(v));
    assert_eq!(at(&bd, 0), so);
    assert_eq!(at(&bd, 1), o);
    assert_eq!(at(&bc, 0), so);
    assert_eq!(at(&bc, -1), sp);
    assert_eq!(at(&cd, 0), sp);
    assert_eq!(at(&cd, 1), o);
    println!("  endpoints: BD(0) = BC(0) = so, BD(1) = CD(1) = o, BC(-1) = CD(0) = sp");

    // The BD family also expands as a signed sum of odd orthogonal
    // characters over 0/1 subtractions of the shape.
    let expansion = bd_epsilon_expansion(&lambda, n).unwrap();
    assert_eq!(bd, expansion);
    println!("  BD determinant agrees with its signed subtraction expansion");

    // Parameter degrees: one step per variable for BD, two-step version for
    // CD; the BC family convolves a geometric series instead.
    let tall = GeneralizedPartition::from_ints(&[4]).unwrap();
    println!(
        "\nparameter degrees at lambda = {tall}, N = 1: BD {}, BC {}, CD {}",
        s_bd(&tall, 1).unwrap().alpha_degree(),
        s_bc(&tall, 1).unwrap().alpha_degree(),
        s_cd(&tall, 1).unwrap().alpha_degree(),
    );
}
