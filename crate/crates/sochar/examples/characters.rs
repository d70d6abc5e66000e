//! Compute odd orthogonal characters by every available route and the
//! symplectic / even orthogonal characters through transition sums.
//!
//! ```bash
//! cargo run -p sochar --example characters
//! ```

use sochar::{
    o_char, so_bialternant, so_jt, so_skew_dual_jt, so_skew_gt, so_skew_jt, sp_char,
    GeneralizedPartition,
};

fn main() {
    let lambda = GeneralizedPartition::from_ints(&[2, 1]).unwrap();
    let n = 2;

    println!("odd orthogonal character for lambda = {lambda}, N = {n}");
    let weyl = so_bialternant(&lambda, n).unwrap();
    println!("  bialternant:      {weyl}");
    let jt = so_jt(&lambda, n).unwrap();
    println!("  jacobi-trudi:     {jt}");
    let empty = GeneralizedPartition::empty();
    let gt = so_skew_gt(&lambda, &empty, n).unwrap();
    println!("  gelfand-tsetlin:  {gt}");
    let s = lambda.part_int(0) as usize;
    let dual = so_skew_dual_jt(&lambda, &empty, s, n).unwrap();
    println!("  dual (elementary):{dual}");
    assert_eq!(weyl, jt);
    assert_eq!(weyl, gt);
    assert_eq!(weyl, dual);
    println!("  all four routes agree\n");

    // Skew characters depend on the declared length of the inner partition:
    // a tracked zero part is a different inner shape than no part at all.
    let outer = GeneralizedPartition::from_ints(&[1, 0]).unwrap();
    let inner_zero = GeneralizedPartition::from_ints(&[0]).unwrap();
    let skew_zero = so_skew_jt(&outer, &inner_zero, 1).unwrap();
    let plain = so_jt(&GeneralizedPartition::from_ints(&[1]).unwrap(), 1).unwrap();
    println!("skew character {outer}/{inner_zero} at N = 1: {skew_zero}");
    println!(
        "character {} at N = 1:            {plain}",
        GeneralizedPartition::from_ints(&[1]).unwrap()
    );
    println!("  (the tracked zero part removes the constant term)\n");

    // Symplectic and even orthogonal characters are alternating sums of
    // odd orthogonal ones.
    for lam in [vec![1], vec![2], vec![2, 1]] {
        let lam = GeneralizedPartition::from_ints(&lam).unwrap();
        let sp = sp_char(&lam, n).unwrap();
        let o = o_char(&lam, n).unwrap();
        println!("sp_{lam} = {sp}");
        println!("o_{lam}  = {o}");
    }
}
