//! Straighten words in the mode algebra to signed canonical basis labels,
//! and evaluate the pairings that make the basis orthonormal.
//!
//! ```bash
//! cargo run -p sochar --example straightening
//! ```

use sochar::{
    dual_conjugate_pair, pair, straighten, FockElement, GeneralizedPartition, ModeMonomial, Side,
};

fn show(m: &ModeMonomial) {
    let side = match m.side {
        Side::Ket => "ket",
        Side::Bra => "bra",
    };
    let result = straighten(m);
    let rhs = match &result {
        FockElement::Zero => "0".to_string(),
        FockElement::Canonical { sign, side, label } => {
            let s = if *sign < 0 { "-" } else { "+" };
            match side {
                Side::Ket => format!("{s}|{label}>"),
                Side::Bra => format!("{s}<{label}|"),
            }
        }
    };
    println!("  {side} modes {:?} -> {rhs}", m.modes);
}

fn main() {
    println!("straightening ket words:");
    show(&ModeMonomial::ket(vec![2, 1])); // already canonical
    show(&ModeMonomial::ket(vec![0, 2])); // one swap, sign flips
    show(&ModeMonomial::ket(vec![1, 2])); // degenerate pair, vanishes
    show(&ModeMonomial::ket(vec![-1])); // vacuum annihilation

    println!("\nstraightening bra words (vacuum-adjacent modes reflect):");
    show(&ModeMonomial::bra(vec![-2]));
    show(&ModeMonomial::bra(vec![-1, 3]));
    show(&ModeMonomial::bra(vec![2, 1, 0]));

    // Orthonormality at a fixed declared length: the zero-padded labels pair
    // to the identity matrix.
    println!("\npairing table at length 2, weight <= 2:");
    let labels: Vec<GeneralizedPartition> = [vec![0, 0], vec![1, 0], vec![1, 1], vec![2, 0]]
        .into_iter()
        .map(|p| GeneralizedPartition::from_ints(&p).unwrap())
        .collect();
    for a in &labels {
        let bra = straighten(&ModeMonomial::from_partition(Side::Bra, a));
        let row: Vec<String> = labels
            .iter()
            .map(|b| {
                let ket = straighten(&ModeMonomial::from_partition(Side::Ket, b));
                pair(&bra, &ket).unwrap().to_string()
            })
            .collect();
        println!("  <{a}| : {}", row.join(" "));
    }

    // The dual-conjugate pairing picks out the conjugate partition with an
    // alternating sign.
    println!("\ndual-conjugate pairings:");
    for (mu, lambda) in [
        (vec![1, 1], vec![2]),
        (vec![1], vec![1]),
        (vec![2], vec![2]),
        (vec![2, 1], vec![2, 1]),
    ] {
        let mu = GeneralizedPartition::from_ints(&mu).unwrap();
        let lambda = GeneralizedPartition::from_ints(&lambda).unwrap();
        println!(
            "  mu = {mu}, lambda = {lambda}: {}",
            dual_conjugate_pair(&mu, &lambda)
        );
    }
}
