//! Straightening engine for the generalized Clifford mode algebra.
//!
//! A ket word with modes (m_1, ..., m_l) straightens through the quadratic
//! commutation rule by sorting the shifted values c_i = m_i - i: equal values
//! kill the word, the sorting permutation contributes its sign, and a
//! negative last label is annihilated by the vacuum. Bra words carry an
//! extra reflection at the vacuum-adjacent position which folds each shifted
//! value into the canonical range with a sign flip.
//!
//! The closed-form sort lives in `straighten`; a step-by-step rewrite engine
//! (`straighten_rewrite`) applies single adjacent swaps, degenerate-pair
//! kills, and leading-mode folds, and is kept as an independent
//! implementation for cross-checking the inferred boundary cases.

use thiserror::Error;

use crate::partitions::GeneralizedPartition;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FockError {
    #[error("pairing requires equal declared lengths, got {bra} and {ket}")]
    LengthMismatch { bra: usize, ket: usize },
    #[error("pairing requires a bra on the left and a ket on the right")]
    SideMismatch,
    #[error("reflection did not stabilize within the word-length bound")]
    ReflectionLimit,
    #[error("straightening labels must be integers")]
    NonIntegerLabel,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Ket,
    Bra,
}

/// A monomial in the creation modes: for kets, modes (m_1, ..., m_l) denote
/// the operators indexed by -m_i applied left to right to the vacuum; for
/// bras, m_i sits at the i-th position from the vacuum on the dual side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModeMonomial {
    pub side: Side,
    pub modes: Vec<i64>,
}

impl ModeMonomial {
    pub fn ket(modes: Vec<i64>) -> Self {
        ModeMonomial {
            side: Side::Ket,
            modes,
        }
    }

    pub fn bra(modes: Vec<i64>) -> Self {
        ModeMonomial {
            side: Side::Bra,
            modes,
        }
    }

    /// The canonical word of a basis element.
    pub fn from_partition(side: Side, label: &GeneralizedPartition) -> Self {
        let modes = (0..label.len()).map(|i| label.part_int(i)).collect();
        ModeMonomial { side, modes }
    }
}

/// Result of straightening: zero, or a signed canonical basis label.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum FockElement {
    Zero,
    Canonical {
        sign: i32,
        side: Side,
        label: GeneralizedPartition,
    },
}

impl FockElement {
    pub fn is_zero(&self) -> bool {
        matches!(self, FockElement::Zero)
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            FockElement::Zero => serde_json::json!({ "zero": true }),
            FockElement::Canonical { sign, side, label } => serde_json::json!({
                "sign": sign,
                "side": match side { Side::Ket => "ket", Side::Bra => "bra" },
                "label": (0..label.len()).map(|i| label.part_int(i)).collect::<Vec<_>>(),
            }),
        }
    }
}

/// Closed-form straightening: shift, fold (bras only), detect collisions,
/// sort with sign.
pub fn straighten(m: &ModeMonomial) -> FockElement {
    let l = m.modes.len();
    if l == 0 {
        return FockElement::Canonical {
            sign: 1,
            side: m.side,
            label: GeneralizedPartition::empty(),
        };
    }
    let mut sign = 1i32;
    let mut shifted: Vec<i64> = m
        .modes
        .iter()
        .enumerate()
        .map(|(i, &mi)| mi - (i as i64 + 1))
        .collect();
    if m.side == Side::Bra {
        // Fold each value into the range c >= -l; the involution
        // c -> -c - (2l + 1) has no fixed point, so the fold is unambiguous.
        let bound = -(l as i64);
        for c in shifted.iter_mut() {
            if *c < bound {
                *c = -*c - (2 * l as i64 + 1);
                sign = -sign;
            }
        }
    }
    // Sort descending, tracking the permutation sign; equal values kill the
    // word through the degenerate pair rule.
    let mut order: Vec<usize> = (0..l).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(shifted[i]));
    for w in order.windows(2) {
        if shifted[w[0]] == shifted[w[1]] {
            return FockElement::Zero;
        }
    }
    sign *= permutation_sign(&order);
    let label_parts: Vec<i64> = order
        .iter()
        .enumerate()
        .map(|(j, &src)| shifted[src] + j as i64 + 1)
        .collect();
    if m.side == Side::Ket && *label_parts.last().unwrap() < 0 {
        return FockElement::Zero;
    }
    debug_assert!(label_parts.iter().all(|&p| p >= 0));
    let label = GeneralizedPartition::from_ints(&label_parts).expect("sorted labels");
    FockElement::Canonical {
        sign,
        side: m.side,
        label,
    }
}

fn permutation_sign(perm: &[usize]) -> i32 {
    let mut seen = vec![false; perm.len()];
    let mut sign = 1;
    for start in 0..perm.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = perm[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Rewrite-rule engine: repeatedly apply single adjacent swaps
/// (m_i, m_{i+1}) -> -(m_{i+1} - 1, m_i + 1), kill degenerate pairs, and for
/// bras fold the vacuum-adjacent mode while its operator index is positive.
/// Reflection passes are bounded by the word length.
pub fn straighten_rewrite(m: &ModeMonomial) -> Result<FockElement, FockError> {
    let l = m.modes.len();
    if l == 0 {
        return Ok(FockElement::Canonical {
            sign: 1,
            side: m.side,
            label: GeneralizedPartition::empty(),
        });
    }
    let mut w = m.modes.clone();
    let mut sign = 1i32;
    let mut folds = 0usize;
    loop {
        // bubble pass: order the shifted values descending
        let mut changed = true;
        while changed {
            changed = false;
            for i in 0..l - 1 {
                let ci = w[i] - (i as i64 + 1);
                let cn = w[i + 1] - (i as i64 + 2);
                if ci == cn {
                    return Ok(FockElement::Zero);
                }
                if ci < cn {
                    let (a, b) = (w[i], w[i + 1]);
                    w[i] = b - 1;
                    w[i + 1] = a + 1;
                    sign = -sign;
                    changed = true;
                }
            }
        }
        if m.side == Side::Bra && w[l - 1] < 0 {
            // vacuum-adjacent operator index is positive: reflect it
            w[l - 1] = -w[l - 1] - 1;
            sign = -sign;
            folds += 1;
            if folds > l {
                return Err(FockError::ReflectionLimit);
            }
            continue;
        }
        break;
    }
    if m.side == Side::Ket && w[l - 1] < 0 {
        return Ok(FockElement::Zero);
    }
    if w.iter().any(|&p| p < 0) {
        return Err(FockError::NonIntegerLabel);
    }
    let label = GeneralizedPartition::from_ints(&w).map_err(|_| FockError::NonIntegerLabel)?;
    Ok(FockElement::Canonical {
        sign,
        side: m.side,
        label,
    })
}

/// Pairing of canonical elements: the product of signs when the labels agree
/// at equal declared lengths, zero otherwise.
pub fn pair(bra: &FockElement, ket: &FockElement) -> Result<i64, FockError> {
    match (bra, ket) {
        (FockElement::Zero, _) | (_, FockElement::Zero) => Ok(0),
        (
            FockElement::Canonical {
                sign: sb,
                side: side_b,
                label: lb,
            },
            FockElement::Canonical {
                sign: sk,
                side: side_k,
                label: lk,
            },
        ) => {
            if *side_b != Side::Bra || *side_k != Side::Ket {
                return Err(FockError::SideMismatch);
            }
            if lb.len() != lk.len() {
                return Err(FockError::LengthMismatch {
                    bra: lb.len(),
                    ket: lk.len(),
                });
            }
            Ok(if lb == lk {
                (*sb as i64) * (*sk as i64)
            } else {
                0
            })
        }
    }
}

/// Evaluate the dual-conjugate pairing by straightening the combined dual
/// word: the bra of `mu` followed by the raising word of `lambda`, applied
/// to the vacuum. The result is nonzero exactly when the straightened label
/// is identically zero, and the expected closed form (used as a test oracle,
/// never here) is (-1)^{|mu|} when the conjugate of lambda equals mu.
pub fn dual_conjugate_pair(mu: &GeneralizedPartition, lambda: &GeneralizedPartition) -> i64 {
    let k = lambda.len();
    let l = mu.len();
    let mut modes = Vec::with_capacity(k + l);
    // positions from the vacuum: the raising word contributes modes
    // -lambda_k, ..., -lambda_1, then the bra contributes mu_1, ..., mu_l
    for j in 0..k {
        modes.push(-lambda.part_int(k - 1 - j));
    }
    for i in 0..l {
        modes.push(mu.part_int(i));
    }
    match straighten(&ModeMonomial::bra(modes)) {
        FockElement::Zero => 0,
        FockElement::Canonical { sign, label, .. } => {
            if label.weight_doubled() == 0 {
                sign as i64
            } else {
                0
            }
        }
    }
}
