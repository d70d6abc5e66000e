//! Exact symbolic computation for classical-group characters.
//!
//! The crate computes odd orthogonal characters and their skew versions by
//! several independent routes (Weyl bialternant, Jacobi-Trudi determinants in
//! complete homogeneous or elementary coefficients, Gelfand-Tsetlin monomial
//! sums), the symplectic and even orthogonal characters through transition
//! sums, dual skew functions as Toeplitz/Hankel-type determinants, and three
//! one-parameter families of interpolating Schur polynomials. The `verify`
//! module replays the identities connecting all of these (Cauchy and
//! Littlewood identities, branching, transitions) as exact, truncation-sound
//! equality checks.
//!
//! Everything is exact: big-integer coefficients, optionally carrying one
//! formal parameter, over multivariate Laurent polynomials with half-integer
//! exponent resolution, and power series truncated at a total-degree cap.
//!
//! Start with the runnable examples (`cargo run --example characters`) or
//! the `sochar` binary, which exposes the same operations as subcommands.

pub mod characters;
pub mod cli;
pub mod fock;
pub mod genseries;
pub mod interp;
pub mod partitions;
pub mod ring;
pub mod verify;

pub use characters::{
    dual_skew_fn, o_char, schur, schur_bialternant, skew_schur, so_bialternant, so_jt,
    so_skew_dual_jt, so_skew_gt, so_skew_jt, sp_char, CharError, DualKind,
};
pub use fock::{dual_conjugate_pair, pair, straighten, FockElement, ModeMonomial, Side};
pub use genseries::{FSeries, SeriesFamily, SeriesKind};
pub use interp::{bd_epsilon_expansion, s_bc, s_bd, s_cd, AlphaValue, InterpFamily};
pub use partitions::{
    epsilon_subtractions, gt_chains, interlacings, partitions_up_to, GTChain, GeneralizedPartition,
    PartitionError,
};
pub use ring::{
    det_auto, det_bareiss, det_cofactor, Coefficient, LaurentPoly, RingError, SquareMatrix,
    TruncatedSeries,
};
pub use verify::{run_suite, Grid, ReducedKind, Suite, SuiteReport};
