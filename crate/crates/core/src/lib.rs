//! Exact Conway polynomials of oriented links from planar-diagram codes.
//!
//! * [`poly`]: dense integer polynomials in `z`, generic over the coefficient type.
//! * [`diagram`]: PD codes, crossing signs, linking numbers and diagram moves.
//! * [`skein`]: the memoized descending-diagram skein recursion.
//! * [`table`]: bundled reference knots with published polynomials.
//! * [`verify`]: checks for the K_n = T(2,2n+3) # T(-2,2n+1) computation.

pub mod diagram;
pub mod poly;
pub mod skein;
pub mod table;
pub mod verify;

use num_bigint::BigInt;

pub use diagram::{parse_pd, ArcId, Crossing, CrossingSign, Diagram, DiagramError};
pub use poly::{parse_poly, Coeff, Parity, Poly};
pub use skein::{
    conway_kn, conway_torus2, kn_diagram, SkeinError, SkeinStats, DEFAULT_NODE_BUDGET,
};
pub use table::{KnotTable, KnotTableEntry};
pub use verify::{all_passed, run_all, Fault, VerificationReport, VerifyConfig};

/// Conway polynomial with arbitrary-precision coefficients.
pub type IntPoly = Poly<BigInt>;

/// Polynomial with machine-word coefficients.
pub type SmallPoly = Poly<i64>;

/// Skein context producing [`IntPoly`] values.
pub type SkeinContext = skein::SkeinContext<BigInt>;
