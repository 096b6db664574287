//! Uniform morphisms, digit-sum exponential sums and von Koch type curves.
//!
//! The crate is organised bottom-up:
//!
//! * [`digits`]: base-`p` digit sums, the Thue-Morse bit, the unimodular term
//!   `η_p^{s_p(n)} η_q^n` as an exact [`GroupElement`], Euler's totient and
//!   multiplicative orders.
//! * [`words`]: alphabets, words, uniform morphisms, codings, fixed-point
//!   prefixes and the built-in morphism tables.
//! * [`cycsum`]: exact sums `Z(N, p, q)` in the integral group ring of
//!   `Z_p × Z_q`, by brute force and by the logarithmic block recursion.
//! * [`geometry`]: partial-sum and substitution polylines, renormalisation,
//!   Hausdorff distance and Cantor interval sets.
//! * [`turtle`]: `{F, L}` turtle programs driven by Thue-Morse prefixes.
//! * [`render`]: deterministic SVG / CSV / JSON output.
//!
//! Floating-point geometry is generic over any [`Real`] scalar (`f32`, `f64`); exact
//! quantities use `num-bigint` integers and `num-rational` rationals. The
//! aliases below pin the usual choices.

pub mod cycsum;
pub mod digits;
pub mod error;
pub mod geometry;
pub mod render;
pub mod scalar;
pub mod turtle;
pub mod words;

pub use cycsum::{
    coquet_sum, make_curve_spec, z_bruteforce, z_fast, BlockChoice, CurveSpec, FastSum,
    GroupRingVec, SumMethod,
};
pub use digits::{digit_sum, euler_phi, mult_order, thue_morse, u_term, GroupElement};
pub use error::{Error, ErrorKind, Result};
pub use geometry::{
    cantor_intervals, hausdorff_distance, partial_sum_polyline, renormalize, substitution_polyline,
    IntervalSet, Point, Polyline,
};
pub use render::{intervals_to_svg, to_csv, to_json, to_svg, RenderStyle};
pub use scalar::Real;
pub use turtle::{
    block_decompose, maholdener_curve, run_turtle, tm_prefix_word, BlockSign, Scaling,
    TurtleLetter, TurtleProgram,
};
pub use words::{
    build_general_morphism, builtin_morphism, Alphabet, BuiltinMorphism, Coding, Letter,
    UniformMorphism, Word,
};

/// Double-precision point.
pub type Point64 = Point<f64>;
/// Single-precision point.
pub type Point32 = Point<f32>;
/// Double-precision polyline.
pub type Polyline64 = Polyline<f64>;
/// Single-precision polyline.
pub type Polyline32 = Polyline<f32>;
/// Curve parameters with a double-precision `σ`.
pub type CurveSpec64 = CurveSpec<f64>;
/// Curve parameters with a single-precision `σ`.
pub type CurveSpec32 = CurveSpec<f32>;
/// Turtle program with a double-precision turn angle.
pub type TurtleProgram64 = TurtleProgram<f64>;
/// Cantor generations in exact rational arithmetic.
pub type CantorSet = IntervalSet<num_rational::BigRational>;
/// Cantor generations in double precision, for rendering.
pub type CantorSet64 = IntervalSet<f64>;
