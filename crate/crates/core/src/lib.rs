//! Exact computation of universal Tanaka prolongations.
//!
//! The crate works entirely over the rationals and is organised bottom-up:
//!
//! * [`exactla`] - reduced row echelon forms, kernels, images and coordinate
//!   complements.
//! * [`gla`] - graded Lie algebras given by structure constants.
//! * [`prolong`] - the prolongation engine, the `∂` operators with their
//!   `Tor` codomains and the complements `W` of their images.
//! * [`pseudoprod`] - pseudo-product symbols: degree-zero algebra, Levi
//!   degeneracy, Cauchy characteristic splitting, finite height.
//! * [`distflag`] - polynomial vector field models of distributions: derived
//!   flags, symbol algebras at a point, Levi tensor, double fibrations.
//! * [`cli`] - documents, the fixture catalog and the command driver used by
//!   the `tanaka` binary.
//!
//! Runnable walkthroughs live in the `examples/` directory of this crate.

pub mod cli;
pub mod distflag;
pub mod exactla;
pub mod fixtures;
pub mod gla;
pub mod prolong;
pub mod pseudoprod;
