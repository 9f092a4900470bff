//! Computable Zariski spectra for constructive algebra.
//!
//! The crate works in the frame of radical ideals of a computable commutative
//! ring: basic opens `D(f)`, certificate-producing lattice and Heyting
//! operations, the algebraic forcing semantics `f ⊨ φ`, a checker for
//! geometric and infinitary intuitionistic derivations, the ∇-translation,
//! and certificate-emitting linear algebra (McCoy regularity, triviality of
//! wide injective matrices, simple generic freeness).
//!
//! Every positive answer comes with an algebraic certificate, typically an
//! identity `f^n = u_1·g_1 + ⋯ + u_m·g_m`, that re-verifies by ring
//! arithmetic alone, independently of the search that produced it.

pub mod apps;
pub mod bounds;
pub mod error;
pub mod frame;
pub mod ideals;
pub mod localizations;
pub mod logic;
mod numutil;
pub mod oracles;
pub mod poly;
pub mod rings;
pub mod semantics;

pub use error::{Error, Result};
pub use frame::Open;
pub use ideals::{Ideal, MembershipCertificate};
pub use localizations::LocalizedElem;
pub use logic::{Derivation, Formula, Sequent, Term};
pub use rings::{Ring, RingElem};
