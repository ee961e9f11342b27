//! Exact-arithmetic engine for the combinatorial skeleton of two
//! compactifications of the moduli of elliptic K3 surfaces.
//!
//! The crate is organized around the hyperbolic even unimodular lattice
//! II(1,17) and its Coxeter system:
//!
//! * [`lattice`] — the lattice itself, roots, reflections, chamber
//!   reduction, Smith normal form and saturation indices.
//! * [`chambers`] — relation-presented chambers of the Coxeter,
//!   ramification and rational-curve fans, face enumeration and censuses
//!   modulo the reflection group W and the full isometry group Γ.
//! * [`ias`] — integral-affine spheres B_LR(ℓ): combinatorial types,
//!   charges, monodromy, triangulations, and the ℓ ↔ λ dictionary.
//! * [`strata`] — stable types, dimension laws, saturation and moduli
//!   descriptors of boundary strata.
//! * [`weier`] — exact verification of the Weierstrass normal-form table
//!   for rational elliptic surfaces with an I_n fiber.

pub mod chambers;
pub mod ias;
pub mod lattice;
pub mod linalg;
pub mod strata;
pub mod weier;
