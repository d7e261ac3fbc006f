//! Exact computations around group completion of finite commutative monoids
//! and the calculus of elementary ku-modules.
//!
//! * [`monoid`]: finite monoids as multiplication tables, submonoids,
//!   cofinality, the stably-group-like test, conjugacy classes.
//! * [`lattice`]: Smith normal form over ℤ and canonical forms of finitely
//!   generated abelian groups.
//! * [`completion`]: Grothendieck groups by formal differences and by
//!   presentation, quotient monoids `A/A′`, and `Gr(P)/Gr(N)`.
//! * [`bar`]: the 2-truncated bar construction, its edge-path presentation
//!   and first homology.
//! * [`telescope`]: the colimit of `M → M → …` along multiplication by `m₀`.
//! * [`ku`]: elementary ku-modules, homotopy groups, Bott cokernels, smash
//!   and free products.
//! * [`corpus`]: seeded generators for test corpora.

pub mod bar;
pub mod completion;
pub mod corpus;
pub mod error;
pub mod ku;
pub mod lattice;
pub mod monoid;
pub mod telescope;

pub use error::{Error, Result};
pub use lattice::FgAbelianGroup;
pub use monoid::{FiniteMonoid, Submonoid};
