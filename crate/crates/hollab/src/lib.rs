//! Exact computational algebra around holomorphs of finite abelian groups.
//!
//! Everything here is integer-exact: residue arithmetic, Smith normal forms,
//! group rings, free resolutions, homology, graded `F_p`-algebras, Lie
//! brackets and Bocksteins of congruence subgroups, and wreath products.
//! No floats anywhere.
//!
//! Start with the runnable examples (`cargo run --example <name>`):
//!
//! - `holomorph_basics` — holomorphs as pairs, Cayley embeddings, orders
//! - `matrix_embedding` — Hol as a block subgroup of GL(n+1), maximality, Sylow
//! - `resolution_acyclicity` — the staircase free resolution and d∘d = 0
//! - `homology_tables` — integer homology of Hol(Z_{p^r}), computed vs closed form
//! - `cohomology_ranks` — mod-p ranks and universal-coefficient cross-checks
//! - `ring_hilbert` — Hilbert series of the presented cohomology rings
//! - `dickson_noncollapse` — the Dickson coefficient and its nonzero d2 image
//! - `congruence_tower` — Gamma towers, p-power maps, brackets, Jacobi
//! - `bockstein_formulas` — first Bocksteins from structure constants
//! - `wreath_permutative` — wreath embeddings and permutative category axioms
//! - `verify_suites` — named verification suites with JSON reports
//!
//! The `hollab` binary wraps the same entry points behind a small CLI.

pub mod abelian;
pub mod cli;
pub mod congruence;
pub mod error;
pub mod graded;
pub mod group_ring;
pub mod holomorph;
pub mod homology;
pub mod modular;
pub mod perm;
pub mod report;
pub mod resolution;
pub mod suites;
pub mod tables;
pub mod util;
pub mod wreath;

pub use error::{Error, Result};
