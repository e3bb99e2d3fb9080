//! Finite permutation groups, Sylow structure and p-cores, and the
//! essential-dimension bounds that follow from them.
//!
//! The crate has two layers. [`group`], [`sylow`] and [`oracle`] enumerate
//! concrete permutation groups and answer structural questions by brute
//! force. [`families`] and [`ed`] answer the same questions in closed form
//! for the named families (cyclic, dihedral, elementary abelian,
//! alternating, metacyclic `C_{p^n} ⋉ C_q`, `PSL_2(q)`), which is what makes
//! groups like `PSL_2(65537)` reachable at all. The brute-force layer is the
//! oracle for the closed forms.

pub mod corpus;
pub mod ed;
pub mod error;
pub mod families;
pub mod field;
pub mod group;
pub mod group_spec;
pub mod nt;
pub mod oracle;
pub mod perm;
pub mod psl2;
pub mod report;
pub mod reproduce;
pub mod sylow;

pub use error::{Error, Result};
pub use group::{generate_elements, ConcreteGroup, DEFAULT_CAP};
pub use nt::{Characteristic, Prime};
pub use perm::Permutation;
pub use sylow::{SylowClass, SylowTag};
