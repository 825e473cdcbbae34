//! Exact computation in the genus-2 Goeritz group of S2 x S1.
//!
//! The group carries the presentation
//! `<e> (+) <a | a^2 = 1> (+) <b, g, s | g^2 = s^2 = (gbs)^2 = 1>`,
//! with the first two factors central. Writing t for the involution gbs and
//! eliminating b = gts turns the third factor into the free product of three
//! order-two groups, so every element has a unique normal form: an integer
//! power of e, a parity of a, and an alternating word over {g, s, t}. On top
//! of that canonical form this crate provides:
//!
//! * the word problem, orders, and inverses ([`algebra`]);
//! * membership in the stabilizer subgroups of the splitting ([`subgroup`]);
//! * Britton decompositions over the splitting and the elliptic/hyperbolic
//!   classification of the tree action ([`amalgam`]);
//! * finite balls of the Bass-Serre tree with structure checks and DOT
//!   export ([`tree`]);
//! * free-group word algebra for disk boundary words, including a
//!   primitivity decision ([`f2`]);
//! * independent enumeration oracles ([`oracle`]) and the verification
//!   suite built on them ([`verify`]).

pub mod algebra;
pub mod amalgam;
pub mod error;
pub mod f2;
pub mod oracle;
pub mod subgroup;
pub mod tree;
pub mod verify;

pub use algebra::{tau_power, CoreLetter, Gen, GenLetter, GenWord, NormalForm, Order};
pub use amalgam::{AmalgamForm, Isometry, Syllable};
pub use error::Error;
pub use f2::{DiskWordClass, F2Base, F2Letter, F2Word};
pub use subgroup::{same_left_coset, SubgroupId};
pub use tree::{act, act_edge, build_ball, Color, OrbitReport, TreeBall, TreeEdge, TreeVertex};
pub use verify::{verify_all, verify_presentation, Check, Report, VerifyConfig};
