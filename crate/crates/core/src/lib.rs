//! Edge-colored complete graphs: colorful-cycle spectra, Gallai and exact
//! Gallai colorings, tree 2-clique decompositions, explicit extremal
//! colorings, and full-homomorphism classification of monochromes.
//!
//! The crate is organized bottom-up:
//!
//! - [`model`]: colored cliques, uncolored graphs, cycles, partitions.
//! - [`io`]: the `.cgr`, `.ug` and `.gt` text formats.
//! - [`spectrum`]: colorful cycle search, spectra and the `m∘n = m+n−2` monoid.
//! - [`search`]: exhaustive search for colorings with a prescribed colorful
//!   cycle and forbidden colorful lengths.
//! - [`constructions`]: builders for the explicit colorings.
//! - [`gallai`]: recognition, modules, homogeneous partitions, tree
//!   decomposition and the subset conditions.
//! - [`hom`]: full homomorphisms, reduced forms, types, monochromes and the
//!   `{C3, P4, A}` / `C5` duality.
//! - [`generate`] and [`verify`]: seeded workloads and the end-to-end check
//!   suites used by the CLI and the acceptance tests.

pub mod constructions;
pub mod error;
pub mod gallai;
pub mod generate;
pub mod hom;
pub mod io;
pub mod model;
pub mod search;
pub mod spectrum;
pub mod verify;

pub use error::{Error, Result};
pub use gallai::GallaiTree;
pub use hom::{DualityResult, FullHom, Obstruction};
pub use model::{Color, ColoredClique, Cycle, Partition, SimpleGraph, Triangle, Vertex};
pub use spectrum::Spectrum;
