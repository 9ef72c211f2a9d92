//! Graph constructions: the edge-to-directed-C4 transform, lexicographic
//! products, named generators, hypercube labelings and seeded random
//! instances.

mod c4;
mod generators;
mod labeling;
mod product;
pub mod random;

pub use c4::{orient_c4, C4Mapping, C4Role};
pub use generators::{directed_cycle, tight_example, transitive_tournament};
pub use labeling::{doubling_labels, verify_isometric_labeling, HypercubeLabeling};
pub use product::lex_product;
