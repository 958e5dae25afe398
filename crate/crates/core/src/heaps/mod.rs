//! Heaps of pieces over a natural unit interval order.
//!
//! A word drops to a heap: each letter `a` becomes a block in column `a`
//! resting on the highest block already placed in an overlapping column
//! (same column, or incomparable in `P`). Heaps are identified by their
//! unique word with no `P`-descent, and local flips generate an
//! equivalence relation on heaps of a fixed type.

mod gamma;
mod heap;
mod svg;

pub use gamma::{
    component_of, enumerate_classes, enumerate_heaps, gamma_graph, neighbors, EdgeKind, GammaGraph, HeapClass,
};
pub use heap::{BlockId, ComponentKind, FlippableTriple, Heap, MAX_BLOCKS};
pub use svg::heap_svg;
