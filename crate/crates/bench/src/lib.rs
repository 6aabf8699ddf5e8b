//! Benchmark inputs shared by the criterion targets.

use octachain::decomposition::{decompose, DecompositionBundle};
use octachain::ChainGraph;

/// The graph and its blocks for `O_n`.
pub fn fixture(n: i64) -> (ChainGraph, DecompositionBundle) {
    let g = ChainGraph::build(n).expect("n >= 1");
    let b = decompose(&g).expect("chains are mirror symmetric");
    (g, b)
}
