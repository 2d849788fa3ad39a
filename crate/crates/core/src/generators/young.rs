//! The Young graph: level n holds the partitions of n, edges add one cell.

use crate::error::Result;
use crate::graph::GradedGraph;
use crate::partition::Partition;

/// Builds levels `0..=max_level`. Vertices of a level are partitions in
/// descending lexicographic order, labeled by their `Display` form.
pub fn young_graph(max_level: u64) -> Result<GradedGraph> {
    let mut levels = Vec::new();
    let mut level_parts: Vec<Vec<Partition>> = Vec::new();
    for n in 0..=max_level {
        let parts = Partition::all_of_size(n);
        levels.push(parts.iter().map(|p| p.to_string()).collect());
        level_parts.push(parts);
    }

    let mut edges = Vec::new();
    for n in 0..max_level as usize {
        let next_index: std::collections::HashMap<&Partition, usize> = level_parts[n + 1]
            .iter()
            .enumerate()
            .map(|(j, p)| (p, j))
            .collect();
        for (i, p) in level_parts[n].iter().enumerate() {
            for (_, q) in p.successors() {
                edges.push((n, i, next_index[&q], 1));
            }
        }
    }
    GradedGraph::new(levels, &edges)
}
