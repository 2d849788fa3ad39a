//! Adic transformations of path spaces: a total order on the incoming edges
//! of each vertex induces an odometer-style successor map on the root paths
//! into every vertex.

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::generators::GraphKind;
use crate::graph::{FinitePath, GradedGraph, PathStep, VertexId};
use crate::measures::MarkovMeasure;
use crate::partition::Partition;

/// Successor orbits are enumerated eagerly, so one co-terminal class is
/// capped at this many paths regardless of the global budget.
pub const ORBIT_CAP: u64 = 10_000;

/// Per-vertex total order on incoming edges. Entry `incoming[n][j]` lists
/// `(source_index, copy)` pairs covering the edges into vertex `j` of
/// level `n` exactly once, smallest first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdicOrder {
    incoming: Vec<Vec<Vec<(usize, u64)>>>,
}

impl AdicOrder {
    /// Validates that the listing covers each vertex's incoming edge copies
    /// exactly once.
    pub fn new(graph: &GradedGraph, incoming: Vec<Vec<Vec<(usize, u64)>>>) -> Result<Self> {
        if incoming.len() != graph.num_levels() {
            return Err(Error::input(format!(
                "order covers {} levels, graph has {}",
                incoming.len(),
                graph.num_levels()
            )));
        }
        if !incoming[0].is_empty() && incoming[0] != vec![Vec::new()] {
            return Err(Error::input("the root has no incoming edges to order"));
        }
        for (n, level_order) in incoming.iter().enumerate().skip(1) {
            if level_order.len() != graph.level_size(n)? {
                return Err(Error::input(format!(
                    "order at level {n} covers {} vertices, level has {}",
                    level_order.len(),
                    graph.level_size(n)?
                )));
            }
            for (j, listed) in level_order.iter().enumerate() {
                let mut expected = Vec::new();
                for &(i, m) in graph.in_edges(VertexId::new(n, j))? {
                    for copy in 0..m {
                        expected.push((i, copy));
                    }
                }
                let mut sorted = listed.clone();
                sorted.sort_unstable();
                if sorted != expected {
                    return Err(Error::input(format!(
                        "order at level {n} vertex {j} does not list each incoming edge copy once"
                    )));
                }
            }
        }
        Ok(AdicOrder { incoming })
    }

    fn edges_into(&self, v: VertexId) -> &[(usize, u64)] {
        &self.incoming[v.level][v.index]
    }

    fn rank_of(&self, v: VertexId, source: usize, copy: u64) -> Option<usize> {
        self.edges_into(v)
            .iter()
            .position(|&e| e == (source, copy))
    }
}

/// The stock order for each builder. Pascal, grid and orbit graphs order
/// incoming edges by source index then copy; the Young graph orders them by
/// the row of the cell removed when stepping back.
pub fn default_order(graph: &GradedGraph, kind: GraphKind) -> Result<AdicOrder> {
    let mut incoming: Vec<Vec<Vec<(usize, u64)>>> = vec![vec![Vec::new()]];
    for n in 1..graph.num_levels() {
        let mut level = Vec::with_capacity(graph.level_size(n)?);
        for j in 0..graph.level_size(n)? {
            let v = VertexId::new(n, j);
            let mut edges = Vec::new();
            for &(i, m) in graph.in_edges(v)? {
                for copy in 0..m {
                    edges.push((i, copy));
                }
            }
            if kind == GraphKind::Young {
                let target = Partition::parse(graph.label(v)?)?;
                let removed_row = |source_index: usize| -> Result<usize> {
                    let source =
                        Partition::parse(graph.label(VertexId::new(n - 1, source_index))?)?;
                    target
                        .predecessors()
                        .into_iter()
                        .find(|(_, p)| *p == source)
                        .map(|(row, _)| row)
                        .ok_or_else(|| {
                            Error::input(format!(
                                "edge {source} -> {target} does not remove a single cell; \
                                 is this a Young graph?"
                            ))
                        })
                };
                let mut keyed = Vec::with_capacity(edges.len());
                for (i, copy) in edges {
                    keyed.push((removed_row(i)?, i, copy));
                }
                keyed.sort_unstable();
                level.push(keyed.into_iter().map(|(_, i, c)| (i, c)).collect());
            } else {
                level.push(edges);
            }
        }
        incoming.push(level);
    }
    AdicOrder::new(graph, incoming)
}

/// Smallest path into `v`: every step takes the first incoming edge.
pub fn minimal_path_to(graph: &GradedGraph, order: &AdicOrder, v: VertexId) -> Result<FinitePath> {
    graph.label(v)?;
    let mut rev = Vec::with_capacity(v.level);
    let mut cur = v;
    while cur.level > 0 {
        let &(source, copy) = order
            .edges_into(cur)
            .first()
            .expect("validated orders cover every non-root vertex");
        rev.push(PathStep {
            target: cur.index,
            copy,
        });
        cur = VertexId::new(cur.level - 1, source);
    }
    rev.reverse();
    Ok(FinitePath::new(rev))
}

/// Largest path into `v`.
pub fn maximal_path_to(graph: &GradedGraph, order: &AdicOrder, v: VertexId) -> Result<FinitePath> {
    graph.label(v)?;
    let mut rev = Vec::with_capacity(v.level);
    let mut cur = v;
    while cur.level > 0 {
        let &(source, copy) = order
            .edges_into(cur)
            .last()
            .expect("validated orders cover every non-root vertex");
        rev.push(PathStep {
            target: cur.index,
            copy,
        });
        cur = VertexId::new(cur.level - 1, source);
    }
    rev.reverse();
    Ok(FinitePath::new(rev))
}

/// Next path in the odometer order: bumps the lowest non-maximal incoming
/// edge and resets everything below to minimal. Keeps every vertex from the
/// bumped level up unchanged, so the endpoint is preserved. `None` when the
/// path is maximal.
pub fn successor(
    graph: &GradedGraph,
    order: &AdicOrder,
    path: &FinitePath,
) -> Result<Option<FinitePath>> {
    graph.validate_path(path)?;
    let steps = path.steps();
    for k in 0..steps.len() {
        let v = VertexId::new(k + 1, steps[k].target);
        let source = if k == 0 { 0 } else { steps[k - 1].target };
        let rank = order
            .rank_of(v, source, steps[k].copy)
            .ok_or_else(|| Error::input("order does not list an edge used by the path"))?;
        let edges = order.edges_into(v);
        if rank + 1 < edges.len() {
            let (new_source, new_copy) = edges[rank + 1];
            let mut next =
                minimal_path_to(graph, order, VertexId::new(k, new_source))?;
            next.push(PathStep {
                target: v.index,
                copy: new_copy,
            });
            for step in &steps[k + 1..] {
                next.push(*step);
            }
            return Ok(Some(next));
        }
    }
    Ok(None)
}

/// Successor orbit of the minimal path into `v`, in order.
pub fn orbit_paths(
    graph: &GradedGraph,
    order: &AdicOrder,
    v: VertexId,
    budget: &Budget,
) -> Result<Vec<FinitePath>> {
    let dim = graph.dimension(v)?;
    if dim > BigUint::from(ORBIT_CAP) {
        return Err(Error::resource(format!(
            "co-terminal class of {:?} holds {dim} paths, cap is {ORBIT_CAP}",
            graph.label(v)?
        )));
    }
    let mut used = 0u64;
    let mut out = Vec::new();
    let mut cur = Some(minimal_path_to(graph, order, v)?);
    while let Some(path) = cur {
        budget.charge(&mut used, 1, "orbit enumeration")?;
        if BigUint::from(out.len() + 1) > dim {
            return Err(Error::input(
                "successor orbit exceeds the co-terminal class; the order is inconsistent",
            ));
        }
        cur = successor(graph, order, &path)?;
        out.push(path);
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct OrbitClass {
    pub vertex: VertexId,
    pub label: String,
    pub size: u64,
}

#[derive(Debug, Clone)]
pub struct OrbitReport {
    pub level: usize,
    pub classes: Vec<OrbitClass>,
}

/// Verifies at level `n` that the successor orbit of each minimal path
/// enumerates its co-terminal class exactly: `dim(v)` distinct paths, all
/// ending at `v`, finishing at the maximal path.
pub fn orbit_partition_check(
    graph: &GradedGraph,
    order: &AdicOrder,
    n: usize,
    budget: &Budget,
) -> Result<OrbitReport> {
    let mut classes = Vec::with_capacity(graph.level_size(n)?);
    for index in 0..graph.level_size(n)? {
        let v = VertexId::new(n, index);
        let paths = orbit_paths(graph, order, v, budget)?;
        if BigUint::from(paths.len()) != graph.dimension(v)? {
            return Err(Error::input(format!(
                "orbit of {:?} has {} paths, expected {}",
                graph.label(v)?,
                paths.len(),
                graph.dimension(v)?
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for path in &paths {
            if graph.validate_path(path)? != v {
                return Err(Error::input(format!(
                    "orbit of {:?} contains a path with another endpoint",
                    graph.label(v)?
                )));
            }
            if !seen.insert(path.clone()) {
                return Err(Error::input(format!(
                    "orbit of {:?} repeats a path",
                    graph.label(v)?
                )));
            }
        }
        if paths.last() != Some(&maximal_path_to(graph, order, v)?) {
            return Err(Error::input(format!(
                "orbit of {:?} does not end at the maximal path",
                graph.label(v)?
            )));
        }
        classes.push(OrbitClass {
            vertex: v,
            label: graph.label(v)?.to_string(),
            size: paths.len() as u64,
        });
    }
    Ok(OrbitReport { level: n, classes })
}

/// Largest change of cylinder probability along one successor step at level
/// `n`. Exactly zero for central measures; positive values certify that the
/// measure is not invariant under the adic map.
pub fn invariance_check(
    measure: &MarkovMeasure,
    order: &AdicOrder,
    n: usize,
    budget: &Budget,
) -> Result<BigRational> {
    let graph = measure.graph().as_ref();
    graph.level_size(n)?;
    let mut worst = BigRational::zero();
    let mut used = 0u64;
    let mut stack = vec![(FinitePath::root(), VertexId::new(0, 0))];
    while let Some((path, cur)) = stack.pop() {
        if cur.level == n {
            budget.charge(&mut used, 1, "invariance enumeration")?;
            if let Some(next) = successor(graph, order, &path)? {
                let gap = (measure.cylinder_probability(&path)?
                    - measure.cylinder_probability(&next)?)
                .abs();
                if gap > worst {
                    worst = gap;
                }
            }
            continue;
        }
        for &(j, m) in graph.out_edges(cur)? {
            for copy in 0..m {
                let mut next = path.clone();
                next.push(PathStep { target: j, copy });
                stack.push((next, VertexId::new(cur.level + 1, j)));
            }
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::pascal::pascal_graph;
    use crate::generators::solvable::solvable_group_graph;
    use crate::generators::young::young_graph;
    use crate::characters::ThomaParameter;
    use crate::measures::{thoma_measure, MarkovMeasure};
    use num_bigint::BigInt;
    use std::sync::Arc;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn young_order_prefers_lower_added_row() {
        let g = young_graph(3).unwrap();
        let order = default_order(&g, GraphKind::Young).unwrap();
        let v = g.vertex(3, "[2,1]").unwrap();
        let sources: Vec<&str> = order
            .edges_into(v)
            .iter()
            .map(|&(i, _)| g.label(VertexId::new(2, i)).unwrap())
            .collect();
        // the step [1,1] -> [2,1] adds in row 0, [2] -> [2,1] in row 1
        assert_eq!(sources, ["[1,1]", "[2]"]);
    }

    #[test]
    fn young_orbit_of_two_one() {
        let g = young_graph(3).unwrap();
        let order = default_order(&g, GraphKind::Young).unwrap();
        let v = g.vertex(3, "[2,1]").unwrap();
        let paths = orbit_paths(&g, &order, v, &Budget::default()).unwrap();
        assert_eq!(paths.len(), 2);
        let words: Vec<Vec<String>> = paths
            .iter()
            .map(|p| g.path_labels(p).unwrap())
            .collect();
        assert_eq!(
            words[0],
            ["[]", "[1]", "[1,1]", "[2,1]"],
            "minimal path grows downward first"
        );
        assert_eq!(words[1], ["[]", "[1]", "[2]", "[2,1]"]);
        assert_eq!(
            successor(&g, &order, &paths[1]).unwrap(),
            None,
            "maximal path has no successor"
        );
    }

    #[test]
    fn pascal_orbit_visits_all_words() {
        let g = pascal_graph(4).unwrap();
        let order = default_order(&g, GraphKind::Pascal).unwrap();
        let v = g.vertex(4, "2,2").unwrap();
        let paths = orbit_paths(&g, &order, v, &Budget::default()).unwrap();
        assert_eq!(paths.len(), 6);
        for p in &paths {
            assert_eq!(g.validate_path(p).unwrap(), v);
        }
    }

    #[test]
    fn full_partition_check_on_stock_graphs() {
        let cases: Vec<(GradedGraph, GraphKind, usize)> = vec![
            (young_graph(5).unwrap(), GraphKind::Young, 5),
            (pascal_graph(6).unwrap(), GraphKind::Pascal, 6),
            (solvable_group_graph(2).unwrap(), GraphKind::Solvable, 2),
        ];
        for (g, kind, level) in cases {
            let order = default_order(&g, kind).unwrap();
            for n in 0..=level {
                let report = orbit_partition_check(&g, &order, n, &Budget::default()).unwrap();
                assert_eq!(report.classes.len(), g.level_size(n).unwrap());
            }
        }
    }

    #[test]
    fn successor_preserves_endpoint() {
        let g = solvable_group_graph(3).unwrap();
        let order = default_order(&g, GraphKind::Solvable).unwrap();
        for index in 0..g.level_size(3).unwrap() {
            let v = VertexId::new(3, index);
            let mut cur = Some(minimal_path_to(&g, &order, v).unwrap());
            while let Some(p) = cur {
                assert_eq!(g.validate_path(&p).unwrap(), v);
                cur = successor(&g, &order, &p).unwrap();
            }
        }
    }

    #[test]
    fn root_orbit_is_trivial() {
        let g = young_graph(2).unwrap();
        let order = default_order(&g, GraphKind::Young).unwrap();
        let paths = orbit_paths(&g, &order, VertexId::new(0, 0), &Budget::default()).unwrap();
        assert_eq!(paths, vec![FinitePath::root()]);
    }

    #[test]
    fn invariance_zero_for_central_measures() {
        let m = thoma_measure(&ThomaParameter::zero(), 5).unwrap();
        let order = default_order(m.graph(), GraphKind::Young).unwrap();
        for n in 0..=5 {
            assert_eq!(
                invariance_check(&m, &order, n, &Budget::default()).unwrap(),
                BigRational::zero()
            );
        }
    }

    #[test]
    fn invariance_detects_perturbation() {
        let g = Arc::new(young_graph(3).unwrap());
        let mut nu = vec![
            vec![rat(1, 1)],
            vec![rat(1, 1)],
            vec![rat(1, 2), rat(1, 2)],
            vec![rat(1, 6), rat(1, 3), rat(1, 6)],
        ];
        nu[3][0] = rat(1, 3); // break coherence at the top level
        let m = MarkovMeasure::renormalized_from_weights(g.clone(), nu).unwrap();
        let order = default_order(&g, GraphKind::Young).unwrap();
        let gap = invariance_check(&m, &order, 3, &Budget::default()).unwrap();
        assert!(gap > BigRational::zero());
    }

    #[test]
    fn custom_order_validation() {
        let g = young_graph(2).unwrap();
        let order = default_order(&g, GraphKind::Young).unwrap();
        // drop one listed edge
        let mut incoming = order.incoming.clone();
        incoming[2][0].clear();
        assert!(AdicOrder::new(&g, incoming).is_err());

        // duplicate a copy number
        let mut incoming = order.incoming.clone();
        incoming[1][0] = vec![(0, 1)];
        assert!(AdicOrder::new(&g, incoming).is_err());

        // reversing a list is still a valid total order
        let mut incoming = order.incoming.clone();
        incoming[2][0].reverse();
        assert!(AdicOrder::new(&g, incoming).is_ok());
    }

    #[test]
    fn orbit_cap_guards_large_classes() {
        let g = pascal_graph(20).unwrap();
        let order = default_order(&g, GraphKind::Pascal).unwrap();
        let v = g.vertex(20, "10,10").unwrap();
        assert!(matches!(
            orbit_paths(&g, &order, v, &Budget::default()).unwrap_err(),
            Error::Resource(_)
        ));
    }
}
