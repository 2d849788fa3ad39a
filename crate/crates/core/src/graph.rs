//! N-graded graphs with one root, positive integer edge multiplicities
//! between consecutive levels only, exact path counting, and JSON/DOT export.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Position of a vertex: level number and index inside the level's canonical
/// order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct VertexId {
    pub level: usize,
    pub index: usize,
}

impl VertexId {
    pub fn new(level: usize, index: usize) -> Self {
        VertexId { level, index }
    }
}

/// One step of a path: which vertex of the next level it enters and which
/// parallel edge copy it uses (`copy < multiplicity`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PathStep {
    pub target: usize,
    pub copy: u64,
}

/// A path from the root down to level `len()`. The empty path is the root.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct FinitePath {
    steps: Vec<PathStep>,
}

impl FinitePath {
    pub fn new(steps: Vec<PathStep>) -> Self {
        FinitePath { steps }
    }

    pub fn root() -> Self {
        FinitePath::default()
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    /// Level the path ends on.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn push(&mut self, step: PathStep) {
        self.steps.push(step);
    }

    pub fn truncated(&self, level: usize) -> FinitePath {
        FinitePath {
            steps: self.steps[..level.min(self.steps.len())].to_vec(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    levels: Vec<Vec<String>>,
    /// Entries `[level, source_index, target_index, multiplicity]`.
    edges: Vec<(usize, usize, usize, u64)>,
}

/// Immutable graded graph. Level 0 is a single root; every non-root vertex
/// has an incoming edge and every vertex below the top level has an outgoing
/// one, so each vertex lies on a root path that extends to the top.
#[derive(Debug)]
pub struct GradedGraph {
    levels: Vec<Vec<String>>,
    /// `out_adj[n][i]` lists `(j, mult)` with `j` at level `n + 1`, ascending in `j`.
    out_adj: Vec<Vec<Vec<(usize, u64)>>>,
    /// `in_adj[n][j]` lists `(i, mult)` with `i` at level `n - 1`, ascending in `i`.
    in_adj: Vec<Vec<Vec<(usize, u64)>>>,
    label_index: Vec<HashMap<String, usize>>,
    dims: OnceLock<Vec<Vec<BigUint>>>,
}

impl PartialEq for GradedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels && self.out_adj == other.out_adj
    }
}

impl Eq for GradedGraph {}

impl GradedGraph {
    /// Builds and validates a graph from level label lists and an edge list
    /// of `(level, source_index, target_index, multiplicity)` entries.
    pub fn new(levels: Vec<Vec<String>>, edges: &[(usize, usize, usize, u64)]) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::input("graph needs at least the root level"));
        }
        if levels[0].len() != 1 {
            return Err(Error::input(format!(
                "level 0 must hold exactly the root, got {} vertices",
                levels[0].len()
            )));
        }
        for (n, level) in levels.iter().enumerate() {
            if level.is_empty() {
                return Err(Error::input(format!("level {n} is empty")));
            }
            let mut seen = HashMap::new();
            for (i, label) in level.iter().enumerate() {
                if let Some(prev) = seen.insert(label.clone(), i) {
                    return Err(Error::input(format!(
                        "duplicate label {label:?} at level {n} (indices {prev} and {i})"
                    )));
                }
            }
        }

        let mut mult_maps: Vec<BTreeMap<(usize, usize), u64>> =
            vec![BTreeMap::new(); levels.len().saturating_sub(1)];
        for &(n, i, j, m) in edges {
            if n + 1 >= levels.len() {
                return Err(Error::input(format!(
                    "edge at level {n} but the graph has {} levels",
                    levels.len()
                )));
            }
            if i >= levels[n].len() || j >= levels[n + 1].len() {
                return Err(Error::input(format!(
                    "edge ({n},{i}) -> ({},{j}) out of range",
                    n + 1
                )));
            }
            if m == 0 {
                return Err(Error::input(format!(
                    "edge ({n},{i}) -> ({},{j}) has multiplicity 0",
                    n + 1
                )));
            }
            if mult_maps[n].insert((i, j), m).is_some() {
                return Err(Error::input(format!(
                    "duplicate edge entry ({n},{i}) -> ({},{j})",
                    n + 1
                )));
            }
        }

        let mut out_adj: Vec<Vec<Vec<(usize, u64)>>> = levels
            .iter()
            .map(|level| vec![Vec::new(); level.len()])
            .collect();
        let mut in_adj = out_adj.clone();
        for (n, map) in mult_maps.iter().enumerate() {
            // BTreeMap order keeps both adjacency lists sorted.
            for (&(i, j), &m) in map {
                out_adj[n][i].push((j, m));
                in_adj[n + 1][j].push((i, m));
            }
        }

        for n in 0..levels.len() {
            for i in 0..levels[n].len() {
                if n + 1 < levels.len() && out_adj[n][i].is_empty() {
                    return Err(Error::input(format!(
                        "vertex {:?} at level {n} has no outgoing edge",
                        levels[n][i]
                    )));
                }
                if n > 0 && in_adj[n][i].is_empty() {
                    return Err(Error::input(format!(
                        "vertex {:?} at level {n} has no incoming edge",
                        levels[n][i]
                    )));
                }
            }
        }

        let label_index = levels
            .iter()
            .map(|level| {
                level
                    .iter()
                    .enumerate()
                    .map(|(i, l)| (l.clone(), i))
                    .collect()
            })
            .collect();

        Ok(GradedGraph {
            levels,
            out_adj,
            in_adj,
            label_index,
            dims: OnceLock::new(),
        })
    }

    /// Number of levels, root level included.
    pub fn num_levels(&self) -> usize {
        self.levels.len()
    }

    /// Index of the last level.
    pub fn top_level(&self) -> usize {
        self.levels.len() - 1
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if n >= self.levels.len() {
            return Err(Error::input(format!(
                "level {n} out of range, graph has levels 0..={}",
                self.top_level()
            )));
        }
        Ok(())
    }

    fn check_vertex(&self, v: VertexId) -> Result<()> {
        self.check_level(v.level)?;
        if v.index >= self.levels[v.level].len() {
            return Err(Error::input(format!(
                "vertex index {} out of range at level {} (size {})",
                v.index,
                v.level,
                self.levels[v.level].len()
            )));
        }
        Ok(())
    }

    pub fn level_size(&self, n: usize) -> Result<usize> {
        self.check_level(n)?;
        Ok(self.levels[n].len())
    }

    pub fn level_labels(&self, n: usize) -> Result<&[String]> {
        self.check_level(n)?;
        Ok(&self.levels[n])
    }

    pub fn label(&self, v: VertexId) -> Result<&str> {
        self.check_vertex(v)?;
        Ok(&self.levels[v.level][v.index])
    }

    /// Looks a vertex up by level and label.
    pub fn vertex(&self, level: usize, label: &str) -> Result<VertexId> {
        self.check_level(level)?;
        match self.label_index[level].get(label) {
            Some(&index) => Ok(VertexId { level, index }),
            None => Err(Error::input(format!(
                "no vertex labeled {label:?} at level {level}"
            ))),
        }
    }

    /// Edges out of `v`, as `(target_index, multiplicity)` ascending in target.
    pub fn out_edges(&self, v: VertexId) -> Result<&[(usize, u64)]> {
        self.check_vertex(v)?;
        Ok(&self.out_adj[v.level][v.index])
    }

    /// Edges into `v`, as `(source_index, multiplicity)` ascending in source.
    pub fn in_edges(&self, v: VertexId) -> Result<&[(usize, u64)]> {
        self.check_vertex(v)?;
        Ok(&self.in_adj[v.level][v.index])
    }

    /// Multiplicity of `u -> v`; zero when no edge. `v` must sit one level
    /// below `u`'s successor level.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> Result<u64> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if v.level != u.level + 1 {
            return Err(Error::input(format!(
                "multiplicity needs consecutive levels, got {} and {}",
                u.level, v.level
            )));
        }
        Ok(self.out_adj[u.level][u.index]
            .iter()
            .find(|&&(j, _)| j == v.index)
            .map_or(0, |&(_, m)| m))
    }

    pub fn edge_count(&self) -> u64 {
        self.out_adj
            .iter()
            .flatten()
            .map(|edges| edges.len() as u64)
            .sum()
    }

    fn dims_table(&self) -> &Vec<Vec<BigUint>> {
        self.dims.get_or_init(|| {
            let mut table: Vec<Vec<BigUint>> = Vec::with_capacity(self.levels.len());
            table.push(vec![BigUint::one()]);
            for n in 1..self.levels.len() {
                let mut row = vec![BigUint::zero(); self.levels[n].len()];
                for (j, row_j) in row.iter_mut().enumerate() {
                    for &(i, m) in &self.in_adj[n][j] {
                        *row_j += &table[n - 1][i] * BigUint::from(m);
                    }
                }
                table.push(row);
            }
            table
        })
    }

    /// Count of root paths into `v`, counted with edge multiplicities.
    pub fn dimension(&self, v: VertexId) -> Result<BigUint> {
        self.check_vertex(v)?;
        Ok(self.dims_table()[v.level][v.index].clone())
    }

    /// Dimensions of a whole level in vertex order.
    pub fn level_dimensions(&self, n: usize) -> Result<&[BigUint]> {
        self.check_level(n)?;
        Ok(&self.dims_table()[n])
    }

    /// Total number of paths from the root to level `n`.
    pub fn total_paths(&self, n: usize) -> Result<BigUint> {
        Ok(self.level_dimensions(n)?.iter().sum())
    }

    /// Count of paths from `u` down to `v`. Zero for distinct vertices on a
    /// common level; input error when `u` sits below `v`.
    pub fn skew_dimension(&self, u: VertexId, v: VertexId) -> Result<BigUint> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u.level > v.level {
            return Err(Error::input(format!(
                "skew dimension needs level({:?}) <= level({:?})",
                u, v
            )));
        }
        let mut row = vec![BigUint::zero(); self.levels[u.level].len()];
        row[u.index] = BigUint::one();
        for n in u.level..v.level {
            let mut next = vec![BigUint::zero(); self.levels[n + 1].len()];
            for (j, next_j) in next.iter_mut().enumerate() {
                for &(i, m) in &self.in_adj[n + 1][j] {
                    if !row[i].is_zero() {
                        *next_j += &row[i] * BigUint::from(m);
                    }
                }
            }
            row = next;
        }
        Ok(row.swap_remove(v.index))
    }

    /// Checks a path edge by edge; returns its endpoint. The empty path ends
    /// at the root.
    pub fn validate_path(&self, path: &FinitePath) -> Result<VertexId> {
        let mut cur = VertexId::new(0, 0);
        for (n, step) in path.steps().iter().enumerate() {
            if cur.level != n {
                unreachable!();
            }
            self.check_level(n + 1)?;
            if step.target >= self.levels[n + 1].len() {
                return Err(Error::input(format!(
                    "path step {n} targets index {} out of range",
                    step.target
                )));
            }
            let m = self.out_adj[n][cur.index]
                .iter()
                .find(|&&(j, _)| j == step.target)
                .map_or(0, |&(_, m)| m);
            if m == 0 {
                return Err(Error::input(format!(
                    "path step {n} uses a missing edge {:?} -> {:?}",
                    self.levels[n][cur.index],
                    self.levels[n + 1][step.target]
                )));
            }
            if step.copy >= m {
                return Err(Error::input(format!(
                    "path step {n} uses copy {} of an edge with multiplicity {m}",
                    step.copy
                )));
            }
            cur = VertexId::new(n + 1, step.target);
        }
        Ok(cur)
    }

    /// Labels along a path, starting at the root.
    pub fn path_labels(&self, path: &FinitePath) -> Result<Vec<String>> {
        self.validate_path(path)?;
        let mut out = vec![self.levels[0][0].clone()];
        for (n, step) in path.steps().iter().enumerate() {
            out.push(self.levels[n + 1][step.target].clone());
        }
        Ok(out)
    }

    pub fn to_json(&self) -> String {
        let mut edges = Vec::new();
        for (n, level) in self.out_adj.iter().enumerate() {
            for (i, outs) in level.iter().enumerate() {
                for &(j, m) in outs {
                    edges.push((n, i, j, m));
                }
            }
        }
        let doc = GraphJson {
            levels: self.levels.clone(),
            edges,
        };
        let mut s = serde_json::to_string_pretty(&doc).expect("graph serialization");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: GraphJson = serde_json::from_str(text)
            .map_err(|e| Error::input(format!("bad graph JSON: {e}")))?;
        GradedGraph::new(doc.levels, &doc.edges)
    }

    /// GraphViz rendering with one `rank=same` block per level. Edge labels
    /// show multiplicities greater than one.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph graded {\n  rankdir=TB;\n  node [shape=box];\n");
        for (n, level) in self.levels.iter().enumerate() {
            s.push_str("  { rank=same;");
            for (i, label) in level.iter().enumerate() {
                let shown = if label.is_empty() { "root" } else { label };
                s.push_str(&format!(
                    " v{n}_{i} [label=\"{}\"];",
                    shown.replace('"', "\\\"")
                ));
            }
            s.push_str(" }\n");
        }
        for (n, level) in self.out_adj.iter().enumerate() {
            for (i, outs) in level.iter().enumerate() {
                for &(j, m) in outs {
                    if m > 1 {
                        s.push_str(&format!(
                            "  v{n}_{i} -> v{}_{j} [label=\"{m}\"];\n",
                            n + 1
                        ));
                    } else {
                        s.push_str(&format!("  v{n}_{i} -> v{}_{j};\n", n + 1));
                    }
                }
            }
        }
        s.push_str("}\n");
        s
    }
}
