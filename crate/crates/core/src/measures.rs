//! Central and Markov measures on the path space of a graded graph.
//!
//! A measure stores one exact weight `nu(v)` per vertex. Central measures
//! give every root path into `v` the same probability `nu(v)`; general
//! weight families define a Markov chain whose step from `u` moves along
//! one edge copy into `v` with probability `nu(v) / D(u)`, where `D(u)`
//! sums `mult * nu` over the out-edges of `u`.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::budget::Budget;
use crate::characters::{shape_sequence, thoma_level_weights, ThomaParameter};
use crate::error::{Error, Result};
use crate::generators::young::young_graph;
use crate::graph::{FinitePath, GradedGraph, PathStep, VertexId};
use crate::partition::Partition;

#[derive(Debug, Clone)]
pub struct MarkovMeasure {
    graph: Arc<GradedGraph>,
    nu: Vec<Vec<BigRational>>,
    denom: Vec<Vec<BigRational>>,
    coherent: bool,
}

impl MarkovMeasure {
    /// Builds a central measure, insisting that the weights are coherent
    /// (each vertex weight is the multiplicity-weighted sum of its
    /// children's) and normalized at the top level.
    pub fn from_weights(graph: Arc<GradedGraph>, nu: Vec<Vec<BigRational>>) -> Result<Self> {
        let m = MarkovMeasure::renormalized_from_weights(graph, nu)?;
        let mut worst: Option<(VertexId, BigRational)> = None;
        for level in 0..m.graph.num_levels() - 1 {
            for index in 0..m.graph.level_size(level)? {
                let residual = (&m.nu[level][index] - &m.denom[level][index]).abs();
                if !residual.is_zero()
                    && worst.as_ref().is_none_or(|(_, w)| residual > *w)
                {
                    worst = Some((VertexId::new(level, index), residual));
                }
            }
        }
        if let Some((v, residual)) = worst {
            return Err(Error::Validation {
                level: v.level,
                label: m.graph.label(v)?.to_string(),
                residual: residual.to_string(),
            });
        }
        let top = m.graph.top_level();
        let total: BigRational = m
            .level_masses(top)?
            .into_iter()
            .sum();
        if total != BigRational::one() {
            return Err(Error::Validation {
                level: top,
                label: "<level total>".to_string(),
                residual: (total - BigRational::one()).abs().to_string(),
            });
        }
        Ok(MarkovMeasure { coherent: true, ..m })
    }

    /// Accepts any nonnegative weights and renormalizes transitions by the
    /// out-edge sums. Coherence is not required, so cylinder probabilities
    /// need not be central; used for perturbation diagnostics.
    pub fn renormalized_from_weights(
        graph: Arc<GradedGraph>,
        nu: Vec<Vec<BigRational>>,
    ) -> Result<Self> {
        if nu.len() != graph.num_levels() {
            return Err(Error::input(format!(
                "weights cover {} levels, graph has {}",
                nu.len(),
                graph.num_levels()
            )));
        }
        for (level, row) in nu.iter().enumerate() {
            if row.len() != graph.level_size(level)? {
                return Err(Error::input(format!(
                    "level {level} has {} vertices but {} weights",
                    graph.level_size(level)?,
                    row.len()
                )));
            }
            if row.iter().any(|w| w.is_negative()) {
                return Err(Error::input(format!("negative weight at level {level}")));
            }
        }
        let mut denom = Vec::with_capacity(nu.len());
        for level in 0..graph.num_levels() {
            let mut row = Vec::with_capacity(graph.level_size(level)?);
            for index in 0..graph.level_size(level)? {
                let mut d = BigRational::zero();
                if level < graph.top_level() {
                    for &(j, m) in graph.out_edges(VertexId::new(level, index))? {
                        d += BigRational::from_integer(BigInt::from(m)) * &nu[level + 1][j];
                    }
                }
                row.push(d);
            }
            denom.push(row);
        }
        Ok(MarkovMeasure {
            graph,
            nu,
            denom,
            coherent: false,
        })
    }

    pub fn graph(&self) -> &Arc<GradedGraph> {
        &self.graph
    }

    pub fn is_coherent(&self) -> bool {
        self.coherent
    }

    /// Probability of each single root path into `v`.
    pub fn nu(&self, v: VertexId) -> Result<&BigRational> {
        self.graph.label(v)?;
        Ok(&self.nu[v.level][v.index])
    }

    /// Total mass of the paths through `v`: `dim(v) * nu(v)`.
    pub fn mass(&self, v: VertexId) -> Result<BigRational> {
        let dim = BigRational::from_integer(BigInt::from(self.graph.dimension(v)?));
        Ok(dim * &self.nu[v.level][v.index])
    }

    pub fn level_masses(&self, n: usize) -> Result<Vec<BigRational>> {
        let dims = self.graph.level_dimensions(n)?;
        Ok(dims
            .iter()
            .zip(&self.nu[n])
            .map(|(d, w)| BigRational::from_integer(BigInt::from(d.clone())) * w)
            .collect())
    }

    /// Outgoing transition distribution at `u`: `(child, mult, probability)`
    /// with the probability covering all `mult` copies together.
    pub fn transitions(&self, u: VertexId) -> Result<Vec<(VertexId, u64, BigRational)>> {
        self.graph.label(u)?;
        if u.level >= self.graph.top_level() {
            return Err(Error::input(format!(
                "no transitions out of the top level {}",
                u.level
            )));
        }
        let d = &self.denom[u.level][u.index];
        if d.is_zero() {
            return Err(Error::input(format!(
                "transitions undefined at {:?}: no outgoing mass",
                self.graph.label(u)?
            )));
        }
        self.graph
            .out_edges(u)?
            .iter()
            .map(|&(j, m)| {
                let v = VertexId::new(u.level + 1, j);
                let p = BigRational::from_integer(BigInt::from(m)) * &self.nu[v.level][j] / d;
                Ok((v, m, p))
            })
            .collect()
    }

    /// Exact probability of the cylinder set of paths starting with `path`.
    pub fn cylinder_probability(&self, path: &FinitePath) -> Result<BigRational> {
        self.graph.validate_path(path)?;
        let mut prob = BigRational::one();
        let mut cur = VertexId::new(0, 0);
        for step in path.steps() {
            let next = VertexId::new(cur.level + 1, step.target);
            if self.nu[next.level][next.index].is_zero() {
                return Ok(BigRational::zero());
            }
            let d = &self.denom[cur.level][cur.index];
            if d.is_zero() {
                return Err(Error::input(format!(
                    "transitions undefined at {:?}: no outgoing mass",
                    self.graph.label(cur)?
                )));
            }
            prob *= &self.nu[next.level][next.index] / d;
            cur = next;
        }
        Ok(prob)
    }

    /// All level-`n` cylinders of positive probability.
    pub fn cylinder_distribution(&self, n: usize, budget: &Budget) -> Result<CylinderDistribution> {
        self.graph.level_size(n)?;
        let mut probs = BTreeMap::new();
        let mut used = 0u64;
        let mut stack: Vec<(FinitePath, VertexId, BigRational)> =
            vec![(FinitePath::root(), VertexId::new(0, 0), BigRational::one())];
        while let Some((path, cur, prob)) = stack.pop() {
            if cur.level == n {
                budget.charge(&mut used, 1, "cylinder enumeration")?;
                probs.insert(path, prob);
                continue;
            }
            let d = &self.denom[cur.level][cur.index];
            if d.is_zero() {
                return Err(Error::input(format!(
                    "transitions undefined at {:?}: no outgoing mass",
                    self.graph.label(cur)?
                )));
            }
            for &(j, m) in self.graph.out_edges(cur)? {
                let w = &self.nu[cur.level + 1][j];
                if w.is_zero() {
                    continue;
                }
                let step_prob = w / d;
                for copy in 0..m {
                    let mut next = path.clone();
                    next.push(PathStep { target: j, copy });
                    stack.push((
                        next,
                        VertexId::new(cur.level + 1, j),
                        &prob * &step_prob,
                    ));
                }
            }
        }
        Ok(CylinderDistribution { level: n, probs })
    }

    /// Walks `length` random steps from the root. Deterministic in `seed`
    /// across platforms: vertex choice compares a 64-bit draw against exact
    /// cumulative probabilities, then the edge copy is drawn uniformly.
    pub fn sample_path(&self, length: usize, seed: u64) -> Result<FinitePath> {
        if length >= self.graph.num_levels() {
            return Err(Error::input(format!(
                "cannot sample {length} steps in a graph with {} levels",
                self.graph.num_levels()
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut path = FinitePath::root();
        let mut cur = VertexId::new(0, 0);
        let scale = BigInt::from(1u128 << 64);
        for _ in 0..length {
            let draw = BigRational::new(BigInt::from(rng.random::<u64>()), scale.clone());
            let mut cum = BigRational::zero();
            let mut chosen = None;
            for (v, m, p) in self.transitions(cur)? {
                if p.is_zero() {
                    continue;
                }
                cum += &p;
                if draw < cum {
                    chosen = Some((v, m));
                    break;
                }
            }
            // cumulative mass is exactly 1, so a draw below 1 always lands
            let (v, m) = chosen.expect("draw below total transition mass");
            let copy = rng.random_range(0..m);
            path.push(PathStep {
                target: v.index,
                copy,
            });
            cur = v;
        }
        Ok(path)
    }
}

/// Exact distribution over the level-`n` cylinders of a path space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CylinderDistribution {
    level: usize,
    probs: BTreeMap<FinitePath, BigRational>,
}

impl CylinderDistribution {
    pub fn new(level: usize, probs: BTreeMap<FinitePath, BigRational>) -> Self {
        CylinderDistribution { level, probs }
    }

    pub fn level(&self) -> usize {
        self.level
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FinitePath, &BigRational)> {
        self.probs.iter()
    }

    pub fn get(&self, path: &FinitePath) -> BigRational {
        self.probs.get(path).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn total_mass(&self) -> BigRational {
        self.probs.values().sum()
    }

    /// Half the L1 distance; both distributions must sit at the same level
    /// of the same graph.
    pub fn total_variation(&self, other: &CylinderDistribution) -> Result<BigRational> {
        if self.level != other.level {
            return Err(Error::input(format!(
                "cannot compare cylinders at levels {} and {}",
                self.level, other.level
            )));
        }
        let mut l1 = BigRational::zero();
        for (path, p) in &self.probs {
            l1 += (p - other.get(path)).abs();
        }
        for (path, q) in &other.probs {
            if !self.probs.contains_key(path) {
                l1 += q.abs();
            }
        }
        Ok(l1 / BigRational::from_integer(BigInt::from(2)))
    }

    /// Mass reaching each endpoint vertex index of the level.
    pub fn vertex_marginal(&self) -> BTreeMap<usize, BigRational> {
        let mut out: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (path, p) in &self.probs {
            let end = path.steps().last().map_or(0, |s| s.target);
            *out.entry(end).or_insert_with(BigRational::zero) += p;
        }
        out
    }
}

/// Central measure of the extreme character `theta` on the Young graph,
/// materialized to `max_level`.
pub fn thoma_measure(theta: &ThomaParameter, max_level: u64) -> Result<MarkovMeasure> {
    let graph = Arc::new(young_graph(max_level)?);
    let mut nu = Vec::with_capacity(max_level as usize + 1);
    for n in 0..=max_level {
        nu.push(
            thoma_level_weights(theta, n)?
                .into_iter()
                .map(|(_, w)| w)
                .collect(),
        );
    }
    MarkovMeasure::from_weights(graph, nu)
}

/// Distribution of level-`level` cylinders under the uniform measure on the
/// root paths into `top`: each cylinder weighs its extension count into
/// `top` over `dim(top)`.
pub fn elementary_measure(
    graph: &GradedGraph,
    top: VertexId,
    level: usize,
    budget: &Budget,
) -> Result<CylinderDistribution> {
    graph.label(top)?;
    if level > top.level {
        return Err(Error::input(format!(
            "cylinder level {level} lies below the carrier vertex at {}",
            top.level
        )));
    }
    // extension counts from every vertex up the levels into top
    let mut skew: Vec<Vec<BigRational>> = Vec::new();
    let dim_top = BigRational::from_integer(BigInt::from(graph.dimension(top)?));
    let mut row = vec![BigRational::zero(); graph.level_size(top.level)?];
    row[top.index] = BigRational::one();
    skew.push(row);
    for m in (level..top.level).rev() {
        let upper = &skew[skew.len() - 1];
        let mut row = vec![BigRational::zero(); graph.level_size(m)?];
        for (i, row_i) in row.iter_mut().enumerate() {
            for &(j, mult) in graph.out_edges(VertexId::new(m, i))? {
                *row_i += BigRational::from_integer(BigInt::from(mult)) * &upper[j];
            }
        }
        skew.push(row);
    }
    skew.reverse(); // skew[0] is now the level-`level` row

    let mut probs = BTreeMap::new();
    let mut used = 0u64;
    let mut stack: Vec<(FinitePath, VertexId)> = vec![(FinitePath::root(), VertexId::new(0, 0))];
    while let Some((path, cur)) = stack.pop() {
        if cur.level == level {
            if skew[0][cur.index].is_zero() {
                continue;
            }
            budget.charge(&mut used, 1, "elementary cylinder enumeration")?;
            probs.insert(path, &skew[0][cur.index] / &dim_top);
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
    Ok(CylinderDistribution { level, probs })
}

#[derive(Debug, Clone)]
pub struct ErgodicRow {
    pub n: u64,
    pub shape: Partition,
    pub distance: BigRational,
}

/// For each carrier size in `ns`, the total variation distance at cylinder
/// level `level` between the measure carried by the tracking shape of that
/// size and the central measure of `theta`.
pub fn ergodic_method_compare(
    theta: &ThomaParameter,
    ns: &[u64],
    level: usize,
    budget: &Budget,
) -> Result<Vec<ErgodicRow>> {
    let &max_n = ns
        .iter()
        .max()
        .ok_or_else(|| Error::input("need at least one carrier size"))?;
    if let Some(&bad) = ns.iter().find(|&&n| (level as u64) > n) {
        return Err(Error::input(format!(
            "cylinder level {level} exceeds carrier size {bad}"
        )));
    }
    let graph = young_graph(max_n)?;
    let base = thoma_measure(theta, level as u64)?.cylinder_distribution(level, budget)?;
    ns.iter()
        .map(|&n| {
            let shape = shape_sequence(theta, n)?;
            let top = graph.vertex(n as usize, &shape.to_string())?;
            let elem = elementary_measure(&graph, top, level, budget)?;
            Ok(ErgodicRow {
                n,
                shape,
                distance: elem.total_variation(&base)?,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::pascal::pascal_graph;
    use num_traits::ToPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn half_half() -> ThomaParameter {
        ThomaParameter::new(vec![rat(1, 2), rat(1, 2)], vec![]).unwrap()
    }

    #[test]
    fn thoma_weights_pinned_at_level_two() {
        let m = thoma_measure(&half_half(), 2).unwrap();
        let g = m.graph().clone();
        assert!(m.is_coherent());
        assert_eq!(*m.nu(g.vertex(1, "[1]").unwrap()).unwrap(), rat(1, 1));
        assert_eq!(*m.nu(g.vertex(2, "[2]").unwrap()).unwrap(), rat(3, 4));
        assert_eq!(*m.nu(g.vertex(2, "[1,1]").unwrap()).unwrap(), rat(1, 4));

        let path_through_two = FinitePath::new(vec![
            PathStep { target: 0, copy: 0 },
            PathStep { target: 0, copy: 0 },
        ]);
        assert_eq!(m.cylinder_probability(&path_through_two).unwrap(), rat(3, 4));
    }

    #[test]
    fn plancherel_masses_sum_to_one() {
        let m = thoma_measure(&ThomaParameter::zero(), 6).unwrap();
        for n in 0..=6usize {
            let total: BigRational = m.level_masses(n).unwrap().into_iter().sum();
            assert_eq!(total, BigRational::one(), "level {n}");
        }
        let g = m.graph().clone();
        let v = g.vertex(4, "[2,2]").unwrap();
        assert_eq!(m.nu(v).unwrap(), &rat(2, 24));
        assert_eq!(m.mass(v).unwrap(), rat(4, 24));
    }

    #[test]
    fn transitions_follow_the_weight_ratio() {
        let m = thoma_measure(&half_half(), 3).unwrap();
        let g = m.graph().clone();
        let one = g.vertex(1, "[1]").unwrap();
        let trans = m.transitions(one).unwrap();
        let probs: Vec<BigRational> = trans.iter().map(|(_, _, p)| p.clone()).collect();
        assert_eq!(probs, [rat(3, 4), rat(1, 4)]);
        let total: BigRational = probs.into_iter().sum();
        assert_eq!(total, BigRational::one());
    }

    #[test]
    fn coherence_validation_reports_worst_vertex() {
        let g = Arc::new(young_graph(2).unwrap());
        // nu([2]) inflated: root no longer matches its children's sum
        let nu = vec![
            vec![rat(1, 1)],
            vec![rat(1, 1)],
            vec![rat(7, 8), rat(1, 4)],
        ];
        let err = MarkovMeasure::from_weights(g.clone(), nu).unwrap_err();
        match err {
            Error::Validation { level, label, residual } => {
                assert_eq!(level, 1);
                assert_eq!(label, "[1]");
                assert_eq!(residual, "1/8");
            }
            other => panic!("expected validation error, got {other:?}"),
        }

        let unnormalized = vec![
            vec![rat(2, 1)],
            vec![rat(2, 1)],
            vec![rat(3, 2), rat(1, 2)],
        ];
        let err = MarkovMeasure::from_weights(g, unnormalized).unwrap_err();
        assert!(matches!(err, Error::Validation { level: 2, .. }));
    }

    #[test]
    fn renormalized_weights_drop_centrality_but_keep_markov_rule() {
        let g = Arc::new(young_graph(2).unwrap());
        let nu = vec![
            vec![rat(1, 1)],
            vec![rat(1, 1)],
            // doubled weight on [2]
            vec![rat(3, 2), rat(1, 4)],
        ];
        let m = MarkovMeasure::renormalized_from_weights(g, nu).unwrap();
        assert!(!m.is_coherent());
        let through_two = FinitePath::new(vec![
            PathStep { target: 0, copy: 0 },
            PathStep { target: 0, copy: 0 },
        ]);
        // transition from [1]: (3/2) / (3/2 + 1/4) = 6/7
        assert_eq!(m.cylinder_probability(&through_two).unwrap(), rat(6, 7));
    }

    #[test]
    fn cylinder_distribution_sums_to_one_and_matches_pointwise() {
        let m = thoma_measure(&half_half(), 4).unwrap();
        let dist = m.cylinder_distribution(4, &Budget::default()).unwrap();
        assert_eq!(dist.total_mass(), BigRational::one());
        for (path, p) in dist.iter() {
            assert_eq!(m.cylinder_probability(path).unwrap(), p.clone());
        }
        // support excludes zero-probability paths only
        let plancherel = thoma_measure(&ThomaParameter::zero(), 3).unwrap();
        let d3 = plancherel.cylinder_distribution(3, &Budget::default()).unwrap();
        assert_eq!(d3.len(), 4); // one SYT for [3], two for [2,1], one for [1,1,1]
        assert_eq!(d3.total_mass(), BigRational::one());
    }

    #[test]
    fn cylinder_budget_trips() {
        let m = thoma_measure(&ThomaParameter::zero(), 6).unwrap();
        let err = m.cylinder_distribution(6, &Budget::new(10)).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn central_cylinder_probability_depends_only_on_endpoint() {
        let m = thoma_measure(&ThomaParameter::zero(), 4).unwrap();
        let dist = m.cylinder_distribution(4, &Budget::default()).unwrap();
        let g = m.graph().clone();
        for (path, p) in dist.iter() {
            let end = g.validate_path(path).unwrap();
            assert_eq!(p.clone(), m.nu(end).unwrap().clone());
        }
    }

    #[test]
    fn total_variation_is_a_metric_on_examples() {
        let a = thoma_measure(&half_half(), 3)
            .unwrap()
            .cylinder_distribution(3, &Budget::default())
            .unwrap();
        let b = thoma_measure(&ThomaParameter::zero(), 3)
            .unwrap()
            .cylinder_distribution(3, &Budget::default())
            .unwrap();
        assert_eq!(a.total_variation(&a).unwrap(), BigRational::zero());
        let ab = a.total_variation(&b).unwrap();
        assert_eq!(ab, b.total_variation(&a).unwrap());
        assert!(ab > BigRational::zero());
        assert!(ab <= BigRational::one());

        let c = thoma_measure(&half_half(), 2)
            .unwrap()
            .cylinder_distribution(2, &Budget::default())
            .unwrap();
        assert!(a.total_variation(&c).is_err());
    }

    #[test]
    fn elementary_measure_pinned_two_row_values() {
        let g = young_graph(8).unwrap();
        let top = g.vertex(8, "[4,4]").unwrap();
        let dist = elementary_measure(&g, top, 2, &Budget::default()).unwrap();
        assert_eq!(dist.total_mass(), BigRational::one());
        let marginal = dist.vertex_marginal();
        // level 2 order: [2], [1,1]
        assert_eq!(marginal[&0], rat(9, 14));
        assert_eq!(marginal[&1], rat(5, 14));
    }

    #[test]
    fn elementary_measure_at_carrier_level_is_uniform() {
        let g = young_graph(4).unwrap();
        let top = g.vertex(4, "[2,2]").unwrap();
        let dist = elementary_measure(&g, top, 4, &Budget::default()).unwrap();
        assert_eq!(dist.len(), 2);
        for (_, p) in dist.iter() {
            assert_eq!(p.clone(), rat(1, 2));
        }
    }

    #[test]
    fn ergodic_compare_two_row_sequence() {
        let rows = ergodic_method_compare(&half_half(), &[8, 12], 2, &Budget::default()).unwrap();
        assert_eq!(rows[0].shape.to_string(), "[4,4]");
        assert_eq!(rows[0].distance, rat(3, 28));
        assert_eq!(rows[1].shape.to_string(), "[6,6]");
        assert_eq!(rows[1].distance, rat(3, 44));
        assert!(rows[1].distance < rows[0].distance);

        assert!(ergodic_method_compare(&half_half(), &[4], 5, &Budget::default()).is_err());
        assert!(ergodic_method_compare(&half_half(), &[], 1, &Budget::default()).is_err());
    }

    #[test]
    fn sampling_is_deterministic_and_valid() {
        let m = thoma_measure(&half_half(), 6).unwrap();
        let a = m.sample_path(6, 7).unwrap();
        let b = m.sample_path(6, 7).unwrap();
        assert_eq!(a, b);
        m.graph().validate_path(&a).unwrap();
        assert_eq!(a.len(), 6);
        let c = m.sample_path(6, 8).unwrap();
        assert!(a != c || m.sample_path(6, 9).unwrap() != a);
        assert!(m.sample_path(7, 0).is_err());
        assert_eq!(m.sample_path(0, 0).unwrap(), FinitePath::root());
    }

    #[test]
    fn sample_frequencies_pass_chi_square() {
        // Plancherel at level 3: path probabilities 1/6, 1/3, 1/3, 1/6
        let m = thoma_measure(&ThomaParameter::zero(), 3).unwrap();
        let dist = m.cylinder_distribution(3, &Budget::default()).unwrap();
        let paths: Vec<FinitePath> = dist.iter().map(|(p, _)| p.clone()).collect();
        let trials = 600usize;
        let mut counts = BTreeMap::new();
        for seed in 0..trials as u64 {
            let p = m.sample_path(3, seed).unwrap();
            *counts.entry(p).or_insert(0usize) += 1;
        }
        let mut stat = 0.0f64;
        for path in &paths {
            let expected = dist.get(path).to_f64().unwrap() * trials as f64;
            let observed = counts.get(path).copied().unwrap_or(0) as f64;
            stat += (observed - expected).powi(2) / expected;
        }
        // chi-square, 3 degrees of freedom, significance 0.001
        assert!(stat < 16.266, "chi-square statistic {stat}");
        assert_eq!(counts.values().sum::<usize>(), trials);
    }

    #[test]
    fn pascal_coin_measure_is_markov_uniform() {
        // nu = 2^-n per vertex at level n makes every edge a fair coin
        let g = Arc::new(pascal_graph(6).unwrap());
        let nu: Vec<Vec<BigRational>> = (0..=6)
            .map(|n| vec![rat(1, 1 << n); n + 1])
            .collect();
        let m = MarkovMeasure::from_weights(g.clone(), nu).unwrap();
        let dist = m.cylinder_distribution(6, &Budget::default()).unwrap();
        assert_eq!(dist.len(), 64);
        for (_, p) in dist.iter() {
            assert_eq!(p.clone(), rat(1, 64));
        }
    }
}
