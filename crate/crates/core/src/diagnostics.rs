//! Finite-level boundary diagnostics on the orbit graph: how well balanced
//! mixes of finitely many pattern orbits approximate a target measure, and
//! how far apart the central measures of different characters sit.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::budget::Budget;
use crate::characters::{thoma_level_weights, ThomaParameter};
use crate::error::{Error, Result};
use crate::generators::solvable::{
    canonical, extend_periodic, function_to_path, level_orbits, orbit, pattern_label,
    rank_size, restrict_to, solvable_group_graph, translate, MAX_LEVEL,
};
use crate::graph::GradedGraph;
use crate::measures::{CylinderDistribution, MarkovMeasure};
use crate::partition::Partition;

/// The coin-flip measure on the orbit graph: every pattern of rank n is
/// equally likely, so each path weighs `2^-(2^n)` at level n.
pub fn bernoulli_measure(max_level: u64) -> Result<MarkovMeasure> {
    let graph = Arc::new(solvable_group_graph(max_level)?);
    let nu = (0..=max_level as usize)
        .map(|n| {
            // the root is the empty assignment, not a rank-0 pattern
            let w = if n == 0 {
                BigRational::one()
            } else {
                BigRational::new(BigInt::one(), BigInt::from(1u64) << rank_size(n))
            };
            vec![w; graph.level_size(n).expect("level exists")]
        })
        .collect();
    MarkovMeasure::from_weights(graph, nu)
}

/// The point mass on the all-zeros path.
pub fn zeros_measure(max_level: u64) -> Result<MarkovMeasure> {
    let graph = Arc::new(solvable_group_graph(max_level)?);
    let nu = (0..=max_level as usize)
        .map(|n| {
            let mut row = vec![BigRational::zero(); graph.level_size(n).expect("level exists")];
            row[0] = BigRational::one(); // the all-zeros orbit is first at every level
            row
        })
        .collect();
    MarkovMeasure::from_weights(graph, nu)
}

/// Balanced mix of finitely many distinct pattern orbits of one rank: each
/// orbit carries mass `1/j`, spread uniformly over its patterns, and the
/// whole pattern extends periodically above the defining rank. Invariant
/// under every translation by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteOrbitMeasure {
    depth: usize,
    reps: Vec<u32>,
}

impl FiniteOrbitMeasure {
    /// Canonicalizes the patterns and rejects duplicates landing in the same
    /// orbit.
    pub fn new(depth: usize, patterns: &[u32]) -> Result<Self> {
        if depth == 0 || depth as u64 > MAX_LEVEL {
            return Err(Error::input(format!(
                "orbit depth must lie in 1..={MAX_LEVEL}, got {depth}"
            )));
        }
        if patterns.is_empty() {
            return Err(Error::input("a pattern mix needs at least one orbit"));
        }
        let mut reps = Vec::with_capacity(patterns.len());
        for &p in patterns {
            if u64::from(p) >= 1u64 << rank_size(depth) {
                return Err(Error::input(format!(
                    "pattern {p:#x} does not fit rank {depth}"
                )));
            }
            reps.push(canonical(p, depth));
        }
        reps.sort_unstable();
        let before = reps.len();
        reps.dedup();
        if reps.len() != before {
            return Err(Error::input("mix patterns must lie in distinct orbits"));
        }
        Ok(FiniteOrbitMeasure { depth, reps })
    }

    pub fn single(depth: usize, pattern: u32) -> Result<Self> {
        FiniteOrbitMeasure::new(depth, &[pattern])
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn orbit_reps(&self) -> &[u32] {
        &self.reps
    }

    /// Mass carried by each orbit.
    pub fn orbit_mass(&self) -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(self.reps.len()))
    }

    /// Exact mass of every rank-`k` pattern, `1 <= k <= 4`. Restricts below
    /// the defining rank and extends periodically above it.
    pub fn level_marginal(&self, k: usize) -> Result<BTreeMap<u32, BigRational>> {
        if k == 0 || k as u64 > MAX_LEVEL {
            return Err(Error::input(format!(
                "marginal rank must lie in 1..={MAX_LEVEL}, got {k}"
            )));
        }
        let mut out: BTreeMap<u32, BigRational> = BTreeMap::new();
        for &rep in &self.reps {
            let elems = orbit(rep, self.depth);
            let w = BigRational::new(
                BigInt::one(),
                BigInt::from(self.reps.len() as u64 * elems.len() as u64),
            );
            for e in elems {
                let q = if k <= self.depth {
                    restrict_to(e, self.depth, k)
                } else {
                    extend_periodic(e, self.depth, k)
                };
                *out.entry(q).or_insert_with(BigRational::zero) += &w;
            }
        }
        Ok(out)
    }

    /// The level-`k` cylinders of a solvable-graph path space, keyed by the
    /// path encoding of each pattern.
    pub fn cylinder_distribution(
        &self,
        graph: &GradedGraph,
        k: usize,
    ) -> Result<CylinderDistribution> {
        let mut probs = BTreeMap::new();
        for (q, mass) in self.level_marginal(k)? {
            probs.insert(function_to_path(graph, q, k)?, mass);
        }
        Ok(CylinderDistribution::new(k, probs))
    }

    /// Exact recheck that the rank-`k` marginal is translation invariant.
    pub fn is_invariant_at(&self, k: usize) -> Result<bool> {
        let marginal = self.level_marginal(k)?;
        let get = |q: u32| marginal.get(&q).cloned().unwrap_or_else(BigRational::zero);
        for q in 0u32..1 << rank_size(k) {
            let mass = get(q);
            for g in 1..rank_size(k) {
                if get(translate(q, g, k)) != mass {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Half the L1 distance between two cylinder distributions.
pub fn cylinder_distance(
    a: &CylinderDistribution,
    b: &CylinderDistribution,
) -> Result<BigRational> {
    a.total_variation(b)
}

#[derive(Debug, Clone)]
pub struct PoulsenWitness {
    pub measure: FiniteOrbitMeasure,
    pub distance: BigRational,
    /// Cylinder rank the distance was measured at.
    pub level: usize,
    /// Whether the requested tolerance was met by rank-4 orbits.
    pub reached: bool,
}

/// Dense rank-`k` marginal of one orbit, indexed by pattern value.
fn orbit_marginal_vec(rep: u32, depth: usize, k: usize) -> Vec<BigRational> {
    let elems = orbit(rep, depth);
    let mut out = vec![BigRational::zero(); 1 << rank_size(k)];
    let w = BigRational::new(BigInt::one(), BigInt::from(elems.len()));
    for e in elems {
        out[restrict_to(e, depth, k) as usize] += &w;
    }
    out
}

fn tv_to_scaled_target(
    sum: &[BigRational],
    j: u64,
    target: &[BigRational],
) -> BigRational {
    // compares sum/j to target without dividing every entry
    let j = BigRational::from_integer(BigInt::from(j));
    let mut l1 = BigRational::zero();
    for (s, t) in sum.iter().zip(target) {
        l1 += (s - t * &j).abs();
    }
    l1 / (&j + &j)
}

struct SearchState<'a> {
    target: &'a [BigRational],
    budget: &'a Budget,
    used: u64,
}

/// Exhaustive balanced-subset search, viable while orbits are few.
fn best_subset_exhaustive(
    marginals: &[Vec<BigRational>],
    state: &mut SearchState,
) -> Result<(BigRational, Vec<usize>)> {
    let n = marginals.len();
    let dim = state.target.len();
    let mut best: Option<(BigRational, Vec<usize>)> = None;
    for mask in 1u32..1 << n {
        state
            .budget
            .charge(&mut state.used, 1, "orbit mix search")?;
        let mut sum = vec![BigRational::zero(); dim];
        let mut members = Vec::new();
        for (i, marginal) in marginals.iter().enumerate() {
            if mask & (1 << i) != 0 {
                members.push(i);
                for (a, b) in sum.iter_mut().zip(marginal) {
                    *a += b;
                }
            }
        }
        let d = tv_to_scaled_target(&sum, members.len() as u64, state.target);
        if best.as_ref().is_none_or(|(b, _)| d < *b) {
            let exact = d.is_zero();
            best = Some((d, members));
            if exact {
                break;
            }
        }
    }
    Ok(best.expect("nonempty subset range"))
}

const EXACT_MAX_MIX: u64 = 64;
const EXACT_NODE_CAP: u64 = 500_000;

/// Depth-first exact solve of `sum n_i u_i = j * target` over orbit types
/// with availability bounds. Returns type multiplicities on success.
fn exact_mix_dfs(
    types: &[(Vec<BigRational>, u64)],
    target: &[BigRational],
    budget: &Budget,
    used: &mut u64,
) -> Result<Option<Vec<u64>>> {
    let dim = target.len();
    // deviation vectors u_i - target; a solution zeroes their weighted sum
    let devs: Vec<Vec<BigRational>> = types
        .iter()
        .map(|(u, _)| u.iter().zip(target).map(|(a, b)| a - b).collect())
        .collect();
    // per-component reachable range over each suffix of types
    let mut suffix_lo = vec![vec![BigRational::zero(); dim]; types.len() + 1];
    let mut suffix_hi = vec![vec![BigRational::zero(); dim]; types.len() + 1];
    for i in (0..types.len()).rev() {
        let avail = BigRational::from_integer(BigInt::from(types[i].1.min(EXACT_MAX_MIX)));
        for c in 0..dim {
            let swing = &devs[i][c] * &avail;
            if swing.is_negative() {
                suffix_lo[i][c] = &suffix_lo[i + 1][c] + &swing;
                suffix_hi[i][c] = suffix_hi[i + 1][c].clone();
            } else {
                suffix_lo[i][c] = suffix_lo[i + 1][c].clone();
                suffix_hi[i][c] = &suffix_hi[i + 1][c] + &swing;
            }
        }
    }

    struct Dfs<'a> {
        types: &'a [(Vec<BigRational>, u64)],
        devs: &'a [Vec<BigRational>],
        suffix_lo: &'a [Vec<BigRational>],
        suffix_hi: &'a [Vec<BigRational>],
        budget: &'a Budget,
        nodes: u64,
    }

    impl Dfs<'_> {
        fn go(
            &mut self,
            i: usize,
            left: u64,
            taken: u64,
            residual: &mut [BigRational],
            counts: &mut Vec<u64>,
            used: &mut u64,
        ) -> Result<Option<Vec<u64>>> {
            self.nodes += 1;
            if self.nodes > EXACT_NODE_CAP {
                return Ok(None);
            }
            self.budget.charge(used, 1, "orbit mix search")?;
            if i == self.types.len() {
                let solved = taken > 0 && residual.iter().all(|r| r.is_zero());
                return Ok(solved.then(|| counts.clone()));
            }
            // residual must stay coverable by the remaining types
            for (c, r) in residual.iter().enumerate() {
                let need = -r;
                if need < self.suffix_lo[i][c] || need > self.suffix_hi[i][c] {
                    return Ok(None);
                }
            }
            let cap = self.types[i].1.min(left);
            for n in 0..=cap {
                if n > 0 {
                    for (r, d) in residual.iter_mut().zip(&self.devs[i]) {
                        *r += d;
                    }
                }
                counts.push(n);
                let found = self.go(i + 1, left - n, taken + n, residual, counts, used)?;
                counts.pop();
                if found.is_some() {
                    return Ok(found);
                }
            }
            for (r, d) in residual.iter_mut().zip(&self.devs[i]) {
                *r -= d * BigRational::from_integer(BigInt::from(cap));
            }
            Ok(None)
        }
    }

    let mut dfs = Dfs {
        types,
        devs: &devs,
        suffix_lo: &suffix_lo,
        suffix_hi: &suffix_hi,
        budget,
        nodes: 0,
    };
    let mut residual = vec![BigRational::zero(); dim];
    dfs.go(0, EXACT_MAX_MIX, 0, &mut residual, &mut Vec::new(), used)
}

/// Steepest-descent set search: add or drop one orbit type while it improves
/// the balanced-mix distance.
fn greedy_mix(
    types: &[(Vec<BigRational>, u64)],
    start: Vec<u64>,
    state: &mut SearchState,
) -> Result<(BigRational, Vec<u64>)> {
    let dim = state.target.len();
    let eval = |counts: &[u64]| -> (BigRational, u64) {
        let mut sum = vec![BigRational::zero(); dim];
        let mut j = 0u64;
        for (n, (u, _)) in counts.iter().zip(types) {
            j += n;
            if *n > 0 {
                let f = BigRational::from_integer(BigInt::from(*n));
                for (a, b) in sum.iter_mut().zip(u) {
                    *a += b * &f;
                }
            }
        }
        (tv_to_scaled_target(&sum, j, state.target), j)
    };
    let mut counts = start;
    let (mut best, mut j) = eval(&counts);
    loop {
        let mut improved: Option<(BigRational, Vec<u64>, u64)> = None;
        for i in 0..types.len() {
            let mut moves = Vec::new();
            if counts[i] < types[i].1 && j < EXACT_MAX_MIX {
                moves.push(1i64);
            }
            if counts[i] > 0 && j > 1 {
                moves.push(-1);
            }
            for m in moves {
                state
                    .budget
                    .charge(&mut state.used, 1, "orbit mix search")?;
                let mut next = counts.clone();
                next[i] = next[i].wrapping_add_signed(m);
                let (d, nj) = eval(&next);
                if d < best && improved.as_ref().is_none_or(|(b, _, _)| d < *b) {
                    improved = Some((d, next, nj));
                }
            }
        }
        match improved {
            Some((d, next, nj)) => {
                best = d;
                counts = next;
                j = nj;
            }
            None => break,
        }
    }
    Ok((best, counts))
}

fn counts_to_reps(types: &[(Vec<BigRational>, u64)], members: &[Vec<u32>], counts: &[u64]) -> Vec<u32> {
    let mut reps = Vec::new();
    for (i, &n) in counts.iter().enumerate() {
        reps.extend_from_slice(&members[i][..n as usize]);
    }
    debug_assert!(!types.is_empty());
    reps
}

/// Searches for a balanced orbit mix whose rank-`level` cylinders match the
/// target within `eps` in total variation, escalating the orbit depth from
/// `level` to 4. Returns the best mix found even when the tolerance is not
/// met; `reached` records which case occurred.
pub fn poulsen_witness(
    target: &MarkovMeasure,
    level: usize,
    eps: &BigRational,
    budget: &Budget,
) -> Result<PoulsenWitness> {
    if level == 0 || level as u64 > MAX_LEVEL {
        return Err(Error::input(format!(
            "cylinder rank must lie in 1..={MAX_LEVEL}, got {level}"
        )));
    }
    if eps.is_negative() {
        return Err(Error::input("tolerance must be nonnegative"));
    }
    let graph = target.graph();
    if graph.num_levels() <= level {
        return Err(Error::input(format!(
            "target graph has levels 0..={}, need {level}",
            graph.num_levels() - 1
        )));
    }

    // target cylinder mass per rank-`level` pattern
    let mut target_vec = Vec::with_capacity(1 << rank_size(level));
    for q in 0u32..1 << rank_size(level) {
        let path = function_to_path(graph, q, level)?;
        target_vec.push(target.cylinder_probability(&path)?);
    }

    let mut state = SearchState {
        target: &target_vec,
        budget,
        used: 0,
    };
    let mut best: Option<PoulsenWitness> = None;
    let mut prev_best_reps: Option<Vec<u32>> = None;

    for depth in level..=MAX_LEVEL as usize {
        let reps = level_orbits(depth);
        state
            .budget
            .charge(&mut state.used, reps.len() as u64, "orbit enumeration")?;

        let (distance, chosen_reps): (BigRational, Vec<u32>) = if reps.len() <= 16 {
            let marginals: Vec<Vec<BigRational>> = reps
                .iter()
                .map(|&r| orbit_marginal_vec(r, depth, level))
                .collect();
            let (d, members) = best_subset_exhaustive(&marginals, &mut state)?;
            (d, members.into_iter().map(|i| reps[i]).collect())
        } else {
            // group orbits sharing a marginal; a mix only needs counts per type
            let mut by_type: BTreeMap<Vec<BigRational>, Vec<u32>> = BTreeMap::new();
            for &r in &reps {
                by_type
                    .entry(orbit_marginal_vec(r, depth, level))
                    .or_default()
                    .push(r);
            }
            let members: Vec<Vec<u32>> = by_type.values().cloned().collect();
            let types: Vec<(Vec<BigRational>, u64)> = by_type
                .into_iter()
                .map(|(u, m)| (u, m.len() as u64))
                .collect();

            if let Some(counts) =
                exact_mix_dfs(&types, &target_vec, budget, &mut state.used)?
            {
                (BigRational::zero(), counts_to_reps(&types, &members, &counts))
            } else {
                // seed greedy with the doubled previous best (its marginal is
                // unchanged by periodic doubling) and with every single type
                let mut starts: Vec<Vec<u64>> = Vec::new();
                if let Some(prev) = &prev_best_reps {
                    let mut counts = vec![0u64; types.len()];
                    let mut ok = true;
                    for &r in prev {
                        let lifted = canonical(extend_periodic(r, depth - 1, depth), depth);
                        match members.iter().position(|m| m.contains(&lifted)) {
                            Some(i) if counts[i] < types[i].1 => counts[i] += 1,
                            _ => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if ok {
                        starts.push(counts);
                    }
                }
                for i in 0..types.len() {
                    let mut counts = vec![0u64; types.len()];
                    counts[i] = 1;
                    starts.push(counts);
                }
                let mut depth_best: Option<(BigRational, Vec<u64>)> = None;
                for start in starts {
                    let (d, counts) = greedy_mix(&types, start, &mut state)?;
                    if depth_best.as_ref().is_none_or(|(b, _)| d < *b) {
                        let exact = d.is_zero();
                        depth_best = Some((d, counts));
                        if exact {
                            break;
                        }
                    }
                }
                let (d, counts) = depth_best.expect("at least one greedy start");
                (d, counts_to_reps(&types, &members, &counts))
            }
        };

        let measure = FiniteOrbitMeasure::new(depth, &chosen_reps)?;
        if best.as_ref().is_none_or(|b| distance < b.distance) {
            best = Some(PoulsenWitness {
                measure: measure.clone(),
                distance: distance.clone(),
                level,
                reached: distance <= *eps,
            });
        }
        prev_best_reps = Some(measure.orbit_reps().to_vec());
        if distance <= *eps {
            break;
        }
    }
    Ok(best.expect("at least one depth searched"))
}

/// Pairwise total variation distances between the level-`n` central measures
/// of the given characters. Exact closed form over the Young graph level.
pub fn boundary_separation(
    thetas: &[ThomaParameter],
    n: u64,
) -> Result<Vec<Vec<BigRational>>> {
    if n > 8 {
        return Err(Error::resource(format!(
            "separation at level {n} needs the full character table of degree {n}; 8 is the cap"
        )));
    }
    let shapes: Vec<Partition> = Partition::all_of_size(n);
    let dims: Vec<BigRational> = shapes
        .iter()
        .map(|p| BigRational::from_integer(BigInt::from(crate::characters::hook_dimension(p))))
        .collect();
    let weights: Vec<Vec<BigRational>> = thetas
        .iter()
        .map(|t| {
            Ok(thoma_level_weights(t, n)?
                .into_iter()
                .map(|(_, w)| w)
                .collect::<Vec<_>>())
        })
        .collect::<Result<_>>()?;
    let mut out = vec![vec![BigRational::zero(); thetas.len()]; thetas.len()];
    for i in 0..thetas.len() {
        for j in 0..i {
            let mut l1 = BigRational::zero();
            for ((wi, wj), d) in weights[i].iter().zip(&weights[j]).zip(&dims) {
                l1 += (wi - wj).abs() * d;
            }
            let dist = l1 / BigRational::from_integer(BigInt::from(2));
            out[i][j] = dist.clone();
            out[j][i] = dist;
        }
    }
    Ok(out)
}

/// Human-readable orbit labels of a witness mix.
pub fn witness_labels(measure: &FiniteOrbitMeasure) -> Vec<String> {
    measure
        .orbit_reps()
        .iter()
        .map(|&r| pattern_label(r, measure.depth()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn bernoulli_is_coherent_and_uniform() {
        let m = bernoulli_measure(3).unwrap();
        assert!(m.is_coherent());
        let dist = m.cylinder_distribution(2, &Budget::default()).unwrap();
        assert_eq!(dist.len(), 16);
        for (_, p) in dist.iter() {
            assert_eq!(p.clone(), rat(1, 16));
        }
    }

    #[test]
    fn zeros_measure_is_a_coherent_point_mass() {
        let m = zeros_measure(3).unwrap();
        assert!(m.is_coherent());
        let dist = m.cylinder_distribution(3, &Budget::default()).unwrap();
        assert_eq!(dist.len(), 1);
        assert_eq!(dist.total_mass(), BigRational::one());
    }

    #[test]
    fn mix_construction_canonicalizes() {
        let m = FiniteOrbitMeasure::new(2, &[0b1000, 0b0111]).unwrap();
        assert_eq!(m.orbit_reps(), &[0b0001, 0b0111]);
        assert_eq!(m.orbit_mass(), rat(1, 2));
        // 0b1000 and 0b0100 share an orbit
        assert!(FiniteOrbitMeasure::new(2, &[0b1000, 0b0100]).is_err());
        assert!(FiniteOrbitMeasure::new(0, &[0]).is_err());
        assert!(FiniteOrbitMeasure::new(5, &[0]).is_err());
        assert!(FiniteOrbitMeasure::new(1, &[]).is_err());
        assert!(FiniteOrbitMeasure::new(1, &[16]).is_err());
    }

    #[test]
    fn pinned_two_orbit_mix_matches_coin_flips_at_rank_one() {
        // orbits of 0001 and 0111 balance each other exactly one rank down
        let m = FiniteOrbitMeasure::new(2, &[0b0001, 0b0111]).unwrap();
        let marginal = m.level_marginal(1).unwrap();
        for q in 0u32..4 {
            assert_eq!(marginal[&q], rat(1, 4), "pattern {q:02b}");
        }
        assert!(m.is_invariant_at(1).unwrap());
        assert!(m.is_invariant_at(2).unwrap());
        assert!(m.is_invariant_at(3).unwrap());
    }

    #[test]
    fn single_orbit_marginals_at_own_rank_are_uniform_on_the_orbit() {
        let m = FiniteOrbitMeasure::single(2, 0b0001).unwrap();
        let marginal = m.level_marginal(2).unwrap();
        assert_eq!(marginal.len(), 4);
        for &q in &[1u32, 2, 4, 8] {
            assert_eq!(marginal[&q], rat(1, 4));
        }
    }

    #[test]
    fn marginals_above_depth_extend_periodically() {
        let m = FiniteOrbitMeasure::single(1, 0b01).unwrap();
        let marginal = m.level_marginal(2).unwrap();
        assert_eq!(marginal.len(), 2);
        assert_eq!(marginal[&0b0101], rat(1, 2));
        assert_eq!(marginal[&0b1010], rat(1, 2));
        assert!(m.is_invariant_at(2).unwrap());
    }

    #[test]
    fn cylinder_distribution_agrees_with_marginal() {
        let g = solvable_group_graph(2).unwrap();
        let m = FiniteOrbitMeasure::new(2, &[0b0011, 0b0101]).unwrap();
        let dist = m.cylinder_distribution(&g, 2).unwrap();
        assert_eq!(dist.total_mass(), BigRational::one());
        let marginal = m.level_marginal(2).unwrap();
        for (q, mass) in marginal {
            let path = function_to_path(&g, q, 2).unwrap();
            assert_eq!(dist.get(&path), mass);
        }
    }

    #[test]
    fn witness_for_zeros_target_is_immediate() {
        let target = zeros_measure(2).unwrap();
        let w = poulsen_witness(&target, 1, &BigRational::zero(), &Budget::default()).unwrap();
        assert!(w.reached);
        assert_eq!(w.distance, BigRational::zero());
        assert_eq!(w.measure.depth(), 1);
        assert_eq!(w.measure.orbit_reps(), &[0]);
    }

    #[test]
    fn witness_for_coin_flips_at_rank_one_needs_depth_two() {
        let target = bernoulli_measure(1).unwrap();
        let w = poulsen_witness(&target, 1, &BigRational::zero(), &Budget::default()).unwrap();
        assert!(w.reached);
        assert_eq!(w.distance, BigRational::zero());
        assert_eq!(w.measure.depth(), 2);
        assert!(w.measure.is_invariant_at(1).unwrap());
        // and a depth-one mix cannot do it: the best distance there is 1/6
        let reps = level_orbits(1);
        let marginals: Vec<Vec<BigRational>> = reps
            .iter()
            .map(|&r| orbit_marginal_vec(r, 1, 1))
            .collect();
        let target_vec: Vec<BigRational> = (0..4).map(|_| rat(1, 4)).collect();
        let mut state = SearchState {
            target: &target_vec,
            budget: &Budget::default(),
            used: 0,
        };
        let (best1, _) = best_subset_exhaustive(&marginals, &mut state).unwrap();
        assert!(best1 > BigRational::zero());
    }

    #[test]
    fn exact_dfs_finds_depth_three_rank_two_solution() {
        let target = bernoulli_measure(2).unwrap();
        let w = poulsen_witness(&target, 2, &BigRational::zero(), &Budget::default()).unwrap();
        assert!(w.reached, "distance {} at depth {}", w.distance, w.measure.depth());
        assert_eq!(w.distance, BigRational::zero());
        assert_eq!(w.measure.depth(), 3);
        assert!(w.measure.is_invariant_at(2).unwrap());
        // the reported distance matches the public cylinder comparison
        let g = solvable_group_graph(2).unwrap();
        let dist = w.measure.cylinder_distribution(&g, 2).unwrap();
        let bern = target.cylinder_distribution(2, &Budget::default()).unwrap();
        assert_eq!(cylinder_distance(&dist, &bern).unwrap(), BigRational::zero());
    }

    #[test]
    fn loose_tolerance_stops_at_depth_two() {
        let target = bernoulli_measure(2).unwrap();
        let w = poulsen_witness(&target, 2, &rat(1, 4), &Budget::default()).unwrap();
        assert!(w.reached);
        assert_eq!(w.measure.depth(), 2);
        assert_eq!(w.distance, rat(3, 14));
    }

    #[test]
    fn witness_budget_trips() {
        let target = bernoulli_measure(2).unwrap();
        let err =
            poulsen_witness(&target, 2, &BigRational::zero(), &Budget::new(50)).unwrap_err();
        assert!(matches!(err, Error::Resource(_)));
    }

    #[test]
    fn separation_of_plancherel_and_one_row() {
        let zero = ThomaParameter::zero();
        let triv = ThomaParameter::new(vec![rat(1, 1)], vec![]).unwrap();
        let d = boundary_separation(&[zero, triv], 2).unwrap();
        assert_eq!(d[0][0], BigRational::zero());
        assert_eq!(d[0][1], rat(1, 2));
        assert_eq!(d[1][0], rat(1, 2));

        assert!(boundary_separation(&[ThomaParameter::zero()], 9).is_err());
    }

    #[test]
    fn separation_grows_with_level() {
        let zero = ThomaParameter::zero();
        let half = ThomaParameter::new(vec![rat(1, 2), rat(1, 2)], vec![]).unwrap();
        let d3 = boundary_separation(&[zero.clone(), half.clone()], 3).unwrap()[0][1].clone();
        let d6 = boundary_separation(&[zero, half], 6).unwrap()[0][1].clone();
        assert!(d6 > d3);
        assert!(d6 < BigRational::one());
        assert!(d6.to_f64().unwrap() > 0.5);
    }
}
