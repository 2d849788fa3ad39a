//! Orbit graph of the infinite elementary 2-group acting on its binary
//! patterns. Level n holds the translation orbits of bit patterns on the
//! subgroup of rank n; edges count pattern extensions.
//!
//! A pattern on the rank-m subgroup assigns a bit to each of its 2^m
//! elements. Elements are indexed 0..2^m with coordinate i of the group
//! element stored in bit i of the index; the pattern packs into a `u32`
//! with element 0 at the most significant position, so numeric order on
//! packed patterns equals lexicographic order on bit strings.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{FinitePath, GradedGraph, PathStep};

/// Orbit enumeration at level n needs 2^(2^n) patterns, so 4 is the last
/// tractable level.
pub const MAX_LEVEL: u64 = 4;

/// Number of group elements at rank `m`.
pub fn rank_size(m: usize) -> usize {
    1 << m
}

/// Bit assigned to element `x` by the packed pattern `p` of rank `m`.
pub fn pattern_bit(p: u32, m: usize, x: usize) -> u8 {
    let len = rank_size(m);
    debug_assert!(x < len);
    ((p >> (len - 1 - x)) & 1) as u8
}

/// Translation action: the result assigns to `x` the bit `p` assigns to
/// `x ^ g`.
pub fn translate(p: u32, g: usize, m: usize) -> u32 {
    let len = rank_size(m);
    let mut out = 0u32;
    for x in 0..len {
        out |= u32::from(pattern_bit(p, m, x ^ g)) << (len - 1 - x);
    }
    out
}

/// Orbit of `p` under all rank-`m` translations, ascending and deduplicated.
pub fn orbit(p: u32, m: usize) -> Vec<u32> {
    let mut elems: Vec<u32> = (0..rank_size(m)).map(|g| translate(p, g, m)).collect();
    elems.sort_unstable();
    elems.dedup();
    elems
}

/// Smallest pattern in the orbit of `p`, the canonical representative.
pub fn canonical(p: u32, m: usize) -> u32 {
    (0..rank_size(m))
        .map(|g| translate(p, g, m))
        .min()
        .expect("nonempty orbit")
}

/// Restriction of a rank-`m` pattern to the rank `m - 1` subgroup (the
/// elements with coordinate m-1 clear, stored in the high half).
pub fn restrict_half(p: u32, m: usize) -> u32 {
    debug_assert!(m >= 1);
    p >> (rank_size(m) / 2)
}

/// Restriction down to rank `k <= m`.
pub fn restrict_to(p: u32, m: usize, k: usize) -> u32 {
    debug_assert!(k <= m);
    p >> (rank_size(m) - rank_size(k))
}

/// Periodic extension up to rank `k >= m`: element `x` reads the bit of its
/// projection to the rank-`m` subgroup.
pub fn extend_periodic(p: u32, m: usize, k: usize) -> u32 {
    debug_assert!(m <= k && k as u64 <= MAX_LEVEL);
    let len = rank_size(k);
    let mask = rank_size(m) - 1;
    let mut out = 0u32;
    for x in 0..len {
        out |= u32::from(pattern_bit(p, m, x & mask)) << (len - 1 - x);
    }
    out
}

/// Hex label of a pattern, zero-padded to the level's fixed width.
pub fn pattern_label(p: u32, m: usize) -> String {
    let width = rank_size(m).div_ceil(4);
    format!("{p:0width$x}")
}

/// Parses `pattern_label` output; also accepts `0b` plus exactly 2^m binary
/// digits.
pub fn parse_pattern(s: &str, m: usize) -> Result<u32> {
    let len = rank_size(m);
    let p = if let Some(bits) = s.strip_prefix("0b") {
        if bits.len() != len || bits.bytes().any(|b| b != b'0' && b != b'1') {
            return Err(Error::input(format!(
                "binary pattern needs exactly {len} bits of 0/1, got {s:?}"
            )));
        }
        u32::from_str_radix(bits, 2).expect("checked binary")
    } else {
        u32::from_str_radix(s, 16)
            .map_err(|_| Error::input(format!("bad hex pattern {s:?} for rank {m}")))?
    };
    if m < 5 && u64::from(p) >= 1u64 << len {
        return Err(Error::input(format!(
            "pattern {s:?} does not fit rank {m} ({len} bits)"
        )));
    }
    Ok(p)
}

/// Canonical representatives of all rank-`m` orbits, ascending.
pub fn level_orbits(m: usize) -> Vec<u32> {
    let len = rank_size(m);
    let mut reps = Vec::new();
    for p in 0u64..(1u64 << len) {
        let p = p as u32;
        if canonical(p, m) == p {
            reps.push(p);
        }
    }
    reps
}

/// Builds levels `0..=max_level`, `max_level <= 4`. Level 0 is an artificial
/// root (empty label) standing for the pattern on the trivial subgroup that
/// carries no bits yet; level n lists orbit representatives ascending. The
/// multiplicity of `A -> O` is the number of patterns in `O` restricting to
/// a fixed pattern of `A`, which is independent of the choice.
pub fn solvable_group_graph(max_level: u64) -> Result<GradedGraph> {
    if max_level > MAX_LEVEL {
        return Err(Error::resource(format!(
            "orbit enumeration at level {max_level} needs 2^(2^{max_level}) patterns; \
             the last supported level is {MAX_LEVEL}"
        )));
    }
    let mut levels: Vec<Vec<String>> = vec![vec![String::new()]];
    let mut edges = Vec::new();
    let mut prev_reps: Vec<u32> = Vec::new();

    for m in 1..=max_level as usize {
        let reps = level_orbits(m);
        levels.push(reps.iter().map(|&p| pattern_label(p, m)).collect());

        if m == 1 {
            // every extension of the empty pattern is reachable, one copy
            // per orbit element
            for (j, &rep) in reps.iter().enumerate() {
                edges.push((0, 0, j, orbit(rep, m).len() as u64));
            }
        } else {
            let prev_index: BTreeMap<u32, usize> = prev_reps
                .iter()
                .enumerate()
                .map(|(i, &p)| (p, i))
                .collect();
            for (j, &rep) in reps.iter().enumerate() {
                // tally restrictions orbit-wise; the fiber over one fixed
                // representative has size tally / orbit size
                let mut tally: BTreeMap<u32, u64> = BTreeMap::new();
                for &e in &orbit(rep, m) {
                    *tally.entry(canonical(restrict_half(e, m), m - 1)).or_insert(0) += 1;
                }
                for (a, count) in tally {
                    let a_orbit = orbit(a, m - 1).len() as u64;
                    debug_assert_eq!(count % a_orbit, 0, "restriction tally not orbit-uniform");
                    edges.push((m - 1, prev_index[&a], j, count / a_orbit));
                }
            }
        }
        prev_reps = reps;
    }
    GradedGraph::new(levels, &edges)
}

/// Path encoding of a full pattern `x` of rank `level`: step n enters the
/// orbit of the restriction of `x` to rank n+1, and the copy number is the
/// rank of that restriction among the orbit elements extending the previous
/// restriction, ascending.
pub fn function_to_path(graph: &GradedGraph, x: u32, level: usize) -> Result<FinitePath> {
    if level as u64 > MAX_LEVEL {
        return Err(Error::resource(format!(
            "patterns above rank {MAX_LEVEL} are not enumerable"
        )));
    }
    if level >= graph.num_levels() {
        return Err(Error::input(format!(
            "graph has levels 0..={}, pattern lives at {level}",
            graph.num_levels() - 1
        )));
    }
    // the root carries no bits, so only the empty pattern reaches level 0
    let bits = if level == 0 { 0 } else { rank_size(level) };
    if u64::from(x) >= 1u64 << bits {
        return Err(Error::input(format!(
            "pattern {x:#x} does not fit rank {level}"
        )));
    }
    let mut path = FinitePath::root();
    let mut prev = 0u32;
    for n in 1..=level {
        let cur = restrict_to(x, level, n);
        let rep = canonical(cur, n);
        let target = graph.vertex(n, &pattern_label(rep, n))?;
        let fiber: Vec<u32> = orbit(rep, n)
            .into_iter()
            .filter(|&e| n == 1 || restrict_half(e, n) == prev)
            .collect();
        let copy = fiber
            .iter()
            .position(|&e| e == cur)
            .expect("restriction lies in its own orbit fiber") as u64;
        path.push(PathStep {
            target: target.index,
            copy,
        });
        prev = cur;
    }
    Ok(path)
}

/// Inverse of `function_to_path`; the path must lie in a graph built by
/// `solvable_group_graph`.
pub fn path_to_function(graph: &GradedGraph, path: &FinitePath) -> Result<u32> {
    graph.validate_path(path)?;
    let mut prev = 0u32;
    for (idx, step) in path.steps().iter().enumerate() {
        let n = idx + 1;
        let label = graph.label(crate::graph::VertexId::new(n, step.target))?;
        let rep = parse_pattern(label, n)?;
        let fiber: Vec<u32> = orbit(rep, n)
            .into_iter()
            .filter(|&e| n == 1 || restrict_half(e, n) == prev)
            .collect();
        prev = *fiber.get(step.copy as usize).copied().as_ref().ok_or_else(|| {
            Error::input(format!(
                "copy {} at step {idx} exceeds the fiber over the previous restriction",
                step.copy
            ))
        })?;
    }
    Ok(prev)
}
