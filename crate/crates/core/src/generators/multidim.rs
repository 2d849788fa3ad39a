//! Multidimensional Young graphs: level n holds the n-point order ideals of
//! the grid Z_+^d, edges add one point.

use std::collections::BTreeSet;

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::graph::GradedGraph;

type Point = Vec<u32>;
/// Sorted point list, the canonical form of an ideal.
type Ideal = Vec<Point>;

fn ideal_label(ideal: &Ideal) -> String {
    let mut s = String::from("[");
    for (i, p) in ideal.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        s.push('(');
        for (k, c) in p.iter().enumerate() {
            if k > 0 {
                s.push(',');
            }
            s.push_str(&c.to_string());
        }
        s.push(')');
    }
    s.push(']');
    s
}

/// Points whose insertion keeps `ideal` downward closed: every coordinate
/// predecessor is already present.
fn addable_points(ideal: &Ideal, d: usize) -> Vec<Point> {
    let present: BTreeSet<&Point> = ideal.iter().collect();
    let mut candidates: BTreeSet<Point> = BTreeSet::new();
    candidates.insert(vec![0; d]);
    for p in ideal {
        for k in 0..d {
            let mut q = p.clone();
            q[k] += 1;
            candidates.insert(q);
        }
    }
    candidates
        .into_iter()
        .filter(|q| {
            !present.contains(q)
                && (0..d).all(|k| {
                    if q[k] == 0 {
                        return true;
                    }
                    let mut r = q.clone();
                    r[k] -= 1;
                    present.contains(&r)
                })
        })
        .collect()
}

/// Builds levels `0..=max_level` for the grid of dimension `d >= 1`. Vertices
/// of a level are sorted lexicographically by point list; the budget bounds
/// the ideals materialized per level.
pub fn multidim_young_graph(d: usize, max_level: u64, budget: &Budget) -> Result<GradedGraph> {
    if d == 0 {
        return Err(Error::input("grid dimension must be at least 1"));
    }
    let mut levels: Vec<Vec<String>> = vec![vec![ideal_label(&Vec::new())]];
    let mut current: Vec<Ideal> = vec![Vec::new()];
    let mut edges = Vec::new();
    let mut used = 0u64;
    budget.charge(&mut used, 1, "grid ideal enumeration")?;

    for n in 0..max_level as usize {
        let mut next: BTreeSet<Ideal> = BTreeSet::new();
        for ideal in &current {
            for p in addable_points(ideal, d) {
                let mut grown = ideal.clone();
                let pos = grown.binary_search(&p).unwrap_err();
                grown.insert(pos, p);
                if next.insert(grown) {
                    budget.charge(&mut used, 1, "grid ideal enumeration")?;
                }
            }
        }
        let next: Vec<Ideal> = next.into_iter().collect();
        for (i, ideal) in current.iter().enumerate() {
            for p in addable_points(ideal, d) {
                let mut grown = ideal.clone();
                let pos = grown.binary_search(&p).unwrap_err();
                grown.insert(pos, p);
                let j = next.binary_search(&grown).expect("grown ideal enumerated");
                edges.push((n, i, j, 1));
            }
        }
        levels.push(next.iter().map(ideal_label).collect());
        current = next;
    }
    GradedGraph::new(levels, &edges)
}
