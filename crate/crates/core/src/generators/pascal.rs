//! The Pascal graph: level n holds vertices `k,l` with `k + l = n`, where a
//! path is a binary word with k zeros and l ones.

use crate::error::{Error, Result};
use crate::graph::GradedGraph;

/// Label of the vertex counting `k` zero-steps and `l` one-steps.
pub fn pascal_label(k: u64, l: u64) -> String {
    format!("{k},{l}")
}

pub fn parse_pascal_label(s: &str) -> Result<(u64, u64)> {
    let (k, l) = s
        .split_once(',')
        .ok_or_else(|| Error::input(format!("Pascal vertex must look like 2,2, got {s:?}")))?;
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| Error::input(format!("bad Pascal coordinate {t:?} in {s:?}")))
    };
    Ok((parse(k)?, parse(l)?))
}

/// Builds levels `0..=max_level`. Level n is ordered by ascending k, and the
/// two edges out of `k,l` go to `k+1,l` (the zero-step) and `k,l+1`.
pub fn pascal_graph(max_level: u64) -> Result<GradedGraph> {
    let mut levels = Vec::new();
    for n in 0..=max_level {
        levels.push(
            (0..=n)
                .map(|k| pascal_label(k, n - k))
                .collect::<Vec<String>>(),
        );
    }
    let mut edges = Vec::new();
    for n in 0..max_level as usize {
        for k in 0..=n {
            // index of k,l at level n is k
            edges.push((n, k, k + 1, 1));
            edges.push((n, k, k, 1));
        }
    }
    GradedGraph::new(levels, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn binomial(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    #[test]
    fn dimensions_are_binomials() {
        let g = pascal_graph(8).unwrap();
        for n in 0..=8u64 {
            for k in 0..=n {
                let v = g.vertex(n as usize, &pascal_label(k, n - k)).unwrap();
                assert_eq!(
                    g.dimension(v).unwrap(),
                    BigUint::from(binomial(n, k)),
                    "{k},{}",
                    n - k
                );
            }
        }
        assert_eq!(
            g.dimension(g.vertex(4, "2,2").unwrap()).unwrap(),
            BigUint::from(6u32)
        );
    }

    #[test]
    fn level_totals_are_powers_of_two() {
        let g = pascal_graph(10).unwrap();
        for n in 0..=10usize {
            assert_eq!(g.total_paths(n).unwrap(), BigUint::from(1u64 << n));
        }
    }

    #[test]
    fn label_round_trip() {
        assert_eq!(parse_pascal_label("2,2").unwrap(), (2, 2));
        assert_eq!(parse_pascal_label(&pascal_label(0, 7)).unwrap(), (0, 7));
        assert!(parse_pascal_label("3").is_err());
        assert!(parse_pascal_label("a,b").is_err());
    }

    #[test]
    fn in_edges_order_puts_zero_step_first() {
        // sources of k,l at level n are k-1,l (zero-step, index k-1) then
        // k,l-1 (one-step, index k); ascending source index is that order
        let g = pascal_graph(4).unwrap();
        let v = g.vertex(4, "2,2").unwrap();
        let ins = g.in_edges(v).unwrap();
        assert_eq!(ins, [(1, 1), (2, 1)]);
        assert_eq!(g.label(crate::graph::VertexId::new(3, 1)).unwrap(), "1,2");
        assert_eq!(g.label(crate::graph::VertexId::new(3, 2)).unwrap(), "2,1");
    }
}
