//! Integer partitions with the covering relation of the Young lattice.

use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing positive parts; the empty partition has none.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Validates weak decrease, strips trailing zeros.
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// Number of cells.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0) as usize;
        let parts = (0..cols)
            .map(|j| self.parts.iter().filter(|&&p| p > j as u64).count() as u64)
            .collect();
        Partition { parts }
    }

    /// Partitions covering `self`: one cell added in row `r` (0-based,
    /// `r == rows()` meaning a new row). Ascending in `r`.
    pub fn successors(&self) -> Vec<(usize, Partition)> {
        let mut out = Vec::new();
        for r in 0..=self.parts.len() {
            if let Some(next) = self.with_added_cell(r) {
                out.push((r, next));
            }
        }
        out
    }

    /// Adds one cell in row `r` if the result is still a partition.
    pub fn with_added_cell(&self, r: usize) -> Option<Partition> {
        if r > self.parts.len() {
            return None;
        }
        let cur = self.parts.get(r).copied().unwrap_or(0);
        if r > 0 && self.parts[r - 1] == cur {
            return None;
        }
        let mut parts = self.parts.clone();
        if r == parts.len() {
            parts.push(1);
        } else {
            parts[r] += 1;
        }
        Some(Partition { parts })
    }

    /// Partitions covered by `self`: one corner cell removed from row `r`.
    pub fn predecessors(&self) -> Vec<(usize, Partition)> {
        let mut out = Vec::new();
        for r in 0..self.parts.len() {
            let is_corner = r + 1 == self.parts.len() || self.parts[r] > self.parts[r + 1];
            if !is_corner {
                continue;
            }
            let mut parts = self.parts.clone();
            parts[r] -= 1;
            if parts[r] == 0 {
                parts.pop();
            }
            out.push((r, Partition { parts }));
        }
        out
    }

    /// Hook lengths in row-major order.
    pub fn hook_lengths(&self) -> Vec<u64> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.parts[j as usize] - i as u64 - 1);
            }
        }
        out
    }

    /// All partitions of `n` in descending lexicographic order, the canonical
    /// order of a Young-graph level.
    pub fn all_of_size(n: u64) -> Vec<Partition> {
        fn gen(n: u64, max: u64, prefix: &mut Vec<u64>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            let top = max.min(n);
            for k in (1..=top).rev() {
                prefix.push(k);
                gen(n - k, k, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        gen(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parses the `Display` form, e.g. `[3,1,1]` or `[]`.
    pub fn parse(s: &str) -> Result<Partition> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::input(format!("partition must look like [3,1], got {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::input(format!("bad partition part {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}
