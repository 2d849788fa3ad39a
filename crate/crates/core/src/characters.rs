//! Extreme characters of the infinite symmetric group in Thoma form,
//! irreducible symmetric group characters, and the induced vertex weights on
//! the Young graph.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Conjugacy class of a finite symmetric group, stored as the partition of
/// cycle lengths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleType {
    partition: Partition,
}

impl CycleType {
    pub fn new(partition: Partition) -> Self {
        CycleType { partition }
    }

    /// Accepts cycle lengths in any order; zero lengths are rejected.
    pub fn from_parts(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::input("cycle lengths must be positive"));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType {
            partition: Partition::new(parts)?,
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Degree of the permutations in the class.
    pub fn size(&self) -> u64 {
        self.partition.size()
    }

    /// Multiplicity of each cycle length.
    pub fn counts(&self) -> BTreeMap<u64, u64> {
        let mut counts = BTreeMap::new();
        for &m in self.partition.parts() {
            *counts.entry(m).or_insert(0) += 1;
        }
        counts
    }

    /// Centralizer order `prod_m m^(c_m) c_m!`; the class has `n!/z` members.
    pub fn z(&self) -> BigUint {
        let mut z = BigUint::one();
        for (m, c) in self.counts() {
            for _ in 0..c {
                z *= BigUint::from(m);
            }
            z *= factorial(c);
        }
        z
    }
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Frontier data of an extreme character: weakly decreasing nonnegative
/// rationals `alpha` and `beta` with total at most 1. Trailing zeros are
/// trimmed on construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThomaParameter {
    alpha: Vec<BigRational>,
    beta: Vec<BigRational>,
}

impl ThomaParameter {
    pub fn new(mut alpha: Vec<BigRational>, mut beta: Vec<BigRational>) -> Result<Self> {
        for (name, list) in [("alpha", &alpha), ("beta", &beta)] {
            if list.iter().any(|r| r.is_negative()) {
                return Err(Error::input(format!("{name} entries must be nonnegative")));
            }
            if list.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::input(format!(
                    "{name} entries must be weakly decreasing"
                )));
            }
        }
        let total: BigRational = alpha.iter().chain(beta.iter()).sum();
        if total > BigRational::one() {
            return Err(Error::input(format!(
                "alpha and beta must sum to at most 1, got {total}"
            )));
        }
        while alpha.last().is_some_and(|r| r.is_zero()) {
            alpha.pop();
        }
        while beta.last().is_some_and(|r| r.is_zero()) {
            beta.pop();
        }
        Ok(ThomaParameter { alpha, beta })
    }

    /// The parameter with no point masses, whose character is the delta at
    /// the identity.
    pub fn zero() -> Self {
        ThomaParameter {
            alpha: Vec::new(),
            beta: Vec::new(),
        }
    }

    /// Builds from comma-separated rational lists, e.g. `"1/2,1/2"` and `""`.
    pub fn parse(alpha: &str, beta: &str) -> Result<Self> {
        ThomaParameter::new(parse_rational_list(alpha)?, parse_rational_list(beta)?)
    }

    pub fn alpha(&self) -> &[BigRational] {
        &self.alpha
    }

    pub fn beta(&self) -> &[BigRational] {
        &self.beta
    }

    /// Mass left to the continuous part: `1 - sum alpha - sum beta`.
    pub fn gamma(&self) -> BigRational {
        BigRational::one() - self.alpha.iter().chain(self.beta.iter()).sum::<BigRational>()
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_empty() && self.beta.is_empty()
    }
}

pub fn parse_rational_list(text: &str) -> Result<Vec<BigRational>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| {
            let s = s.trim();
            s.parse::<BigRational>()
                .map_err(|_| Error::input(format!("bad rational {s:?}")))
        })
        .collect()
}

/// The specialization `p_m -> sum alpha^m + (-1)^(m-1) sum beta^m` of the
/// power sums, with the convention that `m = 1` always yields 1.
pub fn super_power_sum(theta: &ThomaParameter, m: u64) -> Result<BigRational> {
    if m == 0 {
        return Err(Error::input("power sum index must be positive"));
    }
    if m == 1 {
        return Ok(BigRational::one());
    }
    let power = |r: &BigRational| -> BigRational {
        let mut acc = BigRational::one();
        for _ in 0..m {
            acc *= r;
        }
        acc
    };
    let alpha: BigRational = theta.alpha.iter().map(power).sum();
    let beta: BigRational = theta.beta.iter().map(power).sum();
    Ok(if m.is_multiple_of(2) { alpha - beta } else { alpha + beta })
}

/// Extreme character value on a conjugacy class: the product of the power
/// sums over cycle lengths at least 2.
pub fn thoma_character(theta: &ThomaParameter, rho: &CycleType) -> Result<BigRational> {
    let mut value = BigRational::one();
    for &m in rho.partition().parts() {
        if m >= 2 {
            value *= super_power_sum(theta, m)?;
        }
    }
    Ok(value)
}

fn beta_set(lambda: &Partition) -> Vec<u64> {
    let rows = lambda.rows() as u64;
    let mut set: Vec<u64> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + rows - 1 - i as u64)
        .collect();
    set.sort_unstable();
    set
}

fn strip_recursion(
    beta: &[u64],
    cycles: &[u64],
    idx: usize,
    memo: &mut HashMap<(Vec<u64>, usize), BigInt>,
) -> BigInt {
    if idx == cycles.len() {
        // sizes matched at the top level, so the shape is exhausted here
        debug_assert!(beta.iter().enumerate().all(|(i, &b)| b == i as u64));
        return BigInt::one();
    }
    let key = (beta.to_vec(), idx);
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let k = cycles[idx];
    let mut total = BigInt::zero();
    for (pos, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let t = b - k;
        let ins = beta.partition_point(|&c| c < t);
        if beta.get(ins) == Some(&t) {
            continue;
        }
        // removing the strip hops over the beta entries strictly between
        let sign = if (pos - ins) % 2 == 0 { 1 } else { -1 };
        let mut next = beta.to_vec();
        next.remove(pos);
        next.insert(ins, t);
        total += sign * strip_recursion(&next, cycles, idx + 1, memo);
    }
    memo.insert(key, total.clone());
    total
}

/// Irreducible character of the symmetric group, computed by repeated
/// border-strip removal on the beta-set of the shape.
pub fn irreducible_character(lambda: &Partition, rho: &CycleType) -> Result<BigInt> {
    if lambda.size() != rho.size() {
        return Err(Error::input(format!(
            "shape {lambda} has size {} but the class has size {}",
            lambda.size(),
            rho.size()
        )));
    }
    let beta = beta_set(lambda);
    let mut memo = HashMap::new();
    Ok(strip_recursion(
        &beta,
        rho.partition().parts(),
        0,
        &mut memo,
    ))
}

/// Number of root paths to the shape in the Young graph, via the hook
/// length formula.
pub fn hook_dimension(lambda: &Partition) -> BigUint {
    let numer = factorial(lambda.size());
    let denom: BigUint = lambda.hook_lengths().iter().map(|&h| BigUint::from(h)).product();
    // hooks always divide n!
    numer / denom
}

/// Per-path weight of a Young graph vertex under the character `theta`:
/// the sum over classes of `chi^lambda(rho) / z_rho` times the power-sum
/// specialization of `rho`.
pub fn thoma_vertex_weight(theta: &ThomaParameter, lambda: &Partition) -> Result<BigRational> {
    let n = lambda.size();
    let mut total = BigRational::zero();
    for rho_part in Partition::all_of_size(n) {
        let rho = CycleType::new(rho_part);
        let coeff = class_coefficient(theta, &rho)?;
        if coeff.is_zero() {
            continue;
        }
        let chi = irreducible_character(lambda, &rho)?;
        total += BigRational::from_integer(chi) * coeff;
    }
    Ok(total)
}

fn class_coefficient(theta: &ThomaParameter, rho: &CycleType) -> Result<BigRational> {
    let mut coeff = BigRational::new(BigInt::one(), BigInt::from(rho.z()));
    for &m in rho.partition().parts() {
        if coeff.is_zero() {
            break;
        }
        if m >= 2 {
            coeff *= super_power_sum(theta, m)?;
        }
    }
    Ok(coeff)
}

/// Weights of a whole Young graph level in descending lexicographic order.
pub fn thoma_level_weights(
    theta: &ThomaParameter,
    n: u64,
) -> Result<Vec<(Partition, BigRational)>> {
    let mut coeffs = Vec::new();
    for rho_part in Partition::all_of_size(n) {
        let rho = CycleType::new(rho_part);
        let coeff = class_coefficient(theta, &rho)?;
        if !coeff.is_zero() {
            coeffs.push((rho, coeff));
        }
    }
    Partition::all_of_size(n)
        .into_iter()
        .map(|lambda| {
            let mut total = BigRational::zero();
            for (rho, coeff) in &coeffs {
                let chi = irreducible_character(&lambda, rho)?;
                total += BigRational::from_integer(chi) * coeff;
            }
            Ok((lambda, total))
        })
        .collect()
}

/// Deterministic shape of size `n` tracking the frequencies `theta`: row i
/// gets `floor(alpha_i n)` cells, column j gets `floor(beta_j n)`, leftover
/// cells join the first row. Fails when the floors do not stack into a
/// partition.
pub fn shape_sequence(theta: &ThomaParameter, n: u64) -> Result<Partition> {
    let floor = |r: &BigRational| -> u64 {
        let scaled = r * BigRational::from_integer(BigInt::from(n));
        (scaled.numer() / scaled.denom())
            .try_into()
            .expect("nonnegative floor")
    };
    let rows: Vec<u64> = theta.alpha.iter().map(floor).filter(|&r| r > 0).collect();
    let cols: Vec<u64> = theta.beta.iter().map(floor).filter(|&c| c > 0).collect();
    let used: u64 = rows.iter().sum::<u64>() + cols.iter().sum::<u64>();
    debug_assert!(used <= n);

    if !cols.is_empty() && !rows.is_empty() && *rows.last().unwrap() < cols.len() as u64 {
        return Err(Error::input(format!(
            "frequencies do not stack at n = {n}: last row {} is narrower than {} columns",
            rows.last().unwrap(),
            cols.len()
        )));
    }
    let mut parts = rows.clone();
    let col_shape = Partition::new(cols)?.conjugate();
    parts.extend_from_slice(col_shape.parts());
    let leftover = n - used;
    if leftover > 0 {
        if parts.is_empty() {
            parts.push(leftover);
        } else {
            parts[0] += leftover;
        }
    }
    Partition::new(parts).map_err(|_| {
        Error::input(format!(
            "frequencies do not stack into a partition at n = {n}"
        ))
    })
}
