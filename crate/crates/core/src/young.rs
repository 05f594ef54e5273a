//! Partitions, Ferrers diagrams and the finite Young lattices `Y_λ`.
//!
//! Cells are 1-based `(row, column)` with `(1, 1)` at the top left.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::closed::binomial;
use crate::error::{Error, Result};

/// Default bound on `|Y_λ|` for [`young_edges_bruteforce`].
pub const DEFAULT_IDEAL_CAP: usize = 1 << 20;

/// Weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(p) = parts.iter().position(|&x| x == 0) {
            return Err(Error::Usage(format!("part {} is zero", p + 1)));
        }
        if let Some(p) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Usage(format!(
                "parts must be non-increasing: {} < {} at position {}",
                parts[p],
                parts[p + 1],
                p + 2
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `m` rows of length `n`.
    pub fn rectangle(m: u32, n: u32) -> Self {
        if n == 0 {
            return Partition::empty();
        }
        Partition {
            parts: vec![n; m as usize],
        }
    }

    /// `(n−1, n−2, …, 1)`.
    pub fn staircase(n: u32) -> Self {
        Partition {
            parts: (1..n).rev().collect(),
        }
    }

    /// Comma-separated parts; empty text or `-` is the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<u32>()
                    .map_err(|_| Error::Usage(format!("bad part {t:?} in partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `λ_1`, zero when empty.
    pub fn width(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ_i`, zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        i.checked_sub(1)
            .and_then(|r| self.parts.get(r))
            .copied()
            .unwrap_or(0)
    }

    pub fn has_cell(&self, cell: Cell) -> bool {
        cell.i >= 1 && cell.j >= 1 && cell.j <= self.part(cell.i)
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |j| Cell { i: r + 1, j }))
    }

    fn from_unsorted_positive(parts: impl Iterator<Item = u32>) -> Self {
        Partition {
            parts: parts.filter(|&p| p > 0).collect(),
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        let body: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", body.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub i: usize,
    pub j: u32,
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.i, self.j)
    }
}

/// `μ ≤ λ` in the Young order.
pub fn contains(mu: &Partition, lambda: &Partition) -> bool {
    mu.len() <= lambda.len() && mu.parts.iter().zip(&lambda.parts).all(|(a, b)| a <= b)
}

/// `|Y_λ|`: partitions fitting inside `λ`.
///
/// Row by row, `ways[v]` counts admissible prefixes whose last part is `v`.
/// The next part `u ≤ min(v, λ_{i+1})`, so `next[u] = Σ_{v ≥ u} ways[v]`.
pub fn ideal_size(lambda: &Partition) -> BigUint {
    let width = lambda.width() as usize;
    let mut ways = vec![BigUint::zero(); width + 1];
    ways[width] = BigUint::one();
    for &bound in &lambda.parts {
        let bound = bound as usize;
        let mut next = vec![BigUint::zero(); width + 1];
        let mut suffix = BigUint::zero();
        for v in (0..=width).rev() {
            suffix += &ways[v];
            if v <= bound {
                next[v] = suffix.clone();
            }
        }
        ways = next;
    }
    ways.iter().sum()
}

/// `∂Φ_λ`: cells with nothing below and nothing to the right.
pub fn corner_cells(lambda: &Partition) -> Vec<Cell> {
    (1..=lambda.len())
        .filter(|&i| lambda.part(i + 1) < lambda.part(i))
        .map(|i| Cell {
            i,
            j: lambda.part(i),
        })
        .collect()
}

fn check_cell(lambda: &Partition, cell: Cell) -> Result<()> {
    if lambda.has_cell(cell) {
        Ok(())
    } else {
        Err(Error::Contract(format!("cell {cell} is outside {lambda}")))
    }
}

/// `λ^↗`: the first `i−1` rows cut to the columns right of `j`.
pub fn ne_partition(lambda: &Partition, cell: Cell) -> Result<Partition> {
    check_cell(lambda, cell)?;
    Ok(Partition::from_unsorted_positive(
        lambda.parts[..cell.i - 1]
            .iter()
            .map(|&p| p.saturating_sub(cell.j)),
    ))
}

/// `λ^↙`: the rows below `i` cut to the first `j−1` columns.
pub fn sw_partition(lambda: &Partition, cell: Cell) -> Result<Partition> {
    check_cell(lambda, cell)?;
    Ok(Partition::from_unsorted_positive(
        lambda.parts[cell.i..].iter().map(|&p| p.min(cell.j - 1)),
    ))
}

/// `λ^↖`: the smallest partition in `Y_λ` with `(i, j)` as a corner, `(j^i)`.
pub fn nw_partition(lambda: &Partition, cell: Cell) -> Result<Partition> {
    check_cell(lambda, cell)?;
    Ok(Partition::rectangle(cell.i as u32, cell.j))
}

/// `λ^↘`: the largest partition in `Y_λ` with `(i, j)` as a corner.
pub fn se_partition(lambda: &Partition, cell: Cell) -> Result<Partition> {
    check_cell(lambda, cell)?;
    let rows = lambda.parts.iter().enumerate().map(|(r, &p)| {
        let i = r + 1;
        match i.cmp(&cell.i) {
            std::cmp::Ordering::Less => p,
            std::cmp::Ordering::Equal => cell.j,
            std::cmp::Ordering::Greater => p.min(cell.j - 1),
        }
    });
    Ok(Partition::from_unsorted_positive(rows))
}

/// `ℓ(Y_λ) = Σ_{(i,j) ∈ Φ_λ} |Y_{λ^↙}| · |Y_{λ^↗}|`.
pub fn young_edges(lambda: &Partition) -> BigUint {
    let mut memo: HashMap<Partition, BigUint> = HashMap::new();
    let mut size =
        |p: Partition| -> BigUint { memo.entry(p).or_insert_with_key(ideal_size).clone() };
    let mut total = BigUint::zero();
    for cell in lambda.cells() {
        let sw = sw_partition(lambda, cell).expect("cell of λ");
        let ne = ne_partition(lambda, cell).expect("cell of λ");
        total += size(sw) * size(ne);
    }
    total
}

/// All `μ ≤ λ`, in lexicographic order of parts.
pub fn sub_partitions(lambda: &Partition, cap: usize) -> Result<Vec<Partition>> {
    let size = ideal_size(lambda);
    if size > BigUint::from(cap) {
        return Err(Error::ResourceCap {
            what: format!("ideal of {lambda}"),
            n: usize::try_from(&size).unwrap_or(usize::MAX),
            cap,
        });
    }
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    collect_sub(lambda, u32::MAX, &mut prefix, &mut out);
    Ok(out)
}

fn collect_sub(lambda: &Partition, prev: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
    out.push(Partition {
        parts: prefix.clone(),
    });
    let row = prefix.len() + 1;
    let bound = lambda.part(row).min(prev);
    for v in 1..=bound {
        prefix.push(v);
        collect_sub(lambda, v, prefix, out);
        prefix.pop();
    }
}

/// Edges of `Y_λ` counted by brute force: each `μ` covers exactly the
/// partitions obtained by removing one of its corner cells.
pub fn young_edges_bruteforce(lambda: &Partition, cap: usize) -> Result<BigUint> {
    let total: usize = sub_partitions(lambda, cap)?
        .iter()
        .map(|mu| corner_cells(mu).len())
        .sum();
    Ok(BigUint::from(total))
}

/// `ℓ(L(m, n)) = C(m+n−1, n) · n`.
pub fn rect_edges(m: u32, n: u32) -> BigUint {
    if m == 0 || n == 0 {
        return BigUint::zero();
    }
    binomial(m as i64 + n as i64 - 1, n as i64) * n
}
