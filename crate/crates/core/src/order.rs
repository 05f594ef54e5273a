//! The dominance order on a path class, its cover relation and the Δ/∇
//! statistics.
//!
//! Covers are produced two ways: by local rewrite rules applied to a single
//! path ([`covers_by_rewrite`]), and by transitive reduction of the full
//! "lies weakly below" relation on an enumerated class ([`covers_by_order`]).
//! The Δ/∇ counts are a third, purely statistical route built from factor
//! occurrences.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

use crate::closed;
use crate::error::{Error, Result};
use crate::path::{ClassKind, Factor, PathWord, Step};
use crate::series::QPolynomial;

/// Largest sizes the brute-force routes accept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    /// Enumerating the class.
    pub enumeration: usize,
    /// Building the full order matrix (quadratic in `|P_n|`).
    pub order: usize,
}

impl Caps {
    pub fn default_for(kind: ClassKind) -> Caps {
        let enumeration = match kind {
            ClassKind::DD | ClassKind::MM | ClassKind::FF | ClassKind::GF => 10,
            ClassKind::GD | ClassKind::GM | ClassKind::SS => 9,
            ClassKind::GS => 8,
        };
        let order = if kind.is_grand() { 5 } else { 7 };
        Caps { enumeration, order }
    }

    pub fn unlimited() -> Caps {
        Caps {
            enumeration: usize::MAX,
            order: usize::MAX,
        }
    }

    fn check_enumeration(&self, kind: ClassKind, n: usize) -> Result<()> {
        if n > self.enumeration {
            return Err(Error::ResourceCap {
                what: format!("enumerating {kind}"),
                n,
                cap: self.enumeration,
            });
        }
        Ok(())
    }

    fn check_order(&self, kind: ClassKind, n: usize) -> Result<()> {
        if n > self.order {
            return Err(Error::ResourceCap {
                what: format!("order matrix of {kind}"),
                n,
                cap: self.order,
            });
        }
        Ok(())
    }
}

fn check_member(word: &PathWord, kind: ClassKind) -> Result<usize> {
    let spec = kind.spec();
    spec.validate(word)
        .map_err(|v| Error::Contract(format!("{word} is not a {kind} path: {v}")))?;
    Ok(spec.size_of(word).expect("validated"))
}

fn check_pair(a: &PathWord, b: &PathWord, kind: ClassKind) -> Result<()> {
    let (na, nb) = (check_member(a, kind)?, check_member(b, kind)?);
    if na != nb {
        return Err(Error::Contract(format!(
            "{a} and {b} have different sizes ({na} vs {nb})"
        )));
    }
    Ok(())
}

fn weakly_below(ha: &[i64], hb: &[i64]) -> bool {
    ha.iter().zip(hb).all(|(x, y)| x <= y)
}

/// Whether `a` lies weakly below `b` at every integer abscissa.
pub fn below(a: &PathWord, b: &PathWord, kind: ClassKind) -> Result<bool> {
    check_pair(a, b, kind)?;
    Ok(weakly_below(&a.heights(), &b.heights()))
}

#[derive(Debug, Clone, Copy)]
enum Level {
    Any,
    OnAxis,
    OffAxis,
}

/// Replace `from` by `to` where `from` starts at an allowed level.
struct Rewrite {
    from: &'static [Step],
    to: &'static [Step],
    level: Level,
}

const fn rw(from: &'static [Step], to: &'static [Step], level: Level) -> Rewrite {
    Rewrite { from, to, level }
}

use Step::{Down as D, FlatDouble as W, FlatUnit as H, Up as U};

const DYCK_UP: &[Rewrite] = &[rw(&[D, U], &[U, D], Level::Any)];
const DYCK_DOWN: &[Rewrite] = &[rw(&[U, D], &[D, U], Level::OffAxis)];
const GRAND_DYCK_DOWN: &[Rewrite] = &[rw(&[U, D], &[D, U], Level::Any)];

const MOTZKIN_UP: &[Rewrite] = &[
    rw(&[H, U], &[U, H], Level::Any),
    rw(&[D, H], &[H, D], Level::Any),
    rw(&[D, U], &[H, H], Level::Any),
    rw(&[H, H], &[U, D], Level::Any),
];
const MOTZKIN_DOWN: &[Rewrite] = &[
    rw(&[U, H], &[H, U], Level::Any),
    rw(&[H, D], &[D, H], Level::Any),
    rw(&[U, D], &[H, H], Level::Any),
    rw(&[H, H], &[D, U], Level::OffAxis),
];
const GRAND_MOTZKIN_DOWN: &[Rewrite] = &[
    rw(&[U, H], &[H, U], Level::Any),
    rw(&[H, D], &[D, H], Level::Any),
    rw(&[U, D], &[H, H], Level::Any),
    rw(&[H, H], &[D, U], Level::Any),
];

const SCHRODER_UP: &[Rewrite] = &[rw(&[W], &[U, D], Level::Any), rw(&[D, U], &[W], Level::Any)];
const SCHRODER_DOWN: &[Rewrite] = &[
    rw(&[W], &[D, U], Level::OffAxis),
    rw(&[U, D], &[W], Level::Any),
];
const GRAND_SCHRODER_DOWN: &[Rewrite] =
    &[rw(&[W], &[D, U], Level::Any), rw(&[U, D], &[W], Level::Any)];

const FIBONACCI_UP: &[Rewrite] = &[rw(&[H, H], &[U, D], Level::Any)];
const FIBONACCI_DOWN: &[Rewrite] = &[rw(&[U, D], &[H, H], Level::OnAxis)];
const GRAND_FIBONACCI_UP: &[Rewrite] = &[
    rw(&[H, H], &[U, D], Level::Any),
    rw(&[D, U], &[H, H], Level::OnAxis),
];
const GRAND_FIBONACCI_DOWN: &[Rewrite] = &[
    rw(&[U, D], &[H, H], Level::OnAxis),
    rw(&[H, H], &[D, U], Level::Any),
];

fn up_rules(kind: ClassKind) -> &'static [Rewrite] {
    match kind {
        ClassKind::DD | ClassKind::GD => DYCK_UP,
        ClassKind::MM | ClassKind::GM => MOTZKIN_UP,
        ClassKind::SS | ClassKind::GS => SCHRODER_UP,
        ClassKind::FF => FIBONACCI_UP,
        ClassKind::GF => GRAND_FIBONACCI_UP,
    }
}

fn down_rules(kind: ClassKind) -> &'static [Rewrite] {
    match kind {
        ClassKind::DD => DYCK_DOWN,
        ClassKind::GD => GRAND_DYCK_DOWN,
        ClassKind::MM => MOTZKIN_DOWN,
        ClassKind::GM => GRAND_MOTZKIN_DOWN,
        ClassKind::SS => SCHRODER_DOWN,
        ClassKind::GS => GRAND_SCHRODER_DOWN,
        ClassKind::FF => FIBONACCI_DOWN,
        ClassKind::GF => GRAND_FIBONACCI_DOWN,
    }
}

fn apply_rules(word: &PathWord, rules: &[Rewrite]) -> BTreeSet<PathWord> {
    let steps = word.steps();
    let levels = word.step_levels();
    let mut out = BTreeSet::new();
    for rule in rules {
        for p in 0..steps.len().saturating_sub(rule.from.len() - 1) {
            if &steps[p..p + rule.from.len()] != rule.from {
                continue;
            }
            let ok = match rule.level {
                Level::Any => true,
                Level::OnAxis => levels[p] == 0,
                Level::OffAxis => levels[p] != 0,
            };
            if ok {
                let mut next = Vec::with_capacity(steps.len() + 1);
                next.extend_from_slice(&steps[..p]);
                next.extend_from_slice(rule.to);
                next.extend_from_slice(&steps[p + rule.from.len()..]);
                out.insert(PathWord::new(next));
            }
        }
    }
    out
}

/// `Δγ`: the elements covering `γ`, by one upward local rewrite.
pub fn covers_by_rewrite(word: &PathWord, kind: ClassKind) -> Result<BTreeSet<PathWord>> {
    check_member(word, kind)?;
    Ok(apply_rules(word, up_rules(kind)))
}

/// `∇γ`: the elements covered by `γ`, by one downward local rewrite.
pub fn covered_by_rewrite(word: &PathWord, kind: ClassKind) -> Result<BTreeSet<PathWord>> {
    check_member(word, kind)?;
    Ok(apply_rules(word, down_rules(kind)))
}

/// Factor statistics for one word, read in the class's flat convention.
struct Stats<'a> {
    word: &'a PathWord,
    kind: ClassKind,
}

impl Stats<'_> {
    fn factor(&self, s: &str) -> Factor {
        self.kind.spec().parse_factor(s).expect("static factor")
    }

    fn all(&self, s: &str) -> usize {
        self.word.occurrences(&self.factor(s))
    }

    fn off_axis(&self, s: &str) -> usize {
        self.word
            .occurrences_off_axis(&self.factor(s))
            .expect("level-balanced")
    }

    fn on_axis(&self, s: &str) -> usize {
        self.word
            .occurrences_at_level(&self.factor(s), 0)
            .expect("level-balanced")
    }
}

/// `|Δγ|` from factor occurrences.
pub fn delta_count(word: &PathWord, kind: ClassKind) -> Result<usize> {
    check_member(word, kind)?;
    let st = Stats { word, kind };
    Ok(match kind {
        ClassKind::DD | ClassKind::GD => st.all("DU"),
        ClassKind::MM | ClassKind::GM => st.all("HU") + st.all("DH") + st.all("DU") + st.all("HH"),
        ClassKind::SS | ClassKind::GS => st.all("H") + st.all("DU"),
        ClassKind::FF => st.all("HH"),
        // a valley DU starting on the axis touches y = -1
        ClassKind::GF => st.all("HH") + st.on_axis("DU"),
    })
}

/// `|∇γ|` from factor occurrences.
pub fn nabla_count(word: &PathWord, kind: ClassKind) -> Result<usize> {
    check_member(word, kind)?;
    let st = Stats { word, kind };
    Ok(match kind {
        ClassKind::DD => st.off_axis("UD"),
        ClassKind::GD => st.all("UD"),
        ClassKind::MM => st.all("UH") + st.all("HD") + st.all("UD") + st.off_axis("HH"),
        ClassKind::GM => st.all("UH") + st.all("HD") + st.all("UD") + st.all("HH"),
        ClassKind::SS => st.off_axis("H") + st.all("UD"),
        ClassKind::GS => st.all("H") + st.all("UD"),
        ClassKind::FF => st.on_axis("UD"),
        ClassKind::GF => st.all("HH") + st.on_axis("UD"),
    })
}

/// Cover graph of an enumerated class. Edges are `(lower, upper)` index
/// pairs into `vertices`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverGraph {
    pub kind: ClassKind,
    pub n: usize,
    pub vertices: Vec<PathWord>,
    pub edges: Vec<(usize, usize)>,
}

impl CoverGraph {
    pub fn edge_words(&self) -> BTreeSet<(PathWord, PathWord)> {
        self.edges
            .iter()
            .map(|&(a, b)| (self.vertices[a].clone(), self.vertices[b].clone()))
            .collect()
    }

    /// `lower,upper` rows with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("lower,upper\n");
        for &(a, b) in &self.edges {
            out.push_str(&format!("{},{}\n", self.vertices[a], self.vertices[b]));
        }
        out
    }

    /// `{ "<path>": ["<cover>", ...], ... }` over every vertex.
    pub fn to_adjacency_json(&self) -> serde_json::Value {
        let mut adj: BTreeMap<String, Vec<String>> = self
            .vertices
            .iter()
            .map(|v| (v.to_string(), Vec::new()))
            .collect();
        for &(a, b) in &self.edges {
            adj.get_mut(&self.vertices[a].to_string())
                .expect("vertex")
                .push(self.vertices[b].to_string());
        }
        serde_json::to_value(adj).expect("string map")
    }
}

/// Cover graph assembled from [`covers_by_rewrite`] on every member.
pub fn rewrite_cover_graph(kind: ClassKind, n: usize, caps: Caps) -> Result<CoverGraph> {
    caps.check_enumeration(kind, n)?;
    let vertices = kind.spec().enumerate(n);
    let mut edges = Vec::new();
    for (a, v) in vertices.iter().enumerate() {
        for cover in covers_by_rewrite(v, kind)? {
            let b = vertices.binary_search(&cover).map_err(|_| {
                Error::Invariant(format!(
                    "rewrite of {v} produced {cover}, not a {kind} path"
                ))
            })?;
            edges.push((a, b));
        }
    }
    edges.sort_unstable();
    Ok(CoverGraph {
        kind,
        n,
        vertices,
        edges,
    })
}

struct BitRows {
    words: usize,
    bits: Vec<u64>,
}

impl BitRows {
    fn new(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64);
        BitRows {
            words,
            bits: vec![0; rows * words],
        }
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }
}

fn test_bit(row: &[u64], c: usize) -> bool {
    row[c / 64] >> (c % 64) & 1 == 1
}

/// Transitive reduction of the strict dominance order on `P_n`.
///
/// Builds the full strictly-above relation, then for each element scans
/// the elements above it by increasing area; an element is a cover unless
/// it is already above a previously found cover.
pub fn covers_by_order(kind: ClassKind, n: usize, caps: Caps) -> Result<CoverGraph> {
    caps.check_order(kind, n)?;
    let vertices = kind.spec().enumerate(n);
    let heights: Vec<Vec<i64>> = vertices.iter().map(PathWord::heights).collect();
    let area: Vec<i64> = heights.iter().map(|h| h.iter().sum()).collect();
    let m = vertices.len();

    let mut by_area: Vec<usize> = (0..m).collect();
    by_area.sort_by_key(|&i| (area[i], i));

    let mut above = BitRows::new(m, m);
    for a in 0..m {
        for b in 0..m {
            if area[a] < area[b] && weakly_below(&heights[a], &heights[b]) {
                above.set(a, b);
            }
        }
    }

    let mut edges = Vec::new();
    let mut dominated = vec![0u64; above.words];
    for a in 0..m {
        dominated.iter_mut().for_each(|w| *w = 0);
        let row = above.row(a);
        for &b in &by_area {
            if !test_bit(row, b) || test_bit(&dominated, b) {
                continue;
            }
            edges.push((a, b));
            for (d, s) in dominated.iter_mut().zip(above.row(b)) {
                *d |= s;
            }
        }
    }
    edges.sort_unstable();
    Ok(CoverGraph {
        kind,
        n,
        vertices,
        edges,
    })
}

/// `ℓ(P_n) = Σ |Δγ|` over the enumerated class.
pub fn edge_count_enum(kind: ClassKind, n: usize, caps: Caps) -> Result<BigUint> {
    sum_over_class(kind, n, caps, delta_count)
}

/// `Σ |∇γ|` over the enumerated class.
pub fn nabla_edge_count_enum(kind: ClassKind, n: usize, caps: Caps) -> Result<BigUint> {
    sum_over_class(kind, n, caps, nabla_count)
}

fn sum_over_class(
    kind: ClassKind,
    n: usize,
    caps: Caps,
    stat: fn(&PathWord, ClassKind) -> Result<usize>,
) -> Result<BigUint> {
    caps.check_enumeration(kind, n)?;
    let mut total = 0u64;
    for w in kind.spec().enumerate(n) {
        total += stat(&w, kind)? as u64;
    }
    Ok(BigUint::from(total))
}

/// Histogram `c_k = #{γ : statistic(γ) = k}`, i.e. `Σ_γ q^{stat(γ)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeltaPolynomial {
    coeffs: Vec<BigUint>,
}

impl DeltaPolynomial {
    pub fn from_counts(counts: &[usize]) -> Self {
        let mut coeffs: Vec<BigUint> = Vec::new();
        for &k in counts {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, BigUint::zero());
            }
            coeffs[k] += 1u32;
        }
        DeltaPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigUint] {
        &self.coeffs
    }

    /// `|P_n|`.
    pub fn eval_at_one(&self) -> BigUint {
        self.coeffs.iter().sum()
    }

    /// `ℓ(P_n)`.
    pub fn derivative_at_one(&self) -> BigUint {
        self.coeffs.iter().enumerate().map(|(k, c)| c * k).sum()
    }

    pub fn to_qpolynomial(&self) -> QPolynomial {
        QPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(BigInt::from(c.clone())))
                .collect(),
        )
    }
}

impl fmt::Display for DeltaPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_qpolynomial())
    }
}

pub fn delta_polynomial_enum(kind: ClassKind, n: usize, caps: Caps) -> Result<DeltaPolynomial> {
    histogram(kind, n, caps, delta_count)
}

pub fn nabla_polynomial_enum(kind: ClassKind, n: usize, caps: Caps) -> Result<DeltaPolynomial> {
    histogram(kind, n, caps, nabla_count)
}

fn histogram(
    kind: ClassKind,
    n: usize,
    caps: Caps,
    stat: fn(&PathWord, ClassKind) -> Result<usize>,
) -> Result<DeltaPolynomial> {
    caps.check_enumeration(kind, n)?;
    let counts = kind
        .spec()
        .enumerate(n)
        .iter()
        .map(|w| stat(w, kind))
        .collect::<Result<Vec<_>>>()?;
    Ok(DeltaPolynomial::from_counts(&counts))
}

fn pointwise(
    a: &PathWord,
    b: &PathWord,
    kind: ClassKind,
    pick: fn(i64, i64) -> i64,
) -> Result<PathWord> {
    if !kind.is_lattice() {
        return Err(Error::Contract(format!(
            "{kind} is a poset without meets and joins"
        )));
    }
    check_pair(a, b, kind)?;
    let profile: Vec<i64> = a
        .heights()
        .iter()
        .zip(b.heights())
        .map(|(&x, y)| pick(x, y))
        .collect();
    let spec = kind.spec();
    let word = PathWord::from_heights(&profile, spec.flat_kind())?;
    spec.validate(&word).map_err(|v| {
        Error::Invariant(format!(
            "pointwise bound of {a} and {b} is {word}, outside {kind}: {v}"
        ))
    })?;
    Ok(word)
}

/// Greatest lower bound: the pointwise minimum of the height profiles.
pub fn meet(a: &PathWord, b: &PathWord, kind: ClassKind) -> Result<PathWord> {
    pointwise(a, b, kind, i64::min)
}

/// Least upper bound: the pointwise maximum of the height profiles.
pub fn join(a: &PathWord, b: &PathWord, kind: ClassKind) -> Result<PathWord> {
    pointwise(a, b, kind, i64::max)
}

/// How a [`HasseSummary`] obtained its counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    Enumeration,
    Formula,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HasseSummary {
    pub class: ClassKind,
    pub n: usize,
    pub vertices: BigUint,
    pub edges: BigUint,
    /// `edges / vertices`.
    pub index: BigRational,
    pub route: Route,
}

/// Vertex and edge counts with the Hasse index; enumerates when `n` is
/// within the cap and falls back to closed forms otherwise.
pub fn hasse_summary(kind: ClassKind, n: usize, caps: Caps) -> Result<HasseSummary> {
    let (vertices, edges, route) = if n <= caps.enumeration {
        let poly = delta_polynomial_enum(kind, n, caps)?;
        (
            poly.eval_at_one(),
            poly.derivative_at_one(),
            Route::Enumeration,
        )
    } else {
        (
            closed::vertex_count(kind, n),
            closed::edge_count_formula(kind, n)?,
            Route::Formula,
        )
    };
    let index = BigRational::new(BigInt::from(edges.clone()), BigInt::from(vertices.clone()));
    Ok(HasseSummary {
        class: kind,
        n,
        vertices,
        edges,
        index,
        route,
    })
}
