//! Coxeter matrices and diagrams, the classification of the finite Coxeter
//! groups, irreducible decomposition, and explicit enumeration of small
//! finite Coxeter groups in faithful models:
//!
//! * type `A(n)` — permutations of `n+1` points;
//! * types `B(n)`, `D(n)` — signed permutations;
//! * type `I2(p)` — rotation/flip pairs of the dihedral group;
//! * types `E(6|7|8)`, `F(4)` — integer reflection matrices in the
//!   simple-root basis;
//! * types `H(3|4)` — reflection matrices over the field ℚ(√5), with exact
//!   `a + b√5` arithmetic for the golden-ratio entries.
//!
//! Finiteness is decided purely by diagram pattern matching — never by
//! floating-point positive-definiteness tests.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use thiserror::Error;

use crate::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoxeterError {
    #[error("invalid Coxeter matrix: {0}")]
    InvalidMatrix(String),
    #[error("diagram is not connected")]
    NotIrreducible,
    #[error("group is infinite")]
    NotFinite,
    #[error("group order {order} exceeds enumeration cap {cap}")]
    CapExceeded { order: BigInt, cap: usize },
    #[error("generator subset is empty")]
    EmptySubset,
    #[error("generator index {0} out of range")]
    OutOfRange(usize),
}

// ---------------------------------------------------------------------
// Coxeter matrices
// ---------------------------------------------------------------------

/// One entry of a Coxeter matrix: a finite order or ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mij {
    Fin(u32),
    Inf,
}

impl fmt::Display for Mij {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mij::Fin(m) => write!(f, "{m}"),
            Mij::Inf => write!(f, "inf"),
        }
    }
}

/// A Coxeter matrix: symmetric, diagonal 1, off-diagonal entries ≥ 2 or ∞.
/// Generator indices are 0-based in the API; the text format is 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    rank: usize,
    m: Vec<Mij>,
}

impl CoxeterMatrix {
    /// The matrix with all off-diagonal entries 2 (right angles everywhere).
    pub fn all_twos(rank: usize) -> Result<Self, CoxeterError> {
        if rank == 0 {
            return Err(CoxeterError::InvalidMatrix("rank must be ≥ 1".into()));
        }
        let mut m = vec![Mij::Fin(2); rank * rank];
        for i in 0..rank {
            m[i * rank + i] = Mij::Fin(1);
        }
        Ok(CoxeterMatrix { rank, m })
    }

    /// Builds from explicit off-diagonal entries `(i, j, m)` (0-based,
    /// unordered pairs); unlisted pairs default to 2. A pair listed twice is
    /// an error, as is `i = j` or an entry < 2.
    pub fn from_entries(
        rank: usize,
        entries: &[(usize, usize, Mij)],
    ) -> Result<Self, CoxeterError> {
        let mut mat = Self::all_twos(rank)?;
        let mut seen = std::collections::BTreeSet::new();
        for &(i, j, v) in entries {
            if i == j {
                return Err(CoxeterError::InvalidMatrix(format!(
                    "diagonal entry ({},{}) may not be set",
                    i + 1,
                    j + 1
                )));
            }
            if i >= rank || j >= rank {
                return Err(CoxeterError::OutOfRange(i.max(j)));
            }
            if let Mij::Fin(m) = v {
                if m < 2 {
                    return Err(CoxeterError::InvalidMatrix(format!(
                        "entry ({},{}) = {} is below 2",
                        i + 1,
                        j + 1,
                        m
                    )));
                }
            }
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(CoxeterError::InvalidMatrix(format!(
                    "pair ({},{}) listed twice",
                    i.min(j) + 1,
                    j.max(i) + 1
                )));
            }
            mat.m[i * rank + j] = v;
            mat.m[j * rank + i] = v;
        }
        Ok(mat)
    }

    /// A path `0 − 1 − … − k` with the given edge labels (rank = labels + 1).
    pub fn path(labels: &[u32]) -> Result<Self, CoxeterError> {
        let entries: Vec<(usize, usize, Mij)> =
            labels.iter().enumerate().map(|(i, &l)| (i, i + 1, Mij::Fin(l))).collect();
        Self::from_entries(labels.len() + 1, &entries)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entry(&self, i: usize, j: usize) -> Mij {
        self.m[i * self.rank + j]
    }

    /// Relabels generators: `perm[i]` is the new index of old generator `i`.
    pub fn permuted(&self, perm: &[usize]) -> CoxeterMatrix {
        assert_eq!(perm.len(), self.rank, "permutation length mismatch");
        let mut out = CoxeterMatrix { rank: self.rank, m: vec![Mij::Fin(1); self.rank * self.rank] };
        for i in 0..self.rank {
            for j in 0..self.rank {
                out.m[perm[i] * self.rank + perm[j]] = self.entry(i, j);
            }
        }
        out
    }

    /// Parses the "coxmat" text format: first significant line `rank n`,
    /// then lines `i j m` with 1-based indices and `m ≥ 2` or `inf`; pairs
    /// not listed default to 2; a pair listed twice is an error. Blank lines
    /// and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut rank: Option<usize> = None;
        let mut entries: Vec<(usize, usize, Mij)> = Vec::new();
        let mut entry_lines: Vec<usize> = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let n = lineno + 1;
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let tokens: Vec<&str> = line.split_whitespace().collect();
            if rank.is_none() {
                if tokens.len() != 2 || tokens[0] != "rank" {
                    return Err(ParseError::new(n, "expected first line `rank n`"));
                }
                let r: usize = tokens[1]
                    .parse()
                    .map_err(|_| ParseError::new(n, format!("bad rank {:?}", tokens[1])))?;
                if r == 0 {
                    return Err(ParseError::new(n, "rank must be ≥ 1"));
                }
                rank = Some(r);
                continue;
            }
            if tokens.len() != 3 {
                return Err(ParseError::new(n, "expected `i j m`"));
            }
            let parse_idx = |t: &str| -> Result<usize, ParseError> {
                let v: usize =
                    t.parse().map_err(|_| ParseError::new(n, format!("bad index {t:?}")))?;
                if v == 0 {
                    return Err(ParseError::new(n, "indices are 1-based"));
                }
                Ok(v - 1)
            };
            let i = parse_idx(tokens[0])?;
            let j = parse_idx(tokens[1])?;
            let m = if tokens[2] == "inf" {
                Mij::Inf
            } else {
                let v: u32 = tokens[2]
                    .parse()
                    .map_err(|_| ParseError::new(n, format!("bad label {:?}", tokens[2])))?;
                Mij::Fin(v)
            };
            entries.push((i, j, m));
            entry_lines.push(n);
        }
        let Some(rank) = rank else {
            return Err(ParseError::new(0, "missing `rank n` line"));
        };
        // Surface per-line errors with the right line number by validating
        // incrementally.
        let mut acc: Vec<(usize, usize, Mij)> = Vec::new();
        for (e, line) in entries.into_iter().zip(entry_lines) {
            acc.push(e);
            if let Err(err) = Self::from_entries(rank, &acc) {
                return Err(ParseError::new(line, err.to_string()));
            }
        }
        Ok(Self::from_entries(rank, &acc).expect("validated"))
    }

    /// Emits the coxmat format (canonical: ascending pairs, only non-2
    /// entries listed). Round-trips through `parse` to an equal matrix.
    pub fn to_text(&self) -> String {
        let mut out = format!("rank {}\n", self.rank);
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                let e = self.entry(i, j);
                if e != Mij::Fin(2) {
                    out.push_str(&format!("{} {} {}\n", i + 1, j + 1, e));
                }
            }
        }
        out
    }

    /// The Coxeter diagram: edges where `m ≥ 3` (∞ included).
    pub fn diagram(&self) -> CoxeterDiagram {
        let mut edges = Vec::new();
        for i in 0..self.rank {
            for j in i + 1..self.rank {
                match self.entry(i, j) {
                    Mij::Fin(m) if m >= 3 => edges.push((i, j, Mij::Fin(m))),
                    Mij::Inf => edges.push((i, j, Mij::Inf)),
                    _ => {}
                }
            }
        }
        CoxeterDiagram { rank: self.rank, edges }
    }
}

/// The labeled graph underlying a Coxeter matrix (vertices `0..rank`,
/// edges where the entry is ≥ 3 or ∞).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterDiagram {
    pub rank: usize,
    /// `(i, j, label)` with `i < j`, ascending.
    pub edges: Vec<(usize, usize, Mij)>,
}

impl CoxeterDiagram {
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.rank];
        for &(i, j, _) in &self.edges {
            adj[i].push(j);
            adj[j].push(i);
        }
        adj
    }

    pub fn is_connected(&self) -> bool {
        if self.rank == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.rank];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.rank
    }
}

/// Connected components of the Coxeter diagram, as (sorted vertex subset,
/// restricted matrix) pairs, ordered by smallest vertex.
pub fn irreducible_components(m: &CoxeterMatrix) -> Vec<(Vec<usize>, CoxeterMatrix)> {
    let adj = m.diagram().adjacency();
    let mut seen = vec![false; m.rank()];
    let mut comps = Vec::new();
    for start in 0..m.rank() {
        if seen[start] {
            continue;
        }
        let mut stack = vec![start];
        seen[start] = true;
        let mut verts = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    verts.push(w);
                    stack.push(w);
                }
            }
        }
        verts.sort_unstable();
        let sub = parabolic_submatrix(m, &verts).expect("component is nonempty");
        comps.push((verts, sub));
    }
    comps
}

/// Restriction of `m` to the generator subset `s` (0-based indices; need
/// not be sorted; duplicates collapse).
pub fn parabolic_submatrix(m: &CoxeterMatrix, s: &[usize]) -> Result<CoxeterMatrix, CoxeterError> {
    let mut idx: Vec<usize> = s.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.is_empty() {
        return Err(CoxeterError::EmptySubset);
    }
    if let Some(&bad) = idx.iter().find(|&&v| v >= m.rank()) {
        return Err(CoxeterError::OutOfRange(bad));
    }
    let rank = idx.len();
    let mut out = CoxeterMatrix { rank, m: vec![Mij::Fin(1); rank * rank] };
    for (a, &i) in idx.iter().enumerate() {
        for (b, &j) in idx.iter().enumerate() {
            out.m[a * rank + b] = m.entry(i, j);
        }
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Classification of finite types
// ---------------------------------------------------------------------

/// The classification label of an irreducible Coxeter matrix. Rank-2 types
/// canonicalize: label 3 → `A(2)`, label 4 → `B(2)`, label p ≥ 5 → `I2(p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CoxeterType {
    A(u32),
    B(u32),
    D(u32),
    E(u32),
    F4,
    H(u32),
    I2(u32),
    Infinite,
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::A(n) => write!(f, "A({n})"),
            CoxeterType::B(n) => write!(f, "B({n})"),
            CoxeterType::D(n) => write!(f, "D({n})"),
            CoxeterType::E(n) => write!(f, "E({n})"),
            CoxeterType::F4 => write!(f, "F(4)"),
            CoxeterType::H(n) => write!(f, "H({n})"),
            CoxeterType::I2(p) => write!(f, "I2({p})"),
            CoxeterType::Infinite => write!(f, "Infinite"),
        }
    }
}

impl CoxeterType {
    pub fn is_finite(&self) -> bool {
        *self != CoxeterType::Infinite
    }

    /// Number of generators of the type; `None` for `Infinite`.
    pub fn rank(&self) -> Option<usize> {
        match *self {
            CoxeterType::A(n) | CoxeterType::B(n) | CoxeterType::D(n) | CoxeterType::E(n) => {
                Some(n as usize)
            }
            CoxeterType::F4 => Some(4),
            CoxeterType::H(n) => Some(n as usize),
            CoxeterType::I2(_) => Some(2),
            CoxeterType::Infinite => None,
        }
    }

    /// Group order; `None` for `Infinite`.
    pub fn order(&self) -> Option<BigInt> {
        let factorial = |n: u32| -> BigInt { (1..=n as u64).map(BigInt::from).product() };
        let pow2 = |e: u32| -> BigInt { BigInt::from(1) << e };
        Some(match *self {
            CoxeterType::A(n) => factorial(n + 1),
            CoxeterType::B(n) => pow2(n) * factorial(n),
            CoxeterType::D(n) => pow2(n - 1) * factorial(n),
            CoxeterType::E(6) => BigInt::from(51_840),
            CoxeterType::E(7) => BigInt::from(2_903_040),
            CoxeterType::E(8) => BigInt::from(696_729_600),
            CoxeterType::E(_) => unreachable!("E rank is 6, 7, or 8"),
            CoxeterType::F4 => BigInt::from(1_152),
            CoxeterType::H(3) => BigInt::from(120),
            CoxeterType::H(4) => BigInt::from(14_400),
            CoxeterType::H(_) => unreachable!("H rank is 3 or 4"),
            CoxeterType::I2(p) => BigInt::from(2 * p as u64),
            CoxeterType::Infinite => return None,
        })
    }
}

/// Internal result of classifying one connected diagram: the type plus the
/// layout mapping each local vertex to its position in the standard model
/// (identity for the matrix-represented types, which are built directly
/// from the component's own matrix).
struct Classification {
    ctype: CoxeterType,
    /// `positions[local_vertex] = model position`.
    positions: Vec<usize>,
}

/// Classifies a connected Coxeter matrix against the finite-type list.
pub fn classify_irreducible(m: &CoxeterMatrix) -> Result<CoxeterType, CoxeterError> {
    if !m.diagram().is_connected() {
        return Err(CoxeterError::NotIrreducible);
    }
    Ok(classify_connected(m).ctype)
}

/// Every irreducible component with its type.
pub fn component_types(m: &CoxeterMatrix) -> Vec<(Vec<usize>, CoxeterType)> {
    irreducible_components(m)
        .into_iter()
        .map(|(verts, sub)| {
            let t = classify_connected(&sub).ctype;
            (verts, t)
        })
        .collect()
}

/// True iff every irreducible component has finite type.
pub fn is_finite(m: &CoxeterMatrix) -> bool {
    component_types(m).iter().all(|(_, t)| t.is_finite())
}

/// Group order: the product of the component orders, or `None` if any
/// component is infinite.
pub fn group_order(m: &CoxeterMatrix) -> Option<BigInt> {
    let mut total = BigInt::from(1);
    for (_, t) in component_types(m) {
        total *= t.order()?;
    }
    Some(total)
}

/// Walks a path/leg in a tree: starts at `from` (a neighbor of `prev`) and
/// follows degree-2 vertices away from `prev`.
fn walk_leg(adj: &[Vec<usize>], prev: usize, from: usize) -> Vec<usize> {
    let mut leg = vec![from];
    let (mut p, mut c) = (prev, from);
    while adj[c].len() == 2 {
        let next = if adj[c][0] == p { adj[c][1] } else { adj[c][0] };
        p = c;
        c = next;
        leg.push(c);
    }
    leg
}

fn infinite(rank: usize) -> Classification {
    Classification { ctype: CoxeterType::Infinite, positions: (0..rank).collect() }
}

/// The 1935 pattern match. `m` must be connected.
fn classify_connected(m: &CoxeterMatrix) -> Classification {
    let n = m.rank();
    let identity = || (0..n).collect::<Vec<usize>>();
    if n == 1 {
        return Classification { ctype: CoxeterType::A(1), positions: identity() };
    }
    let diagram = m.diagram();
    debug_assert!(diagram.is_connected());
    if diagram.edges.iter().any(|&(_, _, l)| l == Mij::Inf) {
        return infinite(n);
    }
    // A connected diagram with more than n−1 edges contains a cycle.
    if diagram.edges.len() != n - 1 {
        return infinite(n);
    }
    let adj = diagram.adjacency();
    if adj.iter().any(|a| a.len() >= 4) {
        return infinite(n);
    }
    let branches: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 3).collect();
    if branches.len() >= 2 {
        return infinite(n);
    }
    let labeled: Vec<(usize, usize, u32)> = diagram
        .edges
        .iter()
        .filter_map(|&(i, j, l)| match l {
            Mij::Fin(p) if p > 3 => Some((i, j, p)),
            _ => None,
        })
        .collect();

    if let Some(&bv) = branches.first() {
        // One branch vertex: candidate D or E; all edges must be unlabeled.
        if !labeled.is_empty() {
            return infinite(n);
        }
        let mut legs: Vec<Vec<usize>> =
            adj[bv].iter().map(|&nb| walk_leg(&adj, bv, nb)).collect();
        legs.sort_by_key(|l| (l.len(), l[0]));
        let lens = (legs[0].len(), legs[1].len(), legs[2].len());
        return match lens {
            (1, 1, k) => {
                // D(k+3): long-leg tip → position 0, …, branch → n−4+1;
                // the two short tips take the last two positions ascending.
                let long = legs[2].clone();
                let mut positions = vec![0usize; n];
                for (step, &v) in long.iter().rev().enumerate() {
                    positions[v] = step; // tip = 0 … neighbor of branch = k−1
                }
                positions[bv] = k; // = n − 3
                let mut shorts = [legs[0][0], legs[1][0]];
                shorts.sort_unstable();
                positions[shorts[0]] = n - 2;
                positions[shorts[1]] = n - 1;
                Classification { ctype: CoxeterType::D((k + 3) as u32), positions }
            }
            (1, 2, 2) => Classification { ctype: CoxeterType::E(6), positions: identity() },
            (1, 2, 3) => Classification { ctype: CoxeterType::E(7), positions: identity() },
            (1, 2, 4) => Classification { ctype: CoxeterType::E(8), positions: identity() },
            _ => infinite(n),
        };
    }

    // No branch: the diagram is a path. Orient it for the layout.
    let ends: Vec<usize> = (0..n).filter(|&v| adj[v].len() == 1).collect();
    debug_assert_eq!(ends.len(), 2);
    let path_from = |start: usize| {
        let mut order = vec![start];
        order.extend(walk_leg(&adj, start, adj[start][0]));
        order
    };
    let positions_from = |start: usize| {
        let order = path_from(start);
        let mut positions = vec![0usize; n];
        for (pos, &v) in order.iter().enumerate() {
            positions[v] = pos;
        }
        positions
    };
    match labeled.as_slice() {
        [] => Classification {
            ctype: CoxeterType::A(n as u32),
            positions: positions_from(*ends.iter().min().expect("two ends")),
        },
        &[(a, b, p)] => {
            if n == 2 {
                let ctype = if p == 4 { CoxeterType::B(2) } else { CoxeterType::I2(p) };
                return Classification { ctype, positions: identity() };
            }
            let terminal = adj[a].len() == 1 || adj[b].len() == 1;
            match p {
                4 if terminal => {
                    // B(n): orient so the 4-edge sits between the last two
                    // positions; start from the end away from it.
                    let near_end = if adj[a].len() == 1 { a } else { b };
                    let far_end = ends.into_iter().find(|&e| e != near_end).expect("two ends");
                    Classification {
                        ctype: CoxeterType::B(n as u32),
                        positions: positions_from(far_end),
                    }
                }
                4 if n == 4 => Classification { ctype: CoxeterType::F4, positions: identity() },
                5 if n == 3 => {
                    Classification { ctype: CoxeterType::H(3), positions: identity() }
                }
                5 if n == 4 && terminal => {
                    Classification { ctype: CoxeterType::H(4), positions: identity() }
                }
                _ => infinite(n),
            }
        }
        _ => infinite(n),
    }
}

// ---------------------------------------------------------------------
// Exact arithmetic over ℚ(√5)
// ---------------------------------------------------------------------

/// An element `a + b√5` of the real quadratic field ℚ(√5), with exact
/// rational coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QSqrt5 {
    pub a: Ratio<i64>,
    pub b: Ratio<i64>,
}

impl QSqrt5 {
    pub fn new(a: Ratio<i64>, b: Ratio<i64>) -> Self {
        QSqrt5 { a, b }
    }

    pub fn int(v: i64) -> Self {
        QSqrt5 { a: Ratio::from_integer(v), b: Ratio::from_integer(0) }
    }

    /// The golden ratio (1 + √5)/2 = 2·cos(π/5).
    pub fn golden() -> Self {
        QSqrt5 { a: Ratio::new(1, 2), b: Ratio::new(1, 2) }
    }

    pub fn is_zero(&self) -> bool {
        self.a == Ratio::from_integer(0) && self.b == Ratio::from_integer(0)
    }

    pub fn add(&self, o: &Self) -> Self {
        QSqrt5 { a: self.a + o.a, b: self.b + o.b }
    }

    pub fn sub(&self, o: &Self) -> Self {
        QSqrt5 { a: self.a - o.a, b: self.b - o.b }
    }

    pub fn mul(&self, o: &Self) -> Self {
        QSqrt5 {
            a: self.a * o.a + Ratio::from_integer(5) * self.b * o.b,
            b: self.a * o.b + self.b * o.a,
        }
    }

    pub fn neg(&self) -> Self {
        QSqrt5 { a: -self.a, b: -self.b }
    }
}

// ---------------------------------------------------------------------
// Group element models
// ---------------------------------------------------------------------

/// One element of an irreducible finite Coxeter group, in the model chosen
/// for its type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Element {
    /// `A(n)`: permutation of `{0..n}` as an image vector.
    Perm(Vec<u8>),
    /// `B(n)`/`D(n)`: signed permutation; entry `±(j+1)` at index `i` means
    /// `e_i ↦ ±e_j`.
    Signed(Vec<i16>),
    /// `I2(p)`: `rotᵏ · flip^f` in the dihedral group of order `2p`.
    Dihedral { rot: u32, flip: bool, p: u32 },
    /// `E`/`F` types: integer reflection matrix in the simple-root basis
    /// (row-major `n×n`).
    IntMat { n: usize, a: Vec<i64> },
    /// `H` types: reflection matrix over ℚ(√5) (row-major `n×n`).
    GoldenMat { n: usize, a: Vec<QSqrt5> },
}

impl Element {
    fn mul(&self, other: &Element) -> Element {
        match (self, other) {
            (Element::Perm(p), Element::Perm(q)) => {
                Element::Perm(q.iter().map(|&i| p[i as usize]).collect())
            }
            (Element::Signed(p), Element::Signed(q)) => Element::Signed(
                q.iter()
                    .map(|&v| {
                        let target = p[(v.unsigned_abs() - 1) as usize];
                        if v < 0 { -target } else { target }
                    })
                    .collect(),
            ),
            (
                &Element::Dihedral { rot: k1, flip: f1, p },
                &Element::Dihedral { rot: k2, flip: f2, p: p2 },
            ) => {
                debug_assert_eq!(p, p2);
                let signed = if f1 { -(k2 as i64) } else { k2 as i64 };
                let rot = (k1 as i64 + signed).rem_euclid(p as i64) as u32;
                Element::Dihedral { rot, flip: f1 ^ f2, p }
            }
            (Element::IntMat { n, a }, Element::IntMat { n: n2, a: b }) => {
                debug_assert_eq!(n, n2);
                let n = *n;
                let mut out = vec![0i64; n * n];
                for i in 0..n {
                    for k in 0..n {
                        let aik = a[i * n + k];
                        if aik == 0 {
                            continue;
                        }
                        for j in 0..n {
                            out[i * n + j] += aik * b[k * n + j];
                        }
                    }
                }
                Element::IntMat { n, a: out }
            }
            (Element::GoldenMat { n, a }, Element::GoldenMat { n: n2, a: b }) => {
                debug_assert_eq!(n, n2);
                let n = *n;
                let mut out = vec![QSqrt5::int(0); n * n];
                for i in 0..n {
                    for k in 0..n {
                        let aik = a[i * n + k];
                        if aik.is_zero() {
                            continue;
                        }
                        for j in 0..n {
                            out[i * n + j] = out[i * n + j].add(&aik.mul(&b[k * n + j]));
                        }
                    }
                }
                Element::GoldenMat { n, a: out }
            }
            _ => unreachable!("elements of different models multiplied"),
        }
    }

    fn inv(&self, identity: &Element) -> Element {
        match self {
            Element::Perm(p) => {
                let mut q = vec![0u8; p.len()];
                for (i, &img) in p.iter().enumerate() {
                    q[img as usize] = i as u8;
                }
                Element::Perm(q)
            }
            Element::Signed(p) => {
                let mut q = vec![0i16; p.len()];
                for (i, &v) in p.iter().enumerate() {
                    let j = (v.unsigned_abs() - 1) as usize;
                    q[j] = if v < 0 { -((i + 1) as i16) } else { (i + 1) as i16 };
                }
                Element::Signed(q)
            }
            &Element::Dihedral { rot, flip, p } => {
                if flip {
                    Element::Dihedral { rot, flip, p }
                } else {
                    Element::Dihedral { rot: (p - rot) % p, flip, p }
                }
            }
            // Matrix models: finite order, so invert by raising to it.
            Element::IntMat { .. } | Element::GoldenMat { .. } => {
                let mut cur = self.clone();
                loop {
                    let next = cur.mul(self);
                    if &next == identity {
                        return cur;
                    }
                    cur = next;
                }
            }
        }
    }
}

/// An element of a (possibly reducible) finite Coxeter group: one model
/// element per irreducible component, in component order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement(pub Vec<Element>);

struct ComponentModel {
    identity: Element,
    /// Model generator per local index.
    generators: Vec<Element>,
}

/// Integer Cartan pairing `⟨α_j, α_i^∨⟩` for crystallographic labels.
fn cartan_entry(m: Mij, i: usize, j: usize) -> i64 {
    match m {
        Mij::Fin(2) => 0,
        Mij::Fin(3) => -1,
        // Label 4 (only F(4) reaches this): the pair splits as (−1, −2);
        // the lower index takes −1.
        Mij::Fin(4) => {
            if i < j {
                -1
            } else {
                -2
            }
        }
        other => unreachable!("non-crystallographic label {other} in matrix model"),
    }
}

fn build_component(sub: &CoxeterMatrix) -> ComponentModel {
    let cls = classify_connected(sub);
    let n = sub.rank();
    let pos = &cls.positions;
    match cls.ctype {
        CoxeterType::A(_) => {
            let points = n + 1;
            let identity = Element::Perm((0..points as u8).collect());
            let generators = (0..n)
                .map(|local| {
                    let k = pos[local];
                    let mut img: Vec<u8> = (0..points as u8).collect();
                    img.swap(k, k + 1);
                    Element::Perm(img)
                })
                .collect();
            ComponentModel { identity, generators }
        }
        CoxeterType::B(_) | CoxeterType::D(_) => {
            let identity = Element::Signed((1..=n as i16).collect());
            let is_b = matches!(cls.ctype, CoxeterType::B(_));
            let generators = (0..n)
                .map(|local| {
                    let k = pos[local];
                    let mut img: Vec<i16> = (1..=n as i16).collect();
                    if k < n - 1 {
                        img.swap(k, k + 1);
                    } else if is_b {
                        // Sign flip at the last coordinate.
                        img[n - 1] = -(n as i16);
                    } else {
                        // Negative transposition on the last two coordinates.
                        img[n - 2] = -(n as i16);
                        img[n - 1] = -((n - 1) as i16);
                    }
                    Element::Signed(img)
                })
                .collect();
            ComponentModel { identity, generators }
        }
        CoxeterType::I2(p) => {
            let identity = Element::Dihedral { rot: 0, flip: false, p };
            let generators = (0..2)
                .map(|local| Element::Dihedral { rot: pos[local] as u32, flip: true, p })
                .collect();
            ComponentModel { identity, generators }
        }
        CoxeterType::E(_) | CoxeterType::F4 => {
            // Reflections directly off the component matrix:
            // s_i(α_j) = α_j − ⟨α_j, α_i^∨⟩ α_i.
            let mut identity = vec![0i64; n * n];
            for i in 0..n {
                identity[i * n + i] = 1;
            }
            let generators = (0..n)
                .map(|i| {
                    let mut a = identity.clone();
                    for j in 0..n {
                        if j == i {
                            a[i * n + i] = -1;
                        } else {
                            a[i * n + j] = -cartan_entry(sub.entry(i, j), i, j);
                        }
                    }
                    Element::IntMat { n, a }
                })
                .collect();
            ComponentModel { identity: Element::IntMat { n, a: identity }, generators }
        }
        CoxeterType::H(_) => {
            // Tits reflections: s_i(α_j) = α_j + 2cos(π/m_ij) α_i.
            let two_cos = |m: Mij| -> QSqrt5 {
                match m {
                    Mij::Fin(2) => QSqrt5::int(0),
                    Mij::Fin(3) => QSqrt5::int(1),
                    Mij::Fin(5) => QSqrt5::golden(),
                    other => unreachable!("label {other} in an H-type diagram"),
                }
            };
            let mut identity = vec![QSqrt5::int(0); n * n];
            for i in 0..n {
                identity[i * n + i] = QSqrt5::int(1);
            }
            let generators = (0..n)
                .map(|i| {
                    let mut a = identity.clone();
                    for j in 0..n {
                        if j == i {
                            a[i * n + i] = QSqrt5::int(-1);
                        } else {
                            a[i * n + j] = two_cos(sub.entry(i, j));
                        }
                    }
                    Element::GoldenMat { n, a }
                })
                .collect();
            ComponentModel {
                identity: Element::GoldenMat { n, a: identity },
                generators,
            }
        }
        CoxeterType::Infinite => unreachable!("model requested for an infinite component"),
    }
}

/// A faithful concrete model of a finite Coxeter group, one irreducible
/// component at a time.
pub struct GroupModel {
    matrix: CoxeterMatrix,
    comps: Vec<ComponentModel>,
    /// Global generator index → (component, local index).
    gen_loc: Vec<(usize, usize)>,
}

impl GroupModel {
    pub fn new(m: &CoxeterMatrix) -> Result<Self, CoxeterError> {
        if !is_finite(m) {
            return Err(CoxeterError::NotFinite);
        }
        let mut comps = Vec::new();
        let mut gen_loc = vec![(0usize, 0usize); m.rank()];
        for (verts, sub) in irreducible_components(m) {
            let ci = comps.len();
            for (local, &v) in verts.iter().enumerate() {
                gen_loc[v] = (ci, local);
            }
            comps.push(build_component(&sub));
        }
        Ok(GroupModel { matrix: m.clone(), comps, gen_loc })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement(self.comps.iter().map(|c| c.identity.clone()).collect())
    }

    /// The generator with global index `i` (identity in other components).
    pub fn generator(&self, i: usize) -> GroupElement {
        let (ci, local) = self.gen_loc[i];
        let mut parts: Vec<Element> = self.comps.iter().map(|c| c.identity.clone()).collect();
        parts[ci] = self.comps[ci].generators[local].clone();
        GroupElement(parts)
    }

    /// `x · y` (apply `y` first in the action convention).
    pub fn mul(&self, x: &GroupElement, y: &GroupElement) -> GroupElement {
        GroupElement(x.0.iter().zip(&y.0).map(|(a, b)| a.mul(b)).collect())
    }

    pub fn inv(&self, x: &GroupElement) -> GroupElement {
        GroupElement(
            x.0.iter()
                .zip(&self.comps)
                .map(|(e, c)| e.inv(&c.identity))
                .collect(),
        )
    }
}

/// Default element cap for `enumerate_group`.
pub const DEFAULT_ENUM_CAP: usize = 1_000_000;

/// A fully enumerated finite Coxeter group: elements in breadth-first
/// word order (shortest word first, ties by ascending generator index),
/// with constant-time index lookup. Element 0 is the identity.
pub struct EnumeratedGroup {
    pub model: GroupModel,
    pub elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl EnumeratedGroup {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Index of `elements[i] · elements[j]`.
    pub fn mul_indices(&self, i: usize, j: usize) -> usize {
        let prod = self.model.mul(&self.elements[i], &self.elements[j]);
        self.index[&prod]
    }

    /// Index of the inverse of `elements[i]`.
    pub fn inv_index(&self, i: usize) -> usize {
        self.index[&self.model.inv(&self.elements[i])]
    }

    /// Sorted element indices of the standard parabolic subgroup generated
    /// by the given global generator indices (empty set → trivial group).
    pub fn subgroup_indices(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = std::collections::BTreeSet::new();
        seen.insert(0usize);
        let mut queue = std::collections::VecDeque::from([0usize]);
        let gen_idx: Vec<usize> = gens
            .iter()
            .map(|&g| self.index[&self.model.generator(g)])
            .collect();
        while let Some(w) = queue.pop_front() {
            for &g in &gen_idx {
                let next = self.mul_indices(w, g);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
        seen.into_iter().collect()
    }
}

/// Enumerates all elements of the finite Coxeter group of `m`.
///
/// Breadth-first over generator words: the identity first, then words of
/// length 1 in ascending generator order, and so on. Deterministic.
pub fn enumerate_group(m: &CoxeterMatrix, cap: usize) -> Result<EnumeratedGroup, CoxeterError> {
    let Some(order) = group_order(m) else {
        return Err(CoxeterError::NotFinite);
    };
    if order > BigInt::from(cap) {
        return Err(CoxeterError::CapExceeded { order, cap });
    }
    let model = GroupModel::new(m)?;
    let generators: Vec<GroupElement> = (0..m.rank()).map(|i| model.generator(i)).collect();
    let identity = model.identity();
    let mut elements = vec![identity.clone()];
    let mut index = HashMap::new();
    index.insert(identity, 0usize);
    let mut head = 0;
    while head < elements.len() {
        let w = elements[head].clone();
        head += 1;
        for g in &generators {
            let next = model.mul(&w, g);
            if !index.contains_key(&next) {
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    assert_eq!(
        BigInt::from(elements.len()),
        order,
        "enumeration count disagrees with the classification order"
    );
    Ok(EnumeratedGroup { model, elements, index })
}
