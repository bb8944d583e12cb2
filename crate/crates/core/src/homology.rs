//! Exact integer simplicial homology and cohomology via Smith normal form,
//! plus Betti numbers over prime fields.
//!
//! Chain groups use the canonical orientation given by increasing vertex
//! order, so boundary matrices — and therefore all invariant factors — are
//! deterministic functions of the complex. The Smith normal form runs
//! fraction-free with pivoting on the smallest nonzero entry; arithmetic
//! starts in `i64` and the whole computation is redone in arbitrary
//! precision if any intermediate value overflows.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use thiserror::Error;

use crate::complex::SimplicialComplex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomologyError {
    #[error("degree {k} out of range for a complex of dimension {dim}")]
    DimensionOutOfRange { k: usize, dim: usize },
    #[error("homology of the empty complex is not defined")]
    EmptyComplex,
    #[error("{0} is not prime")]
    NotPrime(u64),
}

// ---------------------------------------------------------------------
// Integer matrices
// ---------------------------------------------------------------------

/// Dense row-major integer matrix with `i64` entries (inputs to the Smith
/// normal form; intermediate explosion is handled internally in arbitrary
/// precision).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    pub rows: usize,
    pub cols: usize,
    entries: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        IntMatrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = Self::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.at(i, j));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&e| e == 0)
    }

    /// Product, with `i128` accumulation (entries here are tiny).
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc: i128 = 0;
                for k in 0..self.cols {
                    acc += self.at(i, k) as i128 * other.at(k, j) as i128;
                }
                out.set(i, j, i64::try_from(acc).expect("product entry fits i64"));
            }
        }
        out
    }
}

// ---------------------------------------------------------------------
// Smith normal form
// ---------------------------------------------------------------------

/// Invariant factors `d₁ | d₂ | … | d_r` (all positive) of an integer
/// matrix, with the optional right transform `V` (unimodular, tracking the
/// column operations) whose trailing columns span the integer kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub rank: usize,
    pub factors: Vec<BigInt>,
    /// Column transform `V` with `A·V` column-reduced: columns `rank..` of
    /// `V` are a basis of `ker A`. Present only when requested.
    pub right_transform: Option<Vec<Vec<BigInt>>>,
}

impl SmithDecomposition {
    /// Invariant factors greater than one (the torsion coefficients of the
    /// cokernel restricted to the saturation).
    pub fn torsion(&self) -> Vec<BigInt> {
        self.factors.iter().filter(|d| **d > BigInt::from(1)).cloned().collect()
    }

    /// Basis of the integer kernel (each vector has length = matrix cols).
    /// Requires the decomposition to have been computed with a transform.
    pub fn kernel_basis(&self) -> Option<Vec<Vec<BigInt>>> {
        let v = self.right_transform.as_ref()?;
        let cols = v.len();
        let mut basis = Vec::with_capacity(cols - self.rank);
        for j in self.rank..cols {
            basis.push(v.iter().map(|row| row[j].clone()).collect());
        }
        Some(basis)
    }
}

/// Scalar abstraction letting one elimination routine serve both the `i64`
/// fast path (checked; overflow aborts the pass) and the `BigInt` path.
trait SnfScalar: Clone + Eq {
    fn is_nil(&self) -> bool;
    fn is_neg(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    /// Quotient rounding to nearest (ties toward the truncated quotient),
    /// so the remainder magnitude is at most half the divisor's.
    fn rounded_div(&self, d: &Self) -> Option<Self>;
    /// `self − q·x`.
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self>;
    fn add(&self, x: &Self) -> Option<Self>;
    fn negated(&self) -> Option<Self>;
    /// Whether `self` divides `x` (`self` nonzero).
    fn divides(&self, x: &Self) -> bool;
    fn to_big(&self) -> BigInt;
}

impl SnfScalar for i64 {
    fn is_nil(&self) -> bool {
        *self == 0
    }
    fn is_neg(&self) -> bool {
        *self < 0
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn rounded_div(&self, d: &Self) -> Option<Self> {
        let q0 = self.checked_div(*d)?;
        let r = self.checked_sub(q0.checked_mul(*d)?)?;
        if r.unsigned_abs().checked_mul(2)? > d.unsigned_abs() {
            if (r > 0) == (*d > 0) {
                q0.checked_add(1)
            } else {
                q0.checked_sub(1)
            }
        } else {
            Some(q0)
        }
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*x)?)
    }
    fn add(&self, x: &Self) -> Option<Self> {
        self.checked_add(*x)
    }
    fn negated(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn divides(&self, x: &Self) -> bool {
        x.checked_rem(*self).is_none_or(|r| r == 0)
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl SnfScalar for BigInt {
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_neg(&self) -> bool {
        Signed::is_negative(self)
    }
    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }
    fn rounded_div(&self, d: &Self) -> Option<Self> {
        let (q0, r) = self.div_rem(d);
        if (&r + &r).magnitude() > d.magnitude() {
            if Signed::is_negative(&r) == Signed::is_negative(d) {
                Some(q0 + 1)
            } else {
                Some(q0 - 1)
            }
        } else {
            Some(q0)
        }
    }
    fn sub_mul(&self, q: &Self, x: &Self) -> Option<Self> {
        Some(self - q * x)
    }
    fn add(&self, x: &Self) -> Option<Self> {
        Some(self + x)
    }
    fn negated(&self) -> Option<Self> {
        Some(-self)
    }
    fn divides(&self, x: &Self) -> bool {
        Zero::is_zero(&x.mod_floor(self))
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

struct Mat<T> {
    rows: usize,
    cols: usize,
    a: Vec<T>,
}

struct Overflow;

impl<T: SnfScalar> Mat<T> {
    fn at(&self, i: usize, j: usize) -> &T {
        &self.a[i * self.cols + j]
    }
    fn set(&mut self, i: usize, j: usize, v: T) {
        self.a[i * self.cols + j] = v;
    }
    fn swap_rows(&mut self, i: usize, k: usize) {
        if i != k {
            for j in 0..self.cols {
                self.a.swap(i * self.cols + j, k * self.cols + j);
            }
        }
    }
    fn swap_cols(&mut self, j: usize, l: usize) {
        if j != l {
            for i in 0..self.rows {
                self.a.swap(i * self.cols + j, i * self.cols + l);
            }
        }
    }
    /// `row_i −= q·row_k`, from column `from` on.
    fn row_sub_mul(&mut self, i: usize, k: usize, q: &T, from: usize) -> Result<(), Overflow> {
        for j in from..self.cols {
            let v = self.at(i, j).sub_mul(q, self.at(k, j)).ok_or(Overflow)?;
            self.set(i, j, v);
        }
        Ok(())
    }
    /// `col_j −= q·col_l`, from row `from` on.
    fn col_sub_mul(&mut self, j: usize, l: usize, q: &T, from: usize) -> Result<(), Overflow> {
        for i in from..self.rows {
            let v = self.at(i, j).sub_mul(q, self.at(i, l)).ok_or(Overflow)?;
            self.set(i, j, v);
        }
        Ok(())
    }
    /// `row_i += row_k`, from column `from` on.
    fn row_add(&mut self, i: usize, k: usize, from: usize) -> Result<(), Overflow> {
        for j in from..self.cols {
            let v = self.at(i, j).add(self.at(k, j)).ok_or(Overflow)?;
            self.set(i, j, v);
        }
        Ok(())
    }
    fn negate_row(&mut self, i: usize, from: usize) -> Result<(), Overflow> {
        for j in from..self.cols {
            let v = self.at(i, j).negated().ok_or(Overflow)?;
            self.set(i, j, v);
        }
        Ok(())
    }
}

/// Diagonalizes `m` in place by unimodular row/column operations; column
/// operations are mirrored into `v` when present. Returns the positive
/// diagonal (the invariant factors).
fn snf_engine<T: SnfScalar>(m: &mut Mat<T>, mut v: Option<&mut Mat<T>>) -> Result<Vec<T>, Overflow> {
    let steps = m.rows.min(m.cols);
    let mut t = 0;
    while t < steps {
        // Pivot: smallest nonzero magnitude in the trailing submatrix,
        // row-major tie-break (determinism).
        let mut best: Option<(usize, usize)> = None;
        for i in t..m.rows {
            for j in t..m.cols {
                if m.at(i, j).is_nil() {
                    continue;
                }
                if best.is_none_or(|(bi, bj)| m.at(i, j).cmp_abs(m.at(bi, bj)) == Ordering::Less)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        m.swap_rows(t, pi);
        m.swap_cols(t, pj);
        if let Some(v) = v.as_deref_mut() {
            v.swap_cols(t, pj);
        }

        loop {
            // Clear column t by Euclidean steps; a nonzero remainder becomes
            // the new (smaller) pivot.
            let mut changed = false;
            for i in t + 1..m.rows {
                if m.at(i, t).is_nil() {
                    continue;
                }
                let q = m.at(i, t).rounded_div(m.at(t, t)).ok_or(Overflow)?;
                if !q.is_nil() {
                    m.row_sub_mul(i, t, &q, t)?;
                }
                if !m.at(i, t).is_nil() {
                    m.swap_rows(i, t);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Clear row t (column operations; column t below the pivot is
            // already zero, so other columns only change in row t).
            for j in t + 1..m.cols {
                if m.at(t, j).is_nil() {
                    continue;
                }
                let q = m.at(t, j).rounded_div(m.at(t, t)).ok_or(Overflow)?;
                if !q.is_nil() {
                    m.col_sub_mul(j, t, &q, t)?;
                    if let Some(v) = v.as_deref_mut() {
                        v.col_sub_mul(j, t, &q, 0)?;
                    }
                }
                if !m.at(t, j).is_nil() {
                    m.swap_cols(j, t);
                    if let Some(v) = v.as_deref_mut() {
                        v.swap_cols(j, t);
                    }
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // Pivot row and column are clear. Enforce divisibility of the
            // trailing submatrix by the pivot.
            let mut fixed = true;
            'scan: for i in t + 1..m.rows {
                for j in t + 1..m.cols {
                    if !m.at(t, t).divides(m.at(i, j)) {
                        m.row_add(t, i, t)?;
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if m.at(t, t).is_neg() {
            m.negate_row(t, t)?;
        }
        t += 1;
    }
    let mut factors = Vec::new();
    for s in 0..t {
        if m.at(s, s).is_nil() {
            break;
        }
        factors.push(m.at(s, s).clone());
    }
    Ok(factors)
}

/// Smith normal form of `a` (no transform tracking).
pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    snf_with_transform(a, false)
}

/// Smith normal form, optionally tracking the right transform so the kernel
/// basis can be read off.
pub fn snf_with_transform(a: &IntMatrix, want_transform: bool) -> SmithDecomposition {
    // i64 fast path; fall back to arbitrary precision on overflow.
    let mut m = Mat { rows: a.rows, cols: a.cols, a: a.entries.clone() };
    let mut v = want_transform.then(|| {
        let mut id = Mat { rows: a.cols, cols: a.cols, a: vec![0i64; a.cols * a.cols] };
        for i in 0..a.cols {
            id.set(i, i, 1);
        }
        id
    });
    if let Ok(factors) = snf_engine(&mut m, v.as_mut()) {
        return assemble(factors, v);
    }
    let mut m = Mat {
        rows: a.rows,
        cols: a.cols,
        a: a.entries.iter().map(|&e| BigInt::from(e)).collect(),
    };
    let mut v = want_transform.then(|| {
        let mut id = Mat {
            rows: a.cols,
            cols: a.cols,
            a: vec![BigInt::ZERO; a.cols * a.cols],
        };
        for i in 0..a.cols {
            id.set(i, i, BigInt::from(1));
        }
        id
    });
    let factors = match snf_engine(&mut m, v.as_mut()) {
        Ok(f) => f,
        Err(Overflow) => unreachable!("arbitrary-precision path cannot overflow"),
    };
    assemble(factors, v)
}

fn assemble<T: SnfScalar>(factors: Vec<T>, v: Option<Mat<T>>) -> SmithDecomposition {
    SmithDecomposition {
        rank: factors.len(),
        factors: factors.iter().map(SnfScalar::to_big).collect(),
        right_transform: v.map(|v| {
            (0..v.rows)
                .map(|i| (0..v.cols).map(|j| v.at(i, j).to_big()).collect())
                .collect()
        }),
    }
}

// ---------------------------------------------------------------------
// Chain complexes
// ---------------------------------------------------------------------

/// An integer chain complex: `ranks[k]` cells in dimension `k`, and
/// boundary matrices `∂_k : C_k → C_{k−1}` with `boundaries[k]` of shape
/// `ranks[k−1] × ranks[k]` (index 0 holds the augmentation row when the
/// complex is reduced, otherwise a 0-row matrix).
#[derive(Debug, Clone)]
pub struct ChainComplexZ {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<IntMatrix>,
}

impl ChainComplexZ {
    /// Simplicial chain complex of `k`; `reduced` augments over ℤ.
    pub fn chains(k: &SimplicialComplex, reduced: bool) -> Result<Self, HomologyError> {
        if k.is_empty() {
            return Err(HomologyError::EmptyComplex);
        }
        let dim = k.dimension().expect("nonempty");
        let mut ranks = Vec::with_capacity(dim + 1);
        for d in 0..=dim {
            ranks.push(k.simplices_of_dim(d).len());
        }
        let mut boundaries = Vec::with_capacity(dim + 1);
        let aug_rows = usize::from(reduced);
        let mut aug = IntMatrix::zero(aug_rows, ranks[0]);
        if reduced {
            for j in 0..ranks[0] {
                aug.set(0, j, 1);
            }
        }
        boundaries.push(aug);
        for d in 1..=dim {
            let lower: Vec<_> = k.simplices_of_dim(d - 1).iter().collect();
            let index_of: std::collections::BTreeMap<_, _> =
                lower.iter().enumerate().map(|(i, s)| (*s, i)).collect();
            let mut bd = IntMatrix::zero(ranks[d - 1], ranks[d]);
            for (j, s) in k.simplices_of_dim(d).iter().enumerate() {
                for (omit, face) in s.boundary_faces().iter().enumerate() {
                    let sign = if omit % 2 == 0 { 1 } else { -1 };
                    bd.set(index_of[face], j, sign);
                }
            }
            boundaries.push(bd);
        }
        Ok(ChainComplexZ { ranks, boundaries })
    }

    /// Cochain complex of `k`, reindexed as a chain complex: position `j`
    /// holds cochain degree `dim − k`. With `reduced`, the coaugmentation
    /// appears as one extra rank-1 spot at the top.
    pub fn cochains(k: &SimplicialComplex, reduced: bool) -> Result<Self, HomologyError> {
        let ch = Self::chains(k, reduced)?;
        let dim = ch.ranks.len() - 1;
        let mut ranks: Vec<usize> = (0..=dim).map(|j| ch.ranks[dim - j]).collect();
        let mut boundaries = vec![IntMatrix::zero(0, ranks[0])];
        for j in 1..=dim {
            boundaries.push(ch.boundaries[dim - j + 1].transpose());
        }
        if reduced {
            ranks.push(1);
            boundaries.push(ch.boundaries[0].transpose());
        }
        Ok(ChainComplexZ { ranks, boundaries })
    }

    pub fn top_dimension(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `∂_k ∘ ∂_{k+1} = 0` for all composable pairs.
    pub fn dd_is_zero(&self) -> bool {
        (1..self.boundaries.len())
            .all(|k| self.boundaries[k - 1].mul(&self.boundaries[k]).is_zero())
    }

    fn boundary_snf(&self, k: usize) -> SmithDecomposition {
        if k < self.boundaries.len() {
            smith_normal_form(&self.boundaries[k])
        } else {
            SmithDecomposition { rank: 0, factors: Vec::new(), right_transform: None }
        }
    }

    /// Homology at position `k` of this chain complex.
    pub fn homology_at(&self, k: usize) -> HomologyGroup {
        let down = self.boundary_snf(k);
        let up = self.boundary_snf(k + 1);
        self.group_from(k, &down, &up)
    }

    fn group_from(
        &self,
        k: usize,
        down: &SmithDecomposition,
        up: &SmithDecomposition,
    ) -> HomologyGroup {
        let betti = self.ranks[k] - down.rank - up.rank;
        HomologyGroup { betti, torsion: up.torsion() }
    }

    /// Homology at every position, computing each boundary SNF once.
    pub fn all_homology(&self) -> Vec<HomologyGroup> {
        let snfs: Vec<SmithDecomposition> =
            (0..=self.ranks.len()).map(|k| self.boundary_snf(k)).collect();
        (0..self.ranks.len()).map(|k| self.group_from(k, &snfs[k], &snfs[k + 1])).collect()
    }
}

/// The simplicial chain complex of `k` (unreduced).
pub fn boundary_matrices(k: &SimplicialComplex) -> Result<ChainComplexZ, HomologyError> {
    ChainComplexZ::chains(k, false)
}

// ---------------------------------------------------------------------
// Homology groups
// ---------------------------------------------------------------------

/// A finitely generated abelian group `ℤ^betti ⊕ ⊕ᵢ ℤ/dᵢ` with the `dᵢ`
/// forming a divisibility chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyGroup {
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    pub fn trivial() -> Self {
        HomologyGroup { betti: 0, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.betti == 0 && self.torsion.is_empty()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".to_string()),
            b => parts.push(format!("Z^{b}")),
        }
        for d in &self.torsion {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_degree(k: &SimplicialComplex, deg: usize) -> Result<usize, HomologyError> {
    let dim = k.dimension().map_err(|_| HomologyError::EmptyComplex)?;
    if deg > dim {
        return Err(HomologyError::DimensionOutOfRange { k: deg, dim });
    }
    Ok(dim)
}

/// `H_k(K; ℤ)` (unreduced).
pub fn homology(k: &SimplicialComplex, deg: usize) -> Result<HomologyGroup, HomologyError> {
    check_degree(k, deg)?;
    Ok(ChainComplexZ::chains(k, false)?.homology_at(deg))
}

/// `H^k(K; ℤ)` (unreduced), from the transposed boundaries.
pub fn cohomology(k: &SimplicialComplex, deg: usize) -> Result<HomologyGroup, HomologyError> {
    let dim = check_degree(k, deg)?;
    Ok(ChainComplexZ::cochains(k, false)?.homology_at(dim - deg))
}

/// Reduced homology `H̃_k(K; ℤ)`.
pub fn reduced_homology(
    k: &SimplicialComplex,
    deg: usize,
) -> Result<HomologyGroup, HomologyError> {
    check_degree(k, deg)?;
    Ok(ChainComplexZ::chains(k, true)?.homology_at(deg))
}

/// Reduced cohomology `H̃^k(K; ℤ)`.
pub fn reduced_cohomology(
    k: &SimplicialComplex,
    deg: usize,
) -> Result<HomologyGroup, HomologyError> {
    let dim = check_degree(k, deg)?;
    Ok(ChainComplexZ::cochains(k, true)?.homology_at(dim - deg))
}

/// All unreduced homology groups `H_0 … H_dim`.
pub fn all_homology(k: &SimplicialComplex) -> Result<Vec<HomologyGroup>, HomologyError> {
    Ok(ChainComplexZ::chains(k, false)?.all_homology())
}

/// True iff `H̃_k(K; ℤ) = 0` for all `k` (the empty complex passes
/// vacuously only if treated as such by the caller; here it errors).
pub fn reduced_homology_vanishes(k: &SimplicialComplex) -> Result<bool, HomologyError> {
    Ok(ChainComplexZ::chains(k, true)?.all_homology().iter().all(HomologyGroup::is_trivial))
}

// ---------------------------------------------------------------------
// Mod-p Betti numbers
// ---------------------------------------------------------------------

/// Deterministic Miller–Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Rank of `m` over the field with `p` elements (Gaussian elimination).
// Textbook Gaussian elimination: row/column indices are the clearest idiom.
#[allow(clippy::needless_range_loop)]
fn rank_mod_p(m: &IntMatrix, p: u64) -> usize {
    let reduce = |e: i64| -> u64 { e.rem_euclid(p as i64) as u64 };
    let mut a: Vec<Vec<u64>> = (0..m.rows)
        .map(|i| (0..m.cols).map(|j| reduce(m.at(i, j))).collect())
        .collect();
    let mul = |x: u64, y: u64| ((x as u128 * y as u128) % p as u128) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let inv = |x: u64| pow(x, p - 2);
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..m.rows).find(|&i| a[i][col] != 0) else { continue };
        a.swap(rank, pivot);
        let pinv = inv(a[rank][col]);
        for j in col..m.cols {
            a[rank][j] = mul(a[rank][j], pinv);
        }
        for i in 0..m.rows {
            if i != rank && a[i][col] != 0 {
                let f = a[i][col];
                for j in col..m.cols {
                    let sub = mul(f, a[rank][j]);
                    a[i][j] = (a[i][j] + p - sub) % p;
                }
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

/// Betti number of `H_k(K; 𝔽_p)`.
pub fn homology_mod_p(
    k: &SimplicialComplex,
    deg: usize,
    p: u64,
) -> Result<usize, HomologyError> {
    if !is_prime_u64(p) {
        return Err(HomologyError::NotPrime(p));
    }
    check_degree(k, deg)?;
    let ch = ChainComplexZ::chains(k, false)?;
    let rank_at = |j: usize| {
        if j < ch.boundaries.len() {
            rank_mod_p(&ch.boundaries[j], p)
        } else {
            0
        }
    };
    Ok(ch.ranks[deg] - rank_at(deg) - rank_at(deg + 1))
}

// ---------------------------------------------------------------------
// Derived predicates
// ---------------------------------------------------------------------

/// Rank of `H₁(K; ℤ)`; zero for complexes of dimension < 1 and for the
/// empty complex.
pub fn h1_rank(k: &SimplicialComplex) -> usize {
    match k.dimension() {
        Ok(d) if d >= 1 => homology(k, 1).expect("degree in range").betti,
        _ => 0,
    }
}

/// Whether the top-degree cohomology vanishes, taken reduced so that a
/// single point (top degree 0) counts as trivial. In degrees ≥ 1 reduced
/// and unreduced cohomology agree. Empty complexes pass vacuously.
pub fn is_top_cohomology_trivial(k: &SimplicialComplex) -> bool {
    let Ok(dim) = k.dimension() else { return true };
    reduced_cohomology(k, dim).expect("degree in range").is_trivial()
}
