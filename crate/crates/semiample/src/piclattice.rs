//! The Picard lattice Z^{1+r} of a blow-up of the plane at r points, with
//! the signature-(1, r) intersection form.
//!
//! Sign convention, shared by every module: a class is written
//! D = a·ℓ − Σ bᵢ·Eᵢ and stored as (a; b₁,…,b_r).  The exceptional curve
//! Eᵢ is therefore (0; …, −1, …) and the canonical class
//! K = −3ℓ + ΣEᵢ is (−3; −1,…,−1).  The pairing of two classes is
//! a·a′ − Σ bᵢ·b′ᵢ.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::bareiss_det;

/// Integer divisor class (a; b₁,…,b_r), convention D = aℓ − Σ bᵢEᵢ.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub a: i64,
    pub b: Vec<i64>,
}

impl DivisorClass {
    pub fn new(a: i64, b: Vec<i64>) -> Self {
        DivisorClass { a, b }
    }

    pub fn zero(r: usize) -> Self {
        DivisorClass { a: 0, b: vec![0; r] }
    }

    pub fn rank(&self) -> usize {
        self.b.len()
    }

    /// The class of the line, ℓ = (1; 0,…,0).
    pub fn line(r: usize) -> Self {
        DivisorClass { a: 1, b: vec![0; r] }
    }

    /// The exceptional curve Eᵢ (0-indexed), which has bᵢ = −1.
    pub fn exceptional(r: usize, i: usize) -> Self {
        let mut b = vec![0; r];
        b[i] = -1;
        DivisorClass { a: 0, b }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self, other)?;
        Ok(DivisorClass {
            a: self.a + other.a,
            b: self.b.iter().zip(&other.b).map(|(x, y)| x + y).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        DivisorClass {
            a: -self.a,
            b: self.b.iter().map(|x| -x).collect(),
        }
    }

    pub fn scale(&self, n: i64) -> Self {
        DivisorClass {
            a: self.a * n,
            b: self.b.iter().map(|x| x * n).collect(),
        }
    }

    /// Coordinate vector (a, b₁, …, b_r) as big integers.
    fn coords(&self) -> Vec<BigInt> {
        let mut v = vec![BigInt::from(self.a)];
        v.extend(self.b.iter().map(|&x| BigInt::from(x)));
        v
    }

    fn from_coords(v: &[BigInt]) -> Result<Self> {
        let to = |x: &BigInt| {
            x.to_i64()
                .ok_or_else(|| Error::Internal("coordinate exceeds i64".into()))
        };
        Ok(DivisorClass {
            a: to(&v[0])?,
            b: v[1..].iter().map(to).collect::<Result<_>>()?,
        })
    }
}

fn check_rank(d1: &DivisorClass, d2: &DivisorClass) -> Result<()> {
    if d1.rank() != d2.rank() {
        return Err(Error::Dimension(format!(
            "classes have r = {} and r = {}",
            d1.rank(),
            d2.rank()
        )));
    }
    Ok(())
}

/// Intersection pairing a·a′ − Σ bᵢ·b′ᵢ.
pub fn intersect(d1: &DivisorClass, d2: &DivisorClass) -> Result<i64> {
    check_rank(d1, d2)?;
    let mut acc = (d1.a as i128) * (d2.a as i128);
    for (x, y) in d1.b.iter().zip(&d2.b) {
        acc -= (*x as i128) * (*y as i128);
    }
    acc.to_i64()
        .ok_or_else(|| Error::Internal("intersection number overflows i64".into()))
}

/// K = −3ℓ + ΣEᵢ, i.e. (−3; −1,…,−1).
pub fn canonical_class(r: usize) -> DivisorClass {
    DivisorClass {
        a: -3,
        b: vec![-1; r],
    }
}

pub fn anticanonical_class(r: usize) -> DivisorClass {
    canonical_class(r).neg()
}

/// Riemann–Roch: χ(D) = 1 + (D² − D·K)/2.
pub fn euler_characteristic(d: &DivisorClass) -> Result<i64> {
    let k = canonical_class(d.rank());
    let num = intersect(d, d)? - intersect(d, &k)?;
    if num % 2 != 0 {
        return Err(Error::Internal("Riemann-Roch parity violated".into()));
    }
    Ok(1 + num / 2)
}

/// Adjunction: p_a(C) = 1 + (C² + C·K)/2.
pub fn arithmetic_genus(c: &DivisorClass) -> Result<i64> {
    let k = canonical_class(c.rank());
    let num = intersect(c, c)? + intersect(c, &k)?;
    if num % 2 != 0 {
        return Err(Error::Internal("adjunction parity violated".into()));
    }
    Ok(1 + num / 2)
}

/// Symmetric intersection matrix of a curve configuration.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GramMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl GramMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension("Gram matrix is not square".into()));
        }
        for i in 0..n {
            for j in 0..n {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Config("Gram matrix is not symmetric".into()));
                }
            }
        }
        Ok(GramMatrix { entries })
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Gram matrix of pairwise intersections of the given classes.
    pub fn from_classes(classes: &[DivisorClass]) -> Result<Self> {
        let n = classes.len();
        let mut entries = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..n {
                entries[i][j] = intersect(&classes[i], &classes[j])?;
            }
        }
        Ok(GramMatrix { entries })
    }
}

/// True iff G is negative definite: every leading principal minor of −G is
/// positive.  Exact integer determinants.
pub fn is_negative_definite(g: &GramMatrix) -> bool {
    let n = g.size();
    for k in 1..=n {
        let minor: Vec<Vec<BigInt>> = (0..k)
            .map(|i| (0..k).map(|j| BigInt::from(-g.entries[i][j])).collect())
            .collect();
        if !bareiss_det(minor).is_positive() {
            return false;
        }
    }
    true
}

/// A Z-basis of a saturated sublattice of Pic(X).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticeBasis {
    pub vectors: Vec<DivisorClass>,
}

impl LatticeBasis {
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }
}

/// Saturated integer kernel {D : D·Cᵢ = 0 for all i} of the pairing
/// against the given classes, as a basis.  `r` fixes the ambient rank when
/// the class list is empty.
pub fn perp_basis(classes: &[DivisorClass], r: usize) -> Result<LatticeBasis> {
    for c in classes {
        if c.rank() != r {
            return Err(Error::Dimension(format!(
                "class with r = {} in a rank-{} lattice",
                c.rank(),
                r
            )));
        }
    }
    let n = 1 + r;
    // constraint matrix: row i maps coordinates d to Cᵢ·D, i.e. the class
    // coordinates with the b-part negated by the diagonal form
    let rows: Vec<Vec<BigInt>> = classes
        .iter()
        .map(|c| {
            let mut row = vec![BigInt::from(c.a)];
            row.extend(c.b.iter().map(|&x| BigInt::from(-x)));
            row
        })
        .collect();
    let kernel = integer_kernel(&rows, n);
    let vectors = kernel
        .iter()
        .map(|v| DivisorClass::from_coords(v))
        .collect::<Result<Vec<_>>>()?;
    Ok(LatticeBasis { vectors })
}

/// Kernel of an integer matrix (rows of length n) as a saturated lattice
/// basis, via column elimination with a unimodular transform: the columns
/// of the transform that map to zero columns span the kernel, and because
/// the transform is invertible over Z the span is automatically saturated.
pub(crate) fn integer_kernel(rows: &[Vec<BigInt>], n: usize) -> Vec<Vec<BigInt>> {
    let m = rows.len();
    // a: m x n working copy; u: n x n unimodular, tracked column-wise
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { BigInt::from(1) } else { BigInt::from(0) })
                .collect()
        })
        .collect();
    let col_op = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, src: usize, dst: usize, q: &BigInt| {
        for row in a.iter_mut() {
            let t = &row[src] * q;
            row[dst] -= t;
        }
        for row in u.iter_mut() {
            let t = &row[src] * q;
            row[dst] -= t;
        }
    };
    let swap_cols = |a: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
        for row in u.iter_mut() {
            row.swap(i, j);
        }
    };
    let mut next_col = 0usize;
    for row_idx in 0..m {
        if next_col == n {
            break;
        }
        // euclidean elimination across columns next_col..n on this row
        loop {
            // find the column with smallest nonzero absolute value
            let mut pivot: Option<usize> = None;
            for c in next_col..n {
                if !a[row_idx][c].is_zero()
                    && pivot.map_or(true, |p| a[row_idx][c].abs() < a[row_idx][p].abs())
                {
                    pivot = Some(c);
                }
            }
            let p = match pivot {
                Some(p) => p,
                None => break, // row already zero on the remaining columns
            };
            swap_cols(&mut a, &mut u, next_col, p);
            let mut done = true;
            for c in next_col + 1..n {
                if !a[row_idx][c].is_zero() {
                    let q = num_integer::Integer::div_floor(&a[row_idx][c], &a[row_idx][next_col]);
                    col_op(&mut a, &mut u, next_col, c, &q);
                    if !a[row_idx][c].is_zero() {
                        done = false;
                    }
                }
            }
            if done {
                next_col += 1;
                break;
            }
        }
    }
    // columns next_col..n of u span the kernel
    (next_col..n)
        .map(|c| (0..n).map(|i| u[i][c].clone()).collect())
        .collect()
}

/// Canonical row-style Hermite normal form of the span of the given
/// vectors (zero rows dropped, positive pivots, entries above pivots
/// reduced).  Two vector lists span the same lattice iff their forms agree.
pub(crate) fn hnf_rows(vectors: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vectors.iter().filter(|v| !v.iter().all(|x| x.is_zero())).cloned().collect();
    if rows.is_empty() {
        return rows;
    }
    let n = rows[0].len();
    let mut pivot_row = 0usize;
    for col in 0..n {
        if pivot_row == rows.len() {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for i in pivot_row..rows.len() {
                if !rows[i][col].is_zero()
                    && best.map_or(true, |b| rows[i][col].abs() < rows[b][col].abs())
                {
                    best = Some(i);
                }
            }
            let b = match best {
                Some(b) => b,
                None => break,
            };
            rows.swap(pivot_row, b);
            let mut done = true;
            for i in pivot_row + 1..rows.len() {
                if !rows[i][col].is_zero() {
                    let q = num_integer::Integer::div_floor(&rows[i][col], &rows[pivot_row][col]);
                    for j in 0..n {
                        let t = &rows[pivot_row][j] * &q;
                        rows[i][j] -= t;
                    }
                    if !rows[i][col].is_zero() {
                        done = false;
                    }
                }
            }
            if !done {
                continue;
            }
            // normalize pivot sign and reduce the rows above
            if rows[pivot_row][col].is_negative() {
                for j in 0..n {
                    rows[pivot_row][j] = -rows[pivot_row][j].clone();
                }
            }
            for i in 0..pivot_row {
                let q = num_integer::Integer::div_floor(&rows[i][col], &rows[pivot_row][col]);
                if !q.is_zero() {
                    for j in 0..n {
                        let t = &rows[pivot_row][j] * &q;
                        rows[i][j] -= t;
                    }
                }
            }
            pivot_row += 1;
            break;
        }
    }
    rows.truncate(pivot_row);
    rows
}

/// Do two lists of classes span the same integer sublattice?
pub fn same_lattice(xs: &[DivisorClass], ys: &[DivisorClass]) -> bool {
    let cx: Vec<Vec<BigInt>> = xs.iter().map(|d| d.coords()).collect();
    let cy: Vec<Vec<BigInt>> = ys.iter().map(|d| d.coords()).collect();
    hnf_rows(&cx) == hnf_rows(&cy)
}

/// All (−1)-classes (C² = −1, C·K = −1) and (−2)-classes (C² = −2,
/// C·K = 0) with line coefficient 0 < a ≤ degree_bound and bᵢ ≥ 0, plus the
/// a = 0 representatives Eᵢ and Eᵢ − Eⱼ (i < j).  Complete only up to the
/// degree bound; deterministic lexicographic order on (a, b).
pub fn enumerate_negative_classes(r: usize, degree_bound: i64) -> Vec<DivisorClass> {
    let mut out: Vec<DivisorClass> = Vec::new();
    // a = 0: the exceptional classes Eᵢ are the only (−1)-classes, and the
    // roots Eᵢ − Eⱼ (one representative per ± pair) the only (−2)-classes
    for i in 0..r {
        out.push(DivisorClass::exceptional(r, i));
        for j in i + 1..r {
            let mut b = vec![0; r];
            b[i] = -1;
            b[j] = 1;
            out.push(DivisorClass { a: 0, b });
        }
    }
    // a >= 1: solve sum(b) = 3a + C·K, sum(b²) = a² − C² with bᵢ ≥ 0
    for a in 1..=degree_bound.max(0) {
        for (sum_target, sq_target) in [(3 * a - 1, a * a + 1), (3 * a, a * a + 2)] {
            let mut b = vec![0i64; r];
            enumerate_b(&mut out, &mut b, 0, a, sum_target, sq_target);
        }
    }
    out.sort();
    out
}

fn enumerate_b(
    out: &mut Vec<DivisorClass>,
    b: &mut Vec<i64>,
    idx: usize,
    a: i64,
    sum_left: i64,
    sq_left: i64,
) {
    let r = b.len();
    if idx == r {
        if sum_left == 0 && sq_left == 0 {
            out.push(DivisorClass {
                a,
                b: b.clone(),
            });
        }
        return;
    }
    if sum_left < 0 || sq_left < 0 {
        return;
    }
    // remaining coordinates cannot fix a sum larger than what squares allow:
    // sum_left² ≤ (r−idx)·sq_left by Cauchy-Schwarz
    let rem = (r - idx) as i64;
    if sum_left * sum_left > rem * sq_left {
        return;
    }
    let mut v = 0i64;
    while v * v <= sq_left && v <= sum_left {
        b[idx] = v;
        enumerate_b(out, b, idx + 1, a, sum_left - v, sq_left - v * v);
        v += 1;
    }
    b[idx] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(a: i64, b: &[i64]) -> DivisorClass {
        DivisorClass::new(a, b.to_vec())
    }

    #[test]
    fn pairing_basics() {
        let r = 3;
        let l = DivisorClass::line(r);
        let e1 = DivisorClass::exceptional(r, 0);
        let e2 = DivisorClass::exceptional(r, 1);
        assert_eq!(intersect(&l, &l).unwrap(), 1);
        assert_eq!(intersect(&e1, &e1).unwrap(), -1);
        assert_eq!(intersect(&e1, &e2).unwrap(), 0);
        assert_eq!(intersect(&l, &e1).unwrap(), 0);
        assert!(intersect(&l, &DivisorClass::line(5)).is_err());
    }

    #[test]
    fn canonical_class_squares() {
        // K² = 9 − r across the supported range
        for r in 0..=15 {
            let k = canonical_class(r);
            assert_eq!(intersect(&k, &k).unwrap(), 9 - r as i64);
        }
        assert_eq!(canonical_class(3), d(-3, &[-1, -1, -1]));
        // (−K)² at r = 12 is −3
        let mk = anticanonical_class(12);
        assert_eq!(intersect(&mk, &mk).unwrap(), -3);
    }

    #[test]
    fn riemann_roch_and_adjunction() {
        assert_eq!(euler_characteristic(&DivisorClass::zero(4)).unwrap(), 1);
        // χ(ℓ) = 3 on P² (r = 0): sections are the degree-1 monomials
        assert_eq!(euler_characteristic(&DivisorClass::line(0)).unwrap(), 3);
        assert_eq!(euler_characteristic(&anticanonical_class(9)).unwrap(), 1);
        assert_eq!(arithmetic_genus(&DivisorClass::line(2)).unwrap(), 0);
        assert_eq!(arithmetic_genus(&DivisorClass::exceptional(2, 0)).unwrap(), 0);
        for r in [0, 5, 9, 12] {
            assert_eq!(arithmetic_genus(&anticanonical_class(r)).unwrap(), 1);
        }
    }

    #[test]
    fn perp_of_line_is_exceptional_lattice() {
        let r = 4;
        let basis = perp_basis(&[DivisorClass::line(r)], r).unwrap();
        assert_eq!(basis.rank(), r);
        let expected: Vec<DivisorClass> =
            (0..r).map(|i| DivisorClass::exceptional(r, i)).collect();
        assert!(same_lattice(&basis.vectors, &expected));
    }

    #[test]
    fn perp_of_nothing_is_everything() {
        let basis = perp_basis(&[], 2).unwrap();
        assert_eq!(basis.rank(), 3);
        let all = vec![
            DivisorClass::line(2),
            DivisorClass::exceptional(2, 0),
            DivisorClass::exceptional(2, 1),
        ];
        assert!(same_lattice(&basis.vectors, &all));
    }

    #[test]
    fn perp_of_anticanonical_r10() {
        // the kernel of pairing against −K at r = 10 is spanned by
        // E₁−E₁₀, …, E₉−E₁₀ and ℓ−3E₁₀
        let r = 10;
        let basis = perp_basis(&[anticanonical_class(r)], r).unwrap();
        assert_eq!(basis.rank(), 10);
        let mk = anticanonical_class(r);
        for v in &basis.vectors {
            assert_eq!(intersect(v, &mk).unwrap(), 0);
        }
        let mut expected = Vec::new();
        for i in 0..9 {
            expected.push(
                DivisorClass::exceptional(r, i)
                    .sub(&DivisorClass::exceptional(r, 9))
                    .unwrap(),
            );
        }
        let mut b = vec![0; r];
        b[9] = 3;
        expected.push(d(1, &b));
        assert!(same_lattice(&basis.vectors, &expected));
    }

    #[test]
    fn perp_basis_is_saturated() {
        let r = 10;
        let basis = perp_basis(&[anticanonical_class(r)], r).unwrap();
        for v in &basis.vectors {
            for q in [2i64, 3, 5, 7] {
                let divisible =
                    v.a % q == 0 && v.b.iter().all(|&x| x % q == 0);
                assert!(!divisible, "basis vector {v:?} divisible by {q}");
            }
        }
    }

    #[test]
    fn negative_class_enumeration() {
        let classes = enumerate_negative_classes(2, 3);
        let minus_one: Vec<_> = classes
            .iter()
            .filter(|c| intersect(c, c).unwrap() == -1)
            .cloned()
            .collect();
        assert_eq!(
            minus_one,
            vec![
                d(0, &[-1, 0]),
                d(0, &[0, -1]),
                d(1, &[1, 1]),
            ]
        );
        // E₁ − E₂ is the (−2)-representative
        assert!(classes.contains(&d(0, &[-1, 1])));

        // the cubic surface: 27 lines
        let classes6 = enumerate_negative_classes(6, 3);
        let count = classes6
            .iter()
            .filter(|c| intersect(c, c).unwrap() == -1)
            .count();
        assert_eq!(count, 27);
    }

    #[test]
    fn enumerated_classes_satisfy_numerics() {
        for r in [2usize, 6, 10] {
            let k = canonical_class(r);
            for c in enumerate_negative_classes(r, 3) {
                let c2 = intersect(&c, &c).unwrap();
                let ck = intersect(&c, &k).unwrap();
                assert!(
                    (c2, ck) == (-1, -1) || (c2, ck) == (-2, 0),
                    "unexpected class {c:?}"
                );
                // (−1)-classes have χ = 1, (−2)-classes χ = 0; genus 0 always
                let chi = euler_characteristic(&c).unwrap();
                assert_eq!(chi, if c2 == -1 { 1 } else { 0 });
                assert_eq!(arithmetic_genus(&c).unwrap(), 0);
            }
        }
    }

    #[test]
    fn definiteness_minors() {
        let g = |e: &[&[i64]]| GramMatrix::new(e.iter().map(|r| r.to_vec()).collect()).unwrap();
        assert!(is_negative_definite(&g(&[&[-2]])));
        assert!(is_negative_definite(&g(&[&[-2, 1], &[1, -2]])));
        assert!(!is_negative_definite(&g(&[&[-2, 2], &[2, -2]])));
        assert!(!is_negative_definite(&g(&[&[1]])));
        // affine A₂ tilde: semidefinite, not definite
        assert!(!is_negative_definite(&g(&[
            &[-2, 1, 1],
            &[1, -2, 1],
            &[1, 1, -2]
        ])));
    }

    #[test]
    fn gram_validation() {
        assert!(GramMatrix::new(vec![vec![-2, 1], vec![0, -2]]).is_err());
        assert!(GramMatrix::new(vec![vec![-2, 1]]).is_err());
    }

    #[test]
    fn divisor_json_shape() {
        let c = d(2, &[1, 0, -1]);
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"a":2,"b":[1,0,-1]}"#
        );
        let back: DivisorClass = serde_json::from_str(r#"{"a":2,"b":[1,0,-1]}"#).unwrap();
        assert_eq!(back, c);
    }
}
