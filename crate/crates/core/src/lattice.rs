//! Exact integer matrices, Smith normal form and finitely generated abelian groups.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::monoid::FiniteMonoid;

/// Dense row-major matrix of arbitrary-precision integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        IntMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect(),
        }
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(diag: &[T]) -> Self {
        let n = diag.len();
        let mut m = Self::zeros(n, n);
        for (i, d) in diag.iter().enumerate() {
            m.entries[i * n + i] = d.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.entries[i * self.cols + j] = v.into();
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: impl Into<BigInt>) {
        self.entries[i * self.cols + j] += v.into();
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.entries[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * a.get(n - 1, n - 1)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.entries.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.entries.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    /// row[dst] += factor * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(src, j) * factor;
            if !v.is_zero() {
                self.entries[dst * self.cols + j] += v;
            }
        }
    }

    /// col[dst] += factor * col[src]
    fn add_col_multiple(&mut self, dst: usize, src: usize, factor: &BigInt) {
        if factor.is_zero() {
            return;
        }
        for i in 0..self.rows {
            let v = self.get(i, src) * factor;
            if !v.is_zero() {
                self.entries[i * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let v = -self.get(i, j);
            self.set(i, j, v);
        }
    }
}

/// `U · A · V = S` with `U`, `V` unimodular and `S` in Smith form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithForm {
    pub s: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    /// The diagonal `d_1 | d_2 | …` (length `min(rows, cols)`).
    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.s.rows.min(self.s.cols)).map(|i| self.s.get(i, i).clone()).collect()
    }
}

/// Smith normal form by elementary row and column operations.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (rows, cols) = (a.rows, a.cols);
    let mut s = a.clone();
    // U is tracked directly; V is tracked through its transpose so that
    // column operations on S become row operations on Vᵗ.
    let mut u = IntMatrix::identity(rows);
    let mut vt = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        // pivot: smallest nonzero absolute value in the trailing block
        let Some((pi, pj)) = smallest_nonzero(&s, t) else { break };
        s.swap_rows(t, pi);
        u.swap_rows(t, pi);
        s.swap_cols(t, pj);
        vt.swap_rows(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if s.get(i, t).is_zero() {
                    continue;
                }
                let q = -s.get(i, t).div_floor(s.get(t, t));
                s.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                if !s.get(i, t).is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if s.get(t, j).is_zero() {
                    continue;
                }
                let q = -s.get(t, j).div_floor(s.get(t, t));
                s.add_col_multiple(j, t, &q);
                vt.add_row_multiple(j, t, &q);
                if !s.get(t, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // a nonzero remainder is strictly smaller than the pivot
                let (pi, pj) = smallest_in_cross(&s, t);
                s.swap_rows(t, pi);
                u.swap_rows(t, pi);
                s.swap_cols(t, pj);
                vt.swap_rows(t, pj);
                continue;
            }
            // the pivot must divide the whole trailing block
            let offender = (t + 1..rows)
                .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !s.get(i, j).is_multiple_of(s.get(t, t)));
            match offender {
                Some((i, _)) => {
                    let one = BigInt::one();
                    s.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
    }
    SmithForm { s, u, v: vt.transpose() }
}

fn smallest_nonzero(s: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for i in t..s.rows {
        for j in t..s.cols {
            let v = s.get(i, j);
            if v.is_zero() {
                continue;
            }
            let a = v.abs();
            if best.as_ref().is_none_or(|(_, b)| a < *b) {
                best = Some(((i, j), a));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Smallest nonzero entry in row `t` or column `t` of the trailing block.
fn smallest_in_cross(s: &IntMatrix, t: usize) -> (usize, usize) {
    let cells = (t..s.rows).map(|i| (i, t)).chain((t + 1..s.cols).map(|j| (t, j)));
    cells
        .filter(|&(i, j)| !s.get(i, j).is_zero())
        .min_by_key(|&(i, j)| s.get(i, j).abs())
        .expect("cross has a nonzero entry")
}

/// A finitely generated abelian group `ℤ^rank ⊕ ℤ/d₁ ⊕ … ⊕ ℤ/d_k`
/// with `d₁ | d₂ | … | d_k` and every `dᵢ ≥ 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbelianGroup {
    rank: usize,
    invariant_factors: Vec<BigInt>,
}

impl FgAbelianGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbelianGroup { rank, invariant_factors: Vec::new() }
    }

    /// `ℤ/n` (`n = 0` gives `ℤ`, `n = ±1` the trivial group).
    pub fn cyclic(n: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders(&[n.into()])
    }

    /// `⊕ ℤ/nᵢ` for arbitrary orders; zero orders count as free summands and
    /// the list is renormalized to a divisor chain.
    pub fn from_cyclic_orders(orders: &[BigInt]) -> Self {
        cokernel(&IntMatrix::diagonal(orders))
    }

    /// Builds from an already-canonical description, checking the invariants.
    pub fn from_canonical(rank: usize, invariant_factors: Vec<BigInt>) -> Option<Self> {
        let two = BigInt::from(2);
        let ok = invariant_factors.iter().all(|d| *d >= two)
            && invariant_factors.windows(2).all(|w| w[1].is_multiple_of(&w[0]));
        ok.then_some(FgAbelianGroup { rank, invariant_factors })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn invariant_factors(&self) -> &[BigInt] {
        &self.invariant_factors
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    /// Order of the group, `None` when infinite.
    pub fn order(&self) -> Option<BigInt> {
        (self.rank == 0).then(|| self.invariant_factors.iter().product())
    }

    pub fn direct_sum(&self, other: &FgAbelianGroup) -> FgAbelianGroup {
        let mut orders: Vec<BigInt> = self.invariant_factors.clone();
        orders.extend(other.invariant_factors.iter().cloned());
        let torsion = Self::from_cyclic_orders(&orders);
        FgAbelianGroup { rank: self.rank + other.rank, ..torsion }
    }

    /// Number of coordinates in [`CompletionResult`](crate::completion::CompletionResult)
    /// style vectors: free coordinates first, then one per invariant factor.
    pub fn coordinate_len(&self) -> usize {
        self.rank + self.invariant_factors.len()
    }

    /// Reduces a coordinate vector to its canonical representative.
    pub fn normalize(&self, coords: &mut [BigInt]) {
        for (c, d) in coords[self.rank..].iter_mut().zip(&self.invariant_factors) {
            *c = c.mod_floor(d);
        }
    }

    pub fn add_coords(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        self.normalize(&mut out);
        out
    }
}

/// Structural isomorphism test: canonical forms coincide.
pub fn iso(a: &FgAbelianGroup, b: &FgAbelianGroup) -> bool {
    a == b
}

impl fmt::Display for FgAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.invariant_factors.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

/// `ℤ^rows / image(A)` where `A` maps `ℤ^cols → ℤ^rows`.
pub fn cokernel(a: &IntMatrix) -> FgAbelianGroup {
    cokernel_with_coordinates(a).0
}

/// The cokernel together with the coordinate matrix sending each standard
/// generator of `ℤ^rows` to its canonical coordinates (free first, then
/// torsion in divisor order), reduced modulo the invariant factors.
pub fn cokernel_with_coordinates(a: &IntMatrix) -> (FgAbelianGroup, Vec<Vec<BigInt>>) {
    let snf = smith_normal_form(a);
    let diag = snf.diagonal();
    let nonzero = diag.iter().take_while(|d| !d.is_zero()).count();
    let rank = a.rows - nonzero;
    let torsion_rows: Vec<usize> = (0..nonzero).filter(|&i| !diag[i].is_one()).collect();
    let group = FgAbelianGroup {
        rank,
        invariant_factors: torsion_rows.iter().map(|&i| diag[i].clone()).collect(),
    };
    // x ↦ U x identifies ℤ^rows / im A with ⊕ ℤ/dᵢ ⊕ ℤ^rank.
    let coords = (0..a.rows)
        .map(|g| {
            let mut c: Vec<BigInt> = (nonzero..a.rows).map(|i| snf.u.get(i, g).clone()).collect();
            c.extend(torsion_rows.iter().map(|&i| snf.u.get(i, g).clone()));
            group.normalize(&mut c);
            c
        })
        .collect();
    (group, coords)
}

/// Invariant factors of a finite abelian group given by its table, computed
/// from the counts `|G[p^j]|` of elements killed by prime powers.
pub fn structure_of_finite_abelian_group(m: &FiniteMonoid) -> Result<FgAbelianGroup> {
    if !m.is_group() || !m.is_commutative() {
        return Err(Error::NotAbelianGroup);
    }
    let n = m.len();
    // p-primary parts as partitions (exponents of cyclic factors).
    let mut primary: Vec<(u64, Vec<u32>)> = Vec::new();
    for p in prime_factors(n as u64) {
        let mut counts = vec![1usize]; // |G[p^0]|
        let mut j = 1u32;
        loop {
            let pj = p.pow(j);
            let c = (0..n).filter(|&x| m.power(x, pj) == m.identity()).count();
            if c == *counts.last().unwrap() {
                break;
            }
            counts.push(c);
            j += 1;
        }
        // number of cyclic factors of exponent >= j is log_p(|G[p^j]| / |G[p^{j-1}]|)
        let at_least: Vec<u32> = counts
            .windows(2)
            .map(|w| log_exact(p, (w[1] / w[0]) as u64))
            .collect();
        let mut exps = Vec::new();
        for (idx, &k) in at_least.iter().enumerate() {
            let next = at_least.get(idx + 1).copied().unwrap_or(0);
            for _ in 0..(k - next) {
                exps.push(idx as u32 + 1);
            }
        }
        exps.sort_unstable_by(|a, b| b.cmp(a));
        primary.push((p, exps));
    }
    // largest invariant factor collects the largest power of each prime, and so on
    let len = primary.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
    let mut factors: Vec<BigInt> = (0..len)
        .map(|i| {
            primary
                .iter()
                .filter_map(|(p, e)| e.get(i).map(|&k| BigInt::from(*p).pow(k)))
                .product()
        })
        .collect();
    factors.reverse();
    Ok(FgAbelianGroup { rank: 0, invariant_factors: factors })
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_exact(p: u64, mut x: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        k += 1;
    }
    k
}

/// Canonical group of a finite abelian group table plus coordinates of each
/// element, read off the cokernel of its multiplication relations.
pub fn abelian_group_coordinates(m: &FiniteMonoid) -> Result<(FgAbelianGroup, Vec<Vec<BigInt>>)> {
    if !m.is_group() || !m.is_commutative() {
        return Err(Error::NotAbelianGroup);
    }
    Ok(cokernel_with_coordinates(&multiplication_relations(m)))
}

/// Columns `x_a + x_b − x_{a•b}` for every pair, then `x_e`.
pub(crate) fn multiplication_relations(m: &FiniteMonoid) -> IntMatrix {
    let n = m.len();
    let mut a = IntMatrix::zeros(n, n * n + 1);
    for x in 0..n {
        for y in 0..n {
            let col = x * n + y;
            a.add_to(x, col, 1);
            a.add_to(y, col, 1);
            a.add_to(m.op(x, y), col, -1);
        }
    }
    a.add_to(m.identity(), n * n, 1);
    a
}

/// Converts small coordinates to `i64` for display and bindings.
pub fn coords_to_i64(c: &[BigInt]) -> Vec<i64> {
    c.iter().map(|x| x.to_i64().expect("coordinate fits in i64")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_snf(a: &IntMatrix) -> SmithForm {
        let f = smith_normal_form(a);
        assert_eq!(f.u.mul(a).mul(&f.v), f.s, "U·A·V != S for {a:?}");
        assert!(f.s.is_diagonal());
        assert!(f.u.determinant().abs().is_one());
        assert!(f.v.determinant().abs().is_one());
        let d = f.diagonal();
        assert!(d.iter().all(|x| !x.is_negative()));
        for w in d.windows(2) {
            assert!(w[1].is_multiple_of(&w[0]) || w[0].is_zero() && w[1].is_zero(), "{d:?}");
        }
        f
    }

    #[test]
    fn snf_examples() {
        assert_eq!(check_snf(&IntMatrix::identity(2)).s, IntMatrix::identity(2));
        let f = check_snf(&IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(f.diagonal(), big(&[2, 4]));
        let f = check_snf(&IntMatrix::zeros(1, 1));
        assert_eq!(f.diagonal(), big(&[0]));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(IntMatrix::from_rows(&[vec![2, 4], vec![6, 8]]).determinant(), BigInt::from(-8));
        let m = IntMatrix::from_rows(&[vec![0, 1, 2], vec![1, 0, 3], vec![4, -3, 8]]);
        assert_eq!(m.determinant(), BigInt::from(-2));
    }

    #[test]
    fn cokernel_examples() {
        assert_eq!(cokernel(&IntMatrix::zeros(2, 0)), FgAbelianGroup::free(2));
        assert_eq!(cokernel(&IntMatrix::from_rows(&[vec![2]])).to_string(), "Z/2");
        let g = cokernel(&IntMatrix::from_rows(&[vec![1, 0], vec![0, 6]]));
        assert_eq!(g.to_string(), "Z/6");
    }

    #[test]
    fn iso_examples() {
        let a = FgAbelianGroup::free(1).direct_sum(&FgAbelianGroup::cyclic(2));
        let b = FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::free(1));
        assert!(iso(&a, &b));
        let v4 = FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::cyclic(2));
        assert!(!iso(&v4, &FgAbelianGroup::cyclic(4)));
        let c = cokernel(&IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert!(iso(&c, &FgAbelianGroup::cyclic(6)));
    }

    #[test]
    fn direct_sum_examples() {
        let z = FgAbelianGroup::free(1);
        assert_eq!(z.direct_sum(&FgAbelianGroup::trivial()), z);
        assert_eq!(FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::cyclic(3)).to_string(), "Z/6");
        let v4 = FgAbelianGroup::cyclic(2).direct_sum(&FgAbelianGroup::cyclic(2));
        assert_eq!(v4.invariant_factors(), &big(&[2, 2])[..]);
    }

    #[test]
    fn display_format() {
        let g = FgAbelianGroup::from_canonical(2, big(&[2, 4])).unwrap();
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/4");
        assert_eq!(FgAbelianGroup::trivial().to_string(), "0");
        assert_eq!(FgAbelianGroup::free(1).to_string(), "Z");
        assert!(FgAbelianGroup::from_canonical(0, big(&[4, 2])).is_none());
        assert!(FgAbelianGroup::from_canonical(0, big(&[1])).is_none());
    }

    #[test]
    fn finite_abelian_structure() {
        let z6 = FiniteMonoid::cyclic(6);
        assert_eq!(structure_of_finite_abelian_group(&z6).unwrap().to_string(), "Z/6");
        let v4 = FiniteMonoid::cyclic(2).product(&FiniteMonoid::cyclic(2)).unwrap();
        assert_eq!(structure_of_finite_abelian_group(&v4).unwrap().to_string(), "Z/2 + Z/2");
        assert!(structure_of_finite_abelian_group(&FiniteMonoid::cyclic(1)).unwrap().is_trivial());
        let g = FiniteMonoid::cyclic(4).product(&FiniteMonoid::cyclic(6)).unwrap();
        assert_eq!(structure_of_finite_abelian_group(&g).unwrap().to_string(), "Z/2 + Z/12");
        assert_eq!(
            structure_of_finite_abelian_group(&FiniteMonoid::saturating(2)),
            Err(Error::NotAbelianGroup)
        );
    }

    #[test]
    fn counting_and_snf_routes_agree() {
        for (a, b) in [(2, 2), (2, 4), (3, 3), (4, 4), (2, 6), (5, 1), (3, 4)] {
            let g = FiniteMonoid::cyclic(a).product(&FiniteMonoid::cyclic(b)).unwrap();
            let counted = structure_of_finite_abelian_group(&g).unwrap();
            let (reduced, coords) = abelian_group_coordinates(&g).unwrap();
            assert_eq!(counted, reduced);
            // coordinates give a bijective homomorphism
            let mut seen: Vec<&Vec<BigInt>> = coords.iter().collect();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), g.len());
            for x in 0..g.len() {
                for y in 0..g.len() {
                    assert_eq!(reduced.add_coords(&coords[x], &coords[y]), coords[g.op(x, y)]);
                }
            }
        }
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-9i64..10, r * c).prop_map(move |v| {
                let rows: Vec<Vec<i64>> = v.chunks(c).map(|x| x.to_vec()).collect();
                IntMatrix::from_rows(&rows)
            })
        })
    }

    proptest! {
        #[test]
        fn snf_is_a_valid_decomposition(a in small_matrix()) {
            check_snf(&a);
        }

        #[test]
        fn cokernel_invariant_under_unimodular_change(a in small_matrix(), k in -3i64..4, i in 0usize..4, j in 0usize..4) {
            let mut b = a.clone();
            let (r, c) = (a.rows(), a.cols());
            if r > 1 {
                let (i, i2) = (i % r, (i + 1) % r);
                b.add_row_multiple(i, i2, &BigInt::from(k));
            }
            if c > 1 {
                let (j, j2) = (j % c, (j + 1) % c);
                b.swap_cols(j, j2);
            }
            prop_assert_eq!(cokernel(&a), cokernel(&b));
        }

        #[test]
        fn direct_sum_commutes_and_associates(x in proptest::collection::vec(0i64..13, 0..4),
                                              y in proptest::collection::vec(0i64..13, 0..4),
                                              z in proptest::collection::vec(0i64..13, 0..4)) {
            let g = |v: &Vec<i64>| FgAbelianGroup::from_cyclic_orders(&big(v));
            let (a, b, c) = (g(&x), g(&y), g(&z));
            prop_assert_eq!(a.direct_sum(&b), b.direct_sum(&a));
            prop_assert_eq!(a.direct_sum(&b).direct_sum(&c), a.direct_sum(&b.direct_sum(&c)));
        }
    }
}
