use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::field::{Field, Scalar};
use super::poly::Poly;
use super::ring::{same_ring, Bideg, PolyRing};
use crate::error::{Error, Result};

/// A sparse matrix over a polynomial ring, read as a map from the free module
/// on the columns to the free module on the rows. Entry `(i, j)` has bidegree
/// `col_degrees[j] - row_degrees[i] + shift`.
#[derive(Clone, PartialEq)]
pub struct PolyMatrix {
    ring: Arc<PolyRing>,
    rows: Vec<Bideg>,
    cols: Vec<Bideg>,
    shift: Bideg,
    entries: BTreeMap<(usize, usize), Poly>,
}

impl PolyMatrix {
    pub fn zero(ring: &Arc<PolyRing>, rows: Vec<Bideg>, cols: Vec<Bideg>, shift: Bideg) -> PolyMatrix {
        PolyMatrix { ring: ring.clone(), rows, cols, shift, entries: BTreeMap::new() }
    }

    pub fn identity(ring: &Arc<PolyRing>, degrees: Vec<Bideg>) -> PolyMatrix {
        let mut m = PolyMatrix::zero(ring, degrees.clone(), degrees, Bideg::ZERO);
        for i in 0..m.rows.len() {
            m.entries.insert((i, i), Poly::one(ring));
        }
        m
    }

    /// Builds from dense rows and checks homogeneity.
    pub fn from_rows(
        ring: &Arc<PolyRing>,
        rows: Vec<Bideg>,
        cols: Vec<Bideg>,
        shift: Bideg,
        data: Vec<Vec<Poly>>,
    ) -> Result<PolyMatrix> {
        if data.len() != rows.len() || data.iter().any(|r| r.len() != cols.len()) {
            return Err(Error::Invalid("matrix shape does not match its degree lists".into()));
        }
        let mut m = PolyMatrix::zero(ring, rows, cols, shift);
        for (i, row) in data.into_iter().enumerate() {
            for (j, p) in row.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m.check_homogeneous()?;
        Ok(m)
    }

    /// Builds from dense rows, inferring column degrees from the first
    /// nonzero entry of each column. Zero columns get degree `rows[0]`
    /// (or zero).
    pub fn from_rows_infer(ring: &Arc<PolyRing>, rows: Vec<Bideg>, data: Vec<Vec<Poly>>) -> Result<PolyMatrix> {
        let ncols = data.first().map_or(0, |r| r.len());
        if data.len() != rows.len() || data.iter().any(|r| r.len() != ncols) {
            return Err(Error::Invalid("ragged matrix".into()));
        }
        let mut cols = Vec::with_capacity(ncols);
        for j in 0..ncols {
            let mut deg = rows.first().copied().unwrap_or_default();
            for (i, row) in data.iter().enumerate() {
                if row[j].is_zero() {
                    continue;
                }
                let b = row[j].bideg().ok_or_else(|| Error::Inhomogeneous {
                    what: "matrix entry".into(),
                    detail: format!("{} at ({}, {})", row[j], i + 1, j + 1),
                })?;
                deg = b + rows[i];
                break;
            }
            cols.push(deg);
        }
        PolyMatrix::from_rows(ring, rows, cols, Bideg::ZERO, data)
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_degrees(&self) -> &[Bideg] {
        &self.rows
    }

    pub fn col_degrees(&self) -> &[Bideg] {
        &self.cols
    }

    pub fn shift(&self) -> Bideg {
        self.shift
    }

    /// Expected bidegree of entry `(i, j)`.
    pub fn entry_bideg(&self, i: usize, j: usize) -> Bideg {
        self.cols[j] - self.rows[i] + self.shift
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&Poly> {
        self.entries.get(&(i, j))
    }

    pub fn entry(&self, i: usize, j: usize) -> Poly {
        self.entries.get(&(i, j)).cloned().unwrap_or_else(|| Poly::zero(&self.ring))
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        assert!(i < self.rows.len() && j < self.cols.len(), "index out of range");
        debug_assert!(same_ring(&self.ring, p.ring()));
        if p.is_zero() {
            self.entries.remove(&(i, j));
        } else {
            self.entries.insert((i, j), p);
        }
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Poly)> {
        self.entries.iter().map(|(k, v)| (*k, v))
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn with_degrees(mut self, rows: Vec<Bideg>, cols: Vec<Bideg>, shift: Bideg) -> PolyMatrix {
        assert_eq!(rows.len(), self.rows.len());
        assert_eq!(cols.len(), self.cols.len());
        self.rows = rows;
        self.cols = cols;
        self.shift = shift;
        self
    }

    pub fn check_homogeneous(&self) -> Result<()> {
        for (&(i, j), p) in &self.entries {
            let want = self.entry_bideg(i, j);
            if p.bideg() != Some(want) {
                return Err(Error::Inhomogeneous {
                    what: "matrix entry".into(),
                    detail: format!("{p} at ({}, {}) should have bidegree {want}", i + 1, j + 1),
                });
            }
        }
        Ok(())
    }

    /// Column `j` as a dense vector.
    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.nrows()).map(|i| self.entry(i, j)).collect()
    }

    /// Nonzero entries of column `j`.
    pub fn column_entries(&self, j: usize) -> Vec<(usize, Poly)> {
        self.entries.iter().filter(|((_, c), _)| *c == j).map(|((r, _), p)| (*r, p.clone())).collect()
    }

    pub fn columns_sparse(&self) -> Vec<Vec<(usize, Poly)>> {
        let mut out = vec![Vec::new(); self.ncols()];
        for (&(i, j), p) in &self.entries {
            out[j].push((i, p.clone()));
        }
        out
    }

    pub fn rows_sparse(&self) -> Vec<Vec<(usize, Poly)>> {
        let mut out = vec![Vec::new(); self.nrows()];
        for (&(i, j), p) in &self.entries {
            out[i].push((j, p.clone()));
        }
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<Poly>> {
        (0..self.nrows()).map(|i| (0..self.ncols()).map(|j| self.entry(i, j)).collect()).collect()
    }

    pub fn checked_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.ncols() != other.nrows() {
            return Err(Error::Invalid(format!(
                "cannot compose {}x{} with {}x{}",
                self.nrows(),
                self.ncols(),
                other.nrows(),
                other.ncols()
            )));
        }
        if self.cols != other.rows {
            return Err(Error::Invalid("composed matrices have incompatible degree labels".into()));
        }
        let mut out = PolyMatrix::zero(&self.ring, self.rows.clone(), other.cols.clone(), self.shift + other.shift);
        let rows_b = other.rows_sparse();
        let mut acc: BTreeMap<(usize, usize), Poly> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for (j, b) in &rows_b[k] {
                let t = a * b;
                match acc.get_mut(&(i, *j)) {
                    Some(v) => *v = &*v + &t,
                    None => {
                        acc.insert((i, *j), t);
                    }
                }
            }
        }
        out.entries = acc.into_iter().filter(|(_, p)| !p.is_zero()).collect();
        Ok(out)
    }

    pub fn checked_add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.combine(other, false)
    }

    pub fn checked_sub(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        self.combine(other, true)
    }

    fn combine(&self, other: &PolyMatrix, negate: bool) -> Result<PolyMatrix> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.nrows() != other.nrows() || self.ncols() != other.ncols() {
            return Err(Error::Invalid("matrix shapes differ".into()));
        }
        let mut out = self.clone();
        for (&(i, j), p) in &other.entries {
            let cur = out.entry(i, j);
            out.set(i, j, if negate { &cur - p } else { &cur + p });
        }
        Ok(out)
    }

    /// Multiplies every entry by `p`, adding its bidegree to the shift.
    pub fn scale(&self, p: &Poly) -> PolyMatrix {
        let mut out = PolyMatrix::zero(&self.ring, self.rows.clone(), self.cols.clone(), self.shift);
        if let Some(b) = p.bideg() {
            out.shift = self.shift + b;
        }
        for (&(i, j), e) in &self.entries {
            out.set(i, j, e * p);
        }
        out
    }

    pub fn neg(&self) -> PolyMatrix {
        let mut out = self.clone();
        for v in out.entries.values_mut() {
            *v = -&*v;
        }
        out
    }

    /// The dual map: transposed entries, with row and column degrees negated
    /// and swapped. Entry bidegrees are unchanged.
    pub fn transpose(&self) -> PolyMatrix {
        let rows = self.cols.iter().map(|&b| -b).collect();
        let cols = self.rows.iter().map(|&b| -b).collect();
        let entries = self.entries.iter().map(|(&(i, j), p)| ((j, i), p.clone())).collect();
        PolyMatrix { ring: self.ring.clone(), rows, cols, shift: self.shift, entries }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let rdeg = rows.iter().map(|&i| self.rows[i]).collect();
        let cdeg = cols.iter().map(|&j| self.cols[j]).collect();
        let mut out = PolyMatrix::zero(&self.ring, rdeg, cdeg, self.shift);
        let cpos: BTreeMap<usize, usize> = cols.iter().enumerate().map(|(k, &j)| (j, k)).collect();
        for (a, &i) in rows.iter().enumerate() {
            for (&(_, j), p) in self.entries.range((i, 0)..(i + 1, 0)) {
                if let Some(&b) = cpos.get(&j) {
                    out.entries.insert((a, b), p.clone());
                }
            }
        }
        out
    }

    /// Columns of `self` followed by columns of `other` (same rows).
    pub fn hconcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.nrows() != other.nrows() {
            return Err(Error::Invalid("row counts differ".into()));
        }
        let mut cols = self.cols.clone();
        let off = cols.len();
        cols.extend(other.cols.iter().map(|&b| b + other.shift - self.shift));
        let mut out = PolyMatrix::zero(&self.ring, self.rows.clone(), cols, self.shift);
        out.entries = self.entries.clone();
        for (&(i, j), p) in &other.entries {
            out.entries.insert((i, j + off), p.clone());
        }
        Ok(out)
    }

    pub fn block_diag(&self, other: &PolyMatrix) -> PolyMatrix {
        let mut rows = self.rows.clone();
        let mut cols = self.cols.clone();
        let (ro, co) = (rows.len(), cols.len());
        rows.extend(&other.rows);
        cols.extend(other.cols.iter().map(|&b| b + other.shift - self.shift));
        let mut out = PolyMatrix::zero(&self.ring, rows, cols, self.shift);
        out.entries = self.entries.clone();
        for (&(i, j), p) in &other.entries {
            out.entries.insert((i + ro, j + co), p.clone());
        }
        out
    }

    /// Keeps only constant terms (reduction modulo the irrelevant ideal).
    pub fn constant_part(&self) -> PolyMatrix {
        let mut out = PolyMatrix::zero(&self.ring, self.rows.clone(), self.cols.clone(), self.shift);
        for (&(i, j), p) in &self.entries {
            out.set(i, j, Poly::constant(&self.ring, p.constant_term()));
        }
        out
    }

    /// Whether every entry lies in the irrelevant ideal.
    pub fn is_minimal(&self) -> bool {
        self.entries.values().all(|p| p.constant_term().is_zero())
    }

    pub fn eval(&self, point: &[Scalar]) -> Result<ScalarMatrix> {
        let n = self.ring.nvars();
        if point.len() != n {
            return Err(Error::Arity { expected: n, found: point.len() });
        }
        let mut m = ScalarMatrix::zero(self.ring.field(), self.nrows(), self.ncols());
        for (&(i, j), p) in &self.entries {
            m.set(i, j, p.eval(point)?);
        }
        Ok(m)
    }

    /// Rank over the fraction field of the ring, by fraction-free elimination.
    pub fn generic_rank(&self) -> usize {
        let mut a = self.to_dense();
        let (n, m) = (self.nrows(), self.ncols());
        let mut prev = Poly::one(&self.ring);
        let mut rank = 0;
        for k in 0..n.min(m) {
            // choose the shortest nonzero pivot in the trailing block
            let mut best: Option<(usize, usize, usize)> = None;
            for (i, row) in a.iter().enumerate().skip(k) {
                for (j, p) in row.iter().enumerate().skip(k) {
                    if !p.is_zero() && best.is_none_or(|b| p.len() < b.2) {
                        best = Some((i, j, p.len()));
                    }
                }
            }
            let Some((pi, pj, _)) = best else { break };
            a.swap(k, pi);
            for row in a.iter_mut() {
                row.swap(k, pj);
            }
            let piv = a[k][k].clone();
            for i in k + 1..n {
                for j in k + 1..m {
                    let num = &(&piv * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
                }
                a[i][k] = Poly::zero(&self.ring);
            }
            prev = piv;
            rank += 1;
        }
        rank
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.nrows() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.ncols() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A dense matrix over a field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix {
    field: Field,
    nrows: usize,
    ncols: usize,
    data: Vec<Scalar>,
}

impl ScalarMatrix {
    pub fn zero(field: Field, nrows: usize, ncols: usize) -> ScalarMatrix {
        ScalarMatrix { field, nrows, ncols, data: vec![field.zero(); nrows * ncols] }
    }

    pub fn from_rows(field: Field, rows: Vec<Vec<Scalar>>) -> ScalarMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged matrix");
        ScalarMatrix { field, nrows, ncols, data: rows.into_iter().flatten().collect() }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.ncols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.ncols + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        self.data.chunks(self.ncols.max(1)).take(self.nrows).map(|r| r.to_vec()).collect()
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.rows();
        let mut rank = 0;
        for col in 0..self.ncols {
            let Some(p) = (rank..self.nrows).find(|&i| !a[i][col].is_zero()) else { continue };
            a.swap(rank, p);
            let inv = a[rank][col].inv().expect("nonzero pivot");
            for i in rank + 1..self.nrows {
                if a[i][col].is_zero() {
                    continue;
                }
                let factor = &a[i][col] * &inv;
                for j in col..self.ncols {
                    let t = &factor * &a[rank][j];
                    a[i][j] = &a[i][j] - &t;
                }
            }
            rank += 1;
            if rank == self.nrows {
                break;
            }
        }
        rank
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s2() -> Arc<PolyRing> {
        PolyRing::operators(Field::Prime(101), &[1, 1])
    }

    fn row_matrix(s: &Arc<PolyRing>) -> PolyMatrix {
        let p = |t: &str| Poly::parse(s, t).unwrap();
        PolyMatrix::from_rows_infer(s, vec![Bideg::ZERO], vec![vec![p("chi1"), p("chi2")]]).unwrap()
    }

    #[test]
    fn evaluation_and_rank() {
        let s = s2();
        let m = row_matrix(&s);
        let k = s.field();
        let e = m.eval(&[k.one(), k.zero()]).unwrap();
        assert_eq!(e, ScalarMatrix::from_rows(k, vec![vec![k.one(), k.zero()]]));
        assert_eq!(e.rank(), 1);
        assert_eq!(m.eval(&[k.zero(), k.zero()]).unwrap().rank(), 0);
        assert!(m.eval(&[k.zero()]).is_err());
        assert_eq!(m.generic_rank(), 1);
    }

    #[test]
    fn inferred_degrees_and_transpose() {
        let s = s2();
        let m = row_matrix(&s);
        assert_eq!(m.col_degrees(), [Bideg::new(2, 1), Bideg::new(2, 1)]);
        let t = m.transpose();
        t.check_homogeneous().unwrap();
        assert_eq!(t.transpose(), m);
    }

    #[test]
    fn rejects_inhomogeneous_entries() {
        let r = PolyRing::base(Field::Prime(101), vec!["x".into()], vec![1]).unwrap();
        let p = Poly::parse(&r, "x + 1").unwrap();
        assert!(matches!(
            PolyMatrix::from_rows_infer(&r, vec![Bideg::ZERO], vec![vec![p]]),
            Err(Error::Inhomogeneous { .. })
        ));
    }

    #[test]
    fn generic_rank_of_singular_matrix() {
        let s = s2();
        let p = |t: &str| Poly::parse(&s, t).unwrap();
        let rows = vec![Bideg::ZERO, Bideg::new(-2, -1)];
        let m = PolyMatrix::from_rows_infer(
            &s,
            rows,
            vec![vec![p("chi1"), p("chi2")], vec![p("chi1^2"), p("chi1*chi2")]],
        )
        .unwrap();
        assert_eq!(m.generic_rank(), 1);
    }
}
