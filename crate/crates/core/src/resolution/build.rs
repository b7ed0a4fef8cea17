use super::{fit_quasi_polynomial, FreeResolution, QuasiPoly, RingData};
use crate::arith::{Bideg, Poly, PolyMatrix};
use crate::error::{Error, Result};
use crate::groebner::{minimal_columns, Ideal, LinearSystem};

/// Reduces every entry modulo `ideal`.
fn reduce_entries(p: &PolyMatrix, ideal: &Ideal) -> PolyMatrix {
    if ideal.is_zero() {
        return p.clone();
    }
    let mut out = PolyMatrix::zero(p.ring(), p.row_degrees().to_vec(), p.col_degrees().to_vec(), p.shift());
    for ((i, j), e) in p.entries() {
        out.set(i, j, ideal.normal_form(e));
    }
    out
}

/// Splits off unit entries: for a unit `u` at `(i, j)`, generator `i` is
/// expressed through the others and relation `j` is consumed.
fn split_units(p: &PolyMatrix) -> PolyMatrix {
    let mut rows = p.row_degrees().to_vec();
    let mut cols = p.col_degrees().to_vec();
    let mut a = p.to_dense();
    while let Some((i, j)) = (0..rows.len())
        .flat_map(|i| (0..cols.len()).map(move |j| (i, j)))
        .find(|&(i, j)| a[i][j].is_unit())
    {
        let uinv = a[i][j].constant_term().inv().expect("unit");
        let pivot_row: Vec<Poly> = a[i].iter().map(|e| e.scale(&uinv)).collect();
        for r in 0..rows.len() {
            if r == i || a[r][j].is_zero() {
                continue;
            }
            let factor = a[r][j].clone();
            for c in 0..cols.len() {
                if !pivot_row[c].is_zero() {
                    a[r][c] = &a[r][c] - &(&factor * &pivot_row[c]);
                }
            }
        }
        a.remove(i);
        rows.remove(i);
        for row in a.iter_mut() {
            row.remove(j);
        }
        cols.remove(j);
    }
    let mut out = PolyMatrix::zero(p.ring(), rows, cols, p.shift());
    for (i, row) in a.into_iter().enumerate() {
        for (j, e) in row.into_iter().enumerate() {
            out.set(i, j, e);
        }
    }
    out
}

/// A minimal presentation of `coker p` over the ring modulo `quotient`:
/// unit entries are split off and the relations are cut down to a minimal
/// generating set.
pub fn minimal_presentation(p: &PolyMatrix, quotient: &[Poly]) -> Result<PolyMatrix> {
    p.check_homogeneous()?;
    let ideal = Ideal::new(p.ring(), quotient.to_vec());
    let q = reduce_entries(&split_units(&reduce_entries(p, &ideal)), &ideal);
    let cols: Vec<(Vec<Poly>, Bideg)> = (0..q.ncols()).map(|j| (q.column(j), q.col_degrees()[j])).collect();
    let kept = minimal_columns(q.ring(), q.row_degrees(), quotient, cols);
    let mut out = PolyMatrix::zero(q.ring(), q.row_degrees().to_vec(), kept.iter().map(|c| c.1).collect(), Bideg::ZERO);
    for (j, (col, _)) in kept.into_iter().enumerate() {
        for (i, e) in col.into_iter().enumerate() {
            out.set(i, j, e);
        }
    }
    Ok(out)
}

/// Minimal graded free resolution of `coker p` over the ring modulo
/// `quotient`, with at most `max_len` maps (unbounded when `None`; over a
/// polynomial ring the resolution is finite).
pub fn resolve(p: &PolyMatrix, quotient: &[Poly], max_len: Option<usize>) -> Result<FreeResolution> {
    let d1 = minimal_presentation(p, quotient)?;
    let f0 = d1.row_degrees().to_vec();
    let maps = if d1.ncols() > 0 { vec![d1] } else { Vec::new() };
    let mut res = FreeResolution::from_maps(p.ring(), 0, f0, maps, quotient.to_vec(), Some(1))?;
    res.extend(max_len)?;
    Ok(res)
}

/// Minimal B-free resolution of `coker p` through homological degree `n`,
/// after checking that every `f_i` annihilates the module.
pub fn resolve_over_b(p: &PolyMatrix, ring: &RingData, n: usize) -> Result<FreeResolution> {
    let over_a = LinearSystem::new(p, &[])?;
    for (i, f) in ring.ci().iter().enumerate() {
        for j in 0..p.nrows() {
            if !over_a.in_image(&[(j, f.clone())]) {
                return Err(Error::NotAnnihilated { index: i + 1 });
            }
        }
    }
    resolve(p, ring.ci(), Some(n))
}

/// Resolves over B to `n` and fits a quasi-polynomial to the Betti tail,
/// doubling the bound (up to `cap`) while the tail is not yet
/// quasi-polynomial.
pub fn betti_with_fit(p: &PolyMatrix, ring: &RingData, n: usize, cap: usize) -> Result<(FreeResolution, QuasiPoly)> {
    let window = 2 * (ring.c() + 2);
    let mut n = n.max(window);
    let mut res = resolve_over_b(p, ring, n)?;
    loop {
        let mut betti = res.betti();
        betti.betti.resize(betti.betti.len().max(n + 1), 0);
        match fit_quasi_polynomial(&betti, window) {
            Ok(q) => return Ok((res, q)),
            Err(Error::IncreaseN { .. }) if n < cap => {
                n = (2 * n).min(cap);
                res.extend(Some(n))?;
            }
            Err(e) => return Err(e),
        }
    }
}

impl FreeResolution {
    /// Continues a truncated resolution until the kernel vanishes or the
    /// complex has `max_len` maps.
    pub fn extend(&mut self, max_len: Option<usize>) -> Result<()> {
        if self.truncated_at.is_none() {
            return Ok(());
        }
        let ideal = Ideal::new(&self.ring, self.quotient.clone());
        self.truncated_at = None;
        while let Some(last) = self.maps.last() {
            if max_len.is_some_and(|n| self.maps.len() >= n) {
                self.truncated_at = max_len;
                break;
            }
            let k = LinearSystem::new(last, &self.quotient)?.kernel();
            if k.ncols() == 0 {
                break;
            }
            let k = reduce_entries(&k, &ideal);
            self.degrees.push(k.col_degrees().to_vec());
            self.maps.push(k);
        }
        Ok(())
    }
}
