//! Systems of higher homotopies for the ci generators on a finite free
//! A-complex, strict dg structures, and their duals along `Hom_A(-, A)`.
//!
//! A system assigns to each multi-index `J ∈ ℕ^c`, `|J| ≥ 1`, a map `σ_J`
//! raising the homological position by `2|J| − 1`, such that with `σ_0 = d`
//!
//! ```text
//! Σ_{J' + J'' = J} σ_{J'} σ_{J''} = f_i · id   if J = e_i,
//!                                 = 0          if |J| ≥ 2.
//! ```

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Bideg, Poly, PolyMatrix};
use crate::error::{Error, Result};
use crate::groebner::LinearSystem;
use crate::resolution::{dualize_over_a, DgComplex, FreeResolution, RingData};

pub type MultiIndex = Vec<u32>;

/// All multi-indices in `ℕ^c` of the given weight, in lexicographically
/// decreasing order.
pub fn multi_indices(c: usize, weight: u32) -> Vec<MultiIndex> {
    fn rec(c: usize, weight: u32, prefix: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == c {
            prefix.push(weight);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=weight).rev() {
            prefix.push(k);
            rec(c, weight - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if c > 0 {
        rec(c, weight, &mut Vec::new(), &mut out);
    }
    out
}

fn weight(j: &[u32]) -> u32 {
    j.iter().sum()
}

fn unit_index(j: &[u32]) -> Option<usize> {
    (weight(j) == 1).then(|| j.iter().position(|&k| k == 1).expect("weight one"))
}

/// Ordered splittings `J = J' + J''` with both parts nonzero.
fn splittings(j: &[u32]) -> Vec<(MultiIndex, MultiIndex)> {
    let mut out = Vec::new();
    let total = weight(j);
    let mut cur = vec![0u32; j.len()];
    loop {
        let w = weight(&cur);
        if w > 0 && w < total {
            let rest = j.iter().zip(&cur).map(|(a, b)| a - b).collect();
            out.push((cur.clone(), rest));
        }
        let mut k = 0;
        while k < j.len() && cur[k] == j[k] {
            cur[k] = 0;
            k += 1;
        }
        if k == j.len() {
            break;
        }
        cur[k] += 1;
    }
    out
}

fn format_index(j: &[u32]) -> String {
    let parts: Vec<String> = j.iter().map(|k| k.to_string()).collect();
    format!("({})", parts.join(","))
}

/// A system of higher homotopies on a finite free complex.
#[derive(Clone)]
pub struct HomotopySystem {
    complex: FreeResolution,
    ci: Vec<Poly>,
    /// `sigma[J][p]` maps position `p` to position `p + 2|J| − 1`.
    sigma: BTreeMap<MultiIndex, Vec<PolyMatrix>>,
    strict: bool,
}

impl fmt::Debug for HomotopySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomotopySystem")
            .field("complex", &self.complex)
            .field("indices", &self.sigma.keys().collect::<Vec<_>>())
            .field("strict", &self.strict)
            .finish()
    }
}

impl HomotopySystem {
    pub fn complex(&self) -> &FreeResolution {
        &self.complex
    }

    pub fn ci(&self) -> &[Poly] {
        &self.ci
    }

    pub fn c(&self) -> usize {
        self.ci.len()
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    /// Multi-indices carrying a (possibly zero) map, by increasing weight.
    pub fn indices(&self) -> Vec<&MultiIndex> {
        let mut keys: Vec<&MultiIndex> = self.sigma.keys().collect();
        keys.sort_by_key(|j| (weight(j), std::cmp::Reverse((*j).clone())));
        keys
    }

    /// The component of `σ_J` with source position `p`, if nonzero.
    pub fn block(&self, j: &[u32], p: usize) -> Option<&PolyMatrix> {
        self.sigma.get(j)?.get(p).filter(|m| !m.is_zero())
    }

    /// All components of `σ_J` by source position.
    pub fn blocks(&self, j: &[u32]) -> &[PolyMatrix] {
        self.sigma.get(j).map_or(&[], |v| v.as_slice())
    }

    fn internal_degree(&self, j: &[u32]) -> i64 {
        j.iter().zip(&self.ci).map(|(&k, f)| k as i64 * f.bideg().expect("homogeneous").int).sum()
    }

    fn zero_block(&self, from: usize, to: usize, delta: i64) -> PolyMatrix {
        PolyMatrix::zero(
            self.complex.ring(),
            self.complex.degrees(to).to_vec(),
            self.complex.degrees(from).to_vec(),
            Bideg::new(0, delta),
        )
    }

    /// Left-hand side minus right-hand side of the relation for `J` on
    /// position `p`, excluding the term `d σ_{J,p}`. The result maps
    /// position `p` to `p + 2|J| − 2`.
    fn defect_without_top(&self, j: &[u32], p: usize) -> Result<PolyMatrix> {
        let q = 2 * weight(j) as usize - 1;
        let delta = self.internal_degree(j);
        let mut acc = self.zero_block(p, p + q - 1, delta);
        if let Some(i) = unit_index(j) {
            acc = PolyMatrix::identity(self.complex.ring(), self.complex.degrees(p).to_vec()).scale(&self.ci[i]).neg();
        }
        if p >= 1 {
            if let Some(s) = self.block(j, p - 1) {
                acc = acc.checked_add(&s.checked_mul(self.complex.map(p))?)?;
            }
        }
        for (a, b) in splittings(j) {
            let qb = 2 * weight(&b) as usize - 1;
            if let (Some(sb), Some(sa)) = (self.block(&b, p), self.block(&a, p + qb)) {
                acc = acc.checked_add(&sa.checked_mul(sb)?)?;
            }
        }
        Ok(acc)
    }

    /// Checks every system relation exactly.
    pub fn verify(&self) -> Result<()> {
        let len = self.complex.length();
        for w in 1..=(len as u32 + 2) / 2 {
            let q = 2 * w as usize - 1;
            for j in multi_indices(self.c(), w) {
                for p in 0..=(len + 1).saturating_sub(q) {
                    if p + q - 1 > len {
                        continue;
                    }
                    let mut e = self.defect_without_top(&j, p)?;
                    if p + q <= len {
                        if let Some(s) = self.block(&j, p) {
                            e = e.checked_add(&self.complex.map(p + q).checked_mul(s)?)?;
                        }
                    }
                    let first = e.entries().next().map(|(ab, _)| ab);
                    if let Some((a, b)) = first {
                        return Err(self.relation_error(&j, p, a, b));
                    }
                }
            }
        }
        Ok(())
    }

    fn relation_error(&self, j: &[u32], p: usize, a: usize, b: usize) -> Error {
        let at = format!("on F_{} at entry ({}, {})", self.complex.start() + p as i64, a + 1, b + 1);
        if !self.strict {
            return Error::Internal(format!("homotopy relation for J = {} fails {at}", format_index(j)));
        }
        let idx: Vec<usize> = j.iter().enumerate().flat_map(|(i, &k)| std::iter::repeat_n(i + 1, k as usize)).collect();
        let what = match idx.as_slice() {
            [i] => format!("d e{i} + e{i} d ≠ f{i}"),
            [i, k] if i == k => format!("e{i} e{i} ≠ 0 (pair ({i}, {i}))"),
            [i, k] => format!("e{i} e{k} + e{k} e{i} ≠ 0 (pair ({i}, {k}))"),
            _ => format!("relation for J = {}", format_index(j)),
        };
        Error::InvalidDg(format!("{what} {at}"))
    }
}

/// Builds a system of higher homotopies on a finite A-free resolution by
/// lifting through the complex level by level.
pub fn compute_higher_homotopies(f: &FreeResolution, ring: &RingData) -> Result<HomotopySystem> {
    if !f.quotient().is_empty() {
        return Err(Error::Invalid("homotopies are built on a complex over A".into()));
    }
    if !ring.is_regular_sequence() {
        return Err(Error::NotRegular);
    }
    f.check_annihilated(ring.ci())?;
    let len = f.length();
    let mut sys = HomotopySystem { complex: f.clone(), ci: ring.ci().to_vec(), sigma: BTreeMap::new(), strict: false };
    let systems: Vec<LinearSystem> = (1..=len).map(|k| LinearSystem::new(f.map(k), &[])).collect::<Result<_>>()?;
    for w in 1..=(len as u32).div_ceil(2) {
        let q = 2 * w as usize - 1;
        for j in multi_indices(ring.c(), w) {
            let mut blocks = Vec::new();
            for p in 0..=len - q {
                let rhs = sys.defect_without_top(&j, p)?.neg();
                let s = systems[p + q - 1].solve_matrix(&rhs).ok_or_else(|| {
                    Error::Internal(format!("no lift for σ_{} on F_{p}", format_index(&j)))
                })?;
                blocks.push(s);
                sys.sigma.insert(j.clone(), blocks.clone());
            }
            sys.sigma.insert(j, blocks);
        }
    }
    sys.verify()?;
    Ok(sys)
}

/// Validates a strict dg structure (`e_i² = 0`, `e_i e_j = −e_j e_i`,
/// `d e_i + e_i d = f_i`) and returns it as a system with `σ_J = 0` for
/// `|J| ≥ 2`.
pub fn ingest_dg_structure(dg: &DgComplex, ring: &RingData) -> Result<HomotopySystem> {
    let Some(d1) = dg.differentials.first() else {
        return Err(Error::InvalidDg("the complex needs at least one differential".into()));
    };
    let f = FreeResolution::from_maps(ring.ring(), 0, d1.row_degrees().to_vec(), dg.differentials.clone(), Vec::new(), None)
        .map_err(|e| Error::InvalidDg(e.to_string()))?;
    f.check_complex().map_err(|e| Error::InvalidDg(e.to_string()))?;
    let len = f.length();
    if dg.actions.len() != ring.c() {
        return Err(Error::InvalidDg(format!("expected {} actions, found {}", ring.c(), dg.actions.len())));
    }
    let degrees = ring.ci_degrees();
    let mut sigma = BTreeMap::new();
    for (i, action) in dg.actions.iter().enumerate() {
        if action.len() != len {
            return Err(Error::InvalidDg(format!("e{} needs {len} matrices, found {}", i + 1, action.len())));
        }
        let mut blocks = Vec::with_capacity(len);
        for (p, m) in action.iter().enumerate() {
            let (rows, cols) = (f.degrees(p + 1), f.degrees(p));
            if m.nrows() != rows.len() || m.ncols() != cols.len() {
                return Err(Error::InvalidDg(format!(
                    "e{} on F_{p} must be {}x{}, found {}x{}",
                    i + 1,
                    rows.len(),
                    cols.len(),
                    m.nrows(),
                    m.ncols()
                )));
            }
            let m = m.clone().with_degrees(rows.to_vec(), cols.to_vec(), Bideg::new(0, degrees[i]));
            m.check_homogeneous().map_err(|e| Error::InvalidDg(format!("e{} on F_{p}: {e}", i + 1)))?;
            blocks.push(m);
        }
        let mut j = vec![0; ring.c()];
        j[i] = 1;
        sigma.insert(j, blocks);
    }
    let sys = HomotopySystem { complex: f, ci: ring.ci().to_vec(), sigma, strict: true };
    sys.verify()?;
    Ok(sys)
}

/// The system on `Hom_A(F, A)` (shifted by c) obtained by transposing every
/// `σ_J` without signs. Since the relations are symmetric in `J'` and
/// `J''`, transposition preserves them, and applying it twice returns the
/// original matrices.
pub fn dualize_homotopies(sys: &HomotopySystem, ring: &RingData) -> Result<HomotopySystem> {
    let g = dualize_over_a(&sys.complex, ring)?;
    let len = g.length();
    let mut sigma = BTreeMap::new();
    for (j, blocks) in &sys.sigma {
        let q = 2 * weight(j) as usize - 1;
        let delta = sys.internal_degree(j);
        let mut out = Vec::with_capacity(blocks.len());
        for p in 0..blocks.len() {
            let src = &blocks[len - q - p];
            out.push(src.transpose().with_degrees(g.degrees(p + q).to_vec(), g.degrees(p).to_vec(), Bideg::new(0, delta)));
        }
        sigma.insert(j.clone(), out);
    }
    let dual = HomotopySystem { complex: g, ci: sys.ci.clone(), sigma, strict: sys.strict };
    dual.verify().map_err(|e| Error::Internal(format!("dual system: {e}")))?;
    Ok(dual)
}
