//! Twisted complexes: finite free dg modules over the ring S of cohomology
//! operators, modelling `RHom_B(M, k)`.

use std::fmt;
use std::sync::Arc;

use crate::arith::{Bideg, Poly, PolyMatrix, PolyRing};
use crate::error::{Error, Result};
use crate::groebner::{hilbert_data, HilbertData, LinearSystem, TPoly};
use crate::homotopy::HomotopySystem;
use crate::resolution::{minimal_presentation, RingData};

/// Bidegree of the differential.
pub const DIFFERENTIAL: Bideg = Bideg { coh: 1, int: 0 };

/// A free S-module with basis bidegrees `basis` and a square differential
/// `D` of bidegree (1, 0): entry `(i, j)` has bidegree
/// `basis[j] − basis[i] + (1, 0)`.
#[derive(Clone, PartialEq)]
pub struct TwistedComplex {
    ring: Arc<PolyRing>,
    d: PolyMatrix,
}

impl fmt::Debug for TwistedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwistedComplex(rank {}, D = {})", self.rank(), self.d)
    }
}

impl TwistedComplex {
    /// Validates squareness, bihomogeneity and `D² = 0`.
    pub fn new(d: PolyMatrix) -> Result<TwistedComplex> {
        if d.row_degrees() != d.col_degrees() || d.shift() != DIFFERENTIAL {
            return Err(Error::Invalid("a twisted differential is square of bidegree (1, 0)".into()));
        }
        d.check_homogeneous()?;
        let x = TwistedComplex { ring: d.ring().clone(), d };
        x.check_square_zero()?;
        Ok(x)
    }

    /// The complex with zero differential on the given basis.
    pub fn zero(ring: &Arc<PolyRing>, basis: Vec<Bideg>) -> TwistedComplex {
        TwistedComplex { ring: ring.clone(), d: PolyMatrix::zero(ring, basis.clone(), basis, DIFFERENTIAL) }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.d.nrows()
    }

    pub fn basis(&self) -> &[Bideg] {
        self.d.row_degrees()
    }

    pub fn differential(&self) -> &PolyMatrix {
        &self.d
    }

    fn check_square_zero(&self) -> Result<()> {
        let dd = self.d.checked_mul(&self.d)?;
        let first = dd.entries().next().map(|(ij, p)| (ij, p.to_string()));
        match first {
            Some(((i, j), p)) => Err(Error::Internal(format!("D² has entry {p} at ({}, {})", i + 1, j + 1))),
            None => Ok(()),
        }
    }

    /// Whether every entry of `D` lies in the ideal of the variables.
    pub fn is_minimal(&self) -> bool {
        self.d.is_minimal()
    }

    /// Removes contractible pairs: for a unit entry `u` at `(i, j)` the basis
    /// elements `i` and `j` are dropped and `D' = D − D[:, j] u⁻¹ D[i, :]`.
    pub fn minimalize(&self) -> TwistedComplex {
        let mut basis = self.basis().to_vec();
        let mut a = self.d.to_dense();
        while let Some((i, j)) = (0..basis.len())
            .flat_map(|i| (0..basis.len()).map(move |j| (i, j)))
            .find(|&(i, j)| a[i][j].is_unit())
        {
            let uinv = a[i][j].constant_term().inv().expect("unit");
            let pivot_row: Vec<Poly> = a[i].iter().map(|e| e.scale(&uinv)).collect();
            for r in 0..basis.len() {
                if a[r][j].is_zero() {
                    continue;
                }
                let factor = a[r][j].clone();
                for c in 0..basis.len() {
                    if !pivot_row[c].is_zero() {
                        a[r][c] = &a[r][c] - &(&factor * &pivot_row[c]);
                    }
                }
            }
            let keep: Vec<usize> = (0..basis.len()).filter(|&k| k != i && k != j).collect();
            a = keep.iter().map(|&r| keep.iter().map(|&c| a[r][c].clone()).collect()).collect();
            basis = keep.iter().map(|&k| basis[k]).collect();
        }
        let mut d = PolyMatrix::zero(&self.ring, basis.clone(), basis, DIFFERENTIAL);
        for (i, row) in a.into_iter().enumerate() {
            for (j, e) in row.into_iter().enumerate() {
                d.set(i, j, e);
            }
        }
        TwistedComplex { ring: self.ring.clone(), d }
    }

    /// Rank of a minimal model.
    pub fn tbetti(&self) -> usize {
        self.minimalize().rank()
    }

    /// A presentation of the cohomology `H(X)` over S: generators are
    /// minimal cycles, relations are boundaries written in the cycles
    /// together with the syzygies among the cycles.
    pub fn homology_presentation(&self) -> Result<PolyMatrix> {
        let z = LinearSystem::new(&self.d, &[])?.kernel();
        if z.ncols() == 0 {
            return Ok(PolyMatrix::zero(&self.ring, vec![], vec![], Bideg::ZERO));
        }
        let zsys = LinearSystem::new(&z, &[])?;
        let r = zsys
            .solve_matrix(&self.d)
            .ok_or_else(|| Error::Internal("a boundary is not a combination of cycles".into()))?;
        let rel = r.with_degrees(z.col_degrees().to_vec(), self.basis().iter().map(|&b| b + DIFFERENTIAL).collect(), Bideg::ZERO);
        let pres = rel.hconcat(&zsys.kernel())?;
        minimal_presentation(&pres, &[])
    }

    /// The S-dual: transposed differential on the negated basis.
    pub fn s_dual(&self) -> TwistedComplex {
        TwistedComplex { ring: self.ring.clone(), d: self.d.transpose() }
    }

    pub fn direct_sum(&self, other: &TwistedComplex) -> TwistedComplex {
        TwistedComplex { ring: self.ring.clone(), d: self.d.block_diag(&other.d) }
    }

    /// Translates every basis element by `s` in cohomological degree.
    pub fn shift(&self, s: i64) -> TwistedComplex {
        let basis: Vec<Bideg> = self.basis().iter().map(|&b| b + Bideg::new(s, 0)).collect();
        TwistedComplex { ring: self.ring.clone(), d: self.d.clone().with_degrees(basis.clone(), basis, DIFFERENTIAL) }
    }

    /// `Kos(η) ⊗ X`: differential `[[D, η], [0, −D]]`.
    pub fn koszul_object(&self, eta: &Poly) -> Result<TwistedComplex> {
        let deg = if eta.is_zero() {
            Bideg::ZERO
        } else {
            eta.bideg().ok_or_else(|| Error::Inhomogeneous { what: "Koszul element".into(), detail: eta.to_string() })?
        };
        if deg.coh.rem_euclid(2) != 0 {
            return Err(Error::Invalid(format!("{eta} has odd cohomological degree")));
        }
        let r = self.rank();
        let mut basis = self.basis().to_vec();
        basis.extend(self.basis().iter().map(|&b| b + deg - DIFFERENTIAL));
        let mut d = PolyMatrix::zero(&self.ring, basis.clone(), basis, DIFFERENTIAL);
        for ((i, j), e) in self.d.entries() {
            d.set(i, j, e.clone());
            d.set(r + i, r + j, -e);
        }
        for i in 0..r {
            d.set(i, r + i, eta.clone());
        }
        Ok(TwistedComplex { ring: self.ring.clone(), d })
    }

    pub fn koszul_object_seq(&self, etas: &[Poly]) -> Result<TwistedComplex> {
        etas.iter().try_fold(self.clone(), |x, eta| x.koszul_object(eta))
    }

    /// Splits X into the direct summands given by the connected components
    /// of the graph of nonzero entries of `D`; basis elements without
    /// entries are collected into one summand with zero differential.
    pub fn summands(&self) -> Vec<TwistedComplex> {
        let r = self.rank();
        let mut parent: Vec<usize> = (0..r).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        let mut touched = vec![false; r];
        for ((i, j), _) in self.d.entries() {
            touched[i] = true;
            touched[j] = true;
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut isolated = Vec::new();
        for k in 0..r {
            if !touched[k] {
                isolated.push(k);
                continue;
            }
            let root = find(&mut parent, k);
            match groups.iter_mut().find(|g| g.0 == root) {
                Some(g) => g.1.push(k),
                None => groups.push((root, vec![k])),
            }
        }
        let mut out: Vec<TwistedComplex> = groups
            .into_iter()
            .map(|(_, idx)| TwistedComplex { ring: self.ring.clone(), d: self.d.submatrix(&idx, &idx) })
            .collect();
        if !isolated.is_empty() {
            out.push(TwistedComplex::zero(&self.ring, isolated.iter().map(|&k| self.basis()[k]).collect()));
        }
        out
    }

    /// Hilbert data of `H(X)` and of its even and odd parts, with each χ
    /// regraded to degree 1 and a generator of cohomological degree `h`
    /// placed in degree `⌊h/2⌋`. Computed summand by summand.
    pub fn cohomology_hilbert(&self) -> Result<CohomologyHilbert> {
        let mut parts = [TPoly::zero(), TPoly::zero(), TPoly::zero()];
        for x in self.summands() {
            let pres = x.homology_presentation()?;
            let regrade = |b: Bideg| b.coh.div_euclid(2);
            parts[0].add(&hilbert_data(&pres, &[], regrade)?.numerator);
            for odd in [false, true] {
                let parity = |b: &Bideg| b.coh.rem_euclid(2) == odd as i64;
                let rows: Vec<usize> = (0..pres.nrows()).filter(|&i| parity(&pres.row_degrees()[i])).collect();
                let cols: Vec<usize> = (0..pres.ncols()).filter(|&j| parity(&pres.col_degrees()[j])).collect();
                parts[1 + odd as usize].add(&hilbert_data(&pres.submatrix(&rows, &cols), &[], regrade)?.numerator);
            }
        }
        let n = self.ring.nvars();
        let [total, even, odd] = parts.map(|p| HilbertData::from_numerator(p, n));
        Ok(CohomologyHilbert { total, even, odd })
    }

    pub fn homology_hilbert(&self) -> Result<HilbertData> {
        Ok(self.cohomology_hilbert()?.total)
    }
}

/// Hilbert data of the cohomology of a twisted complex and of its even and
/// odd parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyHilbert {
    pub total: HilbertData,
    pub even: HilbertData,
    pub odd: HilbertData,
}

/// The twisted complex `Hom_A(F, k) ⊗ S` of a homotopy system: the basis
/// is dual to the generators of F (cohomological degree = homological
/// index, internal degree = generator degree) and
/// `D = Σ_J transpose(σ_J mod m) χ^J` with `σ_∅ = d`.
pub fn build_twisted_complex(sys: &HomotopySystem, ring: &RingData) -> Result<TwistedComplex> {
    let s = ring.operators().clone();
    let f = sys.complex();
    let mut offsets = Vec::with_capacity(f.length() + 1);
    let mut basis = Vec::new();
    for p in 0..=f.length() {
        offsets.push(basis.len());
        let coh = f.start() + p as i64;
        basis.extend(f.degrees(p).iter().map(|b| Bideg::new(coh, b.int)));
    }
    let mut d = PolyMatrix::zero(&s, basis.clone(), basis, DIFFERENTIAL);
    let mut add = |row: usize, col: usize, term: Poly| {
        let cur = d.entry(row, col);
        d.set(row, col, &cur + &term);
    };
    for p in 1..=f.length() {
        for ((b, a), e) in f.map(p).entries() {
            let c = e.constant_term();
            if !c.is_zero() {
                add(offsets[p] + a, offsets[p - 1] + b, Poly::constant(&s, c));
            }
        }
    }
    for j in sys.indices() {
        let q = 2 * j.iter().sum::<u32>() as usize - 1;
        let exps: Vec<u32> = j.clone();
        let chi = Poly::monomial(&s, crate::arith::Monomial::from_exponents(&exps), s.field().one());
        for (p, block) in sys.blocks(j).iter().enumerate() {
            for ((a, b), e) in block.entries() {
                let c = e.constant_term();
                if !c.is_zero() {
                    add(offsets[p] + b, offsets[p + q] + a, chi.scale(&c));
                }
            }
        }
    }
    TwistedComplex::new(d)
}
