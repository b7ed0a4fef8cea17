//! Ideals of minors by sparse Laplace expansion.
//!
//! Minors are built row by row: a `k`-minor on rows `R` and columns `C` is
//! extended by a later row `r` and a column `c ∉ C` with a nonzero entry.
//! Only row/column sets that support a permutation of nonzero entries are
//! ever visited. Block-diagonal matrices are split into connected components
//! and recombined with `I_t(A ⊕ B) = Σ_{u+v=t} I_u(A)·I_v(B)`.

use std::collections::HashMap;
use std::sync::Arc;

use super::field::Scalar;
use super::monomial::Monomial;
use super::poly::Poly;
use super::matrix::PolyMatrix;
use super::ring::PolyRing;

/// Rows and columns of one connected block of a sparse matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

/// Connected components of the bipartite graph of nonzero entries. Rows and
/// columns without nonzero entries are omitted.
pub fn components(p: &PolyMatrix) -> Vec<Component> {
    let (n, m) = (p.nrows(), p.ncols());
    let mut parent: Vec<usize> = (0..n + m).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut used = vec![false; n + m];
    for ((i, j), _) in p.entries() {
        used[i] = true;
        used[n + j] = true;
        let (a, b) = (find(&mut parent, i), find(&mut parent, n + j));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: Vec<(usize, Component)> = Vec::new();
    let mut index: HashMap<usize, usize> = HashMap::new();
    for v in 0..n + m {
        if !used[v] {
            continue;
        }
        let root = find(&mut parent, v);
        let k = *index.entry(root).or_insert_with(|| {
            groups.push((root, Component { rows: Vec::new(), cols: Vec::new() }));
            groups.len() - 1
        });
        if v < n {
            groups[k].1.rows.push(v);
        } else {
            groups[k].1.cols.push(v - n);
        }
    }
    groups.into_iter().map(|g| g.1).collect()
}

/// All minors of sizes `1..=tmax` of a matrix with at most 128 rows and
/// columns, as raw (undeduplicated) lists per size.
pub fn raw_minors(p: &PolyMatrix, tmax: usize) -> Vec<Vec<Poly>> {
    assert!(p.nrows() <= 128 && p.ncols() <= 128, "minor expansion supports blocks up to 128x128");
    let rows = p.rows_sparse();
    let tmax = tmax.min(p.nrows()).min(p.ncols());
    let mut out = Vec::with_capacity(tmax);
    if tmax == 0 {
        return out;
    }
    let mut level: HashMap<(u128, u128), Poly> = HashMap::new();
    for ((i, j), e) in p.entries() {
        level.insert((1u128 << i, 1u128 << j), e.clone());
    }
    out.push(level.values().cloned().collect());
    let field = p.ring().field();
    let (plus, minus) = (field.one(), -&field.one());
    for k in 1..tmax {
        let mut next: HashMap<(u128, u128), Poly> = HashMap::new();
        for (&(rs, cs), minor) in &level {
            let top = 127 - rs.leading_zeros() as usize;
            for (r, row) in rows.iter().enumerate().skip(top + 1) {
                for (c, a) in row {
                    let bit = 1u128 << c;
                    if cs & bit != 0 {
                        continue;
                    }
                    let pos = (cs & (bit - 1)).count_ones() as usize;
                    let sign: &Scalar = if (k + pos).is_multiple_of(2) { &plus } else { &minus };
                    let term = (a * minor).scale(sign);
                    let key = (rs | 1u128 << r, cs | bit);
                    match next.get_mut(&key) {
                        Some(v) => *v = &*v + &term,
                        None => {
                            next.insert(key, term);
                        }
                    }
                }
            }
        }
        next.retain(|_, v| !v.is_zero());
        out.push(next.values().cloned().collect());
        level = next;
    }
    out
}

/// A canonical basis of the k-span of `polys`: reduced row echelon form,
/// monic, sorted by degree and then by decreasing lead monomial.
pub fn linear_basis(ring: &Arc<PolyRing>, polys: impl IntoIterator<Item = Poly>) -> Vec<Poly> {
    let mut basis: Vec<Poly> = Vec::new();
    let mut leads: HashMap<Monomial, usize> = HashMap::new();
    for p in polys {
        let mut rem = p;
        let mut kept: Vec<(Monomial, Scalar)> = Vec::new();
        while let Some((m, c)) = rem.lead().cloned() {
            match leads.get(&m) {
                Some(&k) => rem = &rem - &basis[k].scale(&c),
                None => {
                    kept.push((m, c));
                    rem = Poly::from_sorted(ring, rem.terms()[1..].to_vec());
                }
            }
        }
        if kept.is_empty() {
            continue;
        }
        let new = Poly::from_sorted(ring, kept).monic();
        let lm = new.lead_monomial().expect("nonzero");
        for b in basis.iter_mut() {
            if let Some((_, c)) = b.terms().iter().find(|(m, _)| *m == lm) {
                let c = c.clone();
                *b = &*b - &new.scale(&c);
            }
        }
        leads.insert(lm, basis.len());
        basis.push(new);
    }
    basis.sort_by(|a, b| {
        let (ma, mb) = (a.lead_monomial().unwrap(), b.lead_monomial().unwrap());
        ring.degree(&ma).cmp(&ring.degree(&mb)).then_with(|| ring.cmp_monomials(&mb, &ma))
    });
    basis
}

/// Products of all pairs, one from each list.
pub fn products(a: &[Poly], b: &[Poly]) -> Vec<Poly> {
    a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
}

/// Generators of `I_t(P)` for `t = 1..=tmax`, each list passed through
/// `reduce` (which must preserve the generated ideal).
pub fn minor_ideals_with(
    p: &PolyMatrix,
    tmax: usize,
    reduce: &dyn Fn(Vec<Poly>) -> Vec<Poly>,
) -> Vec<Vec<Poly>> {
    let ring = p.ring();
    let one = Poly::one(ring);
    // acc[u] generates I_u of the blocks processed so far; I_0 = (1).
    let mut acc: Vec<Vec<Poly>> = vec![vec![one.clone()]];
    for comp in components(p) {
        let sub = p.submatrix(&comp.rows, &comp.cols);
        let mut local: Vec<Vec<Poly>> = vec![vec![one.clone()]];
        local.extend(raw_minors(&sub, tmax).into_iter().map(reduce));
        let mut next: Vec<Vec<Poly>> = vec![Vec::new(); (acc.len() + local.len() - 1).min(tmax + 1)];
        for (u, gu) in acc.iter().enumerate() {
            for (v, gv) in local.iter().enumerate() {
                if u + v <= tmax && !gu.is_empty() && !gv.is_empty() {
                    next[u + v].extend(products(gu, gv));
                }
            }
        }
        acc = next.into_iter().map(reduce).collect();
    }
    (1..=tmax).map(|t| acc.get(t).cloned().unwrap_or_default()).collect()
}

/// Generators of the ideal of `t × t` minors, deduplicated up to linear
/// dependence. Empty when `t` exceeds the matrix size or all minors vanish.
pub fn minors_ideal(p: &PolyMatrix, t: usize) -> Vec<Poly> {
    assert!(t >= 1, "minor size must be positive");
    if t > p.nrows().min(p.ncols()) {
        return Vec::new();
    }
    let ring = p.ring().clone();
    let reduce = move |v: Vec<Poly>| linear_basis(&ring, v);
    minor_ideals_with(p, t, &reduce).pop().unwrap_or_default()
}
