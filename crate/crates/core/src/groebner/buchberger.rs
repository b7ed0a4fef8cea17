//! Buchberger's algorithm with the normal selection strategy, sugar degrees
//! and the Gebauer–Möller criteria.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashMap, HashSet};

use super::stats;
use super::vector::{ModuleOrder, Term, Vector};
use crate::arith::Monomial;

#[derive(Debug)]
enum Work {
    Gen(Vector),
    Pair(usize, usize),
}

#[derive(Debug)]
struct Item {
    sugar: i64,
    lcm_deg: i64,
    seq: u64,
    work: Work,
}

impl PartialEq for Item {
    fn eq(&self, o: &Item) -> bool {
        self.cmp(o) == Ordering::Equal
    }
}

impl Eq for Item {}

impl PartialOrd for Item {
    fn partial_cmp(&self, o: &Item) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Item {
    fn cmp(&self, o: &Item) -> Ordering {
        (self.sugar, self.lcm_deg, self.seq).cmp(&(o.sugar, o.lcm_deg, o.seq))
    }
}

fn support_mask(m: &Monomial) -> u32 {
    m.support().fold(0u32, |acc, i| acc | 1 << i)
}

/// An incrementally built Gröbner basis of a submodule of a free module.
///
/// Generators can be added at any time; `complete` processes all pending
/// work, and `complete_to(d)` only work of sugar at most `d`, which for
/// homogeneous input yields a basis that is correct up to degree `d`.
#[derive(Debug)]
pub struct Groebner {
    order: ModuleOrder,
    basis: Vec<Vector>,
    lead_mask: Vec<u32>,
    sugar: Vec<i64>,
    redundant: Vec<bool>,
    by_comp: HashMap<u32, Vec<usize>>,
    queue: BinaryHeap<Reverse<Item>>,
    live: HashSet<(usize, usize)>,
    seq: u64,
    unit: bool,
}

impl Groebner {
    pub fn new(order: ModuleOrder) -> Groebner {
        Groebner {
            order,
            basis: Vec::new(),
            lead_mask: Vec::new(),
            sugar: Vec::new(),
            redundant: Vec::new(),
            by_comp: HashMap::new(),
            queue: BinaryHeap::new(),
            live: HashSet::new(),
            seq: 0,
            unit: false,
        }
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    /// Queues a generator (any vector in the free module).
    pub fn add_generator(&mut self, v: Vector) {
        if v.is_empty() {
            return;
        }
        let sugar = v.iter().map(|t| t.deg).max().unwrap_or(0);
        self.push(sugar, v[0].deg, Work::Gen(v));
    }

    fn push(&mut self, sugar: i64, lcm_deg: i64, work: Work) {
        self.seq += 1;
        self.queue.push(Reverse(Item { sugar, lcm_deg, seq: self.seq, work }));
    }

    /// Smallest sugar among pending work.
    pub fn pending_degree(&self) -> Option<i64> {
        self.queue.peek().map(|r| r.0.sugar)
    }

    pub fn complete(&mut self) {
        self.run(None);
    }

    pub fn complete_to(&mut self, bound: i64) {
        self.run(Some(bound));
    }

    /// Whether the basis contains a pure basis vector times a unit, i.e. for
    /// ideals, whether the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.unit
    }

    fn run(&mut self, bound: Option<i64>) {
        while let Some(Reverse(top)) = self.queue.peek() {
            if bound.is_some_and(|b| top.sugar > b) {
                break;
            }
            let Reverse(item) = self.queue.pop().expect("peeked");
            if self.unit {
                continue;
            }
            let (v, sugar) = match item.work {
                Work::Gen(v) => (v, item.sugar),
                Work::Pair(i, j) => {
                    if !self.live.remove(&(i, j)) {
                        continue;
                    }
                    stats::record_pair();
                    self.s_vector(i, j)
                }
            };
            let (h, sugar) = self.reduce_with_sugar(v, sugar);
            if h.is_empty() {
                stats::record_zero_reduction();
                continue;
            }
            self.insert(self.order.monic(h), sugar);
        }
    }

    fn s_vector(&self, i: usize, j: usize) -> (Vector, i64) {
        let (a, b) = (&self.basis[i], &self.basis[j]);
        let l = a[0].m.lcm(&b[0].m);
        let ma = a[0].m.quotient_of(&l).expect("divides lcm");
        let mb = b[0].m.quotient_of(&l).expect("divides lcm");
        let ring = self.order.ring();
        let sa = self.sugar[i] + ring.degree(&ma);
        let sb = self.sugar[j] + ring.degree(&mb);
        let one = ring.field().one();
        let left = self.order.scale(a, &ma, &one);
        (self.order.sub_mul(&left, b, &mb, &one), sa.max(sb))
    }

    fn find_reducer(&self, t: &Term) -> Option<usize> {
        let list = self.by_comp.get(&t.comp)?;
        let mask = support_mask(&t.m);
        let mut best: Option<usize> = None;
        for &k in list {
            if self.lead_mask[k] & !mask != 0 {
                continue;
            }
            if self.basis[k][0].m.divides(&t.m) && best.is_none_or(|b| self.basis[k].len() < self.basis[b].len()) {
                best = Some(k);
            }
        }
        best
    }

    /// Full reduction; returns the remainder and its sugar.
    fn reduce_with_sugar(&self, v: Vector, mut sugar: i64) -> (Vector, i64) {
        let ring = self.order.ring();
        let mut done: Vector = Vec::new();
        let mut rest = v;
        let mut i = 0;
        while i < rest.len() {
            let t = &rest[i];
            match self.find_reducer(t) {
                Some(k) => {
                    let g = &self.basis[k];
                    let m = g[0].m.quotient_of(&t.m).expect("divisor");
                    sugar = sugar.max(self.sugar[k] + ring.degree(&m));
                    let c = t.c.clone();
                    rest = self.order.sub_mul(&rest[i..], g, &m, &c);
                    i = 0;
                }
                None => {
                    done.push(t.clone());
                    i += 1;
                }
            }
        }
        (done, sugar)
    }

    /// Normal form with respect to the current basis.
    pub fn reduce(&self, v: Vector) -> Vector {
        self.reduce_with_sugar(v, 0).0
    }

    fn insert(&mut self, h: Vector, sugar: i64) {
        let n = self.basis.len();
        let (hm, hc) = (h[0].m, h[0].comp);
        if hm.is_one() && self.order.rank() == 1 {
            self.unit = true;
        }
        let ideal = self.order.rank() == 1;
        let same: Vec<usize> =
            self.by_comp.get(&hc).map(|l| l.iter().copied().filter(|&k| !self.redundant[k]).collect()).unwrap_or_default();
        let cands: Vec<(usize, Monomial)> = same.iter().map(|&k| (k, self.basis[k][0].m.lcm(&hm))).collect();
        // Gebauer–Möller: keep a pair unless another new pair's lcm divides it
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        for (idx, (k, l)) in cands.iter().enumerate() {
            let coprime = ideal && self.basis[*k][0].m.coprime(&hm);
            let dominated = cands[idx + 1..].iter().any(|(_, l2)| l2.divides(l))
                || kept.iter().any(|(_, l2, _)| l2.divides(l));
            if coprime || !dominated {
                kept.push((*k, *l, coprime));
            }
        }
        // drop old pairs whose lcm is a proper multiple through h
        let stale: Vec<(usize, usize)> = self
            .live
            .iter()
            .copied()
            .filter(|&(a, b)| {
                if self.basis[a][0].comp != hc {
                    return false;
                }
                let l = self.basis[a][0].m.lcm(&self.basis[b][0].m);
                hm.divides(&l)
                    && self.basis[a][0].m.lcm(&hm) != l
                    && self.basis[b][0].m.lcm(&hm) != l
            })
            .collect();
        for p in stale {
            self.live.remove(&p);
        }
        for &k in &same {
            if hm.divides(&self.basis[k][0].m) {
                self.redundant[k] = true;
            }
        }
        self.lead_mask.push(support_mask(&hm));
        self.sugar.push(sugar);
        self.redundant.push(false);
        self.by_comp.entry(hc).or_default().push(n);
        self.basis.push(h);
        stats::record_basis_element();
        let ring = self.order.ring().clone();
        for (k, l, coprime) in kept {
            if coprime {
                continue;
            }
            let mk = self.basis[k][0].m.quotient_of(&l).expect("divides");
            let mh = hm.quotient_of(&l).expect("divides");
            let s = (self.sugar[k] + ring.degree(&mk)).max(sugar + ring.degree(&mh));
            let lcm_deg = ring.degree(&l) + self.order.shifts()[hc as usize];
            self.live.insert((k, n));
            self.push(s, lcm_deg, Work::Pair(k, n));
        }
    }

    /// The reduced basis (after completing all pending work), sorted by
    /// increasing lead term.
    pub fn reduced_basis(&mut self) -> Vec<Vector> {
        self.complete();
        self.current_reduced()
    }

    /// Interreduced copy of the current basis without further completion.
    pub fn current_reduced(&self) -> Vec<Vector> {
        if self.unit {
            let one = self.order.term(Monomial::ONE, 0, self.order.ring().field().one());
            return vec![vec![one]];
        }
        let keep: Vec<usize> = (0..self.basis.len()).filter(|&k| !self.redundant[k]).collect();
        let mut out = Vec::with_capacity(keep.len());
        for &k in &keep {
            let g = &self.basis[k];
            let tail = self.reduce_excluding(g[1..].to_vec(), k);
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(g[0].clone());
            v.extend(tail);
            out.push(v);
        }
        out.sort_by(|a, b| self.order.cmp(&a[0], &b[0]));
        out
    }

    fn reduce_excluding(&self, v: Vector, skip: usize) -> Vector {
        let mut done: Vector = Vec::new();
        let mut rest = v;
        let mut i = 0;
        while i < rest.len() {
            let t = &rest[i];
            let reducer = self.by_comp.get(&t.comp).and_then(|list| {
                list.iter().copied().find(|&k| k != skip && !self.redundant[k] && self.basis[k][0].m.divides(&t.m))
            });
            match reducer {
                Some(k) => {
                    let g = &self.basis[k];
                    let m = g[0].m.quotient_of(&t.m).expect("divisor");
                    let c = t.c.clone();
                    rest = self.order.sub_mul(&rest[i..], g, &m, &c);
                    i = 0;
                }
                None => {
                    done.push(t.clone());
                    i += 1;
                }
            }
        }
        done
    }

    /// All basis elements found so far (not interreduced).
    pub fn elements(&self) -> &[Vector] {
        &self.basis
    }

    /// Leads of the non-redundant elements.
    pub fn leads(&self) -> Vec<(Monomial, u32)> {
        if self.unit {
            return vec![(Monomial::ONE, 0)];
        }
        (0..self.basis.len()).filter(|&k| !self.redundant[k]).map(|k| (self.basis[k][0].m, self.basis[k][0].comp)).collect()
    }
}
