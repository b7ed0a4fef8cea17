//! Inputs shared by the benchmarks.

use std::sync::Arc;

use jumploci_core::groebner::Ideal;
use jumploci_core::resolution::{ModuleInput, RingData};
use jumploci_core::{Bideg, Field, Poly, PolyMatrix, PolyRing};

pub fn base(names: &[&str]) -> Arc<PolyRing> {
    PolyRing::base(Field::Prime(101), names.iter().map(|s| s.to_string()).collect(), vec![1; names.len()])
        .expect("valid ring")
}

pub fn poly(r: &Arc<PolyRing>, t: &str) -> Poly {
    Poly::parse(r, t).expect("valid polynomial")
}

pub fn row(r: &Arc<PolyRing>, entries: &[&str]) -> PolyMatrix {
    PolyMatrix::from_rows_infer(r, vec![Bideg::ZERO], vec![entries.iter().map(|t| poly(r, t)).collect()])
        .expect("homogeneous row")
}

/// k[x,y,z]/(x³, y³, z³) with M = coker [x³ y³ z³ xz yz²].
pub fn flag() -> (RingData, ModuleInput) {
    let r = base(&["x", "y", "z"]);
    let ci = ["x^3", "y^3", "z^3"].iter().map(|t| poly(&r, t)).collect();
    (RingData::new(&r, ci).expect("ci"), ModuleInput::Presentation(row(&r, &["x^3", "y^3", "z^3", "x*z", "y*z^2"])))
}

/// Cyclic 4-roots in homogenized form, a standard Gröbner workload.
pub fn cyclic4() -> Ideal {
    let r = base(&["a", "b", "c", "d", "h"]);
    let gens = ["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c + b*c*d + c*d*a + d*a*b", "a*b*c*d - h^4"];
    Ideal::new(&r, gens.iter().map(|t| poly(&r, t)).collect())
}
