#![allow(dead_code)]

use std::sync::Arc;

use jumploci_core::resolution::{DgComplex, ModuleInput, RingData};
use jumploci_core::{Bideg, Field, Poly, PolyMatrix, PolyRing};

pub const P: u32 = 101;

pub fn ring(names: &[&str]) -> Arc<PolyRing> {
    PolyRing::base(Field::Prime(P), names.iter().map(|s| s.to_string()).collect(), vec![1; names.len()]).unwrap()
}

pub fn poly(r: &Arc<PolyRing>, t: &str) -> Poly {
    Poly::parse(r, t).unwrap()
}

pub fn mat(r: &Arc<PolyRing>, rows: &[&[&str]]) -> PolyMatrix {
    let data: Vec<Vec<Poly>> = rows.iter().map(|row| row.iter().map(|t| poly(r, t)).collect()).collect();
    PolyMatrix::from_rows_infer(r, vec![Bideg::ZERO; data.len()], data).unwrap()
}

pub fn ci(r: &Arc<PolyRing>, gens: &[&str]) -> RingData {
    RingData::new(r, gens.iter().map(|g| poly(r, g)).collect()).unwrap()
}

/// A = k[x,y,z], f = (x³, y³, z³), M = coker [x³ y³ z³ xz yz²].
pub fn flag() -> (RingData, ModuleInput) {
    let r = ring(&["x", "y", "z"]);
    (ci(&r, &["x^3", "y^3", "z^3"]), ModuleInput::Presentation(mat(&r, &[&["x^3", "y^3", "z^3", "x*z", "y*z^2"]])))
}

/// B = k[x,y]/(x³, y³), M = B/(x², xy, y²).
pub fn final_example() -> (RingData, ModuleInput) {
    let r = ring(&["x", "y"]);
    (ci(&r, &["x^3", "y^3"]), ModuleInput::Presentation(mat(&r, &[&["x^2", "x*y", "y^2"]])))
}

/// f = (x²y, xy²) with the strict action through g = xy on the Koszul
/// complex of f.
pub fn e_homotopies() -> (RingData, ModuleInput) {
    let r = ring(&["x", "y"]);
    let d1 = mat(&r, &[&["x^2*y", "x*y^2"]]);
    let d2 = mat(&r, &[&["-y"], &["x"]]).with_degrees(d1.col_degrees().to_vec(), vec![Bideg::new(0, 4)], Bideg::ZERO);
    let e1 = vec![mat(&r, &[&["1"], &["0"]]), mat(&r, &[&["0", "x*y"]])];
    let e2 = vec![mat(&r, &[&["0"], &["1"]]), mat(&r, &[&["-x*y", "0"]])];
    (ci(&r, &["x^2*y", "x*y^2"]), ModuleInput::Complex(DgComplex { differentials: vec![d1, d2], actions: vec![e1, e2] }))
}

/// M = k through the Koszul complex K^A on x, y with f = (x², y²) acting by
/// x e_x and y e_y.
pub fn koszulcx() -> (RingData, ModuleInput) {
    let r = ring(&["x", "y"]);
    let d1 = mat(&r, &[&["x", "y"]]);
    let d2 = mat(&r, &[&["-y"], &["x"]]).with_degrees(d1.col_degrees().to_vec(), vec![Bideg::new(0, 2)], Bideg::ZERO);
    let e1 = vec![mat(&r, &[&["x"], &["0"]]), mat(&r, &[&["0", "x"]])];
    let e2 = vec![mat(&r, &[&["0"], &["y"]]), mat(&r, &[&["-y", "0"]])];
    (ci(&r, &["x^2", "y^2"]), ModuleInput::Complex(DgComplex { differentials: vec![d1, d2], actions: vec![e1, e2] }))
}

/// B itself over k[x,y]/(x³, y³).
pub fn ring_itself() -> (RingData, ModuleInput) {
    let r = ring(&["x", "y"]);
    (ci(&r, &["x^3", "y^3"]), ModuleInput::Presentation(mat(&r, &[&["x^3", "y^3"]])))
}
