//! Verification reports for every module, as run by `equilib verify`.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::disk;
use crate::equitable::{self, EquiVec};
use crate::isometry;
use crate::isotropic;
use crate::lattice::{self, LatticeVec};
use crate::linalg::Matrix;
use crate::psl2::{self, normal_forms, GenToken};
use crate::rep;
use crate::report::Report;
use crate::scalar::int;

pub const MODULES: [&str; 7] = [
    "equitable_core",
    "psl2_group",
    "root_lattice",
    "isometry_weyl",
    "isotropic_pythagoras",
    "rep_modules",
    "disk_render",
];

pub fn equitable_checks() -> Report {
    let mut rep = Report::default();
    let (x, y, z) = (EquiVec::x(), EquiVec::y(), EquiVec::z());
    let two = |a: &EquiVec, b: &EquiVec| (a.clone() + b.clone()).scale(&int(2));
    rep.push(
        "[x,y] = 2x+2y, [y,z] = 2y+2z, [z,x] = 2z+2x",
        x.bracket(&y) == two(&x, &y) && y.bracket(&z) == two(&y, &z) && z.bracket(&x) == two(&z, &x),
        Value::Null,
    );
    let gram_ok = equitable::gram()
        == Matrix::from_fn(3, 3, |i, j| int(if i == j { 2 } else { -2 }));
    rep.push("trace form Gram matrix is 2 on the diagonal, -2 off it", gram_ok, Value::Null);
    let duals = equitable::dual_basis();
    let basis = equitable::basis();
    let mut dual_ok = true;
    for (i, b) in basis.iter().enumerate() {
        for (j, d) in duals.iter().enumerate() {
            dual_ok &= b.trace_form(d) == int(if i == j { 2 } else { 0 });
        }
    }
    rep.push("(u, v*) = 2 delta", dual_ok, Value::Null);
    let nil_ok = duals.iter().all(|d| {
        let m = d.to_matrix();
        m.mul(&m).is_zero() && d.is_nilpotent()
    });
    rep.push("x*, y*, z* are nilpotent", nil_ok, Value::Null);
    let rows = |r: [[i64; 3]; 3]| Matrix::from_rows(r.iter().map(|row| row.iter().map(|&v| int(v)).collect()).collect());
    let printed = [
        rows([[1, 0, 0], [2, 2, -1], [0, 1, 0]]),
        rows([[0, 0, 1], [0, 1, 0], [-1, 2, 2]]),
        rows([[2, -1, 2], [1, 0, 0], [0, 0, 1]]),
    ];
    let exp_ok = duals
        .iter()
        .zip(printed.iter())
        .all(|(d, m)| d.exp_ad().as_ref() == Ok(m));
    rep.push("exp(ad x*), exp(ad y*), exp(ad z*) as printed", exp_ok, Value::Null);
    rep
}

pub fn psl2_checks(max_len: usize) -> Report {
    let mut rep = Report::default();
    rep.push(
        "hat(B) is tau_x and hat(C) is rho",
        psl2::b_matrix().hat() == isometry::Iso3::from_rows([[-1, 2, 2], [0, 0, 1], [0, 1, 0]])
            && psl2::c_matrix().hat() == isometry::Iso3::from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]]),
        Value::Null,
    );
    let b = psl2::b_matrix();
    let c = psl2::c_matrix();
    rep.push(
        "B^2 = C^3 = 1 in PSL2(Z)",
        b.pow(2).is_identity() && c.pow(3).is_identity() && !c.is_identity() && !b.is_identity(),
        Value::Null,
    );
    let sigma_ok = [
        (GenToken::SigmaX, EquiVec::x_star()),
        (GenToken::SigmaY, EquiVec::y_star()),
        (GenToken::SigmaZ, EquiVec::z_star()),
    ]
    .iter()
    .all(|(t, d)| d.exp_ad().ok() == Some(t.matrix().hat().to_rational()));
    rep.push("hat(sigma) = exp(ad of the dual vector)", sigma_ok, Value::Null);

    let words = normal_forms(max_len);
    let mats: BTreeSet<_> = words.iter().map(|w| w.to_matrix()).collect();
    let images: BTreeSet<_> = words.iter().map(|w| w.to_matrix().hat().apply(&LatticeVec::x())).collect();
    rep.push(
        "distinct normal forms give distinct matrices and images of x",
        mats.len() == words.len() && images.len() == words.len(),
        json!({ "max_length": max_len, "words": words.len() }),
    );
    rep
}

pub fn lattice_checks(bound: i64) -> Report {
    let mut rep = Report::default();
    let brute = lattice::brute_force_real(bound);
    let reachable: Vec<LatticeVec> = lattice::enumerate_real((3 * bound) as u64)
        .into_iter()
        .filter(|u| lattice::in_box(u, bound))
        .collect();
    rep.push(
        "box scan of norm-2 vectors equals the descent-reachable set",
        brute == reachable,
        json!({ "box": bound, "count": brute.len() }),
    );
    let mut failed = Vec::new();
    for u in &brute {
        let ok = lattice::descent(u).is_ok_and(|w| {
            lattice::replay(&w).last().map(|s| s.image.clone()).unwrap_or_else(LatticeVec::x) == *u
        });
        if !ok {
            failed.push(u.to_json());
        }
    }
    rep.push(
        "descent replays to every real root",
        failed.is_empty(),
        json!({ "box": bound, "failures": failed }),
    );
    let quad = brute.iter().all(|u| lattice::quadratic_form(u).is_one());
    rep.push("2(a^2+b^2+g^2) - (a+b+g)^2 = 1 on real roots", quad, Value::Null);
    let parity = brute.iter().all(lattice::has_single_odd_coordinate);
    rep.push("real roots have exactly one odd coordinate", parity, Value::Null);
    let sign = brute.iter().all(|u| lattice::coefficient_sign(u) != 0);
    rep.push("coordinates of a real root share a sign", sign, Value::Null);
    let refl = brute.iter().take(2000).all(|u| {
        let p = u.classify().parity;
        [u.reflect_x(), u.reflect_y(), u.reflect_z()].iter().all(|v| v.classify().parity == p)
    });
    rep.push("parity class is invariant under simple reflections", refl, Value::Null);
    let five = (-8i64..=8).all(|a| {
        (-8i64..=8).all(|b| {
            (-8i64..=8).all(|c| {
                let v = LatticeVec::from_ints(a, b, c).norm_five_ways();
                v.iter().all(|e| *e == v[0]) && &v[0] * BigInt::from(2) == LatticeVec::from_ints(a, b, c).norm()
            })
        })
    });
    rep.push("five expressions for (u,u)/2 agree", five, Value::Null);
    let zero = LatticeVec::zero().classify();
    rep.push(
        "zero vector is flagged",
        zero.is_zero && zero.norm.is_zero() && !zero.height.is_negative(),
        Value::Null,
    );
    rep
}

/// The report for one module, by its name in [`MODULES`].
pub fn module_report(name: &str) -> Option<Report> {
    Some(match name {
        "equitable_core" => equitable_checks(),
        "psl2_group" => psl2_checks(10),
        "root_lattice" => lattice_checks(30),
        "isometry_weyl" => isometry::verify_structure(),
        "isotropic_pythagoras" => isotropic::verify(),
        "rep_modules" => {
            let mut r = Report::default();
            for d in 0..=12 {
                r.extend(rep::identity_checks(d));
            }
            r
        }
        "disk_render" => disk::verify(4),
        _ => return None,
    })
}

/// Every module's report, in [`MODULES`] order.
pub fn run_all() -> Vec<(&'static str, Report)> {
    MODULES
        .iter()
        .map(|m| (*m, module_report(m).expect("known module")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_reports_pass() {
        for r in [equitable_checks(), psl2_checks(6), lattice_checks(8)] {
            for c in r.iter() {
                assert!(c.passed(), "{} failed: {}", c.check, c.witness);
            }
        }
    }

    #[test]
    fn unknown_module() {
        assert!(module_report("nope").is_none());
    }
}
