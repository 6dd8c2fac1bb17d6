//! Isotropic roots, the orbit `G(z*)` and Pythagorean triples.
//!
//! Every nonzero vector of `L` with `(u,u) = 0` is `2k·g(z*)` for some
//! `g ∈ G` and nonzero integer `k`, and `g(z*) = −½((m−n)²x + m²y + n²z)`
//! for a coprime pair `(m, n)`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::equitable::EquiVec;
use crate::error::{Error, Result};
use crate::lattice::{brute_force_norm, in_box, LatticeVec};
use crate::psl2::normal_forms;
use crate::report::Report;
use crate::scalar::{self, int_json};

/// `−½((m−n)², m², n²)` with `(m, n)` coprime and not both zero.
pub fn orbit_point(m: &BigInt, n: &BigInt) -> Result<EquiVec> {
    check_pair(m, n)?;
    let v = doubled_orbit_point(m, n);
    Ok(v.to_equivec().scale(&scalar::half()))
}

/// `2·orbit_point(m, n) = −((m−n)², m², n²)`, which lies in `L`.
fn doubled_orbit_point(m: &BigInt, n: &BigInt) -> LatticeVec {
    let d = m - n;
    LatticeVec::new(-(&d * &d), -(m * m), -(n * n))
}

fn check_pair(m: &BigInt, n: &BigInt) -> Result<()> {
    if m.is_zero() && n.is_zero() {
        return Err(Error::ZeroVector);
    }
    if !m.gcd(n).is_one() {
        return Err(Error::NotCoprime { m: m.clone(), n: n.clone() });
    }
    Ok(())
}

/// `u = −k((m−n)², m², n²)`, with `m > 0` or `(m, n) = (0, 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsotropicDecomp {
    pub k: BigInt,
    pub m: BigInt,
    pub n: BigInt,
}

impl IsotropicDecomp {
    pub fn vector(&self) -> LatticeVec {
        doubled_orbit_point(&self.m, &self.n).scale(&self.k)
    }

    pub fn triple(&self) -> TripleABC {
        let a = (&self.m - &self.n).abs();
        TripleABC::new(a, self.m.abs(), self.n.abs()).expect("coprime pair gives a valid triple")
    }

    pub fn to_json(&self) -> Value {
        let t = self.triple();
        json!({
            "k": int_json(&self.k),
            "m": int_json(&self.m),
            "n": int_json(&self.n),
            "vector": self.vector().to_json(),
            "abc": [int_json(&t.a), int_json(&t.b), int_json(&t.c)],
            "pythagorean": pythagorean(&t).to_json(),
        })
    }
}

pub fn decompose_isotropic(u: &LatticeVec) -> Result<IsotropicDecomp> {
    if u.is_zero() {
        return Err(Error::ZeroVector);
    }
    let norm = u.norm();
    if !norm.is_zero() {
        return Err(Error::NotIsotropic { norm });
    }
    let g = u.content();
    // all coordinates share a sign, opposite to k
    let negative = u.coords().iter().any(|c| c.is_negative());
    let k = if negative { g.clone() } else { -g.clone() };
    let [d2, m2, n2] = u.coords().map(|c| -(c / &k));
    let (m, n) = if m2.is_zero() {
        (BigInt::zero(), BigInt::one())
    } else {
        let m = m2.sqrt();
        let n = n2.sqrt();
        let d = &m - &n;
        if d.clone() * &d == d2 {
            (m, n)
        } else {
            (m, -n)
        }
    };
    let out = IsotropicDecomp { k, m, n };
    debug_assert_eq!(out.vector(), *u);
    Ok(out)
}

/// Isotropic vectors in the box `[-bound, bound]³` generated as
/// `2k·orbit_point(m, n)`. Sorted.
pub fn enumerate_isotropic(bound: i64) -> Vec<LatticeVec> {
    let mut out = BTreeSet::new();
    let r = (bound.max(0) as f64).sqrt() as i64 + 1;
    for m in 0..=r {
        for n in -r..=r {
            let canonical = m > 0 || (m == 0 && n == 1);
            if !canonical || m.gcd(&n) != 1 {
                continue;
            }
            let base = doubled_orbit_point(&m.into(), &n.into());
            let top = base.coords().iter().map(|c| c.abs()).max().expect("three coordinates");
            let mut k = BigInt::one();
            while &k * &top <= BigInt::from(bound) {
                out.insert(base.scale(&k));
                out.insert(base.scale(&-&k));
                k += 1;
            }
        }
    }
    out.into_iter().filter(|v| in_box(v, bound)).collect()
}

/// Nonzero vectors of norm 0 in the box, by scanning it. Sorted.
pub fn brute_force_isotropic(bound: i64) -> Vec<LatticeVec> {
    brute_force_norm(bound, 0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Relation {
    #[serde(rename = "c=a+b")]
    CSum,
    #[serde(rename = "a=b+c")]
    ASum,
    #[serde(rename = "b=c+a")]
    BSum,
}

impl Relation {
    pub fn text(self) -> &'static str {
        match self {
            Relation::CSum => "c=a+b",
            Relation::ASum => "a=b+c",
            Relation::BSum => "b=c+a",
        }
    }
}

/// Nonnegative `(a, b, c)`, coprime, one of them the sum of the others.
/// A zero entry marks one of the three cusps `x*, y*, z*`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TripleABC {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub relation: Relation,
    pub degenerate: bool,
}

impl TripleABC {
    pub fn new(a: BigInt, b: BigInt, c: BigInt) -> Result<Self> {
        let bad = |reason| Error::InvalidTriple { a: a.clone(), b: b.clone(), c: c.clone(), reason };
        if a.is_negative() || b.is_negative() || c.is_negative() {
            return Err(bad("negative entry"));
        }
        if a.is_zero() && b.is_zero() && c.is_zero() {
            return Err(bad("all entries zero"));
        }
        if !a.gcd(&b).gcd(&c).is_one() {
            return Err(bad("entries not coprime"));
        }
        let relation = if c == &a + &b {
            Relation::CSum
        } else if a == &b + &c {
            Relation::ASum
        } else if b == &c + &a {
            Relation::BSum
        } else {
            return Err(bad("no entry is the sum of the other two"));
        };
        let degenerate = a.is_zero() || b.is_zero() || c.is_zero();
        Ok(TripleABC { a, b, c, relation, degenerate })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        TripleABC::new(a.into(), b.into(), c.into())
    }

    pub fn squares(&self) -> [BigInt; 3] {
        [&self.a * &self.a, &self.b * &self.b, &self.c * &self.c]
    }

    pub fn largest(&self) -> BigInt {
        self.a.clone().max(self.b.clone()).max(self.c.clone())
    }

    /// `−½(a²x + b²y + c²z)`
    pub fn vector(&self) -> EquiVec {
        let [a2, b2, c2] = self.squares();
        LatticeVec::new(-a2, -b2, -c2).to_equivec().scale(&scalar::half())
    }
}

impl fmt::Display for TripleABC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^2 {}^2 {}^2", self.a, self.b, self.c)
    }
}

/// `(α, β, γ)` with the square of `values[hypotenuse]` equal to the sum of
/// the other two squares.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PythTriple {
    pub values: [BigInt; 3],
    pub hypotenuse: usize,
}

impl PythTriple {
    pub fn holds(&self) -> bool {
        let sq: Vec<BigInt> = self.values.iter().map(|v| v * v).collect();
        let legs: BigInt = (0..3).filter(|&i| i != self.hypotenuse).map(|i| &sq[i]).sum();
        sq[self.hypotenuse] == legs
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.values.iter().map(int_json).collect())
    }
}

/// `M = [[−1,1,1],[0,−1,1],[0,1,1]]`
fn apply_m(p: &BigInt, q: &BigInt, r: &BigInt) -> [BigInt; 3] {
    [q + r - p, r - q, q + r]
}

/// Applies `M` to the squares in the order fixed by the triple's relation.
pub fn pythagorean(t: &TripleABC) -> PythTriple {
    let [a2, b2, c2] = t.squares();
    match t.relation {
        Relation::CSum => {
            let [al, be, ga] = apply_m(&a2, &b2, &c2);
            PythTriple { values: [al, be, ga], hypotenuse: 2 }
        }
        Relation::ASum => {
            let [be, ga, al] = apply_m(&b2, &c2, &a2);
            PythTriple { values: [al, be, ga], hypotenuse: 0 }
        }
        Relation::BSum => {
            let [ga, al, be] = apply_m(&c2, &a2, &b2);
            PythTriple { values: [al, be, ga], hypotenuse: 1 }
        }
    }
}

/// Every `−½(a²x + b²y + c²z)` with a valid triple and `max(a, b, c) ≤ max_c`,
/// including the cusps `x*, y*, z*`. Sorted by `(max, a, b, c)`.
pub fn omega(max_c: u64) -> Vec<(EquiVec, TripleABC)> {
    let bound = max_c as i64;
    let mut out = Vec::new();
    for m in 0..=bound {
        for n in -bound..=bound {
            let canonical = m > 0 || (m == 0 && n == 1);
            if !canonical || m.gcd(&n) != 1 {
                continue;
            }
            let d = IsotropicDecomp { k: BigInt::one(), m: m.into(), n: n.into() };
            let t = d.triple();
            if t.largest() <= BigInt::from(max_c) {
                out.push((t.vector(), t));
            }
        }
    }
    out.sort_by(|x, y| (x.1.largest(), &x.1.a, &x.1.b, &x.1.c).cmp(&(y.1.largest(), &y.1.a, &y.1.b, &y.1.c)));
    out
}

/// Images of `2x*, 2y*, 2z*` under the Weyl group, closed under simple
/// reflections among vectors whose coordinates stay within `bound`.
pub fn weyl_orbit_of_cusps(bound: i64) -> BTreeSet<LatticeVec> {
    let b = BigInt::from(bound);
    let fits = |v: &LatticeVec| v.coords().iter().all(|c| c.abs() <= b);
    let mut seen = BTreeSet::new();
    let mut stack: Vec<LatticeVec> = [(0, 1, 1), (1, 0, 1), (1, 1, 0)]
        .iter()
        .map(|&(p, q, r)| LatticeVec::from_ints(-p, -q, -r))
        .collect();
    while let Some(v) = stack.pop() {
        if !fits(&v) || !seen.insert(v.clone()) {
            continue;
        }
        stack.extend([v.reflect_x(), v.reflect_y(), v.reflect_z()]);
    }
    seen
}

/// Orbit of `2z* = −(x+y)` under normal words of length at most `max_len`.
pub fn orbit_of_z_star(max_len: usize) -> BTreeSet<LatticeVec> {
    let two_z = LatticeVec::from_ints(-1, -1, 0);
    normal_forms(max_len)
        .iter()
        .map(|w| w.to_matrix().hat().apply(&two_z))
        .collect()
}

/// Checks for isotropic roots, `G(z*)` and the triple correspondence.
pub fn verify() -> Report {
    let mut rep = Report::default();

    let z_star = orbit_point(&1.into(), &0.into());
    let y_star = orbit_point(&0.into(), &1.into());
    let x_star = orbit_point(&1.into(), &1.into());
    rep.push(
        "orbit points at (1,0), (0,1), (1,1) are z*, y*, x*",
        z_star == Ok(EquiVec::z_star()) && y_star == Ok(EquiVec::y_star()) && x_star == Ok(EquiVec::x_star()),
        Value::Null,
    );

    let mut square_zero = true;
    for m in -6i64..=6 {
        for n in -6i64..=6 {
            if let Ok(p) = orbit_point(&m.into(), &n.into()) {
                let mat = p.to_matrix();
                let expected = crate::equitable::Mat2::from_ints(m * n, -m * m, n * n, -m * n);
                square_zero &= mat == expected && mat.mul(&mat).is_zero() && p.trace_form(&p).is_zero();
            }
        }
    }
    rep.push("orbit points are square-zero with matrix [[mn,-m^2],[n^2,-mn]]", square_zero, Value::Null);

    let bound = 12;
    let gen = enumerate_isotropic(bound);
    let brute = brute_force_isotropic(bound);
    rep.push(
        "isotropic enumeration matches box scan",
        gen == brute,
        json!({ "box": bound, "count": gen.len() }),
    );
    let roundtrip = brute.iter().all(|u| decompose_isotropic(u).is_ok_and(|d| d.vector() == *u));
    rep.push("every isotropic vector is 2k g(z*)", roundtrip, json!({ "box": bound }));

    let mut pyth_ok = true;
    let mut count = 0usize;
    for (_, t) in omega(60) {
        pyth_ok &= pythagorean(&t).holds();
        count += 1;
    }
    rep.push("Pythagorean identity holds on omega", pyth_ok, json!({ "max_c": 60, "triples": count }));
    let classical = [((1, 1, 2), [4, 3, 5]), ((1, 2, 3), [12, 5, 13]), ((1, 3, 4), [24, 7, 25])]
        .iter()
        .all(|&((a, b, c), v)| {
            let p = pythagorean(&TripleABC::from_ints(a, b, c).expect("valid"));
            p.values == v.map(BigInt::from)
        });
    rep.push("classical triples (4,3,5), (12,5,13), (24,7,25)", classical, Value::Null);

    let om = omega(8);
    let from_omega: BTreeSet<LatticeVec> = om
        .iter()
        .map(|(v, _)| LatticeVec::from_equivec(&v.scale(&scalar::int(2))).expect("integral"))
        .collect();
    let in_range = weyl_orbit_of_cusps(64);
    rep.push(
        "omega is the Weyl orbit of the cusps",
        from_omega == in_range,
        json!({ "max_c": 8, "size": from_omega.len() }),
    );

    let orbit = orbit_of_z_star(10);
    let disjoint = orbit.iter().all(|v| !orbit.contains(&v.neg()));
    let positive_k = orbit
        .iter()
        .all(|v| decompose_isotropic(v).is_ok_and(|d| d.k.is_one()));
    rep.push(
        "G(z*) and -G(z*) are disjoint",
        disjoint && positive_k,
        json!({ "max_word_length": 10, "orbit_size": orbit.len() }),
    );

    let stab = stabilizer_of_z_star_words(8);
    rep.push(
        "words fixing z* are powers of sz",
        stab.iter().all(|&(_, ok)| ok),
        json!({ "max_word_length": 8, "fixing": stab.len() }),
    );

    rep
}

/// Normal words up to `max_len` whose action fixes `z*`, each paired with
/// whether its matrix is `±[[1,k],[0,1]]`, a power of `σz`.
pub fn stabilizer_of_z_star_words(max_len: usize) -> Vec<(String, bool)> {
    let two_z = LatticeVec::from_ints(-1, -1, 0);
    normal_forms(max_len)
        .iter()
        .filter_map(|w| {
            let mat = w.to_matrix();
            if mat.hat().apply(&two_z) != two_z {
                return None;
            }
            let [a, _, c, d] = mat.entries();
            let ok = a.is_one() && c.is_zero() && d.is_one();
            Some((w.to_string(), ok))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn orbit_point_examples() {
        assert_eq!(orbit_point(&b(1), &b(0)).unwrap(), EquiVec::z_star());
        assert_eq!(orbit_point(&b(0), &b(1)).unwrap(), EquiVec::y_star());
        assert_eq!(orbit_point(&b(1), &b(1)).unwrap(), EquiVec::x_star());
        assert_eq!(orbit_point(&b(0), &b(0)), Err(Error::ZeroVector));
        assert!(matches!(orbit_point(&b(2), &b(4)), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn decompose_examples() {
        let d = decompose_isotropic(&LatticeVec::from_ints(-1, -1, 0)).unwrap();
        assert_eq!((d.k, d.m, d.n), (b(1), b(1), b(0)));
        let d = decompose_isotropic(&LatticeVec::from_ints(-1, -4, -9)).unwrap();
        assert_eq!((d.k.clone(), d.m.clone(), d.n.clone()), (b(1), b(2), b(3)));
        let t = d.triple();
        assert_eq!((t.a, t.b, t.c), (b(1), b(2), b(3)));
        let d2 = decompose_isotropic(&LatticeVec::from_ints(-2, -8, -18)).unwrap();
        assert_eq!((d2.k, d2.m, d2.n), (b(2), b(2), b(3)));
        let d = decompose_isotropic(&LatticeVec::from_ints(0, 1, 1)).unwrap();
        assert_eq!((d.k, d.m, d.n), (b(-1), b(1), b(1)));
        assert_eq!(decompose_isotropic(&LatticeVec::x()), Err(Error::NotIsotropic { norm: b(2) }));
        assert_eq!(decompose_isotropic(&LatticeVec::zero()), Err(Error::ZeroVector));
    }

    #[test]
    fn json_shape() {
        let d = decompose_isotropic(&LatticeVec::from_ints(-1, -4, -9)).unwrap();
        assert_eq!(
            d.to_json(),
            json!({"k":1,"m":2,"n":3,"vector":[-1,-4,-9],"abc":[1,2,3],"pythagorean":[12,5,13]})
        );
    }

    #[test]
    fn small_boxes() {
        assert!(enumerate_isotropic(0).is_empty());
        assert!(brute_force_isotropic(0).is_empty());
        let one = enumerate_isotropic(1);
        let mut expected: Vec<LatticeVec> = [(1, 1, 0), (0, 1, 1), (1, 0, 1)]
            .iter()
            .flat_map(|&(p, q, r)| [LatticeVec::from_ints(p, q, r), LatticeVec::from_ints(-p, -q, -r)])
            .collect();
        expected.sort();
        assert_eq!(one, expected);
    }

    #[test]
    fn enumeration_matches_scan_up_to_30() {
        for bound in [2, 5, 9, 17, 30] {
            assert_eq!(enumerate_isotropic(bound), brute_force_isotropic(bound), "box {bound}");
        }
    }

    #[test]
    fn pythagorean_examples() {
        let p = |a, b, c| pythagorean(&TripleABC::from_ints(a, b, c).unwrap());
        assert_eq!(p(1, 1, 2).values, [b(4), b(3), b(5)]);
        assert_eq!(p(1, 2, 3).values, [b(12), b(5), b(13)]);
        assert_eq!(p(1, 3, 4).values, [b(24), b(7), b(25)]);
        let deg = p(0, 1, 1);
        assert_eq!(deg.values, [b(2), b(0), b(2)]);
        assert!(deg.holds());
        let q = p(3, 1, 2);
        assert_eq!(q.hypotenuse, 0);
        assert!(q.holds());
        let r = p(1, 3, 2);
        assert_eq!(r.hypotenuse, 1);
        assert!(r.holds());
    }

    #[test]
    fn triple_validation() {
        assert!(TripleABC::from_ints(1, 2, 4).is_err());
        assert!(TripleABC::from_ints(2, 2, 4).is_err());
        assert!(TripleABC::from_ints(0, 0, 0).is_err());
        assert!(TripleABC::from_ints(-1, 2, 1).is_err());
        let t = TripleABC::from_ints(0, 1, 1).unwrap();
        assert!(t.degenerate);
        assert_eq!(t.relation, Relation::CSum);
        assert_eq!(TripleABC::from_ints(1, 0, 1).unwrap().relation, Relation::CSum);
        assert_eq!(TripleABC::from_ints(1, 1, 0).unwrap().relation, Relation::ASum);
        assert_eq!(t.vector(), EquiVec::x_star());
        assert_eq!(t.to_string(), "0^2 1^2 1^2");
    }

    #[test]
    fn omega_small() {
        let one = omega(1);
        let vecs: Vec<EquiVec> = one.iter().map(|(v, _)| v.clone()).collect();
        assert_eq!(vecs.len(), 3);
        for s in [EquiVec::x_star(), EquiVec::y_star(), EquiVec::z_star()] {
            assert!(vecs.contains(&s));
        }
        let four = omega(4);
        let hit = four.iter().find(|(_, t)| (t.a.clone(), t.b.clone(), t.c.clone()) == (b(1), b(3), b(4)));
        let (v, _) = hit.expect("label 1 3 4");
        assert_eq!(*v, EquiVec::new(scalar::frac(-1, 2), scalar::frac(-9, 2), scalar::int(-8)));
        assert!(omega(3).iter().all(|(_, t)| t.largest() <= b(3)));
        assert!(four.iter().all(|(v, _)| v.trace_form(v).is_zero()));
    }

    #[test]
    fn pythagorean_up_to_200() {
        let mut n = 0;
        for (_, t) in omega(200) {
            assert!(pythagorean(&t).holds(), "{t}");
            n += 1;
        }
        assert!(n > 1000);
    }

    #[test]
    fn orbit_of_z_disjoint_from_negative() {
        let orbit = orbit_of_z_star(9);
        assert!(orbit.iter().all(|v| !orbit.contains(&v.neg())));
        assert!(orbit.iter().all(|v| v.norm().is_zero()));
    }

    #[test]
    fn stabilizer_words_are_sz_powers() {
        let stab = stabilizer_of_z_star_words(8);
        assert!(stab.len() > 3);
        assert!(stab.iter().all(|(w, ok)| *ok || w.is_empty()), "{stab:?}");
    }

    #[test]
    fn report_passes() {
        let rep = verify();
        for r in rep.iter() {
            assert!(r.passed(), "{} failed: {}", r.check, r.witness);
        }
    }

    proptest! {
        #[test]
        fn decompose_inverts_scaling(m in -20i64..=20, n in -20i64..=20, k in -5i64..=5) {
            prop_assume!(k != 0 && (m, n) != (0, 0) && m.gcd(&n) == 1);
            let (m, n) = if m < 0 || (m == 0 && n < 0) { (-m, -n) } else { (m, n) };
            let u = doubled_orbit_point(&b(m), &b(n)).scale(&b(k));
            let d = decompose_isotropic(&u).unwrap();
            prop_assert_eq!((d.k, d.m, d.n), (b(k), b(m), b(n)));
        }

        #[test]
        fn orbit_points_are_square_zero(m in -50i64..=50, n in -50i64..=50) {
            prop_assume!((m, n) != (0, 0) && m.gcd(&n) == 1);
            let p = orbit_point(&b(m), &b(n)).unwrap();
            let mat = p.to_matrix();
            prop_assert!(mat.mul(&mat).is_zero());
            prop_assert!(p.trace_form(&p).is_zero());
        }
    }
}
