//! The irreducible module `V(d)` with standard basis `v_0, …, v_d`.
//!
//! Matrices use the column convention: column `i` holds the coordinates of
//! the image of `v_i`. The nine distinguished elements `e, f, h, x, y, z,
//! x*, y*, z*` all act by integer matrices.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::equitable::{Axis, EquiVec};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, RatMatrix};
use crate::report::Report;
use crate::scalar::{self, binomial, factorial, int, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DistElem {
    E,
    F,
    H,
    X,
    Y,
    Z,
    XStar,
    YStar,
    ZStar,
}

impl DistElem {
    pub const ALL: [DistElem; 9] = [
        DistElem::E,
        DistElem::F,
        DistElem::H,
        DistElem::X,
        DistElem::Y,
        DistElem::Z,
        DistElem::XStar,
        DistElem::YStar,
        DistElem::ZStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            DistElem::E => "e",
            DistElem::F => "f",
            DistElem::H => "h",
            DistElem::X => "x",
            DistElem::Y => "y",
            DistElem::Z => "z",
            DistElem::XStar => "x*",
            DistElem::YStar => "y*",
            DistElem::ZStar => "z*",
        }
    }

    pub fn to_equivec(self) -> EquiVec {
        match self {
            DistElem::E => EquiVec::e(),
            DistElem::F => EquiVec::f(),
            DistElem::H => EquiVec::h(),
            DistElem::X => EquiVec::x(),
            DistElem::Y => EquiVec::y(),
            DistElem::Z => EquiVec::z(),
            DistElem::XStar => EquiVec::x_star(),
            DistElem::YStar => EquiVec::y_star(),
            DistElem::ZStar => EquiVec::z_star(),
        }
    }

    pub fn is_nilpotent(self) -> bool {
        !matches!(self, DistElem::H | DistElem::X | DistElem::Y | DistElem::Z)
    }

    pub fn star(axis: Axis) -> DistElem {
        match axis {
            Axis::X => DistElem::XStar,
            Axis::Y => DistElem::YStar,
            Axis::Z => DistElem::ZStar,
        }
    }

    pub fn plain(axis: Axis) -> DistElem {
        match axis {
            Axis::X => DistElem::X,
            Axis::Y => DistElem::Y,
            Axis::Z => DistElem::Z,
        }
    }
}

impl fmt::Display for DistElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DistElem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        DistElem::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::UnknownElement(s.to_string()))
    }
}

/// A `(d+1)×(d+1)` matrix acting on `V(d)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrix {
    pub d: usize,
    pub matrix: RatMatrix,
}

impl RepMatrix {
    pub fn new(d: usize, matrix: RatMatrix) -> Self {
        assert_eq!(matrix.rows(), d + 1);
        RepMatrix { d, matrix }
    }

    pub fn identity(d: usize) -> Self {
        RepMatrix::new(d, RatMatrix::identity(d + 1))
    }

    pub fn mul(&self, o: &RepMatrix) -> RepMatrix {
        RepMatrix::new(self.d, &self.matrix * &o.matrix)
    }

    pub fn pow(&self, e: u32) -> RepMatrix {
        RepMatrix::new(self.d, self.matrix.pow(e))
    }

    pub fn is_integral(&self) -> bool {
        self.matrix.is_integral()
    }

    /// Image of `v_i`.
    pub fn column(&self, i: usize) -> Vec<Scalar> {
        self.matrix.column(i)
    }

    /// Rows of rational strings.
    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<String>> = self
            .matrix
            .to_rows()
            .iter()
            .map(|r| r.iter().map(scalar::format).collect())
            .collect();
        json!(rows)
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.matrix.to_rows() {
            let cells: Vec<String> = row.iter().map(scalar::format).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn from_images(d: usize, image: impl Fn(usize) -> Vec<(usize, i64)>) -> RatMatrix {
    let mut m = RatMatrix::zeros(d + 1, d + 1);
    for i in 0..=d {
        for (row, coeff) in image(i) {
            if row <= d {
                let cur = m.get(row, i).clone();
                m.set(row, i, cur + int(coeff));
            }
        }
    }
    m
}

/// The action of a distinguished element on `V(d)`.
pub fn action(d: usize, elem: DistElem) -> RepMatrix {
    let dd = d as i64;
    let m = from_images(d, |i| {
        let ii = i as i64;
        let below = i.wrapping_sub(1);
        match elem {
            DistElem::H | DistElem::X => vec![(i, dd - 2 * ii)],
            DistElem::F | DistElem::YStar => vec![(i + 1, ii + 1)],
            DistElem::E => vec![(below, dd - ii + 1)],
            DistElem::Y => vec![(below, 2 * (dd - ii + 1)), (i, 2 * ii - dd)],
            DistElem::Z => vec![(i, 2 * ii - dd), (i + 1, -2 * (ii + 1))],
            DistElem::XStar => vec![(below, ii - dd - 1), (i, dd - 2 * ii), (i + 1, ii + 1)],
            DistElem::ZStar => vec![(below, ii - dd - 1)],
        }
    });
    RepMatrix::new(d, m)
}

/// `φ_d(u)` for an arbitrary `u = αx + βy + γz`, by linearity.
pub fn action_of(d: usize, u: &EquiVec) -> RepMatrix {
    let m = &(&action(d, DistElem::X).matrix.scale(&u.alpha) + &action(d, DistElem::Y).matrix.scale(&u.beta))
        + &action(d, DistElem::Z).matrix.scale(&u.gamma);
    RepMatrix::new(d, m)
}

/// `Σ N^k / k!` for a nilpotent action `N`.
pub fn exp_of(n: &RepMatrix) -> RepMatrix {
    let d = n.d;
    let mut sum = RatMatrix::identity(d + 1);
    let mut power = RatMatrix::identity(d + 1);
    for k in 1..=d {
        power = &power * &n.matrix;
        if power.is_zero() {
            break;
        }
        sum = &sum + &power.scale(&(Scalar::one() / scalar::from_big(&factorial(k))));
    }
    RepMatrix::new(d, sum)
}

pub fn exp_action(d: usize, elem: DistElem) -> Result<RepMatrix> {
    if !elem.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    Ok(exp_of(&action(d, elem)))
}

/// `exp(−φ_d(u))`
pub fn exp_neg_action(d: usize, elem: DistElem) -> Result<RepMatrix> {
    if !elem.is_nilpotent() {
        return Err(Error::NotNilpotent);
    }
    let n = action(d, elem);
    Ok(exp_of(&RepMatrix::new(d, -&n.matrix)))
}

fn ex(d: usize, axis: Axis) -> RepMatrix {
    exp_action(d, DistElem::star(axis)).expect("dual basis is nilpotent")
}

/// `P = exp(φ(x*)) exp(φ(y*))`
pub fn p_map(d: usize) -> RepMatrix {
    ex(d, Axis::X).mul(&ex(d, Axis::Y))
}

/// All three factorizations of `P`.
pub fn p_factorizations(d: usize) -> [RepMatrix; 3] {
    [
        ex(d, Axis::X).mul(&ex(d, Axis::Y)),
        ex(d, Axis::Y).mul(&ex(d, Axis::Z)),
        ex(d, Axis::Z).mul(&ex(d, Axis::X)),
    ]
}

/// `T_x = exp(φ(y*)) exp(φ(z*)) exp(φ(y*))` and its cyclic shifts.
pub fn t_map(d: usize, axis: Axis) -> RepMatrix {
    t_factorizations(d, axis)[0].clone()
}

pub fn t_factorizations(d: usize, axis: Axis) -> [RepMatrix; 2] {
    let (a, b) = match axis {
        Axis::X => (Axis::Y, Axis::Z),
        Axis::Y => (Axis::Z, Axis::X),
        Axis::Z => (Axis::X, Axis::Y),
    };
    [
        ex(d, a).mul(&ex(d, b)).mul(&ex(d, a)),
        ex(d, b).mul(&ex(d, a)).mul(&ex(d, b)),
    ]
}

fn sign(k: usize) -> Scalar {
    if k.is_multiple_of(2) {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn unit(d: usize, i: usize) -> Vec<Scalar> {
    (0..=d).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect()
}

fn scaled(v: &[Scalar], k: &Scalar) -> Vec<Scalar> {
    v.iter().map(|c| c * k).collect()
}

fn sum_columns(m: &RatMatrix) -> Vec<Scalar> {
    (0..m.rows())
        .map(|i| (0..m.cols()).fold(Scalar::zero(), |acc, j| acc + m.get(i, j)))
        .collect()
}

/// Conjugation `A M A⁻¹`.
fn conj(a: &RepMatrix, m: &RepMatrix) -> RepMatrix {
    let inv = a.matrix.inverse().expect("invertible");
    RepMatrix::new(a.d, &(&a.matrix * &m.matrix) * &inv)
}

/// Closed form of `exp(±φ_d(y*))` and `exp(±φ_d(z*))` entries.
pub fn exp_closed_form(d: usize, elem: DistElem, negative: bool) -> Option<RatMatrix> {
    let b = |n: usize, k: usize| scalar::from_big(&binomial(n, k));
    match elem {
        DistElem::YStar => Some(Matrix::from_fn(d + 1, d + 1, |i, j| {
            if j > i {
                Scalar::zero()
            } else if negative {
                sign(i - j) * b(i, j)
            } else {
                b(i, j)
            }
        })),
        DistElem::ZStar => Some(Matrix::from_fn(d + 1, d + 1, |i, j| {
            if i > j {
                Scalar::zero()
            } else if negative {
                b(d - i, j - i)
            } else {
                sign(j - i) * b(d - i, j - i)
            }
        })),
        _ => None,
    }
}

/// Every identity about `V(d)`: brackets, conjugations, the maps `P` and
/// `T`, the three bases and flags, the braid relation and the polynomial model.
pub fn identity_checks(d: usize) -> Report {
    let mut rep = Report::default();
    let dj = json!({ "d": d });
    let minus_one_d = RepMatrix::new(d, RatMatrix::identity(d + 1).scale(&sign(d)));

    let mut integral = true;
    let mut linear = true;
    for e in DistElem::ALL {
        let a = action(d, e);
        integral &= a.is_integral();
        linear &= a == action_of(d, &e.to_equivec());
    }
    rep.push(format!("V({d}): actions are integral"), integral, dj.clone());
    rep.push(format!("V({d}): actions are linear in the element"), linear, dj.clone());

    let mut bad_pairs = Vec::new();
    for u in DistElem::ALL {
        for v in DistElem::ALL {
            let lhs = action(d, u).matrix.commutator(&action(d, v).matrix);
            let rhs = action_of(d, &u.to_equivec().bracket(&v.to_equivec())).matrix;
            if lhs != rhs {
                bad_pairs.push(json!([u.name(), v.name()]));
            }
        }
    }
    rep.push(
        format!("V({d}): bracket homomorphism on 81 pairs"),
        bad_pairs.is_empty(),
        json!({ "d": d, "failures": bad_pairs }),
    );

    let p = p_map(d);
    let rho = |a: Axis| match a {
        Axis::X => Axis::Y,
        Axis::Y => Axis::Z,
        Axis::Z => Axis::X,
    };
    let mut ok = true;
    for a in Axis::ALL {
        ok &= conj(&p, &action(d, DistElem::plain(a))) == action(d, DistElem::plain(rho(a)));
    }
    rep.push(format!("V({d}): P phi(x) P^-1 = phi(y) and cyclic"), ok, dj.clone());
    let mut ok = true;
    for a in Axis::ALL {
        ok &= conj(&p, &action(d, DistElem::star(a))) == action(d, DistElem::star(rho(a)));
    }
    rep.push(format!("V({d}): P phi(x*) P^-1 = phi(y*) and cyclic"), ok, dj.clone());
    let mut ok = true;
    for a in Axis::ALL {
        ok &= conj(&p, &ex(d, a)) == ex(d, rho(a));
    }
    rep.push(format!("V({d}): P exp(phi(x*)) P^-1 = exp(phi(y*)) and cyclic"), ok, dj.clone());
    let mut ok = true;
    for a in Axis::ALL {
        ok &= conj(&p, &t_map(d, a)) == t_map(d, rho(a));
    }
    rep.push(format!("V({d}): P T_x P^-1 = T_y and cyclic"), ok, dj.clone());
    let tx = t_map(d, Axis::X);
    let (phx, phy, phz) = (action(d, DistElem::X), action(d, DistElem::Y), action(d, DistElem::Z));
    let two_x_plus = |m: &RepMatrix| RepMatrix::new(d, &phx.matrix.scale(&int(2)) + &m.matrix);
    let ok = conj(&tx, &phx) == RepMatrix::new(d, -&phx.matrix)
        && conj(&tx, &phy) == two_x_plus(&phz)
        && conj(&tx, &phz) == two_x_plus(&phy);
    rep.push(format!("V({d}): T_x acts on phi(x), phi(y), phi(z) like tau_x"), ok, dj.clone());

    let pf = p_factorizations(d);
    rep.push(
        format!("V({d}): three factorizations of P agree"),
        pf[0] == pf[1] && pf[1] == pf[2],
        dj.clone(),
    );
    for a in Axis::ALL {
        let tf = t_factorizations(d, a);
        rep.push(
            format!("V({d}): two factorizations of T_{} agree", a.name()),
            tf[0] == tf[1],
            dj.clone(),
        );
    }
    let p3 = p.pow(3);
    let squares_agree = Axis::ALL.iter().all(|&a| t_map(d, a).pow(2) == p3);
    rep.push(format!("V({d}): P^3 = T_x^2 = T_y^2 = T_z^2"), squares_agree, dj.clone());
    let central = DistElem::ALL.iter().all(|&e| {
        let m = action(d, e).matrix;
        &p3.matrix * &m == &m * &p3.matrix
    });
    rep.push(format!("V({d}): P^3 commutes with every phi(u)"), central, dj.clone());
    rep.push(format!("V({d}): P^3 = (-1)^d I"), p3 == minus_one_d, dj.clone());

    let mut bad = Vec::new();
    for (elem, neg) in [
        (DistElem::YStar, false),
        (DistElem::YStar, true),
        (DistElem::ZStar, false),
        (DistElem::ZStar, true),
    ] {
        let computed = if neg { exp_neg_action(d, elem) } else { exp_action(d, elem) }.expect("nilpotent");
        if Some(computed.matrix) != exp_closed_form(d, elem, neg) {
            bad.push(json!(format!("{}exp({})", if neg { "-" } else { "" }, elem)));
        }
    }
    rep.push(
        format!("V({d}): binomial closed forms of exp(+-y*), exp(+-z*)"),
        bad.is_empty(),
        json!({ "d": d, "failures": bad }),
    );
    let inverse_pairs = [DistElem::E, DistElem::F, DistElem::XStar, DistElem::YStar, DistElem::ZStar]
        .iter()
        .all(|&e| {
            let prod = exp_action(d, e).expect("nilpotent").mul(&exp_neg_action(d, e).expect("nilpotent"));
            prod.matrix.is_identity()
        });
    rep.push(format!("V({d}): exp(phi(u)) exp(-phi(u)) = I"), inverse_pairs, dj.clone());

    let bad: Vec<usize> = (0..=d)
        .filter(|&i| tx.column(i) != scaled(&unit(d, d - i), &sign(i)))
        .collect();
    rep.push(
        format!("V({d}): T_x v_i = (-1)^i v_(d-i)"),
        bad.is_empty(),
        json!({ "d": d, "failing_i": bad }),
    );

    let p2 = p.pow(2);
    let ey = ex(d, Axis::Y);
    let emz = exp_neg_action(d, DistElem::ZStar).expect("nilpotent");
    let bad: Vec<usize> = (0..=d)
        .filter(|&i| ey.column(i) != scaled(&p2.column(d - i), &sign(d - i)))
        .collect();
    rep.push(
        format!("V({d}): exp(phi(y*)) v_i = (-1)^(d-i) P^2 v_(d-i)"),
        bad.is_empty(),
        json!({ "d": d, "failing_i": bad }),
    );
    let bad: Vec<usize> = (0..=d)
        .filter(|&i| emz.column(i) != scaled(&p.column(d - i), &sign(d - i)))
        .collect();
    rep.push(
        format!("V({d}): exp(-phi(z*)) v_i = (-1)^(d-i) P v_(d-i)"),
        bad.is_empty(),
        json!({ "d": d, "failing_i": bad }),
    );

    let ones: Vec<Scalar> = vec![Scalar::one(); d + 1];
    rep.push(format!("V({d}): P v_0 = sum v_i"), p.column(0) == ones, dj.clone());
    rep.push(format!("V({d}): P^2 v_0 = sum P v_i"), p2.column(0) == sum_columns(&p.matrix), dj.clone());
    rep.push(
        format!("V({d}): (-1)^d v_0 = sum P^2 v_i"),
        scaled(&unit(d, 0), &sign(d)) == sum_columns(&p2.matrix),
        dj.clone(),
    );

    let ident = RatMatrix::identity(d + 1);
    let mut eigen_ok = true;
    for (m, elem) in [(&ident, DistElem::X), (&p.matrix, DistElem::Y), (&p2.matrix, DistElem::Z)] {
        let act = action(d, elem).matrix;
        for i in 0..=d {
            let v = m.column(i);
            eigen_ok &= act.apply(&v) == scaled(&v, &int(d as i64 - 2 * i as i64));
        }
    }
    rep.push(
        format!("V({d}): v_i, P v_i, P^2 v_i are eigenvectors of x, y, z"),
        eigen_ok,
        dj.clone(),
    );

    let bases = [ident.clone(), p.matrix.clone(), p2.matrix.clone()];
    let flags = [
        (DistElem::ZStar, 0usize, 1usize, "z*"),
        (DistElem::XStar, 1, 2, "x*"),
        (DistElem::YStar, 2, 0, "y*"),
    ];
    for (elem, low, high, name) in flags {
        let act = action(d, elem).matrix;
        let mut bad = Vec::new();
        for i in 0..=d {
            let image = act.pow((d - i) as u32);
            let first: Vec<usize> = (0..=i).collect();
            let last: Vec<usize> = (d - i..=d).collect();
            let a = bases[low].select_columns(&first);
            let b = bases[high].select_columns(&last);
            let ok = image.rank() == i + 1 && image.same_column_space(&a) && image.same_column_space(&b);
            if !ok {
                bad.push(i);
            }
        }
        rep.push(
            format!("V({d}): image of phi({name})^(d-i) is the expected flag"),
            bad.is_empty(),
            json!({ "d": d, "failing_i": bad }),
        );
    }

    let s1 = ex(d, Axis::X);
    let s2 = ex(d, Axis::Y);
    rep.push(
        format!("V({d}): braid relation s1 s2 s1 = s2 s1 s2"),
        s1.mul(&s2).mul(&s1) == s2.mul(&s1).mul(&s2),
        dj.clone(),
    );

    let dmat = intertwiner(d);
    let mut bad = Vec::new();
    for e in DistElem::ALL {
        if &dmat.matrix * &action(d, e).matrix != &polynomial_action(d, e).matrix * &dmat.matrix {
            bad.push(e.name());
        }
    }
    rep.push(
        format!("V({d}): D phi(u) = poly(u) D for the polynomial model"),
        bad.is_empty(),
        json!({ "d": d, "failures": bad }),
    );

    let mut mono_ok = true;
    for (basis, elem) in [
        (MonomialBasis::St, DistElem::X),
        (MonomialBasis::Tr, DistElem::Y),
        (MonomialBasis::Rs, DistElem::Z),
    ] {
        let b = monomial_basis(d, basis);
        let act = polynomial_action(d, elem).matrix;
        mono_ok &= b.rank() == d + 1;
        for i in 0..=d {
            let v = b.column(i);
            mono_ok &= act.apply(&v) == scaled(&v, &int(d as i64 - 2 * i as i64));
        }
    }
    rep.push(
        format!("V({d}): monomial bases are eigenbases of x, y, z"),
        mono_ok,
        dj,
    );

    rep
}

/// The derivation action of `elem` on degree-`d` polynomials in the basis
/// `s^i t^(d−i)` (index `i`).
pub fn polynomial_action(d: usize, elem: DistElem) -> RepMatrix {
    // images of s and t as (coefficient of s, coefficient of t)
    let ((ss, st), (ts, tt)): ((i64, i64), (i64, i64)) = match elem {
        DistElem::H | DistElem::X => ((-1, 0), (0, 1)),
        DistElem::Y => ((1, 2), (0, -1)),
        DistElem::Z => ((1, 0), (-2, -1)),
        DistElem::XStar => ((-1, -1), (1, 1)),
        DistElem::YStar | DistElem::F => ((0, 0), (1, 0)),
        DistElem::ZStar => ((0, -1), (0, 0)),
        DistElem::E => ((0, 1), (0, 0)),
    };
    let dd = d as i64;
    let m = from_images(d, |i| {
        let ii = i as i64;
        vec![
            (i, ii * ss + (dd - ii) * tt),
            (i.wrapping_sub(1), ii * st),
            (i + 1, (dd - ii) * ts),
        ]
    });
    RepMatrix::new(d, m)
}

/// `D = diag(binom(d, i))`, sending `v_i` to `binom(d,i) s^i t^(d−i)`.
pub fn intertwiner(d: usize) -> RepMatrix {
    let diag: Vec<Scalar> = (0..=d).map(|i| scalar::from_big(&binomial(d, i))).collect();
    RepMatrix::new(d, RatMatrix::diagonal(&diag))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialBasis {
    /// `s^i t^(d−i)`
    St,
    /// `t^i r^(d−i)`
    Tr,
    /// `r^i s^(d−i)`
    Rs,
}

/// Coefficients of a degree-1 form over `(t, s)`, i.e. the basis index order.
fn linear(var: char) -> [i64; 2] {
    match var {
        't' => [1, 0],
        's' => [0, 1],
        _ => [-1, -1],
    }
}

fn poly_pow_mul(p: &[BigInt], lin: [i64; 2], times: usize) -> Vec<BigInt> {
    let mut cur = p.to_vec();
    for _ in 0..times {
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i] += c * lin[0];
            next[i + 1] += c * lin[1];
        }
        cur = next;
    }
    cur
}

/// Columns are the basis monomials expanded over `s^i t^(d−i)`.
pub fn monomial_basis(d: usize, which: MonomialBasis) -> RatMatrix {
    let (a, b) = match which {
        MonomialBasis::St => ('s', 't'),
        MonomialBasis::Tr => ('t', 'r'),
        MonomialBasis::Rs => ('r', 's'),
    };
    let cols: Vec<Vec<Scalar>> = (0..=d)
        .map(|i| {
            let p = poly_pow_mul(&[BigInt::one()], linear(a), i);
            let p = poly_pow_mul(&p, linear(b), d - i);
            p.iter().map(scalar::from_big).collect()
        })
        .collect();
    Matrix::from_columns(&cols)
}

/// Realises `V(2)` inside sl2 with `v_0 = z*`, `v_1 = x`, `v_2 = y*`,
/// returned as the 3×3 change of basis (columns are equitable coordinates).
pub fn adjoint_embedding() -> RatMatrix {
    let cols: Vec<Vec<Scalar>> = [EquiVec::z_star(), EquiVec::x(), EquiVec::y_star()]
        .iter()
        .map(|v| v.coords().to_vec())
        .collect();
    Matrix::from_columns(&cols)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::psl2::{b_matrix, c_matrix, GenToken};

    fn rat(rows: &[&[i64]]) -> RatMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn small_actions() {
        assert_eq!(action(2, DistElem::X).matrix, rat(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]]));
        for e in DistElem::ALL {
            assert!(action(0, e).matrix.is_zero());
        }
        let xs = action(2, DistElem::XStar);
        assert_eq!(xs.column(0), vec![int(2), int(1), int(0)]);
        assert_eq!(xs.column(1), vec![int(-2), int(0), int(2)]);
    }

    #[test]
    fn exponential_examples() {
        assert_eq!(
            exp_action(2, DistElem::YStar).unwrap().matrix,
            rat(&[&[1, 0, 0], &[1, 1, 0], &[1, 2, 1]])
        );
        let ez = exp_action(2, DistElem::ZStar).unwrap().matrix;
        assert_eq!(*ez.get(0, 1), int(-2));
        assert_eq!(ez, rat(&[&[1, -2, 1], &[0, 1, -1], &[0, 0, 1]]));
        assert_eq!(exp_action(3, DistElem::X), Err(Error::NotNilpotent));
        assert_eq!(exp_action(3, DistElem::H), Err(Error::NotNilpotent));
    }

    #[test]
    fn tx_reverses_with_signs() {
        let t = t_map(3, Axis::X);
        assert_eq!(t.column(1), vec![int(0), int(0), int(-1), int(0)]);
        assert_eq!(p_map(3).pow(3).matrix, RatMatrix::identity(4).scale(&int(-1)));
        assert!(p_map(4).pow(3).matrix.is_identity());
    }

    #[test]
    fn adjoint_case_matches_group_maps() {
        let psi = adjoint_embedding();
        let psi_inv = psi.inverse().unwrap();
        for e in DistElem::ALL {
            let ad = e.to_equivec().ad_matrix();
            assert_eq!(&(&psi_inv * &ad) * &psi, action(2, e).matrix, "{e}");
        }
        let p = &(&psi * &p_map(2).matrix) * &psi_inv;
        assert_eq!(p, c_matrix().hat().to_rational());
        let t = &(&psi * &t_map(2, Axis::X).matrix) * &psi_inv;
        assert_eq!(t, b_matrix().hat().to_rational());
        for (axis, tok) in [(Axis::Y, GenToken::TauY), (Axis::Z, GenToken::TauZ)] {
            let t = &(&psi * &t_map(2, axis).matrix) * &psi_inv;
            assert_eq!(t, tok.matrix().hat().to_rational());
        }
    }

    #[test]
    fn three_sums_in_adjoint_module() {
        // z* + x + y* = x*
        let sum = EquiVec::z_star() + EquiVec::x() + EquiVec::y_star();
        assert_eq!(sum, EquiVec::x_star());
        let psi = adjoint_embedding();
        let pv0 = psi.apply(&p_map(2).column(0));
        assert_eq!(EquiVec::from_array([pv0[0].clone(), pv0[1].clone(), pv0[2].clone()]), EquiVec::x_star());
    }

    #[test]
    fn polynomial_model_small() {
        assert_eq!(polynomial_action(1, DistElem::X).matrix, rat(&[&[1, 0], &[0, -1]]));
        assert!(intertwiner(1).matrix.is_identity());
        assert_eq!(intertwiner(2).matrix, rat(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 1]]));
        for e in DistElem::ALL {
            assert_eq!(polynomial_action(1, e), action(1, e), "{e}");
        }
    }

    #[test]
    fn intertwiner_forced_by_y_star() {
        // c_{i+1} = c_i (d−i)/(i+1) with c_0 = 1
        for d in 0..=12usize {
            let mut c = Scalar::one();
            for i in 0..=d {
                assert_eq!(*intertwiner(d).matrix.get(i, i), c);
                c = c * int((d - i) as i64) / int(i as i64 + 1);
            }
        }
    }

    #[test]
    fn st_basis_is_standard() {
        assert!(monomial_basis(4, MonomialBasis::St).is_identity());
        // t r = -t s - t^2
        assert_eq!(monomial_basis(2, MonomialBasis::Tr).column(1), vec![int(-1), int(-1), int(0)]);
    }

    #[test]
    fn identity_checks_pass_to_twelve() {
        for d in 0..=12 {
            let rep = identity_checks(d);
            for r in rep.iter() {
                assert!(r.passed(), "{} failed: {}", r.check, r.witness);
            }
        }
    }

    #[test]
    fn parse_elements() {
        assert_eq!("x*".parse::<DistElem>().unwrap(), DistElem::XStar);
        assert_eq!("h".parse::<DistElem>().unwrap(), DistElem::H);
        assert!("w".parse::<DistElem>().is_err());
    }

    #[test]
    fn json_rows_are_strings() {
        let j = action(1, DistElem::XStar).to_json();
        assert_eq!(j, json!([["1", "-1"], ["1", "-1"]]));
    }
}
