//! The equitable basis `{x, y, z}` of sl2 and its dual `{x*, y*, z*}`.
//!
//! Elements are stored by their coordinates over `x, y, z`; the 2×2 matrix
//! picture and the dual-basis picture are conversions. The defining products
//! are `[x,y] = 2x+2y`, `[y,z] = 2y+2z`, `[z,x] = 2z+2x`, and the trace
//! form `(u,v) = tr(uv)` has Gram matrix [`gram`] on `x, y, z`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Matrix, RatMatrix};
use crate::scalar::{self, frac, int, Scalar};

/// An element `αx + βy + γz` of sl2.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EquiVec {
    #[serde(with = "scalar::as_string")]
    pub alpha: Scalar,
    #[serde(with = "scalar::as_string")]
    pub beta: Scalar,
    #[serde(with = "scalar::as_string")]
    pub gamma: Scalar,
}

impl EquiVec {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar) -> Self {
        EquiVec { alpha, beta, gamma }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        EquiVec::new(int(a), int(b), int(c))
    }

    pub fn from_array(c: [Scalar; 3]) -> Self {
        let [alpha, beta, gamma] = c;
        EquiVec { alpha, beta, gamma }
    }

    pub fn zero() -> Self {
        EquiVec::from_ints(0, 0, 0)
    }

    pub fn x() -> Self {
        EquiVec::from_ints(1, 0, 0)
    }

    pub fn y() -> Self {
        EquiVec::from_ints(0, 1, 0)
    }

    pub fn z() -> Self {
        EquiVec::from_ints(0, 0, 1)
    }

    /// `x* = -(y+z)/2`
    pub fn x_star() -> Self {
        EquiVec::new(int(0), frac(-1, 2), frac(-1, 2))
    }

    /// `y* = -(z+x)/2`
    pub fn y_star() -> Self {
        EquiVec::new(frac(-1, 2), int(0), frac(-1, 2))
    }

    /// `z* = -(x+y)/2`
    pub fn z_star() -> Self {
        EquiVec::new(frac(-1, 2), frac(-1, 2), int(0))
    }

    /// `e = [[0,1],[0,0]]`
    pub fn e() -> Self {
        EquiVec::new(frac(1, 2), frac(1, 2), int(0))
    }

    /// `f = [[0,0],[1,0]]`, which is `y*`.
    pub fn f() -> Self {
        EquiVec::y_star()
    }

    /// `h = diag(1,-1)`, which is `x`.
    pub fn h() -> Self {
        EquiVec::x()
    }

    pub fn coords(&self) -> [Scalar; 3] {
        [self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        EquiVec::new(&self.alpha * k, &self.beta * k, &self.gamma * k)
    }

    /// The 2×2 traceless matrix this element stands for.
    pub fn to_matrix(&self) -> Mat2 {
        // x = h, y = 2e - h, z = -2f - h
        let diag = &self.alpha - &self.beta - &self.gamma;
        Mat2 {
            p: diag.clone(),
            q: &self.beta * int(2),
            r: &self.gamma * int(-2),
            s: -diag,
        }
    }

    pub fn from_matrix(m: &Mat2) -> Result<Self> {
        let tr = m.trace();
        if !tr.is_zero() {
            return Err(Error::NonzeroTrace(tr));
        }
        let beta = &m.q / int(2);
        let gamma = &m.r / int(-2);
        let alpha = &m.p + &beta + &gamma;
        Ok(EquiVec::new(alpha, beta, gamma))
    }

    /// Lie bracket from the structure constants of the equitable basis.
    pub fn bracket(&self, other: &Self) -> Self {
        let xy = &self.alpha * &other.beta - &self.beta * &other.alpha;
        let yz = &self.beta * &other.gamma - &self.gamma * &other.beta;
        let zx = &self.gamma * &other.alpha - &self.alpha * &other.gamma;
        let two = int(2);
        EquiVec::new(
            (&xy + &zx) * &two,
            (&xy + &yz) * &two,
            (&yz + &zx) * &two,
        )
    }

    /// Trace form `(u,v) = tr(uv)`, evaluated through the Gram matrix.
    pub fn trace_form(&self, other: &Self) -> Scalar {
        let a = gram();
        let u = self.coords();
        let v = other.coords();
        let av = a.apply(&v);
        u.iter().zip(&av).fold(Scalar::zero(), |acc, (p, q)| acc + p * q)
    }

    /// Killing form `tr(ad u ad v)`, four times the trace form.
    pub fn killing_form(&self, other: &Self) -> Scalar {
        self.trace_form(other) * int(4)
    }

    /// Coordinates over the dual basis `x*, y*, z*`.
    pub fn dual_coords(&self) -> [Scalar; 3] {
        // x = x* - y* - z*, and cyclically
        [
            &self.alpha - &self.beta - &self.gamma,
            &self.beta - &self.gamma - &self.alpha,
            &self.gamma - &self.alpha - &self.beta,
        ]
    }

    pub fn from_dual_coords(c: &[Scalar; 3]) -> Self {
        EquiVec::x_star().scale(&c[0]) + EquiVec::y_star().scale(&c[1]) + EquiVec::z_star().scale(&c[2])
    }

    /// `ad u` as a 3×3 matrix, columns are `[u,x], [u,y], [u,z]`.
    pub fn ad_matrix(&self) -> RatMatrix {
        let cols: Vec<Vec<Scalar>> = basis()
            .iter()
            .map(|b| self.bracket(b).coords().to_vec())
            .collect();
        Matrix::from_columns(&cols)
    }

    /// Square-zero test on the 2×2 matrix.
    pub fn is_nilpotent(&self) -> bool {
        let m = self.to_matrix();
        m.mul(&m).is_zero()
    }

    /// `exp(ad u) = I + ad u + (ad u)²/2` for nilpotent `u`, in column convention.
    pub fn exp_ad(&self) -> Result<RatMatrix> {
        if !self.is_nilpotent() {
            return Err(Error::NotNilpotent);
        }
        let ad = self.ad_matrix();
        let sq = (&ad * &ad).scale(&frac(1, 2));
        Ok(&(&RatMatrix::identity(3) + &ad) + &sq)
    }

    /// Applies a 3×3 column-convention matrix to this element.
    pub fn transform(&self, m: &RatMatrix) -> Self {
        let v = m.apply(&self.coords());
        EquiVec::from_array([v[0].clone(), v[1].clone(), v[2].clone()])
    }
}

/// Labels for the three equitable basis vectors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }

    pub fn basis(self) -> EquiVec {
        basis()[self.index()].clone()
    }

    pub fn dual(self) -> EquiVec {
        dual_basis()[self.index()].clone()
    }
}

impl std::str::FromStr for Axis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            "z" => Ok(Axis::Z),
            other => Err(Error::UnknownElement(other.to_string())),
        }
    }
}

pub fn basis() -> [EquiVec; 3] {
    [EquiVec::x(), EquiVec::y(), EquiVec::z()]
}

pub fn dual_basis() -> [EquiVec; 3] {
    [EquiVec::x_star(), EquiVec::y_star(), EquiVec::z_star()]
}

/// Gram matrix of the trace form on `x, y, z`: 2 on the diagonal, -2 elsewhere.
pub fn gram() -> RatMatrix {
    Matrix::from_fn(3, 3, |i, j| if i == j { int(2) } else { int(-2) })
}

/// Gram matrix of the trace form on `x*, y*, z*`; equals `4 gram()⁻¹`.
pub fn dual_gram() -> RatMatrix {
    let d = dual_basis();
    Matrix::from_fn(3, 3, |i, j| d[i].trace_form(&d[j]))
}

/// Columns are `x*, y*, z*` in equitable coordinates.
pub fn dual_change_of_basis() -> RatMatrix {
    let cols: Vec<Vec<Scalar>> = dual_basis().iter().map(|v| v.coords().to_vec()).collect();
    Matrix::from_columns(&cols)
}

impl Add for EquiVec {
    type Output = EquiVec;
    fn add(self, o: EquiVec) -> EquiVec {
        EquiVec::new(self.alpha + o.alpha, self.beta + o.beta, self.gamma + o.gamma)
    }
}

impl Sub for EquiVec {
    type Output = EquiVec;
    fn sub(self, o: EquiVec) -> EquiVec {
        EquiVec::new(self.alpha - o.alpha, self.beta - o.beta, self.gamma - o.gamma)
    }
}

impl Neg for EquiVec {
    type Output = EquiVec;
    fn neg(self) -> EquiVec {
        EquiVec::new(-self.alpha, -self.beta, -self.gamma)
    }
}

impl Mul<EquiVec> for Scalar {
    type Output = EquiVec;
    fn mul(self, v: EquiVec) -> EquiVec {
        v.scale(&self)
    }
}

fn write_combination(f: &mut fmt::Formatter<'_>, coeffs: &[Scalar; 3], names: [&str; 3]) -> fmt::Result {
    let mut first = true;
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        let sign = if c.is_negative() { "-" } else if first { "" } else { "+" };
        let mag = if mag.is_one() { String::new() } else { mag.to_string() };
        write!(f, "{sign}{mag}{name}")?;
        first = false;
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

/// Prints `2x+z`, `-y`, `0`, ...
impl fmt::Display for EquiVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.coords(), ["x", "y", "z"])
    }
}

/// Displays an element over the dual basis, e.g. `6x*+3y*-2z*`.
pub struct DualDisplay<'a>(pub &'a EquiVec);

impl fmt::Display for DualDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, &self.0.dual_coords(), ["x*", "y*", "z*"])
    }
}

/// A 2×2 matrix `[[p, q], [r, s]]` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat2 {
    pub p: Scalar,
    pub q: Scalar,
    pub r: Scalar,
    pub s: Scalar,
}

impl Mat2 {
    pub fn new(p: Scalar, q: Scalar, r: Scalar, s: Scalar) -> Self {
        Mat2 { p, q, r, s }
    }

    pub fn from_ints(p: i64, q: i64, r: i64, s: i64) -> Self {
        Mat2::new(int(p), int(q), int(r), int(s))
    }

    pub fn identity() -> Self {
        Mat2::from_ints(1, 0, 0, 1)
    }

    pub fn trace(&self) -> Scalar {
        &self.p + &self.s
    }

    pub fn det(&self) -> Scalar {
        &self.p * &self.s - &self.q * &self.r
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero() && self.r.is_zero() && self.s.is_zero()
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        Mat2::new(
            &self.p * &o.p + &self.q * &o.r,
            &self.p * &o.q + &self.q * &o.s,
            &self.r * &o.p + &self.s * &o.r,
            &self.r * &o.q + &self.s * &o.s,
        )
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        Mat2::new(&self.p - &o.p, &self.q - &o.q, &self.r - &o.r, &self.s - &o.s)
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        Mat2::new(&self.p + &o.p, &self.q + &o.q, &self.r + &o.r, &self.s + &o.s)
    }

    pub fn commutator(&self, o: &Mat2) -> Mat2 {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        let inv = det.recip();
        Ok(Mat2::new(
            &self.s * &inv,
            -&self.q * &inv,
            -&self.r * &inv,
            &self.p * &inv,
        ))
    }

    /// True when every entry is an integer.
    pub fn is_integral(&self) -> bool {
        [&self.p, &self.q, &self.r, &self.s].iter().all(|v| v.is_integer())
    }
}
