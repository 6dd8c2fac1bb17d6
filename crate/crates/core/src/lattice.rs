//! The root lattice `L = ℤx ⊕ ℤy ⊕ ℤz` and its real roots.
//!
//! A real root is a lattice vector of square norm 2. Every real root is
//! `g(x)` for a unique `g ∈ G`, and [`descent`] finds that `g` as a word by
//! repeatedly applying whichever of `τx, τy, τz` lowers the height.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;
use serde_json::{json, Value};

use crate::equitable::EquiVec;
use crate::error::{Error, Result};
use crate::psl2::{GenToken, GroupWord};
use crate::scalar::{self, int_json};

/// `αx + βy + γz` with integer coordinates. Orders lexicographically on `(α, β, γ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeVec {
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
}

impl LatticeVec {
    pub fn new(alpha: BigInt, beta: BigInt, gamma: BigInt) -> Self {
        LatticeVec { alpha, beta, gamma }
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        LatticeVec::new(a.into(), b.into(), c.into())
    }

    pub fn from_array(c: [BigInt; 3]) -> Self {
        let [alpha, beta, gamma] = c;
        LatticeVec { alpha, beta, gamma }
    }

    pub fn x() -> Self {
        LatticeVec::from_ints(1, 0, 0)
    }

    pub fn y() -> Self {
        LatticeVec::from_ints(0, 1, 0)
    }

    pub fn z() -> Self {
        LatticeVec::from_ints(0, 0, 1)
    }

    pub fn zero() -> Self {
        LatticeVec::from_ints(0, 0, 0)
    }

    pub fn coords(&self) -> [BigInt; 3] {
        [self.alpha.clone(), self.beta.clone(), self.gamma.clone()]
    }

    pub fn is_zero(&self) -> bool {
        self.alpha.is_zero() && self.beta.is_zero() && self.gamma.is_zero()
    }

    pub fn neg(&self) -> Self {
        LatticeVec::new(-&self.alpha, -&self.beta, -&self.gamma)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        LatticeVec::new(&self.alpha * k, &self.beta * k, &self.gamma * k)
    }

    pub fn height(&self) -> BigInt {
        &self.alpha + &self.beta + &self.gamma
    }

    /// gcd of the coordinates; zero for the zero vector.
    pub fn content(&self) -> BigInt {
        self.alpha.gcd(&self.beta).gcd(&self.gamma)
    }

    /// Square norm `(u,u)` under the trace form.
    pub fn norm(&self) -> BigInt {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        (a * a + b * b + c * c - (a * b + b * c + c * a) * 2) * 2
    }

    /// Trace form `(u,v)`.
    pub fn dot(&self, o: &LatticeVec) -> BigInt {
        let s = &self.alpha * &o.alpha + &self.beta * &o.beta + &self.gamma * &o.gamma;
        let t = self.height() * o.height();
        s * 4 - t * 2
    }

    /// Five expressions that each equal `(u,u)/2`.
    pub fn norm_five_ways(&self) -> [BigInt; 5] {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        let sq = |v: BigInt| &v * &v;
        let four = BigInt::from(4);
        [
            a * a + b * b + c * c - (a * b + b * c + c * a) * 2,
            (a * a + b * b + c * c) * 2 - sq(a + b + c),
            sq(a + b - c) - &four * a * b,
            sq(b + c - a) - &four * b * c,
            sq(c + a - b) - &four * c * a,
        ]
    }

    /// `τx : (α,β,γ) ↦ (2β+2γ−α, γ, β)`
    pub fn tau_x(&self) -> Self {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        LatticeVec::new((b + c) * 2 - a, c.clone(), b.clone())
    }

    /// `τy = ρ τx ρ⁻¹ : (α,β,γ) ↦ (γ, 2γ+2α−β, α)`
    pub fn tau_y(&self) -> Self {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        LatticeVec::new(c.clone(), (c + a) * 2 - b, a.clone())
    }

    /// `τz = ρ⁻¹ τx ρ : (α,β,γ) ↦ (β, α, 2α+2β−γ)`
    pub fn tau_z(&self) -> Self {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        LatticeVec::new(b.clone(), a.clone(), (a + b) * 2 - c)
    }

    /// `ρ : x ↦ y ↦ z ↦ x`
    pub fn rho(&self) -> Self {
        LatticeVec::new(self.gamma.clone(), self.alpha.clone(), self.beta.clone())
    }

    pub fn reflect_x(&self) -> Self {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        LatticeVec::new((b + c) * 2 - a, b.clone(), c.clone())
    }

    pub fn reflect_y(&self) -> Self {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        LatticeVec::new(a.clone(), (a + c) * 2 - b, c.clone())
    }

    pub fn reflect_z(&self) -> Self {
        let (a, b, c) = (&self.alpha, &self.beta, &self.gamma);
        LatticeVec::new(a.clone(), b.clone(), (a + b) * 2 - c)
    }

    pub fn to_equivec(&self) -> EquiVec {
        EquiVec::new(
            scalar::from_big(&self.alpha),
            scalar::from_big(&self.beta),
            scalar::from_big(&self.gamma),
        )
    }

    pub fn from_equivec(u: &EquiVec) -> Result<Self> {
        Ok(LatticeVec::new(
            scalar::to_integer(&u.alpha)?,
            scalar::to_integer(&u.beta)?,
            scalar::to_integer(&u.gamma)?,
        ))
    }

    /// Off-diagonal entries of the 2×2 matrix are even for every vector of `L`.
    pub fn has_even_off_diagonal(&self) -> bool {
        let m = self.to_equivec().to_matrix();
        m.q.is_integer() && m.r.is_integer() && m.q.to_integer().is_even() && m.r.to_integer().is_even()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(self.coords().iter().map(int_json).collect())
    }

    pub fn classify(&self) -> RootInfo {
        classify(self)
    }
}

impl fmt::Display for LatticeVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_equivec().fmt(f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RootClass {
    Real,
    Isotropic,
    NegativeNorm,
    NonRootPositiveNorm,
}

impl RootClass {
    pub fn name(self) -> &'static str {
        match self {
            RootClass::Real => "real",
            RootClass::Isotropic => "isotropic",
            RootClass::NegativeNorm => "negative-norm",
            RootClass::NonRootPositiveNorm => "non-root-positive-norm",
        }
    }
}

/// Which simple root a real root is Weyl-conjugate to, read off from
/// the single odd coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ParityClass {
    Wx,
    Wy,
    Wz,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInfo {
    pub norm: BigInt,
    pub height: BigInt,
    pub class: RootClass,
    pub parity: Option<ParityClass>,
    /// Set only for the zero vector, which is reported as a non-root.
    pub is_zero: bool,
}

pub fn classify(u: &LatticeVec) -> RootInfo {
    let norm = u.norm();
    let height = u.height();
    let is_zero = u.is_zero();
    let two = BigInt::from(2);
    let class = if is_zero {
        RootClass::NonRootPositiveNorm
    } else if norm == two {
        RootClass::Real
    } else if norm.is_zero() {
        RootClass::Isotropic
    } else if norm.is_negative() {
        RootClass::NegativeNorm
    } else {
        RootClass::NonRootPositiveNorm
    };
    let parity = (class == RootClass::Real).then(|| {
        match (u.alpha.is_odd(), u.beta.is_odd(), u.gamma.is_odd()) {
            (true, _, _) => ParityClass::Wx,
            (_, true, _) => ParityClass::Wy,
            _ => ParityClass::Wz,
        }
    });
    RootInfo {
        norm,
        height,
        class,
        parity,
        is_zero,
    }
}

/// Finds `w` with `w(x) = u` for a real root `u`.
///
/// Negative roots reduce to positive ones through `w(−x) = −w(x)` and
/// `τx(x) = −x`. A positive root other than `x, y, z` always has a `τ` that
/// strictly lowers its height; ties go to `τx`, then `τy`, then `τz`.
pub fn descent(u: &LatticeVec) -> Result<GroupWord> {
    let norm = u.norm();
    if norm != BigInt::from(2) {
        return Err(Error::NotRealRoot { norm });
    }
    if u.height().is_negative() {
        let mut w = descent(&u.neg())?;
        w.0.push(GenToken::TauX);
        return Ok(w);
    }
    let mut tokens = Vec::new();
    let mut v = u.clone();
    loop {
        if v == LatticeVec::x() {
            break;
        }
        if v == LatticeVec::y() {
            tokens.push(GenToken::Rho);
            break;
        }
        if v == LatticeVec::z() {
            tokens.push(GenToken::Rho2);
            break;
        }
        let current = v.height();
        let (tok, next) = [
            (GenToken::TauX, v.tau_x()),
            (GenToken::TauY, v.tau_y()),
            (GenToken::TauZ, v.tau_z()),
        ]
        .into_iter()
        .min_by_key(|(_, w)| w.height())
        .expect("three candidates");
        assert!(next.height() < current, "no descending step from {v}");
        tokens.push(tok);
        v = next;
    }
    Ok(GroupWord::new(tokens))
}

/// One step of replaying a word on `x`, innermost token first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayStep {
    pub token: GenToken,
    pub image: LatticeVec,
}

/// Applies the tokens of `w` to `x` from right to left, recording each image.
pub fn replay(w: &GroupWord) -> Vec<ReplayStep> {
    let mut v = LatticeVec::x();
    let mut steps = Vec::with_capacity(w.len());
    for &t in w.tokens().iter().rev() {
        v = t.matrix().hat().apply(&v);
        steps.push(ReplayStep {
            token: t,
            image: v.clone(),
        });
    }
    steps
}

/// Image of `x` under the group element a word names.
pub fn image_of_x(w: &GroupWord) -> LatticeVec {
    w.to_matrix().hat().apply(&LatticeVec::x())
}

/// Real roots of height at most `max_height` in absolute value, by
/// closing `{x, y, z}` under the `τ` maps and negation. Sorted.
pub fn enumerate_real(max_height: u64) -> Vec<LatticeVec> {
    let bound = BigInt::from(max_height);
    let mut seen: BTreeSet<LatticeVec> = BTreeSet::new();
    let mut queue: VecDeque<LatticeVec> = VecDeque::new();
    for s in [LatticeVec::x(), LatticeVec::y(), LatticeVec::z()] {
        if max_height >= 1 && seen.insert(s.clone()) {
            queue.push_back(s);
        }
    }
    while let Some(v) = queue.pop_front() {
        for w in [v.tau_x(), v.tau_y(), v.tau_z(), v.neg()] {
            if w.height().abs() <= bound && !seen.contains(&w) {
                seen.insert(w.clone());
                queue.push_back(w);
            }
        }
    }
    seen.into_iter().collect()
}

/// Every vector of norm 2 with all coordinates in `[-bound, bound]`. Sorted.
pub fn brute_force_real(bound: i64) -> Vec<LatticeVec> {
    brute_force_norm(bound, 2)
}

pub(crate) fn brute_force_norm(bound: i64, target: i64) -> Vec<LatticeVec> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                let half = a * a + b * b + c * c - 2 * (a * b + b * c + c * a);
                if 2 * half == target && (target != 0 || (a, b, c) != (0, 0, 0)) {
                    out.push(LatticeVec::from_ints(a, b, c));
                }
            }
        }
    }
    out
}

pub fn in_box(u: &LatticeVec, bound: i64) -> bool {
    let b = BigInt::from(bound);
    u.coords().iter().all(|c| c.abs() <= b)
}

/// `{"vector":[a,b,g],"norm":n,"height":h,"class":"real","word":"ty r2"}`;
/// the word is present only for real roots.
pub fn root_json(u: &LatticeVec) -> Value {
    let info = classify(u);
    let mut obj = json!({
        "vector": u.to_json(),
        "norm": int_json(&info.norm),
        "height": int_json(&info.height),
        "class": info.class.name(),
    });
    if let Some(p) = info.parity {
        obj["parity"] = json!(p);
    }
    if info.is_zero {
        obj["zero"] = Value::Bool(true);
    }
    if info.class == RootClass::Real {
        let w = descent(u).expect("real root");
        obj["word"] = Value::String(w.to_string());
    }
    obj
}

/// Sign of the coordinates of a real root; all share it.
pub fn coefficient_sign(u: &LatticeVec) -> i8 {
    let c = u.coords();
    if c.iter().all(|v| !v.is_negative()) {
        1
    } else if c.iter().all(|v| !v.is_positive()) {
        -1
    } else {
        0
    }
}

/// Exactly one odd coordinate.
pub fn has_single_odd_coordinate(u: &LatticeVec) -> bool {
    u.coords().iter().filter(|c| c.is_odd()).count() == 1
}

/// `2(α²+β²+γ²) − (α+β+γ)²`
pub fn quadratic_form(u: &LatticeVec) -> BigInt {
    let (a, b, c) = (&u.alpha, &u.beta, &u.gamma);
    let h = u.height();
    (a * a + b * b + c * c) * 2 - &h * &h
}
