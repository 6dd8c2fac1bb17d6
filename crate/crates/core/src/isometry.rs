//! Isometries of the root lattice.
//!
//! `Isom(L) = ⟨(y z), −1⟩ ⋉ G = ±S₃ ⋉ W`. Membership in `G` is decided by
//! running [`descent`] on the image of `x` (the action of `G` on real roots
//! is simply transitive), and membership in the even Weyl subgroup `W⁺`
//! adds the condition that the image in `G/W⁺ ≅ S₃` is trivial.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::equitable::{self, Axis, EquiVec};
use crate::error::{Error, Result};
use crate::lattice::{descent, LatticeVec};
use crate::linalg::{IntMatrix, Matrix, RatMatrix};
use crate::psl2::{GenToken, GroupWord, NfLetter};
use crate::report::Report;

/// A 3×3 integer matrix on equitable coordinates, column `j` the image of
/// the `j`-th basis vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Iso3(IntMatrix);

impl Iso3 {
    pub fn from_rows(rows: [[i64; 3]; 3]) -> Self {
        Iso3(Matrix::from_fn(3, 3, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn from_columns(cols: &[Vec<BigInt>]) -> Self {
        assert_eq!(cols.len(), 3);
        Iso3(Matrix::from_columns(cols))
    }

    pub fn from_matrix(m: IntMatrix) -> Result<Self> {
        if m.rows() != 3 || m.cols() != 3 {
            return Err(Error::NotIsometry);
        }
        Ok(Iso3(m))
    }

    pub fn identity() -> Self {
        Iso3(IntMatrix::identity(3))
    }

    pub fn minus_identity() -> Self {
        Iso3(-&IntMatrix::identity(3))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.0.to_rational()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn mul(&self, o: &Iso3) -> Iso3 {
        Iso3(&self.0 * &o.0)
    }

    pub fn neg(&self) -> Iso3 {
        Iso3(-&self.0)
    }

    pub fn pow(&self, e: u32) -> Iso3 {
        Iso3(self.0.pow(e))
    }

    pub fn det(&self) -> BigInt {
        self.0.det()
    }

    /// Integer inverse through the adjugate; needs `det = ±1`.
    pub fn inverse(&self) -> Result<Iso3> {
        let det = self.det();
        if det.abs() != BigInt::one() {
            return Err(Error::NotIsometry);
        }
        let m = &self.0;
        let cof = |i: usize, j: usize| {
            let r: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let c: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let minor = m.get(r[0], c[0]) * m.get(r[1], c[1]) - m.get(r[0], c[1]) * m.get(r[1], c[0]);
            if (i + j).is_multiple_of(2) {
                minor
            } else {
                -minor
            }
        };
        Ok(Iso3(Matrix::from_fn(3, 3, |i, j| cof(j, i) * &det)))
    }

    pub fn apply(&self, v: &LatticeVec) -> LatticeVec {
        let out = self.0.apply(&v.coords());
        LatticeVec::new(out[0].clone(), out[1].clone(), out[2].clone())
    }

    pub fn apply_equivec(&self, v: &EquiVec) -> EquiVec {
        v.transform(&self.to_rational())
    }

    /// `MᵗAM = A` for the trace-form Gram matrix `A`.
    pub fn preserves_gram(&self) -> bool {
        let a = gram_int();
        &(&self.0.transpose() * &a) * &self.0 == a
    }

    pub fn perm(p: Perm3) -> Iso3 {
        Iso3(Matrix::from_fn(3, 3, |i, j| {
            if p.0[j] as usize == i {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        }))
    }

    /// Whether `M[u,v] = [Mu,Mv]` on the basis (automorphism) as opposed to
    /// `M[u,v] = [Mv,Mu]` (antiautomorphism). `None` if neither.
    pub fn bracket_behaviour(&self) -> Option<bool> {
        let m = self.to_rational();
        let b = equitable::basis();
        let mut auto = true;
        let mut anti = true;
        for i in 0..3 {
            for j in 0..3 {
                let lhs = b[i].bracket(&b[j]).transform(&m);
                let mu = b[i].transform(&m);
                let mv = b[j].transform(&m);
                auto &= lhs == mu.bracket(&mv);
                anti &= lhs == mv.bracket(&mu);
            }
        }
        match (auto, anti) {
            (true, _) => Some(true),
            (false, true) => Some(false),
            _ => None,
        }
    }

    /// Whether the matrix maps `L* = ℤx* ⊕ ℤy* ⊕ ℤz*` onto itself, tested by
    /// integrality of images in the 2×2 picture (`L*` is `sl₂(ℤ)`).
    pub fn preserves_dual_lattice(&self) -> bool {
        let Ok(inv) = self.inverse() else {
            return false;
        };
        [self, &inv].iter().all(|m| {
            equitable::dual_basis()
                .iter()
                .all(|u| m.apply_equivec(u).to_matrix().is_integral())
        })
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Vec<Value>> = self
            .0
            .to_rows()
            .iter()
            .map(|r| r.iter().map(crate::scalar::int_json).collect())
            .collect();
        json!(rows)
    }
}

impl fmt::Debug for Iso3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Iso3{:?}", self.0)
    }
}

fn gram_int() -> IntMatrix {
    Matrix::from_fn(3, 3, |i, j| BigInt::from(if i == j { 2 } else { -2 }))
}

/// True iff `M` preserves the trace form and has an integer inverse.
pub fn is_isometry_of_l(m: &IntMatrix) -> bool {
    if m.rows() != 3 || m.cols() != 3 {
        return false;
    }
    let iso = Iso3(m.clone());
    iso.det().abs().is_one() && iso.preserves_gram()
}

/// A permutation of the labels `x, y, z` (indices 0, 1, 2); entry `i` is the image of `i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm3(pub [u8; 3]);

impl Perm3 {
    pub const IDENTITY: Perm3 = Perm3([0, 1, 2]);
    /// `(x y)`
    pub const SWAP_XY: Perm3 = Perm3([1, 0, 2]);
    /// `(y z)`
    pub const SWAP_YZ: Perm3 = Perm3([0, 2, 1]);
    /// `(z x)`
    pub const SWAP_ZX: Perm3 = Perm3([2, 1, 0]);
    /// `(x y z)`, the label action of `ρ`
    pub const CYCLE: Perm3 = Perm3([1, 2, 0]);
    /// `(x z y)`
    pub const CYCLE2: Perm3 = Perm3([2, 0, 1]);

    pub const ALL: [Perm3; 6] = [
        Perm3::IDENTITY,
        Perm3::SWAP_XY,
        Perm3::SWAP_YZ,
        Perm3::SWAP_ZX,
        Perm3::CYCLE,
        Perm3::CYCLE2,
    ];

    /// `self ∘ other`: apply `other` first.
    pub fn compose(self, other: Perm3) -> Perm3 {
        Perm3([
            self.0[other.0[0] as usize],
            self.0[other.0[1] as usize],
            self.0[other.0[2] as usize],
        ])
    }

    pub fn inverse(self) -> Perm3 {
        let mut inv = [0u8; 3];
        for (i, &p) in self.0.iter().enumerate() {
            inv[p as usize] = i as u8;
        }
        Perm3(inv)
    }

    pub fn is_identity(self) -> bool {
        self == Perm3::IDENTITY
    }

    pub fn sign(self) -> i8 {
        let fixed = (0..3).filter(|&i| self.0[i] == i as u8).count();
        if fixed == 1 {
            -1
        } else {
            1
        }
    }

    pub fn matrix(self) -> Iso3 {
        Iso3::perm(self)
    }
}

impl fmt::Display for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const NAMES: [&str; 3] = ["x", "y", "z"];
        if self.is_identity() {
            return f.write_str("()");
        }
        if self.sign() < 0 {
            let moved: Vec<&str> = (0..3).filter(|&i| self.0[i] != i as u8).map(|i| NAMES[i]).collect();
            return write!(f, "({} {})", moved[0], moved[1]);
        }
        let a = 0usize;
        let b = self.0[a] as usize;
        let c = self.0[b] as usize;
        write!(f, "({} {} {})", NAMES[a], NAMES[b], NAMES[c])
    }
}

impl fmt::Debug for Perm3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `r_u(v) = v − (u,v)u` for a simple root `u`.
pub fn simple_reflection(axis: Axis) -> Iso3 {
    let u = match axis {
        Axis::X => LatticeVec::x(),
        Axis::Y => LatticeVec::y(),
        Axis::Z => LatticeVec::z(),
    };
    let cols: Vec<Vec<BigInt>> = [LatticeVec::x(), LatticeVec::y(), LatticeVec::z()]
        .iter()
        .map(|v| {
            let k = u.dot(v);
            let img = LatticeVec::new(&v.alpha - &k * &u.alpha, &v.beta - &k * &u.beta, &v.gamma - &k * &u.gamma);
            img.coords().to_vec()
        })
        .collect();
    Iso3::from_columns(&cols)
}

pub fn token_matrix(t: GenToken) -> Iso3 {
    t.matrix().hat()
}

pub fn word_matrix(w: &GroupWord) -> Iso3 {
    w.to_matrix().hat()
}

/// Returns the word `w` with `hat(w) = M`, or `None` when `M ∉ G`.
pub fn membership_g(m: &Iso3) -> Option<GroupWord> {
    let v = m.apply(&LatticeVec::x());
    let w = descent(&v).ok()?;
    (word_matrix(&w) == *m).then_some(w)
}

/// Image in `G/W⁺ ≅ S₃`: `τx ↦ (y z)`, `τy ↦ (z x)`, `τz ↦ (x y)`, `ρ ↦ (x y z)`.
pub fn s3_quotient(w: &GroupWord) -> Perm3 {
    w.tokens()
        .iter()
        .flat_map(|t| t.letters())
        .fold(Perm3::IDENTITY, |acc, l| {
            acc.compose(match l {
                NfLetter::B => Perm3::SWAP_YZ,
                NfLetter::C => Perm3::CYCLE,
                NfLetter::C2 => Perm3::CYCLE2,
            })
        })
}

/// Membership in the even-length Weyl subgroup.
pub fn in_w_plus(m: &Iso3) -> bool {
    membership_g(m).is_some_and(|w| s3_quotient(&w).is_identity())
}

/// `M = sign · swap · hat(word)` with `sign = ±1` and `swap ∈ {1, (y z)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoDecomp {
    pub sign: i8,
    pub swap: bool,
    pub word: GroupWord,
}

impl IsoDecomp {
    pub fn recompose(&self) -> Iso3 {
        let mut m = word_matrix(&self.word);
        if self.swap {
            m = Perm3::SWAP_YZ.matrix().mul(&m);
        }
        if self.sign < 0 {
            m = m.neg();
        }
        m
    }

    /// Automorphism of sl2 iff `sign · sign(swap) = +1`.
    pub fn is_automorphism(&self) -> bool {
        let s = if self.swap { -1 } else { 1 };
        self.sign * s == 1
    }

    pub fn to_json(&self) -> Value {
        json!({
            "sign": self.sign,
            "swap": if self.swap { "(y z)" } else { "()" },
            "word": self.word.to_string(),
            "automorphism": self.is_automorphism(),
        })
    }
}

/// Splits an isometry of `L` into sign, swap and an element of `G`.
pub fn decompose(m: &Iso3) -> Result<IsoDecomp> {
    if !is_isometry_of_l(m.matrix()) {
        return Err(Error::NotIsometry);
    }
    let v = m.apply(&LatticeVec::x());
    let w = descent(&v)?;
    let g = word_matrix(&w);
    let rest = g.inverse()?.mul(m);
    let swap = Perm3::SWAP_YZ.matrix();
    let tau = token_matrix(GenToken::TauX);
    // conjugating by (y z) keeps us inside G
    let swapped_word = || {
        let conj = swap.mul(&g).mul(&swap);
        membership_g(&conj).ok_or(Error::StabilizerMismatch)
    };
    let mut tx = GroupWord::new(vec![GenToken::TauX]);
    if rest.is_identity() {
        Ok(IsoDecomp { sign: 1, swap: false, word: w })
    } else if rest == swap {
        Ok(IsoDecomp { sign: 1, swap: true, word: swapped_word()? })
    } else if rest == tau.neg() {
        tx.0.splice(0..0, w.0);
        Ok(IsoDecomp { sign: -1, swap: false, word: tx })
    } else if rest == swap.mul(&tau).neg() {
        let mut word = swapped_word()?;
        word.0.push(GenToken::TauX);
        Ok(IsoDecomp { sign: -1, swap: true, word })
    } else {
        Err(Error::StabilizerMismatch)
    }
}

/// The four isometries of `L` fixing `x`: `1, (y z), −τx, −(y z)τx`.
pub fn stabilizer_of_x() -> [Iso3; 4] {
    let swap = Perm3::SWAP_YZ.matrix();
    let tau = token_matrix(GenToken::TauX);
    [Iso3::identity(), swap.clone(), tau.neg(), swap.mul(&tau).neg()]
}

fn weyl(word: &[Axis]) -> Iso3 {
    word.iter().fold(Iso3::identity(), |acc, &a| acc.mul(&simple_reflection(a)))
}

fn tok(s: &str) -> Iso3 {
    word_matrix(&s.parse().expect("static word"))
}

/// Checks the structure of `Isom(L)` relative to `G`, `W` and `W⁺`.
pub fn verify_structure() -> Report {
    let mut rep = Report::default();
    let swap_yz = Perm3::SWAP_YZ.matrix();

    for (axis, perm, tau) in [
        (Axis::X, Perm3::SWAP_YZ, "tx"),
        (Axis::Y, Perm3::SWAP_ZX, "ty"),
        (Axis::Z, Perm3::SWAP_XY, "tz"),
    ] {
        let lhs = simple_reflection(axis);
        let rhs = perm.matrix().mul(&tok(tau));
        rep.push(
            format!("r{} = {} {}", axis.name(), perm, tau),
            lhs == rhs,
            json!({ "reflection": lhs.to_json() }),
        );
    }

    for (a, b, word) in [
        (Axis::X, Axis::Y, "r tz ty"),
        (Axis::Y, Axis::Z, "r tx tz"),
        (Axis::Z, Axis::X, "r ty tx"),
    ] {
        let lhs = simple_reflection(a).mul(&simple_reflection(b));
        let ok = lhs == tok(word) && in_w_plus(&lhs);
        rep.push(
            format!("r{} r{} = {} in W+", a.name(), b.name(), word),
            ok,
            json!({ "product": lhs.to_json() }),
        );
    }

    let reps: Vec<(&str, Iso3)> = ["", "tx", "ty", "tz", "r", "r2"]
        .iter()
        .map(|w| (*w, tok(w)))
        .collect();
    let mut coset_clash = Vec::new();
    for i in 0..reps.len() {
        for j in i + 1..reps.len() {
            let q = reps[i].1.inverse().expect("isometry").mul(&reps[j].1);
            if in_w_plus(&q) {
                coset_clash.push(json!([reps[i].0, reps[j].0]));
            }
        }
    }
    rep.push(
        "cosets of W+ in G are distinct",
        coset_clash.is_empty(),
        json!({ "representatives": ["1", "tx", "ty", "tz", "r", "r2"], "clashes": coset_clash }),
    );

    let eta = swap_yz.clone();
    let theta = swap_yz.mul(&tok("ty"));
    rep.push("eta^2 in W+", in_w_plus(&eta.pow(2)), Value::Null);
    for k in 1..=5 {
        let p = theta.pow(k);
        rep.push(
            format!("theta^{k} not in W+"),
            !in_w_plus(&p),
            json!({ "power": p.to_json() }),
        );
    }
    rep.push("theta^6 in W+", in_w_plus(&theta.pow(6)), Value::Null);
    let etatheta = eta.mul(&theta).mul(&eta).mul(&theta);
    rep.push(
        "eta theta eta = theta^-1 mod W+",
        in_w_plus(&etatheta),
        json!({ "eta_theta_eta_theta": etatheta.to_json() }),
    );
    rep.push(
        "theta = tz (y z)",
        theta == tok("tz").mul(&swap_yz),
        Value::Null,
    );

    let mut classes = Vec::new();
    for sign in [1i8, -1] {
        for swap in [false, true] {
            for (name, r) in &reps {
                let mut m = r.clone();
                if swap {
                    m = swap_yz.mul(&m);
                }
                if sign < 0 {
                    m = m.neg();
                }
                classes.push((format!("{}{}{}", if sign < 0 { "-" } else { "" }, if swap { "(y z)" } else { "" }, name), m));
            }
        }
    }
    let mut same = Vec::new();
    for i in 0..classes.len() {
        for j in i + 1..classes.len() {
            let q = classes[i].1.inverse().expect("isometry").mul(&classes[j].1);
            if in_w_plus(&q) {
                same.push(json!([classes[i].0, classes[j].0]));
            }
        }
    }
    rep.push(
        "24 distinct classes mod W+",
        same.is_empty() && classes.len() == 24,
        json!({ "classes": classes.len(), "collisions": same }),
    );

    rep.push(
        "(y z) tx = tx (y z)",
        swap_yz.mul(&tok("tx")) == tok("tx").mul(&swap_yz),
        Value::Null,
    );
    rep.push(
        "(y z) r = r2 (y z)",
        swap_yz.mul(&tok("r")) == tok("r2").mul(&swap_yz),
        Value::Null,
    );

    let stab = stabilizer_of_x();
    let fixes = stab
        .iter()
        .all(|m| m.apply(&LatticeVec::x()) == LatticeVec::x() && is_isometry_of_l(m.matrix()));
    let only_identity_in_g = stab.iter().filter(|m| membership_g(m).is_some()).count() == 1;
    rep.push(
        "stabilizer of x in Isom(L) is {1, (y z), -tx, -(y z)tx}",
        fixes && only_identity_in_g,
        Value::Null,
    );

    let sample = isometry_sample();
    let dual_ok = sample.iter().all(Iso3::preserves_dual_lattice);
    rep.push(
        "isometries of L preserve L*",
        dual_ok,
        json!({ "sampled": sample.len() }),
    );

    let mut tag_ok = true;
    for m in &sample {
        match (decompose(m), m.bracket_behaviour()) {
            (Ok(d), Some(auto)) => tag_ok &= d.recompose() == *m && d.is_automorphism() == auto,
            _ => tag_ok = false,
        }
    }
    rep.push(
        "decomposition recomposes and tags automorphisms",
        tag_ok,
        json!({ "sampled": sample.len() }),
    );

    let mut parity_ok = true;
    for len in 0..=6usize {
        for word in weyl_words(len) {
            parity_ok &= in_w_plus(&weyl(&word)) == (len % 2 == 0);
        }
    }
    rep.push("Weyl words lie in W+ iff even length", parity_ok, json!({ "max_length": 6 }));

    rep
}

/// Reduced Weyl words of exactly `len` letters (no letter repeated twice in a row).
pub fn weyl_words(len: usize) -> Vec<Vec<Axis>> {
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &words {
            for a in Axis::ALL {
                if w.last() != Some(&a) {
                    let mut v: Vec<Axis> = w.clone();
                    v.push(a);
                    next.push(v);
                }
            }
        }
        words = next;
    }
    words
}

pub fn weyl_matrix(word: &[Axis]) -> Iso3 {
    weyl(word)
}

fn isometry_sample() -> Vec<Iso3> {
    let words = ["", "tx", "r", "sx sy' tz", "ty r2 sz", "sz sz sx' r tx", "tz ty tx r2 sy"];
    let mut out = Vec::new();
    for w in words {
        let g = tok(w);
        for sign in [false, true] {
            for swap in [false, true] {
                let mut m = g.clone();
                if swap {
                    m = Perm3::SWAP_YZ.matrix().mul(&m);
                }
                if sign {
                    m = m.neg();
                }
                out.push(m);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn reflection_x_images() {
        let rx = simple_reflection(Axis::X);
        assert_eq!(rx.apply(&LatticeVec::y()), LatticeVec::from_ints(2, 1, 0));
        assert_eq!(rx.apply(&LatticeVec::x()), LatticeVec::from_ints(-1, 0, 0));
        assert!(rx.mul(&rx).is_identity());
        assert!(rx.preserves_gram());
        assert_eq!(rx, Perm3::SWAP_YZ.matrix().mul(&tok("tx")));
    }

    #[test]
    fn isometry_predicate() {
        assert!(is_isometry_of_l(tok("tx").matrix()));
        assert!(!is_isometry_of_l(Iso3::from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 2]]).matrix()));
        assert!(is_isometry_of_l(Iso3::minus_identity().matrix()));
        assert!(is_isometry_of_l(Perm3::SWAP_YZ.matrix().matrix()));
    }

    #[test]
    fn membership_examples() {
        let m = tok("r tx");
        let w = membership_g(&m).unwrap();
        assert_eq!(w.normalize(), "r tx".parse::<GroupWord>().unwrap().normalize());
        assert!(membership_g(&Perm3::SWAP_YZ.matrix()).is_none());
        assert!(membership_g(&Iso3::minus_identity()).is_none());
    }

    #[test]
    fn decompose_examples() {
        let d = decompose(&Iso3::minus_identity()).unwrap();
        assert_eq!((d.sign, d.swap, d.word.is_empty()), (-1, false, false));
        assert!(word_matrix(&d.word).is_identity() || d.recompose() == Iso3::minus_identity());
        assert_eq!(d.recompose(), Iso3::minus_identity());
        assert!(d.word.normalize().is_empty() || d.word.to_matrix().is_identity());

        let d = decompose(&Perm3::SWAP_YZ.matrix()).unwrap();
        assert_eq!((d.sign, d.swap), (1, true));
        assert!(d.word.is_empty());

        let d = decompose(&simple_reflection(Axis::X)).unwrap();
        assert_eq!((d.sign, d.swap), (1, true));
        assert_eq!(d.word.to_string(), "tx");
        assert!(!d.is_automorphism());

        assert_eq!(
            decompose(&Iso3::from_rows([[1, 0, 0], [0, 1, 0], [0, 0, 2]])),
            Err(Error::NotIsometry)
        );
    }

    #[test]
    fn minus_identity_word_is_trivial() {
        // -1 = -(tx)·tx: the G part is the identity element
        let d = decompose(&Iso3::minus_identity()).unwrap();
        assert!(d.word.to_matrix().is_identity());
    }

    #[test]
    fn s3_examples() {
        let w = |s: &str| s.parse::<GroupWord>().unwrap();
        assert_eq!(s3_quotient(&w("tx")), Perm3::SWAP_YZ);
        assert!(s3_quotient(&w("r r r")).is_identity());
        assert_eq!(s3_quotient(&w("tz ty")), Perm3::CYCLE2);
        assert_eq!(s3_quotient(&w("tz ty")).to_string(), "(x z y)");
        assert_eq!(s3_quotient(&w("r2")), Perm3::CYCLE2);
        assert_eq!(s3_quotient(&w("ty")), Perm3::SWAP_ZX);
        assert_eq!(s3_quotient(&w("tz")), Perm3::SWAP_XY);
    }

    #[test]
    fn perm_labels() {
        assert_eq!(Perm3::SWAP_YZ.to_string(), "(y z)");
        assert_eq!(Perm3::CYCLE.to_string(), "(x y z)");
        assert_eq!(Perm3::IDENTITY.to_string(), "()");
        assert_eq!(Perm3::CYCLE.matrix(), tok("r"));
        for p in Perm3::ALL {
            assert!(p.compose(p.inverse()).is_identity());
            assert_eq!(p.matrix().bracket_behaviour(), Some(p.sign() > 0));
        }
    }

    #[test]
    fn structure_report_passes() {
        let rep = verify_structure();
        for r in rep.iter() {
            assert!(r.passed(), "{} failed: {}", r.check, r.witness);
        }
        let theta = Perm3::SWAP_YZ.matrix().mul(&tok("ty"));
        assert!(!in_w_plus(&theta.pow(3)));
    }

    fn element() -> impl Strategy<Value = Iso3> {
        (
            proptest::collection::vec(proptest::sample::select(GenToken::ALL.to_vec()), 0..10),
            any::<bool>(),
            any::<bool>(),
            0usize..3,
        )
            .prop_map(|(w, neg, swap, side)| {
                let g = word_matrix(&GroupWord::new(w));
                let mut m = match side {
                    0 => g,
                    1 => Perm3::SWAP_YZ.matrix().mul(&g),
                    _ => g.mul(&Perm3::SWAP_YZ.matrix()),
                };
                if swap {
                    m = m.mul(&Perm3::CYCLE.matrix());
                }
                if neg {
                    m = m.neg();
                }
                m
            })
    }

    fn any_word() -> impl Strategy<Value = GroupWord> {
        proptest::collection::vec(proptest::sample::select(GenToken::ALL.to_vec()), 0..12)
            .prop_map(GroupWord::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn decompose_then_recompose(m in element()) {
            let d = decompose(&m).unwrap();
            prop_assert_eq!(d.recompose(), m.clone());
            prop_assert_eq!(Some(d.is_automorphism()), m.bracket_behaviour());
        }

        #[test]
        fn s3_quotient_is_well_defined(w in any_word()) {
            // the normal form names the same element through different tokens
            let nf = w.normalize().to_word();
            prop_assert_eq!(word_matrix(&nf), word_matrix(&w));
            prop_assert_eq!(s3_quotient(&nf), s3_quotient(&w));
            let back = membership_g(&word_matrix(&w)).unwrap();
            prop_assert_eq!(s3_quotient(&back), s3_quotient(&w));
        }

        #[test]
        fn weyl_parity(word in proptest::collection::vec(proptest::sample::select(Axis::ALL.to_vec()), 0..9)) {
            let m = weyl(&word);
            let reduced_len = {
                let mut v: Vec<Axis> = Vec::new();
                for a in word.iter() {
                    if v.last() == Some(a) { v.pop(); } else { v.push(*a); }
                }
                v.len()
            };
            prop_assert_eq!(in_w_plus(&m), reduced_len % 2 == 0);
            prop_assert_eq!(m.bracket_behaviour(), Some(reduced_len % 2 == 0));
        }
    }
}
