//! The group `G` generated by `exp(ad x*)`, `exp(ad y*)`, `exp(ad z*)`,
//! realized as `PSL₂(ℤ)`.
//!
//! An element is held either as a [`ProjMat`] (an `SL₂(ℤ)` matrix with its
//! sign fixed) or as a [`GroupWord`] in the named generators. Words compose
//! right to left: `[t1, t2]` means apply `t2` first. The free-product
//! structure `ℤ₂ * ℤ₃` with `b ↦ τx`, `c ↦ ρ` gives the unique
//! [`NormalWord`] of every element.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::equitable::{self, EquiVec, Mat2};
use crate::error::{Error, Result};
use crate::isometry::Iso3;
use crate::scalar;

/// An element of `SL₂(ℤ)/{±I}`, stored as the representative whose first
/// nonzero entry in reading order `(a, b, c, d)` is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjMat {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl ProjMat {
    /// Fails with [`Error::Singular`] unless `ad - bc = 1`.
    pub fn new(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Result<Self> {
        if &a * &d - &b * &c != BigInt::one() {
            return Err(Error::Singular);
        }
        Ok(ProjMat::normalized(a, b, c, d))
    }

    pub fn from_ints(a: i64, b: i64, c: i64, d: i64) -> Result<Self> {
        ProjMat::new(a.into(), b.into(), c.into(), d.into())
    }

    fn normalized(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        let lead = [&a, &b, &c, &d].into_iter().find(|v| !v.is_zero()).cloned();
        match lead {
            Some(v) if v.is_negative() => ProjMat { a: -a, b: -b, c: -c, d: -d },
            _ => ProjMat { a, b, c, d },
        }
    }

    pub fn identity() -> Self {
        ProjMat::normalized(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn is_identity(&self) -> bool {
        *self == ProjMat::identity()
    }

    pub fn compose(&self, o: &ProjMat) -> ProjMat {
        ProjMat::normalized(
            &self.a * &o.a + &self.b * &o.c,
            &self.a * &o.b + &self.b * &o.d,
            &self.c * &o.a + &self.d * &o.c,
            &self.c * &o.b + &self.d * &o.d,
        )
    }

    pub fn inverse(&self) -> ProjMat {
        ProjMat::normalized(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn pow(&self, e: u32) -> ProjMat {
        (0..e).fold(ProjMat::identity(), |acc, _| acc.compose(self))
    }

    fn to_mat2(&self) -> Mat2 {
        let f = scalar::from_big;
        Mat2::new(f(&self.a), f(&self.b), f(&self.c), f(&self.d))
    }

    /// Conjugation `u ↦ θuθ⁻¹` as a 3×3 matrix on equitable coordinates.
    pub fn hat(&self) -> Iso3 {
        let theta = self.to_mat2();
        let inv = theta.inverse().expect("determinant one");
        let cols: Vec<Vec<BigInt>> = equitable::basis()
            .iter()
            .map(|b| {
                let image = theta.mul(&b.to_matrix()).mul(&inv);
                let v = EquiVec::from_matrix(&image).expect("conjugate is traceless");
                v.coords()
                    .iter()
                    .map(|c| scalar::to_integer(c).expect("L is invariant under SL2(Z)"))
                    .collect()
            })
            .collect();
        Iso3::from_columns(&cols)
    }

    /// `θ u θ⁻¹` as an element of sl2.
    pub fn conjugate(&self, u: &EquiVec) -> EquiVec {
        let theta = self.to_mat2();
        let inv = theta.inverse().expect("determinant one");
        EquiVec::from_matrix(&theta.mul(&u.to_matrix()).mul(&inv)).expect("traceless")
    }
}

impl fmt::Display for ProjMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

/// `B = [[0,-1],[1,0]]`, the image of `τx`.
pub fn b_matrix() -> ProjMat {
    ProjMat::from_ints(0, -1, 1, 0).unwrap()
}

/// `C = [[1,-1],[1,0]]`, the image of `ρ`.
pub fn c_matrix() -> ProjMat {
    ProjMat::from_ints(1, -1, 1, 0).unwrap()
}

/// `A = [[0,-1],[1,1]]`, with `C = BAB⁻¹`.
pub fn a_matrix() -> ProjMat {
    ProjMat::from_ints(0, -1, 1, 1).unwrap()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenToken {
    SigmaX,
    SigmaY,
    SigmaZ,
    SigmaXInv,
    SigmaYInv,
    SigmaZInv,
    TauX,
    TauY,
    TauZ,
    Rho,
    Rho2,
}

impl GenToken {
    pub const ALL: [GenToken; 11] = [
        GenToken::SigmaX,
        GenToken::SigmaY,
        GenToken::SigmaZ,
        GenToken::SigmaXInv,
        GenToken::SigmaYInv,
        GenToken::SigmaZInv,
        GenToken::TauX,
        GenToken::TauY,
        GenToken::TauZ,
        GenToken::Rho,
        GenToken::Rho2,
    ];

    pub fn text(self) -> &'static str {
        match self {
            GenToken::SigmaX => "sx",
            GenToken::SigmaY => "sy",
            GenToken::SigmaZ => "sz",
            GenToken::SigmaXInv => "sx'",
            GenToken::SigmaYInv => "sy'",
            GenToken::SigmaZInv => "sz'",
            GenToken::TauX => "tx",
            GenToken::TauY => "ty",
            GenToken::TauZ => "tz",
            GenToken::Rho => "r",
            GenToken::Rho2 => "r2",
        }
    }

    pub fn inverse(self) -> GenToken {
        match self {
            GenToken::SigmaX => GenToken::SigmaXInv,
            GenToken::SigmaY => GenToken::SigmaYInv,
            GenToken::SigmaZ => GenToken::SigmaZInv,
            GenToken::SigmaXInv => GenToken::SigmaX,
            GenToken::SigmaYInv => GenToken::SigmaY,
            GenToken::SigmaZInv => GenToken::SigmaZ,
            GenToken::Rho => GenToken::Rho2,
            GenToken::Rho2 => GenToken::Rho,
            tau => tau,
        }
    }

    /// `SL₂(ℤ)` representative. The σ tokens are `I + n` for the nilpotent
    /// matrix `n` of the matching dual basis vector (or its negative).
    pub fn matrix(self) -> ProjMat {
        let m = |a, b, c, d| ProjMat::from_ints(a, b, c, d).unwrap();
        match self {
            GenToken::SigmaX => m(2, -1, 1, 0),
            GenToken::SigmaY => m(1, 0, 1, 1),
            GenToken::SigmaZ => m(1, -1, 0, 1),
            GenToken::SigmaXInv => m(0, 1, -1, 2),
            GenToken::SigmaYInv => m(1, 0, -1, 1),
            GenToken::SigmaZInv => m(1, 1, 0, 1),
            GenToken::TauX => b_matrix(),
            GenToken::TauY => c_matrix().compose(&b_matrix()).compose(&c_matrix().inverse()),
            GenToken::TauZ => c_matrix().inverse().compose(&b_matrix()).compose(&c_matrix()),
            GenToken::Rho => c_matrix(),
            GenToken::Rho2 => c_matrix().compose(&c_matrix()),
        }
    }

    /// Rewrites the token over `b = τx` and `c = ρ`.
    pub(crate) fn letters(self) -> &'static [NfLetter] {
        use NfLetter::{B, C, C2};
        match self {
            GenToken::TauX => &[B],
            GenToken::Rho => &[C],
            GenToken::Rho2 => &[C2],
            GenToken::TauY => &[C, B, C2],
            GenToken::TauZ => &[C2, B, C],
            GenToken::SigmaZ => &[B, C2],
            GenToken::SigmaY => &[C2, B],
            GenToken::SigmaX => &[C, B, C],
            GenToken::SigmaZInv => &[C, B],
            GenToken::SigmaYInv => &[B, C],
            GenToken::SigmaXInv => &[C2, B, C2],
        }
    }
}

impl fmt::Display for GenToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.text())
    }
}

impl FromStr for GenToken {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GenToken::ALL
            .into_iter()
            .find(|t| t.text() == s)
            .ok_or_else(|| Error::UnknownToken(s.to_string()))
    }
}

/// A product of generator tokens; the empty word is the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GroupWord(pub Vec<GenToken>);

impl GroupWord {
    pub fn new(tokens: Vec<GenToken>) -> Self {
        GroupWord(tokens)
    }

    pub fn identity() -> Self {
        GroupWord(Vec::new())
    }

    pub fn tokens(&self) -> &[GenToken] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self · other`
    pub fn then(&self, other: &GroupWord) -> GroupWord {
        GroupWord(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord(self.0.iter().rev().map(|t| t.inverse()).collect())
    }

    pub fn to_matrix(&self) -> ProjMat {
        self.0
            .iter()
            .fold(ProjMat::identity(), |acc, t| acc.compose(&t.matrix()))
    }

    pub fn normalize(&self) -> NormalWord {
        let mut stack: Vec<NfLetter> = Vec::with_capacity(self.0.len() * 3);
        for letter in self.0.iter().flat_map(|t| t.letters()) {
            push_reduced(&mut stack, *letter);
        }
        NormalWord(stack)
    }
}

pub fn word_to_matrix(w: &GroupWord) -> ProjMat {
    w.to_matrix()
}

pub fn normalize(w: &GroupWord) -> NormalWord {
    w.normalize()
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.0.iter().map(|t| t.text()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for GroupWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(GenToken::from_str)
            .collect::<Result<Vec<_>>>()
            .map(GroupWord)
    }
}

/// A letter of the free product `ℤ₂ * ℤ₃ = ⟨b⟩ * ⟨c⟩`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NfLetter {
    B,
    C,
    C2,
}

impl NfLetter {
    fn c_power(self) -> u8 {
        match self {
            NfLetter::B => 0,
            NfLetter::C => 1,
            NfLetter::C2 => 2,
        }
    }

    pub fn matrix(self) -> ProjMat {
        match self {
            NfLetter::B => b_matrix(),
            NfLetter::C => c_matrix(),
            NfLetter::C2 => c_matrix().compose(&c_matrix()),
        }
    }

    pub fn token(self) -> GenToken {
        match self {
            NfLetter::B => GenToken::TauX,
            NfLetter::C => GenToken::Rho,
            NfLetter::C2 => GenToken::Rho2,
        }
    }
}

fn push_reduced(stack: &mut Vec<NfLetter>, letter: NfLetter) {
    match (stack.last().copied(), letter) {
        (Some(NfLetter::B), NfLetter::B) => {
            stack.pop();
        }
        (Some(top), l) if top != NfLetter::B && l != NfLetter::B => {
            stack.pop();
            match (top.c_power() + l.c_power()) % 3 {
                1 => stack.push(NfLetter::C),
                2 => stack.push(NfLetter::C2),
                _ => {}
            }
        }
        _ => stack.push(letter),
    }
}

/// Reduced word in `b`, `c`, `c²`: no two adjacent `b`s and no two adjacent `c`-powers.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalWord(Vec<NfLetter>);

impl NormalWord {
    pub fn letters(&self) -> &[NfLetter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|w| (w[0] == NfLetter::B) != (w[1] == NfLetter::B))
    }

    pub fn to_matrix(&self) -> ProjMat {
        self.0
            .iter()
            .fold(ProjMat::identity(), |acc, l| acc.compose(&l.matrix()))
    }

    /// The same element as a word over `tx`, `r`, `r2`.
    pub fn to_word(&self) -> GroupWord {
        GroupWord(self.0.iter().map(|l| l.token()).collect())
    }
}

impl fmt::Display for NormalWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|l| match l {
                NfLetter::B => "b",
                NfLetter::C => "c",
                NfLetter::C2 => "c2",
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for NormalWord {
    type Err = Error;

    /// Parses `b c b c2`; the input must already be reduced.
    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split_whitespace()
            .map(|t| match t {
                "b" => Ok(NfLetter::B),
                "c" => Ok(NfLetter::C),
                "c2" => Ok(NfLetter::C2),
                other => Err(Error::UnknownToken(other.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        let w = NormalWord(letters);
        if w.is_reduced() {
            Ok(w)
        } else {
            Err(Error::UnknownToken(s.to_string()))
        }
    }
}

/// All normal words of length at most `max_len`, shortest first.
pub fn normal_forms(max_len: usize) -> Vec<NormalWord> {
    let mut out = vec![NormalWord::default()];
    let mut frontier = vec![NormalWord::default()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            let choices: &[NfLetter] = match w.0.last() {
                None => &[NfLetter::B, NfLetter::C, NfLetter::C2],
                Some(NfLetter::B) => &[NfLetter::C, NfLetter::C2],
                Some(_) => &[NfLetter::B],
            };
            for &l in choices {
                let mut v = w.0.clone();
                v.push(l);
                next.push(NormalWord(v));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equitable::EquiVec;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn word(s: &str) -> GroupWord {
        s.parse().unwrap()
    }

    #[test]
    fn normalization_picks_positive_lead() {
        let m = ProjMat::from_ints(0, 1, -1, 0).unwrap();
        assert_eq!(m, b_matrix());
        assert_eq!(m.entries()[1], &BigInt::from(1));
        assert_eq!(ProjMat::from_ints(-1, 0, 0, -1).unwrap(), ProjMat::identity());
        assert!(ProjMat::from_ints(1, 1, 1, 1).is_err());
    }

    #[test]
    fn generator_matrices() {
        assert_eq!(GenToken::TauX.matrix(), ProjMat::from_ints(0, -1, 1, 0).unwrap());
        assert_eq!(GenToken::Rho.matrix(), ProjMat::from_ints(1, -1, 1, 0).unwrap());
        assert_eq!(GenToken::SigmaX.matrix(), ProjMat::from_ints(2, -1, 1, 0).unwrap());
    }

    #[test]
    fn sigma_matrices_exponentiate_dual_vectors() {
        // exp of a square-zero matrix n is I + n
        for (tok, u) in [
            (GenToken::SigmaX, EquiVec::x_star()),
            (GenToken::SigmaY, EquiVec::y_star()),
            (GenToken::SigmaZ, EquiVec::z_star()),
        ] {
            let n = u.to_matrix();
            let e = Mat2::identity().add(&n);
            let ints: Vec<i64> = [&e.p, &e.q, &e.r, &e.s]
                .iter()
                .map(|v| i64::try_from(v.to_integer()).unwrap())
                .collect();
            assert_eq!(tok.matrix(), ProjMat::from_ints(ints[0], ints[1], ints[2], ints[3]).unwrap());
            assert_eq!(tok.matrix().hat().to_rational(), u.exp_ad().unwrap());
            assert!(tok.matrix().compose(&tok.inverse().matrix()).is_identity());
        }
    }

    #[test]
    fn group_laws_on_examples() {
        let (a, b, c) = (a_matrix(), b_matrix(), c_matrix());
        assert!(b.compose(&b).is_identity());
        assert!(c.compose(&c.compose(&c)).is_identity());
        assert_eq!(b.compose(&a.compose(&b.inverse())), c);
    }

    #[test]
    fn hat_of_generators() {
        assert_eq!(b_matrix().hat(), Iso3::from_rows([[-1, 2, 2], [0, 0, 1], [0, 1, 0]]));
        assert!(ProjMat::identity().hat().is_identity());
        assert_eq!(c_matrix().hat(), Iso3::from_rows([[0, 0, 1], [1, 0, 0], [0, 1, 0]]));
    }

    #[test]
    fn normal_form_examples() {
        assert!(word("tx tx").normalize().is_empty());
        assert_eq!(word("sx sy").normalize().to_string(), "c");
        let sz = word("sz").normalize();
        assert_eq!(sz.to_string(), "b c2");
        assert_eq!(sz.to_matrix(), GenToken::SigmaZ.matrix());
    }

    #[test]
    fn token_rewrites_match_matrices() {
        for t in GenToken::ALL {
            let w = GroupWord::new(vec![t]);
            assert_eq!(w.normalize().to_matrix(), t.matrix(), "token {t}");
        }
    }

    #[test]
    fn parse_and_print_words() {
        let w = word("sx sy' tz r2");
        assert_eq!(w.to_string(), "sx sy' tz r2");
        assert!("sx q".parse::<GroupWord>().is_err());
        let nf: NormalWord = "b c b c2".parse().unwrap();
        assert_eq!(nf.to_string(), "b c b c2");
        assert!("b b".parse::<NormalWord>().is_err());
    }

    #[test]
    fn relations_among_sigmas() {
        let m = |s: &str| word(s).to_matrix();
        assert_eq!(m("sx"), m("sy sz sy'"));
        assert_eq!(m("sx"), m("sz' sy sz"));
        assert!(m("sy sz sy sz sy sz").is_identity());
        assert_eq!(m("sy sz sy"), m("sz sy sz"));
        assert!(m("sy sz sy sy sz sy").is_identity());
        assert_eq!(m("r"), m("sx sy"));
        assert_eq!(m("r"), m("sy sz"));
        assert_eq!(m("r"), m("sz sx"));
        assert_eq!(m("tx"), m("sy sz sy"));
        assert_eq!(m("ty"), m("sz sx sz"));
        assert_eq!(m("ty"), m("sx sz sx"));
        assert_eq!(m("tz"), m("sx sy sx"));
        assert_eq!(m("tz"), m("sy sx sy"));
        assert_eq!(m("sz"), m("tx r2"));
        assert_eq!(m("sy"), m("r2 tx"));
        assert_eq!(m("r sx r2"), m("sy"));
    }

    #[test]
    fn normal_forms_are_injective() {
        let forms = normal_forms(12);
        let mats: HashSet<ProjMat> = forms.iter().map(NormalWord::to_matrix).collect();
        assert_eq!(mats.len(), forms.len());
        let x = EquiVec::x();
        let images: HashSet<EquiVec> = forms
            .iter()
            .map(|w| x.transform(&w.to_matrix().hat().to_rational()))
            .collect();
        assert_eq!(images.len(), forms.len());
    }

    fn any_word(max: usize) -> impl Strategy<Value = GroupWord> {
        proptest::collection::vec(proptest::sample::select(GenToken::ALL.to_vec()), 0..=max)
            .prop_map(GroupWord::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn normal_form_preserves_the_element(w in any_word(20)) {
            let nf = w.normalize();
            prop_assert!(nf.is_reduced());
            prop_assert_eq!(nf.to_matrix(), w.to_matrix());
        }
    }

    proptest! {
        #[test]
        fn normal_forms_agree_iff_matrices_agree(w1 in any_word(8), w2 in any_word(8)) {
            prop_assert_eq!(w1.normalize() == w2.normalize(), w1.to_matrix() == w2.to_matrix());
            let both = w1.then(&w1.inverse());
            prop_assert!(both.normalize().is_empty());
        }

        #[test]
        fn hat_is_a_homomorphism(w1 in any_word(8), w2 in any_word(8)) {
            let g = w1.to_matrix();
            let h = w2.to_matrix();
            let lhs = g.compose(&h).hat();
            prop_assert_eq!(lhs.clone(), g.hat().mul(&h.hat()));
            prop_assert!(lhs.preserves_gram());
        }
    }
}
