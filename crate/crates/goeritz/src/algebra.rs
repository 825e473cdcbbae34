//! Exact element arithmetic for the genus-2 Goeritz group of S2 x S1.
//!
//! The group is the direct product of a central infinite-cyclic factor
//! generated by epsilon, a central order-two factor generated by alpha, and
//! the factor `< beta, gamma, sigma | gamma^2 = sigma^2 = (gamma beta sigma)^2 = 1 >`.
//! Writing t for the involution gamma beta sigma and eliminating
//! beta = gamma t sigma turns that factor into the free product
//! Z2 * Z2 * Z2 on the involutions {gamma, sigma, t}, whose elements have
//! unique alternating normal forms. An element is therefore canonically a
//! triple (epsilon exponent, alpha parity, alternating core), and two words
//! represent the same element iff their triples agree.
//!
//! Text encoding: `e a b g s` for epsilon, alpha, beta, gamma, sigma;
//! uppercase for inverses (`A G S` normalize to lowercase since those are
//! involutions); `t` is accepted on input and expands to `gbs`.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// The published generators.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Gen {
    Epsilon,
    Alpha,
    Beta,
    Gamma,
    Sigma,
}

impl Gen {
    pub const fn is_involution(self) -> bool {
        matches!(self, Gen::Alpha | Gen::Gamma | Gen::Sigma)
    }
}

/// One letter of a raw word over the published generators. The sign of an
/// involution is normalized away on construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GenLetter {
    gen: Gen,
    inverse: bool,
}

impl GenLetter {
    pub fn new(gen: Gen, inverse: bool) -> Self {
        GenLetter {
            gen,
            inverse: inverse && !gen.is_involution(),
        }
    }

    pub const fn gen(self) -> Gen {
        self.gen
    }

    pub const fn is_inverse(self) -> bool {
        self.inverse
    }

    pub fn inverted(self) -> Self {
        GenLetter::new(self.gen, !self.inverse)
    }

    fn to_char(self) -> char {
        match (self.gen, self.inverse) {
            (Gen::Epsilon, false) => 'e',
            (Gen::Epsilon, true) => 'E',
            (Gen::Alpha, _) => 'a',
            (Gen::Beta, false) => 'b',
            (Gen::Beta, true) => 'B',
            (Gen::Gamma, _) => 'g',
            (Gen::Sigma, _) => 's',
        }
    }
}

/// A raw word over the published generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GenWord {
    letters: Vec<GenLetter>,
}

impl GenWord {
    pub fn new(letters: Vec<GenLetter>) -> Self {
        GenWord { letters }
    }

    pub fn empty() -> Self {
        GenWord::default()
    }

    pub fn letters(&self) -> &[GenLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        GenWord::new(self.letters.iter().rev().map(|l| l.inverted()).collect())
    }

    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        GenWord::new(letters)
    }

    /// Rotation moving the first `k` letters to the end.
    pub fn rotated(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        GenWord::new(letters)
    }

    /// Canonical form of the element this word represents.
    pub fn normal_form(&self) -> NormalForm {
        let mut nf = NormalForm::identity();
        for l in &self.letters {
            match (l.gen, l.inverse) {
                (Gen::Epsilon, false) => nf.eps_exp += 1,
                (Gen::Epsilon, true) => nf.eps_exp -= 1,
                (Gen::Alpha, _) => nf.alpha_bit = !nf.alpha_bit,
                (Gen::Gamma, _) => nf.push_core(CoreLetter::Gamma),
                (Gen::Sigma, _) => nf.push_core(CoreLetter::Sigma),
                (Gen::Beta, false) => {
                    nf.push_core(CoreLetter::Gamma);
                    nf.push_core(CoreLetter::T);
                    nf.push_core(CoreLetter::Sigma);
                }
                (Gen::Beta, true) => {
                    nf.push_core(CoreLetter::Sigma);
                    nf.push_core(CoreLetter::T);
                    nf.push_core(CoreLetter::Gamma);
                }
            }
        }
        nf
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for GenWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut letters = Vec::new();
        for c in s.chars() {
            if c.is_whitespace() {
                continue;
            }
            match c {
                'e' => letters.push(GenLetter::new(Gen::Epsilon, false)),
                'E' => letters.push(GenLetter::new(Gen::Epsilon, true)),
                'a' | 'A' => letters.push(GenLetter::new(Gen::Alpha, false)),
                'b' => letters.push(GenLetter::new(Gen::Beta, false)),
                'B' => letters.push(GenLetter::new(Gen::Beta, true)),
                'g' | 'G' => letters.push(GenLetter::new(Gen::Gamma, false)),
                's' | 'S' => letters.push(GenLetter::new(Gen::Sigma, false)),
                't' | 'T' => {
                    letters.push(GenLetter::new(Gen::Gamma, false));
                    letters.push(GenLetter::new(Gen::Beta, false));
                    letters.push(GenLetter::new(Gen::Sigma, false));
                }
                _ => return Err(Error::BadLetter(c)),
            }
        }
        Ok(GenWord::new(letters))
    }
}

/// The three involutions generating the non-central factor: gamma, sigma,
/// and t = gamma beta sigma.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum CoreLetter {
    Gamma,
    Sigma,
    T,
}

impl CoreLetter {
    pub const ALL: [CoreLetter; 3] = [CoreLetter::Gamma, CoreLetter::Sigma, CoreLetter::T];

    pub fn to_char(self) -> char {
        match self {
            CoreLetter::Gamma => 'g',
            CoreLetter::Sigma => 's',
            CoreLetter::T => 't',
        }
    }
}

/// The canonical representative of a group element: epsilon exponent, alpha
/// parity, and an alternating word over {gamma, sigma, t}. Structural
/// equality of normal forms is equality in the group.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct NormalForm {
    eps_exp: i64,
    alpha_bit: bool,
    core: Vec<CoreLetter>,
}

/// Order of a group element.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Order {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

impl NormalForm {
    pub fn identity() -> Self {
        NormalForm::default()
    }

    /// Build a normal form from raw parts; adjacent equal core letters
    /// cancel, so any letter sequence is accepted.
    pub fn from_parts(
        eps_exp: i64,
        alpha_bit: bool,
        core: impl IntoIterator<Item = CoreLetter>,
    ) -> Self {
        let mut nf = NormalForm {
            eps_exp,
            alpha_bit,
            core: Vec::new(),
        };
        for l in core {
            nf.push_core(l);
        }
        nf
    }

    pub fn epsilon() -> Self {
        NormalForm::from_parts(1, false, [])
    }

    pub fn alpha() -> Self {
        NormalForm::from_parts(0, true, [])
    }

    pub fn beta() -> Self {
        NormalForm::from_parts(
            0,
            false,
            [CoreLetter::Gamma, CoreLetter::T, CoreLetter::Sigma],
        )
    }

    /// beta' = beta^-1 alpha; satisfies beta beta' = alpha.
    pub fn beta_prime() -> Self {
        NormalForm::from_parts(
            0,
            true,
            [CoreLetter::Sigma, CoreLetter::T, CoreLetter::Gamma],
        )
    }

    pub fn gamma() -> Self {
        NormalForm::from_parts(0, false, [CoreLetter::Gamma])
    }

    pub fn sigma() -> Self {
        NormalForm::from_parts(0, false, [CoreLetter::Sigma])
    }

    /// tau = gamma beta; its core is the alternating word t sigma.
    pub fn tau() -> Self {
        NormalForm::from_parts(0, false, [CoreLetter::T, CoreLetter::Sigma])
    }

    /// tau' = tau sigma, the involution with core t.
    pub fn tau_prime() -> Self {
        NormalForm::from_parts(0, false, [CoreLetter::T])
    }

    pub fn eps_exp(&self) -> i64 {
        self.eps_exp
    }

    pub fn alpha_bit(&self) -> bool {
        self.alpha_bit
    }

    pub fn core(&self) -> &[CoreLetter] {
        &self.core
    }

    pub fn is_identity(&self) -> bool {
        self.eps_exp == 0 && !self.alpha_bit && self.core.is_empty()
    }

    fn push_core(&mut self, l: CoreLetter) {
        if self.core.last() == Some(&l) {
            self.core.pop();
        } else {
            self.core.push(l);
        }
    }

    /// Group product; the central coordinates add, the cores concatenate and
    /// cancel at the seam.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.eps_exp += other.eps_exp;
        out.alpha_bit ^= other.alpha_bit;
        for &l in &other.core {
            out.push_core(l);
        }
        out
    }

    /// Inverse: the epsilon exponent negates, the alpha parity is fixed, and
    /// the core reverses since every core letter is an involution.
    pub fn inverse(&self) -> Self {
        NormalForm {
            eps_exp: -self.eps_exp,
            alpha_bit: self.alpha_bit,
            core: self.core.iter().rev().copied().collect(),
        }
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = NormalForm::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.multiply(&base);
        }
        out
    }

    /// The core with matching first/last letters repeatedly stripped; the
    /// result is conjugate to the core within the free product factor.
    pub fn core_cyclically_reduced(&self) -> &[CoreLetter] {
        let mut lo = 0;
        let mut hi = self.core.len();
        while hi - lo >= 2 && self.core[lo] == self.core[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        &self.core[lo..hi]
    }

    /// Order of the element: infinite as soon as epsilon appears or the core
    /// is not conjugate into one of the three involution factors; otherwise
    /// 1 or 2.
    pub fn order(&self) -> Order {
        if self.eps_exp != 0 {
            return Order::Infinite;
        }
        let reduced = self.core_cyclically_reduced();
        if reduced.len() >= 2 {
            return Order::Infinite;
        }
        if self.alpha_bit || reduced.len() == 1 {
            Order::Finite(2)
        } else {
            Order::Finite(1)
        }
    }

    /// A word over the published generators representing this element:
    /// epsilon and alpha literally, gamma and sigma literally, and each core
    /// t expanded back to gamma beta sigma.
    pub fn to_word(&self) -> GenWord {
        let mut letters = Vec::new();
        for _ in 0..self.eps_exp.unsigned_abs() {
            letters.push(GenLetter::new(Gen::Epsilon, self.eps_exp < 0));
        }
        if self.alpha_bit {
            letters.push(GenLetter::new(Gen::Alpha, false));
        }
        for l in &self.core {
            match l {
                CoreLetter::Gamma => letters.push(GenLetter::new(Gen::Gamma, false)),
                CoreLetter::Sigma => letters.push(GenLetter::new(Gen::Sigma, false)),
                CoreLetter::T => {
                    letters.push(GenLetter::new(Gen::Gamma, false));
                    letters.push(GenLetter::new(Gen::Beta, false));
                    letters.push(GenLetter::new(Gen::Sigma, false));
                }
            }
        }
        GenWord::new(letters)
    }
}

/// The power tau^k as a normal form: an alternating {sigma, t} core of
/// length 2|k|.
pub fn tau_power(k: i64) -> NormalForm {
    NormalForm::tau().pow(k)
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "e^{} a^{} | ",
            self.eps_exp,
            if self.alpha_bit { 1 } else { 0 }
        )?;
        if self.core.is_empty() {
            write!(f, "1")
        } else {
            for l in &self.core {
                write!(f, "{}", l.to_char())?;
            }
            Ok(())
        }
    }
}
