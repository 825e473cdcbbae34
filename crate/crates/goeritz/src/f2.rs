//! Words in the rank-2 free group and the disk-boundary criteria.
//!
//! The boundary circle of an essential disk reads off a word over two
//! symbols `x`, `y`. Whether the disk is a reducing disk, a primitive disk,
//! or neither is decided entirely by that word: trivial, primitive, or
//! neither in the free group on `x` and `y`.
//!
//! Text encoding: lowercase `x`, `y` for the generators, uppercase `X`, `Y`
//! for their inverses.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Base symbol of a free-group letter.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum F2Base {
    X,
    Y,
}

/// A generator or its inverse. Letters order as x < X < y < Y.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct F2Letter {
    base: F2Base,
    inverse: bool,
}

impl F2Letter {
    pub const fn new(base: F2Base, inverse: bool) -> Self {
        F2Letter { base, inverse }
    }

    pub const fn base(self) -> F2Base {
        self.base
    }

    pub const fn is_inverse(self) -> bool {
        self.inverse
    }

    pub const fn inverted(self) -> Self {
        F2Letter {
            base: self.base,
            inverse: !self.inverse,
        }
    }

    fn to_char(self) -> char {
        match (self.base, self.inverse) {
            (F2Base::X, false) => 'x',
            (F2Base::X, true) => 'X',
            (F2Base::Y, false) => 'y',
            (F2Base::Y, true) => 'Y',
        }
    }

    fn from_char(c: char) -> Option<Self> {
        match c {
            'x' => Some(F2Letter::new(F2Base::X, false)),
            'X' => Some(F2Letter::new(F2Base::X, true)),
            'y' => Some(F2Letter::new(F2Base::Y, false)),
            'Y' => Some(F2Letter::new(F2Base::Y, true)),
            _ => None,
        }
    }
}

/// A word over `{x, y}` and their inverses, not necessarily reduced.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct F2Word {
    letters: Vec<F2Letter>,
}

/// Trichotomy for a disk boundary word. The trivial word is the shadow of
/// the unique reducing disk; primitive words bound primitive disks;
/// everything else bounds neither.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DiskWordClass {
    Reducing,
    Primitive,
    NonPrimitive,
}

impl fmt::Display for DiskWordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DiskWordClass::Reducing => write!(f, "reducing"),
            DiskWordClass::Primitive => write!(f, "primitive"),
            DiskWordClass::NonPrimitive => write!(f, "non-primitive"),
        }
    }
}

impl F2Word {
    pub fn new(letters: Vec<F2Letter>) -> Self {
        F2Word { letters }
    }

    pub fn empty() -> Self {
        F2Word::default()
    }

    /// The one-letter word x.
    pub fn x() -> Self {
        F2Word::new(vec![F2Letter::new(F2Base::X, false)])
    }

    /// The one-letter word y.
    pub fn y() -> Self {
        F2Word::new(vec![F2Letter::new(F2Base::Y, false)])
    }

    pub fn letters(&self) -> &[F2Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        F2Word::new(self.letters.iter().rev().map(|l| l.inverted()).collect())
    }

    /// Plain concatenation, no reduction.
    pub fn concat(&self, other: &Self) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        F2Word::new(letters)
    }

    /// Rotation moving the first `k` letters to the end.
    pub fn rotated(&self, k: usize) -> Self {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = self.letters[k..].to_vec();
        letters.extend_from_slice(&self.letters[..k]);
        F2Word::new(letters)
    }

    /// The unique reduced word equal to this one: no adjacent inverse pairs.
    pub fn reduced(&self) -> Self {
        let mut out: Vec<F2Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverted()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        F2Word::new(out)
    }

    pub fn is_reduced(&self) -> bool {
        self.letters
            .windows(2)
            .all(|w| w[1] != w[0].inverted())
    }

    /// A cyclically reduced word conjugate to this one: reduced, and the
    /// first letter is not the inverse of the last.
    pub fn cyclically_reduced(&self) -> Self {
        let w = self.reduced();
        let mut lo = 0;
        let mut hi = w.letters.len();
        while hi - lo >= 2 && w.letters[lo] == w.letters[hi - 1].inverted() {
            lo += 1;
            hi -= 1;
        }
        F2Word::new(w.letters[lo..hi].to_vec())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && (self.letters.len() < 2
                || self.letters[0] != self.letters[self.letters.len() - 1].inverted())
    }

    /// Image under abelianization: (sum of x-signs, sum of y-signs).
    pub fn exponent_sums(&self) -> (i64, i64) {
        let mut sums = (0i64, 0i64);
        for l in &self.letters {
            let delta = if l.inverse { -1 } else { 1 };
            match l.base {
                F2Base::X => sums.0 += delta,
                F2Base::Y => sums.1 += delta,
            }
        }
        sums
    }

    /// True iff the word represents the identity.
    pub fn is_trivial(&self) -> bool {
        self.reduced().is_empty()
    }

    /// Fast rejection: the cyclic reduction is nonempty and contains, for some
    /// base letter, both the letter and its inverse. Any such word is
    /// non-trivial and non-primitive.
    pub fn mixed_inverse_criterion(&self) -> bool {
        let w = self.cyclically_reduced();
        if w.is_empty() {
            return false;
        }
        [F2Base::X, F2Base::Y].iter().any(|&base| {
            let plus = w.letters.iter().any(|l| l.base == base && !l.inverse);
            let minus = w.letters.iter().any(|l| l.base == base && l.inverse);
            plus && minus
        })
    }

    /// True iff the word is part of some free basis.
    ///
    /// Decided by greedy peak reduction: while some Whitehead substitution
    /// strictly shortens the cyclic word, apply the first one that does. The
    /// word is primitive exactly when the final cyclic length is 1.
    pub fn is_primitive(&self) -> bool {
        let mut w = self.cyclically_reduced();
        if w.is_empty() {
            return false;
        }
        let moves = whitehead_substitutions();
        'descend: while w.len() > 1 {
            for m in &moves {
                let image = m.apply(&w).cyclically_reduced();
                if image.len() < w.len() {
                    w = image;
                    continue 'descend;
                }
            }
            return false;
        }
        true
    }

    /// Trivial words are Reducing, primitive words Primitive, the rest
    /// NonPrimitive.
    pub fn disk_class(&self) -> DiskWordClass {
        if self.is_trivial() {
            DiskWordClass::Reducing
        } else if self.is_primitive() {
            DiskWordClass::Primitive
        } else {
            DiskWordClass::NonPrimitive
        }
    }

    /// Canonical representative of the cyclic word up to rotation and
    /// inversion: the least rotation of the lesser of the cyclic reduction
    /// and its inverse.
    pub fn canonical_cyclic(&self) -> Self {
        let w = self.cyclically_reduced();
        if w.is_empty() {
            return w;
        }
        let mut best: Option<F2Word> = None;
        for cand in [w.clone(), w.inverse()] {
            for k in 0..cand.len() {
                let rot = cand.rotated(k);
                if best.as_ref().is_none_or(|b| rot < *b) {
                    best = Some(rot);
                }
            }
        }
        best.unwrap()
    }
}

/// A substitution endomorphism given by the images of x and y.
struct Substitution {
    x_image: Vec<F2Letter>,
    y_image: Vec<F2Letter>,
}

impl Substitution {
    fn apply(&self, w: &F2Word) -> F2Word {
        let mut out = Vec::with_capacity(w.len() * 3);
        for l in w.letters() {
            let image = match l.base() {
                F2Base::X => &self.x_image,
                F2Base::Y => &self.y_image,
            };
            if l.is_inverse() {
                out.extend(image.iter().rev().map(|m| m.inverted()));
            } else {
                out.extend_from_slice(image);
            }
        }
        F2Word::new(out).reduced()
    }
}

/// The twelve rank-2 Whitehead substitutions of multiplier type: for each
/// multiplier letter a, the other generator v maps to one of va, a^-1 v,
/// a^-1 v a.
fn whitehead_substitutions() -> Vec<Substitution> {
    let x = F2Letter::new(F2Base::X, false);
    let xi = x.inverted();
    let y = F2Letter::new(F2Base::Y, false);
    let yi = y.inverted();
    let mut moves = Vec::with_capacity(12);
    for mult in [x, xi] {
        for image in [
            vec![y, mult],
            vec![mult.inverted(), y],
            vec![mult.inverted(), y, mult],
        ] {
            moves.push(Substitution {
                x_image: vec![x],
                y_image: image,
            });
        }
    }
    for mult in [y, yi] {
        for image in [
            vec![x, mult],
            vec![mult.inverted(), x],
            vec![mult.inverted(), x, mult],
        ] {
            moves.push(Substitution {
                x_image: image,
                y_image: vec![y],
            });
        }
    }
    moves
}

impl fmt::Display for F2Word {
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

impl FromStr for F2Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut letters = Vec::new();
        for c in s.chars() {
            if c.is_whitespace() {
                continue;
            }
            match F2Letter::from_char(c) {
                Some(l) => letters.push(l),
                None => return Err(Error::BadLetter(c)),
            }
        }
        Ok(F2Word::new(letters))
    }
}
