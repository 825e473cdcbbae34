//! Britton decompositions over the splitting into the two vertex
//! stabilizers, and the elliptic/hyperbolic classification of the action on
//! the tree.
//!
//! Every element factors uniquely as a prefix in the edge group followed by
//! syllables that strictly alternate between canonical right-coset
//! representatives of the two sides: for the white side the transversal is
//! {identity, sigma}; for the black side it is the even-run core words that
//! start with gamma (plus the identity). The syllable count does not depend
//! on the chosen transversals.

use crate::algebra::{CoreLetter, NormalForm};
use crate::subgroup::SubgroupId;
use crate::tree::{Color, TreeVertex};

/// One syllable of a Britton decomposition: a coset representative tagged
/// with the side it came from (black = disk stabilizer, white = setwise
/// pair stabilizer).
#[derive(Clone, Debug, PartialEq)]
pub struct Syllable {
    pub side: Color,
    pub element: NormalForm,
}

/// Britton decomposition g = prefix * s1 * s2 * ... with the prefix in the
/// edge group and syllables alternating sides, none of them in the edge
/// group.
#[derive(Clone, Debug, PartialEq)]
pub struct AmalgamForm {
    pub prefix: NormalForm,
    pub syllables: Vec<Syllable>,
}

impl AmalgamForm {
    pub fn syllable_count(&self) -> usize {
        self.syllables.len()
    }

    /// Multiply the decomposition back out.
    pub fn assemble(&self) -> NormalForm {
        let mut out = self.prefix.clone();
        for s in &self.syllables {
            out = out.multiply(&s.element);
        }
        out
    }
}

/// Classification of the isometry induced on the tree.
#[derive(Clone, Debug, PartialEq)]
pub enum Isometry {
    Elliptic { fixed_vertex: TreeVertex },
    Hyperbolic { translation_length: usize },
}

/// Split a factor lying in the given side as c * rep, with c in the edge
/// group and rep the canonical right-coset representative.
fn split_right_coset(f: &NormalForm, side: Color) -> (NormalForm, NormalForm) {
    match side {
        Color::White => {
            if f.is_member(SubgroupId::StabPairPointwise) {
                (f.clone(), NormalForm::identity())
            } else {
                (f.multiply(&NormalForm::sigma()), NormalForm::sigma())
            }
        }
        Color::Black => {
            let core = f.core();
            let lead = core
                .iter()
                .position(|&l| l == CoreLetter::Gamma)
                .unwrap_or(core.len());
            let c = NormalForm::from_parts(f.eps_exp(), f.alpha_bit(), core[..lead].iter().copied());
            let rep = NormalForm::from_parts(0, false, core[lead..].iter().copied());
            (c, rep)
        }
    }
}

impl NormalForm {
    /// Britton decomposition of this element over the splitting.
    pub fn amalgam_form(&self) -> AmalgamForm {
        let central = NormalForm::from_parts(self.eps_exp(), self.alpha_bit(), []);

        // carve the core into factors: single gamma letters on the black
        // side, maximal {sigma, t} runs on the white side
        let mut factors: Vec<(Color, NormalForm)> = Vec::new();
        let core = self.core();
        let mut i = 0;
        while i < core.len() {
            if core[i] == CoreLetter::Gamma {
                factors.push((Color::Black, NormalForm::gamma()));
                i += 1;
            } else {
                let mut j = i;
                while j < core.len() && core[j] != CoreLetter::Gamma {
                    j += 1;
                }
                factors.push((
                    Color::White,
                    NormalForm::from_parts(0, false, core[i..j].iter().copied()),
                ));
                i = j;
            }
        }

        // merge same-side neighbours and absorb edge-group factors until the
        // sides strictly alternate and every factor lies outside the edge
        // group
        loop {
            let mut changed = false;
            let mut i = 0;
            while i + 1 < factors.len() {
                if factors[i].0 == factors[i + 1].0 {
                    let (_, f) = factors.remove(i + 1);
                    factors[i].1 = factors[i].1.multiply(&f);
                    changed = true;
                } else {
                    i += 1;
                }
            }
            if factors.len() > 1 {
                if let Some(i) = factors
                    .iter()
                    .position(|(_, f)| f.is_member(SubgroupId::StabPairPointwise))
                {
                    let (_, f) = factors.remove(i);
                    if i > 0 {
                        factors[i - 1].1 = factors[i - 1].1.multiply(&f);
                    } else {
                        factors[0].1 = f.multiply(&factors[0].1);
                    }
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }

        if factors.is_empty()
            || (factors.len() == 1 && factors[0].1.is_member(SubgroupId::StabPairPointwise))
        {
            let tail = factors
                .pop()
                .map(|(_, f)| f)
                .unwrap_or_else(NormalForm::identity);
            return AmalgamForm {
                prefix: central.multiply(&tail),
                syllables: Vec::new(),
            };
        }

        // peel canonical representatives from right to left; the edge-group
        // parts migrate left and finally join the prefix
        let mut syllables = vec![
            Syllable {
                side: Color::Black,
                element: NormalForm::identity(),
            };
            factors.len()
        ];
        let mut carry = NormalForm::identity();
        for i in (0..factors.len()).rev() {
            let (side, f) = &factors[i];
            let (c, rep) = split_right_coset(&f.multiply(&carry), *side);
            debug_assert!(!rep.is_identity());
            syllables[i] = Syllable {
                side: *side,
                element: rep,
            };
            carry = c;
        }
        AmalgamForm {
            prefix: central.multiply(&carry),
            syllables,
        }
    }

    /// Conjugate until the syllable word is cyclically alternating. Returns
    /// the conjugator u and the reduced element u^-1 g u together with its
    /// decomposition.
    pub fn cyclic_syllable_reduction(&self) -> (NormalForm, NormalForm, AmalgamForm) {
        let mut u = NormalForm::identity();
        let mut h = self.clone();
        loop {
            let af = h.amalgam_form();
            let n = af.syllables.len();
            if n >= 2 && af.syllables[0].side == af.syllables[n - 1].side {
                let lead = af.prefix.multiply(&af.syllables[0].element);
                h = lead.inverse().multiply(&h).multiply(&lead);
                u = u.multiply(&lead);
                debug_assert!(h.amalgam_form().syllable_count() < n);
                continue;
            }
            return (u, h, af);
        }
    }

    /// Elliptic elements fix a vertex (exhibited by a conjugator into one of
    /// the vertex stabilizers); hyperbolic elements translate along an axis
    /// by their syllable count after cyclic reduction.
    pub fn classify_isometry(&self) -> Isometry {
        let (u, _, af) = self.cyclic_syllable_reduction();
        match af.syllables.len() {
            0 => Isometry::Elliptic {
                fixed_vertex: TreeVertex::new(Color::Black, u),
            },
            1 => Isometry::Elliptic {
                fixed_vertex: TreeVertex::new(af.syllables[0].side, u),
            },
            n => Isometry::Hyperbolic {
                translation_length: n,
            },
        }
    }
}
