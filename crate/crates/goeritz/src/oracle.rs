//! Independent enumeration oracles backing the verification suite and the
//! tests. Nothing here is used on the normal computation paths: the point
//! is that each oracle reaches its answer by a different route than the
//! implementation it checks.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::algebra::{CoreLetter, Gen, GenLetter, GenWord, NormalForm};
use crate::error::Error;
use crate::f2::F2Word;
use crate::subgroup::SubgroupId;

/// Desk-scale cap on the primitive-word enumeration.
pub const MAX_ORACLE_LEN: usize = 12;

/// All cyclically reduced primitive words up to a length cap, enumerated by
/// closing the basis {x, y} under elementary Nielsen transformations and
/// expanding the results over rotations and inversion.
pub struct PrimitiveTable {
    max_len: usize,
    words: BTreeSet<F2Word>,
}

/// Enumerate primitive words of length at most `max_len`.
///
/// Breadth-first search over basis pairs: starting from (x, y), apply swaps,
/// inversions, and the four one-sided multiplications, keeping pairs whose
/// components stay within the length cap. Every component of a reachable
/// pair is primitive, and every primitive word of length at most the cap is
/// a rotation of such a component or of its inverse.
pub fn primitive_words_up_to(max_len: usize) -> Result<PrimitiveTable, Error> {
    if max_len > MAX_ORACLE_LEN {
        return Err(Error::ResourceCap(format!(
            "oracle length {max_len} exceeds {MAX_ORACLE_LEN}"
        )));
    }
    let start = (F2Word::x(), F2Word::y());
    let mut seen: HashSet<(F2Word, F2Word)> = HashSet::from([start.clone()]);
    let mut queue: VecDeque<(F2Word, F2Word)> = VecDeque::from([start]);
    let mut components: HashSet<F2Word> = HashSet::new();
    while let Some((u, v)) = queue.pop_front() {
        components.insert(u.clone());
        components.insert(v.clone());
        let moves = [
            (v.clone(), u.clone()),
            (u.inverse(), v.clone()),
            (u.concat(&v).reduced(), v.clone()),
            (u.concat(&v.inverse()).reduced(), v.clone()),
            (v.concat(&u).reduced(), v.clone()),
            (v.inverse().concat(&u).reduced(), v.clone()),
        ];
        for pair in moves {
            if pair.0.len() > max_len || pair.1.len() > max_len || pair.0.is_empty() {
                continue;
            }
            if seen.insert(pair.clone()) {
                queue.push_back(pair);
            }
        }
    }

    let mut words = BTreeSet::new();
    for w in components {
        let cyc = w.cyclically_reduced();
        if cyc.len() > max_len {
            continue;
        }
        for cand in [cyc.clone(), cyc.inverse()] {
            for k in 0..cand.len().max(1) {
                words.insert(cand.rotated(k));
            }
        }
    }
    Ok(PrimitiveTable { max_len, words })
}

impl PrimitiveTable {
    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Membership of the cyclic reduction of `w`. Only meaningful for words
    /// whose cyclic reduction fits under the table's length cap.
    pub fn contains(&self, w: &F2Word) -> bool {
        self.words.contains(&w.cyclically_reduced())
    }

    /// The stored cyclically reduced primitive words, shortest first.
    pub fn words(&self) -> impl Iterator<Item = &F2Word> {
        self.words.iter()
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// All reduced words of length at most `max_len`.
pub fn reduced_words_up_to(max_len: usize) -> Vec<F2Word> {
    let mut out = vec![F2Word::empty()];
    let mut layer = vec![F2Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in all_f2_letters() {
                if w.letters().last() == Some(&l.inverted()) {
                    continue;
                }
                let mut letters = w.letters().to_vec();
                letters.push(l);
                next.push(F2Word::new(letters));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// All cyclically reduced words of length at most `max_len`, the empty word
/// included.
pub fn cyclically_reduced_words_up_to(max_len: usize) -> Vec<F2Word> {
    reduced_words_up_to(max_len)
        .into_iter()
        .filter(|w| w.is_cyclically_reduced())
        .collect()
}

fn all_f2_letters() -> [crate::f2::F2Letter; 4] {
    use crate::f2::{F2Base, F2Letter};
    [
        F2Letter::new(F2Base::X, false),
        F2Letter::new(F2Base::X, true),
        F2Letter::new(F2Base::Y, false),
        F2Letter::new(F2Base::Y, true),
    ]
}

/// Bounded breadth-first closure of a word under the defining relations,
/// applied as string rewrites: free cancellation and insertion of inverse
/// pairs, deletion and insertion of the relator gbsgbs (and its inverse),
/// and adjacent swaps with the central letters e and a. Everything reached
/// represents the same group element as the start word.
pub fn rewrite_class(start: &GenWord, extra_len: usize, max_states: usize) -> HashSet<GenWord> {
    let cap = start.len() + extra_len;
    let relator: Vec<GenLetter> = "gbsgbs".parse::<GenWord>().unwrap().letters().to_vec();
    let relator_inv: Vec<GenLetter> = relator.iter().rev().map(|l| l.inverted()).collect();
    let all_letters: Vec<GenLetter> = vec![
        GenLetter::new(Gen::Epsilon, false),
        GenLetter::new(Gen::Epsilon, true),
        GenLetter::new(Gen::Alpha, false),
        GenLetter::new(Gen::Beta, false),
        GenLetter::new(Gen::Beta, true),
        GenLetter::new(Gen::Gamma, false),
        GenLetter::new(Gen::Sigma, false),
    ];

    let mut seen: HashSet<GenWord> = HashSet::from([start.clone()]);
    let mut queue: VecDeque<GenWord> = VecDeque::from([start.clone()]);
    while let Some(w) = queue.pop_front() {
        if seen.len() >= max_states {
            break;
        }
        let letters = w.letters();
        let mut neighbors: Vec<Vec<GenLetter>> = Vec::new();

        // free cancellation of adjacent inverse pairs (this covers the
        // involution relators, whose letters are their own inverses)
        for i in 0..letters.len().saturating_sub(1) {
            if letters[i + 1] == letters[i].inverted() {
                let mut next = letters.to_vec();
                next.drain(i..=i + 1);
                neighbors.push(next);
            }
        }
        // deletion of a relator occurrence
        for pattern in [&relator, &relator_inv] {
            for i in 0..letters.len().saturating_sub(pattern.len() - 1) {
                if &letters[i..i + pattern.len()] == pattern.as_slice() {
                    let mut next = letters.to_vec();
                    next.drain(i..i + pattern.len());
                    neighbors.push(next);
                }
            }
        }
        // swaps with the central letters
        for i in 0..letters.len().saturating_sub(1) {
            let central = |l: &GenLetter| matches!(l.gen(), Gen::Epsilon | Gen::Alpha);
            if central(&letters[i]) || central(&letters[i + 1]) {
                let mut next = letters.to_vec();
                next.swap(i, i + 1);
                neighbors.push(next);
            }
        }
        // insertion of inverse pairs and relator occurrences
        if letters.len() + 2 <= cap {
            for i in 0..=letters.len() {
                for l in &all_letters {
                    let mut next = letters.to_vec();
                    next.splice(i..i, [*l, l.inverted()]);
                    neighbors.push(next);
                }
            }
        }
        if letters.len() + relator.len() <= cap {
            for i in 0..=letters.len() {
                for pattern in [&relator, &relator_inv] {
                    let mut next = letters.to_vec();
                    next.splice(i..i, pattern.iter().copied());
                    neighbors.push(next);
                }
            }
        }

        for next in neighbors {
            let next = GenWord::new(next);
            if seen.len() >= max_states {
                break;
            }
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen
}

/// All member cores of a stabilizer subgroup up to `max_core_len`, obtained
/// by closing the advertised generators under left multiplication. The
/// search keeps intermediate cores slightly above the cap so that every
/// member within the cap is reached.
pub fn subgroup_core_closure(subgroup: SubgroupId, max_core_len: usize) -> HashSet<Vec<CoreLetter>> {
    let slack = 3;
    let mut gens: Vec<NormalForm> = Vec::new();
    for g in subgroup.generators() {
        gens.push(g.clone());
        gens.push(g.inverse());
    }
    let identity = NormalForm::identity();
    let mut seen: HashSet<Vec<CoreLetter>> = HashSet::from([identity.core().to_vec()]);
    let mut queue: VecDeque<NormalForm> = VecDeque::from([identity]);
    while let Some(w) = queue.pop_front() {
        for g in &gens {
            let next = g.multiply(&w);
            if next.core().len() > max_core_len + slack {
                continue;
            }
            if seen.insert(next.core().to_vec()) {
                queue.push_back(next);
            }
        }
    }
    seen.retain(|core| core.len() <= max_core_len);
    seen
}

/// All alternating core words of length at most `max_len`.
pub fn alternating_cores_up_to(max_len: usize) -> Vec<Vec<CoreLetter>> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for core in &layer {
            for l in CoreLetter::ALL {
                if core.last() == Some(&l) {
                    continue;
                }
                let mut extended = core.clone();
                extended.push(l);
                next.push(extended);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> F2Word {
        s.parse().unwrap()
    }

    #[test]
    fn oracle_length_one() {
        let table = primitive_words_up_to(1).unwrap();
        let got: Vec<String> = table
            .words()
            .filter(|word| word.len() <= 1)
            .map(|word| word.to_string())
            .collect();
        assert_eq!(got, vec!["x", "X", "y", "Y"]);
    }

    #[test]
    fn oracle_length_two_adds_exactly_the_mixed_words() {
        let table = primitive_words_up_to(2).unwrap();
        let len2: BTreeSet<String> = table
            .words()
            .filter(|word| word.len() == 2)
            .map(|word| word.to_string())
            .collect();
        let expected: BTreeSet<String> = ["xy", "yx", "XY", "YX", "xY", "Yx", "Xy", "yX"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(len2, expected);
    }

    #[test]
    fn oracle_rejects_mixed_inverse_words() {
        let table = primitive_words_up_to(6).unwrap();
        for word in table.words() {
            assert!(
                !word.mixed_inverse_criterion(),
                "oracle contains {word} with a mixed inverse pair"
            );
        }
    }

    #[test]
    fn oracle_cap_is_enforced() {
        assert!(primitive_words_up_to(13).is_err());
    }

    #[test]
    fn rewrite_class_confirms_central_extraction() {
        // the bounded rewriting closure of "baeB" reaches "ea", witnessing
        // equality without touching the normal-form machinery
        let class = rewrite_class(&"baeB".parse().unwrap(), 4, 200_000);
        assert!(class.contains(&"ea".parse::<GenWord>().unwrap()));
        // and everything in the class agrees on the normal form
        let target = "baeB".parse::<GenWord>().unwrap().normal_form();
        for member in &class {
            assert_eq!(member.normal_form(), target, "member {member}");
        }
    }

    #[test]
    fn rewrite_class_kills_relators() {
        let class = rewrite_class(&"gbsgbs".parse().unwrap(), 2, 200_000);
        assert!(class.contains(&GenWord::empty()));
    }

    #[test]
    fn closure_excludes_t_from_the_disk_stabilizer() {
        let closure = subgroup_core_closure(SubgroupId::StabE, 8);
        assert!(!closure.contains(&vec![CoreLetter::T]));
        assert!(closure.contains(&vec![CoreLetter::T, CoreLetter::Sigma]));
        assert!(closure.contains(&vec![CoreLetter::Gamma]));
    }

    #[test]
    fn closure_matches_tau_powers() {
        let closure = subgroup_core_closure(SubgroupId::StabPairPointwise, 8);
        let tau4 = crate::algebra::tau_power(4);
        assert!(closure.contains(tau4.core()));
        assert_eq!(closure.len(), 9); // identity and tau^{+-1..4}
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(reduced_words_up_to(2).len(), 1 + 4 + 12);
        assert_eq!(alternating_cores_up_to(3).len(), 1 + 3 + 6 + 12);
        let cyc = cyclically_reduced_words_up_to(2);
        assert!(cyc.contains(&w("xy")));
        assert!(!cyc.iter().any(|v| v == &w("xX")));
    }
}
