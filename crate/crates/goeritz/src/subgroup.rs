//! Membership predicates for the stabilizer subgroups of the splitting.
//!
//! Four subgroups are decidable here, all containing the central elements
//! epsilon and alpha, so membership is a condition on the core alone:
//!
//! * the stabilizer of the primitive disk E, generated by beta and gamma;
//! * the setwise stabilizer of the primitive pair {D, E}, generated by
//!   sigma and tau;
//! * the pointwise stabilizer of {D, E}, generated by tau (the edge group
//!   of the splitting);
//! * the stabilizer of E together with a chosen dual disk E', generated by
//!   beta.
//!
//! Each predicate is a closed-form condition on the alternating core,
//! validated against the generator-closure enumeration in [`crate::oracle`].

use std::fmt;
use std::str::FromStr;

use crate::algebra::{CoreLetter, NormalForm};
use crate::error::Error;

/// The decidable stabilizer subgroups.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum SubgroupId {
    /// Stabilizer of the primitive disk E (a black vertex of the tree).
    StabE,
    /// Setwise stabilizer of the primitive pair {D, E} (a white vertex).
    StabPairSetwise,
    /// Pointwise stabilizer of {D, E} (an edge; the amalgamated subgroup).
    StabPairPointwise,
    /// Stabilizer of the disk E and a fixed dual disk E'.
    StabEEprime,
}

impl SubgroupId {
    pub const ALL: [SubgroupId; 4] = [
        SubgroupId::StabE,
        SubgroupId::StabPairSetwise,
        SubgroupId::StabPairPointwise,
        SubgroupId::StabEEprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SubgroupId::StabE => "stab-e",
            SubgroupId::StabPairSetwise => "stab-pair-setwise",
            SubgroupId::StabPairPointwise => "stab-pair-pointwise",
            SubgroupId::StabEEprime => "stab-e-eprime",
        }
    }

    /// The advertised generators, not counting the central epsilon and
    /// alpha which lie in every one of these subgroups.
    pub fn generators(self) -> Vec<NormalForm> {
        match self {
            SubgroupId::StabE => vec![NormalForm::beta(), NormalForm::gamma()],
            SubgroupId::StabPairSetwise => vec![NormalForm::sigma(), NormalForm::tau()],
            SubgroupId::StabPairPointwise => vec![NormalForm::tau()],
            SubgroupId::StabEEprime => vec![NormalForm::beta()],
        }
    }
}

impl fmt::Display for SubgroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

impl FromStr for SubgroupId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "stab-e" => Ok(SubgroupId::StabE),
            "stab-pair-setwise" => Ok(SubgroupId::StabPairSetwise),
            "stab-pair-pointwise" => Ok(SubgroupId::StabPairPointwise),
            "stab-e-eprime" => Ok(SubgroupId::StabEEprime),
            _ => Err(Error::BadLetter(s.chars().next().unwrap_or('?'))),
        }
    }
}

/// Lengths of the maximal runs of non-gamma letters in a core.
fn non_gamma_run_lengths(core: &[CoreLetter]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0usize;
    for &l in core {
        if l == CoreLetter::Gamma {
            if current > 0 {
                runs.push(current);
                current = 0;
            }
        } else {
            current += 1;
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

fn is_beta_power(core: &[CoreLetter]) -> bool {
    use CoreLetter::{Gamma, Sigma, T};
    if !core.len().is_multiple_of(3) {
        return false;
    }
    core.chunks(3).all(|c| c == [Gamma, T, Sigma]) || core.chunks(3).all(|c| c == [Sigma, T, Gamma])
}

impl NormalForm {
    /// Membership in a stabilizer subgroup. The epsilon and alpha
    /// coordinates are unconstrained; the condition is on the core:
    ///
    /// * `StabE`: every maximal run of {sigma, t} letters has even length
    ///   (the core lies in the subgroup generated by gamma and t sigma);
    /// * `StabPairSetwise`: no gamma letter at all;
    /// * `StabPairPointwise`: no gamma letter and even length (a power of
    ///   tau);
    /// * `StabEEprime`: a power of gamma t sigma or of sigma t gamma (a
    ///   power of beta).
    pub fn is_member(&self, subgroup: SubgroupId) -> bool {
        let core = self.core();
        match subgroup {
            SubgroupId::StabE => non_gamma_run_lengths(core).iter().all(|r| r % 2 == 0),
            SubgroupId::StabPairSetwise => !core.contains(&CoreLetter::Gamma),
            SubgroupId::StabPairPointwise => {
                !core.contains(&CoreLetter::Gamma) && core.len().is_multiple_of(2)
            }
            SubgroupId::StabEEprime => is_beta_power(core),
        }
    }
}

/// Left-coset equality: a and b represent the same coset of the subgroup
/// iff a^-1 b is a member.
pub fn same_left_coset(a: &NormalForm, b: &NormalForm, subgroup: SubgroupId) -> bool {
    a.inverse().multiply(b).is_member(subgroup)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{tau_power, GenWord};

    fn nf(s: &str) -> NormalForm {
        s.parse::<GenWord>().unwrap().normal_form()
    }

    #[test]
    fn tau_lies_in_both_vertex_stabilizers_and_the_edge_group() {
        let tau = NormalForm::tau();
        assert!(tau.is_member(SubgroupId::StabE));
        assert!(tau.is_member(SubgroupId::StabPairSetwise));
        assert!(tau.is_member(SubgroupId::StabPairPointwise));
        // tau moves the dual disk E', so it is not a power of beta
        assert!(!tau.is_member(SubgroupId::StabEEprime));
    }

    #[test]
    fn sigma_exchanges_the_pair() {
        let sigma = NormalForm::sigma();
        assert!(sigma.is_member(SubgroupId::StabPairSetwise));
        assert!(!sigma.is_member(SubgroupId::StabPairPointwise));
        assert!(!sigma.is_member(SubgroupId::StabE));
        assert!(!sigma.is_member(SubgroupId::StabEEprime));
    }

    #[test]
    fn t_alone_is_not_in_the_disk_stabilizer() {
        let t = nf("t");
        assert!(t.is_member(SubgroupId::StabPairSetwise));
        assert!(!t.is_member(SubgroupId::StabE));
        assert!(!t.is_member(SubgroupId::StabPairPointwise));
    }

    #[test]
    fn central_coordinates_are_unconstrained() {
        for s in SubgroupId::ALL {
            assert!(nf("eea").is_member(s), "{s}");
            assert!(NormalForm::identity().is_member(s), "{s}");
        }
    }

    #[test]
    fn advertised_generators_are_members() {
        for s in SubgroupId::ALL {
            for g in s.generators() {
                assert!(g.is_member(s), "{s}: {g}");
                assert!(g.inverse().is_member(s), "{s}: inverse of {g}");
            }
        }
    }

    #[test]
    fn beta_powers() {
        let beta = NormalForm::beta();
        for k in -3..=3 {
            assert!(beta.pow(k).is_member(SubgroupId::StabEEprime), "beta^{k}");
            assert!(beta.pow(k).is_member(SubgroupId::StabE), "beta^{k}");
        }
        // gamma tau^k gamma lies in the disk stabilizer but not the edge group
        let g = NormalForm::gamma();
        let w = g.multiply(&tau_power(2)).multiply(&g);
        assert!(w.is_member(SubgroupId::StabE));
        assert!(!w.is_member(SubgroupId::StabPairPointwise));
    }

    #[test]
    fn names_round_trip() {
        for s in SubgroupId::ALL {
            assert_eq!(s.name().parse::<SubgroupId>().unwrap(), s);
        }
        assert!("stab-x".parse::<SubgroupId>().is_err());
    }
}
