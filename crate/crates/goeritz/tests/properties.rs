//! Property tests for the algebraic invariants: homomorphisms, idempotence,
//! conjugation invariance, membership closure, and decomposition soundness.

use proptest::prelude::*;

use goeritz::{
    act, build_ball, F2Base, F2Letter, F2Word, Gen, GenLetter, GenWord, Isometry, NormalForm,
    SubgroupId,
};

fn f2_letter() -> impl Strategy<Value = F2Letter> {
    (prop_oneof![Just(F2Base::X), Just(F2Base::Y)], any::<bool>())
        .prop_map(|(base, inv)| F2Letter::new(base, inv))
}

fn f2_word(max_len: usize) -> impl Strategy<Value = F2Word> {
    prop::collection::vec(f2_letter(), 0..=max_len).prop_map(F2Word::new)
}

fn gen_letter() -> impl Strategy<Value = GenLetter> {
    (
        prop_oneof![
            Just(Gen::Epsilon),
            Just(Gen::Alpha),
            Just(Gen::Beta),
            Just(Gen::Gamma),
            Just(Gen::Sigma),
        ],
        any::<bool>(),
    )
        .prop_map(|(g, inv)| GenLetter::new(g, inv))
}

fn gen_word(max_len: usize) -> impl Strategy<Value = GenWord> {
    prop::collection::vec(gen_letter(), 0..=max_len).prop_map(GenWord::new)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Exhaustive agreement between the Whitehead decision and the Nielsen
/// oracle two letters past the acceptance scale.
#[test]
fn primitivity_agrees_with_oracle_up_to_length_eight() {
    let table = goeritz::oracle::primitive_words_up_to(8).unwrap();
    for w in goeritz::oracle::cyclically_reduced_words_up_to(8) {
        assert_eq!(w.is_primitive(), table.contains(&w), "word {w}");
    }
}

proptest! {
    #[test]
    fn reduce_is_idempotent_and_multiplicative(u in f2_word(16), v in f2_word(16)) {
        let r = u.reduced();
        prop_assert_eq!(r.reduced(), r.clone());
        prop_assert!(r.is_reduced());
        prop_assert_eq!(
            u.concat(&v).reduced(),
            u.reduced().concat(&v.reduced()).reduced()
        );
    }

    #[test]
    fn cyclic_reduce_is_idempotent(u in f2_word(16)) {
        let c = u.cyclically_reduced();
        prop_assert!(c.is_cyclically_reduced());
        prop_assert_eq!(c.cyclically_reduced(), c);
    }

    #[test]
    fn exponent_sums_are_a_homomorphism(u in f2_word(16), v in f2_word(16)) {
        let (ux, uy) = u.exponent_sums();
        let (vx, vy) = v.exponent_sums();
        prop_assert_eq!(u.concat(&v).exponent_sums(), (ux + vx, uy + vy));
        prop_assert_eq!(u.reduced().exponent_sums(), (ux, uy));
        prop_assert_eq!(u.cyclically_reduced().exponent_sums(), (ux, uy));
    }

    #[test]
    fn mixed_inverse_filter_is_sound(u in f2_word(10)) {
        if u.mixed_inverse_criterion() {
            prop_assert!(!u.is_trivial());
            prop_assert!(!u.is_primitive());
        }
    }

    #[test]
    fn primitives_have_coprime_exponent_sums(u in f2_word(8)) {
        if u.is_primitive() {
            let (a, b) = u.exponent_sums();
            prop_assert_eq!(gcd(a.unsigned_abs(), b.unsigned_abs()), 1);
        }
    }

    #[test]
    fn primitivity_is_conjugation_invariant(w in f2_word(6), u in f2_word(4)) {
        let conjugate = u.concat(&w).concat(&u.inverse());
        prop_assert_eq!(conjugate.is_primitive(), w.is_primitive());
    }

    #[test]
    fn normal_form_is_a_homomorphism(u in gen_word(14), v in gen_word(14)) {
        prop_assert_eq!(
            u.concat(&v).normal_form(),
            u.normal_form().multiply(&v.normal_form())
        );
    }

    #[test]
    fn normal_form_round_trips(u in gen_word(20)) {
        let n = u.normal_form();
        prop_assert_eq!(n.to_word().normal_form(), n);
    }

    #[test]
    fn inverse_gives_identity(u in gen_word(14)) {
        let n = u.normal_form();
        prop_assert!(n.multiply(&n.inverse()).is_identity());
        prop_assert!(n.inverse().multiply(&n).is_identity());
    }

    #[test]
    fn multiplication_is_associative(
        a in gen_word(10),
        b in gen_word(10),
        c in gen_word(10),
    ) {
        let (a, b, c) = (a.normal_form(), b.normal_form(), c.normal_form());
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn central_coordinates_commute(a in gen_word(10), b in gen_word(10)) {
        let (a, b) = (a.normal_form(), b.normal_form());
        let ab = a.multiply(&b);
        let ba = b.multiply(&a);
        prop_assert_eq!(ab.eps_exp(), ba.eps_exp());
        prop_assert_eq!(ab.alpha_bit(), ba.alpha_bit());
    }

    #[test]
    fn order_is_conjugation_invariant(g in gen_word(10), u in gen_word(8)) {
        let g = g.normal_form();
        let u = u.normal_form();
        let conjugate = u.multiply(&g).multiply(&u.inverse());
        prop_assert_eq!(conjugate.order(), g.order());
    }

    #[test]
    fn membership_is_closed_under_product_and_inverse(
        picks in prop::collection::vec(0usize..4, 1..6),
        eps in -2i64..=2,
        alpha in any::<bool>(),
        subgroup_idx in 0usize..4,
    ) {
        let subgroup = SubgroupId::ALL[subgroup_idx];
        let gens = subgroup.generators();
        // a random product of advertised generators and central letters is
        // always a member
        let mut member = NormalForm::from_parts(eps, alpha, []);
        for p in picks {
            let g = &gens[p % gens.len()];
            member = if p < 2 { member.multiply(g) } else { member.multiply(&g.inverse()) };
        }
        prop_assert!(member.is_member(subgroup));
        prop_assert!(member.inverse().is_member(subgroup));
        prop_assert!(member.multiply(&member).is_member(subgroup));
    }

    #[test]
    fn amalgam_form_is_sound(u in gen_word(16)) {
        let g = u.normal_form();
        let af = g.amalgam_form();
        prop_assert_eq!(af.assemble(), g);
        prop_assert!(af.prefix.is_member(SubgroupId::StabPairPointwise));
        for w in af.syllables.windows(2) {
            prop_assert_ne!(w[0].side, w[1].side);
        }
        for s in &af.syllables {
            prop_assert!(!s.element.is_member(SubgroupId::StabPairPointwise));
            prop_assert!(s.element.is_member(s.side.stabilizer()));
        }
    }

    #[test]
    fn translation_length_doubles(u in gen_word(10)) {
        let g = u.normal_form();
        if let Isometry::Hyperbolic { translation_length } = g.classify_isometry() {
            prop_assert_eq!(
                g.multiply(&g).classify_isometry(),
                Isometry::Hyperbolic { translation_length: 2 * translation_length }
            );
        }
    }

    #[test]
    fn elliptic_witnesses_are_fixed(u in gen_word(10)) {
        let g = u.normal_form();
        if let Isometry::Elliptic { fixed_vertex } = g.classify_isometry() {
            prop_assert_eq!(act(&g, &fixed_vertex), fixed_vertex);
        }
    }

    #[test]
    fn stabilizer_consistency_on_a_small_ball(u in gen_word(8)) {
        let g = u.normal_form();
        let ball = build_ball(2, 3).unwrap();
        for v in ball.vertices() {
            let fixed = act(&g, v) == *v;
            let conjugated = v.rep().inverse().multiply(&g).multiply(v.rep());
            prop_assert_eq!(fixed, conjugated.is_member(v.color().stabilizer()));
        }
    }
}
