//! The verification suite: presentation relations, order facts, normal-form
//! canonicality, primitivity against the Nielsen oracle, tree structure,
//! subgroup membership against generator closure, and isometry
//! classification. Every check is deterministic; sampled checks use fixed
//! seeds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{tau_power, Gen, GenLetter, GenWord, NormalForm, Order};
use crate::amalgam::Isometry;
use crate::error::Error;
use crate::oracle;
use crate::subgroup::SubgroupId;
use crate::tree::{act, build_ball, Color, TreeVertex};

/// Outcome of a single verification check.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// A full verification run.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn counts(&self) -> (usize, usize) {
        let passed = self.checks.iter().filter(|c| c.passed).count();
        (passed, self.checks.len())
    }
}

/// Knobs for the suite; the defaults match the documented desk scale.
#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub radius: usize,
    pub branch_bound: usize,
    pub oracle_len: usize,
    pub samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            radius: 4,
            branch_bound: 6,
            oracle_len: 6,
            samples: 100,
        }
    }
}

fn nf(s: &str) -> NormalForm {
    s.parse::<GenWord>().unwrap().normal_form()
}

fn random_gen_word(rng: &mut ChaCha8Rng, max_len: usize) -> GenWord {
    let len = rng.random_range(0..=max_len);
    let letters = (0..len)
        .map(|_| match rng.random_range(0..7) {
            0 => GenLetter::new(Gen::Epsilon, false),
            1 => GenLetter::new(Gen::Epsilon, true),
            2 => GenLetter::new(Gen::Alpha, false),
            3 => GenLetter::new(Gen::Beta, false),
            4 => GenLetter::new(Gen::Beta, true),
            5 => GenLetter::new(Gen::Gamma, false),
            _ => GenLetter::new(Gen::Sigma, false),
        })
        .collect();
    GenWord::new(letters)
}

/// Relation-level checks for the presentation: the defining relations, the
/// derived-element identities, and the substitution round trips.
pub fn verify_presentation() -> Vec<Check> {
    let mut checks = Vec::new();
    let id = NormalForm::identity();

    for (name, word) in [
        ("gamma^2 = 1", "gg"),
        ("sigma^2 = 1", "ss"),
        ("alpha^2 = 1", "aa"),
        ("(gamma beta sigma)^2 = 1", "gbsgbs"),
    ] {
        let got = nf(word);
        checks.push(Check::new(name, got == id, format!("normal form {got}")));
    }

    let mut central = true;
    for (c, others) in [("e", "abgs"), ("a", "bgs")] {
        for o in others.chars() {
            let left = nf(&format!("{c}{o}"));
            let right = nf(&format!("{o}{c}"));
            central &= left == right;
        }
    }
    checks.push(Check::new(
        "epsilon and alpha are central",
        central,
        "commute with every generator".to_string(),
    ));

    let beta = NormalForm::beta();
    let beta_prime = NormalForm::beta_prime();
    let prod = beta.multiply(&beta_prime);
    checks.push(Check::new(
        "beta beta' = alpha",
        prod == NormalForm::alpha(),
        format!("normal form {prod}"),
    ));
    checks.push(Check::new(
        "(beta beta')^2 = 1",
        prod.multiply(&prod) == id,
        String::new(),
    ));
    checks.push(Check::new(
        "beta beta' = beta' beta",
        prod == beta_prime.multiply(&beta),
        String::new(),
    ));

    checks.push(Check::new(
        "tau = gamma beta",
        nf("gb") == NormalForm::tau(),
        format!("normal form {}", nf("gb")),
    ));
    checks.push(Check::new(
        "tau' = tau sigma = gamma beta sigma",
        NormalForm::tau().multiply(&NormalForm::sigma()) == NormalForm::tau_prime()
            && nf("gbs") == NormalForm::tau_prime(),
        format!("normal form {}", nf("gbs")),
    ));

    let mut gen_round_trip = true;
    for g in ["e", "a", "b", "g", "s", "t"] {
        let n = nf(g);
        gen_round_trip &= n.to_word().normal_form() == n;
    }
    checks.push(Check::new(
        "substitution maps compose to the identity on generators",
        gen_round_trip,
        "e a b g s t".to_string(),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(0x0901);
    let mut round_trips = 0usize;
    let mut ok = true;
    for _ in 0..1000 {
        let w = random_gen_word(&mut rng, 30);
        let n = w.normal_form();
        ok &= n.to_word().normal_form() == n;
        round_trips += 1;
    }
    checks.push(Check::new(
        "round trip on random words",
        ok,
        format!("{round_trips} words of length <= 30"),
    ));

    checks
}

/// The published order facts.
pub fn verify_orders() -> Vec<Check> {
    let mut checks = Vec::new();
    let two: Vec<(&str, NormalForm)> = vec![
        ("alpha", NormalForm::alpha()),
        ("gamma", NormalForm::gamma()),
        ("sigma", NormalForm::sigma()),
        ("tau'", NormalForm::tau_prime()),
        ("gamma beta sigma", nf("gbs")),
    ];
    for (name, el) in two {
        let got = el.order();
        checks.push(Check::new(
            &format!("order({name}) = 2"),
            got == Order::Finite(2),
            format!("got {got}"),
        ));
    }
    let infinite: Vec<(&str, NormalForm)> = vec![
        ("beta", NormalForm::beta()),
        ("beta'", NormalForm::beta_prime()),
        ("tau", NormalForm::tau()),
        ("epsilon", NormalForm::epsilon()),
    ];
    for (name, el) in infinite {
        let got = el.order();
        checks.push(Check::new(
            &format!("order({name}) = infinite"),
            got == Order::Infinite,
            format!("got {got}"),
        ));
    }
    checks
}

/// Canonicality of the normal form: relator rotations die, the enumerated
/// normal-form range round-trips exactly (so distinct triples are distinct
/// elements), the map is a homomorphism on random pairs, and the bounded
/// rewriting oracle finds no collisions.
pub fn verify_normal_forms() -> Vec<Check> {
    let mut checks = Vec::new();

    let relators: Vec<GenWord> = ["gg", "ss", "aa", "gbsgbs", "eE", "bB"]
        .iter()
        .map(|s| s.parse().unwrap())
        .chain(commutator_relators())
        .collect();
    let mut rotations_ok = true;
    let mut rotation_count = 0usize;
    for r in &relators {
        for k in 0..r.len().max(1) {
            rotations_ok &= r.rotated(k).normal_form().is_identity();
            rotation_count += 1;
        }
    }
    checks.push(Check::new(
        "all relator rotations normalize to identity",
        rotations_ok,
        format!("{rotation_count} rotations of {} relators", relators.len()),
    ));

    let mut forms = Vec::new();
    for core in oracle::alternating_cores_up_to(8) {
        for eps in -2..=2 {
            for alpha in [false, true] {
                forms.push(NormalForm::from_parts(eps, alpha, core.iter().copied()));
            }
        }
    }
    let mut collisions = 0usize;
    for n in &forms {
        if n.to_word().normal_form() != *n {
            collisions += 1;
        }
    }
    checks.push(Check::new(
        "zero collisions among distinct normal forms (core <= 8, |eps| <= 2)",
        collisions == 0,
        format!("{} normal forms round-trip exactly", forms.len()),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(0x0903);
    let mut hom_ok = true;
    let pairs = 10_000usize;
    for _ in 0..pairs {
        let u = random_gen_word(&mut rng, 15);
        let v = random_gen_word(&mut rng, 15);
        hom_ok &= u.concat(&v).normal_form() == u.normal_form().multiply(&v.normal_form());
    }
    checks.push(Check::new(
        "normal form is a homomorphism",
        hom_ok,
        format!("{pairs} random pairs"),
    ));

    let mut class_ok = true;
    let mut class_words = 0usize;
    for _ in 0..12 {
        let w = random_gen_word(&mut rng, 5);
        let target = w.normal_form();
        for member in oracle::rewrite_class(&w, 4, 8_000) {
            class_ok &= member.normal_form() == target;
            class_words += 1;
        }
    }
    checks.push(Check::new(
        "bounded rewriting classes agree on the normal form",
        class_ok,
        format!("{class_words} rewritten words across 12 classes"),
    ));

    let mut separated = true;
    let mut separation_pairs = 0usize;
    for _ in 0..20 {
        let a = random_gen_word(&mut rng, 4).normal_form();
        let b = random_gen_word(&mut rng, 4).normal_form();
        if a == b {
            continue;
        }
        let class = oracle::rewrite_class(&a.to_word(), 2, 4_000);
        separated &= !class.contains(&b.to_word());
        separation_pairs += 1;
    }
    checks.push(Check::new(
        "rewriting oracle finds no collisions between distinct normal forms",
        separated && separation_pairs > 0,
        format!("{separation_pairs} sampled distinct pairs"),
    ));

    checks
}

fn commutator_relators() -> Vec<GenWord> {
    let mut out = Vec::new();
    for (central, others) in [("e", "abgs"), ("a", "bgs")] {
        for o in others.chars() {
            let central_inv = if central == "e" { "E" } else { central };
            let other_inv = match o {
                'b' => 'B',
                c => c,
            };
            out.push(
                format!("{central}{o}{central_inv}{other_inv}")
                    .parse()
                    .unwrap(),
            );
        }
    }
    out
}

/// Primitivity decision against the Nielsen-enumeration oracle, soundness
/// of the mixed-inverse filter, and the abelianized necessary condition.
pub fn verify_primitivity(oracle_len: usize) -> Result<Vec<Check>, Error> {
    let table = oracle::primitive_words_up_to(oracle_len)?;
    let words = oracle::cyclically_reduced_words_up_to(oracle_len);
    let mut checks = Vec::new();

    let mut agree = true;
    let mut primitive_count = 0usize;
    for w in &words {
        let decided = w.is_primitive();
        agree &= decided == table.contains(w);
        if decided {
            primitive_count += 1;
        }
    }
    checks.push(Check::new(
        "primitivity decision agrees with the Nielsen oracle",
        agree,
        format!(
            "{} cyclically reduced words of length <= {oracle_len}, {primitive_count} primitive",
            words.len()
        ),
    ));

    let mut filter_sound = true;
    let mut fired = 0usize;
    for w in &words {
        if w.mixed_inverse_criterion() {
            fired += 1;
            filter_sound &= !w.is_trivial() && !table.contains(w);
        }
    }
    checks.push(Check::new(
        "mixed-inverse filter has zero false positives against the oracle",
        filter_sound,
        format!("filter fired on {fired} words"),
    ));

    let mut gcd_ok = true;
    for w in &words {
        if w.is_primitive() {
            let (a, b) = w.exponent_sums();
            gcd_ok &= gcd(a.unsigned_abs(), b.unsigned_abs()) == 1;
        }
    }
    checks.push(Check::new(
        "every decided primitive has coprime exponent sums",
        gcd_ok,
        format!("{primitive_count} primitives checked"),
    ));

    Ok(checks)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Structure of a built ball: tree, bipartite, the published valencies, and
/// a single orbit per color and per edge.
pub fn verify_tree(radius: usize, branch_bound: usize) -> Result<Vec<Check>, Error> {
    let ball = build_ball(radius, branch_bound)?;
    let mut checks = Vec::new();

    checks.push(Check::new(
        "ball is connected and acyclic",
        ball.is_tree(),
        format!(
            "{} vertices, {} edges",
            ball.vertex_count(),
            ball.edge_count()
        ),
    ));
    checks.push(Check::new(
        "ball is bipartite",
        ball.is_bipartite(),
        "every edge joins black to white".to_string(),
    ));

    let mut white_ok = true;
    let mut black_ok = true;
    let mut interior_white = 0usize;
    let mut interior_black = 0usize;
    for id in 0..ball.vertex_count() {
        if !ball.is_interior(id) {
            continue;
        }
        match ball.vertices()[id].color() {
            Color::White => {
                interior_white += 1;
                white_ok &= ball.valency(id) == 2;
            }
            Color::Black => {
                interior_black += 1;
                black_ok &= ball.valency(id) >= branch_bound;
            }
        }
    }
    checks.push(Check::new(
        "interior white vertices have valency exactly 2",
        white_ok && interior_white > 0,
        format!("{interior_white} interior white vertices"),
    ));
    checks.push(Check::new(
        &format!("interior black vertices have valency >= {branch_bound}"),
        black_ok && interior_black > 0,
        format!("{interior_black} interior black vertices"),
    ));

    let report = ball.orbit_and_quotient_check();
    checks.push(Check::new(
        "one black orbit, one white orbit, one edge orbit",
        report.is_single_edge_quotient(),
        format!(
            "{} black, {} white, {} edges all translate to the base",
            report.black_vertices, report.white_vertices, report.edges
        ),
    ));

    Ok(checks)
}

/// Membership predicates against generator closure, the index-2 fact for
/// the edge group in the white stabilizer, and an infinite family of
/// distinct cosets in the black stabilizer.
pub fn verify_membership(max_core_len: usize) -> Vec<Check> {
    let mut checks = Vec::new();
    let cores = oracle::alternating_cores_up_to(max_core_len);

    for subgroup in SubgroupId::ALL {
        let closure = oracle::subgroup_core_closure(subgroup, max_core_len);
        let mut agree = true;
        let mut members = 0usize;
        for core in &cores {
            let predicted = NormalForm::from_parts(0, false, core.iter().copied())
                .is_member(subgroup);
            agree &= predicted == closure.contains(core);
            if predicted {
                members += 1;
            }
        }
        checks.push(Check::new(
            &format!("{subgroup} predicate matches generator closure"),
            agree,
            format!(
                "{} cores of length <= {max_core_len}, {members} members",
                cores.len()
            ),
        ));
    }

    let sigma = NormalForm::sigma();
    let mut index_two = !sigma.is_member(SubgroupId::StabPairPointwise);
    for core in &cores {
        let w = NormalForm::from_parts(0, false, core.iter().copied());
        if !w.is_member(SubgroupId::StabPairSetwise) {
            continue;
        }
        let in_edge = w.is_member(SubgroupId::StabPairPointwise);
        let shifted = w.multiply(&sigma).is_member(SubgroupId::StabPairPointwise);
        index_two &= in_edge != shifted;
    }
    checks.push(Check::new(
        "edge group has index exactly 2 in the white stabilizer",
        index_two,
        "coset representatives identity and sigma".to_string(),
    ));

    let gamma = NormalForm::gamma();
    let reps: Vec<NormalForm> = (0..10).map(|k| gamma.multiply(&tau_power(k))).collect();
    let mut distinct = true;
    for (j, a) in reps.iter().enumerate() {
        for b in reps.iter().skip(j + 1) {
            distinct &= !a
                .multiply(&b.inverse())
                .is_member(SubgroupId::StabPairPointwise);
        }
    }
    checks.push(Check::new(
        "at least 10 distinct edge-group cosets inside the black stabilizer",
        distinct,
        "representatives gamma tau^k, k = 0..9".to_string(),
    ));

    let mut closure_props = true;
    for subgroup in SubgroupId::ALL {
        closure_props &= NormalForm::identity().is_member(subgroup);
        let members: Vec<NormalForm> = cores
            .iter()
            .map(|c| NormalForm::from_parts(0, false, c.iter().copied()))
            .filter(|w| w.is_member(subgroup))
            .take(20)
            .collect();
        for g in subgroup.generators() {
            closure_props &= g.is_member(subgroup);
        }
        for a in &members {
            closure_props &= a.inverse().is_member(subgroup);
            for b in &members {
                closure_props &= a.multiply(b).is_member(subgroup);
            }
        }
    }
    checks.push(Check::new(
        "membership classes contain identity and generators, closed under product and inverse",
        closure_props,
        "20 shortest members per subgroup".to_string(),
    ));

    checks
}

/// Amalgam decompositions and the elliptic/hyperbolic classification on
/// random elements, measured against a built ball.
pub fn verify_isometries(
    radius: usize,
    branch_bound: usize,
    samples: usize,
) -> Result<Vec<Check>, Error> {
    let ball = build_ball(radius, branch_bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x0907);

    let mut assemble_ok = true;
    let mut britton_ok = true;
    let mut elliptic_fixed = true;
    let mut elliptic_count = 0usize;
    let mut witnesses_in_ball = 0usize;
    let mut hyperbolic_count = 0usize;
    let mut doubling_ok = true;
    let mut displacement_ok = true;
    let mut displacement_checked = 0usize;

    for _ in 0..samples {
        let g = random_gen_word(&mut rng, 12).normal_form();
        let af = g.amalgam_form();
        assemble_ok &= af.assemble() == g;
        britton_ok &= af.prefix.is_member(SubgroupId::StabPairPointwise);
        for w in af.syllables.windows(2) {
            britton_ok &= w[0].side != w[1].side;
        }
        for s in &af.syllables {
            britton_ok &= !s.element.is_member(SubgroupId::StabPairPointwise)
                && s.element.is_member(s.side.stabilizer());
        }

        match g.classify_isometry() {
            Isometry::Elliptic { fixed_vertex } => {
                elliptic_count += 1;
                elliptic_fixed &= act(&g, &fixed_vertex) == fixed_vertex;
                if let Some(id) = ball.find_vertex(&fixed_vertex) {
                    witnesses_in_ball += 1;
                    elliptic_fixed &= act(&g, &fixed_vertex) == ball.vertices()[id].clone();
                }
            }
            Isometry::Hyperbolic { translation_length } => {
                hyperbolic_count += 1;
                let square = g.multiply(&g);
                doubling_ok &= square.classify_isometry()
                    == Isometry::Hyperbolic {
                        translation_length: 2 * translation_length,
                    };
                if translation_length <= radius {
                    // conjugate so the axis passes through the base edge;
                    // measurable whenever the truncated ball still contains
                    // the translated base vertex
                    let (_, reduced, _) = g.cyclic_syllable_reduction();
                    let base = TreeVertex::base(Color::Black);
                    if ball.find_vertex(&act(&reduced, &base)).is_some() {
                        let mut min_disp: Option<usize> = None;
                        for (vid, v) in ball.vertices().iter().enumerate() {
                            let image = act(&reduced, v);
                            if let Some(wid) = ball.find_vertex(&image) {
                                if let Some(d) = ball.distance(vid, wid) {
                                    min_disp = Some(min_disp.map_or(d, |m| m.min(d)));
                                }
                            }
                        }
                        displacement_ok &= min_disp == Some(translation_length);
                        displacement_checked += 1;
                    }
                }
            }
        }
    }

    let checks = vec![
        Check::new(
            "amalgam decomposition multiplies back to the input",
            assemble_ok,
            format!("{samples} random elements"),
        ),
        Check::new(
            "syllables alternate sides outside the edge group",
            britton_ok,
            format!("{samples} random elements"),
        ),
        Check::new(
            "elliptic elements fix their witness vertex",
            elliptic_fixed && elliptic_count > 0 && witnesses_in_ball > 0,
            format!("{elliptic_count} elliptic, {witnesses_in_ball} witnesses inside the ball"),
        ),
        Check::new(
            "hyperbolic translation length equals minimum ball displacement",
            displacement_ok && displacement_checked > 0,
            format!("{displacement_checked} hyperbolic elements measured in the ball"),
        ),
        Check::new(
            "translation length doubles under squaring",
            doubling_ok && hyperbolic_count > 0,
            format!("{hyperbolic_count} hyperbolic elements"),
        ),
    ];
    Ok(checks)
}

/// Run every section of the suite.
pub fn verify_all(config: &VerifyConfig) -> Result<Report, Error> {
    let mut checks = Vec::new();
    checks.extend(verify_presentation());
    checks.extend(verify_orders());
    checks.extend(verify_normal_forms());
    checks.extend(verify_primitivity(config.oracle_len)?);
    checks.extend(verify_tree(config.radius, config.branch_bound)?);
    checks.extend(verify_membership(8));
    checks.extend(verify_isometries(
        config.radius,
        config.branch_bound,
        config.samples,
    )?);
    Ok(Report { checks })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_checks_pass() {
        for c in verify_presentation() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }

    #[test]
    fn order_checks_pass() {
        for c in verify_orders() {
            assert!(c.passed, "{}: {}", c.name, c.detail);
        }
    }
}
