use matgrade::freealg::{
    classify, format_polynomial, parse_polynomial, GradedMonomial, GradedPolynomial, GradedVariable,
};
use matgrade::genericmodel::{
    entry_match, evaluate, is_identity, monomial_product, naive_monomial_product,
};
use matgrade::grading::{ElementaryGrading, Grade};
use matgrade::rewrite::{apply_rule, congruent_mod_j1, replay, RuleId};
use matgrade::suites::random::grade_pool;
use proptest::prelude::*;

const SPECS: [&str; 10] = [
    "zn:1", "zn:2", "zn:3", "zn:4", "z:2", "z:3", "mu:2", "mu:3", "zp:3", "z:1",
];

fn grading(k: usize) -> ElementaryGrading {
    ElementaryGrading::from_spec(SPECS[k % SPECS.len()]).unwrap()
}

fn word(g: &ElementaryGrading, raw: &[(usize, u64)]) -> GradedMonomial {
    let pool = grade_pool(g);
    raw.iter()
        .map(|&(k, i)| GradedVariable::new(pool[k % pool.len()].clone(), i))
        .collect()
}

fn poly(g: &ElementaryGrading, raw: &[(i64, Vec<(usize, u64)>)]) -> GradedPolynomial {
    GradedPolynomial::from_terms(raw.iter().map(|(c, w)| ((*c).into(), word(g, w))))
}

fn raw_word(max_len: usize) -> impl Strategy<Value = Vec<(usize, u64)>> {
    prop::collection::vec((0usize..16, 1u64..4), 1..=max_len)
}

fn raw_poly() -> impl Strategy<Value = Vec<(i64, Vec<(usize, u64)>)>> {
    prop::collection::vec((-3i64..=3, raw_word(4)), 1..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn format_then_parse_round_trips(k in 0usize..10, raw in raw_poly()) {
        let g = grading(k);
        let f = poly(&g, &raw);
        let text = format_polynomial(&f, g.structure());
        prop_assert_eq!(parse_polynomial(&text, g.structure()).unwrap(), f);
    }

    #[test]
    fn closed_form_product_matches_naive(k in 0usize..10, raw in raw_word(8)) {
        let g = grading(k);
        let m = word(&g, &raw);
        prop_assert_eq!(monomial_product(&g, &m), naive_monomial_product(&g, &m));
    }

    #[test]
    fn components_sum_back(k in 0usize..10, raw in raw_poly()) {
        let g = grading(k);
        let f = poly(&g, &raw);
        let parts = f.multihomogeneous_components();
        let sum = GradedPolynomial::from_terms(
            parts.iter().flat_map(|p| p.terms().map(|(m, c)| (c.clone(), m.clone()))),
        );
        prop_assert_eq!(&sum, &f);
        let mut total = evaluate(&GradedPolynomial::zero(), &g);
        for p in &parts {
            total = &total + &evaluate(p, &g);
        }
        prop_assert_eq!(total, evaluate(&f, &g));
    }

    #[test]
    fn identities_have_identity_components(k in 0usize..10, raw in raw_poly()) {
        let g = grading(k);
        let f = poly(&g, &raw);
        if is_identity(&f, &g) {
            for p in f.multihomogeneous_components() {
                prop_assert!(is_identity(&p, &g));
            }
        }
    }

    #[test]
    fn renaming_preserves_verdict(k in 0usize..10, raw in raw_word(6)) {
        let g = grading(k);
        let m = word(&g, &raw);
        let f = GradedPolynomial::from(m.clone());
        let r = GradedPolynomial::from(m.canonical_renaming());
        prop_assert_eq!(is_identity(&f, &g), is_identity(&r, &g));
    }

    #[test]
    fn integer_monomial_identities_are_not_type1(n in 1usize..4, tuple in prop::collection::vec(-3i64..=3, 1..7)) {
        let g = ElementaryGrading::from_spec(&format!("z:{n}")).unwrap();
        let grades: Vec<Grade> = tuple.into_iter().map(Grade::int).collect();
        let m = GradedMonomial::multilinear_from_tuple(&grades);
        prop_assert_eq!(is_identity(&GradedPolynomial::from(m.clone()), &g), !classify(&m, &g).is_type1);
    }

    #[test]
    fn group_rules_preserve_generic_images(k in 0usize..6, raw in raw_word(6), w in prop::collection::vec(1usize..7, 4)) {
        let g = grading(k);
        let m = word(&g, &raw);
        let mut w = w;
        w.sort();
        for (rule, window) in [(RuleId::CommuteE, &w[..3]), (RuleId::ReverseConjugate, &w[..])] {
            if let Ok(Some(out)) = apply_rule(&m, rule, window, &g) {
                prop_assert_eq!(monomial_product(&g, &out), monomial_product(&g, &m));
            }
        }
    }

    #[test]
    fn congruence_proofs_replay(k in 1usize..4, raw in raw_word(6), perm in any::<prop::sample::Index>()) {
        let g = grading(k);
        let m = word(&g, &raw);
        let mut vars = m.vars().to_vec();
        let r = perm.index(vars.len());
        vars.rotate_left(r);
        let n: GradedMonomial = vars.into();
        let proof = congruent_mod_j1(&m, &n, &g).unwrap();
        prop_assert_eq!(proof.is_some(), entry_match(&m, &n, &g).is_some());
        if let Some(p) = proof {
            prop_assert_eq!(replay(&p, &g).unwrap(), n);
        }
    }
}
