use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use super::random::{consequence, grade_pool, nonzero_coefficient, random_word, SuiteRng};
use super::Item;
use crate::bases::{
    build_basis, enumerate_monomial_identities, h_n_symmetrization, support_tuples, verify_basis,
    BasisKind, BasisOptions,
};
use crate::error::Result;
use crate::freealg::{
    classify, lambda_bound, parse_polynomial, GradedMonomial, GradedPolynomial, GradedVariable,
};
use crate::genericmodel::{
    entry_match, evaluate, is_central, is_identity, matrix_unit_oracle, monomial_product,
    naive_monomial_product,
};
use crate::grading::{
    complete_sequence_unit_witness, enumerate_complete_sequences, is_complete_sequence,
    ElementaryGrading, Grade,
};
use crate::rewrite::{apply_rule, congruent_mod_j1, follows_from_kill, replay, RuleId};

fn grading(spec: &str) -> Result<ElementaryGrading> {
    ElementaryGrading::from_spec(spec)
}

fn rng_for(seed: u64, stream: u64) -> SuiteRng {
    SuiteRng::seed_from_u64(seed ^ stream.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn basis_items(spec: &str, kind: BasisKind) -> Result<Vec<Item>> {
    let g = grading(spec)?;
    let basis = build_basis(&g, kind, &BasisOptions::default())?;
    let report = verify_basis(&basis, &g)?;
    Ok(report
        .families
        .into_iter()
        .map(|f| {
            let mut detail = format!("{}/{} instances verified", f.verified, f.instances);
            if let Some(first) = f.failures.first() {
                detail.push_str(&format!(
                    "; first failure: {} ({})",
                    first.instance, first.reason
                ));
            }
            Item::new(format!("{spec} {}", f.id), f.failures.is_empty(), detail)
        })
        .collect())
}

pub fn identity_generators() -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for spec in ["zn:2", "zn:3", "zn:4", "z:2", "z:3", "z:4", "mu:2", "mu:3"] {
        items.extend(basis_items(spec, BasisKind::Identities)?);
    }
    Ok(items)
}

const CONSEQUENCES: usize = 200;

/// Each identity-basis instance is an identity, and so are
/// `CONSEQUENCES` random substitution images or two-sided multiples of it.
fn closure_items(specs: &[&str], seed: u64) -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for (s, spec) in specs.iter().enumerate() {
        let g = grading(spec)?;
        let basis = build_basis(&g, BasisKind::Identities, &BasisOptions::default())?;
        for (k, fam) in basis.families.iter().enumerate() {
            let mut rng = rng_for(seed, (s * 16 + k) as u64);
            let mut polys: Vec<GradedPolynomial> = Vec::new();
            for inst in &fam.instances {
                polys.push(inst.poly.clone());
                for _ in 0..CONSEQUENCES {
                    polys.push(consequence(&mut rng, &inst.poly, &g)?);
                }
            }
            let bad = polys.par_iter().filter(|f| !is_identity(f, &g)).count();
            items.push(Item::new(
                format!("{spec} {}", fam.id),
                bad == 0,
                format!(
                    "{} generators and {} consequences, {bad} not identities",
                    fam.instances.len(),
                    fam.instances.len() * CONSEQUENCES
                ),
            ));
        }
    }
    Ok(items)
}

pub fn consequence_closure(integers: bool, seed: u64) -> Result<Vec<Item>> {
    if integers {
        closure_items(&["z:2", "z:3", "z:4"], seed)
    } else {
        closure_items(&["zn:2", "zn:3", "zn:4"], seed)
    }
}

pub fn mun_basis(seed: u64) -> Result<Vec<Item>> {
    let specs = ["mu:2", "mu:3", "mu:4"];
    let mut items = closure_items(&specs, seed)?;
    for spec in ["mu:2", "mu:3"] {
        let g = grading(spec)?;
        let ids = enumerate_monomial_identities(&g, 3)?;
        let mut bad = 0;
        for m in &ids {
            let zero_degree = m.degree_in(g.structure()) == Some(Grade::Zero);
            if !zero_degree || !follows_from_kill(m, &g)? {
                bad += 1;
            }
        }
        items.push(Item::new(
            format!("{spec} monomial identities follow from (7)"),
            bad == 0,
            format!(
                "{} monomial identities up to degree 3, {bad} exceptions",
                ids.len()
            ),
        ));
    }
    Ok(items)
}

pub fn no_monomial_identities() -> Result<Vec<Item>> {
    ["zn:2", "zn:3"]
        .into_iter()
        .map(|spec| {
            let g = grading(spec)?;
            let ids = enumerate_monomial_identities(&g, 5)?;
            Ok(Item::new(
                format!("{spec} degree <= 5"),
                ids.is_empty(),
                format!("{} multilinear monomial identities", ids.len()),
            ))
        })
        .collect()
}

pub fn z_classification() -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for spec in ["z:2", "z:3"] {
        let g = grading(spec)?;
        let tuples = support_tuples(&g, 4)?;
        let results: Vec<(bool, bool, bool)> = tuples
            .par_iter()
            .map(|t| {
                let m = GradedMonomial::multilinear_from_tuple(t);
                let f = GradedPolynomial::from(m.clone());
                let oracle = matrix_unit_oracle(&f, &g).expect("multilinear");
                (oracle, is_identity(&f, &g), !classify(&m, &g).is_type1)
            })
            .collect();
        let identities = results.iter().filter(|r| r.0).count();
        let mismatches = results
            .iter()
            .filter(|(o, gen, t)| o != gen || o != t)
            .count();
        items.push(Item::new(
            format!("{spec} degree <= 4"),
            mismatches == 0,
            format!(
                "{} tuples, {identities} monomial identities, {mismatches} disagreements with the non-Type-1 set",
                tuples.len()
            ),
        ));
    }
    Ok(items)
}

fn random_rewrite(
    rng: &mut SuiteRng,
    m: &GradedMonomial,
    g: &ElementaryGrading,
) -> Option<GradedMonomial> {
    let len = m.len();
    let mut options = Vec::new();
    for p in 1..=len {
        for q in p + 1..=len {
            for r in q..=len {
                if let Ok(Some(out)) = apply_rule(m, RuleId::CommuteE, &[p, q, r], g) {
                    options.push(out);
                }
                for s in r + 1..=len {
                    let w = [p, q, r + 1, s];
                    if let Ok(Some(out)) = apply_rule(m, RuleId::ReverseConjugate, &w, g) {
                        options.push(out);
                    }
                }
            }
        }
    }
    options.choose(rng).cloned()
}

fn random_multilinear(
    rng: &mut SuiteRng,
    g: &ElementaryGrading,
    pool: &[Grade],
) -> GradedPolynomial {
    let d = rng.gen_range(1..=4);
    let tuple: Vec<Grade> = (0..d).map(|_| pool.choose(rng).unwrap().clone()).collect();
    let vars = GradedMonomial::multilinear_from_tuple(&tuple)
        .vars()
        .to_vec();
    let mut f = GradedPolynomial::zero();
    for _ in 0..rng.gen_range(1..=3) {
        let mut order = vars.clone();
        order.shuffle(rng);
        let m: GradedMonomial = order.into();
        let c = if rng.gen_bool(0.1) {
            num_bigint::BigInt::from(0)
        } else {
            nonzero_coefficient(rng)
        };
        f.add_term(c.clone(), m.clone());
        if rng.gen_bool(0.5) {
            if let Some(m2) = random_rewrite(rng, &m, g) {
                f.add_term(-c, m2);
            }
        }
    }
    f
}

pub fn oracle_equivalence(seed: u64) -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for (s, spec) in ["zn:2", "zn:3", "z:2"].into_iter().enumerate() {
        let g = grading(spec)?;
        let pool = grade_pool(&g);
        let mut rng = rng_for(seed, s as u64);
        let polys: Vec<GradedPolynomial> = (0..500)
            .map(|_| random_multilinear(&mut rng, &g, &pool))
            .collect();
        let results: Vec<(bool, bool)> = polys
            .par_iter()
            .map(|f| {
                (
                    is_identity(f, &g),
                    matrix_unit_oracle(f, &g).expect("multilinear"),
                )
            })
            .collect();
        let identities = results.iter().filter(|r| r.0).count();
        let disagreements = results.iter().filter(|r| r.0 != r.1).count();
        items.push(Item::new(
            format!("{spec} 500 polynomials"),
            disagreements == 0,
            format!("{identities} identities, {disagreements} disagreements"),
        ));
    }
    Ok(items)
}

pub fn fast_product(seed: u64) -> Result<Vec<Item>> {
    let mut rng = rng_for(seed, 0);
    let specs: Vec<String> = (1..=4)
        .flat_map(|n| [format!("zn:{n}"), format!("z:{n}"), format!("mu:{n}")])
        .collect();
    let gradings: Vec<ElementaryGrading> =
        specs.iter().map(|s| grading(s)).collect::<Result<_>>()?;
    let mut cases: Vec<(usize, GradedMonomial)> = Vec::new();
    for _ in 0..300 {
        let k = rng.gen_range(0..gradings.len());
        let pool = grade_pool(&gradings[k]);
        cases.push((k, random_word(&mut rng, &pool, 8, 4)));
    }
    let ok: Vec<bool> = cases
        .par_iter()
        .map(|(k, m)| {
            monomial_product(&gradings[*k], m) == naive_monomial_product(&gradings[*k], m)
        })
        .collect();
    let mut items = Vec::new();
    for (k, spec) in specs.iter().enumerate() {
        let total = cases.iter().filter(|c| c.0 == k).count();
        let bad = cases
            .iter()
            .zip(&ok)
            .filter(|(c, ok)| c.0 == k && !**ok)
            .count();
        items.push(Item::new(
            format!("{spec} closed form"),
            bad == 0,
            format!("{total} monomials, {bad} mismatches"),
        ));
    }
    Ok(items)
}

pub fn central_zp() -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for spec in ["zp:2", "zp:3", "zp:5"] {
        items.extend(basis_items(spec, BasisKind::Central)?);
    }
    let g = grading("zp:3")?;
    let f = parse_polynomial(
        "x[1,1]*x[1,2]*x[1,1]*x[1,2]*x[1,1]*x[1,2] - x[1,2]^3*x[1,1]^3",
        g.structure(),
    )?;
    items.push(Item::new(
        "zp:3 (x1 x2)^3 - x2^3 x1^3",
        is_identity(&f, &g),
        "graded identity",
    ));
    Ok(items)
}

pub fn central_z() -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for spec in ["z:2", "z:3"] {
        items.extend(basis_items(spec, BasisKind::Central)?);
    }
    Ok(items)
}

pub fn complete_seq() -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for n in [2usize, 3] {
        let g = grading(&format!("zn:{n}"))?;
        let mut disagreements = 0;
        let mut complete = 0;
        let total = n.pow(n as u32);
        for code in 0..total {
            let seq: Vec<usize> = (0..n).map(|k| code / n.pow(k as u32) % n).collect();
            let by_definition = is_complete_sequence(n, &seq)?;
            let by_units = complete_sequence_unit_witness(n, &seq).is_some();
            complete += usize::from(by_definition);
            disagreements += usize::from(by_definition != by_units);
        }
        items.push(Item::new(
            format!("zn:{n} definition vs matrix units"),
            disagreements == 0,
            format!("{total} sequences, {complete} complete, {disagreements} disagreements"),
        ));
        let mut bad = 0;
        let seqs = enumerate_complete_sequences(n)?;
        for c in &seqs {
            let vars: Vec<GradedVariable> = c
                .as_slice()
                .iter()
                .enumerate()
                .map(|(k, &h)| GradedVariable::new(Grade::Elem(h), k as u64 + 1))
                .collect();
            let f = h_n_symmetrization(&g, &vars)?;
            if !is_central(&f, &g)? || is_identity(&f, &g) {
                bad += 1;
            }
        }
        items.push(Item::new(
            format!("zn:{n} symmetrizations"),
            bad == 0 && seqs.len() == complete,
            format!(
                "{} complete sequences, {bad} not central or identities",
                seqs.len()
            ),
        ));
    }
    Ok(items)
}

pub fn congruence(seed: u64) -> Result<Vec<Item>> {
    let g = grading("zn:3")?;
    let pool = grade_pool(&g);
    let mut rng = rng_for(seed, 0);
    let mut pairs = Vec::with_capacity(100);
    while pairs.len() < 100 {
        let m = random_word(&mut rng, &pool, 6, 4);
        for _ in 0..50 {
            let mut vars = m.vars().to_vec();
            vars.shuffle(&mut rng);
            let n: GradedMonomial = vars.into();
            if n != m && entry_match(&m, &n, &g).is_some() {
                pairs.push((m.clone(), n));
                break;
            }
        }
    }
    let outcomes: Vec<std::result::Result<usize, String>> = pairs
        .par_iter()
        .map(|(m, n)| check_congruence(m, n, &g))
        .collect();
    let failures: Vec<&String> = outcomes.iter().filter_map(|o| o.as_ref().err()).collect();
    let steps: usize = outcomes.iter().filter_map(|o| o.as_ref().ok()).sum();
    let mut detail = format!("100 distinct pairs, {steps} rewrite steps in total");
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first failure: {f}"));
    }
    Ok(vec![Item::new(
        "zn:3 random pairs",
        failures.is_empty(),
        detail,
    )])
}

fn check_congruence(
    m: &GradedMonomial,
    n: &GradedMonomial,
    g: &ElementaryGrading,
) -> std::result::Result<usize, String> {
    let proof = congruent_mod_j1(m, n, g)
        .map_err(|e| e.to_string())?
        .ok_or("no proof")?;
    if replay(&proof, g).map_err(|e| e.to_string())? != *n {
        return Err("replay misses the target".into());
    }
    let reference = monomial_product(g, m);
    let mut cur = m.clone();
    for step in &proof.steps {
        cur = apply_rule(&cur, step.rule, &step.window, g)
            .map_err(|e| e.to_string())?
            .ok_or("step produced zero")?;
        if monomial_product(g, &cur) != reference {
            return Err("an intermediate evaluation differs".into());
        }
    }
    Ok(proof.steps.len())
}

pub fn lambda_type2(seed: u64) -> Result<Vec<Item>> {
    let values: Vec<String> = (1..=3)
        .map(|s| lambda_bound(s).map(|v| v.to_string()))
        .collect::<Result<_>>()?;
    let mut items = vec![Item::new(
        "lambda_bound(1..=3)",
        values == ["2", "21", "228"],
        values.join(", "),
    )];
    let mut rng = rng_for(seed, 0);
    for spec in ["zn:2", "z:2"] {
        let g = grading(spec)?;
        let lambda = usize::try_from(&lambda_bound(g.support().len())?).expect("small");
        let monomials: Vec<GradedMonomial> = (0..200)
            .map(|_| {
                let len = rng.gen_range(lambda..=lambda + 12);
                let tuple: Vec<Grade> = if spec == "zn:2" {
                    vec![Grade::Elem(1); len]
                } else {
                    // Neutral-free Type 1 words over Z alternate 1 and -1.
                    let first: i64 = if rng.gen_bool(0.5) { 1 } else { -1 };
                    (0..len)
                        .map(|k| Grade::int(if k % 2 == 0 { first } else { -first }))
                        .collect()
                };
                GradedMonomial::multilinear_from_tuple(&tuple)
            })
            .collect();
        let bad = monomials
            .par_iter()
            .filter(|m| {
                let c = classify(m, &g);
                let neutral_free = m.vars().iter().all(|v| !g.is_neutral(&v.grade));
                !(c.is_type1 && neutral_free && c.is_type2)
            })
            .count();
        items.push(Item::new(
            format!("{spec} length >= {lambda}"),
            bad == 0,
            format!("200 Type 1 neutral-free monomials, {bad} not Type 2"),
        ));
    }
    Ok(items)
}

/// Words of length `1..=max_len`, variables numbered by first occurrence,
/// each distinct variable given a grade from `pool`.
fn all_words(pool: &[Grade], max_len: usize) -> Vec<GradedMonomial> {
    let mut out = Vec::new();
    for len in 1..=max_len {
        for pattern in growth_strings(len) {
            let k = pattern.iter().max().map_or(0, |m| m + 1);
            let mut choice = vec![0usize; k];
            loop {
                out.push(
                    pattern
                        .iter()
                        .map(|&v| GradedVariable::new(pool[choice[v]].clone(), v as u64 + 1))
                        .collect(),
                );
                let mut i = 0;
                while i < k {
                    choice[i] += 1;
                    if choice[i] < pool.len() {
                        break;
                    }
                    choice[i] = 0;
                    i += 1;
                }
                if i == k {
                    break;
                }
            }
        }
    }
    out
}

fn growth_strings(len: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = vec![vec![0]];
    for _ in 1..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                let top = *s.iter().max().unwrap();
                (0..=top + 1).map(move |v| [s.as_slice(), &[v]].concat())
            })
            .collect();
    }
    out
}

pub fn distinct_diagonal() -> Result<Vec<Item>> {
    let mut items = Vec::new();
    for spec in ["zn:2", "zn:3", "z:2", "z:3"] {
        let g = grading(spec)?;
        let cyclic = g.zn_canonical_modulus().is_some();
        let pool: Vec<Grade> = g.support().iter().cloned().collect();
        let words: Vec<GradedMonomial> = all_words(&pool, 5)
            .into_iter()
            .filter(|m| m.degree_in(g.structure()).is_some_and(|d| g.is_neutral(&d)))
            .collect();
        let outcomes: Vec<(bool, bool)> = words
            .par_iter()
            .map(|m| {
                let f = GradedPolynomial::from(m.clone());
                let e = evaluate(&f, &g);
                let n = g.n();
                if cyclic {
                    if e.is_zero() || e.is_scalar() {
                        return (false, true);
                    }
                    let diag: Vec<_> = (1..=n).map(|k| e.get(k, k)).collect();
                    let distinct = pairwise_distinct(&diag);
                    (true, distinct)
                } else {
                    if e.is_zero() || e.is_scalar() {
                        return (false, true);
                    }
                    let entries: Vec<_> = e.nonzero_positions().map(|(i, j)| e.get(i, j)).collect();
                    let distinct = pairwise_distinct(&entries);
                    (true, distinct)
                }
            })
            .collect();
        let checked = outcomes.iter().filter(|o| o.0).count();
        let bad = outcomes.iter().filter(|o| !o.1).count();
        let what = if cyclic {
            "non-central diagonals"
        } else {
            "nonzero evaluations"
        };
        items.push(Item::new(
            format!("{spec} degree 0, length <= 5"),
            bad == 0,
            format!(
                "{} words, {checked} {what} checked, {bad} with repeated entries",
                words.len()
            ),
        ));
    }
    Ok(items)
}

fn pairwise_distinct<T: PartialEq>(xs: &[T]) -> bool {
    xs.iter()
        .enumerate()
        .all(|(k, a)| xs[k + 1..].iter().all(|b| a != b))
}
