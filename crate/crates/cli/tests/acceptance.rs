//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any fails.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use dblcat::bicat::GROUP_COMPARISON;
use dblcat::companions::*;
use dblcat::finset::{FinSet, Func};
use dblcat::functor::tensor_with;
use dblcat::lifting::check::{GROUP_BRAIDED, GROUP_MODIFICATIONS, GROUP_MONOIDAL, GROUP_SYLLEPTIC, GROUP_SYMMETRIC};
use dblcat::lifting::{lift_monoidal, lift_symmetric, verify_choice_independence, CheckMode, Level};
use dblcat::models::rel::RelModel;
use dblcat::models::span::{Span, SpanModel, SpanSquare};
use dblcat::report::{Report, SampleBudget};
use dblcat::verify::verify_double_category;
use dblcat::{DoubleCategory, Enumerable, Monoidal};
use dblcat_cli::report::RunReport;
use rand::seq::SliceRandom;
use rand::{Rng, RngCore};

const MODEL_TIME_LIMIT: Duration = Duration::from_secs(60);
const MONOIDAL_LIFT_TIME_LIMIT: Duration = Duration::from_secs(300);
const REL_SMOKE_TIME_LIMIT: Duration = Duration::from_secs(5);
const MODEL_BUDGET: u64 = 5000;
const MIN_THETA_PAIRS: usize = 50;
const LEMMA_CONFIGURATIONS: usize = 500;
const MIN_MODIFICATION_SAMPLES: u64 = 100;
const MIN_EQUATION_TUPLES: u64 = 20;
const MIN_COMPONENTS: usize = 50;
const SEED: u64 = 2024;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn failures(r: &Report) -> String {
    r.failures()
        .take(3)
        .map(|f| format!("{} / {}: {}", f.group, f.name, f.counterexample.clone().unwrap_or_default()))
        .collect::<Vec<_>>()
        .join("; ")
}

fn passed(r: &Report) -> Result<(), String> {
    ensure(r.passed(), || failures(r))
}

fn func(rng: &mut dyn RngCore, a: u32, b: u32) -> Func {
    Func::new(FinSet::atom(a), FinSet::atom(b), (0..a).map(|_| rng.gen_range(0..b)).collect())
}

/// A random size for a target of a map out of a set of size `a`.
fn target_size(rng: &mut dyn RngCore, a: u32, max: u32) -> u32 {
    if a == 0 {
        rng.gen_range(0..=max)
    } else {
        rng.gen_range(1..=max)
    }
}

/// The span with its apex permuted by `perm`, and the relabeling onto it.
fn relabel(d: &SpanModel, m: &Span, perm: &[u32]) -> (Span, SpanSquare) {
    let n = m.size() as usize;
    let mut apex = m.apex.to_vec();
    let mut left = vec![0; n];
    let mut right = vec![0; n];
    for (x, &p) in perm.iter().enumerate() {
        apex[p as usize] = m.apex[x].clone();
        left[p as usize] = m.left[x];
        right[p as usize] = m.right[x];
    }
    let m2 = Span::new(m.src.clone(), m.tgt.clone(), apex, left, right);
    let phi = d.square(d.globular_frame(m, &m2), perm.to_vec()).expect("relabeling is a square");
    (m2, phi)
}

/// The closed-form companion of `f`, moved to a randomly relabeled apex.
fn random_companion(d: &SpanModel, f: &Func, rng: &mut dyn RngCore) -> CompanionOf<SpanModel> {
    let c = span_companion(d, f).expect("closed form");
    let mut perm: Vec<u32> = (0..c.fhat.size()).collect();
    perm.shuffle(rng);
    let (m, phi) = relabel(d, &c.fhat, &perm);
    transport_companion(d, &c, m, &phi).expect("transport along an iso")
}

fn criterion_model_axioms() -> Outcome {
    let budget = SampleBudget::new(MODEL_BUDGET, SEED);
    let start = Instant::now();
    let rel = verify_double_category(&RelModel::new(3), &budget);
    let span = verify_double_category(&SpanModel::new(2, 3), &budget);
    let took = start.elapsed();
    passed(&rel)?;
    passed(&span)?;
    for name in ["pentagon", "triangle", "interchange"] {
        for r in [&rel, &span] {
            ensure(r.get(name).is_some_and(|x| x.passed), || format!("{name} missing"))?;
        }
    }
    ensure(took < MODEL_TIME_LIMIT, || format!("took {took:?}"))?;
    Ok(format!("{} instances in {took:.1?}", rel.instances() + span.instances()))
}

fn criterion_closed_forms() -> Outcome {
    let mut n = 0;
    let rel = RelModel::new(3);
    for f in rel.all_vmors() {
        passed(&verify_companion(&rel, &rel_companion(&rel, &f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?)?;
        passed(&verify_conjoint(&rel, &rel_conjoint(&rel, &f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?)?;
        n += 1;
    }
    let span = SpanModel::new(2, 3);
    for f in span.all_vmors() {
        passed(&verify_companion(&span, &span_companion(&span, &f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?)?;
        passed(&verify_conjoint(&span, &span_conjoint(&span, &f).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?)?;
        n += 1;
    }
    Ok(format!("{n} vertical morphisms, companion and conjoint each"))
}

fn criterion_theta_uniqueness() -> Outcome {
    let d = SpanModel::new(2, 2);
    let mut pairs = 0;
    for f in d.all_vmors() {
        // Every enumerated companion, and each of them composed with a unit
        // on either side.
        let mut cs = all_companions(&d, &f);
        for c in cs.clone() {
            let (ua, ub) = (companion_of_identity(&d, &f.src), companion_of_identity(&d, &f.tgt));
            cs.push(compose_companions(&d, &ua, &c).map_err(|e| e.to_string())?);
            cs.push(compose_companions(&d, &c, &ub).map_err(|e| e.to_string())?);
        }
        for c1 in &cs {
            for c2 in &cs {
                let t = theta(&d, c1, c2).map_err(|e| e.to_string())?;
                let found = theta_candidates(&d, c1, c2).map_err(|e| e.to_string())?;
                ensure(found == vec![t.clone()], || format!("{f:?}: {} candidates, theta {t:?}", found.len()))?;
                pairs += 1;
            }
        }
    }
    ensure(pairs >= MIN_THETA_PAIRS, || format!("only {pairs} pairs"))?;
    Ok(format!("{pairs} companion pairs, each with exactly one comparison"))
}

fn criterion_theta_lemmas() -> Outcome {
    let d = SpanModel::new(2, 3);
    let budget = SampleBudget::new(0, SEED);
    let e = |r: dblcat::Result<SpanSquare>| r.map_err(|e| e.to_string());
    let lemma = |name: &str, check: &dyn Fn(&mut dyn RngCore) -> Result<bool, String>| -> Result<(), String> {
        let mut rng = budget.rng_for(name);
        for i in 0..LEMMA_CONFIGURATIONS {
            ensure(check(&mut rng)?, || format!("{name} fails on configuration {i}"))?;
        }
        Ok(())
    };
    let pick = |rng: &mut dyn RngCore| {
        let a = rng.gen_range(0..=3);
        let b = target_size(rng, a, 3);
        func(rng, a, b)
    };
    lemma("identity", &|rng| {
        let c = random_companion(&d, &pick(rng), rng);
        Ok(d.sq_eq(&e(theta(&d, &c, &c))?, &d.sq_id(&c.fhat)))
    })?;
    lemma("composite", &|rng| {
        let f = pick(rng);
        let [c1, c2, c3] = [0; 3].map(|_| random_companion(&d, &f, rng));
        let lhs = e(d.compose_v(&e(theta(&d, &c1, &c2))?, &e(theta(&d, &c2, &c3))?))?;
        Ok(d.sq_eq(&lhs, &e(theta(&d, &c1, &c3))?))
    })?;
    lemma("horizontal composite", &|rng| {
        let f = pick(rng);
        let c = target_size(rng, f.tgt.card(), 3);
        let g = func(rng, f.tgt.card(), c);
        let (cf, cf2) = (random_companion(&d, &f, rng), random_companion(&d, &f, rng));
        let (cg, cg2) = (random_companion(&d, &g, rng), random_companion(&d, &g, rng));
        let lhs = e(d.compose_h(&e(theta(&d, &cf, &cf2))?, &e(theta(&d, &cg, &cg2))?))?;
        let (k, k2) = (compose_companions(&d, &cf, &cg), compose_companions(&d, &cf2, &cg2));
        let rhs = e(theta(&d, &k.map_err(|e| e.to_string())?, &k2.map_err(|e| e.to_string())?))?;
        Ok(d.sq_eq(&lhs, &rhs))
    })?;
    lemma("unit constraints", &|rng| {
        let f = pick(rng);
        let c = random_companion(&d, &f, rng);
        let right = compose_companions(&d, &c, &companion_of_identity(&d, &f.tgt)).map_err(|e| e.to_string())?;
        let left = compose_companions(&d, &companion_of_identity(&d, &f.src), &c).map_err(|e| e.to_string())?;
        Ok(d.sq_eq(&e(theta(&d, &c, &right))?, &e(d.runit_inv(&c.fhat))?)
            && d.sq_eq(&e(theta(&d, &c, &left))?, &e(d.lunit_inv(&c.fhat))?))
    })?;
    lemma("functors", &|rng| {
        let f = pick(rng);
        let x = FinSet::atom(rng.gen_range(0..=2));
        let fun = tensor_with(&d, x, rng.gen_bool(0.5));
        let (c1, c2) = (random_companion(&d, &f, rng), random_companion(&d, &f, rng));
        Ok(theta_commutes_with(&fun, &d, &c1, &c2).map_err(|e| e.to_string())?.is_ok())
    })?;
    lemma("tensor", &|rng| {
        let (f, g) = (pick(rng), pick(rng));
        let (cf, cf2) = (random_companion(&d, &f, rng), random_companion(&d, &f, rng));
        let (cg, cg2) = (random_companion(&d, &g, rng), random_companion(&d, &g, rng));
        let lhs = e(d.tensor_sq(&e(theta(&d, &cf, &cf2))?, &e(theta(&d, &cg, &cg2))?))?;
        let (k, k2) = (tensor_companions(&d, &cf, &cg), tensor_companions(&d, &cf2, &cg2));
        let rhs = e(theta(&d, &k.map_err(|e| e.to_string())?, &k2.map_err(|e| e.to_string())?))?;
        Ok(d.sq_eq(&lhs, &rhs))
    })?;
    Ok(format!("6 lemmas, {LEMMA_CONFIGURATIONS} configurations each"))
}

fn criterion_adjunctions() -> Outcome {
    let mut count = (0, 0);
    fn check<D: DoubleCategory + Enumerable>(
        d: &D,
        companion: impl Fn(&D::VMor) -> dblcat::Result<CompanionOf<D>>,
        conjoint: impl Fn(&D::VMor) -> dblcat::Result<ConjointOf<D>>,
        count: &mut (usize, usize),
    ) -> Result<(), String> {
        for f in d.all_vmors() {
            let (c, j) = (companion(&f).map_err(|e| e.to_string())?, conjoint(&f).map_err(|e| e.to_string())?);
            let adj = adjunction(d, &c, &j).map_err(|e| e.to_string())?;
            let (l, r) = triangle_identities(d, &adj).map_err(|e| e.to_string())?;
            l.and(r).map_err(|e| format!("{f:?}: {e}"))?;
            count.0 += 1;
            if d.vinverse(&f).is_some() {
                ensure(d.sq_inverse(&adj.unit).is_some() && d.sq_inverse(&adj.counit).is_some(), || {
                    format!("{f:?} is invertible but its adjunction is not an equivalence")
                })?;
                count.1 += 1;
            }
        }
        Ok(())
    }
    let rel = RelModel::new(3);
    check(&rel, |f| rel_companion(&rel, f), |f| rel_conjoint(&rel, f), &mut count)?;
    let span = SpanModel::new(2, 3);
    check(&span, |f| span_companion(&span, f), |f| span_conjoint(&span, f), &mut count)?;
    Ok(format!("{} morphisms, {} of them invertible", count.0, count.1))
}

fn at_least(r: &Report, group: &str, min: u64, expected: usize) -> Result<(), String> {
    let rows: Vec<_> = r.results.iter().filter(|x| x.group == group).collect();
    ensure(rows.len() == expected, || format!("{group}: {} results, expected {expected}", rows.len()))?;
    for x in rows {
        let enough = x.instances >= min || x.population.is_some_and(|p| x.instances == p);
        ensure(x.passed && enough, || format!("{}: {} instances, passed {}", x.name, x.instances, x.passed))?;
    }
    Ok(())
}

fn criterion_monoidal_lift() -> Outcome {
    let d = SpanModel::new(2, 3);
    let cert = certify_fibrant(&d, false).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let r = lift_monoidal(&d, &cert, CheckMode::Brute, &SampleBudget::new(MIN_MODIFICATION_SAMPLES, SEED));
    let took = start.elapsed();
    passed(&r)?;
    at_least(&r, GROUP_MODIFICATIONS, MIN_MODIFICATION_SAMPLES, 4)?;
    at_least(&r, GROUP_MONOIDAL, MIN_EQUATION_TUPLES, 3)?;
    ensure(took < MONOIDAL_LIFT_TIME_LIMIT, || format!("took {took:?}"))?;
    Ok(format!("4 modifications, 3 equations, {} instances in {took:.1?}", r.instances()))
}

fn criterion_symmetric_lift() -> Outcome {
    let budget = SampleBudget::new(MIN_EQUATION_TUPLES, SEED);
    let d = SpanModel::new(2, 3);
    let cert = certify_fibrant(&d, false).map_err(|e| e.to_string())?;
    let r = lift_symmetric(&d, &cert, CheckMode::Brute, &budget);
    passed(&r)?;
    at_least(&r, GROUP_BRAIDED, MIN_EQUATION_TUPLES, 4)?;
    at_least(&r, GROUP_SYLLEPTIC, MIN_EQUATION_TUPLES, 2)?;
    at_least(&r, GROUP_SYMMETRIC, MIN_EQUATION_TUPLES, 1)?;
    let start = Instant::now();
    let rel = RelModel::new(3);
    let cert = certify_fibrant(&rel, false).map_err(|e| e.to_string())?;
    let smoke = lift_symmetric(&rel, &cert, CheckMode::Brute, &budget);
    let took = start.elapsed();
    passed(&smoke)?;
    ensure(took < REL_SMOKE_TIME_LIMIT, || format!("relations took {took:?}"))?;
    Ok(format!("spans: {} instances; relations: {} instances in {took:.1?}", r.instances(), smoke.instances()))
}

fn criterion_choice_independence() -> Outcome {
    let d = SpanModel::new(3, 3);
    let first = certify_fibrant(&d, false).map_err(|e| e.to_string())?;
    let second = first.twisted(&d, span_reversal).map_err(|e| e.to_string())?;
    let moved = first
        .certified()
        .iter()
        .filter(|f| first.companion(&d, f).unwrap().fhat != second.companion(&d, f).unwrap().fhat)
        .count();
    ensure(moved > 0, || "the certificates agree".into())?;
    let (r, components) = verify_choice_independence(&d, &first, &second, Level::Symmetric, &SampleBudget::new(100, SEED));
    passed(&r)?;
    ensure(r.results.iter().all(|x| x.group == GROUP_COMPARISON), || "unexpected group".into())?;
    ensure(components >= MIN_COMPONENTS, || format!("only {components} components"))?;
    Ok(format!("{components} components, certificates differ on {moved} morphisms"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Result<(i32, Vec<u8>), String> {
    let out = Command::new(env!("CARGO_BIN_EXE_dblcat")).args(args).output().map_err(|e| e.to_string())?;
    Ok((out.status.code().unwrap_or(-1), out.stdout))
}

fn criterion_mutations() -> Outcome {
    let cases = [
        ("broken_interchange.json", "monoidal"),
        ("broken_hexagon.json", "braided"),
        ("non_companion.json", "monoidal"),
        ("inverted_pentagonator.json", "monoidal"),
        ("non_involutive_braiding.json", "symmetric"),
    ];
    for (file, level) in cases {
        let path = fixture(file);
        let (code, out) = run(&["lift", "--table", path.to_str().unwrap(), "--level", level])?;
        ensure(code == 1, || format!("{file}: exit {code}"))?;
        let report = RunReport::from_json(&String::from_utf8_lossy(&out))?;
        let witness = report.results.iter().any(|r| !r.passed && r.counterexample.is_some());
        ensure(witness, || format!("{file}: no counterexample"))?;
    }
    Ok(format!("{} mutations rejected with counterexamples", cases.len()))
}

fn criterion_determinism() -> Outcome {
    let args = ["lift", "--builtin", "span", "--max-size", "2", "--level", "symmetric", "--seed", "11", "--budget", "20"];
    let (c1, a) = run(&args)?;
    let (c2, b) = run(&args)?;
    ensure(c1 == 0 && c2 == 0, || format!("exit codes {c1}, {c2}"))?;
    ensure(a == b, || "reports differ".into())?;
    let path = fixture("symmetric.json");
    let table = ["lift", "--table", path.to_str().unwrap(), "--level", "symmetric", "--seed", "3"];
    ensure(run(&table)?.1 == run(&table)?.1, || "table reports differ".into())?;
    Ok(format!("{} identical bytes", a.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("model axioms", criterion_model_axioms),
        ("closed-form companions and conjoints", criterion_closed_forms),
        ("uniqueness of the comparison cell", criterion_theta_uniqueness),
        ("comparison cell lemmas", criterion_theta_lemmas),
        ("adjunctions", criterion_adjunctions),
        ("monoidal lift", criterion_monoidal_lift),
        ("braided, sylleptic and symmetric lift", criterion_symmetric_lift),
        ("choice independence", criterion_choice_independence),
        ("mutation sensitivity", criterion_mutations),
        ("determinism", criterion_determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{took:.1?}]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{took:.1?}]", i + 1);
            }
        }
    }
    println!("acceptance: {} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
