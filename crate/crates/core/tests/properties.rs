use dblcat::companions::*;
use dblcat::finset::{FinSet, Func};
use dblcat::htree::{canonical_constraint, HTree, HTreeOf};
use dblcat::lifting::{lift_symmetric, verify_choice_independence, CheckMode, Level};
use dblcat::models::{GradedModel, RelModel, Span, SpanModel, SpanSquare, TableModel, TableSpec};
use dblcat::report::SampleBudget;
use dblcat::universe::{CellSource, Universe};
use dblcat::verify::verify_double_category;
use dblcat::monoidal::verify_monoidal;
use dblcat::{DoubleCategory, Enumerable, Frame};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `a;b` over `c;d`, composed both ways.
fn interchange<D: Enumerable>(d: &D, seed: u64) -> Option<(D::Sq, D::Sq)> {
    let u = Universe::new(d);
    let mut r = rng(seed);
    let top = u.random_row(2, &mut r)?;
    let bottoms: Vec<_> = top.iter().map(|s| d.frame(s).bottom).collect();
    let below = u.random_row_below(&bottoms, &mut r)?;
    let rows = d.compose_v(&d.compose_h(&top[0], &top[1]).ok()?, &d.compose_h(&below[0], &below[1]).ok()?).ok()?;
    let cols = d.compose_h(&d.compose_v(&top[0], &below[0]).ok()?, &d.compose_v(&top[1], &below[1]).ok()?).ok()?;
    Some((rows, cols))
}

fn boundaries_are_strict<D: Enumerable>(d: &D, seed: u64) -> bool {
    let u = Universe::new(d);
    let mut r = rng(seed);
    let Some(row) = u.random_row(2, &mut r) else { return true };
    let (a, b) = (d.frame(&row[0]), d.frame(&row[1]));
    let h = d.frame(&d.compose_h(&row[0], &row[1]).unwrap());
    let expected = Frame {
        top: d.hcomp(&a.top, &b.top).unwrap(),
        left: a.left.clone(),
        right: b.right.clone(),
        bottom: d.hcomp(&a.bottom, &b.bottom).unwrap(),
    };
    let Some(below) = u.random_square_below(&a.bottom, &mut r) else { return h == expected };
    let c = d.frame(&below);
    let v = d.frame(&d.compose_v(&row[0], &below).unwrap());
    h == expected
        && v == Frame { top: a.top.clone(), left: d.vcomp(&a.left, &c.left).unwrap(), right: d.vcomp(&a.right, &c.right).unwrap(), bottom: c.bottom }
}

/// A random bracketing of `items`.
fn bracket<O: Clone + PartialEq, H: Clone + PartialEq>(items: &[HTree<O, H>], r: &mut dyn RngCore) -> HTree<O, H> {
    if items.len() == 1 {
        return items[0].clone();
    }
    let k = r.gen_range(1..items.len());
    HTree::node(bracket(&items[..k], r), bracket(&items[k..], r))
}

/// A chain of 1-cells with formal units scattered in it, bracketed three
/// ways.
fn three_bracketings<D: Enumerable>(d: &D, seed: u64) -> Option<[HTreeOf<D>; 3]> {
    let u = Universe::new(d);
    let mut r = rng(seed);
    let k = r.gen_range(1..=4);
    let chain = u.random_hchain(k, &mut r)?;
    let mut items = Vec::new();
    for h in &chain {
        if r.gen_bool(0.3) {
            items.push(HTree::Unit(d.hsrc(h)));
        }
        items.push(HTree::leaf(h.clone()));
    }
    if r.gen_bool(0.3) {
        items.push(HTree::Unit(d.htgt(chain.last()?)));
    }
    Some([0; 3].map(|_| bracket(&items, &mut r)))
}

fn coherent<D: Enumerable>(d: &D, seed: u64) -> bool {
    let Some([s, m, t]) = three_bracketings(d, seed) else { return true };
    let direct = canonical_constraint(d, &s, &t).unwrap();
    let via = d.compose_v(&canonical_constraint(d, &s, &m).unwrap(), &canonical_constraint(d, &m, &t).unwrap()).unwrap();
    d.sq_eq(&direct, &via) && d.frame(&direct) == d.globular_frame(&s.value(d).unwrap(), &t.value(d).unwrap())
}

fn func(r: &mut dyn RngCore, max: u32) -> Func {
    let a = r.gen_range(0..=max);
    let b = if a == 0 { r.gen_range(0..=max) } else { r.gen_range(1..=max) };
    Func::new(FinSet::atom(a), FinSet::atom(b), (0..a).map(|_| r.gen_range(0..b)).collect())
}

/// The closed-form companion moved to a randomly permuted apex.
fn relabeled(d: &SpanModel, f: &Func, r: &mut dyn RngCore) -> CompanionOf<SpanModel> {
    let c = span_companion(d, f).unwrap();
    let n = c.fhat.size() as usize;
    let mut perm: Vec<u32> = (0..n as u32).collect();
    perm.shuffle(r);
    let m = &c.fhat;
    let (mut apex, mut left, mut right) = (m.apex.to_vec(), vec![0; n], vec![0; n]);
    for (x, &p) in perm.iter().enumerate() {
        apex[p as usize] = m.apex[x].clone();
        left[p as usize] = m.left[x];
        right[p as usize] = m.right[x];
    }
    let m2 = Span::new(m.src.clone(), m.tgt.clone(), apex, left, right);
    let phi: SpanSquare = d.square(d.globular_frame(m, &m2), perm).unwrap();
    transport_companion(d, &c, m2, &phi).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interchange_holds(seed in any::<u64>()) {
        if let Some((a, b)) = interchange(&SpanModel::new(2, 2), seed) {
            prop_assert_eq!(a, b);
        }
        let rel = RelModel::new(3);
        if let Some((a, b)) = interchange(&rel, seed) {
            prop_assert!(rel.sq_eq(&a, &b));
        }
    }

    #[test]
    fn composites_have_the_expected_boundaries(seed in any::<u64>()) {
        prop_assert!(boundaries_are_strict(&SpanModel::new(2, 2), seed));
        prop_assert!(boundaries_are_strict(&RelModel::new(2), seed));
    }

    #[test]
    fn constraints_do_not_depend_on_the_route(seed in any::<u64>()) {
        prop_assert!(coherent(&SpanModel::new(2, 2), seed));
        prop_assert!(coherent(&RelModel::new(2), seed));
    }

    #[test]
    fn evaluation_is_deterministic(seed in any::<u64>()) {
        let d = SpanModel::new(2, 2);
        if let Some([s, _, t]) = three_bracketings(&d, seed) {
            prop_assert_eq!(canonical_constraint(&d, &s, &t).unwrap(), canonical_constraint(&d, &s, &t).unwrap());
        }
    }

    #[test]
    fn closed_form_companions_and_conjoints_verify(seed in any::<u64>()) {
        let mut r = rng(seed);
        let f = func(&mut r, 3);
        let span = SpanModel::new(3, 3);
        prop_assert!(verify_companion(&span, &span_companion(&span, &f).unwrap()).unwrap().passed());
        prop_assert!(verify_conjoint(&span, &span_conjoint(&span, &f).unwrap()).unwrap().passed());
        let rel = RelModel::new(3);
        prop_assert!(verify_companion(&rel, &rel_companion(&rel, &f).unwrap()).unwrap().passed());
        prop_assert!(verify_conjoint(&rel, &rel_conjoint(&rel, &f).unwrap()).unwrap().passed());
    }

    #[test]
    fn comparison_cells_form_a_groupoid(seed in any::<u64>()) {
        let d = SpanModel::new(3, 3);
        let mut r = rng(seed);
        let f = func(&mut r, 3);
        let [c1, c2, c3] = [0; 3].map(|_| relabeled(&d, &f, &mut r));
        let t12 = theta(&d, &c1, &c2).unwrap();
        prop_assert_eq!(theta(&d, &c1, &c1).unwrap(), d.sq_id(&c1.fhat));
        prop_assert_eq!(d.compose_v(&t12, &theta(&d, &c2, &c3).unwrap()).unwrap(), theta(&d, &c1, &c3).unwrap());
        prop_assert_eq!(d.sq_inverse(&t12), Some(theta(&d, &c2, &c1).unwrap()));
    }

    #[test]
    fn the_comparison_is_the_only_compatible_iso(seed in any::<u64>()) {
        let d = SpanModel::new(2, 2);
        let mut r = rng(seed);
        let f = func(&mut r, 2);
        let (c1, c2) = (relabeled(&d, &f, &mut r), relabeled(&d, &f, &mut r));
        prop_assert_eq!(theta_candidates(&d, &c1, &c2).unwrap(), vec![theta(&d, &c1, &c2).unwrap()]);
    }

    #[test]
    fn relations_have_one_companion_with_trivial_comparisons(seed in any::<u64>()) {
        let d = RelModel::new(2);
        let f = func(&mut rng(seed), 2);
        let cs = all_companions(&d, &f);
        prop_assert!(cs.iter().all(|c| c.fhat == cs[0].fhat));
        for c1 in &cs {
            for c2 in &cs {
                prop_assert!(d.sq_eq(&theta(&d, c1, c2).unwrap(), &d.sq_id(&c1.fhat)));
            }
        }
    }

    #[test]
    fn adjunctions_satisfy_the_triangle_identities(seed in any::<u64>()) {
        let d = SpanModel::new(3, 3);
        let f = func(&mut rng(seed), 3);
        let adj = adjunction(&d, &span_companion(&d, &f).unwrap(), &span_conjoint(&d, &f).unwrap()).unwrap();
        let (l, rr) = triangle_identities(&d, &adj).unwrap();
        prop_assert!(l.is_ok() && rr.is_ok());
        if f.inverse().is_some() {
            prop_assert!(d.sq_inverse(&adj.unit).is_some() && d.sq_inverse(&adj.counit).is_some());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(6))]

    #[test]
    fn models_pass_their_axioms_for_any_seed(seed in any::<u64>()) {
        let budget = SampleBudget::new(30, seed);
        let span = SpanModel::new(2, 2);
        prop_assert!(verify_double_category(&span, &budget).passed());
        prop_assert!(verify_monoidal(&span, &budget).passed());
        prop_assert!(verify_double_category(&RelModel::new(3), &budget).passed());
    }

    #[test]
    fn lifted_equations_hold_in_both_modes(seed in any::<u64>()) {
        let budget = SampleBudget::new(4, seed);
        let span = SpanModel::new(1, 2);
        let cert = certify_fibrant(&span, false).unwrap();
        for mode in [CheckMode::Brute, CheckMode::Theta] {
            let r = lift_symmetric(&span, &cert, mode, &budget);
            prop_assert!(r.passed(), "{:?}", r.failures().next());
        }
        let rel = RelModel::new(2);
        let cert = certify_fibrant(&rel, false).unwrap();
        prop_assert!(lift_symmetric(&rel, &cert, CheckMode::Theta, &budget).passed());
    }

    #[test]
    fn lifting_does_not_depend_on_the_certificate(seed in any::<u64>()) {
        let d = SpanModel::new(2, 2);
        let first = certify_fibrant(&d, false).unwrap();
        let second = first.twisted(&d, span_reversal).unwrap();
        let (r, n) = verify_choice_independence(&d, &first, &second, Level::Braided, &SampleBudget::new(10, seed));
        prop_assert!(r.passed() && n > 0, "{:?}", r.failures().next());
    }

    #[test]
    fn tables_round_trip_through_json(objects in 1u32..=2, v in 1u32..=2, h in 1u32..=2, s in 1u32..=3, beta in 0u32..=1) {
        if let Ok(g) = GradedModel::new(objects, v, h, s, beta) {
            let spec = TableSpec::tabulate_braided(&g).unwrap();
            let back = TableModel::from_json(&spec.to_json()).unwrap();
            prop_assert_eq!(back.spec(), &spec);
        }
    }
}

#[test]
fn fixtures_round_trip_through_json() {
    for f in dblcat::fixtures::all().unwrap() {
        assert_eq!(TableModel::from_json(&f.spec.to_json()).unwrap().spec(), &f.spec, "{}", f.file);
    }
}
