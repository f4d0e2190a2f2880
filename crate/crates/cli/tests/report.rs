use dblcat::report::{AxiomResult, Coverage};
use dblcat_cli::report::{CertificateSummary, ModelSummary, PhaseTiming, RunReport};
use proptest::prelude::*;

fn word() -> impl Strategy<Value = String> {
    "[a-zA-Z0-9 ,.:()=_-]{0,16}"
}

fn result() -> impl Strategy<Value = AxiomResult> {
    (word(), word(), word(), any::<bool>(), proptest::option::of(any::<u64>()), any::<u64>(), any::<u64>(), any::<bool>(), proptest::option::of(".*"))
        .prop_map(|(group, name, citation, exhaustive, population, instances, failures, passed, counterexample)| AxiomResult {
            group,
            name,
            citation,
            coverage: if exhaustive { Coverage::Exhaustive } else { Coverage::Sampled },
            population,
            instances,
            failures,
            passed,
            counterexample,
        })
}

fn run_report() -> impl Strategy<Value = RunReport> {
    let model = (word(), word(), any::<u64>(), any::<u64>(), any::<u64>())
        .prop_map(|(source, structure, objects, vmorphisms, hcells)| ModelSummary { source, structure, objects, vmorphisms, hcells });
    let cert = proptest::option::of((any::<bool>(), any::<u64>(), word(), proptest::collection::vec(".*", 0..3)).prop_map(
        |(isofibrant, certified, status, problems)| CertificateSummary { isofibrant, certified, status, problems },
    ));
    let timing = (word(), any::<u64>(), any::<u64>()).prop_map(|(phase, axioms, instances)| PhaseTiming { phase, axioms, instances });
    (
        (word(), any::<bool>(), model, cert),
        (proptest::option::of(word()), proptest::option::of(word()), any::<u64>(), any::<u64>()),
        proptest::collection::vec(timing, 0..3),
        proptest::collection::vec(result(), 0..6),
    )
        .prop_map(|((command, passed, model, certificate), (level, check_mode, seed, budget), timings, results)| RunReport {
            command,
            passed,
            model,
            certificate,
            level,
            check_mode,
            seed,
            budget,
            timings,
            results,
            ..RunReport::default()
        })
}

proptest! {
    #[test]
    fn text_rendering_round_trips(r in run_report()) {
        prop_assert_eq!(RunReport::from_text(&r.to_text()).unwrap(), r);
    }

    #[test]
    fn json_text_json_is_stable(r in run_report()) {
        let json = r.to_json();
        let back = RunReport::parse(&RunReport::parse(&json).unwrap().to_text()).unwrap();
        prop_assert_eq!(back.to_json(), json);
    }

    #[test]
    fn normalize_is_idempotent(r in run_report()) {
        let mut once = r.clone();
        once.normalize();
        let mut twice = once.clone();
        twice.normalize();
        prop_assert_eq!(&once, &twice);
        prop_assert_eq!(once.passed, once.results.iter().all(|x| x.passed) && once.certificate.as_ref().map_or(true, |c| c.problems.is_empty()));
    }
}

#[test]
fn empty_report_renders_only_the_header() {
    let text = RunReport::default().to_text();
    assert!(text.starts_with("dblcat run report\n"));
    assert!(text.lines().all(|l| !l.starts_with("== ") && !l.starts_with("PASS") && !l.starts_with("FAIL")));
    assert_eq!(RunReport::from_text(&text).unwrap(), RunReport::default());
}

#[test]
fn other_schema_versions_are_rejected() {
    let json = RunReport::default().to_json().replace("\"schema_version\": 1", "\"schema_version\": 2");
    assert!(RunReport::from_json(&json).unwrap_err().contains("schema_version"));
    assert!(RunReport::from_text("something else\n").is_err());
}
