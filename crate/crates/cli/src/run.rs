//! The `validate` and `lift` pipelines.

use std::path::PathBuf;

use dblcat::companions::{certify_fibrant, Fibrant};
use dblcat::lifting::{lift, CheckMode, Level};
use dblcat::models::{rel::RelModel, span::SpanModel, table::TableModel};
use dblcat::monoidal::{verify_braided, verify_monoidal, verify_symmetric};
use dblcat::report::{Report, SampleBudget};
use dblcat::verify::verify_double_category;
use dblcat::{Braided, CellError, Enumerable};

use crate::report::{CertificateSummary, ModelSummary, PhaseTiming, RunReport};

pub const GROUP_FIBRANCY: &str = "fibrancy";

/// Where a model comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    Rel { max_size: u32 },
    Span { max_size: u32, max_apex: u32 },
    Table(PathBuf),
}

/// Failures that are not about the mathematics: unreadable input, bad
/// schema, missing structure. Exit code 2.
#[derive(Debug)]
pub struct Operational(pub String);

impl From<CellError> for Operational {
    fn from(e: CellError) -> Self {
        Operational(e.to_string())
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub seed: u64,
    pub budget: u64,
    pub isofibrant: bool,
    pub mode: CheckMode,
}

pub fn level_name(l: Level) -> &'static str {
    match l {
        Level::Monoidal => "monoidal",
        Level::Braided => "braided",
        Level::Symmetric => "symmetric",
    }
}

fn mode_name(m: CheckMode) -> &'static str {
    match m {
        CheckMode::Theta => "theta",
        CheckMode::Brute => "brute",
    }
}

enum Loaded {
    Rel(RelModel),
    Span(SpanModel),
    Table(TableModel),
}

fn load(spec: &ModelSpec) -> Result<(Loaded, String), Operational> {
    Ok(match spec {
        ModelSpec::Rel { max_size } => (Loaded::Rel(RelModel::new(*max_size)), format!("builtin rel, max size {max_size}")),
        ModelSpec::Span { max_size, max_apex } => (
            Loaded::Span(SpanModel::new(*max_size, *max_apex)),
            format!("builtin span, max size {max_size}, max apex {max_apex}"),
        ),
        ModelSpec::Table(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Operational(format!("cannot read {}: {e}", path.display())))?;
            let name = path.file_name().map_or_else(|| path.display().to_string(), |n| n.to_string_lossy().into_owned());
            (Loaded::Table(TableModel::from_json(&text)?), format!("table {name}"))
        }
    })
}

/// The highest structure a model carries; `None` for a bare double
/// category. Builtins are symmetric; tables never claim more than braided
/// until asked.
fn structure(m: &Loaded) -> Option<Level> {
    match m {
        Loaded::Rel(_) | Loaded::Span(_) => Some(Level::Symmetric),
        Loaded::Table(t) if t.has_braiding() => Some(Level::Braided),
        Loaded::Table(t) if t.has_tensor() => Some(Level::Monoidal),
        Loaded::Table(_) => None,
    }
}

fn structure_name(l: Option<Level>) -> String {
    l.map_or("double category", level_name).to_string()
}

fn summary<D: Enumerable>(d: &D, source: String, structure: Option<Level>) -> ModelSummary {
    ModelSummary {
        source,
        structure: structure_name(structure),
        objects: d.objects().len() as u64,
        vmorphisms: d.all_vmors().len() as u64,
        hcells: d.all_hcells().len() as u64,
    }
}

fn timing(phase: &str, r: &Report) -> PhaseTiming {
    PhaseTiming { phase: phase.into(), axioms: r.results.len() as u64, instances: r.instances() }
}

/// Checks the model's own axioms up to `level`.
fn prerequisites<D: Braided + Enumerable + Clone>(d: &D, level: Option<Level>, budget: &SampleBudget) -> Report {
    let mut r = verify_double_category(d, budget);
    if level >= Some(Level::Monoidal) {
        r.extend(verify_monoidal(d, budget));
    }
    if level >= Some(Level::Braided) {
        r.extend(verify_braided(d, budget));
    }
    if level >= Some(Level::Symmetric) {
        r.extend(verify_symmetric(d, budget));
    }
    r
}

fn check_level(have: Option<Level>, want: Option<Level>) -> Result<(), Operational> {
    let allowed = match have {
        // A braiding may be symmetric; that is for the checks to decide.
        Some(Level::Braided) => Some(Level::Symmetric),
        h => h,
    };
    if want > allowed {
        return Err(Operational(format!(
            "the model is a {} and cannot be checked as {}",
            structure_name(have),
            structure_name(want)
        )));
    }
    Ok(())
}

fn base(command: &str, model: ModelSummary, level: Option<Level>, opts: &Options) -> RunReport {
    RunReport {
        command: command.into(),
        model,
        level: level.map(|l| level_name(l).to_string()),
        seed: opts.seed,
        budget: opts.budget,
        ..RunReport::default()
    }
}

pub fn validate(spec: &ModelSpec, level: Option<Level>, opts: &Options) -> Result<RunReport, Operational> {
    let (m, source) = load(spec)?;
    let have = structure(&m);
    let level = match level {
        Some(l) => Some(l),
        None => have,
    };
    check_level(have, level)?;
    let budget = SampleBudget::new(opts.budget, opts.seed);
    fn go<D: Braided + Enumerable + Clone>(
        d: &D,
        source: String,
        have: Option<Level>,
        level: Option<Level>,
        opts: &Options,
        budget: &SampleBudget,
    ) -> RunReport {
        let mut out = base("validate", summary(d, source, have), level, opts);
        let r = prerequisites(d, level, budget);
        out.timings.push(timing("validate", &r));
        out.results = r.results;
        out.normalize();
        out
    }
    Ok(match &m {
        Loaded::Rel(d) => go(d, source, have, level, opts, &budget),
        Loaded::Span(d) => go(d, source, have, level, opts, &budget),
        Loaded::Table(d) => go(d, source, have, level, opts, &budget),
    })
}

pub fn lift_model(spec: &ModelSpec, level: Level, opts: &Options) -> Result<RunReport, Operational> {
    let (m, source) = load(spec)?;
    let have = structure(&m);
    check_level(have, Some(level))?;
    let budget = SampleBudget::new(opts.budget, opts.seed);
    fn go<D: Braided + Fibrant + Enumerable + Clone>(
        d: &D,
        source: String,
        have: Option<Level>,
        level: Level,
        opts: &Options,
        budget: &SampleBudget,
    ) -> RunReport {
        let mut out = base("lift", summary(d, source, have), Some(level), opts);
        out.check_mode = Some(mode_name(opts.mode).into());
        let pre = prerequisites(d, Some(level), budget);
        out.timings.push(timing("validate", &pre));
        let ok = pre.passed();
        out.results = pre.results;
        if ok {
            match certify_fibrant(d, opts.isofibrant) {
                Ok(cert) => {
                    out.certificate = Some(CertificateSummary {
                        isofibrant: opts.isofibrant,
                        certified: cert.certified().len() as u64,
                        status: "certified".into(),
                        problems: Vec::new(),
                    });
                    let r = lift(d, &cert, level, opts.mode, budget);
                    out.timings.push(timing("lift", &r));
                    out.results.extend(r.results);
                }
                Err(e) => {
                    let problems = match &e {
                        CellError::NotFibrant(p) => p.clone(),
                        other => vec![other.to_string()],
                    };
                    out.certificate = Some(CertificateSummary {
                        isofibrant: opts.isofibrant,
                        certified: 0,
                        status: "not fibrant".into(),
                        problems,
                    });
                    let mut r = Report::new();
                    r.record(GROUP_FIBRANCY, "every vertical morphism has a companion and a conjoint", "fibrant double category", Err(e.to_string()));
                    out.results.extend(r.results);
                }
            }
        }
        out.normalize();
        out
    }
    Ok(match &m {
        Loaded::Rel(d) => go(d, source, have, level, opts, &budget),
        Loaded::Span(d) => go(d, source, have, level, opts, &budget),
        Loaded::Table(d) => go(d, source, have, level, opts, &budget),
    })
}
