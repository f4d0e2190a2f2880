//! The run report written by `validate` and `lift`, in JSON and text.

use dblcat::report::{AxiomResult, Coverage};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

const TITLE: &str = "dblcat run report";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelSummary {
    pub source: String,
    pub structure: String,
    pub objects: u64,
    pub vmorphisms: u64,
    pub hcells: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateSummary {
    pub isofibrant: bool,
    pub certified: u64,
    pub status: String,
    pub problems: Vec<String>,
}

/// Work done in one phase, counted in checked instances so that reports
/// stay reproducible.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseTiming {
    pub phase: String,
    pub axioms: u64,
    pub instances: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub passed: bool,
    pub model: ModelSummary,
    pub certificate: Option<CertificateSummary>,
    pub level: Option<String>,
    pub check_mode: Option<String>,
    pub seed: u64,
    pub budget: u64,
    pub timings: Vec<PhaseTiming>,
    pub results: Vec<AxiomResult>,
}

impl Default for RunReport {
    fn default() -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: String::new(),
            passed: true,
            model: ModelSummary::default(),
            certificate: None,
            level: None,
            check_mode: None,
            seed: 0,
            budget: 0,
            timings: Vec::new(),
            results: Vec::new(),
        }
    }
}

impl RunReport {
    /// Sorts results by group and name and recomputes `passed`.
    pub fn normalize(&mut self) {
        self.results.sort_by(|a, b| (&a.group, &a.name).cmp(&(&b.group, &b.name)));
        self.passed = self.results.iter().all(|r| r.passed)
            && self.certificate.as_ref().map_or(true, |c| c.problems.is_empty());
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, String> {
        let r: RunReport = serde_json::from_str(text).map_err(|e| format!("not a run report: {e}"))?;
        if r.schema_version != SCHEMA_VERSION {
            return Err(format!("unsupported schema_version {}", r.schema_version));
        }
        Ok(r)
    }

    /// Tab-separated lines: a header of `key value` pairs, then one block
    /// per group listing each axiom with its citation.
    pub fn to_text(&self) -> String {
        let mut out = vec![TITLE.to_string()];
        let mut kv = |k: &str, v: String| out.push(format!("{k}\t{v}"));
        kv("schema_version", self.schema_version.to_string());
        kv("command", self.command.clone());
        kv("passed", self.passed.to_string());
        kv("model.source", self.model.source.clone());
        kv("model.structure", self.model.structure.clone());
        kv("model.objects", self.model.objects.to_string());
        kv("model.vmorphisms", self.model.vmorphisms.to_string());
        kv("model.hcells", self.model.hcells.to_string());
        if let Some(c) = &self.certificate {
            kv("certificate.isofibrant", c.isofibrant.to_string());
            kv("certificate.certified", c.certified.to_string());
            kv("certificate.status", c.status.clone());
            for p in &c.problems {
                kv("certificate.problem", quote(p));
            }
        }
        if let Some(l) = &self.level {
            kv("level", l.clone());
        }
        if let Some(m) = &self.check_mode {
            kv("check_mode", m.clone());
        }
        kv("seed", self.seed.to_string());
        kv("budget", self.budget.to_string());
        for t in &self.timings {
            kv("timing", format!("{}\t{}\t{}", t.phase, t.axioms, t.instances));
        }
        let mut group: Option<&str> = None;
        for r in &self.results {
            if group != Some(r.group.as_str()) {
                out.push(format!("== {}", r.group));
                group = Some(&r.group);
            }
            out.push(format!(
                "{}\t{}\t[{}]\t{}\t{}\t{} instances\t{} failures",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.citation,
                match r.coverage {
                    Coverage::Exhaustive => "exhaustive",
                    Coverage::Sampled => "sampled",
                },
                r.population.map_or("-".to_string(), |p| format!("of {p}")),
                r.instances,
                r.failures,
            ));
            if let Some(c) = &r.counterexample {
                out.push(format!("\tcounterexample\t{}", quote(c)));
            }
        }
        out.join("\n") + "\n"
    }

    pub fn from_text(text: &str) -> Result<Self, String> {
        let mut lines = text.lines();
        if lines.next() != Some(TITLE) {
            return Err("not a text run report".into());
        }
        let mut r = RunReport::default();
        let mut group = String::new();
        for (n, line) in lines.enumerate() {
            let bad = || format!("line {}: cannot read {line:?}", n + 2);
            if let Some(g) = line.strip_prefix("== ") {
                group = g.to_string();
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            match fields.as_slice() {
                ["", "counterexample", c] => {
                    let last = r.results.last_mut().ok_or_else(bad)?;
                    last.counterexample = Some(unquote(c).ok_or_else(bad)?);
                }
                [status @ ("PASS" | "FAIL"), name, citation, coverage, population, instances, failures] => {
                    let count = |s: &str, suffix: &str| s.strip_suffix(suffix).and_then(|x| x.parse().ok());
                    r.results.push(AxiomResult {
                        group: group.clone(),
                        name: name.to_string(),
                        citation: citation.strip_prefix('[').and_then(|c| c.strip_suffix(']')).ok_or_else(bad)?.into(),
                        coverage: match *coverage {
                            "exhaustive" => Coverage::Exhaustive,
                            "sampled" => Coverage::Sampled,
                            _ => return Err(bad()),
                        },
                        population: match *population {
                            "-" => None,
                            p => Some(p.strip_prefix("of ").and_then(|x| x.parse().ok()).ok_or_else(bad)?),
                        },
                        instances: count(instances, " instances").ok_or_else(bad)?,
                        failures: count(failures, " failures").ok_or_else(bad)?,
                        passed: *status == "PASS",
                        counterexample: None,
                    });
                }
                ["timing", phase, axioms, instances] => r.timings.push(PhaseTiming {
                    phase: phase.to_string(),
                    axioms: axioms.parse().map_err(|_| bad())?,
                    instances: instances.parse().map_err(|_| bad())?,
                }),
                [key, value] => {
                    let num = |v: &str| v.parse::<u64>().map_err(|_| bad());
                    let flag = |v: &str| v.parse::<bool>().map_err(|_| bad());
                    match *key {
                        "schema_version" => r.schema_version = num(value)? as u32,
                        "command" => r.command = value.to_string(),
                        "passed" => r.passed = flag(value)?,
                        "model.source" => r.model.source = value.to_string(),
                        "model.structure" => r.model.structure = value.to_string(),
                        "model.objects" => r.model.objects = num(value)?,
                        "model.vmorphisms" => r.model.vmorphisms = num(value)?,
                        "model.hcells" => r.model.hcells = num(value)?,
                        "certificate.isofibrant" => r.certificate.get_or_insert_with(Default::default).isofibrant = flag(value)?,
                        "certificate.certified" => r.certificate.get_or_insert_with(Default::default).certified = num(value)?,
                        "certificate.status" => r.certificate.get_or_insert_with(Default::default).status = value.to_string(),
                        "certificate.problem" => r
                            .certificate
                            .get_or_insert_with(Default::default)
                            .problems
                            .push(unquote(value).ok_or_else(bad)?),
                        "level" => r.level = Some(value.to_string()),
                        "check_mode" => r.check_mode = Some(value.to_string()),
                        "seed" => r.seed = num(value)?,
                        "budget" => r.budget = num(value)?,
                        _ => return Err(bad()),
                    }
                }
                _ => return Err(bad()),
            }
        }
        Ok(r)
    }

    /// Reads either rendering.
    pub fn parse(text: &str) -> Result<Self, String> {
        if text.trim_start().starts_with('{') {
            Self::from_json(text)
        } else {
            Self::from_text(text)
        }
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

fn unquote(s: &str) -> Option<String> {
    serde_json::from_str(s).ok()
}
