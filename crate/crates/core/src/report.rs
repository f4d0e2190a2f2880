//! Verification reports and the budgeted check runner.

use std::fmt::Debug;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

/// How many instances each axiom may examine, and the seed for sampling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleBudget {
    pub per_axiom: u64,
    pub seed: u64,
}

impl Default for SampleBudget {
    fn default() -> Self {
        SampleBudget { per_axiom: 5000, seed: 0 }
    }
}

impl SampleBudget {
    pub fn new(per_axiom: u64, seed: u64) -> Self {
        SampleBudget { per_axiom, seed }
    }

    /// A generator private to one axiom, so adding axioms does not shift
    /// the samples drawn for the others.
    pub fn rng_for(&self, name: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in name.bytes() {
            h ^= b as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomResult {
    pub group: String,
    pub name: String,
    pub citation: String,
    pub coverage: Coverage,
    /// Size of the instance population, when it could be counted.
    pub population: Option<u64>,
    pub instances: u64,
    pub failures: u64,
    pub passed: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub results: Vec<AxiomResult>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &AxiomResult> {
        self.results.iter().filter(|r| !r.passed)
    }

    pub fn get(&self, name: &str) -> Option<&AxiomResult> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn extend(&mut self, other: Report) {
        self.results.extend(other.results);
    }

    pub fn instances(&self) -> u64 {
        self.results.iter().map(|r| r.instances).sum()
    }

    /// Records a single yes/no fact as a one-instance axiom.
    pub fn record(&mut self, group: &str, name: &str, citation: &str, outcome: std::result::Result<(), String>) {
        let passed = outcome.is_ok();
        self.results.push(AxiomResult {
            group: group.into(),
            name: name.into(),
            citation: citation.into(),
            coverage: Coverage::Exhaustive,
            population: Some(1),
            instances: 1,
            failures: u64::from(!passed),
            passed,
            counterexample: outcome.err(),
        });
    }
}

/// One axiom to be checked over a population of instances.
pub struct Axiom<'a> {
    pub group: &'a str,
    pub name: &'a str,
    pub citation: &'a str,
}

const MAX_DRAW_ATTEMPTS: u64 = 50;

impl Axiom<'_> {
    /// Checks `test` on every instance when `population` fits the budget,
    /// else on `budget.per_axiom` seeded draws from `sample`. A test returns
    /// `Err(detail)` on failure; the shortest failing instance is kept.
    pub fn run<T, E, S, F>(
        &self,
        report: &mut Report,
        budget: &SampleBudget,
        population: Option<u64>,
        enumerate: E,
        mut sample: S,
        test: F,
    ) where
        T: Debug,
        E: FnOnce() -> Vec<T>,
        S: FnMut(&mut ChaCha8Rng) -> Option<T>,
        F: Fn(&T) -> std::result::Result<(), String>,
    {
        let mut worst: Option<String> = None;
        let (mut instances, mut failures) = (0u64, 0u64);
        let mut visit = |t: &T, instances: &mut u64| {
            *instances += 1;
            if let Err(detail) = test(t) {
                failures += 1;
                let text = format!("{detail} at {t:?}");
                if worst.as_ref().map_or(true, |w| text.len() < w.len()) {
                    worst = Some(text);
                }
            }
        };
        let exhaustive = matches!(population, Some(n) if n <= budget.per_axiom);
        if exhaustive {
            for t in enumerate() {
                visit(&t, &mut instances);
            }
        } else {
            let mut rng = budget.rng_for(self.name);
            let mut misses = 0;
            while instances < budget.per_axiom && misses < MAX_DRAW_ATTEMPTS * budget.per_axiom.max(1) {
                match sample(&mut rng) {
                    Some(t) => visit(&t, &mut instances),
                    None => misses += 1,
                }
            }
        }
        report.results.push(AxiomResult {
            group: self.group.into(),
            name: self.name.into(),
            citation: self.citation.into(),
            coverage: if exhaustive { Coverage::Exhaustive } else { Coverage::Sampled },
            population,
            instances,
            failures,
            passed: failures == 0,
            counterexample: worst,
        });
    }

    /// Like [`Axiom::run`] for a population that is always sampled.
    pub fn sample<T, S, F>(&self, report: &mut Report, budget: &SampleBudget, sample: S, test: F)
    where
        T: Debug,
        S: FnMut(&mut ChaCha8Rng) -> Option<T>,
        F: Fn(&T) -> std::result::Result<(), String>,
    {
        self.run(report, budget, None, Vec::new, sample, test)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn small_populations_are_exhaustive() {
        let mut r = Report::new();
        let ax = Axiom { group: "g", name: "even", citation: "" };
        ax.run(&mut r, &SampleBudget::new(10, 1), Some(4), || vec![0, 2, 4, 5], |_| None::<u32>, |x| {
            if x % 2 == 0 { Ok(()) } else { Err("odd".into()) }
        });
        let res = &r.results[0];
        assert_eq!(res.coverage, Coverage::Exhaustive);
        assert_eq!((res.instances, res.failures), (4, 1));
        assert_eq!(res.counterexample.as_deref(), Some("odd at 5"));
    }

    #[test]
    fn sampling_is_seeded() {
        let run = |seed| {
            let mut r = Report::new();
            let ax = Axiom { group: "g", name: "small", citation: "" };
            ax.sample(&mut r, &SampleBudget::new(50, seed), |rng| Some(rng.gen_range(0..1000u32)), |x| {
                if *x < 990 { Ok(()) } else { Err("big".into()) }
            });
            r
        };
        assert_eq!(run(7), run(7));
        assert_eq!(run(7).results[0].instances, 50);
    }
}
