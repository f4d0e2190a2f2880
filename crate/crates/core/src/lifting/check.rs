//! Checking the lifted structure on a finite model.

use crate::bicat::{choice_comparison, flat, modification_axiom, verify_choice_comparison, GROUP_COMPARISON};
use crate::cell::Enumerable;
use crate::companions::{Certificate, Fibrant};
use crate::functor::{Associator, Braiding, LeftUnitor, RightUnitor};
use crate::monoidal::{tuples, Braided};
use crate::models::product::ProductModel;
use crate::report::{Axiom, Report, SampleBudget};
use crate::universe::{CellSource, ProductSource, Universe};
use crate::verify::{cap, fail, same, Check};

use super::eval::{CheckMode, Level, MonoidalBicategoryData};
use super::templates::{self, Equation, Modification};

pub const GROUP_MONOIDAL: &str = "monoidal bicategory: three equations";
pub const GROUP_BRAIDED: &str = "braided monoidal bicategory: four 2-cell diagrams";
pub const GROUP_SYLLEPTIC: &str = "sylleptic monoidal bicategory: two axioms";
pub const GROUP_SYMMETRIC: &str = "symmetric monoidal bicategory: one additional axiom";
pub const GROUP_MODIFICATIONS: &str = "lifted modifications";

/// The equations required at `level`, each with its group.
pub fn equations(level: Level) -> Vec<(&'static str, Equation)> {
    type Build = fn() -> Result<Equation, String>;
    let mut groups: Vec<(&'static str, Vec<Build>)> = vec![(
        GROUP_MONOIDAL,
        vec![templates::associahedron, templates::first_unit_equation, templates::second_unit_equation],
    )];
    if level >= Level::Braided {
        groups.push((
            GROUP_BRAIDED,
            vec![
                templates::braid_past_three,
                templates::three_past_braid,
                templates::pair_past_pair,
                templates::braiding_of_braidings,
            ],
        ));
    }
    if level >= Level::Symmetric {
        groups.push((GROUP_SYLLEPTIC, vec![templates::syllepsis_past_pair, templates::pair_past_syllepsis]));
        groups.push((GROUP_SYMMETRIC, vec![templates::symmetry]));
    }
    groups
        .into_iter()
        .flat_map(|(g, fs)| fs.into_iter().map(move |f| (g, f().expect("equation templates type-check"))))
        .collect()
}

/// The modifications whose naturality is required at `level`.
pub fn modifications(level: Level) -> Vec<Modification> {
    let mut out = templates::monoidal_modifications();
    if level >= Level::Braided {
        out.extend(templates::braided_modifications());
    }
    if level >= Level::Symmetric {
        out.extend(templates::sylleptic_modifications());
    }
    out
}

fn e2s<T>(r: crate::error::Result<T>) -> Result<T, String> {
    r.map_err(fail)
}

impl<D: Braided + Fibrant> MonoidalBicategoryData<'_, D> {
    /// Decides one equation at the given objects.
    pub fn check_equation(&self, e: &Equation, vals: &[D::Obj]) -> Check {
        let d = self.model;
        let first = e2s(self.route(&e.first, vals))?;
        let second = e2s(self.route(&e.second, vals))?;
        match self.mode {
            CheckMode::Brute => {
                let (a, b) = (e2s(flat(d, &first))?, e2s(flat(d, &second))?);
                same(d, e.name, &a.1, &b.1)
            }
            CheckMode::Theta => {
                let th = e2s(self.route_theta(&e.first, vals))?;
                same(d, "first route against the comparison", &first.cell, &th)?;
                same(d, "second route against the comparison", &second.cell, &th)
            }
        }
    }

    /// The modification axiom for one component family at 1-cells `ms`.
    pub fn check_modification(&self, m: &Modification, ms: &[D::HCell]) -> Check {
        let d = self.model;
        let pa: Vec<D::Obj> = ms.iter().map(|h| d.hsrc(h)).collect();
        let pb: Vec<D::Obj> = ms.iter().map(|h| d.htgt(h)).collect();
        let c = &m.cell;
        let at = c.at();
        let first = e2s(self.nat_word(&at, &c.src(), &pa, &pb, ms))?;
        let second = e2s(self.nat_word(&at, &c.tgt(), &pa, &pb, ms))?;
        let mu_a = e2s(self.cell(c, &pa))?;
        let mu_b = e2s(self.cell(c, &pb))?;
        e2s(modification_axiom(d, &first, &second, &mu_a, &mu_b))?
    }
}

/// Every equation and modification axiom required at the data's level.
pub fn verify_lifted<D>(data: &MonoidalBicategoryData<'_, D>, budget: &SampleBudget) -> Report
where
    D: Braided + Fibrant + Enumerable,
{
    let mut report = Report::new();
    let u = Universe::new(data.model);
    let objs = u.objects();
    for m in modifications(data.level) {
        let hcells: Vec<D::HCell> = u.hchains(1).into_iter().map(|mut c| c.remove(0)).collect();
        let population = cap(u.hchain_count(1).checked_pow(m.arity as u32).unwrap_or(u128::MAX));
        let name = format!("{} is a modification", m.name);
        Axiom { group: GROUP_MODIFICATIONS, name: &name, citation: m.citation }.run(
            &mut report,
            budget,
            population,
            || tuples(&hcells, m.arity),
            |rng| (0..m.arity).map(|_| u.random_hcell(rng)).collect::<Option<Vec<_>>>(),
            |ms| data.check_modification(&m, ms),
        );
    }
    for (group, e) in equations(data.level) {
        let population = (objs.len() as u64).checked_pow(e.arity as u32);
        Axiom { group, name: e.name, citation: e.citation }.run(
            &mut report,
            budget,
            population,
            || tuples(&objs, e.arity),
            |rng| Some((0..e.arity).map(|_| u.random_object(rng)).collect::<Vec<_>>()),
            |vals| data.check_equation(&e, vals),
        );
    }
    report
}

/// Lifts at `level` with the given certificate and checks the result.
pub fn lift<D>(d: &D, cert: &Certificate<D>, level: Level, mode: CheckMode, budget: &SampleBudget) -> Report
where
    D: Braided + Fibrant + Enumerable,
{
    verify_lifted(&MonoidalBicategoryData::new(d, cert, level, mode), budget)
}

pub fn lift_monoidal<D>(d: &D, cert: &Certificate<D>, mode: CheckMode, budget: &SampleBudget) -> Report
where
    D: Braided + Fibrant + Enumerable,
{
    lift(d, cert, Level::Monoidal, mode, budget)
}

pub fn lift_braided<D>(d: &D, cert: &Certificate<D>, mode: CheckMode, budget: &SampleBudget) -> Report
where
    D: Braided + Fibrant + Enumerable,
{
    lift(d, cert, Level::Braided, mode, budget)
}

pub fn lift_symmetric<D>(d: &D, cert: &Certificate<D>, mode: CheckMode, budget: &SampleBudget) -> Report
where
    D: Braided + Fibrant + Enumerable,
{
    lift(d, cert, Level::Symmetric, mode, budget)
}

/// The lifted associator, unitors and (from `Braided` up) braiding built
/// from two certificates are related by invertible modifications.
/// Returns the report and the number of object components compared.
pub fn verify_choice_independence<D>(
    d: &D,
    first: &Certificate<D>,
    second: &Certificate<D>,
    level: Level,
    budget: &SampleBudget,
) -> (Report, usize)
where
    D: Braided + Fibrant + Enumerable + Clone,
{
    let mut report = Report::new();
    let mut components = 0;
    let tag = |r: Report, what: &str| Report {
        results: r
            .results
            .into_iter()
            .map(|mut x| {
                x.name = format!("{what}: {}", x.name);
                x
            })
            .collect(),
    };
    let u = Universe::new(d);

    let assoc = Associator::new(d.clone());
    let src3 = ProductModel(ProductModel(d.clone(), d.clone()), d.clone());
    let u3 = ProductSource::new(ProductSource::new(Universe::new(d), Universe::new(d)), Universe::new(d));
    components += u3.objects().len();
    report.extend(tag(verify_choice_comparison(&choice_comparison(&assoc, &src3, first, second), &u3, budget), "associator"));

    let lu = LeftUnitor::new(d.clone());
    components += u.objects().len();
    report.extend(tag(verify_choice_comparison(&choice_comparison(&lu, d, first, second), &u, budget), "left unitor"));
    let ru = RightUnitor::new(d.clone());
    components += u.objects().len();
    report.extend(tag(verify_choice_comparison(&choice_comparison(&ru, d, first, second), &u, budget), "right unitor"));

    if level >= Level::Braided {
        let br = Braiding::new(d.clone());
        let src2 = ProductModel(d.clone(), d.clone());
        let u2 = ProductSource::new(Universe::new(d), Universe::new(d));
        components += u2.objects().len();
        report.extend(tag(verify_choice_comparison(&choice_comparison(&br, &src2, first, second), &u2, budget), "braiding"));
    }
    debug_assert!(report.results.iter().all(|r| r.group == GROUP_COMPARISON));
    (report, components)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bicat::lift_transformation;
    use crate::cell::DoubleCategory;
    use crate::companions::certify_fibrant;
    use crate::lifting::expr::{v, Letter};
    use crate::models::{rel::RelModel, span::SpanModel};

    #[test]
    fn naturality_of_the_associator_is_the_lifted_oplax_cell() {
        let d = SpanModel::new(1, 2);
        let cert = certify_fibrant(&d, false).unwrap();
        let data = MonoidalBicategoryData::new(&d, &cert, Level::Monoidal, CheckMode::Brute);
        let assoc = Associator::new(d.clone());
        let src = ProductModel(ProductModel(d.clone(), d.clone()), d.clone());
        let ct = lift_transformation(&assoc, &src, &cert);
        let u = Universe::new(&d);
        let hs: Vec<_> = u.hchains(1).into_iter().map(|mut c| c.remove(0)).collect();
        for ms in tuples(&hs, 3).into_iter().take(20) {
            let pa: Vec<_> = ms.iter().map(|h| d.hsrc(h)).collect();
            let pb: Vec<_> = ms.iter().map(|h| d.htgt(h)).collect();
            let ours = data.nat(&Letter::Assoc(v(0), v(1), v(2)), &pa, &pb, &ms).unwrap();
            let theirs = ct.oplax_cell(&((ms[0].clone(), ms[1].clone()), ms[2].clone())).unwrap();
            let (a, b) = (flat(&d, &ours).unwrap(), flat(&d, &theirs).unwrap());
            assert_eq!(a.0, b.0);
            assert!(d.sq_eq(&a.1, &b.1));
        }
    }

    #[test]
    fn monoidal_lift_of_small_models_passes() {
        let budget = SampleBudget::new(3, 7);
        let rel = RelModel::new(1);
        let cert = certify_fibrant(&rel, false).unwrap();
        let r = lift_monoidal(&rel, &cert, CheckMode::Brute, &budget);
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        let span = SpanModel::new(1, 2);
        let cert = certify_fibrant(&span, false).unwrap();
        let r = lift_monoidal(&span, &cert, CheckMode::Theta, &budget);
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
    }
}
