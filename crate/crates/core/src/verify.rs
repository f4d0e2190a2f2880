//! The axioms of a pseudo double category, checked on a finite model.

use crate::cell::{DoubleCategory, Enumerable};
use crate::error::CellError;
use crate::report::{Axiom, Report, SampleBudget};
use crate::universe::{CellSource, Universe};

pub const GROUP: &str = "double category";

pub(crate) type Check = std::result::Result<(), String>;

pub(crate) fn fail(e: CellError) -> String {
    e.to_string()
}

/// `Ok` iff the two squares are equal in the model.
pub(crate) fn same<D: DoubleCategory>(d: &D, what: &str, a: &D::Sq, b: &D::Sq) -> Check {
    if d.sq_eq(a, b) {
        Ok(())
    } else {
        Err(format!("{what}: {a:?} != {b:?}"))
    }
}

pub(crate) fn ensure(cond: bool, what: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

pub(crate) fn cap(n: u128) -> Option<u64> {
    u64::try_from(n).ok()
}

/// Category laws of both directions, functoriality of the unit and of
/// horizontal composition, naturality and invertibility of the
/// constraints, pentagon and triangle.
pub fn verify_double_category<D: Enumerable>(d: &D, budget: &SampleBudget) -> Report {
    verify_double_category_on(&Universe::new(d), budget)
}

/// As [`verify_double_category`], drawing cells from an existing source.
pub fn verify_double_category_on<S: CellSource>(u: &S, budget: &SampleBudget) -> Report {
    let d = u.model();
    let mut report = Report::new();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP, name, citation };

    let n = cap(u.vchain_count(3));
    ax("vertical associativity and identities", "category of objects").run(
        &mut report,
        budget,
        n,
        || u.vchains(3),
|rng| u.random_vchain(3, rng),
        |c| {
            let (f, g, h) = (&c[0], &c[1], &c[2]);
            let l = d.vcomp(&d.vcomp(f, g).map_err(fail)?, h).map_err(fail)?;
            let r = d.vcomp(f, &d.vcomp(g, h).map_err(fail)?).map_err(fail)?;
            ensure(l == r, || format!("(fg)h = {l:?} but f(gh) = {r:?}"))?;
            let a = d.vsrc(f);
            ensure(d.vcomp(&d.vid(&a), f).map_err(fail)? == *f, || "left identity".into())?;
            ensure(d.vcomp(f, &d.vid(&d.vtgt(f))).map_err(fail)? == *f, || "right identity".into())
        },
    );

    ax("square vertical associativity and identities", "category of arrows").sample(
        &mut report,
        budget,
        |rng| {
            let a = u.random_square(rng)?;
            let b = u.random_square_below(&d.frame(&a).bottom, rng)?;
            let c = u.random_square_below(&d.frame(&b).bottom, rng)?;
            Some((a, b, c))
        },
        |(a, b, c)| {
            let l = d.compose_v(&d.compose_v(a, b).map_err(fail)?, c).map_err(fail)?;
            let r = d.compose_v(a, &d.compose_v(b, c).map_err(fail)?).map_err(fail)?;
            same(d, "associativity", &l, &r)?;
            let fa = d.frame(a);
            same(d, "left identity", &d.compose_v(&d.sq_id(&fa.top), a).map_err(fail)?, a)?;
            same(d, "right identity", &d.compose_v(a, &d.sq_id(&fa.bottom)).map_err(fail)?, a)
        },
    );

    let n = cap(u.hchain_count(2));
    ax("source and target of units and composites", "structure functors S, T").run(
        &mut report,
        budget,
        n,
        || u.hchains(2),
|rng| u.random_hchain(2, rng),
        |c| {
            let (m, n) = (&c[0], &c[1]);
            let a = d.hsrc(m);
            let ua = d.hunit(&a);
            ensure(d.hsrc(&ua) == a && d.htgt(&ua) == a, || "unit endpoints".into())?;
            let mn = d.hcomp(m, n).map_err(fail)?;
            ensure(d.hsrc(&mn) == d.hsrc(m) && d.htgt(&mn) == d.htgt(n), || "composite endpoints".into())?;
            let fr = d.frame(&d.sq_id(&mn));
            ensure(fr == d.globular_frame(&mn, &mn), || "identity square frame".into())
        },
    );

    let n = cap(u.vchain_count(2));
    ax("unit preserves composition", "functoriality of U").run(
        &mut report,
        budget,
        n,
        || u.vchains(2),
|rng| u.random_vchain(2, rng),
        |c| {
            let fg = d.vcomp(&c[0], &c[1]).map_err(fail)?;
            let l = d.sq_unit(&fg);
            let r = d.compose_v(&d.sq_unit(&c[0]), &d.sq_unit(&c[1])).map_err(fail)?;
            same(d, "U_(gf) vs U_g U_f", &l, &r)
        },
    );

    let objs = u.objects();
    ax("identity of a unit is the unit of an identity", "1_{U_A} = U_{1_A}").run(
        &mut report,
        budget,
        Some(objs.len() as u64),
        || objs.clone(),
        |_| None,
        |a| same(d, "1_{U_A} vs U_{1_A}", &d.sq_id(&d.hunit(a)), &d.sq_unit(&d.vid(a))),
    );

    ax("horizontal composite of identities", "functoriality of horizontal composition").run(
        &mut report,
        budget,
        cap(u.hchain_count(2)),
        || u.hchains(2),
|rng| u.random_hchain(2, rng),
        |c| {
            let l = d.compose_h(&d.sq_id(&c[0]), &d.sq_id(&c[1])).map_err(fail)?;
            let r = d.sq_id(&d.hcomp(&c[0], &c[1]).map_err(fail)?);
            same(d, "1_M (.) 1_N vs 1_(M.N)", &l, &r)
        },
    );

    ax("interchange", "interchange law").sample(
        &mut report,
        budget,
        |rng| {
            let top = u.random_row(2, rng)?;
            let mid: Vec<_> = top.iter().map(|s| d.frame(s).bottom).collect();
            let bot = u.random_row_below(&mid, rng)?;
            Some((top[0].clone(), top[1].clone(), bot[0].clone(), bot[1].clone()))
        },
        |(a, b, c, e)| {
            let l = d.compose_v(&d.compose_h(a, b).map_err(fail)?, &d.compose_h(c, e).map_err(fail)?).map_err(fail)?;
            let r = d.compose_h(&d.compose_v(a, c).map_err(fail)?, &d.compose_v(b, e).map_err(fail)?).map_err(fail)?;
            same(d, "interchange", &l, &r)
        },
    );

    ax("associator naturality", "natural isomorphism a").sample(
        &mut report,
        budget,
        |rng| u.random_row(3, rng),
        |row| {
            let f: Vec<_> = row.iter().map(|s| d.frame(s)).collect();
            let lhs_h = d.compose_h(&d.compose_h(&row[0], &row[1]).map_err(fail)?, &row[2]).map_err(fail)?;
            let rhs_h = d.compose_h(&row[0], &d.compose_h(&row[1], &row[2]).map_err(fail)?).map_err(fail)?;
            let l = d.compose_v(&lhs_h, &d.assoc(&f[0].bottom, &f[1].bottom, &f[2].bottom).map_err(fail)?).map_err(fail)?;
            let r = d.compose_v(&d.assoc(&f[0].top, &f[1].top, &f[2].top).map_err(fail)?, &rhs_h).map_err(fail)?;
            same(d, "associator naturality", &l, &r)
        },
    );

    ax("unitor naturality", "natural isomorphisms l, r").sample(
        &mut report,
        budget,
        |rng| u.random_square(rng),
        |a| {
            let fr = d.frame(a);
            let l1 = d.compose_v(&d.lunit(&fr.top).map_err(fail)?, a).map_err(fail)?;
            let l2 = d
                .compose_v(&d.compose_h(&d.sq_unit(&fr.left), a).map_err(fail)?, &d.lunit(&fr.bottom).map_err(fail)?)
                .map_err(fail)?;
            same(d, "source-side unitor", &l1, &l2)?;
            let r1 = d.compose_v(&d.runit(&fr.top).map_err(fail)?, a).map_err(fail)?;
            let r2 = d
                .compose_v(&d.compose_h(a, &d.sq_unit(&fr.right)).map_err(fail)?, &d.runit(&fr.bottom).map_err(fail)?)
                .map_err(fail)?;
            same(d, "target-side unitor", &r1, &r2)
        },
    );

    let n = cap(u.hchain_count(3));
    ax("constraints are globular isomorphisms", "constraints with identity S and T images").run(
        &mut report,
        budget,
        n,
        || u.hchains(3),
|rng| u.random_hchain(3, rng),
        |c| {
            let cells = [
                d.assoc(&c[0], &c[1], &c[2]).map_err(fail)?,
                d.lunit(&c[0]).map_err(fail)?,
                d.runit(&c[0]).map_err(fail)?,
            ];
            for s in &cells {
                ensure(d.is_globular(s), || format!("not globular: {s:?}"))?;
                let inv = d.sq_inverse(s).ok_or_else(|| format!("not invertible: {s:?}"))?;
                let fr = d.frame(s);
                same(d, "inverse after", &d.compose_v(s, &inv).map_err(fail)?, &d.sq_id(&fr.top))?;
                same(d, "inverse before", &d.compose_v(&inv, s).map_err(fail)?, &d.sq_id(&fr.bottom))?;
            }
            Ok(())
        },
    );

    let n = cap(u.hchain_count(4));
    ax("pentagon", "Mac Lane's pentagon").run(
        &mut report,
        budget,
        n,
        || u.hchains(4),
|rng| u.random_hchain(4, rng),
        |c| pentagon(d, &c[0], &c[1], &c[2], &c[3]).map_err(fail)?,
    );

    ax("triangle", "unit coherence").run(
        &mut report,
        budget,
        cap(u.hchain_count(2)),
        || u.hchains(2),
|rng| u.random_hchain(2, rng),
        |c| triangle(d, &c[0], &c[1]).map_err(fail)?,
    );

    report
}

/// `((mn)p)q -> (m(np))q -> m((np)q) -> m(n(pq))` against
/// `((mn)p)q -> (mn)(pq) -> m(n(pq))`.
pub fn pentagon<D: DoubleCategory>(
    d: &D,
    m: &D::HCell,
    n: &D::HCell,
    p: &D::HCell,
    q: &D::HCell,
) -> crate::error::Result<Check> {
    let mn = d.hcomp(m, n)?;
    let np = d.hcomp(n, p)?;
    let pq = d.hcomp(p, q)?;
    let long = d.compose_v_all(&[
        d.compose_h(&d.assoc(m, n, p)?, &d.sq_id(q))?,
        d.assoc(m, &np, q)?,
        d.compose_h(&d.sq_id(m), &d.assoc(n, p, q)?)?,
    ])?;
    let short = d.compose_v(&d.assoc(&mn, p, q)?, &d.assoc(m, n, &pq)?)?;
    Ok(same(d, "pentagon", &long, &short))
}

/// `(m U) n -> m (U n) -> m n` against `runit(m) (.) 1_n`.
pub fn triangle<D: DoubleCategory>(d: &D, m: &D::HCell, n: &D::HCell) -> crate::error::Result<Check> {
    let u = d.hunit(&d.htgt(m));
    let l = d.compose_v(&d.assoc(m, &u, n)?, &d.compose_h(&d.sq_id(m), &d.lunit(n)?)?)?;
    let r = d.compose_h(&d.runit(m)?, &d.sq_id(n))?;
    Ok(same(d, "triangle", &l, &r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{RelModel, SpanModel};

    #[test]
    fn rel_passes() {
        let r = verify_double_category(&RelModel::new(2), &SampleBudget::new(300, 1));
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }

    #[test]
    fn span_passes() {
        let r = verify_double_category(&SpanModel::new(2, 2), &SampleBudget::new(200, 1));
        assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    }
}
