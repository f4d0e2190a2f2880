//! Monoidal, braided and symmetric structure on a double category.
//!
//! Conventions: the associator runs `(A x B) x C -> A x (B x C)`, the
//! unitors `I x A -> A` and `A x I -> A`, the braiding `A x B -> B x A`.
//! Square components have those vertical morphisms as sides.

use crate::cell::{DoubleCategory, Enumerable};
use crate::error::Result;
use crate::functor::{verify_functor, verify_transformation, Associator, Braiding, LeftUnitor, RightUnitor, Tensor};
use crate::report::{Axiom, Report, SampleBudget};
use crate::universe::{CellSource, ProductSource, Universe};
use crate::verify::{ensure, fail, same, Check};

pub trait Monoidal: DoubleCategory {
    fn unit_obj(&self) -> Self::Obj;
    fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj;
    fn tensor_vmor(&self, f: &Self::VMor, g: &Self::VMor) -> Self::VMor;
    fn tensor_hcell(&self, m: &Self::HCell, n: &Self::HCell) -> Self::HCell;
    fn tensor_sq(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq>;

    /// `(m1 x n1);(m2 x n2) => (m1;m2) x (n1;n2)`.
    fn interchanger(&self, m1: &Self::HCell, n1: &Self::HCell, m2: &Self::HCell, n2: &Self::HCell) -> Result<Self::Sq>;
    /// `U_(A x B) => U_A x U_B`.
    fn unit_comparison(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Sq>;

    fn assoc_vmor(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::VMor;
    fn assoc_sq(&self, m: &Self::HCell, n: &Self::HCell, p: &Self::HCell) -> Result<Self::Sq>;
    fn lunitor_vmor(&self, a: &Self::Obj) -> Self::VMor;
    /// `U_I x m => m`.
    fn lunitor_sq(&self, m: &Self::HCell) -> Result<Self::Sq>;
    fn runitor_vmor(&self, a: &Self::Obj) -> Self::VMor;
    fn runitor_sq(&self, m: &Self::HCell) -> Result<Self::Sq>;

    /// A model may pin the pentagonator component at an object tuple
    /// instead of letting it be derived from companions.
    fn pentagonator_override(&self, _objs: [&Self::Obj; 4]) -> Option<Self::Sq> {
        None
    }
}

pub trait Braided: Monoidal {
    fn braid_vmor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::VMor;
    fn braid_sq(&self, m: &Self::HCell, n: &Self::HCell) -> Result<Self::Sq>;
}

macro_rules! forward_monoidal {
    () => {
        fn unit_obj(&self) -> Self::Obj {
            (**self).unit_obj()
        }
        fn tensor_obj(&self, a: &Self::Obj, b: &Self::Obj) -> Self::Obj {
            (**self).tensor_obj(a, b)
        }
        fn tensor_vmor(&self, f: &Self::VMor, g: &Self::VMor) -> Self::VMor {
            (**self).tensor_vmor(f, g)
        }
        fn tensor_hcell(&self, m: &Self::HCell, n: &Self::HCell) -> Self::HCell {
            (**self).tensor_hcell(m, n)
        }
        fn tensor_sq(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
            (**self).tensor_sq(a, b)
        }
        fn interchanger(&self, m1: &Self::HCell, n1: &Self::HCell, m2: &Self::HCell, n2: &Self::HCell) -> Result<Self::Sq> {
            (**self).interchanger(m1, n1, m2, n2)
        }
        fn unit_comparison(&self, a: &Self::Obj, b: &Self::Obj) -> Result<Self::Sq> {
            (**self).unit_comparison(a, b)
        }
        fn assoc_vmor(&self, a: &Self::Obj, b: &Self::Obj, c: &Self::Obj) -> Self::VMor {
            (**self).assoc_vmor(a, b, c)
        }
        fn assoc_sq(&self, m: &Self::HCell, n: &Self::HCell, p: &Self::HCell) -> Result<Self::Sq> {
            (**self).assoc_sq(m, n, p)
        }
        fn lunitor_vmor(&self, a: &Self::Obj) -> Self::VMor {
            (**self).lunitor_vmor(a)
        }
        fn lunitor_sq(&self, m: &Self::HCell) -> Result<Self::Sq> {
            (**self).lunitor_sq(m)
        }
        fn runitor_vmor(&self, a: &Self::Obj) -> Self::VMor {
            (**self).runitor_vmor(a)
        }
        fn runitor_sq(&self, m: &Self::HCell) -> Result<Self::Sq> {
            (**self).runitor_sq(m)
        }
        fn pentagonator_override(&self, objs: [&Self::Obj; 4]) -> Option<Self::Sq> {
            (**self).pentagonator_override(objs)
        }
    };
}

impl<D: Monoidal + ?Sized> Monoidal for &D {
    forward_monoidal!();
}

impl<D: Braided + ?Sized> Braided for &D {
    fn braid_vmor(&self, a: &Self::Obj, b: &Self::Obj) -> Self::VMor {
        (**self).braid_vmor(a, b)
    }
    fn braid_sq(&self, m: &Self::HCell, n: &Self::HCell) -> Result<Self::Sq> {
        (**self).braid_sq(m, n)
    }
}

pub const GROUP_MONOIDAL: &str = "monoidal double category";
pub const GROUP_BRAIDED: &str = "braided monoidal double category";
pub const GROUP_SYMMETRIC: &str = "symmetric monoidal double category";

fn e2s<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(fail)
}

/// Vertical pentagon and triangle on objects, naturality of the vertical
/// constraints, functoriality of the tensor on morphisms and squares,
/// strictness of source and target, square-level coherence, and the
/// pseudofunctor and transformation axioms of the tensor and constraints.
pub fn verify_monoidal<D>(d: &D, budget: &SampleBudget) -> Report
where
    D: Monoidal + Enumerable + Clone,
{
    let mut report = Report::new();
    let u = Universe::new(d);
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_MONOIDAL, name, citation };
    let objs = u.objects();
    let obj_tuples = |k: usize| tuples(&objs, k);
    let nobj = objs.len() as u64;
    let random_objs = |k: usize, rng: &mut dyn rand::RngCore| -> Option<Vec<D::Obj>> {
        Some((0..k).map(|_| u.random_object(rng)).collect())
    };

    ax("vertical pentagon", "monoidal category of objects").run(
        &mut report,
        budget,
        nobj.checked_pow(4),
        || obj_tuples(4),
        |rng| random_objs(4, rng),
        |t| {
            let (a, b, c, e) = (&t[0], &t[1], &t[2], &t[3]);
            let ab = d.tensor_obj(a, b);
            let bc = d.tensor_obj(b, c);
            let ce = d.tensor_obj(c, e);
            let long = [
                d.tensor_vmor(&d.assoc_vmor(a, b, c), &d.vid(e)),
                d.assoc_vmor(a, &bc, e),
                d.tensor_vmor(&d.vid(a), &d.assoc_vmor(b, c, e)),
            ];
            let l = e2s(d.vcomp(&e2s(d.vcomp(&long[0], &long[1]))?, &long[2]))?;
            let r = e2s(d.vcomp(&d.assoc_vmor(&ab, c, e), &d.assoc_vmor(a, b, &ce)))?;
            ensure(l == r, || format!("pentagon: {l:?} != {r:?}"))
        },
    );

    ax("vertical triangle", "monoidal category of objects").run(
        &mut report,
        budget,
        nobj.checked_pow(2),
        || obj_tuples(2),
        |rng| random_objs(2, rng),
        |t| {
            let (a, b) = (&t[0], &t[1]);
            let i = d.unit_obj();
            let l = e2s(d.vcomp(&d.assoc_vmor(a, &i, b), &d.tensor_vmor(&d.vid(a), &d.lunitor_vmor(b))))?;
            let r = d.tensor_vmor(&d.runitor_vmor(a), &d.vid(b));
            ensure(l == r, || format!("triangle: {l:?} != {r:?}"))
        },
    );

    ax("vertical constraints are natural isomorphisms", "monoidal category of objects").sample(
        &mut report,
        budget,
        |rng| Some((u.random_vchain(1, rng)?, u.random_vchain(1, rng)?, u.random_vchain(1, rng)?)),
        |(f, g, h)| {
            let (f, g, h) = (&f[0], &g[0], &h[0]);
            let src = |x: &D::VMor| d.vsrc(x);
            let tgt = |x: &D::VMor| d.vtgt(x);
            let fgh = d.tensor_vmor(&d.tensor_vmor(f, g), h);
            let l = e2s(d.vcomp(&fgh, &d.assoc_vmor(&tgt(f), &tgt(g), &tgt(h))))?;
            let r = e2s(d.vcomp(&d.assoc_vmor(&src(f), &src(g), &src(h)), &d.tensor_vmor(f, &d.tensor_vmor(g, h))))?;
            ensure(l == r, || format!("associator naturality: {l:?} != {r:?}"))?;
            let i = d.vid(&d.unit_obj());
            let l = e2s(d.vcomp(&d.tensor_vmor(&i, f), &d.lunitor_vmor(&tgt(f))))?;
            let r = e2s(d.vcomp(&d.lunitor_vmor(&src(f)), f))?;
            ensure(l == r, || "left unitor naturality".into())?;
            let l = e2s(d.vcomp(&d.tensor_vmor(f, &i), &d.runitor_vmor(&tgt(f))))?;
            let r = e2s(d.vcomp(&d.runitor_vmor(&src(f)), f))?;
            ensure(l == r, || "right unitor naturality".into())?;
            for v in [d.assoc_vmor(&src(f), &src(g), &src(h)), d.lunitor_vmor(&src(f)), d.runitor_vmor(&src(f))] {
                ensure(d.vinverse(&v).is_some(), || format!("not invertible: {v:?}"))?;
            }
            Ok(())
        },
    );

    ax("tensor is a functor on vertical morphisms", "functoriality on objects").sample(
        &mut report,
        budget,
        |rng| Some((u.random_vchain(2, rng)?, u.random_vchain(2, rng)?)),
        |(fs, gs)| {
            let l = d.tensor_vmor(&e2s(d.vcomp(&fs[0], &fs[1]))?, &e2s(d.vcomp(&gs[0], &gs[1]))?);
            let r = e2s(d.vcomp(&d.tensor_vmor(&fs[0], &gs[0]), &d.tensor_vmor(&fs[1], &gs[1])))?;
            ensure(l == r, || format!("(f;g)x(f';g') = {l:?} but (fxf');(gxg') = {r:?}"))?;
            let (a, b) = (d.vsrc(&fs[0]), d.vsrc(&gs[0]));
            ensure(d.tensor_vmor(&d.vid(&a), &d.vid(&b)) == d.vid(&d.tensor_obj(&a, &b)), || "1 x 1 != 1".into())
        },
    );

    ax("tensor is a functor on squares", "functoriality on arrows").sample(
        &mut report,
        budget,
        |rng| {
            let a = u.random_square(rng)?;
            let b = u.random_square_below(&d.frame(&a).bottom, rng)?;
            let c = u.random_square(rng)?;
            let e = u.random_square_below(&d.frame(&c).bottom, rng)?;
            Some((a, b, c, e))
        },
        |(a, b, c, e)| {
            let l = e2s(d.tensor_sq(&e2s(d.compose_v(a, b))?, &e2s(d.compose_v(c, e))?))?;
            let r = e2s(d.compose_v(&e2s(d.tensor_sq(a, c))?, &e2s(d.tensor_sq(b, e))?))?;
            same(d, "(a;b)x(c;e) vs (axc);(bxe)", &l, &r)?;
            let (m, n) = (d.frame(a).top, d.frame(c).top);
            let l = e2s(d.tensor_sq(&d.sq_id(&m), &d.sq_id(&n)))?;
            same(d, "1 x 1 vs 1", &l, &d.sq_id(&d.tensor_hcell(&m, &n)))
        },
    );

    ax("source and target are strict monoidal", "strict monoidal S and T").sample(
        &mut report,
        budget,
        |rng| Some((u.random_square(rng)?, u.random_square(rng)?)),
        |(a, b)| {
            let (fa, fb) = (d.frame(a), d.frame(b));
            let (m, n) = (&fa.top, &fb.top);
            let mn = d.tensor_hcell(m, n);
            ensure(d.hsrc(&mn) == d.tensor_obj(&d.hsrc(m), &d.hsrc(n)), || "source of m x n".into())?;
            ensure(d.htgt(&mn) == d.tensor_obj(&d.htgt(m), &d.htgt(n)), || "target of m x n".into())?;
            let fr = d.frame(&e2s(d.tensor_sq(a, b))?);
            ensure(
                fr.top == mn
                    && fr.bottom == d.tensor_hcell(&fa.bottom, &fb.bottom)
                    && fr.left == d.tensor_vmor(&fa.left, &fb.left)
                    && fr.right == d.tensor_vmor(&fa.right, &fb.right),
                || format!("frame of a x b: {fr:?}"),
            )?;
            let i = d.unit_obj();
            let ui = d.hunit(&i);
            ensure(d.hsrc(&ui) == i && d.htgt(&ui) == i, || "unit 1-cell endpoints".into())
        },
    );

    ax("square constraints have the vertical constraints as sides", "strict monoidal S and T").sample(
        &mut report,
        budget,
        |rng| u.random_hchain(1, rng).and_then(|m| Some((m[0].clone(), u.random_hcell(rng)?, u.random_hcell(rng)?))),
        |(m, n, p)| {
            let (s, t) = (|x: &D::HCell| d.hsrc(x), |x: &D::HCell| d.htgt(x));
            let fr = d.frame(&e2s(d.assoc_sq(m, n, p))?);
            let want = crate::cell::Frame {
                top: d.tensor_hcell(&d.tensor_hcell(m, n), p),
                left: d.assoc_vmor(&s(m), &s(n), &s(p)),
                right: d.assoc_vmor(&t(m), &t(n), &t(p)),
                bottom: d.tensor_hcell(m, &d.tensor_hcell(n, p)),
            };
            ensure(fr == want, || format!("associator square frame {fr:?}"))?;
            let ui = d.hunit(&d.unit_obj());
            let fr = d.frame(&e2s(d.lunitor_sq(m))?);
            let want = crate::cell::Frame {
                top: d.tensor_hcell(&ui, m),
                left: d.lunitor_vmor(&s(m)),
                right: d.lunitor_vmor(&t(m)),
                bottom: m.clone(),
            };
            ensure(fr == want, || format!("left unitor square frame {fr:?}"))?;
            let fr = d.frame(&e2s(d.runitor_sq(m))?);
            let want = crate::cell::Frame {
                top: d.tensor_hcell(m, &ui),
                left: d.runitor_vmor(&s(m)),
                right: d.runitor_vmor(&t(m)),
                bottom: m.clone(),
            };
            ensure(fr == want, || format!("right unitor square frame {fr:?}"))
        },
    );

    ax("square pentagon and triangle", "monoidal category of arrows").sample(
        &mut report,
        budget,
        |rng| Some((0..4).map(|_| u.random_hcell(rng)).collect::<Option<Vec<_>>>()?),
        |h| square_pentagon_triangle(d, &h[0], &h[1], &h[2], &h[3]),
    );

    ax("square constraints are natural", "monoidal category of arrows").sample(
        &mut report,
        budget,
        |rng| Some((u.random_square(rng)?, u.random_square(rng)?, u.random_square(rng)?)),
        |(a, b, c)| {
            let (fa, fb, fc) = (d.frame(a), d.frame(b), d.frame(c));
            let l = e2s(d.compose_v(
                &e2s(d.tensor_sq(&e2s(d.tensor_sq(a, b))?, c))?,
                &e2s(d.assoc_sq(&fa.bottom, &fb.bottom, &fc.bottom))?,
            ))?;
            let r = e2s(d.compose_v(
                &e2s(d.assoc_sq(&fa.top, &fb.top, &fc.top))?,
                &e2s(d.tensor_sq(a, &e2s(d.tensor_sq(b, c))?))?,
            ))?;
            same(d, "associator naturality", &l, &r)?;
            let ui = d.sq_id(&d.hunit(&d.unit_obj()));
            let l = e2s(d.compose_v(&e2s(d.tensor_sq(&ui, a))?, &e2s(d.lunitor_sq(&fa.bottom))?))?;
            let r = e2s(d.compose_v(&e2s(d.lunitor_sq(&fa.top))?, a))?;
            same(d, "left unitor naturality", &l, &r)?;
            let l = e2s(d.compose_v(&e2s(d.tensor_sq(a, &ui))?, &e2s(d.runitor_sq(&fa.bottom))?))?;
            let r = e2s(d.compose_v(&e2s(d.runitor_sq(&fa.top))?, a))?;
            same(d, "right unitor naturality", &l, &r)
        },
    );

    let pair = ProductSource::new(Universe::new(d), Universe::new(d));
    let triple = ProductSource::new(ProductSource::new(Universe::new(d), Universe::new(d)), Universe::new(d));
    report.extend(regroup(
        verify_functor(&Tensor::new(d.clone()), &pair, budget),
        "tensor is a pseudo double functor",
    ));
    report.extend(regroup(
        verify_transformation(&Associator::new(d.clone()), &triple, budget),
        "associator is a double transformation",
    ));
    let single = Universe::new(d);
    report.extend(regroup(
        verify_transformation(&LeftUnitor::new(d.clone()), &single, budget),
        "left unitor is a double transformation",
    ));
    report.extend(regroup(
        verify_transformation(&RightUnitor::new(d.clone()), &single, budget),
        "right unitor is a double transformation",
    ));
    report
}

/// Every `k`-tuple of the given items, lexicographically.
pub fn tuples<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out: Vec<Vec<T>> = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * items.len());
        for t in &out {
            for x in items {
                let mut t = t.clone();
                t.push(x.clone());
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Renames the axioms of a sub-report into the monoidal group.
fn regroup(sub: Report, prefix: &str) -> Report {
    regroup_as(sub, GROUP_MONOIDAL, prefix)
}

fn regroup_as(mut sub: Report, group: &str, prefix: &str) -> Report {
    for r in sub.results.iter_mut() {
        r.group = group.to_string();
        r.name = format!("{prefix}: {}", r.name);
    }
    sub
}

/// Pentagon and triangle for the square-level associator and unitors.
pub fn square_pentagon_triangle<D: Monoidal>(
    d: &D,
    m: &D::HCell,
    n: &D::HCell,
    p: &D::HCell,
    q: &D::HCell,
) -> Check {
    let id = |x: &D::HCell| d.sq_id(x);
    let t = |x: &D::HCell, y: &D::HCell| d.tensor_hcell(x, y);
    let long = e2s(d.compose_v_all(&[
        e2s(d.tensor_sq(&e2s(d.assoc_sq(m, n, p))?, &id(q)))?,
        e2s(d.assoc_sq(m, &t(n, p), q))?,
        e2s(d.tensor_sq(&id(m), &e2s(d.assoc_sq(n, p, q))?))?,
    ]))?;
    let short = e2s(d.compose_v(&e2s(d.assoc_sq(&t(m, n), p, q))?, &e2s(d.assoc_sq(m, n, &t(p, q)))?))?;
    same(d, "square pentagon", &long, &short)?;
    let ui = d.hunit(&d.unit_obj());
    let l = e2s(d.compose_v(&e2s(d.assoc_sq(m, &ui, n))?, &e2s(d.tensor_sq(&id(m), &e2s(d.lunitor_sq(n))?))?))?;
    let r = e2s(d.tensor_sq(&e2s(d.runitor_sq(m))?, &id(n)))?;
    same(d, "square triangle", &l, &r)
}

/// Hexagons on objects and squares, naturality of the braiding and the
/// transformation axioms of the braiding.
pub fn verify_braided<D>(d: &D, budget: &SampleBudget) -> Report
where
    D: Braided + Enumerable + Clone,
{
    let mut report = Report::new();
    let u = Universe::new(d);
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_BRAIDED, name, citation };
    let objs = u.objects();
    let nobj = objs.len() as u64;
    let triples = tuples(&objs, 3);

    ax("vertical hexagons", "braided monoidal category of objects").run(
        &mut report,
        budget,
        nobj.checked_pow(3),
        || triples.clone(),
        |rng| Some((0..3).map(|_| u.random_object(rng)).collect()),
        |t| {
            let (a, b, c) = (&t[0], &t[1], &t[2]);
            let v = |x: Result<D::VMor>| e2s(x);
            let comp = |xs: &[D::VMor]| -> std::result::Result<D::VMor, String> {
                let mut acc = xs[0].clone();
                for x in &xs[1..] {
                    acc = v(d.vcomp(&acc, x))?;
                }
                Ok(acc)
            };
            let i = |x: &D::Obj| d.vid(x);
            let t2 = |x: &D::Obj, y: &D::Obj| d.tensor_obj(x, y);
            let inv = |f: D::VMor| d.vinverse(&f).ok_or_else(|| format!("not invertible: {f:?}"));
            // (AB)C -> B(CA), both ways.
            let l = comp(&[d.assoc_vmor(a, b, c), d.braid_vmor(a, &t2(b, c)), d.assoc_vmor(b, c, a)])?;
            let r = comp(&[
                d.tensor_vmor(&d.braid_vmor(a, b), &i(c)),
                d.assoc_vmor(b, a, c),
                d.tensor_vmor(&i(b), &d.braid_vmor(a, c)),
            ])?;
            ensure(l == r, || format!("first hexagon: {l:?} != {r:?}"))?;
            // A(BC) -> (CA)B, both ways.
            let l = comp(&[inv(d.assoc_vmor(a, b, c))?, d.braid_vmor(&t2(a, b), c), inv(d.assoc_vmor(c, a, b))?])?;
            let r = comp(&[
                d.tensor_vmor(&i(a), &d.braid_vmor(b, c)),
                inv(d.assoc_vmor(a, c, b))?,
                d.tensor_vmor(&d.braid_vmor(a, c), &i(b)),
            ])?;
            ensure(l == r, || format!("second hexagon: {l:?} != {r:?}"))
        },
    );

    ax("square hexagons", "braided monoidal category of arrows").sample(
        &mut report,
        budget,
        |rng| Some((0..3).map(|_| u.random_hcell(rng)).collect::<Option<Vec<_>>>()?),
        |h| square_hexagons(d, &h[0], &h[1], &h[2]),
    );

    ax("braiding is natural", "braided monoidal category of arrows").sample(
        &mut report,
        budget,
        |rng| Some((u.random_square(rng)?, u.random_square(rng)?)),
        |(a, b)| {
            let (fa, fb) = (d.frame(a), d.frame(b));
            let l = e2s(d.compose_v(&e2s(d.tensor_sq(a, b))?, &e2s(d.braid_sq(&fa.bottom, &fb.bottom))?))?;
            let r = e2s(d.compose_v(&e2s(d.braid_sq(&fa.top, &fb.top))?, &e2s(d.tensor_sq(b, a))?))?;
            same(d, "square naturality", &l, &r)?;
            let (f, g) = (&fa.left, &fb.left);
            let l = e2s(d.vcomp(&d.tensor_vmor(f, g), &d.braid_vmor(&d.vtgt(f), &d.vtgt(g))))?;
            let r = e2s(d.vcomp(&d.braid_vmor(&d.vsrc(f), &d.vsrc(g)), &d.tensor_vmor(g, f)))?;
            ensure(l == r, || "vertical naturality".into())?;
            let fr = d.frame(&e2s(d.braid_sq(&fa.top, &fb.top))?);
            ensure(
                fr.left == d.braid_vmor(&d.hsrc(&fa.top), &d.hsrc(&fb.top))
                    && fr.right == d.braid_vmor(&d.htgt(&fa.top), &d.htgt(&fb.top))
                    && fr.top == d.tensor_hcell(&fa.top, &fb.top)
                    && fr.bottom == d.tensor_hcell(&fb.top, &fa.top),
                || format!("braiding square frame {fr:?}"),
            )
        },
    );

    let pair = ProductSource::new(Universe::new(d), Universe::new(d));
    report.extend(regroup_as(
        verify_transformation(&Braiding::new(d.clone()), &pair, budget),
        GROUP_BRAIDED,
        "braiding is a double transformation",
    ));
    report
}

/// Hexagons for the square-level braiding.
pub fn square_hexagons<D: Braided>(d: &D, m: &D::HCell, n: &D::HCell, p: &D::HCell) -> Check {
    let id = |x: &D::HCell| d.sq_id(x);
    let t = |x: &D::HCell, y: &D::HCell| d.tensor_hcell(x, y);
    let inv = |s: D::Sq| d.sq_inverse(&s).ok_or_else(|| format!("not invertible: {s:?}"));
    let l = e2s(d.compose_v_all(&[
        e2s(d.assoc_sq(m, n, p))?,
        e2s(d.braid_sq(m, &t(n, p)))?,
        e2s(d.assoc_sq(n, p, m))?,
    ]))?;
    let r = e2s(d.compose_v_all(&[
        e2s(d.tensor_sq(&e2s(d.braid_sq(m, n))?, &id(p)))?,
        e2s(d.assoc_sq(n, m, p))?,
        e2s(d.tensor_sq(&id(n), &e2s(d.braid_sq(m, p))?))?,
    ]))?;
    same(d, "first square hexagon", &l, &r)?;
    let l = e2s(d.compose_v_all(&[
        inv(e2s(d.assoc_sq(m, n, p))?)?,
        e2s(d.braid_sq(&t(m, n), p))?,
        inv(e2s(d.assoc_sq(p, m, n))?)?,
    ]))?;
    let r = e2s(d.compose_v_all(&[
        e2s(d.tensor_sq(&id(m), &e2s(d.braid_sq(n, p))?))?,
        inv(e2s(d.assoc_sq(m, p, n))?)?,
        e2s(d.tensor_sq(&e2s(d.braid_sq(m, p))?, &id(n)))?,
    ]))?;
    same(d, "second square hexagon", &l, &r)
}

/// The braiding is an involution on objects and on squares.
pub fn verify_symmetric<D>(d: &D, budget: &SampleBudget) -> Report
where
    D: Braided + Enumerable,
{
    let mut report = Report::new();
    let u = Universe::new(d);
    let ax = |name: &'static str| Axiom { group: GROUP_SYMMETRIC, name, citation: "symmetry of the braiding" };
    let objs = u.objects();
    let pairs: Vec<(D::Obj, D::Obj)> =
        objs.iter().flat_map(|a| objs.iter().map(move |b| (a.clone(), b.clone()))).collect();
    ax("braiding is involutive on objects").run(
        &mut report,
        budget,
        Some(pairs.len() as u64),
        || pairs.clone(),
        |rng| Some((u.random_object(rng), u.random_object(rng))),
        |(a, b)| {
            let ss = e2s(d.vcomp(&d.braid_vmor(a, b), &d.braid_vmor(b, a)))?;
            ensure(ss == d.vid(&d.tensor_obj(a, b)), || format!("s_(B,A) s_(A,B) = {ss:?}"))
        },
    );
    ax("braiding is involutive on squares").sample(
        &mut report,
        budget,
        |rng| Some((u.random_hcell(rng)?, u.random_hcell(rng)?)),
        |(m, n)| {
            let ss = e2s(d.compose_v(&e2s(d.braid_sq(m, n))?, &e2s(d.braid_sq(n, m))?))?;
            same(d, "double braiding", &ss, &d.sq_id(&d.tensor_hcell(m, n)))
        },
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{RelModel, SpanModel};

    fn assert_passes(r: &Report) {
        let bad: Vec<_> = r.failures().collect();
        assert!(bad.is_empty(), "{bad:#?}");
        let empty: Vec<_> = r.results.iter().filter(|a| a.instances == 0).map(|a| &a.name).collect();
        assert!(empty.is_empty(), "no instances drawn for {empty:?}");
    }

    #[test]
    fn rel_is_symmetric_monoidal() {
        let d = RelModel::new(2);
        let b = SampleBudget::new(150, 2);
        assert_passes(&verify_monoidal(&d, &b));
        assert_passes(&verify_braided(&d, &b));
        assert_passes(&verify_symmetric(&d, &b));
    }

    #[test]
    fn span_is_symmetric_monoidal() {
        let d = SpanModel::new(2, 2);
        let b = SampleBudget::new(150, 3);
        assert_passes(&verify_monoidal(&d, &b));
        assert_passes(&verify_braided(&d, &b));
        assert_passes(&verify_symmetric(&d, &b));
    }

    #[test]
    fn span_interchanger_is_not_an_identity() {
        let d = SpanModel::new(2, 2);
        let m = crate::models::Span::identity(&crate::finset::FinSet::atom(2));
        let x = d.interchanger(&m, &m, &m, &m).unwrap();
        assert_ne!(x.frame.top, x.frame.bottom);
    }
}
