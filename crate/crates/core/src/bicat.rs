//! The horizontal bicategory of a double category, double transformations
//! lifted to conjunctional transformations, mates, and the comparison
//! cells between different choices of companions.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::cell::{DoubleCategory, Enumerable};
use crate::companions::{
    adjunction, adjunction_cells, companion_of_identity, compose_companions, map_companion, theta, theta_conditions,
    triangle_identities, AdjunctionData, Certificate, CompanionOf, ConjointOf, Fibrant,
};
use crate::error::{CellError, Result};
use crate::functor::{
    verify_functor, DblFunctor, DblTransformation, IdentityTransformation, Ob, VComposite, Whiskered, HC, SQ, VM,
};
use crate::htree::{HTree, HTreeOf};
use crate::models::HOp;
use crate::pasting::{Globular, GlobularOf, WhiskerPath, Word};
use crate::report::{Axiom, Report, SampleBudget};
use crate::universe::{CellSource, Universe};
use crate::verify::{cap, ensure, fail, pentagon, same, triangle, Check};

pub const GROUP_BICATEGORY: &str = "horizontal bicategory";
pub const GROUP_FUNCTOR: &str = "functor of horizontal bicategories";
pub const GROUP_CONJUNCTIONAL: &str = "conjunctional transformation";
pub const GROUP_COMPARISON: &str = "choice comparison";
pub const GROUP_LOCAL: &str = "local functor";
pub const GROUP_WHISKER: &str = "whiskering comparison";

pub type SrcOf<T> = <<T as DblTransformation>::F as DblFunctor>::Src;
pub type TgtOf<T> = <<T as DblTransformation>::F as DblFunctor>::Tgt;

fn e2s<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(fail)
}

fn flatten<T>(r: Result<Check>) -> Check {
    r.map_err(fail)?
}

fn leaf<O: Clone + PartialEq, H: Clone + PartialEq>(h: H) -> HTree<O, H> {
    HTree::leaf(h)
}

fn node<O: Clone + PartialEq, H: Clone + PartialEq>(l: HTree<O, H>, r: HTree<O, H>) -> HTree<O, H> {
    HTree::node(l, r)
}

fn inverse<D: DoubleCategory>(d: &D, s: &D::Sq) -> Result<D::Sq> {
    d.sq_inverse(s).ok_or_else(|| CellError::NotInvertible(format!("{s:?}")))
}

/// Evaluates a whiskered path to a 2-cell between its flat end words.
pub fn path_globular<D: DoubleCategory>(
    d: &D,
    path: &WhiskerPath<D::Obj, D::HCell, D::Sq>,
) -> Result<GlobularOf<D>> {
    let (end, cell) = path.eval(d)?;
    Ok(Globular { src: path.start.tree(), tgt: end.tree(), cell })
}

/// The same 2-cell with source and target flattened.
pub fn flat<D: DoubleCategory>(d: &D, g: &GlobularOf<D>) -> Result<(Word<D::Obj, D::HCell>, D::Sq)> {
    let start = Word::new(g.src.src(d), g.src.leaves());
    WhiskerPath::new(start).step(0, "cell", g.clone()).eval(d)
}

fn same_path<D: DoubleCategory>(
    d: &D,
    what: &str,
    a: &(Word<D::Obj, D::HCell>, D::Sq),
    b: &(Word<D::Obj, D::HCell>, D::Sq),
) -> Check {
    ensure(a.0 == b.0, || format!("{what}: boundaries differ, {:?} vs {:?}", a.0.cells, b.0.cells))?;
    same(d, what, &a.1, &b.1)
}

// ---------------------------------------------------------------------------
// H(D)

/// Objects, 1-cells and globular squares of a model.
#[derive(Clone, Copy, Debug)]
pub struct HorizontalBicategory<'a, D> {
    pub model: &'a D,
}

pub fn horizontal_bicategory<D: DoubleCategory>(d: &D) -> HorizontalBicategory<'_, D> {
    HorizontalBicategory { model: d }
}

impl<D: DoubleCategory> HorizontalBicategory<'_, D> {
    pub fn is_two_cell(&self, s: &D::Sq) -> bool {
        self.model.is_globular(s)
    }

    fn require(&self, s: &D::Sq) -> Result<()> {
        if self.is_two_cell(s) {
            Ok(())
        } else {
            Err(CellError::frame(format!("{s:?} is not globular")))
        }
    }

    pub fn vcomp(&self, a: &D::Sq, b: &D::Sq) -> Result<D::Sq> {
        self.require(a)?;
        self.require(b)?;
        self.model.compose_v(a, b)
    }

    pub fn hcomp(&self, a: &D::Sq, b: &D::Sq) -> Result<D::Sq> {
        self.require(a)?;
        self.require(b)?;
        self.model.compose_h(a, b)
    }

    pub fn identity(&self, m: &D::HCell) -> D::Sq {
        self.model.sq_id(m)
    }

    pub fn assoc(&self, m: &D::HCell, n: &D::HCell, p: &D::HCell) -> Result<D::Sq> {
        self.model.assoc(m, n, p)
    }

    pub fn lunit(&self, m: &D::HCell) -> Result<D::Sq> {
        self.model.lunit(m)
    }

    pub fn runit(&self, m: &D::HCell) -> Result<D::Sq> {
        self.model.runit(m)
    }
}

impl<D: Enumerable> HorizontalBicategory<'_, D> {
    /// Every 2-cell `m => n`.
    pub fn two_cells(&self, m: &D::HCell, n: &D::HCell) -> Vec<D::Sq> {
        let d = self.model;
        if d.hsrc(m) != d.hsrc(n) || d.htgt(m) != d.htgt(n) {
            return Vec::new();
        }
        d.squares_in_frame(&d.globular_frame(m, n))
    }
}

fn random_two_cell<S: CellSource>(u: &S, top: &HC<S::Model>, rng: &mut dyn rand::RngCore) -> Option<SQ<S::Model>> {
    let d = u.model();
    d.sample_square_below(top, &d.vid(&d.hsrc(top)), &d.vid(&d.htgt(top)), rng)
}

/// Closure of 2-cells under both compositions, globular constraints,
/// interchange on 2-cells, pentagon and triangle.
pub fn verify_horizontal_bicategory<S: CellSource>(u: &S, budget: &SampleBudget) -> Report {
    let d = u.model();
    let h = horizontal_bicategory(d);
    let mut report = Report::new();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_BICATEGORY, name, citation };

    ax("2-cells are closed under composition", "globular squares").sample(
        &mut report,
        budget,
        |rng| {
            let c = u.random_hchain(2, rng)?;
            let a = random_two_cell(u, &c[0], rng)?;
            let b = random_two_cell(u, &d.frame(&a).bottom, rng)?;
            let e = random_two_cell(u, &c[1], rng)?;
            let g = random_two_cell(u, &d.frame(&e).bottom, rng)?;
            Some((a, b, e, g))
        },
        |(a, b, e, g)| {
            let v = e2s(h.vcomp(a, b))?;
            let w = e2s(h.hcomp(a, e))?;
            ensure(h.is_two_cell(&v) && h.is_two_cell(&w), || "composite is not globular".into())?;
            let l = e2s(h.vcomp(&w, &e2s(h.hcomp(b, g))?))?;
            let r = e2s(h.hcomp(&v, &e2s(h.vcomp(e, g))?))?;
            same(d, "interchange of 2-cells", &l, &r)
        },
    );

    ax("constraints are invertible 2-cells", "associator and unitors of H(D)").run(
        &mut report,
        budget,
        cap(u.hchain_count(3)),
        || u.hchains(3),
        |rng| u.random_hchain(3, rng),
        |c| {
            for s in [e2s(h.assoc(&c[0], &c[1], &c[2]))?, e2s(h.lunit(&c[0]))?, e2s(h.runit(&c[0]))?] {
                ensure(h.is_two_cell(&s) && d.sq_inverse(&s).is_some(), || format!("{s:?}"))?;
            }
            Ok(())
        },
    );

    ax("pentagon", "bicategory pentagon").run(
        &mut report,
        budget,
        cap(u.hchain_count(4)),
        || u.hchains(4),
        |rng| u.random_hchain(4, rng),
        |c| flatten::<()>(pentagon(d, &c[0], &c[1], &c[2], &c[3])),
    );

    ax("triangle", "bicategory triangle").run(
        &mut report,
        budget,
        cap(u.hchain_count(2)),
        || u.hchains(2),
        |rng| u.random_hchain(2, rng),
        |c| flatten::<()>(triangle(d, &c[0], &c[1])),
    );
    report
}

/// The functor `H(F)`: `F` restricted to globular squares.
#[derive(Clone, Copy, Debug)]
pub struct BicatFunctor<'a, F> {
    pub functor: &'a F,
}

pub fn h_on_functor<F: DblFunctor>(f: &F) -> BicatFunctor<'_, F> {
    BicatFunctor { functor: f }
}

impl<F: DblFunctor> BicatFunctor<'_, F> {
    pub fn on_two_cell(&self, src: &F::Src, s: &SQ<F::Src>) -> Result<SQ<F::Tgt>> {
        if !src.is_globular(s) {
            return Err(CellError::frame(format!("{s:?} is not globular")));
        }
        self.functor.sq(s)
    }

    /// `flat(F leaves) => F(value tree)`, with the mapped tree.
    fn compare(&self, src: &F::Src, t: &HTreeOf<F::Src>) -> Result<(HTreeOf<F::Tgt>, SQ<F::Tgt>)> {
        let (fun, e) = (self.functor, self.functor.target());
        Ok(match t {
            HTree::Leaf(m) => {
                let fm = fun.hcell(m);
                (HTree::Leaf(fm.clone()), e.sq_id(&fm))
            }
            HTree::Unit(a) => (HTree::Unit(fun.obj(a)), fun.unit_constraint(a)?),
            HTree::Node(l, r) => {
                let (tl, cl) = self.compare(src, l)?;
                let (tr, cr) = self.compare(src, r)?;
                let k = fun.comp_constraint(&l.value(src)?, &r.value(src)?)?;
                (HTree::node(tl, tr), e.compose_v(&e.compose_h(&cl, &cr)?, &k)?)
            }
        })
    }

    /// The image of a 2-cell, with boundaries the images of the leaves
    /// composed in the same bracketing.
    pub fn map_globular(&self, src: &F::Src, g: &GlobularOf<F::Src>) -> Result<GlobularOf<F::Tgt>> {
        let e = self.functor.target();
        let (s, cs) = self.compare(src, &g.src)?;
        let (t, ct) = self.compare(src, &g.tgt)?;
        let cell = e.compose_v_all(&[cs, self.on_two_cell(src, &g.cell)?, inverse(e, &ct)?])?;
        Ok(Globular { src: s, tgt: t, cell })
    }
}

/// Globularity of images and constraints, then the pseudofunctor axioms.
pub fn verify_bicat_functor<F, S>(f: &F, u: &S, budget: &SampleBudget) -> Report
where
    F: DblFunctor,
    S: CellSource<Model = F::Src>,
{
    let d = u.model();
    let e = f.target();
    let hf = h_on_functor(f);
    let mut report = Report::new();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_FUNCTOR, name, citation };

    ax("2-cells go to 2-cells", "image of a globular square").sample(
        &mut report,
        budget,
        |rng| {
            let m = u.random_hcell(rng)?;
            random_two_cell(u, &m, rng)
        },
        |s| {
            let img = e2s(hf.on_two_cell(d, s))?;
            ensure(e.is_globular(&img), || format!("image {img:?} is not globular"))
        },
    );

    ax("constraints are globular", "constraints of a double functor").run(
        &mut report,
        budget,
        cap(u.hchain_count(2)),
        || u.hchains(2),
        |rng| u.random_hchain(2, rng),
        |c| {
            let k = e2s(f.comp_constraint(&c[0], &c[1]))?;
            let unit = e2s(f.unit_constraint(&d.hsrc(&c[0])))?;
            ensure(e.is_globular(&k) && e.is_globular(&unit), || format!("{k:?} / {unit:?}"))
        },
    );
    report.extend(verify_functor(f, u, budget));
    report
}

// ---------------------------------------------------------------------------
// Mates

/// The mate `fcheck2 => fcheck1` of `mu: fhat1 => fhat2`, for adjunctions
/// `fhat1 -| fcheck1` and `fhat2 -| fcheck2` between the same objects.
pub fn mate<D: DoubleCategory>(
    d: &D,
    adj1: &AdjunctionData<D::HCell, D::Sq>,
    adj2: &AdjunctionData<D::HCell, D::Sq>,
    mu: &D::Sq,
) -> Result<D::Sq> {
    let (eta1, _) = adjunction_cells(d, adj1);
    let (_, eps2) = adjunction_cells(d, adj2);
    let mu = Globular { src: leaf(adj1.left.clone()), tgt: leaf(adj2.left.clone()), cell: mu.clone() };
    let (end, s) = WhiskerPath::new(Word::new(d.htgt(&adj2.left), vec![adj2.right.clone()]))
        .step(1, "unit", eta1)
        .step(1, "2-cell", mu)
        .step(0, "counit", eps2)
        .eval(d)?;
    debug_assert_eq!(end.cells, vec![adj1.right.clone()]);
    Ok(s)
}

/// The inverse passage: `nu: fcheck2 => fcheck1` to `fhat1 => fhat2`.
pub fn unmate<D: DoubleCategory>(
    d: &D,
    adj1: &AdjunctionData<D::HCell, D::Sq>,
    adj2: &AdjunctionData<D::HCell, D::Sq>,
    nu: &D::Sq,
) -> Result<D::Sq> {
    let (eta2, _) = adjunction_cells(d, adj2);
    let (_, eps1) = adjunction_cells(d, adj1);
    let nu = Globular { src: leaf(adj2.right.clone()), tgt: leaf(adj1.right.clone()), cell: nu.clone() };
    let (_, s) = WhiskerPath::new(Word::new(d.hsrc(&adj1.left), vec![adj1.left.clone()]))
        .step(0, "unit", eta2)
        .step(1, "2-cell", nu)
        .step(1, "counit", eps1)
        .eval(d)?;
    Ok(s)
}

/// The modification axiom: `mu_B` followed by `second` against `first`
/// followed by `mu_A`, on the source word of `first`. The components
/// `mu` may be composites, as long as they sit at the ends of the words.
pub fn modification_axiom<D: DoubleCategory>(
    d: &D,
    first: &GlobularOf<D>,
    second: &GlobularOf<D>,
    mu_a: &GlobularOf<D>,
    mu_b: &GlobularOf<D>,
) -> Result<Check> {
    let leaves = first.src.leaves();
    let off = leaves
        .len()
        .checked_sub(mu_b.src.leaves().len())
        .ok_or_else(|| CellError::frame("component longer than the source word"))?;
    let start = Word::new(first.src.src(d), leaves);
    let lhs = WhiskerPath::new(start.clone()).step(off, "component at target", mu_b.clone()).step(0, "second", second.clone()).eval(d)?;
    let rhs = WhiskerPath::new(start).step(0, "first", first.clone()).step(0, "component at source", mu_a.clone()).eval(d)?;
    Ok(same_path(d, "modification axiom", &lhs, &rhs))
}

// ---------------------------------------------------------------------------
// Lifted transformations

type Memo<T> = Mutex<HashMap<HC<SrcOf<T>>, GlobularOf<TgtOf<T>>>>;

/// A double transformation `alpha: F => G` together with chosen companions
/// and conjoints of its components: the oplax part with 1-cells
/// `alpha^_A` and 2-cells `F M ; alpha^_B => alpha^_A ; G M`, the lax part
/// with `alphav_A ; F M => G M ; alphav_B`, and the adjunctions between them.
pub struct ConjunctionalTransformation<'a, T: DblTransformation> {
    pub transformation: &'a T,
    pub src: &'a SrcOf<T>,
    pub cert: &'a Certificate<TgtOf<T>>,
    oplax: Memo<T>,
    lax: Memo<T>,
}

pub fn lift_transformation<'a, T: DblTransformation>(
    t: &'a T,
    src: &'a SrcOf<T>,
    cert: &'a Certificate<TgtOf<T>>,
) -> ConjunctionalTransformation<'a, T> {
    ConjunctionalTransformation { transformation: t, src, cert, oplax: Default::default(), lax: Default::default() }
}

impl<T> ConjunctionalTransformation<'_, T>
where
    T: DblTransformation,
    TgtOf<T>: Fibrant,
{
    pub fn target_model(&self) -> &TgtOf<T> {
        self.transformation.source().target()
    }

    pub fn component(&self, a: &Ob<SrcOf<T>>) -> VM<TgtOf<T>> {
        self.transformation.component(a)
    }

    pub fn companion(&self, a: &Ob<SrcOf<T>>) -> Result<CompanionOf<TgtOf<T>>> {
        self.cert.companion(self.target_model(), &self.component(a))
    }

    pub fn conjoint(&self, a: &Ob<SrcOf<T>>) -> Result<ConjointOf<TgtOf<T>>> {
        self.cert.conjoint(self.target_model(), &self.component(a))
    }

    pub fn adjunction(&self, a: &Ob<SrcOf<T>>) -> Result<AdjunctionData<HC<TgtOf<T>>, SQ<TgtOf<T>>>> {
        adjunction(self.target_model(), &self.companion(a)?, &self.conjoint(a)?)
    }

    /// `up(alpha_A) | alpha_M | down(alpha_B)`.
    pub fn oplax_cell(&self, m: &HC<SrcOf<T>>) -> Result<GlobularOf<TgtOf<T>>> {
        if let Some(g) = self.oplax.lock().expect("oplax memo").get(m) {
            return Ok(g.clone());
        }
        let e = self.target_model();
        let (f, g) = (self.transformation.source(), self.transformation.target());
        let (a, b) = (self.src.hsrc(m), self.src.htgt(m));
        let (ca, cb) = (self.companion(&a)?, self.companion(&b)?);
        let cell = e.compose_h(&e.compose_h(&ca.up, &self.transformation.component_sq(m)?)?, &cb.down)?;
        let out = Globular {
            src: node(node(HTree::Unit(f.obj(&a)), leaf(f.hcell(m))), leaf(cb.fhat)),
            tgt: node(node(leaf(ca.fhat), leaf(g.hcell(m))), HTree::Unit(g.obj(&b))),
            cell,
        };
        out.check(e)?;
        self.oplax.lock().expect("oplax memo").insert(m.clone(), out.clone());
        Ok(out)
    }

    /// `down(alphav_A) | alpha_M | up(alphav_B)`.
    pub fn lax_cell(&self, m: &HC<SrcOf<T>>) -> Result<GlobularOf<TgtOf<T>>> {
        if let Some(g) = self.lax.lock().expect("lax memo").get(m) {
            return Ok(g.clone());
        }
        let e = self.target_model();
        let (f, g) = (self.transformation.source(), self.transformation.target());
        let (a, b) = (self.src.hsrc(m), self.src.htgt(m));
        let (ja, jb) = (self.conjoint(&a)?, self.conjoint(&b)?);
        let cell = e.compose_h(&e.compose_h(&ja.down, &self.transformation.component_sq(m)?)?, &jb.up)?;
        let out = Globular {
            src: node(node(leaf(ja.fhat), leaf(f.hcell(m))), HTree::Unit(f.obj(&b))),
            tgt: node(node(HTree::Unit(g.obj(&a)), leaf(g.hcell(m))), leaf(jb.fhat)),
            cell,
        };
        out.check(e)?;
        self.lax.lock().expect("lax memo").insert(m.clone(), out.clone());
        Ok(out)
    }

    /// The lax cell reconstructed from the oplax one through the
    /// adjunctions, as a flat 2-cell `[alphav_A, F M] => [G M, alphav_B]`.
    pub fn mate_of_oplax(&self, m: &HC<SrcOf<T>>) -> Result<(Word<Ob<TgtOf<T>>, HC<TgtOf<T>>>, SQ<TgtOf<T>>)> {
        let e = self.target_model();
        let (a, b) = (self.src.hsrc(m), self.src.htgt(m));
        let (eta_b, _) = adjunction_cells(e, &self.adjunction(&b)?);
        let (_, eps_a) = adjunction_cells(e, &self.adjunction(&a)?);
        let ja = self.conjoint(&a)?;
        let fm = self.transformation.source().hcell(m);
        WhiskerPath::new(Word::new(self.transformation.target().obj(&a), vec![ja.fhat, fm]))
            .step(2, "unit", eta_b)
            .step(1, "oplax cell", self.oplax_cell(m)?)
            .step(0, "counit", eps_a)
            .eval(e)
    }

    fn comp_cell(&self, m: &HC<SrcOf<T>>, n: &HC<SrcOf<T>>, of_g: bool) -> Result<GlobularOf<TgtOf<T>>> {
        let fun: &dyn Fn(&HC<SrcOf<T>>) -> HC<TgtOf<T>> = if of_g {
            &|x| self.transformation.target().hcell(x)
        } else {
            &|x| self.transformation.source().hcell(x)
        };
        let cell = if of_g {
            self.transformation.target().comp_constraint(m, n)?
        } else {
            self.transformation.source().comp_constraint(m, n)?
        };
        Ok(Globular { src: node(leaf(fun(m)), leaf(fun(n))), tgt: leaf(fun(&self.src.hcomp(m, n)?)), cell })
    }

    fn unit_cell(&self, a: &Ob<SrcOf<T>>, of_g: bool) -> Result<GlobularOf<TgtOf<T>>> {
        let u = self.src.hunit(a);
        Ok(if of_g {
            let g = self.transformation.target();
            Globular { src: HTree::Unit(g.obj(a)), tgt: leaf(g.hcell(&u)), cell: g.unit_constraint(a)? }
        } else {
            let f = self.transformation.source();
            Globular { src: HTree::Unit(f.obj(a)), tgt: leaf(f.hcell(&u)), cell: f.unit_constraint(a)? }
        })
    }

    fn oplax_composition(&self, m: &HC<SrcOf<T>>, n: &HC<SrcOf<T>>) -> Result<Check> {
        let e = self.target_model();
        let mn = self.src.hcomp(m, n)?;
        let a = self.src.hsrc(m);
        let c = self.src.htgt(n);
        let start = Word::new(self.transformation.source().obj(&a), vec![self.transformation.source().hcell(&mn), self.companion(&c)?.fhat]);
        let lhs = WhiskerPath::new(start.clone()).step(0, "oplax cell of composite", self.oplax_cell(&mn)?).eval(e)?;
        let rhs = WhiskerPath::new(start)
            .step(0, "source constraint inverse", self.comp_cell(m, n, false)?.inverse(e)?)
            .step(1, "oplax cell", self.oplax_cell(n)?)
            .step(0, "oplax cell", self.oplax_cell(m)?)
            .step(1, "target constraint", self.comp_cell(m, n, true)?)
            .eval(e)?;
        Ok(same_path(e, "oplax composition", &lhs, &rhs))
    }

    fn oplax_unit(&self, a: &Ob<SrcOf<T>>) -> Result<Check> {
        let e = self.target_model();
        let u = self.src.hunit(a);
        let start = Word::new(self.transformation.source().obj(a), vec![self.transformation.source().hcell(&u), self.companion(a)?.fhat]);
        let lhs = WhiskerPath::new(start.clone()).step(0, "oplax cell of unit", self.oplax_cell(&u)?).eval(e)?;
        let rhs = WhiskerPath::new(start)
            .step(0, "source unit inverse", self.unit_cell(a, false)?.inverse(e)?)
            .step(1, "target unit", self.unit_cell(a, true)?)
            .eval(e)?;
        Ok(same_path(e, "oplax unit", &lhs, &rhs))
    }

    fn lax_composition(&self, m: &HC<SrcOf<T>>, n: &HC<SrcOf<T>>) -> Result<Check> {
        let e = self.target_model();
        let mn = self.src.hcomp(m, n)?;
        let a = self.src.hsrc(m);
        let start = Word::new(self.transformation.target().obj(&a), vec![self.conjoint(&a)?.fhat, self.transformation.source().hcell(&mn)]);
        let lhs = WhiskerPath::new(start.clone()).step(0, "lax cell of composite", self.lax_cell(&mn)?).eval(e)?;
        let rhs = WhiskerPath::new(start)
            .step(1, "source constraint inverse", self.comp_cell(m, n, false)?.inverse(e)?)
            .step(0, "lax cell", self.lax_cell(m)?)
            .step(1, "lax cell", self.lax_cell(n)?)
            .step(0, "target constraint", self.comp_cell(m, n, true)?)
            .eval(e)?;
        Ok(same_path(e, "lax composition", &lhs, &rhs))
    }

    fn lax_unit(&self, a: &Ob<SrcOf<T>>) -> Result<Check> {
        let e = self.target_model();
        let u = self.src.hunit(a);
        let start = Word::new(self.transformation.target().obj(a), vec![self.conjoint(a)?.fhat, self.transformation.source().hcell(&u)]);
        let lhs = WhiskerPath::new(start.clone()).step(0, "lax cell of unit", self.lax_cell(&u)?).eval(e)?;
        let rhs = WhiskerPath::new(start)
            .step(1, "source unit inverse", self.unit_cell(a, false)?.inverse(e)?)
            .step(0, "target unit", self.unit_cell(a, true)?)
            .eval(e)?;
        Ok(same_path(e, "lax unit", &lhs, &rhs))
    }

    fn conjunction(&self, m: &HC<SrcOf<T>>) -> Result<Check> {
        let e = self.target_model();
        let mated = self.mate_of_oplax(m)?;
        let stored = flat(e, &self.lax_cell(m)?)?;
        Ok(same_path(e, "mate of the oplax cell", &mated, &stored))
    }

    fn invertible_at(&self, a: &Ob<SrcOf<T>>) -> bool {
        self.target_model().vinverse(&self.component(a)).is_some()
    }
}

fn hcells<S: CellSource>(u: &S) -> Vec<HC<S::Model>> {
    u.hchains(1).into_iter().map(|mut c| c.remove(0)).collect()
}

/// The oplax and lax transformation axioms, the conjunction squares, the
/// adjunction triangles, and pseudo-ness when the components are
/// invertible.
pub fn verify_conjunctional<T, S>(ct: &ConjunctionalTransformation<'_, T>, u: &S, budget: &SampleBudget) -> Report
where
    T: DblTransformation,
    TgtOf<T>: Fibrant,
    S: CellSource<Model = SrcOf<T>>,
{
    let mut report = Report::new();
    let e = ct.target_model();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_CONJUNCTIONAL, name, citation };
    let n1 = cap(u.hchain_count(1));
    let n2 = cap(u.hchain_count(2));
    let objs = u.objects();
    let nobj = Some(objs.len() as u64);

    ax("oplax: composition", "oplax transformation axiom for composites").run(
        &mut report,
        budget,
        n2,
        || u.hchains(2),
        |rng| u.random_hchain(2, rng),
        |c| flatten::<()>(ct.oplax_composition(&c[0], &c[1])),
    );
    ax("oplax: units", "oplax transformation axiom for units").run(
        &mut report,
        budget,
        nobj,
        || objs.clone(),
        |rng| Some(u.random_object(rng)),
        |a| flatten::<()>(ct.oplax_unit(a)),
    );
    ax("lax: composition", "lax transformation axiom for composites").run(
        &mut report,
        budget,
        n2,
        || u.hchains(2),
        |rng| u.random_hchain(2, rng),
        |c| flatten::<()>(ct.lax_composition(&c[0], &c[1])),
    );
    ax("lax: units", "lax transformation axiom for units").run(
        &mut report,
        budget,
        nobj,
        || objs.clone(),
        |rng| Some(u.random_object(rng)),
        |a| flatten::<()>(ct.lax_unit(a)),
    );
    ax("conjunction: the lax cell is the mate of the oplax cell", "conjunctional transformation").run(
        &mut report,
        budget,
        n1,
        || hcells(u),
        |rng| u.random_hcell(rng),
        |m| flatten::<()>(ct.conjunction(m)),
    );
    ax("adjunction triangles", "companion-conjoint adjunction").run(
        &mut report,
        budget,
        nobj,
        || objs.clone(),
        |rng| Some(u.random_object(rng)),
        |a| {
            let (l, r) = e2s(triangle_identities(e, &e2s(ct.adjunction(a))?))?;
            l.and(r)
        },
    );
    ax("pseudo when invertible", "invertible transformations lift to adjoint equivalences").run(
        &mut report,
        budget,
        n1,
        || hcells(u),
        |rng| u.random_hcell(rng),
        |m| {
            let (a, b) = (ct.src.hsrc(m), ct.src.htgt(m));
            if !(ct.invertible_at(&a) && ct.invertible_at(&b)) {
                return Ok(());
            }
            for g in [e2s(ct.oplax_cell(m))?, e2s(ct.lax_cell(m))?] {
                ensure(e.sq_inverse(&g.cell).is_some(), || format!("{:?} is not invertible", g.cell))?;
            }
            for x in [&a, &b] {
                let adj = e2s(ct.adjunction(x))?;
                ensure(e.sq_inverse(&adj.unit).is_some() && e.sq_inverse(&adj.counit).is_some(), || {
                    "unit or counit not invertible".into()
                })?;
            }
            Ok(())
        },
    );
    report
}

/// Identification of the oplax cell at a companion: `alpha^`
/// at `fhat` is the comparison between the two companions of
/// `F f ; alpha_B = alpha_A ; G f`. Returns that comparison and the check.
pub fn oplax_cell_is_theta<T>(
    ct: &ConjunctionalTransformation<'_, T>,
    c: &CompanionOf<SrcOf<T>>,
) -> Result<(SQ<TgtOf<T>>, Check)>
where
    T: DblTransformation,
    TgtOf<T>: Fibrant,
{
    let e = ct.target_model();
    let (f, g) = (ct.transformation.source(), ct.transformation.target());
    let (a, b) = (ct.src.vsrc(&c.f), ct.src.vtgt(&c.f));
    let (ca, cb) = (ct.companion(&a)?, ct.companion(&b)?);
    let lhs_c = compose_companions(e, &map_companion(f, ct.src, c)?, &cb)?;
    let rhs_c = compose_companions(e, &ca, &map_companion(g, ct.src, c)?)?;
    let th = theta(e, &lhs_c, &rhs_c)?;
    let th_g = Globular { src: node(leaf(f.hcell(&c.fhat)), leaf(cb.fhat)), tgt: node(leaf(ca.fhat), leaf(g.hcell(&c.fhat))), cell: th.clone() };
    let lhs = flat(e, &ct.oplax_cell(&c.fhat)?)?;
    let rhs = flat(e, &th_g)?;
    Ok((th, same_path(e, "oplax cell at a companion", &lhs, &rhs)))
}

// ---------------------------------------------------------------------------
// Comparison of two choices

/// The same transformation lifted with two certificates, related by the
/// comparisons `theta: alpha^_A => alpha^'_A`.
pub struct ChoiceComparison<'a, T: DblTransformation> {
    pub first: ConjunctionalTransformation<'a, T>,
    pub second: ConjunctionalTransformation<'a, T>,
}

pub fn choice_comparison<'a, T: DblTransformation>(
    t: &'a T,
    src: &'a SrcOf<T>,
    first: &'a Certificate<TgtOf<T>>,
    second: &'a Certificate<TgtOf<T>>,
) -> ChoiceComparison<'a, T> {
    ChoiceComparison { first: lift_transformation(t, src, first), second: lift_transformation(t, src, second) }
}

impl<T> ChoiceComparison<'_, T>
where
    T: DblTransformation,
    TgtOf<T>: Fibrant,
{
    pub fn component(&self, a: &Ob<SrcOf<T>>) -> Result<GlobularOf<TgtOf<T>>> {
        let e = self.first.target_model();
        let (c1, c2) = (self.first.companion(a)?, self.second.companion(a)?);
        Ok(Globular { src: leaf(c1.fhat.clone()), tgt: leaf(c2.fhat.clone()), cell: theta(e, &c1, &c2)? })
    }

    /// The comparison of the conjoints, in the reverse direction.
    pub fn conjoint_component(&self, a: &Ob<SrcOf<T>>) -> Result<SQ<TgtOf<T>>> {
        let e = self.first.target_model();
        theta(&HOp(e), &self.second.conjoint(a)?, &self.first.conjoint(a)?)
    }
}

/// Components are comparisons of companions, their mates are the
/// comparisons of conjoints, mating twice is the identity, and the
/// modification axiom holds.
pub fn verify_choice_comparison<T, S>(cmp: &ChoiceComparison<'_, T>, u: &S, budget: &SampleBudget) -> Report
where
    T: DblTransformation,
    TgtOf<T>: Fibrant,
    S: CellSource<Model = SrcOf<T>>,
{
    let mut report = Report::new();
    let e = cmp.first.target_model();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_COMPARISON, name, citation };
    let objs = u.objects();
    let nobj = Some(objs.len() as u64);

    ax("components are comparison isomorphisms", "comparison of chosen companions").run(
        &mut report,
        budget,
        nobj,
        || objs.clone(),
        |rng| Some(u.random_object(rng)),
        |a| {
            let (c1, c2) = (e2s(cmp.first.companion(a))?, e2s(cmp.second.companion(a))?);
            let t = e2s(cmp.component(a))?.cell;
            ensure(e2s(theta_conditions(e, &c1, &c2, &t))?, || "comparison conditions fail".into())?;
            ensure(e.sq_inverse(&t).is_some(), || "comparison not invertible".into())
        },
    );

    ax("mates of components", "the mate of a comparison is determined").run(
        &mut report,
        budget,
        nobj,
        || objs.clone(),
        |rng| Some(u.random_object(rng)),
        |a| {
            let (adj1, adj2) = (e2s(cmp.first.adjunction(a))?, e2s(cmp.second.adjunction(a))?);
            let t = e2s(cmp.component(a))?.cell;
            let m = e2s(mate(e, &adj1, &adj2, &t))?;
            same(e, "mate vs conjoint comparison", &m, &e2s(cmp.conjoint_component(a))?)?;
            same(e, "double mate", &e2s(unmate(e, &adj1, &adj2, &m))?, &t)
        },
    );

    ax("modification axiom", "modification between oplax transformations").run(
        &mut report,
        budget,
        cap(u.hchain_count(1)),
        || hcells(u),
        |rng| u.random_hcell(rng),
        |m| {
            let (a, b) = (cmp.first.src.hsrc(m), cmp.first.src.htgt(m));
            flatten::<()>(modification_axiom(
                e,
                &e2s(cmp.first.oplax_cell(m))?,
                &e2s(cmp.second.oplax_cell(m))?,
                &e2s(cmp.component(&a))?,
                &e2s(cmp.component(&b))?,
            ))
        },
    );
    report
}

// ---------------------------------------------------------------------------
// The local functor on transformations

/// `fhat ; ghat => (f;g)^` between chosen companions.
pub fn composition_constraint<D: Fibrant>(d: &D, cert: &Certificate<D>, f: &D::VMor, g: &D::VMor) -> Result<GlobularOf<D>> {
    let (cf, cg) = (cert.companion(d, f)?, cert.companion(d, g)?);
    let cfg = cert.companion(d, &d.vcomp(f, g)?)?;
    let cell = theta(d, &compose_companions(d, &cf, &cg)?, &cfg)?;
    Ok(Globular { src: node(leaf(cf.fhat), leaf(cg.fhat)), tgt: leaf(cfg.fhat), cell })
}

/// `(1_A)^ => U_A`.
pub fn unit_constraint<D: Fibrant>(d: &D, cert: &Certificate<D>, a: &D::Obj) -> Result<GlobularOf<D>> {
    let c = cert.companion(d, &d.vid(a))?;
    let cell = theta(d, &c, &companion_of_identity(d, a))?;
    Ok(Globular { src: leaf(c.fhat), tgt: HTree::Unit(a.clone()), cell })
}

/// Associativity and unit laws of the composition and unit constraints.
pub fn verify_local_functor<D: Fibrant + Enumerable>(d: &D, cert: &Certificate<D>, budget: &SampleBudget) -> Report {
    let u = Universe::new(d);
    let mut report = Report::new();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_LOCAL, name, citation };

    ax("associativity of the composition constraint", "pseudofunctor associativity").run(
        &mut report,
        budget,
        cap(u.vchain_count(3)),
        || u.vchains(3),
        |rng| u.random_vchain(3, rng),
        |c| {
            let (f, g, h) = (&c[0], &c[1], &c[2]);
            let fg = e2s(d.vcomp(f, g))?;
            let gh = e2s(d.vcomp(g, h))?;
            let hats: Vec<_> = e2s(c.iter().map(|x| cert.companion(d, x).map(|c| c.fhat)).collect::<Result<_>>())?;
            let start = Word::new(d.vsrc(f), hats);
            let lhs = e2s(WhiskerPath::new(start.clone())
                .step(0, "chi(f,g)", e2s(composition_constraint(d, cert, f, g))?)
                .step(0, "chi(fg,h)", e2s(composition_constraint(d, cert, &fg, h))?)
                .eval(d))?;
            let rhs = e2s(WhiskerPath::new(start)
                .step(1, "chi(g,h)", e2s(composition_constraint(d, cert, g, h))?)
                .step(0, "chi(f,gh)", e2s(composition_constraint(d, cert, f, &gh))?)
                .eval(d))?;
            same_path(d, "associativity", &lhs, &rhs)
        },
    );

    ax("unit laws of the constraints", "pseudofunctor unit laws").run(
        &mut report,
        budget,
        cap(u.vchain_count(1)),
        || u.vchains(1),
        |rng| u.random_vchain(1, rng),
        |c| {
            let f = &c[0];
            let (a, b) = (d.vsrc(f), d.vtgt(f));
            let fh = e2s(cert.companion(d, f))?.fhat;
            let ia = e2s(cert.companion(d, &d.vid(&a)))?.fhat;
            let ib = e2s(cert.companion(d, &d.vid(&b)))?.fhat;
            let start = Word::new(a.clone(), vec![ia, fh.clone()]);
            let l1 = e2s(WhiskerPath::new(start.clone())
                .step(0, "chi(1,f)", e2s(composition_constraint(d, cert, &d.vid(&a), f))?)
                .eval(d))?;
            let l2 = e2s(WhiskerPath::new(start).step(0, "iota", e2s(unit_constraint(d, cert, &a))?).eval(d))?;
            same_path(d, "left unit", &l1, &l2)?;
            let start = Word::new(a, vec![fh, ib]);
            let r1 = e2s(WhiskerPath::new(start.clone())
                .step(0, "chi(f,1)", e2s(composition_constraint(d, cert, f, &d.vid(&b)))?)
                .eval(d))?;
            let r2 = e2s(WhiskerPath::new(start).step(1, "iota", e2s(unit_constraint(d, cert, &b))?).eval(d))?;
            same_path(d, "right unit", &r1, &r2)
        },
    );
    report
}

/// The composition constraint at `alpha ; beta` is a modification from the
/// composite of the lifts to the lift of the composite.
pub fn verify_vertical_composite<A, B, S>(
    comp: &VComposite<A, B>,
    src: &SrcOf<A>,
    cert: &Certificate<TgtOf<A>>,
    u: &S,
    budget: &SampleBudget,
) -> Report
where
    A: DblTransformation,
    B: DblTransformation<F = A::G>,
    TgtOf<A>: Fibrant,
    S: CellSource<Model = SrcOf<A>>,
{
    let mut report = Report::new();
    let la = lift_transformation(&comp.first, src, cert);
    let lb = lift_transformation(&comp.second, src, cert);
    let lc = lift_transformation(comp, src, cert);
    let e = la.target_model();
    let chi = |a: &Ob<SrcOf<A>>| composition_constraint(e, cert, &comp.first.component(a), &comp.second.component(a));
    Axiom { group: GROUP_LOCAL, name: "composition constraint is a modification", citation: "modification axiom" }.run(
        &mut report,
        budget,
        cap(u.hchain_count(1)),
        || hcells(u),
        |rng| u.random_hcell(rng),
        |m| {
            let (a, b) = (src.hsrc(m), src.htgt(m));
            let f = comp.first.source();
            let start = Word::new(f.obj(&a), vec![f.hcell(m), e2s(la.companion(&b))?.fhat, e2s(lb.companion(&b))?.fhat]);
            let first = e2s(path_globular(
                e,
                &WhiskerPath::new(start).step(0, "first", e2s(la.oplax_cell(m))?).step(1, "second", e2s(lb.oplax_cell(m))?),
            ))?;
            flatten::<()>(modification_axiom(e, &first, &e2s(lc.oplax_cell(m))?, &e2s(chi(&a))?, &e2s(chi(&b))?))
        },
    );
    report
}

// ---------------------------------------------------------------------------
// Whiskering

/// `chi_A: beta^_(G A) . H(alpha^_A) => (beta * alpha)^_A`, in diagrammatic
/// order `[H alpha^_A, beta^_(G A)] => (beta * alpha)^_A`.
pub fn chi<A, B>(
    w: &Whiskered<A, B>,
    mid_cert: &Certificate<TgtOf<A>>,
    cert: &Certificate<TgtOf<B>>,
    a: &Ob<SrcOf<A>>,
) -> Result<GlobularOf<TgtOf<B>>>
where
    A: DblTransformation,
    B: DblTransformation,
    B::F: DblFunctor<Src = TgtOf<A>>,
    B::G: DblFunctor<Src = TgtOf<A>>,
    TgtOf<A>: Fibrant,
    TgtOf<B>: Fibrant,
{
    let h = w.beta.source();
    let (mid, e) = (h_src(w), h.target());
    let ca = mid_cert.companion(mid, &w.alpha.component(a))?;
    let hca = map_companion(h, mid, &ca)?;
    let cb = cert.companion(e, &w.beta.component(&w.alpha.target().obj(a)))?;
    let whole = cert.companion(e, &w.component(a))?;
    let cell = theta(e, &compose_companions(e, &hca, &cb)?, &whole)?;
    Ok(Globular { src: node(leaf(hca.fhat), leaf(cb.fhat)), tgt: leaf(whole.fhat), cell })
}

fn h_src<A, B>(w: &Whiskered<A, B>) -> &TgtOf<A>
where
    A: DblTransformation,
    B: DblTransformation,
{
    w.alpha.source().target()
}

/// `chi` is a modification `beta^ * alpha^ => (beta * alpha)^`; the
/// comparison `iota: (1_F)^ => 1_(H F)` is a modification; and at an
/// identity `alpha`, `chi` is the image of `iota` under `H`.
pub fn verify_chi_iota<A, B, S>(
    w: &Whiskered<A, B>,
    src: &SrcOf<A>,
    mid_cert: &Certificate<TgtOf<A>>,
    cert: &Certificate<TgtOf<B>>,
    u: &S,
    budget: &SampleBudget,
) -> Report
where
    A: DblTransformation,
    A::F: Clone,
    B: DblTransformation,
    B::F: DblFunctor<Src = TgtOf<A>>,
    B::G: DblFunctor<Src = TgtOf<A>>,
    TgtOf<A>: Fibrant,
    TgtOf<B>: Fibrant,
    S: CellSource<Model = SrcOf<A>>,
{
    let mut report = Report::new();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_WHISKER, name, citation };
    let (h, mid) = (w.beta.source(), h_src(w));
    let e = h.target();
    let hh = h_on_functor(h);
    let la = lift_transformation(&w.alpha, src, mid_cert);
    let lb = lift_transformation(&w.beta, mid, cert);
    let lw = lift_transformation(w, src, cert);
    let n1 = cap(u.hchain_count(1));

    ax("chi is a modification", "comparison for whiskered transformations").run(
        &mut report,
        budget,
        n1,
        || hcells(u),
        |rng| u.random_hcell(rng),
        |m| {
            let (a, b) = (src.hsrc(m), src.htgt(m));
            let gm = w.alpha.target().hcell(m);
            let hfm = w.source().hcell(m);
            let hab = e2s(map_companion(h, mid, &e2s(la.companion(&b))?))?.fhat;
            let bgb = e2s(lb.companion(&w.alpha.target().obj(&b)))?.fhat;
            let start = Word::new(w.source().obj(&a), vec![hfm, hab, bgb]);
            let image = e2s(hh.map_globular(mid, &e2s(la.oplax_cell(m))?))?;
            let first = e2s(path_globular(
                e,
                &WhiskerPath::new(start).step(0, "image of the inner cell", image).step(1, "outer cell", e2s(lb.oplax_cell(&gm))?),
            ))?;
            flatten::<()>(modification_axiom(
                e,
                &first,
                &e2s(lw.oplax_cell(m))?,
                &e2s(chi(w, mid_cert, cert, &a))?,
                &e2s(chi(w, mid_cert, cert, &b))?,
            ))
        },
    );

    let id = IdentityTransformation(w.alpha.source().clone());
    let li = lift_transformation(&id, src, mid_cert);
    ax("iota is a modification", "comparison for identity transformations").run(
        &mut report,
        budget,
        n1,
        || hcells(u),
        |rng| u.random_hcell(rng),
        |m| {
            let (a, b) = (src.hsrc(m), src.htgt(m));
            let f = w.alpha.source();
            let fa = f.obj(&a);
            let iota = |x: &Ob<SrcOf<A>>| unit_constraint(mid, mid_cert, &f.obj(x));
            let ident = e2s(Globular::identity(mid, leaf(f.hcell(m))))?;
            flatten::<()>(modification_axiom(mid, &e2s(li.oplax_cell(m))?, &ident, &e2s(iota(&a))?, &e2s(iota(&b))?))
                .map_err(|err| format!("{err} (at {fa:?})"))
        },
    );

    let objs = u.objects();
    ax("chi at an identity is the image of iota", "unit compatibility of the comparisons").run(
        &mut report,
        budget,
        Some(objs.len() as u64),
        || objs.clone(),
        |rng| Some(u.random_object(rng)),
        |a| {
            let x = w.alpha.target().obj(a);
            let one = e2s(mid_cert.companion(mid, &mid.vid(&x)))?;
            let h1 = e2s(map_companion(h, mid, &one))?;
            let cb = e2s(lb.companion(&x))?;
            let th = e2s(theta(e, &e2s(compose_companions(e, &h1, &cb))?, &cb))?;
            let chi_g = Globular { src: node(leaf(h1.fhat.clone()), leaf(cb.fhat.clone())), tgt: leaf(cb.fhat.clone()), cell: th };
            let img = e2s(hh.map_globular(mid, &e2s(unit_constraint(mid, mid_cert, &x))?))?;
            let start = Word::new(h.obj(&x), vec![h1.fhat, cb.fhat]);
            let lhs = e2s(WhiskerPath::new(start.clone()).step(0, "chi", chi_g).eval(e))?;
            let rhs = e2s(WhiskerPath::new(start).step(0, "image of iota", img).eval(e))?;
            same_path(e, "unit compatibility", &lhs, &rhs)
        },
    );
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::companions::{certify_fibrant, span_reversal};
    use crate::finset::FinSet;
    use crate::functor::{tensor_with, BraidWith, Braiding, Identity};
    use crate::models::{ProductModel, RelModel, SpanModel};
    use crate::universe::ProductSource;

    fn budget() -> SampleBudget {
        SampleBudget::new(40, 3)
    }

    fn assert_passes(r: &Report) {
        assert!(r.passed(), "{:#?}", r.failures().collect::<Vec<_>>());
        for res in &r.results {
            assert!(res.instances > 0, "{} ran on nothing", res.name);
        }
    }

    #[test]
    fn rel_two_cells_are_containments() {
        let d = RelModel::new(2);
        let h = horizontal_bicategory(&d);
        let u = Universe::new(&d);
        let cells = u.all_hcells();
        for m in &cells {
            for n in &cells {
                if m.src != n.src || m.tgt != n.tgt {
                    continue;
                }
                let contained = m.pairs.iter().all(|&(a, b)| n.contains(a, b));
                assert_eq!(h.two_cells(m, n).len(), usize::from(contained), "{m:?} => {n:?}");
            }
        }
    }

    #[test]
    fn span_bicategory_axioms() {
        let d = SpanModel::new(2, 2);
        assert_passes(&verify_horizontal_bicategory(&Universe::new(&d), &budget()));
    }

    #[test]
    fn tensoring_with_an_object_is_a_functor_of_bicategories() {
        let d = SpanModel::new(2, 2);
        let f = tensor_with(&d, FinSet::atom(2), false);
        assert_passes(&verify_bicat_functor(&f, &Universe::new(&d), &budget()));
    }

    #[test]
    fn identity_transformation_lifts_to_units_up_to_comparison() {
        let d = SpanModel::new(2, 2);
        let cert = certify_fibrant(&d, false).unwrap();
        let id = IdentityTransformation(Identity(d.clone()));
        let ct = lift_transformation(&id, &d, &cert);
        let u = Universe::new(&d);
        assert_passes(&verify_conjunctional(&ct, &u, &budget()));
        for a in u.objects() {
            let c = ct.companion(&a).unwrap();
            assert_eq!(c.fhat, d.hunit(&a));
        }
    }

    #[test]
    fn span_braiding_lifts_to_an_adjoint_equivalence() {
        let d = SpanModel::new(2, 1);
        let cert = certify_fibrant(&d, false).unwrap();
        let t = Braiding::new(d.clone());
        let pair = ProductModel(d.clone(), d.clone());
        let ct = lift_transformation(&t, &pair, &cert);
        let u = ProductSource::new(Universe::new(&d), Universe::new(&d));
        assert_passes(&verify_conjunctional(&ct, &u, &SampleBudget::new(25, 5)));
    }

    #[test]
    fn oplax_cell_at_a_companion_is_a_comparison() {
        let d = SpanModel::new(2, 2);
        let cert = certify_fibrant(&d, false).unwrap();
        let t = BraidWith::new(d.clone(), FinSet::atom(2));
        let ct = lift_transformation(&t, &d, &cert);
        for f in Universe::new(&d).all_vmors() {
            let c = cert.companion(&d, &f).unwrap();
            let (_, check) = oplax_cell_is_theta(&ct, &c).unwrap();
            check.unwrap();
        }
    }

    fn twisted(d: &SpanModel) -> (Certificate<SpanModel>, Certificate<SpanModel>) {
        let c1 = certify_fibrant(d, false).unwrap();
        let c2 = c1.twisted(d, span_reversal).unwrap();
        (c1, c2)
    }

    #[test]
    fn reversed_choices_are_compared_by_modifications() {
        let d = SpanModel::new(2, 2);
        let (c1, c2) = twisted(&d);
        let t = BraidWith::new(d.clone(), FinSet::atom(2));
        let cmp = choice_comparison(&t, &d, &c1, &c2);
        assert_passes(&verify_choice_comparison(&cmp, &Universe::new(&d), &budget()));
    }

    #[test]
    fn mates_of_identities_and_composites() {
        let d = SpanModel::new(2, 2);
        let (c1, c2) = twisted(&d);
        let c3 = c1.clone();
        for f in Universe::new(&d).all_vmors() {
            let adj = |c: &Certificate<SpanModel>| adjunction(&d, &c.companion(&d, &f).unwrap(), &c.conjoint(&d, &f).unwrap()).unwrap();
            let (a1, a2, a3) = (adj(&c1), adj(&c2), adj(&c3));
            let id = d.sq_id(&a1.left);
            assert!(d.sq_eq(&mate(&d, &a1, &a1, &id).unwrap(), &d.sq_id(&a1.right)));
            let t12 = theta(&d, &c1.companion(&d, &f).unwrap(), &c2.companion(&d, &f).unwrap()).unwrap();
            let t23 = theta(&d, &c2.companion(&d, &f).unwrap(), &c3.companion(&d, &f).unwrap()).unwrap();
            let whole = mate(&d, &a1, &a3, &d.compose_v(&t12, &t23).unwrap()).unwrap();
            let parts = d.compose_v(&mate(&d, &a2, &a3, &t23).unwrap(), &mate(&d, &a1, &a2, &t12).unwrap()).unwrap();
            assert!(d.sq_eq(&whole, &parts), "mates do not compose at {f:?}");
        }
    }

    #[test]
    fn local_functor_constraints_are_coherent() {
        let d = SpanModel::new(2, 2);
        let (_, c2) = twisted(&d);
        assert_passes(&verify_local_functor(&d, &c2, &budget()));
    }

    #[test]
    fn braiding_then_its_inverse() {
        let d = SpanModel::new(2, 2);
        let cert = certify_fibrant(&d, false).unwrap();
        let x = FinSet::atom(2);
        let comp = VComposite { first: BraidWith::new(d.clone(), x.clone()), second: UnbraidWith::new(d.clone(), x) };
        assert_passes(&verify_vertical_composite(&comp, &d, &cert, &Universe::new(&d), &budget()));
    }

    #[test]
    fn whiskered_braidings() {
        let d = SpanModel::new(2, 1);
        let cert = certify_fibrant(&d, false).unwrap();
        let w = Whiskered::new(BraidWith::new(d.clone(), FinSet::atom(2)), BraidWith::new(d.clone(), FinSet::atom(1)));
        assert_passes(&verify_chi_iota(&w, &d, &cert, &cert, &Universe::new(&d), &SampleBudget::new(20, 2)));
    }

    /// Identity components, reversing every two-element apex where that is
    /// a square: not compatible with composition.
    struct Shuffle(Identity<SpanModel>);

    impl DblTransformation for Shuffle {
        type F = Identity<SpanModel>;
        type G = Identity<SpanModel>;
        fn source(&self) -> &Self::F {
            &self.0
        }
        fn target(&self) -> &Self::G {
            &self.0
        }
        fn component(&self, a: &FinSet) -> crate::finset::Func {
            self.0 .0.vid(a)
        }
        fn component_sq(&self, m: &crate::models::Span) -> Result<crate::models::SpanSquare> {
            let d = &self.0 .0;
            if m.size() != 2 {
                return Ok(d.sq_id(m));
            }
            Ok(d.square(d.globular_frame(m, m), vec![1, 0]).unwrap_or_else(|_| d.sq_id(m)))
        }
    }

    #[test]
    fn unnatural_family_breaks_the_oplax_axioms() {
        let d = SpanModel::new(1, 2);
        let cert = certify_fibrant(&d, false).unwrap();
        let t = Shuffle(Identity(d.clone()));
        let ct = lift_transformation(&t, &d, &cert);
        let r = verify_conjunctional(&ct, &Universe::new(&d), &budget());
        let bad: Vec<_> = r.failures().map(|f| f.name.as_str()).collect();
        assert!(bad.contains(&"oplax: composition"), "{bad:?}");
        assert!(r.get("oplax: composition").unwrap().counterexample.is_some());
    }

    /// `x (.) - => - (.) x`, the inverse of braiding past `x` in Span.
    #[derive(Clone)]
    struct UnbraidWith {
        f: crate::functor::TensorWith<SpanModel>,
        g: crate::functor::TensorWith<SpanModel>,
    }

    impl UnbraidWith {
        fn new(d: SpanModel, x: FinSet) -> Self {
            UnbraidWith { f: tensor_with(&d, x.clone(), true), g: tensor_with(&d, x, false) }
        }
    }

    impl DblTransformation for UnbraidWith {
        type F = crate::functor::TensorWith<SpanModel>;
        type G = crate::functor::TensorWith<SpanModel>;
        fn source(&self) -> &Self::F {
            &self.f
        }
        fn target(&self) -> &Self::G {
            &self.g
        }
        fn component(&self, a: &FinSet) -> crate::finset::Func {
            use crate::monoidal::Braided;
            self.f.second.d.braid_vmor(&self.f.first.x, a)
        }
        fn component_sq(&self, m: &crate::models::Span) -> Result<crate::models::SpanSquare> {
            use crate::monoidal::Braided;
            let d = &self.f.second.d;
            d.braid_sq(&d.hunit(&self.f.first.x), m)
        }
    }
}
