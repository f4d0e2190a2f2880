//! Companions and conjoints, the comparison isomorphisms between
//! companions of the same vertical morphism, and the constructions that
//! build new companions from old ones.
//!
//! For `f: A -> B` a companion is a 1-cell `fhat: A -|-> B` with squares
//!
//! ```text
//!   down:  fhat => U_B  with sides (f, 1_B)
//!   up:    U_A  => fhat with sides (1_A, f)
//! ```
//!
//! such that `up` over `down` is `U_f` and `up` beside `down` is the
//! identity of `fhat` up to unit constraints. A conjoint of `f` is a
//! companion of `f` in [`HOp`]; it is stored with the same squares, read
//! in the reversed model.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::cell::{DoubleCategory, Enumerable, Frame, FrameOf};
use crate::error::{CellError, Result};
use crate::functor::{DblFunctor, SQ};
use crate::htree::{canonical_constraint, HTree};
use crate::models::{
    GradedModel, HOp, RelModel, RelSquare, Relation, Span, SpanModel, SpanSquare, TableModel, VId,
};
use crate::monoidal::Monoidal;
use crate::pasting::{Globular, WhiskerPath, Word};
use crate::report::Report;
use crate::verify::{same, Check};

pub const GROUP: &str = "companions";

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CompanionPair<V, H, S> {
    pub f: V,
    pub fhat: H,
    pub down: S,
    pub up: S,
}

impl<V: fmt::Debug, H: fmt::Debug, S: fmt::Debug> fmt::Debug for CompanionPair<V, H, S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "companion of {:?}: {:?} (down {:?}, up {:?})", self.f, self.fhat, self.down, self.up)
    }
}

pub type CompanionOf<D> =
    CompanionPair<<D as DoubleCategory>::VMor, <D as DoubleCategory>::HCell, <D as DoubleCategory>::Sq>;

/// A conjoint: a companion in the horizontally reversed model.
pub type ConjointPair<V, H, S> = CompanionPair<V, H, S>;
pub type ConjointOf<D> = CompanionOf<D>;

/// `left -| right` in the horizontal bicategory, with
/// `unit: U_A => left;right` and `counit: right;left => U_B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjunctionData<H, S> {
    pub left: H,
    pub right: H,
    pub unit: S,
    pub counit: S,
}

pub fn down_frame<D: DoubleCategory>(d: &D, f: &D::VMor, fhat: &D::HCell) -> FrameOf<D> {
    let b = d.vtgt(f);
    Frame { top: fhat.clone(), left: f.clone(), right: d.vid(&b), bottom: d.hunit(&b) }
}

pub fn up_frame<D: DoubleCategory>(d: &D, f: &D::VMor, fhat: &D::HCell) -> FrameOf<D> {
    let a = d.vsrc(f);
    Frame { top: d.hunit(&a), left: d.vid(&a), right: f.clone(), bottom: fhat.clone() }
}

fn check_frame<D: DoubleCategory>(d: &D, what: &str, s: &D::Sq, want: FrameOf<D>) -> Result<()> {
    let got = d.frame(s);
    if got != want {
        return Err(CellError::frame(format!("{what} square has frame {got:?}, expected {want:?}")).at(what));
    }
    Ok(())
}

pub fn check_frames<D: DoubleCategory>(d: &D, c: &CompanionOf<D>) -> Result<()> {
    if d.hsrc(&c.fhat) != d.vsrc(&c.f) || d.htgt(&c.fhat) != d.vtgt(&c.f) {
        return Err(CellError::frame(format!("{:?} does not span the ends of {:?}", c.fhat, c.f)));
    }
    check_frame(d, "down", &c.down, down_frame(d, &c.f, &c.fhat))?;
    check_frame(d, "up", &c.up, up_frame(d, &c.f, &c.fhat))
}

/// The two defining equations: `up` over `down` is `U_f`, and `up` beside
/// `down` is the unit-constraint isomorphism `U_A;fhat => fhat;U_B`.
pub fn companion_equations<D: DoubleCategory>(d: &D, c: &CompanionOf<D>) -> Result<(Check, Check)> {
    check_frames(d, c)?;
    let vertical = d.compose_v(&c.up, &c.down)?;
    let horizontal = d.compose_h(&c.up, &c.down)?;
    let (a, b) = (d.vsrc(&c.f), d.vtgt(&c.f));
    let leaf = HTree::leaf(c.fhat.clone());
    let units = canonical_constraint(
        d,
        &HTree::node(HTree::Unit(a), leaf.clone()),
        &HTree::node(leaf, HTree::Unit(b)),
    )?;
    Ok((
        same(d, "up over down is not the unit square", &vertical, &d.sq_unit(&c.f)),
        same(d, "up beside down is not the identity", &horizontal, &units),
    ))
}

pub fn is_companion<D: DoubleCategory>(d: &D, c: &CompanionOf<D>) -> bool {
    matches!(companion_equations(d, c), Ok((Ok(()), Ok(()))))
}

pub fn is_conjoint<D: DoubleCategory>(d: &D, j: &ConjointOf<D>) -> bool {
    is_companion(&HOp(d), j)
}

/// Both defining equations as report entries.
pub fn verify_companion<D: DoubleCategory>(d: &D, c: &CompanionOf<D>) -> Result<Report> {
    let (v, h) = companion_equations(d, c)?;
    let mut r = Report::new();
    r.record(GROUP, "companion: vertical equation", "companion definition", v.map_err(|e| format!("{e} for {c:?}")));
    r.record(GROUP, "companion: horizontal equation", "companion definition", h.map_err(|e| format!("{e} for {c:?}")));
    Ok(r)
}

pub fn verify_conjoint<D: DoubleCategory>(d: &D, j: &ConjointOf<D>) -> Result<Report> {
    let mut r = verify_companion(&HOp(d), j)?;
    for a in &mut r.results {
        a.name = a.name.replace("companion", "conjoint");
    }
    Ok(r)
}

fn same_f<D: DoubleCategory>(c1: &CompanionOf<D>, c2: &CompanionOf<D>) -> Result<()> {
    if c1.f != c2.f {
        return Err(CellError::CompanionMismatch(format!("{:?} vs {:?}", c1.f, c2.f)));
    }
    Ok(())
}

/// The comparison `fhat1 => fhat2` between two companions of the same `f`:
/// `up` of the second beside `down` of the first, between unit
/// constraints.
pub fn theta<D: DoubleCategory>(d: &D, c1: &CompanionOf<D>, c2: &CompanionOf<D>) -> Result<D::Sq> {
    same_f::<D>(c1, c2)?;
    d.compose_v_all(&[d.lunit_inv(&c1.fhat)?, d.compose_h(&c2.up, &c1.down)?, d.runit(&c2.fhat)?])
}

/// `up1` then `t` is `up2`, and `t` then `down2` is `down1`.
pub fn theta_conditions<D: DoubleCategory>(
    d: &D,
    c1: &CompanionOf<D>,
    c2: &CompanionOf<D>,
    t: &D::Sq,
) -> Result<bool> {
    Ok(d.sq_eq(&d.compose_v(&c1.up, t)?, &c2.up) && d.sq_eq(&d.compose_v(t, &c2.down)?, &c1.down))
}

/// Every globular isomorphism `fhat1 => fhat2` compatible with the
/// defining squares, found by enumeration.
pub fn theta_candidates<D: Enumerable>(d: &D, c1: &CompanionOf<D>, c2: &CompanionOf<D>) -> Result<Vec<D::Sq>> {
    same_f::<D>(c1, c2)?;
    let mut out = Vec::new();
    for t in d.squares_in_frame(&d.globular_frame(&c1.fhat, &c2.fhat)) {
        if d.sq_inverse(&t).is_some() && theta_conditions(d, c1, c2, &t)? {
            out.push(t);
        }
    }
    Ok(out)
}

pub fn companion_of_identity<D: DoubleCategory>(d: &D, a: &D::Obj) -> CompanionOf<D> {
    let u = d.hunit(a);
    CompanionPair { f: d.vid(a), fhat: u.clone(), down: d.sq_id(&u), up: d.sq_id(&u) }
}

/// `fhat;ghat` as a companion of `f;g`.
pub fn compose_companions<D: DoubleCategory>(d: &D, cf: &CompanionOf<D>, cg: &CompanionOf<D>) -> Result<CompanionOf<D>> {
    let (a, b, c) = (d.vsrc(&cf.f), d.vtgt(&cf.f), d.vtgt(&cg.f));
    if d.vsrc(&cg.f) != b {
        return Err(CellError::frame(format!("{:?} and {:?} do not compose", cf.f, cg.f)));
    }
    let (ua, uc) = (d.hunit(&a), d.hunit(&c));
    let down = d.compose_v_all(&[
        d.compose_h(&cf.down, &d.sq_id(&cg.fhat))?,
        d.compose_h(&d.sq_unit(&cg.f), &cg.down)?,
        d.lunit(&uc)?,
    ])?;
    let up = d.compose_v_all(&[
        d.lunit_inv(&ua)?,
        d.compose_h(&cf.up, &d.sq_unit(&cf.f))?,
        d.compose_h(&d.sq_id(&cf.fhat), &cg.up)?,
    ])?;
    Ok(CompanionPair { f: d.vcomp(&cf.f, &cg.f)?, fhat: d.hcomp(&cf.fhat, &cg.fhat)?, down, up })
}

/// The image of a companion under a pseudo double functor, corrected by
/// the functor's unit constraints. `d` is the functor's source model.
pub fn map_companion<F: DblFunctor>(fun: &F, d: &F::Src, c: &CompanionOf<F::Src>) -> Result<CompanionOf<F::Tgt>> {
    let e = fun.target();
    let ub = fun.unit_constraint(&d.vtgt(&c.f))?;
    let ub_inv = e.sq_inverse(&ub).ok_or_else(|| CellError::NotInvertible(format!("unit constraint {ub:?}")))?;
    let down = e.compose_v(&fun.sq(&c.down)?, &ub_inv)?;
    let up = e.compose_v(&fun.unit_constraint(&d.vsrc(&c.f))?, &fun.sq(&c.up)?)?;
    Ok(CompanionPair { f: fun.vmor(&c.f), fhat: fun.hcell(&c.fhat), down, up })
}

/// `fhat (x) ghat` as a companion of `f (x) g`, corrected by the unit
/// comparison of the tensor.
pub fn tensor_companions<D: Monoidal>(d: &D, c1: &CompanionOf<D>, c2: &CompanionOf<D>) -> Result<CompanionOf<D>> {
    let (a, c) = (d.vsrc(&c1.f), d.vsrc(&c2.f));
    let (b, e) = (d.vtgt(&c1.f), d.vtgt(&c2.f));
    let cmp_tgt = d.unit_comparison(&b, &e)?;
    let cmp_tgt_inv =
        d.sq_inverse(&cmp_tgt).ok_or_else(|| CellError::NotInvertible(format!("unit comparison {cmp_tgt:?}")))?;
    let down = d.compose_v(&d.tensor_sq(&c1.down, &c2.down)?, &cmp_tgt_inv)?;
    let up = d.compose_v(&d.unit_comparison(&a, &c)?, &d.tensor_sq(&c1.up, &c2.up)?)?;
    Ok(CompanionPair { f: d.tensor_vmor(&c1.f, &c2.f), fhat: d.tensor_hcell(&c1.fhat, &c2.fhat), down, up })
}

/// A companion of `f` is a conjoint of the inverse of `f`.
pub fn conjoint_of_inverse<D: DoubleCategory>(d: &D, c: &CompanionOf<D>, finv: &D::VMor) -> Result<ConjointOf<D>> {
    let (a, b) = (d.vsrc(&c.f), d.vtgt(&c.f));
    let inverse = d.vsrc(finv) == b
        && d.vtgt(finv) == a
        && d.vcomp(&c.f, finv)? == d.vid(&a)
        && d.vcomp(finv, &c.f)? == d.vid(&b);
    if !inverse {
        return Err(CellError::NotInverse(format!("{finv:?} is not inverse to {:?}", c.f)));
    }
    let u = d.sq_unit(finv);
    Ok(CompanionPair {
        f: finv.clone(),
        fhat: c.fhat.clone(),
        down: d.compose_v(&c.down, &u)?,
        up: d.compose_v(&u, &c.up)?,
    })
}

/// The adjunction `fhat -| fcheck` in the horizontal bicategory.
pub fn adjunction<D: DoubleCategory>(
    d: &D,
    c: &CompanionOf<D>,
    j: &ConjointOf<D>,
) -> Result<AdjunctionData<D::HCell, D::Sq>> {
    same_f::<D>(c, j)?;
    let (a, b) = (d.vsrc(&c.f), d.vtgt(&c.f));
    let unit = d.compose_v(&d.lunit_inv(&d.hunit(&a))?, &d.compose_h(&c.up, &j.up)?)?;
    let counit = d.compose_v(&d.compose_h(&j.down, &c.down)?, &d.lunit(&d.hunit(&b))?)?;
    Ok(AdjunctionData { left: c.fhat.clone(), right: j.fhat.clone(), unit, counit })
}

/// The unit and counit as 2-cells with their bracketed boundaries.
pub fn adjunction_cells<D: DoubleCategory>(
    d: &D,
    adj: &AdjunctionData<D::HCell, D::Sq>,
) -> (crate::pasting::GlobularOf<D>, crate::pasting::GlobularOf<D>) {
    let (a, b) = (d.hsrc(&adj.left), d.htgt(&adj.left));
    let (l, r) = (HTree::leaf(adj.left.clone()), HTree::leaf(adj.right.clone()));
    (
        Globular { src: HTree::Unit(a), tgt: HTree::node(l.clone(), r.clone()), cell: adj.unit.clone() },
        Globular { src: HTree::node(r, l), tgt: HTree::Unit(b), cell: adj.counit.clone() },
    )
}

/// Both triangle identities, evaluated as whiskered composites.
pub fn triangle_identities<D: DoubleCategory>(d: &D, adj: &AdjunctionData<D::HCell, D::Sq>) -> Result<(Check, Check)> {
    let (eta, eps) = adjunction_cells(d, adj);
    let (a, b) = (d.hsrc(&adj.left), d.htgt(&adj.left));
    let left = WhiskerPath::new(Word::new(a, vec![adj.left.clone()]))
        .step(0, "unit", eta.clone())
        .step(1, "counit", eps.clone())
        .eval(d)?;
    let right = WhiskerPath::new(Word::new(b, vec![adj.right.clone()]))
        .step(1, "unit", eta)
        .step(0, "counit", eps)
        .eval(d)?;
    Ok((
        same(d, "left adjoint triangle", &left.1, &d.sq_id(&adj.left)),
        same(d, "right adjoint triangle", &right.1, &d.sq_id(&adj.right)),
    ))
}

/// Replaces `fhat` by an isomorphic `fhat2` along a globular iso `phi`.
pub fn transport_companion<D: DoubleCategory>(
    d: &D,
    c: &CompanionOf<D>,
    fhat2: D::HCell,
    phi: &D::Sq,
) -> Result<CompanionOf<D>> {
    let inv = d.sq_inverse(phi).ok_or_else(|| CellError::NotInvertible(format!("{phi:?}")))?;
    Ok(CompanionPair { f: c.f.clone(), fhat: fhat2, down: d.compose_v(&inv, &c.down)?, up: d.compose_v(&c.up, phi)? })
}

pub fn rel_companion(d: &RelModel, f: &crate::finset::Func) -> Result<CompanionOf<RelModel>> {
    let g = Relation::graph(f);
    Ok(CompanionPair {
        f: f.clone(),
        down: d.square(down_frame(d, f, &g))?,
        up: d.square(up_frame(d, f, &g))?,
        fhat: g,
    })
}

pub fn rel_conjoint(d: &RelModel, f: &crate::finset::Func) -> Result<ConjointOf<RelModel>> {
    let t = Relation::graph(f).transpose();
    let r = HOp(d);
    Ok(CompanionPair {
        f: f.clone(),
        fhat: t.clone(),
        down: RelSquare(flip(down_frame(&r, f, &t))),
        up: RelSquare(flip(up_frame(&r, f, &t))),
    })
    .and_then(|j: ConjointOf<RelModel>| {
        d.square(j.down.0.clone())?;
        d.square(j.up.0.clone())?;
        Ok(j)
    })
}

fn flip<H, V>(fr: Frame<H, V>) -> Frame<H, V> {
    Frame { top: fr.top, left: fr.right, right: fr.left, bottom: fr.bottom }
}

/// `(A, 1, f)` with the apex maps `f` and the identity.
pub fn span_companion(d: &SpanModel, f: &crate::finset::Func) -> Result<CompanionOf<SpanModel>> {
    let fhat = Span::companion_of(f);
    Ok(CompanionPair {
        f: f.clone(),
        down: d.square(down_frame(d, f, &fhat), f.table.to_vec())?,
        up: d.square(up_frame(d, f, &fhat), (0..f.src.card()).collect())?,
        fhat,
    })
}

/// `(A, f, 1)`, as a companion in the reversed model.
pub fn span_conjoint(d: &SpanModel, f: &crate::finset::Func) -> Result<ConjointOf<SpanModel>> {
    let fcheck = Span::conjoint_of(f);
    let r = HOp(d);
    Ok(CompanionPair {
        f: f.clone(),
        down: d.square(flip(down_frame(&r, f, &fcheck)), f.table.to_vec())?,
        up: d.square(flip(up_frame(&r, f, &fcheck)), (0..f.src.card()).collect())?,
        fhat: fcheck,
    })
}

/// The span with its apex listed in reverse order, and the relabeling
/// isomorphism onto it.
pub fn span_reversal(d: &SpanModel, m: &Span) -> Option<(Span, SpanSquare)> {
    let n = m.size();
    let rev = |xs: &[u32]| xs.iter().rev().copied().collect::<Vec<_>>();
    let apex: Vec<_> = m.apex.iter().rev().cloned().collect();
    let m2 = Span::new(m.src.clone(), m.tgt.clone(), apex, rev(&m.left), rev(&m.right));
    let phi = d.square(d.globular_frame(m, &m2), (0..n).map(|x| n - 1 - x).collect()).ok()?;
    Some((m2, phi))
}

/// Every companion of `f` among the enumerated 1-cells and squares.
pub fn all_companions<D: Enumerable>(d: &D, f: &D::VMor) -> Vec<CompanionOf<D>> {
    let mut out = Vec::new();
    for m in d.hcells_between(&d.vsrc(f), &d.vtgt(f)) {
        let downs = d.squares_in_frame(&down_frame(d, f, &m));
        if downs.is_empty() {
            continue;
        }
        for up in d.squares_in_frame(&up_frame(d, f, &m)) {
            for down in &downs {
                let c = CompanionPair { f: f.clone(), fhat: m.clone(), down: down.clone(), up: up.clone() };
                if is_companion(d, &c) {
                    out.push(c);
                }
            }
        }
    }
    out
}

/// The first companion of `f` in the model's enumeration order.
pub fn search_companion<D: Enumerable>(d: &D, f: &D::VMor) -> Option<CompanionOf<D>> {
    for m in d.hcells_between(&d.vsrc(f), &d.vtgt(f)) {
        let downs = d.squares_in_frame(&down_frame(d, f, &m));
        if downs.is_empty() {
            continue;
        }
        for up in d.squares_in_frame(&up_frame(d, f, &m)) {
            for down in &downs {
                let c = CompanionPair { f: f.clone(), fhat: m.clone(), down: down.clone(), up: up.clone() };
                if is_companion(d, &c) {
                    return Some(c);
                }
            }
        }
    }
    None
}

pub fn search_conjoint<D: Enumerable>(d: &D, f: &D::VMor) -> Option<ConjointOf<D>> {
    search_companion(&HOp(d), f)
}

/// A model with a deterministic choice of companions and conjoints.
pub trait Fibrant: DoubleCategory + Sized {
    fn companion_for(&self, f: &Self::VMor) -> Option<CompanionOf<Self>>;
    fn conjoint_for(&self, f: &Self::VMor) -> Option<ConjointOf<Self>>;
    fn describe_vmor(&self, f: &Self::VMor) -> String {
        format!("{f:?}")
    }
}

impl Fibrant for RelModel {
    fn companion_for(&self, f: &crate::finset::Func) -> Option<CompanionOf<Self>> {
        rel_companion(self, f).ok()
    }
    fn conjoint_for(&self, f: &crate::finset::Func) -> Option<ConjointOf<Self>> {
        rel_conjoint(self, f).ok()
    }
}

impl Fibrant for SpanModel {
    fn companion_for(&self, f: &crate::finset::Func) -> Option<CompanionOf<Self>> {
        span_companion(self, f).ok()
    }
    fn conjoint_for(&self, f: &crate::finset::Func) -> Option<ConjointOf<Self>> {
        span_conjoint(self, f).ok()
    }
}

impl Fibrant for GradedModel {
    fn companion_for(&self, f: &Self::VMor) -> Option<CompanionOf<Self>> {
        let m = self.hcell(f.obj, 0);
        Some(CompanionPair {
            f: *f,
            fhat: m,
            down: self.square(m, *f, self.vid(&f.obj), self.hunit(&f.obj), 0).ok()?,
            up: self.square(self.hunit(&f.obj), self.vid(&f.obj), *f, m, 0).ok()?,
        })
    }
    fn conjoint_for(&self, f: &Self::VMor) -> Option<ConjointOf<Self>> {
        let m = self.hcell(f.obj, 0);
        Some(CompanionPair {
            f: *f,
            fhat: m,
            down: self.square(m, self.vid(&f.obj), *f, self.hunit(&f.obj), 0).ok()?,
            up: self.square(self.hunit(&f.obj), *f, self.vid(&f.obj), m, 0).ok()?,
        })
    }
}

/// Declared entries win; otherwise the first companion in table order.
impl Fibrant for TableModel {
    fn companion_for(&self, f: &VId) -> Option<CompanionOf<Self>> {
        match self.declared_companion(*f) {
            Some((fhat, down, up)) => Some(CompanionPair { f: *f, fhat, down, up }),
            None => search_companion(self, f),
        }
    }
    fn conjoint_for(&self, f: &VId) -> Option<ConjointOf<Self>> {
        match self.declared_conjoint(*f) {
            Some((fhat, down, up)) => Some(CompanionPair { f: *f, fhat, down, up }),
            None => search_conjoint(self, f),
        }
    }
    fn describe_vmor(&self, f: &VId) -> String {
        self.vmor_name(*f)
    }
}

/// Replaces a chosen 1-cell by an isomorphic one: `(new cell, iso)`.
pub type Twist<D> = fn(&D, &<D as DoubleCategory>::HCell) -> Option<(<D as DoubleCategory>::HCell, <D as DoubleCategory>::Sq)>;

type Entry<D> = (CompanionOf<D>, ConjointOf<D>);

/// Verified companion and conjoint choices. Morphisms outside the
/// enumerated range are resolved on first use and verified then.
pub struct Certificate<D: DoubleCategory> {
    pub isofibrant: bool,
    order: Vec<D::VMor>,
    cache: Arc<Mutex<HashMap<D::VMor, Entry<D>>>>,
    twist: Option<Twist<D>>,
}

impl<D: DoubleCategory> Clone for Certificate<D> {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().expect("certificate cache").clone();
        Certificate { isofibrant: self.isofibrant, order: self.order.clone(), cache: Arc::new(Mutex::new(cache)), twist: self.twist }
    }
}

impl<D: DoubleCategory> fmt::Debug for Certificate<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate({} morphisms, isofibrant: {})", self.order.len(), self.isofibrant)
    }
}

impl<D: Fibrant> Certificate<D> {
    fn resolve(&self, d: &D, f: &D::VMor) -> std::result::Result<Entry<D>, String> {
        if self.isofibrant && d.vinverse(f).is_none() {
            return Err(format!("{} is not invertible and the certificate is isofibrant", d.describe_vmor(f)));
        }
        let name = d.describe_vmor(f);
        let mut c = d.companion_for(f).ok_or_else(|| format!("no companion for {name}"))?;
        let mut j = d.conjoint_for(f).ok_or_else(|| format!("no conjoint for {name}"))?;
        if let Some(tw) = self.twist {
            if let Some((m, phi)) = tw(d, &c.fhat) {
                c = transport_companion(d, &c, m, &phi).map_err(|e| format!("{name}: {e}"))?;
            }
            if let Some((m, phi)) = tw(d, &j.fhat) {
                j = transport_companion(d, &j, m, &phi).map_err(|e| format!("{name}: {e}"))?;
            }
        }
        let explain = |what: &str, r: Result<(Check, Check)>| -> std::result::Result<(), String> {
            match r {
                Ok((Ok(()), Ok(()))) => Ok(()),
                Ok((Err(e), _)) | Ok((_, Err(e))) => Err(format!("chosen {what} of {name} fails: {e}")),
                Err(e) => Err(format!("chosen {what} of {name} is malformed: {e}")),
            }
        };
        explain("companion", companion_equations(d, &c))?;
        explain("conjoint", companion_equations(&HOp(d), &j))?;
        Ok((c, j))
    }

    fn entry(&self, d: &D, f: &D::VMor) -> Result<Entry<D>> {
        if let Some(e) = self.cache.lock().expect("certificate cache").get(f) {
            return Ok(e.clone());
        }
        let e = self.resolve(d, f).map_err(CellError::MissingCompanion)?;
        self.cache.lock().expect("certificate cache").insert(f.clone(), e.clone());
        Ok(e)
    }

    pub fn companion(&self, d: &D, f: &D::VMor) -> Result<CompanionOf<D>> {
        Ok(self.entry(d, f)?.0)
    }

    pub fn conjoint(&self, d: &D, f: &D::VMor) -> Result<ConjointOf<D>> {
        Ok(self.entry(d, f)?.1)
    }

    /// The certified morphisms in enumeration order.
    pub fn certified(&self) -> &[D::VMor] {
        &self.order
    }

    /// The same morphisms with every chosen 1-cell moved along `twist`.
    pub fn twisted(&self, d: &D, twist: Twist<D>) -> Result<Self> {
        let out = Certificate { isofibrant: self.isofibrant, order: self.order.clone(), cache: Default::default(), twist: Some(twist) };
        for f in &self.order {
            out.entry(d, f)?;
        }
        Ok(out)
    }
}

/// Chooses and verifies a companion and conjoint for every enumerated
/// vertical morphism (only the invertible ones when `isofibrant`).
pub fn certify_fibrant<D: Fibrant + Enumerable>(d: &D, isofibrant: bool) -> Result<Certificate<D>> {
    let order: Vec<D::VMor> =
        d.all_vmors().into_iter().filter(|f| !isofibrant || d.vinverse(f).is_some()).collect();
    let cert = Certificate { isofibrant, order: order.clone(), cache: Default::default(), twist: None };
    let mut problems = Vec::new();
    for f in &order {
        match cert.resolve(d, f) {
            Ok(e) => {
                cert.cache.lock().expect("certificate cache").insert(f.clone(), e);
            }
            Err(p) => problems.push(p),
        }
    }
    if problems.is_empty() {
        Ok(cert)
    } else {
        Err(CellError::NotFibrant(problems))
    }
}

/// `theta` is natural in the functor: `theta(F c1, F c2) = F theta(c1, c2)`.
pub fn theta_commutes_with<F: DblFunctor>(
    fun: &F,
    d: &F::Src,
    c1: &CompanionOf<F::Src>,
    c2: &CompanionOf<F::Src>,
) -> Result<Check> {
    let lhs: SQ<F::Tgt> = theta(fun.target(), &map_companion(fun, d, c1)?, &map_companion(fun, d, c2)?)?;
    let rhs = fun.sq(&theta(d, c1, c2)?)?;
    Ok(same(fun.target(), "theta of images", &lhs, &rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finset::{FinSet, Func};

    fn func(src: u32, tgt: u32, table: Vec<u32>) -> Func {
        Func::new(FinSet::atom(src), FinSet::atom(tgt), table)
    }

    #[test]
    fn rel_graph_of_constant_map() {
        let d = RelModel::new(2);
        let f = func(2, 1, vec![0, 0]);
        let c = rel_companion(&d, &f).unwrap();
        assert_eq!(c.fhat, Relation::new(FinSet::atom(2), FinSet::atom(1), [(0, 0), (1, 0)]));
        assert!(is_companion(&d, &c));
        let j = rel_conjoint(&d, &f).unwrap();
        assert_eq!(j.fhat, Relation::new(FinSet::atom(1), FinSet::atom(2), [(0, 0), (0, 1)]));
        assert!(is_conjoint(&d, &j));
    }

    #[test]
    fn companion_of_identity_is_the_unit() {
        let d = RelModel::new(2);
        let a = FinSet::atom(2);
        let c = companion_of_identity(&d, &a);
        assert_eq!(c.fhat, Relation::diagonal(&a));
        assert_eq!(rel_companion(&d, &Func::identity(&a)).unwrap().fhat, c.fhat);
        assert!(verify_companion(&d, &c).unwrap().passed());
        let s = SpanModel::new(2, 2);
        assert!(verify_companion(&s, &companion_of_identity(&s, &a)).unwrap().passed());
    }

    #[test]
    fn span_companion_of_inclusion() {
        let d = SpanModel::new(3, 3);
        let f = func(2, 3, vec![0, 1]);
        let c = span_companion(&d, &f).unwrap();
        assert_eq!((&*c.fhat.left, &*c.fhat.right), (&[0, 1][..], &[0, 1][..]));
        assert!(is_companion(&d, &c));
        assert!(is_conjoint(&d, &span_conjoint(&d, &f).unwrap()));
    }

    #[test]
    fn oversized_span_fails_only_the_horizontal_equation() {
        let d = SpanModel::new(2, 2);
        let a = FinSet::atom(1);
        let f = Func::identity(&a);
        let fat = Span::from_legs(a.clone(), a.clone(), vec![0, 0], vec![0, 0]);
        let c = CompanionPair {
            f: f.clone(),
            down: d.square(down_frame(&d, &f, &fat), vec![0, 0]).unwrap(),
            up: d.square(up_frame(&d, &f, &fat), vec![0]).unwrap(),
            fhat: fat,
        };
        let r = verify_companion(&d, &c).unwrap();
        assert!(r.get("companion: vertical equation").unwrap().passed);
        let h = r.get("companion: horizontal equation").unwrap();
        assert!(!h.passed && h.counterexample.is_some());
        let mut bad = c.clone();
        bad.up = d.sq_id(&d.hunit(&a));
        assert!(matches!(companion_equations(&d, &bad), Err(CellError::FrameMismatch { .. })));
    }

    #[test]
    fn theta_of_a_companion_with_itself_is_the_identity() {
        let d = SpanModel::new(2, 2);
        for f in d.all_vmors() {
            let c = span_companion(&d, &f).unwrap();
            assert_eq!(theta(&d, &c, &c).unwrap(), d.sq_id(&c.fhat));
        }
    }

    #[test]
    fn theta_between_reversed_companions_is_the_reversal() {
        let d = SpanModel::new(2, 2);
        let f = func(2, 1, vec![0, 0]);
        let c = span_companion(&d, &f).unwrap();
        let (m, phi) = span_reversal(&d, &c.fhat).unwrap();
        let c2 = transport_companion(&d, &c, m, &phi).unwrap();
        assert!(is_companion(&d, &c2));
        let t = theta(&d, &c, &c2).unwrap();
        assert_eq!(&*t.map, &[1, 0]);
        assert_eq!(theta_candidates(&d, &c, &c2).unwrap(), vec![t]);
    }

    #[test]
    fn composite_companion_apex_is_the_pullback() {
        let d = SpanModel::new(2, 2);
        let f = func(2, 1, vec![0, 0]);
        let g = func(1, 2, vec![1]);
        let c = compose_companions(&d, &span_companion(&d, &f).unwrap(), &span_companion(&d, &g).unwrap()).unwrap();
        assert_eq!(c.fhat.size(), 2);
        assert!(is_companion(&d, &c));
    }

    #[test]
    fn table_search_finds_the_graded_companions() {
        let g = GradedModel::new(1, 1, 2, 3, 0).unwrap();
        let t = TableModel::new(crate::models::TableSpec::tabulate(&g).unwrap()).unwrap();
        let cert = certify_fibrant(&t, false).unwrap();
        assert_eq!(cert.certified().len(), 1);
        let direct = certify_fibrant(&g, false).unwrap();
        assert_eq!(direct.certified().len(), 1);
    }

    #[test]
    fn adjunction_of_a_bijection_is_an_equivalence() {
        let d = SpanModel::new(2, 2);
        let f = func(2, 2, vec![1, 0]);
        let c = span_companion(&d, &f).unwrap();
        let j = span_conjoint(&d, &f).unwrap();
        let adj = adjunction(&d, &c, &j).unwrap();
        let (l, r) = triangle_identities(&d, &adj).unwrap();
        l.unwrap();
        r.unwrap();
        assert!(d.sq_inverse(&adj.unit).is_some() && d.sq_inverse(&adj.counit).is_some());
    }

    #[test]
    fn inverse_conjoint_of_a_transposition() {
        let d = SpanModel::new(2, 2);
        let f = func(2, 2, vec![1, 0]);
        let c = span_companion(&d, &f).unwrap();
        let j = conjoint_of_inverse(&d, &c, &f).unwrap();
        assert!(is_conjoint(&d, &j));
        let g = func(2, 2, vec![0, 0]);
        assert!(matches!(conjoint_of_inverse(&d, &c, &g), Err(CellError::NotInverse(_))));
    }
}
