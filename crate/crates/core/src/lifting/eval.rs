//! Evaluation of letters, cells and routes in a fibrant monoidal double
//! category.

use crate::cell::DoubleCategory;
use crate::companions::{
    companion_of_identity, compose_companions, tensor_companions, theta, Certificate, CompanionOf, Fibrant,
};
use crate::error::{CellError, Result};
use crate::htree::{canonical_constraint, HTree, HTreeOf};
use crate::monoidal::Braided;
use crate::pasting::{Globular, GlobularOf, WhiskerPath, Word};

use super::expr::{Cell, Letter, Ob, Route};

/// Which structure is lifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Monoidal,
    Braided,
    Symmetric,
}

/// How an equation between two pastings is decided.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckMode {
    /// Each side is compared with the comparison cell between the
    /// composite companions of its boundary words.
    Theta,
    /// Both sides are evaluated and compared with each other.
    Brute,
}

/// The structure of a monoidal bicategory on the horizontal bicategory:
/// tensor, lifted constraint transformations, and their modifications,
/// all read off from a certificate of chosen companions.
pub struct MonoidalBicategoryData<'a, D: Braided + Fibrant> {
    pub model: &'a D,
    pub cert: &'a Certificate<D>,
    pub level: Level,
    pub mode: CheckMode,
}

fn inverse_sq<D: DoubleCategory>(d: &D, s: &D::Sq) -> Result<D::Sq> {
    d.sq_inverse(s).ok_or_else(|| CellError::NotInvertible(format!("{s:?}")))
}

impl<'a, D: Braided + Fibrant> MonoidalBicategoryData<'a, D> {
    pub fn new(model: &'a D, cert: &'a Certificate<D>, level: Level, mode: CheckMode) -> Self {
        MonoidalBicategoryData { model, cert, level, mode }
    }

    pub fn obj(&self, e: &Ob, vals: &[D::Obj]) -> D::Obj {
        let d = self.model;
        match e {
            Ob::Var(i) => vals[*i].clone(),
            Ob::I => d.unit_obj(),
            Ob::T(a, b) => d.tensor_obj(&self.obj(a, vals), &self.obj(b, vals)),
        }
    }

    /// The tensor expression applied to 1-cells.
    pub fn hcell_of(&self, e: &Ob, ms: &[D::HCell]) -> D::HCell {
        let d = self.model;
        match e {
            Ob::Var(i) => ms[*i].clone(),
            Ob::I => d.hunit(&d.unit_obj()),
            Ob::T(a, b) => d.tensor_hcell(&self.hcell_of(a, ms), &self.hcell_of(b, ms)),
        }
    }

    pub fn vmor(&self, l: &Letter, vals: &[D::Obj]) -> Result<D::VMor> {
        let d = self.model;
        let o = |e: &Ob| self.obj(e, vals);
        Ok(match l {
            Letter::Id(x) => d.vid(&o(x)),
            Letter::Assoc(a, b, c) => d.assoc_vmor(&o(a), &o(b), &o(c)),
            Letter::AssocInv(a, b, c) => {
                let f = d.assoc_vmor(&o(a), &o(b), &o(c));
                d.vinverse(&f).ok_or_else(|| CellError::NotInvertible(format!("associator {f:?}")))?
            }
            Letter::LUnit(a) => d.lunitor_vmor(&o(a)),
            Letter::RUnit(a) => d.runitor_vmor(&o(a)),
            Letter::Braid(a, b) => d.braid_vmor(&o(a), &o(b)),
            Letter::Tensor(l, r) => d.tensor_vmor(&self.vmor(l, vals)?, &self.vmor(r, vals)?),
        })
    }

    /// The companion a letter stands for: chosen ones for structure
    /// morphisms, units for identities, tensors for tensors.
    pub fn companion(&self, l: &Letter, vals: &[D::Obj]) -> Result<CompanionOf<D>> {
        let d = self.model;
        match l {
            Letter::Id(x) => Ok(companion_of_identity(d, &self.obj(x, vals))),
            Letter::Tensor(a, b) => tensor_companions(d, &self.companion(a, vals)?, &self.companion(b, vals)?),
            _ => self.cert.companion(d, &self.vmor(l, vals)?),
        }
    }

    /// The composite companion of a word; the unit companion when empty.
    pub fn word_companion(&self, at: &Ob, w: &[Letter], vals: &[D::Obj]) -> Result<CompanionOf<D>> {
        let mut acc: Option<CompanionOf<D>> = None;
        for l in w {
            let c = self.companion(l, vals)?;
            acc = Some(match acc {
                None => c,
                Some(prev) => compose_companions(self.model, &prev, &c)?,
            });
        }
        Ok(acc.unwrap_or_else(|| companion_of_identity(self.model, &self.obj(at, vals))))
    }

    pub fn word(&self, at: &Ob, w: &[Letter], vals: &[D::Obj]) -> Result<Word<D::Obj, D::HCell>> {
        let cells = w.iter().map(|l| Ok(self.companion(l, vals)?.fhat)).collect::<Result<Vec<_>>>()?;
        Ok(Word::new(self.obj(at, vals), cells))
    }

    fn flat_tree(&self, at: &Ob, w: &[Letter], vals: &[D::Obj]) -> Result<HTreeOf<D>> {
        Ok(self.word(at, w, vals)?.tree())
    }

    /// Evaluates a cell at objects, as a 2-cell between the flat
    /// composites of its words.
    pub fn cell(&self, c: &Cell, vals: &[D::Obj]) -> Result<GlobularOf<D>> {
        let d = self.model;
        match c {
            Cell::Theta { at, src, tgt, pentagon, .. } => {
                let (s, t) = (self.flat_tree(at, src, vals)?, self.flat_tree(at, tgt, vals)?);
                if let Some(p) = pentagon {
                    let o: Vec<D::Obj> = p.iter().map(|e| self.obj(e, vals)).collect();
                    if let Some(sq) = d.pentagonator_override([&o[0], &o[1], &o[2], &o[3]]) {
                        let g = Globular { src: s, tgt: t, cell: sq };
                        g.check(d)?;
                        return Ok(g);
                    }
                }
                let cell = theta(d, &self.word_companion(at, src, vals)?, &self.word_companion(at, tgt, vals)?)?;
                Ok(Globular { src: s, tgt: t, cell })
            }
            Cell::Nat { letter, args } => {
                let cs = args.iter().map(|a| self.companion(a, vals)).collect::<Result<Vec<_>>>()?;
                let ms: Vec<D::HCell> = cs.iter().map(|c| c.fhat.clone()).collect();
                let pa: Vec<D::Obj> = cs.iter().map(|c| d.vsrc(&c.f)).collect();
                let pb: Vec<D::Obj> = cs.iter().map(|c| d.vtgt(&c.f)).collect();
                self.nat(letter, &pa, &pb, &ms)
            }
            Cell::UnitCoh { at, src, tgt } => {
                let units = |w: &[Letter]| -> Result<HTreeOf<D>> {
                    let mut here = self.obj(at, vals);
                    let mut acc: Option<HTreeOf<D>> = None;
                    for l in w {
                        let node = match l {
                            Letter::Id(_) => HTree::Unit(here.clone()),
                            _ => HTree::leaf(self.companion(l, vals)?.fhat),
                        };
                        here = self.obj(&l.tgt(), vals);
                        acc = Some(match acc {
                            None => node,
                            Some(prev) => HTree::node(prev, node),
                        });
                    }
                    Ok(acc.unwrap_or(HTree::Unit(here)))
                };
                let cell = canonical_constraint(d, &units(src)?, &units(tgt)?)?;
                Ok(Globular { src: self.flat_tree(at, src, vals)?, tgt: self.flat_tree(at, tgt, vals)?, cell })
            }
            Cell::Tensor(l, r) => self.tensor_globulars(&self.cell(l, vals)?, &self.cell(r, vals)?),
            Cell::Inverse(c) => self.cell(c, vals)?.inverse(d),
        }
    }

    /// `[x1 y1, .., xk yk] => (x1;..;xk) (x) (y1;..;yk)` by interchangers,
    /// or the unit comparison when `k = 0`.
    fn interchange(&self, a: &D::Obj, b: &D::Obj, xs: &[D::HCell], ys: &[D::HCell]) -> Result<GlobularOf<D>> {
        let d = self.model;
        let start = d.tensor_obj(a, b);
        if xs.is_empty() {
            let top = d.tensor_hcell(&d.hunit(a), &d.hunit(b));
            return Ok(Globular { src: HTree::Unit(start), tgt: HTree::leaf(top), cell: d.unit_comparison(a, b)? });
        }
        let zs: Vec<D::HCell> = xs.iter().zip(ys).map(|(x, y)| d.tensor_hcell(x, y)).collect();
        let mut path = WhiskerPath::new(Word::new(start, zs.clone()));
        let (mut x, mut y) = (xs[0].clone(), ys[0].clone());
        for i in 1..xs.len() {
            let (x2, y2) = (d.hcomp(&x, &xs[i])?, d.hcomp(&y, &ys[i])?);
            let g = Globular {
                src: HTree::node(HTree::leaf(d.tensor_hcell(&x, &y)), HTree::leaf(zs[i].clone())),
                tgt: HTree::leaf(d.tensor_hcell(&x2, &y2)),
                cell: d.interchanger(&x, &y, &xs[i], &ys[i])?,
            };
            path = path.step(0, "interchanger", g);
            x = x2;
            y = y2;
        }
        let (end, cell) = path.eval(d)?;
        Ok(Globular { src: path.start.tree(), tgt: end.tree(), cell })
    }

    /// The tensor of two flat 2-cells whose words have equal lengths, as a
    /// 2-cell between the words of pointwise tensors.
    pub fn tensor_globulars(&self, g1: &GlobularOf<D>, g2: &GlobularOf<D>) -> Result<GlobularOf<D>> {
        let d = self.model;
        let (s1, s2, t1, t2) = (g1.src.leaves(), g2.src.leaves(), g1.tgt.leaves(), g2.tgt.leaves());
        if s1.len() != s2.len() || t1.len() != t2.len() {
            return Err(CellError::frame(format!(
                "tensor of 2-cells with word lengths {}=>{} and {}=>{}",
                s1.len(),
                t1.len(),
                s2.len(),
                t2.len()
            )));
        }
        let (a, b) = (g1.src.src(d), g2.src.src(d));
        let before = self.interchange(&a, &b, &s1, &s2)?;
        let after = self.interchange(&a, &b, &t1, &t2)?.inverse(d)?;
        let middle = Globular { src: before.tgt.clone(), tgt: after.src.clone(), cell: d.tensor_sq(&g1.cell, &g2.cell)? };
        middle.check(d)?;
        before.then(d, &middle)?.then(d, &after)
    }

    /// The oplax naturality cell `[S(M), l_B] => [l_A, T(M)]` of a letter
    /// read as a transformation of its variables, at 1-cells `ms` from
    /// `pa` to `pb`.
    pub fn nat(&self, l: &Letter, pa: &[D::Obj], pb: &[D::Obj], ms: &[D::HCell]) -> Result<GlobularOf<D>> {
        let d = self.model;
        if let Letter::Tensor(x, y) = l {
            return self.tensor_globulars(&self.nat(x, pa, pb, ms)?, &self.nat(y, pa, pb, ms)?);
        }
        let h = |e: &Ob| self.hcell_of(e, ms);
        let sq = match l {
            Letter::Id(x) => d.sq_id(&h(x)),
            Letter::Assoc(a, b, c) => d.assoc_sq(&h(a), &h(b), &h(c))?,
            Letter::AssocInv(a, b, c) => inverse_sq(d, &d.assoc_sq(&h(a), &h(b), &h(c))?)?,
            Letter::LUnit(a) => d.lunitor_sq(&h(a))?,
            Letter::RUnit(a) => d.runitor_sq(&h(a))?,
            Letter::Braid(a, b) => d.braid_sq(&h(a), &h(b))?,
            Letter::Tensor(..) => unreachable!(),
        };
        let (ca, cb) = (self.companion(l, pa)?, self.companion(l, pb)?);
        let (sm, tm) = (h(&l.src()), h(&l.tgt()));
        let cell = d.compose_h(&d.compose_h(&ca.up, &sq)?, &cb.down)?;
        let g = Globular {
            src: HTree::node(HTree::node(HTree::Unit(self.obj(&l.src(), pa)), HTree::leaf(sm.clone())), HTree::leaf(cb.fhat.clone())),
            tgt: HTree::node(HTree::node(HTree::leaf(ca.fhat.clone()), HTree::leaf(tm.clone())), HTree::Unit(self.obj(&l.tgt(), pb))),
            cell,
        };
        g.check(d)?;
        let src = HTree::from_leaves(d.hsrc(&sm), [sm, cb.fhat]);
        let tgt = HTree::from_leaves(d.hsrc(&ca.fhat), [ca.fhat, tm]);
        let cell = d.compose_v_all(&[canonical_constraint(d, &src, &g.src)?, g.cell, canonical_constraint(d, &g.tgt, &tgt)?])?;
        Ok(Globular { src, tgt, cell })
    }

    /// Evaluates a route to a 2-cell between its flat start and end words.
    pub fn route(&self, r: &Route, vals: &[D::Obj]) -> Result<GlobularOf<D>> {
        let mut path = WhiskerPath::new(self.word(&r.at, &r.start, vals)?);
        for (off, c) in &r.steps {
            path = path.step(*off, c.name(), self.cell(c, vals)?);
        }
        let (end, cell) = path.eval(self.model)?;
        Ok(Globular { src: path.start.tree(), tgt: end.tree(), cell })
    }

    /// The comparison between the composite companions of the ends of a
    /// route.
    pub fn route_theta(&self, r: &Route, vals: &[D::Obj]) -> Result<D::Sq> {
        theta(self.model, &self.word_companion(&r.at, &r.start, vals)?, &self.word_companion(&r.at, &r.word, vals)?)
    }

    /// The naturality cell of a whole route of letters at 1-cells `ms`:
    /// starting from `[S0(M), l1_B, .., lk_B]`, each letter's cell moves
    /// the 1-cell one step to the right.
    pub fn nat_word(&self, at: &Ob, w: &[Letter], pa: &[D::Obj], pb: &[D::Obj], ms: &[D::HCell]) -> Result<GlobularOf<D>> {
        let d = self.model;
        let s0 = self.hcell_of(at, ms);
        let mut cells = vec![s0.clone()];
        for l in w {
            cells.push(self.companion(l, pb)?.fhat);
        }
        let mut path = WhiskerPath::new(Word::new(d.hsrc(&s0), cells));
        for (i, l) in w.iter().enumerate() {
            path = path.step(i, format!("naturality of {l}"), self.nat(l, pa, pb, ms)?);
        }
        let (end, cell) = path.eval(d)?;
        Ok(Globular { src: path.start.tree(), tgt: end.tree(), cell })
    }
}
