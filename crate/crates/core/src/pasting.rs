//! Pasting expressions and their evaluation to squares.
//!
//! Two layers live here. [`PastingExpr`] is a plain expression tree over
//! squares. [`Globular`] and [`WhiskerPath`] express pastings in the
//! horizontal bicategory: a path rewrites a word of 1-cells one segment at
//! a time, and evaluation inserts the bracketing constraints between steps.

use crate::cell::{DoubleCategory, FrameOf};
use crate::error::{CellError, Result};
use crate::htree::{canonical_expr, HTree, HTreeOf};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Constraint<H> {
    Assoc(H, H, H),
    AssocInv(H, H, H),
    LUnit(H),
    LUnitInv(H),
    RUnit(H),
    RUnitInv(H),
}

impl<H: Clone> Constraint<H> {
    pub fn inverse(&self) -> Self {
        use Constraint::*;
        match self {
            Assoc(m, n, p) => AssocInv(m.clone(), n.clone(), p.clone()),
            AssocInv(m, n, p) => Assoc(m.clone(), n.clone(), p.clone()),
            LUnit(m) => LUnitInv(m.clone()),
            LUnitInv(m) => LUnit(m.clone()),
            RUnit(m) => RUnitInv(m.clone()),
            RUnitInv(m) => RUnit(m.clone()),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum PastingExpr<H, S> {
    Leaf(S),
    /// `1_M`.
    Id(H),
    /// First operand above the second.
    VComp(Box<PastingExpr<H, S>>, Box<PastingExpr<H, S>>),
    /// First operand left of the second.
    HComp(Box<PastingExpr<H, S>>, Box<PastingExpr<H, S>>),
    Constraint(Constraint<H>),
    /// Vertical inverse of an invertible subexpression.
    Inverse(Box<PastingExpr<H, S>>),
}

impl<H: Clone, S: Clone> PastingExpr<H, S> {
    pub fn vcomp(a: Self, b: Self) -> Self {
        match (&a, &b) {
            (PastingExpr::Id(_), _) => b,
            (_, PastingExpr::Id(_)) => a,
            _ => PastingExpr::VComp(Box::new(a), Box::new(b)),
        }
    }

    pub fn hcomp(a: Self, b: Self) -> Self {
        PastingExpr::HComp(Box::new(a), Box::new(b))
    }

    /// Structural inverse; leaves are wrapped in [`PastingExpr::Inverse`].
    pub fn inverse(&self) -> Self {
        match self {
            PastingExpr::Leaf(_) => PastingExpr::Inverse(Box::new(self.clone())),
            PastingExpr::Id(_) => self.clone(),
            PastingExpr::VComp(a, b) => PastingExpr::VComp(Box::new(b.inverse()), Box::new(a.inverse())),
            PastingExpr::HComp(a, b) => PastingExpr::HComp(Box::new(a.inverse()), Box::new(b.inverse())),
            PastingExpr::Constraint(c) => PastingExpr::Constraint(c.inverse()),
            PastingExpr::Inverse(e) => (**e).clone(),
        }
    }
}

fn eval_constraint<D: DoubleCategory>(d: &D, c: &Constraint<D::HCell>) -> Result<D::Sq> {
    match c {
        Constraint::Assoc(m, n, p) => d.assoc(m, n, p),
        Constraint::AssocInv(m, n, p) => d.assoc_inv(m, n, p),
        Constraint::LUnit(m) => d.lunit(m),
        Constraint::LUnitInv(m) => d.lunit_inv(m),
        Constraint::RUnit(m) => d.runit(m),
        Constraint::RUnitInv(m) => d.runit_inv(m),
    }
}

/// Evaluates a pasting expression. Frame errors carry the path of the
/// offending node (`v0`/`v1` for the upper/lower operand, `h0`/`h1` for
/// left/right).
pub fn eval_pasting<D: DoubleCategory>(d: &D, e: &PastingExpr<D::HCell, D::Sq>) -> Result<D::Sq> {
    match e {
        PastingExpr::Leaf(s) => Ok(s.clone()),
        PastingExpr::Id(m) => Ok(d.sq_id(m)),
        PastingExpr::VComp(a, b) => {
            let x = eval_pasting(d, a).map_err(|e| e.at("v0"))?;
            let y = eval_pasting(d, b).map_err(|e| e.at("v1"))?;
            d.compose_v(&x, &y)
        }
        PastingExpr::HComp(a, b) => {
            let x = eval_pasting(d, a).map_err(|e| e.at("h0"))?;
            let y = eval_pasting(d, b).map_err(|e| e.at("h1"))?;
            d.compose_h(&x, &y)
        }
        PastingExpr::Constraint(c) => eval_constraint(d, c),
        PastingExpr::Inverse(a) => {
            let x = eval_pasting(d, a).map_err(|e| e.at("inv"))?;
            d.sq_inverse(&x).ok_or_else(|| CellError::NotInvertible(format!("{x:?}")))
        }
    }
}

/// The boundary of an expression, computed without evaluating squares
/// beyond the leaves.
pub fn frame_of<D: DoubleCategory>(d: &D, e: &PastingExpr<D::HCell, D::Sq>) -> Result<FrameOf<D>> {
    match e {
        PastingExpr::Leaf(s) => Ok(d.frame(s)),
        PastingExpr::Id(m) => Ok(d.globular_frame(m, m)),
        PastingExpr::VComp(a, b) => {
            let fa = frame_of(d, a).map_err(|e| e.at("v0"))?;
            let fb = frame_of(d, b).map_err(|e| e.at("v1"))?;
            if fa.bottom != fb.top {
                return Err(CellError::frame(format!("bottom {:?} vs top {:?}", fa.bottom, fb.top)));
            }
            Ok(crate::cell::Frame {
                top: fa.top,
                left: d.vcomp(&fa.left, &fb.left)?,
                right: d.vcomp(&fa.right, &fb.right)?,
                bottom: fb.bottom,
            })
        }
        PastingExpr::HComp(a, b) => {
            let fa = frame_of(d, a).map_err(|e| e.at("h0"))?;
            let fb = frame_of(d, b).map_err(|e| e.at("h1"))?;
            if fa.right != fb.left {
                return Err(CellError::frame(format!("right {:?} vs left {:?}", fa.right, fb.left)));
            }
            Ok(crate::cell::Frame {
                top: d.hcomp(&fa.top, &fb.top)?,
                left: fa.left,
                right: fb.right,
                bottom: d.hcomp(&fa.bottom, &fb.bottom)?,
            })
        }
        PastingExpr::Constraint(c) => Ok(d.frame(&eval_constraint(d, c)?)),
        PastingExpr::Inverse(a) => {
            let fa = frame_of(d, a).map_err(|e| e.at("inv"))?;
            let left = d.vinverse(&fa.left).ok_or_else(|| CellError::NotInvertible(format!("{:?}", fa.left)))?;
            let right = d.vinverse(&fa.right).ok_or_else(|| CellError::NotInvertible(format!("{:?}", fa.right)))?;
            Ok(crate::cell::Frame { top: fa.bottom, left, right, bottom: fa.top })
        }
    }
}

/// A 2-cell of the horizontal bicategory together with bracketed source
/// and target composites: `cell: value(src) => value(tgt)`, globular.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Globular<O, H, S> {
    pub src: HTree<O, H>,
    pub tgt: HTree<O, H>,
    pub cell: S,
}

pub type GlobularOf<D> =
    Globular<<D as DoubleCategory>::Obj, <D as DoubleCategory>::HCell, <D as DoubleCategory>::Sq>;

impl<O: Clone + PartialEq + std::fmt::Debug, H: Clone + PartialEq + std::fmt::Debug, S: Clone>
    Globular<O, H, S>
{
    /// Checks that the square's frame matches the declared composites.
    pub fn check<D>(&self, d: &D) -> Result<()>
    where
        D: DoubleCategory<Obj = O, HCell = H, Sq = S>,
    {
        let fr = d.frame(&self.cell);
        let (top, bottom) = (self.src.value(d)?, self.tgt.value(d)?);
        if fr.top != top || fr.bottom != bottom || !d.is_globular(&self.cell) {
            return Err(CellError::frame(format!(
                "2-cell frame {:?} => {:?} does not match declared {:?} => {:?}",
                fr.top, fr.bottom, top, bottom
            )));
        }
        Ok(())
    }

    /// The identity 2-cell on a composite.
    pub fn identity<D>(d: &D, tree: HTree<O, H>) -> Result<Self>
    where
        D: DoubleCategory<Obj = O, HCell = H, Sq = S>,
    {
        let v = tree.value(d)?;
        Ok(Globular { src: tree.clone(), tgt: tree, cell: d.sq_id(&v) })
    }

    pub fn inverse<D>(&self, d: &D) -> Result<Self>
    where
        D: DoubleCategory<Obj = O, HCell = H, Sq = S>,
    {
        let cell = d.sq_inverse(&self.cell).ok_or_else(|| CellError::NotInvertible("2-cell".into()))?;
        Ok(Globular { src: self.tgt.clone(), tgt: self.src.clone(), cell })
    }

    /// Vertical composite `self` then `next`, rebracketing in between.
    pub fn then<D>(&self, d: &D, next: &Self) -> Result<Self>
    where
        D: DoubleCategory<Obj = O, HCell = H, Sq = S>,
    {
        let bridge = crate::htree::canonical_constraint(d, &self.tgt, &next.src)?;
        let cell = d.compose_v_all(&[self.cell.clone(), bridge, next.cell.clone()])?;
        Ok(Globular { src: self.src.clone(), tgt: next.tgt.clone(), cell })
    }

    /// Horizontal composite `self` followed by `next`.
    pub fn beside<D>(&self, d: &D, next: &Self) -> Result<Self>
    where
        D: DoubleCategory<Obj = O, HCell = H, Sq = S>,
    {
        let cell = d.compose_h(&self.cell, &next.cell)?;
        Ok(Globular {
            src: HTree::node(self.src.clone(), next.src.clone()),
            tgt: HTree::node(self.tgt.clone(), next.tgt.clone()),
            cell,
        })
    }
}

/// A flat word of 1-cells starting at a given object.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word<O, H> {
    pub start: O,
    pub cells: Vec<H>,
}

impl<O: Clone + PartialEq + std::fmt::Debug, H: Clone + PartialEq + std::fmt::Debug> Word<O, H> {
    pub fn new(start: O, cells: Vec<H>) -> Self {
        Word { start, cells }
    }

    pub fn tree(&self) -> HTree<O, H> {
        HTree::from_leaves(self.start.clone(), self.cells.iter().cloned())
    }

    /// The object sitting just before position `i`.
    pub fn object_at<D>(&self, d: &D, i: usize) -> O
    where
        D: DoubleCategory<Obj = O, HCell = H>,
    {
        if i == 0 {
            self.start.clone()
        } else {
            d.htgt(&self.cells[i - 1])
        }
    }
}

/// One rewriting step: replace the segment at `offset` matching the
/// 2-cell's source by its target.
#[derive(Clone, Debug)]
pub struct Step<O, H, S> {
    pub offset: usize,
    pub cell: Globular<O, H, S>,
    pub label: String,
}

/// A vertical composite of whiskered 2-cells starting from a word.
#[derive(Clone, Debug)]
pub struct WhiskerPath<O, H, S> {
    pub start: Word<O, H>,
    pub steps: Vec<Step<O, H, S>>,
}

impl<O, H, S> WhiskerPath<O, H, S>
where
    O: Clone + PartialEq + std::fmt::Debug,
    H: Clone + PartialEq + std::fmt::Debug,
    S: Clone + std::fmt::Debug,
{
    pub fn new(start: Word<O, H>) -> Self {
        WhiskerPath { start, steps: Vec::new() }
    }

    pub fn step(mut self, offset: usize, label: impl Into<String>, cell: Globular<O, H, S>) -> Self {
        self.steps.push(Step { offset, cell, label: label.into() });
        self
    }

    /// Evaluates to a globular square from the flat composite of the
    /// start word to the flat composite of the final word.
    pub fn eval<D>(&self, d: &D) -> Result<(Word<O, H>, S)>
    where
        D: DoubleCategory<Obj = O, HCell = H, Sq = S>,
    {
        let mut word = self.start.clone();
        let mut acc = d.sq_id(&word.tree().value(d)?);
        for (i, step) in self.steps.iter().enumerate() {
            let tag = format!("step{i}:{}", step.label);
            let (next, sq) = apply_step(d, &word, step).map_err(|e| match e {
                CellError::FrameMismatch { .. } => e.at(&tag),
                other => CellError::frame(format!("{tag}: {other}")),
            })?;
            acc = d.compose_v(&acc, &sq).map_err(|e| e.at(&tag))?;
            word = next;
        }
        Ok((word, acc))
    }
}

fn apply_step<D: DoubleCategory>(
    d: &D,
    word: &Word<D::Obj, D::HCell>,
    step: &Step<D::Obj, D::HCell, D::Sq>,
) -> Result<(Word<D::Obj, D::HCell>, D::Sq)> {
    let src_leaves = step.cell.src.leaves();
    let tgt_leaves = step.cell.tgt.leaves();
    let (lo, hi) = (step.offset, step.offset + src_leaves.len());
    if hi > word.cells.len() || word.cells[lo..hi] != src_leaves[..] {
        return Err(CellError::frame(format!(
            "segment at {lo} is {:?}, 2-cell expects {:?}",
            word.cells.get(lo..hi.min(word.cells.len())),
            src_leaves
        )));
    }
    if word.object_at(d, lo) != step.cell.src.src(d) {
        return Err(CellError::frame(format!("2-cell placed at the wrong object (offset {lo})")));
    }
    step.cell.check(d)?;

    let prefix = &word.cells[..lo];
    let suffix = &word.cells[hi..];
    let end_obj = word.object_at(d, hi);
    let around = |middle: HTreeOf<D>| -> HTreeOf<D> {
        let mut t = middle;
        if !prefix.is_empty() {
            t = HTree::node(HTree::from_leaves(word.start.clone(), prefix.iter().cloned()), t);
        }
        if !suffix.is_empty() {
            t = HTree::node(t, HTree::from_leaves(end_obj.clone(), suffix.iter().cloned()));
        }
        t
    };
    let before = around(step.cell.src.clone());
    let after = around(step.cell.tgt.clone());

    let mut middle = step.cell.cell.clone();
    if !prefix.is_empty() {
        let p = HTree::from_leaves(word.start.clone(), prefix.iter().cloned()).value(d)?;
        middle = d.compose_h(&d.sq_id(&p), &middle)?;
    }
    if !suffix.is_empty() {
        let s = HTree::from_leaves(end_obj.clone(), suffix.iter().cloned()).value(d)?;
        middle = d.compose_h(&middle, &d.sq_id(&s))?;
    }

    let mut cells: Vec<D::HCell> = prefix.to_vec();
    cells.extend(tgt_leaves);
    cells.extend(suffix.iter().cloned());
    let next = Word { start: word.start.clone(), cells };

    let pre = crate::pasting::eval_pasting(d, &canonical_expr(d, &word.tree(), &before)?)?;
    let post = crate::pasting::eval_pasting(d, &canonical_expr(d, &after, &next.tree())?)?;
    Ok((next, d.compose_v_all(&[pre, middle, post])?))
}
