//! The horizontally reversed double category: 1-cells and squares are
//! read right to left, vertical morphisms are unchanged.

use rand::RngCore;

use crate::cell::{DoubleCategory, Enumerable, Frame, FrameOf};
use crate::error::Result;

#[derive(Clone, Debug)]
pub struct HOp<D>(pub D);

fn mirror<H, V>(fr: Frame<H, V>) -> Frame<H, V> {
    Frame { top: fr.top, left: fr.right, right: fr.left, bottom: fr.bottom }
}

impl<D: DoubleCategory> DoubleCategory for HOp<D> {
    type Obj = D::Obj;
    type VMor = D::VMor;
    type HCell = D::HCell;
    type Sq = D::Sq;

    fn vsrc(&self, f: &Self::VMor) -> Self::Obj {
        self.0.vsrc(f)
    }
    fn vtgt(&self, f: &Self::VMor) -> Self::Obj {
        self.0.vtgt(f)
    }
    fn vid(&self, a: &Self::Obj) -> Self::VMor {
        self.0.vid(a)
    }
    fn raw_vcomp(&self, f: &Self::VMor, g: &Self::VMor) -> Result<Self::VMor> {
        self.0.raw_vcomp(f, g)
    }
    fn vinverse(&self, f: &Self::VMor) -> Option<Self::VMor> {
        self.0.vinverse(f)
    }
    fn hsrc(&self, m: &Self::HCell) -> Self::Obj {
        self.0.htgt(m)
    }
    fn htgt(&self, m: &Self::HCell) -> Self::Obj {
        self.0.hsrc(m)
    }
    fn hunit(&self, a: &Self::Obj) -> Self::HCell {
        self.0.hunit(a)
    }
    fn raw_hcomp(&self, m: &Self::HCell, n: &Self::HCell) -> Result<Self::HCell> {
        self.0.hcomp(n, m)
    }
    fn frame(&self, s: &Self::Sq) -> FrameOf<Self> {
        mirror(self.0.frame(s))
    }
    fn sq_id(&self, m: &Self::HCell) -> Self::Sq {
        self.0.sq_id(m)
    }
    fn sq_unit(&self, f: &Self::VMor) -> Self::Sq {
        self.0.sq_unit(f)
    }
    fn raw_sq_vcomp(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
        self.0.compose_v(a, b)
    }
    fn raw_sq_hcomp(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
        self.0.compose_h(b, a)
    }
    fn raw_assoc(&self, m: &Self::HCell, n: &Self::HCell, p: &Self::HCell) -> Result<Self::Sq> {
        self.0.assoc_inv(p, n, m)
    }
    fn raw_lunit(&self, m: &Self::HCell) -> Result<Self::Sq> {
        self.0.runit(m)
    }
    fn raw_runit(&self, m: &Self::HCell) -> Result<Self::Sq> {
        self.0.lunit(m)
    }
    fn sq_inverse(&self, s: &Self::Sq) -> Option<Self::Sq> {
        self.0.sq_inverse(s)
    }
    fn sq_eq(&self, a: &Self::Sq, b: &Self::Sq) -> bool {
        self.0.sq_eq(a, b)
    }
}

impl<D: Enumerable> Enumerable for HOp<D> {
    fn objects(&self) -> Vec<Self::Obj> {
        self.0.objects()
    }
    fn vmors_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::VMor> {
        self.0.vmors_between(a, b)
    }
    fn hcells_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::HCell> {
        self.0.hcells_between(b, a)
    }
    fn squares_in_frame(&self, frame: &FrameOf<Self>) -> Vec<Self::Sq> {
        self.0.squares_in_frame(&mirror(frame.clone()))
    }
    fn sample_square_below(
        &self,
        top: &Self::HCell,
        left: &Self::VMor,
        right: &Self::VMor,
        rng: &mut dyn RngCore,
    ) -> Option<Self::Sq> {
        self.0.sample_square_below(top, right, left, rng)
    }
}
