//! Products of double categories and the one-cell terminal model.

use rand::RngCore;

use crate::cell::{DoubleCategory, Enumerable, Frame, FrameOf};
use crate::error::Result;

/// Componentwise product `D1 x D2`.
#[derive(Clone, Debug)]
pub struct ProductModel<D1, D2>(pub D1, pub D2);

fn split<H1, H2, V1, V2>(fr: &Frame<(H1, H2), (V1, V2)>) -> (Frame<H1, V1>, Frame<H2, V2>)
where
    H1: Clone,
    H2: Clone,
    V1: Clone,
    V2: Clone,
{
    (
        Frame { top: fr.top.0.clone(), left: fr.left.0.clone(), right: fr.right.0.clone(), bottom: fr.bottom.0.clone() },
        Frame { top: fr.top.1.clone(), left: fr.left.1.clone(), right: fr.right.1.clone(), bottom: fr.bottom.1.clone() },
    )
}

impl<D1: DoubleCategory, D2: DoubleCategory> DoubleCategory for ProductModel<D1, D2> {
    type Obj = (D1::Obj, D2::Obj);
    type VMor = (D1::VMor, D2::VMor);
    type HCell = (D1::HCell, D2::HCell);
    type Sq = (D1::Sq, D2::Sq);

    fn vsrc(&self, f: &Self::VMor) -> Self::Obj {
        (self.0.vsrc(&f.0), self.1.vsrc(&f.1))
    }
    fn vtgt(&self, f: &Self::VMor) -> Self::Obj {
        (self.0.vtgt(&f.0), self.1.vtgt(&f.1))
    }
    fn vid(&self, a: &Self::Obj) -> Self::VMor {
        (self.0.vid(&a.0), self.1.vid(&a.1))
    }
    fn raw_vcomp(&self, f: &Self::VMor, g: &Self::VMor) -> Result<Self::VMor> {
        Ok((self.0.vcomp(&f.0, &g.0)?, self.1.vcomp(&f.1, &g.1)?))
    }
    fn vinverse(&self, f: &Self::VMor) -> Option<Self::VMor> {
        Some((self.0.vinverse(&f.0)?, self.1.vinverse(&f.1)?))
    }
    fn hsrc(&self, m: &Self::HCell) -> Self::Obj {
        (self.0.hsrc(&m.0), self.1.hsrc(&m.1))
    }
    fn htgt(&self, m: &Self::HCell) -> Self::Obj {
        (self.0.htgt(&m.0), self.1.htgt(&m.1))
    }
    fn hunit(&self, a: &Self::Obj) -> Self::HCell {
        (self.0.hunit(&a.0), self.1.hunit(&a.1))
    }
    fn raw_hcomp(&self, m: &Self::HCell, n: &Self::HCell) -> Result<Self::HCell> {
        Ok((self.0.hcomp(&m.0, &n.0)?, self.1.hcomp(&m.1, &n.1)?))
    }
    fn frame(&self, s: &Self::Sq) -> FrameOf<Self> {
        let (a, b) = (self.0.frame(&s.0), self.1.frame(&s.1));
        Frame {
            top: (a.top, b.top),
            left: (a.left, b.left),
            right: (a.right, b.right),
            bottom: (a.bottom, b.bottom),
        }
    }
    fn sq_id(&self, m: &Self::HCell) -> Self::Sq {
        (self.0.sq_id(&m.0), self.1.sq_id(&m.1))
    }
    fn sq_unit(&self, f: &Self::VMor) -> Self::Sq {
        (self.0.sq_unit(&f.0), self.1.sq_unit(&f.1))
    }
    fn raw_sq_vcomp(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
        Ok((self.0.compose_v(&a.0, &b.0)?, self.1.compose_v(&a.1, &b.1)?))
    }
    fn raw_sq_hcomp(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
        Ok((self.0.compose_h(&a.0, &b.0)?, self.1.compose_h(&a.1, &b.1)?))
    }
    fn raw_assoc(&self, m: &Self::HCell, n: &Self::HCell, p: &Self::HCell) -> Result<Self::Sq> {
        Ok((self.0.assoc(&m.0, &n.0, &p.0)?, self.1.assoc(&m.1, &n.1, &p.1)?))
    }
    fn raw_lunit(&self, m: &Self::HCell) -> Result<Self::Sq> {
        Ok((self.0.lunit(&m.0)?, self.1.lunit(&m.1)?))
    }
    fn raw_runit(&self, m: &Self::HCell) -> Result<Self::Sq> {
        Ok((self.0.runit(&m.0)?, self.1.runit(&m.1)?))
    }
    fn sq_inverse(&self, s: &Self::Sq) -> Option<Self::Sq> {
        Some((self.0.sq_inverse(&s.0)?, self.1.sq_inverse(&s.1)?))
    }
    fn sq_eq(&self, a: &Self::Sq, b: &Self::Sq) -> bool {
        self.0.sq_eq(&a.0, &b.0) && self.1.sq_eq(&a.1, &b.1)
    }
}

impl<D1: Enumerable, D2: Enumerable> Enumerable for ProductModel<D1, D2> {
    fn objects(&self) -> Vec<Self::Obj> {
        let bs = self.1.objects();
        self.0.objects().into_iter().flat_map(|a| bs.iter().map(move |b| (a.clone(), b.clone()))).collect()
    }
    fn vmors_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::VMor> {
        let gs = self.1.vmors_between(&a.1, &b.1);
        self.0.vmors_between(&a.0, &b.0).into_iter().flat_map(|f| gs.iter().map(move |g| (f.clone(), g.clone()))).collect()
    }
    fn hcells_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::HCell> {
        let ns = self.1.hcells_between(&a.1, &b.1);
        self.0.hcells_between(&a.0, &b.0).into_iter().flat_map(|m| ns.iter().map(move |n| (m.clone(), n.clone()))).collect()
    }
    fn squares_in_frame(&self, frame: &FrameOf<Self>) -> Vec<Self::Sq> {
        let (f0, f1) = split(frame);
        let ts = self.1.squares_in_frame(&f1);
        self.0.squares_in_frame(&f0).into_iter().flat_map(|s| ts.iter().map(move |t| (s.clone(), t.clone()))).collect()
    }
    fn sample_square_below(
        &self,
        top: &Self::HCell,
        left: &Self::VMor,
        right: &Self::VMor,
        rng: &mut dyn RngCore,
    ) -> Option<Self::Sq> {
        let a = self.0.sample_square_below(&top.0, &left.0, &right.0, rng)?;
        let b = self.1.sample_square_below(&top.1, &left.1, &right.1, rng)?;
        Some((a, b))
    }
}

/// The terminal double category: one cell of each kind.
#[derive(Clone, Copy, Debug, Default)]
pub struct Terminal;

impl DoubleCategory for Terminal {
    type Obj = ();
    type VMor = ();
    type HCell = ();
    type Sq = ();

    fn vsrc(&self, _: &()) {}
    fn vtgt(&self, _: &()) {}
    fn vid(&self, _: &()) {}
    fn raw_vcomp(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn vinverse(&self, _: &()) -> Option<()> {
        Some(())
    }
    fn hsrc(&self, _: &()) {}
    fn htgt(&self, _: &()) {}
    fn hunit(&self, _: &()) {}
    fn raw_hcomp(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn frame(&self, _: &()) -> FrameOf<Self> {
        Frame { top: (), left: (), right: (), bottom: () }
    }
    fn sq_id(&self, _: &()) {}
    fn sq_unit(&self, _: &()) {}
    fn raw_sq_vcomp(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn raw_sq_hcomp(&self, _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn raw_assoc(&self, _: &(), _: &(), _: &()) -> Result<()> {
        Ok(())
    }
    fn raw_lunit(&self, _: &()) -> Result<()> {
        Ok(())
    }
    fn raw_runit(&self, _: &()) -> Result<()> {
        Ok(())
    }
    fn sq_inverse(&self, _: &()) -> Option<()> {
        Some(())
    }
}

impl Enumerable for Terminal {
    fn objects(&self) -> Vec<()> {
        vec![()]
    }
    fn vmors_between(&self, _: &(), _: &()) -> Vec<()> {
        vec![()]
    }
    fn hcells_between(&self, _: &(), _: &()) -> Vec<()> {
        vec![()]
    }
    fn squares_in_frame(&self, _: &FrameOf<Self>) -> Vec<()> {
        vec![()]
    }
}
