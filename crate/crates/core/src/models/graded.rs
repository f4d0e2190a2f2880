//! A small family of symmetric-or-braided monoidal double categories with
//! cyclic labels, used to generate table fixtures.
//!
//! Objects are `Z_n` under addition. Vertical morphisms and 1-cells are
//! endomorphisms labelled by `Z_v` and `Z_h`; a square is a frame plus a
//! label in `Z_s`. Every composite adds labels. The braiding on `(a, b)`
//! has label `beta * a * b mod v`, which is bilinear when `v | beta * n`,
//! and involutive only when `2 * beta * a * b = 0 mod v` for all `a, b`.

use std::fmt;

use rand::{Rng, RngCore};

use crate::cell::{DoubleCategory, Enumerable, Frame, FrameOf};
use crate::error::{CellError, Result};
use crate::monoidal::{Braided, Monoidal};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GVMor {
    pub obj: u32,
    pub label: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GHCell {
    pub obj: u32,
    pub label: u32,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GSquare {
    pub top: GHCell,
    pub left: GVMor,
    pub right: GVMor,
    pub bottom: GHCell,
    pub label: u32,
}

impl fmt::Debug for GVMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v{}@{}", self.label, self.obj)
    }
}

impl fmt::Debug for GHCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "h{}@{}", self.label, self.obj)
    }
}

impl fmt::Debug for GSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} ={:?},{:?}=> {:?} #{}]", self.top, self.left, self.right, self.bottom, self.label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModel {
    pub objects: u32,
    pub vlabels: u32,
    pub hlabels: u32,
    pub slabels: u32,
    pub beta: u32,
}

impl GradedModel {
    pub fn new(objects: u32, vlabels: u32, hlabels: u32, slabels: u32, beta: u32) -> Result<Self> {
        if objects == 0 || vlabels == 0 || hlabels == 0 || slabels == 0 {
            return Err(CellError::InvalidModel("graded model needs nonempty label groups".into()));
        }
        if (beta as u64 * objects as u64) % vlabels as u64 != 0 {
            return Err(CellError::InvalidModel(format!(
                "braiding form beta={beta} is not well defined on Z_{objects} with values in Z_{vlabels}"
            )));
        }
        Ok(GradedModel { objects, vlabels, hlabels, slabels, beta })
    }

    pub fn vmor(&self, obj: u32, label: u32) -> GVMor {
        GVMor { obj: obj % self.objects, label: label % self.vlabels }
    }

    pub fn hcell(&self, obj: u32, label: u32) -> GHCell {
        GHCell { obj: obj % self.objects, label: label % self.hlabels }
    }

    /// The square with the given frame and label, if the frame is valid.
    pub fn square(&self, top: GHCell, left: GVMor, right: GVMor, bottom: GHCell, label: u32) -> Result<GSquare> {
        let o = top.obj;
        if left.obj != o || right.obj != o || bottom.obj != o {
            return Err(CellError::frame(format!("graded frame spans several objects: {top:?} {left:?} {right:?} {bottom:?}")));
        }
        Ok(GSquare { top, left, right, bottom, label: label % self.slabels })
    }

    fn globular(&self, top: GHCell, bottom: GHCell, label: u32) -> Result<GSquare> {
        let id = self.vmor(top.obj, 0);
        self.square(top, id, id, bottom, label)
    }

    fn neg(x: u32, n: u32) -> u32 {
        (n - x % n) % n
    }

    fn braid_label(&self, a: u32, b: u32) -> u32 {
        ((self.beta as u64 * a as u64 * b as u64) % self.vlabels as u64) as u32
    }
}

impl DoubleCategory for GradedModel {
    type Obj = u32;
    type VMor = GVMor;
    type HCell = GHCell;
    type Sq = GSquare;

    fn vsrc(&self, f: &GVMor) -> u32 {
        f.obj
    }
    fn vtgt(&self, f: &GVMor) -> u32 {
        f.obj
    }
    fn vid(&self, a: &u32) -> GVMor {
        self.vmor(*a, 0)
    }
    fn raw_vcomp(&self, f: &GVMor, g: &GVMor) -> Result<GVMor> {
        Ok(self.vmor(f.obj, f.label + g.label))
    }
    fn vinverse(&self, f: &GVMor) -> Option<GVMor> {
        Some(self.vmor(f.obj, Self::neg(f.label, self.vlabels)))
    }
    fn hsrc(&self, m: &GHCell) -> u32 {
        m.obj
    }
    fn htgt(&self, m: &GHCell) -> u32 {
        m.obj
    }
    fn hunit(&self, a: &u32) -> GHCell {
        self.hcell(*a, 0)
    }
    fn raw_hcomp(&self, m: &GHCell, n: &GHCell) -> Result<GHCell> {
        Ok(self.hcell(m.obj, m.label + n.label))
    }
    fn frame(&self, s: &GSquare) -> FrameOf<Self> {
        Frame { top: s.top, left: s.left, right: s.right, bottom: s.bottom }
    }
    fn sq_id(&self, m: &GHCell) -> GSquare {
        let id = self.vid(&m.obj);
        GSquare { top: *m, left: id, right: id, bottom: *m, label: 0 }
    }
    fn sq_unit(&self, f: &GVMor) -> GSquare {
        let u = self.hunit(&f.obj);
        GSquare { top: u, left: *f, right: *f, bottom: u, label: 0 }
    }
    fn raw_sq_vcomp(&self, a: &GSquare, b: &GSquare) -> Result<GSquare> {
        self.square(
            a.top,
            self.vmor(a.obj(), a.left.label + b.left.label),
            self.vmor(a.obj(), a.right.label + b.right.label),
            b.bottom,
            a.label + b.label,
        )
    }
    fn raw_sq_hcomp(&self, a: &GSquare, b: &GSquare) -> Result<GSquare> {
        self.square(
            self.hcell(a.obj(), a.top.label + b.top.label),
            a.left,
            b.right,
            self.hcell(a.obj(), a.bottom.label + b.bottom.label),
            a.label + b.label,
        )
    }
    fn raw_assoc(&self, m: &GHCell, n: &GHCell, p: &GHCell) -> Result<GSquare> {
        let x = self.hcell(m.obj, m.label + n.label + p.label);
        self.globular(x, x, 0)
    }
    fn raw_lunit(&self, m: &GHCell) -> Result<GSquare> {
        self.globular(*m, *m, 0)
    }
    fn raw_runit(&self, m: &GHCell) -> Result<GSquare> {
        self.globular(*m, *m, 0)
    }
    fn sq_inverse(&self, s: &GSquare) -> Option<GSquare> {
        Some(GSquare {
            top: s.bottom,
            left: self.vinverse(&s.left)?,
            right: self.vinverse(&s.right)?,
            bottom: s.top,
            label: Self::neg(s.label, self.slabels),
        })
    }
}

impl GSquare {
    fn obj(&self) -> u32 {
        self.top.obj
    }
}

impl Enumerable for GradedModel {
    fn objects(&self) -> Vec<u32> {
        (0..self.objects).collect()
    }
    fn vmors_between(&self, a: &u32, b: &u32) -> Vec<GVMor> {
        if a != b {
            return Vec::new();
        }
        (0..self.vlabels).map(|l| self.vmor(*a, l)).collect()
    }
    fn hcells_between(&self, a: &u32, b: &u32) -> Vec<GHCell> {
        if a != b {
            return Vec::new();
        }
        (0..self.hlabels).map(|l| self.hcell(*a, l)).collect()
    }
    fn squares_in_frame(&self, fr: &FrameOf<Self>) -> Vec<GSquare> {
        (0..self.slabels).filter_map(|l| self.square(fr.top, fr.left, fr.right, fr.bottom, l).ok()).collect()
    }
    fn sample_square_below(&self, top: &GHCell, left: &GVMor, right: &GVMor, rng: &mut dyn RngCore) -> Option<GSquare> {
        let bottom = self.hcell(top.obj, rng.gen_range(0..self.hlabels));
        self.square(*top, *left, *right, bottom, rng.gen_range(0..self.slabels)).ok()
    }
}

impl Monoidal for GradedModel {
    fn unit_obj(&self) -> u32 {
        0
    }
    fn tensor_obj(&self, a: &u32, b: &u32) -> u32 {
        (a + b) % self.objects
    }
    fn tensor_vmor(&self, f: &GVMor, g: &GVMor) -> GVMor {
        self.vmor(f.obj + g.obj, f.label + g.label)
    }
    fn tensor_hcell(&self, m: &GHCell, n: &GHCell) -> GHCell {
        self.hcell(m.obj + n.obj, m.label + n.label)
    }
    fn tensor_sq(&self, a: &GSquare, b: &GSquare) -> Result<GSquare> {
        self.square(
            self.tensor_hcell(&a.top, &b.top),
            self.tensor_vmor(&a.left, &b.left),
            self.tensor_vmor(&a.right, &b.right),
            self.tensor_hcell(&a.bottom, &b.bottom),
            a.label + b.label,
        )
    }
    fn interchanger(&self, m1: &GHCell, n1: &GHCell, m2: &GHCell, n2: &GHCell) -> Result<GSquare> {
        let x = self.hcell(m1.obj + n1.obj, m1.label + n1.label + m2.label + n2.label);
        self.globular(x, x, 0)
    }
    fn unit_comparison(&self, a: &u32, b: &u32) -> Result<GSquare> {
        let u = self.hunit(&self.tensor_obj(a, b));
        self.globular(u, u, 0)
    }
    fn assoc_vmor(&self, a: &u32, b: &u32, c: &u32) -> GVMor {
        self.vmor(a + b + c, 0)
    }
    fn assoc_sq(&self, m: &GHCell, n: &GHCell, p: &GHCell) -> Result<GSquare> {
        let x = self.hcell(m.obj + n.obj + p.obj, m.label + n.label + p.label);
        self.globular(x, x, 0)
    }
    fn lunitor_vmor(&self, a: &u32) -> GVMor {
        self.vmor(*a, 0)
    }
    fn lunitor_sq(&self, m: &GHCell) -> Result<GSquare> {
        self.globular(*m, *m, 0)
    }
    fn runitor_vmor(&self, a: &u32) -> GVMor {
        self.vmor(*a, 0)
    }
    fn runitor_sq(&self, m: &GHCell) -> Result<GSquare> {
        self.globular(*m, *m, 0)
    }
}

impl Braided for GradedModel {
    fn braid_vmor(&self, a: &u32, b: &u32) -> GVMor {
        self.vmor(a + b, self.braid_label(*a, *b))
    }
    fn braid_sq(&self, m: &GHCell, n: &GHCell) -> Result<GSquare> {
        let x = self.tensor_hcell(m, n);
        let s = self.vmor(x.obj, self.braid_label(m.obj, n.obj));
        self.square(x, s, s, x, 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoidal::{verify_braided, verify_monoidal, verify_symmetric};
    use crate::report::SampleBudget;
    use crate::verify::verify_double_category;

    #[test]
    fn symmetric_instance_passes_everything() {
        let d = GradedModel::new(1, 1, 2, 3, 0).unwrap();
        let b = SampleBudget::new(200, 1);
        for r in [
            verify_double_category(&d, &b),
            verify_monoidal(&d, &b),
            verify_braided(&d, &b),
            verify_symmetric(&d, &b),
        ] {
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn bilinear_braiding_is_braided_but_not_symmetric() {
        let d = GradedModel::new(3, 3, 1, 1, 1).unwrap();
        let b = SampleBudget::new(200, 1);
        assert!(verify_monoidal(&d, &b).passed());
        assert!(verify_braided(&d, &b).passed());
        let sym = verify_symmetric(&d, &b);
        assert!(!sym.passed());
        assert!(sym.failures().all(|f| f.counterexample.is_some()));
    }

    #[test]
    fn ill_defined_braiding_is_rejected() {
        assert!(GradedModel::new(2, 3, 1, 1, 1).is_err());
    }
}
