//! The double-category interface every model implements.
//!
//! Conventions used throughout the crate:
//!
//! * Composition is written in diagrammatic order. `vcomp(f, g)` is "`f`
//!   then `g`", `hcomp(m, n)` is the 1-cell `m` followed by `n`, so for
//!   `m: A -|-> B` and `n: B -|-> C` it is `n ⊙ m` in the usual notation.
//! * `compose_v(a, b)` stacks `b` below `a`; `compose_h(a, b)` puts `b` to
//!   the right of `a`.
//! * `assoc(m, n, p): (m;n);p -> m;(n;p)`.
//! * `lunit(m): U_A;m -> m` for `m: A -|-> B` (the unit sits at the source
//!   end), `runit(m): m;U_B -> m`.

use std::fmt::Debug;
use std::hash::Hash;

use rand::RngCore;

use crate::error::{CellError, Result};

pub trait Cell: Clone + Eq + Hash + Debug {}
impl<T: Clone + Eq + Hash + Debug> Cell for T {}

/// The boundary of a square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Frame<H, V> {
    pub top: H,
    pub left: V,
    pub right: V,
    pub bottom: H,
}

pub type FrameOf<D> = Frame<<D as DoubleCategory>::HCell, <D as DoubleCategory>::VMor>;

pub trait DoubleCategory {
    type Obj: Cell;
    type VMor: Cell;
    type HCell: Cell;
    type Sq: Cell;

    fn vsrc(&self, f: &Self::VMor) -> Self::Obj;
    fn vtgt(&self, f: &Self::VMor) -> Self::Obj;
    fn vid(&self, a: &Self::Obj) -> Self::VMor;
    /// `f` then `g`; callers guarantee `vtgt(f) == vsrc(g)`.
    fn raw_vcomp(&self, f: &Self::VMor, g: &Self::VMor) -> Result<Self::VMor>;
    fn vinverse(&self, f: &Self::VMor) -> Option<Self::VMor>;

    fn hsrc(&self, m: &Self::HCell) -> Self::Obj;
    fn htgt(&self, m: &Self::HCell) -> Self::Obj;
    fn hunit(&self, a: &Self::Obj) -> Self::HCell;
    /// `m` then `n`; callers guarantee `htgt(m) == hsrc(n)`.
    fn raw_hcomp(&self, m: &Self::HCell, n: &Self::HCell) -> Result<Self::HCell>;

    fn frame(&self, s: &Self::Sq) -> FrameOf<Self>;
    /// `1_M`.
    fn sq_id(&self, m: &Self::HCell) -> Self::Sq;
    /// `U_f`.
    fn sq_unit(&self, f: &Self::VMor) -> Self::Sq;
    fn raw_sq_vcomp(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq>;
    fn raw_sq_hcomp(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq>;

    fn raw_assoc(&self, m: &Self::HCell, n: &Self::HCell, p: &Self::HCell) -> Result<Self::Sq>;
    fn raw_lunit(&self, m: &Self::HCell) -> Result<Self::Sq>;
    fn raw_runit(&self, m: &Self::HCell) -> Result<Self::Sq>;

    /// Vertical inverse of a square whose vertical sides are invertible.
    fn sq_inverse(&self, s: &Self::Sq) -> Option<Self::Sq>;

    fn sq_eq(&self, a: &Self::Sq, b: &Self::Sq) -> bool {
        a == b
    }

    // Checked operations.

    fn vcomp(&self, f: &Self::VMor, g: &Self::VMor) -> Result<Self::VMor> {
        if self.vtgt(f) != self.vsrc(g) {
            return Err(CellError::frame(format!("vertical morphisms {f:?} and {g:?} do not compose")));
        }
        self.raw_vcomp(f, g)
    }

    fn hcomp(&self, m: &Self::HCell, n: &Self::HCell) -> Result<Self::HCell> {
        if self.htgt(m) != self.hsrc(n) {
            return Err(CellError::frame(format!("1-cells {m:?} and {n:?} do not compose")));
        }
        self.raw_hcomp(m, n)
    }

    /// `a` above `b`.
    fn compose_v(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
        let (fa, fb) = (self.frame(a), self.frame(b));
        if fa.bottom != fb.top {
            return Err(CellError::frame(format!(
                "bottom {:?} does not match top {:?}",
                fa.bottom, fb.top
            )));
        }
        self.raw_sq_vcomp(a, b)
    }

    /// `a` to the left of `b`.
    fn compose_h(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
        let (fa, fb) = (self.frame(a), self.frame(b));
        if fa.right != fb.left {
            return Err(CellError::frame(format!(
                "right side {:?} does not match left side {:?}",
                fa.right, fb.left
            )));
        }
        self.raw_sq_hcomp(a, b)
    }

    fn assoc(&self, m: &Self::HCell, n: &Self::HCell, p: &Self::HCell) -> Result<Self::Sq> {
        if self.htgt(m) != self.hsrc(n) || self.htgt(n) != self.hsrc(p) {
            return Err(CellError::frame(format!("associator on non-composable {m:?}, {n:?}, {p:?}")));
        }
        self.raw_assoc(m, n, p)
    }

    fn assoc_inv(&self, m: &Self::HCell, n: &Self::HCell, p: &Self::HCell) -> Result<Self::Sq> {
        let a = self.assoc(m, n, p)?;
        self.sq_inverse(&a).ok_or_else(|| CellError::NotInvertible(format!("associator {a:?}")))
    }

    fn lunit(&self, m: &Self::HCell) -> Result<Self::Sq> {
        self.raw_lunit(m)
    }

    fn lunit_inv(&self, m: &Self::HCell) -> Result<Self::Sq> {
        let a = self.lunit(m)?;
        self.sq_inverse(&a).ok_or_else(|| CellError::NotInvertible(format!("unitor {a:?}")))
    }

    fn runit(&self, m: &Self::HCell) -> Result<Self::Sq> {
        self.raw_runit(m)
    }

    fn runit_inv(&self, m: &Self::HCell) -> Result<Self::Sq> {
        let a = self.runit(m)?;
        self.sq_inverse(&a).ok_or_else(|| CellError::NotInvertible(format!("unitor {a:?}")))
    }

    fn is_globular(&self, s: &Self::Sq) -> bool {
        let fr = self.frame(s);
        let (a, b) = (self.vsrc(&fr.left), self.vsrc(&fr.right));
        fr.left == self.vid(&a) && fr.right == self.vid(&b)
    }

    /// The frame of a globular square `top => bottom`.
    fn globular_frame(&self, top: &Self::HCell, bottom: &Self::HCell) -> FrameOf<Self> {
        Frame {
            top: top.clone(),
            left: self.vid(&self.hsrc(top)),
            right: self.vid(&self.htgt(top)),
            bottom: bottom.clone(),
        }
    }

    /// Compose a nonempty list of squares vertically.
    fn compose_v_all(&self, squares: &[Self::Sq]) -> Result<Self::Sq> {
        let (first, rest) = squares.split_first().ok_or_else(|| CellError::frame("empty vertical composite"))?;
        let mut acc = first.clone();
        for (i, s) in rest.iter().enumerate() {
            acc = self.compose_v(&acc, s).map_err(|e| e.at(&format!("vstep{}", i + 1)))?;
        }
        Ok(acc)
    }

    /// Compose a nonempty list of squares horizontally, bracketed to the left.
    fn compose_h_all(&self, squares: &[Self::Sq]) -> Result<Self::Sq> {
        let (first, rest) = squares.split_first().ok_or_else(|| CellError::frame("empty horizontal composite"))?;
        let mut acc = first.clone();
        for (i, s) in rest.iter().enumerate() {
            acc = self.compose_h(&acc, s).map_err(|e| e.at(&format!("hstep{}", i + 1)))?;
        }
        Ok(acc)
    }
}

/// A model whose cells can be enumerated within its configured bounds.
pub trait Enumerable: DoubleCategory {
    fn objects(&self) -> Vec<Self::Obj>;
    fn vmors_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::VMor>;
    fn hcells_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::HCell>;
    /// Every square with the given boundary.
    fn squares_in_frame(&self, frame: &FrameOf<Self>) -> Vec<Self::Sq>;

    /// A random square with the given top and vertical sides, if one exists.
    fn sample_square_below(
        &self,
        top: &Self::HCell,
        left: &Self::VMor,
        right: &Self::VMor,
        rng: &mut dyn RngCore,
    ) -> Option<Self::Sq> {
        let bottoms = self.hcells_between(&self.vtgt(left), &self.vtgt(right));
        let mut candidates = Vec::new();
        for bottom in bottoms {
            let fr = Frame { top: top.clone(), left: left.clone(), right: right.clone(), bottom };
            candidates.extend(self.squares_in_frame(&fr));
        }
        if candidates.is_empty() {
            None
        } else {
            let i = (rng.next_u64() % candidates.len() as u64) as usize;
            Some(candidates.swap_remove(i))
        }
    }

    fn vmors_from(&self, a: &Self::Obj) -> Vec<Self::VMor> {
        self.objects().iter().flat_map(|b| self.vmors_between(a, b)).collect()
    }

    fn hcells_from(&self, a: &Self::Obj) -> Vec<Self::HCell> {
        self.objects().iter().flat_map(|b| self.hcells_between(a, b)).collect()
    }

    fn all_vmors(&self) -> Vec<Self::VMor> {
        let obs = self.objects();
        obs.iter().flat_map(|a| obs.iter().flat_map(move |b| self.vmors_between(a, b))).collect()
    }

    fn all_hcells(&self) -> Vec<Self::HCell> {
        let obs = self.objects();
        obs.iter().flat_map(|a| obs.iter().flat_map(move |b| self.hcells_between(a, b))).collect()
    }
}

impl<D: DoubleCategory + ?Sized> DoubleCategory for &D {
    type Obj = D::Obj;
    type VMor = D::VMor;
    type HCell = D::HCell;
    type Sq = D::Sq;

    fn vsrc(&self, f: &Self::VMor) -> Self::Obj {
        (**self).vsrc(f)
    }
    fn vtgt(&self, f: &Self::VMor) -> Self::Obj {
        (**self).vtgt(f)
    }
    fn vid(&self, a: &Self::Obj) -> Self::VMor {
        (**self).vid(a)
    }
    fn raw_vcomp(&self, f: &Self::VMor, g: &Self::VMor) -> Result<Self::VMor> {
        (**self).raw_vcomp(f, g)
    }
    fn vinverse(&self, f: &Self::VMor) -> Option<Self::VMor> {
        (**self).vinverse(f)
    }
    fn hsrc(&self, m: &Self::HCell) -> Self::Obj {
        (**self).hsrc(m)
    }
    fn htgt(&self, m: &Self::HCell) -> Self::Obj {
        (**self).htgt(m)
    }
    fn hunit(&self, a: &Self::Obj) -> Self::HCell {
        (**self).hunit(a)
    }
    fn raw_hcomp(&self, m: &Self::HCell, n: &Self::HCell) -> Result<Self::HCell> {
        (**self).raw_hcomp(m, n)
    }
    fn frame(&self, s: &Self::Sq) -> FrameOf<Self> {
        (**self).frame(s)
    }
    fn sq_id(&self, m: &Self::HCell) -> Self::Sq {
        (**self).sq_id(m)
    }
    fn sq_unit(&self, f: &Self::VMor) -> Self::Sq {
        (**self).sq_unit(f)
    }
    fn raw_sq_vcomp(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
        (**self).raw_sq_vcomp(a, b)
    }
    fn raw_sq_hcomp(&self, a: &Self::Sq, b: &Self::Sq) -> Result<Self::Sq> {
        (**self).raw_sq_hcomp(a, b)
    }
    fn raw_assoc(&self, m: &Self::HCell, n: &Self::HCell, p: &Self::HCell) -> Result<Self::Sq> {
        (**self).raw_assoc(m, n, p)
    }
    fn raw_lunit(&self, m: &Self::HCell) -> Result<Self::Sq> {
        (**self).raw_lunit(m)
    }
    fn raw_runit(&self, m: &Self::HCell) -> Result<Self::Sq> {
        (**self).raw_runit(m)
    }
    fn sq_inverse(&self, s: &Self::Sq) -> Option<Self::Sq> {
        (**self).sq_inverse(s)
    }
    fn sq_eq(&self, a: &Self::Sq, b: &Self::Sq) -> bool {
        (**self).sq_eq(a, b)
    }
}

impl<D: Enumerable + ?Sized> Enumerable for &D {
    fn objects(&self) -> Vec<Self::Obj> {
        (**self).objects()
    }
    fn vmors_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::VMor> {
        (**self).vmors_between(a, b)
    }
    fn hcells_between(&self, a: &Self::Obj, b: &Self::Obj) -> Vec<Self::HCell> {
        (**self).hcells_between(a, b)
    }
    fn squares_in_frame(&self, frame: &FrameOf<Self>) -> Vec<Self::Sq> {
        (**self).squares_in_frame(frame)
    }
    fn sample_square_below(
        &self,
        top: &Self::HCell,
        left: &Self::VMor,
        right: &Self::VMor,
        rng: &mut dyn RngCore,
    ) -> Option<Self::Sq> {
        (**self).sample_square_below(top, left, right, rng)
    }
}
