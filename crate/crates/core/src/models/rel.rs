//! Finite sets, functions and relations.
//!
//! A square `(f, g): M => N` exists (uniquely) iff every related pair
//! `(a, b)` of `M` is sent into `N`. Relational composition is strictly
//! associative and unital, so associators and unitors are identity squares.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, RngCore};

use crate::cell::{DoubleCategory, Enumerable, Frame, FrameOf};
use crate::error::{CellError, Result};
use crate::finset::{FinSet, Func};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Relation {
    pub src: FinSet,
    pub tgt: FinSet,
    /// Sorted, without duplicates.
    pub pairs: Arc<[(u32, u32)]>,
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}-|->{:?}{:?}", self.src, self.tgt, &*self.pairs)
    }
}

impl Relation {
    pub fn new(src: FinSet, tgt: FinSet, pairs: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut v: Vec<_> = pairs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        assert!(v.iter().all(|&(a, b)| a < src.card() && b < tgt.card()), "pair out of range");
        Relation { src, tgt, pairs: v.into() }
    }

    pub fn contains(&self, a: u32, b: u32) -> bool {
        self.pairs.binary_search(&(a, b)).is_ok()
    }

    pub fn diagonal(a: &FinSet) -> Self {
        Relation::new(a.clone(), a.clone(), (0..a.card()).map(|i| (i, i)))
    }

    pub fn graph(f: &Func) -> Self {
        Relation::new(f.src.clone(), f.tgt.clone(), (0..f.src.card()).map(|i| (i, f.apply(i))))
    }

    pub fn transpose(&self) -> Self {
        Relation::new(self.tgt.clone(), self.src.clone(), self.pairs.iter().map(|&(a, b)| (b, a)))
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &Relation) -> Relation {
        let mut out = Vec::new();
        for &(a, b) in self.pairs.iter() {
            let from = next.pairs.partition_point(|&(x, _)| x < b);
            out.extend(next.pairs[from..].iter().take_while(|&&(x, _)| x == b).map(|&(_, c)| (a, c)));
        }
        Relation::new(self.src.clone(), next.tgt.clone(), out)
    }

    /// Cartesian product of relations, lexicographic encoding.
    pub fn product(m: &Relation, n: &Relation) -> Relation {
        let src = FinSet::product(&m.src, &n.src);
        let tgt = FinSet::product(&m.tgt, &n.tgt);
        let mut out = Vec::new();
        for &(a, b) in m.pairs.iter() {
            for &(c, d) in n.pairs.iter() {
                out.push((FinSet::pair_index(&m.src, &n.src, a, c), FinSet::pair_index(&m.tgt, &n.tgt, b, d)));
            }
        }
        Relation::new(src, tgt, out)
    }

    /// Is `(f x g)(self)` contained in `other`?
    pub fn maps_into(&self, f: &Func, g: &Func, other: &Relation) -> bool {
        self.pairs.iter().all(|&(a, b)| other.contains(f.apply(a), g.apply(b)))
    }

    pub fn all(src: &FinSet, tgt: &FinSet) -> Vec<Relation> {
        let cells: Vec<(u32, u32)> =
            (0..src.card()).flat_map(|a| (0..tgt.card()).map(move |b| (a, b))).collect();
        let n = cells.len();
        assert!(n < 20, "relation universe too large");
        (0u32..(1 << n))
            .map(|mask| {
                Relation::new(
                    src.clone(),
                    tgt.clone(),
                    cells.iter().enumerate().filter(|(i, _)| mask & (1 << i) != 0).map(|(_, &p)| p),
                )
            })
            .collect()
    }
}

/// A square of the relation model; it exists only if its frame is valid.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RelSquare(pub Frame<Relation, Func>);

impl fmt::Debug for RelSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?} ={:?},{:?}=> {:?}]", self.0.top, self.0.left, self.0.right, self.0.bottom)
    }
}

/// Relations between finite sets. `max_size` bounds the atomic sets used
/// for enumeration; products of any size are supported by the operations.
#[derive(Clone, Debug)]
pub struct RelModel {
    pub max_size: u32,
}

impl RelModel {
    pub fn new(max_size: u32) -> Self {
        RelModel { max_size }
    }

    pub fn square(&self, frame: Frame<Relation, Func>) -> Result<RelSquare> {
        let ok = frame.left.src == frame.top.src
            && frame.right.src == frame.top.tgt
            && frame.left.tgt == frame.bottom.src
            && frame.right.tgt == frame.bottom.tgt
            && frame.top.maps_into(&frame.left, &frame.right, &frame.bottom);
        if ok {
            Ok(RelSquare(frame))
        } else {
            Err(CellError::frame(format!("no relation square with frame {frame:?}")))
        }
    }
}

impl DoubleCategory for RelModel {
    type Obj = FinSet;
    type VMor = Func;
    type HCell = Relation;
    type Sq = RelSquare;

    fn vsrc(&self, f: &Func) -> FinSet {
        f.src.clone()
    }
    fn vtgt(&self, f: &Func) -> FinSet {
        f.tgt.clone()
    }
    fn vid(&self, a: &FinSet) -> Func {
        Func::identity(a)
    }
    fn raw_vcomp(&self, f: &Func, g: &Func) -> Result<Func> {
        f.then(g).ok_or_else(|| CellError::frame("functions do not compose"))
    }
    fn vinverse(&self, f: &Func) -> Option<Func> {
        f.inverse()
    }
    fn hsrc(&self, m: &Relation) -> FinSet {
        m.src.clone()
    }
    fn htgt(&self, m: &Relation) -> FinSet {
        m.tgt.clone()
    }
    fn hunit(&self, a: &FinSet) -> Relation {
        Relation::diagonal(a)
    }
    fn raw_hcomp(&self, m: &Relation, n: &Relation) -> Result<Relation> {
        Ok(m.compose(n))
    }
    fn frame(&self, s: &RelSquare) -> FrameOf<Self> {
        s.0.clone()
    }
    fn sq_id(&self, m: &Relation) -> RelSquare {
        RelSquare(self.globular_frame(m, m))
    }
    fn sq_unit(&self, f: &Func) -> RelSquare {
        RelSquare(Frame {
            top: Relation::diagonal(&f.src),
            left: f.clone(),
            right: f.clone(),
            bottom: Relation::diagonal(&f.tgt),
        })
    }
    fn raw_sq_vcomp(&self, a: &RelSquare, b: &RelSquare) -> Result<RelSquare> {
        Ok(RelSquare(Frame {
            top: a.0.top.clone(),
            left: self.vcomp(&a.0.left, &b.0.left)?,
            right: self.vcomp(&a.0.right, &b.0.right)?,
            bottom: b.0.bottom.clone(),
        }))
    }
    fn raw_sq_hcomp(&self, a: &RelSquare, b: &RelSquare) -> Result<RelSquare> {
        Ok(RelSquare(Frame {
            top: self.hcomp(&a.0.top, &b.0.top)?,
            left: a.0.left.clone(),
            right: b.0.right.clone(),
            bottom: self.hcomp(&a.0.bottom, &b.0.bottom)?,
        }))
    }
    fn raw_assoc(&self, m: &Relation, n: &Relation, p: &Relation) -> Result<RelSquare> {
        let top = m.compose(n).compose(p);
        let bottom = m.compose(&n.compose(p));
        self.square(self.globular_frame(&top, &bottom))
    }
    fn raw_lunit(&self, m: &Relation) -> Result<RelSquare> {
        let top = Relation::diagonal(&m.src).compose(m);
        self.square(self.globular_frame(&top, m))
    }
    fn raw_runit(&self, m: &Relation) -> Result<RelSquare> {
        let top = m.compose(&Relation::diagonal(&m.tgt));
        self.square(self.globular_frame(&top, m))
    }
    fn sq_inverse(&self, s: &RelSquare) -> Option<RelSquare> {
        let fr = &s.0;
        let frame = Frame {
            top: fr.bottom.clone(),
            left: fr.left.inverse()?,
            right: fr.right.inverse()?,
            bottom: fr.top.clone(),
        };
        self.square(frame).ok()
    }
}

impl Enumerable for RelModel {
    fn objects(&self) -> Vec<FinSet> {
        (0..=self.max_size).map(FinSet::atom).collect()
    }
    fn vmors_between(&self, a: &FinSet, b: &FinSet) -> Vec<Func> {
        Func::all(a, b)
    }
    fn hcells_between(&self, a: &FinSet, b: &FinSet) -> Vec<Relation> {
        Relation::all(a, b)
    }
    fn squares_in_frame(&self, frame: &FrameOf<Self>) -> Vec<RelSquare> {
        self.square(frame.clone()).into_iter().collect()
    }
    fn sample_square_below(&self, top: &Relation, left: &Func, right: &Func, rng: &mut dyn RngCore) -> Option<RelSquare> {
        let (c, d) = (left.tgt.clone(), right.tgt.clone());
        let mut pairs: Vec<(u32, u32)> = top.pairs.iter().map(|&(a, b)| (left.apply(a), right.apply(b))).collect();
        for x in 0..c.card() {
            for y in 0..d.card() {
                if rng.gen_bool(0.3) {
                    pairs.push((x, y));
                }
            }
        }
        let bottom = Relation::new(c, d, pairs);
        self.square(Frame { top: top.clone(), left: left.clone(), right: right.clone(), bottom }).ok()
    }
}

impl crate::monoidal::Monoidal for RelModel {
    fn unit_obj(&self) -> FinSet {
        FinSet::unit()
    }
    fn tensor_obj(&self, a: &FinSet, b: &FinSet) -> FinSet {
        FinSet::product(a, b)
    }
    fn tensor_vmor(&self, f: &Func, g: &Func) -> Func {
        Func::product(f, g)
    }
    fn tensor_hcell(&self, m: &Relation, n: &Relation) -> Relation {
        Relation::product(m, n)
    }
    fn tensor_sq(&self, a: &RelSquare, b: &RelSquare) -> Result<RelSquare> {
        let (fa, fb) = (&a.0, &b.0);
        self.square(Frame {
            top: Relation::product(&fa.top, &fb.top),
            left: Func::product(&fa.left, &fb.left),
            right: Func::product(&fa.right, &fb.right),
            bottom: Relation::product(&fa.bottom, &fb.bottom),
        })
    }
    fn interchanger(&self, m1: &Relation, n1: &Relation, m2: &Relation, n2: &Relation) -> Result<RelSquare> {
        let top = Relation::product(m1, n1).compose(&Relation::product(m2, n2));
        let bottom = Relation::product(&m1.compose(m2), &n1.compose(n2));
        self.square(self.globular_frame(&top, &bottom))
    }
    fn unit_comparison(&self, a: &FinSet, b: &FinSet) -> Result<RelSquare> {
        let top = Relation::diagonal(&FinSet::product(a, b));
        let bottom = Relation::product(&Relation::diagonal(a), &Relation::diagonal(b));
        self.square(self.globular_frame(&top, &bottom))
    }
    fn assoc_vmor(&self, a: &FinSet, b: &FinSet, c: &FinSet) -> Func {
        Func::associator(a, b, c)
    }
    fn assoc_sq(&self, m: &Relation, n: &Relation, p: &Relation) -> Result<RelSquare> {
        self.square(Frame {
            top: Relation::product(&Relation::product(m, n), p),
            left: Func::associator(&m.src, &n.src, &p.src),
            right: Func::associator(&m.tgt, &n.tgt, &p.tgt),
            bottom: Relation::product(m, &Relation::product(n, p)),
        })
    }
    fn lunitor_vmor(&self, a: &FinSet) -> Func {
        Func::left_unitor(a)
    }
    fn lunitor_sq(&self, m: &Relation) -> Result<RelSquare> {
        self.square(Frame {
            top: Relation::product(&Relation::diagonal(&FinSet::unit()), m),
            left: Func::left_unitor(&m.src),
            right: Func::left_unitor(&m.tgt),
            bottom: m.clone(),
        })
    }
    fn runitor_vmor(&self, a: &FinSet) -> Func {
        Func::right_unitor(a)
    }
    fn runitor_sq(&self, m: &Relation) -> Result<RelSquare> {
        self.square(Frame {
            top: Relation::product(m, &Relation::diagonal(&FinSet::unit())),
            left: Func::right_unitor(&m.src),
            right: Func::right_unitor(&m.tgt),
            bottom: m.clone(),
        })
    }
}

impl crate::monoidal::Braided for RelModel {
    fn braid_vmor(&self, a: &FinSet, b: &FinSet) -> Func {
        Func::swap(a, b)
    }
    fn braid_sq(&self, m: &Relation, n: &Relation) -> Result<RelSquare> {
        self.square(Frame {
            top: Relation::product(m, n),
            left: Func::swap(&m.src, &n.src),
            right: Func::swap(&m.tgt, &n.tgt),
            bottom: Relation::product(n, m),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32) -> FinSet {
        FinSet::atom(n)
    }

    #[test]
    fn vertical_composite_of_unique_squares() {
        // Containment oracle: (hf(a), kg(b)) in P for all (a, b) in M.
        let m = RelModel::new(2);
        let mrel = Relation::new(s(2), s(2), [(0, 1), (1, 1)]);
        let f = Func::new(s(2), s(1), vec![0, 0]);
        let g = Func::new(s(2), s(2), vec![1, 0]);
        let n = Relation::new(s(1), s(2), [(0, 0)]);
        let h = Func::new(s(1), s(2), vec![1]);
        let k = Func::new(s(2), s(1), vec![0, 0]);
        let p = Relation::new(s(2), s(1), [(1, 0)]);
        let a = m.square(Frame { top: mrel.clone(), left: f.clone(), right: g.clone(), bottom: n }).unwrap();
        let b = m.square(Frame { top: a.0.bottom.clone(), left: h.clone(), right: k.clone(), bottom: p.clone() }).unwrap();
        let c = m.compose_v(&a, &b).unwrap();
        let hf = f.then(&h).unwrap();
        let kg = g.then(&k).unwrap();
        assert!(mrel.pairs.iter().all(|&(x, y)| p.contains(hf.apply(x), kg.apply(y))));
        assert_eq!(c, RelSquare(Frame { top: mrel, left: hf, right: kg, bottom: p }));
    }

    #[test]
    fn identity_square_composes_to_itself() {
        let m = RelModel::new(2);
        let r = Relation::new(s(2), s(1), [(0, 0)]);
        let one = m.sq_id(&r);
        assert_eq!(m.compose_v(&one, &one).unwrap(), one);
    }

    #[test]
    fn horizontal_composite_lands_on_relational_composite() {
        let m = RelModel::new(2);
        let r1 = Relation::new(s(2), s(2), [(0, 1)]);
        let r2 = Relation::new(s(2), s(1), [(1, 0)]);
        let id2 = Func::identity(&s(2));
        let id1 = Func::identity(&s(1));
        let a = m.square(Frame { top: r1.clone(), left: id2.clone(), right: id2.clone(), bottom: Relation::new(s(2), s(2), [(0, 1), (1, 1)]) }).unwrap();
        let b = m.square(Frame { top: r2.clone(), left: id2.clone(), right: id1, bottom: r2.clone() }).unwrap();
        let c = m.compose_h(&a, &b).unwrap();
        assert_eq!(c.0.top, r1.compose(&r2));
        assert!(c.0.top.maps_into(&c.0.left, &c.0.right, &c.0.bottom));
    }

    #[test]
    fn missing_square_is_rejected() {
        let m = RelModel::new(1);
        let full = Relation::new(s(1), s(1), [(0, 0)]);
        let empty = Relation::new(s(1), s(1), []);
        let id = Func::identity(&s(1));
        assert!(m.square(Frame { top: full, left: id.clone(), right: id, bottom: empty }).is_err());
    }
}
