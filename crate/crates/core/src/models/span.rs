//! Spans of finite sets.
//!
//! Apex elements carry structured labels recording how they were built, so
//! `(M;N);P` and `M;(N;P)` are different spans and the associator is a
//! genuine (relabeling) isomorphism. Composites use the canonical pullback
//! `{(x, y) | t(x) = s(y)}` in lexicographic order.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, RngCore};
use serde::{Deserialize, Serialize};

use crate::cell::{DoubleCategory, Enumerable, Frame, FrameOf};
use crate::error::{CellError, Result};
use crate::finset::{FinSet, Func};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Label {
    Leaf(u32),
    Comp(Arc<Label>, Arc<Label>),
    Tensor(Arc<Label>, Arc<Label>),
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Leaf(i) => write!(f, "{i}"),
            Label::Comp(a, b) => write!(f, "<{a:?};{b:?}>"),
            Label::Tensor(a, b) => write!(f, "<{a:?}x{b:?}>"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Span {
    pub src: FinSet,
    pub tgt: FinSet,
    pub apex: Arc<[Label]>,
    pub left: Arc<[u32]>,
    pub right: Arc<[u32]>,
}

impl fmt::Debug for Span {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}<-[", self.src)?;
        for (i, l) in self.apex.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{:?}:{}>{}", l, self.left[i], self.right[i])?;
        }
        write!(f, "]->{:?}", self.tgt)
    }
}

impl Span {
    pub fn new(src: FinSet, tgt: FinSet, apex: Vec<Label>, left: Vec<u32>, right: Vec<u32>) -> Self {
        assert!(apex.len() == left.len() && apex.len() == right.len(), "leg length mismatch");
        assert!(left.iter().all(|&a| a < src.card()) && right.iter().all(|&b| b < tgt.card()), "leg out of range");
        Span { src, tgt, apex: apex.into(), left: left.into(), right: right.into() }
    }

    /// A span whose apex is `{0, .., k-1}` with leaf labels.
    pub fn from_legs(src: FinSet, tgt: FinSet, left: Vec<u32>, right: Vec<u32>) -> Self {
        let apex = (0..left.len() as u32).map(Label::Leaf).collect();
        Span::new(src, tgt, apex, left, right)
    }

    pub fn size(&self) -> u32 {
        self.apex.len() as u32
    }

    pub fn identity(a: &FinSet) -> Self {
        let ids: Vec<u32> = (0..a.card()).collect();
        Span::from_legs(a.clone(), a.clone(), ids.clone(), ids)
    }

    /// `(A, 1, f)`.
    pub fn companion_of(f: &Func) -> Self {
        Span::from_legs(f.src.clone(), f.tgt.clone(), (0..f.src.card()).collect(), f.table.to_vec())
    }

    /// `(A, f, 1)`.
    pub fn conjoint_of(f: &Func) -> Self {
        Span::from_legs(f.tgt.clone(), f.src.clone(), f.table.to_vec(), (0..f.src.card()).collect())
    }

    /// Index pairs of the canonical pullback of `self` then `next`.
    pub fn pullback_pairs(&self, next: &Span) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for x in 0..self.size() {
            for y in 0..next.size() {
                if self.right[x as usize] == next.left[y as usize] {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn compose(&self, next: &Span) -> Span {
        let pairs = self.pullback_pairs(next);
        let apex = pairs
            .iter()
            .map(|&(x, y)| Label::Comp(Arc::new(self.apex[x as usize].clone()), Arc::new(next.apex[y as usize].clone())))
            .collect();
        let left = pairs.iter().map(|&(x, _)| self.left[x as usize]).collect();
        let right = pairs.iter().map(|&(_, y)| next.right[y as usize]).collect();
        Span::new(self.src.clone(), next.tgt.clone(), apex, left, right)
    }

    pub fn product(m: &Span, n: &Span) -> Span {
        let src = FinSet::product(&m.src, &n.src);
        let tgt = FinSet::product(&m.tgt, &n.tgt);
        let (mut apex, mut left, mut right) = (Vec::new(), Vec::new(), Vec::new());
        for x in 0..m.size() as usize {
            for y in 0..n.size() as usize {
                apex.push(Label::Tensor(Arc::new(m.apex[x].clone()), Arc::new(n.apex[y].clone())));
                left.push(FinSet::pair_index(&m.src, &n.src, m.left[x], n.left[y]));
                right.push(FinSet::pair_index(&m.tgt, &n.tgt, m.right[x], n.right[y]));
            }
        }
        Span::new(src, tgt, apex, left, right)
    }

    /// Every span `a <- k -> b` with leaf-labelled apex, for `k <= max_apex`.
    pub fn all(a: &FinSet, b: &FinSet, max_apex: u32) -> Vec<Span> {
        let mut out = Vec::new();
        for k in 0..=max_apex {
            let apex = FinSet::atom(k);
            let lefts = Func::all(&apex, a);
            let rights = Func::all(&apex, b);
            for l in &lefts {
                for r in &rights {
                    out.push(Span::from_legs(a.clone(), b.clone(), l.table.to_vec(), r.table.to_vec()));
                }
            }
        }
        out
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SpanSquare {
    pub frame: Frame<Span, Func>,
    /// Apex map from the top span to the bottom span.
    pub map: Arc<[u32]>,
}

impl fmt::Debug for SpanSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{:?} ={:?},{:?}=> {:?} via {:?}]",
            self.frame.top, self.frame.left, self.frame.right, self.frame.bottom, &*self.map
        )
    }
}

/// Spans of finite sets. Enumeration uses atomic sets of size
/// `<= max_size` and apexes of size `<= max_apex`.
#[derive(Clone, Debug)]
pub struct SpanModel {
    pub max_size: u32,
    pub max_apex: u32,
}

impl SpanModel {
    pub fn new(max_size: u32, max_apex: u32) -> Self {
        SpanModel { max_size, max_apex }
    }

    /// Builds a square, checking that the apex map commutes with the legs.
    pub fn square(&self, frame: Frame<Span, Func>, map: Vec<u32>) -> Result<SpanSquare> {
        let Frame { top, left, right, bottom } = &frame;
        let shape_ok = left.src == top.src && right.src == top.tgt && left.tgt == bottom.src && right.tgt == bottom.tgt;
        if !shape_ok || map.len() != top.apex.len() {
            return Err(CellError::frame(format!("apex map does not fit frame {frame:?}")));
        }
        for (x, &y) in map.iter().enumerate() {
            let y = y as usize;
            if y >= bottom.apex.len()
                || bottom.left[y] != left.apply(top.left[x])
                || bottom.right[y] != right.apply(top.right[x])
            {
                return Err(CellError::frame(format!("apex map {map:?} does not commute with legs in {frame:?}")));
            }
        }
        Ok(SpanSquare { frame, map: map.into() })
    }

    fn reindex(&self, top: &Span, bottom: &Span, map: Vec<u32>) -> Result<SpanSquare> {
        self.square(self.globular_frame(top, bottom), map)
    }
}

fn index_of(pairs: &[(u32, u32)]) -> HashMap<(u32, u32), u32> {
    pairs.iter().enumerate().map(|(i, &p)| (p, i as u32)).collect()
}

impl DoubleCategory for SpanModel {
    type Obj = FinSet;
    type VMor = Func;
    type HCell = Span;
    type Sq = SpanSquare;

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
    fn hsrc(&self, m: &Span) -> FinSet {
        m.src.clone()
    }
    fn htgt(&self, m: &Span) -> FinSet {
        m.tgt.clone()
    }
    fn hunit(&self, a: &FinSet) -> Span {
        Span::identity(a)
    }
    fn raw_hcomp(&self, m: &Span, n: &Span) -> Result<Span> {
        Ok(m.compose(n))
    }
    fn frame(&self, s: &SpanSquare) -> FrameOf<Self> {
        s.frame.clone()
    }
    fn sq_id(&self, m: &Span) -> SpanSquare {
        SpanSquare { frame: self.globular_frame(m, m), map: (0..m.size()).collect() }
    }
    fn sq_unit(&self, f: &Func) -> SpanSquare {
        SpanSquare {
            frame: Frame {
                top: Span::identity(&f.src),
                left: f.clone(),
                right: f.clone(),
                bottom: Span::identity(&f.tgt),
            },
            map: f.table.clone(),
        }
    }
    fn raw_sq_vcomp(&self, a: &SpanSquare, b: &SpanSquare) -> Result<SpanSquare> {
        Ok(SpanSquare {
            frame: Frame {
                top: a.frame.top.clone(),
                left: self.vcomp(&a.frame.left, &b.frame.left)?,
                right: self.vcomp(&a.frame.right, &b.frame.right)?,
                bottom: b.frame.bottom.clone(),
            },
            map: a.map.iter().map(|&x| b.map[x as usize]).collect(),
        })
    }
    fn raw_sq_hcomp(&self, a: &SpanSquare, b: &SpanSquare) -> Result<SpanSquare> {
        let top_pairs = a.frame.top.pullback_pairs(&b.frame.top);
        let bottom_pairs = a.frame.bottom.pullback_pairs(&b.frame.bottom);
        let idx = index_of(&bottom_pairs);
        let map = top_pairs
            .iter()
            .map(|&(x, y)| {
                let key = (a.map[x as usize], b.map[y as usize]);
                idx.get(&key).copied().ok_or_else(|| CellError::frame("horizontal composite leaves the pullback"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SpanSquare {
            frame: Frame {
                top: a.frame.top.compose(&b.frame.top),
                left: a.frame.left.clone(),
                right: b.frame.right.clone(),
                bottom: a.frame.bottom.compose(&b.frame.bottom),
            },
            map: map.into(),
        })
    }
    fn raw_assoc(&self, m: &Span, n: &Span, p: &Span) -> Result<SpanSquare> {
        let mn = m.pullback_pairs(n);
        let mn_p = m.compose(n).pullback_pairs(p);
        let np = n.pullback_pairs(p);
        let m_np = m.pullback_pairs(&n.compose(p));
        let np_idx = index_of(&np);
        let target = index_of(&m_np);
        let map = mn_p
            .iter()
            .map(|&(i, z)| {
                let (x, y) = mn[i as usize];
                target[&(x, np_idx[&(y, z)])]
            })
            .collect();
        self.reindex(&m.compose(n).compose(p), &m.compose(&n.compose(p)), map)
    }
    fn raw_lunit(&self, m: &Span) -> Result<SpanSquare> {
        let u = Span::identity(&m.src);
        let map = u.pullback_pairs(m).iter().map(|&(_, x)| x).collect();
        self.reindex(&u.compose(m), m, map)
    }
    fn raw_runit(&self, m: &Span) -> Result<SpanSquare> {
        let u = Span::identity(&m.tgt);
        let map = m.pullback_pairs(&u).iter().map(|&(x, _)| x).collect();
        self.reindex(&m.compose(&u), m, map)
    }
    fn sq_inverse(&self, s: &SpanSquare) -> Option<SpanSquare> {
        let n = s.frame.bottom.size() as usize;
        if s.map.len() != n {
            return None;
        }
        let mut inv = vec![u32::MAX; n];
        for (x, &y) in s.map.iter().enumerate() {
            if inv[y as usize] != u32::MAX {
                return None;
            }
            inv[y as usize] = x as u32;
        }
        let frame = Frame {
            top: s.frame.bottom.clone(),
            left: s.frame.left.inverse()?,
            right: s.frame.right.inverse()?,
            bottom: s.frame.top.clone(),
        };
        self.square(frame, inv).ok()
    }
}

impl Enumerable for SpanModel {
    fn objects(&self) -> Vec<FinSet> {
        (0..=self.max_size).map(FinSet::atom).collect()
    }
    fn vmors_between(&self, a: &FinSet, b: &FinSet) -> Vec<Func> {
        Func::all(a, b)
    }
    fn hcells_between(&self, a: &FinSet, b: &FinSet) -> Vec<Span> {
        Span::all(a, b, self.max_apex)
    }
    fn squares_in_frame(&self, frame: &FrameOf<Self>) -> Vec<SpanSquare> {
        let Frame { top, left, right, bottom } = frame;
        if left.src != top.src || right.src != top.tgt || left.tgt != bottom.src || right.tgt != bottom.tgt {
            return Vec::new();
        }
        let choices: Vec<Vec<u32>> = (0..top.size() as usize)
            .map(|x| {
                let (s, t) = (left.apply(top.left[x]), right.apply(top.right[x]));
                (0..bottom.size()).filter(|&y| bottom.left[y as usize] == s && bottom.right[y as usize] == t).collect()
            })
            .collect();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(choices.len());
        fn go(choices: &[Vec<u32>], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == choices.len() {
                out.push(cur.clone());
                return;
            }
            for &y in &choices[cur.len()] {
                cur.push(y);
                go(choices, cur, out);
                cur.pop();
            }
        }
        let mut maps = Vec::new();
        go(&choices, &mut cur, &mut maps);
        for map in maps {
            out.push(SpanSquare { frame: frame.clone(), map: map.into() });
        }
        out
    }

    /// Groups apex elements with equal images into random blocks, adds at
    /// most one extra element, then shuffles the bottom apex.
    fn sample_square_below(&self, top: &Span, left: &Func, right: &Func, rng: &mut dyn RngCore) -> Option<SpanSquare> {
        let (c, d) = (left.tgt.clone(), right.tgt.clone());
        let mut legs: Vec<(u32, u32)> = Vec::new();
        let mut block_of = vec![0u32; top.size() as usize];
        for x in 0..top.size() as usize {
            let key = (left.apply(top.left[x]), right.apply(top.right[x]));
            let existing: Vec<u32> = (0..legs.len() as u32).filter(|&b| legs[b as usize] == key).collect();
            block_of[x] = match existing.choose(rng) {
                Some(&b) if rng.gen_bool(0.5) => b,
                _ => {
                    legs.push(key);
                    legs.len() as u32 - 1
                }
            };
        }
        if c.card() > 0 && d.card() > 0 && rng.gen_bool(0.3) {
            legs.push((rng.gen_range(0..c.card()), rng.gen_range(0..d.card())));
        }
        let mut perm: Vec<u32> = (0..legs.len() as u32).collect();
        perm.shuffle(rng);
        let mut bl = vec![0; legs.len()];
        let mut br = vec![0; legs.len()];
        for (b, &(s, t)) in legs.iter().enumerate() {
            bl[perm[b] as usize] = s;
            br[perm[b] as usize] = t;
        }
        let bottom = Span::from_legs(c, d, bl, br);
        let map = block_of.iter().map(|&b| perm[b as usize]).collect();
        self.square(Frame { top: top.clone(), left: left.clone(), right: right.clone(), bottom }, map).ok()
    }
}

impl crate::monoidal::Monoidal for SpanModel {
    fn unit_obj(&self) -> FinSet {
        FinSet::unit()
    }
    fn tensor_obj(&self, a: &FinSet, b: &FinSet) -> FinSet {
        FinSet::product(a, b)
    }
    fn tensor_vmor(&self, f: &Func, g: &Func) -> Func {
        Func::product(f, g)
    }
    fn tensor_hcell(&self, m: &Span, n: &Span) -> Span {
        Span::product(m, n)
    }
    fn tensor_sq(&self, a: &SpanSquare, b: &SpanSquare) -> Result<SpanSquare> {
        let (fa, fb) = (&a.frame, &b.frame);
        let frame = Frame {
            top: Span::product(&fa.top, &fb.top),
            left: Func::product(&fa.left, &fb.left),
            right: Func::product(&fa.right, &fb.right),
            bottom: Span::product(&fa.bottom, &fb.bottom),
        };
        let (nt, nb) = (fb.top.size(), fb.bottom.size());
        let map = (0..fa.top.size() * nt).map(|k| a.map[(k / nt) as usize] * nb + b.map[(k % nt) as usize]).collect();
        self.square(frame, map)
    }
    fn interchanger(&self, m1: &Span, n1: &Span, m2: &Span, n2: &Span) -> Result<SpanSquare> {
        let (top_l, top_r) = (Span::product(m1, n1), Span::product(m2, n2));
        let top = top_l.compose(&top_r);
        let pm = index_of(&m1.pullback_pairs(m2));
        let pn = index_of(&n1.pullback_pairs(n2));
        let bottom = Span::product(&m1.compose(m2), &n1.compose(n2));
        let width = pn.len() as u32;
        let mut map = Vec::with_capacity(top.apex.len());
        for (p, q) in top_l.pullback_pairs(&top_r) {
            let (x1, y1) = (p / n1.size(), p % n1.size());
            let (x2, y2) = (q / n2.size(), q % n2.size());
            let i = pm[&(x1, x2)];
            let j = pn[&(y1, y2)];
            map.push(i * width + j);
        }
        self.reindex(&top, &bottom, map)
    }
    fn unit_comparison(&self, a: &FinSet, b: &FinSet) -> Result<SpanSquare> {
        let top = Span::identity(&FinSet::product(a, b));
        let bottom = Span::product(&Span::identity(a), &Span::identity(b));
        let n = top.size();
        self.reindex(&top, &bottom, (0..n).collect())
    }
    fn assoc_vmor(&self, a: &FinSet, b: &FinSet, c: &FinSet) -> Func {
        Func::associator(a, b, c)
    }
    fn assoc_sq(&self, m: &Span, n: &Span, p: &Span) -> Result<SpanSquare> {
        let top = Span::product(&Span::product(m, n), p);
        let frame = Frame {
            left: Func::associator(&m.src, &n.src, &p.src),
            right: Func::associator(&m.tgt, &n.tgt, &p.tgt),
            bottom: Span::product(m, &Span::product(n, p)),
            top,
        };
        let k = frame.top.size();
        self.square(frame, (0..k).collect())
    }
    fn lunitor_vmor(&self, a: &FinSet) -> Func {
        Func::left_unitor(a)
    }
    fn lunitor_sq(&self, m: &Span) -> Result<SpanSquare> {
        let frame = Frame {
            top: Span::product(&Span::identity(&FinSet::unit()), m),
            left: Func::left_unitor(&m.src),
            right: Func::left_unitor(&m.tgt),
            bottom: m.clone(),
        };
        self.square(frame, (0..m.size()).collect())
    }
    fn runitor_vmor(&self, a: &FinSet) -> Func {
        Func::right_unitor(a)
    }
    fn runitor_sq(&self, m: &Span) -> Result<SpanSquare> {
        let frame = Frame {
            top: Span::product(m, &Span::identity(&FinSet::unit())),
            left: Func::right_unitor(&m.src),
            right: Func::right_unitor(&m.tgt),
            bottom: m.clone(),
        };
        self.square(frame, (0..m.size()).collect())
    }
}

impl crate::monoidal::Braided for SpanModel {
    fn braid_vmor(&self, a: &FinSet, b: &FinSet) -> Func {
        Func::swap(a, b)
    }
    fn braid_sq(&self, m: &Span, n: &Span) -> Result<SpanSquare> {
        let frame = Frame {
            top: Span::product(m, n),
            left: Func::swap(&m.src, &n.src),
            right: Func::swap(&m.tgt, &n.tgt),
            bottom: Span::product(n, m),
        };
        let (nm, nn) = (m.size(), n.size());
        self.square(frame, (0..nm * nn).map(|k| (k % nn) * nm + k / nn).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: u32) -> FinSet {
        FinSet::atom(n)
    }

    #[test]
    fn pullback_apex_is_lexicographic() {
        // Independent oracle: filter the full product in (x, y) order.
        let m = Span::from_legs(s(2), s(2), vec![0, 1, 1], vec![1, 0, 1]);
        let n = Span::from_legs(s(2), s(1), vec![1, 1, 0], vec![0, 0, 0]);
        let pairs = m.pullback_pairs(&n);
        let mut oracle = Vec::new();
        for x in 0..3u32 {
            for y in 0..3u32 {
                if m.right[x as usize] == n.left[y as usize] {
                    oracle.push((x, y));
                }
            }
        }
        assert_eq!(pairs, oracle);
        assert_eq!(pairs, vec![(0, 0), (0, 1), (1, 2), (2, 0), (2, 1)]);
        let c = m.compose(&n);
        assert_eq!(&*c.left, &[0, 0, 1, 1, 1]);
    }

    #[test]
    fn vertical_composite_composes_apex_tables() {
        let model = SpanModel::new(2, 3);
        let m = Span::from_legs(s(1), s(1), vec![0, 0], vec![0, 0]);
        let n = Span::from_legs(s(1), s(1), vec![0, 0, 0], vec![0, 0, 0]);
        let p = Span::from_legs(s(1), s(1), vec![0, 0], vec![0, 0]);
        let id = Func::identity(&s(1));
        let a = model.square(Frame { top: m, left: id.clone(), right: id.clone(), bottom: n.clone() }, vec![2, 0]).unwrap();
        let b = model.square(Frame { top: n, left: id.clone(), right: id, bottom: p }, vec![1, 1, 0]).unwrap();
        let c = model.compose_v(&a, &b).unwrap();
        assert_eq!(&*c.map, &[0, 1]);
    }

    #[test]
    fn associator_is_the_nested_pair_bijection() {
        let model = SpanModel::new(2, 3);
        let m = Span::from_legs(s(2), s(2), vec![0, 1], vec![1, 1]);
        let n = Span::from_legs(s(2), s(2), vec![1, 1, 0], vec![0, 1, 0]);
        let p = Span::from_legs(s(2), s(1), vec![0, 1], vec![0, 0]);
        let a = model.assoc(&m, &n, &p).unwrap();
        let top = &a.frame.top;
        let bottom = &a.frame.bottom;
        assert_ne!(top, bottom);
        // ((x, y), z) goes to (x, (y, z)) with the same leaves.
        for (i, &j) in a.map.iter().enumerate() {
            let leaves = |l: &Label| {
                let mut v = Vec::new();
                fn walk(l: &Label, v: &mut Vec<u32>) {
                    match l {
                        Label::Leaf(i) => v.push(*i),
                        Label::Comp(a, b) | Label::Tensor(a, b) => {
                            walk(a, v);
                            walk(b, v);
                        }
                    }
                }
                walk(l, &mut v);
                v
            };
            assert_eq!(leaves(&top.apex[i]), leaves(&bottom.apex[j as usize]));
        }
        assert!(model.sq_inverse(&a).is_some());
    }

    #[test]
    fn unit_composite_is_reordered() {
        let model = SpanModel::new(2, 3);
        let m = Span::from_legs(s(2), s(1), vec![1, 0], vec![0, 0]);
        let l = model.lunit(&m).unwrap();
        assert_eq!(&*l.map, &[1, 0]);
        let r = model.runit(&m).unwrap();
        assert_eq!(&*r.map, &[0, 1]);
    }

    #[test]
    fn squares_in_frame_enumerates_commuting_maps() {
        let model = SpanModel::new(2, 3);
        let m = Span::from_legs(s(1), s(1), vec![0, 0], vec![0, 0]);
        let n = Span::from_legs(s(1), s(1), vec![0, 0, 0], vec![0, 0, 0]);
        let id = Func::identity(&s(1));
        let sq = model.squares_in_frame(&Frame { top: m, left: id.clone(), right: id, bottom: n });
        assert_eq!(sq.len(), 9);
    }

    #[test]
    fn span_counts() {
        // sum_k (|A||B|)^k for k <= 3.
        assert_eq!(Span::all(&s(2), &s(2), 3).len(), 1 + 4 + 16 + 64);
        assert_eq!(Span::all(&s(0), &s(2), 3).len(), 1);
    }
}
