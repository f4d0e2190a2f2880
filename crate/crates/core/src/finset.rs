//! Finite sets with structured elements, and functions between them.
//!
//! An object is a *shape*: an atomic set `{0, .., n-1}`, the monoidal unit
//! (a distinguished singleton), or a binary product. Products are encoded
//! lexicographically, so `(i, j)` in `A x B` has index `i * |B| + j`.
//! Keeping the shape (instead of only the cardinality) makes
//! `(A x B) x C` and `A x (B x C)` different objects, so associators and
//! unitors are genuine non-identity morphisms with concrete tables.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Shape {
    Atom(u32),
    Unit,
    Prod(Arc<Shape>, Arc<Shape>),
}

impl fmt::Debug for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Atom(n) => write!(f, "{n}"),
            Shape::Unit => write!(f, "I"),
            Shape::Prod(a, b) => write!(f, "({a:?}x{b:?})"),
        }
    }
}

/// A finite set, identified by its shape. The cardinality is kept
/// alongside.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Arc<Shape>", into = "Arc<Shape>")]
pub struct FinSet(pub Arc<Shape>, u32);

impl From<Arc<Shape>> for FinSet {
    fn from(s: Arc<Shape>) -> Self {
        fn go(s: &Shape) -> u32 {
            match s {
                Shape::Atom(n) => *n,
                Shape::Unit => 1,
                Shape::Prod(a, b) => go(a) * go(b),
            }
        }
        let n = go(&s);
        FinSet(s, n)
    }
}

impl From<FinSet> for Arc<Shape> {
    fn from(s: FinSet) -> Self {
        s.0
    }
}

impl fmt::Debug for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl FinSet {
    pub fn atom(n: u32) -> Self {
        FinSet(Arc::new(Shape::Atom(n)), n)
    }

    pub fn unit() -> Self {
        FinSet(Arc::new(Shape::Unit), 1)
    }

    pub fn product(a: &FinSet, b: &FinSet) -> Self {
        FinSet(Arc::new(Shape::Prod(a.0.clone(), b.0.clone())), a.1 * b.1)
    }

    pub fn card(&self) -> u32 {
        self.1
    }

    /// Split a product into its factors.
    pub fn factors(&self) -> Option<(FinSet, FinSet)> {
        match &*self.0 {
            Shape::Prod(a, b) => Some((FinSet::from(a.clone()), FinSet::from(b.clone()))),
            _ => None,
        }
    }

    pub fn pair_index(a: &FinSet, b: &FinSet, i: u32, j: u32) -> u32 {
        let _ = a;
        i * b.card() + j
    }

    pub fn unpair_index(b: &FinSet, k: u32) -> (u32, u32) {
        let nb = b.card();
        (k / nb, k % nb)
    }
}

/// A function between finite sets, stored as a lookup table.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Func {
    pub src: FinSet,
    pub tgt: FinSet,
    pub table: Arc<[u32]>,
}

impl fmt::Debug for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}->{:?}{:?}", self.src, self.tgt, &*self.table)
    }
}

impl Func {
    /// Builds a function, panicking if the table does not fit the sets.
    pub fn new(src: FinSet, tgt: FinSet, table: Vec<u32>) -> Self {
        assert_eq!(table.len() as u32, src.card(), "table length must equal |src|");
        assert!(table.iter().all(|&x| x < tgt.card()), "table value out of range");
        Func { src, tgt, table: table.into() }
    }

    pub fn identity(a: &FinSet) -> Self {
        Func::new(a.clone(), a.clone(), (0..a.card()).collect())
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// `self` followed by `next`.
    pub fn then(&self, next: &Func) -> Option<Func> {
        if self.tgt != next.src {
            return None;
        }
        Some(Func {
            src: self.src.clone(),
            tgt: next.tgt.clone(),
            table: self.table.iter().map(|&x| next.apply(x)).collect(),
        })
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt && self.table.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn inverse(&self) -> Option<Func> {
        let n = self.tgt.card() as usize;
        if self.table.len() != n {
            return None;
        }
        let mut inv = vec![u32::MAX; n];
        for (i, &x) in self.table.iter().enumerate() {
            if inv[x as usize] != u32::MAX {
                return None;
            }
            inv[x as usize] = i as u32;
        }
        Some(Func { src: self.tgt.clone(), tgt: self.src.clone(), table: inv.into() })
    }

    /// Cartesian product of functions on the lexicographic encoding.
    pub fn product(f: &Func, g: &Func) -> Func {
        let src = FinSet::product(&f.src, &g.src);
        let tgt = FinSet::product(&f.tgt, &g.tgt);
        let nb = g.src.card();
        let table = (0..src.card())
            .map(|k| {
                let (i, j) = (k / nb, k % nb);
                FinSet::pair_index(&f.tgt, &g.tgt, f.apply(i), g.apply(j))
            })
            .collect();
        Func { src, tgt, table }
    }

    /// `((a, b), c) -> (a, (b, c))`.
    pub fn associator(a: &FinSet, b: &FinSet, c: &FinSet) -> Func {
        let src = FinSet::product(&FinSet::product(a, b), c);
        let tgt = FinSet::product(a, &FinSet::product(b, c));
        // Both encodings enumerate triples lexicographically.
        let table = (0..src.card()).collect();
        Func { src, tgt, table }
    }

    /// `(*, a) -> a`.
    pub fn left_unitor(a: &FinSet) -> Func {
        let src = FinSet::product(&FinSet::unit(), a);
        Func { src, tgt: a.clone(), table: (0..a.card()).collect() }
    }

    /// `(a, *) -> a`.
    pub fn right_unitor(a: &FinSet) -> Func {
        let src = FinSet::product(a, &FinSet::unit());
        Func { src, tgt: a.clone(), table: (0..a.card()).collect() }
    }

    /// `(a, b) -> (b, a)`.
    pub fn swap(a: &FinSet, b: &FinSet) -> Func {
        let src = FinSet::product(a, b);
        let tgt = FinSet::product(b, a);
        let nb = b.card();
        let na = a.card();
        let table = (0..src.card()).map(|k| (k % nb) * na + k / nb).collect();
        Func { src, tgt, table }
    }

    /// Every function `src -> tgt`, in lexicographic order of tables.
    pub fn all(src: &FinSet, tgt: &FinSet) -> Vec<Func> {
        let n = src.card() as usize;
        let m = tgt.card();
        if n > 0 && m == 0 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        loop {
            out.push(Func { src: src.clone(), tgt: tgt.clone(), table: cur.clone().into() });
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < m {
                    break;
                }
                cur[i] = 0;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn swap_table_on_two_by_one() {
        let s = Func::swap(&FinSet::atom(2), &FinSet::atom(1));
        assert_eq!(&*s.table, &[0, 1]);
        let s = Func::swap(&FinSet::atom(2), &FinSet::atom(3));
        // (i, j) at 3i + j goes to (j, i) at 2j + i.
        assert_eq!(&*s.table, &[0, 2, 4, 1, 3, 5]);
    }

    #[test]
    fn swap_is_an_involution() {
        let (a, b) = (FinSet::atom(2), FinSet::atom(3));
        let ss = Func::swap(&a, &b).then(&Func::swap(&b, &a)).unwrap();
        assert!(ss.is_identity());
    }

    #[test]
    fn enumerates_all_functions() {
        assert_eq!(Func::all(&FinSet::atom(2), &FinSet::atom(3)).len(), 9);
        assert_eq!(Func::all(&FinSet::atom(0), &FinSet::atom(0)).len(), 1);
        assert_eq!(Func::all(&FinSet::atom(1), &FinSet::atom(0)).len(), 0);
    }

    #[test]
    fn associator_objects_differ() {
        let a = FinSet::atom(2);
        let f = Func::associator(&a, &a, &a);
        assert_ne!(f.src, f.tgt);
        assert_eq!(f.src.card(), 8);
    }
}
