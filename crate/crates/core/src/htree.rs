//! Bracketed horizontal composites and the canonical coherence
//! isomorphisms between them.
//!
//! Models carry genuine associators and unitors. Generic constructions
//! write their composites as [`HTree`]s and use [`canonical_constraint`] to
//! move between bracketings; by coherence the result does not depend on
//! the route, so a single normalization route is used.

use crate::cell::DoubleCategory;
use crate::error::{CellError, Result};
use crate::pasting::{eval_pasting, Constraint, PastingExpr};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum HTree<O, H> {
    Leaf(H),
    /// The formal unit `U_A`.
    Unit(O),
    Node(Box<HTree<O, H>>, Box<HTree<O, H>>),
}

pub type HTreeOf<D> = HTree<<D as DoubleCategory>::Obj, <D as DoubleCategory>::HCell>;

impl<O: Clone + PartialEq, H: Clone + PartialEq> HTree<O, H> {
    pub fn leaf(h: H) -> Self {
        HTree::Leaf(h)
    }

    pub fn node(l: Self, r: Self) -> Self {
        HTree::Node(Box::new(l), Box::new(r))
    }

    /// Left-associated composite of the given leaves.
    pub fn from_leaves<I: IntoIterator<Item = H>>(unit_at: O, leaves: I) -> Self {
        let mut it = leaves.into_iter();
        match it.next() {
            None => HTree::Unit(unit_at),
            Some(first) => it.fold(HTree::Leaf(first), |acc, h| HTree::node(acc, HTree::Leaf(h))),
        }
    }

    /// Leaves in order, with formal units dropped.
    pub fn leaves(&self) -> Vec<H> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<H>) {
        match self {
            HTree::Leaf(h) => out.push(h.clone()),
            HTree::Unit(_) => {}
            HTree::Node(l, r) => {
                l.collect(out);
                r.collect(out);
            }
        }
    }

    pub fn is_unit_only(&self) -> bool {
        match self {
            HTree::Leaf(_) => false,
            HTree::Unit(_) => true,
            HTree::Node(l, r) => l.is_unit_only() && r.is_unit_only(),
        }
    }
}

impl<O: Clone + PartialEq + std::fmt::Debug, H: Clone + PartialEq + std::fmt::Debug> HTree<O, H> {
    pub fn src<D>(&self, d: &D) -> O
    where
        D: DoubleCategory<Obj = O, HCell = H>,
    {
        match self {
            HTree::Leaf(h) => d.hsrc(h),
            HTree::Unit(a) => a.clone(),
            HTree::Node(l, _) => l.src(d),
        }
    }

    pub fn tgt<D>(&self, d: &D) -> O
    where
        D: DoubleCategory<Obj = O, HCell = H>,
    {
        match self {
            HTree::Leaf(h) => d.htgt(h),
            HTree::Unit(a) => a.clone(),
            HTree::Node(_, r) => r.tgt(d),
        }
    }

    /// Checks that adjacent leaves compose.
    pub fn check<D>(&self, d: &D) -> Result<()>
    where
        D: DoubleCategory<Obj = O, HCell = H>,
    {
        if let HTree::Node(l, r) = self {
            l.check(d)?;
            r.check(d)?;
            if l.tgt(d) != r.src(d) {
                return Err(CellError::frame(format!("tree children do not compose: {l:?} | {r:?}")));
            }
        }
        Ok(())
    }

    /// The composite 1-cell this tree denotes.
    pub fn value<D>(&self, d: &D) -> Result<H>
    where
        D: DoubleCategory<Obj = O, HCell = H>,
    {
        match self {
            HTree::Leaf(h) => Ok(h.clone()),
            HTree::Unit(a) => Ok(d.hunit(a)),
            HTree::Node(l, r) => d.hcomp(&l.value(d)?, &r.value(d)?),
        }
    }

    /// Drop units and left-associate. A tree of units only flattens to a
    /// single unit at its source.
    pub fn flatten<D>(&self, d: &D) -> Self
    where
        D: DoubleCategory<Obj = O, HCell = H>,
    {
        HTree::from_leaves(self.src(d), self.leaves())
    }
}

/// The normalizing constraint `tree -> flatten(tree)`, as a pasting
/// expression built from associators, unitors and identities.
pub fn normalize<D: DoubleCategory>(
    d: &D,
    tree: &HTreeOf<D>,
) -> Result<(HTreeOf<D>, PastingExpr<D::HCell, D::Sq>)> {
    match tree {
        HTree::Leaf(h) => Ok((tree.clone(), PastingExpr::Id(h.clone()))),
        HTree::Unit(a) => Ok((tree.clone(), PastingExpr::Id(d.hunit(a)))),
        HTree::Node(l, r) => {
            let (nl, el) = normalize(d, l)?;
            let (nr, er) = normalize(d, r)?;
            let (n, merge) = merge(d, &nl, &nr)?;
            Ok((n, PastingExpr::vcomp(PastingExpr::hcomp(el, er), merge)))
        }
    }
}

/// `nl;nr -> flatten(nl;nr)` for already-flat `nl`, `nr`.
fn merge<D: DoubleCategory>(
    d: &D,
    nl: &HTreeOf<D>,
    nr: &HTreeOf<D>,
) -> Result<(HTreeOf<D>, PastingExpr<D::HCell, D::Sq>)> {
    match (nl, nr) {
        (_, HTree::Unit(_)) => Ok((nl.clone(), PastingExpr::Constraint(Constraint::RUnit(nl.value(d)?)))),
        (HTree::Unit(_), _) => Ok((nr.clone(), PastingExpr::Constraint(Constraint::LUnit(nr.value(d)?)))),
        (_, HTree::Leaf(_)) => {
            let t = HTree::node(nl.clone(), nr.clone());
            let v = t.value(d)?;
            Ok((t, PastingExpr::Id(v)))
        }
        (_, HTree::Node(rest, last)) => {
            let last_h = match &**last {
                HTree::Leaf(h) => h.clone(),
                _ => return Err(CellError::LeafMismatch("merge expects a flat right operand".into())),
            };
            let reassoc = PastingExpr::Constraint(Constraint::AssocInv(nl.value(d)?, rest.value(d)?, last_h.clone()));
            let (inner, e) = merge(d, nl, rest)?;
            let t = HTree::node(inner, HTree::Leaf(last_h.clone()));
            Ok((t, PastingExpr::vcomp(reassoc, PastingExpr::hcomp(e, PastingExpr::Id(last_h)))))
        }
    }
}

/// The canonical globular isomorphism between two bracketings of the same
/// leaf sequence, as a pasting expression.
pub fn canonical_expr<D: DoubleCategory>(
    d: &D,
    s: &HTreeOf<D>,
    t: &HTreeOf<D>,
) -> Result<PastingExpr<D::HCell, D::Sq>> {
    s.check(d)?;
    t.check(d)?;
    if s.leaves() != t.leaves() || s.src(d) != t.src(d) || s.tgt(d) != t.tgt(d) {
        return Err(CellError::LeafMismatch(format!("{:?} vs {:?}", s.leaves(), t.leaves())));
    }
    if s == t {
        return Ok(PastingExpr::Id(s.value(d)?));
    }
    let (_, es) = normalize(d, s)?;
    let (_, et) = normalize(d, t)?;
    Ok(PastingExpr::vcomp(es, et.inverse()))
}

/// The canonical globular isomorphism `value(s) -> value(t)`.
pub fn canonical_constraint<D: DoubleCategory>(d: &D, s: &HTreeOf<D>, t: &HTreeOf<D>) -> Result<D::Sq> {
    eval_pasting(d, &canonical_expr(d, s, t)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flatten_is_idempotent_on_shapes() {
        let t: HTree<u8, char> = HTree::node(
            HTree::node(HTree::Unit(0), HTree::Leaf('a')),
            HTree::node(HTree::Leaf('b'), HTree::node(HTree::Leaf('c'), HTree::Unit(0))),
        );
        assert_eq!(t.leaves(), vec!['a', 'b', 'c']);
        let flat = HTree::from_leaves(0, t.leaves());
        assert_eq!(HTree::from_leaves(0, flat.leaves()), flat);
    }
}
