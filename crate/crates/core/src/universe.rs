//! Cached enumeration of a model's cells, with counting, exhaustive listing
//! and uniform sampling of composable chains.

use std::collections::HashMap;

use rand::Rng;
use rand::RngCore;

use crate::cell::{DoubleCategory, Enumerable};
use crate::models::ProductModel;

/// Longest chain length whose count is precomputed.
pub const MAX_CHAIN: usize = 6;

/// A finite graph with edges grouped by (source, target) object index.
pub struct Graph<E> {
    edges: Vec<Vec<Vec<E>>>,
    /// `counts[k][o]`: number of composable chains of length `k` from `o`.
    counts: Vec<Vec<u128>>,
}

impl<E: Clone> Graph<E> {
    fn new(edges: Vec<Vec<Vec<E>>>) -> Self {
        let n = edges.len();
        let mut g = Graph { edges, counts: vec![vec![1; n]] };
        g.ensure(MAX_CHAIN);
        g
    }

    fn ensure(&mut self, k: usize) {
        while self.counts.len() <= k {
            let prev = self.counts.last().unwrap().clone();
            let n = self.edges.len();
            let next = (0..n)
                .map(|o| (0..n).map(|p| self.edges[o][p].len() as u128 * prev[p]).fold(0u128, u128::saturating_add))
                .collect();
            self.counts.push(next);
        }
    }

    pub fn count(&self, k: usize) -> u128 {
        self.counts[k].iter().copied().fold(0, u128::saturating_add)
    }

    pub fn count_from(&self, k: usize, o: usize) -> u128 {
        self.counts[k][o]
    }

    /// Every chain of `k` composable edges, with the object it starts at.
    pub fn chains(&self, k: usize) -> Vec<(usize, Vec<E>)> {
        fn go<E: Clone>(g: &Graph<E>, o: usize, k: usize, cur: &mut Vec<E>, start: usize, out: &mut Vec<(usize, Vec<E>)>) {
            if cur.len() == k {
                out.push((start, cur.clone()));
                return;
            }
            for p in 0..g.edges.len() {
                for e in &g.edges[o][p] {
                    cur.push(e.clone());
                    go(g, p, k, cur, start, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        for o in 0..self.edges.len() {
            go(self, o, k, &mut Vec::new(), o, &mut out);
        }
        out
    }

    fn pick(weights: &[u128], rng: &mut dyn RngCore) -> Option<usize> {
        let total = weights.iter().copied().fold(0u128, u128::saturating_add);
        if total == 0 {
            return None;
        }
        let mut x = rng.gen_range(0..total);
        for (i, &w) in weights.iter().enumerate() {
            if x < w {
                return Some(i);
            }
            x -= w;
        }
        None
    }

    /// A uniformly random chain of length `k`, optionally from a fixed start.
    pub fn sample_chain(&self, k: usize, start: Option<usize>, rng: &mut dyn RngCore) -> Option<(usize, Vec<E>)> {
        let n = self.edges.len();
        let o0 = match start {
            Some(o) => o,
            None => Self::pick(&self.counts[k], rng)?,
        };
        let mut o = o0;
        let mut out = Vec::with_capacity(k);
        for step in (0..k).rev() {
            let w: Vec<u128> = (0..n).map(|p| self.edges[o][p].len() as u128 * self.counts[step][p]).collect();
            let p = Self::pick(&w, rng)?;
            let es = &self.edges[o][p];
            out.push(es[rng.gen_range(0..es.len())].clone());
            o = p;
        }
        Some((o0, out))
    }

    /// A uniformly random edge out of `o`.
    pub fn sample_from(&self, o: usize, rng: &mut dyn RngCore) -> Option<(usize, E)> {
        let w: Vec<u128> = self.edges[o].iter().map(|es| es.len() as u128).collect();
        let p = Self::pick(&w, rng)?;
        let es = &self.edges[o][p];
        Some((p, es[rng.gen_range(0..es.len())].clone()))
    }

    pub fn between(&self, o: usize, p: usize) -> &[E] {
        &self.edges[o][p]
    }
}

type Obj<S> = <<S as CellSource>::Model as DoubleCategory>::Obj;
type VMor<S> = <<S as CellSource>::Model as DoubleCategory>::VMor;
type HCell<S> = <<S as CellSource>::Model as DoubleCategory>::HCell;
type Sq<S> = <<S as CellSource>::Model as DoubleCategory>::Sq;

/// Counting, listing and sampling of composable chains in a model.
pub trait CellSource {
    type Model: Enumerable;

    fn model(&self) -> &Self::Model;
    fn objects(&self) -> Vec<Obj<Self>>;
    fn vchain_count(&self, k: usize) -> u128;
    fn vchains(&self, k: usize) -> Vec<Vec<VMor<Self>>>;
    fn random_vchain(&self, k: usize, rng: &mut dyn RngCore) -> Option<Vec<VMor<Self>>>;
    fn hchain_count(&self, k: usize) -> u128;
    fn hchains(&self, k: usize) -> Vec<Vec<HCell<Self>>>;
    fn random_hchain(&self, k: usize, rng: &mut dyn RngCore) -> Option<Vec<HCell<Self>>>;
    fn random_vmor_from(&self, a: &Obj<Self>, rng: &mut dyn RngCore) -> Option<VMor<Self>>;

    fn random_object(&self, rng: &mut dyn RngCore) -> Obj<Self> {
        let objs = self.objects();
        objs[rng.gen_range(0..objs.len())].clone()
    }

    fn random_hcell(&self, rng: &mut dyn RngCore) -> Option<HCell<Self>> {
        self.random_hchain(1, rng)?.pop()
    }

    /// A random square with the given top, random vertical sides.
    fn random_square_below(&self, top: &HCell<Self>, rng: &mut dyn RngCore) -> Option<Sq<Self>> {
        let d = self.model();
        let f = self.random_vmor_from(&d.hsrc(top), rng)?;
        let g = self.random_vmor_from(&d.htgt(top), rng)?;
        d.sample_square_below(top, &f, &g, rng)
    }

    fn random_square(&self, rng: &mut dyn RngCore) -> Option<Sq<Self>> {
        let top = self.random_hcell(rng)?;
        self.random_square_below(&top, rng)
    }

    /// Horizontally adjacent squares below the given tops.
    fn random_row_below(&self, tops: &[HCell<Self>], rng: &mut dyn RngCore) -> Option<Vec<Sq<Self>>> {
        let d = self.model();
        let first = tops.first()?;
        let mut side = self.random_vmor_from(&d.hsrc(first), rng)?;
        let mut out = Vec::with_capacity(tops.len());
        for t in tops {
            let next = self.random_vmor_from(&d.htgt(t), rng)?;
            out.push(d.sample_square_below(t, &side, &next, rng)?);
            side = next;
        }
        Some(out)
    }

    fn random_row(&self, k: usize, rng: &mut dyn RngCore) -> Option<Vec<Sq<Self>>> {
        let tops = self.random_hchain(k, rng)?;
        self.random_row_below(&tops, rng)
    }
}

/// Objects, vertical morphisms and 1-cells of an enumerable model.
pub struct Universe<'a, D: Enumerable> {
    pub model: &'a D,
    pub objects: Vec<D::Obj>,
    index: HashMap<D::Obj, usize>,
    pub vmors: Graph<D::VMor>,
    pub hcells: Graph<D::HCell>,
}

impl<'a, D: Enumerable> Universe<'a, D> {
    pub fn new(model: &'a D) -> Self {
        let objects = model.objects();
        let index = objects.iter().enumerate().map(|(i, o)| (o.clone(), i)).collect();
        let vm = objects.iter().map(|a| objects.iter().map(|b| model.vmors_between(a, b)).collect()).collect();
        let hc = objects.iter().map(|a| objects.iter().map(|b| model.hcells_between(a, b)).collect()).collect();
        Universe { model, objects, index, vmors: Graph::new(vm), hcells: Graph::new(hc) }
    }

    pub fn index_of(&self, a: &D::Obj) -> Option<usize> {
        self.index.get(a).copied()
    }

    pub fn all_vmors(&self) -> Vec<D::VMor> {
        self.vmors.chains(1).into_iter().map(|(_, mut c)| c.pop().unwrap()).collect()
    }

    pub fn all_hcells(&self) -> Vec<D::HCell> {
        self.hcells.chains(1).into_iter().map(|(_, mut c)| c.pop().unwrap()).collect()
    }
}

impl<D: Enumerable> CellSource for Universe<'_, D> {
    type Model = D;

    fn model(&self) -> &D {
        self.model
    }
    fn objects(&self) -> Vec<D::Obj> {
        self.objects.clone()
    }
    fn vchain_count(&self, k: usize) -> u128 {
        self.vmors.count(k)
    }
    fn vchains(&self, k: usize) -> Vec<Vec<D::VMor>> {
        self.vmors.chains(k).into_iter().map(|(_, c)| c).collect()
    }
    fn random_vchain(&self, k: usize, rng: &mut dyn RngCore) -> Option<Vec<D::VMor>> {
        self.vmors.sample_chain(k, None, rng).map(|(_, c)| c)
    }
    fn hchain_count(&self, k: usize) -> u128 {
        self.hcells.count(k)
    }
    fn hchains(&self, k: usize) -> Vec<Vec<D::HCell>> {
        self.hcells.chains(k).into_iter().map(|(_, c)| c).collect()
    }
    fn random_hchain(&self, k: usize, rng: &mut dyn RngCore) -> Option<Vec<D::HCell>> {
        self.hcells.sample_chain(k, None, rng).map(|(_, c)| c)
    }
    fn random_vmor_from(&self, a: &D::Obj, rng: &mut dyn RngCore) -> Option<D::VMor> {
        self.vmors.sample_from(self.index_of(a)?, rng).map(|(_, f)| f)
    }
}

/// Chains in a product model are pairs of chains of equal length, so the
/// product is counted and sampled componentwise without materializing it.
pub struct ProductSource<S1: CellSource, S2: CellSource> {
    pub left: S1,
    pub right: S2,
    model: ProductModel<S1::Model, S2::Model>,
}

impl<S1: CellSource, S2: CellSource> ProductSource<S1, S2>
where
    S1::Model: Clone,
    S2::Model: Clone,
{
    pub fn new(left: S1, right: S2) -> Self {
        let model = ProductModel(left.model().clone(), right.model().clone());
        ProductSource { left, right, model }
    }
}

fn zip_lists<A: Clone, B: Clone>(xs: Vec<Vec<A>>, ys: Vec<Vec<B>>) -> Vec<Vec<(A, B)>> {
    let mut out = Vec::with_capacity(xs.len() * ys.len());
    for x in &xs {
        for y in &ys {
            out.push(x.iter().cloned().zip(y.iter().cloned()).collect());
        }
    }
    out
}

impl<S1: CellSource, S2: CellSource> CellSource for ProductSource<S1, S2> {
    type Model = ProductModel<S1::Model, S2::Model>;

    fn model(&self) -> &Self::Model {
        &self.model
    }
    fn objects(&self) -> Vec<Obj<Self>> {
        let bs = self.right.objects();
        self.left.objects().into_iter().flat_map(|a| bs.iter().map(move |b| (a.clone(), b.clone()))).collect()
    }
    fn vchain_count(&self, k: usize) -> u128 {
        self.left.vchain_count(k).saturating_mul(self.right.vchain_count(k))
    }
    fn vchains(&self, k: usize) -> Vec<Vec<VMor<Self>>> {
        zip_lists(self.left.vchains(k), self.right.vchains(k))
    }
    fn random_vchain(&self, k: usize, rng: &mut dyn RngCore) -> Option<Vec<VMor<Self>>> {
        let a = self.left.random_vchain(k, rng)?;
        let b = self.right.random_vchain(k, rng)?;
        Some(a.into_iter().zip(b).collect())
    }
    fn hchain_count(&self, k: usize) -> u128 {
        self.left.hchain_count(k).saturating_mul(self.right.hchain_count(k))
    }
    fn hchains(&self, k: usize) -> Vec<Vec<HCell<Self>>> {
        zip_lists(self.left.hchains(k), self.right.hchains(k))
    }
    fn random_hchain(&self, k: usize, rng: &mut dyn RngCore) -> Option<Vec<HCell<Self>>> {
        let a = self.left.random_hchain(k, rng)?;
        let b = self.right.random_hchain(k, rng)?;
        Some(a.into_iter().zip(b).collect())
    }
    fn random_vmor_from(&self, a: &Obj<Self>, rng: &mut dyn RngCore) -> Option<VMor<Self>> {
        Some((self.left.random_vmor_from(&a.0, rng)?, self.right.random_vmor_from(&a.1, rng)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::RelModel;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn chain_counts_match_enumeration() {
        let m = RelModel::new(1);
        let u = Universe::new(&m);
        for k in 0..4 {
            assert_eq!(u.hcells.count(k) as usize, u.hcells.chains(k).len());
        }
        // Objects 0 and 1; relations: 1 + 1 + 1 + 2 = 5.
        assert_eq!(u.hcells.count(1), 5);
    }

    #[test]
    fn product_counts_multiply() {
        let m = RelModel::new(1);
        let p = ProductSource::new(Universe::new(&m), Universe::new(&m));
        assert_eq!(p.hchain_count(1), 25);
        assert_eq!(p.hchains(2).len() as u128, p.hchain_count(2));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let c = p.random_hchain(2, &mut rng).unwrap();
        assert_eq!(c[0].0.tgt, c[1].0.src);
        assert_eq!(c[0].1.tgt, c[1].1.src);
    }

    #[test]
    fn sampled_chains_compose() {
        let m = RelModel::new(2);
        let u = Universe::new(&m);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let c = u.random_hchain(3, &mut rng).unwrap();
            assert_eq!(c[0].tgt, c[1].src);
            assert_eq!(c[1].tgt, c[2].src);
        }
    }
}
