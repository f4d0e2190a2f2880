//! Pseudo double functors and double transformations, with the generic
//! axiom checks, and the functors built from a monoidal structure.

use crate::cell::{DoubleCategory, Frame};
use crate::error::Result;
use crate::models::ProductModel;
use crate::monoidal::{Braided, Monoidal};
use crate::report::{Axiom, Report, SampleBudget};
use crate::universe::CellSource;
use crate::verify::{ensure, fail, same};

pub type Ob<C> = <C as DoubleCategory>::Obj;
pub type VM<C> = <C as DoubleCategory>::VMor;
pub type HC<C> = <C as DoubleCategory>::HCell;
pub type SQ<C> = <C as DoubleCategory>::Sq;

pub trait DblFunctor {
    type Src: DoubleCategory;
    type Tgt: DoubleCategory;

    fn target(&self) -> &Self::Tgt;
    fn obj(&self, a: &Ob<Self::Src>) -> Ob<Self::Tgt>;
    fn vmor(&self, f: &VM<Self::Src>) -> VM<Self::Tgt>;
    fn hcell(&self, m: &HC<Self::Src>) -> HC<Self::Tgt>;
    fn sq(&self, s: &SQ<Self::Src>) -> Result<SQ<Self::Tgt>>;
    /// `F m ; F n => F (m ; n)`.
    fn comp_constraint(&self, m: &HC<Self::Src>, n: &HC<Self::Src>) -> Result<SQ<Self::Tgt>>;
    /// `U_(F a) => F U_a`.
    fn unit_constraint(&self, a: &Ob<Self::Src>) -> Result<SQ<Self::Tgt>>;
}

/// A double transformation `F => G`: vertical components on objects and
/// square components `F m => G m` on 1-cells.
pub trait DblTransformation {
    type F: DblFunctor;
    type G: DblFunctor<Src = <Self::F as DblFunctor>::Src, Tgt = <Self::F as DblFunctor>::Tgt>;

    fn source(&self) -> &Self::F;
    fn target(&self) -> &Self::G;
    fn component(&self, a: &Ob<<Self::F as DblFunctor>::Src>) -> VM<<Self::F as DblFunctor>::Tgt>;
    fn component_sq(&self, m: &HC<<Self::F as DblFunctor>::Src>) -> Result<SQ<<Self::F as DblFunctor>::Tgt>>;
}

#[derive(Clone, Debug)]
pub struct Identity<D>(pub D);

impl<D: DoubleCategory> DblFunctor for Identity<D> {
    type Src = D;
    type Tgt = D;
    fn target(&self) -> &D {
        &self.0
    }
    fn obj(&self, a: &D::Obj) -> D::Obj {
        a.clone()
    }
    fn vmor(&self, f: &D::VMor) -> D::VMor {
        f.clone()
    }
    fn hcell(&self, m: &D::HCell) -> D::HCell {
        m.clone()
    }
    fn sq(&self, s: &D::Sq) -> Result<D::Sq> {
        Ok(s.clone())
    }
    fn comp_constraint(&self, m: &D::HCell, n: &D::HCell) -> Result<D::Sq> {
        Ok(self.0.sq_id(&self.0.hcomp(m, n)?))
    }
    fn unit_constraint(&self, a: &D::Obj) -> Result<D::Sq> {
        Ok(self.0.sq_id(&self.0.hunit(a)))
    }
}

/// `first` followed by `second`.
#[derive(Clone, Debug)]
pub struct Composite<F, G> {
    pub first: F,
    pub second: G,
}

impl<F: DblFunctor, G: DblFunctor<Src = F::Tgt>> DblFunctor for Composite<F, G> {
    type Src = F::Src;
    type Tgt = G::Tgt;
    fn target(&self) -> &G::Tgt {
        self.second.target()
    }
    fn obj(&self, a: &Ob<F::Src>) -> Ob<G::Tgt> {
        self.second.obj(&self.first.obj(a))
    }
    fn vmor(&self, f: &VM<F::Src>) -> VM<G::Tgt> {
        self.second.vmor(&self.first.vmor(f))
    }
    fn hcell(&self, m: &HC<F::Src>) -> HC<G::Tgt> {
        self.second.hcell(&self.first.hcell(m))
    }
    fn sq(&self, s: &SQ<F::Src>) -> Result<SQ<G::Tgt>> {
        self.second.sq(&self.first.sq(s)?)
    }
    fn comp_constraint(&self, m: &HC<F::Src>, n: &HC<F::Src>) -> Result<SQ<G::Tgt>> {
        let outer = self.second.comp_constraint(&self.first.hcell(m), &self.first.hcell(n))?;
        let inner = self.second.sq(&self.first.comp_constraint(m, n)?)?;
        self.target().compose_v(&outer, &inner)
    }
    fn unit_constraint(&self, a: &Ob<F::Src>) -> Result<SQ<G::Tgt>> {
        let outer = self.second.unit_constraint(&self.first.obj(a))?;
        let inner = self.second.sq(&self.first.unit_constraint(a)?)?;
        self.target().compose_v(&outer, &inner)
    }
}

/// `F1 x F2` between product models.
#[derive(Clone)]
pub struct Product<F1: DblFunctor, F2: DblFunctor> {
    pub left: F1,
    pub right: F2,
    tgt: ProductModel<F1::Tgt, F2::Tgt>,
}

impl<F1: DblFunctor, F2: DblFunctor> Product<F1, F2>
where
    F1::Tgt: Clone,
    F2::Tgt: Clone,
{
    pub fn new(left: F1, right: F2) -> Self {
        let tgt = ProductModel(left.target().clone(), right.target().clone());
        Product { left, right, tgt }
    }
}

impl<F1: DblFunctor, F2: DblFunctor> DblFunctor for Product<F1, F2> {
    type Src = ProductModel<F1::Src, F2::Src>;
    type Tgt = ProductModel<F1::Tgt, F2::Tgt>;
    fn target(&self) -> &Self::Tgt {
        &self.tgt
    }
    fn obj(&self, a: &Ob<Self::Src>) -> Ob<Self::Tgt> {
        (self.left.obj(&a.0), self.right.obj(&a.1))
    }
    fn vmor(&self, f: &VM<Self::Src>) -> VM<Self::Tgt> {
        (self.left.vmor(&f.0), self.right.vmor(&f.1))
    }
    fn hcell(&self, m: &HC<Self::Src>) -> HC<Self::Tgt> {
        (self.left.hcell(&m.0), self.right.hcell(&m.1))
    }
    fn sq(&self, s: &SQ<Self::Src>) -> Result<SQ<Self::Tgt>> {
        Ok((self.left.sq(&s.0)?, self.right.sq(&s.1)?))
    }
    fn comp_constraint(&self, m: &HC<Self::Src>, n: &HC<Self::Src>) -> Result<SQ<Self::Tgt>> {
        Ok((self.left.comp_constraint(&m.0, &n.0)?, self.right.comp_constraint(&m.1, &n.1)?))
    }
    fn unit_constraint(&self, a: &Ob<Self::Src>) -> Result<SQ<Self::Tgt>> {
        Ok((self.left.unit_constraint(&a.0)?, self.right.unit_constraint(&a.1)?))
    }
}

/// The strict isomorphism `(D1 x D2) x D3 -> D1 x (D2 x D3)`.
#[derive(Clone, Debug)]
pub struct Reassoc<D1, D2, D3> {
    tgt: ProductModel<D1, ProductModel<D2, D3>>,
}

impl<D1, D2, D3> Reassoc<D1, D2, D3> {
    pub fn new(a: D1, b: D2, c: D3) -> Self {
        Reassoc { tgt: ProductModel(a, ProductModel(b, c)) }
    }
}

fn reassoc<A: Clone, B: Clone, C: Clone>(x: &((A, B), C)) -> (A, (B, C)) {
    (x.0 .0.clone(), (x.0 .1.clone(), x.1.clone()))
}

impl<D1: DoubleCategory, D2: DoubleCategory, D3: DoubleCategory> DblFunctor for Reassoc<D1, D2, D3> {
    type Src = ProductModel<ProductModel<D1, D2>, D3>;
    type Tgt = ProductModel<D1, ProductModel<D2, D3>>;
    fn target(&self) -> &Self::Tgt {
        &self.tgt
    }
    fn obj(&self, a: &Ob<Self::Src>) -> Ob<Self::Tgt> {
        reassoc(a)
    }
    fn vmor(&self, f: &VM<Self::Src>) -> VM<Self::Tgt> {
        reassoc(f)
    }
    fn hcell(&self, m: &HC<Self::Src>) -> HC<Self::Tgt> {
        reassoc(m)
    }
    fn sq(&self, s: &SQ<Self::Src>) -> Result<SQ<Self::Tgt>> {
        Ok(reassoc(s))
    }
    fn comp_constraint(&self, m: &HC<Self::Src>, n: &HC<Self::Src>) -> Result<SQ<Self::Tgt>> {
        let t = &self.tgt;
        Ok(t.sq_id(&t.hcomp(&reassoc(m), &reassoc(n))?))
    }
    fn unit_constraint(&self, a: &Ob<Self::Src>) -> Result<SQ<Self::Tgt>> {
        Ok(self.tgt.sq_id(&self.tgt.hunit(&reassoc(a))))
    }
}

/// The strict swap `D1 x D2 -> D2 x D1`.
#[derive(Clone, Debug)]
pub struct Swap<D1, D2> {
    tgt: ProductModel<D2, D1>,
}

impl<D1, D2> Swap<D1, D2> {
    pub fn new(a: D1, b: D2) -> Self {
        Swap { tgt: ProductModel(b, a) }
    }
}

fn swap<A: Clone, B: Clone>(x: &(A, B)) -> (B, A) {
    (x.1.clone(), x.0.clone())
}

impl<D1: DoubleCategory, D2: DoubleCategory> DblFunctor for Swap<D1, D2> {
    type Src = ProductModel<D1, D2>;
    type Tgt = ProductModel<D2, D1>;
    fn target(&self) -> &Self::Tgt {
        &self.tgt
    }
    fn obj(&self, a: &Ob<Self::Src>) -> Ob<Self::Tgt> {
        swap(a)
    }
    fn vmor(&self, f: &VM<Self::Src>) -> VM<Self::Tgt> {
        swap(f)
    }
    fn hcell(&self, m: &HC<Self::Src>) -> HC<Self::Tgt> {
        swap(m)
    }
    fn sq(&self, s: &SQ<Self::Src>) -> Result<SQ<Self::Tgt>> {
        Ok(swap(s))
    }
    fn comp_constraint(&self, m: &HC<Self::Src>, n: &HC<Self::Src>) -> Result<SQ<Self::Tgt>> {
        let t = &self.tgt;
        Ok(t.sq_id(&t.hcomp(&swap(m), &swap(n))?))
    }
    fn unit_constraint(&self, a: &Ob<Self::Src>) -> Result<SQ<Self::Tgt>> {
        Ok(self.tgt.sq_id(&self.tgt.hunit(&swap(a))))
    }
}

/// Pairs every cell with the identity structure on a fixed object:
/// `a |-> (x, a)` when `fixed_left`, else `a |-> (a, x)`.
#[derive(Clone, Debug)]
pub struct PairWith<D: DoubleCategory> {
    pub x: D::Obj,
    pub fixed_left: bool,
    tgt: ProductModel<D, D>,
}

impl<D: DoubleCategory + Clone> PairWith<D> {
    pub fn new(d: D, x: D::Obj, fixed_left: bool) -> Self {
        PairWith { x, fixed_left, tgt: ProductModel(d.clone(), d) }
    }

    fn put<T>(&self, fixed: T, a: T) -> (T, T) {
        if self.fixed_left {
            (fixed, a)
        } else {
            (a, fixed)
        }
    }
}

impl<D: DoubleCategory + Clone> DblFunctor for PairWith<D> {
    type Src = D;
    type Tgt = ProductModel<D, D>;
    fn target(&self) -> &Self::Tgt {
        &self.tgt
    }
    fn obj(&self, a: &D::Obj) -> (D::Obj, D::Obj) {
        self.put(self.x.clone(), a.clone())
    }
    fn vmor(&self, f: &D::VMor) -> (D::VMor, D::VMor) {
        self.put(self.tgt.0.vid(&self.x), f.clone())
    }
    fn hcell(&self, m: &D::HCell) -> (D::HCell, D::HCell) {
        self.put(self.tgt.0.hunit(&self.x), m.clone())
    }
    fn sq(&self, s: &D::Sq) -> Result<(D::Sq, D::Sq)> {
        let d = &self.tgt.0;
        Ok(self.put(d.sq_unit(&d.vid(&self.x)), s.clone()))
    }
    fn comp_constraint(&self, m: &D::HCell, n: &D::HCell) -> Result<(D::Sq, D::Sq)> {
        let d = &self.tgt.0;
        let fixed = d.lunit(&d.hunit(&self.x))?;
        Ok(self.put(fixed, d.sq_id(&d.hcomp(m, n)?)))
    }
    fn unit_constraint(&self, a: &D::Obj) -> Result<(D::Sq, D::Sq)> {
        let d = &self.tgt.0;
        Ok(self.put(d.sq_id(&d.hunit(&self.x)), d.sq_id(&d.hunit(a))))
    }
}

/// The tensor product `D x D -> D`, with the interchanger and the unit
/// comparison as constraints.
#[derive(Clone, Debug)]
pub struct Tensor<D> {
    pub d: D,
}

impl<D> Tensor<D> {
    pub fn new(d: D) -> Self {
        Tensor { d }
    }
}

impl<D: Monoidal> DblFunctor for Tensor<D> {
    type Src = ProductModel<D, D>;
    type Tgt = D;
    fn target(&self) -> &D {
        &self.d
    }
    fn obj(&self, a: &(D::Obj, D::Obj)) -> D::Obj {
        self.d.tensor_obj(&a.0, &a.1)
    }
    fn vmor(&self, f: &(D::VMor, D::VMor)) -> D::VMor {
        self.d.tensor_vmor(&f.0, &f.1)
    }
    fn hcell(&self, m: &(D::HCell, D::HCell)) -> D::HCell {
        self.d.tensor_hcell(&m.0, &m.1)
    }
    fn sq(&self, s: &(D::Sq, D::Sq)) -> Result<D::Sq> {
        self.d.tensor_sq(&s.0, &s.1)
    }
    fn comp_constraint(&self, m: &(D::HCell, D::HCell), n: &(D::HCell, D::HCell)) -> Result<D::Sq> {
        self.d.interchanger(&m.0, &m.1, &n.0, &n.1)
    }
    fn unit_constraint(&self, a: &(D::Obj, D::Obj)) -> Result<D::Sq> {
        self.d.unit_comparison(&a.0, &a.1)
    }
}

/// `((a, b), c) |-> (a x b) x c`.
pub type TensorLeft<D> = Composite<Product<Tensor<D>, Identity<D>>, Tensor<D>>;
/// `((a, b), c) |-> a x (b x c)`.
pub type TensorRight<D> = Composite<Reassoc<D, D, D>, Composite<Product<Identity<D>, Tensor<D>>, Tensor<D>>>;
/// `a |-> x (.) a` or `a |-> a (.) x` through the tensor.
pub type TensorWith<D> = Composite<PairWith<D>, Tensor<D>>;

pub fn tensor_left<D: Monoidal + Clone>(d: &D) -> TensorLeft<D> {
    Composite { first: Product::new(Tensor::new(d.clone()), Identity(d.clone())), second: Tensor::new(d.clone()) }
}

pub fn tensor_right<D: Monoidal + Clone>(d: &D) -> TensorRight<D> {
    Composite {
        first: Reassoc::new(d.clone(), d.clone(), d.clone()),
        second: Composite {
            first: Product::new(Identity(d.clone()), Tensor::new(d.clone())),
            second: Tensor::new(d.clone()),
        },
    }
}

/// `x (.) -` when `fixed_left`, else `- (.) x`.
pub fn tensor_with<D: Monoidal + Clone>(d: &D, x: D::Obj, fixed_left: bool) -> TensorWith<D> {
    Composite { first: PairWith::new(d.clone(), x, fixed_left), second: Tensor::new(d.clone()) }
}

/// The associator as a transformation `TensorLeft => TensorRight`.
#[derive(Clone)]
pub struct Associator<D: Monoidal + Clone> {
    f: TensorLeft<D>,
    g: TensorRight<D>,
}

impl<D: Monoidal + Clone> Associator<D> {
    pub fn new(d: D) -> Self {
        Associator { f: tensor_left(&d), g: tensor_right(&d) }
    }
}

impl<D: Monoidal + Clone> DblTransformation for Associator<D> {
    type F = TensorLeft<D>;
    type G = TensorRight<D>;
    fn source(&self) -> &Self::F {
        &self.f
    }
    fn target(&self) -> &Self::G {
        &self.g
    }
    fn component(&self, a: &((D::Obj, D::Obj), D::Obj)) -> D::VMor {
        self.f.second.d.assoc_vmor(&a.0 .0, &a.0 .1, &a.1)
    }
    fn component_sq(&self, m: &((D::HCell, D::HCell), D::HCell)) -> Result<D::Sq> {
        self.f.second.d.assoc_sq(&m.0 .0, &m.0 .1, &m.1)
    }
}

/// The left unitor `I (.) - => Id`.
#[derive(Clone)]
pub struct LeftUnitor<D: Monoidal + Clone> {
    f: TensorWith<D>,
    g: Identity<D>,
}

impl<D: Monoidal + Clone> LeftUnitor<D> {
    pub fn new(d: D) -> Self {
        LeftUnitor { f: tensor_with(&d, d.unit_obj(), true), g: Identity(d) }
    }
}

impl<D: Monoidal + Clone> DblTransformation for LeftUnitor<D> {
    type F = TensorWith<D>;
    type G = Identity<D>;
    fn source(&self) -> &Self::F {
        &self.f
    }
    fn target(&self) -> &Self::G {
        &self.g
    }
    fn component(&self, a: &D::Obj) -> D::VMor {
        self.g.0.lunitor_vmor(a)
    }
    fn component_sq(&self, m: &D::HCell) -> Result<D::Sq> {
        self.g.0.lunitor_sq(m)
    }
}

/// The right unitor `- (.) I => Id`.
#[derive(Clone)]
pub struct RightUnitor<D: Monoidal + Clone> {
    f: TensorWith<D>,
    g: Identity<D>,
}

impl<D: Monoidal + Clone> RightUnitor<D> {
    pub fn new(d: D) -> Self {
        RightUnitor { f: tensor_with(&d, d.unit_obj(), false), g: Identity(d) }
    }
}

impl<D: Monoidal + Clone> DblTransformation for RightUnitor<D> {
    type F = TensorWith<D>;
    type G = Identity<D>;
    fn source(&self) -> &Self::F {
        &self.f
    }
    fn target(&self) -> &Self::G {
        &self.g
    }
    fn component(&self, a: &D::Obj) -> D::VMor {
        self.g.0.runitor_vmor(a)
    }
    fn component_sq(&self, m: &D::HCell) -> Result<D::Sq> {
        self.g.0.runitor_sq(m)
    }
}

pub type Swapped<D> = Composite<Swap<D, D>, Tensor<D>>;

/// The braiding `(a, b) |-> a (.) b  =>  (a, b) |-> b (.) a`.
#[derive(Clone)]
pub struct Braiding<D: Braided + Clone> {
    f: Tensor<D>,
    g: Swapped<D>,
}

impl<D: Braided + Clone> Braiding<D> {
    pub fn new(d: D) -> Self {
        Braiding { f: Tensor::new(d.clone()), g: Composite { first: Swap::new(d.clone(), d.clone()), second: Tensor::new(d) } }
    }
}

impl<D: Braided + Clone> DblTransformation for Braiding<D> {
    type F = Tensor<D>;
    type G = Swapped<D>;
    fn source(&self) -> &Self::F {
        &self.f
    }
    fn target(&self) -> &Self::G {
        &self.g
    }
    fn component(&self, a: &(D::Obj, D::Obj)) -> D::VMor {
        self.f.d.braid_vmor(&a.0, &a.1)
    }
    fn component_sq(&self, m: &(D::HCell, D::HCell)) -> Result<D::Sq> {
        self.f.d.braid_sq(&m.0, &m.1)
    }
}

/// Braiding past a fixed object: `- (.) x => x (.) -`.
#[derive(Clone)]
pub struct BraidWith<D: Braided + Clone> {
    f: TensorWith<D>,
    g: TensorWith<D>,
}

impl<D: Braided + Clone> BraidWith<D> {
    pub fn new(d: D, x: D::Obj) -> Self {
        BraidWith { f: tensor_with(&d, x.clone(), false), g: tensor_with(&d, x, true) }
    }
}

impl<D: Braided + Clone> DblTransformation for BraidWith<D> {
    type F = TensorWith<D>;
    type G = TensorWith<D>;
    fn source(&self) -> &Self::F {
        &self.f
    }
    fn target(&self) -> &Self::G {
        &self.g
    }
    fn component(&self, a: &D::Obj) -> D::VMor {
        self.f.second.d.braid_vmor(a, &self.f.first.x)
    }
    fn component_sq(&self, m: &D::HCell) -> Result<D::Sq> {
        let d = &self.f.second.d;
        d.braid_sq(m, &d.hunit(&self.f.first.x))
    }
}

/// The vertical composite of two transformations `F => G => H`.
#[derive(Clone, Debug)]
pub struct VComposite<A, B> {
    pub first: A,
    pub second: B,
}

impl<A, B> DblTransformation for VComposite<A, B>
where
    A: DblTransformation,
    B: DblTransformation<F = A::G>,
{
    type F = A::F;
    type G = B::G;
    fn source(&self) -> &Self::F {
        self.first.source()
    }
    fn target(&self) -> &Self::G {
        self.second.target()
    }
    fn component(&self, a: &Ob<<A::F as DblFunctor>::Src>) -> VM<<A::F as DblFunctor>::Tgt> {
        let t = self.first.source().target();
        t.vcomp(&self.first.component(a), &self.second.component(a)).expect("components of composable transformations compose")
    }
    fn component_sq(&self, m: &HC<<A::F as DblFunctor>::Src>) -> Result<SQ<<A::F as DblFunctor>::Tgt>> {
        let t = self.first.source().target();
        t.compose_v(&self.first.component_sq(m)?, &self.second.component_sq(m)?)
    }
}

/// The identity transformation on a functor.
#[derive(Clone, Debug)]
pub struct IdentityTransformation<F>(pub F);

impl<F: DblFunctor> DblTransformation for IdentityTransformation<F> {
    type F = F;
    type G = F;
    fn source(&self) -> &F {
        &self.0
    }
    fn target(&self) -> &F {
        &self.0
    }
    fn component(&self, a: &Ob<F::Src>) -> VM<F::Tgt> {
        self.0.target().vid(&self.0.obj(a))
    }
    fn component_sq(&self, m: &HC<F::Src>) -> Result<SQ<F::Tgt>> {
        Ok(self.0.target().sq_id(&self.0.hcell(m)))
    }
}

/// The horizontal composite `beta * alpha: H F => K G` of `alpha: F => G`
/// and `beta: H => K`, with components `H alpha_A ; beta_(G A)`.
#[derive(Clone)]
pub struct Whiskered<A: DblTransformation, B: DblTransformation> {
    pub alpha: A,
    pub beta: B,
    f: Composite<A::F, B::F>,
    g: Composite<A::G, B::G>,
}

impl<A, B> Whiskered<A, B>
where
    A: DblTransformation,
    B: DblTransformation,
    A::F: Clone,
    A::G: Clone,
    B::F: Clone,
    B::G: Clone,
{
    pub fn new(alpha: A, beta: B) -> Self {
        let f = Composite { first: alpha.source().clone(), second: beta.source().clone() };
        let g = Composite { first: alpha.target().clone(), second: beta.target().clone() };
        Whiskered { alpha, beta, f, g }
    }
}

impl<A, B> DblTransformation for Whiskered<A, B>
where
    A: DblTransformation,
    B: DblTransformation,
    B::F: DblFunctor<Src = <A::F as DblFunctor>::Tgt>,
    B::G: DblFunctor<Src = <A::F as DblFunctor>::Tgt>,
{
    type F = Composite<A::F, B::F>;
    type G = Composite<A::G, B::G>;
    fn source(&self) -> &Self::F {
        &self.f
    }
    fn target(&self) -> &Self::G {
        &self.g
    }
    fn component(&self, a: &Ob<<A::F as DblFunctor>::Src>) -> VM<<B::F as DblFunctor>::Tgt> {
        let h = self.beta.source();
        let ga = self.alpha.target().obj(a);
        h.target()
            .vcomp(&h.vmor(&self.alpha.component(a)), &self.beta.component(&ga))
            .expect("whiskered components compose")
    }
    fn component_sq(&self, m: &HC<<A::F as DblFunctor>::Src>) -> Result<SQ<<B::F as DblFunctor>::Tgt>> {
        let h = self.beta.source();
        let gm = self.alpha.target().hcell(m);
        h.target().compose_v(&h.sq(&self.alpha.component_sq(m)?)?, &self.beta.component_sq(&gm)?)
    }
}

pub const GROUP_FUNCTOR: &str = "double functor";
pub const GROUP_TRANSFORMATION: &str = "double transformation";

fn e2s<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(fail)
}

/// Functoriality on the vertical structure, preservation of frames, and
/// naturality, invertibility and coherence of the constraints.
pub fn verify_functor<F, S>(f: &F, u: &S, budget: &SampleBudget) -> Report
where
    F: DblFunctor,
    S: CellSource<Model = F::Src>,
{
    let mut report = Report::new();
    let d = u.model();
    let e = f.target();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_FUNCTOR, name, citation };

    ax("preserves frames and vertical composition", "functors F0 and F1").sample(
        &mut report,
        budget,
        |rng| {
            let a = u.random_square(rng)?;
            let b = u.random_square_below(&d.frame(&a).bottom, rng)?;
            Some((a, b))
        },
        |(a, b)| {
            let fa = d.frame(a);
            let got = e.frame(&e2s(f.sq(a))?);
            let want = Frame { top: f.hcell(&fa.top), left: f.vmor(&fa.left), right: f.vmor(&fa.right), bottom: f.hcell(&fa.bottom) };
            ensure(got == want, || format!("frame of F(a) is {got:?}, expected {want:?}"))?;
            ensure(e.hsrc(&want.top) == f.obj(&d.hsrc(&fa.top)), || "source of F(m)".into())?;
            ensure(e.htgt(&want.top) == f.obj(&d.htgt(&fa.top)), || "target of F(m)".into())?;
            let l = e2s(f.sq(&e2s(d.compose_v(a, b))?))?;
            let r = e2s(e.compose_v(&e2s(f.sq(a))?, &e2s(f.sq(b))?))?;
            same(e, "F(a;b) vs F(a);F(b)", &l, &r)?;
            same(e, "F(1_m) vs 1_(Fm)", &e2s(f.sq(&d.sq_id(&fa.top)))?, &e.sq_id(&f.hcell(&fa.top)))?;
            let g = fa.left.clone();
            let h = d.frame(b).left;
            let fg = e2s(d.vcomp(&g, &h))?;
            ensure(f.vmor(&fg) == e2s(e.vcomp(&f.vmor(&g), &f.vmor(&h)))?, || "F(g;h) vs F(g);F(h)".into())?;
            let a0 = d.vsrc(&g);
            ensure(f.vmor(&d.vid(&a0)) == e.vid(&f.obj(&a0)), || "F(1_A) vs 1_(FA)".into())
        },
    );

    ax("composition constraint is a natural globular isomorphism", "constraint F_comp").sample(
        &mut report,
        budget,
        |rng| u.random_row(2, rng),
        |row| {
            let (fa, fb) = (d.frame(&row[0]), d.frame(&row[1]));
            let top = e2s(f.comp_constraint(&fa.top, &fb.top))?;
            let bot = e2s(f.comp_constraint(&fa.bottom, &fb.bottom))?;
            for s in [&top, &bot] {
                ensure(e.is_globular(s), || format!("not globular: {s:?}"))?;
                ensure(e.sq_inverse(s).is_some(), || format!("not invertible: {s:?}"))?;
            }
            let want = e.globular_frame(
                &e2s(e.hcomp(&f.hcell(&fa.top), &f.hcell(&fb.top)))?,
                &f.hcell(&e2s(d.hcomp(&fa.top, &fb.top))?),
            );
            ensure(e.frame(&top) == want, || format!("constraint frame {:?}", e.frame(&top)))?;
            let l = e2s(e.compose_v(&e2s(e.compose_h(&e2s(f.sq(&row[0]))?, &e2s(f.sq(&row[1]))?))?, &bot))?;
            let r = e2s(e.compose_v(&top, &e2s(f.sq(&e2s(d.compose_h(&row[0], &row[1]))?))?))?;
            same(e, "naturality", &l, &r)
        },
    );

    ax("unit constraint is a natural globular isomorphism", "constraint F_U").sample(
        &mut report,
        budget,
        |rng| u.random_vchain(1, rng),
        |g| {
            let g = &g[0];
            let (a, b) = (d.vsrc(g), d.vtgt(g));
            let ua = e2s(f.unit_constraint(&a))?;
            let ub = e2s(f.unit_constraint(&b))?;
            ensure(e.is_globular(&ua) && e.sq_inverse(&ua).is_some(), || "not a globular isomorphism".into())?;
            let want = e.globular_frame(&e.hunit(&f.obj(&a)), &f.hcell(&d.hunit(&a)));
            ensure(e.frame(&ua) == want, || format!("unit constraint frame {:?}", e.frame(&ua)))?;
            let l = e2s(e.compose_v(&e.sq_unit(&f.vmor(g)), &ub))?;
            let r = e2s(e.compose_v(&ua, &e2s(f.sq(&d.sq_unit(g)))?))?;
            same(e, "naturality", &l, &r)
        },
    );

    let n = crate::verify::cap(u.hchain_count(3));
    ax("associativity of the composition constraint", "coherence of F_comp with associators").run(
        &mut report,
        budget,
        n,
        || u.hchains(3),
        |rng| u.random_hchain(3, rng),
        |c| {
            let (m, n, p) = (&c[0], &c[1], &c[2]);
            let (fm, fn_, fp) = (f.hcell(m), f.hcell(n), f.hcell(p));
            let mn = e2s(d.hcomp(m, n))?;
            let np = e2s(d.hcomp(n, p))?;
            let l = e2s(e.compose_v_all(&[
                e2s(e.compose_h(&e2s(f.comp_constraint(m, n))?, &e.sq_id(&fp)))?,
                e2s(f.comp_constraint(&mn, p))?,
                e2s(f.sq(&e2s(d.assoc(m, n, p))?))?,
            ]))?;
            let r = e2s(e.compose_v_all(&[
                e2s(e.assoc(&fm, &fn_, &fp))?,
                e2s(e.compose_h(&e.sq_id(&fm), &e2s(f.comp_constraint(n, p))?))?,
                e2s(f.comp_constraint(m, &np))?,
            ]))?;
            same(e, "associativity", &l, &r)
        },
    );

    let n = crate::verify::cap(u.hchain_count(1));
    ax("unitality of the constraints", "coherence of F_U with unitors").run(
        &mut report,
        budget,
        n,
        || u.hchains(1),
        |rng| u.random_hchain(1, rng),
        |c| {
            let m = &c[0];
            let fm = f.hcell(m);
            let (a, b) = (d.hsrc(m), d.htgt(m));
            let l = e2s(e.compose_v_all(&[
                e2s(e.compose_h(&e2s(f.unit_constraint(&a))?, &e.sq_id(&fm)))?,
                e2s(f.comp_constraint(&d.hunit(&a), m))?,
                e2s(f.sq(&e2s(d.lunit(m))?))?,
            ]))?;
            same(e, "left unitality", &l, &e2s(e.lunit(&fm))?)?;
            let r = e2s(e.compose_v_all(&[
                e2s(e.compose_h(&e.sq_id(&fm), &e2s(f.unit_constraint(&b))?))?,
                e2s(f.comp_constraint(m, &d.hunit(&b)))?,
                e2s(f.sq(&e2s(d.runit(m))?))?,
            ]))?;
            same(e, "right unitality", &r, &e2s(e.runit(&fm))?)
        },
    );
    report
}

/// Frames of the components, compatibility with the composition and unit
/// constraints of both functors, and naturality on squares.
pub fn verify_transformation<T, S>(t: &T, u: &S, budget: &SampleBudget) -> Report
where
    T: DblTransformation,
    S: CellSource<Model = <T::F as DblFunctor>::Src>,
{
    let mut report = Report::new();
    let d = u.model();
    let (f, g) = (t.source(), t.target());
    let e = f.target();
    let ax = |name: &'static str, citation: &'static str| Axiom { group: GROUP_TRANSFORMATION, name, citation };

    ax("components have the right frames", "components of a double transformation").sample(
        &mut report,
        budget,
        |rng| u.random_hcell(rng),
        |m| {
            let got = e.frame(&e2s(t.component_sq(m))?);
            let want = Frame {
                top: f.hcell(m),
                left: t.component(&d.hsrc(m)),
                right: t.component(&d.htgt(m)),
                bottom: g.hcell(m),
            };
            ensure(got == want, || format!("component frame {got:?}, expected {want:?}"))
        },
    );

    let n = crate::verify::cap(u.hchain_count(2));
    ax("compatible with composition constraints", "transformation axiom for composites").run(
        &mut report,
        budget,
        n,
        || u.hchains(2),
        |rng| u.random_hchain(2, rng),
        |c| {
            let (m, n) = (&c[0], &c[1]);
            let mn = e2s(d.hcomp(m, n))?;
            let l = e2s(e.compose_v(&e2s(f.comp_constraint(m, n))?, &e2s(t.component_sq(&mn))?))?;
            let r = e2s(e.compose_v(
                &e2s(e.compose_h(&e2s(t.component_sq(m))?, &e2s(t.component_sq(n))?))?,
                &e2s(g.comp_constraint(m, n))?,
            ))?;
            same(e, "composite compatibility", &l, &r)
        },
    );

    let objs = u.objects();
    ax("compatible with unit constraints", "transformation axiom for units").run(
        &mut report,
        budget,
        Some(objs.len() as u64),
        || objs.clone(),
        |rng| Some(u.random_object(rng)),
        |a| {
            let l = e2s(e.compose_v(&e2s(f.unit_constraint(a))?, &e2s(t.component_sq(&d.hunit(a)))?))?;
            let r = e2s(e.compose_v(&e.sq_unit(&t.component(a)), &e2s(g.unit_constraint(a))?))?;
            same(e, "unit compatibility", &l, &r)
        },
    );

    ax("natural on morphisms and squares", "naturality of a double transformation").sample(
        &mut report,
        budget,
        |rng| u.random_square(rng),
        |s| {
            let fr = d.frame(s);
            for h in [&fr.left, &fr.right] {
                let l = e2s(e.vcomp(&f.vmor(h), &t.component(&d.vtgt(h))))?;
                let r = e2s(e.vcomp(&t.component(&d.vsrc(h)), &g.vmor(h)))?;
                ensure(l == r, || format!("vertical naturality at {h:?}: {l:?} != {r:?}"))?;
            }
            let l = e2s(e.compose_v(&e2s(f.sq(s))?, &e2s(t.component_sq(&fr.bottom))?))?;
            let r = e2s(e.compose_v(&e2s(t.component_sq(&fr.top))?, &e2s(g.sq(s))?))?;
            same(e, "square naturality", &l, &r)
        },
    );
    report
}
