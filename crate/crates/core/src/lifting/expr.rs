//! Symbolic words of structure 1-cells and the 2-cells between them.
//!
//! A [`Letter`] names a chosen companion of a structure morphism built
//! from object variables; a [`Cell`] names a 2-cell between words of
//! letters. Routes rewrite words symbolically so that a template can be
//! type-checked before anything is evaluated in a model.

use std::fmt;

/// A tensor expression in object variables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ob {
    Var(usize),
    I,
    T(Box<Ob>, Box<Ob>),
}

pub fn v(i: usize) -> Ob {
    Ob::Var(i)
}

pub fn t(a: &Ob, b: &Ob) -> Ob {
    Ob::T(Box::new(a.clone()), Box::new(b.clone()))
}

impl Ob {
    pub fn subst(&self, objs: &[Ob]) -> Ob {
        match self {
            Ob::Var(i) => objs[*i].clone(),
            Ob::I => Ob::I,
            Ob::T(a, b) => t(&a.subst(objs), &b.subst(objs)),
        }
    }

    pub fn mirror(&self) -> Ob {
        match self {
            Ob::T(a, b) => t(&b.mirror(), &a.mirror()),
            other => other.clone(),
        }
    }

    /// The same expression with each variable replaced by a letter and
    /// the unit by its identity.
    pub fn to_letter(&self, args: &[Letter]) -> Letter {
        match self {
            Ob::Var(i) => args[*i].clone(),
            Ob::I => Letter::Id(Ob::I),
            Ob::T(a, b) => Letter::tensor(a.to_letter(args), b.to_letter(args)),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Ob::Var(i) => i + 1,
            Ob::I => 0,
            Ob::T(a, b) => a.arity().max(b.arity()),
        }
    }
}

const NAMES: &[&str] = &["A", "B", "C", "D", "E", "F", "G", "H"];

impl fmt::Display for Ob {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ob::Var(i) => match NAMES.get(*i) {
                Some(n) => write!(f, "{n}"),
                None => write!(f, "X{i}"),
            },
            Ob::I => write!(f, "I"),
            Ob::T(a, b) => {
                let part = |o: &Ob, f: &mut fmt::Formatter<'_>| match o {
                    Ob::T(..) => write!(f, "({o})"),
                    _ => write!(f, "{o}"),
                };
                part(a, f)?;
                part(b, f)
            }
        }
    }
}

/// A companion of a structure morphism, or a tensor of two such.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    Id(Ob),
    Assoc(Ob, Ob, Ob),
    AssocInv(Ob, Ob, Ob),
    LUnit(Ob),
    RUnit(Ob),
    Braid(Ob, Ob),
    Tensor(Box<Letter>, Box<Letter>),
}

impl Letter {
    pub fn tensor(a: Letter, b: Letter) -> Letter {
        Letter::Tensor(Box::new(a), Box::new(b))
    }

    pub fn src(&self) -> Ob {
        match self {
            Letter::Id(x) => x.clone(),
            Letter::Assoc(a, b, c) => t(&t(a, b), c),
            Letter::AssocInv(a, b, c) => t(a, &t(b, c)),
            Letter::LUnit(a) => t(&Ob::I, a),
            Letter::RUnit(a) => t(a, &Ob::I),
            Letter::Braid(a, b) => t(a, b),
            Letter::Tensor(l, r) => t(&l.src(), &r.src()),
        }
    }

    pub fn tgt(&self) -> Ob {
        match self {
            Letter::Id(x) => x.clone(),
            Letter::Assoc(a, b, c) => t(a, &t(b, c)),
            Letter::AssocInv(a, b, c) => t(&t(a, b), c),
            Letter::LUnit(a) | Letter::RUnit(a) => a.clone(),
            Letter::Braid(a, b) => t(b, a),
            Letter::Tensor(l, r) => t(&l.tgt(), &r.tgt()),
        }
    }

    pub fn subst(&self, objs: &[Ob]) -> Letter {
        let s = |o: &Ob| o.subst(objs);
        match self {
            Letter::Id(x) => Letter::Id(s(x)),
            Letter::Assoc(a, b, c) => Letter::Assoc(s(a), s(b), s(c)),
            Letter::AssocInv(a, b, c) => Letter::AssocInv(s(a), s(b), s(c)),
            Letter::LUnit(a) => Letter::LUnit(s(a)),
            Letter::RUnit(a) => Letter::RUnit(s(a)),
            Letter::Braid(a, b) => Letter::Braid(s(a), s(b)),
            Letter::Tensor(l, r) => Letter::tensor(l.subst(objs), r.subst(objs)),
        }
    }

    /// The letter for the reversed tensor product.
    pub fn mirror(&self) -> Letter {
        let m = |o: &Ob| o.mirror();
        match self {
            Letter::Id(x) => Letter::Id(m(x)),
            Letter::Assoc(a, b, c) => Letter::AssocInv(m(c), m(b), m(a)),
            Letter::AssocInv(a, b, c) => Letter::Assoc(m(c), m(b), m(a)),
            Letter::LUnit(a) => Letter::RUnit(m(a)),
            Letter::RUnit(a) => Letter::LUnit(m(a)),
            Letter::Braid(a, b) => Letter::Braid(m(b), m(a)),
            Letter::Tensor(l, r) => Letter::tensor(r.mirror(), l.mirror()),
        }
    }

    /// Inverse letter, for letters built from associators and identities.
    pub fn inverse(&self) -> Option<Letter> {
        Some(match self {
            Letter::Id(x) => Letter::Id(x.clone()),
            Letter::Assoc(a, b, c) => Letter::AssocInv(a.clone(), b.clone(), c.clone()),
            Letter::AssocInv(a, b, c) => Letter::Assoc(a.clone(), b.clone(), c.clone()),
            Letter::Tensor(l, r) => Letter::tensor(l.inverse()?, r.inverse()?),
            _ => return None,
        })
    }

    pub fn is_associativity(&self) -> bool {
        match self {
            Letter::Id(_) | Letter::Assoc(..) | Letter::AssocInv(..) => true,
            Letter::Tensor(l, r) => l.is_associativity() && r.is_associativity(),
            _ => false,
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            Letter::Id(x) | Letter::LUnit(x) | Letter::RUnit(x) => x.arity(),
            Letter::Assoc(a, b, c) | Letter::AssocInv(a, b, c) => a.arity().max(b.arity()).max(c.arity()),
            Letter::Braid(a, b) => a.arity().max(b.arity()),
            Letter::Tensor(l, r) => l.arity().max(r.arity()),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Id(x) => write!(f, "1[{x}]"),
            Letter::Assoc(a, b, c) => write!(f, "a[{a},{b},{c}]"),
            Letter::AssocInv(a, b, c) => write!(f, "a'[{a},{b},{c}]"),
            Letter::LUnit(a) => write!(f, "l[{a}]"),
            Letter::RUnit(a) => write!(f, "r[{a}]"),
            Letter::Braid(a, b) => write!(f, "s[{a},{b}]"),
            Letter::Tensor(l, r) => write!(f, "({l} x {r})"),
        }
    }
}

pub fn show_word(w: &[Letter]) -> String {
    let parts: Vec<String> = w.iter().map(|l| l.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

/// A 2-cell between words of letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Cell {
    /// The comparison between the composite companions of two words
    /// whose vertical composites agree. `pentagon` marks the components
    /// of the pentagonator, which a model may pin.
    Theta { name: String, at: Ob, src: Vec<Letter>, tgt: Vec<Letter>, pentagon: Option<[Ob; 4]> },
    /// The oplax naturality cell of a letter, read as a transformation of
    /// its variables, at the 1-cells given by other letters:
    /// `[S(args), letter_B] => [letter_A, T(args)]`.
    Nat { letter: Letter, args: Vec<Letter> },
    /// Unit coherence: the two words agree after deleting identities.
    UnitCoh { at: Ob, src: Vec<Letter>, tgt: Vec<Letter> },
    /// Tensor of two cells whose words have equal lengths.
    Tensor(Box<Cell>, Box<Cell>),
    Inverse(Box<Cell>),
}

impl Cell {
    pub fn theta(name: &str, src: Vec<Letter>, tgt: Vec<Letter>) -> Cell {
        let at = src.first().or(tgt.first()).map(Letter::src).expect("theta cell between two empty words");
        Cell::Theta { name: name.into(), at, src, tgt, pentagon: None }
    }

    pub fn inv(self) -> Cell {
        match self {
            Cell::Inverse(c) => *c,
            c => Cell::Inverse(Box::new(c)),
        }
    }

    pub fn src(&self) -> Vec<Letter> {
        match self {
            Cell::Theta { src, .. } | Cell::UnitCoh { src, .. } => src.clone(),
            Cell::Nat { letter, args } => vec![letter.src().to_letter(args), nat_end(letter, args, false)],
            Cell::Tensor(l, r) => zip_tensor(&l.src(), &r.src()),
            Cell::Inverse(c) => c.tgt(),
        }
    }

    pub fn tgt(&self) -> Vec<Letter> {
        match self {
            Cell::Theta { tgt, .. } | Cell::UnitCoh { tgt, .. } => tgt.clone(),
            Cell::Nat { letter, args } => vec![nat_end(letter, args, true), letter.tgt().to_letter(args)],
            Cell::Tensor(l, r) => zip_tensor(&l.tgt(), &r.tgt()),
            Cell::Inverse(c) => c.src(),
        }
    }

    /// The object at which both words start.
    pub fn at(&self) -> Ob {
        match self {
            Cell::Theta { at, .. } | Cell::UnitCoh { at, .. } => at.clone(),
            Cell::Nat { letter, args } => letter.src().subst(&ends(args, true)),
            Cell::Tensor(l, r) => t(&l.at(), &r.at()),
            Cell::Inverse(c) => c.at(),
        }
    }

    pub fn name(&self) -> String {
        match self {
            Cell::Theta { name, .. } => name.clone(),
            Cell::Nat { letter, .. } => format!("naturality of {letter}"),
            Cell::UnitCoh { .. } => "unit coherence".into(),
            Cell::Tensor(l, r) => format!("{} x {}", l.name(), r.name()),
            Cell::Inverse(c) => format!("inverse of {}", c.name()),
        }
    }

    pub fn mirror(&self) -> Cell {
        let m = |w: &[Letter]| w.iter().map(Letter::mirror).collect::<Vec<_>>();
        match self {
            Cell::Theta { name, at, src, tgt, .. } => {
                Cell::Theta { name: format!("{name}, mirrored"), at: at.mirror(), src: m(src), tgt: m(tgt), pentagon: None }
            }
            Cell::Nat { letter, args } => Cell::Nat { letter: letter.mirror(), args: m(args) },
            Cell::UnitCoh { at, src, tgt } => Cell::UnitCoh { at: at.mirror(), src: m(src), tgt: m(tgt) },
            Cell::Tensor(l, r) => Cell::Tensor(Box::new(r.mirror()), Box::new(l.mirror())),
            Cell::Inverse(c) => Cell::Inverse(Box::new(c.mirror())),
        }
    }
}

/// Source (`false`) or target (`true`) objects of the argument letters.
pub(crate) fn ends(args: &[Letter], source: bool) -> Vec<Ob> {
    args.iter().map(|a| if source { a.src() } else { a.tgt() }).collect()
}

fn nat_end(letter: &Letter, args: &[Letter], source: bool) -> Letter {
    letter.subst(&ends(args, source))
}

fn zip_tensor(l: &[Letter], r: &[Letter]) -> Vec<Letter> {
    l.iter().zip(r).map(|(a, b)| Letter::tensor(a.clone(), b.clone())).collect()
}

// ---------------------------------------------------------------------------
// Named cells

pub fn pentagonator(a: &Ob, b: &Ob, c: &Ob, d: &Ob) -> Cell {
    let id = |x: &Ob| Letter::Id(x.clone());
    let src = vec![
        Letter::tensor(Letter::Assoc(a.clone(), b.clone(), c.clone()), id(d)),
        Letter::Assoc(a.clone(), t(b, c), d.clone()),
        Letter::tensor(id(a), Letter::Assoc(b.clone(), c.clone(), d.clone())),
    ];
    let tgt = vec![Letter::Assoc(t(a, b), c.clone(), d.clone()), Letter::Assoc(a.clone(), b.clone(), t(c, d))];
    Cell::Theta {
        name: "pentagonator".into(),
        at: t(&t(&t(a, b), c), d),
        src,
        tgt,
        pentagon: Some([a.clone(), b.clone(), c.clone(), d.clone()]),
    }
}

/// Middle unit modification `[a(A,I,B), 1 x l(B)] => [r(A) x 1]`.
pub fn middle_unitor(a: &Ob, b: &Ob) -> Cell {
    Cell::theta(
        "middle unitor",
        vec![
            Letter::Assoc(a.clone(), Ob::I, b.clone()),
            Letter::tensor(Letter::Id(a.clone()), Letter::LUnit(b.clone())),
        ],
        vec![Letter::tensor(Letter::RUnit(a.clone()), Letter::Id(b.clone()))],
    )
}

/// `[a(I,A,B), l(AB)] => [l(A) x 1]`.
pub fn left_unitor_mod(a: &Ob, b: &Ob) -> Cell {
    Cell::theta(
        "left unitor modification",
        vec![Letter::Assoc(Ob::I, a.clone(), b.clone()), Letter::LUnit(t(a, b))],
        vec![Letter::tensor(Letter::LUnit(a.clone()), Letter::Id(b.clone()))],
    )
}

/// `[a(A,B,I), 1 x r(B)] => [r(AB)]`.
pub fn right_unitor_mod(a: &Ob, b: &Ob) -> Cell {
    Cell::theta(
        "right unitor modification",
        vec![
            Letter::Assoc(a.clone(), b.clone(), Ob::I),
            Letter::tensor(Letter::Id(a.clone()), Letter::RUnit(b.clone())),
        ],
        vec![Letter::RUnit(t(a, b))],
    )
}

/// Braiding one object past two:
/// `[s(X,Y) x 1, a(Y,X,Z), 1 x s(X,Z)] => [a(X,Y,Z), s(X,YZ), a(Y,Z,X)]`.
pub fn braid_past_pair(x: &Ob, y: &Ob, z: &Ob) -> Cell {
    let id = |o: &Ob| Letter::Id(o.clone());
    let s = |a: &Ob, b: &Ob| Letter::Braid(a.clone(), b.clone());
    let a = |p: &Ob, q: &Ob, r: &Ob| Letter::Assoc(p.clone(), q.clone(), r.clone());
    Cell::theta(
        "braiding past a pair",
        vec![Letter::tensor(s(x, y), id(z)), a(y, x, z), Letter::tensor(id(y), s(x, z))],
        vec![a(x, y, z), s(x, &t(y, z)), a(y, z, x)],
    )
}

/// Braiding a pair past one object:
/// `[1 x s(Y,Z), a'(X,Z,Y), s(X,Z) x 1] => [a'(X,Y,Z), s(XY,Z), a'(Z,X,Y)]`.
pub fn pair_past_braid(x: &Ob, y: &Ob, z: &Ob) -> Cell {
    let id = |o: &Ob| Letter::Id(o.clone());
    let s = |a: &Ob, b: &Ob| Letter::Braid(a.clone(), b.clone());
    let ai = |p: &Ob, q: &Ob, r: &Ob| Letter::AssocInv(p.clone(), q.clone(), r.clone());
    Cell::theta(
        "pair braided past one",
        vec![Letter::tensor(id(x), s(y, z)), ai(x, z, y), Letter::tensor(s(x, z), id(y))],
        vec![ai(x, y, z), s(&t(x, y), z), ai(z, x, y)],
    )
}

/// The syllepsis component `[] => [s(X,Y), s(Y,X)]`.
pub fn syllepsis(x: &Ob, y: &Ob) -> Cell {
    Cell::Theta {
        name: "syllepsis".into(),
        at: t(x, y),
        src: vec![],
        tgt: vec![Letter::Braid(x.clone(), y.clone()), Letter::Braid(y.clone(), x.clone())],
        pentagon: None,
    }
}

/// `[1(AB)] => [1(A) x 1(B)]`.
pub fn unit_comparison(a: &Ob, b: &Ob) -> Cell {
    Cell::theta(
        "unit comparison",
        vec![Letter::Id(t(a, b))],
        vec![Letter::tensor(Letter::Id(a.clone()), Letter::Id(b.clone()))],
    )
}

/// `[l, l^-1] => []` for an associativity letter.
pub fn cancel(l: &Letter) -> Cell {
    let inv = l.inverse().expect("cancellation needs an invertible letter");
    Cell::Theta { name: "cancellation".into(), at: l.src(), src: vec![l.clone(), inv], tgt: vec![], pentagon: None }
}

/// The comparison between two words of associators with the same ends.
pub fn coherence(src: Vec<Letter>, tgt: Vec<Letter>) -> Cell {
    assert!(src.iter().chain(&tgt).all(Letter::is_associativity), "coherence between non-associativity words");
    let at = src.first().or(tgt.first()).map(Letter::src).expect("coherence between two empty words");
    Cell::Theta { name: "associativity coherence".into(), at, src, tgt, pentagon: None }
}

/// `[1(X)]^k => [1(X)]^j`.
pub fn id_units(x: &Ob, k: usize, j: usize) -> Cell {
    let w = |n| vec![Letter::Id(x.clone()); n];
    Cell::UnitCoh { at: x.clone(), src: w(k), tgt: w(j) }
}

pub fn identity(word: Vec<Letter>) -> Cell {
    let at = word.first().map(Letter::src).expect("identity on an empty word");
    Cell::UnitCoh { at, src: word.clone(), tgt: word }
}

pub fn unit_coherence(src: Vec<Letter>, tgt: Vec<Letter>) -> Cell {
    let strip = |w: &[Letter]| w.iter().filter(|l| !matches!(l, Letter::Id(_))).cloned().collect::<Vec<_>>();
    assert_eq!(strip(&src), strip(&tgt), "unit coherence between different words");
    let at = src.first().or(tgt.first()).map(Letter::src).expect("unit coherence between two empty words");
    Cell::UnitCoh { at, src, tgt }
}

pub fn nat(letter: Letter, args: Vec<Letter>) -> Cell {
    Cell::Nat { letter, args }
}

pub fn tensor(l: Cell, r: Cell) -> Cell {
    Cell::Tensor(Box::new(l), Box::new(r))
}

// ---------------------------------------------------------------------------
// Routes

/// A symbolic rewriting of a word by a sequence of placed cells.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Route {
    pub at: Ob,
    pub start: Vec<Letter>,
    pub word: Vec<Letter>,
    pub steps: Vec<(usize, Cell)>,
}

impl Route {
    pub fn new(at: Ob, start: Vec<Letter>) -> Route {
        Route { at, word: start.clone(), start, steps: Vec::new() }
    }

    /// Places `cell` at `offset`, checking that its source matches.
    pub fn at(mut self, offset: usize, cell: Cell) -> Result<Route, String> {
        let src = cell.src();
        let hi = offset + src.len();
        if hi > self.word.len() || self.word[offset..hi] != src[..] {
            return Err(format!(
                "{} expects {} at {offset} in {}",
                cell.name(),
                show_word(&src),
                show_word(&self.word)
            ));
        }
        let here = if offset == 0 { self.at.clone() } else { self.word[offset - 1].tgt() };
        if here != cell.at() {
            return Err(format!("{} placed at object {here}, expects {}", cell.name(), cell.at()));
        }
        let mut word = self.word[..offset].to_vec();
        word.extend(cell.tgt());
        word.extend_from_slice(&self.word[hi..]);
        self.word = word;
        self.steps.push((offset, cell));
        Ok(self)
    }

    /// Places `cell` at the unique occurrence of its nonempty source.
    pub fn apply(self, cell: Cell) -> Result<Route, String> {
        let src = cell.src();
        if src.is_empty() {
            return Err(format!("{} has an empty source and needs an offset", cell.name()));
        }
        let hits: Vec<usize> = (0..=self.word.len().saturating_sub(src.len()))
            .filter(|&i| self.word.len() >= src.len() && self.word[i..i + src.len()] == src[..])
            .collect();
        match hits.as_slice() {
            [i] => self.at(*i, cell),
            [] => Err(format!("{} source {} not found in {}", cell.name(), show_word(&src), show_word(&self.word))),
            _ => Err(format!("{} source occurs {} times in {}", cell.name(), hits.len(), show_word(&self.word))),
        }
    }

    pub fn mirror(&self) -> Route {
        let m = |w: &[Letter]| w.iter().map(Letter::mirror).collect::<Vec<_>>();
        Route {
            at: self.at.mirror(),
            start: m(&self.start),
            word: m(&self.word),
            steps: self.steps.iter().map(|(o, c)| (*o, c.mirror())).collect(),
        }
    }

    /// Consecutive letters compose.
    pub fn check_word(at: &Ob, w: &[Letter]) -> Result<(), String> {
        let mut here = at.clone();
        for (i, l) in w.iter().enumerate() {
            if l.src() != here {
                return Err(format!("letter {i} ({l}) starts at {}, previous ends at {here}", l.src()));
            }
            here = l.tgt();
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn naturality_cells_have_the_expected_words() {
        let (a, b, c, d, e) = (v(0), v(1), v(2), v(3), v(4));
        let cell = nat(
            Letter::Assoc(v(0), v(1), v(2)),
            vec![Letter::Id(a.clone()), Letter::Id(b.clone()), Letter::Assoc(c.clone(), d.clone(), e.clone())],
        );
        let idab = Letter::tensor(Letter::Id(a.clone()), Letter::Id(b.clone()));
        assert_eq!(
            cell.src(),
            vec![
                Letter::tensor(idab.clone(), Letter::Assoc(c.clone(), d.clone(), e.clone())),
                Letter::Assoc(a.clone(), b.clone(), t(&c, &t(&d, &e))),
            ]
        );
        assert_eq!(cell.tgt()[0], Letter::Assoc(a.clone(), b.clone(), t(&t(&c, &d), &e)));
        assert_eq!(cell.at(), t(&t(&a, &b), &t(&t(&c, &d), &e)));
    }

    #[test]
    fn mirroring_exchanges_the_two_braiding_modifications() {
        let (x, y, z) = (v(0), v(1), v(2));
        let m = braid_past_pair(&x, &y, &z).mirror();
        let p = pair_past_braid(&z, &y, &x);
        assert_eq!((m.src(), m.tgt()), (p.src(), p.tgt()));
    }

    #[test]
    fn mirroring_twice_is_the_identity() {
        let l = Letter::tensor(Letter::Assoc(v(0), t(&v(1), &v(2)), Ob::I), Letter::Braid(v(3), v(0)));
        assert_eq!(l.mirror().mirror(), l);
        assert_eq!(l.mirror().src(), l.src().mirror());
    }

    #[test]
    fn routes_reject_misplaced_cells() {
        let r = Route::new(t(&v(0), &v(1)), vec![Letter::Braid(v(0), v(1))]);
        assert!(r.clone().apply(cancel(&Letter::Assoc(v(0), v(1), v(2)))).is_err());
        let r = r.at(1, syllepsis(&v(1), &v(0))).unwrap();
        assert_eq!(r.word.len(), 3);
        Route::check_word(&r.at, &r.word).unwrap();
    }
}
