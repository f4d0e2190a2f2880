//! The equations a lifted structure has to satisfy, as pairs of routes
//! between the same words.

use super::expr::*;

/// Two routes from the same word that must give the same 2-cell.
#[derive(Clone, Debug)]
pub struct Equation {
    pub name: &'static str,
    pub citation: &'static str,
    /// Number of object variables.
    pub arity: usize,
    pub first: Route,
    pub second: Route,
}

impl Equation {
    fn new(name: &'static str, citation: &'static str, arity: usize, first: Route, second: Route) -> Result<Self, String> {
        if first.start != second.start || first.at != second.at {
            return Err(format!("{name}: routes start from different words"));
        }
        if first.word != second.word {
            return Err(format!("{name}: routes end at {} and {}", show_word(&first.word), show_word(&second.word)));
        }
        Route::check_word(&first.at, &first.start).map_err(|e| format!("{name}: {e}"))?;
        Route::check_word(&first.at, &first.word).map_err(|e| format!("{name}: {e}"))?;
        Ok(Equation { name, citation, arity, first, second })
    }

    /// The same equation for the reversed tensor product.
    fn mirrored(&self, name: &'static str, citation: &'static str) -> Result<Self, String> {
        Equation::new(name, citation, self.arity, self.first.mirror(), self.second.mirror())
    }
}

fn id(x: &Ob) -> Letter {
    Letter::Id(x.clone())
}
fn a(x: &Ob, y: &Ob, z: &Ob) -> Letter {
    Letter::Assoc(x.clone(), y.clone(), z.clone())
}
fn ai(x: &Ob, y: &Ob, z: &Ob) -> Letter {
    Letter::AssocInv(x.clone(), y.clone(), z.clone())
}
fn s(x: &Ob, y: &Ob) -> Letter {
    Letter::Braid(x.clone(), y.clone())
}
fn tn(l: Letter, r: Letter) -> Letter {
    Letter::tensor(l, r)
}
fn assoc_pattern() -> Letter {
    a(&v(0), &v(1), &v(2))
}

fn vars<const N: usize>() -> [Ob; N] {
    std::array::from_fn(v)
}

/// The two ways around the associahedron on five objects.
pub fn associahedron() -> Result<Equation, String> {
    let [p, q, r, u, w] = vars::<5>();
    let start = vec![
        tn(tn(a(&p, &q, &r), id(&u)), id(&w)),
        tn(a(&p, &t(&q, &r), &u), id(&w)),
        tn(tn(id(&p), a(&q, &r, &u)), id(&w)),
        a(&p, &t(&q, &t(&r, &u)), &w),
        tn(id(&p), a(&q, &t(&r, &u), &w)),
        tn(id(&p), tn(id(&q), a(&r, &u, &w))),
    ];
    let at = t(&t(&t(&t(&p, &q), &r), &u), &w);
    let first = Route::new(at.clone(), start.clone())
        .at(0, tensor(pentagonator(&p, &q, &r, &u), id_units(&w, 3, 2)))?
        .apply(pentagonator(&p, &q, &t(&r, &u), &w))?
        .apply(nat(assoc_pattern(), vec![id(&p), id(&q), a(&r, &u, &w)]).inv())?
        .apply(tensor(unit_comparison(&p, &q).inv(), identity(vec![a(&r, &u, &w)])))?
        .apply(pentagonator(&t(&p, &q), &r, &u, &w))?;
    let second = Route::new(at, start)
        .apply(nat(assoc_pattern(), vec![id(&p), a(&q, &r, &u), id(&w)]))?
        .apply(tensor(id_units(&p, 3, 2), pentagonator(&q, &r, &u, &w)))?
        .apply(pentagonator(&p, &t(&q, &r), &u, &w))?
        .apply(nat(assoc_pattern(), vec![a(&p, &q, &r), id(&u), id(&w)]))?
        .apply(tensor(identity(vec![a(&p, &q, &r)]), unit_comparison(&u, &w).inv()))?
        .apply(pentagonator(&p, &q, &r, &t(&u, &w)))?;
    Equation::new("pentagonator equation", "non-abelian 4-cocycle condition on five objects", 5, first, second)
}

/// Pentagonator at `(A, I, B, C)` against the middle and left unitor
/// modifications.
pub fn first_unit_equation() -> Result<Equation, String> {
    let [p, q, r] = vars::<3>();
    let start = vec![
        tn(a(&p, &Ob::I, &q), id(&r)),
        a(&p, &t(&Ob::I, &q), &r),
        tn(id(&p), a(&Ob::I, &q, &r)),
        tn(id(&p), Letter::LUnit(t(&q, &r))),
    ];
    let at = t(&t(&t(&p, &Ob::I), &q), &r);
    let first = Route::new(at.clone(), start.clone())
        .at(0, pentagonator(&p, &Ob::I, &q, &r))?
        .apply(middle_unitor(&p, &t(&q, &r)))?
        .apply(tensor(identity(vec![Letter::RUnit(p.clone())]), unit_comparison(&q, &r)))?
        .apply(nat(assoc_pattern(), vec![Letter::RUnit(p.clone()), id(&q), id(&r)]).inv())?;
    let second = Route::new(at, start)
        .apply(tensor(id_units(&p, 2, 1), left_unitor_mod(&q, &r)))?
        .apply(nat(assoc_pattern(), vec![id(&p), Letter::LUnit(q.clone()), id(&r)]).inv())?
        .apply(tensor(middle_unitor(&p, &q), id_units(&r, 2, 1)))?;
    Equation::new("first unit equation", "unit condition with the left unitor modification", 3, first, second)
}

/// Pentagonator at `(A, B, I, C)` against the middle and right unitor
/// modifications.
pub fn second_unit_equation() -> Result<Equation, String> {
    let [p, q, r] = vars::<3>();
    let start = vec![
        tn(a(&p, &q, &Ob::I), id(&r)),
        a(&p, &t(&q, &Ob::I), &r),
        tn(id(&p), a(&q, &Ob::I, &r)),
        tn(id(&p), tn(id(&q), Letter::LUnit(r.clone()))),
    ];
    let at = t(&t(&t(&p, &q), &Ob::I), &r);
    let first = Route::new(at.clone(), start.clone())
        .at(0, pentagonator(&p, &q, &Ob::I, &r))?
        .apply(nat(assoc_pattern(), vec![id(&p), id(&q), Letter::LUnit(r.clone())]).inv())?
        .apply(tensor(unit_comparison(&p, &q).inv(), identity(vec![Letter::LUnit(r.clone())])))?
        .apply(middle_unitor(&t(&p, &q), &r))?;
    let second = Route::new(at, start)
        .apply(tensor(id_units(&p, 2, 1), middle_unitor(&q, &r)))?
        .apply(nat(assoc_pattern(), vec![id(&p), Letter::RUnit(q.clone()), id(&r)]).inv())?
        .apply(tensor(right_unitor_mod(&p, &q), id_units(&r, 2, 1)))?;
    Equation::new("second unit equation", "unit condition with the right unitor modification", 3, first, second)
}

/// Braiding one object past three, via the pair `BC` or via single steps.
pub fn braid_past_three() -> Result<Equation, String> {
    let [p, q, r, u] = vars::<4>();
    let start = vec![
        tn(tn(s(&p, &q), id(&r)), id(&u)),
        tn(a(&q, &p, &r), id(&u)),
        tn(tn(id(&q), s(&p, &r)), id(&u)),
        a(&q, &t(&r, &p), &u),
        tn(id(&q), a(&r, &p, &u)),
        tn(id(&q), tn(id(&r), s(&p, &u))),
    ];
    let at = t(&t(&t(&p, &q), &r), &u);
    let first = Route::new(at.clone(), start.clone())
        .at(0, tensor(braid_past_pair(&p, &q, &r), id_units(&u, 3, 3)))?
        .apply(pentagonator(&q, &r, &p, &u))?
        .apply(nat(assoc_pattern(), vec![id(&q), id(&r), s(&p, &u)]).inv())?
        .apply(tensor(unit_comparison(&q, &r).inv(), identity(vec![s(&p, &u)])))?
        .apply(braid_past_pair(&p, &t(&q, &r), &u))?
        .apply(pentagonator(&q, &r, &u, &p).inv())?
        .apply(nat(s(&v(0), &v(1)), vec![id(&p), a(&q, &r, &u)]).inv())?;
    let second = Route::new(at, start)
        .apply(nat(assoc_pattern(), vec![id(&q), s(&p, &r), id(&u)]))?
        .apply(tensor(id_units(&q, 3, 3), braid_past_pair(&p, &r, &u)))?
        .apply(pentagonator(&q, &p, &r, &u))?
        .apply(nat(assoc_pattern(), vec![s(&p, &q), id(&r), id(&u)]))?
        .apply(tensor(identity(vec![s(&p, &q)]), unit_comparison(&r, &u).inv()))?
        .apply(braid_past_pair(&p, &q, &t(&r, &u)))?
        .apply(pentagonator(&p, &q, &r, &u).inv())?;
    Equation::new(
        "one object past three",
        "braiding of one object past a triple tensor, two factorizations",
        4,
        first,
        second,
    )
}

/// The mirror image: three objects past one.
pub fn three_past_braid() -> Result<Equation, String> {
    braid_past_three()?.mirrored("three objects past one", "braiding of a triple tensor past one object, two factorizations")
}

fn insert_cancel(r: Route, offset: usize, l: Letter) -> Result<Route, String> {
    r.at(offset, cancel(&l).inv())
}

/// `s(AB, CD)` factored through single braidings in two orders, related
/// by naturality and the interchange of disjoint braidings.
pub fn pair_past_pair() -> Result<Equation, String> {
    let [p, q, r, u] = vars::<4>();
    let (pq, ru) = (t(&p, &q), t(&r, &u));
    let at = t(&pq, &ru);
    let start = vec![s(&pq, &ru)];

    // Pull out C and D first.
    let mut first = Route::new(at.clone(), start.clone());
    first = insert_cancel(first, 0, ai(&pq, &r, &u))?;
    first = insert_cancel(first, 3, a(&r, &u, &pq))?;
    first = first.apply(braid_past_pair(&pq, &r, &u).inv())?;
    first = insert_cancel(first, 1, tn(a(&p, &q, &r), id(&u)))?;
    first = insert_cancel(first, 4, tn(ai(&r, &p, &q), id(&u)))?;
    first = first.apply(tensor(pair_past_braid(&p, &q, &r), id_units(&u, 3, 3)).inv())?;
    first = insert_cancel(first, 7, tn(id(&r), a(&p, &q, &u)))?;
    first = insert_cancel(first, 10, tn(id(&r), ai(&u, &p, &q)))?;
    first = first.apply(tensor(id_units(&r, 3, 3), pair_past_braid(&p, &q, &u)).inv())?;

    // Pull out A and B first.
    let mut second = Route::new(at, start);
    second = insert_cancel(second, 0, a(&p, &q, &ru))?;
    second = insert_cancel(second, 3, ai(&ru, &p, &q))?;
    second = second.apply(pair_past_braid(&p, &q, &ru).inv())?;
    second = insert_cancel(second, 1, tn(id(&p), ai(&q, &r, &u)))?;
    second = insert_cancel(second, 4, tn(id(&p), a(&r, &u, &q)))?;
    second = second.apply(tensor(id_units(&p, 3, 3), braid_past_pair(&q, &r, &u)).inv())?;
    second = insert_cancel(second, 7, tn(ai(&p, &r, &u), id(&q)))?;
    second = insert_cancel(second, 10, tn(a(&r, &u, &p), id(&q)))?;
    second = second.apply(tensor(braid_past_pair(&p, &r, &u), id_units(&q, 3, 3)).inv())?;

    let (pr, rp, qu, uq) = (t(&p, &r), t(&r, &p), t(&q, &u), t(&u, &q));

    // Both words to a common one where s(A,C) and s(B,D) sit side by side.
    first = insert_cancel(first, 3, a(&p, &t(&r, &q), &u))?;
    first = first.apply(nat(assoc_pattern(), vec![id(&p), s(&q, &r), id(&u)]))?;
    first = first.apply(coherence(
        vec![ai(&pq, &r, &u), tn(a(&p, &q, &r), id(&u)), a(&p, &t(&q, &r), &u)],
        vec![a(&p, &q, &ru), tn(id(&p), ai(&q, &r, &u))],
    ))?;
    first = insert_cancel(first, 6, a(&rp, &q, &u))?;
    first = first.apply(nat(assoc_pattern(), vec![s(&p, &r), id(&q), id(&u)]))?;
    first = first.apply(tensor(identity(vec![s(&p, &r)]), unit_comparison(&q, &u).inv()))?;
    first = first.apply(coherence(
        vec![ai(&p, &t(&r, &q), &u), tn(ai(&p, &r, &q), id(&u)), a(&pr, &q, &u)],
        vec![tn(id(&p), a(&r, &q, &u)), ai(&p, &r, &qu)],
    ))?;
    first = insert_cancel(first, 10, ai(&r, &p, &qu))?;
    first = first.apply(nat(assoc_pattern(), vec![id(&r), id(&p), s(&q, &u)]).inv())?;
    first = first.apply(tensor(unit_comparison(&r, &p).inv(), identity(vec![s(&q, &u)])))?;
    first = first.apply(coherence(
        vec![
            ai(&rp, &q, &u),
            tn(a(&r, &p, &q), id(&u)),
            a(&r, &pq, &u),
            tn(id(&r), a(&p, &q, &u)),
            ai(&r, &p, &qu),
        ],
        vec![],
    ))?;
    first = insert_cancel(first, 9, ai(&r, &t(&p, &u), &q))?;
    first = first.apply(nat(assoc_pattern(), vec![id(&r), s(&p, &u), id(&q)]).inv())?;
    first = first.apply(coherence(
        vec![a(&r, &p, &uq), tn(id(&r), ai(&p, &u, &q)), ai(&r, &t(&p, &u), &q)],
        vec![ai(&rp, &u, &q), tn(a(&r, &p, &u), id(&q))],
    ))?;
    first = first.apply(coherence(
        vec![a(&r, &t(&u, &p), &q), tn(id(&r), a(&u, &p, &q)), ai(&r, &u, &pq)],
        vec![tn(ai(&r, &u, &p), id(&q)), a(&ru, &p, &q)],
    ))?;

    second = insert_cancel(second, 4, ai(&p, &r, &t(&q, &u)))?;
    second = second.apply(nat(assoc_pattern(), vec![id(&p), id(&r), s(&q, &u)]).inv())?;
    second = second.apply(tensor(unit_comparison(&p, &r).inv(), identity(vec![s(&q, &u)])))?;
    second = second.apply(coherence(
        vec![a(&p, &r, &uq), tn(id(&p), ai(&r, &u, &q)), ai(&p, &ru, &q), tn(ai(&p, &r, &u), id(&q))],
        vec![ai(&pr, &u, &q)],
    ))?;
    second = second.apply(nat(Letter::AssocInv(v(0), v(1), v(2)), vec![s(&p, &r), id(&u), id(&q)]).inv())?;
    second = second.apply(tensor(identity(vec![s(&p, &r)]), unit_comparison(&u, &q).inv()))?;
    second = second.apply(tensor(
        unit_coherence(vec![id(&pr), s(&p, &r)], vec![s(&p, &r), id(&rp)]),
        unit_coherence(vec![s(&q, &u), id(&uq)], vec![id(&qu), s(&q, &u)]),
    ))?;

    Equation::new(
        "pair past pair",
        "braiding of a tensor past a tensor, two factorizations",
        4,
        first,
        second,
    )
}

/// Naturality of the braiding in a braiding, against the two modifications.
pub fn braiding_of_braidings() -> Result<Equation, String> {
    let [p, q, r] = vars::<3>();
    let at = t(&t(&p, &q), &r);
    let start = vec![
        tn(s(&p, &q), id(&r)),
        a(&q, &p, &r),
        tn(id(&q), s(&p, &r)),
        ai(&q, &r, &p),
        tn(s(&q, &r), id(&p)),
        a(&r, &q, &p),
    ];
    let first = Route::new(at.clone(), start.clone())
        .apply(braid_past_pair(&p, &q, &r))?
        .apply(cancel(&a(&q, &r, &p)))?
        .apply(nat(s(&v(0), &v(1)), vec![id(&p), s(&q, &r)]).inv())?
        .at(2, cancel(&ai(&p, &r, &q)).inv())?
        .apply(braid_past_pair(&p, &r, &q).inv())?
        .apply(pair_past_braid(&p, &q, &r))?
        .apply(cancel(&a(&p, &q, &r)))?
        .apply(cancel(&ai(&r, &p, &q)))?;
    let second = Route::new(at, start)
        .apply(pair_past_braid(&q, &p, &r))?
        .apply(cancel(&a(&q, &p, &r)))?
        .apply(cancel(&ai(&r, &q, &p)))?
        .apply(nat(s(&v(0), &v(1)), vec![s(&p, &q), id(&r)]))?;
    Equation::new(
        "braiding of braidings",
        "compatibility of the two braiding modifications with naturality of the braiding",
        3,
        first,
        second,
    )
}

/// The syllepsis on `(A, BC)` against the syllepses on `(A, B)` and `(A, C)`.
pub fn syllepsis_past_pair() -> Result<Equation, String> {
    let [p, q, r] = vars::<3>();
    let at = t(&t(&p, &q), &r);
    let first = Route::new(at.clone(), vec![])
        .at(0, tensor(syllepsis(&p, &q), id_units(&r, 0, 2)))?
        .at(1, cancel(&a(&q, &p, &r)).inv())?
        .at(2, tensor(id_units(&q, 0, 2), syllepsis(&p, &r)))?;
    let second = Route::new(at, vec![])
        .at(0, cancel(&a(&p, &q, &r)).inv())?
        .at(1, syllepsis(&p, &t(&q, &r)))?
        .at(2, cancel(&a(&q, &r, &p)).inv())?
        .apply(braid_past_pair(&p, &q, &r).inv())?
        .apply(pair_past_braid(&q, &r, &p).inv())?;
    Equation::new("syllepsis past a pair", "syllepsis of one object and a tensor of two", 3, first, second)
}

pub fn pair_past_syllepsis() -> Result<Equation, String> {
    syllepsis_past_pair()?.mirrored("pair past a syllepsis", "syllepsis of a tensor of two and one object")
}

/// The two syllepses on `s(A,B) ; s(B,A) ; s(A,B)` agree.
pub fn symmetry() -> Result<Equation, String> {
    let [p, q] = vars::<2>();
    let at = t(&p, &q);
    let start = vec![s(&p, &q)];
    let first = Route::new(at.clone(), start.clone()).at(0, syllepsis(&p, &q))?;
    let second = Route::new(at, start).at(1, syllepsis(&q, &p))?;
    Equation::new("symmetry", "syllepsis is symmetric", 2, first, second)
}

/// A modification component with its arity.
pub struct Modification {
    pub name: &'static str,
    pub citation: &'static str,
    pub arity: usize,
    pub cell: Cell,
}

fn modification(name: &'static str, citation: &'static str, arity: usize, cell: Cell) -> Modification {
    Modification { name, citation, arity, cell }
}

pub fn monoidal_modifications() -> Vec<Modification> {
    let [p, q, r, u] = vars::<4>();
    vec![
        modification("pentagonator", "pentagonator is a modification", 4, pentagonator(&p, &q, &r, &u)),
        modification("middle unitor", "middle unitor is a modification", 2, middle_unitor(&p, &q)),
        modification("left unitor", "left unitor modification is a modification", 2, left_unitor_mod(&p, &q)),
        modification("right unitor", "right unitor modification is a modification", 2, right_unitor_mod(&p, &q)),
    ]
}

pub fn braided_modifications() -> Vec<Modification> {
    let [p, q, r] = vars::<3>();
    vec![
        modification("braiding past a pair", "braiding modification is a modification", 3, braid_past_pair(&p, &q, &r)),
        modification("pair past braiding", "braiding modification is a modification", 3, pair_past_braid(&p, &q, &r)),
    ]
}

pub fn sylleptic_modifications() -> Vec<Modification> {
    vec![modification("syllepsis", "syllepsis is a modification", 2, syllepsis(&v(0), &v(1)))]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_template_type_checks() {
        let all: Vec<fn() -> Result<Equation, String>> = vec![
            associahedron,
            first_unit_equation,
            second_unit_equation,
            braid_past_three,
            three_past_braid,
            pair_past_pair,
            braiding_of_braidings,
            syllepsis_past_pair,
            pair_past_syllepsis,
            symmetry,
        ];
        for f in all {
            let e = f().unwrap_or_else(|e| panic!("{e}"));
            for r in [&e.first, &e.second] {
                let mut replay = Route::new(r.at.clone(), r.start.clone());
                for (o, c) in &r.steps {
                    replay = replay.at(*o, c.clone()).unwrap();
                    Route::check_word(&replay.at, &replay.word).unwrap_or_else(|m| panic!("{}: {m}", e.name));
                }
            }
        }
    }

    #[test]
    fn associahedron_ends_at_the_three_step_word() {
        let e = associahedron().unwrap();
        let [p, q, r, u, w] = vars::<5>();
        assert_eq!(
            e.first.word,
            vec![
                a(&t(&t(&p, &q), &r), &u, &w),
                a(&t(&p, &q), &r, &t(&u, &w)),
                a(&p, &q, &t(&r, &t(&u, &w))),
            ]
        );
    }

    #[test]
    fn mirrored_braiding_equation_uses_the_other_modification() {
        let e = three_past_braid().unwrap();
        let c = &e.first.steps[4].1;
        let x = pair_past_braid(&v(3), &t(&v(2), &v(1)), &v(0));
        assert_eq!((c.src(), c.tgt()), (x.src(), x.tgt()));
    }
}
