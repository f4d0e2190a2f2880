//! Small table models, correct and deliberately broken, written out as
//! JSON test fixtures.

use crate::cell::DoubleCategory;
use crate::companions::certify_fibrant;
use crate::error::{CellError, Result};
use crate::lifting::expr::{pentagonator, v};
use crate::lifting::{CheckMode, Level, MonoidalBicategoryData};
use crate::models::graded::GradedModel;
use crate::models::table::*;

/// A fixture file, the structure it is lifted at, and whether the lift
/// should pass.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub file: &'static str,
    pub level: Level,
    pub passes: bool,
    pub spec: TableSpec,
}

/// Every fixture, correct ones first.
pub fn all() -> Result<Vec<Fixture>> {
    let fx = |file, level, passes, spec| Fixture { file, level, passes, spec };
    Ok(vec![
        fx("symmetric.json", Level::Symmetric, true, symmetric()?),
        fx("pinned_pentagonator.json", Level::Symmetric, true, pinned_pentagonator(false)?),
        fx("broken_interchange.json", Level::Monoidal, false, broken_interchange()?),
        fx("broken_hexagon.json", Level::Braided, false, broken_hexagon()?),
        fx("non_companion.json", Level::Monoidal, false, non_companion()?),
        fx("inverted_pentagonator.json", Level::Monoidal, false, pinned_pentagonator(true)?),
        fx("non_involutive_braiding.json", Level::Symmetric, false, non_involutive_braiding()?),
        fx("nonfibrant.json", Level::Monoidal, false, nonfibrant()),
    ])
}

/// One object, two 1-cells, three square labels; symmetric.
pub fn symmetric() -> Result<TableSpec> {
    TableSpec::tabulate_braided(&GradedModel::new(1, 1, 2, 3, 0)?)
}

fn frame(s: &SquareEntry) -> [u32; 4] {
    [s.top, s.left, s.right, s.bottom]
}

/// Another square with the same frame.
fn sibling(spec: &TableSpec, s: u32) -> Result<u32> {
    let f = frame(&spec.squares[s as usize]);
    spec.squares
        .iter()
        .find(|e| e.id != s && frame(e) == f)
        .map(|e| e.id)
        .ok_or_else(|| CellError::InvalidModel(format!("square {s} is alone in its frame")))
}

fn is_identity(spec: &TableSpec, s: u32) -> bool {
    spec.units.square_id.contains(&s)
}

/// One horizontal composite of two non-identity squares is replaced by a
/// different square in the same frame.
pub fn broken_interchange() -> Result<TableSpec> {
    let mut spec = symmetric()?;
    let i = spec
        .compose_h
        .squares
        .iter()
        .position(|r| !is_identity(&spec, r[0]) && !is_identity(&spec, r[1]))
        .expect("graded tables have non-identity composites");
    let bad = sibling(&spec, spec.compose_h.squares[i][2])?;
    spec.compose_h.squares[i][2] = bad;
    Ok(spec)
}

/// One component of the braiding on squares is moved within its frame.
pub fn broken_hexagon() -> Result<TableSpec> {
    let mut spec = symmetric()?;
    let b = spec.braiding.as_mut().expect("tabulated with a braiding");
    let r = b.squares.last().copied().expect("nonempty braiding");
    let bad = sibling(&spec, r[2])?;
    spec.braiding.as_mut().expect("tabulated with a braiding").squares.last_mut().expect("nonempty")[2] = bad;
    Ok(spec)
}

/// The identity of the only object is declared to have a companion whose
/// two cells do not cancel.
pub fn non_companion() -> Result<TableSpec> {
    let mut spec = symmetric()?;
    let f = spec.units.vid[0];
    let u = spec.units.hunit[0];
    let unit_sq = spec.units.square_id[u as usize];
    let other = sibling(&spec, unit_sq)?;
    spec.companions.push([f, u, other, other]);
    spec.vmorphisms[f as usize].name = Some("id0".into());
    Ok(spec)
}

/// Two objects with three 1-cells each. The identity of object 1 gets a
/// companion on a non-unit 1-cell, so the two sides of the pentagonator
/// are different 1-cells; the pentagonator is pinned to its comparison
/// cell, or to the inverse of it.
pub fn pinned_pentagonator(inverted: bool) -> Result<TableSpec> {
    let mut spec = TableSpec::tabulate_braided(&GradedModel::new(2, 1, 3, 1, 0)?)?;
    for x in 0..spec.objects.len() as u32 {
        let label = x as usize;
        let f = spec.units.vid[x as usize];
        let u = spec.units.hunit[x as usize];
        let fhat = spec.hcells.iter().enumerate().filter(|(_, h)| h.src == x).nth(label).expect("three 1-cells").0 as u32;
        let find = |fr: [u32; 4]| spec.squares.iter().find(|e| frame(e) == fr).map(|e| e.id).expect("every frame is filled");
        let down = find([fhat, f, f, u]);
        let up = find([u, f, f, fhat]);
        spec.companions.push([f, fhat, down, up]);
    }
    let model = TableModel::new(spec.clone())?;
    let cert = certify_fibrant(&model, false)?;
    let data = MonoidalBicategoryData::new(&model, &cert, Level::Monoidal, CheckMode::Brute);
    let objs: Vec<ObjId> = (0..spec.objects.len() as u32).map(ObjId).collect();
    let pi = pentagonator(&v(0), &v(1), &v(2), &v(3));
    for a in &objs {
        for b in &objs {
            for c in &objs {
                for d in &objs {
                    let vals = [*a, *b, *c, *d];
                    let mut s = data.cell(&pi, &vals)?.cell;
                    if inverted {
                        s = model.sq_inverse(&s).ok_or_else(|| CellError::NotInvertible(format!("{s:?}")))?;
                    }
                    spec.pentagonator.push([a.0, b.0, c.0, d.0, s.0]);
                }
            }
        }
    }
    Ok(spec)
}

/// `Z_3` with braiding label `a * b`: braided, but the double braiding is
/// not the identity.
pub fn non_involutive_braiding() -> Result<TableSpec> {
    TableSpec::tabulate_braided(&GradedModel::new(3, 3, 1, 1, 1)?)
}

/// The poset `0 <= 1` as a vertical category with only unit 1-cells,
/// tensored by `max`. The arrow `0 -> 1` has no companion.
pub fn nonfibrant() -> TableSpec {
    let max = |a: u32, b: u32| a.max(b);
    // vmorphisms: 0 = id0, 1 = id1, 2 = up; squares: 0 = id on U0,
    // 1 = id on U1, 2 = the unit square of `up`.
    let vmorphisms = vec![
        VMorEntry { src: 0, tgt: 0, name: None },
        VMorEntry { src: 1, tgt: 1, name: None },
        VMorEntry { src: 0, tgt: 1, name: Some("up".into()) },
    ];
    let hcells = vec![HCellEntry { src: 0, tgt: 0, name: None }, HCellEntry { src: 1, tgt: 1, name: None }];
    let squares = vec![
        SquareEntry { id: 0, top: 0, left: 0, right: 0, bottom: 0 },
        SquareEntry { id: 1, top: 1, left: 1, right: 1, bottom: 1 },
        SquareEntry { id: 2, top: 0, left: 2, right: 2, bottom: 1 },
    ];
    let v_src = [0, 1, 0];
    let v_tgt = [0, 1, 1];
    let vmor = |s: u32, t: u32| match (s, t) {
        (0, 0) => 0,
        (1, 1) => 1,
        _ => 2,
    };
    // A square is determined by its left morphism.
    let sq_of = |f: u32| f;
    let left = [0u32, 1, 2];
    let mut compose_v = ComposeV::default();
    for f in 0..3u32 {
        for g in 0..3u32 {
            if v_tgt[f as usize] == v_src[g as usize] {
                let h = vmor(v_src[f as usize], v_tgt[g as usize]);
                compose_v.vmorphisms.push([f, g, h]);
                compose_v.squares.push([sq_of(f), sq_of(g), sq_of(h)]);
            }
        }
    }
    let mut compose_h = ComposeH { hcells: vec![[0, 0, 0], [1, 1, 1]], squares: Vec::new() };
    for s in 0..3u32 {
        compose_h.squares.push([s, s, s]);
    }
    let units = Units { vid: vec![0, 1], hunit: vec![0, 1], square_id: vec![0, 1], square_unit: vec![0, 1, 2] };
    let constraints = Constraints {
        assoc: vec![[0, 0, 0, 0], [1, 1, 1, 1]],
        lunit: vec![[0, 0], [1, 1]],
        runit: vec![[0, 0], [1, 1]],
    };

    let mut t = TensorBlock { unit: 0, ..TensorBlock::default() };
    for a in 0..2 {
        for b in 0..2 {
            t.objects.push([a, b, max(a, b)]);
            t.hcells.push([a, b, max(a, b)]);
            t.unit_comparison.push([a, b, max(a, b)]);
            for c in 0..2 {
                let m = max(max(a, b), c);
                t.assoc.vmorphisms.push([a, b, c, m]);
                t.assoc.squares.push([a, b, c, m]);
            }
            for c in 0..2 {
                for d in 0..2 {
                    // interchanger [m1, n1, m2, n2]: only units compose
                    if a == c && b == d {
                        t.interchanger.push([a, b, c, d, max(a, b)]);
                    }
                }
            }
        }
        t.lunit.vmorphisms.push([a, a]);
        t.lunit.squares.push([a, a]);
        t.runit.vmorphisms.push([a, a]);
        t.runit.squares.push([a, a]);
    }
    for f in 0..3u32 {
        for g in 0..3u32 {
            let (fu, gu) = (f as usize, g as usize);
            let h = vmor(max(v_src[fu], v_src[gu]), max(v_tgt[fu], v_tgt[gu]));
            t.vmorphisms.push([f, g, h]);
            t.squares.push([f, g, sq_of(left[h as usize])]);
        }
    }
    let mut braiding = BraidingBlock::default();
    for a in 0..2 {
        for b in 0..2 {
            braiding.vmorphisms.push([a, b, max(a, b)]);
            braiding.squares.push([a, b, max(a, b)]);
        }
    }
    TableSpec {
        schema_version: SCHEMA_VERSION,
        objects: vec!["0".into(), "1".into()],
        vmorphisms,
        hcells,
        squares,
        compose_v,
        compose_h,
        units,
        constraints,
        tensor: Some(t),
        braiding: Some(braiding),
        companions: Vec::new(),
        conjoints: Vec::new(),
        pentagonator: Vec::new(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_fixture_loads() {
        for f in all().unwrap() {
            TableModel::new(f.spec.clone()).unwrap_or_else(|e| panic!("{}: {e}", f.file));
        }
    }

    #[test]
    fn lifted_equations_alone_see_the_broken_lifts() {
        use crate::lifting::check::{GROUP_MODIFICATIONS, GROUP_MONOIDAL, GROUP_SYLLEPTIC, GROUP_SYMMETRIC};
        use crate::lifting::lift;
        use crate::report::SampleBudget;
        let budget = SampleBudget::new(50, 1);
        let failing = |spec: TableSpec, level| {
            let t = TableModel::new(spec).unwrap();
            let cert = certify_fibrant(&t, false).unwrap();
            let r = lift(&t, &cert, level, CheckMode::Brute, &budget);
            r.failures().map(|f| f.group.clone()).collect::<Vec<_>>()
        };
        let groups = failing(non_involutive_braiding().unwrap(), Level::Symmetric);
        assert!(groups.iter().any(|g| g == GROUP_SYMMETRIC || g == GROUP_SYLLEPTIC), "{groups:?}");
        let groups = failing(pinned_pentagonator(true).unwrap(), Level::Monoidal);
        assert!(groups.iter().any(|g| g == GROUP_MONOIDAL), "{groups:?}");
        assert!(groups.iter().any(|g| g == GROUP_MODIFICATIONS), "{groups:?}");
        assert!(failing(pinned_pentagonator(false).unwrap(), Level::Symmetric).is_empty());
    }
}
