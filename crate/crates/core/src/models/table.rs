//! Fully tabulated finite models, loaded from JSON.
//!
//! Every cell is an index into the tables. Loading checks ranges, frames
//! and totality of every composition, unit and constraint table, and
//! precomputes inverses; the axioms themselves are left to the verifiers.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cell::{DoubleCategory, Enumerable, Frame, FrameOf};
use crate::error::{CellError, Result};
use crate::monoidal::{Braided, Monoidal};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VMorEntry {
    pub src: u32,
    pub tgt: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HCellEntry {
    pub src: u32,
    pub tgt: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareEntry {
    pub id: u32,
    pub top: u32,
    pub left: u32,
    pub right: u32,
    pub bottom: u32,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeV {
    pub vmorphisms: Vec<[u32; 3]>,
    pub squares: Vec<[u32; 3]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComposeH {
    pub hcells: Vec<[u32; 3]>,
    pub squares: Vec<[u32; 3]>,
}

/// Identities: `vid` and `hunit` per object, `square_id` per 1-cell,
/// `square_unit` per vertical morphism.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Units {
    pub vid: Vec<u32>,
    pub hunit: Vec<u32>,
    pub square_id: Vec<u32>,
    pub square_unit: Vec<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Constraints {
    pub assoc: Vec<[u32; 4]>,
    pub lunit: Vec<[u32; 2]>,
    pub runit: Vec<[u32; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TernaryTransformation {
    pub vmorphisms: Vec<[u32; 4]>,
    pub squares: Vec<[u32; 4]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnaryTransformation {
    pub vmorphisms: Vec<[u32; 2]>,
    pub squares: Vec<[u32; 2]>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorBlock {
    pub unit: u32,
    pub objects: Vec<[u32; 3]>,
    pub vmorphisms: Vec<[u32; 3]>,
    pub hcells: Vec<[u32; 3]>,
    pub squares: Vec<[u32; 3]>,
    pub interchanger: Vec<[u32; 5]>,
    pub unit_comparison: Vec<[u32; 3]>,
    pub assoc: TernaryTransformation,
    pub lunit: UnaryTransformation,
    pub runit: UnaryTransformation,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraidingBlock {
    pub vmorphisms: Vec<[u32; 3]>,
    pub squares: Vec<[u32; 3]>,
}

/// The on-disk form of a table model.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableSpec {
    pub schema_version: u32,
    pub objects: Vec<String>,
    pub vmorphisms: Vec<VMorEntry>,
    pub hcells: Vec<HCellEntry>,
    pub squares: Vec<SquareEntry>,
    pub compose_v: ComposeV,
    pub compose_h: ComposeH,
    pub units: Units,
    pub constraints: Constraints,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tensor: Option<TensorBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub braiding: Option<BraidingBlock>,
    /// Declared companions `[vmor, hcell, down, up]`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub companions: Vec<[u32; 4]>,
    /// Declared conjoints `[vmor, hcell, down, up]`, as companions in the
    /// horizontally reversed model.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conjoints: Vec<[u32; 4]>,
    /// Pinned pentagonator components `[a, b, c, d, square]`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub pentagonator: Vec<[u32; 5]>,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ObjId(pub u32);
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VId(pub u32);
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HId(pub u32);
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SqId(pub u32);

macro_rules! id_debug {
    ($t:ty, $p:literal) => {
        impl fmt::Debug for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, concat!($p, "{}"), self.0)
            }
        }
    };
}
id_debug!(ObjId, "o");
id_debug!(VId, "v");
id_debug!(HId, "h");
id_debug!(SqId, "s");

type Key4 = (u32, u32, u32, u32);

#[derive(Debug)]
struct Tensor {
    unit: u32,
    obj: HashMap<(u32, u32), u32>,
    vmor: HashMap<(u32, u32), u32>,
    hcell: HashMap<(u32, u32), u32>,
    sq: HashMap<(u32, u32), u32>,
    interchanger: HashMap<Key4, u32>,
    unit_comparison: HashMap<(u32, u32), u32>,
    assoc_v: HashMap<(u32, u32, u32), u32>,
    assoc_s: HashMap<(u32, u32, u32), u32>,
    lunit_v: HashMap<u32, u32>,
    lunit_s: HashMap<u32, u32>,
    runit_v: HashMap<u32, u32>,
    runit_s: HashMap<u32, u32>,
}

#[derive(Debug)]
struct Braiding {
    vmor: HashMap<(u32, u32), u32>,
    sq: HashMap<(u32, u32), u32>,
}

#[derive(Debug)]
struct Inner {
    spec: TableSpec,
    vcomp: HashMap<(u32, u32), u32>,
    sq_vcomp: HashMap<(u32, u32), u32>,
    hcomp: HashMap<(u32, u32), u32>,
    sq_hcomp: HashMap<(u32, u32), u32>,
    assoc: HashMap<(u32, u32, u32), u32>,
    lunit: HashMap<u32, u32>,
    runit: HashMap<u32, u32>,
    by_frame: HashMap<Key4, Vec<u32>>,
    vinv: Vec<Option<u32>>,
    sqinv: Vec<Option<u32>>,
    tensor: Option<Tensor>,
    braiding: Option<Braiding>,
    pentagonator: HashMap<Key4, u32>,
}

/// A validated table model. Cloning is cheap.
#[derive(Clone)]
pub struct TableModel(Arc<Inner>);

impl fmt::Debug for TableModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.0.spec;
        write!(
            f,
            "TableModel({} objects, {} vmorphisms, {} hcells, {} squares)",
            s.objects.len(),
            s.vmorphisms.len(),
            s.hcells.len(),
            s.squares.len()
        )
    }
}

/// Collects validation problems; the first few are reported.
struct Problems(Vec<String>);

impl Problems {
    fn push(&mut self, msg: String) {
        self.0.push(msg);
    }

    fn finish(self) -> Result<()> {
        if self.0.is_empty() {
            return Ok(());
        }
        let n = self.0.len();
        let mut text = self.0.into_iter().take(8).collect::<Vec<_>>().join("; ");
        if n > 8 {
            text.push_str(&format!("; and {} more", n - 8));
        }
        Err(CellError::InvalidModel(text))
    }
}

fn table<K: std::hash::Hash + Eq + fmt::Debug, const N: usize>(
    rows: &[[u32; N]],
    key: impl Fn(&[u32; N]) -> K,
    what: &str,
    p: &mut Problems,
) -> HashMap<K, u32> {
    let mut out = HashMap::with_capacity(rows.len());
    for r in rows {
        let k = key(r);
        if out.contains_key(&k) {
            p.push(format!("{what}: duplicate entry for {k:?}"));
        }
        out.insert(k, r[N - 1]);
    }
    out
}

impl TableModel {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: TableSpec =
            serde_json::from_str(text).map_err(|e| CellError::InvalidModel(format!("table JSON: {e}")))?;
        TableModel::new(spec)
    }

    pub fn spec(&self) -> &TableSpec {
        &self.0.spec
    }

    pub fn object_name(&self, a: ObjId) -> &str {
        &self.0.spec.objects[a.0 as usize]
    }

    /// A readable name for a vertical morphism.
    pub fn vmor_name(&self, f: VId) -> String {
        let e = &self.0.spec.vmorphisms[f.0 as usize];
        match &e.name {
            Some(n) => format!("{n} ({f:?}: {} -> {})", self.object_name(ObjId(e.src)), self.object_name(ObjId(e.tgt))),
            None => format!("{f:?}: {} -> {}", self.object_name(ObjId(e.src)), self.object_name(ObjId(e.tgt))),
        }
    }

    pub fn has_tensor(&self) -> bool {
        self.0.tensor.is_some()
    }

    pub fn has_braiding(&self) -> bool {
        self.0.braiding.is_some()
    }

    /// The declared companion of `f` as `(hcell, down, up)`, if any.
    pub fn declared_companion(&self, f: VId) -> Option<(HId, SqId, SqId)> {
        self.0.spec.companions.iter().find(|r| r[0] == f.0).map(|r| (HId(r[1]), SqId(r[2]), SqId(r[3])))
    }

    /// The declared conjoint of `f` as `(hcell, down, up)`, if any.
    pub fn declared_conjoint(&self, f: VId) -> Option<(HId, SqId, SqId)> {
        self.0.spec.conjoints.iter().find(|r| r[0] == f.0).map(|r| (HId(r[1]), SqId(r[2]), SqId(r[3])))
    }

    pub fn new(spec: TableSpec) -> Result<Self> {
        let mut p = Problems(Vec::new());
        if spec.schema_version != SCHEMA_VERSION {
            return Err(CellError::InvalidModel(format!(
                "schema_version {} is not supported (expected {SCHEMA_VERSION})",
                spec.schema_version
            )));
        }
        let (no, nv, nh, ns) =
            (spec.objects.len() as u32, spec.vmorphisms.len() as u32, spec.hcells.len() as u32, spec.squares.len() as u32);

        // Ranges and frames of the cells themselves.
        for (i, e) in spec.vmorphisms.iter().enumerate() {
            if e.src >= no || e.tgt >= no {
                p.push(format!("vmorphism {i} has an endpoint out of range"));
            }
        }
        for (i, e) in spec.hcells.iter().enumerate() {
            if e.src >= no || e.tgt >= no {
                p.push(format!("hcell {i} has an endpoint out of range"));
            }
        }
        for (i, s) in spec.squares.iter().enumerate() {
            if s.id != i as u32 {
                p.push(format!("square at position {i} has id {}", s.id));
            }
            if s.top >= nh || s.bottom >= nh || s.left >= nv || s.right >= nv {
                p.push(format!("square {i} refers to a cell out of range"));
            }
        }
        p.finish()?;
        let mut p = Problems(Vec::new());

        let vs = |f: u32| spec.vmorphisms[f as usize].src;
        let vt = |f: u32| spec.vmorphisms[f as usize].tgt;
        let hs = |m: u32| spec.hcells[m as usize].src;
        let ht = |m: u32| spec.hcells[m as usize].tgt;
        let sq = |s: u32| &spec.squares[s as usize];
        for (i, s) in spec.squares.iter().enumerate() {
            if hs(s.top) != vs(s.left) || ht(s.top) != vs(s.right) || hs(s.bottom) != vt(s.left) || ht(s.bottom) != vt(s.right) {
                p.push(format!("square {i} has an incompatible frame"));
            }
        }
        let in_range = |rows: &[u32], bound: u32| rows.iter().all(|&x| x < bound);
        let check_rows = |p: &mut Problems, what: &str, rows: &[&[u32]], bounds: &[u32]| {
            for r in rows {
                if !r.iter().zip(bounds).all(|(&x, &b)| x < b) {
                    p.push(format!("{what}: entry {r:?} out of range"));
                }
            }
        };
        let cv = &spec.compose_v;
        let ch = &spec.compose_h;
        check_rows(&mut p, "compose_v.vmorphisms", &cv.vmorphisms.iter().map(|r| &r[..]).collect::<Vec<_>>(), &[nv; 3]);
        check_rows(&mut p, "compose_v.squares", &cv.squares.iter().map(|r| &r[..]).collect::<Vec<_>>(), &[ns; 3]);
        check_rows(&mut p, "compose_h.hcells", &ch.hcells.iter().map(|r| &r[..]).collect::<Vec<_>>(), &[nh; 3]);
        check_rows(&mut p, "compose_h.squares", &ch.squares.iter().map(|r| &r[..]).collect::<Vec<_>>(), &[ns; 3]);
        let u = &spec.units;
        if u.vid.len() != no as usize || !in_range(&u.vid, nv) {
            p.push("units.vid must list one vmorphism per object".into());
        }
        if u.hunit.len() != no as usize || !in_range(&u.hunit, nh) {
            p.push("units.hunit must list one hcell per object".into());
        }
        if u.square_id.len() != nh as usize || !in_range(&u.square_id, ns) {
            p.push("units.square_id must list one square per hcell".into());
        }
        if u.square_unit.len() != nv as usize || !in_range(&u.square_unit, ns) {
            p.push("units.square_unit must list one square per vmorphism".into());
        }
        let c = &spec.constraints;
        check_rows(&mut p, "constraints.assoc", &c.assoc.iter().map(|r| &r[..]).collect::<Vec<_>>(), &[nh, nh, nh, ns]);
        check_rows(&mut p, "constraints.lunit", &c.lunit.iter().map(|r| &r[..]).collect::<Vec<_>>(), &[nh, ns]);
        check_rows(&mut p, "constraints.runit", &c.runit.iter().map(|r| &r[..]).collect::<Vec<_>>(), &[nh, ns]);
        p.finish()?;
        let mut p = Problems(Vec::new());

        let vcomp = table(&cv.vmorphisms, |r| (r[0], r[1]), "compose_v.vmorphisms", &mut p);
        let sq_vcomp = table(&cv.squares, |r| (r[0], r[1]), "compose_v.squares", &mut p);
        let hcomp = table(&ch.hcells, |r| (r[0], r[1]), "compose_h.hcells", &mut p);
        let sq_hcomp = table(&ch.squares, |r| (r[0], r[1]), "compose_h.squares", &mut p);
        let assoc = table(&c.assoc, |r| (r[0], r[1], r[2]), "constraints.assoc", &mut p);
        let lunit = table(&c.lunit, |r| r[0], "constraints.lunit", &mut p);
        let runit = table(&c.runit, |r| r[0], "constraints.runit", &mut p);

        // Totality and result frames.
        let vid = |a: u32| u.vid[a as usize];
        let hunit = |a: u32| u.hunit[a as usize];
        for a in 0..no {
            let f = vid(a);
            if vs(f) != a || vt(f) != a {
                p.push(format!("units.vid of object {a} is not an endomorphism of it"));
            }
            let m = hunit(a);
            if hs(m) != a || ht(m) != a {
                p.push(format!("units.hunit of object {a} is not an endo-1-cell of it"));
            }
        }
        for f in 0..nv {
            for g in 0..nv {
                if vt(f) != vs(g) {
                    continue;
                }
                match vcomp.get(&(f, g)) {
                    None => p.push(format!("compose_v.vmorphisms has no entry for ({f}, {g})")),
                    Some(&h) if vs(h) != vs(f) || vt(h) != vt(g) => {
                        p.push(format!("compose_v.vmorphisms: ({f}, {g}) -> {h} has the wrong endpoints"))
                    }
                    _ => {}
                }
            }
        }
        for m in 0..nh {
            for n in 0..nh {
                if ht(m) != hs(n) {
                    continue;
                }
                match hcomp.get(&(m, n)) {
                    None => p.push(format!("compose_h.hcells has no entry for ({m}, {n})")),
                    Some(&k) if hs(k) != hs(m) || ht(k) != ht(n) => {
                        p.push(format!("compose_h.hcells: ({m}, {n}) -> {k} has the wrong endpoints"))
                    }
                    _ => {}
                }
            }
        }
        p.finish()?;
        let mut p = Problems(Vec::new());

        let frame_is = |s: u32, top: u32, left: u32, right: u32, bottom: u32| {
            let e = sq(s);
            e.top == top && e.left == left && e.right == right && e.bottom == bottom
        };
        for (m, &s) in u.square_id.iter().enumerate() {
            let m = m as u32;
            if !frame_is(s, m, vid(hs(m)), vid(ht(m)), m) {
                p.push(format!("units.square_id of hcell {m} has the wrong frame"));
            }
        }
        for (f, &s) in u.square_unit.iter().enumerate() {
            let f = f as u32;
            if !frame_is(s, hunit(vs(f)), f, f, hunit(vt(f))) {
                p.push(format!("units.square_unit of vmorphism {f} has the wrong frame"));
            }
        }
        for a in 0..ns {
            for b in 0..ns {
                let (ea, eb) = (sq(a), sq(b));
                if ea.bottom == eb.top {
                    match sq_vcomp.get(&(a, b)) {
                        None => p.push(format!("compose_v.squares has no entry for ({a}, {b})")),
                        Some(&r) => {
                            let (l, rt) = (vcomp[&(ea.left, eb.left)], vcomp[&(ea.right, eb.right)]);
                            if !frame_is(r, ea.top, l, rt, eb.bottom) {
                                p.push(format!("compose_v.squares: ({a}, {b}) -> {r} has the wrong frame"));
                            }
                        }
                    }
                }
                if ea.right == eb.left {
                    match sq_hcomp.get(&(a, b)) {
                        None => p.push(format!("compose_h.squares has no entry for ({a}, {b})")),
                        Some(&r) => {
                            let (t, bt) = (hcomp[&(ea.top, eb.top)], hcomp[&(ea.bottom, eb.bottom)]);
                            if !frame_is(r, t, ea.left, eb.right, bt) {
                                p.push(format!("compose_h.squares: ({a}, {b}) -> {r} has the wrong frame"));
                            }
                        }
                    }
                }
            }
        }
        let globular = |s: u32, top: u32, bottom: u32| frame_is(s, top, vid(hs(top)), vid(ht(top)), bottom);
        for m in 0..nh {
            match lunit.get(&m) {
                Some(&s) if globular(s, hcomp[&(hunit(hs(m)), m)], m) => {}
                Some(_) => p.push(format!("constraints.lunit of hcell {m} has the wrong frame")),
                None => p.push(format!("constraints.lunit has no entry for hcell {m}")),
            }
            match runit.get(&m) {
                Some(&s) if globular(s, hcomp[&(m, hunit(ht(m)))], m) => {}
                Some(_) => p.push(format!("constraints.runit of hcell {m} has the wrong frame")),
                None => p.push(format!("constraints.runit has no entry for hcell {m}")),
            }
            for n in (0..nh).filter(|&n| hs(n) == ht(m)) {
                for q in (0..nh).filter(|&q| hs(q) == ht(n)) {
                    let top = hcomp[&(hcomp[&(m, n)], q)];
                    let bottom = hcomp[&(m, hcomp[&(n, q)])];
                    match assoc.get(&(m, n, q)) {
                        Some(&s) if globular(s, top, bottom) => {}
                        Some(_) => p.push(format!("constraints.assoc of ({m}, {n}, {q}) has the wrong frame")),
                        None => p.push(format!("constraints.assoc has no entry for ({m}, {n}, {q})")),
                    }
                }
            }
        }
        p.finish()?;

        let mut by_frame: HashMap<Key4, Vec<u32>> = HashMap::new();
        for (i, s) in spec.squares.iter().enumerate() {
            by_frame.entry((s.top, s.left, s.right, s.bottom)).or_default().push(i as u32);
        }
        let vinv: Vec<Option<u32>> = (0..nv)
            .map(|f| {
                (0..nv).find(|&g| {
                    vs(g) == vt(f) && vt(g) == vs(f) && vcomp[&(f, g)] == vid(vs(f)) && vcomp[&(g, f)] == vid(vt(f))
                })
            })
            .collect();
        let sqinv: Vec<Option<u32>> = (0..ns)
            .map(|a| {
                let e = sq(a);
                let (l, r) = (vinv[e.left as usize]?, vinv[e.right as usize]?);
                by_frame.get(&(e.bottom, l, r, e.top))?.iter().copied().find(|&b| {
                    sq_vcomp[&(a, b)] == u.square_id[e.top as usize] && sq_vcomp[&(b, a)] == u.square_id[e.bottom as usize]
                })
            })
            .collect();

        let tensor = match &spec.tensor {
            None => None,
            Some(t) => Some(load_tensor(&spec, t, &hcomp, &by_frame)?),
        };
        let braiding = match (&spec.braiding, &tensor) {
            (None, _) => None,
            (Some(_), None) => return Err(CellError::InvalidModel("a braiding block needs a tensor block".into())),
            (Some(b), Some(t)) => Some(load_braiding(&spec, b, t)?),
        };

        let mut p = Problems(Vec::new());
        for (what, rows) in [("companions", &spec.companions), ("conjoints", &spec.conjoints)] {
            for r in rows {
                if r[0] >= nv || r[1] >= nh || r[2] >= ns || r[3] >= ns {
                    p.push(format!("{what}: entry {r:?} out of range"));
                }
            }
        }
        let pentagonator = table(&spec.pentagonator, |r| (r[0], r[1], r[2], r[3]), "pentagonator", &mut p);
        for r in &spec.pentagonator {
            if r[..4].iter().any(|&a| a >= no) || r[4] >= ns {
                p.push(format!("pentagonator: entry {r:?} out of range"));
            }
        }
        if !spec.pentagonator.is_empty() && tensor.is_none() {
            p.push("pentagonator entries need a tensor block".into());
        }
        p.finish()?;

        Ok(TableModel(Arc::new(Inner {
            spec,
            vcomp,
            sq_vcomp,
            hcomp,
            sq_hcomp,
            assoc,
            lunit,
            runit,
            by_frame,
            vinv,
            sqinv,
            tensor,
            braiding,
            pentagonator,
        })))
    }
}

fn load_tensor(
    spec: &TableSpec,
    t: &TensorBlock,
    hcomp: &HashMap<(u32, u32), u32>,
    by_frame: &HashMap<Key4, Vec<u32>>,
) -> Result<Tensor> {
    let mut p = Problems(Vec::new());
    let (no, nv, nh, ns) =
        (spec.objects.len() as u32, spec.vmorphisms.len() as u32, spec.hcells.len() as u32, spec.squares.len() as u32);
    let vs = |f: u32| spec.vmorphisms[f as usize].src;
    let vt = |f: u32| spec.vmorphisms[f as usize].tgt;
    let hs = |m: u32| spec.hcells[m as usize].src;
    let ht = |m: u32| spec.hcells[m as usize].tgt;
    let u = &spec.units;
    let vid = |a: u32| u.vid[a as usize];
    let hunit = |a: u32| u.hunit[a as usize];

    if t.unit >= no {
        return Err(CellError::InvalidModel("tensor.unit out of range".into()));
    }
    let bounds: [(&str, Vec<&[u32]>, Vec<u32>); 10] = [
        ("tensor.objects", t.objects.iter().map(|r| &r[..]).collect(), vec![no; 3]),
        ("tensor.vmorphisms", t.vmorphisms.iter().map(|r| &r[..]).collect(), vec![nv; 3]),
        ("tensor.hcells", t.hcells.iter().map(|r| &r[..]).collect(), vec![nh; 3]),
        ("tensor.squares", t.squares.iter().map(|r| &r[..]).collect(), vec![ns; 3]),
        ("tensor.interchanger", t.interchanger.iter().map(|r| &r[..]).collect(), vec![nh, nh, nh, nh, ns]),
        ("tensor.unit_comparison", t.unit_comparison.iter().map(|r| &r[..]).collect(), vec![no, no, ns]),
        ("tensor.assoc.vmorphisms", t.assoc.vmorphisms.iter().map(|r| &r[..]).collect(), vec![no, no, no, nv]),
        ("tensor.assoc.squares", t.assoc.squares.iter().map(|r| &r[..]).collect(), vec![nh, nh, nh, ns]),
        (
            "tensor.lunit/runit.vmorphisms",
            t.lunit.vmorphisms.iter().chain(&t.runit.vmorphisms).map(|r| &r[..]).collect(),
            vec![no, nv],
        ),
        ("tensor.lunit/runit.squares", t.lunit.squares.iter().chain(&t.runit.squares).map(|r| &r[..]).collect(), vec![nh, ns]),
    ];
    for (what, rows, b) in &bounds {
        for r in rows {
            if !r.iter().zip(b).all(|(&x, &y)| x < y) {
                p.push(format!("{what}: entry {r:?} out of range"));
            }
        }
    }
    p.finish()?;
    let mut p = Problems(Vec::new());

    let obj = table(&t.objects, |r| (r[0], r[1]), "tensor.objects", &mut p);
    let vmor = table(&t.vmorphisms, |r| (r[0], r[1]), "tensor.vmorphisms", &mut p);
    let hcell = table(&t.hcells, |r| (r[0], r[1]), "tensor.hcells", &mut p);
    let sq = table(&t.squares, |r| (r[0], r[1]), "tensor.squares", &mut p);
    let interchanger = table(&t.interchanger, |r| (r[0], r[1], r[2], r[3]), "tensor.interchanger", &mut p);
    let unit_comparison = table(&t.unit_comparison, |r| (r[0], r[1]), "tensor.unit_comparison", &mut p);
    let assoc_v = table(&t.assoc.vmorphisms, |r| (r[0], r[1], r[2]), "tensor.assoc.vmorphisms", &mut p);
    let assoc_s = table(&t.assoc.squares, |r| (r[0], r[1], r[2]), "tensor.assoc.squares", &mut p);
    let lunit_v = table(&t.lunit.vmorphisms, |r| r[0], "tensor.lunit.vmorphisms", &mut p);
    let lunit_s = table(&t.lunit.squares, |r| r[0], "tensor.lunit.squares", &mut p);
    let runit_v = table(&t.runit.vmorphisms, |r| r[0], "tensor.runit.vmorphisms", &mut p);
    let runit_s = table(&t.runit.squares, |r| r[0], "tensor.runit.squares", &mut p);
    p.finish()?;
    let mut p = Problems(Vec::new());

    for a in 0..no {
        for b in 0..no {
            if !obj.contains_key(&(a, b)) {
                p.push(format!("tensor.objects has no entry for ({a}, {b})"));
            }
        }
    }
    p.finish()?;
    let mut p = Problems(Vec::new());
    let to = |a: u32, b: u32| obj[&(a, b)];
    for f in 0..nv {
        for g in 0..nv {
            match vmor.get(&(f, g)) {
                None => p.push(format!("tensor.vmorphisms has no entry for ({f}, {g})")),
                Some(&h) if vs(h) != to(vs(f), vs(g)) || vt(h) != to(vt(f), vt(g)) => {
                    p.push(format!("tensor.vmorphisms: ({f}, {g}) -> {h} has the wrong endpoints"))
                }
                _ => {}
            }
        }
    }
    for m in 0..nh {
        for n in 0..nh {
            match hcell.get(&(m, n)) {
                None => p.push(format!("tensor.hcells has no entry for ({m}, {n})")),
                Some(&k) if hs(k) != to(hs(m), hs(n)) || ht(k) != to(ht(m), ht(n)) => {
                    p.push(format!("tensor.hcells: ({m}, {n}) -> {k} has the wrong endpoints"))
                }
                _ => {}
            }
        }
    }
    p.finish()?;
    let mut p = Problems(Vec::new());

    let frame_is = |s: u32, top: u32, left: u32, right: u32, bottom: u32| {
        let e = &spec.squares[s as usize];
        e.top == top && e.left == left && e.right == right && e.bottom == bottom
    };
    let globular = |s: u32, top: u32, bottom: u32| frame_is(s, top, vid(hs(top)), vid(ht(top)), bottom);
    for a in 0..ns {
        for b in 0..ns {
            let (ea, eb) = (&spec.squares[a as usize], &spec.squares[b as usize]);
            match sq.get(&(a, b)) {
                None => p.push(format!("tensor.squares has no entry for ({a}, {b})")),
                Some(&r) => {
                    if !frame_is(
                        r,
                        hcell[&(ea.top, eb.top)],
                        vmor[&(ea.left, eb.left)],
                        vmor[&(ea.right, eb.right)],
                        hcell[&(ea.bottom, eb.bottom)],
                    ) {
                        p.push(format!("tensor.squares: ({a}, {b}) -> {r} has the wrong frame"));
                    }
                }
            }
        }
    }
    for m1 in 0..nh {
        for n1 in 0..nh {
            for m2 in (0..nh).filter(|&m2| hs(m2) == ht(m1)) {
                for n2 in (0..nh).filter(|&n2| hs(n2) == ht(n1)) {
                    let top = hcomp[&(hcell[&(m1, n1)], hcell[&(m2, n2)])];
                    let bottom = hcell[&(hcomp[&(m1, m2)], hcomp[&(n1, n2)])];
                    match interchanger.get(&(m1, n1, m2, n2)) {
                        Some(&s) if globular(s, top, bottom) => {}
                        Some(_) => p.push(format!("tensor.interchanger at ({m1}, {n1}, {m2}, {n2}) has the wrong frame")),
                        None => p.push(format!("tensor.interchanger has no entry for ({m1}, {n1}, {m2}, {n2})")),
                    }
                }
            }
        }
    }
    for a in 0..no {
        for b in 0..no {
            let top = hunit(to(a, b));
            let bottom = hcell[&(hunit(a), hunit(b))];
            match unit_comparison.get(&(a, b)) {
                Some(&s) if globular(s, top, bottom) => {}
                Some(_) => p.push(format!("tensor.unit_comparison at ({a}, {b}) has the wrong frame")),
                None => p.push(format!("tensor.unit_comparison has no entry for ({a}, {b})")),
            }
            for c in 0..no {
                match assoc_v.get(&(a, b, c)) {
                    Some(&f) if vs(f) == to(to(a, b), c) && vt(f) == to(a, to(b, c)) => {}
                    Some(_) => p.push(format!("tensor.assoc.vmorphisms at ({a}, {b}, {c}) has the wrong endpoints")),
                    None => p.push(format!("tensor.assoc.vmorphisms has no entry for ({a}, {b}, {c})")),
                }
            }
        }
        for (what, tab, left) in [("lunit", &lunit_v, true), ("runit", &runit_v, false)] {
            let src = if left { to(t.unit, a) } else { to(a, t.unit) };
            match tab.get(&a) {
                Some(&f) if vs(f) == src && vt(f) == a => {}
                Some(_) => p.push(format!("tensor.{what}.vmorphisms of object {a} has the wrong endpoints")),
                None => p.push(format!("tensor.{what}.vmorphisms has no entry for object {a}")),
            }
        }
    }
    p.finish()?;
    let mut p = Problems(Vec::new());
    let uo = hunit(t.unit);
    for m in 0..nh {
        for n in 0..nh {
            for q in 0..nh {
                let top = hcell[&(hcell[&(m, n)], q)];
                let bottom = hcell[&(m, hcell[&(n, q)])];
                let left = assoc_v[&(hs(m), hs(n), hs(q))];
                let right = assoc_v[&(ht(m), ht(n), ht(q))];
                match assoc_s.get(&(m, n, q)) {
                    Some(&s) if frame_is(s, top, left, right, bottom) => {}
                    Some(_) => p.push(format!("tensor.assoc.squares at ({m}, {n}, {q}) has the wrong frame")),
                    None => p.push(format!("tensor.assoc.squares has no entry for ({m}, {n}, {q})")),
                }
            }
        }
        for (what, tv, ts, top) in
            [("lunit", &lunit_v, &lunit_s, hcell[&(uo, m)]), ("runit", &runit_v, &runit_s, hcell[&(m, uo)])]
        {
            match ts.get(&m) {
                Some(&s) if frame_is(s, top, tv[&hs(m)], tv[&ht(m)], m) => {}
                Some(_) => p.push(format!("tensor.{what}.squares of hcell {m} has the wrong frame")),
                None => p.push(format!("tensor.{what}.squares has no entry for hcell {m}")),
            }
        }
    }
    p.finish()?;
    let _ = by_frame;

    Ok(Tensor {
        unit: t.unit,
        obj,
        vmor,
        hcell,
        sq,
        interchanger,
        unit_comparison,
        assoc_v,
        assoc_s,
        lunit_v,
        lunit_s,
        runit_v,
        runit_s,
    })
}

fn load_braiding(spec: &TableSpec, b: &BraidingBlock, t: &Tensor) -> Result<Braiding> {
    let mut p = Problems(Vec::new());
    let (no, nv, nh, ns) =
        (spec.objects.len() as u32, spec.vmorphisms.len() as u32, spec.hcells.len() as u32, spec.squares.len() as u32);
    for r in &b.vmorphisms {
        if r[0] >= no || r[1] >= no || r[2] >= nv {
            p.push(format!("braiding.vmorphisms: entry {r:?} out of range"));
        }
    }
    for r in &b.squares {
        if r[0] >= nh || r[1] >= nh || r[2] >= ns {
            p.push(format!("braiding.squares: entry {r:?} out of range"));
        }
    }
    p.finish()?;
    let mut p = Problems(Vec::new());
    let vmor = table(&b.vmorphisms, |r| (r[0], r[1]), "braiding.vmorphisms", &mut p);
    let sq = table(&b.squares, |r| (r[0], r[1]), "braiding.squares", &mut p);
    p.finish()?;
    let mut p = Problems(Vec::new());
    let ve = |f: u32| &spec.vmorphisms[f as usize];
    let he = |m: u32| &spec.hcells[m as usize];
    for a in 0..no {
        for c in 0..no {
            match vmor.get(&(a, c)) {
                Some(&f) if ve(f).src == t.obj[&(a, c)] && ve(f).tgt == t.obj[&(c, a)] => {}
                Some(_) => p.push(format!("braiding.vmorphisms at ({a}, {c}) has the wrong endpoints")),
                None => p.push(format!("braiding.vmorphisms has no entry for ({a}, {c})")),
            }
        }
    }
    p.finish()?;
    let mut p = Problems(Vec::new());
    for m in 0..nh {
        for n in 0..nh {
            let e = sq.get(&(m, n)).map(|&s| &spec.squares[s as usize]);
            let ok = e.is_some_and(|e| {
                e.top == t.hcell[&(m, n)]
                    && e.bottom == t.hcell[&(n, m)]
                    && e.left == vmor[&(he(m).src, he(n).src)]
                    && e.right == vmor[&(he(m).tgt, he(n).tgt)]
            });
            if !ok {
                p.push(format!("braiding.squares at ({m}, {n}) is missing or has the wrong frame"));
            }
        }
    }
    p.finish()?;
    Ok(Braiding { vmor, sq })
}

fn missing(what: &str, key: impl fmt::Debug) -> CellError {
    CellError::frame(format!("{what} is not defined at {key:?}"))
}

impl DoubleCategory for TableModel {
    type Obj = ObjId;
    type VMor = VId;
    type HCell = HId;
    type Sq = SqId;

    fn vsrc(&self, f: &VId) -> ObjId {
        ObjId(self.0.spec.vmorphisms[f.0 as usize].src)
    }
    fn vtgt(&self, f: &VId) -> ObjId {
        ObjId(self.0.spec.vmorphisms[f.0 as usize].tgt)
    }
    fn vid(&self, a: &ObjId) -> VId {
        VId(self.0.spec.units.vid[a.0 as usize])
    }
    fn raw_vcomp(&self, f: &VId, g: &VId) -> Result<VId> {
        self.0.vcomp.get(&(f.0, g.0)).map(|&h| VId(h)).ok_or_else(|| missing("vertical composite", (f, g)))
    }
    fn vinverse(&self, f: &VId) -> Option<VId> {
        self.0.vinv[f.0 as usize].map(VId)
    }
    fn hsrc(&self, m: &HId) -> ObjId {
        ObjId(self.0.spec.hcells[m.0 as usize].src)
    }
    fn htgt(&self, m: &HId) -> ObjId {
        ObjId(self.0.spec.hcells[m.0 as usize].tgt)
    }
    fn hunit(&self, a: &ObjId) -> HId {
        HId(self.0.spec.units.hunit[a.0 as usize])
    }
    fn raw_hcomp(&self, m: &HId, n: &HId) -> Result<HId> {
        self.0.hcomp.get(&(m.0, n.0)).map(|&k| HId(k)).ok_or_else(|| missing("horizontal composite", (m, n)))
    }
    fn frame(&self, s: &SqId) -> FrameOf<Self> {
        let e = &self.0.spec.squares[s.0 as usize];
        Frame { top: HId(e.top), left: VId(e.left), right: VId(e.right), bottom: HId(e.bottom) }
    }
    fn sq_id(&self, m: &HId) -> SqId {
        SqId(self.0.spec.units.square_id[m.0 as usize])
    }
    fn sq_unit(&self, f: &VId) -> SqId {
        SqId(self.0.spec.units.square_unit[f.0 as usize])
    }
    fn raw_sq_vcomp(&self, a: &SqId, b: &SqId) -> Result<SqId> {
        self.0.sq_vcomp.get(&(a.0, b.0)).map(|&r| SqId(r)).ok_or_else(|| missing("vertical square composite", (a, b)))
    }
    fn raw_sq_hcomp(&self, a: &SqId, b: &SqId) -> Result<SqId> {
        self.0.sq_hcomp.get(&(a.0, b.0)).map(|&r| SqId(r)).ok_or_else(|| missing("horizontal square composite", (a, b)))
    }
    fn raw_assoc(&self, m: &HId, n: &HId, p: &HId) -> Result<SqId> {
        self.0.assoc.get(&(m.0, n.0, p.0)).map(|&r| SqId(r)).ok_or_else(|| missing("associator", (m, n, p)))
    }
    fn raw_lunit(&self, m: &HId) -> Result<SqId> {
        self.0.lunit.get(&m.0).map(|&r| SqId(r)).ok_or_else(|| missing("left unitor", m))
    }
    fn raw_runit(&self, m: &HId) -> Result<SqId> {
        self.0.runit.get(&m.0).map(|&r| SqId(r)).ok_or_else(|| missing("right unitor", m))
    }
    fn sq_inverse(&self, s: &SqId) -> Option<SqId> {
        self.0.sqinv[s.0 as usize].map(SqId)
    }
}

impl Enumerable for TableModel {
    fn objects(&self) -> Vec<ObjId> {
        (0..self.0.spec.objects.len() as u32).map(ObjId).collect()
    }
    fn vmors_between(&self, a: &ObjId, b: &ObjId) -> Vec<VId> {
        let v = &self.0.spec.vmorphisms;
        (0..v.len() as u32).filter(|&f| v[f as usize].src == a.0 && v[f as usize].tgt == b.0).map(VId).collect()
    }
    fn hcells_between(&self, a: &ObjId, b: &ObjId) -> Vec<HId> {
        let h = &self.0.spec.hcells;
        (0..h.len() as u32).filter(|&m| h[m as usize].src == a.0 && h[m as usize].tgt == b.0).map(HId).collect()
    }
    fn squares_in_frame(&self, fr: &FrameOf<Self>) -> Vec<SqId> {
        self.0
            .by_frame
            .get(&(fr.top.0, fr.left.0, fr.right.0, fr.bottom.0))
            .map(|v| v.iter().copied().map(SqId).collect())
            .unwrap_or_default()
    }
}

impl TableModel {
    fn tensor(&self) -> &Tensor {
        self.0.tensor.as_ref().expect("table model has no tensor block")
    }
    fn braiding(&self) -> &Braiding {
        self.0.braiding.as_ref().expect("table model has no braiding block")
    }
}

/// Only meaningful when the table has a tensor block; the monoidal
/// methods panic otherwise. Check [`TableModel::has_tensor`] first.
impl Monoidal for TableModel {
    fn unit_obj(&self) -> ObjId {
        ObjId(self.tensor().unit)
    }
    fn tensor_obj(&self, a: &ObjId, b: &ObjId) -> ObjId {
        ObjId(self.tensor().obj[&(a.0, b.0)])
    }
    fn tensor_vmor(&self, f: &VId, g: &VId) -> VId {
        VId(self.tensor().vmor[&(f.0, g.0)])
    }
    fn tensor_hcell(&self, m: &HId, n: &HId) -> HId {
        HId(self.tensor().hcell[&(m.0, n.0)])
    }
    fn tensor_sq(&self, a: &SqId, b: &SqId) -> Result<SqId> {
        Ok(SqId(self.tensor().sq[&(a.0, b.0)]))
    }
    fn interchanger(&self, m1: &HId, n1: &HId, m2: &HId, n2: &HId) -> Result<SqId> {
        let key = (m1.0, n1.0, m2.0, n2.0);
        self.tensor().interchanger.get(&key).map(|&s| SqId(s)).ok_or_else(|| missing("interchanger", key))
    }
    fn unit_comparison(&self, a: &ObjId, b: &ObjId) -> Result<SqId> {
        Ok(SqId(self.tensor().unit_comparison[&(a.0, b.0)]))
    }
    fn assoc_vmor(&self, a: &ObjId, b: &ObjId, c: &ObjId) -> VId {
        VId(self.tensor().assoc_v[&(a.0, b.0, c.0)])
    }
    fn assoc_sq(&self, m: &HId, n: &HId, p: &HId) -> Result<SqId> {
        Ok(SqId(self.tensor().assoc_s[&(m.0, n.0, p.0)]))
    }
    fn lunitor_vmor(&self, a: &ObjId) -> VId {
        VId(self.tensor().lunit_v[&a.0])
    }
    fn lunitor_sq(&self, m: &HId) -> Result<SqId> {
        Ok(SqId(self.tensor().lunit_s[&m.0]))
    }
    fn runitor_vmor(&self, a: &ObjId) -> VId {
        VId(self.tensor().runit_v[&a.0])
    }
    fn runitor_sq(&self, m: &HId) -> Result<SqId> {
        Ok(SqId(self.tensor().runit_s[&m.0]))
    }
    fn pentagonator_override(&self, o: [&ObjId; 4]) -> Option<SqId> {
        self.0.pentagonator.get(&(o[0].0, o[1].0, o[2].0, o[3].0)).map(|&s| SqId(s))
    }
}

impl Braided for TableModel {
    fn braid_vmor(&self, a: &ObjId, b: &ObjId) -> VId {
        VId(self.braiding().vmor[&(a.0, b.0)])
    }
    fn braid_sq(&self, m: &HId, n: &HId) -> Result<SqId> {
        Ok(SqId(self.braiding().sq[&(m.0, n.0)]))
    }
}

/// Assigns indices to the cells of a finite model while tabulating it.
struct Index<D: Enumerable> {
    objs: Vec<D::Obj>,
    obj_ix: HashMap<D::Obj, u32>,
    vmors: Vec<D::VMor>,
    v_ix: HashMap<D::VMor, u32>,
    hcells: Vec<D::HCell>,
    h_ix: HashMap<D::HCell, u32>,
    sqs: Vec<D::Sq>,
    s_ix: HashMap<D::Sq, u32>,
}

fn index_map<T: Clone + Eq + std::hash::Hash>(xs: &[T]) -> HashMap<T, u32> {
    xs.iter().cloned().enumerate().map(|(i, x)| (x, i as u32)).collect()
}

fn not_closed(what: &str, x: impl fmt::Debug) -> CellError {
    CellError::InvalidModel(format!("model is not closed: {what} {x:?} is not among the enumerated cells"))
}

impl<D: Enumerable> Index<D> {
    fn new(d: &D) -> Self {
        let objs = d.objects();
        let vmors = d.all_vmors();
        let hcells = d.all_hcells();
        let mut sqs = Vec::new();
        for top in &hcells {
            for left in d.vmors_from(&d.hsrc(top)) {
                for right in d.vmors_from(&d.htgt(top)) {
                    for bottom in d.hcells_between(&d.vtgt(&left), &d.vtgt(&right)) {
                        let fr = Frame { top: top.clone(), left: left.clone(), right: right.clone(), bottom };
                        sqs.extend(d.squares_in_frame(&fr));
                    }
                }
            }
        }
        Index {
            obj_ix: index_map(&objs),
            v_ix: index_map(&vmors),
            h_ix: index_map(&hcells),
            s_ix: index_map(&sqs),
            objs,
            vmors,
            hcells,
            sqs,
        }
    }
    fn o(&self, a: &D::Obj) -> Result<u32> {
        self.obj_ix.get(a).copied().ok_or_else(|| not_closed("object", a))
    }
    fn v(&self, f: &D::VMor) -> Result<u32> {
        self.v_ix.get(f).copied().ok_or_else(|| not_closed("vertical morphism", f))
    }
    fn h(&self, m: &D::HCell) -> Result<u32> {
        self.h_ix.get(m).copied().ok_or_else(|| not_closed("1-cell", m))
    }
    fn s(&self, s: &D::Sq) -> Result<u32> {
        self.s_ix.get(s).copied().ok_or_else(|| not_closed("square", s))
    }
}

impl TableSpec {
    /// Tabulates a finite model that is closed under all its operations.
    pub fn tabulate<D: Enumerable>(d: &D) -> Result<Self> {
        Ok(Self::tabulate_indexed(d, &Index::new(d))?.0)
    }

    fn tabulate_indexed<D: Enumerable>(d: &D, ix: &Index<D>) -> Result<(Self, ())> {
        let objects = ix.objs.iter().map(|a| format!("{a:?}")).collect();
        let vmorphisms = ix
            .vmors
            .iter()
            .map(|f| Ok(VMorEntry { src: ix.o(&d.vsrc(f))?, tgt: ix.o(&d.vtgt(f))?, name: None }))
            .collect::<Result<_>>()?;
        let hcells = ix
            .hcells
            .iter()
            .map(|m| Ok(HCellEntry { src: ix.o(&d.hsrc(m))?, tgt: ix.o(&d.htgt(m))?, name: None }))
            .collect::<Result<_>>()?;
        let squares = ix
            .sqs
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let fr = d.frame(s);
                Ok(SquareEntry {
                    id: i as u32,
                    top: ix.h(&fr.top)?,
                    left: ix.v(&fr.left)?,
                    right: ix.v(&fr.right)?,
                    bottom: ix.h(&fr.bottom)?,
                })
            })
            .collect::<Result<_>>()?;

        let mut compose_v = ComposeV::default();
        for f in &ix.vmors {
            for g in d.vmors_from(&d.vtgt(f)) {
                compose_v.vmorphisms.push([ix.v(f)?, ix.v(&g)?, ix.v(&d.vcomp(f, &g)?)?]);
            }
        }
        let mut compose_h = ComposeH::default();
        for m in &ix.hcells {
            for n in d.hcells_from(&d.htgt(m)) {
                compose_h.hcells.push([ix.h(m)?, ix.h(&n)?, ix.h(&d.hcomp(m, &n)?)?]);
            }
        }
        for a in &ix.sqs {
            let fa = d.frame(a);
            for b in &ix.sqs {
                let fb = d.frame(b);
                if fa.bottom == fb.top {
                    compose_v.squares.push([ix.s(a)?, ix.s(b)?, ix.s(&d.compose_v(a, b)?)?]);
                }
                if fa.right == fb.left {
                    compose_h.squares.push([ix.s(a)?, ix.s(b)?, ix.s(&d.compose_h(a, b)?)?]);
                }
            }
        }
        let units = Units {
            vid: ix.objs.iter().map(|a| ix.v(&d.vid(a))).collect::<Result<_>>()?,
            hunit: ix.objs.iter().map(|a| ix.h(&d.hunit(a))).collect::<Result<_>>()?,
            square_id: ix.hcells.iter().map(|m| ix.s(&d.sq_id(m))).collect::<Result<_>>()?,
            square_unit: ix.vmors.iter().map(|f| ix.s(&d.sq_unit(f))).collect::<Result<_>>()?,
        };
        let mut constraints = Constraints::default();
        for m in &ix.hcells {
            constraints.lunit.push([ix.h(m)?, ix.s(&d.lunit(m)?)?]);
            constraints.runit.push([ix.h(m)?, ix.s(&d.runit(m)?)?]);
            for n in d.hcells_from(&d.htgt(m)) {
                for p in d.hcells_from(&d.htgt(&n)) {
                    constraints.assoc.push([ix.h(m)?, ix.h(&n)?, ix.h(&p)?, ix.s(&d.assoc(m, &n, &p)?)?]);
                }
            }
        }
        Ok((
            TableSpec {
                schema_version: SCHEMA_VERSION,
                objects,
                vmorphisms,
                hcells,
                squares,
                compose_v,
                compose_h,
                units,
                constraints,
                tensor: None,
                braiding: None,
                companions: Vec::new(),
                conjoints: Vec::new(),
                pentagonator: Vec::new(),
            },
            (),
        ))
    }

    /// Tabulates a finite monoidal model, including its tensor block.
    pub fn tabulate_monoidal<D: Enumerable + Monoidal>(d: &D) -> Result<Self> {
        let ix = Index::new(d);
        let (mut spec, ()) = Self::tabulate_indexed(d, &ix)?;
        spec.tensor = Some(tensor_block(d, &ix)?);
        Ok(spec)
    }

    /// Tabulates a finite braided model, including tensor and braiding.
    pub fn tabulate_braided<D: Enumerable + Braided>(d: &D) -> Result<Self> {
        let ix = Index::new(d);
        let (mut spec, ()) = Self::tabulate_indexed(d, &ix)?;
        spec.tensor = Some(tensor_block(d, &ix)?);
        let mut b = BraidingBlock::default();
        for x in &ix.objs {
            for y in &ix.objs {
                b.vmorphisms.push([ix.o(x)?, ix.o(y)?, ix.v(&d.braid_vmor(x, y))?]);
            }
        }
        for m in &ix.hcells {
            for n in &ix.hcells {
                b.squares.push([ix.h(m)?, ix.h(n)?, ix.s(&d.braid_sq(m, n)?)?]);
            }
        }
        spec.braiding = Some(b);
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("table specs always serialize")
    }
}

fn tensor_block<D: Enumerable + Monoidal>(d: &D, ix: &Index<D>) -> Result<TensorBlock> {
    let mut t = TensorBlock { unit: ix.o(&d.unit_obj())?, ..TensorBlock::default() };
    for a in &ix.objs {
        t.lunit.vmorphisms.push([ix.o(a)?, ix.v(&d.lunitor_vmor(a))?]);
        t.runit.vmorphisms.push([ix.o(a)?, ix.v(&d.runitor_vmor(a))?]);
        for b in &ix.objs {
            t.objects.push([ix.o(a)?, ix.o(b)?, ix.o(&d.tensor_obj(a, b))?]);
            t.unit_comparison.push([ix.o(a)?, ix.o(b)?, ix.s(&d.unit_comparison(a, b)?)?]);
            for c in &ix.objs {
                t.assoc.vmorphisms.push([ix.o(a)?, ix.o(b)?, ix.o(c)?, ix.v(&d.assoc_vmor(a, b, c))?]);
            }
        }
    }
    for f in &ix.vmors {
        for g in &ix.vmors {
            t.vmorphisms.push([ix.v(f)?, ix.v(g)?, ix.v(&d.tensor_vmor(f, g))?]);
        }
    }
    for m in &ix.hcells {
        t.lunit.squares.push([ix.h(m)?, ix.s(&d.lunitor_sq(m)?)?]);
        t.runit.squares.push([ix.h(m)?, ix.s(&d.runitor_sq(m)?)?]);
        for n in &ix.hcells {
            t.hcells.push([ix.h(m)?, ix.h(n)?, ix.h(&d.tensor_hcell(m, n))?]);
            for p in &ix.hcells {
                t.assoc.squares.push([ix.h(m)?, ix.h(n)?, ix.h(p)?, ix.s(&d.assoc_sq(m, n, p)?)?]);
            }
            for m2 in d.hcells_from(&d.htgt(m)) {
                for n2 in d.hcells_from(&d.htgt(n)) {
                    t.interchanger.push([
                        ix.h(m)?,
                        ix.h(n)?,
                        ix.h(&m2)?,
                        ix.h(&n2)?,
                        ix.s(&d.interchanger(m, n, &m2, &n2)?)?,
                    ]);
                }
            }
        }
    }
    for a in &ix.sqs {
        for b in &ix.sqs {
            t.squares.push([ix.s(a)?, ix.s(b)?, ix.s(&d.tensor_sq(a, b)?)?]);
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::GradedModel;
    use crate::monoidal::{verify_braided, verify_monoidal};
    use crate::report::SampleBudget;
    use crate::verify::verify_double_category;

    fn graded() -> GradedModel {
        GradedModel::new(1, 1, 2, 3, 0).unwrap()
    }

    #[test]
    fn tabulated_graded_model_round_trips_and_verifies() {
        let spec = TableSpec::tabulate_braided(&graded()).unwrap();
        assert_eq!(spec.squares.len(), 12);
        let text = spec.to_json();
        let back: TableSpec = serde_json::from_str(&text).unwrap();
        assert_eq!(back, spec);
        let t = TableModel::new(back).unwrap();
        let b = SampleBudget::new(500, 3);
        for r in [verify_double_category(&t, &b), verify_monoidal(&t, &b), verify_braided(&t, &b)] {
            assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn inverses_are_precomputed() {
        let t = TableModel::new(TableSpec::tabulate(&graded()).unwrap()).unwrap();
        for s in t.all_squares_for_test() {
            let inv = t.sq_inverse(&s).expect("graded squares are invertible");
            assert_eq!(t.compose_v(&s, &inv).unwrap(), t.sq_id(&t.frame(&s).top));
        }
    }

    #[test]
    fn missing_entries_are_rejected_at_load() {
        let mut spec = TableSpec::tabulate(&graded()).unwrap();
        spec.compose_h.squares.pop();
        let err = TableModel::new(spec).unwrap_err();
        assert!(matches!(err, CellError::InvalidModel(ref m) if m.contains("compose_h.squares has no entry")), "{err}");
    }

    #[test]
    fn wrong_result_frames_are_rejected_at_load() {
        let mut spec = TableSpec::tabulate(&graded()).unwrap();
        let s = spec.units.square_unit[0];
        spec.units.square_id[0] = if s == spec.units.square_id[0] { 11 } else { s };
        spec.squares[11].bottom = spec.squares[11].top;
        assert!(TableModel::new(spec).is_err());
    }

    #[test]
    fn unknown_schema_version_is_rejected() {
        let mut spec = TableSpec::tabulate(&graded()).unwrap();
        spec.schema_version = 2;
        assert!(TableModel::new(spec).is_err());
    }

    #[test]
    fn corrupted_composite_fails_interchange() {
        let mut spec = TableSpec::tabulate(&graded()).unwrap();
        let t0 = TableModel::new(spec.clone()).unwrap();
        // Swap one horizontal composite for another square in the same frame.
        let row = spec
            .compose_h
            .squares
            .iter_mut()
            .find(|r| t0.squares_in_frame(&t0.frame(&SqId(r[2]))).len() > 1)
            .unwrap();
        let alt = t0.squares_in_frame(&t0.frame(&SqId(row[2]))).into_iter().find(|s| s.0 != row[2]).unwrap();
        row[2] = alt.0;
        let t = TableModel::new(spec).unwrap();
        let r = verify_double_category(&t, &SampleBudget::new(5000, 1));
        assert!(!r.passed());
        let fail = r.failures().find(|f| f.name.contains("interchange")).expect("interchange reported");
        assert!(fail.counterexample.is_some());
    }

    impl TableModel {
        fn all_squares_for_test(&self) -> Vec<SqId> {
            (0..self.0.spec.squares.len() as u32).map(SqId).collect()
        }
    }
}
