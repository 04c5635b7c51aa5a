//! Structure file format.
//!
//! A structure file is a single JSON object with a `kind` tag and a
//! `version` field. The three generated families (`signed`, `interval`,
//! `filter`) are stored as compact descriptors and expanded on load;
//! the `table` kind is a full dump of the operation tables and
//! round-trips exactly. Ground-set elements appear in files as 1-based
//! name arrays, e.g. `[1,3]`; absent delta entries are stored as `-1`.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use cubic_core::{
    interval, BoolElem, FiniteStructure, Interval, PrincipalFilter, SignedSet, Universe, ABSENT,
};

pub const FORMAT_VERSION: u32 = 1;

/// On-disk form of a structure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum StructureFile {
    #[serde(rename = "signed")]
    Signed { version: u32, n: u8 },
    #[serde(rename = "interval")]
    Interval { version: u32, n: u8 },
    #[serde(rename = "filter")]
    Filter { version: u32, n: u8, f: Vec<u32> },
    #[serde(rename = "table")]
    Table {
        version: u32,
        size: usize,
        one: usize,
        join: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        caret: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        delta: Option<Vec<i64>>,
    },
}

/// A structure expanded into tables plus display labels for its
/// elements (signed/interval notation when the kind provides it).
#[derive(Debug)]
pub struct Loaded {
    pub structure: FiniteStructure,
    pub labels: Vec<String>,
}

fn set_label(b: BoolElem) -> String {
    let names: Vec<String> = b.names().iter().map(u32::to_string).collect();
    format!("{{{}}}", names.join(","))
}

pub fn signed_label(s: &SignedSet) -> String {
    format!("<{},{}>", set_label(s.pos()), set_label(s.neg()))
}

pub fn interval_label(iv: &Interval) -> String {
    format!("[{},{}]", set_label(iv.lo()), set_label(iv.hi()))
}

fn universe(n: u8) -> Result<Universe, String> {
    Universe::new(n).map_err(|e| e.to_string())
}

/// Parse a structure file and check its version.
pub fn parse(text: &str) -> Result<StructureFile, String> {
    let file: StructureFile =
        serde_json::from_str(text).map_err(|e| format!("malformed structure file: {e}"))?;
    let version = match &file {
        StructureFile::Signed { version, .. }
        | StructureFile::Interval { version, .. }
        | StructureFile::Filter { version, .. }
        | StructureFile::Table { version, .. } => *version,
    };
    if version != FORMAT_VERSION {
        return Err(format!(
            "unsupported format version {version}, expected {FORMAT_VERSION}"
        ));
    }
    Ok(file)
}

/// Expand a parsed file into tables and element labels.
pub fn realize(file: &StructureFile) -> Result<Loaded, String> {
    match file {
        StructureFile::Signed { n, .. } => {
            let u = universe(*n)?;
            let structure = FiniteStructure::of_signed(u).map_err(|e| e.to_string())?;
            let labels = cubic_core::signed::enumerate(u)
                .iter()
                .map(signed_label)
                .collect();
            Ok(Loaded { structure, labels })
        }
        StructureFile::Interval { n, .. } => {
            let u = universe(*n)?;
            let structure = FiniteStructure::of_intervals(u).map_err(|e| e.to_string())?;
            let labels = interval::enumerate(u).iter().map(interval_label).collect();
            Ok(Loaded { structure, labels })
        }
        StructureFile::Filter { n, f, .. } => {
            let u = universe(*n)?;
            let gen = BoolElem::from_names(u, f).map_err(|e| e.to_string())?;
            let filter = PrincipalFilter::new(u, gen).map_err(|e| e.to_string())?;
            let members = interval::filter_members(&filter);
            let structure =
                FiniteStructure::of_interval_members(&members).map_err(|e| e.to_string())?;
            let labels = members.iter().map(interval_label).collect();
            Ok(Loaded { structure, labels })
        }
        StructureFile::Table {
            size,
            one,
            join,
            caret,
            delta,
            ..
        } => {
            let delta = delta
                .as_ref()
                .map(|t| {
                    t.iter()
                        .map(|&v| match v {
                            -1 => Ok(ABSENT),
                            v if v >= 0 => Ok(v as usize),
                            v => Err(format!("delta entry {v} is neither -1 nor an index")),
                        })
                        .collect::<Result<Vec<usize>, String>>()
                })
                .transpose()?;
            let structure =
                FiniteStructure::from_tables(*size, *one, join.clone(), caret.clone(), delta)
                    .map_err(|e| e.to_string())?;
            let labels = (0..*size).map(|i| i.to_string()).collect();
            Ok(Loaded { structure, labels })
        }
    }
}

/// Dump a structure as a `table`-kind file.
pub fn to_table_file(fs: &FiniteStructure) -> StructureFile {
    StructureFile::Table {
        version: FORMAT_VERSION,
        size: fs.size(),
        one: fs.one(),
        join: fs.join_table().to_vec(),
        caret: fs.caret_table().map(<[usize]>::to_vec),
        delta: fs.delta_table().map(|t| {
            t.iter()
                .map(|&v| if v == ABSENT { -1 } else { v as i64 })
                .collect()
        }),
    }
}

pub fn to_json_line(file: &StructureFile) -> String {
    serde_json::to_string(file).expect("structure files always serialize")
}

pub fn save(path: &Path, file: &StructureFile) -> Result<(), String> {
    let mut text = to_json_line(file);
    text.push('\n');
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

pub fn load(path: &Path) -> Result<(StructureFile, Loaded), String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let file = parse(&text)?;
    let loaded = realize(&file)?;
    Ok((file, loaded))
}

/// Quotient serialization: classes by member index plus the three
/// class-level tables.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientFile {
    pub version: u32,
    pub classes: Vec<Vec<usize>>,
    pub one: usize,
    pub meet: Vec<usize>,
    pub join: Vec<usize>,
    pub arrow: Vec<usize>,
}

impl QuotientFile {
    pub fn of(q: &cubic_core::QuotientLattice) -> QuotientFile {
        QuotientFile {
            version: FORMAT_VERSION,
            classes: q.classes.clone(),
            one: q.one,
            meet: q.meet.clone(),
            join: q.join.clone(),
            arrow: q.arrow.clone(),
        }
    }
}

/// Reconstruction output: the element-indexed interval map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoEntry {
    pub lo: Vec<u32>,
    pub hi: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoFile {
    pub version: u32,
    pub dim: usize,
    pub iso: Vec<IsoEntry>,
}

impl IsoFile {
    pub fn of(rec: &cubic_core::Reconstruction) -> IsoFile {
        IsoFile {
            version: FORMAT_VERSION,
            dim: rec.dim,
            iso: rec
                .map
                .iter()
                .map(|iv| IsoEntry {
                    lo: iv.lo().names(),
                    hi: iv.hi().names(),
                })
                .collect(),
        }
    }
}

pub fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<(), String> {
    let mut text =
        serde_json::to_string(value).map_err(|e| format!("serialization failed: {e}"))?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
}

/// Render an operation-agreement demo table for the composition bridge.
///
/// Fails only if the bridge identity itself is violated, which would
/// indicate a broken build rather than bad input.
pub fn compose_demo(n: u8) -> Result<String, String> {
    let u = universe(n)?;
    let top = SignedSet::top(u);
    let all = cubic_core::signed::enumerate(u);
    let mut out = String::new();
    let mut pairs = 0u64;
    for a in &all {
        for b in &all {
            let composed = a.compose(b);
            let bridge = a.caret(&top.delta(b).map_err(|e| e.to_string())?);
            if composed != bridge {
                return Err(format!(
                    "composition bridge broken at {} o {}",
                    signed_label(a),
                    signed_label(b)
                ));
            }
            let _ = writeln!(
                out,
                "{} o {} = {}",
                signed_label(a),
                signed_label(b),
                signed_label(&composed)
            );
            pairs += 1;
        }
    }
    let _ = writeln!(
        out,
        "verified compose = caret-after-sign-swap on {pairs} pairs"
    );
    Ok(out)
}
