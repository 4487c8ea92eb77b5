//! JSON file schemas (versioned) for groups, crossed modules, Lie algebras,
//! lattices, states and r-matrices, with loaders that resolve nested file
//! references relative to the referencing file.

use crate::algebra::{CMat, FiniteGroup, MatrixLieAlgebra};
use crate::complex::{Cell3, Dart, Edge, Face, Slab, TwoComplex};
use crate::crossed::{CrossedModule, Lie2Algebra};
use crate::error::CoreError;
use crate::rmatrix::{Classical2R, Quantum2R, StructureMapKind};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::path::Path;

pub const SCHEMA_VERSION: u32 = 1;

fn schema_err(msg: impl Into<String>) -> CoreError {
    CoreError::Schema(msg.into())
}

// ---------------------------------------------------------------------------
// Groups.
// ---------------------------------------------------------------------------

/// A finite group file: either a full Cayley table or a closed list of
/// permutations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GroupFile {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mul: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub permutations: Option<Vec<Vec<usize>>>,
}

impl GroupFile {
    pub fn build(&self) -> Result<FiniteGroup, CoreError> {
        match (&self.mul, &self.permutations) {
            (Some(mul), None) => {
                if let Some(order) = self.order {
                    if order != mul.len() {
                        return Err(schema_err(format!(
                            "declared order {order} does not match table size {}",
                            mul.len()
                        )));
                    }
                }
                FiniteGroup::from_mul_table(&self.name, mul.clone())
            }
            (None, Some(perms)) => FiniteGroup::from_permutations(&self.name, perms),
            _ => Err(schema_err(
                "group file needs exactly one of `mul` or `permutations`",
            )),
        }
    }
}

pub fn load_group(path: &Path) -> Result<FiniteGroup, CoreError> {
    let text = std::fs::read_to_string(path)?;
    let file: GroupFile = serde_json::from_str(&text).map_err(|e| schema_err(e.to_string()))?;
    file.build()
}

// ---------------------------------------------------------------------------
// Crossed modules.
// ---------------------------------------------------------------------------

/// Either an inline object or a path to another file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Ref<T> {
    Inline(T),
    Path(String),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CrossedModuleFile {
    pub name: String,
    pub g: Ref<GroupFile>,
    pub h: Ref<GroupFile>,
    /// `t[y]` is the image of the H-element `y` in `G`.
    pub t: Vec<usize>,
    /// `act[x][y] = x ▷ y`, a `|G| x |H|` index table.
    pub act: Vec<Vec<usize>>,
}

fn resolve<T, F, U>(r: &Ref<T>, base: &Path, build: F) -> Result<U, CoreError>
where
    T: for<'de> Deserialize<'de> + Clone,
    F: Fn(&T) -> Result<U, CoreError>,
{
    match r {
        Ref::Inline(t) => build(t),
        Ref::Path(p) => {
            let full = base.parent().unwrap_or(Path::new(".")).join(p);
            let text = std::fs::read_to_string(&full)?;
            let t: T = serde_json::from_str(&text).map_err(|e| schema_err(e.to_string()))?;
            build(&t)
        }
    }
}

pub fn load_crossed_module(path: &Path) -> Result<CrossedModule, CoreError> {
    let text = std::fs::read_to_string(path)?;
    let file: CrossedModuleFile =
        serde_json::from_str(&text).map_err(|e| schema_err(e.to_string()))?;
    let g = resolve(&file.g, path, |f| f.build())?;
    let h = resolve(&file.h, path, |f| f.build())?;
    CrossedModule::new(&file.name, g, h, file.t.clone(), file.act.clone())
}

// ---------------------------------------------------------------------------
// Lie algebras and Lie 2-algebras.
// ---------------------------------------------------------------------------

/// Complex entries as `[re, im]` pairs.
pub type CEntry = [f64; 2];

fn cmat_from_entries(rows: &[Vec<CEntry>]) -> Result<CMat, CoreError> {
    CMat::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|&[re, im]| Complex64::new(re, im)).collect())
            .collect(),
    )
}

fn entries_from_cmat(m: &CMat) -> Vec<Vec<CEntry>> {
    (0..m.rows)
        .map(|i| (0..m.cols).map(|j| [m[(i, j)].re, m[(i, j)].im]).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LieAlgebraFile {
    pub name: String,
    pub matrix_dim: usize,
    /// Basis matrices as nested arrays of `[re, im]` pairs.
    pub basis: Vec<Vec<Vec<CEntry>>>,
}

impl LieAlgebraFile {
    pub fn build(&self) -> Result<MatrixLieAlgebra, CoreError> {
        let basis = self
            .basis
            .iter()
            .map(|m| {
                let mat = cmat_from_entries(m)?;
                if mat.rows != self.matrix_dim || mat.cols != self.matrix_dim {
                    return Err(schema_err("basis matrix shape mismatch"));
                }
                Ok(mat)
            })
            .collect::<Result<Vec<_>, _>>()?;
        MatrixLieAlgebra::from_basis(&self.name, basis)
    }
}

pub fn load_lie_algebra(path: &Path) -> Result<MatrixLieAlgebra, CoreError> {
    let text = std::fs::read_to_string(path)?;
    let file: LieAlgebraFile =
        serde_json::from_str(&text).map_err(|e| schema_err(e.to_string()))?;
    file.build()
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Lie2AlgebraFile {
    pub name: String,
    pub g: Ref<LieAlgebraFile>,
    pub h: Ref<LieAlgebraFile>,
    /// `dim_g x dim_h` coefficient matrix of the structure map.
    pub t_lin: Vec<Vec<CEntry>>,
    /// One `dim_h x dim_h` action block per `g`-basis vector.
    pub act_lin: Vec<Vec<Vec<CEntry>>>,
    /// Pairing on `g ⊕ h`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pairing: Option<Vec<Vec<CEntry>>>,
}

pub fn load_lie2_algebra(path: &Path) -> Result<Lie2Algebra, CoreError> {
    let text = std::fs::read_to_string(path)?;
    let file: Lie2AlgebraFile =
        serde_json::from_str(&text).map_err(|e| schema_err(e.to_string()))?;
    let g_alg = resolve(&file.g, path, |f| f.build())?;
    let h_alg = resolve(&file.h, path, |f| f.build())?;
    let t_lin = cmat_from_entries(&file.t_lin)?;
    let act_lin = file
        .act_lin
        .iter()
        .map(|m| cmat_from_entries(m))
        .collect::<Result<Vec<_>, _>>()?;
    let pairing = match &file.pairing {
        Some(p) => cmat_from_entries(p)?,
        None => {
            let n = g_alg.dim + h_alg.dim;
            CMat::zeros(n, n)
        }
    };
    Ok(Lie2Algebra {
        name: file.name,
        g_alg,
        h_alg,
        t_lin,
        act_lin,
        pairing,
    })
}

// ---------------------------------------------------------------------------
// Lattices.
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeFile {
    pub id: usize,
    pub src: usize,
    pub tgt: usize,
    #[serde(default = "default_frame")]
    pub frame: i8,
}

fn default_frame() -> i8 {
    1
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FaceFile {
    pub id: usize,
    pub root: usize,
    /// Source path darts as `[edge, sign]` pairs.
    pub source: Vec<(usize, i8)>,
    pub target: Vec<(usize, i8)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SlabFile {
    #[serde(default)]
    pub left: Vec<(usize, i8)>,
    pub face: usize,
    #[serde(default)]
    pub reversed: bool,
    #[serde(default)]
    pub right: Vec<(usize, i8)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Cell3File {
    pub id: usize,
    pub lhs: Vec<SlabFile>,
    pub rhs: Vec<SlabFile>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LatticeFile {
    pub name: String,
    pub vertices: Vec<usize>,
    pub edges: Vec<EdgeFile>,
    pub faces: Vec<FaceFile>,
    #[serde(default)]
    pub cells3: Vec<Cell3File>,
}

fn darts(pairs: &[(usize, i8)]) -> Vec<Dart> {
    pairs
        .iter()
        .map(|&(e, s)| Dart { edge: e, sign: s })
        .collect()
}

impl LatticeFile {
    pub fn build(&self) -> Result<TwoComplex, CoreError> {
        let complex = TwoComplex {
            name: self.name.clone(),
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge {
                    id: e.id,
                    src: e.src,
                    tgt: e.tgt,
                    frame: e.frame,
                })
                .collect(),
            faces: self
                .faces
                .iter()
                .map(|f| Face {
                    id: f.id,
                    root: f.root,
                    source: darts(&f.source),
                    target: darts(&f.target),
                })
                .collect(),
            cells3: self
                .cells3
                .iter()
                .map(|c| Cell3 {
                    id: c.id,
                    lhs: c
                        .lhs
                        .iter()
                        .map(|s| Slab {
                            left: darts(&s.left),
                            face: s.face,
                            reversed: s.reversed,
                            right: darts(&s.right),
                        })
                        .collect(),
                    rhs: c
                        .rhs
                        .iter()
                        .map(|s| Slab {
                            left: darts(&s.left),
                            face: s.face,
                            reversed: s.reversed,
                            right: darts(&s.right),
                        })
                        .collect(),
                })
                .collect(),
        };
        let report = complex.validate();
        if !report.passed() {
            return Err(schema_err(format!(
                "lattice file fails validation: {}",
                report.violations.join("; ")
            )));
        }
        Ok(complex)
    }
}

pub fn load_lattice(path: &Path) -> Result<TwoComplex, CoreError> {
    let text = std::fs::read_to_string(path)?;
    let file: LatticeFile = serde_json::from_str(&text).map_err(|e| schema_err(e.to_string()))?;
    file.build()
}

// ---------------------------------------------------------------------------
// States and r-matrices.
// ---------------------------------------------------------------------------

/// A sparse state file: configuration index to complex value, or to a stalk
/// dimension in the categorified regime.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StateFile {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<std::collections::BTreeMap<String, CEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stalks: Option<std::collections::BTreeMap<String, usize>>,
}

impl StateFile {
    pub fn dense_values(&self, size: usize) -> Result<Vec<Complex64>, CoreError> {
        let map = self
            .values
            .as_ref()
            .ok_or_else(|| schema_err("state file has no `values`"))?;
        let mut out = vec![Complex64::new(0.0, 0.0); size];
        for (k, &[re, im]) in map {
            let idx: usize = k
                .parse()
                .map_err(|_| schema_err(format!("bad configuration index `{k}`")))?;
            if idx >= size {
                return Err(schema_err(format!(
                    "configuration index {idx} out of range 0..{size}"
                )));
            }
            out[idx] = Complex64::new(re, im);
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RMatrixFile {
    pub name: String,
    /// `classical` blocks: coefficient matrices in the algebra bases.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_gh: Option<Vec<Vec<CEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_hg: Option<Vec<Vec<CEntry>>>,
    /// `quantum` blocks: represented matrices on the tensor square.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_l: Option<Vec<Vec<CEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r_r: Option<Vec<Vec<CEntry>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    /// `identity` or `zero`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub structure_map: Option<String>,
}

impl RMatrixFile {
    pub fn build_classical(&self) -> Result<Classical2R, CoreError> {
        let gh = self
            .r_gh
            .as_ref()
            .ok_or_else(|| schema_err("missing `r_gh` block"))?;
        let hg = self
            .r_hg
            .as_ref()
            .ok_or_else(|| schema_err("missing `r_hg` block"))?;
        Ok(Classical2R {
            r_gh: cmat_from_entries(gh)?,
            r_hg: cmat_from_entries(hg)?,
        })
    }

    pub fn build_quantum(&self) -> Result<Quantum2R, CoreError> {
        let l = self
            .r_l
            .as_ref()
            .ok_or_else(|| schema_err("missing `r_l` block"))?;
        let r = self
            .r_r
            .as_ref()
            .ok_or_else(|| schema_err("missing `r_r` block"))?;
        let t_kind = match self.structure_map.as_deref() {
            None | Some("identity") => StructureMapKind::Identity,
            Some("zero") => StructureMapKind::Zero,
            Some(other) => {
                return Err(schema_err(format!(
                    "unknown structure_map `{other}` (expected identity|zero)"
                )))
            }
        };
        Ok(Quantum2R {
            r_l: cmat_from_entries(l)?,
            r_r: cmat_from_entries(r)?,
            t_kind,
            q: self.q.unwrap_or(1.0),
        })
    }
}

pub fn load_rmatrix(path: &Path) -> Result<RMatrixFile, CoreError> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text).map_err(|e| schema_err(e.to_string()))
}

/// Serializes a represented matrix into file entries (for writing example
/// r-matrix files).
pub fn rmatrix_entries(m: &CMat) -> Vec<Vec<CEntry>> {
    entries_from_cmat(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::library;

    #[test]
    fn group_roundtrip_through_table() {
        let g = library::inn_s3().g;
        let file = GroupFile {
            name: g.name.clone(),
            order: Some(g.order()),
            mul: Some(g.mul.clone()),
            permutations: None,
        };
        let rebuilt = file.build().unwrap();
        assert_eq!(rebuilt, g);
    }

    #[test]
    fn group_file_requires_exactly_one_presentation() {
        let bad = GroupFile {
            name: "x".into(),
            order: None,
            mul: None,
            permutations: None,
        };
        assert!(matches!(bad.build(), Err(CoreError::Schema(_))));
    }

    #[test]
    fn crossed_module_file_with_inline_groups() {
        let cm = library::z4_x2_z4();
        let dir = std::env::temp_dir().join("l2cs-io-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cm.json");
        let file = CrossedModuleFile {
            name: cm.name.clone(),
            g: Ref::Inline(GroupFile {
                name: cm.g.name.clone(),
                order: Some(cm.g.order()),
                mul: Some(cm.g.mul.clone()),
                permutations: None,
            }),
            h: Ref::Inline(GroupFile {
                name: cm.h.name.clone(),
                order: Some(cm.h.order()),
                mul: Some(cm.h.mul.clone()),
                permutations: None,
            }),
            t: cm.t.clone(),
            act: cm.act.clone(),
        };
        std::fs::write(&path, serde_json::to_string_pretty(&file).unwrap()).unwrap();
        let loaded = load_crossed_module(&path).unwrap();
        assert_eq!(loaded, cm);
    }

    #[test]
    fn malformed_group_json_is_a_schema_error() {
        let dir = std::env::temp_dir().join("l2cs-io-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("bad.json");
        std::fs::write(&path, "{\"name\": \"broken\"").unwrap();
        assert!(matches!(load_group(&path), Err(CoreError::Schema(_))));
    }

    #[test]
    fn lattice_file_roundtrip() {
        let lat = crate::complex::tetrahedron();
        let file = LatticeFile {
            name: lat.name.clone(),
            vertices: lat.vertices.clone(),
            edges: lat
                .edges
                .iter()
                .map(|e| EdgeFile {
                    id: e.id,
                    src: e.src,
                    tgt: e.tgt,
                    frame: e.frame,
                })
                .collect(),
            faces: lat
                .faces
                .iter()
                .map(|f| FaceFile {
                    id: f.id,
                    root: f.root,
                    source: f.source.iter().map(|d| (d.edge, d.sign)).collect(),
                    target: f.target.iter().map(|d| (d.edge, d.sign)).collect(),
                })
                .collect(),
            cells3: lat
                .cells3
                .iter()
                .map(|c| Cell3File {
                    id: c.id,
                    lhs: c
                        .lhs
                        .iter()
                        .map(|s| SlabFile {
                            left: s.left.iter().map(|d| (d.edge, d.sign)).collect(),
                            face: s.face,
                            reversed: s.reversed,
                            right: s.right.iter().map(|d| (d.edge, d.sign)).collect(),
                        })
                        .collect(),
                    rhs: c
                        .rhs
                        .iter()
                        .map(|s| SlabFile {
                            left: s.left.iter().map(|d| (d.edge, d.sign)).collect(),
                            face: s.face,
                            reversed: s.reversed,
                            right: s.right.iter().map(|d| (d.edge, d.sign)).collect(),
                        })
                        .collect(),
                })
                .collect(),
        };
        let rebuilt = file.build().unwrap();
        assert_eq!(rebuilt.sorted(), lat.sorted());
    }

    #[test]
    fn state_file_dense_values() {
        let mut values = std::collections::BTreeMap::new();
        values.insert("0".to_string(), [1.0, 0.0]);
        values.insert("3".to_string(), [0.0, -2.0]);
        let f = StateFile {
            name: "s".into(),
            values: Some(values),
            stalks: None,
        };
        let dense = f.dense_values(4).unwrap();
        assert_eq!(dense[0], Complex64::new(1.0, 0.0));
        assert_eq!(dense[3], Complex64::new(0.0, -2.0));
        assert!(f.dense_values(2).is_err());
    }
}
