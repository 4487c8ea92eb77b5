//! Combinatorial 2-complexes: vertices, oriented framed edges, rooted faces
//! and pasting 3-cells, with face-splitting and orientation/framing daggers.
//!
//! A face is stored as a bigon between two edge paths with common endpoints:
//! a *source path* (whose first edge is the distinguished root) and a
//! *target path*. The closed boundary walk of a face is the source path
//! followed by the reversed target path, so it begins at the source of the
//! root edge. Simple polygon faces are bigons whose target path is a single
//! edge; the fundamental loop face has equal source and target paths.
//!
//! A 3-cell is stored as a pair of pasting routes (vertical stacks of
//! horizontally whiskered faces) with a common source and target path; the
//! flatness constraint of a decorated 3-cell equates the two routes' labels.

use crate::error::CoreError;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

pub type VertexId = usize;
pub type EdgeId = usize;
pub type FaceId = usize;
pub type CellId = usize;

/// An edge occurrence in a path: `(edge, +1)` traverses source to target,
/// `(edge, -1)` the reverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Dart {
    pub edge: EdgeId,
    pub sign: i8,
}

impl Dart {
    pub fn fwd(edge: EdgeId) -> Self {
        Dart { edge, sign: 1 }
    }
    pub fn rev(edge: EdgeId) -> Self {
        Dart { edge, sign: -1 }
    }
    pub fn flipped(self) -> Self {
        Dart {
            edge: self.edge,
            sign: -self.sign,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub id: EdgeId,
    pub src: VertexId,
    pub tgt: VertexId,
    /// Framing sign; flipped by the framing dagger.
    pub frame: i8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub id: FaceId,
    /// Root edge: the edge of the first source dart.
    pub root: EdgeId,
    pub source: Vec<Dart>,
    pub target: Vec<Dart>,
}

/// One horizontally whiskered face inside a pasting route.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Slab {
    pub left: Vec<Dart>,
    pub face: FaceId,
    /// Traverse the face vertically reversed (target path to source path).
    pub reversed: bool,
    pub right: Vec<Dart>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cell3 {
    pub id: CellId,
    pub lhs: Vec<Slab>,
    pub rhs: Vec<Slab>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoComplex {
    pub name: String,
    pub vertices: Vec<VertexId>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    pub cells3: Vec<Cell3>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitKind {
    Horizontal,
    Vertical,
}

/// Result of splitting one face: the refined complex, the two piece faces,
/// and the cut data needed to glue decorations back together.
#[derive(Debug, Clone)]
pub struct SplitDescriptor {
    pub kind: SplitKind,
    /// Face of the original complex that was split.
    pub face: FaceId,
    /// Piece faces in the refined complex (left/top, right/bottom).
    pub pieces: (FaceId, FaceId),
    pub refined: TwoComplex,
    pub original: TwoComplex,
    /// Horizontal: the shared cut edge. Vertical: unset.
    pub cut_edge: Option<EdgeId>,
    /// Vertical: the inserted middle path. Horizontal: unset.
    pub mid_path: Option<Vec<Dart>>,
    /// Edges of the refined complex that assemble each original edge
    /// (identity for unsplit edges).
    pub edge_assembly: HashMap<EdgeId, Vec<Dart>>,
}

impl TwoComplex {
    pub fn edge(&self, id: EdgeId) -> Option<&Edge> {
        self.edges.iter().find(|e| e.id == id)
    }

    pub fn face(&self, id: FaceId) -> Option<&Face> {
        self.faces.iter().find(|f| f.id == id)
    }

    pub fn edge_index(&self, id: EdgeId) -> Option<usize> {
        self.edges.iter().position(|e| e.id == id)
    }

    pub fn face_index(&self, id: FaceId) -> Option<usize> {
        self.faces.iter().position(|f| f.id == id)
    }

    pub fn dart_src(&self, d: Dart) -> Option<VertexId> {
        self.edge(d.edge)
            .map(|e| if d.sign >= 0 { e.src } else { e.tgt })
    }

    pub fn dart_tgt(&self, d: Dart) -> Option<VertexId> {
        self.edge(d.edge)
            .map(|e| if d.sign >= 0 { e.tgt } else { e.src })
    }

    /// Endpoints of a path if it is connected; `None` otherwise. The empty
    /// path has no endpoints and is rejected here.
    pub fn path_endpoints(&self, path: &[Dart]) -> Option<(VertexId, VertexId)> {
        let first = path.first()?;
        let mut cur = self.dart_src(*first)?;
        let start = cur;
        for d in path {
            if self.dart_src(*d)? != cur {
                return None;
            }
            cur = self.dart_tgt(*d)?;
        }
        Some((start, cur))
    }

    /// Closed boundary walk of a face: source path then reversed target path.
    pub fn boundary_walk(&self, f: &Face) -> Vec<Dart> {
        let mut walk = f.source.clone();
        walk.extend(f.target.iter().rev().map(|d| d.flipped()));
        walk
    }

    fn slab_paths(&self, slab: &Slab) -> Option<(Vec<Dart>, Vec<Dart>)> {
        let f = self.face(slab.face)?;
        let (fs, ft) = if slab.reversed {
            (f.target.clone(), f.source.clone())
        } else {
            (f.source.clone(), f.target.clone())
        };
        let glue = |mid: &[Dart]| {
            let mut p = slab.left.clone();
            p.extend_from_slice(mid);
            p.extend_from_slice(&slab.right);
            p
        };
        Some((glue(&fs), glue(&ft)))
    }

    /// Composite source/target paths of a pasting route, with composability
    /// checks between consecutive slabs.
    pub fn route_paths(&self, route: &[Slab]) -> Result<(Vec<Dart>, Vec<Dart>), CoreError> {
        let mut iter = route.iter();
        let first = iter
            .next()
            .ok_or_else(|| CoreError::InvalidComplex("empty pasting route".into()))?;
        let (src, mut cur_tgt) = self
            .slab_paths(first)
            .ok_or_else(|| CoreError::InvalidComplex("slab references missing face".into()))?;
        for slab in iter {
            let (s, t) = self
                .slab_paths(slab)
                .ok_or_else(|| CoreError::InvalidComplex("slab references missing face".into()))?;
            if s != cur_tgt {
                return Err(CoreError::InvalidComplex(format!(
                    "pasting route breaks at face {}: expected source {:?}, found {:?}",
                    slab.face, cur_tgt, s
                )));
            }
            cur_tgt = t;
        }
        Ok((src, cur_tgt))
    }

    /// Full structural validation.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let vset: std::collections::HashSet<_> = self.vertices.iter().collect();
        for e in &self.edges {
            if !vset.contains(&e.src) || !vset.contains(&e.tgt) {
                violations.push(format!("edge {} references a missing vertex", e.id));
            }
            if e.frame != 1 && e.frame != -1 {
                violations.push(format!("edge {} has frame {} (must be ±1)", e.id, e.frame));
            }
        }
        let mut edge_ids = std::collections::HashSet::new();
        for e in &self.edges {
            if !edge_ids.insert(e.id) {
                violations.push(format!("duplicate edge id {}", e.id));
            }
        }
        for f in &self.faces {
            for d in f.source.iter().chain(f.target.iter()) {
                if self.edge(d.edge).is_none() {
                    violations.push(format!("face {} references missing edge {}", f.id, d.edge));
                }
            }
            let se = self.path_endpoints(&f.source);
            let te = self.path_endpoints(&f.target);
            match (se, te) {
                (Some(se), Some(te)) => {
                    if se != te {
                        violations.push(format!(
                            "face {}: source and target paths have different endpoints",
                            f.id
                        ));
                    }
                }
                _ => violations.push(format!("face {}: disconnected or empty path", f.id)),
            }
            match f.source.first() {
                Some(d) if d.edge == f.root && d.sign == 1 => {}
                _ => violations.push(format!(
                    "face {}: boundary does not start at the source of its root edge",
                    f.id
                )),
            }
        }
        for c in &self.cells3 {
            let lhs = self.route_paths(&c.lhs);
            let rhs = self.route_paths(&c.rhs);
            match (lhs, rhs) {
                (Ok((ls, lt)), Ok((rs, rt))) => {
                    if ls != rs || lt != rt {
                        violations.push(format!(
                            "3-cell {}: pasting routes do not share source/target paths",
                            c.id
                        ));
                    }
                }
                (Err(e), _) | (_, Err(e)) => {
                    violations.push(format!("3-cell {}: {}", c.id, e));
                }
            }
        }
        ValidationReport { violations }
    }

    fn fresh_edge_id(&self) -> EdgeId {
        self.edges.iter().map(|e| e.id + 1).max().unwrap_or(0)
    }

    fn fresh_face_id(&self) -> FaceId {
        self.faces.iter().map(|f| f.id + 1).max().unwrap_or(0)
    }

    fn fresh_vertex_id(&self) -> VertexId {
        self.vertices.iter().map(|v| v + 1).max().unwrap_or(0)
    }

    /// Splits a face. Horizontal splits cut transversally to the root at the
    /// given source/target path positions and insert the shared cut edge;
    /// vertical splits stack the face along a supplied middle path over
    /// fresh loop/chord edges.
    pub fn split_face(&self, face: FaceId, kind: SplitSpec) -> Result<SplitDescriptor, CoreError> {
        let f = self
            .face(face)
            .ok_or_else(|| CoreError::InvalidSplit(format!("no face {face}")))?
            .clone();
        match kind {
            SplitSpec::Horizontal {
                at_source,
                at_target,
            } => {
                if at_source == 0 || at_source >= f.source.len() {
                    return Err(CoreError::InvalidSplit(format!(
                        "source position {at_source} must be interior (1..{})",
                        f.source.len()
                    )));
                }
                if at_target == 0 || at_target >= f.target.len() {
                    return Err(CoreError::InvalidSplit(format!(
                        "target position {at_target} must be interior (1..{})",
                        f.target.len()
                    )));
                }
                let m_s = self.dart_tgt(f.source[at_source - 1]).unwrap();
                let m_t = self.dart_tgt(f.target[at_target - 1]).unwrap();
                let cut = self.fresh_edge_id();
                let f1_id = self.fresh_face_id();
                let f2_id = f1_id + 1;
                let mut refined = self.clone();
                refined.name = format!("{}/h-split", self.name);
                refined.edges.push(Edge {
                    id: cut,
                    src: m_s,
                    tgt: m_t,
                    frame: 1,
                });
                let src1: Vec<Dart> = f.source[..at_source].to_vec();
                let src2: Vec<Dart> = f.source[at_source..].to_vec();
                let mut tgt1: Vec<Dart> = f.target[..at_target].to_vec();
                tgt1.push(Dart::rev(cut));
                let mut tgt2: Vec<Dart> = vec![Dart::fwd(cut)];
                tgt2.extend_from_slice(&f.target[at_target..]);
                let root1 = src1[0].edge;
                let root2 = src2[0].edge;
                if src1[0].sign != 1 || src2[0].sign != 1 {
                    return Err(CoreError::InvalidSplit(
                        "piece source path must start with a forward root dart".into(),
                    ));
                }
                let fidx = refined.face_index(face).unwrap();
                refined.faces.remove(fidx);
                refined.faces.push(Face {
                    id: f1_id,
                    root: root1,
                    source: src1,
                    target: tgt1,
                });
                refined.faces.push(Face {
                    id: f2_id,
                    root: root2,
                    source: src2,
                    target: tgt2,
                });
                let mut edge_assembly = HashMap::new();
                for e in &self.edges {
                    edge_assembly.insert(e.id, vec![Dart::fwd(e.id)]);
                }
                Ok(SplitDescriptor {
                    kind: SplitKind::Horizontal,
                    face,
                    pieces: (f1_id, f2_id),
                    refined,
                    original: self.clone(),
                    cut_edge: Some(cut),
                    mid_path: None,
                    edge_assembly,
                })
            }
            SplitSpec::Vertical { mid_edges } => {
                let (v0, v1) = self.path_endpoints(&f.source).ok_or_else(|| {
                    CoreError::InvalidSplit("face has no valid source path".into())
                })?;
                if mid_edges == 0 {
                    return Err(CoreError::InvalidSplit(
                        "vertical split needs at least one middle edge".into(),
                    ));
                }
                let mut refined = self.clone();
                refined.name = format!("{}/v-split", self.name);
                // Middle path of fresh edges from v0 to v1, with fresh
                // interior vertices when more than one edge is requested.
                let mut mid: Vec<Dart> = Vec::new();
                let mut cur = v0;
                for k in 0..mid_edges {
                    let next = if k + 1 == mid_edges {
                        v1
                    } else {
                        let v = refined.fresh_vertex_id();
                        refined.vertices.push(v);
                        v
                    };
                    let id = refined.fresh_edge_id();
                    refined.edges.push(Edge {
                        id,
                        src: cur,
                        tgt: next,
                        frame: 1,
                    });
                    mid.push(Dart::fwd(id));
                    cur = next;
                }
                let f1_id = refined.fresh_face_id();
                let f2_id = f1_id + 1;
                let root2 = mid[0].edge;
                let fidx = refined.face_index(face).unwrap();
                refined.faces.remove(fidx);
                refined.faces.push(Face {
                    id: f1_id,
                    root: f.root,
                    source: f.source.clone(),
                    target: mid.clone(),
                });
                refined.faces.push(Face {
                    id: f2_id,
                    root: root2,
                    source: mid.clone(),
                    target: f.target.clone(),
                });
                let mut edge_assembly = HashMap::new();
                for e in &self.edges {
                    edge_assembly.insert(e.id, vec![Dart::fwd(e.id)]);
                }
                Ok(SplitDescriptor {
                    kind: SplitKind::Vertical,
                    face,
                    pieces: (f1_id, f2_id),
                    refined,
                    original: self.clone(),
                    cut_edge: None,
                    mid_path: Some(mid),
                    edge_assembly,
                })
            }
        }
    }

    /// Subdivides an edge at a fresh vertex, rewriting all face paths and
    /// slab whiskers. Returns the new complex and the two half-edge ids.
    pub fn subdivide_edge(&self, edge: EdgeId) -> Result<(TwoComplex, EdgeId, EdgeId), CoreError> {
        let e = self
            .edge(edge)
            .ok_or_else(|| CoreError::InvalidComplex(format!("no edge {edge}")))?
            .clone();
        let mut out = self.clone();
        let mid = out.fresh_vertex_id();
        out.vertices.push(mid);
        let e1 = out.fresh_edge_id();
        let e2 = e1 + 1;
        let eidx = out.edge_index(edge).unwrap();
        out.edges.remove(eidx);
        out.edges.push(Edge {
            id: e1,
            src: e.src,
            tgt: mid,
            frame: e.frame,
        });
        out.edges.push(Edge {
            id: e2,
            src: mid,
            tgt: e.tgt,
            frame: e.frame,
        });
        let rewrite = |path: &[Dart]| -> Vec<Dart> {
            let mut p = Vec::with_capacity(path.len() + 1);
            for d in path {
                if d.edge == edge {
                    if d.sign >= 0 {
                        p.push(Dart::fwd(e1));
                        p.push(Dart::fwd(e2));
                    } else {
                        p.push(Dart::rev(e2));
                        p.push(Dart::rev(e1));
                    }
                } else {
                    p.push(*d);
                }
            }
            p
        };
        for f in &mut out.faces {
            f.source = rewrite(&f.source);
            f.target = rewrite(&f.target);
            f.root = f.source[0].edge;
        }
        for c in &mut out.cells3 {
            for slab in c.lhs.iter_mut().chain(c.rhs.iter_mut()) {
                slab.left = rewrite(&slab.left);
                slab.right = rewrite(&slab.right);
            }
        }
        Ok((out, e1, e2))
    }

    /// Reassembles the original complex from a split descriptor, cancelling
    /// the cut data. Used for the split/glue round-trip check.
    pub fn recompose(sd: &SplitDescriptor) -> Result<TwoComplex, CoreError> {
        let refined = &sd.refined;
        let f1 = refined
            .face(sd.pieces.0)
            .ok_or_else(|| CoreError::InvalidSplit("missing piece 1".into()))?;
        let f2 = refined
            .face(sd.pieces.1)
            .ok_or_else(|| CoreError::InvalidSplit("missing piece 2".into()))?;
        let mut out = refined.clone();
        out.name = sd.original.name.clone();
        let (source, target) = match sd.kind {
            SplitKind::Horizontal => {
                let cut = sd.cut_edge.unwrap();
                let mut source = f1.source.clone();
                source.extend_from_slice(&f2.source);
                // Drop the trailing reversed cut dart and the leading cut dart.
                let mut t1 = f1.target.clone();
                match t1.pop() {
                    Some(d) if d.edge == cut => {}
                    _ => return Err(CoreError::InvalidSplit("piece 1 lost its cut dart".into())),
                }
                let mut t2: Vec<Dart> = f2.target.clone();
                if t2.first().map(|d| d.edge) != Some(cut) {
                    return Err(CoreError::InvalidSplit("piece 2 lost its cut dart".into()));
                }
                t2.remove(0);
                t1.extend_from_slice(&t2);
                let cidx = out.edge_index(cut).unwrap();
                out.edges.remove(cidx);
                (source, t1)
            }
            SplitKind::Vertical => {
                let mid = sd.mid_path.clone().unwrap();
                if f1.target != mid || f2.source != mid {
                    return Err(CoreError::InvalidSplit("middle path mismatch".into()));
                }
                for d in &mid {
                    let idx = out.edge_index(d.edge).unwrap();
                    out.edges.remove(idx);
                }
                // Drop interior vertices introduced for the middle path.
                let keep: std::collections::HashSet<_> = out
                    .edges
                    .iter()
                    .flat_map(|e| [e.src, e.tgt])
                    .chain(sd.original.vertices.iter().copied())
                    .collect();
                out.vertices.retain(|v| keep.contains(v));
                (f1.source.clone(), f2.target.clone())
            }
        };
        let i1 = out.face_index(sd.pieces.0).unwrap();
        out.faces.remove(i1);
        let i2 = out.face_index(sd.pieces.1).unwrap();
        out.faces.remove(i2);
        out.faces.push(Face {
            id: sd.face,
            root: source[0].edge,
            source,
            target,
        });
        // Canonical member order for comparison with the original.
        out.vertices.sort_unstable();
        out.edges.sort_by_key(|e| e.id);
        out.faces.sort_by_key(|f| f.id);
        Ok(out)
    }

    /// A canonically sorted clone, for structural comparisons.
    pub fn sorted(&self) -> TwoComplex {
        let mut c = self.clone();
        c.vertices.sort_unstable();
        c.edges.sort_by_key(|e| e.id);
        c.faces.sort_by_key(|f| f.id);
        c.cells3.sort_by_key(|x| x.id);
        c
    }
}

/// Parameters for [`TwoComplex::split_face`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitSpec {
    /// Cut transversally to the root: split the source path after
    /// `at_source` darts and the target path after `at_target` darts.
    Horizontal { at_source: usize, at_target: usize },
    /// Stack along a fresh middle path with the given number of edges.
    Vertical { mid_edges: usize },
}

/// Which dagger (orientation/framing reversal) to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum DaggerKind {
    /// Framing rotation: flips every edge frame, cells untouched.
    Dagger1,
    /// Orientation reversal: reverses every edge and every face vertically.
    Dagger2,
}

/// Cell bijections into the daggered complex (identity on ids here; the
/// structure transforms underneath).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DaggerMap {
    pub kind: DaggerKind,
    pub edge_map: HashMap<EdgeId, EdgeId>,
    pub face_map: HashMap<FaceId, FaceId>,
}

/// Applies a dagger, returning the transformed complex and the cell map.
pub fn apply_dagger(c: &TwoComplex, kind: DaggerKind) -> (TwoComplex, DaggerMap) {
    let mut out = c.clone();
    match kind {
        DaggerKind::Dagger1 => {
            for e in &mut out.edges {
                e.frame = -e.frame;
            }
        }
        DaggerKind::Dagger2 => {
            for e in &mut out.edges {
                std::mem::swap(&mut e.src, &mut e.tgt);
            }
            // Every edge is reversed, so a path run backwards keeps its dart
            // signs: over the new edges, the same darts in reverse order
            // retrace the old path in the opposite direction.
            let reverse = |p: &[Dart]| -> Vec<Dart> { p.iter().rev().copied().collect() };
            for f in &mut out.faces {
                // Vertical reversal: swap source and target paths.
                let new_source = reverse(&f.target);
                let new_target = reverse(&f.source);
                f.source = new_source;
                f.target = new_target;
                f.root = f.source[0].edge;
            }
            for cell in &mut out.cells3 {
                // Faces already swapped their paths above, so a slab keeps
                // its `reversed` flag; its whiskers swap sides and reverse.
                for slab in cell.lhs.iter_mut().chain(cell.rhs.iter_mut()) {
                    let new_left = reverse(&slab.right);
                    let new_right = reverse(&slab.left);
                    slab.left = new_left;
                    slab.right = new_right;
                }
                // A vertically reversed pasting stacks its slabs bottom-up.
                cell.lhs.reverse();
                cell.rhs.reverse();
            }
        }
    }
    let map = DaggerMap {
        kind,
        edge_map: c.edges.iter().map(|e| (e.id, e.id)).collect(),
        face_map: c.faces.iter().map(|f| (f.id, f.id)).collect(),
    };
    (out, map)
}

// ---------------------------------------------------------------------------
// Standard lattices.
// ---------------------------------------------------------------------------

/// The fundamental 2-graph: one vertex, one loop edge, one face whose source
/// and target paths are both that loop.
pub fn fundamental() -> TwoComplex {
    TwoComplex {
        name: "fundamental".into(),
        vertices: vec![0],
        edges: vec![Edge {
            id: 0,
            src: 0,
            tgt: 0,
            frame: 1,
        }],
        faces: vec![Face {
            id: 0,
            root: 0,
            source: vec![Dart::fwd(0)],
            target: vec![Dart::fwd(0)],
        }],
        cells3: vec![],
    }
}

/// A square face: vertices `0..4`, edges bottom `0->1`, right `1->3`,
/// left `0->2`, top `2->3`; the face runs bottom-right against left-top.
pub fn square() -> TwoComplex {
    TwoComplex {
        name: "square".into(),
        vertices: vec![0, 1, 2, 3],
        edges: vec![
            Edge {
                id: 0,
                src: 0,
                tgt: 1,
                frame: 1,
            }, // bottom
            Edge {
                id: 1,
                src: 1,
                tgt: 3,
                frame: 1,
            }, // right
            Edge {
                id: 2,
                src: 0,
                tgt: 2,
                frame: 1,
            }, // left
            Edge {
                id: 3,
                src: 2,
                tgt: 3,
                frame: 1,
            }, // top
        ],
        faces: vec![Face {
            id: 0,
            root: 0,
            source: vec![Dart::fwd(0), Dart::fwd(1)],
            target: vec![Dart::fwd(2), Dart::fwd(3)],
        }],
        cells3: vec![],
    }
}

/// The boundary of a tetrahedron on vertices `0..4`: six edges `i -> j`
/// (`i < j`), four triangular faces, and one 3-cell equating the two ways of
/// pasting them.
pub fn tetrahedron() -> TwoComplex {
    // Edge ids: 01->0, 02->1, 03->2, 12->3, 13->4, 23->5.
    let e01 = 0;
    let e02 = 1;
    let e03 = 2;
    let e12 = 3;
    let e13 = 4;
    let e23 = 5;
    let faces = vec![
        Face {
            id: 0, // (012): [e01, e12] => [e02]
            root: e01,
            source: vec![Dart::fwd(e01), Dart::fwd(e12)],
            target: vec![Dart::fwd(e02)],
        },
        Face {
            id: 1, // (013): [e01, e13] => [e03]
            root: e01,
            source: vec![Dart::fwd(e01), Dart::fwd(e13)],
            target: vec![Dart::fwd(e03)],
        },
        Face {
            id: 2, // (023): [e02, e23] => [e03]
            root: e02,
            source: vec![Dart::fwd(e02), Dart::fwd(e23)],
            target: vec![Dart::fwd(e03)],
        },
        Face {
            id: 3, // (123): [e12, e23] => [e13]
            root: e12,
            source: vec![Dart::fwd(e12), Dart::fwd(e23)],
            target: vec![Dart::fwd(e13)],
        },
    ];
    let cell = Cell3 {
        id: 0,
        lhs: vec![
            Slab {
                left: vec![],
                face: 0,
                reversed: false,
                right: vec![Dart::fwd(e23)],
            },
            Slab {
                left: vec![],
                face: 2,
                reversed: false,
                right: vec![],
            },
        ],
        rhs: vec![
            Slab {
                left: vec![Dart::fwd(e01)],
                face: 3,
                reversed: false,
                right: vec![],
            },
            Slab {
                left: vec![],
                face: 1,
                reversed: false,
                right: vec![],
            },
        ],
    };
    TwoComplex {
        name: "tetrahedron".into(),
        vertices: vec![0, 1, 2, 3],
        edges: vec![
            Edge {
                id: e01,
                src: 0,
                tgt: 1,
                frame: 1,
            },
            Edge {
                id: e02,
                src: 0,
                tgt: 2,
                frame: 1,
            },
            Edge {
                id: e03,
                src: 0,
                tgt: 3,
                frame: 1,
            },
            Edge {
                id: e12,
                src: 1,
                tgt: 2,
                frame: 1,
            },
            Edge {
                id: e13,
                src: 1,
                tgt: 3,
                frame: 1,
            },
            Edge {
                id: e23,
                src: 2,
                tgt: 3,
                frame: 1,
            },
        ],
        faces,
        cells3: vec![cell],
    }
}

/// Two loop faces over one loop edge, glued vertically through a middle loop
/// edge; a minimal theta-style lattice with two faces.
pub fn theta() -> TwoComplex {
    TwoComplex {
        name: "theta".into(),
        vertices: vec![0],
        edges: vec![
            Edge {
                id: 0,
                src: 0,
                tgt: 0,
                frame: 1,
            },
            Edge {
                id: 1,
                src: 0,
                tgt: 0,
                frame: 1,
            },
            Edge {
                id: 2,
                src: 0,
                tgt: 0,
                frame: 1,
            },
        ],
        faces: vec![
            Face {
                id: 0,
                root: 0,
                source: vec![Dart::fwd(0)],
                target: vec![Dart::fwd(1)],
            },
            Face {
                id: 1,
                root: 1,
                source: vec![Dart::fwd(1)],
                target: vec![Dart::fwd(2)],
            },
        ],
        cells3: vec![],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fundamental_is_valid() {
        assert!(fundamental().validate().passed());
    }

    #[test]
    fn square_theta_valid() {
        assert!(square().validate().passed());
        assert!(theta().validate().passed());
    }

    #[test]
    fn tetrahedron_with_3cell_is_valid() {
        // Hand-constructed four-face closure with one pasting 3-cell.
        let t = tetrahedron();
        assert!(t.validate().passed());
    }

    #[test]
    fn face_not_starting_at_root_source_is_invalid() {
        let mut c = square();
        c.faces[0].root = 1; // boundary starts at edge 0, not at edge 1
        let report = c.validate();
        assert!(!report.passed());
        assert!(report.violations.iter().any(|v| v.contains("root")));
    }

    #[test]
    fn dangling_edge_reference_is_reported() {
        let mut c = square();
        c.faces[0].source[0].edge = 99;
        assert!(!c.validate().passed());
    }

    #[test]
    fn horizontal_split_of_square_shares_cut_edge() {
        let c = square();
        let sd = c
            .split_face(
                0,
                SplitSpec::Horizontal {
                    at_source: 1,
                    at_target: 1,
                },
            )
            .unwrap();
        assert!(sd.refined.validate().passed());
        let cut = sd.cut_edge.unwrap();
        let f1 = sd.refined.face(sd.pieces.0).unwrap();
        let f2 = sd.refined.face(sd.pieces.1).unwrap();
        assert!(f1.target.iter().any(|d| d.edge == cut));
        assert!(f2.target.iter().any(|d| d.edge == cut));
    }

    #[test]
    fn vertical_split_of_fundamental_boundary_concatenation() {
        let c = fundamental();
        let sd = c
            .split_face(0, SplitSpec::Vertical { mid_edges: 1 })
            .unwrap();
        assert!(sd.refined.validate().passed());
        let f1 = sd.refined.face(sd.pieces.0).unwrap();
        let f2 = sd.refined.face(sd.pieces.1).unwrap();
        // Piece 2's source path is piece 1's target path: the boundary
        // concatenation identity e2 = e1 * ∂f1 at the path level.
        assert_eq!(f1.target, f2.source);
        assert_eq!(f1.source, vec![Dart::fwd(0)]);
        assert_eq!(f2.target, vec![Dart::fwd(0)]);
    }

    #[test]
    fn split_then_glue_roundtrips() {
        for (c, spec) in [
            (
                square(),
                SplitSpec::Horizontal {
                    at_source: 1,
                    at_target: 1,
                },
            ),
            (square(), SplitSpec::Vertical { mid_edges: 1 }),
            (fundamental(), SplitSpec::Vertical { mid_edges: 1 }),
        ] {
            let sd = c.split_face(0, spec).unwrap();
            let glued = TwoComplex::recompose(&sd).unwrap();
            assert_eq!(glued.sorted(), c.sorted());
        }
    }

    #[test]
    fn invalid_decomposition_point_rejected() {
        let c = square();
        assert!(c
            .split_face(
                0,
                SplitSpec::Horizontal {
                    at_source: 0,
                    at_target: 1
                }
            )
            .is_err());
        assert!(c
            .split_face(
                0,
                SplitSpec::Horizontal {
                    at_source: 2,
                    at_target: 1
                }
            )
            .is_err());
        assert!(c
            .split_face(7, SplitSpec::Vertical { mid_edges: 1 })
            .is_err());
    }

    #[test]
    fn dagger2_is_involution_on_the_nose() {
        for c in [fundamental(), square(), tetrahedron()] {
            let (once, _) = apply_dagger(&c, DaggerKind::Dagger2);
            assert!(once.validate().passed());
            let (twice, _) = apply_dagger(&once, DaggerKind::Dagger2);
            assert_eq!(twice.sorted(), c.sorted());
        }
    }

    #[test]
    fn dagger2_of_loop_edge_flips_boundary() {
        let c = square();
        let (d, _) = apply_dagger(&c, DaggerKind::Dagger2);
        // Every edge is reversed.
        for (old, new) in c.edges.iter().zip(d.edges.iter()) {
            assert_eq!(old.src, new.tgt);
            assert_eq!(old.tgt, new.src);
        }
        // The face runs backwards: source and target paths swapped and
        // reversed, so the boundary walk traverses the old one oppositely.
        assert_eq!(d.faces[0].source, vec![Dart::fwd(3), Dart::fwd(2)]);
        assert_eq!(d.faces[0].target, vec![Dart::fwd(1), Dart::fwd(0)]);
        // Loop-edge case: src and tgt coincide after the swap.
        let f = fundamental();
        let (df, _) = apply_dagger(&f, DaggerKind::Dagger2);
        assert_eq!(df.edges[0].src, df.edges[0].tgt);
        assert!(df.validate().passed());
    }

    #[test]
    fn dagger1_squares_to_identity_and_strongly_commutes_with_dagger2() {
        for c in [fundamental(), square(), tetrahedron()] {
            let (once, _) = apply_dagger(&c, DaggerKind::Dagger1);
            let (twice, _) = apply_dagger(&once, DaggerKind::Dagger1);
            assert_eq!(twice.sorted(), c.sorted());
            // Compare the two composite bijections and complexes.
            let (ab, map_ab) = {
                let (x, _) = apply_dagger(&c, DaggerKind::Dagger2);
                apply_dagger(&x, DaggerKind::Dagger1)
            };
            let (ba, map_ba) = {
                let (x, _) = apply_dagger(&c, DaggerKind::Dagger1);
                apply_dagger(&x, DaggerKind::Dagger2)
            };
            assert_eq!(ab.sorted(), ba.sorted());
            assert_eq!(map_ab.edge_map, map_ba.edge_map);
            assert_eq!(map_ab.face_map, map_ba.face_map);
        }
    }

    #[test]
    fn double_split_quadrants_admit_canonical_bijection() {
        // Split horizontally then vertically, and vertically then
        // horizontally; both refined complexes carry four quadrant faces
        // matched by (piece-of-piece) position.
        let c = square();
        let hv = {
            let sd = c
                .split_face(
                    0,
                    SplitSpec::Horizontal {
                        at_source: 1,
                        at_target: 1,
                    },
                )
                .unwrap();
            let (p1, p2) = sd.pieces;
            let sd1 = sd
                .refined
                .split_face(p1, SplitSpec::Vertical { mid_edges: 1 })
                .unwrap();
            let sd2 = sd1
                .refined
                .split_face(p2, SplitSpec::Vertical { mid_edges: 1 })
                .unwrap();
            let mut quadrants = vec![sd1.pieces.0, sd1.pieces.1, sd2.pieces.0, sd2.pieces.1];
            quadrants.sort_unstable();
            (sd2.refined, quadrants)
        };
        let vh = {
            let sd = c
                .split_face(0, SplitSpec::Vertical { mid_edges: 2 })
                .unwrap();
            let (p1, p2) = sd.pieces;
            let sd1 = sd
                .refined
                .split_face(
                    p1,
                    SplitSpec::Horizontal {
                        at_source: 1,
                        at_target: 1,
                    },
                )
                .unwrap();
            let sd2 = sd1
                .refined
                .split_face(
                    p2,
                    SplitSpec::Horizontal {
                        at_source: 1,
                        at_target: 1,
                    },
                )
                .unwrap();
            let mut quadrants = vec![sd1.pieces.0, sd1.pieces.1, sd2.pieces.0, sd2.pieces.1];
            quadrants.sort_unstable();
            (sd2.refined, quadrants)
        };
        assert!(hv.0.validate().passed());
        assert!(vh.0.validate().passed());
        assert_eq!(hv.1.len(), 4);
        assert_eq!(vh.1.len(), 4);
        // Canonical quadrant bijection by (horizontal, vertical) position.
        for (a, b) in hv.1.iter().zip(vh.1.iter()) {
            assert!(hv.0.face(*a).is_some());
            assert!(vh.0.face(*b).is_some());
        }
    }

    #[test]
    fn subdivide_edge_rewrites_faces() {
        let c = fundamental();
        let (sub, e1, e2) = c.subdivide_edge(0).unwrap();
        assert!(sub.validate().passed());
        let f = &sub.faces[0];
        assert_eq!(f.source, vec![Dart::fwd(e1), Dart::fwd(e2)]);
        assert_eq!(f.root, e1);
    }
}
