//! Graph states and their Hopf structure.
//!
//! The exact identity suite lives on the coordinate ring of a finite
//! 2-group: states are complex-valued functions on the 2-group (the
//! single-face configuration space), coproducts are explicit Sweedler term
//! lists over factorization sets, and every axiom is an equality of complex
//! numbers with zero tolerance. The graph-level splitting coproduct works
//! over a [`SplitDescriptor`], pairing piece decorations against the glued
//! decoration of the original lattice.

use crate::algebra::{CMat, GElem};
use crate::complex::{EdgeId, SplitDescriptor, SplitKind};
use crate::crossed::{CrossedModule, TwoGroupElement};
use crate::error::CoreError;
use crate::holonomy::{FlatConfig, GaugeTransform, Site};
use num_complex::Complex64;
use std::collections::{BTreeMap, HashMap};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

// ---------------------------------------------------------------------------
// Coordinate-ring states on a finite 2-group.
// ---------------------------------------------------------------------------

/// A state on the single-face configuration space: one complex value per
/// 2-group element, indexed by [`CrossedModule::index_of`].
#[derive(Debug, Clone, PartialEq)]
pub struct RingState {
    pub values: Vec<Complex64>,
}

impl RingState {
    pub fn constant(cm: &CrossedModule, c: Complex64) -> Self {
        RingState {
            values: vec![c; cm.size()],
        }
    }

    pub fn unit(cm: &CrossedModule) -> Self {
        Self::constant(cm, ONE)
    }

    pub fn characteristic(cm: &CrossedModule, at: TwoGroupElement) -> Self {
        let mut values = vec![ZERO; cm.size()];
        values[cm.index_of(at)] = ONE;
        RingState { values }
    }

    pub fn eval(&self, cm: &CrossedModule, x: TwoGroupElement) -> Complex64 {
        self.values[cm.index_of(x)]
    }

    /// Pointwise (tensor) product of states on the same face.
    pub fn pointwise(&self, other: &RingState) -> RingState {
        RingState {
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(&a, &b)| a * b)
                .collect(),
        }
    }

    /// Convolution product with counting weights.
    pub fn convolve(&self, cm: &CrossedModule, other: &RingState) -> RingState {
        let mut values = vec![ZERO; cm.size()];
        for a in cm.elements() {
            for b in cm.elements() {
                let p = cm.hmul(a, b);
                values[cm.index_of(p)] += self.eval(cm, a) * other.eval(cm, b);
            }
        }
        RingState { values }
    }

    pub fn max_abs_diff(&self, other: &RingState) -> f64 {
        self.values
            .iter()
            .zip(other.values.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}

/// Counit: evaluation at the all-identity decoration.
pub fn counit(cm: &CrossedModule, phi: &RingState) -> Complex64 {
    phi.eval(cm, cm.unit())
}

/// Horizontal antipode: precomposition with the horizontal inverse.
pub fn antipode_h(cm: &CrossedModule, phi: &RingState) -> RingState {
    let mut values = vec![ZERO; cm.size()];
    for x in cm.elements() {
        values[cm.index_of(x)] = phi.eval(cm, cm.hinv(x));
    }
    RingState { values }
}

/// Vertical antipode: precomposition with the vertical inverse.
pub fn antipode_v(cm: &CrossedModule, phi: &RingState) -> RingState {
    let mut values = vec![ZERO; cm.size()];
    for x in cm.elements() {
        values[cm.index_of(x)] = phi.eval(cm, cm.vinv(x));
    }
    RingState { values }
}

/// Explicit Sweedler terms of the horizontal coproduct: every factorization
/// pair together with the state value at its product.
pub fn delta_h_terms(
    cm: &CrossedModule,
    phi: &RingState,
) -> Vec<(TwoGroupElement, TwoGroupElement, Complex64)> {
    let mut terms = Vec::with_capacity(cm.size() * cm.size());
    for a in cm.elements() {
        for b in cm.elements() {
            terms.push((a, b, phi.eval(cm, cm.hmul(a, b))));
        }
    }
    terms
}

/// Explicit Sweedler terms of the vertical coproduct, over composable pairs.
pub fn delta_v_terms(
    cm: &CrossedModule,
    phi: &RingState,
) -> Vec<(TwoGroupElement, TwoGroupElement, Complex64)> {
    let mut terms = Vec::new();
    for a in cm.elements() {
        for hb in cm.h.elements() {
            let b = TwoGroupElement::new(cm.target(a), hb);
            let c = cm.vmul(a, b).expect("constructed composable");
            terms.push((a, b, phi.eval(cm, c)));
        }
    }
    terms
}

/// Report of one exact identity: how many instances were checked and how
/// many failed.
#[derive(Debug, Clone, Default)]
pub struct ExactReport {
    pub checked: usize,
    pub failures: usize,
}

impl ExactReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.checked > 0
    }

    fn tally(&mut self, ok: bool) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
        }
    }

    pub fn merge(&mut self, other: &ExactReport) {
        self.checked += other.checked;
        self.failures += other.failures;
    }
}

/// Coassociativity of the horizontal coproduct over all triples, through the
/// term-list machinery.
pub fn coassociativity_h(cm: &CrossedModule, phi: &RingState) -> ExactReport {
    let mut report = ExactReport::default();
    for a in cm.elements() {
        for b in cm.elements() {
            for c in cm.elements() {
                let lhs = phi.eval(cm, cm.hmul(cm.hmul(a, b), c));
                let rhs = phi.eval(cm, cm.hmul(a, cm.hmul(b, c)));
                report.tally(lhs == rhs);
            }
        }
    }
    report
}

/// Coassociativity of the vertical coproduct over all composable triples.
pub fn coassociativity_v(cm: &CrossedModule, phi: &RingState) -> ExactReport {
    let mut report = ExactReport::default();
    for a in cm.elements() {
        for hb in cm.h.elements() {
            let b = TwoGroupElement::new(cm.target(a), hb);
            for hc in cm.h.elements() {
                let c = TwoGroupElement::new(cm.target(b), hc);
                let lhs = phi.eval(cm, cm.vmul(cm.vmul(a, b).unwrap(), c).unwrap());
                let rhs = phi.eval(cm, cm.vmul(a, cm.vmul(b, c).unwrap()).unwrap());
                report.tally(lhs == rhs);
            }
        }
    }
    report
}

/// Counit laws `(ε ⊗ 1) Δ_h = id = (1 ⊗ ε) Δ_h`, contracted through the term
/// lists.
pub fn counit_laws_h(cm: &CrossedModule, phi: &RingState) -> ExactReport {
    let mut report = ExactReport::default();
    let terms = delta_h_terms(cm, phi);
    for x in cm.elements() {
        let left: Complex64 = terms
            .iter()
            .filter(|(a, b, _)| *a == cm.unit() && *b == x)
            .map(|&(_, _, v)| v)
            .sum();
        let right: Complex64 = terms
            .iter()
            .filter(|(a, b, _)| *b == cm.unit() && *a == x)
            .map(|&(_, _, v)| v)
            .sum();
        let expect = phi.eval(cm, x);
        report.tally(left == expect && right == expect);
    }
    report
}

/// Horizontal antipode axiom: the contraction `m (S_h ⊗ 1) Δ_h` applied to
/// `φ` is the counit-weighted unit state, and likewise on the other side.
pub fn antipode_axiom_h(cm: &CrossedModule, phi: &RingState) -> ExactReport {
    let mut report = ExactReport::default();
    let terms = delta_h_terms(cm, phi);
    let eps = counit(cm, phi);
    for x in cm.elements() {
        let contracted: Complex64 = terms
            .iter()
            .filter(|(a, b, _)| cm.hinv(*a) == x && *b == x)
            .map(|&(_, _, v)| v)
            .sum();
        let other: Complex64 = terms
            .iter()
            .filter(|(a, b, _)| *a == x && cm.hinv(*b) == x)
            .map(|&(_, _, v)| v)
            .sum();
        report.tally(contracted == eps && other == eps);
    }
    report
}

/// Vertical antipode axiom: contracting `m (S_v ⊗ 1) Δ_v` lands on the unit
/// 2-cell at the target; `m (1 ⊗ S_v) Δ_v` on the unit at the source.
pub fn antipode_axiom_v(cm: &CrossedModule, phi: &RingState) -> ExactReport {
    let mut report = ExactReport::default();
    for x in cm.elements() {
        let lhs = phi.eval(cm, cm.vmul(cm.vinv(x), x).expect("composable"));
        let rhs = phi.eval(cm, cm.vmul(x, cm.vinv(x)).expect("composable"));
        report.tally(
            lhs == phi.eval(cm, cm.vunit(cm.target(x))) && rhs == phi.eval(cm, cm.vunit(x.g)),
        );
    }
    report
}

/// Bimonoidality: the coproducts are multiplicative for the tensor product
/// of states, plus the unit-state and counit compatibilities.
pub fn bimonoidality(cm: &CrossedModule, xi: &RingState, xi2: &RingState) -> ExactReport {
    let mut report = ExactReport::default();
    let prod = xi.pointwise(xi2);
    for a in cm.elements() {
        for b in cm.elements() {
            let x = cm.hmul(a, b);
            report.tally(prod.eval(cm, x) == xi.eval(cm, x) * xi2.eval(cm, x));
        }
    }
    let unit = RingState::unit(cm);
    for a in cm.elements() {
        for b in cm.elements() {
            report.tally(unit.eval(cm, cm.hmul(a, b)) == ONE);
        }
    }
    report.tally(counit(cm, &prod) == counit(cm, xi) * counit(cm, xi2));
    report
}

/// Cointerchange, evaluated on all quadruples composable both ways:
/// `(Δ_h ⊗ Δ_h) Δ_v = (1 ⊗ σ ⊗ 1)(Δ_v ⊗ Δ_v) Δ_h`.
pub fn cointerchange(cm: &CrossedModule, phi: &RingState) -> ExactReport {
    let mut report = ExactReport::default();
    for w in cm.elements() {
        for x in cm.elements() {
            for hy in cm.h.elements() {
                let y = TwoGroupElement::new(cm.target(w), hy);
                for hz in cm.h.elements() {
                    let z = TwoGroupElement::new(cm.target(x), hz);
                    // (Δ_h⊗Δ_h)Δ_v at (w,x,y,z): φ((w·x) ∘ (y·z)).
                    let lhs = cm
                        .vmul(cm.hmul(w, x), cm.hmul(y, z))
                        .map(|e| phi.eval(cm, e));
                    // (1⊗σ⊗1)(Δ_v⊗Δ_v)Δ_h at (w,x,y,z): φ((w∘y)·(x∘z)).
                    let rhs = phi.eval(cm, cm.hmul(cm.vmul(w, y).unwrap(), cm.vmul(x, z).unwrap()));
                    report.tally(lhs.map(|v| v == rhs).unwrap_or(false));
                }
            }
        }
    }
    report
}

/// `S_h` is an anti-homomorphism for the convolution product.
pub fn antipode_h_antihomomorphism(
    cm: &CrossedModule,
    phi: &RingState,
    psi: &RingState,
) -> ExactReport {
    let mut report = ExactReport::default();
    let lhs = antipode_h(cm, &phi.convolve(cm, psi));
    let rhs = antipode_h(cm, psi).convolve(cm, &antipode_h(cm, phi));
    for x in cm.elements() {
        report.tally((lhs.eval(cm, x) - rhs.eval(cm, x)).norm() == 0.0);
    }
    report
}

/// The two antipodes commute on the nose, and each is involutive.
pub fn antipode_commutation(cm: &CrossedModule) -> ExactReport {
    let mut report = ExactReport::default();
    for x in cm.elements() {
        report.tally(cm.vinv(cm.hinv(x)) == cm.hinv(cm.vinv(x)));
        report.tally(cm.vinv(cm.vinv(x)) == x);
        report.tally(cm.hinv(cm.hinv(x)) == x);
    }
    report
}

// ---------------------------------------------------------------------------
// Hopf 2-algebra equivariance on delta bases.
// ---------------------------------------------------------------------------

type IntVec = Vec<i64>;

/// Equivariance suite of the coordinate-ring crossed bimodule on delta
/// bases:
///
/// 1. `Δ_0 ∘ t̄ = (1 ⊗ t̄ + t̄ ⊗ 1) ∘ Δ_1` on every degree-1 basis delta,
/// 2. `(1 ⊗ t̄) Δ_0 = (t̄ ⊗ 1) Δ_0` on every basis vector of the image of
///    `t̄`, and
/// 3. antipode equivariance `S_0 ∘ t̄ = t̄ ∘ S_1`.
///
/// `Δ_1` is the convolution coproduct on the degree-1 leg, `Δ_0` the mixed
/// coaction `δ_g ↦ Σ_{t(y)g₂ = g} δ_y ⊗ δ_{g₂} ⊕ Σ_{g₁ t(y) = g} δ_{g₁} ⊗ δ_y`,
/// and `t̄ δ_y = δ_{t(y)}` mirrors the structure map on delta functions.
pub fn hopf2_equivariance_check(cm: &CrossedModule) -> ExactReport {
    let mut report = ExactReport::default();
    let ng = cm.g.order();
    let nh = cm.h.order();

    let delta0_hg = |g: GElem| -> IntVec {
        let mut v = vec![0i64; nh * ng];
        for y in cm.h.elements() {
            let g2 = cm.g.op(cm.g.invert(cm.t(y)), g);
            v[y * ng + g2] += 1;
        }
        v
    };
    let delta0_gh = |g: GElem| -> IntVec {
        let mut v = vec![0i64; ng * nh];
        for y in cm.h.elements() {
            let g1 = cm.g.op(g, cm.g.invert(cm.t(y)));
            v[g1 * nh + y] += 1;
        }
        v
    };

    // Identity 1 on every delta of the degree-1 leg.
    for y0 in cm.h.elements() {
        let mut lhs_hg = vec![0i64; nh * ng];
        let mut lhs_gh = vec![0i64; ng * nh];
        for y1 in cm.h.elements() {
            let y2 = cm.h.op(cm.h.invert(y1), y0);
            lhs_hg[y1 * ng + cm.t(y2)] += 1;
            lhs_gh[cm.t(y1) * nh + y2] += 1;
        }
        let g = cm.t(y0);
        report.tally(lhs_hg == delta0_hg(g) && lhs_gh == delta0_gh(g));
    }

    // Identity 2 on the image basis.
    for y0 in cm.h.elements() {
        let g = cm.t(y0);
        let mut lhs = vec![0i64; ng * ng];
        for (k, &m) in delta0_hg(g).iter().enumerate() {
            if m != 0 {
                let (y, g2) = (k / ng, k % ng);
                lhs[cm.t(y) * ng + g2] += m;
            }
        }
        let mut rhs = vec![0i64; ng * ng];
        for (k, &m) in delta0_gh(g).iter().enumerate() {
            if m != 0 {
                let (g1, y) = (k / nh, k % nh);
                rhs[g1 * ng + cm.t(y)] += m;
            }
        }
        report.tally(lhs == rhs);
    }

    // Antipode equivariance.
    for y in cm.h.elements() {
        report.tally(cm.g.invert(cm.t(y)) == cm.t(cm.h.invert(y)));
    }
    report
}

// ---------------------------------------------------------------------------
// Categorified states: stalks and gauge operator families.
// ---------------------------------------------------------------------------

/// A categorified graph state: one finite-dimensional stalk per flat
/// configuration (dimension 0 allowed).
#[derive(Debug, Clone)]
pub struct CategorifiedState {
    pub stalk_dims: Vec<usize>,
}

/// A concrete family of stalk operators `U_ζ(c): stalk(c) -> stalk(ζ·c)`
/// indexed by (gauge transform, configuration).
pub struct GaugeOperatorFamily {
    pub transforms: Vec<GaugeTransform>,
    /// `ops[z][c]` is the operator at transform `z`, configuration `c`.
    pub ops: Vec<Vec<CMat>>,
}

/// Extracts the projective phase family `c(ζ, ζ')` from a concretified
/// operator family. Errors when stalk dimensions vary along an orbit or a
/// composite is not a scalar multiple of the assigned operator.
pub fn stalk_gauge_operator(
    site: &Site,
    flats: &[FlatConfig],
    state: &CategorifiedState,
    family: &GaugeOperatorFamily,
) -> Result<Vec<Vec<Complex64>>, CoreError> {
    let index: HashMap<&FlatConfig, usize> =
        flats.iter().enumerate().map(|(i, c)| (c, i)).collect();
    if state.stalk_dims.len() != flats.len() {
        return Err(CoreError::InadmissibleState(
            "one stalk per configuration required".into(),
        ));
    }
    for z in &family.transforms {
        for (ci, c) in flats.iter().enumerate() {
            let img = index[&site.gauge_apply(c, z)];
            if state.stalk_dims[ci] != state.stalk_dims[img] {
                return Err(CoreError::InadmissibleState(format!(
                    "stalk dimension changes along the orbit of configuration {ci}"
                )));
            }
        }
    }
    for (zi, _) in family.transforms.iter().enumerate() {
        for (ci, _) in flats.iter().enumerate() {
            let m = &family.ops[zi][ci];
            if m.cols != state.stalk_dims[ci] {
                return Err(CoreError::InadmissibleState(format!(
                    "operator at ({zi}, {ci}) has {} columns, stalk is {}",
                    m.cols, state.stalk_dims[ci]
                )));
            }
        }
    }
    let nz = family.transforms.len();
    let find_transform = |z: &GaugeTransform| -> Result<usize, CoreError> {
        family
            .transforms
            .iter()
            .position(|w| w == z)
            .ok_or_else(|| CoreError::InadmissibleState("family is not closed".into()))
    };
    let mut phases = vec![vec![ZERO; nz]; nz];
    for (i, zi) in family.transforms.iter().enumerate() {
        for (j, zj) in family.transforms.iter().enumerate() {
            let comp = site.compose_gauge(zi, zj);
            let k = find_transform(&comp)?;
            let mut phase: Option<Complex64> = None;
            for (ci, c) in flats.iter().enumerate() {
                if state.stalk_dims[ci] == 0 {
                    continue;
                }
                let mid = index[&site.gauge_apply(c, zi)];
                let lhs = family.ops[j][mid].mul(&family.ops[i][ci])?;
                let base = &family.ops[k][ci];
                let mut this: Option<Complex64> = None;
                for (l, r) in lhs.data.iter().zip(base.data.iter()) {
                    if r.norm() > 1e-12 {
                        let q = l / r;
                        match this {
                            None => this = Some(q),
                            Some(p) if (p - q).norm() < 1e-10 => {}
                            _ => {
                                return Err(CoreError::InadmissibleState(
                                    "composite is not a scalar multiple of the assigned operator"
                                        .into(),
                                ))
                            }
                        }
                    } else if l.norm() > 1e-10 {
                        return Err(CoreError::InadmissibleState(
                            "composite is not a scalar multiple of the assigned operator".into(),
                        ));
                    }
                }
                let this = this.ok_or_else(|| {
                    CoreError::InadmissibleState("zero operator in the family".into())
                })?;
                match phase {
                    None => phase = Some(this),
                    Some(p) if (p - this).norm() < 1e-10 => {}
                    _ => {
                        return Err(CoreError::InadmissibleState(
                            "projective phase varies across configurations".into(),
                        ))
                    }
                }
            }
            phases[i][j] = phase.unwrap_or(ONE);
        }
    }
    Ok(phases)
}

/// 2-cocycle identity for an extracted phase family, with the same
/// composition order as the operator composition.
pub fn phases_satisfy_cocycle(
    site: &Site,
    transforms: &[GaugeTransform],
    phases: &[Vec<Complex64>],
    tol: f64,
) -> bool {
    let find = |z: &GaugeTransform| transforms.iter().position(|w| w == z).unwrap();
    for (i, zi) in transforms.iter().enumerate() {
        for (j, zj) in transforms.iter().enumerate() {
            for (k, zk) in transforms.iter().enumerate() {
                let ij = find(&site.compose_gauge(zi, zj));
                let jk = find(&site.compose_gauge(zj, zk));
                let lhs = phases[i][j] * phases[ij][k];
                let rhs = phases[j][k] * phases[i][jk];
                if (lhs - rhs).norm() > tol {
                    return false;
                }
            }
        }
    }
    true
}

// ---------------------------------------------------------------------------
// Graph-level splitting coproducts.
// ---------------------------------------------------------------------------

/// The decoration data of one piece face: labels of the edges appearing in
/// its paths, plus its face label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PieceConfig {
    pub edges: BTreeMap<EdgeId, GElem>,
    pub face: GElem,
}

/// One Sweedler term of a graph-level splitting coproduct.
#[derive(Debug, Clone)]
pub struct CoproductTerm {
    pub left: PieceConfig,
    pub right: PieceConfig,
    pub value: Complex64,
}

#[derive(Debug, Clone)]
pub struct CoproductResult {
    pub kind: SplitKind,
    pub terms: Vec<CoproductTerm>,
}

fn piece_config(sd: &SplitDescriptor, face: usize, cfg: &FlatConfig) -> PieceConfig {
    let refined = &sd.refined;
    let f = refined.face(face).expect("piece face");
    let fpos = refined.face_index(face).unwrap();
    let mut edges = BTreeMap::new();
    for d in f.source.iter().chain(f.target.iter()) {
        let epos = refined.edge_index(d.edge).unwrap();
        edges.insert(d.edge, cfg.edge_labels[epos]);
    }
    PieceConfig {
        edges,
        face: cfg.face_labels[fpos],
    }
}

/// Glues a refined flat decoration back to a decoration of the original
/// lattice: restrict the edge labels and compose the two piece labels
/// horizontally or vertically according to the split kind.
pub fn glue_config(
    sd: &SplitDescriptor,
    cm: &CrossedModule,
    cfg: &FlatConfig,
) -> Result<FlatConfig, CoreError> {
    let refined = &sd.refined;
    let rsite = Site::new(refined, cm);
    let p1 = refined.face_index(sd.pieces.0).unwrap();
    let p2 = refined.face_index(sd.pieces.1).unwrap();
    let b1 = cfg.face_labels[p1];
    let b2 = cfg.face_labels[p2];
    let glued_face = match sd.kind {
        SplitKind::Horizontal => {
            // Target-anchored horizontal gluing: (h2^{-1} ▷ b1) b2.
            let f2 = refined.face(sd.pieces.1).unwrap();
            let h2 = rsite.path_holonomy(cfg, &f2.source);
            cm.h.op(cm.act(cm.g.invert(h2), b1), b2)
        }
        SplitKind::Vertical => cm.h.op(b1, b2),
    };
    let mut edge_labels = Vec::with_capacity(sd.original.edges.len());
    for e in &sd.original.edges {
        let parts = sd
            .edge_assembly
            .get(&e.id)
            .ok_or_else(|| CoreError::InvalidSplit(format!("no assembly for edge {}", e.id)))?;
        let mut acc = cm.g.identity;
        for d in parts {
            let pos = refined
                .edge_index(d.edge)
                .ok_or_else(|| CoreError::InvalidSplit("assembly edge missing".into()))?;
            let h = cfg.edge_labels[pos];
            acc = cm.g.op(acc, if d.sign >= 0 { h } else { cm.g.invert(h) });
        }
        edge_labels.push(acc);
    }
    let mut face_labels = Vec::with_capacity(sd.original.faces.len());
    for f in &sd.original.faces {
        if f.id == sd.face {
            face_labels.push(glued_face);
        } else {
            let pos = refined.face_index(f.id).ok_or_else(|| {
                CoreError::InvalidSplit("unsplit face missing from refinement".into())
            })?;
            face_labels.push(cfg.face_labels[pos]);
        }
    }
    Ok(FlatConfig {
        edge_labels,
        face_labels,
    })
}

/// The graph-level splitting coproduct of a state on the original lattice:
/// one Sweedler term per refined flat decoration, valued at the glued
/// original decoration.
pub fn coproduct(
    cm: &CrossedModule,
    sd: &SplitDescriptor,
    original_flats: &[FlatConfig],
    phi: &[Complex64],
    budget: u128,
) -> Result<CoproductResult, CoreError> {
    if phi.len() != original_flats.len() {
        return Err(CoreError::UndefinedState(
            "state must cover the enumerated flat set".into(),
        ));
    }
    let rsite = Site::new(&sd.refined, cm);
    let refined_flats = rsite.enumerate_flat(budget)?;
    let orig_index: HashMap<&FlatConfig, usize> = original_flats
        .iter()
        .enumerate()
        .map(|(i, c)| (c, i))
        .collect();
    let mut terms = Vec::with_capacity(refined_flats.len());
    for cfg in &refined_flats {
        let glued = glue_config(sd, cm, cfg)?;
        let &gi = orig_index.get(&glued).ok_or_else(|| {
            CoreError::InvalidSplit("glued decoration is not flat on the original lattice".into())
        })?;
        terms.push(CoproductTerm {
            left: piece_config(sd, sd.pieces.0, cfg),
            right: piece_config(sd, sd.pieces.1, cfg),
            value: phi[gi],
        });
    }
    Ok(CoproductResult {
        kind: sd.kind,
        terms,
    })
}

/// Checks that a state is localized at one face: its value depends only on
/// the labels of that face's path edges and its own face label.
pub fn is_localized(site: &Site, flats: &[FlatConfig], phi: &[Complex64], face: usize) -> bool {
    let f = site.complex.face(face).expect("face exists");
    let fpos = site.complex.face_index(face).unwrap();
    let support_edges: Vec<usize> = f
        .source
        .iter()
        .chain(f.target.iter())
        .map(|d| site.eidx(d.edge))
        .collect();
    let key = |c: &FlatConfig| -> (Vec<GElem>, GElem) {
        (
            support_edges.iter().map(|&e| c.edge_labels[e]).collect(),
            c.face_labels[fpos],
        )
    };
    let mut seen: HashMap<(Vec<GElem>, GElem), Complex64> = HashMap::new();
    for (i, c) in flats.iter().enumerate() {
        match seen.entry(key(c)) {
            std::collections::hash_map::Entry::Vacant(v) => {
                v.insert(phi[i]);
            }
            std::collections::hash_map::Entry::Occupied(o) => {
                if (*o.get() - phi[i]).norm() > 0.0 {
                    return false;
                }
            }
        }
    }
    true
}
