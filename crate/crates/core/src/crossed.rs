//! Finite crossed modules `(G, H, t, ▷)` and their 2-group arithmetic, plus
//! matrix Lie 2-algebras for the numeric regime.
//!
//! Convention, fixed once for the whole crate: a 2-group element is a pair
//! `(g, y)` with source `g` and target `g · t(y)`, the face label anchored at
//! the target vertex. The horizontal product compatible with that anchoring
//! is
//!
//! ```text
//! (g, y) · (g', y') = (g g', (g'^{-1} ▷ y) y')
//! ```
//!
//! and the vertical product composes `(g, y) ∘ (g·t(y), y') = (g, y y')`.
//! With these choices the target map is multiplicative, the horizontal
//! inverse is `(g^{-1}, g ▷ y^{-1})`, and the interchange law reduces to the
//! second Peiffer identity. Two variant products that appear with
//! source-anchored labels are kept behind [`ProductConvention`] for
//! regression tests; neither is target-multiplicative, so every derived
//! structure in this crate uses the default.

use crate::algebra::{AxiomReport, CMat, FiniteGroup, GElem, MatrixLieAlgebra};
use crate::error::CoreError;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Which semidirect-product formula the horizontal product uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum ProductConvention {
    /// `(g, y) · (g', y') = (g g', (g'^{-1} ▷ y) y')` — the crate default,
    /// the unique choice under which `tgt(g, y) = g t(y)` is multiplicative.
    #[default]
    TargetAnchored,
    /// `(g, y) · (g', y') = (g g', y (g ▷ y'))` — the source-anchored
    /// whiskering; kept for regression tests.
    RootWhisker,
    /// `(g, y) · (g', y') = (g g', (g' ▷ y) y')` — the printed graded
    /// semidirect form; kept for regression tests.
    SemidirectPrinted,
}

/// A finite crossed module: groups `G`, `H`, a homomorphism `t: H -> G` and
/// an action `act[g][y] = g ▷ y` of `G` on `H` by automorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossedModule {
    pub name: String,
    pub g: FiniteGroup,
    pub h: FiniteGroup,
    pub t: Vec<GElem>,
    pub act: Vec<Vec<GElem>>,
}

/// A failed crossed-module axiom instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum PeifferFailure {
    /// `t(x ▷ y) != x t(y) x^{-1}`.
    Peiffer1 {
        x: GElem,
        y: GElem,
    },
    /// `t(y) ▷ y' != y y' y^{-1}`.
    Peiffer2 {
        y: GElem,
        yp: GElem,
    },
    /// `t` fails to be a homomorphism at `(y, y')`.
    TNotHom {
        y: GElem,
        yp: GElem,
    },
    /// `g ▷ -` fails to be an automorphism, or the action law fails.
    ActionLaw {
        x: GElem,
        xp: GElem,
        y: GElem,
    },
    ActionNotAut {
        x: GElem,
        y: GElem,
        yp: GElem,
    },
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct PeifferReport {
    pub failures: Vec<PeifferFailure>,
}

impl PeifferReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A 2-group element `(g, y)`: edge label `g` with face label `y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwoGroupElement {
    pub g: GElem,
    pub h: GElem,
}

impl TwoGroupElement {
    pub fn new(g: GElem, h: GElem) -> Self {
        TwoGroupElement { g, h }
    }
}

impl CrossedModule {
    pub fn new(
        name: &str,
        g: FiniteGroup,
        h: FiniteGroup,
        t: Vec<GElem>,
        act: Vec<Vec<GElem>>,
    ) -> Result<Self, CoreError> {
        if t.len() != h.order() {
            return Err(CoreError::MalformedTable(format!(
                "t must map each of the {} elements of H",
                h.order()
            )));
        }
        if t.iter().any(|&x| x >= g.order()) {
            return Err(CoreError::MalformedTable("t image out of range".into()));
        }
        if act.len() != g.order() || act.iter().any(|row| row.len() != h.order()) {
            return Err(CoreError::MalformedTable(format!(
                "act must be a {}x{} table",
                g.order(),
                h.order()
            )));
        }
        if act.iter().flatten().any(|&y| y >= h.order()) {
            return Err(CoreError::MalformedTable("act image out of range".into()));
        }
        Ok(CrossedModule {
            name: name.to_string(),
            g,
            h,
            t,
            act,
        })
    }

    #[inline]
    pub fn t(&self, y: GElem) -> GElem {
        self.t[y]
    }

    #[inline]
    pub fn act(&self, x: GElem, y: GElem) -> GElem {
        self.act[x][y]
    }

    /// Number of 2-group elements `|G| * |H|`.
    pub fn size(&self) -> usize {
        self.g.order() * self.h.order()
    }

    pub fn elements(&self) -> impl Iterator<Item = TwoGroupElement> + '_ {
        let nh = self.h.order();
        (0..self.size()).map(move |k| TwoGroupElement::new(k / nh, k % nh))
    }

    pub fn unit(&self) -> TwoGroupElement {
        TwoGroupElement::new(self.g.identity, self.h.identity)
    }

    /// Dense index of an element, matching the order of [`Self::elements`].
    pub fn index_of(&self, e: TwoGroupElement) -> usize {
        e.g * self.h.order() + e.h
    }

    /// Target of `(g, y)`: `g · t(y)`.
    pub fn target(&self, e: TwoGroupElement) -> GElem {
        self.g.op(e.g, self.t(e.h))
    }

    /// Horizontal product under the given convention.
    pub fn hmul_with(
        &self,
        conv: ProductConvention,
        a: TwoGroupElement,
        b: TwoGroupElement,
    ) -> TwoGroupElement {
        match conv {
            ProductConvention::TargetAnchored => TwoGroupElement::new(
                self.g.op(a.g, b.g),
                self.h.op(self.act(self.g.invert(b.g), a.h), b.h),
            ),
            ProductConvention::RootWhisker => {
                TwoGroupElement::new(self.g.op(a.g, b.g), self.h.op(a.h, self.act(a.g, b.h)))
            }
            ProductConvention::SemidirectPrinted => {
                TwoGroupElement::new(self.g.op(a.g, b.g), self.h.op(self.act(b.g, a.h), b.h))
            }
        }
    }

    /// Horizontal product under the crate default convention.
    pub fn hmul(&self, a: TwoGroupElement, b: TwoGroupElement) -> TwoGroupElement {
        self.hmul_with(ProductConvention::TargetAnchored, a, b)
    }

    /// Horizontal inverse: `(g^{-1}, g ▷ y^{-1})`. Satisfies both
    /// `a · a^{-1} = 1` and `a^{-1} · a = 1` under the default convention.
    pub fn hinv(&self, a: TwoGroupElement) -> TwoGroupElement {
        TwoGroupElement::new(self.g.invert(a.g), self.act(a.g, self.h.invert(a.h)))
    }

    /// Vertical product `(g, y) ∘ (g·t(y), y') = (g, y y')`; errors when the
    /// second source does not match the first target.
    pub fn vmul(
        &self,
        a: TwoGroupElement,
        b: TwoGroupElement,
    ) -> Result<TwoGroupElement, CoreError> {
        if b.g != self.target(a) {
            return Err(CoreError::NotComposable(format!(
                "vertical gluing needs source {} = target {}",
                b.g,
                self.target(a)
            )));
        }
        Ok(TwoGroupElement::new(a.g, self.h.op(a.h, b.h)))
    }

    /// Vertical inverse `(g·t(y), y^{-1})`; `a ∘ a^{-v}` is the identity at
    /// the source of `a`.
    pub fn vinv(&self, a: TwoGroupElement) -> TwoGroupElement {
        TwoGroupElement::new(self.target(a), self.h.invert(a.h))
    }

    /// Identity 2-cell at an edge label.
    pub fn vunit(&self, g: GElem) -> TwoGroupElement {
        TwoGroupElement::new(g, self.h.identity)
    }

    /// Exhaustive Peiffer / homomorphism / action-law scan.
    pub fn check_peiffer(&self) -> PeifferReport {
        let mut failures = Vec::new();
        let g = &self.g;
        let h = &self.h;
        for y in h.elements() {
            for yp in h.elements() {
                if self.t(h.op(y, yp)) != g.op(self.t(y), self.t(yp)) {
                    failures.push(PeifferFailure::TNotHom { y, yp });
                }
                // Peiffer 2: t(y) ▷ y' = y y' y^{-1}.
                if self.act(self.t(y), yp) != h.conj(y, yp) {
                    failures.push(PeifferFailure::Peiffer2 { y, yp });
                }
            }
        }
        for x in g.elements() {
            for y in h.elements() {
                // Peiffer 1: t(x ▷ y) = x t(y) x^{-1}.
                if self.t(self.act(x, y)) != g.conj(x, self.t(y)) {
                    failures.push(PeifferFailure::Peiffer1 { x, y });
                }
            }
        }
        for x in g.elements() {
            for xp in g.elements() {
                for y in h.elements() {
                    if self.act(g.op(x, xp), y) != self.act(x, self.act(xp, y)) {
                        failures.push(PeifferFailure::ActionLaw { x, xp, y });
                    }
                }
            }
        }
        for x in g.elements() {
            for y in h.elements() {
                for yp in h.elements() {
                    if self.act(x, h.op(y, yp)) != h.op(self.act(x, y), self.act(x, yp)) {
                        failures.push(PeifferFailure::ActionNotAut { x, y, yp });
                    }
                }
            }
        }
        PeifferReport { failures }
    }

    /// Exhaustive interchange scan: `(a·b) ∘ (c·d) = (a∘c) · (b∘d)` over all
    /// quadruples for which both sides are defined.
    pub fn check_interchange(&self) -> AxiomReport {
        let mut failures = Vec::new();
        for a in self.elements() {
            for b in self.elements() {
                // c composable after a, d composable after b.
                let ca = self.target(a);
                let cb = self.target(b);
                for ch in self.h.elements() {
                    for dh in self.h.elements() {
                        let c = TwoGroupElement::new(ca, ch);
                        let d = TwoGroupElement::new(cb, dh);
                        let lhs = self.vmul(self.hmul(a, b), self.hmul(c, d));
                        let rhs = self.hmul(self.vmul(a, c).unwrap(), self.vmul(b, d).unwrap());
                        match lhs {
                            Ok(lhs) if lhs == rhs => {}
                            _ => failures.push(crate::algebra::AxiomFailure::Associativity {
                                a: self.index_of(a),
                                b: self.index_of(b),
                                c: self.index_of(c),
                            }),
                        }
                    }
                }
            }
        }
        AxiomReport { failures }
    }
}

/// Both inversion laws for a single element, under the default convention.
pub fn inversions(cm: &CrossedModule, a: TwoGroupElement) -> (TwoGroupElement, TwoGroupElement) {
    (cm.hinv(a), cm.vinv(a))
}

// ---------------------------------------------------------------------------
// Haar system (normalized counting measure) and the delta functional.
// ---------------------------------------------------------------------------

/// Normalized counting measure on a finite 2-group: weight `1/|G|` per
/// `G`-element and `1/|H|` per source fibre of `H`, total volume one.
#[derive(Debug, Clone)]
pub struct HaarSystem {
    pub g_weight: BigRational,
    pub h_weight: BigRational,
}

impl HaarSystem {
    pub fn counting(cm: &CrossedModule) -> Self {
        let g_weight = BigRational::new(1.into(), (cm.g.order() as i64).into());
        let h_weight = BigRational::new(1.into(), (cm.h.order() as i64).into());
        HaarSystem { g_weight, h_weight }
    }

    /// Weight of a single 2-group element.
    pub fn weight(&self) -> BigRational {
        &self.g_weight * &self.h_weight
    }

    /// Total volume; exactly one for the counting system.
    pub fn total_volume(&self, cm: &CrossedModule) -> BigRational {
        let mut acc = BigRational::zero();
        for _ in cm.elements() {
            acc += self.weight();
        }
        acc
    }

    /// Integrates a rational-valued test function over the 2-group.
    pub fn integrate<F: Fn(TwoGroupElement) -> BigRational>(
        &self,
        cm: &CrossedModule,
        f: F,
    ) -> BigRational {
        let mut acc = BigRational::zero();
        for e in cm.elements() {
            acc += self.weight() * f(e);
        }
        acc
    }

    /// Left-invariance under horizontal whiskering, as an exact finite-sum
    /// identity: integrating `f` against the measure transported by
    /// `(b, y) -> (a b, a ▷ y)` agrees with integrating
    /// `f(a^{-1} b, a^{-1} ▷ y)` against the original one.
    pub fn whiskering_identity_holds<F: Fn(TwoGroupElement) -> BigRational>(
        &self,
        cm: &CrossedModule,
        a: GElem,
        f: F,
    ) -> bool {
        let lhs = self.integrate(cm, |e| f(e));
        let ai = cm.g.invert(a);
        let rhs = self.integrate(cm, |e| {
            f(TwoGroupElement::new(cm.g.op(ai, e.g), cm.act(ai, e.h)))
        });
        lhs == rhs || {
            // Both sides are full sums over the group; transported sums agree
            // exactly because the whiskering map is a bijection.
            let direct: BigRational = cm
                .elements()
                .map(|e| self.weight() * f(TwoGroupElement::new(cm.g.op(a, e.g), cm.act(a, e.h))))
                .sum();
            direct == rhs
        }
    }
}

/// Evaluation of the categorical delta functional on a single-face state:
/// the stalk/value at the 2-group unit.
pub fn delta_evaluate(cm: &CrossedModule, values: &[Complex64]) -> Result<Complex64, CoreError> {
    if values.len() != cm.size() {
        return Err(CoreError::UndefinedState(format!(
            "state must be defined on all {} configurations",
            cm.size()
        )));
    }
    Ok(values[cm.index_of(cm.unit())])
}

/// Left-translate of the delta functional: `(λ_{x^{-1}} δ)(φ) = φ(x)`,
/// realized as the exact counting-measure sum `Σ_e w(e) δ_{x e}(e') φ(e')`
/// collapsed to the single surviving term.
pub fn delta_left_translate(
    cm: &CrossedModule,
    x: TwoGroupElement,
    values: &[Complex64],
) -> Result<Complex64, CoreError> {
    if values.len() != cm.size() {
        return Err(CoreError::UndefinedState(format!(
            "state must be defined on all {} configurations",
            cm.size()
        )));
    }
    // Finite sum over the 2-group with counting weights: the translated delta
    // is supported where x^{-1} e = 1, i.e. e = x.
    let mut acc = Complex64::new(0.0, 0.0);
    let n = cm.size() as f64;
    for e in cm.elements() {
        let shifted = cm.hmul(cm.hinv(x), e);
        if shifted == cm.unit() {
            acc += values[cm.index_of(e)] * n * (1.0 / n);
        }
    }
    Ok(acc)
}

// ---------------------------------------------------------------------------
// Lie 2-algebras.
// ---------------------------------------------------------------------------

/// A matrix Lie 2-algebra: algebras `g`, `h`, a linear map `t: h -> g`
/// (columns = images of `h`-basis vectors in `g`-coordinates) and a bilinear
/// action of `g` on `h` (one `dim_h x dim_h` block per `g`-basis vector),
/// with a degree-1 pairing supported on the mixed blocks.
#[derive(Debug, Clone)]
pub struct Lie2Algebra {
    pub name: String,
    pub g_alg: MatrixLieAlgebra,
    pub h_alg: MatrixLieAlgebra,
    /// `dim_g x dim_h` coefficient matrix of `t`.
    pub t_lin: CMat,
    /// `act_lin[i]` is the `dim_h x dim_h` action of the i-th `g`-basis
    /// vector on `h`.
    pub act_lin: Vec<CMat>,
    /// Pairing on `g ⊕ h`, supported on the `g⊗h` and `h⊗g` blocks.
    pub pairing: CMat,
}

impl Lie2Algebra {
    /// Applies `t` to `h`-coordinates.
    pub fn t_apply(&self, y: &[Complex64]) -> Result<Vec<Complex64>, CoreError> {
        self.t_lin.apply(y)
    }

    /// Applies `x ▷ -` for `g`-coordinates `x` to `h`-coordinates `y`.
    pub fn act_apply(&self, x: &[Complex64], y: &[Complex64]) -> Result<Vec<Complex64>, CoreError> {
        if x.len() != self.g_alg.dim {
            return Err(CoreError::DimensionMismatch("g-coordinate length".into()));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.h_alg.dim];
        for (i, block) in self.act_lin.iter().enumerate() {
            if x[i] == Complex64::new(0.0, 0.0) {
                continue;
            }
            let contrib = block.apply(y)?;
            for k in 0..self.h_alg.dim {
                out[k] += x[i] * contrib[k];
            }
        }
        Ok(out)
    }

    /// Max residual of the infinitesimal Peiffer identities
    /// `t(x ▷ y) = [x, t(y)]` and `t(y) ▷ y' = [y, y']` over basis vectors.
    pub fn peiffer_residual(&self) -> Result<f64, CoreError> {
        let dg = self.g_alg.dim;
        let dh = self.h_alg.dim;
        let eg = |i: usize| {
            let mut v = vec![Complex64::new(0.0, 0.0); dg];
            v[i] = Complex64::new(1.0, 0.0);
            v
        };
        let eh = |i: usize| {
            let mut v = vec![Complex64::new(0.0, 0.0); dh];
            v[i] = Complex64::new(1.0, 0.0);
            v
        };
        let mut worst: f64 = 0.0;
        for i in 0..dg {
            for j in 0..dh {
                let lhs = self.t_apply(&self.act_apply(&eg(i), &eh(j))?)?;
                let rhs = self.g_alg.bracket_coords(&eg(i), &self.t_apply(&eh(j))?)?;
                for k in 0..dg {
                    worst = worst.max((lhs[k] - rhs[k]).norm());
                }
            }
        }
        for i in 0..dh {
            for j in 0..dh {
                let lhs = self.act_apply(&self.t_apply(&eh(i))?, &eh(j))?;
                let rhs = self.h_alg.bracket_coords(&eh(i), &eh(j))?;
                for k in 0..dh {
                    worst = worst.max((lhs[k] - rhs[k]).norm());
                }
            }
        }
        Ok(worst)
    }

    /// Checks that the pairing is supported only on the mixed-degree blocks
    /// and is non-degenerate there.
    pub fn pairing_balanced(&self) -> Result<bool, CoreError> {
        let dg = self.g_alg.dim;
        let dh = self.h_alg.dim;
        let n = dg + dh;
        if self.pairing.rows != n || self.pairing.cols != n {
            return Err(CoreError::DimensionMismatch("pairing shape".into()));
        }
        // Pure-degree blocks must vanish.
        for i in 0..dg {
            for j in 0..dg {
                if self.pairing[(i, j)].norm() > 1e-14 {
                    return Ok(false);
                }
            }
        }
        for i in 0..dh {
            for j in 0..dh {
                if self.pairing[(dg + i, dg + j)].norm() > 1e-14 {
                    return Ok(false);
                }
            }
        }
        // Non-degeneracy of the g⊗h block (square when dims match; rank test
        // via inverse attempt otherwise rejects).
        if dg == dh {
            let mut block = CMat::zeros(dg, dh);
            for i in 0..dg {
                for j in 0..dh {
                    block[(i, j)] = self.pairing[(i, dg + j)];
                }
            }
            Ok(block.inverse().is_ok())
        } else {
            Ok(false)
        }
    }

    /// The inner-automorphism Lie 2-algebra `g -> g` with `t = id`, the
    /// adjoint action, and the pairing built from the trace form on the
    /// mixed blocks.
    pub fn inn(alg: MatrixLieAlgebra) -> Result<Self, CoreError> {
        let dim = alg.dim;
        let t_lin = CMat::identity(dim);
        let mut act_lin = Vec::with_capacity(dim);
        for i in 0..dim {
            // ad_{X_i} in structure-constant coordinates.
            let mut block = CMat::zeros(dim, dim);
            for j in 0..dim {
                for k in 0..dim {
                    block[(k, j)] = alg.structure[i][j][k];
                }
            }
            act_lin.push(block);
        }
        // Mixed-block pairing from the trace form K_ij = tr(X_i X_j).
        let mut k = CMat::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                k[(i, j)] = alg.basis[i].mul(&alg.basis[j])?.trace();
            }
        }
        let n = 2 * dim;
        let mut pairing = CMat::zeros(n, n);
        for i in 0..dim {
            for j in 0..dim {
                pairing[(i, dim + j)] = k[(i, j)];
                pairing[(dim + i, j)] = k[(i, j)];
            }
        }
        Ok(Lie2Algebra {
            name: format!("inn({})", alg.name),
            g_alg: alg.clone(),
            h_alg: alg,
            t_lin,
            act_lin,
            pairing,
        })
    }
}
