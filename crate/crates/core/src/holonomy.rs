//! Decorated 2-graphs: flatness constraints, gauge transformations, orbit
//! enumeration and the gauge-averaging projector.
//!
//! A decoration assigns a `G`-label to each edge and an `H`-label to each
//! face. A face with source path `p_s` and target path `p_t` is *flat* when
//! `h(p_t) = h(p_s) · t(b_f)`; a 3-cell is flat when its two pasting routes
//! carry equal composite labels. Face labels are anchored at the common
//! endpoint of the two face paths, which fixes the whiskering in the gauge
//! transformation and in pasting-route labels.

use crate::algebra::GElem;
use crate::complex::{Dart, FaceId, Slab, TwoComplex};
use crate::crossed::CrossedModule;
use crate::error::CoreError;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

/// A full decoration of a 2-complex, indexed positionally against
/// `complex.edges` and `complex.faces`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FlatConfig {
    pub edge_labels: Vec<GElem>,
    pub face_labels: Vec<GElem>,
}

/// A 2-gauge transformation: a `G`-label per vertex and an `H`-label per
/// edge, indexed positionally against `complex.vertices` / `complex.edges`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GaugeTransform {
    pub vertex_labels: Vec<GElem>,
    pub edge_labels: Vec<GElem>,
}

/// A secondary gauge transformation (modification): an `H`-label per vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SecondaryGauge {
    pub vertex_labels: Vec<GElem>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FlatnessReport {
    /// `(face id, boundary product, expected)` for each violated face.
    pub face_failures: Vec<(FaceId, GElem, GElem)>,
    /// `(cell id, lhs label, rhs label)` for each violated 3-cell.
    pub cell_failures: Vec<(usize, GElem, GElem)>,
}

impl FlatnessReport {
    pub fn passed(&self) -> bool {
        self.face_failures.is_empty() && self.cell_failures.is_empty()
    }
}

/// Lattice-plus-2-group context shared by the holonomy operations.
pub struct Site<'a> {
    pub complex: &'a TwoComplex,
    pub cm: &'a CrossedModule,
    vertex_index: HashMap<usize, usize>,
    edge_index: HashMap<usize, usize>,
}

impl<'a> Site<'a> {
    pub fn new(complex: &'a TwoComplex, cm: &'a CrossedModule) -> Self {
        let vertex_index = complex
            .vertices
            .iter()
            .enumerate()
            .map(|(i, &v)| (v, i))
            .collect();
        let edge_index = complex
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.id, i))
            .collect();
        Site {
            complex,
            cm,
            vertex_index,
            edge_index,
        }
    }

    #[inline]
    pub fn eidx(&self, edge: usize) -> usize {
        self.edge_index[&edge]
    }

    #[inline]
    pub fn vidx(&self, vertex: usize) -> usize {
        self.vertex_index[&vertex]
    }

    /// Holonomy of a path under a decoration.
    pub fn path_holonomy(&self, cfg: &FlatConfig, path: &[Dart]) -> GElem {
        let g = &self.cm.g;
        let mut acc = g.identity;
        for d in path {
            let h = cfg.edge_labels[self.eidx(d.edge)];
            let h = if d.sign >= 0 { h } else { g.invert(h) };
            acc = g.op(acc, h);
        }
        acc
    }

    /// Edge-path composite of the gauge `H`-decorations, transported so that
    /// the decorated holonomy factors as `h'(p) = a_src^{-1} h(p) t(Γ(p)) a_tgt`.
    pub fn gamma_path(&self, cfg: &FlatConfig, zeta: &GaugeTransform, path: &[Dart]) -> GElem {
        let g = &self.cm.g;
        let h = &self.cm.h;
        let mut acc = h.identity;
        for d in path {
            let he = cfg.edge_labels[self.eidx(d.edge)];
            let ge = zeta.edge_labels[self.eidx(d.edge)];
            if d.sign >= 0 {
                // Γ(p e) = (h_e^{-1} ▷ Γ(p)) γ_e
                acc = h.op(self.cm.act(g.invert(he), acc), ge);
            } else {
                // Γ(p ē) = h_e ▷ (Γ(p) γ_e^{-1})
                acc = self.cm.act(he, h.op(acc, h.invert(ge)));
            }
        }
        acc
    }

    /// Composite label of one pasting slab, anchored at the route target:
    /// `h(right)^{-1} ▷ b_f^{±1}`.
    fn slab_label(&self, cfg: &FlatConfig, slab: &Slab) -> GElem {
        let fpos = self.complex.face_index(slab.face).expect("validated face");
        let b = cfg.face_labels[fpos];
        let b = if slab.reversed {
            self.cm.h.invert(b)
        } else {
            b
        };
        let hr = self.path_holonomy(cfg, &slab.right);
        self.cm.act(self.cm.g.invert(hr), b)
    }

    /// Composite label of a pasting route (ordered product of whiskered face
    /// labels).
    pub fn route_label(&self, cfg: &FlatConfig, route: &[Slab]) -> GElem {
        let mut acc = self.cm.h.identity;
        for slab in route {
            acc = self.cm.h.op(acc, self.slab_label(cfg, slab));
        }
        acc
    }

    /// Fake-flatness and 2-flatness scan for one decoration.
    pub fn check_flat(&self, cfg: &FlatConfig) -> Result<FlatnessReport, CoreError> {
        if cfg.edge_labels.len() != self.complex.edges.len()
            || cfg.face_labels.len() != self.complex.faces.len()
        {
            return Err(CoreError::MissingLabel(format!(
                "decoration must cover {} edges and {} faces",
                self.complex.edges.len(),
                self.complex.faces.len()
            )));
        }
        let mut face_failures = Vec::new();
        for (fpos, f) in self.complex.faces.iter().enumerate() {
            let hs = self.path_holonomy(cfg, &f.source);
            let ht = self.path_holonomy(cfg, &f.target);
            let expected = self.cm.g.op(hs, self.cm.t(cfg.face_labels[fpos]));
            if ht != expected {
                face_failures.push((f.id, ht, expected));
            }
        }
        let mut cell_failures = Vec::new();
        for c in &self.complex.cells3 {
            let lhs = self.route_label(cfg, &c.lhs);
            let rhs = self.route_label(cfg, &c.rhs);
            if lhs != rhs {
                cell_failures.push((c.id, lhs, rhs));
            }
        }
        Ok(FlatnessReport {
            face_failures,
            cell_failures,
        })
    }

    pub fn is_flat(&self, cfg: &FlatConfig) -> bool {
        self.check_flat(cfg).map(|r| r.passed()).unwrap_or(false)
    }

    /// Raw size of the decoration space `|G|^{edges} * |H|^{faces}`.
    pub fn raw_size(&self) -> u128 {
        let ng = self.cm.g.order() as u128;
        let nh = self.cm.h.order() as u128;
        let mut total: u128 = 1;
        for _ in &self.complex.edges {
            total = total.saturating_mul(ng);
        }
        for _ in &self.complex.faces {
            total = total.saturating_mul(nh);
        }
        total
    }

    /// Enumerates exactly the flat decorations, in lexicographic order of
    /// `(edge labels, face labels)`. Edge labels are scanned; face labels are
    /// drawn from the `t`-fibre forced by fake-flatness and filtered by
    /// 2-flatness.
    pub fn enumerate_flat(&self, budget: u128) -> Result<Vec<FlatConfig>, CoreError> {
        let needed = self.raw_size();
        if needed > budget {
            return Err(CoreError::BudgetExceeded { needed, budget });
        }
        let ne = self.complex.edges.len();
        let nf = self.complex.faces.len();
        let ng = self.cm.g.order();
        // Fibres of t, precomputed in increasing label order.
        let mut fibres: Vec<Vec<GElem>> = vec![Vec::new(); self.cm.g.order()];
        for y in self.cm.h.elements() {
            fibres[self.cm.t(y)].push(y);
        }
        let mut out = Vec::new();
        let mut edge_labels = vec![0usize; ne];
        loop {
            let base = FlatConfig {
                edge_labels: edge_labels.clone(),
                face_labels: vec![self.cm.h.identity; nf],
            };
            // Required t-image per face.
            let mut face_choices: Vec<&[GElem]> = Vec::with_capacity(nf);
            let mut feasible = true;
            for f in &self.complex.faces {
                let hs = self.path_holonomy(&base, &f.source);
                let ht = self.path_holonomy(&base, &f.target);
                let need = self.cm.g.op(self.cm.g.invert(hs), ht);
                let fibre = &fibres[need];
                if fibre.is_empty() {
                    feasible = false;
                    break;
                }
                face_choices.push(fibre);
            }
            if feasible {
                // Cartesian product over the per-face fibres.
                let mut pick = vec![0usize; nf];
                loop {
                    let face_labels: Vec<GElem> =
                        (0..nf).map(|i| face_choices[i][pick[i]]).collect();
                    let cfg = FlatConfig {
                        edge_labels: edge_labels.clone(),
                        face_labels,
                    };
                    if self
                        .complex
                        .cells3
                        .iter()
                        .all(|c| self.route_label(&cfg, &c.lhs) == self.route_label(&cfg, &c.rhs))
                    {
                        out.push(cfg);
                    }
                    // Advance the face picker.
                    let mut k = nf;
                    loop {
                        if k == 0 {
                            break;
                        }
                        k -= 1;
                        pick[k] += 1;
                        if pick[k] < face_choices[k].len() {
                            break;
                        }
                        pick[k] = 0;
                        if k == 0 {
                            k = usize::MAX;
                            break;
                        }
                    }
                    if k == usize::MAX || nf == 0 {
                        break;
                    }
                }
            }
            // Advance the edge scanner.
            let mut k = ne;
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                edge_labels[k] += 1;
                if edge_labels[k] < ng {
                    break;
                }
                edge_labels[k] = 0;
                if k == 0 {
                    return Ok(out);
                }
            }
            if ne == 0 {
                return Ok(out);
            }
        }
    }

    /// Independent oracle: filter the full raw decoration space through
    /// [`Self::check_flat`]. Exponentially slower than [`Self::enumerate_flat`]
    /// by construction; used to cross-check it.
    pub fn brute_force_flat(&self) -> Vec<FlatConfig> {
        let ne = self.complex.edges.len();
        let nf = self.complex.faces.len();
        let ng = self.cm.g.order();
        let nh = self.cm.h.order();
        let total_e: usize = ng.pow(ne as u32);
        let total_f: usize = nh.pow(nf as u32);
        let decode = |mut k: usize, n: usize, len: usize| -> Vec<GElem> {
            let mut v = vec![0usize; len];
            for slot in (0..len).rev() {
                v[slot] = k % n;
                k /= n;
            }
            v
        };
        let mut flats: Vec<FlatConfig> = (0..total_e)
            .into_par_iter()
            .flat_map_iter(|ke| {
                let edge_labels = decode(ke, ng, ne);
                (0..total_f).filter_map({
                    let edge_labels = edge_labels.clone();
                    move |kf| {
                        let cfg = FlatConfig {
                            edge_labels: edge_labels.clone(),
                            face_labels: decode(kf, nh, nf),
                        };
                        if self.is_flat(&cfg) {
                            Some(cfg)
                        } else {
                            None
                        }
                    }
                })
            })
            .collect();
        flats.sort();
        flats
    }

    // -----------------------------------------------------------------------
    // Gauge transformations.
    // -----------------------------------------------------------------------

    pub fn trivial_gauge(&self) -> GaugeTransform {
        GaugeTransform {
            vertex_labels: vec![self.cm.g.identity; self.complex.vertices.len()],
            edge_labels: vec![self.cm.h.identity; self.complex.edges.len()],
        }
    }

    /// Applies a 2-gauge transformation:
    /// `h'_e = a_{s(e)}^{-1} h_e t(γ_e) a_{t(e)}` and
    /// `b'_f = a_{v1}^{-1} ▷ (Γ(p_s)^{-1} b_f Γ(p_t))`, with `v1` the common
    /// endpoint of the face paths and `Γ` the transported gauge decoration
    /// of a path. This is the unique whiskering for which fake- and
    /// 2-flatness are preserved and composition closes.
    pub fn gauge_apply(&self, cfg: &FlatConfig, zeta: &GaugeTransform) -> FlatConfig {
        let g = &self.cm.g;
        let mut edge_labels = Vec::with_capacity(cfg.edge_labels.len());
        for (pos, e) in self.complex.edges.iter().enumerate() {
            let a_s = zeta.vertex_labels[self.vidx(e.src)];
            let a_t = zeta.vertex_labels[self.vidx(e.tgt)];
            let gamma = zeta.edge_labels[pos];
            let h = cfg.edge_labels[pos];
            edge_labels.push(g.op(g.op(g.op(g.invert(a_s), h), self.cm.t(gamma)), a_t));
        }
        let mut face_labels = Vec::with_capacity(cfg.face_labels.len());
        for (fpos, f) in self.complex.faces.iter().enumerate() {
            let (_, v1) = self
                .complex
                .path_endpoints(&f.source)
                .expect("validated face");
            let a1 = zeta.vertex_labels[self.vidx(v1)];
            let gs = self.gamma_path(cfg, zeta, &f.source);
            let gt = self.gamma_path(cfg, zeta, &f.target);
            let h = &self.cm.h;
            let inner = h.op(h.op(h.invert(gs), cfg.face_labels[fpos]), gt);
            face_labels.push(self.cm.act(g.invert(a1), inner));
        }
        FlatConfig {
            edge_labels,
            face_labels,
        }
    }

    /// Composition law: `apply(outer) ∘ apply(inner) = apply(compose(inner, outer))`,
    /// with `a''_v = a_v a'_v` and `γ''_e = γ_e (a_{t(e)} ▷ γ'_e)` where
    /// `(a, γ)` is the inner and `(a', γ')` the outer transform.
    pub fn compose_gauge(&self, inner: &GaugeTransform, outer: &GaugeTransform) -> GaugeTransform {
        let g = &self.cm.g;
        let h = &self.cm.h;
        let vertex_labels = inner
            .vertex_labels
            .iter()
            .zip(outer.vertex_labels.iter())
            .map(|(&a, &ap)| g.op(a, ap))
            .collect();
        let edge_labels = self
            .complex
            .edges
            .iter()
            .enumerate()
            .map(|(pos, e)| {
                let a_t = inner.vertex_labels[self.vidx(e.tgt)];
                h.op(
                    inner.edge_labels[pos],
                    self.cm.act(a_t, outer.edge_labels[pos]),
                )
            })
            .collect();
        GaugeTransform {
            vertex_labels,
            edge_labels,
        }
    }

    /// Inverse transform: `apply(inverse(ζ)) ∘ apply(ζ) = id`.
    pub fn invert_gauge(&self, zeta: &GaugeTransform) -> GaugeTransform {
        let g = &self.cm.g;
        let h = &self.cm.h;
        let vertex_labels: Vec<GElem> = zeta.vertex_labels.iter().map(|&a| g.invert(a)).collect();
        let edge_labels = self
            .complex
            .edges
            .iter()
            .enumerate()
            .map(|(pos, e)| {
                let a_t = zeta.vertex_labels[self.vidx(e.tgt)];
                self.cm.act(g.invert(a_t), h.invert(zeta.edge_labels[pos]))
            })
            .collect();
        GaugeTransform {
            vertex_labels,
            edge_labels,
        }
    }

    /// Secondary gauge action on a transform:
    /// `a'_v = a_v t(m_v)`, `γ'_e = m_{s(e)}^{-1} γ_e m_{t(e)}`.
    pub fn secondary_apply(&self, zeta: &GaugeTransform, m: &SecondaryGauge) -> GaugeTransform {
        let g = &self.cm.g;
        let h = &self.cm.h;
        let vertex_labels = zeta
            .vertex_labels
            .iter()
            .zip(m.vertex_labels.iter())
            .map(|(&a, &mv)| g.op(a, self.cm.t(mv)))
            .collect();
        let edge_labels = self
            .complex
            .edges
            .iter()
            .enumerate()
            .map(|(pos, e)| {
                let ms = m.vertex_labels[self.vidx(e.src)];
                let mt = m.vertex_labels[self.vidx(e.tgt)];
                h.op(h.op(h.invert(ms), zeta.edge_labels[pos]), mt)
            })
            .collect();
        GaugeTransform {
            vertex_labels,
            edge_labels,
        }
    }

    /// All `|G|^{V} |H|^{E}` gauge transforms, lexicographically.
    pub fn all_gauge_transforms(&self) -> Vec<GaugeTransform> {
        let nv = self.complex.vertices.len();
        let ne = self.complex.edges.len();
        let ng = self.cm.g.order();
        let nh = self.cm.h.order();
        let total = ng.pow(nv as u32) * nh.pow(ne as u32);
        (0..total)
            .map(|mut k| {
                let mut edge_labels = vec![0usize; ne];
                for slot in (0..ne).rev() {
                    edge_labels[slot] = k % nh;
                    k /= nh;
                }
                let mut vertex_labels = vec![0usize; nv];
                for slot in (0..nv).rev() {
                    vertex_labels[slot] = k % ng;
                    k /= ng;
                }
                GaugeTransform {
                    vertex_labels,
                    edge_labels,
                }
            })
            .collect()
    }

    /// Elementary generators: one non-trivial vertex label or one
    /// non-trivial edge label at a time.
    pub fn gauge_generators(&self) -> Vec<GaugeTransform> {
        let mut gens = Vec::new();
        for v in 0..self.complex.vertices.len() {
            for a in self.cm.g.elements() {
                if a == self.cm.g.identity {
                    continue;
                }
                let mut z = self.trivial_gauge();
                z.vertex_labels[v] = a;
                gens.push(z);
            }
        }
        for e in 0..self.complex.edges.len() {
            for y in self.cm.h.elements() {
                if y == self.cm.h.identity {
                    continue;
                }
                let mut z = self.trivial_gauge();
                z.edge_labels[e] = y;
                gens.push(z);
            }
        }
        gens
    }

    /// Orbit partition of the flat set under the gauge action, by closure
    /// under elementary generators. Returns `(orbit index per config,
    /// canonical representatives)`; representatives are the minimal configs.
    pub fn gauge_orbits(&self, flats: &[FlatConfig]) -> (Vec<usize>, Vec<FlatConfig>) {
        let index: HashMap<&FlatConfig, usize> =
            flats.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let gens = self.gauge_generators();
        let mut orbit = vec![usize::MAX; flats.len()];
        let mut reps = Vec::new();
        for start in 0..flats.len() {
            if orbit[start] != usize::MAX {
                continue;
            }
            let label = reps.len();
            let mut queue = VecDeque::from([start]);
            orbit[start] = label;
            let mut min_cfg = flats[start].clone();
            while let Some(cur) = queue.pop_front() {
                if flats[cur] < min_cfg {
                    min_cfg = flats[cur].clone();
                }
                for gtr in &gens {
                    let img = self.gauge_apply(&flats[cur], gtr);
                    let &i = index
                        .get(&img)
                        .expect("gauge action must preserve the flat set");
                    if orbit[i] == usize::MAX {
                        orbit[i] = label;
                        queue.push_back(i);
                    }
                }
            }
            reps.push(min_cfg);
        }
        (orbit, reps)
    }

    /// The gauge-averaging projector on the flat-config state space, as an
    /// exact rational matrix: `P[i][j] = #{ζ : ζ·c_j = c_i} / N` over all
    /// `N = |G|^V |H|^E` transforms.
    pub fn invariant_projector(&self, flats: &[FlatConfig]) -> Vec<Vec<BigRational>> {
        let n = flats.len();
        let index: HashMap<&FlatConfig, usize> =
            flats.iter().enumerate().map(|(i, c)| (c, i)).collect();
        let transforms = self.all_gauge_transforms();
        let total = BigInt::from(transforms.len());
        let mut counts = vec![vec![0i64; n]; n];
        for z in &transforms {
            for (j, c) in flats.iter().enumerate() {
                let img = self.gauge_apply(c, z);
                let &i = index.get(&img).expect("gauge preserves flatness");
                counts[i][j] += 1;
            }
        }
        counts
            .into_iter()
            .map(|row| {
                row.into_iter()
                    .map(|c| BigRational::new(BigInt::from(c), total.clone()))
                    .collect()
            })
            .collect()
    }
}

/// Exact idempotency test `P^2 = P` over the rationals.
pub fn projector_is_idempotent(p: &[Vec<BigRational>]) -> bool {
    let n = p.len();
    for i in 0..n {
        for j in 0..n {
            let mut acc = BigRational::zero();
            for k in 0..n {
                acc += &p[i][k] * &p[k][j];
            }
            if acc != p[i][j] {
                return false;
            }
        }
    }
    true
}

/// Exact rank of a rational matrix by Gaussian elimination.
pub fn rational_rank(m: &[Vec<BigRational>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut a: Vec<Vec<BigRational>> = m.to_vec();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let pivot = (row..rows).find(|&r| !a[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        a.swap(row, pivot);
        let p = a[row][col].clone();
        for c in col..cols {
            a[row][c] = &a[row][c] / &p;
        }
        for r in 0..rows {
            if r != row && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..cols {
                    let sub = &f * &a[row][c];
                    a[r][c] = &a[r][c] - sub;
                }
            }
        }
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    let _ = BigRational::one();
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex;
    use crate::library;

    fn flats(site: &Site) -> Vec<FlatConfig> {
        site.enumerate_flat(1 << 40).unwrap()
    }

    #[test]
    fn all_identity_decoration_is_flat_everywhere() {
        for lat in [
            complex::fundamental(),
            complex::square(),
            complex::tetrahedron(),
        ] {
            for cm in library::finite_library() {
                let site = Site::new(&lat, &cm);
                let cfg = FlatConfig {
                    edge_labels: vec![cm.g.identity; lat.edges.len()],
                    face_labels: vec![cm.h.identity; lat.faces.len()],
                };
                assert!(site.is_flat(&cfg), "{} / {}", lat.name, cm.name);
            }
        }
    }

    #[test]
    fn fundamental_face_z2_id_flat_set() {
        // Flatness on the loop face forces t(b) = 1; for t = id that means
        // b = 0, with h free: exactly {(0,0), (1,0)}.
        let lat = complex::fundamental();
        let cm = library::z2_id_z2();
        let site = Site::new(&lat, &cm);
        let fs = flats(&site);
        assert_eq!(fs.len(), 2);
        assert!(fs.iter().all(|c| c.face_labels[0] == 0));
    }

    #[test]
    fn fundamental_face_z2_zero_all_flat() {
        // t = 0 makes the loop-face constraint vacuous: all 4 decorations.
        let lat = complex::fundamental();
        let cm = library::z2_zero_z2();
        let site = Site::new(&lat, &cm);
        assert_eq!(flats(&site).len(), 4);
    }

    #[test]
    fn enumerate_flat_matches_brute_force_oracle() {
        // Independent exhaustive scan over the raw decoration space.
        for lat in [complex::fundamental(), complex::square(), complex::theta()] {
            for cm in library::finite_library() {
                let site = Site::new(&lat, &cm);
                let mut fast = flats(&site);
                fast.sort();
                let slow = site.brute_force_flat();
                assert_eq!(fast, slow, "{} / {}", lat.name, cm.name);
            }
        }
    }

    #[test]
    fn theta_z3_style_count_matches_oracle() {
        // Two-face lattice with Z3 -> Z3 (t = id): count against the scan.
        let g = crate::algebra::FiniteGroup::cyclic(3);
        let h = g.clone();
        let cm = CrossedModule::new(
            "z3-id-z3",
            g,
            h,
            (0..3).collect(),
            vec![(0..3).collect::<Vec<_>>(); 3],
        )
        .unwrap();
        let lat = complex::theta();
        let site = Site::new(&lat, &cm);
        let mut fast = flats(&site);
        fast.sort();
        assert_eq!(fast, site.brute_force_flat());
    }

    #[test]
    fn budget_is_enforced() {
        let lat = complex::square();
        let cm = library::inn_s3();
        let site = Site::new(&lat, &cm);
        assert!(matches!(
            site.enumerate_flat(10),
            Err(CoreError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn trivial_gauge_acts_as_identity() {
        for lat in [
            complex::fundamental(),
            complex::square(),
            complex::tetrahedron(),
        ] {
            let cm = library::inn_s3();
            let site = Site::new(&lat, &cm);
            let cfg = FlatConfig {
                edge_labels: (0..lat.edges.len()).map(|k| k % 6).collect(),
                face_labels: vec![cm.h.identity; lat.faces.len()],
            };
            assert_eq!(site.gauge_apply(&cfg, &site.trivial_gauge()), cfg);
        }
    }

    #[test]
    fn pure_vertex_gauge_on_identity_config() {
        // All-identity configuration, vertex-only gauge: edges become
        // a_{src}^{-1} a_{tgt} and faces stay at the unit label.
        let lat = complex::square();
        let cm = library::inn_s3();
        let site = Site::new(&lat, &cm);
        let cfg = FlatConfig {
            edge_labels: vec![cm.g.identity; lat.edges.len()],
            face_labels: vec![cm.h.identity; lat.faces.len()],
        };
        let mut zeta = site.trivial_gauge();
        zeta.vertex_labels = vec![3, 1, 4, 5];
        let out = site.gauge_apply(&cfg, &zeta);
        for (pos, e) in lat.edges.iter().enumerate() {
            let a_s = zeta.vertex_labels[site.vidx(e.src)];
            let a_t = zeta.vertex_labels[site.vidx(e.tgt)];
            assert_eq!(out.edge_labels[pos], cm.g.op(cm.g.invert(a_s), a_t));
        }
        assert!(out.face_labels.iter().all(|&b| b == cm.h.identity));
        assert!(site.is_flat(&out));
    }

    #[test]
    fn gauge_action_preserves_flatness_exhaustively() {
        for lat in [complex::fundamental(), complex::square(), complex::theta()] {
            for cm in [
                library::z2_id_z2(),
                library::z2_zero_z2(),
                library::z4_x2_z4(),
            ] {
                let site = Site::new(&lat, &cm);
                let fs = flats(&site);
                for z in site.all_gauge_transforms() {
                    for c in &fs {
                        assert!(
                            site.is_flat(&site.gauge_apply(c, &z)),
                            "{} / {}",
                            lat.name,
                            cm.name
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gauge_action_preserves_flatness_tetrahedron_inn_s3_sampled() {
        use rand::{Rng, SeedableRng};
        let lat = complex::tetrahedron();
        let cm = library::inn_s3();
        let site = Site::new(&lat, &cm);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        // Random flat configs: free edges, faces forced by fake-flatness
        // (t = id so the fibre is a single label), then require 2-flatness.
        let mut tried = 0;
        let mut checked = 0;
        while checked < 40 && tried < 5000 {
            tried += 1;
            let edge_labels: Vec<_> = (0..6).map(|_| rng.gen_range(0..6)).collect();
            let mut cfg = FlatConfig {
                edge_labels,
                face_labels: vec![0; 4],
            };
            for (fpos, f) in lat.faces.iter().enumerate() {
                let hs = site.path_holonomy(&cfg, &f.source);
                let ht = site.path_holonomy(&cfg, &f.target);
                cfg.face_labels[fpos] = cm.g.op(cm.g.invert(hs), ht); // t = id
            }
            if !site.is_flat(&cfg) {
                continue;
            }
            checked += 1;
            let zeta = GaugeTransform {
                vertex_labels: (0..4).map(|_| rng.gen_range(0..6)).collect(),
                edge_labels: (0..6).map(|_| rng.gen_range(0..6)).collect(),
            };
            assert!(site.is_flat(&site.gauge_apply(&cfg, &zeta)));
        }
        assert!(checked >= 40);
    }

    #[test]
    fn gauge_composition_law_closes() {
        // apply(outer) ∘ apply(inner) = apply(compose(inner, outer)),
        // exhaustively over a small 2-group and all flat configs.
        let lat = complex::square();
        for cm in [library::z2_id_z2(), library::z2_zero_z2()] {
            let site = Site::new(&lat, &cm);
            let fs = flats(&site);
            let all = site.all_gauge_transforms();
            for inner in &all {
                for outer in &all {
                    let combined = site.compose_gauge(inner, outer);
                    for c in &fs {
                        let two_step = site.gauge_apply(&site.gauge_apply(c, inner), outer);
                        assert_eq!(two_step, site.gauge_apply(c, &combined));
                    }
                }
            }
        }
    }

    #[test]
    fn gauge_composition_law_inn_s3_sampled() {
        use rand::{Rng, SeedableRng};
        let lat = complex::fundamental();
        let cm = library::inn_s3();
        let site = Site::new(&lat, &cm);
        let fs = flats(&site);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let inner = GaugeTransform {
                vertex_labels: vec![rng.gen_range(0..6)],
                edge_labels: vec![rng.gen_range(0..6)],
            };
            let outer = GaugeTransform {
                vertex_labels: vec![rng.gen_range(0..6)],
                edge_labels: vec![rng.gen_range(0..6)],
            };
            let combined = site.compose_gauge(&inner, &outer);
            for c in &fs {
                let two_step = site.gauge_apply(&site.gauge_apply(c, &inner), &outer);
                assert_eq!(two_step, site.gauge_apply(c, &combined));
            }
        }
    }

    #[test]
    fn gauge_inverse_undoes_the_action() {
        let lat = complex::theta();
        let cm = library::inn_s3();
        let site = Site::new(&lat, &cm);
        let fs = flats(&site);
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let zeta = GaugeTransform {
                vertex_labels: vec![rng.gen_range(0..6)],
                edge_labels: (0..3).map(|_| rng.gen_range(0..6)).collect(),
            };
            let inv = site.invert_gauge(&zeta);
            for c in fs.iter().take(24) {
                assert_eq!(site.gauge_apply(&site.gauge_apply(c, &zeta), &inv), *c);
            }
        }
    }

    #[test]
    fn secondary_triviality_and_orbit_size() {
        let lat = complex::fundamental();
        let cm = library::z2_id_z2();
        let site = Site::new(&lat, &cm);
        let zeta = GaugeTransform {
            vertex_labels: vec![1],
            edge_labels: vec![1],
        };
        // m = identity leaves the transform alone.
        let m = SecondaryGauge {
            vertex_labels: vec![0],
        };
        assert_eq!(site.secondary_apply(&zeta, &m), zeta);
        // t injective: the orbit map m -> ζ' is injective, so the orbit has
        // |H|^{V} elements.
        let mut orbit = std::collections::HashSet::new();
        for mv in cm.h.elements() {
            orbit.insert(site.secondary_apply(
                &zeta,
                &SecondaryGauge {
                    vertex_labels: vec![mv],
                },
            ));
        }
        assert_eq!(orbit.len(), cm.h.order());
    }

    #[test]
    fn secondary_equivalents_act_identically_on_abelian_library() {
        // For the trivial-action library modules, secondary-equivalent
        // transforms act identically on every flat configuration.
        let lat = complex::square();
        for cm in [
            library::z2_id_z2(),
            library::z2_zero_z2(),
            library::z4_x2_z4(),
        ] {
            let site = Site::new(&lat, &cm);
            let fs = flats(&site);
            let nh = cm.h.order();
            for z in site.all_gauge_transforms().into_iter().step_by(7) {
                for m0 in 0..nh {
                    for m1 in 0..nh {
                        let m = SecondaryGauge {
                            vertex_labels: vec![m0, m1, m1, m0],
                        };
                        let zp = site.secondary_apply(&z, &m);
                        for c in &fs {
                            assert_eq!(site.gauge_apply(c, &z), site.gauge_apply(c, &zp));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn secondary_action_twists_by_inner_factors_on_nonabelian_fibres() {
        // For Inn(S3) the vertex-anchored modification composes the action
        // with a non-central inner twist, so the two transforms act
        // differently on flat configurations; this pins the witness.
        let lat = complex::fundamental();
        let cm = library::inn_s3();
        let site = Site::new(&lat, &cm);
        let fs = flats(&site);
        let zeta = site.trivial_gauge();
        let m = SecondaryGauge {
            vertex_labels: vec![4], // a 3-cycle
        };
        let zp = site.secondary_apply(&zeta, &m);
        let differs = fs
            .iter()
            .any(|c| site.gauge_apply(c, &zeta) != site.gauge_apply(c, &zp));
        assert!(differs);
    }

    #[test]
    fn orbit_counts_fundamental_face() {
        // (Z2 -> 0 -> Z2): the action is trivial on all four flat configs.
        let lat = complex::fundamental();
        let cm = library::z2_zero_z2();
        let site = Site::new(&lat, &cm);
        let fs = flats(&site);
        let (_, reps) = site.gauge_orbits(&fs);
        assert_eq!(reps.len(), 4);

        // (Z2 -> id -> Z2): the edge-label shift h -> h + t(γ) identifies the
        // two flat configs.
        let cm = library::z2_id_z2();
        let site = Site::new(&lat, &cm);
        let fs = flats(&site);
        let (_, reps) = site.gauge_orbits(&fs);
        assert_eq!(reps.len(), 1);

        // Trivial 2-group: a single orbit.
        let cm = library::trivial();
        let site = Site::new(&lat, &cm);
        let fs = flats(&site);
        let (_, reps) = site.gauge_orbits(&fs);
        assert_eq!(reps.len(), 1);
    }

    #[test]
    fn orbits_agree_with_full_action_scan() {
        // Generator closure against the orbit partition induced by scanning
        // every gauge transform.
        let lat = complex::fundamental();
        for cm in library::finite_library() {
            let site = Site::new(&lat, &cm);
            let fs = flats(&site);
            let (orbit, _) = site.gauge_orbits(&fs);
            let index: HashMap<&FlatConfig, usize> =
                fs.iter().enumerate().map(|(i, c)| (c, i)).collect();
            for z in site.all_gauge_transforms() {
                for (j, c) in fs.iter().enumerate() {
                    let i = index[&site.gauge_apply(c, &z)];
                    assert_eq!(orbit[i], orbit[j], "{}", cm.name);
                }
            }
        }
    }

    #[test]
    fn projector_idempotent_and_rank_counts_orbits() {
        let lat = complex::fundamental();
        for cm in library::finite_library() {
            let site = Site::new(&lat, &cm);
            let fs = flats(&site);
            let p = site.invariant_projector(&fs);
            assert!(projector_is_idempotent(&p), "{}", cm.name);
            let (_, reps) = site.gauge_orbits(&fs);
            assert_eq!(rational_rank(&p), reps.len(), "{}", cm.name);
        }
    }

    #[test]
    fn projector_fixes_invariant_states_and_characteristic_functions() {
        use num_traits::ToPrimitive;
        let lat = complex::fundamental();
        let cm = library::z2_zero_z2();
        let site = Site::new(&lat, &cm);
        let fs = flats(&site);
        let p = site.invariant_projector(&fs);
        let n = fs.len();
        // Already-invariant state: the all-ones vector.
        for i in 0..n {
            let row_sum: f64 = (0..n).map(|j| p[i][j].to_f64().unwrap()).sum();
            assert!((row_sum - 1.0).abs() < 1e-12);
        }
        // Characteristic function of one config maps to the normalized
        // characteristic function of its orbit.
        let (orbit, _) = site.gauge_orbits(&fs);
        for j in 0..n {
            let orbit_size = orbit.iter().filter(|&&o| o == orbit[j]).count();
            for i in 0..n {
                let expect = if orbit[i] == orbit[j] {
                    1.0 / orbit_size as f64
                } else {
                    0.0
                };
                assert!((p[i][j].to_f64().unwrap() - expect).abs() < 1e-12);
            }
        }
    }
}
