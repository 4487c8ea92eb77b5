//! Finite-group arithmetic and dense complex-matrix kernels.
//!
//! Finite groups are stored as full Cayley tables; every axiom check is an
//! exhaustive scan. Matrix data is double-precision complex throughout, with
//! one global tensor-leg convention: in a Kronecker product the **leftmost
//! factor is the most significant index**, i.e. basis vector `e_i ⊗ e_j` of
//! `C^m ⊗ C^n` sits at flat index `i * n + j`.

use crate::error::CoreError;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use std::fmt;

pub type GElem = usize;

/// A finite group presented by its full multiplication table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiniteGroup {
    pub name: String,
    /// `mul[a][b]` is the index of the product `a * b`.
    pub mul: Vec<Vec<GElem>>,
    /// `inv[a]` is the index of `a^{-1}`.
    pub inv: Vec<GElem>,
    /// Index of the identity element.
    pub identity: GElem,
}

/// A single failed axiom instance, with the witnessing elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum AxiomFailure {
    Closure { a: GElem, b: GElem, got: usize },
    Associativity { a: GElem, b: GElem, c: GElem },
    Identity { a: GElem },
    Inverse { a: GElem },
    LatinRow { row: GElem },
    LatinColumn { col: GElem },
}

/// Outcome of an exhaustive axiom scan.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct AxiomReport {
    pub failures: Vec<AxiomFailure>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "pass")
        } else {
            write!(f, "fail ({} witnesses)", self.failures.len())
        }
    }
}

impl FiniteGroup {
    /// Builds a group from a raw multiplication table. The table shape and
    /// index ranges are validated up front; identity and inverses must exist
    /// or the table is rejected. Axioms beyond that are checked separately by
    /// [`check_group_axioms`].
    pub fn from_mul_table(name: &str, mul: Vec<Vec<GElem>>) -> Result<Self, CoreError> {
        let n = mul.len();
        if n == 0 {
            return Err(CoreError::MalformedTable("empty table".into()));
        }
        for (i, row) in mul.iter().enumerate() {
            if row.len() != n {
                return Err(CoreError::MalformedTable(format!(
                    "row {i} has length {} but order is {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(CoreError::MalformedTable(format!(
                        "entry ({i},{j}) = {v} out of range 0..{n}"
                    )));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a))
            .ok_or_else(|| CoreError::MalformedTable("no identity element".into()))?;
        let mut inv = vec![0; n];
        for a in 0..n {
            inv[a] = (0..n)
                .find(|&b| mul[a][b] == identity && mul[b][a] == identity)
                .ok_or_else(|| CoreError::MalformedTable(format!("element {a} has no inverse")))?;
        }
        Ok(FiniteGroup {
            name: name.to_string(),
            mul,
            inv,
            identity,
        })
    }

    /// Builds a group from a list of permutations (one image list per
    /// element), closed under composition. `perms[k]` maps point `p` to
    /// `perms[k][p]`; composition is `(a * b)(p) = a(b(p))`.
    pub fn from_permutations(name: &str, perms: &[Vec<usize>]) -> Result<Self, CoreError> {
        let n = perms.len();
        if n == 0 {
            return Err(CoreError::MalformedTable("no permutations given".into()));
        }
        let deg = perms[0].len();
        for (i, p) in perms.iter().enumerate() {
            if p.len() != deg {
                return Err(CoreError::MalformedTable(format!(
                    "permutation {i} has degree {} but expected {deg}",
                    p.len()
                )));
            }
            let mut seen = vec![false; deg];
            for &img in p {
                if img >= deg || seen[img] {
                    return Err(CoreError::MalformedTable(format!(
                        "permutation {i} is not a bijection"
                    )));
                }
                seen[img] = true;
            }
        }
        let compose =
            |a: &[usize], b: &[usize]| -> Vec<usize> { (0..deg).map(|p| a[b[p]]).collect() };
        let index_of = |q: &[usize]| perms.iter().position(|p| p[..] == q[..]);
        let mut mul = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let prod = compose(&perms[i], &perms[j]);
                mul[i][j] = index_of(&prod).ok_or_else(|| {
                    CoreError::MalformedTable(format!(
                        "element list is not closed: product of {i} and {j} is missing"
                    ))
                })?;
            }
        }
        Self::from_mul_table(name, mul)
    }

    /// Cyclic group of order `n` (addition mod `n`).
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n)
            .map(|a| (0..n).map(|b| (a + b) % n).collect())
            .collect();
        Self::from_mul_table(&format!("Z{n}"), mul).expect("cyclic table is a group")
    }

    /// The symmetric group on three points, elements listed in a fixed order.
    pub fn symmetric3() -> Self {
        let perms: Vec<Vec<usize>> = vec![
            vec![0, 1, 2], // e
            vec![1, 0, 2], // (01)
            vec![0, 2, 1], // (12)
            vec![2, 1, 0], // (02)
            vec![1, 2, 0], // (012)
            vec![2, 0, 1], // (021)
        ];
        Self::from_permutations("S3", &perms).expect("S3 closes")
    }

    pub fn order(&self) -> usize {
        self.mul.len()
    }

    #[inline]
    pub fn op(&self, a: GElem, b: GElem) -> GElem {
        self.mul[a][b]
    }

    #[inline]
    pub fn invert(&self, a: GElem) -> GElem {
        self.inv[a]
    }

    pub fn elements(&self) -> std::ops::Range<GElem> {
        0..self.order()
    }

    /// Conjugation `a b a^{-1}`.
    pub fn conj(&self, a: GElem, b: GElem) -> GElem {
        self.op(self.op(a, b), self.inv[a])
    }

    /// Product of a word of (element, exponent-sign) letters.
    pub fn word(&self, letters: impl IntoIterator<Item = (GElem, i8)>) -> GElem {
        let mut acc = self.identity;
        for (g, s) in letters {
            let g = if s >= 0 { g } else { self.inv[g] };
            acc = self.op(acc, g);
        }
        acc
    }
}

/// Exhaustive group-axiom scan: Latin-square shape, associativity over all
/// triples, identity and inverse laws. Table shape is assumed validated by
/// the constructor; a raw table can be scanned via
/// [`check_raw_table_axioms`].
pub fn check_group_axioms(g: &FiniteGroup) -> AxiomReport {
    check_raw_table_axioms(&g.mul)
}

/// Same scan on a bare table (used for mutated-table witnesses). The table
/// must be square with in-range entries; that is rejected before checking.
pub fn check_raw_table_axioms(mul: &[Vec<GElem>]) -> AxiomReport {
    let n = mul.len();
    let mut failures = Vec::new();
    for a in 0..n {
        let mut seen = vec![false; n];
        for b in 0..n {
            if seen[mul[a][b]] {
                failures.push(AxiomFailure::LatinRow { row: a });
                break;
            }
            seen[mul[a][b]] = true;
        }
    }
    for b in 0..n {
        let mut seen = vec![false; n];
        for a in 0..n {
            if seen[mul[a][b]] {
                failures.push(AxiomFailure::LatinColumn { col: b });
                break;
            }
            seen[mul[a][b]] = true;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    failures.push(AxiomFailure::Associativity { a, b, c });
                }
            }
        }
    }
    let identity = (0..n).find(|&e| (0..n).all(|a| mul[e][a] == a && mul[a][e] == a));
    match identity {
        None => {
            for a in 0..n {
                failures.push(AxiomFailure::Identity { a });
                break;
            }
        }
        Some(e) => {
            for a in 0..n {
                if !(0..n).any(|b| mul[a][b] == e && mul[b][a] == e) {
                    failures.push(AxiomFailure::Inverse { a });
                }
            }
        }
    }
    AxiomReport { failures }
}

// ---------------------------------------------------------------------------
// Dense complex matrices.
// ---------------------------------------------------------------------------

/// Dense row-major complex matrix. Small and unoptimized on purpose; the
/// largest objects in play are tensor cubes of 4x4 blocks (64 x 64).
#[derive(Debug, Clone, PartialEq)]
pub struct CMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Complex64>,
}

impl CMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        CMat {
            rows,
            cols,
            data: vec![Complex64::new(0.0, 0.0); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self, CoreError> {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        if rows.iter().any(|x| x.len() != c) {
            return Err(CoreError::ShapeMismatch("ragged rows".into()));
        }
        Ok(CMat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_real(rows: Vec<Vec<f64>>) -> Result<Self, CoreError> {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(|x| Complex64::new(x, 0.0)).collect())
                .collect(),
        )
    }

    pub fn mul(&self, other: &CMat) -> Result<CMat, CoreError> {
        if self.cols != other.rows {
            return Err(CoreError::ShapeMismatch(format!(
                "({}x{}) * ({}x{})",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = CMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += a * other[(k, j)];
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &CMat) -> Result<CMat, CoreError> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &CMat) -> Result<CMat, CoreError> {
        self.zip(other, |a, b| a - b)
    }

    fn zip(
        &self,
        other: &CMat,
        f: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<CMat, CoreError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(CoreError::ShapeMismatch(format!(
                "({}x{}) vs ({}x{})",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(CMat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(other.data.iter())
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn scale(&self, s: Complex64) -> CMat {
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| a * s).collect(),
        }
    }

    /// Commutator `[self, other]`.
    pub fn commutator(&self, other: &CMat) -> Result<CMat, CoreError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Kronecker product with the leftmost factor most significant.
    pub fn kron(&self, other: &CMat) -> CMat {
        let mut out = CMat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self[(i, j)];
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out[(i * other.rows + k, j * other.cols + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> CMat {
        let mut out = CMat::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    pub fn conjugate(&self) -> CMat {
        CMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.conj()).collect(),
        }
    }

    pub fn dagger(&self) -> CMat {
        self.transpose().conjugate()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.data.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|a| a.norm()).fold(0.0, f64::max)
    }

    /// Gaussian-elimination inverse. Fails on singular input.
    pub fn inverse(&self) -> Result<CMat, CoreError> {
        if self.rows != self.cols {
            return Err(CoreError::ShapeMismatch("inverse of non-square".into()));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = CMat::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .max_by(|&i, &j| a[(i, col)].norm().partial_cmp(&a[(j, col)].norm()).unwrap())
                .unwrap();
            if a[(pivot, col)].norm() < 1e-14 {
                return Err(CoreError::ShapeMismatch("singular matrix".into()));
            }
            for j in 0..n {
                a.data.swap(col * n + j, pivot * n + j);
                inv.data.swap(col * n + j, pivot * n + j);
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] /= p;
                inv[(col, j)] /= p;
            }
            for i in 0..n {
                if i == col {
                    continue;
                }
                let f = a[(i, col)];
                if f.norm() == 0.0 {
                    continue;
                }
                for j in 0..n {
                    let acj = a[(col, j)];
                    let icj = inv[(col, j)];
                    a[(i, j)] -= f * acj;
                    inv[(i, j)] -= f * icj;
                }
            }
        }
        Ok(inv)
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[Complex64]) -> Result<Vec<Complex64>, CoreError> {
        if v.len() != self.cols {
            return Err(CoreError::ShapeMismatch(format!(
                "matrix cols {} vs vector length {}",
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| (0..self.cols).map(|j| self[(i, j)] * v[j]).sum())
            .collect())
    }
}

impl std::ops::Index<(usize, usize)> for CMat {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for CMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.cols + j]
    }
}

/// Action of a `d^2 x d^2` matrix on a vector in the tensor-product space,
/// under the global lexicographic leg ordering (`e_i ⊗ e_j` at `i*d2 + j`).
pub fn tensor_apply(m: &CMat, v: &[Complex64]) -> Result<Vec<Complex64>, CoreError> {
    m.apply(v)
}

/// Flat index of `e_i ⊗ e_j` in `C^{d1} ⊗ C^{d2}`.
#[inline]
pub fn tensor_index(i: usize, j: usize, d2: usize) -> usize {
    i * d2 + j
}

/// The swap operator on `C^d ⊗ C^d`.
pub fn swap_operator(d: usize) -> CMat {
    let mut p = CMat::zeros(d * d, d * d);
    for i in 0..d {
        for j in 0..d {
            p[(tensor_index(j, i, d), tensor_index(i, j, d))] = Complex64::new(1.0, 0.0);
        }
    }
    p
}

/// Embeds a `d^2 x d^2` two-leg operator into legs `(a, b)` of a three-leg
/// space `C^d ⊗ C^d ⊗ C^d` (legs numbered 0, 1, 2).
pub fn embed_two_leg(m: &CMat, a: usize, b: usize, d: usize) -> CMat {
    assert!(a < 3 && b < 3 && a != b);
    assert_eq!(m.rows, d * d);
    let n = d * d * d;
    let mut out = CMat::zeros(n, n);
    let idx = |x: [usize; 3]| x[0] * d * d + x[1] * d + x[2];
    for r0 in 0..d {
        for r1 in 0..d {
            for r2 in 0..d {
                let r = [r0, r1, r2];
                for ma in 0..d {
                    for mb in 0..d {
                        let val = m[(tensor_index(r[a], r[b], d), tensor_index(ma, mb, d))];
                        if val == Complex64::new(0.0, 0.0) {
                            continue;
                        }
                        let mut cidx = r;
                        cidx[a] = ma;
                        cidx[b] = mb;
                        out[(idx(r), idx(cidx))] += val;
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Matrix Lie algebras and representations.
// ---------------------------------------------------------------------------

/// A complex matrix Lie algebra given by a basis, with structure constants
/// computed against that basis.
#[derive(Debug, Clone)]
pub struct MatrixLieAlgebra {
    pub name: String,
    pub dim: usize,
    pub matrix_dim: usize,
    pub basis: Vec<CMat>,
    /// `structure[i][j][k]` is the coefficient of basis `k` in `[X_i, X_j]`.
    pub structure: Vec<Vec<Vec<Complex64>>>,
    /// Largest residual of re-expanding basis commutators; a closure witness.
    pub closure_residual: f64,
}

impl MatrixLieAlgebra {
    /// Builds the algebra from a basis, solving the (possibly non-orthogonal)
    /// Gram system to express each commutator in the basis. Rejects bases
    /// whose commutators do not close to within `1e-12`.
    pub fn from_basis(name: &str, basis: Vec<CMat>) -> Result<Self, CoreError> {
        let dim = basis.len();
        if dim == 0 {
            return Err(CoreError::DimensionMismatch("empty basis".into()));
        }
        let d = basis[0].rows;
        for b in &basis {
            if b.rows != d || b.cols != d {
                return Err(CoreError::DimensionMismatch(
                    "basis matrices differ in size".into(),
                ));
            }
        }
        // Gram matrix of the trace pairing <A,B> = tr(A^† B).
        let mut gram = CMat::zeros(dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                gram[(i, j)] = basis[i].dagger().mul(&basis[j])?.trace();
            }
        }
        let gram_inv = gram
            .inverse()
            .map_err(|_| CoreError::DimensionMismatch("basis is linearly dependent".into()))?;
        let coords = |m: &CMat| -> Result<Vec<Complex64>, CoreError> {
            let mut rhs = vec![Complex64::new(0.0, 0.0); dim];
            for (i, b) in basis.iter().enumerate() {
                rhs[i] = b.dagger().mul(m)?.trace();
            }
            gram_inv.apply(&rhs)
        };
        let mut structure = vec![vec![vec![Complex64::new(0.0, 0.0); dim]; dim]; dim];
        let mut worst: f64 = 0.0;
        for i in 0..dim {
            for j in 0..dim {
                let comm = basis[i].commutator(&basis[j])?;
                let c = coords(&comm)?;
                // Re-expand and measure the closure residual.
                let mut rebuilt = CMat::zeros(d, d);
                for (k, bk) in basis.iter().enumerate() {
                    rebuilt = rebuilt.add(&bk.scale(c[k]))?;
                }
                worst = worst.max(rebuilt.sub(&comm)?.max_abs());
                structure[i][j] = c;
            }
        }
        if worst > crate::TOL_CONSTRUCT {
            return Err(CoreError::DimensionMismatch(format!(
                "basis does not close under commutators (residual {worst:.3e})"
            )));
        }
        Ok(MatrixLieAlgebra {
            name: name.to_string(),
            dim,
            matrix_dim: d,
            basis,
            structure,
            closure_residual: worst,
        })
    }

    /// `sl2` with the standard basis `e, f, h`.
    pub fn sl2() -> Self {
        let e = CMat::from_real(vec![vec![0.0, 1.0], vec![0.0, 0.0]]).unwrap();
        let f = CMat::from_real(vec![vec![0.0, 0.0], vec![1.0, 0.0]]).unwrap();
        let h = CMat::from_real(vec![vec![1.0, 0.0], vec![0.0, -1.0]]).unwrap();
        Self::from_basis("sl2", vec![e, f, h]).expect("sl2 closes")
    }

    /// Abelian algebra of given dimension (diagonal matrix units).
    pub fn abelian(dim: usize) -> Self {
        let basis = (0..dim)
            .map(|i| {
                let mut m = CMat::zeros(dim, dim);
                m[(i, i)] = Complex64::new(1.0, 0.0);
                m
            })
            .collect();
        Self::from_basis(&format!("abelian{dim}"), basis).expect("abelian closes")
    }

    /// Bracket in coordinates via structure constants.
    pub fn bracket_coords(
        &self,
        a: &[Complex64],
        b: &[Complex64],
    ) -> Result<Vec<Complex64>, CoreError> {
        if a.len() != self.dim || b.len() != self.dim {
            return Err(CoreError::DimensionMismatch(format!(
                "coordinate vectors must have length {}",
                self.dim
            )));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for i in 0..self.dim {
            if a[i] == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in 0..self.dim {
                if b[j] == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for k in 0..self.dim {
                    out[k] += a[i] * b[j] * self.structure[i][j][k];
                }
            }
        }
        Ok(out)
    }

    /// Realizes a coordinate vector as a matrix.
    pub fn realize(&self, a: &[Complex64]) -> Result<CMat, CoreError> {
        if a.len() != self.dim {
            return Err(CoreError::DimensionMismatch(format!(
                "coordinate vector must have length {}",
                self.dim
            )));
        }
        let mut m = CMat::zeros(self.matrix_dim, self.matrix_dim);
        for (i, b) in self.basis.iter().enumerate() {
            m = m.add(&b.scale(a[i]))?;
        }
        Ok(m)
    }

    /// Max residual of antisymmetry of the structure constants.
    pub fn antisymmetry_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    worst = worst.max((self.structure[i][j][k] + self.structure[j][i][k]).norm());
                }
            }
        }
        worst
    }

    /// Max residual of the Jacobi identity over all basis triples, evaluated
    /// through the structure constants.
    pub fn jacobi_residual(&self) -> f64 {
        let mut worst: f64 = 0.0;
        let e = |i: usize| -> Vec<Complex64> {
            let mut v = vec![Complex64::new(0.0, 0.0); self.dim];
            v[i] = Complex64::new(1.0, 0.0);
            v
        };
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    let a = self
                        .bracket_coords(&e(i), &self.bracket_coords(&e(j), &e(k)).unwrap())
                        .unwrap();
                    let b = self
                        .bracket_coords(&e(j), &self.bracket_coords(&e(k), &e(i)).unwrap())
                        .unwrap();
                    let c = self
                        .bracket_coords(&e(k), &self.bracket_coords(&e(i), &e(j)).unwrap())
                        .unwrap();
                    for t in 0..self.dim {
                        worst = worst.max((a[t] + b[t] + c[t]).norm());
                    }
                }
            }
        }
        worst
    }
}

/// A matrix representation of a finite group (one matrix per element) or a
/// Lie algebra (one matrix per basis element).
#[derive(Debug, Clone)]
pub struct Representation {
    pub dim: usize,
    pub matrices: Vec<CMat>,
}

impl Representation {
    pub fn new(matrices: Vec<CMat>) -> Result<Self, CoreError> {
        let dim = matrices.first().map(|m| m.rows).unwrap_or(0);
        if matrices.iter().any(|m| m.rows != dim || m.cols != dim) {
            return Err(CoreError::DimensionMismatch(
                "representation matrices differ in size".into(),
            ));
        }
        Ok(Representation { dim, matrices })
    }

    /// Max residual of `rho(a b) = rho(a) rho(b)` over all pairs.
    pub fn group_homomorphism_residual(&self, g: &FiniteGroup) -> Result<f64, CoreError> {
        if self.matrices.len() != g.order() {
            return Err(CoreError::DimensionMismatch(
                "one matrix per group element required".into(),
            ));
        }
        let mut worst: f64 = 0.0;
        for a in g.elements() {
            for b in g.elements() {
                let lhs = &self.matrices[g.op(a, b)];
                let rhs = self.matrices[a].mul(&self.matrices[b])?;
                worst = worst.max(lhs.sub(&rhs)?.max_abs());
            }
        }
        Ok(worst)
    }

    /// Max residual of `rho([X_i, X_j]) = [rho(X_i), rho(X_j)]`.
    pub fn algebra_homomorphism_residual(&self, l: &MatrixLieAlgebra) -> Result<f64, CoreError> {
        if self.matrices.len() != l.dim {
            return Err(CoreError::DimensionMismatch(
                "one matrix per basis element required".into(),
            ));
        }
        let mut worst: f64 = 0.0;
        for i in 0..l.dim {
            for j in 0..l.dim {
                let lhs = self.matrices[i].commutator(&self.matrices[j])?;
                let mut rhs = CMat::zeros(self.dim, self.dim);
                for k in 0..l.dim {
                    rhs = rhs.add(&self.matrices[k].scale(l.structure[i][j][k]))?;
                }
                worst = worst.max(lhs.sub(&rhs)?.max_abs());
            }
        }
        Ok(worst)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn z2_table_passes() {
        let g = FiniteGroup::cyclic(2);
        assert!(check_group_axioms(&g).passed());
        assert_eq!(g.identity, 0);
        assert_eq!(g.invert(1), 1);
    }

    #[test]
    fn s3_exhaustive_axioms_pass() {
        // Oracle: brute force over all 6^3 triples inside the scan.
        let g = FiniteGroup::symmetric3();
        assert_eq!(g.order(), 6);
        assert!(check_group_axioms(&g).passed());
        // Non-abelian witness: (01)(12) != (12)(01).
        assert_ne!(g.op(1, 2), g.op(2, 1));
    }

    #[test]
    fn mutated_z4_fails_with_witness() {
        // Mutate one entry of the Z4 table and re-run the brute-force scan.
        let g = FiniteGroup::cyclic(4);
        let mut mul = g.mul.clone();
        mul[1][2] = 0; // should be 3
        let report = check_raw_table_axioms(&mul);
        assert!(!report.passed());
        assert!(report.failures.iter().any(|f| matches!(
            f,
            AxiomFailure::Associativity { .. } | AxiomFailure::LatinRow { .. }
        )));
    }

    #[test]
    fn out_of_range_table_rejected_before_checking() {
        let mul = vec![vec![0, 1], vec![1, 7]];
        assert!(matches!(
            FiniteGroup::from_mul_table("bad", mul),
            Err(CoreError::MalformedTable(_))
        ));
    }

    #[test]
    fn non_square_table_rejected() {
        let mul = vec![vec![0, 1], vec![1]];
        assert!(FiniteGroup::from_mul_table("bad", mul).is_err());
    }

    #[test]
    fn sl2_bracket_e_f_is_h() {
        // Oracle: matrix commutator of the standard basis.
        let l = MatrixLieAlgebra::sl2();
        let e = [c(1.0), c(0.0), c(0.0)];
        let f = [c(0.0), c(1.0), c(0.0)];
        let out = l.bracket_coords(&e, &f).unwrap();
        assert!((out[0].norm()) < 1e-12);
        assert!((out[1].norm()) < 1e-12);
        assert!((out[2] - c(1.0)).norm() < 1e-12);
        // Against the direct matrix commutator.
        let direct = l.basis[0].commutator(&l.basis[1]).unwrap();
        let rebuilt = l.realize(&out).unwrap();
        assert!(direct.sub(&rebuilt).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn bracket_of_element_with_itself_vanishes() {
        let l = MatrixLieAlgebra::sl2();
        let x = [c(0.3), c(-1.25), c(2.0)];
        let out = l.bracket_coords(&x, &x).unwrap();
        assert!(out.iter().all(|v| v.norm() < 1e-12));
    }

    #[test]
    fn abelian_brackets_vanish() {
        let l = MatrixLieAlgebra::abelian(3);
        let a = [c(1.0), c(2.0), c(3.0)];
        let b = [c(-1.0), c(0.5), c(0.0)];
        let out = l.bracket_coords(&a, &b).unwrap();
        assert!(out.iter().all(|v| v.norm() < 1e-12));
    }

    #[test]
    fn sl2_invariants() {
        let l = MatrixLieAlgebra::sl2();
        assert!(l.antisymmetry_residual() < 1e-12);
        assert!(l.jacobi_residual() < 1e-12);
    }

    #[test]
    fn bracket_dimension_mismatch_rejected() {
        let l = MatrixLieAlgebra::sl2();
        let short = [c(1.0)];
        assert!(l.bracket_coords(&short, &short).is_err());
    }

    #[test]
    fn tensor_apply_identity_and_swap() {
        let d = 2;
        let id = CMat::identity(d * d);
        let v = vec![c(1.0), c(2.0), c(3.0), c(4.0)];
        assert_eq!(tensor_apply(&id, &v).unwrap(), v);

        // swap on e1 ⊗ e2 gives e2 ⊗ e1 (0-indexed: e0 ⊗ e1 -> e1 ⊗ e0).
        let p = swap_operator(d);
        let mut e01 = vec![c(0.0); 4];
        e01[tensor_index(0, 1, d)] = c(1.0);
        let out = tensor_apply(&p, &e01).unwrap();
        assert!((out[tensor_index(1, 0, d)] - c(1.0)).norm() < 1e-15);
    }

    #[test]
    fn tensor_apply_shape_mismatch() {
        let id = CMat::identity(4);
        assert!(tensor_apply(&id, &[c(1.0); 3]).is_err());
    }

    #[test]
    fn kron_action_factorizes() {
        // (A ⊗ B)(u ⊗ v) = A u ⊗ B v, by direct Kronecker computation.
        let a = CMat::from_real(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = CMat::from_real(vec![vec![0.0, -1.0], vec![1.0, 0.5]]).unwrap();
        let u = vec![c(1.0), c(-2.0)];
        let v = vec![c(0.5), c(3.0)];
        let mut uv = vec![c(0.0); 4];
        for i in 0..2 {
            for j in 0..2 {
                uv[tensor_index(i, j, 2)] = u[i] * v[j];
            }
        }
        let lhs = tensor_apply(&a.kron(&b), &uv).unwrap();
        let au = a.apply(&u).unwrap();
        let bv = b.apply(&v).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((lhs[tensor_index(i, j, 2)] - au[i] * bv[j]).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn embed_two_leg_matches_explicit_kron() {
        let d = 2;
        let a = CMat::from_real(vec![vec![1.0, 2.0], vec![3.0, 4.0]]).unwrap();
        let b = CMat::from_real(vec![vec![0.0, 1.0], vec![-1.0, 2.0]]).unwrap();
        let m = a.kron(&b);
        // Legs (0,1): M ⊗ I.
        let e01 = embed_two_leg(&m, 0, 1, d);
        let direct = m.kron(&CMat::identity(d));
        assert!(e01.sub(&direct).unwrap().max_abs() < 1e-12);
        // Legs (1,2): I ⊗ M.
        let e12 = embed_two_leg(&m, 1, 2, d);
        let direct = CMat::identity(d).kron(&m);
        assert!(e12.sub(&direct).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn representation_homomorphism_checks() {
        // Sign representation of S3: rho(g) = sign(g) as 1x1 matrices.
        let g = FiniteGroup::symmetric3();
        let sign = |k: usize| if k == 0 || k >= 4 { 1.0 } else { -1.0 };
        let mats = (0..6)
            .map(|k| CMat::from_real(vec![vec![sign(k)]]).unwrap())
            .collect();
        let rep = Representation::new(mats).unwrap();
        assert!(rep.group_homomorphism_residual(&g).unwrap() < 1e-12);

        let l = MatrixLieAlgebra::sl2();
        let rep = Representation::new(l.basis.clone()).unwrap();
        assert!(rep.algebra_homomorphism_residual(&l).unwrap() < 1e-10);
    }
}
