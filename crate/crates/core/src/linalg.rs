//! Exact rational linear algebra: matrices, reduced echelon forms, kernels,
//! canonical subspaces, and strict-feasibility of homogeneous inequality
//! systems.  Everything is over `BigRational`; no rounding anywhere.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Q = BigRational;
pub type QVec = Vec<Q>;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(BigInt::from(n))
}

pub fn qr(n: i64, d: i64) -> Q {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vec_is_zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Scale a nonzero rational vector to the primitive integer vector pointing
/// the same way (coprime integer entries, direction preserved).
pub fn primitive_same_ray(v: &[Q]) -> QVec {
    let mut den = BigInt::one();
    for x in v {
        den = num::integer::lcm(den, x.denom().clone());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = num::integer::gcd(g, n.abs());
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|n| BigRational::from_integer(n / &g))
        .collect()
}

/// Primitive representative of the *line* through `v`: like
/// `primitive_same_ray` but with the first nonzero entry made positive.
/// Two covectors have equal `line_key` iff they are proportional.
pub fn line_key(v: &[Q]) -> QVec {
    let mut p = primitive_same_ray(v);
    if let Some(first) = p.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut p {
                *x = -x.clone();
            }
        }
    }
    p
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Q>,
}

impl std::fmt::Debug for QMat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "QMat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            writeln!(
                f,
                "  {:?}",
                self.row(r).iter().map(|x| x.to_string()).collect::<Vec<_>>()
            )?;
        }
        write!(f, "]")
    }
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat { rows, cols, data: vec![Q::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMat::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Q::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<QVec>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        QMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn row(&self, r: usize) -> &[Q] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<QVec> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = a * &other[(k, j)];
                    out[(i, j)] += t;
                }
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn mul_vec(&self, v: &[Q]) -> QVec {
        assert_eq!(self.cols, v.len());
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    /// Row covector times matrix.
    pub fn vec_mul(&self, v: &[Q]) -> QVec {
        assert_eq!(self.rows, v.len());
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| &v[i] * &self[(i, j)]).sum())
            .collect()
    }

    pub fn transpose(&self) -> QMat {
        let mut out = QMat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)].clone();
            }
        }
        out
    }

    pub fn vstack(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        QMat { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self[(i, c)].is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self[(r, c)].recip();
            for j in c..self.cols {
                let t = &self[(r, j)] * &inv;
                self[(r, j)] = t;
            }
            for i in 0..self.rows {
                if i != r && !self[(i, c)].is_zero() {
                    let f = self[(i, c)].clone();
                    for j in c..self.cols {
                        let t = &self[(i, j)] - &f * &self[(r, j)];
                        self[(i, j)] = t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of `{ x : self * x = 0 }`, as canonical RREF rows.
    pub fn kernel(&self) -> Vec<QVec> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![Q::zero(); self.cols];
            v[fc] = Q::one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[(ri, fc)].clone();
            }
            basis.push(v);
        }
        // Free-column construction is already independent; canonicalize anyway.
        rref_rows(basis)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == QMat::identity(self.rows)
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = Q;
    fn index(&self, (r, c): (usize, usize)) -> &Q {
        &self.data[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Q {
        &mut self.data[r * self.cols + c]
    }
}

/// Canonicalize a spanning set: RREF rows with zero rows dropped.
pub fn rref_rows(rows: Vec<QVec>) -> Vec<QVec> {
    if rows.is_empty() {
        return rows;
    }
    let mut m = QMat::from_rows(rows);
    let pivots = m.rref();
    (0..pivots.len()).map(|r| m.row(r).to_vec()).collect()
}

/// Solve `basis^T * x = v` where `basis` rows are independent; returns the
/// coordinates of `v` in the row space, or None if `v` is outside it.
pub fn coords_in_rowspace(basis: &[QVec], v: &[Q]) -> Option<QVec> {
    if basis.is_empty() {
        return if vec_is_zero(v) { Some(Vec::new()) } else { None };
    }
    let n = v.len();
    // Augmented system over the transpose.
    let mut m = QMat::zero(n, basis.len() + 1);
    for (j, b) in basis.iter().enumerate() {
        for i in 0..n {
            m[(i, j)] = b[i].clone();
        }
    }
    for i in 0..n {
        m[(i, basis.len())] = v[i].clone();
    }
    let pivots = m.rref();
    if pivots.contains(&basis.len()) {
        return None; // inconsistent
    }
    let mut x = vec![Q::zero(); basis.len()];
    for (ri, &pc) in pivots.iter().enumerate() {
        x[pc] = m[(ri, basis.len())].clone();
    }
    Some(x)
}

/// A linear subspace of `Q^ambient` held by its canonical reduced-echelon
/// basis, so equality of subspaces is plain structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<QVec>,
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of Q^{})", self.dim(), self.ambient)
    }
}

impl Subspace {
    pub fn full(ambient: usize) -> Self {
        Subspace { ambient, basis: QMat::identity(ambient).to_rows() }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, basis: Vec::new() }
    }

    pub fn from_rows(ambient: usize, rows: Vec<QVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ambient));
        Subspace { ambient, basis: rref_rows(rows) }
    }

    /// `{ x : c . x = 0 for every covector c }`.
    pub fn kernel_of(ambient: usize, covectors: &[QVec]) -> Self {
        if covectors.is_empty() {
            return Subspace::full(ambient);
        }
        let m = QMat::from_rows(covectors.to_vec());
        Subspace { ambient, basis: m.kernel() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[QVec] {
        &self.basis
    }

    pub fn contains(&self, v: &[Q]) -> bool {
        coords_in_rowspace(&self.basis, v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` in the canonical basis (None if outside).
    pub fn coords(&self, v: &[Q]) -> Option<QVec> {
        coords_in_rowspace(&self.basis, v)
    }

    /// The vector with the given canonical-basis coordinates.
    pub fn from_coords(&self, x: &[Q]) -> QVec {
        assert_eq!(x.len(), self.dim());
        let mut v = vec![Q::zero(); self.ambient];
        for (c, b) in x.iter().zip(&self.basis) {
            for i in 0..self.ambient {
                v[i] += c * &b[i];
            }
        }
        v
    }

    /// Orthogonal complement under the standard dot pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.basis.is_empty() {
            return Subspace::full(self.ambient);
        }
        let m = QMat::from_rows(self.basis.clone());
        Subspace { ambient: self.ambient, basis: m.kernel() }
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let a = self.annihilator();
        let b = other.annihilator();
        let mut cons = a.basis.clone();
        cons.extend(b.basis.clone());
        Subspace::kernel_of(self.ambient, &cons)
    }

    /// Deterministic total order: ambient, then dim, then basis entries.
    pub fn cmp_key(&self, other: &Subspace) -> std::cmp::Ordering {
        self.ambient
            .cmp(&other.ambient)
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| {
                for (a, b) in self.basis.iter().zip(&other.basis) {
                    for (x, y) in a.iter().zip(b) {
                        let c = x.cmp(y);
                        if c != std::cmp::Ordering::Equal {
                            return c;
                        }
                    }
                }
                std::cmp::Ordering::Equal
            })
    }
}

/// Does `c . x > 0` for all rows `c` admit a solution?  Decided exactly via
/// the Gordan alternative: the strict system is infeasible iff some nonzero
/// nonnegative combination of the rows vanishes, which is a rational
/// phase-one linear program.
pub fn feasible_strict(constraints: &[QVec]) -> bool {
    let nonzero: Vec<&QVec> = constraints.iter().filter(|c| !vec_is_zero(c)).collect();
    if nonzero.is_empty() {
        return true;
    }
    let dim = nonzero[0].len();
    // Find lambda >= 0 with sum_i lambda_i c_i = 0 and sum_i lambda_i = 1.
    let n = nonzero.len();
    let mut rows: Vec<QVec> = Vec::with_capacity(dim + 1);
    for d in 0..dim {
        rows.push(nonzero.iter().map(|c| c[d].clone()).collect());
    }
    rows.push(vec![Q::one(); n]);
    let mut rhs = vec![Q::zero(); dim];
    rhs.push(Q::one());
    !phase_one_feasible(rows, rhs)
}

/// Exact phase-one simplex with Bland's rule: is `{ x >= 0 : A x = b }`
/// nonempty?
fn phase_one_feasible(mut a: Vec<QVec>, mut b: Vec<Q>) -> bool {
    let m = a.len();
    let n = a[0].len();
    for i in 0..m {
        if b[i].is_negative() {
            for x in &mut a[i] {
                *x = -x.clone();
            }
            b[i] = -b[i].clone();
        }
    }
    // Tableau columns: n real variables + m artificials + rhs.
    let cols = n + m + 1;
    let mut t = vec![vec![Q::zero(); cols]; m];
    for i in 0..m {
        for j in 0..n {
            t[i][j] = a[i][j].clone();
        }
        t[i][n + i] = Q::one();
        t[i][cols - 1] = b[i].clone();
    }
    let mut basis: Vec<usize> = (n..n + m).collect();
    // Objective: minimize sum of artificials; reduced costs for the current
    // all-artificial basis.
    let mut obj = vec![Q::zero(); cols];
    for i in 0..m {
        for j in 0..cols {
            let add = t[i][j].clone();
            obj[j] += add;
        }
    }
    for j in n..n + m {
        obj[j] = Q::zero();
    }
    loop {
        // Bland: smallest index with positive reduced cost among real
        // variables (we maximize the negated objective implicitly).
        let Some(enter) = (0..n + m).find(|&j| obj[j].is_positive() && !basis.contains(&j))
        else {
            break;
        };
        // Ratio test, Bland ties by row basis variable.
        let mut leave: Option<usize> = None;
        let mut best: Option<Q> = None;
        for i in 0..m {
            if t[i][enter].is_positive() {
                let ratio = &t[i][cols - 1] / &t[i][enter];
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(li) = leave else {
            break; // unbounded improving direction: cannot happen in phase one
        };
        // Pivot.
        let piv = t[li][enter].clone();
        for j in 0..cols {
            t[li][j] = &t[li][j] / &piv;
        }
        for i in 0..m {
            if i != li && !t[i][enter].is_zero() {
                let f = t[i][enter].clone();
                for j in 0..cols {
                    let u = &t[i][j] - &f * &t[li][j];
                    t[i][j] = u;
                }
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..cols {
                let u = &obj[j] - &f * &t[li][j];
                obj[j] = u;
            }
        }
        basis[li] = enter;
    }
    // Feasible iff every artificial ended at zero.
    (0..m).all(|i| {
        if basis[i] >= n {
            t[i][cols - 1].is_zero()
        } else {
            true
        }
    })
}
