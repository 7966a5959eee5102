//! Dense exact linear algebra over a [`Field`]: reduced row echelon
//! form, nullspaces, linear solves, incremental row spans, symmetric
//! congruence diagonalization, and minimal polynomials.
//!
//! Pivoting picks the first nonzero entry; with exact scalars there is
//! no numerical stability to chase. Sizes here top out at the 512x64
//! Leibniz system of the derivation solver, well within reach of plain
//! Gaussian elimination.

use num_traits::{One, Signed, Zero};

use crate::scalar::{Field, Polynomial, Rational};

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    /// Row-major copy of all entries.
    pub fn flatten(&self) -> Vec<K> {
        self.data.clone()
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, s: &K) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.at(r, c).clone() + a.clone() * b.clone();
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = K::zero();
                for (c, vc) in v.iter().enumerate() {
                    if !self.at(r, c).is_zero() && !vc.is_zero() {
                        acc = acc + self.at(r, c).clone() * vc.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn trace(&self) -> K {
        assert_eq!(self.rows, self.cols);
        let mut acc = K::zero();
        for i in 0..self.rows {
            acc = acc + self.at(i, i).clone();
        }
        acc
    }

    /// tr(self * other) without forming the product.
    pub fn product_trace(&self, other: &Self) -> K {
        assert_eq!((self.cols, self.rows), (other.rows, other.cols));
        let mut acc = K::zero();
        for r in 0..self.rows {
            for c in 0..self.cols {
                if !self.at(r, c).is_zero() && !other.at(c, r).is_zero() {
                    acc = acc + self.at(r, c).clone() * other.at(c, r).clone();
                }
            }
        }
        acc
    }

    /// The commutator self*other - other*self.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&p| !self.at(p, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = K::one() / self.at(r, c).clone();
            for j in c..self.cols {
                let v = self.at(r, j).clone() * inv.clone();
                self.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let f = self.at(i, c).clone();
                for j in c..self.cols {
                    let v = self.at(i, j).clone() - f.clone() * self.at(r, j).clone();
                    self.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right nullspace {x : self * x = 0}.
    pub fn nullspace(&self) -> Vec<Vec<K>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivots.contains(&free) {
                continue;
            }
            let mut v = vec![K::zero(); self.cols];
            v[free] = K::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -m.at(row, free).clone();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of self * x = b, or None if inconsistent.
    pub fn solve(&self, b: &[K]) -> Option<Vec<K>> {
        assert_eq!(self.rows, b.len());
        let mut aug = Self::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self.at(r, c).clone()
            } else {
                b[r].clone()
            }
        });
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![K::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(row, self.cols).clone();
        }
        Some(x)
    }
}

/// Incrementally maintained row space in reduced echelon form, for
/// linear-independence tests and span-closure computations.
pub struct RowSpan<K> {
    cols: usize,
    rows: Vec<Vec<K>>,
    pivots: Vec<usize>,
}

impl<K: Field> RowSpan<K> {
    pub fn new(cols: usize) -> Self {
        RowSpan { cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, mut v: Vec<K>) -> Vec<K> {
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let f = v[p].clone();
            for c in p..self.cols {
                v[c] = v[c].clone() - f.clone() * row[c].clone();
            }
        }
        v
    }

    pub fn contains(&self, v: &[K]) -> bool {
        self.reduce(v.to_vec()).iter().all(Zero::is_zero)
    }

    /// Insert a vector; returns true if it enlarged the span.
    pub fn insert(&mut self, v: Vec<K>) -> bool {
        assert_eq!(v.len(), self.cols);
        let mut v = self.reduce(v);
        let Some(p) = v.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = K::one() / v[p].clone();
        for entry in v.iter_mut().skip(p) {
            *entry = entry.clone() * inv.clone();
        }
        // Keep full reduction: clear the new pivot from existing rows.
        // Only columns from p on can change, since v is zero before p.
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for c in p..self.cols {
                row[c] = row[c].clone() - f.clone() * v[c].clone();
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// Signature (positives, negatives, zeros) of a symmetric rational
/// matrix by exact simultaneous row/column elimination.
pub fn signature_of_symmetric(g: &Matrix<Rational>) -> (usize, usize, usize) {
    let n = g.rows();
    assert_eq!(n, g.cols());
    let mut a = g.clone();
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    for k in 0..n {
        if a.at(k, k).is_zero() {
            // Prefer bringing a nonzero diagonal entry up by a swap.
            if let Some(j) = ((k + 1)..n).find(|&j| !a.at(j, j).is_zero()) {
                swap_sym(&mut a, k, j);
            } else if let Some(j) = ((k + 1)..n).find(|&j| !a.at(k, j).is_zero()) {
                // Completion step: v_k <- v_k + v_j turns the zero
                // diagonal into 2*a[k][j], which is nonzero because
                // a[j][j] is zero here.
                add_sym(&mut a, k, j);
            } else {
                zero += 1;
                continue;
            }
        }
        let p = a.at(k, k).clone();
        if p.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for r in (k + 1)..n {
            if a.at(r, k).is_zero() {
                continue;
            }
            let f = a.at(r, k) / &p;
            // Row then column, keeping the matrix symmetric.
            for c in 0..n {
                let v = a.at(r, c) - &f * a.at(k, c);
                a.set(r, c, v);
            }
            for c in 0..n {
                let v = a.at(c, r) - &f * a.at(c, k);
                a.set(c, r, v);
            }
        }
    }
    (pos, neg, zero)
}

fn swap_sym(a: &mut Matrix<Rational>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let x = a.at(i, c).clone();
        let y = a.at(j, c).clone();
        a.set(i, c, y);
        a.set(j, c, x);
    }
    for r in 0..n {
        let x = a.at(r, i).clone();
        let y = a.at(r, j).clone();
        a.set(r, i, y);
        a.set(r, j, x);
    }
}

fn add_sym(a: &mut Matrix<Rational>, i: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let v = a.at(i, c) + a.at(j, c);
        a.set(i, c, v);
    }
    for r in 0..n {
        let v = a.at(r, i) + a.at(r, j);
        a.set(r, i, v);
    }
}

/// Minimal polynomial of a square rational matrix, found as the first
/// linear dependence among the flattened powers I, M, M^2, ...
pub fn min_poly(m: &Matrix<Rational>) -> Polynomial {
    let n = m.rows();
    assert_eq!(n, m.cols());
    let mut span = RowSpan::new(n * n);
    let mut powers: Vec<Matrix<Rational>> = vec![Matrix::identity(n)];
    span.insert(powers[0].flatten());
    loop {
        let next = powers.last().unwrap().mul(m);
        let flat = next.flatten();
        if span.contains(&flat) {
            // Solve for the dependence coefficients.
            let deg = powers.len();
            let flats: Vec<Vec<Rational>> = powers.iter().map(Matrix::flatten).collect();
            let cols = Matrix::from_fn(n * n, deg, |r, c| flats[c][r].clone());
            let coeffs = cols.solve(&flat).expect("dependence just detected");
            let mut poly = coeffs.iter().map(|c| -c.clone()).collect::<Vec<_>>();
            poly.push(Rational::one());
            return Polynomial::new(poly);
        }
        span.insert(flat);
        powers.push(next);
    }
}
