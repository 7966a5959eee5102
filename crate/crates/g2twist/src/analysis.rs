//! Lie-theoretic verification layer: Jacobi, Killing form, eigen
//! structure, Cartan subalgebras, semisimplicity, simplicity, integer
//! and `ℚ(√3)` bases, and the independent derivation-algebra oracle.
//!
//! Everything here is exact. The model bracket and the octonion
//! derivation oracle are kept as two separate routes; checks that are
//! supposed to tie them together do so explicitly and never collapse
//! one into the other.

use crate::group;
use crate::linalg::{signature_of_symmetric, Matrix, RowSpan};
use crate::model::{
    ad_matrix, bracket, sigma_expanded, sigma_matrix, G2Element, ModelVariant, RingPair,
    SigmaFamily,
};
use crate::octonion::{derivation_basis, division_table, is_derivation, split_table};
use crate::report::Report;
use crate::scalar::{is_squarefree, rat, rat_int, Field, Polynomial, QSqrt3, Rational};
use crate::{Error, Result};
use num_traits::{One, Zero};

/// The Killing-form Gram matrix in the canonical basis.
#[derive(Clone, Debug, PartialEq)]
pub struct KillingGram {
    pub matrix: Matrix<Rational>,
}

/// Inertia of a symmetric bilinear form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Signature {
    pub positives: usize,
    pub negatives: usize,
    pub zeros: usize,
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {}, {})", self.positives, self.negatives, self.zeros)
    }
}

/// Structure constants `c^k_{ij}` of a finite-dimensional algebra in a
/// fixed basis: `[b_i, b_j] = Σ_k c^k_{ij} b_k`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureConstants<K: Field> {
    dim: usize,
    c: Vec<Vec<Vec<K>>>,
}

impl<K: Field> StructureConstants<K> {
    /// Constants of the model bracket in the canonical 14-element basis.
    pub fn from_model(variant: ModelVariant) -> Self {
        let n = 14;
        let basis: Vec<G2Element<K>> = (0..n).map(G2Element::canonical_basis).collect();
        let c = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| bracket(variant, &basis[i], &basis[j]).to_coords())
                    .collect()
            })
            .collect();
        StructureConstants { dim: n, c }
    }

    /// Build constants from raw data (used for small test algebras).
    pub fn from_raw(dim: usize, c: Vec<Vec<Vec<K>>>) -> Self {
        assert_eq!(c.len(), dim);
        StructureConstants { dim, c }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize, k: usize) -> &K {
        &self.c[i][j][k]
    }

    /// Coordinates of `[b_i, b_j]`.
    pub fn bracket_of_basis(&self, i: usize, j: usize) -> &[K] {
        &self.c[i][j]
    }

    /// Matrix of `ad(b_i)` (columns are images of basis vectors).
    pub fn ad_basis(&self, i: usize) -> Matrix<K> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.c[i][j][k].clone())
    }

    /// Bracket of two coordinate vectors in this basis.
    pub fn bracket_coords(&self, x: &[K], y: &[K]) -> Vec<K> {
        assert_eq!(x.len(), self.dim);
        assert_eq!(y.len(), self.dim);
        let mut out = vec![K::zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let factor = xi.clone() * yj.clone();
                for (slot, c) in out.iter_mut().zip(&self.c[i][j]) {
                    if !c.is_zero() {
                        *slot = slot.clone() + factor.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Accumulate `coeff * [b_a, [b_b, b_c]]`-style double products:
    /// adds `Σ_t c^m_{ab} c^t_{mc} b_t` into `acc`.
    fn add_double_bracket(&self, acc: &mut [K], a: usize, b: usize, c3: usize) {
        for m in 0..self.dim {
            let cm = &self.c[a][b][m];
            if cm.is_zero() {
                continue;
            }
            for (slot, ct) in acc.iter_mut().zip(&self.c[m][c3]) {
                if ct.is_zero() {
                    continue;
                }
                *slot = slot.clone() + cm.clone() * ct.clone();
            }
        }
    }

    /// All ordered basis triples violating the Jacobi identity.
    pub fn jacobi_failures(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut fails = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let mut acc = vec![K::zero(); n];
                    self.add_double_bracket(&mut acc, i, j, k);
                    self.add_double_bracket(&mut acc, j, k, i);
                    self.add_double_bracket(&mut acc, k, i, j);
                    if acc.iter().any(|v| !v.is_zero()) {
                        fails.push((i, j, k));
                    }
                }
            }
        }
        fails
    }

    /// Gram matrix of the Killing form, `κ_{pq} = tr(ad b_p · ad b_q)`.
    pub fn killing_gram(&self) -> Matrix<K> {
        let ads: Vec<Matrix<K>> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        Matrix::from_fn(self.dim, self.dim, |p, q| ads[p].product_trace(&ads[q]))
    }

    /// Sign-flip mutation: negate every constant with one factor in the
    /// coefficient block of group index `gi` and the other in that of
    /// `gj` (both orders), modelling a sign error in one `σ` family
    /// entry. Only meaningful for the 14-dimensional model constants.
    pub fn with_flipped_block(&self, gi: usize, gj: usize) -> Self {
        assert_eq!(self.dim, 14, "block mutation is defined on the model constants");
        assert!((1..=7).contains(&gi) && (1..=7).contains(&gj) && gi != gj);
        let rows_i = [2 * (gi - 1), 2 * (gi - 1) + 1];
        let rows_j = [2 * (gj - 1), 2 * (gj - 1) + 1];
        let mut out = self.clone();
        for &p in &rows_i {
            for &q in &rows_j {
                for k in 0..self.dim {
                    out.c[p][q][k] = -out.c[p][q][k].clone();
                    out.c[q][p][k] = -out.c[q][p][k].clone();
                }
            }
        }
        out
    }

    /// Smallest ad-invariant subspace containing `b_start`, computed by
    /// iterated bracket closure; returns its dimension.
    pub fn ideal_closure_dim(&self, start: usize) -> usize {
        let mut span = RowSpan::new(self.dim);
        let mut seed = vec![K::zero(); self.dim];
        seed[start] = K::one();
        let mut queue = vec![seed];
        let ads: Vec<Matrix<K>> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        while let Some(v) = queue.pop() {
            if !span.insert(v.clone()) {
                continue;
            }
            for ad in &ads {
                queue.push(ad.mul_vec(&v));
            }
        }
        span.dim()
    }

    /// True iff every basis vector generates the whole algebra as an
    /// ideal (which for a nonabelian algebra forces simplicity).
    pub fn is_simple_by_closure(&self) -> bool {
        (0..self.dim).all(|s| self.ideal_closure_dim(s) == self.dim)
    }
}

impl StructureConstants<Rational> {
    /// Constants in the rescaled basis `b̃_i = s_i b_i`:
    /// `c̃^k_{ij} = (s_i s_j / s_k) c^k_{ij}`, over any exact field
    /// containing the scale factors.
    pub fn rescaled<K: Field>(&self, scales: &[K]) -> StructureConstants<K> {
        assert_eq!(scales.len(), self.dim);
        let c = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        (0..self.dim)
                            .map(|k| {
                                let base = K::from_rational(&self.c[i][j][k]);
                                base * scales[i].clone() * scales[j].clone()
                                    / scales[k].clone()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        StructureConstants { dim: self.dim, c }
    }

    /// Recover structure constants from explicit operators: solves
    /// `[ops_i, ops_j] = Σ_k c^k_{ij} ops_k` exactly for every pair.
    /// Returns `None` if the operators are linearly dependent or do not
    /// close under commutators.
    pub fn from_operator_algebra(ops: &[Matrix<Rational>]) -> Option<Self> {
        let n = ops.len();
        if n == 0 {
            return None;
        }
        let flats: Vec<Vec<Rational>> = ops.iter().map(|m| m.flatten()).collect();
        let len = flats[0].len();
        let basis_matrix = Matrix::from_fn(len, n, |r, c| flats[c][r].clone());
        // Linear independence of the operator basis.
        if basis_matrix.rank() != n {
            return None;
        }
        let mut c = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let comm = ops[i].commutator(&ops[j]).flatten();
                let coords = basis_matrix.solve(&comm)?;
                c[i][j] = coords;
            }
        }
        Some(StructureConstants { dim: n, c })
    }
}

/// Jacobi sweep over all `14³` ordered basis triples of the model.
pub fn jacobi_check(variant: ModelVariant) -> Report {
    let mut report = Report::new(format!("jacobi identity ({variant})"));
    let sc = StructureConstants::<Rational>::from_model(variant);
    let fails = sc.jacobi_failures();
    report.check(
        format!(
            "[[x,y],z] + [[y,z],x] + [[z,x],y] = 0 for all {} ordered basis triples",
            14 * 14 * 14
        ),
        fails.is_empty(),
    );
    for (i, j, k) in fails.iter().take(20) {
        report.note(format!(
            "failure at ({}, {}, {})",
            G2Element::<Rational>::canonical_label(*i),
            G2Element::<Rational>::canonical_label(*j),
            G2Element::<Rational>::canonical_label(*k)
        ));
    }
    report
}

/// Killing form `κ(x, y) = tr(ad x · ad y)` of the model.
pub fn killing(variant: ModelVariant, x: &G2Element<Rational>, y: &G2Element<Rational>) -> Rational {
    ad_matrix(variant, x).product_trace(&ad_matrix(variant, y))
}

/// Gram matrix of the Killing form in the canonical basis.
pub fn killing_gram(variant: ModelVariant) -> KillingGram {
    KillingGram { matrix: StructureConstants::<Rational>::from_model(variant).killing_gram() }
}

/// Signature by exact symmetric congruence diagonalization.
pub fn signature(gram: &KillingGram) -> Signature {
    let (positives, negatives, zeros) = signature_of_symmetric(&gram.matrix);
    Signature { positives, negatives, zeros }
}

/// Minimal polynomial of an exact square matrix.
pub fn min_poly(m: &Matrix<Rational>) -> Polynomial {
    crate::linalg::min_poly(m)
}

/// Ad-semisimplicity criterion: squarefree minimal polynomial.
pub fn is_semisimple(m: &Matrix<Rational>) -> bool {
    is_squarefree(&min_poly(m)).expect("minimal polynomial is monic, hence nonzero")
}

/// Structured Killing-form report: diagonal pattern, orthogonality,
/// invariance, and signature for the chosen variant.
pub fn killing_check(variant: ModelVariant) -> Report {
    let mut report = Report::new(format!("killing form ({variant})"));
    let sc = StructureConstants::<Rational>::from_model(variant);
    let gram = sc.killing_gram();

    // Diagonal pattern: ±4 on E positions, ±12 on F positions; the sign
    // flips on the split odd part {3,5,6,7}.
    let mut diag_ok = true;
    for pos in 0..14 {
        let i = pos / 2 + 1;
        let magnitude: i64 = if pos % 2 == 0 { 4 } else { 12 };
        let sign: i64 = match variant {
            ModelVariant::Compact => -1,
            ModelVariant::Split => {
                if group::is_split_odd(i) {
                    1
                } else {
                    -1
                }
            }
        };
        diag_ok &= gram.at(pos, pos) == &rat_int(sign * magnitude);
    }
    let diag_label = match variant {
        ModelVariant::Compact => "diagonal entries are -4 (E-type) and -12 (F-type)".to_string(),
        ModelVariant::Split => {
            "diagonal entries are ±4 (E-type) and ±12 (F-type), positive exactly on {3,5,6,7}"
                .to_string()
        }
    };
    report.check(diag_label, diag_ok);

    let mut offdiag_ok = true;
    for p in 0..14 {
        for q in 0..14 {
            if p != q && !gram.at(p, q).is_zero() {
                offdiag_ok = false;
            }
        }
    }
    report.check("canonical basis is orthogonal for the Killing form", offdiag_ok);

    // Invariance κ([x,y],z) + κ(y,[x,z]) = 0 on all basis triples,
    // computed through the structure constants.
    let mut invariant_ok = true;
    'outer: for x in 0..14 {
        for y in 0..14 {
            for z in 0..14 {
                let mut total = Rational::zero();
                for m in 0..14 {
                    let cxy = sc.at(x, y, m);
                    if !cxy.is_zero() {
                        total += cxy.clone() * gram.at(m, z).clone();
                    }
                    let cxz = sc.at(x, z, m);
                    if !cxz.is_zero() {
                        total += gram.at(y, m).clone() * cxz.clone();
                    }
                }
                if !total.is_zero() {
                    invariant_ok = false;
                    break 'outer;
                }
            }
        }
    }
    report.check("invariance κ([x,y],z) + κ(y,[x,z]) = 0 on all basis triples", invariant_ok);

    let sig = signature(&KillingGram { matrix: gram });
    let want = match variant {
        ModelVariant::Compact => Signature { positives: 0, negatives: 14, zeros: 0 },
        ModelVariant::Split => Signature { positives: 8, negatives: 6, zeros: 0 },
    };
    report.check(format!("signature is {want}"), sig == want);
    report
}

/// One eigenvector datum: `(offset, a, b)` encodes the vector
/// `(a, b) g_{i+offset}`.
type EigVec = (usize, i64, i64);

const F2F1_KERNEL: [EigVec; 6] =
    [(0, 1, 0), (0, 0, 1), (1, 1, 0), (1, 0, 1), (3, 1, 0), (3, 0, 1)];

/// Eigenpairs of `F₂F₁` (apply `F₁` first): `(vector, λ num, λ den)`.
const F2F1_EIGEN: [(EigVec, i64, i64); 8] = [
    ((2, 3, 1), 1, 4),
    ((2, 1, -1), -3, 4),
    ((4, 1, 0), 3, 4),
    ((4, 0, 1), -1, 4),
    ((5, 3, -1), -1, 4),
    ((5, 1, 1), 3, 4),
    ((6, 1, 0), -3, 4),
    ((6, 0, 1), 1, 4),
];

const F1SQ_KERNEL: [EigVec; 4] = [(0, 1, 0), (0, 0, 1), (1, 3, -1), (3, 3, 1)];

const F1SQ_EIGEN: [(EigVec, i64, i64); 10] = [
    ((1, 1, 1), -1, 1),
    ((3, 1, -1), -1, 1),
    ((2, 1, 0), -1, 4),
    ((2, 0, 1), -1, 4),
    ((4, 1, 0), -1, 4),
    ((4, 0, 1), -1, 4),
    ((5, 1, 0), -1, 4),
    ((5, 0, 1), -1, 4),
    ((6, 1, 0), -1, 4),
    ((6, 0, 1), -1, 4),
];

const F2SQ_KERNEL: [EigVec; 4] = [(0, 1, 0), (0, 0, 1), (1, 1, 1), (3, 1, -1)];

/// Eigenvalue −1 entry at offset 1 is `(3,−1)`; see the note emitted by
/// `eigen_verify` about the `(3,1)` variant.
const F2SQ_EIGEN: [(EigVec, i64, i64); 10] = [
    ((1, 3, -1), -1, 1),
    ((3, 3, 1), -1, 1),
    ((2, 3, 1), -1, 4),
    ((4, 0, 1), -1, 4),
    ((5, 3, -1), -1, 4),
    ((6, 0, 1), -1, 4),
    ((2, 1, -1), -9, 4),
    ((4, 1, 0), -9, 4),
    ((5, 1, 1), -9, 4),
    ((6, 1, 0), -9, 4),
];

fn offset_vector(i: usize, spec: EigVec) -> Vec<Rational> {
    let (offset, a, b) = spec;
    let idx = group::wrap(i + offset);
    G2Element::term(idx, RingPair::new(rat_int(a), rat_int(b)))
        .expect("wrapped index is in range")
        .to_coords()
}

fn is_eigenvector(m: &Matrix<Rational>, v: &[Rational], lambda: &Rational) -> bool {
    let image = m.mul_vec(v);
    image
        .iter()
        .zip(v.iter())
        .all(|(got, want)| *got == want.clone() * lambda.clone())
}

/// Verify the complete listed eigen-structure of `F₂F₁`, `F₁²`, `F₂²`
/// at the point `i`, where `F₁ = ad((1,0)gᵢ)` and `F₂ = ad((0,1)gᵢ)`
/// in the compact model. The lists are compact-specific, so any other
/// variant is an error.
pub fn eigen_verify(variant: ModelVariant, i: usize) -> Result<Report> {
    if variant != ModelVariant::Compact {
        return Err(Error::NonCompactEigen);
    }
    group::check_index(i)?;
    let mut report = Report::new(format!("eigen structure at point {i}"));
    let e = G2Element::term(i, RingPair::new(Rational::one(), Rational::zero()))?;
    let f = G2Element::term(i, RingPair::new(Rational::zero(), Rational::one()))?;
    let f1 = ad_matrix(ModelVariant::Compact, &e);
    let f2 = ad_matrix(ModelVariant::Compact, &f);
    let f2f1 = f2.mul(&f1);
    let f1sq = f1.mul(&f1);
    let f2sq = f2.mul(&f2);

    let run = |name: &str,
                   m: &Matrix<Rational>,
                   kernel: &[EigVec],
                   eigen: &[(EigVec, i64, i64)],
                   trace: i64,
                   report: &mut Report| {
        let mut span = RowSpan::new(14);
        let mut kernel_ok = true;
        for &spec in kernel {
            let v = offset_vector(i, spec);
            kernel_ok &= m.mul_vec(&v).iter().all(|x| x.is_zero());
            span.insert(v);
        }
        report.check(format!("{name}: listed kernel vectors are killed"), kernel_ok);
        for &(spec, num, den) in eigen {
            let (off, a, b) = spec;
            let lambda = rat(num, den);
            let v = offset_vector(i, spec);
            report.check(
                format!("{name}: ({a},{b})g_(i+{off}) has eigenvalue {lambda}"),
                is_eigenvector(m, &v, &lambda),
            );
            span.insert(v);
        }
        report.check(
            format!("{name}: listed vectors form a full basis (independence)"),
            span.dim() == 14,
        );
        report.check(format!("{name}: trace is {trace}"), m.trace() == rat_int(trace));
    };

    run("F2F1", &f2f1, &F2F1_KERNEL, &F2F1_EIGEN, 0, &mut report);
    run("F1^2", &f1sq, &F1SQ_KERNEL, &F1SQ_EIGEN, -4, &mut report);
    run("F2^2", &f2sq, &F2SQ_KERNEL, &F2SQ_EIGEN, -12, &mut report);

    // The (3,1)g_{i+1} candidate sometimes quoted in the eigenvalue −1
    // list of F₂² is not an eigenvector; (3,−1)g_{i+1} is the correct
    // member and is what the table above checks.
    let bad = offset_vector(i, (1, 3, 1));
    let image = f2sq.mul_vec(&bad);
    let not_eigen = {
        // Not proportional: image × v ≠ 0 as a 2-vector cross product in
        // the λ_{i+1} block, or image has support outside the block.
        let idx = group::wrap(i + 1);
        let rows = [2 * (idx - 1), 2 * (idx - 1) + 1];
        let outside = (0..14).any(|r| !rows.contains(&r) && !image[r].is_zero());
        let cross = image[rows[0]].clone() * bad[rows[1]].clone()
            - image[rows[1]].clone() * bad[rows[0]].clone();
        outside || !cross.is_zero()
    };
    report.check(
        "F2^2: (3,1)g_(i+1) is NOT an eigenvector (corrected list entry)",
        not_eigen,
    );
    report.note(
        "the eigenvalue −1 eigenvector at offset 1 is (3,−1)g_(i+1); the (3,1) variant fails \
         the eigenvector test and is rejected above"
            .to_string(),
    );
    Ok(report)
}

/// Cartan criterion for the homogeneous component `λᵢ`: abelian and
/// self-normalizing.
pub fn is_cartan(variant: ModelVariant, i: usize) -> Result<bool> {
    group::check_index(i)?;
    let e = G2Element::<Rational>::canonical_basis(2 * (i - 1));
    let f = G2Element::<Rational>::canonical_basis(2 * (i - 1) + 1);
    let abelian = bracket(variant, &e, &f).is_zero();
    let ad_e = ad_matrix(variant, &e);
    let ad_f = ad_matrix(variant, &f);
    let inside = [2 * (i - 1), 2 * (i - 1) + 1];
    let mut rows = Vec::with_capacity(24);
    for m in [&ad_e, &ad_f] {
        for r in 0..14 {
            if !inside.contains(&r) {
                rows.push(m.row(r).to_vec());
            }
        }
    }
    let normalizer_dim = Matrix::from_rows(rows).nullspace().len();
    Ok(abelian && normalizer_dim == 2)
}

/// Scale factors of the integer basis `{(4,0)gᵢ, (0,4)gᵢ}`.
pub fn integer_scales() -> Vec<Rational> {
    vec![rat_int(4); 14]
}

/// Scale factors of the orthonormal basis
/// `{½(1,0)gᵢ, (1/(2√3))(0,1)gᵢ}` over `ℚ(√3)`; note
/// `1/(2√3) = √3/6`.
pub fn orthonormal_scales() -> Vec<QSqrt3> {
    (0..14)
        .map(|pos| {
            if pos % 2 == 0 {
                QSqrt3::new(rat(1, 2), rat(0, 1))
            } else {
                QSqrt3::new(rat(0, 1), rat(1, 6))
            }
        })
        .collect()
}

/// All structure constants in the scaled basis `{(4,0)gᵢ, (0,4)gᵢ}`
/// must be integers; the report lists the full nonzero table.
pub fn integer_constants_check(variant: ModelVariant) -> Report {
    let mut report = Report::new(format!("integer structure constants ({variant})"));
    let sc = StructureConstants::<Rational>::from_model(variant).rescaled(&integer_scales());
    let mut all_integer = true;
    for i in 0..14 {
        for j in 0..14 {
            let nonzero: Vec<(usize, &Rational)> = (0..14)
                .map(|k| (k, sc.at(i, j, k)))
                .filter(|(_, v)| !v.is_zero())
                .collect();
            if nonzero.is_empty() {
                continue;
            }
            let integral = nonzero.iter().all(|(_, v)| v.is_integer());
            all_integer &= integral;
            let cells: Vec<String> = nonzero
                .iter()
                .map(|(k, v)| format!("{}:{}", G2Element::<Rational>::canonical_label(*k), v))
                .collect();
            report.check(
                format!(
                    "[{}, {}] = {}",
                    G2Element::<Rational>::canonical_label(i),
                    G2Element::<Rational>::canonical_label(j),
                    cells.join(", ")
                ),
                integral,
            );
        }
    }
    report.check("every scaled structure constant is an integer", all_integer);
    report
}

/// Orthonormal-basis checks over `ℚ(√3)`: Killing norms, orthogonality,
/// and closure of the structure constants in `ℚ(√3)`, the latter
/// cross-checked by recomputing the bracket directly over `ℚ(√3)`
/// scalars.
pub fn qs3_basis_check(variant: ModelVariant) -> Report {
    let mut report = Report::new(format!("orthonormal basis over Q(√3) ({variant})"));
    let scales = orthonormal_scales();
    let sc_rat = StructureConstants::<Rational>::from_model(variant);
    let sc = sc_rat.rescaled(&scales);
    let gram = sc.killing_gram();

    let mut norm_ok = true;
    for pos in 0..14 {
        let i = pos / 2 + 1;
        let want = match variant {
            ModelVariant::Compact => -1i64,
            ModelVariant::Split => {
                if group::is_split_odd(i) {
                    1
                } else {
                    -1
                }
            }
        };
        let want = QSqrt3::new(rat_int(want), rat(0, 1));
        norm_ok &= gram.at(pos, pos) == &want;
    }
    let norm_label = match variant {
        ModelVariant::Compact => "κ(b,b) = −1 for all 14 orthonormal basis vectors".to_string(),
        ModelVariant::Split => {
            "κ(b,b) = ±1 for all 14 basis vectors, +1 exactly on {3,5,6,7}".to_string()
        }
    };
    report.check(norm_label, norm_ok);

    let mut orth_ok = true;
    for p in 0..14 {
        for q in 0..14 {
            if p != q && !gram.at(p, q).is_zero() {
                orth_ok = false;
            }
        }
    }
    report.check("pairwise Killing-orthogonality", orth_ok);

    // Closure in ℚ(√3): recompute each bracket directly over QSqrt3
    // scalars and expand in the scaled basis; the coordinates must
    // reproduce the rescaled constants exactly.
    let basis_q: Vec<G2Element<QSqrt3>> = (0..14)
        .map(|pos| G2Element::<QSqrt3>::canonical_basis(pos).scale(&scales[pos]))
        .collect();
    let mut closure_ok = true;
    for i in 0..14 {
        for j in 0..14 {
            let direct = bracket(variant, &basis_q[i], &basis_q[j]).to_coords();
            for (k, coord) in direct.into_iter().enumerate() {
                let expanded = coord / scales[k].clone();
                if &expanded != sc.at(i, j, k) {
                    closure_ok = false;
                }
            }
        }
    }
    report.check(
        "structure constants lie in ℚ(√3) and match the direct ℚ(√3) bracket",
        closure_ok,
    );

    // Frozen sample: [E₁ᵒ, F₂ᵒ] = (√3/8) E₄ᵒ − (3/8) F₄ᵒ.
    let sample_e = sc.at(0, 3, 6) == &QSqrt3::new(rat(0, 1), rat(1, 8));
    let sample_f = sc.at(0, 3, 7) == &QSqrt3::new(rat(-3, 8), rat(0, 1));
    report.check(
        "sample constant [E1°, F2°] = (√3/8)E4° − (3/8)F4°",
        sample_e && sample_f,
    );
    report
}

/// Every basis vector generates the whole algebra as an ideal.
pub fn simplicity_check(variant: ModelVariant) -> bool {
    StructureConstants::<Rational>::from_model(variant).is_simple_by_closure()
}

/// Symbolic grid data for the two ad columns: the cell for
/// `[·, (a,b)g_{i+k}]` is `¼(pa·a + pb·b, qa·a + qb·b) g_{i+offset}`
/// with `(pa, pb, qa, qb)` below and the target offset from
/// [`grid_target_offset`]. Row order is `k = 1..6`; `k = 0` is zero.
pub const GRID_E: [[i64; 4]; 6] = [
    [1, 3, -1, -3],
    [1, -3, -1, -1],
    [-1, 3, -1, 3],
    [1, -3, 1, 1],
    [-1, -3, 1, -1],
    [-1, 3, 1, 1],
];

/// F-column analogue of [`GRID_E`].
pub const GRID_F: [[i64; 4]; 6] = [
    [-3, 3, -1, 1],
    [3, -9, 1, 1],
    [3, 3, -1, -1],
    [-3, -3, -3, 1],
    [3, 9, 1, -1],
    [-3, -3, 3, -1],
];

/// Target offset of the grid row `k`: `star(i, i+k) = i + offset`.
pub fn grid_target_offset(k: usize) -> usize {
    [3, 6, 1, 5, 4, 2][k - 1]
}

/// Structured sample pairs used by the symbolic grid check.
pub const GRID_SAMPLES: [(i64, i64); 6] = [(1, 0), (0, 1), (3, 1), (1, -1), (3, -1), (1, 1)];

fn grid_expected(
    variant: ModelVariant,
    i: usize,
    k: usize,
    template: &[i64; 4],
    a: &Rational,
    b: &Rational,
) -> G2Element<Rational> {
    let target = group::wrap(i + grid_target_offset(k));
    let quarter = rat(1, 4);
    let sign = match variant {
        ModelVariant::Compact => rat_int(1),
        ModelVariant::Split => rat_int(crate::model::split_sign(i, group::wrap(i + k))
            .expect("distinct indices") as i64),
    };
    let pa = rat_int(template[0]);
    let pb = rat_int(template[1]);
    let qa = rat_int(template[2]);
    let qb = rat_int(template[3]);
    let first = (pa * a.clone() + pb * b.clone()) * quarter.clone() * sign.clone();
    let second = (qa * a.clone() + qb * b.clone()) * quarter * sign;
    G2Element::term(target, RingPair::new(first, second)).expect("target index in range")
}

/// Symbolic verification of the full 14-cell ad grid at every point:
/// for each `i`, each row `k = 0..6`, and both columns, the bracket is
/// evaluated on the structured samples plus random rational pairs and
/// compared with the grid template (sign-adjusted for the split
/// variant).
pub fn grid_check(variant: ModelVariant, random_samples: usize) -> Report {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1742);
    let mut report = Report::new(format!("ad grid ({variant})"));

    let mut samples: Vec<(Rational, Rational)> = GRID_SAMPLES
        .iter()
        .map(|&(a, b)| (rat_int(a), rat_int(b)))
        .collect();
    for _ in 0..random_samples {
        let part = |rng: &mut rand_chacha::ChaCha8Rng| {
            rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
        };
        let a = part(&mut rng);
        let b = part(&mut rng);
        samples.push((a, b));
    }

    for i in 1..=7usize {
        let e = G2Element::<Rational>::canonical_basis(2 * (i - 1));
        let f = G2Element::<Rational>::canonical_basis(2 * (i - 1) + 1);

        // Row k = 0: same-index bracket vanishes identically.
        let mut zero_ok = true;
        for (a, b) in &samples {
            let y = G2Element::term(i, RingPair::new(a.clone(), b.clone())).unwrap();
            zero_ok &= bracket(variant, &e, &y).is_zero() && bracket(variant, &f, &y).is_zero();
        }
        report.check(format!("i={i}, row g{i}: both columns vanish"), zero_ok);

        for k in 1..=6usize {
            let j = group::wrap(i + k);
            let mut e_ok = true;
            let mut f_ok = true;
            for (a, b) in &samples {
                let y = G2Element::term(j, RingPair::new(a.clone(), b.clone())).unwrap();
                let got_e = bracket(variant, &e, &y);
                let got_f = bracket(variant, &f, &y);
                e_ok &= got_e == grid_expected(variant, i, k, &GRID_E[k - 1], a, b);
                f_ok &= got_f == grid_expected(variant, i, k, &GRID_F[k - 1], a, b);
            }
            report.check(
                format!("i={i}, row g{j} (k={k}), column ad((1,0)g{i})"),
                e_ok,
            );
            report.check(
                format!("i={i}, row g{j} (k={k}), column ad((0,1)g{i})"),
                f_ok,
            );
        }
    }

    if variant == ModelVariant::Split {
        split_sign_lists_check(&mut report);
    }
    report
}

/// The published per-family sign lists for the split twist, checked
/// against the parity rule. The offset-1 list prints `σ_13` where only
/// `σ_23` is admissible (the pair (1,3) has offset 2, not 1); the rule
/// forces `σ_23`, which is what is verified, and the substitution is
/// flagged rather than silently applied.
fn split_sign_lists_check(report: &mut Report) {
    let plus = [
        (1usize, vec![(1usize, 2usize), (2, 3), (3, 4), (4, 5), (7, 1)]),
        (2, vec![(1, 3), (2, 4), (4, 6), (6, 1), (7, 2)]),
        (4, vec![(1, 5), (2, 6), (4, 1), (5, 2), (7, 4)]),
    ];
    let minus = [
        (1usize, vec![(5usize, 6usize), (6, 7)]),
        (2, vec![(3, 5), (5, 7)]),
        (4, vec![(3, 7), (6, 3)]),
    ];
    let mut ok = true;
    for (offset, pairs) in &plus {
        for &(i, j) in pairs {
            ok &= (j + 7 - i) % 7 == *offset;
            ok &= crate::model::split_sign(i, j).unwrap() == 1;
        }
    }
    for (offset, pairs) in &minus {
        for &(i, j) in pairs {
            ok &= (j + 7 - i) % 7 == *offset;
            ok &= crate::model::split_sign(i, j).unwrap() == -1;
        }
    }
    report.check("published sign lists match the parity rule (with σ_23 for σ_13)", ok);
    report.note(
        "the offset-1 positive list is quoted with σ_13, but (1,3) has offset 2; the parity \
         rule forces σ_23 in that slot, and σ_23 is what is checked"
            .to_string(),
    );
}

/// σ cocycle representation equality: matrix form against expanded
/// form, on an exhaustive structured sweep and random rational pairs.
pub fn sigma_equality_check(random_per_family: usize) -> Report {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(97);
    let mut report = Report::new("σ matrix form vs expanded form");
    for family in SigmaFamily::ALL {
        let mut structured_ok = true;
        for &(a, b) in &GRID_SAMPLES {
            for &(ap, bp) in &GRID_SAMPLES {
                let r = RingPair::new(rat_int(a), rat_int(b));
                let rp = RingPair::new(rat_int(ap), rat_int(bp));
                structured_ok &= sigma_matrix(family, &r, &rp) == sigma_expanded(family, &r, &rp);
            }
        }
        report.check(
            format!("{family}: structured sweep ({} pairs)", GRID_SAMPLES.len().pow(2)),
            structured_ok,
        );
        let mut random_ok = true;
        for _ in 0..random_per_family {
            let part = |rng: &mut rand_chacha::ChaCha8Rng| {
                rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
            };
            let r = RingPair::new(part(&mut rng), part(&mut rng));
            let rp = RingPair::new(part(&mut rng), part(&mut rng));
            random_ok &= sigma_matrix(family, &r, &rp) == sigma_expanded(family, &r, &rp);
        }
        report.check(
            format!("{family}: {random_per_family} random rational pairs"),
            random_ok,
        );
    }
    report
}

/// The φ isomorphism check: all 91 unordered canonical basis pairs
/// satisfy `φ[x,y] = [φx, φy]` as exact 8×8 operators, the 14 images
/// are linearly independent derivations of the division table, and the
/// derivation oracle confirms dimension 14.
pub fn phi_check() -> Report {
    use crate::model::phi;
    let mut report = Report::new("φ into Der(division octonions)");
    let table = division_table();
    let basis: Vec<G2Element<Rational>> =
        (0..14).map(G2Element::<Rational>::canonical_basis).collect();
    let images: Vec<Matrix<Rational>> = basis.iter().map(phi).collect();

    let mut deriv_ok = true;
    let mut span = RowSpan::new(64);
    for img in &images {
        deriv_ok &= is_derivation(img, table);
        span.insert(img.flatten());
    }
    report.check("all 14 φ-images are derivations of the division table", deriv_ok);
    report.check("the 14 φ-images are linearly independent", span.dim() == 14);

    let mut pairs_ok = 0usize;
    let mut pairs_total = 0usize;
    for x in 0..14 {
        for y in (x + 1)..14 {
            pairs_total += 1;
            let lhs = phi(&bracket(ModelVariant::Compact, &basis[x], &basis[y]));
            let rhs = images[x].commutator(&images[y]);
            if lhs == rhs {
                pairs_ok += 1;
            }
        }
    }
    report.check(
        format!("φ[x,y] = [φx, φy] on all {pairs_total} unordered basis pairs ({pairs_ok} pass)"),
        pairs_ok == pairs_total,
    );

    let dim = derivation_basis(table).len();
    report.check("independent oracle: dim Der(division table) = 14", dim == 14);
    report
}

/// Killing signature of an operator algebra given by an explicit basis
/// of matrices, via the recovered structure constants. `None` if the
/// operators do not close under commutators.
pub fn operator_algebra_signature(ops: &[Matrix<Rational>]) -> Option<Signature> {
    let sc = StructureConstants::from_operator_algebra(ops)?;
    let (positives, negatives, zeros) = signature_of_symmetric(&sc.killing_gram());
    Some(Signature { positives, negatives, zeros })
}

/// Identification of the two variants against the derivation oracle.
///
/// Compact: `Der(division)` has dimension 14 and Killing signature
/// `(0,14,0)`, matching the model. Split: `Der(split)` has dimension
/// 14 and Killing signature `(8,6,0)`, matching the model, and the
/// model is simple; since the real forms are classified by signature,
/// these facts identify the split model.
pub fn identification_check(variant: ModelVariant) -> Report {
    let mut report = Report::new(format!("form identification ({variant})"));
    let table = match variant {
        ModelVariant::Compact => division_table(),
        ModelVariant::Split => split_table(),
    };
    let basis = derivation_basis(table);
    report.check(
        format!("oracle: dim Der({variant} table) = 14"),
        basis.len() == 14,
    );

    let model_sig = signature(&killing_gram(variant));
    let want = match variant {
        ModelVariant::Compact => Signature { positives: 0, negatives: 14, zeros: 0 },
        ModelVariant::Split => Signature { positives: 8, negatives: 6, zeros: 0 },
    };
    report.check(format!("model Killing signature is {want}"), model_sig == want);

    match operator_algebra_signature(&basis) {
        Some(oracle_sig) => {
            report.check(
                format!("oracle Killing signature {oracle_sig} matches the model"),
                oracle_sig == model_sig,
            );
        }
        None => report.check("oracle derivation algebra closes under commutators", false),
    }

    report.check("model is simple (ideal closure)", simplicity_check(variant));
    report
}
