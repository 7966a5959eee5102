//! The twisted ring-group model: elements, cocycles, bracket, and the
//! embedding into octonion derivations.
//!
//! An element is a formal sum of terms `(a,b) g_i` with `(a,b)` in the
//! coefficient ring `R ⊕ R` (componentwise operations) and `i` one of
//! the seven nonzero indices. The bracket of two terms lands on the
//! index `star(i,j)` with coefficient given by one of three cocycles
//! `σ`, selected by the offset `(j - i) mod 7`; the split variant flips
//! the sign exactly when both indices lie in `{3,5,6,7}`.

use crate::group::{self, line_through, wrap};
use crate::linalg::Matrix;
use crate::octonion::{op_e, op_f};
use crate::scalar::{parse_rational, rat, Field, Rational};
use crate::{Error, Result};
use std::fmt;

/// Which of the two real forms the bracket builds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModelVariant {
    Compact,
    Split,
}

impl fmt::Display for ModelVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelVariant::Compact => write!(f, "compact"),
            ModelVariant::Split => write!(f, "split"),
        }
    }
}

/// An element `(a, b)` of the coefficient ring `R ⊕ R`.
#[derive(Clone, Debug, PartialEq)]
pub struct RingPair<K: Field> {
    pub a: K,
    pub b: K,
}

impl<K: Field> RingPair<K> {
    pub fn new(a: K, b: K) -> Self {
        RingPair { a, b }
    }

    pub fn zero() -> Self {
        RingPair { a: K::zero(), b: K::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        RingPair::new(self.a.clone() + other.a.clone(), self.b.clone() + other.b.clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        RingPair::new(self.a.clone() - other.a.clone(), self.b.clone() - other.b.clone())
    }

    pub fn neg(&self) -> Self {
        RingPair::new(-self.a.clone(), -self.b.clone())
    }

    pub fn scale(&self, s: &K) -> Self {
        RingPair::new(self.a.clone() * s.clone(), self.b.clone() * s.clone())
    }

    /// Componentwise ring product — the `*` of `R ⊕ R`.
    pub fn cw_mul(&self, other: &Self) -> Self {
        RingPair::new(self.a.clone() * other.a.clone(), self.b.clone() * other.b.clone())
    }

    /// Convert a rational pair into any coefficient field.
    pub fn from_rational_pair(p: &RingPair<Rational>) -> Self {
        RingPair::new(K::from_rational(&p.a), K::from_rational(&p.b))
    }
}

/// Convenience constructor for rational pairs.
pub fn pair(a: i64, b: i64) -> RingPair<Rational> {
    RingPair::new(crate::scalar::rat_int(a), crate::scalar::rat_int(b))
}

impl<K: Field> fmt::Display for RingPair<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A 2x2 matrix acting on ring pairs as row vectors (`v ↦ v·M`).
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix2<K: Field> {
    pub entries: [[K; 2]; 2],
}

impl<K: Field> Matrix2<K> {
    pub fn new(entries: [[K; 2]; 2]) -> Self {
        Matrix2 { entries }
    }

    /// Row-vector action: `(a, b) ↦ (a m00 + b m10, a m01 + b m11)`.
    pub fn apply_row(&self, v: &RingPair<K>) -> RingPair<K> {
        let e = &self.entries;
        RingPair::new(
            v.a.clone() * e[0][0].clone() + v.b.clone() * e[1][0].clone(),
            v.a.clone() * e[0][1].clone() + v.b.clone() * e[1][1].clone(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let a = &self.entries;
        let b = &other.entries;
        let cell = |r: usize, c: usize| {
            a[r][0].clone() * b[0][c].clone() + a[r][1].clone() * b[1][c].clone()
        };
        Matrix2::new([[cell(0, 0), cell(0, 1)], [cell(1, 0), cell(1, 1)]])
    }

    pub fn identity() -> Self {
        Matrix2::new([[K::one(), K::zero()], [K::zero(), K::one()]])
    }
}

fn m2<K: Field>(rows: [[Rational; 2]; 2]) -> Matrix2<K> {
    Matrix2::new([
        [K::from_rational(&rows[0][0]), K::from_rational(&rows[0][1])],
        [K::from_rational(&rows[1][0]), K::from_rational(&rows[1][1])],
    ])
}

/// `P = (1/2) [[1, 1], [3, -1]]` — the change-of-line involution.
pub fn p_matrix<K: Field>() -> Matrix2<K> {
    m2([[rat(1, 2), rat(1, 2)], [rat(3, 2), rat(-1, 2)]])
}

/// `Θ = [[-1, 0], [0, 1]]`.
pub fn theta_matrix<K: Field>() -> Matrix2<K> {
    m2([[rat(-1, 1), rat(0, 1)], [rat(0, 1), rat(1, 1)]])
}

/// `Q̄ = (1/2) [[-1, -1], [3, -1]]`.
pub fn qbar_matrix<K: Field>() -> Matrix2<K> {
    m2([[rat(-1, 2), rat(-1, 2)], [rat(3, 2), rat(-1, 2)]])
}

/// The three cocycle families, indexed by the offset `(j - i) mod 7`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SigmaFamily {
    /// Offset 1: `σ_{i,i+1}`.
    Plus1,
    /// Offset 2: `σ_{i,i+2}`.
    Plus2,
    /// Offset 4: `σ_{i,i+4}`.
    Plus4,
}

impl SigmaFamily {
    /// Family for the offset `(j - i) mod 7`, when `i` comes first in
    /// the precedence order (offsets 1, 2, 4); `None` otherwise.
    pub fn from_offset(d: usize) -> Option<Self> {
        match d % 7 {
            1 => Some(SigmaFamily::Plus1),
            2 => Some(SigmaFamily::Plus2),
            4 => Some(SigmaFamily::Plus4),
            _ => None,
        }
    }

    pub fn offset(self) -> usize {
        match self {
            SigmaFamily::Plus1 => 1,
            SigmaFamily::Plus2 => 2,
            SigmaFamily::Plus4 => 4,
        }
    }

    pub const ALL: [SigmaFamily; 3] = [SigmaFamily::Plus1, SigmaFamily::Plus2, SigmaFamily::Plus4];
}

impl fmt::Display for SigmaFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "plus{}", self.offset())
    }
}

/// The cocycles in fully expanded polynomial form — the primary
/// definition, against which the matrix form is checked:
///
/// * offset 1: `¼((a−3b)a′ + 3(a+b)b′, (b−3a)b′ − (a+b)a′)`
/// * offset 2: `¼((a+3b)(a′−3b′), −(a−b)(a′+b′))`
/// * offset 4: `¼((a−3b)a′ − 3(a+b)b′, (a−3b)a′ + (a+b)b′)`
pub fn sigma_expanded<K: Field>(
    family: SigmaFamily,
    r: &RingPair<K>,
    rp: &RingPair<K>,
) -> RingPair<K> {
    let quarter = K::from_rational(&rat(1, 4));
    let three = K::from_rational(&rat(3, 1));
    let (a, b) = (r.a.clone(), r.b.clone());
    let (ap, bp) = (rp.a.clone(), rp.b.clone());
    let out = match family {
        SigmaFamily::Plus1 => RingPair::new(
            (a.clone() - three.clone() * b.clone()) * ap.clone()
                + three.clone() * (a.clone() + b.clone()) * bp.clone(),
            (b.clone() - three * a.clone()) * bp - (a + b) * ap,
        ),
        SigmaFamily::Plus2 => RingPair::new(
            (a.clone() + three.clone() * b.clone()) * (ap.clone() - three * bp.clone()),
            -((a - b) * (ap + bp)),
        ),
        SigmaFamily::Plus4 => RingPair::new(
            (a.clone() - three.clone() * b.clone()) * ap.clone()
                - three.clone() * (a.clone() + b.clone()) * bp.clone(),
            (a.clone() - three * b.clone()) * ap + (a + b) * bp,
        ),
    };
    out.scale(&quarter)
}

/// The cocycles in matrix form, row-vector convention:
///
/// * offset 1: `(r * r′P) Q̄ Θ`
/// * offset 2: `(rP * r′Q̄) Θ`
/// * offset 4: `(rQ̄ * r′) Q̄`
///
/// where `*` is the componentwise ring product. Must agree with
/// [`sigma_expanded`] everywhere.
pub fn sigma_matrix<K: Field>(
    family: SigmaFamily,
    r: &RingPair<K>,
    rp: &RingPair<K>,
) -> RingPair<K> {
    let p = p_matrix::<K>();
    let theta = theta_matrix::<K>();
    let qbar = qbar_matrix::<K>();
    match family {
        SigmaFamily::Plus1 => theta.apply_row(&qbar.apply_row(&r.cw_mul(&p.apply_row(rp)))),
        SigmaFamily::Plus2 => theta.apply_row(&p.apply_row(r).cw_mul(&qbar.apply_row(rp))),
        SigmaFamily::Plus4 => qbar.apply_row(&qbar.apply_row(r).cw_mul(rp)),
    }
}

/// Sign twist of the split variant: `-1` iff both indices lie in
/// `{3, 5, 6, 7}`, `+1` otherwise. The indices must differ.
pub fn split_sign(i: usize, j: usize) -> Result<i8> {
    group::check_index(i)?;
    group::check_index(j)?;
    if i == j {
        return Err(Error::EqualIndices(i));
    }
    Ok(if group::is_split_odd(i) && group::is_split_odd(j) {
        -1
    } else {
        1
    })
}

/// An element of the model: seven ring-pair coefficients, one per
/// nonzero index.
#[derive(Clone, Debug, PartialEq)]
pub struct G2Element<K: Field> {
    pairs: [RingPair<K>; 7],
}

impl<K: Field> G2Element<K> {
    pub fn zero() -> Self {
        G2Element { pairs: std::array::from_fn(|_| RingPair::zero()) }
    }

    /// The single term `(a,b) g_i`.
    pub fn term(i: usize, coeff: RingPair<K>) -> Result<Self> {
        group::check_index(i)?;
        let mut e = Self::zero();
        e.pairs[i - 1] = coeff;
        Ok(e)
    }

    /// Coefficient at index `i` (1-based).
    pub fn get(&self, i: usize) -> &RingPair<K> {
        &self.pairs[i - 1]
    }

    pub fn set(&mut self, i: usize, coeff: RingPair<K>) -> Result<()> {
        group::check_index(i)?;
        self.pairs[i - 1] = coeff;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.pairs.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        G2Element { pairs: std::array::from_fn(|i| self.pairs[i].add(&other.pairs[i])) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        G2Element { pairs: std::array::from_fn(|i| self.pairs[i].sub(&other.pairs[i])) }
    }

    pub fn neg(&self) -> Self {
        G2Element { pairs: std::array::from_fn(|i| self.pairs[i].neg()) }
    }

    pub fn scale(&self, s: &K) -> Self {
        G2Element { pairs: std::array::from_fn(|i| self.pairs[i].scale(s)) }
    }

    /// Indices carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        (1..=7).filter(|&i| !self.get(i).is_zero()).collect()
    }

    /// Coordinates in the canonical ordered basis
    /// `(1,0)g₁, (0,1)g₁, …, (1,0)g₇, (0,1)g₇`.
    pub fn to_coords(&self) -> Vec<K> {
        let mut v = Vec::with_capacity(14);
        for p in &self.pairs {
            v.push(p.a.clone());
            v.push(p.b.clone());
        }
        v
    }

    pub fn from_coords(coords: &[K]) -> Self {
        assert_eq!(coords.len(), 14, "canonical coordinates have length 14");
        G2Element {
            pairs: std::array::from_fn(|i| {
                RingPair::new(coords[2 * i].clone(), coords[2 * i + 1].clone())
            }),
        }
    }

    /// The `pos`-th canonical basis vector (`pos` in `0..14`): even
    /// positions are `(1,0)g_i`, odd positions `(0,1)g_i`, with
    /// `i = pos/2 + 1`.
    pub fn canonical_basis(pos: usize) -> Self {
        assert!(pos < 14, "canonical basis position must be < 14");
        let i = pos / 2 + 1;
        let coeff = if pos.is_multiple_of(2) {
            RingPair::new(K::one(), K::zero())
        } else {
            RingPair::new(K::zero(), K::one())
        };
        Self::term(i, coeff).expect("index in range")
    }

    /// Human-readable label of the `pos`-th canonical basis vector:
    /// `E1..E7` for `(1,0)g_i`, `F1..F7` for `(0,1)g_i`.
    pub fn canonical_label(pos: usize) -> String {
        assert!(pos < 14);
        let i = pos / 2 + 1;
        if pos.is_multiple_of(2) {
            format!("E{i}")
        } else {
            format!("F{i}")
        }
    }
}

impl<K: Field> fmt::Display for G2Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for i in 1..=7 {
            let p = self.get(i);
            if p.is_zero() {
                continue;
            }
            if wrote {
                write!(f, "+")?;
            }
            write!(f, "{p}g{i}")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Cursor-based parser for element specs, reporting byte positions on
/// failure. Grammar: `0` or a `+`-separated list of terms `(a,b)gi`
/// with rational `a`, `b`; whitespace is skipped between tokens.
struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor { bytes: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse { pos: self.pos, msg: msg.into() }
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        match self.peek() {
            Some(c) if c == b => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected '{}', found '{}'", b as char, c as char))),
            None => Err(self.err(format!("expected '{}', found end of input", b as char))),
        }
    }

    /// A rational literal: maximal run of digits, '-', '+', '/'.
    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() {
            let c = self.bytes[self.pos];
            if c.is_ascii_digit() || c == b'/' || ((c == b'-' || c == b'+') && self.pos == start) {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.pos == start {
            return Err(self.err("expected a rational number"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii slice");
        parse_rational(text).map_err(|e| Error::Parse { pos: start, msg: e.to_string() })
    }

    fn index(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected a basis index"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii slice");
        let i: usize = text
            .parse()
            .map_err(|_| Error::Parse { pos: start, msg: "bad basis index".into() })?;
        if !(1..=7).contains(&i) {
            return Err(Error::Parse { pos: start, msg: format!("basis index {i} outside 1..=7") });
        }
        Ok(i)
    }
}

/// Parse an element spec such as `"(1,0)g1"` or
/// `"(1/2,-3)g2 + (0,1)g7"`. The literal `"0"` denotes the zero
/// element. Errors carry the byte position of the offending token.
pub fn parse_element(s: &str) -> Result<G2Element<Rational>> {
    let mut cur = Cursor::new(s);
    if cur.peek() == Some(b'0') {
        let zero_pos = cur.pos;
        cur.pos += 1;
        if cur.peek().is_some() {
            return Err(Error::Parse {
                pos: zero_pos,
                msg: "'0' must stand alone as the zero element".into(),
            });
        }
        return Ok(G2Element::zero());
    }
    let mut out = G2Element::zero();
    loop {
        cur.expect(b'(')?;
        let a = cur.rational()?;
        cur.expect(b',')?;
        let b = cur.rational()?;
        cur.expect(b')')?;
        cur.expect(b'g')?;
        let i = cur.index()?;
        let term = G2Element::term(i, RingPair::new(a, b))?;
        out = out.add(&term);
        match cur.peek() {
            None => break,
            Some(b'+') => {
                cur.pos += 1;
            }
            Some(c) => {
                return Err(cur.err(format!("expected '+' or end of input, found '{}'", c as char)))
            }
        }
    }
    Ok(out)
}

/// The bracket of two elements in the chosen variant.
///
/// Same-index terms contribute nothing. A cross term at indices
/// `(i, j)` is normalized to the precedence order: when `i` precedes
/// `j` the contribution is `σ_d(r_i, r'_j)` at `star(i,j)` with
/// `d = (j - i) mod 7`; otherwise antisymmetry is applied once,
/// centrally. The split variant multiplies by `split_sign(i, j)`.
pub fn bracket<K: Field>(
    variant: ModelVariant,
    x: &G2Element<K>,
    y: &G2Element<K>,
) -> G2Element<K> {
    let mut out = G2Element::zero();
    for i in 1..=7usize {
        let xi = x.get(i);
        if xi.is_zero() {
            continue;
        }
        for j in 1..=7usize {
            if i == j {
                continue;
            }
            let yj = y.get(j);
            if yj.is_zero() {
                continue;
            }
            let target = group::star_unchecked(i, j);
            let mut coeff = if group::precedes_unchecked(i, j) {
                let d = (j + 7 - i) % 7;
                let family = SigmaFamily::from_offset(d).expect("precedes offset is 1, 2, or 4");
                sigma_expanded(family, xi, yj)
            } else {
                let d = (i + 7 - j) % 7;
                let family = SigmaFamily::from_offset(d).expect("precedes offset is 1, 2, or 4");
                sigma_expanded(family, yj, xi).neg()
            };
            if variant == ModelVariant::Split
                && group::is_split_odd(i)
                && group::is_split_odd(j)
            {
                coeff = coeff.neg();
            }
            let prev = out.get(target).add(&coeff);
            out.set(target, prev).expect("star of distinct indices is in range");
        }
    }
    out
}

/// The embedding into octonion derivations: `(a,b) g_i` maps to
/// `a E_i^{l_i, i+2} + b F_i^{l_i}` with `l_i = {i, i+1, i+3}`, and
/// the result is an 8x8 rational matrix over the octonion basis.
pub fn phi(x: &G2Element<Rational>) -> Matrix<Rational> {
    let mut out = Matrix::zero(8, 8);
    for i in 1..=7usize {
        let p = x.get(i);
        if p.is_zero() {
            continue;
        }
        let line = line_through(i, wrap(i + 1)).expect("consecutive indices span a line");
        let k = wrap(i + 2);
        let e = op_e(&line, i, k).expect("i+2 lies off the line {i, i+1, i+3}");
        let f = op_f(&line, i, k).expect("i+2 lies off the line {i, i+1, i+3}");
        out = out.add(&e.scale(&p.a)).add(&f.scale(&p.b));
    }
    out
}

/// Matrix of `y ↦ [x, y]` in the canonical ordered basis
/// `(1,0)g₁, (0,1)g₁, …, (1,0)g₇, (0,1)g₇` (14x14, columns are images
/// of basis vectors).
pub fn ad_matrix<K: Field>(variant: ModelVariant, x: &G2Element<K>) -> Matrix<K> {
    let mut m = Matrix::zero(14, 14);
    for pos in 0..14 {
        let image = bracket(variant, x, &G2Element::canonical_basis(pos));
        let coords = image.to_coords();
        for (row, val) in coords.into_iter().enumerate() {
            m.set(row, pos, val);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn rpair(a: Rational, b: Rational) -> RingPair<Rational> {
        RingPair::new(a, b)
    }

    fn random_pair(rng: &mut ChaCha8Rng) -> RingPair<Rational> {
        let part = |rng: &mut ChaCha8Rng| {
            rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
        };
        RingPair::new(part(rng), part(rng))
    }

    #[test]
    fn sigma_expanded_matches_frozen_values() {
        let unit = pair(1, 0);
        let fu = pair(0, 1);
        assert_eq!(
            sigma_expanded(SigmaFamily::Plus1, &unit, &unit),
            rpair(rat(1, 4), rat(-1, 4))
        );
        assert_eq!(
            sigma_expanded(SigmaFamily::Plus1, &unit, &fu),
            rpair(rat(3, 4), rat(-3, 4))
        );
        assert_eq!(
            sigma_expanded(SigmaFamily::Plus2, &unit, &unit),
            rpair(rat(1, 4), rat(-1, 4))
        );
        assert_eq!(
            sigma_expanded(SigmaFamily::Plus4, &unit, &unit),
            rpair(rat(1, 4), rat(1, 4))
        );
        assert_eq!(
            sigma_expanded(SigmaFamily::Plus2, &fu, &fu),
            rpair(rat(-9, 4), rat(1, 4))
        );
        // (3,-1) lies in the kernel of pairing against (1,0) in family 1.
        assert!(sigma_expanded(SigmaFamily::Plus1, &unit, &pair(3, -1)).is_zero());
    }

    #[test]
    fn sigma_matrix_equals_sigma_expanded() {
        // Structured sweep over small integer coordinates.
        for fam in SigmaFamily::ALL {
            for a in -2..=2i64 {
                for b in -2..=2i64 {
                    for ap in -2..=2i64 {
                        for bp in -2..=2i64 {
                            let r = pair(a, b);
                            let rp = pair(ap, bp);
                            assert_eq!(
                                sigma_matrix(fam, &r, &rp),
                                sigma_expanded(fam, &r, &rp),
                                "{fam} at ({a},{b}),({ap},{bp})"
                            );
                        }
                    }
                }
            }
        }
        // Random rational samples.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        for _ in 0..120 {
            let r = random_pair(&mut rng);
            let rp = random_pair(&mut rng);
            for fam in SigmaFamily::ALL {
                assert_eq!(sigma_matrix(fam, &r, &rp), sigma_expanded(fam, &r, &rp));
            }
        }
    }

    #[test]
    fn p_matrix_is_an_involution() {
        assert_eq!(p_matrix::<Rational>().mul(&p_matrix()), Matrix2::identity());
    }

    #[test]
    fn split_sign_follows_the_parity_rule() {
        assert_eq!(split_sign(5, 6).unwrap(), -1);
        assert_eq!(split_sign(2, 3).unwrap(), 1);
        assert_eq!(split_sign(3, 7).unwrap(), -1);
        assert_eq!(split_sign(1, 2).unwrap(), 1);
        assert!(split_sign(4, 4).is_err());
        assert!(split_sign(0, 3).is_err());
        for i in 1..=7usize {
            for j in 1..=7usize {
                if i == j {
                    continue;
                }
                let want = if [3, 5, 6, 7].contains(&i) && [3, 5, 6, 7].contains(&j) {
                    -1
                } else {
                    1
                };
                assert_eq!(split_sign(i, j).unwrap(), want);
            }
        }
    }

    #[test]
    fn bracket_matches_frozen_examples() {
        let x = G2Element::term(1, pair(1, 0)).unwrap();
        let y = G2Element::term(2, pair(1, 0)).unwrap();
        let want = G2Element::term(4, rpair(rat(1, 4), rat(-1, 4))).unwrap();
        assert_eq!(bracket(ModelVariant::Compact, &x, &y), want);

        // Same-index terms vanish.
        let z1 = G2Element::term(3, pair(2, -5)).unwrap();
        let z2 = G2Element::term(3, pair(7, 1)).unwrap();
        assert!(bracket(ModelVariant::Compact, &z1, &z2).is_zero());
        assert!(bracket(ModelVariant::Split, &z1, &z2).is_zero());

        // Split flips the sign of the (3,5) cross term.
        let u = G2Element::term(3, pair(1, 0)).unwrap();
        let v = G2Element::term(5, pair(1, 0)).unwrap();
        let compact = bracket(ModelVariant::Compact, &u, &v);
        let split = bracket(ModelVariant::Split, &u, &v);
        assert_eq!(
            compact,
            G2Element::term(2, rpair(rat(1, 4), rat(-1, 4))).unwrap()
        );
        assert_eq!(split, compact.neg());
        assert_eq!(
            split,
            G2Element::term(2, rpair(rat(-1, 4), rat(1, 4))).unwrap()
        );

        // Kernel row: (3,-1) against the E generator in family 1.
        let e1 = G2Element::term(1, pair(1, 0)).unwrap();
        let k2 = G2Element::term(2, pair(3, -1)).unwrap();
        assert!(bracket(ModelVariant::Compact, &e1, &k2).is_zero());
    }

    #[test]
    fn bracket_is_antisymmetric_and_graded() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for variant in [ModelVariant::Compact, ModelVariant::Split] {
            for i in 1..=7usize {
                for j in 1..=7usize {
                    let x = G2Element::term(i, random_pair(&mut rng)).unwrap();
                    let y = G2Element::term(j, random_pair(&mut rng)).unwrap();
                    let xy = bracket(variant, &x, &y);
                    let yx = bracket(variant, &y, &x);
                    assert_eq!(xy, yx.neg(), "antisymmetry at ({i},{j})");
                    if i == j {
                        assert!(xy.is_zero());
                    } else {
                        let target = crate::group::star(i, j).unwrap();
                        for s in xy.support() {
                            assert_eq!(s, target, "grading at ({i},{j})");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn bracket_is_bilinear() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let random_element = |rng: &mut ChaCha8Rng| {
            let mut e = G2Element::zero();
            for i in 1..=7 {
                e.set(i, random_pair(rng)).unwrap();
            }
            e
        };
        for variant in [ModelVariant::Compact, ModelVariant::Split] {
            let x = random_element(&mut rng);
            let y = random_element(&mut rng);
            let z = random_element(&mut rng);
            let s = rat(3, 7);
            let lhs = bracket(variant, &x.add(&y.scale(&s)), &z);
            let rhs = bracket(variant, &x, &z).add(&bracket(variant, &y, &z).scale(&s));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn phi_maps_basis_terms_to_the_stated_operators() {
        use crate::group::line_through;
        let l1 = line_through(1, 2).unwrap();
        let e1 = phi(&G2Element::term(1, pair(1, 0)).unwrap());
        assert_eq!(e1, op_e(&l1, 1, 3).unwrap());
        let l2 = line_through(2, 3).unwrap();
        let f2 = phi(&G2Element::term(2, pair(0, 1)).unwrap());
        assert_eq!(f2, op_f(&l2, 2, 4).unwrap());
        assert!(phi(&G2Element::term(5, RingPair::zero()).unwrap()).is_zero());
        // Linearity.
        let x = G2Element::term(1, pair(2, -3)).unwrap();
        let y = G2Element::term(4, pair(1, 5)).unwrap();
        assert_eq!(phi(&x.add(&y)), phi(&x).add(&phi(&y)));
    }

    #[test]
    fn phi_intertwines_sample_brackets() {
        let t = crate::octonion::division_table();
        let x = G2Element::term(1, pair(1, 0)).unwrap();
        let y = G2Element::term(2, pair(0, 1)).unwrap();
        let lhs = phi(&bracket(ModelVariant::Compact, &x, &y));
        let rhs = phi(&x).commutator(&phi(&y));
        assert_eq!(lhs, rhs);
        assert!(crate::octonion::is_derivation(&lhs, t));
    }

    #[test]
    fn ad_matrix_traces_match_frozen_values() {
        use num_traits::Zero;
        let e1 = G2Element::term(1, pair(1, 0)).unwrap();
        let f1 = G2Element::term(1, pair(0, 1)).unwrap();
        let ad_e = ad_matrix(ModelVariant::Compact, &e1);
        let ad_f = ad_matrix(ModelVariant::Compact, &f1);
        assert!(ad_e.mul(&ad_f).trace().is_zero());
        assert_eq!(ad_e.mul(&ad_e).trace(), rat_int(-4));
        assert_eq!(ad_f.mul(&ad_f).trace(), rat_int(-12));
    }

    #[test]
    fn ad_matrix_columns_agree_with_bracket() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        let mut x = G2Element::zero();
        for i in 1..=7 {
            x.set(i, random_pair(&mut rng)).unwrap();
        }
        for variant in [ModelVariant::Compact, ModelVariant::Split] {
            let m = ad_matrix(variant, &x);
            for pos in 0..14 {
                let want = bracket(variant, &x, &G2Element::canonical_basis(pos));
                let col: Vec<Rational> = (0..14).map(|r| m.at(r, pos).clone()).collect();
                assert_eq!(G2Element::from_coords(&col), want);
            }
        }
    }

    #[test]
    fn element_display_and_parse_round_trip() {
        let x = G2Element::term(1, rpair(rat(1, 4), rat(-1, 4))).unwrap();
        assert_eq!(x.to_string(), "(1/4,-1/4)g1");
        let y = x
            .add(&G2Element::term(7, pair(2, 0)).unwrap())
            .add(&G2Element::term(3, rpair(rat(0, 1), rat(-5, 3))).unwrap());
        assert_eq!(y.to_string(), "(1/4,-1/4)g1+(0,-5/3)g3+(2,0)g7");
        assert_eq!(parse_element(&y.to_string()).unwrap(), y);
        assert_eq!(G2Element::<Rational>::zero().to_string(), "0");
        assert_eq!(parse_element("0").unwrap(), G2Element::zero());
    }

    #[test]
    fn parse_accepts_whitespace_and_merges_repeats() {
        let e = parse_element(" ( 1/2 , -3 ) g2 + ( 1 , 0 ) g2 ").unwrap();
        assert_eq!(
            e,
            G2Element::term(2, rpair(rat(3, 2), rat(-3, 1))).unwrap()
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_element("(1,0)g8") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 6),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_element("(1,0") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_element("x") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_element("(1,0)g1 * (0,1)g2") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
        match parse_element("(1,,0)g1") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        assert!(parse_element("").is_err());
    }

    #[test]
    fn canonical_basis_labels_and_order() {
        assert_eq!(G2Element::<Rational>::canonical_label(0), "E1");
        assert_eq!(G2Element::<Rational>::canonical_label(1), "F1");
        assert_eq!(G2Element::<Rational>::canonical_label(12), "E7");
        assert_eq!(G2Element::<Rational>::canonical_label(13), "F7");
        let e3 = G2Element::<Rational>::canonical_basis(4);
        assert_eq!(e3, G2Element::term(3, pair(1, 0)).unwrap());
        let coords = e3.to_coords();
        assert_eq!(coords.len(), 14);
        assert_eq!(coords[4], rat_int(1));
        assert_eq!(G2Element::from_coords(&coords), e3);
    }
}
