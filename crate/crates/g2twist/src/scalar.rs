//! Exact scalars: arbitrary-precision rationals, the real quadratic
//! field Q(sqrt 3), and univariate rational polynomials.
//!
//! Rationals are kept in canonical reduced form (positive denominator,
//! coprime parts), so structural equality is value equality. The same
//! holds for `QSqrt3`, whose two components are canonical rationals.
//! Nothing here is approximate: these are the only scalar types the rest
//! of the crate computes with.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number in canonical reduced form.
pub type Rational = num_rational::BigRational;

/// Shorthand constructor: `rat(n, d)` is the rational n/d.
///
/// Panics if `d == 0`; use [`checked_div`] for fallible division of
/// existing values.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand constructor for an integer rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Exact division with an explicit error on a zero divisor.
pub fn checked_div(x: &Rational, y: &Rational) -> Result<Rational> {
    if y.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(x / y)
}

/// Parse a rational from "p/q" or plain integer form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let err = |msg: &str| Error::Parse { pos: 0, msg: format!("{msg}: {t:?}") };
    if t.is_empty() {
        return Err(err("empty rational"));
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let d: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Rational::new(n, d))
}

/// An exact scalar field the model can be built over.
///
/// Implemented by [`Rational`] and [`QSqrt3`]. Floating-point types are
/// deliberately not implementors: every check in this crate is an exact
/// equality, which rounding would silently break.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Embed a rational constant into the field.
    fn from_rational(r: &Rational) -> Self;
}

impl Field for Rational {
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

/// Element a + b*sqrt(3) of the real quadratic field Q(sqrt 3).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSqrt3 {
    pub rat_part: Rational,
    pub sqrt3_part: Rational,
}

impl QSqrt3 {
    pub fn new(rat_part: Rational, sqrt3_part: Rational) -> Self {
        QSqrt3 { rat_part, sqrt3_part }
    }

    pub fn from_parts(a: Rational, b: Rational) -> Self {
        Self::new(a, b)
    }

    /// The generator sqrt(3).
    pub fn sqrt3() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    /// Multiplicative inverse; errors on zero.
    ///
    /// Uses the conjugate: (a + b s)^-1 = (a - b s)/(a^2 - 3 b^2), and
    /// the norm a^2 - 3 b^2 vanishes only at zero because 3 is not a
    /// rational square.
    pub fn inv(&self) -> Result<QSqrt3> {
        let norm = &self.rat_part * &self.rat_part
            - rat_int(3) * &self.sqrt3_part * &self.sqrt3_part;
        if norm.is_zero() {
            return Err(Error::InverseOfZero);
        }
        Ok(QSqrt3::new(&self.rat_part / &norm, -&self.sqrt3_part / &norm))
    }

    /// True if the element is a plain rational (sqrt3 part zero).
    pub fn is_rational(&self) -> bool {
        self.sqrt3_part.is_zero()
    }
}

impl fmt::Display for QSqrt3 {
    /// Serialized as "a+b√3" with both parts in rational form; a
    /// negative sqrt3 part folds its sign into the joining operator,
    /// and a zero part is suppressed ("-3/8", "1/8√3", "0").
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sqrt3_part.is_zero() {
            write!(f, "{}", self.rat_part)
        } else if self.rat_part.is_zero() {
            write!(f, "{}√3", self.sqrt3_part)
        } else if self.sqrt3_part.is_negative() {
            write!(f, "{}-{}√3", self.rat_part, -&self.sqrt3_part)
        } else {
            write!(f, "{}+{}√3", self.rat_part, self.sqrt3_part)
        }
    }
}

/// Parse "a+b√3" / "a-b√3" / "b√3" (as produced by Display), or a bare
/// rational.
pub fn parse_qsqrt3(s: &str) -> Result<QSqrt3> {
    let t = s.trim();
    let body = match t.strip_suffix("√3") {
        Some(b) => b,
        None => return Ok(QSqrt3::new(parse_rational(t)?, Rational::zero())),
    };
    // Split at the last sign that joins the two parts; it cannot sit at
    // position 0 (that sign belongs to the leading rational). With no
    // joining sign the whole body is the sqrt3 coefficient.
    let bytes = body.as_bytes();
    let split = (1..bytes.len()).rev().find(|&i| bytes[i] == b'+' || bytes[i] == b'-');
    let Some(split) = split else {
        return Ok(QSqrt3::new(Rational::zero(), parse_rational(body)?));
    };
    let a = parse_rational(&body[..split])?;
    let b = parse_rational(&body[split + 1..])?;
    let b = if body[split..].starts_with('-') { -b } else { b };
    Ok(QSqrt3::new(a, b))
}

impl Add for QSqrt3 {
    type Output = QSqrt3;
    fn add(self, rhs: QSqrt3) -> QSqrt3 {
        QSqrt3::new(self.rat_part + rhs.rat_part, self.sqrt3_part + rhs.sqrt3_part)
    }
}

impl Sub for QSqrt3 {
    type Output = QSqrt3;
    fn sub(self, rhs: QSqrt3) -> QSqrt3 {
        QSqrt3::new(self.rat_part - rhs.rat_part, self.sqrt3_part - rhs.sqrt3_part)
    }
}

impl Neg for QSqrt3 {
    type Output = QSqrt3;
    fn neg(self) -> QSqrt3 {
        QSqrt3::new(-self.rat_part, -self.sqrt3_part)
    }
}

impl Mul for QSqrt3 {
    type Output = QSqrt3;
    /// (a + b s)(a' + b' s) with s^2 = 3.
    fn mul(self, rhs: QSqrt3) -> QSqrt3 {
        let a = &self.rat_part * &rhs.rat_part
            + rat_int(3) * &self.sqrt3_part * &rhs.sqrt3_part;
        let b = &self.rat_part * &rhs.sqrt3_part + &self.sqrt3_part * &rhs.rat_part;
        QSqrt3::new(a, b)
    }
}

impl Div for QSqrt3 {
    type Output = QSqrt3;
    // Division is multiplication by the conjugate-based inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: QSqrt3) -> QSqrt3 {
        self * rhs.inv().expect("division of QSqrt3 by zero")
    }
}

impl Zero for QSqrt3 {
    fn zero() -> Self {
        QSqrt3::new(Rational::zero(), Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.rat_part.is_zero() && self.sqrt3_part.is_zero()
    }
}

impl One for QSqrt3 {
    fn one() -> Self {
        QSqrt3::new(Rational::one(), Rational::zero())
    }
}

impl Field for QSqrt3 {
    fn from_rational(r: &Rational) -> Self {
        QSqrt3::new(r.clone(), Rational::zero())
    }
}

/// Univariate polynomial over the rationals, coefficients lowest degree
/// first, trailing zeros stripped (so the zero polynomial is the empty
/// coefficient list).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Build from small integer coefficients, lowest degree first.
    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&n| rat_int(n)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::new(vec![Rational::one()])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            out[i] += c;
        }
        Polynomial::new(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }

    pub fn scale(&self, s: &Rational) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: returns (quotient, remainder). Panics on a
    /// zero divisor, which never arises from the gcd loop below.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); self.coeffs.len().saturating_sub(d)];
        while rem.len() > d {
            let k = rem.len() - 1 - d;
            let factor = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let v = c * &factor;
                rem[k + i] -= v;
            }
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
            quot[k] = factor;
        }
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Scale so the leading coefficient is one (zero stays zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => Polynomial::zero(),
            Some(l) => {
                let inv = Rational::one() / l;
                self.scale(&inv)
            }
        }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| rat_int(i as i64 + 1) * c)
                .collect(),
        )
    }
}

/// Monic greatest common divisor by the Euclidean algorithm.
///
/// Errors if both arguments are zero.
pub fn poly_gcd(p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut a = p.clone();
    let mut b = q.clone();
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// True iff the nonzero polynomial has no repeated irreducible factor,
/// i.e. gcd(p, p') is constant.
pub fn is_squarefree(p: &Polynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == Some(0) {
        return Ok(true);
    }
    let g = poly_gcd(p, &p.derivative())?;
    Ok(g.degree() == Some(0))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_negative() { ("-", -c) } else { ("+", c.clone()) };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {sign} ")?;
            }
            let coeff_is_one = mag.is_one();
            match (i, coeff_is_one) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{mag}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> Rational {
        rat(n, d)
    }

    #[test]
    fn rational_arithmetic_is_exact_and_canonical() {
        assert_eq!(q(1, 2) + q(1, 2), rat_int(1));
        assert_eq!(q(1, 4) * rat_int(4), rat_int(1));
        assert_eq!(q(-3, 4) + q(1, 4), q(-1, 2));
        // Canonical form: same value, same representation.
        assert_eq!(q(2, 4), q(1, 2));
        assert_eq!(format!("{}", q(-6, 8)), "-3/4");
        assert_eq!(format!("{}", rat_int(4)), "4");
    }

    #[test]
    fn rational_division_by_zero_is_an_error() {
        assert!(matches!(
            checked_div(&rat_int(1), &rat_int(0)),
            Err(Error::DivisionByZero)
        ));
        assert_eq!(checked_div(&q(1, 2), &q(1, 4)).unwrap(), rat_int(2));
    }

    #[test]
    fn rational_parsing_round_trips() {
        for s in ["-3/4", "1/4", "4", "0", "-12"] {
            let v = parse_rational(s).unwrap();
            assert_eq!(format!("{v}"), s);
        }
        assert_eq!(parse_rational(" 2/4 ").unwrap(), q(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn sqrt3_squares_to_three() {
        let s = QSqrt3::sqrt3();
        assert_eq!(s.clone() * s, QSqrt3::from_rational(&rat_int(3)));
    }

    #[test]
    fn sqrt3_inverse_of_two_plus_sqrt3() {
        // (2 + sqrt3)(2 - sqrt3) = 1.
        let x = QSqrt3::new(rat_int(2), rat_int(1));
        assert_eq!(x.inv().unwrap(), QSqrt3::new(rat_int(2), rat_int(-1)));
    }

    #[test]
    fn sqrt3_squared_reciprocal() {
        // 1/(2 sqrt3) is (0, 1/6); its square is (1/12, 0).
        let x = QSqrt3::new(rat_int(0), q(1, 6));
        assert_eq!(x.clone() * x, QSqrt3::new(q(1, 12), rat_int(0)));
    }

    #[test]
    fn sqrt3_inverse_of_zero_is_an_error() {
        assert!(matches!(QSqrt3::zero().inv(), Err(Error::InverseOfZero)));
    }

    #[test]
    fn sqrt3_display_and_parse_round_trip() {
        let vals = [
            QSqrt3::new(rat_int(0), q(1, 8)),
            QSqrt3::new(q(-3, 8), rat_int(0)),
            QSqrt3::new(q(1, 2), q(-5, 3)),
            QSqrt3::zero(),
        ];
        for v in vals {
            let s = format!("{v}");
            assert_eq!(parse_qsqrt3(&s).unwrap(), v);
        }
        assert_eq!(format!("{}", QSqrt3::new(rat_int(0), q(1, 8))), "1/8√3");
        assert_eq!(format!("{}", QSqrt3::new(q(-3, 8), rat_int(0))), "-3/8");
        assert_eq!(format!("{}", QSqrt3::new(q(1, 2), q(-5, 3))), "1/2-5/3√3");
        assert_eq!(format!("{}", QSqrt3::zero()), "0");
        // A bare rational is accepted as having zero sqrt3 part.
        assert_eq!(parse_qsqrt3("-3/4").unwrap(), QSqrt3::new(q(-3, 4), rat_int(0)));
    }

    fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
        rat(rng.gen_range(-9..=9), rng.gen_range(1..=9))
    }

    fn random_qsqrt3(rng: &mut ChaCha8Rng) -> QSqrt3 {
        QSqrt3::new(random_rational(rng), random_rational(rng))
    }

    #[test]
    fn field_axioms_hold_on_random_samples() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..200 {
            let (x, y, z) = (
                random_rational(&mut rng),
                random_rational(&mut rng),
                random_rational(&mut rng),
            );
            assert_eq!((&x + &y) + &z, &x + (&y + &z));
            assert_eq!((&x * &y) * &z, &x * (&y * &z));
            assert_eq!(&x * (&y + &z), &x * &y + &x * &z);
            assert_eq!(&x + (-&x), Rational::zero());
            if !x.is_zero() {
                assert_eq!(checked_div(&(&x * &y), &x).unwrap(), y);
            }

            let (u, v, w) = (
                random_qsqrt3(&mut rng),
                random_qsqrt3(&mut rng),
                random_qsqrt3(&mut rng),
            );
            assert_eq!(
                (u.clone() + v.clone()) + w.clone(),
                u.clone() + (v.clone() + w.clone())
            );
            assert_eq!(
                (u.clone() * v.clone()) * w.clone(),
                u.clone() * (v.clone() * w.clone())
            );
            assert_eq!(
                u.clone() * (v.clone() + w.clone()),
                u.clone() * v.clone() + u.clone() * w.clone()
            );
            assert_eq!(u.clone() + (-u.clone()), QSqrt3::zero());
            if !u.is_zero() {
                assert_eq!(u.clone() * u.inv().unwrap(), QSqrt3::one());
            }
        }
    }

    #[test]
    fn polynomial_gcd_of_difference_of_squares() {
        // gcd(x^2 - 1, x - 1) = x - 1.
        let p = Polynomial::from_ints(&[-1, 0, 1]);
        let q = Polynomial::from_ints(&[-1, 1]);
        assert_eq!(poly_gcd(&p, &q).unwrap(), q);
    }

    #[test]
    fn polynomial_gcd_with_shared_quadratic_factor() {
        // gcd(x(x^2+1), x^2+1) = x^2+1.
        let x2p1 = Polynomial::from_ints(&[1, 0, 1]);
        let p = Polynomial::x().mul(&x2p1);
        assert_eq!(poly_gcd(&p, &x2p1).unwrap(), x2p1);
    }

    #[test]
    fn polynomial_gcd_of_coprime_factors_is_one() {
        // gcd(x^2+1, x^2+1/4) = 1.
        let p = Polynomial::from_ints(&[1, 0, 1]);
        let q = Polynomial::new(vec![rat(1, 4), Rational::zero(), rat_int(1)]);
        assert_eq!(poly_gcd(&p, &q).unwrap(), Polynomial::one());
    }

    #[test]
    fn gcd_of_two_zero_polynomials_is_an_error() {
        assert!(poly_gcd(&Polynomial::zero(), &Polynomial::zero()).is_err());
    }

    #[test]
    fn squarefree_detection() {
        // x(x^2+1)(x^2+1/4): distinct irreducible factors.
        let p = Polynomial::x()
            .mul(&Polynomial::from_ints(&[1, 0, 1]))
            .mul(&Polynomial::new(vec![rat(1, 4), Rational::zero(), rat_int(1)]));
        assert!(is_squarefree(&p).unwrap());
        // x^2(x+1) has a repeated factor.
        let q = Polynomial::from_ints(&[0, 0, 1]).mul(&Polynomial::from_ints(&[1, 1]));
        assert!(!is_squarefree(&q).unwrap());
        assert!(is_squarefree(&Polynomial::x()).unwrap());
        assert!(matches!(
            is_squarefree(&Polynomial::zero()),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn polynomial_division_and_display() {
        let p = Polynomial::from_ints(&[-1, 0, 1]); // x^2 - 1
        let d = Polynomial::from_ints(&[-1, 1]); // x - 1
        let (q, r) = p.div_rem(&d);
        assert_eq!(q, Polynomial::from_ints(&[1, 1]));
        assert!(r.is_zero());
        assert_eq!(format!("{p}"), "x^2 - 1");
        let m = Polynomial::new(vec![
            Rational::zero(),
            rat(1, 4),
            Rational::zero(),
            rat(5, 4),
            Rational::zero(),
            rat_int(1),
        ]);
        assert_eq!(format!("{m}"), "x^5 + 5/4x^3 + 1/4x");
    }
}
