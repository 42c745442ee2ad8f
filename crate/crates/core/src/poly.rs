//! Dense univariate polynomials in the Conway variable `z`.
//!
//! [`Poly`] is generic over its coefficient ring. Conway polynomials are
//! carried with arbitrary-precision coefficients (see [`crate::IntPoly`]);
//! machine-word coefficients are available for quick experiments.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed};
use thiserror::Error;

/// Coefficient ring requirements: an ordered, signed, exact integer-like type.
pub trait Coeff: Clone + Ord + Signed + FromPrimitive + fmt::Display + FromStr {}

impl<T> Coeff for T where T: Clone + Ord + Signed + FromPrimitive + fmt::Display + FromStr {}

/// Which powers of `z` carry nonzero coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
    Zero,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial syntax error at position {pos}: {msg}")]
pub struct ParsePolyError {
    pub pos: usize,
    pub msg: String,
}

/// Polynomial `Σ coeffs[k] z^k`, stored dense and normalized (no trailing zeros).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Coeff> Poly<T> {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The monomial `z`.
    pub fn z() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        let mut p = Poly { coeffs };
        p.normalize();
        p
    }

    /// Convenience constructor from small integers.
    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(
            coeffs
                .iter()
                .map(|&c| T::from_i64(c).expect("coefficient out of range"))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^k`; zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if k % 2 == 0 {
                    even = true;
                } else {
                    odd = true;
                }
            }
        }
        match (even, odd) {
            (false, false) => Parity::Zero,
            (true, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    /// `p(-z)`. For a link diagram this is the polynomial of its mirror image.
    pub fn negate_variable(&self) -> Self {
        Poly {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        }
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Coeff> Default for Poly<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<T: Coeff> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::from_coeffs(out)
    }
}

impl<T: Coeff> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl<T: Coeff> $tr for Poly<T> {
            type Output = Poly<T>;

            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl<T: Coeff> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

/// Canonical text form: ascending powers, zero terms omitted, `z^k` style,
/// unit coefficients elided, `"0"` for the zero polynomial.
impl<T: Coeff> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if k == 1 {
                f.write_str("z")?;
            } else {
                write!(f, "z^{k}")?;
            }
        }
        Ok(())
    }
}

impl<T: Coeff> FromStr for Poly<T> {
    type Err = ParsePolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyParser::new(s).parse()
    }
}

/// Parses `term (('+'|'-') term)*` where a term is `int`, `int? z` or
/// `int? z^int`. Whitespace is ignored and an optional `*` may separate a
/// coefficient from `z`. A leading sign is accepted on the first term.
pub fn parse_poly<T: Coeff>(text: &str) -> Result<Poly<T>, ParsePolyError> {
    text.parse()
}

pub fn format_poly<T: Coeff>(p: &Poly<T>) -> String {
    p.to_string()
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(s: &'a str) -> Self {
        PolyParser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParsePolyError {
        ParsePolyError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn parse<T: Coeff>(mut self) -> Result<Poly<T>, ParsePolyError> {
        let mut coeffs: Vec<T> = Vec::new();
        let mut negative = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            None => return Err(self.err("empty input")),
            _ => false,
        };
        loop {
            let (c, k) = self.term::<T>()?;
            let c = if negative { -c } else { c };
            if coeffs.len() <= k {
                coeffs.resize(k + 1, T::zero());
            }
            coeffs[k] = coeffs[k].clone() + c;
            match self.peek() {
                None => break,
                Some(b'+') => negative = false,
                Some(b'-') => negative = true,
                Some(ch) => return Err(self.err(format!("unexpected character '{}'", ch as char))),
            }
            self.pos += 1;
        }
        Ok(Poly::from_coeffs(coeffs))
    }

    fn term<T: Coeff>(&mut self) -> Result<(T, usize), ParsePolyError> {
        let coeff_pos = self.pos;
        let coeff = match self.digits() {
            Some(d) => Some(d.parse::<T>().map_err(|_| ParsePolyError {
                pos: coeff_pos,
                msg: "bad integer".into(),
            })?),
            None => None,
        };
        if coeff.is_some() && self.peek() == Some(b'*') {
            self.pos += 1;
            if self.peek() != Some(b'z') {
                return Err(self.err("expected 'z' after '*'"));
            }
        }
        if self.peek() != Some(b'z') {
            return match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.err("expected a term")),
            };
        }
        self.pos += 1;
        let coeff = coeff.unwrap_or_else(T::one);
        if self.peek() != Some(b'^') {
            return Ok((coeff, 1));
        }
        self.pos += 1;
        let exp_pos = self.pos;
        let exp = self
            .digits()
            .ok_or_else(|| self.err("expected exponent after '^'"))?
            .parse::<usize>()
            .map_err(|_| ParsePolyError {
                pos: exp_pos,
                msg: "exponent out of range".into(),
            })?;
        Ok((coeff, exp))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    type P = Poly<BigInt>;

    fn p(s: &str) -> P {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(&P::zero() + &P::zero(), P::zero());
        assert_eq!(&p("1+z^2") + &p("-1-z^2"), P::zero());
        assert_eq!(&p("1+4z^2+3z^4+z^6") + &p("z^4"), p("1+4z^2+4z^4+z^6"));
    }

    #[test]
    fn sub_examples() {
        assert_eq!(
            &p("1+4z^2+8z^4+6z^6+z^8") - &p("1+4z^2+3z^4+z^6"),
            p("5z^4+5z^6+z^8")
        );
        let q = p("3-z+7z^5");
        assert!((&q - &q).is_zero());
        assert_eq!(&P::z() - &P::zero(), P::z());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(
            &p("1+5z^2+5z^4+z^6") * &p("1+z^2"),
            p("1+6z^2+10z^4+6z^6+z^8")
        );
        let q = p("2-z^3");
        assert_eq!(&q * &P::one(), q);
        assert!((&q * &P::zero()).is_zero());
    }

    #[test]
    fn shift_examples() {
        assert_eq!(p("2z+2z^3").shift(1), p("2z^2+2z^4"));
        assert_eq!(p("1+z").shift(0), p("1+z"));
        assert!(P::zero().shift(5).is_zero());
    }

    #[test]
    fn coeff_examples() {
        let q = p("1+4z^2+3z^4+z^6");
        assert_eq!(q.coeff(2), BigInt::from(4));
        assert_eq!(p("1+z^2").coeff(7), BigInt::from(0));
        assert_eq!(P::zero().coeff(0), BigInt::from(0));
    }

    #[test]
    fn parity_examples() {
        assert_eq!(p("1+4z^2+3z^4+z^6").parity(), Parity::Even);
        assert_eq!(p("2z+2z^3").parity(), Parity::Odd);
        assert_eq!(p("1+z").parity(), Parity::Mixed);
        assert_eq!(P::zero().parity(), Parity::Zero);
    }

    #[test]
    fn parse_examples() {
        assert_eq!(p("1+4z^2+3z^4+z^6"), P::from_i64s(&[1, 0, 4, 0, 3, 0, 1]));
        assert!(p("0").is_zero());
        let err = "1+".parse::<P>().unwrap_err();
        assert_eq!(err.pos, 2);
        assert!("z^".parse::<P>().is_err());
        assert!("1+x".parse::<P>().is_err());
        assert!("".parse::<P>().is_err());
    }

    #[test]
    fn parse_tolerates_table_style() {
        assert_eq!(p("1+ 5*z^2+ 5*z^4+ z^6"), p("1+5z^2+5z^4+z^6"));
        assert_eq!(p("-2*z + z^3"), P::from_i64s(&[0, -2, 0, 1]));
        assert_eq!(p("z+z"), p("2z"));
    }

    #[test]
    fn format_examples() {
        assert_eq!(P::zero().to_string(), "0");
        assert_eq!(P::from_i64s(&[0, -2, 0, 1]).to_string(), "-2z+z^3");
        assert_eq!(P::from_i64s(&[-1, 1, -1]).to_string(), "-1+z-z^2");
        assert_eq!(
            P::from_i64s(&[0, 0, 0, 0, 5, 0, 5, 0, 1]).to_string(),
            "5z^4+5z^6+z^8"
        );
    }

    #[test]
    fn machine_word_coefficients() {
        let a: Poly<i64> = "1+3z^2+z^4".parse().unwrap();
        let b: Poly<i64> = "1+z^2".parse().unwrap();
        assert_eq!((&a * &b).to_string(), "1+4z^2+4z^4+z^6");
    }

    #[test]
    fn big_coefficients_do_not_overflow() {
        let big = P::constant(BigInt::from(i64::MAX));
        let sq = &big * &big;
        assert_eq!(sq.coeff(0), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
    }

    fn small_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(-9i64..=9, 0..=9).prop_map(|v| P::from_i64s(&v))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn normalized_and_degree_additive(a in small_poly(), b in small_poly()) {
            let renorm = P::from_coeffs(a.coeffs().to_vec());
            prop_assert_eq!(&renorm, &a);
            prop_assert!(a.coeffs().last().is_none_or(|c| c != &BigInt::from(0)));
            if !a.is_zero() && !b.is_zero() {
                prop_assert_eq!((&a * &b).degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn format_parse_round_trip(a in small_poly()) {
            let back: P = a.to_string().parse().unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
