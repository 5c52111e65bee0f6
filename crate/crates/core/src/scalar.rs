//! Exact scalar fields: rationals, gaussian rationals and prime fields.
//!
//! Every field carries a context value (`Ctx`) so that zero and one can be
//! produced without an existing element. Only the prime field needs one.

use std::fmt::{self, Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub trait Scalar: Clone + PartialEq + Eq + Debug + Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Eq + Debug + Send + Sync + 'static;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_i64(v: i64, ctx: &Self::Ctx) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Field conjugation; the identity except on gaussian rationals.
    fn conj(&self) -> Self;

    fn parse(s: &str, ctx: &Self::Ctx) -> Result<Self>;
}

fn parse_bigint(s: &str) -> Result<BigInt> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    BigInt::from_str(t).map_err(|_| Error::Parse(format!("invalid integer `{s}`")))
}

/// Parses `p/q` or `p` into a normalized rational. Zero denominators are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    match s.split_once('/') {
        Some((n, d)) => {
            let n = parse_bigint(n)?;
            let d = parse_bigint(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(parse_bigint(s)?)),
    }
}

fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar for Rational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: &()) -> Self {
        <BigRational as One>::one()
    }
    fn from_i64(v: i64, _: &()) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn parse(s: &str, _: &()) -> Result<Self> {
        parse_rational(s)
    }
}

/// `re + im·i` with exact rational parts.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }
}

impl Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (Zero::is_zero(&self.re), Zero::is_zero(&self.im)) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { '-' } else { '+' };
                write!(f, "{}{}{}i", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

impl Scalar for GaussianRational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Self::new(<BigRational as Zero>::zero(), <BigRational as Zero>::zero())
    }
    fn one(_: &()) -> Self {
        Self::new(<BigRational as One>::one(), <BigRational as Zero>::zero())
    }
    fn from_i64(v: i64, ctx: &()) -> Self {
        Self::new(Rational::from_i64(v, ctx), <BigRational as Zero>::zero())
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.re) && Zero::is_zero(&self.im)
    }
    fn add(&self, rhs: &Self) -> Self {
        Self::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
    fn mul(&self, rhs: &Self) -> Self {
        Self::new(&self.re * &rhs.re - &self.im * &rhs.im, &self.re * &rhs.im + &self.im * &rhs.re)
    }
    fn neg(&self) -> Self {
        Self::new(-&self.re, -&self.im)
    }
    fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if Zero::is_zero(&norm) {
            return None;
        }
        Some(Self::new(&self.re / &norm, -&self.im / &norm))
    }
    fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// Accepts `a`, `bi`, `a+bi`, `a-bi` where `a`, `b` are rationals; a bare
    /// `i` or `-i` means unit imaginary part.
    fn parse(s: &str, _: &()) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(Error::Parse("empty gaussian rational".into()));
        }
        let Some(body) = t.strip_suffix('i') else {
            return Ok(Self::new(parse_rational(&t)?, <BigRational as Zero>::zero()));
        };
        // split at the last sign that is neither leading nor a denominator sign
        let split = body
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-') && !body[..i].ends_with('/'))
            .map(|(i, _)| i)
            .next_back();
        let (re, im) = match split {
            Some(i) => (parse_rational(&body[..i])?, &body[i..]),
            None => (<BigRational as Zero>::zero(), body),
        };
        let im = match im {
            "" | "+" => <BigRational as One>::one(),
            "-" => -<BigRational as One>::one(),
            other => parse_rational(other)?,
        };
        Ok(Self::new(re, im))
    }
}

/// Element of GF(p), stored as its canonical residue in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    pub value: u64,
    pub p: u64,
}

impl PrimeField {
    pub fn new(v: i64, p: u64) -> Self {
        let pi = p as i64;
        Self { value: v.rem_euclid(pi) as u64, p }
    }
}

impl Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Scalar for PrimeField {
    type Ctx = u64;

    fn zero(p: &u64) -> Self {
        Self { value: 0, p: *p }
    }
    fn one(p: &u64) -> Self {
        Self { value: 1 % p, p: *p }
    }
    fn from_i64(v: i64, p: &u64) -> Self {
        Self::new(v, *p)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, rhs: &Self) -> Self {
        Self { value: (self.value + rhs.value) % self.p, p: self.p }
    }
    fn sub(&self, rhs: &Self) -> Self {
        Self { value: (self.value + self.p - rhs.value) % self.p, p: self.p }
    }
    fn mul(&self, rhs: &Self) -> Self {
        let v = (self.value as u128 * rhs.value as u128) % self.p as u128;
        Self { value: v as u64, p: self.p }
    }
    fn neg(&self) -> Self {
        Self { value: (self.p - self.value) % self.p, p: self.p }
    }
    fn inv(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        let e = num_bigint::BigInt::from(self.value).extended_gcd(&BigInt::from(self.p));
        let x = e.x.mod_floor(&BigInt::from(self.p));
        Some(Self { value: u64::try_from(x).expect("residue fits"), p: self.p })
    }
    fn conj(&self) -> Self {
        *self
    }
    fn parse(s: &str, p: &u64) -> Result<Self> {
        let v = parse_bigint(s)?;
        let r = v.mod_floor(&BigInt::from(*p));
        Ok(Self { value: u64::try_from(r).expect("residue fits"), p: *p })
    }
}

/// Formats a rational as `p/q` or `p`.
pub struct RationalDisplay<'a>(pub &'a Rational);

impl Display for RationalDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&fmt_rational(self.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn rational_grammar() {
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("-3"), Rational::from_i64(-3, &()));
        assert_eq!(q(" 6/-4 "), q("-3/2"));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("").is_err());
        assert_eq!(RationalDisplay(&q("4/6")).to_string(), "2/3");
    }

    #[test]
    fn gaussian_grammar() {
        let g = |s| GaussianRational::parse(s, &()).unwrap();
        assert_eq!(g("1+2i"), GaussianRational::new(q("1"), q("2")));
        assert_eq!(g("1/2-3/4i"), GaussianRational::new(q("1/2"), q("-3/4")));
        assert_eq!(g("5i"), GaussianRational::new(q("0"), q("5")));
        assert_eq!(g("-i"), GaussianRational::new(q("0"), q("-1")));
        assert_eq!(g("i"), GaussianRational::new(q("0"), q("1")));
        assert_eq!(g("-7"), GaussianRational::new(q("-7"), q("0")));
        assert_eq!(g("-1-i"), GaussianRational::new(q("-1"), q("-1")));
        for s in ["1+2i", "1/2-3/4i", "5i", "-7", "0", "-1-1i"] {
            assert_eq!(g(s).to_string(), s);
        }
        assert!(GaussianRational::parse("1/0+i", &()).is_err());
    }

    #[test]
    fn gaussian_field_ops() {
        let z = GaussianRational::new(q("1"), q("1"));
        let w = z.inv().unwrap();
        assert_eq!(z.mul(&w), GaussianRational::one(&()));
        assert_eq!(z.conj().to_string(), "1-1i");
        assert!(GaussianRational::zero(&()).inv().is_none());
    }

    #[test]
    fn prime_field_ops() {
        let p = 7;
        let a = PrimeField::parse("-1", &p).unwrap();
        assert_eq!(a.value, 6);
        for v in 1..7 {
            let x = PrimeField::new(v, p);
            assert_eq!(x.mul(&x.inv().unwrap()), PrimeField::one(&p));
        }
        assert_eq!(PrimeField::new(3, 5).sub(&PrimeField::new(4, 5)).value, 4);
        assert!(is_prime(2) && is_prime(3) && is_prime(13) && !is_prime(1) && !is_prime(9));
    }
}
