//! Exact arithmetic on signed square roots of rationals and on finite sums
//! of radicals `Σ c_d √d` with `d` squarefree.
//!
//! Every single path through a crystallisation graph multiplies to a value
//! of the form `±√q` with `q` rational ([`SignedRadical`]). Summing the
//! contributions of several paths needs the more general [`RadicalSum`],
//! which is kept in a canonical form so that equality is structural.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{Number, Value};

use crate::error::{Result, SwtError};

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Builds a rational from machine integers.
pub fn rational(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

/// The value `sign · √radicand`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedRadical {
    sign: i8,
    radicand: Rational,
}

impl SignedRadical {
    pub fn new(sign: i8, radicand: Rational) -> Result<Self> {
        if radicand.is_negative() {
            return Err(SwtError::Domain(format!("negative radicand {radicand}")));
        }
        match (sign, radicand.is_zero()) {
            (0, true) => Ok(Self::zero()),
            (-1 | 1, false) => Ok(Self { sign, radicand }),
            (0, false) | (-1 | 1, true) => Err(SwtError::Domain(format!(
                "sign {sign} inconsistent with radicand {radicand}"
            ))),
            _ => Err(SwtError::Domain(format!("sign {sign} not in {{-1,0,1}}"))),
        }
    }

    pub fn zero() -> Self {
        Self {
            sign: 0,
            radicand: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Self {
            sign: 1,
            radicand: Rational::one(),
        }
    }

    /// `+√q` for a nonnegative rational `q`.
    pub fn sqrt(q: Rational) -> Result<Self> {
        let sign = if q.is_zero() { 0 } else { 1 };
        Self::new(sign, q)
    }

    /// The rational `r` itself, written as `sgn(r)·√(r²)`.
    pub fn from_rational(r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Self {
            sign: if r.is_negative() { -1 } else { 1 },
            radicand: r * r,
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn radicand(&self) -> &Rational {
        &self.radicand
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn negate(&self) -> Self {
        Self {
            sign: -self.sign,
            radicand: self.radicand.clone(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        f64::from(self.sign) * self.radicand.to_f64().unwrap_or(f64::NAN).sqrt()
    }

    /// Rewrites `sign·√(p/q)` as `(sign·a/q)·√d` with `d` squarefree.
    pub fn canonicalize(&self) -> RadicalSum {
        if self.sign == 0 {
            return RadicalSum::zero();
        }
        let p = self.radicand.numer().magnitude();
        let q = self.radicand.denom().magnitude();
        let (root, free) = squarefree_split(&(p * q));
        let coeff = BigRational::new(
            BigInt::from_biguint(sign_of(self.sign), root),
            BigInt::from(q.clone()),
        );
        RadicalSum::term(free, coeff)
    }
}

impl Mul for &SignedRadical {
    type Output = SignedRadical;

    fn mul(self, rhs: &SignedRadical) -> SignedRadical {
        mul_radical(self, rhs)
    }
}

/// Product of two signed radicals; signs multiply, radicands multiply.
pub fn mul_radical(a: &SignedRadical, b: &SignedRadical) -> SignedRadical {
    let sign = a.sign * b.sign;
    if sign == 0 {
        return SignedRadical::zero();
    }
    SignedRadical {
        sign,
        radicand: &a.radicand * &b.radicand,
    }
}

fn sign_of(s: i8) -> Sign {
    match s {
        s if s < 0 => Sign::Minus,
        0 => Sign::NoSign,
        _ => Sign::Plus,
    }
}

/// Splits `m` as `root² · free` with `free` squarefree, by trial division.
pub fn squarefree_split(m: &BigUint) -> (BigUint, BigUint) {
    if m.is_zero() {
        return (BigUint::zero(), BigUint::zero());
    }
    if let Some(small) = m.to_u64() {
        let (r, f) = squarefree_split_u64(small);
        return (BigUint::from(r), BigUint::from(f));
    }
    let mut rest = m.clone();
    let mut root = BigUint::one();
    let mut free = BigUint::one();
    let mut p = BigUint::from(2u32);
    while &p * &p <= rest {
        let mut exp = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            exp += 1;
        }
        if exp > 0 {
            root *= p.pow(exp / 2);
            if exp % 2 == 1 {
                free *= &p;
            }
        }
        if let Some(small) = rest.to_u64() {
            let (r, f) = squarefree_split_u64(small);
            return (root * r, free * f);
        }
        p += if p == BigUint::from(2u32) { 1u32 } else { 2u32 };
    }
    (root, free * rest)
}

fn squarefree_split_u64(mut rest: u64) -> (u64, u64) {
    let mut root = 1u64;
    let mut free = 1u64;
    let mut p = 2u64;
    while p * p <= rest {
        let mut exp = 0u32;
        while rest.is_multiple_of(p) {
            rest /= p;
            exp += 1;
        }
        root *= p.pow(exp / 2);
        if exp % 2 == 1 {
            free *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    (root, free * rest)
}

/// Finite sum `Σ c_d √d` over distinct squarefree `d`, no zero coefficients.
///
/// Square roots of distinct squarefree integers are linearly independent
/// over the rationals, so two sums are equal exactly when their term maps are.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RadicalSum {
    terms: BTreeMap<BigUint, Rational>,
}

impl RadicalSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::rational(Rational::one())
    }

    pub fn rational(c: Rational) -> Self {
        Self::term(BigUint::one(), c)
    }

    /// `c·√d`; `d` must already be squarefree.
    pub fn term(d: BigUint, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() && !d.is_zero() {
            terms.insert(d, c);
        }
        Self { terms }
    }

    /// Builds a sum from `(coefficient, radicand)` pairs with arbitrary
    /// positive radicands, canonicalizing each.
    pub fn from_terms<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Rational, BigUint)>,
    {
        let mut out = Self::zero();
        for (c, d) in pairs {
            if d.is_zero() {
                return Err(SwtError::Domain("radicand must be positive".into()));
            }
            let (root, free) = squarefree_split(&d);
            out.add_term(free, c * BigRational::from_integer(BigInt::from(root)));
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BigUint, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value when the sum has no irrational part.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&BigUint::one()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, d: BigUint, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// Multiplies by `±√q`.
    pub fn mul_radical(&self, r: &SignedRadical) -> RadicalSum {
        if r.is_zero() || self.is_zero() {
            return RadicalSum::zero();
        }
        self * &r.canonicalize()
    }

    pub fn scale(&self, c: &Rational) -> RadicalSum {
        if c.is_zero() {
            return RadicalSum::zero();
        }
        RadicalSum {
            terms: self.terms.iter().map(|(d, v)| (d.clone(), v * c)).collect(),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.terms
            .iter()
            .map(|(d, c)| c.to_f64().unwrap_or(f64::NAN) * d.to_f64().unwrap_or(f64::NAN).sqrt())
            .fold(0.0, |acc, x| acc + x)
    }

    /// JSON array of `[numerator, denominator, radicand]` triples sorted by radicand.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(d, c)| {
                    Value::Array(vec![
                        big_number(&c.numer().to_string()),
                        big_number(&c.denom().to_string()),
                        big_number(&d.to_string()),
                    ])
                })
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = |msg: &str| SwtError::Domain(format!("radical-sum JSON: {msg}"));
        let items = value.as_array().ok_or_else(|| bad("expected an array"))?;
        let mut pairs = Vec::with_capacity(items.len());
        for item in items {
            let triple = item
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| bad("expected [numerator, denominator, radicand]"))?;
            let int = |v: &Value| -> Result<BigInt> {
                match v {
                    Value::Number(n) => {
                        BigInt::from_str(&n.to_string()).map_err(|_| bad("non-integer entry"))
                    }
                    _ => Err(bad("non-integer entry")),
                }
            };
            let (num, den, rad) = (int(&triple[0])?, int(&triple[1])?, int(&triple[2])?);
            if den.is_zero() {
                return Err(bad("zero denominator"));
            }
            let rad = rad.to_biguint().ok_or_else(|| bad("negative radicand"))?;
            pairs.push((BigRational::new(num, den), rad));
        }
        Self::from_terms(pairs)
    }
}

fn big_number(digits: &str) -> Value {
    Value::Number(Number::from_str(digits).expect("integer literal is a valid JSON number"))
}

impl AddAssign<&RadicalSum> for RadicalSum {
    fn add_assign(&mut self, rhs: &RadicalSum) {
        for (d, c) in &rhs.terms {
            self.add_term(d.clone(), c.clone());
        }
    }
}

impl Add for &RadicalSum {
    type Output = RadicalSum;

    fn add(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for RadicalSum {
    type Output = RadicalSum;

    fn add(mut self, rhs: RadicalSum) -> RadicalSum {
        self += &rhs;
        self
    }
}

impl Neg for &RadicalSum {
    type Output = RadicalSum;

    fn neg(self) -> RadicalSum {
        RadicalSum {
            terms: self.terms.iter().map(|(d, c)| (d.clone(), -c)).collect(),
        }
    }
}

impl Sub for &RadicalSum {
    type Output = RadicalSum;

    fn sub(self, rhs: &RadicalSum) -> RadicalSum {
        self + &(-rhs)
    }
}

impl Mul for &RadicalSum {
    type Output = RadicalSum;

    fn mul(self, rhs: &RadicalSum) -> RadicalSum {
        let mut out = RadicalSum::zero();
        for (d1, c1) in &self.terms {
            for (d2, c2) in &rhs.terms {
                // d1, d2 squarefree: d1·d2 = g² · (d1/g)(d2/g) with the cofactor squarefree.
                let g = d1.gcd(d2);
                let free = (d1 / &g) * (d2 / &g);
                let coeff = c1 * c2 * BigRational::from_integer(BigInt::from(g));
                out.add_term(free, coeff);
            }
        }
        out
    }
}

impl fmt::Display for RadicalSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (d, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let num = c.numer().magnitude();
            let den = c.denom();
            if d.is_one() {
                write!(f, "{num}")?;
            } else if num.is_one() {
                write!(f, "sqrt({d})")?;
            } else {
                write!(f, "{num}*sqrt({d})")?;
            }
            if !den.is_one() {
                write!(f, "/{den}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for SignedRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            0 => write!(f, "0"),
            s => write!(f, "{}sqrt({})", if s < 0 { "-" } else { "" }, self.radicand),
        }
    }
}

/// Canonical form of a signed radical.
pub fn canonicalize(r: &SignedRadical) -> RadicalSum {
    r.canonicalize()
}

/// Coefficient-wise sum.
pub fn add(a: &RadicalSum, b: &RadicalSum) -> RadicalSum {
    a + b
}

pub fn to_float(a: &RadicalSum) -> f64 {
    a.to_f64()
}
