//! Canonical sparse Laurent polynomials in `t` and `q`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::LaurentError;
use crate::eval::EvaluationPoint;

/// Exact rational coefficients.
pub type Rational = BigRational;

/// Exponent pair `(a, b)` of the monomial `t^a q^b`.
pub type Exponent = (i32, i32);

/// A Laurent polynomial `Σ c_{a,b} t^a q^b` with rational coefficients.
///
/// Terms are stored sorted by exponent pair (power of `t` first) and no stored
/// coefficient is zero, so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: Vec<(Exponent, Rational)>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// A constant integer polynomial.
    pub fn from_int(c: i64) -> Self {
        Self::constant(Rational::from_integer(BigInt::from(c)))
    }

    /// The single term `c · t^a q^b` (zero when `c` is zero).
    pub fn monomial(c: Rational, a: i32, b: i32) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![((a, b), c)] }
        }
    }

    /// `t^a` with coefficient 1.
    pub fn t_pow(a: i32) -> Self {
        Self::monomial(Rational::one(), a, 0)
    }

    /// `q^b` with coefficient 1.
    pub fn q_pow(b: i32) -> Self {
        Self::monomial(Rational::one(), 0, b)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::t_pow(1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::q_pow(1)
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, Rational)>,
    {
        let mut v: Vec<(Exponent, Rational)> = terms.into_iter().collect();
        v.sort_by_key(|x| x.0);
        Self { terms: combine_sorted(v) }
    }

    /// The canonical term list, sorted by exponent pair.
    pub fn terms(&self) -> &[(Exponent, Rational)] {
        &self.terms
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for the constant `1`.
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == (0, 0) && self.terms[0].1.is_one()
    }

    /// True when the polynomial has no term other than `t^0 q^0`.
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(e, _)| *e == (0, 0))
    }

    /// True when `q` does not occur.
    pub fn is_q_free(&self) -> bool {
        self.terms.iter().all(|((_, b), _)| *b == 0)
    }

    /// The coefficient of `t^a q^b`.
    pub fn coeff(&self, a: i32, b: i32) -> Rational {
        match self.terms.binary_search_by(|(e, _)| e.cmp(&(a, b))) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    /// Units of the Laurent ring over a field are exactly the single terms.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    /// The multiplicative inverse of a unit.
    pub fn inverse(&self) -> Result<Self, LaurentError> {
        if !self.is_unit() {
            return Err(LaurentError::NotInvertible);
        }
        let ((a, b), c) = &self.terms[0];
        Ok(Self::monomial(c.recip(), -a, -b))
    }

    /// Integer power; negative exponents require a unit.
    pub fn pow(&self, e: i64) -> Result<Self, LaurentError> {
        if e < 0 {
            return self.inverse()?.pow(-e);
        }
        if self.is_unit() {
            let ((a, b), c) = &self.terms[0];
            let e32 = i32::try_from(e).map_err(|_| LaurentError::NotInvertible)?;
            return Ok(Self::monomial(num_traits::Pow::pow(c, e32 as u32), a * e32, b * e32));
        }
        let mut result = Self::one();
        let mut base = self.clone();
        let mut k = e as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Multiplies every coefficient by a rational scalar.
    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    /// Multiplies by the monomial `t^a q^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        Self { terms: self.terms.iter().map(|((x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    /// Substitutes `t ↦ t^k` (used for parameterised functors such as `Bur_{t²}`).
    pub fn substitute_t_power(&self, k: i32) -> Self {
        Self::from_terms(self.terms.iter().map(|((a, b), c)| ((a * k, *b), c.clone())))
    }

    /// Substitutes `t ↦ s` for an arbitrary polynomial `s`; negative powers of
    /// `t` require `s` to be a unit.
    pub fn substitute_t(&self, s: &LaurentPoly) -> Result<Self, LaurentError> {
        let mut acc = Self::zero();
        for ((a, b), c) in &self.terms {
            let term = s.pow(i64::from(*a))?.shift(0, *b).scale(c);
            acc += &term;
        }
        Ok(acc)
    }

    /// Exact rational value at an evaluation point.
    pub fn eval(&self, p: &EvaluationPoint) -> Rational {
        let mut acc = Rational::zero();
        for ((a, b), c) in &self.terms {
            acc += c * rat_pow(p.t_value(), *a) * rat_pow(p.q_value(), *b);
        }
        acc
    }

    /// Exact quotient `self / d` when it exists in the Laurent ring.
    ///
    /// Both operands are first normalised by monomials into `ℚ[t, q]` with no
    /// monomial factor; lexicographic long division (`t > q`) then decides
    /// divisibility exactly.
    pub fn exact_div(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_unit() {
            return Some(self * &d.inverse().ok()?);
        }
        let (pa, pb) = self.min_exponents();
        let (da, db) = d.min_exponents();
        let mut rem: BTreeMap<Exponent, Rational> =
            self.terms.iter().map(|((a, b), c)| ((a - pa, b - pb), c.clone())).collect();
        let dn: Vec<(Exponent, Rational)> = d.terms.iter().map(|((a, b), c)| ((a - da, b - db), c.clone())).collect();
        let (lead_e, lead_c) = dn.last().cloned()?;
        let lead_inv = lead_c.recip();
        let mut quotient: Vec<(Exponent, Rational)> = Vec::new();
        while let Some((&(ra, rb), rc)) = rem.iter().next_back() {
            let qa = ra - lead_e.0;
            let qb = rb - lead_e.1;
            if qa < 0 || qb < 0 {
                return None;
            }
            let qc = rc * &lead_inv;
            for ((a, b), c) in &dn {
                let key = (a + qa, b + qb);
                let delta = c * &qc;
                let entry = rem.entry(key).or_insert_with(Rational::zero);
                *entry -= delta;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quotient.push(((qa, qb), qc));
        }
        Some(Self::from_terms(quotient).shift(pa - da, pb - db))
    }

    /// Componentwise minimum of the exponents (zero polynomial: `(0, 0)`).
    pub fn min_exponents(&self) -> Exponent {
        let mut it = self.terms.iter();
        match it.next() {
            None => (0, 0),
            Some((first, _)) => it.fold(*first, |(a, b), ((x, y), _)| (a.min(*x), b.min(*y))),
        }
    }

    /// Componentwise maximum of the exponents (zero polynomial: `(0, 0)`).
    pub fn max_exponents(&self) -> Exponent {
        let mut it = self.terms.iter();
        match it.next() {
            None => (0, 0),
            Some((first, _)) => it.fold(*first, |(a, b), ((x, y), _)| (a.max(*x), b.max(*y))),
        }
    }

    fn add_impl(&self, other: &Self, negate_other: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate_other { -other } else { other.clone() };
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len() || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i >= self.terms.len() || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (e, c) = &other.terms[j];
                out.push((*e, if negate_other { -c } else { c.clone() }));
                j += 1;
            } else {
                let c = if negate_other {
                    &self.terms[i].1 - &other.terms[j].1
                } else {
                    &self.terms[i].1 + &other.terms[j].1
                };
                if !c.is_zero() {
                    out.push((self.terms[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.terms.len() == 1 {
            let ((a, b), c) = &self.terms[0];
            return Self { terms: other.terms.iter().map(|((x, y), d)| ((x + a, y + b), c * d)).collect() };
        }
        if other.terms.len() == 1 {
            return other.mul_impl(self);
        }
        let mut v = Vec::with_capacity(self.terms.len() * other.terms.len());
        for ((a, b), c) in &self.terms {
            for ((x, y), d) in &other.terms {
                v.push(((a + x, b + y), c * d));
            }
        }
        v.sort_by_key(|x| x.0);
        Self { terms: combine_sorted(v) }
    }
}

/// `x^k` for a nonzero rational and any integer exponent.
fn rat_pow(x: &Rational, k: i32) -> Rational {
    if k >= 0 {
        num_traits::Pow::pow(x, k as u32)
    } else {
        num_traits::Pow::pow(&x.recip(), k.unsigned_abs())
    }
}

/// Merges adjacent equal exponents of a sorted term list and drops zeros.
fn combine_sorted(v: Vec<(Exponent, Rational)>) -> Vec<(Exponent, Rational)> {
    let mut out: Vec<(Exponent, Rational)> = Vec::with_capacity(v.len());
    for (e, c) in v {
        match out.last_mut() {
            Some((le, lc)) if *le == e => *lc += c,
            _ => out.push((e, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl Zero for LaurentPoly {
    fn zero() -> Self {
        LaurentPoly::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentPoly {
    fn one() -> Self {
        LaurentPoly::one()
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_monos(f: &mut fmt::Formatter<'_>, (a, b): Exponent, mut need_star: bool) -> fmt::Result {
    for (name, e) in [("t", a), ("q", b)] {
        if e == 0 {
            continue;
        }
        if need_star {
            f.write_str("*")?;
        }
        f.write_str(name)?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
        need_star = true;
    }
    Ok(())
}

/// Prints in the canonical grammar
/// `poly := term (("+"|"-") term)* | "0"`, `term := coeff ("*" mono)* | mono`.
///
/// The coefficient is omitted only for a lone monomial with coefficient one;
/// a negative leading term carries its sign on an explicit coefficient.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let mag = c.abs();
            let mono_count = usize::from(e.0 != 0) + usize::from(e.1 != 0);
            if idx > 0 {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let leading_negative = idx == 0 && negative;
            if mag.is_one() && mono_count == 1 && !leading_negative {
                write_monos(f, *e, false)?;
            } else {
                if leading_negative {
                    f.write_str("-")?;
                }
                write!(f, "{}", mag.numer())?;
                if !mag.denom().is_one() {
                    write!(f, "/{}", mag.denom())?;
                }
                write_monos(f, *e, true)?;
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> Result<T, LaurentError> {
        Err(LaurentError::Parse { pos: self.pos, msg: msg.to_string() })
    }

    fn unsigned(&mut self) -> Result<BigInt, LaurentError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected digits");
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii digits");
        Ok(text.parse::<BigInt>().expect("digits parse"))
    }

    fn signed_small(&mut self) -> Result<i32, LaurentError> {
        let neg = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            if self.peek() == Some(b'+') {
                self.pos += 1;
            }
            false
        };
        let v = self.unsigned()?;
        let v = if neg { -v } else { v };
        match i32::try_from(v) {
            Ok(x) => Ok(x),
            Err(_) => self.err("exponent out of range"),
        }
    }

    fn mono(&mut self) -> Result<Exponent, LaurentError> {
        let var = match self.peek() {
            Some(b't') => 0,
            Some(b'q') => 1,
            _ => return self.err("expected 't' or 'q'"),
        };
        self.pos += 1;
        let e = if self.peek() == Some(b'^') {
            self.pos += 1;
            self.signed_small()?
        } else {
            1
        };
        Ok(if var == 0 { (e, 0) } else { (0, e) })
    }

    fn term(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut coeff = Rational::one();
        let mut exp = (0, 0);
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.unsigned()?;
                let den = if self.peek() == Some(b'/') {
                    self.pos += 1;
                    let d = self.unsigned()?;
                    if d.is_zero() {
                        return self.err("zero denominator");
                    }
                    d
                } else {
                    BigInt::one()
                };
                coeff = Rational::new(num, den);
            }
            _ => {
                let (a, b) = self.mono()?;
                exp = (a, b);
            }
        }
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let (a, b) = self.mono()?;
            exp = (exp.0 + a, exp.1 + b);
        }
        Ok(LaurentPoly::monomial(coeff, exp.0, exp.1))
    }

    fn poly(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = LaurentPoly::zero();
        let mut sign_neg = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                true
            }
            Some(b'+') => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        loop {
            let term = self.term()?;
            if sign_neg {
                acc -= &term;
            } else {
                acc += &term;
            }
            match self.peek() {
                Some(b'+') => sign_neg = false,
                Some(b'-') => sign_neg = true,
                None => break,
                Some(_) => return self.err("expected '+', '-' or end of input"),
            }
            self.pos += 1;
        }
        Ok(acc)
    }
}

/// Parses the canonical grammar; additionally accepts a leading sign and
/// coefficient-free products such as `t*q`.
impl FromStr for LaurentPoly {
    type Err = LaurentError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        if p.peek().is_none() {
            return p.err("empty input");
        }
        p.poly()
    }
}
