//! Exact arithmetic in the cyclotomic field `Q(ζ)`, `ζ` a primitive `p`-th
//! root of unity for an odd prime `p`.
//!
//! Elements live in the power basis `1, ζ, …, ζ^(p-2)` and are reduced
//! eagerly modulo `Φ_p(t) = 1 + t + … + t^(p-1)`, so two scalars are equal
//! exactly when their coefficient sequences are. Integer coefficients that
//! fit in an `i64` are stored inline; everything else falls back to
//! arbitrary-precision rationals. The switch between the two is invisible
//! from the outside.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use smallvec::SmallVec;

/// Largest supported prime; monomial exponents are stored in a `u8`.
pub const MAX_PRIME: u32 = 251;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CycError {
    #[error("p must be prime, got {0}")]
    NotPrime(u32),
    #[error("p must be an odd prime, got 2")]
    EvenPrime,
    #[error("p = {0} is larger than the supported maximum {MAX_PRIME}")]
    TooLarge(u32),
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {input:?} as a cyclotomic scalar: {reason}")]
    Parse { input: String, reason: String },
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// The field `Q(ζ_p)`. A lightweight handle that constructs scalars.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclotomicField {
    p: u8,
}

impl CyclotomicField {
    pub fn new(p: u32) -> Result<Self, CycError> {
        if p > MAX_PRIME {
            return Err(CycError::TooLarge(p));
        }
        if !is_prime(p as u64) {
            return Err(CycError::NotPrime(p));
        }
        if p == 2 {
            return Err(CycError::EvenPrime);
        }
        Ok(Self { p: p as u8 })
    }

    pub fn p(self) -> u32 {
        self.p as u32
    }

    /// Dimension of the field over `Q`, i.e. `p - 1`.
    pub fn degree(self) -> usize {
        self.p as usize - 1
    }

    pub fn zero(self) -> CycScalar {
        CycScalar {
            p: self.p,
            repr: Repr::Int(SmallVec::from_elem(0, self.degree())),
        }
    }

    pub fn one(self) -> CycScalar {
        self.from_int(1)
    }

    pub fn from_int(self, n: i64) -> CycScalar {
        let mut c: Ints = SmallVec::from_elem(0, self.degree());
        c[0] = n;
        CycScalar {
            p: self.p,
            repr: Repr::Int(c),
        }
    }

    pub fn from_rational(self, r: RBig) -> CycScalar {
        let mut c = vec![RBig::ZERO; self.degree()];
        c[0] = r;
        CycScalar::from_rats(self.p, c)
    }

    /// Interprets `coeffs[k]` as the coefficient of `ζ^k`. Any length is
    /// accepted; the polynomial is reduced modulo `Φ_p`.
    pub fn from_coeffs(self, coeffs: Vec<RBig>) -> CycScalar {
        let folded = fold_rats(self.p as usize, coeffs);
        CycScalar::from_rats(self.p, folded)
    }

    /// `ζ^j` for any integer `j`, in canonical form.
    pub fn root_power(self, j: i64) -> CycScalar {
        let p = self.p as i64;
        let e = j.rem_euclid(p) as usize;
        let mut c: Ints = SmallVec::from_elem(0, self.degree());
        if e == self.degree() {
            // ζ^(p-1) = -(1 + ζ + … + ζ^(p-2))
            c.iter_mut().for_each(|v| *v = -1);
        } else {
            c[e] = 1;
        }
        CycScalar {
            p: self.p,
            repr: Repr::Int(c),
        }
    }

    /// Parses the rendering produced by `Display`, e.g. `1 - q + (1/2)q^2`.
    /// Exponents outside `[0, p-1)` are accepted and reduced.
    pub fn parse(self, input: &str) -> Result<CycScalar, CycError> {
        let fail = |reason: &str| CycError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(fail("empty input"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut depth = 0i32;
        let mut negative = false;
        let mut current = String::new();
        for (idx, &ch) in s.iter().enumerate() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                _ => {}
            }
            let splits = (ch == '+' || ch == '-') && depth == 0 && idx > 0 && s[idx - 1] != '^';
            if splits {
                if current.is_empty() {
                    return Err(fail("dangling sign"));
                }
                terms.push((negative, std::mem::take(&mut current)));
                negative = ch == '-';
            } else if idx == 0 && (ch == '-' || ch == '+') {
                negative = ch == '-';
            } else {
                current.push(ch);
            }
        }
        if depth != 0 {
            return Err(fail("unbalanced parentheses"));
        }
        if current.is_empty() {
            return Err(fail("dangling sign"));
        }
        terms.push((negative, current));

        let mut acc = self.zero();
        for (negative, body) in terms {
            let (coeff, rest) = parse_coefficient(&body).map_err(|r| fail(&r))?;
            let rest = rest.trim_start_matches(['*', '·']);
            let exponent = if rest.is_empty() {
                if coeff.is_none() {
                    return Err(fail("empty term"));
                }
                0
            } else if rest == "q" {
                1
            } else if let Some(e) = rest.strip_prefix("q^") {
                e.parse::<i64>().map_err(|_| fail("bad exponent"))?
            } else {
                return Err(fail("unexpected symbol"));
            };
            let mut term = self.root_power(exponent);
            if let Some(c) = coeff {
                term = &term * &self.from_rational(c);
            }
            if negative {
                acc -= &term;
            } else {
                acc += &term;
            }
        }
        Ok(acc)
    }
}

fn parse_coefficient(body: &str) -> Result<(Option<RBig>, &str), String> {
    if let Some(inner) = body.strip_prefix('(') {
        let close = inner.find(')').ok_or("missing ')'")?;
        let r = parse_rational(&inner[..close])?;
        return Ok((Some(r), &inner[close + 1..]));
    }
    let end = body
        .find(|c: char| !(c.is_ascii_digit() || c == '/'))
        .unwrap_or(body.len());
    if end == 0 {
        return Ok((None, body));
    }
    Ok((Some(parse_rational(&body[..end])?), &body[end..]))
}

fn parse_rational(text: &str) -> Result<RBig, String> {
    let int = |t: &str| t.parse::<IBig>().map_err(|_| format!("bad integer {t:?}"));
    match text.split_once('/') {
        Some((n, d)) => {
            let d = int(d)?;
            if d == IBig::ZERO {
                return Err("zero denominator".into());
            }
            Ok(RBig::from_parts_signed(int(n)?, d))
        }
        None => Ok(RBig::from(int(text)?)),
    }
}

type Ints = SmallVec<[i64; 8]>;

#[derive(Clone, PartialEq, Eq)]
enum Repr {
    /// All coefficients are integers fitting in `i64`.
    Int(Ints),
    /// At least one coefficient is non-integral or too large.
    Rat(Vec<RBig>),
}

/// An element of `Q(ζ_p)` in canonical power-basis form.
#[derive(Clone, PartialEq, Eq)]
pub struct CycScalar {
    p: u8,
    repr: Repr,
}

/// Folds an integer polynomial modulo `t^p - 1` and then `Φ_p`.
fn fold_ints(p: usize, full: &[i128]) -> Option<Ints> {
    let mut acc = [0i128; MAX_PRIME as usize];
    for (k, v) in full.iter().enumerate() {
        acc[k % p] = acc[k % p].checked_add(*v)?;
    }
    let top = acc[p - 1];
    acc[..p - 1]
        .iter()
        .map(|v| v.checked_sub(top).and_then(|d| i64::try_from(d).ok()))
        .collect()
}

fn fold_rats(p: usize, full: Vec<RBig>) -> Vec<RBig> {
    let mut acc = vec![RBig::ZERO; p];
    for (k, v) in full.into_iter().enumerate() {
        acc[k % p] += v;
    }
    let top = acc.pop().expect("p >= 3");
    for v in acc.iter_mut() {
        *v -= &top;
    }
    acc
}

impl CycScalar {
    fn from_rats(p: u8, coeffs: Vec<RBig>) -> Self {
        let ints: Option<Ints> = coeffs
            .iter()
            .map(|c| {
                if c.is_int() {
                    i64::try_from(c.numerator()).ok()
                } else {
                    None
                }
            })
            .collect();
        let repr = match ints {
            Some(ints) => Repr::Int(ints),
            None => Repr::Rat(coeffs),
        };
        CycScalar { p, repr }
    }

    fn rats(&self) -> Vec<RBig> {
        match &self.repr {
            Repr::Int(c) => c.iter().map(|&v| RBig::from(v)).collect(),
            Repr::Rat(c) => c.clone(),
        }
    }

    fn assert_same_field(&self, other: &CycScalar) {
        assert_eq!(
            self.p, other.p,
            "cannot combine scalars of Q(ζ_{}) and Q(ζ_{})",
            self.p, other.p
        );
    }

    pub fn field(&self) -> CyclotomicField {
        CyclotomicField { p: self.p }
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    /// Coefficients of `1, ζ, …, ζ^(p-2)`.
    pub fn coeffs(&self) -> Vec<RBig> {
        self.rats()
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Int(c) => c.iter().all(|&v| v == 0),
            Repr::Rat(c) => c.iter().all(|v| v.is_zero()),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.field().one()
    }

    /// Multiplies by `ζ^e`. Cheaper than a general product.
    pub fn mul_root(&self, e: i64) -> CycScalar {
        let p = self.p as usize;
        let e = e.rem_euclid(p as i64) as usize;
        if e == 0 {
            return self.clone();
        }
        if let Repr::Int(c) = &self.repr {
            let mut full = [0i128; MAX_PRIME as usize];
            for (k, &v) in c.iter().enumerate() {
                full[(k + e) % p] = v as i128;
            }
            if let Some(ints) = fold_ints(p, &full[..p]) {
                return CycScalar {
                    p: self.p,
                    repr: Repr::Int(ints),
                };
            }
        }
        let mut full = vec![RBig::ZERO; p];
        for (k, v) in self.rats().into_iter().enumerate() {
            full[(k + e) % p] = v;
        }
        CycScalar::from_rats(self.p, fold_rats(p, full))
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// `Φ_p`, which is irreducible over `Q`.
    pub fn inv(&self) -> Result<CycScalar, CycError> {
        if self.is_zero() {
            return Err(CycError::DivisionByZero);
        }
        let p = self.p as usize;
        let mut r0: Vec<RBig> = vec![RBig::ONE; p];
        let mut r1 = trim(self.rats());
        let mut s0: Vec<RBig> = Vec::new();
        let mut s1: Vec<RBig> = vec![RBig::ONE];
        while !r1.is_empty() {
            let (quot, rem) = poly_divmod(&r0, &r1);
            let next_s = poly_sub(&s0, &poly_mul(&quot, &s1));
            r0 = std::mem::replace(&mut r1, rem);
            s0 = std::mem::replace(&mut s1, next_s);
        }
        // r0 is a nonzero constant: gcd(a, Φ_p) = 1.
        debug_assert_eq!(r0.len(), 1);
        let scale = RBig::ONE / &r0[0];
        let coeffs = s0.into_iter().map(|c| c * &scale).collect();
        Ok(self.field().from_coeffs(coeffs))
    }

    pub fn pow(&self, mut n: u64) -> CycScalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

fn trim(mut poly: Vec<RBig>) -> Vec<RBig> {
    while poly.last().is_some_and(|c| c.is_zero()) {
        poly.pop();
    }
    poly
}

fn poly_sub(a: &[RBig], b: &[RBig]) -> Vec<RBig> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|k| {
            let x = a.get(k).cloned().unwrap_or(RBig::ZERO);
            match b.get(k) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(out)
}

fn poly_mul(a: &[RBig], b: &[RBig]) -> Vec<RBig> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![RBig::ZERO; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Long division; `divisor` must be trimmed and nonzero.
fn poly_divmod(dividend: &[RBig], divisor: &[RBig]) -> (Vec<RBig>, Vec<RBig>) {
    let mut rem = trim(dividend.to_vec());
    let lead = divisor.last().expect("nonzero divisor");
    if rem.len() < divisor.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![RBig::ZERO; rem.len() - divisor.len() + 1];
    while rem.len() >= divisor.len() {
        let shift = rem.len() - divisor.len();
        let factor = rem.last().unwrap() / lead;
        for (k, d) in divisor.iter().enumerate() {
            rem[shift + k] -= &factor * d;
        }
        quot[shift] = factor;
        rem.pop();
        rem = trim(rem);
    }
    (trim(quot), rem)
}

impl Add for &CycScalar {
    type Output = CycScalar;

    fn add(self, rhs: &CycScalar) -> CycScalar {
        self.assert_same_field(rhs);
        if let (Repr::Int(a), Repr::Int(b)) = (&self.repr, &rhs.repr) {
            let sum: Option<Ints> = a.iter().zip(b).map(|(x, y)| x.checked_add(*y)).collect();
            if let Some(c) = sum {
                return CycScalar {
                    p: self.p,
                    repr: Repr::Int(c),
                };
            }
        }
        let c = self
            .rats()
            .into_iter()
            .zip(rhs.rats())
            .map(|(x, y)| x + y)
            .collect();
        CycScalar::from_rats(self.p, c)
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;

    fn neg(self) -> CycScalar {
        if let Repr::Int(a) = &self.repr {
            let c: Option<Ints> = a.iter().map(|x| x.checked_neg()).collect();
            if let Some(c) = c {
                return CycScalar {
                    p: self.p,
                    repr: Repr::Int(c),
                };
            }
        }
        let c = self.rats().into_iter().map(|x| -x).collect();
        CycScalar::from_rats(self.p, c)
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;

    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self + &(-rhs)
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;

    fn mul(self, rhs: &CycScalar) -> CycScalar {
        self.assert_same_field(rhs);
        let p = self.p as usize;
        if let (Repr::Int(a), Repr::Int(b)) = (&self.repr, &rhs.repr) {
            let mut full = [0i128; 2 * MAX_PRIME as usize];
            let mut ok = true;
            'outer: for (i, &x) in a.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b.iter().enumerate() {
                    match (x as i128)
                        .checked_mul(y as i128)
                        .and_then(|t| full[i + j].checked_add(t))
                    {
                        Some(v) => full[i + j] = v,
                        None => {
                            ok = false;
                            break 'outer;
                        }
                    }
                }
            }
            if ok {
                if let Some(c) = fold_ints(p, &full[..2 * p - 3]) {
                    return CycScalar {
                        p: self.p,
                        repr: Repr::Int(c),
                    };
                }
            }
        }
        let a = self.rats();
        let b = rhs.rats();
        let mut full = vec![RBig::ZERO; 2 * p - 3];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                full[i + j] += x * y;
            }
        }
        CycScalar::from_rats(self.p, fold_rats(p, full))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycScalar> for CycScalar {
    fn sub_assign(&mut self, rhs: &CycScalar) {
        *self = &*self - rhs;
    }
}

fn write_magnitude(f: &mut fmt::Formatter<'_>, num: &UBig, den: &UBig, k: usize) -> fmt::Result {
    let unit = *num == UBig::ONE && *den == UBig::ONE;
    match (k, unit) {
        (0, _) if *den == UBig::ONE => write!(f, "{num}")?,
        (0, _) => write!(f, "{num}/{den}")?,
        (_, true) => {}
        (_, false) if *den == UBig::ONE => write!(f, "{num}")?,
        (_, false) => write!(f, "({num}/{den})")?,
    }
    match k {
        0 => Ok(()),
        1 => write!(f, "q"),
        _ => write!(f, "q^{k}"),
    }
}

/// Renders as a polynomial in `q`, lowest power first: `1 - q + (1/2)q^2`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.rats().into_iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let (num, den) = c.into_parts();
            let negative = num < IBig::ZERO;
            let magnitude = num.into_parts().1;
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            write_magnitude(f, &magnitude, &den, k)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar[p={}]({})", self.p, self)
    }
}
