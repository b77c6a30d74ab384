//! Exact arithmetic in cyclotomic fields ℚ(ζ_n).
//!
//! Elements are stored in the power basis `1, ζ, …, ζ^(φ(n)-1)` and reduced
//! modulo the `n`-th cyclotomic polynomial. Elements of different fields are
//! combined inside ℚ(ζ_lcm). Rational values are always stored with order 1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest root-of-unity order accepted by the parser.
pub const MAX_PARSE_ORDER: u32 = 360;

#[derive(Debug, PartialEq, Eq)]
struct Field {
    order: u32,
    /// Monic cyclotomic polynomial, lowest degree first.
    modulus: Vec<BigRational>,
}

impl Field {
    fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

fn rational_field() -> Arc<Field> {
    static Q: OnceLock<Arc<Field>> = OnceLock::new();
    Q.get_or_init(|| {
        Arc::new(Field {
            order: 1,
            modulus: vec![-BigRational::one(), BigRational::one()],
        })
    })
    .clone()
}

fn field(order: u32) -> Arc<Field> {
    if order <= 2 {
        return rational_field();
    }
    Arc::new(Field {
        order,
        modulus: cyclotomic_polynomial(order),
    })
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `d` must be nonzero after trimming.
fn poly_divrem(a: &[BigRational], d: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut d = d.to_vec();
    trim(&mut d);
    let dl = d.len();
    let lead = d[dl - 1].clone();
    if r.len() < dl {
        return (Vec::new(), r);
    }
    let mut q = vec![BigRational::zero(); r.len() - dl + 1];
    while r.len() >= dl {
        let shift = r.len() - dl;
        let c = r[r.len() - 1].clone() / lead.clone();
        for (i, di) in d.iter().enumerate() {
            r[shift + i] -= &c * di;
        }
        q[shift] = c;
        r.pop();
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}

fn cyclotomic_polynomial(n: u32) -> Vec<BigRational> {
    let mut p = vec![BigRational::zero(); n as usize + 1];
    p[0] = -BigRational::one();
    p[n as usize] = BigRational::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            let (q, _) = poly_divrem(&p, &cyclotomic_polynomial(d));
            p = q;
        }
    }
    p
}

/// Inverse of `a` modulo the irreducible polynomial `m`.
fn poly_inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let mut r0 = m.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    if r1.is_empty() {
        return None;
    }
    let mut t0: Vec<BigRational> = Vec::new();
    let mut t1 = vec![BigRational::one()];
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
        r0 = r1;
        r1 = r;
        t0 = t1;
        t1 = t2;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].clone();
    Some(t0.into_iter().map(|x| x / c.clone()).collect())
}

fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<Field>,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn rational(q: BigRational) -> Self {
        Cyclotomic {
            field: rational_field(),
            coeffs: vec![q],
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn fraction(num: i64, den: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// `ζ_n^k` for the primitive root `ζ_n = exp(2πi/n)`.
    pub fn zeta_pow(n: u32, k: u32) -> Self {
        assert!(n >= 1, "root of unity order must be positive");
        let k = k % n;
        match n {
            1 => Self::integer(1),
            2 => Self::integer(if k == 0 { 1 } else { -1 }),
            _ => {
                let f = field(n);
                let mut p = vec![BigRational::zero(); k as usize + 1];
                p[k as usize] = BigRational::one();
                Self::from_poly(f, p)
            }
        }
    }

    fn from_poly(field: Arc<Field>, p: Vec<BigRational>) -> Self {
        let deg = field.degree();
        let (_, mut r) = if p.len() > deg {
            poly_divrem(&p, &field.modulus)
        } else {
            (Vec::new(), p)
        };
        r.resize(deg, BigRational::zero());
        let mut out = Cyclotomic { field, coeffs: r };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.field.order > 1 && self.coeffs[1..].iter().all(|c| c.is_zero()) {
            let q = self.coeffs[0].clone();
            *self = Self::rational(q);
        }
    }

    /// Order `n` of the field ℚ(ζ_n) the value is stored in; 1 for rationals.
    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        (self.field.order == 1).then(|| self.coeffs[0].clone())
    }

    fn lift(&self, target: &Arc<Field>) -> Self {
        if self.field.order == target.order {
            return self.clone();
        }
        if self.field.order == 1 {
            let mut coeffs = vec![BigRational::zero(); target.degree()];
            coeffs[0] = self.coeffs[0].clone();
            return Cyclotomic {
                field: target.clone(),
                coeffs,
            };
        }
        let step = (target.order / self.field.order) as usize;
        let mut p = vec![BigRational::zero(); step * (self.coeffs.len() - 1) + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            p[k * step] = c.clone();
        }
        let deg = target.degree();
        let (_, mut r) = poly_divrem(&p, &target.modulus);
        r.resize(deg, BigRational::zero());
        Cyclotomic {
            field: target.clone(),
            coeffs: r,
        }
    }

    fn align(a: &Self, b: &Self) -> (Self, Self) {
        let (m, n) = (a.field.order, b.field.order);
        if m == n {
            return (a.clone(), b.clone());
        }
        let target = if n == 1 || (m % n == 0) {
            a.field.clone()
        } else if m == 1 || (n % m == 0) {
            b.field.clone()
        } else {
            field(m.lcm(&n))
        };
        (a.lift(&target), b.lift(&target))
    }

    pub fn to_complex(&self) -> num_complex::Complex64 {
        let n = self.field.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let angle = 2.0 * std::f64::consts::PI * k as f64 / n;
                num_complex::Complex64::from_polar(c.to_f64().unwrap_or(f64::NAN), angle)
            })
            .sum()
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.field.order == other.field.order {
            return self.coeffs == other.coeffs;
        }
        if self.field.order == 1 || other.field.order == 1 {
            return false;
        }
        let (a, b) = Self::align(self, other);
        a.coeffs == b.coeffs
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Self) -> Self {
        let (a, b) = if self.field.order == rhs.field.order {
            (self, rhs)
        } else {
            Self::align(&self, &rhs)
        };
        let coeffs = a
            .coeffs
            .into_iter()
            .zip(b.coeffs)
            .map(|(x, y)| x + y)
            .collect();
        let mut out = Cyclotomic {
            field: a.field,
            coeffs,
        };
        out.normalize();
        out
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Self {
        Cyclotomic {
            field: self.field,
            coeffs: self.coeffs.into_iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Self) -> Self {
        if self.field.order == 1 && rhs.field.order == 1 {
            return Self::rational(&self.coeffs[0] * &rhs.coeffs[0]);
        }
        if self.field.order == 1 || rhs.field.order == 1 {
            let (q, other) = if self.field.order == 1 {
                (&self.coeffs[0], rhs.clone())
            } else {
                (&rhs.coeffs[0], self.clone())
            };
            let mut out = Cyclotomic {
                field: other.field,
                coeffs: other.coeffs.into_iter().map(|x| x * q).collect(),
            };
            out.normalize();
            return out;
        }
        let (a, b) = Self::align(&self, &rhs);
        let p = poly_mul(&a.coeffs, &b.coeffs);
        Self::from_poly(a.field, p)
    }
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Self::integer(0)
    }
    fn one() -> Self {
        Self::integer(1)
    }
    fn from_i64(n: i64) -> Self {
        Self::integer(n)
    }
    fn from_rational(q: &BigRational) -> Self {
        Self::rational(q.clone())
    }
    fn from_cyclotomic(c: &Cyclotomic) -> Self {
        c.clone()
    }
    fn root_of_unity(n: u32) -> Self {
        Self::zeta_pow(n, 1)
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
    fn inv(&self) -> Option<Self> {
        if self.field.order == 1 {
            let q = &self.coeffs[0];
            return (!q.is_zero()).then(|| Self::rational(q.recip()));
        }
        let mut a = self.coeffs.clone();
        trim(&mut a);
        let inv = poly_inverse_mod(&a, &self.field.modulus)?;
        Some(Self::from_poly(self.field.clone(), inv))
    }
    fn magnitude(&self) -> f64 {
        if self.is_zero() {
            0.0
        } else {
            1.0
        }
    }
    fn backend() -> &'static str {
        "exact"
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.order == 1 {
            return write!(f, "{}", fmt_rational(&self.coeffs[0]));
        }
        let n = self.field.order;
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            let mono = match k {
                0 => String::new(),
                1 => format!("z{n}"),
                _ => format!("z{n}^{k}"),
            };
            let body = if mono.is_empty() {
                fmt_rational(&abs)
            } else if abs.is_one() {
                mono
            } else {
                format!("{}*{}", fmt_rational(&abs), mono)
            };
            match (first, neg) {
                (true, false) => write!(f, "{body}")?,
                (true, true) => write!(f, "-{body}")?,
                (false, false) => write!(f, " + {body}")?,
                (false, true) => write!(f, " - {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

struct Cursor<'s> {
    s: &'s [u8],
    pos: usize,
}

impl<'s> Cursor<'s> {
    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }
    fn digits(&mut self) -> Option<&'s str> {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
    fn err(&self, msg: &str) -> Error {
        Error::parse(1, format!("{msg} at column {}", self.pos + 1))
    }
}

fn parse_factor(c: &mut Cursor) -> Result<Cyclotomic> {
    match c.peek() {
        Some(b'z') => {
            c.pos += 1;
            let n: u32 = c
                .digits()
                .ok_or_else(|| c.err("expected root order after `z`"))?
                .parse()
                .map_err(|_| c.err("root order too large"))?;
            if n == 0 || n > MAX_PARSE_ORDER {
                return Err(c.err("root order out of range"));
            }
            let mut k = 1u32;
            if c.peek() == Some(b'^') {
                c.pos += 1;
                let e: u64 = c
                    .digits()
                    .ok_or_else(|| c.err("expected exponent"))?
                    .parse()
                    .map_err(|_| c.err("exponent too large"))?;
                k = (e % n as u64) as u32;
            }
            Ok(Cyclotomic::zeta_pow(n, k))
        }
        Some(d) if d.is_ascii_digit() => {
            let num: BigInt = c.digits().unwrap().parse().unwrap();
            let mut den = BigInt::one();
            if c.peek() == Some(b'/') {
                c.pos += 1;
                den = c
                    .digits()
                    .ok_or_else(|| c.err("expected denominator"))?
                    .parse()
                    .unwrap();
                if den.is_zero() {
                    return Err(c.err("zero denominator"));
                }
            }
            Ok(Cyclotomic::rational(BigRational::new(num, den)))
        }
        _ => Err(c.err("expected number or `z<n>`")),
    }
}

fn parse_term(c: &mut Cursor) -> Result<Cyclotomic> {
    let mut v = parse_factor(c)?;
    while c.peek() == Some(b'*') {
        c.pos += 1;
        v = v * parse_factor(c)?;
    }
    Ok(v)
}

impl FromStr for Cyclotomic {
    type Err = Error;

    /// Parses sums of terms such as `-1/2*z3^2 + 3`.
    fn from_str(s: &str) -> Result<Self> {
        let mut c = Cursor {
            s: s.as_bytes(),
            pos: 0,
        };
        c.skip_ws();
        let mut sign = 1;
        if c.peek() == Some(b'-') {
            sign = -1;
            c.pos += 1;
            c.skip_ws();
        }
        let mut total = Cyclotomic::zero();
        loop {
            let t = parse_term(&mut c)?;
            total = if sign > 0 { total + t } else { total - t };
            c.skip_ws();
            match c.peek() {
                None => return Ok(total),
                Some(b'+') => sign = 1,
                Some(b'-') => sign = -1,
                Some(_) => return Err(c.err("unexpected character")),
            }
            c.pos += 1;
            c.skip_ws();
        }
    }
}

/// Degree of ℚ(ζ_n) over ℚ.
pub fn field_degree(n: u32) -> u32 {
    euler_phi(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: u32) -> Cyclotomic {
        Cyclotomic::zeta_pow(n, k)
    }

    #[test]
    fn cyclotomic_polynomials_match_known_values() {
        let ints = |p: Vec<BigRational>| -> Vec<i64> {
            p.into_iter()
                .map(|c| c.to_integer().to_i64().unwrap())
                .collect()
        };
        assert_eq!(ints(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(ints(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(ints(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(ints(cyclotomic_polynomial(8)), vec![1, 0, 0, 0, 1]);
        assert_eq!(ints(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_have_the_right_order() {
        for n in 1..=12u32 {
            let w = Cyclotomic::root_of_unity(n);
            assert!(w.pow(n).is_one(), "zeta_{n}^{n}");
            for k in 1..n {
                assert!(!w.pow(k).is_one(), "zeta_{n}^{k}");
            }
        }
    }

    #[test]
    fn sum_of_cube_roots_vanishes() {
        let s = z(3, 0) + z(3, 1) + z(3, 2);
        assert!(s.is_zero());
    }

    #[test]
    fn mixed_fields_promote() {
        // ζ_6 = -ζ_3^2, and ζ_4 * ζ_4 = -1.
        assert_eq!(z(6, 1), -z(3, 2));
        assert_eq!(z(4, 1) * z(4, 1), Cyclotomic::integer(-1));
        let prod = z(3, 1) * z(4, 1);
        assert_eq!(prod.clone().pow(12), Cyclotomic::one());
        assert_eq!(prod.order(), 12);
    }

    #[test]
    fn inverse_round_trips() {
        let a = Cyclotomic::integer(2) + z(5, 1) - Cyclotomic::fraction(1, 3) * z(5, 3);
        let inv = a.inv().unwrap();
        assert!((a * inv).is_one());
        assert!(Cyclotomic::zero().inv().is_none());
    }

    #[test]
    fn complex_embedding_agrees() {
        let w = z(3, 1).to_complex();
        assert!((w.re + 0.5).abs() < 1e-12);
        assert!((w.im - 3f64.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn display_and_parse() {
        let a = Cyclotomic::fraction(-1, 2) * z(5, 2) + Cyclotomic::integer(3) - z(5, 1);
        let s = a.to_string();
        assert_eq!(s, "3 - z5 - 1/2*z5^2");
        assert_eq!(s.parse::<Cyclotomic>().unwrap(), a);
        assert_eq!(
            "-7/14".parse::<Cyclotomic>().unwrap(),
            Cyclotomic::fraction(-1, 2)
        );
        assert_eq!("z3^3".parse::<Cyclotomic>().unwrap(), Cyclotomic::one());
        assert!("1/0".parse::<Cyclotomic>().is_err());
        assert!("z0".parse::<Cyclotomic>().is_err());
        assert!("2 +".parse::<Cyclotomic>().is_err());
        assert!("".parse::<Cyclotomic>().is_err());
    }
}
