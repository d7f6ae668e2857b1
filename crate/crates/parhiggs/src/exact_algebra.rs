//! Exact scalar and symbolic arithmetic over the Gaussian rationals Q(i):
//! rationals, Gaussian rationals, polynomials, rational functions in one
//! variable, residues, square testing, and residue-interpolation of sections
//! of twisted line bundles on P¹.

use num::BigInt;
use num::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

pub type Rat = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("pole of order greater than one at the requested point")]
    PoleOrderTooHigh,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("linear system is underdetermined")]
    NonUnique,
    #[error("eigenvalue does not lie in Q(i)")]
    EigenvalueNotInField,
    #[error("could not parse scalar: {0}")]
    Parse(String),
}

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rat_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    if x.is_zero() {
        return Some(Rat::zero());
    }
    let num = x.numer();
    let den = x.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// An element re + im·i of Q(i). The derived ordering is lexicographic on
/// (re, im); it is not compatible with the field structure and exists only
/// to make tie-breaking deterministic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gaussian {
    pub re: Rat,
    pub im: Rat,
}

impl Gaussian {
    pub fn new(re: Rat, im: Rat) -> Self {
        Gaussian { re, im }
    }

    pub fn from_rat(re: Rat) -> Self {
        Gaussian { re, im: Rat::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rat(rat_int(n))
    }

    pub fn from_pair(re: (i64, i64), im: (i64, i64)) -> Self {
        Gaussian { re: rat(re.0, re.1), im: rat(im.0, im.1) }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        Gaussian { re: Rat::zero(), im: Rat::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Gaussian { re: self.re.clone(), im: -self.im.clone() }
    }

    /// re² + im², the norm form of Q(i)/Q.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero in Q(i)");
        let n = self.norm();
        Gaussian { re: &self.re / &n, im: -(&self.im / &n) }
    }

    /// A square root in Q(i), if one exists. For nonzero input the root with
    /// positive real part (or with positive imaginary part when purely
    /// imaginary-rooted) is returned.
    pub fn sqrt(&self) -> Option<Gaussian> {
        if self.is_zero() {
            return Some(Gaussian::zero());
        }
        if self.im.is_zero() {
            if !self.re.is_negative() {
                return rat_sqrt(&self.re).map(Gaussian::from_rat);
            }
            let d = rat_sqrt(&(-self.re.clone()))?;
            return Some(Gaussian { re: Rat::zero(), im: d });
        }
        let n = rat_sqrt(&self.norm())?;
        let half = rat(1, 2);
        let c2 = (&self.re + &n) * &half;
        let c = rat_sqrt(&c2)?;
        if c.is_zero() {
            return None;
        }
        let d = &self.im / (&c + &c);
        Some(Gaussian { re: c, im: d })
    }
}

macro_rules! gaussian_binop {
    ($trait:ident, $method:ident, |$a:ident, $b:ident| $body:expr) => {
        impl $trait for &Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: &Gaussian) -> Gaussian {
                let $a = self;
                let $b = rhs;
                $body
            }
        }
        impl $trait for Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: Gaussian) -> Gaussian {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Gaussian> for Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: &Gaussian) -> Gaussian {
                (&self).$method(rhs)
            }
        }
        impl $trait<Gaussian> for &Gaussian {
            type Output = Gaussian;
            fn $method(self, rhs: Gaussian) -> Gaussian {
                self.$method(&rhs)
            }
        }
    };
}

gaussian_binop!(Add, add, |a, b| Gaussian { re: &a.re + &b.re, im: &a.im + &b.im });
gaussian_binop!(Sub, sub, |a, b| Gaussian { re: &a.re - &b.re, im: &a.im - &b.im });
gaussian_binop!(Mul, mul, |a, b| Gaussian {
    re: &a.re * &b.re - &a.im * &b.im,
    im: &a.re * &b.im + &a.im * &b.re,
});
gaussian_binop!(Div, div, |a, b| a * &b.inv());

impl Neg for &Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        Gaussian { re: -self.re.clone(), im: -self.im.clone() }
    }
}

impl Neg for Gaussian {
    type Output = Gaussian;
    fn neg(self) -> Gaussian {
        -&self
    }
}

impl fmt::Display for Gaussian {
    /// Serialized as "a/b", "c/d*i" or "a/b+c/d*i" (with "-" absorbed into
    /// the numerators); integers drop the "/1".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}-{}*i", self.re, -self.im.clone())
        } else {
            write!(f, "{}+{}*i", self.re, self.im)
        }
    }
}

impl fmt::Debug for Gaussian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for Gaussian {
    type Err = AlgebraError;

    /// Accepts "a/b", "a/b+c/d*i", "a/b-c/d*i", "c/d*i", "i", "-i".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let err = || AlgebraError::Parse(s.clone());
        if s.is_empty() {
            return Err(err());
        }
        let parse_rat = |t: &str| -> Result<Rat, AlgebraError> {
            match t {
                "" | "+" => Ok(Rat::one()),
                "-" => Ok(-Rat::one()),
                _ => Rat::from_str(t).map_err(|_| AlgebraError::Parse(s.clone())),
            }
        };
        // Split at the last '+' or '-' that is not the leading sign.
        let split_at = s
            .char_indices()
            .skip(1)
            .filter(|(idx, c)| (*c == '+' || *c == '-') && !s[..*idx].ends_with('/'))
            .map(|(idx, _)| idx)
            .last();
        let (first, second) = match split_at {
            Some(idx) => (&s[..idx], Some(&s[idx..])),
            None => (&s[..], None),
        };
        let parse_term = |t: &str| -> Result<(Rat, bool), AlgebraError> {
            if let Some(coeff) = t.strip_suffix("*i").or_else(|| t.strip_suffix('i')) {
                Ok((parse_rat(coeff)?, true))
            } else {
                Ok((parse_rat(t)?, false))
            }
        };
        let mut re = Rat::zero();
        let mut im = Rat::zero();
        let mut seen_im = false;
        for term in std::iter::once(first).chain(second) {
            let (val, is_im) = parse_term(term)?;
            if is_im {
                if seen_im {
                    return Err(err());
                }
                seen_im = true;
                im = val;
            } else {
                re = re + val;
            }
        }
        Ok(Gaussian { re, im })
    }
}

/// Polynomial over Q(i), coefficients stored low degree to high with no
/// trailing zeros.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Gaussian>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Gaussian>) -> Self {
        while coeffs.last().map_or(false, Gaussian::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Poly::constant(Gaussian::one())
    }

    pub fn constant(c: Gaussian) -> Self {
        Poly::new(vec![c])
    }

    pub fn x() -> Self {
        Poly::new(vec![Gaussian::zero(), Gaussian::one()])
    }

    /// z − p
    pub fn linear(p: &Gaussian) -> Self {
        Poly::new(vec![-p, Gaussian::one()])
    }

    pub fn from_roots(roots: &[Gaussian]) -> Self {
        roots.iter().fold(Poly::one(), |acc, r| &acc * &Poly::linear(r))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Gaussian] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Gaussian {
        self.coeffs.get(k).cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn leading(&self) -> Gaussian {
        self.coeffs.last().cloned().unwrap_or_else(Gaussian::zero)
    }

    pub fn eval(&self, p: &Gaussian) -> Gaussian {
        let mut acc = Gaussian::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * p + c;
        }
        acc
    }

    pub fn scale(&self, c: &Gaussian) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &Gaussian::from_int(k as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            Poly::zero()
        } else {
            self.scale(&self.leading().inv())
        }
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let dd = d.degree().unwrap();
        let lc_inv = d.leading().inv();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Gaussian::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lc_inv;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let t = &factor * dc;
                rem[k + j] = &rem[k + j] - &t;
            }
            while rem.last().map_or(false, Gaussian::is_zero) {
                rem.pop();
            }
            quot[k] = factor;
        }
        (Poly::new(quot), Poly::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of the root p.
    pub fn root_multiplicity(&self, p: &Gaussian) -> usize {
        if self.is_zero() {
            return 0;
        }
        let lin = Poly::linear(p);
        let mut m = 0;
        let mut cur = self.clone();
        loop {
            let (q, r) = cur.div_rem(&lin);
            if r.is_zero() {
                m += 1;
                cur = q;
            } else {
                return m;
            }
        }
    }

    /// Square root of a polynomial that is a perfect square, by matching
    /// coefficients from the top down.
    pub fn sqrt(&self) -> Option<Poly> {
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let n = self.degree().unwrap();
        if n % 2 != 0 {
            return None;
        }
        let m = n / 2;
        let lead = self.leading().sqrt()?;
        let mut s = vec![Gaussian::zero(); m + 1];
        s[m] = lead;
        let two_lead_inv = (&s[m] + &s[m]).inv();
        for j in (0..m).rev() {
            // coefficient of z^{m+j} in s²: 2·s_m·s_j + Σ_{a+b=m+j, j<a,b<m} s_a·s_b
            let mut known = Gaussian::zero();
            for a in (j + 1)..m {
                let b = m + j - a; // also strictly between j and m
                known = &known + &(&s[a] * &s[b]);
            }
            s[j] = (&self.coeff(m + j) - &known) * &two_lead_inv;
        }
        let cand = Poly::new(s);
        if &(&cand * &cand) == self {
            Some(cand)
        } else {
            None
        }
    }
}

macro_rules! poly_binop_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
    };
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Gaussian::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (a, ca) in self.coeffs.iter().enumerate() {
            for (b, cb) in rhs.coeffs.iter().enumerate() {
                out[a + b] = &out[a + b] + &(ca * cb);
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

poly_binop_owned!(Add, add);
poly_binop_owned!(Sub, sub);
poly_binop_owned!(Mul, mul);

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| match k {
                0 => format!("({})", c),
                1 => format!("({})*z", c),
                _ => format!("({})*z^{}", c, k),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// Quotient of two coprime polynomials; the denominator is monic and nonzero.
#[derive(Clone, PartialEq, Eq)]
pub struct Rf {
    num: Poly,
    den: Poly,
}

impl Rf {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Rf { num: Poly::zero(), den: Poly::one() };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lc_inv = den.leading().inv();
        Rf { num: num.scale(&lc_inv), den: den.scale(&lc_inv) }
    }

    pub fn from_poly(p: Poly) -> Self {
        Rf { num: p, den: Poly::one() }
    }

    pub fn constant(c: Gaussian) -> Self {
        Rf::from_poly(Poly::constant(c))
    }

    pub fn zero() -> Self {
        Rf::from_poly(Poly::zero())
    }

    pub fn one() -> Self {
        Rf::from_poly(Poly::one())
    }

    pub fn x() -> Self {
        Rf::from_poly(Poly::x())
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverting the zero rational function");
        Rf::new(self.den.clone(), self.num.clone())
    }

    /// Order of vanishing at p: multiplicity in the numerator minus
    /// multiplicity in the denominator. None for the zero function.
    pub fn ord_at(&self, p: &Gaussian) -> Option<i64> {
        if self.is_zero() {
            return None;
        }
        Some(self.num.root_multiplicity(p) as i64 - self.den.root_multiplicity(p) as i64)
    }

    /// Degree at infinity: deg(num) − deg(den). None for the zero function.
    pub fn degree_at_infinity(&self) -> Option<i64> {
        Some(self.num.degree()? as i64 - self.den.degree().unwrap() as i64)
    }

    /// Value at a point that is not a pole.
    pub fn eval(&self, p: &Gaussian) -> Option<Gaussian> {
        let d = self.den.eval(p);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.eval(p) / &d)
    }

    /// Laurent coefficient of (z−p)^{−k} at a point where the pole order is
    /// exactly k ≥ 1: strip (z−p)^k from the denominator and evaluate. The
    /// numerator cannot vanish at p since num and den are coprime.
    fn laurent_coeff(&self, p: &Gaussian, k: usize) -> Result<Gaussian, AlgebraError> {
        debug_assert_eq!(self.ord_at(p), Some(-(k as i64)));
        let lin = Poly::linear(p);
        let mut den = self.den.clone();
        for _ in 0..k {
            den = den.div_rem(&lin).0;
        }
        Ok(&self.num.eval(p) / &den.eval(p))
    }

    /// Residue at p; the input must have at worst a simple pole there.
    pub fn residue_at(&self, p: &Gaussian) -> Result<Gaussian, AlgebraError> {
        if self.is_zero() {
            return Ok(Gaussian::zero());
        }
        let ord = self.ord_at(p).unwrap();
        if ord >= 0 {
            return Ok(Gaussian::zero());
        }
        if ord < -1 {
            return Err(AlgebraError::PoleOrderTooHigh);
        }
        self.laurent_coeff(p, 1)
    }

    /// Laurent coefficient of (z−p)^{−2}; allows pole order ≤ 2. This is the
    /// leading coefficient of a quadratic differential at a double pole.
    pub fn double_pole_coeff(&self, p: &Gaussian) -> Result<Gaussian, AlgebraError> {
        if self.is_zero() {
            return Ok(Gaussian::zero());
        }
        let ord = self.ord_at(p).unwrap();
        if ord >= -1 {
            return Ok(Gaussian::zero());
        }
        if ord < -2 {
            return Err(AlgebraError::PoleOrderTooHigh);
        }
        self.laurent_coeff(p, 2)
    }

    /// Simple-pole residue of f allowing a double pole: the coefficient of
    /// (z−p)^{−1} in the Laurent expansion when the pole order is ≤ 2.
    pub fn subleading_residue_at(&self, p: &Gaussian) -> Result<Gaussian, AlgebraError> {
        if self.is_zero() {
            return Ok(Gaussian::zero());
        }
        let ord = self.ord_at(p).unwrap();
        if ord >= 0 {
            return Ok(Gaussian::zero());
        }
        if ord == -1 {
            return self.residue_at(p);
        }
        if ord < -2 {
            return Err(AlgebraError::PoleOrderTooHigh);
        }
        // f − c₂/(z−p)² has at worst a simple pole at p.
        let c2 = self.laurent_coeff(p, 2)?;
        let lin = Poly::linear(p);
        let reduced = self - &Rf::new(Poly::constant(c2), &lin * &lin);
        reduced.residue_at(p)
    }

    /// A rational function s with s² equal to self, if one exists over Q(i).
    pub fn square_root(&self) -> Option<Rf> {
        if self.is_zero() {
            return Some(Rf::zero());
        }
        let sn = self.num.sqrt()?;
        let sd = self.den.sqrt()?;
        Some(Rf::new(sn, sd))
    }
}

macro_rules! rf_binop_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Rf {
            type Output = Rf;
            fn $method(self, rhs: Rf) -> Rf {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Rf> for Rf {
            type Output = Rf;
            fn $method(self, rhs: &Rf) -> Rf {
                (&self).$method(rhs)
            }
        }
        impl $trait<Rf> for &Rf {
            type Output = Rf;
            fn $method(self, rhs: Rf) -> Rf {
                self.$method(&rhs)
            }
        }
    };
}

impl Add for &Rf {
    type Output = Rf;
    fn add(self, rhs: &Rf) -> Rf {
        Rf::new(&(&self.num * &rhs.den) + &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Sub for &Rf {
    type Output = Rf;
    fn sub(self, rhs: &Rf) -> Rf {
        Rf::new(&(&self.num * &rhs.den) - &(&rhs.num * &self.den), &self.den * &rhs.den)
    }
}

impl Mul for &Rf {
    type Output = Rf;
    fn mul(self, rhs: &Rf) -> Rf {
        Rf::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &Rf {
    type Output = Rf;
    fn div(self, rhs: &Rf) -> Rf {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        Rf::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &Rf {
    type Output = Rf;
    fn neg(self) -> Rf {
        Rf { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for Rf {
    type Output = Rf;
    fn neg(self) -> Rf {
        -&self
    }
}

rf_binop_owned!(Add, add);
rf_binop_owned!(Sub, sub);
rf_binop_owned!(Mul, mul);
rf_binop_owned!(Div, div);

impl fmt::Debug for Rf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}] / [{:?}]", self.num, self.den)
    }
}

/// Result of exact Gaussian elimination.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LinearSolution {
    Unique(Vec<Gaussian>),
    Inconsistent,
    Underdetermined,
}

/// Solve A·x = b over Q(i). A is given by rows.
pub fn solve_linear(a: &[Vec<Gaussian>], b: &[Gaussian]) -> LinearSolution {
    assert_eq!(a.len(), b.len());
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Gaussian>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            assert_eq!(row.len(), cols);
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) {
            m.swap(r, p);
            let inv = m[r][c].inv();
            for j in c..=cols {
                m[r][j] = &m[r][j] * &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..=cols {
                        let t = &f * &m[r][j];
                        m[i][j] = &m[i][j] - &t;
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == rows {
                break;
            }
        }
    }
    for i in r..rows {
        if !m[i][cols].is_zero() {
            return LinearSolution::Inconsistent;
        }
    }
    if pivot_cols.len() < cols {
        return LinearSolution::Underdetermined;
    }
    let mut x = vec![Gaussian::zero(); cols];
    for (row, &c) in pivot_cols.iter().enumerate() {
        x[c] = m[row][cols].clone();
    }
    LinearSolution::Unique(x)
}

/// Basis of the kernel of A over Q(i). A is given by rows.
pub fn kernel_basis(a: &[Vec<Gaussian>], cols: usize) -> Vec<Vec<Gaussian>> {
    let rows = a.len();
    let mut m: Vec<Vec<Gaussian>> = a.to_vec();
    for row in &m {
        assert_eq!(row.len(), cols);
    }
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; cols];
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        if let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) {
            m.swap(r, p);
            let inv = m[r][c].inv();
            for j in c..cols {
                m[r][j] = &m[r][j] * &inv;
            }
            for i in 0..rows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for j in c..cols {
                        let t = &f * &m[r][j];
                        m[i][j] = &m[i][j] - &t;
                    }
                }
            }
            pivot_of_col[c] = Some(r);
            r += 1;
        }
    }
    let mut basis = Vec::new();
    for free in 0..cols {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![Gaussian::zero(); cols];
        v[free] = Gaussian::one();
        for c in 0..cols {
            if let Some(row) = pivot_of_col[c] {
                v[c] = -&m[row][free];
            }
        }
        basis.push(v);
    }
    basis
}

/// The unique rational function with simple poles confined to `poles`,
/// numerator degree at most `num_deg_bound` over the product of the pole
/// factors, and the prescribed residues. The degree bound encodes regularity
/// at infinity of f·dz in the relevant line-bundle twist; for a section of
/// K(D) with |D| = 4 it is 2.
pub fn section_with_residues(
    poles: &[Gaussian],
    num_deg_bound: i64,
    residues: &[(Gaussian, Gaussian)],
) -> Result<Rf, AlgebraError> {
    let den = Poly::from_roots(poles);
    if num_deg_bound < 0 {
        if residues.iter().all(|(_, r)| r.is_zero()) {
            return Ok(Rf::zero());
        }
        return Err(AlgebraError::NoSolution);
    }
    let n_coeffs = num_deg_bound as usize + 1;
    let dprime = den.derivative();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (p, r) in residues {
        assert!(poles.contains(p), "residue prescribed at a non-pole point");
        let mut row = Vec::with_capacity(n_coeffs);
        let mut pk = Gaussian::one();
        for _ in 0..n_coeffs {
            row.push(pk.clone());
            pk = &pk * p;
        }
        rows.push(row);
        rhs.push(r * &dprime.eval(p));
    }
    match solve_linear(&rows, &rhs) {
        LinearSolution::Unique(c) => Ok(Rf::new(Poly::new(c), den)),
        LinearSolution::Inconsistent => Err(AlgebraError::NoSolution),
        LinearSolution::Underdetermined => Err(AlgebraError::NonUnique),
    }
}
