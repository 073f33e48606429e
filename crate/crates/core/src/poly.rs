//! Exact Laurent polynomials in `v` with integer coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::{Error, Result};

/// A Laurent polynomial `Σ c_k v^k`, stored densely from its lowest
/// nonzero exponent. The zero polynomial has no coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct VPolynomial {
    low: i32,
    coeffs: Vec<i64>,
}

impl VPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c·v^k`.
    pub fn monomial(c: i64, k: i32) -> Self {
        Self::from_dense(k, vec![c])
    }

    /// Builds `Σ coeffs[i] v^(low+i)`.
    pub fn from_dense(low: i32, coeffs: Vec<i64>) -> Self {
        let mut p = VPolynomial { low, coeffs };
        p.normalize();
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` terms.
    pub fn from_terms(terms: &[(i32, i64)]) -> Self {
        terms.iter().fold(Self::zero(), |acc, &(k, c)| acc + Self::monomial(c, k))
    }

    fn normalize(&mut self) {
        let lead = self.coeffs.iter().position(|&c| c != 0);
        match lead {
            None => {
                self.coeffs.clear();
                self.low = 0;
            }
            Some(i) => {
                self.coeffs.drain(..i);
                self.low += i as i32;
                while self.coeffs.last() == Some(&0) {
                    self.coeffs.pop();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn min_degree(&self) -> Option<i32> {
        (!self.is_zero()).then_some(self.low)
    }

    pub fn max_degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> i64 {
        let i = k - self.low;
        if i < 0 {
            0
        } else {
            self.coeffs.get(i as usize).copied().unwrap_or(0)
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.low + i as i32, c))
    }

    /// The bar involution `v ↦ v⁻¹`.
    pub fn bar(&self) -> Self {
        match self.max_degree() {
            None => Self::zero(),
            Some(top) => {
                let mut coeffs = self.coeffs.clone();
                coeffs.reverse();
                VPolynomial { low: -top, coeffs }
            }
        }
    }

    /// Multiplication by `v^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        VPolynomial { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: i64) -> Self {
        Self::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Value at `v = 1`.
    pub fn eval_one(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Derivative at `v = 1`, `Σ k c_k`.
    pub fn derivative_at_one(&self) -> i64 {
        self.terms().map(|(k, c)| k as i64 * c).sum()
    }

    /// Lies in `vℤ[v]`.
    pub fn in_v_z_v(&self) -> bool {
        self.is_zero() || self.low >= 1
    }

    /// Lies in `vℕ[v]`.
    pub fn in_v_n_v(&self) -> bool {
        self.in_v_z_v() && self.coeffs.iter().all(|&c| c >= 0)
    }

    /// All coefficients are nonnegative and all exponents ≥ 0.
    pub fn in_n_v(&self) -> bool {
        self.is_zero() || (self.low >= 0 && self.coeffs.iter().all(|&c| c >= 0))
    }

    /// Every nonzero term has exponent of the given parity (0 even, 1 odd).
    pub fn has_parity(&self, parity: i32) -> bool {
        self.terms().all(|(k, _)| k.rem_euclid(2) == parity)
    }

    /// The bar-invariant `γ` with `γ - self ∈ vℤ[v]`:
    /// `a_0 + Σ_{k>0} a_{-k}(v^k + v^{-k})`.
    pub fn bar_symmetric_completion(&self) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.terms().filter(|&(k, _)| k <= 0) {
            out += Self::monomial(c, k);
            if k < 0 {
                out += Self::monomial(c, -k);
            }
        }
        out
    }

    /// The quantum integer `[a] = v^{a-1} + v^{a-3} + … + v^{1-a}`.
    pub fn quantum_integer(a: u32) -> Self {
        let a = a as i32;
        Self::from_terms(&(0..a).map(|i| (a - 1 - 2 * i, 1)).collect::<Vec<_>>())
    }

    /// `[a]! = [1][2]…[a]`.
    pub fn quantum_factorial(a: u32) -> Self {
        (1..=a).fold(Self::one(), |acc, i| &acc * &Self::quantum_integer(i))
    }

    /// Exact division; the divisor's lowest coefficient must be ±1.
    pub fn div_exact(&self, divisor: &VPolynomial) -> Result<Self> {
        let fail = || Error::InexactDivision(self.to_string(), divisor.to_string());
        if divisor.is_zero() {
            return Err(fail());
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let d0 = divisor.coeffs[0];
        if d0.abs() != 1 {
            return Err(fail());
        }
        let dn = divisor.coeffs.len();
        if self.coeffs.len() < dn {
            return Err(fail());
        }
        let qn = self.coeffs.len() - dn + 1;
        let mut rem = self.coeffs.clone();
        let mut quotient = vec![0i64; qn];
        for i in 0..qn {
            let q = rem[i] * d0;
            quotient[i] = q;
            if q != 0 {
                for (k, &d) in divisor.coeffs.iter().enumerate() {
                    rem[i + k] -= q * d;
                }
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(fail());
        }
        Ok(Self::from_dense(self.low - divisor.low, quotient))
    }
}

impl Add for VPolynomial {
    type Output = VPolynomial;
    fn add(mut self, rhs: VPolynomial) -> VPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&VPolynomial> for VPolynomial {
    fn add_assign(&mut self, rhs: &VPolynomial) {
        self.combine(rhs, 1);
    }
}

impl AddAssign for VPolynomial {
    fn add_assign(&mut self, rhs: VPolynomial) {
        self.combine(&rhs, 1);
    }
}

impl SubAssign<&VPolynomial> for VPolynomial {
    fn sub_assign(&mut self, rhs: &VPolynomial) {
        self.combine(rhs, -1);
    }
}

impl Sub for VPolynomial {
    type Output = VPolynomial;
    fn sub(mut self, rhs: VPolynomial) -> VPolynomial {
        self -= &rhs;
        self
    }
}

impl Neg for VPolynomial {
    type Output = VPolynomial;
    fn neg(self) -> VPolynomial {
        self.scale(-1)
    }
}

impl Mul for &VPolynomial {
    type Output = VPolynomial;
    fn mul(self, rhs: &VPolynomial) -> VPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return VPolynomial::zero();
        }
        let mut coeffs = vec![0i64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        VPolynomial::from_dense(self.low + rhs.low, coeffs)
    }
}

impl VPolynomial {
    /// `self += sign·rhs`.
    fn combine(&mut self, rhs: &VPolynomial, sign: i64) {
        if rhs.is_zero() {
            return;
        }
        if self.is_zero() {
            *self = rhs.scale(sign);
            return;
        }
        let low = self.low.min(rhs.low);
        let high = self.max_degree().unwrap().max(rhs.max_degree().unwrap());
        if low < self.low {
            let pad = (self.low - low) as usize;
            self.coeffs.splice(0..0, std::iter::repeat_n(0, pad));
            self.low = low;
        }
        let len = (high - low + 1) as usize;
        self.coeffs.resize(len, 0);
        let offset = (rhs.low - low) as usize;
        for (i, &c) in rhs.coeffs.iter().enumerate() {
            self.coeffs[offset + i] += sign * c;
        }
        self.normalize();
    }
}

impl fmt::Display for VPolynomial {
    /// Descending exponents, e.g. `v^3+v`, `2v`, `1`, `0`, `-v^-2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<(i32, i64)> = self.terms().collect();
        for (idx, &(k, c)) in terms.iter().rev().enumerate() {
            let sign = if c < 0 { "-" } else if idx > 0 { "+" } else { "" };
            let mag = c.unsigned_abs();
            let body = match (k, mag) {
                (0, m) => m.to_string(),
                (1, 1) => "v".to_string(),
                (1, m) => format!("{m}v"),
                (k, 1) => format!("v^{k}"),
                (k, m) => format!("{m}v^{k}"),
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

impl FromStr for VPolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::MalformedText(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.is_empty() {
            return Err(bad());
        }
        // Split into signed terms, keeping the '-' that belongs to an exponent.
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = t.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&t[start..i]);
                start = i;
            }
        }
        terms.push(&t[start..]);
        let mut out = VPolynomial::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (c, k) = match body.find('v') {
                None => (body.parse::<i64>().map_err(|_| bad())?, 0),
                Some(pos) => {
                    let c = if pos == 0 { 1 } else { body[..pos].parse::<i64>().map_err(|_| bad())? };
                    let rest = &body[pos + 1..];
                    let k = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^').ok_or_else(bad)?.parse::<i32>().map_err(|_| bad())?
                    };
                    (c, k)
                }
            };
            out += VPolynomial::monomial(if neg { -c } else { c }, k);
        }
        Ok(out)
    }
}
