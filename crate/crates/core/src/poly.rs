//! Dense univariate integer polynomials, constant term first.
//!
//! Coefficients are `i128` and every arithmetic step is overflow-checked, so a
//! result is either exact or the computation panics. All polynomials handled
//! here (Poincaré series, rank-generating functions, characteristic
//! polynomials) have coefficients far below that range.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{Serialize, SerializeSeq, Serializer};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<i128>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly { coeffs: vec![1] }
    }

    pub fn constant(c: i128) -> Self {
        Poly::new(vec![c])
    }

    /// `t^k`
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        Poly { coeffs }
    }

    pub fn new(mut coeffs: Vec<i128>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Builds `Σ t^e` over the given exponents.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut coeffs: Vec<i128> = Vec::new();
        for e in exps {
            if coeffs.len() <= e {
                coeffs.resize(e + 1, 0);
            }
            coeffs[e] += 1;
        }
        Poly::new(coeffs)
    }

    /// `∏ (t - r)` over the given roots.
    pub fn from_roots<I: IntoIterator<Item = i128>>(roots: I) -> Self {
        roots
            .into_iter()
            .fold(Poly::one(), |acc, r| acc * Poly::new(vec![-r, 1]))
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> i128 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn coeff(&self, k: usize) -> i128 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn eval(&self, t: i128) -> i128 {
        self.coeffs.iter().rev().fold(0i128, |acc, &c| {
            acc.checked_mul(t)
                .and_then(|v| v.checked_add(c))
                .expect("polynomial evaluation overflow")
        })
    }

    /// Exact division. Returns `None` unless `divisor` divides `self` with
    /// zero remainder and integral quotient.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        let dd = divisor.degree()?;
        let lead = divisor.leading();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(Poly::zero()) } else { None };
        }
        let mut quot = vec![0i128; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            if c % lead != 0 {
                return None;
            }
            let q = c / lead;
            quot[k] = q;
            for (j, &d) in divisor.coeffs.iter().enumerate() {
                let prod = q.checked_mul(d).expect("polynomial division overflow");
                rem[k + j] = rem[k + j].checked_sub(prod).expect("polynomial division overflow");
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return None;
        }
        Some(Poly::new(quot))
    }

    /// Coefficients as `i64` when they fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(|&c| i64::try_from(c).ok()).collect()
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new(
            (0..n)
                .map(|k| {
                    self.coeff(k)
                        .checked_add(rhs.coeff(k))
                        .expect("polynomial addition overflow")
                })
                .collect(),
        )
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs.clone())
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0i128; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                let p = a.checked_mul(b).expect("polynomial multiplication overflow");
                out[i + j] = out[i + j].checked_add(p).expect("polynomial multiplication overflow");
            }
        }
        Poly::new(out)
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

/// Ascending powers: `1 + 2t + 2t^2 + t^3`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else if c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => write!(f, "t")?,
                (1, m) => write!(f, "{m}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, m) => write!(f, "{m}t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for &c in &self.coeffs {
            match i64::try_from(c) {
                Ok(v) => seq.serialize_element(&v)?,
                Err(_) => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}
