//! Sparse multivariate Laurent polynomials with exact rational coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration order is
//! deterministic and no zero coefficient is ever stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::rational::{format_rational, int, parse_rational, to_f64, Rational};

pub type Exponent = SmallVec<[i32; 8]>;

#[derive(Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    n: usize,
    terms: BTreeMap<Exponent, Rational>,
}

impl SparsePoly {
    pub fn zero(n: usize) -> Self {
        SparsePoly { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Exponent::from_elem(0, n), c);
        p
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    /// The variable `x_i` (0-based).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = Exponent::from_elem(0, n);
        e[i] = 1;
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(exp: Exponent, coeff: Rational) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, Rational)>,
    {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::Dimension { expected: n, found: e.len() });
            }
            p.add_term(Exponent::from_vec(e), c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[i32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_coeff(&self) -> Rational {
        self.coeff(&vec![0; self.n])
    }

    pub fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(exp.len(), self.n);
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_dim(&self, other: &Self) {
        assert_eq!(self.n, other.n, "ambient dimension mismatch");
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SparsePoly { n: self.n, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn mul_monomial(&self, exp: &[i32], c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        let terms = self.terms.iter().map(|(e, v)| (e.iter().zip(exp).map(|(a, b)| a + b).collect(), v * c)).collect();
        SparsePoly { n: self.n, terms }
    }

    pub fn mul_var(&self, i: usize) -> Self {
        let mut e = vec![0; self.n];
        e[i] = 1;
        self.mul_monomial(&e, &Rational::one())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Keeps the terms whose exponent satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&[i32]) -> bool) -> Self {
        SparsePoly {
            n: self.n,
            terms: self.terms.iter().filter(|(e, _)| keep(e)).map(|(e, c)| (e.clone(), c.clone())).collect(),
        }
    }

    /// Product truncated to the terms accepted by `keep`; `keep` must be
    /// closed under taking divisors for the truncation to be exact.
    pub fn mul_truncated(&self, other: &Self, keep: &dyn Fn(&[i32]) -> bool) -> Self {
        self.check_dim(other);
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                if keep(&e) {
                    out.add_term(e, ca * cb);
                }
            }
        }
        out
    }

    pub fn total_degree(&self) -> Option<i32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// `Some(d)` if every term has total degree `d` (the zero polynomial is homogeneous of degree 0).
    pub fn homogeneous_degree(&self) -> Option<i32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<i32>());
        match degs.next() {
            None => Some(0),
            Some(d) => degs.all(|x| x == d).then_some(d),
        }
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if e[i] != 0 {
                let mut f = e.clone();
                f[i] -= 1;
                out.add_term(f, c * int(e[i] as i64));
            }
        }
        out
    }

    /// Exchanges the variables `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        if i == j {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = e.clone();
                f.swap(i, j);
                (f, c.clone())
            })
            .collect();
        SparsePoly { n: self.n, terms }
    }

    /// Renames variables: `x_k` becomes `x_{perm[k]}`.
    pub fn permute_vars(&self, perm: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = Exponent::from_elem(0, self.n);
                for (k, &p) in perm.iter().enumerate() {
                    f[p] = e[k];
                }
                for k in perm.len()..self.n {
                    f[k] = e[k];
                }
                (f, c.clone())
            })
            .collect();
        SparsePoly { n: self.n, terms }
    }

    /// `p(1/x)` in the listed variables.
    pub fn invert_vars(&self, vars: std::ops::Range<usize>) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = e.clone();
                for k in vars.clone() {
                    f[k] = -f[k];
                }
                (f, c.clone())
            })
            .collect();
        SparsePoly { n: self.n, terms }
    }

    /// `p(c x)` in the listed variables.
    pub fn scale_vars(&self, vars: std::ops::Range<usize>, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (e, v) in &self.terms {
            let d: i32 = vars.clone().map(|k| e[k]).sum();
            out.add_term(e.clone(), v * crate::rational::pow(c, d));
        }
        out
    }

    /// Places this polynomial into `n_new` variables starting at `offset`.
    pub fn embed(&self, n_new: usize, offset: usize) -> Self {
        assert!(offset + self.n <= n_new);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut f = Exponent::from_elem(0, n_new);
                f[offset..offset + self.n].copy_from_slice(e);
                (f, c.clone())
            })
            .collect();
        SparsePoly { n: n_new, terms }
    }

    /// Drops trailing variables that do not occur; errors if they do.
    pub fn restrict(&self, n_new: usize) -> Result<Self> {
        let mut out = Self::zero(n_new);
        for (e, c) in &self.terms {
            if e[n_new..].iter().any(|&x| x != 0) {
                return Err(Error::Dimension { expected: n_new, found: self.n });
            }
            out.add_term(Exponent::from_slice(&e[..n_new]), c.clone());
        }
        Ok(out)
    }

    /// Sets trailing variables `x_{n_new}, ...` to zero.
    pub fn truncate_vars(&self, n_new: usize) -> Self {
        let mut out = Self::zero(n_new);
        for (e, c) in &self.terms {
            if e[n_new..].iter().all(|&x| x == 0) {
                out.add_term(Exponent::from_slice(&e[..n_new]), c.clone());
            }
        }
        out
    }

    /// Replaces each variable `x_k` by `images[k]`; negative exponents are not allowed.
    pub fn substitute(&self, images: &[SparsePoly]) -> Self {
        self.substitute_truncated(images, &|_| true)
    }

    pub fn substitute_truncated(&self, images: &[SparsePoly], keep: &dyn Fn(&[i32]) -> bool) -> Self {
        assert_eq!(images.len(), self.n);
        let m = images.first().map(|p| p.n).unwrap_or(0);
        let mut powers: Vec<Vec<SparsePoly>> = images.iter().map(|p| vec![SparsePoly::one(p.n)]).collect();
        let mut out = SparsePoly::zero(m);
        for (e, c) in &self.terms {
            let mut acc = SparsePoly::constant(m, c.clone());
            for (k, &ek) in e.iter().enumerate() {
                assert!(ek >= 0, "substitution into a negative power");
                while powers[k].len() <= ek as usize {
                    let next = powers[k].last().unwrap().mul_truncated(&images[k], keep);
                    powers[k].push(next);
                }
                if ek > 0 {
                    acc = acc.mul_truncated(&powers[k][ek as usize], keep);
                }
            }
            out += &acc;
        }
        out
    }

    /// `p(x + 1)` in the listed variables.
    pub fn shift_by_one(&self, vars: std::ops::Range<usize>) -> Self {
        let images: Vec<SparsePoly> = (0..self.n)
            .map(|k| {
                let x = SparsePoly::var(self.n, k);
                if vars.contains(&k) {
                    x + SparsePoly::one(self.n)
                } else {
                    x
                }
            })
            .collect();
        self.substitute(&images)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.n);
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e.iter()) {
                t *= crate::rational::pow(x, k);
            }
            acc += t;
        }
        acc
    }

    pub fn eval_ones(&self) -> Rational {
        self.terms.values().fold(Rational::zero(), |a, c| a + c)
    }

    /// Floating evaluation over any field-like numeric type.
    pub fn eval_num<T>(&self, point: &[T]) -> T
    where
        T: Copy + num::traits::NumOps + Zero + One + From<f64>,
    {
        let mut acc = T::zero();
        for (e, c) in &self.terms {
            let mut t = T::from(to_f64(c));
            for (x, &k) in point.iter().zip(e.iter()) {
                let base = if k < 0 { T::one() / *x } else { *x };
                for _ in 0..k.unsigned_abs() {
                    t = t * base;
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Constant term of a Laurent polynomial.
    pub fn constant_term(&self) -> Rational {
        self.constant_coeff()
    }

    /// Sum over all permutations of the first `k` variables.
    pub fn symmetrize(&self, k: usize) -> Self {
        let mut out = Self::zero(self.n);
        for perm in permutations(k) {
            out += &self.permute_vars(&perm);
        }
        out
    }

    pub fn is_symmetric(&self, k: usize) -> bool {
        (0..k.saturating_sub(1)).all(|i| self.swap_vars(i, i + 1) == *self)
    }

    /// `(p - s_ij p) / (x_i - x_j)`, computed termwise.
    pub fn divided_difference(&self, i: usize, j: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let (a, b) = (e[i], e[j]);
            if a == b {
                continue;
            }
            let m = a.min(b);
            let d = (a - b).abs();
            let coeff = if a > b { c.clone() } else { -c.clone() };
            for k in 0..d {
                let mut f = e.clone();
                f[i] = m + d - 1 - k;
                f[j] = m + k;
                out.add_term(f, coeff.clone());
            }
        }
        out
    }

    /// Exact quotient by `x_i - x_j`; fails if `p` does not vanish on `x_i = x_j`.
    pub fn div_by_difference(&self, i: usize, j: usize) -> Result<Self> {
        let mut quotient = Self::zero(self.n);
        let mut remainder = Self::zero(self.n);
        for (e, c) in &self.terms {
            let a = e[i];
            let mut r = e.clone();
            r[i] = 0;
            r[j] += a;
            remainder.add_term(r, c.clone());
            // x_i^a - x_j^a = (x_i - x_j) * q_a
            let mut base = e.clone();
            base[i] = 0;
            if a > 0 {
                for t in 0..a {
                    let mut f = base.clone();
                    f[i] = a - 1 - t;
                    f[j] += t;
                    quotient.add_term(f, c.clone());
                }
            } else if a < 0 {
                for t in 0..(-a) {
                    let mut f = base.clone();
                    f[i] = a + t;
                    f[j] += a + (-a - 1 - t);
                    quotient.add_term(f, -c.clone());
                }
            }
        }
        if !remainder.is_zero() {
            return Err(Error::Remainder(format!("division by x{i} - x{j}")));
        }
        Ok(quotient)
    }

    /// Canonical JSON value: terms in descending lexicographic exponent order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(PolyJson::from(self)).expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let pj: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        pj.try_into()
    }

    pub fn json_terms(&self) -> Vec<(Vec<i32>, String, String)> {
        self.terms.iter().rev().map(|(e, c)| (e.to_vec(), c.numer().to_string(), c.denom().to_string())).collect()
    }
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<(Vec<i32>, String, String)>,
}

impl From<&SparsePoly> for PolyJson {
    fn from(p: &SparsePoly) -> Self {
        PolyJson { n: p.n, terms: p.json_terms() }
    }
}

impl TryFrom<PolyJson> for SparsePoly {
    type Error = Error;
    fn try_from(pj: PolyJson) -> Result<Self> {
        let terms = pj
            .terms
            .into_iter()
            .map(|(e, num, den)| Ok((e, parse_rational(&format!("{num}/{den}"))?)))
            .collect::<Result<Vec<_>>>()?;
        SparsePoly::from_terms(pj.n, terms)
    }
}

impl Serialize for SparsePoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for SparsePoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pj = PolyJson::deserialize(d)?;
        pj.try_into().map_err(serde::de::Error::custom)
    }
}

/// All permutations of `0..k` (Heap's algorithm).
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn heap(m: usize, a: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if m <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..m {
            heap(m - 1, a, out);
            if m.is_multiple_of(2) {
                a.swap(i, m - 1);
            } else {
                a.swap(0, m - 1);
            }
        }
    }
    let mut a: Vec<usize> = (0..k).collect();
    let mut out = Vec::new();
    heap(k, &mut a, &mut out);
    out
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() {
                "-"
            } else if k > 0 {
                "+"
            } else {
                ""
            };
            let abs = c.abs();
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x != 0)
                .map(|(i, &x)| if x == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, x) })
                .collect();
            if k > 0 {
                write!(f, " ")?;
            }
            if vars.is_empty() {
                write!(f, "{sign}{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{sign}{}", vars.join("*"))?;
            } else {
                write!(f, "{sign}{}*{}", format_rational(&abs), vars.join("*"))?;
            }
        }
        Ok(())
    }
}

impl AddAssign<&SparsePoly> for SparsePoly {
    fn add_assign(&mut self, rhs: &SparsePoly) {
        self.check_dim(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), c.clone());
        }
    }
}

impl SubAssign<&SparsePoly> for SparsePoly {
    fn sub_assign(&mut self, rhs: &SparsePoly) {
        self.check_dim(rhs);
        for (e, c) in &rhs.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }
}

impl Add<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Add for SparsePoly {
    type Output = SparsePoly;
    fn add(mut self, rhs: SparsePoly) -> SparsePoly {
        self += &rhs;
        self
    }
}

impl Sub for SparsePoly {
    type Output = SparsePoly;
    fn sub(mut self, rhs: SparsePoly) -> SparsePoly {
        self -= &rhs;
        self
    }
}

impl Mul<&SparsePoly> for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        self.mul_truncated(rhs, &|_| true)
    }
}

impl Mul for SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: SparsePoly) -> SparsePoly {
        &self * &rhs
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        self.scale(&-Rational::one())
    }
}

impl Neg for SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn x(n: usize, i: usize) -> SparsePoly {
        SparsePoly::var(n, i)
    }

    #[test]
    fn laurent_product_constant_term() {
        let n = 2;
        let t = x(n, 0).mul_monomial(&[0, -1], &Rational::one());
        let s = x(n, 1).mul_monomial(&[-1, 0], &Rational::one());
        let one = SparsePoly::one(n);
        let p = (&one - &t) * (&one - &s);
        let expected =
            SparsePoly::from_terms(2, vec![(vec![0, 0], int(2)), (vec![1, -1], int(-1)), (vec![-1, 1], int(-1))])
                .unwrap();
        assert_eq!(p, expected);
        assert_eq!(p.constant_term(), int(2));
    }

    #[test]
    fn no_zero_terms_after_cancellation() {
        let p = &x(2, 0) - &x(2, 0);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn divided_difference_matches_division() {
        let n = 3;
        let p = x(n, 0).pow(3) * x(n, 1) + x(n, 2).scale(&rat(2, 3)) * x(n, 1).pow(2);
        let num = &p - &p.swap_vars(0, 1);
        let q = num.div_by_difference(0, 1).unwrap();
        assert_eq!(q, p.divided_difference(0, 1));
        assert!(p.div_by_difference(0, 1).is_err());
    }

    #[test]
    fn laurent_division() {
        let n = 2;
        let p = x(n, 0).mul_monomial(&[-3, 1], &Rational::one());
        let num = &p - &p.swap_vars(0, 1);
        let q = num.div_by_difference(0, 1).unwrap();
        let back = &q * &(&x(n, 0) - &x(n, 1));
        assert_eq!(back, num);
        assert_eq!(q, p.divided_difference(0, 1));
    }

    #[test]
    fn canonical_json_round_trip() {
        let p = &x(2, 0) + &x(2, 1).scale(&rat(1, 2));
        let v = p.to_json();
        assert_eq!(v.to_string(), r#"{"n":2,"terms":[[[1,0],"1","1"],[[0,1],"1","2"]]}"#);
        assert_eq!(SparsePoly::from_json(&v).unwrap(), p);
    }

    #[test]
    fn substitution_and_shift() {
        let p = x(2, 0) * x(2, 1);
        let shifted = p.shift_by_one(0..2);
        assert_eq!(shifted.eval(&[int(0), int(0)]), int(1));
        assert_eq!(shifted.eval(&[int(1), int(2)]), int(6));
        let sym = x(2, 0).pow(2).symmetrize(2);
        assert_eq!(sym, x(2, 0).pow(2) + x(2, 1).pow(2));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
    }
}
