//! Multivariate polynomials with arbitrary-precision integer coefficients.
//!
//! Terms are keyed by dense exponent vectors in a `BTreeMap`, so iteration
//! order (and hence display and serialization) is deterministic. All
//! arithmetic is exact; there are no rational coefficients anywhere in the
//! invariant-ring computations, and evaluation at rational points is done
//! by substituting `num_rational::BigRational` values.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// A polynomial in a fixed, ordered list of variables over ℤ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    vars: Vec<String>,
    /// exponent vector (same length as `vars`) → nonzero coefficient
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IntPolynomial {
    pub fn zero(vars: &[&str]) -> Self {
        IntPolynomial {
            vars: vars.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &[&str], c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(vec![0; p.vars.len()], c);
        }
        p
    }

    /// The monomial `var^1`. Panics if `var` is not in the list.
    pub fn var(vars: &[&str], var: &str) -> Self {
        let mut p = Self::zero(vars);
        let idx = p
            .vars
            .iter()
            .position(|v| v == var)
            .unwrap_or_else(|| panic!("unknown variable {var}"));
        let mut exp = vec![0; p.vars.len()];
        exp[idx] = 1;
        p.terms.insert(exp, BigInt::one());
        p
    }

    /// Insert `coeff * Π vars[i]^exps[i]`, combining with an existing term.
    pub fn add_term(&mut self, exps: Vec<u32>, coeff: impl Into<BigInt>) {
        use std::collections::btree_map::Entry;
        assert_eq!(exps.len(), self.vars.len(), "exponent vector length");
        let coeff = coeff.into();
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            Entry::Vacant(slot) => {
                slot.insert(coeff);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    // keep the no-zero-coefficients invariant
                    slot.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    fn assert_same_vars(&self, other: &Self) {
        assert_eq!(self.vars, other.vars, "mixed variable lists");
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_vars(other);
        let mut out = Self::zero(&self.vars.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exps, ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        let mut out = Self {
            vars: self.vars.clone(),
            terms: BTreeMap::new(),
        };
        if k.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * &k);
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let vars: Vec<&str> = self.vars.iter().map(|s| s.as_str()).collect();
        let mut acc = Self::constant(&vars, 1);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact evaluation at a rational point (one value per variable).
    pub fn eval(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.vars.len(), "evaluation point arity");
        let mut acc = BigRational::zero();
        for (exps, coeff) in &self.terms {
            let mut term = BigRational::from_integer(coeff.clone());
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitute each variable by a polynomial (in any variable list).
    pub fn substitute(&self, images: &[IntPolynomial]) -> IntPolynomial {
        assert_eq!(images.len(), self.vars.len(), "substitution arity");
        let target_vars: Vec<&str> = images
            .first()
            .map(|p| p.vars.iter().map(|s| s.as_str()).collect())
            .unwrap_or_default();
        let mut acc = IntPolynomial::zero(&target_vars);
        for (exps, coeff) in &self.terms {
            let mut term = IntPolynomial::constant(&target_vars, coeff.clone());
            for (img, &e) in images.iter().zip(exps) {
                term = term.mul(&img.pow(e));
            }
            acc = acc.add(&term);
        }
        acc
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest total degree first, then reverse-lex on exponents
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| {
            let (da, db) = (a.iter().sum::<u32>(), b.iter().sum::<u32>());
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        let mut first = true;
        for exps in keys {
            let coeff = &self.terms[exps];
            let mag = coeff.abs();
            if first {
                if coeff.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if coeff.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = exps.iter().all(|&e| e == 0);
            if !mag.is_one() || is_const {
                write!(f, "{mag}")?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut need_star = false;
            for (v, &e) in self.vars.iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                if need_star {
                    write!(f, "*")?;
                }
                need_star = true;
                if e == 1 {
                    write!(f, "{v}")?;
                } else {
                    write!(f, "{v}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

/// Parse a polynomial like `s^2 - 3*s*t + 2` over the given variables.
///
/// Grammar: sum of terms; a term is an optional integer coefficient and
/// `*`-separated powers `v` or `v^k`. Whitespace is ignored. This covers the
/// CLI input format for conic families.
pub fn parse_polynomial(input: &str, vars: &[&str]) -> Result<IntPolynomial> {
    let src: Vec<char> = input.chars().filter(|c| !c.is_whitespace()).collect();
    if src.is_empty() {
        return Err(Error::invalid("empty polynomial"));
    }
    let mut out = IntPolynomial::zero(vars);
    let mut i = 0usize;
    while i < src.len() {
        let mut sign = BigInt::one();
        while i < src.len() && (src[i] == '+' || src[i] == '-') {
            if src[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= src.len() {
            return Err(Error::invalid(format!("dangling sign in {input:?}")));
        }
        let mut coeff: Option<BigInt> = None;
        let mut exps = vec![0u32; vars.len()];
        let mut expect_factor = true;
        while expect_factor {
            if i < src.len() && src[i].is_ascii_digit() {
                let start = i;
                while i < src.len() && src[i].is_ascii_digit() {
                    i += 1;
                }
                let num: BigInt = src[start..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| Error::invalid("bad integer literal"))?;
                coeff = Some(coeff.unwrap_or_else(BigInt::one) * num);
            } else if i < src.len() && src[i].is_ascii_alphabetic() {
                let start = i;
                while i < src.len() && (src[i].is_ascii_alphanumeric() || src[i] == '_') {
                    i += 1;
                }
                let name: String = src[start..i].iter().collect();
                let idx = vars
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| Error::invalid(format!("unknown variable {name:?}")))?;
                let mut e = 1u32;
                if i < src.len() && src[i] == '^' {
                    i += 1;
                    let ds = i;
                    while i < src.len() && src[i].is_ascii_digit() {
                        i += 1;
                    }
                    if ds == i {
                        return Err(Error::invalid("missing exponent"));
                    }
                    e = src[ds..i]
                        .iter()
                        .collect::<String>()
                        .parse()
                        .map_err(|_| Error::invalid("bad exponent"))?;
                }
                exps[idx] += e;
            } else {
                return Err(Error::invalid(format!(
                    "unexpected character in polynomial {input:?}"
                )));
            }
            if i < src.len() && src[i] == '*' {
                i += 1;
                expect_factor = true;
            } else {
                expect_factor = false;
            }
        }
        out.add_term(exps, sign * coeff.unwrap_or_else(BigInt::one));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_round_trip() {
        let vars = ["s", "t"];
        let s = IntPolynomial::var(&vars, "s");
        let t = IntPolynomial::var(&vars, "t");
        let p = s.mul(&s).sub(&t.mul(&t)); // s^2 - t^2
        let q = s.add(&t).mul(&s.sub(&t));
        assert_eq!(p, q);
        assert_eq!(p.to_string(), "s^2 - t^2");
    }

    #[test]
    fn parse_matches_construction() {
        let vars = ["s", "t"];
        let parsed = parse_polynomial("2*s^2*t - t^3 + 5", &vars).unwrap();
        let mut built = IntPolynomial::zero(&vars);
        built.add_term(vec![2, 1], 2);
        built.add_term(vec![0, 3], -1);
        built.add_term(vec![0, 0], 5);
        assert_eq!(parsed, built);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_polynomial("s +", &["s"]).is_err());
        assert!(parse_polynomial("x", &["s"]).is_err());
        assert!(parse_polynomial("", &["s"]).is_err());
    }

    #[test]
    fn eval_exact() {
        let vars = ["s", "t"];
        let p = parse_polynomial("s^2 + t^2", &vars).unwrap();
        let half = BigRational::new(1.into(), 2.into());
        let third = BigRational::new(1.into(), 3.into());
        let v = p.eval(&[half, third]);
        assert_eq!(v, BigRational::new(13.into(), 36.into()));
    }

    #[test]
    fn substitution_composes() {
        // p(s,t) = s*t under (s,t) -> (s+t, s-t) is s^2 - t^2
        let vars = ["s", "t"];
        let s = IntPolynomial::var(&vars, "s");
        let t = IntPolynomial::var(&vars, "t");
        let p = s.mul(&t);
        let image = p.substitute(&[s.add(&t), s.sub(&t)]);
        assert_eq!(image, s.mul(&s).sub(&t.mul(&t)));
    }
}
