//! Sparse multivariate polynomials over a scalar domain.
//!
//! Terms are kept in a `BTreeMap` keyed by monomials in graded
//! lexicographic order (total degree first, then exponents left to right),
//! so iteration order and printing are deterministic. Zero coefficients are
//! never stored.

use super::scalar::{Scalar, ScalarDomain};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise quotient when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = Vec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial; the variable names live in the ring descriptor.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MPoly {
    pub terms: BTreeMap<Monomial, Scalar>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly { terms: BTreeMap::new() }
    }

    pub fn constant(dom: &ScalarDomain, c: Scalar, nvars: usize) -> Self {
        let mut p = MPoly::zero();
        if !dom.is_zero(&c) {
            p.terms.insert(Monomial::one(nvars), c);
        }
        p
    }

    pub fn var(dom: &ScalarDomain, idx: usize, nvars: usize) -> Self {
        let mut exps = vec![0u32; nvars];
        exps[idx] = 1;
        let mut p = MPoly::zero();
        p.terms.insert(Monomial(exps), dom.one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.total_degree() == 0)
    }

    pub fn constant_coeff(&self, dom: &ScalarDomain, nvars: usize) -> Scalar {
        self.terms
            .get(&Monomial::one(nvars))
            .cloned()
            .unwrap_or_else(|| dom.zero())
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.total_degree()).max()
    }

    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    fn insert_term(&mut self, dom: &ScalarDomain, m: Monomial, c: Scalar) {
        if dom.is_zero(&c) {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = dom.add(e.get(), &c);
                if dom.is_zero(&s) {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, dom: &ScalarDomain, other: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(dom, m.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self, dom: &ScalarDomain) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), dom.neg(c))).collect(),
        }
    }

    pub fn sub(&self, dom: &ScalarDomain, other: &MPoly) -> MPoly {
        self.add(dom, &other.neg(dom))
    }

    pub fn mul(&self, dom: &ScalarDomain, other: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(dom, m1.mul(m2), dom.mul(c1, c2));
            }
        }
        out
    }

    pub fn scale(&self, dom: &ScalarDomain, c: &Scalar) -> MPoly {
        let mut out = MPoly::zero();
        for (m, a) in &self.terms {
            out.insert_term(dom, m.clone(), dom.mul(a, c));
        }
        out
    }

    pub fn pow(&self, dom: &ScalarDomain, nvars: usize, mut e: u32) -> MPoly {
        let mut acc = MPoly::constant(dom, dom.one(), nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(dom, &base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(dom, &base);
            }
        }
        acc
    }

    /// Exact division: returns `q` with `self = divisor * q`, or `None`.
    ///
    /// Repeatedly cancels the leading term; over the integers the leading
    /// coefficient must divide exactly at every step, which characterizes
    /// exact divisibility under a term order.
    pub fn div_exact(&self, dom: &ScalarDomain, divisor: &MPoly) -> Option<MPoly> {
        if divisor.is_zero() {
            return if self.is_zero() { Some(MPoly::zero()) } else { None };
        }
        let (dm, dc) = divisor.leading().expect("nonzero divisor");
        let dm = dm.clone();
        let dc = dc.clone();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            let qm = rm.div(&dm)?;
            let qc = dom.div_exact(rc, &dc)?;
            quot.insert_term(dom, qm.clone(), qc.clone());
            let mut piece = MPoly::zero();
            piece.insert_term(dom, qm, qc);
            rem = rem.sub(dom, &piece.mul(dom, divisor));
        }
        Some(quot)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    /// Univariate division with remainder (leading coefficient must be
    /// invertible, so the coefficients should form a field).
    pub fn divrem_univariate(&self, dom: &ScalarDomain, divisor: &MPoly) -> Option<(MPoly, MPoly)> {
        let (dm, dc) = divisor.leading()?;
        let dinv = dom.inv(dc)?;
        let ddeg = dm.total_degree();
        let mut rem = self.clone();
        let mut quot = MPoly::zero();
        while let Some((rm, rc)) = rem.leading() {
            if rm.total_degree() < ddeg {
                break;
            }
            let qm = rm.div(dm).expect("univariate monomials are totally ordered");
            let qc = dom.mul(rc, &dinv);
            let mut piece = MPoly::zero();
            piece.insert_term(dom, qm.clone(), qc.clone());
            quot.insert_term(dom, qm, qc);
            rem = rem.sub(dom, &piece.mul(dom, divisor));
        }
        Some((quot, rem))
    }

    pub fn fmt_with(&self, dom: &ScalarDomain, vars: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        // leading term first
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let cs = dom.fmt_scalar(c);
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, cs),
            };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if m.total_degree() == 0 || abs != "1" {
                factors.push(abs);
            }
            for (v, &e) in m.0.iter().enumerate() {
                if e == 1 {
                    factors.push(vars[v].clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", vars[v], e));
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz() -> ScalarDomain {
        ScalarDomain::Int
    }

    fn x_plus_c(c: i64) -> MPoly {
        MPoly::var(&zz(), 0, 1).add(&zz(), &MPoly::constant(&zz(), zz().from_i64(c), 1))
    }

    #[test]
    fn grlex_order() {
        // x0^2 > x0*x1 > x1^2 > x0 > x1 > 1 over two variables
        let m = |a: u32, b: u32| Monomial(vec![a, b]);
        assert!(m(2, 0) > m(1, 1));
        assert!(m(1, 1) > m(0, 2));
        assert!(m(0, 2) > m(1, 0));
        assert!(m(1, 0) > m(0, 1));
    }

    #[test]
    fn difference_of_squares() {
        let d = zz();
        let p = x_plus_c(1).mul(&d, &x_plus_c(-1));
        let x2 = MPoly::var(&d, 0, 1).mul(&d, &MPoly::var(&d, 0, 1));
        let expect = x2.sub(&d, &MPoly::constant(&d, d.from_i64(1), 1));
        assert_eq!(p, expect);
        assert_eq!(p.fmt_with(&d, &["x".into()]), "x^2 - 1");
    }

    #[test]
    fn exact_division() {
        let d = zz();
        let s3 = MPoly::var(&d, 0, 1).pow(&d, 1, 3);
        let s = MPoly::var(&d, 0, 1);
        let q = s3.div_exact(&d, &s).unwrap();
        assert_eq!(q, s.pow(&d, 1, 2));
        assert!(s.div_exact(&d, &s3).is_none());
        // integer content division: 27 s^4 / 3 = 9 s^4
        let p = MPoly::var(&d, 0, 1).pow(&d, 1, 4).scale(&d, &d.from_i64(27));
        let three = MPoly::constant(&d, d.from_i64(3), 1);
        let q = p.div_exact(&d, &three).unwrap();
        assert_eq!(q, MPoly::var(&d, 0, 1).pow(&d, 1, 4).scale(&d, &d.from_i64(9)));
    }
}
