//! Number rings presented as iterated univariate quotients of Z.
//!
//! A descriptor adjoins one generator per monic integer modulus, in a fixed
//! order; elements are coefficient vectors over the tensor-product monomial
//! basis. Every product is reduced modulo all moduli.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// One adjoined generator: `var` with monic modulus
/// `x^d + c[d-1] x^(d-1) + ... + c[0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Adjunction {
    pub var: String,
    /// Low-to-high coefficients of the modulus, excluding the leading 1.
    pub lower: Vec<BigInt>,
}

impl Adjunction {
    pub fn degree(&self) -> usize {
        self.lower.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberRingDesc {
    pub adjunctions: Vec<Adjunction>,
}

impl NumberRingDesc {
    pub fn dim(&self) -> usize {
        self.adjunctions.iter().map(|a| a.degree()).product()
    }

    pub fn zero(&self) -> Vec<BigInt> {
        vec![BigInt::zero(); self.dim()]
    }

    pub fn one(&self) -> Vec<BigInt> {
        let mut v = self.zero();
        v[0] = BigInt::one();
        v
    }

    pub fn from_bigint(&self, n: &BigInt) -> Vec<BigInt> {
        let mut v = self.zero();
        v[0] = n.clone();
        v
    }

    /// Coordinate vector of the `k`-th adjoined generator.
    pub fn generator(&self, k: usize) -> Vec<BigInt> {
        let mut exps = vec![0usize; self.adjunctions.len()];
        exps[k] = 1;
        let mut v = self.zero();
        v[self.index_of(&exps)] = BigInt::one();
        v
    }

    /// Mixed-radix index of a monomial exponent tuple (first adjunction most
    /// significant).
    fn index_of(&self, exps: &[usize]) -> usize {
        let mut idx = 0usize;
        for (a, &e) in self.adjunctions.iter().zip(exps) {
            idx = idx * a.degree() + e;
        }
        idx
    }

    fn exps_at(&self, mut idx: usize) -> Vec<usize> {
        let mut out = vec![0usize; self.adjunctions.len()];
        for k in (0..self.adjunctions.len()).rev() {
            let d = self.adjunctions[k].degree();
            out[k] = idx % d;
            idx /= d;
        }
        out
    }

    pub fn add(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    pub fn neg(&self, a: &[BigInt]) -> Vec<BigInt> {
        a.iter().map(|x| -x).collect()
    }

    pub fn mul(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        // convolve in the unreduced exponent box, then reduce each variable
        let nvars = self.adjunctions.len();
        let wide: Vec<usize> = self.adjunctions.iter().map(|ad| 2 * ad.degree() - 1).collect();
        let wide_size: usize = wide.iter().product();
        let widx = |exps: &[usize]| -> usize {
            let mut idx = 0;
            for (k, &e) in exps.iter().enumerate() {
                idx = idx * wide[k] + e;
            }
            idx
        };
        let mut acc = vec![BigInt::zero(); wide_size];
        for (ia, ca) in a.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            let ea = self.exps_at(ia);
            for (ib, cb) in b.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let eb = self.exps_at(ib);
                let sum: Vec<usize> = ea.iter().zip(&eb).map(|(x, y)| x + y).collect();
                acc[widx(&sum)] += ca * cb;
            }
        }
        // reduce variable k: x_k^e -> -(lower coeffs) * x_k^(e-d) for e >= d
        for k in 0..nvars {
            let d = self.adjunctions[k].degree();
            for e in (d..wide[k]).rev() {
                // iterate over all positions with exponent e in variable k
                let mut exps = vec![0usize; nvars];
                loop {
                    exps[k] = e;
                    let src = widx(&exps);
                    if !acc[src].is_zero() {
                        let c = std::mem::replace(&mut acc[src], BigInt::zero());
                        for (j, low) in self.adjunctions[k].lower.iter().enumerate() {
                            if low.is_zero() {
                                continue;
                            }
                            let mut tgt = exps.clone();
                            tgt[k] = e - d + j;
                            let ti = widx(&tgt);
                            acc[ti] -= low * &c;
                        }
                    }
                    // advance the other coordinates
                    let mut done = true;
                    for m in (0..nvars).rev() {
                        if m == k {
                            continue;
                        }
                        exps[m] += 1;
                        if exps[m] < wide[m] {
                            done = false;
                            break;
                        }
                        exps[m] = 0;
                    }
                    if done {
                        break;
                    }
                }
            }
        }
        // read off the reduced box
        let mut out = self.zero();
        for idx in 0..self.dim() {
            let exps = self.exps_at(idx);
            out[idx] = acc[widx(&exps)].clone();
        }
        out
    }

    /// Matrix of multiplication by `a` (columns are `a * basis_j`).
    pub fn mult_matrix(&self, a: &[BigInt]) -> Vec<Vec<BigInt>> {
        let n = self.dim();
        let mut cols = Vec::with_capacity(n);
        for j in 0..n {
            let mut ej = self.zero();
            ej[j] = BigInt::one();
            cols.push(self.mul(a, &ej));
        }
        cols
    }

    /// Solves `a * x = b`; `None` when no solution exists in the ring.
    pub fn solve_mul(&self, a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
        let n = self.dim();
        let cols = self.mult_matrix(a);
        // rational gaussian elimination on [cols | b]
        let mut m: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigRational::from(cols[j][i].clone()))
                    .chain(std::iter::once(BigRational::from(b[i].clone())))
                    .collect()
            })
            .collect();
        let mut pivot_cols = Vec::new();
        let mut row = 0usize;
        for col in 0..n {
            let Some(pr) = (row..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pr);
            let inv = m[row][col].recip();
            for v in m[row].iter_mut() {
                *v *= &inv;
            }
            for r in 0..n {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for c in 0..=n {
                        let delta = &f * &m[row][c];
                        m[r][c] -= delta;
                    }
                }
            }
            pivot_cols.push(col);
            row += 1;
            if row == n {
                break;
            }
        }
        // consistency
        for r in row..n {
            if !m[r][n].is_zero() {
                return None;
            }
        }
        // integral particular solution with free coordinates zero
        let mut x = vec![BigRational::zero(); n];
        for (r, &c) in pivot_cols.iter().enumerate() {
            x[c] = m[r][n].clone();
        }
        let mut out = Vec::with_capacity(n);
        for v in x {
            if !v.denom().is_one() {
                // a solution exists over Q with free coordinates zero only if
                // all pivot coordinates are integral; a non-integral pivot with
                // nontrivial kernel cannot occur here since mult-by-a is either
                // injective (unique solution) or b is in a smaller lattice.
                return None;
            }
            out.push(v.numer().clone());
        }
        Some(out)
    }

    /// Determinant of multiplication by `a` (the ring norm of `a`).
    pub fn norm(&self, a: &[BigInt]) -> BigInt {
        let cols = self.mult_matrix(a);
        let n = self.dim();
        det_bigint(n, &|i, j| cols[j][i].clone())
    }

    pub fn is_zero(&self, a: &[BigInt]) -> bool {
        a.iter().all(|c| c.is_zero())
    }

    pub fn fmt_elem(&self, a: &[BigInt]) -> String {
        if self.is_zero(a) {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        for (idx, c) in a.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exps = self.exps_at(idx);
            let mut factors: Vec<String> = Vec::new();
            let abs = c.abs();
            if exps.iter().all(|&e| e == 0) || !abs.is_one() {
                factors.push(abs.to_string());
            }
            for (k, &e) in exps.iter().enumerate() {
                if e == 1 {
                    factors.push(self.adjunctions[k].var.clone());
                } else if e > 1 {
                    factors.push(format!("{}^{}", self.adjunctions[k].var, e));
                }
            }
            let term = factors.join("*");
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{}", term) } else { term });
            } else {
                parts.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, term));
            }
        }
        parts.join(" ")
    }
}

/// Division-free determinant via Laplace expansion memoized on column
/// subsets; fine for the small matrices that arise here.
pub fn det_bigint(n: usize, entry: &dyn Fn(usize, usize) -> BigInt) -> BigInt {
    assert!(n <= 20, "determinant helper is for small matrices");
    if n == 0 {
        return BigInt::one();
    }
    use std::collections::HashMap;
    fn rec(
        n: usize,
        used: u32,
        entry: &dyn Fn(usize, usize) -> BigInt,
        memo: &mut HashMap<u32, BigInt>,
    ) -> BigInt {
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let row = used.count_ones() as usize;
        let mut acc = BigInt::zero();
        let mut pos = 0usize;
        for col in 0..n {
            if used & (1 << col) != 0 {
                continue;
            }
            let e = entry(row, col);
            if !e.is_zero() {
                let sub = rec(n, used | (1 << col), entry, memo);
                let term = e * sub;
                if pos % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            pos += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    let mut memo: HashMap<u32, BigInt> = HashMap::new();
    memo.insert((1u32 << n) - 1, BigInt::one());
    rec(n, 0, entry, &mut memo)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian() -> NumberRingDesc {
        NumberRingDesc {
            adjunctions: vec![Adjunction { var: "i".into(), lower: vec![BigInt::one(), BigInt::zero()] }],
        }
    }

    fn zi_xi() -> NumberRingDesc {
        // i^2 + 1 and the 5th cyclotomic xi^4 + xi^3 + xi^2 + xi + 1
        NumberRingDesc {
            adjunctions: vec![
                Adjunction { var: "i".into(), lower: vec![BigInt::one(), BigInt::zero()] },
                Adjunction {
                    var: "xi".into(),
                    lower: vec![BigInt::one(), BigInt::one(), BigInt::one(), BigInt::one()],
                },
            ],
        }
    }

    #[test]
    fn gaussian_units_and_norm() {
        let r = gaussian();
        let i = r.generator(0);
        let i2 = r.mul(&i, &i);
        assert_eq!(i2, r.from_bigint(&BigInt::from(-1)));
        let one_plus_2i = r.add(&r.one(), &r.mul(&r.from_bigint(&BigInt::from(2)), &i));
        assert_eq!(r.norm(&one_plus_2i), BigInt::from(5));
        // (1+2i)(1-2i) = 5
        let conj = r.add(&r.one(), &r.neg(&r.mul(&r.from_bigint(&BigInt::from(2)), &i)));
        assert_eq!(r.mul(&one_plus_2i, &conj), r.from_bigint(&BigInt::from(5)));
    }

    #[test]
    fn cyclotomic_reduction() {
        let r = zi_xi();
        assert_eq!(r.dim(), 8);
        let xi = r.generator(1);
        let mut xi4 = r.one();
        for _ in 0..4 {
            xi4 = r.mul(&xi4, &xi);
        }
        // xi^4 = -1 - xi - xi^2 - xi^3
        let mut expect = r.zero();
        for k in 0..4 {
            let mut pow = r.one();
            for _ in 0..k {
                pow = r.mul(&pow, &xi);
            }
            expect = r.add(&expect, &r.neg(&pow));
        }
        assert_eq!(xi4, expect);
    }

    #[test]
    fn solve_exact_division() {
        let r = gaussian();
        let i = r.generator(0);
        let a = r.add(&r.one(), &r.mul(&r.from_bigint(&BigInt::from(2)), &i)); // 1+2i
        let b = r.from_bigint(&BigInt::from(5));
        let q = r.solve_mul(&a, &b).unwrap(); // 5/(1+2i) = 1-2i
        let expect = r.add(&r.one(), &r.neg(&r.mul(&r.from_bigint(&BigInt::from(2)), &i)));
        assert_eq!(q, expect);
        assert!(r.solve_mul(&r.from_bigint(&BigInt::from(2)), &r.one()).is_none());
    }

    #[test]
    fn det_helper() {
        let m = [[1i64, 2], [3, 4]];
        let d = det_bigint(2, &|i, j| BigInt::from(m[i][j]));
        assert_eq!(d, BigInt::from(-2));
    }
}
