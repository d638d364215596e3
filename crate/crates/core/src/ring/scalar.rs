//! Coefficient domains: arbitrary-precision integers, reduced rationals,
//! and prime fields.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A coefficient in one of the supported scalar domains.
///
/// Rationals are kept reduced with positive denominator (maintained by
/// `BigRational`); prime field values lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Fp(u64),
}

/// The domain a [`Scalar`] lives in. Prime field arithmetic needs the
/// modulus, so scalar operations are methods on the domain.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScalarDomain {
    Int,
    Rat,
    Fp(u64),
}

impl ScalarDomain {
    pub fn zero(&self) -> Scalar {
        match self {
            ScalarDomain::Int => Scalar::Int(BigInt::zero()),
            ScalarDomain::Rat => Scalar::Rat(BigRational::zero()),
            ScalarDomain::Fp(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            ScalarDomain::Int => Scalar::Int(BigInt::one()),
            ScalarDomain::Rat => Scalar::Rat(BigRational::one()),
            ScalarDomain::Fp(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            ScalarDomain::Int => Scalar::Int(BigInt::from(n)),
            ScalarDomain::Rat => Scalar::Rat(BigRational::from(BigInt::from(n))),
            ScalarDomain::Fp(p) => Scalar::Fp(n.rem_euclid(*p as i64) as u64),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            ScalarDomain::Int => Scalar::Int(n.clone()),
            ScalarDomain::Rat => Scalar::Rat(BigRational::from(n.clone())),
            ScalarDomain::Fp(p) => {
                let m = n % BigInt::from(*p);
                let m = if m.is_negative() { m + BigInt::from(*p) } else { m };
                Scalar::Fp(u64::try_from(m).expect("reduced residue fits"))
            }
        }
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Int(x) => x.is_zero(),
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ScalarDomain::Int, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x + y),
            (ScalarDomain::Rat, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (ScalarDomain::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar domain mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (ScalarDomain::Int, Scalar::Int(x)) => Scalar::Int(-x),
            (ScalarDomain::Rat, Scalar::Rat(x)) => Scalar::Rat(-x),
            (ScalarDomain::Fp(p), Scalar::Fp(x)) => Scalar::Fp((p - x) % p),
            _ => panic!("scalar domain mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (ScalarDomain::Int, Scalar::Int(x), Scalar::Int(y)) => Scalar::Int(x * y),
            (ScalarDomain::Rat, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (ScalarDomain::Fp(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar domain mismatch"),
        }
    }

    /// Multiplicative inverse, when it exists in the domain.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        match (self, a) {
            (ScalarDomain::Int, Scalar::Int(x)) => {
                if x.is_one() || (-x).is_one() {
                    Some(Scalar::Int(x.clone()))
                } else {
                    None
                }
            }
            (ScalarDomain::Rat, Scalar::Rat(x)) => {
                if x.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(x.recip()))
                }
            }
            (ScalarDomain::Fp(p), Scalar::Fp(x)) => {
                if *x == 0 {
                    None
                } else {
                    Some(Scalar::Fp(fp_inv(*x, *p)))
                }
            }
            _ => panic!("scalar domain mismatch"),
        }
    }

    /// Exact division `b / a`, when the quotient lies in the domain.
    pub fn div_exact(&self, b: &Scalar, a: &Scalar) -> Option<Scalar> {
        match (self, b, a) {
            (ScalarDomain::Int, Scalar::Int(x), Scalar::Int(y)) => {
                if y.is_zero() {
                    return if x.is_zero() { Some(Scalar::Int(BigInt::zero())) } else { None };
                }
                let (q, r) = num_integer::Integer::div_rem(x, y);
                if r.is_zero() {
                    Some(Scalar::Int(q))
                } else {
                    None
                }
            }
            _ => {
                if self.is_zero(a) {
                    if self.is_zero(b) {
                        Some(self.zero())
                    } else {
                        None
                    }
                } else {
                    Some(self.mul(b, &self.inv(a).expect("nonzero in field")))
                }
            }
        }
    }

    pub fn is_field(&self) -> bool {
        !matches!(self, ScalarDomain::Int)
    }

    pub fn fmt_scalar(&self, a: &Scalar) -> String {
        match a {
            Scalar::Int(x) => x.to_string(),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => x.to_string(),
        }
    }
}

fn fp_inv(a: u64, p: u64) -> u64 {
    // extended euclid on i128; p is prime and a != 0
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, a as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert!(r == 1, "{a} not invertible mod {p}");
    (t.rem_euclid(p as i128)) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(x) => write!(f, "{}", x),
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => write!(f, "{}", x),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let d = ScalarDomain::Fp(7);
        let a = d.from_i64(-3);
        assert_eq!(a, Scalar::Fp(4));
        assert_eq!(d.mul(&a, &d.from_i64(2)), Scalar::Fp(1));
        assert_eq!(d.inv(&Scalar::Fp(3)), Some(Scalar::Fp(5)));
    }

    #[test]
    fn int_exact_division() {
        let d = ScalarDomain::Int;
        assert_eq!(d.div_exact(&d.from_i64(27), &d.from_i64(3)), Some(d.from_i64(9)));
        assert_eq!(d.div_exact(&d.from_i64(5), &d.from_i64(2)), None);
        assert_eq!(d.div_exact(&d.from_i64(0), &d.from_i64(0)), Some(d.from_i64(0)));
    }

    #[test]
    fn primality() {
        assert!(is_prime(2) && is_prime(3) && is_prime(31));
        assert!(!is_prime(1) && !is_prime(4) && !is_prime(91));
    }
}
