//! Finite abelian groups presented as products of cyclic groups.
//!
//! Elements are residue vectors, componentwise modulo the cyclic orders.
//! The element enumeration is lexicographic on residue vectors and is the
//! canonical order used everywhere else in the crate (generator indexing,
//! cocycle tables, cover algebra bases).

use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("cyclic orders must be >= 1, got {0}")]
    BadOrder(u64),
    #[error("element has {got} components, group has rank {want}")]
    RankMismatch { got: usize, want: usize },
    #[error("residue {0} out of range for cyclic order {1}")]
    BadResidue(u64, u64),
    #[error("homomorphism does not respect the order of generator {0}")]
    NotAHom(usize),
    #[error("subset is not closed under the group operation")]
    NotASubgroup,
    #[error("cannot parse group element from `{0}`")]
    Parse(String),
}

/// A finite abelian group `Z/n_1 x ... x Z/n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AbelianGroup {
    pub cyclic_orders: Vec<u64>,
}

/// Residue vector in an [`AbelianGroup`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElem(pub Vec<u64>);

impl AbelianGroup {
    pub fn new(cyclic_orders: Vec<u64>) -> Result<Self, GroupError> {
        if let Some(&n) = cyclic_orders.iter().find(|&&n| n == 0) {
            return Err(GroupError::BadOrder(n));
        }
        Ok(AbelianGroup { cyclic_orders })
    }

    /// The trivial group (empty product).
    pub fn trivial() -> Self {
        AbelianGroup { cyclic_orders: vec![] }
    }

    pub fn cyclic(n: u64) -> Result<Self, GroupError> {
        Self::new(vec![n])
    }

    pub fn rank(&self) -> usize {
        self.cyclic_orders.len()
    }

    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    pub fn zero(&self) -> GroupElem {
        GroupElem(vec![0; self.cyclic_orders.len()])
    }

    pub fn check(&self, x: &GroupElem) -> Result<(), GroupError> {
        if x.0.len() != self.cyclic_orders.len() {
            return Err(GroupError::RankMismatch { got: x.0.len(), want: self.cyclic_orders.len() });
        }
        for (&r, &n) in x.0.iter().zip(&self.cyclic_orders) {
            if r >= n {
                return Err(GroupError::BadResidue(r, n));
            }
        }
        Ok(())
    }

    pub fn add(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        GroupElem(
            x.0.iter()
                .zip(&y.0)
                .zip(&self.cyclic_orders)
                .map(|((a, b), n)| (a + b) % n)
                .collect(),
        )
    }

    pub fn neg(&self, x: &GroupElem) -> GroupElem {
        GroupElem(x.0.iter().zip(&self.cyclic_orders).map(|(a, n)| (n - a) % n).collect())
    }

    pub fn sub(&self, x: &GroupElem, y: &GroupElem) -> GroupElem {
        self.add(x, &self.neg(y))
    }

    pub fn scale(&self, k: u64, x: &GroupElem) -> GroupElem {
        GroupElem(
            x.0.iter()
                .zip(&self.cyclic_orders)
                .map(|(a, n)| (a.wrapping_mul(k % n)) % n)
                .collect(),
        )
    }

    pub fn is_zero(&self, x: &GroupElem) -> bool {
        x.0.iter().all(|&r| r == 0)
    }

    /// Order of an element in the group.
    pub fn elem_order(&self, x: &GroupElem) -> u64 {
        let mut acc = x.clone();
        let mut k = 1;
        while !self.is_zero(&acc) {
            acc = self.add(&acc, x);
            k += 1;
        }
        k
    }

    /// All elements in lexicographic order of residue vectors.
    pub fn elements(&self) -> Vec<GroupElem> {
        let n = self.order() as usize;
        (0..n).map(|i| self.elem_at(i)).collect()
    }

    /// Element at position `i` of the lexicographic enumeration.
    pub fn elem_at(&self, mut i: usize) -> GroupElem {
        let mut res = vec![0u64; self.cyclic_orders.len()];
        for k in (0..self.cyclic_orders.len()).rev() {
            let n = self.cyclic_orders[k] as usize;
            res[k] = (i % n) as u64;
            i /= n;
        }
        GroupElem(res)
    }

    /// Position of `x` in the lexicographic enumeration.
    pub fn index(&self, x: &GroupElem) -> usize {
        let mut i = 0usize;
        for (&r, &n) in x.0.iter().zip(&self.cyclic_orders) {
            i = i * n as usize + r as usize;
        }
        i
    }

    /// Standard generator of the `k`-th cyclic factor.
    pub fn generator(&self, k: usize) -> GroupElem {
        let mut v = vec![0u64; self.cyclic_orders.len()];
        v[k] = if self.cyclic_orders[k] == 1 { 0 } else { 1 };
        GroupElem(v)
    }

    /// Canonical compact string for an element: residues joined by `.`.
    pub fn format_elem(&self, x: &GroupElem) -> String {
        if x.0.is_empty() {
            return "0".to_string();
        }
        x.0.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(".")
    }

    /// Parses the `.`-joined residue form produced by [`Self::format_elem`].
    pub fn parse_elem(&self, s: &str) -> Result<GroupElem, GroupError> {
        let s = s.trim();
        if self.cyclic_orders.is_empty() {
            if s == "0" {
                return Ok(self.zero());
            }
            return Err(GroupError::Parse(s.to_string()));
        }
        let parts: Vec<&str> = s.split('.').collect();
        if parts.len() != self.cyclic_orders.len() {
            return Err(GroupError::Parse(s.to_string()));
        }
        let mut res = Vec::with_capacity(parts.len());
        for p in parts {
            res.push(p.trim().parse::<u64>().map_err(|_| GroupError::Parse(s.to_string()))?);
        }
        let e = GroupElem(res);
        self.check(&e)?;
        Ok(e)
    }

    /// Verifies that `elems` is a subgroup (contains 0, closed under addition).
    pub fn check_subgroup(&self, elems: &[GroupElem]) -> Result<(), GroupError> {
        for e in elems {
            self.check(e)?;
        }
        if !elems.iter().any(|e| self.is_zero(e)) {
            return Err(GroupError::NotASubgroup);
        }
        for a in elems {
            for b in elems {
                let c = self.add(a, b);
                if !elems.contains(&c) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        Ok(())
    }
}

/// A homomorphism between finite abelian groups, given by the images of the
/// standard generators of the source's cyclic factors.
#[derive(Clone, Debug)]
pub struct GroupHom {
    pub source: AbelianGroup,
    pub target: AbelianGroup,
    pub gen_images: Vec<GroupElem>,
}

impl GroupHom {
    pub fn new(
        source: AbelianGroup,
        target: AbelianGroup,
        gen_images: Vec<GroupElem>,
    ) -> Result<Self, GroupError> {
        if gen_images.len() != source.rank() {
            return Err(GroupError::RankMismatch {
                got: gen_images.len(),
                want: source.rank(),
            });
        }
        for (k, img) in gen_images.iter().enumerate() {
            target.check(img)?;
            // n_k * image must vanish for the map to be well defined.
            if !target.is_zero(&target.scale(source.cyclic_orders[k], img)) {
                return Err(GroupError::NotAHom(k));
            }
        }
        Ok(GroupHom { source, target, gen_images })
    }

    pub fn identity(g: &AbelianGroup) -> Self {
        let images = (0..g.rank()).map(|k| g.generator(k)).collect();
        GroupHom { source: g.clone(), target: g.clone(), gen_images: images }
    }

    pub fn zero(source: &AbelianGroup, target: &AbelianGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            gen_images: vec![target.zero(); source.rank()],
        }
    }

    pub fn apply(&self, x: &GroupElem) -> GroupElem {
        let mut acc = self.target.zero();
        for (k, &r) in x.0.iter().enumerate() {
            acc = self.target.add(&acc, &self.target.scale(r, &self.gen_images[k]));
        }
        acc
    }
}

impl fmt::Display for GroupElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", r)?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_is_lexicographic_and_indexable() {
        let g = AbelianGroup::new(vec![2, 3]).unwrap();
        let els = g.elements();
        assert_eq!(els.len(), 6);
        assert_eq!(els[0], GroupElem(vec![0, 0]));
        assert_eq!(els[1], GroupElem(vec![0, 1]));
        assert_eq!(els[3], GroupElem(vec![1, 0]));
        for (i, e) in els.iter().enumerate() {
            assert_eq!(g.index(e), i);
            assert_eq!(&g.elem_at(i), e);
        }
        let mut sorted = els.clone();
        sorted.sort();
        assert_eq!(sorted, els);
    }

    #[test]
    fn arithmetic_and_orders() {
        let g = AbelianGroup::cyclic(6).unwrap();
        let x = GroupElem(vec![4]);
        assert_eq!(g.add(&x, &x), GroupElem(vec![2]));
        assert_eq!(g.neg(&x), GroupElem(vec![2]));
        assert_eq!(g.elem_order(&x), 3);
        let t = AbelianGroup::trivial();
        assert_eq!(t.order(), 1);
        assert_eq!(t.elements(), vec![GroupElem(vec![])]);
    }

    #[test]
    fn hom_validation() {
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let z2 = AbelianGroup::cyclic(2).unwrap();
        // Z/2 -> Z/4 sending 1 to 2 is a hom; sending 1 to 1 is not.
        assert!(GroupHom::new(z2.clone(), z4.clone(), vec![GroupElem(vec![2])]).is_ok());
        assert!(GroupHom::new(z2.clone(), z4.clone(), vec![GroupElem(vec![1])]).is_err());
        let h = GroupHom::new(z4.clone(), z2.clone(), vec![GroupElem(vec![1])]).unwrap();
        assert_eq!(h.apply(&GroupElem(vec![3])), GroupElem(vec![1]));
    }

    #[test]
    fn subgroup_check() {
        let z4 = AbelianGroup::cyclic(4).unwrap();
        assert!(z4.check_subgroup(&[GroupElem(vec![0]), GroupElem(vec![2])]).is_ok());
        assert!(z4.check_subgroup(&[GroupElem(vec![0]), GroupElem(vec![1])]).is_err());
    }

    #[test]
    fn elem_string_round_trip() {
        let g = AbelianGroup::new(vec![2, 5]).unwrap();
        for e in g.elements() {
            let s = g.format_elem(&e);
            assert_eq!(g.parse_elem(&s).unwrap(), e);
        }
    }
}
