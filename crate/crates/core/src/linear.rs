//! Finite rational linear combinations over an ordered basis.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::algebra::{Generator, Parity};
use crate::scalar::{HalfInt, Rational};

/// A basis key of 𝓛, 𝓛⊗𝓛 or 𝓛⊗³.
pub trait BasisKey: Ord + Clone + fmt::Debug {
    fn parity(&self) -> Parity;
    fn degree(&self) -> HalfInt;
    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result;
}

impl BasisKey for Generator {
    fn parity(&self) -> Parity {
        Generator::parity(self)
    }

    fn degree(&self) -> HalfInt {
        Generator::degree(self)
    }

    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

pub type Key2 = (Generator, Generator);
pub type Key3 = (Generator, Generator, Generator);

impl BasisKey for Key2 {
    fn parity(&self) -> Parity {
        self.0.parity() + self.1.parity()
    }

    fn degree(&self) -> HalfInt {
        self.0.degree() + self.1.degree()
    }

    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {}", self.0, self.1)
    }
}

impl BasisKey for Key3 {
    fn parity(&self) -> Parity {
        self.0.parity() + self.1.parity() + self.2.parity()
    }

    fn degree(&self) -> HalfInt {
        self.0.degree() + self.1.degree() + self.2.degree()
    }

    fn fmt_key(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (x) {} (x) {}", self.0, self.1, self.2)
    }
}

/// A finite linear combination `Σ c_k·k`. Zero coefficients are never stored,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Rational>,
}

pub type Element = LinComb<Generator>;
pub type Tensor2 = LinComb<Key2>;
pub type Tensor3 = LinComb<Key3>;

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<K: BasisKey> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(key: K, coeff: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(key, coeff);
        out
    }

    /// The basis vector `1·key`.
    pub fn basis(key: K) -> Self {
        Self::term(key, Rational::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Rational)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    pub fn add_term(&mut self, key: K, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale·other`.
    pub fn add_scaled(&mut self, other: &Self, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (k, c) in &other.terms {
            self.add_term(k.clone(), c * scale);
        }
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(k, c)| (k.clone(), c * s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, key: &K) -> Rational {
        self.terms.get(key).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, K, Rational> {
        self.terms.iter()
    }

    pub fn keys(&self) -> btree_map::Keys<'_, K, Rational> {
        self.terms.keys()
    }

    /// Linear extension of a map on basis keys.
    pub fn map_linear<J: BasisKey>(&self, mut f: impl FnMut(&K) -> LinComb<J>) -> LinComb<J> {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Parity shared by every term; `None` for the zero vector or a mixed one.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys().map(BasisKey::parity);
        let first = it.next()?;
        it.all(|p| p == first).then_some(first)
    }

    pub fn is_parity_homogeneous(&self) -> bool {
        self.is_zero() || self.parity().is_some()
    }

    pub fn degree(&self) -> Option<HalfInt> {
        let mut it = self.terms.keys().map(BasisKey::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// Keeps only the terms whose key satisfies `pred`.
    pub fn filter(&self, mut pred: impl FnMut(&K) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| pred(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Largest `|degree|` of any single generator occurring in a key.
    pub fn max_abs_index(&self) -> Option<HalfInt>
    where
        K: Factors,
    {
        self.terms.keys().flat_map(|k| k.factors().into_iter().map(|g| g.index.abs())).max()
    }
}

/// Access to the tensor factors of a key.
pub trait Factors {
    fn factors(&self) -> Vec<Generator>;
}

impl Factors for Generator {
    fn factors(&self) -> Vec<Generator> {
        vec![*self]
    }
}

impl Factors for Key2 {
    fn factors(&self) -> Vec<Generator> {
        vec![self.0, self.1]
    }
}

impl Factors for Key3 {
    fn factors(&self) -> Vec<Generator> {
        vec![self.0, self.1, self.2]
    }
}

impl<K: BasisKey> FromIterator<(K, Rational)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Rational)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, K: BasisKey> IntoIterator for &'a LinComb<K> {
    type Item = (&'a K, &'a Rational);
    type IntoIter = btree_map::Iter<'a, K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<K: BasisKey> Add for LinComb<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, c);
        }
        self
    }
}

impl<'a, K: BasisKey> Add<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &'a LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<K: BasisKey> Sub for LinComb<K> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (k, c) in rhs.terms {
            self.add_term(k, -c);
        }
        self
    }
}

impl<'a, K: BasisKey> Sub<&'a LinComb<K>> for &'a LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &'a LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::from_int(-1));
        out
    }
}

impl<K: BasisKey> Neg for LinComb<K> {
    type Output = Self;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl<K: BasisKey> fmt::Display for LinComb<K> {
    /// `2 L[0] - 1/2 T[3/2]`; the zero vector prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, false) => write!(f, "{c} ")?,
                (0, true) => write!(f, "-{} ", c.abs())?,
                (_, false) => write!(f, " + {c} ")?,
                (_, true) => write!(f, " - {} ", c.abs())?,
            }
            k.fmt_key(f)?;
        }
        Ok(())
    }
}

impl<K: BasisKey> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinComb({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Generator, Kind};

    fn l(n: i64) -> Generator {
        Generator::new(Kind::L, HalfInt::int(n)).unwrap()
    }

    fn t(twice: i64) -> Generator {
        Generator::new(Kind::T, HalfInt::half(twice)).unwrap()
    }

    #[test]
    fn zero_terms_are_dropped() {
        let mut e = Element::basis(l(1));
        e.add_term(l(1), Rational::from_int(-1));
        assert!(e.is_zero());
        assert_eq!(e, Element::zero());
        assert_eq!(e.to_string(), "0");
    }

    #[test]
    fn canonical_text() {
        let e = Element::from_terms([
            (t(3), Rational::new(-1, 2)),
            (l(0), Rational::from_int(2)),
        ]);
        assert_eq!(e.to_string(), "2 L[0] - 1/2 T[3/2]");
        let n = -Element::basis(l(0));
        assert_eq!(n.to_string(), "-1 L[0]");
        let r = Tensor2::basis((l(1), l(0))) - Tensor2::basis((l(0), l(1)));
        assert_eq!(r.to_string(), "-1 L[0] (x) L[1] + 1 L[1] (x) L[0]");
    }

    #[test]
    fn homogeneity_predicates() {
        let mixed = Element::basis(l(0)) + Element::basis(t(1));
        assert_eq!(mixed.parity(), Some(Parity::Even));
        assert_eq!(mixed.degree(), None);
        assert!(Element::zero().is_parity_homogeneous());
        let g = Generator::new(Kind::G, HalfInt::ZERO).unwrap();
        let odd_even = Element::basis(l(0)) + Element::basis(g);
        assert_eq!(odd_even.parity(), None);
        assert!(!odd_even.is_parity_homogeneous());
    }
}
