//! Finitely supported linear combinations with exact rational coefficients.
//!
//! Every algebra in the crate stores its elements as a [`LinComb`] over some
//! basis index type. Zero coefficients are never stored, so structural
//! equality of two combinations is equality of the elements they represent.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Coeff = BigRational;

pub fn int(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Coeff {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Anything that carries a degree in a graded space.
pub trait Graded {
    fn degree(&self) -> usize;
}

impl<A: Graded, B: Graded> Graded for (A, B) {
    fn degree(&self) -> usize {
        self.0.degree() + self.1.degree()
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<B: Ord> {
    terms: BTreeMap<B, Coeff>,
}

/// Formal sums of pure tensors `a ⊗ b`.
pub type Tensor<B> = LinComb<(B, B)>;

impl<B: Ord> Default for LinComb<B> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<B: Ord + Clone> LinComb<B> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, Coeff::one())
    }

    pub fn term(b: B, c: Coeff) -> Self {
        let mut out = Self::zero();
        out.add_term(b, c);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (B, Coeff)>>(iter: I) -> Self {
        let mut out = Self::zero();
        for (b, c) in iter {
            out.add_term(b, c);
        }
        out
    }

    /// Sum of basis elements, each with coefficient one (repeats accumulate).
    pub fn from_basis_iter<I: IntoIterator<Item = B>>(iter: I) -> Self {
        let mut out = Self::zero();
        for b in iter {
            out.add_term(b, Coeff::one());
        }
        out
    }

    pub fn add_term(&mut self, b: B, c: Coeff) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Coeff) {
        if c.is_zero() {
            return;
        }
        for (b, v) in &other.terms {
            self.add_term(b.clone(), v * c);
        }
    }

    pub fn coeff(&self, b: &B) -> Coeff {
        self.terms.get(b).cloned().unwrap_or_else(Coeff::zero)
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

    pub fn iter(&self) -> btree_map::Iter<'_, B, Coeff> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(b, v)| (b.clone(), v * c))
                .collect(),
        }
    }

    /// Linear extension of a basis-to-basis map.
    pub fn map_basis<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> C) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Linear extension of a basis-to-combination map.
    pub fn flat_map<C: Ord + Clone>(&self, mut f: impl FnMut(&B) -> LinComb<C>) -> LinComb<C> {
        let mut out = LinComb::zero();
        for (b, c) in &self.terms {
            out.add_scaled(&f(b), c);
        }
        out
    }

    /// Bilinear extension of a product defined on basis pairs.
    pub fn bilinear<C: Ord + Clone, D: Ord + Clone>(
        &self,
        other: &LinComb<C>,
        mut f: impl FnMut(&B, &C) -> LinComb<D>,
    ) -> LinComb<D> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let prod = f(a, b);
                out.add_scaled(&prod, &(ca * cb));
            }
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<B, Coeff> {
        self.terms
    }
}

impl<B: Ord + Clone + Graded> LinComb<B> {
    pub fn component(&self, degree: usize) -> Self {
        self.filter(|b| b.degree() == degree)
    }

    pub fn truncate(&self, max_degree: usize) -> Self {
        self.filter(|b| b.degree() <= max_degree)
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut ds: Vec<usize> = self.terms.keys().map(Graded::degree).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Graded::degree).max()
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Graded::degree).min()
    }
}

impl<B: Ord + Clone> Tensor<B> {
    pub fn pure(a: B, b: B) -> Self {
        Self::basis((a, b))
    }

    /// `(f ⊗ g)` applied termwise.
    pub fn map_tensor<C: Ord + Clone>(
        &self,
        mut f: impl FnMut(&B) -> LinComb<C>,
        mut g: impl FnMut(&B) -> LinComb<C>,
    ) -> Tensor<C> {
        let mut out = Tensor::zero();
        for ((a, b), c) in self.iter() {
            let fa = f(a);
            let gb = g(b);
            for (x, cx) in fa.iter() {
                for (y, cy) in gb.iter() {
                    out.add_term((x.clone(), y.clone()), c * cx * cy);
                }
            }
        }
        out
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd` extended bilinearly.
    pub fn componentwise(
        &self,
        other: &Self,
        mut mul: impl FnMut(&B, &B) -> LinComb<B>,
    ) -> Self {
        let mut out = Tensor::zero();
        for ((a, b), c1) in self.iter() {
            for ((x, y), c2) in other.iter() {
                let left = mul(a, x);
                if left.is_zero() {
                    continue;
                }
                let right = mul(b, y);
                let c = c1 * c2;
                for (l, cl) in left.iter() {
                    for (r, cr) in right.iter() {
                        out.add_term((l.clone(), r.clone()), &c * cl * cr);
                    }
                }
            }
        }
        out
    }

    pub fn swap(&self) -> Self {
        self.map_basis(|(a, b)| (b.clone(), a.clone()))
    }
}

impl<B: Ord + Clone> Add for LinComb<B> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<B: Ord + Clone> Add for &LinComb<B> {
    type Output = LinComb<B>;
    fn add(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Coeff::one());
        out
    }
}

impl<B: Ord + Clone> AddAssign for LinComb<B> {
    fn add_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            self.add_term(b, c);
        }
    }
}

impl<B: Ord + Clone> Sub for LinComb<B> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<B: Ord + Clone> Sub for &LinComb<B> {
    type Output = LinComb<B>;
    fn sub(self, rhs: Self) -> LinComb<B> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Coeff::one());
        out
    }
}

impl<B: Ord + Clone> SubAssign for LinComb<B> {
    fn sub_assign(&mut self, rhs: Self) {
        for (b, c) in rhs.terms {
            self.add_term(b, -c);
        }
    }
}

impl<B: Ord + Clone> Neg for LinComb<B> {
    type Output = Self;
    fn neg(self) -> Self {
        LinComb {
            terms: self.terms.into_iter().map(|(b, c)| (b, -c)).collect(),
        }
    }
}

impl<B: Ord + Clone> Mul<&Coeff> for &LinComb<B> {
    type Output = LinComb<B>;
    fn mul(self, c: &Coeff) -> LinComb<B> {
        self.scale(c)
    }
}

impl<B: Ord + Clone> FromIterator<(B, Coeff)> for LinComb<B> {
    fn from_iter<I: IntoIterator<Item = (B, Coeff)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<'a, B: Ord> IntoIterator for &'a LinComb<B> {
    type Item = (&'a B, &'a Coeff);
    type IntoIter = btree_map::Iter<'a, B, Coeff>;
    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}

impl<B: Ord + fmt::Debug> fmt::Debug for LinComb<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (b, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}*{b:?}")?;
        }
        Ok(())
    }
}
