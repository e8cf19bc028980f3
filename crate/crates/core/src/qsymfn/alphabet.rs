//! Totally ordered alphabets and the evaluation of monomial quasisymmetric
//! functions on them.
//!
//! Every letter carries a rational value at the chosen sample point, a
//! degree in an auxiliary grading variable `t`, and a sign. Letters with
//! sign `-1` come from opposite alphabets: a chain may repeat them, and each
//! occurrence contributes a factor `-1`.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::combinat::Composition;
use crate::error::{Error, Result};
use crate::lincomb::Coeff;

use super::QSymElem;

#[derive(Clone, Debug, PartialEq)]
pub struct Letter {
    pub value: Coeff,
    pub degree: usize,
    pub negative: bool,
}

impl Letter {
    fn times(&self, other: &Letter) -> Letter {
        Letter {
            value: &self.value * &other.value,
            degree: self.degree + other.degree,
            negative: self.negative != other.negative,
        }
    }

    /// The idempotent `x_0` with `x_0^k = x_0`.
    fn idempotent() -> Letter {
        Letter {
            value: Coeff::one(),
            degree: 0,
            negative: false,
        }
    }
}

/// A finite, totally ordered alphabet, smallest letter first.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderedAlphabet {
    letters: Vec<Letter>,
}

/// Reverse lexicographic order on tuples of letter positions: the last
/// components are compared first; `exhausted` is the verdict for a tuple
/// that runs out first.
fn revlex_with(a: &[usize], b: &[usize], exhausted: Ordering) -> Ordering {
    let mut ia = a.iter().rev();
    let mut ib = b.iter().rev();
    loop {
        match (ia.next(), ib.next()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return exhausted,
            (Some(_), None) => return exhausted.reverse(),
            (Some(x), Some(y)) => match x.cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            },
        }
    }
}

impl OrderedAlphabet {
    pub fn from_letters(letters: Vec<Letter>) -> Self {
        OrderedAlphabet { letters }
    }

    /// Variables `x_1 < ⋯ < x_k` evaluated at `point`, each of degree one.
    pub fn base(point: &[Coeff]) -> Self {
        OrderedAlphabet {
            letters: point
                .iter()
                .map(|v| Letter {
                    value: v.clone(),
                    degree: 1,
                    negative: false,
                })
                .collect(),
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `X + Y`: every letter of `X` precedes every letter of `Y`.
    pub fn sum(&self, other: &OrderedAlphabet) -> Self {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        OrderedAlphabet { letters }
    }

    /// `X × Y` in reverse lexicographic order.
    pub fn product(&self, other: &OrderedAlphabet) -> Self {
        let mut letters = Vec::with_capacity(self.len() * other.len());
        for y in &other.letters {
            for x in &self.letters {
                letters.push(x.times(y));
            }
        }
        OrderedAlphabet { letters }
    }

    /// `1 + X`: a new idempotent letter smaller than all others.
    pub fn one_plus(&self) -> Self {
        let mut letters = vec![Letter::idempotent()];
        letters.extend(self.letters.iter().cloned());
        OrderedAlphabet { letters }
    }

    /// `X + Y + XY = (1 + X)(1 + Y) - 1`.
    pub fn heisenberg_sum(&self, other: &OrderedAlphabet) -> Self {
        let mut prod = self.one_plus().product(&other.one_plus());
        // (x_0, y_0) is the smallest pair
        prod.letters.remove(0);
        prod
    }

    /// The opposite alphabet `-X`: reversed order, every letter negative.
    pub fn negate(&self) -> Self {
        OrderedAlphabet {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| Letter {
                    negative: !l.negative,
                    ..l.clone()
                })
                .collect(),
        }
    }

    fn tuples_as_alphabet(&self, mut tuples: Vec<Vec<usize>>, exhausted: Ordering) -> Self {
        tuples.sort_by(|a, b| revlex_with(a, b, exhausted));
        OrderedAlphabet {
            letters: tuples
                .into_iter()
                .map(|t| {
                    t.iter().fold(
                        Letter {
                            value: Coeff::one(),
                            degree: 0,
                            negative: false,
                        },
                        |acc, &i| acc.times(&self.letters[i]),
                    )
                })
                .collect(),
        }
    }

    /// `exp X = X + X^(2) + ⋯ + X^(L)`, strictly increasing tuples, in
    /// reverse lexicographic order.
    pub fn divided_powers(&self, max_level: Option<usize>) -> Result<Self> {
        let level = max_level.ok_or(Error::Unbounded("divided powers need a maximal level"))?;
        let mut tuples = Vec::new();
        let k = self.len();
        fn rec(start: usize, k: usize, level: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if !cur.is_empty() {
                out.push(cur.clone());
            }
            if cur.len() == level {
                return;
            }
            for i in start..k {
                cur.push(i);
                rec(i + 1, k, level, cur, out);
                cur.pop();
            }
        }
        rec(0, k, level, &mut Vec::new(), &mut tuples);
        Ok(self.tuples_as_alphabet(tuples, Ordering::Less))
    }

    /// `X* = X + X^2 + ⋯ + X^L`, all tuples, in reverse lexicographic order.
    ///
    /// On an alphabet of negative letters the prefix tie-break flips, so that
    /// `(-X)*` carries the opposite of the order of `X*`.
    pub fn star(&self, max_level: Option<usize>) -> Result<Self> {
        let level = max_level.ok_or(Error::Unbounded("star alphabets need a maximal level"))?;
        let k = self.len();
        let mut tuples = Vec::new();
        let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..level {
            layer = layer
                .iter()
                .flat_map(|t| {
                    (0..k).map(move |i| {
                        let mut t = t.clone();
                        t.push(i);
                        t
                    })
                })
                .collect();
            tuples.extend(layer.iter().cloned());
        }
        let negative = !self.letters.is_empty() && self.letters.iter().all(|l| l.negative);
        let exhausted = if negative { Ordering::Greater } else { Ordering::Less };
        Ok(self.tuples_as_alphabet(tuples, exhausted))
    }

    /// `M_α` on this alphabet as a polynomial in `t`, truncated above `max_degree`.
    pub fn evaluate_monomial(&self, alpha: &Composition, max_degree: Option<usize>) -> Vec<Coeff> {
        let parts = alpha.parts();
        let r = parts.len();
        // state[k] = Σ over chains realising the first k parts
        let mut state: Vec<Poly> = vec![Poly::zero(); r + 1];
        state[0] = Poly::one();
        for l in &self.letters {
            let weights: Vec<Poly> = parts.iter().map(|&a| Poly::letter_power(l, a, max_degree)).collect();
            let mut next = state.clone();
            for k in 0..r {
                if state[k].is_zero() {
                    continue;
                }
                let mut run = state[k].clone();
                for (j, w) in weights.iter().enumerate().skip(k) {
                    run = run.mul(w, max_degree);
                    if run.is_zero() {
                        break;
                    }
                    next[j + 1] = next[j + 1].add(&run);
                    if !l.negative {
                        break;
                    }
                }
            }
            state = next;
        }
        state.pop().unwrap_or_else(Poly::zero).0
    }

    /// `f` on this alphabet, graded by `t` up to `max_degree`.
    pub fn evaluate_graded(&self, f: &QSymElem, max_degree: Option<usize>) -> Vec<Coeff> {
        let mut out = Poly::zero();
        for (a, c) in f {
            let v = Poly(self.evaluate_monomial(a, max_degree));
            out = out.add(&v.scale(c));
        }
        out.0
    }

    /// `f` on this alphabet at `t = 1`.
    pub fn evaluate(&self, f: &QSymElem) -> Coeff {
        self.evaluate_graded(f, None).into_iter().sum()
    }
}

/// Dense polynomial in `t` with trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq)]
struct Poly(Vec<Coeff>);

impl Poly {
    fn zero() -> Self {
        Poly(Vec::new())
    }

    fn one() -> Self {
        Poly(vec![Coeff::one()])
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn letter_power(l: &Letter, a: usize, cap: Option<usize>) -> Poly {
        let deg = l.degree * a;
        if cap.is_some_and(|c| deg > c) {
            return Poly::zero();
        }
        let mut v = num_traits::pow(l.value.clone(), a);
        if l.negative {
            v = -v;
        }
        let mut coeffs = vec![Coeff::zero(); deg + 1];
        coeffs[deg] = v;
        Poly(coeffs).trim()
    }

    fn add(&self, other: &Poly) -> Poly {
        let n = self.0.len().max(other.0.len());
        let mut out = vec![Coeff::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            out[i] += c;
        }
        Poly(out).trim()
    }

    fn scale(&self, c: &Coeff) -> Poly {
        Poly(self.0.iter().map(|x| x * c).collect()).trim()
    }

    fn mul(&self, other: &Poly, cap: Option<usize>) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut n = self.0.len() + other.0.len() - 1;
        if let Some(c) = cap {
            n = n.min(c + 1);
        }
        let mut out = vec![Coeff::zero(); n];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if i + j < n {
                    out[i + j] += a * b;
                }
            }
        }
        Poly(out).trim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::{int, LinComb};

    fn m(p: &[usize]) -> QSymElem {
        LinComb::basis(Composition::new(p.to_vec()).unwrap())
    }

    fn pt(v: &[i64]) -> Vec<Coeff> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn base_examples() {
        let a = OrderedAlphabet::base(&pt(&[1, 1, 1]));
        assert_eq!(a.evaluate(&m(&[1])), int(3));
        let a = OrderedAlphabet::base(&pt(&[1, 2]));
        assert_eq!(a.evaluate(&m(&[2])), int(5));
        assert_eq!(a.evaluate(&m(&[1, 1])), int(2));
        assert_eq!(a.evaluate(&m(&[])), int(1));
    }

    #[test]
    fn negative_examples() {
        let a = OrderedAlphabet::base(&pt(&[1, 2])).negate();
        assert_eq!(a.evaluate(&m(&[1])), int(-3));
        // (-1)^2 Σ_{i ≥ j} x_i x_j = 1 + 2 + 4
        assert_eq!(a.evaluate(&m(&[1, 1])), int(7));
        // M_(2,1)(-X) = Σ_{i ≥ j} x_i^2 x_j = 1 + 4·1 + 4·2
        assert_eq!(a.evaluate(&m(&[2, 1])), int(13));
    }

    #[test]
    fn revlex_examples() {
        // (x3, x1, x2) < (x2, x2) < (x1, x3, x2)
        assert_eq!(revlex_with(&[3, 1, 2], &[2, 2], Ordering::Less), Ordering::Less);
        assert_eq!(revlex_with(&[2, 2], &[1, 3, 2], Ordering::Less), Ordering::Less);
        assert_eq!(revlex_with(&[2], &[1, 2], Ordering::Less), Ordering::Less);
    }

    #[test]
    fn divided_power_count() {
        let a = OrderedAlphabet::base(&pt(&[1, 1, 1]));
        let e = a.divided_powers(Some(3)).unwrap();
        assert_eq!(e.len(), 7);
        assert_eq!(e.evaluate(&m(&[1])), int(7));
        assert!(a.divided_powers(None).is_err());
        assert!(a.star(None).is_err());
    }

    #[test]
    fn star_is_sorted_revlex() {
        let a = OrderedAlphabet::base(&pt(&[2, 3]));
        let s = a.star(Some(2)).unwrap();
        let values: Vec<Coeff> = s.letters().iter().map(|l| l.value.clone()).collect();
        // (x1) (x1,x1) (x2,x1) (x2) (x1,x2) (x2,x2)
        assert_eq!(values, pt(&[2, 4, 6, 3, 6, 9]));
    }

    #[test]
    fn graded_truncation() {
        let a = OrderedAlphabet::base(&pt(&[1, 2]));
        let g = a.evaluate_graded(&(m(&[1]) + m(&[2])), Some(1));
        assert_eq!(g, vec![int(0), int(3)]);
    }
}
