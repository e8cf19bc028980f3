//! Graded endomorphisms of the tensor algebra over a finite alphabet.
//!
//! Letters are primitive, so the coproduct of a word sums over all ways of
//! splitting its positions into two subwords. Endomorphisms are kept as
//! expression trees and evaluated on demand, word by word.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::combinat::Permutation;
use crate::error::{Error, Result};
use crate::lincomb::{Coeff, Graded, LinComb, Tensor};
use crate::nsymfn::NSymElem;
use crate::permalg::{embed_descents, heisenberg_perm_component, PermElem};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>, alphabet: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l > alphabet) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                size: alphabet,
            });
        }
        Ok(Word(letters))
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// The word `1 2 ⋯ n`.
    pub fn distinct(n: usize) -> Self {
        Word((1..=n).collect())
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// All words of length `n` over `[d]`, in lexicographic order.
    pub fn all(n: usize, d: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|w| {
                    (1..=d).map(move |l| {
                        let mut v = w.0.clone();
                        v.push(l);
                        Word(v)
                    })
                })
                .collect();
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Graded for Word {
    fn degree(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 && self.0.iter().any(|&x| x > 9) {
                write!(f, ".")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

pub type WordElem = LinComb<Word>;

fn concat_words(a: &WordElem, b: &WordElem) -> WordElem {
    a.bilinear(b, |x, y| LinComb::basis(x.concat(y)))
}

/// `Δ(w) = Σ_S w_S ⊗ w_{S^c}` over all position subsets `S`.
pub fn word_coproduct(w: &Word) -> Tensor<Word> {
    let n = w.len();
    let mut out = Tensor::zero();
    for mask in 0u64..(1u64 << n) {
        let (mut l, mut r) = (Vec::new(), Vec::new());
        for (i, &x) in w.0.iter().enumerate() {
            if mask & (1 << i) != 0 {
                l.push(x);
            } else {
                r.push(x);
            }
        }
        out.add_term((Word(l), Word(r)), Coeff::one());
    }
    out
}

pub fn coproduct_elem(f: &WordElem) -> Tensor<Word> {
    let mut out = Tensor::zero();
    for (w, c) in f {
        out.add_scaled(&word_coproduct(w), c);
    }
    out
}

enum Node {
    Unit,
    Perm(Permutation),
    Table(BTreeMap<Word, WordElem>),
    Sum(Vec<(Coeff, GradedEndo)>),
    Heisenberg(GradedEndo, GradedEndo),
    Convolution(GradedEndo, GradedEndo),
    /// `outer ∘ inner`
    Compose(GradedEndo, GradedEndo),
}

/// A degree-preserving linear map on words over an alphabet of size `d`.
#[derive(Clone)]
pub struct GradedEndo {
    alphabet: usize,
    node: Arc<Node>,
}

impl GradedEndo {
    fn make(alphabet: usize, node: Node) -> Self {
        GradedEndo {
            alphabet,
            node: Arc::new(node),
        }
    }

    /// `ιε`, the projection onto degree zero and the unit of `#`.
    pub fn unit(alphabet: usize) -> Self {
        Self::make(alphabet, Node::Unit)
    }

    pub fn zero(alphabet: usize) -> Self {
        Self::make(alphabet, Node::Sum(Vec::new()))
    }

    /// A map given by explicit images of basis words; unlisted words map to 0.
    pub fn from_table(alphabet: usize, table: BTreeMap<Word, WordElem>) -> Self {
        Self::make(alphabet, Node::Table(table))
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn linear_combination(alphabet: usize, terms: Vec<(Coeff, GradedEndo)>) -> Self {
        Self::make(alphabet, Node::Sum(terms))
    }

    pub fn apply(&self, w: &Word) -> WordElem {
        match &*self.node {
            Node::Unit => {
                if w.is_empty() {
                    LinComb::basis(Word::empty())
                } else {
                    LinComb::zero()
                }
            }
            Node::Perm(s) => {
                if w.len() == s.degree() {
                    LinComb::basis(Word(s.image().iter().map(|&i| w.0[i - 1]).collect()))
                } else {
                    LinComb::zero()
                }
            }
            Node::Table(t) => t.get(w).cloned().unwrap_or_default(),
            Node::Sum(terms) => {
                let mut out = LinComb::zero();
                for (c, e) in terms {
                    out.add_scaled(&e.apply(w), c);
                }
                out
            }
            Node::Heisenberg(f, g) => {
                // (f # g)(h) = Σ f(h₁)₂ · g(h₂ · f(h₁)₁)
                let mut out = LinComb::zero();
                for ((h1, h2), c) in word_coproduct(w).iter() {
                    let fh1 = f.apply(h1);
                    if fh1.is_zero() {
                        continue;
                    }
                    for ((y1, y2), cy) in coproduct_elem(&fh1).iter() {
                        let gy = g.apply(&h2.concat(y1));
                        if gy.is_zero() {
                            continue;
                        }
                        let term = concat_words(&LinComb::basis(y2.clone()), &gy);
                        out.add_scaled(&term, &(c * cy));
                    }
                }
                out
            }
            Node::Convolution(f, g) => {
                let mut out = LinComb::zero();
                for ((h1, h2), c) in word_coproduct(w).iter() {
                    let fh = f.apply(h1);
                    if fh.is_zero() {
                        continue;
                    }
                    out.add_scaled(&concat_words(&fh, &g.apply(h2)), c);
                }
                out
            }
            Node::Compose(outer, inner) => inner.apply(w).flat_map(|y| outer.apply(y)),
        }
    }

    pub fn apply_elem(&self, f: &WordElem) -> WordElem {
        f.flat_map(|w| self.apply(w))
    }

    /// Images of every word of degree `n`, zero images omitted.
    pub fn tabulate(&self, n: usize) -> BTreeMap<Word, WordElem> {
        Word::all(n, self.alphabet)
            .into_iter()
            .map(|w| {
                let img = self.apply(&w);
                (w, img)
            })
            .filter(|(_, img)| !img.is_zero())
            .collect()
    }
}

fn check_alphabets(f: &GradedEndo, g: &GradedEndo) -> Result<()> {
    if f.alphabet != g.alphabet {
        return Err(Error::AlphabetMismatch(f.alphabet, g.alphabet));
    }
    Ok(())
}

/// `Ψ(σ): v_1 ⋯ v_n ↦ v_{σ(1)} ⋯ v_{σ(n)}`, zero in other degrees.
pub fn psi_action(s: &Permutation, alphabet: usize) -> GradedEndo {
    GradedEndo::make(alphabet, Node::Perm(s.clone()))
}

pub fn psi_of(f: &PermElem, alphabet: usize) -> GradedEndo {
    GradedEndo::linear_combination(
        alphabet,
        f.iter()
            .map(|(s, c)| (c.clone(), psi_action(s, alphabet)))
            .collect(),
    )
}

pub fn endo_heisenberg(f: &GradedEndo, g: &GradedEndo) -> Result<GradedEndo> {
    check_alphabets(f, g)?;
    Ok(GradedEndo::make(f.alphabet, Node::Heisenberg(f.clone(), g.clone())))
}

/// `m (f ⊗ g) Δ`.
pub fn endo_convolution(f: &GradedEndo, g: &GradedEndo) -> Result<GradedEndo> {
    check_alphabets(f, g)?;
    Ok(GradedEndo::make(f.alphabet, Node::Convolution(f.clone(), g.clone())))
}

/// `outer ∘ inner`.
pub fn endo_compose(outer: &GradedEndo, inner: &GradedEndo) -> Result<GradedEndo> {
    check_alphabets(outer, inner)?;
    Ok(GradedEndo::make(outer.alphabet, Node::Compose(outer.clone(), inner.clone())))
}

/// Reads a combination of rearrangements of `1 2 ⋯ n` as permutations.
pub fn read_permutations(img: &WordElem, n: usize) -> Option<PermElem> {
    let mut out = LinComb::zero();
    for (w, c) in img {
        let s = Permutation::new(w.0.clone()).ok()?;
        if s.degree() != n {
            return None;
        }
        out.add_term(s, c.clone());
    }
    Some(out)
}

/// Compares `Ψ(σ) # Ψ(τ)` on the word `1 ⋯ n` with the degree-`n` part of `σ # τ`.
pub fn verify_schur_weyl(s: &Permutation, t: &Permutation, n: usize, alphabet: usize) -> bool {
    if alphabet < n {
        return false;
    }
    let Ok(prod) = endo_heisenberg(&psi_action(s, alphabet), &psi_action(t, alphabet)) else {
        return false;
    };
    let img = prod.apply(&Word::distinct(n));
    match read_permutations(&img, n) {
        Some(got) => got == heisenberg_perm_component(s, t, n),
        None => false,
    }
}

/// Checks that `Ψ(f)` sends each distinct-letter word to rearrangements of it.
pub fn check_gr_invariance(f: &NSymElem, words: &[Word]) -> bool {
    let max = words.iter().map(Word::len).max().unwrap_or(0);
    let alphabet = words
        .iter()
        .flat_map(|w| w.0.iter().copied())
        .max()
        .unwrap_or(1)
        .max(max);
    let endo = psi_of(&embed_descents(f), alphabet);
    words.iter().all(|w| {
        let mut sorted = w.0.clone();
        sorted.sort_unstable();
        endo.apply(w).support().all(|y| {
            let mut ys = y.0.clone();
            ys.sort_unstable();
            ys == sorted
        })
    })
}

/// Whether `target` lies in the rational span of `vectors`.
pub fn in_span(vectors: &[WordElem], target: &WordElem) -> bool {
    // Gaussian elimination keyed on the largest word of each pivot row
    let mut pivots: Vec<(Word, WordElem)> = Vec::new();
    let reduce = |v: &WordElem, pivots: &[(Word, WordElem)]| {
        let mut v = v.clone();
        for (w, row) in pivots {
            let c = v.coeff(w);
            if !c.is_zero() {
                v.add_scaled(row, &-c);
            }
        }
        v
    };
    for v in vectors {
        let r = reduce(v, &pivots);
        if let Some((w, c)) = r.iter().next_back().map(|(w, c)| (w.clone(), c.clone())) {
            let row = r.scale(&c.recip());
            for (_, other) in pivots.iter_mut() {
                let k = other.coeff(&w);
                if !k.is_zero() {
                    other.add_scaled(&row, &-k);
                }
            }
            pivots.push((w, row));
        }
    }
    reduce(target, &pivots).is_zero()
}

fn permutations_of<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut tail in permutations_of(&rest) {
            tail.insert(0, x.clone());
            out.push(tail);
        }
    }
    out
}

/// Whether a word element is primitive for the shuffle coproduct.
pub fn is_primitive(f: &WordElem) -> bool {
    let mut expected = Tensor::zero();
    for (w, c) in f {
        expected.add_term((Word::empty(), w.clone()), c.clone());
        expected.add_term((w.clone(), Word::empty()), c.clone());
    }
    coproduct_elem(f) == expected
}

/// The stronger invariance test: for primitives `P_1, …, P_k`, the image of
/// `P_1 ⋯ P_k` under `endo` lies in the span of all reordered products
/// `P_{π(1)} ⋯ P_{π(k)}`.
pub fn check_gr_invariance_primitive(endo: &GradedEndo, primitives: &[WordElem]) -> bool {
    let span: Vec<WordElem> = permutations_of(primitives)
        .into_iter()
        .map(|ps| ps.iter().fold(LinComb::basis(Word::empty()), |acc, p| concat_words(&acc, p)))
        .collect();
    let product = span.first().cloned().unwrap_or_default();
    in_span(&span, &endo.apply_elem(&product))
}

/// `[a, b] = ab - ba` for two words.
pub fn bracket(a: &WordElem, b: &WordElem) -> WordElem {
    concat_words(a, b) - concat_words(b, a)
}

pub fn letter(l: usize) -> WordElem {
    LinComb::basis(Word(vec![l]))
}
