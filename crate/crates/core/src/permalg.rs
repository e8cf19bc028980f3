//! The space spanned by all permutations, with composition, the
//! Malvenuto–Reutenauer product, the Heisenberg product and the shuffle
//! coproduct.
//!
//! Composition follows `(στ)(i) = σ(τ(i))` throughout.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::combinat::{beta_max_shuffle, shuffles, standardize, Composition, Permutation};
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::nsymfn::NSymElem;

pub type PermElem = LinComb<Permutation>;
pub type PermTensor = Tensor<Permutation>;

pub fn perm(word: &str) -> PermElem {
    LinComb::basis(Permutation::from_word(word).expect("valid one-line word"))
}

/// Group product within each degree, zero across degrees.
pub fn compose(f: &PermElem, g: &PermElem) -> PermElem {
    f.bilinear(g, |s, t| {
        if s.degree() == t.degree() {
            LinComb::basis(s.compose(t))
        } else {
            LinComb::zero()
        }
    })
}

fn mr_basis(s: &Permutation, t: &Permutation) -> PermElem {
    let st = s.times(t);
    LinComb::from_basis_iter(
        shuffles(s.degree(), t.degree())
            .iter()
            .map(|xi| xi.compose(&st)),
    )
}

/// `σ ⋆ τ = Σ_{ξ ∈ Sh(p,q)} ξ (σ × τ)`.
pub fn mr_product(f: &PermElem, g: &PermElem) -> PermElem {
    f.bilinear(g, mr_basis)
}

thread_local! {
    static HEIS: RefCell<HashMap<(Permutation, Permutation), PermElem>> = RefCell::new(HashMap::new());
}

/// The degree-`n` component of `σ # τ`.
pub fn heisenberg_perm_component(s: &Permutation, t: &Permutation, n: usize) -> PermElem {
    let (p, q) = (s.degree(), t.degree());
    let mut out = LinComb::zero();
    if n < p.max(q) || n > p + q {
        return out;
    }
    let overlap = p + q - n;
    let right = Permutation::identity(n - q).times(t);
    let beta = beta_max_shuffle(2 * n - p - q, overlap);
    let tail = beta.compose(&right);
    let id_rest = Permutation::identity(n - p);
    for eta in shuffles(overlap, n - q) {
        let left = s.compose(&eta).times(&id_rest).compose(&tail);
        for xi in shuffles(p, n - p) {
            out.add_term(xi.compose(&left), Coeff::one());
        }
    }
    out
}

pub fn heisenberg_perm_basis(s: &Permutation, t: &Permutation) -> PermElem {
    let key = (s.clone(), t.clone());
    if let Some(hit) = HEIS.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let (p, q) = (s.degree(), t.degree());
    let mut out = LinComb::zero();
    for n in p.max(q)..=p + q {
        out += heisenberg_perm_component(s, t, n);
    }
    HEIS.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// `σ # τ = Σ_n Σ_{ξ, η} ξ ((σ η) × Id_{n-p}) β_{2n-p-q, p+q-n} (Id_{n-q} × τ)`
/// with `ξ ∈ Sh(p, n-p)` and `η ∈ Sh(p+q-n, n-q)`.
pub fn heisenberg_perm(f: &PermElem, g: &PermElem) -> PermElem {
    f.bilinear(g, heisenberg_perm_basis)
}

/// The factorisation `σ = (σ_p × σ'_q) ξ⁻¹` for one cut `p`.
pub fn split_at(s: &Permutation, p: usize) -> (Permutation, Permutation) {
    let n = s.degree();
    let inv = s.inverse();
    let mut low: Vec<usize> = (1..=p).map(|v| inv.apply(v)).collect();
    low.sort_unstable();
    let mut high: Vec<usize> = (p + 1..=n).map(|v| inv.apply(v)).collect();
    high.sort_unstable();
    let left: Vec<usize> = low.iter().map(|&i| s.apply(i)).collect();
    let right: Vec<usize> = high.iter().map(|&i| s.apply(i)).collect();
    (standardize(&left), standardize(&right))
}

/// Whether `σ = (a × b) ξ⁻¹` for some `ξ ∈ Sh(p, n - p)`.
pub fn factors_through(s: &Permutation, p: usize, (a, b): &(Permutation, Permutation)) -> bool {
    if a.degree() != p || a.degree() + b.degree() != s.degree() {
        return false;
    }
    let ab = a.times(b);
    shuffles(p, s.degree() - p)
        .iter()
        .any(|xi| ab.compose(&xi.inverse()) == *s)
}

fn coproduct_basis(s: &Permutation) -> PermTensor {
    Tensor::from_basis_iter((0..=s.degree()).map(|p| split_at(s, p)))
}

/// `Δ(σ) = Σ_p σ_p ⊗ σ'_{n-p}`.
pub fn coproduct_perm(f: &PermElem) -> PermTensor {
    let mut out = Tensor::zero();
    for (s, c) in f {
        out.add_scaled(&coproduct_basis(s), c);
    }
    out
}

/// Permutations which increase on each block of `a`, i.e. `Des(σ) ⊆ set(a)`.
pub fn descent_class(a: &Composition) -> Vec<Permutation> {
    let n = a.weight();
    let mut out = Vec::new();
    let mut image = vec![0usize; n];
    let mut used = vec![false; n + 1];
    fn rec(
        blocks: &[usize],
        start: usize,
        image: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Permutation>,
    ) {
        let Some((&len, rest)) = blocks.split_first() else {
            out.push(Permutation::from_vec_unchecked(image.clone()));
            return;
        };
        // choose an increasing run of `len` unused values for positions start..start+len
        fn pick(
            k: usize,
            min: usize,
            len: usize,
            start: usize,
            rest: &[usize],
            image: &mut Vec<usize>,
            used: &mut Vec<bool>,
            out: &mut Vec<Permutation>,
        ) {
            if k == len {
                rec(rest, start + len, image, used, out);
                return;
            }
            let n = image.len();
            for v in min..=n {
                if !used[v] {
                    used[v] = true;
                    image[start + k] = v;
                    pick(k + 1, v + 1, len, start, rest, image, used, out);
                    used[v] = false;
                }
            }
        }
        pick(0, 1, len, start, rest, image, used, out);
    }
    rec(a.parts(), 0, &mut image, &mut used, &mut out);
    out.sort();
    out
}

/// `X_α ↦ Σ_{Des(σ) ⊆ set(α)} σ`.
pub fn embed_descents(f: &NSymElem) -> PermElem {
    f.flat_map(|a| LinComb::from_basis_iter(descent_class(a)))
}

/// Componentwise product on tensors of permutations.
pub fn tensor_product_with(
    a: &PermTensor,
    b: &PermTensor,
    mul: impl FnMut(&Permutation, &Permutation) -> PermElem,
) -> PermTensor {
    a.componentwise(b, mul)
}

pub fn mr_basis_product(s: &Permutation, t: &Permutation) -> PermElem {
    mr_basis(s, t)
}

pub fn compose_basis(s: &Permutation, t: &Permutation) -> PermElem {
    compose(&LinComb::basis(s.clone()), &LinComb::basis(t.clone()))
}
