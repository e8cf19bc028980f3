//! Noncommutative symmetric functions in the `X_α` basis.
//!
//! `X_α` is the sum of all permutations whose descent set is contained in
//! the subset attached to `α`. Products here are computed on indices alone;
//! [`crate::permalg::embed_descents`] recovers the permutation picture.

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::One;

use crate::combinat::{enumerate_margin_matrices, Composition, Partition};
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::symfn::{SymBasis, SymElem};

pub type NSymElem = LinComb<Composition>;
pub type NSymTensor = Tensor<Composition>;

pub fn x(parts: &[usize]) -> NSymElem {
    LinComb::basis(Composition::new(parts.to_vec()).expect("positive parts"))
}

pub fn x_unit() -> NSymElem {
    LinComb::basis(Composition::empty())
}

/// `X_α ⋆ X_β = X_{αβ}`.
pub fn external_x(f: &NSymElem, g: &NSymElem) -> NSymElem {
    f.bilinear(g, |a, b| LinComb::basis(a.concat(b)))
}

thread_local! {
    static HEIS: RefCell<HashMap<(Composition, Composition), NSymElem>> = RefCell::new(HashMap::new());
    static ANTIPODE: RefCell<HashMap<Composition, NSymElem>> = RefCell::new(HashMap::new());
    static PSI: RefCell<HashMap<Composition, NSymElem>> = RefCell::new(HashMap::new());
}

fn matrices_to_compositions(a: &Composition, b: &Composition, n: usize, out: &mut NSymElem) {
    for m in enumerate_margin_matrices(a, b, n).expect("n in range") {
        out.add_term(m.composition(), Coeff::one());
    }
}

/// `X_α # X_β = Σ_n Σ_{M ∈ M^n_{α,β}} X_{c(M)}` on basis elements.
pub fn heisenberg_x_basis(a: &Composition, b: &Composition) -> NSymElem {
    let key = (a.clone(), b.clone());
    if let Some(hit) = HEIS.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let (p, q) = (a.weight(), b.weight());
    let mut out = LinComb::zero();
    for n in p.max(q)..=p + q {
        matrices_to_compositions(a, b, n, &mut out);
    }
    HEIS.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

pub fn heisenberg_x(f: &NSymElem, g: &NSymElem) -> NSymElem {
    f.bilinear(g, heisenberg_x_basis)
}

/// The degree-preserving part of `#`: only matrices with empty zeroth row and column.
pub fn internal_x(f: &NSymElem, g: &NSymElem) -> NSymElem {
    f.bilinear(g, |a, b| {
        let mut out = LinComb::zero();
        if a.weight() == b.weight() {
            matrices_to_compositions(a, b, a.weight(), &mut out);
        }
        out
    })
}

fn coproduct_x_basis(a: &Composition) -> NSymTensor {
    // every split vector b + c = a, componentwise
    let mut splits: Vec<(Vec<usize>, Vec<usize>)> = vec![(Vec::new(), Vec::new())];
    for &part in a.parts() {
        let mut next = Vec::with_capacity(splits.len() * (part + 1));
        for (l, r) in &splits {
            for i in 0..=part {
                let mut l2 = l.clone();
                let mut r2 = r.clone();
                l2.push(i);
                r2.push(part - i);
                next.push((l2, r2));
            }
        }
        splits = next;
    }
    Tensor::from_basis_iter(
        splits
            .into_iter()
            .map(|(l, r)| (Composition::from_weak(&l), Composition::from_weak(&r))),
    )
}

/// `[X_α ⊗ X_β] Δ(X_γ)`: the number of splits `b + c = γ` with `b̃ = α` and `c̃ = β`.
pub fn coproduct_coeff(g: &Composition, a: &Composition, b: &Composition) -> usize {
    fn count(g: &[usize], a: &[usize], b: &[usize]) -> usize {
        let Some((&part, g)) = g.split_first() else {
            return usize::from(a.is_empty() && b.is_empty());
        };
        let mut n = 0;
        if a.first() == Some(&part) {
            n += count(g, &a[1..], b);
        }
        if b.first() == Some(&part) {
            n += count(g, a, &b[1..]);
        }
        if let (Some(&x), Some(&y)) = (a.first(), b.first()) {
            if x + y == part {
                n += count(g, &a[1..], &b[1..]);
            }
        }
        n
    }
    count(g.parts(), a.parts(), b.parts())
}

/// `Δ(X_α) = Σ_{b + c = α} X_{b̃} ⊗ X_{c̃}`, zero parts dropped.
pub fn coproduct_x(f: &NSymElem) -> NSymTensor {
    let mut out = Tensor::zero();
    for (a, c) in f {
        out.add_scaled(&coproduct_x_basis(a), c);
    }
    out
}

/// Componentwise `#` on Σ ⊗ Σ.
pub fn tensor_heisenberg_x(a: &NSymTensor, b: &NSymTensor) -> NSymTensor {
    a.componentwise(b, heisenberg_x_basis)
}

/// `π(X_α) = h_{α̃}`, the reordering map to Λ.
pub fn project_pi(f: &NSymElem) -> SymElem {
    SymElem::new(SymBasis::H, f.map_basis(Composition::sorted))
}

pub fn project_pi_tensor(t: &NSymTensor) -> Tensor<Partition> {
    t.map_basis(|(a, b)| (a.sorted(), b.sorted()))
}

fn psi_basis(a: &Composition) -> NSymElem {
    if let Some(hit) = PSI.with(|c| c.borrow().get(a).cloned()) {
        return hit;
    }
    let out = a.parts().iter().fold(x_unit(), |acc, &part| {
        heisenberg_x(&acc, &LinComb::basis(Composition::single(part)))
    });
    PSI.with(|c| c.borrow_mut().insert(a.clone(), out.clone()));
    out
}

/// `ψ(X_{(a_1,...,a_r)}) = X_{a_1} # ⋯ # X_{a_r}`.
pub fn iso_psi(f: &NSymElem) -> NSymElem {
    f.flat_map(psi_basis)
}

/// Inverse of [`iso_psi`]; the top-degree part of `ψ(X_α)` is `X_α`.
pub fn iso_psi_inv(f: &NSymElem) -> NSymElem {
    let mut rest = f.clone();
    let mut out = LinComb::zero();
    while let Some(top) = rest.max_degree() {
        let comp = rest.component(top);
        let (a, c) = comp.iter().next().expect("non-empty component");
        rest.add_scaled(&psi_basis(a), &-c.clone());
        out.add_term(a.clone(), c.clone());
    }
    out
}

fn antipode_basis(a: &Composition) -> NSymElem {
    if a.is_empty() {
        return x_unit();
    }
    if let Some(hit) = ANTIPODE.with(|c| c.borrow().get(a).cloned()) {
        return hit;
    }
    // Σ S(f₁) # f₂ = 0; the two outer terms give S(X_α) + X_α.
    let mut out = -LinComb::basis(a.clone());
    for ((l, r), c) in coproduct_x_basis(a).iter() {
        if l.is_empty() || r.is_empty() {
            continue;
        }
        let term = heisenberg_x(&antipode_basis(l), &LinComb::basis(r.clone()));
        out.add_scaled(&term, &-c.clone());
    }
    ANTIPODE.with(|c| c.borrow_mut().insert(a.clone(), out.clone()));
    out
}

/// Antipode of the Hopf algebra (Σ, #, Δ), by recursion on the graded coproduct.
pub fn antipode_heisenberg_x(f: &NSymElem) -> NSymElem {
    f.flat_map(antipode_basis)
}

/// `f ↦ f ⋆ Σ_n X_{(n)}`, truncated to degree at most `n_max`. Unlike its
/// counterpart on Λ this is not multiplicative.
pub fn phi_truncated(f: &NSymElem, n_max: usize) -> NSymElem {
    let series = LinComb::from_basis_iter((0..=n_max).map(Composition::single));
    external_x(&f.truncate(n_max), &series).truncate(n_max)
}
