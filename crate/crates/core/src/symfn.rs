//! Symmetric functions in the complete homogeneous and power-sum bases.
//!
//! The Heisenberg product is available natively in both bases: on `h` it is a
//! sum over margin matrices, on `p` a sum over common sub-multisets. The
//! internal product is native only on `p`; on `h` it goes through a change
//! of basis.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::combinat::{binomial, enumerate_margin_matrices, z_factor, Composition, Partition};
use crate::error::{Error, Result};
use crate::lincomb::{Coeff, LinComb, Tensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymBasis {
    H,
    P,
}

impl SymBasis {
    pub fn name(self) -> &'static str {
        match self {
            SymBasis::H => "h",
            SymBasis::P => "p",
        }
    }
}

/// An element of Λ written in one of the two supported bases.
#[derive(Clone, PartialEq, Eq)]
pub struct SymElem {
    pub basis: SymBasis,
    pub terms: LinComb<Partition>,
}

/// An element of Λ ⊗ Λ, both factors in the same basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymTensor {
    pub basis: SymBasis,
    pub terms: Tensor<Partition>,
}

impl SymElem {
    pub fn new(basis: SymBasis, terms: LinComb<Partition>) -> Self {
        SymElem { basis, terms }
    }

    pub fn h(parts: &[usize]) -> Self {
        Self::new(SymBasis::H, LinComb::basis(Partition::from_unsorted(parts.to_vec())))
    }

    pub fn p(parts: &[usize]) -> Self {
        Self::new(SymBasis::P, LinComb::basis(Partition::from_unsorted(parts.to_vec())))
    }

    pub fn one(basis: SymBasis) -> Self {
        Self::new(basis, LinComb::basis(Partition::empty()))
    }

    pub fn zero(basis: SymBasis) -> Self {
        Self::new(basis, LinComb::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn scale(&self, c: &Coeff) -> Self {
        Self::new(self.basis, self.terms.scale(c))
    }

    pub fn add(&self, other: &SymElem) -> Result<SymElem> {
        same_basis(self, other)?;
        Ok(Self::new(self.basis, &self.terms + &other.terms))
    }

    pub fn sub(&self, other: &SymElem) -> Result<SymElem> {
        same_basis(self, other)?;
        Ok(Self::new(self.basis, &self.terms - &other.terms))
    }

    pub fn truncate(&self, n: usize) -> SymElem {
        Self::new(self.basis, self.terms.truncate(n))
    }

    pub fn component(&self, n: usize) -> SymElem {
        Self::new(self.basis, self.terms.component(n))
    }

    /// The same element expressed in `basis`.
    pub fn in_basis(&self, basis: SymBasis) -> SymElem {
        match (self.basis, basis) {
            (SymBasis::H, SymBasis::P) => h_to_p(self),
            (SymBasis::P, SymBasis::H) => p_to_h(self),
            _ => self.clone(),
        }
    }
}

impl fmt::Debug for SymElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{:?}]", self.basis.name(), self.terms)
    }
}

impl fmt::Debug for SymTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}⊗{}[{:?}]", self.basis.name(), self.basis.name(), self.terms)
    }
}

fn same_basis(f: &SymElem, g: &SymElem) -> Result<()> {
    if f.basis != g.basis {
        return Err(Error::BasisMismatch {
            expected: f.basis.name(),
            found: g.basis.name(),
        });
    }
    Ok(())
}

fn require(f: &SymElem, basis: SymBasis) -> Result<()> {
    if f.basis != basis {
        return Err(Error::BasisMismatch {
            expected: basis.name(),
            found: f.basis.name(),
        });
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Products

/// `h_λ ⋆ h_μ = h_{λμ}` and `p_λ ⋆ p_μ = p_{λμ}`.
pub fn external(f: &SymElem, g: &SymElem) -> Result<SymElem> {
    same_basis(f, g)?;
    Ok(SymElem::new(f.basis, external_terms(&f.terms, &g.terms)))
}

fn external_terms(f: &LinComb<Partition>, g: &LinComb<Partition>) -> LinComb<Partition> {
    f.bilinear(g, |a, b| LinComb::basis(a.concat(b)))
}

/// `p_λ ∗ p_μ = z(λ) δ_{λμ} p_λ`.
pub fn internal_p(f: &SymElem, g: &SymElem) -> Result<SymElem> {
    require(f, SymBasis::P)?;
    require(g, SymBasis::P)?;
    Ok(SymElem::new(SymBasis::P, internal_p_terms(&f.terms, &g.terms)))
}

fn internal_p_terms(f: &LinComb<Partition>, g: &LinComb<Partition>) -> LinComb<Partition> {
    let mut out = LinComb::zero();
    for (l, c) in f {
        let d = g.coeff(l);
        if !d.is_zero() {
            out.add_term(l.clone(), c * d * Coeff::from_integer(z_factor(l)));
        }
    }
    out
}

/// Internal product in either basis; the `h` case goes through `p`.
pub fn internal(f: &SymElem, g: &SymElem) -> Result<SymElem> {
    same_basis(f, g)?;
    let prod = internal_p(&f.in_basis(SymBasis::P), &g.in_basis(SymBasis::P))?;
    Ok(prod.in_basis(f.basis))
}

thread_local! {
    static H_CACHE: RefCell<HashMap<(Partition, Partition), LinComb<Partition>>> =
        RefCell::new(HashMap::new());
    static P_CACHE: RefCell<HashMap<(Partition, Partition), LinComb<Partition>>> =
        RefCell::new(HashMap::new());
}

/// `h_α # h_β = Σ_n Σ_{M ∈ M^n_{α,β}} h_{p(M)}` for compositions.
pub fn heisenberg_h_compositions(alpha: &Composition, beta: &Composition) -> LinComb<Partition> {
    let (p, q) = (alpha.weight(), beta.weight());
    let mut out = LinComb::zero();
    for n in p.max(q)..=p + q {
        for m in enumerate_margin_matrices(alpha, beta, n).expect("n in range") {
            out.add_term(m.partition(), Coeff::one());
        }
    }
    out
}

fn heisenberg_h_basis(a: &Partition, b: &Partition) -> LinComb<Partition> {
    let key = (a.clone(), b.clone());
    if let Some(hit) = H_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let out = heisenberg_h_compositions(&a.as_composition(), &b.as_composition());
    H_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

pub fn heisenberg_h(f: &SymElem, g: &SymElem) -> Result<SymElem> {
    require(f, SymBasis::H)?;
    require(g, SymBasis::H)?;
    Ok(SymElem::new(SymBasis::H, heisenberg_h_terms(&f.terms, &g.terms)))
}

fn heisenberg_h_terms(f: &LinComb<Partition>, g: &LinComb<Partition>) -> LinComb<Partition> {
    f.bilinear(g, heisenberg_h_basis)
}

/// Sub-multisets of a partition, each with the number of position subsets
/// realising it.
fn sub_multisets(l: &Partition) -> Vec<(Partition, Coeff)> {
    let mults = l.multiplicities();
    let mut out = vec![(Vec::new(), Coeff::one())];
    for (r, m) in mults {
        let mut next = Vec::new();
        for (parts, c) in &out {
            for k in 0..=m {
                let mut p = parts.clone();
                p.extend(std::iter::repeat_n(r, k));
                next.push((p, c * Coeff::from_integer(binomial(m, k))));
            }
        }
        out = next;
    }
    out.into_iter()
        .map(|(p, c)| (Partition::from_unsorted(p), c))
        .collect()
}

fn multiset_difference(l: &Partition, g: &Partition) -> Partition {
    let mut rest = l.parts().to_vec();
    for part in g.parts() {
        let pos = rest.iter().position(|x| x == part).expect("sub-multiset");
        rest.remove(pos);
    }
    Partition::from_unsorted(rest)
}

fn heisenberg_p_basis(l: &Partition, m: &Partition) -> LinComb<Partition> {
    let key = (l.clone(), m.clone());
    if let Some(hit) = P_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    let from_m: HashMap<Partition, Coeff> = sub_multisets(m).into_iter().collect();
    let mut out = LinComb::zero();
    for (g, cl) in sub_multisets(l) {
        let Some(cm) = from_m.get(&g) else { continue };
        let idx = multiset_difference(l, &g)
            .concat(&g)
            .concat(&multiset_difference(m, &g));
        out.add_term(idx, cl * cm * Coeff::from_integer(z_factor(&g)));
    }
    P_CACHE.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

pub fn heisenberg_p(f: &SymElem, g: &SymElem) -> Result<SymElem> {
    require(f, SymBasis::P)?;
    require(g, SymBasis::P)?;
    Ok(SymElem::new(SymBasis::P, f.terms.bilinear(&g.terms, heisenberg_p_basis)))
}

/// Heisenberg product in whichever basis both operands share.
pub fn heisenberg(f: &SymElem, g: &SymElem) -> Result<SymElem> {
    same_basis(f, g)?;
    match f.basis {
        SymBasis::H => heisenberg_h(f, g),
        SymBasis::P => heisenberg_p(f, g),
    }
}

// ---------------------------------------------------------------------------
// Coproduct and the Zelevinski identity

fn coproduct_basis(basis: SymBasis, l: &Partition) -> Tensor<Partition> {
    let mut acc = Tensor::pure(Partition::empty(), Partition::empty());
    for &a in l.parts() {
        let factor = match basis {
            SymBasis::H => Tensor::from_basis_iter(
                (0..=a).map(|i| (Partition::single(i), Partition::single(a - i))),
            ),
            SymBasis::P => Tensor::from_basis_iter([
                (Partition::empty(), Partition::single(a)),
                (Partition::single(a), Partition::empty()),
            ]),
        };
        acc = acc.componentwise(&factor, |x, y| LinComb::basis(x.concat(y)));
    }
    acc
}

/// The coproduct dual to the external product: `Δ(h_a) = Σ h_i ⊗ h_{a-i}`,
/// power sums primitive, extended multiplicatively.
pub fn coproduct(f: &SymElem) -> SymTensor {
    let mut out = Tensor::zero();
    for (l, c) in &f.terms {
        out.add_scaled(&coproduct_basis(f.basis, l), c);
    }
    SymTensor {
        basis: f.basis,
        terms: out,
    }
}

/// `f # g = Σ f₁ ⋆ (f₂ ∗ g₁) ⋆ g₂`, computed from the coproduct and the
/// internal product only.
pub fn heisenberg_via_zelevinski(f: &SymElem, g: &SymElem) -> Result<SymElem> {
    same_basis(f, g)?;
    let basis = f.basis;
    let df = coproduct(f);
    let dg = coproduct(g);
    let mut out = LinComb::zero();
    for ((f1, f2), cf) in df.terms.iter() {
        for ((g1, g2), cg) in dg.terms.iter() {
            if f2.weight() != g1.weight() {
                continue;
            }
            let mid = internal(
                &SymElem::new(basis, LinComb::basis(f2.clone())),
                &SymElem::new(basis, LinComb::basis(g1.clone())),
            )?;
            let left = external_terms(&LinComb::basis(f1.clone()), &mid.terms);
            let full = external_terms(&left, &LinComb::basis(g2.clone()));
            out.add_scaled(&full, &(cf * cg));
        }
    }
    Ok(SymElem::new(basis, out))
}

/// Componentwise Heisenberg product on Λ ⊗ Λ.
pub fn tensor_heisenberg(a: &SymTensor, b: &SymTensor) -> Result<SymTensor> {
    if a.basis != b.basis {
        return Err(Error::BasisMismatch {
            expected: a.basis.name(),
            found: b.basis.name(),
        });
    }
    let terms = match a.basis {
        SymBasis::H => a.terms.componentwise(&b.terms, heisenberg_h_basis),
        SymBasis::P => a.terms.componentwise(&b.terms, heisenberg_p_basis),
    };
    Ok(SymTensor {
        basis: a.basis,
        terms,
    })
}

// ---------------------------------------------------------------------------
// Change of basis

thread_local! {
    static HN_IN_P: RefCell<HashMap<usize, LinComb<Partition>>> = RefCell::new(HashMap::new());
    static PN_IN_H: RefCell<HashMap<usize, LinComb<Partition>>> = RefCell::new(HashMap::new());
}

/// `h_n = Σ_{λ ⊢ n} p_λ / z(λ)`.
fn h_single_in_p(n: usize) -> LinComb<Partition> {
    if let Some(hit) = HN_IN_P.with(|c| c.borrow().get(&n).cloned()) {
        return hit;
    }
    let out = LinComb::from_terms(
        Partition::all_of(n)
            .into_iter()
            .map(|l| {
                let z = Coeff::from_integer(z_factor(&l));
                (l, z.recip())
            }),
    );
    HN_IN_P.with(|c| c.borrow_mut().insert(n, out.clone()));
    out
}

/// `p_n = n h_n - Σ_{i=1}^{n-1} p_i h_{n-i}` (Newton's identity).
fn p_single_in_h(n: usize) -> LinComb<Partition> {
    if let Some(hit) = PN_IN_H.with(|c| c.borrow().get(&n).cloned()) {
        return hit;
    }
    let mut out = LinComb::term(Partition::single(n), Coeff::from_integer((n as i64).into()));
    for i in 1..n {
        let prod = external_terms(&p_single_in_h(i), &LinComb::basis(Partition::single(n - i)));
        out -= prod;
    }
    PN_IN_H.with(|c| c.borrow_mut().insert(n, out.clone()));
    out
}

fn multiplicative(
    f: &LinComb<Partition>,
    single: impl Fn(usize) -> LinComb<Partition>,
) -> LinComb<Partition> {
    f.flat_map(|l| {
        l.parts()
            .iter()
            .fold(LinComb::basis(Partition::empty()), |acc, &a| {
                external_terms(&acc, &single(a))
            })
    })
}

pub fn h_to_p(f: &SymElem) -> SymElem {
    match f.basis {
        SymBasis::P => f.clone(),
        SymBasis::H => SymElem::new(SymBasis::P, multiplicative(&f.terms, h_single_in_p)),
    }
}

pub fn p_to_h(f: &SymElem) -> SymElem {
    match f.basis {
        SymBasis::H => f.clone(),
        SymBasis::P => SymElem::new(SymBasis::H, multiplicative(&f.terms, p_single_in_h)),
    }
}

// ---------------------------------------------------------------------------
// Isomorphisms

/// `h_{(a_1,...,a_r)} ↦ h_{a_1} # ⋯ # h_{a_r}`, from (Λ, ⋆) to (Λ, #).
pub fn iso_external_to_heisenberg(f: &SymElem) -> Result<SymElem> {
    require(f, SymBasis::H)?;
    Ok(SymElem::new(SymBasis::H, f.terms.flat_map(iso_basis)))
}

fn iso_basis(l: &Partition) -> LinComb<Partition> {
    l.parts()
        .iter()
        .fold(LinComb::basis(Partition::empty()), |acc, &a| {
            heisenberg_h_terms(&acc, &LinComb::basis(Partition::single(a)))
        })
}

/// Inverse of [`iso_external_to_heisenberg`], peeling off top-degree terms.
pub fn iso_heisenberg_to_external(f: &SymElem) -> Result<SymElem> {
    require(f, SymBasis::H)?;
    let mut rest = f.terms.clone();
    let mut out = LinComb::zero();
    while let Some(top) = rest.max_degree() {
        let (l, c) = rest
            .component(top)
            .iter()
            .next()
            .map(|(l, c)| (l.clone(), c.clone()))
            .expect("non-empty component");
        rest.add_scaled(&iso_basis(&l), &-c.clone());
        out.add_term(l, c);
    }
    Ok(SymElem::new(SymBasis::H, out))
}

/// `f ↦ f ⋆ Σ_{n ≥ 0} h_n`, truncated to degree at most `n_max`.
pub fn iso_heisenberg_to_internal_truncated(f: &SymElem, n_max: usize) -> Result<SymElem> {
    require(f, SymBasis::H)?;
    let series = LinComb::from_basis_iter((0..=n_max).map(Partition::single));
    Ok(SymElem::new(
        SymBasis::H,
        external_terms(&f.terms.truncate(n_max), &series).truncate(n_max),
    ))
}
