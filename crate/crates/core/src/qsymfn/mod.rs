//! Quasisymmetric functions in the monomial basis `M_α`.
//!
//! QSym is graded dual to Σ under `⟨M_α, X_β⟩ = δ_{αβ}`. The product and
//! the three coproducts are computed as transposes of the structures on Σ,
//! except the Heisenberg coproduct, which is read off margin matrices
//! directly. Completion-valued maps take an explicit degree cap.

pub mod alphabet;

use std::cell::RefCell;
use std::collections::HashMap;

use num_traits::Zero;

use crate::combinat::Composition;
use crate::lincomb::{Coeff, LinComb, Tensor};
use crate::nsymfn::{antipode_heisenberg_x, coproduct_coeff, internal_x, iso_psi, NSymElem};

pub use alphabet::{Letter, OrderedAlphabet};

pub type QSymElem = LinComb<Composition>;
pub type QSymTensor = Tensor<Composition>;

pub fn m(parts: &[usize]) -> QSymElem {
    LinComb::basis(Composition::new(parts.to_vec()).expect("positive parts"))
}

pub fn m_unit() -> QSymElem {
    LinComb::basis(Composition::empty())
}

/// `⟨f, g⟩` for `f` in QSym and `g` in Σ.
pub fn pairing(f: &QSymElem, g: &NSymElem) -> Coeff {
    f.iter().map(|(a, c)| c * g.coeff(a)).sum()
}

pub fn pairing_tensor(f: &QSymTensor, g: &Tensor<Composition>) -> Coeff {
    f.iter().map(|(k, c)| c * g.coeff(k)).sum()
}

thread_local! {
    static PRODUCT: RefCell<HashMap<(Composition, Composition), QSymElem>> = RefCell::new(HashMap::new());
    static HCOPROD: RefCell<HashMap<Composition, QSymTensor>> = RefCell::new(HashMap::new());
}

/// Compositions of `n` with between `lo` and `hi` parts.
fn compositions_with_len(n: usize, lo: usize, hi: usize) -> Vec<Composition> {
    Composition::all_of(n)
        .into_iter()
        .filter(|c| (lo..=hi).contains(&c.len()))
        .collect()
}

fn product_basis(a: &Composition, b: &Composition) -> QSymElem {
    let key = (a.clone(), b.clone());
    if let Some(hit) = PRODUCT.with(|c| c.borrow().get(&key).cloned()) {
        return hit;
    }
    // [M_γ] M_α M_β = [X_α ⊗ X_β] Δ(X_γ)
    let mut out = LinComb::zero();
    for g in compositions_with_len(a.weight() + b.weight(), a.len().max(b.len()), a.len() + b.len()) {
        let c = coproduct_coeff(&g, a, b);
        out.add_term(g, Coeff::from_integer(c.into()));
    }
    PRODUCT.with(|c| c.borrow_mut().insert(key, out.clone()));
    out
}

/// The product of QSym, as the transpose of the coproduct of Σ.
pub fn product_m(f: &QSymElem, g: &QSymElem) -> QSymElem {
    f.bilinear(g, product_basis)
}

/// Componentwise product on QSym ⊗ QSym.
pub fn tensor_product_m(a: &QSymTensor, b: &QSymTensor) -> QSymTensor {
    a.componentwise(b, product_basis)
}

/// Matrices `M` with `c(M) = γ`, returned as `(column sums, row sums)` of the
/// non-zero-indexed margins.
fn matrices_reading(gamma: &Composition) -> Vec<(Composition, Composition)> {
    let g = gamma.parts();
    let k = g.len();
    let mut out = Vec::new();
    // rows[e] and cols[e]: position of the e-th entry
    let mut rows = vec![0usize; k];
    let mut cols = vec![0usize; k];
    // at most k non-zero columns and rows beyond the zeroth
    for r in 0..=k {
        assign(0, 0, r, g, &mut rows, &mut cols, &mut out);
    }
    out
}

fn assign(
    e: usize,
    row: usize,
    r: usize,
    g: &[usize],
    rows: &mut Vec<usize>,
    cols: &mut Vec<usize>,
    out: &mut Vec<(Composition, Composition)>,
) {
    let k = g.len();
    if e == k {
        let mut col_sums = vec![0usize; r + 1];
        let s = rows.last().copied().unwrap_or(0);
        let mut row_sums = vec![0usize; s + 1];
        for i in 0..k {
            col_sums[cols[i]] += g[i];
            row_sums[rows[i]] += g[i];
        }
        if col_sums[1..].iter().all(|&c| c > 0) && row_sums[1..].iter().all(|&c| c > 0) {
            out.push((
                Composition::new(col_sums[1..].to_vec()).expect("positive"),
                Composition::new(row_sums[1..].to_vec()).expect("positive"),
            ));
        }
        return;
    }
    // continue the current row with a larger column, or open the next row
    let same_row_min = if e == 0 { None } else { Some(cols[e - 1] + 1) };
    let candidates: Vec<(usize, usize)> = {
        let mut v = Vec::new();
        if let Some(min) = same_row_min {
            for c in min..=r {
                v.push((row, c));
            }
        } else {
            // the first entry may sit in row 0 (not column 0) or open row 1
            for c in 1..=r {
                v.push((0, c));
            }
        }
        let next_row = if e == 0 { 1 } else { row + 1 };
        for c in 0..=r {
            v.push((next_row, c));
        }
        v
    };
    for (ri, c) in candidates {
        if ri == 0 && c == 0 {
            continue;
        }
        rows[e] = ri;
        cols[e] = c;
        assign(e + 1, ri, r, g, rows, cols, out);
    }
}

fn heisenberg_coproduct_basis(gamma: &Composition) -> QSymTensor {
    if let Some(hit) = HCOPROD.with(|c| c.borrow().get(gamma).cloned()) {
        return hit;
    }
    let out = Tensor::from_basis_iter(matrices_reading(gamma));
    HCOPROD.with(|c| c.borrow_mut().insert(gamma.clone(), out.clone()));
    out
}

/// `Δ_#(M_γ) = Σ_{α,β} |{M ∈ M^n_{α,β} : c(M) = γ}| M_α ⊗ M_β`, `n = |γ|`.
pub fn heisenberg_coproduct(f: &QSymElem) -> QSymTensor {
    let mut out = Tensor::zero();
    for (g, c) in f {
        out.add_scaled(&heisenberg_coproduct_basis(g), c);
    }
    out
}

/// `Δ_⋆`, deconcatenation.
pub fn external_coproduct(f: &QSymElem) -> QSymTensor {
    let mut out = Tensor::zero();
    for (g, c) in f {
        let parts = g.parts();
        for cut in 0..=parts.len() {
            let l = Composition::new(parts[..cut].to_vec()).expect("positive");
            let r = Composition::new(parts[cut..].to_vec()).expect("positive");
            out.add_term((l, r), c.clone());
        }
    }
    out
}

/// `Δ_∘`, the transpose of the internal product on Σ.
pub fn internal_coproduct(f: &QSymElem) -> QSymTensor {
    let mut out = Tensor::zero();
    for (g, c) in f {
        let n = g.weight();
        let comps = Composition::all_of(n);
        for a in &comps {
            for b in &comps {
                let prod = internal_x(&LinComb::basis(a.clone()), &LinComb::basis(b.clone()));
                let k = prod.coeff(g);
                if !k.is_zero() {
                    out.add_term((a.clone(), b.clone()), c * k);
                }
            }
        }
    }
    out
}

/// `(Δ_⋆(f), Δ_∘(f))`.
pub fn classical_coproducts(f: &QSymElem) -> (QSymTensor, QSymTensor) {
    (external_coproduct(f), internal_coproduct(f))
}

/// Coefficient of `M_()`.
pub fn counit(f: &QSymElem) -> Coeff {
    f.coeff(&Composition::empty())
}

/// The transpose of a linear map on Σ, restricted to output degree `≤ n_max`.
fn transpose_truncated(f: &QSymElem, n_max: usize, map: impl Fn(&NSymElem) -> NSymElem) -> QSymElem {
    let mut out = LinComb::zero();
    for b in Composition::all_up_to(n_max) {
        let img = map(&LinComb::basis(b.clone()));
        let c = pairing(f, &img);
        out.add_term(b, c);
    }
    out
}

/// `S_#(f) = f((-X)*)`, computed as the transpose of the antipode of (Σ, #, Δ)
/// and truncated to degree `≤ n_max`.
pub fn antipode_heisenberg_qsym(f: &QSymElem, n_max: usize) -> QSymElem {
    transpose_truncated(f, n_max, antipode_heisenberg_x)
}

/// `ψ*(f) = f(exp X)`, the transpose of `ψ`, truncated to degree `≤ n_max`.
pub fn iso_dual_psi(f: &QSymElem, n_max: usize) -> QSymElem {
    transpose_truncated(f, n_max, iso_psi)
}

/// `ψ*(f)` evaluated numerically: `f` on the divided-power alphabet of `point`,
/// together with the symbolic answer on the base alphabet, both graded up to `n_max`.
pub fn iso_dual_psi_numeric(f: &QSymElem, n_max: usize, point: &[Coeff]) -> (Vec<Coeff>, Vec<Coeff>) {
    let base = OrderedAlphabet::base(point);
    let exp = base.divided_powers(Some(n_max)).expect("level given");
    let numeric = pad(exp.evaluate_graded(f, Some(n_max)), n_max);
    let symbolic = pad(base.evaluate_graded(&iso_dual_psi(f, n_max), Some(n_max)), n_max);
    (numeric, symbolic)
}

/// Pads a graded value to `n + 1` coefficients.
pub fn pad(mut v: Vec<Coeff>, n: usize) -> Vec<Coeff> {
    v.resize(n + 1, Coeff::zero());
    v
}

/// Evaluates a tensor on two alphabets: `Σ c f(X) g(Y)`.
pub fn evaluate_tensor(t: &QSymTensor, x: &OrderedAlphabet, y: &OrderedAlphabet) -> Coeff {
    let mut out = Coeff::zero();
    for ((a, b), c) in t.iter() {
        let fa = x.evaluate(&LinComb::basis(a.clone()));
        let fb = y.evaluate(&LinComb::basis(b.clone()));
        out += c * fa * fb;
    }
    out
}

/// Quasi-shuffle product computed directly on indices; used as an oracle.
pub fn quasi_shuffle(a: &[usize], b: &[usize]) -> QSymElem {
    if a.is_empty() || b.is_empty() {
        let mut v = a.to_vec();
        v.extend_from_slice(b);
        return LinComb::basis(Composition::new(v).expect("positive"));
    }
    let prefix = |x: usize, rest: QSymElem| {
        rest.map_basis(|c| {
            let mut v = vec![x];
            v.extend_from_slice(c.parts());
            Composition::new(v).expect("positive")
        })
    };
    prefix(a[0], quasi_shuffle(&a[1..], b))
        + prefix(b[0], quasi_shuffle(a, &b[1..]))
        + prefix(a[0] + b[0], quasi_shuffle(&a[1..], &b[1..]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincomb::int;
    use crate::nsymfn::heisenberg_x;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn product_examples() {
        let want = LinComb::from_terms([(c(&[1, 1]), int(2)), (c(&[2]), int(1))]);
        assert_eq!(product_m(&m(&[1]), &m(&[1])), want);
        let f = m(&[2, 1]);
        assert_eq!(product_m(&m_unit(), &f), f);
        for a in Composition::all_up_to(3) {
            for b in Composition::all_up_to(3) {
                assert_eq!(
                    product_basis(&a, &b),
                    quasi_shuffle(a.parts(), b.parts()),
                    "{a} {b}"
                );
            }
        }
    }

    #[test]
    fn heisenberg_coproduct_examples() {
        let e = Composition::empty();
        let want = Tensor::from_basis_iter([
            (c(&[1]), e.clone()),
            (e.clone(), c(&[1])),
            (c(&[1]), c(&[1])),
        ]);
        assert_eq!(heisenberg_coproduct(&m(&[1])), want);
        assert_eq!(heisenberg_coproduct(&m_unit()), Tensor::pure(e.clone(), e));
    }

    #[test]
    fn heisenberg_coproduct_is_dual() {
        for g in Composition::all_up_to(4) {
            let d = heisenberg_coproduct(&LinComb::basis(g.clone()));
            for a in Composition::all_up_to(4) {
                for b in Composition::all_up_to(4) {
                    let prod = heisenberg_x(&LinComb::basis(a.clone()), &LinComb::basis(b.clone()));
                    assert_eq!(d.coeff(&(a.clone(), b.clone())), prod.coeff(&g), "{g} {a} {b}");
                }
            }
        }
    }

    #[test]
    fn external_coproduct_example() {
        let e = Composition::empty();
        let want = Tensor::from_basis_iter([
            (e.clone(), c(&[2, 1])),
            (c(&[2]), c(&[1])),
            (c(&[2, 1]), e),
        ]);
        assert_eq!(external_coproduct(&m(&[2, 1])), want);
    }

    #[test]
    fn antipode_single_part() {
        // S(M_1) = -M_1 + M_1^2 - M_1^3 up to degree 3
        let m1 = m(&[1]);
        let sq = product_m(&m1, &m1);
        let cube = product_m(&sq, &m1);
        let want = (&(&sq - &m1) - &cube).truncate(3);
        assert_eq!(antipode_heisenberg_qsym(&m1, 3), want);
    }

    #[test]
    fn dual_psi_examples() {
        for n in 1..=4 {
            let img = iso_dual_psi(&m(&[n]), 4);
            for k in 1..=4 {
                let expect = if k == n { int(1) } else { int(0) };
                assert_eq!(img.coeff(&c(&[k])), expect);
            }
        }
        let (num, sym) = iso_dual_psi_numeric(&m(&[1]), 3, &[int(1), int(1), int(1)]);
        assert_eq!(num, sym);
        assert_eq!(num.iter().cloned().sum::<Coeff>(), int(7));
    }
}
