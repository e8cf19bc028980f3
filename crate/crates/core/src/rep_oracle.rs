//! Explicit double-coset computations in `S_p × S_q`.
//!
//! The subgroup `H = S_p ×_n S_q` consists of the pairs `(σ × ρ, ρ × τ)`
//! with `σ ∈ S_{n-q}`, `ρ ∈ S_{p+q-n}` and `τ ∈ S_{n-p}`. The double cosets
//! `H \ (S_p × S_q) / (S_α × S_β)` are in bijection with margin matrices.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::combinat::{enumerate_margin_matrices, factorial, Composition, MarginMatrix, Permutation};
use crate::error::{Error, Result};

/// Largest `p + q` the oracle accepts.
pub const MAX_TOTAL: usize = 7;

pub type PairElem = (Permutation, Permutation);

fn mul(a: &PairElem, b: &PairElem) -> PairElem {
    (a.0.compose(&b.0), a.1.compose(&b.1))
}

fn inv(a: &PairElem) -> PairElem {
    (a.0.inverse(), a.1.inverse())
}

/// Block index of each point of `[1, weight]` under a composition.
fn blocks(a: &Composition) -> Vec<usize> {
    a.parts()
        .iter()
        .enumerate()
        .flat_map(|(j, &len)| std::iter::repeat_n(j, len))
        .collect()
}

/// The Young subgroup `S_α`, enumerated.
pub fn young_subgroup(a: &Composition) -> Vec<Permutation> {
    let b = blocks(a);
    Permutation::all_of(a.weight())
        .into_iter()
        .filter(|s| (1..=s.degree()).all(|i| b[s.apply(i) - 1] == b[i - 1]))
        .collect()
}

/// The subgroup `S_p ×_n S_q` of `S_p × S_q`.
pub fn overlap_subgroup(p: usize, q: usize, n: usize) -> Vec<PairElem> {
    let (left, mid, right) = (n - q, p + q - n, n - p);
    let mut out = Vec::new();
    for s in Permutation::all_of(left) {
        for r in Permutation::all_of(mid) {
            for t in Permutation::all_of(right) {
                out.push((s.times(&r), r.times(&t)));
            }
        }
    }
    out
}

fn check_sizes(alpha: &Composition, beta: &Composition, n: usize) -> Result<()> {
    let (p, q) = (alpha.weight(), beta.weight());
    if p + q > MAX_TOTAL {
        return Err(Error::SizeGuard(format!(
            "double cosets need p + q <= {MAX_TOTAL}, got {}",
            p + q
        )));
    }
    if n < p.max(q) || n > p + q {
        return Err(Error::EmptyDomain {
            n,
            lo: p.max(q),
            hi: p + q,
        });
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct DoubleCoset {
    pub representative: PairElem,
    pub elements: Vec<PairElem>,
    pub matrix: MarginMatrix,
}

fn all_pairs(p: usize, q: usize) -> Vec<PairElem> {
    let ps = Permutation::all_of(p);
    let qs = Permutation::all_of(q);
    ps.iter()
        .flat_map(|s| qs.iter().map(move |t| (s.clone(), t.clone())))
        .collect()
}

/// All double cosets `H υ K`, found by sweeping the whole group.
pub fn double_cosets(alpha: &Composition, beta: &Composition, n: usize) -> Result<Vec<DoubleCoset>> {
    check_sizes(alpha, beta, n)?;
    let (p, q) = (alpha.weight(), beta.weight());
    let h = overlap_subgroup(p, q, n);
    let ka = young_subgroup(alpha);
    let kb = young_subgroup(beta);
    let k: Vec<PairElem> = ka
        .iter()
        .flat_map(|a| kb.iter().map(move |b| (a.clone(), b.clone())))
        .collect();
    let mut seen: HashSet<PairElem> = HashSet::new();
    let mut out = Vec::new();
    for g in all_pairs(p, q) {
        if seen.contains(&g) {
            continue;
        }
        let mut orbit: Vec<PairElem> = Vec::new();
        for x in &h {
            let xg = mul(x, &g);
            for y in &k {
                let e = mul(&xg, y);
                if seen.insert(e.clone()) {
                    orbit.push(e);
                }
            }
        }
        orbit.sort();
        let matrix = coset_matrix(&g, alpha, beta, n);
        out.push(DoubleCoset {
            representative: g,
            elements: orbit,
            matrix,
        });
    }
    Ok(out)
}

/// The margin matrix attached to `υ = (σ, τ)`.
///
/// Row 0 counts how much of `σ(E_j)` falls in `[1, n-q]`, column 0 how much
/// of `τ(F_i)` falls in `[p+q-n+1, q]`, and the interior counts points of
/// the overlap `[n-q+1, p] ≅ [1, p+q-n]` shared by `σ(E_j)` and `τ(F_i)`.
pub fn coset_matrix(rep: &PairElem, alpha: &Composition, beta: &Composition, n: usize) -> MarginMatrix {
    let (p, q) = (alpha.weight(), beta.weight());
    let (s, t) = rep;
    let shift = n - q;
    let overlap = p + q - n;
    let ba = blocks(alpha);
    let bb = blocks(beta);
    // which block of α (resp. β) each image point comes from
    let mut from_a = vec![0usize; p + 1];
    for i in 1..=p {
        from_a[s.apply(i)] = ba[i - 1];
    }
    let mut from_b = vec![0usize; q + 1];
    for i in 1..=q {
        from_b[t.apply(i)] = bb[i - 1];
    }
    let mut rows = vec![vec![0usize; alpha.len() + 1]; beta.len() + 1];
    for k in 1..=shift {
        rows[0][from_a[k] + 1] += 1;
    }
    for k in overlap + 1..=q {
        rows[from_b[k] + 1][0] += 1;
    }
    for k in shift + 1..=p {
        rows[from_b[k - shift] + 1][from_a[k] + 1] += 1;
    }
    MarginMatrix::from_rows(rows).expect("corner is never filled")
}

/// `|H ∩ υ K υ⁻¹|`, by testing each element of `H`.
pub fn stabilizer_order(rep: &PairElem, alpha: &Composition, beta: &Composition, n: usize) -> usize {
    let (p, q) = (alpha.weight(), beta.weight());
    let ba = blocks(alpha);
    let bb = blocks(beta);
    let in_young = |s: &Permutation, b: &[usize]| (1..=s.degree()).all(|i| b[s.apply(i) - 1] == b[i - 1]);
    let r_inv = inv(rep);
    overlap_subgroup(p, q, n)
        .iter()
        .filter(|h| {
            let c = mul(&mul(&r_inv, h), rep);
            in_young(&c.0, &ba) && in_young(&c.1, &bb)
        })
        .count()
}

/// `∏ m_ij!` over the entries of a matrix.
pub fn entry_factorial_product(m: &MarginMatrix) -> BigInt {
    m.rows().iter().flatten().map(|&v| factorial(v)).product()
}

/// Compares `[S_n : S_p ×_n S_q] (p!/∏a_i!) (q!/∏b_j!)` with `Σ_M n!/∏ m_ij!`.
pub fn dimension_identity(alpha: &Composition, beta: &Composition, n: usize) -> Result<bool> {
    let (p, q) = (alpha.weight(), beta.weight());
    if n < p.max(q) || n > p + q {
        return Err(Error::EmptyDomain {
            n,
            lo: p.max(q),
            hi: p + q,
        });
    }
    let parts_fact = |a: &Composition| a.parts().iter().map(|&x| factorial(x)).product::<BigInt>();
    let index = factorial(n) / (factorial(n - q) * factorial(p + q - n) * factorial(n - p));
    let lhs = index * (factorial(p) / parts_fact(alpha)) * (factorial(q) / parts_fact(beta));
    let mut rhs = BigInt::zero();
    for m in enumerate_margin_matrices(alpha, beta, n)? {
        rhs += factorial(n) / entry_factorial_product(&m);
    }
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, Default)]
pub struct OracleReport {
    pub cases: usize,
    pub failures: Vec<String>,
}

/// Runs every check over all `α ⊨ p`, `β ⊨ q` with `p, q ≤ max` and every valid `n`.
pub fn run_exhaustive(max: usize) -> Result<OracleReport> {
    let mut report = OracleReport::default();
    for p in 0..=max {
        for q in 0..=max {
            for alpha in Composition::all_of(p) {
                for beta in Composition::all_of(q) {
                    for n in p.max(q)..=p + q {
                        report.cases += 1;
                        let tag = format!("alpha={alpha} beta={beta} n={n}");
                        let cosets = double_cosets(&alpha, &beta, n)?;
                        let mut matrices: Vec<MarginMatrix> =
                            cosets.iter().map(|c| c.matrix.clone()).collect();
                        matrices.sort();
                        let expected = enumerate_margin_matrices(&alpha, &beta, n)?;
                        if matrices != expected {
                            report.failures.push(format!("{tag}: coset matrices differ from M^n"));
                        }
                        for c in &cosets {
                            if c.elements.iter().any(|e| coset_matrix(e, &alpha, &beta, n) != c.matrix) {
                                report.failures.push(format!("{tag}: matrix not constant on a coset"));
                            }
                            let order = BigInt::from(stabilizer_order(&c.representative, &alpha, &beta, n));
                            if order != entry_factorial_product(&c.matrix) {
                                report.failures.push(format!("{tag}: stabilizer order {order}"));
                            }
                        }
                        if !dimension_identity(&alpha, &beta, n)? {
                            report.failures.push(format!("{tag}: dimension identity"));
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
