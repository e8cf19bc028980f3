//! Named verification suites. Each stops at its first counterexample.

use num_bigint::BigInt;
use num_traits::One;

use crate::combinat::{egf_heisenberg, Composition, Partition, Permutation};
use crate::lincomb::{ratio, Coeff, LinComb, Tensor};
use crate::nsymfn::{
    antipode_heisenberg_x, coproduct_x, external_x, heisenberg_x, internal_x, iso_psi, phi_truncated,
    project_pi, project_pi_tensor, tensor_heisenberg_x, x_unit, NSymElem,
};
use crate::permalg::{
    compose_basis, embed_descents, heisenberg_perm, heisenberg_perm_basis, mr_basis_product, PermElem,
};
use crate::qsymfn::{
    antipode_heisenberg_qsym, counit, evaluate_tensor, external_coproduct, heisenberg_coproduct,
    internal_coproduct, iso_dual_psi_numeric, pad, product_m, quasi_shuffle, OrderedAlphabet, QSymElem,
};
use crate::rep_oracle::run_exhaustive;
use crate::symfn::{
    coproduct, external, heisenberg, heisenberg_h, heisenberg_via_zelevinski, internal,
    iso_heisenberg_to_internal_truncated, tensor_heisenberg, SymBasis, SymElem, SymTensor,
};
use crate::tensor_oracle::{endo_compose, endo_convolution, endo_heisenberg, psi_action, verify_schur_weyl, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub bound: usize,
    pub checks: usize,
    pub counterexample: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn summary(&self) -> String {
        match &self.counterexample {
            None => format!("PASS {} (bound {}, {} checks)", self.name, self.bound, self.checks),
            Some(c) => format!(
                "FAIL {} (bound {}, after {} checks): {c}",
                self.name, self.bound, self.checks
            ),
        }
    }
}

/// Counts checks and keeps the first failure.
struct Run {
    checks: usize,
    failure: Option<String>,
}

impl Run {
    fn new() -> Self {
        Run {
            checks: 0,
            failure: None,
        }
    }

    /// Records one check; returns `false` once a failure is known.
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) -> bool {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
        self.failure.is_none()
    }
}

/// Suite names with their default bounds.
pub const SUITES: &[(&str, usize, &str)] = &[
    ("assoc-h", 8, "# is associative on h generators"),
    ("assoc-p", 8, "# is associative on p generators"),
    ("assoc-X", 8, "# is associative on X generators"),
    ("assoc-perm", 7, "# is associative on single permutations"),
    ("commutative", 7, "# is commutative on Λ"),
    ("interp", 6, "top and diagonal components give the external and internal products"),
    ("zelevinski", 7, "the Zelevinski identity agrees with the matrix formula"),
    ("basis-change", 7, "the p-basis formula agrees with the h-basis formula"),
    ("embed", 7, "the permutation formula restricts to the descent formula"),
    ("schurweyl", 3, "Ψ(σ) # Ψ(τ) on T(V) reads off σ # τ"),
    ("cosets", 3, "double cosets, stabilizers and dimensions"),
    ("hopf", 6, "Δ is a # morphism; ψ and π are Hopf morphisms"),
    ("antipode", 5, "antipode axioms on (Σ, #, Δ) and (QSym, ·, Δ_#)"),
    ("qsym-duality", 5, "QSym structures are transposes of Σ structures"),
    ("alphabets", 4, "QSym structures agree with alphabet evaluation"),
    ("counterexample", 9, "φ is not multiplicative on Σ̂ but its Λ̂ analogue is"),
    ("egf", 8, "EGF of e # e counts covering pairs"),
];

pub fn suite_names() -> Vec<&'static str> {
    SUITES.iter().map(|s| s.0).collect()
}

pub fn default_bound(name: &str) -> Option<usize> {
    SUITES.iter().find(|s| s.0 == name).map(|s| s.1)
}

/// Runs a suite; `None` for an unknown name.
pub fn run_suite(name: &str, bound: Option<usize>) -> Option<SuiteReport> {
    let n = bound.or_else(|| default_bound(name))?;
    let mut r = Run::new();
    match name {
        "assoc-h" => assoc_sym(&mut r, n, SymBasis::H),
        "assoc-p" => assoc_sym(&mut r, n, SymBasis::P),
        "assoc-X" => assoc_x(&mut r, n),
        "assoc-perm" => assoc_perm(&mut r, n),
        "commutative" => commutative(&mut r, n),
        "interp" => interpolation(&mut r, n),
        "zelevinski" => zelevinski(&mut r, n),
        "basis-change" => basis_change(&mut r, n),
        "embed" => embed(&mut r, n),
        "schurweyl" => schur_weyl(&mut r, n),
        "cosets" => cosets(&mut r, n),
        "hopf" => hopf(&mut r, n),
        "antipode" => antipode(&mut r, n),
        "qsym-duality" => qsym_duality(&mut r, n),
        "alphabets" => alphabets(&mut r, n),
        "counterexample" => counterexample(&mut r, n),
        "egf" => egf(&mut r, n),
        _ => return None,
    }
    Some(SuiteReport {
        name: name.to_string(),
        bound: n,
        checks: r.checks,
        counterexample: r.failure,
    })
}

fn generator(basis: SymBasis, a: usize) -> SymElem {
    match basis {
        SymBasis::H => SymElem::h(&[a]),
        SymBasis::P => SymElem::p(&[a]),
    }
}

/// Triples of positive integers with sum at most `n`.
fn triples(n: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in 1..=n.saturating_sub(a) {
            for c in 1..=n.saturating_sub(a + b) {
                out.push((a, b, c));
            }
        }
    }
    out
}

fn assoc_sym(r: &mut Run, n: usize, basis: SymBasis) {
    for (a, b, c) in triples(n) {
        let (f, g, k) = (generator(basis, a), generator(basis, b), generator(basis, c));
        let lhs = heisenberg(&heisenberg(&f, &g).unwrap(), &k).unwrap();
        let rhs = heisenberg(&f, &heisenberg(&g, &k).unwrap()).unwrap();
        let tag = basis.name();
        if !r.check(lhs == rhs, || format!("({tag}_{a} # {tag}_{b}) # {tag}_{c}")) {
            return;
        }
    }
}

fn assoc_x(r: &mut Run, n: usize) {
    let g = |a: usize| LinComb::basis(Composition::single(a));
    for (a, b, c) in triples(n) {
        let lhs = heisenberg_x(&heisenberg_x(&g(a), &g(b)), &g(c));
        let rhs = heisenberg_x(&g(a), &heisenberg_x(&g(b), &g(c)));
        if !r.check(lhs == rhs, || format!("(X_{a} # X_{b}) # X_{c}")) {
            return;
        }
    }
}

fn assoc_perm(r: &mut Run, n: usize) {
    for (p, q, s) in triples(n) {
        for a in Permutation::all_of(p) {
            for b in Permutation::all_of(q) {
                let ab = heisenberg_perm_basis(&a, &b);
                for c in Permutation::all_of(s) {
                    let lhs = heisenberg_perm(&ab, &LinComb::basis(c.clone()));
                    let rhs = heisenberg_perm(&LinComb::basis(a.clone()), &heisenberg_perm_basis(&b, &c));
                    if !r.check(lhs == rhs, || format!("({a} # {b}) # {c}")) {
                        return;
                    }
                }
            }
        }
    }
}

/// Pairs of partitions with total weight in `1..=n`.
fn partition_pairs(n: usize) -> Vec<(Partition, Partition)> {
    let all = Partition::all_up_to(n);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            let w = a.weight() + b.weight();
            if w >= 1 && w <= n {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn composition_pairs(n: usize) -> Vec<(Composition, Composition)> {
    let all = Composition::all_up_to(n);
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            let w = a.weight() + b.weight();
            if w >= 1 && w <= n {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn h_of(p: &Partition) -> SymElem {
    SymElem::h(p.parts())
}

fn commutative(r: &mut Run, n: usize) {
    for (a, b) in partition_pairs(n) {
        let ok = heisenberg_h(&h_of(&a), &h_of(&b)).unwrap() == heisenberg_h(&h_of(&b), &h_of(&a)).unwrap();
        if !r.check(ok, || format!("h_{a} # h_{b} != h_{b} # h_{a}")) {
            return;
        }
    }
}

fn interpolation(r: &mut Run, n: usize) {
    // Λ in the h basis
    for (a, b) in partition_pairs(n) {
        let (f, g) = (h_of(&a), h_of(&b));
        let prod = heisenberg_h(&f, &g).unwrap();
        let (p, q) = (a.weight(), b.weight());
        let top = external(&f, &g).unwrap();
        if !r.check(prod.component(p + q) == top, || format!("Λ top: h_{a} # h_{b}")) {
            return;
        }
        if p == q {
            let diag = internal(&f, &g).unwrap();
            if !r.check(prod.component(p) == diag, || format!("Λ diagonal: h_{a} # h_{b}")) {
                return;
            }
        }
    }
    // Σ
    for (a, b) in composition_pairs(n) {
        let (f, g): (NSymElem, NSymElem) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
        let prod = heisenberg_x(&f, &g);
        let (p, q) = (a.weight(), b.weight());
        if !r.check(prod.component(p + q) == external_x(&f, &g), || format!("Σ top: X_{a} # X_{b}")) {
            return;
        }
        if p == q && !r.check(prod.component(p) == internal_x(&f, &g), || format!("Σ diagonal: X_{a} # X_{b}")) {
            return;
        }
    }
    // S∞ and GradedEndo
    for p in 0..=n {
        for q in 0..=n - p {
            if p + q == 0 {
                continue;
            }
            for s in Permutation::all_of(p) {
                for t in Permutation::all_of(q) {
                    let prod = heisenberg_perm_basis(&s, &t);
                    let ok = prod.component(p + q) == mr_basis_product(&s, &t);
                    if !r.check(ok, || format!("S∞ top: {s} # {t}")) {
                        return;
                    }
                    if p == q && !r.check(prod.component(p) == compose_basis(&s, &t), || format!("S∞ diagonal: {s} # {t}")) {
                        return;
                    }
                    if !endo_interpolation(r, &s, &t) {
                        return;
                    }
                }
            }
        }
    }
}

fn endo_interpolation(r: &mut Run, s: &Permutation, t: &Permutation) -> bool {
    let (p, q) = (s.degree(), t.degree());
    let d = (p + q).max(1);
    let (f, g) = (psi_action(s, d), psi_action(t, d));
    let prod = endo_heisenberg(&f, &g).expect("same alphabet");
    // a distinct-letter word and one with a repeated letter
    let mut probes = vec![Word::distinct(p + q)];
    if p + q >= 2 {
        let mut letters: Vec<usize> = (1..=p + q).collect();
        letters[p + q - 1] = 1;
        probes.push(Word::new(letters, d).expect("letters in range"));
    }
    let conv = endo_convolution(&f, &g).expect("same alphabet");
    for w in &probes {
        if !r.check(prod.apply(w) == conv.apply(w), || format!("End top: Ψ({s}) # Ψ({t})")) {
            return false;
        }
    }
    if p == q {
        let comp = endo_compose(&g, &f).expect("same alphabet");
        let w = Word::distinct(p);
        if !r.check(prod.apply(&w) == comp.apply(&w), || format!("End diagonal: Ψ({s}) # Ψ({t})")) {
            return false;
        }
    }
    true
}

fn zelevinski(r: &mut Run, n: usize) {
    for (a, b) in partition_pairs(n) {
        let (f, g) = (h_of(&a), h_of(&b));
        let ok = heisenberg_via_zelevinski(&f, &g).unwrap() == heisenberg_h(&f, &g).unwrap();
        if !r.check(ok, || format!("Zelevinski vs matrices: h_{a} # h_{b}")) {
            return;
        }
    }
}

fn basis_change(r: &mut Run, n: usize) {
    for (a, b) in partition_pairs(n) {
        let (f, g) = (h_of(&a), h_of(&b));
        let via_h = heisenberg_h(&f, &g).unwrap().in_basis(SymBasis::P);
        let via_p = heisenberg(&f.in_basis(SymBasis::P), &g.in_basis(SymBasis::P)).unwrap();
        if !r.check(via_h == via_p, || format!("p-basis vs h-basis: h_{a} # h_{b}")) {
            return;
        }
    }
}

fn embed(r: &mut Run, n: usize) {
    for (a, b) in composition_pairs(n) {
        let (f, g): (NSymElem, NSymElem) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
        let lhs = embed_descents(&heisenberg_x(&f, &g));
        let rhs: PermElem = heisenberg_perm(&embed_descents(&f), &embed_descents(&g));
        if !r.check(lhs == rhs, || format!("embedding: X_{a} # X_{b}")) {
            return;
        }
    }
}

fn schur_weyl(r: &mut Run, n: usize) {
    let d = 2 * n;
    for p in 0..=n {
        for q in 0..=n {
            for s in Permutation::all_of(p) {
                for t in Permutation::all_of(q) {
                    for m in p.max(q)..=p + q {
                        if !r.check(verify_schur_weyl(&s, &t, m, d), || format!("{s} # {t} in degree {m}, d = {d}")) {
                            return;
                        }
                    }
                }
            }
        }
    }
}

fn cosets(r: &mut Run, n: usize) {
    match run_exhaustive(n) {
        Ok(rep) => {
            r.checks += rep.cases;
            if let Some(f) = rep.failures.first() {
                r.failure = Some(f.clone());
            }
        }
        Err(e) => r.failure = Some(e.to_string()),
    }
}

fn sym_tensor_pi(t: &Tensor<Composition>) -> SymTensor {
    SymTensor {
        basis: SymBasis::H,
        terms: project_pi_tensor(t),
    }
}

fn hopf(r: &mut Run, n: usize) {
    // Δ(f # g) = Δ(f) # Δ(g) on Σ
    for (a, b) in composition_pairs(n) {
        let (f, g): (NSymElem, NSymElem) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()));
        let lhs = coproduct_x(&heisenberg_x(&f, &g));
        let rhs = tensor_heisenberg_x(&coproduct_x(&f), &coproduct_x(&g));
        if !r.check(lhs == rhs, || format!("Σ: Δ(X_{a} # X_{b})")) {
            return;
        }
        // ψ turns ⋆ into #, π turns # into #
        let ok = iso_psi(&external_x(&f, &g)) == heisenberg_x(&iso_psi(&f), &iso_psi(&g));
        if !r.check(ok, || format!("ψ(X_{a} ⋆ X_{b})")) {
            return;
        }
        let ok = project_pi(&heisenberg_x(&f, &g)) == heisenberg_h(&project_pi(&f), &project_pi(&g)).unwrap();
        if !r.check(ok, || format!("π(X_{a} # X_{b})")) {
            return;
        }
    }
    // the same on Λ
    for (a, b) in partition_pairs(n) {
        let (f, g) = (h_of(&a), h_of(&b));
        let lhs = coproduct(&heisenberg_h(&f, &g).unwrap());
        let rhs = tensor_heisenberg(&coproduct(&f), &coproduct(&g)).unwrap();
        if !r.check(lhs == rhs, || format!("Λ: Δ(h_{a} # h_{b})")) {
            return;
        }
    }
    // ψ and π commute with Δ
    for a in Composition::all_up_to(n) {
        let f: NSymElem = LinComb::basis(a.clone());
        let lhs = coproduct_x(&iso_psi(&f));
        let psi_b = |x: &Composition| iso_psi(&LinComb::basis(x.clone()));
        let rhs = coproduct_x(&f).map_tensor(psi_b, psi_b);
        if !r.check(lhs == rhs, || format!("Δ ψ(X_{a})")) {
            return;
        }
        let lhs = coproduct(&project_pi(&f));
        let rhs = sym_tensor_pi(&coproduct_x(&f));
        if !r.check(lhs == rhs, || format!("Δ π(X_{a})")) {
            return;
        }
    }
}

fn antipode(r: &mut Run, n: usize) {
    // (Σ, #, Δ): both convolution identities
    for a in Composition::all_up_to(n) {
        let f: NSymElem = LinComb::basis(a.clone());
        let unit = if a.is_empty() { x_unit() } else { LinComb::zero() };
        let cop = coproduct_x(&f);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), c) in cop.iter() {
            let (bx, by) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
            left.add_scaled(&heisenberg_x(&antipode_heisenberg_x(&bx), &by), c);
            right.add_scaled(&heisenberg_x(&bx, &antipode_heisenberg_x(&by)), c);
        }
        if !r.check(left == unit, || format!("Σ left antipode on X_{a}")) {
            return;
        }
        if !r.check(right == unit, || format!("Σ right antipode on X_{a}")) {
            return;
        }
    }
    // (QSym, ·, Δ_#) up to degree n
    for g in Composition::all_up_to(n) {
        let f: QSymElem = LinComb::basis(g.clone());
        let unit = QSymElem::term(Composition::empty(), counit(&f));
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), c) in heisenberg_coproduct(&f).iter() {
            let (bx, by) = (LinComb::basis(x.clone()), LinComb::basis(y.clone()));
            // S_#(M_α) starts in degree |α|, so only bidegrees with
            // dx + dy <= n reach the compared range
            let (dx, dy) = (x.weight(), y.weight());
            if dx + dy > n {
                continue;
            }
            left.add_scaled(&product_m(&antipode_heisenberg_qsym(&bx, n - dy), &by), c);
            right.add_scaled(&product_m(&bx, &antipode_heisenberg_qsym(&by, n - dx)), c);
        }
        if !r.check(left.truncate(n) == unit, || format!("QSym left antipode on M_{g}")) {
            return;
        }
        if !r.check(right.truncate(n) == unit, || format!("QSym right antipode on M_{g}")) {
            return;
        }
    }
}

fn qsym_duality(r: &mut Run, n: usize) {
    let all = Composition::all_up_to(n);
    for g in &all {
        let mg: QSymElem = LinComb::basis(g.clone());
        let ext = external_coproduct(&mg);
        let int = internal_coproduct(&mg);
        let heis = heisenberg_coproduct(&mg);
        for a in &all {
            for b in &all {
                let xa: NSymElem = LinComb::basis(a.clone());
                let xb: NSymElem = LinComb::basis(b.clone());
                let key = (a.clone(), b.clone());
                if a.weight() + b.weight() == g.weight() {
                    // ⟨M_a · M_b, X_g⟩ = ⟨M_a ⊗ M_b, Δ X_g⟩
                    let lhs = product_m(&LinComb::basis(a.clone()), &LinComb::basis(b.clone())).coeff(g);
                    let rhs = coproduct_x(&LinComb::basis(g.clone())).coeff(&key);
                    if !r.check(lhs == rhs, || format!("product_m vs Δ at M_{a} · M_{b}, X_{g}")) {
                        return;
                    }
                    let ok = ext.coeff(&key) == external_x(&xa, &xb).coeff(g);
                    if !r.check(ok, || format!("Δ_⋆ vs ⋆ at M_{g}, X_{a} ⊗ X_{b}")) {
                        return;
                    }
                }
                if a.weight() == g.weight() && b.weight() == g.weight() {
                    let ok = int.coeff(&key) == internal_x(&xa, &xb).coeff(g);
                    if !r.check(ok, || format!("Δ_∘ vs ∗ at M_{g}, X_{a} ⊗ X_{b}")) {
                        return;
                    }
                }
                let ok = heis.coeff(&key) == heisenberg_x(&xa, &xb).coeff(g);
                if !r.check(ok, || format!("Δ_# vs # at M_{g}, X_{a} ⊗ X_{b}")) {
                    return;
                }
            }
        }
    }
    // the product agrees with the quasi-shuffle
    for a in &all {
        for b in &all {
            if a.weight() + b.weight() > n {
                continue;
            }
            let ok = product_m(&LinComb::basis(a.clone()), &LinComb::basis(b.clone()))
                == quasi_shuffle(a.parts(), b.parts());
            if !r.check(ok, || format!("product_m vs quasi-shuffle at M_{a} · M_{b}")) {
                return;
            }
        }
    }
}

/// Three fixed pairs of rational sample points for three-letter alphabets.
pub fn sample_points() -> Vec<(Vec<Coeff>, Vec<Coeff>)> {
    vec![
        (vec![ratio(1, 2), ratio(2, 3), ratio(-1, 1)], vec![ratio(3, 1), ratio(1, 5), ratio(2, 7)]),
        (vec![ratio(-2, 3), ratio(1, 1), ratio(5, 4)], vec![ratio(1, 3), ratio(-3, 2), ratio(1, 1)]),
        (vec![ratio(7, 2), ratio(-1, 6), ratio(2, 1)], vec![ratio(-4, 5), ratio(2, 3), ratio(9, 7)]),
    ]
}

fn alphabets(r: &mut Run, n: usize) {
    for (px, py) in sample_points() {
        let x = OrderedAlphabet::base(&px);
        let y = OrderedAlphabet::base(&py);
        let star = x.negate().star(Some(n)).expect("bounded");
        for g in Composition::all_up_to(n) {
            let f: QSymElem = LinComb::basis(g.clone());
            let ok = x.heisenberg_sum(&y).evaluate(&f) == evaluate_tensor(&heisenberg_coproduct(&f), &x, &y);
            if !r.check(ok, || format!("M_{g}(X+Y+XY)")) {
                return;
            }
            let ok = x.sum(&y).evaluate(&f) == evaluate_tensor(&external_coproduct(&f), &x, &y);
            if !r.check(ok, || format!("M_{g}(X+Y)")) {
                return;
            }
            let ok = x.product(&y).evaluate(&f) == evaluate_tensor(&internal_coproduct(&f), &x, &y);
            if !r.check(ok, || format!("M_{g}(X×Y)")) {
                return;
            }
            let (num, sym) = iso_dual_psi_numeric(&f, n, &px);
            if !r.check(num == sym, || format!("M_{g}(exp X)")) {
                return;
            }
            let num = pad(star.evaluate_graded(&f, Some(n)), n);
            let sym = pad(x.evaluate_graded(&antipode_heisenberg_qsym(&f, n), Some(n)), n);
            if !r.check(num == sym, || format!("M_{g}((-X)*)")) {
                return;
            }
        }
    }
}

/// Whether some composition in the support of `f` starts with `head`.
pub fn has_prefix(f: &NSymElem, head: &[usize]) -> bool {
    f.support().any(|a| a.parts().starts_with(head))
}

fn counterexample(r: &mut Run, n: usize) {
    let x3: NSymElem = LinComb::basis(Composition::single(3));
    let lhs = phi_truncated(&heisenberg_x(&x3, &x3), n);
    let rhs = internal_x(&phi_truncated(&x3, n), &phi_truncated(&x3, n));
    if !r.check(lhs != rhs, || format!("φ(X_3 # X_3) = φ(X_3) ∗ φ(X_3) at N = {n}")) {
        return;
    }
    if !r.check(has_prefix(&rhs, &[2, 1, 1]) && !has_prefix(&lhs, &[2, 1, 1]), || {
        "a term starting with 2,1,1 separates the two sides".to_string()
    }) {
        return;
    }
    let h3 = SymElem::h(&[3]);
    let lhs = iso_heisenberg_to_internal_truncated(&heisenberg_h(&h3, &h3).unwrap(), n).unwrap();
    let img = iso_heisenberg_to_internal_truncated(&h3, n).unwrap();
    let rhs = internal(&img, &img).unwrap().truncate(n);
    r.check(lhs == rhs, || format!("the Λ̂ map fails on h_3 # h_3 at N = {n}"));
}

fn egf(r: &mut Run, n: usize) {
    let ones = vec![Coeff::one(); n + 1];
    // a_n = b_n = 1 counts the species e; c_n counts (e # e)[n]
    let c = egf_heisenberg(&ones, &ones, n);
    for (m, cm) in c.iter().enumerate() {
        // pairs (S, T) of subsets of [m] with S ∪ T = [m]
        let full = (1usize << m) - 1;
        let mut count = 0u64;
        for s in 0..=full {
            for t in 0..=full {
                if s | t == full {
                    count += 1;
                }
            }
        }
        let ok = *cm == Coeff::from_integer(BigInt::from(count));
        if !r.check(ok, || format!("EGF coefficient {m}")) {
            return;
        }
    }
}
