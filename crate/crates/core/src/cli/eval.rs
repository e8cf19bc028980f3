//! Typed evaluation of expressions and the result document.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;
use serde_json::{json, Value as Json};

use crate::cli::parse::{format_coeff, Atom, BinOp, Expr, Func};
use crate::combinat::{Composition, Partition, Permutation};
use crate::lincomb::{Coeff, Graded, LinComb, Tensor};
use crate::nsymfn::{self, NSymElem, NSymTensor};
use crate::permalg::{self, PermElem, PermTensor};
use crate::qsymfn::{self, QSymElem, QSymTensor};
use crate::symfn::{self, SymBasis, SymElem, SymTensor};

/// Largest permutation degree accepted in an atom without `--force`.
pub const MAX_PERM_ATOM: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Scalar(Coeff),
    Sym(SymElem),
    NSym(NSymElem),
    QSym(QSymElem),
    Perm(PermElem),
    SymT(SymTensor),
    NSymT(NSymTensor),
    QSymT(QSymTensor),
    PermT(PermTensor),
}

impl Value {
    pub fn space(&self) -> &'static str {
        match self {
            Value::Scalar(_) => "scalar",
            Value::Sym(f) => f.basis.name(),
            Value::NSym(_) => "X",
            Value::QSym(_) => "M",
            Value::Perm(_) => "perm",
            Value::SymT(t) => match t.basis {
                SymBasis::H => "h⊗h",
                SymBasis::P => "p⊗p",
            },
            Value::NSymT(_) => "X⊗X",
            Value::QSymT(_) => "M⊗M",
            Value::PermT(_) => "perm⊗perm",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EvalError {
    /// An operator applied to operands from two different spaces.
    Mismatch {
        op: &'static str,
        left: &'static str,
        right: &'static str,
    },
    /// An operation with no meaning on the given space.
    Unsupported { op: &'static str, space: &'static str },
    MissingTruncation(&'static str),
    SizeGuard(String),
    Library(String),
}

impl fmt::Display for EvalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EvalError::Mismatch { op, left, right } => {
                write!(f, "type error: `{op}` cannot combine {left} with {right}")
            }
            EvalError::Unsupported { op, space } => {
                write!(f, "type error: `{op}` is not defined on {space}")
            }
            EvalError::MissingTruncation(what) => {
                write!(f, "{what} needs a truncation degree: pass it as a second argument or use --truncate")
            }
            EvalError::SizeGuard(m) => write!(f, "size guard: {m} (use --force to override)"),
            EvalError::Library(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for EvalError {}

impl From<crate::Error> for EvalError {
    fn from(e: crate::Error) -> Self {
        EvalError::Library(e.to_string())
    }
}

pub type EvalResult<T> = std::result::Result<T, EvalError>;

#[derive(Clone, Debug, Default)]
pub struct EvalOptions {
    /// Default truncation for completion-valued functions; also caps the
    /// degree of the final result.
    pub truncate: Option<usize>,
    pub force: bool,
}

fn part_comp(v: &[usize]) -> Composition {
    Composition::new(v.to_vec()).expect("parser rejects zero parts")
}

fn atom_value(a: &Atom) -> Value {
    match a {
        Atom::H(v) => Value::Sym(SymElem::h(v)),
        Atom::P(v) => Value::Sym(SymElem::p(v)),
        Atom::X(v) => Value::NSym(LinComb::basis(part_comp(v))),
        Atom::M(v) => Value::QSym(LinComb::basis(part_comp(v))),
        Atom::Perm(v) => Value::Perm(LinComb::basis(
            Permutation::new(v.clone()).expect("parser validates permutations"),
        )),
    }
}

/// Refuses permutation atoms above [`MAX_PERM_ATOM`].
pub fn check_size(e: &Expr) -> EvalResult<()> {
    match e {
        Expr::Atom(Atom::Perm(v)) if v.len() > MAX_PERM_ATOM => Err(EvalError::SizeGuard(format!(
            "permutation atom of degree {} exceeds {MAX_PERM_ATOM}",
            v.len()
        ))),
        Expr::Neg(a) | Expr::Call(_, a, _) => check_size(a),
        Expr::Bin(_, l, r) => {
            check_size(l)?;
            check_size(r)
        }
        _ => Ok(()),
    }
}

/// Evaluates an expression under the given options.
pub fn evaluate(e: &Expr, opts: &EvalOptions) -> EvalResult<Value> {
    if !opts.force {
        check_size(e)?;
    }
    let v = eval_expr(e, opts)?;
    Ok(match opts.truncate {
        Some(n) => truncate_value(&v, n),
        None => v,
    })
}

fn eval_expr(e: &Expr, opts: &EvalOptions) -> EvalResult<Value> {
    match e {
        Expr::Num(c) => Ok(Value::Scalar(c.clone())),
        Expr::Atom(a) => Ok(atom_value(a)),
        Expr::Neg(a) => Ok(scale(&eval_expr(a, opts)?, &-Coeff::one())),
        Expr::Bin(op, l, r) => binary(*op, eval_expr(l, opts)?, eval_expr(r, opts)?),
        Expr::Call(f, a, n) => call(*f, eval_expr(a, opts)?, n.or(opts.truncate)),
    }
}

pub fn scale(v: &Value, c: &Coeff) -> Value {
    match v {
        Value::Scalar(a) => Value::Scalar(a * c),
        Value::Sym(f) => Value::Sym(f.scale(c)),
        Value::NSym(f) => Value::NSym(f.scale(c)),
        Value::QSym(f) => Value::QSym(f.scale(c)),
        Value::Perm(f) => Value::Perm(f.scale(c)),
        Value::SymT(t) => Value::SymT(SymTensor {
            basis: t.basis,
            terms: t.terms.scale(c),
        }),
        Value::NSymT(t) => Value::NSymT(t.scale(c)),
        Value::QSymT(t) => Value::QSymT(t.scale(c)),
        Value::PermT(t) => Value::PermT(t.scale(c)),
    }
}

/// `c` times the unit of the space of `like`.
fn promote(c: &Coeff, like: &Value) -> Value {
    let ec = Composition::empty;
    match like {
        Value::Scalar(_) => Value::Scalar(c.clone()),
        Value::Sym(f) => Value::Sym(SymElem::one(f.basis).scale(c)),
        Value::NSym(_) => Value::NSym(LinComb::term(ec(), c.clone())),
        Value::QSym(_) => Value::QSym(LinComb::term(ec(), c.clone())),
        Value::Perm(_) => Value::Perm(LinComb::term(Permutation::identity(0), c.clone())),
        Value::SymT(t) => Value::SymT(SymTensor {
            basis: t.basis,
            terms: Tensor::term((Partition::empty(), Partition::empty()), c.clone()),
        }),
        Value::NSymT(_) => Value::NSymT(Tensor::term((ec(), ec()), c.clone())),
        Value::QSymT(_) => Value::QSymT(Tensor::term((ec(), ec()), c.clone())),
        Value::PermT(_) => {
            let e = Permutation::identity(0);
            Value::PermT(Tensor::term((e.clone(), e), c.clone()))
        }
    }
}

fn additive(op: BinOp, l: Value, r: Value) -> EvalResult<Value> {
    let (l, r) = match (&l, &r) {
        (Value::Scalar(c), other) if !matches!(other, Value::Scalar(_)) => (promote(c, other), r),
        (other, Value::Scalar(c)) if !matches!(other, Value::Scalar(_)) => {
            let p = promote(c, other);
            (l, p)
        }
        _ => (l, r),
    };
    let r = if op == BinOp::Sub { scale(&r, &-Coeff::one()) } else { r };
    let mismatch = |l: &Value, r: &Value| EvalError::Mismatch {
        op: op.symbol(),
        left: l.space(),
        right: r.space(),
    };
    Ok(match (&l, &r) {
        (Value::Scalar(a), Value::Scalar(b)) => Value::Scalar(a + b),
        (Value::Sym(a), Value::Sym(b)) if a.basis == b.basis => Value::Sym(a.add(b)?),
        (Value::NSym(a), Value::NSym(b)) => Value::NSym(a + b),
        (Value::QSym(a), Value::QSym(b)) => Value::QSym(a + b),
        (Value::Perm(a), Value::Perm(b)) => Value::Perm(a + b),
        (Value::SymT(a), Value::SymT(b)) if a.basis == b.basis => Value::SymT(SymTensor {
            basis: a.basis,
            terms: &a.terms + &b.terms,
        }),
        (Value::NSymT(a), Value::NSymT(b)) => Value::NSymT(a + b),
        (Value::QSymT(a), Value::QSymT(b)) => Value::QSymT(a + b),
        (Value::PermT(a), Value::PermT(b)) => Value::PermT(a + b),
        _ => return Err(mismatch(&l, &r)),
    })
}

fn sym_tensor_mul(
    a: &SymTensor,
    b: &SymTensor,
    mut mul: impl FnMut(&SymElem, &SymElem) -> crate::Result<SymElem>,
) -> EvalResult<SymTensor> {
    let basis = a.basis;
    let mut err = None;
    let terms = a.terms.componentwise(&b.terms, |x, y| {
        let one = |p: &Partition| SymElem::new(basis, LinComb::basis(p.clone()));
        match mul(&one(x), &one(y)) {
            Ok(v) => v.terms,
            Err(e) => {
                err = Some(e);
                LinComb::zero()
            }
        }
    });
    match err {
        Some(e) => Err(e.into()),
        None => Ok(SymTensor { basis, terms }),
    }
}

fn binary(op: BinOp, l: Value, r: Value) -> EvalResult<Value> {
    if matches!(op, BinOp::Add | BinOp::Sub) {
        return additive(op, l, r);
    }
    match (&l, &r) {
        (Value::Scalar(a), Value::Scalar(b)) if op == BinOp::External => return Ok(Value::Scalar(a * b)),
        (Value::Scalar(c), other) | (other, Value::Scalar(c)) if op == BinOp::External => {
            return Ok(scale(other, c))
        }
        _ => {}
    }
    let sym = op.symbol();
    let unsupported = |v: &Value| EvalError::Unsupported { op: sym, space: v.space() };
    if l.space() != r.space() {
        return Err(EvalError::Mismatch {
            op: sym,
            left: l.space(),
            right: r.space(),
        });
    }
    Ok(match (op, &l, &r) {
        (BinOp::Heisenberg, Value::Sym(a), Value::Sym(b)) => Value::Sym(symfn::heisenberg(a, b)?),
        (BinOp::External, Value::Sym(a), Value::Sym(b)) => Value::Sym(symfn::external(a, b)?),
        (BinOp::Internal, Value::Sym(a), Value::Sym(b)) => Value::Sym(symfn::internal(a, b)?),
        (BinOp::Heisenberg, Value::NSym(a), Value::NSym(b)) => Value::NSym(nsymfn::heisenberg_x(a, b)),
        (BinOp::External, Value::NSym(a), Value::NSym(b)) => Value::NSym(nsymfn::external_x(a, b)),
        (BinOp::Internal, Value::NSym(a), Value::NSym(b)) => Value::NSym(nsymfn::internal_x(a, b)),
        (BinOp::External, Value::QSym(a), Value::QSym(b)) => Value::QSym(qsymfn::product_m(a, b)),
        (BinOp::Heisenberg, Value::Perm(a), Value::Perm(b)) => Value::Perm(permalg::heisenberg_perm(a, b)),
        (BinOp::External, Value::Perm(a), Value::Perm(b)) => Value::Perm(permalg::mr_product(a, b)),
        (BinOp::Internal, Value::Perm(a), Value::Perm(b)) => Value::Perm(permalg::compose(a, b)),
        (BinOp::Heisenberg, Value::SymT(a), Value::SymT(b)) => Value::SymT(symfn::tensor_heisenberg(a, b)?),
        (BinOp::External, Value::SymT(a), Value::SymT(b)) => Value::SymT(sym_tensor_mul(a, b, symfn::external)?),
        (BinOp::Internal, Value::SymT(a), Value::SymT(b)) => Value::SymT(sym_tensor_mul(a, b, symfn::internal)?),
        (BinOp::Heisenberg, Value::NSymT(a), Value::NSymT(b)) => {
            Value::NSymT(nsymfn::tensor_heisenberg_x(a, b))
        }
        (BinOp::External, Value::NSymT(a), Value::NSymT(b)) => {
            Value::NSymT(a.componentwise(b, |x, y| LinComb::basis(x.concat(y))))
        }
        (BinOp::Internal, Value::NSymT(a), Value::NSymT(b)) => Value::NSymT(a.componentwise(b, |x, y| {
            nsymfn::internal_x(&LinComb::basis(x.clone()), &LinComb::basis(y.clone()))
        })),
        (BinOp::External, Value::QSymT(a), Value::QSymT(b)) => Value::QSymT(qsymfn::tensor_product_m(a, b)),
        (BinOp::Heisenberg, Value::PermT(a), Value::PermT(b)) => {
            Value::PermT(permalg::tensor_product_with(a, b, permalg::heisenberg_perm_basis))
        }
        (BinOp::External, Value::PermT(a), Value::PermT(b)) => {
            Value::PermT(permalg::tensor_product_with(a, b, permalg::mr_basis_product))
        }
        (BinOp::Internal, Value::PermT(a), Value::PermT(b)) => {
            Value::PermT(permalg::tensor_product_with(a, b, permalg::compose_basis))
        }
        _ => return Err(unsupported(&l)),
    })
}

/// Antipode of (Λ, #, Δ) transported through the projection `X_α ↦ h_α`.
fn sym_antipode(f: &SymElem) -> SymElem {
    let h = f.in_basis(SymBasis::H);
    let lifted: NSymElem = h.terms.map_basis(Partition::as_composition);
    nsymfn::project_pi(&nsymfn::antipode_heisenberg_x(&lifted)).in_basis(f.basis)
}

fn call(f: Func, v: Value, n: Option<usize>) -> EvalResult<Value> {
    let name = f.name();
    let unsupported = |v: &Value| EvalError::Unsupported { op: name, space: v.space() };
    let need = |what: &'static str| n.ok_or(EvalError::MissingTruncation(what));
    Ok(match (f, &v) {
        (Func::Delta, Value::Sym(a)) => Value::SymT(symfn::coproduct(a)),
        (Func::Delta, Value::NSym(a)) => Value::NSymT(nsymfn::coproduct_x(a)),
        (Func::Delta, Value::Perm(a)) => Value::PermT(permalg::coproduct_perm(a)),
        (Func::Delta, Value::QSym(a)) => Value::QSymT(qsymfn::external_coproduct(a)),
        (Func::DeltaHeis, Value::QSym(a)) => Value::QSymT(qsymfn::heisenberg_coproduct(a)),
        (Func::DeltaInt, Value::QSym(a)) => Value::QSymT(qsymfn::internal_coproduct(a)),
        (Func::Antipode, Value::NSym(a)) => {
            let s = nsymfn::antipode_heisenberg_x(a);
            Value::NSym(match n {
                Some(n) => s.truncate(n),
                None => s,
            })
        }
        (Func::Antipode, Value::Sym(a)) => {
            let s = sym_antipode(a);
            Value::Sym(match n {
                Some(n) => s.truncate(n),
                None => s,
            })
        }
        (Func::Antipode, Value::QSym(a)) => {
            Value::QSym(qsymfn::antipode_heisenberg_qsym(a, need("antipode on M")?))
        }
        (Func::Pi, Value::NSym(a)) => Value::Sym(nsymfn::project_pi(a)),
        (Func::Pi, Value::NSymT(a)) => Value::SymT(SymTensor {
            basis: SymBasis::H,
            terms: nsymfn::project_pi_tensor(a),
        }),
        (Func::Psi, Value::NSym(a)) => Value::NSym(nsymfn::iso_psi(a)),
        (Func::Psi, Value::Sym(a)) => Value::Sym(symfn::iso_external_to_heisenberg(&a.in_basis(SymBasis::H))?),
        (Func::Psi, Value::QSym(a)) => Value::QSym(qsymfn::iso_dual_psi(a, need("psi on M")?)),
        (Func::PsiInv, Value::NSym(a)) => Value::NSym(nsymfn::iso_psi_inv(a)),
        (Func::PsiInv, Value::Sym(a)) => {
            Value::Sym(symfn::iso_heisenberg_to_external(&a.in_basis(SymBasis::H))?)
        }
        (Func::Phi, Value::NSym(a)) => Value::NSym(nsymfn::phi_truncated(a, need("phi")?)),
        (Func::Phi, Value::Sym(a)) => Value::Sym(symfn::iso_heisenberg_to_internal_truncated(
            &a.in_basis(SymBasis::H),
            need("phi")?,
        )?),
        (Func::ToP, Value::Sym(a)) => Value::Sym(a.in_basis(SymBasis::P)),
        (Func::ToH, Value::Sym(a)) => Value::Sym(a.in_basis(SymBasis::H)),
        (Func::Embed, Value::NSym(a)) => Value::Perm(permalg::embed_descents(a)),
        _ => return Err(unsupported(&v)),
    })
}

pub fn truncate_value(v: &Value, n: usize) -> Value {
    match v {
        Value::Scalar(_) => v.clone(),
        Value::Sym(f) => Value::Sym(f.truncate(n)),
        Value::NSym(f) => Value::NSym(f.truncate(n)),
        Value::QSym(f) => Value::QSym(f.truncate(n)),
        Value::Perm(f) => Value::Perm(f.truncate(n)),
        Value::SymT(t) => Value::SymT(SymTensor {
            basis: t.basis,
            terms: t.terms.filter(|(a, b)| a.degree() <= n && b.degree() <= n),
        }),
        Value::NSymT(t) => Value::NSymT(t.filter(|(a, b)| a.degree() <= n && b.degree() <= n)),
        Value::QSymT(t) => Value::QSymT(t.filter(|(a, b)| a.degree() <= n && b.degree() <= n)),
        Value::PermT(t) => Value::PermT(t.filter(|(a, b)| a.degree() <= n && b.degree() <= n)),
    }
}

// ---------------------------------------------------------------------------
// Result document

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TermDoc {
    pub index: Json,
    /// Exact coefficient as `"num/den"`.
    pub coeff: String,
    #[serde(skip)]
    pub display: String,
    #[serde(skip)]
    pub value: Coeff,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Meta {
    pub degrees: Vec<usize>,
    pub truncation: Option<usize>,
}

/// Canonical rendering of a value: terms graded then lexicographic.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ResultDoc {
    pub space: String,
    pub terms: Vec<TermDoc>,
    pub meta: Meta,
}

fn ratio_string(c: &Coeff) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

fn atom_text(prefix: &str, parts: &[usize]) -> String {
    let a = match prefix {
        "h" => Atom::H(parts.to_vec()),
        "p" => Atom::P(parts.to_vec()),
        "X" => Atom::X(parts.to_vec()),
        "M" => Atom::M(parts.to_vec()),
        _ => Atom::Perm(parts.to_vec()),
    };
    a.to_string()
}

fn docs_of<B: Ord + Clone + Graded>(
    lc: &LinComb<B>,
    parts: impl Fn(&B) -> Vec<usize>,
    prefix: &str,
) -> (Vec<TermDoc>, Vec<usize>) {
    let terms = lc
        .iter()
        .map(|(b, c)| {
            let v = parts(b);
            TermDoc {
                index: json!(v),
                coeff: ratio_string(c),
                display: atom_text(prefix, &v),
                value: c.clone(),
            }
        })
        .collect();
    (terms, lc.degrees())
}

fn tensor_docs<B: Ord + Clone + Graded>(
    t: &Tensor<B>,
    parts: impl Fn(&B) -> Vec<usize>,
    prefix: &str,
) -> (Vec<TermDoc>, Vec<usize>) {
    let terms = t
        .iter()
        .map(|((a, b), c)| {
            let (va, vb) = (parts(a), parts(b));
            TermDoc {
                index: json!([va.clone(), vb.clone()]),
                coeff: ratio_string(c),
                display: format!("{} ⊗ {}", atom_text(prefix, &va), atom_text(prefix, &vb)),
                value: c.clone(),
            }
        })
        .collect();
    (terms, t.degrees())
}

impl ResultDoc {
    pub fn from_value(v: &Value, truncation: Option<usize>) -> ResultDoc {
        let comp = |c: &Composition| c.parts().to_vec();
        let part = |p: &Partition| p.parts().to_vec();
        let perm = |s: &Permutation| s.image().to_vec();
        let (terms, degrees) = match v {
            Value::Scalar(c) => {
                let t = if c.is_zero() {
                    vec![]
                } else {
                    vec![TermDoc {
                        index: json!([]),
                        coeff: ratio_string(c),
                        display: String::new(),
                        value: c.clone(),
                    }]
                };
                (t, vec![0])
            }
            Value::Sym(f) => docs_of(&f.terms, part, f.basis.name()),
            Value::NSym(f) => docs_of(f, comp, "X"),
            Value::QSym(f) => docs_of(f, comp, "M"),
            Value::Perm(f) => docs_of(f, perm, "perm"),
            Value::SymT(t) => tensor_docs(&t.terms, part, t.basis.name()),
            Value::NSymT(t) => tensor_docs(t, comp, "X"),
            Value::QSymT(t) => tensor_docs(t, comp, "M"),
            Value::PermT(t) => tensor_docs(t, perm, "perm"),
        };
        ResultDoc {
            space: v.space().to_string(),
            terms,
            meta: Meta { degrees, truncation },
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("result documents serialize")
    }

    /// One term per line: signed coefficient, then the basis element.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0\n".to_string();
        }
        let mut out = String::new();
        for t in &self.terms {
            if t.display.is_empty() {
                out.push_str(&format_coeff(&t.value));
            } else {
                out.push_str(&format!("{} {}", format_coeff(&t.value), t.display));
            }
            out.push('\n');
        }
        out
    }

    /// The value as a single expression that parses back to itself, for
    /// spaces without tensor factors.
    pub fn to_expression(&self) -> Option<String> {
        if self.space.contains('⊗') {
            return None;
        }
        if self.terms.is_empty() {
            return Some("0".to_string());
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.value < Coeff::zero();
            let mag = if neg { -t.value.clone() } else { t.value.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if t.display.is_empty() {
                out.push_str(&format_coeff(&mag));
            } else if mag.is_one() {
                out.push_str(&t.display);
            } else {
                out.push_str(&format!("{} * {}", format_coeff(&mag), t.display));
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::parse::parse;

    fn run(s: &str) -> EvalResult<Value> {
        evaluate(&parse(s).unwrap(), &EvalOptions::default())
    }

    #[test]
    fn type_errors_name_both_spaces() {
        let e = run("h[2] * X[2]").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains(" h ") && msg.contains(" X"), "{msg}");
        assert!(run("h[1] + p[1]").is_err());
        assert!(run("M[1] # M[1]").is_err());
        assert!(run("pi(h[1])").is_err());
    }

    #[test]
    fn truncation_is_required() {
        assert_eq!(
            run("antipode(M[1])").unwrap_err(),
            EvalError::MissingTruncation("antipode on M")
        );
        let opts = EvalOptions {
            truncate: Some(3),
            force: false,
        };
        assert!(evaluate(&parse("antipode(M[1])").unwrap(), &opts).is_ok());
    }

    #[test]
    fn size_guard_on_permutations() {
        let big = "perm[9,8,7,6,5,4,3,2,1]";
        assert!(matches!(run(big), Err(EvalError::SizeGuard(_))));
        let opts = EvalOptions {
            truncate: None,
            force: true,
        };
        assert!(evaluate(&parse(big).unwrap(), &opts).is_ok());
    }

    #[test]
    fn scalars_promote_to_units() {
        assert_eq!(run("1 + h[1]").unwrap(), run("h[] + h[1]").unwrap());
        assert_eq!(run("2 * X[1] - X[1]").unwrap(), run("X[1]").unwrap());
    }

    #[test]
    fn expression_form_round_trips() {
        let v = run("X[3] # X[3] - 1/2 * X[1]").unwrap();
        let doc = ResultDoc::from_value(&v, None);
        let again = run(&doc.to_expression().unwrap()).unwrap();
        assert_eq!(again, v);
    }

    #[test]
    fn antipode_on_lambda_follows_projection() {
        // X_(1) has no middle coproduct terms, so S(h_1) = -h_1
        let v = run("antipode(h[1])").unwrap();
        assert_eq!(v, run("-h[1]").unwrap());
    }
}
