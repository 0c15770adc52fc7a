//! Morphisms to `K[X]` and **QSym**: the polynomial invariants `Φ_λ` and
//! `Ψ_μ`, the chromatic polynomial with its deletion–contraction oracle, the
//! infinitesimal character `φ`, the homogeneous morphism to quasisymmetric
//! functions, and the failure witness for a homogeneous morphism on graphs.

use std::cell::RefCell;
use std::collections::HashMap;

use crate::carrier::{iterated_reduced, Carrier, GraphAlgebra};
use crate::engine::{internal_counit_form, log_form, Form};
use crate::graph::GraphBasis;
use crate::linear::{Elem, Lin, Tensor2};
use crate::poly::{hilbert, Poly};
use crate::scalar::{factorial, Scalar};
use crate::word::{Word, WordElem};

/// `λ^{⊗k} ∘ Δ̃^{(k-1)}(b)` with the `k = 0` convention `ε_Δ(b)`.
fn tensor_power_apply<C: Carrier>(c: &C, lam: &Form<C>, b: &C::Basis, k: usize) -> Scalar
where
    C: 'static,
    C::Basis: 'static,
{
    if k == 0 {
        return c.counit(b);
    }
    iterated_reduced(c, b, k)
        .iter()
        .map(|(legs, s)| {
            let mut acc = s.clone();
            for leg in legs {
                acc *= &lam.eval(leg);
            }
            acc
        })
        .sum()
}

/// `Φ_λ(x) = Σ_k λ^{⊗k}∘Δ̃^{(k−1)}(x)·H_k(X)` for a form with `λ(1) = 1`:
/// the unique coalgebra morphism to `K[X]` lifting `λ`, an algebra morphism
/// when `λ` is a character.
pub fn phi_lambda<C: Carrier + Copy + 'static>(c: C, lam: &Form<C>, x: &Elem<C::Basis>) -> Poly {
    assert!(lam.eval(&c.unit()).is_one(), "Φ_λ requires λ(1) = 1");
    let mut out = Poly::zero();
    for (b, coeff) in x.iter() {
        for k in 0..=c.grade(b) {
            let a = tensor_power_apply(&c, lam, b, k);
            if !a.is_zero() {
                out = &out + &hilbert(k).scale(&(coeff * a));
            }
        }
    }
    out
}

/// `Ψ_μ(x) = Σ_k μ^{⊗k}∘Δ̃^{(k−1)}(x)·X^k/k!` for `μ(1) = 0`; equals
/// `Φ_{exp(μ)}` and has linear coefficient `μ(x)`.
pub fn psi_mu<C: Carrier + Copy + 'static>(c: C, mu: &Form<C>, x: &Elem<C::Basis>) -> Poly {
    assert!(mu.eval(&c.unit()).is_zero(), "Ψ_μ requires μ(1) = 0");
    let mut out = Poly::zero();
    for (b, coeff) in x.iter() {
        for k in 0..=c.grade(b) {
            let a = tensor_power_apply(&c, mu, b, k);
            if !a.is_zero() {
                let scale = coeff * a * Scalar::from_bigint(factorial(k)).recip();
                out = &out + &Poly::monomial(k, scale);
            }
        }
    }
    out
}

/// The unique double-bialgebra morphism to `K[X]`: `Φ = Φ_{ε_δ}`. On graphs
/// this is the chromatic polynomial; on words it sends a length-`n` word to
/// the Hilbert polynomial `H_n`.
pub fn unique_phi<C: Carrier + Copy + 'static>(c: C, x: &Elem<C::Basis>) -> Poly {
    phi_lambda(c, &internal_counit_form(c), x)
}

thread_local! {
    static CHROMATIC_MEMO: RefCell<HashMap<GraphBasis, Poly>> = RefCell::new(HashMap::new());
}

/// The chromatic polynomial by deletion–contraction,
/// `P(G) = P(G∖e) − P(G/e)`, an oracle independent of the Hopf route.
/// Always recurses on the lexicographically smallest edge of the canonical
/// labeling; memoized on canonical forms.
pub fn chromatic_dc(g: &GraphBasis) -> Poly {
    if let Some(hit) = CHROMATIC_MEMO.with(|m| m.borrow().get(g).cloned()) {
        return hit;
    }
    let result = match g.edges().first().copied() {
        None => Poly::monomial(g.vertex_count(), Scalar::one()),
        Some((u, v)) => {
            let deleted = chromatic_dc(&g.delete_edge(u, v).expect("edge exists"));
            let contracted = chromatic_dc(&g.contract_edge(u, v).expect("edge exists"));
            &deleted - &contracted
        }
    };
    CHROMATIC_MEMO.with(|m| m.borrow_mut().insert(g.clone(), result.clone()));
    result
}

/// The infinitesimal character `φ(x) = Φ(x)'(0)`: the coefficient of `X`
/// in the unique polynomial morphism. Equals `ln(ε_δ)`.
pub fn phi_inf<C: Carrier + Copy + 'static>(c: C, x: &Elem<C::Basis>) -> Scalar {
    unique_phi(c, x).coeff(1)
}

/// `φ` as a `Form`, via the logarithm route.
pub fn phi_inf_form<C: Carrier + Copy + 'static>(c: C) -> Form<C> {
    log_form(c, &internal_counit_form(c))
}

/// The bijection `Char(B) → Hom_b(B, K[X])`: a character `λ` maps to the
/// morphism `Φ ↜ λ : x ↦ Σ_{δ(x)} Φ(x^{(1)})·λ(x^{(2)})`.
pub fn char_to_polymorphism<C: Carrier + Copy + 'static>(
    c: C,
    lam: &Form<C>,
) -> impl Fn(&Elem<C::Basis>) -> Poly {
    let lam = lam.clone();
    move |x: &Elem<C::Basis>| {
        let mut out = Poly::zero();
        for (b, coeff) in x.iter() {
            for ((left, right), s) in c.internal_coproduct(b).iter() {
                let weight = coeff * s * lam.eval(right);
                if !weight.is_zero() {
                    out = &out + &unique_phi(c, &Lin::basis(left.clone())).scale(&weight);
                }
            }
        }
        out
    }
}

/// The inverse direction: a bialgebra morphism to `K[X]` maps back to the
/// character `ε_δ ∘ Ψ : x ↦ Ψ(x)(1)`.
pub fn polymorphism_to_char<C: Carrier + Copy + 'static>(
    _c: C,
    psi: impl Fn(&Elem<C::Basis>) -> Poly + 'static,
) -> Form<C> {
    Form::new(move |b: &C::Basis| psi(&Lin::basis(b.clone())).eval_int(1))
}

/// Coaction of a polynomial-valued map by a character:
/// `(Ψ ↜ λ)(x) = Σ_{δ(x)} Ψ(x^{(1)})·λ(x^{(2)})`.
pub fn coaction_polymorphism<C: Carrier + Copy + 'static>(
    c: C,
    psi: impl Fn(&C::Basis) -> Poly + 'static,
    lam: &Form<C>,
) -> impl Fn(&Elem<C::Basis>) -> Poly {
    let lam = lam.clone();
    move |x: &Elem<C::Basis>| {
        let mut out = Poly::zero();
        for (b, coeff) in x.iter() {
            for ((left, right), s) in c.internal_coproduct(b).iter() {
                let weight = coeff * s * lam.eval(right);
                if !weight.is_zero() {
                    out = &out + &psi(left).scale(&weight);
                }
            }
        }
        out
    }
}

/// The homogeneous morphism to **QSym** attached to a character `λ`:
/// the coefficient of the composition `(k_1,…,k_n)` is the sum over
/// `Δ̃^{(n-1)}` terms with leg grades `(k_1,…,k_n)` of the product of `λ`
/// on the legs. For `λ = ε_δ` on graphs this is the chromatic symmetric
/// function in the monomial basis.
pub fn to_qsym<C: Carrier + Copy + 'static>(c: C, lam: &Form<C>, x: &Elem<C::Basis>) -> WordElem {
    let mut out = WordElem::zero();
    for (b, coeff) in x.iter() {
        if c.grade(b) == 0 {
            out.add_term(Word::empty(), coeff * c.counit(b));
            continue;
        }
        for k in 1..=c.grade(b) {
            for (legs, s) in iterated_reduced(&c, b, k).iter() {
                let mut weight = coeff * s;
                for leg in legs {
                    weight *= &lam.eval(leg);
                }
                if !weight.is_zero() {
                    let comp = Word::new(legs.iter().map(|l| c.grade(l) as u32).collect());
                    out.add_term(comp, weight);
                }
            }
        }
    }
    out
}

/// `Φ_QSym`: sends each composition of length `n` to `H_n(X)`, linearly.
pub fn qsym_to_poly(x: &WordElem) -> Poly {
    let mut out = Poly::zero();
    for (w, coeff) in x.iter() {
        out = &out + &hilbert(w.len()).scale(coeff);
    }
    out
}

/// The two sides of the homogeneous-morphism compatibility test on `K2`:
/// `δ_QSym ∘ Φ(K2)` versus `(Φ⊗Φ) ∘ δ(K2)`. Their difference is nonzero —
/// no homogeneous double-bialgebra morphism from graphs to **QSym** exists.
pub struct QsymWitness {
    /// `δ_QSym ∘ Φ(K2)`.
    pub via_qsym: Tensor2<Word>,
    /// `(Φ ⊗ Φ) ∘ δ(K2)`.
    pub via_graphs: Tensor2<Word>,
    pub difference: Tensor2<Word>,
}

pub fn hypothesis3_witness() -> QsymWitness {
    let c = GraphAlgebra;
    let eps = internal_counit_form(c);
    let k2 = crate::graph::k2();

    let phi_k2 = to_qsym(c, &eps, &Lin::basis(k2.clone()));
    let mut via_qsym = Tensor2::zero();
    for (w, coeff) in phi_k2.iter() {
        for (pair, s) in crate::word::internal_delta(crate::word::Semigroup::Positive, w).iter()
        {
            via_qsym.add_term(pair.clone(), coeff * s);
        }
    }

    let mut via_graphs = Tensor2::zero();
    for ((left, right), s) in c.internal_coproduct(&k2).iter() {
        let lq = to_qsym(c, &eps, &Lin::basis(left.clone()));
        let rq = to_qsym(c, &eps, &Lin::basis(right.clone()));
        for (lw, lc) in lq.iter() {
            for (rw, rc) in rq.iter() {
                via_graphs.add_term((lw.clone(), rw.clone()), s * lc * rc);
            }
        }
    }

    let difference = via_qsym.sub(&via_graphs);
    QsymWitness { via_qsym, via_graphs, difference }
}
