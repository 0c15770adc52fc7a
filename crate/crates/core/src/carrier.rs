//! The `Carrier` trait: a double bialgebra presented by a countable basis,
//! with a product, two coproducts and their counits. Provides the three
//! instances (graphs, quasishuffle words, binomial polynomials), extensions
//! of the structure maps to linear combinations and tensors, and exhaustive
//! axiom checks on truncated bases.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use crate::graph::{self, GraphBasis};
use crate::linear::{Elem, Lin, Tensor2, Tensor3, TensorN};
use crate::scalar::{binomial, Scalar};
use crate::word::{self, Semigroup, Word};

/// A commutative double bialgebra with a distinguished basis.
///
/// `grade` is a filtration bound: the reduced coproduct applied `grade(b)`
/// times kills `b`, and grades are subadditive under the product. For graphs
/// it is the vertex count, for words the length, for `K[X]` the exponent.
pub trait Carrier {
    type Basis: Clone + Ord + Hash + Debug + Display;

    /// The basis element representing `1`.
    fn unit(&self) -> Self::Basis;
    fn grade(&self, b: &Self::Basis) -> usize;
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> Elem<Self::Basis>;
    /// The first (external) coproduct `Δ`.
    fn coproduct(&self, b: &Self::Basis) -> Tensor2<Self::Basis>;
    /// The second (internal) coproduct `δ`.
    fn internal_coproduct(&self, b: &Self::Basis) -> Tensor2<Self::Basis>;
    /// Counit `ε_Δ` of the first coproduct.
    fn counit(&self, b: &Self::Basis) -> Scalar;
    /// Counit `ε_δ` of the internal coproduct; a character of the product.
    fn internal_counit(&self, b: &Self::Basis) -> Scalar;
    /// All basis elements of grade at most `n`.
    fn basis_up_to(&self, n: usize) -> Vec<Self::Basis>;
}

// ---- structure maps extended to combinations and tensors ----

pub fn product_elem<C: Carrier>(
    c: &C,
    a: &Elem<C::Basis>,
    b: &Elem<C::Basis>,
) -> Elem<C::Basis> {
    let mut out = Lin::zero();
    for (x, s) in a.iter() {
        for (y, t) in b.iter() {
            for (z, u) in c.product(x, y).iter() {
                out.add_term(z.clone(), s * t * u);
            }
        }
    }
    out
}

pub fn coproduct_elem<C: Carrier>(c: &C, x: &Elem<C::Basis>) -> Tensor2<C::Basis> {
    x.map_linear(|b| c.coproduct(b))
}

pub fn internal_coproduct_elem<C: Carrier>(c: &C, x: &Elem<C::Basis>) -> Tensor2<C::Basis> {
    x.map_linear(|b| c.internal_coproduct(b))
}

pub fn counit_elem<C: Carrier>(c: &C, x: &Elem<C::Basis>) -> Scalar {
    x.pair(|b| c.counit(b))
}

pub fn internal_counit_elem<C: Carrier>(c: &C, x: &Elem<C::Basis>) -> Scalar {
    x.pair(|b| c.internal_counit(b))
}

/// Reduced coproduct `Δ̃(b) = Δ(b) − b⊗1 − 1⊗b + ε_Δ(b)·1⊗1`.
pub fn reduced_coproduct<C: Carrier>(c: &C, b: &C::Basis) -> Tensor2<C::Basis> {
    let one = c.unit();
    let mut out = c.coproduct(b);
    out.add_term((b.clone(), one.clone()), Scalar::from_int(-1));
    out.add_term((one.clone(), b.clone()), Scalar::from_int(-1));
    out.add_term((one.clone(), one), c.counit(b));
    out
}

/// Augmentation projection `b − ε_Δ(b)·1` as a one-leg tensor.
fn augmentation<C: Carrier>(c: &C, b: &C::Basis) -> TensorN<C::Basis> {
    let mut out = TensorN::zero();
    out.add_term(vec![b.clone()], Scalar::one());
    out.add_term(vec![c.unit()], -c.counit(b));
    out
}

/// Iterated reduced coproduct `Δ̃^{(k-1)}` with `k ≥ 1` output legs,
/// starting from the augmentation projection of `b`.
pub fn iterated_reduced<C: Carrier>(c: &C, b: &C::Basis, legs: usize) -> TensorN<C::Basis> {
    assert!(legs >= 1);
    let mut cur = augmentation(c, b);
    for _ in 1..legs {
        let mut next = TensorN::zero();
        for (t, s) in cur.iter() {
            // expand the last leg
            let (head, last) = t.split_at(t.len() - 1);
            for ((a, b2), u) in reduced_coproduct(c, &last[0]).iter() {
                let mut key = head.to_vec();
                key.push(a.clone());
                key.push(b2.clone());
                next.add_term(key, s * u);
            }
        }
        cur = next;
    }
    cur
}

/// Iterated product collapsing a tensor to an element.
pub fn product_tensor<C: Carrier>(c: &C, t: &TensorN<C::Basis>) -> Elem<C::Basis> {
    let mut out = Lin::zero();
    for (legs, s) in t.iter() {
        let mut acc = Lin::basis(c.unit());
        for leg in legs {
            acc = product_elem(c, &acc, &Lin::basis(leg.clone()));
        }
        for (k, u) in acc.iter() {
            out.add_term(k.clone(), s * u);
        }
    }
    out
}

// ---- the three carriers ----

/// The double bialgebra of graphs: disjoint union, the subset coproduct, and
/// the contraction-restriction coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct GraphAlgebra;

impl Carrier for GraphAlgebra {
    type Basis = GraphBasis;

    fn unit(&self) -> GraphBasis {
        GraphBasis::empty()
    }

    fn grade(&self, b: &GraphBasis) -> usize {
        b.vertex_count()
    }

    fn product(&self, a: &GraphBasis, b: &GraphBasis) -> Elem<GraphBasis> {
        Lin::basis(a.disjoint_union(b))
    }

    fn coproduct(&self, b: &GraphBasis) -> Tensor2<GraphBasis> {
        b.coproduct_subsets()
    }

    fn internal_coproduct(&self, b: &GraphBasis) -> Tensor2<GraphBasis> {
        b.coproduct_contraction()
    }

    fn counit(&self, b: &GraphBasis) -> Scalar {
        if b.is_empty_graph() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn internal_counit(&self, b: &GraphBasis) -> Scalar {
        if b.is_edgeless() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn basis_up_to(&self, n: usize) -> Vec<GraphBasis> {
        graph::isoclasses_up_to(n)
    }
}

/// The quasishuffle double bialgebra on words over a letter semigroup.
/// `max_letter` bounds the alphabet used for basis enumeration.
#[derive(Clone, Copy, Debug)]
pub struct WordAlgebra {
    pub semigroup: Semigroup,
    pub max_letter: u32,
}

impl WordAlgebra {
    /// Words over `(ℕ_{>0}, +)`: the **QSym** basis of compositions, with
    /// letters up to `max_letter` for enumeration.
    pub fn qsym(max_letter: u32) -> Self {
        WordAlgebra { semigroup: Semigroup::Positive, max_letter }
    }

    /// Words over the saturating semigroup `{1..m}` with `min(a+b, m)`.
    pub fn capped(m: u32) -> Self {
        WordAlgebra { semigroup: Semigroup::Capped(m), max_letter: m }
    }
}

impl Carrier for WordAlgebra {
    type Basis = Word;

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn grade(&self, b: &Word) -> usize {
        b.len()
    }

    fn product(&self, a: &Word, b: &Word) -> Elem<Word> {
        word::quasishuffle(self.semigroup, a, b)
    }

    fn coproduct(&self, b: &Word) -> Tensor2<Word> {
        word::deconcat(b)
    }

    fn internal_coproduct(&self, b: &Word) -> Tensor2<Word> {
        word::internal_delta(self.semigroup, b)
    }

    fn counit(&self, b: &Word) -> Scalar {
        if b.is_empty() {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn internal_counit(&self, b: &Word) -> Scalar {
        if b.len() <= 1 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn basis_up_to(&self, n: usize) -> Vec<Word> {
        word::words_up_to(self.max_letter, n)
    }
}

/// `K[X]` with basis `X^n`: the binomial coproduct `Δ(X^n) = Σ C(n,k)
/// X^k ⊗ X^{n-k}` and the group-like internal coproduct
/// `δ(X^n) = X^n ⊗ X^n`, dual to composition of polynomials.
#[derive(Clone, Copy, Debug, Default)]
pub struct PolyAlgebra;

impl Carrier for PolyAlgebra {
    type Basis = usize;

    fn unit(&self) -> usize {
        0
    }

    fn grade(&self, b: &usize) -> usize {
        *b
    }

    fn product(&self, a: &usize, b: &usize) -> Elem<usize> {
        Lin::basis(a + b)
    }

    fn coproduct(&self, b: &usize) -> Tensor2<usize> {
        (0..=*b)
            .map(|k| ((k, b - k), Scalar::from_bigint(binomial(*b, k))))
            .collect()
    }

    fn internal_coproduct(&self, b: &usize) -> Tensor2<usize> {
        Lin::basis((*b, *b))
    }

    fn counit(&self, b: &usize) -> Scalar {
        if *b == 0 {
            Scalar::one()
        } else {
            Scalar::zero()
        }
    }

    fn internal_counit(&self, _b: &usize) -> Scalar {
        Scalar::one()
    }

    fn basis_up_to(&self, n: usize) -> Vec<usize> {
        (0..=n).collect()
    }
}

// ---- axiom checks ----

/// One named axiom verified over a truncated basis.
pub struct AxiomReport {
    pub name: &'static str,
    pub holds: bool,
    /// First basis witness of a failure, if any.
    pub counterexample: Option<String>,
}

fn t3_left<C: Carrier>(c: &C, t: &Tensor2<C::Basis>, internal: bool) -> Tensor3<C::Basis> {
    // (cop ⊗ Id)(t)
    let mut out = Tensor3::zero();
    for ((a, b), s) in t.iter() {
        let cop = if internal { c.internal_coproduct(a) } else { c.coproduct(a) };
        for ((x, y), u) in cop.iter() {
            out.add_term((x.clone(), y.clone(), b.clone()), s * u);
        }
    }
    out
}

fn t3_right<C: Carrier>(c: &C, t: &Tensor2<C::Basis>, internal: bool) -> Tensor3<C::Basis> {
    // (Id ⊗ cop)(t)
    let mut out = Tensor3::zero();
    for ((a, b), s) in t.iter() {
        let cop = if internal { c.internal_coproduct(b) } else { c.coproduct(b) };
        for ((x, y), u) in cop.iter() {
            out.add_term((a.clone(), x.clone(), y.clone()), s * u);
        }
    }
    out
}

fn check<C: Carrier>(
    name: &'static str,
    basis: &[C::Basis],
    mut body: impl FnMut(&C::Basis) -> bool,
    _c: &C,
) -> AxiomReport {
    for b in basis {
        if !body(b) {
            return AxiomReport {
                name,
                holds: false,
                counterexample: Some(format!("{}", b)),
            };
        }
    }
    AxiomReport { name, holds: true, counterexample: None }
}

/// Verifies every double-bialgebra axiom on all basis elements (and pairs,
/// where the axiom involves a product) of grade at most `max_grade`.
pub fn check_axioms<C: Carrier>(c: &C, max_grade: usize) -> Vec<AxiomReport> {
    let basis = c.basis_up_to(max_grade);
    // pairs are capped so that products stay within the enumerated range
    let pairs: Vec<(C::Basis, C::Basis)> = basis
        .iter()
        .flat_map(|a| {
            basis
                .iter()
                .filter(move |b| c.grade(a) + c.grade(b) <= max_grade)
                .map(move |b| (a.clone(), b.clone()))
        })
        .collect();
    let mut reports = Vec::new();

    reports.push({
        let mut bad = None;
        'outer: for (a, b) in &pairs {
            let ab = c.product(a, b);
            let ba = c.product(b, a);
            if ab != ba {
                bad = Some(format!("{} · {}", a, b));
                break;
            }
            for d in &basis {
                if c.grade(a) + c.grade(b) + c.grade(d) > max_grade {
                    continue;
                }
                let left = product_elem(c, &ab, &Lin::basis(d.clone()));
                let right = product_elem(c, &Lin::basis(a.clone()), &c.product(b, d));
                if left != right {
                    bad = Some(format!("({} · {}) · {}", a, b, d));
                    break 'outer;
                }
            }
        }
        AxiomReport {
            name: "product: commutative and associative",
            holds: bad.is_none(),
            counterexample: bad,
        }
    });

    reports.push(check(
        "product: unit",
        &basis,
        |b| c.product(&c.unit(), b) == Lin::basis(b.clone()),
        c,
    ));

    reports.push(check(
        "Δ: coassociativity",
        &basis,
        |b| {
            let d = c.coproduct(b);
            t3_left(c, &d, false) == t3_right(c, &d, false)
        },
        c,
    ));

    reports.push(check(
        "Δ: counit",
        &basis,
        |b| {
            let d = c.coproduct(b);
            let mut left = Elem::zero();
            let mut right = Elem::zero();
            for ((x, y), s) in d.iter() {
                left.add_term(y.clone(), s * &c.counit(x));
                right.add_term(x.clone(), s * &c.counit(y));
            }
            left == Lin::basis(b.clone()) && right == Lin::basis(b.clone())
        },
        c,
    ));

    reports.push({
        let mut bad = None;
        for (a, b) in &pairs {
            let left = coproduct_elem(c, &c.product(a, b));
            let mut right = Tensor2::zero();
            for ((x1, y1), s) in c.coproduct(a).iter() {
                for ((x2, y2), u) in c.coproduct(b).iter() {
                    for (p, sp) in c.product(x1, x2).iter() {
                        for (q, sq) in c.product(y1, y2).iter() {
                            right.add_term((p.clone(), q.clone()), s * u * sp * sq);
                        }
                    }
                }
            }
            if left != right {
                bad = Some(format!("{} · {}", a, b));
                break;
            }
        }
        AxiomReport {
            name: "Δ: algebra morphism",
            holds: bad.is_none(),
            counterexample: bad,
        }
    });

    reports.push(check(
        "δ: coassociativity",
        &basis,
        |b| {
            let d = c.internal_coproduct(b);
            t3_left(c, &d, true) == t3_right(c, &d, true)
        },
        c,
    ));

    reports.push(check(
        "δ: counit",
        &basis,
        |b| {
            let d = c.internal_coproduct(b);
            let mut left = Elem::zero();
            let mut right = Elem::zero();
            for ((x, y), s) in d.iter() {
                left.add_term(y.clone(), s * &c.internal_counit(x));
                right.add_term(x.clone(), s * &c.internal_counit(y));
            }
            left == Lin::basis(b.clone()) && right == Lin::basis(b.clone())
        },
        c,
    ));

    reports.push({
        let mut bad = None;
        for (a, b) in &pairs {
            let left = internal_coproduct_elem(c, &c.product(a, b));
            let mut right = Tensor2::zero();
            for ((x1, y1), s) in c.internal_coproduct(a).iter() {
                for ((x2, y2), u) in c.internal_coproduct(b).iter() {
                    for (p, sp) in c.product(x1, x2).iter() {
                        for (q, sq) in c.product(y1, y2).iter() {
                            right.add_term((p.clone(), q.clone()), s * u * sp * sq);
                        }
                    }
                }
            }
            if left != right {
                bad = Some(format!("{} · {}", a, b));
                break;
            }
        }
        AxiomReport {
            name: "δ: algebra morphism",
            holds: bad.is_none(),
            counterexample: bad,
        }
    });

    reports.push(check(
        "cointeraction: (Δ⊗Id)∘δ = m_{1,3,24}∘(δ⊗δ)∘Δ",
        &basis,
        |b| {
            let left = t3_left(c, &c.internal_coproduct(b), false);
            let mut right = Tensor3::zero();
            for ((x, y), s) in c.coproduct(b).iter() {
                for ((x1, x2), sx) in c.internal_coproduct(x).iter() {
                    for ((y1, y2), sy) in c.internal_coproduct(y).iter() {
                        for (m, sm) in c.product(x2, y2).iter() {
                            right.add_term(
                                (x1.clone(), y1.clone(), m.clone()),
                                s * sx * sy * sm,
                            );
                        }
                    }
                }
            }
            left == right
        },
        c,
    ));

    reports.push(check(
        "counit comodule: (ε_Δ⊗Id)∘δ = ν∘ε_Δ",
        &basis,
        |b| {
            let mut left = Elem::zero();
            for ((x, y), s) in c.internal_coproduct(b).iter() {
                left.add_term(y.clone(), s * &c.counit(x));
            }
            left == Lin::term(c.unit(), c.counit(b))
        },
        c,
    ));

    reports.push(check(
        "ε_δ: character of the product",
        &basis,
        |b| {
            for a in c.basis_up_to(max_grade.saturating_sub(c.grade(b))) {
                let prod = c.product(&a, b);
                if internal_counit_elem(c, &prod) != c.internal_counit(&a) * c.internal_counit(b)
                {
                    return false;
                }
            }
            true
        },
        c,
    ));

    reports.push(check(
        "grade: reduced coproduct nilpotency",
        &basis,
        |b| iterated_reduced(c, b, c.grade(b) + 1).is_zero(),
        c,
    ));

    reports
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_all_hold(reports: &[AxiomReport]) {
        for r in reports {
            assert!(
                r.holds,
                "axiom `{}` failed at {:?}",
                r.name, r.counterexample
            );
        }
    }

    #[test]
    fn graph_axioms_small() {
        assert_all_hold(&check_axioms(&GraphAlgebra, 4));
    }

    #[test]
    fn word_axioms_qsym() {
        assert_all_hold(&check_axioms(&WordAlgebra::qsym(3), 3));
    }

    #[test]
    fn word_axioms_capped() {
        assert_all_hold(&check_axioms(&WordAlgebra::capped(2), 3));
    }

    #[test]
    fn poly_axioms() {
        assert_all_hold(&check_axioms(&PolyAlgebra, 6));
    }

    #[test]
    fn iterated_reduced_kills_at_grade() {
        let c = GraphAlgebra;
        let tri = crate::graph::triangle();
        assert!(!iterated_reduced(&c, &tri, 3).is_zero());
        assert!(iterated_reduced(&c, &tri, 4).is_zero());
        // the unit is killed immediately
        assert!(iterated_reduced(&c, &c.unit(), 1).is_zero());
    }

    #[test]
    fn product_tensor_collapses() {
        let c = PolyAlgebra;
        let mut t = TensorN::zero();
        t.add_term(vec![2usize, 3], Scalar::from_int(5));
        assert_eq!(product_tensor(&c, &t), Lin::term(5usize, Scalar::from_int(5)));
    }
}
