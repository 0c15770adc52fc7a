//! Brute-force reference implementations, deliberately sharing no code path
//! with the convolution engine: proper-coloring counts, the packed-coloring
//! expansion of the chromatic polynomial, and convolution straight from the
//! tensor definition.

use crate::carrier::Carrier;
use crate::graph::GraphBasis;
use crate::poly::{hilbert, Poly};
use crate::scalar::Scalar;

/// Number of proper colorings of `g` with colors `1..=k`, by brute force
/// over all `k^{|V|}` maps.
pub fn count_proper_colorings(g: &GraphBasis, k: usize) -> u64 {
    let n = g.vertex_count();
    if n == 0 {
        return 1;
    }
    if k == 0 {
        return 0;
    }
    let mut coloring = vec![0usize; n];
    let mut count = 0u64;
    loop {
        if g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]) {
            count += 1;
        }
        // odometer over [0, k)^n
        let mut i = 0;
        loop {
            if i == n {
                return count;
            }
            coloring[i] += 1;
            if coloring[i] < k {
                break;
            }
            coloring[i] = 0;
            i += 1;
        }
    }
}

/// The chromatic polynomial as `Σ H_{max f}` over packed valid colorings:
/// proper colorings surjective onto an initial segment `{1,…,max f}`.
pub fn packed_valid_expansion(g: &GraphBasis) -> Poly {
    let n = g.vertex_count();
    if n == 0 {
        return Poly::one();
    }
    let mut coloring = vec![0usize; n];
    let mut out = Poly::zero();
    loop {
        let top = coloring.iter().copied().max().unwrap();
        let valid = g.edges().iter().all(|&(u, v)| coloring[u] != coloring[v]);
        let packed = (0..=top).all(|c| coloring.contains(&c));
        if valid && packed {
            out = &out + &hilbert(top + 1);
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            coloring[i] += 1;
            if coloring[i] < n {
                break;
            }
            coloring[i] = 0;
            i += 1;
        }
    }
}

/// `(f * g)(x) = Σ f(x⁽¹⁾)·g(x⁽²⁾)` expanded directly from the tensor of
/// the outer coproduct, with no memoization or series machinery.
pub fn convolution_by_definition<C: Carrier>(
    c: &C,
    f: impl Fn(&C::Basis) -> Scalar,
    g: impl Fn(&C::Basis) -> Scalar,
    x: &C::Basis,
) -> Scalar {
    c.coproduct(x)
        .iter()
        .map(|((l, r), s)| s * f(l) * g(r))
        .sum()
}

/// The same expansion over the internal coproduct: `(f ⋆ g)(x)`.
pub fn circ_convolution_by_definition<C: Carrier>(
    c: &C,
    f: impl Fn(&C::Basis) -> Scalar,
    g: impl Fn(&C::Basis) -> Scalar,
    x: &C::Basis,
) -> Scalar {
    c.internal_coproduct(x)
        .iter()
        .map(|((l, r), s)| s * f(l) * g(r))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{GraphAlgebra, WordAlgebra};
    use crate::graph::{k2, triangle};
    use crate::linear::Lin;
    use crate::morphisms::{chromatic_dc, unique_phi};
    use crate::word::Word;

    #[test]
    fn coloring_counts() {
        assert_eq!(count_proper_colorings(&triangle(), 3), 6);
        assert_eq!(count_proper_colorings(&k2(), 1), 0);
        assert_eq!(count_proper_colorings(&GraphBasis::discrete(3), 2), 8);
        assert_eq!(count_proper_colorings(&GraphBasis::empty(), 5), 1);
    }

    #[test]
    fn packed_expansion_golden() {
        assert_eq!(packed_valid_expansion(&GraphBasis::vertex()), hilbert(1));
        assert_eq!(
            packed_valid_expansion(&k2()),
            &hilbert(2) + &hilbert(2)
        );
        let six_h3: Poly = (0..6).fold(Poly::zero(), |acc, _| &acc + &hilbert(3));
        assert_eq!(packed_valid_expansion(&triangle()), six_h3);
    }

    #[test]
    fn three_way_chromatic_agreement() {
        let c = GraphAlgebra;
        for g in c.basis_up_to(5) {
            let hopf = unique_phi(c, &Lin::basis(g.clone()));
            assert_eq!(hopf, chromatic_dc(&g), "dc vs hopf on {}", g);
            assert_eq!(hopf, packed_valid_expansion(&g), "packed vs hopf on {}", g);
            for k in 0..=4 {
                assert_eq!(
                    hopf.eval_int(k as i64),
                    Scalar::from_int(count_proper_colorings(&g, k) as i64),
                    "coloring count on {} at k={}",
                    g,
                    k
                );
            }
        }
    }

    #[test]
    fn convolution_reference_values() {
        let c = GraphAlgebra;
        let eps_outer = |b: &GraphBasis| c.counit(b);
        let eps_inner = |b: &GraphBasis| c.internal_counit(b);
        assert_eq!(
            convolution_by_definition(&c, eps_outer, eps_outer, &k2()),
            Scalar::zero()
        );
        assert_eq!(
            convolution_by_definition(&c, eps_inner, eps_inner, &k2()),
            Scalar::from_int(2)
        );
        let w = WordAlgebra::qsym(3);
        let eps_w = |b: &Word| w.internal_counit(b);
        assert_eq!(
            circ_convolution_by_definition(&w, eps_w, eps_w, &Word::new(vec![1, 2])),
            Scalar::zero()
        );
    }

    #[test]
    fn convolution_matches_engine() {
        let c = GraphAlgebra;
        let lam = crate::engine::graph_character(|g| Scalar::from_int(1 + g.edge_count() as i64));
        let eng_star = crate::engine::conv_star(c, &lam, &lam);
        let eng_circ = crate::engine::conv_circ(c, &lam, &lam);
        for g in c.basis_up_to(4) {
            let lam2 = lam.clone();
            let lam3 = lam.clone();
            assert_eq!(
                convolution_by_definition(&c, move |b| lam2.eval(b), move |b| lam3.eval(b), &g),
                eng_star.eval(&g),
                "star on {}",
                g
            );
            let lam2 = lam.clone();
            let lam3 = lam.clone();
            assert_eq!(
                circ_convolution_by_definition(&c, move |b| lam2.eval(b), move |b| lam3.eval(b), &g),
                eng_circ.eval(&g),
                "circ on {}",
                g
            );
        }
    }
}
