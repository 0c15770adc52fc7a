//! Quasishuffle algebras on words over a commutative semigroup: the
//! quasishuffle product, deconcatenation, the internal coproduct, and the
//! closed-form antipode and eulerian idempotent via surjections.

use std::fmt;

use crate::linear::{Elem, Lin, Tensor2};
use crate::scalar::{factorial, Scalar};

/// The letter semigroup. `Positive` is `(ℕ_{>0}, +)`, whose words are the
/// compositions of quasisymmetric functions. `Capped(m)` uses letters
/// `1..=m` with saturating addition `min(a+b, m)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Semigroup {
    Positive,
    Capped(u32),
}

impl Semigroup {
    pub fn add(&self, a: u32, b: u32) -> u32 {
        match self {
            Semigroup::Positive => a + b,
            Semigroup::Capped(m) => (a + b).min(*m),
        }
    }

    pub fn sum(&self, letters: impl IntoIterator<Item = u32>) -> u32 {
        letters
            .into_iter()
            .reduce(|a, b| self.add(a, b))
            .expect("sum of a nonempty block")
    }

    /// Checks that a letter is valid for this semigroup.
    pub fn admits(&self, letter: u32) -> bool {
        match self {
            Semigroup::Positive => letter >= 1,
            Semigroup::Capped(m) => (1..=*m).contains(&letter),
        }
    }
}

/// A word over positive-integer letters, ordered by length then
/// lexicographically. The empty word is the unit of the quasishuffle product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word(Vec<u32>);

pub type WordElem = Elem<Word>;

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn single(letter: u32) -> Self {
        Word(vec![letter])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total of the letters; the homogeneous degree in **QSym**.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Parses `(2,1,1)`; `()` is the empty word.
    pub fn parse(text: &str) -> Result<Word, String> {
        let t = text.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| format!("expected a parenthesized composition, got {:?}", t))?;
        let mut letters = Vec::new();
        for part in inner.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            let k: u32 = part
                .parse()
                .map_err(|_| format!("bad letter {:?}", part))?;
            if k == 0 {
                return Err("letters must be positive".into());
            }
            letters.push(k);
        }
        Ok(Word(letters))
    }

    pub fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{}", self.render())
    }
}

/// Quasishuffle product `u ⧢ v`: interleavings where any prefix letter of `u`
/// may also merge with one of `v` via the semigroup sum.
pub fn quasishuffle(sg: Semigroup, u: &Word, v: &Word) -> WordElem {
    fn go(sg: Semigroup, u: &[u32], v: &[u32]) -> Vec<Vec<u32>> {
        if u.is_empty() {
            return vec![v.to_vec()];
        }
        if v.is_empty() {
            return vec![u.to_vec()];
        }
        let mut out = Vec::new();
        for mut w in go(sg, &u[1..], v) {
            w.insert(0, u[0]);
            out.push(w);
        }
        for mut w in go(sg, u, &v[1..]) {
            w.insert(0, v[0]);
            out.push(w);
        }
        for mut w in go(sg, &u[1..], &v[1..]) {
            w.insert(0, sg.add(u[0], v[0]));
            out.push(w);
        }
        out
    }
    go(sg, u.letters(), v.letters())
        .into_iter()
        .map(|w| (Word::new(w), Scalar::one()))
        .collect()
}

/// Shuffle product `u ⊔⊔ v`: interleavings only, no merged letters.
pub fn shuffle(u: &Word, v: &Word) -> WordElem {
    fn go(u: &[u32], v: &[u32]) -> Vec<Vec<u32>> {
        if u.is_empty() {
            return vec![v.to_vec()];
        }
        if v.is_empty() {
            return vec![u.to_vec()];
        }
        let mut out = Vec::new();
        for mut w in go(&u[1..], v) {
            w.insert(0, u[0]);
            out.push(w);
        }
        for mut w in go(u, &v[1..]) {
            w.insert(0, v[0]);
            out.push(w);
        }
        out
    }
    go(u.letters(), v.letters())
        .into_iter()
        .map(|w| (Word::new(w), Scalar::one()))
        .collect()
}

/// Quasishuffle product extended bilinearly to combinations.
pub fn quasishuffle_elem(sg: Semigroup, a: &WordElem, b: &WordElem) -> WordElem {
    let mut out = Lin::zero();
    for (u, c) in a.iter() {
        for (v, d) in b.iter() {
            for (w, e) in quasishuffle(sg, u, v).iter() {
                out.add_term(w.clone(), c * d * e);
            }
        }
    }
    out
}

/// Deconcatenation coproduct `Δ(w) = Σ w[..k] ⊗ w[k..]`.
pub fn deconcat(w: &Word) -> Tensor2<Word> {
    let mut out = Tensor2::zero();
    for k in 0..=w.len() {
        out.add_term(
            (
                Word::new(w.letters()[..k].to_vec()),
                Word::new(w.letters()[k..].to_vec()),
            ),
            Scalar::one(),
        );
    }
    out
}

/// Iterates over compositions of `w` into nonempty blocks (as block slices).
fn compositions(w: &Word) -> Vec<Vec<&[u32]>> {
    let n = w.len();
    if n == 0 {
        return vec![Vec::new()];
    }
    let letters = w.letters();
    let mut out = Vec::new();
    // bit i set = a cut after position i
    for mask in 0u64..(1 << (n - 1)) {
        let mut blocks = Vec::new();
        let mut start = 0;
        for i in 0..n - 1 {
            if mask & (1 << i) != 0 {
                blocks.push(&letters[start..=i]);
                start = i + 1;
            }
        }
        blocks.push(&letters[start..]);
        out.push(blocks);
    }
    out
}

/// Internal coproduct:
/// `δ(w) = Σ_{w = w_1…w_k} (|w_1|…|w_k|) ⊗ w_1 ⧢ … ⧢ w_k`,
/// summing over compositions into nonempty blocks; `|w_i|` is the semigroup
/// sum of the block.
pub fn internal_delta(sg: Semigroup, w: &Word) -> Tensor2<Word> {
    let mut out = Tensor2::zero();
    if w.is_empty() {
        out.add_term((Word::empty(), Word::empty()), Scalar::one());
        return out;
    }
    for blocks in compositions(w) {
        let sums = Word::new(
            blocks
                .iter()
                .map(|b| sg.sum(b.iter().copied()))
                .collect(),
        );
        let mut right = Lin::basis(Word::empty());
        for b in &blocks {
            right = quasishuffle_elem(sg, &right, &Lin::basis(Word::new(b.to_vec())));
        }
        for (r, c) in right.iter() {
            out.add_term((sums.clone(), r.clone()), c.clone());
        }
    }
    out
}

/// Counit of deconcatenation: the coefficient of the empty word.
pub fn counit_deconcat(x: &WordElem) -> Scalar {
    x.coeff(&Word::empty())
}

/// Counit of the internal coproduct: total coefficient of words of length
/// at most one.
pub fn counit_internal(x: &WordElem) -> Scalar {
    x.iter()
        .filter(|(w, _)| w.len() <= 1)
        .map(|(_, c)| c.clone())
        .sum()
}

/// All surjections `[n] → [l]` for `1 ≤ l ≤ n`, as value vectors in `1..=l`.
pub fn surjections(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut g = vec![1usize; n];
    loop {
        let l = *g.iter().max().unwrap();
        if (1..=l).all(|v| g.contains(&v)) {
            out.push(g.clone());
        }
        // odometer over [1..=n]^n
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if g[i] < n {
                g[i] += 1;
                for x in g[i + 1..].iter_mut() {
                    *x = 1;
                }
                break;
            }
        }
    }
}

/// All `(k,l)`-quasishuffles: surjections of `[k+l]` onto an initial segment
/// that are increasing on the first `k` and on the last `l` positions.
pub fn qsh_surjections(k: usize, l: usize) -> Vec<Vec<usize>> {
    if k + l == 0 {
        return Vec::new();
    }
    surjections(k + l)
        .into_iter()
        .filter(|g| {
            g[..k].windows(2).all(|p| p[0] < p[1])
                && g[k..].windows(2).all(|p| p[0] < p[1])
        })
        .collect()
}

/// Number of weak descents `#{i | g(i) ≥ g(i+1)}`.
pub fn descents(g: &[usize]) -> usize {
    g.windows(2).filter(|p| p[0] >= p[1]).count()
}

/// The word whose j-th letter is the semigroup sum of the letters of `w` at
/// positions mapped to `j` by the surjection `g`.
pub fn fibers_word(sg: Semigroup, w: &Word, g: &[usize]) -> Word {
    let l = *g.iter().max().unwrap();
    let letters: Vec<u32> = (1..=l)
        .map(|j| {
            sg.sum(
                w.letters()
                    .iter()
                    .zip(g)
                    .filter(|(_, &gi)| gi == j)
                    .map(|(&a, _)| a),
            )
        })
        .collect();
    Word::new(letters)
}

/// The descent polynomial `P_g(X) = X^{d(g)+1}(1+X)^{n-1-d(g)}` of a
/// surjection on `[n]`.
pub fn weight_poly(g: &[usize]) -> crate::poly::Poly {
    use crate::poly::Poly;
    let n = g.len();
    let d = descents(g);
    let mut p = Poly::monomial(d + 1, Scalar::one());
    let one_plus_x = Poly::from_coeffs(vec![Scalar::one(), Scalar::one()]);
    for _ in 0..(n - 1 - d) {
        p = &p * &one_plus_x;
    }
    p
}

/// `Θ(Q(ε_δ − ε_Δ))` on a word, in closed form:
/// `Σ_g ⟨Q, P_g⟩ · (fibers of g)`, where `q(k) = ⟨Q(T), X^k⟩` gives the
/// series coefficients.
pub fn theta_word(sg: Semigroup, q: impl Fn(usize) -> Scalar, w: &Word) -> WordElem {
    let n = w.len();
    if n == 0 {
        return Lin::term(Word::empty(), q(0));
    }
    let mut out = Lin::zero();
    for g in surjections(n) {
        let p = weight_poly(&g);
        let pairing: Scalar = (0..=p.degree().unwrap_or(0))
            .map(|k| q(k) * p.coeff(k))
            .sum();
        out.add_term(fibers_word(sg, w, &g), pairing);
    }
    out
}

/// The length-one component of the eulerian idempotent: an infinitesimal
/// map `T(V) → V` fixing letters and killing products.
pub fn hoffman_phi(sg: Semigroup, w: &Word) -> WordElem {
    eulerian_word(sg, w)
        .iter()
        .filter(|(u, _)| u.len() == 1)
        .map(|(u, c)| (u.clone(), c.clone()))
        .collect()
}

/// Hoffman-style embedding `Φ = Σ_k φ^{⊗k} ∘ Δ̃^{(k-1)}`: an algebra
/// morphism from the quasishuffle algebra to the shuffle algebra,
/// unitriangular by length.
pub fn hoffman_embedding(sg: Semigroup, w: &Word) -> WordElem {
    if w.is_empty() {
        return Lin::basis(Word::empty());
    }
    let mut out = Lin::zero();
    for blocks in compositions(w) {
        let mut acc = Lin::basis(Word::empty());
        for b in &blocks {
            let phi_b = hoffman_phi(sg, &Word::new(b.to_vec()));
            let mut next = Lin::zero();
            for (u, c) in acc.iter() {
                for (v, d) in phi_b.iter() {
                    next.add_term(u.concat(v), c * d);
                }
            }
            acc = next;
        }
        out = out.add(&acc);
    }
    out
}

/// Shuffle product extended bilinearly.
pub fn shuffle_elem(a: &WordElem, b: &WordElem) -> WordElem {
    let mut out = Lin::zero();
    for (u, c) in a.iter() {
        for (v, d) in b.iter() {
            for (w, e) in shuffle(u, v).iter() {
                out.add_term(w.clone(), c * d * e);
            }
        }
    }
    out
}

/// Antipode of the quasishuffle Hopf algebra:
/// `S(w) = (-1)^n Σ_{g decreasing surjection} (fibers of g)`.
pub fn antipode_word(sg: Semigroup, w: &Word) -> WordElem {
    let n = w.len();
    if n == 0 {
        return Lin::basis(Word::empty());
    }
    let sign = if n % 2 == 0 { Scalar::one() } else { Scalar::from_int(-1) };
    let mut out = Lin::zero();
    for g in surjections(n) {
        if descents(&g) == n - 1 {
            out.add_term(fibers_word(sg, w, &g), sign.clone());
        }
    }
    out
}

/// Eulerian idempotent:
/// `ϖ(w) = Σ_g (-1)^{d(g)} d(g)!(n-1-d(g))!/n! (fibers of g)`.
pub fn eulerian_word(sg: Semigroup, w: &Word) -> WordElem {
    let n = w.len();
    if n == 0 {
        return Lin::zero();
    }
    let n_fact = Scalar::from_bigint(factorial(n));
    let mut out = Lin::zero();
    for g in surjections(n) {
        let d = descents(&g);
        let mut c = Scalar::from_bigint(factorial(d) * factorial(n - 1 - d)) / n_fact.clone();
        if d % 2 == 1 {
            c = -c;
        }
        out.add_term(fibers_word(sg, w, &g), c);
    }
    out
}

/// All words of length at most `max_len` over letters `1..=max_letter`,
/// sorted by length then lexicographically.
pub fn words_up_to(max_letter: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<u32>::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 1..=max_letter {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned().map(Word::new));
        layer = next;
    }
    out.sort();
    out
}

/// Compositions of `n` (QSym words of homogeneous degree `n`).
pub fn compositions_of(n: u32) -> Vec<Word> {
    if n == 0 {
        return vec![Word::empty()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions_of(n - first) {
            let mut v = vec![first];
            v.extend_from_slice(rest.letters());
            out.push(Word::new(v));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u32]) -> Word {
        Word::new(letters.to_vec())
    }

    #[test]
    fn quasishuffle_one_letter_golden() {
        // (a) ⧢ (bcd) has 4 interleavings and 3 merged terms
        let out = quasishuffle(Semigroup::Positive, &w(&[1]), &w(&[2, 3, 4]));
        assert_eq!(out.iter().map(|(_, c)| c.clone()).sum::<Scalar>(), Scalar::from_int(7));
        assert_eq!(out.coeff(&w(&[1, 2, 3, 4])), Scalar::one());
        assert_eq!(out.coeff(&w(&[2, 3, 4, 1])), Scalar::one());
        assert_eq!(out.coeff(&w(&[3, 3, 4])), Scalar::one());
        assert_eq!(out.coeff(&w(&[2, 4, 4])), Scalar::one());
        assert_eq!(out.coeff(&w(&[2, 3, 5])), Scalar::one());
    }

    #[test]
    fn quasishuffle_two_two_has_thirteen_terms() {
        let out = quasishuffle(Semigroup::Positive, &w(&[1, 2]), &w(&[3, 4]));
        let total: Scalar = out.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, Scalar::from_int(13));
        assert_eq!(out.coeff(&w(&[4, 2, 4])), Scalar::one());
        assert_eq!(out.coeff(&w(&[4, 6])), Scalar::one());
        assert_eq!(out.coeff(&w(&[3, 5, 2])), Scalar::one());
    }

    #[test]
    fn quasishuffle_is_commutative_and_associative() {
        let sg = Semigroup::Positive;
        let (a, b, c) = (w(&[1, 2]), w(&[1]), w(&[3]));
        assert_eq!(quasishuffle(sg, &a, &b), quasishuffle(sg, &b, &a));
        let ab_c = quasishuffle_elem(sg, &quasishuffle(sg, &a, &b), &Lin::basis(c.clone()));
        let a_bc = quasishuffle_elem(sg, &Lin::basis(a.clone()), &quasishuffle(sg, &b, &c));
        assert_eq!(ab_c, a_bc);
    }

    #[test]
    fn capped_addition_saturates() {
        let sg = Semigroup::Capped(2);
        assert_eq!(sg.add(1, 1), 2);
        assert_eq!(sg.add(2, 2), 2);
        let out = quasishuffle(sg, &w(&[2]), &w(&[1]));
        assert_eq!(out.coeff(&w(&[2])), Scalar::one());
    }

    #[test]
    fn deconcat_golden() {
        let out = deconcat(&w(&[1, 2, 3]));
        assert_eq!(out.len(), 4);
        assert_eq!(out.coeff(&(w(&[1]), w(&[2, 3]))), Scalar::one());
        assert_eq!(out.coeff(&(Word::empty(), w(&[1, 2, 3]))), Scalar::one());
    }

    #[test]
    fn internal_delta_single_letter_is_grouplike() {
        let out = internal_delta(Semigroup::Positive, &w(&[3]));
        let expect: Tensor2<Word> =
            [((w(&[3]), w(&[3])), Scalar::one())].into_iter().collect();
        assert_eq!(out, expect);
    }

    #[test]
    fn internal_delta_two_letters_golden() {
        // δ((k1 k2)) = (k1 k2) ⊗ (k1)⧢(k2) + (k1+k2) ⊗ (k1 k2)
        let out = internal_delta(Semigroup::Positive, &w(&[1, 2]));
        assert_eq!(out.coeff(&(w(&[1, 2]), w(&[1, 2]))), Scalar::one());
        assert_eq!(out.coeff(&(w(&[1, 2]), w(&[2, 1]))), Scalar::one());
        assert_eq!(out.coeff(&(w(&[1, 2]), w(&[3]))), Scalar::one());
        assert_eq!(out.coeff(&(w(&[3]), w(&[1, 2]))), Scalar::one());
        assert_eq!(out.coeff(&(w(&[3]), w(&[2, 1]))), Scalar::zero());
    }

    #[test]
    fn internal_counit_axiom() {
        // (ε_δ ⊗ Id)∘δ = Id on a few words
        for word in [w(&[2]), w(&[1, 2]), w(&[1, 1, 2]), w(&[3, 1])] {
            let dd = internal_delta(Semigroup::Positive, &word);
            let mut left = WordElem::zero();
            let mut right = WordElem::zero();
            for ((a, b), c) in dd.iter() {
                if a.len() <= 1 {
                    left.add_term(b.clone(), c.clone());
                }
                if b.len() <= 1 {
                    right.add_term(a.clone(), c.clone());
                }
            }
            assert_eq!(left, Lin::basis(word.clone()));
            assert_eq!(right, Lin::basis(word.clone()));
        }
    }

    #[test]
    fn surjection_counts() {
        // Fubini numbers: 1, 3, 13, 75
        assert_eq!(surjections(1).len(), 1);
        assert_eq!(surjections(2).len(), 3);
        assert_eq!(surjections(3).len(), 13);
        assert_eq!(surjections(4).len(), 75);
    }

    #[test]
    fn descent_counts() {
        assert_eq!(descents(&[1, 2, 3]), 0);
        assert_eq!(descents(&[2, 1]), 1);
        assert_eq!(descents(&[1, 1, 2]), 1);
        assert_eq!(descents(&[3, 2, 1]), 2);
    }

    #[test]
    fn antipode_single_letter() {
        let s = antipode_word(Semigroup::Positive, &w(&[4]));
        assert_eq!(s, Lin::term(w(&[4]), Scalar::from_int(-1)));
    }

    #[test]
    fn antipode_two_letters() {
        // S((ab)) = (ba) + (a+b)
        let s = antipode_word(Semigroup::Positive, &w(&[1, 2]));
        assert_eq!(s.coeff(&w(&[2, 1])), Scalar::one());
        assert_eq!(s.coeff(&w(&[3])), Scalar::one());
        assert_eq!(s.len(), 2);
    }

    #[test]
    fn antipode_is_star_inverse_of_identity() {
        // m∘(S⊗Id)∘Δ(w) = 0 for nonempty w
        let sg = Semigroup::Positive;
        for word in [w(&[1, 2]), w(&[2, 1, 1]), w(&[1, 1, 1, 2])] {
            let mut acc = WordElem::zero();
            for ((a, b), c) in deconcat(&word).iter() {
                let sa = antipode_word(sg, a);
                let prod = quasishuffle_elem(sg, &sa, &Lin::basis(b.clone()));
                acc = acc.add(&prod.scale(c));
            }
            assert!(acc.is_zero(), "S*Id failed on {}", word);
        }
    }

    #[test]
    fn eulerian_weights_two_letters() {
        // ϖ((ab)) = (ab)/2 - (ba)/2 - (a+b)/2, which is (ab) - (a)⧢(b)/2
        let p = eulerian_word(Semigroup::Positive, &w(&[1, 2]));
        assert_eq!(p.coeff(&w(&[1, 2])), Scalar::ratio(1, 2));
        assert_eq!(p.coeff(&w(&[2, 1])), Scalar::ratio(-1, 2));
        assert_eq!(p.coeff(&w(&[3])), Scalar::ratio(-1, 2));
    }

    #[test]
    fn eulerian_is_idempotent_on_small_words() {
        let sg = Semigroup::Positive;
        for word in [w(&[1]), w(&[1, 2]), w(&[1, 1, 2])] {
            let once = eulerian_word(sg, &word);
            let twice = once.map_linear(|u| eulerian_word(sg, u));
            assert_eq!(once, twice, "ϖ∘ϖ ≠ ϖ on {}", word);
        }
    }

    #[test]
    fn qsh_surjection_counts() {
        assert_eq!(qsh_surjections(1, 1).len(), 3);
        assert_eq!(qsh_surjections(1, 3).len(), 7);
        assert_eq!(qsh_surjections(0, 4).len(), 1);
        assert_eq!(qsh_surjections(2, 2).len(), 13);
    }

    #[test]
    fn weight_poly_golden() {
        use crate::poly::Poly;
        // g=(1,2): d=0, P = X(1+X); g=(2,1) and g=(1,1): d=1, P = X²
        let x = Poly::x();
        let x_sq = &x * &x;
        assert_eq!(weight_poly(&[1, 2]), &x + &x_sq);
        assert_eq!(weight_poly(&[2, 1]), x_sq);
        assert_eq!(weight_poly(&[1, 1]), &x * &x);
    }

    #[test]
    fn theta_word_matches_closed_forms() {
        let sg = Semigroup::Positive;
        // Q = ln(1+T): ⟨Q, X^k⟩ = (−1)^{k+1}/k
        let log_q = |k: usize| {
            if k == 0 {
                Scalar::zero()
            } else {
                Scalar::ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64)
            }
        };
        // Q = 1/(1+T): ⟨Q, X^k⟩ = (−1)^k
        let geo_q = |k: usize| Scalar::from_int(if k % 2 == 0 { 1 } else { -1 });
        for word in [w(&[1]), w(&[1, 2]), w(&[2, 1, 1]), w(&[1, 1, 1, 3])] {
            assert_eq!(theta_word(sg, log_q, &word), eulerian_word(sg, &word));
            assert_eq!(theta_word(sg, geo_q, &word), antipode_word(sg, &word));
        }
        // Q = T picks out d(g)+1 = 1 i.e. nothing for n ≥ 2; identity on letters
        let t_q = |k: usize| if k == 1 { Scalar::one() } else { Scalar::zero() };
        assert_eq!(theta_word(sg, t_q, &w(&[5])), Lin::basis(w(&[5])));
    }

    #[test]
    fn hoffman_embedding_is_unitriangular_shuffle_morphism() {
        let sg = Semigroup::Positive;
        assert_eq!(hoffman_embedding(sg, &w(&[4])), Lin::basis(w(&[4])));
        for (u, v) in [
            (w(&[1]), w(&[2])),
            (w(&[1, 2]), w(&[1])),
            (w(&[2, 1]), w(&[1, 1])),
        ] {
            let lhs = quasishuffle(sg, &u, &v).map_linear(|t| hoffman_embedding(sg, t));
            let rhs = shuffle_elem(&hoffman_embedding(sg, &u), &hoffman_embedding(sg, &v));
            assert_eq!(lhs, rhs, "Φ({} ⧢ {})", u, v);
        }
        // leading term of Φ(w) is w, lower terms are strictly shorter
        for word in [w(&[1, 2]), w(&[2, 1, 1])] {
            let img = hoffman_embedding(sg, &word);
            assert_eq!(img.coeff(&word), Scalar::one());
            for (u, _) in img.iter() {
                assert!(u.len() <= word.len());
                assert!(u == &word || u.len() < word.len());
            }
        }
    }

    #[test]
    fn parse_and_render() {
        assert_eq!(Word::parse("(2,1,1)").unwrap(), w(&[2, 1, 1]));
        assert_eq!(Word::parse("()").unwrap(), Word::empty());
        assert_eq!(w(&[2, 1, 1]).render(), "(2,1,1)");
        assert!(Word::parse("(0,1)").is_err());
        assert!(Word::parse("2,1").is_err());
    }

    #[test]
    fn enumeration_counts() {
        // words over 2 letters of length ≤ 3: 1 + 2 + 4 + 8
        assert_eq!(words_up_to(2, 3).len(), 15);
        // compositions of 4: 8
        assert_eq!(compositions_of(4).len(), 8);
    }
}
