//! Finite rational linear combinations of basis keys: elements, tensors.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::Scalar;

/// A finite linear combination over an ordered basis key. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lin<K: Ord + Clone>(BTreeMap<K, Scalar>);

pub type Elem<B> = Lin<B>;
pub type Tensor2<B> = Lin<(B, B)>;
pub type Tensor3<B> = Lin<(B, B, B)>;
/// A tensor of arbitrary arity, keyed by the list of legs.
pub type TensorN<B> = Lin<Vec<B>>;

impl<K: Ord + Clone> Default for Lin<K> {
    fn default() -> Self {
        Lin(BTreeMap::new())
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Lin(BTreeMap::new())
    }

    pub fn basis(k: K) -> Self {
        Lin::term(k, Scalar::one())
    }

    pub fn term(k: K, c: Scalar) -> Self {
        let mut m = BTreeMap::new();
        if !c.is_zero() {
            m.insert(k, c);
        }
        Lin(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn coeff(&self, k: &K) -> Scalar {
        self.0.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.0.entry(k.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.0.remove(&k);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Lin::zero();
        }
        Lin(self.0.iter().map(|(k, v)| (k.clone(), v * c)).collect())
    }

    pub fn neg(&self) -> Self {
        Lin(self.0.iter().map(|(k, v)| (k.clone(), -v)).collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.0.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.0.keys()
    }

    /// Push the combination through a linear map on basis keys.
    pub fn map_linear<L: Ord + Clone>(&self, f: impl Fn(&K) -> Lin<L>) -> Lin<L> {
        let mut out = Lin::zero();
        for (k, c) in self.iter() {
            for (l, d) in f(k).iter() {
                out.add_term(l.clone(), c * d);
            }
        }
        out
    }

    /// Apply a linear form given on basis keys.
    pub fn pair(&self, f: impl Fn(&K) -> Scalar) -> Scalar {
        self.iter().map(|(k, c)| c * &f(k)).sum()
    }
}

impl<K: Ord + Clone> FromIterator<(K, Scalar)> for Lin<K> {
    fn from_iter<T: IntoIterator<Item = (K, Scalar)>>(iter: T) -> Self {
        let mut out = Lin::zero();
        for (k, c) in iter {
            out.add_term(k, c);
        }
        out
    }
}

/// Tensor product of two combinations.
pub fn tensor2<B: Ord + Clone>(a: &Elem<B>, b: &Elem<B>) -> Tensor2<B> {
    let mut out = Lin::zero();
    for (x, c) in a.iter() {
        for (y, d) in b.iter() {
            out.add_term((x.clone(), y.clone()), c * d);
        }
    }
    out
}

/// Swap the two legs of a 2-tensor.
pub fn swap_legs<B: Ord + Clone>(t: &Tensor2<B>) -> Tensor2<B> {
    t.iter()
        .map(|((l, r), c)| ((r.clone(), l.clone()), c.clone()))
        .collect()
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for Lin<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.iter() {
            let (sign, mag) = if c.is_negative() {
                ("-", c.abs())
            } else {
                ("+", c.clone())
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if mag.is_one() {
                write!(f, "{}", k)?;
            } else {
                write!(f, "{}·{}", mag.render(), k)?;
            }
        }
        Ok(())
    }
}
