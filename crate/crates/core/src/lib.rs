//! Exact-arithmetic engine for double bialgebras — a product and two
//! cointeracting coproducts — instantiated on graphs and on quasishuffle word
//! algebras, with convolution calculus, antipodes, the eulerian idempotent,
//! chromatic polynomials, and morphisms to `K[X]` and **QSym**.

pub mod carrier;
pub mod engine;
pub mod graph;
pub mod linear;
pub mod morphisms;
pub mod oracles;
pub mod orient;
pub mod poly;
pub mod scalar;
pub mod word;

pub use carrier::{Carrier, GraphAlgebra, PolyAlgebra, WordAlgebra};
pub use linear::{Elem, Lin, Tensor2, Tensor3, TensorN};
pub use poly::Poly;
pub use scalar::Scalar;
