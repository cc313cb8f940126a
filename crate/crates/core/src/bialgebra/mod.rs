//! Coalgebras, bialgebras, coboundary cobrackets, tensor-placement products,
//! the APN Yang-Baxter equation, invariance, quasi-triangular, triangular
//! and factorizable structures, doubles, and the Rota-Baxter correspondence.
//!
//! 2-tensors are matrices with `s[i][j]` the coefficient of `eᵢ⊗eⱼ`; the
//! dual space uses the positional dual basis.

mod coalgebra;
mod factorizable;
mod ybe;

pub use coalgebra::*;
pub use factorizable::*;
pub use ybe::*;
