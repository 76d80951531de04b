//! Interned polynomial variables with a fixed global ordering.
//!
//! The order of the enum variants is the canonical term order used for
//! serialization: `so`-coordinates, then vector coordinates, then deformation
//! parameters, then auxiliary families (diagonal eigenvalue variables, their
//! squares, and slice coordinates). Variables are self-describing, so no
//! global interning table is needed and the ordering is stable across runs.

use alloc::string::String;
use core::fmt;

/// A polynomial variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Var {
    /// Coordinate of a generic `so_N` matrix at representative entry `(i, j)`
    /// (1-based). Printed `a_i_j`.
    So(u16, u16),
    /// Coordinate of a generic vector in `V_N` (1-based). Printed `x_i`.
    V(u16),
    /// Coordinate of a second generic vector. Printed `y_i`.
    W(u16),
    /// Deformation parameter, 0-based. Printed `z0`, `z1`, ...
    Zeta(u16),
    /// Diagonal eigenvalue variable (1-based). Printed `l_q`.
    Lambda(u16),
    /// Square of a diagonal eigenvalue variable (1-based). Printed `u_q`.
    LambdaSq(u16),
    /// Slodowy slice coordinate, 0-based. Printed `c_k`.
    Slice(u16),
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::So(i, j) => write!(f, "a_{i}_{j}"),
            Var::V(i) => write!(f, "x_{i}"),
            Var::W(i) => write!(f, "y_{i}"),
            Var::Zeta(j) => write!(f, "z{j}"),
            Var::Lambda(q) => write!(f, "l_{q}"),
            Var::LambdaSq(q) => write!(f, "u_{q}"),
            Var::Slice(k) => write!(f, "c_{k}"),
        }
    }
}

impl Var {
    pub fn name(&self) -> String {
        use alloc::string::ToString;
        self.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn global_order() {
        assert!(Var::So(9, 9) < Var::V(1));
        assert!(Var::V(9) < Var::W(1));
        assert!(Var::W(9) < Var::Zeta(0));
        assert!(Var::Zeta(9) < Var::Lambda(1));
    }
}
