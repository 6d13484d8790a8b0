//! Exact and numeric kernels for two toric K3 mirror families.
//!
//! Everything here is pure and allocation-only: integral lattices and their
//! isometries, lattice polytopes with regular triangulations and rank-2
//! secondary fans, Gale duality and A-discriminants, hypergeometric period
//! series, numerical Grothendieck lattices with tensor monodromy, and the
//! arithmetic models of the two moduli spaces.
//!
//! IO, file formats and the command line live in the `k3lab` crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod cases;
pub mod exactcore;
pub mod galedisc;
pub mod lattice;
pub mod modular;
pub mod monodromy;
pub mod periods;
pub mod polytope;

pub use exactcore::{BigRat, IntMat, Matrix, Quad5, RatMat, Signature};

/// The two worked families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Case {
    A0,
    A1,
}

impl Case {
    pub const ALL: [Case; 2] = [Case::A0, Case::A1];

    pub fn name(self) -> &'static str {
        match self {
            Case::A0 => "A0",
            Case::A1 => "A1",
        }
    }
}

impl core::str::FromStr for Case {
    type Err = alloc::string::String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A0" | "a0" => Ok(Case::A0),
            "A1" | "a1" => Ok(Case::A1),
            other => Err(alloc::format!("unknown case {other:?}")),
        }
    }
}

impl core::fmt::Display for Case {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.name())
    }
}
