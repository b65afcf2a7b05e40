//! Sublattices, saturation and quotient lattices.
//!
//! A sublattice is stored by an independent basis. `<sigma>` for a cone
//! sigma is always taken to be the saturation of the integer span of its
//! ray generators, so quotients are genuine lattices; torsion enters only
//! through stacky data.

use num::traits::{One, Zero};
use thiserror::Error;

use crate::matrix::IntMatrix;
use crate::rational::Int;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("generator length {got} does not match ambient rank {ambient}")]
    AmbientMismatch { ambient: usize, got: usize },
    #[error("sublattice is not saturated; saturate first")]
    NotSaturated,
}

/// A sublattice of `Z^ambient_rank`, spanned by the columns of `basis`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sublattice {
    ambient_rank: usize,
    basis: IntMatrix,
    saturated: bool,
}

impl Sublattice {
    /// Builds the sublattice generated by the given vectors. Dependent
    /// generators are reduced to an independent basis of the same lattice.
    pub fn from_generators(
        ambient_rank: usize,
        generators: &[Vec<Int>],
    ) -> Result<Sublattice, LatticeError> {
        for g in generators {
            if g.len() != ambient_rank {
                return Err(LatticeError::AmbientMismatch {
                    ambient: ambient_rank,
                    got: g.len(),
                });
            }
        }
        let b = IntMatrix::from_cols(ambient_rank, generators);
        let snf = b.snf();
        let r = snf.rank();
        // Columns of b*v = u_inv*s; the first r of them form a basis.
        let bv = b.mul(&snf.v);
        let basis = bv.col_block(0, r);
        let saturated = snf.diagonal().iter().take(r).all(One::is_one);
        Ok(Sublattice {
            ambient_rank,
            basis,
            saturated,
        })
    }

    pub fn from_basis_matrix(basis: IntMatrix) -> Sublattice {
        let ambient_rank = basis.rows();
        let snf = basis.snf();
        assert_eq!(snf.rank(), basis.cols(), "basis columns must be independent");
        let saturated = snf.diagonal().iter().all(One::is_one);
        Sublattice {
            ambient_rank,
            basis,
            saturated,
        }
    }

    pub fn zero(ambient_rank: usize) -> Sublattice {
        Sublattice {
            ambient_rank,
            basis: IntMatrix::zero(ambient_rank, 0),
            saturated: true,
        }
    }

    pub fn ambient_rank(&self) -> usize {
        self.ambient_rank
    }

    pub fn rank(&self) -> usize {
        self.basis.cols()
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Int>> {
        self.basis.columns()
    }

    pub fn is_saturated(&self) -> bool {
        self.saturated
    }

    /// Smallest saturated sublattice containing this one (same rational
    /// span, torsion-free quotient).
    pub fn saturate(&self) -> Sublattice {
        if self.saturated {
            return self.clone();
        }
        let snf = self.basis.snf();
        let r = snf.rank();
        // basis * v = u_inv * s, so the rational span is that of the first
        // r columns of u_inv; those columns are a saturated basis.
        let basis = snf.u_inv.col_block(0, r);
        Sublattice {
            ambient_rank: self.ambient_rank,
            basis,
            saturated: true,
        }
    }

    /// Membership of an integer vector.
    pub fn contains(&self, v: &[Int]) -> bool {
        if v.len() != self.ambient_rank {
            return false;
        }
        if self.rank() == 0 {
            return v.iter().all(Zero::is_zero);
        }
        self.basis.solve(v).is_some()
    }

    /// Equality of saturated sublattices: identical rational spans.
    pub fn eq_saturated(&self, other: &Sublattice) -> bool {
        debug_assert!(self.saturated && other.saturated);
        self.ambient_rank == other.ambient_rank
            && self.rank() == other.rank()
            && other.basis_vectors().iter().all(|v| self.contains(v))
            && self.basis_vectors().iter().all(|v| other.contains(v))
    }
}

/// Quotient `Z^ambient / L` for a saturated sublattice `L`: the quotient
/// rank together with a surjective projection whose kernel is exactly `L`.
pub fn quotient_lattice(
    ambient_rank: usize,
    l: &Sublattice,
    strict: bool,
) -> Result<(usize, IntMatrix), LatticeError> {
    if l.ambient_rank() != ambient_rank {
        return Err(LatticeError::AmbientMismatch {
            ambient: ambient_rank,
            got: l.ambient_rank(),
        });
    }
    let l = if l.is_saturated() {
        l.clone()
    } else if strict {
        return Err(LatticeError::NotSaturated);
    } else {
        l.saturate()
    };
    let k = l.rank();
    if k == 0 {
        return Ok((ambient_rank, IntMatrix::identity(ambient_rank)));
    }
    let snf = l.basis().snf();
    debug_assert!(snf.diagonal().iter().all(One::is_one));
    // Rows k..n of u annihilate the basis and extend to a basis of the
    // dual, hence give a surjection with kernel exactly L.
    let projection = snf.u.row_block(k, ambient_rank);
    Ok((ambient_rank - k, projection))
}
