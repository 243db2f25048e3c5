//! The Meyer signature cocycle on `Sp(2h, Z)`.
//!
//! For symplectic `A`, `B` let
//!
//! ```text
//! V = { (x, y) in Q^2h x Q^2h : (A^-1 - I) x + (B - I) y = 0 }
//! ```
//!
//! and equip it with the bilinear form `((x1, y1), (x2, y2)) -> (x1 + y1)^T J (B - I) y2`.
//! `tau(A, B)` is the signature of the symmetrization of this form.
//!
//! The orientation of the form is chosen together with the twist convention
//! of [`crate::symplectic`] so that a positive Lefschetz fibration over the
//! disk picks up signature `-sum tau`; with these conventions the elliptic
//! word `(c1 c2)^6` has signature `-8`.

use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{dot, kernel_basis, signature_of_symmetric, IntMatrix, RatMatrix, SignatureTriple};
use crate::symplectic::{SymplecticForm, SymplecticMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MeyerValue {
    /// `tau(A, B)`.
    pub value: i64,
    /// Dimension of `V_{A,B}`.
    pub dim: usize,
    /// Inertia of the symmetrized form on `V_{A,B}`.
    pub inertia: SignatureTriple,
}

impl MeyerValue {
    fn zero(dim: usize) -> Self {
        Self { value: 0, dim, inertia: SignatureTriple { pos: 0, zero: dim, neg: 0 } }
    }
}

pub fn meyer_cocycle(a: &SymplecticMatrix, b: &SymplecticMatrix) -> Result<MeyerValue> {
    let h = a.genus();
    if b.genus() != h {
        return Err(Error::GenusMismatch(h, b.genus()));
    }
    let n = 2 * h;
    // Either factor trivial makes the form vanish identically.
    if a.is_identity() {
        let b_minus = (b.matrix() - &IntMatrix::identity(n)).to_rational();
        return Ok(MeyerValue::zero(n + n - b_minus.rank()));
    }
    if b.is_identity() {
        let a_minus = (a.inverse().matrix() - &IntMatrix::identity(n)).to_rational();
        return Ok(MeyerValue::zero(n + n - a_minus.rank()));
    }

    let id = IntMatrix::identity(n);
    let a_inv_minus = a.inverse().matrix() - &id;
    let b_minus = b.matrix() - &id;

    let mut block = RatMatrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            block.set(r, c, BigRational::from_integer(a_inv_minus.get(r, c).clone()));
            block.set(r, n + c, BigRational::from_integer(b_minus.get(r, c).clone()));
        }
    }
    let basis = kernel_basis(&block);
    let dim = basis.len();

    let j = SymplecticForm::new(h)?.matrix().clone();
    let w = (&j * &b_minus).to_rational();
    // left factor x + y, right factor J (B - I) y
    let left: Vec<Vec<BigRational>> = basis.iter().map(|v| (0..n).map(|i| &v[i] + &v[n + i]).collect()).collect();
    let right: Vec<Vec<BigRational>> = basis.iter().map(|v| w.apply(&v[n..])).collect();

    let mut sym = RatMatrix::zeros(dim, dim);
    for i in 0..dim {
        for k in i..dim {
            let e = dot(&left[i], &right[k]) + dot(&left[k], &right[i]);
            if !e.is_zero() {
                sym.set(i, k, e.clone());
                sym.set(k, i, e);
            }
        }
    }
    let inertia = signature_of_symmetric(&sym)?;
    let value = inertia.signature();
    debug_assert!(value.unsigned_abs() as usize <= n);
    Ok(MeyerValue { value, dim, inertia })
}

/// Checks `tau(A, B) + tau(AB, C) = tau(A, BC) + tau(B, C)`.
pub fn meyer_cocycle_identity_check(a: &SymplecticMatrix, b: &SymplecticMatrix, c: &SymplecticMatrix) -> Result<bool> {
    if b.genus() != a.genus() {
        return Err(Error::GenusMismatch(a.genus(), b.genus()));
    }
    if c.genus() != a.genus() {
        return Err(Error::GenusMismatch(a.genus(), c.genus()));
    }
    let ab = a.mul(b)?;
    let bc = b.mul(c)?;
    let lhs = meyer_cocycle(a, b)?.value + meyer_cocycle(&ab, c)?.value;
    let rhs = meyer_cocycle(a, &bc)?.value + meyer_cocycle(b, c)?.value;
    Ok(lhs == rhs)
}
