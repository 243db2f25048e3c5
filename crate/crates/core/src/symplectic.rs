//! Homology of a closed genus-`h` surface with its intersection form, and
//! the action of Dehn twists on it.
//!
//! Basis order is `a_1, b_1, ..., a_h, b_h` with `<a_i, b_i> = 1`, and the
//! pairing is `<x, y> = x^T J y` for `J` block-diagonal in `[[0, 1], [-1, 0]]`.
//! The right-handed twist along a curve of class `v` acts as
//! `x -> x + <x, v> v`.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg::{content, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    genus: usize,
    j: IntMatrix,
}

impl SymplecticForm {
    pub fn new(genus: usize) -> Result<Self> {
        if genus == 0 {
            return Err(Error::InvalidParameter("genus must be at least 1".into()));
        }
        let n = 2 * genus;
        let mut j = IntMatrix::zeros(n, n);
        for i in 0..genus {
            j.set(2 * i, 2 * i + 1, BigInt::from(1));
            j.set(2 * i + 1, 2 * i, BigInt::from(-1));
        }
        Ok(Self { genus, j })
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn dim(&self) -> usize {
        2 * self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.j
    }

    /// `<x, y> = x^T J y`, evaluated blockwise.
    pub fn pairing(&self, x: &[i64], y: &[i64]) -> i64 {
        (0..self.genus).map(|i| x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]).sum()
    }
}

/// An element of `Sp(2h, Z)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymplecticMatrix {
    genus: usize,
    m: IntMatrix,
}

impl SymplecticMatrix {
    /// Checks `M^T J M = J`.
    pub fn new(genus: usize, m: IntMatrix) -> Result<Self> {
        if !is_symplectic(&m, genus)? {
            return Err(Error::NotSymplectic);
        }
        Ok(Self { genus, m })
    }

    pub fn identity(genus: usize) -> Self {
        Self { genus, m: IntMatrix::identity(2 * genus) }
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.m
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.genus != rhs.genus {
            return Err(Error::GenusMismatch(self.genus, rhs.genus));
        }
        Ok(Self { genus: self.genus, m: &self.m * &rhs.m })
    }

    /// `M^{-1} = -J M^T J`.
    pub fn inverse(&self) -> Self {
        let j = standard_j(self.genus);
        let inv = -&(&(&j * &self.m.transpose()) * &j);
        Self { genus: self.genus, m: inv }
    }

    /// `[A, B] = A B A^{-1} B^{-1}`.
    pub fn commutator(&self, rhs: &Self) -> Result<Self> {
        self.mul(rhs)?.mul(&self.inverse())?.mul(&rhs.inverse())
    }

    pub fn conjugate_by(&self, g: &Self) -> Result<Self> {
        g.mul(self)?.mul(&g.inverse())
    }
}

fn standard_j(genus: usize) -> IntMatrix {
    SymplecticForm::new(genus.max(1)).expect("positive genus").j
}

/// Whether `m^T J m = J` for the standard form of genus `genus`.
pub fn is_symplectic(m: &IntMatrix, genus: usize) -> Result<bool> {
    if genus == 0 || m.rows() != 2 * genus || m.cols() != 2 * genus {
        return Err(Error::DimensionMismatch(format!(
            "expected a {0}x{0} matrix for genus {genus}, got {1}x{2}",
            2 * genus,
            m.rows(),
            m.cols()
        )));
    }
    let j = standard_j(genus);
    Ok(&(&m.transpose() * &j) * m == j)
}

/// Homology data of a vanishing cycle.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CurveClass {
    /// Primitive class in `H_1(F; Z)`, coordinates in the standard basis.
    Nonseparating(Vec<i64>),
    /// Separating curve cutting off a subsurface of the given genus.
    Separating(i64),
}

impl CurveClass {
    pub fn is_separating(&self) -> bool {
        matches!(self, CurveClass::Separating(_))
    }

    pub fn validate(&self, genus: usize) -> Result<()> {
        match self {
            CurveClass::Nonseparating(v) => {
                if v.len() != 2 * genus {
                    return Err(Error::VectorLength { expected: 2 * genus, got: v.len() });
                }
                if content(v) != 1 {
                    return Err(Error::NonPrimitiveVector(v.clone()));
                }
                Ok(())
            }
            CurveClass::Separating(k) => {
                let max = genus as i64 - 1;
                if *k < 1 || *k > max {
                    return Err(Error::SideGenusOutOfRange { side: *k, max });
                }
                Ok(())
            }
        }
    }
}

/// Action on homology of the right-handed Dehn twist along `c`.
///
/// Separating curves are null-homologous, so their twists act trivially.
pub fn transvection(form: &SymplecticForm, c: &CurveClass) -> Result<SymplecticMatrix> {
    c.validate(form.genus)?;
    let h = form.genus;
    match c {
        CurveClass::Separating(_) => Ok(SymplecticMatrix::identity(h)),
        CurveClass::Nonseparating(v) => {
            // T = I + v (J v)^T
            let n = 2 * h;
            let jv: Vec<i64> = (0..h).flat_map(|i| [v[2 * i + 1], -v[2 * i]]).collect();
            let mut m = IntMatrix::identity(n);
            for (r, &vr) in v.iter().enumerate() {
                if vr == 0 {
                    continue;
                }
                for (col, &w) in jv.iter().enumerate() {
                    if w != 0 {
                        let e = m.get(r, col) + BigInt::from(vr) * BigInt::from(w);
                        m.set(r, col, e);
                    }
                }
            }
            debug_assert!(is_symplectic(&m, h).unwrap_or(false));
            Ok(SymplecticMatrix { genus: h, m })
        }
    }
}

/// Homology classes of the standard chain `c_1, ..., c_{2h+1}`:
/// `c_{2i-1} = a_i - a_{i-1}`, `c_{2i} = b_i`, `c_{2h+1} = -a_h`.
pub fn chain_curves(genus: usize) -> Vec<CurveClass> {
    let n = 2 * genus;
    let mut out = Vec::with_capacity(n + 1);
    for i in 0..genus {
        let mut odd = vec![0; n];
        odd[2 * i] = 1;
        if i > 0 {
            odd[2 * (i - 1)] = -1;
        }
        out.push(CurveClass::Nonseparating(odd));
        let mut even = vec![0; n];
        even[2 * i + 1] = 1;
        out.push(CurveClass::Nonseparating(even));
    }
    let mut last = vec![0; n];
    if genus > 0 {
        last[n - 2] = -1;
    }
    out.push(CurveClass::Nonseparating(last));
    out
}
