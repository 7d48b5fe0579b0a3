//! CSS codes: hypergraph products, logical operators and failure tests.

mod distance;
mod fixtures;
#[rustfmt::skip]
mod fixtures_data;
mod io;
mod regular;

pub use distance::distance_upper_bound;
pub use fixtures::{base_matrix, fixture, FIXTURE_NAMES};
pub use io::{load_code, store_code, CodeSource};
pub use regular::{generate_regular_ldpc, girth, BaseCode, RegularLdpcOptions};

use crate::error::{Error, Result};
use crate::gf2::{BinaryMatrix, BinaryVector, XorBasis};

/// A CSS code given by its X and Z check matrices.
///
/// X errors are detected by the Z checks (`H_Z`), and a syndrome-free X error
/// is a logical failure when it anticommutes with some row of `logical_z`.
#[derive(Clone, Debug)]
pub struct CssCode {
    name: String,
    hx: BinaryMatrix,
    hz: BinaryMatrix,
    k: usize,
    logical_z: BinaryMatrix,
}

impl PartialEq for CssCode {
    fn eq(&self, other: &Self) -> bool {
        self.hx == other.hx && self.hz == other.hz
    }
}

impl Eq for CssCode {}

impl CssCode {
    /// Validates the commutation condition and derives `k` and a Z-logical basis.
    pub fn new(name: impl Into<String>, hx: BinaryMatrix, hz: BinaryMatrix) -> Result<Self> {
        if let Some((x_row, z_row)) = first_css_violation(&hx, &hz)? {
            return Err(Error::CssViolation { x_row, z_row });
        }
        let n = hx.cols();
        let k = n - hx.rank() - hz.rank();
        let logical_z = logical_basis_unchecked(&hx, &hz);
        debug_assert_eq!(logical_z.rows(), k);
        Ok(Self {
            name: name.into(),
            hx,
            hz,
            k,
            logical_z,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Number of physical qubits.
    pub fn n(&self) -> usize {
        self.hx.cols()
    }

    /// Number of logical qubits.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn hx(&self) -> &BinaryMatrix {
        &self.hx
    }

    pub fn hz(&self) -> &BinaryMatrix {
        &self.hz
    }

    /// Z-logical representatives, one per row.
    pub fn logical_z(&self) -> &BinaryMatrix {
        &self.logical_z
    }

    /// The same code with the roles of X and Z exchanged, so that the
    /// X-error machinery decodes Z errors.
    pub fn swapped(&self) -> CssCode {
        CssCode {
            name: format!("{}~zx", self.name),
            hx: self.hz.clone(),
            hz: self.hx.clone(),
            k: self.k,
            logical_z: logical_basis_unchecked(&self.hz, &self.hx),
        }
    }

    /// See [`is_logical_failure`].
    pub fn is_logical_failure(&self, v: &BinaryVector) -> Result<bool> {
        if v.len() != self.n() {
            return Err(Error::dims(format!(
                "length-{} vector on a {}-qubit code",
                v.len(),
                self.n()
            )));
        }
        let syndrome = self.hz.mat_vec(v)?;
        if let Some(&check) = syndrome.support().first() {
            return Err(Error::NonzeroSyndrome { check });
        }
        Ok(!self.logical_z.mat_vec(v)?.is_zero())
    }
}

/// Hypergraph product of `a` with itself:
/// `H_X = [A ⊗ I_nA | I_mA ⊗ Aᵀ]`, `H_Z = [I_nA ⊗ A | Aᵀ ⊗ I_mA]`.
pub fn hgp(a: &BinaryMatrix) -> Result<CssCode> {
    if a.is_zero() {
        return Err(Error::InvalidParameter(
            "hypergraph product of an all-zero matrix".into(),
        ));
    }
    let at = a.transpose();
    let i_n = BinaryMatrix::identity(a.cols());
    let i_m = BinaryMatrix::identity(a.rows());
    let hx = BinaryMatrix::hstack(&[&a.kron(&i_n), &i_m.kron(&at)])?;
    let hz = BinaryMatrix::hstack(&[&i_n.kron(a), &at.kron(&i_m)])?;
    let n = hx.cols();
    CssCode::new(format!("hgp_{n}"), hx, hz)
}

fn first_css_violation(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<Option<(usize, usize)>> {
    if hx.cols() != hz.cols() {
        return Err(Error::dims(format!(
            "H_X has {} columns, H_Z has {}",
            hx.cols(),
            hz.cols()
        )));
    }
    let product = hx.mul(&hz.transpose())?;
    Ok((0..product.rows())
        .find(|&i| !product.row(i).is_empty())
        .map(|i| (i, product.row(i)[0])))
}

/// True iff `H_X · H_Zᵀ = 0`.
pub fn validate_css(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<bool> {
    Ok(first_css_violation(hx, hz)?.is_none())
}

/// Vectors in `ker(H_X)` that complete `rowspace(H_Z)` to all of `ker(H_X)`.
pub fn logical_z_basis(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<BinaryMatrix> {
    if let Some((x_row, z_row)) = first_css_violation(hx, hz)? {
        return Err(Error::CssViolation { x_row, z_row });
    }
    Ok(logical_basis_unchecked(hx, hz))
}

/// X-logical representatives: [`logical_z_basis`] with the roles swapped.
pub fn logical_x_basis(hx: &BinaryMatrix, hz: &BinaryMatrix) -> Result<BinaryMatrix> {
    logical_z_basis(hz, hx)
}

fn logical_basis_unchecked(hx: &BinaryMatrix, hz: &BinaryMatrix) -> BinaryMatrix {
    let n = hx.cols();
    let mut span = XorBasis::new(n);
    for i in 0..hz.rows() {
        span.insert(&hz.row_vector(i));
    }
    let logicals: Vec<BinaryVector> = hx
        .kernel_basis()
        .into_iter()
        .filter(|v| span.insert(v))
        .collect();
    BinaryMatrix::from_rows(n, &logicals).expect("kernel vectors have length n")
}

/// True iff the syndrome-free X error `v` is a nontrivial logical operator.
pub fn is_logical_failure(code: &CssCode, v: &BinaryVector) -> Result<bool> {
    code.is_logical_failure(v)
}
