use super::fixtures_data::*;
use super::{hgp, CssCode};
use crate::error::{Error, Result};
use crate::gf2::BinaryMatrix;

/// Registered fixture names; each is the hypergraph product of a (3,4)-regular base matrix.
pub const FIXTURE_NAMES: [&str; 5] = ["hgp_625", "hgp_900", "hgp_1225", "hgp_1600", "hgp_2500"];

fn rows_for(name: &str) -> Result<&'static [&'static str]> {
    Ok(match name {
        "hgp_625" => BASE_625,
        "hgp_900" => BASE_900,
        "hgp_1225" => BASE_1225,
        "hgp_1600" => BASE_1600,
        "hgp_2500" => BASE_2500,
        _ => return Err(Error::UnknownFixture(name.to_string())),
    })
}

/// Base matrix `A` of a fixture.
pub fn base_matrix(name: &str) -> Result<BinaryMatrix> {
    let dense: Vec<Vec<u8>> = rows_for(name)?
        .iter()
        .map(|row| row.bytes().map(|b| b - b'0').collect())
        .collect();
    BinaryMatrix::from_dense(&dense)
}

/// The hypergraph-product code registered under `name`.
pub fn fixture(name: &str) -> Result<CssCode> {
    Ok(hgp(&base_matrix(name)?)?.with_name(name))
}
