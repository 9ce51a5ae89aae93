//! Computes the minimal period length of a product polarization.

use nalgebra::DMatrix;
use seshadri::{lattice, PolarizationType, SiegelPoint};

fn main() -> seshadri::Result<()> {
    let d = PolarizationType::new(&[1, 2])?;
    let z = SiegelPoint::purely_imaginary(DMatrix::identity(2, 2))?;
    let result = lattice::minimal_period_length(&z, &d)?;
    println!("m = {}, witness = {:?}", result.value, result.witness);
    Ok(())
}
