//! Primitive BCH generator polynomials and the two cyclic constructions of
//! the five-weight code family.
//!
//! The generator of the code with designed distance delta and offset b is the
//! least common multiple of the minimal polynomials indexed by the window
//! b..=b+delta-2 (mod n). Minimal polynomials of distinct cyclotomic cosets
//! are coprime, so the lcm is the product over the distinct cosets hit by the
//! window.

use std::collections::BTreeSet;

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::field::{cyclotomic_coset, BinaryField};
use crate::poly::BinaryPoly;

/// Parameters of a primitive BCH code of length 2^m - 1.
///
/// `offset` is the starting exponent of the defining window (narrow-sense
/// codes use 1); the name avoids clashing with the block count of a design.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct BchSpec {
    pub m: u32,
    pub delta: u64,
    pub offset: u64,
}

impl BchSpec {
    pub fn n(&self) -> u64 {
        (1u64 << self.m) - 1
    }
}

/// The generator polynomial: product of the minimal polynomials of the
/// distinct cosets met by the exponent window. Divides x^n + 1.
pub fn bch_generator(spec: &BchSpec, field: &BinaryField) -> Result<BinaryPoly> {
    assert_eq!(field.m(), spec.m, "field and BCH spec must share m");
    let n = spec.n();
    if spec.delta < 2 || spec.delta > n {
        return Err(Error::DesignedDistanceTooSmall(spec.delta));
    }
    let mut leaders = BTreeSet::new();
    for i in 0..spec.delta - 1 {
        let exponent = (spec.offset + i) % n;
        leaders.insert(cyclotomic_coset(exponent, n)[0]);
    }
    let mut generator = BinaryPoly::one();
    for leader in leaders {
        generator = generator.mul(&field.minimal_polynomial(leader));
    }
    Ok(generator)
}

/// The cyclic code generated by g: rows x^i * g(x) for 0 <= i < n - deg g.
pub fn cyclic_code(n: usize, generator: &BinaryPoly) -> Result<LinearCode> {
    let deg = generator.degree().expect("nonzero generator");
    assert!(deg < n, "generator degree must be below the length");
    let k = n - deg;
    let support = generator.support();
    let mut rows = Vec::with_capacity(k);
    for shift in 0..k {
        let mut row = vec![0u64; n.div_ceil(64)];
        for &j in &support {
            let c = j + shift;
            row[c / 64] |= 1u64 << (c % 64);
        }
        rows.push(row);
    }
    LinearCode::new(n, rows)
}

/// The two constructions of the [2^m - 1, 3m] five-weight code.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CmVariant {
    /// BCH code with delta = 2^(m-1) - 1 - 2^((m+1)/2) and offset 0.
    Bch0,
    /// Dual of the narrow-sense BCH code with designed distance 7.
    DualNarrow7,
}

/// Builds the five-weight code of odd degree m >= 5, checking the 3m
/// dimension.
pub fn build_c_m(m: u32, variant: CmVariant, field: &BinaryField) -> Result<LinearCode> {
    if m % 2 == 0 {
        return Err(Error::EvenExtensionDegree(m));
    }
    if m < 5 {
        return Err(Error::DegreeOutOfRange(m));
    }
    assert_eq!(field.m(), m, "field and construction must share m");
    let n = (1usize << m) - 1;
    let code = match variant {
        CmVariant::Bch0 => {
            let delta = (1u64 << (m - 1)) - 1 - (1u64 << ((m + 1) / 2));
            let generator = bch_generator(&BchSpec { m, delta, offset: 0 }, field)?;
            cyclic_code(n, &generator)?
        }
        CmVariant::DualNarrow7 => {
            let generator = bch_generator(&BchSpec { m, delta: 7, offset: 1 }, field)?;
            cyclic_code(n, &generator)?.dual()?
        }
    };
    let expected = 3 * m as usize;
    if code.k() != expected {
        return Err(Error::DimensionCheckFailed { expected, got: code.k() });
    }
    Ok(code)
}
