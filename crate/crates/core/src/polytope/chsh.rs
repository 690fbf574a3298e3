//! CHSH correlator functionals on the two-setting, binary-outcome scenario.

use crate::behavior::{Behavior, Scalar};
use crate::error::{Error, Result};

/// Number of sign variants: one minus sign or three, over four correlators.
pub const CHSH_VARIANT_COUNT: usize = 8;

/// Correlator order within a variant: E(0,0), E(0,1), E(1,0), E(1,1).
const CELLS: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// Sign pattern of a variant. Variants 0..4 put the single minus sign on
/// correlator `k`; variants 4..8 put the single plus sign on correlator `k-4`.
pub fn variant_signs(variant: usize) -> Result<[i8; 4]> {
    if variant >= CHSH_VARIANT_COUNT {
        return Err(Error::Parameter(format!(
            "CHSH variant {variant} outside 0..{CHSH_VARIANT_COUNT}"
        )));
    }
    let mut signs = if variant < 4 { [1i8; 4] } else { [-1i8; 4] };
    signs[variant % 4] = -signs[variant % 4];
    Ok(signs)
}

fn require_two_two_two<T: Scalar>(b: &Behavior<T>) -> Result<()> {
    if !b.scenario().is_two_two_two() {
        return Err(Error::Shape(
            "CHSH requires two settings with two outcomes per party".into(),
        ));
    }
    Ok(())
}

/// `E(x,y) = sum_{a,b} (-1)^{a+b} p(a,b|x,y)` for binary outcomes.
pub fn correlator<T: Scalar>(b: &Behavior<T>, x: usize, y: usize) -> Result<T> {
    require_two_two_two(b)?;
    b.scenario().check_cell(x, y)?;
    let same = b.at(x, y, 0, 0).add(b.at(x, y, 1, 1));
    let diff = b.at(x, y, 0, 1).add(b.at(x, y, 1, 0));
    Ok(same.sub(&diff))
}

/// One signed correlator sum `S = ±E(0,0) ± E(0,1) ± E(1,0) ± E(1,1)`.
pub fn chsh_value<T: Scalar>(b: &Behavior<T>, variant: usize) -> Result<T> {
    require_two_two_two(b)?;
    let signs = variant_signs(variant)?;
    let mut s = T::zero();
    for (k, &(x, y)) in CELLS.iter().enumerate() {
        let e = correlator(b, x, y)?;
        s = if signs[k] > 0 { s.add(&e) } else { s.sub(&e) };
    }
    Ok(s)
}

/// All eight signed correlator sums, their maximum, and the lowest variant
/// index attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct ChshReport<T> {
    pub values: Vec<T>,
    pub max: T,
    pub argmax: usize,
}

pub fn chsh_all_variants<T: Scalar>(b: &Behavior<T>) -> Result<ChshReport<T>> {
    require_two_two_two(b)?;
    let values: Vec<T> = (0..CHSH_VARIANT_COUNT)
        .map(|v| chsh_value(b, v))
        .collect::<Result<_>>()?;
    let mut argmax = 0;
    for (i, v) in values.iter().enumerate() {
        if *v > values[argmax] {
            argmax = i;
        }
    }
    Ok(ChshReport {
        max: values[argmax].clone(),
        values,
        argmax,
    })
}
