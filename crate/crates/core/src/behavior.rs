//! Behavior tables `p(a,b|x,y)` in exact-rational or binary64 form.

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scenario::Scenario;

/// Negative entries below this magnitude invalidate a float behavior.
pub const FLOAT_NEGATIVITY_TOL: f64 = 1e-12;
/// Allowed drift of a float behavior's per-cell normalization.
pub const FLOAT_NORMALIZATION_TOL: f64 = 1e-9;

/// Probability carrier: exact rationals or binary64 floats.
pub trait Scalar: Clone + PartialEq + PartialOrd + std::fmt::Debug {
    /// True when arithmetic in this type is exact.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn abs(&self) -> Self;
    fn from_rational(r: &Rational) -> Self;
    fn is_finite(&self) -> bool;
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        Rational::abs(self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_finite(&self) -> bool {
        true
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn abs(&self) -> Self {
        f64::abs(*self)
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn is_finite(&self) -> bool {
        f64::is_finite(*self)
    }
}

/// The full conditional joint distribution table, indexed `[x][y][a][b]`.
///
/// Construction only enforces the table shape; numeric invariants
/// (nonnegativity, per-cell normalization) are checked by [`Behavior::validate`]
/// so that malformed inputs can be diagnosed rather than rejected opaquely.
#[derive(Debug, Clone, PartialEq)]
pub struct Behavior<T> {
    scenario: Scenario,
    entries: Vec<Vec<Vec<Vec<T>>>>,
}

pub type ExactBehavior = Behavior<Rational>;
pub type FloatBehavior = Behavior<f64>;

/// Exact or float behavior, for interfaces that accept either.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyBehavior {
    Exact(ExactBehavior),
    Float(FloatBehavior),
}

/// Outcome of [`Behavior::validate`]: `ok` iff `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<String>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl<T: Scalar> Behavior<T> {
    /// Builds a behavior from a nested table, checking shape against the scenario.
    pub fn new(scenario: Scenario, entries: Vec<Vec<Vec<Vec<T>>>>) -> Result<Self> {
        if entries.len() != scenario.alice_settings() {
            return Err(Error::Shape(format!(
                "expected {} x-slices, got {}",
                scenario.alice_settings(),
                entries.len()
            )));
        }
        for (x, per_y) in entries.iter().enumerate() {
            if per_y.len() != scenario.bob_settings() {
                return Err(Error::Shape(format!(
                    "expected {} y-slices at x={x}, got {}",
                    scenario.bob_settings(),
                    per_y.len()
                )));
            }
            for (y, cell) in per_y.iter().enumerate() {
                if cell.len() != scenario.alice_outcomes(x) {
                    return Err(Error::Shape(format!(
                        "expected {} a-rows at (x={x}, y={y}), got {}",
                        scenario.alice_outcomes(x),
                        cell.len()
                    )));
                }
                for (a, row) in cell.iter().enumerate() {
                    if row.len() != scenario.bob_outcomes(y) {
                        return Err(Error::Shape(format!(
                            "expected {} b-entries at (x={x}, y={y}, a={a}), got {}",
                            scenario.bob_outcomes(y),
                            row.len()
                        )));
                    }
                }
            }
        }
        Ok(Behavior { scenario, entries })
    }

    /// Builds the table by evaluating `f(x, y, a, b)`.
    pub fn from_fn(scenario: Scenario, mut f: impl FnMut(usize, usize, usize, usize) -> T) -> Self {
        let entries = (0..scenario.alice_settings())
            .map(|x| {
                (0..scenario.bob_settings())
                    .map(|y| {
                        (0..scenario.alice_outcomes(x))
                            .map(|a| {
                                (0..scenario.bob_outcomes(y)).map(|b| f(x, y, a, b)).collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Behavior { scenario, entries }
    }

    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    pub fn at(&self, x: usize, y: usize, a: usize, b: usize) -> &T {
        &self.entries[x][y][a][b]
    }

    pub fn entries(&self) -> &Vec<Vec<Vec<Vec<T>>>> {
        &self.entries
    }

    /// Checks nonnegativity (within `neg_tol`) and per-cell normalization
    /// (within `sum_tol`), reporting every violation with its location.
    pub fn validate_with(&self, neg_tol: &T, sum_tol: &T) -> ValidationReport {
        let mut violations = Vec::new();
        for x in 0..self.scenario.alice_settings() {
            for y in 0..self.scenario.bob_settings() {
                let mut sum = T::zero();
                for a in 0..self.scenario.alice_outcomes(x) {
                    for b in 0..self.scenario.bob_outcomes(y) {
                        let p = self.at(x, y, a, b);
                        if !p.is_finite() {
                            violations.push(format!(
                                "non-finite entry at (x={x}, y={y}, a={a}, b={b})"
                            ));
                            continue;
                        }
                        if *p < neg_tol.neg() {
                            violations.push(format!(
                                "negative entry {p:?} at (x={x}, y={y}, a={a}, b={b})"
                            ));
                        }
                        sum = sum.add(p);
                    }
                }
                if sum.sub(&T::one()).abs() > *sum_tol {
                    violations.push(format!("sum {sum:?} != 1 at (x={x}, y={y})"));
                }
            }
        }
        ValidationReport { violations }
    }

    /// Alice's outcome distribution at `(x, y)`: sums the cell over `b`.
    pub fn marginal_alice(&self, x: usize, y: usize) -> Result<Vec<T>> {
        self.scenario.check_cell(x, y)?;
        Ok((0..self.scenario.alice_outcomes(x))
            .map(|a| {
                (0..self.scenario.bob_outcomes(y))
                    .fold(T::zero(), |acc, b| acc.add(self.at(x, y, a, b)))
            })
            .collect())
    }

    /// Bob's outcome distribution at `(x, y)`: sums the cell over `a`.
    pub fn marginal_bob(&self, x: usize, y: usize) -> Result<Vec<T>> {
        self.scenario.check_cell(x, y)?;
        Ok((0..self.scenario.bob_outcomes(y))
            .map(|b| {
                (0..self.scenario.alice_outcomes(x))
                    .fold(T::zero(), |acc, a| acc.add(self.at(x, y, a, b)))
            })
            .collect())
    }

    /// The same behavior with the parties exchanged:
    /// `p'(a,b|x,y) = p(b,a|y,x)`.
    pub fn swap_parties(&self) -> Self {
        Behavior::from_fn(self.scenario.swapped(), |x, y, a, b| {
            self.at(y, x, b, a).clone()
        })
    }

    /// Relabels Alice's settings: new setting `x` is old `perm[x]`.
    pub fn permute_alice_settings(&self, perm: &[usize]) -> Result<Self> {
        let counts: Vec<usize> = perm
            .iter()
            .map(|&x| self.scenario.alice_outcomes(x))
            .collect();
        let scenario = Scenario::new(counts, self.scenario.bob_outcome_counts().to_vec())?;
        Ok(Behavior::from_fn(scenario, |x, y, a, b| {
            self.at(perm[x], y, a, b).clone()
        }))
    }

    /// Relabels Bob's settings: new setting `y` is old `perm[y]`.
    pub fn permute_bob_settings(&self, perm: &[usize]) -> Result<Self> {
        let counts: Vec<usize> = perm
            .iter()
            .map(|&y| self.scenario.bob_outcomes(y))
            .collect();
        let scenario = Scenario::new(self.scenario.alice_outcome_counts().to_vec(), counts)?;
        Ok(Behavior::from_fn(scenario, |x, y, a, b| {
            self.at(x, perm[y], a, b).clone()
        }))
    }

    /// Relabels Alice's outcomes at setting `x`: new outcome `a` is old `perm[a]`.
    pub fn permute_alice_outcomes(&self, x: usize, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.scenario.alice_outcomes(x) {
            return Err(Error::Parameter(format!(
                "permutation length {} != outcome count {}",
                perm.len(),
                self.scenario.alice_outcomes(x)
            )));
        }
        Ok(Behavior::from_fn(self.scenario.clone(), |xx, y, a, b| {
            let aa = if xx == x { perm[a] } else { a };
            self.at(xx, y, aa, b).clone()
        }))
    }

    /// Relabels Bob's outcomes at setting `y`: new outcome `b` is old `perm[b]`.
    pub fn permute_bob_outcomes(&self, y: usize, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.scenario.bob_outcomes(y) {
            return Err(Error::Parameter(format!(
                "permutation length {} != outcome count {}",
                perm.len(),
                self.scenario.bob_outcomes(y)
            )));
        }
        Ok(Behavior::from_fn(self.scenario.clone(), |x, yy, a, b| {
            let bb = if yy == y { perm[b] } else { b };
            self.at(x, yy, a, bb).clone()
        }))
    }
}

impl ExactBehavior {
    /// Exact-mode validation: nonnegativity and normalization must hold exactly.
    pub fn validate(&self) -> ValidationReport {
        self.validate_with(&Rational::zero(), &Rational::zero())
    }

    /// Uniform behavior: each cell spreads mass evenly over its outcome pairs.
    pub fn uniform(scenario: Scenario) -> Self {
        let counts: Vec<Vec<i64>> = (0..scenario.alice_settings())
            .map(|x| {
                (0..scenario.bob_settings())
                    .map(|y| (scenario.alice_outcomes(x) * scenario.bob_outcomes(y)) as i64)
                    .collect()
            })
            .collect();
        Behavior::from_fn(scenario, |x, y, _, _| Rational::ratio(1, counts[x][y]))
    }

    /// Nearest float behavior, entrywise.
    pub fn to_float(&self) -> FloatBehavior {
        Behavior::from_fn(self.scenario.clone(), |x, y, a, b| {
            self.at(x, y, a, b).to_f64()
        })
    }
}

impl FloatBehavior {
    /// Float-mode validation with the module tolerances.
    pub fn validate(&self) -> ValidationReport {
        self.validate_with(&FLOAT_NEGATIVITY_TOL, &FLOAT_NORMALIZATION_TOL)
    }

    /// Entrywise continued-fraction rationalization with a denominator cap.
    pub fn rationalize(&self, max_denom: u64) -> Result<ExactBehavior> {
        let mut entries = Vec::with_capacity(self.scenario.alice_settings());
        for x in 0..self.scenario.alice_settings() {
            let mut per_y = Vec::with_capacity(self.scenario.bob_settings());
            for y in 0..self.scenario.bob_settings() {
                let mut cell = Vec::with_capacity(self.scenario.alice_outcomes(x));
                for a in 0..self.scenario.alice_outcomes(x) {
                    let mut row = Vec::with_capacity(self.scenario.bob_outcomes(y));
                    for b in 0..self.scenario.bob_outcomes(y) {
                        row.push(Rational::approximate_f64(*self.at(x, y, a, b), max_denom)?);
                    }
                    cell.push(row);
                }
                per_y.push(cell);
            }
            entries.push(per_y);
        }
        Behavior::new(self.scenario.clone(), entries)
    }
}

impl AnyBehavior {
    pub fn scenario(&self) -> &Scenario {
        match self {
            AnyBehavior::Exact(b) => b.scenario(),
            AnyBehavior::Float(b) => b.scenario(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            AnyBehavior::Exact(b) => b.validate(),
            AnyBehavior::Float(b) => b.validate(),
        }
    }
}
