//! Exact determinization of stochastic local models.
//!
//! Every stochastic component is replaced by a mixture of deterministic ones
//! without changing the generated behavior. Each party's response rows are cut
//! into half-open intervals of `[0, 1)` at the cumulative-probability
//! breakpoints of all settings; on each interval the response to every setting
//! is a fixed outcome, so the pair of intervals (one per party) indexes a
//! deterministic component whose weight is the original weight times the two
//! interval lengths.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::model::{Component, LocalModel};
use crate::rational::Rational;

/// A half-open interval `[lower, upper)` of the auxiliary unit variable,
/// together with the outcome it selects for every setting.
#[derive(Debug, Clone, PartialEq)]
pub struct IntervalAtom {
    pub lower: Rational,
    pub upper: Rational,
    /// `assignment[s]` is the outcome chosen for setting `s` on this interval.
    pub assignment: Vec<usize>,
}

impl IntervalAtom {
    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }
}

/// Sorted, deduplicated union over settings of all cumulative sums of one
/// party's response table, including 0 and 1. Consecutive pairs delimit the
/// atoms of `[0, 1)`.
pub fn breakpoints(response_table: &[Vec<Rational>]) -> Vec<Rational> {
    let orderings: Vec<Vec<usize>> = response_table
        .iter()
        .map(|row| (0..row.len()).collect())
        .collect();
    breakpoints_ordered(response_table, &orderings)
}

fn breakpoints_ordered(response_table: &[Vec<Rational>], orderings: &[Vec<usize>]) -> Vec<Rational> {
    let mut points = BTreeSet::new();
    points.insert(Rational::zero());
    for (row, order) in response_table.iter().zip(orderings) {
        let mut cum = Rational::zero();
        for &outcome in order {
            cum = cum + row[outcome].clone();
            points.insert(cum.clone());
        }
    }
    points.into_iter().collect()
}

/// Cuts `[0, 1)` into atoms for one party and records, per setting, which
/// outcome's cumulative interval contains each atom.
fn party_atoms(response_table: &[Vec<Rational>], orderings: &[Vec<usize>]) -> Vec<IntervalAtom> {
    let points = breakpoints_ordered(response_table, orderings);
    points
        .windows(2)
        .map(|w| {
            let (lower, upper) = (w[0].clone(), w[1].clone());
            let assignment = response_table
                .iter()
                .zip(orderings)
                .map(|(row, order)| {
                    let mut cum = Rational::zero();
                    for &outcome in order {
                        cum = cum + row[outcome].clone();
                        if cum > lower {
                            return outcome;
                        }
                    }
                    unreachable!("row sums to 1 and atom lower bound is below 1")
                })
                .collect();
            IntervalAtom {
                lower,
                upper,
                assignment,
            }
        })
        .collect()
}

fn one_hot(len: usize, hot: usize) -> Vec<Rational> {
    (0..len)
        .map(|i| if i == hot { Rational::one() } else { Rational::zero() })
        .collect()
}

/// Replaces every component of a valid model by deterministic ones with the
/// same behavior, exactly.
pub fn determinize(m: &LocalModel) -> Result<LocalModel> {
    let identity_a: Vec<Vec<usize>> = m
        .scenario()
        .alice_outcome_counts()
        .iter()
        .map(|&n| (0..n).collect())
        .collect();
    let identity_b: Vec<Vec<usize>> = m
        .scenario()
        .bob_outcome_counts()
        .iter()
        .map(|&n| (0..n).collect())
        .collect();
    determinize_with_orderings(m, &identity_a, &identity_b)
}

/// Determinization with explicit per-setting outcome orderings.
///
/// The orderings fix the cumulation order of each response row. Different
/// orderings may produce different component lists, but never a different
/// behavior. Exposed for ordering-sensitivity tests; `determinize` uses the
/// canonical stored order.
pub(crate) fn determinize_with_orderings(
    m: &LocalModel,
    alice_orderings: &[Vec<usize>],
    bob_orderings: &[Vec<usize>],
) -> Result<LocalModel> {
    let report = m.validate();
    if !report.ok() {
        return Err(Error::Invariant(report.violations.join("; ")));
    }

    let mut components = Vec::new();
    for comp in m.components() {
        let alice_atoms = party_atoms(&comp.alice, alice_orderings);
        let bob_atoms = party_atoms(&comp.bob, bob_orderings);
        for a_atom in &alice_atoms {
            for b_atom in &bob_atoms {
                let weight = &(&comp.weight * &a_atom.width()) * &b_atom.width();
                if weight.is_zero() {
                    continue;
                }
                components.push(Component {
                    weight,
                    alice: a_atom
                        .assignment
                        .iter()
                        .enumerate()
                        .map(|(x, &a)| one_hot(m.scenario().alice_outcomes(x), a))
                        .collect(),
                    bob: b_atom
                        .assignment
                        .iter()
                        .enumerate()
                        .map(|(y, &b)| one_hot(m.scenario().bob_outcomes(y), b))
                        .collect(),
                });
            }
        }
    }
    LocalModel::new(m.scenario().clone(), components)
}
