//! Finite-mixture local models and the behavior they generate.
//!
//! A `LocalModel` is a finite mixture over hidden components: each component
//! carries a weight and independent per-party response tables `p(a|x)` and
//! `p(b|y)`. The generated behavior is the weighted product-sum
//! `p(a,b|x,y) = sum_k w_k * p(a|x,k) * p(b|y,k)`, evaluated exactly.

use crate::behavior::{Behavior, ExactBehavior, ValidationReport};
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::scenario::Scenario;

/// One hidden component: a weight and per-party response tables.
///
/// `alice[x][a]` is the probability of outcome `a` for setting `x`;
/// `bob[y][b]` likewise.
#[derive(Debug, Clone, PartialEq)]
pub struct Component {
    pub weight: Rational,
    pub alice: Vec<Vec<Rational>>,
    pub bob: Vec<Vec<Rational>>,
}

/// A finite mixture of product response tables.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalModel {
    scenario: Scenario,
    components: Vec<Component>,
}

impl LocalModel {
    /// Builds a model, checking table shapes against the scenario.
    ///
    /// Numeric invariants (weight and row normalization) are left to
    /// [`LocalModel::validate`] so malformed inputs can be reported in full.
    pub fn new(scenario: Scenario, components: Vec<Component>) -> Result<Self> {
        for (k, comp) in components.iter().enumerate() {
            for (party, table, settings) in [
                ("alice", &comp.alice, scenario.alice_settings()),
                ("bob", &comp.bob, scenario.bob_settings()),
            ] {
                if table.len() != settings {
                    return Err(Error::Shape(format!(
                        "component {k}: expected {settings} {party} rows, got {}",
                        table.len()
                    )));
                }
            }
            for (x, row) in comp.alice.iter().enumerate() {
                if row.len() != scenario.alice_outcomes(x) {
                    return Err(Error::Shape(format!(
                        "component {k}: alice row x={x} has {} entries, expected {}",
                        row.len(),
                        scenario.alice_outcomes(x)
                    )));
                }
            }
            for (y, row) in comp.bob.iter().enumerate() {
                if row.len() != scenario.bob_outcomes(y) {
                    return Err(Error::Shape(format!(
                        "component {k}: bob row y={y} has {} entries, expected {}",
                        row.len(),
                        scenario.bob_outcomes(y)
                    )));
                }
            }
        }
        Ok(LocalModel {
            scenario,
            components,
        })
    }

    pub fn scenario(&self) -> &Scenario {
        &self.scenario
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Checks weight and response-row normalization exactly, reporting every
    /// violation.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let mut weight_sum = Rational::zero();
        for (k, comp) in self.components.iter().enumerate() {
            if comp.weight.is_negative() {
                violations.push(format!("negative weight {} at component {k}", comp.weight));
            }
            weight_sum = weight_sum + comp.weight.clone();
            for (party, table) in [("alice", &comp.alice), ("bob", &comp.bob)] {
                for (s, row) in table.iter().enumerate() {
                    let mut sum = Rational::zero();
                    for (o, p) in row.iter().enumerate() {
                        if p.is_negative() {
                            violations.push(format!(
                                "negative response {p} at component {k}, {party} setting {s}, outcome {o}"
                            ));
                        }
                        sum = sum + p.clone();
                    }
                    if !sum.is_one() {
                        violations.push(format!(
                            "row sum {sum} != 1 at component {k}, {party} setting {s}"
                        ));
                    }
                }
            }
        }
        if !weight_sum.is_one() {
            violations.push(format!("weight sum {weight_sum} != 1"));
        }
        ValidationReport { violations }
    }

    fn require_valid(&self) -> Result<()> {
        let report = self.validate();
        if report.ok() {
            Ok(())
        } else {
            Err(Error::Invariant(report.violations.join("; ")))
        }
    }

    /// Generates the model's behavior by exact weighted product-sum.
    ///
    /// Never renormalizes: an invalid model is rejected instead.
    pub fn behavior(&self) -> Result<ExactBehavior> {
        self.require_valid()?;
        Ok(Behavior::from_fn(self.scenario.clone(), |x, y, a, b| {
            self.components
                .iter()
                .map(|c| &(&c.weight * &c.alice[x][a]) * &c.bob[y][b])
                .sum()
        }))
    }

    /// True iff every response probability is exactly 0 or 1.
    pub fn is_deterministic(&self) -> bool {
        self.components.iter().all(|c| {
            c.alice
                .iter()
                .chain(c.bob.iter())
                .flatten()
                .all(|p| p.is_zero() || p.is_one())
        })
    }

    /// Convex blend: `weight * self + (1 - weight) * other`.
    pub fn blend(&self, other: &LocalModel, weight: &Rational) -> Result<LocalModel> {
        if self.scenario != other.scenario {
            return Err(Error::ScenarioMismatch(
                "cannot blend models over different scenarios".into(),
            ));
        }
        if weight.is_negative() || (Rational::one() - weight.clone()).is_negative() {
            return Err(Error::Parameter(format!("blend weight {weight} outside [0, 1]")));
        }
        let complement = Rational::one() - weight.clone();
        let mut components = Vec::with_capacity(self.components.len() + other.components.len());
        for c in &self.components {
            components.push(Component {
                weight: weight * &c.weight,
                alice: c.alice.clone(),
                bob: c.bob.clone(),
            });
        }
        for c in &other.components {
            components.push(Component {
                weight: &complement * &c.weight,
                alice: c.alice.clone(),
                bob: c.bob.clone(),
            });
        }
        LocalModel::new(self.scenario.clone(), components)
    }
}

/// Synthesizes the behavior of a valid model (exact mode).
pub fn behavior_of_model(m: &LocalModel) -> Result<ExactBehavior> {
    m.behavior()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det_component(scenario: &Scenario, a_choice: usize, b_choice: usize, w: Rational) -> Component {
        Component {
            weight: w,
            alice: (0..scenario.alice_settings())
                .map(|x| {
                    (0..scenario.alice_outcomes(x))
                        .map(|a| {
                            if a == a_choice {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
            bob: (0..scenario.bob_settings())
                .map(|y| {
                    (0..scenario.bob_outcomes(y))
                        .map(|b| {
                            if b == b_choice {
                                Rational::one()
                            } else {
                                Rational::zero()
                            }
                        })
                        .collect()
                })
                .collect(),
        }
    }

    #[test]
    fn degenerate_mixture_concentrates_on_one_pair() {
        let s = Scenario::two_two_two();
        let m = LocalModel::new(s.clone(), vec![det_component(&s, 0, 0, Rational::one())]).unwrap();
        let b = m.behavior().unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert!(b.at(x, y, 0, 0).is_one());
                assert!(b.at(x, y, 1, 1).is_zero());
            }
        }
    }

    #[test]
    fn two_component_mixture_splits_mass() {
        let s = Scenario::two_two_two();
        let m = LocalModel::new(
            s.clone(),
            vec![
                det_component(&s, 0, 0, Rational::ratio(1, 2)),
                det_component(&s, 1, 1, Rational::ratio(1, 2)),
            ],
        )
        .unwrap();
        assert!(m.is_deterministic());
        let b = m.behavior().unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(b.at(x, y, 0, 0), &Rational::ratio(1, 2));
                assert_eq!(b.at(x, y, 1, 1), &Rational::ratio(1, 2));
                assert!(b.at(x, y, 0, 1).is_zero());
                assert!(b.at(x, y, 1, 0).is_zero());
            }
        }
    }

    #[test]
    fn stochastic_single_component_product() {
        // Alice: p(a=0|x0)=1/2, p(a=0|x1)=1/4; Bob: p(b=0|y0)=1.
        let s = Scenario::new(vec![2, 2], vec![2]).unwrap();
        let m = LocalModel::new(
            s,
            vec![Component {
                weight: Rational::one(),
                alice: vec![
                    vec![Rational::ratio(1, 2), Rational::ratio(1, 2)],
                    vec![Rational::ratio(1, 4), Rational::ratio(3, 4)],
                ],
                bob: vec![vec![Rational::one(), Rational::zero()]],
            }],
        )
        .unwrap();
        assert!(!m.is_deterministic());
        let b = m.behavior().unwrap();
        assert_eq!(b.at(1, 0, 0, 0), &Rational::ratio(1, 4));
        assert_eq!(b.at(0, 0, 0, 0), &Rational::ratio(1, 2));
        assert!(b.validate().ok());
    }

    #[test]
    fn invalid_model_is_rejected_not_renormalized() {
        let s = Scenario::two_two_two();
        let m = LocalModel::new(s.clone(), vec![det_component(&s, 0, 0, Rational::ratio(1, 2))]).unwrap();
        let report = m.validate();
        assert!(!report.ok());
        assert!(report.violations.iter().any(|v| v.contains("weight sum 1/2")));
        assert!(matches!(m.behavior(), Err(Error::Invariant(_))));
    }

    #[test]
    fn blending_models_blends_behaviors() {
        let s = Scenario::two_two_two();
        let m1 = LocalModel::new(s.clone(), vec![det_component(&s, 0, 0, Rational::one())]).unwrap();
        let m2 = LocalModel::new(s.clone(), vec![det_component(&s, 1, 1, Rational::one())]).unwrap();
        let w = Rational::ratio(1, 3);
        let blended = m1.blend(&m2, &w).unwrap();
        let b = blended.behavior().unwrap();
        let b1 = m1.behavior().unwrap();
        let b2 = m2.behavior().unwrap();
        for x in 0..2 {
            for y in 0..2 {
                for a in 0..2 {
                    for bb in 0..2 {
                        let expect = &(&w * b1.at(x, y, a, bb))
                            + &(&(Rational::one() - w.clone()) * b2.at(x, y, a, bb));
                        assert_eq!(b.at(x, y, a, bb), &expect);
                    }
                }
            }
        }
    }

    #[test]
    fn shape_errors_name_the_component() {
        let s = Scenario::two_two_two();
        let mut comp = det_component(&s, 0, 0, Rational::one());
        comp.alice[1].pop();
        let err = LocalModel::new(s, vec![comp]).unwrap_err();
        assert!(err.to_string().contains("alice row x=1"), "{err}");
    }
}
