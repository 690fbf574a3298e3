//! No-signalling check: each party's marginals must not depend on the other
//! party's setting choice.

use crate::behavior::{Behavior, Scalar};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Party {
    Alice,
    Bob,
}

impl Party {
    pub fn name(&self) -> &'static str {
        match self {
            Party::Alice => "alice",
            Party::Bob => "bob",
        }
    }
}

/// One marginal discrepancy above tolerance.
///
/// For Alice, `setting`/`outcome` index her marginal and `pair` is the pair of
/// Bob settings it was compared across; symmetrically for Bob.
#[derive(Debug, Clone, PartialEq)]
pub struct SignallingWitness<T> {
    pub party: Party,
    pub setting: usize,
    pub outcome: usize,
    pub pair: (usize, usize),
    pub discrepancy: T,
}

/// Result of a no-signalling check. `ok` iff the worst marginal discrepancy
/// is within the tolerance used for the check.
#[derive(Debug, Clone, PartialEq)]
pub struct NoSignallingReport<T> {
    pub ok: bool,
    pub worst_violation: T,
    pub witnesses: Vec<SignallingWitness<T>>,
}

/// Compares every marginal across all counterpart-setting pairs.
///
/// `ok` iff all pairwise discrepancies are at most `tolerance`;
/// `worst_violation` is the largest discrepancy found; `witnesses` lists every
/// discrepancy strictly above tolerance. Exact behaviors require tolerance 0.
pub fn check_no_signalling<T: Scalar>(
    b: &Behavior<T>,
    tolerance: &T,
) -> Result<NoSignallingReport<T>> {
    if *tolerance < T::zero() {
        return Err(Error::Parameter("tolerance must be nonnegative".into()));
    }
    if T::EXACT && *tolerance != T::zero() {
        return Err(Error::Parameter(
            "exact-mode no-signalling check requires tolerance 0".into(),
        ));
    }

    let scenario = b.scenario();
    let mut worst = T::zero();
    let mut witnesses = Vec::new();

    // Alice's marginal at (x, y) versus (x, y') for y < y'.
    for x in 0..scenario.alice_settings() {
        let marginals: Vec<Vec<T>> = (0..scenario.bob_settings())
            .map(|y| b.marginal_alice(x, y))
            .collect::<Result<_>>()?;
        for y in 0..scenario.bob_settings() {
            for y2 in (y + 1)..scenario.bob_settings() {
                for a in 0..scenario.alice_outcomes(x) {
                    let d = marginals[y][a].sub(&marginals[y2][a]).abs();
                    if d > worst {
                        worst = d.clone();
                    }
                    if d > *tolerance {
                        witnesses.push(SignallingWitness {
                            party: Party::Alice,
                            setting: x,
                            outcome: a,
                            pair: (y, y2),
                            discrepancy: d,
                        });
                    }
                }
            }
        }
    }

    // Bob's marginal at (x, y) versus (x', y) for x < x'.
    for y in 0..scenario.bob_settings() {
        let marginals: Vec<Vec<T>> = (0..scenario.alice_settings())
            .map(|x| b.marginal_bob(x, y))
            .collect::<Result<_>>()?;
        for x in 0..scenario.alice_settings() {
            for x2 in (x + 1)..scenario.alice_settings() {
                for bb in 0..scenario.bob_outcomes(y) {
                    let d = marginals[x][bb].sub(&marginals[x2][bb]).abs();
                    if d > worst {
                        worst = d.clone();
                    }
                    if d > *tolerance {
                        witnesses.push(SignallingWitness {
                            party: Party::Bob,
                            setting: y,
                            outcome: bb,
                            pair: (x, x2),
                            discrepancy: d,
                        });
                    }
                }
            }
        }
    }

    Ok(NoSignallingReport {
        ok: witnesses.is_empty(),
        worst_violation: worst,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::behavior::ExactBehavior;
    use crate::rational::Rational;
    use crate::scenario::Scenario;

    #[test]
    fn uniform_behavior_is_no_signalling_exactly() {
        let b = ExactBehavior::uniform(Scenario::two_two_two());
        let r = check_no_signalling(&b, &Rational::zero()).unwrap();
        assert!(r.ok);
        assert!(r.worst_violation.is_zero());
        assert!(r.witnesses.is_empty());
    }

    #[test]
    fn alice_marginal_flip_is_a_maximal_violation() {
        // For y=0 the pair (0,0) is certain; for y=1 the pair (1,0) is certain.
        let b: ExactBehavior = Behavior::from_fn(Scenario::two_two_two(), |_, y, a, bb| {
            if bb == 0 && a == y {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        assert!(b.validate().ok());
        let r = check_no_signalling(&b, &Rational::zero()).unwrap();
        assert!(!r.ok);
        assert_eq!(r.worst_violation, Rational::one());
        // Both Alice settings flip at both outcomes; Bob's marginals are flat.
        assert_eq!(r.witnesses.len(), 4);
        assert!(r.witnesses.iter().all(|w| w.party == Party::Alice));
        assert!(r
            .witnesses
            .iter()
            .any(|w| w.setting == 0 && w.outcome == 0 && w.pair == (0, 1)));
    }

    #[test]
    fn negative_tolerance_is_rejected() {
        let b = ExactBehavior::uniform(Scenario::two_two_two()).to_float();
        assert!(matches!(
            check_no_signalling(&b, &-1e-3),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn exact_mode_requires_zero_tolerance() {
        let b = ExactBehavior::uniform(Scenario::two_two_two());
        assert!(matches!(
            check_no_signalling(&b, &Rational::ratio(1, 100)),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn tolerance_is_monotone() {
        let signalling: ExactBehavior =
            Behavior::from_fn(Scenario::two_two_two(), |_, y, a, bb| {
                if bb == 0 && a == y {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            });
        let f = signalling.to_float();
        let strict = check_no_signalling(&f, &0.5).unwrap();
        let loose = check_no_signalling(&f, &1.0).unwrap();
        assert!(!strict.ok);
        assert!(loose.ok);
        // Worst violation is tolerance-independent.
        assert_eq!(strict.worst_violation, loose.worst_violation);
    }

    #[test]
    fn report_is_symmetric_under_party_swap() {
        let b: ExactBehavior = Behavior::from_fn(Scenario::two_two_two(), |_, y, a, bb| {
            if bb == 0 && a == y {
                Rational::one()
            } else {
                Rational::zero()
            }
        });
        let swapped = b.swap_parties();
        let r = check_no_signalling(&b, &Rational::zero()).unwrap();
        let rs = check_no_signalling(&swapped, &Rational::zero()).unwrap();
        assert_eq!(r.ok, rs.ok);
        assert_eq!(r.worst_violation, rs.worst_violation);
        assert_eq!(r.witnesses.len(), rs.witnesses.len());
        for (w, ws) in r.witnesses.iter().zip(rs.witnesses.iter()) {
            assert_eq!(w.party.name(), "alice");
            assert_eq!(ws.party.name(), "bob");
            assert_eq!(w.setting, ws.setting);
            assert_eq!(w.outcome, ws.outcome);
            assert_eq!(w.pair, ws.pair);
            assert_eq!(w.discrepancy, ws.discrepancy);
        }
    }
}
