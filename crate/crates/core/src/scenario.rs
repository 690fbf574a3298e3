//! Measurement scenarios: how many settings each party has and how many
//! outcomes each setting can produce.

use crate::error::{Error, Result};

/// The setting/outcome index structure shared by behaviors and models.
///
/// Outcome labels are canonically `0..outcome_count` per setting; outcome
/// counts may differ across settings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    alice: Vec<usize>,
    bob: Vec<usize>,
}

impl Scenario {
    /// Builds a scenario from per-setting outcome counts.
    pub fn new(alice: Vec<usize>, bob: Vec<usize>) -> Result<Self> {
        if alice.is_empty() || bob.is_empty() {
            return Err(Error::Invariant(
                "each party needs at least one setting".into(),
            ));
        }
        for (party, counts) in [("alice", &alice), ("bob", &bob)] {
            if let Some(x) = counts.iter().position(|&n| n == 0) {
                return Err(Error::Invariant(format!(
                    "{party} setting {x} has zero outcomes"
                )));
            }
        }
        Ok(Scenario { alice, bob })
    }

    /// Two settings with two outcomes each per party.
    pub fn two_two_two() -> Self {
        Scenario {
            alice: vec![2, 2],
            bob: vec![2, 2],
        }
    }

    pub fn alice_settings(&self) -> usize {
        self.alice.len()
    }

    pub fn bob_settings(&self) -> usize {
        self.bob.len()
    }

    pub fn alice_outcomes(&self, x: usize) -> usize {
        self.alice[x]
    }

    pub fn bob_outcomes(&self, y: usize) -> usize {
        self.bob[y]
    }

    pub fn alice_outcome_counts(&self) -> &[usize] {
        &self.alice
    }

    pub fn bob_outcome_counts(&self) -> &[usize] {
        &self.bob
    }

    /// True for the two-setting, binary-outcome scenario CHSH lives on.
    pub fn is_two_two_two(&self) -> bool {
        self.alice == [2, 2] && self.bob == [2, 2]
    }

    /// Scenario with the parties exchanged.
    pub fn swapped(&self) -> Self {
        Scenario {
            alice: self.bob.clone(),
            bob: self.alice.clone(),
        }
    }

    /// Number of deterministic strategies, `None` on overflow.
    pub fn strategy_count(&self) -> Option<u128> {
        let mut count: u128 = 1;
        for &n in self.alice.iter().chain(self.bob.iter()) {
            count = count.checked_mul(n as u128)?;
        }
        Some(count)
    }

    pub fn check_cell(&self, x: usize, y: usize) -> Result<()> {
        if x >= self.alice_settings() || y >= self.bob_settings() {
            return Err(Error::IndexOutOfRange(format!(
                "cell (x={x}, y={y}) outside {}x{} settings",
                self.alice_settings(),
                self.bob_settings()
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_parties_and_zero_outcomes() {
        assert!(Scenario::new(vec![], vec![2]).is_err());
        assert!(Scenario::new(vec![2], vec![]).is_err());
        assert!(Scenario::new(vec![2, 0], vec![2]).is_err());
    }

    #[test]
    fn strategy_count_multiplies_outcome_counts() {
        assert_eq!(Scenario::two_two_two().strategy_count(), Some(16));
        let s = Scenario::new(vec![3], vec![3]).unwrap();
        assert_eq!(s.strategy_count(), Some(9));
        let ragged = Scenario::new(vec![2, 3], vec![2]).unwrap();
        assert_eq!(ragged.strategy_count(), Some(12));
    }

    #[test]
    fn cell_bounds_are_checked() {
        let s = Scenario::two_two_two();
        assert!(s.check_cell(1, 1).is_ok());
        assert!(s.check_cell(2, 0).is_err());
        assert!(s.check_cell(0, 5).is_err());
    }
}
