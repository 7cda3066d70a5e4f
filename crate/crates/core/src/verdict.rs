use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckStatus {
    /// The implication is a published result; an unsound verdict means a bug.
    Proved,
    /// The implication is an open question; an unsound verdict is a
    /// candidate counterexample that needs independent re-verification.
    OpenConjecture,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessRole {
    Hypothesis,
    Conclusion,
}

/// A pair of elements together with their orders and the order of their
/// product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub role: WitnessRole,
    pub x: usize,
    pub y: usize,
    pub order_x: usize,
    pub order_y: usize,
    pub order_xy: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckVerdict {
    check_name: String,
    status: CheckStatus,
    hypothesis: bool,
    conclusion: bool,
    sound: bool,
    witness: Option<Witness>,
    note: Option<String>,
}

impl CheckVerdict {
    pub fn new(check_name: impl Into<String>, status: CheckStatus, hypothesis: bool, conclusion: bool) -> Self {
        CheckVerdict {
            check_name: check_name.into(),
            status,
            hypothesis,
            conclusion,
            sound: !hypothesis || conclusion,
            witness: None,
            note: None,
        }
    }

    pub fn with_witness(mut self, witness: Option<Witness>) -> Self {
        self.witness = witness;
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn check_name(&self) -> &str {
        &self.check_name
    }

    pub fn status(&self) -> CheckStatus {
        self.status
    }

    pub fn hypothesis(&self) -> bool {
        self.hypothesis
    }

    pub fn conclusion(&self) -> bool {
        self.conclusion
    }

    pub fn sound(&self) -> bool {
        self.sound
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    /// An unsound verdict on an open question.
    pub fn is_candidate_counterexample(&self) -> bool {
        self.status == CheckStatus::OpenConjecture && !self.sound
    }

    /// An unsound verdict on a proved result.
    pub fn is_implementation_failure(&self) -> bool {
        self.status == CheckStatus::Proved && !self.sound
    }

    /// Structural invariants: `sound` matches the implication, and a false
    /// hypothesis carries a coprime pair whose product order is wrong.
    pub fn is_well_formed(&self) -> bool {
        if self.sound != (!self.hypothesis || self.conclusion) {
            return false;
        }
        if !self.hypothesis {
            return match &self.witness {
                Some(w) => {
                    w.role == WitnessRole::Hypothesis
                        && crate::arith::gcd(w.order_x, w.order_y) == 1
                        && w.order_xy != w.order_x * w.order_y
                }
                None => false,
            };
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sound_is_the_implication() {
        for (h, c) in [(false, false), (false, true), (true, false), (true, true)] {
            let v = CheckVerdict::new("x", CheckStatus::Proved, h, c);
            assert_eq!(v.sound(), !h || c);
        }
        let v = CheckVerdict::new("level:2", CheckStatus::OpenConjecture, true, false);
        assert!(v.is_candidate_counterexample());
        assert!(!v.is_implementation_failure());
    }

    #[test]
    fn false_hypothesis_needs_witness() {
        let v = CheckVerdict::new("bw", CheckStatus::Proved, false, false);
        assert!(!v.is_well_formed());
        let v = v.with_witness(Some(Witness {
            role: WitnessRole::Hypothesis,
            x: 1,
            y: 3,
            order_x: 2,
            order_y: 3,
            order_xy: 2,
        }));
        assert!(v.is_well_formed());
    }
}
