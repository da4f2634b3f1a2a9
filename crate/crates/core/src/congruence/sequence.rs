/// One factorisation step `c·t → d·t` using a generating pair `(c, d)` or its reverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YStep<T> {
    pub left: T,
    pub right: T,
    pub multiplier: T,
}

/// A chain `a = c₁t₁, d₁t₁ = c₂t₂, …, dₘtₘ = b` witnessing that `(a, b)`
/// lies in the right congruence generated by a set of pairs.
///
/// The element type is left open so the same witness shape serves finite
/// monoids (element indices) and the shift-map monoid (normal forms).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YSequence<T> {
    pub start: T,
    pub end: T,
    pub steps: Vec<YStep<T>>,
}

impl<T: Clone + PartialEq> YSequence<T> {
    /// The length-zero sequence from `x` to itself.
    pub fn trivial(x: T) -> Self {
        YSequence {
            start: x.clone(),
            end: x,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The same chain read from `end` to `start`.
    pub fn reversed(self) -> Self {
        YSequence {
            start: self.end,
            end: self.start,
            steps: self
                .steps
                .into_iter()
                .rev()
                .map(|s| YStep {
                    left: s.right,
                    right: s.left,
                    multiplier: s.multiplier,
                })
                .collect(),
        }
    }

    /// Concatenation; `self.end` must equal `next.start`.
    pub fn then(mut self, next: Self) -> Self {
        debug_assert!(self.end == next.start);
        self.end = next.end;
        self.steps.extend(next.steps);
        self
    }

    /// Right-multiplies every multiplier and both endpoints by `s`.
    pub fn times(&self, s: &T, mul: impl Fn(&T, &T) -> T) -> Self {
        YSequence {
            start: mul(&self.start, s),
            end: mul(&self.end, s),
            steps: self
                .steps
                .iter()
                .map(|st| YStep {
                    left: st.left.clone(),
                    right: st.right.clone(),
                    multiplier: mul(&st.multiplier, s),
                })
                .collect(),
        }
    }

    /// Intermediate values `c₁t₁, d₁t₁, d₂t₂, …, dₘtₘ`.
    pub fn values(&self, mul: impl Fn(&T, &T) -> T) -> Vec<T> {
        let mut out = vec![self.start.clone()];
        out.extend(self.steps.iter().map(|s| mul(&s.right, &s.multiplier)));
        out
    }

    /// Re-checks every junction equality and that each pair, in one of its
    /// two orientations, is accepted by `is_generator`.
    pub fn validate(
        &self,
        mul: impl Fn(&T, &T) -> T,
        is_generator: impl Fn(&T, &T) -> bool,
    ) -> bool {
        let mut current = self.start.clone();
        for step in &self.steps {
            if !(is_generator(&step.left, &step.right) || is_generator(&step.right, &step.left)) {
                return false;
            }
            if mul(&step.left, &step.multiplier) != current {
                return false;
            }
            current = mul(&step.right, &step.multiplier);
        }
        current == self.end
    }

    /// Drops steps whose two sides `c·t` and `d·t` coincide.
    pub fn without_idle_steps(self, mul: impl Fn(&T, &T) -> T) -> Self {
        let steps = self
            .steps
            .into_iter()
            .filter(|s| mul(&s.left, &s.multiplier) != mul(&s.right, &s.multiplier))
            .collect();
        YSequence {
            start: self.start,
            end: self.end,
            steps,
        }
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> YSequence<U> {
        YSequence {
            start: f(&self.start),
            end: f(&self.end),
            steps: self
                .steps
                .iter()
                .map(|s| YStep {
                    left: f(&s.left),
                    right: f(&s.right),
                    multiplier: f(&s.multiplier),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // integers mod 6 under multiplication
    fn mul(a: &u32, b: &u32) -> u32 {
        a * b % 6
    }

    #[test]
    fn validate_checks_junctions() {
        let gens = |c: &u32, d: &u32| (*c, *d) == (1, 5);
        let seq = YSequence {
            start: 2,
            end: 4,
            steps: vec![YStep {
                left: 1,
                right: 5,
                multiplier: 2,
            }],
        };
        assert!(seq.validate(mul, gens));
        assert!(seq.clone().reversed().validate(mul, gens));
        let bad = YSequence {
            end: 3,
            ..seq.clone()
        };
        assert!(!bad.validate(mul, gens));
        assert!(!seq.validate(mul, |_, _| false));
    }

    #[test]
    fn trivial_sequence() {
        let s = YSequence::trivial(3u32);
        assert!(s.is_empty());
        assert!(s.validate(mul, |_, _| false));
    }

    #[test]
    fn idle_steps_are_removed() {
        let seq = YSequence {
            start: 0,
            end: 0,
            steps: vec![YStep {
                left: 1,
                right: 5,
                multiplier: 0,
            }],
        };
        assert!(seq.without_idle_steps(mul).is_empty());
    }
}
