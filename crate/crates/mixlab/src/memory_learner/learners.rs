use super::{FiniteStateLearner, StateId};
use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;

/// Keeps the interval `[lo, hi]` of threshold rows still consistent with the
/// examples seen, for the threshold class over `n` grid points (row `k`
/// labels the first `k` points with 1).
///
/// A 1 on grid point `x` means the target row is above `x`, so `lo` moves up
/// to `x + 1`; a 0 means it is at most `x`, so `hi` moves down to `x`.
/// Examples that contradict the interval leave the state unchanged. The
/// output is the row at the midpoint `(lo + hi) / 2`, rounded down.
///
/// States are the `(n+1)(n+2)/2` pairs `lo <= hi`, numbered row by row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThresholdIntervalLearner {
    n: usize,
}

impl ThresholdIntervalLearner {
    pub fn new(num_examples: usize) -> Self {
        ThresholdIntervalLearner { n: num_examples }
    }

    /// Checks that `class` is the threshold class this learner is built for.
    pub fn for_class(class: &HypothesisClass) -> Result<Self> {
        let n = class.num_examples();
        let matches = class.num_hypotheses() == n + 1
            && (0..=n).all(|k| (0..n).all(|x| class.label(k, x) == (x < k)));
        if !matches {
            return Err(Error::input(
                "the threshold interval learner needs the threshold class (row k = first k examples)",
            ));
        }
        Ok(ThresholdIntervalLearner::new(n))
    }

    fn row_start(&self, lo: u64) -> u64 {
        let m = self.n as u64 + 1;
        lo * m - lo * lo.saturating_sub(1) / 2
    }

    pub fn encode(&self, lo: usize, hi: usize) -> StateId {
        debug_assert!(lo <= hi && hi <= self.n);
        self.row_start(lo as u64) + (hi - lo) as u64
    }

    pub fn decode(&self, state: StateId) -> (usize, usize) {
        // largest lo with row_start(lo) <= state
        let (mut a, mut b) = (0u64, self.n as u64);
        while a < b {
            let mid = (a + b).div_ceil(2);
            if self.row_start(mid) <= state {
                a = mid;
            } else {
                b = mid - 1;
            }
        }
        let lo = a as usize;
        (lo, lo + (state - self.row_start(a)) as usize)
    }
}

impl FiniteStateLearner for ThresholdIntervalLearner {
    fn num_states(&self) -> u64 {
        let m = self.n as u64 + 1;
        m * (m + 1) / 2
    }

    fn initial_state(&self) -> StateId {
        self.encode(0, self.n)
    }

    fn num_examples(&self) -> usize {
        self.n
    }

    fn transition(&self, state: StateId, example: usize, label: bool) -> StateId {
        let (lo, hi) = self.decode(state);
        let (lo, hi) = if label {
            if example < hi {
                (lo.max(example + 1), hi)
            } else {
                (lo, hi)
            }
        } else if example >= lo {
            (lo, hi.min(example))
        } else {
            (lo, hi)
        };
        self.encode(lo, hi)
    }

    fn output(&self, state: StateId) -> usize {
        let (lo, hi) = self.decode(state);
        (lo + hi) / 2
    }
}

pub const MAX_VERSION_SPACE_HYPOTHESES: usize = 20;

/// Remembers exactly which hypotheses are still consistent: one state per
/// subset of the class, `2^|H|` in all. Outputs the lowest-indexed survivor
/// (hypothesis 0 when none is left).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VersionSpaceLearner {
    num_hypotheses: usize,
    /// Per example, the hypotheses labelling it 1.
    columns: Vec<u64>,
}

impl VersionSpaceLearner {
    pub fn new(class: &HypothesisClass) -> Result<Self> {
        let nh = class.num_hypotheses();
        if nh > MAX_VERSION_SPACE_HYPOTHESES {
            return Err(Error::capacity(format!(
                "version-space learner supports at most {MAX_VERSION_SPACE_HYPOTHESES} hypotheses, class has {nh}"
            )));
        }
        Ok(VersionSpaceLearner {
            num_hypotheses: nh,
            columns: (0..class.num_examples()).map(|x| class.col_bits(x)[0]).collect(),
        })
    }

    fn all(&self) -> u64 {
        (1u64 << self.num_hypotheses) - 1
    }
}

impl FiniteStateLearner for VersionSpaceLearner {
    fn num_states(&self) -> u64 {
        1 << self.num_hypotheses
    }

    fn initial_state(&self) -> StateId {
        self.all()
    }

    fn num_examples(&self) -> usize {
        self.columns.len()
    }

    fn transition(&self, state: StateId, example: usize, label: bool) -> StateId {
        let ones = self.columns[example];
        state & if label { ones } else { !ones & self.all() }
    }

    fn output(&self, state: StateId) -> usize {
        if state == 0 {
            0
        } else {
            state.trailing_zeros() as usize
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypothesis_graph::gen_threshold;

    #[test]
    fn state_encoding_round_trips() {
        for n in [1, 2, 5, 16] {
            let l = ThresholdIntervalLearner::new(n);
            let mut id = 0;
            for lo in 0..=n {
                for hi in lo..=n {
                    assert_eq!(l.encode(lo, hi), id);
                    assert_eq!(l.decode(id), (lo, hi));
                    id += 1;
                }
            }
            assert_eq!(id, l.num_states());
        }
    }

    #[test]
    fn threshold_learner_extremes() {
        let l = ThresholdIntervalLearner::new(8);
        let top = l.transition(l.initial_state(), 7, true);
        assert_eq!(l.output(top), 8);
        let bottom = l.transition(l.initial_state(), 0, false);
        assert_eq!(l.output(bottom), 0);
        assert_eq!(l.output(l.initial_state()), 4);
    }

    #[test]
    fn threshold_learner_ignores_contradictions() {
        let l = ThresholdIntervalLearner::new(8);
        let s = l.transition(l.initial_state(), 3, false); // target <= 3
        assert_eq!(l.transition(s, 5, true), s);
        let s = l.transition(l.initial_state(), 5, true); // target >= 6
        assert_eq!(l.transition(s, 2, false), s);
    }

    #[test]
    fn for_class_checks_shape() {
        assert!(ThresholdIntervalLearner::for_class(&gen_threshold(6).unwrap()).is_ok());
        let other = HypothesisClass::from_fn(7, 6, |h, x| x <= h).unwrap();
        assert!(ThresholdIntervalLearner::for_class(&other).is_err());
    }

    #[test]
    fn version_space_basics() {
        let th = gen_threshold(4).unwrap();
        let l = VersionSpaceLearner::new(&th).unwrap();
        assert_eq!(l.num_states(), 32);
        assert_eq!(l.memory_bits(), 5);
        assert_eq!(l.output(l.initial_state()), 0);
        // target row 3: labels 1,1,1,0
        let mut s = l.initial_state();
        for x in 0..4 {
            s = l.transition(s, x, th.label(3, x));
        }
        assert_eq!(s, 1 << 3);
        assert_eq!(l.output(s), 3);
        let big = HypothesisClass::from_fn(21, 3, |_, _| true).unwrap();
        assert!(matches!(VersionSpaceLearner::new(&big), Err(Error::Capacity(_))));
    }
}
