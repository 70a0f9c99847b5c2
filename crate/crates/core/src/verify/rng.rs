//! Deterministic pseudo-randomness for campaigns.
//!
//! SplitMix64: the output at counter `i` is a fixed bijective scramble of
//! `seed + (i+1) * 0x9E3779B97F4A7C15`, so seeds are portable across
//! implementations and trials can be derived independently of evaluation
//! order.

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    /// Independent stream for a named check and trial index.
    pub fn for_trial(seed: u64, check: &str, trial: u64) -> Self {
        let mut h = seed;
        for b in check.bytes() {
            h = h.wrapping_mul(0x100000001B3).wrapping_add(b as u64);
        }
        SplitMix64::new(h.wrapping_add(trial.wrapping_mul(0x9E3779B97F4A7C15)))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform in `0..bound` (bound > 0).
    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }

    /// Uniform integer in `[-max_abs, max_abs]`.
    pub fn entry(&mut self, max_abs: i64) -> i64 {
        let span = 2 * max_abs + 1;
        (self.next_u64() % span as u64) as i64 - max_abs
    }

    pub fn pick<'a, T>(&mut self, xs: &'a [T]) -> &'a T {
        &xs[self.below(xs.len())]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_streams() {
        let mut a = SplitMix64::for_trial(7, "kunneth", 3);
        let mut b = SplitMix64::for_trial(7, "kunneth", 3);
        for _ in 0..10 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64::for_trial(7, "kunneth", 4);
        assert_ne!(a.next_u64(), c.next_u64());
    }

    #[test]
    fn entries_cover_range() {
        let mut r = SplitMix64::new(1);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..200 {
            let e = r.entry(2);
            assert!((-2..=2).contains(&e));
            seen.insert(e);
        }
        assert_eq!(seen.len(), 5);
    }
}
