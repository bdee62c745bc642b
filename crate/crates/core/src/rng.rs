//! Seeded generator with a fixed, language-neutral definition so that a
//! failing seed reproduces in any implementation.
//!
//! * state: `u64`, initialised to the seed.
//! * step: `state = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`.
//! * `next_u32`: step, then return `state >> 32`.
//! * `below(b)`: draw `x = next_u32` until `x < 2^32 - (2^32 mod b)`, return `x mod b`.
//! * `shuffle`: Fisher-Yates from the last index down to 1, swapping `i`
//!   with `below(i + 1)`.

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        Lcg64 { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        (self.state >> 32) as u32
    }

    /// Uniform integer in `0..bound`.
    pub fn below(&mut self, bound: u32) -> u32 {
        assert!(bound > 0, "empty range");
        let span = 1u64 << 32;
        let limit = span - span % u64::from(bound);
        loop {
            let x = u64::from(self.next_u32());
            if x < limit {
                return (x % u64::from(bound)) as u32;
            }
        }
    }

    /// Uniform integer in `lo..=hi`.
    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        lo + self.below((hi - lo + 1) as u32) as usize
    }

    pub fn coin(&mut self) -> bool {
        self.below(2) == 1
    }

    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u32 + 1) as usize;
            items.swap(i, j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_outputs_are_pinned() {
        // state_1 = 1442695040888963407, state_2 = state_1 * a + c
        let mut r = Lcg64::new(0);
        assert_eq!(r.next_u32(), (1442695040888963407u64 >> 32) as u32);
        let s2 = 1442695040888963407u64
            .wrapping_mul(MULTIPLIER)
            .wrapping_add(INCREMENT);
        assert_eq!(r.next_u32(), (s2 >> 32) as u32);
    }

    #[test]
    fn below_stays_in_range_and_covers_it() {
        let mut r = Lcg64::new(7);
        let mut seen = [false; 5];
        for _ in 0..200 {
            let x = r.below(5) as usize;
            seen[x] = true;
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn shuffle_is_a_permutation_and_deterministic() {
        let mut a: Vec<u32> = (0..20).collect();
        let mut b = a.clone();
        Lcg64::new(3).shuffle(&mut a);
        Lcg64::new(3).shuffle(&mut b);
        assert_eq!(a, b);
        let mut sorted = a.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..20).collect::<Vec<_>>());
    }
}
