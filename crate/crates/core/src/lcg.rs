//! Seeded 64-bit linear congruential generator.
//!
//! Reproducibility across platforms matters more here than statistical
//! quality: oracle sampling and random-algebra generation must replay
//! bit-for-bit from a seed.

const MULTIPLIER: u64 = 6364136223846793005;
const INCREMENT: u64 = 1442695040888963407;

#[derive(Clone, Debug)]
pub struct Lcg64 {
    state: u64,
}

impl Lcg64 {
    pub fn new(seed: u64) -> Self {
        let mut g = Lcg64 { state: seed };
        // one step so that seed 0 does not emit 0 first
        g.step();
        g
    }

    fn step(&mut self) -> u64 {
        self.state = self.state.wrapping_mul(MULTIPLIER).wrapping_add(INCREMENT);
        self.state
    }

    /// High 32 bits of the next state; the low bits of an LCG are weak.
    pub fn next_u32(&mut self) -> u32 {
        (self.step() >> 32) as u32
    }

    pub fn next_u64(&mut self) -> u64 {
        (u64::from(self.next_u32()) << 32) | u64::from(self.next_u32())
    }

    /// Uniform-ish integer in `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + (self.next_u64() % span) as i64
    }

    pub fn below(&mut self, n: usize) -> usize {
        assert!(n > 0);
        (self.next_u64() % n as u64) as usize
    }

    pub fn chance(&mut self, num: u32, den: u32) -> bool {
        self.next_u32() % den < num
    }
}
