use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

/// Seed and substream of a simulation.
///
/// Samples are produced in fixed-size chunks, each drawn from its own ChaCha8
/// stream, and concatenated in chunk order, so the output does not depend on
/// the number of worker threads.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RngSpec {
    pub seed: u64,
    pub stream_id: u64,
}

impl RngSpec {
    pub fn new(seed: u64, stream_id: u64) -> Self {
        RngSpec { seed, stream_id }
    }

    /// Independent substream for a derived quantity.
    pub fn substream(&self, id: u64) -> RngSpec {
        RngSpec {
            seed: self.seed,
            stream_id: splitmix64(self.stream_id ^ splitmix64(id.wrapping_add(0x5851_f42d_4c95_7f2d))),
        }
    }

    pub(crate) fn chunk_rng(&self, chunk: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(splitmix64(self.seed ^ splitmix64(self.stream_id)));
        rng.set_stream(chunk);
        rng
    }
}

/// Samples per RNG chunk.
pub(crate) const CHUNK: usize = 4096;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// `n` draws of `draw`, generated chunk-parallel.
pub(crate) fn par_draw<T, F>(spec: &RngSpec, n: usize, draw: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng) -> T + Sync,
{
    let chunks = n.div_ceil(CHUNK);
    let parts: Vec<Vec<T>> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = spec.chunk_rng(c as u64);
            let len = CHUNK.min(n - c * CHUNK);
            (0..len).map(|_| draw(&mut rng)).collect()
        })
        .collect();
    let mut out = Vec::with_capacity(n);
    for p in parts {
        out.extend(p);
    }
    out
}
