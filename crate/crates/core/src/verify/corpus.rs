//! Reproducible random digraph corpora.
//!
//! Every item derives its own stream seed from the corpus seed, so
//! corpora are stable across runs, platforms, and thread counts, and a
//! reported item seed regenerates its graph in isolation.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{entropy_regulator, is_cycle, strongly_connected, Digraph, ErValue};
use crate::error::{Error, Result};

/// How a corpus is drawn; serialized into reports so a run names its
/// inputs completely.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct CorpusConfig {
    pub seed: u64,
    pub count: usize,
    pub max_vertices: usize,
}

pub(crate) fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Independent per-item seed within a corpus.
pub fn item_seed(corpus_seed: u64, item: usize) -> u64 {
    splitmix64(corpus_seed.wrapping_add(splitmix64(item as u64)))
}

const MAX_ATTEMPTS: usize = 4096;

/// One draw: a permutation cycle cover plus a few extra edges leaving
/// vertices that still have a single out-edge. Out-degrees stay at most
/// 2, so every fork has exactly two out-edges.
fn attempt(rng: &mut ChaCha8Rng, max_vertices: usize) -> Option<Digraph> {
    let n = rng.gen_range(2..=max_vertices);
    let mut g = Digraph::new();
    let vs: Vec<_> = (0..n).map(|i| g.add_vertex(format!("v{i}"))).collect();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for (i, &j) in perm.iter().enumerate() {
        g.add_edge(vs[i], vs[j], format!("e{i}"));
    }
    let extras = rng.gen_range(1..=1 + n / 3);
    for x in 0..extras {
        let singles: Vec<_> = g.vertices().filter(|&v| g.out_degree(v) == 1).collect();
        if singles.is_empty() {
            break;
        }
        let src = singles[rng.gen_range(0..singles.len())];
        let dst = vs[rng.gen_range(0..n)];
        g.add_edge(src, dst, format!("x{x}"));
    }
    // The extras rule out the pure-cycle shape; only connectivity can
    // fail, and rejection handles that.
    if strongly_connected(&g).unwrap() && !is_cycle(&g) {
        Some(g)
    } else {
        None
    }
}

/// A strongly connected digraph that is not a single cycle, 2 to
/// `max_vertices` vertices. Such graphs always have a finite entropy
/// regulator: a fork-free cycle would have no edge leaving it.
pub fn random_sc_digraph(seed: u64, max_vertices: usize) -> Result<Digraph> {
    if max_vertices < 2 {
        return Err(Error::PreconditionFailed(
            "corpus graphs need at least 2 vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(g) = attempt(&mut rng, max_vertices) {
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed { seed, attempts: MAX_ATTEMPTS })
}

/// Like [`random_sc_digraph`] with the entropy regulator additionally
/// capped, for corpora where iterate sizes must stay tame.
pub fn bounded_er_graph(seed: u64, max_vertices: usize, max_er: usize) -> Result<Digraph> {
    if max_vertices < 2 {
        return Err(Error::PreconditionFailed(
            "corpus graphs need at least 2 vertices".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(g) = attempt(&mut rng, max_vertices) {
            if let ErValue::Finite(l) = entropy_regulator(&g).unwrap() {
                if l <= max_er {
                    return Ok(g);
                }
            }
        }
    }
    Err(Error::GenerationFailed { seed, attempts: MAX_ATTEMPTS })
}
