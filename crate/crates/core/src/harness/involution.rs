//! Swap symmetry of a uniformly random oriented edge.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::balls::ball_type;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InvolutionReport {
    pub samples: usize,
    /// Ordered pairs of ball types with their counts.
    pub pair_counts: Vec<((u64, u64), usize)>,
    pub chi_square: f64,
    pub degrees_of_freedom: usize,
    pub p_value: f64,
}

/// Samples `samples` darts uniformly (a degree-biased root followed by a
/// uniform neighbour) and tests whether the law of (type of root, type of
/// neighbour) is symmetric under swapping, by a chi-square test over the
/// unordered pairs of distinct types.
pub fn involution_check(g: &Graph, samples: usize, radius: usize, seed: u64) -> Result<InvolutionReport> {
    if g.edge_count() == 0 {
        return Err(Error::Disconnected);
    }
    let types: Vec<u64> = g.vertices().map(|v| ball_type(g, v, radius)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut counts: BTreeMap<(u64, u64), usize> = BTreeMap::new();
    for _ in 0..samples {
        let d = crate::graph::Dart(rng.random_range(0..g.dart_count() as u32));
        *counts.entry((types[g.source(d)], types[g.target(d)])).or_default() += 1;
    }
    let mut chi_square = 0.0;
    let mut dof = 0;
    for (&(a, b), &n_ab) in &counts {
        if a >= b {
            continue;
        }
        let n_ba = counts.get(&(b, a)).copied().unwrap_or(0);
        chi_square += (n_ab as f64 - n_ba as f64).powi(2) / (n_ab + n_ba) as f64;
        dof += 1;
    }
    // Pairs seen only in the (b, a) orientation.
    for (&(a, b), &n_ab) in &counts {
        if a > b && !counts.contains_key(&(b, a)) {
            chi_square += n_ab as f64;
            dof += 1;
        }
    }
    let p_value = if dof == 0 {
        1.0
    } else {
        let dist = ChiSquared::new(dof as f64).expect("positive degrees of freedom");
        1.0 - dist.cdf(chi_square)
    };
    Ok(InvolutionReport {
        samples,
        pair_counts: counts.into_iter().collect(),
        chi_square,
        degrees_of_freedom: dof,
        p_value,
    })
}
