//! Shared oracles for the integration suites. Everything here is deliberately
//! independent of the wing-based enumeration inside the library: the search
//! below ranges over all rigid indecomposables at once and knows nothing
//! about apexes.
#![allow(dead_code)] // each integration target uses its own subset

use cluster_tube::{ClusterTube, Indec};

/// Every maximal rigid summand set, found by global backtracking over the
/// compatibility graph of all rigid indecomposables. Each returned set is
/// verified to be inextensible, and the search confirms along the way that
/// no compatible set exceeds the returned size.
pub fn brute_force_maximal_rigid(tube: &ClusterTube) -> Vec<Vec<Indec>> {
    let pool = tube.rigid_indecomposables();
    let compatible = |x: Indec, y: Indec| {
        tube.hom_dim_cluster(x, tube.shift(y, 1)) == 0
            && tube.hom_dim_cluster(y, tube.shift(x, 1)) == 0
    };
    let self_ok: Vec<bool> = pool
        .iter()
        .map(|&x| tube.hom_dim_cluster(x, tube.shift(x, 1)) == 0)
        .collect();
    let mut found: Vec<Vec<Indec>> = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    search(
        tube,
        &pool,
        &self_ok,
        &compatible,
        0,
        &mut current,
        &mut found,
    );
    found
}

fn search(
    tube: &ClusterTube,
    pool: &[Indec],
    self_ok: &[bool],
    compatible: &dyn Fn(Indec, Indec) -> bool,
    from: usize,
    current: &mut Vec<usize>,
    found: &mut Vec<Vec<Indec>>,
) {
    let target = tube.rank() - 1;
    if current.len() == target {
        // Inextensibility against the whole pool, not just later indices.
        let maximal = (0..pool.len()).all(|j| {
            current.contains(&j)
                || !self_ok[j]
                || !current.iter().all(|&i| compatible(pool[i], pool[j]))
        });
        assert!(maximal, "rigid set of size {} is extensible", target);
        found.push(current.iter().map(|&i| pool[i]).collect());
        return;
    }
    for j in from..pool.len() {
        if !self_ok[j] {
            continue;
        }
        if current.iter().all(|&i| compatible(pool[i], pool[j])) {
            current.push(j);
            search(tube, pool, self_ok, compatible, j + 1, current, found);
            current.pop();
        }
    }
}

/// Catalan numbers, exactly.
pub fn catalan(k: usize) -> u128 {
    let mut c: u128 = 1;
    for i in 0..k {
        c = c * 2 * (2 * i as u128 + 1) / (i as u128 + 2);
    }
    c
}

/// A tiny deterministic generator for the randomized sweeps; xorshift64*.
pub struct DetRng(u64);

impl DetRng {
    pub fn new(seed: u64) -> DetRng {
        DetRng(seed.max(1))
    }

    pub fn next_u64(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545F4914F6CDD1D)
    }

    pub fn below(&mut self, bound: usize) -> usize {
        (self.next_u64() % bound as u64) as usize
    }
}
