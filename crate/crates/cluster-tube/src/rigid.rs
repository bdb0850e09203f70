//! Maximal rigid objects: wings, backtracking enumeration, apex and subwing
//! bookkeeping.
//!
//! Every maximal rigid object of the rank-n cluster tube lives in the wing of
//! a unique `(a, n-1)`, contains that object as a summand, and has exactly
//! n-1 summands. Enumeration therefore walks each wing once and collects the
//! pairwise-compatible summand sets of the right size.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::tube::{ClusterTube, Indec};

/// A basic maximal rigid object: exactly n-1 pairwise-compatible rigid
/// summands inside the wing of `(apex, n-1)`, kept sorted for canonical
/// comparison.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct MaximalRigid {
    rank: usize,
    summands: Vec<Indec>,
    apex: usize,
}

impl MaximalRigid {
    /// Validates the defining invariants: summand count, rigidity, a unique
    /// summand of length n-1 (the apex object), and containment in its wing.
    pub fn new(tube: &ClusterTube, summands: Vec<Indec>) -> Result<MaximalRigid> {
        let n = tube.rank();
        let mut summands = summands;
        summands.sort();
        if summands.len() != n - 1 {
            return Err(Error::WrongSummandCount {
                rank: n,
                expected: n - 1,
                found: summands.len(),
            });
        }
        if let Some(w) = summands.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::Invariant(format!(
                "repeated summand {}: a basic object has pairwise distinct summands",
                w[0]
            )));
        }
        let apex = apex_of(tube, &summands)?;
        if !tube.is_rigid(&summands) {
            let sum: Vec<String> = summands.iter().map(|x| x.to_string()).collect();
            return Err(Error::NotRigid(sum.join("+")));
        }
        let wing: BTreeSet<Indec> = wing_members(tube, Indec::new(apex, n - 1))
            .into_iter()
            .collect();
        if let Some(bad) = summands.iter().find(|x| !wing.contains(x)) {
            return Err(Error::Invariant(format!(
                "summand {bad} lies outside the wing of ({apex}, {})",
                n - 1
            )));
        }
        Ok(MaximalRigid {
            rank: n,
            summands,
            apex,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn summands(&self) -> &[Indec] {
        &self.summands
    }

    pub fn apex(&self) -> usize {
        self.apex
    }

    pub fn apex_object(&self) -> Indec {
        Indec::new(self.apex, self.rank - 1)
    }

    pub fn contains(&self, x: Indec) -> bool {
        self.summands.binary_search(&x).is_ok()
    }

    /// The summands other than the apex object.
    pub fn below_apex(&self) -> Vec<Indec> {
        let apex = self.apex_object();
        self.summands
            .iter()
            .copied()
            .filter(|&x| x != apex)
            .collect()
    }

    /// Applies `Sigma^k` to every summand.
    pub fn shifted(&self, tube: &ClusterTube, k: i64) -> MaximalRigid {
        let summands = self.summands.iter().map(|&x| tube.shift(x, k)).collect();
        MaximalRigid::new(tube, summands).expect("shift preserves maximal rigidity")
    }

    /// The standard object `(a,1) + ... + (a,n-1)` of a wing.
    pub fn standard(tube: &ClusterTube, apex: usize) -> MaximalRigid {
        let n = tube.rank();
        let summands = (1..n).map(|len| Indec::new(apex, len)).collect();
        MaximalRigid::new(tube, summands).expect("standard object is maximal rigid")
    }
}

impl fmt::Display for MaximalRigid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("+"))
    }
}

/// How a maximal rigid object splits below its apex: the apex object
/// `(a, n-1)` together with the corners `(a, b)` and `(a+b+1, n-b-2)` of the
/// two subwings. Either corner degenerates to the zero object (`None`) when
/// b = 0 or b = n-2.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SubwingTriple {
    pub apex_obj: Indec,
    pub left: Option<Indec>,
    pub right: Option<Indec>,
    pub b: usize,
}

/// The unique `a` with `(a, n-1)` among the summands.
pub fn apex_of(tube: &ClusterTube, summands: &[Indec]) -> Result<usize> {
    let n = tube.rank();
    let apexes: Vec<&Indec> = summands.iter().filter(|x| x.length == n - 1).collect();
    match apexes.as_slice() {
        [apex] => Ok(apex.socle),
        other => Err(Error::BadApex {
            expected: n - 1,
            found: other.len(),
        }),
    }
}

/// The indecomposables in the triangle with corners `(a, m)`, `(a, 1)` and
/// `(a+m-1, 1)`: all `(a+i, j)` with `i >= 0`, `j >= 1`, `i + j <= m`.
pub fn wing_members(tube: &ClusterTube, apex: Indec) -> Vec<Indec> {
    assert!(
        tube.is_rigid_indec(apex),
        "wings are defined for rigid objects only"
    );
    let mut out = Vec::new();
    for i in 0..apex.length {
        for j in 1..=apex.length - i {
            out.push(
                tube.indec(apex.socle as i64 + i as i64, j)
                    .expect("length is positive"),
            );
        }
    }
    out.sort();
    out
}

/// All basic maximal rigid objects of the cluster tube, in canonical order.
///
/// For each apex, a backtracking search extends partial summand sets inside
/// the wing of `(a, n-1)`, pruning as soon as a candidate fails to be
/// compatible with the set built so far. Results from all wings are merged
/// and deduplicated by canonical form.
pub fn enumerate_maximal_rigid(tube: &ClusterTube) -> Vec<MaximalRigid> {
    let n = tube.rank();
    let mut seen: BTreeSet<Vec<Indec>> = BTreeSet::new();
    for apex in 1..=n {
        let apex_obj = Indec::new(apex, n - 1);
        let pool: Vec<Indec> = wing_members(tube, apex_obj)
            .into_iter()
            .filter(|&x| x != apex_obj)
            .collect();
        let mut chosen = vec![apex_obj];
        extend_rigid(tube, &pool, 0, &mut chosen, n - 1, &mut seen);
    }
    seen.into_iter()
        .map(|summands| MaximalRigid::new(tube, summands).expect("enumerated set is maximal rigid"))
        .collect()
}

fn extend_rigid(
    tube: &ClusterTube,
    pool: &[Indec],
    from: usize,
    chosen: &mut Vec<Indec>,
    target: usize,
    seen: &mut BTreeSet<Vec<Indec>>,
) {
    if chosen.len() == target {
        let mut set = chosen.clone();
        set.sort();
        seen.insert(set);
        return;
    }
    // Not enough candidates left to reach the target size.
    if chosen.len() + (pool.len() - from) < target {
        return;
    }
    for i in from..pool.len() {
        let x = pool[i];
        if compatible_with_all(tube, chosen, x) {
            chosen.push(x);
            extend_rigid(tube, pool, i + 1, chosen, target, seen);
            chosen.pop();
        }
    }
}

pub(crate) fn compatible_with_all(tube: &ClusterTube, chosen: &[Indec], x: Indec) -> bool {
    tube.hom_dim_cluster(x, tube.shift(x, 1)) == 0
        && chosen.iter().all(|&y| {
            tube.hom_dim_cluster(x, tube.shift(y, 1)) == 0
                && tube.hom_dim_cluster(y, tube.shift(x, 1)) == 0
        })
}

/// The subwing triple of a maximal rigid object: b is the largest k < n-1
/// with `(a, k)` a summand (0 if none). The companion claim that n-b-2 is
/// the largest k with `(a+n-1-k, k)` a summand is re-checked on every call.
pub fn subwing_triple(tube: &ClusterTube, t: &MaximalRigid) -> Result<SubwingTriple> {
    let n = tube.rank();
    let a = t.apex();
    let b = (1..n - 1)
        .filter(|&k| t.contains(Indec::new(a, k)))
        .max()
        .unwrap_or(0);
    let right_len = n - b - 2;
    let observed_right = (1..n - 1)
        .filter(|&k| {
            let socle = tube
                .indec(a as i64 + n as i64 - 1 - k as i64, k)
                .expect("positive length");
            t.contains(socle)
        })
        .max()
        .unwrap_or(0);
    if observed_right != right_len {
        return Err(Error::Invariant(format!(
            "subwing mismatch for {t}: expected right corner length {right_len}, found {observed_right}"
        )));
    }
    let left = (b > 0).then(|| Indec::new(a, b));
    let right = (right_len > 0).then(|| {
        tube.indec(a as i64 + b as i64 + 1, right_len)
            .expect("positive length")
    });
    Ok(SubwingTriple {
        apex_obj: t.apex_object(),
        left,
        right,
        b,
    })
}
