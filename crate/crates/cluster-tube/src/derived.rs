//! Derived-equivalence invariants of the endomorphism algebras: 3-cycle
//! counts, Cartan matrices of the gentle quotients, the determinant law
//! det = 2^(t+1), normal forms and the reduction sequence between them.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::linalg;
use crate::mutation::ExchangeGraph;
use crate::quiver::{
    self, extended_mutate, membership_diagnostics, potential_of, QTilde, Quiver, VertexLabel,
};
use crate::tube::ClusterTube;

/// Number of oriented 3-cycles, each counted once.
pub fn count_3_cycles(qt: &QTilde) -> usize {
    qt.three_cycles().len()
}

/// The Cartan matrix of the gentle quotient algebra: entry (i, j) counts the
/// relation-avoiding paths from vertex i to vertex j, the trivial path
/// included on the diagonal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CartanMatrix {
    pub order: Vec<VertexLabel>,
    pub entries: Vec<Vec<u64>>,
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Counts relation-avoiding paths by depth-first search. The forbidden
/// 2-steps are the loop squared and every composition of two consecutive
/// arrows of a 3-cycle. A legal path never repeats an arrow, so any search
/// running past |arrows| + 1 steps signals a malformed (infinite-dimensional)
/// input and aborts with an error.
pub fn cartan_matrix(qt: &QTilde) -> Result<CartanMatrix> {
    let q = qt.quiver();
    let vcount = q.vertex_count();
    let arrows = q.arrows();
    let forbidden: BTreeSet<(Arrow, Arrow)> = potential_of(qt).relations().into_iter().collect();
    let cap = arrows.len() + 1;
    let mut entries = Vec::with_capacity(vcount);
    for start in 0..vcount {
        let mut counts = vec![0u64; vcount];
        walk(start, None, 0, cap, arrows, &forbidden, &mut counts)?;
        entries.push(counts);
    }
    Ok(CartanMatrix {
        order: q.labels().to_vec(),
        entries,
    })
}

type Arrow = (usize, usize);

fn walk(
    v: usize,
    last: Option<Arrow>,
    depth: usize,
    cap: usize,
    arrows: &[Arrow],
    forbidden: &BTreeSet<(Arrow, Arrow)>,
    counts: &mut [u64],
) -> Result<()> {
    if depth >= cap {
        return Err(Error::PathCapExceeded);
    }
    counts[v] += 1;
    for &arrow in arrows.iter().filter(|&&(s, _)| s == v) {
        if let Some(prev) = last {
            if forbidden.contains(&(prev, arrow)) {
                continue;
            }
        }
        walk(
            arrow.1,
            Some(arrow),
            depth + 1,
            cap,
            arrows,
            forbidden,
            counts,
        )?;
    }
    Ok(())
}

/// Exact integer determinant of a Cartan matrix.
pub fn cartan_determinant(c: &CartanMatrix) -> i128 {
    let rows: Vec<Vec<BigInt>> = c
        .entries
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let det = linalg::determinant(rows);
    i128::try_from(&det).expect("Cartan determinants stay small")
}

/// The derived-equivalence criterion: equal numbers of 3-cycles. Quivers of
/// different ranks are incomparable.
pub fn derived_equivalent(a: &QTilde, b: &QTilde) -> Result<bool> {
    if a.vertex_count() != b.vertex_count() {
        return Err(Error::RankMismatch(
            a.vertex_count() + 1,
            b.vertex_count() + 1,
        ));
    }
    Ok(count_3_cycles(a) == count_3_cycles(b))
}

/// First normal form: a path with the loop at its head and t 3-cycles
/// chained onto its tail. Vertices are named `c, 2, ..` along the bottom and
/// `p1, ..` for the peaks.
pub fn normal_form_line(n: usize, t: usize) -> Result<QTilde> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    if n - 1 < 2 * t + 1 {
        return Err(Error::BadNormalForm(format!(
            "{t} 3-cycles do not fit in {} vertices",
            n - 1
        )));
    }
    let bottom = n - 1 - t;
    let mut labels: Vec<VertexLabel> = Vec::new();
    labels.push(VertexLabel::named("c"));
    for j in 2..=bottom {
        labels.push(VertexLabel::named(j.to_string()));
    }
    for i in 1..=t {
        labels.push(VertexLabel::named(format!("p{i}")));
    }
    let peak = |i: usize| bottom + i - 1;
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    for j in 0..bottom - t - 1 {
        arrows.push((j, j + 1));
    }
    for i in 1..=t {
        let (left, right) = (bottom - t + i - 2, bottom - t + i - 1);
        arrows.push((left, peak(i)));
        arrows.push((peak(i), right));
        arrows.push((right, left));
    }
    arrows.push((0, 0));
    let qt = QTilde::from_quiver(Quiver::new(labels, arrows)?)?;
    let diagnostics = membership_diagnostics(&qt, n);
    if !diagnostics.is_empty() {
        return Err(Error::NotInFamily(diagnostics));
    }
    Ok(qt)
}

/// Second normal form: a path `1 -> .. -> r` followed by t chained 3-cycles
/// whose peaks sit over consecutive bottom pairs, with the loop on peak s
/// (named `c`). Requires r + 2t = n - 1.
pub fn normal_form_peak(n: usize, t: usize, r: usize, s: usize) -> Result<QTilde> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    if t == 0 || r == 0 || r + 2 * t != n - 1 {
        return Err(Error::BadNormalForm(format!(
            "need r >= 1, t >= 1 and r + 2t = {}, got r={r}, t={t}",
            n - 1
        )));
    }
    if s == 0 || s > t {
        return Err(Error::BadNormalForm(format!(
            "loop peak s={s} outside 1..={t}"
        )));
    }
    let mut labels: Vec<VertexLabel> = Vec::new();
    for j in 1..=r + t {
        labels.push(VertexLabel::named(j.to_string()));
    }
    for i in 1..=t {
        let name = if i == s {
            "c".to_string()
        } else {
            format!("p{i}")
        };
        labels.push(VertexLabel::named(name));
    }
    let peak = |i: usize| r + t + i - 1;
    let mut arrows: Vec<(usize, usize)> = Vec::new();
    for j in 0..r - 1 {
        arrows.push((j, j + 1));
    }
    for i in 1..=t {
        let (left, right) = (r + i - 2, r + i - 1);
        arrows.push((left, peak(i)));
        arrows.push((peak(i), right));
        arrows.push((right, left));
    }
    arrows.push((peak(s), peak(s)));
    let qt = QTilde::from_quiver(Quiver::new(labels, arrows)?)?;
    let diagnostics = membership_diagnostics(&qt, n);
    if !diagnostics.is_empty() {
        return Err(Error::NotInFamily(diagnostics));
    }
    Ok(qt)
}

/// The vertex sequence that rewrites the peak-loop normal form into the
/// line-loop one, already in application order (the classical tuple
/// `(r, .., 2, c, 2, .., r; c, r+1, .., r+s-1, c)` is consumed from its
/// right end).
pub fn normal_form_sequence(r: usize, s: usize) -> Vec<String> {
    let mut written: Vec<String> = Vec::new();
    for j in (2..=r).rev() {
        written.push(j.to_string());
    }
    written.push("c".into());
    for j in 2..=r {
        written.push(j.to_string());
    }
    written.push("c".into());
    for j in r + 1..=r + s - 1 {
        written.push(j.to_string());
    }
    written.push("c".into());
    written.reverse();
    written
}

/// Left-fold of extended mutation over a list of vertex names; each name is
/// resolved against the quiver it applies to.
pub fn apply_mutation_sequence<S: AsRef<str>>(qt: &QTilde, seq: &[S]) -> Result<QTilde> {
    let mut current = qt.clone();
    for name in seq {
        let v = current
            .quiver()
            .vertex_by_name(name.as_ref())
            .ok_or_else(|| Error::UnknownVertex(name.as_ref().to_string()))?;
        current = extended_mutate(&current, v)?;
    }
    Ok(current)
}

/// One derived-equivalence class of maximal rigid objects, keyed by the
/// 3-cycle count of their quivers.
#[derive(Clone, Debug)]
pub struct DerivedClass {
    pub three_cycles: usize,
    pub members: Vec<usize>,
    pub representative: QTilde,
}

/// Partitions the exchange-graph nodes by the 3-cycle count of their
/// quivers, in increasing order of the count.
pub fn derived_classes(tube: &ClusterTube, graph: &ExchangeGraph) -> Result<Vec<DerivedClass>> {
    let quivers = quiver::node_quivers(tube, graph)?;
    let mut by_count: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, qt) in quivers.iter().enumerate() {
        by_count.entry(count_3_cycles(qt)).or_default().push(i);
    }
    Ok(by_count
        .into_iter()
        .map(|(three_cycles, members)| DerivedClass {
            three_cycles,
            representative: quivers[members[0]].clone(),
            members,
        })
        .collect())
}
