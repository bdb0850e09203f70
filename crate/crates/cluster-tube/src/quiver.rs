//! Quivers of endomorphism algebras: the loop-carrying family realized by
//! maximal rigid objects, Fomin-Zelevinsky and loop-extended mutation, and
//! the canonical potential.
//!
//! A quiver here is a vertex list with an arrow multiset; vertices carry
//! labels (summands when the quiver comes from a maximal rigid object,
//! opaque names otherwise) and are kept sorted by label so that equal
//! quivers compare equal structurally.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::mutation::ExchangeGraph;
use crate::rigid::MaximalRigid;
use crate::tube::{ClusterTube, Indec};

/// A vertex label: a tube summand or an opaque name.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum VertexLabel {
    Summand(Indec),
    Named(String),
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexLabel::Summand(x) => write!(f, "{x}"),
            VertexLabel::Named(s) => write!(f, "{s}"),
        }
    }
}

impl VertexLabel {
    pub fn named(s: impl Into<String>) -> VertexLabel {
        VertexLabel::Named(s.into())
    }

    /// Labels of the form `a.b` are summands, everything else is a name.
    pub fn parse(s: &str) -> VertexLabel {
        match s.parse::<Indec>() {
            Ok(x) => VertexLabel::Summand(x),
            Err(_) => VertexLabel::Named(s.to_string()),
        }
    }
}

/// A finite quiver with labelled vertices; loops are permitted, arrows form
/// a multiset. Vertices are sorted by label and arrows by endpoints.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Quiver {
    labels: Vec<VertexLabel>,
    arrows: Vec<(usize, usize)>,
}

impl Quiver {
    pub fn new(labels: Vec<VertexLabel>, arrows: Vec<(usize, usize)>) -> Result<Quiver> {
        let vcount = labels.len();
        for &(s, t) in &arrows {
            if s >= vcount || t >= vcount {
                return Err(Error::Parse(format!(
                    "arrow ({s}, {t}) points outside the {vcount} vertices"
                )));
            }
        }
        let mut order: Vec<usize> = (0..vcount).collect();
        order.sort_by(|&a, &b| labels[a].cmp(&labels[b]));
        let mut position = vec![0; vcount];
        for (new, &old) in order.iter().enumerate() {
            position[old] = new;
        }
        let sorted_labels: Vec<VertexLabel> = order.iter().map(|&i| labels[i].clone()).collect();
        if sorted_labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("duplicate vertex label".into()));
        }
        let mut sorted_arrows: Vec<(usize, usize)> = arrows
            .into_iter()
            .map(|(s, t)| (position[s], position[t]))
            .collect();
        sorted_arrows.sort();
        Ok(Quiver {
            labels: sorted_labels,
            arrows: sorted_arrows,
        })
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn vertex_by_label(&self, label: &VertexLabel) -> Option<usize> {
        self.labels.binary_search(label).ok()
    }

    /// Looks a vertex up by the display form of its label.
    pub fn vertex_by_name(&self, name: &str) -> Option<usize> {
        self.vertex_by_label(&VertexLabel::parse(name))
    }

    pub fn has_loop_at(&self, v: usize) -> bool {
        self.arrows.binary_search(&(v, v)).is_ok()
    }

    fn arrow_count(&self, s: usize, t: usize) -> usize {
        self.arrows.iter().filter(|&&a| a == (s, t)).count()
    }

    /// Distinct vertices adjacent to `v`, not counting `v` itself.
    pub fn neighbours(&self, v: usize) -> Vec<usize> {
        let mut out: BTreeSet<usize> = BTreeSet::new();
        for &(s, t) in &self.arrows {
            if s == v && t != v {
                out.insert(t);
            }
            if t == v && s != v {
                out.insert(s);
            }
        }
        out.into_iter().collect()
    }

    /// Oriented 3-cycles on distinct vertices, each listed once, rotated so
    /// the smallest vertex comes first.
    pub fn three_cycles(&self) -> Vec<[usize; 3]> {
        let arrow_set: BTreeSet<(usize, usize)> = self.arrows.iter().copied().collect();
        let mut cycles = BTreeSet::new();
        for &(u, v) in &arrow_set {
            if u == v {
                continue;
            }
            for &(v2, w) in arrow_set.range((v, 0)..(v, usize::MAX)) {
                debug_assert_eq!(v2, v);
                if w == u || w == v {
                    continue;
                }
                if arrow_set.contains(&(w, u)) {
                    let mut cycle = [u, v, w];
                    let min = (0..3).min_by_key(|&i| cycle[i]).unwrap();
                    cycle.rotate_left(min);
                    cycles.insert(cycle);
                }
            }
        }
        cycles.into_iter().collect()
    }

    /// Replaces the label of one vertex, re-sorting into canonical order.
    pub fn relabel(&self, v: usize, label: VertexLabel) -> Result<Quiver> {
        let mut labels = self.labels.clone();
        labels[v] = label;
        Quiver::new(labels, self.arrows.clone())
    }

    fn with_arrows(&self, arrows: Vec<(usize, usize)>) -> Quiver {
        let mut arrows = arrows;
        arrows.sort();
        Quiver {
            labels: self.labels.clone(),
            arrows,
        }
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows
            .iter()
            .map(|&(s, t)| format!("{}->{}", self.labels[s], self.labels[t]))
            .collect();
        write!(f, "[{}]", arrows.join(", "))
    }
}

/// Fomin-Zelevinsky mutation at a vertex without loop or 2-cycle: compose
/// the paths through the vertex, reverse its adjacent arrows, then cancel
/// 2-cycles maximally.
pub fn fz_mutate(q: &Quiver, v: usize) -> Result<Quiver> {
    if v >= q.vertex_count() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    if q.has_loop_at(v) {
        return Err(Error::MutationUndefined(q.labels[v].to_string()));
    }
    for u in 0..q.vertex_count() {
        if u != v && q.arrow_count(u, v) > 0 && q.arrow_count(v, u) > 0 {
            return Err(Error::MutationUndefined(q.labels[v].to_string()));
        }
    }
    let mut counts: BTreeMap<(usize, usize), isize> = BTreeMap::new();
    let incoming: Vec<usize> = q.arrows.iter().filter(|a| a.1 == v).map(|a| a.0).collect();
    let outgoing: Vec<usize> = q.arrows.iter().filter(|a| a.0 == v).map(|a| a.1).collect();
    for &(s, t) in &q.arrows {
        let key = if s == v || t == v { (t, s) } else { (s, t) };
        *counts.entry(key).or_insert(0) += 1;
    }
    for &u in &incoming {
        for &w in &outgoing {
            *counts.entry((u, w)).or_insert(0) += 1;
        }
    }
    // Maximal cancellation of 2-cycles.
    let keys: Vec<(usize, usize)> = counts.keys().copied().collect();
    for (s, t) in keys {
        if s < t {
            let forward = *counts.get(&(s, t)).unwrap_or(&0);
            let backward = *counts.get(&(t, s)).unwrap_or(&0);
            let cancel = forward.min(backward);
            if cancel > 0 {
                *counts.get_mut(&(s, t)).unwrap() -= cancel;
                *counts.get_mut(&(t, s)).unwrap() -= cancel;
            }
        }
    }
    let mut arrows = Vec::new();
    for ((s, t), m) in counts {
        for _ in 0..m {
            arrows.push((s, t));
        }
    }
    Ok(q.with_arrows(arrows))
}

/// A quiver with a single distinguished loop. The loop arrow is part of the
/// underlying quiver; `loop_vertex` caches its position.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct QTilde {
    quiver: Quiver,
    loop_vertex: usize,
}

impl QTilde {
    /// Wraps a quiver that already carries exactly one loop.
    pub fn from_quiver(quiver: Quiver) -> Result<QTilde> {
        let loops: Vec<usize> = (0..quiver.vertex_count())
            .filter(|&v| quiver.has_loop_at(v))
            .collect();
        match loops.as_slice() {
            [c] => Ok(QTilde {
                loop_vertex: *c,
                quiver,
            }),
            _ => Err(Error::NotInFamily(vec![format!(
                "expected exactly one loop, found {}",
                loops.len()
            )])),
        }
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn loop_vertex(&self) -> usize {
        self.loop_vertex
    }

    pub fn loop_label(&self) -> &VertexLabel {
        &self.quiver.labels[self.loop_vertex]
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn three_cycles(&self) -> Vec<[usize; 3]> {
        self.quiver.three_cycles()
    }

    /// Arrows without the distinguished loop.
    pub fn plain_arrows(&self) -> Vec<(usize, usize)> {
        let c = self.loop_vertex;
        self.quiver
            .arrows
            .iter()
            .copied()
            .filter(|&a| a != (c, c))
            .collect()
    }

    /// Re-derives the loop position after an operation on the underlying
    /// quiver that did not touch the loop.
    fn rewrap(quiver: Quiver) -> QTilde {
        QTilde::from_quiver(quiver).expect("operation preserved the unique loop")
    }

    pub fn relabel(&self, v: usize, label: VertexLabel) -> Result<QTilde> {
        Ok(QTilde::rewrap(self.quiver.relabel(v, label)?))
    }
}

impl fmt::Display for QTilde {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.quiver)
    }
}

/// Adds a loop at `c`; the vertex must not carry one already.
pub fn gamma_c(q: &Quiver, c: usize) -> Result<QTilde> {
    if c >= q.vertex_count() {
        return Err(Error::UnknownVertex(c.to_string()));
    }
    if q.has_loop_at(c) {
        return Err(Error::Invariant(format!(
            "vertex {} already carries a loop",
            q.labels[c]
        )));
    }
    let mut arrows = q.arrows.clone();
    arrows.push((c, c));
    Ok(QTilde {
        quiver: q.with_arrows(arrows),
        loop_vertex: c,
    })
}

/// Removes the distinguished loop.
pub fn delta_c(qt: &QTilde) -> Quiver {
    qt.quiver.with_arrows(qt.plain_arrows())
}

/// Quiver mutation extended to the loop vertex.
///
/// Away from the loop this is Fomin-Zelevinsky mutation of the loop-free
/// part. At the loop vertex: with one neighbour the unique adjacent arrow is
/// reversed; with two neighbours the unique 3-cycle through the vertex is
/// reversed; with no neighbour nothing changes.
pub fn extended_mutate(qt: &QTilde, v: usize) -> Result<QTilde> {
    if v >= qt.vertex_count() {
        return Err(Error::UnknownVertex(v.to_string()));
    }
    let c = qt.loop_vertex;
    if v != c {
        let mutated = fz_mutate(&delta_c(qt), v)?;
        return gamma_c(&mutated, c);
    }
    let neighbours = qt.quiver.neighbours(c);
    match neighbours.len() {
        0 => Ok(qt.clone()),
        1 => {
            let arrows = qt
                .quiver
                .arrows
                .iter()
                .map(|&(s, t)| if (s == c) != (t == c) { (t, s) } else { (s, t) })
                .collect();
            Ok(QTilde::rewrap(qt.quiver.with_arrows(arrows)))
        }
        2 => {
            let cycle = qt
                .three_cycles()
                .into_iter()
                .find(|cyc| cyc.contains(&c))
                .ok_or_else(|| {
                    Error::NotInFamily(vec![format!(
                        "loop vertex {} has two neighbours but no 3-cycle",
                        qt.loop_label()
                    )])
                })?;
            let cycle_arrows: BTreeSet<(usize, usize)> = [
                (cycle[0], cycle[1]),
                (cycle[1], cycle[2]),
                (cycle[2], cycle[0]),
            ]
            .into_iter()
            .collect();
            let arrows = qt
                .quiver
                .arrows
                .iter()
                .map(|&a| {
                    if cycle_arrows.contains(&a) {
                        (a.1, a.0)
                    } else {
                        a
                    }
                })
                .collect();
            Ok(QTilde::rewrap(qt.quiver.with_arrows(arrows)))
        }
        d => Err(Error::NotInFamily(vec![format!(
            "loop vertex {} has {d} neighbours",
            qt.loop_label()
        )])),
    }
}

/// The quiver of the standard object of a wing: a linear path
/// `(a,1) -> ... -> (a,n-1)` with the loop at the long summand.
pub fn standard_quiver(tube: &ClusterTube, apex: usize) -> QTilde {
    let n = tube.rank();
    let labels: Vec<VertexLabel> = (1..n)
        .map(|len| VertexLabel::Summand(Indec::new(apex, len)))
        .collect();
    let mut arrows: Vec<(usize, usize)> = (0..n - 2).map(|i| (i, i + 1)).collect();
    arrows.push((n - 2, n - 2));
    let quiver = Quiver::new(labels, arrows).expect("standard quiver is well formed");
    QTilde::from_quiver(quiver).expect("standard quiver has one loop")
}

/// Checks the membership axioms of the quiver family, returning one
/// diagnostic per failed axiom. An empty list means the quiver belongs to
/// the family for the given rank.
pub fn membership_diagnostics(qt: &QTilde, rank: usize) -> Vec<String> {
    let mut bad = Vec::new();
    let q = &qt.quiver;
    let vcount = q.vertex_count();
    if vcount != rank - 1 {
        bad.push(format!("expected {} vertices, found {vcount}", rank - 1));
    }
    let plain = qt.plain_arrows();

    // No multiple arrows, no 2-cycles (loops counted separately).
    let mut multiplicity: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for &a in &plain {
        *multiplicity.entry(a).or_insert(0) += 1;
    }
    if multiplicity.values().any(|&m| m > 1) {
        bad.push("multiple arrows between a pair of vertices".into());
    }
    if multiplicity
        .keys()
        .any(|&(s, t)| s < t && multiplicity.contains_key(&(t, s)))
    {
        bad.push("2-cycle present".into());
    }

    // Minimal (chordless) cycles of the underlying graph must be oriented
    // 3-cycles. Vertex counts are tiny, so scan induced subsets directly.
    let mut undirected: BTreeSet<(usize, usize)> = BTreeSet::new();
    for &(s, t) in &plain {
        if s != t {
            undirected.insert((s.min(t), s.max(t)));
        }
    }
    let oriented: BTreeSet<[usize; 3]> = qt.three_cycles().into_iter().collect();
    for subset in 1u32..(1 << vcount) {
        let members: Vec<usize> = (0..vcount).filter(|&v| subset >> v & 1 == 1).collect();
        if members.len() < 3 {
            continue;
        }
        if !induces_cycle(&members, &undirected) {
            continue;
        }
        if members.len() != 3 {
            bad.push(format!("minimal cycle of length {}", members.len()));
        } else if !oriented.contains(&[members[0], members[1], members[2]])
            && !oriented.contains(&[members[0], members[2], members[1]])
        {
            bad.push(format!("non-oriented triangle {members:?}"));
        }
    }

    // Degree bounds and the triangle structure around each vertex.
    for v in 0..vcount {
        let degree = q.neighbours(v).len();
        if degree > 4 {
            bad.push(format!("vertex {} has {degree} neighbours", q.labels[v]));
            continue;
        }
        let triangles: Vec<&[usize; 3]> = oriented.iter().filter(|c| c.contains(&v)).collect();
        let arrows_at: Vec<(usize, usize)> = plain
            .iter()
            .copied()
            .filter(|&(s, t)| s == v || t == v)
            .collect();
        let in_some_triangle = |a: &(usize, usize)| {
            triangles
                .iter()
                .any(|c| c.contains(&a.0) && c.contains(&a.1))
        };
        match degree {
            4 => {
                let covered = arrows_at.iter().filter(|a| in_some_triangle(a)).count();
                if triangles.len() != 2 || covered != 4 {
                    bad.push(format!(
                        "vertex {} has four neighbours but its arrows do not split into two 3-cycles",
                        q.labels[v]
                    ));
                }
            }
            3 => {
                let covered = arrows_at.iter().filter(|a| in_some_triangle(a)).count();
                if triangles.len() != 1 || covered != 2 {
                    bad.push(format!(
                        "vertex {} has three neighbours but not exactly one adjacent 3-cycle",
                        q.labels[v]
                    ));
                }
            }
            _ => {}
        }
    }

    // Exactly one loop, and its vertex has zero neighbours (single-vertex
    // quiver only), one neighbour, or two neighbours on a 3-cycle.
    let loops: Vec<usize> = (0..vcount).filter(|&v| q.has_loop_at(v)).collect();
    if loops != vec![qt.loop_vertex] {
        bad.push(format!(
            "expected one loop at {}, found {loops:?}",
            qt.loop_vertex
        ));
    } else {
        let c = qt.loop_vertex;
        let degree = q.neighbours(c).len();
        let on_triangle = oriented.iter().any(|cyc| cyc.contains(&c));
        let ok = match degree {
            0 => vcount == 1,
            1 => true,
            2 => on_triangle,
            _ => false,
        };
        if !ok {
            bad.push(format!(
                "loop vertex {} has {degree} neighbours{}",
                q.labels[c],
                if degree == 2 {
                    " not traversed by a 3-cycle"
                } else {
                    ""
                }
            ));
        }
    }
    bad
}

fn induces_cycle(members: &[usize], undirected: &BTreeSet<(usize, usize)>) -> bool {
    let mut degree: BTreeMap<usize, usize> = members.iter().map(|&v| (v, 0)).collect();
    let mut edge_count = 0;
    for &(s, t) in undirected {
        if degree.contains_key(&s) && degree.contains_key(&t) {
            *degree.get_mut(&s).unwrap() += 1;
            *degree.get_mut(&t).unwrap() += 1;
            edge_count += 1;
        }
    }
    if edge_count != members.len() || degree.values().any(|&d| d != 2) {
        return false;
    }
    // Degrees all 2 with |E| = |V|: connected means a single cycle.
    let mut seen = BTreeSet::from([members[0]]);
    let mut stack = vec![members[0]];
    while let Some(v) = stack.pop() {
        for &(s, t) in undirected {
            let w = if s == v {
                t
            } else if t == v {
                s
            } else {
                continue;
            };
            if degree.contains_key(&w) && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen.len() == members.len()
}

pub fn validate_membership(qt: &QTilde, rank: usize) -> bool {
    membership_diagnostics(qt, rank).is_empty()
}

/// Quiver isomorphism ignoring labels: some vertex bijection must match the
/// arrow multisets (loops to loops). Backtracking with degree invariants is
/// plenty at these sizes.
pub fn quiver_iso(a: &Quiver, b: &Quiver) -> bool {
    let n = a.vertex_count();
    if n != b.vertex_count() || a.arrows.len() != b.arrows.len() {
        return false;
    }
    let profile = |q: &Quiver, v: usize| {
        let outs = q.arrows.iter().filter(|&&(s, t)| s == v && t != v).count();
        let ins = q.arrows.iter().filter(|&&(s, t)| t == v && s != v).count();
        let loops = q.arrow_count(v, v);
        (outs, ins, loops)
    };
    let pa: Vec<_> = (0..n).map(|v| profile(a, v)).collect();
    let pb: Vec<_> = (0..n).map(|v| profile(b, v)).collect();
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
    }
    let mut assignment: Vec<Option<usize>> = vec![None; n];
    let mut used = vec![false; n];
    fn consistent(
        a: &Quiver,
        b: &Quiver,
        assignment: &[Option<usize>],
        v: usize,
        image: usize,
    ) -> bool {
        for (u, slot) in assignment.iter().enumerate() {
            let Some(iu) = *slot else { continue };
            if a.arrow_count(v, u) != b.arrow_count(image, iu)
                || a.arrow_count(u, v) != b.arrow_count(iu, image)
            {
                return false;
            }
        }
        a.arrow_count(v, v) == b.arrow_count(image, image)
    }
    fn search(
        a: &Quiver,
        b: &Quiver,
        pa: &[(usize, usize, usize)],
        pb: &[(usize, usize, usize)],
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        v: usize,
    ) -> bool {
        if v == assignment.len() {
            return true;
        }
        for image in 0..assignment.len() {
            if used[image] || pa[v] != pb[image] {
                continue;
            }
            if consistent(a, b, assignment, v, image) {
                assignment[v] = Some(image);
                used[image] = true;
                if search(a, b, pa, pb, assignment, used, v + 1) {
                    return true;
                }
                assignment[v] = None;
                used[image] = false;
            }
        }
        false
    }
    search(a, b, &pa, &pb, &mut assignment, &mut used, 0)
}

/// One term of the canonical potential.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum PotentialTerm {
    /// The cube of the distinguished loop.
    LoopCube(usize),
    /// An oriented 3-cycle, smallest vertex first.
    ThreeCycle([usize; 3]),
}

/// A family quiver together with its canonical potential: the loop cubed
/// plus every 3-cycle. The terms are fully determined by the quiver and are
/// stored for explicitness.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuiverWithPotential {
    pub qtilde: QTilde,
    pub terms: Vec<PotentialTerm>,
}

pub fn potential_of(qt: &QTilde) -> QuiverWithPotential {
    let mut terms = vec![PotentialTerm::LoopCube(qt.loop_vertex)];
    terms.extend(qt.three_cycles().into_iter().map(PotentialTerm::ThreeCycle));
    QuiverWithPotential {
        qtilde: qt.clone(),
        terms,
    }
}

impl QuiverWithPotential {
    /// The forbidden length-2 paths of the Jacobian quotient: the loop
    /// squared, plus both-arrow compositions inside each 3-cycle. Each entry
    /// is (first arrow, second arrow) as vertex pairs.
    pub fn relations(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for term in &self.terms {
            match *term {
                PotentialTerm::LoopCube(c) => out.push(((c, c), (c, c))),
                PotentialTerm::ThreeCycle([u, v, w]) => {
                    out.push(((u, v), (v, w)));
                    out.push(((v, w), (w, u)));
                    out.push(((w, u), (u, v)));
                }
            }
        }
        out.sort();
        out
    }
}

/// The quiver of the endomorphism algebra of a maximal rigid object,
/// computed by replaying extended mutations along a simple-mutation path
/// from the standard object of its wing. Vertex labels track the exchanged
/// summand at every step, and the result is checked against the membership
/// axioms.
pub fn quiver_of(tube: &ClusterTube, graph: &ExchangeGraph, t: &MaximalRigid) -> Result<QTilde> {
    let start = MaximalRigid::standard(tube, t.apex());
    let path = graph.mutation_path(&start, t)?;
    let mut quiver = standard_quiver(tube, t.apex());
    let mut current = start;
    for removed in path {
        let edge = crate::mutation::mutate(tube, &current, removed)?;
        quiver = replay_step(&quiver, removed, edge.added)?;
        current = edge.target;
    }
    let diagnostics = membership_diagnostics(&quiver, tube.rank());
    if !diagnostics.is_empty() {
        return Err(Error::NotInFamily(diagnostics));
    }
    Ok(quiver)
}

/// Mutates at the vertex labelled by the removed summand, then renames it to
/// the added one.
pub fn replay_step(qt: &QTilde, removed: Indec, added: Indec) -> Result<QTilde> {
    let v = qt
        .quiver
        .vertex_by_label(&VertexLabel::Summand(removed))
        .ok_or_else(|| Error::UnknownVertex(removed.to_string()))?;
    let mutated = extended_mutate(qt, v)?;
    mutated.relabel(v, VertexLabel::Summand(added))
}

/// Quivers for every node of the exchange graph at once, by replaying
/// mutations along a breadth-first spanning tree. Agrees with `quiver_of`
/// node by node; the property suite checks this.
pub fn node_quivers(tube: &ClusterTube, graph: &ExchangeGraph) -> Result<Vec<QTilde>> {
    let start = MaximalRigid::standard(tube, 1);
    let root = graph
        .node_index(&start)
        .ok_or_else(|| Error::Invariant("standard object missing from graph".into()))?;
    let mut quivers: Vec<Option<QTilde>> = vec![None; graph.nodes().len()];
    quivers[root] = Some(standard_quiver(tube, 1));
    let mut queue = std::collections::VecDeque::from([root]);
    while let Some(node) = queue.pop_front() {
        let current = quivers[node].clone().expect("visited nodes have quivers");
        for &ei in graph.edges_at(node) {
            let edge = &graph.edges()[ei];
            let (next, removed, added) = graph.traverse(edge, node);
            if quivers[next].is_none() {
                quivers[next] = Some(replay_step(&current, removed, added)?);
                queue.push_back(next);
            }
        }
    }
    quivers
        .into_iter()
        .enumerate()
        .map(|(i, q)| {
            q.ok_or_else(|| Error::Invariant(format!("node {i} unreachable during replay")))
        })
        .collect()
}
