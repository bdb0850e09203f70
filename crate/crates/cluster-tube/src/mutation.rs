//! Mutation of maximal rigid objects and the exchange graph they generate.
//!
//! Replacing one summand R of a maximal rigid object by the unique other
//! complement R' is a mutation; it is simple exactly when the exchanged
//! summands have length < n-1, equivalently when the wing is preserved.
//! The "exactly two complements" fact is re-checked on every single call
//! rather than assumed.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::rigid::{self, MaximalRigid};
use crate::tube::{ClusterTube, Indec};

/// One mutation, with both endpoints materialized.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MutationEdge {
    pub source: MaximalRigid,
    pub target: MaximalRigid,
    pub removed: Indec,
    pub added: Indec,
    pub simple: bool,
}

/// An undirected edge of the exchange graph, endpoints given as node indices.
/// `removed`/`added` are relative to walking from `source` to `target`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GraphEdge {
    pub source: usize,
    pub target: usize,
    pub removed: Indec,
    pub added: Indec,
    pub simple: bool,
}

/// The full exchange graph: nodes are canonical maximal rigid objects, each
/// node has one mutation per summand, and every undirected edge is stored
/// once. Node order and edge order are canonical, so serialization is
/// byte-deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExchangeGraph {
    rank: usize,
    nodes: Vec<MaximalRigid>,
    edges: Vec<GraphEdge>,
    adjacency: Vec<Vec<usize>>,
}

/// Mutates `t` at its summand `r`, returning the new object and the edge.
///
/// The implementation searches all rigid indecomposables X with
/// `(t \ r) + X` maximal rigid and insists on finding exactly two of them,
/// {r, r'}. In the non-simple case the closed-form complement
/// `(a+b+1, n-1)` must agree with the search result.
pub fn mutate(tube: &ClusterTube, t: &MaximalRigid, r: Indec) -> Result<MutationEdge> {
    let n = tube.rank();
    if !t.contains(r) {
        return Err(Error::NotASummand(r.to_string()));
    }
    let rest: Vec<Indec> = t.summands().iter().copied().filter(|&x| x != r).collect();
    let mut candidates: Vec<Indec> = tube
        .rigid_indecomposables()
        .into_iter()
        .filter(|&x| !rest.contains(&x) && rigid::compatible_with_all(tube, &rest, x))
        .collect();
    candidates.sort();
    if candidates.len() != 2 || !candidates.contains(&r) {
        return Err(Error::Invariant(format!(
            "complements of {t} minus {r}: expected exactly {{{r}, r'}}, found {candidates:?}"
        )));
    }
    let added = if candidates[0] == r {
        candidates[1]
    } else {
        candidates[0]
    };
    if r.length == n - 1 {
        let triple = rigid::subwing_triple(tube, t)?;
        let expected = tube.indec(t.apex() as i64 + triple.b as i64 + 1, n - 1)?;
        if added != expected {
            return Err(Error::Invariant(format!(
                "non-simple mutation of {t}: search found {added}, formula gives {expected}"
            )));
        }
    }
    let mut new_summands = rest;
    new_summands.push(added);
    let target = MaximalRigid::new(tube, new_summands)?;
    let simple = r.length < n - 1;
    Ok(MutationEdge {
        source: t.clone(),
        target,
        removed: r,
        added,
        simple,
    })
}

impl ExchangeGraph {
    /// Breadth-first closure of `mutate` starting from the standard object
    /// of apex 1.
    pub fn build(tube: &ClusterTube) -> Result<ExchangeGraph> {
        let start = MaximalRigid::standard(tube, 1);
        let mut index: BTreeMap<MaximalRigid, usize> = BTreeMap::new();
        let mut discovered = vec![start.clone()];
        index.insert(start.clone(), 0);
        let mut queue = VecDeque::from([start]);
        let mut raw_edges: BTreeSet<(usize, usize, Indec, Indec, bool)> = BTreeSet::new();
        while let Some(node) = queue.pop_front() {
            let from = index[&node];
            for &r in node.summands() {
                let edge = mutate(tube, &node, r)?;
                let to = *index.entry(edge.target.clone()).or_insert_with(|| {
                    discovered.push(edge.target.clone());
                    queue.push_back(edge.target.clone());
                    discovered.len() - 1
                });
                let key = if from <= to {
                    (from, to, edge.removed, edge.added, edge.simple)
                } else {
                    (to, from, edge.added, edge.removed, edge.simple)
                };
                raw_edges.insert(key);
            }
        }
        // Renumber into canonical (sorted) node order.
        let mut nodes = discovered;
        nodes.sort();
        let renumber: BTreeMap<&MaximalRigid, usize> =
            nodes.iter().enumerate().map(|(i, t)| (t, i)).collect();
        let old_to_new: Vec<usize> = {
            let mut map = vec![0; nodes.len()];
            for (t, &old) in &index {
                map[old] = renumber[t];
            }
            map
        };
        let mut edges: Vec<GraphEdge> = raw_edges
            .into_iter()
            .map(|(s, t, removed, added, simple)| {
                let (s, t) = (old_to_new[s], old_to_new[t]);
                if s <= t {
                    GraphEdge {
                        source: s,
                        target: t,
                        removed,
                        added,
                        simple,
                    }
                } else {
                    GraphEdge {
                        source: t,
                        target: s,
                        removed: added,
                        added: removed,
                        simple,
                    }
                }
            })
            .collect();
        edges.sort_by_key(|e| (e.source, e.target));
        ExchangeGraph::from_parts(tube.rank(), nodes, edges)
    }

    /// Assembles a graph from already-validated nodes and edges, e.g. after
    /// parsing a serialized form. Node order, edge endpoints and the summand
    /// exchange data are checked; the canonical form this produces is
    /// identical to what `build` returns for the same data.
    pub fn from_parts(
        rank: usize,
        nodes: Vec<MaximalRigid>,
        edges: Vec<GraphEdge>,
    ) -> Result<ExchangeGraph> {
        if nodes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse("nodes are not in canonical order".into()));
        }
        if let Some(bad) = nodes.iter().find(|t| t.rank() != rank) {
            return Err(Error::RankMismatch(rank, bad.rank()));
        }
        for e in &edges {
            let (Some(source), Some(target)) = (nodes.get(e.source), nodes.get(e.target)) else {
                return Err(Error::Parse(format!(
                    "edge ({}, {}) points outside the {} nodes",
                    e.source,
                    e.target,
                    nodes.len()
                )));
            };
            let mut rebuilt: Vec<Indec> = source
                .summands()
                .iter()
                .copied()
                .filter(|&x| x != e.removed)
                .chain([e.added])
                .collect();
            rebuilt.sort();
            if !source.contains(e.removed) || rebuilt != target.summands() {
                return Err(Error::Parse(format!(
                    "edge ({}, {}) does not exchange {} for {}",
                    e.source, e.target, e.removed, e.added
                )));
            }
        }
        let mut adjacency = vec![Vec::new(); nodes.len()];
        for (i, e) in edges.iter().enumerate() {
            adjacency[e.source].push(i);
            adjacency[e.target].push(i);
        }
        Ok(ExchangeGraph {
            rank,
            nodes,
            edges,
            adjacency,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nodes(&self) -> &[MaximalRigid] {
        &self.nodes
    }

    pub fn edges(&self) -> &[GraphEdge] {
        &self.edges
    }

    pub fn node_index(&self, t: &MaximalRigid) -> Option<usize> {
        self.nodes.binary_search(t).ok()
    }

    pub fn edges_at(&self, node: usize) -> &[usize] {
        &self.adjacency[node]
    }

    /// Walks edge `e` out of `node`, returning the far endpoint together
    /// with the (removed, added) pair as seen from `node`.
    pub fn traverse(&self, e: &GraphEdge, node: usize) -> (usize, Indec, Indec) {
        if e.source == node {
            (e.target, e.removed, e.added)
        } else {
            (e.source, e.added, e.removed)
        }
    }

    /// A shortest mutation path, as the list of summands to mutate at.
    ///
    /// When both endpoints share an apex the search is restricted to simple
    /// edges, so the path stays inside the wing; such a path always exists.
    pub fn mutation_path(&self, from: &MaximalRigid, to: &MaximalRigid) -> Result<Vec<Indec>> {
        if from.rank() != to.rank() {
            return Err(Error::RankMismatch(from.rank(), to.rank()));
        }
        let start = self
            .node_index(from)
            .ok_or_else(|| Error::Invariant(format!("{from} is not a node")))?;
        let goal = self
            .node_index(to)
            .ok_or_else(|| Error::Invariant(format!("{to} is not a node")))?;
        let simple_only = from.apex() == to.apex();
        let mut back: Vec<Option<(usize, Indec)>> = vec![None; self.nodes.len()];
        let mut seen = vec![false; self.nodes.len()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(node) = queue.pop_front() {
            if node == goal {
                break;
            }
            for &ei in &self.adjacency[node] {
                let edge = &self.edges[ei];
                if simple_only && !edge.simple {
                    continue;
                }
                let (next, removed, _) = self.traverse(edge, node);
                if !seen[next] {
                    seen[next] = true;
                    back[next] = Some((node, removed));
                    queue.push_back(next);
                }
            }
        }
        if !seen[goal] {
            return Err(Error::Invariant(format!(
                "no path from {from} to {to} in the exchange graph"
            )));
        }
        let mut path = Vec::new();
        let mut cur = goal;
        while let Some((prev, removed)) = back[cur] {
            path.push(removed);
            cur = prev;
        }
        path.reverse();
        Ok(path)
    }
}
