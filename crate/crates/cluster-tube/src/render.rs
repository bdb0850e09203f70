//! Deterministic text renderings: DOT files for graphs and quivers, and the
//! ASCII grid of the presented region.

use std::fmt::Write;

use crate::mutation::ExchangeGraph;
use crate::presentation::in_pr;
use crate::quiver::QTilde;
use crate::rigid::MaximalRigid;
use crate::tube::ClusterTube;

/// The exchange graph as an undirected DOT graph. Nodes are labelled by the
/// summand list, simple edges are solid, non-simple ones dashed.
pub fn exchange_graph_dot(g: &ExchangeGraph) -> String {
    let mut out = String::new();
    writeln!(out, "graph exchange_rank_{} {{", g.rank()).unwrap();
    writeln!(out, "  node [shape=box];").unwrap();
    for node in g.nodes() {
        writeln!(out, "  \"{node}\";").unwrap();
    }
    for e in g.edges() {
        let style = if e.simple { "solid" } else { "dashed" };
        writeln!(
            out,
            "  \"{}\" -- \"{}\" [style={style}];",
            g.nodes()[e.source],
            g.nodes()[e.target]
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// One quiver as a DOT digraph; the loop renders as a self-edge.
pub fn quiver_dot(name: &str, qt: &QTilde) -> String {
    let mut out = String::new();
    writeln!(out, "digraph {name} {{").unwrap();
    let labels = qt.quiver().labels();
    for label in labels {
        writeln!(out, "  \"{label}\";").unwrap();
    }
    for &(s, t) in qt.quiver().arrows() {
        writeln!(out, "  \"{}\" -> \"{}\";", labels[s], labels[t]).unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

/// Several quivers in one file, as consecutive DOT digraphs.
pub fn quivers_dot(quivers: &[(String, &QTilde)]) -> String {
    quivers
        .iter()
        .map(|(name, qt)| quiver_dot(name, qt))
        .collect::<Vec<_>>()
        .join("\n")
}

/// ASCII picture of the objects presented by the standard object of the
/// given apex, drawn over the fundamental strip of the tube: rows are
/// lengths from 2n-1 down to 1, columns follow the diagonal layout of the
/// tube (socle a sits at horizontal position a + (b-1)/2, modulo n, with the
/// left column repeated on the right in half the rows). `*` marks presented
/// objects, `o` the rest.
pub fn pr_grid(tube: &ClusterTube, apex: usize) -> String {
    let n = tube.rank();
    let t = MaximalRigid::standard(tube, apex);
    let mut out = String::new();
    writeln!(out, "presented region, rank {n}, apex {apex}").unwrap();
    for b in (1..=2 * n - 1).rev() {
        let mut row = vec![b' '; 2 * n + 1];
        for a in 1..=n {
            let x = 2 * a + (b - 1);
            let col = (x - 2) % (2 * n);
            let mark = if in_pr(tube, &t, crate::tube::Indec::new(a, b)) {
                b'*'
            } else {
                b'o'
            };
            row[col] = mark;
            if col == 0 {
                row[2 * n] = mark;
            }
        }
        let line = String::from_utf8(row).unwrap();
        writeln!(out, "{b:>2} | {}", line.trim_end()).unwrap();
    }
    writeln!(out, "   +{}", "-".repeat(2 * n + 2)).unwrap();
    writeln!(
        out,
        "     socle a = 1..{n} left to right along the bottom row"
    )
    .unwrap();
    out
}
