//! DOT rendering of partitions as two-row diagrams.

use std::fmt::Write;

use crate::elements::{Element, Partition};

fn node(p: usize, n: usize) -> String {
    if p < n {
        format!("u{}", p + 1)
    } else {
        format!("l{}", p - n + 1)
    }
}

/// Unprimed points on the top row, primed points below, and each block
/// drawn as a path through its points in increasing order.
pub fn render_partition(a: &Partition) -> String {
    let n = a.degree();
    let mut out = String::new();
    writeln!(out, "graph partition {{").unwrap();
    writeln!(out, "  node [shape=circle, width=0.3, fixedsize=true];").unwrap();
    writeln!(out, "  {{").unwrap();
    writeln!(out, "    rank=min;").unwrap();
    for x in 1..=n {
        writeln!(out, "    u{x} [label=\"{x}\"];").unwrap();
    }
    writeln!(out, "  }}").unwrap();
    writeln!(out, "  {{").unwrap();
    writeln!(out, "    rank=max;").unwrap();
    for x in 1..=n {
        writeln!(out, "    l{x} [label=\"{x}'\"];").unwrap();
    }
    writeln!(out, "  }}").unwrap();
    for block in a.blocks() {
        for pair in block.windows(2) {
            writeln!(out, "  {} -- {};", node(pair[0], n), node(pair[1], n)).unwrap();
        }
    }
    writeln!(out, "}}").unwrap();
    out
}
