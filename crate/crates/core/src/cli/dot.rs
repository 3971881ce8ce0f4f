use std::fmt::Write as _;

use crate::splitpre::SplitPreorder;

/// Graphviz rendering of the strict part: sources on the top rank, targets
/// on the bottom rank, one edge per strict pair.
pub fn emit_dot(r: &SplitPreorder) -> String {
    let mut out = String::from("digraph splitpre {\n");
    let rank = |out: &mut String, rank: &str, prefix: char, count: usize| {
        if count == 0 {
            return;
        }
        write!(out, "  {{ rank={rank};").expect("writing to a String");
        for i in 0..count {
            write!(out, " {prefix}{i};").expect("writing to a String");
        }
        out.push_str(" }\n");
    };
    rank(&mut out, "source", 's', r.src());
    rank(&mut out, "sink", 't', r.tgt());
    for (u, v) in r.strict_pairs() {
        writeln!(out, "  {u} -> {v};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}
