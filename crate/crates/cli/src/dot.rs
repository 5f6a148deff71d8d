use std::fmt::Write;

use jdlat::FiniteLattice;

/// Hasse diagram in DOT: one node per element, one edge per cover, drawn
/// bottom-up with each height on its own rank.
pub fn export_dot(l: &FiniteLattice) -> String {
    let mut out = String::new();
    out.push_str("digraph lattice {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=plaintext];\n");
    out.push_str("  edge [arrowhead=none];\n");
    for x in 0..l.size() {
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", escape(l.label(x)));
    }
    for h in 0..=l.length() {
        let nodes: Vec<String> = (0..l.size())
            .filter(|&x| l.height(x) == h)
            .map(|x| format!("n{x};"))
            .collect();
        let _ = writeln!(out, "  {{ rank=same; {} }}", nodes.join(" "));
    }
    for p in l.covers() {
        let _ = writeln!(out, "  n{} -> n{};", p.a, p.b);
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(dot: &str, needle: &str) -> usize {
        dot.lines().filter(|l| l.contains(needle)).count()
    }

    #[test]
    fn two_chain() {
        let dot = export_dot(&FiniteLattice::chain(2));
        assert_eq!(count(&dot, "[label="), 2);
        assert_eq!(count(&dot, "->"), 1);
    }

    #[test]
    fn boolean_square() {
        let dot = export_dot(&FiniteLattice::boolean(2));
        assert_eq!(count(&dot, "[label="), 4);
        assert_eq!(count(&dot, "->"), 4);
        assert!(dot.contains("{ rank=same; n1; n2; }"));
    }

    #[test]
    fn labels_are_escaped() {
        let l = FiniteLattice::chain(2).with_labels(vec!["a\"b".into(), "c".into()]);
        assert!(export_dot(&l).contains(r#"label="a\"b""#));
    }
}
