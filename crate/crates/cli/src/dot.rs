//! Graphviz rendering of Dynkin diagrams.
//!
//! A `k`-fold edge becomes `k` parallel edges; the first carries the arrow,
//! drawn from the long root towards the short one.

use std::fmt::Write;

use flagtype_core::{CartanMatrix, Kind};

use crate::CliError;

pub fn render(m: &CartanMatrix, marked: &[usize], title: Option<&str>) -> Result<String, CliError> {
    let d = m.to_diagram()?;
    let mut out = String::from("graph dynkin {\n");
    if let Some(t) = title {
        let _ = writeln!(out, "  label=\"{t}\";");
    }
    out.push_str("  node [shape=circle];\n");
    for i in 1..=d.rank() {
        if marked.contains(&i) {
            let _ = writeln!(
                out,
                "  {i} [label=\"{i}\", style=filled, fillcolor=black, fontcolor=white];"
            );
        } else {
            let _ = writeln!(out, "  {i} [label=\"{i}\"];");
        }
    }
    for ((i, j), e) in d.edges() {
        let (a, b) = match e.head {
            Some(h) if h == i => (j, i),
            _ => (i, j),
        };
        for k in 0..e.multiplicity {
            if k == 0 && e.head.is_some() {
                let _ = writeln!(out, "  {a} -- {b} [dir=forward, arrowhead=normal];");
            } else {
                let _ = writeln!(out, "  {a} -- {b};");
            }
        }
    }
    out.push_str("}\n");
    Ok(out)
}

/// Title for a classification: `A3`, `A2xA1`, or the kind.
pub fn kind_title(kind: Kind, names: &[String]) -> String {
    if kind == Kind::Finite {
        names.join("x")
    } else {
        kind.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use flagtype_core::{catalog, Family};

    #[test]
    fn b2_has_arrow_to_short_node() {
        let s = render(&catalog(Family::B, 2).unwrap(), &[1], None).unwrap();
        assert!(s.contains("2 -- 1 [dir=forward, arrowhead=normal];"), "{s}");
        assert_eq!(s.matches(" -- ").count(), 2);
        assert!(s.contains("1 [label=\"1\", style=filled"));
    }

    #[test]
    fn g2_is_triple() {
        let s = render(&catalog(Family::G, 2).unwrap(), &[], Some("G2")).unwrap();
        assert_eq!(s.matches(" -- ").count(), 3);
        assert!(s.contains("2 -- 1 [dir=forward"), "{s}");
    }

    #[test]
    fn overflow_is_an_error() {
        let m = CartanMatrix::new(&[vec![2, -2], vec![-2, 2]]).unwrap();
        assert!(render(&m, &[], None).is_err());
    }
}
