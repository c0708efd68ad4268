use super::{classify_relation, ArrowSet, ArrowType, Dyad};
use crate::error::{Error, Result};

/// Parents of `child` in the meta-DAG over nodes `1..=n` built from `arrows`,
/// in `(hi, lo)` order of the parent dyad.
pub fn parents_of(child: Dyad, arrows: ArrowSet, n: u32) -> Result<Vec<(Dyad, ArrowType)>> {
    if child.hi() > n {
        return Err(Error::Precondition(format!(
            "child {child} is outside a network of {n} nodes"
        )));
    }
    Ok(Dyad::all(n)
        .filter_map(|p| classify_relation(p, child).map(|a| (p, a)))
        .filter(|(_, a)| arrows.contains(*a))
        .collect())
}

/// Graphviz rendering of the meta-DAG on `n` nodes: one vertex `X_ij` per
/// dyad and one edge per parent relation, labeled with its arrow type.
pub fn metadag_dot(arrows: ArrowSet, n: u32) -> Result<String> {
    let mut out = format!("digraph metadag_{n} {{\n  node [shape=plaintext];\n");
    for d in Dyad::all(n) {
        out.push_str(&format!(
            "  x{lo}_{hi} [label=\"X_{lo}{hi}\"];\n",
            lo = d.lo(),
            hi = d.hi()
        ));
    }
    for child in Dyad::all(n) {
        for (p, a) in parents_of(child, arrows, n)? {
            out.push_str(&format!(
                "  x{}_{} -> x{}_{} [label=\"{a}\"];\n",
                p.lo(),
                p.hi(),
                child.lo(),
                child.hi()
            ));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
