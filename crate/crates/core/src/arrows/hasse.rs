use std::collections::HashSet;

use super::{class_label, ArrowType, CompositionTable, MetaDagClass};
use crate::error::{Error, Result};

/// Classes ordered by inclusion of their arrow sets, with the covering pairs
/// (the transitive reduction of that order).
#[derive(Debug, Clone, PartialEq)]
pub struct HassePoset {
    pub nodes: Vec<MetaDagClass>,
    /// `(child, parent)` indices into `nodes`: `child ⊂ parent` with nothing
    /// strictly in between.
    pub covers: Vec<(usize, usize)>,
}

impl HassePoset {
    /// Strict inclusion between node `a` and node `b` (ignoring `Self`).
    pub fn less_than(&self, a: usize, b: usize) -> bool {
        let sa = self.nodes[a].arrows.without(ArrowType::SelfArrow);
        let sb = self.nodes[b].arrows.without(ArrowType::SelfArrow);
        sa != sb && sa.is_subset(sb)
    }

    pub fn parents_of(&self, child: usize) -> impl Iterator<Item = usize> + '_ {
        self.covers
            .iter()
            .filter(move |c| c.0 == child)
            .map(|c| c.1)
    }

    /// Graphviz rendering: one node per class labeled `Gen (Implied)`, one
    /// edge child -> parent per cover.
    pub fn to_dot(&self, table: &CompositionTable) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=ellipse];\n");
        for (k, node) in self.nodes.iter().enumerate() {
            out.push_str(&format!(
                "  c{k} [label=\"{}\"];\n",
                class_label(node.arrows, table)
            ));
        }
        for &(child, parent) in &self.covers {
            out.push_str(&format!("  c{child} -> c{parent};\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_hasse(classes: &[MetaDagClass]) -> Result<HassePoset> {
    let mut seen = HashSet::new();
    for c in classes {
        if !seen.insert(c.arrows.without(ArrowType::SelfArrow)) {
            return Err(Error::DuplicateClass(c.arrows.to_string()));
        }
    }
    let poset = HassePoset {
        nodes: classes.to_vec(),
        covers: Vec::new(),
    };
    let n = classes.len();
    let mut covers = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if poset.less_than(a, b)
                && !(0..n).any(|k| poset.less_than(a, k) && poset.less_than(k, b))
            {
                covers.push((a, b));
            }
        }
    }
    Ok(HassePoset { covers, ..poset })
}
