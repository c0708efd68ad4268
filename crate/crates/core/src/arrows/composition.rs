use std::fmt;

use super::{classify_relation, ArrowSet, ArrowType, Dyad};
use crate::error::{Error, Result};

/// The composition map `(X, Y) -> set of arrow types`.
///
/// Convention: `get(X, Y)` is the set of arrow types that can relate `p` to
/// `r` when `p -X-> q` and `q -Y-> r`; the `X` arrow is traversed first.
/// Composition is not commutative (`Old` then `Hub` gives `{Mid}`, `Hub` then
/// `Old` gives `{Path, Far, Mid}`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompositionTable {
    entries: [[ArrowSet; 8]; 8],
}

impl CompositionTable {
    /// Builds the table by brute force over every dyad triple on nodes
    /// `1..=max_node`. A composed pair touches at most six distinct nodes, so
    /// any `max_node >= 6` realizes every relative order and gives the same
    /// table.
    pub fn derive(max_node: u32) -> Result<Self> {
        if max_node < 6 {
            return Err(Error::Precondition(format!(
                "composition table needs max_node >= 6, got {max_node}"
            )));
        }
        let dyads: Vec<Dyad> = Dyad::all(max_node).collect();
        let mut entries = [[ArrowSet::EMPTY; 8]; 8];
        for &q in &dyads {
            let parents: Vec<(Dyad, ArrowType)> = dyads
                .iter()
                .filter_map(|&p| classify_relation(p, q).map(|x| (p, x)))
                .collect();
            let children: Vec<(Dyad, ArrowType)> = dyads
                .iter()
                .filter_map(|&r| classify_relation(q, r).map(|y| (r, y)))
                .collect();
            for &(p, x) in &parents {
                for &(r, y) in &children {
                    let z = classify_relation(p, r).unwrap_or_else(|| {
                        panic!("composition {x}∘{y} via {p}->{q}->{r} reached a future pattern")
                    });
                    entries[x as usize][y as usize].insert(z);
                }
            }
        }
        Ok(CompositionTable { entries })
    }

    pub fn get(&self, first: ArrowType, then: ArrowType) -> ArrowSet {
        self.entries[first as usize][then as usize]
    }

    /// Overwrites one cell. Only useful for experiments and mutation checks.
    pub fn set(&mut self, first: ArrowType, then: ArrowType, value: ArrowSet) {
        self.entries[first as usize][then as usize] = value;
    }

    /// CSV with a header row of `then` types and one row per `first` type.
    /// Cells are set literals, quoted because they contain commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("first\\then");
        for y in ArrowType::ALL {
            out.push(',');
            out.push_str(y.name());
        }
        out.push('\n');
        for x in ArrowType::ALL {
            out.push_str(x.name());
            for y in ArrowType::ALL {
                out.push_str(&format!(",\"{}\"", self.get(x, y)));
            }
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CompositionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = ArrowType::ALL
            .iter()
            .map(|&x| {
                ArrowType::ALL
                    .iter()
                    .map(|&y| self.get(x, y).to_string())
                    .collect()
            })
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(String::len)
            .max()
            .unwrap_or(0)
            .max(6);
        write!(f, "{:<6}", "")?;
        for y in ArrowType::ALL {
            write!(f, " {:<width$}", y.name())?;
        }
        writeln!(f)?;
        for (x, row) in ArrowType::ALL.iter().zip(&cells) {
            write!(f, "{:<6}", x.name())?;
            for c in row {
                write!(f, " {c:<width$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Union of `table(X, Y)` over all `X` in `s` and `Y` in `t`.
pub fn compose_sets(s: ArrowSet, t: ArrowSet, table: &CompositionTable) -> ArrowSet {
    let mut out = ArrowSet::EMPTY;
    for x in s.iter() {
        for y in t.iter() {
            out = out.union(table.get(x, y));
        }
    }
    out
}

/// Smallest superset of `s ∪ {Self}` closed under composition.
///
/// `Self` is adjoined here so that callers may pass stored class sets
/// directly; the result always contains `Self`.
pub fn transitive_closure(s: ArrowSet, table: &CompositionTable) -> ArrowSet {
    let mut cur = s.with(ArrowType::SelfArrow);
    loop {
        let next = cur.union(compose_sets(cur, cur, table));
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ArrowType::*;

    fn table() -> CompositionTable {
        CompositionTable::derive(6).unwrap()
    }

    #[test]
    fn rejects_small_node_range() {
        assert!(CompositionTable::derive(5).is_err());
    }

    #[test]
    fn anchor_cells() {
        let t = table();
        assert_eq!(t.get(Path, Path), ArrowSet::from([Far]));
        assert_eq!(t.get(Hub, Old), ArrowSet::from([Mid, Path, Far]));
        assert_eq!(t.get(Old, Hub), ArrowSet::from([Mid]));
    }

    #[test]
    fn self_is_identity() {
        let t = table();
        for x in ArrowType::ALL {
            assert_eq!(t.get(SelfArrow, x), ArrowSet::singleton(x));
            assert_eq!(t.get(x, SelfArrow), ArrowSet::singleton(x));
        }
    }

    #[test]
    fn stable_in_node_range() {
        assert_eq!(
            CompositionTable::derive(6).unwrap(),
            CompositionTable::derive(8).unwrap()
        );
    }

    #[test]
    fn compose_examples() {
        let t = table();
        let s = ArrowSet::from([SelfArrow, Hub, Path]);
        assert_eq!(
            compose_sets(s, s, &t),
            ArrowSet::from([SelfArrow, Hub, Path, Far])
        );
        assert_eq!(compose_sets(ArrowSet::EMPTY, s, &t), ArrowSet::EMPTY);
        let mid = ArrowSet::from([SelfArrow, Mid]);
        let step = compose_sets(mid, mid, &t);
        assert!(step.contains(Path) && step.contains(Far) && step.contains(Mid));
    }

    #[test]
    fn closure_examples() {
        let t = table();
        assert_eq!(
            transitive_closure(ArrowSet::from([SelfArrow, Hub, Path]), &t),
            ArrowSet::from([SelfArrow, Hub, Path, Far])
        );
        assert_eq!(
            transitive_closure(ArrowSet::from([SelfArrow]), &t),
            ArrowSet::from([SelfArrow])
        );
        assert_eq!(
            transitive_closure(ArrowSet::from([SelfArrow, Mid]), &t),
            ArrowSet::from([SelfArrow, Mid, Path, Far])
        );
        assert_eq!(
            transitive_closure(ArrowSet::from([SelfArrow, Hub, New]), &t),
            ArrowSet::from([SelfArrow, Hub, New, Near])
        );
    }

    #[test]
    fn csv_has_header_and_eight_rows() {
        let csv = table().to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 9);
        assert!(lines[0].starts_with("first\\then,Hub,Path"));
        assert!(lines[2].starts_with("Path,") && lines[2].contains("\"{Far}\""));
    }
}
