use std::fmt;

use super::{transitive_closure, ArrowSet, ArrowType, CompositionTable};

/// A deletion-invariant causal meta-DAG, identified by its arrow set.
/// `Self` is implicit and never stored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MetaDagClass {
    pub arrows: ArrowSet,
    pub closed: bool,
}

impl MetaDagClass {
    pub fn label(&self, table: &CompositionTable) -> String {
        class_label(self.arrows, table)
    }
}

impl fmt::Display for MetaDagClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.arrows)
    }
}

/// Order used when printing class names, matching the usual layout of the
/// poset (oldest-node patterns first).
pub const LABEL_ORDER: [ArrowType; 7] = [
    ArrowType::Old,
    ArrowType::Mid,
    ArrowType::Path,
    ArrowType::Far,
    ArrowType::Hub,
    ArrowType::Near,
    ArrowType::New,
];

/// All subsets of the seven substantive arrow types that do not contain both
/// `Old` and `New` (those two together create directed cycles).
pub fn enumerate_deletion_invariant() -> Vec<MetaDagClass> {
    (0u8..128)
        .map(|mask| {
            ArrowType::SUBSTANTIVE
                .iter()
                .enumerate()
                .filter(|(k, _)| mask & (1 << k) != 0)
                .map(|(_, &a)| a)
                .collect::<ArrowSet>()
        })
        .filter(|s| !(s.contains(ArrowType::Old) && s.contains(ArrowType::New)))
        .map(|arrows| MetaDagClass {
            arrows,
            closed: false,
        })
        .collect()
}

/// The distinct transitive closures of the deletion-invariant sets, sorted by
/// size then bit pattern.
pub fn enumerate_closed_classes(table: &CompositionTable) -> Vec<MetaDagClass> {
    let mut closed: Vec<ArrowSet> = enumerate_deletion_invariant()
        .into_iter()
        .map(|c| transitive_closure(c.arrows, table).without(ArrowType::SelfArrow))
        .collect();
    closed.sort_by_key(|s| (s.len(), s.bits()));
    closed.dedup();
    closed
        .into_iter()
        .map(|arrows| MetaDagClass {
            arrows,
            closed: true,
        })
        .collect()
}

/// Arrows of a closed set that are not implied by the rest of the set.
///
/// For every class reachable from the deletion-invariant sets these
/// generate the whole class; if they ever did not, missing arrows are added
/// back greedily in [`LABEL_ORDER`].
pub fn generators(arrows: ArrowSet, table: &CompositionTable) -> ArrowSet {
    let implied_by_rest = |a: ArrowType| transitive_closure(arrows.without(a), table).contains(a);
    let mut gens: ArrowSet = arrows.iter().filter(|&a| !implied_by_rest(a)).collect();
    let target = transitive_closure(arrows, table);
    for a in LABEL_ORDER {
        if transitive_closure(gens, table) == target {
            break;
        }
        if arrows.contains(a) {
            gens.insert(a);
        }
    }
    gens.without(ArrowType::SelfArrow)
}

/// Human-readable class name of the form `Gen1/Gen2 (Implied1/Implied2)`.
/// The empty class is written `∅`.
pub fn class_label(arrows: ArrowSet, table: &CompositionTable) -> String {
    let arrows = arrows.without(ArrowType::SelfArrow);
    if arrows.is_empty() {
        return "∅".to_string();
    }
    let gens = generators(arrows, table);
    let join = |s: ArrowSet| {
        LABEL_ORDER
            .iter()
            .filter(|a| s.contains(**a))
            .map(|a| a.name())
            .collect::<Vec<_>>()
            .join("/")
    };
    let implied: ArrowSet = arrows.iter().filter(|a| !gens.contains(*a)).collect();
    if implied.is_empty() {
        join(gens)
    } else {
        format!("{} ({})", join(gens), join(implied))
    }
}
