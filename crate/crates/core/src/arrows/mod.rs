//! Causal arrows between dyads of a growing network.
//!
//! A dyad is an unordered pair of nodes `(lo, hi)`. Because nodes arrive in
//! index order, a causal arrow from a parent dyad to a child dyad is
//! characterized entirely by where the two parent nodes fall relative to the
//! child's nodes. Thirteen order patterns exist; five involve a node that
//! arrives after the child (those would give every dyad infinitely many
//! parents) and are excluded. The remaining eight are the [`ArrowType`]s.

mod classes;
mod composition;
mod hasse;
mod metadag;

pub use classes::{
    class_label, enumerate_closed_classes, enumerate_deletion_invariant, generators, MetaDagClass,
    LABEL_ORDER,
};
pub use composition::{compose_sets, transitive_closure, CompositionTable};
pub use hasse::{build_hasse, HassePoset};
pub use metadag::{metadag_dot, parents_of};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An unordered pair of distinct nodes, stored with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dyad {
    lo: u32,
    hi: u32,
}

impl Dyad {
    pub fn new(lo: u32, hi: u32) -> Result<Self> {
        if lo == 0 || lo >= hi {
            return Err(Error::InvalidDyad { lo, hi });
        }
        Ok(Dyad { lo, hi })
    }

    pub fn lo(self) -> u32 {
        self.lo
    }

    pub fn hi(self) -> u32 {
        self.hi
    }

    /// All dyads over nodes `1..=n`, ordered by `(hi, lo)`.
    pub fn all(n: u32) -> impl Iterator<Item = Dyad> {
        (2..=n).flat_map(|hi| (1..hi).map(move |lo| Dyad { lo, hi }))
    }
}

impl fmt::Display for Dyad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// The eight kinds of causal arrow with finite ancestral sets.
///
/// Patterns in terms of node indices `a < b < c < d`, parent → child:
///
/// | kind | pattern         |
/// |------|-----------------|
/// | Hub  | (a,b) → (a,c)   |
/// | Path | (a,b) → (b,c)   |
/// | Old  | (a,c) → (b,c)   |
/// | New  | (b,c) → (a,c)   |
/// | Far  | (a,b) → (c,d)   |
/// | Mid  | (a,c) → (b,d)   |
/// | Near | (b,c) → (a,d)   |
/// | Self | (a,b) → (a,b)   |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowType {
    Hub,
    Path,
    Old,
    New,
    Far,
    Mid,
    Near,
    SelfArrow,
}

impl ArrowType {
    pub const ALL: [ArrowType; 8] = [
        ArrowType::Hub,
        ArrowType::Path,
        ArrowType::Old,
        ArrowType::New,
        ArrowType::Far,
        ArrowType::Mid,
        ArrowType::Near,
        ArrowType::SelfArrow,
    ];

    /// The seven substantive kinds (everything except `Self`).
    pub const SUBSTANTIVE: [ArrowType; 7] = [
        ArrowType::Hub,
        ArrowType::Path,
        ArrowType::Old,
        ArrowType::New,
        ArrowType::Far,
        ArrowType::Mid,
        ArrowType::Near,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ArrowType::Hub => "Hub",
            ArrowType::Path => "Path",
            ArrowType::Old => "Old",
            ArrowType::New => "New",
            ArrowType::Far => "Far",
            ArrowType::Mid => "Mid",
            ArrowType::Near => "Near",
            ArrowType::SelfArrow => "Self",
        }
    }

    fn bit(self) -> u8 {
        1 << (self as u8)
    }
}

impl fmt::Display for ArrowType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ArrowType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ArrowType::ALL
            .into_iter()
            .find(|a| a.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::Precondition(format!("unknown arrow type `{s}`")))
    }
}

/// A set of arrow types, stored as an 8-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ArrowSet(u8);

impl ArrowSet {
    pub const EMPTY: ArrowSet = ArrowSet(0);

    pub fn from_bits(bits: u8) -> Self {
        ArrowSet(bits)
    }

    pub fn bits(self) -> u8 {
        self.0
    }

    pub fn singleton(a: ArrowType) -> Self {
        ArrowSet(a.bit())
    }

    pub fn contains(self, a: ArrowType) -> bool {
        self.0 & a.bit() != 0
    }

    pub fn insert(&mut self, a: ArrowType) {
        self.0 |= a.bit();
    }

    #[must_use]
    pub fn with(self, a: ArrowType) -> Self {
        ArrowSet(self.0 | a.bit())
    }

    #[must_use]
    pub fn without(self, a: ArrowType) -> Self {
        ArrowSet(self.0 & !a.bit())
    }

    #[must_use]
    pub fn union(self, other: ArrowSet) -> Self {
        ArrowSet(self.0 | other.0)
    }

    pub fn is_subset(self, other: ArrowSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = ArrowType> {
        ArrowType::ALL
            .into_iter()
            .filter(move |a| self.contains(*a))
    }
}

impl FromIterator<ArrowType> for ArrowSet {
    fn from_iter<I: IntoIterator<Item = ArrowType>>(iter: I) -> Self {
        let mut s = ArrowSet::EMPTY;
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl<const N: usize> From<[ArrowType; N]> for ArrowSet {
    fn from(arr: [ArrowType; N]) -> Self {
        arr.into_iter().collect()
    }
}

impl fmt::Display for ArrowSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, a) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            f.write_str(a.name())?;
        }
        f.write_str("}")
    }
}

impl FromStr for ArrowSet {
    type Err = Error;

    /// Accepts `Hub,Path`, `{Hub,Path}`, `Hub/Path` or `{}`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        inner
            .split([',', '/', '+'])
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(ArrowType::from_str)
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Position {
    Distant,
    Past,
    Recent,
    Current,
    Future,
}

fn position(node: u32, child: Dyad) -> Position {
    use std::cmp::Ordering::*;
    match (node.cmp(&child.lo), node.cmp(&child.hi)) {
        (Less, _) => Position::Distant,
        (Equal, _) => Position::Past,
        (Greater, Less) => Position::Recent,
        (Greater, Equal) => Position::Current,
        (Greater, Greater) => Position::Future,
    }
}

/// The arrow type from `parent` to `child`, or `None` when the parent holds a
/// node that arrives after the child's newer node.
pub fn classify_relation(parent: Dyad, child: Dyad) -> Option<ArrowType> {
    use Position::*;
    match (position(parent.lo, child), position(parent.hi, child)) {
        (Distant, Distant) => Some(ArrowType::Far),
        (Distant, Past) => Some(ArrowType::Path),
        (Distant, Recent) => Some(ArrowType::Mid),
        (Distant, Current) => Some(ArrowType::Old),
        (Past, Recent) => Some(ArrowType::Hub),
        (Past, Current) => Some(ArrowType::SelfArrow),
        (Recent, Recent) => Some(ArrowType::Near),
        (Recent, Current) => Some(ArrowType::New),
        (_, Future) => None,
        // parent.lo < parent.hi rules out every other combination
        (a, b) => unreachable!("impossible order pattern {a:?}/{b:?}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn d(lo: u32, hi: u32) -> Dyad {
        Dyad::new(lo, hi).unwrap()
    }

    #[test]
    fn table_patterns() {
        assert_eq!(classify_relation(d(1, 2), d(1, 3)), Some(ArrowType::Hub));
        assert_eq!(classify_relation(d(2, 3), d(1, 4)), Some(ArrowType::Near));
        assert_eq!(
            classify_relation(d(1, 2), d(1, 2)),
            Some(ArrowType::SelfArrow)
        );
        assert_eq!(classify_relation(d(1, 2), d(3, 4)), Some(ArrowType::Far));
        assert_eq!(classify_relation(d(1, 3), d(2, 4)), Some(ArrowType::Mid));
        assert_eq!(classify_relation(d(1, 3), d(2, 3)), Some(ArrowType::Old));
        assert_eq!(classify_relation(d(2, 3), d(1, 3)), Some(ArrowType::New));
        assert_eq!(classify_relation(d(1, 2), d(2, 3)), Some(ArrowType::Path));
        assert_eq!(classify_relation(d(3, 4), d(1, 2)), None);
    }

    #[test]
    fn invalid_dyads_rejected() {
        assert!(Dyad::new(3, 3).is_err());
        assert!(Dyad::new(4, 2).is_err());
        assert!(Dyad::new(0, 2).is_err());
    }

    /// Over six nodes every relative order of two dyads is realized; the
    /// thirteen patterns split into eight arrow types and five future ones.
    #[test]
    fn thirteen_patterns() {
        let dyads: Vec<Dyad> = Dyad::all(6).collect();
        let mut patterns = HashSet::new();
        let mut kinds = HashSet::new();
        let mut futures = HashSet::new();
        for &p in &dyads {
            for &c in &dyads {
                // canonical order pattern of the four (or fewer) nodes
                let mut nodes = vec![p.lo, p.hi, c.lo, c.hi];
                nodes.sort_unstable();
                nodes.dedup();
                let rank = |x: u32| nodes.iter().position(|&y| y == x).unwrap();
                let pat = (rank(p.lo), rank(p.hi), rank(c.lo), rank(c.hi));
                patterns.insert(pat);
                match classify_relation(p, c) {
                    Some(k) => {
                        kinds.insert(k);
                    }
                    None => {
                        assert!(p.hi > c.hi);
                        futures.insert(pat);
                    }
                }
            }
        }
        assert_eq!(patterns.len(), 13);
        assert_eq!(kinds.len(), 8);
        assert_eq!(futures.len(), 5);
    }

    #[test]
    fn arrow_set_display_and_parse() {
        let s = ArrowSet::from([ArrowType::Path, ArrowType::Hub, ArrowType::SelfArrow]);
        assert_eq!(s.to_string(), "{Hub,Path,Self}");
        assert_eq!("{Hub,Path,Self}".parse::<ArrowSet>().unwrap(), s);
        assert_eq!("hub/path/self".parse::<ArrowSet>().unwrap(), s);
        assert_eq!("{}".parse::<ArrowSet>().unwrap(), ArrowSet::EMPTY);
        assert!("Hub,Bogus".parse::<ArrowSet>().is_err());
    }
}
