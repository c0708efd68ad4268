//! The closed-class poset against the reference diagram: all 21 nodes and
//! all 33 cover relations.

use std::collections::{BTreeMap, BTreeSet};

use dyadgen::arrows::{build_hasse, class_label, enumerate_closed_classes, CompositionTable};

const NODES: [(&str, &str); 21] = [
    ("empty", "∅"),
    ("dj", "Old"),
    ("dd", "Far"),
    ("ir", "Hub"),
    ("rr", "Near"),
    ("rj", "New"),
    ("djdd", "Old/Far"),
    ("di", "Path (Far)"),
    ("ddir", "Far/Hub"),
    ("irrr", "Hub/Near"),
    ("rrrj", "Near/New"),
    ("djdi", "Old/Path (Far)"),
    ("dr", "Mid (Path/Far)"),
    ("diir", "Path/Hub (Far)"),
    ("irrj", "Hub/New (Near)"),
    ("djdr", "Old/Mid (Path/Far)"),
    ("drir", "Mid/Hub (Path/Far)"),
    ("djir", "Old/Hub (Mid/Path/Far)"),
    ("drrr", "Mid/Near (Path/Far/Hub)"),
    ("djrr", "Old/Near (Mid/Path/Far/Hub)"),
    ("drrj", "Mid/New (Path/Far/Hub/Near)"),
];

// (covered, covering)
const EDGES: [(&str, &str); 33] = [
    ("empty", "dj"),
    ("empty", "dd"),
    ("empty", "ir"),
    ("empty", "rr"),
    ("empty", "rj"),
    ("dj", "djdd"),
    ("dd", "djdd"),
    ("dd", "di"),
    ("dd", "ddir"),
    ("ir", "ddir"),
    ("ir", "irrr"),
    ("rr", "irrr"),
    ("rr", "rrrj"),
    ("rj", "rrrj"),
    ("djdd", "djdi"),
    ("di", "djdi"),
    ("di", "dr"),
    ("di", "diir"),
    ("ddir", "diir"),
    ("irrr", "drrr"),
    ("irrr", "irrj"),
    ("rrrj", "irrj"),
    ("djdi", "djdr"),
    ("dr", "djdr"),
    ("dr", "drir"),
    ("diir", "drir"),
    ("drir", "djir"),
    ("drir", "drrr"),
    ("djdr", "djir"),
    ("djir", "djrr"),
    ("irrj", "drrj"),
    ("drrr", "drrj"),
    ("drrr", "djrr"),
];

#[test]
fn poset_matches_reference_diagram() {
    let table = CompositionTable::derive(6).unwrap();
    let classes = enumerate_closed_classes(&table);
    let poset = build_hasse(&classes).unwrap();

    let by_label: BTreeMap<String, usize> = classes
        .iter()
        .enumerate()
        .map(|(k, c)| (class_label(c.arrows, &table), k))
        .collect();
    let index: BTreeMap<&str, usize> = NODES
        .iter()
        .map(|&(id, label)| {
            let k = *by_label
                .get(label)
                .unwrap_or_else(|| panic!("no class labelled {label}; have {:?}", by_label.keys()));
            (id, k)
        })
        .collect();
    assert_eq!(index.len(), 21);
    assert_eq!(by_label.len(), 21);

    let want: BTreeSet<(usize, usize)> = EDGES.iter().map(|(a, b)| (index[a], index[b])).collect();
    let got: BTreeSet<(usize, usize)> = poset.covers.iter().copied().collect();
    let name = |k: usize| class_label(classes[k].arrows, &table);
    let missing: Vec<_> = want
        .difference(&got)
        .map(|&(a, b)| (name(a), name(b)))
        .collect();
    let extra: Vec<_> = got
        .difference(&want)
        .map(|&(a, b)| (name(a), name(b)))
        .collect();
    assert!(
        missing.is_empty() && extra.is_empty(),
        "missing {missing:?}, extra {extra:?}"
    );
}

#[test]
fn dot_output_counts() {
    let table = CompositionTable::derive(6).unwrap();
    let poset = build_hasse(&enumerate_closed_classes(&table)).unwrap();
    let dot = poset.to_dot(&table);
    assert_eq!(dot.matches("->").count(), 33);
    assert_eq!(dot.matches("label=").count(), 21);
}
