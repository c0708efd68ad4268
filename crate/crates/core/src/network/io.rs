//! Edge-list files and run manifests.
//!
//! Edge list:
//!
//! ```text
//! dyadgen-net v1 n=5 alpha=1 beta=1 theta_in=0.5 theta_out=0.25 seed=7 model=dapa
//! 1 2
//! 1 3
//! ```
//!
//! Edge lines are `i j` with `i < j`, written sorted by `(j, i)`. Readers
//! accept any order and normalize.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use super::{GrowingNetwork, Model, ModelParams, NetworkMeta};
use crate::error::{Error, Result};

const MAGIC: &str = "dyadgen-net";
const VERSION: &str = "v1";

pub fn write_network_string(net: &GrowingNetwork) -> String {
    let meta = net.meta();
    let p = &meta.params;
    let mut out = format!(
        "{MAGIC} {VERSION} n={} alpha={} beta={} theta_in={} theta_out={} seed={} model={}\n",
        net.n(),
        p.alpha,
        p.beta,
        p.theta_in,
        p.theta_out,
        meta.seed,
        meta.model
    );
    for (i, j) in net.edges() {
        let _ = writeln!(out, "{i} {j}");
    }
    out
}

pub fn write_network(net: &GrowingNetwork, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, write_network_string(net))?;
    Ok(())
}

pub fn read_network(path: impl AsRef<Path>) -> Result<GrowingNetwork> {
    read_network_str(&std::fs::read_to_string(path)?)
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_header(line: &str) -> Result<(u32, NetworkMeta)> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some(MAGIC) {
        return Err(parse_err(1, format!("expected `{MAGIC}` header")));
    }
    match tokens.next() {
        Some(VERSION) => {}
        other => {
            return Err(parse_err(1, format!("unsupported version {other:?}")));
        }
    }
    let mut fields = BTreeMap::new();
    for tok in tokens {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| parse_err(1, format!("malformed header field `{tok}`")))?;
        fields.insert(k, v);
    }
    let get = |k: &str| {
        fields
            .get(k)
            .copied()
            .ok_or_else(|| parse_err(1, format!("missing header field `{k}`")))
    };
    let num = |k: &str| -> Result<f64> {
        get(k)?
            .parse()
            .map_err(|_| parse_err(1, format!("header field `{k}` is not a number")))
    };
    let n: u32 = get("n")?
        .parse()
        .map_err(|_| parse_err(1, "header field `n` is not an integer"))?;
    let seed: u64 = get("seed")?
        .parse()
        .map_err(|_| parse_err(1, "header field `seed` is not an integer"))?;
    let model: Model = get("model")?
        .parse()
        .map_err(|_| parse_err(1, "unknown model"))?;
    let params = ModelParams::new(
        num("alpha")?,
        num("beta")?,
        num("theta_in")?,
        num("theta_out")?,
    )
    .map_err(|e| parse_err(1, e.to_string()))?;
    Ok((
        n,
        NetworkMeta {
            model,
            params,
            seed,
        },
    ))
}

pub fn read_network_str(text: &str) -> Result<GrowingNetwork> {
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let (n, meta) = parse_header(header)?;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (k, line) in lines.enumerate() {
        let lineno = k + 2;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<u32> {
            parts
                .next()
                .ok_or_else(|| parse_err(lineno, "expected `i j`"))?
                .parse()
                .map_err(|_| parse_err(lineno, format!("bad node index in `{line}`")))
        };
        let (i, j) = (next()?, next()?);
        if parts.next().is_some() {
            return Err(parse_err(lineno, format!("trailing data in `{line}`")));
        }
        if i == 0 || i >= j || j > n {
            return Err(parse_err(
                lineno,
                format!("`{line}` is not a dyad i < j <= {n}"),
            ));
        }
        if !seen.insert((i, j)) {
            return Err(parse_err(lineno, format!("duplicate edge `{line}`")));
        }
        edges.push((i, j));
    }
    GrowingNetwork::from_edges(n, meta, &edges)
}

/// Key-value record of a sampling run, sufficient to reproduce it.
#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub entries: BTreeMap<String, String>,
}

impl RunManifest {
    pub fn new(meta: &NetworkMeta, n: u32) -> Self {
        let mut entries = BTreeMap::new();
        let p = &meta.params;
        entries.insert("version".into(), env!("CARGO_PKG_VERSION").into());
        entries.insert("model".into(), meta.model.to_string());
        entries.insert("n".into(), n.to_string());
        entries.insert("alpha".into(), p.alpha.to_string());
        entries.insert("beta".into(), p.beta.to_string());
        entries.insert("theta_in".into(), p.theta_in.to_string());
        entries.insert("theta_out".into(), p.theta_out.to_string());
        entries.insert("seed".into(), meta.seed.to_string());
        RunManifest { entries }
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.entries.insert(key.to_string(), value.to_string());
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn to_text(&self) -> String {
        self.entries
            .iter()
            .map(|(k, v)| format!("{k}={v}\n"))
            .collect()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut entries = BTreeMap::new();
        for (k, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| parse_err(k + 1, format!("expected key=value, got `{line}`")))?;
            entries.insert(key.trim().to_string(), value.trim().to_string());
        }
        Ok(RunManifest { entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::network::sample_sequential;
    use crate::rng::RandomSource;

    fn meta() -> NetworkMeta {
        NetworkMeta {
            model: Model::Dorpa,
            params: ModelParams::new(1.0, 0.5, 0.3, 0.2).unwrap(),
            seed: 99,
        }
    }

    #[test]
    fn empty_network_round_trip() {
        let net = GrowingNetwork::empty(5, meta());
        let text = write_network_string(&net);
        assert_eq!(
            text,
            "dyadgen-net v1 n=5 alpha=1 beta=0.5 theta_in=0.3 theta_out=0.2 seed=99 model=dorpa\n"
        );
        assert_eq!(read_network_str(&text).unwrap(), net);
    }

    #[test]
    fn sampled_round_trip() {
        let p = ModelParams::new(1.0, 1.0, 0.5, 0.25).unwrap();
        let net = sample_sequential(&p, 200, &RandomSource::new(4)).unwrap();
        let text = write_network_string(&net);
        let back = read_network_str(&text).unwrap();
        assert_eq!(back, net);
        assert_eq!(write_network_string(&back), text);
    }

    #[test]
    fn unsorted_lines_normalized() {
        let text = "dyadgen-net v1 n=4 alpha=1 beta=1 theta_in=0 theta_out=0 seed=1 model=dapa\n2 4\n1 2\n1 3\n";
        let net = read_network_str(text).unwrap();
        assert_eq!(
            net.edges().collect::<Vec<_>>(),
            vec![(1, 2), (1, 3), (2, 4)]
        );
    }

    #[test]
    fn errors_carry_line_numbers() {
        let head = "dyadgen-net v1 n=4 alpha=1 beta=1 theta_in=0 theta_out=0 seed=1 model=dapa\n";
        let cases = [
            (format!("{head}1 2\n3 x\n"), 3),
            (format!("{head}1 2\n\n4 3\n"), 4),
            (format!("{head}1 5\n"), 2),
            (format!("{head}1 2 3\n"), 2),
            (format!("{head}1 2\n1 3\n1 2\n"), 4),
            ("dyadgen-net v2 n=4\n".to_string(), 1),
            (
                "dyadgen-net v1 n=4 alpha=1 beta=1 theta_in=0 seed=1 model=dapa\n".to_string(),
                1,
            ),
            (
                "dyadgen-net v1 n=4 alpha=1 beta=1 theta_in=2 theta_out=0 seed=1 model=dapa\n"
                    .to_string(),
                1,
            ),
        ];
        for (text, line) in cases {
            match read_network_str(&text) {
                Err(Error::Parse { line: got, .. }) => assert_eq!(got, line, "{text}"),
                other => panic!("expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn manifest_round_trip() {
        let mut m = RunManifest::new(&meta(), 10);
        m.set("workers", 4);
        m.set("rounds", 7);
        let back = RunManifest::parse(&m.to_text()).unwrap();
        assert_eq!(back, m);
        assert_eq!(back.get("model"), Some("dorpa"));
        assert_eq!(back.get("seed"), Some("99"));
    }
}
