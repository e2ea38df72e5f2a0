//! Test signals, noise injection and sampled-function containers.

pub mod airy;
pub mod noise;

use std::f64::consts::PI;
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::basis::{eval_normalized, BasisKind};
use crate::error::{Error, Result};

pub use airy::{airy_ai, airy_scaled};
pub use noise::{add_noise, GaussianStream, NoisySamples};

/// `tanh(20 sin 12x) + 0.02 e^{3x} sin 300x`.
pub fn test_oscillatory(x: f64) -> f64 {
    (20.0 * (12.0 * x).sin()).tanh() + 0.02 * (3.0 * x).exp() * (300.0 * x).sin()
}

/// `5 sin(5πx) / (5πx)`, continuous at 0 with value 5.
pub fn gate_spectrum(x: f64) -> f64 {
    let z = 5.0 * PI * x;
    if z.abs() < 1e-8 {
        5.0 * (1.0 - z * z / 6.0)
    } else {
        5.0 * z.sin() / z
    }
}

/// Built-in functions addressable by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Signal {
    Oscillatory,
    Gate,
    Airy,
    Exp,
    Constant,
    /// The orthonormal basis polynomial of the given degree.
    BasisPolynomial(usize),
}

impl Signal {
    pub fn eval(self, basis: BasisKind, x: f64) -> Result<f64> {
        Ok(match self {
            Signal::Oscillatory => test_oscillatory(x),
            Signal::Gate => gate_spectrum(x),
            Signal::Airy => airy_scaled(x)?,
            Signal::Exp => x.exp(),
            Signal::Constant => 1.0,
            Signal::BasisPolynomial(k) => eval_normalized(basis, k, x)?,
        })
    }

    pub fn name(self) -> String {
        match self {
            Signal::Oscillatory => "oscillatory".into(),
            Signal::Gate => "gate".into(),
            Signal::Airy => "airy".into(),
            Signal::Exp => "exp".into(),
            Signal::Constant => "one".into(),
            Signal::BasisPolynomial(k) => format!("phi{k}"),
        }
    }
}

impl Serialize for Signal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.name())
    }
}

impl FromStr for Signal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "oscillatory" | "tanh" => Ok(Signal::Oscillatory),
            "gate" | "sinc" => Ok(Signal::Gate),
            "airy" => Ok(Signal::Airy),
            "exp" => Ok(Signal::Exp),
            "one" | "constant" => Ok(Signal::Constant),
            other => other
                .strip_prefix("phi")
                .and_then(|k| k.parse().ok())
                .map(Signal::BasisPolynomial)
                .ok_or_else(|| Error::InvalidArgument(format!("unknown signal '{s}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Provenance {
    Analytic { name: String },
    File { path: String },
    Noisy { seed: u64, snr_db: f64, sigma: f64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SampledFunction {
    nodes: Vec<f64>,
    values: Vec<f64>,
    provenance: Provenance,
}

impl SampledFunction {
    /// Requires equal lengths and strictly increasing nodes in [-1, 1].
    pub fn new(nodes: Vec<f64>, values: Vec<f64>, provenance: Provenance) -> Result<Self> {
        crate::error::check_len("sample values", nodes.len(), values.len())?;
        if nodes.windows(2).any(|w| w[0].partial_cmp(&w[1]) != Some(std::cmp::Ordering::Less)) {
            return Err(Error::InvalidSamples(
                "nodes must be strictly increasing".to_string(),
            ));
        }
        for &x in &nodes {
            crate::basis::clamp_domain(x)?;
        }
        Ok(SampledFunction {
            nodes,
            values,
            provenance,
        })
    }

    pub fn from_signal(signal: Signal, basis: BasisKind, nodes: &[f64]) -> Result<Self> {
        let values = nodes
            .iter()
            .map(|&x| signal.eval(basis, x))
            .collect::<Result<Vec<_>>>()?;
        SampledFunction::new(
            nodes.to_vec(),
            values,
            Provenance::Analytic {
                name: signal.name(),
            },
        )
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn with_noise(&self, snr_db: f64, seed: u64) -> Result<SampledFunction> {
        let noisy = add_noise(&self.values, snr_db, seed)?;
        Ok(SampledFunction {
            nodes: self.nodes.clone(),
            values: noisy.values,
            provenance: Provenance::Noisy {
                seed,
                snr_db,
                sigma: noisy.sigma,
            },
        })
    }
}

/// Two-column `x, f(x)` text; comma or whitespace separated. A leading
/// non-numeric header row and `#` comment lines are skipped; rows are sorted by `x`.
pub fn parse_samples(text: &str, source: &str) -> Result<SampledFunction> {
    let mut rows = Vec::new();
    let mut seen_data = false;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let parsed: Vec<Option<f64>> = fields.iter().map(|f| f.parse::<f64>().ok()).collect();
        if !seen_data && parsed.iter().any(Option::is_none) {
            seen_data = true;
            continue;
        }
        seen_data = true;
        let bad = |msg: &str| Error::Parse {
            line: idx + 1,
            msg: msg.to_string(),
        };
        if fields.len() != 2 {
            return Err(bad("expected exactly two columns"));
        }
        match (parsed[0], parsed[1]) {
            (Some(x), Some(y)) if x.is_finite() && y.is_finite() => rows.push((x, y)),
            _ => return Err(bad("values must be finite decimals")),
        }
    }
    if rows.is_empty() {
        return Err(Error::InvalidSamples(format!("no samples in {source}")));
    }
    rows.sort_by(|a, b| a.0.total_cmp(&b.0));
    let (nodes, values) = rows.into_iter().unzip();
    SampledFunction::new(
        nodes,
        values,
        Provenance::File {
            path: source.to_string(),
        },
    )
}

pub fn read_samples(path: &Path) -> Result<SampledFunction> {
    let text = std::fs::read_to_string(path)?;
    parse_samples(&text, &path.display().to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn oscillatory_examples() {
        assert_eq!(test_oscillatory(0.0), 0.0);
        let direct = (20.0 * 12f64.sin()).tanh() + 0.02 * 3f64.exp() * 300f64.sin();
        assert_eq!(test_oscillatory(1.0), direct);
        let bound = 1.0 + 0.02 * 3f64.exp();
        for i in 0..=2000 {
            let x = -1.0 + i as f64 / 1000.0;
            assert!(test_oscillatory(x).abs() <= bound);
        }
    }

    #[test]
    fn gate_examples() {
        assert_eq!(gate_spectrum(0.0), 5.0);
        assert!(gate_spectrum(0.2).abs() < 1e-15);
        assert!((gate_spectrum(0.1) - 10.0 / PI).abs() < 1e-14);
        assert!((10.0 / PI - 3.1830988618).abs() < 1e-10);
        for i in 1..=100 {
            let h = i as f64 * 1e-6;
            for s in [h, -h] {
                // 5 − 5 sin z / z ≤ 5 z²/6 with z = 5πs
                let bound = 5.0 * 25.0 * PI * PI * s * s / 6.0 + 1e-12;
                assert!((gate_spectrum(s) - 5.0).abs() <= bound);
            }
        }
        // Taylor branch
        assert!((gate_spectrum(1e-12) - 5.0).abs() < 1e-15);
    }

    #[test]
    fn signal_names_round_trip() {
        for s in [
            Signal::Oscillatory,
            Signal::Gate,
            Signal::Airy,
            Signal::Exp,
            Signal::Constant,
            Signal::BasisPolynomial(3),
        ] {
            assert_eq!(s.name().parse::<Signal>().unwrap(), s);
        }
        assert!("nope".parse::<Signal>().is_err());
    }

    #[test]
    fn csv_parsing() {
        let s = parse_samples("x,f\n0.5, 2\n-0.5,1\n\n0.0 3\n", "mem").unwrap();
        assert_eq!(s.nodes(), &[-0.5, 0.0, 0.5]);
        assert_eq!(s.values(), &[1.0, 3.0, 2.0]);
        let s = parse_samples("# comment\n-1 0\n1\t1\n", "mem").unwrap();
        assert_eq!(s.nodes().len(), 2);

        assert!(matches!(parse_samples("0 1\n0.5 nan\n", "mem"), Err(Error::Parse { line: 2, .. })));
        assert!(parse_samples("0 1 2\n", "mem").is_err());
        assert!(parse_samples("0 1\n0 2\n", "mem").is_err());
        assert!(parse_samples("2 1\n", "mem").is_err());
        assert!(parse_samples("x,y\n", "mem").is_err());
        assert!(parse_samples("0 1\nfoo bar\n", "mem").is_err());
    }

    #[test]
    fn noisy_provenance_records_seed_and_sigma() {
        let nodes = [-0.5, 0.0, 0.5];
        let s = SampledFunction::from_signal(Signal::Gate, BasisKind::Legendre, &nodes).unwrap();
        let n = s.with_noise(10.0, 9).unwrap();
        match n.provenance() {
            Provenance::Noisy { seed, snr_db, sigma } => {
                assert_eq!((*seed, *snr_db), (9, 10.0));
                assert!(*sigma > 0.0);
            }
            other => panic!("{other:?}"),
        }
    }
}
