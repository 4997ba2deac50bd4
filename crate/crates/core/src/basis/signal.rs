use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::rational::{format_short, parse_rational, to_f64, Rational};
use crate::numeric::DyadicStep;

/// Turns samples into a step function: sample `i` is the value on cell `i`.
/// Each sample is read exactly from its text, so `0.1` becomes `1/10`.
pub fn ingest_signal<S: AsRef<str>>(samples: &[S], level: Option<u32>) -> Result<DyadicStep> {
    let values = samples
        .iter()
        .map(|s| parse_rational(s.as_ref()))
        .collect::<Result<Vec<_>>>()?;
    ingest_values(values, level)
}

/// Float variant; each value is rationalized through its shortest decimal
/// form.
pub fn ingest_signal_f64(samples: &[f64], level: Option<u32>) -> Result<DyadicStep> {
    let text: Vec<String> = samples
        .iter()
        .map(|x| {
            if x.is_finite() {
                Ok(format!("{x}"))
            } else {
                Err(Error::Parse {
                    text: x.to_string(),
                })
            }
        })
        .collect::<Result<_>>()?;
    ingest_signal(&text, level)
}

fn ingest_values(values: Vec<Rational>, level: Option<u32>) -> Result<DyadicStep> {
    if let Some(level) = level {
        let expected = 1usize << level;
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                level,
                expected,
                got: values.len(),
            });
        }
    }
    DyadicStep::from_coeffs(values)
}

/// One sample per line. Blank lines and `#` comments are skipped; anything
/// else that is not a number is reported with its 1-based line number.
pub fn parse_samples(text: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        let value = parse_rational(t).map_err(|_| Error::Input {
            line: i + 1,
            message: format!("expected one numeric sample, found {t:?}"),
        })?;
        out.push(value);
    }
    Ok(out)
}

pub fn signal_from_text(text: &str, level: Option<u32>) -> Result<DyadicStep> {
    ingest_values(parse_samples(text)?, level)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CoefficientRow {
    pub index: u64,
    pub num: String,
    pub den: String,
}

/// Exact coefficients indexed by basis position.
#[derive(Clone, Debug, PartialEq)]
pub struct CoefficientTable {
    pub coeffs: Vec<Rational>,
}

impl CoefficientTable {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        Self { coeffs }
    }

    pub fn rows(&self) -> Vec<CoefficientRow> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| CoefficientRow {
                index: i as u64,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    /// `index,num,den` rows, or `index,value` with `float`.
    pub fn to_csv(&self, float: bool) -> String {
        let mut out = String::from(if float {
            "index,value\n"
        } else {
            "index,num,den\n"
        });
        for (i, c) in self.coeffs.iter().enumerate() {
            if float {
                out.push_str(&format!("{i},{}\n", to_f64(c)));
            } else {
                out.push_str(&format!("{i},{},{}\n", c.numer(), c.denom()));
            }
        }
        out
    }

    pub fn to_json(&self, float: bool) -> String {
        let value = if float {
            serde_json::json!(self
                .coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| serde_json::json!({"index": i, "value": to_f64(c)}))
                .collect::<Vec<_>>())
        } else {
            serde_json::to_value(self.rows()).expect("rows serialize")
        };
        let mut s = serde_json::to_string_pretty(&value).expect("json value serializes");
        s.push('\n');
        s
    }

    /// Reads back the exact CSV form.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || (i == 0 && t.starts_with("index")) {
                continue;
            }
            let bad = |message: String| Error::Input {
                line: i + 1,
                message,
            };
            let fields: Vec<&str> = t.split(',').map(str::trim).collect();
            let [index, num, den] = fields[..] else {
                return Err(bad(format!("expected 3 fields, found {}", fields.len())));
            };
            let index: usize = index
                .parse()
                .map_err(|_| bad(format!("bad index {index:?}")))?;
            if index != coeffs.len() {
                return Err(bad(format!("index {index} out of sequence")));
            }
            let value = parse_rational(&format!("{num}/{den}")).map_err(|e| bad(e.to_string()))?;
            coeffs.push(value);
        }
        Ok(Self { coeffs })
    }

    pub fn display_short(&self) -> Vec<String> {
        self.coeffs.iter().map(format_short).collect()
    }
}
