//! Job configuration: `key = value` lines or a JSON object.
//!
//! Keys: `nu`, `slope`, `L`, `depth`, `x_mode` (`rank` or `numeric`), `glue`,
//! `output`, `probe_x`, `tails` (comma separated, or a JSON array).

use std::path::PathBuf;

use serde_json::Value;
use unimodal_core::cantor::OrderContext;
use unimodal_core::scene::XMode;
use unimodal_core::symbolic::kneading::{kneading_from_slope, DEFAULT_EPS};
use unimodal_core::{Error, KneadingSequence, LeftTail, Result, TentMap};

/// Symbols computed from a slope when no depth asks for more.
const SLOPE_WINDOW: usize = 64;

/// One `key = value` setting and where it was written. Command-line flags
/// carry no position.
#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub key: String,
    pub value: String,
    pub at: Option<(usize, usize)>,
    pub key_column: usize,
}

impl Entry {
    pub fn flag(key: &str, value: impl Into<String>) -> Self {
        Self { key: key.to_string(), value: value.into(), at: None, key_column: 0 }
    }

    fn fail(&self, offset: usize, message: impl Into<String>) -> Error {
        match self.at {
            Some((line, column)) => Error::Config { line, column: column + offset, message: message.into() },
            None => Error::Parse { column: offset + 1, message: format!("--{}: {}", self.key, message.into()) },
        }
    }

    fn lift(&self, e: Error) -> Error {
        match e {
            Error::Parse { column, message } => self.fail(column.saturating_sub(1), message),
            other => self.fail(0, other.to_string()),
        }
    }

    fn number<T: std::str::FromStr>(&self) -> Result<T> {
        self.value.trim().parse().map_err(|_| self.fail(0, format!("`{}` is not a valid {}", self.value, self.key)))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Source {
    Nu(KneadingSequence),
    Slope(f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModeChoice {
    Rank,
    Numeric,
}

#[derive(Debug, Clone, PartialEq)]
pub struct JobConfig {
    pub source: Source,
    pub l: Option<LeftTail>,
    pub depth: Option<usize>,
    pub x_mode: Option<ModeChoice>,
    pub glue_stages: Option<usize>,
    pub output: Option<PathBuf>,
    pub probe_x: Option<f64>,
    pub tails: Vec<LeftTail>,
}

fn missing(key: &str) -> Error {
    Error::Config { line: 0, column: 0, message: format!("missing `{key}`") }
}

impl JobConfig {
    /// Later entries override earlier ones with the same key.
    pub fn from_entries(entries: &[Entry]) -> Result<Self> {
        let last = |key: &str| entries.iter().rev().find(|e| e.key == key);
        for e in entries {
            if !matches!(
                e.key.as_str(),
                "nu" | "slope" | "L" | "depth" | "x_mode" | "glue" | "output" | "probe_x" | "tails"
            ) {
                let message = format!("unknown key `{}`", e.key);
                return Err(match e.at {
                    Some((line, _)) => Error::Config { line, column: e.key_column, message },
                    None => Error::Parse { column: 1, message },
                });
            }
        }
        let source = match (last("nu"), last("slope")) {
            (Some(_), Some(_)) => return Err(Error::Conflict),
            (Some(e), None) => Source::Nu(e.value.trim().parse().map_err(|err| e.lift(err))?),
            (None, Some(e)) => {
                let s: f64 = e.number()?;
                TentMap::new(s).map_err(|err| e.lift(err))?;
                Source::Slope(s)
            }
            (None, None) => return Err(missing("nu` or `slope")),
        };
        let l = last("L").map(|e| e.value.trim().parse().map_err(|err| e.lift(err))).transpose()?;
        let depth = last("depth").map(Entry::number).transpose()?;
        let x_mode = last("x_mode")
            .map(|e| match e.value.trim() {
                "rank" => Ok(ModeChoice::Rank),
                "numeric" => Ok(ModeChoice::Numeric),
                other => Err(e.fail(0, format!("x_mode must be `rank` or `numeric`, not `{other}`"))),
            })
            .transpose()?;
        if x_mode == Some(ModeChoice::Numeric) && matches!(source, Source::Nu(_)) {
            return Err(missing("slope"));
        }
        let glue_stages = last("glue").map(Entry::number).transpose()?;
        let output = last("output").map(|e| PathBuf::from(e.value.trim()));
        let probe_x = last("probe_x").map(Entry::number).transpose()?;
        let mut tails = Vec::new();
        if let Some(e) = last("tails") {
            let mut offset = 0;
            for part in e.value.split(',') {
                let lead = part.len() - part.trim_start().len();
                let t = part.trim();
                if !t.is_empty() {
                    tails.push(t.parse().map_err(|err| match err {
                        Error::Parse { column, message } => e.fail(offset + lead + column - 1, message),
                        other => e.fail(offset, other.to_string()),
                    })?);
                }
                offset += part.len() + 1;
            }
        }
        Ok(Self { source, l, depth, x_mode, glue_stages, output, probe_x, tails })
    }

    pub fn require_l(&self) -> Result<&LeftTail> {
        self.l.as_ref().ok_or_else(|| missing("L"))
    }

    pub fn require_depth(&self) -> Result<usize> {
        self.depth.ok_or_else(|| missing("depth"))
    }

    pub fn kneading(&self) -> Result<KneadingSequence> {
        match &self.source {
            Source::Nu(nu) => Ok(nu.clone()),
            Source::Slope(s) => {
                let window = SLOPE_WINDOW.max(2 * self.depth.unwrap_or(0));
                kneading_from_slope(&TentMap::new(*s)?, window, DEFAULT_EPS)
            }
        }
    }

    pub fn context(&self) -> Result<OrderContext> {
        OrderContext::new(self.require_l()?.clone(), self.kneading()?)
    }

    /// Numeric abscissae by default when a slope is given, ranks otherwise.
    pub fn resolved_x_mode(&self) -> XMode {
        match (&self.source, self.x_mode) {
            (Source::Slope(slope), None | Some(ModeChoice::Numeric)) => XMode::NumericOrbit { slope: *slope },
            _ => XMode::SymbolicRank,
        }
    }
}

fn unquote(raw: &str) -> std::result::Result<&str, usize> {
    match raw.strip_prefix('"') {
        Some(rest) => rest.strip_suffix('"').ok_or(raw.len()),
        None => Ok(raw),
    }
}

fn kv_entries(text: &str) -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let body = line.trim_end();
        let trimmed = body.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = body.len() - trimmed.len();
        let fail = |column: usize, message: &str| Error::Config { line: line_no, column, message: message.to_string() };
        let eq = trimmed.find('=').ok_or_else(|| fail(indent + 1, "expected `key = value`"))?;
        let key = trimmed[..eq].trim_end();
        if key.is_empty() {
            return Err(fail(indent + 1, "missing key"));
        }
        let after = &trimmed[eq + 1..];
        let value_start = indent + eq + 1 + (after.len() - after.trim_start().len());
        let raw = after.trim();
        let value = unquote(raw).map_err(|len| fail(value_start + len + 1, "unterminated string"))?;
        let shift = usize::from(raw.starts_with('"'));
        out.push(Entry { key: key.to_string(), value: value.to_string(), at: Some((line_no, value_start + 1 + shift)), key_column: indent + 1 });
    }
    Ok(out)
}

fn position_of(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    let offset = text.find(&needle).unwrap_or(0);
    let before = &text[..offset];
    let line = before.matches('\n').count() + 1;
    let column = offset - before.rfind('\n').map_or(0, |p| p + 1) + 1;
    (line, column)
}

fn json_entries(text: &str) -> Result<Vec<Entry>> {
    let doc: Value = serde_json::from_str(text)
        .map_err(|e| Error::Config { line: e.line(), column: e.column(), message: e.to_string() })?;
    let Value::Object(map) = doc else {
        return Err(Error::Config { line: 1, column: 1, message: "expected a JSON object".into() });
    };
    let mut out = Vec::new();
    for (key, v) in map {
        let at = Some(position_of(text, &key));
        let value = match v {
            Value::String(s) => s,
            Value::Number(n) => n.to_string(),
            Value::Array(items) => items
                .iter()
                .map(|item| item.as_str().map(str::to_string))
                .collect::<Option<Vec<_>>>()
                .ok_or_else(|| Error::Config {
                    line: at.unwrap().0,
                    column: at.unwrap().1,
                    message: format!("`{key}` must be a list of strings"),
                })?
                .join(","),
            Value::Null => continue,
            other => {
                let (line, column) = at.unwrap();
                return Err(Error::Config { line, column, message: format!("unexpected value {other} for `{key}`") });
            }
        };
        let key_column = at.map_or(0, |(_, c)| c);
        out.push(Entry { key, value, at, key_column });
    }
    Ok(out)
}

/// Settings from a config file, for merging with command-line flags.
pub fn parse_entries(text: &str) -> Result<Vec<Entry>> {
    if text.trim_start().starts_with('{') {
        json_entries(text)
    } else {
        kv_entries(text)
    }
}

pub fn parse_config(text: &str) -> Result<JobConfig> {
    JobConfig::from_entries(&parse_entries(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn key_value_lines() {
        let c = parse_config("nu=\"(101)\"\nL=\"(1).\"\ndepth=3\n").unwrap();
        assert_eq!(c.source, Source::Nu("(101)".parse().unwrap()));
        assert_eq!(c.depth, Some(3));
        assert_eq!(c.resolved_x_mode(), XMode::SymbolicRank);
    }

    #[test]
    fn slope_gives_numeric_abscissae() {
        let c = parse_config("slope = 2.0\nL = (1).\ndepth = 4").unwrap();
        assert_eq!(c.kneading().unwrap().exact(), Some(&"1(0)".parse().unwrap()));
        assert_eq!(c.resolved_x_mode(), XMode::NumericOrbit { slope: 2.0 });
    }

    #[test]
    fn unbalanced_sequence_reports_its_position() {
        match parse_config("depth = 3\nnu = \"(101\"") {
            Err(Error::Config { line: 2, column, .. }) => assert!(column >= 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn slope_and_nu_conflict() {
        assert_eq!(parse_config("slope=2\nnu=(101)"), Err(Error::Conflict));
    }

    #[test]
    fn json_document() {
        let c = parse_config(r#"{"nu": "(101)", "L": "(1).", "depth": 5, "tails": ["(011)010.", "(011)110."]}"#).unwrap();
        assert_eq!(c.depth, Some(5));
        assert_eq!(c.tails.len(), 2);
        assert!(matches!(parse_config("{\"nu\": 3"), Err(Error::Config { line: 1, .. })));
    }

    #[test]
    fn unknown_keys_and_bad_numbers() {
        assert!(matches!(parse_config("nu=(101)\ncolour=red"), Err(Error::Config { line: 2, column: 1, .. })));
        assert!(matches!(parse_config("nu=(101)\ndepth=three"), Err(Error::Config { line: 2, column: 7, .. })));
    }

    #[test]
    fn flags_override_file_entries() {
        let mut entries = parse_entries("nu=(101)\nL=(1).\ndepth=3").unwrap();
        entries.push(Entry::flag("depth", "5"));
        assert_eq!(JobConfig::from_entries(&entries).unwrap().depth, Some(5));
    }
}
