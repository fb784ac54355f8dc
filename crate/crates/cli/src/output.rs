use std::fmt::Write as _;

use alcove::complex::Facet;
use alcove::rational::{fmt_vector, Rational};
use alcove::{Element, NodeSet, WeylGroup};
use serde_json::{json, Map, Value};

use crate::config::{Format, JobConfig};
use crate::{CliError, Exit};

/// A tab-separated table; JSON output renders each row as an object keyed by column.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self { columns: columns.to_vec(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|r| {
                    let m: Map<String, Value> =
                        self.columns.iter().zip(r).map(|(c, v)| (c.to_string(), Value::String(v.clone()))).collect();
                    Value::Object(m)
                })
                .collect(),
        )
    }
}

/// Everything a subcommand produces: a JSON body, a TSV table, and the exit status.
pub struct Report {
    pub command: String,
    pub json: Value,
    pub table: Table,
    pub exit: Exit,
}

impl Report {
    pub fn new(command: &str, json: Value, table: Table) -> Self {
        Self { command: command.into(), json, table, exit: Exit::Ok }
    }

    pub fn with_exit(mut self, exit: Exit) -> Self {
        self.exit = exit;
        self
    }

    pub fn render(&self, cfg: &JobConfig) -> String {
        match cfg.format {
            Format::Json => {
                let v = json!({ "command": self.command, "config": cfg.to_json(), "result": self.json });
                let mut s = serde_json::to_string_pretty(&v).expect("json");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut s = String::new();
                writeln!(s, "# alcove {}", self.command).unwrap();
                writeln!(s, "# config {}", cfg.to_json()).unwrap();
                writeln!(s, "{}", self.table.columns.join("\t")).unwrap();
                for r in &self.table.rows {
                    writeln!(s, "{}", r.join("\t")).unwrap();
                }
                s
            }
        }
    }
}

/// Splits a TSV document into its config header and data rows, checking the column line.
pub fn parse_tsv<'a>(text: &'a str, columns: &[&str]) -> Result<(Value, Vec<Vec<&'a str>>), CliError> {
    let mut config = Value::Null;
    let mut lines = text.lines();
    let mut header = None;
    for line in lines.by_ref() {
        if let Some(rest) = line.strip_prefix("# config ") {
            config = serde_json::from_str(rest).map_err(|e| CliError::new(Exit::Config, e.to_string()))?;
        } else if !line.starts_with('#') {
            header = Some(line);
            break;
        }
    }
    let header = header.ok_or_else(|| CliError::new(Exit::Config, "missing column header"))?;
    if header.split('\t').collect::<Vec<_>>() != columns {
        return Err(CliError::new(Exit::Config, format!("unexpected columns {header:?}")));
    }
    let rows = lines
        .filter(|l| !l.is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            if f.len() == columns.len() {
                Ok(f)
            } else {
                Err(CliError::new(Exit::Config, format!("row has {} fields: {l:?}", f.len())))
            }
        })
        .collect::<Result<_, _>>()?;
    Ok((config, rows))
}

pub fn vec_str(v: &[Rational]) -> String {
    fmt_vector(v)
}

pub fn int_vec_str(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

pub fn element_json(g: &WeylGroup, x: &Element) -> Value {
    json!({
        "word": g.format_word(x),
        "length": g.length(x),
        "element": x.to_json(),
    })
}

/// Parses `e`, `s1*s0*s2`, or a word ending in `pi[...]`, the format of [`WeylGroup::format_word`].
pub fn parse_element(g: &WeylGroup, s: &str) -> Result<Element, CliError> {
    let bad = |why: String| CliError::new(Exit::Config, format!("bad element {s:?}: {why}"));
    let mut x = g.identity();
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(x);
    }
    for part in s.split('*').map(str::trim) {
        if let Some(rest) = part.strip_prefix("pi") {
            let mu: Vec<i64> = rest
                .trim_matches(|c| c == '[' || c == ']')
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<Result<_, _>>()
                .map_err(|e| bad(e.to_string()))?;
            let pi = g
                .length_zero_elements()
                .into_iter()
                .find(|p| p.translation_part() == mu.as_slice())
                .ok_or_else(|| bad(format!("no length-zero element with translation {mu:?}")))?;
            x = x.mul(&pi);
        } else {
            let i: usize = part
                .strip_prefix('s')
                .and_then(|k| k.parse().ok())
                .ok_or_else(|| bad(format!("unknown letter {part:?}")))?;
            x = x.mul(g.generator(i).map_err(|e| bad(e.to_string()))?);
        }
    }
    Ok(x)
}

/// Parses the facet label `word|{J}`.
pub fn parse_facet(g: &WeylGroup, s: &str) -> Result<Facet, CliError> {
    let (w, t) = s
        .split_once('|')
        .ok_or_else(|| CliError::new(Exit::Config, format!("facet {s:?} is not of the form word|{{J}}")))?;
    let y = parse_element(g, w)?;
    let j = NodeSet::parse(t).map_err(|e| CliError::new(Exit::Config, e.to_string()))?;
    Facet::new(g, &y, j).map_err(|e| CliError::new(Exit::Config, e.to_string()))
}

pub fn parse_window(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::new(Exit::Config, format!("window {s:?} is not of the form a:b"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let (a, b): (i64, i64) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}
