//! The uniform result of every subcommand and its three renderings.

use std::fmt::Display;
use std::io::{self, Write};
use std::str::FromStr;

use clap::ValueEnum;
use serde_json::{json, Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// A rectangular view of the value, used for csv output.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(ToString::to_string).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn single(header: &str, value: impl Display) -> Self {
        let mut t = Table::new(&[header]);
        t.push(vec![value.to_string()]);
        t
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub query: Map<String, Value>,
    pub value: Value,
    pub route: Option<String>,
    pub bounds_met: Option<bool>,
    pub elapsed_ms: f64,
    /// Human-readable rendering of the value.
    pub text: String,
    pub table: Table,
}

impl Report {
    pub fn new(query: Map<String, Value>, value: Value, text: String, table: Table) -> Self {
        Report { query, value, route: None, bounds_met: None, elapsed_ms: 0.0, text, table }
    }

    pub fn with_route(mut self, route: impl Display) -> Self {
        self.route = Some(route.to_string());
        self
    }

    pub fn with_bounds(mut self, met: bool) -> Self {
        self.bounds_met = Some(met);
        self
    }

    pub fn to_json(&self) -> Value {
        json!({
            "query": self.query,
            "value": self.value,
            "route": self.route,
            "bounds_met": self.bounds_met,
            "elapsed_ms": self.elapsed_ms,
        })
    }

    pub fn write(&self, format: Format, out: &mut impl Write) -> io::Result<()> {
        match format {
            Format::Json => writeln!(out, "{}", self.to_json()),
            Format::Text => {
                writeln!(out, "{}", self.text)?;
                if let Some(route) = &self.route {
                    write!(out, "route: {route}")?;
                    if let Some(met) = self.bounds_met {
                        write!(out, " (bounds met: {met})")?;
                    }
                    writeln!(out)?;
                }
                Ok(())
            }
            Format::Csv => {
                writeln!(out, "{}", csv_line(&self.table.headers))?;
                for row in &self.table.rows {
                    writeln!(out, "{}", csv_line(row))?;
                }
                Ok(())
            }
        }
    }
}

fn csv_line(fields: &[String]) -> String {
    fields
        .iter()
        .map(|f| {
            if f.contains([',', '"', '\n']) {
                format!("\"{}\"", f.replace('"', "\"\""))
            } else {
                f.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// An exact integer as a JSON number of arbitrary size.
pub fn integer(v: impl Display) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

pub fn query(command: &str, fields: &[(&str, Value)]) -> Map<String, Value> {
    let mut map = Map::new();
    map.insert("command".into(), Value::String(command.into()));
    for (k, v) in fields {
        map.insert((*k).into(), v.clone());
    }
    map
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_line(&["[2,1]".into(), "3".into()]), "\"[2,1]\",3");
        assert_eq!(csv_line(&["a\"b".into()]), "\"a\"\"b\"");
    }

    #[test]
    fn big_integers_stay_exact() {
        let v = integer("123456789012345678901234567890");
        assert_eq!(v.to_string(), "123456789012345678901234567890");
    }
}
