//! Rendering of command results. Floats print with 17 significant digits in
//! text and CSV; JSON uses the shortest round-tripping representation.

use crate::args::Format;
use crate::error::CliError;
use barnes_zeta::fmt17;
use serde_json::{Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(i64),
    Text(String),
    Bool(bool),
}

impl Cell {
    fn plain(&self) -> String {
        match self {
            Cell::Float(v) => fmt17(*v),
            Cell::Int(v) => v.to_string(),
            Cell::Text(t) => t.clone(),
            Cell::Bool(b) => b.to_string(),
        }
    }

    fn csv(&self) -> String {
        let p = self.plain();
        if p.contains([',', '"', '\n']) {
            format!("\"{}\"", p.replace('"', "\"\""))
        } else {
            p
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Float(v) => Value::from(*v),
            Cell::Int(v) => Value::from(*v),
            Cell::Text(t) => Value::from(t.as_str()),
            Cell::Bool(b) => Value::from(*b),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
    /// Render as one record rather than a list, even in JSON.
    pub single: bool,
}

impl Table {
    pub fn record(fields: Vec<(&'static str, Cell)>) -> Self {
        let (header, row) = fields.into_iter().unzip();
        Table {
            header,
            rows: vec![row],
            single: true,
        }
    }

    pub fn rows(header: Vec<&'static str>, rows: Vec<Vec<Cell>>) -> Self {
        Table {
            header,
            rows,
            single: false,
        }
    }

    fn object(&self, row: &[Cell]) -> Value {
        let map: Map<String, Value> = self
            .header
            .iter()
            .zip(row)
            .map(|(k, c)| (k.to_string(), c.json()))
            .collect();
        Value::Object(map)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Report {
    Table(Table),
    /// Output with a bespoke text form, e.g. a decomposition display.
    Raw { text: String, json: Value, csv: Table },
}

fn render_csv(t: &Table) -> String {
    let mut out = t.header.join(",");
    out.push('\n');
    for row in &t.rows {
        out.push_str(&row.iter().map(Cell::csv).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

fn render_json(v: &Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v).map_err(|e| CliError::Io(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

impl Report {
    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match (self, format) {
            (Report::Raw { text, .. }, Format::Text) => Ok(format!("{text}\n")),
            (Report::Raw { json, .. }, Format::Json) => render_json(json),
            (Report::Raw { csv, .. }, Format::Csv) => Ok(render_csv(csv)),
            (Report::Table(t), Format::Csv) => Ok(render_csv(t)),
            (Report::Table(t), Format::Json) => {
                let v = if t.single {
                    t.object(&t.rows[0])
                } else {
                    Value::Array(t.rows.iter().map(|r| t.object(r)).collect())
                };
                render_json(&v)
            }
            (Report::Table(t), Format::Text) => {
                let mut out = String::new();
                if t.single {
                    for (k, c) in t.header.iter().zip(&t.rows[0]) {
                        out.push_str(&format!("{k} = {}\n", c.plain()));
                    }
                } else {
                    out.push_str(&t.header.join("\t"));
                    out.push('\n');
                    for row in &t.rows {
                        out.push_str(&row.iter().map(Cell::plain).collect::<Vec<_>>().join("\t"));
                        out.push('\n');
                    }
                }
                Ok(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let t = Table::record(vec![("value", Cell::Float(0.25)), ("exact", Cell::Text("1/4".into()))]);
        let r = Report::Table(t);
        assert_eq!(r.render(Format::Text).unwrap(), "value = 2.5000000000000000e-1\nexact = 1/4\n");
        assert_eq!(r.render(Format::Csv).unwrap(), "value,exact\n2.5000000000000000e-1,1/4\n");
        let v: Value = serde_json::from_str(&r.render(Format::Json).unwrap()).unwrap();
        assert_eq!(v["value"], 0.25);
        let rows = Report::Table(Table::rows(vec!["a", "b"], vec![vec![Cell::Int(1), Cell::Bool(true)]]));
        assert_eq!(rows.render(Format::Text).unwrap(), "a\tb\n1\ttrue\n");
        let v: Value = serde_json::from_str(&rows.render(Format::Json).unwrap()).unwrap();
        assert_eq!(v[0]["b"], true);
        assert_eq!(Cell::Text("a,b".into()).csv(), "\"a,b\"");
    }
}
