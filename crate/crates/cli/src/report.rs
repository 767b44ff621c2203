//! One result, three renderings.

use num_traits::ToPrimitive;
use polystar::scalar::is_integer;
use polystar::Rational;
use serde_json::{json, Map, Value as Json};

/// Output format selected on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// Text body, JSON fields and a CSV table for a single command result.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub text: String,
    pub json: Map<String, Json>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Report {
    pub fn new(text: impl Into<String>) -> Report {
        Report { text: text.into(), ..Report::default() }
    }

    pub fn field(mut self, k: &str, v: Json) -> Report {
        self.json.insert(k.to_string(), v);
        self
    }

    pub fn table<I, R>(mut self, header: &[&str], rows: I) -> Report
    where
        I: IntoIterator<Item = R>,
        R: IntoIterator<Item = String>,
    {
        self.header = header.iter().map(|s| s.to_string()).collect();
        self.rows = rows.into_iter().map(|r| r.into_iter().collect()).collect();
        self
    }

    pub fn render(&self, fmt: Format) -> String {
        match fmt {
            Format::Text => {
                let mut s = self.text.clone();
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                s
            }
            Format::Json => {
                let mut m = Map::new();
                m.insert("schema".into(), json!(1));
                m.extend(self.json.clone());
                let mut s = Json::Object(m).to_string();
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                w.write_record(&self.header).expect("in-memory write");
                for r in &self.rows {
                    w.write_record(r).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
            }
        }
    }
}

/// Integers become JSON numbers when they fit; everything else is a `"p/q"` string.
pub fn rational_json(q: &Rational) -> Json {
    if is_integer(q) {
        if let Some(n) = q.to_integer().to_i64() {
            return json!(n);
        }
    }
    json!(q.to_string())
}
