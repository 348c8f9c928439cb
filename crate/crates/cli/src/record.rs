//! Deterministic CSV/JSON record emission.
//!
//! All numeric output carries 17 significant digits so values round-trip
//! exactly through text; identical invocations produce byte-identical
//! output (LF line endings, fixed field order, no locale dependence).

/// 17 significant digits, round-trip exact for f64.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

/// One output record: fixed field names, values already formatted.
pub struct Record {
    fields: Vec<(&'static str, String)>,
}

impl Record {
    pub fn new() -> Self {
        Record { fields: Vec::new() }
    }

    pub fn int(mut self, name: &'static str, v: u64) -> Self {
        self.fields.push((name, v.to_string()));
        self
    }

    pub fn real(mut self, name: &'static str, v: f64) -> Self {
        self.fields.push((name, fmt17(v)));
        self
    }

    pub fn text(mut self, name: &'static str, v: &str) -> Self {
        self.fields.push((name, v.to_string()));
        self
    }

    pub fn csv_header(&self) -> String {
        self.fields
            .iter()
            .map(|(n, _)| *n)
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn csv_row(&self) -> String {
        self.fields
            .iter()
            .map(|(_, v)| v.as_str())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// One JSON object per record. Numeric fields were formatted with
    /// `fmt17`, which is valid JSON number syntax; text fields hold fixed
    /// tokens (method/route/family names) that need no escaping.
    pub fn json_line(&self) -> String {
        let body = self
            .fields
            .iter()
            .map(|(n, v)| {
                if v.parse::<f64>().is_ok() {
                    format!("\"{n}\":{v}")
                } else {
                    format!("\"{n}\":\"{v}\"")
                }
            })
            .collect::<Vec<_>>()
            .join(",");
        format!("{{{body}}}")
    }
}

/// Print a stream of records in the chosen format (CSV gets one header).
pub fn emit(records: &[Record], format: OutputFormat) {
    match format {
        OutputFormat::Csv => {
            if let Some(first) = records.first() {
                println!("{}", first.csv_header());
            }
            for r in records {
                println!("{}", r.csv_row());
            }
        }
        OutputFormat::Json => {
            for r in records {
                println!("{}", r.json_line());
            }
        }
    }
}
