//! Minimal CSV: header row, comma separator, '.' decimal point, rows
//! newline-terminated. Floats carry 17 significant digits so that parsing
//! an emitted file reproduces every binary64 value bit-identically. Cells
//! never contain commas, so no quoting is needed.

use std::io::Write;

use crate::error::Result;

/// 17 significant decimal digits: lossless for binary64.
pub fn fmt_f64(v: f64) -> String {
    format!("{v:.16e}")
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Table {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn write(&self, w: &mut dyn Write) -> Result<()> {
        writeln!(w, "{}", self.header.join(","))?;
        for row in &self.rows {
            writeln!(w, "{}", row.join(","))?;
        }
        Ok(())
    }

    /// Parse text produced by [`Table::write`].
    pub fn parse(text: &str) -> std::result::Result<Table, String> {
        let mut lines = text.lines();
        let header: Vec<String> = lines
            .next()
            .ok_or("empty table")?
            .split(',')
            .map(str::to_string)
            .collect();
        let mut rows = Vec::new();
        for (i, line) in lines.enumerate() {
            let row: Vec<String> = line.split(',').map(str::to_string).collect();
            if row.len() != header.len() {
                return Err(format!("row {} has {} cells, want {}", i + 1, row.len(), header.len()));
            }
            rows.push(row);
        }
        Ok(Table { header, rows })
    }

    /// Column index by name.
    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }
}
