//! CSV and report-text emission. All floats go out as `{:.16e}` — 17
//! significant digits, enough to round-trip an f64 — so identical runs
//! produce identical bytes.

use std::path::Path;

use trigapprox::{Error, Result};

pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Debug, Clone)]
pub enum Cell {
    F(f64),
    I(i64),
    U(usize),
    S(String),
    B(bool),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::F(x) => fmt_f64(*x),
            Cell::I(v) => format!("{v}"),
            Cell::U(v) => format!("{v}"),
            Cell::S(s) => {
                debug_assert!(
                    !s.contains(',') && !s.contains('\n'),
                    "cell strings are plain tokens"
                );
                s.clone()
            }
            Cell::B(b) => format!("{b}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Csv {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Csv {
    pub fn new(columns: &[&'static str]) -> Self {
        Csv {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn row(&mut self, cells: Vec<Cell>) {
        debug_assert_eq!(cells.len(), self.columns.len(), "row arity mismatch");
        self.rows.push(cells);
    }

    pub fn render(&self) -> String {
        let mut out = self.columns.join(",");
        out.push('\n');
        for row in &self.rows {
            let line: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        std::fs::write(path, self.render())
            .map_err(|e| Error::Config(format!("cannot write {}: {e}", path.display())))
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Report headers replay every knob with its provenance so a run is
/// auditable from its own output.
pub fn print_header(command: &str, knobs: &[String]) {
    println!("# trigapprox {command}");
    for line in knobs {
        println!("# {line}");
    }
}

/// FNV-1a, for comparing rerun outputs byte-for-byte in-process.
pub fn fnv64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floats_carry_seventeen_significant_digits() {
        assert_eq!(fmt_f64(1.0), "1.0000000000000000e0");
        assert_eq!(fmt_f64(0.1), "1.0000000000000001e-1");
        let x = std::f64::consts::PI;
        let rendered = fmt_f64(x);
        assert_eq!(rendered.parse::<f64>().unwrap(), x);
    }

    #[test]
    fn csv_layout_is_stable() {
        let mut csv = Csv::new(&["n", "value", "ok"]);
        csv.row(vec![Cell::U(3), Cell::F(0.5), Cell::B(true)]);
        assert_eq!(csv.render(), "n,value,ok\n3,5.0000000000000000e-1,true\n");
    }

    #[test]
    fn fnv_matches_reference_vectors() {
        assert_eq!(fnv64(b""), 0xcbf2_9ce4_8422_2325);
        assert_eq!(fnv64(b"a"), 0xaf63_dc4c_8601_ec8c);
    }
}
