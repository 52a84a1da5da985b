use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::error::{Error, Result};

use super::run::SweepRow;

const SIGNIFICANT_DIGITS: i32 = 12;

/// Formats like C's `%.12g`: 12 significant digits, trailing zeros dropped,
/// scientific notation outside [1e-5, 1e12).
pub fn format_number(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", (SIGNIFICANT_DIGITS - 1) as usize, x);
    let (mantissa, exponent) = sci.split_once('e').expect("exponent marker");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS).contains(&exponent) {
        let decimals = (SIGNIFICANT_DIGITS - 1 - exponent).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn header(with_mc: bool, with_regime: bool) -> String {
    let mut cols = vec![
        "sweep_var",
        "Q_pipeline",
        "Q_reference",
        "F_analytic",
        "F_reference",
    ];
    if with_mc {
        cols.extend(["F_mc", "F_mc_stderr"]);
    }
    if with_regime {
        cols.push("regime");
    }
    cols.join(",")
}

/// Writes a header and one line per row, LF-terminated. Optional columns
/// appear when the first row carries them.
pub fn emit_csv<W: Write>(rows: &[SweepRow], mut out: W) -> std::io::Result<()> {
    let with_mc = rows.first().is_some_and(|r| r.mc.is_some());
    let with_regime = rows.first().is_some_and(|r| r.regime.is_some());
    writeln!(out, "{}", header(with_mc, with_regime))?;
    for row in rows {
        let mut fields = vec![
            format_number(row.sweep_var),
            format_number(row.q_pipeline),
            format_number(row.q_reference),
            format_number(row.f_analytic),
            format_number(row.f_reference),
        ];
        if with_mc {
            let mc = row.mc.expect("every row of an MC sweep has an estimate");
            fields.push(format_number(mc.mean));
            fields.push(format_number(mc.std_error));
        }
        if with_regime {
            fields.push(row.regime.map(|r| r.to_string()).unwrap_or_default());
        }
        writeln!(out, "{}", fields.join(","))?;
    }
    out.flush()
}

pub fn write_csv_file(rows: &[SweepRow], path: &Path) -> Result<()> {
    let io_err = |source| Error::Io {
        path: path.to_path_buf(),
        source,
    };
    let file = File::create(path).map_err(io_err)?;
    emit_csv(rows, BufWriter::new(file)).map_err(io_err)
}

pub fn csv_string(rows: &[SweepRow]) -> String {
    let mut buf = Vec::new();
    emit_csv(rows, &mut buf).expect("writing to memory");
    String::from_utf8(buf).expect("ascii output")
}
