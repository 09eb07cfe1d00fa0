use crate::error::CliResult;
use serde::Serialize;
use std::io::Write;

/// A value printable in a CSV cell. Floats carry 17 significant digits.
pub enum Cell<'a> {
    Int(usize),
    Float(f64),
    Text(&'a str),
}

impl Cell<'_> {
    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Float(x) => format!("{x:.16e}"),
            Cell::Text(s) => s.to_string(),
        }
    }
}

pub trait Row: Serialize {
    fn cells(&self) -> Vec<Cell<'_>>;
}

pub fn write_csv<R: Row>(out: &mut dyn Write, header: &[&str], rows: &[R]) -> CliResult<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(row.cells().iter().map(Cell::render))?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> CliResult<()> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}
