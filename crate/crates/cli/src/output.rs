use std::io::{self, Write};

use serde::Serialize;

#[derive(clap::ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

pub fn json(value: &impl Serialize) -> io::Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)
}

/// `degree,coeff` rows.
pub fn coeffs_csv<T: Serialize + Copy>(coeffs: &[T]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    w.write_record(["degree", "coeff"])?;
    for (i, c) in coeffs.iter().enumerate() {
        w.serialize((i, *c))?;
    }
    w.flush()
}

pub fn rows_csv<R: Serialize>(rows: impl IntoIterator<Item = R>) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(io::stdout().lock());
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()
}

pub fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}
