//! Class file formats.
//!
//! Text (`HCLS1`), LF line endings:
//!
//! ```text
//! HCLS1
//! h=<hypotheses> x=<examples>
//! <x characters from {0,1}>     (h lines)
//! ```
//!
//! CSV: one row per hypothesis, comma-separated `0`/`1`, with an optional
//! header row.

use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use super::HypothesisClass;
use crate::bits::BitMatrix;
use crate::error::{Error, Result};

const MAGIC: &str = "HCLS1";

pub fn write_class<W: Write>(class: &HypothesisClass, mut out: W) -> Result<()> {
    writeln!(out, "{MAGIC}")?;
    writeln!(out, "h={} x={}", class.num_hypotheses(), class.num_examples())?;
    let mut line = Vec::with_capacity(class.num_examples() + 1);
    for h in 0..class.num_hypotheses() {
        line.clear();
        line.extend((0..class.num_examples()).map(|x| if class.label(h, x) { b'1' } else { b'0' }));
        line.push(b'\n');
        out.write_all(&line)?;
    }
    out.flush()?;
    Ok(())
}

pub fn read_class<R: Read>(input: R) -> Result<HypothesisClass> {
    let mut lines = BufReader::new(input).split(b'\n');
    let mut next = |lineno: usize| -> Result<Option<Vec<u8>>> { lines.next().transpose().map_err(|e| Error::parse(lineno, e.to_string())) };

    match next(1)? {
        Some(l) if l == MAGIC.as_bytes() => {}
        Some(l) => {
            return Err(Error::parse(
                1,
                format!("expected `{MAGIC}`, found `{}`", String::from_utf8_lossy(&l)),
            ))
        }
        None => return Err(Error::parse(1, "empty input")),
    }
    let header = next(2)?.ok_or_else(|| Error::parse(2, "missing dimension line"))?;
    let (h, x) = parse_dims(&header).ok_or_else(|| {
        Error::parse(
            2,
            format!("expected `h=<int> x=<int>`, found `{}`", String::from_utf8_lossy(&header)),
        )
    })?;
    if h == 0 || x == 0 {
        return Err(Error::parse(2, "dimensions must be positive"));
    }

    let mut m = BitMatrix::zeros(h, x);
    for row in 0..h {
        let lineno = row + 3;
        let line = next(lineno)?
            .ok_or_else(|| Error::parse(lineno, format!("expected {h} rows, found {row}")))?;
        if line.len() != x {
            return Err(Error::parse(
                lineno,
                format!("row has {} characters, expected {x}", line.len()),
            ));
        }
        for (col, &ch) in line.iter().enumerate() {
            match ch {
                b'0' => {}
                b'1' => m.set(row, col, true),
                other => {
                    return Err(Error::parse(
                        lineno,
                        format!("unexpected character {:?} at column {}", other as char, col + 1),
                    ))
                }
            }
        }
    }
    if let Some(extra) = next(h + 3)? {
        return Err(Error::parse(
            h + 3,
            format!(
                "trailing content after {h} rows: `{}`",
                String::from_utf8_lossy(&extra)
            ),
        ));
    }
    HypothesisClass::from_bit_matrix(m)
}

fn parse_dims(line: &[u8]) -> Option<(usize, usize)> {
    let line = std::str::from_utf8(line).ok()?;
    let mut parts = line.split(' ');
    let h = parts.next()?.strip_prefix("h=")?.parse().ok()?;
    let x = parts.next()?.strip_prefix("x=")?.parse().ok()?;
    if parts.next().is_some() {
        return None;
    }
    Some((h, x))
}

pub fn write_class_csv<W: Write>(class: &HypothesisClass, out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    let header: Vec<String> = (0..class.num_examples()).map(|x| format!("x{x}")).collect();
    w.write_record(&header).map_err(csv_err)?;
    for h in 0..class.num_hypotheses() {
        w.write_record((0..class.num_examples()).map(|x| if class.label(h, x) { "1" } else { "0" }))
            .map_err(csv_err)?;
    }
    w.flush()?;
    Ok(())
}

/// Reads the CSV variant. A first record containing anything other than
/// `0`/`1` is treated as a header.
pub fn read_class_csv<R: Read>(input: R) -> Result<HypothesisClass> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .from_reader(input);
    let mut rows: Vec<Vec<bool>> = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(i + 1, |p| p.line() as usize);
            Error::parse(line, e.to_string())
        })?;
        let line = record.position().map_or(i + 1, |p| p.line() as usize);
        let parsed: Option<Vec<bool>> = record
            .iter()
            .map(|f| match f {
                "0" => Some(false),
                "1" => Some(true),
                _ => None,
            })
            .collect();
        match parsed {
            Some(row) => {
                if let Some(first) = rows.first() {
                    if first.len() != row.len() {
                        return Err(Error::parse(
                            line,
                            format!("row has {} fields, expected {}", row.len(), first.len()),
                        ));
                    }
                }
                rows.push(row);
            }
            None if i == 0 => continue,
            None => return Err(Error::parse(line, "fields must be 0 or 1")),
        }
    }
    if rows.is_empty() {
        return Err(Error::parse(1, "no data rows"));
    }
    HypothesisClass::from_rows(&rows).map_err(|e| Error::parse(1, e.to_string()))
}

fn csv_err(e: csv::Error) -> Error {
    Error::Io(std::io::Error::other(e))
}

/// Reads a class file, choosing the text or CSV format by the first line.
pub fn read_class_path(path: impl AsRef<Path>) -> Result<HypothesisClass> {
    let mut reader = BufReader::new(File::open(path)?);
    let is_text = reader.fill_buf()?.starts_with(MAGIC.as_bytes());
    if is_text {
        read_class(reader)
    } else {
        read_class_csv(reader)
    }
}

pub fn write_class_path(class: &HypothesisClass, path: impl AsRef<Path>) -> Result<()> {
    write_class(class, BufWriter::new(File::create(path)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypothesis_graph::{gen_parity, gen_random};

    fn text(class: &HypothesisClass) -> String {
        let mut buf = Vec::new();
        write_class(class, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn exact_text_layout() {
        let p = gen_parity(2).unwrap();
        assert_eq!(text(&p), "HCLS1\nh=3 x=4\n0101\n0011\n0110\n");
    }

    #[test]
    fn round_trip() {
        let c = gen_random(7, 70, 3).unwrap();
        let back = read_class(text(&c).as_bytes()).unwrap();
        assert_eq!(back, c);
        assert_eq!(text(&back), text(&c));
    }

    fn parse_err_line(input: &str) -> usize {
        match read_class(input.as_bytes()) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse_err_line("HCLS1\nh=3 x=2\n01\n10\n"), 5);
        assert_eq!(parse_err_line("HCLS2\nh=1 x=1\n1\n"), 1);
        assert_eq!(parse_err_line("HCLS1\nh=1\n1\n"), 2);
        assert_eq!(parse_err_line("HCLS1\nh=2 x=2\n01\n1\n"), 4);
        assert_eq!(parse_err_line("HCLS1\nh=1 x=2\n0a\n"), 3);
        assert_eq!(parse_err_line("HCLS1\nh=1 x=2\n01\n11\n"), 4);
        assert_eq!(parse_err_line("HCLS1\nh=0 x=2\n"), 2);
        assert_eq!(parse_err_line("HCLS1\nh=1 x=2\n01\r\n"), 3);
    }

    #[test]
    fn csv_matches_text() {
        let p = gen_parity(3).unwrap();
        let mut buf = Vec::new();
        write_class_csv(&p, &mut buf).unwrap();
        assert!(buf.starts_with(b"x0,x1"));
        assert_eq!(read_class_csv(buf.as_slice()).unwrap(), p);

        let no_header = "0,1,0,1\n0,0,1,1\n0,1,1,0\n";
        assert_eq!(read_class_csv(no_header.as_bytes()).unwrap(), gen_parity(2).unwrap());
    }

    #[test]
    fn csv_errors() {
        assert!(matches!(
            read_class_csv("0,1\n1,2\n".as_bytes()),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(read_class_csv("a,b\n".as_bytes()).is_err());
        assert!(read_class_csv("0,1\n1,1,1\n".as_bytes()).is_err());
    }
}
