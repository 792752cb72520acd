//! The on-disk set format.
//!
//! UTF-8 text: optional `#` comment lines, one mandatory `n=<N>` header, then
//! one vertex per line as exactly N characters from `{0,1}`, most significant
//! coordinate first. A trailing newline is required and blank lines are
//! forbidden. Comments are only permitted before the header.

use std::collections::HashSet;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::set::VertexSet;
use crate::vertex::{Dimension, Vertex};

/// Parse failure, with the 1-based line it occurred on.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("missing `n=<N>` header")]
    MissingHeader,
    #[error("malformed header (expected `n=<N>`)")]
    BadHeader,
    #[error("dimension {0} out of range (valid: 1..=62)")]
    BadDimension(u64),
    #[error("vertex line has {got} characters, expected {expected}")]
    WrongLength { expected: usize, got: usize },
    #[error("invalid character {found:?} (expected '0' or '1')")]
    BadChar { found: char },
    #[error("duplicate vertex")]
    DuplicateVertex,
    #[error("blank line")]
    BlankLine,
    #[error("missing trailing newline")]
    MissingNewline,
}

/// Reading can fail on the stream itself or on the format.
#[derive(Debug, Error)]
pub enum ReadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn err(line: usize, kind: ParseErrorKind) -> ReadError {
    ReadError::Parse(ParseError { line, kind })
}

/// Parses a set from a buffered stream.
pub fn read_set<R: BufRead>(mut reader: R) -> Result<VertexSet, ReadError> {
    let mut line_no = 0usize;
    let mut buf = String::new();
    let mut dim: Option<Dimension> = None;
    let mut members: Vec<Vertex> = Vec::new();
    let mut seen: HashSet<u64> = HashSet::new();

    loop {
        buf.clear();
        let read = reader.read_line(&mut buf)?;
        if read == 0 {
            break;
        }
        line_no += 1;
        let line = match buf.strip_suffix('\n') {
            Some(l) => l.strip_suffix('\r').unwrap_or(l),
            None => return Err(err(line_no, ParseErrorKind::MissingNewline)),
        };

        match dim {
            None => {
                if line.starts_with('#') {
                    continue;
                }
                if line.is_empty() {
                    return Err(err(line_no, ParseErrorKind::BlankLine));
                }
                let Some(value) = line.strip_prefix("n=") else {
                    return Err(err(line_no, ParseErrorKind::MissingHeader));
                };
                let n: u64 = value
                    .parse()
                    .map_err(|_| err(line_no, ParseErrorKind::BadHeader))?;
                let d = Dimension::new(n.try_into().unwrap_or(u32::MAX))
                    .map_err(|_| err(line_no, ParseErrorKind::BadDimension(n)))?;
                dim = Some(d);
            }
            Some(d) => {
                if line.is_empty() {
                    return Err(err(line_no, ParseErrorKind::BlankLine));
                }
                let expected = d.get() as usize;
                if line.chars().count() != expected {
                    return Err(err(
                        line_no,
                        ParseErrorKind::WrongLength {
                            expected,
                            got: line.chars().count(),
                        },
                    ));
                }
                let mut bits = 0u64;
                for ch in line.chars() {
                    bits = match ch {
                        '0' => bits << 1,
                        '1' => bits << 1 | 1,
                        found => return Err(err(line_no, ParseErrorKind::BadChar { found })),
                    };
                }
                if !seen.insert(bits) {
                    return Err(err(line_no, ParseErrorKind::DuplicateVertex));
                }
                members.push(Vertex::from_bits(bits));
            }
        }
    }

    match dim {
        Some(d) => Ok(VertexSet::from_parts_unchecked(d, members)),
        None => Err(err(line_no + 1, ParseErrorKind::MissingHeader)),
    }
}

/// Parses a set from an in-memory string.
pub fn parse_set_str(s: &str) -> Result<VertexSet, ParseError> {
    read_set(io::Cursor::new(s)).map_err(|e| match e {
        ReadError::Parse(p) => p,
        ReadError::Io(_) => unreachable!("in-memory cursor cannot fail"),
    })
}

/// Writes a set in the file format: header, one vertex per line, trailing
/// newline. The inverse of [`read_set`] including member order.
pub fn write_set<W: Write>(set: &VertexSet, mut writer: W) -> io::Result<()> {
    let n = set.dimension().get();
    writeln!(writer, "n={n}")?;
    // One reusable line buffer; per-vertex String allocation would dominate
    // when writing millions of members.
    let mut line = vec![0u8; n as usize + 1];
    line[n as usize] = b'\n';
    for v in set.iter() {
        let bits = v.bits();
        for i in 0..n {
            line[(n - 1 - i) as usize] = b'0' + ((bits >> i) & 1) as u8;
        }
        writer.write_all(&line)?;
    }
    Ok(())
}
