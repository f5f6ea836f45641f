//! Text renderings of boards and term lists, each with a loader.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::board::{Board, BoardError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Board(#[from] BoardError),
}

fn parse_err(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Parse {
        line,
        msg: msg.into(),
    }
}

/// One line per row, `#` for 1 and `.` for 0.
pub fn to_ascii(board: &Board) -> String {
    let mut out = String::new();
    for row in board.rows() {
        for v in row {
            out.push(if v == 1 { '#' } else { '.' });
        }
        out.push('\n');
    }
    out
}

pub fn from_ascii(text: &str) -> Result<Board, FormatError> {
    let rows = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            l.trim()
                .chars()
                .map(|c| match c {
                    '#' => Ok(1u8),
                    '.' => Ok(0u8),
                    other => Err(parse_err(i + 1, format!("unexpected {other:?}"))),
                })
                .collect::<Result<Vec<u8>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Board::from_rows(&rows)?)
}

/// Boards separated by blank lines.
pub fn to_ascii_list(boards: &[Board]) -> String {
    boards.iter().map(to_ascii).collect::<Vec<_>>().join("\n")
}

pub fn from_ascii_list(text: &str) -> Result<Vec<Board>, FormatError> {
    text.split("\n\n")
        .filter(|chunk| !chunk.trim().is_empty())
        .map(from_ascii)
        .collect()
}

pub const SVG_COLORS: [&str; 2] = ["#f4d35e", "#0d3b66"];
const CELL: usize = 1;

/// Unit cells, one fill color per label.
pub fn to_svg(board: &Board) -> String {
    let (w, h) = (board.n() * CELL, board.m() * CELL);
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\" width=\"{}\" height=\"{}\" data-m=\"{}\" data-n=\"{}\">",
        w * 20,
        h * 20,
        board.m(),
        board.n()
    );
    for i in 0..board.m() {
        for j in 0..board.n() {
            let v = board.get(i, j);
            let _ = writeln!(
                out,
                "  <rect x=\"{}\" y=\"{}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{}\" stroke=\"#222\" stroke-width=\"0.04\" data-v=\"{v}\"/>",
                j * CELL,
                i * CELL,
                SVG_COLORS[v as usize]
            );
        }
    }
    out.push_str("</svg>\n");
    out
}

fn attr<'a>(tag: &'a str, name: &str) -> Option<&'a str> {
    let key = format!(" {name}=\"");
    let start = tag.find(&key)? + key.len();
    let len = tag[start..].find('"')?;
    Some(&tag[start..start + len])
}

/// Reads back an SVG written by [`to_svg`].
pub fn from_svg(text: &str) -> Result<Board, FormatError> {
    let header = text
        .lines()
        .position(|l| l.trim_start().starts_with("<svg"))
        .ok_or_else(|| parse_err(1, "no <svg> element"))?;
    let head = text.lines().nth(header).unwrap_or_default();
    let num = |name: &str| -> Result<usize, FormatError> {
        attr(head, name)
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| parse_err(header + 1, format!("missing {name}")))
    };
    let (m, n) = (num("data-m")?, num("data-n")?);
    let mut rows = vec![vec![0u8; n]; m];
    let mut seen = 0;
    for (idx, line) in text.lines().enumerate() {
        let line = line.trim();
        if !line.starts_with("<rect") {
            continue;
        }
        let field = |name: &str| -> Result<usize, FormatError> {
            attr(line, name)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| parse_err(idx + 1, format!("bad {name}")))
        };
        let (x, y, v) = (field("x")?, field("y")?, field("data-v")?);
        if x >= n || y >= m || v > 1 {
            return Err(parse_err(idx + 1, "cell out of range"));
        }
        rows[y][x] = v as u8;
        seen += 1;
    }
    if seen != m * n {
        return Err(parse_err(
            1,
            format!("expected {} cells, found {seen}", m * n),
        ));
    }
    if n == 0 {
        return Ok(Board::zeros(m, 0)?);
    }
    Ok(Board::from_rows(&rows)?)
}

/// Several SVG documents, concatenated.
pub fn to_svg_list(boards: &[Board]) -> String {
    boards.iter().map(to_svg).collect()
}

pub fn from_svg_list(text: &str) -> Result<Vec<Board>, FormatError> {
    text.split_inclusive("</svg>\n")
        .filter(|doc| doc.contains("<svg"))
        .map(from_svg)
        .collect()
}

/// `n value` lines, `n` counting from 1.
pub fn to_bfile(terms: &[BigInt]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        let _ = writeln!(out, "{} {t}", i + 1);
    }
    out
}

/// Parses b-file lines; indices must run 1, 2, 3, ... without gaps.
pub fn from_bfile(text: &str) -> Result<Vec<BigInt>, FormatError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let mut parts = line.split(' ');
        let (Some(idx), Some(val), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(parse_err(i + 1, "expected \"n value\""));
        };
        let idx: usize = idx.parse().map_err(|_| parse_err(i + 1, "bad index"))?;
        if idx != out.len() + 1 {
            return Err(parse_err(i + 1, format!("index {idx} out of sequence")));
        }
        out.push(val.parse().map_err(|_| parse_err(i + 1, "bad value"))?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Board {
        Board::from_rows(&[[0, 0, 0, 1], [0, 1, 1, 1], [0, 0, 0, 1]]).unwrap()
    }

    #[test]
    fn ascii_roundtrip() {
        let b = sample();
        let text = to_ascii(&b);
        assert_eq!(text, "...#\n.###\n...#\n");
        assert_eq!(from_ascii(&text).unwrap(), b);
        let list = vec![b.clone(), b.complement()];
        assert_eq!(from_ascii_list(&to_ascii_list(&list)).unwrap(), list);
        assert!(from_ascii("..x\n").is_err());
    }

    #[test]
    fn svg_roundtrip() {
        let b = sample();
        let svg = to_svg(&b);
        assert_eq!(svg.matches("<rect").count(), 12);
        assert!(svg.contains(SVG_COLORS[0]) && svg.contains(SVG_COLORS[1]));
        assert_eq!(from_svg(&svg).unwrap(), b);
        let list = vec![b.clone(), b.hflip()];
        assert_eq!(from_svg_list(&to_svg_list(&list)).unwrap(), list);
    }

    #[test]
    fn bfile_shape() {
        let terms: Vec<BigInt> = [1, 3, 5].map(BigInt::from).to_vec();
        let text = to_bfile(&terms);
        assert_eq!(text, "1 1\n2 3\n3 5\n");
        assert_eq!(from_bfile(&text).unwrap(), terms);
        assert!(from_bfile("2 3\n").is_err());
        assert!(from_bfile("1  3\n").is_err());
    }
}
