//! Matrix Market reader and writer.
//!
//! Reads `coordinate` and `array` files with `real`, `integer`, `complex` or
//! `pattern` fields and `general`, `symmetric`, `hermitian` or
//! `skew-symmetric` storage; symmetric storage is expanded on read. Indices
//! are 1-based as in the format. Repeated coordinate entries are summed.

use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{lit, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Layout {
    Coordinate,
    Array,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Field {
    Real,
    Integer,
    Complex,
    Pattern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Symmetry {
    General,
    Symmetric,
    Hermitian,
    Skew,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_header(line_no: usize, line: &str) -> Result<(Layout, Field, Symmetry)> {
    let words: Vec<String> = line.split_whitespace().map(str::to_ascii_lowercase).collect();
    if words.len() != 5 || words[0] != "%%matrixmarket" || words[1] != "matrix" {
        return Err(parse_err(line_no, "expected '%%MatrixMarket matrix <format> <field> <symmetry>'"));
    }
    let layout = match words[2].as_str() {
        "coordinate" => Layout::Coordinate,
        "array" => Layout::Array,
        other => return Err(parse_err(line_no, format!("unknown format '{other}'"))),
    };
    let field = match words[3].as_str() {
        "real" | "double" => Field::Real,
        "integer" => Field::Integer,
        "complex" => Field::Complex,
        "pattern" => Field::Pattern,
        other => return Err(parse_err(line_no, format!("unknown field '{other}'"))),
    };
    let symmetry = match words[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" => Symmetry::Symmetric,
        "hermitian" => Symmetry::Hermitian,
        "skew-symmetric" => Symmetry::Skew,
        other => return Err(parse_err(line_no, format!("unknown symmetry '{other}'"))),
    };
    if field == Field::Pattern && layout == Layout::Array {
        return Err(parse_err(line_no, "pattern field requires coordinate format"));
    }
    if symmetry == Symmetry::Hermitian && field != Field::Complex {
        return Err(parse_err(line_no, "hermitian symmetry requires a complex field"));
    }
    Ok((layout, field, symmetry))
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| parse_err(line, format!("expected a non-negative integer, found '{tok}'")))
}

fn parse_value<T: Real>(line: usize, field: Field, toks: &[&str]) -> Result<Complex<T>> {
    let num = |tok: &str| -> Result<T> {
        let v: f64 = match field {
            Field::Integer => tok
                .parse::<i64>()
                .map(|v| v as f64)
                .map_err(|_| parse_err(line, format!("expected an integer, found '{tok}'")))?,
            _ => tok.parse().map_err(|_| parse_err(line, format!("expected a number, found '{tok}'")))?,
        };
        if !v.is_finite() {
            return Err(parse_err(line, format!("non-finite value '{tok}'")));
        }
        Ok(lit(v))
    };
    let want = match field {
        Field::Pattern => 0,
        Field::Complex => 2,
        _ => 1,
    };
    if toks.len() != want {
        return Err(parse_err(line, format!("expected {want} value(s), found {}", toks.len())));
    }
    Ok(match field {
        Field::Pattern => Complex::new(T::one(), T::zero()),
        Field::Complex => Complex::new(num(toks[0])?, num(toks[1])?),
        _ => Complex::new(num(toks[0])?, T::zero()),
    })
}

/// Mirrors entry `(i, j)` into `(j, i)` according to the storage symmetry.
fn mirrored<T: Real>(sym: Symmetry, v: Complex<T>) -> Complex<T> {
    match sym {
        Symmetry::General | Symmetry::Symmetric => v,
        Symmetry::Hermitian => v.conj(),
        Symmetry::Skew => -v,
    }
}

/// Parses Matrix Market text.
pub fn parse_matrix_market<T: Real>(text: &str) -> Result<CMatrix<T>> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l));
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    let (layout, field, sym) = parse_header(hline, header)?;
    let mut data = lines.filter(|(_, l)| {
        let t = l.trim();
        !t.is_empty() && !t.starts_with('%')
    });
    let (sline, size) = data.next().ok_or_else(|| parse_err(hline, "missing size line"))?;
    let dims: Vec<&str> = size.split_whitespace().collect();
    let expected_dims = if layout == Layout::Coordinate { 3 } else { 2 };
    if dims.len() != expected_dims {
        return Err(parse_err(sline, format!("size line needs {expected_dims} integers")));
    }
    let rows = parse_usize(sline, dims[0])?;
    let cols = parse_usize(sline, dims[1])?;
    if sym != Symmetry::General && rows != cols {
        return Err(Error::DimensionMismatch(format!("{rows}x{cols} matrix cannot use symmetric storage")));
    }
    let mut m = CMatrix::zeros(rows, cols);
    match layout {
        Layout::Coordinate => {
            let nnz = parse_usize(sline, dims[2])?;
            let mut count = 0;
            for (line, text) in data {
                let toks: Vec<&str> = text.split_whitespace().collect();
                if toks.len() < 2 {
                    return Err(parse_err(line, "expected 'row col [value]'"));
                }
                let i = parse_usize(line, toks[0])?;
                let j = parse_usize(line, toks[1])?;
                if i == 0 || j == 0 || i > rows || j > cols {
                    return Err(parse_err(line, format!("index ({i}, {j}) outside {rows}x{cols}")));
                }
                let v = parse_value::<T>(line, field, &toks[2..])?;
                let (i, j) = (i - 1, j - 1);
                if sym != Symmetry::General && j > i {
                    return Err(parse_err(line, "symmetric storage lists the lower triangle only"));
                }
                if sym == Symmetry::Skew && i == j {
                    return Err(parse_err(line, "skew-symmetric storage has no diagonal entries"));
                }
                count += 1;
                if count > nnz {
                    return Err(parse_err(line, format!("more than the declared {nnz} entries")));
                }
                m[(i, j)] += v;
                if sym != Symmetry::General && i != j {
                    m[(j, i)] += mirrored(sym, v);
                }
            }
            if count != nnz {
                return Err(Error::DimensionMismatch(format!("declared {nnz} entries, found {count}")));
            }
        }
        Layout::Array => {
            // column-major; symmetric storage holds the lower triangle of each column
            let positions: Vec<(usize, usize)> = (0..cols)
                .flat_map(|j| {
                    let start = match sym {
                        Symmetry::General => 0,
                        Symmetry::Skew => j + 1,
                        _ => j,
                    };
                    (start..rows).map(move |i| (i, j))
                })
                .collect();
            let mut slots = positions.iter();
            let mut count = 0;
            for (line, text) in data {
                let toks: Vec<&str> = text.split_whitespace().collect();
                let v = parse_value::<T>(line, field, &toks)?;
                let Some(&(i, j)) = slots.next() else {
                    return Err(parse_err(line, format!("more than the expected {} values", positions.len())));
                };
                count += 1;
                m[(i, j)] = v;
                if sym != Symmetry::General && i != j {
                    m[(j, i)] = mirrored(sym, v);
                }
            }
            if count != positions.len() {
                return Err(Error::DimensionMismatch(format!("expected {} values, found {count}", positions.len())));
            }
        }
    }
    Ok(m)
}

pub fn read_matrix_market<T: Real>(path: impl AsRef<Path>) -> Result<CMatrix<T>> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_matrix_market(&text)
}

/// Serializes `m` as a general coordinate file, `real` when every entry is
/// real and `complex` otherwise. Values are printed in shortest round-trip form.
pub fn format_matrix_market<T: Real>(m: &CMatrix<T>) -> String {
    let is_real = m.as_slice().iter().all(|z| z.im == T::zero());
    let entries: Vec<(usize, usize, Complex<T>)> = (0..m.ncols())
        .flat_map(|j| (0..m.nrows()).map(move |i| (i, j)))
        .map(|(i, j)| (i, j, m[(i, j)]))
        .filter(|(_, _, v)| !v.is_zero())
        .collect();
    let mut out = format!(
        "%%MatrixMarket matrix coordinate {} general\n{} {} {}\n",
        if is_real { "real" } else { "complex" },
        m.nrows(),
        m.ncols(),
        entries.len()
    );
    for (i, j, v) in entries {
        if is_real {
            let _ = writeln!(out, "{} {} {}", i + 1, j + 1, v.re);
        } else {
            let _ = writeln!(out, "{} {} {} {}", i + 1, j + 1, v.re, v.im);
        }
    }
    out
}

pub fn write_matrix_market<T: Real>(path: impl AsRef<Path>, m: &CMatrix<T>) -> Result<()> {
    let path = path.as_ref();
    std::fs::write(path, format_matrix_market(m)).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::real;

    fn parse(text: &str) -> Result<CMatrix<f64>> {
        parse_matrix_market(text)
    }

    #[test]
    fn array_real_is_column_major() {
        let m = parse("%%MatrixMarket matrix array real general\n2 2\n2\n3\n3\n2\n").unwrap();
        assert_eq!(m, CMatrix::from_real_rows(&[&[2.0, 3.0], &[3.0, 2.0]]).unwrap());
        let m = parse("%%MatrixMarket matrix array real general\n% comment\n\n2 3\n1\n2\n3\n4\n5\n6\n").unwrap();
        assert_eq!(m[(1, 0)], real(2.0));
        assert_eq!(m[(0, 1)], real(3.0));
        assert_eq!(m[(1, 2)], real(6.0));
    }

    #[test]
    fn coordinate_complex_entry() {
        let m = parse("%%MatrixMarket matrix coordinate complex general\n2 2 1\n1 2 0.0 1.0\n").unwrap();
        assert_eq!(m[(0, 1)], Complex::new(0.0, 1.0));
        assert_eq!(m[(1, 0)], Complex::zero());
    }

    #[test]
    fn symmetric_lower_triangle_expands() {
        let m =
            parse("%%MatrixMarket matrix coordinate real symmetric\n3 3 4\n1 1 4\n2 1 -1\n3 2 2.5\n3 3 1\n").unwrap();
        assert_eq!(m, m.transpose());
        assert_eq!(m[(0, 1)], real(-1.0));
        assert_eq!(m[(1, 2)], real(2.5));
        let h = parse("%%MatrixMarket matrix coordinate complex hermitian\n2 2 2\n1 1 1 0\n2 1 1 2\n").unwrap();
        assert_eq!(h, h.conj_transpose());
        let s = parse("%%MatrixMarket matrix array real skew-symmetric\n3 3\n1\n2\n3\n").unwrap();
        assert_eq!(s, s.transpose().scale(real(-1.0)));
        assert_eq!(s[(1, 0)], real(1.0));
        assert_eq!(s[(2, 1)], real(3.0));
        let a = parse("%%MatrixMarket matrix array real symmetric\n2 2\n2\n3\n2\n").unwrap();
        assert_eq!(a, CMatrix::from_real_rows(&[&[2.0, 3.0], &[3.0, 2.0]]).unwrap());
    }

    #[test]
    fn integer_and_pattern_fields() {
        let m = parse("%%MatrixMarket matrix coordinate integer general\n2 2 2\n1 1 7\n2 2 -3\n").unwrap();
        assert_eq!(m.diag(), vec![real(7.0), real(-3.0)]);
        let p = parse("%%MatrixMarket matrix coordinate pattern general\n2 2 1\n2 1\n").unwrap();
        assert_eq!(p[(1, 0)], real(1.0));
        assert!(parse("%%MatrixMarket matrix coordinate integer general\n1 1 1\n1 1 1.5\n").is_err());
    }

    #[test]
    fn duplicates_are_summed() {
        let m = parse("%%MatrixMarket matrix coordinate real general\n1 1 2\n1 1 1.5\n1 1 2\n").unwrap();
        assert_eq!(m[(0, 0)], real(3.5));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse("%%MatrixMarket matrix coordinate real general\n2 2 1\n% note\n3 1 1.0\n").unwrap_err();
        assert_eq!(e, parse_err(4, "index (3, 1) outside 2x2"));
        assert!(matches!(parse("%%MatrixMarket tensor array real general\n"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse("%%MatrixMarket matrix array real general\n2 2\n1\nx\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse("%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n"),
            Err(Error::DimensionMismatch(_))
        ));
        assert!(matches!(
            parse("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 1 1\n2 2 1\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse("%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n1 2 1\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse("%%MatrixMarket matrix coordinate real general\n1 1 1\n1 1 nan\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse("").is_err());
    }

    #[test]
    fn write_read_round_trip_is_exact() {
        let m = CMatrix::<f64>::from_fn(3, 3, |i, j| {
            Complex::new(0.1 * i as f64 - 1.0 / 3.0 * j as f64, (i * j) as f64 / 7.0)
        });
        assert_eq!(parse(&format_matrix_market(&m)).unwrap(), m);
        let r = CMatrix::<f64>::from_real_rows(&[&[1e-300, 0.0], &[-2.5e17, std::f64::consts::PI]]).unwrap();
        let text = format_matrix_market(&r);
        assert!(text.starts_with("%%MatrixMarket matrix coordinate real general\n2 2 3\n"));
        assert_eq!(parse(&text).unwrap(), r);
    }
}
