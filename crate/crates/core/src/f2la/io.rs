//! Text "alist" and raw binary matrix formats.
//!
//! alist layout (MacKay):
//! ```text
//! n m                    columns, rows
//! max_col_w max_row_w
//! col weights (n numbers)
//! row weights (m numbers)
//! n lines: 1-based row indices of each column, zero-padded to max_col_w
//! m lines: 1-based column indices of each row, zero-padded to max_row_w
//! ```
//! The binary dump is `rows` and `cols` as little-endian u64, then each row
//! as ⌈cols/64⌉ little-endian words.

use std::fmt::Write as _;
use std::io::{Read, Write};

use super::bitvec::words_for;
use super::matrix::F2Matrix;
use super::F2Error;

pub fn to_alist(m: &F2Matrix) -> String {
    let (rows, cols) = m.shape();
    let t = m.transpose();
    let col_sup: Vec<Vec<usize>> = (0..cols).map(|j| t.row_support(j)).collect();
    let row_sup: Vec<Vec<usize>> = (0..rows).map(|i| m.row_support(i)).collect();
    let max_c = col_sup.iter().map(Vec::len).max().unwrap_or(0);
    let max_r = row_sup.iter().map(Vec::len).max().unwrap_or(0);
    let mut out = String::new();
    let join = |v: &mut dyn Iterator<Item = usize>| v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(out, "{cols} {rows}").unwrap();
    writeln!(out, "{max_c} {max_r}").unwrap();
    writeln!(out, "{}", join(&mut col_sup.iter().map(Vec::len))).unwrap();
    writeln!(out, "{}", join(&mut row_sup.iter().map(Vec::len))).unwrap();
    for (sup, width) in col_sup.iter().map(|s| (s, max_c)).chain(row_sup.iter().map(|s| (s, max_r))) {
        let mut entries: Vec<usize> = sup.iter().map(|x| x + 1).collect();
        entries.resize(width, 0);
        writeln!(out, "{}", join(&mut entries.into_iter())).unwrap();
    }
    out
}

pub fn from_alist(text: &str) -> Result<F2Matrix, F2Error> {
    let mut nums = text.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|_| F2Error::Parse(format!("bad integer {t:?}")))
    });
    let mut next = || nums.next().unwrap_or_else(|| Err(F2Error::Parse("truncated alist".into())));
    let cols = next()?;
    let rows = next()?;
    let max_c = next()?;
    let max_r = next()?;
    let col_w: Vec<usize> = (0..cols).map(|_| next()).collect::<Result<_, _>>()?;
    let row_w: Vec<usize> = (0..rows).map(|_| next()).collect::<Result<_, _>>()?;
    let mut m = F2Matrix::zeros(rows, cols);
    for (j, &w) in col_w.iter().enumerate() {
        for k in 0..max_c {
            let i = next()?;
            if k < w {
                if i == 0 || i > rows {
                    return Err(F2Error::Parse(format!("row index {i} out of range in column {j}")));
                }
                m.set(i - 1, j, true);
            }
        }
    }
    // the row lists must agree with the column lists
    for (i, &w) in row_w.iter().enumerate() {
        let mut seen = Vec::with_capacity(w);
        for k in 0..max_r {
            let j = next()?;
            if k < w {
                if j == 0 || j > cols {
                    return Err(F2Error::Parse(format!("column index {j} out of range in row {i}")));
                }
                seen.push(j - 1);
            }
        }
        seen.sort_unstable();
        if seen != m.row_support(i) {
            return Err(F2Error::Parse(format!("row {i} disagrees with column lists")));
        }
    }
    Ok(m)
}

pub fn write_binary<W: Write>(m: &F2Matrix, mut w: W) -> std::io::Result<()> {
    w.write_all(&(m.rows() as u64).to_le_bytes())?;
    w.write_all(&(m.cols() as u64).to_le_bytes())?;
    for word in m.data() {
        w.write_all(&word.to_le_bytes())?;
    }
    Ok(())
}

pub fn read_binary<R: Read>(mut r: R) -> Result<F2Matrix, F2Error> {
    let mut buf = [0u8; 8];
    let mut word = |r: &mut R| -> Result<u64, F2Error> {
        r.read_exact(&mut buf).map_err(|e| F2Error::Parse(format!("binary dump: {e}")))?;
        Ok(u64::from_le_bytes(buf))
    };
    let rows = word(&mut r)? as usize;
    let cols = word(&mut r)? as usize;
    let total = rows.checked_mul(words_for(cols)).ok_or_else(|| F2Error::Parse("binary dump: size overflow".into()))?;
    let data = (0..total).map(|_| word(&mut r)).collect::<Result<Vec<_>, _>>()?;
    Ok(F2Matrix::from_raw(rows, cols, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alist_layout() {
        let m = F2Matrix::from_rows(&[[1u8, 1, 0], [0, 1, 1]]);
        let text = to_alist(&m);
        assert_eq!(text, "3 2\n2 2\n1 2 1\n2 2\n1 0\n1 2\n2 0\n1 2\n2 3\n");
        assert_eq!(from_alist(&text).unwrap(), m);
    }

    #[test]
    fn alist_rejects_inconsistent_rows() {
        assert!(from_alist("2 1\n1 1\n1 0\n1\n1\n0\n2\n").is_err());
    }

    #[test]
    fn binary_round_trip() {
        let m = F2Matrix::from_fn(5, 70, |i, j| (i ^ j) % 3 == 0);
        let mut buf = Vec::new();
        write_binary(&m, &mut buf).unwrap();
        assert_eq!(buf.len(), 16 + 5 * 2 * 8);
        assert_eq!(read_binary(&buf[..]).unwrap(), m);
    }
}
