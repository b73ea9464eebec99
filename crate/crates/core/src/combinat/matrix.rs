use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::budget::Budget;
use crate::error::{bad_param, precondition, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZeroOneMatrix {
    rows: Vec<Vec<bool>>,
    cols: usize,
}

impl ZeroOneMatrix {
    pub fn new(rows: Vec<Vec<bool>>) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return bad_param("rows differ in length");
        }
        Ok(ZeroOneMatrix { rows, cols })
    }

    /// One row per line of `0`/`1` characters; blank lines are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            let row: Option<Vec<bool>> = line
                .chars()
                .map(|c| match c {
                    '0' => Some(false),
                    '1' => Some(true),
                    _ => None,
                })
                .collect();
            match row {
                Some(r) => rows.push(r),
                None => return bad_param("matrix rows must be 0/1 characters"),
            }
        }
        Self::new(rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.rows {
            s.extend(r.iter().map(|&b| if b { '1' } else { '0' }));
            s.push('\n');
        }
        s
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| i == j)
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        ZeroOneMatrix { rows: (0..rows).map(|i| (0..cols).map(|j| f(i, j)).collect()).collect(), cols }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i][j]
    }

    pub fn column(&self, j: usize) -> Vec<bool> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    /// No two distinct columns are equal.
    pub fn is_simple(&self) -> bool {
        let mut cols: Vec<Vec<bool>> = (0..self.cols).map(|j| self.column(j)).collect();
        cols.sort();
        cols.windows(2).all(|w| w[0] != w[1])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MatrixPattern {
    /// `a_ij = 1` iff `i = j`.
    Identity,
    /// `a_ij = 1` iff `i != j`.
    CoIdentity,
    /// `a_ij = 1` iff `i >= j`.
    Staircase,
}

impl MatrixPattern {
    pub const ALL: [MatrixPattern; 3] = [MatrixPattern::Identity, MatrixPattern::CoIdentity, MatrixPattern::Staircase];

    pub fn entry(self, i: usize, j: usize) -> bool {
        match self {
            MatrixPattern::Identity => i == j,
            MatrixPattern::CoIdentity => i != j,
            MatrixPattern::Staircase => i >= j,
        }
    }
}

/// Rows and columns of the original matrix, in pattern order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternMatch {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub pattern: MatrixPattern,
}

pub fn check_pattern(a: &ZeroOneMatrix, n: usize, m: &PatternMatch) -> bool {
    let distinct = |v: &[usize], bound: usize| {
        let mut s = v.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len() == v.len() && v.iter().all(|&x| x < bound)
    };
    m.rows.len() == n
        && m.cols.len() == n
        && distinct(&m.rows, a.rows())
        && distinct(&m.cols, a.cols())
        && (0..n).all(|i| (0..n).all(|j| a.get(m.rows[i], m.cols[j]) == m.pattern.entry(i, j)))
}

/// An `n x n` submatrix, after permuting rows and columns, equal to one
/// of the three patterns. Exhaustive over ordered row/column choices.
pub fn unavoidable_submatrix(a: &ZeroOneMatrix, n: usize, budget: &mut Budget) -> Result<Option<PatternMatch>> {
    if !a.is_simple() {
        return precondition("matrix must be simple");
    }
    if n == 0 {
        return Ok(Some(PatternMatch { rows: Vec::new(), cols: Vec::new(), pattern: MatrixPattern::Identity }));
    }
    for pattern in MatrixPattern::ALL {
        let mut rows = Vec::new();
        let mut cols = Vec::new();
        let mut used_r = vec![false; a.rows()];
        let mut used_c = vec![false; a.cols()];
        if extend(a, n, pattern, &mut rows, &mut cols, &mut used_r, &mut used_c, budget)? {
            return Ok(Some(PatternMatch { rows, cols, pattern }));
        }
    }
    Ok(None)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &ZeroOneMatrix,
    n: usize,
    p: MatrixPattern,
    rows: &mut Vec<usize>,
    cols: &mut Vec<usize>,
    used_r: &mut [bool],
    used_c: &mut [bool],
    budget: &mut Budget,
) -> Result<bool> {
    let k = rows.len();
    if k == n {
        return Ok(true);
    }
    for r in 0..a.rows() {
        if used_r[r] || (0..k).any(|j| a.get(r, cols[j]) != p.entry(k, j)) {
            continue;
        }
        for c in 0..a.cols() {
            budget.tick()?;
            if used_c[c] || a.get(r, c) != p.entry(k, k) || (0..k).any(|i| a.get(rows[i], c) != p.entry(i, k)) {
                continue;
            }
            rows.push(r);
            cols.push(c);
            used_r[r] = true;
            used_c[c] = true;
            if extend(a, n, p, rows, cols, used_r, used_c, budget)? {
                return Ok(true);
            }
            rows.pop();
            cols.pop();
            used_r[r] = false;
            used_c[c] = false;
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_is_found() {
        let a = ZeroOneMatrix::identity(4);
        let m = unavoidable_submatrix(&a, 4, &mut Budget::unlimited()).unwrap().unwrap();
        assert_eq!(m.pattern, MatrixPattern::Identity);
        assert!(check_pattern(&a, 4, &m));
    }

    #[test]
    fn lower_triangle_is_a_staircase() {
        let a = ZeroOneMatrix::from_fn(4, 4, |i, j| i >= j);
        let m = unavoidable_submatrix(&a, 4, &mut Budget::unlimited()).unwrap().unwrap();
        assert_eq!(m.pattern, MatrixPattern::Staircase);
        assert!(check_pattern(&a, 4, &m));
    }

    #[test]
    fn text_round_trip() {
        let a = ZeroOneMatrix::parse("101\n010\n").unwrap();
        assert_eq!(a.to_text(), "101\n010\n");
        assert!(ZeroOneMatrix::parse("12\n").is_err());
        assert!(!ZeroOneMatrix::parse("11\n00\n").unwrap().is_simple());
    }
}
