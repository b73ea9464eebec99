use alloc::vec::Vec;

use crate::error::{bad_param, invalid, precondition, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterleaveCertificate {
    /// `x1 < y1 < x2 < y2 < ... < xn < yn`.
    Interleave { xs: Vec<i64>, ys: Vec<i64> },
    /// `m` values of `X`, increasing, with no `Y` value in `[first, last]`.
    Gap { xs: Vec<i64> },
}

/// Either `n` interleaved pairs or `m` values of `X` spanning no value of
/// `Y`. `X` and `Y` are strictly increasing. Needs `n, m >= 1` and
/// `|X| >= n(m + 1)`.
///
/// The interleaving is grown greedily, which yields the lexicographically
/// least one of maximum size; when it stops short the gap is read off the
/// sorted `X`.
pub fn interleave_or_gap(x: &[i64], y: &[i64], n: usize, m: usize) -> Result<InterleaveCertificate> {
    if n == 0 || m == 0 {
        return bad_param("n and m must be at least one");
    }
    if !increasing(x) || !increasing(y) {
        return bad_param("X and Y must be strictly increasing");
    }
    if x.len() < n * (m + 1) {
        return precondition("|X| must be at least n(m + 1)");
    }
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    let first_above = |s: &[i64], v: i64| s.get(s.partition_point(|&w| w <= v)).copied();
    let mut floor = i64::MIN;
    while xs.len() < n {
        let Some(a) = x.get(x.partition_point(|&w| w < floor)).copied() else { break };
        let Some(b) = first_above(y, a) else { break };
        xs.push(a);
        ys.push(b);
        floor = b.saturating_add(1);
    }
    if xs.len() == n {
        return Ok(InterleaveCertificate::Interleave { xs, ys });
    }
    for w in x.windows(m) {
        let k = y.partition_point(|&v| v < w[0]);
        if y.get(k).is_none_or(|&v| v > w[m - 1]) {
            return Ok(InterleaveCertificate::Gap { xs: w.to_vec() });
        }
    }
    invalid("neither an interleaving nor a gap was found")
}

fn increasing(s: &[i64]) -> bool {
    s.windows(2).all(|w| w[0] < w[1])
}

/// Independent check of a certificate against the sets.
pub fn check_interleave_certificate(
    x: &[i64],
    y: &[i64],
    n: usize,
    m: usize,
    cert: &InterleaveCertificate,
) -> bool {
    match cert {
        InterleaveCertificate::Interleave { xs, ys } => {
            if xs.len() != n || ys.len() != n || !xs.iter().all(|v| x.contains(v)) || !ys.iter().all(|v| y.contains(v)) {
                return false;
            }
            let seq: Vec<i64> = xs.iter().zip(ys).flat_map(|(&a, &b)| [a, b]).collect();
            seq.windows(2).all(|w| w[0] < w[1])
        }
        InterleaveCertificate::Gap { xs } => {
            xs.len() == m
                && xs.iter().all(|v| x.contains(v))
                && xs.windows(2).all(|w| w[0] < w[1])
                && !y.iter().any(|&v| v >= xs[0] && v <= xs[m - 1])
        }
    }
}
