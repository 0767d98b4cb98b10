//! Sparse integer matrices: ranks over `Q` and `F_p`, and invariant factors.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// Row-major sparse matrix; each row is sorted by column, no zero entries.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    pub ncols: usize,
    pub rows: Vec<Vec<(u32, i64)>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn push_row(&mut self, mut row: Vec<(u32, i64)>) {
        row.retain(|&(_, v)| v != 0);
        row.sort_unstable_by_key(|&(c, _)| c);
        self.rows.push(row);
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        self.rows
            .iter()
            .map(|r| {
                let mut d = vec![BigInt::zero(); self.ncols];
                for &(c, v) in r {
                    d[c as usize] = BigInt::from(v);
                }
                d
            })
            .collect()
    }
}

/// Rank over `F_p`.
pub fn rank_mod_p(m: &SparseMatrix, p: u32) -> usize {
    let p = p as u64;
    let norm = |v: i64| -> u64 { v.rem_euclid(p as i64) as u64 };
    let inv = |a: u64| -> u64 { pow_mod(a, p - 2, p) };
    // pivots[c] = row with leading column c and leading coefficient 1.
    let mut pivots: Vec<Option<Vec<(u32, u64)>>> = vec![None; m.ncols];
    let mut rank = 0;
    for row in &m.rows {
        let mut cur: Vec<(u32, u64)> = row
            .iter()
            .map(|&(c, v)| (c, norm(v)))
            .filter(|&(_, v)| v != 0)
            .collect();
        while let Some(&(lead, a)) = cur.first() {
            match &pivots[lead as usize] {
                Some(piv) => {
                    cur = axpy_mod(&cur, a, piv, p);
                }
                None => {
                    let ia = inv(a);
                    let normalized = cur.iter().map(|&(c, v)| (c, v * ia % p)).collect();
                    pivots[lead as usize] = Some(normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// `x - a·y` modulo `p`, merging sorted sparse rows.
fn axpy_mod(x: &[(u32, u64)], a: u64, y: &[(u32, u64)], p: u64) -> Vec<(u32, u64)> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            let v = (p - a * y[j].1 % p) % p;
            if v != 0 {
                out.push((y[j].0, v));
            }
            j += 1;
        } else {
            let v = (x[i].1 + p - a * y[j].1 % p) % p;
            if v != 0 {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over `Q`, computed exactly by fraction-free elimination on integer
/// rows. Machine integers are tried first; on overflow the elimination is
/// redone with big integers.
pub fn rank_rational(m: &SparseMatrix) -> usize {
    match integer_rank::<i64>(m) {
        Some(r) => r,
        None => integer_rank::<BigInt>(m).expect("big integers do not overflow"),
    }
}

fn integer_rank<T>(m: &SparseMatrix) -> Option<usize>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub + From<i64>,
{
    let mut pivots: Vec<Option<Vec<(u32, T)>>> = vec![None; m.ncols];
    let mut rank = 0;
    for row in &m.rows {
        let mut cur: Vec<(u32, T)> = row.iter().map(|&(c, v)| (c, T::from(v))).collect();
        while let Some((lead, b)) = cur.first().cloned() {
            match &pivots[lead as usize] {
                Some(piv) => {
                    // cur := (a/g)·cur - (b/g)·piv where a is the pivot's lead.
                    let a = piv[0].1.clone();
                    let g = a.gcd(&b);
                    let (fa, fb) = (a / g.clone(), b / g);
                    cur = combine(&cur, &fa, piv, &fb)?;
                    cur = primitive(cur);
                }
                None => {
                    pivots[lead as usize] = Some(primitive(cur));
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// `fx·x - fy·y` on sorted sparse rows, `None` on overflow.
fn combine<T>(x: &[(u32, T)], fx: &T, y: &[(u32, T)], fy: &T) -> Option<Vec<(u32, T)>>
where
    T: Integer + Signed + Clone + CheckedMul + CheckedSub,
{
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, fx.checked_mul(&x[i].1)?));
            i += 1;
        } else if take_y {
            out.push((y[j].0, T::zero().checked_sub(&fy.checked_mul(&y[j].1)?)?));
            j += 1;
        } else {
            let v = fx.checked_mul(&x[i].1)?.checked_sub(&fy.checked_mul(&y[j].1)?)?;
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn primitive<T: Integer + Signed + Clone>(row: Vec<(u32, T)>) -> Vec<(u32, T)> {
    let g = row.iter().fold(T::zero(), |g, (_, v)| g.gcd(v));
    if g.is_zero() || g.is_one() {
        row
    } else {
        row.into_iter().map(|(c, v)| (c, v / g.clone())).collect()
    }
}

/// Nonzero diagonal entries of a diagonal form of `m` under unimodular row
/// and column operations. The cokernel of `m` is `Z^{ncols - len}` plus
/// `⊕ Z/d` over the returned `d`, so their count is the rank and the primes
/// dividing them are the torsion primes.
pub fn diagonal_form(m: &SparseMatrix) -> Vec<BigInt> {
    let mut out = Vec::new();
    // Unit pivots first: clearing a ±1 pivot's column by row operations and
    // then its row by column operations leaves the rest untouched.
    let mut rows: Vec<Vec<(u32, i64)>> = m.rows.clone();
    let mut overflow = false;
    loop {
        let found = rows.iter().enumerate().find_map(|(r, row)| {
            row.iter().find(|&&(_, v)| v == 1 || v == -1).map(|&(c, v)| (r, c, v))
        });
        let Some((r, c, v)) = found else { break };
        let pivot = rows.swap_remove(r);
        for row in rows.iter_mut() {
            if let Ok(pos) = row.binary_search_by_key(&c, |&(col, _)| col) {
                let b = row[pos].1;
                // row := row - (b / v)·pivot, exact since v = ±1.
                match combine::<i64>(row, &1, &pivot, &(b * v)) {
                    Some(new) => *row = new,
                    None => {
                        overflow = true;
                        break;
                    }
                }
            }
        }
        if overflow {
            break;
        }
        out.push(BigInt::one());
        rows.retain(|r| !r.is_empty());
    }
    if overflow {
        return dense_diagonal(m.to_dense());
    }
    let rest = SparseMatrix { ncols: m.ncols, rows };
    out.extend(dense_diagonal(rest.to_dense()));
    out
}

fn dense_diagonal(mut a: Vec<Vec<BigInt>>) -> Vec<BigInt> {
    let mut out = Vec::new();
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut t = 0;
    while t < nrows.min(ncols) {
        // Smallest nonzero entry of the remaining block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..nrows {
            for j in t..ncols {
                if !a[i][j].is_zero() && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..nrows {
            if !a[i][t].is_zero() {
                let q = a[i][t].div_floor(&a[t][t]);
                for j in t..ncols {
                    let d = &q * &a[t][j];
                    a[i][j] -= d;
                }
                if !a[i][t].is_zero() {
                    clean = false;
                }
            }
        }
        for j in t + 1..ncols {
            if !a[t][j].is_zero() {
                let q = a[t][j].div_floor(&a[t][t]);
                for i in t..nrows {
                    let d = &q * &a[i][t];
                    a[i][j] -= d;
                }
                if !a[t][j].is_zero() {
                    clean = false;
                }
            }
        }
        // Remainders are smaller than the pivot; repeat until row and column
        // t are clear.
        if clean {
            out.push(a[t][t].abs());
            t += 1;
        }
    }
    out
}

/// Prime factors of a (small) positive integer, ascending, without repeats.
pub fn prime_factors(d: &BigInt) -> Vec<u64> {
    let mut n = d.abs().to_u64().expect("torsion coefficients fit in u64");
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}
