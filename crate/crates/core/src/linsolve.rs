//! Exact sparse Gaussian elimination over ℚ.
//!
//! Rows are sparse vectors sorted by column. Pivoting is purely structural:
//! a row's pivot is its first nonzero column, so the resulting reduced row
//! echelon form is unique and independent of the order rows are inserted.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// Sparse vector as `(column, value)` pairs, strictly increasing columns,
/// no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Sorts by column, merges duplicates and drops zeros.
pub fn normalize(mut v: SparseVec) -> SparseVec {
    v.sort_by_key(|(c, _)| *c);
    let mut out: SparseVec = Vec::with_capacity(v.len());
    for (c, x) in v {
        match out.last_mut() {
            Some((lc, lx)) if *lc == c => *lx += x,
            _ => out.push((c, x)),
        }
    }
    out.retain(|(_, x)| !x.is_zero());
    out
}

pub fn to_dense(v: &[(usize, Rational)], len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (c, x) in v {
        out[*c] = x.clone();
    }
    out
}

pub fn from_dense(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(c, x)| (c, x.clone()))
        .collect()
}

/// `Σ row[c]·v[c]`.
pub fn dot(row: &[(usize, Rational)], v: &[(usize, Rational)]) -> Rational {
    let (mut i, mut j) = (0, 0);
    let mut acc = Rational::zero();
    while i < row.len() && j < v.len() {
        match row[i].0.cmp(&v[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                acc += &row[i].1 * &v[j].1;
                i += 1;
                j += 1;
            }
        }
    }
    acc
}

/// Integer row, same layout as [`SparseVec`].
type IntVec = Vec<(usize, BigInt)>;

/// `ka·a + kb·b`, dropping cancelled entries.
fn combine(ka: &BigInt, a: &[(usize, BigInt)], kb: &BigInt, b: &[(usize, BigInt)]) -> IntVec {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push((ca, ka * &a[i].1));
            i += 1;
        } else if cb < ca {
            out.push((cb, kb * &b[j].1));
            j += 1;
        } else {
            let x = ka * &a[i].1 + kb * &b[j].1;
            if !x.is_zero() {
                out.push((ca, x));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Divides out the content and makes the leading entry positive.
fn primitive(mut v: IntVec) -> IntVec {
    let Some(first) = v.first() else { return v };
    let mut g = first.1.abs();
    for (_, x) in &v[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(x);
    }
    if v[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, x) in v.iter_mut() {
            *x /= &g;
        }
    }
    v
}

/// Clears denominators of a rational row.
fn to_integer(v: SparseVec) -> IntVec {
    let lcm = v.iter().fold(BigInt::one(), |acc, (_, x)| acc.lcm(x.denom()));
    v.into_iter()
        .map(|(c, x)| (c, x.numer() * (&lcm / x.denom())))
        .collect()
}

/// Incremental reduced echelon form. Rows are stored fraction-free as
/// primitive integer vectors with a positive pivot at their first entry,
/// and no stored row has an entry in another row's pivot column.
/// Keeping the form fully reduced after each insertion bounds intermediate
/// growth by the size of the canonical form itself.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    ncols: usize,
    rows: BTreeMap<usize, IntVec>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: BTreeMap::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.keys().copied()
    }

    fn reduce_int(&self, v: IntVec) -> IntVec {
        // stored rows carry no other pivot columns, so one pass suffices
        let mut rest = Vec::with_capacity(v.len());
        let mut hits = Vec::new();
        for (c, x) in v {
            match self.rows.get(&c) {
                Some(row) => hits.push((row, x)),
                None => rest.push((c, x)),
            }
        }
        if hits.is_empty() {
            return rest;
        }
        let lcm = hits.iter().fold(BigInt::one(), |acc, (row, _)| acc.lcm(&row[0].1));
        let mut out: IntVec = rest.into_iter().map(|(c, x)| (c, x * &lcm)).collect();
        let one = BigInt::one();
        for (row, x) in hits {
            let k = -(x * (&lcm / &row[0].1));
            out = combine(&one, &out, &k, &row[1..]);
        }
        primitive(out)
    }

    /// Eliminates every pivot column from `v`. The result is zero iff `v`
    /// lies in the row span; otherwise it is a nonzero multiple of the
    /// residual.
    pub fn reduce(&self, v: SparseVec) -> SparseVec {
        self.reduce_int(to_integer(v))
            .into_iter()
            .map(|(c, x)| (c, Rational::from_big(x, BigInt::one())))
            .collect()
    }

    /// Adds `v` to the row space. Returns `true` if the rank grew.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = primitive(self.reduce_int(to_integer(v)));
        if r.is_empty() {
            return false;
        }
        let (p, a) = (r[0].0, r[0].1.clone());
        for row in self.rows.values_mut() {
            if let Ok(k) = row.binary_search_by_key(&p, |e| e.0) {
                let b = -row[k].1.clone();
                *row = primitive(combine(&a, row, &b, &r));
            }
        }
        self.rows.insert(p, r);
        true
    }

    pub fn contains(&self, v: SparseVec) -> bool {
        self.reduce_int(to_integer(v)).is_empty()
    }

    /// The reduced row echelon basis with monic pivots, ordered by pivot column.
    pub fn into_rref(self) -> Vec<SparseVec> {
        self.rows
            .into_values()
            .map(|row| {
                let lead = row[0].1.clone();
                row.into_iter()
                    .map(|(c, x)| (c, Rational::from_big(x, lead.clone())))
                    .collect()
            })
            .collect()
    }
}

/// Echelon form of the span of `rows`. The result does not depend on the
/// insertion order, but the cost does: feeding rows with late leading
/// columns first keeps intermediate fill-in small on banded systems.
pub fn echelon_of(rows: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Echelon {
    let mut rows: Vec<SparseVec> = rows.into_iter().filter(|r| !r.is_empty()).collect();
    rows.sort_by_key(|r| (std::cmp::Reverse(r[0].0), r.len()));
    let mut ech = Echelon::new(ncols);
    for r in rows {
        ech.insert(r);
    }
    ech
}

/// Kernel of a sparse matrix with `ncols` columns.
pub fn kernel(rows: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let rref = echelon_of(rows.iter().cloned(), ncols).into_rref();
    kernel_from_rref(&rref, ncols)
}

/// Free-variable kernel basis read off an RREF, then brought to its own
/// canonical RREF.
pub fn kernel_from_rref(rref: &[SparseVec], ncols: usize) -> Vec<SparseVec> {
    let mut is_pivot = vec![false; ncols];
    for r in rref {
        is_pivot[r[0].0] = true;
    }
    let mut free: BTreeMap<usize, SparseVec> = (0..ncols)
        .filter(|c| !is_pivot[*c])
        .map(|c| (c, vec![(c, Rational::one())]))
        .collect();
    for r in rref {
        let p = r[0].0;
        for (c, x) in &r[1..] {
            free.get_mut(c).expect("non-pivot entry lies in a free column").push((p, -x));
        }
    }
    canonical_basis(free.into_values().map(normalize), ncols)
}

/// RREF of the span of `vectors`.
pub fn canonical_basis(vectors: impl IntoIterator<Item = SparseVec>, ncols: usize) -> Vec<SparseVec> {
    echelon_of(vectors, ncols).into_rref()
}

pub fn rank(rows: &[SparseVec], ncols: usize) -> usize {
    echelon_of(rows.iter().cloned(), ncols).rank()
}
