//! Linear codes over GF(q): canonical RREF form, duality, minimum distance
//! (exhaustive, Brouwer–Zimmermann information-set ascent, sampled upper
//! bounds), the Griesmer bound, and the bit-exact matrix file format.
//!
//! Enumeration partitions the message space into disjoint ranges; with the
//! `parallel` feature those ranges run on rayon workers and the minima are
//! merged, so results are independent of scheduling.

use std::io::{BufRead, Write};
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::linalg::Mat;

/// A linear code stored by its canonical reduced-row-echelon generator matrix.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Field,
    length: usize,
    gen: Mat,
    pivots: Vec<usize>,
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.length == other.length && self.gen.a == other.gen.a
    }
}
impl Eq for LinearCode {}

impl LinearCode {
    pub fn from_rows(field: Field, length: usize, rows: Vec<Vec<FieldElement>>) -> LinearCode {
        let m = Mat::from_rows(field.clone(), length, rows);
        let (gen, pivots) = m.rref_compact();
        LinearCode {
            field,
            length,
            gen,
            pivots,
        }
    }

    pub fn zero(field: Field, length: usize) -> LinearCode {
        LinearCode::from_rows(field, length, Vec::new())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dim(&self) -> usize {
        self.gen.rows
    }

    /// Canonical RREF generator matrix.
    pub fn generator(&self) -> &Mat {
        &self.gen
    }

    pub fn contains(&self, word: &[FieldElement]) -> bool {
        if word.len() != self.length {
            return false;
        }
        let f = &self.field;
        let mut w = word.to_vec();
        for (r, &p) in self.pivots.iter().enumerate() {
            let c = w[p];
            if c.is_zero() {
                continue;
            }
            for j in 0..self.length {
                w[j] = f.sub(w[j], f.mul(c, self.gen.at(r, j)));
            }
        }
        w.iter().all(|c| c.is_zero())
    }

    pub fn contains_code(&self, other: &LinearCode) -> bool {
        (0..other.dim()).all(|i| self.contains(other.gen.row(i)))
    }

    /// The Euclidean dual: kernel of the generator matrix.
    pub fn dual(&self) -> LinearCode {
        if self.dim() == 0 {
            // dual of the zero code is the full space
            let mut rows = Vec::with_capacity(self.length);
            for i in 0..self.length {
                let mut r = vec![FieldElement::ZERO; self.length];
                r[i] = FieldElement::ONE;
                rows.push(r);
            }
            return LinearCode::from_rows(self.field.clone(), self.length, rows);
        }
        let k = self.gen.kernel();
        LinearCode {
            field: self.field.clone(),
            length: self.length,
            pivots: {
                let mut m = k.clone();
                m.rref()
            },
            gen: k,
        }
    }

    pub fn is_self_dual(&self) -> bool {
        *self == self.dual()
    }

    /// Sum of two codes (as subspaces of the same ambient space).
    pub fn sum(&self, other: &LinearCode) -> LinearCode {
        assert_eq!(self.length, other.length);
        let mut rows = self.gen.row_vecs();
        rows.extend(other.gen.row_vecs());
        LinearCode::from_rows(self.field.clone(), self.length, rows)
    }

    pub fn min_distance(&self, opts: &DistanceOptions) -> Result<DistanceReport> {
        min_distance(self, opts)
    }

    /// Write the bit-exact matrix file: header "N k q", then k rows of N
    /// whitespace-separated field literals (canonical RREF).
    pub fn write_matrix<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "{} {} {}", self.length, self.dim(), self.field.q())?;
        for i in 0..self.dim() {
            let row: Vec<String> = self
                .gen
                .row(i)
                .iter()
                .map(|&c| self.field.fmt_element(c))
                .collect();
            writeln!(w, "{}", row.join(" "))?;
        }
        Ok(())
    }

    pub fn read_matrix<R: BufRead>(r: R) -> Result<(LinearCode, Field)> {
        let mut lines = r.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::BadMatrixFile("empty file".into()))??;
        let parts: Vec<&str> = header.split_whitespace().collect();
        if parts.len() != 3 {
            return Err(Error::BadMatrixFile(format!("bad header {:?}", header)));
        }
        let n: usize = parts[0]
            .parse()
            .map_err(|_| Error::BadMatrixFile("bad length".into()))?;
        let k: usize = parts[1]
            .parse()
            .map_err(|_| Error::BadMatrixFile("bad dimension".into()))?;
        let field = Field::parse_spec(parts[2])?;
        let mut rows = Vec::with_capacity(k);
        for _ in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::BadMatrixFile("missing rows".into()))??;
            let row: Result<Vec<FieldElement>> = line
                .split_whitespace()
                .map(|t| field.parse_element(t))
                .collect();
            let row = row?;
            if row.len() != n {
                return Err(Error::BadMatrixFile(format!(
                    "row has {} entries, expected {}",
                    row.len(),
                    n
                )));
            }
            rows.push(row);
        }
        Ok((LinearCode::from_rows(field.clone(), n, rows), field))
    }
}

/// Largest d admitted by the Griesmer bound for an [n, k] code over GF(q).
pub fn griesmer_max_d(n: usize, k: usize, q: u64) -> usize {
    assert!(k >= 1);
    let fits = |d: usize| -> bool {
        let mut total = 0usize;
        let mut denom = 1u64;
        for _ in 0..k {
            total += d.div_ceil(denom as usize);
            if total > n {
                return false;
            }
            denom = denom.saturating_mul(q);
        }
        total <= n
    };
    let mut d = 1;
    while fits(d + 1) {
        d += 1;
    }
    d
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Auto,
    Exhaustive,
    InformationSet,
    UpperSample,
}

impl Strategy {
    pub fn parse(s: &str) -> Result<Strategy> {
        match s {
            "auto" => Ok(Strategy::Auto),
            "exhaustive" => Ok(Strategy::Exhaustive),
            "information-set" | "information_set" => Ok(Strategy::InformationSet),
            "upper-sample" | "upper_sample" => Ok(Strategy::UpperSample),
            _ => Err(Error::Config(format!("unknown method {:?}", s))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DistanceOptions {
    pub strategy: Strategy,
    /// 1 = sequential; 0 = all cores (with the parallel feature).
    pub threads: usize,
    pub seed: u64,
    pub budget: Option<Duration>,
    /// Sample count for the upper-bound strategy.
    pub samples: usize,
}

impl Default for DistanceOptions {
    fn default() -> Self {
        DistanceOptions {
            strategy: Strategy::Auto,
            threads: 1,
            seed: 0,
            budget: None,
            samples: 10_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceReport {
    pub lower: usize,
    pub upper: usize,
    pub exact: bool,
    pub method: &'static str,
    pub seed: u64,
}

impl DistanceReport {
    pub fn distance(&self) -> Option<usize> {
        self.exact.then_some(self.upper)
    }
}

/// Exhaustive enumeration is allowed while q^k stays under this bound.
pub const EXHAUSTIVE_LIMIT_LOG2: f64 = 24.0;

fn min_distance(code: &LinearCode, opts: &DistanceOptions) -> Result<DistanceReport> {
    if code.dim() == 0 {
        return Err(Error::ZeroCode);
    }
    let qk_log2 = code.dim() as f64 * (code.field.q() as f64).log2();
    let strategy = match opts.strategy {
        Strategy::Auto => {
            if qk_log2 <= EXHAUSTIVE_LIMIT_LOG2 {
                Strategy::Exhaustive
            } else {
                Strategy::InformationSet
            }
        }
        s => s,
    };
    match strategy {
        Strategy::Exhaustive => {
            let d = if code.field.q() == 2 {
                exhaustive_gf2(code, opts.threads)
            } else {
                exhaustive_general(code, opts.threads)
            };
            Ok(DistanceReport {
                lower: d,
                upper: d,
                exact: true,
                method: "exhaustive",
                seed: opts.seed,
            })
        }
        Strategy::InformationSet => Ok(information_set_distance(code, opts)),
        Strategy::UpperSample => {
            let d = upper_sample(code, opts.samples, opts.seed);
            Ok(DistanceReport {
                lower: 1,
                upper: d,
                exact: false,
                method: "upper-sample",
                seed: opts.seed,
            })
        }
        Strategy::Auto => unreachable!(),
    }
}

/// Pack generator rows into u64 words, one row per Vec.
fn pack_rows_gf2(code: &LinearCode) -> Vec<Vec<u64>> {
    let words = code.length.div_ceil(64);
    (0..code.dim())
        .map(|i| {
            let mut row = vec![0u64; words];
            for (j, &c) in code.gen.row(i).iter().enumerate() {
                if !c.is_zero() {
                    row[j / 64] |= 1 << (j % 64);
                }
            }
            row
        })
        .collect()
}

fn weight(word: &[u64]) -> usize {
    word.iter().map(|w| w.count_ones() as usize).sum()
}

/// Gray-code walk over a message subrange [start, end); each step flips one row.
fn gf2_range_min(rows: &[Vec<u64>], start: u64, end: u64) -> usize {
    let words = rows[0].len();
    let mut acc = vec![0u64; words];
    // start from gray(start)
    let g0 = start ^ (start >> 1);
    for (r, row) in rows.iter().enumerate() {
        if g0 >> r & 1 == 1 {
            for (a, b) in acc.iter_mut().zip(row) {
                *a ^= b;
            }
        }
    }
    let mut best = if g0 == 0 { usize::MAX } else { weight(&acc) };
    let mut m = start;
    while m + 1 < end {
        m += 1;
        let flip = m.trailing_zeros() as usize;
        for (a, b) in acc.iter_mut().zip(&rows[flip]) {
            *a ^= b;
        }
        let w = weight(&acc);
        if w < best && w > 0 {
            best = w;
        }
    }
    best
}

fn exhaustive_gf2(code: &LinearCode, threads: usize) -> usize {
    let rows = pack_rows_gf2(code);
    let total = 1u64 << code.dim();
    #[cfg(feature = "parallel")]
    if threads != 1 {
        let chunks = choose_chunks(threads, total);
        let step = total.div_ceil(chunks);
        let best = pool(threads).install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let s = c * step;
                    let e = ((c + 1) * step).min(total);
                    if s >= e {
                        usize::MAX
                    } else {
                        gf2_range_min(&rows, s, e)
                    }
                })
                .min()
                .unwrap_or(usize::MAX)
        });
        return best;
    }
    let _ = threads;
    gf2_range_min(&rows, 0, total)
}

/// Odometer walk for general q over a message subrange.
fn general_range_min(
    field: &Field,
    scaled_rows: &[Vec<Vec<FieldElement>>], // [row][scalar] -> scaled row
    start: u64,
    end: u64,
) -> usize {
    let q = field.q();
    let k = scaled_rows.len();
    let n = scaled_rows[0][0].len();
    let decode = |mut m: u64| -> Vec<usize> {
        let mut digits = vec![0usize; k];
        for d in digits.iter_mut() {
            *d = (m % q) as usize;
            m /= q;
        }
        digits
    };
    let mut digits = decode(start);
    let mut acc = vec![FieldElement::ZERO; n];
    for (r, &d) in digits.iter().enumerate() {
        if d != 0 {
            for (a, b) in acc.iter_mut().zip(&scaled_rows[r][d]) {
                *a = field.add(*a, *b);
            }
        }
    }
    let mut best = if start == 0 {
        usize::MAX
    } else {
        acc.iter().filter(|c| !c.is_zero()).count()
    };
    let mut m = start;
    while m + 1 < end {
        m += 1;
        // increment the odometer: subtract old digit row, add new digit row
        let mut r = 0;
        loop {
            let old = digits[r];
            let new = (old + 1) % q as usize;
            digits[r] = new;
            // delta = row*new - row*old
            for j in 0..n {
                let v = field.sub(scaled_rows[r][new][j], scaled_rows[r][old][j]);
                acc[j] = field.add(acc[j], v);
            }
            if new != 0 {
                break;
            }
            r += 1;
        }
        let w = acc.iter().filter(|c| !c.is_zero()).count();
        if w < best && w > 0 {
            best = w;
        }
    }
    best
}

fn exhaustive_general(code: &LinearCode, threads: usize) -> usize {
    let f = &code.field;
    let q = f.q();
    let k = code.dim();
    let scaled: Vec<Vec<Vec<FieldElement>>> = (0..k)
        .map(|i| {
            (0..q)
                .map(|s| {
                    let s = FieldElement(s as u32);
                    code.gen.row(i).iter().map(|&c| f.mul(s, c)).collect()
                })
                .collect()
        })
        .collect();
    let total = q.pow(k as u32);
    #[cfg(feature = "parallel")]
    if threads != 1 {
        let chunks = choose_chunks(threads, total);
        let step = total.div_ceil(chunks);
        let best = pool(threads).install(|| {
            (0..chunks)
                .into_par_iter()
                .map(|c| {
                    let s = c * step;
                    let e = ((c + 1) * step).min(total);
                    if s >= e {
                        usize::MAX
                    } else {
                        general_range_min(f, &scaled, s, e)
                    }
                })
                .min()
                .unwrap_or(usize::MAX)
        });
        return best;
    }
    let _ = threads;
    general_range_min(f, &scaled, 0, total)
}

#[cfg(feature = "parallel")]
fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(if threads == 0 { 0 } else { threads })
        .build()
        .expect("rayon pool")
}

#[cfg(feature = "parallel")]
fn choose_chunks(threads: usize, total: u64) -> u64 {
    let t = if threads == 0 {
        std::thread::available_parallelism().map(|n| n.get()).unwrap_or(4)
    } else {
        threads
    } as u64;
    (t * 8).min(total).max(1)
}

fn upper_sample(code: &LinearCode, samples: usize, seed: u64) -> usize {
    let f = &code.field;
    let q = f.q();
    let k = code.dim();
    let n = code.length;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = usize::MAX;
    for _ in 0..samples {
        let mut acc = vec![FieldElement::ZERO; n];
        let mut nonzero = false;
        for i in 0..k {
            let c = FieldElement(rng.gen_range(0..q) as u32);
            if c.is_zero() {
                continue;
            }
            nonzero = true;
            for (a, &g) in acc.iter_mut().zip(code.gen.row(i)) {
                *a = f.add(*a, f.mul(c, g));
            }
        }
        if !nonzero {
            continue;
        }
        let w = acc.iter().filter(|c| !c.is_zero()).count();
        if w > 0 && w < best {
            best = w;
        }
    }
    best
}

/// Generator matrices systematic on pairwise-disjoint column sets, plus the
/// rank achieved on each set (the last set may be rank-deficient).
struct InformationSets {
    /// (rows of the systematic generator, rank on this set)
    sets: Vec<(Vec<Vec<FieldElement>>, usize)>,
}

fn disjoint_information_sets(code: &LinearCode, seed: u64) -> InformationSets {
    let f = &code.field;
    let n = code.length;
    let k = code.dim();
    let mut used = vec![false; n];
    let mut sets = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut round = 0;
    loop {
        let mut cols: Vec<usize> = (0..n).filter(|&j| !used[j]).collect();
        if cols.is_empty() || sets.len() > n / k + 2 {
            break;
        }
        if round > 0 {
            // recorded-seed shuffle of the candidate column order
            for i in (1..cols.len()).rev() {
                let j = rng.gen_range(0..=i);
                cols.swap(i, j);
            }
        }
        // RREF prioritizing the chosen columns
        let order: Vec<usize> = cols
            .iter()
            .copied()
            .chain((0..n).filter(|&j| used[j]))
            .collect();
        let mut m = Mat::zeros(f.clone(), k, n);
        for i in 0..k {
            for (pos, &j) in order.iter().enumerate() {
                m.set(i, pos, code.gen.at(i, j));
            }
        }
        let pivots = m.rref();
        // pivots within the fresh columns
        let fresh_limit = cols.len();
        let fresh_pivots: Vec<usize> = pivots.iter().copied().filter(|&p| p < fresh_limit).collect();
        let rank = fresh_pivots.len();
        if rank == 0 {
            break;
        }
        // un-permute the matrix columns
        let mut rows = vec![vec![FieldElement::ZERO; n]; k];
        for (i, row) in rows.iter_mut().enumerate() {
            for (pos, &j) in order.iter().enumerate() {
                row[j] = m.at(i, pos);
            }
        }
        for &p in &fresh_pivots {
            used[order[p]] = true;
        }
        sets.push((rows, rank));
        if rank < k {
            break;
        }
        round += 1;
    }
    InformationSets { sets }
}

/// Exact minimum distance by the Brouwer–Zimmermann ascent. When a budget is
/// given and exceeded, returns the proven lower bound and best upper bound so
/// far with `exact = false`.
///
/// After all messages of weight <= w are enumerated on every disjoint set, any
/// remaining codeword weighs at least (w+1) - (k - rank) on each set, so the
/// sum of those terms is a valid lower bound; it is exact once it meets the
/// best weight found.
fn information_set_distance(code: &LinearCode, opts: &DistanceOptions) -> DistanceReport {
    let f = &code.field;
    let k = code.dim();
    let start = Instant::now();
    let info = disjoint_information_sets(code, opts.seed);
    let mut best = usize::MAX;
    // any generator row is a codeword
    for i in 0..k {
        let w = code.gen.row(i).iter().filter(|c| !c.is_zero()).count();
        best = best.min(w);
    }
    let mut lower = 1usize;
    let mut out_of_budget = false;
    'ascent: for w in 1..=k {
        for (rows, _) in &info.sets {
            let m = enumerate_weight_min(f, rows, w, opts.threads);
            best = best.min(m);
            if let Some(budget) = opts.budget {
                if start.elapsed() > budget {
                    out_of_budget = true;
                    break 'ascent;
                }
            }
        }
        // proven lower bound after completing weight w on every set
        let mut bound = 0usize;
        for (_, rank) in &info.sets {
            bound += (w + 1).saturating_sub(k - rank);
        }
        lower = bound.max(1);
        if lower >= best {
            return DistanceReport {
                lower: best,
                upper: best,
                exact: true,
                method: "information-set",
                seed: opts.seed,
            };
        }
    }
    if out_of_budget {
        return DistanceReport {
            lower,
            upper: best,
            exact: false,
            method: "information-set (budget reached)",
            seed: opts.seed,
        };
    }
    // enumerated every message weight: best is exact
    DistanceReport {
        lower: best,
        upper: best,
        exact: true,
        method: "information-set",
        seed: opts.seed,
    }
}

/// Minimum codeword weight over messages of exact Hamming weight w on the given
/// systematic generator rows. The first nonzero scalar is fixed to 1 (scaling
/// leaves weights unchanged).
fn enumerate_weight_min(
    f: &Field,
    rows: &[Vec<FieldElement>],
    w: usize,
    threads: usize,
) -> usize {
    let k = rows.len();
    if w > k {
        return usize::MAX;
    }
    if f.q() == 2 {
        let words = rows[0].len().div_ceil(64);
        let packed: Vec<Vec<u64>> = rows
            .iter()
            .map(|r| {
                let mut p = vec![0u64; words];
                for (j, c) in r.iter().enumerate() {
                    if !c.is_zero() {
                        p[j / 64] |= 1 << (j % 64);
                    }
                }
                p
            })
            .collect();
        #[cfg(feature = "parallel")]
        if threads != 1 && k > w {
            let firsts: Vec<usize> = (0..=(k - w)).collect();
            return pool(threads).install(|| {
                firsts
                    .into_par_iter()
                    .map(|first| {
                        let mut acc = packed[first].clone();
                        let mut best = usize::MAX;
                        walk_gf2(&packed, w - 1, first + 1, &mut acc, &mut best);
                        best
                    })
                    .min()
                    .unwrap_or(usize::MAX)
            });
        }
        let mut best = usize::MAX;
        for first in 0..=(k - w) {
            let mut acc = packed[first].clone();
            walk_gf2(&packed, w - 1, first + 1, &mut acc, &mut best);
        }
        return best;
    }
    #[cfg(feature = "parallel")]
    if threads != 1 && k > w {
        let firsts: Vec<usize> = (0..=(k - w)).collect();
        return pool(threads).install(|| {
            firsts
                .into_par_iter()
                .map(|first| weight_walk_from(f, rows, w, first))
                .min()
                .unwrap_or(usize::MAX)
        });
    }
    let _ = threads;
    (0..=(k - w))
        .map(|first| weight_walk_from(f, rows, w, first))
        .min()
        .unwrap_or(usize::MAX)
}

/// Bit-packed combination walk over GF(2): XOR a row in, recurse, XOR it out.
fn walk_gf2(rows: &[Vec<u64>], remaining: usize, from: usize, acc: &mut [u64], best: &mut usize) {
    if remaining == 0 {
        let w = weight(acc);
        if w > 0 && w < *best {
            *best = w;
        }
        return;
    }
    let k = rows.len();
    for i in from..=(k - remaining) {
        for (a, b) in acc.iter_mut().zip(&rows[i]) {
            *a ^= b;
        }
        walk_gf2(rows, remaining - 1, i + 1, acc, best);
        for (a, b) in acc.iter_mut().zip(&rows[i]) {
            *a ^= b;
        }
    }
}

/// Recursive walk over combinations whose smallest index is `first`.
fn weight_walk_from(f: &Field, rows: &[Vec<FieldElement>], w: usize, first: usize) -> usize {
    let n = rows[0].len();
    let mut acc = rows[first].clone();
    let mut best = usize::MAX;
    walk(f, rows, w - 1, first + 1, &mut acc, &mut best, n);
    best
}

fn walk(
    f: &Field,
    rows: &[Vec<FieldElement>],
    remaining: usize,
    from: usize,
    acc: &mut Vec<FieldElement>,
    best: &mut usize,
    n: usize,
) {
    if remaining == 0 {
        let w = acc.iter().filter(|c| !c.is_zero()).count();
        if w > 0 && w < *best {
            *best = w;
        }
        return;
    }
    let k = rows.len();
    let q = f.q();
    for i in from..=(k - remaining) {
        for s in 1..q {
            let s = FieldElement(s as u32);
            for j in 0..n {
                acc[j] = f.add(acc[j], f.mul(s, rows[i][j]));
            }
            walk(f, rows, remaining - 1, i + 1, acc, best, n);
            for j in 0..n {
                acc[j] = f.sub(acc[j], f.mul(s, rows[i][j]));
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> Field {
        Field::prime(2).unwrap()
    }

    fn rows_from_strs(f: &Field, strs: &[&str]) -> Vec<Vec<FieldElement>> {
        strs.iter()
            .map(|s| {
                s.chars()
                    .map(|c| f.element(c.to_digit(10).unwrap() as u64).unwrap())
                    .collect()
            })
            .collect()
    }

    #[test]
    fn rref_canonicalization() {
        let f = gf2();
        let c1 = LinearCode::from_rows(f.clone(), 4, rows_from_strs(&f, &["1100", "0110"]));
        let dup = LinearCode::from_rows(
            f.clone(),
            4,
            rows_from_strs(&f, &["1100", "1100", "0110", "1010"]),
        );
        assert_eq!(c1, dup);
        let zero = LinearCode::from_rows(f.clone(), 4, rows_from_strs(&f, &["0000"]));
        assert_eq!(zero.dim(), 0);
    }

    #[test]
    fn dual_cases() {
        let f = gf2();
        // full space -> zero code
        let full = LinearCode::from_rows(f.clone(), 3, rows_from_strs(&f, &["100", "010", "001"]));
        assert_eq!(full.dual().dim(), 0);
        // F3, span{(1,1)} -> span{(1,2)}
        let f3 = Field::prime(3).unwrap();
        let c = LinearCode::from_rows(
            f3.clone(),
            2,
            vec![vec![FieldElement(1), FieldElement(1)]],
        );
        let d = c.dual();
        assert_eq!(d.dim(), 1);
        assert!(d.contains(&[FieldElement(1), FieldElement(2)]));
        assert!(!c.is_self_dual());
        // dim + dual dim = N
        assert_eq!(c.dim() + d.dim(), 2);
    }

    #[test]
    fn dual_of_dual_small_random() {
        let fields = [Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::prime(5).unwrap()];
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for f in &fields {
            for _ in 0..40 {
                let n = rng.gen_range(2..=12);
                let k = rng.gen_range(1..=n.min(6));
                let rows: Vec<Vec<FieldElement>> = (0..k)
                    .map(|_| {
                        (0..n)
                            .map(|_| FieldElement(rng.gen_range(0..f.q()) as u32))
                            .collect()
                    })
                    .collect();
                let c = LinearCode::from_rows(f.clone(), n, rows);
                assert_eq!(c.dual().dual(), c);
                assert_eq!(c.dim() + c.dual().dim(), n);
            }
        }
    }

    #[test]
    fn repetition_distance() {
        let f = gf2();
        let c = LinearCode::from_rows(f.clone(), 5, rows_from_strs(&f, &["11111"]));
        let r = c.min_distance(&DistanceOptions::default()).unwrap();
        assert_eq!(r.distance(), Some(5));
    }

    #[test]
    fn zero_code_distance_errors() {
        let f = gf2();
        let c = LinearCode::zero(f, 4);
        assert!(c.min_distance(&DistanceOptions::default()).is_err());
    }

    #[test]
    fn information_set_matches_exhaustive_random() {
        let fields = [Field::prime(2).unwrap(), Field::prime(3).unwrap(), Field::new(2, 2).unwrap()];
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for f in &fields {
            for _ in 0..25 {
                let n = rng.gen_range(6..=14);
                let k = rng.gen_range(2..=n / 2 + 1);
                let rows: Vec<Vec<FieldElement>> = (0..k)
                    .map(|_| {
                        (0..n)
                            .map(|_| FieldElement(rng.gen_range(0..f.q()) as u32))
                            .collect()
                    })
                    .collect();
                let c = LinearCode::from_rows(f.clone(), n, rows);
                if c.dim() == 0 {
                    continue;
                }
                let ex = c
                    .min_distance(&DistanceOptions {
                        strategy: Strategy::Exhaustive,
                        ..Default::default()
                    })
                    .unwrap();
                let is = c
                    .min_distance(&DistanceOptions {
                        strategy: Strategy::InformationSet,
                        ..Default::default()
                    })
                    .unwrap();
                assert!(is.exact);
                assert_eq!(is.distance(), ex.distance(), "n={} k={} q={}", n, k, f.q());
            }
        }
    }

    #[test]
    fn parallel_matches_sequential() {
        let f = gf2();
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let rows: Vec<Vec<FieldElement>> = (0..14)
            .map(|_| (0..40).map(|_| FieldElement(rng.gen_range(0..2))).collect())
            .collect();
        let c = LinearCode::from_rows(f, 40, rows);
        let seq = c
            .min_distance(&DistanceOptions {
                strategy: Strategy::Exhaustive,
                threads: 1,
                ..Default::default()
            })
            .unwrap();
        let par = c
            .min_distance(&DistanceOptions {
                strategy: Strategy::Exhaustive,
                threads: 0,
                ..Default::default()
            })
            .unwrap();
        assert_eq!(seq.distance(), par.distance());
    }

    #[test]
    fn upper_sample_is_an_upper_bound() {
        let f = gf2();
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let rows: Vec<Vec<FieldElement>> = (0..8)
            .map(|_| (0..20).map(|_| FieldElement(rng.gen_range(0..2))).collect())
            .collect();
        let c = LinearCode::from_rows(f, 20, rows);
        let exact = c
            .min_distance(&DistanceOptions {
                strategy: Strategy::Exhaustive,
                ..Default::default()
            })
            .unwrap();
        let sample = c
            .min_distance(&DistanceOptions {
                strategy: Strategy::UpperSample,
                samples: 2000,
                ..Default::default()
            })
            .unwrap();
        assert!(!sample.exact);
        assert!(sample.upper >= exact.upper);
    }

    #[test]
    fn griesmer_values() {
        assert_eq!(griesmer_max_d(24, 12, 2), 8);
        assert_eq!(griesmer_max_d(7, 4, 2), 3); // Hamming [7,4,3]
        assert_eq!(griesmer_max_d(54, 8, 2), 25);
        assert_eq!(griesmer_max_d(5, 1, 2), 5); // repetition
    }

    #[test]
    fn matrix_file_round_trip() {
        let f = Field::prime(3).unwrap();
        let c = LinearCode::from_rows(
            f,
            4,
            vec![
                vec![FieldElement(1), FieldElement(0), FieldElement(2), FieldElement(1)],
                vec![FieldElement(0), FieldElement(1), FieldElement(1), FieldElement(2)],
            ],
        );
        let mut buf = Vec::new();
        c.write_matrix(&mut buf).unwrap();
        let (c2, _) = LinearCode::read_matrix(std::io::BufReader::new(&buf[..])).unwrap();
        assert_eq!(c, c2);
        // byte-identical on re-write
        let mut buf2 = Vec::new();
        c2.write_matrix(&mut buf2).unwrap();
        assert_eq!(buf, buf2);
    }
}
