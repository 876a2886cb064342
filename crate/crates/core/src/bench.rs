//! Build time, space and query latency over a grid of parameters.

use std::fmt::Write as _;
use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::io::Mode;
use crate::{
    ApproxIndex, CanonicalIndex, CountIndex, Dictionary, Fragment, PathSetIndex, Result,
    SquaresIndex, TextIndex,
};

pub const CSV_HEADER: &str = "mode,n,d,m,build_ms,bytes,query_us_p50,query_us_p99";

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub modes: Vec<Mode>,
    pub ns: Vec<usize>,
    pub ds: Vec<usize>,
    /// Used by the exact modes only.
    pub ms: Vec<usize>,
    pub queries: usize,
    /// Inclusive range of pattern lengths.
    pub pattern_len: (usize, usize),
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            modes: vec![Mode::Approx2, Mode::ExactCanonical, Mode::ExactPathset, Mode::Squares, Mode::Count],
            ns: vec![10_000],
            ds: vec![1_000],
            ms: vec![16, 64, 256],
            queries: 1_000,
            pattern_len: (16, 64),
            seed: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub mode: Mode,
    pub n: usize,
    pub d: usize,
    /// 0 when the mode has no `m`.
    pub m: usize,
    pub build_ms: f64,
    /// For exact-canonical, the canonical table alone.
    pub bytes: usize,
    pub query_us_p50: f64,
    pub query_us_p99: f64,
    /// Not part of the CSV.
    pub query_us_mean: f64,
}

impl BenchRow {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{:.3},{},{:.3},{:.3}",
            self.mode.name(),
            self.n,
            self.d,
            self.m,
            self.build_ms,
            self.bytes,
            self.query_us_p50,
            self.query_us_p99
        )
    }
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut s = format!("{CSV_HEADER}\n");
    for r in rows {
        writeln!(s, "{}", r.csv_line()).unwrap();
    }
    s
}

/// Random binary text of length `n`.
pub fn binary_text(rng: &mut impl Rng, n: usize) -> Vec<u8> {
    (0..n).map(|_| if rng.gen() { b'a' } else { b'b' }).collect()
}

fn dictionary(rng: &mut impl Rng, n: usize, d: usize, (lo, hi): (usize, usize)) -> Vec<Fragment> {
    (0..d)
        .map(|_| {
            let len = rng.gen_range(lo.min(n)..=hi.min(n)).max(1);
            let a = rng.gen_range(1..=n + 1 - len);
            Fragment::new_unchecked(a, a + len - 1)
        })
        .collect()
}

fn percentile(sorted: &[f64], q: f64) -> f64 {
    if sorted.is_empty() {
        return 0.0;
    }
    let k = ((sorted.len() - 1) as f64 * q).round() as usize;
    sorted[k]
}

/// p50, p99 and mean per-query latency in microseconds.
fn measure(queries: &[(usize, usize)], mut answer: impl FnMut(usize, usize) -> usize) -> (f64, f64, f64) {
    let mut times: Vec<f64> = queries
        .iter()
        .map(|&(i, j)| {
            let t = Instant::now();
            std::hint::black_box(answer(i, j));
            t.elapsed().as_secs_f64() * 1e6
        })
        .collect();
    let mean = times.iter().sum::<f64>() / times.len().max(1) as f64;
    times.sort_by(f64::total_cmp);
    (percentile(&times, 0.5), percentile(&times, 0.99), mean)
}

fn ms_since(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

/// One row for a single mode on a fixed instance.
pub fn bench_one(
    text: &Arc<TextIndex>,
    dict: &Dictionary,
    mode: Mode,
    m: usize,
    queries: &[(usize, usize)],
) -> Result<BenchRow> {
    let t0 = Instant::now();
    let (build_ms, bytes, (p50, p99, mean)) = match mode {
        Mode::Approx2 => {
            let x = ApproxIndex::build(text.clone(), dict)?;
            let b = ms_since(t0);
            (b, x.heap_bytes(), measure(queries, |i, j| x.count_distinct(i, j).unwrap()))
        }
        Mode::ExactCanonical => {
            let x = CanonicalIndex::build(text.clone(), dict, m)?;
            let b = ms_since(t0);
            (b, x.table_bytes(), measure(queries, |i, j| x.count_distinct(i, j).unwrap()))
        }
        Mode::ExactPathset => {
            let x = PathSetIndex::build(text.clone(), dict, m)?;
            let b = ms_since(t0);
            (b, x.heap_bytes(), measure(queries, |i, j| x.count_distinct(i, j).unwrap()))
        }
        Mode::Squares => {
            let x = SquaresIndex::build(text.clone());
            let b = ms_since(t0);
            (b, x.heap_bytes(), measure(queries, |i, j| x.count_distinct(i, j).unwrap()))
        }
        Mode::Count => {
            let x = CountIndex::build(text, dict)?;
            let b = ms_since(t0);
            (b, x.heap_bytes(), measure(queries, |i, j| x.count(i, j)))
        }
    };
    let has_m = matches!(mode, Mode::ExactCanonical | Mode::ExactPathset);
    Ok(BenchRow {
        mode,
        n: text.len(),
        d: dict.len(),
        m: if has_m { m } else { 0 },
        build_ms,
        bytes,
        query_us_p50: p50,
        query_us_p99: p99,
        query_us_mean: mean,
    })
}

/// Runs the full grid. Instances and queries depend only on the seed.
pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for &n in &cfg.ns {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ n as u64);
        let text = Arc::new(TextIndex::from_bytes(binary_text(&mut rng, n))?);
        let queries: Vec<(usize, usize)> = (0..cfg.queries)
            .map(|_| {
                let i = rng.gen_range(1..=n);
                (i, rng.gen_range(i..=n))
            })
            .collect();
        for &d in &cfg.ds {
            let dict = Dictionary::new(&text, dictionary(&mut rng, n, d, cfg.pattern_len))?;
            for &mode in &cfg.modes {
                if matches!(mode, Mode::ExactCanonical | Mode::ExactPathset) {
                    for &m in cfg.ms.iter().filter(|&&m| m >= 1 && m <= n) {
                        rows.push(bench_one(&text, &dict, mode, m, &queries)?);
                    }
                } else {
                    rows.push(bench_one(&text, &dict, mode, 0, &queries)?);
                }
            }
        }
    }
    Ok(rows)
}
