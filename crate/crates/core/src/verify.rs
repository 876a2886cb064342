//! Seeded randomized cross-check of every query structure against the
//! brute-force oracles.

use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::oracle::{self, MAX_N};
use crate::squares::{bsq, bsq_prime, run_squares};
use crate::{
    ApproxIndex, CanonicalIndex, CountIndex, Dictionary, DynamicCounter, Error, Fragment,
    PathSetIndex, Result, SquaresIndex, TextIndex,
};

/// Random text over the first `sigma` lowercase letters.
pub fn random_text(rng: &mut impl Rng, n: usize, sigma: u8) -> Vec<u8> {
    (0..n).map(|_| b'a' + rng.gen_range(0..sigma.max(1))).collect()
}

/// `d` random non-empty fragments, half of them short.
pub fn random_dictionary(rng: &mut impl Rng, n: usize, d: usize) -> Vec<Fragment> {
    (0..d)
        .map(|_| {
            let a = rng.gen_range(1..=n);
            let cap = if rng.gen_bool(0.5) { 4 } else { n };
            let len = rng.gen_range(1..=(n + 1 - a).min(cap));
            Fragment::new_unchecked(a, a + len - 1)
        })
        .collect()
}

/// The first disagreement found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub operation: String,
    pub text: String,
    pub dictionary: Vec<Fragment>,
    pub query: String,
    pub expected: String,
    pub got: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "operation: {}", self.operation)?;
        writeln!(f, "text: {}", self.text)?;
        write!(f, "dictionary:")?;
        for p in &self.dictionary {
            write!(f, " {}-{}", p.start, p.end)?;
        }
        writeln!(f)?;
        writeln!(f, "query: {}", self.query)?;
        writeln!(f, "expected: {}", self.expected)?;
        write!(f, "got: {}", self.got)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub seed: u64,
    pub instances: usize,
    pub checks: u64,
    pub failure: Option<Counterexample>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => writeln!(
                f,
                "verify seed={} instances={} checks={} result=ok",
                self.seed, self.instances, self.checks
            ),
            Some(c) => {
                writeln!(
                    f,
                    "verify seed={} instances={} checks={} result=MISMATCH",
                    self.seed, self.instances, self.checks
                )?;
                writeln!(f, "{c}")
            }
        }
    }
}

struct Checker<'a> {
    text: &'a [u8],
    dict: &'a [Fragment],
    checks: u64,
}

type Step = std::result::Result<(), Box<Counterexample>>;

impl Checker<'_> {
    fn fail(&self, op: &str, query: String, expected: String, got: String) -> Box<Counterexample> {
        Box::new(Counterexample {
            operation: op.into(),
            text: String::from_utf8_lossy(self.text).into_owned(),
            dictionary: self.dict.to_vec(),
            query,
            expected,
            got,
        })
    }

    fn eq<T: PartialEq + fmt::Debug>(&mut self, op: &str, query: impl FnOnce() -> String, want: T, got: T) -> Step {
        self.checks += 1;
        if want == got {
            Ok(())
        } else {
            Err(self.fail(op, query(), format!("{want:?}"), format!("{got:?}")))
        }
    }

    fn within_two(&mut self, op: &str, i: usize, j: usize, want: usize, got: usize) -> Step {
        self.checks += 1;
        if want <= got && got <= 2 * want {
            Ok(())
        } else {
            Err(self.fail(op, format!("{i} {j}"), format!("between {want} and {}", 2 * want), got.to_string()))
        }
    }
}

fn unexpected(e: Error) -> Box<Counterexample> {
    Box::new(Counterexample {
        operation: "error".into(),
        text: String::new(),
        dictionary: Vec::new(),
        query: String::new(),
        expected: "success".into(),
        got: e.to_string(),
    })
}

fn check_instance(rng: &mut ChaCha8Rng, t: &[u8], raw: &[Fragment], c: &mut Checker) -> Step {
    let n = t.len();
    let text = Arc::new(TextIndex::from_bytes(t.to_vec()).map_err(unexpected)?);
    let dict = Dictionary::new(&text, raw.iter().copied()).map_err(unexpected)?;
    let table = oracle::naive_window_table(t, raw).map_err(unexpected)?;
    let squares = oracle::naive_squares_table(t).map_err(unexpected)?;

    let runs: Vec<_> = text.runs().iter().map(|r| (r.start, r.end, r.period)).collect();
    c.eq("runs", String::new, oracle::naive_runs(t).map_err(unexpected)?, runs)?;

    let root = (n as f64).sqrt().ceil() as usize;
    let mut ms = vec![1, root, n];
    ms.dedup();
    let mut canon = Vec::new();
    let mut paths = Vec::new();
    for &m in &ms {
        canon.push((m, CanonicalIndex::build(text.clone(), &dict, m).map_err(unexpected)?));
        paths.push((m, PathSetIndex::build(text.clone(), &dict, m).map_err(unexpected)?));
    }
    let approx = ApproxIndex::build(text.clone(), &dict).map_err(unexpected)?;
    let count = CountIndex::build(&text, &dict).map_err(unexpected)?;
    let sq = SquaresIndex::build(text.clone());

    for i in 1..=n {
        for j in i..=n {
            let want = table[i][j] as usize;
            let q = || format!("{i} {j}");
            for (m, idx) in &canon {
                c.eq(&format!("exact-canonical m={m}"), q, want, idx.count_distinct(i, j).map_err(unexpected)?)?;
            }
            for (m, idx) in &paths {
                c.eq(&format!("exact-pathset m={m}"), q, want, idx.count_distinct(i, j).map_err(unexpected)?)?;
            }
            c.within_two("approx2", i, j, want, approx.count_distinct(i, j).map_err(unexpected)?)?;
            c.eq("count", q, oracle::naive_count(t, raw, i, j).map_err(unexpected)?, count.count(i, j))?;
            c.eq("squares", q, squares[i][j] as usize, sq.count_distinct(i, j).map_err(unexpected)?)?;
        }
    }

    for _ in 0..n {
        let a = rng.gen_range(1..=n);
        let b = rng.gen_range(a..=n);
        let f = Fragment::new_unchecked(a, b);
        let q = || format!("{a} {b}");
        let p = oracle::naive_period(&t[a - 1..b]);
        c.eq("period", q, p, text.period(f))?;
        if 2 * p <= f.len() {
            let want = oracle::naive_periodic_count(t, raw, f).map_err(unexpected)?;
            c.eq("periodic_count", q, want, approx.periodic_count(f).map_err(unexpected)?)?;
            let rep = text.periodic_rep(f).map_err(unexpected)?;
            c.eq("periodic_rep", q, t[a - 1..b].to_vec(), text.expand(&rep))?;
        }
        let len1 = rng.gen_range(0..=n / 10);
        let len2 = rng.gen_range(8 * len1..=8 * len1 + 4);
        if a + 2 * len1 + len2 <= n + 1 {
            let f1 = Fragment::new_unchecked(a, a + len1 - 1);
            let f2 = Fragment::new_unchecked(a + len1, a + len1 + len2 - 1);
            let f3 = Fragment::new_unchecked(a + len1 + len2, a + 2 * len1 + len2 - 1);
            let want = oracle::naive_three_fragments(t, raw, f1, f2, f3).map_err(unexpected)?;
            let got = approx.three_fragments_count(f1, f2, f3).map_err(unexpected)?;
            c.eq("three_fragments_count", || format!("{f1} {f2} {f3}"), want, got)?;
        }
    }

    for r in text.runs() {
        let s = &t[r.start - 1..r.end];
        let q = || format!("{}", r.fragment());
        c.eq("run_squares", q, oracle::naive_run_squares(s), run_squares(s.len(), r.period))?;
        let f1 = rng.gen_range(0..=r.period);
        let f2 = rng.gen_range(0..=r.period);
        let q = || format!("{} f1={f1} f2={f2}", r.fragment());
        c.eq("bsq", q, oracle::naive_bsq(s, f1, f2), bsq(s.len(), r.period, f1, f2).map_err(unexpected)?)?;
        let got = bsq_prime(s.len(), r.period, f1).map_err(unexpected)?;
        c.eq("bsq_prime", q, oracle::naive_bsq_prime(s.len(), r.period, f1), got)?;
    }

    check_dynamic(rng, t, &text, &dict, c)
}

fn check_dynamic(rng: &mut ChaCha8Rng, t: &[u8], text: &Arc<TextIndex>, dict: &Dictionary, c: &mut Checker) -> Step {
    let n = t.len();
    let k = *[1, 8, 32].choose(rng).unwrap();
    let mut dynamic = DynamicCounter::new(text.clone(), dict, k).map_err(unexpected)?;
    for step in 0..3 * n {
        match rng.gen_range(0..3) {
            0 => {
                let f = random_dictionary(rng, n, 1)[0];
                dynamic.insert_pattern(f).map_err(unexpected)?;
            }
            1 => {
                let current = dynamic.current_patterns();
                if let Some(&f) = current.choose(rng) {
                    dynamic.delete_pattern(f).map_err(unexpected)?;
                }
            }
            _ => {
                let i = rng.gen_range(1..=n);
                let j = rng.gen_range(i..=n);
                let current = dynamic.current_patterns();
                let want = oracle::naive_count_distinct(t, &current, i, j).map_err(unexpected)?;
                let got = dynamic.count_distinct(i, j).map_err(unexpected)?;
                c.within_two(&format!("dynamic k={k} step={step}"), i, j, want, got)?;
            }
        }
    }
    Ok(())
}

/// Runs `trials` random instances for each size in `sizes`. Deterministic in
/// `seed`; stops at the first mismatch.
pub fn run(seed: u64, sizes: &[usize], trials: usize) -> Result<VerifyReport> {
    if let Some(&n) = sizes.iter().find(|&&n| n == 0 || n > MAX_N) {
        return Err(Error::OracleTooLarge { n, limit: MAX_N });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = VerifyReport {
        seed,
        instances: 0,
        checks: 0,
        failure: None,
    };
    for _ in 0..trials {
        for &n in sizes {
            let sigma = rng.gen_range(1..=4);
            let t = random_text(&mut rng, n, sigma);
            let d = rng.gen_range(0..=n.min(50));
            let raw = random_dictionary(&mut rng, n, d);
            let mut checker = Checker {
                text: &t,
                dict: &raw,
                checks: 0,
            };
            let outcome = check_instance(&mut rng, &t, &raw, &mut checker);
            report.instances += 1;
            report.checks += checker.checks;
            if let Err(mut ce) = outcome {
                if ce.text.is_empty() {
                    ce.text = String::from_utf8_lossy(&t).into_owned();
                    ce.dictionary = raw.clone();
                }
                report.failure = Some(*ce);
                return Ok(report);
            }
        }
    }
    Ok(report)
}
