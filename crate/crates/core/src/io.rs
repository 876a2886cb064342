//! Batch file formats and query drivers shared by the command-line tool.
//!
//! Every input is line based with 1-based inclusive coordinates. Blank
//! lines are skipped; parse errors carry the 1-based line number.

use std::fmt::Write as _;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;

use crate::count_occ::DEFAULT_MAX_OCC;
use crate::{
    ApproxIndex, CanonicalIndex, CountIndex, Dictionary, DynamicCounter, Error, Fragment,
    PathSetIndex, Result, SquaresIndex, TextIndex,
};

/// Query mode for batch answering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    Approx2,
    ExactCanonical,
    ExactPathset,
    Squares,
    Count,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Approx2 => "approx2",
            Mode::ExactCanonical => "exact-canonical",
            Mode::ExactPathset => "exact-pathset",
            Mode::Squares => "squares",
            Mode::Count => "count",
        }
    }

    fn takes_m(self) -> bool {
        matches!(self, Mode::ExactCanonical | Mode::ExactPathset)
    }

    fn takes_max_occ(self) -> bool {
        matches!(self, Mode::Approx2 | Mode::Count)
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Mode::Approx2,
            Mode::ExactCanonical,
            Mode::ExactPathset,
            Mode::Squares,
            Mode::Count,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| Error::Precondition(format!("unknown mode {s:?}")))
    }
}

/// Mode parameters as given on the command line.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Params {
    pub m: Option<usize>,
    pub max_occ: Option<usize>,
}

impl Params {
    /// Rejects parameters the mode does not use and missing required ones.
    pub fn validate(&self, mode: Mode) -> Result<()> {
        match (mode.takes_m(), self.m) {
            (true, None) => {
                return Err(Error::Precondition(format!("mode {} requires --m", mode.name())))
            }
            (true, Some(0)) => return Err(Error::Precondition("--m must be positive".into())),
            (false, Some(_)) => {
                return Err(Error::Precondition(format!("mode {} does not take --m", mode.name())))
            }
            _ => {}
        }
        if self.max_occ.is_some() && !mode.takes_max_occ() {
            return Err(Error::Precondition(format!(
                "mode {} does not take --max-occ",
                mode.name()
            )));
        }
        Ok(())
    }
}

/// One line of a dynamic script.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Insert(Fragment),
    Delete(Fragment),
    Query(usize, usize),
}

/// Text file contents with a single trailing newline removed.
pub fn parse_text(bytes: &[u8]) -> Result<Vec<u8>> {
    let body = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    if body.is_empty() {
        return Err(Error::EmptyText);
    }
    Ok(body.to_vec())
}

fn lines(src: &str) -> impl Iterator<Item = (usize, &str)> {
    src.lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn two_numbers<'a>(line: usize, mut words: impl Iterator<Item = &'a str>) -> Result<(usize, usize)> {
    let mut next = |what: &str| -> Result<usize> {
        let w = words
            .next()
            .ok_or_else(|| parse_err(line, format!("missing {what}")))?;
        w.parse()
            .map_err(|_| parse_err(line, format!("{what} {w:?} is not a non-negative integer")))
    };
    let a = next("first coordinate")?;
    let b = next("second coordinate")?;
    if let Some(extra) = words.next() {
        return Err(parse_err(line, format!("unexpected token {extra:?}")));
    }
    Ok((a, b))
}

fn pattern(line: usize, (a, b): (usize, usize), n: usize) -> Result<Fragment> {
    if a == 0 || b > n || a > b {
        return Err(parse_err(line, format!("pattern {a} {b} is not a non-empty fragment of a text of length {n}")));
    }
    Ok(Fragment::new_unchecked(a, b))
}

fn window(line: usize, (i, j): (usize, usize), n: usize) -> Result<(usize, usize)> {
    Fragment::checked(i, j, n).map_err(|e| parse_err(line, e.to_string()))?;
    Ok((i, j))
}

/// Dictionary lines `a b`; duplicates are allowed.
pub fn parse_dictionary(src: &str, n: usize) -> Result<Vec<Fragment>> {
    lines(src)
        .map(|(line, l)| pattern(line, two_numbers(line, l.split_whitespace())?, n))
        .collect()
}

/// Query lines `i j`; `j = i - 1` denotes an empty window.
pub fn parse_queries(src: &str, n: usize) -> Result<Vec<(usize, usize)>> {
    lines(src)
        .map(|(line, l)| window(line, two_numbers(line, l.split_whitespace())?, n))
        .collect()
}

/// Script lines `+ a b`, `- a b` and `? i j`.
pub fn parse_ops(src: &str, n: usize) -> Result<Vec<Op>> {
    lines(src)
        .map(|(line, l)| {
            let mut words = l.split_whitespace();
            let tag = words.next().unwrap_or_default();
            match tag {
                "+" => Ok(Op::Insert(pattern(line, two_numbers(line, words)?, n)?)),
                "-" => Ok(Op::Delete(pattern(line, two_numbers(line, words)?, n)?)),
                "?" => {
                    let (i, j) = window(line, two_numbers(line, words)?, n)?;
                    Ok(Op::Query(i, j))
                }
                other => Err(parse_err(line, format!("unknown operation {other:?}"))),
            }
        })
        .collect()
}

enum Engine {
    Approx(ApproxIndex),
    Canonical(CanonicalIndex),
    PathSet(PathSetIndex),
    Squares(SquaresIndex),
    Count(CountIndex),
}

impl Engine {
    fn build(text: Arc<TextIndex>, dict: &[Fragment], mode: Mode, params: Params) -> Result<Self> {
        params.validate(mode)?;
        if mode == Mode::Squares {
            return Ok(Engine::Squares(SquaresIndex::build(text)));
        }
        let dict = Dictionary::new(&text, dict.iter().copied())?;
        let max_occ = params.max_occ.unwrap_or(DEFAULT_MAX_OCC);
        Ok(match mode {
            Mode::Approx2 => Engine::Approx(ApproxIndex::with_limit(text, &dict, max_occ)?),
            Mode::ExactCanonical => {
                Engine::Canonical(CanonicalIndex::build(text, &dict, params.m.unwrap())?)
            }
            Mode::ExactPathset => {
                Engine::PathSet(PathSetIndex::build(text, &dict, params.m.unwrap())?)
            }
            Mode::Count => Engine::Count(CountIndex::with_limit(&text, &dict, max_occ)?),
            Mode::Squares => unreachable!(),
        })
    }

    fn answer(&self, i: usize, j: usize) -> Result<usize> {
        match self {
            Engine::Approx(x) => x.count_distinct(i, j),
            Engine::Canonical(x) => x.count_distinct(i, j),
            Engine::PathSet(x) => x.count_distinct(i, j),
            Engine::Squares(x) => x.count_distinct(i, j),
            Engine::Count(x) => Ok(x.count(i, j)),
        }
    }
}

/// Answers a batch of queries in input order. `threads = 0` uses the rayon
/// default; the dictionary is ignored in squares mode.
pub fn answer_queries(
    text: Arc<TextIndex>,
    dict: &[Fragment],
    queries: &[(usize, usize)],
    mode: Mode,
    params: Params,
    threads: usize,
) -> Result<Vec<usize>> {
    let engine = Engine::build(text, dict, mode, params)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Precondition(e.to_string()))?;
    pool.install(|| {
        queries
            .par_iter()
            .map(|&(i, j)| engine.answer(i, j))
            .collect()
    })
}

/// Runs a dynamic script sequentially and returns the answers to its `?`
/// lines.
pub fn run_dynamic(text: Arc<TextIndex>, dict: &[Fragment], ops: &[Op], k: usize) -> Result<Vec<usize>> {
    let dict = Dictionary::new(&text, dict.iter().copied())?;
    let mut counter = DynamicCounter::new(text, &dict, k)?;
    let mut out = Vec::new();
    for op in ops {
        match *op {
            Op::Insert(f) => counter.insert_pattern(f)?,
            Op::Delete(f) => counter.delete_pattern(f)?,
            Op::Query(i, j) => out.push(counter.count_distinct(i, j)?),
        }
    }
    Ok(out)
}

/// One decimal integer per line, each LF-terminated.
pub fn format_answers(answers: &[usize]) -> String {
    let mut s = String::with_capacity(answers.len() * 4);
    for a in answers {
        writeln!(s, "{a}").unwrap();
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn example() -> (Arc<TextIndex>, Vec<Fragment>) {
        let t = parse_text(b"adaaaabaabbaac\n").unwrap();
        let t = Arc::new(TextIndex::from_bytes(t).unwrap());
        let d = parse_dictionary("3 4\n3 6\n\n9 12\n14 14\n", 14).unwrap();
        (t, d)
    }

    #[test]
    fn text_strips_one_newline() {
        assert_eq!(parse_text(b"ab\n\n").unwrap(), b"ab\n");
        assert_eq!(parse_text(b"ab").unwrap(), b"ab");
        assert_eq!(parse_text(b"\n"), Err(Error::EmptyText));
    }

    #[test]
    fn parse_errors_carry_lines() {
        let e = parse_dictionary("1 2\n\n3 x\n", 5).unwrap_err();
        assert!(matches!(e, Error::Parse { line: 3, .. }), "{e}");
        assert!(matches!(parse_dictionary("2 1", 5), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_queries("1 2 3", 5), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_queries("1 6", 5), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_ops("+ 1 1\n* 1 1", 5), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_queries("3 2", 5).unwrap(), [(3, 2)]);
    }

    #[test]
    fn modes_on_example() {
        let (t, d) = example();
        let q = parse_queries("5 12\n2 6\n2 12\n", 14).unwrap();
        let run = |mode, m| answer_queries(t.clone(), &d, &q, mode, Params { m, max_occ: None }, 2).unwrap();
        assert_eq!(run(Mode::Squares, None), [3, 2, 4]);
        assert_eq!(run(Mode::ExactPathset, Some(2)), [2, 2, 3]);
        assert_eq!(run(Mode::ExactCanonical, Some(3)), [2, 2, 3]);
        assert_eq!(format_answers(&run(Mode::ExactPathset, Some(2))), "2\n2\n3\n");
        assert!(answer_queries(t.clone(), &d, &[], Mode::Approx2, Params::default(), 1).unwrap().is_empty());
    }

    #[test]
    fn param_mismatch_rejected() {
        let m = Params { m: Some(4), max_occ: None };
        assert!(m.validate(Mode::Approx2).is_err());
        assert!(Params::default().validate(Mode::ExactCanonical).is_err());
        assert!(Params { m: None, max_occ: Some(5) }.validate(Mode::Squares).is_err());
        assert!(m.validate(Mode::ExactPathset).is_ok());
    }

    #[test]
    fn dynamic_script() {
        let (t, d) = example();
        let ops = parse_ops("? 1 2\n+ 2 2\n? 1 2\n- 3 4\n- 3 6\n- 9 12\n- 14 14\n- 2 2\n? 1 14", 14).unwrap();
        assert_eq!(run_dynamic(t, &d, &ops, 2).unwrap(), [0, 1, 0]);
    }
}
