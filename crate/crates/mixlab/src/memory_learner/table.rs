use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Read, Write};
use std::path::Path;

use rand::Rng as _;

use super::{FiniteStateLearner, StateId};
use crate::error::{Error, Result};
use crate::rng;

const MAGIC: &str = "FSL1";

/// Largest `states * examples` a table may hold.
pub const MAX_TABLE_CELLS: u64 = 1 << 26;

/// A learner given by explicit transition and output tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableLearner {
    num_states: usize,
    initial: usize,
    num_examples: usize,
    /// Indexed by `(state * num_examples + example) * 2 + label`.
    next: Vec<u32>,
    out: Vec<usize>,
}

fn check_size(states: usize, examples: usize) -> Result<()> {
    if states == 0 || examples == 0 {
        return Err(Error::input("a table learner needs at least one state and one example"));
    }
    if states as u64 * examples as u64 > MAX_TABLE_CELLS || states > u32::MAX as usize {
        return Err(Error::capacity(format!(
            "table of {states} states x {examples} examples exceeds {MAX_TABLE_CELLS} cells"
        )));
    }
    Ok(())
}

impl TableLearner {
    pub fn new(
        num_states: usize,
        initial: usize,
        num_examples: usize,
        next: Vec<u32>,
        out: Vec<usize>,
    ) -> Result<Self> {
        check_size(num_states, num_examples)?;
        if initial >= num_states {
            return Err(Error::input(format!("initial state {initial} out of range")));
        }
        if next.len() != num_states * num_examples * 2 || out.len() != num_states {
            return Err(Error::input("table sizes do not match the declared dimensions"));
        }
        if let Some(s) = next.iter().find(|&&s| s as usize >= num_states) {
            return Err(Error::input(format!("transition target {s} out of range")));
        }
        Ok(TableLearner { num_states, initial, num_examples, next, out })
    }

    /// Tabulates any learner small enough to fit.
    pub fn from_learner(learner: &dyn FiniteStateLearner) -> Result<Self> {
        let states = usize::try_from(learner.num_states())
            .map_err(|_| Error::capacity("too many states to tabulate"))?;
        let examples = learner.num_examples();
        check_size(states, examples)?;
        let mut next = Vec::with_capacity(states * examples * 2);
        for s in 0..states as StateId {
            for x in 0..examples {
                for y in [false, true] {
                    next.push(learner.transition(s, x, y) as u32);
                }
            }
        }
        let out = (0..states as StateId).map(|s| learner.output(s)).collect();
        TableLearner::new(states, learner.initial_state() as usize, examples, next, out)
    }

    /// Uniformly random transitions and outputs; starts in state 0.
    pub fn random(num_states: usize, num_examples: usize, num_hypotheses: usize, seed: u64) -> Result<Self> {
        check_size(num_states, num_examples)?;
        if num_hypotheses == 0 {
            return Err(Error::input("need at least one hypothesis"));
        }
        let mut rng = rng::seeded(seed);
        let next = (0..num_states * num_examples * 2)
            .map(|_| rng.gen_range(0..num_states as u32))
            .collect();
        let out = (0..num_states).map(|_| rng.gen_range(0..num_hypotheses)).collect();
        TableLearner::new(num_states, 0, num_examples, next, out)
    }

    fn index(&self, state: StateId, example: usize, label: bool) -> usize {
        (state as usize * self.num_examples + example) * 2 + label as usize
    }
}

impl FiniteStateLearner for TableLearner {
    fn num_states(&self) -> u64 {
        self.num_states as u64
    }

    fn initial_state(&self) -> StateId {
        self.initial as StateId
    }

    fn num_examples(&self) -> usize {
        self.num_examples
    }

    fn transition(&self, state: StateId, example: usize, label: bool) -> StateId {
        self.next[self.index(state, example, label)] as StateId
    }

    fn output(&self, state: StateId) -> usize {
        self.out[state as usize]
    }
}

pub fn write_table_learner<W: Write>(learner: &TableLearner, mut out: W) -> Result<()> {
    writeln!(out, "{MAGIC}")?;
    writeln!(
        out,
        "states={} init={} examples={}",
        learner.num_states, learner.initial, learner.num_examples
    )?;
    for s in 0..learner.num_states {
        for x in 0..learner.num_examples {
            for y in [false, true] {
                let t = learner.transition(s as StateId, x, y);
                writeln!(out, "{s} {x} {} -> {t}", y as u8)?;
            }
        }
    }
    for (s, h) in learner.out.iter().enumerate() {
        writeln!(out, "out {s} {h}")?;
    }
    out.flush()?;
    Ok(())
}

fn parse_kv(field: Option<&str>, key: &str, line: usize) -> Result<usize> {
    field
        .and_then(|f| f.strip_prefix(key))
        .and_then(|f| f.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected `{key}=<int>`")))
}

fn parse_num(tok: Option<&str>, what: &str, line: usize) -> Result<usize> {
    tok.and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::parse(line, format!("expected {what}")))
}

/// Reads the `FSL1` format. Every `(state, example, label)` triple and every
/// state's output must appear exactly once.
pub fn read_table_learner<R: Read>(input: R) -> Result<TableLearner> {
    let mut lines = BufReader::new(input).lines().enumerate().map(|(i, l)| (i + 1, l));
    let mut next_line = || -> Result<Option<(usize, String)>> {
        match lines.next() {
            Some((n, Ok(l))) => Ok(Some((n, l))),
            Some((n, Err(e))) => Err(Error::parse(n, e.to_string())),
            None => Ok(None),
        }
    };
    match next_line()? {
        Some((_, l)) if l == MAGIC => {}
        Some((n, l)) => return Err(Error::parse(n, format!("expected `{MAGIC}`, found `{l}`"))),
        None => return Err(Error::parse(1, "empty input")),
    }
    let (n, header) = next_line()?.ok_or_else(|| Error::parse(2, "missing header line"))?;
    let mut fields = header.split_whitespace();
    let states = parse_kv(fields.next(), "states", n)?;
    let init = parse_kv(fields.next(), "init", n)?;
    let examples = parse_kv(fields.next(), "examples", n)?;
    if fields.next().is_some() {
        return Err(Error::parse(n, "trailing fields in header"));
    }
    check_size(states, examples).map_err(|e| Error::parse(n, e.to_string()))?;
    if init >= states {
        return Err(Error::parse(n, format!("initial state {init} out of range")));
    }

    const UNSET: u32 = u32::MAX;
    let mut next = vec![UNSET; states * examples * 2];
    let mut out = vec![usize::MAX; states];
    let mut last = n;
    while let Some((n, line)) = next_line()? {
        last = n;
        let mut tok = line.split_whitespace();
        match tok.clone().next() {
            None => continue,
            Some("out") => {
                tok.next();
                let s = parse_num(tok.next(), "a state", n)?;
                let h = parse_num(tok.next(), "a hypothesis index", n)?;
                if tok.next().is_some() {
                    return Err(Error::parse(n, "trailing tokens"));
                }
                if s >= states {
                    return Err(Error::parse(n, format!("state {s} out of range")));
                }
                if out[s] != usize::MAX {
                    return Err(Error::parse(n, format!("duplicate output for state {s}")));
                }
                out[s] = h;
            }
            Some(_) => {
                let s = parse_num(tok.next(), "a state", n)?;
                let x = parse_num(tok.next(), "an example", n)?;
                let y = match tok.next() {
                    Some("0") => 0,
                    Some("1") => 1,
                    _ => return Err(Error::parse(n, "label must be 0 or 1")),
                };
                if tok.next() != Some("->") {
                    return Err(Error::parse(n, "expected `->`"));
                }
                let t = parse_num(tok.next(), "a target state", n)?;
                if tok.next().is_some() {
                    return Err(Error::parse(n, "trailing tokens"));
                }
                if s >= states || t >= states {
                    return Err(Error::parse(n, format!("state out of range (states={states})")));
                }
                if x >= examples {
                    return Err(Error::parse(n, format!("example {x} out of range")));
                }
                let idx = (s * examples + x) * 2 + y;
                if next[idx] != UNSET {
                    return Err(Error::parse(n, format!("duplicate transition for ({s}, {x}, {y})")));
                }
                next[idx] = t as u32;
            }
        }
    }
    if let Some(idx) = next.iter().position(|&t| t == UNSET) {
        let (s, x, y) = (idx / 2 / examples, idx / 2 % examples, idx % 2);
        return Err(Error::parse(last, format!("missing transition for ({s}, {x}, {y})")));
    }
    if let Some(s) = out.iter().position(|&h| h == usize::MAX) {
        return Err(Error::parse(last, format!("missing output for state {s}")));
    }
    TableLearner::new(states, init, examples, next, out)
}

pub fn read_table_learner_path(path: impl AsRef<Path>) -> Result<TableLearner> {
    read_table_learner(File::open(path)?)
}

pub fn write_table_learner_path(learner: &TableLearner, path: impl AsRef<Path>) -> Result<()> {
    write_table_learner(learner, BufWriter::new(File::create(path)?))
}
