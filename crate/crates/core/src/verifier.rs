//! The advice-driven subdivision driver, the condition list it consults and
//! the command-line front end.

use std::fs;
use std::io::{self, BufRead, Write};
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::conditions::{inequality_holds, BoxAddress, Condition, ConditionError, MAX_DEPTH};
use crate::roundoff::{initialize_roundoff, FpEnvironment, RoundoffError};

/// Default condition list file, looked up in the working directory.
pub const DEFAULT_CONDITIONLIST: &str = "conditionlist";

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("verify: fatal error at {0}")]
    DepthExceeded(String),
    #[error("can't open conditionlist")]
    CantOpen(#[source] io::Error),
    #[error("conditionlist has {0} lines, more than {max}", max = ConditionList::MAX_LINES)]
    TooManyLines(usize),
    #[error("conditionlist has {0} bytes, more than {max}", max = ConditionList::MAX_BYTES)]
    TooLarge(usize),
    #[error("code {code} out of range [1,{n}] in inequalityFor")]
    OutOfRange { code: i32, n: usize },
    #[error("verify: advice ended at {0}")]
    AdviceEnded(String),
    #[error("verify: bad advice {token:?} at {at}")]
    BadAdvice { token: String, at: String },
    #[error("verify: {source} at {at}")]
    Condition { at: String, source: ConditionError },
    #[error(transparent)]
    Roundoff(#[from] RoundoffError),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// The lines of a condition file, numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConditionList {
    lines: Vec<String>,
}

impl ConditionList {
    pub const MAX_LINES: usize = 13200;
    pub const MAX_BYTES: usize = 300_000;

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, VerifyError> {
        if bytes.len() > Self::MAX_BYTES {
            return Err(VerifyError::TooLarge(bytes.len()));
        }
        let text = String::from_utf8_lossy(bytes);
        let body = text.strip_suffix('\n').unwrap_or(&text);
        let lines: Vec<String> = body.split('\n').map(str::to_owned).collect();
        if lines.len() > Self::MAX_LINES {
            return Err(VerifyError::TooManyLines(lines.len()));
        }
        Ok(ConditionList { lines })
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self, VerifyError> {
        let bytes = fs::read(path).map_err(VerifyError::CantOpen)?;
        Self::from_bytes(&bytes)
    }

    pub fn len(&self) -> usize {
        self.lines.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }

    /// Line `code`, counting from 1.
    pub fn line(&self, code: i32) -> Result<&str, VerifyError> {
        usize::try_from(code)
            .ok()
            .filter(|&k| k >= 1 && k <= self.lines.len())
            .map(|k| self.lines[k - 1].as_str())
            .ok_or(VerifyError::OutOfRange { code, n: self.lines.len() + 1 })
    }
}

/// A condition list that is read from disk the first time it is needed.
#[derive(Debug)]
pub struct ConditionSource {
    path: PathBuf,
    list: Option<ConditionList>,
}

impl ConditionSource {
    pub fn from_path(path: impl Into<PathBuf>) -> Self {
        ConditionSource { path: path.into(), list: None }
    }

    pub fn preloaded(list: ConditionList) -> Self {
        ConditionSource { path: PathBuf::new(), list: Some(list) }
    }

    pub fn is_loaded(&self) -> bool {
        self.list.is_some()
    }

    pub fn line(&mut self, code: i32) -> Result<&str, VerifyError> {
        if self.list.is_none() {
            self.list = Some(ConditionList::load(&self.path)?);
        }
        self.list.as_ref().expect("loaded above").line(code)
    }
}

/// Whitespace-separated signed decimal codes, with a count of reads.
#[derive(Debug)]
pub struct AdviceStream<R> {
    reader: R,
    pending: Vec<String>,
    reads: usize,
}

impl<R: BufRead> AdviceStream<R> {
    pub fn new(reader: R) -> Self {
        AdviceStream { reader, pending: Vec::new(), reads: 0 }
    }

    /// Number of codes consumed so far.
    pub fn reads(&self) -> usize {
        self.reads
    }

    fn next_token(&mut self) -> io::Result<Option<String>> {
        while self.pending.is_empty() {
            let mut line = String::new();
            if self.reader.read_line(&mut line)? == 0 {
                return Ok(None);
            }
            self.pending = line.split_whitespace().rev().map(str::to_owned).collect();
        }
        Ok(self.pending.pop())
    }

    /// The next code; `at` names the box for diagnostics.
    pub fn next_code(&mut self, at: &BoxAddress) -> Result<i32, VerifyError> {
        let token = self.next_token()?.ok_or_else(|| VerifyError::AdviceEnded(at.to_string()))?;
        self.reads += 1;
        token
            .parse()
            .map_err(|_| VerifyError::BadAdvice { token, at: at.to_string() })
    }
}

/// Counters from one verification run.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifyStats {
    pub boxes: usize,
    pub exceptional: usize,
    pub certified: usize,
}

/// Verifies the box at `start` against the advice, writing each
/// exceptional leaf as `"<address> "`.
pub fn verify<R: BufRead, W: Write>(
    start: &BoxAddress,
    advice: &mut AdviceStream<R>,
    conditions: &mut ConditionSource,
    out: &mut W,
) -> Result<VerifyStats, VerifyError> {
    let mut stats = VerifyStats::default();
    verify_box(start, 0, advice, conditions, out, &mut stats)?;
    Ok(stats)
}

fn verify_box<R: BufRead, W: Write>(
    at: &BoxAddress,
    autocode: i32,
    advice: &mut AdviceStream<R>,
    conditions: &mut ConditionSource,
    out: &mut W,
    stats: &mut VerifyStats,
) -> Result<(), VerifyError> {
    if at.len() >= MAX_DEPTH {
        return Err(VerifyError::DepthExceeded(at.to_string()));
    }
    stats.boxes += 1;
    let code = if autocode == 0 { advice.next_code(at)? } else { autocode };
    if code < 0 {
        stats.exceptional += 1;
        write!(out, "{at} ")?;
        return Ok(());
    }
    if code > 0 {
        let text = conditions.line(code)?;
        let fail = |source| VerifyError::Condition { at: at.to_string(), source };
        let cond = Condition::parse(text).map_err(fail)?;
        if inequality_holds(&cond, at).map_err(fail)? {
            stats.certified += 1;
            return Ok(());
        }
    }
    verify_box(&at.child(0), code, advice, conditions, out, stats)?;
    verify_box(&at.child(1), code, advice, conditions, out, stats)
}

/// [`run_cli_with_env`] without a setup hook.
pub fn run_cli<R: BufRead, W: Write, E: Write>(args: &[String], advice: R, out: W, err: E) -> i32 {
    run_cli_with_env(args, advice, out, err, |_| {})
}

/// The `verify` program: `args[0]` is the program name. `setup` runs
/// once the floating-point environment is armed and before verification.
pub fn run_cli_with_env<R: BufRead, W: Write, E: Write>(
    args: &[String],
    advice: R,
    mut out: W,
    mut err: E,
    setup: impl FnOnce(&FpEnvironment),
) -> i32 {
    let prog = args.first().map(String::as_str).unwrap_or("verify");
    let Some((position, list_path)) = parse_args(args.get(1..).unwrap_or(&[])) else {
        let _ = writeln!(err, "Usage: {prog} position < data");
        return 1;
    };
    if !position.bytes().all(|b| b == b'0' || b == b'1') {
        let _ = writeln!(err, "bad position {position}");
        return 1;
    }
    match run(position, list_path, advice, &mut out, setup) {
        Ok(true) => {
            let _ = writeln!(out, "}}.");
            let _ = out.flush();
            0
        }
        Ok(false) => {
            let _ = writeln!(out, ". underflow may have occurred");
            let _ = out.flush();
            1
        }
        Err(e) => {
            let _ = out.flush();
            let _ = writeln!(err, "{e}");
            1
        }
    }
}

fn run<R: BufRead, W: Write>(
    position: &str,
    list_path: PathBuf,
    advice: R,
    out: &mut W,
    setup: impl FnOnce(&FpEnvironment),
) -> Result<bool, VerifyError> {
    write!(out, "verified fudging {position} - {{ ")?;
    let env = initialize_roundoff()?;
    setup(&env);
    let start =
        BoxAddress::parse(position).map_err(|_| VerifyError::DepthExceeded(position.to_owned()))?;
    let mut advice = AdviceStream::new(advice);
    let mut conditions = ConditionSource::from_path(list_path);
    verify(&start, &mut advice, &mut conditions, out)?;
    Ok(env.roundoff_ok())
}

fn parse_args(args: &[String]) -> Option<(&str, PathBuf)> {
    let mut position = None;
    let mut list = PathBuf::from(DEFAULT_CONDITIONLIST);
    let mut it = args.iter();
    while let Some(a) = it.next() {
        if let Some(p) = a.strip_prefix("--conditionlist=") {
            list = PathBuf::from(p);
        } else if a == "--conditionlist" {
            list = PathBuf::from(it.next()?);
        } else if position.replace(a.as_str()).is_some() {
            return None;
        }
    }
    Some((position?, list))
}
