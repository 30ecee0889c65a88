//! Class groups through an external computer-algebra subprocess.
//!
//! The query is one line of GP script on stdin. The reply is read from stdout:
//! a `version:` line, the class-group elementary divisors as one bracketed
//! integer list, and a `certified:` line when a rigorous check was requested.

use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::thread;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::CasError;
use crate::poly::IntPolynomial;

pub const ENV_BINARY: &str = "PGL2_CAS";
pub const ENV_CONFIG: &str = "PGL2_CAS_CONFIG";
pub const DEFAULT_TIMEOUT_SECS: u64 = 300;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct CasConfig {
    pub binary: PathBuf,
    pub args: Vec<String>,
    pub timeout_secs: u64,
    pub log_dir: Option<PathBuf>,
    /// Width of the worker pool for batch queries.
    pub workers: usize,
}

impl Default for CasConfig {
    fn default() -> Self {
        CasConfig {
            binary: PathBuf::new(),
            args: vec!["-q".into(), "-f".into()],
            timeout_secs: DEFAULT_TIMEOUT_SECS,
            log_dir: None,
            workers: 2,
        }
    }
}

impl CasConfig {
    pub fn with_binary(binary: impl Into<PathBuf>) -> Self {
        CasConfig { binary: binary.into(), ..Default::default() }
    }

    pub fn from_toml_file(path: &Path) -> Result<Self, CasError> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| CasError::Config(format!("{}: {e}", path.display())))
    }

    /// Resolution order: explicit path, `PGL2_CAS`, then the TOML file named by
    /// `PGL2_CAS_CONFIG`.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self, CasError> {
        let mut cfg = match std::env::var_os(ENV_CONFIG) {
            Some(p) => Self::from_toml_file(Path::new(&p))?,
            None => CasConfig::default(),
        };
        if let Some(b) = std::env::var_os(ENV_BINARY) {
            cfg.binary = PathBuf::from(b);
        }
        if let Some(p) = explicit {
            cfg.binary = p.to_path_buf();
        }
        if cfg.binary.as_os_str().is_empty() {
            return Err(CasError::NotConfigured);
        }
        Ok(cfg)
    }

    pub fn timeout(&self) -> Duration {
        Duration::from_secs(self.timeout_secs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CasReport {
    #[serde(with = "bigint_strings")]
    pub class_group_invariants: Vec<BigInt>,
    pub n: u64,
    pub computed_rank_n: usize,
    pub tool_version: String,
    pub certified: bool,
    pub transcript: Option<PathBuf>,
}

impl CasReport {
    pub fn class_number(&self) -> BigInt {
        self.class_group_invariants.iter().product()
    }

    /// Invariant: the stored rank agrees with the invariants.
    pub fn is_consistent(&self) -> bool {
        rank_n(&self.class_group_invariants, self.n) == self.computed_rank_n
    }
}

/// Number of elementary divisors divisible by `n`.
pub fn rank_n(invariants: &[BigInt], n: u64) -> usize {
    let n = BigInt::from(n);
    invariants.iter().filter(|d| d.is_multiple_of(&n)).count()
}

/// The GP script for one query.
pub fn query_script(p: &IntPolynomial, rigorous: bool) -> String {
    let poly = p.display_in("x").replace(' ', "");
    // Fundamental units in expanded form are only needed for certification.
    let flag = u8::from(rigorous);
    let mut s = format!(
        "default(parisizemax,\"4G\");print(\"version:\",version());K=bnfinit(polredbest({poly}),{flag});print(K.cyc);"
    );
    if rigorous {
        s.push_str("print(\"certified:\",bnfcertify(K));");
    }
    s.push_str("quit");
    s
}

#[derive(Debug, PartialEq, Eq)]
pub struct ParsedReply {
    pub invariants: Vec<BigInt>,
    pub version: String,
    pub certified: Option<bool>,
}

fn parse_list(line: &str) -> Option<Vec<BigInt>> {
    let inner = line.trim().strip_prefix('[')?.strip_suffix(']')?;
    if inner.trim().is_empty() {
        return Some(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse::<BigInt>().ok()).collect()
}

pub fn parse_reply(stdout: &str) -> Result<ParsedReply, CasError> {
    let mut version = String::new();
    let mut certified = None;
    let mut lists = Vec::new();
    for line in stdout.lines().map(str::trim) {
        if let Some(v) = line.strip_prefix("version:") {
            version = v.trim().to_string();
        } else if let Some(c) = line.strip_prefix("certified:") {
            certified = Some(c.trim() == "1");
        } else if let Some(l) = parse_list(line) {
            lists.push(l);
        }
    }
    match lists.len() {
        1 => {
            let invariants = lists.pop().expect("one list");
            if invariants.iter().any(|d| d <= &BigInt::zero()) {
                return Err(CasError::Parse(format!("nonpositive invariant in {invariants:?}")));
            }
            Ok(ParsedReply { invariants, version, certified })
        }
        0 => Err(CasError::Parse(format!("no bracketed integer list in reply: {stdout:?}"))),
        k => Err(CasError::Parse(format!("{k} bracketed lists in reply, expected one"))),
    }
}

struct Exchange {
    stdout: String,
    stderr: String,
}

fn run(cfg: &CasConfig, script: &str) -> Result<Exchange, CasError> {
    let mut child = Command::new(&cfg.binary)
        .args(&cfg.args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .map_err(|e| CasError::Missing(format!("{}: {e}", cfg.binary.display())))?;
    {
        let mut stdin = child.stdin.take().expect("piped stdin");
        // A binary that exits early closes the pipe; the exit status reports it.
        let _ = stdin.write_all(script.as_bytes()).and_then(|_| stdin.write_all(b"\n"));
    }
    let mut out = child.stdout.take().expect("piped stdout");
    let mut err = child.stderr.take().expect("piped stderr");
    let out_reader = thread::spawn(move || {
        let mut s = String::new();
        let _ = out.read_to_string(&mut s);
        s
    });
    let err_reader = thread::spawn(move || {
        let mut s = String::new();
        let _ = err.read_to_string(&mut s);
        s
    });
    let start = Instant::now();
    let status = loop {
        if let Some(status) = child.try_wait()? {
            break status;
        }
        if start.elapsed() >= cfg.timeout() {
            let _ = child.kill();
            let _ = child.wait();
            return Err(CasError::Timeout { seconds: cfg.timeout_secs });
        }
        thread::sleep(Duration::from_millis(20));
    };
    let stdout = out_reader.join().unwrap_or_default();
    let stderr = err_reader.join().unwrap_or_default();
    if !status.success() {
        return Err(CasError::Failed { status: status.to_string(), stderr });
    }
    Ok(Exchange { stdout, stderr })
}

fn write_transcript(
    dir: &Path,
    script: &str,
    result: &Result<Exchange, CasError>,
) -> std::io::Result<PathBuf> {
    std::fs::create_dir_all(dir)?;
    let mut h = DefaultHasher::new();
    script.hash(&mut h);
    let path = dir.join(format!("cas-{:016x}.txt", h.finish()));
    let mut body = format!("# query\n{script}\n");
    match result {
        Ok(x) => body.push_str(&format!("# stdout\n{}\n# stderr\n{}\n", x.stdout, x.stderr)),
        Err(e) => body.push_str(&format!("# error\n{e}\n")),
    }
    std::fs::write(&path, body)?;
    Ok(path)
}

/// Class group of `Q[x]/(P)` and its n-rank.
///
/// `certified` is true only when a rigorous check was requested and succeeded;
/// otherwise the class group is conditional on the CAS's default bounds.
pub fn cas_classgroup(
    cfg: &CasConfig,
    p: &IntPolynomial,
    n: u64,
    rigorous: bool,
) -> Result<CasReport, CasError> {
    let script = query_script(p, rigorous);
    let result = run(cfg, &script);
    let transcript = match &cfg.log_dir {
        Some(dir) => Some(write_transcript(dir, &script, &result)?),
        None => None,
    };
    let exchange = result?;
    let parsed = parse_reply(&exchange.stdout)?;
    let computed_rank_n = rank_n(&parsed.invariants, n);
    Ok(CasReport {
        class_group_invariants: parsed.invariants,
        n,
        computed_rank_n,
        tool_version: parsed.version,
        certified: rigorous && parsed.certified == Some(true),
        transcript,
    })
}

mod bigint_strings {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
        v.iter().map(|x| x.to_string()).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
        Vec::<String>::deserialize(d)?
            .into_iter()
            .map(|s| s.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}
