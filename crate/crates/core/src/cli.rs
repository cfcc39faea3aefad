//! The `lrgen` command line.
//!
//! Exit codes: 0 success, 1 verification failure or disagreement, 2 input
//! error, 3 resource guard.

use std::io::{Read, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::error::Error;
use crate::field::FieldParam;
use crate::generic_ext::generic_extension;
use crate::oracle::{dyn_field, OracleConfig, DEFAULT_ENUM_LIMIT, DEFAULT_SIZE_BOUND};
use crate::picket::{end_dim, hom_dim, hom_leq, H1Object};
use crate::star::{fill, star_ext, star_lr1_traced};
use crate::tableau::{AnyTableau, Convention, ExtTableau};
use crate::verify::{self, Suite, VerifyParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "lrgen",
    version,
    about = "LR-tableaux with entries 1 and generic extensions in H_1"
)]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    cmd: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RenderArg {
    Definition,
    #[value(name = "paper")]
    Conjugate,
}

impl From<RenderArg> for Convention {
    fn from(r: RenderArg) -> Self {
        match r {
            RenderArg::Definition => Convention::Definition,
            RenderArg::Conjugate => Convention::Conjugate,
        }
    }
}

#[derive(Debug, Args)]
struct FieldArgs {
    /// Prime of the oracle's field.
    #[arg(long, default_value_t = 2)]
    prime: u32,
    /// Largest enumerated dimension (p^dim elements).
    #[arg(long, default_value_t = DEFAULT_ENUM_LIMIT)]
    max_dim: usize,
    /// Largest admissible b_M + b_N.
    #[arg(long, default_value_t = DEFAULT_SIZE_BOUND)]
    bound: usize,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Y * X of two tableaux (plain or with `free=`).
    Star {
        y: String,
        x: String,
        #[arg(long)]
        render: Option<RenderArg>,
        /// Print the running counters of the LR_1 product.
        #[arg(long)]
        trace: bool,
    },
    /// (∅, n) * (X, 0).
    Fill {
        x: String,
        n: u64,
        #[arg(long)]
        render: Option<RenderArg>,
    },
    /// Tableau to picket form.
    Decompose { tableau: String },
    /// Picket form to tableau.
    Compose { object: String },
    /// dim Hom(M, N).
    Homdim {
        m: String,
        n: String,
        /// Compute with matrices over F_p instead of the table.
        #[arg(long)]
        matrix: bool,
        #[arg(long, default_value_t = 2)]
        prime: u32,
    },
    /// Picket-tested hom-order M <=_hom N.
    Homorder { m: String, n: String },
    /// dim End(M).
    Endo { m: String },
    /// Generic extension N * M.
    Genext { n: String, m: String },
    /// Brute-force generic extension compared with the combinatorial one.
    Oracle {
        n: String,
        m: String,
        #[command(flatten)]
        field: FieldArgs,
        /// Print the matrix realizations of N and M.
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Exhaustive verification suites.
    Verify {
        /// table, roundtrip, main, assoc, lemmas, fields, routes, minimal or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_b: u32,
        /// Largest number of P1^0 summands per object.
        #[arg(long, default_value_t = 2)]
        max_free: usize,
        #[command(flatten)]
        field: FieldArgs,
        /// Random triples for the assoc suite.
        #[arg(long, default_value_t = 10_000)]
        trials: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

/// Failure of a command, carrying its exit code.
struct Failure {
    code: i32,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::SearchSpaceTooLarge { .. } | Error::SizeGuard { .. } => EXIT_GUARD,
            Error::NonUniqueMinimum { .. } => EXIT_FAILED,
            _ => EXIT_INPUT,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

/// Resolves `-` arguments to successive lines of stdin.
struct Inputs<'a> {
    stdin: &'a mut dyn Read,
    lines: Option<std::vec::IntoIter<String>>,
}

impl Inputs<'_> {
    fn get(&mut self, arg: &str) -> Result<String, Failure> {
        if arg != "-" {
            return Ok(arg.to_string());
        }
        if self.lines.is_none() {
            let mut buf = String::new();
            self.stdin.read_to_string(&mut buf).map_err(|e| Failure {
                code: EXIT_INPUT,
                msg: format!("reading stdin: {e}"),
            })?;
            let lines: Vec<String> = buf
                .lines()
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .map(String::from)
                .collect();
            self.lines = Some(lines.into_iter());
        }
        self.lines.as_mut().and_then(Iterator::next).ok_or(Failure {
            code: EXIT_INPUT,
            msg: "stdin has fewer lines than `-` arguments".into(),
        })
    }

    fn tableau(&mut self, arg: &str) -> Result<AnyTableau, Failure> {
        Ok(self.get(arg)?.parse::<AnyTableau>()?)
    }

    fn object(&mut self, arg: &str) -> Result<H1Object, Failure> {
        Ok(self.get(arg)?.parse::<H1Object>()?)
    }
}

/// Plain-text lines plus the JSON mirror of a command's output.
struct Output {
    lines: Vec<String>,
    json: Value,
    code: i32,
}

impl Output {
    fn single(text: String, json: Value) -> Self {
        Output {
            lines: vec![text],
            json,
            code: EXIT_OK,
        }
    }
}

fn tableau_json(t: &AnyTableau) -> Value {
    let mut v = json!({
        "result": t.to_string(),
        "beta": t.tab().beta(),
        "gamma": t.tab().gamma(),
    });
    if let AnyTableau::Ext(e) = t {
        v["free"] = json!(e.free);
    }
    v
}

fn render_lines(t: &AnyTableau, render: Option<RenderArg>, out: &mut Output) {
    if let Some(r) = render {
        let drawing = t.tab().render(r.into());
        out.lines.push(String::new());
        out.lines.extend(drawing.lines().map(String::from));
        out.json["render"] = json!(drawing);
    }
}

fn oracle_config(field: &FieldArgs) -> Result<(FieldParam, OracleConfig), Failure> {
    Ok((
        FieldParam::new(field.prime)?,
        OracleConfig {
            enum_limit: field.max_dim,
            size_bound: field.bound,
        },
    ))
}

fn execute(cmd: Command, inputs: &mut Inputs<'_>) -> Result<Output, Failure> {
    match cmd {
        Command::Star { y, x, render, trace } => {
            let (y, x) = (inputs.tableau(&y)?, inputs.tableau(&x)?);
            let extended = y.is_ext() || x.is_ext();
            let (ye, xe) = (y.into_ext(), x.into_ext());
            let (filled, leftover) = fill(&xe.tab, ye.free);
            let (z, steps) = star_lr1_traced(&filled, &ye.tab);
            let result = if extended {
                let ext = ExtTableau::new(z, leftover + xe.free);
                debug_assert_eq!(ext, star_ext(&xe, &ye));
                AnyTableau::Ext(ext)
            } else {
                AnyTableau::Plain(z)
            };
            let mut out = Output::single(result.to_string(), tableau_json(&result));
            if trace {
                let counters: Vec<String> = steps
                    .counters
                    .iter()
                    .enumerate()
                    .map(|(i, n)| format!("n_{i}={n}"))
                    .collect();
                out.lines.push(format!("trace: {}", counters.join(" ")));
                out.json["trace"] = json!(steps.counters);
            }
            render_lines(&result, render, &mut out);
            Ok(out)
        }
        Command::Fill { x, n, render } => {
            let x = inputs.tableau(&x)?;
            let (z, left) = fill(x.tab(), n);
            let result = AnyTableau::Ext(ExtTableau::new(z, left));
            let mut out = Output::single(result.to_string(), tableau_json(&result));
            render_lines(&result, render, &mut out);
            Ok(out)
        }
        Command::Decompose { tableau } => {
            let t = inputs.tableau(&tableau)?.into_ext();
            let obj = H1Object::from_ext_tableau(&t);
            Ok(Output::single(
                obj.to_string(),
                json!({ "result": obj.to_string() }),
            ))
        }
        Command::Compose { object } => {
            let obj = inputs.object(&object)?;
            let t = AnyTableau::Ext(obj.gamma_hat());
            Ok(Output::single(t.to_string(), tableau_json(&t)))
        }
        Command::Homdim { m, n, matrix, prime } => {
            let (m, n) = (inputs.object(&m)?, inputs.object(&n)?);
            let d = if matrix {
                dyn_field::hom_dim(&m, &n, FieldParam::new(prime)?)
            } else {
                hom_dim(&m, &n)
            };
            Ok(Output::single(d.to_string(), json!({ "result": d })))
        }
        Command::Homorder { m, n } => {
            let (m, n) = (inputs.object(&m)?, inputs.object(&n)?);
            let leq = hom_leq(&m, &n)?;
            let word = if leq { "LEQ" } else { "NOT_LEQ" };
            Ok(Output::single(word.into(), json!({ "result": word })))
        }
        Command::Endo { m } => {
            let d = end_dim(&inputs.object(&m)?);
            Ok(Output::single(d.to_string(), json!({ "result": d })))
        }
        Command::Genext { n, m } => {
            let (n, m) = (inputs.object(&n)?, inputs.object(&m)?);
            let u = generic_extension(&n, &m);
            Ok(Output::single(u.to_string(), json!({ "result": u.to_string() })))
        }
        Command::Oracle {
            n,
            m,
            field,
            dump_matrices,
        } => {
            let (n, m) = (inputs.object(&n)?, inputs.object(&m)?);
            let (fp, cfg) = oracle_config(&field)?;
            let brute = dyn_field::brute_generic_ext(&n, &m, fp, &cfg)?;
            let comb = generic_extension(&n, &m);
            let agree = brute.generic == comb;
            let verdict = if agree { "AGREE" } else { "DISAGREE" };
            let exts: Vec<String> = brute.extensions.iter().map(|u| u.to_string()).collect();
            let mut lines = vec![
                format!("oracle: {}", brute.generic),
                format!("combinatorial: {comb}"),
                format!("end_dim: {}", brute.end_dim),
                format!("extensions: {}", exts.join(" ")),
                verdict.to_string(),
            ];
            let mut js = json!({
                "oracle": brute.generic.to_string(),
                "combinatorial": comb.to_string(),
                "end_dim": brute.end_dim,
                "extensions": exts,
                "verdict": verdict,
            });
            if dump_matrices {
                let dumps = [("N", &n), ("M", &m)].map(|(name, o)| (name, dyn_field::realize_dump(o, fp)));
                for (name, d) in &dumps {
                    lines.push(format!("{name}:"));
                    lines.extend(d.lines().map(String::from));
                    js[format!("matrices_{name}")] = json!(d);
                }
            }
            Ok(Output {
                lines,
                json: js,
                code: if agree { EXIT_OK } else { EXIT_FAILED },
            })
        }
        Command::Verify {
            suite,
            max_b,
            max_free,
            field,
            trials,
            seed,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                suite
                    .split(',')
                    .map(|s| s.trim().parse::<Suite>())
                    .collect::<Result<_, _>>()?
            };
            let (fp, cfg) = oracle_config(&field)?;
            let params = VerifyParams {
                max_b,
                max_free,
                field: fp,
                trials,
                seed,
                oracle: cfg,
                ..VerifyParams::default()
            };
            let mut lines = Vec::new();
            let mut reports = Vec::new();
            let mut ok = true;
            for s in suites {
                let r = verify::run(s, &params)?;
                ok &= r.passed();
                lines.push(r.to_string());
                lines.extend(r.failures.iter().take(20).map(|f| format!("  {f}")));
                reports.push(json!({
                    "suite": r.suite,
                    "checked": r.checked,
                    "failed": r.failures.len(),
                    "passed": r.passed(),
                    "failures": r.failures,
                }));
            }
            Ok(Output {
                lines,
                json: json!({ "suites": reports, "passed": ok }),
                code: if ok { EXIT_OK } else { EXIT_FAILED },
            })
        }
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut inputs = Inputs { stdin, lines: None };
    match execute(cli.cmd, &mut inputs) {
        Ok(out) => {
            let text = if cli.json {
                format!("{}\n", out.json)
            } else {
                let mut s = out.lines.join("\n");
                s.push('\n');
                s
            };
            let _ = stdout.write_all(text.as_bytes());
            out.code
        }
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.msg);
            f.code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        call_with_stdin(args, "")
    }

    fn call_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut full = vec!["lrgen"];
        full.extend_from_slice(args);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(full, &mut stdin.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn star_plain_and_trace() {
        let (code, out, _) = call(&[
            "star",
            "--trace",
            "beta=4,3,2,2,1,1;gamma=3,3,2,1,1,1",
            "beta=5,4,3,3,1;gamma=4,4,2,2",
        ]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "beta=8,7,5,4,2,2,1;gamma=7,7,4,3,1,1\ntrace: n_0=0 n_1=1 n_2=1 n_3=1 n_4=2 n_5=2 n_6=1\n"
        );
    }

    #[test]
    fn stdin_arguments() {
        let (code, out, _) = call_with_stdin(
            &["star", "-", "-"],
            "beta=0;gamma=0\nbeta=5,4,3,3,1;gamma=4,4,2,2\n",
        );
        assert_eq!(code, 0);
        assert_eq!(out, "beta=5,4,3,3,1;gamma=4,4,2,2\n");
        let (code, _, err) = call_with_stdin(&["star", "-", "-"], "beta=0;gamma=0\n");
        assert_eq!(code, 2);
        assert!(err.contains("fewer lines"));
    }

    #[test]
    fn input_errors_exit_2() {
        let (code, _, err) = call(&["star", "beta=1;gamma=3", "beta=0;gamma=0"]);
        assert_eq!(code, 2);
        assert!(err.contains("NotContained"), "{err}");
        let (code, _, err) = call(&["star", "beta=3;gamma=1", "beta=0;gamma=0"]);
        assert_eq!(code, 2);
        assert!(err.contains("NotHorizontalStrip"), "{err}");
        let (code, _, _) = call(&["nonsense"]);
        assert_eq!(code, 2);
        let (code, _, err) = call(&["homorder", "P1^2", "P0^2"]);
        assert_eq!(code, 2);
        assert!(err.contains("IncomparableInvariants"));
    }

    #[test]
    fn guard_exit_3() {
        let (code, _, err) = call(&["oracle", "--bound", "2", "P0^2", "P0^1"]);
        assert_eq!(code, 3);
        assert!(err.contains("size guard"));
        let (code, _, err) = call(&["oracle", "--max-dim", "0", "P1^0", "P0^1"]);
        assert_eq!(code, 3);
        assert!(err.contains("SearchSpaceTooLarge"));
    }

    #[test]
    fn json_mirrors_text() {
        let (code, out, _) = call(&["--json", "genext", "P1^0", "P0^1"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"], "P1^1");
        let (_, out, _) = call(&["--json", "fill", "beta=5,4,3,3,1;gamma=4,4,3,2,1", "5"]);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["result"], "beta=5,4,3,3,1;gamma=4,3,2,2;free=2");
        assert_eq!(v["gamma"], json!([4, 3, 2, 2]));
        assert_eq!(v["free"], 2);
    }

    #[test]
    fn dump_matrices() {
        let (code, out, _) = call(&["oracle", "--dump-matrices", "P1^0", "P1^2"]);
        assert_eq!(code, 0);
        assert!(out.contains("M:\na=1 n=2\nJ\n0 0\n1 0\nf\n0\n1\n"), "{out}");
    }
}
