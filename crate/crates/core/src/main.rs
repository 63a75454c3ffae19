use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use sylowchar::error::Error;
use sylowchar::lr::{lr_coefficient, lr_types_within};
use sylowchar::multiplicity::{
    verify_d_equals_a, verify_lemma_tables, verify_prime_power, verify_theorem_a,
    MultiplicityReport, SylowMultiplicity, ZeroSetCheck,
};
use sylowchar::omega::{omega_from, residue_decompose};
use sylowchar::partition::{partition_count, Partition, SkewShape};
use sylowchar::sylow::{distribution_within, enumeration_oracle};
use sylowchar::Limits;

#[derive(Parser)]
#[command(name = "sylowchar", version, about = "Sylow restrictions of symmetric-group characters")]
struct Cli {
    /// Worker threads for parallel scans (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// f(λ) for one partition, or the full report over P(n)
    Multiplicity {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        lambda: Option<Partition>,
    },
    /// Run a verification suite
    Verify {
        #[command(subcommand)]
        subject: Subject,
    },
    /// Littlewood–Richardson coefficient c^λ_{μν}
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Partition,
    },
    /// Contents of all LR fillings of a skew shape
    LrTypes {
        #[arg(long)]
        outer: Partition,
        #[arg(long)]
        inner: Partition,
    },
    /// Ω_q(λ)
    Omega {
        #[arg(long)]
        q: u32,
        #[arg(long)]
        lambda: Partition,
    },
    /// Cycle-type distribution of a Sylow p-subgroup of S_n
    SylowClasses {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
        /// Also enumerate the group and compare
        #[arg(long)]
        oracle: bool,
    },
    /// Number of λ ⊢ n with f(λ) > 0
    ConstituentCount {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: u64,
    },
}

#[derive(Subcommand)]
enum Subject {
    /// Zero sets for every n ≤ max-n against the predicted exceptions
    TheoremA {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        max_n: u64,
    },
    /// Zero set at n = p^k
    PrimePower {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
    },
    /// Compare A(q,p^k) with D(q,p^k) over P(q p^k)
    Dset {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        /// Pass when A strictly contains D
        #[arg(long)]
        expect_unequal: bool,
    },
    /// The (λ; γ, δ) constituent tables at p^k
    Tables {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
    },
}

/// Rendered output plus whether every check passed.
struct Outcome {
    text: String,
    json: Value,
    pass: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, pass: true }
    }
}

fn list(parts: &[Partition]) -> String {
    let items: Vec<String> = parts.iter().map(|p| format!("{p:?}")).collect();
    format!("[{}]", items.join(", "))
}

fn verdict(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn zero_set_line(c: &ZeroSetCheck) -> String {
    format!(
        "n={:<3} {}  zero set {} (expected {}, {} partitions)\n",
        c.n,
        verdict(c.pass),
        list(&c.found),
        list(&c.expected),
        c.scanned
    )
}

fn run(cmd: Command, limits: &Limits) -> sylowchar::Result<Outcome> {
    match cmd {
        Command::Multiplicity { p, n, lambda: Some(lambda) } => {
            let m = SylowMultiplicity::with_limits(p, n, limits)?.multiplicity(&lambda)?;
            Ok(Outcome::ok(
                format!("{m}\n"),
                json!({"prime": p, "degree": n, "partition": lambda, "multiplicity": m.to_string()}),
            ))
        }
        Command::Multiplicity { p, n, lambda: None } => {
            let r = MultiplicityReport::compute(p, n, limits)?;
            let width = r.entries.iter().map(|(l, _)| l.to_string().len()).max().unwrap_or(0);
            let mut text = String::new();
            for (l, m) in &r.entries {
                text += &format!("{:<width$}  {m}\n", l.to_string());
            }
            text += &format!("zero set: {}\n", list(&r.zero_set));
            text += &format!("degree identity: {}\n", verdict(r.degree_identity));
            text += &format!("conjugation symmetry: {}\n", verdict(r.conjugation_symmetry));
            Ok(Outcome {
                pass: r.degree_identity && r.conjugation_symmetry,
                json: r.to_json(),
                text,
            })
        }
        Command::Verify { subject } => run_verify(subject, limits),
        Command::Lr { lambda, mu, nu } => {
            let c = lr_coefficient(&lambda, &mu, &nu)?;
            Ok(Outcome::ok(
                format!("{c}\n"),
                json!({"lambda": lambda, "mu": mu, "nu": nu, "coefficient": c}),
            ))
        }
        Command::LrTypes { outer, inner } => {
            let shape = SkewShape::new(outer.clone(), inner.clone())?;
            let mut types: Vec<Partition> =
                lr_types_within(&shape, limits.max_type_cells)?.into_iter().collect();
            types.sort_by(|a, b| b.cmp(a));
            Ok(Outcome::ok(
                format!("{}\n", list(&types)),
                json!({"outer": outer, "inner": inner, "types": types}),
            ))
        }
        Command::Omega { q, lambda } => {
            let dec = residue_decompose(&lambda, q)?;
            let out = omega_from(&dec);
            Ok(Outcome::ok(
                format!("{out}\n"),
                json!({"q": q, "lambda": lambda, "zeta": dec.zeta, "omega": out}),
            ))
        }
        Command::SylowClasses { p, n, oracle } => {
            let dist = distribution_within(p, n, limits.max_n.into())?;
            let mut pass = true;
            let mut text = String::new();
            let width = dist.iter().map(|(t, _)| t.to_string().len()).max().unwrap_or(0);
            for (t, c) in dist.iter() {
                text += &format!("{:<width$}  {c}\n", t.to_string());
            }
            text += &format!("types: {}, total: {}\n", dist.len(), dist.total());
            let mut json = serde_json::to_value(dist.to_json()).expect("serializable");
            if oracle {
                pass = enumeration_oracle(p, n)? == dist;
                text += &format!("enumeration oracle: {}\n", verdict(pass));
                json["oracle_match"] = Value::Bool(pass);
            }
            Ok(Outcome { text, json, pass })
        }
        Command::ConstituentCount { p, n } => {
            let r = MultiplicityReport::compute(p, n, limits)?;
            let count = r.constituent_count();
            Ok(Outcome {
                text: format!("{count}\n"),
                json: json!({
                    "prime": p,
                    "degree": n,
                    "partitions": partition_count(n as u32).to_string(),
                    "constituents": count,
                }),
                pass: r.degree_identity && r.conjugation_symmetry,
            })
        }
    }
}

fn run_verify(subject: Subject, limits: &Limits) -> sylowchar::Result<Outcome> {
    match subject {
        Subject::TheoremA { p, max_n } => {
            let r = verify_theorem_a(p, max_n, limits)?;
            let mut text: String = r.rows.iter().map(zero_set_line).collect();
            text += &format!("theorem-a p={p} n<={max_n}: {}\n", verdict(r.pass));
            Ok(Outcome {
                pass: r.pass,
                json: serde_json::to_value(&r).expect("serializable"),
                text,
            })
        }
        Subject::PrimePower { p, k } => {
            let r = verify_prime_power(p, k, limits)?;
            Ok(Outcome {
                pass: r.pass,
                text: zero_set_line(&r),
                json: serde_json::to_value(&r).expect("serializable"),
            })
        }
        Subject::Dset { q, p, k, expect_unequal } => {
            let r = verify_d_equals_a(q, p, k, limits)?;
            let pass = if expect_unequal {
                !r.equal && r.d_minus_a.is_empty()
            } else {
                r.equal
            };
            let mut text = format!(
                "scanned {} partitions: |A| = {}, |D| = {}\n",
                r.scanned,
                r.sets.a_set.len(),
                r.sets.d_set.len()
            );
            text += &format!("A \\ D: {}\n", list(&r.a_minus_d));
            text += &format!("D \\ A: {}\n", list(&r.d_minus_a));
            for w in r.sets.witnesses.iter().take(5) {
                text += &format!("witness {:?}: {}\n", w.partition, list(&w.tuple));
            }
            let relation = if r.equal { "A = D" } else { "A != D" };
            text += &format!("dset q={q} p={p} k={k}: {relation}, {}\n", verdict(pass));
            let mut json = serde_json::to_value(&r).expect("serializable");
            json["pass"] = Value::Bool(pass);
            Ok(Outcome { text, json, pass })
        }
        Subject::Tables { p, k } => {
            let r = verify_lemma_tables(p, k, limits)?;
            let mut text = String::new();
            for c in &r.checks {
                text += &format!(
                    "{} {:<22} {:?} ; {:?}, {:?}  c = {}\n",
                    verdict(c.pass),
                    c.row.label,
                    c.row.lambda,
                    c.row.gamma,
                    c.row.delta,
                    c.coefficient
                );
            }
            text += &format!("tables p^k={}: {}\n", p.pow(k), verdict(r.pass));
            Ok(Outcome {
                pass: r.pass,
                json: serde_json::to_value(&r).expect("serializable"),
                text,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let limits = match Limits::from_env() {
        Ok(l) => l,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match run(cli.command, &limits) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ Error::Inexact { .. }) => {
            eprintln!("internal error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
