use std::fs::File;
use std::io::{self, BufRead, BufReader, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use glinf::ghat::{commutator_formula_check, singular_search, Band};
use glinf::lr::{decompose_symmetric, lr_coefficient, schur_poly, tensor_decompose};
use glinf::polymodel::{cauchy_character_check, decomposition_report, verify_singular_space};
use glinf::reciprocity::{induced_multiplicity, kac_radul_table, reciprocity_check, stable_bound};
use glinf::{Error, FiniteWeight, HalfInfiniteWeight, Partition, SemidominantWeight};
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "glinf", version, about = "Clebsch-Gordan coefficients, induced gl-infinity modules and their singular vectors")]
struct Cli {
    /// Output format; tsv applies to tables.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Littlewood-Richardson coefficient, or the full decomposition of λ ⊗ μ.
    Lr {
        lambda: String,
        mu: String,
        nu: Option<String>,
        #[arg(long)]
        row_bound: Option<usize>,
        /// Also decompose the product of Schur polynomials and compare.
        #[arg(long)]
        oracle: bool,
    },
    /// Constituents of S^d of the lower-left block for d <= dmax.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u32,
    },
    /// Dimension count of S^d against Σ #SSYT(λ, n)².
    Cauchy {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dmax: u32,
    },
    /// Joint kernel of the raising operators on polynomials of degree d.
    SingularPoly {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: u32,
    },
    /// Singular vectors of the induced module up to a level.
    SingularGhat {
        /// `minus|plus` partition bodies, e.g. `[1]|[2]`; trivial when omitted.
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
        /// Central charge: integer, fraction `p/q` or decimal.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        #[arg(long)]
        level_max: u32,
        #[arg(long)]
        band: Option<i32>,
    },
    /// Compares e_0 · Det_k^l v with its closed form.
    CommutatorCheck {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: u32,
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Multiplicity of L_{ν₁} ⊗ L_{ν₂} in the module induced from χ.
    Multiplicity {
        #[arg(long, allow_hyphen_values = true)]
        chi: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        nu_minus: String,
        #[arg(long, allow_hyphen_values = true)]
        nu_plus: String,
    },
    /// Both sides of the reciprocity identity.
    Reciprocity {
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        lambda_minus: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu_plus: Option<String>,
        /// Comma-separated ranks; defaults to three ranks from the stable bound.
        #[arg(long = "N-list", alias = "n-list")]
        n_list: Option<String>,
        /// JSON-lines file of triples.
        #[arg(long)]
        batch: Option<PathBuf>,
        /// Number of seeded random triples.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest partition size for random triples.
        #[arg(long, default_value_t = 4)]
        max_size: u32,
    },
    /// Table of C^ν_{λ,μ} over pairs with |λ|, |μ| <= size-bound.
    KacRadul {
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
        #[arg(long = "N", alias = "n")]
        n: usize,
        #[arg(long)]
        size_bound: u32,
    },
}

enum Failure {
    Usage(String),
    Check,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn cap(var: &str, default: u64) -> u64 {
    std::env::var(var).ok().and_then(|v| v.parse().ok()).unwrap_or(default)
}

fn check_cap(what: &str, var: &str, default: u64, value: u64) -> Outcome {
    let limit = cap(var, default);
    if value > limit {
        Err(Failure::Usage(Error::ResourceCap(format!("{what} = {value} exceeds {var} = {limit}")).to_string()))
    } else {
        Ok(())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, Failure> {
    let bad = || Failure::Usage(format!("cannot parse {s:?} as a rational number"));
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| bad())?;
        let q: i64 = q.trim().parse().map_err(|_| bad())?;
        if q == 0 {
            return Err(bad());
        }
        return Ok(BigRational::new(p.into(), q.into()));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.chars().all(|c| c.is_ascii_digit()) || frac.len() > 18 {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let whole: i64 = if int.is_empty() || int == "-" { 0 } else { int.parse().map_err(|_| bad())? };
        let scale = 10i64.pow(frac.len() as u32);
        let f: i64 = frac.parse().map_err(|_| bad())?;
        let num = whole.abs().checked_mul(scale).and_then(|x| x.checked_add(f)).ok_or_else(bad)?;
        let num = if negative { -num } else { num };
        return Ok(BigRational::new(num.into(), scale.into()));
    }
    let n: i64 = s.parse().map_err(|_| bad())?;
    Ok(BigRational::from_integer(n.into()))
}

/// Accepts a partition body `[a_1,...]` or, for negative type, the tail `[...,0,-a_1]`.
fn parse_half(s: &str, negative: bool) -> Result<HalfInfiniteWeight, Failure> {
    let entries = FiniteWeight::from_str(s)?.entries().to_vec();
    if negative {
        if entries.iter().any(|&x| x < 0) {
            let tail: Vec<i64> = entries.into_iter().skip_while(|&x| x == 0).collect();
            return Ok(HalfInfiniteWeight::from_tail(&tail)?);
        }
        Ok(HalfInfiniteWeight::negative(Partition::new(entries)?))
    } else {
        Ok(HalfInfiniteWeight::from_head(&entries)?)
    }
}

fn parse_chi(s: Option<&str>) -> Result<SemidominantWeight, Failure> {
    let Some(s) = s else { return Ok(SemidominantWeight::zero()) };
    let (minus, plus) = s
        .split_once('|')
        .ok_or_else(|| Failure::Usage(format!("expected `minus|plus` for χ, got {s:?}")))?;
    Ok(SemidominantWeight::new(parse_half(minus, true)?, parse_half(plus, false)?)?)
}

fn emit<T: Serialize>(value: &T) {
    let text = serde_json::to_string_pretty(value).expect("serializable");
    // a closed pipe just ends the output
    let _ = writeln!(io::stdout().lock(), "{text}");
}

fn print_text(text: &str) {
    let _ = io::stdout().lock().write_all(text.as_bytes());
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn run_lr(format: Format, lambda: &str, mu: &str, nu: Option<&str>, row_bound: Option<usize>, oracle: bool) -> Outcome {
    let (l, m) = (Partition::from_str(lambda)?, Partition::from_str(mu)?);
    check_cap("partition size", "GLINF_MAX_SIZE", 12, (l.size() + m.size()) as u64)?;
    if let Some(nu) = nu {
        let nu = Partition::from_str(nu)?;
        let c = lr_coefficient(&l, &m, &nu);
        let oracle_value = oracle.then(|| oracle_table(&l, &m).map(|t| t.get(&nu))).transpose()?;
        match format {
            Format::Tsv => print_text(&format!("{nu}\t{c}\n")),
            Format::Json => emit(&serde_json::json!({
                "lambda": l, "mu": m, "nu": nu, "coefficient": c, "oracle": oracle_value,
            })),
        }
        return verdict(oracle_value.is_none_or(|o| o == c));
    }
    let table = tensor_decompose(&l, &m, row_bound);
    let oracle_table = if oracle {
        let t = oracle_table(&l, &m)?;
        let bounded: glinf::DecompositionTable<Partition> =
            t.iter().filter(|(p, _)| row_bound.is_none_or(|b| p.len() <= b)).map(|(p, c)| (p.clone(), c)).collect();
        Some(bounded)
    } else {
        None
    };
    match format {
        Format::Tsv => print_text(&table.to_tsv()),
        Format::Json => emit(&serde_json::json!({
            "lambda": l, "mu": m, "row_bound": row_bound, "decomposition": table,
            "oracle_agrees": oracle_table.as_ref().map(|t| *t == table),
        })),
    }
    verdict(oracle_table.is_none_or(|t| t == table))
}

fn oracle_table(l: &Partition, m: &Partition) -> Result<glinf::DecompositionTable<Partition>, Failure> {
    let n = (l.len() + m.len()).max(1);
    Ok(decompose_symmetric(&(&schur_poly(l, n) * &schur_poly(m, n)), n)?)
}

#[derive(Deserialize)]
struct BatchLine {
    nu: FiniteWeight,
    lambda_minus: Vec<i64>,
    mu_plus: Vec<i64>,
    #[serde(default, alias = "N_list")]
    n_list: Option<Vec<usize>>,
}

type Triple = (FiniteWeight, HalfInfiniteWeight, HalfInfiniteWeight);

fn default_ranks(t: &Triple) -> Vec<usize> {
    let n = stable_bound(&t.0, &t.1, &t.2).max(1);
    vec![n, n + 1, n + 2]
}

fn random_triple(rng: &mut ChaCha8Rng, max_size: u32) -> Triple {
    let pick = |rng: &mut ChaCha8Rng, size: u32| Partition::all_of_size(size).choose(rng).expect("nonempty").clone();
    let d = rng.gen_range(0..=max_size);
    let (sa, sb) = (rng.gen_range(0..=max_size - d), rng.gen_range(0..=max_size - d));
    let a = pick(rng, sa);
    let b = pick(rng, sb);
    let mut grow = |base: &Partition| {
        let supersets: Vec<Partition> =
            Partition::all_of_size(base.size() + d).into_iter().filter(|p| p.contains(base)).collect();
        supersets.choose(rng).expect("a superset exists").clone()
    };
    let (l, m) = (grow(&a), grow(&b));
    let minus = HalfInfiniteWeight::negative(a);
    let plus = HalfInfiniteWeight::positive(b);
    let n = (minus.body.len() + plus.body.len()).max(1);
    let nu = FiniteWeight::assemble(&minus, &plus, n).expect("rank fits");
    (nu, HalfInfiniteWeight::negative(l), HalfInfiniteWeight::positive(m))
}

/// Runs one triple per item, printing one JSON line each, and a summary line.
fn run_reciprocity_stream<I>(items: I, summary: serde_json::Value) -> Outcome
where
    I: IntoIterator<Item = Result<(Triple, Option<Vec<usize>>), String>>,
{
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let (mut cases, mut failed, mut errors) = (0usize, 0usize, 0usize);
    for (line, item) in items.into_iter().enumerate() {
        cases += 1;
        let result = item.and_then(|(t, ns)| {
            let ns = ns.unwrap_or_else(|| default_ranks(&t));
            reciprocity_check(&t.0, &t.1, &t.2, &ns).map_err(|e| e.to_string())
        });
        let value = match result {
            Ok(r) => {
                failed += usize::from(!r.passed());
                serde_json::json!({ "case": line, "report": r })
            }
            Err(e) => {
                errors += 1;
                serde_json::json!({ "case": line, "error": e })
            }
        };
        if writeln!(out, "{value}").is_err() {
            return Ok(());
        }
    }
    let mut summary = summary;
    summary["cases"] = cases.into();
    summary["failed"] = failed.into();
    summary["errors"] = errors.into();
    let _ = writeln!(out, "{}", serde_json::json!({ "summary": summary }));
    if failed > 0 {
        Err(Failure::Check)
    } else if errors > 0 {
        Err(Failure::Usage(format!("{errors} of {cases} cases could not be evaluated")))
    } else {
        Ok(())
    }
}

#[allow(clippy::too_many_arguments)]
fn run_reciprocity(
    nu: Option<&str>,
    lambda_minus: Option<&str>,
    mu_plus: Option<&str>,
    n_list: Option<&str>,
    batch: Option<&PathBuf>,
    random: Option<usize>,
    seed: u64,
    max_size: u32,
) -> Outcome {
    let ranks = n_list
        .map(|s| {
            s.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| Failure::Usage(format!("bad rank list {s:?}"))))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    if let Some(path) = batch {
        let file = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        let items = BufReader::new(file).lines().filter(|l| l.as_ref().map_or(true, |s| !s.trim().is_empty())).map(|l| {
            let l = l.map_err(|e| e.to_string())?;
            let b: BatchLine = serde_json::from_str(&l).map_err(|e| format!("bad line: {e}"))?;
            let lm = HalfInfiniteWeight::negative(Partition::new(b.lambda_minus).map_err(|e| e.to_string())?);
            let mp = HalfInfiniteWeight::positive(Partition::new(b.mu_plus).map_err(|e| e.to_string())?);
            Ok(((b.nu, lm, mp), b.n_list.or_else(|| ranks.clone())))
        });
        return run_reciprocity_stream(items, serde_json::json!({ "batch": path.display().to_string() }));
    }
    if let Some(count) = random {
        check_cap("partition size", "GLINF_MAX_SIZE", 12, max_size as u64)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let triples: Vec<Triple> = (0..count).map(|_| random_triple(&mut rng, max_size)).collect();
        let items = triples.into_iter().map(|t| Ok((t, None)));
        return run_reciprocity_stream(items, serde_json::json!({ "seed": seed, "max_size": max_size }));
    }
    let (Some(nu), Some(l), Some(m)) = (nu, lambda_minus, mu_plus) else {
        return Err(Failure::Usage("give --nu, --lambda-minus and --mu-plus, or --batch, or --random".into()));
    };
    let t = (FiniteWeight::from_str(nu)?, parse_half(l, true)?, parse_half(m, false)?);
    let ns = ranks.unwrap_or_else(|| default_ranks(&t));
    let r = reciprocity_check(&t.0, &t.1, &t.2, &ns)?;
    emit(&r);
    verdict(r.passed())
}

fn run(cli: Cli) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Lr { lambda, mu, nu, row_bound, oracle } => run_lr(format, &lambda, &mu, nu.as_deref(), row_bound, oracle),
        Command::Decompose { n, dmax } => {
            check_cap("rank", "GLINF_MAX_RANK", 4, n as u64)?;
            check_cap("degree", "GLINF_MAX_DEGREE", 10, dmax as u64)?;
            let report = decomposition_report(n, dmax);
            match format {
                Format::Tsv => {
                    for d in &report {
                        for line in d.table.to_tsv().lines() {
                            print_text(&format!("{}\t{line}\n", d.degree));
                        }
                    }
                }
                Format::Json => emit(&report),
            }
            verdict(report.iter().all(|d| d.weight_mismatches.is_empty()))
        }
        Command::Cauchy { n, dmax } => {
            check_cap("rank", "GLINF_MAX_RANK", 4, n as u64)?;
            check_cap("degree", "GLINF_MAX_DEGREE", 10, dmax as u64)?;
            let r = cauchy_character_check(n, dmax);
            emit(&serde_json::json!({ "passed": r.passed(), "report": r }));
            verdict(r.passed())
        }
        Command::SingularPoly { n, d } => {
            check_cap("rank", "GLINF_MAX_RANK", 4, n as u64)?;
            check_cap("degree", "GLINF_MAX_DEGREE", 10, d as u64)?;
            let r = verify_singular_space(n, d);
            emit(&serde_json::json!({ "passed": r.passed(), "dim": r.kernel_dim, "report": r }));
            verdict(r.passed())
        }
        Command::SingularGhat { chi, c, level_max, band } => {
            check_cap("level", "GLINF_MAX_LEVEL", 12, level_max as u64)?;
            let chi = parse_chi(chi.as_deref())?;
            let r = singular_search(&chi, parse_rational(&c)?, level_max, band.map(Band::new))?;
            emit(&r);
            Ok(())
        }
        Command::CommutatorCheck { k, l, chi, c } => {
            check_cap("level", "GLINF_MAX_LEVEL", 12, (k * k) as u64 * l as u64)?;
            let chi = parse_chi(chi.as_deref())?;
            let r = commutator_formula_check(k, l, &chi, parse_rational(&c)?)?;
            emit(&r);
            verdict(r.equal)
        }
        Command::Multiplicity { chi, nu_minus, nu_plus } => {
            let chi = parse_chi(chi.as_deref())?;
            let (a, b) = (parse_half(&nu_minus, true)?, parse_half(&nu_plus, false)?);
            let m = induced_multiplicity(&chi, &a, &b)?;
            match format {
                Format::Tsv => print_text(&format!("{m}\n")),
                Format::Json => emit(&serde_json::json!({ "chi": chi, "nu_minus": a, "nu_plus": b, "multiplicity": m })),
            }
            Ok(())
        }
        Command::Reciprocity { nu, lambda_minus, mu_plus, n_list, batch, random, seed, max_size } => run_reciprocity(
            nu.as_deref(),
            lambda_minus.as_deref(),
            mu_plus.as_deref(),
            n_list.as_deref(),
            batch.as_ref(),
            random,
            seed,
            max_size,
        ),
        Command::KacRadul { nu, n, size_bound } => {
            check_cap("partition size", "GLINF_MAX_SIZE", 12, size_bound as u64)?;
            let t = kac_radul_table(&FiniteWeight::from_str(&nu)?, n, size_bound)?;
            match format {
                Format::Tsv => print_text(&t.to_tsv()),
                Format::Json => emit(&t),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
