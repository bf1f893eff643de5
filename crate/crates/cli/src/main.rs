use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use richardson_ss::bruhat::{is_min_rep, min_coset_rep};
use richardson_ss::classify::Classification;
use richardson_ss::criteria::{check_pair, RichardsonPair};
use richardson_ss::report::{ClassifyReport, VerdictRecord};
use richardson_ss::verify::{run_sweep, SweepConfig, DEFAULT_SEED};
use richardson_ss::{CosetContext, Error, LieType, RootSystem, SignedPerm};

#[derive(Parser)]
#[command(
    name = "rich-ss",
    version,
    about = "Richardson varieties in G/P_r for types B, C, D"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Markdown,
    Json,
    Csv,
}

#[derive(clap::Args)]
struct Context {
    /// Type letter (B, C or D).
    #[arg(value_name = "TYPE")]
    pos_type: Option<String>,
    #[arg(value_name = "N")]
    pos_n: Option<usize>,
    #[arg(value_name = "R")]
    pos_r: Option<usize>,
    #[arg(long = "type")]
    ty: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
}

#[derive(clap::Args)]
struct PairArgs {
    #[arg(value_name = "TYPE")]
    ty: String,
    n: usize,
    r: usize,
    /// Window of v, e.g. "3,4,5,-1,2" (or a word with --word).
    #[arg(allow_hyphen_values = true)]
    v: String,
    #[arg(allow_hyphen_values = true)]
    w: String,
    /// Read v and w as words in the simple reflections, e.g. "s3 s2 s1".
    #[arg(long)]
    word: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Table of extremal pairs for (type, n, r).
    Classify {
        #[command(flatten)]
        ctx: Context,
        #[arg(long, value_enum, default_value = "markdown")]
        format: Format,
    },
    /// Verdict for a pair of minimal coset representatives.
    Check(PairArgs),
    /// Certificate chain for a semistable pair.
    Certify(PairArgs),
    /// Compare closed forms with brute force.
    Verify {
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 6)]
        kmax: usize,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, env = "RICH_SS_SEED", default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long, env = "RICH_SS_BUDGET", default_value_t = richardson_ss::oracle::DEFAULT_BUDGET)]
        budget: usize,
        /// Types to sweep, e.g. "BCD" or "D".
        #[arg(long, default_value = "BCD")]
        types: String,
    },
    /// The B5/ω_4 and D5/ω_3 tables.
    Tables,
}

enum Failure {
    Usage(String),
    NotMinRep(String),
    Other(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Construction(_) => Failure::Other(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn context(ty: &str, n: usize, r: usize) -> Result<CosetContext, Failure> {
    let t: LieType = ty.parse()?;
    Ok(CosetContext::new(RootSystem::new(t, n)?, r)?)
}

fn resolve(c: &Context) -> Result<CosetContext, Failure> {
    let ty = c.ty.clone().or(c.pos_type.clone());
    let n = c.n.or(c.pos_n);
    let r = c.r.or(c.pos_r);
    match (ty, n, r) {
        (Some(t), Some(n), Some(r)) => context(&t, n, r),
        _ => Err(Failure::Usage("need TYPE, N and R".into())),
    }
}

fn element(ctx: &CosetContext, s: &str, word: bool) -> Result<SignedPerm, Failure> {
    let e = if word {
        SignedPerm::parse_word(&ctx.rs, s)?
    } else {
        SignedPerm::for_system(&ctx.rs, s.parse::<SignedPerm>()?.window().to_vec())?
    };
    if !is_min_rep(ctx, &e) {
        let m = min_coset_rep(ctx, &e);
        return Err(Failure::NotMinRep(format!(
            "{e} is not a minimal coset representative for r={}; the representative of its coset is {m}",
            ctx.r
        )));
    }
    Ok(e)
}

fn pair_verdict(a: &PairArgs) -> Result<(RichardsonPair, VerdictRecord), Failure> {
    let ctx = context(&a.ty, a.n, a.r)?;
    let v = element(&ctx, &a.v, a.word)?;
    let w = element(&ctx, &a.w, a.word)?;
    let cls = Classification::new(&ctx)?;
    let pair = RichardsonPair::new(&ctx, v, w)?;
    let verdict = check_pair(&cls, &pair)?;
    let rec = VerdictRecord::new(&pair, &verdict);
    Ok((pair, rec))
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    match cli.cmd {
        Cmd::Classify { ctx, format } => {
            let ctx = resolve(&ctx)?;
            let rep = ClassifyReport::new(&Classification::new(&ctx)?);
            match format {
                Format::Markdown => print!("{}", rep.to_markdown()),
                Format::Json => println!("{}", rep.to_json()),
                Format::Csv => print!("{}", rep.to_csv()?),
            }
        }
        Cmd::Check(a) => {
            let (_, rec) = pair_verdict(&a)?;
            println!("{}", rec.to_json());
        }
        Cmd::Certify(a) => {
            let (_, rec) = pair_verdict(&a)?;
            if rec.certificate.is_none() {
                eprintln!(
                    "no certificate: semistable locus is empty ({:?})",
                    rec.reason
                );
                return Ok(ExitCode::from(1));
            }
            let out = serde_json::json!({
                "chain": rec.certificate,
                "weights": rec.certificate_weights,
            });
            println!("{}", serde_json::to_string_pretty(&out).expect("json"));
        }
        Cmd::Verify {
            max_n,
            kmax,
            samples,
            seed,
            budget,
            types,
        } => {
            let types = types
                .chars()
                .map(|c| c.to_string().parse::<LieType>())
                .collect::<Result<Vec<_>, _>>()?;
            let cfg = SweepConfig {
                types,
                max_n,
                nonempty_max_n: max_n.max(6),
                k_max: kmax,
                samples,
                seed,
                budget,
                ..SweepConfig::default()
            };
            let results = run_sweep(&cfg)?;
            let mut failed = false;
            for c in &results {
                println!(
                    "{:<20} {:<10} pass {:>6} fail {:>4}",
                    c.check, c.scope, c.passed, c.failed
                );
            }
            if let Some(c) = results.iter().find(|c| c.failed > 0) {
                failed = true;
                println!("witness: {}", c.witness.as_deref().unwrap_or("?"));
            }
            let total: usize = results.iter().map(|c| c.passed).sum();
            let bad: usize = results.iter().map(|c| c.failed).sum();
            println!("total pass {total} fail {bad}");
            if failed {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::Tables => {
            for (t, n, r) in [("B", 5, 4), ("D", 5, 3)] {
                let ctx = context(t, n, r)?;
                print!(
                    "{}",
                    ClassifyReport::new(&Classification::new(&ctx)?).to_markdown()
                );
                println!();
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(c) => c,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::NotMinRep(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
        Err(Failure::Other(m)) => {
            eprintln!("internal error: {m}");
            ExitCode::from(1)
        }
    }
}
