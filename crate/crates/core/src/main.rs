//! Command-line front end: set-file I/O, zero-set grids, pair checks,
//! enumeration dumps and the one-command verification suites.
//!
//! Exit codes: 0 all checks pass, 1 a mathematical check failed (or an
//! expected counterexample was not found), 2 usage or I/O error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use symtile::group::{PointSet, Subgroup};
use symtile::render::render_zero_set;
use symtile::report::{SearchConfig, VerificationReport};
use symtile::search::{
    enumerate_symplectic_spectra, enumerate_tiling_complements, noncyclic_lagrangian,
    search_counterexamples_cyclic, verify_counting_lemma, verify_lemma_diff, verify_lemma_self,
    verify_theorem_main, TheoremCase,
};
use symtile::setfile::{format_set, parse_set};
use symtile::setops::{complements_subgroup, difference_set, is_spectral_pair, is_tiling_pair};
use symtile::transform::{subgroup_transform_identity, zero_set, Form};
use symtile::{enumerate_lagrangians, enumerate_subgroups, PairVerdict};

#[derive(Parser)]
#[command(
    name = "symtile",
    version,
    about = "Exact tiling and spectral-set analysis on Z_n x Z_n",
    long_about = "Exact tiling and spectral-set analysis on Z_n x Z_n under the symplectic \
                  Fourier transform.\n\nGrids are drawn with the origin at the bottom left: \
                  the first coordinate runs to the right, the second coordinate upward, and \
                  the row with second coordinate n-1 is printed first."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Zero set of the Fourier transform of a set's indicator function
    Zeroset {
        /// Which transform: the symplectic form or the Euclidean inner product
        #[arg(long, value_enum)]
        form: FormArg,
        /// Input set file
        #[arg(long = "in")]
        input: PathBuf,
        /// Draw the zero set as a character grid
        #[arg(long)]
        render: bool,
        /// Emit JSON instead of a set file
        #[arg(long)]
        json: bool,
    },
    /// Difference set of a set file
    Diffset {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Pair predicates with cross-checked characterizations
    Check {
        #[command(subcommand)]
        what: CheckCommand,
    },
    /// Symplectic orthogonal of a subgroup given by its carrier
    Orth {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// List all Lagrangians (order-n subgroups) of Z_n x Z_n
    Lagrangians {
        #[arg(long)]
        n: u32,
    },
    /// Enumerate tiling complements or symplectic spectra
    Enumerate {
        #[command(subcommand)]
        what: EnumerateCommand,
    },
    /// Run a verification suite and print its report
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Re-run every worked example and lemma sweep; deterministic output
    ReproducePaper,
}

#[derive(Subcommand)]
enum CheckCommand {
    /// Do the translates of A by B partition the group?
    Tiling {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Do the characters indexed by S form an orthogonal basis on A?
    Spectral {
        #[arg(long, value_enum)]
        form: FormArg,
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        s: PathBuf,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum EnumerateCommand {
    /// All tiling complements of the input set
    Complements {
        #[arg(long = "in")]
        input: PathBuf,
        /// Print at most this many sets (the count line is unaffected)
        #[arg(long)]
        limit: Option<usize>,
    },
    /// All symplectic spectra of the input set
    Spectra {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        limit: Option<usize>,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Intersection-count identity and its V_k refinement
    Counting {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Self-disjointness for complements of the non-cyclic Lagrangian
    #[command(name = "self")]
    SelfDisjoint {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Difference-set disjointness for the same complements
    Diff {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Spectra/complements coincidence for Lagrangians of Z_n x Z_n
    MainI {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Coincidence plus the good-group sweep over Z_p x Z_p
    MainIi {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Coincidence for complements of the non-cyclic Lagrangian of Z_{p^2}^2
    MainIii {
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        opts: VerifyOpts,
    },
    /// Sweep complements of cyclic Lagrangians for disjointness violations
    CyclicCounterexample {
        #[arg(long)]
        n: u32,
        #[command(flatten)]
        opts: VerifyOpts,
    },
}

#[derive(Args, Clone, Copy)]
struct VerifyOpts {
    #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Sample count for sampled mode
    #[arg(long, default_value_t = 1000)]
    samples: u64,
    /// Seed for sampled mode; recorded in the report
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Worker threads (0 = all cores)
    #[arg(long, default_value_t = 0)]
    workers: usize,
    #[arg(long)]
    json: bool,
}

impl VerifyOpts {
    fn config(self) -> SearchConfig {
        let mut config = match self.mode {
            ModeArg::Exhaustive => SearchConfig::exhaustive(),
            ModeArg::Sampled => SearchConfig::sampled(self.samples, self.seed),
        };
        config.workers = self.workers;
        config
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormArg {
    /// symplectic form x1*y2 - x2*y1
    Sym,
    /// Euclidean inner product x1*y1 + x2*y2
    Euc,
}

impl From<FormArg> for Form {
    fn from(arg: FormArg) -> Form {
        match arg {
            FormArg::Sym => Form::Symplectic,
            FormArg::Euc => Form::Euclidean,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sampled,
}

fn main() -> ExitCode {
    // die quietly when the read end of a pipe goes away (e.g. `| head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("symtile: {message}");
            ExitCode::from(2)
        }
    }
}

fn load_set(path: &PathBuf) -> Result<PointSet, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_set(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Zeroset {
            form,
            input,
            render,
            json,
        } => {
            let set = load_set(&input)?;
            let z = zero_set(&set, form.into()).map_err(|e| e.to_string())?;
            if json {
                let value = json!({
                    "schema": 1,
                    "command": "zeroset",
                    "form": z.form().label(),
                    "zero_set": z.points(),
                });
                println!("{}", serde_json::to_string_pretty(&value).unwrap());
            } else {
                print!("{}", format_set(z.points()));
                if render {
                    print!("{}", render_zero_set(&z).map_err(|e| e.to_string())?);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Diffset { input } => {
            let set = load_set(&input)?;
            print!("{}", format_set(&difference_set(&set)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check { what } => check(what),
        Command::Orth { input } => {
            let set = load_set(&input)?;
            let subgroup = Subgroup::from_carrier(set).map_err(|e| e.to_string())?;
            print!("{}", format_set(subgroup.symplectic_orthogonal().carrier()));
            Ok(ExitCode::SUCCESS)
        }
        Command::Lagrangians { n } => {
            let all = enumerate_lagrangians(n).map_err(|e| e.to_string())?;
            println!("# {} lagrangians of Z_{n} x Z_{n}", all.len());
            for h in &all {
                let gens: Vec<String> = h.generators().iter().map(|g| g.to_string()).collect();
                let elems: Vec<String> = h.carrier().iter().map(|e| e.to_string()).collect();
                println!("<{}>: {}", gens.join(", "), elems.join(" "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate { what } => enumerate(what),
        Command::Verify { suite } => verify(suite),
        Command::ReproducePaper => reproduce_paper(),
    }
}

fn print_verdict(kind: &str, verdict: &PairVerdict, json: bool) {
    if json {
        let value = json!({
            "schema": 1,
            "check": kind,
            "verdict": verdict,
        });
        println!("{}", serde_json::to_string_pretty(&value).unwrap());
        return;
    }
    println!(
        "{kind} pair: {}",
        if verdict.holds { "yes" } else { "no" }
    );
    println!("checked by: {}", verdict.checked_by.join(", "));
    if let Some(witness) = &verdict.witness {
        println!("witness: {}", serde_json::to_string(witness).unwrap());
    }
    for note in &verdict.notes {
        println!("note: {note}");
    }
}

fn check(what: CheckCommand) -> Result<ExitCode, String> {
    let (kind, verdict, json) = match what {
        CheckCommand::Tiling { a, b, json } => {
            let a = load_set(&a)?;
            let b = load_set(&b)?;
            let verdict = is_tiling_pair(&a, &b).map_err(|e| e.to_string())?;
            ("tiling", verdict, json)
        }
        CheckCommand::Spectral { form, a, s, json } => {
            let a = load_set(&a)?;
            let s = load_set(&s)?;
            let verdict = is_spectral_pair(&a, &s, form.into()).map_err(|e| e.to_string())?;
            ("spectral", verdict, json)
        }
    };
    print_verdict(kind, &verdict, json);
    Ok(if verdict.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn enumerate(what: EnumerateCommand) -> Result<ExitCode, String> {
    let (input, limit, label, results) = match what {
        EnumerateCommand::Complements { input, limit } => {
            let set = load_set(&input)?;
            let results = enumerate_tiling_complements(&set).map_err(|e| e.to_string())?;
            (set, limit, "complements", results)
        }
        EnumerateCommand::Spectra { input, limit } => {
            let set = load_set(&input)?;
            let results = enumerate_symplectic_spectra(&set).map_err(|e| e.to_string())?;
            (set, limit, "spectra", results)
        }
    };
    println!(
        "# {} {label} of {} in Z_{} x Z_{}",
        results.len(),
        input,
        input.modulus(),
        input.modulus()
    );
    let shown = limit.unwrap_or(results.len());
    for set in results.iter().take(shown) {
        let pairs: Vec<String> = set.iter().map(|e| format!("{},{}", e.x1(), e.x2())).collect();
        println!("{}", pairs.join(" "));
    }
    if shown < results.len() {
        println!("# ... {} more not shown (--limit)", results.len() - shown);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(report: &VerificationReport, json: bool) {
    if json {
        println!("{}", report.to_json());
        return;
    }
    println!("suite: {}", report.suite);
    println!(
        "config: mode={:?} samples={} seed={} workers={}",
        report.config.mode, report.config.sample_count, report.config.seed, report.config.workers
    );
    for note in &report.notes {
        println!("note: {note}");
    }
    println!(
        "instances: {} checked, {} skipped",
        report.instances_checked, report.skipped
    );
    println!("elapsed: {:.3}s", report.elapsed.as_secs_f64());
    const SHOWN: usize = 10;
    if !report.findings.is_empty() {
        println!("findings: {}", report.findings.len());
        for w in report.findings.iter().take(SHOWN) {
            println!("  {}", serde_json::to_string(w).unwrap());
        }
        if report.findings.len() > SHOWN {
            println!("  ... {} more", report.findings.len() - SHOWN);
        }
    }
    if report.pass() {
        println!("result: PASS");
    } else {
        println!("failures: {}", report.failures.len());
        for w in report.failures.iter().take(SHOWN) {
            println!("  {}", serde_json::to_string(w).unwrap());
        }
        if report.failures.len() > SHOWN {
            println!("  ... {} more", report.failures.len() - SHOWN);
        }
        println!("result: FAIL");
    }
}

fn verify(suite: VerifySuite) -> Result<ExitCode, String> {
    let (report, json) = match suite {
        VerifySuite::Counting { n, opts } => (
            verify_counting_lemma(n, opts.config()).map_err(|e| e.to_string())?,
            opts.json,
        ),
        VerifySuite::SelfDisjoint { p, opts } => (
            verify_lemma_self(p, opts.config()).map_err(|e| e.to_string())?,
            opts.json,
        ),
        VerifySuite::Diff { p, opts } => (
            verify_lemma_diff(p, opts.config()).map_err(|e| e.to_string())?,
            opts.json,
        ),
        VerifySuite::MainI { n, opts } => (
            verify_theorem_main(TheoremCase::Lagrangian, n, opts.config())
                .map_err(|e| e.to_string())?,
            opts.json,
        ),
        VerifySuite::MainIi { p, opts } => (
            verify_theorem_main(TheoremCase::PrimeGroup, p, opts.config())
                .map_err(|e| e.to_string())?,
            opts.json,
        ),
        VerifySuite::MainIii { p, opts } => (
            verify_theorem_main(TheoremCase::PrimeSquared, p, opts.config())
                .map_err(|e| e.to_string())?,
            opts.json,
        ),
        VerifySuite::CyclicCounterexample { n, opts } => (
            search_counterexamples_cyclic(n, opts.config()).map_err(|e| e.to_string())?,
            opts.json,
        ),
    };
    print_report(&report, json);
    Ok(if report.pass() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

// ---------------------------------------------------------------------------
// reproduce-paper
// ---------------------------------------------------------------------------

struct Row {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn row(name: &'static str, pass: bool, detail: impl Into<String>) -> Row {
    Row {
        name,
        pass,
        detail: detail.into(),
    }
}

/// Every worked example and lemma sweep, in one deterministic run. The output
/// contains no timings, so repeated runs on the same build are byte-identical.
fn reproduce_paper() -> Result<ExitCode, String> {
    let err = |e: symtile::Error| e.to_string();
    let mut rows: Vec<Row> = Vec::new();

    // worked example 1: the zero sets of the horizontal axis, both forms
    let axis = PointSet::from_pairs(4, (0..4).map(|k| (k, 0)));
    let vertical = PointSet::from_pairs(4, (0..4).map(|k| (0, k)));
    let euc = zero_set(&axis, Form::Euclidean).map_err(err)?;
    let sym = zero_set(&axis, Form::Symplectic).map_err(err)?;

    println!("symtile reproduce-paper: worked examples and lemma sweeps at desk scale");
    println!();
    print!("{}", render_zero_set(&euc).map_err(err)?);
    println!();
    print!("{}", render_zero_set(&sym).map_err(err)?);
    println!();

    rows.push(row(
        "axis euclidean zero set is the complement of the vertical axis",
        euc.points() == &vertical.complement(),
        format!("{} points", euc.points().len()),
    ));
    rows.push(row(
        "axis symplectic zero set is the complement of the axis itself",
        sym.points() == &axis.complement(),
        format!("{} points", sym.points().len()),
    ));

    // worked example 2: the product set against the cyclic Lagrangian
    let product_set = PointSet::from_pairs(4, [(0, 0), (1, 0), (0, 2), (1, 2)]);
    let cyclic = Subgroup::generated(
        4,
        &[symtile::GroupElement::new(4, 1, 1)],
    );
    let z2 = zero_set(&product_set, Form::Symplectic).map_err(err)?;
    let stripes = PointSet::from_pairs(
        4,
        (0..4)
            .flat_map(|k| [(1i64, k), (3, k)])
            .chain((0..4).map(|j| (j, 2))),
    );
    rows.push(row(
        "product-set symplectic zero set matches the stripe union",
        z2.points() == &stripes,
        format!("{} points", z2.points().len()),
    ));
    let delta_product = difference_set(&product_set);
    rows.push(row(
        "product-set differences lie inside its zero set",
        delta_product.iter().all(|&d| z2.contains(d)),
        format!("{} differences", delta_product.len()),
    ));
    let tiling_with_cyclic = complements_subgroup(&product_set, &cyclic).map_err(err)?;
    rows.push(row(
        "product set tiles with the cyclic Lagrangian",
        tiling_with_cyclic.holds && tiling_with_cyclic.notes.is_empty(),
        "all characterizations agree",
    ));

    // worked example 3: the corner square and its two partners
    let corner = PointSet::from_pairs(4, [(0, 0), (3, 0), (0, 3), (3, 3)]);
    let noncyclic = noncyclic_lagrangian(2).map_err(err)?;
    let partner = PointSet::from_pairs(4, [(0, 0), (1, 2), (2, 0), (3, 2)]);
    rows.push(row(
        "corner square tiles with the non-cyclic Lagrangian",
        is_tiling_pair(&corner, noncyclic.carrier()).map_err(err)?.holds,
        "",
    ));
    rows.push(row(
        "corner square tiles with its second partner",
        is_tiling_pair(&corner, &partner).map_err(err)?.holds,
        "",
    ));
    rows.push(row(
        "corner square and partner form a symplectic spectral pair",
        is_spectral_pair(&corner, &partner, Form::Symplectic)
            .map_err(err)?
            .holds,
        "",
    ));

    // subgroup transform identity across all subgroups, n = 2..12
    let mut subgroups_checked = 0usize;
    let mut identity_ok = true;
    for n in 2..=12u32 {
        for h in enumerate_subgroups(n).map_err(err)? {
            identity_ok &= subgroup_transform_identity(&h).pass();
            subgroups_checked += 1;
        }
    }
    rows.push(row(
        "subgroup transform identity over every subgroup, n = 2..12",
        identity_ok,
        format!("{subgroups_checked} subgroups"),
    ));

    // counting identity: exhaustive at n = 2 and n = 4, sampled elsewhere
    for n in [2u32, 4] {
        let report = verify_counting_lemma(n, SearchConfig::exhaustive()).map_err(err)?;
        rows.push(row(
            match n {
                2 => "counting identity, exhaustive n=2",
                _ => "counting identity, exhaustive n=4",
            },
            report.pass(),
            format!(
                "{} gated instances, {} skipped",
                report.instances_checked, report.skipped
            ),
        ));
    }
    for (n, name) in [
        (4u32, "counting identity, sampled n=4"),
        (8, "counting identity, sampled n=8"),
        (9, "counting identity, sampled n=9"),
        (12, "counting identity, sampled n=12"),
    ] {
        let report =
            verify_counting_lemma(n, SearchConfig::sampled(10_000, 42)).map_err(err)?;
        rows.push(row(
            name,
            report.pass(),
            format!(
                "{} gated instances, {} skipped, seed 42",
                report.instances_checked, report.skipped
            ),
        ));
    }

    // disjointness sweeps at p = 2 (exhaustive) and p = 3 (sampled)
    let self2 = verify_lemma_self(2, SearchConfig::exhaustive()).map_err(err)?;
    rows.push(row(
        "self-disjointness (origin-normalized), p=2 exhaustive",
        self2.pass(),
        format!(
            "{} complements, {} unshifted divergences surfaced",
            self2.instances_checked,
            self2.findings.len()
        ),
    ));
    let diff2 = verify_lemma_diff(2, SearchConfig::exhaustive()).map_err(err)?;
    rows.push(row(
        "difference-set disjointness, p=2 exhaustive",
        diff2.pass(),
        format!("{} complements", diff2.instances_checked),
    ));
    let self3 = verify_lemma_self(3, SearchConfig::sampled(1000, 42)).map_err(err)?;
    rows.push(row(
        "self-disjointness (origin-normalized), p=3 sampled",
        self3.pass(),
        format!(
            "{} samples, seed 42, {} unshifted divergences surfaced",
            self3.instances_checked,
            self3.findings.len()
        ),
    ));
    let diff3 = verify_lemma_diff(3, SearchConfig::sampled(1000, 42)).map_err(err)?;
    rows.push(row(
        "difference-set disjointness, p=3 sampled",
        diff3.pass(),
        format!("{} samples, seed 42", diff3.instances_checked),
    ));

    // the cyclic-Lagrangian counterexample sweep must rediscover the witness
    let sweep = search_counterexamples_cyclic(4, SearchConfig::exhaustive()).map_err(err)?;
    rows.push(row(
        "cyclic-Lagrangian sweep at n=4 rediscovers the counterexample",
        sweep.pass() && !sweep.findings.is_empty(),
        format!("{} findings", sweep.findings.len()),
    ));

    let mut passed = 0usize;
    for (i, r) in rows.iter().enumerate() {
        let mark = if r.pass { "PASS" } else { "FAIL" };
        let detail = if r.detail.is_empty() {
            String::new()
        } else {
            format!(" ({})", r.detail)
        };
        println!("  [{:>2}] {:<62} {mark}{detail}", i + 1, r.name);
        passed += r.pass as usize;
    }
    println!();
    println!("result: {passed}/{} PASS", rows.len());
    Ok(if passed == rows.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
