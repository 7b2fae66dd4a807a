use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use permdom::constructions::{comb, connected_with_gamma, extend_preserving_gamma, is_comb, CombVariant};
use permdom::counting::{
    disconnected_count, efficient_dom_count, pair_count, pair_count_adjacent, pair_count_nonadjacent,
    parse_count_table_csv, CountKind, CountTable, SingletonTable,
};
use permdom::domination::{
    all_minimum_dominating_sets, domination_number_exact, quick_rule_position_ends, quick_rule_value_ends,
    singleton_dominators,
};
use permdom::graph::{build_graph, is_connected, permutation_components};
use permdom::heuristic::heuristic_dominating_set;
use permdom::oracle::{self, Oracle, DEFAULT_CAP, HARD_CAP};
use permdom::sequences::{lift_all, sequence_table, st_closed_form};
use permdom::verify::{self, Check, VerificationRun};
use permdom::{parse_permutation, parse_vertex_list, Permutation};

const SCHEMA: u32 = 1;
const MAX_ORDER_ENV: &str = "PERMDOM_MAX_N";

#[derive(Parser)]
#[command(name = "permdom", version, about = "Domination in permutation graphs")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Exact and heuristic domination data for one permutation.
    Analyze {
        /// One-line notation, e.g. "3,1,4,2" or "[3,1,4,2]".
        perm: String,
    },
    /// Closed-form and recursive counts.
    #[command(subcommand)]
    Count(CountCommand),
    /// Extremal permutations.
    #[command(subcommand)]
    Construct(ConstructCommand),
    /// Exhaustive enumeration of S_n.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Strong fixed point sequences.
    #[command(subcommand)]
    Seq(SeqCommand),
    /// Run every formula-versus-enumeration check.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Subcommand)]
enum CountCommand {
    /// Graphs with at least one singleton dominating set, n = 0..=max-n.
    G1 {
        #[arg(long)]
        max_n: usize,
    },
    /// Graphs with exactly t singleton dominating sets, t = 0..=n.
    F1 {
        #[arg(long)]
        n: usize,
    },
    /// Graphs dominated by {u, v}.
    Pair {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        u: usize,
        #[arg(long)]
        v: usize,
        #[arg(long, conflicts_with = "nonadjacent")]
        adjacent: bool,
        #[arg(long)]
        nonadjacent: bool,
    },
    /// Graphs efficiently dominated by a set.
    Efficient {
        #[arg(long)]
        n: usize,
        /// Increasing vertex list, e.g. "1,4".
        #[arg(long)]
        set: String,
    },
    /// Disconnected graphs with domination number k.
    D {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Connected counts as `n,k,value` CSV; enumerated when omitted.
        #[arg(long)]
        c_table: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Sigma,
    Tau,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// A comb permutation of even order n >= 6.
    Comb {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Sigma)]
        variant: VariantArg,
    },
    /// A connected graph on n vertices with domination number k.
    Gamma {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Insert a new maximum while keeping the domination number.
    Extend {
        #[arg(long)]
        perm: String,
    },
}

#[derive(Args)]
struct OracleOpts {
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Allow orders up to the hard cap.
    #[arg(long)]
    allow_big: bool,
}

#[derive(Subcommand)]
enum OracleCommand {
    /// Domination tallies over all of S_n.
    Tally {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Recursion and disconnected-count checks against enumeration.
    Verify {
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        opts: OracleOpts,
    },
    /// Connected counts c(n,k) for n <= max-n, as input for `count d`.
    Ctable {
        #[arg(long)]
        max_n: usize,
        #[command(flatten)]
        opts: OracleOpts,
    },
}

#[derive(Subcommand)]
enum SeqCommand {
    /// Triangle of permutations by number of strong fixed points.
    St {
        #[arg(long)]
        max_n: usize,
    },
    /// Polynomial for offset r, lifted from the lower offsets.
    Lift {
        #[arg(long)]
        r: usize,
    },
    /// Permutations with at least one strong fixed point.
    G1 {
        #[arg(long)]
        max_n: usize,
    },
}

/// Exit statuses beyond success.
enum Failure {
    Usage(String),
    Domain(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<permdom::Error> for Failure {
    fn from(e: permdom::Error) -> Self {
        Failure::Domain(e.into())
    }
}

struct Report {
    json: Value,
    csv: Option<String>,
    /// Exit status 3 when a verification found a mismatch.
    mismatch: bool,
}

impl Report {
    fn json(json: Value) -> Self {
        Report { json, csv: None, mismatch: false }
    }

    fn with_csv(mut self, csv: String) -> Self {
        self.csv = Some(csv);
        self
    }
}

fn oracle_for(opts: &OracleOpts) -> Result<Oracle, Failure> {
    let cap = match std::env::var(MAX_ORDER_ENV) {
        Ok(v) => v.trim().parse::<usize>().with_context(|| format!("{MAX_ORDER_ENV}={v:?} is not an integer"))?,
        Err(_) if opts.allow_big => HARD_CAP,
        Err(_) => DEFAULT_CAP,
    };
    Ok(Oracle::new().with_cap(cap)?.with_jobs(opts.jobs))
}

fn index_csv(values: impl IntoIterator<Item = (usize, String)>) -> String {
    let mut out = String::from("index,value\n");
    for (i, v) in values {
        let _ = writeln!(out, "{i},{v}");
    }
    out
}

fn analyze(text: &str) -> Result<Report, Failure> {
    let p = parse_permutation(text)?;
    let g = build_graph(&p)?;
    let exact = domination_number_exact(&g);
    let heuristic = heuristic_dominating_set(&g);
    let quick = quick_rule_value_ends(&p).or_else(|| quick_rule_position_ends(&p));
    let components: Vec<Value> = permutation_components(&p)
        .iter()
        .map(|c| json!({ "offset": c.offset, "permutation": c.permutation.to_string() }))
        .collect();
    Ok(Report::json(json!({
        "schema": SCHEMA,
        "permutation": p.to_string(),
        "n": p.len(),
        "gamma": exact.gamma,
        "witness": exact.witness,
        "all_minimum_sets_count": all_minimum_dominating_sets(&g).len(),
        "singleton_dominators": singleton_dominators(&g),
        "connected": is_connected(&g),
        "components": components,
        "strong_fixed_points_of_reverse": p.reverse().strong_fixed_points(),
        "heuristic": {
            "size": heuristic.gamma,
            "witness": heuristic.witness,
            "repaired": heuristic.repaired,
        },
        "quick_rule_fired": quick.map(|q| q.method),
        "graph": g.export(),
    })))
}

fn count(cmd: CountCommand) -> Result<Report, Failure> {
    Ok(match cmd {
        CountCommand::G1 { max_n } => {
            let t = SingletonTable::new(max_n);
            let values: Vec<(usize, String)> = (0..=max_n).map(|n| (n, t.g1(n).to_string())).collect();
            let json = json!({
                "schema": SCHEMA, "kind": "g1",
                "values": values.iter().map(|(n, v)| json!({ "n": n, "value": v })).collect::<Vec<_>>(),
            });
            Report::json(json).with_csv(index_csv(values))
        }
        CountCommand::F1 { n } => {
            let t = SingletonTable::new(n);
            let values: Vec<(usize, String)> = (0..=n).map(|k| (k, t.f1(n, k).to_string())).collect();
            let json = json!({
                "schema": SCHEMA, "kind": "f1", "n": n,
                "values": values.iter().map(|(t, v)| json!({ "t": t, "value": v })).collect::<Vec<_>>(),
            });
            Report::json(json).with_csv(index_csv(values))
        }
        CountCommand::Pair { n, u, v, adjacent, nonadjacent } => {
            let (which, value) = if adjacent {
                ("adjacent", pair_count_adjacent(n, u, v)?)
            } else if nonadjacent {
                ("nonadjacent", pair_count_nonadjacent(n, u, v)?)
            } else {
                ("both", pair_count(n, u, v)?)
            };
            let json = json!({
                "schema": SCHEMA, "kind": "pair", "n": n, "u": u, "v": v,
                "adjacency": which, "value": value.to_string(),
            });
            Report::json(json).with_csv(index_csv([(n, value.to_string())]))
        }
        CountCommand::Efficient { n, set } => {
            let a = parse_vertex_list(&set)?;
            let value = efficient_dom_count(n, &a)?;
            let json = json!({ "schema": SCHEMA, "kind": "efficient", "n": n, "set": a, "value": value.to_string() });
            Report::json(json).with_csv(index_csv([(n, value.to_string())]))
        }
        CountCommand::D { n, k, c_table } => {
            let (table, source) = match c_table {
                Some(path) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
                    (parse_count_table_csv(CountKind::C, &text)?, "file")
                }
                None => {
                    let oracle = Oracle::new();
                    let reports = verify::tallies(&oracle, n.saturating_sub(1))?;
                    (oracle::connected_table(&reports), "enumeration")
                }
            };
            let value = disconnected_count(n, k, &table)?;
            let json = json!({
                "schema": SCHEMA, "kind": "d", "n": n, "k": k,
                "c_table_source": source, "value": value.to_string(),
            });
            Report::json(json).with_csv(index_csv([(k, value.to_string())]))
        }
    })
}

fn audit(p: &Permutation) -> Result<Value, Failure> {
    let g = build_graph(p)?;
    Ok(json!({
        "n": p.len(),
        "gamma": domination_number_exact(&g).gamma,
        "connected": is_connected(&g),
    }))
}

fn construct(cmd: ConstructCommand) -> Result<Report, Failure> {
    let (p, extra) = match cmd {
        ConstructCommand::Comb { n, variant } => {
            let (name, variant) = match variant {
                VariantArg::Sigma => ("sigma", CombVariant::Sigma),
                VariantArg::Tau => ("tau", CombVariant::Tau),
            };
            let p = comb(n, variant)?;
            let witness = is_comb(&build_graph(&p)?)?;
            (p, json!({ "construction": "comb", "variant": name, "comb": witness }))
        }
        ConstructCommand::Gamma { n, k } => {
            (connected_with_gamma(n, k)?, json!({ "construction": "gamma", "requested_gamma": k }))
        }
        ConstructCommand::Extend { perm } => {
            let before = parse_permutation(&perm)?;
            let p = extend_preserving_gamma(&before)?;
            (p, json!({ "construction": "extend", "input": before.to_string(), "before": audit(&before)? }))
        }
    };
    let mut json = json!({ "schema": SCHEMA, "permutation": p.to_string(), "after": audit(&p)? });
    let obj = json.as_object_mut().expect("object");
    for (k, v) in extra.as_object().expect("object") {
        obj.insert(k.clone(), v.clone());
    }
    Ok(Report::json(json).with_csv(format!("permutation\n\"{p}\"\n")))
}

fn checks_report(run: VerificationRun) -> Report {
    let mut csv = String::from("name,range,status,first_mismatch\n");
    for c in &run.checks {
        let status = if c.passed() { "pass" } else { "fail" };
        let m = c.first_mismatch.as_deref().unwrap_or("");
        let _ = writeln!(csv, "{},\"{}\",{status},\"{}\"", c.name, c.range, m.replace('"', "'"));
    }
    let mismatch = !run.all_passed();
    let json = json!({
        "schema": SCHEMA,
        "max_n": run.max_n,
        "exit_code": run.exit_code(),
        "checks": run.checks,
    });
    Report { json, csv: Some(csv), mismatch }
}

fn run_oracle(cmd: OracleCommand) -> Result<Report, Failure> {
    Ok(match cmd {
        OracleCommand::Tally { n, opts } => {
            let report = oracle_for(&opts)?.full_tally(n)?;
            let mut csv = String::from("kind,k,value\n");
            for (kind, map) in
                [("g", &report.g), ("c", &report.c), ("d", &report.d), ("f1", &report.f1), ("st", &report.st)]
            {
                for (k, v) in map {
                    let _ = writeln!(csv, "{kind},{k},{v}");
                }
            }
            let json = json!({
                "schema": SCHEMA,
                "tally": report,
                "total": report.total().to_string(),
                "identities_hold": report.identities_hold(),
            });
            Report { json, csv: Some(csv), mismatch: !report.identities_hold() }
        }
        OracleCommand::Verify { max_n, opts } => {
            let oracle = oracle_for(&opts)?;
            let reports = verify::tallies(&oracle, max_n)?;
            let mut checks: Vec<Check> =
                vec![verify::singleton_recursion(&reports), verify::strong_fixed_points(&reports)];
            checks.push(verify::disconnected_formula(&reports)?);
            checks_report(VerificationRun { max_n, checks })
        }
        OracleCommand::Ctable { max_n, opts } => {
            let oracle = oracle_for(&opts)?;
            let table: CountTable = oracle::connected_table(&verify::tallies(&oracle, max_n)?);
            let entries: Vec<Value> =
                table.iter().map(|(i, v)| json!({ "n": i[0], "k": i[1], "value": v.to_string() })).collect();
            Report::json(json!({ "schema": SCHEMA, "kind": "c", "max_n": max_n, "values": entries }))
                .with_csv(table.to_csv())
        }
    })
}

fn seq(cmd: SeqCommand) -> Result<Report, Failure> {
    Ok(match cmd {
        SeqCommand::St { max_n } => {
            let t = sequence_table(max_n);
            let rows: Vec<Vec<String>> =
                t.rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
            Report::json(json!({ "schema": SCHEMA, "kind": "st", "max_n": max_n, "rows": rows }))
                .with_csv(t.to_count_table().to_csv())
        }
        SeqCommand::G1 { max_n } => {
            let t = sequence_table(max_n);
            let values: Vec<(usize, String)> = t.g1.iter().map(ToString::to_string).enumerate().collect();
            let json = json!({
                "schema": SCHEMA, "kind": "g1",
                "values": values.iter().map(|(n, v)| json!({ "n": n, "value": v })).collect::<Vec<_>>(),
            });
            Report::json(json).with_csv(index_csv(values))
        }
        SeqCommand::Lift { r } => {
            let families = lift_all(r)?;
            let fam = &families[r];
            let table = SingletonTable::new(r + 40);
            let recursion_agrees = (1..=40).all(|k| fam.value_at(k) == table.f1(k + r, k));
            let closed_form_agrees = (r <= 5).then(|| {
                (0..=40).all(|k| st_closed_form(r, k).map(|v| v == fam.value_at(k)).unwrap_or(false))
            });
            let json = json!({
                "schema": SCHEMA,
                "r": r,
                "polynomial": fam.polynomial.to_string(),
                "coefficients_descending": fam.polynomial.coefficient_strings_descending(),
                "k0_value": fam.k0_value.to_string(),
                "recursion_agrees_k_1_to_40": recursion_agrees,
                "closed_form_agrees_k_0_to_40": closed_form_agrees,
            });
            let mut csv = String::from("power,coefficient\n");
            for (d, c) in fam.polynomial.coefficients().iter().enumerate() {
                let _ = writeln!(csv, "{d},{c}");
            }
            Report::json(json).with_csv(csv)
        }
    })
}

fn dispatch(cli: Cli) -> Result<Report, Failure> {
    match cli.command {
        Command::Analyze { perm } => analyze(&perm),
        Command::Count(c) => count(c),
        Command::Construct(c) => construct(c),
        Command::Oracle(c) => run_oracle(c),
        Command::Seq(c) => seq(c),
        Command::Verify { max_n, jobs } => {
            let opts = OracleOpts { jobs, allow_big: false };
            let run = verify::run_all(&oracle_for(&opts)?, max_n)?;
            Ok(checks_report(run))
        }
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (format, out) = (cli.format, cli.out.clone());
    let start = Instant::now();
    let result = dispatch(cli).and_then(|report| {
        let text = match format {
            Format::Json => serde_json::to_string_pretty(&report.json).map_err(|e| anyhow!(e))? + "\n",
            Format::Csv => match report.csv {
                Some(csv) => csv,
                None => return Err(Failure::Usage("this command has no CSV output".into())),
            },
        };
        emit(&text, out.as_ref())?;
        Ok(report.mismatch)
    });
    eprintln!("elapsed: {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => {
            eprintln!("error: verification found a mismatch");
            ExitCode::from(3)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
