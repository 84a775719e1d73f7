use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fatpoint3::oracle::{DEFAULT_PRIME, DEFAULT_SEEDS};
use fatpoint3::{
    binomial, classify_homogeneous, conjectured_dimension, cremona_curve, cremona_curve_full,
    cremona_system, is_special, line_orbit, oracle_dimension, verify_grid, CurveClass,
    DimensionReport, GridBounds, GridRow, LinearSystem, OracleConfig, PointMode, Verdict,
};
use serde::Serialize;

/// `println!` that ignores a closed stdout, so piping into `head` is quiet.
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

const EXIT_USAGE: u8 = 1;
const EXIT_MISMATCH: u8 = 2;

/// Dimensions of linear systems of surfaces in P^3 through fat points.
#[derive(Parser)]
#[command(name = "fatpoint3", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Conjectured dimension via Cremona reduction and quadric removal.
    Dim {
        /// System literal such as "12 7^6".
        #[arg(allow_hyphen_values = true)]
        system: String,
        /// Print the reduction as an arrow trace.
        #[arg(long)]
        trace: bool,
        #[arg(long)]
        json: bool,
    },
    /// True dimension from the rank of the interpolation matrix.
    Oracle {
        #[arg(allow_hyphen_values = true)]
        system: String,
        #[command(flatten)]
        oracle: OracleArgs,
        /// Refuse systems with more monomials than this.
        #[arg(long, default_value_t = 5000)]
        max_cols: u64,
        #[arg(long)]
        json: bool,
    },
    /// Compare conjectured and oracle dimensions over a homogeneous grid.
    Verify {
        #[command(flatten)]
        grid: GridArgs,
        #[command(flatten)]
        oracle: OracleArgs,
        /// Add expected dimension and verdict columns.
        #[arg(long)]
        homogeneous: bool,
        #[arg(long)]
        json: bool,
    },
    /// Classify homogeneous systems over a grid without the oracle.
    Scan {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        json: bool,
    },
    /// Apply one Cremona transformation based at four points (1-based).
    Transform {
        /// System literal, or curve literal with --curve.
        #[arg(allow_hyphen_values = true)]
        literal: String,
        #[arg(num_args = 4, required = true)]
        indices: Vec<usize>,
        #[arg(long)]
        curve: bool,
    },
    /// Cremona orbit of the line through two points.
    Orbit {
        #[arg(long)]
        points: usize,
        #[arg(long)]
        max_degree: i64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct OracleArgs {
    /// Prime modulus, below 2^32.
    #[arg(long, env = "FATPOINT3_PRIME", default_value_t = DEFAULT_PRIME)]
    prime: u64,
    /// Comma-separated sampling seeds.
    #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_SEEDS)]
    seeds: Vec<u64>,
    #[arg(long, value_enum, default_value_t = PointModeArg::AllRandom)]
    point_mode: PointModeArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum PointModeArg {
    AllRandom,
    FundamentalPlusRandom,
}

impl OracleArgs {
    fn config(&self) -> OracleConfig {
        let point_mode = match self.point_mode {
            PointModeArg::AllRandom => PointMode::AllRandom,
            PointModeArg::FundamentalPlusRandom => PointMode::FundamentalPlusRandom,
        };
        OracleConfig {
            prime: self.prime,
            seeds: self.seeds.clone(),
            point_mode,
        }
    }
}

#[derive(Args)]
struct GridArgs {
    #[arg(long, default_value_t = 10)]
    dmax: i64,
    #[arg(long, default_value_t = 4)]
    mmax: i64,
    #[arg(long, default_value_t = 10)]
    rmax: usize,
    /// Only this number of points.
    #[arg(long)]
    r: Option<usize>,
}

impl GridArgs {
    fn bounds(&self) -> GridBounds {
        let mut b = GridBounds::up_to(self.dmax, self.mmax, self.rmax);
        if let Some(r) = self.r {
            b.points = r..=r;
        }
        b
    }
}

type CmdResult = Result<ExitCode, String>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Dim {
            system,
            trace,
            json,
        } => cmd_dim(&system, trace, json),
        Command::Oracle {
            system,
            oracle,
            max_cols,
            json,
        } => cmd_oracle(&system, &oracle.config(), max_cols, json),
        Command::Verify {
            grid,
            oracle,
            homogeneous,
            json,
        } => cmd_verify(&grid.bounds(), &oracle.config(), homogeneous, json),
        Command::Scan { grid, json } => cmd_scan(&grid.bounds(), json),
        Command::Transform {
            literal,
            indices,
            curve,
        } => cmd_transform(&literal, &indices, curve),
        Command::Orbit {
            points,
            max_degree,
            json,
        } => cmd_orbit(points, max_degree, json),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn parse_system(s: &str) -> Result<LinearSystem, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable report")
}

#[derive(Serialize)]
struct DimOutput<'a> {
    system: String,
    dimension: i64,
    expected: i64,
    virtual_dimension: i64,
    special: bool,
    speciality: i64,
    report: &'a DimensionReport,
}

fn cmd_dim(literal: &str, trace: bool, json: bool) -> CmdResult {
    let l = parse_system(literal)?;
    let v = l.virtual_dimension().map_err(|e| e.to_string())?;
    let report = conjectured_dimension(&l);
    let (special, speciality) = is_special(&l);
    if json {
        let out = DimOutput {
            system: l.to_string(),
            dimension: report.dimension,
            expected: l.expected_dimension(),
            virtual_dimension: v,
            special,
            speciality,
            report: &report,
        };
        out!("{}", to_json(&out));
        return Ok(ExitCode::SUCCESS);
    }
    out!("system\t{}", l.compact());
    out!("dimension\t{}", report.dimension);
    out!("expected\t{}", l.expected_dimension());
    out!("virtual\t{v}");
    let verdict = if special { "special" } else { "non_special" };
    out!("verdict\t{verdict}");
    out!("speciality\t{speciality}");
    if trace {
        out!("{}", report.trace);
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct OracleOutput {
    system: String,
    prime: u64,
    seeds: Vec<u64>,
    dimension: i64,
    h1: i64,
    rank: usize,
    ranks: Vec<usize>,
    rows: usize,
    cols: usize,
    warning: Option<String>,
}

fn cmd_oracle(literal: &str, config: &OracleConfig, max_cols: u64, json: bool) -> CmdResult {
    let l = parse_system(literal)?;
    let cols = binomial(l.degree + 3, 3);
    if cols > max_cols as i64 {
        return Err(format!(
            "degree {} needs {cols} columns, above --max-cols {max_cols}",
            l.degree
        ));
    }
    let report = oracle_dimension(&l, config).map_err(|e| e.to_string())?;
    let h1 = if report.dimension >= 0 {
        report.dimension - l.expected_dimension()
    } else {
        0
    };
    if let Some(w) = &report.warning {
        eprintln!("warning: {w}");
    }
    if json {
        let out = OracleOutput {
            system: l.to_string(),
            prime: config.prime,
            seeds: config.seeds.clone(),
            dimension: report.dimension,
            h1,
            rank: report.rank,
            ranks: report.ranks.clone(),
            rows: report.rows,
            cols: report.cols,
            warning: report.warning.clone(),
        };
        out!("{}", to_json(&out));
        return Ok(ExitCode::SUCCESS);
    }
    out!("system\t{}", l.compact());
    out!("dimension\t{}", report.dimension);
    out!("h1\t{h1}");
    out!("rank\t{}", report.rank);
    out!("matrix\t{}x{}", report.rows, report.cols);
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct BoundsOutput {
    degrees: [i64; 2],
    mults: [i64; 2],
    points: [usize; 2],
}

impl From<&GridBounds> for BoundsOutput {
    fn from(b: &GridBounds) -> Self {
        BoundsOutput {
            degrees: [*b.degrees.start(), *b.degrees.end()],
            mults: [*b.mults.start(), *b.mults.end()],
            points: [*b.points.start(), *b.points.end()],
        }
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    bounds: BoundsOutput,
    prime: u64,
    seeds: &'a [u64],
    cells: usize,
    mismatches: Vec<&'a GridRow>,
}

fn cmd_verify(
    bounds: &GridBounds,
    config: &OracleConfig,
    homogeneous: bool,
    json: bool,
) -> CmdResult {
    let report = verify_grid(bounds, config).map_err(|e| e.to_string())?;
    let mismatches: Vec<&GridRow> = report.mismatches().collect();
    for row in report.rows.iter().filter(|r| r.unstable) {
        eprintln!(
            "warning: seeds disagree at d={} m={} r={}",
            row.d, row.m, row.r
        );
    }
    if json {
        let out = VerifyOutput {
            bounds: bounds.into(),
            prime: report.prime,
            seeds: &report.seeds,
            cells: report.rows.len(),
            mismatches,
        };
        out!("{}", to_json(&out));
    } else {
        let mut out = String::from("d\tm\tr\tconjectured\toracle\tmatch");
        if homogeneous {
            out.push_str("\texpected\tverdict");
        }
        for row in &report.rows {
            let _ = write!(
                out,
                "\n{}\t{}\t{}\t{}\t{}\t{}",
                row.d,
                row.m,
                row.r,
                row.conjectured,
                row.oracle,
                if row.matches { "yes" } else { "no" }
            );
            if homogeneous {
                let _ = write!(out, "\t{}\t{}", row.expected, row.verdict);
            }
        }
        out!("{out}");
        eprintln!(
            "{} cells, {} mismatches",
            report.rows.len(),
            report.mismatch_count()
        );
    }
    Ok(if report.mismatch_count() > 0 {
        ExitCode::from(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    })
}

#[derive(Serialize)]
struct ScanRow {
    d: i64,
    m: i64,
    r: usize,
    verdict: Verdict,
    conjectured: i64,
    expected: i64,
    report: DimensionReport,
}

fn cmd_scan(bounds: &GridBounds, json: bool) -> CmdResult {
    let rows: Vec<ScanRow> = bounds
        .cells()
        .map(|(d, m, r)| {
            let l = LinearSystem::homogeneous(d, m, r);
            let report = conjectured_dimension(&l);
            ScanRow {
                d,
                m,
                r,
                verdict: classify_homogeneous(d, m, r),
                conjectured: report.dimension,
                expected: l.expected_dimension(),
                report,
            }
        })
        .collect();
    if json {
        out!("{}", to_json(&rows));
        return Ok(ExitCode::SUCCESS);
    }
    let mut out = String::from("d\tm\tr\tverdict\tconjectured_dim\texpected_dim");
    for row in &rows {
        let _ = write!(
            out,
            "\n{}\t{}\t{}\t{}\t{}\t{}",
            row.d, row.m, row.r, row.verdict, row.conjectured, row.expected
        );
    }
    out!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn zero_based(indices: &[usize], points: usize) -> Result<[usize; 4], String> {
    let mut idx = [0; 4];
    for (k, (slot, &i)) in idx.iter_mut().zip(indices).enumerate() {
        if i == 0 || i > points {
            return Err(format!("index {i}: points are numbered 1..={points}"));
        }
        if indices[..k].contains(&i) {
            return Err(format!("index {i} repeated"));
        }
        *slot = i - 1;
    }
    Ok(idx)
}

fn cmd_transform(literal: &str, indices: &[usize], curve: bool) -> CmdResult {
    if curve {
        let c: CurveClass = literal.parse().map_err(|e| format!("{e}"))?;
        let idx = zero_based(indices, c.mults.len())?;
        let image = if c.incidences.is_some() {
            if idx != [0, 1, 2, 3] {
                return Err("curves with incidences transform only at points 1 2 3 4".into());
            }
            cremona_curve_full(&c)
        } else {
            cremona_curve(&c, idx)
        };
        out!("{}", image.map_err(|e| e.to_string())?);
    } else {
        let l = parse_system(literal)?;
        let idx = zero_based(indices, l.num_points().max(4))?;
        let image = cremona_system(&l, idx).map_err(|e| e.to_string())?;
        out!("{}", image.normalize());
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct OrbitRow {
    class: String,
    degree: i64,
    linear: i64,
    quadratic: i64,
    monotone: bool,
    depth: usize,
}

fn cmd_orbit(points: usize, max_degree: i64, json: bool) -> CmdResult {
    if points < 2 {
        return Err(format!("--points {points}: a line needs at least 2 points"));
    }
    let orbit = line_orbit(points, max_degree);
    let rows: Vec<OrbitRow> = orbit
        .classes
        .iter()
        .map(|oc| OrbitRow {
            class: oc.class.compact(),
            degree: oc.class.degree,
            linear: oc.invariants.0,
            quadratic: oc.invariants.1,
            monotone: oc.monotone,
            depth: oc.depth,
        })
        .collect();
    if json {
        out!("{}", to_json(&rows));
        return Ok(ExitCode::SUCCESS);
    }
    let mut out = String::from("class\tlinear\tquadratic\tmonotone\tdepth");
    for row in &rows {
        let _ = write!(
            out,
            "\n{}\t{}\t{}\t{}\t{}",
            row.class,
            row.linear,
            row.quadratic,
            if row.monotone { "yes" } else { "no" },
            row.depth
        );
    }
    out!("{out}");
    Ok(ExitCode::SUCCESS)
}
