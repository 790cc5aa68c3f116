//! Subcommand implementations. Each returns its stdout text; a budget
//! failure after partial work comes back with that text attached.

use std::fmt::Write;
use std::fs;
use std::path::Path;

use num_bigint::BigInt;

use monocount_core::algebra::{Grading, MultiDegree};
use monocount_core::boards::{
    attack_graph, phi_table_with, BoardSpec, IncompatibilityGraph, OwnSquareMode, PhiOptions, ProfileOptions,
    WorkBudget,
};
use monocount_core::groebner::BinomialBasis;
use monocount_core::hilbert::{hilbert_numerator_with, HilbertOptions, MonomialIdeal};
use monocount_core::walks::{analyze, oracle, StepSet, WalkConfig, WalkCountReport};

use crate::cli::{BoardArgs, Command, Format, HilbertArgs, OracleCommand, QueensArgs, StepArgs, WalksArgs};
use crate::cli::{OracleQueensArgs, OracleWalksArgs};
use crate::parallel::{free_profile_parallel, with_threads};
use crate::render::{self, TableContext};
use crate::{io, CliError};

/// Text for stdout and, when something went wrong after partial output,
/// the error to report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub error: Option<CliError>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, error: None }
    }

    pub fn exit_code(&self) -> i32 {
        self.error.as_ref().map_or(0, CliError::exit_code)
    }
}

pub fn execute(command: &Command) -> Outcome {
    let result = match command {
        Command::Queens(a) => queens(a),
        Command::Walks(a) => walks(a).map(Outcome::ok),
        Command::Hilbert(a) => hilbert(a).map(Outcome::ok),
        Command::Oracle(OracleCommand::Walks(a)) => oracle_walks(a).map(Outcome::ok),
        Command::Oracle(OracleCommand::Queens(a)) => oracle_queens(a).map(Outcome::ok),
    };
    result.unwrap_or_else(|e| Outcome {
        stdout: String::new(),
        error: Some(e),
    })
}

fn board_graph(args: &BoardArgs) -> Result<(IncompatibilityGraph, String), CliError> {
    let mode = OwnSquareMode::from(args.own_square);
    let mode_name = match mode {
        OwnSquareMode::PaperLiteral => "paper-literal",
        OwnSquareMode::ExcludeOccupied => "exclude-occupied",
    };
    if let Some(path) = &args.graph {
        let g = io::read_graph(path)?;
        let g = match mode {
            OwnSquareMode::PaperLiteral => g,
            OwnSquareMode::ExcludeOccupied => g.with_diagonal()?,
        };
        return Ok((g, format!("graph {}, own square {mode_name}", path.display())));
    }
    let n = args
        .n
        .ok_or_else(|| CliError::input("either --n or --graph is required"))?;
    if n == 0 {
        return Err(CliError::input("--n must be at least 1"));
    }
    let (piece, piece_name) = match &args.piece_file {
        Some(path) => (io::read_piece(path)?, path.display().to_string()),
        None => (io::piece_by_name(&args.piece)?, args.piece.clone()),
    };
    let spec = BoardSpec::new(n, piece).with_mode(mode);
    let g = attack_graph(&spec)?;
    Ok((g, format!("{piece_name} on {n}x{n}, own square {mode_name}")))
}

fn queens(args: &QueensArgs) -> Result<Outcome, CliError> {
    let (graph, description) = board_graph(&args.board)?;
    let (kmin, kmax) = match (args.k, args.kmax) {
        (Some(k), _) => (k, k),
        (None, Some(kmax)) => (args.kmin, kmax),
        (None, None) => return Err(CliError::input("either --k or --kmax is required")),
    };
    if kmin > kmax {
        return Err(CliError::input(format!("--kmin {kmin} exceeds --kmax {kmax}")));
    }
    let options = PhiOptions {
        profile: ProfileOptions {
            symmetry: !args.no_symmetry,
            min_free: 0,
            node_budget: args.node_budget,
        },
        hf_source: args.hf_source.into(),
        hilbert: HilbertOptions {
            node_budget: args.hilbert_budget,
            ..HilbertOptions::default()
        },
        ..PhiOptions::default()
    };
    let budget = WorkBudget::new(args.node_budget);
    let table = with_threads(args.threads, || {
        phi_table_with(&graph, kmin..=kmax, &options, &budget, |k, opts| {
            free_profile_parallel(&graph, k, opts, &budget)
        })
    })?;
    let ctx = TableContext {
        description,
        placements: graph.placements(),
        targets: graph.targets(),
        umax: args.umax.unwrap_or(graph.targets()),
        include_hf: args.hf,
    };
    let stdout = render::phi_table(&table, &ctx, args.format.into());
    let error = table.budget_exhausted.then(|| {
        CliError::Budget(format!(
            "node budget {} exhausted; {} of {} rows enumerated, {} cross-checked",
            args.node_budget.unwrap_or(u64::MAX),
            table.rows_done,
            kmax - kmin + 1,
            table.rows_checked
        ))
    });
    Ok(Outcome { stdout, error })
}

fn step_set(args: &StepArgs) -> Result<StepSet, CliError> {
    match (&args.steps, &args.preset) {
        (Some(path), _) => io::read_step_set(path),
        (None, Some(name)) => io::preset(name),
        (None, None) => io::preset("knight"),
    }
}

fn walks(args: &WalksArgs) -> Result<String, CliError> {
    let steps = step_set(&args.steps)?;
    let config = WalkConfig {
        cross_check_limit: args.cross_check_limit,
        kernel_inner: args.kernel_order.into(),
        homogeneous_inner: args.homogeneous_order.into(),
        g_order: args.g_order.into(),
        oracle_cap: args.oracle_cap,
        hilbert: HilbertOptions {
            node_budget: args.hilbert_budget,
            ..HilbertOptions::default()
        },
        verify_bases: !args.skip_basis_check,
    };
    let report = analyze(&steps, &config)?;
    if let Some(dir) = &args.export_dir {
        export(&report, dir)?;
    }
    Ok(match args.format {
        Format::Json => json_text(&render::walk_json(&report)),
        Format::Pretty | Format::Csv => render::walk_pretty(&report),
    })
}

/// Basis file: an order comment, a `vars` line, one `lead - trail` per line.
pub fn basis_text(b: &BinomialBasis) -> String {
    let mut out = format!("# order {}\nvars {}\n", b.order().name(), b.vars().names().join(" "));
    for e in b.elements() {
        let _ = writeln!(out, "{}", e.display(b.vars()));
    }
    out
}

/// Ideal file in the format read by `hilbert --ideal`.
pub fn ideal_text(i: &MonomialIdeal) -> String {
    let mut out = format!("vars {}\n", i.vars().names().join(" "));
    for g in i.generators() {
        let _ = writeln!(out, "{}", g.display(i.vars()));
    }
    out
}

fn export(r: &WalkCountReport, dir: &Path) -> Result<(), CliError> {
    let write = |name: &str, text: String| {
        fs::write(dir.join(name), text).map_err(|e| CliError::Input(format!("{}: {e}", dir.join(name).display())))
    };
    fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
    write("presentation.gb", basis_text(&r.kernel.presentation_basis))?;
    write("eliminated.gb", basis_text(&r.kernel.eliminated))?;
    write("kernel.gb", basis_text(&r.kernel.kernel))?;
    write("g_kernel.gb", basis_text(&r.g_basis))?;
    write("homogenized.gb", basis_text(&r.homogeneous.homogenized))?;
    write("homogeneous.gb", basis_text(&r.homogeneous.basis))?;
    write("kernel_initial.ideal", ideal_text(&r.kernel_initial))?;
    write("homogeneous_initial.ideal", ideal_text(&r.homogeneous_initial))?;
    Ok(())
}

fn hilbert(args: &HilbertArgs) -> Result<String, CliError> {
    let ideal = io::read_ideal(&args.ideal, args.vars)?;
    let grading = match &args.grading {
        Some(path) => io::read_grading(path, ideal.nvars())?,
        None => Grading::standard(ideal.nvars()),
    };
    let options = HilbertOptions {
        node_budget: args.hilbert_budget,
        ..HilbertOptions::default()
    };
    let raw = hilbert_numerator_with(&ideal, &grading, &options)?;
    let (series, closed, values) = if raw.unit_denominator_exponent().is_some() {
        let series = raw.canonicalize()?;
        let closed = series.closed_form()?;
        let values: Vec<BigInt> = (0..=u64::from(args.dmax)).map(|d| closed.value(d)).collect();
        (series, Some(closed), values)
    } else if raw.rank() == 1 {
        let dense = raw.expand(&MultiDegree::from_slice(&[args.dmax]))?;
        let values = dense.univariate().to_vec();
        (raw, None, values)
    } else {
        (raw, None, Vec::new())
    };
    Ok(match args.format {
        Format::Json => json_text(&render::hilbert_json(&series, closed.as_ref(), &values)),
        Format::Pretty | Format::Csv => render::hilbert_pretty(&series, closed.as_ref(), &values),
    })
}

fn oracle_walks(args: &OracleWalksArgs) -> Result<String, CliError> {
    let steps = step_set(&args.steps)?;
    let rows = oracle(&steps, args.dmax, args.oracle_cap)?;
    Ok(match args.format {
        Format::Csv => render::oracle_csv(&rows),
        Format::Json => json_text(&render::oracle_json(&rows)),
        Format::Pretty => render::oracle_pretty(&rows),
    })
}

fn oracle_queens(args: &OracleQueensArgs) -> Result<String, CliError> {
    let (graph, _) = board_graph(&args.board)?;
    let options = ProfileOptions {
        symmetry: false,
        min_free: 0,
        node_budget: args.node_budget,
    };
    let budget = WorkBudget::new(args.node_budget);
    let profile = with_threads(args.threads, || {
        free_profile_parallel(&graph, args.k, &options, &budget)
    })?;
    let profiles = [profile];
    Ok(match args.format {
        Format::Csv => render::profile_csv(&profiles),
        Format::Json => json_text(&render::profile_json(&profiles)),
        Format::Pretty => render::profile_pretty(&profiles),
    })
}

fn json_text(v: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
