//! `qsw` - qutrit reset words and state preparation from the command line.
//!
//! Subcommands: `sync-check`, `scan`, `dfa`, `states`, `prepare`, and
//! `cerny` (a shorthand for `dfa --cerny`). Angles are radians unless
//! `--pi-units` is given. Every run is deterministic: identical flags
//! produce byte-identical output.
//!
//! Exit codes: 0 success, 2 usage or validation error, 3 I/O error.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use qsw::channels::{QuantumAlphabet, QuantumWord};
use qsw::dfa::{cerny_automaton, Dfa};
use qsw::linalg::{ComplexVec3, PureState, C64};
use qsw::prep::{compile_target, generate_family, PrepFamily};
use qsw::qsync::{scan_overlap, InitialState, ScanGrid, SyncReport};

#[derive(Parser)]
#[command(
    name = "qsw",
    version,
    about = "Qutrit reset words: synchronization checks, angle scans, classical DFA reset words, and state preparation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write output to PATH instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Seed for sampling-based analyses (accepted for interface stability;
    /// the current subcommands are fully deterministic)
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Interpret all angle arguments as multiples of pi
    #[arg(long, global = true)]
    pi_units: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Worst-case and maximally-mixed fidelities of a word toward |2>
    SyncCheck {
        /// Angle of the reset-plane rotation in channel A (radians)
        #[arg(long)]
        theta: f64,
        /// Angle of the planar rotation B (radians)
        #[arg(long)]
        phi: f64,
        /// Word over the letters A, B, C, applied left to right
        #[arg(long)]
        word: String,
        /// Phase-gate angle alpha, used when the word contains C
        #[arg(long, default_value_t = 0.0)]
        alpha: f64,
        /// Phase-gate angle beta, used when the word contains C
        #[arg(long, default_value_t = 0.0)]
        beta: f64,
    },
    /// CSV scan of the ABA overlap with |2> over a (theta, phi) grid,
    /// starting from the maximally mixed state
    Scan {
        /// Lower end of the theta axis [default: 0.4 pi]
        #[arg(long)]
        theta_min: Option<f64>,
        /// Upper end of the theta axis [default: 0.6 pi]
        #[arg(long)]
        theta_max: Option<f64>,
        /// Lower end of the phi axis [default: 0.4 pi]
        #[arg(long)]
        phi_min: Option<f64>,
        /// Upper end of the phi axis [default: 0.6 pi]
        #[arg(long)]
        phi_max: Option<f64>,
        /// Grid points per axis (at least 2)
        #[arg(long, default_value_t = 101)]
        steps: usize,
    },
    /// Classical automata: check a word, find reset words, or solve the
    /// cyclic extremal family
    Dfa {
        /// Automaton file (JSON); required unless --cerny is given
        #[arg(long, value_name = "PATH")]
        file: Option<PathBuf>,
        /// Test whether WORD drives every state to one state
        #[arg(long, value_name = "WORD")]
        check: Option<String>,
        /// Find a shortest synchronizing word by subset BFS
        #[arg(long)]
        shortest: bool,
        /// Find a synchronizing word with the pair-merging heuristic
        #[arg(long)]
        greedy: bool,
        /// Generate the N-state cyclic family and solve it
        #[arg(long, value_name = "N")]
        cerny: Option<usize>,
    },
    /// Emit the preparation family as a CSV point cloud
    States {
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        phi: f64,
        /// Index range: gate counts run over 0..n
        #[arg(long)]
        n: usize,
        /// Phase-gate angle alpha; together with --beta switches to the
        /// complex family
        #[arg(long, requires = "beta")]
        alpha: Option<f64>,
        /// Phase-gate angle beta
        #[arg(long, requires = "alpha")]
        beta: Option<f64>,
    },
    /// Compile a target state into a reset-and-prepare word
    Prepare {
        /// Three comma-separated amplitudes, e.g. "0,1,0" or
        /// "0.5,0.5+0.5i,0.5" (complex amplitudes need --alpha/--beta)
        #[arg(long)]
        target: String,
        #[arg(long)]
        theta: f64,
        #[arg(long)]
        phi: f64,
        /// Index range of the family searched
        #[arg(long)]
        n: usize,
        #[arg(long, requires = "beta")]
        alpha: Option<f64>,
        #[arg(long, requires = "alpha")]
        beta: Option<f64>,
    },
    /// Shortest reset-word length for the N-state cyclic family
    Cerny { n: usize },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Io(String),
}

impl CliError {
    fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Usage(_) => ExitCode::from(2),
            CliError::Io(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Io(m) => m,
        }
    }
}

impl From<qsw::Error> for CliError {
    fn from(e: qsw::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let pi_units = cli.pi_units;
    let output = match &cli.command {
        Command::SyncCheck {
            theta,
            phi,
            word,
            alpha,
            beta,
        } => cmd_sync_check(
            angle(*theta, pi_units)?,
            angle(*phi, pi_units)?,
            word,
            angle(*alpha, pi_units)?,
            angle(*beta, pi_units)?,
        )?,
        Command::Scan {
            theta_min,
            theta_max,
            phi_min,
            phi_max,
            steps,
        } => cmd_scan(
            angle_or(*theta_min, 0.4 * PI, pi_units)?,
            angle_or(*theta_max, 0.6 * PI, pi_units)?,
            angle_or(*phi_min, 0.4 * PI, pi_units)?,
            angle_or(*phi_max, 0.6 * PI, pi_units)?,
            *steps,
        )?,
        Command::Dfa {
            file,
            check,
            shortest,
            greedy,
            cerny,
        } => cmd_dfa(file.as_deref(), check.as_deref(), *shortest, *greedy, *cerny)?,
        Command::States {
            theta,
            phi,
            n,
            alpha,
            beta,
        } => cmd_states(
            angle(*theta, pi_units)?,
            angle(*phi, pi_units)?,
            *n,
            angle_opt(*alpha, pi_units)?,
            angle_opt(*beta, pi_units)?,
        )?,
        Command::Prepare {
            target,
            theta,
            phi,
            n,
            alpha,
            beta,
        } => cmd_prepare(
            target,
            angle(*theta, pi_units)?,
            angle(*phi, pi_units)?,
            *n,
            angle_opt(*alpha, pi_units)?,
            angle_opt(*beta, pi_units)?,
        )?,
        Command::Cerny { n } => cmd_cerny(*n)?,
    };
    write_output(cli.out.as_deref(), &output)
}

fn angle(value: f64, pi_units: bool) -> Result<f64, CliError> {
    let v = if pi_units { value * PI } else { value };
    if !v.is_finite() {
        return Err(CliError::Usage(format!("angle {value} is not finite")));
    }
    Ok(v)
}

fn angle_opt(value: Option<f64>, pi_units: bool) -> Result<Option<f64>, CliError> {
    value.map(|v| angle(v, pi_units)).transpose()
}

/// Defaults are already in radians and are not rescaled by --pi-units.
fn angle_or(value: Option<f64>, default_rad: f64, pi_units: bool) -> Result<f64, CliError> {
    match value {
        Some(v) => angle(v, pi_units),
        None => Ok(default_rad),
    }
}

fn write_output(out: Option<&std::path::Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

/// 12 significant digits, locale-independent.
fn sig12(v: f64) -> String {
    format!("{v:.11e}")
}

#[derive(Serialize)]
struct SyncCheckOut {
    word: String,
    theta: f64,
    phi: f64,
    worst_case_fidelity: f64,
    mixed_state_fidelity: f64,
}

fn cmd_sync_check(
    theta: f64,
    phi: f64,
    word: &str,
    alpha: f64,
    beta: f64,
) -> Result<String, CliError> {
    if word.is_empty() {
        return Err(CliError::Usage(
            "the word must contain at least one letter over {A, B, C}".into(),
        ));
    }
    let alphabet = QuantumAlphabet::abc(theta, phi, alpha, beta);
    let w = QuantumWord::new(&alphabet, word)?;
    let target = PureState::basis_ket(2).expect("label 2 is valid");
    let report = SyncReport::evaluate(&w, &target);
    let out = SyncCheckOut {
        word: word.to_string(),
        theta,
        phi,
        worst_case_fidelity: report.worst_case_fidelity(),
        mixed_state_fidelity: report.fidelity_from_maximally_mixed(),
    };
    Ok(format!(
        "{}\n",
        serde_json::to_string(&out).expect("report serializes")
    ))
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}

fn cmd_scan(
    theta_min: f64,
    theta_max: f64,
    phi_min: f64,
    phi_max: f64,
    steps: usize,
) -> Result<String, CliError> {
    if steps < 2 {
        return Err(CliError::Usage(format!("need at least 2 steps, got {steps}")));
    }
    let thetas = linspace(theta_min, theta_max, steps);
    let phis = linspace(phi_min, phi_max, steps);
    let grid = ScanGrid::new(thetas.clone(), phis.clone(), "ABA", InitialState::MaximallyMixed)?;
    let target = PureState::basis_ket(2).expect("label 2 is valid");
    let overlap = scan_overlap(&grid, &target);

    let mut csv = String::from("theta,phi,overlap\n");
    for (i, theta) in thetas.iter().enumerate() {
        for (j, phi) in phis.iter().enumerate() {
            csv.push_str(&format!(
                "{},{},{}\n",
                sig12(*theta),
                sig12(*phi),
                sig12(overlap[i][j])
            ));
        }
    }
    Ok(csv)
}

#[derive(Serialize)]
struct CheckOut {
    synchronizing: bool,
    state: Option<usize>,
}

#[derive(Serialize)]
struct WordOut {
    word: Option<String>,
}

#[derive(Serialize)]
struct CernyOut {
    word: String,
    word_length: usize,
}

fn cmd_dfa(
    file: Option<&std::path::Path>,
    check: Option<&str>,
    shortest: bool,
    greedy: bool,
    cerny: Option<usize>,
) -> Result<String, CliError> {
    let modes = usize::from(check.is_some())
        + usize::from(shortest)
        + usize::from(greedy)
        + usize::from(cerny.is_some());
    if modes != 1 {
        return Err(CliError::Usage(
            "choose exactly one of --check WORD, --shortest, --greedy, --cerny N".into(),
        ));
    }
    if let Some(n) = cerny {
        if file.is_some() {
            return Err(CliError::Usage("--cerny generates its own automaton; drop --file".into()));
        }
        return cmd_cerny(n);
    }
    let Some(path) = file else {
        return Err(CliError::Usage("--file PATH is required for this mode".into()));
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let dfa = Dfa::from_json(&text)?;

    let json = if let Some(word) = check {
        let state = dfa.is_synchronizing(word)?;
        serde_json::to_string(&CheckOut {
            synchronizing: state.is_some(),
            state,
        })
    } else if shortest {
        serde_json::to_string(&WordOut {
            word: dfa.shortest_sync_word()?,
        })
    } else {
        serde_json::to_string(&WordOut {
            word: dfa.greedy_sync_word()?,
        })
    };
    Ok(format!("{}\n", json.expect("output serializes")))
}

fn cmd_cerny(n: usize) -> Result<String, CliError> {
    let dfa = cerny_automaton(n)?;
    let word = dfa
        .shortest_sync_word()?
        .expect("the cyclic family is synchronizable");
    let out = CernyOut {
        word_length: word.len(),
        word,
    };
    Ok(format!(
        "{}\n",
        serde_json::to_string(&out).expect("output serializes")
    ))
}

fn build_family(
    theta: f64,
    phi: f64,
    n: usize,
    alpha: Option<f64>,
    beta: Option<f64>,
) -> Result<PrepFamily, CliError> {
    Ok(match (alpha, beta) {
        (Some(a), Some(b)) => PrepFamily::complex(theta, phi, a, b, n)?,
        _ => PrepFamily::real(theta, phi, n)?,
    })
}

fn cmd_states(
    theta: f64,
    phi: f64,
    n: usize,
    alpha: Option<f64>,
    beta: Option<f64>,
) -> Result<String, CliError> {
    let family = build_family(theta, phi, n, alpha, beta)?;
    let states = generate_family(&family)?;
    let mut csv = String::new();
    if family.is_complex() {
        csv.push_str("l,k,j,re1,im1,re2,im2,re3,im3\n");
        for (idx, state) in states {
            let a = state.amplitudes().0;
            csv.push_str(&format!(
                "{},{},{},{},{},{},{},{},{}\n",
                idx.l,
                idx.k,
                idx.j,
                sig12(a[0].re),
                sig12(a[0].im),
                sig12(a[1].re),
                sig12(a[1].im),
                sig12(a[2].re),
                sig12(a[2].im)
            ));
        }
    } else {
        csv.push_str("k,j,x,y,z\n");
        for (idx, state) in states {
            let a = state.amplitudes().0;
            csv.push_str(&format!(
                "{},{},{},{},{}\n",
                idx.k,
                idx.j,
                sig12(a[0].re),
                sig12(a[1].re),
                sig12(a[2].re)
            ));
        }
    }
    Ok(csv)
}

#[derive(Serialize)]
struct PrepareOut {
    word: String,
    l: usize,
    k: usize,
    j: usize,
    predicted_fidelity: f64,
}

/// Parses one amplitude in `a`, `bi`, or `a+bi` form.
fn parse_amplitude(text: &str) -> Result<C64, CliError> {
    let t = text.trim();
    let bad = || CliError::Usage(format!("cannot parse amplitude {text:?} (use a, bi, or a+bi)"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix(['i', 'I']) else {
        return t.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| bad());
    };
    // split "a±b" at the last sign that is not leading and not an exponent sign
    let split = body
        .char_indices()
        .rev()
        .find(|(pos, ch)| {
            matches!(ch, '+' | '-')
                && *pos > 0
                && !matches!(body.as_bytes()[pos - 1], b'e' | b'E')
        })
        .map(|(pos, _)| pos);
    let (re_part, im_part) = match split {
        Some(pos) => (&body[..pos], &body[pos..]),
        None => ("", body),
    };
    let re = if re_part.is_empty() {
        0.0
    } else {
        re_part.parse::<f64>().map_err(|_| bad())?
    };
    let im = match im_part {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => s.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(C64::new(re, im))
}

fn parse_target(text: &str) -> Result<PureState, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 3 {
        return Err(CliError::Usage(format!(
            "target needs exactly 3 comma-separated amplitudes, got {}",
            parts.len()
        )));
    }
    let v = ComplexVec3([
        parse_amplitude(parts[0])?,
        parse_amplitude(parts[1])?,
        parse_amplitude(parts[2])?,
    ]);
    let norm = v.norm();
    if (norm - 1.0).abs() >= 1e-3 {
        return Err(CliError::Usage(format!(
            "target norm {norm:.6} differs from 1 by {:.2e}; normalize it first",
            (norm - 1.0).abs()
        )));
    }
    if (norm - 1.0).abs() > qsw::linalg::UNIT_NORM_TOL {
        eprintln!("warning: target norm {norm:.12} auto-normalized");
    }
    Ok(PureState::normalized(v)?)
}

fn cmd_prepare(
    target: &str,
    theta: f64,
    phi: f64,
    n: usize,
    alpha: Option<f64>,
    beta: Option<f64>,
) -> Result<String, CliError> {
    let target = parse_target(target)?;
    let family = build_family(theta, phi, n, alpha, beta)?;
    let result = compile_target(&family, &target)?;
    let out = PrepareOut {
        word: result.full_word,
        l: result.index.l,
        k: result.index.k,
        j: result.index.j,
        predicted_fidelity: result.predicted_fidelity,
    };
    Ok(format!(
        "{}\n",
        serde_json::to_string(&out).expect("output serializes")
    ))
}
