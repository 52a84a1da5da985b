use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use quantumness::measure::l_spectrum;
use quantumness::sweep::format_number;
use quantumness::sweep::{
    csv_string, evaluate_point, figure_preset, read_kraus_file, run_sweep, validate_channel,
    write_csv_file, ConfigMap, FamilyParams, SweepConfig, FIGURE_NAMES,
};
use quantumness::{Error, Family, Result};

#[derive(Parser, Debug)]
#[command(
    name = "quantumness",
    version,
    about = "Quantumness witness and average fidelity of qubit noise channels"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate Q and the average fidelity at a single parameter point.
    Point(ParamArgs),
    /// Sweep a family over a grid and write CSV.
    Sweep(ParamArgs),
    /// Check completeness, Choi positivity and the affine representation.
    Validate {
        #[command(flatten)]
        params: ParamArgs,
        /// Validate operators read from a Kraus file instead of a family.
        #[arg(long)]
        kraus: Option<PathBuf>,
    },
    /// Regenerate the data behind one of the figures (fig1..fig5).
    Figure {
        name: String,
        /// Output directory; one CSV per panel.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        #[arg(long)]
        mc_samples: Option<u64>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Args, Debug, Default)]
struct ParamArgs {
    /// key = value file; flags given on the command line take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
    /// rtn | nmd | pd | gad | ad | unruh
    #[arg(long)]
    family: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    gamma: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    n: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    r: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    omega: Option<String>,
    #[arg(long = "chi-t", allow_hyphen_values = true)]
    chi_t: Option<String>,
    /// Time for single-point evaluation.
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
    /// NMD time-like parameter, used instead of kappa and t.
    #[arg(long, allow_hyphen_values = true)]
    p: Option<String>,
    /// Sweep axis: t | chi_t | a | r (unruh accepts a or r).
    #[arg(long)]
    axis: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_start: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    t_stop: Option<String>,
    #[arg(long)]
    steps: Option<String>,
    #[arg(long)]
    mc_samples: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    /// Output CSV path (sweep); stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ParamArgs {
    fn config_map(&self) -> Result<ConfigMap> {
        let mut map = match &self.config {
            Some(path) => ConfigMap::from_file(path)?,
            None => ConfigMap::new(),
        };
        let mut cli = ConfigMap::new();
        let flags = [
            ("family", &self.family),
            ("b", &self.b),
            ("gamma", &self.gamma),
            ("alpha", &self.alpha),
            ("kappa", &self.kappa),
            ("n", &self.n),
            ("r", &self.r),
            ("a", &self.a),
            ("omega", &self.omega),
            ("chi_t", &self.chi_t),
            ("t", &self.t),
            ("p", &self.p),
            ("axis", &self.axis),
            ("t_start", &self.t_start),
            ("t_stop", &self.t_stop),
            ("steps", &self.steps),
            ("mc_samples", &self.mc_samples),
            ("seed", &self.seed),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                cli.set(key, v.clone())?;
            }
        }
        map.merge(&cli);
        Ok(map)
    }
}

fn family_of(map: &ConfigMap) -> Result<Family> {
    map.get("family")
        .ok_or_else(|| Error::Config {
            field: "family".into(),
            message: "missing".into(),
        })?
        .parse()
}

fn point(args: &ParamArgs) -> Result<ExitCode> {
    let map = args.config_map()?;
    let family = family_of(&map)?;
    let point = FamilyParams::from_map(&map)?.point(family, None)?;
    let mc_samples = map.count("mc_samples")?.unwrap_or(0);
    let seed = map.count("seed")?.unwrap_or(0);
    let row = evaluate_point(f64::NAN, &point, mc_samples, seed, 0)?;
    let channel = point.channel()?;
    let rep = channel.affine_rep()?;
    let eig = l_spectrum(&channel)?;

    println!("family: {family}");
    println!("Q_pipeline: {}", format_number(row.q_pipeline));
    println!("Q_reference: {}", format_number(row.q_reference));
    println!("F_analytic: {}", format_number(row.f_analytic));
    println!("F_reference: {}", format_number(row.f_reference));
    if let Some(mc) = row.mc {
        println!("F_mc: {}", format_number(mc.mean));
        println!("F_mc_stderr: {}", format_number(mc.std_error));
    }
    if let Some(regime) = row.regime {
        println!("regime: {regime}");
    }
    let fmt_row = |r: usize| {
        (0..3)
            .map(|c| format_number(rep.a[(r, c)]))
            .collect::<Vec<_>>()
            .join(" ")
    };
    println!("A: [{}; {}; {}]", fmt_row(0), fmt_row(1), fmt_row(2));
    println!(
        "B: [{} {} {}]",
        format_number(rep.b[0]),
        format_number(rep.b[1]),
        format_number(rep.b[2])
    );
    println!(
        "L_eigenvalues: {} {} {}",
        format_number(eig.l1),
        format_number(eig.l2),
        format_number(eig.l3)
    );
    if row.q_diverges() {
        println!("note: pipeline Q differs from the published closed form at this point");
    }
    Ok(ExitCode::SUCCESS)
}

fn write_rows(rows: &[quantumness::sweep::SweepRow], out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => write_csv_file(rows, path),
        None => {
            print!("{}", csv_string(rows));
            Ok(())
        }
    }
}

fn report_divergence(rows: &[quantumness::sweep::SweepRow]) {
    let diverging = rows.iter().filter(|r| r.q_diverges()).count();
    if diverging > 0 {
        eprintln!(
            "note: Q_pipeline and Q_reference differ on {diverging} of {} rows",
            rows.len()
        );
    }
}

fn sweep(args: &ParamArgs) -> Result<ExitCode> {
    let cfg = SweepConfig::from_map(&args.config_map()?)?;
    let rows = run_sweep(&cfg)?;
    write_rows(&rows, args.out.as_deref())?;
    report_divergence(&rows);
    Ok(ExitCode::SUCCESS)
}

fn validate(args: &ParamArgs, kraus: Option<&Path>) -> Result<ExitCode> {
    let report = match kraus {
        Some(path) => validate_channel(&read_kraus_file(path)?, None),
        None => {
            let map = args.config_map()?;
            let family = family_of(&map)?;
            let point = FamilyParams::from_map(&map)?.point(family, None)?;
            validate_channel(&point.channel()?, point.regime())
        }
    };
    println!("{report}");
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn figure(name: &str, out: &Path, mc_samples: Option<u64>, seed: Option<u64>) -> Result<ExitCode> {
    let preset = figure_preset(name)?;
    std::fs::create_dir_all(out).map_err(|source| Error::Io {
        path: out.to_path_buf(),
        source,
    })?;
    eprintln!("{}: {}", preset.name, preset.description);
    for panel in &preset.panels {
        let mut cfg = panel.config;
        if let Some(m) = mc_samples {
            cfg.mc_samples = m;
        }
        if let Some(s) = seed {
            cfg.seed = s;
        }
        let rows = run_sweep(&cfg)?;
        let path = out.join(format!("{}_{}.csv", preset.name, panel.label));
        write_csv_file(&rows, &path)?;
        println!("{}", path.display());
        report_divergence(&rows);
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Point(args) => point(args),
        Command::Sweep(args) => sweep(args),
        Command::Validate { params, kraus } => validate(params, kraus.as_deref()),
        Command::Figure {
            name,
            out,
            mc_samples,
            seed,
        } => {
            if !FIGURE_NAMES.contains(&name.as_str()) {
                Err(Error::UnknownFigure(name.clone()))
            } else {
                figure(name, out, *mc_samples, *seed)
            }
        }
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}
