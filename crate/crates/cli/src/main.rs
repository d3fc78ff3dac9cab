use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qlink_core::cert::pipeline::STEPS;
use qlink_core::cert::suites::all_passed;
use qlink_core::cert::{annwrel_reduction, build_named, names, pipeline, run_suite, Suite};
use qlink_core::ore::{OrePoly, Shift};
use qlink_core::par::Exec;
use qlink_core::seq::{hopf_v, whitehead_v, Link};
use qlink_core::Error;
use serde_json::json;

#[derive(Parser)]
#[command(name = "qlink", version, about = "Colored Jones annihilators of the Hopf and Whitehead links")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the colored Jones polynomial V(m, n).
    Eval {
        #[arg(long, value_parser = parse_link)]
        link: Link,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite, default_value = "all")]
        suite: Suite,
        /// Grid bounds `MxN`, overriding the suite defaults.
        #[arg(long, value_parser = parse_grid)]
        grid: Option<[i64; 2]>,
    },
    /// Run the five-step reduction and optionally write its operators.
    Reduce {
        /// Directory receiving delta1..5, F1..4, tc1..4, tdel1..4 and the
        /// annwrel multiplier trace.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Print a named operator, or list all names.
    Show {
        #[arg(long)]
        name: Option<String>,
    },
}

fn parse_link(s: &str) -> Result<Link, String> {
    s.parse().map_err(|_| format!("unknown link '{}' (expected hopf or whitehead)", s))
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|_| format!("unknown suite '{}' (expected hopf, whitehead, appendix, rmatrix or all)", s))
}

fn parse_grid(s: &str) -> Result<[i64; 2], String> {
    let bad = || format!("grid must look like MxN with M, N >= 1, got '{}'", s);
    let (a, b) = s.split_once(['x', 'X']).ok_or_else(bad)?;
    let m: i64 = a.trim().parse().map_err(|_| bad())?;
    let n: i64 = b.trim().parse().map_err(|_| bad())?;
    if m < 1 || n < 1 {
        return Err(bad());
    }
    Ok([m, n])
}

/// A failure that maps to an exit code.
enum Exit {
    Usage(String),
    Failed,
}

impl From<io::Error> for Exit {
    fn from(e: io::Error) -> Exit {
        Exit::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = io::stdout();
    let mut out = out.lock();
    let result = match cli.command {
        Command::Eval { link, m, n } => eval(&mut out, cli.format, link, m, n),
        Command::Verify { suite, grid } => verify(&mut out, cli.format, suite, grid),
        Command::Reduce { emit } => reduce(&mut out, cli.format, emit.as_deref()),
        Command::Show { name } => show(&mut out, cli.format, name.as_deref()),
    };
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Exit::Failed) => ExitCode::from(1),
        Err(Exit::Usage(msg)) => {
            eprintln!("error: {}", msg);
            ExitCode::from(2)
        }
    }
}

fn eval(out: &mut impl Write, format: Format, link: Link, m: i64, n: i64) -> Result<(), Exit> {
    let v = match link {
        Link::Hopf => hopf_v(m, n),
        Link::Whitehead => whitehead_v(m, n),
    };
    let v = v.map_err(|e| match e {
        Error::InvalidColor { .. } => Exit::Usage("colors must be ≥ 1".into()),
        other => Exit::Usage(other.to_string()),
    })?;
    match format {
        Format::Text => writeln!(out, "{}", v)?,
        Format::Json => {
            let doc = json!({ "num": v.num_laurent().to_string(), "den": v.den_laurent().to_string() });
            writeln!(out, "{}", doc)?
        }
    }
    Ok(())
}

fn verify(out: &mut impl Write, format: Format, suite: Suite, grid: Option<[i64; 2]>) -> Result<(), Exit> {
    let reports = run_suite(suite, grid, Exec::default());
    match format {
        Format::Text => {
            for r in &reports {
                writeln!(out, "{}", r)?;
            }
            let failed = reports.iter().filter(|r| r.status == qlink_core::cert::Status::Fail).count();
            writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
        }
        Format::Json => {
            let text = serde_json::to_string_pretty(&reports).map_err(|e| Exit::Usage(e.to_string()))?;
            writeln!(out, "{}", text)?;
        }
    }
    if all_passed(&reports) {
        Ok(())
    } else {
        Err(Exit::Failed)
    }
}

fn write_operator(dir: &Path, name: &str, p: &OrePoly) -> io::Result<()> {
    fs::write(dir.join(format!("{}.txt", name)), format!("{}\n", p))
}

fn reduce(out: &mut impl Write, format: Format, emit: Option<&Path>) -> Result<(), Exit> {
    let pl = pipeline().map_err(|e| Exit::Usage(e.to_string()))?;
    let mut degrees = Vec::new();
    let mut ok = true;
    for k in 1..=STEPS {
        let d = pl.delta_at_s1(k).ok().and_then(|d| d.degree(Shift::En));
        ok &= d == Some(k as u32);
        degrees.push(d);
    }
    let target = &qlink_core::cert::ops::abelian_factor(qlink_core::cert::ops::N)
        * &qlink_core::cert::ops::alk_w(qlink_core::cert::ops::N);
    let proportional = pl.delta_at_s1(STEPS).map(|d| d.is_proportional(&target)).unwrap_or(false);
    ok &= proportional;
    if let Some(dir) = emit {
        fs::create_dir_all(dir)?;
        for k in 1..=STEPS {
            write_operator(dir, &format!("delta{}", k), &pl.delta(k))?;
        }
        for k in 1..STEPS {
            write_operator(dir, &format!("F{}", k), pl.f(k))?;
            write_operator(dir, &format!("tc{}", k), pl.tc(k))?;
            write_operator(dir, &format!("tdel{}", k), pl.tdel(k))?;
        }
        let aw = annwrel_reduction().map_err(|e| Exit::Usage(e.to_string()))?;
        for (i, st) in aw.steps.iter().enumerate() {
            write_operator(dir, &format!("annwrel_tc{}", i + 1), &st.tc)?;
            write_operator(dir, &format!("annwrel_tdel{}", i + 1), &st.tdel)?;
        }
        write_operator(dir, "annwrel_remainder", &aw.remainder)?;
    }
    match format {
        Format::Text => {
            for (k, d) in degrees.iter().enumerate() {
                let shown = d.map_or("-".to_string(), |x| x.to_string());
                writeln!(out, "deg(eps_s delta{}; En) = {} (size {})", k + 1, shown, pl.delta(k + 1).size())?;
            }
            writeln!(out, "eps_s delta5 proportional to (En+1)(En-Qn^2) Alk_n_W: {}", proportional)?;
            if let Some(dir) = emit {
                writeln!(out, "operators written to {}", dir.display())?;
            }
        }
        Format::Json => {
            let doc = json!({
                "degrees": degrees,
                "proportional": proportional,
                "sizes": (1..=STEPS).map(|k| pl.delta(k).size()).collect::<Vec<_>>(),
            });
            writeln!(out, "{}", doc)?;
        }
    }
    if ok {
        Ok(())
    } else {
        Err(Exit::Failed)
    }
}

fn show(out: &mut impl Write, format: Format, name: Option<&str>) -> Result<(), Exit> {
    let Some(name) = name else {
        for n in names() {
            writeln!(out, "{}", n)?;
        }
        return Ok(());
    };
    let op = build_named(name).map_err(|e| Exit::Usage(e.to_string()))?;
    match format {
        Format::Text => writeln!(out, "{}", op.value)?,
        Format::Json => {
            let doc = json!({
                "name": op.name,
                "anchor": op.anchor,
                "fingerprint": op.fingerprint(),
                "value": op.value.to_string(),
            });
            writeln!(out, "{}", doc)?
        }
    }
    Ok(())
}
