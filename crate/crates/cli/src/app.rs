use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use unimodal_core::arcs::{enumerate_cylinders, sort_cylinders};
use unimodal_core::cantor::cylinder_interval;
use unimodal_core::gluing::{accessibility_probe, apply_f, ProbeOutcome, Samples};
use unimodal_core::scene::{betweenness_check, build_scene, build_scene_from_tails, verify_noncrossing, PlanarScene};
use unimodal_core::sequence::word_to_string;
use unimodal_core::Error;

use crate::config::{parse_entries, Entry, JobConfig};
use crate::render::{render_svg, Drawing, Orientation, RenderSpec};

#[derive(Parser, Debug)]
#[command(name = "unimodal", version, about = "Planar embeddings of unimodal inverse limit spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
struct JobArgs {
    /// `key = value` or JSON file; flags override its entries
    #[arg(long)]
    config: Option<PathBuf>,
    /// Kneading sequence, e.g. "(101)" or a bare prefix "100110010"
    #[arg(long, allow_hyphen_values = true)]
    nu: Option<String>,
    /// Tent map slope in (1, 2]
    #[arg(long)]
    slope: Option<f64>,
    /// Distinguished left tail, e.g. "(1)."
    #[arg(long = "L")]
    l: Option<String>,
    #[arg(long)]
    depth: Option<usize>,
    /// `rank` or `numeric`
    #[arg(long)]
    x_mode: Option<String>,
    /// Comma separated tails to draw instead of all cylinders
    #[arg(long)]
    tails: Option<String>,
    /// Write the result here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the kneading sequence
    Kneading(JobArgs),
    /// List depth-n cylinders bottom to top with their Cantor blocks
    Cylinders(JobArgs),
    /// Build a scene and print it as JSON
    Scene(JobArgs),
    /// Check a scene for crossings and betweenness violations
    Verify {
        #[command(flatten)]
        job: JobArgs,
        /// Verify this JSON scene instead of building one
        #[arg(long)]
        scene: Option<PathBuf>,
    },
    /// Apply the glue maps and print the glued scene as JSON
    Glue {
        #[command(flatten)]
        job: JobArgs,
        /// Number of stages, default the depth
        #[arg(long)]
        glue: Option<usize>,
    },
    /// Probe the top arc for accessibility after gluing
    Probe {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        x: Option<f64>,
        #[arg(long)]
        glue: Option<usize>,
    },
    /// Draw a scene, or a glued scene with --glue, as SVG
    Render {
        #[command(flatten)]
        job: JobArgs,
        #[arg(long)]
        glue: Option<usize>,
        /// Turn the picture a quarter turn
        #[arg(long)]
        rotate: bool,
        /// Label arcs with their tails
        #[arg(long)]
        labels: bool,
        #[arg(long, default_value_t = 800)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
    },
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ChartOverflow { .. } => Failure::Violation(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn job_config(job: &JobArgs, extra: &[Entry]) -> Result<JobConfig, Failure> {
    let mut entries = match &job.config {
        Some(path) => parse_entries(&std::fs::read_to_string(path)?)?,
        None => Vec::new(),
    };
    let flags = [
        ("nu", job.nu.clone()),
        ("slope", job.slope.map(|s| s.to_string())),
        ("L", job.l.clone()),
        ("depth", job.depth.map(|d| d.to_string())),
        ("x_mode", job.x_mode.clone()),
        ("tails", job.tails.clone()),
        ("output", job.out.as_ref().map(|p| p.display().to_string())),
    ];
    entries.extend(flags.into_iter().filter_map(|(k, v)| v.map(|v| Entry::flag(k, v))));
    entries.extend_from_slice(extra);
    Ok(JobConfig::from_entries(&entries)?)
}

fn scene_of(config: &JobConfig) -> Result<PlanarScene, Failure> {
    let ctx = config.context()?;
    let depth = config.require_depth()?;
    let mode = config.resolved_x_mode();
    Ok(if config.tails.is_empty() {
        build_scene(ctx.nu(), &ctx, depth, mode)?
    } else {
        build_scene_from_tails(ctx.nu(), &ctx, &config.tails, depth, mode)?
    })
}

fn emit(config: &JobConfig, text: &str, stdout: &mut dyn Write) -> Result<(), Failure> {
    match &config.output {
        Some(path) => std::fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn stages(config: &JobConfig, glue: Option<usize>) -> Result<usize, Failure> {
    match glue.or(config.glue_stages) {
        Some(n) => Ok(n),
        None => Ok(config.require_depth()?),
    }
}

fn verify(scene: &PlanarScene, out: &mut dyn Write) -> Result<(), Failure> {
    let geo = verify_noncrossing(scene);
    let comb = betweenness_check(scene);
    writeln!(out, "segments {} joins {}", scene.segments.len(), scene.joins.len())?;
    for v in &geo.violations {
        writeln!(out, "crossing {v:?}")?;
    }
    for v in &comb.violations {
        writeln!(out, "betweenness {v:?}")?;
    }
    if geo.ok() && comb.ok() {
        writeln!(out, "ok")?;
        Ok(())
    } else {
        Err(Failure::Violation(format!(
            "{} crossing and {} betweenness violations",
            geo.violations.len(),
            comb.violations.len()
        )))
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Kneading(job) => {
            let config = job_config(&job, &[])?;
            let nu = config.kneading()?;
            let text = match nu.exact() {
                Some(s) => format!("nu {s}\nexact\n"),
                None => format!("nu {nu}\nprefix {}\n", nu.known_len().unwrap_or(0)),
            };
            emit(&config, &text, out)
        }
        Command::Cylinders(job) => {
            let config = job_config(&job, &[])?;
            let ctx = config.context()?;
            let mut words = enumerate_cylinders(ctx.nu(), config.require_depth()?);
            sort_cylinders(&mut words, ctx.top());
            let mut text = String::new();
            for w in &words {
                let (lo, hi) = cylinder_interval(w, ctx.top());
                text.push_str(&format!("{}. [{lo}, {hi}]\n", word_to_string(w)));
            }
            emit(&config, &text, out)
        }
        Command::Scene(job) => {
            let config = job_config(&job, &[])?;
            let scene = scene_of(&config)?;
            emit(&config, &(scene.to_json() + "\n"), out)
        }
        Command::Verify { job, scene } => {
            let scene = match scene {
                Some(path) => PlanarScene::from_json(&std::fs::read_to_string(path)?)?,
                None => scene_of(&job_config(&job, &[])?)?,
            };
            verify(&scene, out)
        }
        Command::Glue { job, glue } => {
            let config = job_config(&job, &[])?;
            let scene = scene_of(&config)?;
            let glued = apply_f(&scene, stages(&config, glue)?, Samples::default())?;
            emit(&config, &(glued.to_json() + "\n"), out)
        }
        Command::Probe { job, x, glue } => {
            let extra: Vec<Entry> = x.map(|x| Entry::flag("probe_x", x.to_string())).into_iter().collect();
            let config = job_config(&job, &extra)?;
            let x = config.probe_x.ok_or_else(|| Failure::Usage("missing `--x`".into()))?;
            let scene = scene_of(&config)?;
            let glued = apply_f(&scene, stages(&config, glue)?, Samples::default())?;
            match accessibility_probe(&glued, config.require_l()?, x)? {
                ProbeOutcome::Accessible { base, .. } => {
                    emit(&config, &format!("accessible at ({}, {})\n", base[0], base[1]), out)
                }
                ProbeOutcome::Obstructed { owner, at } => {
                    Err(Failure::Violation(format!("obstructed by {owner:?} at ({}, {})", at[0], at[1])))
                }
            }
        }
        Command::Render { job, glue, rotate, labels, width, height } => {
            let config = job_config(&job, &[])?;
            let scene = scene_of(&config)?;
            let spec = RenderSpec {
                width,
                height,
                orientation: if rotate { Orientation::PortraitRotated } else { Orientation::Landscape },
                labels,
                ..RenderSpec::default()
            };
            let svg = match glue.or(config.glue_stages) {
                Some(n) => render_svg(&Drawing::Glued(&apply_f(&scene, n, Samples::default())?), &spec),
                None => render_svg(&Drawing::Scene(&scene), &spec),
            };
            emit(&config, &svg, out)
        }
    }
}

/// Runs the command line; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command, stdout) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Violation(msg)) => {
            let _ = writeln!(stderr, "{msg}");
            1
        }
    }
}
