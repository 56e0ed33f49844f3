//! `c3`: desk calculator for the complex vector algebra of space-time.
//!
//! Every command prints one JSON document on stdout. Exit codes: 0 success,
//! 1 `verify` found a failing suite, 2 unparsable input, 3 domain error
//! (e.g. a speed not below `c`).

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(name = "c3", version, about = "Special relativity in the complex vector algebra C3")]
pub struct Cli {
    /// Speed of light used where an input does not carry its own.
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = 1.0)]
    pub c: f64,
    /// Finite-difference step.
    #[arg(long, global = true, allow_hyphen_values = true, default_value_t = 1e-3)]
    pub h: f64,
    /// Seed for `verify`.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Compact single-line JSON instead of pretty-printed output.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

/// Exactly one of `--phi` / `--speed`.
#[derive(Debug, Clone, Args)]
#[group(required = true, multiple = false)]
pub struct Amount {
    /// Rapidity.
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<f64>,
    /// Speed, converted with `v/c = tanh φ`.
    #[arg(long, allow_hyphen_values = true)]
    pub speed: Option<f64>,
}

/// Optional boost for `field-split`.
#[derive(Debug, Clone, Args)]
#[group(required = false, multiple = false)]
pub struct OptionalAmount {
    #[arg(long, allow_hyphen_values = true)]
    pub phi: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    pub speed: Option<f64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Products, conjugations, exponential and inverse of multivectors.
    ///
    /// Multivectors are JSON `{"s":[re,im],"v":[[re,im],[re,im],[re,im]]}`.
    Algebra {
        /// circ | otimes | gp | grades | bar | cinv | exp | inverse
        op: String,
        #[arg(long)]
        a: String,
        /// Second operand for circ, otimes and gp.
        #[arg(long)]
        b: Option<String>,
    },
    /// Active boost e^{-φd/2} M e^{φd/2}, with the check M'² = M².
    Boost {
        #[arg(long)]
        m: String,
        /// Unit direction: `e1`, `e2`, `e3` or a JSON array.
        #[arg(long)]
        dir: String,
        #[command(flatten)]
        amount: Amount,
    },
    /// Active rotation e^{-θia/2} M e^{θia/2}, with the check M'² = M².
    Rotate {
        #[arg(long)]
        m: String,
        #[arg(long)]
        axis: String,
        #[arg(long, allow_hyphen_values = true)]
        theta: f64,
    },
    /// Lorentz coordinates of an event seen from a system moving at `v`,
    /// with the Galilean comparison and the interval before and after.
    Coords {
        /// Event JSON `{"t":…,"x":[…],"c":…}`; `c` defaults to `--c`.
        #[arg(long)]
        event: String,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
        /// Direction of motion (default e1).
        #[arg(long)]
        dir: Option<String>,
    },
    /// The one-sided map X' = X e^{φd}.
    Map {
        #[arg(long)]
        event: String,
        #[arg(long)]
        dir: String,
        #[command(flatten)]
        amount: Amount,
    },
    /// Space-time interval c²t² − x² = X X⁻.
    Interval {
        #[arg(long)]
        event: String,
    },
    /// Composition of two boosts along the same direction.
    Compose {
        #[arg(long, allow_hyphen_values = true)]
        phi1: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        phi2: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        v1: Option<f64>,
        #[arg(long, allow_hyphen_values = true)]
        v2: Option<f64>,
        #[arg(long, default_value = "e1")]
        dir: String,
    },
    /// The canonical rest frame boosted along a direction.
    Frame {
        #[arg(long)]
        dir: String,
        #[command(flatten)]
        amount: Amount,
    },
    /// Splits F = E + iB, optionally for an observer boosted along `--dir`.
    FieldSplit {
        #[arg(long)]
        f: String,
        #[arg(long)]
        dir: Option<String>,
        #[command(flatten)]
        amount: OptionalAmount,
    },
    /// Sources ρ − J/c seen from a boosted system: e^{-φd}(ρ − J/c).
    Sources {
        #[arg(long, allow_hyphen_values = true)]
        rho: f64,
        /// Current density as a JSON array.
        #[arg(long, default_value = "[0,0,0]")]
        j: String,
        #[arg(long)]
        dir: String,
        #[command(flatten)]
        amount: Amount,
    },
    /// Finite-difference space-time nabla of a built-in test function.
    Nabla {
        /// identity (X ↦ ct + x) | x-squared | plane-wave
        #[arg(long = "fn")]
        function: String,
        #[arg(long)]
        event: String,
    },
    /// Checks e^{-φd} ∆_X (g∘L) = ∆'_{X'} g for a built-in test function g,
    /// where L maps an event to the coordinates of a system moving at `v`
    /// and ∆' is the nabla on the boosted frame.
    ChainRule {
        #[arg(long)]
        event: String,
        #[arg(long, allow_hyphen_values = true)]
        v: f64,
        #[arg(long, default_value = "e1")]
        dir: String,
        /// Second step; adds the observed convergence order.
        #[arg(long)]
        h2: Option<f64>,
    },
    /// Maxwell residuals of a catalog field at a list of events.
    MaxwellCheck {
        /// Field JSON, e.g. `{"kind":"plane_wave","k":1,"E0":1,"prop":[1,0,0],"pol":[0,1,0]}`.
        #[arg(long)]
        field: String,
        /// JSON array of events.
        #[arg(long, default_value = r#"[{"t":0.3,"x":[0.7,-0.4,0.2]}]"#)]
        points: String,
        /// Second step; adds an observed convergence order per point.
        #[arg(long)]
        h2: Option<f64>,
    },
    /// Potential-form residuals (wave equation and Lorentz condition).
    PotentialCheck {
        #[arg(long)]
        field: String,
        #[arg(long, default_value = r#"[{"t":0.3,"x":[0.7,-0.4,0.2]}]"#)]
        points: String,
        #[arg(long)]
        h2: Option<f64>,
    },
    /// Relative mass, energy and momentum of a particle; `--work` adds the
    /// work needed to reach c.
    Kinematics {
        #[arg(long)]
        m0: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        v: f64,
        #[arg(long, default_value = "e1")]
        dir: String,
        #[arg(long)]
        work: bool,
    },
    /// Space-time velocity c + dx/dt of a built-in worldline.
    Velocity {
        /// rest | uniform | accelerated
        #[arg(long)]
        worldline: String,
        /// Speed for `uniform`, acceleration a₀ for `accelerated`.
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        param: f64,
        #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
        t: f64,
        #[arg(long)]
        dt: Option<f64>,
    },
    /// Randomized self-check against the matrix oracle; exits 1 on failure.
    Verify {
        #[arg(long, default_value_t = 10_000)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok((value, ok)) => {
            let text = if cli.json {
                serde_json::to_string(&value)
            } else {
                serde_json::to_string_pretty(&value)
            };
            println!("{}", text.expect("report serializes"));
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
