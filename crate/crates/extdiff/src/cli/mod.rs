//! Command-line interface, file formats, SVG output and the randomized
//! property-check runner.
//!
//! Exit codes: 0 success, 1 property-check failure, 2 bad flags, 3 unreadable
//! or invalid input files, 4 solver failure.

pub mod check;
pub mod svg;

use crate::diff::{
    self, ball_difference, extended_difference, interval_difference, DifferenceOptions,
    DifferenceSolution, Reconstruction, SubadditivityNorm,
};
use crate::geometry::{canonicalize, Ball2, ConvexPolygon, Interval1, Point2};
use crate::net::{build_net, sample_support};
use crate::refine::{refine, PenaltyFunctional};
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::path::{Path, PathBuf};

pub const EXIT_PROPERTY_FAILURE: i32 = 1;
pub const EXIT_BAD_FLAGS: i32 = 2;
pub const EXIT_BAD_FILE: i32 = 3;
pub const EXIT_SOLVER_FAILURE: i32 = 4;

// ---------------------------------------------------------------------------
// file formats
// ---------------------------------------------------------------------------

/// JSON polygon input: `{"name": "...", "vertices": [[x, y], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct PolygonFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: Vec<[f64; 2]>,
}

impl PolygonFile {
    pub fn to_polygon(&self) -> Result<ConvexPolygon, CliError> {
        let pts: Vec<Point2> = self.vertices.iter().map(|v| Point2::new(v[0], v[1])).collect();
        canonicalize(&pts).map_err(|e| CliError::file(format!("invalid polygon: {e}")))
    }

    pub fn from_polygon(name: Option<String>, p: &ConvexPolygon) -> Self {
        PolygonFile {
            name,
            vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ModeFlags {
    pub reconstruction: String,
    pub subadditivity_norm: String,
    pub strict_nonneg: bool,
    pub refine: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DiagnosticsFile {
    pub scope_bound: f64,
    pub r_in_bounds: [f64; 2],
    #[serde(rename = "R_out_bounds")]
    pub r_out_bounds: [f64; 2],
    pub lp_unique: bool,
}

/// JSON solution output; arrays match the declared m and round-trip
/// losslessly (serde_json prints the shortest representation that parses
/// back to the identical double).
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SolutionFile {
    pub epsilon: f64,
    pub achieved_hausdorff: f64,
    pub m: usize,
    pub mode: ModeFlags,
    pub x_values: Vec<f64>,
    #[serde(rename = "X_vertices")]
    pub x_vertices: Vec<[f64; 2]>,
    #[serde(rename = "B_plus_X_vertices")]
    pub b_plus_x_vertices: Vec<[f64; 2]>,
    pub diagnostics: DiagnosticsFile,
}

impl SolutionFile {
    pub fn from_solution(sol: &DifferenceSolution, opts: &DifferenceOptions, refine: &str) -> Self {
        SolutionFile {
            epsilon: sol.epsilon,
            achieved_hausdorff: sol.achieved_hausdorff,
            m: opts.m,
            mode: ModeFlags {
                reconstruction: match opts.reconstruction {
                    Reconstruction::Halfplane => "halfplane".into(),
                    Reconstruction::RadialHull => "radial".into(),
                },
                subadditivity_norm: match opts.subadditivity_norm {
                    SubadditivityNorm::Scaled => "scaled".into(),
                    SubadditivityNorm::Unit => "unit".into(),
                },
                strict_nonneg: opts.strict_nonneg,
                refine: refine.into(),
            },
            x_values: sol.x_values.values().to_vec(),
            x_vertices: sol.x.vertices().iter().map(|v| [v.x, v.y]).collect(),
            b_plus_x_vertices: sol.b_plus_x.vertices().iter().map(|v| [v.x, v.y]).collect(),
            diagnostics: DiagnosticsFile {
                scope_bound: sol.diagnostics.scope_bound,
                r_in_bounds: [sol.diagnostics.r_in_bounds.0, sol.diagnostics.r_in_bounds.1],
                r_out_bounds: [sol.diagnostics.r_out_bounds.0, sol.diagnostics.r_out_bounds.1],
                lp_unique: sol.diagnostics.lp_unique,
            },
        }
    }
}

pub fn read_polygon_file(path: &Path) -> Result<(Option<String>, ConvexPolygon), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::file(format!("cannot read {}: {e}", path.display())))?;
    let pf: PolygonFile = serde_json::from_str(&text)
        .map_err(|e| CliError::file(format!("cannot parse {}: {e}", path.display())))?;
    let poly = pf.to_polygon()?;
    Ok((pf.name, poly))
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn file(message: String) -> Self {
        CliError { code: EXIT_BAD_FILE, message }
    }
    fn flags(message: String) -> Self {
        CliError { code: EXIT_BAD_FLAGS, message }
    }
    fn solver(message: String) -> Self {
        CliError { code: EXIT_SOLVER_FAILURE, message }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ReconArg {
    Halfplane,
    Radial,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SubaddArg {
    Scaled,
    Unit,
}

#[derive(Parser, Debug)]
#[command(
    name = "extdiff",
    about = "Extended set difference of planar convex sets",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute A ⊖ B for two polygon files.
    Diff {
        /// Polygon file for A
        #[arg(long)]
        a: PathBuf,
        /// Polygon file for B
        #[arg(long)]
        b: PathBuf,
        /// Number of net directions
        #[arg(long, default_value_t = 128)]
        m: usize,
        /// Reconstruction mode
        #[arg(long, value_enum, default_value_t = ReconArg::Halfplane)]
        recon: ReconArg,
        /// Subadditivity row style
        #[arg(long, value_enum, default_value_t = SubaddArg::Scaled)]
        subadd: SubaddArg,
        /// Force x_i >= 0 (restricts candidates to sets containing the origin)
        #[arg(long, default_value_t = false)]
        strict_nonneg: bool,
        /// Refinement: none | l2 | l2-anchor:FILE
        #[arg(long, default_value = "none")]
        refine: String,
        /// Write the solution JSON here
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write an SVG overlay here
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Dump the assembled LP in a plain-text format
        #[arg(long)]
        dump_lp: Option<PathBuf>,
    },
    /// Closed-form difference of two intervals on the line.
    Interval {
        /// Interval A as LO,HI
        #[arg(long)]
        a: String,
        /// Interval B as LO,HI
        #[arg(long)]
        b: String,
    },
    /// Closed-form difference of two balls.
    Ball {
        /// Center of the first ball as X,Y
        #[arg(long)]
        c1: String,
        #[arg(long)]
        r1: f64,
        /// Center of the second ball as X,Y
        #[arg(long)]
        c2: String,
        #[arg(long)]
        r2: f64,
    },
    /// Run the randomized property suites.
    Check {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 64)]
        m: usize,
    },
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            // clap prints help/version on stdout with success; flag errors
            // exit with the documented bad-flags code
            let _ = e.print();
            return if e.use_stderr() { EXIT_BAD_FLAGS } else { 0 };
        }
    };
    let result = match cli.command {
        Command::Diff { a, b, m, recon, subadd, strict_nonneg, refine, out, svg, dump_lp } => {
            cmd_diff(&a, &b, m, recon, subadd, strict_nonneg, &refine, out.as_deref(), svg.as_deref(), dump_lp.as_deref())
        }
        Command::Interval { a, b } => cmd_closed_form_interval(&a, &b),
        Command::Ball { c1, r1, c2, r2 } => cmd_closed_form_ball(&c1, r1, &c2, r2),
        Command::Check { trials, seed, m } => return cmd_check(trials, seed, m),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

fn fmt_pair(p: (f64, f64)) -> String {
    format!("{},{}", p.0, p.1)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_diff(
    a_path: &Path,
    b_path: &Path,
    m: usize,
    recon: ReconArg,
    subadd: SubaddArg,
    strict_nonneg: bool,
    refine_arg: &str,
    out: Option<&Path>,
    svg_path: Option<&Path>,
    dump_lp: Option<&Path>,
) -> Result<(), CliError> {
    let (_, a) = read_polygon_file(a_path)?;
    let (_, b) = read_polygon_file(b_path)?;
    let opts = DifferenceOptions {
        m,
        reconstruction: match recon {
            ReconArg::Halfplane => Reconstruction::Halfplane,
            ReconArg::Radial => Reconstruction::RadialHull,
        },
        subadditivity_norm: match subadd {
            SubaddArg::Scaled => SubadditivityNorm::Scaled,
            SubaddArg::Unit => SubadditivityNorm::Unit,
        },
        strict_nonneg: strict_nonneg,
        ..DifferenceOptions::default()
    };
    let net = build_net(opts.m).map_err(|e| CliError::flags(e.to_string()))?;
    if let Some(path) = dump_lp {
        let program = diff::assemble_lp(&a, &b, &net, &opts);
        std::fs::write(path, crate::lp::dump(&program))
            .map_err(|e| CliError::file(format!("cannot write {}: {e}", path.display())))?;
    }
    // refinement selection
    enum RefineMode {
        None,
        L2Origin,
        L2Anchor(ConvexPolygon),
    }
    let refine_mode = if refine_arg == "none" {
        RefineMode::None
    } else if refine_arg == "l2" {
        RefineMode::L2Origin
    } else if let Some(path) = refine_arg.strip_prefix("l2-anchor:") {
        let (_, anchor) = read_polygon_file(Path::new(path))?;
        RefineMode::L2Anchor(anchor)
    } else {
        return Err(CliError::flags(format!(
            "unknown --refine value '{refine_arg}' (expected none | l2 | l2-anchor:FILE)"
        )));
    };
    let solver_err = |e: crate::refine::RefineError| CliError::solver(e.to_string());
    let (solution, refine_label) = match refine_mode {
        RefineMode::None => {
            let sol = extended_difference(&a, &b, &opts)
                .map_err(|e| CliError::solver(e.to_string()))?;
            (sol, "none".to_string())
        }
        RefineMode::L2Origin => {
            let r = refine(&a, &b, &opts, &PenaltyFunctional::l2_origin(opts.m))
                .map_err(solver_err)?;
            (refined_to_solution(&a, &b, r), "l2".to_string())
        }
        RefineMode::L2Anchor(anchor_poly) => {
            let anchor = sample_support(&anchor_poly, &net);
            let r = refine(&a, &b, &opts, &PenaltyFunctional::l2_anchor(anchor))
                .map_err(solver_err)?;
            (refined_to_solution(&a, &b, r), refine_arg.to_string())
        }
    };
    println!("epsilon={}", solution.epsilon);
    println!("achieved_hausdorff={}", solution.achieved_hausdorff);
    println!("m={m}");
    println!("refine={refine_label}");
    println!("scope_bound={}", solution.diagnostics.scope_bound);
    println!("r_in_bounds={}", fmt_pair(solution.diagnostics.r_in_bounds));
    println!("R_out_bounds={}", fmt_pair(solution.diagnostics.r_out_bounds));
    println!("lp_unique={}", solution.diagnostics.lp_unique);
    if let Some(path) = out {
        let file = SolutionFile::from_solution(&solution, &opts, &refine_label);
        let mut text = serde_json::to_string_pretty(&file)
            .map_err(|e| CliError::file(e.to_string()))?;
        text.push('\n');
        std::fs::write(path, text)
            .map_err(|e| CliError::file(format!("cannot write {}: {e}", path.display())))?;
    }
    if let Some(path) = svg_path {
        svg::render_svg(&a, &b, &solution, path)
            .map_err(|e| CliError::file(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

/// Repackage a refined solution: the reported X, support values and exact
/// distance come from the refined selection while ε stays the stage-1
/// optimum.
fn refined_to_solution(
    a: &ConvexPolygon,
    b: &ConvexPolygon,
    r: crate::refine::RefinedSolution,
) -> DifferenceSolution {
    let b_plus_x = crate::geometry::minkowski_sum(b, &r.x_set);
    let achieved = crate::geometry::hausdorff(a, &b_plus_x);
    DifferenceSolution {
        epsilon: r.base.epsilon,
        x_values: r.x_refined,
        x: r.x_set,
        b_plus_x,
        achieved_hausdorff: achieved,
        diagnostics: r.base.diagnostics,
    }
}

fn parse_pair(s: &str, what: &str) -> Result<(f64, f64), CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::flags(format!("{what}: expected two comma-separated numbers, got '{s}'")));
    }
    let x: f64 = parts[0]
        .trim()
        .parse()
        .map_err(|_| CliError::flags(format!("{what}: bad number '{}'", parts[0])))?;
    let y: f64 = parts[1]
        .trim()
        .parse()
        .map_err(|_| CliError::flags(format!("{what}: bad number '{}'", parts[1])))?;
    if !(x.is_finite() && y.is_finite()) {
        return Err(CliError::flags(format!("{what}: non-finite value in '{s}'")));
    }
    Ok((x, y))
}

pub fn cmd_closed_form_interval(a: &str, b: &str) -> Result<(), CliError> {
    let (alo, ahi) = parse_pair(a, "--a")?;
    let (blo, bhi) = parse_pair(b, "--b")?;
    let ia = Interval1::new(alo, ahi).map_err(|e| CliError::flags(e.to_string()))?;
    let ib = Interval1::new(blo, bhi).map_err(|e| CliError::flags(e.to_string()))?;
    let d = interval_difference(ia, ib);
    if d.lo == d.hi {
        println!("result=point");
        println!("x={}", d.lo);
    } else {
        println!("result=interval");
        println!("lo={}", d.lo);
        println!("hi={}", d.hi);
    }
    Ok(())
}

pub fn cmd_closed_form_ball(c1: &str, r1: f64, c2: &str, r2: f64) -> Result<(), CliError> {
    if !(r1.is_finite() && r2.is_finite() && r1 >= 0.0 && r2 >= 0.0) {
        return Err(CliError::flags("radii must be finite and nonnegative".into()));
    }
    let (x1, y1) = parse_pair(c1, "--c1")?;
    let (x2, y2) = parse_pair(c2, "--c2")?;
    let d = ball_difference(
        Ball2::new(Point2::new(x1, y1), r1),
        Ball2::new(Point2::new(x2, y2), r2),
    );
    if d.radius == 0.0 {
        println!("result=point");
        println!("x={}", d.center.x);
        println!("y={}", d.center.y);
    } else {
        println!("result=ball");
        println!("cx={}", d.center.x);
        println!("cy={}", d.center.y);
        println!("r={}", d.radius);
    }
    Ok(())
}

pub fn cmd_check(trials: usize, seed: u64, m: usize) -> i32 {
    let report = check::run_checks(trials, seed, m);
    for line in report.render_lines() {
        println!("{line}");
    }
    if report.all_pass() {
        println!("result=pass");
        0
    } else {
        println!("result=fail");
        EXIT_PROPERTY_FAILURE
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_file_roundtrip() {
        let pf = PolygonFile {
            name: Some("square".into()),
            vertices: vec![[-0.5, -0.5], [0.5, -0.5], [0.5, 0.5], [-0.5, 0.5]],
        };
        let text = serde_json::to_string(&pf).unwrap();
        let back: PolygonFile = serde_json::from_str(&text).unwrap();
        assert_eq!(pf, back);
        assert_eq!(pf.to_polygon().unwrap().vertices().len(), 4);
    }

    #[test]
    fn solution_file_roundtrip_exact() {
        use rand::Rng;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(404);
        for _ in 0..20 {
            let m = 8;
            let sf = SolutionFile {
                epsilon: rng.gen_range(-5.0..5.0),
                achieved_hausdorff: rng.gen::<f64>() * 1e-7,
                m,
                mode: ModeFlags {
                    reconstruction: "halfplane".into(),
                    subadditivity_norm: "scaled".into(),
                    strict_nonneg: false,
                    refine: "none".into(),
                },
                x_values: (0..m).map(|_| rng.gen_range(-10.0..10.0)).collect(),
                x_vertices: vec![[rng.gen(), rng.gen()]],
                b_plus_x_vertices: vec![[rng.gen(), rng.gen()], [rng.gen(), rng.gen()]],
                diagnostics: DiagnosticsFile {
                    scope_bound: rng.gen(),
                    r_in_bounds: [rng.gen(), rng.gen()],
                    r_out_bounds: [rng.gen(), rng.gen()],
                    lp_unique: rng.gen(),
                },
            };
            let text = serde_json::to_string_pretty(&sf).unwrap();
            let back: SolutionFile = serde_json::from_str(&text).unwrap();
            assert_eq!(sf, back, "lossless round-trip");
        }
    }

    #[test]
    fn parse_pair_errors() {
        assert!(parse_pair("1,2", "t").is_ok());
        assert!(parse_pair("1", "t").is_err());
        assert!(parse_pair("1,x", "t").is_err());
        assert!(parse_pair("inf,2", "t").is_err());
    }
}
