//! Command-line front end: compute ply numbers, verify empty-ply drawings,
//! run the lemma checkers, generate constructions, search for layouts,
//! evaluate the closed-form bounds, and export SVG.

use clap::{Parser, Subcommand};
use emptyply::analysis;
use emptyply::constructions::{
    abstract_family, nested_triangles, orthogonal_tree, small_layout, star24, theta_graph,
    tiling_square, ConstructionError, Family, NestedVariant, ThetaVariant,
};
use emptyply::drawing::Drawing;
use emptyply::format::{load_drawing, save_drawing, Metadata};
use emptyply::geometry::Point;
use emptyply::plycore;
use emptyply::search::{optimize_empty_ply, SearchConfig, SearchStatus};
use std::path::PathBuf;
use std::process::ExitCode;

mod svg;

const EXIT_OK: u8 = 0;
const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_MALFORMED: u8 = 2;
const EXIT_INFEASIBLE: u8 = 3;

#[derive(Parser)]
#[command(name = "emptyply", about = "ply / vertex-ply / empty-ply toolkit for straight-line drawings")]
struct Cli {
    /// Emit machine-readable JSON instead of the human summary
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Ply, vertex-ply, crossings and witnesses of a drawing
    Compute { file: PathBuf },
    /// Exit 0 iff the drawing is empty-ply; prints the witness pair otherwise
    VerifyEmpty { file: PathBuf },
    /// Full lemma/theorem report
    Report {
        file: PathBuf,
        /// Evaluate the rooted-tree claims with this root
        #[arg(long)]
        tree_root: Option<usize>,
    },
    /// Generate a bundled construction
    Gen {
        /// star24 | K7 | K2_12 | K3_9 | K4_6 | nested | theta | ortho-tree |
        /// tiling | complete | bipartite | dary-tree
        family: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        levels: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        cols: Option<usize>,
        /// nested: natural | planar-ply4 | nonplanar-ply5; theta: planar |
        /// nonplanar; tiling: base | squared
        #[arg(long)]
        variant: Option<String>,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Search for an empty-ply layout of the graph in the given document
    Search {
        graph_file: PathBuf,
        #[arg(long, default_value_t = SearchConfig::default().seed)]
        seed: u64,
        #[arg(long, default_value_t = SearchConfig::default().restarts)]
        restarts: usize,
        #[arg(long, default_value_t = SearchConfig::default().iterations)]
        iters: usize,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Quarter-SHPED stubs: crossing count and SVG
    Ped {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
    /// Evaluate a closed-form bound: k25 | shrink | fn | k8-region | k2m
    Formulas {
        name: String,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        q: Option<f64>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        x: Option<f64>,
        #[arg(long)]
        y: Option<f64>,
    },
    /// Render a drawing (and optionally its ply-disks) to SVG
    Export {
        file: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
        /// full | half | none
        #[arg(long, default_value = "full")]
        disks: String,
    },
}

/// Format with 6 significant digits.
fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let dec = (5 - mag).max(0) as usize;
    let s = format!("{x:.dec$}");
    // trim trailing zeros after the decimal point
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn fail(code: u8, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(code)
}

fn load(path: &PathBuf) -> Result<Drawing, ExitCode> {
    match load_drawing(path) {
        Ok(d) => {
            let violations = d.validate();
            if violations.is_empty() {
                Ok(d)
            } else {
                Err(fail(
                    EXIT_MALFORMED,
                    format!("{}: invalid drawing: {}", path.display(), violations[0]),
                ))
            }
        }
        Err(e) => Err(fail(EXIT_MALFORMED, format!("{}: {e}", path.display()))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(code) => code,
    }
}

fn run(cli: Cli) -> Result<ExitCode, ExitCode> {
    match cli.cmd {
        Cmd::Compute { file } => {
            let d = load(&file)?;
            let rep = plycore::ply_report(&d)
                .map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", file.display())))?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                println!(
                    "ply={} vertex_ply={} crossings={} collinear_overlaps={}",
                    rep.ply, rep.vertex_ply, rep.crossings.proper, rep.crossings.collinear_overlap
                );
                println!(
                    "ply witness: ({}, {}); vertex-ply witness: v{}",
                    sig6(rep.ply_witness.x),
                    sig6(rep.ply_witness.y),
                    rep.vertex_ply_witness
                );
            }
            Ok(ExitCode::from(EXIT_OK))
        }
        Cmd::VerifyEmpty { file } => {
            let d = load(&file)?;
            let (empty, witness) = plycore::is_empty_ply(&d)
                .map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", file.display())))?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "empty_ply": empty, "witness": witness })
                );
            } else if empty {
                println!("empty-ply: yes");
            } else {
                let (u, v) = witness.unwrap();
                println!("empty-ply: no (v{u} inside disk of v{v})");
            }
            Ok(ExitCode::from(if empty { EXIT_OK } else { EXIT_CHECK_FAILED }))
        }
        Cmd::Report { file, tree_root } => {
            let d = load(&file)?;
            let rep = plycore::lemma_report(&d, tree_root)
                .map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", file.display())))?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&rep).unwrap());
            } else {
                let line = |name: &str, c: &plycore::Check| match &c.witness {
                    None => println!("{name}: pass"),
                    Some(w) => println!("{name}: FAIL ({w})"),
                };
                line("edge_ratio", &rep.edge_ratio);
                line("radius_ratio", &rep.radius_ratio);
                line("shrunk_disjoint", &rep.shrunk_disjoint);
                line("area_bound", &rep.area_bound);
                line("degree", &rep.degree);
                line("five_h", &rep.five_h);
                match &rep.claims_ab {
                    Some(c) => line("claims_ab", c),
                    None => println!("claims_ab: not evaluated (no --tree-root)"),
                }
            }
            Ok(ExitCode::from(if rep.all_ok() { EXIT_OK } else { EXIT_CHECK_FAILED }))
        }
        Cmd::Gen { family, n, m, levels, d, k, q, rows, cols, variant, output } => {
            let drawing = generate(&family, n, m, levels, d, k, q, rows, cols, variant.as_deref())?;
            let meta = Metadata {
                family: Some(family.clone()),
                parameters: None,
                provenance: Some("generated".into()),
            };
            save_drawing(&output, &drawing, Some(meta))
                .map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", output.display())))?;
            if !cli.json {
                println!(
                    "wrote {} ({} vertices, {} edges)",
                    output.display(),
                    drawing.graph.vertex_count(),
                    drawing.graph.edges().len()
                );
            }
            Ok(ExitCode::from(EXIT_OK))
        }
        Cmd::Search { graph_file, seed, restarts, iters, output } => {
            let d = load(&graph_file)?;
            let cfg = SearchConfig { seed, restarts, iterations: iters, ..Default::default() };
            let result = optimize_empty_ply(&d.graph, &cfg).map_err(|e| match e {
                emptyply::search::SearchError::InfeasibleDegree(_) => fail(EXIT_INFEASIBLE, e),
                _ => fail(EXIT_MALFORMED, e),
            })?;
            let meta = Metadata {
                family: None,
                parameters: Some(format!("seed {seed}, restarts {restarts}, iters {iters}")),
                provenance: Some("search".into()),
            };
            save_drawing(&output, &result.drawing, Some(meta))
                .map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", output.display())))?;
            let ok = result.status == SearchStatus::Success;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "status": result.status,
                        "penalty": result.penalty,
                        "restart_index": result.restart_index,
                        "output": output.display().to_string(),
                    })
                );
            } else {
                println!(
                    "status: {} (restart {}, penalty {})",
                    if ok { "success" } else { "budget exhausted" },
                    result.restart_index,
                    sig6(result.penalty)
                );
            }
            Ok(ExitCode::from(if ok { EXIT_OK } else { EXIT_CHECK_FAILED }))
        }
        Cmd::Ped { file, output } => {
            let d = load(&file)?;
            let (stubs, crossings) = plycore::quarter_shped(&d);
            std::fs::write(&output, svg::render_stubs(&d, &stubs))
                .map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", output.display())))?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({ "stubs": stubs.stubs.len() * 2, "crossings": crossings })
                );
            } else {
                println!("{} stubs, {crossings} crossings", stubs.stubs.len() * 2);
            }
            Ok(ExitCode::from(EXIT_OK))
        }
        Cmd::Formulas { name, alpha, q, n, x, y } => formulas(&name, alpha, q, n, x, y, cli.json),
        Cmd::Export { file, output, disks } => {
            let d = load(&file)?;
            let mode = match disks.as_str() {
                "full" => svg::DiskMode::Full,
                "half" => svg::DiskMode::Half,
                "none" => svg::DiskMode::None,
                other => return Err(fail(EXIT_MALFORMED, format!("unknown disk mode {other}"))),
            };
            std::fs::write(&output, svg::render_drawing(&d, mode))
                .map_err(|e| fail(EXIT_MALFORMED, format!("{}: {e}", output.display())))?;
            if !cli.json {
                println!("wrote {}", output.display());
            }
            Ok(ExitCode::from(EXIT_OK))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn generate(
    family: &str,
    n: Option<usize>,
    m: Option<usize>,
    levels: Option<usize>,
    d: Option<usize>,
    k: Option<usize>,
    q: Option<f64>,
    rows: Option<usize>,
    cols: Option<usize>,
    variant: Option<&str>,
) -> Result<Drawing, ExitCode> {
    let need = |o: Option<usize>, what: &str| {
        o.ok_or_else(|| fail(EXIT_MALFORMED, format!("missing --{what}")))
    };
    let ctor_err = |e: ConstructionError| match e {
        ConstructionError::NotAvailable { .. } => fail(EXIT_INFEASIBLE, e),
        ConstructionError::Domain(_) => fail(EXIT_MALFORMED, e),
    };
    match family {
        "star24" => Ok(star24()),
        "K7" | "K2_12" | "K3_9" | "K4_6" => small_layout(family).map_err(ctor_err),
        name if name.starts_with('K') => small_layout(name).map_err(ctor_err),
        "nested" => {
            let v = match variant.unwrap_or("natural") {
                "natural" => NestedVariant::Natural,
                "planar-ply4" => NestedVariant::PlanarPly4,
                "nonplanar-ply5" => NestedVariant::NonplanarPly5,
                other => return Err(fail(EXIT_MALFORMED, format!("unknown nested variant {other}"))),
            };
            nested_triangles(need(levels, "levels")?, v).map_err(ctor_err)
        }
        "theta" => {
            let v = match variant.unwrap_or("nonplanar") {
                "planar" => ThetaVariant::Planar,
                "nonplanar" => ThetaVariant::Nonplanar,
                other => return Err(fail(EXIT_MALFORMED, format!("unknown theta variant {other}"))),
            };
            theta_graph(need(m, "m")?, v).map_err(ctor_err)
        }
        "ortho-tree" => orthogonal_tree(
            need(d, "d")?,
            q.ok_or_else(|| fail(EXIT_MALFORMED, "missing --q"))?,
            need(k, "k")?,
        )
        .map_err(ctor_err),
        "tiling" => {
            let (base, squared) = tiling_square(need(rows, "rows")?, need(cols, "cols")?)
                .map_err(ctor_err)?;
            match variant.unwrap_or("squared") {
                "base" => Ok(base),
                "squared" => Ok(squared),
                other => Err(fail(EXIT_MALFORMED, format!("unknown tiling variant {other}"))),
            }
        }
        "complete" => layout_on_circle(abstract_family(Family::Complete { n: need(n, "n")? })
            .map_err(ctor_err)?),
        "bipartite" => layout_on_circle(
            abstract_family(Family::CompleteBipartite { n: need(n, "n")?, m: need(m, "m")? })
                .map_err(ctor_err)?,
        ),
        "dary-tree" => layout_on_circle(
            abstract_family(Family::DaryTree { d: need(d, "d")?, k: need(k, "k")? })
                .map_err(ctor_err)?,
        ),
        other => Err(fail(EXIT_MALFORMED, format!("unknown family {other}"))),
    }
}

/// Placeholder circular layout for abstract families (search input).
fn layout_on_circle(g: emptyply::drawing::Graph) -> Result<Drawing, ExitCode> {
    let n = g.vertex_count();
    let pts = (0..n)
        .map(|i| {
            let t = 2.0 * std::f64::consts::PI * i as f64 / n as f64;
            Point::new(t.cos(), t.sin())
        })
        .collect();
    Ok(Drawing::new(g, pts))
}

fn formulas(
    name: &str,
    alpha: Option<f64>,
    q: Option<f64>,
    n: Option<usize>,
    x: Option<f64>,
    y: Option<f64>,
    json: bool,
) -> Result<ExitCode, ExitCode> {
    let bad = |m: String| fail(EXIT_MALFORMED, m);
    match name {
        "k25" => {
            let a = alpha.ok_or_else(|| bad("missing --alpha (radians)".into()))?;
            let b = analysis::k25_bounds(a).map_err(|e| bad(e.to_string()))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&b).unwrap());
            } else {
                match (b.lower, b.upper) {
                    (Some(lo), Some(hi)) => println!(
                        "lower={} upper={} feasible={}",
                        sig6(lo),
                        sig6(hi),
                        b.feasible
                    ),
                    _ => println!("discriminant negative: no real roots; feasible=false"),
                }
            }
        }
        "shrink" => {
            let qq = q.ok_or_else(|| bad("missing --q".into()))?;
            let s = analysis::shrink_limit(qq).map_err(|e| bad(e.to_string()))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&s).unwrap());
            } else {
                println!(
                    "f(q)={} dist_v1_w={} dist_v3_w={}",
                    sig6(s.f),
                    sig6(s.dist_v1_w),
                    sig6(s.dist_v3_w)
                );
            }
        }
        "fn" => {
            let nn = n.ok_or_else(|| bad("missing --n".into()))?;
            let f = analysis::fn_recurrence(nn).map_err(|e| bad(e.to_string()))?;
            if json {
                println!("{}", serde_json::json!({ "n": nn, "f": f }));
            } else {
                println!("f({nn})={}", sig6(f));
            }
        }
        "k8-region" => {
            let px = x.ok_or_else(|| bad("missing --x".into()))?;
            let py = y.ok_or_else(|| bad("missing --y".into()))?;
            let label = analysis::k8_region(Point::new(px, py));
            if json {
                println!("{}", serde_json::to_string(&label).unwrap());
            } else {
                println!("{label:?}");
            }
        }
        "k2m" => {
            let s = analysis::k2m_analysis();
            if json {
                println!("{}", serde_json::to_string_pretty(&s).unwrap());
            } else {
                println!(
                    "alpha_d={}deg beta1={}deg beta2={}deg outer={} inner_per_half={} bound m<={}",
                    sig6(s.alpha_d.to_degrees()),
                    sig6(s.beta1.to_degrees()),
                    sig6(s.beta2.to_degrees()),
                    s.outer_capacity,
                    s.inner_capacity_per_half,
                    s.combined_bound
                );
            }
        }
        other => return Err(bad(format!("unknown formula {other}"))),
    }
    Ok(ExitCode::from(EXIT_OK))
}

#[cfg(test)]
mod tests {
    use super::sig6;

    #[test]
    fn sig6_formatting() {
        assert_eq!(sig6(0.0), "0");
        assert_eq!(sig6(1.0), "1");
        assert_eq!(sig6(-0.127323), "-0.127323");
        assert_eq!(sig6(151.0397), "151.04");
        assert_eq!(sig6(123456.7), "123457");
    }
}
