//! `locfin`: command line front end for locally finite embeddings.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use locfin_core::decomposition::{block_cut_tree, tutte_decomposition};
use locfin_core::embeddability::{locally_finite_embeddable, StarMinorWitness};
use locfin_core::geometry::{
    allocations, circle_pack, render_svg, triangulate_one_ended, AllocationOptions, BoundaryCondition, Geometry,
    PackOptions, Packing, Triangulation,
};
use locfin_core::harness::{generate_named, involution_check, mtp_check, payment_corpus, Decorated, GeneratorParams};
use locfin_core::io::{
    exhaustion_doc, graph6_encode, graph_doc, parse_graph, rotation_doc, rotation_from_doc, GraphFile, RotationDoc,
    FORMAT_VERSION,
};
use locfin_core::oneacc::{acc, random_one_acc_embedding, random_planar_rotation};
use locfin_core::planarity::{is_planar, planar_embedding};
use locfin_core::{Graph, RotationSystem};

#[derive(Parser)]
#[command(name = "locfin", version, about = "Locally finite planar embeddings of infinite graphs")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write the main output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output encoding; not every command supports every format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeometryArg {
    Euclidean,
    Hyperbolic,
}

#[derive(Subcommand)]
enum Command {
    /// Planarity and decomposition of a finite graph.
    Analyze {
        /// Graph as JSON, edge list or graph6.
        file: PathBuf,
        /// Planarity verdict with an embedding when planar.
        #[arg(long)]
        planarity: bool,
        /// Include a Kuratowski subdivision for non-planar input.
        #[arg(long)]
        witness: bool,
        /// Block-cut tree and Tutte decomposition of every block.
        #[arg(long)]
        decompose: bool,
    },
    /// Locally finite embeddability of a truncation or exhaustion.
    Embeddable {
        /// Truncation (boundary) or exhaustion (levels) as JSON.
        file: PathBuf,
        /// Attach a verified star-minor witness when obstructed.
        #[arg(long)]
        witness: bool,
        /// Only test the first k levels.
        #[arg(long)]
        levels: Option<usize>,
    },
    /// Random embedding with one accumulation point.
    Embed {
        /// Truncation or exhaustion as JSON.
        file: PathBuf,
        /// Include the block embedding plan.
        #[arg(long)]
        plan: bool,
    },
    /// One-ended triangulated supergraph of an embedded truncation.
    Triangulate {
        /// Truncation or exhaustion as JSON.
        file: PathBuf,
        /// Rotation to use instead of a random one-accumulation-point embedding.
        #[arg(long)]
        rotation: Option<PathBuf>,
    },
    /// Circle packing of the triangulated supergraph.
    Pack {
        /// Truncation or exhaustion as JSON.
        file: PathBuf,
        /// Rotation to use instead of a random one-accumulation-point embedding.
        #[arg(long)]
        rotation: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = GeometryArg::Euclidean)]
        geometry: GeometryArg,
        /// Angle-sum tolerance.
        #[arg(long, env = "LOCFIN_TOL", default_value_t = 1e-10)]
        tol: f64,
        /// Give up after this many relaxation sweeps.
        #[arg(long, default_value_t = 1_000_000)]
        max_sweeps: usize,
        /// Radius of every outer circle.
        #[arg(long)]
        boundary_radius: Option<f64>,
        /// Per-vertex centres and radii as JSON.
        #[arg(long)]
        coords: Option<PathBuf>,
        /// Add Voronoi and barycentric allocation areas to the report.
        #[arg(long)]
        allocations: bool,
    },
    /// Mass transport and involution checks on a finite graph.
    Mtp {
        /// Graph as JSON, edge list or graph6.
        file: PathBuf,
        /// Darts sampled for the involution check.
        #[arg(long, default_value_t = 20_000)]
        samples: usize,
        /// Ball radius used for vertex types in the involution check.
        #[arg(long, default_value_t = 1)]
        radius: usize,
    },
    /// Built-in exhaustions.
    Generate {
        /// path_Z, ladder, tree_d, K2xT3, K3xZ or halfplane_triangulation.
        name: String,
        /// Number of levels.
        #[arg(long, default_value_t = 3)]
        depth: usize,
        /// Tree degree for tree_d.
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
}

fn main() -> Result<()> {
    let cli = Cli::parse();
    let c = &cli.common;
    let output = match &cli.command {
        Command::Analyze { file, planarity, witness, decompose } => {
            let all = !planarity && !decompose;
            json_only(c, analyze(&read(file)?.graph, *planarity || all, *witness, *decompose || all)?)?
        }
        Command::Embeddable { file, witness, levels } => json_only(c, embeddable(&read(file)?, *witness, *levels)?)?,
        Command::Embed { file, plan } => json_only(c, embed(&read(file)?, c.seed, *plan)?)?,
        Command::Triangulate { file, rotation } => {
            let tri = triangulation(&read(file)?, rotation.as_deref(), c.seed)?;
            match c.format {
                Format::Json => pretty(&triangulation_json(&tri))?,
                Format::Graph6 => graph6_encode(&tri.graph)? + "\n",
                Format::Svg => bail!("triangulate has no svg output; use pack"),
            }
        }
        Command::Pack { file, rotation, geometry, tol, max_sweeps, boundary_radius, coords, allocations: alloc } => {
            let tri = triangulation(&read(file)?, rotation.as_deref(), c.seed)?;
            let geometry = match geometry {
                GeometryArg::Euclidean => Geometry::Euclidean,
                GeometryArg::Hyperbolic => Geometry::Hyperbolic,
            };
            let radius = boundary_radius.unwrap_or(match geometry {
                Geometry::Euclidean => 1.0,
                Geometry::Hyperbolic => 0.5,
            });
            let opts = PackOptions { tol: *tol, max_sweeps: *max_sweeps, root_edge: None };
            let p = circle_pack(&tri, geometry, &BoundaryCondition::UniformRadius(radius), opts)?;
            if let Some(path) = coords {
                write_file(path, &pretty(&coords_json(&p))?)?;
            }
            match c.format {
                Format::Svg => render_svg(&tri, &p),
                Format::Json => {
                    let mut report = json!({
                        "format_version": FORMAT_VERSION,
                        "geometry": p.geometry,
                        "vertices": tri.graph.vertex_count(),
                        "sweeps": p.sweeps,
                        "tolerance": p.tolerance,
                        "angle_residual": p.angle_residual,
                        "tangency_residual": p.tangency_residual,
                    });
                    if *alloc {
                        report["allocations"] = serde_json::to_value(allocations(&p, &tri, AllocationOptions::default())?)?;
                    }
                    pretty(&report)?
                }
                Format::Graph6 => bail!("pack writes json or svg"),
            }
        }
        Command::Mtp { file, samples, radius } => json_only(c, mtp(&read(file)?.graph, *samples, *radius, c.seed)?)?,
        Command::Generate { name, depth, degree } => {
            let ex = generate_named(name, GeneratorParams { depth: *depth, degree: *degree })?;
            match c.format {
                Format::Json => pretty(&exhaustion_doc(&ex))?,
                Format::Graph6 => graph6_encode(ex.graph())? + "\n",
                Format::Svg => bail!("generate writes json or graph6"),
            }
        }
    };
    match &c.out {
        Some(path) => write_file(path, &output),
        None => {
            print!("{output}");
            Ok(())
        }
    }
}

fn read(path: &Path) -> Result<GraphFile> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(parse_graph(&text)?)
}

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn pretty(v: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn json_only(c: &Common, v: Value) -> Result<String> {
    if c.format != Format::Json {
        bail!("this command only writes json");
    }
    pretty(&v)
}

fn analyze(g: &Graph, planarity: bool, witness: bool, decompose: bool) -> Result<Value> {
    let mut out = json!({
        "format_version": FORMAT_VERSION,
        "vertices": g.vertex_count(),
        "edges": g.edge_count(),
    });
    if planarity {
        let (planar, rot, w) = if witness {
            let r = is_planar(g)?;
            (r.planar, r.embedding, r.witness)
        } else {
            let r = planar_embedding(g)?;
            (r.is_some(), r, None)
        };
        out["planar"] = json!(planar);
        if let Some(rot) = rot {
            out["embedding"] = serde_json::to_value(rotation_doc(g, &rot))?;
        }
        if let Some(w) = w {
            out["witness"] = serde_json::to_value(w)?;
        }
    }
    if decompose {
        let bct = block_cut_tree(g)?;
        let mut tutte = Vec::new();
        for a in 0..bct.blocks.len() {
            let sub = bct.block_subgraph(g, a);
            if sub.graph.edge_count() < 2 || sub.graph.has_loops() {
                continue;
            }
            let tree = tutte_decomposition(&sub.graph)?;
            tutte.push(json!({ "block": a, "vertex_map": sub.vertex_map, "edge_map": sub.edge_map, "tree": tree }));
        }
        out["block_cut_tree"] = serde_json::to_value(&bct)?;
        out["tutte"] = json!(tutte);
    }
    Ok(out)
}

fn embeddable(f: &GraphFile, witness: bool, levels: Option<usize>) -> Result<Value> {
    let mut ex = f.exhaustion()?;
    if let Some(k) = levels {
        ex = ex.prefix(k)?;
    }
    let report = locally_finite_embeddable(&ex, witness)?;
    let mut out = json!({
        "format_version": FORMAT_VERSION,
        "embeddable": report.embeddable(),
        "first_obstructed": report.first_obstructed,
        "levels": report.levels,
    });
    if let Some(w) = &report.witness {
        out["witness"] = serde_json::to_value(w)?;
        out["listing"] = json!(listing(w));
    }
    Ok(out)
}

/// Branch sets, one line per pattern vertex.
fn listing(w: &StarMinorWitness) -> Vec<String> {
    w.branch_sets
        .iter()
        .enumerate()
        .map(|(i, set)| {
            if i == w.apex_vertex {
                format!("{i} (at infinity): {:?}", w.infinity_part)
            } else {
                format!("{i}: {set:?}")
            }
        })
        .collect()
}

fn embed(f: &GraphFile, seed: u64, plan: bool) -> Result<Value> {
    let ex = f.exhaustion()?;
    let e = random_one_acc_embedding(&ex, seed)?;
    let mut out = json!({
        "format_version": FORMAT_VERSION,
        "seed": seed,
        "acc": e.acc.acc,
        "acc_per_level": e.acc.per_level,
        "rotation": rotation_doc(ex.graph(), &e.rotation),
    });
    if plan {
        out["plan"] = serde_json::to_value(&e.plan)?;
    }
    Ok(out)
}

fn triangulation(f: &GraphFile, rotation: Option<&Path>, seed: u64) -> Result<Triangulation> {
    let ex = f.exhaustion()?;
    let rot = match rotation {
        Some(path) => {
            let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            let v: Value = serde_json::from_str(&text)?;
            // Accept either a bare rotation document or the output of `embed`.
            let doc: RotationDoc = serde_json::from_value(v.get("rotation").cloned().unwrap_or(v))?;
            let rot = rotation_from_doc(ex.graph(), &doc)?;
            let a = acc(&ex, &rot, &[])?;
            if a.acc != 1 {
                bail!("the given rotation has {} accumulation points, expected 1", a.acc);
            }
            rot
        }
        None => random_one_acc_embedding(&ex, seed)?.rotation,
    };
    Ok(triangulate_one_ended(&ex.deepest(), &rot)?)
}

fn triangulation_json(tri: &Triangulation) -> Value {
    json!({
        "format_version": FORMAT_VERSION,
        "graph": graph_doc(&tri.graph),
        "rotation": rotation_doc(&tri.graph, &tri.rot),
        "marked": tri.marked,
        "original_edges": tri.original_edges,
        "roles": tri.roles,
        "outer": tri.outer.vertices(&tri.graph),
    })
}

fn coords_json(p: &Packing) -> Value {
    let model = match p.geometry {
        Geometry::Euclidean => "plane",
        Geometry::Hyperbolic => "poincare",
    };
    let vertices: Vec<Value> = (0..p.radii.len())
        .map(|v| json!({ "vertex": v, "center": p.centers[v], "radius": p.radii[v] }))
        .collect();
    json!({ "format_version": FORMAT_VERSION, "geometry": p.geometry, "model": model, "vertices": vertices })
}

fn mtp(g: &Graph, samples: usize, radius: usize, seed: u64) -> Result<Value> {
    let rot: Option<RotationSystem> = if planar_embedding(g)?.is_some() {
        Some(random_planar_rotation(g, &mut ChaCha8Rng::seed_from_u64(seed))?)
    } else {
        None
    };
    let s = Decorated { graph: g, rotation: rot.as_ref() };
    let mut payments = Vec::new();
    for f in payment_corpus() {
        let entry = match mtp_check(s, f.as_ref()) {
            Ok(r) => json!({ "name": f.name(), "lhs": r.lhs, "rhs": r.rhs, "gap": r.gap() }),
            Err(e) => json!({ "name": f.name(), "error": e.to_string() }),
        };
        payments.push(entry);
    }
    let inv = involution_check(g, samples, radius, seed)?;
    Ok(json!({
        "format_version": FORMAT_VERSION,
        "seed": seed,
        "decorated": rot.is_some(),
        "payments": payments,
        "involution": inv,
    }))
}
