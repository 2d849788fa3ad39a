use bratteli_core::generators::{
    multidim::multidim_young_graph, pascal::pascal_graph, solvable::solvable_group_graph,
    young::young_graph,
};
use bratteli_core::{Error, GradedGraph, Result, VertexId};
use clap::{Args, Subcommand};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::emit::{csv_table, Rendered};
use crate::{Ctx, KindArg};

pub fn build_kind(kind: KindArg, levels: u64, d: usize, ctx: &Ctx) -> Result<GradedGraph> {
    match kind {
        KindArg::Young => young_graph(levels),
        KindArg::Pascal => pascal_graph(levels),
        KindArg::Multidim => multidim_young_graph(d, levels, &ctx.budget),
        KindArg::Solvable => solvable_group_graph(levels),
    }
}

#[derive(Subcommand)]
pub enum GraphCmd {
    /// Construct a graph and emit it (json, dot, csv edge list, or a text summary).
    Build(BuildArgs),
    /// Per-level sizes, edge count and path counts.
    Info(InfoArgs),
    /// Re-emit a graph stored as json, e.g. to dot.
    Export(ExportArgs),
}

#[derive(Args)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    kind: KindArg,
    /// Highest level to materialize.
    #[arg(long)]
    levels: u64,
    /// Coordinate count for the multidim kind.
    #[arg(long, default_value_t = 2)]
    d: usize,
}

#[derive(Args)]
pub struct InfoArgs {
    #[arg(long, value_enum, conflicts_with = "input")]
    kind: Option<KindArg>,
    #[arg(long, requires = "kind")]
    levels: Option<u64>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Read the graph from a json file instead of generating it.
    #[arg(long)]
    input: Option<String>,
}

#[derive(Args)]
pub struct ExportArgs {
    #[arg(long, value_enum, conflicts_with = "input")]
    kind: Option<KindArg>,
    #[arg(long, requires = "kind")]
    levels: Option<u64>,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Read the graph from a json file instead of generating it.
    #[arg(long)]
    input: Option<String>,
}

fn load_graph(
    kind: Option<KindArg>,
    levels: Option<u64>,
    d: usize,
    input: Option<&str>,
    ctx: &Ctx,
) -> Result<(GradedGraph, String)> {
    match (input, kind) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::input(format!("cannot read {path}: {e}")))?;
            Ok((GradedGraph::from_json(&text)?, "file".to_string()))
        }
        (None, Some(kind)) => {
            let levels =
                levels.ok_or_else(|| Error::input("--levels is required with --kind"))?;
            Ok((build_kind(kind, levels, d, ctx)?, kind.name().to_string()))
        }
        _ => Err(Error::input("pass either --input or --kind with --levels")),
    }
}

fn edge_rows(graph: &GradedGraph) -> Result<Vec<Vec<String>>> {
    let mut rows = Vec::new();
    for n in 0..graph.num_levels().saturating_sub(1) {
        for i in 0..graph.level_size(n)? {
            let u = VertexId::new(n, i);
            for &(j, mult) in graph.out_edges(u)? {
                rows.push(vec![
                    n.to_string(),
                    i.to_string(),
                    j.to_string(),
                    mult.to_string(),
                    graph.label(u)?.to_string(),
                    graph.label(VertexId::new(n + 1, j))?.to_string(),
                ]);
            }
        }
    }
    Ok(rows)
}

fn graph_rendered(graph: &GradedGraph) -> Result<Rendered> {
    let json: Value =
        serde_json::from_str(&graph.to_json()).expect("graph json round trips");
    let mut text = String::new();
    for n in 0..graph.num_levels() {
        let labels = graph.level_labels(n)?;
        text.push_str(&format!("level {n} ({} vertices):", labels.len()));
        for l in labels {
            text.push(' ');
            text.push_str(if l.is_empty() { "\"\"" } else { l });
        }
        text.push('\n');
    }
    text.push_str(&format!("edges: {}\n", graph.edge_count()));
    Ok(Rendered::new(json, text)
        .with_csv(csv_table(
            &["level", "source", "target", "mult", "source_label", "target_label"],
            &edge_rows(graph)?,
        ))
        .with_dot(graph.to_dot()))
}

fn info_rendered(graph: &GradedGraph, kind: &str) -> Result<Rendered> {
    let top = graph.num_levels() - 1;
    let mut sizes = Vec::new();
    let mut paths = Vec::new();
    for n in 0..=top {
        sizes.push(graph.level_size(n)?);
        paths.push(graph.total_paths(n)?.to_string());
    }
    let json = json!({
        "kind": kind,
        "levels": top,
        "level_sizes": sizes,
        "path_counts": paths,
        "edge_count": graph.edge_count(),
    });
    let mut text = format!("kind: {kind}\nlevels: {top}\nedges: {}\n", graph.edge_count());
    let mut rows = Vec::new();
    for n in 0..=top {
        text.push_str(&format!("level {n}: {} vertices, {} paths\n", sizes[n], paths[n]));
        rows.push(vec![n.to_string(), sizes[n].to_string(), paths[n].clone()]);
    }
    Ok(Rendered::new(json, text).with_csv(csv_table(&["level", "size", "paths"], &rows)))
}

pub fn run(cmd: &GraphCmd, ctx: &Ctx) -> Result<Rendered> {
    match cmd {
        GraphCmd::Build(a) => {
            let graph = build_kind(a.kind, a.levels, a.d, ctx)?;
            graph_rendered(&graph)
        }
        GraphCmd::Info(a) => {
            let (graph, kind) = load_graph(a.kind, a.levels, a.d, a.input.as_deref(), ctx)?;
            info_rendered(&graph, &kind)
        }
        GraphCmd::Export(a) => {
            let (graph, _) = load_graph(a.kind, a.levels, a.d, a.input.as_deref(), ctx)?;
            graph_rendered(&graph)
        }
    }
}

#[derive(Args)]
pub struct DimArgs {
    /// Graph family.
    #[arg(long, value_enum)]
    graph: KindArg,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Level of the target vertex.
    #[arg(long)]
    level: usize,
    /// Label of the target vertex.
    #[arg(long)]
    vertex: String,
    /// Count paths starting at this lower vertex instead of the root.
    #[arg(long, requires = "from_level")]
    from: Option<String>,
    #[arg(long, requires = "from")]
    from_level: Option<usize>,
}

pub fn run_dim(args: &DimArgs, ctx: &Ctx) -> Result<Rendered> {
    let graph = build_kind(args.graph, args.level as u64, args.d, ctx)?;
    let v = graph.vertex(args.level, &args.vertex)?;
    let dimension = match (&args.from, args.from_level) {
        (Some(from), Some(from_level)) => {
            let u = graph.vertex(from_level, from)?;
            graph.skew_dimension(u, v)?
        }
        _ => graph.dimension(v)?,
    };
    let mut json = json!({
        "graph": args.graph.name(),
        "level": args.level,
        "vertex": args.vertex,
        "dimension": dimension.to_string(),
    });
    let obj = json.as_object_mut().expect("object");
    if let (Some(from), Some(from_level)) = (&args.from, args.from_level) {
        obj.insert("from".into(), Value::String(from.clone()));
        obj.insert("from_level".into(), json!(from_level));
    }
    let mut header = vec!["graph", "level", "vertex", "dimension"];
    let mut row = vec![
        args.graph.name().to_string(),
        args.level.to_string(),
        args.vertex.clone(),
        dimension.to_string(),
    ];
    if ctx.float {
        let f = dimension.to_f64().unwrap_or(f64::INFINITY);
        obj.insert("dimension_float".into(), json!(f));
        header.push("dimension_float");
        row.push(f.to_string());
    }
    let text = format!("{dimension}\n");
    Ok(Rendered::new(json, text).with_csv(csv_table(&header, &[row])))
}
