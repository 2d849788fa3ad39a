use bratteli_core::adic::{default_order, invariance_check, orbit_paths, orbit_partition_check};
use bratteli_core::characters::ThomaParameter;
use bratteli_core::generators::GraphKind;
use bratteli_core::measures::thoma_measure;
use bratteli_core::{Error, Result};
use clap::{Args, Subcommand};
use serde_json::json;

use crate::emit::{csv_table, rat_str, Rendered};
use crate::graph_cmd::build_kind;
use crate::{Ctx, KindArg};

impl KindArg {
    fn to_kind(self) -> GraphKind {
        match self {
            KindArg::Young => GraphKind::Young,
            KindArg::Pascal => GraphKind::Pascal,
            KindArg::Multidim => GraphKind::Multidim,
            KindArg::Solvable => GraphKind::Solvable,
        }
    }
}

#[derive(Subcommand)]
pub enum AdicCmd {
    /// Successor orbit of the minimal path into a vertex, in order.
    Orbit(OrbitArgs),
    /// Verify that successor orbits partition the level into co-terminal classes.
    Check(CheckArgs),
}

#[derive(Args)]
pub struct OrbitArgs {
    /// Graph family.
    #[arg(long, value_enum)]
    graph: KindArg,
    #[arg(long, default_value_t = 2)]
    d: usize,
    #[arg(long)]
    level: usize,
    /// Label of the endpoint vertex.
    #[arg(long)]
    vertex: String,
}

#[derive(Args)]
pub struct CheckArgs {
    /// Graph family.
    #[arg(long, value_enum)]
    graph: KindArg,
    #[arg(long, default_value_t = 2)]
    d: usize,
    /// Level whose path space is checked.
    #[arg(long)]
    level: usize,
    /// Also report the worst cylinder-probability change under one successor
    /// step for this boundary measure (Young graph only).
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long, requires = "alpha")]
    beta: Option<String>,
}

pub fn run(cmd: &AdicCmd, ctx: &Ctx) -> Result<Rendered> {
    match cmd {
        AdicCmd::Orbit(a) => {
            let graph = build_kind(a.graph, a.level as u64, a.d, ctx)?;
            let order = default_order(&graph, a.graph.to_kind())?;
            let v = graph.vertex(a.level, &a.vertex)?;
            let paths = orbit_paths(&graph, &order, v, &ctx.budget)?;
            let mut labels = Vec::with_capacity(paths.len());
            let mut text = String::new();
            let mut rows = Vec::new();
            for (i, p) in paths.iter().enumerate() {
                let l = graph.path_labels(p)?;
                text.push_str(&l.join("/"));
                text.push('\n');
                rows.push(vec![i.to_string(), l.join("/")]);
                labels.push(l);
            }
            let json = json!({
                "graph": a.graph.name(),
                "level": a.level,
                "vertex": a.vertex,
                "dimension": graph.dimension(v)?.to_string(),
                "paths": labels,
            });
            Ok(Rendered::new(json, text).with_csv(csv_table(&["index", "path"], &rows)))
        }
        AdicCmd::Check(a) => {
            let graph = build_kind(a.graph, a.level as u64, a.d, ctx)?;
            let order = default_order(&graph, a.graph.to_kind())?;
            let report = orbit_partition_check(&graph, &order, a.level, &ctx.budget)?;
            let discrepancy = match &a.alpha {
                Some(alpha) => {
                    if a.graph != KindArg::Young {
                        return Err(Error::input(
                            "boundary measures live on the young graph; drop --alpha or use --graph young",
                        ));
                    }
                    let theta =
                        ThomaParameter::parse(alpha, a.beta.as_deref().unwrap_or(""))?;
                    let measure = thoma_measure(&theta, a.level as u64)?;
                    Some(invariance_check(&measure, &order, a.level, &ctx.budget)?)
                }
                None => None,
            };
            let classes: Vec<_> = report
                .classes
                .iter()
                .map(|c| json!({ "vertex": c.label, "size": c.size }))
                .collect();
            let mut json = json!({
                "graph": a.graph.name(),
                "level": a.level,
                "status": "ok",
                "classes": classes,
            });
            let mut text = format!(
                "level {}: {} co-terminal classes verified\n",
                report.level,
                report.classes.len()
            );
            let mut rows = Vec::new();
            for c in &report.classes {
                text.push_str(&format!("{} {}\n", c.label, c.size));
                rows.push(vec![c.label.clone(), c.size.to_string()]);
            }
            if let Some(gap) = discrepancy {
                json.as_object_mut()
                    .expect("object")
                    .insert("invariance_discrepancy".into(), json!(rat_str(&gap)));
                text.push_str(&format!("invariance discrepancy: {}\n", rat_str(&gap)));
            }
            Ok(Rendered::new(json, text).with_csv(csv_table(&["vertex", "size"], &rows)))
        }
    }
}
