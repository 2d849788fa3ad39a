use std::collections::BTreeMap;

use bratteli_core::characters::ThomaParameter;
use bratteli_core::measures::{ergodic_method_compare, thoma_measure};
use bratteli_core::{Error, Result, VertexId};
use clap::{Args, Subcommand};
use serde_json::json;

use crate::emit::{csv_table, rat_f64, rat_list_json, rat_str, Rendered};
use crate::Ctx;

#[derive(Subcommand)]
pub enum MeasureCmd {
    /// Vertex weights of a boundary point's central measure, level by level.
    Thoma(ThomaArgs),
    /// Distance between finite-carrier approximations and the limit measure.
    Compare(CompareArgs),
    /// Draw paths from the measure's Markov chain.
    Sample(SampleArgs),
}

#[derive(Args)]
pub struct ThomaArgs {
    #[arg(long, default_value = "")]
    alpha: String,
    #[arg(long, default_value = "")]
    beta: String,
    /// Highest level to report.
    #[arg(long)]
    levels: u64,
}

#[derive(Args)]
pub struct CompareArgs {
    #[arg(long, default_value = "")]
    alpha: String,
    #[arg(long, default_value = "")]
    beta: String,
    /// Comma-separated carrier sizes.
    #[arg(long = "N")]
    n: String,
    #[arg(long)]
    cylinder_level: usize,
}

#[derive(Args)]
pub struct SampleArgs {
    #[arg(long, default_value = "")]
    alpha: String,
    #[arg(long, default_value = "")]
    beta: String,
    /// Path length (levels walked from the root).
    #[arg(long)]
    length: usize,
    #[arg(long, default_value_t = 1)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

pub fn run(cmd: &MeasureCmd, ctx: &Ctx) -> Result<Rendered> {
    match cmd {
        MeasureCmd::Thoma(a) => {
            let theta = ThomaParameter::parse(&a.alpha, &a.beta)?;
            let measure = thoma_measure(&theta, a.levels)?;
            let graph = measure.graph();
            let mut entries = Vec::new();
            let mut rows = Vec::new();
            let mut text = String::new();
            for n in 0..=a.levels as usize {
                for (i, label) in graph.level_labels(n)?.iter().enumerate() {
                    let v = VertexId::new(n, i);
                    let nu = measure.nu(v)?.clone();
                    let mass = measure.mass(v)?;
                    let mut entry = json!({
                        "level": n,
                        "vertex": label,
                        "nu": rat_str(&nu),
                        "mass": rat_str(&mass),
                    });
                    let mut row = vec![
                        n.to_string(),
                        label.clone(),
                        rat_str(&nu),
                        rat_str(&mass),
                    ];
                    if ctx.float {
                        let (nf, mf) = (rat_f64(&nu), rat_f64(&mass));
                        let obj = entry.as_object_mut().expect("object");
                        obj.insert("nu_float".into(), json!(nf));
                        obj.insert("mass_float".into(), json!(mf));
                        row.push(nf.to_string());
                        row.push(mf.to_string());
                    }
                    text.push_str(&format!("{n} {label} nu={} mass={}\n", rat_str(&nu), rat_str(&mass)));
                    entries.push(entry);
                    rows.push(row);
                }
            }
            let json = json!({
                "alpha": rat_list_json(theta.alpha()),
                "beta": rat_list_json(theta.beta()),
                "levels": a.levels,
                "weights": entries,
            });
            let mut header = vec!["level", "vertex", "nu", "mass"];
            if ctx.float {
                header.push("nu_float");
                header.push("mass_float");
            }
            Ok(Rendered::new(json, text).with_csv(csv_table(&header, &rows)))
        }
        MeasureCmd::Compare(a) => {
            let theta = ThomaParameter::parse(&a.alpha, &a.beta)?;
            let ns: Vec<u64> = a
                .n
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::input(format!("bad carrier size {s:?}")))
                })
                .collect::<Result<_>>()?;
            let rows = ergodic_method_compare(&theta, &ns, a.cylinder_level, &ctx.budget)?;
            let mut entries = Vec::new();
            let mut csv_rows = Vec::new();
            let mut text = String::new();
            for r in &rows {
                let mut entry = json!({
                    "n": r.n,
                    "shape": r.shape.to_string(),
                    "distance": rat_str(&r.distance),
                });
                let mut row = vec![
                    r.n.to_string(),
                    r.shape.to_string(),
                    rat_str(&r.distance),
                ];
                text.push_str(&format!(
                    "N={} shape={} distance={}\n",
                    r.n,
                    r.shape,
                    rat_str(&r.distance)
                ));
                if ctx.float {
                    let f = rat_f64(&r.distance);
                    entry
                        .as_object_mut()
                        .expect("object")
                        .insert("distance_float".into(), json!(f));
                    row.push(f.to_string());
                }
                entries.push(entry);
                csv_rows.push(row);
            }
            let json = json!({
                "alpha": rat_list_json(theta.alpha()),
                "beta": rat_list_json(theta.beta()),
                "cylinder_level": a.cylinder_level,
                "rows": entries,
            });
            let mut header = vec!["N", "shape", "distance"];
            if ctx.float {
                header.push("distance_float");
            }
            Ok(Rendered::new(json, text).with_csv(csv_table(&header, &csv_rows)))
        }
        MeasureCmd::Sample(a) => {
            let theta = ThomaParameter::parse(&a.alpha, &a.beta)?;
            let measure = thoma_measure(&theta, a.length as u64)?;
            let graph = measure.graph().clone();
            let mut used = 0u64;
            ctx.budget
                .charge(&mut used, a.count.saturating_mul(a.length as u64), "sampling")?;
            let mut paths = Vec::new();
            let mut endpoint_counts: BTreeMap<String, u64> = BTreeMap::new();
            let mut text = String::new();
            let mut rows = Vec::new();
            for i in 0..a.count {
                let path = measure.sample_path(a.length, a.seed.wrapping_add(i))?;
                let labels = graph.path_labels(&path)?;
                let end = labels.last().expect("nonempty path labels").clone();
                *endpoint_counts.entry(end.clone()).or_insert(0) += 1;
                text.push_str(&labels.join("/"));
                text.push('\n');
                rows.push(vec![i.to_string(), end, labels.join("/")]);
                paths.push(labels);
            }
            let counts: Vec<_> = endpoint_counts
                .iter()
                .map(|(vertex, count)| json!({ "vertex": vertex, "count": count }))
                .collect();
            let json = json!({
                "alpha": rat_list_json(theta.alpha()),
                "beta": rat_list_json(theta.beta()),
                "length": a.length,
                "count": a.count,
                "seed": a.seed,
                "paths": paths,
                "endpoint_counts": counts,
            });
            Ok(Rendered::new(json, text)
                .with_csv(csv_table(&["sample", "endpoint", "path"], &rows)))
        }
    }
}
