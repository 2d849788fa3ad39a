use bratteli_core::characters::{
    irreducible_character, thoma_character, CycleType, ThomaParameter,
};
use bratteli_core::{Partition, Result};
use clap::{Args, Subcommand};
use serde_json::json;

use crate::emit::{csv_table, rat_f64, rat_list_json, rat_str, Rendered};
use crate::Ctx;

#[derive(Subcommand)]
pub enum CharacterCmd {
    /// Value of the boundary character at one cycle type.
    Eval(EvalArgs),
    /// Full irreducible character table of degree n as a shapes-by-classes grid.
    Table(TableArgs),
}

#[derive(Args)]
pub struct EvalArgs {
    /// Comma-separated row frequencies, e.g. 1/2,1/4.
    #[arg(long, default_value = "")]
    alpha: String,
    /// Comma-separated column frequencies.
    #[arg(long, default_value = "")]
    beta: String,
    /// Cycle type as comma-separated part sizes, e.g. 2,2,1.
    #[arg(long, default_value = "")]
    cycles: String,
}

#[derive(Args)]
pub struct TableArgs {
    #[arg(long)]
    n: u64,
}

fn parse_cycles(text: &str) -> Result<CycleType> {
    let text = text.trim();
    let parts: Vec<u64> = if text.is_empty() {
        Vec::new()
    } else {
        text.split(',')
            .map(|s| {
                s.trim().parse::<u64>().map_err(|_| {
                    bratteli_core::Error::input(format!("bad cycle length {s:?}"))
                })
            })
            .collect::<Result<_>>()?
    };
    CycleType::from_parts(parts)
}

pub fn run(cmd: &CharacterCmd, ctx: &Ctx) -> Result<Rendered> {
    match cmd {
        CharacterCmd::Eval(a) => {
            let theta = ThomaParameter::parse(&a.alpha, &a.beta)?;
            let rho = parse_cycles(&a.cycles)?;
            let value = thoma_character(&theta, &rho)?;
            let mut json = json!({
                "alpha": rat_list_json(theta.alpha()),
                "beta": rat_list_json(theta.beta()),
                "cycles": rho.partition().parts(),
                "value": rat_str(&value),
            });
            let mut header = vec!["alpha", "beta", "cycles", "value"];
            let mut row = vec![
                a.alpha.trim().to_string(),
                a.beta.trim().to_string(),
                rho.partition().to_string(),
                rat_str(&value),
            ];
            let mut text = format!("{}\n", rat_str(&value));
            if ctx.float {
                let f = rat_f64(&value);
                json.as_object_mut()
                    .expect("object")
                    .insert("value_float".into(), json!(f));
                header.push("value_float");
                row.push(f.to_string());
                text.push_str(&format!("{f}\n"));
            }
            Ok(Rendered::new(json, text).with_csv(csv_table(&header, &[row])))
        }
        CharacterCmd::Table(a) => {
            let shapes = Partition::all_of_size(a.n);
            let classes: Vec<CycleType> = shapes
                .iter()
                .map(|p| CycleType::new(p.clone()))
                .collect();
            let mut values: Vec<Vec<String>> = Vec::with_capacity(shapes.len());
            for lambda in &shapes {
                let mut line = Vec::with_capacity(classes.len());
                for rho in &classes {
                    line.push(irreducible_character(lambda, rho)?.to_string());
                }
                values.push(line);
            }
            let shape_labels: Vec<String> = shapes.iter().map(|p| p.to_string()).collect();
            let json = json!({
                "n": a.n,
                "shapes": shape_labels,
                "cycle_types": shape_labels,
                "values": values,
            });
            let mut header: Vec<&str> = vec!["shape"];
            header.extend(shape_labels.iter().map(|s| s.as_str()));
            let rows: Vec<Vec<String>> = shapes
                .iter()
                .zip(&values)
                .map(|(p, line)| {
                    let mut row = vec![p.to_string()];
                    row.extend(line.iter().cloned());
                    row
                })
                .collect();
            let mut text = String::new();
            text.push_str(&format!("shape\t{}\n", shape_labels.join("\t")));
            for (p, line) in shapes.iter().zip(&values) {
                text.push_str(&format!("{p}\t{}\n", line.join("\t")));
            }
            Ok(Rendered::new(json, text).with_csv(csv_table(&header, &rows)))
        }
    }
}
