use bratteli_core::characters::{parse_rational_list, ThomaParameter};
use bratteli_core::diagnostics::{
    bernoulli_measure, boundary_separation, poulsen_witness, witness_labels, zeros_measure,
};
use bratteli_core::{Error, Result};
use clap::{Args, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use crate::emit::{csv_table, rat_f64, rat_list_json, rat_str, Rendered};
use crate::Ctx;

#[derive(Subcommand)]
pub enum DiagnoseCmd {
    /// Search for a finite orbit mix matching a target measure's cylinders.
    Poulsen(PoulsenArgs),
    /// Pairwise distance matrix of central measures at one level.
    Separation(SeparationArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    /// Uniform measure on rank-n patterns.
    Bernoulli,
    /// Point mass on the all-zeros path.
    Zeros,
}

impl TargetArg {
    fn name(self) -> &'static str {
        match self {
            TargetArg::Bernoulli => "bernoulli",
            TargetArg::Zeros => "zeros",
        }
    }
}

#[derive(Args)]
pub struct PoulsenArgs {
    #[arg(long, value_enum, default_value_t = TargetArg::Bernoulli)]
    target: TargetArg,
    /// Rank at which cylinder distributions are compared.
    #[arg(long)]
    cylinder_level: usize,
    /// Acceptable total variation distance, e.g. 1/16.
    #[arg(long, default_value = "0")]
    eps: String,
}

#[derive(Args)]
pub struct SeparationArgs {
    /// Semicolon-separated alpha lists, e.g. "1;1/2,1/2;0".
    #[arg(long)]
    alphas: String,
    /// Semicolon-separated beta lists, aligned with --alphas.
    #[arg(long)]
    betas: Option<String>,
    #[arg(long)]
    level: u64,
}

fn parse_eps(text: &str) -> Result<BigRational> {
    text.trim()
        .parse::<BigRational>()
        .map_err(|_| Error::input(format!("bad tolerance {text:?}")))
}

pub fn run(cmd: &DiagnoseCmd, ctx: &Ctx) -> Result<Rendered> {
    match cmd {
        DiagnoseCmd::Poulsen(a) => {
            let eps = parse_eps(&a.eps)?;
            let target = match a.target {
                TargetArg::Bernoulli => bernoulli_measure(a.cylinder_level as u64)?,
                TargetArg::Zeros => zeros_measure(a.cylinder_level as u64)?,
            };
            let witness = poulsen_witness(&target, a.cylinder_level, &eps, &ctx.budget)?;
            let invariant = witness.measure.is_invariant_at(a.cylinder_level)?;
            let orbits = witness_labels(&witness.measure);
            let mut json = json!({
                "target": a.target.name(),
                "cylinder_level": a.cylinder_level,
                "eps": rat_str(&eps),
                "depth": witness.measure.depth(),
                "distance": rat_str(&witness.distance),
                "reached": witness.reached,
                "invariant": invariant,
                "orbits": orbits,
            });
            let mut header = vec![
                "target",
                "cylinder_level",
                "eps",
                "depth",
                "distance",
                "reached",
                "invariant",
                "orbits",
            ];
            let mut row = vec![
                a.target.name().to_string(),
                a.cylinder_level.to_string(),
                rat_str(&eps),
                witness.measure.depth().to_string(),
                rat_str(&witness.distance),
                witness.reached.to_string(),
                invariant.to_string(),
                orbits.join(";"),
            ];
            let mut text = format!(
                "depth: {}\ndistance: {}\nreached: {}\ninvariant: {}\norbits: {}\n",
                witness.measure.depth(),
                rat_str(&witness.distance),
                witness.reached,
                invariant,
                orbits.join(" ")
            );
            if ctx.float {
                let f = rat_f64(&witness.distance);
                json.as_object_mut()
                    .expect("object")
                    .insert("distance_float".into(), json!(f));
                header.push("distance_float");
                row.push(f.to_string());
                text.push_str(&format!("distance_float: {f}\n"));
            }
            Ok(Rendered::new(json, text).with_csv(csv_table(&header, &[row])))
        }
        DiagnoseCmd::Separation(a) => {
            let alpha_groups: Vec<&str> = a.alphas.split(';').collect();
            let beta_groups: Vec<&str> = match &a.betas {
                Some(b) => {
                    let groups: Vec<&str> = b.split(';').collect();
                    if groups.len() != alpha_groups.len() {
                        return Err(Error::input(format!(
                            "--betas lists {} parameters, --alphas lists {}",
                            groups.len(),
                            alpha_groups.len()
                        )));
                    }
                    groups
                }
                None => vec![""; alpha_groups.len()],
            };
            let thetas: Vec<ThomaParameter> = alpha_groups
                .iter()
                .zip(&beta_groups)
                .map(|(al, be)| {
                    // a bare "0" names the zero parameter
                    let al = if al.trim() == "0" { "" } else { al };
                    let be = if be.trim() == "0" { "" } else { be };
                    ThomaParameter::new(parse_rational_list(al)?, parse_rational_list(be)?)
                })
                .collect::<Result<_>>()?;
            let distances = boundary_separation(&thetas, a.level)?;
            let params: Vec<_> = thetas
                .iter()
                .map(|t| {
                    json!({
                        "alpha": rat_list_json(t.alpha()),
                        "beta": rat_list_json(t.beta()),
                    })
                })
                .collect();
            let matrix: Vec<Vec<String>> = distances
                .iter()
                .map(|row| row.iter().map(rat_str).collect())
                .collect();
            let mut json = json!({
                "level": a.level,
                "parameters": params,
                "distances": matrix,
            });
            let mut header = vec!["i", "j", "distance"];
            if ctx.float {
                header.push("distance_float");
                let float_matrix: Vec<Vec<f64>> = distances
                    .iter()
                    .map(|row| row.iter().map(rat_f64).collect())
                    .collect();
                json.as_object_mut()
                    .expect("object")
                    .insert("distances_float".into(), json!(float_matrix));
            }
            let mut rows = Vec::new();
            let mut text = String::new();
            for (i, matrix_row) in distances.iter().enumerate() {
                for (j, d) in matrix_row.iter().enumerate().skip(i + 1) {
                    text.push_str(&format!("d({i},{j}) = {}\n", rat_str(d)));
                    let mut row = vec![i.to_string(), j.to_string(), rat_str(d)];
                    if ctx.float {
                        row.push(rat_f64(d).to_string());
                    }
                    rows.push(row);
                }
            }
            Ok(Rendered::new(json, text).with_csv(csv_table(&header, &rows)))
        }
    }
}
