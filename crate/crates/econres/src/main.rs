use clap::{Parser, Subcommand, ValueEnum};

use econres::render::{self, Format};
use econres::{
    brick, chamber, fan, stability, verify, Error, GroupType, Theta,
};

/// Exact computations for 3-fold terminal cyclic quotient singularities:
/// economic resolution fans, per-cone monomial bricks, stability parameters
/// and their chamber.
#[derive(Parser)]
#[command(name = "econres", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Pretty)]
    format: FormatArg,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Tsv,
    Pretty,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Tsv => Format::Tsv,
            FormatArg::Pretty => Format::Pretty,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Maximal cones of the economic resolution fan
    Fan { r: u64, a: u64 },
    /// Cones, bricks and chart coordinates, one row per maximal cone
    Bricks { r: u64, a: u64 },
    /// Simple roots and the ray matrix of the stability chamber
    Chamber { r: u64, a: u64 },
    /// The recursive stability parameter: base, direction, multiplier
    Theta { r: u64, a: u64 },
    /// Test a parameter for stability of every brick
    Stable {
        r: u64,
        a: u64,
        /// Comma-separated fractions, e.g. "-16,-12,-12,1,13,13,13"
        #[arg(long, conflicts_with = "theta_file")]
        theta: Option<String>,
        /// File containing the same comma-separated fractions
        #[arg(long)]
        theta_file: Option<std::path::PathBuf>,
    },
    /// Run the per-type verification checks; exit 1 on any failure
    Verify { r: u64, a: u64 },
}

fn main() {
    let cli = Cli::parse();
    std::process::exit(run(cli));
}

fn run(cli: Cli) -> i32 {
    let format: Format = cli.format.into();
    let result = match cli.command {
        Command::Fan { r, a } => cmd_fan(r, a, format),
        Command::Bricks { r, a } => cmd_bricks(r, a, format),
        Command::Chamber { r, a } => cmd_chamber(r, a, format),
        Command::Theta { r, a } => cmd_theta(r, a, format),
        Command::Stable { r, a, theta, theta_file } => cmd_stable(r, a, theta, theta_file, format),
        Command::Verify { r, a } => cmd_verify(r, a),
    };
    match result {
        Ok(code) => code,
        Err(Error::InvalidType { .. }) | Err(Error::TrivialGroup) => {
            eprintln!("error: invalid quotient type");
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn group(r: u64, a: u64) -> Result<GroupType, Error> {
    GroupType::new(r, a)
}

fn cmd_fan(r: u64, a: u64, format: Format) -> Result<i32, Error> {
    let g = group(r, a)?;
    let fan = fan::econ_fan(&g)?;
    match format {
        Format::Json => println!("{}", render::fan_value(&fan)),
        Format::Tsv => print!("{}", render::fan_text(&fan, true)),
        Format::Pretty => print!("{}", render::fan_text(&fan, false)),
    }
    Ok(0)
}

fn brick_rows(
    g: &GroupType,
) -> Result<Vec<(fan::Cone, brick::GBrick, [econres::Monomial; 3])>, Error> {
    brick::danilov_bricks(g)?
        .into_iter()
        .map(|(cone, brick)| {
            let coords = fan::chart_coordinates(g, &cone)?;
            Ok((cone, brick, coords))
        })
        .collect()
}

fn cmd_bricks(r: u64, a: u64, format: Format) -> Result<i32, Error> {
    let g = group(r, a)?;
    let rows = brick_rows(&g)?;
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = rows
                .iter()
                .map(|(cone, brick, coords)| {
                    serde_json::json!({
                        "cone": render::cone_value(cone),
                        "brick": render::brick_value(brick),
                        "chart_coordinates": coords
                            .iter()
                            .map(render::monomial_value)
                            .collect::<Vec<_>>(),
                    })
                })
                .collect();
            println!("{}", serde_json::Value::Array(items));
        }
        Format::Tsv => print!("{}", render::bricks_text(&g, &rows, true)),
        Format::Pretty => print!("{}", render::bricks_text(&g, &rows, false)),
    }
    Ok(0)
}

fn cmd_chamber(r: u64, a: u64, format: Format) -> Result<i32, Error> {
    let g = group(r, a)?;
    let roots = chamber::simple_roots(&g)?;
    let rays = chamber::chamber_rays(&g)?;
    match format {
        Format::Json => println!(
            "{}",
            serde_json::json!({
                "simple_roots": render::rootset_value(&roots),
                "rays": render::matrix_value(&rays),
            })
        ),
        Format::Tsv => print!("{}", render::chamber_text(&g, &roots, &rays, true)),
        Format::Pretty => print!("{}", render::chamber_text(&g, &roots, &rays, false)),
    }
    Ok(0)
}

fn cmd_theta(r: u64, a: u64, format: Format) -> Result<i32, Error> {
    let g = group(r, a)?;
    let sym = stability::kedzierski_theta(&g)?;
    match format {
        Format::Json => println!("{}", render::symbolic_theta_value(&sym)),
        Format::Tsv => print!("{}", render::theta_text(&sym, true)),
        Format::Pretty => print!("{}", render::theta_text(&sym, false)),
    }
    Ok(0)
}

fn cmd_stable(
    r: u64,
    a: u64,
    theta: Option<String>,
    theta_file: Option<std::path::PathBuf>,
    format: Format,
) -> Result<i32, Error> {
    let g = group(r, a)?;
    let raw = match (theta, theta_file) {
        (Some(t), None) => t,
        (None, Some(path)) => std::fs::read_to_string(path).map_err(|_| Error::Infeasible)?,
        _ => {
            eprintln!("error: provide exactly one of --theta / --theta-file");
            return Ok(2);
        }
    };
    let values: Option<Vec<_>> = raw
        .trim()
        .split(',')
        .map(render::parse_rational)
        .collect();
    let Some(values) = values else {
        eprintln!("error: malformed fraction list");
        return Ok(2);
    };
    if values.len() != g.r() as usize {
        eprintln!("error: expected {} values", g.r());
        return Ok(2);
    }
    let Ok(theta) = Theta::new(values) else {
        eprintln!("error: parameter values must sum to zero");
        return Ok(2);
    };
    let mut lines = Vec::new();
    let mut all = true;
    for (cone, brick) in brick::danilov_bricks(&g)? {
        let stable = stability::is_stable(&brick, &theta)?;
        all &= stable;
        lines.push((cone, stable));
    }
    match format {
        Format::Json => {
            let items: Vec<serde_json::Value> = lines
                .iter()
                .map(|(cone, stable)| {
                    serde_json::json!({"cone": render::cone_value(cone), "stable": stable})
                })
                .collect();
            println!(
                "{}",
                serde_json::json!({"all_stable": all, "bricks": items})
            );
        }
        _ => {
            for (cone, stable) in &lines {
                println!("{}\t{}", if *stable { "stable" } else { "unstable" }, cone);
            }
            println!("{}", if all { "all stable" } else { "not all stable" });
        }
    }
    Ok(if all { 0 } else { 1 })
}

fn cmd_verify(r: u64, a: u64) -> Result<i32, Error> {
    let g = group(r, a)?;
    let report = verify::run_verify(&g)?;
    print!("{}", report.render());
    Ok(if report.all_pass() { 0 } else { 1 })
}
