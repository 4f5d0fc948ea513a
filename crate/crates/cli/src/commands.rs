use std::fmt::Write as _;
use std::fs;
use std::io::{self, BufReader, Write};
use std::path::Path;

use polymate::bounds::{class_bound_ratio, uniqueness_bound_ratio, LogBase};
use polymate::census::{mates_to_json, run_census, GraphSource, PolynomialSpec, CENSUS_CSV_HEADER};
use polymate::parallel::with_threads;
use polymate::random::{
    alpha_omega_stats, alpha_reference_curves, common_neighborhood_minimum, extension_fraction,
    harmonious_falling_factorial_fraction, Probability, RandomStats, STATS_CSV_HEADER,
};
use polymate::{enumerate_nonisomorphic, graph6_decode, graph6_encode, read_graph6, Error, Result};

use crate::{Base, BoundKind, CensusTarget, Cli, Command, Format, Output, Stat};

/// 2 for invalid input, 1 for cost-guard rejections and runtime failures.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::OrderCap { .. } | Error::Io(_) | Error::InvariantViolation(_) => 1,
        _ => 2,
    }
}

pub fn run(cli: Cli) -> Result<()> {
    let threads = match cli.threads {
        Some(t) => t,
        None => std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    with_threads(threads, move || execute(cli.command))?
}

fn execute(command: Command) -> Result<()> {
    match command {
        Command::Poly { graph, which, format } => {
            let spec = PolynomialSpec::parse(&which)?;
            let g = graph6_decode(&graph)?;
            let p = spec.evaluate(&g)?;
            let text = match format {
                Format::Text => p.to_string(),
                Format::Json => p.to_json().to_string(),
                Format::Csv => p.to_decimal_strings().join(","),
            };
            emit(&Output { out: None }, &format!("{text}\n"))
        }
        Command::Census { target, output, format } => {
            let (spec, source) = prepare(&target)?;
            let report = run_census(&spec, target.n, &source)?.report();
            let text = match format {
                Format::Text => {
                    let mut s = String::new();
                    let rows: [(&str, String); 9] = [
                        ("polynomial", report.polynomial.clone()),
                        ("n", report.n.to_string()),
                        ("total_graphs", report.total_graphs.to_string()),
                        ("class_count", report.class_count.to_string()),
                        ("beta_cumulative", report.beta_cumulative.to_string()),
                        ("unique_count", report.unique_count.to_string()),
                        ("fraction_unique", report.fraction_unique.to_string()),
                        ("largest_class_size", report.largest_class_size.to_string()),
                        ("mate_class_count", report.mate_class_count.to_string()),
                    ];
                    for (k, v) in rows {
                        let _ = writeln!(s, "{k:<18} {v}");
                    }
                    s
                }
                Format::Csv => format!("{CENSUS_CSV_HEADER}\n{}\n", report.csv_row()),
                Format::Json => format!("{}\n", to_json(&report)),
            };
            emit(&output, &text)
        }
        Command::Mates { target, output, format } => {
            let (spec, source) = prepare(&target)?;
            let mates = run_census(&spec, target.n, &source)?.mates();
            let text = match format {
                Format::Json => format!("{}\n", mates_to_json(&mates)),
                Format::Text => {
                    let mut s = String::new();
                    for m in &mates {
                        let members: Vec<String> = m.members.iter().map(graph6_encode).collect();
                        let _ = writeln!(s, "{}: {}", m.polynomial, members.join(" "));
                    }
                    s
                }
                Format::Csv => {
                    return Err(Error::InvalidParameter("mates supports --format text or json".into()));
                }
            };
            emit(&output, &text)
        }
        Command::Random {
            stat,
            n,
            p,
            samples,
            seed,
            k,
            output,
            format,
        } => {
            let p: Probability = p.parse()?;
            let stats = match stat {
                Stat::AlphaOmega => {
                    let (a, w) = alpha_omega_stats(n, p, samples, seed)?;
                    vec![a, w]
                }
                Stat::Extension => vec![extension_fraction(n, p, k, samples, seed)?],
                Stat::Chernoff => vec![common_neighborhood_minimum(n, p, samples, seed)?],
                Stat::HarmFraction => vec![harmonious_falling_factorial_fraction(n, p, samples, seed)?],
            };
            let text = match format {
                Format::Csv => {
                    let mut s = format!("{STATS_CSV_HEADER}\n");
                    for st in &stats {
                        let _ = writeln!(s, "{}", st.csv_row());
                    }
                    s
                }
                Format::Json => format!("{}\n", to_json(&stats)),
                Format::Text => {
                    let mut s = String::new();
                    for st in &stats {
                        let _ = writeln!(s, "{}", describe(st));
                    }
                    if stat == Stat::AlphaOmega {
                        let (log2_curve, ln_curve) = alpha_reference_curves(n);
                        let _ = writeln!(s, "reference 2*log2(n) = {log2_curve:.4}, 4*ln(n/2) = {ln_curve:.4}");
                    }
                    s
                }
            };
            emit(&output, &text)
        }
        Command::Gen { n, output } => {
            let mut s = String::new();
            for g in enumerate_nonisomorphic(n)? {
                s.push_str(&graph6_encode(&g));
                s.push('\n');
            }
            emit(&output, &s)
        }
        Command::Bound {
            which,
            n,
            a,
            log_base,
            format,
        } => {
            let base = match log_base {
                Base::E => LogBase::Natural,
                Base::Two => LogBase::Two,
            };
            let (name, value) = match which {
                BoundKind::Deg => ("deg", uniqueness_bound_ratio(n)?),
                BoundKind::Pq => ("pq", class_bound_ratio(n, a, base)?),
            };
            let base_name = match log_base {
                Base::E => "e",
                Base::Two => "2",
            };
            let text = match (format, which) {
                (Format::Text, BoundKind::Deg) => format!("log10 ratio (deg, n={n}) = {value}\n"),
                (Format::Text, BoundKind::Pq) => {
                    format!("log10 ratio (pq, n={n}, a={a}, log base {base_name}) = {value}\n")
                }
                (Format::Csv, _) => format!("which,n,a,log_base,log10_ratio\n{name},{n},{a},{base_name},{value}\n"),
                (Format::Json, _) => format!(
                    "{}\n",
                    serde_json::json!({"which": name, "n": n, "a": a, "log_base": base_name, "log10_ratio": value})
                ),
            };
            emit(&Output { out: None }, &text)
        }
    }
}

fn prepare(target: &CensusTarget) -> Result<(PolynomialSpec, GraphSource)> {
    let spec = PolynomialSpec::parse(&target.which)?;
    let source = match &target.input {
        None => GraphSource::native(),
        Some(path) => {
            let file = fs::File::open(path).map_err(|e| io_error(path, e))?;
            GraphSource::from_graphs(&read_graph6(BufReader::new(file))?)
        }
    };
    Ok((spec, source))
}

fn describe(st: &RandomStats) -> String {
    let mut s = format!(
        "{} n={} p={} samples={} seed={} mean={} min={} max={}",
        st.metric, st.n, st.p, st.samples, st.seed, st.mean, st.min, st.max
    );
    if let Some(f) = st.fraction {
        let _ = write!(s, " fraction={f}");
    }
    s
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports serialize")
}

fn io_error(path: &Path, e: io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| io_error(path, e)),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .map_err(|e| Error::Io(format!("stdout: {e}")))
        }
    }
}
