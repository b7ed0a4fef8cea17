use std::fmt::Write;

use crate::commands::{BettiJson, Output, ReportJson};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

fn ideal_text(ideal: &[String]) -> String {
    match ideal {
        [] => "Spec S".into(),
        [one] if one == "1" => "empty".into(),
        gens => format!("V({})", gens.join(", ")),
    }
}

fn opt(v: Option<u64>) -> String {
    v.map_or_else(|| "undefined".into(), |v| v.to_string())
}

fn report_text(out: &mut String, r: &ReportJson) {
    let _ = writeln!(out, "rank {}", r.rank);
    let jumps: Vec<String> = r.jump_numbers.iter().map(|j| j.to_string()).collect();
    let _ = writeln!(out, "jump numbers {}", jumps.join(", "));
    for l in &r.loci {
        let _ = writeln!(out, "  V^i, {} <= i <= {}: {} (dim {})", l.i_from, l.i_to, ideal_text(&l.ideal), l.dim);
    }
    let _ = writeln!(out, "complexity {}", r.complexity);
    let _ = writeln!(out, "Betti degree {}", opt(r.betti_degree));
    let _ = writeln!(out, "Bass degree {}", opt(r.bass_degree));
    if let Some(d) = &r.duality {
        let _ = writeln!(out, "loci equal for M and M*: {}", d.per_index_equal);
        let _ = writeln!(out, "Betti degrees equal: {}", d.bdeg_equal);
    }
}

fn betti_text(out: &mut String, name: &str, b: &BettiJson) {
    let betti: Vec<String> = b.betti.iter().map(|x| x.to_string()).collect();
    let _ = writeln!(out, "{name}: {}", betti.join(" "));
    let q = &b.quasi_polynomial;
    let poly = |c: &[String]| {
        if c.is_empty() {
            return "0".to_string();
        }
        let terms: Vec<String> = c
            .iter()
            .enumerate()
            .map(|(k, c)| match k {
                0 => c.clone(),
                1 => format!("({c})*t"),
                _ => format!("({c})*t^{k}"),
            })
            .collect();
        terms.join(" + ")
    };
    let _ = writeln!(out, "  even t >= {}: {}", q.valid_from, poly(&q.even));
    let _ = writeln!(out, "  odd t >= {}: {}", q.valid_from, poly(&q.odd));
}

/// Renders a command's output. JSON keys keep their declaration order, so
/// the bytes depend only on the values.
pub fn emit(output: &Output, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(output).expect("plain data serializes") + "\n",
        Format::Text => {
            let mut out = String::new();
            match output {
                Output::Report(r) => report_text(&mut out, r),
                Output::Betti(b) => {
                    betti_text(&mut out, "M", &b.module);
                    match &b.dual {
                        Some(d) => betti_text(&mut out, "M*", d),
                        None => out.push_str("M*: not a module\n"),
                    }
                }
                Output::Realize(r) => {
                    let _ = writeln!(out, "nu {}", r.nu);
                    for (from, to) in &r.plateaus {
                        let _ = writeln!(out, "plateau {from}..={to}");
                    }
                    report_text(&mut out, &r.report);
                }
                Output::Crk(c) => {
                    let _ = writeln!(out, "crk at ({}) = {}", c.point.join(", "), c.crk);
                }
                Output::Oracle(o) => {
                    for p in &o.points {
                        let mark = if p.stable_betti == p.crk { "ok" } else { "MISMATCH" };
                        let _ = writeln!(out, "({}): stable Betti {}, crk {} {mark}", p.point.join(", "), p.stable_betti, p.crk);
                    }
                    let _ = writeln!(out, "all equal: {}", o.all_equal);
                }
            }
            out
        }
    }
}
