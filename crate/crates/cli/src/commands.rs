use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use raoseq::rao_order::{OrderError, RaoWitness};
use raoseq::realization::{component_vertex_sets, realize_bounded_with};
use raoseq::sequence::erdos_gallai_sides;
use raoseq::wqo::mine_antichain_between;
use raoseq::{
    erdos_gallai_check, find_good_pair, from_regularity, generate_stream, leq_pointwise,
    plan_bounded, rao_leq_oracle, rao_leq_sufficient, rao_leq_via_components, realize,
    sufficient_by_length, to_regularity, Generator, GraphicalityVerdict, HarnessError,
    IntegerSequence, RealizationError, RegularitySequence, SearchLimits, SimpleGraph, Strategy,
    StreamConfig,
};
use serde::Serialize;
use serde_json::json;

use crate::input;
use crate::{Cli, Command, CompareMethod, GeneratorArg, GlobalOpts};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Success = 0,
    Negative = 1,
    UsageError = 2,
}

impl Outcome {
    fn and(self, other: Outcome) -> Outcome {
        if self == Outcome::Success {
            other
        } else {
            self
        }
    }
}

pub fn run(cli: &Cli, out: &mut impl Write) -> Result<Outcome> {
    let g = &cli.global;
    match &cli.command {
        Command::Check {
            sequence,
            file,
            prop4,
        } => check(g, out, sequence, file, *prop4),
        Command::Realize {
            sequence,
            file,
            bounded,
        } => realize_cmd(g, out, sequence, file, *bounded, false),
        Command::RealizeBounded {
            sequence,
            file,
            plan,
        } => realize_cmd(g, out, sequence, file, true, *plan),
        Command::Regularity {
            sequence,
            file,
            bound,
            decode,
            leq,
        } => regularity(g, out, sequence, file, *bound, *decode, leq.as_deref()),
        Command::Compare {
            d1,
            d2,
            method,
            bound,
        } => compare(g, out, d1, d2, *method, *bound),
        Command::Harness {
            bound,
            count,
            seed,
            max_length,
            generator,
            show_stream,
            timing,
        } => {
            let cfg = StreamConfig {
                bound: *bound,
                max_length: *max_length,
                seed: *seed,
                count: *count,
                generator: match generator {
                    GeneratorArg::Random => Generator::Random,
                    GeneratorArg::Enumerate => Generator::Enumerate,
                },
            };
            harness(g, out, &cfg, *show_stream, *timing)
        }
        Command::Antichain {
            bound,
            max_length,
            min_length,
        } => antichain(g, out, *bound, *min_length, *max_length),
    }
}

fn limits(g: &GlobalOpts) -> SearchLimits {
    SearchLimits {
        oracle_cap: g.oracle_cap,
        induced_cap: g.induced_cap,
        strategy: if g.sequential {
            Strategy::Sequential
        } else {
            Strategy::default()
        },
    }
}

fn sequences(
    g: &GlobalOpts,
    args: &[String],
    file: &Option<PathBuf>,
) -> Result<Vec<IntegerSequence>> {
    let lines = input::gather(args, file.as_deref()).context("reading input")?;
    if lines.is_empty() {
        bail!("no sequence given");
    }
    lines
        .iter()
        .map(|l| input::parse(l, g.strip_zeros).with_context(|| format!("parsing `{l}`")))
        .collect()
}

fn json_line(out: &mut impl Write, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn verdict_text(seq: &IntegerSequence, v: &GraphicalityVerdict) -> String {
    match v.failing_index {
        _ if v.graphic => "graphic".to_string(),
        Some(k) => {
            let (lhs, rhs) = erdos_gallai_sides(seq, k);
            format!("not graphic (k={k}: {lhs} > {rhs})")
        }
        None => format!("not graphic (odd degree sum {})", seq.degree_sum()),
    }
}

fn check(
    g: &GlobalOpts,
    out: &mut impl Write,
    args: &[String],
    file: &Option<PathBuf>,
    prop4: bool,
) -> Result<Outcome> {
    let seqs = sequences(g, args, file)?;
    let labelled = seqs.len() > 1 || args.is_empty();
    let mut outcome = Outcome::Success;
    for s in &seqs {
        let v = erdos_gallai_check(s);
        if !v.graphic {
            outcome = Outcome::Negative;
        }
        let n = s.len() as u64;
        let d1_sq = u64::from(s.max_degree()).pow(2);
        if g.json {
            let mut obj = json!({
                "sequence": s,
                "graphic": v.graphic,
                "failing_index": v.failing_index,
                "odd_sum": v.odd_sum(),
            });
            if let Some(k) = v.failing_index {
                let (lhs, rhs) = erdos_gallai_sides(s, k);
                obj["lhs"] = json!(lhs);
                obj["rhs"] = json!(rhs);
            }
            if prop4 {
                obj["length_bound"] = json!({
                    "n": n,
                    "d1_squared": d1_sq,
                    "sufficient": sufficient_by_length(s),
                });
            }
            json_line(out, &obj)?;
            continue;
        }
        let prefix = if labelled {
            format!("{s}: ")
        } else {
            String::new()
        };
        writeln!(out, "{prefix}{}", verdict_text(s, &v))?;
        if prop4 {
            let cmp = if n >= d1_sq { ">=" } else { "<" };
            let verdict = if sufficient_by_length(s) {
                "sufficient"
            } else {
                "not sufficient"
            };
            writeln!(
                out,
                "{prefix}length bound: n={n} {cmp} d1^2={d1_sq} ({verdict})"
            )?;
        }
    }
    Ok(outcome)
}

fn not_graphic(
    out: &mut impl Write,
    g: &GlobalOpts,
    s: &IntegerSequence,
    v: &GraphicalityVerdict,
) -> Result<Outcome> {
    if g.json {
        json_line(
            out,
            &json!({"sequence": s, "graphic": false, "failing_index": v.failing_index}),
        )?;
    }
    eprintln!("{s}: {}", verdict_text(s, v));
    Ok(Outcome::Negative)
}

fn realize_cmd(
    g: &GlobalOpts,
    out: &mut impl Write,
    args: &[String],
    file: &Option<PathBuf>,
    bounded: bool,
    plan: bool,
) -> Result<Outcome> {
    let strategy = limits(g).strategy;
    let mut outcome = Outcome::Success;
    for s in sequences(g, args, file)? {
        let v = erdos_gallai_check(&s);
        if !v.graphic {
            outcome = outcome.and(not_graphic(out, g, &s, &v)?);
            continue;
        }
        if plan {
            match plan_bounded(&s) {
                Ok(p) if g.json => json_line(out, &p)?,
                Ok(p) => {
                    writeln!(
                        out,
                        "chunk length L={} q={} r={}",
                        p.chunk_length, p.chunk_count, p.remainder
                    )?;
                    for c in &p.chunks {
                        writeln!(out, "chunk {c} sum={}", c.degree_sum())?;
                    }
                    for b in &p.paired_blocks {
                        writeln!(out, "block {b} length={}", b.len())?;
                    }
                }
                Err(RealizationError::TooShortToChunk { len, chunk_length }) => {
                    if g.json {
                        json_line(
                            out,
                            &json!({"chunk_length": chunk_length, "chunk_count": 0, "remainder": len}),
                        )?;
                    } else {
                        writeln!(
                            out,
                            "chunk length L={chunk_length} q=0 r={len} (realized directly)"
                        )?;
                    }
                }
                Err(e) => return Err(e.into()),
            }
            continue;
        }
        let graph = if bounded {
            realize_bounded_with(&s, strategy)?
        } else {
            realize(&s)?
        };
        write_graph(out, g, &s, &graph, bounded)?;
    }
    Ok(outcome)
}

fn write_graph(
    out: &mut impl Write,
    g: &GlobalOpts,
    s: &IntegerSequence,
    graph: &SimpleGraph,
    bounded: bool,
) -> Result<()> {
    let sizes: Vec<usize> = component_vertex_sets(graph).iter().map(Vec::len).collect();
    let bound = 3 * u64::from(s.max_degree()).pow(2);
    if g.json {
        let mut obj = serde_json::to_value(graph)?;
        if bounded {
            obj["component_sizes"] = json!(sizes);
            obj["bound"] = json!(bound);
        }
        return json_line(out, &obj);
    }
    out.write_all(graph.to_edge_list().as_bytes())?;
    if bounded {
        let joined: Vec<String> = sizes.iter().map(usize::to_string).collect();
        writeln!(out, "c components {}", joined.join(" "))?;
        writeln!(out, "c bound {bound}")?;
    }
    Ok(())
}

fn regularity(
    g: &GlobalOpts,
    out: &mut impl Write,
    args: &[String],
    file: &Option<PathBuf>,
    bound: Option<u32>,
    decode: bool,
    leq: Option<&str>,
) -> Result<Outcome> {
    if decode {
        let lines = input::gather(args, file.as_deref())?;
        if lines.is_empty() {
            bail!("no count vector given");
        }
        for line in lines {
            let counts: Vec<u64> = input::expand(&line)?
                .into_iter()
                .map(|c| u64::try_from(c).with_context(|| format!("negative count in `{line}`")))
                .collect::<Result<_>>()?;
            let reg = RegularitySequence::from_counts_desc(&counts)?;
            let s = from_regularity(&reg)?;
            if g.json {
                json_line(out, &s)?;
            } else {
                writeln!(out, "{s}")?;
            }
        }
        return Ok(Outcome::Success);
    }
    let seqs = sequences(g, args, file)?;
    let other = leq.map(|t| input::parse(t, g.strip_zeros)).transpose()?;
    let n = bound.unwrap_or_else(|| {
        seqs.iter()
            .chain(other.iter())
            .map(IntegerSequence::max_degree)
            .max()
            .unwrap()
    });
    let mut outcome = Outcome::Success;
    for s in &seqs {
        let v = to_regularity(s, n)?;
        match &other {
            None if g.json => json_line(out, &v)?,
            None => writeln!(out, "{v}")?,
            Some(o) => {
                let w = to_regularity(o, n)?;
                let holds = leq_pointwise(&v, &w)?;
                if !holds {
                    outcome = Outcome::Negative;
                }
                if g.json {
                    json_line(out, &json!({"left": v, "right": w, "leq": holds}))?;
                } else {
                    writeln!(out, "{v} <=_H {w}: {holds}")?;
                }
            }
        }
    }
    Ok(outcome)
}

#[derive(Serialize)]
#[serde(rename_all = "kebab-case")]
enum CompareResult {
    Holds,
    Inconclusive,
    DoesNotHold,
}

fn compare(
    g: &GlobalOpts,
    out: &mut impl Write,
    d1: &str,
    d2: &str,
    method: CompareMethod,
    bound: Option<u32>,
) -> Result<Outcome> {
    let a = input::parse(d1, g.strip_zeros).with_context(|| format!("parsing `{d1}`"))?;
    let b = input::parse(d2, g.strip_zeros).with_context(|| format!("parsing `{d2}`"))?;
    for s in [&a, &b] {
        let v = erdos_gallai_check(s);
        if !v.graphic {
            return not_graphic(out, g, s, &v);
        }
    }
    let lim = limits(g);
    let n = bound.unwrap_or(a.max_degree().max(b.max_degree()));

    let mut found: Option<(&str, RaoWitness)> = None;
    let mut refuted = false;
    if matches!(method, CompareMethod::Auto | CompareMethod::Sufficient) {
        found = rao_leq_sufficient(&a, &b, n)?.map(|w| ("sufficient", w));
    }
    if found.is_none() && matches!(method, CompareMethod::Auto | CompareMethod::Components) {
        found = rao_leq_via_components(&a, &b, &lim)?.map(|w| ("components", w));
    }
    let run_oracle = match method {
        CompareMethod::Oracle => true,
        CompareMethod::Auto => b.len() <= lim.oracle_cap,
        _ => false,
    };
    if found.is_none() && run_oracle {
        match rao_leq_oracle(&a, &b, &lim) {
            Ok(Some(w)) => found = Some(("oracle", w)),
            Ok(None) => refuted = true,
            Err(e @ OrderError::OracleCapExceeded { .. }) => {
                bail!("{e}; use --method sufficient or components, or raise --oracle-cap")
            }
            Err(e) => return Err(e.into()),
        }
    }
    if let Some((_, w)) = &found {
        w.validate()
            .context("internal error: witness failed revalidation")?;
    }

    let (result, outcome) = match (&found, refuted) {
        (Some(_), _) => (CompareResult::Holds, Outcome::Success),
        (None, true) => (CompareResult::DoesNotHold, Outcome::Negative),
        (None, false) => (CompareResult::Inconclusive, Outcome::Negative),
    };
    if g.json {
        json_line(
            out,
            &json!({
                "d1": a,
                "d2": b,
                "result": result,
                "method": found.as_ref().map(|(m, _)| *m).or(refuted.then_some("oracle")),
                "witness": found.as_ref().map(|(_, w)| w),
            }),
        )?;
    } else {
        let line = match (&found, refuted) {
            (Some((m, _)), _) => format!("holds ({m})"),
            (None, true) => "does not hold (oracle)".to_string(),
            (None, false) => "inconclusive".to_string(),
        };
        writeln!(out, "{line}")?;
    }
    Ok(outcome)
}

fn harness(
    g: &GlobalOpts,
    out: &mut impl Write,
    cfg: &StreamConfig,
    show_stream: bool,
    timing: bool,
) -> Result<Outcome> {
    let start = Instant::now();
    let stream = generate_stream(cfg)?;
    if show_stream && !g.json {
        for (i, s) in stream.iter().enumerate() {
            writeln!(out, "{} {s}", i + 1)?;
        }
    }
    let report = find_good_pair(&stream, cfg.bound, &limits(g));
    let elapsed_ms = start.elapsed().as_millis() as u64;
    match report {
        Ok(r) => {
            if g.json {
                let mut obj = serde_json::to_value(&r)?;
                if show_stream {
                    obj["stream"] = json!(stream);
                }
                if timing {
                    obj["elapsed_ms"] = json!(elapsed_ms);
                }
                json_line(out, &obj)?;
            } else {
                writeln!(out, "{r}")?;
                if timing {
                    writeln!(out, "elapsed {elapsed_ms} ms")?;
                }
            }
            Ok(Outcome::Success)
        }
        Err(HarnessError::Exhausted { scanned }) => {
            if g.json {
                json_line(
                    out,
                    &json!({"good_pair": null, "prefix_length_scanned": scanned}),
                )?;
            } else {
                writeln!(out, "no good pair among the first {scanned} sequences")?;
            }
            Ok(Outcome::Negative)
        }
        Err(e) => Err(e.into()),
    }
}

fn antichain(
    g: &GlobalOpts,
    out: &mut impl Write,
    bound: u32,
    min_length: usize,
    max_length: usize,
) -> Result<Outcome> {
    let chain = mine_antichain_between(bound, min_length, max_length, &limits(g))?;
    if g.json {
        json_line(out, &chain)?;
    } else {
        for s in &chain {
            writeln!(out, "{s}")?;
        }
    }
    Ok(Outcome::Success)
}
