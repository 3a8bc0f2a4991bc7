mod cache;
mod output;

use std::process::ExitCode;

use anyhow::{bail, ensure, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use weylext::alcove::{
    d_value, find_horizontal_cut, find_vertical_cut, is_interior, koppinen_orbit, same_block_candidate,
};
use weylext::certify::{carter_payne_certificate, fayers_martin_certificate, wen_dims, FmBounds};
use weylext::engine::{hom_base_gl2, Engine, ExtKind, ExtValue, Status};
use weylext::mullineux::mullineux;
use weylext::oracle::{build_module, oracle_hom_dim, oracle_hom_to_simple};
use weylext::transfer::{global_dimension, kunneth_ext, specht_ext, Side, TransferResult};
use weylext::{Error, FieldParams, Partition, Weight};

use cache::DiskCache;
use output::{entries, Format, Report};

#[derive(Parser)]
#[command(name = "weylext", version, about = "Exact Hom and Ext dimensions for Schur and Hecke algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
struct Field {
    /// Characteristic (0 or a prime).
    #[arg(long)]
    p: u32,
    /// Quantum characteristic; defaults to `p`.
    #[arg(long)]
    l: Option<u32>,
}

impl Field {
    fn params(self) -> Result<FieldParams> {
        Ok(FieldParams::new(self.p, self.l.unwrap_or(self.p))?)
    }
}

#[derive(Args, Clone, Copy)]
struct Out {
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Target {
    /// Induced module `∇(mu)`.
    Nabla,
    /// Simple module `L(mu)`.
    Simple,
}

impl From<Target> for ExtKind {
    fn from(t: Target) -> Self {
        match t {
            Target::Nabla => ExtKind::NablaNabla,
            Target::Simple => ExtKind::NablaSimple,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SideArg {
    Schur,
    Hecke,
}

/// Inclusive degree range `A..B`, or a single degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Range {
    lo: u32,
    hi: u32,
}

fn parse_range(s: &str) -> Result<Range, String> {
    let num = |t: &str| t.trim().parse::<u32>().map_err(|e| format!("bad bound {t:?}: {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(format!("empty range {s}"));
    }
    Ok(Range { lo, hi })
}

#[derive(Subcommand)]
enum Cmd {
    /// Ext^m(∇(λ), ∇(μ)) or Ext^m(∇(λ), L(μ)) for rank-2 weights.
    Ext {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        mu: Weight,
        #[command(flatten)]
        field: Field,
        /// Degrees; defaults to 0..d(λ)-d(μ).
        #[arg(long, value_parser = parse_range)]
        m: Option<Range>,
        #[arg(long, value_enum, default_value = "nabla")]
        target: Target,
        /// Embed the rule trace.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        out: Out,
    },
    /// Ext between Specht modules, or Schur-side values over a cut.
    Transfer {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[command(flatten)]
        field: Field,
        #[arg(long, value_parser = parse_range)]
        m: Option<Range>,
        #[arg(long, value_enum, default_value = "hecke")]
        side: SideArg,
        #[arg(long, value_enum, default_value = "nabla")]
        target: Target,
        #[command(flatten)]
        out: Out,
    },
    /// Hom(∇(λ), ∇(μ)) or Hom(∇(λ), L(μ)) for rank-2 weights.
    Hom {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        mu: Weight,
        #[command(flatten)]
        field: Field,
        #[arg(long, value_enum, default_value = "nabla")]
        target: Target,
        #[command(flatten)]
        out: Out,
    },
    /// Local reflection carrying μ to λ, certifying a nonzero Hom(∇(λ), ∇(μ)).
    CertifyCp {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[command(flatten)]
        field: Field,
        #[command(flatten)]
        out: Out,
    },
    /// Tableau certificate for a nonzero Hom(S^λ, S^μ).
    CertifyFm {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        p: u32,
        #[arg(long, default_value_t = FmBounds::default().window)]
        window: u32,
        #[arg(long, default_value_t = FmBounds::default().emax)]
        emax: u32,
        #[command(flatten)]
        out: Out,
    },
    /// The Mullineux image of a row-regular partition.
    Mullineux {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        l: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Alcove depth d(λ).
    Dvalue {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        l: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Necessary linkage test.
    Blocks {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        mu: Weight,
        #[arg(long)]
        l: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Horizontal and vertical cuts of a pair.
    Cut {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[command(flatten)]
        out: Out,
    },
    /// Global dimension of S(n, r).
    Gldim {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        l: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Weights ν with μ reachable through a Steinberg tensor decomposition.
    Koppinen {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        mu: Weight,
        #[arg(long)]
        p: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Ext dimensions for d commuting reflections of an interior weight.
    Wen {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        l: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        i: u32,
        #[command(flatten)]
        out: Out,
    },
    /// Alternating sum of Ext dimensions over 0..d(λ)-d(μ).
    EulerCheck {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        mu: Weight,
        #[command(flatten)]
        field: Field,
        #[command(flatten)]
        out: Out,
    },
    /// Hom computed by linear algebra on explicit modules.
    OracleHom {
        #[arg(long)]
        lambda: Weight,
        #[arg(long)]
        mu: Weight,
        #[command(flatten)]
        field: Field,
        #[arg(long, value_enum, default_value = "nabla")]
        target: Target,
        /// Dump the divided-power action matrices.
        #[arg(long)]
        trace: bool,
        #[command(flatten)]
        out: Out,
    },
    /// All Ext dimensions between 2-part partitions of each degree in a range.
    Table {
        #[arg(long, value_parser = parse_range)]
        r: Range,
        #[command(flatten)]
        field: Field,
        /// Degrees for every pair; defaults to 0..d(λ)-d(μ) per pair.
        #[arg(long, value_parser = parse_range)]
        m: Option<Range>,
        /// Largest number of rows emitted.
        #[arg(long, default_value_t = 200_000)]
        cap: usize,
        #[command(flatten)]
        out: Out,
    },
}

fn top_degree(lambda: &Weight, mu: &Weight, l: u32) -> u32 {
    d_value(lambda, l).saturating_sub(d_value(mu, l)) as u32
}

fn kind_name(kind: ExtKind) -> &'static str {
    match kind {
        ExtKind::NablaNabla => "nabla-nabla",
        ExtKind::NablaSimple => "nabla-simple",
    }
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Exact => "Exact",
        Status::ZeroByBlock => "ZeroByBlock",
        Status::ZeroByBound => "ZeroByBound",
        Status::Unsupported => "Unsupported",
    }
}

/// One engine value, consulting the disk cache when no trace is wanted.
fn ext_value(
    cache: &mut Option<DiskCache>,
    kind: ExtKind,
    lambda: &Weight,
    mu: &Weight,
    m: u32,
    params: FieldParams,
    trace: bool,
) -> Result<(u64, String, Option<ExtValue>)> {
    let key = format!(
        "{}|p={}|l={}|{}|{}|m={m}",
        kind_name(kind),
        params.p,
        params.l,
        entries(lambda.entries()),
        entries(mu.entries())
    );
    if !trace {
        if let Some(dim) = cache.as_ref().and_then(|c| c.get(&key)) {
            return Ok((dim, "Cached".into(), None));
        }
    }
    let engine = Engine::global();
    let v = match kind {
        ExtKind::NablaNabla => engine.ext_nabla_nabla(lambda, mu, m, params)?,
        ExtKind::NablaSimple => engine.ext_nabla_simple(lambda, mu, m, params)?,
    };
    if let (Some(c), Some(dim)) = (cache.as_mut(), v.known()) {
        c.put(key, dim);
    }
    Ok((v.dim, status_name(v.status).into(), Some(v)))
}

fn ext_cmd(
    lambda: Weight,
    mu: Weight,
    params: FieldParams,
    range: Option<Range>,
    kind: ExtKind,
    trace: bool,
) -> Result<Report> {
    ensure!(lambda.rank() == 2 && mu.rank() == 2, "ext needs two-entry weights");
    let range = range.unwrap_or(Range { lo: 0, hi: top_degree(&lambda, &mu, params.l) });
    let mut cache = DiskCache::from_env()?;
    let mut values = Vec::new();
    let mut report = Report { header: vec!["m", "dim"], convention: true, ..Default::default() };
    let target = if kind == ExtKind::NablaNabla { "∇" } else { "L" };
    for m in range.lo..=range.hi {
        let (dim, status, v) = ext_value(&mut cache, kind, &lambda, &mu, m, params, trace)?;
        let undecided = status == "Unsupported";
        report.undecided |= undecided;
        let shown = if undecided { "?".to_string() } else { dim.to_string() };
        report.rows.push(vec![m.to_string(), shown.clone()]);
        report.text.push(format!("Ext^{m}(∇{lambda}, {target}{mu}) = {shown}  [{status}]"));
        let mut entry = json!({ "m": m, "dim": if undecided { Value::Null } else { dim.into() }, "status": status });
        if let (true, Some(v)) = (trace, &v) {
            entry["trace"] = serde_json::to_value(&v.trace)?;
            for step in &v.trace {
                let params: Vec<String> = step.params.iter().map(|(k, x)| format!("{k}={x}")).collect();
                report.text.push(format!("    {} {}", step.rule, params.join(" ")));
            }
        }
        values.push(entry);
    }
    if let Some(c) = &cache {
        c.save()?;
    }
    report.json = json!({
        "kind": kind_name(kind),
        "lambda": lambda,
        "mu": mu,
        "p": params.p,
        "l": params.l,
        "values": values,
    });
    Ok(report)
}

fn transfer_one(
    lambda: &Partition,
    mu: &Partition,
    i: u32,
    params: FieldParams,
    side: SideArg,
    kind: ExtKind,
) -> Result<TransferResult> {
    let engine = Engine::global();
    match (side, kind) {
        (SideArg::Hecke, ExtKind::NablaNabla) => Ok(specht_ext(engine, lambda, mu, i, params)?),
        (SideArg::Hecke, ExtKind::NablaSimple) => Ok(kunneth_ext(engine, lambda, mu, i, kind, Side::Hecke, params)?),
        (SideArg::Schur, _) if lambda.len() <= 2 && mu.len() <= 2 => {
            let (a, b) = (Weight::from_partition(lambda, 2)?, Weight::from_partition(mu, 2)?);
            let v = match kind {
                ExtKind::NablaNabla => engine.ext_nabla_nabla(&a, &b, i, params)?,
                ExtKind::NablaSimple => engine.ext_nabla_simple(&a, &b, i, params)?,
            };
            let mut r = TransferResult { value: v.known(), window_ok: true, ..Default::default() };
            r.rules.push("rank-2-engine".into());
            if r.value.is_none() {
                r.caveats.push("the engine could not decide this value".into());
            }
            Ok(r)
        }
        (SideArg::Schur, _) => Ok(kunneth_ext(engine, lambda, mu, i, kind, Side::Schur, params)?),
    }
}

fn transfer_cmd(
    lambda: Partition,
    mu: Partition,
    params: FieldParams,
    range: Option<Range>,
    side: SideArg,
    kind: ExtKind,
) -> Result<Report> {
    let range = match range {
        Some(r) => r,
        None => {
            let n = lambda.len().max(mu.len()).max(1);
            let (a, b) = (Weight::from_partition(&lambda, n)?, Weight::from_partition(&mu, n)?);
            Range { lo: 0, hi: top_degree(&a, &b, params.l) }
        }
    };
    let mut report = Report { header: vec!["m", "value", "window_ok"], convention: true, ..Default::default() };
    let mut results = Vec::new();
    for i in range.lo..=range.hi {
        let r = transfer_one(&lambda, &mu, i, params, side, kind)?;
        report.undecided |= r.value.is_none();
        let shown = r.value.map_or("?".to_string(), |v| v.to_string());
        report.rows.push(vec![i.to_string(), shown.clone(), r.window_ok.to_string()]);
        report.text.push(format!("Ext^{i}({lambda}, {mu}) = {shown}  [rules: {}]", r.rules.join(", ")));
        for c in &r.caveats {
            report.text.push(format!("    caveat: {c}"));
        }
        let mut entry = serde_json::to_value(&r)?;
        entry["m"] = i.into();
        results.push(entry);
    }
    let side = if side == SideArg::Schur { "schur" } else { "hecke" };
    report.json = json!({ "lambda": lambda, "mu": mu, "side": side, "p": params.p, "l": params.l, "results": results });
    Ok(report)
}

fn table_cmd(r: Range, params: FieldParams, m: Option<Range>, cap: usize) -> Result<Report> {
    let mut jobs = Vec::new();
    for deg in r.lo..=r.hi {
        let deg = i64::from(deg);
        let mut ws: Vec<Weight> = (0..=deg / 2).map(|b| Weight::new(vec![deg - b, b]).expect("dominant")).collect();
        ws.sort_by(|a, b| a.entries().cmp(b.entries()));
        for lam in &ws {
            for mu in &ws {
                let range = m.unwrap_or(Range { lo: 0, hi: top_degree(lam, mu, params.l) });
                for deg in range.lo..=range.hi {
                    jobs.push((lam.clone(), mu.clone(), deg));
                }
            }
        }
    }
    if jobs.len() > cap {
        bail!("table would have {} rows, above the cap of {cap}", jobs.len());
    }
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(8);
    let chunk = jobs.len().div_ceil(workers).max(1);
    let engine = Engine::global();
    let results: Vec<Result<ExtValue, Error>> = std::thread::scope(|s| {
        let handles: Vec<_> = jobs
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter().map(|(a, b, m)| engine.ext_nabla_nabla(a, b, *m, params)).collect::<Vec<_>>()
                })
            })
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut report =
        Report { header: vec!["lambda", "mu", "m", "dim", "status"], convention: true, ..Default::default() };
    let mut rows = Vec::new();
    for ((lam, mu, m), v) in jobs.iter().zip(results) {
        let v = v?;
        report.undecided |= v.is_unsupported();
        let status = status_name(v.status);
        report.rows.push(vec![
            entries(lam.entries()),
            entries(mu.entries()),
            m.to_string(),
            v.dim.to_string(),
            status.into(),
        ]);
        report.text.push(format!("{lam} {mu} m={m} dim={} {status}", v.dim));
        rows.push(json!({ "lambda": lam, "mu": mu, "m": m, "dim": v.dim, "status": status }));
    }
    report.json = json!({ "p": params.p, "l": params.l, "rows": rows });
    Ok(report)
}

fn run(cmd: Cmd) -> Result<(Report, Format)> {
    Ok(match cmd {
        Cmd::Ext { lambda, mu, field, m, target, trace, out } => {
            (ext_cmd(lambda, mu, field.params()?, m, target.into(), trace)?, out.format)
        }
        Cmd::Transfer { lambda, mu, field, m, side, target, out } => {
            (transfer_cmd(lambda, mu, field.params()?, m, side, target.into())?, out.format)
        }
        Cmd::Hom { lambda, mu, field, target, out } => {
            let params = field.params()?;
            ensure!(lambda.rank() == 2 && mu.rank() == 2, "hom needs two-entry weights");
            let dim = match target {
                Target::Nabla => hom_base_gl2(&lambda, &mu, params)?,
                Target::Simple => {
                    let v = Engine::global().ext_nabla_simple(&lambda, &mu, 0, params)?;
                    v.known().ok_or_else(|| Error::Unsupported(format!("Hom(∇{lambda}, L{mu})")))?
                }
            };
            let mut r = Report::new(json!({ "lambda": lambda, "mu": mu, "p": params.p, "l": params.l, "dim": dim }));
            r.header = vec!["dim"];
            r.rows = vec![vec![dim.to_string()]];
            r.text = vec![dim.to_string()];
            r.convention = true;
            (r, out.format)
        }
        Cmd::CertifyCp { lambda, mu, field, out } => {
            let cert = carter_payne_certificate(&mu, &lambda, field.params()?);
            let mut r = Report::new(json!({ "lambda": lambda, "mu": mu, "certificate": cert }));
            r.header = vec!["i", "j", "a", "m", "d", "modulus"];
            match &cert {
                Some(c) => {
                    let row = [c.i as i64, c.j as i64, i64::from(c.a), c.m, i64::from(c.d), c.modulus as i64];
                    r.rows.push(row.iter().map(ToString::to_string).collect());
                    r.text.push(format!(
                        "move {} boxes from row {} of {mu} to row {} (modulus {} = p^{} scale, m = {})",
                        c.d, c.i, c.j, c.modulus, c.a, c.m
                    ));
                }
                None => r.text.push("absent".into()),
            }
            (r, out.format)
        }
        Cmd::CertifyFm { lambda, mu, p, window, emax, out } => {
            let cert = fayers_martin_certificate(&lambda, &mu, p, FmBounds { window, emax })?;
            let mut r = Report::new(json!({ "lambda": lambda, "mu": mu, "p": p, "certificate": cert }));
            r.header = vec!["e", "gamma"];
            match &cert {
                Some(c) => {
                    r.rows.push(vec![c.e.to_string(), entries(&c.gamma)]);
                    r.text.push(format!("e = {}, gamma = ({})", c.e, entries(&c.gamma)));
                    for row in c.witness.rows() {
                        r.text.push(format!("    {}", entries(&row)));
                    }
                }
                None => r.text.push("absent".into()),
            }
            (r, out.format)
        }
        Cmd::Mullineux { lambda, l, out } => {
            let image = mullineux(&lambda, l)?;
            let mut r = Report::new(json!({ "lambda": lambda, "l": l, "image": image }));
            r.header = vec!["image"];
            r.rows = vec![vec![entries(image.parts())]];
            r.text = vec![image.to_string()];
            (r, out.format)
        }
        Cmd::Dvalue { lambda, l, out } => {
            let (d, interior) = (d_value(&lambda, l), is_interior(&lambda, l));
            let mut r = Report::new(json!({ "lambda": lambda, "l": l, "d": d, "interior": interior }));
            r.header = vec!["d", "interior"];
            r.rows = vec![vec![d.to_string(), interior.to_string()]];
            r.text = vec![format!("d = {d}{}", if interior { "" } else { " (on a wall)" })];
            (r, out.format)
        }
        Cmd::Blocks { lambda, mu, l, out } => {
            let same = same_block_candidate(&lambda, &mu, l)?;
            let mut r = Report::new(json!({ "lambda": lambda, "mu": mu, "l": l, "same_block_candidate": same }));
            r.header = vec!["same_block_candidate"];
            r.rows = vec![vec![same.to_string()]];
            r.text = vec![if same { "same block candidate" } else { "different blocks" }.to_string()];
            (r, out.format)
        }
        Cmd::Cut { lambda, mu, out } => {
            let h = find_horizontal_cut(&lambda, &mu)?;
            let v = find_vertical_cut(&lambda, &mu)?;
            let mut r = Report::new(json!({ "lambda": lambda, "mu": mu, "horizontal": h, "vertical": v }));
            r.header = vec!["orientation", "block", "lambda", "mu"];
            for (name, cut) in [("horizontal", &h), ("vertical", &v)] {
                match cut {
                    Some(c) => {
                        for (k, (a, b)) in c.blocks.iter().enumerate() {
                            r.rows.push(vec![name.into(), k.to_string(), entries(a.parts()), entries(b.parts())]);
                            r.text.push(format!("{name} block {k}: {a} / {b}"));
                        }
                    }
                    None => r.text.push(format!("{name}: none")),
                }
            }
            (r, out.format)
        }
        Cmd::Gldim { n, r: deg, l, out } => {
            let g = global_dimension(n, deg, l);
            let mut r = Report::new(json!({ "n": n, "r": deg, "l": l, "global_dimension": g }));
            r.header = vec!["global_dimension"];
            r.rows = vec![vec![g.map_or("?".into(), |g| g.to_string())]];
            r.text = vec![g.map_or("unknown for these parameters".into(), |g| g.to_string())];
            r.undecided = g.is_none();
            (r, out.format)
        }
        Cmd::Koppinen { lambda, mu, p, out } => {
            let orbit = koppinen_orbit(&mu, &lambda, p)?;
            let mut r = Report::new(json!({ "lambda": lambda, "mu": mu, "p": p, "orbit": orbit }));
            r.header = vec!["nu"];
            for nu in &orbit {
                r.rows.push(vec![entries(nu.entries())]);
                r.text.push(nu.to_string());
            }
            (r, out.format)
        }
        Cmd::Wen { lambda, l, d, i, out } => {
            let (simple, nabla) = wen_dims(&lambda, l, d, i)?;
            let mut r = Report::new(
                json!({ "lambda": lambda, "l": l, "d": d, "i": i, "ext_simple": simple, "ext_nabla": nabla.to_string() }),
            );
            r.header = vec!["ext_simple", "ext_nabla"];
            r.rows = vec![vec![simple.to_string(), nabla.to_string()]];
            r.text = vec![format!("Ext^{i}(∇, L) = {simple}"), format!("Ext^{i}(∇, ∇) = {nabla}")];
            (r, out.format)
        }
        Cmd::EulerCheck { lambda, mu, field, out } => {
            let params = field.params()?;
            let engine = Engine::global();
            let top = top_degree(&lambda, &mu, params.l);
            let series = engine.ext_series(&lambda, &mu, top, params)?;
            let undecided = series.iter().any(ExtValue::is_unsupported);
            let ok = !undecided && engine.euler_check(&lambda, &mu, params)?;
            let dims: Vec<u64> = series.iter().map(|v| v.dim).collect();
            let mut r = Report::new(
                json!({ "lambda": lambda, "mu": mu, "p": params.p, "l": params.l, "dims": dims, "holds": ok }),
            );
            r.header = vec!["holds"];
            r.rows = vec![vec![ok.to_string()]];
            r.text = vec![format!("dims {dims:?}: {}", if ok { "alternating sum matches" } else { "mismatch" })];
            r.undecided = undecided;
            r.convention = true;
            (r, out.format)
        }
        Cmd::OracleHom { lambda, mu, field, target, trace, out } => {
            let params = field.params()?;
            ensure!(lambda.rank() == 2 && mu.rank() == 2, "oracle-hom needs two-entry weights");
            ensure!(lambda.degree() == mu.degree(), "weights must have equal degree");
            let diff = |w: &Weight| u32::try_from(w.entries()[0] - w.entries()[1]).context("difference too large");
            let (c, c2) = (diff(&lambda)?, diff(&mu)?);
            let dim = match target {
                Target::Nabla => oracle_hom_dim(c, c2, params)?,
                Target::Simple => oracle_hom_to_simple(c, c2, params)?,
            };
            let mut json = json!({ "lambda": lambda, "mu": mu, "p": params.p, "l": params.l, "dim": dim });
            if trace {
                json["modules"] = json!([build_module(c, params)?, build_module(c2, params)?]);
            }
            let mut r = Report::new(json);
            r.header = vec!["dim"];
            r.rows = vec![vec![dim.to_string()]];
            r.text = vec![dim.to_string()];
            r.convention = true;
            (r, out.format)
        }
        Cmd::Table { r, field, m, cap, out } => (table_cmd(r, field.params()?, m, cap)?, out.format),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok((report, format)) => {
            print!("{}", report.render(format));
            ExitCode::from(if report.undecided { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            match e.downcast_ref::<Error>() {
                Some(Error::Unsupported(_) | Error::Refused(_)) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
