use std::io::Write;
use std::path::Path;
use std::time::Instant;

use dblhom_core::bigraded::{compute, EngineOptions};
use dblhom_core::complex::{bicapped_antiprism, cycle, icosahedron, is_sphere_proxy, octahedron, simplex_boundary};
use dblhom_core::verify::{self, Check, FacetRemoval, VerificationReport};
use dblhom_core::{dispatch_field, Field, FieldSpec, SimplicialComplex};
use serde::Serialize;

use crate::args::{CheckArg, Cli, Command, Family, Format, GenKind, HhArgs, SearchArgs, VerifyArgs};
use crate::cache::Cache;
use crate::document::{ComplexInfo, ResultDocument, Timings};
use crate::format::{format_complex, parse_face};
use crate::{read_complex, CliError, Context};

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    let ctx = Context::new(cli.jobs.map(usize::from), cli.max_m)?;
    match cli.command {
        Command::Gen { kind } => gen(kind, out),
        Command::Hh(args) => hh(&ctx, args, out),
        Command::Verify(args) => verify_cmd(&ctx, args, out),
        Command::Search(args) => search(&ctx, args, out),
    }
}

fn face_list(text: &str) -> Result<Vec<usize>, CliError> {
    let mut labels = Vec::new();
    for tok in text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()) {
        match tok.parse::<usize>() {
            Ok(v) if v >= 1 => labels.push(v - 1),
            _ => return Err(CliError::Usage(format!("`{tok}` is not a vertex label"))),
        }
    }
    Ok(labels)
}

fn gen(kind: GenKind, out: &mut dyn Write) -> Result<(), CliError> {
    let face = |s: &str| parse_face(s).map_err(|e| CliError::Usage(e.to_string()));
    let k = match kind {
        GenKind::Cycle { m } => cycle(m)?,
        GenKind::SimplexBoundary { n } => simplex_boundary(n)?,
        GenKind::Octahedron => octahedron(),
        GenKind::Icosahedron => icosahedron(),
        GenKind::BicappedAntiprism { n, h } => bicapped_antiprism(n, h)?,
        GenKind::Join { a, b } => read_complex(Some(&a))?.join(&read_complex(Some(&b))?)?,
        GenKind::ConnectedSum { a, b, facet1, facet2 } => {
            let (k1, k2) = (read_complex(Some(&a))?, read_complex(Some(&b))?);
            let pick = |k: &SimplicialComplex, f: Option<String>| match f {
                Some(s) => face_list(&s),
                None => Ok(k.facets().first().map(|f| f.iter().collect()).unwrap_or_default()),
            };
            k1.connected_sum_paired(&k2, &pick(&k1, facet1)?, &pick(&k2, facet2)?)?
        }
        GenKind::RemoveFacet { input, facet } => read_complex(Some(&input))?.remove_facet(face(&facet)?)?,
        GenKind::AddFace { input, face: f } => read_complex(Some(&input))?.add_face(face(&f)?)?,
    };
    out.write_all(format_complex(&k).as_bytes())?;
    Ok(())
}

/// Computes, or loads from `cache`, the result document for `k`.
pub(crate) fn document(
    ctx: &Context,
    k: &SimplicialComplex,
    field: FieldSpec,
    cache: Option<&Cache>,
    timings: bool,
) -> Result<ResultDocument, CliError> {
    if k.m() > ctx.opts.max_m {
        return Err(dblhom_core::Error::CapExceeded { m: k.m(), cap: ctx.opts.max_m }.into());
    }
    let clock = Instant::now();
    if let Some(summary) = cache.and_then(|c| c.get(k, field)) {
        let mut doc = ResultDocument::new(k, &summary);
        if timings {
            let t = dblhom_core::bigraded::PhaseTimings { homology: clock.elapsed(), ..Default::default() };
            doc.timings = Some(Timings::new(&t, true));
        }
        return Ok(doc);
    }
    let (summary, t) = ctx.install(|| dispatch_field!(field, |f| compute(k, &f, &ctx.opts)))?;
    if let Some(c) = cache {
        if let Err(e) = c.put(&summary) {
            log::warn!("could not write cache entry in {}: {e}", c.dir().display());
        }
    }
    let mut doc = ResultDocument::new(k, &summary);
    if timings {
        doc.timings = Some(Timings::new(&t, false));
    }
    Ok(doc)
}

fn hh(ctx: &Context, args: HhArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let k = read_complex(args.input.as_deref())?;
    let cache = args.cache.map(Cache::open).transpose()?;
    let doc = document(ctx, &k, args.coeff.coeff, cache.as_ref(), args.timings)?;
    let text = match args.coeff.format {
        Format::Json => doc.to_json(),
        Format::Table => doc.to_table(),
    };
    out.write_all(text.as_bytes())?;
    Ok(())
}

#[derive(Serialize)]
struct FacetRow {
    facet: Vec<usize>,
    rank_before: usize,
    rank_after: usize,
    delta: i64,
    has_non_neighbor: bool,
}

impl From<&FacetRemoval> for FacetRow {
    fn from(r: &FacetRemoval) -> Self {
        FacetRow {
            facet: r.facet.labels(),
            rank_before: r.rank_before,
            rank_after: r.rank_after,
            delta: r.delta(),
            has_non_neighbor: r.has_non_neighbor,
        }
    }
}

#[derive(Serialize)]
struct VerifyDocument {
    complex: ComplexInfo,
    field: FieldSpec,
    reports: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    facet_removal: Option<Vec<FacetRow>>,
    /// Induced cycles of length 1 mod 3, for 2-spheres only.
    #[serde(skip_serializing_if = "Option::is_none")]
    induced_cycles: Option<Vec<Vec<usize>>>,
}

fn verify_cmd(ctx: &Context, args: VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let k = read_complex(args.input.as_deref())?;
    if k.m() > ctx.opts.max_m {
        return Err(dblhom_core::Error::CapExceeded { m: k.m(), cap: ctx.opts.max_m }.into());
    }
    let field = args.coeff.coeff;
    let checks: Vec<Check> = match args.check {
        CheckArg::All => Check::ALL.to_vec(),
        CheckArg::One(c) => vec![c],
    };
    let opts = ctx.opts;
    let (reports, rows) = ctx.install(|| dispatch_field!(field, |f| run_checks(&k, &f, &opts, &checks)))?;
    let induced_cycles = (args.check == CheckArg::All && is_sphere_proxy(&k) == (true, 2))
        .then(|| verify::induced_cycle_scan(&k).map(|c| c.into_iter().map(|s| s.labels()).collect()))
        .transpose()?;
    let failed = reports.iter().filter(|r| r.failed()).count();
    let doc = VerifyDocument {
        complex: ComplexInfo { m: k.m(), dim: k.dim(), facet_count: k.facets().len(), hash: k.hash() },
        field,
        reports,
        facet_removal: rows,
        induced_cycles,
    };
    match args.coeff.format {
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &doc).map_err(std::io::Error::other)?;
            writeln!(out)?;
        }
        Format::Table => write_verify_table(&doc, out)?,
    }
    if failed > 0 {
        return Err(CliError::VerificationFailed(failed));
    }
    Ok(())
}

fn run_checks<F: Field>(
    k: &SimplicialComplex,
    f: &F,
    opts: &EngineOptions,
    checks: &[Check],
) -> Result<(Vec<VerificationReport>, Option<Vec<FacetRow>>), CliError> {
    let hh = compute(k, f, opts)?.0.hh();
    let mut reports = Vec::new();
    let mut rows = None;
    for &c in checks {
        if c == Check::FacetRemoval {
            let scan = verify::facet_removal_scan_with(k, f, opts)?;
            rows = Some(scan.rows.iter().map(FacetRow::from).collect());
            reports.push(scan.report);
        } else {
            reports.push(verify::run_check(c, k, f, &hh)?);
        }
    }
    Ok((reports, rows))
}

fn write_verify_table(doc: &VerifyDocument, out: &mut dyn Write) -> std::io::Result<()> {
    let c = &doc.complex;
    writeln!(out, "complex: m = {}, dim = {}, {} facets, hash {}", c.m, c.dim, c.facet_count, c.hash)?;
    for r in &doc.reports {
        writeln!(out, "{r}")?;
        if r.check == Check::FacetRemoval {
            for row in doc.facet_removal.iter().flatten() {
                let labels: Vec<String> = row.facet.iter().map(|v| v.to_string()).collect();
                writeln!(out, "    facet {}: {} -> {} ({:+})", labels.join(" "), row.rank_before, row.rank_after, row.delta)?;
            }
        }
    }
    if let Some(cycles) = &doc.induced_cycles {
        writeln!(out, "induced cycles of length 1 mod 3: {}", cycles.len())?;
        for cyc in cycles {
            let labels: Vec<String> = cyc.iter().map(|v| v.to_string()).collect();
            writeln!(out, "    {}", labels.join(" "))?;
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct SearchLine {
    instance: String,
    m: usize,
    hash: String,
    rank: usize,
    exotic: bool,
}

fn search(ctx: &Context, args: SearchArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let field = args.coeff.coeff;
    if let Some(dir) = &args.emit_exotic {
        std::fs::create_dir_all(dir)?;
    }
    let instances: Vec<(String, Result<SimplicialComplex, CliError>)> = match args.family {
        Family::BicappedAntiprism { n, h } => n
            .iter()
            .flat_map(|n| h.iter().map(move |h| (n, h)))
            .map(|(n, h)| (format!("bicapped-antiprism-n{n}-h{h}"), bicapped_antiprism(n, h).map_err(CliError::from)))
            .collect(),
        Family::FacetDeletions { input } => {
            let k = read_complex(Some(&input))?;
            k.facets()
                .iter()
                .map(|&f| (format!("delete-{}", join_labels(&f.labels())), k.remove_facet(f).map_err(CliError::from)))
                .collect()
        }
        Family::ConnectedSums { a, b } => {
            let (k1, k2) = (read_complex(Some(&a))?, read_complex(Some(&b))?);
            let mut v = Vec::new();
            for &f1 in k1.facets() {
                for &f2 in k2.facets().iter().filter(|f2| f2.len() == f1.len()) {
                    let name = format!("sum-{}-{}", join_labels(&f1.labels()), join_labels(&f2.labels()));
                    v.push((name, k1.connected_sum(&k2, f1, f2).map_err(CliError::from)));
                }
            }
            v
        }
    };
    for (name, k) in instances {
        let result = k.and_then(|k| {
            let doc = document(ctx, &k, field, None, false)?;
            Ok((k, doc))
        });
        let (k, doc) = match result {
            Ok(x) => x,
            Err(e) => {
                log::error!("{name}: {e}");
                continue;
            }
        };
        let rank = doc.hh_total_rank;
        let line = SearchLine { instance: name, m: k.m(), hash: doc.complex.hash, rank, exotic: !rank.is_power_of_two() };
        match args.coeff.format {
            Format::Json => writeln!(out, "{}", serde_json::to_string(&line).map_err(std::io::Error::other)?)?,
            Format::Table => writeln!(
                out,
                "{}  m={}  rank={}{}",
                line.instance,
                line.m,
                line.rank,
                if line.exotic { "  exotic" } else { "" }
            )?,
        }
        out.flush()?;
        if let (true, Some(dir)) = (line.exotic, &args.emit_exotic) {
            write_exotic(dir, &line.instance, &k)?;
        }
    }
    Ok(())
}

fn join_labels(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("_")
}

fn write_exotic(dir: &Path, name: &str, k: &SimplicialComplex) -> Result<(), CliError> {
    let path = dir.join(format!("{name}.txt"));
    std::fs::write(&path, format!("# rank not a power of 2\n{}", format_complex(k)))?;
    log::info!("wrote {}", path.display());
    Ok(())
}
