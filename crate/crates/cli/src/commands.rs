use std::fmt::Write as _;
use std::io::{Read, Write};
use std::path::Path;
use std::time::Instant;

use lattice_wiring::analysis::{
    analysis_rows, format_decimal, format_ratio, render_report, rows_json, Rational, ReportFormat,
};
use lattice_wiring::oracle::{optimal_wiring, volume_cap, OracleConfig};
use lattice_wiring::svg::render_svg;
use lattice_wiring::wiring::json::{from_json, to_json_with, Extras};
use lattice_wiring::{enumerate_trees, validate_k_wiring, GridWiring, OrderedTree};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::failure::Failure;
use crate::{
    AnalyzeArgs, BenchArgs, BenchFamily, Family, GenArgs, Meta, OracleArgs, OracleFormat, Output,
    RenderArgs, TableFormat, TreeSource, VerifyArgs, WireArgs, WireFormat,
};

fn emit(out: &Output, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))
    }
}

fn load_tree(source: &TreeSource) -> Result<OrderedTree, Failure> {
    let text = match (&source.tree, &source.input) {
        (Some(t), _) => t.clone(),
        (None, Some(path)) => read_input(path)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    Ok(OrderedTree::parse(&text)?)
}

pub fn gen(a: &GenArgs, meta: &Meta) -> Result<(), Failure> {
    let usage = |m: String| Failure::Usage(m);
    let tree = match a.family {
        Family::Bn if a.n > 24 => {
            return Err(usage(format!("bn height {} is too large (max 24)", a.n)))
        }
        Family::Bn => OrderedTree::perfect_planted(a.n as u32),
        Family::Sn if !(2..=24).contains(&a.n) => {
            return Err(usage(format!("sn needs 2 <= n <= 24, got {}", a.n)))
        }
        Family::Sn => OrderedTree::spiral(a.n as u32)?,
        Family::Random | Family::Path if a.n == 0 => {
            return Err(usage("a tree needs at least one vertex".into()))
        }
        Family::Random => OrderedTree::random(a.n, meta.seed)?,
        Family::Path => OrderedTree::path(a.n)?,
    };
    emit(&a.out, &format!("{}\n", tree.to_text()))
}

fn svg_with_meta(tree: &OrderedTree, w: &GridWiring, meta: &Meta) -> String {
    let svg = render_svg(tree, w);
    let escaped = meta
        .json()
        .to_string()
        .replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;");
    match svg.split_once('\n') {
        Some((open, rest)) => format!("{open}\n<metadata>{escaped}</metadata>\n{rest}"),
        None => svg,
    }
}

fn wire_text(w: &GridWiring, meta: &Meta) -> String {
    let mut out = meta.header();
    let b = w.bounding_box().expect("non-empty wiring");
    writeln!(out, "vertices {}", w.vertices.len()).unwrap();
    writeln!(out, "volume {}", w.volume()).unwrap();
    writeln!(out, "bbox {} {} {} {}", b.min.x, b.min.y, b.max.x, b.max.y).unwrap();
    writeln!(out, "conn {}", w.conn()).unwrap();
    for (v, p) in &w.vertices {
        writeln!(out, "{v} {} {}", p.x, p.y).unwrap();
    }
    out
}

pub fn wire(a: &WireArgs, meta: &Meta) -> Result<(), Failure> {
    let tree = load_tree(&a.source)?;
    let w = lattice_wiring::wire(&tree);
    let text = match a.format {
        WireFormat::Json => {
            let extras = Extras {
                oracle: None,
                meta: Some(meta.json()),
            };
            format!("{}\n", to_json_with(&w, &extras))
        }
        WireFormat::Text => wire_text(&w, meta),
        WireFormat::Svg => svg_with_meta(&tree, &w, meta),
    };
    emit(&a.out, &text)
}

pub fn render(a: &RenderArgs, meta: &Meta) -> Result<(), Failure> {
    let tree = load_tree(&a.source)?;
    let w = lattice_wiring::wire(&tree);
    emit(&a.out, &svg_with_meta(&tree, &w, meta))
}

pub fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    let parsed = from_json(&read_input(&a.input)?)?;
    let w = &parsed.wiring;
    let report = validate_k_wiring(w, a.k as usize);
    let volume = w.volume();
    let bbox = w.bounding_box().expect("parsed embeddings have vertices");

    let mut out = String::new();
    writeln!(out, "requested k: {}", report.requested_k).unwrap();
    writeln!(out, "k_vertex: {}", report.k_vertex).unwrap();
    writeln!(out, "k_edge: {}", report.k_edge).unwrap();
    writeln!(out, "violations: {}", report.violations.len()).unwrap();
    for v in &report.violations {
        writeln!(out, "  {v}").unwrap();
    }
    writeln!(
        out,
        "volume: reported {}, recounted {volume}",
        parsed.volume
    )
    .unwrap();
    writeln!(
        out,
        "bbox: reported [{}, {}], recounted [{}, {}]",
        parsed.bbox.min, parsed.bbox.max, bbox.min, bbox.max
    )
    .unwrap();
    let valid = report.is_valid();
    let consistent = parsed.volume == volume && parsed.bbox == bbox;
    writeln!(
        out,
        "result: {}",
        match (valid, consistent) {
            (true, true) => "valid",
            (false, _) => "invalid",
            (true, false) => "inconsistent summary fields",
        }
    )
    .unwrap();
    emit(&a.out, &out)?;
    if !valid {
        return Err(Failure::Validation(format!("not a {}-wiring", a.k)));
    }
    if !consistent {
        return Err(Failure::Consistency(
            "reported volume or bbox differs from the recount".into(),
        ));
    }
    Ok(())
}

pub fn analyze(a: &AnalyzeArgs, meta: &Meta) -> Result<(), Failure> {
    let rows = analysis_rows(a.n_max as usize)?;
    let text = match a.format {
        TableFormat::Text => meta.header() + &render_report(&rows, ReportFormat::Text),
        TableFormat::Csv => meta.header() + &render_report(&rows, ReportFormat::Csv),
        TableFormat::Json => {
            let doc = serde_json::json!({ "rows": rows_json(&rows), "meta": meta.json() });
            format!("{doc}\n")
        }
    };
    emit(&a.out, &text)
}

struct Sample {
    volume: u64,
    area: u64,
    ok: bool,
    tree: Option<String>,
}

fn bench_sample(family: BenchFamily, n: usize, seed: u64) -> Result<Sample, Failure> {
    let tree = match family {
        BenchFamily::Random => OrderedTree::random(n, seed)?,
        BenchFamily::Path => OrderedTree::path(n)?,
    };
    let w = lattice_wiring::wire(&tree);
    let volume = w.volume();
    let ok = volume <= volume_cap(n as u64) && validate_k_wiring(&w, 1).is_valid();
    Ok(Sample {
        volume,
        area: w.bounding_box().map_or(0, |b| b.area()),
        ok,
        tree: (!ok).then(|| tree.to_text()),
    })
}

pub fn bench(a: &BenchArgs, meta: &Meta) -> Result<(), Failure> {
    let mut rng = ChaCha8Rng::seed_from_u64(meta.seed);
    let mut out = meta.header();
    out.push_str("family,size,samples,max_ratio,max_ratio_decimal,mean_ratio,mean_ratio_decimal,max_bbox_area,violations");
    out.push_str(if a.timing { ",wall_ms\n" } else { "\n" });
    let family = match a.family {
        BenchFamily::Random => "random",
        BenchFamily::Path => "path",
    };
    let mut offenders = Vec::new();
    for &size in &a.sizes {
        let seeds: Vec<u64> = (0..a.samples).map(|_| rng.next_u64()).collect();
        let start = Instant::now();
        let samples: Vec<Sample> = seeds
            .par_iter()
            .map(|&s| bench_sample(a.family, size as usize, s))
            .collect::<Result<_, _>>()?;
        let wall = start.elapsed();
        let max = samples.iter().map(|s| s.volume).max().unwrap_or(0);
        let total: u64 = samples.iter().map(|s| s.volume).sum();
        let max_ratio = Rational::new(max.into(), size.into());
        let mean_ratio = Rational::new(total.into(), (size * a.samples).into());
        let area = samples.iter().map(|s| s.area).max().unwrap_or(0);
        let violations = samples.iter().filter(|s| !s.ok).count();
        offenders.extend(samples.into_iter().filter_map(|s| s.tree));
        write!(
            out,
            "{family},{size},{},{},{},{},{},{area},{violations}",
            a.samples,
            format_ratio(&max_ratio),
            format_decimal(&max_ratio, 6),
            format_ratio(&mean_ratio),
            format_decimal(&mean_ratio, 6),
        )
        .unwrap();
        if a.timing {
            write!(out, ",{}", wall.as_millis()).unwrap();
        }
        out.push('\n');
    }
    emit(&a.out, &out)?;
    if offenders.is_empty() {
        return Ok(());
    }
    for t in &offenders {
        eprintln!("offending tree: {t}");
    }
    Err(Failure::Validation(format!(
        "{} sample(s) exceed ceil(7n/3) or are not 1-wirings",
        offenders.len()
    )))
}

enum Optimum {
    Found(u64, u64),
    OverBudget,
}

pub fn oracle(a: &OracleArgs, meta: &Meta) -> Result<(), Failure> {
    let config = OracleConfig {
        budget: a.budget,
        ..OracleConfig::default()
    };
    let trees: Vec<OrderedTree> = (1..=a.max_n as usize).flat_map(enumerate_trees).collect();
    let results: Vec<Result<Optimum, Failure>> = trees
        .par_iter()
        .map(|t| match optimal_wiring(t, &config) {
            Ok(o) => Ok(Optimum::Found(o.best_volume, o.explored)),
            Err(lattice_wiring::Error::Budget { .. }) => Ok(Optimum::OverBudget),
            Err(e) => Err(e.into()),
        })
        .collect();

    let mut over_budget = 0;
    let mut broken = 0;
    let mut rows = Vec::new();
    for (t, r) in trees.iter().zip(results) {
        let n = t.len() as u64;
        let constructed = lattice_wiring::wire(t).volume();
        let cap = volume_cap(n);
        let (optimal, explored) = match r? {
            Optimum::Found(v, e) => (Some(v), Some(e)),
            Optimum::OverBudget => {
                over_budget += 1;
                (None, None)
            }
        };
        let ok = optimal.is_none_or(|o| n <= o && o <= constructed) && constructed <= cap;
        if !ok {
            broken += 1;
        }
        rows.push((n, t.to_text(), optimal, explored, constructed, cap, ok));
    }

    let text = match a.format {
        OracleFormat::Text => {
            let mut out = meta.header();
            let width = rows.iter().map(|r| r.1.len()).max().unwrap_or(4).max(4);
            writeln!(
                out,
                "n  {:<width$}  optimal  constructed  ceil(7n/3)  ok",
                "tree"
            )
            .unwrap();
            for (n, tree, optimal, _, constructed, cap, ok) in &rows {
                let optimal = optimal.map_or_else(|| "budget".to_string(), |o| o.to_string());
                writeln!(
                    out,
                    "{n:<2} {tree:<width$}  {optimal:>7}  {constructed:>11}  {cap:>10}  {}",
                    if *ok { "yes" } else { "NO" }
                )
                .unwrap();
            }
            writeln!(
                out,
                "trees: {}, over budget: {over_budget}, violations: {broken}",
                rows.len()
            )
            .unwrap();
            out
        }
        OracleFormat::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|(n, tree, optimal, explored, constructed, cap, ok)| {
                    serde_json::json!({
                        "n": n, "tree": tree, "optimal": optimal, "explored": explored,
                        "constructed": constructed, "cap": cap, "ok": ok,
                    })
                })
                .collect();
            let doc = serde_json::json!({ "rows": list, "budget": a.budget, "meta": meta.json() });
            format!("{doc}\n")
        }
    };
    emit(&a.out, &text)?;
    if broken > 0 {
        return Err(Failure::Validation(format!(
            "{broken} tree(s) break the sandwich"
        )));
    }
    if over_budget > 0 {
        return Err(Failure::Budget(format!(
            "{over_budget} tree(s) exceeded the search budget of {}",
            a.budget
        )));
    }
    Ok(())
}
