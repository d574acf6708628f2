use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use sharpmax::atlas::{self, Disjointness};
use sharpmax::constants::{self, ConstantReport};
use sharpmax::search::{self, StarFormula};
use sharpmax::zline::{self, BoundReport, LatticeFunction, ZScanConfig};
use sharpmax::{Family, Graph, SearchConfig, SearchResult};

use crate::args::*;
use crate::output::{self, opt, Report, Table};
use crate::CliError;

pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let out = cli.output.as_deref();
    let report = match &cli.command {
        Command::Norm(a) => norm(a)?,
        Command::Var(a) => var(a)?,
        Command::StarFormula(a) => star_formula(a)?,
        Command::CompleteStructured(a) => complete_structured(a)?,
        Command::Constants(a) => constant_table("constants", constants_rows(a)?),
        Command::Asymptotics(a) => constant_table("asymptotics", asymptotic_rows(a)?),
        Command::Atlas(a) => return atlas(a, cli.format, out, stdout),
        Command::ZlineCheck(a) => zline_check(a)?,
        Command::ConjectureScan(a) => conjecture_scan(a, stderr)?,
        Command::Sweep(a) => sweep(a)?,
    };
    output::write(out, stdout, &report.render(cli.format))
}

struct LoadedGraph {
    label: String,
    family: Option<Family>,
    graph: Graph,
}

fn load_graph(src: &GraphSource) -> Result<LoadedGraph, CliError> {
    if let Some(name) = &src.graph {
        let family: Family = name.parse()?;
        return Ok(LoadedGraph {
            label: family.to_string(),
            family: Some(family),
            graph: Graph::build_named(family)?,
        });
    }
    let path = src
        .graph_file
        .as_deref()
        .ok_or_else(|| CliError::Usage("give --graph or --graph-file".into()))?;
    let text = output::read(path)?;
    let graph = if text.trim_start().starts_with('{') {
        serde_json::from_str(&text).map_err(|e| CliError::Core(sharpmax::Error::Parse(e.to_string())))?
    } else {
        Graph::parse_edge_list(&text)?
    };
    Ok(LoadedGraph {
        label: path.display().to_string(),
        family: None,
        graph,
    })
}

fn config(flags: &SearchFlags) -> Result<SearchConfig, CliError> {
    let cfg = SearchConfig {
        grid_step: flags.step,
        restarts: flags.restarts,
        max_iters: flags.max_iters,
        tolerance: flags.tolerance,
        seed: flags.seed,
    };
    cfg.validate()?;
    Ok(cfg)
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

fn single_row(graph: &str, p: f64, method: &str, value: f64) -> Table {
    let mut t = Table::new(vec!["graph", "p", "method", "value"]);
    t.push(vec![graph.into(), p.to_string(), method.into(), value.to_string()]);
    t
}

fn search_report(command: &str, g: &LoadedGraph, p: f64, method: &str, r: &SearchResult) -> Report {
    Report {
        json: json!({
            "command": command,
            "graph": g.label,
            "p": p,
            "method": method,
            "value": r.best_value,
            "result": to_json(r),
        }),
        table: single_row(&g.label, p, method, r.best_value),
    }
}

fn star_size(g: &LoadedGraph, what: &str) -> Result<usize, CliError> {
    match g.family {
        Some(Family::Star(n)) => Ok(n),
        _ => Err(CliError::Usage(format!("{what} needs --graph star:N"))),
    }
}

fn norm(a: &NormArgs) -> Result<Report, CliError> {
    let g = load_graph(&a.source)?;
    let cfg = config(&a.search)?;
    let result = match a.method {
        NormMethod::Formula => {
            let n = star_size(&g, "the formula method")?;
            let f = search::star_norm_formula(n, a.p)?;
            return Ok(formula_report("norm", &g.label, n, a.p, &f));
        }
        NormMethod::Oracle => search::grid_oracle_norm(&g.graph, a.p, cfg.grid_step)?,
        NormMethod::Ascent => search::ascent_norm(&g.graph, a.p, &cfg)?,
        NormMethod::Structured => match g.family {
            Some(Family::Star(n)) => search::star_norm_structured(n, a.p)?,
            Some(Family::Complete(n)) => search::complete_norm_structured(n, a.p)?,
            _ => return Err(CliError::Usage("structured search needs star:N or complete:N".into())),
        },
    };
    Ok(search_report("norm", &g, a.p, method_name(a.method), &result))
}

fn method_name(m: NormMethod) -> &'static str {
    match m {
        NormMethod::Formula => "formula",
        NormMethod::Oracle => "oracle",
        NormMethod::Ascent => "ascent",
        NormMethod::Structured => "structured",
    }
}

fn formula_report(command: &str, label: &str, n: usize, p: f64, f: &StarFormula) -> Report {
    Report {
        json: json!({
            "command": command,
            "graph": label,
            "n": n,
            "p": p,
            "method": "formula",
            "value": f.value,
            "result": to_json(f),
        }),
        table: single_row(label, p, "formula", f.value),
    }
}

fn var(a: &VarArgs) -> Result<Report, CliError> {
    let g = load_graph(&a.source)?;
    let cfg = config(&a.search)?;
    let (name, result) = match a.method {
        VarMethod::Formula => {
            let value = var_formula(&g, a.p)?;
            return Ok(Report {
                json: json!({
                    "command": "var",
                    "graph": g.label,
                    "p": a.p,
                    "method": "formula",
                    "value": value,
                }),
                table: single_row(&g.label, a.p, "formula", value),
            });
        }
        VarMethod::Oracle => ("oracle", search::grid_oracle_variation(&g.graph, a.p, cfg.grid_step)?),
        VarMethod::Ascent => ("ascent", search::ascent_variation(&g.graph, a.p, &cfg)?),
    };
    Ok(search_report("var", &g, a.p, name, &result))
}

/// The closed forms for `C_{G,p}` that are known exactly.
fn var_formula(g: &LoadedGraph, p: f64) -> Result<f64, CliError> {
    match g.family {
        Some(Family::Star(n)) if p == 2.0 => Ok(constants::star_var2_constant(n)?),
        Some(Family::Star(n)) if (0.5..=1.0).contains(&p) => Ok(constants::kn_var_constant(n)?),
        Some(Family::Complete(n)) if p >= constants::kn_variation_threshold() => {
            Ok(constants::kn_var_constant(n)?)
        }
        _ => Err(CliError::Usage(format!(
            "no closed form for {} at p = {p}; known: star:N at p = 2 or p in [1/2, 1], \
             complete:N at p >= log 4 / log 6",
            g.label
        ))),
    }
}

fn star_formula(a: &SizeP) -> Result<Report, CliError> {
    let f = search::star_norm_formula(a.n, a.p)?;
    Ok(formula_report("star-formula", &Family::Star(a.n).to_string(), a.n, a.p, &f))
}

fn complete_structured(a: &SizeP) -> Result<Report, CliError> {
    let r = search::complete_norm_structured(a.n, a.p)?;
    let g = LoadedGraph {
        label: Family::Complete(a.n).to_string(),
        family: Some(Family::Complete(a.n)),
        graph: Graph::build_named(Family::Complete(a.n))?,
    };
    Ok(search_report("complete-structured", &g, a.p, "structured", &r))
}

fn row(name: &str, n: usize, p: Option<f64>, value: f64, params: Option<Value>, exact: bool) -> ConstantReport {
    ConstantReport {
        name: name.into(),
        n,
        p,
        value,
        attaining_params: params,
        exact,
    }
}

fn constants_rows(a: &SizeOptP) -> Result<Vec<ConstantReport>, CliError> {
    let n = a.n;
    let mut rows = vec![
        row("kn_var_constant", n, None, constants::kn_var_constant(n)?, None, true),
        row("kn_variation_threshold", n, None, constants::kn_variation_threshold(), None, true),
    ];
    if n >= 3 {
        rows.push(row(
            "star_var2_constant",
            n,
            Some(2.0),
            constants::star_var2_constant(n)?,
            Some(json!({"center": 1.0, "big_leaf": 1.0 + 0.5 * (n - 1) as f64, "other_leaves": 0.5})),
            true,
        ));
    }
    if let Some(p) = a.p {
        if p >= 1.0 {
            let (lo, hi) = constants::soria_tradacete_star_bounds(n, p)?;
            rows.push(row("star_norm_pow_lower", n, Some(p), lo, None, true));
            rows.push(row("star_norm_pow_upper", n, Some(p), hi, None, true));
        }
        if n >= 3 {
            let f = search::star_norm_formula(n, p)?;
            rows.push(row(
                "star_norm_formula",
                n,
                Some(p),
                f.value,
                Some(json!({"x_star": f.x_star})),
                !f.heuristic,
            ));
        }
    }
    Ok(rows)
}

fn asymptotic_rows(a: &SizeOptP) -> Result<Vec<ConstantReport>, CliError> {
    let n = a.n;
    let star = constants::star_limit(n)?;
    let kn = constants::kn_limit(n)?;
    let mut rows = vec![
        row("star_limit", n, None, star.value, star.attaining.map(|pt| to_json(&pt)), star.exact),
        row(
            "kn_limit",
            n,
            None,
            kn.value,
            Some(json!({"alpha_star": kn.alpha_star, "k_star": kn.k_star})),
            false,
        ),
    ];
    if let Some(p) = a.p {
        let s = constants::star_norm_star(n, p)?;
        rows.push(row(
            "star_norm_star_pow",
            n,
            Some(p),
            s.value.powf(p),
            Some(json!({"y_star": s.y_star})),
            false,
        ));
        rows.push(row("star_lower_bound", n, Some(p), constants::star_lower_bound(n, p)?, None, true));
        rows.push(row(
            "kn_lower_bound",
            n,
            Some(p),
            constants::kn_lower_bound(n, p, kn.alpha_star, kn.k_star)?,
            Some(json!({"alpha": kn.alpha_star, "k": kn.k_star})),
            true,
        ));
    }
    Ok(rows)
}

fn constant_table(command: &str, rows: Vec<ConstantReport>) -> Report {
    let mut table = Table::new(vec!["name", "n", "p", "value", "exact"]);
    for r in &rows {
        table.push(vec![
            r.name.clone(),
            r.n.to_string(),
            opt(r.p),
            r.value.to_string(),
            r.exact.to_string(),
        ]);
    }
    Report {
        json: json!({ "command": command, "rows": to_json(&rows) }),
        table,
    }
}

fn atlas(a: &AtlasArgs, format: Format, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let mode = if a.edge_disjoint {
        Disjointness::Edge
    } else {
        Disjointness::Vertex
    };
    let (records, summary) = match a.scan_p {
        Some(p) => {
            let cfg = config(&a.search)?;
            let scan = atlas::scan_variation_constants(a.n, p, &cfg)?;
            let summary = format!("{}\n{}\n", atlas::VariationScan::CSV_HEADER, scan.summary_csv_row());
            (scan.records, Some(summary))
        }
        None => (atlas::catalog(a.n)?, None),
    };
    let records: Vec<_> = records
        .into_iter()
        .map(|mut r| {
            if mode == Disjointness::Edge {
                r.prop43_k = atlas::check_prop43_with(&r.graph, mode).map(|w| w.k);
            }
            r
        })
        .collect();
    let text = match format {
        Format::Json => output::json_lines(&records),
        Format::Csv => {
            let mut t = Table::new(vec!["code", "edges", "prop43_k", "delta_floor", "variation_estimate"]);
            for r in &records {
                t.push(vec![
                    r.canonical_code.to_string(),
                    r.graph.edges().len().to_string(),
                    r.prop43_k.map(|k| k.to_string()).unwrap_or_default(),
                    opt(r.delta_floor),
                    opt(r.variation_estimate.as_ref().map(|e| e.best_value)),
                ]);
            }
            t.to_csv()
        }
    };
    output::write(out, stdout, &text)?;
    match (summary, &a.summary) {
        (Some(s), Some(path)) => output::write(Some(path), stdout, &s),
        (None, Some(_)) => Err(CliError::Usage("--summary needs --scan-p".into())),
        _ => Ok(()),
    }
}

fn parse_lattice(spec: &str) -> Result<LatticeFunction, CliError> {
    let bad = || CliError::Usage(format!("cannot read function {spec:?}"));
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["delta"] => Ok(LatticeFunction::delta(0)),
        ["delta", at] => Ok(LatticeFunction::delta(at.parse().map_err(|_| bad())?)),
        ["indicator", a, b] => Ok(LatticeFunction::indicator(
            a.parse().map_err(|_| bad())?,
            b.parse().map_err(|_| bad())?,
        )?),
        ["tent", h] => Ok(LatticeFunction::tent(h.parse().map_err(|_| bad())?)?),
        _ => {
            let text = output::read(Path::new(spec))?;
            serde_json::from_str(&text).map_err(|e| CliError::Core(sharpmax::Error::Parse(e.to_string())))
        }
    }
}

fn zline_check(a: &ZlineArgs) -> Result<Report, CliError> {
    if a.op == ZlineOp::Cp {
        let c = zline::cp_constant(a.p, a.tol)?;
        let mut table = Table::new(vec!["p", "value", "error", "terms_used"]);
        table.push(vec![a.p.to_string(), c.value.to_string(), c.error.to_string(), c.terms_used.to_string()]);
        return Ok(Report {
            json: json!({"command": "zline-check", "op": "cp", "p": a.p, "value": c.value, "result": to_json(&c)}),
            table,
        });
    }
    let f = parse_lattice(&a.f)?;
    let (op, report): (&str, BoundReport) = match a.op {
        ZlineOp::VarNorm => ("var-norm", zline::check_var_norm_bound(&f, a.p, a.tol)?),
        ZlineOp::LipschitzHalf => ("lipschitz-half", zline::check_lipschitz_half(&f)?),
        ZlineOp::LipschitzCentered => ("lipschitz-centered", zline::check_lipschitz_centered(&f)?),
        ZlineOp::Cp => unreachable!("handled above"),
    };
    if !report.holds {
        return Err(CliError::Invariant(format!(
            "{op}: lhs {} exceeds rhs {} beyond the error bounds",
            report.lhs, report.rhs
        )));
    }
    let mut table = Table::new(vec!["op", "lhs", "rhs", "ratio"]);
    table.push(vec![op.into(), report.lhs.to_string(), report.rhs.to_string(), report.ratio.to_string()]);
    let mut json = to_json(&report);
    json["command"] = json!("zline-check");
    json["op"] = json!(op);
    json["f"] = to_json(&f);
    if a.op == ZlineOp::VarNorm {
        json["p"] = json!(a.p);
    }
    Ok(Report { json, table })
}

fn conjecture_scan(a: &ScanArgs, stderr: &mut dyn Write) -> Result<Report, CliError> {
    let cfg = ZScanConfig {
        samples: a.samples,
        max_support: a.max_support,
        seed: a.seed,
        tolerance: a.tol,
    };
    let r = zline::conjecture_scan(a.p, &cfg)?;
    if r.violations > 0 {
        let _ = writeln!(
            stderr,
            "WARNING: {} of {} candidates exceed the conjectured constant {} (largest ratio {}, at {})",
            r.violations,
            r.candidates,
            r.conjectured_constant,
            r.max_ratio,
            serde_json::to_string(&r.argmax).expect("serializes"),
        );
    }
    let mut table = Table::new(vec!["p", "max_ratio", "conjectured_constant", "candidates", "violations"]);
    table.push(vec![
        r.p.to_string(),
        r.max_ratio.to_string(),
        r.conjectured_constant.to_string(),
        r.candidates.to_string(),
        r.violations.to_string(),
    ]);
    let mut json = to_json(&r);
    json["command"] = json!("conjecture-scan");
    Ok(Report { json, table })
}

/// Run-spec file for `sweep`.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub n: usize,
    pub p_start: f64,
    pub p_end: f64,
    pub p_step: f64,
    #[serde(default = "default_quantity")]
    pub quantity: SweepQuantity,
    #[serde(default)]
    pub bounds: bool,
}

fn default_quantity() -> SweepQuantity {
    SweepQuantity::StarNorm
}

const MAX_SWEEP_POINTS: usize = 1_000_000;

fn sweep_spec(a: &SweepArgs) -> Result<SweepSpec, CliError> {
    if let Some(path) = &a.spec {
        let text = output::read(path)?;
        return serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad run-spec: {e}")));
    }
    let n = a.n.ok_or_else(|| CliError::Usage("sweep needs --n or --spec".into()))?;
    let range = a
        .p_range
        .as_deref()
        .ok_or_else(|| CliError::Usage("sweep needs --p-range START:END:STEP or --spec".into()))?;
    let parts: Vec<f64> = range
        .split(':')
        .map(|s| s.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .map_err(|_| CliError::Usage(format!("bad p-range {range:?}")))?;
    let [p_start, p_end, p_step] = parts[..] else {
        return Err(CliError::Usage(format!("p-range {range:?} needs START:END:STEP")));
    };
    Ok(SweepSpec {
        n,
        p_start,
        p_end,
        p_step,
        quantity: a.quantity,
        bounds: a.bounds,
    })
}

fn sweep_points(s: &SweepSpec) -> Result<Vec<f64>, CliError> {
    if !(s.p_step.is_finite() && s.p_step > 0.0) {
        return Err(CliError::Usage(format!("p step must be positive, got {}", s.p_step)));
    }
    if !(s.p_start.is_finite() && s.p_end.is_finite() && s.p_start <= s.p_end) {
        return Err(CliError::Usage(format!("bad p range [{}, {}]", s.p_start, s.p_end)));
    }
    let count = ((s.p_end - s.p_start) / s.p_step + 1e-9).floor() as usize + 1;
    if count > MAX_SWEEP_POINTS {
        return Err(CliError::Core(sharpmax::Error::Budget(format!("{count} sweep points"))));
    }
    Ok((0..count).map(|k| s.p_start + k as f64 * s.p_step).collect())
}

fn sweep(a: &SweepArgs) -> Result<Report, CliError> {
    let spec = sweep_spec(a)?;
    let ps = sweep_points(&spec)?;
    let mut header = vec!["p", "value"];
    if spec.bounds {
        header.extend(["lower", "upper"]);
    }
    let mut table = Table::new(header);
    let mut points = Vec::with_capacity(ps.len());
    for p in ps {
        let value = match spec.quantity {
            SweepQuantity::StarNorm => search::star_norm_formula(spec.n, p)?.value.powf(p),
            SweepQuantity::StarNormStar => constants::star_norm_star(spec.n, p)?.value.powf(p),
            SweepQuantity::StarLowerBound => constants::star_lower_bound(spec.n, p)?,
        };
        let mut cells = vec![p.to_string(), value.to_string()];
        let mut point = json!({"p": p, "value": value});
        if spec.bounds {
            let (lo, hi) = constants::soria_tradacete_star_bounds(spec.n, p)?;
            cells.extend([lo.to_string(), hi.to_string()]);
            point["lower"] = json!(lo);
            point["upper"] = json!(hi);
        }
        table.push(cells);
        points.push(point);
    }
    Ok(Report {
        json: json!({"command": "sweep", "spec": to_json(&spec), "points": points}),
        table,
    })
}
