//! Subcommand implementations: each turns parsed arguments into a [`Report`].

use serde_json::{json, Value};

use plethyra::coefficients::{
    cayley_sylvester, plethysm_coefficient_with, ramified_branching, ramified_branching_terms, stable_plethysm_with,
    Limits, Route, StableQuery,
};
use plethyra::diagram::{
    dq_dimension_check_ramified, orbit_expand, orbit_to_diagram, propagating_index, type_census, DiagramCombination,
    ScaledDiagram, ThetaPoset,
};
use plethyra::partition::{marked_partitions, marked_partitions_distinct, Partition};
use plethyra::schur_weyl::{
    check_commute_with, diagram_action, faithfulness_rank, minimal_r_tuple, ramified_value_type, value_type, Embedding,
};
use plethyra::series::stable_two_row_gf;
use plethyra::symfunc::{lr_coefficient, lr_expand, plethysm, SchurPoly};
use plethyra::verify::{run_suite, Suite};
use plethyra::{Error, PartitionDiagram, PropIndex, RamifiedDiagram, Result};

use crate::report::{integer, query, Report, Table};
use crate::{Command, DiagramOp, DqArgs, SchurWeylOp, SuiteArg};

pub struct Outcome {
    pub report: Report,
    /// A verification inside the command disagreed.
    pub mismatch: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, mismatch: false }
    }
}

fn text(p: &Partition) -> Value {
    Value::String(p.to_string())
}

fn schur_report(q: serde_json::Map<String, Value>, f: &SchurPoly) -> Report {
    let mut table = Table::new(&["partition", "coefficient"]);
    for (l, c) in f.terms().rev() {
        table.push(vec![l.to_string(), c.to_string()]);
    }
    Report::new(q, serde_json::to_value(f).expect("serializable"), f.to_string(), table)
}

fn scalar_report(q: serde_json::Map<String, Value>, v: impl std::fmt::Display) -> Report {
    Report::new(q, integer(&v), v.to_string(), Table::single("value", &v))
}

pub fn dispatch(command: &Command, limits: &Limits) -> Result<Outcome> {
    match command {
        Command::Plethysm { nu, mu, lambda } => plethysm_cmd(nu, mu, lambda.as_ref(), limits).map(Into::into),
        Command::Lr { mu, nu, lambda } => Ok(lr_cmd(mu, nu, lambda.as_ref()).into()),
        Command::Rc { alpha, beta, kappa, terms } => rc_cmd(alpha, beta, kappa, *terms).map(Into::into),
        Command::Stable { beta, m, n, kappa } => stable_cmd(beta, *m, *n, kappa, limits).map(Into::into),
        Command::Marked { b, r, cap, distinct } => Ok(marked_cmd(*b, *r, *cap, *distinct).into()),
        Command::Gf { b, terms } => Ok(gf_cmd(*b, *terms).into()),
        Command::TableauxOracle { b, m, n, r, check } => tableaux_cmd(*b, *m, *n, *r, *check, limits),
        Command::Diagram { op } => diagram_cmd(op).map(Into::into),
        Command::Theta { r, le } => theta_cmd(*r, le.as_deref()).map(Into::into),
        Command::DqCheck(args) => dq_cmd(args),
        Command::SchurWeyl { op } => schur_weyl_cmd(op, limits).map(Into::into),
        Command::Verify { suite } => Ok(verify_cmd(*suite)),
    }
}

fn plethysm_cmd(nu: &Partition, mu: &Partition, lambda: Option<&Partition>, limits: &Limits) -> Result<Report> {
    if let Some(lambda) = lambda {
        let v = plethysm_coefficient_with(nu, mu, lambda, limits)?;
        let q = query("plethysm", &[("nu", text(nu)), ("mu", text(mu)), ("lambda", text(lambda))]);
        return Ok(scalar_report(q, v).with_route(Route::BruteForce));
    }
    let degree = nu.size() * mu.size();
    if degree > limits.max_degree {
        return Err(Error::Budget(format!("|ν|·|μ| = {degree} exceeds the degree ceiling {}", limits.max_degree)));
    }
    if nu.is_empty() || mu.is_empty() {
        return Err(Error::Domain("plethysm expansion needs nonempty ν and μ".into()));
    }
    let f = plethysm(&SchurPoly::schur(nu.clone()), &SchurPoly::schur(mu.clone()))?;
    let q = query("plethysm", &[("nu", text(nu)), ("mu", text(mu))]);
    Ok(schur_report(q, &f).with_route(Route::BruteForce))
}

fn lr_cmd(mu: &Partition, nu: &Partition, lambda: Option<&Partition>) -> Report {
    if let Some(lambda) = lambda {
        let q = query("lr", &[("lambda", text(lambda)), ("mu", text(mu)), ("nu", text(nu))]);
        return scalar_report(q, lr_coefficient(lambda, mu, nu));
    }
    let f = SchurPoly::from_terms(lr_expand(mu, nu, None));
    schur_report(query("lr", &[("mu", text(mu)), ("nu", text(nu))]), &f)
}

fn rc_cmd(alpha: &Partition, beta: &Partition, kappa: &Partition, with_terms: bool) -> Result<Report> {
    let q = query("rc", &[("alpha", text(alpha)), ("beta", text(beta)), ("kappa", text(kappa))]);
    if !with_terms {
        return Ok(scalar_report(q, ramified_branching(alpha, beta, kappa)?).with_route(Route::StableFormula));
    }
    let total = ramified_branching(alpha, beta, kappa)?;
    let terms = ramified_branching_terms(alpha, beta, kappa)?;
    let mut table = Table::new(&["gamma", "epsilon", "value"]);
    let mut lines = vec![total.to_string()];
    for t in &terms {
        table.push(vec![t.gamma.to_string(), t.epsilon.to_string(), t.value.to_string()]);
        lines.push(format!("  (γ, ε) = ({}, {}): {}", t.gamma, t.epsilon, t.value));
    }
    let entries: Vec<Value> = terms
        .iter()
        .map(|t| json!({ "gamma": t.gamma.to_string(), "epsilon": t.epsilon.to_string(), "value": integer(&t.value) }))
        .collect();
    let value = json!({ "total": integer(&total), "terms": entries });
    Ok(Report::new(q, value, lines.join("\n"), table).with_route(Route::StableFormula))
}

fn stable_cmd(beta: &Partition, m: usize, n: usize, kappa: &Partition, limits: &Limits) -> Result<Report> {
    let rep = stable_plethysm_with(&StableQuery { beta: beta.clone(), m, n, kappa: kappa.clone() }, limits)?;
    let q = query("stable", &[("beta", text(beta)), ("m", json!(m)), ("n", json!(n)), ("kappa", text(kappa))]);
    Ok(scalar_report(q, &rep.value).with_route(rep.route).with_bounds(rep.bounds_met))
}

fn marked_cmd(b: usize, r: usize, cap: Option<usize>, distinct: bool) -> Report {
    let list = if distinct {
        let mut l = marked_partitions_distinct(b, r);
        if let Some(c) = cap {
            l.retain(|x| x.gamma.first() <= c && x.epsilon.first() <= c);
        }
        l
    } else {
        marked_partitions(b, r, cap)
    };
    let mut table = Table::new(&["gamma", "epsilon"]);
    let mut lines = Vec::new();
    for x in &list {
        table.push(vec![x.gamma.to_string(), x.epsilon.to_string()]);
        lines.push(x.to_string());
    }
    let q = query("marked", &[("b", json!(b)), ("r", json!(r)), ("cap", json!(cap)), ("distinct", json!(distinct))]);
    let value = serde_json::to_value(&list).expect("serializable");
    lines.push(format!("{} marked partitions", list.len()));
    Report::new(q, value, lines.join("\n"), table)
}

fn gf_cmd(b: usize, terms: usize) -> Report {
    let series = stable_two_row_gf(b, terms);
    let series = &series[..terms.min(series.len())];
    let mut table = Table::new(&["r", "coefficient"]);
    for (r, c) in series.iter().enumerate() {
        table.push(vec![r.to_string(), c.to_string()]);
    }
    let shown: Vec<String> = series.iter().map(ToString::to_string).collect();
    let q = query("gf", &[("b", json!(b)), ("terms", json!(terms))]);
    Report::new(q, Value::Array(series.iter().map(integer).collect()), shown.join(", "), table)
        .with_route(Route::ClosedForm)
}

fn tableaux_cmd(b: usize, m: usize, n: usize, r: usize, check: bool, limits: &Limits) -> Result<Outcome> {
    let oracle = cayley_sylvester(b, m, n, r)?;
    let q = query("tableaux-oracle", &[("b", json!(b)), ("m", json!(m)), ("n", json!(n)), ("r", json!(r))]);
    if !check {
        return Ok(scalar_report(q, &oracle).with_route(Route::TableauxOracle).into());
    }
    let nu = Partition::new(vec![n - b, b])?;
    let lambda = Partition::new(vec![m * n - r, r])?;
    let brute = plethysm_coefficient_with(&nu, &Partition::row(m), &lambda, limits)?;
    let agree = brute == oracle;
    let mut table = Table::new(&["oracle", "brute_force", "agree"]);
    table.push(vec![oracle.to_string(), brute.to_string(), agree.to_string()]);
    let value = json!({ "oracle": integer(&oracle), "brute_force": integer(&brute), "agree": agree });
    let shown = format!("{oracle} (brute force {brute}{})", if agree { "" } else { ": MISMATCH" });
    let report = Report::new(q, value, shown, table).with_route(Route::TableauxOracle);
    Ok(Outcome { report, mismatch: !agree })
}

enum AnyDiagram {
    Plain(PartitionDiagram),
    Ramified(RamifiedDiagram),
}

fn parse_diagram(s: &str) -> Result<AnyDiagram> {
    if s.contains('@') {
        Ok(AnyDiagram::Ramified(s.parse()?))
    } else {
        Ok(AnyDiagram::Plain(s.parse()?))
    }
}

fn combination_report(q: serde_json::Map<String, Value>, c: &DiagramCombination) -> Report {
    let mut table = Table::new(&["diagram", "coefficient"]);
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    for (d, k) in c {
        table.push(vec![d.to_string(), k.to_string()]);
        entries.push(json!({ "diagram": d.to_string(), "coefficient": k.to_string() }));
        lines.push(format!("{k} · {d}"));
    }
    Report::new(q, Value::Array(entries), lines.join("\n"), table)
}

fn diagram_cmd(op: &DiagramOp) -> Result<Report> {
    match op {
        DiagramOp::Show { diagram } => {
            let q = query("diagram", &[("op", json!("show")), ("diagram", json!(diagram))]);
            let (value, mut lines) = match parse_diagram(diagram)? {
                AnyDiagram::Plain(d) => {
                    let (count, pi) = d.propagating_data();
                    let v = json!({
                        "diagram": d.to_string(), "north": d.north(), "south": d.south(),
                        "propagating": count, "permutation": pi.to_string(),
                    });
                    (v, vec![d.to_string(), format!("({},{})-diagram, {count} propagating blocks, π = {pi}", d.north(), d.south())])
                }
                AnyDiagram::Ramified(d) => {
                    let idx = propagating_index(&d);
                    let v = json!({
                        "diagram": d.to_string(), "north": d.north(), "south": d.south(),
                        "propagating_index": idx.to_string(),
                    });
                    (v, vec![d.to_string(), format!("({},{})-ramified diagram, propagating index {idx}", d.north(), d.south())])
                }
            };
            let mut table = Table::new(&["field", "value"]);
            for (k, v) in value.as_object().expect("object") {
                table.push(vec![k.clone(), v.to_string().trim_matches('"').to_string()]);
            }
            lines.truncate(2);
            Ok(Report::new(q, value, lines.join("\n"), table))
        }
        DiagramOp::Compose { top, bottom } => {
            let q = query("diagram", &[("op", json!("compose")), ("top", json!(top)), ("bottom", json!(bottom))]);
            let (shown, exp_in, exp_out) = match (parse_diagram(top)?, parse_diagram(bottom)?) {
                (AnyDiagram::Plain(a), AnyDiagram::Plain(b)) => {
                    let ScaledDiagram { diagram, exp_in, exp_out } = a.compose(&b)?;
                    (diagram.to_string(), exp_in, exp_out)
                }
                (AnyDiagram::Ramified(a), AnyDiagram::Ramified(b)) => {
                    let ScaledDiagram { diagram, exp_in, exp_out } = a.compose(&b)?;
                    (diagram.to_string(), exp_in, exp_out)
                }
                _ => return Err(Error::Domain("cannot compose a partition diagram with a ramified diagram".into())),
            };
            let value = json!({ "diagram": shown, "exp_in": exp_in, "exp_out": exp_out });
            let mut table = Table::new(&["diagram", "exp_in", "exp_out"]);
            table.push(vec![shown.clone(), exp_in.to_string(), exp_out.to_string()]);
            let prefix = match (exp_in, exp_out) {
                (0, 0) => String::new(),
                (0, o) => format!("δ^{o} · "),
                (i, o) => format!("δ_in^{i} δ_out^{o} · "),
            };
            Ok(Report::new(q, value, format!("{prefix}{shown}"), table))
        }
        DiagramOp::Orbit { diagram, inverse } => {
            let q = query("diagram", &[("op", json!("orbit")), ("diagram", json!(diagram)), ("inverse", json!(inverse))]);
            let AnyDiagram::Plain(d) = parse_diagram(diagram)? else {
                return Err(Error::Domain("the orbit basis is only defined for partition diagrams".into()));
            };
            let c = if *inverse { orbit_to_diagram(&d) } else { orbit_expand(&d) };
            Ok(combination_report(q, &c))
        }
    }
}

fn theta_cmd(r: usize, le: Option<&[String]>) -> Result<Report> {
    let poset = ThetaPoset::new(r);
    if let Some([x, y]) = le {
        let (x, y): (PropIndex, PropIndex) = (x.parse()?, y.parse()?);
        for z in [&x, &y] {
            if !poset.contains(z) {
                return Err(Error::Domain(format!("{z} is not an element of Θ_{r}")));
            }
        }
        let holds = poset.le(&x, &y);
        let q = query("theta", &[("r", json!(r)), ("le", json!([x.to_string(), y.to_string()]))]);
        return Ok(Report::new(q, json!(holds), format!("{x} ≤ {y}: {holds}"), Table::single("le", holds)));
    }
    let elements: Vec<String> = poset.elements.iter().map(ToString::to_string).collect();
    let covers: Vec<(String, String)> = poset.cover_pairs().iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
    let mut table = Table::new(&["element"]);
    for e in &elements {
        table.push(vec![e.clone()]);
    }
    let mut lines = vec![format!("|Θ_{r}| = {}", elements.len()), elements.join(" ")];
    lines.extend(covers.iter().map(|(a, b)| format!("{a} ⋖ {b}")));
    let value = json!({ "elements": elements, "covers": covers });
    Ok(Report::new(query("theta", &[("r", json!(r))]), value, lines.join("\n"), table))
}

fn dq_cmd(args: &DqArgs) -> Result<Outcome> {
    let r = args.r;
    if let Some(ab) = &args.census {
        let (a, b) = (ab[0], ab[1]);
        let census = type_census(r, a, b)?;
        let mut table = Table::new(&["type", "count"]);
        let mut entries = Vec::new();
        for (t, c) in &census {
            table.push(vec![t.to_string(), c.to_string()]);
            entries.push(json!({ "type": t.to_string(), "count": c }));
        }
        let lines: Vec<String> = census.iter().map(|(t, c)| format!("{t}: {c}")).collect();
        let q = query("dq-check", &[("r", json!(r)), ("census", json!([a, b]))]);
        return Ok(Report::new(q, Value::Array(entries), lines.join("\n"), table).into());
    }
    let beta = args.beta.as_ref().ok_or_else(|| Error::Domain("dq-check needs --beta or --census".into()))?;
    let (lhs, rhs) = dq_dimension_check_ramified(r, &args.alpha, beta)?;
    let agree = lhs == rhs;
    let q = query("dq-check", &[("r", json!(r)), ("alpha", text(&args.alpha)), ("beta", text(beta))]);
    let mut table = Table::new(&["quotient_dimension", "multiplicity_sum", "agree"]);
    table.push(vec![lhs.to_string(), rhs.to_string(), agree.to_string()]);
    let value = json!({ "quotient_dimension": integer(&lhs), "multiplicity_sum": integer(&rhs), "agree": agree });
    let shown = format!("({lhs}, {rhs}){}", if agree { "" } else { " MISMATCH" });
    Ok(Outcome { report: Report::new(q, value, shown, table), mismatch: !agree })
}

/// Parses "(i,j),(i,j),…" into 1-based pairs, or "i,j,k" into single indices.
fn parse_index(s: &str) -> Result<(Vec<usize>, bool)> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("invalid tensor index {s:?}"));
    let number = |t: &str| t.parse::<usize>().ok().filter(|&v| v > 0).ok_or_else(bad);
    if !compact.contains('(') {
        return Ok((compact.split(',').map(number).collect::<Result<_>>()?, false));
    }
    let inner = compact.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
    let mut out = Vec::new();
    for pair in inner.split("),(") {
        let (i, j) = pair.split_once(',').ok_or_else(bad)?;
        out.push(number(i)?);
        out.push(number(j)?);
    }
    Ok((out, true))
}

fn schur_weyl_cmd(op: &SchurWeylOp, limits: &Limits) -> Result<Report> {
    match op {
        SchurWeylOp::Commute { m, n, r, swapped } => {
            let embedding = if *swapped { Embedding::Swapped } else { Embedding::Standard };
            let holds = check_commute_with(*m, *n, *r, embedding, limits)?;
            let q = query("schur-weyl", &[("op", json!("commute")), ("m", json!(m)), ("n", json!(n)), ("r", json!(r)), ("swapped", json!(swapped))]);
            Ok(Report::new(q, json!(holds), format!("commute: {holds}"), Table::single("commute", holds)))
        }
        SchurWeylOp::Rank { d, r } => {
            let rank = faithfulness_rank(*d, *r, limits)?;
            let q = query("schur-weyl", &[("op", json!("rank")), ("d", json!(d)), ("r", json!(r))]);
            Ok(scalar_report(q, rank))
        }
        SchurWeylOp::ValueType { pairs } => {
            let (flat, is_pairs) = parse_index(pairs)?;
            let q = query("schur-weyl", &[("op", json!("value-type")), ("index", json!(pairs))]);
            if !is_pairs {
                let t = value_type(&flat);
                return Ok(Report::new(q, json!({ "type": t.to_string() }), t.to_string(), Table::single("type", &t)));
            }
            let pairs: Vec<(usize, usize)> = flat.chunks(2).map(|c| (c[0], c[1])).collect();
            let (rp, sp) = ramified_value_type(&pairs);
            let tuple = minimal_r_tuple(&rp, &sp)?;
            let shown: Vec<String> = tuple.iter().map(ToString::to_string).collect();
            let mut table = Table::new(&["R", "S", "minimal_tuple"]);
            table.push(vec![rp.to_string(), sp.to_string(), format!("({})", shown.join(","))]);
            let value = json!({ "R": rp.to_string(), "S": sp.to_string(), "minimal_tuple": tuple });
            let lines = format!("R = {rp}\nS = {sp}\nminimal tuple = ({})", shown.join(","));
            Ok(Report::new(q, value, lines, table))
        }
        SchurWeylOp::Matrix { diagram, d } => {
            let dg: PartitionDiagram = diagram.parse()?;
            let m = diagram_action(&dg, *d, limits)?;
            let q = query("schur-weyl", &[("op", json!("matrix")), ("diagram", json!(diagram)), ("d", json!(d))]);
            let mut table = Table::new(&["row", "col", "value"]);
            let mut entries = Vec::new();
            for (&(i, j), v) in m.entries() {
                table.push(vec![i.to_string(), j.to_string(), v.to_string()]);
                entries.push(json!([i, j, v.to_string()]));
            }
            let value = json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries });
            Ok(Report::new(q, value, m.to_coordinate_text().trim_end().to_string(), table))
        }
    }
}

fn verify_cmd(suite: SuiteArg) -> Outcome {
    let (suite, name) = match suite {
        SuiteArg::Examples => (Suite::Examples, "examples"),
        SuiteArg::Acceptance => (Suite::Acceptance, "acceptance"),
    };
    let outcomes = run_suite(suite);
    let mut table = Table::new(&["id", "title", "passed", "elapsed_ms", "detail"]);
    let mut entries = Vec::new();
    let mut lines = Vec::new();
    for o in &outcomes {
        let ms = o.elapsed.as_secs_f64() * 1000.0;
        table.push(vec![o.id.to_string(), o.title.to_string(), o.passed.to_string(), format!("{ms:.3}"), o.detail.clone()]);
        entries.push(json!({ "id": o.id, "title": o.title, "passed": o.passed, "detail": o.detail }));
        lines.push(format!("{} [{:>2}] {}: {}", if o.passed { "PASS" } else { "FAIL" }, o.id, o.title, o.detail));
    }
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    lines.push(format!("{name}: {} passed, {failed} failed", outcomes.len() - failed));
    let q = query("verify", &[("suite", json!(name))]);
    Outcome { report: Report::new(q, Value::Array(entries), lines.join("\n"), table), mismatch: failed > 0 }
}
