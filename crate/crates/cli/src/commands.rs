use std::fmt::Write as _;
use std::fs;

use eulerpath::bernoulli_lab::{
    a_check, b_column, b_table, conjecture_check, higher_bernoulli_ttr, latex_rational,
};
use eulerpath::matrix::build_transfer;
use eulerpath::motzkin::{
    enumerate_paths, euler_motzkin, jfraction_series, motzkin_table, path_weight,
    weighted_path_sum, WeightSpec,
};
use eulerpath::ortho::{
    bernoulli_ttr, build_monic_ops, carlitz_ttr, convolution_check, euler_bar_ttr, euler_ttr,
    mp_explicit_omega, orthogonality_residuals, ThreeTermCoeffs,
};
use eulerpath::quadrature::{convolved_moment_check, sech_moment};
use eulerpath::rational::{rat, to_f64};
use eulerpath::series::{bernoulli_polys, euler_bar, euler_polys, MomentSeq};
use eulerpath::{Rational, XPoly};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::render::{
    align, ascii_diagram, frac, latex_xpoly, step_string, svg_diagrams, xpoly_json, ypoly_json,
};
use crate::{
    BtableArgs, ConjectureArgs, EulerArgs, Family, Format, OrthoArgs, PathsArgs, Pipeline,
    VerifyArgs, Weights,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] eulerpath::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            Self::Usage(_) => 2,
            _ => 1,
        }
    }
}

/// Everything a command produces; `render` picks one view.
pub struct Report {
    pub command: &'static str,
    pub params: Value,
    pub results: Value,
    /// `("agree", b)` or `("pass", b)` at the top level of the json.
    pub status: Option<(&'static str, bool)>,
    pub plain: String,
    pub csv: Option<String>,
    pub latex: Option<String>,
    pub ok: bool,
}

impl Report {
    pub fn json(&self) -> Value {
        let mut v = json!({
            "command": self.command,
            "params": self.params,
            "results": self.results,
        });
        if let Some((key, flag)) = self.status {
            v[key] = Value::Bool(flag);
        }
        v
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        let unavailable = |name: &str| {
            CliError::Usage(format!("{name} output is not available for `{}`", self.command))
        };
        match format {
            Format::Plain => Ok(self.plain.clone()),
            Format::Json => Ok(serde_json::to_string_pretty(&self.json()).expect("serializable") + "\n"),
            Format::Csv => self.csv.clone().ok_or_else(|| unavailable("csv")),
            Format::Latex => self.latex.clone().ok_or_else(|| unavailable("latex")),
        }
    }
}

fn pipeline_name(p: Pipeline) -> &'static str {
    match p {
        Pipeline::Egf => "egf",
        Pipeline::Motzkin => "motzkin",
        Pipeline::Matrix => "matrix",
        Pipeline::Jfraction => "jfraction",
        Pipeline::All => "all",
    }
}

fn euler_pipeline(p: u32, n: usize, which: Pipeline) -> Result<Vec<XPoly>, CliError> {
    Ok(match which {
        Pipeline::Egf => euler_polys(p, n).into_values(),
        Pipeline::Motzkin => euler_motzkin(p, n).into_values(),
        Pipeline::Matrix => build_transfer(&WeightSpec::Euler { p }, n.max(1))?.top_left_powers(n)?,
        Pipeline::Jfraction => jfraction_series(&euler_ttr(p), n)?.into_values(),
        Pipeline::All => unreachable!("expanded by the caller"),
    })
}

pub fn euler(a: &EulerArgs) -> Result<Report, CliError> {
    let n = a.n as usize;
    let selected = match a.pipeline {
        Pipeline::All => vec![Pipeline::Egf, Pipeline::Motzkin, Pipeline::Matrix, Pipeline::Jfraction],
        one => vec![one],
    };
    let mut columns = Vec::new();
    for &which in &selected {
        let mut values = euler_pipeline(a.p, n, which)?;
        if let Some(x) = &a.x {
            values = values.iter().map(|v| XPoly::constant(v.eval(x))).collect();
        }
        columns.push(values);
    }
    let agree_at: Vec<bool> = (0..=n)
        .map(|i| columns.iter().all(|c| c[i] == columns[0][i]))
        .collect();
    let agree = agree_at.iter().all(|&b| b);
    let names: Vec<&str> = selected.iter().map(|&s| pipeline_name(s)).collect();
    let arg = a.x.as_ref().map_or("x".to_string(), |x| x.to_string());

    let mut plain = String::new();
    if selected.len() == 1 {
        let rows: Vec<Vec<String>> = (0..=n)
            .map(|i| vec![format!("E_{i}^({})({arg})", a.p), "=".into(), columns[0][i].to_string()])
            .collect();
        plain.push_str(&align(&rows));
    } else {
        let rows: Vec<Vec<String>> = names
            .iter()
            .zip(&columns)
            .map(|(name, col)| {
                let cells: Vec<String> = col.iter().map(|v| v.to_string()).collect();
                vec![name.to_string(), cells.join(" | ")]
            })
            .collect();
        plain.push_str(&align(&rows));
        if agree {
            plain.push_str("agree: ok\n");
        } else {
            let bad: Vec<String> = (0..=n).filter(|&i| !agree_at[i]).map(|i| i.to_string()).collect();
            writeln!(plain, "agree: MISMATCH at n = {}", bad.join(", ")).unwrap();
        }
    }

    let mut csv = format!("n,{}", names.join(","));
    if selected.len() > 1 {
        csv.push_str(",agree");
    }
    csv.push('\n');
    for i in 0..=n {
        let cells: Vec<String> = columns.iter().map(|c| c[i].to_string()).collect();
        write!(csv, "{i},{}", cells.join(",")).unwrap();
        if selected.len() > 1 {
            write!(csv, ",{}", agree_at[i]).unwrap();
        }
        csv.push('\n');
    }

    let mut latex = String::new();
    writeln!(latex, "\\begin{{tabular}}{{|l|{}|}}", vec!["c"; names.len()].join("|")).unwrap();
    latex.push_str("\\hline \n");
    for name in &names {
        write!(latex, "& {name} ").unwrap();
    }
    latex.push_str("\\tabularnewline\n\\hline \n");
    for i in 0..=n {
        write!(latex, "$n={i}$ ").unwrap();
        for c in &columns {
            write!(latex, "& ${}$ ", latex_xpoly(&c[i])).unwrap();
        }
        latex.push_str("\\tabularnewline\n");
    }
    latex.push_str("\\hline \n\\end{tabular}\n");

    let results: Vec<Value> = (0..=n)
        .map(|i| {
            let mut values = serde_json::Map::new();
            for (name, c) in names.iter().zip(&columns) {
                values.insert(name.to_string(), xpoly_json(&c[i]));
            }
            json!({"n": i, "values": values, "agree": agree_at[i]})
        })
        .collect();

    Ok(Report {
        command: "euler",
        params: json!({
            "p": a.p,
            "n": n,
            "pipeline": pipeline_name(a.pipeline),
            "x": a.x.as_ref().map(frac),
        }),
        results: Value::Array(results),
        status: Some(("agree", agree)),
        plain,
        csv: Some(csv),
        latex: Some(latex),
        ok: agree,
    })
}

/// Recurrence, moments and symbol for an orthogonal family.
fn family_setup(
    family: Family,
    p: u32,
    n: usize,
) -> Result<(ThreeTermCoeffs, MomentSeq<XPoly>, &'static str), CliError> {
    Ok(match family {
        Family::Euler => (euler_ttr(p), euler_polys(p, 2 * n), "Ω"),
        Family::Carlitz => {
            let c = if p == 1 { carlitz_ttr() } else { euler_bar_ttr(p) };
            (c, euler_bar(p, 2 * n).as_constants(), "Q")
        }
        Family::Bernoulli => {
            let c = if p == 1 { bernoulli_ttr() } else { higher_bernoulli_ttr(p, n)? };
            (c, bernoulli_polys(p, 2 * n), "ϱ")
        }
    })
}

pub fn ortho(a: &OrthoArgs) -> Result<Report, CliError> {
    let n = a.n as usize;
    let (mut c, mut moments, symbol) = family_setup(a.family, a.p, n)?;
    if let Some(x) = &a.x {
        c = c.at_x(x.clone());
        moments = MomentSeq::new(moments.values().iter().map(|m| XPoly::constant(m.eval(x))).collect());
    }
    let ops = build_monic_ops(&c, n)?;
    let residuals = orthogonality_residuals(&c, &moments, n)?;
    let pass = residuals.all_zero();
    let family = format!("{:?}", a.family).to_lowercase();

    let mut rows = Vec::new();
    for (i, poly) in ops.polys().iter().enumerate() {
        rows.push(vec![format!("{symbol}_{i}^({})(y)", a.p), "=".into(), poly.to_string()]);
    }
    let mut plain = align(&rows);
    let total = residuals.entries().len();
    let nonzero: Vec<_> = residuals.nonzero().collect();
    if nonzero.is_empty() {
        writeln!(plain, "residuals: 0 for all {total} pairs r < m ≤ {n}").unwrap();
    } else {
        writeln!(plain, "residuals: {} of {total} pairs nonzero", nonzero.len()).unwrap();
        for (r, m, v) in &nonzero {
            writeln!(plain, "  r={r} m={m}: {v}").unwrap();
        }
    }

    let results = json!({
        "polynomials": ops.polys().iter().enumerate()
            .map(|(i, q)| json!({"n": i, "poly": ypoly_json(q)}))
            .collect::<Vec<_>>(),
        "residuals": residuals.entries().iter()
            .map(|(r, m, v)| json!({"r": r, "n": m, "value": xpoly_json(v)}))
            .collect::<Vec<_>>(),
    });

    Ok(Report {
        command: "ortho",
        params: json!({"family": family, "p": a.p, "n": n, "x": a.x.as_ref().map(frac)}),
        results,
        status: Some(("pass", pass)),
        plain,
        csv: None,
        latex: None,
        ok: pass,
    })
}

fn weight_spec(w: Weights, p: u32) -> WeightSpec {
    match w {
        Weights::Unit => WeightSpec::Unit,
        Weights::Euler => WeightSpec::Euler { p },
        Weights::Bernoulli => WeightSpec::Bernoulli,
        Weights::DyckEuler => WeightSpec::DyckEuler,
        Weights::IntegerEuler => WeightSpec::IntegerEuler,
    }
}

fn weights_name(w: Weights) -> &'static str {
    match w {
        Weights::Unit => "unit",
        Weights::Euler => "euler",
        Weights::Bernoulli => "bernoulli",
        Weights::DyckEuler => "dyck-euler",
        Weights::IntegerEuler => "integer-euler",
    }
}

pub fn paths(a: &PathsArgs) -> Result<Report, CliError> {
    let (n, k) = (a.n as usize, a.k as usize);
    if k > n {
        return Err(CliError::Usage(format!("--k {k} exceeds --n {n}")));
    }
    let spec = weight_spec(a.weights, a.p);
    let dyck_only = matches!(a.weights, Weights::DyckEuler | Weights::IntegerEuler);
    let list: Vec<_> = enumerate_paths(n, k)
        .into_iter()
        .filter(|p| !(dyck_only && p.has_horizontal()))
        .collect();
    let weights: Vec<XPoly> = list.iter().map(|p| path_weight(p, &spec)).collect::<Result<_, _>>()?;
    let sum = weights.iter().fold(XPoly::zero(), |acc, w| &acc + w);
    let table = motzkin_table(&spec, n)?.get(n, k);
    let agree = sum == table;

    let mut plain = String::new();
    for (path, w) in list.iter().zip(&weights) {
        writeln!(plain, "{}  {w}", step_string(path)).unwrap();
        for line in ascii_diagram(path) {
            writeln!(plain, "    {line}").unwrap();
        }
    }
    writeln!(plain, "paths: {}", list.len()).unwrap();
    writeln!(plain, "sum: {sum}").unwrap();
    writeln!(plain, "table: {table} ({})", if agree { "agree" } else { "MISMATCH" }).unwrap();

    let mut csv = String::from("path,weight\n");
    for (path, w) in list.iter().zip(&weights) {
        writeln!(csv, "{path},{w}").unwrap();
    }

    if let Some(svg) = &a.svg {
        fs::write(svg, svg_diagrams(&list))?;
    }

    let results = json!({
        "paths": list.iter().zip(&weights)
            .map(|(p, w)| json!({"steps": p.to_string(), "weight": xpoly_json(w)}))
            .collect::<Vec<_>>(),
        "count": list.len(),
        "sum": xpoly_json(&sum),
        "table": xpoly_json(&table),
    });
    Ok(Report {
        command: "paths",
        params: json!({"n": n, "k": k, "weights": weights_name(a.weights), "p": a.p}),
        results,
        status: Some(("agree", agree)),
        plain,
        csv: Some(csv),
        latex: None,
        ok: agree,
    })
}

pub fn btable(a: &BtableArgs) -> Result<Report, CliError> {
    let n_max = a.nmax as usize;
    let columns: Vec<Result<Vec<Rational>, String>> =
        (1..=a.pmax).map(|p| b_column(p, n_max).map_err(|e| e.to_string())).collect();
    let errors: Vec<(u32, &String)> = columns
        .iter()
        .zip(1..)
        .filter_map(|(c, p)| c.as_ref().err().map(|e| (p, e)))
        .collect();
    let cell = |n: usize, p: usize| columns[p].as_ref().ok().map(|c| &c[n]);
    let pmax = a.pmax as usize;

    let mut rows = vec![std::iter::once("n\\p".to_string())
        .chain((1..=pmax).map(|p| p.to_string()))
        .collect::<Vec<_>>()];
    for n in 0..n_max {
        let mut row = vec![(n + 1).to_string()];
        row.extend((0..pmax).map(|p| cell(n, p).map_or("ERR".into(), |v| v.to_string())));
        rows.push(row);
    }
    let mut plain = align(&rows);
    for (p, e) in &errors {
        writeln!(plain, "ERR p={p}: {e}").unwrap();
    }

    let mut csv = String::from("n");
    for p in 1..=pmax {
        write!(csv, ",p={p}").unwrap();
    }
    csv.push('\n');
    for n in 0..n_max {
        write!(csv, "{}", n + 1).unwrap();
        for p in 0..pmax {
            write!(csv, ",{}", cell(n, p).map_or("ERR".into(), frac)).unwrap();
        }
        csv.push('\n');
    }

    let mut latex = String::new();
    writeln!(latex, "\\begin{{tabular}}{{|l|{}|}}", vec!["c"; pmax].join("|")).unwrap();
    latex.push_str("\\hline \n");
    latex.push_str("\\multirow{1}{*}{} ");
    for p in 1..=pmax {
        write!(latex, "& $p={p}$ ").unwrap();
    }
    latex.push_str("\\tabularnewline\n\\hline \n");
    for n in 0..n_max {
        write!(latex, "$n={}$ ", n + 1).unwrap();
        for p in 0..pmax {
            let v = cell(n, p).map_or("\\mathrm{ERR}".into(), latex_rational);
            write!(latex, "& ${v}$ ").unwrap();
        }
        latex.push_str("\\tabularnewline\n");
    }
    latex.push_str("\\hline \n\\end{tabular}\n");

    let results = json!({
        "rows": (0..n_max).map(|n| json!({
            "n": n + 1,
            "values": (0..pmax).map(|p| cell(n, p).map(frac)).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "errors": errors.iter().map(|(p, e)| json!({"p": p, "message": e})).collect::<Vec<_>>(),
    });
    let pass = errors.is_empty();
    Ok(Report {
        command: "btable",
        params: json!({"nmax": n_max, "pmax": a.pmax, "strict": a.strict}),
        results,
        status: Some(("pass", pass)),
        plain,
        csv: Some(csv),
        latex: Some(latex),
        ok: pass || !a.strict,
    })
}

pub fn conjecture(a: &ConjectureArgs) -> Result<Report, CliError> {
    let report = conjecture_check(a.pmax)?;
    let mut rows = vec![vec![
        "row".to_string(),
        "p".into(),
        "computed".into(),
        "closed form".into(),
        "match".into(),
        "printed".into(),
        "printed match".into(),
    ]];
    let yes_no = |b: bool| if b { "yes" } else { "NO" }.to_string();
    for e in &report.entries {
        rows.push(vec![
            e.row.to_string(),
            e.p.to_string(),
            e.computed.to_string(),
            e.closed_form.to_string(),
            yes_no(e.matches()),
            e.printed.to_string(),
            yes_no(e.printed_matches()),
        ]);
    }
    let mut plain = align(&rows);
    let total = report.entries.len();
    let bad = report.mismatches().count();
    writeln!(plain, "closed forms: {} of {total} match", total - bad).unwrap();
    let printed: Vec<String> = report
        .printed_mismatches()
        .map(|e| format!("({},{})", e.row, e.p))
        .collect();
    if printed.is_empty() {
        plain.push_str("printed forms: all match\n");
    } else {
        writeln!(plain, "printed forms flagged at (n,p): {}", printed.join(" ")).unwrap();
    }

    let mut csv = String::from("row,p,computed,closed_form,match,printed,printed_match\n");
    for e in &report.entries {
        writeln!(
            csv,
            "{},{},{},{},{},{},{}",
            e.row,
            e.p,
            frac(&e.computed),
            frac(&e.closed_form),
            e.matches(),
            frac(&e.printed),
            e.printed_matches()
        )
        .unwrap();
    }

    let results = json!({
        "entries": report.entries.iter().map(|e| json!({
            "row": e.row,
            "p": e.p,
            "computed": frac(&e.computed),
            "closed_form": frac(&e.closed_form),
            "printed": frac(&e.printed),
            "matches": e.matches(),
            "printed_matches": e.printed_matches(),
        })).collect::<Vec<_>>(),
    });
    let pass = report.all_match();
    Ok(Report {
        command: "conjecture",
        params: json!({"pmax": a.pmax}),
        results,
        status: Some(("pass", pass)),
        plain,
        csv: Some(csv),
        latex: None,
        ok: pass,
    })
}

pub const CHECKS: [&str; 10] = [
    "pipelines",
    "orthogonality",
    "explicit",
    "convolution",
    "paths",
    "btable",
    "conjecture",
    "integrality",
    "quadrature",
    "moments",
];

struct Check {
    name: &'static str,
    pass: bool,
    detail: String,
}

fn check_pipelines(n: usize, pmax: u32) -> Result<(bool, String), CliError> {
    for p in 1..=pmax {
        let egf = euler_pipeline(p, n, Pipeline::Egf)?;
        for which in [Pipeline::Motzkin, Pipeline::Matrix, Pipeline::Jfraction] {
            let other = euler_pipeline(p, n, which)?;
            if let Some(i) = (0..=n).find(|&i| other[i] != egf[i]) {
                return Ok((false, format!("{} differs from egf at n={i} p={p}", pipeline_name(which))));
            }
        }
    }
    Ok((true, format!("egf = motzkin = matrix = jfraction, n ≤ {n}, p ≤ {pmax}")))
}

fn check_orthogonality(n: usize, pmax: u32) -> Result<(bool, String), CliError> {
    let mut cases: Vec<(String, Family, u32)> =
        (1..=pmax).map(|p| (format!("euler p={p}"), Family::Euler, p)).collect();
    cases.push(("bernoulli p=1".into(), Family::Bernoulli, 1));
    cases.push(("carlitz".into(), Family::Carlitz, 1));
    for (label, family, p) in cases {
        let (c, m, _) = family_setup(family, p, n)?;
        let table = orthogonality_residuals(&c, &m, n)?;
        let first = table.nonzero().next().map(|(r, m, _)| (*r, *m));
        if let Some((r, m)) = first {
            return Ok((false, format!("{label}: residual r={r} n={m} nonzero")));
        }
    }
    Ok((true, format!("all residuals zero for r < n ≤ {n}")))
}

fn check_explicit(n: usize, pmax: u32) -> Result<(bool, String), CliError> {
    for p in 1..=pmax {
        let ops = build_monic_ops(&euler_ttr(p), n)?;
        if let Some(i) = (0..=n).find(|&i| mp_explicit_omega(i, p) != ops[i]) {
            return Ok((false, format!("explicit form differs at n={i} p={p}")));
        }
    }
    Ok((true, format!("n ≤ {n}, p ≤ {pmax}")))
}

fn check_convolution(n: usize, pmax: u32) -> (bool, String) {
    // the identity is symmetric under swapping the two families
    for p1 in 1..=pmax {
        for p2 in p1..=pmax {
            if let Some(i) = (0..=n).find(|&i| !convolution_check(p1, p2, i)) {
                return (false, format!("grid fails at p1={p1} p2={p2} n={i}"));
            }
        }
    }
    (true, format!("n ≤ {n}, p1, p2 ≤ {pmax}"))
}

const PATH_DEPTH: usize = 8;

fn check_paths(n: usize, pmax: u32) -> Result<(bool, String), CliError> {
    let depth = n.min(PATH_DEPTH);
    let mut specs: Vec<WeightSpec> = (1..=pmax).map(|p| WeightSpec::Euler { p }).collect();
    specs.extend([WeightSpec::Bernoulli, WeightSpec::Unit]);
    for w in &specs {
        let table = motzkin_table(w, depth)?;
        for m in 0..=depth {
            for k in 0..=m {
                if weighted_path_sum(m, k, w)? != table.get(m, k) {
                    return Ok((false, format!("{w:?}: path sum differs from table at ({m},{k})")));
                }
            }
        }
    }
    Ok((true, format!("weighted path sums equal the table for n ≤ {depth}")))
}

fn check_btable(n: usize, pmax: u32) -> Result<(bool, String), CliError> {
    // b_table rejects any column that differs between x = p/2 and x = 0
    b_table(n, pmax)?;
    for p in 1..=pmax {
        if !a_check(p, n)? {
            return Ok((false, format!("a_n^({p}) is not x - p/2")));
        }
    }
    Ok((true, format!("b independent of x and a_n = x - p/2, n ≤ {n}, p ≤ {pmax}")))
}

fn check_conjecture(pmax: u32) -> Result<(bool, String), CliError> {
    let report = conjecture_check(pmax)?;
    let outcome = match report.mismatches().next() {
        None => (true, format!("rows 1 to 5 match closed forms, p ≤ {pmax}")),
        Some(e) => (false, format!("row {} p={}: {} vs {}", e.row, e.p, e.computed, e.closed_form)),
    };
    Ok(outcome)
}

fn check_integrality(n: usize) -> Result<(bool, String), CliError> {
    let col = motzkin_table(&WeightSpec::IntegerEuler, n)?.column0();
    for (i, v) in col.values().iter().enumerate() {
        let Some(r) = v.as_constant() else {
            return Ok((false, format!("E_{i} = {v} depends on x")));
        };
        let sign_ok = if i % 2 == 1 { r.is_zero() } else { r.is_negative() == (i % 4 == 2) };
        if !r.is_integer() || !sign_ok {
            return Ok((false, format!("E_{i} = {v}")));
        }
    }
    Ok((true, format!("integers, odd terms vanish, signs alternate, n ≤ {n}")))
}

const QUAD_DEPTH: usize = 12;

fn check_quadrature(n: usize, tol: f64) -> Result<(bool, String), CliError> {
    let m6 = sech_moment(6, tol)?.value;
    if (m6 + 61.0 / 64.0).abs() >= tol {
        return Ok((false, format!("sixth moment {m6} not within {tol:e} of -61/64")));
    }
    let depth = n.min(QUAD_DEPTH);
    let exact = euler_polys(1, depth).eval_at(&rat(1, 2));
    for (i, e) in exact.values().iter().enumerate() {
        let got = sech_moment(i, tol)?.value;
        let want = to_f64(e);
        if (got - want).abs() >= tol * want.abs().max(1.0) {
            return Ok((false, format!("moment {i}: {got} vs {want}")));
        }
    }
    Ok((true, format!("sech moments match E_n(1/2) for n ≤ {depth}, sixth = {m6:.12}")))
}

fn check_moments(n: usize, pmax: u32, tol: f64) -> Result<(bool, String), CliError> {
    let (pm, depth) = (pmax.min(3), n.min(10));
    for p in 1..=pm {
        for i in 0..=depth {
            if !convolved_moment_check(p, i, tol)? {
                return Ok((false, format!("convolved moment n={i} p={p} off by more than {tol:e}")));
            }
        }
    }
    Ok((true, format!("numeric moments of the p-fold sum match, n ≤ {depth}, p ≤ {pm}")))
}

pub fn verify(a: &VerifyArgs) -> Result<Report, CliError> {
    if let Some(name) = &a.only {
        if !CHECKS.contains(&name.as_str()) {
            return Err(CliError::Usage(format!(
                "unknown check `{name}`; expected one of {}",
                CHECKS.join(", ")
            )));
        }
    }
    let (n, pmax) = (a.n as usize, a.pmax);
    let mut checks = Vec::new();
    for name in CHECKS {
        if a.only.as_deref().is_some_and(|o| o != name) {
            continue;
        }
        let outcome = match name {
            "pipelines" => check_pipelines(n, pmax),
            "orthogonality" => check_orthogonality(n, pmax),
            "explicit" => check_explicit(n, pmax),
            "convolution" => Ok(check_convolution(n, pmax)),
            "paths" => check_paths(n, pmax),
            "btable" => check_btable(n, pmax),
            "conjecture" => check_conjecture(pmax),
            "integrality" => check_integrality(n),
            "quadrature" => check_quadrature(n, a.tol),
            "moments" => check_moments(n, pmax, a.tol),
            _ => unreachable!(),
        };
        let (pass, detail) = outcome.unwrap_or_else(|e| (false, format!("error: {e}")));
        checks.push(Check { name, pass, detail });
    }
    let pass = checks.iter().all(|c| c.pass);
    let rows: Vec<Vec<String>> = checks
        .iter()
        .map(|c| vec![if c.pass { "PASS" } else { "FAIL" }.into(), c.name.into(), c.detail.clone()])
        .collect();
    let mut plain = align(&rows);
    let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name).collect();
    if failed.is_empty() {
        writeln!(plain, "all {} checks passed", checks.len()).unwrap();
    } else {
        writeln!(plain, "failed: {}", failed.join(", ")).unwrap();
    }
    let results: Vec<Value> = checks
        .iter()
        .map(|c| json!({"name": c.name, "pass": c.pass, "detail": c.detail}))
        .collect();
    Ok(Report {
        command: "verify",
        params: json!({"n": n, "pmax": pmax, "tol": a.tol, "only": a.only}),
        results: Value::Array(results),
        status: Some(("pass", pass)),
        plain,
        csv: None,
        latex: None,
        ok: pass,
    })
}
