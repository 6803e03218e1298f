use std::fmt::Write as _;
use std::fs;

use binseq::bounds::{self, BoundReport};
use binseq::hadamard::{self, gram_check, GramReport, PMMatrix};
use binseq::pcoms::{self, search::SearchConfig, Catalog, CatalogDiff, PComSFamily};
use binseq::runstruct::{cyclic_run_vector, RunPattern};
use binseq::schur::{self, orbits::weight_histogram, CirculantOrbit};
use binseq::BinarySequence;
use serde_json::{json, Value};

use crate::output::Outcome;
use crate::{BoundKind, BoundsArgs, Case, Cli, Command, ConstructArgs, ConstructKind, SearchArgs, VerifyArgs};

type Res<T> = Result<T, String>;

fn lib<T>(r: binseq::Result<T>) -> Res<T> {
    r.map_err(|e| e.to_string())
}

fn need<T>(v: Option<T>, flag: &str) -> Res<T> {
    v.ok_or_else(|| format!("--{flag} is required here"))
}

fn seq(text: &str) -> Res<BinarySequence> {
    lib(text.parse())
}

pub fn run(cli: &Cli) -> Res<Outcome> {
    match &cli.command {
        Command::Analyze { seq } => analyze(seq),
        Command::Search(a) => search(a, cli.shards),
        Command::Bounds(a) => bounds_cmd(a),
        Command::Verify(a) => verify(a),
        Command::Construct(a) => construct(a, cli.format),
        Command::Schur { n } => schur_cmd(*n),
    }
}

fn analyze(text: &str) -> Res<Outcome> {
    let x = seq(text)?;
    let ac = x.autocorrelation();
    let orbit = CirculantOrbit::of(&x);
    let mut notes = vec![];
    let runs = match cyclic_run_vector(&x) {
        Ok(r) => Some(r),
        Err(e) => {
            notes.push(e.to_string());
            None
        }
    };
    let ones = runs.as_ref().map(|_| lib(binseq::runstruct::count_run_pattern(&x, &RunPattern::single(1))));
    let ones = ones.transpose()?;
    let json = json!({
        "seq": x.to_string(),
        "n": x.len(),
        "weight": x.weight(),
        "autocorrelation": ac.values,
        "two_level": ac.two_level(),
        "runs": runs.as_ref().map(|r| &r.lengths),
        "l": runs.as_ref().map(|r| r.l),
        "n_r1": ones,
        "orbit": orbit,
        "notes": notes,
    });
    let mut text = String::new();
    let _ = writeln!(text, "sequence     {x}");
    let _ = writeln!(text, "length       {}", x.len());
    let _ = writeln!(text, "weight       {}", x.weight());
    let _ = writeln!(text, "autocorr     {:?}", ac.values);
    match ac.two_level() {
        Some(d) => {
            let _ = writeln!(text, "two-level    d = {d}");
        }
        None => {
            let _ = writeln!(text, "two-level    no");
        }
    }
    if let Some(r) = &runs {
        let _ = writeln!(text, "runs         {:?}", r.lengths);
        let _ = writeln!(text, "l            {}", r.l);
        let _ = writeln!(text, "N(R1)        {}", ones.unwrap_or(0));
    }
    let _ = writeln!(
        text,
        "orbit        size {} period {} free {} symmetric {}",
        orbit.size, orbit.d, orbit.free, orbit.sym
    );
    for n in &notes {
        let _ = writeln!(text, "note         {n}");
    }
    let mut csv = String::from("k,autocorrelation\n");
    for (k, v) in ac.values.iter().enumerate() {
        let _ = writeln!(csv, "{k},{v}");
    }
    Ok(Outcome { pass: true, json, text, csv: Some(csv) })
}

fn catalog_csv(c: &Catalog) -> String {
    let mut out = String::from("n,q,c,members\n");
    for (q, cc, f) in c.families() {
        let _ = writeln!(out, "{},{q},{cc},{}", c.n, f.join(" "));
    }
    out
}

fn search(a: &SearchArgs, shards: usize) -> Res<Outcome> {
    let cfg = SearchConfig { multiset: a.multiset, max_nodes: a.max_nodes, shards, ..SearchConfig::new(a.qmax) };
    let (catalog, stats) = lib(pcoms::search_with_stats(a.n, &cfg))?;
    let diff: Option<CatalogDiff> = match pcoms::golden_catalog(a.n) {
        Ok(g) => Some(lib(pcoms::diff_catalogs(&catalog, &g))?),
        Err(_) => None,
    };
    let pass = match &diff {
        None => true,
        Some(d) if a.strict_paper => d.exact(),
        Some(d) => d.exact() || d.substantiated(),
    };
    let mut text = String::new();
    let _ = writeln!(text, "n = {}, q <= {}: {} families", a.n, a.qmax, catalog.family_count());
    for e in &catalog.entries {
        let _ = writeln!(text, "  ({}, {:>3}): {}", e.q, e.c, e.families.len());
    }
    let _ = writeln!(text, "pool {} orbits, {} nodes visited (estimate {})", stats.pool, stats.nodes, stats.estimate);
    if let Some(d) = &diff {
        let _ = writeln!(
            text,
            "reference: {} matched, {} missing, {} extra; exact {}, substantiated {}",
            d.matched.len(),
            d.missing.len(),
            d.extra.len(),
            d.exact(),
            d.substantiated()
        );
        for m in &d.missing {
            let why = match (&m.valid, &m.split) {
                (false, _) => "not compatible".to_string(),
                (true, Some((l, r))) => format!("splits into {l:?} and {r:?}"),
                (true, None) => "not found".to_string(),
            };
            let _ = writeln!(text, "  missing ({}, {}) {:?}: {why}", m.q, m.c, m.family);
        }
    }
    let json = json!({
        "catalog": catalog,
        "stats": {
            "pool": stats.pool,
            "estimate": stats.estimate.to_string(),
            "nodes": stats.nodes,
            "compatible_sets": stats.compatible_sets,
        },
        "diff": diff.as_ref().map(|d| json!({
            "exact": d.exact(),
            "substantiated": d.substantiated(),
            "matched": d.matched,
            "missing": d.missing,
            "extra": d.extra,
        })),
    });
    Ok(Outcome { pass, json, text, csv: Some(catalog_csv(&catalog)) })
}

fn bound_text(r: &BoundReport) -> String {
    let params: Vec<String> = r.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let mut t = format!("bound({}) = {}", params.join(" "), r.value);
    if !r.applicable {
        t.push_str(" [inapplicable]");
    }
    if let Some(o) = r.oracle {
        let _ = write!(t, ", exact count {o}");
    }
    t.push('\n');
    for n in &r.notes {
        let _ = writeln!(t, "  {n}");
    }
    t
}

const BOUND_CSV_HEADER: &str = "n,q,c,a,value,oracle,applicable,dominated\n";

fn bound_csv_row(r: &BoundReport) -> String {
    let p = |k: &str| r.params.get(k).map(|v| v.to_string()).unwrap_or_default();
    format!(
        "{},{},{},{},{},{},{},{}\n",
        p("n"),
        p("q"),
        p("c"),
        p("a"),
        r.value,
        r.oracle.map(|o| o.to_string()).unwrap_or_default(),
        r.applicable,
        r.dominated()
    )
}

fn single_bound(r: BoundReport) -> Res<Outcome> {
    Ok(Outcome {
        pass: r.dominated(),
        json: serde_json::to_value(&r).map_err(|e| e.to_string())?,
        text: bound_text(&r),
        csv: Some(format!("{BOUND_CSV_HEADER}{}", bound_csv_row(&r))),
    })
}

fn bounds_cmd(a: &BoundsArgs) -> Res<Outcome> {
    match a.kind {
        BoundKind::Family => {
            let r = lib(bounds::bound_b(need(a.n, "n")?, need(a.q, "q")?, need(a.c, "c")?, need(a.a, "a")?))?;
            single_bound(r)
        }
        BoundKind::Sweep => sweep(need(a.n, "n")?, need(a.q, "q")?),
        BoundKind::Circulant => single_bound(lib(bounds::circulant_hadamard_bound(need(a.m, "m")?))?),
        BoundKind::OneCore => single_bound(lib(bounds::one_core_bound(need(a.n, "n")? as u64))?),
        BoundKind::TwoCore => single_bound(lib(bounds::two_core_bound(need(a.n, "n")?))?),
        BoundKind::Gs => {
            let s = need(a.sums.clone(), "sums")?;
            let s: [i64; 4] = s.try_into().map_err(|_| "--sums takes four values".to_string())?;
            single_bound(lib(bounds::gs_bound(need(a.n, "n")?, s))?)
        }
        BoundKind::Perfect => {
            let case = match need(a.case, "case")? {
                Case::D1 => bounds::PerfectCase::D1,
                Case::D2First => bounds::PerfectCase::D2First,
                Case::D2Second => bounds::PerfectCase::D2Second,
            };
            single_bound(lib(bounds::perfect_bounds(need(a.u, "u")?, case))?)
        }
        BoundKind::PerfectParams => {
            let n = need(a.n, "n")?;
            let c = lib(bounds::perfect_case_params(n))?;
            let mut text = format!("n = {n}\n");
            let mut csv = String::from("n,d,a\n");
            for p in &c {
                let _ = writeln!(text, "  d = {:>2}, a = {}", p.d, p.a);
                let _ = writeln!(csv, "{n},{},{}", p.d, p.a);
            }
            Ok(Outcome { pass: true, json: json!({ "n": n, "candidates": c }), text, csv: Some(csv) })
        }
    }
}

/// Every `(c, a)` for one `(n, q)`, one CSV row each.
fn sweep(n: usize, q: usize) -> Res<Outcome> {
    let table = lib(bounds::general::family_count_table(n, q))?;
    let nq = (n * q) as i64;
    let mut rows = vec![];
    for c in -nq..=nq {
        for a in 0..=n * q {
            let mut r = lib(bounds::bound_b_in(n, q, c, a))?;
            if r.applicable {
                if let Some(t) = &table {
                    r.oracle = Some(t.get(&(a, c)).copied().unwrap_or(0));
                }
            }
            if r.value > 0u32.into() || r.oracle.unwrap_or(0) > 0 {
                rows.push(r);
            }
        }
    }
    let pass = rows.iter().all(|r| r.dominated());
    let mut csv = BOUND_CSV_HEADER.to_string();
    let mut text = String::new();
    for r in &rows {
        csv.push_str(&bound_csv_row(r));
        text.push_str(&bound_text(r));
    }
    let _ = writeln!(text, "{} nonzero points, dominated {pass}", rows.len());
    let json = serde_json::to_value(&rows).map_err(|e| e.to_string())?;
    Ok(Outcome { pass, json, text, csv: Some(csv) })
}

fn read_matrix(path: &std::path::Path) -> Res<PMMatrix> {
    let raw = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let parsed = if raw.trim_start().starts_with('{') {
        serde_json::from_str(&raw).map_err(|e| e.to_string())
    } else {
        lib(PMMatrix::parse(&raw))
    };
    parsed.map_err(|e| format!("{}: {e}", path.display()))
}

fn gram_summary(name: &str, r: &GramReport, scale: i64) -> Value {
    json!({
        "name": name,
        "rows": r.rows,
        "cols": r.cols,
        "expected_scale": scale,
        "pass": r.pass(),
        "first_failure": r.first_failure,
    })
}

fn gram_line(name: &str, r: &GramReport, scale: i64) -> String {
    match r.first_failure {
        None => format!("{name}: {}x{} pass, scale {scale}\n", r.rows, r.cols),
        Some((i, j, v)) => format!("{name}: {}x{} FAIL, rows {i} and {j} give {v}\n", r.rows, r.cols),
    }
}

fn verify(a: &VerifyArgs) -> Res<Outcome> {
    let mut items: Vec<(String, PMMatrix, i64)> = vec![];
    if a.examples {
        for e in lib(hadamard::ph_examples())? {
            items.push((e.name.to_string(), e.matrix, e.scale));
        }
    }
    for f in &a.files {
        let m = read_matrix(f)?;
        let s = a.scale.unwrap_or(m.cols() as i64);
        items.push((f.display().to_string(), m, s));
    }
    if items.is_empty() {
        return Err("nothing to verify: give matrix files or --examples".into());
    }
    let mut pass = true;
    let mut text = String::new();
    let mut csv = String::from("name,rows,cols,expected_scale,pass,fail_i,fail_j,fail_value\n");
    let mut json = vec![];
    for (name, m, s) in &items {
        let r = gram_check(m, Some(*s));
        pass &= r.pass();
        text.push_str(&gram_line(name, &r, *s));
        let (i, j, v) = r.first_failure.map_or((String::new(), String::new(), String::new()), |(i, j, v)| {
            (i.to_string(), j.to_string(), v.to_string())
        });
        let _ = writeln!(csv, "{name},{},{},{s},{},{i},{j},{v}", r.rows, r.cols, r.pass());
        json.push(gram_summary(name, &r, *s));
    }
    Ok(Outcome { pass, json: Value::Array(json), text, csv: Some(csv) })
}

fn family(inputs: &[String]) -> Res<PComSFamily> {
    let refs: Vec<&str> = inputs.iter().map(String::as_str).collect();
    lib(PComSFamily::parse(&refs))
}

fn construct(a: &ConstructArgs, format: crate::Format) -> Res<Outcome> {
    let arity = |k: usize| -> Res<Vec<BinarySequence>> {
        if a.inputs.len() != k {
            return Err(format!("{:?} takes {k} sequence(s), got {}", a.kind, a.inputs.len()));
        }
        a.inputs.iter().map(|s| seq(s)).collect()
    };
    let (matrix, scale) = match a.kind {
        ConstructKind::Circulant => {
            let x = arity(1)?;
            (hadamard::circulant_from(&x[0]), x[0].len() as i64)
        }
        ConstructKind::OneCore => {
            let x = arity(1)?;
            (hadamard::one_core_embed(&x[0]).matrix, x[0].len() as i64 + 1)
        }
        ConstructKind::TwoCore => {
            let x = arity(2)?;
            let m = lib(hadamard::two_core_embed(&x[0], &x[1]))?;
            (m, 2 * x[0].len() as i64 + 2)
        }
        ConstructKind::Gs => {
            let x = arity(4)?;
            let m = lib(hadamard::gs_embed(&x[0], &x[1], &x[2], &x[3]))?;
            (m, 4 * x[0].len() as i64)
        }
        ConstructKind::Ph => {
            let m = lib(hadamard::ph_from_pcoms(&family(&a.inputs)?))?;
            let s = m.cols() as i64;
            (m, s)
        }
        ConstructKind::PhPaired => {
            let cut = a.inputs.iter().position(|s| s == "/").ok_or("ph-paired needs `/` between the families")?;
            let (first, second) = (&a.inputs[..cut], &a.inputs[cut + 1..]);
            let m = lib(hadamard::ph_paired(&family(first)?, &family(second)?))?;
            let s = m.cols() as i64;
            (m, s)
        }
        ConstructKind::Example => {
            let name = a.inputs.join("");
            let e = lib(hadamard::ph_examples())?
                .into_iter()
                .find(|e| e.name.eq_ignore_ascii_case(&name))
                .ok_or_else(|| format!("no example named {name}"))?;
            (e.matrix, e.scale)
        }
    };
    let r = gram_check(&matrix, Some(scale));
    if format == crate::Format::Text && !r.pass() {
        eprint!("{}", gram_line("constructed", &r, scale));
    }
    let mut csv = String::new();
    for i in 0..matrix.rows() {
        let row: Vec<String> = (0..matrix.cols()).map(|j| matrix.get(i, j).to_string()).collect();
        csv.push_str(&row.join(","));
        csv.push('\n');
    }
    Ok(Outcome {
        pass: r.pass(),
        json: serde_json::to_value(&matrix).map_err(|e| e.to_string())?,
        text: matrix.to_text(),
        csv: Some(csv),
    })
}

fn schur_cmd(n: usize) -> Res<Outcome> {
    let orbits = lib(schur::enumerate_orbits(n))?;
    let necklaces = schur::necklace_count(n);
    let hist = weight_histogram(&orbits);
    let free = orbits.iter().filter(|o| o.free).count();
    let sym = orbits.iter().filter(|o| o.sym).count();
    let mut pass = necklaces == (orbits.len() as u64).into();
    let mut j = json!({
        "n": n,
        "orbits": orbits.len(),
        "necklace_count": necklaces.to_string(),
        "free": free,
        "symmetric": sym,
        "weight_histogram": hist,
    });
    let mut text =
        format!("n = {n}: {} rotation orbits ({free} free, {sym} symmetric), Burnside {necklaces}\n", orbits.len());
    if n <= 22 {
        let classes = lib(schur::decimation_classes(n))?.len();
        let burnside = schur::decimation::affine_burnside(n);
        pass &= classes as u128 == burnside;
        j["decimation_classes"] = json!(classes);
        j["affine_burnside"] = json!(burnside.to_string());
        let _ = writeln!(text, "decimation classes {classes}, affine Burnside {burnside}");
        let sd = lib(schur::dim_sd(n))?;
        let _ = writeln!(text, "decimated dimension: enumerated {}, printed formula {:?}", sd.enumerated, sd.formula);
        j["dim_sd"] = serde_json::to_value(&sd).map_err(|e| e.to_string())?;
    }
    if let Ok(p) = schur::even_odd_partition(n) {
        let _ = writeln!(
            text,
            "even weights: size {} closed {}; odd: size {} closed {}",
            p.even_size, p.even_closed, p.odd_size, p.odd_closed
        );
        j["parity"] = serde_json::to_value(&p).map_err(|e| e.to_string())?;
    }
    if let Ok(d) = schur::dim_sc_prime(n as u64) {
        pass &= d.matches;
        let _ = writeln!(text, "prime dimension: enumerated {}, formula {:?}", d.enumerated, d.formula);
        j["dim_sc_prime"] = serde_json::to_value(&d).map_err(|e| e.to_string())?;
    }
    let mut csv = String::from("weight,orbits\n");
    for (w, c) in &hist {
        let _ = writeln!(csv, "{w},{c}");
    }
    for (w, c) in &hist {
        let _ = writeln!(text, "  weight {w:>2}: {c}");
    }
    Ok(Outcome { pass, json: j, text, csv: Some(csv) })
}
