//! `weylpark`: batch front end for the deformed Weyl module computations.
//!
//! Exit codes: 0 = pass, 1 = a requested check failed, 2 = usage error.

mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use report::{emit, run_parallel, Format, Report, SCHEMA_VERSION};
use weylpark_core::arith::{higher_catalan, Int};
use weylpark_core::combinatorics::{
    enumerate_a, enumerate_parking, parking_statistic, rho_of_xi, staircase, Partition,
    WeightVector,
};
use weylpark_core::degeneration::{
    alpha_experiment, bigraded_character_at, degree_formula, BigradedCharacter,
};
use weylpark_core::fock::{
    annihilation_identity_check, cocycle_formula, enumerate_sector, highest_weight_monomial,
    limit_character_lhs, limit_character_rhs, verify_cocycle, DiffOpElement, FockMonomial,
};
use weylpark_core::poly::IntPoly;
use weylpark_core::series::CharacterSeries;
use weylpark_core::symfunc::{frobenius_character, weight_multiplicity, KostkaTable};
use weylpark_core::wedge::{cyclic_closure, enumerate_admissible};

#[derive(Parser)]
#[command(
    name = "weylpark",
    version,
    about = "Deformed Weyl modules over two-variable matrix currents: dimensions, characters, parking functions, and semi-infinite wedge checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = false)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct XiOpts {
    /// Highest weight ξ as comma-separated parts, e.g. `2,0`.
    #[arg(long, value_delimiter = ',')]
    xi: Option<Vec<u32>>,
    /// Signature λ = (ξ_1−ξ_2, …, ξ_{r−1}−ξ_r); use with --s.
    #[arg(long, value_delimiter = ',')]
    lambda: Option<Vec<u32>>,
    /// Shift s = ξ_r for the signature form (default 0).
    #[arg(long)]
    s: Option<u32>,
    /// Matrix rank r.
    #[arg(long)]
    r: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckKind {
    Symmetry,
    Degree,
    Frobenius,
    Nindep,
}

#[derive(Subcommand)]
enum Command {
    /// Admissible-set count, cyclic closure dimension, and (for ξ = nε_1)
    /// the higher Catalan closed form; exit 1 on any mismatch.
    Dims {
        #[command(flatten)]
        xi: XiOpts,
        /// Truncation level N (default max(ξ_1, 1)).
        #[arg(long)]
        level: Option<i32>,
        /// Include the basis monomials as JSON arrays of cells.
        #[arg(long)]
        basis: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The bigraded character of V(ξ); `--check` runs a named invariant.
    Char {
        #[command(flatten)]
        xi: XiOpts,
        /// Truncation level N (default max(ξ_1, 1)).
        #[arg(long)]
        level: Option<i32>,
        #[arg(long, value_enum)]
        check: Option<CheckKind>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Enumerate ρ-parking functions: count, statistic histogram, and the
    /// orbit decomposition cross-check.
    Parking {
        /// Domain size of the parking functions.
        #[arg(long)]
        n: u32,
        /// ρ as comma-separated parts (default the staircase (n, …, 1)).
        #[arg(long, value_delimiter = ',')]
        rho: Option<Vec<u32>>,
        /// Derive ρ from a highest weight ξ instead.
        #[arg(long, value_delimiter = ',')]
        xi: Option<Vec<u32>>,
        /// Include the statistic histogram.
        #[arg(long)]
        histogram: bool,
        /// List the parking functions themselves.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// dim V(rε_1)^τ by admissible-set count against (r+1)^{r−1}.
    CoinvariantBound {
        /// Matrix rank r.
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Cocycle and annihilation-identity sweeps on the semi-infinite wedge.
    FockVerify {
        /// Matrix rank r.
        #[arg(long)]
        r: u32,
        /// Sector-relative depth bound for sample monomials.
        #[arg(long, default_value_t = 4)]
        depth: u32,
        /// Seed for the randomized extra samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Worker threads for the sweep (default WEYLPARK_JOBS or 1).
        #[arg(long, env = "WEYLPARK_JOBS", default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Compare Rec_x ch V((n+Nr)ε_1)⊗Det(−N) for N = 1..Nmax with the
    /// closed-form limit series, coefficient by coefficient up to x^D.
    LimitCheck {
        /// Charge of the limit sector.
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Matrix rank r.
        #[arg(long)]
        r: u32,
        #[arg(long = "Nmax", default_value_t = 3)]
        nmax: u32,
        #[arg(long = "D", default_value_t = 2)]
        depth: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// The α-map experiment: dimension of the submodule generated by the
    /// image vector vs dim V(nε_1). Reported only, never asserted.
    Alpha {
        /// Source highest weight nε_1.
        #[arg(long)]
        n: u32,
        /// Matrix rank r.
        #[arg(long)]
        r: u32,
        /// Truncation level N (default n + r).
        #[arg(long)]
        level: Option<i32>,
        #[command(flatten)]
        out: OutputOpts,
    },
}

struct UsageError(String);

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

fn parse_partition(parts: &[u32], what: &str) -> Result<Partition, UsageError> {
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(usage(format!(
            "{what} parts must be weakly decreasing, got {parts:?}"
        )));
    }
    Ok(Partition::new(parts.to_vec()))
}

fn resolve_xi(opts: &XiOpts) -> Result<(Partition, u32), UsageError> {
    let r = opts.r;
    if r == 0 {
        return Err(usage("r must be at least 1"));
    }
    let xi = match (&opts.xi, &opts.lambda) {
        (Some(parts), None) => parse_partition(parts, "--xi")?,
        (None, Some(lambda)) => {
            if lambda.len() + 1 != r as usize {
                return Err(usage(format!(
                    "--lambda needs r−1 = {} entries, got {}",
                    r - 1,
                    lambda.len()
                )));
            }
            let s = opts.s.unwrap_or(0);
            let mut parts = vec![0u32; r as usize];
            parts[r as usize - 1] = s;
            for i in (0..r as usize - 1).rev() {
                parts[i] = parts[i + 1] + lambda[i];
            }
            Partition::new(parts)
        }
        (Some(_), Some(_)) => return Err(usage("give either --xi or --lambda, not both")),
        (None, None) => return Err(usage("one of --xi or --lambda is required")),
    };
    if xi.len() > r as usize {
        return Err(usage(format!("ξ = {xi} has more than r = {r} parts")));
    }
    Ok((xi, r))
}

fn default_level(xi: &Partition) -> i32 {
    xi.first().max(1) as i32
}

fn int_json(v: &Int) -> Value {
    match v.to_i64() {
        Some(n) => json!(n),
        None => json!(v.to_string()),
    }
}

fn weight_json(w: &WeightVector) -> Value {
    json!(w.coords())
}

fn poly_json(p: &IntPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(e, c)| json!({"exp": e, "coeff": int_json(c)}))
            .collect(),
    )
}

fn character_records(ch: &BigradedCharacter) -> Vec<Value> {
    ch.entries()
        .map(|((w, x, y), d)| json!({"weight": weight_json(w), "x": x, "y": y, "dim": d}))
        .collect()
}

fn series_records(series: &CharacterSeries) -> Vec<Value> {
    let mut out = Vec::new();
    for ((w, x), poly) in series.entries() {
        for (y, c) in poly.terms() {
            out.push(json!({"x": x, "y": y, "weight": weight_json(w), "coeff": int_json(c)}));
        }
    }
    out
}

fn cmd_dims(
    xi: &XiOpts,
    level: Option<i32>,
    include_basis: bool,
) -> Result<(Report, bool), UsageError> {
    let (xi, r) = resolve_xi(xi)?;
    let level = level.unwrap_or_else(|| default_level(&xi));
    if level < 1 {
        return Err(usage("--level must be at least 1"));
    }
    let basis = cyclic_closure(&xi, r, level);
    let admissible = basis.admissible_count();
    let dim = basis.dimension();
    let saturated = basis.basis_matches_admissible();
    let catalan = (xi.len() <= 1).then(|| higher_catalan(r as u64, xi.size() as u64));
    let pass = dim == admissible
        && saturated
        && catalan.as_ref().is_none_or(|c| *c == Int::from(dim as i64));

    let mut body = json!({
        "schema_version": SCHEMA_VERSION,
        "xi": xi.parts(),
        "r": r,
        "level": level,
        "admissible_count": admissible,
        "closure_dim": dim,
        "basis_is_admissible": saturated,
        "pass": pass,
    });
    if let Some(c) = &catalan {
        body["catalan"] = int_json(c);
    }
    if include_basis {
        body["basis"] = Value::Array(
            enumerate_admissible(&xi, r)
                .iter()
                .map(|h| Value::Array(h.cells().iter().map(|c| json!([c.row, c.col])).collect()))
                .collect(),
        );
    }
    let catalan_str = catalan.map_or_else(|| "-".to_string(), |c| c.to_string());
    let row = vec![
        xi.to_string(),
        r.to_string(),
        level.to_string(),
        admissible.to_string(),
        dim.to_string(),
        catalan_str.clone(),
        pass.to_string(),
    ];
    let pretty = format!(
        "V({xi}) r={r} N={level}: admissible {admissible}, closure {dim}, catalan {catalan_str} — {}",
        if pass { "ok" } else { "MISMATCH" }
    );
    Ok((
        Report::new(
            body,
            &[
                "xi",
                "r",
                "level",
                "admissible",
                "closure_dim",
                "catalan",
                "pass",
            ],
            vec![row],
            pretty,
        ),
        pass,
    ))
}

fn cmd_char(
    xi: &XiOpts,
    level: Option<i32>,
    check: Option<CheckKind>,
) -> Result<(Report, bool), UsageError> {
    let (xi, r) = resolve_xi(xi)?;
    let level = level.unwrap_or_else(|| default_level(&xi));
    if level < 1 {
        return Err(usage("--level must be at least 1"));
    }
    let ch = bigraded_character_at(&xi, r, level);

    let (pass, check_detail) = match check {
        None => (true, Value::Null),
        Some(CheckKind::Symmetry) => {
            let ok = ch.is_xy_symmetric();
            let table: Vec<Value> = ch
                .xy_table()
                .iter()
                .map(|(&(x, y), &d)| json!({"x": x, "y": y, "count": d}))
                .collect();
            (
                ok,
                json!({"name": "symmetry", "pass": ok, "xy_table": table}),
            )
        }
        Some(CheckKind::Degree) => {
            let formula = degree_formula(&xi, r);
            let got = ch.max_x() as i64;
            (
                got == formula,
                json!({"name": "degree", "pass": got == formula, "max_x": got, "formula": formula}),
            )
        }
        Some(CheckKind::Frobenius) => {
            let exp = frobenius_character(&xi, r);
            let mut table = KostkaTable::new();
            let mut diffs = Vec::new();
            for weight in ch.weights() {
                let got = ch.weight_x_poly(&weight);
                let want = weight_multiplicity(&exp, &weight, &mut table);
                if got != want {
                    diffs.push(json!({
                        "weight": weight_json(&weight),
                        "filtration": poly_json(&got),
                        "frobenius": poly_json(&want),
                    }));
                }
            }
            let ok = diffs.is_empty();
            (ok, json!({"name": "frobenius", "pass": ok, "diffs": diffs}))
        }
        Some(CheckKind::Nindep) => {
            let other = bigraded_character_at(&xi, r, level + 1);
            let ok = ch.same_entries(&other);
            (
                ok,
                json!({"name": "nindep", "pass": ok, "levels": [level, level + 1]}),
            )
        }
    };

    let body = json!({
        "schema_version": SCHEMA_VERSION,
        "xi": xi.parts(),
        "r": r,
        "level": level,
        "total_dim": ch.total_dimension(),
        "entries": character_records(&ch),
        "check": check_detail,
        "pass": pass,
    });
    let rows: Vec<Vec<String>> = ch
        .entries()
        .map(|((w, x, y), d)| {
            vec![
                w.coords()
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                x.to_string(),
                y.to_string(),
                d.to_string(),
            ]
        })
        .collect();
    let mut pretty = format!(
        "ch_(x,y) V({xi}) r={r} N={level}: dim {}, max x {}, max y {}\n",
        ch.total_dimension(),
        ch.max_x(),
        ch.max_y()
    );
    for ((w, x, y), d) in ch.entries() {
        pretty.push_str(&format!("  weight {w}: x^{x} y^{y} dim {d}\n"));
    }
    if let Some(kind) = check {
        pretty.push_str(&format!(
            "check {:?}: {}\n",
            kind,
            if pass { "pass" } else { "FAIL" }
        ));
        if !pass {
            pretty.push_str(&format!("{check_detail}\n"));
        }
    }
    Ok((
        Report::new(body, &["weight", "x", "y", "dim"], rows, pretty),
        pass,
    ))
}

fn cmd_parking(
    n: u32,
    rho: Option<&[u32]>,
    xi: Option<&[u32]>,
    histogram: bool,
    list: bool,
) -> Result<(Report, bool), UsageError> {
    let rho = match (rho, xi) {
        (Some(_), Some(_)) => return Err(usage("give either --rho or --xi, not both")),
        (Some(parts), None) => parse_partition(parts, "--rho")?,
        (None, Some(parts)) => rho_of_xi(&parse_partition(parts, "--xi")?),
        (None, None) => staircase(n),
    };
    let functions = enumerate_parking(n, &rho);
    let count = functions.len();
    let mut hist: std::collections::BTreeMap<u64, usize> = std::collections::BTreeMap::new();
    for f in &functions {
        *hist.entry(parking_statistic(f)).or_insert(0) += 1;
    }
    let orbits = enumerate_a(n, &rho);
    let orbit_total: Int = orbits
        .iter()
        .map(|a| weylpark_core::arith::multinomial(a))
        .sum();
    let pass = orbit_total == Int::from(count as i64);

    let mut body = json!({
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "rho": rho.parts(),
        "count": count,
        "orbit_count": orbits.len(),
        "orbit_total": int_json(&orbit_total),
        "pass": pass,
    });
    if histogram {
        body["histogram"] = Value::Array(
            hist.iter()
                .map(|(stat, c)| json!({"statistic": stat, "count": c}))
                .collect(),
        );
    }
    if list {
        body["functions"] = Value::Array(functions.iter().map(|f| json!(f.values())).collect());
    }
    let rows = hist
        .iter()
        .map(|(stat, c)| {
            vec![
                n.to_string(),
                rho.to_string(),
                stat.to_string(),
                c.to_string(),
            ]
        })
        .collect();
    let mut pretty = format!(
        "ρ-parking functions, n={n}, ρ={rho}: count {count} (orbit decomposition {orbit_total}) — {}\n",
        if pass { "ok" } else { "MISMATCH" }
    );
    if histogram {
        for (stat, c) in &hist {
            pretty.push_str(&format!("  statistic {stat}: {c}\n"));
        }
    }
    if list {
        for f in &functions {
            pretty.push_str(&format!("  {:?}\n", f.values()));
        }
    }
    Ok((
        Report::new(body, &["n", "rho", "statistic", "count"], rows, pretty),
        pass,
    ))
}

fn cmd_coinvariant_bound(r: u32) -> Result<(Report, bool), UsageError> {
    if r == 0 {
        return Err(usage("r must be at least 1"));
    }
    let xi = Partition::single_row(r);
    let tau = WeightVector::tau(r);
    let count = enumerate_admissible(&xi, r)
        .iter()
        .filter(|h| h.weight(r) == tau)
        .count();
    let expected = Int::from(r as i64 + 1).pow(r - 1);
    let pass = Int::from(count as i64) == expected;
    let body = json!({
        "schema_version": SCHEMA_VERSION,
        "r": r,
        "tau_weight_dim": count,
        "parking_count": int_json(&expected),
        "pass": pass,
    });
    let pretty = format!(
        "dim V({r}ε_1)^τ = {count}, (r+1)^(r−1) = {expected} — {}",
        if pass { "ok" } else { "MISMATCH" }
    );
    let rows = vec![vec![
        r.to_string(),
        count.to_string(),
        expected.to_string(),
        pass.to_string(),
    ]];
    Ok((
        Report::new(
            body,
            &["r", "tau_weight_dim", "parking_count", "pass"],
            rows,
            pretty,
        ),
        pass,
    ))
}

struct CocycleConfig {
    a: u32,
    b: u32,
    i: i64,
    j: i64,
    g1: (u32, u32),
    g2: (u32, u32),
}

fn cocycle_samples(r: u32, depth: u32, seed: u64) -> Vec<FockMonomial> {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut samples: Vec<FockMonomial> = vec![FockMonomial::vacuum()];
    for n in -1..=3i64 {
        samples.push(highest_weight_monomial(n, r));
    }
    for n in 0..=1i64 {
        samples.extend(enumerate_sector(n, r, depth.min(2)));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    for n in 0..=2i64 {
        let pool = enumerate_sector(n, r, depth.min(3));
        samples.extend(pool.choose_multiple(&mut rng, 3).cloned());
    }
    samples.sort_unstable();
    samples.dedup();
    samples
}

fn cmd_fock_verify(
    r: u32,
    depth: u32,
    seed: u64,
    jobs: usize,
) -> Result<(Report, bool), UsageError> {
    if r == 0 {
        return Err(usage("r must be at least 1"));
    }
    let samples = cocycle_samples(r, depth, seed);
    let pairs: Vec<((u32, u32), (u32, u32))> = if r == 1 {
        vec![((1, 1), (1, 1))]
    } else {
        vec![
            ((1, 1), (1, 1)), // Tr = 1
            ((1, 2), (2, 1)), // Tr = 1
            ((1, 1), (2, 2)), // Tr = 0
            ((1, 2), (1, 2)), // Tr = 0
        ]
    };
    let mut configs = Vec::new();
    for (a, b) in [(0u32, 0u32), (0, 1), (1, 0), (1, 1), (0, 2), (2, 0)] {
        for i in -3..=3i64 {
            for j in -3..=3i64 {
                for &(g1, g2) in &pairs {
                    configs.push(CocycleConfig { a, b, i, j, g1, g2 });
                }
            }
        }
    }
    let cocycle_results = run_parallel(jobs, configs, |cfg| {
        let op_a = DiffOpElement::unit(cfg.g1.0, cfg.g1.1, r, cfg.i, cfg.a);
        let op_b = DiffOpElement::unit(cfg.g2.0, cfg.g2.1, r, cfg.j, cfg.b);
        let want = cocycle_formula(&op_a, &op_b);
        let entry = |status: &str, got: Value| {
            json!({
                "a": cfg.a, "b": cfg.b, "i": cfg.i, "j": cfg.j,
                "g1": [cfg.g1.0, cfg.g1.1], "g2": [cfg.g2.0, cfg.g2.1],
                "want": want.to_string(), "got": got, "status": status,
            })
        };
        match verify_cocycle(&op_a, &op_b, &samples) {
            Ok(got) if got == want => (true, entry("ok", json!(got.to_string()))),
            Ok(got) => (false, entry("formula-mismatch", json!(got.to_string()))),
            Err(e) => (false, entry("non-scalar-defect", json!(e.to_string()))),
        }
    });

    let mut annihilation_configs = Vec::new();
    for col in 1..=r {
        for mode in -2..=2i64 {
            annihilation_configs.push((col, mode));
        }
    }
    let annihilation_samples: Vec<FockMonomial> = (0..=3i64)
        .flat_map(|n| enumerate_sector(n, r, depth.min(4)))
        .collect();
    let annihilation_results = run_parallel(jobs, annihilation_configs, |&(col, mode)| {
        let ok = annihilation_identity_check(col, mode, &annihilation_samples, r);
        (
            ok,
            json!({"col": col, "mode": mode, "samples": annihilation_samples.len(), "pass": ok}),
        )
    });

    let pass =
        cocycle_results.iter().all(|(ok, _)| *ok) && annihilation_results.iter().all(|(ok, _)| *ok);
    let failed_cocycle = cocycle_results.iter().filter(|(ok, _)| !ok).count();
    let failed_annihilation = annihilation_results.iter().filter(|(ok, _)| !ok).count();

    let body = json!({
        "schema_version": SCHEMA_VERSION,
        "r": r,
        "depth": depth,
        "seed": seed,
        "samples": samples.len(),
        "cocycle": cocycle_results.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
        "annihilation": annihilation_results.iter().map(|(_, v)| v.clone()).collect::<Vec<_>>(),
        "pass": pass,
    });
    let mut rows: Vec<Vec<String>> = Vec::new();
    for (ok, v) in &cocycle_results {
        rows.push(vec![
            "cocycle".into(),
            format!(
                "a={} b={} i={} j={} g1={} g2={}",
                v["a"], v["b"], v["i"], v["j"], v["g1"], v["g2"]
            ),
            v["status"].as_str().unwrap_or("").into(),
            ok.to_string(),
        ]);
    }
    for (ok, v) in &annihilation_results {
        rows.push(vec![
            "annihilation".into(),
            format!("col={} mode={}", v["col"], v["mode"]),
            if *ok { "ok".into() } else { "fail".into() },
            ok.to_string(),
        ]);
    }
    let pretty = format!(
        "fock verification r={r} depth={depth}: {} cocycle identities ({failed_cocycle} failed), {} annihilation modes ({failed_annihilation} failed) on {} samples — {}",
        cocycle_results.len(),
        annihilation_results.len(),
        samples.len(),
        if pass { "pass" } else { "FAIL" }
    );
    Ok((
        Report::new(body, &["kind", "config", "status", "pass"], rows, pretty),
        pass,
    ))
}

fn cmd_limit_check(n: i64, r: u32, nmax: u32, depth: u32) -> Result<(Report, bool), UsageError> {
    if r == 0 {
        return Err(usage("r must be at least 1"));
    }
    if nmax == 0 {
        return Err(usage("--Nmax must be at least 1"));
    }
    if n + r as i64 <= 0 && n != 0 {
        return Err(usage("n + Nr must be non-negative for every stage"));
    }
    let rhs = limit_character_rhs(n, r, depth);
    let stages: Vec<(u32, CharacterSeries)> = (1..=nmax)
        .map(|stage| (stage, limit_character_lhs(n, r, stage, depth)))
        .collect();
    let last = &stages.last().unwrap().1;
    let stabilized = if nmax >= 2 {
        stages[nmax as usize - 2].1.agrees_with(last, depth)
    } else {
        true
    };
    let matches_rhs = last.agrees_with(&rhs, depth);
    let pass = stabilized && matches_rhs;
    let divergent = last.first_disagreement(&rhs, depth).or_else(|| {
        if nmax >= 2 {
            stages[nmax as usize - 2].1.first_disagreement(last, depth)
        } else {
            None
        }
    });

    // per-coefficient agreement table
    let mut keys: std::collections::BTreeSet<(WeightVector, u32)> =
        std::collections::BTreeSet::new();
    for ((w, x), _) in rhs.entries() {
        keys.insert((w.clone(), *x));
    }
    for (_, lhs) in &stages {
        for ((w, x), _) in lhs.entries() {
            keys.insert((w.clone(), *x));
        }
    }
    let mut rows = Vec::new();
    let mut agreement = Vec::new();
    for (w, x) in &keys {
        let want = rhs.coeff(w, *x);
        let per_stage: Vec<IntPoly> = stages.iter().map(|(_, l)| l.coeff(w, *x)).collect();
        let agree = per_stage.last().unwrap() == &want;
        agreement.push(json!({
            "x": x,
            "weight": weight_json(w),
            "rhs": poly_json(&want),
            "lhs": per_stage.iter().map(poly_json).collect::<Vec<_>>(),
            "agree": agree,
        }));
        let mut row = vec![
            x.to_string(),
            w.coords()
                .iter()
                .map(|c| c.to_string())
                .collect::<Vec<_>>()
                .join(" "),
            want.display("y"),
        ];
        row.extend(per_stage.iter().map(|p| p.display("y")));
        row.push(agree.to_string());
        rows.push(row);
    }

    let body = json!({
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "r": r,
        "nmax": nmax,
        "depth": depth,
        "rhs": series_records(&rhs),
        "lhs": stages
            .iter()
            .map(|(stage, s)| json!({"stage": stage, "entries": series_records(s)}))
            .collect::<Vec<_>>(),
        "agreement": agreement,
        "stabilized": stabilized,
        "matches_rhs": matches_rhs,
        "divergent_x": divergent,
        "pass": pass,
    });
    let mut pretty = format!(
        "limit character n={n} r={r}, stages 1..={nmax}, depth x^{depth}: {}\n",
        if pass { "agree" } else { "DISAGREE" }
    );
    if let Some(x) = divergent {
        pretty.push_str(&format!("  first divergent coefficient at x^{x}\n"));
    }
    for (w, x) in &keys {
        pretty.push_str(&format!(
            "  x^{x} e^{w}: rhs {} | lhs(N={nmax}) {}\n",
            rhs.coeff(w, *x).display("y"),
            last.coeff(w, *x).display("y"),
        ));
    }
    let mut headers: Vec<String> = vec!["x".into(), "weight".into(), "rhs".into()];
    headers.extend((1..=nmax).map(|s| format!("lhs_N{s}")));
    headers.push("agree".into());
    Ok((Report::with_headers(body, headers, rows, pretty), pass))
}

fn cmd_alpha(n: u32, r: u32, level: Option<i32>) -> Result<(Report, bool), UsageError> {
    if r == 0 {
        return Err(usage("r must be at least 1"));
    }
    let level = level.unwrap_or((n + r) as i32);
    if level < 1 {
        return Err(usage("--level must be at least 1"));
    }
    let rep = alpha_experiment(n, r, level);
    let body = json!({
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "r": r,
        "level": level,
        "generated_dim": rep.generated_dim,
        "target_dim": rep.target_dim,
        "matches": rep.matches(),
        "note": "injectivity evidence only; never asserted",
    });
    let pretty = format!(
        "alpha experiment n={n} r={r} N={level}: generated submodule dim {} vs dim V({n}ε_1) = {} — {}",
        rep.generated_dim,
        rep.target_dim,
        if rep.matches() { "consistent with injectivity" } else { "dimension drop" }
    );
    let rows = vec![vec![
        n.to_string(),
        r.to_string(),
        level.to_string(),
        rep.generated_dim.to_string(),
        rep.target_dim.to_string(),
        rep.matches().to_string(),
    ]];
    Ok((
        Report::new(
            body,
            &["n", "r", "level", "generated_dim", "target_dim", "matches"],
            rows,
            pretty,
        ),
        true, // non-gating by design
    ))
}

fn run(cli: Cli) -> Result<(Report, bool, Format, Option<PathBuf>), UsageError> {
    match cli.command {
        Command::Dims {
            xi,
            level,
            basis,
            out,
        } => {
            let (report, pass) = cmd_dims(&xi, level, basis)?;
            Ok((report, pass, out.format, out.output))
        }
        Command::Char {
            xi,
            level,
            check,
            out,
        } => {
            let (report, pass) = cmd_char(&xi, level, check)?;
            Ok((report, pass, out.format, out.output))
        }
        Command::Parking {
            n,
            rho,
            xi,
            histogram,
            list,
            out,
        } => {
            let (report, pass) = cmd_parking(n, rho.as_deref(), xi.as_deref(), histogram, list)?;
            Ok((report, pass, out.format, out.output))
        }
        Command::CoinvariantBound { r, out } => {
            let (report, pass) = cmd_coinvariant_bound(r)?;
            Ok((report, pass, out.format, out.output))
        }
        Command::FockVerify {
            r,
            depth,
            seed,
            jobs,
            out,
        } => {
            let (report, pass) = cmd_fock_verify(r, depth, seed, jobs)?;
            Ok((report, pass, out.format, out.output))
        }
        Command::LimitCheck {
            n,
            r,
            nmax,
            depth,
            out,
        } => {
            let (report, pass) = cmd_limit_check(n, r, nmax, depth)?;
            Ok((report, pass, out.format, out.output))
        }
        Command::Alpha { n, r, level, out } => {
            let (report, pass) = cmd_alpha(n, r, level)?;
            Ok((report, pass, out.format, out.output))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((report, pass, format, output)) => {
            if let Err(e) = emit(&report, format, output.as_ref()) {
                eprintln!("error: failed to write report: {e}");
                return ExitCode::from(1);
            }
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
