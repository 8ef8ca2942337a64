//! Subcommands. Each returns the artifact (stdout, or the `--out` file), a
//! verification summary (stderr) and an exit code, and re-checks its
//! output before reporting success.

use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{Map, Value};

use tps_core::classify::{classify, diagnose, is_closed_preorder, ClassifyOptions, Flag};
use tps_core::enumerate::{find_exhaustive, find_random, FlagFilter, MAX_EXHAUSTIVE_POINTS, MAX_RANDOM_POINTS};
use tps_core::function::{is_continuous, is_isotone, is_utility};
use tps_core::quotient::{
    check_flag_equivalences, check_quotient_closed, class_name, order_mismatch, projection_continuous, quotient_space,
};
use tps_core::separation::{extend_isotone, extend_with_pinning, perfectly_separate, separate, urysohn};
use tps_core::stream::{limit_family, limit_open_check, stream_separate, validate_exhaustion, Exhaustion};
use tps_core::utility::{utility_representation, verify_representation, Mode};
use tps_core::{Direction, Error, PointSet, PreorderedSpace};

use crate::format::{
    function_to_json, parse_set_arg, read_exhaustion, read_function, read_space, to_pretty, trace_records, write_text,
    SeparatorFile, SpaceFile,
};
use crate::report::{diagnosis_json, diagnosis_text, flags_line, set_text};
use crate::{dot, exit, CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String, stderr: String) -> Self {
        Outcome { code: exit::OK, stdout, stderr }
    }
}

/// Writes `artifact` to `out` when given, else returns it for stdout.
fn deliver(artifact: String, out: Option<&Path>) -> CliResult<String> {
    match out {
        Some(path) => {
            write_text(path, &artifact)?;
            Ok(String::new())
        }
        None => Ok(artifact),
    }
}

fn verify(ok: bool, what: &str) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::internal(format!("verification failed: {what}")))
    }
}

/// Parses `A`, `B` and checks them with point names in the messages: `A`
/// closed decreasing, `B` closed increasing, disjoint.
fn pair_args(ps: &PreorderedSpace, a: &str, b: &str) -> CliResult<(PointSet, PointSet)> {
    let (a, b) = (parse_set_arg(ps, a)?, parse_set_arg(ps, b)?);
    check_named_pair(ps, a, b)?;
    Ok((a, b))
}

fn check_named_pair(ps: &PreorderedSpace, a: PointSet, b: PointSet) -> CliResult<()> {
    if let Some(x) = a.intersection(&b).first() {
        return Err(CliError::invalid(format!("A and B intersect at {}", ps.topology().point(x))));
    }
    if !ps.is_closed_monotone(a, Direction::Decreasing) {
        return Err(CliError::invalid(format!("A = {} is not closed decreasing", set_text(ps, a))));
    }
    if !ps.is_closed_monotone(b, Direction::Increasing) {
        return Err(CliError::invalid(format!("B = {} is not closed increasing", set_text(ps, b))));
    }
    Ok(())
}

pub fn check(space: &Path, json: bool) -> CliResult<Outcome> {
    let ps = read_space(space)?;
    let d = diagnose(&ps, ClassifyOptions::default());
    verify(d.classification().implication_chain_holds(), "implication chain")?;
    let stdout = if json { to_pretty(&diagnosis_json(&ps, &d)) } else { diagnosis_text(&ps, &d) };
    Ok(Outcome::ok(stdout, String::new()))
}

pub fn separate_cmd(space: &Path, a: &str, b: &str, out: Option<&Path>) -> CliResult<Outcome> {
    let ps = read_space(space)?;
    let (a, b) = pair_args(&ps, a, b)?;
    let pair = separate(&ps, a, b)?;
    verify(pair.separates(&ps, a, b), "U, V open monotone, disjoint, containing A and B")?;
    let summary = format!(
        "verified: U = {} open decreasing ⊇ A, V = {} open increasing ⊇ B, U ∩ V = ∅\n",
        set_text(&ps, pair.u),
        set_text(&ps, pair.v)
    );
    Ok(Outcome::ok(deliver(to_pretty(&SeparatorFile::new(&ps, &pair)), out)?, summary))
}

pub fn urysohn_cmd(space: &Path, a: &str, b: &str, depth: Option<u32>, out: Option<&Path>) -> CliResult<Outcome> {
    let ps = read_space(space)?;
    let (a, b) = pair_args(&ps, a, b)?;
    let f = urysohn(&ps, a, b, depth)?;
    verify(is_continuous(&ps, &f), "continuity")?;
    verify(is_isotone(&ps, &f), "isotonicity")?;
    verify(a.is_subset(&f.zero_set()) && b.is_subset(&f.one_set()), "f = 0 on A and f = 1 on B")?;
    let artifact = to_pretty(&function_to_json(&ps, ps.full(), &f));
    Ok(Outcome::ok(deliver(artifact, out)?, "verified: continuous, isotone, f = 0 on A, f = 1 on B\n".into()))
}

pub fn extend_cmd(
    space: &Path,
    function: &Path,
    s: Option<&str>,
    a: Option<&str>,
    b: Option<&str>,
    out: Option<&Path>,
) -> CliResult<Outcome> {
    let ps = read_space(space)?;
    let (domain, f) = read_function(&ps, function)?;
    if let Some(s) = s {
        let s = parse_set_arg(&ps, s)?;
        if s != domain {
            return Err(CliError::invalid(format!(
                "--S {} differs from the function's domain {}",
                set_text(&ps, s),
                set_text(&ps, domain)
            )));
        }
    }
    let pinned = a.is_some() || b.is_some();
    let a = a.map(|a| parse_set_arg(&ps, a)).transpose()?.unwrap_or(PointSet::EMPTY);
    let b = b.map(|b| parse_set_arg(&ps, b)).transpose()?.unwrap_or(PointSet::EMPTY);
    check_named_pair(&ps, a, b)?;
    let result = if pinned { extend_with_pinning(&ps, domain, &f, a, b) } else { extend_isotone(&ps, domain, &f) };
    let big = result.map_err(|e| match e {
        Error::ConditionViolated { lower, upper, point } => CliError::new(
            exit::CONDITION,
            format!(
                "extension condition fails: D(f⁻¹[0,{lower}]) ∩ I(f⁻¹[{upper},1]) contains {}",
                ps.topology().point(point)
            ),
        ),
        other => other.into(),
    })?;
    verify(is_continuous(&ps, &big), "continuity")?;
    verify(is_isotone(&ps, &big), "isotonicity")?;
    verify(big.restrict(domain) == f, "F extends f")?;
    verify(a.is_subset(&big.zero_set()) && b.is_subset(&big.one_set()), "F = 0 on A and F = 1 on B")?;
    let mut summary = String::from("verified: continuous, isotone, F = f on S");
    if pinned {
        summary.push_str(", F = 0 on A, F = 1 on B");
    }
    summary.push('\n');
    let artifact = to_pretty(&function_to_json(&ps, ps.full(), &big));
    Ok(Outcome::ok(deliver(artifact, out)?, summary))
}

pub fn perfect_cmd(space: &Path, a: &str, b: &str, out: Option<&Path>) -> CliResult<Outcome> {
    let ps = read_space(space)?;
    let (a, b) = pair_args(&ps, a, b)?;
    let f = perfectly_separate(&ps, a, b)?;
    verify(is_continuous(&ps, &f) && is_isotone(&ps, &f), "continuous isotone")?;
    verify(f.zero_set() == a && f.one_set() == b, "f⁻¹(0) = A and f⁻¹(1) = B")?;
    let artifact = to_pretty(&function_to_json(&ps, ps.full(), &f));
    Ok(Outcome::ok(deliver(artifact, out)?, "verified: continuous, isotone, f⁻¹(0) = A, f⁻¹(1) = B\n".into()))
}

pub fn utilities_cmd(space: &Path, out: Option<&Path>) -> CliResult<Outcome> {
    let ps = read_space(space)?;
    let d = diagnose(&ps, ClassifyOptions::default());
    if !d.classification().regular {
        return Err(CliError::new(
            exit::NOT_SEPARABLE,
            format!("space is not regular\n{}", diagnosis_text(&ps, &d).trim_end()),
        ));
    }
    let family = utility_representation(&ps)?;
    verify(verify_representation(&ps, &family, Mode::Represent), "family represents the order")?;
    verify(family.iter().all(|f| is_utility(&ps, f)), "every member is a continuous utility")?;
    let artifact: Vec<Value> = family.iter().map(|f| function_to_json(&ps, ps.full(), f)).collect();
    let summary = format!("verified: {} continuous utilities representing the order\n", family.len());
    Ok(Outcome::ok(deliver(to_pretty(&artifact), out)?, summary))
}

pub fn quotient_cmd(space: &Path, out: Option<&Path>) -> CliResult<Outcome> {
    let ps = read_space(space)?;
    let pres = quotient_space(&ps)?;
    let q = &pres.space;
    verify(projection_continuous(&ps, &pres), "projection is continuous")?;
    verify(order_mismatch(&ps, &pres).is_none(), "x ≤ y iff [x] ≲ [y]")?;
    let agreement = check_flag_equivalences(&ps)?;
    let closed = check_quotient_closed(&ps)?;
    verify(closed.antisymmetric, "quotient order is antisymmetric")?;
    verify(agreement.holds(), "flags agree on the space and its quotient")?;
    if is_closed_preorder(&ps) {
        verify(closed.closed_ordered(), "quotient of a closed preordered space is closed ordered")?;
    }

    let mut value = serde_json::to_value(SpaceFile::from_space(q)).expect("space files serialize");
    let projection: Map<String, Value> = (0..ps.len())
        .map(|x| {
            let class = pres.classes[pres.projection[x]];
            (ps.topology().point(x).to_string(), Value::from(class_name(&ps, class)))
        })
        .collect();
    value.as_object_mut().unwrap().insert("projection".into(), Value::Object(projection));

    let agree = |b: bool| if b { "agree" } else { "DISAGREE" };
    let mut report = format!("classes: {} (from {} points)\n", q.len(), ps.len());
    for (flag, same) in [
        (Flag::Semiclosed, agreement.semiclosed_agrees()),
        (Flag::Regular, agreement.regular_agrees()),
        (Flag::Normal, agreement.normal_agrees()),
    ] {
        report.push_str(&format!(
            "{}: space {}, quotient {} ({})\n",
            flag.name(),
            agreement.space.get(flag),
            agreement.quotient.get(flag),
            agree(same)
        ));
    }
    report.push_str(&format!("monotone sets correspond: {}\n", agreement.monotone_sets_correspond));
    report.push_str(&format!("quotient closed ordered: {}\n", closed.closed_ordered()));
    Ok(Outcome::ok(deliver(to_pretty(&value), out)?, report))
}

/// Per-piece sets separated by `;`, each a comma-separated list; omitted
/// means empty on every piece.
fn per_piece(exh: &Exhaustion, arg: Option<&str>, what: &str) -> CliResult<Vec<PointSet>> {
    let Some(arg) = arg else {
        return Ok(vec![PointSet::EMPTY; exh.len()]);
    };
    let parts: Vec<&str> = arg.split(';').collect();
    if parts.len() != exh.len() {
        return Err(CliError::invalid(format!("{what}: {} sets for {} pieces", parts.len(), exh.len())));
    }
    parts.iter().zip(&exh.pieces).map(|(p, k)| parse_set_arg(k, p)).collect()
}

pub fn stream_cmd(
    dir: &Path,
    a: Option<&str>,
    b: Option<&str>,
    steps: Option<usize>,
    out: Option<&Path>,
) -> CliResult<Outcome> {
    let mut exh = read_exhaustion(dir)?;
    if let Some(j) = steps {
        if j == 0 || j > exh.len() {
            return Err(CliError::invalid(format!("--steps {j} outside 1..={}", exh.len())));
        }
        exh.pieces.truncate(j);
        exh.inclusions.truncate(j - 1);
    }
    if let Some(v) = validate_exhaustion(&exh) {
        return Err(CliError::invalid(format!("invalid exhaustion: {v} (piece_{:03}.json)", v.step + 1)));
    }
    let a = per_piece(&exh, a, "--A-per-piece")?;
    let b = per_piece(&exh, b, "--B-per-piece")?;
    let trace = stream_separate(&exh, &a, &b)?;

    verify(trace.first_violation(&exh).is_none(), "per-step separation and nesting")?;
    let last = trace.steps.last().expect("at least one piece");
    verify(last.u.is_disjoint(&last.v), "final U ∩ V = ∅")?;
    let lu = limit_family(&exh, &trace.us());
    let lv = limit_family(&exh, &trace.vs());
    verify(limit_open_check(&exh, &lu)? && limit_open_check(&exh, &lv)?, "limit families are open")?;

    let summary =
        format!("steps: {}\nnested: true\nfinal U ∩ V = ∅: true\nlimit families open: true\n", trace.steps.len());
    Ok(Outcome::ok(deliver(to_pretty(&trace_records(&exh, &trace)), out)?, summary))
}

pub fn find_cmd(
    n: usize,
    require: &[Flag],
    forbid: &[Flag],
    seed: Option<u64>,
    attempts: usize,
    out: Option<&Path>,
) -> CliResult<Outcome> {
    let filter = FlagFilter { require: require.to_vec(), forbid: forbid.to_vec() };
    let found = match seed {
        None => {
            if n > MAX_EXHAUSTIVE_POINTS {
                return Err(CliError::invalid(format!(
                    "exhaustive search is limited to {MAX_EXHAUSTIVE_POINTS} points; pass --seed for randomized search up to {MAX_RANDOM_POINTS}"
                )));
            }
            find_exhaustive(n, &filter)?
        }
        Some(seed) => find_random(&mut ChaCha8Rng::seed_from_u64(seed), n, &filter, attempts)?,
    };
    let Some(ps) = found else {
        return Ok(Outcome { code: exit::NOT_FOUND, stdout: "NOT_FOUND\n".into(), stderr: String::new() });
    };
    let c = classify(&ps);
    verify(require.iter().all(|&f| c.get(f)) && forbid.iter().all(|&f| !c.get(f)), "found space satisfies the filter")?;
    let summary = format!("found {} points: {}\n", ps.len(), flags_line(&c));
    Ok(Outcome::ok(deliver(to_pretty(&SpaceFile::from_space(&ps)), out)?, summary))
}

pub fn dot_cmd(space: &Path) -> CliResult<Outcome> {
    let ps = read_space(space)?;
    Ok(Outcome::ok(dot::to_dot(&ps), String::new()))
}
