use std::fmt::Write as _;
use std::fs;
use std::io::Read as _;
use std::path::Path;

use num_bigint::BigInt;
use serde_json::{json, Value};
use wlpkit::complex::{random_pachner_walk, WalkPolicy};
use wlpkit::homology::classify;
use wlpkit::io::{parse_certificate, parse_complex, write_certificate, write_facet_list};
use wlpkit::lefschetz::{
    certify_over_q, find_wle, g_from_h_doubleprime, h_prime, kalai_h_doubleprime, novik_swartz_check, trial_rng,
    verify_certificate, WlpCertificate,
};
use wlpkit::ring::{artinian_reduction, hilbert_function, hilbert_series, random_lsop};
use wlpkit::toric::{toric_m_check, toric_wle, Fan};
use wlpkit::vectors::{
    check_g_conditions, expected_g_change, f_vector, g_vector, h_vector, is_m_sequence, pachner_g_delta,
};
use wlpkit::{with_field, Error, Field, FieldSpec, SimplicialComplex};

use crate::{Cli, CliError, Command, Outcome};

type Run = Result<Outcome, CliError>;

pub fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Fvector { input } => fvector(&read_complex(input)?, cli),
        Command::Hvector { input } => hvector(&read_complex(input)?, cli),
        Command::Gcheck { input } => gcheck(&read_complex(input)?, cli),
        Command::Classify { input } => {
            let c = read_complex(input)?;
            with_field!(cli.field, f => classify_cmd(&c, f))
        }
        Command::Wlp { input, out } => wlp(&read_complex(input)?, cli, out.as_deref()),
        Command::Verify { input, certificate } => verify(&read_complex(input)?, &read_text(certificate)?, cli),
        Command::Walk { input, steps, out } => walk(&read_complex(input)?, *steps, cli, out.as_deref()),
        Command::ManifoldG { input } => {
            let c = read_complex(input)?;
            with_field!(cli.field, f => manifold_g(&c, f, cli.seed))
        }
        Command::Toric { input } => toric(&read_fan(input)?, cli),
        Command::Reduce { input } => {
            let c = read_complex(input)?;
            with_field!(cli.field, f => reduce(&c, f, cli.seed))
        }
        Command::Hilbert { input, degree } => hilbert(&read_complex(input)?, *degree, cli),
        Command::Socle { input } => {
            let c = read_complex(input)?;
            with_field!(cli.field, f => socle(&c, f, cli.seed))
        }
    }
}

fn io_error(path: &Path, e: std::io::Error) -> CliError {
    CliError::Io { path: path.to_path_buf(), message: e.to_string() }
}

/// File contents, or standard input for `-`.
fn read_text(path: &Path) -> Result<String, CliError> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| io_error(path, e))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| io_error(path, e))
}

fn read_complex(path: &Path) -> Result<SimplicialComplex, CliError> {
    Ok(parse_complex(&read_text(path)?)?)
}

/// Fan text format, or the JSON form when the input starts with `{`.
fn read_fan(path: &Path) -> Result<Fan, CliError> {
    let text = read_text(path)?;
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(&text).map_err(|e| Error::Parse { line: e.line(), message: e.to_string() }.into());
    }
    Ok(Fan::parse(&text)?)
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| io_error(path, e))
}

fn create_dir(path: &Path) -> Result<(), CliError> {
    fs::create_dir_all(path).map_err(|e| io_error(path, e))
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn csv(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn face_text(face: &[u32]) -> String {
    format!("{{{}}}", face.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
}

fn outcome(cli: &Cli, result: Value, human: String) -> Outcome {
    Outcome { result, human, field: cli.field, code: 0 }
}

fn fvector(c: &SimplicialComplex, cli: &Cli) -> Run {
    let f = f_vector(c);
    let h = h_vector(c);
    let g = g_vector(&h);
    let human = format!("f={} h={} g={}\n", f.to_csv(), h.to_csv(), g.to_csv());
    Ok(outcome(cli, json!({ "f": f, "h": h, "g": g }), human))
}

fn hvector(c: &SimplicialComplex, cli: &Cli) -> Run {
    let h = h_vector(c);
    let g = g_vector(&h);
    let human = format!("h={} g={}\n", h.to_csv(), g.to_csv());
    Ok(outcome(cli, json!({ "h": h, "g": g }), human))
}

fn gcheck(c: &SimplicialComplex, cli: &Cli) -> Run {
    let f = f_vector(c);
    let h = h_vector(c);
    let g = g_vector(&h);
    let cond = check_g_conditions(&h);
    let human = format!(
        "f={} h={} g={}\ndehn_sommerville={} unimodal={} g_is_m={}\n",
        f.to_csv(),
        h.to_csv(),
        g.to_csv(),
        cond.dehn_sommerville,
        cond.unimodal,
        cond.g_is_m
    );
    let mut out = outcome(cli, json!({ "f": f, "h": h, "g": g, "conditions": cond, "all": cond.all() }), human);
    if !cond.all() {
        out.code = 2;
    }
    Ok(out)
}

fn classify_cmd<F: Field>(c: &SimplicialComplex, f: &F) -> Run {
    let cl = classify(c, f);
    let orientable = match cl.orientable {
        Some(b) => b.to_string(),
        None => "n/a".to_string(),
    };
    let human = format!(
        "reduced_betti={} (from dimension -1)\npure={}\nconnected={}\nhomology_manifold={}\nhomology_sphere={}\ncohen_macaulay={}\ngorenstein_star={}\nbuchsbaum={}\norientable={}\n",
        csv(&cl.betti),
        cl.pure,
        cl.connected,
        cl.homology_manifold,
        cl.homology_sphere,
        cl.cohen_macaulay,
        cl.gorenstein_star,
        cl.buchsbaum,
        orientable
    );
    Ok(Outcome { result: to_value(&cl), human, field: f.spec(), code: 0 })
}

fn certificate_report(cert: &WlpCertificate, human: &mut String) {
    let _ = writeln!(
        human,
        "vertices={} dims={} tries={} generic={}",
        cert.vertices.len(),
        csv(&cert.dims),
        cert.tries,
        cert.generic
    );
    for v in &cert.verdicts {
        let verdict = serde_json::to_value(v.verdict).expect("serializable");
        let _ = writeln!(
            human,
            "degree {}: {} -> {} rank {} {}",
            v.degree,
            v.source_dim,
            v.target_dim,
            v.rank,
            verdict.as_str().unwrap_or_default()
        );
    }
    if cert.is_wle() {
        let _ = writeln!(human, "weak Lefschetz element: yes");
    } else {
        let degrees: Vec<usize> = cert.failing_degrees();
        let _ = writeln!(human, "weak Lefschetz element: no (fails in degrees {})", csv(&degrees));
    }
}

fn wlp(c: &SimplicialComplex, cli: &Cli, out_dir: Option<&Path>) -> Run {
    let cert = with_field!(cli.field, f => find_wle(c, f, cli.seed, cli.max_tries))?;
    let mut human = String::new();
    certificate_report(&cert, &mut human);
    let mut code = 0;
    let mut certified = None;
    if cli.certify {
        let q = certify_over_q(c, &cert)?;
        let _ = writeln!(human, "certified over Q: {}", yes_no(q.certified_over_q));
        if !q.certified_over_q {
            code = 2;
        }
        certified = Some(q);
    }
    if let Some(dir) = out_dir {
        create_dir(dir)?;
        write_file(&dir.join("certificate.json"), &write_certificate(&cert))?;
        if let Some(q) = &certified {
            write_file(&dir.join("certificate_q.json"), &write_certificate(q))?;
        }
    }
    let result = json!({ "certificate": cert, "certified": certified });
    Ok(Outcome { result, human, field: cli.field, code })
}

fn verify(c: &SimplicialComplex, text: &str, cli: &Cli) -> Run {
    let cert = parse_certificate(text)?;
    let checked = verify_certificate(c, &cert)?;
    let mut human = String::new();
    certificate_report(&checked, &mut human);
    let mut code = if checked.is_wle() { 0 } else { 2 };
    let mut certified = None;
    if cli.certify {
        let q = certify_over_q(c, &cert)?;
        let _ = writeln!(human, "certified over Q: {}", yes_no(q.certified_over_q));
        if !q.certified_over_q {
            code = 2;
        }
        certified = Some(q);
    }
    let result = json!({ "certificate": checked, "certified": certified });
    Ok(Outcome { result, human, field: cert.field, code })
}

fn walk(c: &SimplicialComplex, steps: usize, cli: &Cli, out_dir: Option<&Path>) -> Run {
    let walk = random_pachner_walk(c, steps, cli.seed, &WalkPolicy::default())?;
    let dim = c.dim().max(0) as usize;
    let mut ledger: Vec<BigInt> = g_vector(&h_vector(c)).entries;
    let mut entries = Vec::with_capacity(walk.len());
    let mut human = String::new();
    let mut all_ok = true;
    for (k, step) in walk.iter().enumerate() {
        let f = f_vector(&step.complex);
        let h = h_vector(&step.complex);
        let g = g_vector(&h);
        let mut law = Value::Null;
        let mut mv_text = "start".to_string();
        if let Some(mv) = &step.mv {
            if let Some((i, delta)) = expected_g_change(dim, mv.index) {
                if let Some(e) = ledger.get_mut(i) {
                    *e += delta;
                }
            }
            let check = pachner_g_delta(&walk[k - 1].complex, &step.complex, mv);
            let ok = check.is_ok();
            all_ok &= ok;
            law = json!({ "ok": ok, "message": check.err().map(|e| e.to_string()) });
            mv_text = format!("{}-move {} -> {}", mv.index, face_text(&mv.face), face_text(&mv.replacement));
        }
        let ledger_ok = ledger == g.entries;
        all_ok &= ledger_ok;
        let law_ok = law.get("ok").and_then(Value::as_bool).unwrap_or(true);
        let _ = writeln!(
            human,
            "step {k:>4} {mv_text:<32} f={} h={} g={} law={}",
            f.to_csv(),
            h.to_csv(),
            g.to_csv(),
            if law_ok && ledger_ok { "ok" } else { "FAIL" }
        );
        entries.push(json!({
            "step": k,
            "move": step.mv,
            "f": f,
            "h": h,
            "g": g,
            "g_ledger": ledger.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "ledger_matches": ledger_ok,
            "law": law,
        }));
    }
    let last = &walk.last().expect("walk is nonempty").complex;
    let _ = writeln!(human, "all laws hold: {}", yes_no(all_ok));
    let _ = write!(human, "final complex:\n{}", write_facet_list(last));
    let result = json!({
        "steps": steps,
        "complexes": walk.len(),
        "all_laws_hold": all_ok,
        "ledger": entries,
        "final": last.facets(),
    });
    if let Some(dir) = out_dir {
        create_dir(dir)?;
        for (k, step) in walk.iter().enumerate() {
            write_file(&dir.join(format!("step_{k:04}.txt")), &write_facet_list(&step.complex))?;
        }
        write_file(&dir.join("walk.json"), &serde_json::to_string_pretty(&result).expect("json"))?;
    }
    Ok(Outcome { result, human, field: cli.field, code: if all_ok { 0 } else { 2 } })
}

fn manifold_g<F: Field>(c: &SimplicialComplex, f: &F, seed: u64) -> Run {
    let cl = classify(c, f);
    let hp = h_prime(c, f, seed)?;
    let h2 = kalai_h_doubleprime(&hp.ring, &hp.betti);
    let g2 = g_from_h_doubleprime(&h2);
    let m = is_m_sequence(&g2.entries);
    let socle = if cl.orientable == Some(true) { Some(novik_swartz_check(c, f, seed)?) } else { None };
    let mut human = format!(
        "reduced_betti={} (from dimension -1)\nh={}\nh'={}\nh''={}\ng''={}\ng'' is an M-vector: {}\n",
        csv(&hp.betti),
        hp.h.to_csv(),
        hp.ring.to_csv(),
        h2.to_csv(),
        g2.to_csv(),
        yes_no(m.is_m)
    );
    match &socle {
        Some(s) => {
            let _ = writeln!(
                human,
                "socle={} formula_below_top={}\npairing nondegenerate: {}",
                csv(&s.socle),
                csv(&s.expected_socle),
                yes_no(s.nondegenerate)
            );
        }
        None => {
            let _ = writeln!(human, "socle: skipped (not an orientable homology manifold)");
        }
    }
    let violated = !m.is_m || socle.as_ref().is_some_and(|s| !s.nondegenerate);
    let result = json!({
        "h_prime": hp,
        "h_doubleprime": h2,
        "g_doubleprime": g2,
        "m_check": m,
        "socle": socle,
    });
    Ok(Outcome { result, human, field: f.spec(), code: if violated { 2 } else { 0 } })
}

fn toric(fan: &Fan, cli: &Cli) -> Run {
    let report = toric_m_check(fan)?;
    let mut human = format!(
        "betti={} differences={} symmetric={} m_vector={} total={} maximal_cones={}\n",
        report.betti.to_csv(),
        report.differences.to_csv(),
        report.symmetric,
        report.m_check.is_m,
        report.total,
        report.maximal_cones
    );
    let (wle, mut code) = match toric_wle(fan, cli.seed, cli.max_tries) {
        Ok(cert) => (Some(cert), 0),
        Err(Error::SearchExhausted { .. }) => (None, 4),
        Err(e) => return Err(e.into()),
    };
    match &wle {
        Some(cert) => certificate_report(cert, &mut human),
        None => {
            let _ = writeln!(human, "weak Lefschetz element: none found in {} tries", cli.max_tries);
        }
    }
    if !(report.symmetric && report.m_check.is_m) {
        code = 2;
    }
    for note in &fan.warnings {
        let _ = writeln!(human, "note: {note}");
    }
    let result = json!({ "report": report, "wle": wle });
    Ok(Outcome { result, human, field: FieldSpec::Rational, code })
}

fn reduce<F: Field>(c: &SimplicialComplex, f: &F, seed: u64) -> Run {
    let system = random_lsop(c, f, &mut trial_rng(seed, 0))?;
    let q = artinian_reduction(c, &system, f)?;
    let dims = q.dims();
    let h = h_vector(c);
    let mut human = format!("dims={}\nh={}\n", csv(&dims), h.to_csv());
    let mut bases = Vec::with_capacity(dims.len());
    for i in 0..=q.top_degree() {
        let basis = q.basis(i);
        let text: Vec<String> = basis.iter().map(|m| face_text(m)).collect();
        let _ = writeln!(human, "degree {i}: {}", text.join(" "));
        bases.push(basis);
    }
    let theta: Vec<Vec<String>> =
        (0..system.theta.rows()).map(|j| system.theta.row(j).iter().map(|e| f.format(e)).collect()).collect();
    let result = json!({
        "vertices": system.vertices,
        "theta": theta,
        "dims": dims,
        "h": h,
        "bases": bases,
    });
    Ok(Outcome { result, human, field: f.spec(), code: 0 })
}

fn hilbert(c: &SimplicialComplex, degree: Option<usize>, cli: &Cli) -> Run {
    let n = degree.unwrap_or(c.krull_dim() + 3);
    let values = hilbert_function(c, n);
    let series = hilbert_series(c);
    let human = format!("H={}\nseries={}\n", values.to_csv(), series);
    let result = json!({
        "values": values,
        "numerator": series.numerator,
        "denominator_exp": series.denominator_exp,
        "series": series.to_string(),
    });
    Ok(outcome(cli, result, human))
}

fn socle<F: Field>(c: &SimplicialComplex, f: &F, seed: u64) -> Run {
    let system = random_lsop(c, f, &mut trial_rng(seed, 0))?;
    let q = artinian_reduction(c, &system, f)?;
    let dims = q.dims();
    let soc = q.socle().dims;
    let human = format!("dims={}\nsocle={}\n", csv(&dims), csv(&soc));
    Ok(Outcome { result: json!({ "dims": dims, "socle": soc }), human, field: f.spec(), code: 0 })
}
