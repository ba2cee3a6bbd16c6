use std::fs;
use std::io::{self, Write};
use std::path::Path;
use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{json, Map, Value};

use selfaffine::classifier::HadamardCertificate;
use selfaffine::conjugation::Reduction;
use selfaffine::fourier::{construct_witness_from, default_j_max, verify_witness, FourierEvaluator};
use selfaffine::hadamard::{candidate_spectrum, construct_dual_digits, phase_matrix, HadamardTriple};
use selfaffine::oracle::{chaos_game, completeness_defect, default_clique_j_max, max_orthogonal_clique};
use selfaffine::rational::rat_to_string;
use selfaffine::{classify as classify_instance, Certificate, Classification, Frequency, ProblemInstance};

use crate::error::{CliError, CliResult};
use crate::json::*;
use crate::text::{self, frequency, int_grid, int_tuple, line, rat_grid};
use crate::{ClassifyArgs, CliqueArgs, Common, Evidence, SampleArgs, SpectrumArgs, VerifyArgs};

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Parse(format!("cannot read {}: {e}", path.display())))
}

fn load(path: &Path) -> CliResult<ProblemInstance> {
    parse_instance(&read(path)?)
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))
}

fn emit(s: &str) -> CliResult<()> {
    let mut out = io::stdout().lock();
    out.write_all(s.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| CliError::Internal(format!("cannot write to stdout: {e}")))
}

fn emit_either(common: &Common, value: &Value, human: impl FnOnce() -> String) -> CliResult<()> {
    if common.json {
        emit(&render(value))
    } else {
        emit(&human())
    }
}

fn ms(t: Instant) -> Value {
    json!((t.elapsed().as_secs_f64() * 1e3 * 1e3).round() / 1e3)
}

fn frequencies_json(fs: &[Frequency]) -> Value {
    Value::Array(fs.iter().map(|f| rat_vector_json(f)).collect())
}

fn hadamard_certificate(inst: &ProblemInstance, red: &Reduction) -> CliResult<HadamardCertificate> {
    let mut triple = construct_dual_digits(&red.companion, inst.q())?.with_frame(red.frame.clone());
    if !triple.verify() {
        return Err(CliError::Internal("constructed dual digits do not form a Hadamard triple".into()));
    }
    let phases = phase_matrix(&triple.m, &triple.digits, &triple.duals)?;
    Ok(HadamardCertificate { triple, phases })
}

pub fn classify(a: &ClassifyArgs) -> CliResult<()> {
    let inst = load(&a.common.input)?;
    let mut timings = Map::new();
    let t = Instant::now();
    let c = classify_instance(&inst)?;
    timings.insert("classify".into(), ms(t));
    let t = Instant::now();
    let verified = c.certificate.verify(&inst);
    timings.insert("verify".into(), ms(t));
    if !verified {
        return Err(CliError::Internal("emitted certificate failed re-verification".into()));
    }
    let t = Instant::now();
    let mut extra = Map::new();
    let evidence = match a.evidence {
        Evidence::None => None,
        Evidence::Clique => Some(clique_evidence(&inst, a.lattice_den, a.box_radius, a.jmax)?),
        Evidence::Completeness => Some(completeness_evidence(&inst, &c, a)?),
    };
    if let Some(e) = &evidence {
        timings.insert("evidence".into(), ms(t));
        extra.insert("evidence".into(), e.clone());
    }
    if !a.timings {
        timings.clear();
    }
    let report = report_json(&c, verified, timings, extra);
    if let Some(path) = &a.report {
        write_file(path, &render(&report))?;
    }
    emit_either(&a.common, &report, || classify_text(&c, verified, evidence.as_ref()))
}

fn classify_text(c: &Classification, verified: bool, evidence: Option<&Value>) -> String {
    let cond = &c.conditions;
    let mut s = String::new();
    s += &line("verdict", c.verdict);
    s += &line("dimension", cond.n);
    s += &line("krylov rank r", cond.r);
    s += &line("det M1", &cond.det_m1);
    s += &line("gcd(q, |det M1|)", &cond.gcd);
    s += &line("q divides det M1", cond.q_divides);
    match &cond.pure_power_c {
        Some(cst) => s += &line("char poly of M1", format!("x^{} + ({cst})", cond.r)),
        None => s += &line("char poly of M1", "not of the form x^r + c"),
    }
    s += &line("certificate", format!("{} (verified: {verified})", c.certificate.kind()));
    match &c.certificate {
        Certificate::Witness(w) => {
            s += &line("  alpha", frequency(&w.witness.alpha));
            s += &line("  ell", w.witness.ell);
        }
        Certificate::Hadamard(h) => {
            s += &line("  duals", h.triple.duals.iter().map(|d| int_tuple(d)).collect::<Vec<_>>().join(" "));
        }
        Certificate::ConditionOnly => {}
    }
    let rules: Vec<&str> = c.rules.iter().map(|r| r.as_str()).collect();
    s += &line("rules", rules.join(", "));
    if let Some(e) = evidence {
        s += &evidence_text(e);
    }
    s
}

fn evidence_text(e: &Value) -> String {
    let mut s = String::new();
    match e["kind"].as_str() {
        Some("clique") => {
            s += &line("evidence", "clique");
            s += &line("  lattice", format!("(1/{})Z^n, box radius {}", e["lattice_denominator"], e["box_radius"]));
            s += &line("  max clique size", &e["max_clique_size"]);
            s += &line("  certified", &e["certified"]);
        }
        Some("completeness") => {
            s += &line("evidence", "completeness");
            if let Some(reason) = e["skipped"].as_str() {
                s += &line("  skipped", reason);
                return s;
            }
            s += &line("  spectrum size", &e["spectrum_size"]);
            let defects = e["defects"].as_array().cloned().unwrap_or_default();
            let bounds = e["error_bounds"].as_array().cloned().unwrap_or_default();
            let worst = defects.iter().filter_map(Value::as_f64).fold(0.0, f64::max);
            let err = bounds.iter().filter_map(Value::as_f64).fold(0.0, f64::max);
            s += &line("  max defect", text::sig12(worst));
            s += &line("  max error bound", text::sig12(err));
        }
        _ => {}
    }
    if let Some(note) = e["note"].as_str() {
        s += &line("  note", note);
    }
    s
}

fn clique_evidence(inst: &ProblemInstance, l: u64, n_box: u64, jmax: Option<usize>) -> CliResult<Value> {
    let j_max = jmax.unwrap_or_else(|| default_clique_j_max(inst.dim(), l, n_box));
    let r = max_orthogonal_clique(inst, l, n_box, j_max)?;
    Ok(json!({
        "kind": "clique",
        "lattice_denominator": r.lattice_denominator,
        "box_radius": r.box_radius,
        "j_max": r.j_max,
        "candidates": r.candidates,
        "max_clique_size": r.max_clique_size,
        "witness_set": frequencies_json(&r.witness_set),
        "certificates": Value::Array(r.certificates.iter().map(|c| json!({
            "pair": [rat_vector_json(&c.pair.0), rat_vector_json(&c.pair.1)],
            "j": c.j,
        })).collect()),
        "certified": r.certified,
        "note": "largest certified-orthogonal set within the stated lattice box; evidence, not a bound",
    }))
}

fn completeness_evidence(inst: &ProblemInstance, c: &Classification, a: &ClassifyArgs) -> CliResult<Value> {
    let Certificate::Hadamard(h) = &c.certificate else {
        return Ok(json!({
            "kind": "completeness",
            "skipped": "no Hadamard triple, so no candidate spectrum",
        }));
    };
    let spectrum = candidate_spectrum(&h.triple, a.depth)?;
    let n = inst.dim();
    let probes: Vec<Frequency> = (1..=a.probes)
        .map(|k| {
            let mut xi = vec![BigRational::zero(); n];
            xi[0] = BigRational::new(BigInt::from(k), BigInt::from(a.probes));
            xi
        })
        .collect();
    let r = completeness_defect(inst, &spectrum, &probes, a.tail_eps)?;
    Ok(json!({
        "kind": "completeness",
        "depth": r.depth,
        "tail_eps": r.tail_eps,
        "spectrum_size": spectrum.len(),
        "probes": frequencies_json(&r.probes),
        "sums": r.sums,
        "defects": r.defects,
        "error_bounds": r.error_bounds,
        "note": "truncated Parseval sums; numerical evidence, not a completeness proof",
    }))
}

pub fn decompose(a: &Common) -> CliResult<()> {
    let inst = load(&a.input)?;
    let red = Reduction::new(inst.m(), inst.v())?;
    let comp = &red.companion;
    let companion = json!({
        "b": int_matrix_json(&comp.b),
        "m_tilde": int_matrix_json(&comp.m_tilde),
        "v_tilde": int_vector_json(&comp.v_tilde),
        "char_poly": int_vector_json(comp.char_poly.coeffs()),
    });
    let value = match &red.block {
        Some(b) => json!({
            "n": inst.dim(),
            "r": red.rank,
            "branch": "block_reduction",
            "b": int_matrix_json(&b.b),
            "b_inv": int_matrix_json(&b.b_inv),
            "m1": int_matrix_json(&b.m1),
            "c": int_matrix_json(&b.c),
            "m2": int_matrix_json(&b.m2),
            "x": int_vector_json(&b.x),
            "companion": companion,
        }),
        None => json!({
            "n": inst.dim(),
            "r": red.rank,
            "branch": "companion",
            "m1": int_matrix_json(&red.m1),
            "companion": companion,
            "note": "companion branch: Krylov rank is full, no block reduction",
        }),
    };
    emit_either(a, &value, || {
        let mut s = String::new();
        s += &line("dimension", inst.dim());
        s += &line("krylov rank r", red.rank);
        match &red.block {
            Some(b) => {
                s += &line("branch", "block reduction");
                s += &format!("B\n{}", int_grid(&b.b, "  "));
                s += &format!("M1\n{}", int_grid(&b.m1, "  "));
                s += &format!("C\n{}", int_grid(&b.c, "  "));
                s += &format!("M2\n{}", int_grid(&b.m2, "  "));
                s += &line("x", int_tuple(&b.x));
            }
            None => s += &line("branch", "companion branch (full Krylov rank)"),
        }
        s += &format!("companion B\n{}", int_grid(&comp.b, "  "));
        s += &format!("companion matrix\n{}", int_grid(&comp.m_tilde, "  "));
        s += &line("companion v", int_tuple(&comp.v_tilde));
        s += &line("char poly (asc)", int_tuple(comp.char_poly.coeffs()));
        s
    })
}

pub fn witness(a: &Common) -> CliResult<()> {
    let inst = load(&a.input)?;
    let red = Reduction::new(inst.m(), inst.v())?;
    let w = construct_witness_from(&inst, &red)?;
    let verified = verify_witness(&inst, &w);
    if !verified {
        return Err(CliError::Internal("constructed witness failed verification".into()));
    }
    let value = json!({
        "alpha": rat_vector_json(&w.alpha),
        "ell": w.ell,
        "origin": w.origin.as_str(),
        "verified": verified,
    });
    emit_either(a, &value, || {
        let mut s = String::new();
        s += &line("alpha", frequency(&w.alpha));
        s += &line("ell", w.ell);
        s += &line("origin", w.origin.as_str());
        s += &line("verified:", verified);
        s
    })
}

pub fn hadamard(a: &Common) -> CliResult<()> {
    let inst = load(&a.input)?;
    let red = Reduction::new(inst.m(), inst.v())?;
    let cert = hadamard_certificate(&inst, &red)?;
    let verified = Certificate::Hadamard(Box::new(cert.clone())).verify(&inst);
    if !verified {
        return Err(CliError::Internal("Hadamard certificate failed re-verification".into()));
    }
    let value = json!({
        "certificate": certificate_json(&Certificate::Hadamard(Box::new(cert.clone()))),
        "unitary": cert.phases.is_unitary(),
        "verified": verified,
    });
    emit_either(a, &value, || hadamard_text(&cert.triple, &cert, verified))
}

fn hadamard_text(t: &HadamardTriple, cert: &HadamardCertificate, verified: bool) -> String {
    let mut s = String::new();
    s += &format!("companion matrix\n{}", int_grid(&t.m, "  "));
    s += &line("digits", t.digits.iter().map(|d| int_tuple(d)).collect::<Vec<_>>().join(" "));
    s += &line("duals", t.duals.iter().map(|d| int_tuple(d)).collect::<Vec<_>>().join(" "));
    let rows: Vec<Vec<String>> = cert.phases.theta.iter().map(|r| r.iter().map(rat_to_string).collect()).collect();
    s += &format!("phases <M^-1 d, s>\n{}", text::grid(&rows, "  "));
    if let Some(f) = &t.frame {
        s += &format!("to original frame\n{}", rat_grid(f.to_original_matrix(), "  "));
    }
    s += &line("verified:", verified);
    s
}

pub fn spectrum(a: &SpectrumArgs) -> CliResult<()> {
    let inst = load(&a.common.input)?;
    let red = Reduction::new(inst.m(), inst.v())?;
    let cert = hadamard_certificate(&inst, &red)?;
    let sp = candidate_spectrum(&cert.triple, a.depth)?;
    let refs: Vec<&[BigRational]> = sp.frequencies.iter().map(Vec::as_slice).collect();
    let j_max = a.jmax.unwrap_or_else(|| default_j_max(inst.dim(), &refs));
    let eval = FourierEvaluator::new(&inst)?;
    let set = eval.certify_set(&sp.frequencies, j_max);
    let value = json!({
        "depth": sp.depth,
        "size": sp.len(),
        "j_max": j_max,
        "frequencies": frequencies_json(&sp.frequencies),
        "certificates": Value::Array(set.certified.iter().map(|&(i, k, j)| json!({"pair": [i, k], "j": j})).collect()),
        "uncertified": Value::Array(set.uncertified.iter().map(|&(i, k)| json!([i, k])).collect()),
        "all_certified": set.all_certified(),
    });
    emit_either(&a.common, &value, || {
        let mut s = String::new();
        s += &line("depth", sp.depth);
        s += &line("size", sp.len());
        s += "frequencies\n";
        for (i, f) in sp.frequencies.iter().enumerate() {
            s += &format!("  [{i}] {}\n", frequency(f));
        }
        s += "certificates (pair: mask zero at level j)\n";
        for &(i, k, j) in &set.certified {
            s += &format!("  [{i}] [{k}]: j = {j}\n");
        }
        for &(i, k) in &set.uncertified {
            s += &format!("  [{i}] [{k}]: uncertified within j <= {j_max}\n");
        }
        s += &line("all certified", set.all_certified());
        s
    })
}

pub fn clique(a: &CliqueArgs) -> CliResult<()> {
    let inst = load(&a.common.input)?;
    let value = clique_evidence(&inst, a.lattice_den, a.box_radius, a.jmax)?;
    emit_either(&a.common, &value, || {
        let mut s = evidence_text(&value);
        s += "  witness set\n";
        for f in value["witness_set"].as_array().into_iter().flatten() {
            let parts: Vec<&str> = f.as_array().into_iter().flatten().filter_map(Value::as_str).collect();
            if parts.len() == 1 {
                s += &format!("    {}\n", parts[0]);
            } else {
                s += &format!("    ({})\n", parts.join(", "));
            }
        }
        s
    })
}

pub fn sample(a: &SampleArgs) -> CliResult<()> {
    let inst = load(&a.input)?;
    let sample = chaos_game(&inst, a.iters, a.seed)?;
    let n = inst.dim();
    let mut csv = String::with_capacity(a.iters * 16 * n);
    let header: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    csv += &header.join(",");
    csv.push('\n');
    for p in &sample.points {
        let row: Vec<String> = p.iter().map(|&x| text::sig12(x)).collect();
        csv += &row.join(",");
        csv.push('\n');
    }
    match &a.output {
        Some(path) => write_file(path, &csv),
        None => emit(&csv),
    }
}

pub fn verify(a: &VerifyArgs) -> CliResult<()> {
    let inst = load(&a.common.input)?;
    let doc = parse_document(&read(&a.certificate)?, "certificate JSON")?;
    let cert = certificate_from_document(&doc)?;
    let verified = cert.verify(&inst);
    let value = json!({ "kind": cert.kind(), "verified": verified });
    emit_either(&a.common, &value, || {
        let mut s = line("certificate", cert.kind());
        s += &line("verified:", verified);
        s
    })?;
    if verified {
        Ok(())
    } else {
        Err(CliError::Domain("certificate does not verify for this instance".into()))
    }
}
