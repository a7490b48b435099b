//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. Every run is seeded and deterministic.

mod common;

use std::time::Instant;

use lcdkit::bounds::{entropy, gv_rate, PRECISION};
use lcdkit::codecore::{Form, LinearCode, DEFAULT_DISTANCE_BUDGET};
use lcdkit::error::Error;
use lcdkit::galois::{Elem, Field};
use lcdkit::lcdforge::{diagonal_perturbation, extend_to_lcd, lcdify, Lcdified, LcdifyOptions};
use lcdkit::matfq::Matrix;
use lcdkit::shell::{
    parse_certificate, parse_code, verify_extension, verify_lcdify, write_certificate, write_code,
    Certificate, CodeRng,
};

const BUDGET: u128 = DEFAULT_DISTANCE_BUDGET * 8;

/// Collects failures for one criterion; keeps the first few messages.
#[derive(Default)]
struct Tally {
    checks: usize,
    failures: Vec<String>,
    notes: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 5 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Statistics gathered on every lcdify run, feeding criteria 4 and 5.
#[derive(Default)]
struct RunStats {
    lemma: Tally,
    hull: Tally,
    runs: usize,
    sharp: usize,
    loose: Vec<String>,
}

fn field(q: u64) -> Field {
    Field::with_order(q).unwrap()
}

fn draw_code(rng: &mut CodeRng, f: &Field, form: Form, max_n: usize, max_k: usize) -> LinearCode {
    let n = 1 + rng.below(max_n as u64) as usize;
    let k = 1 + rng.below(n.min(max_k) as u64) as usize;
    rng.code(f, n, k, form).unwrap()
}

fn describe(c: &LinearCode) -> String {
    format!("[{}, {}] over F_{} ({})", c.n(), c.k(), c.field().q(), c.form())
}

/// Checks shared by every lcdify run: Lemma identity, hull identities, |J| >= h.
fn record_run(stats: &mut RunStats, c: &LinearCode, out: &Lcdified) {
    stats.runs += 1;
    let f = c.field();
    let m = out.standard.code.gram();
    let u = diagonal_perturbation(f, c.form(), &out.scaling, c.k()).unwrap();
    let lhs = m.diag_add(&u).unwrap().det().unwrap();
    let rhs = out.cert.deleted.iter().fold(out.cert.det_minor, |acc, &j| f.mul(acc, u[j]));
    let direct = out.code.gram().det().unwrap();
    stats.lemma.check(lhs == rhs && lhs == direct, || {
        format!("{}: det(M+diag u)={lhs}, product={rhs}, Gram det={direct}", describe(c))
    });

    let h = c.hull_dim();
    stats.hull.check(h == c.k() - c.gram().rank(), || format!("{}: h != k - rank", describe(c)));
    stats.hull.check(c.gram().rank() <= c.generator().rank(), || {
        format!("{}: rank(Gram) > rank(G)", describe(c))
    });
    if c.n() <= 8 {
        let oracle = common::hull_dim_by_intersection(c);
        stats.hull.check(oracle == h, || format!("{}: intersection oracle {oracle}, h {h}", describe(c)));
    }
    let j = out.cert.deleted.len();
    stats.hull.check(j >= h, || format!("{}: |J|={j} < h={h}", describe(c)));
    if j == h {
        stats.sharp += 1;
    } else if j > h {
        stats.loose.push(format!("{}: |J|={j} > h={h}", describe(c)));
    }
}

fn round_trip_verify(c: &LinearCode, out: &Lcdified) -> Result<(), String> {
    let original = parse_code(&write_code(c), false).map_err(|e| e.to_string())?;
    let transformed = parse_code(&write_code(&out.code), false).map_err(|e| e.to_string())?;
    let cert = parse_certificate(&write_certificate(&Certificate::from_lcdified(out)))
        .map_err(|e| e.to_string())?;
    verify_lcdify(&original, &transformed, &cert).map_err(|f| f.to_string())
}

fn existence(qs: &[u64], form: Form, total: usize, seed: u64, stats: &mut RunStats) -> Tally {
    let mut t = Tally::default();
    let fields: Vec<Field> = qs.iter().map(|&q| field(q)).collect();
    for i in 0..total {
        let mut rng = CodeRng::new(seed + i as u64);
        let f = &fields[i % fields.len()];
        let c = draw_code(&mut rng, f, form, 12, 6);
        match lcdify(&c, &LcdifyOptions::default()) {
            Err(e) => t.check(false, || format!("{}: {e}", describe(&c))),
            Ok(out) => {
                let verdict = out.code.is_lcd();
                t.check(verdict.is_lcd && !verdict.det.is_zero(), || {
                    format!("{}: output not LCD", describe(&c))
                });
                let v = round_trip_verify(&c, &out);
                t.check(v.is_ok(), || format!("{}: verify failed: {}", describe(&c), v.unwrap_err()));
                let d_in = c.min_distance(BUDGET).unwrap();
                let d_out = out.code.min_distance(BUDGET).unwrap();
                t.check(d_in == d_out, || format!("{}: d {d_in} -> {d_out}", describe(&c)));
                record_run(stats, &c, &out);
            }
        }
    }
    t
}

fn criterion_1(stats: &mut RunStats) -> Tally {
    existence(&[4, 5, 7, 8, 9], Form::Euclidean, 2000, 1_000_000, stats)
}

fn criterion_2(stats: &mut RunStats) -> Tally {
    existence(&[9, 16, 25], Form::Hermitian, 2000, 2_000_000, stats)
}

/// Self-orthogonal codes: hulls of random codes, plus a few fixed ones.
fn self_orthogonal_codes(f: &Field, form: Form, count: usize, seed: u64) -> Vec<LinearCode> {
    let mut out = Vec::new();
    let mut i = 0;
    while out.len() < count {
        let mut rng = CodeRng::new(seed + i);
        i += 1;
        let c = draw_code(&mut rng, f, form, 10, 6);
        let hull = c.hull_basis();
        if hull.rows() > 0 {
            out.push(LinearCode::new(hull, form).unwrap());
        }
    }
    out
}

fn criterion_3(stats: &mut RunStats) -> Tally {
    let mut t = Tally::default();
    let f2 = field(2);
    let f3 = field(3);
    let f4 = field(4);
    let mut cases: Vec<LinearCode> = vec![
        LinearCode::from_rows(&f2, &[[1u32, 1]], Form::Euclidean).unwrap(),
        LinearCode::from_rows(&f3, &[[1u32, 1, 1]], Form::Euclidean).unwrap(),
        LinearCode::from_rows(&f4, &[[1u32, 1]], Form::Hermitian).unwrap(),
    ];
    cases.extend(self_orthogonal_codes(&f2, Form::Euclidean, 150, 3_000_000));
    cases.extend(self_orthogonal_codes(&f3, Form::Euclidean, 150, 3_100_000));
    cases.extend(self_orthogonal_codes(&f4, Form::Hermitian, 150, 3_200_000));
    for c in &cases {
        t.check(c.hull_dim() == c.k(), || format!("{}: test code is not self-orthogonal", describe(c)));
        let strict = lcdify(c, &LcdifyOptions::default());
        t.check(matches!(strict, Err(Error::FieldTooSmall(_))), || {
            format!("{}: expected FieldTooSmall, got {:?}", describe(c), strict.as_ref().map(|_| ()))
        });
        let opts = LcdifyOptions { allow_zero: true, ..Default::default() };
        match lcdify(c, &opts) {
            Err(e) => t.check(false, || format!("{}: allow-zero failed: {e}", describe(c))),
            Ok(out) => {
                t.check(out.code.is_lcd().is_lcd, || format!("{}: allow-zero output not LCD", describe(c)));
                t.check(out.code.k() == c.k(), || format!("{}: dimension changed", describe(c)));
                let v = round_trip_verify(c, &out);
                t.check(v.is_ok(), || format!("{}: verify: {}", describe(c), v.unwrap_err()));
                record_run(stats, c, &out);
            }
        }
    }
    t.notes.push(format!("{} self-orthogonal codes over F_2, F_3 (Euclidean), F_4 (Hermitian)", cases.len()));
    t
}

fn criterion_4(stats: &RunStats) -> Tally {
    let mut t = Tally::default();
    t.checks += stats.lemma.checks;
    t.failures.extend(stats.lemma.failures.iter().cloned());

    let qs = [2u64, 3, 4, 5, 7, 8, 9];
    let mut found = 0;
    let mut i = 0u64;
    while found < 500 {
        let mut rng = CodeRng::new(4_000_000 + i);
        i += 1;
        let f = field(qs[(i % qs.len() as u64) as usize]);
        let l = 1 + rng.below(5) as usize;
        // Low-rank symmetric products make vanishing minors common.
        let r = rng.below(l as u64) as usize;
        let a = rng.matrix(&f, l, r.max(1));
        let a = if r == 0 { Matrix::zeros(&f, l, 1) } else { a };
        let m = a.mul(&a.transpose()).unwrap();
        let s = common::min_nonzero_deletion_size(&m);
        if s == 0 {
            continue;
        }
        // det(M_I) = 0 for all |I| <= t = s - 1, verified by enumeration above.
        let weight = 1 + rng.below(s as u64) as usize;
        let mut support: Vec<usize> = (0..l).collect();
        for k in (1..l).rev() {
            support.swap(k, rng.below(k as u64 + 1) as usize);
        }
        let mut support: Vec<usize> = support[..weight].to_vec();
        support.sort();
        let mut u = vec![Elem::ZERO; l];
        for &j in &support {
            u[j] = Elem(1 + rng.below(f.q() as u64 - 1) as u32);
        }
        let lhs = common::det_by_permutations(&m.diag_add(&u).unwrap());
        let minor = common::det_by_permutations(&m.principal_delete(&support).unwrap());
        let rhs = support.iter().fold(minor, |acc, &j| f.mul(acc, u[j]));
        t.check(lhs == rhs, || format!("M={m:?} u={u:?}: {lhs} != {rhs}"));
        t.check(m.diag_add(&u).unwrap().det().unwrap() == lhs, || "elimination det disagrees".into());
        found += 1;
    }
    t.notes.push(format!("{} lcdify runs + 500 random (M, u) pairs", stats.runs));
    t
}

fn criterion_5(stats: &RunStats) -> Tally {
    let mut t = Tally::default();
    t.checks += stats.hull.checks;
    t.failures.extend(stats.hull.failures.iter().cloned());
    // Tiny instances against full codeword enumeration too.
    for i in 0..200u64 {
        let mut rng = CodeRng::new(5_000_000 + i);
        let (f, form) = match i % 3 {
            0 => (field(5), Form::Euclidean),
            1 => (field(4), Form::Hermitian),
            _ => (field(3), Form::Euclidean),
        };
        let c = draw_code(&mut rng, &f, form, 6, 4);
        let oracle = common::hull_dim_by_enumeration(&c);
        t.check(oracle == c.hull_dim(), || format!("{}: enumeration {oracle} != {}", describe(&c), c.hull_dim()));
    }
    t.notes.push(format!(
        "|J| = h in {}/{} runs; {} runs with |J| > h",
        stats.sharp,
        stats.runs,
        stats.loose.len()
    ));
    for obs in stats.loose.iter().take(10) {
        t.notes.push(format!("observation: {obs}"));
    }
    t
}

fn criterion_6() -> Tally {
    let mut t = Tally::default();
    let plans: [(&[u64], Form); 2] = [
        (&[2, 3, 4, 5, 7, 8, 9], Form::Euclidean),
        (&[4, 9, 16, 25], Form::Hermitian),
    ];
    for (pi, (qs, form)) in plans.iter().enumerate() {
        let fields: Vec<Field> = qs.iter().map(|&q| field(q)).collect();
        let mut done = 0;
        let mut i = 0u64;
        while done < 250 {
            let mut rng = CodeRng::new(6_000_000 + 1_000_000 * pi as u64 + i);
            let f = &fields[(i % fields.len() as u64) as usize];
            i += 1;
            let c = draw_code(&mut rng, f, *form, 10, 5);
            let h = c.hull_dim();
            if h == 0 {
                continue;
            }
            done += 1;
            let (ext, map) = extend_to_lcd(&c).unwrap();
            t.check(map.h == h && ext.n() == c.n() + h && ext.k() == c.k(), || {
                format!("{}: extended to [{}, {}]", describe(&c), ext.n(), ext.k())
            });
            t.check(ext.is_lcd().is_lcd, || format!("{}: extension not LCD", describe(&c)));
            let d_in = c.min_distance(BUDGET).unwrap();
            let d_out = ext.min_distance(BUDGET).unwrap();
            t.check(d_out >= d_in, || format!("{}: d {d_in} -> {d_out}", describe(&c)));
            let v = verify_extension(&c, &ext);
            t.check(v.is_ok(), || format!("{}: {}", describe(&c), v.unwrap_err()));
        }
    }
    let f2 = field(2);
    let c = LinearCode::from_rows(&f2, &[[1u32, 1]], Form::Euclidean).unwrap();
    let (ext, _) = extend_to_lcd(&c).unwrap();
    t.check(
        ext.generator().to_rows() == vec![vec![1, 1, 1]]
            && ext.is_lcd().is_lcd
            && ext.min_distance(BUDGET) == Ok(3),
        || format!("<(1,1)>/F_2 extended to {:?}", ext.generator()),
    );
    t.notes.push("500 codes with h > 0 + <(1,1)>/F_2 -> [3,1,3]".into());
    t
}

fn criterion_7() -> Tally {
    let mut t = Tally::default();
    let qs = [2u64, 3, 4, 5, 7, 8, 9];
    for i in 0..1000u64 {
        let mut rng = CodeRng::new(7_000_000 + i);
        let f = field(qs[(i % qs.len() as u64) as usize]);
        let l = 1 + rng.below(4) as usize;
        let m = rng.matrix(&f, l, l);
        let a = m.det().unwrap();
        let b = common::det_by_permutations(&m);
        t.check(a == b, || format!("{m:?}: elimination {a}, expansion {b}"));
    }
    t
}

fn criterion_8() -> Tally {
    let mut t = Tally::default();
    let h = entropy(2, 0.5).unwrap();
    t.check((h - 1.0).abs() <= PRECISION, || format!("H_2(1/2) = {h}"));
    for q in [2u32, 4, 5, 9] {
        let top = (q - 1) as f64 / q as f64;
        let h = entropy(q, top).unwrap();
        t.check((h - 1.0).abs() <= PRECISION, || format!("H_{q}((q-1)/q) = {h}"));
        for i in 1..1000 {
            let delta = top * i as f64 / 1000.0;
            let s = gv_rate(q, delta).unwrap() + entropy(q, delta).unwrap();
            t.check((s - 1.0).abs() <= PRECISION, || format!("q={q} delta={delta}: sum {s}"));
        }
        t.check(matches!(gv_rate(q, 0.0), Err(Error::OutOfDomain(_))), || format!("q={q}: delta=0 accepted"));
        t.check(matches!(gv_rate(q, top), Err(Error::OutOfDomain(_))), || format!("q={q}: delta=(q-1)/q accepted"));
    }
    t
}

fn criterion_9() -> Tally {
    let mut t = Tally::default();
    let qs = [2u64, 3, 4, 5, 7, 8, 9, 16, 25];
    let mut done = 0;
    let mut i = 0u64;
    while done < 200 {
        let mut rng = CodeRng::new(9_000_000 + i);
        let f = field(qs[(i % qs.len() as u64) as usize]);
        i += 1;
        let c = draw_code(&mut rng, &f, Form::Euclidean, 12, 6);
        if (f.q() as u64).pow(c.k() as u32) > 10_000 {
            continue;
        }
        done += 1;
        let fast = c.min_distance(BUDGET).unwrap();
        let full = common::min_distance_full(c.generator());
        t.check(fast == full, || format!("{}: projective {fast}, full {full}", describe(&c)));
    }
    let hamming = LinearCode::from_rows(
        &field(2),
        &[
            [1u32, 0, 0, 0, 0, 1, 1],
            [0, 1, 0, 0, 1, 0, 1],
            [0, 0, 1, 0, 1, 1, 0],
            [0, 0, 0, 1, 1, 1, 1],
        ],
        Form::Euclidean,
    )
    .unwrap();
    t.check(hamming.min_distance(BUDGET) == Ok(3), || "Hamming [7,4] d != 3".into());
    t
}

fn report(id: u32, name: &str, t: &Tally, secs: f64, failed: &mut bool) {
    let status = if t.passed() { "PASS" } else { "FAIL" };
    println!("criterion {id} [{status}] {name}: {} checks, {} failures ({secs:.1}s)", t.checks, t.failures.len());
    for note in &t.notes {
        println!("    {note}");
    }
    for f in t.failures.iter().filter(|f| !f.is_empty()) {
        println!("    failure: {f}");
    }
    *failed |= !t.passed();
}

fn main() {
    let mut failed = false;
    let mut stats = RunStats::default();
    let timed = |f: &mut dyn FnMut() -> Tally| {
        let start = Instant::now();
        let t = f();
        (t, start.elapsed().as_secs_f64())
    };

    let (t, s) = timed(&mut || criterion_1(&mut stats));
    report(1, "Euclidean LCD equivalents over q in {4,5,7,8,9}", &t, s, &mut failed);
    let (t, s) = timed(&mut || criterion_2(&mut stats));
    report(2, "Hermitian LCD equivalents over F_9, F_16, F_25", &t, s, &mut failed);
    let (t, s) = timed(&mut || criterion_3(&mut stats));
    report(3, "negative controls over F_2, F_3, F_4-Hermitian", &t, s, &mut failed);
    let (t, s) = timed(&mut || criterion_4(&stats));
    report(4, "diagonal-perturbation determinant identity", &t, s, &mut failed);
    let (t, s) = timed(&mut || criterion_5(&stats));
    report(5, "hull and rank identities, |J| >= h", &t, s, &mut failed);
    let (t, s) = timed(&mut criterion_6);
    report(6, "hull extension to LCD [n+h, k, >= d]", &t, s, &mut failed);
    let (t, s) = timed(&mut criterion_7);
    report(7, "elimination determinant vs permutation expansion", &t, s, &mut failed);
    let (t, s) = timed(&mut criterion_8);
    report(8, "entropy and GV rate", &t, s, &mut failed);
    let (t, s) = timed(&mut criterion_9);
    report(9, "projective vs full minimum distance", &t, s, &mut failed);

    if failed {
        println!("acceptance: FAILED");
        std::process::exit(1);
    }
    println!("acceptance: all criteria passed");
}
