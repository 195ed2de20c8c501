//! Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use klr::algebra::{divided_mono, AlgebraElement};
use klr::lie::{kostant_partitions, DividedPowerWord, Weight};
use klr::linalg::Ring;
use klr::modules::{Character, StandardModule};
use klr::resolution::{build_p_power, build_q, chain_maps, Params};
use klr::verify::basis::{check_basis_weight, small_weights};
use klr::verify::{
    check_homogeneity, degree_formulas, ext_compute, hom_direct_range, homology_dims_multi, lemma_suite_with, verify_resolution,
    LemmaConfig, SIZE_GUARD,
};

type Outcome = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn dpw(parts: &[(i32, usize)]) -> DividedPowerWord {
    DividedPowerWord::new(parts.to_vec())
}

fn e(parts: &[(i32, usize)]) -> AlgebraElement {
    AlgebraElement::from_mono(divided_mono(&dpw(parts)))
}

/// `psi_{g_1} ... psi_{g_k}` with 1-based generators and right idempotent `idem`.
fn psi(word1: &[u8], idem: &[i32]) -> AlgebraElement {
    let w: Vec<u8> = word1.iter().map(|g| g - 1).collect();
    AlgebraElement::psi_word(&w, idem).unwrap()
}

fn params(a: i32, b: i32, m: usize) -> Params {
    Params::new(a, b, m).unwrap()
}

/// `(a, b, m)` with `a = 1` for the given `l` and `m` ranges.
fn instances(ls: &[usize], ms: &[usize]) -> Vec<Params> {
    ls.iter().flat_map(|&l| ms.iter().map(move |&m| params(1, l as i32 - 1, m))).collect()
}

fn range_3() -> Vec<Params> {
    let mut v = instances(&[1, 2, 3], &[1, 2, 3]);
    v.extend(instances(&[4], &[1, 2]));
    v
}

fn within(start: Instant, limit: Duration) -> Outcome {
    ensure(start.elapsed() < limit, || format!("took {:?}, limit {limit:?}", start.elapsed()))
}

fn golden_p() -> Outcome {
    let start = Instant::now();
    let c = build_p_power(params(1, 1, 2)).map_err(|e| e.to_string())?;
    let shifts: Vec<i32> = c.levels.iter().map(|l| l[0].shift).collect();
    ensure(shifts == [-2, 0, 0], || format!("shifts {shifts:?}"))?;
    let words: Vec<DividedPowerWord> = c.levels.iter().map(|l| l[0].idem.clone()).collect();
    let want = [dpw(&[(1, 2), (2, 2)]), dpw(&[(1, 1), (2, 2), (1, 1)]), dpw(&[(2, 2), (1, 2)])];
    ensure(words == want, || format!("idempotents {words:?}"))?;
    ensure(c.levels.iter().all(|l| l.len() == 1), || "levels are not single summands".into())?;
    let d0 = &(&e(&[(1, 1), (2, 2), (1, 1)]) * &psi(&[3, 2], &[1, 1, 2, 2])) * &e(&[(1, 2), (2, 2)]);
    let d1 = &(&e(&[(2, 2), (1, 2)]) * &psi(&[3, 2, 1], &[1, 2, 2, 1])) * &e(&[(1, 1), (2, 2), (1, 1)]);
    ensure(c.boundaries[0].get(0, 0) == Some(&d0) && c.boundaries[0].entries.len() == 1, || "d_0 differs".into())?;
    ensure(c.boundaries[1].get(0, 0) == Some(&d1) && c.boundaries[1].entries.len() == 1, || "d_1 differs".into())?;
    within(start, Duration::from_secs(1))
}

fn golden_q() -> Outcome {
    let start = Instant::now();
    let q = build_q(params(1, 1, 2)).map_err(|e| e.to_string())?;
    let shifts: Vec<Vec<i32>> = q.levels.iter().map(|l| l.iter().map(|s| s.shift).collect()).collect();
    ensure(shifts == vec![vec![1], vec![2, 2], vec![3]], || format!("shifts {shifts:?}"))?;
    let words: Vec<Vec<Vec<i32>>> = q.levels.iter().map(|l| l.iter().map(|s| s.idem.expand()).collect()).collect();
    let want = vec![vec![vec![1, 2, 1, 2]], vec![vec![1, 2, 2, 1], vec![2, 1, 1, 2]], vec![vec![2, 1, 2, 1]]];
    ensure(words == want, || format!("words {words:?}"))?;
    let (i1221, i2112) = (0, 1);
    let c1 = [(i2112, psi(&[3], &[2, 1, 1, 2]).scale(-1)), (i1221, psi(&[1], &[1, 2, 2, 1]))];
    for (col, x) in &c1 {
        ensure(q.boundaries[1].get(0, *col) == Some(x), || format!("c_1 entry {col} differs"))?;
    }
    let c0 = [(i2112, psi(&[1], &[1, 2, 1, 2])), (i1221, psi(&[3], &[1, 2, 1, 2]))];
    for (row, x) in &c0 {
        ensure(q.boundaries[0].get(*row, 0) == Some(x), || format!("c_0 entry {row} differs"))?;
    }
    ensure(q.boundaries[1].entries.len() == 2 && q.boundaries[0].entries.len() == 2, || "extra entries".into())?;
    within(start, Duration::from_secs(1))
}

fn failing(reports: &[klr::verify::Report]) -> Outcome {
    match reports.iter().find(|r| !r.passed()) {
        None => Ok(()),
        Some(r) => Err(format!("{} {}: {:?}", r.check, r.params, r.witnesses.first())),
    }
}

fn symbolic_identities() -> Outcome {
    let start = Instant::now();
    for p in range_3() {
        let reports = verify_resolution(p).map_err(|e| e.to_string())?;
        failing(&reports)?;
    }
    within(start, Duration::from_secs(600))
}

fn exactness() -> Outcome {
    let start = Instant::now();
    let rings = [Ring::Q, Ring::Fp(2), Ring::Fp(3)];
    for p in instances(&[1, 2, 3], &[1, 2]) {
        let c = build_p_power(p).map_err(|e| e.to_string())?;
        let want = Character::of_standard(&StandardModule::delta_power(p.root(), p.m), 12);
        let tables = homology_dims_multi(&c, 12, &rings, SIZE_GUARD).map_err(|e| e.to_string())?;
        for (h, ring) in tables.iter().zip(rings) {
            let higher = h.higher_homology();
            ensure(higher.is_empty(), || format!("{p:?} {ring}: higher homology {:?}", higher.first()))?;
            let d = h.h0().differences(&want);
            ensure(d.is_empty(), || format!("{p:?} {ring}: H_0 differs {:?}", d.first()))?;
            let d = h.euler().differences(&want);
            ensure(d.is_empty(), || format!("{p:?} {ring}: Euler characteristic differs {:?}", d.first()))?;
        }
    }
    within(start, Duration::from_secs(900))
}

fn degrees() -> Outcome {
    let w = degree_formulas(&range_3()).map_err(|e| e.to_string())?;
    ensure(w.is_empty(), || format!("{:?}", w.first()))?;
    for p in range_3() {
        let pc = build_p_power(p).map_err(|e| e.to_string())?;
        let qc = build_q(p).map_err(|e| e.to_string())?;
        let (f, g) = chain_maps(p).map_err(|e| e.to_string())?;
        let mut w = check_homogeneity(&pc);
        w.extend(check_homogeneity(&qc));
        for n in 0..pc.levels.len() {
            if let Err(e) = klr::resolution::check_matrix(&f[n], &pc.levels[n], &qc.levels[n]) {
                w.push(format!("f_{n}: {e}"));
            }
            if let Err(e) = klr::resolution::check_matrix(&g[n], &qc.levels[n], &pc.levels[n]) {
                w.push(format!("g_{n}: {e}"));
            }
        }
        ensure(w.is_empty(), || format!("{p:?}: {:?}", w.first()))?;
        // s_lambda sums to the shifts recorded in the complex
        for (n, level) in pc.levels.iter().enumerate() {
            for (s, lam) in level.iter().zip(p.lambdas(n)) {
                ensure(s.shift == lam.shift(), || format!("{p:?}: shift of {:?}", lam.parts))?;
            }
        }
    }
    Ok(())
}

fn basis_theorem() -> Outcome {
    for theta in small_weights(4) {
        let bad = check_basis_weight(&theta, 8).map_err(|e| e.to_string())?;
        ensure(bad.is_empty(), || format!("{theta:?}: {:?}", bad.first()))?;
    }
    Ok(())
}

fn lemmas() -> Outcome {
    let cfg = LemmaConfig { max_d: 6, ..LemmaConfig::default() };
    let reports = lemma_suite_with(&cfg).map_err(|e| e.to_string())?;
    for name in ["first_row_expansion_f_example", "first_row_expansion_g_example"] {
        ensure(reports.iter().any(|r| r.check == name), || format!("{name} missing"))?;
    }
    failing(&reports)
}

fn a2_weights() -> Vec<Weight> {
    let mut out = Vec::new();
    for c1 in 0..=4u32 {
        for c2 in 0..=4 - c1 {
            if c1 + c2 > 0 {
                out.push(Weight::from(vec![(1, c1), (2, c2)]));
            }
        }
    }
    out
}

fn ext_sanity() -> Outcome {
    let start = Instant::now();
    let cutoff = 8;
    for theta in a2_weights() {
        let parts = kostant_partitions(&theta);
        for p in &parts {
            for s in &parts {
                let r = ext_compute(p, s, cutoff, Ring::Z).map_err(|e| e.to_string())?;
                ensure(r.rows.iter().all(|row| row.n <= r.length), || format!("{p} {s}: Ext beyond the length"))?;
                let lo = r.rows.iter().map(|x| x.degree).min().unwrap_or(0).min(-8);
                let direct = hom_direct_range(p, s, lo, cutoff).map_err(|e| e.to_string())?;
                for (d, h) in (lo..=cutoff).zip(direct) {
                    ensure(r.rank(0, d) == h, || format!("{p} {s}: Ext^0 in degree {d} is {}, Hom {h}", r.rank(0, d)))?;
                }
                let small = ext_compute(p, s, cutoff - 2, Ring::Z).map_err(|e| e.to_string())?;
                ensure(r.truncate(cutoff - 2) == small, || format!("{p} {s}: not cutoff-stable"))?;
            }
        }
    }
    within(start, Duration::from_secs(600))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        ("golden P(alpha^2) for alpha_1 + alpha_2", golden_p),
        ("golden Q for alpha_1 + alpha_2, m = 2", golden_q),
        ("d^2 = 0, chain maps, splitting", symbolic_identities),
        ("exactness and H_0 over Q, F2, F3", exactness),
        ("degree bookkeeping and homogeneity", degrees),
        ("basis theorem cross-check", basis_theorem),
        ("identity suite", lemmas),
        ("Ext sanity", ext_sanity),
    ];
    let mut all = true;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let t = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({t:.1?})", k + 1),
            Err(msg) => {
                all = false;
                println!("criterion {}: FAIL  {name} ({t:.1?}): {msg}", k + 1);
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
