//! Acceptance criteria, each checked against an oracle written here
//! independently of the library. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::f64::consts::{LN_2, PI};
use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cuntz_bases::basis::{
    greedy_generators, verify_decomposition, walsh, walsh_gram_defect, walsh_index_of,
};
use cuntz_bases::cantor::{
    bessel_sums, gram_exponentials, indicator_relation_check, lambda_set, mu_hat,
    verify_lambda_partition, CantorRep, CantorStep, DEFAULT_REL_TOL,
};
use cuntz_bases::cuntz::{
    verify_cuntz, GeneralRepN, IntervalRep2, NAdicStep, Representation, Tolerance,
};
use cuntz_bases::entropy::{entropy, verify_entropy_recursion};
use cuntz_bases::function_space::{make_sine, HybridFunction};
use cuntz_bases::numeric::rational::{int, rat, to_f64};
use cuntz_bases::numeric::{enumerate_words, DyadicStep, MultiIndex, Rational};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Paley sign of `φ_n` on level-`k` cell `c`: `(−1)^{Σ b_{i−1}(n) x_i(c)}`
/// with `x_1` the most significant bit of `c`.
fn paley_sign(n: u64, k: u32, c: u64) -> i64 {
    let mut parity = 0;
    for i in 1..=k {
        parity ^= ((n >> (i - 1)) & 1) & ((c >> (k - i)) & 1);
    }
    if parity == 0 {
        1
    } else {
        -1
    }
}

fn bit_length(n: u64) -> u32 {
    64 - n.leading_zeros()
}

fn ints_of(f: &DyadicStep, level: u32) -> Vec<i64> {
    f.refine(level)
        .expect("refinement to a finer level")
        .coeffs()
        .iter()
        .map(|c| {
            assert!(c.is_integer(), "non-integer coefficient {c}");
            c.to_integer().try_into().expect("small integer")
        })
        .collect()
}

fn binary(digits: &[usize]) -> MultiIndex {
    MultiIndex::binary(digits)
}

/// Truncated product `Π_{0≤m<60} ½(1 + e^{iπλ4^{−m}})`.
fn mu_hat_oracle(lambda: f64) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    let mut t = lambda;
    for _ in 0..60 {
        acc *= (Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, PI * t)) * 0.5;
        t /= 4.0;
    }
    acc
}

fn criterion_1() -> Outcome {
    let steps: Vec<DyadicStep> = (0..64).map(|i| DyadicStep::indicator(6, i)).collect();
    // S_j on a coefficient vector is concat(a, ±a).
    for f in &steps {
        let a = ints_of(f, 6);
        for j in 0..2 {
            let sign = if j == 0 { 1 } else { -1 };
            let expect: Vec<i64> = a
                .iter()
                .copied()
                .chain(a.iter().map(|x| sign * x))
                .collect();
            ensure(ints_of(&IntervalRep2.isometry(j, f), 7) == expect, || {
                format!("S_{j} on {a:?}")
            })?;
        }
    }
    let interval = verify_cuntz(&IntervalRep2, &steps, Tolerance::Exact);
    ensure(interval.passed(), || {
        format!("interval: {:?}", interval.checks)
    })?;
    let cells: Vec<CantorStep> = steps.iter().cloned().map(CantorStep::from).collect();
    let cantor = verify_cuntz(&CantorRep, &cells, Tolerance::Exact);
    ensure(cantor.passed(), || format!("cantor: {:?}", cantor.checks))?;

    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst: f64 = 0.0;
    for n in [3usize, 4] {
        let vectors: Vec<NAdicStep> = (0..100)
            .map(|_| {
                let level = rng.gen_range(0..4u32);
                let len = n.pow(level);
                let coeffs = (0..len)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect();
                NAdicStep::new(n, level, coeffs)
            })
            .collect();
        let rep = GeneralRepN::new(n);
        let report = verify_cuntz(&rep, &vectors, Tolerance::Abs(1e-12));
        ensure(report.passed(), || format!("N = {n}: {:?}", report.checks))?;
        worst = worst.max(report.max_violation());
    }
    Ok(format!(
        "64 level-6 indicators exact (interval, Cantor); N = 3, 4 max violation {worst:.1e}"
    ))
}

fn criterion_2() -> Outcome {
    if let Some((i, j, g)) = walsh_gram_defect(10) {
        return Err(format!("library Gram defect at ({i}, {j}): {g}"));
    }
    // Oracle Gram from Paley sign rows packed as bits.
    let k = 10;
    let rows: Vec<Vec<u64>> = (0..1024u64)
        .map(|n| {
            let mut bits = vec![0u64; 16];
            for c in 0..1024u64 {
                if paley_sign(n, k, c) < 0 {
                    bits[(c / 64) as usize] |= 1 << (c % 64);
                }
            }
            bits
        })
        .collect();
    for n in 0..1024u64 {
        let lib = ints_of(&walsh(n), k);
        let ok = lib
            .iter()
            .enumerate()
            .all(|(c, &v)| v == paley_sign(n, k, c as u64));
        ensure(ok, || format!("walsh({n}) differs from the Paley signs"))?;
    }
    for a in 0..1024 {
        for b in a..1024 {
            let flips: u32 = rows[a]
                .iter()
                .zip(&rows[b])
                .map(|(x, y)| (x ^ y).count_ones())
                .sum();
            let dot = 1024 - 2 * flips as i64;
            ensure(dot == if a == b { 1024 } else { 0 }, || {
                format!("oracle Gram ({a}, {b}) = {dot}/1024")
            })?;
        }
    }
    let phi0 = DyadicStep::one();
    for n in 0..4096u64 {
        let digits: Vec<usize> = (0..bit_length(n))
            .map(|i| ((n >> i) & 1) as usize)
            .collect();
        let via_word = IntervalRep2.apply_word(&binary(&digits), &phi0);
        ensure(via_word == walsh(n), || {
            format!("walsh({n}) != S_digits φ0")
        })?;
    }
    Ok("Gram(φ0..φ1023) = I exact; walsh(n) = S_digits(n) φ0 for n < 4096".into())
}

fn criterion_3() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let status = Command::new(env!("CARGO_BIN_EXE_cuntz-bases"))
        .args(["walsh", "0..32", "--output"])
        .arg(dir.path())
        .status()
        .map_err(|e| e.to_string())?;
    ensure(status.success(), || {
        format!("cuntz-bases walsh exited with {status}")
    })?;
    for n in 0..32u64 {
        let path = dir.path().join(format!("phi_{n:04}.csv"));
        let text =
            std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
        let mut lines = text.lines();
        ensure(lines.next() == Some("x_left,value"), || {
            format!("φ{n}: bad header")
        })?;
        let k = bit_length(n);
        let rows: Vec<&str> = lines.collect();
        ensure(rows.len() == 1 << k, || {
            format!("φ{n}: {} rows, expected {}", rows.len(), 1 << k)
        })?;
        for (c, row) in rows.iter().enumerate() {
            let expect_x = if c == 0 {
                "0".to_string()
            } else {
                let g = 1u64 << (c as u64).trailing_zeros().min(k);
                format!("{}/{}", c as u64 / g, (1u64 << k) / g)
            };
            let expect = format!("{expect_x},{}", paley_sign(n, k, c as u64));
            ensure(*row == expect, || {
                format!("φ{n} row {c}: {row:?}, expected {expect:?}")
            })?;
        }
    }
    Ok("32 emitted files match the pointwise Paley sign patterns".into())
}

/// `∫_l^u sin(ax) sin(bx) dx`.
fn sin_sin(a: f64, b: f64, l: f64, u: f64) -> f64 {
    let prim = |x: f64| {
        let d = if (a - b).abs() < 1e-300 {
            x / 2.0
        } else {
            ((a - b) * x).sin() / (2.0 * (a - b))
        };
        d - ((a + b) * x).sin() / (2.0 * (a + b))
    };
    prim(u) - prim(l)
}

fn criterion_4() -> Outcome {
    let rep = IntervalRep2;
    let (mut odd_max, mut even_min): (f64, f64) = (0.0, f64::INFINITY);
    for n in 1..=99u64 {
        let s = make_sine(n);
        let v = rep.adjoint(0, &s);
        // Pointwise: S0* f(x) = ½(f(x/2) + f((x+1)/2)).
        for i in 0..16 {
            let x = (i as f64 + 0.37) / 16.0;
            let direct = 0.5 * ((PI * n as f64 * x).sin() + (PI * n as f64 * (x + 1.0)).sin());
            ensure((v.evaluate(x) - direct).abs() < 1e-12, || {
                format!("S0* s_{n} at {x}")
            })?;
        }
        let norm = v.norm();
        if n % 2 == 1 {
            odd_max = odd_max.max(norm);
        } else {
            even_min = even_min.min(norm);
        }
    }
    ensure(odd_max < 1e-10, || {
        format!("odd n: ‖S0* s_n‖ up to {odd_max:e}")
    })?;
    ensure(even_min > 0.1, || {
        format!("even n: ‖S0* s_n‖ down to {even_min}")
    })?;

    let mut worst: f64 = 0.0;
    for n in 1..=20u64 {
        let mut g: HybridFunction = make_sine(n);
        for k in 0..=4u32 {
            let h = rep.isometry(1, &g);
            // S1 S0^k s_n = ±sin(2π 2^{k+1} n x) on the two halves.
            let freq = 2.0 * PI * (n << (k + 1)) as f64;
            for i in 0..8 {
                let x = (i as f64 + 0.41) / 8.0;
                let direct = if x < 0.5 {
                    (freq * x).sin()
                } else {
                    -(freq * x).sin()
                };
                ensure((h.evaluate(x) - direct).abs() < 1e-9, || {
                    format!("S1 S0^{k} s_{n} at {x}")
                })?;
            }
            for m in 1..=20u64 {
                let a = 2.0 * PI * m as f64;
                let oracle = sin_sin(a, freq, 0.0, 0.5) - sin_sin(a, freq, 0.5, 1.0);
                let lib = make_sine(m).inner(&h);
                ensure(oracle.abs() < 1e-10 && lib.abs() < 1e-10, || {
                    format!("⟨s_{m}|S1 S0^{k} s_{n}⟩: library {lib:e}, oracle {oracle:e}")
                })?;
                worst = worst.max(lib.abs());
            }
            g = rep.isometry(0, &g);
        }
    }
    Ok(format!(
        "max odd ‖S0* s_n‖ {odd_max:.1e}, min even {even_min:.4}, max |⟨s_m|S1 S0^k s_n⟩| {worst:.1e}"
    ))
}

fn criterion_5() -> Outcome {
    let cover = greedy_generators(12).map_err(|e| e.to_string())?;
    let first: Vec<MultiIndex> = cover.generators().iter().take(4).cloned().collect();
    let expect = vec![
        binary(&[]),
        binary(&[1, 1]),
        binary(&[1, 1, 0]),
        binary(&[1, 0, 1]),
    ];
    ensure(first == expect, || format!("first generators {first:?}"))?;
    let psi = IntervalRep2.isometry(1, &DyadicStep::one());
    for (u, n) in first.iter().zip([1u64, 7, 11, 13]) {
        let v = IntervalRep2.apply_word(u, &psi);
        let k = bit_length(n);
        let ok = ints_of(&v, k)
            .iter()
            .enumerate()
            .all(|(c, &x)| x == paley_sign(n, k, c as u64));
        ensure(ok && walsh_index_of(u) == n, || {
            format!("S_u ψ for u = {u} is not φ{n}")
        })?;
    }
    // Oracle: every (K, u) with Σ(K) ≤ 1, u a generator, |K·u| ≤ 12 hits each
    // word exactly once.
    let gens: BTreeSet<&MultiIndex> = cover.generators().iter().collect();
    let mut hits: BTreeMap<MultiIndex, usize> = BTreeMap::new();
    for u in &gens {
        for k in enumerate_words(12 - u.len(), 2).filter(|k| k.weight() <= 1) {
            *hits.entry(k.concat(u)).or_default() += 1;
        }
    }
    let words: Vec<MultiIndex> = enumerate_words(12, 2).collect();
    ensure(words.len() == 8191, || format!("{} words", words.len()))?;
    for w in &words {
        ensure(hits.get(w) == Some(&1), || {
            format!("word {w} hit {:?} times", hits.get(w))
        })?;
        let (k, u) = cover
            .factorization(w)
            .ok_or_else(|| format!("{w} uncovered"))?;
        ensure(
            k.concat(u) == *w && k.weight() <= 1 && gens.contains(u),
            || format!("bad factorization of {w}"),
        )?;
    }
    ensure(hits.len() == words.len() && cover.is_bijective(), || {
        "stray words".into()
    })?;
    Ok(format!(
        "φ1, φ7, φ11, φ13 first; bijection on 8191 words, {} generators",
        gens.len()
    ))
}

fn criterion_6() -> Outcome {
    let cover = greedy_generators(9).map_err(|e| e.to_string())?;
    for k in 1..=10u32 {
        let report = verify_decomposition(&cover, k).map_err(|e| e.to_string())?;
        ensure(report.passed, || format!("level {k}: {report:?}"))?;
        // Oracle: the Paley indices of φ0 and S_w φ1 (|w| < k) are exactly 0..2^k.
        let mut idx: Vec<u64> = cover
            .coverage()
            .filter(|(w, _)| w.len() < k as usize)
            .map(|(w, _)| walsh_index_of(w))
            .collect();
        idx.push(0);
        idx.sort_unstable();
        ensure(idx == (0..1u64 << k).collect::<Vec<_>>(), || {
            format!("level {k}: indices not 0..2^{k}")
        })?;
    }
    Ok("levels 1..=10: 2^k vectors, Gram = I exact".into())
}

fn oracle_adjoint(a: &[f64], j: usize) -> Vec<f64> {
    if a.len() == 1 {
        return vec![if j == 0 { a[0] } else { 0.0 }];
    }
    let h = a.len() / 2;
    (0..h)
        .map(|i| {
            0.5 * if j == 0 {
                a[i] + a[i + h]
            } else {
                a[i] - a[i + h]
            }
        })
        .collect()
}

fn oracle_norm_sq(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>() / a.len() as f64
}

fn oracle_entropy(a: &[f64], k: usize) -> f64 {
    let total = oracle_norm_sq(a);
    let mut level = vec![a.to_vec()];
    for _ in 0..k {
        level = level
            .iter()
            .flat_map(|v| [oracle_adjoint(v, 0), oracle_adjoint(v, 1)])
            .collect();
    }
    level
        .iter()
        .map(|v| oracle_norm_sq(v) / total)
        .filter(|&m| m > 1e-15)
        .map(|m| -m * m.ln())
        .sum()
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_gap: f64 = 0.0;
    let mut worst_oracle: f64 = 0.0;
    for _ in 0..100 {
        let coeffs: Vec<Rational> = (0..64).map(|_| rat(rng.gen_range(-50..=50), 16)).collect();
        if coeffs.iter().all(|c| *c == int(0)) {
            continue;
        }
        let raw = DyadicStep::new(6, coeffs).map_err(|e| e.to_string())?;
        let f =
            raw.scale(&Rational::from_float(1.0 / to_f64(&raw.norm_sq()).sqrt()).expect("finite"));
        ensure((to_f64(&f.norm_sq()) - 1.0).abs() < 1e-12, || {
            "normalization".into()
        })?;
        let samples = f.to_f64_vec();
        let full: Vec<f64> = (0..64).map(|i| samples[i >> (6 - f.level())]).collect();
        for k in 1..=4 {
            let report =
                verify_entropy_recursion(&f, k, &IntervalRep2, 1e-12).map_err(|e| e.to_string())?;
            ensure(report.passed, || {
                format!("recursion gap {} at k = {k}", report.gap)
            })?;
            worst_gap = worst_gap.max(report.gap);
            let lib = entropy(&f, k, &IntervalRep2).map_err(|e| e.to_string())?;
            let diff = (lib - oracle_entropy(&full, k)).abs();
            ensure(diff < 1e-12, || {
                format!("ε{k} differs from oracle by {diff:e}")
            })?;
            worst_oracle = worst_oracle.max(diff);
            // Oracle recursion: ε_k(f) = ε_1(f) + Σ_i m_i ε_{k−1}(S_i* f).
            if k >= 2 {
                let total = oracle_norm_sq(&full);
                let rhs: f64 = oracle_entropy(&full, 1)
                    + (0..2)
                        .map(|i| {
                            let c = oracle_adjoint(&full, i);
                            let m = oracle_norm_sq(&c) / total;
                            if m > 1e-15 {
                                m * oracle_entropy(&c, k - 1)
                            } else {
                                0.0
                            }
                        })
                        .sum::<f64>();
                ensure((rhs - oracle_entropy(&full, k)).abs() < 1e-12, || {
                    "oracle recursion".into()
                })?;
            }
        }
    }
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let f = cuntz_bases::basis::ingest_signal_f64(&[2.0 * s, 0.0], Some(1))
        .map_err(|e| e.to_string())?;
    let e1 = entropy(&f, 1, &IntervalRep2).map_err(|e| e.to_string())?;
    ensure((e1 - LN_2).abs() < 1e-12, || {
        format!("ε1((φ0+φ1)/√2) = {e1}")
    })?;
    Ok(format!(
        "max recursion gap {worst_gap:.1e}, max deviation from oracle {worst_oracle:.1e}, ε1 = {e1:.15}"
    ))
}

fn criterion_8() -> Outcome {
    let gram = gram_exponentials(8);
    ensure(gram.passed && gram.pairs_checked == 32640, || {
        format!("{gram:?}")
    })?;
    let pts: Vec<u64> = lambda_set(8).iter().map(|l| l.value).collect();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            let v = mu_hat_oracle(pts[b] as f64 - pts[a] as f64).norm();
            ensure(v < 1e-8, || format!("|μ̂({} − {})| = {v:e}", pts[b], pts[a]))?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let l: f64 = rng.gen_range(-100.0..100.0);
        let lhs = mu_hat(l, DEFAULT_REL_TOL);
        let rhs = (Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, PI * l))
            * 0.5
            * mu_hat(l / 4.0, DEFAULT_REL_TOL);
        let fe = (lhs - rhs).norm();
        let vs_oracle = (lhs - mu_hat_oracle(l)).norm();
        ensure(fe <= 1e-9 && vs_oracle <= 1e-9, || {
            format!("λ = {l}: equation {fe:e}, oracle {vs_oracle:e}")
        })?;
        worst = worst.max(fe);
    }
    let f = CantorStep::cell_indicator(&binary(&[0]));
    let norm_sq = to_f64(&f.norm_sq());
    let sums = bessel_sums(&f, 8, DEFAULT_REL_TOL);
    // Oracle: ⟨e_λ|χ_τ0(X)⟩ = ½ conj μ̂(λ/4).
    let mut acc = 0.0;
    for (p, s) in sums.iter().enumerate() {
        let lo = if p == 0 { 0 } else { 1usize << (p - 1) };
        acc += pts[lo..1 << p]
            .iter()
            .map(|&l| 0.25 * mu_hat_oracle(l as f64 / 4.0).norm_sqr())
            .sum::<f64>();
        ensure((s - acc).abs() < 1e-9, || {
            format!("p = {p}: Bessel sum {s}, oracle {acc}")
        })?;
        ensure(*s <= norm_sq + 1e-12, || {
            format!("p = {p}: {s} exceeds ‖f‖² = {norm_sq}")
        })?;
        if p > 0 {
            ensure(sums[p - 1] <= s + 1e-15, || {
                format!("Bessel sums decrease at p = {p}")
            })?;
        }
    }
    Ok(format!(
        "32640 pairs exact; functional equation max {worst:.1e}; Bessel p = 8 sum {:.9} ≤ {norm_sq}",
        sums[8]
    ))
}

fn criterion_9() -> Outcome {
    let one = CantorStep::one();
    let mut count = 0;
    for word in enumerate_words(6, 2).filter(|w| !w.is_empty()) {
        let report = indicator_relation_check(&word);
        ensure(report.passed, || {
            format!("{}: residual {:?}", report.word, report.residual)
        })?;
        // Oracle: S_K χ_X takes the value (−1)^{K·L} on cell L.
        let k = word.len() as u32;
        let v = CantorRep.apply_word(&word, &one);
        let vals = ints_of(v.as_cells(), k);
        for (c, &x) in vals.iter().enumerate() {
            let parity: usize = (0..k as usize)
                .map(|i| word.digits()[i] * ((c >> (k as usize - 1 - i)) & 1))
                .sum();
            ensure(x == if parity.is_multiple_of(2) { 1 } else { -1 }, || {
                format!("S_{word} χ_X on cell {c}")
            })?;
        }
        count += 1;
    }
    ensure(count == 126, || format!("{count} words"))?;
    Ok("126 words, exact".into())
}

fn criterion_10() -> Outcome {
    for p in 0..=8u32 {
        let report = verify_lambda_partition(p);
        ensure(report.passed, || format!("p = {p}: {report:?}"))?;
        // Oracle: strip factors of 4 from every nonzero subset sum of {4^i}.
        let members: BTreeSet<u64> = (0..1u64 << p)
            .map(|code| {
                (0..p)
                    .filter(|i| code >> i & 1 == 1)
                    .map(|i| 4u64.pow(i))
                    .sum()
            })
            .collect();
        let mut orbits: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &l in members.iter().filter(|&&l| l != 0) {
            let mut m = l;
            while m % 4 == 0 {
                m /= 4;
            }
            ensure(m % 2 == 1 && members.contains(&m), || {
                format!("{l} reduces to {m}")
            })?;
            orbits.entry(m).or_default().push(l);
        }
        let lib: BTreeMap<u64, Vec<u64>> = report.orbits.iter().cloned().collect();
        ensure(lib == orbits, || format!("p = {p}: orbits differ"))?;
    }
    Ok("p = 0..=8 exact".into())
}

fn main() -> ExitCode {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 10] = [
        ("Cuntz relations", criterion_1),
        ("Haar-Walsh orthonormal basis", criterion_2),
        ("first 32 Walsh functions emitted", criterion_3),
        ("sine generators", criterion_4),
        ("greedy generator cover", criterion_5),
        ("decomposition up to level 10", criterion_6),
        ("entropy recursion", criterion_7),
        ("Cantor spectrum", criterion_8),
        ("cylinder indicators", criterion_9),
        ("spectrum orbit partition", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".into()))
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    let total = start.elapsed().as_secs_f64();
    println!("{} of 10 criteria passed in {total:.2}s", 10 - failed);
    if failed == 0 && total < 60.0 {
        ExitCode::SUCCESS
    } else {
        if total >= 60.0 {
            println!("FAIL time budget: {total:.2}s exceeds 60s");
        }
        ExitCode::FAILURE
    }
}
