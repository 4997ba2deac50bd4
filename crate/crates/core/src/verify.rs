//! The built-in verification suite behind `cuntz-bases verify`.
//!
//! Every check is deterministic: random inputs come from a fixed seed.

use std::f64::consts::LN_2;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::basis::{
    build_frame, compute_k, frames_orthogonal, greedy_generators, verify_decomposition, walsh,
    walsh_expand, walsh_expand_direct, walsh_gram_defect, walsh_index_of, walsh_synthesize,
};
use crate::cantor::{
    bessel_sums, exp_coefficient, gram_exponentials, indicator_relation_check, mu_hat,
    mu_hat_is_zero, verify_lambda_partition, CantorRep, CantorStep, DEFAULT_REL_TOL,
};
use crate::cuntz::{
    verify_cuntz, verify_unitary_matrix, GeneralRepN, HilbertVector, IntervalRep2, NAdicStep,
    Representation, Tolerance,
};
use crate::entropy::{best_basis, entropy, onb_entropy, verify_entropy_recursion, EntropyTree};
use crate::function_space::{HybridFunction, Reflection};
use crate::numeric::rational::int;
use crate::numeric::{enumerate_words, DyadicStep, MultiIndex};

const SEED: u64 = 0x5eed_c0de;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    All,
    Cuntz,
    Walsh,
    Sine,
    Entropy,
    Cantor,
}

impl Suite {
    fn members(self) -> &'static [Suite] {
        match self {
            Suite::All => &[
                Suite::Cuntz,
                Suite::Walsh,
                Suite::Sine,
                Suite::Entropy,
                Suite::Cantor,
            ],
            Suite::Cuntz => &[Suite::Cuntz],
            Suite::Walsh => &[Suite::Walsh],
            Suite::Sine => &[Suite::Sine],
            Suite::Entropy => &[Suite::Entropy],
            Suite::Cantor => &[Suite::Cantor],
        }
    }

    fn label(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Cuntz => "cuntz",
            Suite::Walsh => "walsh",
            Suite::Sine => "sine",
            Suite::Entropy => "entropy",
            Suite::Cantor => "cantor",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{mark} [{}] {}: {}", self.suite, self.name, self.detail)
    }
}

/// Knobs for the numeric checks.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    /// Tolerance for floating-point identities.
    pub tol: f64,
    /// Resolution used by the exhaustive Walsh and decomposition checks.
    pub level: u32,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            tol: 1e-10,
            level: 8,
        }
    }
}

pub fn run(suite: Suite, opts: &Options) -> Vec<Check> {
    let mut out = Vec::new();
    for &s in suite.members() {
        let mut ctx = Ctx {
            suite: s.label(),
            out: &mut out,
        };
        match s {
            Suite::Cuntz => cuntz_checks(&mut ctx, opts),
            Suite::Walsh => walsh_checks(&mut ctx, opts),
            Suite::Sine => sine_checks(&mut ctx, opts),
            Suite::Entropy => entropy_checks(&mut ctx, opts),
            Suite::Cantor => cantor_checks(&mut ctx, opts),
            Suite::All => unreachable!("expanded above"),
        }
    }
    out
}

struct Ctx<'a> {
    suite: &'static str,
    out: &'a mut Vec<Check>,
}

impl Ctx<'_> {
    fn record(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.out.push(Check {
            suite: self.suite,
            name: name.to_string(),
            passed,
            detail: detail.into(),
        });
    }
}

pub(crate) fn random_step(rng: &mut ChaCha8Rng, level: u32) -> DyadicStep {
    let coeffs = (0..1usize << level)
        .map(|_| int(rng.gen_range(-9..=9)))
        .collect();
    let f = DyadicStep::new(level, coeffs).expect("power-of-two length");
    if f.is_zero() {
        DyadicStep::one()
    } else {
        f
    }
}

fn random_nadic(rng: &mut ChaCha8Rng, base: usize, level: u32) -> NAdicStep {
    let coeffs = (0..base.pow(level))
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    NAdicStep::new(base, level, coeffs)
}

fn cuntz_checks(ctx: &mut Ctx, opts: &Options) {
    let cells: Vec<DyadicStep> = (0..64).map(|i| DyadicStep::indicator(6, i)).collect();
    let r = verify_cuntz(&IntervalRep2, &cells, Tolerance::Exact);
    ctx.record("interval relations, 64 level-6 cells", r.passed(), "exact");

    let cantor: Vec<CantorStep> = cells.iter().cloned().map(CantorStep::from).collect();
    let r = verify_cuntz(&CantorRep, &cantor, Tolerance::Exact);
    ctx.record("Cantor relations, 64 level-6 cells", r.passed(), "exact");

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for n in [3usize, 4] {
        let vs: Vec<NAdicStep> = (0..100).map(|_| random_nadic(&mut rng, n, 2)).collect();
        let r = verify_cuntz(&GeneralRepN::new(n), &vs, Tolerance::Abs(1e-12));
        ctx.record(
            &format!("N={n} relations, 100 random vectors"),
            r.passed(),
            format!("max violation {:.2e}", r.max_violation()),
        );
    }

    let xs: Vec<f64> = (0..50).map(|_| rng.gen_range(0.0..1.0)).collect();
    for n in [2usize, 3, 4] {
        let r = verify_unitary_matrix(n, &xs, 1e-12);
        ctx.record(
            &format!("N={n} filter matrix unitary"),
            r.passed,
            format!("max deviation {:.2e}", r.max_deviation),
        );
    }

    let hybrids: Vec<HybridFunction> = (1..=8)
        .flat_map(|n| [HybridFunction::sine(n), HybridFunction::cosine(n)])
        .chain([HybridFunction::sine(3).plus(&HybridFunction::from_step(walsh(5)))])
        .collect();
    let r = verify_cuntz(&IntervalRep2, &hybrids, Tolerance::Abs(opts.tol));
    ctx.record(
        "interval relations on trigonometric hybrids",
        r.passed(),
        format!("max violation {:.2e}", r.max_violation()),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let mut iso = true;
    let mut ranges = true;
    for _ in 0..50 {
        let f = random_step(&mut rng, 4);
        let g = random_step(&mut rng, 3);
        iso &= (0..2).all(|j| IntervalRep2.s_apply(j, &f).norm_sq() == f.norm_sq());
        ranges &= IntervalRep2
            .s_apply(0, &f)
            .inner(&IntervalRep2.s_apply(1, &g))
            == int(0);
    }
    ctx.record("S_j is isometric on steps", iso, "50 random steps, exact");
    ctx.record(
        "ranges of S0 and S1 are orthogonal",
        ranges,
        "50 random pairs, exact",
    );
    let worst = hybrids
        .iter()
        .flat_map(|h| {
            (0..2).map(move |j| (IntervalRep2.s_apply_hybrid(j, h).norm_sq() - h.norm_sq()).abs())
        })
        .fold(0.0, f64::max);
    ctx.record(
        "S_j is isometric on hybrids",
        worst < opts.tol,
        format!("max {worst:.2e}"),
    );

    let kernel_ok = (1..=3u32).all(|k| {
        let n = 1usize << k;
        (0..3usize.pow(n as u32)).all(|code| {
            let vals: Vec<i64> = (0..n)
                .map(|i| (code / 3usize.pow(i as u32) % 3) as i64 - 1)
                .collect();
            let f = DyadicStep::from_ints(&vals).expect("power-of-two length");
            let reflected = (0..n / 2).all(|i| vals[i + n / 2] == -vals[i]);
            IntervalRep2.s_adjoint(0, &f).is_zero() == reflected
        })
    });
    ctx.record(
        "ker S0* is the half-period antisymmetric steps",
        kernel_ok,
        "all {-1,0,1} steps, level ≤ 3",
    );

    let mut worst = 0.0f64;
    for n in [3usize, 4] {
        let rep = GeneralRepN::new(n);
        for _ in 0..20 {
            let f = random_nadic(&mut rng, n, 2);
            let p: Vec<NAdicStep> = (0..n)
                .map(|j| rep.isometry(j, &rep.adjoint(j, &f)))
                .collect();
            for (j, pj) in p.iter().enumerate() {
                let pp = rep.isometry(j, &rep.adjoint(j, pj));
                worst = worst.max(pp.minus(pj).norm_sq().sqrt());
                for k in 0..n {
                    if k != j {
                        worst = worst.max(rep.isometry(k, &rep.adjoint(k, &p[j])).norm_sq().sqrt());
                    }
                }
            }
        }
    }
    ctx.record(
        "S_j S_j* are orthogonal idempotents (N = 3, 4)",
        worst < 1e-12,
        format!("max {worst:.2e}"),
    );
}

fn walsh_checks(ctx: &mut Ctx, opts: &Options) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 5);
    let mut algebra = true;
    let mut refinement = true;
    for _ in 0..50 {
        let f = random_step(&mut rng, 3);
        let g = random_step(&mut rng, 4);
        let h = random_step(&mut rng, 2);
        let c = int(rng.gen_range(-5..=5));
        algebra &= f.inner(&g) == g.inner(&f)
            && f.add(&h.scale(&c)).inner(&g) == f.inner(&g) + &c * h.inner(&g)
            && f.norm_sq() > int(0);
        let n = f.normalize();
        refinement &= n
            .refine(n.level() + 2)
            .map(|r| r.normalize() == n)
            .unwrap_or(false)
            && f.refine(6)
                .map(|r| r.inner(&g) == f.inner(&g))
                .unwrap_or(false);
    }
    ctx.record(
        "inner product is symmetric, bilinear and positive",
        algebra,
        "50 random triples, exact",
    );
    ctx.record(
        "refinement preserves values and inner products",
        refinement,
        "50 random steps, exact",
    );
    let counts = [2usize, 3].iter().all(|&b| {
        (0..=6u32).all(|l| enumerate_words(l as usize, b).count() == (b.pow(l + 1) - 1) / (b - 1))
    });
    ctx.record("word enumeration counts", counts, "N = 2, 3 and length ≤ 6");
    let k = opts.level;
    let defect = walsh_gram_defect(k);
    ctx.record(
        &format!("Gram of φ0..φ{} is the identity", (1u64 << k) - 1),
        defect.is_none(),
        match defect {
            None => "exact".to_string(),
            Some((m, n, g)) => format!("⟨φ{m}|φ{n}⟩ = {g}"),
        },
    );

    let rep = IntervalRep2;
    let bad = (0..1u64 << k).find(|&n| {
        let word = MultiIndex::digits_of(2, n as u128);
        rep.apply_word(&word, &DyadicStep::one()) != walsh(n)
    });
    ctx.record(
        "walsh(n) = S_digits(n) φ0",
        bad.is_none(),
        format!("n < {}", 1u64 << k),
    );

    let bad = (0..256u64).find(|&n| {
        rep.s_apply(0, &walsh(n)) != walsh(2 * n) || rep.s_apply(1, &walsh(n)) != walsh(2 * n + 1)
    });
    ctx.record("S0 φn = φ2n and S1 φn = φ2n+1", bad.is_none(), "n < 256");

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 1);
    let mut ok = true;
    for _ in 0..100 {
        let f = random_step(&mut rng, 6);
        let c = walsh_expand(&f);
        let parseval: num_rational::BigRational = c.iter().map(|x| x * x).sum();
        ok &= walsh_synthesize(&c).map(|g| g == f).unwrap_or(false) && parseval == f.norm_sq();
    }
    ctx.record(
        "expand/synthesize round trip and Parseval",
        ok,
        "100 random level-6 steps, exact",
    );

    let f = random_step(&mut rng, 5);
    ctx.record(
        "fast transform equals inner products",
        walsh_expand(&f) == walsh_expand_direct(&f),
        "level 5",
    );

    match greedy_generators(12) {
        Ok(cover) => {
            let first: Vec<u64> = cover
                .generators()
                .iter()
                .take(4)
                .map(walsh_index_of)
                .collect();
            ctx.record(
                "first generators φ1, φ7, φ11, φ13",
                first == [1, 7, 11, 13],
                format!("{first:?}"),
            );
            ctx.record(
                "cover is a bijection on words of length ≤ 12",
                cover.is_bijective(),
                format!("{} generators", cover.generators().len()),
            );
            let even = cover.generators().iter().all(|g| g.weight() % 2 == 0);
            ctx.record("generator words have even weight", even, "");
            let mut detail = String::new();
            let mut ok = true;
            for level in 1..=k.min(13) {
                match verify_decomposition(&cover, level) {
                    Ok(r) => {
                        ok &= r.passed;
                        if !r.passed {
                            detail = format!("level {level}: {:?}", r.defect);
                        }
                    }
                    Err(e) => {
                        ok = false;
                        detail = e.to_string();
                    }
                }
            }
            if ok {
                detail = format!("levels 1..={k}, exact Gram and count 2^k");
            }
            ctx.record("decomposition is an orthonormal basis", ok, detail);
        }
        Err(e) => ctx.record("greedy generator cover", false, e.to_string()),
    }

    let psi = walsh(1);
    let kk = compute_k(&psi, &rep, 8, Tolerance::Exact);
    ctx.record(
        "K(φ1) not found up to depth 8",
        matches!(kk, Ok(None)),
        format!("{kk:?}"),
    );
    let frame = build_frame(&psi, None, 3, &rep);
    let reproduces = frame
        .words
        .iter()
        .zip(&frame.vectors)
        .all(|(w, v)| *v == walsh(walsh_index_of(w)));
    ctx.record(
        "frame of φ1 reproduces Walsh functions",
        reproduces,
        format!("{} vectors", frame.len()),
    );
}

fn sine_checks(ctx: &mut Ctx, opts: &Options) {
    let rep = IntervalRep2;
    let s = HybridFunction::sine;
    let odd_max = (1..=99)
        .step_by(2)
        .map(|n| rep.s_adjoint_hybrid(0, &s(n)).norm())
        .fold(0.0, f64::max);
    ctx.record(
        "‖S0* s_n‖ vanishes for odd n ≤ 99",
        odd_max < opts.tol,
        format!("max {odd_max:.2e}"),
    );
    let even_min = (2..=98)
        .step_by(2)
        .map(|n| rep.s_adjoint_hybrid(0, &s(n)).norm())
        .fold(f64::INFINITY, f64::min);
    ctx.record(
        "‖S0* s_n‖ > 0.1 for even n ≤ 98",
        even_min > 0.1,
        format!("min {even_min:.4}"),
    );

    let halving = (1..=49).all(|m| rep.s_adjoint_hybrid(0, &s(2 * m)) == s(m));
    ctx.record("S0* s_2m = s_m", halving, "atom-level, m ≤ 49");
    let doubling = (1..=20).all(|n| {
        (0..=4).all(|m| rep.apply_word(&MultiIndex::binary(&vec![0; m]), &s(n)) == s(n << m))
    });
    ctx.record("S0^m s_n = s_(2^m n)", doubling, "atom-level");

    let mut worst = 0.0f64;
    for n in 1..=20 {
        for k in 0..=4 {
            let mut word = vec![1];
            word.extend(std::iter::repeat_n(0, k));
            let v = rep.apply_word(&MultiIndex::binary(&word), &s(n));
            for m in 1..=20 {
                worst = worst.max(s(m).inner(&v).abs());
            }
        }
    }
    ctx.record(
        "⟨s_m|S1 S0^k s_n⟩ = 0",
        worst < opts.tol,
        format!("m, n ≤ 20, k ≤ 4, max {worst:.2e}"),
    );

    let tol = Tolerance::Abs(opts.tol);
    let k1 = compute_k(&s(1), &rep, 4, tol);
    let expected = MultiIndex::binary(&[1, 1]);
    ctx.record(
        "K(s1) = (1,1)",
        matches!(&k1, Ok(Some(k)) if *k == expected),
        format!("{k1:?}"),
    );
    let k = k1.ok().flatten();
    let f1 = build_frame(&s(1), k.as_ref(), 3, &rep);
    let f3 = build_frame(&s(3), k.as_ref(), 3, &rep);
    ctx.record(
        "frame of s1 is orthogonal",
        f1.max_cross_inner() < opts.tol,
        format!("{} vectors, max {:.2e}", f1.len(), f1.max_cross_inner()),
    );
    ctx.record(
        "frames of s1 and s3 are orthogonal",
        frames_orthogonal(&f1, &f3, tol),
        "",
    );

    let light: Vec<MultiIndex> = enumerate_words(4, 2).filter(|w| w.weight() <= 1).collect();
    let family: Vec<HybridFunction> = (0..=5)
        .flat_map(|n| light.iter().map(move |w| rep.apply_word(w, &s(2 * n + 1))))
        .collect();
    let mut worst = 0.0f64;
    for a in 0..family.len() {
        for b in a + 1..family.len() {
            worst = worst.max(family[a].inner(&family[b]).abs());
        }
    }
    ctx.record(
        "{S_I s_(2n+1) : Σ(I) ≤ 1} is orthogonal",
        worst < opts.tol,
        format!("{} vectors, max {worst:.2e}", family.len()),
    );

    let classes = s(3).classify_reflection(opts.tol) == Reflection::AntiperiodicHalf
        && s(2).classify_reflection(opts.tol) == Reflection::PeriodicHalf;
    ctx.record(
        "half-period reflection classes",
        classes,
        "s3 antiperiodic, s2 periodic",
    );
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 6);
    let mut worst = 0.0f64;
    for _ in 0..10 {
        let mut f = HybridFunction::zero();
        for n in 0..=6u64 {
            let a = crate::numeric::rational::rat(rng.gen_range(-9..=9), 4);
            let b = crate::numeric::rational::rat(rng.gen_range(-9..=9), 4);
            f = f
                .plus(&HybridFunction::cosine(n).scale(&a))
                .plus(&s(n).scale(&b));
        }
        let fc = f.fourier_coeffs(8);
        let energy = fc.cos[0] * fc.cos[0]
            + (1..=8)
                .map(|n| 2.0 * (fc.cos[n] * fc.cos[n] + fc.sin[n] * fc.sin[n]))
                .sum::<f64>();
        worst = worst.max((energy - f.norm_sq()).abs());
    }
    ctx.record(
        "Parseval for trigonometric polynomials",
        worst < opts.tol,
        format!("max {worst:.2e}"),
    );

    let mut agree = true;
    for _ in 0..20 {
        let f = random_step(&mut rng, 3);
        let g = random_step(&mut rng, 4);
        let exact = crate::numeric::rational::to_f64(&f.inner(&g));
        agree &= HybridFunction::from_step(f).inner(&HybridFunction::from_step(g)) == exact;
    }
    ctx.record(
        "hybrid inner product equals step inner product",
        agree,
        "20 random pairs",
    );
}

/// All antichains that partition the tree of binary words of length
/// `≤ depth`.
fn complete_antichains(prefix: MultiIndex, depth: usize) -> Vec<Vec<MultiIndex>> {
    let mut out = vec![vec![prefix.clone()]];
    if prefix.len() < depth {
        let left = complete_antichains(prefix.push(0), depth);
        let right = complete_antichains(prefix.push(1), depth);
        for l in &left {
            for r in &right {
                out.push(l.iter().chain(r).cloned().collect());
            }
        }
    }
    out
}

fn entropy_checks(ctx: &mut Ctx, _opts: &Options) {
    let rep = IntervalRep2;
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 2);
    let mut gap = 0.0f64;
    for _ in 0..100 {
        let f = random_step(&mut rng, 6);
        for k in 1..=4 {
            gap = gap.max(
                verify_entropy_recursion(&f, k, &rep, 1e-12)
                    .map(|r| r.gap)
                    .unwrap_or(f64::INFINITY),
            );
        }
    }
    ctx.record(
        "entropy recursion",
        gap < 1e-12,
        format!("100 random level-6 steps, k ≤ 4, max gap {gap:.2e}"),
    );

    let e1 = entropy(&walsh(0).add(&walsh(1)), 1, &rep).unwrap_or(f64::NAN);
    ctx.record(
        "ε1((φ0+φ1)/√2) = ln 2",
        (e1 - LN_2).abs() < 1e-12,
        format!("{e1:.15}"),
    );
    let four = (0..4).fold(DyadicStep::zero(), |acc, n| acc.add(&walsh(n)));
    let e2 = entropy(&four, 2, &rep).unwrap_or(f64::NAN);
    ctx.record(
        "ε2((φ0+φ1+φ2+φ3)/2) = 2 ln 2",
        (e2 - 2.0 * LN_2).abs() < 1e-12,
        format!("{e2:.15}"),
    );

    let f = random_step(&mut rng, 6);
    let defect = EntropyTree::build(&f, 6, &rep)
        .map(|t| t.max_partition_defect())
        .unwrap_or(f64::INFINITY);
    ctx.record(
        "child masses sum to parent mass",
        defect < 1e-12,
        format!("max defect {defect:.2e}"),
    );

    let mut ok = true;
    for _ in 0..10 {
        let f = random_step(&mut rng, 6);
        let bb = best_basis(&f, 5, &rep);
        let e5 = entropy(&f, 5, &rep);
        ok &= matches!((bb, e5), (Ok(b), Ok(e)) if b.cost <= e + 1e-12);
    }
    ctx.record(
        "best basis never worse than ε5",
        ok,
        "10 random level-6 steps",
    );

    let antichains = complete_antichains(MultiIndex::empty(2), 3);
    let mut ok = true;
    for _ in 0..10 {
        let f = random_step(&mut rng, 4);
        let Ok(b) = best_basis(&f, 3, &rep) else {
            ok = false;
            continue;
        };
        let total = f.norm_sq();
        let brute = antichains
            .iter()
            .map(|a| {
                a.iter()
                    .map(|w| {
                        crate::entropy::packet_cost(
                            &rep.adjoint_word(w, &f),
                            (3 - w.len()) as u32,
                            crate::numeric::rational::to_f64(&total),
                        )
                    })
                    .sum::<f64>()
            })
            .fold(f64::INFINITY, f64::min);
        ok &= (b.cost - brute).abs() < 1e-12;
    }
    ctx.record(
        "best basis matches exhaustive search",
        ok,
        format!("{} antichains at depth 3", antichains.len()),
    );

    let h = std::f64::consts::FRAC_1_SQRT_2;
    let walsh_basis = onb_entropy(&[h, h]).unwrap_or(f64::NAN);
    let rotated = onb_entropy(&[1.0, 0.0]).unwrap_or(f64::NAN);
    ctx.record(
        "entropy depends on the basis",
        (walsh_basis - LN_2).abs() < 1e-12 && rotated == 0.0,
        "ln 2 in Walsh basis, 0 after rotation",
    );
}

/// `μ̂(λ)` from a level-`k` cylinder sum evaluated at cell barycenters.
pub fn mu_hat_cell_sum(lambda: f64, k: u32) -> Complex64 {
    let n = 1usize << k;
    let w = 1.0 / n as f64;
    let shift = 4f64.powi(-(k as i32)) / 3.0;
    (0..n)
        .map(|i| {
            let t = crate::numeric::rational::to_f64(&crate::cantor::cell_left(k, i)) + shift;
            Complex64::from_polar(w, std::f64::consts::TAU * lambda * t)
        })
        .sum()
}

fn cantor_checks(ctx: &mut Ctx, _opts: &Options) {
    let g = gram_exponentials(8);
    ctx.record(
        "Λ8 exponentials are orthogonal",
        g.passed,
        format!("{} pairs, exact", g.pairs_checked),
    );

    let consistent = (-1000i128..=1000)
        .all(|d| mu_hat_is_zero(d) == (mu_hat(d as f64, DEFAULT_REL_TOL).norm() < 1e-8));
    ctx.record(
        "exact zero test agrees with |μ̂| < 1e-8",
        consistent,
        "|Δ| ≤ 1000",
    );

    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 3);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let l: f64 = rng.gen_range(-100.0..100.0);
        let lhs = mu_hat(l, DEFAULT_REL_TOL);
        let rhs = (Complex64::new(1.0, 0.0) + Complex64::from_polar(1.0, std::f64::consts::PI * l))
            * 0.5
            * mu_hat(l / 4.0, DEFAULT_REL_TOL);
        worst = worst.max((lhs - rhs).norm());
    }
    ctx.record(
        "μ̂ functional equation",
        worst < 1e-9,
        format!("1000 random λ, max {worst:.2e}"),
    );

    let riemann = mu_hat_cell_sum(2.0, 8);
    let direct = mu_hat(2.0, DEFAULT_REL_TOL);
    ctx.record(
        "μ̂(2) agrees with a level-8 cell sum",
        (riemann - direct).norm() < 1e-6,
        format!("|μ̂(2)| = {:.10}", direct.norm()),
    );

    let f = CantorStep::cell_indicator(&MultiIndex::binary(&[0]));
    let sums = bessel_sums(&f, 8, DEFAULT_REL_TOL);
    let monotone = sums.windows(2).all(|w| w[1] >= w[0] - 1e-15);
    let bounded = sums.iter().all(|&b| b <= 0.5 + 1e-12);
    ctx.record(
        "Bessel sums of χ_τ0(X) increase and stay below ‖f‖²",
        monotone && bounded,
        format!("p = 8 sum {:.12}", sums.last().copied().unwrap_or(f64::NAN)),
    );

    let failed = enumerate_words(6, 2)
        .filter(|w| !w.is_empty())
        .find(|w| !indicator_relation_check(w).passed);
    ctx.record(
        "cell indicators from S_K χ_X with weight 2^-|J|",
        failed.is_none(),
        match failed {
            None => "126 words, exact".to_string(),
            Some(w) => format!("fails at {w}"),
        },
    );

    let bad = (1..=8).find(|&p| !verify_lambda_partition(p).passed);
    ctx.record(
        "Λ_p \\ {0} splits into odd orbits m·4^j",
        bad.is_none(),
        "p ≤ 8",
    );

    let g = CantorStep::from_ints(&[3, -1, 2, 5]).unwrap_or_else(|_| CantorStep::one());
    let dilated = CantorRep.s_apply(0, &g);
    let worst = (-20i64..=20)
        .map(|l| {
            (exp_coefficient(4 * l, &dilated, DEFAULT_REL_TOL)
                - exp_coefficient(l, &g, DEFAULT_REL_TOL))
            .norm()
        })
        .fold(0.0, f64::max);
    ctx.record(
        "S0 e_λ = e_4λ on coefficients",
        worst < 1e-8,
        format!("max {worst:.2e}"),
    );
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_suite_passes() {
        let opts = Options {
            tol: 1e-10,
            level: 5,
        };
        for check in run(Suite::All, &opts) {
            assert!(check.passed, "{check}");
        }
    }

    #[test]
    fn antichain_count() {
        assert_eq!(complete_antichains(MultiIndex::empty(2), 3).len(), 26);
    }
}
