//! Finite sums of (dyadic step × single trigonometric mode).
//!
//! Every atom has the shape `w(x)·cos(2π(νx − θ))` with a rational step
//! window `w`, a dyadic frequency `ν ≥ 0` and a dyadic phase `θ` reduced to
//! `[0, ½)` (the other half-turn is absorbed by negating the window). Phase
//! `0` is a cosine, phase `¼` a sine; constants are `ν = 0, θ = 0`.
//!
//! Carrying the phase explicitly keeps the Cuntz operators exact: composing
//! with `x ↦ 2x − 1` or `x ↦ (x+1)/2` only shifts `θ` by a dyadic amount,
//! so windows never pick up irrational factors such as `cos(π/4)`.

use std::collections::BTreeMap;
use std::f64::consts::TAU;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::dyadic_number::Dyadic;
use crate::cuntz::{HilbertVector, IntervalRep2, Representation, Tolerance};
use crate::error::{Error, Result};
use crate::numeric::rational::{self, to_f64, Rational};
use crate::numeric::DyadicStep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Const,
    Cos,
    Sin,
    /// Any other phase; only produced by operators acting on
    /// non-integer frequencies.
    Shifted,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrigAtom {
    window: DyadicStep,
    freq: Dyadic,
    phase: Dyadic,
}

const QUARTER: Dyadic = Dyadic::from_parts(1, 2);
const HALF: Dyadic = Dyadic::from_parts(1, 1);

impl TrigAtom {
    /// `window(x)·cos(2π(freq·x − phase))`. Negative frequencies are folded
    /// onto positive ones.
    pub fn new(window: DyadicStep, freq: Dyadic, phase: Dyadic) -> Self {
        let (freq, phase) = if freq < Dyadic::ZERO {
            (-freq, -phase)
        } else {
            (freq, phase)
        };
        TrigAtom {
            window,
            freq,
            phase,
        }
        .canonical()
    }

    pub fn cos(window: DyadicStep, freq: Dyadic) -> Self {
        Self::new(window, freq, Dyadic::ZERO)
    }

    pub fn sin(window: DyadicStep, freq: Dyadic) -> Self {
        Self::new(window, freq, QUARTER)
    }

    pub fn constant(window: DyadicStep) -> Self {
        Self::new(window, Dyadic::ZERO, Dyadic::ZERO)
    }

    fn canonical(mut self) -> Self {
        let mut phase = self.phase.frac();
        if phase >= HALF {
            phase = phase - HALF;
            self.window = self.window.scale(&rational::int(-1));
        }
        self.phase = phase;
        self.window = self.window.normalize();
        self
    }

    /// Whether the atom is identically zero (zero window, or `sin(0)`).
    fn is_null(&self) -> bool {
        self.window.is_zero() || (self.freq.is_zero() && self.phase == QUARTER)
    }

    pub fn window(&self) -> &DyadicStep {
        &self.window
    }

    pub fn frequency(&self) -> Dyadic {
        self.freq
    }

    pub fn phase(&self) -> Dyadic {
        self.phase
    }

    pub fn mode(&self) -> Mode {
        if self.freq.is_zero() && self.phase.is_zero() {
            Mode::Const
        } else if self.phase.is_zero() {
            Mode::Cos
        } else if self.phase == QUARTER {
            Mode::Sin
        } else {
            Mode::Shifted
        }
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        let cells = 1usize << self.window.level();
        let idx = ((x * cells as f64).floor().max(0.0) as usize).min(cells - 1);
        let w = to_f64(&self.window.coeffs()[idx]);
        w * (TAU * (self.freq.to_f64() * x - self.phase.to_f64())).cos()
    }
}

/// A real function on [0,1) given as a sum of [`TrigAtom`]s.
///
/// The atom list is always simplified: atoms with the same frequency and
/// phase are merged and zero atoms are dropped, so the zero function has no
/// atoms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(into = "Vec<AtomRecord>", try_from = "Vec<AtomRecord>")]
pub struct HybridFunction {
    atoms: Vec<TrigAtom>,
}

impl HybridFunction {
    pub fn new(atoms: Vec<TrigAtom>) -> Self {
        let mut merged: BTreeMap<(Dyadic, Dyadic), DyadicStep> = BTreeMap::new();
        for atom in atoms {
            let atom = atom.canonical();
            merged
                .entry((atom.freq, atom.phase))
                .and_modify(|w| *w = w.add(&atom.window))
                .or_insert(atom.window);
        }
        let atoms = merged
            .into_iter()
            .map(|((freq, phase), window)| TrigAtom {
                window: window.normalize(),
                freq,
                phase,
            })
            .filter(|a| !a.is_null())
            .collect();
        HybridFunction { atoms }
    }

    pub fn zero() -> Self {
        HybridFunction { atoms: Vec::new() }
    }

    pub fn from_step(step: DyadicStep) -> Self {
        Self::new(vec![TrigAtom::constant(step)])
    }

    /// `s_n(x) = sin(2πnx)`.
    pub fn sine(n: u64) -> Self {
        Self::new(vec![TrigAtom::sin(
            DyadicStep::one(),
            Dyadic::integer(n as i64),
        )])
    }

    /// `c_n(x) = cos(2πnx)`.
    pub fn cosine(n: u64) -> Self {
        Self::new(vec![TrigAtom::cos(
            DyadicStep::one(),
            Dyadic::integer(n as i64),
        )])
    }

    pub fn atoms(&self) -> &[TrigAtom] {
        &self.atoms
    }

    pub fn is_zero(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn plus(&self, other: &Self) -> Self {
        Self::new(self.atoms.iter().chain(&other.atoms).cloned().collect())
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.scale(&rational::int(-1)))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::new(
            self.atoms
                .iter()
                .map(|a| TrigAtom {
                    window: a.window.scale(s),
                    ..a.clone()
                })
                .collect(),
        )
    }

    pub fn evaluate(&self, x: f64) -> f64 {
        self.atoms.iter().map(|a| a.evaluate(x)).sum()
    }

    /// `∫₀¹ f·g dx`, integrated cell by cell in closed form. Pairs of plain
    /// step atoms are summed exactly and rounded once at the end.
    pub fn inner(&self, other: &Self) -> f64 {
        let mut exact = Rational::zero();
        let mut approx = 0.0;
        for a in &self.atoms {
            for b in &other.atoms {
                let product = a.window.mul(&b.window);
                if a.mode() == Mode::Const && b.mode() == Mode::Const {
                    exact += product.inner(&DyadicStep::one());
                } else {
                    let diff = cell_integrals(&product, a.freq - b.freq, a.phase - b.phase);
                    let sum = cell_integrals(&product, a.freq + b.freq, a.phase + b.phase);
                    approx += 0.5 * (diff + sum);
                }
            }
        }
        to_f64(&exact) + approx
    }

    pub fn norm_sq(&self) -> f64 {
        self.inner(self)
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().max(0.0).sqrt()
    }

    /// `c_n(f) = ∫cos(2πnx)f` and `s_n(f) = ∫sin(2πnx)f` for `n = 0..=max_n`.
    pub fn fourier_coeffs(&self, max_n: u64) -> FourierCoefficients {
        FourierCoefficients {
            cos: (0..=max_n).map(|n| Self::cosine(n).inner(self)).collect(),
            sin: (0..=max_n).map(|n| Self::sine(n).inner(self)).collect(),
        }
    }

    /// Which half-period reflection `f` satisfies, judged by the adjoint
    /// norms: `‖S₀*f‖ < tol` means `f(x) = −f(x+½)`, `‖S₁*f‖ < tol` means
    /// `f(x) = f(x+½)`.
    pub fn classify_reflection(&self, tol: f64) -> Reflection {
        let rep = IntervalRep2;
        if rep.s_adjoint_hybrid(0, self).norm() < tol {
            Reflection::AntiperiodicHalf
        } else if rep.s_adjoint_hybrid(1, self).norm() < tol {
            Reflection::PeriodicHalf
        } else {
            Reflection::Neither
        }
    }
}

/// `Σ_i p_i ∫_{cell i} cos(2π(μx − φ)) dx` over the cells of `p`.
fn cell_integrals(p: &DyadicStep, mu: Dyadic, phi: Dyadic) -> f64 {
    let level = p.level();
    let cells = 1usize << level;
    let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    if mu.is_zero() {
        let c = (TAU * phi.frac().to_f64()).cos();
        let width = 1.0 / cells as f64;
        return coeffs.iter().sum::<f64>() * width * c;
    }
    // antiderivative sin(2π(μx − φ)) / (2πμ), evaluated at exact dyadic nodes
    let node = |i: usize| {
        let x = Dyadic::new(i as i128, level);
        (TAU * (mu * x - phi).frac().to_f64()).sin()
    };
    let mut total = 0.0;
    let mut left = node(0);
    for (i, c) in coeffs.iter().enumerate() {
        let right = node(i + 1);
        if *c != 0.0 {
            total += c * (right - left);
        }
        left = right;
    }
    total / (TAU * mu.to_f64())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FourierCoefficients {
    pub cos: Vec<f64>,
    pub sin: Vec<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reflection {
    AntiperiodicHalf,
    PeriodicHalf,
    Neither,
}

/// Left and right halves of a window as functions on [0,1):
/// `w(x/2)` and `w((x+1)/2)`.
fn halves(w: &DyadicStep) -> (DyadicStep, DyadicStep) {
    if w.level() == 0 {
        return (w.clone(), w.clone());
    }
    let half = w.coeffs().len() / 2;
    let level = w.level() - 1;
    (
        DyadicStep::from_raw(level, w.coeffs()[..half].to_vec()),
        DyadicStep::from_raw(level, w.coeffs()[half..].to_vec()),
    )
}

/// `w(2x)` on [0,½) and zero elsewhere, or the mirror image on [½,1).
fn embed(w: &DyadicStep, right: bool, sign: &Rational) -> DyadicStep {
    let zeros = vec![Rational::zero(); w.coeffs().len()];
    let body: Vec<Rational> = w.coeffs().iter().map(|c| c * sign).collect();
    let coeffs = if right {
        [zeros, body].concat()
    } else {
        [body, zeros].concat()
    };
    DyadicStep::from_raw(w.level() + 1, coeffs)
}

impl IntervalRep2 {
    /// `S_j f` on a hybrid function: each atom doubles its frequency; the
    /// right-half copy picks up the phase shift `ν` and the sign `(-1)^j`.
    pub fn s_apply_hybrid(&self, j: usize, f: &HybridFunction) -> HybridFunction {
        assert!(j < 2);
        let sign = rational::int(if j == 0 { 1 } else { -1 });
        let one = rational::int(1);
        let atoms = f
            .atoms
            .iter()
            .flat_map(|a| {
                let freq = a.freq.double();
                [
                    TrigAtom::new(embed(&a.window, false, &one), freq, a.phase),
                    TrigAtom::new(embed(&a.window, true, &sign), freq, a.phase + a.freq),
                ]
            })
            .collect();
        HybridFunction::new(atoms)
    }

    /// `S_j^* f = ½(f(x/2) ± f((x+1)/2))`: frequencies halve; the second term
    /// carries the phase shift `−ν/2`.
    pub fn s_adjoint_hybrid(&self, j: usize, f: &HybridFunction) -> HybridFunction {
        assert!(j < 2);
        let half = rational::rat(1, 2);
        let signed_half = if j == 0 { half.clone() } else { -half.clone() };
        let atoms = f
            .atoms
            .iter()
            .flat_map(|a| {
                let (left, right) = halves(&a.window);
                let freq = a.freq.half();
                [
                    TrigAtom::new(left.scale(&half), freq, a.phase),
                    TrigAtom::new(right.scale(&signed_half), freq, a.phase - freq),
                ]
            })
            .collect();
        HybridFunction::new(atoms)
    }
}

impl HilbertVector for HybridFunction {
    fn inner_c(&self, other: &Self) -> num_complex::Complex64 {
        num_complex::Complex64::new(self.inner(other), 0.0)
    }

    fn plus(&self, other: &Self) -> Self {
        HybridFunction::plus(self, other)
    }

    fn minus(&self, other: &Self) -> Self {
        HybridFunction::minus(self, other)
    }

    fn vanishes(&self, tol: Tolerance) -> bool {
        match tol {
            Tolerance::Exact => self.is_zero(),
            Tolerance::Abs(t) => self.norm() <= t,
        }
    }
}

impl Representation<HybridFunction> for IntervalRep2 {
    fn arity(&self) -> usize {
        2
    }

    fn isometry(&self, j: usize, v: &HybridFunction) -> HybridFunction {
        self.s_apply_hybrid(j, v)
    }

    fn adjoint(&self, j: usize, v: &HybridFunction) -> HybridFunction {
        self.s_adjoint_hybrid(j, v)
    }
}

/// JSON form of one atom.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AtomRecord {
    pub window: DyadicStep,
    pub mode: Mode,
    pub freq_num: i64,
    pub freq_log2den: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase_num: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phase_log2den: Option<u32>,
}

impl From<HybridFunction> for Vec<AtomRecord> {
    fn from(f: HybridFunction) -> Self {
        f.atoms
            .into_iter()
            .map(|a| {
                let mode = a.mode();
                let shifted = mode == Mode::Shifted;
                AtomRecord {
                    mode,
                    freq_num: a.freq.num().to_i64().expect("frequency numerator fits i64"),
                    freq_log2den: a.freq.log2den(),
                    phase_num: shifted.then(|| a.phase.num() as i64),
                    phase_log2den: shifted.then(|| a.phase.log2den()),
                    window: a.window,
                }
            })
            .collect()
    }
}

impl TryFrom<Vec<AtomRecord>> for HybridFunction {
    type Error = Error;

    fn try_from(records: Vec<AtomRecord>) -> Result<Self> {
        let atoms = records
            .into_iter()
            .map(|r| {
                let freq = Dyadic::new(r.freq_num as i128, r.freq_log2den);
                let phase = match r.mode {
                    Mode::Const | Mode::Cos => Dyadic::ZERO,
                    Mode::Sin => QUARTER,
                    Mode::Shifted => Dyadic::new(
                        r.phase_num.unwrap_or(0) as i128,
                        r.phase_log2den.unwrap_or(0),
                    ),
                };
                if r.mode == Mode::Const && !freq.is_zero() {
                    return Err(Error::Precondition(
                        "a const atom must have frequency 0".to_string(),
                    ));
                }
                Ok(TrigAtom::new(r.window, freq, phase))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(HybridFunction::new(atoms))
    }
}
