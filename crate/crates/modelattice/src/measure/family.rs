//! Lazily indexed component families with closed-form masses and tails.
//!
//! Each family knows, for an open query interval, which indices overlap it
//! (emitted as explicit components) and the exact mass of the infinite run
//! of indices fully contained in it. All shipped families have geometric or
//! p-series masses, so totals and tails are closed forms.

use super::{Component1D, Shape, Side};
use serde::{Deserialize, Serialize};

const SQRT_HALF: f64 = std::f64::consts::FRAC_1_SQRT_2;
/// `pi^2 / 6`, the p-series total of the hat train.
const BASEL: f64 = 1.644_934_066_848_226_4;

/// Parity weighting of the filled-step train.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum StepWeighting {
    Uniform,
    DoubleOdd,
    DoubleEven,
}

impl StepWeighting {
    fn weight(self, k: u32) -> f64 {
        match (self, k % 2 == 1) {
            (StepWeighting::Uniform, _) => 1.0,
            (StepWeighting::DoubleOdd, true) | (StepWeighting::DoubleEven, false) => 2.0,
            _ => 1.0,
        }
    }
}

/// The shipped family kinds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilyKind {
    /// Hat functions of mass `k^-2` centred at each integer `k >= 1`.
    HatTrain,
    /// One-sided `(3/4) x^{-1/4}` singularities truncated at `2^-k`,
    /// weighted `2 (1 - 1/(4k))`, at each integer `k >= 1`.
    SingularTrain,
    /// Steps of height `4^k` and half-width `16^-k` centred at `2^-k`.
    GeometricSteps,
    /// The same steps with the gaps between them filled by uniform mass
    /// `4^-k`, optionally with doubled odd- or even-index weights.
    FilledSteps { weighting: StepWeighting },
    /// Truncated knot singularities at `±(k+2)`: even-knot copies on the
    /// positive side, odd-knot copies on the negative side, both weighted
    /// `3/(2 sqrt 2) - beta^-k`.
    SuspensionTail { beta: f64 },
}

/// A family instance: kind plus translation and mass scale.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Family {
    #[serde(flatten)]
    pub kind: FamilyKind,
    #[serde(default)]
    pub offset: f64,
    #[serde(default = "super::one")]
    pub scale: f64,
}

/// Family content intersecting a query interval.
#[derive(Debug, Clone)]
pub struct FamilySlice {
    /// Indices partially overlapping the query (and finitely many contained
    /// ones), as explicit components.
    pub components: Vec<Component1D>,
    /// Exact total mass of the infinite run of fully contained indices.
    pub contained_mass: f64,
    pub exact: bool,
}

impl FamilySlice {
    fn empty() -> Self {
        FamilySlice {
            components: Vec::new(),
            contained_mass: 0.0,
            exact: true,
        }
    }
}

const MAX_EXPLICIT: u32 = 1400;

impl Family {
    pub fn new(kind: FamilyKind) -> Self {
        Family {
            kind,
            offset: 0.0,
            scale: 1.0,
        }
    }

    pub fn at(kind: FamilyKind, offset: f64) -> Self {
        Family {
            kind,
            offset,
            scale: 1.0,
        }
    }

    pub fn translate(&mut self, b: f64) {
        self.offset += b;
    }

    pub fn rescale(&mut self, s: f64) {
        self.scale *= s;
    }

    /// Components and contained mass for the open interval `(a, b)`,
    /// in absolute coordinates.
    pub fn parts_in(&self, a: f64, b: f64) -> FamilySlice {
        if b <= a {
            return FamilySlice::empty();
        }
        let (x0, x1) = (a - self.offset, b - self.offset);
        let mut slice = match &self.kind {
            FamilyKind::HatTrain => self.hat_parts(x0, x1),
            FamilyKind::SingularTrain => self.singular_parts(x0, x1),
            FamilyKind::GeometricSteps => self.step_parts(x0, x1),
            FamilyKind::FilledSteps { weighting } => self.filled_parts(x0, x1, *weighting),
            FamilyKind::SuspensionTail { beta } => self.suspension_parts(x0, x1, *beta),
        };
        for c in &mut slice.components {
            c.center += self.offset;
        }
        slice
    }

    /// Component at index `k` (its pieces, local coordinates, scaled).
    fn pieces_at(&self, k: u32) -> Vec<Component1D> {
        match &self.kind {
            FamilyKind::HatTrain => {
                let kf = k as f64;
                vec![Component1D::new(
                    kf,
                    self.scale,
                    Shape::Triangle {
                        half_width: 0.5 / (kf * kf * kf),
                        peak: 2.0 * kf,
                    },
                )]
            }
            FamilyKind::SingularTrain => {
                let kf = k as f64;
                vec![Component1D::new(
                    kf,
                    2.0 * (1.0 - 1.0 / (4.0 * kf)) * self.scale,
                    Shape::Power {
                        exponent: 0.25,
                        coeff: 0.75,
                        radius: 0.5f64.powi(k as i32),
                        side: Side::Right,
                    },
                )]
            }
            FamilyKind::GeometricSteps => {
                let r_k = 16.0f64.powi(-(k as i32));
                vec![Component1D::new(
                    0.5f64.powi(k as i32),
                    self.scale,
                    Shape::Block {
                        half_width: r_k,
                        height: 4.0f64.powi(k as i32),
                    },
                )]
            }
            FamilyKind::FilledSteps { weighting } => {
                let w = weighting.weight(k) * self.scale;
                let (a_k, b_k) = step_edges(k);
                let (m_k, m_km1) = (midpoint(k), midpoint(k - 1));
                let filler_len = (m_km1 - m_k) - (b_k - a_k);
                let beta_k = 4.0f64.powi(-(k as i32)) / filler_len;
                vec![
                    Component1D::new(
                        0.5f64.powi(k as i32),
                        w,
                        Shape::Block {
                            half_width: 16.0f64.powi(-(k as i32)),
                            height: 4.0f64.powi(k as i32),
                        },
                    ),
                    Component1D::new(
                        (m_k + a_k) / 2.0,
                        w,
                        Shape::Block {
                            half_width: (a_k - m_k) / 2.0,
                            height: beta_k,
                        },
                    ),
                    Component1D::new(
                        (b_k + m_km1) / 2.0,
                        w,
                        Shape::Block {
                            half_width: (m_km1 - b_k) / 2.0,
                            height: beta_k,
                        },
                    ),
                ]
            }
            FamilyKind::SuspensionTail { beta } => {
                let w = suspension_weight(*beta, k) * self.scale;
                let kf = k as f64;
                vec![
                    Component1D::new(
                        kf + 2.0,
                        w,
                        Shape::Knots {
                            top_radius: 1.0,
                            radius_ratio: 0.25,
                            top_mass: 1.0,
                            mass_ratio: 0.5,
                            truncate_at: Some(4.0f64.powi(-(k as i32))),
                        },
                    ),
                    Component1D::new(
                        -(kf + 2.0),
                        w,
                        Shape::Knots {
                            top_radius: 0.5,
                            radius_ratio: 0.25,
                            top_mass: SQRT_HALF,
                            mass_ratio: 0.5,
                            truncate_at: Some(0.5 * 4.0f64.powi(-(k as i32))),
                        },
                    ),
                ]
            }
        }
    }

    fn hat_parts(&self, x0: f64, x1: f64) -> FamilySlice {
        let mut slice = FamilySlice::empty();
        let k_lo = (x0 - 0.5).ceil().max(1.0) as u32;
        if x1.is_finite() {
            let k_hi = (x1 + 0.5).floor().max(0.0) as u32;
            for k in k_lo..=k_hi.min(k_lo + MAX_EXPLICIT) {
                slice.components.extend(self.pieces_at(k));
            }
            if k_hi > k_lo + MAX_EXPLICIT {
                // distant hats are fully contained; sum the p-series range
                let from = k_lo + MAX_EXPLICIT + 1;
                slice.contained_mass = self.scale * (basel_tail(from) - basel_tail(k_hi + 1));
            }
        } else {
            // explicit near the left edge, closed-form tail beyond
            let k_tail = k_lo + 2;
            for k in k_lo..k_tail {
                slice.components.extend(self.pieces_at(k));
            }
            slice.contained_mass = self.scale * basel_tail(k_tail);
        }
        slice
    }

    fn singular_parts(&self, x0: f64, x1: f64) -> FamilySlice {
        let mut slice = FamilySlice::empty();
        let k_lo = (x0 - 1.0).ceil().max(1.0) as u32;
        if x1.is_finite() {
            let k_hi = x1.ceil().max(0.0) as u32;
            for k in k_lo..=k_hi.min(k_lo + MAX_EXPLICIT) {
                slice.components.extend(self.pieces_at(k));
            }
            if k_hi > k_lo + MAX_EXPLICIT {
                let from = k_lo + MAX_EXPLICIT + 1;
                slice.contained_mass =
                    self.scale * (singular_train_tail(from) - singular_train_tail(k_hi + 1));
            }
        } else {
            let k_tail = k_lo + 2;
            for k in k_lo..k_tail {
                slice.components.extend(self.pieces_at(k));
            }
            slice.contained_mass = self.scale * singular_train_tail(k_tail);
        }
        slice
    }

    fn step_parts(&self, x0: f64, x1: f64) -> FamilySlice {
        let mut slice = FamilySlice::empty();
        if x1 <= 0.0 {
            return slice;
        }
        // smallest k whose step starts below x1
        let mut k = 1u32;
        while step_edges(k).0 >= x1 {
            k += 1;
            if k > MAX_EXPLICIT {
                return slice;
            }
        }
        let start = k;
        while step_edges(k).1 > x0 {
            let (_, b_k) = step_edges(k);
            if x0 <= 0.0 && b_k <= x1 {
                // this and every later step is contained
                slice.contained_mass = self.scale * (8.0 / 3.0) * 4.0f64.powi(-(k as i32));
                return slice;
            }
            slice.components.extend(self.pieces_at(k));
            k += 1;
            if k > start + MAX_EXPLICIT {
                slice.exact = false;
                break;
            }
        }
        slice
    }

    fn filled_parts(&self, x0: f64, x1: f64, weighting: StepWeighting) -> FamilySlice {
        let mut slice = FamilySlice::empty();
        if x1 <= 0.0 || x0 >= 0.75 {
            return slice;
        }
        let mut k = 1u32;
        while midpoint(k) >= x1 {
            k += 1;
            if k > MAX_EXPLICIT {
                return slice;
            }
        }
        let start = k;
        while midpoint(k - 1) > x0 {
            if x0 <= 0.0 && midpoint(k - 1) <= x1 {
                slice.contained_mass = self.scale * filled_tail(weighting, k);
                return slice;
            }
            slice.components.extend(self.pieces_at(k));
            k += 1;
            if k > start + MAX_EXPLICIT {
                slice.exact = false;
                break;
            }
        }
        slice
    }

    fn suspension_parts(&self, x0: f64, x1: f64, beta: f64) -> FamilySlice {
        let mut slice = FamilySlice::empty();
        // positive side: even-knot copies at k + 2, support within k + 2 ± 1
        if x1 > 2.0 {
            let k_lo = (x0 - 3.0).ceil().max(1.0) as u32;
            if x1.is_finite() {
                let k_hi = (x1 - 1.0).ceil().max(0.0) as u32;
                for k in k_lo..=k_hi.min(k_lo + MAX_EXPLICIT) {
                    slice
                        .components
                        .push(self.pieces_at(k).swap_remove(0));
                }
            } else {
                let k_tail = k_lo + 2;
                for k in k_lo..k_tail {
                    slice.components.push(self.pieces_at(k).swap_remove(0));
                }
                slice.contained_mass += self.scale * suspension_even_tail(beta, k_tail);
            }
        }
        // negative side: odd-knot copies at -(k + 2)
        if x0 < -2.0 {
            let k_lo = (-x1 - 3.0).ceil().max(1.0) as u32;
            if x0.is_finite() {
                let k_hi = (-x0 - 1.0).ceil().max(0.0) as u32;
                for k in k_lo..=k_hi.min(k_lo + MAX_EXPLICIT) {
                    slice.components.push(self.pieces_at(k).swap_remove(1));
                }
            } else {
                let k_tail = k_lo + 2;
                for k in k_lo..k_tail {
                    slice.components.push(self.pieces_at(k).swap_remove(1));
                }
                slice.contained_mass += self.scale * suspension_odd_tail(beta, k_tail);
            }
        }
        slice
    }

    /// Mass of the index-`k` member.
    pub fn index_mass(&self, k: u32) -> f64 {
        let kf = k as f64;
        self.scale
            * match &self.kind {
                FamilyKind::HatTrain => 1.0 / (kf * kf),
                FamilyKind::SingularTrain => {
                    2.0 * (1.0 - 1.0 / (4.0 * kf)) * 0.5f64.powi(k as i32).powf(0.75)
                }
                FamilyKind::GeometricSteps => 2.0 * 4.0f64.powi(-(k as i32)),
                FamilyKind::FilledSteps { weighting } => {
                    weighting.weight(k) * 3.0 * 4.0f64.powi(-(k as i32))
                }
                FamilyKind::SuspensionTail { beta } => {
                    suspension_weight(*beta, k) * (1.0 + SQRT_HALF) * 0.5f64.powi(k as i32)
                }
            }
    }

    /// Upper bound on the mass of indices beyond `k`.
    pub fn tail_bound(&self, k: u32) -> f64 {
        let kf = k as f64;
        self.scale
            * match &self.kind {
                FamilyKind::HatTrain => 1.0 / kf.max(1e-300),
                FamilyKind::SingularTrain => {
                    let x = 0.5f64.powf(0.75);
                    2.0 * x.powi(k as i32 + 1) / (1.0 - x)
                }
                FamilyKind::GeometricSteps => (8.0 / 3.0) * 4.0f64.powi(-(k as i32 + 1)),
                FamilyKind::FilledSteps { .. } => 8.0 * 4.0f64.powi(-(k as i32 + 1)),
                FamilyKind::SuspensionTail { .. } => {
                    (0.75 * SQRT_HALF.recip()) * (1.0 + SQRT_HALF) * 0.5f64.powi(k as i32)
                }
            }
    }

    /// Exact total mass of the family.
    pub fn total_mass(&self) -> f64 {
        self.scale
            * match &self.kind {
                FamilyKind::HatTrain => BASEL,
                FamilyKind::SingularTrain => singular_train_tail(1),
                FamilyKind::GeometricSteps => 2.0 / 3.0,
                FamilyKind::FilledSteps { weighting } => filled_tail(*weighting, 1),
                FamilyKind::SuspensionTail { beta } => {
                    suspension_even_tail(*beta, 1) + suspension_odd_tail(*beta, 1)
                }
            }
    }

    /// Candidate centres for the radius-`r` supremal search.
    pub fn sup_candidates(&self, r: f64) -> Vec<f64> {
        let mut out = Vec::new();
        match &self.kind {
            FamilyKind::HatTrain => {
                let k_star = (2.0 * r).powf(-1.0 / 3.0).ceil().min(1e6).max(1.0) as i64;
                for k in (1..=6).chain(k_star - 3..=k_star + 3) {
                    if k >= 1 {
                        let kf = k as f64;
                        out.push(kf);
                        out.push(kf + 0.5);
                        out.push(kf + r);
                    }
                }
            }
            FamilyKind::SingularTrain => {
                let k_star = (1.0 / r).log2().floor().max(1.0).min(1e6) as i64;
                for k in (1..=6).chain(k_star - 3..=k_star + 4) {
                    if k >= 1 {
                        let kf = k as f64;
                        let t = 0.5f64.powi(k as i32);
                        out.extend_from_slice(&[kf, kf + r, kf + t - r, kf + t, kf + 0.5]);
                    }
                }
            }
            FamilyKind::GeometricSteps | FamilyKind::FilledSteps { .. } => {
                let cap = ((1.0 / r.min(1.0)).log2().ceil() + 6.0).clamp(4.0, 520.0) as u32;
                for k in 1..=cap {
                    let c = 0.5f64.powi(k as i32);
                    out.extend_from_slice(&[c, c + r, c - r]);
                    if matches!(self.kind, FamilyKind::FilledSteps { .. }) {
                        out.push(midpoint(k));
                    }
                }
                out.extend_from_slice(&[0.0, r, -r, 0.75 - r]);
            }
            FamilyKind::SuspensionTail { .. } => {
                let cap = ((1.0 / r.min(1.0)).log2().ceil() / 2.0 + 4.0).clamp(4.0, 64.0) as u32;
                for k in 1..=cap {
                    let kf = k as f64;
                    out.extend_from_slice(&[kf + 2.0, -(kf + 2.0)]);
                }
            }
        }
        for c in &mut out {
            *c += self.offset;
        }
        out
    }

    /// Accumulation points and singular member centres (for probe pruning).
    pub fn singular_centers(&self) -> Vec<f64> {
        let mut out = Vec::new();
        match &self.kind {
            FamilyKind::HatTrain => {}
            FamilyKind::SingularTrain => {
                for k in 1..=48 {
                    out.push(k as f64);
                }
            }
            FamilyKind::GeometricSteps | FamilyKind::FilledSteps { .. } => out.push(0.0),
            FamilyKind::SuspensionTail { .. } => {
                for k in 1..=48 {
                    out.push(k as f64 + 2.0);
                    out.push(-(k as f64 + 2.0));
                }
            }
        }
        for c in &mut out {
            *c += self.offset;
        }
        out
    }

    pub fn support_bounds(&self) -> (f64, f64) {
        let (lo, hi) = match &self.kind {
            FamilyKind::HatTrain | FamilyKind::SingularTrain => (0.5, f64::INFINITY),
            FamilyKind::GeometricSteps | FamilyKind::FilledSteps { .. } => (0.0, 0.75),
            FamilyKind::SuspensionTail { .. } => (f64::NEG_INFINITY, f64::INFINITY),
        };
        (lo + self.offset, hi + self.offset)
    }
}

/// Step edges `a_k = 2^-k - 16^-k`, `b_k = 2^-k + 16^-k`.
fn step_edges(k: u32) -> (f64, f64) {
    let c = 0.5f64.powi(k as i32);
    let r = 16.0f64.powi(-(k as i32));
    (c - r, c + r)
}

/// Gap midpoints `m_0 = 3/4`, `m_k = (a_k + b_{k+1}) / 2`.
fn midpoint(k: u32) -> f64 {
    if k == 0 {
        return 0.75;
    }
    let (a_k, _) = step_edges(k);
    let (_, b_k1) = step_edges(k + 1);
    (a_k + b_k1) / 2.0
}

/// `sum_{j >= k} j^-2`, via the exact total minus a prefix.
fn basel_tail(k: u32) -> f64 {
    let mut prefix = 0.0;
    for j in 1..k.min(2_000_000) {
        let jf = j as f64;
        prefix += 1.0 / (jf * jf);
    }
    (BASEL - prefix).max(0.0)
}

/// `sum_{k >= k0} 2 (1 - 1/(4k)) 2^{-3k/4}`.
fn singular_train_tail(k0: u32) -> f64 {
    let x = 0.5f64.powf(0.75);
    let geometric = 2.0 * x.powi(k0 as i32) / (1.0 - x);
    let mut log_part = 0.0;
    let mut term = x.powi(k0 as i32);
    let mut k = k0;
    while term > 1e-19 {
        log_part += term / (k as f64);
        term *= x;
        k += 1;
    }
    geometric - 0.5 * log_part
}

fn filled_tail(weighting: StepWeighting, k0: u32) -> f64 {
    // sum_{k >= k0} w_k * 3 * 4^-k, split by parity
    let parity_sum = |first: u32| 4.0f64.powi(-(first as i32)) * 16.0 / 15.0;
    let first_odd = if k0 % 2 == 1 { k0 } else { k0 + 1 };
    let first_even = if k0 % 2 == 0 { k0 } else { k0 + 1 };
    let (w_odd, w_even) = match weighting {
        StepWeighting::Uniform => (1.0, 1.0),
        StepWeighting::DoubleOdd => (2.0, 1.0),
        StepWeighting::DoubleEven => (1.0, 2.0),
    };
    3.0 * (w_odd * parity_sum(first_odd) + w_even * parity_sum(first_even))
}

fn suspension_weight(beta: f64, k: u32) -> f64 {
    0.75 * SQRT_HALF.recip() - beta.powi(-(k as i32))
}

/// `sum_{k >= k0} w_k 2^-k` (even-knot copies, mass `2^-k` each).
fn suspension_even_tail(beta: f64, k0: u32) -> f64 {
    let a = 0.75 * SQRT_HALF.recip();
    let geo = |x: f64| x.powi(k0 as i32) / (1.0 - x);
    a * geo(0.5) - geo(0.5 / beta)
}

fn suspension_odd_tail(beta: f64, k0: u32) -> f64 {
    SQRT_HALF * suspension_even_tail(beta, k0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_steps_masses() {
        let f = Family::new(FamilyKind::GeometricSteps);
        assert!((f.total_mass() - 2.0 / 3.0).abs() < 1e-15);
        // ball around 2^-k of radius 16^-k holds exactly the step: 2 * 4^-k
        for k in 1..10 {
            let c = 0.5f64.powi(k);
            let r = 16.0f64.powi(-k);
            let slice = f.parts_in(c - r, c + r);
            let m: f64 = slice
                .components
                .iter()
                .map(|p| p.mass_in(c - r, c + r))
                .sum::<f64>()
                + slice.contained_mass;
            assert!((m - 2.0 * 4.0f64.powi(-k)).abs() < 1e-15);
        }
        // interval (-1, 1) holds everything
        let slice = f.parts_in(-1.0, 1.0);
        let m: f64 = slice
            .components
            .iter()
            .map(|p| p.mass_in(-1.0, 1.0))
            .sum::<f64>()
            + slice.contained_mass;
        assert!((m - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn filled_steps_masses() {
        let f = Family::new(FamilyKind::FilledSteps {
            weighting: StepWeighting::Uniform,
        });
        assert!((f.total_mass() - 1.0).abs() < 1e-12);
        // each segment C_k carries 3 * 4^-k
        for k in 1..12u32 {
            let (lo, hi) = (midpoint(k), midpoint(k - 1));
            let slice = f.parts_in(lo, hi + 1e-18);
            let m: f64 = slice
                .components
                .iter()
                .map(|p| p.mass_in(lo, hi + 1e-18))
                .sum::<f64>()
                + slice.contained_mass;
            assert!(
                (m - 3.0 * 4.0f64.powi(-(k as i32))).abs() < 1e-14,
                "segment {k}"
            );
        }
        let doubled = Family::new(FamilyKind::FilledSteps {
            weighting: StepWeighting::DoubleOdd,
        });
        assert!((doubled.total_mass() - 9.0 / 5.0).abs() < 1e-12);
    }

    #[test]
    fn hat_train_masses() {
        let f = Family::new(FamilyKind::HatTrain);
        assert!((f.total_mass() - BASEL).abs() < 1e-12);
        for k in [1u32, 3, 10] {
            let kf = k as f64;
            let slice = f.parts_in(kf - 0.5, kf + 0.5);
            let m: f64 = slice
                .components
                .iter()
                .map(|p| p.mass_in(kf - 0.5, kf + 0.5))
                .sum();
            assert!((m - 1.0 / (kf * kf)).abs() < 1e-15);
        }
        // unbounded interval: prefix plus closed-form tail
        let slice = f.parts_in(2.5, f64::INFINITY);
        let m: f64 = slice
            .components
            .iter()
            .map(|p| p.mass_in(2.5, f64::INFINITY))
            .sum::<f64>()
            + slice.contained_mass;
        assert!((m - (BASEL - 1.0 - 0.25)).abs() < 1e-12);
    }

    #[test]
    fn singular_train_masses() {
        let f = Family::new(FamilyKind::SingularTrain);
        let total = f.total_mass();
        let by_sum: f64 = (1..400).map(|k| f.index_mass(k)).sum();
        assert!((total - by_sum).abs() < 1e-12);
    }

    #[test]
    fn suspension_masses() {
        let beta = 20.0;
        let f = Family::new(FamilyKind::SuspensionTail { beta });
        let by_sum: f64 = (1..200).map(|k| f.index_mass(k)).sum();
        assert!((f.total_mass() - by_sum).abs() < 1e-12);
        // the copy at k + 2 has mass w_k 2^-k
        let slice = f.parts_in(2.5, 3.5);
        let m: f64 = slice
            .components
            .iter()
            .map(|p| p.mass_in(2.5, 3.5))
            .sum();
        assert!((m - suspension_weight(beta, 1) * 0.5).abs() < 1e-14);
        // the copy at -(k + 2) has mass w_k 2^-k / sqrt 2
        let slice = f.parts_in(-3.5, -2.5);
        let m: f64 = slice
            .components
            .iter()
            .map(|p| p.mass_in(-3.5, -2.5))
            .sum();
        assert!((m - suspension_weight(beta, 1) * 0.5 * SQRT_HALF).abs() < 1e-14);
    }

    #[test]
    fn prefix_tail_normalizer_matches_closed_form() {
        use crate::measure::Measure1D;
        let m = Measure1D::new(vec![], vec![Family::new(FamilyKind::GeometricSteps)]).unwrap();
        let n = m.normalizer_by_prefix(1e-12, 100).unwrap();
        assert!((n.value - 2.0 / 3.0).abs() < 1e-12);
        assert!(n.error_bound < 1e-12);
        // the hat train's 1/k tail bound cannot reach 1e-12 by k = 1000
        let m = Measure1D::new(vec![], vec![Family::new(FamilyKind::HatTrain)]).unwrap();
        assert!(m.normalizer_by_prefix(1e-12, 1000).is_err());
    }
}
