//! Randomized property suites over shipped measures: ball-mass
//! left-continuity, lower semicontinuity in the centre, the Lebesgue-point
//! linear bound, and centre dominance for symmetric unimodal components.

use super::{Component1D, Measure1D};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

/// One failed probe.
#[derive(Debug, Clone, Serialize)]
pub struct PropViolation {
    pub property: &'static str,
    pub center: f64,
    pub radius: f64,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct PropReport {
    pub probes: usize,
    pub violations: Vec<PropViolation>,
}

impl PropReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

fn probe_window(m: &Measure1D) -> (f64, f64) {
    let (lo, hi) = m.support_bounds();
    let lo = if lo.is_finite() { lo } else { -8.0 };
    let hi = if hi.is_finite() { hi.min(lo + 16.0) } else { lo + 16.0 };
    (lo - 0.5, hi + 0.5)
}

/// `ball_mass(x, s - eps) -> ball_mass(x, s)` as `eps` decreases to zero.
pub fn left_continuity(m: &Measure1D, rng: &mut ChaCha8Rng, probes: usize, tol: f64) -> PropReport {
    let (lo, hi) = probe_window(m);
    let mut violations = Vec::new();
    for _ in 0..probes {
        let x = rng.gen_range(lo..hi);
        let s = rng.gen_range(1e-4..1.0f64);
        let at = m.ball_mass(x, s).value;
        let mut prev_gap = f64::INFINITY;
        for eps in [1e-3, 1e-5, 1e-7, 1e-10] {
            if eps >= s {
                continue;
            }
            let gap = at - m.ball_mass(x, s - eps).value;
            if gap < -tol || gap > prev_gap + tol {
                violations.push(PropViolation {
                    property: "left-continuity",
                    center: x,
                    radius: s,
                    detail: format!("gap {gap} at eps {eps}"),
                });
                break;
            }
            prev_gap = gap;
        }
        // the innermost gap must close
        let final_gap = at - m.ball_mass(x, s - 1e-10).value;
        if final_gap.abs() > tol.max(at * 1e-4) {
            violations.push(PropViolation {
                property: "left-continuity",
                center: x,
                radius: s,
                detail: format!("residual gap {final_gap}"),
            });
        }
    }
    PropReport { probes, violations }
}

/// `liminf_{y -> x} ball_mass(y, r) >= ball_mass(x, r)` on dyadic grids.
pub fn lower_semicontinuity(
    m: &Measure1D,
    rng: &mut ChaCha8Rng,
    probes: usize,
    tol: f64,
) -> PropReport {
    let (lo, hi) = probe_window(m);
    let mut violations = Vec::new();
    for _ in 0..probes {
        let x = rng.gen_range(lo..hi);
        let r = rng.gen_range(1e-4..1.0f64);
        let at = m.ball_mass(x, r).value;
        // the closest probes dominate the liminf estimate
        let delta = 0.5f64.powi(40);
        let approach = m
            .ball_mass(x - delta, r)
            .value
            .min(m.ball_mass(x + delta, r).value);
        if approach < at - tol {
            violations.push(PropViolation {
                property: "lower-semicontinuity",
                center: x,
                radius: r,
                detail: format!("liminf estimate {approach} < {at}"),
            });
        }
    }
    PropReport { probes, violations }
}

/// Where the density is bounded by `C` near `u`, shrinking balls obey
/// `ball_mass(u_n, r_n) <= 2 C r_n`.
pub fn lebesgue_point_bound(
    m: &Measure1D,
    rng: &mut ChaCha8Rng,
    probes: usize,
    tol: f64,
) -> PropReport {
    let (lo, hi) = probe_window(m);
    let singular = m.singular_centers();
    let mut violations = Vec::new();
    let mut done = 0;
    let mut attempts = 0;
    while done < probes && attempts < probes * 50 {
        attempts += 1;
        let u = rng.gen_range(lo..hi);
        let big_r = 0.01;
        if singular.iter().any(|&c| (c - u).abs() < 2.0 * big_r) {
            continue;
        }
        // density bound on B(u, R) from a fine grid with headroom
        let mut c_bound: f64 = 0.0;
        let mut ok = true;
        for i in 0..=200 {
            let x = u - big_r + 2.0 * big_r * (i as f64) / 200.0;
            match m.density(x) {
                Some(d) => c_bound = c_bound.max(d),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if !ok {
            continue;
        }
        let c_bound = c_bound * 1.5 + 1e-12;
        done += 1;
        for n in 1..12 {
            let r_n = big_r * 0.25f64.powi(n) / 4.0;
            let u_n = u + big_r * 0.25f64.powi(n) / 4.0;
            let mass = m.ball_mass(u_n, r_n).value;
            if mass > 2.0 * c_bound * r_n * (1.0 + tol) + tol * 1e-6 {
                violations.push(PropViolation {
                    property: "lebesgue-point-bound",
                    center: u_n,
                    radius: r_n,
                    detail: format!("mass {mass} > 2 * {c_bound} * {r_n}"),
                });
                break;
            }
        }
    }
    PropReport {
        probes: done,
        violations,
    }
}

/// For every symmetric component with convex superlevel sets, the centred
/// ball dominates any other centre at equal radius.
pub fn symmetric_center_dominance(
    m: &Measure1D,
    rng: &mut ChaCha8Rng,
    probes: usize,
    tol: f64,
) -> PropReport {
    let mut singles: Vec<Component1D> = m
        .components()
        .iter()
        .filter(|c| c.shape.symmetric_unimodal() && c.weight > 0.0)
        .cloned()
        .collect();
    for f in m.families() {
        let (lo, hi) = f.support_bounds();
        let lo = lo.max(-12.0);
        let hi = hi.min(12.0);
        let slice = f.parts_in(lo, hi);
        singles.extend(
            slice
                .components
                .into_iter()
                .filter(|c| c.shape.symmetric_unimodal() && c.weight > 0.0)
                .take(24),
        );
    }
    let mut violations = Vec::new();
    if singles.is_empty() {
        return PropReport {
            probes: 0,
            violations,
        };
    }
    for i in 0..probes {
        let comp = &singles[i % singles.len()];
        let single = Measure1D::new(vec![comp.clone()], vec![]).expect("component has mass");
        let (slo, shi) = comp.support();
        let width = (shi - slo).max(1e-12);
        let r = rng.gen_range(1e-6..1.5f64) * width;
        let x = comp.center + rng.gen_range(-1.5..1.5f64) * width;
        let centered = single.ball_mass(comp.center, r).value;
        let shifted = single.ball_mass(x, r).value;
        if shifted > centered * (1.0 + tol) + tol {
            violations.push(PropViolation {
                property: "symmetric-center-dominance",
                center: x,
                radius: r,
                detail: format!("off-centre mass {shifted} > centred {centered}"),
            });
        }
    }
    PropReport { probes, violations }
}
