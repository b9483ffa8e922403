//! Exact ball-mass calculus for 1-D measures.
//!
//! A measure is a weighted list of closed-form components plus optional
//! lazily indexed families whose supports and masses are known in closed
//! form. Every query works on open intervals, so atoms sitting exactly on
//! a ball boundary are excluded.

mod family;
pub mod props;

pub use family::{Family, FamilyKind, FamilySlice, StepWeighting};

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Numeric tolerance for closed-form comparisons throughout the engine.
pub const TOL: f64 = 1e-9;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum MeasureError {
    #[error("measure has no mass")]
    ZeroMass,
    #[error("restriction set has zero mass")]
    EmptyRestriction,
    #[error("convex combination weight {0} outside [0, 1]")]
    BadWeight(f64),
    #[error("convex combination of restricted measures is not supported")]
    CombineRestricted,
    #[error("normalizer tail bound did not reach tolerance {tol} by index {kmax}")]
    TailDoesNotConverge { tol: f64, kmax: u32 },
    #[error("invalid shape parameter: {0}")]
    BadShape(String),
}

/// Sidedness of a power-law singularity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    TwoSided,
    Right,
}

/// Closed-form density shapes, centred at the owning component's centre.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Shape {
    /// Unit point mass.
    Atom,
    /// Uniform density `height` on `[-half_width, half_width]`.
    Block { half_width: f64, height: f64 },
    /// Density `peak * (1 - |x|/half_width)` on `[-half_width, half_width]`.
    Triangle { half_width: f64, peak: f64 },
    /// Density `coeff * |x|^-exponent` truncated at `radius`; `exponent < 1`
    /// (negative exponents give bounded polynomial bumps such as `x^2`).
    Power {
        exponent: f64,
        coeff: f64,
        radius: f64,
        side: Side,
    },
    /// Symmetric density fixed by its centred mass `F`: `F(top_radius *
    /// radius_ratio^n) = top_mass * mass_ratio^n`, linear in `r` between
    /// knots, optionally truncated at `truncate_at`.
    Knots {
        top_radius: f64,
        radius_ratio: f64,
        top_mass: f64,
        mass_ratio: f64,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        truncate_at: Option<f64>,
    },
    /// Symmetric density with centred mass
    /// `F(r) = min(1, sqrt(2r) / (1 + alpha * sin(log r - phase)))`;
    /// nonnegative for `alpha < 1/3`.
    Trig { alpha: f64, phase: f64 },
}

impl Shape {
    /// Support interval relative to the centre.
    pub fn support(&self) -> (f64, f64) {
        match *self {
            Shape::Atom => (0.0, 0.0),
            Shape::Block { half_width, .. } | Shape::Triangle { half_width, .. } => {
                (-half_width, half_width)
            }
            Shape::Power { radius, side, .. } => match side {
                Side::TwoSided => (-radius, radius),
                Side::Right => (0.0, radius),
            },
            Shape::Knots {
                top_radius,
                truncate_at,
                ..
            } => {
                let r = truncate_at.unwrap_or(top_radius).min(top_radius);
                (-r, r)
            }
            Shape::Trig { .. } => (-1.0, 1.0),
        }
    }

    /// Centred mass `F(r)`: mass of the open interval `(-r, r)`.
    pub fn centered_mass(&self, r: f64) -> f64 {
        if r <= 0.0 {
            return 0.0;
        }
        match *self {
            Shape::Atom => 1.0,
            _ => self.signed_cdf(r) - self.signed_cdf(-r),
        }
    }

    /// Total mass of the shape at unit weight.
    pub fn total_mass(&self) -> f64 {
        match *self {
            Shape::Atom => 1.0,
            _ => {
                let (lo, hi) = self.support();
                self.signed_cdf(hi) - self.signed_cdf(lo)
            }
        }
    }

    /// Signed cumulative: mass of `(0, x]` for `x > 0`, minus mass of
    /// `[x, 0)` for `x < 0`. Undefined for atoms (handled separately).
    fn signed_cdf(&self, x: f64) -> f64 {
        let sign = if x < 0.0 { -1.0 } else { 1.0 };
        let a = x.abs();
        match *self {
            Shape::Atom => unreachable!("atoms have no continuous cdf"),
            Shape::Block { half_width, height } => sign * height * a.min(half_width),
            Shape::Triangle { half_width, peak } => {
                let m = a.min(half_width);
                sign * peak * (m - m * m / (2.0 * half_width))
            }
            Shape::Power {
                exponent,
                coeff,
                radius,
                side,
            } => {
                let one_sided = |t: f64| coeff * t.min(radius).powf(1.0 - exponent) / (1.0 - exponent);
                match side {
                    Side::TwoSided => sign * one_sided(a),
                    Side::Right => {
                        if x <= 0.0 {
                            0.0
                        } else {
                            one_sided(x)
                        }
                    }
                }
            }
            Shape::Knots { .. } | Shape::Trig { .. } => sign * self.half_mass(a),
        }
    }

    /// `F(r)/2` for the symmetric knot and trig shapes.
    fn half_mass(&self, r: f64) -> f64 {
        match *self {
            Shape::Knots {
                top_radius,
                radius_ratio,
                top_mass,
                mass_ratio,
                truncate_at,
            } => {
                let r = match truncate_at {
                    Some(t) => r.min(t),
                    None => r,
                };
                if r <= 0.0 {
                    return 0.0;
                }
                if r >= top_radius {
                    return top_mass / 2.0;
                }
                // bracket r between consecutive knots
                let mut r_hi = top_radius;
                let mut f_hi = top_mass;
                let mut iter = 0;
                while r_hi * radius_ratio > r {
                    r_hi *= radius_ratio;
                    f_hi *= mass_ratio;
                    iter += 1;
                    if iter > 4096 || r_hi == 0.0 {
                        return 0.0;
                    }
                }
                let r_lo = r_hi * radius_ratio;
                let f_lo = f_hi * mass_ratio;
                (f_lo + (r - r_lo) * (f_hi - f_lo) / (r_hi - r_lo)) / 2.0
            }
            Shape::Trig { alpha, phase } => {
                if r <= 0.0 {
                    return 0.0;
                }
                let f = (2.0 * r).sqrt() / (1.0 + alpha * (r.ln() - phase).sin());
                f.min(1.0) / 2.0
            }
            _ => unreachable!(),
        }
    }

    /// Density at signed offset `x` from the centre; `None` for atoms.
    pub fn density(&self, x: f64) -> Option<f64> {
        let (lo, hi) = self.support();
        if x < lo || x > hi {
            return Some(0.0);
        }
        let a = x.abs();
        match *self {
            Shape::Atom => None,
            Shape::Block { height, .. } => Some(height),
            Shape::Triangle { half_width, peak } => Some(peak * (1.0 - a / half_width)),
            Shape::Power {
                exponent, coeff, side, ..
            } => {
                if side == Side::Right && x <= 0.0 {
                    return Some(0.0);
                }
                Some(coeff * a.powf(-exponent))
            }
            Shape::Knots {
                top_radius,
                radius_ratio,
                top_mass,
                mass_ratio,
                truncate_at,
            } => {
                if let Some(t) = truncate_at {
                    if a > t {
                        return Some(0.0);
                    }
                }
                if a >= top_radius || a <= 0.0 {
                    return Some(0.0);
                }
                let mut r_hi = top_radius;
                let mut f_hi = top_mass;
                while r_hi * radius_ratio > a {
                    r_hi *= radius_ratio;
                    f_hi *= mass_ratio;
                    if r_hi == 0.0 {
                        return Some(0.0);
                    }
                }
                let r_lo = r_hi * radius_ratio;
                let f_lo = f_hi * mass_ratio;
                Some((f_hi - f_lo) / (r_hi - r_lo) / 2.0)
            }
            Shape::Trig { alpha, phase } => {
                if a <= 0.0 {
                    return None; // unbounded at the centre
                }
                let psi = a.ln() - phase;
                let den = 1.0 + alpha * psi.sin();
                let f = (2.0 * a).sqrt() / den;
                if f >= 1.0 {
                    return Some(0.0); // saturated: no density past this radius
                }
                let fp = (0.5 * (2.0 / a).sqrt()) / den
                    - (2.0 * a).sqrt() * alpha * psi.cos() / (a * den * den);
                Some(fp / 2.0)
            }
        }
    }

    /// Whether the shape is symmetric with convex superlevel sets, so the
    /// centre dominates every other ball centre at equal radius.
    pub fn symmetric_unimodal(&self) -> bool {
        match *self {
            Shape::Atom | Shape::Block { .. } | Shape::Triangle { .. } => true,
            Shape::Power { exponent, side, .. } => side == Side::TwoSided && exponent > 0.0,
            Shape::Knots { mass_ratio, radius_ratio, .. } => mass_ratio >= radius_ratio,
            Shape::Trig { alpha, .. } => alpha <= 0.3,
        }
    }

    /// Whether the density is unbounded at the centre.
    pub fn singular(&self) -> bool {
        matches!(
            self,
            Shape::Atom | Shape::Knots { .. } | Shape::Trig { .. }
        ) || matches!(self, Shape::Power { exponent, .. } if *exponent > 0.0)
    }
}

/// A weighted, centred shape.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Component1D {
    pub center: f64,
    #[serde(default = "one")]
    pub weight: f64,
    #[serde(flatten)]
    pub shape: Shape,
}

pub(crate) fn one() -> f64 {
    1.0
}

impl Component1D {
    pub fn new(center: f64, weight: f64, shape: Shape) -> Self {
        Component1D {
            center,
            weight,
            shape,
        }
    }

    /// Absolute support interval.
    pub fn support(&self) -> (f64, f64) {
        let (lo, hi) = self.shape.support();
        (self.center + lo, self.center + hi)
    }

    pub fn mass(&self) -> f64 {
        self.weight * self.shape.total_mass()
    }

    /// Mass of the open interval `(a, b)`.
    pub fn mass_in(&self, a: f64, b: f64) -> f64 {
        if b <= a {
            return 0.0;
        }
        match self.shape {
            Shape::Atom => {
                if a < self.center && self.center < b {
                    self.weight
                } else {
                    0.0
                }
            }
            _ => {
                let (lo, hi) = self.support();
                let x0 = a.max(lo) - self.center;
                let x1 = b.min(hi) - self.center;
                if x1 <= x0 {
                    0.0
                } else {
                    self.weight * (self.shape.signed_cdf(x1) - self.shape.signed_cdf(x0))
                }
            }
        }
    }

    /// Weighted centred mass `weight * F(r)`.
    pub fn centered_mass(&self, r: f64) -> f64 {
        self.weight * self.shape.centered_mass(r)
    }

    pub fn density(&self, x: f64) -> Option<f64> {
        self.shape.density(x - self.center).map(|d| d * self.weight)
    }
}

/// A ball-mass query result with its exactness flag.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BallMassValue {
    pub value: f64,
    /// False when a lazy-family tail had to be estimated rather than summed
    /// in closed form.
    pub exact: bool,
}

/// Argument of the ball-mass ratio: a centre or the supremal mass.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum RatioArg {
    Point(f64),
    Sup,
}

/// Normalizer with a certified error bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Normalizer {
    pub value: f64,
    pub error_bound: f64,
}

/// A 1-D measure: components, lazy families, optional restriction.
#[derive(Debug, Clone)]
pub struct Measure1D {
    components: Vec<Component1D>,
    families: Vec<Family>,
    /// Disjoint open restriction intervals, ascending; `None` = whole line.
    restriction: Option<Vec<(f64, f64)>>,
    /// Raw (unnormalized) total mass of the restricted measure.
    z: f64,
    z_exact: bool,
    /// Builder-declared candidate centres for the supremal search.
    extra_candidates: Vec<f64>,
}

impl Measure1D {
    pub fn new(components: Vec<Component1D>, families: Vec<Family>) -> Result<Self, MeasureError> {
        let mut m = Measure1D {
            components,
            families,
            restriction: None,
            z: 0.0,
            z_exact: true,
            extra_candidates: Vec::new(),
        };
        let (z, exact) = m.raw_mass_in(f64::NEG_INFINITY, f64::INFINITY);
        if !(z > 0.0) {
            return Err(MeasureError::ZeroMass);
        }
        m.z = z;
        m.z_exact = exact;
        Ok(m)
    }

    pub fn with_extra_candidates(mut self, mut candidates: Vec<f64>) -> Self {
        self.extra_candidates.append(&mut candidates);
        self
    }

    /// Point mass at `c`.
    pub fn dirac(c: f64) -> Self {
        Measure1D::new(vec![Component1D::new(c, 1.0, Shape::Atom)], vec![])
            .expect("an atom has mass")
    }

    /// Uniform distribution on `[a, b]`.
    pub fn uniform(a: f64, b: f64) -> Self {
        let hw = (b - a) / 2.0;
        Measure1D::new(
            vec![Component1D::new(
                (a + b) / 2.0,
                1.0,
                Shape::Block {
                    half_width: hw,
                    height: 1.0 / (2.0 * hw),
                },
            )],
            vec![],
        )
        .expect("a block has mass")
    }

    pub fn components(&self) -> &[Component1D] {
        &self.components
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn restriction(&self) -> Option<&[(f64, f64)]> {
        self.restriction.as_deref()
    }

    /// Raw mass of the open interval `(a, b)` before normalization,
    /// honouring the restriction.
    pub fn raw_mass_in(&self, a: f64, b: f64) -> (f64, bool) {
        match &self.restriction {
            None => self.unrestricted_mass_in(a, b),
            Some(pieces) => {
                let mut total = 0.0;
                let mut exact = true;
                for &(lo, hi) in pieces {
                    let x0 = a.max(lo);
                    let x1 = b.min(hi);
                    if x1 > x0 {
                        let (m, e) = self.unrestricted_mass_in(x0, x1);
                        total += m;
                        exact &= e;
                    }
                }
                (total, exact)
            }
        }
    }

    fn unrestricted_mass_in(&self, a: f64, b: f64) -> (f64, bool) {
        let mut total = 0.0;
        let mut exact = true;
        for c in &self.components {
            total += c.mass_in(a, b);
        }
        for f in &self.families {
            let slice = f.parts_in(a, b);
            for c in &slice.components {
                total += c.mass_in(a, b);
            }
            total += slice.contained_mass;
            exact &= slice.exact;
        }
        (total, exact)
    }

    /// Normalized mass of the open ball `(u - r, u + r)`.
    pub fn ball_mass(&self, u: f64, r: f64) -> BallMassValue {
        debug_assert!(r > 0.0, "ball radius must be positive");
        let (m, exact) = self.raw_mass_in(u - r, u + r);
        BallMassValue {
            value: m / self.z,
            exact: exact && self.z_exact,
        }
    }

    /// Candidate centres for the radius-`r` supremal search.
    pub fn sup_candidates(&self, r: f64) -> Vec<f64> {
        let mut cands = Vec::new();
        let mut supports: Vec<(f64, f64)> = Vec::new();
        for c in &self.components {
            let (lo, hi) = c.support();
            supports.push((lo, hi));
            cands.extend_from_slice(&[c.center, lo, hi, lo + r, hi - r, lo - r, hi + r]);
        }
        for f in &self.families {
            cands.extend(f.sup_candidates(r));
        }
        supports.sort_by(|x, y| x.0.total_cmp(&y.0));
        for w in supports.windows(2) {
            cands.push((w[0].1 + w[1].0) / 2.0);
        }
        cands.extend_from_slice(&self.extra_candidates);
        if let Some(pieces) = &self.restriction {
            for &(lo, hi) in pieces {
                for e in [lo, hi] {
                    if e.is_finite() {
                        cands.extend_from_slice(&[e, e - r, e + r]);
                    }
                }
            }
        }
        cands.retain(|x| x.is_finite());
        cands.sort_by(f64::total_cmp);
        cands.dedup();
        cands
    }

    /// Supremal radius-`r` ball mass over the candidate set, with the
    /// centres attaining it (within relative tolerance).
    pub fn sup_ball_mass(&self, r: f64) -> (BallMassValue, Vec<f64>) {
        let cands = self.sup_candidates(r);
        let mut best = BallMassValue {
            value: 0.0,
            exact: true,
        };
        let mut values = Vec::with_capacity(cands.len());
        for &u in &cands {
            let m = self.ball_mass(u, r);
            values.push(m.value);
            if m.value > best.value {
                best = m;
            }
        }
        let cut = best.value * (1.0 - 1e-12);
        let argmax = cands
            .into_iter()
            .zip(values)
            .filter(|&(_, v)| v >= cut)
            .map(|(u, _)| u)
            .collect();
        (best, argmax)
    }

    /// Ball-mass ratio with the conventions `0/0 = 1` and `c/0 = ∞`.
    pub fn ratio(&self, num: RatioArg, den: RatioArg, r: f64) -> f64 {
        assert!(
            !(matches!(num, RatioArg::Sup) && matches!(den, RatioArg::Sup)),
            "at most one ratio argument may be the supremal mass"
        );
        let eval = |arg: RatioArg| match arg {
            RatioArg::Point(u) => self.ball_mass(u, r).value,
            RatioArg::Sup => self.sup_ball_mass(r).0.value,
        };
        let a = eval(num);
        let b = eval(den);
        if b == 0.0 {
            if a == 0.0 {
                1.0
            } else {
                f64::INFINITY
            }
        } else {
            a / b
        }
    }

    /// Translation by `b`: all centres shift, masses are unchanged.
    pub fn translate(&self, b: f64) -> Self {
        let mut m = self.clone();
        for c in &mut m.components {
            c.center += b;
        }
        for f in &mut m.families {
            f.translate(b);
        }
        if let Some(pieces) = &mut m.restriction {
            for p in pieces.iter_mut() {
                p.0 += b;
                p.1 += b;
            }
        }
        for c in &mut m.extra_candidates {
            *c += b;
        }
        m
    }

    /// Restriction to a union of open intervals, renormalized.
    pub fn restrict(&self, intervals: &[(f64, f64)]) -> Result<Self, MeasureError> {
        let mut pieces: Vec<(f64, f64)> = intervals.to_vec();
        pieces.sort_by(|x, y| x.0.total_cmp(&y.0));
        let merged = match &self.restriction {
            None => pieces,
            Some(existing) => {
                let mut out = Vec::new();
                for &(a, b) in &pieces {
                    for &(lo, hi) in existing {
                        let x0 = a.max(lo);
                        let x1 = b.min(hi);
                        if x1 > x0 {
                            out.push((x0, x1));
                        }
                    }
                }
                out
            }
        };
        let mut m = self.clone();
        m.restriction = Some(merged);
        let (z, exact) = m.raw_mass_in(f64::NEG_INFINITY, f64::INFINITY);
        if !(z > 0.0) {
            return Err(MeasureError::EmptyRestriction);
        }
        m.z = z;
        m.z_exact = exact;
        Ok(m)
    }

    /// `alpha * self + (1 - alpha) * other` as probability measures.
    pub fn convex_combine(&self, alpha: f64, other: &Measure1D) -> Result<Self, MeasureError> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(MeasureError::BadWeight(alpha));
        }
        if self.restriction.is_some() || other.restriction.is_some() {
            return Err(MeasureError::CombineRestricted);
        }
        let mut components = Vec::new();
        let mut families = Vec::new();
        for (scale, m) in [(alpha / self.z, self), ((1.0 - alpha) / other.z, other)] {
            for c in &m.components {
                let mut c = c.clone();
                c.weight *= scale;
                components.push(c);
            }
            for f in &m.families {
                let mut f = f.clone();
                f.rescale(scale);
                families.push(f);
            }
        }
        let mut out = Measure1D::new(components, families)?;
        out.extra_candidates = self
            .extra_candidates
            .iter()
            .chain(&other.extra_candidates)
            .copied()
            .collect();
        Ok(out)
    }

    /// Closed-form normalizer (raw total mass) with its exactness bound.
    pub fn normalizer(&self) -> Normalizer {
        Normalizer {
            value: self.z,
            error_bound: if self.z_exact { 0.0 } else { self.z * 1e-12 },
        }
    }

    /// Normalizer recomputed as a finite prefix sum plus a certified tail
    /// interval; errors out when the family tail bounds do not reach `tol`
    /// by index `kmax`. Restriction is not supported on this path.
    pub fn normalizer_by_prefix(&self, tol: f64, kmax: u32) -> Result<Normalizer, MeasureError> {
        let mut value: f64 = self.components.iter().map(|c| c.mass()).sum();
        let mut error = 0.0;
        for f in &self.families {
            let mut k = 1;
            let mut tail = f.tail_bound(0);
            let mut prefix = 0.0;
            while tail > tol {
                prefix += f.index_mass(k);
                tail = f.tail_bound(k);
                k += 1;
                if k > kmax {
                    return Err(MeasureError::TailDoesNotConverge { tol, kmax });
                }
            }
            value += prefix + tail / 2.0;
            error += tail / 2.0;
        }
        Ok(Normalizer {
            value,
            error_bound: error,
        })
    }

    /// Density at `x` (sum over components and nearby family parts);
    /// `None` when an atom sits at `x` or a singular centre coincides.
    pub fn density(&self, x: f64) -> Option<f64> {
        if let Some(pieces) = &self.restriction {
            if !pieces.iter().any(|&(lo, hi)| lo < x && x < hi) {
                return Some(0.0);
            }
        }
        let mut d = 0.0;
        for c in &self.components {
            d += c.density(x)?;
        }
        let eps = 1e-12 * (1.0 + x.abs());
        for f in &self.families {
            let slice = f.parts_in(x - eps, x + eps);
            for c in &slice.components {
                d += c.density(x)?;
            }
        }
        Some(d / self.z)
    }

    /// Centres where the density is unbounded or atomic.
    pub fn singular_centers(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .components
            .iter()
            .filter(|c| c.shape.singular())
            .map(|c| c.center)
            .collect();
        for f in &self.families {
            out.extend(f.singular_centers());
        }
        out
    }

    /// Absolute interval containing all supports (restriction applied).
    pub fn support_bounds(&self) -> (f64, f64) {
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for c in &self.components {
            let (a, b) = c.support();
            lo = lo.min(a);
            hi = hi.max(b);
        }
        for f in &self.families {
            let (a, b) = f.support_bounds();
            lo = lo.min(a);
            hi = hi.max(b);
        }
        if let Some(pieces) = &self.restriction {
            let rlo = pieces.first().map(|p| p.0).unwrap_or(lo);
            let rhi = pieces.last().map(|p| p.1).unwrap_or(hi);
            lo = lo.max(rlo);
            hi = hi.min(rhi);
        }
        (lo, hi)
    }
}

/// JSON document form of a measure.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureSpec {
    #[serde(default)]
    pub components: Vec<Component1D>,
    #[serde(default)]
    pub lazy_families: Vec<Family>,
    #[serde(default)]
    pub normalizer: NormalizerSpec,
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormalizerSpec {
    #[default]
    Auto,
    Value(f64),
}

impl Measure1D {
    pub fn from_spec(spec: MeasureSpec) -> Result<Self, MeasureError> {
        let mut m = Measure1D::new(spec.components, spec.lazy_families)?;
        if let NormalizerSpec::Value(z) = spec.normalizer {
            if !(z > 0.0) {
                return Err(MeasureError::ZeroMass);
            }
            m.z = z;
            m.z_exact = true;
        }
        Ok(m)
    }

    pub fn from_json(json: &str) -> Result<Self, String> {
        let spec: MeasureSpec = serde_json::from_str(json).map_err(|e| e.to_string())?;
        Measure1D::from_spec(spec).map_err(|e| e.to_string())
    }

    pub fn to_spec(&self) -> MeasureSpec {
        MeasureSpec {
            components: self.components.clone(),
            lazy_families: self.families.clone(),
            normalizer: NormalizerSpec::Value(self.z),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn atom_boundary_is_excluded() {
        let m = Measure1D::dirac(0.0);
        assert_eq!(m.ball_mass(0.0, 0.5).value, 1.0);
        assert_eq!(m.ball_mass(1.0, 1.0).value, 0.0); // boundary atom excluded
        assert_eq!(m.ball_mass(1.0, 1.0 + 1e-12).value, 1.0);
    }

    #[test]
    fn uniform_ball_masses() {
        let m = Measure1D::uniform(0.0, 1.0);
        assert!((m.ball_mass(0.5, 0.25).value - 0.5).abs() < TOL);
        assert!((m.ball_mass(0.0, 0.25).value - 0.25).abs() < TOL);
        let (sup, argmax) = m.sup_ball_mass(0.25);
        assert!((sup.value - 0.5).abs() < TOL);
        assert!(argmax.iter().any(|&u| (u - 0.25).abs() < TOL));
        assert!(argmax.iter().any(|&u| (u - 0.75).abs() < TOL));
    }

    #[test]
    fn power_singularity_sqrt_mass() {
        // (1/4)|x|^{-1/2} on [-1,1]: centred mass sqrt(r)
        let c = Component1D::new(
            0.0,
            1.0,
            Shape::Power {
                exponent: 0.5,
                coeff: 0.25,
                radius: 1.0,
                side: Side::TwoSided,
            },
        );
        for r in [1.0, 0.25, 0.0625, 1e-6] {
            assert!((c.centered_mass(r) - r.sqrt()).abs() < TOL);
        }
        assert!((c.mass() - 1.0).abs() < TOL);
    }

    #[test]
    fn one_sided_power_masses() {
        // (3/4) x^{-1/4} on (0, r0]: mass of (0, s] = s^{3/4}
        let c = Component1D::new(
            1.0,
            1.0,
            Shape::Power {
                exponent: 0.25,
                coeff: 0.75,
                radius: 0.5,
                side: Side::Right,
            },
        );
        let s = 0.125;
        assert!((c.mass_in(1.0, 1.0 + s) - s.powf(0.75)).abs() < TOL);
        // ball centred at 1 + s of radius s covers (1, 1+2s)
        assert!((c.mass_in(1.0 + s - s, 1.0 + 2.0 * s) - (2.0 * s).powf(0.75)).abs() < TOL);
        // nothing to the left of the centre
        assert_eq!(c.mass_in(0.5, 1.0), 0.0);
    }

    #[test]
    fn knot_masses_at_and_between_knots() {
        // even knots: F(4^{-n}) = 2^{-n}
        let c = Component1D::new(
            0.0,
            1.0,
            Shape::Knots {
                top_radius: 1.0,
                radius_ratio: 0.25,
                top_mass: 1.0,
                mass_ratio: 0.5,
                truncate_at: None,
            },
        );
        for n in 0..20 {
            let r = 0.25f64.powi(n);
            assert!((c.centered_mass(r) - 0.5f64.powi(n)).abs() < 1e-15);
        }
        // between knots: linear interpolation, F(2^{-2n-1}) = (4/3) 2^{-n-1}
        for n in 0..20 {
            let r = 0.5f64.powi(2 * n + 1);
            let expect = (4.0 / 3.0) * 0.5f64.powi(n + 1);
            assert!((c.centered_mass(r) - expect).abs() < 1e-15);
        }
    }

    #[test]
    fn trig_mass_formula() {
        let alpha = 0.3;
        let phase = 2.0 * std::f64::consts::PI / 3.0;
        let c = Component1D::new(0.0, 1.0, Shape::Trig { alpha, phase });
        for r in [1e-6f64, 1e-3, 0.01] {
            let expect = (2.0 * r).sqrt() / (1.0 + alpha * (r.ln() - phase).sin());
            assert!((c.centered_mass(r) - expect).abs() < TOL);
        }
        assert!((c.mass() - 1.0).abs() < TOL);
    }

    #[test]
    fn ratio_conventions() {
        let m = Measure1D::uniform(0.0, 1.0);
        assert!((m.ratio(RatioArg::Point(0.0), RatioArg::Point(0.5), 0.25) - 0.5).abs() < TOL);
        // both centres far outside the support: 0/0 = 1
        assert_eq!(m.ratio(RatioArg::Point(5.0), RatioArg::Point(9.0), 0.1), 1.0);
        // positive over zero
        assert_eq!(
            m.ratio(RatioArg::Point(0.5), RatioArg::Point(9.0), 0.1),
            f64::INFINITY
        );
    }

    #[test]
    fn translate_preserves_ball_masses() {
        let m = Measure1D::uniform(0.0, 1.0);
        let t = m.translate(3.5);
        for r in [0.1, 0.3] {
            for u in [0.0, 0.2, 0.9] {
                assert!(
                    (m.ball_mass(u, r).value - t.ball_mass(u + 3.5, r).value).abs() < TOL
                );
            }
        }
    }

    #[test]
    fn combine_is_additive() {
        let a = Measure1D::dirac(0.0);
        let b = Measure1D::uniform(1.0, 3.0);
        let m = a.convex_combine(0.5, &b).unwrap();
        assert!((m.ball_mass(0.0, 0.5).value - 0.5).abs() < TOL);
        assert!((m.ball_mass(2.0, 0.5).value - 0.25).abs() < TOL);
        let err = Measure1D::uniform(0.0, 1.0)
            .restrict(&[(0.0, 0.5)])
            .unwrap()
            .convex_combine(0.5, &b);
        assert_eq!(err.unwrap_err(), MeasureError::CombineRestricted);
    }

    #[test]
    fn restriction_renormalizes() {
        let m = Measure1D::uniform(0.0, 1.0);
        let r = m.restrict(&[(0.0, 0.5)]).unwrap();
        assert!((r.ball_mass(0.25, 0.1).value - 0.4).abs() < TOL);
        assert!(m.restrict(&[(5.0, 6.0)]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let json = r#"{
            "components": [
                {"kind": "atom", "center": 0.0, "weight": 0.5},
                {"kind": "block", "center": 2.0, "half_width": 1.0, "height": 0.5, "weight": 0.5}
            ],
            "lazy_families": [],
            "normalizer": "auto"
        }"#;
        let m = Measure1D::from_json(json).unwrap();
        assert!((m.ball_mass(0.0, 0.5).value - 0.5).abs() < TOL);
        let spec = m.to_spec();
        let text = serde_json::to_string(&spec).unwrap();
        let again = Measure1D::from_json(&text).unwrap();
        assert!((again.ball_mass(2.0, 0.5).value - 0.25).abs() < TOL);
    }
}
