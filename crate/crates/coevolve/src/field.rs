//! Uniform-grid scalar fields: shift/rescale group actions, norms, and
//! truncated Fourier analysis of difference distributions.

use crate::error::{Error, Result};

/// Geometry of a uniform 1-D grid: `n_nodes` nodes spanning `[x_min, x_max]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub x_min: f64,
    pub x_max: f64,
    pub n_nodes: usize,
}

impl GridSpec {
    pub fn new(x_min: f64, x_max: f64, n_nodes: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite()) || x_max <= x_min {
            return Err(Error::invalid(format!(
                "grid bounds must be finite with x_max > x_min, got [{x_min}, {x_max}]"
            )));
        }
        if n_nodes < 3 {
            return Err(Error::invalid(format!(
                "grid needs at least 3 nodes, got {n_nodes}"
            )));
        }
        Ok(GridSpec {
            x_min,
            x_max,
            n_nodes,
        })
    }

    /// Node spacing.
    pub fn dx(&self) -> f64 {
        (self.x_max - self.x_min) / (self.n_nodes - 1) as f64
    }

    /// Domain length `x_max - x_min`.
    pub fn length(&self) -> f64 {
        self.x_max - self.x_min
    }

    /// Position of node `i`.
    pub fn node(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx()
    }

    pub fn nodes(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.n_nodes).map(|i| self.node(i))
    }
}

/// Samples of a scalar profile on a uniform 1-D grid.
#[derive(Debug, Clone, PartialEq)]
pub struct Field1D {
    grid: GridSpec,
    values: Vec<f64>,
}

impl Field1D {
    pub fn new(grid: GridSpec, values: Vec<f64>) -> Result<Self> {
        if values.len() != grid.n_nodes {
            return Err(Error::invalid(format!(
                "value count {} does not match grid with {} nodes",
                values.len(),
                grid.n_nodes
            )));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::invalid("field values must be finite"));
        }
        Ok(Field1D { grid, values })
    }

    /// Sample a function at every node.
    pub fn from_fn(grid: GridSpec, f: impl Fn(f64) -> f64) -> Result<Self> {
        let values = grid.nodes().map(f).collect();
        Field1D::new(grid, values)
    }

    pub fn zeros(grid: GridSpec) -> Self {
        Field1D {
            values: vec![0.0; grid.n_nodes],
            grid,
        }
    }

    pub fn grid(&self) -> GridSpec {
        self.grid
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn dx(&self) -> f64 {
        self.grid.dx()
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    /// Rebuild a field on the same grid from raw values.
    pub fn with_values(&self, values: Vec<f64>) -> Result<Self> {
        Field1D::new(self.grid, values)
    }

    /// Linear interpolation; arguments outside the domain clamp to the
    /// nearest boundary value.
    pub fn sample(&self, x: f64) -> f64 {
        let n = self.values.len();
        let s = (x - self.grid.x_min) / self.grid.dx();
        if s <= 0.0 {
            return self.values[0];
        }
        if s >= (n - 1) as f64 {
            return self.values[n - 1];
        }
        let i = s.floor() as usize;
        let frac = s - i as f64;
        self.values[i] + frac * (self.values[i + 1] - self.values[i])
    }

    /// Shift action: returns `g` with `g(x) = f(x + c)`.
    pub fn shifted(&self, c: f64) -> Result<Field1D> {
        if !c.is_finite() {
            return Err(Error::invalid("shift must be finite"));
        }
        let values = self.grid.nodes().map(|x| self.sample(x + c)).collect();
        Ok(Field1D {
            grid: self.grid,
            values,
        })
    }

    /// Rescale action: returns `g` with `g(x) = amp * f(x / space)`.
    pub fn rescaled(&self, space: f64, amp: f64) -> Result<Field1D> {
        if !(space.is_finite() && space > 0.0 && amp.is_finite() && amp > 0.0) {
            return Err(Error::invalid(format!(
                "rescale factors must be positive and finite, got ({space}, {amp})"
            )));
        }
        let values = self
            .grid
            .nodes()
            .map(|x| amp * self.sample(x / space))
            .collect();
        Ok(Field1D {
            grid: self.grid,
            values,
        })
    }

    /// Trapezoid quadrature of the field over its domain.
    pub fn integral(&self) -> f64 {
        let v = &self.values;
        let n = v.len();
        let interior: f64 = v[1..n - 1].iter().sum();
        self.dx() * (interior + 0.5 * (v[0] + v[n - 1]))
    }

    /// Trapezoid quadrature of `x * f(x)` divided by the mass.
    pub fn centroid(&self) -> Result<f64> {
        let mass = self.integral();
        if mass.abs() < f64::EPSILON * self.len() as f64 {
            return Err(Error::invalid("centroid of a zero-mass field"));
        }
        let weighted = self
            .with_values(
                self.grid
                    .nodes()
                    .zip(&self.values)
                    .map(|(x, v)| x * v)
                    .collect(),
            )
            .expect("same length");
        Ok(weighted.integral() / mass)
    }

    /// Trapezoid quadrature of `(x - c)^2 * f(x)`.
    pub fn second_moment_about(&self, c: f64) -> f64 {
        self.with_values(
            self.grid
                .nodes()
                .zip(&self.values)
                .map(|(x, v)| (x - c) * (x - c) * v)
                .collect(),
        )
        .expect("same length")
        .integral()
    }

    fn check_same_grid(&self, other: &Field1D) -> Result<()> {
        if self.grid != other.grid {
            return Err(Error::GridMismatch(format!(
                "fields live on different grids: {:?} vs {:?}",
                self.grid, other.grid
            )));
        }
        Ok(())
    }

    /// Squared L2 distance `integral (f - g)^2 dx` by trapezoid quadrature.
    pub fn l2_distance_sq(&self, other: &Field1D) -> Result<f64> {
        self.check_same_grid(other)?;
        let sq: Vec<f64> = self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b) * (a - b))
            .collect();
        Ok(self.with_values(sq).expect("same length").integral())
    }

    /// L2 distance `(integral (f - g)^2 dx)^(1/2)`.
    pub fn l2_distance(&self, other: &Field1D) -> Result<f64> {
        Ok(self.l2_distance_sq(other)?.sqrt())
    }

    /// Sup-norm distance over nodes.
    pub fn max_distance(&self, other: &Field1D) -> Result<f64> {
        self.check_same_grid(other)?;
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// Truncated trigonometric coefficients of a periodic signal:
/// `f(x) ~ a[0]/2 + sum_k a[k] cos(2 pi k x / L) + b[k-1] sin(2 pi k x / L)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoeffs {
    /// Cosine coefficients `a_0..a_K`.
    pub a: Vec<f64>,
    /// Sine coefficients `b_1..b_K`.
    pub b: Vec<f64>,
    /// Period `L`.
    pub period: f64,
}

impl FourierCoeffs {
    pub fn new(a: Vec<f64>, b: Vec<f64>, period: f64) -> Result<Self> {
        if a.len() != b.len() + 1 || b.is_empty() {
            return Err(Error::invalid(format!(
                "need K+1 cosine and K sine coefficients with K >= 1, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        if !(period.is_finite() && period > 0.0) {
            return Err(Error::invalid("period must be positive"));
        }
        if a.iter().chain(b.iter()).any(|c| !c.is_finite()) {
            return Err(Error::invalid("coefficients must be finite"));
        }
        Ok(FourierCoeffs { a, b, period })
    }

    pub fn zero(modes: usize, period: f64) -> Result<Self> {
        FourierCoeffs::new(vec![0.0; modes + 1], vec![0.0; modes], period)
    }

    /// Number of retained modes `K`.
    pub fn modes(&self) -> usize {
        self.b.len()
    }

    /// Coefficients of the truncated series, computed by rectangle sums over
    /// the first `n-1` nodes (periodic convention: the last node duplicates
    /// the first modulo the period).
    pub fn analyze(f: &Field1D, modes: usize) -> Result<Self> {
        let n = f.len();
        if modes < 1 || 2 * modes >= n - 1 {
            return Err(Error::invalid(format!(
                "mode count {} out of range for {} nodes",
                modes, n
            )));
        }
        let period = f.grid().length();
        let omega = 2.0 * std::f64::consts::PI / period;
        // (2/L) * dx with dx = L/(n-1).
        let weight = 2.0 / (n - 1) as f64;
        let mut a = Vec::with_capacity(modes + 1);
        let mut b = Vec::with_capacity(modes);
        for k in 0..=modes {
            let mut ca = 0.0;
            let mut cb = 0.0;
            for (x, v) in f.grid().nodes().zip(f.values()).take(n - 1) {
                let phase = k as f64 * omega * x;
                ca += v * phase.cos();
                cb += v * phase.sin();
            }
            a.push(weight * ca);
            if k >= 1 {
                b.push(weight * cb);
            }
        }
        FourierCoeffs::new(a, b, period)
    }

    /// Evaluate the truncated series on a grid.
    pub fn synthesize(&self, grid: &GridSpec) -> Result<Field1D> {
        let omega = 2.0 * std::f64::consts::PI / self.period;
        Field1D::from_fn(*grid, |x| {
            let mut v = 0.5 * self.a[0];
            for k in 1..=self.modes() {
                let phase = k as f64 * omega * x;
                v += self.a[k] * phase.cos() + self.b[k - 1] * phase.sin();
            }
            v
        })
    }

    /// Coefficients of the shifted signal `x -> f(x + c)`: each mode rotates
    /// by `k * 2 pi c / L`.
    pub fn shifted(&self, c: f64) -> FourierCoeffs {
        let theta = 2.0 * std::f64::consts::PI * c / self.period;
        let mut a = vec![self.a[0]];
        let mut b = Vec::with_capacity(self.modes());
        for k in 1..=self.modes() {
            let (s, co) = (k as f64 * theta).sin_cos();
            a.push(self.a[k] * co + self.b[k - 1] * s);
            b.push(-self.a[k] * s + self.b[k - 1] * co);
        }
        FourierCoeffs {
            a,
            b,
            period: self.period,
        }
    }

    /// Squared amplitude of mode `k` (1-based); invariant under shifts.
    pub fn mode_energy(&self, k: usize) -> f64 {
        self.a[k] * self.a[k] + self.b[k - 1] * self.b[k - 1]
    }

    /// Flatten to `[a_0..a_K, b_1..b_K]` for componentwise projection.
    pub fn components(&self) -> Vec<f64> {
        let mut out = self.a.clone();
        out.extend_from_slice(&self.b);
        out
    }

    /// Inverse of [`components`](Self::components).
    pub fn from_components(comp: &[f64], period: f64) -> Result<Self> {
        if comp.len() % 2 == 0 {
            return Err(Error::invalid("component vector must have odd length"));
        }
        let modes = comp.len() / 2;
        FourierCoeffs::new(
            comp[..=modes].to_vec(),
            comp[modes + 1..].to_vec(),
            period,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn grid(x_min: f64, x_max: f64, n: usize) -> GridSpec {
        GridSpec::new(x_min, x_max, n).unwrap()
    }

    #[test]
    fn grid_rejects_bad_inputs() {
        assert!(GridSpec::new(0.0, 0.0, 5).is_err());
        assert!(GridSpec::new(0.0, 1.0, 2).is_err());
        assert!(GridSpec::new(f64::NAN, 1.0, 5).is_err());
        assert!(Field1D::new(grid(0.0, 1.0, 3), vec![0.0; 4]).is_err());
        assert!(Field1D::new(grid(0.0, 1.0, 3), vec![0.0, f64::NAN, 0.0]).is_err());
    }

    #[test]
    fn shift_identity() {
        let f = Field1D::from_fn(grid(-30.0, 30.0, 601), |x| (-x * x / 50.0).exp()).unwrap();
        let g = f.shifted(0.0).unwrap();
        assert_eq!(f, g);
        assert!(f.shifted(f64::INFINITY).is_err());
    }

    #[test]
    fn shift_exact_on_linear_data() {
        let f = Field1D::from_fn(grid(-30.0, 30.0, 601), |x| x).unwrap();
        let g = f.shifted(1.0).unwrap();
        for (i, x) in f.grid().nodes().enumerate() {
            if x + 1.0 <= 30.0 {
                assert_abs_diff_eq!(g.values()[i], x + 1.0, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn shift_composition_matches_analytic() {
        // Oracle: direct evaluation of f(x + a + b) for a smooth profile.
        let profile = |x: f64| (-(x / 4.0) * (x / 4.0)).exp();
        let f = Field1D::from_fn(grid(-30.0, 30.0, 601), profile).unwrap();
        let (a, b) = (0.37, 0.41);
        let g = f.shifted(a).unwrap().shifted(b).unwrap();
        let dx = f.dx();
        for (i, x) in f.grid().nodes().enumerate() {
            if x + a + b < 29.0 && x > -29.0 {
                let err = (g.values()[i] - profile(x + a + b)).abs();
                assert!(err < 0.5 * dx * dx, "err {err} at x={x}");
            }
        }
    }

    #[test]
    fn rescale_identity_and_analytic() {
        let f = Field1D::from_fn(grid(-10.0, 10.0, 1001), |x| (-x * x).exp()).unwrap();
        assert_eq!(f.rescaled(1.0, 1.0).unwrap(), f);
        // g(x) = 3 exp(-x^2/4)
        let g = f.rescaled(2.0, 3.0).unwrap();
        let dx = f.dx();
        for (i, x) in f.grid().nodes().enumerate() {
            let expect = 3.0 * (-x * x / 4.0).exp();
            assert!((g.values()[i] - expect).abs() < dx * dx, "node {i}");
        }
        assert!(f.rescaled(-1.0, 1.0).is_err());
        assert!(f.rescaled(1.0, 0.0).is_err());
    }

    #[test]
    fn rescale_composition_matches_analytic() {
        let profile = |x: f64| (-(x / 3.0) * (x / 3.0)).exp();
        let f = Field1D::from_fn(grid(-10.0, 10.0, 1001), profile).unwrap();
        let g = f.rescaled(1.4, 0.8).unwrap().rescaled(1.3, 1.1).unwrap();
        let h = f.rescaled(1.4 * 1.3, 0.8 * 1.1).unwrap();
        // Both routes interpolate; compare against the analytic composition.
        for (i, x) in f.grid().nodes().enumerate() {
            let expect = 0.8 * 1.1 * profile(x / (1.4 * 1.3));
            assert!((g.values()[i] - expect).abs() < 1e-4, "node {i}");
            assert!((h.values()[i] - expect).abs() < 1e-4, "node {i}");
        }
    }

    #[test]
    fn l2_distance_basics() {
        let g10 = grid(-10.0, 10.0, 1001);
        let f = Field1D::from_fn(g10, |x| x.cos()).unwrap();
        assert_eq!(f.l2_distance(&f).unwrap(), 0.0);

        let zero = Field1D::zeros(g10);
        let one = Field1D::from_fn(g10, |_| 1.0).unwrap();
        assert_abs_diff_eq!(
            one.l2_distance(&zero).unwrap(),
            20.0f64.sqrt(),
            epsilon = 1e-12
        );

        // Analytic oracle: integral of sin^2(pi x / 10) over [-10, 10] is 10.
        let s = Field1D::from_fn(g10, |x| (std::f64::consts::PI * x / 10.0).sin()).unwrap();
        assert_abs_diff_eq!(s.l2_distance(&zero).unwrap(), 10.0f64.sqrt(), epsilon = 1e-6);
        assert_abs_diff_eq!(s.l2_distance_sq(&zero).unwrap(), 10.0, epsilon = 1e-6);

        let other = Field1D::zeros(grid(-10.0, 10.0, 501));
        assert!(one.l2_distance(&other).is_err());
    }

    #[test]
    fn fourier_constant_and_single_mode() {
        let g = grid(-30.0, 30.0, 101);
        let c = FourierCoeffs::analyze(&Field1D::from_fn(g, |_| 2.5).unwrap(), 15).unwrap();
        assert_abs_diff_eq!(c.a[0], 5.0, epsilon = 1e-12);
        for k in 1..=15 {
            assert_abs_diff_eq!(c.a[k], 0.0, epsilon = 1e-12);
            assert_abs_diff_eq!(c.b[k - 1], 0.0, epsilon = 1e-12);
        }

        let l = g.length();
        let f = Field1D::from_fn(g, |x| (2.0 * std::f64::consts::PI * x / l).cos()).unwrap();
        let c = FourierCoeffs::analyze(&f, 15).unwrap();
        assert_abs_diff_eq!(c.a[1], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c.b[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c.a[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(c.a[2], 0.0, epsilon = 1e-12);
    }

    #[test]
    fn fourier_round_trip_band_limited() {
        let g = grid(-30.0, 30.0, 101);
        let c = FourierCoeffs::new(
            vec![0.4, 1.0, -0.3, 0.2, 0.05, -0.6],
            vec![0.7, 0.1, -0.2, 0.3, 0.11],
            g.length(),
        )
        .unwrap();
        let f = c.synthesize(&g).unwrap();
        let c2 = FourierCoeffs::analyze(&f, 5).unwrap();
        for k in 0..=5 {
            assert_abs_diff_eq!(c2.a[k], c.a[k], epsilon = 1e-10);
        }
        for k in 1..=5 {
            assert_abs_diff_eq!(c2.b[k - 1], c.b[k - 1], epsilon = 1e-10);
        }
        let f2 = c2.synthesize(&g).unwrap();
        assert!(f.max_distance(&f2).unwrap() < 1e-10);
    }

    #[test]
    fn synthesize_trivial_cases() {
        let g = grid(-30.0, 30.0, 101);
        let zero = FourierCoeffs::zero(15, g.length()).unwrap();
        assert!(zero.synthesize(&g).unwrap().values().iter().all(|&v| v == 0.0));

        let mut c = FourierCoeffs::zero(3, g.length()).unwrap();
        c.a[0] = 2.0;
        assert!(c
            .synthesize(&g)
            .unwrap()
            .values()
            .iter()
            .all(|&v| (v - 1.0).abs() < 1e-15));
    }

    #[test]
    fn analyze_rejects_too_many_modes() {
        let f = Field1D::zeros(grid(0.0, 1.0, 101));
        assert!(FourierCoeffs::analyze(&f, 50).is_err());
        assert!(FourierCoeffs::analyze(&f, 49).is_ok());
    }

    #[test]
    fn shifted_coeffs_rotation_is_orthogonal() {
        let g = grid(-30.0, 30.0, 101);
        let c = FourierCoeffs::new(
            vec![0.4, 1.0, -0.3, 0.2],
            vec![0.7, 0.1, -0.2],
            g.length(),
        )
        .unwrap();
        let r = c.shifted(7.3);
        for k in 1..=3 {
            assert_abs_diff_eq!(r.mode_energy(k), c.mode_energy(k), epsilon = 1e-14);
        }
        // Rotating by c then -c is the identity.
        let back = r.shifted(-7.3);
        for k in 0..=3 {
            assert_abs_diff_eq!(back.a[k], c.a[k], epsilon = 1e-13);
        }
    }

    #[test]
    fn shifted_coeffs_match_shifted_signal() {
        let g = grid(-30.0, 30.0, 101);
        let c = FourierCoeffs::new(
            vec![0.4, 1.0, -0.3, 0.2],
            vec![0.7, 0.1, -0.2],
            g.length(),
        )
        .unwrap();
        let s = 4.2;
        let direct = FourierCoeffs::analyze(
            &Field1D::from_fn(g, |x| c.synthesize(&g).unwrap().sample(x)).unwrap(),
            3,
        )
        .unwrap();
        // Shift the synthesized signal analytically, then re-analyze.
        let f_shift = {
            let omega = 2.0 * std::f64::consts::PI / c.period;
            Field1D::from_fn(g, |x| {
                let x = x + s;
                let mut v = 0.5 * c.a[0];
                for k in 1..=c.modes() {
                    let phase = k as f64 * omega * x;
                    v += c.a[k] * phase.cos() + c.b[k - 1] * phase.sin();
                }
                v
            })
            .unwrap()
        };
        let analyzed = FourierCoeffs::analyze(&f_shift, 3).unwrap();
        let rotated = direct.shifted(s);
        for k in 0..=3 {
            assert_abs_diff_eq!(analyzed.a[k], rotated.a[k], epsilon = 1e-10);
        }
        for k in 1..=3 {
            assert_abs_diff_eq!(analyzed.b[k - 1], rotated.b[k - 1], epsilon = 1e-10);
        }
    }

    proptest! {
        #[test]
        fn l2_is_a_metric(
            raw in proptest::collection::vec(-5.0f64..5.0, 33 * 3),
        ) {
            let g = grid(0.0, 1.0, 33);
            let f = Field1D::new(g, raw[0..33].to_vec()).unwrap();
            let h = Field1D::new(g, raw[33..66].to_vec()).unwrap();
            let w = Field1D::new(g, raw[66..99].to_vec()).unwrap();
            let fh = f.l2_distance(&h).unwrap();
            let hf = h.l2_distance(&f).unwrap();
            prop_assert!((fh - hf).abs() < 1e-12);
            prop_assert!(f.l2_distance(&f).unwrap() == 0.0);
            let fw = f.l2_distance(&w).unwrap();
            let wh = w.l2_distance(&h).unwrap();
            prop_assert!(fh <= fw + wh + 1e-12);
        }

        #[test]
        fn shift_group_action_on_smooth_fields(a in -2.0f64..2.0, b in -2.0f64..2.0) {
            let g = grid(-30.0, 30.0, 601);
            let f = Field1D::from_fn(g, |x| (-(x/5.0)*(x/5.0)).exp()).unwrap();
            let two = f.shifted(a).unwrap().shifted(b).unwrap();
            let one = f.shifted(a + b).unwrap();
            let dx = f.dx();
            for (i, x) in g.nodes().enumerate() {
                // Skip nodes whose lookups touch the clamped boundary region.
                if x - 4.0 > -30.0 && x + 4.0 < 30.0 {
                    prop_assert!((two.values()[i] - one.values()[i]).abs() < 2.0 * dx * dx);
                }
            }
        }
    }
}
