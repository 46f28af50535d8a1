//! Sample-figure datasets: the five-order family
//! `q = 3 + (m/5) e1 - (3m/10) e2 + (2m/5) e3`, `m = 0..4`, on `t ∈ [0, 6]`,
//! plus the two contrasting orders for the vector-phase plot.

use crate::error::Error;
use crate::quaternion::{Quaternion, SplineOrder};
use crate::time_domain::{bspline_time_grid, SampledField};

pub const FIGURE_T0: f64 = 0.0;
pub const FIGURE_DT: f64 = 0.05;
pub const FIGURE_N: usize = 121;

/// Orders `3 + (m/5) e1 - (3m/10) e2 + (2m/5) e3` for `m = 0..=4`.
pub fn family_orders() -> Vec<Quaternion> {
    (0..=4)
        .map(|m| {
            let m = m as f64;
            Quaternion::new(3.0, m / 5.0, -3.0 * m / 10.0, 2.0 * m / 5.0)
        })
        .collect()
}

/// The two contrasting orders of the vector-phase figure.
pub fn contrast_orders() -> [Quaternion; 2] {
    [
        Quaternion::new(3.0, -1.0, 1.0, 2.0),
        Quaternion::new(3.0, 1.0, 2.0, 2.0),
    ]
}

/// All figure series sampled on the common grid.
#[derive(Debug, Clone)]
pub struct FigureData {
    /// One field per family order m = 0..4.
    pub family: Vec<SampledField<Quaternion>>,
    /// The two contrast-order fields.
    pub contrast: [SampledField<Quaternion>; 2],
}

pub fn compute_figure_data() -> Result<FigureData, Error> {
    let family = family_orders()
        .into_iter()
        .map(|q| {
            let order = SplineOrder::time_domain(q)?;
            bspline_time_grid(&order, FIGURE_T0, FIGURE_DT, FIGURE_N)
        })
        .collect::<Result<Vec<_>, _>>()?;
    let [qa, qb] = contrast_orders();
    let contrast = [
        bspline_time_grid(
            &SplineOrder::time_domain(qa)?,
            FIGURE_T0,
            FIGURE_DT,
            FIGURE_N,
        )?,
        bspline_time_grid(
            &SplineOrder::time_domain(qb)?,
            FIGURE_T0,
            FIGURE_DT,
            FIGURE_N,
        )?,
    ];
    Ok(FigureData { family, contrast })
}

/// Largest out-of-line component of the sampled vector parts relative to the
/// order's vector direction; zero-vector orders report the largest vector
/// magnitude instead. Homogeneity of `B_q` forces this to vanish.
pub fn planarity_residual(field: &SampledField<Quaternion>) -> f64 {
    let dir = field.order.direction();
    let mut worst: f64 = 0.0;
    for s in &field.samples {
        let v = s.vec();
        match dir {
            Some(d) => {
                let proj = v[0] * d[0] + v[1] * d[1] + v[2] * d[2];
                let out = [v[0] - proj * d[0], v[1] - proj * d[1], v[2] - proj * d[2]];
                worst = worst.max((out[0] * out[0] + out[1] * out[1] + out[2] * out[2]).sqrt());
            }
            None => {
                worst = worst.max((v[0] * v[0] + v[1] * v[1] + v[2] * v[2]).sqrt());
            }
        }
    }
    worst
}

/// Peak modulus of the sampled spline.
pub fn max_modulus(field: &SampledField<Quaternion>) -> f64 {
    field
        .samples
        .iter()
        .map(|s| s.norm())
        .fold(0.0f64, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_matches_caption() {
        let orders = family_orders();
        assert_eq!(orders.len(), 5);
        assert_eq!(orders[0], Quaternion::scalar(3.0));
        assert_eq!(orders[1], Quaternion::new(3.0, 0.2, -0.3, 0.4));
        assert_eq!(orders[4], Quaternion::new(3.0, 0.8, -1.2, 1.6));
    }

    #[test]
    fn figure_properties() {
        let data = compute_figure_data().unwrap();
        // m = 0 is the pure real quadratic spline
        for s in &data.family[0].samples {
            assert_eq!(s.ve(), Quaternion::ZERO.ve());
        }
        // amplitudes increase with m
        let peaks: Vec<f64> = data.family.iter().map(max_modulus).collect();
        for w in peaks.windows(2) {
            assert!(w[1] > w[0], "peaks not increasing: {peaks:?}");
        }
        // vector samples stay on the order's vector line
        for f in data.family.iter().chain(data.contrast.iter()) {
            assert!(planarity_residual(f) < 1e-9);
        }
    }
}
