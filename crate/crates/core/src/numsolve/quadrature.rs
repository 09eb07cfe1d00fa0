//! Composite Simpson quadrature on the uniform radial grid.

use crate::grid::RadialGrid;

/// Composite Simpson rule for samples spaced by `h`. For an even number of
/// samples the last interval is closed with the trapezoid rule.
pub fn simpson(f: &[f64], h: f64) -> f64 {
    let n = f.len();
    match n {
        0 | 1 => return 0.0,
        2 => return 0.5 * h * (f[0] + f[1]),
        _ => {}
    }
    let last = if n % 2 == 1 { n - 1 } else { n - 2 };
    let mut odd = 0.0;
    let mut even = 0.0;
    for (i, v) in f.iter().enumerate().take(last).skip(1) {
        if i % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    let mut sum = h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[last]);
    if last != n - 1 {
        sum += 0.5 * h * (f[n - 2] + f[n - 1]);
    }
    sum
}

/// ∫ f dr over the whole grid.
pub fn quadrature(f: &[f64], grid: &RadialGrid) -> f64 {
    debug_assert_eq!(f.len(), grid.n_points());
    simpson(f, grid.h())
}

/// Running integral F(r_i) = ∫_{r_0}^{r_i} f dr, starting at 0.
///
/// Even indices are exact composite-Simpson partial sums; odd indices add a
/// three-point half-panel rule on top of the previous even point.
pub fn cumulative_simpson(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    let mut out = vec![0.0; n];
    if n < 2 {
        return out;
    }
    if n == 2 {
        out[1] = 0.5 * h * (f[0] + f[1]);
        return out;
    }
    let mut i = 2;
    while i < n {
        out[i - 1] = out[i - 2] + h / 12.0 * (5.0 * f[i - 2] + 8.0 * f[i - 1] - f[i]);
        out[i] = out[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
        i += 2;
    }
    if n.is_multiple_of(2) {
        // last interval: half-panel rule anchored on the final three samples
        out[n - 1] = out[n - 2] + h / 12.0 * (5.0 * f[n - 1] + 8.0 * f[n - 2] - f[n - 3]);
    }
    out
}

/// ⟨f, g⟩ = ∫ f g dr.
pub fn inner(f: &[f64], g: &[f64], grid: &RadialGrid) -> f64 {
    let prod: Vec<f64> = f.iter().zip(g).map(|(a, b)| a * b).collect();
    quadrature(&prod, grid)
}

/// L² norm under the grid quadrature.
pub fn norm(f: &[f64], grid: &RadialGrid) -> f64 {
    inner(f, f, grid).max(0.0).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_integrates_exactly() {
        let g = RadialGrid::new(0.0, 1.0, 11).unwrap();
        assert!((quadrature(&[1.0; 11], &g) - 1.0).abs() < 1e-15);
        // even sample count goes through the trapezoid tail
        let g = RadialGrid::new(0.0, 1.0, 10).unwrap();
        assert!((quadrature(&[1.0; 10], &g) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn exponential_on_long_interval() {
        let g = RadialGrid::new(0.0, 40.0, 4001).unwrap();
        let f = g.sample(|r| (-r).exp());
        assert!((quadrature(&f, &g) - 1.0).abs() < 1e-8);
    }

    #[test]
    fn fourth_order_convergence() {
        // ∫_0^3 e^{-r} sin r dr, closed form
        let exact = 0.5 * (1.0 - (-3.0f64).exp() * (3.0f64.sin() + 3.0f64.cos()));
        let err = |n: usize| {
            let g = RadialGrid::new(0.0, 3.0, n).unwrap();
            (quadrature(&g.sample(|r| (-r).exp() * r.sin()), &g) - exact).abs()
        };
        let ratio = err(41) / err(81);
        assert!((ratio - 16.0).abs() < 1.0, "ratio {ratio}");
    }

    #[test]
    fn cumulative_matches_antiderivative() {
        let g = RadialGrid::new(0.5, 3.0, 250).unwrap();
        let f = g.sample(|r| r * r + r.cos());
        let cum = cumulative_simpson(&f, g.h());
        for (i, c) in cum.iter().enumerate() {
            let r = g.r(i);
            let exact = (r.powi(3) - 0.125) / 3.0 + r.sin() - 0.5f64.sin();
            assert!((c - exact).abs() < 1e-9, "i={i} {c} vs {exact}");
        }
        assert_eq!(cum[0], 0.0);
    }

    #[test]
    fn cumulative_endpoint_agrees_with_simpson() {
        let g = RadialGrid::new(0.0, 2.0, 201).unwrap();
        let f = g.sample(|r| (-r * r).exp());
        let cum = cumulative_simpson(&f, g.h());
        assert!((cum[200] - quadrature(&f, &g)).abs() < 1e-15);
    }
}
