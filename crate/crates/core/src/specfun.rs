//! Associated Laguerre polynomials and log-gamma.

use crate::error::{Error, Result};

/// L_n^α(z) by the three-term recurrence
/// k·L_k = (2k − 1 + α − z)·L_{k−1} − (k − 1 + α)·L_{k−2}.
pub fn laguerre(n: usize, alpha: f64, z: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - z;
    for k in 2..=n {
        let kf = k as f64;
        let next = ((2.0 * kf - 1.0 + alpha - z) * cur - (kf - 1.0 + alpha) * prev) / kf;
        prev = cur;
        cur = next;
    }
    cur
}

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// ln Γ(x) for x > 0 (Lanczos, g = 7).
pub fn ln_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::Domain(format!("ln_gamma needs x > 0, got {x}")));
    }
    if x < 0.5 {
        // Γ(x) = Γ(x + 1)/x keeps the series argument away from 0
        return Ok(ln_gamma(x + 1.0)? - x.ln());
    }
    let x = x - 1.0;
    let mut a = LANCZOS_COEF[0];
    let t = x + LANCZOS_G + 0.5;
    for (i, c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        a += c / (x + i as f64);
    }
    Ok(0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + a.ln())
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Explicit sum L_n^α(z) = Σ_k (−1)^k C(n+α, n−k) z^k / k!.
    fn laguerre_series(n: usize, alpha: f64, z: f64) -> (f64, f64) {
        let binom = |top: f64, k: usize| -> f64 {
            (0..k).fold(1.0, |acc, j| acc * (top - j as f64) / (j as f64 + 1.0))
        };
        let mut sum = 0.0;
        let mut biggest = 0.0f64;
        let mut zk_over_kfact = 1.0;
        for k in 0..=n {
            if k > 0 {
                zk_over_kfact *= z / k as f64;
            }
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            let term = binom(n as f64 + alpha, n - k) * zk_over_kfact;
            biggest = biggest.max(term.abs());
            sum += sign * term;
        }
        (sum, biggest)
    }

    #[test]
    fn low_degree_forms() {
        assert_eq!(laguerre(0, 3.7, 11.0), 1.0);
        assert_eq!(laguerre(1, 0.5, 2.0), 1.0 + 0.5 - 2.0);
        assert_eq!(laguerre(2, 0.0, 2.0), -1.0);
    }

    #[test]
    fn recurrence_matches_series() {
        // the series cancels badly at large z; compare against the scale of
        // its largest term
        for n in 0..=10 {
            for alpha in [0.0, 0.5, 1.0, 2.5] {
                for step in 0..=100 {
                    let z = 0.5 * step as f64;
                    let a = laguerre(n, alpha, z);
                    let (b, scale) = laguerre_series(n, alpha, z);
                    assert!(
                        (a - b).abs() <= 1e-12 * scale.max(1.0),
                        "n={n} α={alpha} z={z}: {a} vs {b}"
                    );
                }
            }
        }
    }

    #[test]
    fn value_at_origin_is_binomial() {
        for n in 0..8 {
            for alpha in [-0.5, 0.0, 0.5, 3.0] {
                let binom = ((n as f64 + alpha + 1.0).ln_gamma_ok()
                    - (n as f64 + 1.0).ln_gamma_ok()
                    - (alpha + 1.0).ln_gamma_ok())
                .exp();
                assert!((laguerre(n, alpha, 0.0) - binom).abs() < 1e-10 * binom.max(1.0));
            }
        }
    }

    trait LnGammaOk {
        fn ln_gamma_ok(self) -> f64;
    }
    impl LnGammaOk for f64 {
        fn ln_gamma_ok(self) -> f64 {
            ln_gamma(self).unwrap()
        }
    }

    #[test]
    fn ln_gamma_examples() {
        assert!(ln_gamma(1.0).unwrap().abs() < 1e-14);
        assert!(ln_gamma(2.0).unwrap().abs() < 1e-14);
        let half = ln_gamma(0.5).unwrap();
        assert!((half - 0.5 * std::f64::consts::PI.ln()).abs() < 1e-13);
        assert!((half - 0.572_364_942_924_700_1).abs() < 1e-13);
        assert!(((ln_gamma(6.0).unwrap() - 120f64.ln()) / 120f64.ln()).abs() < 1e-10);
        assert!(matches!(ln_gamma(0.0), Err(Error::Domain(_))));
        assert!(ln_gamma(-1.5).is_err());
    }

    #[test]
    fn ln_gamma_matches_factorials() {
        let mut fact = 1.0f64;
        for n in 1..60u32 {
            fact *= n as f64;
            let v = ln_gamma(n as f64 + 1.0).unwrap();
            assert!((v - fact.ln()).abs() < 1e-10 * fact.ln().max(1.0), "n={n}");
        }
    }

    #[test]
    fn ln_gamma_recurrence() {
        for i in 1..200 {
            let x = 0.05 * i as f64;
            let lhs = ln_gamma(x + 1.0).unwrap();
            let rhs = ln_gamma(x).unwrap() + x.ln();
            assert!((lhs - rhs).abs() < 1e-12 * lhs.abs().max(1.0), "x={x}");
        }
    }
}
