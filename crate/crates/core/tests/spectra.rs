use dirac2d::analytic::{analytic_spectrum, count_nodes, epsilon_sq, lower_component, wavefunctions};
use dirac2d::numsolve::{inner, numeric_spectrum, numeric_wavefunction, quadrature, raw_eigenvalues};
use dirac2d::specfun::laguerre;
use dirac2d::{nonrelativistic_limit, ModelSpec, RadialGrid, Units};

fn exactly_solvable() -> Vec<(ModelSpec, usize)> {
    vec![
        (ModelSpec::oscillator(1.0, 0.0, 0).unwrap(), 4),
        (ModelSpec::oscillator(0.5, 1.0, 2).unwrap(), 4),
        (ModelSpec::coulomb(1.0, 0).unwrap(), 3),
        (ModelSpec::coulomb(2.0, 1).unwrap(), 3),
        (ModelSpec::morse(3.0, 1.0, 3.0).unwrap(), 2),
        (ModelSpec::morse(2.0, 0.5, 2.0).unwrap(), 3),
    ]
}

#[test]
fn analytic_matches_numeric() {
    for (m, top) in exactly_solvable() {
        let a = analytic_spectrum(&m, top).unwrap().epsilon_sq();
        let n = raw_eigenvalues(&m, &m.default_grid(), top + 1).unwrap();
        for (i, (x, y)) in a.iter().zip(&n).enumerate() {
            assert!(
                (x - y).abs() / x.max(1.0) < 1e-3,
                "{} ℓ={} n={i}: {x} vs {y}",
                m.family(),
                m.ell()
            );
        }
    }
}

#[test]
fn numeric_spectrum_rows_are_labelled() {
    let m = ModelSpec::coulomb(1.0, 0).unwrap();
    let s = numeric_spectrum(&m, &m.default_grid(), 3).unwrap();
    assert_eq!(s.levels.iter().map(|l| l.n).collect::<Vec<_>>(), vec![0, 1, 2]);
    assert!(s.levels[0].epsilon_sq.abs() < 2e-3);
}

#[test]
fn laguerre_weighted_orthogonality() {
    // ∫₀^∞ z^α e^{−z} L_m L_n dz = Γ(n+α+1)/n! δ_mn, evaluated with z = r²
    // so the endpoint singularity of z^α becomes smooth.
    let grid = RadialGrid::new(0.0, 200f64.sqrt(), 40001).unwrap();
    for alpha in [0.5, 1.0, 2.5] {
        for m in 0..6 {
            for n in 0..6 {
                let f = grid.sample(|r| {
                    let z = r * r;
                    2.0 * r * z.powf(alpha) * (-z).exp() * laguerre(m, alpha, z) * laguerre(n, alpha, z)
                });
                let got = quadrature(&f, &grid);
                let want = if m == n {
                    let ln = dirac2d::specfun::ln_gamma(n as f64 + alpha + 1.0).unwrap()
                        - dirac2d::specfun::ln_gamma(n as f64 + 1.0).unwrap();
                    ln.exp()
                } else {
                    0.0
                };
                assert!((got - want).abs() < 1e-8 * want.max(1.0), "α={alpha} m={m} n={n}: {got}");
            }
        }
    }
}

#[test]
fn upper_component_matches_the_partner_eigenvector() {
    for (m, top) in exactly_solvable() {
        let grid = m.default_grid();
        for n in 1..=top.min(3) {
            let a = wavefunctions(&m, n, &grid).unwrap();
            let b = numeric_wavefunction(&m, &grid, n).unwrap();
            let s = inner(&a.f_plus, &b.f_plus, &grid).signum();
            let d = a
                .f_plus
                .iter()
                .zip(&b.f_plus)
                .map(|(x, y)| (x - s * y).abs())
                .fold(0.0, f64::max);
            assert!(d < 1e-2, "{} n={n}: {d}", m.family());
            assert_eq!(count_nodes(&a.f_plus), n - 1, "{} n={n}", m.family());
        }
    }
}

#[test]
fn lower_components_are_orthonormal_across_families() {
    for (m, top) in exactly_solvable() {
        let grid = m.default_grid();
        let fs: Vec<Vec<f64>> = (0..=top).map(|n| lower_component(&m, n, &grid).unwrap()).collect();
        for i in 0..fs.len() {
            for j in 0..fs.len() {
                let want = if i == j { 1.0 } else { 0.0 };
                let g = inner(&fs[i], &fs[j], &grid);
                assert!((g - want).abs() < 1e-4, "{} G[{i}][{j}] = {g}", m.family());
            }
        }
    }
}

#[test]
fn opposite_morse_sign_is_not_a_spectrum() {
    // αn(αn − 2b) would give the negative values below; the solver has none
    let m = ModelSpec::morse(3.0, 1.0, 3.0).unwrap();
    let eig = raw_eigenvalues(&m, &m.default_grid(), 3).unwrap();
    for (n, &e) in eig.iter().enumerate().skip(1) {
        let wrong = n as f64 * (n as f64 - 6.0);
        assert!(wrong < 0.0);
        assert!((e - wrong).abs() > 1.0);
        assert!((e - epsilon_sq(&m, n).unwrap()).abs() < 2e-3);
    }
}

#[test]
fn nonrelativistic_limit_bounds_the_binding_energy() {
    // E − mc² = mc²(sqrt(1 + x) − 1) with x = ħ²ε²/(m²c²), which lies
    // between mc²(x/2 − x²/8) and mc² x/2
    let units = Units::new(1.0, 1.0, 10.0, 1.0, 1.0).unwrap();
    let m = ModelSpec::oscillator(1.0, 0.0, 0).unwrap().with_units(units).unwrap();
    for l in analytic_spectrum(&m, 6).unwrap().levels {
        let nr = nonrelativistic_limit(l.epsilon_sq, &units);
        let binding = l.energy_plus - units.rest_energy();
        assert!(binding <= nr + 1e-12);
        assert!((nr - 2.0 * l.n as f64).abs() < 1e-12);
        let x = units.hbar.powi(2) * l.epsilon_sq / (units.mass * units.c).powi(2);
        assert!(nr - binding <= nr * x / 4.0 + 1e-12);
    }
}
