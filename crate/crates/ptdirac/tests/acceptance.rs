//! Acceptance suite: one test per release criterion, each printing a PASS
//! line (run with `cargo test --test acceptance -- --nocapture` to see them).

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ptdirac::{
    build_adjoint_hamiltonian, build_basis, build_hamiltonian, eigen, fig1_curves,
    fig3_default_grids, fig3_mask, gamma5_exponential, hermitian_counterpart, linear_grid,
    mass_bound, metric_operator, physical_mass, spectrum, verify_intertwining, Branch, GammaBasis,
    GeometricParams, Momentum, RegionLabel, DEFAULT_TOL,
};

const SQRT_2: f64 = std::f64::consts::SQRT_2;
const ALPHA_MAXIMON: f64 = 0.8813735870195429; // artanh(1/sqrt(2))

fn pass(n: u32, what: &str) {
    println!("PASS criterion {n}: {what}");
}

#[test]
fn criterion_01_maximon_point() {
    let grid = linear_grid(0.0, 1.5, 10_000);
    let rows = fig1_curves(&grid).unwrap();
    let best = rows
        .iter()
        .max_by(|a, b| a.nu.total_cmp(&b.nu))
        .unwrap();
    assert!(
        (best.alpha - ALPHA_MAXIMON).abs() <= 1e-4,
        "extremum at alpha = {}, want {ALPHA_MAXIMON}",
        best.alpha
    );
    let exact = fig1_curves(&[ALPHA_MAXIMON]).unwrap()[0];
    assert!((exact.nu - 1.0).abs() <= 1e-9);
    assert!((exact.nu1 - SQRT_2).abs() <= 1e-9);
    assert!((exact.nu2 - 1.0).abs() <= 1e-9);
    pass(1, "fig1 maximum nu = 1 at alpha = artanh(1/sqrt(2)), nu1 = sqrt(2), nu2 = 1");
}

#[test]
fn criterion_02_mass_bound_theorem() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut checked = 0usize;
    while checked < 100_000 {
        let m1: f64 = rng.gen_range(1e-3..10.0);
        let m2: f64 = rng.gen_range(-1.0..1.0) * m1;
        if m2 == 0.0 {
            continue;
        }
        checked += 1;
        let m = physical_mass(m1, m2).re;
        let bound = mass_bound(m1, m2).unwrap();
        assert!(m <= bound * (1.0 + 1e-12), "violation at ({m1}, {m2})");
        // Strict inequality is certifiable in f64 once the distance to the
        // maximon line dominates rounding.
        if (m2.abs() - m1 / SQRT_2).abs() > 1e-6 * m1 {
            assert!(m < bound, "missing strict inequality at ({m1}, {m2})");
        }
    }
    // Equality on the maximon line |m2 - m1/sqrt(2)| <= 1e-9.
    for _ in 0..1_000 {
        let m1: f64 = rng.gen_range(1e-3..10.0);
        let shift = rng.gen_range(-1.0f64..1.0) * 1e-9;
        let m2 = m1 / SQRT_2 + shift * m1;
        let m = physical_mass(m1, m2).re;
        let bound = mass_bound(m1, m2).unwrap();
        assert!(
            (m - bound).abs() <= 1e-12 * bound,
            "equality fails on the maximon line at ({m1}, {m2})"
        );
    }
    pass(2, "m <= m1^2/(2 m2) with zero violations; equality exactly on m2 = m1/sqrt(2)");
}

#[test]
fn criterion_03_reality_phase_boundary() {
    let basis = build_basis(2).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0usize;
    while checked < 10_000 {
        let p: f64 = rng.gen_range(-10.0..10.0);
        let m1: f64 = rng.gen_range(0.0..10.0);
        let m2: f64 = rng.gen_range(-10.0..10.0);
        if (m1 * m1 - m2 * m2).abs() < 1e-8 {
            continue;
        }
        checked += 1;
        let mom = Momentum::new(vec![p]).unwrap();
        let h = build_hamiltonian(&basis, &mom, m1, m2).unwrap();
        let s = spectrum(&h, DEFAULT_TOL).unwrap();
        // Reality of the full dispersion needs p^2 + m1^2 - m2^2 >= 0; at
        // p = 0 this is exactly the mass condition m1^2 >= m2^2.
        let expect_real = p * p + m1 * m1 - m2 * m2 >= 0.0;
        assert_eq!(s.is_real, expect_real, "misclassified at ({p}, {m1}, {m2})");
        if p == 0.0 {
            assert_eq!(s.is_real, m1 * m1 >= m2 * m2);
        }
        // Conjugate closure at every sampled point.
        for &lambda in &s.eigenvalues {
            let conj_dist = s
                .eigenvalues
                .iter()
                .map(|mu| (mu - lambda.conj()).norm())
                .fold(f64::INFINITY, f64::min);
            assert!(conj_dist <= 1e-10, "conjugate closure fails");
        }
    }
    pass(3, "reality flag flips exactly at the discriminant sign over 1e4 samples");
}

fn random_unbroken(rng: &mut ChaCha8Rng) -> (f64, f64) {
    let m1: f64 = rng.gen_range(0.1..5.0);
    let m2: f64 = rng.gen_range(-0.999..0.999) * m1;
    (m1, m2)
}

fn random_momentum(rng: &mut ChaCha8Rng, basis: &GammaBasis) -> Momentum {
    let len = basis.spatial_count();
    Momentum::new((0..len).map(|_| rng.gen_range(-5.0f64..5.0)).collect()).unwrap()
}

#[test]
fn criterion_04_intertwining() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for dim in [2usize, 4] {
        let basis = build_basis(dim).unwrap();
        for _ in 0..1_000 {
            let (m1, m2) = random_unbroken(&mut rng);
            let mom = random_momentum(&mut rng, &basis);
            let metric = metric_operator(&basis, m1, m2).unwrap();
            let h = build_hamiltonian(&basis, &mom, m1, m2).unwrap();
            let h_adj = build_adjoint_hamiltonian(&basis, &mom, m1, m2).unwrap();
            let res = verify_intertwining(h.matrix(), &h_adj, metric.eta()).unwrap();
            assert!(res <= 1e-10, "residual {res} at dim {dim}, ({m1}, {m2})");
        }
    }
    // Regression: the arctan exponent does not intertwine.
    let basis = build_basis(2).unwrap();
    let mom = Momentum::new(vec![0.0]).unwrap();
    let h = build_hamiltonian(&basis, &mom, 2.0, 1.0).unwrap();
    let h_adj = build_adjoint_hamiltonian(&basis, &mom, 2.0, 1.0).unwrap();
    let eta_wrong = gamma5_exponential(&basis, 0.5f64.atan()).unwrap();
    let res = verify_intertwining(h.matrix(), &h_adj, &eta_wrong).unwrap();
    assert!(res > 1e-3, "arctan exponent residual unexpectedly small: {res}");
    pass(4, "eta H eta^-1 = H^+ to 1e-10 at 1e3 random points per dim; arctan variant fails");
}

#[test]
fn criterion_05_hermitian_counterpart() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dim in [2usize, 4] {
        let basis = build_basis(dim).unwrap();
        for _ in 0..1_000 {
            let (m1, m2) = random_unbroken(&mut rng);
            let mom = random_momentum(&mut rng, &basis);
            let counterpart = hermitian_counterpart(&basis, &mom, m1, m2).unwrap();
            assert!(counterpart.hermiticity_residual() <= 1e-10);

            let h = build_hamiltonian(&basis, &mom, m1, m2).unwrap();
            let mut expect = spectrum(&h, DEFAULT_TOL).unwrap().eigenvalues;
            let mut got = eigen::eigenvalues(&counterpart).unwrap();
            expect.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
            got.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
            for (e, g) in expect.iter().zip(&got) {
                assert!((e - g).norm() <= 1e-9, "isospectrality fails at dim {dim}");
            }
        }
    }
    pass(5, "rho H rho^-1 Hermitian to 1e-10 and isospectral to 1e-9 at the same sample");
}

#[test]
fn criterion_06_branch_identities() {
    for branch in [Branch::Ordinary, Branch::Exotic] {
        for nu in linear_grid(0.0, 1.0, 1_000) {
            let p = ptdirac::branch_point(nu, branch).unwrap();
            assert!((p.nu1 * p.nu1 - p.nu2 * p.nu2 - nu * nu).abs() <= 1e-12);
            assert!((p.nu1 * p.nu1 - 2.0 * p.nu2).abs() <= 1e-12);
        }
    }
    let big_m = 3.7;
    for mu in linear_grid(0.0, std::f64::consts::FRAC_PI_2, 1_000) {
        let g = GeometricParams::new(big_m, mu).unwrap();
        let nu = mu.sin();
        let ord = ptdirac::geometric_ordinary(&g).unwrap();
        let bp = ptdirac::branch_point(nu, Branch::Ordinary).unwrap();
        assert!((ord.m1 - big_m * bp.nu1).abs() <= 1e-12 * big_m);
        assert!((ord.m2 - big_m * bp.nu2).abs() <= 1e-12 * big_m);
        let exo = ptdirac::geometric_exotic(&g).unwrap();
        let bp = ptdirac::branch_point(nu, Branch::Exotic).unwrap();
        assert!((exo.m1 - big_m * bp.nu1).abs() <= 1e-12 * big_m);
        assert!((exo.m2 - big_m * bp.nu2).abs() <= 1e-12 * big_m);
    }
    pass(6, "nu identities to 1e-12 on both branches; geometric maps match to 1e-12*M");
}

#[test]
fn criterion_07_exceptional_point() {
    for dim in [2usize, 4] {
        let basis = build_basis(dim).unwrap();
        let rest = Momentum::along_axis(dim, 0.0).unwrap();
        let h = build_hamiltonian(&basis, &rest, 1.0, 1.0).unwrap();
        let s = spectrum(&h, DEFAULT_TOL).unwrap();
        assert!(s.eigenvalues.iter().all(|z| z.norm() <= 1e-12));
        assert!(!s.is_diagonalizable, "dim {dim} should be defective at p = 0");

        let moving = Momentum::along_axis(dim, 1.5).unwrap();
        let h = build_hamiltonian(&basis, &moving, 1.0, 1.0).unwrap();
        let s = spectrum(&h, DEFAULT_TOL).unwrap();
        assert!((s.eigenvalues.first().unwrap().re + 1.5).abs() <= 1e-12);
        assert!((s.eigenvalues.last().unwrap().re - 1.5).abs() <= 1e-12);
        assert!(s.is_real);
        assert!(s.is_diagonalizable, "dim {dim} should diagonalize at p != 0");
    }
    pass(7, "m1 = m2: defective {0,0} at rest, diagonalizable +-|p| in flight, dims 2 and 4");
}

#[test]
fn criterion_08_flat_limit() {
    let m = 1.0f64;
    let mut last_d1 = f64::INFINITY;
    let mut last_m2 = f64::INFINITY;
    for k in [1i32, 2, 3, 4] {
        let m_max = 10f64.powi(k);
        let nu = m / m_max;
        let ord = ptdirac::branch_point(nu, Branch::Ordinary).unwrap();
        let (m1, m2) = (m_max * ord.nu1, m_max * ord.nu2);
        assert!((m1 - m).abs() < last_d1, "|m1 - m| not decreasing at k = {k}");
        assert!(m2 < last_m2, "m2 not decreasing at k = {k}");
        last_d1 = (m1 - m).abs();
        last_m2 = m2;
        let exo = ptdirac::branch_point(nu, Branch::Exotic).unwrap();
        if k == 4 {
            assert!((m2 * 2.0 * m_max / (m * m) - 1.0).abs() <= 0.01);
            assert!((m_max * exo.nu1 / (2.0 * m_max) - 1.0).abs() <= 0.01);
        }
    }
    pass(8, "ordinary branch reaches the Dirac limit at first order; exotic m3 -> 2 m_max");
}

#[test]
fn criterion_09_region_mask_columns() {
    let (nu1_grid, nu2_grid) = fig3_default_grids();
    let mask = fig3_mask(&nu1_grid, &nu2_grid).unwrap();
    let cell = nu2_grid[1] - nu2_grid[0];
    let expected = [
        RegionLabel::BrokenPT,
        RegionLabel::ExoticIII,
        RegionLabel::OrdinaryII,
        RegionLabel::ExoticI,
        RegionLabel::BrokenPT,
    ];
    let mut columns_checked = 0usize;
    for (i, &nu1) in nu1_grid.iter().enumerate() {
        // The outer broken cells need room inside the window [-2, 2], and
        // the narrowest band (width nu1 (1 - 1/sqrt(2))) must span a cell.
        if nu1 + cell >= 2.0 || nu1 < 6.0 * cell {
            continue;
        }
        columns_checked += 1;
        let mut seq = Vec::new();
        let mut changes = Vec::new();
        let mut prev: Option<(RegionLabel, f64)> = None;
        for (j, row) in mask.iter().enumerate() {
            let label = row[i];
            if label.is_boundary() {
                continue;
            }
            if let Some((p, pv)) = prev {
                if p != label {
                    changes.push((nu2_grid[j] + pv) / 2.0);
                }
            }
            if seq.last() != Some(&label) {
                seq.push(label);
            }
            prev = Some((label, nu2_grid[j]));
        }
        assert_eq!(seq, expected, "wrong sequence in column nu1 = {nu1}");
        let crossings = [
            -nu1,
            -nu1 / SQRT_2,
            nu1 / SQRT_2,
            nu1,
        ];
        assert_eq!(changes.len(), 4, "wrong change count in column nu1 = {nu1}");
        for (got, want) in changes.iter().zip(crossings) {
            assert!(
                (got - want).abs() <= cell,
                "crossing at {got}, want {want} within {cell} (nu1 = {nu1})"
            );
        }
    }
    assert!(columns_checked > 350);
    pass(9, "every interior column reads Broken/ExoticIII/OrdinaryII/ExoticI/Broken with crossings in one cell");
}

#[test]
fn criterion_10_dimension_consistency() {
    let basis2 = build_basis(2).unwrap();
    let basis4 = build_basis(4).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..1_000 {
        let m1: f64 = rng.gen_range(0.1..5.0);
        let m2: f64 = rng.gen_range(-1.5..1.5) * m1;
        let dir: [f64; 3] = [rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)];
        let p_mag: f64 = rng.gen_range(0.0..5.0);
        let norm = (dir.iter().map(|x| x * x).sum::<f64>()).sqrt().max(1e-6);
        let p3: Vec<f64> = dir.iter().map(|x| x * p_mag / norm).collect();
        let p_mag = (p3.iter().map(|x| x * x).sum::<f64>()).sqrt();

        let h2 = build_hamiltonian(&basis2, &Momentum::new(vec![p_mag]).unwrap(), m1, m2).unwrap();
        let h4 = build_hamiltonian(&basis4, &Momentum::new(p3).unwrap(), m1, m2).unwrap();
        let s2 = spectrum(&h2, DEFAULT_TOL).unwrap();
        let s4 = spectrum(&h4, DEFAULT_TOL).unwrap();
        let doubled: Vec<Complex64> = s2
            .eigenvalues
            .iter()
            .flat_map(|&z| [z, z])
            .collect();
        let mut doubled = doubled;
        doubled.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        for (a, b) in doubled.iter().zip(&s4.eigenvalues) {
            assert!((a - b).norm() <= 1e-9, "dim mismatch at ({p_mag}, {m1}, {m2})");
        }
    }
    pass(10, "dim-4 spectrum doubles the dim-2 spectrum at matched |p| over 1e3 samples");
}

mod cli {
    use super::pass;
    use std::process::{Command, Output};

    fn run(args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_ptdirac"))
            .args(args)
            .env_remove("PTDIRAC_TOL")
            .output()
            .expect("spawn ptdirac")
    }

    fn code(out: &Output) -> i32 {
        out.status.code().expect("exit code")
    }

    #[test]
    fn criterion_11_cli_determinism_and_exit_codes() {
        let cases: Vec<Vec<&str>> = vec![
            vec!["spectrum", "--m1", "5", "--m2", "4", "--p", "3"],
            vec!["spectrum", "--m1", "1", "--m2", "1", "--p", "0", "--dim", "4"],
            vec!["metric", "--m1", "2", "--m2", "1", "--p", "0"],
            vec!["classify", "--m1", "1", "--m2", "0.3"],
            vec!["fig", "1", "--alpha-max", "3", "--steps", "301"],
            vec!["fig", "2", "--steps", "101"],
            vec!["fig", "3", "--cells", "51"],
            vec!["sweep", "--m1-steps", "1", "--m2-min", "0", "--m2-max", "2", "--m2-steps", "41"],
            vec!["sweep", "--mode", "branch", "--branch", "exotic", "--nu-steps", "11"],
            vec!["fig", "2", "--steps", "11", "--format", "json"],
        ];
        for args in &cases {
            let first = run(args);
            let second = run(args);
            assert_eq!(code(&first), 0, "success case failed: {args:?}");
            assert_eq!(first.stdout, second.stdout, "nondeterministic: {args:?}");
            assert!(!first.stdout.is_empty());
        }

        // Domain failures: exit 1.
        for args in [
            ["spectrum", "--m1", "nan", "--m2", "0"].as_slice(),
            ["metric", "--m1", "1", "--m2", "1"].as_slice(),
            ["classify", "--m1", "inf", "--m2", "0"].as_slice(),
            ["fig", "1", "--alpha-max", "nan"].as_slice(),
            ["sweep", "--p", "nan", "--m2-steps", "3"].as_slice(),
        ] {
            let out = run(args);
            assert_eq!(code(&out), 1, "domain case: {args:?}");
            assert!(!out.stderr.is_empty());
        }

        // Usage errors: exit 2.
        for args in [
            ["spectrum", "--m1", "1"].as_slice(), // missing --m2
            ["spectrum", "--m1", "1", "--m2", "0", "--dim", "3"].as_slice(),
            ["metric", "--m1", "2", "--m2", "1", "--dim", "5"].as_slice(),
            ["classify", "--m1", "-1", "--m2", "0"].as_slice(),
            ["fig", "5"].as_slice(),
            ["sweep", "--m2-min", "2", "--m2-max", "1"].as_slice(),
            ["nonsense"].as_slice(),
        ] {
            let out = run(args);
            assert_eq!(code(&out), 2, "usage case: {args:?}");
            assert!(!out.stderr.is_empty());
        }

        // The spectrum rows carry the documented values.
        let out = run(&["spectrum", "--m1", "5", "--m2", "4", "--p", "3"]);
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("4.242640687"), "missing dispersion value:\n{text}");
        let out = run(&["spectrum", "--m1", "1", "--m2", "1", "--p", "0"]);
        let text = String::from_utf8(out.stdout).unwrap();
        assert!(text.contains("false"), "exceptional point not flagged:\n{text}");

        pass(11, "byte-identical reruns; exit codes 0/1/2 hold across subcommands");
    }
}
