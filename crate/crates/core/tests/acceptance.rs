//! End-to-end acceptance checks. Run with `cargo test --test acceptance`;
//! prints one PASS/FAIL line per criterion and exits non-zero on failure.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::fmt::Write as _;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use upsilon_core::algebraic::{
    coprime_pairs, multiplicity_sequence, torus_alexander, upsilon_block, upsilon_from_mults,
};
use upsilon_core::braid::{alexander_of_closure, kn_braid};
use upsilon_core::census::{emit_table, parse_table_csv, run_census, CensusFormat, TableStyle};
use upsilon_core::exactmath::{int, rat};
use upsilon_core::family::{kn_alexander_closed, kn_alexander_torres, kn_upsilon_closed};
use upsilon_core::signature::{
    beta, gamma_eval, greedy_sequence, locate_first_root, psi_at_zeta6, scan_limit, SymmetrizedPoly, BRACKET_WIDTH,
};
use upsilon_core::upsilon::{formal_semigroup, upsilon_of};
use upsilon_core::{report, LaurentPoly, PlFunction, Rational};

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        let ok: bool = $cond;
        if !ok {
            return Err(format!($($msg)+));
        }
    };
}

fn kn(n: i64) -> LaurentPoly {
    kn_alexander_closed(n).unwrap()
}

fn within(start: Instant, limit: Duration) -> Check {
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

fn family_integral_law() -> Check {
    let start = Instant::now();
    for n in 1..=50 {
        let r = report(&kn(n), "K").map_err(|e| e.to_string())?;
        let expected = int(3 * n) + rat(102, 5);
        ensure!(r.minus_three_integral == expected, "n = {n}: {} != {expected}", r.minus_three_integral);
    }
    within(start, Duration::from_secs(5))
}

fn upsilon_closed_form() -> Check {
    let pieces = [(rat(0, 1), rat(1, 2)), (rat(1, 2), rat(4, 5)), (rat(4, 5), rat(1, 1))];
    for n in 1..=50 {
        let u = upsilon_of(&kn(n)).map_err(|e| e.to_string())?;
        ensure!(u == kn_upsilon_closed(n).unwrap(), "n = {n}: pipeline differs from closed form");
        // slopes -(n+8), -(n+4), -(n-1) on the three left pieces, mirrored on the right
        for ((a, b), slope) in pieces.iter().zip([-(n + 8), -(n + 4), -(n - 1)]) {
            let (va, vb) = (u.eval(a).unwrap(), u.eval(b).unwrap());
            ensure!((&vb - &va) / (b - a) == int(slope), "n = {n}: slope on [{a}, {b}]");
            let mid = (a + b) / int(2);
            ensure!(u.eval(&mid) == u.eval(&(int(2) - &mid)), "n = {n}: not symmetric at {mid}");
        }
    }
    Ok(())
}

fn three_routes() -> Check {
    for n in 1..=50 {
        let torres = kn_alexander_torres(n).map_err(|e| e.to_string())?;
        ensure!(torres == kn(n), "n = {n}: Torres route gives {torres}");
    }
    for n in 1..=20 {
        let burau = alexander_of_closure(&kn_braid(n).unwrap()).map_err(|e| e.to_string())?;
        ensure!(burau == kn(n), "n = {n}: Burau route gives {burau}");
    }
    Ok(())
}

fn table_rows() -> Check {
    for (n, name, value) in [(1, "m211", rat(117, 5)), (2, "t09284", rat(132, 5))] {
        let r = report(&kn(n), name).map_err(|e| e.to_string())?;
        ensure!(r.minus_three_integral == value && !r.is_integral, "{name}: {}", r.minus_three_integral);
    }
    Ok(())
}

fn algebraic_cross_validation() -> Check {
    let start = Instant::now();
    for (p, q) in coprime_pairs(12) {
        let ms = multiplicity_sequence(p, q).map_err(|e| e.to_string())?;
        let m = ms.as_slice();
        let d = torus_alexander(p, q).unwrap();
        let r = report(&d, "T").map_err(|e| e.to_string())?;
        ensure!(r.upsilon == upsilon_from_mults(&ms), "T({p},{q}): block sum differs from staircase");
        let sq: i64 = m.iter().map(|x| x * x - 1).sum();
        ensure!(r.minus_three_integral == int(sq) && r.is_integral, "T({p},{q}): -3I = {}", r.minus_three_integral);
        let omega: i64 = m.iter().map(|x| x - 1).sum();
        ensure!(r.omega == int(omega), "T({p},{q}): omega {} != {omega}", r.omega);
        let mu: i64 = m.iter().map(|x| x * (x - 1)).sum();
        ensure!(mu == 2 * r.genus && mu == (p - 1) * (q - 1), "T({p},{q}): milnor {mu}");
        ensure!(omega < p + q, "T({p},{q}): omega {omega} >= p + q");
        ensure!(mu <= m[0] * omega, "T({p},{q}): milnor {mu} > {} * {omega}", m[0]);
    }
    within(start, Duration::from_secs(2))
}

fn semigroup_obstruction() -> Check {
    for (p, q) in coprime_pairs(12) {
        let s = formal_semigroup(&torus_alexander(p, q).unwrap()).map_err(|e| e.to_string())?;
        ensure!(s.closed_under_addition() == (true, None), "T({p},{q}) reported not closed");
        // the semigroup of T(p,q) is generated by p and q
        for k in 0..(p * q) {
            let generated = (0..=k / p).any(|a| (k - a * p) % q == 0);
            ensure!(s.contains(k) == generated, "T({p},{q}): membership of {k}");
        }
    }
    for n in 1..=50 {
        let s = formal_semigroup(&kn(n)).map_err(|e| e.to_string())?;
        ensure!(s.closed_under_addition() == (false, Some((4, 4))), "n = {n}: {:?}", s.closed_under_addition());
    }
    Ok(())
}

fn block_integral() -> Check {
    for m in 2..=10 {
        let i = upsilon_block(m).unwrap().integrate();
        ensure!(i == rat(1 - m * m, 3), "m = {m}: {i}");
    }
    Ok(())
}

fn trefoil_difference() -> Check {
    let tent = PlFunction::new([(int(0), int(0)), (int(1), int(-1)), (int(2), int(0))]).unwrap();
    let trefoil = upsilon_of(&"1 - t + t^2".parse().unwrap()).unwrap();
    ensure!(trefoil == tent, "trefoil Υ is {trefoil}");
    let ups: Vec<PlFunction> = (1..=50).map(|n| upsilon_of(&kn(n)).unwrap()).collect();
    for (i, w) in ups.windows(2).enumerate() {
        ensure!(&w[1] - &w[0] == tent, "n = {}: difference is {}", i + 1, &w[1] - &w[0]);
    }
    Ok(())
}

// ψ_n(e^{iu}) by direct complex evaluation of the integer coefficients.
fn psi_complex(psi: &LaurentPoly, u: f64) -> Complex64 {
    psi.terms().map(|(c, e)| c.to_f64().unwrap() * Complex64::from_polar(1.0, e as f64 * u)).sum()
}

fn signature_substrate() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for n in [11, 20, 50, 100] {
        let psi = SymmetrizedPoly::new(n).unwrap().psi;
        for _ in 0..100 {
            let u = rng.gen_range(1e-6..PI - 1e-6);
            let z = psi_complex(&psi, u);
            let g = gamma_eval(n, u).unwrap();
            ensure!((g - 0.5 * z.re).abs() < 1e-9 && z.im.abs() < 1e-9, "n = {n}, u = {u}: {g} vs {z}");
        }
        let r = locate_first_root(n).map_err(|e| e.to_string())?;
        let (lo, hi) = r.bracket;
        ensure!(0.0 < lo && hi < scan_limit(n) && hi - lo < BRACKET_WIDTH, "n = {n}: bracket {lo}..{hi}");
        let (glo, ghi) = (gamma_eval(n, lo).unwrap(), gamma_eval(n, hi).unwrap());
        ensure!((glo < 0.0) != (ghi < 0.0), "n = {n}: no sign change across bracket");
        ensure!(psi_complex(&psi, r.root).norm() < 1e-8, "n = {n}: e^(iu) is not a root");
        ensure!(beta(n, scan_limit(n)).abs() < 1e-12, "n = {n}: beta at pi/(2n-5)");
    }
    let g = greedy_sequence(5).map_err(|e| e.to_string())?;
    ensure!(g.terms.len() == 5 && g.terms[0] == 11, "greedy: {:?}", g.terms);
    ensure!(g.terms.windows(2).all(|w| w[0] < w[1]), "greedy not increasing: {:?}", g.terms);
    within(start, Duration::from_secs(10))
}

fn zeta6_periodicity() -> Check {
    let zeta = Complex64::from_polar(1.0, PI / 3.0);
    for n in 1..=12 {
        let v = psi_at_zeta6(n).unwrap();
        ensure!(!v.is_zero(), "n = {n}: psi(zeta6) = 0");
        if n > 6 {
            ensure!(v == psi_at_zeta6(n - 6).unwrap(), "n = {n}: not 6-periodic");
        }
        let psi = SymmetrizedPoly::new(n).unwrap().psi;
        let direct: Complex64 = psi.terms().map(|(c, e)| c.to_f64().unwrap() * zeta.powi(e as i32)).sum();
        let (re, im) = v.to_complex();
        ensure!((direct - Complex64::new(re, im)).norm() < 1e-9, "n = {n}: exact {v} vs numeric {direct}");
    }
    Ok(())
}

fn synthetic_census() -> Check {
    let mut csv = String::from("name,polynomial\n");
    for n in 1..=50 {
        let name = match n {
            1 => "m211".to_string(),
            2 => "t09284".to_string(),
            _ => format!("K_{n}"),
        };
        writeln!(csv, "{name},{}", kn(n)).unwrap();
    }
    for (p, q) in coprime_pairs(12) {
        writeln!(csv, "T({p} {q}),{}", torus_alexander(p, q).unwrap()).unwrap();
    }
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let path = dir.path().join("census.csv");
    std::fs::write(&path, csv).map_err(|e| e.to_string())?;
    let r = run_census(&path, CensusFormat::Csv).map_err(|e| e.to_string())?;
    ensure!(r.rejects.is_empty(), "rejects: {:?}", r.rejects);
    ensure!(r.rows.len() == 50 + coprime_pairs(12).len(), "{} rows", r.rows.len());
    ensure!(r.non_integral_count == 50, "non-integral count {}", r.non_integral_count);
    ensure!(r.denominators == BTreeSet::from([BigInt::from(5)]), "denominators {:?}", r.denominators);
    let table = parse_table_csv(&emit_table(&r, TableStyle::Csv)).map_err(|e| e.to_string())?;
    let expected: Vec<(String, Rational)> =
        r.non_integral().map(|row| (row.name.clone(), row.minus_three_integral.clone())).collect();
    ensure!(table == expected, "csv table does not read back");
    ensure!(table[0] == ("m211".into(), rat(117, 5)), "first row {:?}", table[0]);
    ensure!(table[1] == ("t09284".into(), rat(132, 5)), "second row {:?}", table[1]);
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("family integral law -3I = 3n + 102/5, n = 1..50", family_integral_law),
        ("Υ of K_n matches the closed form, n = 1..50", upsilon_closed_form),
        ("closed, Torres and Burau Alexander polynomials agree", three_routes),
        ("m211 and t09284 give 117/5 and 132/5", table_rows),
        ("torus knots: block sum equals staircase Υ, singularity identities", algebraic_cross_validation),
        ("semigroup closure: torus knots closed, K_n fails at (4,4)", semigroup_obstruction),
        ("block integral (1 - m^2)/3, m = 2..10", block_integral),
        ("Υ(K_{n+1}) - Υ(K_n) is the trefoil, n = 1..49", trefoil_difference),
        ("γ_n against ψ_n, root bracketing, greedy sequence", signature_substrate),
        ("ψ_n(ζ6) nonzero and 6-periodic, n = 1..12", zeta6_periodicity),
        ("synthetic census: 50 non-integral, denominators {5}", synthetic_census),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2}  {name}  ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}  {name}  ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
