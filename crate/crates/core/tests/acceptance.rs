//! Acceptance suite: ten exact checks, one PASS/FAIL line each.
//!
//! Runs as its own test target without the default harness so the lines
//! are always printed. Exits non-zero if any check fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use borel_orbits::classify::classify_parabolic;
use borel_orbits::degeneration::{closure_set, leq_deg, move_closure, poset, profile};
use borel_orbits::fforacle::census;
use borel_orbits::linalg::{parse_rational, Matrix, Rational};
use borel_orbits::melnikov::{edge_count_matrix, melnikov_leq, n_sigma, rank_matrix};
use borel_orbits::normalform::{
    character, entry_datum, genericity, has_normal_shape, normal_form, semiinvariant, weight, SemiinvariantDatum,
};
use borel_orbits::olp::{count, enumerate, Involution, OrientedLinkPattern};
use borel_orbits::quiver::{
    hom_dim, hom_dim_closed_form, hom_profile, indecomposable, orbit_dimension, rep_of_matrix, rep_of_pattern,
    DimensionVector, IndecomposableCatalog, IndecomposableId,
};
use borel_orbits::sampling;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn orbit_counting() -> Outcome {
    let start = Instant::now();
    let mut seen = Vec::new();
    for (n, q, expected) in [(2, 2, 3usize), (3, 2, 7), (4, 2, 25), (3, 3, 7)] {
        let c = census(n, q).map_err(|e| e.to_string())?;
        let listed = enumerate(n).map_err(|e| e.to_string())?.len();
        ensure!(c.orbit_count == expected, "census({n},{q}) found {} orbits", c.orbit_count);
        ensure!(count(n) == expected.into() && listed == expected, "pattern count at n={n} is not {expected}");
        seen.push(format!("({n},{q})={}", c.orbit_count));
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "census took {elapsed:?}");
    Ok(format!("{} in {:.1?}", seen.join(" "), elapsed))
}

fn hom_table() -> Outcome {
    let n = 5;
    let ids = IndecomposableId::injective_chain(n);
    let reps: Vec<_> = ids.iter().map(|&id| indecomposable(id, n).unwrap()).collect();
    let mut pairs = 0;
    for (a, x) in ids.iter().zip(&reps) {
        for (b, y) in ids.iter().zip(&reps) {
            let computed = hom_dim(x, y).map_err(|e| e.to_string())?;
            let closed = hom_dim_closed_form(*a, *b).map_err(|e| e.to_string())?;
            ensure!(computed == closed, "[{a}, {b}]: computed {computed}, closed form {closed}");
            pairs += 1;
        }
    }
    let mut w_checks = 0;
    for m in 1..=4 {
        let ws: Vec<_> = IndecomposableId::all(m)
            .into_iter()
            .filter(|id| matches!(id, IndecomposableId::W { .. }))
            .collect();
        for p in enumerate(m).unwrap() {
            let rep = rep_of_pattern(&p);
            for &w in &ws {
                let d = hom_dim(&indecomposable(w, m).unwrap(), &rep).unwrap();
                ensure!(d == 0, "[{w}, {p}] = {d}");
                w_checks += 1;
            }
        }
    }
    Ok(format!("{pairs} U/V pairs at n=5, {w_checks} W checks at n<=4"))
}

fn order_vs_hom() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for n in 1..=4 {
        let all = enumerate(n).unwrap();
        let homs: Vec<Vec<usize>> = all.iter().map(|p| hom_profile(p).unwrap()).collect();
        for (p, hp) in all.iter().zip(&homs) {
            for (q, hq) in all.iter().zip(&homs) {
                let by_hom = hp.iter().zip(hq).all(|(a, b)| a <= b);
                let by_count = leq_deg(p, q).unwrap();
                ensure!(by_hom == by_count, "{p} vs {q}: counting says {by_count}, Hom says {by_hom}");
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    Ok(format!("{pairs} pairs for n<=4 in {elapsed:.1?}"))
}

fn move_completeness() -> Outcome {
    let mut checked = 0;
    for n in 1..=5 {
        for p in enumerate(n).unwrap() {
            let by_moves = move_closure(&p).map_err(|e| e.to_string())?;
            let by_order = closure_set(&p).map_err(|e| e.to_string())?;
            ensure!(by_moves == by_order, "{p}: {} by moves, {} by order", by_moves.len(), by_order.len());
            checked += 1;
        }
    }
    Ok(format!("{checked} patterns for n<=5"))
}

fn melnikov_consistency() -> Outcome {
    let mut pairs = 0;
    for n in 0..=5 {
        let all = Involution::all(n).unwrap();
        for s in &all {
            let r = rank_matrix(&n_sigma(s)).map_err(|e| e.to_string())?;
            ensure!(r == edge_count_matrix(s), "rank matrix differs from edge count for {s:?}");
        }
        for sp in &all {
            for s in &all {
                let mel = melnikov_leq(sp, s).unwrap();
                let deg = leq_deg(&OrientedLinkPattern::from_involution(s), &OrientedLinkPattern::from_involution(sp)).unwrap();
                ensure!(mel == deg, "{sp:?} vs {s:?}: rank order {mel}, degeneration {deg}");
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} involution pairs for n<=5"))
}

fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=n)
        .flat_map(|first| {
            compositions(n - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

fn krull_schmidt_oracle() -> Outcome {
    let mut patterns = 0;
    for n in 1..=5 {
        let catalog = IndecomposableCatalog::new(n).map_err(|e| e.to_string())?;
        for p in enumerate(n).unwrap() {
            let d = catalog.decompose(&rep_of_pattern(&p)).map_err(|e| e.to_string())?;
            ensure!(d.to_pattern().as_ref() == Some(&p), "{p} decomposes as {:?}", d.summands());
            ensure!(d.dimension_vector().delta().iter().all(|&x| x == 1), "{p}: bad dimension bookkeeping");
            patterns += 1;
        }
    }
    let mut parabolic = 0;
    for n in 1..=4 {
        for blocks in compositions(n) {
            let k = blocks.len();
            let catalog = IndecomposableCatalog::new(k).map_err(|e| e.to_string())?;
            let dims = DimensionVector::cumulative(&blocks);
            for p in enumerate(n).unwrap() {
                let a: Matrix = p.to_multiplicity_matrix();
                let e = classify_parabolic(&a, &blocks).map_err(|e| e.to_string())?;
                let d = catalog.decompose(&rep_of_matrix(&a, &dims).unwrap()).map_err(|e| e.to_string())?;
                ensure!(!d.has_w_summands(), "{p} with blocks {blocks:?} has W summands");
                for i in 1..=k {
                    ensure!(
                        d.multiplicity(IndecomposableId::V { i }) == e.free_slots(i),
                        "{p}, blocks {blocks:?}: V_{i} multiplicity differs"
                    );
                    for j in 1..=k {
                        ensure!(
                            d.multiplicity(IndecomposableId::U { i, j }) == e.multiplicity(i, j),
                            "{p}, blocks {blocks:?}: U_{i},{j} multiplicity differs"
                        );
                    }
                }
                parabolic += 1;
            }
        }
    }
    Ok(format!("{patterns} patterns for n<=5, {parabolic} parabolic cases for n<=4"))
}

fn random_generic(n: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let a = sampling::nilpotent(n, rng);
        if genericity(&a).unwrap().generic {
            return a;
        }
    }
}

fn conjugate(g: &Matrix, a: &Matrix) -> Matrix {
    &(g * a) * &g.inverse().unwrap().unwrap()
}

fn normal_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 3..=6 {
        for trial in 0..100 {
            let a = random_generic(n, &mut rng);
            let nf = normal_form(&a).map_err(|e| e.to_string())?;
            ensure!(has_normal_shape(&nf.h), "n={n} trial {trial}: H has the wrong shape");
            ensure!(nf.g.is_upper_triangular() && &nf.g * &a == &nf.h * &nf.g, "n={n} trial {trial}: H != gAg^-1");
            let b = sampling::upper_triangular(n, &mut rng);
            let again = normal_form(&conjugate(&b, &a)).map_err(|e| e.to_string())?;
            ensure!(again.h == nf.h, "n={n} trial {trial}: H changed under conjugation");
        }
    }
    Ok("100 trials for each n in 3..=6".into())
}

fn semiinvariants() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for n in 1..=5 {
        for trial in 0..100 {
            let a = sampling::nilpotent(n, &mut rng);
            let g = sampling::upper_triangular(n, &mut rng);
            let p = sampling::datum(n, &mut rng);
            let lhs = semiinvariant(&conjugate(&g, &a), &p).map_err(|e| e.to_string())?;
            let chi = character(&g, &weight(&p, n).unwrap()).unwrap();
            let rhs = chi * semiinvariant(&a, &p).unwrap();
            ensure!(lhs == rhs, "n={n} trial {trial}: {lhs} != {rhs}");
        }
    }
    let mut entries = 0;
    for n in 3..=6 {
        for _ in 0..10 {
            let h = sampling::normal_form_matrix(n, &mut rng);
            for j in 1..=n - 2 {
                for i in j + 2..=n {
                    let d = semiinvariant(&h, &entry_datum(i, j, n).unwrap()).unwrap();
                    ensure!(&d == h.get(i - 1, j - 1), "n={n} ({i},{j}): got {d}");
                    entries += 1;
                }
            }
        }
    }
    Ok(format!("500 character identities, {entries} entry recoveries"))
}

fn example_family() -> Outcome {
    let first = SemiinvariantDatum::new(vec![1], vec![1], vec![vec![vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())]]]).unwrap();
    let second = SemiinvariantDatum::new(vec![2], vec![2], vec![vec![vec![Rational::from_integer(0.into()), Rational::from_integer(1.into())]]]).unwrap();
    let mut points: Vec<(Rational, Rational)> = Vec::new();
    let mut shown = Vec::new();
    for text in ["0", "1", "-1", "2", "7/3"] {
        let l = parse_rational(text).unwrap();
        let mut a: Matrix = Matrix::from_i64_rows(&[[0, 0, 0], [1, 0, 0], [0, 1, 0]]).unwrap();
        a[(2, 0)] = l.clone();
        ensure!(genericity(&a).unwrap().generic, "lambda={text} is not generic");
        ensure!(normal_form(&a).unwrap().h == a, "lambda={text} is not its own normal form");
        let point = (semiinvariant(&a, &first).unwrap(), semiinvariant(&a, &second).unwrap());
        ensure!(point == (l.clone(), Rational::from_integer(1.into())), "lambda={text}: invariant {point:?}");
        for (x, y) in &points {
            ensure!(x * &point.1 != &point.0 * y, "lambda={text} collides with an earlier value");
        }
        shown.push(format!("({text}:1)"));
        points.push(point);
    }
    Ok(format!("invariants {} pairwise distinct", shown.join(" ")))
}

fn order_sanity() -> Outcome {
    for n in 1..=5 {
        let all = enumerate(n).unwrap();
        let profiles: Vec<_> = all.iter().map(profile).collect();
        let size = all.len();
        let le: Vec<Vec<bool>> = (0..size).map(|a| (0..size).map(|b| profiles[a].is_below(&profiles[b])).collect()).collect();
        for a in 0..size {
            ensure!(le[a][a], "not reflexive at {}", all[a]);
            for b in 0..size {
                ensure!(!(a != b && le[a][b] && le[b][a]), "not antisymmetric: {} {}", all[a], all[b]);
                if le[a][b] {
                    for c in 0..size {
                        ensure!(!le[b][c] || le[a][c], "not transitive: {} {} {}", all[a], all[b], all[c]);
                    }
                }
            }
        }
    }
    let mut report = Vec::new();
    for n in 1..=4 {
        let p = poset(n).unwrap();
        let dims: Vec<usize> = p.patterns().iter().map(orbit_dimension).collect();
        for &(u, l) in p.covers() {
            ensure!(dims[u] > dims[l], "n={n}: dim does not drop from {} to {}", p.patterns()[u], p.patterns()[l]);
        }
        let codims = p.cover_codimensions();
        let ones = codims.iter().filter(|&&c| c == 1).count();
        report.push(format!("n={n}: {ones}/{} covers of codim 1", codims.len()));
    }
    Ok(format!("partial order for n<=5; {}", report.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("orbit and pattern counting", orbit_counting),
        ("Hom table against closed forms", hom_table),
        ("degeneration order against Hom oracle", order_vs_hom),
        ("move closure equals orbit closure", move_completeness),
        ("rank matrices and involution order", melnikov_consistency),
        ("Krull-Schmidt and parabolic classification", krull_schmidt_oracle),
        ("generic normal form", normal_forms),
        ("semiinvariants and entry recovery", semiinvariants),
        ("three-dimensional example family", example_family),
        ("order sanity and orbit dimensions", order_sanity),
    ];
    let mut failures = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS [{:>2}] {name}: {detail}", k + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL [{:>2}] {name}: {why}", k + 1);
            }
        }
    }
    println!("acceptance: {} of {} passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
