//! Acceptance criteria 1 to 9. Runs as a plain binary so every criterion
//! prints its own line; exits nonzero if any fails.

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use flagtype_core::flags::{induction_sequence, induction_start, is_exposed_short};
use flagtype_core::ftverify::{ingest, verdict, FtError, IntersectionData};
use flagtype_core::picard2::{
    admissible_degrees_up_to, classify_rank2, discriminant_for, im_power_vanishes, ExactComplex,
    Rank2Class, Rank2Type,
};
use flagtype_core::rootsys::{sum_roots_coords, RootSystem};
use flagtype_core::{
    catalog, classify, CartanMatrix, CartanType, Family, HeckeElement, Kind, WeylGroup,
};
use num_integer::Integer;
use num_rational::BigRational;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ty(f: Family, n: usize) -> CartanType {
    CartanType::new(f, n).unwrap()
}

/// The types of criterion 2 with their expected `dim G/B`.
fn dimension_table() -> Vec<(CartanType, usize)> {
    use Family::*;
    vec![
        (ty(A, 1), 1),
        (ty(A, 2), 3),
        (ty(A, 3), 6),
        (ty(A, 4), 10),
        (ty(B, 2), 4),
        (ty(B, 3), 9),
        (ty(B, 4), 16),
        (ty(C, 3), 9),
        (ty(C, 4), 16),
        (ty(D, 4), 12),
        (ty(G, 2), 6),
        (ty(F, 4), 24),
    ]
}

fn criterion_1() -> Outcome {
    let finite_pairs: BTreeSet<(i64, i64)> =
        [(0, 0), (-1, -1), (-1, -2), (-2, -1), (-1, -3), (-3, -1)].into();
    let names = [
        Rank2Type::A1xA1,
        Rank2Type::A2,
        Rank2Type::B2,
        Rank2Type::G2,
    ];
    let mut accepted = 0;
    for a in [0, -1, -2, -3] {
        for b in [0, -1, -2, -3] {
            let raw = IntersectionData(vec![vec![2, a], vec![b, 2]]);
            let finite = match ingest(&raw) {
                Ok(m) => {
                    let finite = classify(&m).kind == Kind::Finite;
                    if finite {
                        let hit = names.iter().any(|t| {
                            let c = t.cartan_matrix();
                            m == c || m == c.transpose()
                        });
                        ensure!(hit, "({a},{b}) is finite but not one of the four types");
                    }
                    finite
                }
                Err(FtError::Invalid(_)) | Err(FtError::ProductOutOfRange(..)) => false,
                Err(e) => return Err(format!("({a},{b}): unexpected {e}")),
            };
            ensure!(
                finite == finite_pairs.contains(&(a, b)),
                "({a},{b}) finite = {finite}"
            );
            accepted += usize::from(finite);
        }
    }
    Ok(format!("{accepted}/16 pairs valid and finite"))
}

fn criterion_2() -> Outcome {
    for (t, expected) in dimension_table() {
        let m = t.cartan_matrix();
        let roots = RootSystem::new(&m).unwrap();
        let (_, longest) = WeylGroup::new(&m).unwrap().longest_element();
        let flag = roots.flag_dimension(&m.nodes()).unwrap();
        ensure!(
            roots.len() == expected && longest == expected && flag == expected,
            "{t}: |Phi+| = {}, longest = {longest}, flag = {flag}, expected {expected}",
            roots.len()
        );
    }
    Ok(format!(
        "{} types agree three ways",
        dimension_table().len()
    ))
}

/// Every word of length up to `max_len` over `1..=n`.
fn all_words(n: usize, max_len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w: &Vec<usize>| {
                (1..=n).map(move |i| {
                    let mut v = w.clone();
                    v.push(i);
                    v
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn criterion_3() -> Outcome {
    use Family::*;
    let cases = [
        (ty(A, 2), 6),
        (ty(B, 2), 8),
        (ty(G, 2), 12),
        (ty(A, 3), 24),
        (ty(B, 3), 48),
    ];
    let mut checked = 0;
    for (t, order) in cases {
        let m = t.cartan_matrix();
        let g = WeylGroup::new(&m).unwrap();
        let group = g.enumerate_group();
        let monoid = g.enumerate_monoid();
        ensure!(group.len() == order, "{t}: |W| = {}", group.len());
        ensure!(monoid.len() == order, "{t}: |W'| = {}", monoid.len());

        // brute-force oracle: group-reduced words sorted by element
        let top = g.roots().len();
        let mut by_element: BTreeMap<_, BTreeSet<Vec<usize>>> = BTreeMap::new();
        for w in all_words(m.rank(), top) {
            let x = g.element_of_word(&w).unwrap();
            if g.length(&x) == w.len() {
                ensure!(
                    g.demazure_product(&w).unwrap() == HeckeElement(x.clone()),
                    "{t}: Demazure product of reduced {w:?} differs from the group product"
                );
                by_element.entry(x).or_default().insert(w);
            }
        }
        ensure!(
            by_element.len() == order,
            "{t}: oracle reached {} elements",
            by_element.len()
        );
        for h in monoid.keys() {
            let words = g.reduced_words(h).unwrap();
            ensure!(
                Some(&words) == by_element.get(h.carrier()),
                "{t}: reduced words differ for an element of length {}",
                g.length(h.carrier())
            );
            checked += 1;
        }
    }
    Ok(format!(
        "{checked} monoid elements match their group elements; orders 6, 8, 12, 24, 48"
    ))
}

fn criterion_4() -> Outcome {
    for (t, _) in dimension_table() {
        let m = t.cartan_matrix();
        let rs = RootSystem::new(&m).unwrap();
        let solved = rs.anticanonical_coefficients().unwrap();
        let summed = sum_roots_coords(m.rank(), rs.positive_roots());
        let summed_q: Vec<BigRational> = summed
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        ensure!(
            solved == summed_q,
            "{t}: solve {solved:?} vs sum {summed:?}"
        );
        for j in 0..m.rank() {
            let pairing: i64 = (0..m.rank()).map(|i| summed[i] * m.entry(i, j)).sum();
            ensure!(pairing == 2, "{t}: v^T M has entry {pairing} at {}", j + 1);
        }
    }
    for (f, expected) in [
        (Family::A, [2, 2]),
        (Family::B, [4, 3]),
        (Family::G, [10, 6]),
    ] {
        let m = catalog(f, 2).unwrap();
        let rs = RootSystem::new(&m).unwrap();
        let got = sum_roots_coords(2, rs.positive_roots());
        ensure!(got == expected, "{f}2: {got:?}");
    }
    Ok("solve = root sum on all criterion-2 types; A2 (2,2), B2 (4,3), G2 (10,6)".into())
}

fn criterion_5() -> Outcome {
    for bound in 6..=200 {
        let d: Vec<u32> = admissible_degrees_up_to(bound).into_iter().collect();
        ensure!(d == [2, 3, 5], "scan bound {bound}: {d:?}");
    }
    for (nu1, nu2, expected) in [
        (0, 0, Rank2Type::A1xA1),
        (0, 3, Rank2Type::A1xA1),
        (1, 1, Rank2Type::A2),
        (1, 2, Rank2Type::B2),
        (2, 1, Rank2Type::B2),
        (1, 3, Rank2Type::G2),
        (3, 1, Rank2Type::G2),
    ] {
        ensure!(
            classify_rank2(nu1, nu2) == Rank2Class::Type(expected),
            "classify_rank2({nu1},{nu2})"
        );
    }
    let mut checks = 0;
    for m in [2, 3, 5] {
        for nu in 1..=5 {
            for mu in 1..=5 {
                let d = discriminant_for(m, nu, mu).map_err(|e| e.to_string())?;
                let z = ExactComplex::new(BigRational::new(nu.into(), mu.into()), -d)
                    .ok_or("positive discriminant")?;
                ensure!(im_power_vanishes(&z, m + 1), "m={m} nu={nu} mu={mu}");
                checks += 1;
            }
        }
    }
    Ok(format!(
        "degrees {{2,3,5}} for bounds 6..=200; {checks} discriminants pass"
    ))
}

fn criterion_6() -> Outcome {
    for n in 3..=8 {
        let seq = induction_sequence(Family::A, n).map_err(|e| e.to_string())?;
        let closed: Vec<(Vec<usize>, usize)> = (1..n)
            .map(|k| {
                let mut i: Vec<usize> = (1..=k).collect();
                i.push(n);
                (i, k)
            })
            .collect();
        let got: Vec<(Vec<usize>, usize)> =
            seq.iter().map(|s| (s.marked.clone(), s.node)).collect();
        ensure!(got == closed, "A{n}: {got:?}");
    }
    use Family::*;
    let others = [
        ty(B, 3),
        ty(B, 4),
        ty(B, 5),
        ty(C, 3),
        ty(C, 4),
        ty(C, 5),
        ty(D, 4),
        ty(D, 5),
        ty(D, 6),
        ty(F, 4),
    ];
    for t in others {
        let m = t.cartan_matrix();
        let seq = induction_sequence(t.family, t.rank).map_err(|e| format!("{t}: {e}"))?;
        ensure!(seq[0].marked == induction_start(t), "{t}: wrong start");
        for pair in seq.windows(2) {
            let (cur, next) = (&pair[0], &pair[1]);
            ensure!(
                !is_exposed_short(&m, &cur.marked, cur.node).unwrap(),
                "{t}: {} exposed short in {:?}",
                cur.node,
                cur.marked
            );
            let mut grown: BTreeSet<usize> = cur.marked.iter().copied().collect();
            grown.extend(m.adjacent(cur.node));
            let grown: Vec<usize> = grown.into_iter().collect();
            ensure!(
                grown == next.marked,
                "{t}: I' = {grown:?} but next I = {:?}",
                next.marked
            );
            ensure!(
                next.marked.len() == cur.marked.len() + 1 && next.marked.len() >= 3,
                "{t}: size condition fails at {:?}",
                next.marked
            );
            ensure!(
                !cur.marked.contains(&next.node),
                "{t}: next node is not new"
            );
        }
        ensure!(
            seq.last().unwrap().marked == m.nodes(),
            "{t}: does not end at D"
        );
    }
    Ok(format!(
        "A3..A8 closed form; {} other types valid",
        others.len()
    ))
}

/// Symmetrizing weights `d` with `M[i][j] d_j = M[j][i] d_i`.
fn weights(m: &CartanMatrix) -> Vec<BigRational> {
    let n = m.rank();
    let mut d: Vec<Option<BigRational>> = vec![None; n];
    d[0] = Some(BigRational::from_integer(1.into()));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if j != i && m.entry(i, j) != 0 && d[j].is_none() {
                let di = d[i].clone().unwrap();
                d[j] = Some(di * BigRational::new(m.entry(j, i).into(), m.entry(i, j).into()));
                stack.push(j);
            }
        }
    }
    d.into_iter().map(|x| x.expect("connected")).collect()
}

/// Adds the node `-theta` to a connected finite type; node 0 is new.
fn extended(m: &CartanMatrix) -> CartanMatrix {
    let n = m.rank();
    let rs = RootSystem::new(m).unwrap();
    let theta = rs.positive_roots().last().unwrap().coords().to_vec();
    let d = weights(m);
    let half = BigRational::new(1.into(), 2.into());
    // B(alpha_i, alpha_j) = M[i][j] d_j / 2
    let form = |i: usize, j: usize| BigRational::from_integer(m.entry(i, j).into()) * &d[j] * &half;
    let with_theta = |j: usize| -> BigRational {
        (0..n)
            .map(|i| BigRational::from_integer(theta[i].into()) * form(j, i))
            .sum()
    };
    let theta_theta: BigRational = (0..n)
        .map(|i| BigRational::from_integer(theta[i].into()) * with_theta(i))
        .sum();
    let mut rows = vec![vec![0i64; n + 1]; n + 1];
    rows[0][0] = 2;
    for j in 0..n {
        rows[0][j + 1] = -(0..n).map(|i| theta[i] * m.entry(i, j)).sum::<i64>();
        let x = -BigRational::from_integer(2.into()) * with_theta(j) / &theta_theta;
        assert!(x.is_integer(), "non-integral pairing");
        rows[j + 1][0] = i64::try_from(x.to_integer()).unwrap();
        for k in 0..n {
            rows[j + 1][k + 1] = m.entry(j, k);
        }
    }
    CartanMatrix::new(&rows).unwrap()
}

fn cycle(n: usize) -> CartanMatrix {
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i, j) {
                    _ if i == j => 2,
                    _ if (i + 1) % n == j || (j + 1) % n == i => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    CartanMatrix::new(&rows).unwrap()
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed_a77e);
    let bases: Vec<CartanType> = (2..=5).flat_map(CartanType::of_rank).collect();
    let mut seen = BTreeSet::new();
    let mut attempts = 0;
    while seen.len() < 20 {
        attempts += 1;
        ensure!(
            attempts < 10_000,
            "generator stalled at {} matrices",
            seen.len()
        );
        let base = if rng.gen_bool(0.25) {
            cycle(rng.gen_range(3..=6))
        } else {
            extended(&bases.choose(&mut rng).unwrap().cartan_matrix())
        };
        let base = if rng.gen_bool(0.5) {
            base.transpose()
        } else {
            base
        };
        let mut perm: Vec<usize> = (0..base.rank()).collect();
        perm.shuffle(&mut rng);
        let m = base.permuted(&perm);
        if !(3..=6).contains(&m.rank()) || classify(&m).kind != Kind::Affine {
            continue;
        }
        if !seen.insert(m.clone()) {
            continue;
        }
        let v = verdict(&m)
            .affine_witness
            .ok_or_else(|| format!("no witness for {m}"))?;
        ensure!(v.iter().all(|&x| x > 0), "{m}: witness {v:?} not positive");
        let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        ensure!(g == 1, "{m}: witness {v:?} not coprime");
        for i in 0..m.rank() {
            let row: i64 = (0..m.rank()).map(|j| m.entry(i, j) * v[j]).sum();
            ensure!(row == 0, "{m}: (M v)_{} = {row}", i + 1);
        }
    }
    Ok(format!(
        "20 affine matrices from {attempts} draws, witnesses verified"
    ))
}

fn criterion_8() -> Outcome {
    for n in 1..=8 {
        let rs = RootSystem::new(&catalog(Family::A, n).unwrap()).unwrap();
        let full: Vec<usize> = (1..=n).collect();
        ensure!(
            rs.flag_dimension(&full).unwrap() == n * (n + 1) / 2,
            "A{n} full marking"
        );
        if n >= 2 {
            let d = rs.flag_dimension(&[1, n]).unwrap();
            ensure!(d == 2 * n - 1, "A{n} {{1,n}}: {d}");
        }
    }
    Ok("A_n: {1,n} gives 2n-1 (n = 2..8), D gives n(n+1)/2".into())
}

fn criterion_9() -> Outcome {
    let mut steps_total = 0;
    for (t, _) in dimension_table() {
        let rs = RootSystem::new(&t.cartan_matrix()).unwrap();
        let steps = rs.build_filtration().map_err(|e| format!("{t}: {e}"))?;
        let roots = rs.positive_roots();
        for s in &steps {
            ensure!(s.j < s.k, "{t}: step {s:?} does not look back");
            let mut sum = roots[s.j - 1].coords().to_vec();
            sum[s.l - 1] += 1;
            ensure!(
                sum == roots[s.k - 1].coords(),
                "{t}: step {s:?} is not beta_j + alpha_l"
            );
        }
        ensure!(
            steps.len() == rs.len() - rs.rank(),
            "{t}: {} steps",
            steps.len()
        );
        for k in 1..=roots.len() {
            ensure!(
                rs.is_admissible(&roots[..k]).unwrap(),
                "{t}: prefix {k} not admissible"
            );
        }
        steps_total += steps.len();
    }
    Ok(format!("{steps_total} steps, all prefixes admissible"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            1,
            "rank-2 FT classification sweep",
            criterion_1,
            Duration::from_secs(1),
        ),
        (
            2,
            "three-way dimension agreement",
            criterion_2,
            Duration::from_secs(30),
        ),
        (
            3,
            "reduced-word bijection, rank <= 3",
            criterion_3,
            Duration::from_secs(10),
        ),
        (
            4,
            "anticanonical coefficient cross-check",
            criterion_4,
            Duration::MAX,
        ),
        (
            5,
            "Picard-rank-2 numeric core",
            criterion_5,
            Duration::from_secs(1),
        ),
        (
            6,
            "induction sequences",
            criterion_6,
            Duration::from_secs(5),
        ),
        (
            7,
            "affine witness contract",
            criterion_7,
            Duration::from_secs(5),
        ),
        (8, "flag dimension spot values", criterion_8, Duration::MAX),
        (
            9,
            "filtration construction",
            criterion_9,
            Duration::from_secs(5),
        ),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (n, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                Err(format!("panicked: {msg}"))
            })
            .and_then(|detail| {
                let took = start.elapsed();
                if took > limit {
                    Err(format!("took {took:?}, limit {limit:?}"))
                } else {
                    Ok(detail)
                }
            });
        let took = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {n} PASS  {name}: {detail} [{took:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n} FAIL  {name}: {why} [{took:.2?}]");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: 9/9 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} of 9 criteria fail");
        ExitCode::FAILURE
    }
}
