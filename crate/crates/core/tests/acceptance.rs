//! Exit criteria. Each check prints one PASS/FAIL line; the test fails if
//! any check fails. All comparisons are exact.

use std::time::Instant;

use rand::{Rng, SeedableRng};

use wlp::cli::check_cell;
use wlp::graded_algebra::socle_degree;
use wlp::{
    decide_wlp_criterion, delta_star_han, diagonal_condition_scan, exceptional_primes, gap_oracle, hilbert_function,
    is_prime, multiplication_matrix, primes_up_to, taxicab, wlp_bruteforce, Error, PrimeModulus, Rational,
};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn fp(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

fn golden_exceptional_primes() -> Check {
    let table: &[(u64, &[u64])] = &[
        (2, &[2]),
        (4, &[2, 5]),
        (6, &[2, 5, 7]),
        (8, &[2, 3, 7, 11]),
        (10, &[2, 3, 11, 13]),
        (12, &[2, 11, 13, 17]),
        (14, &[2, 5, 11, 13, 17, 19]),
        (20, &[2, 3, 5, 7, 17, 19, 23, 29]),
        (1, &[]),
        (3, &[3]),
        (5, &[5]),
        (7, &[2, 3, 7]),
        (9, &[2, 3, 11]),
        (31, &[2, 3, 5, 11, 29, 31, 37, 41, 43]),
    ];
    for &(d, expected) in table {
        let got = exceptional_primes(d).map_err(|e| e.to_string())?;
        if got != expected {
            return Err(format!("d={d}: got {got:?}, expected {expected:?}"));
        }
    }
    Ok(format!("{} tables match", table.len()))
}

fn characteristic_two_law() -> Check {
    let closed: Vec<u64> = (1..=14u32).map(|t| ((1u64 << t) + 1) / 3).collect();
    for d in 1..=4096u64 {
        let holds = decide_wlp_criterion(d, fp(2)).map_err(|e| e.to_string())?.holds;
        if holds != closed.contains(&d) {
            return Err(format!("d={d}: criterion says {holds}"));
        }
        if d % 2 == 0 && holds {
            return Err(format!("even d={d} holds in characteristic 2"));
        }
    }
    Ok("d <= 4096".into())
}

fn three_way_equivalence() -> Check {
    let mut cells = 0;
    let mut with_oracle = 0;
    for d in 1..=25u64 {
        for p in primes_up_to(41) {
            let cell = check_cell(d, fp(p)).map_err(|e| e.to_string())?;
            cells += 1;
            with_oracle += usize::from(cell.oracle.is_some());
            if !cell.agrees() {
                return Err(format!("d={d} p={p}: {cell:?}"));
            }
        }
    }
    Ok(format!("{cells} cells agree ({with_oracle} with non-degenerate oracle)"))
}

fn han_matches_oracle() -> Check {
    let mut compared = 0;
    for p in [2u64, 3, 5, 7, 11, 13] {
        for d1 in 1..=16u64 {
            for d2 in d1..=16 {
                for d3 in d2..(d1 + d2).min(17) {
                    let han = delta_star_han(d1, d2, d3, fp(p)).map_err(|e| e.to_string())?;
                    let oracle = match gap_oracle(d1, d2, d3, fp(p)) {
                        Ok(c) => c,
                        Err(Error::Degenerate { .. }) => continue,
                        Err(e) => return Err(e.to_string()),
                    };
                    let sum = d1 + d2 + d3;
                    if oracle.delta != han.delta_star
                        || oracle.delta % 2 != sum % 2
                        || han.delta_star % 2 != sum % 2
                        || oracle.alpha + oracle.beta != sum
                    {
                        return Err(format!("({d1},{d2},{d3}) p={p}: oracle {oracle:?}, han {han:?}"));
                    }
                    compared += 1;
                }
            }
        }
    }
    Ok(format!("{compared} non-degenerate triples agree"))
}

fn divisor_obstruction() -> Check {
    let mut pairs = 0;
    for d in (1..=999u64).step_by(2) {
        for p in primes_up_to(d).into_iter().filter(|p| d % p == 0) {
            if !wlp::divisor_obstruction(d, fp(p)).map_err(|e| e.to_string())? {
                return Err(format!("obstruction not flagged for d={d} p={p}"));
            }
            if decide_wlp_criterion(d, fp(p)).map_err(|e| e.to_string())?.holds {
                return Err(format!("d={d} p={p} holds"));
            }
            pairs += 1;
        }
    }
    Ok(format!("{pairs} (d, p) pairs fail"))
}

fn large_characteristic_holds() -> Check {
    let mut cells = 0;
    for d in 1..=25u64 {
        for p in primes_up_to(101).into_iter().filter(|&p| 2 * p > 3 * d) {
            if !wlp_bruteforce(d, fp(p)).map_err(|e| e.to_string())?.holds {
                return Err(format!("d={d} p={p} fails by brute force"));
            }
            cells += 1;
        }
    }
    Ok(format!("{cells} cells hold"))
}

fn hilbert_properties() -> Check {
    for d in 1..=60u64 {
        let h = hilbert_function(d).map_err(|e| e.to_string())?;
        let s = socle_degree(d);
        if (0..=s).any(|m| h.at(m) != h.at(s - m)) {
            return Err(format!("asymmetric Hilbert function at d={d}"));
        }
        if h.total() != d * d * d {
            return Err(format!("sum h != d^3 at d={d}"));
        }
    }
    Ok("d <= 60".into())
}

fn rank_duality() -> Check {
    for d in 2..=12u64 {
        for p in primes_up_to(13) {
            for m in 0..=3 * d - 4 {
                let rank = |m| multiplication_matrix(d, fp(p), m).map(|x| x.rank());
                let (a, b) = (rank(m).map_err(|e| e.to_string())?, rank(3 * d - 4 - m).map_err(|e| e.to_string())?);
                if a != b {
                    return Err(format!("d={d} p={p} m={m}: {a} vs {b}"));
                }
            }
        }
    }
    Ok("d <= 12, p <= 13".into())
}

// Both forms by cross-multiplication, independent of the library's windows.
fn plain_holds(d: u64, q: u64, k: u64) -> bool {
    // 3d/(6k+2) > q > 3d/(6k+4)
    let (d, q, k) = (d as i128, q as i128, k as i128);
    3 * d > q * (6 * k + 2) && q * (6 * k + 4) > 3 * d
}

fn strict_holds(d: u64, q: u64, k: u64) -> bool {
    // (3d-1)/(6k+2) > q > (3d+1)/(6k+4)
    let (d, q, k) = (d as i128, q as i128, k as i128);
    3 * d - 1 > q * (6 * k + 2) && q * (6 * k + 4) > 3 * d + 1
}

fn maximal_n_lemma() -> Check {
    let primes = primes_up_to(100);
    let mut rng = rand::rngs::StdRng::seed_from_u64(0x5eed);
    let mut premises = 0;
    for _ in 0..10_000 {
        let d = rng.gen_range(1..=500u64);
        let p = primes[rng.gen_range(0..primes.len())];
        // every (n, k) with q = p^n <= 3d/2 and 6kq <= 3d
        let mut levels = Vec::new();
        let mut q = 1u64;
        let mut n = 0u32;
        while 2 * q <= 3 * d {
            levels.push((n, q));
            q *= p;
            n += 1;
        }
        for &(n1, q1) in &levels {
            for k1 in 0..=d {
                if !strict_holds(d, q1, k1) {
                    continue;
                }
                for &(n2, q2) in levels.iter().filter(|&&(n2, _)| n2 > n1) {
                    for k2 in 0..=d {
                        if plain_holds(d, q2, k2) {
                            premises += 1;
                            if !strict_holds(d, q2, k2) {
                                return Err(format!("d={d} p={p} n'={n1} k'={k1} n={n2} k={k2}"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(format!("10000 samples, {premises} premises, 0 violations"))
}

fn distance_lemma() -> Check {
    let third = Rational::new(1, 3);
    let one = Rational::from_integer(1);
    for d in 1..=200u64 {
        for p in primes_up_to(311) {
            let scan = diagonal_condition_scan(d, fp(p)).map_err(|e| e.to_string())?.is_some();
            let mut cond2 = false;
            let mut cond3 = false;
            let mut q = 1u64;
            while q <= 3 * d {
                let x = Rational::new(d as i128, q as i128);
                let nearest = x.to_integer();
                for u in [nearest - 1, nearest, nearest + 1, nearest + 2] {
                    if u < 1 || u % 2 == 0 {
                        continue;
                    }
                    let u = Rational::from_integer(u);
                    let gap = if x >= u { x - u } else { u - x };
                    cond2 |= gap < third;
                    cond3 |= taxicab(&[x, x, x], &[u, u, u]) < one;
                }
                q *= p;
            }
            if scan != cond2 || cond2 != cond3 {
                return Err(format!("d={d} p={p}: (1)={scan} (2)={cond2} (3)={cond3}"));
            }
        }
    }
    Ok("d <= 200, p <= 311".into())
}

#[test]
fn acceptance_criteria() {
    let criteria: Vec<Criterion> = vec![
        ("1 golden exceptional-prime tables", golden_exceptional_primes),
        ("2 characteristic-2 law", characteristic_two_law),
        ("3 three-way equivalence d<=25 p<=41", three_way_equivalence),
        ("4 Han vs oracle on general triples", han_matches_oracle),
        ("5 divisor obstruction, odd d<=999", divisor_obstruction),
        ("6 brute force holds for p>3d/2", large_characteristic_holds),
        ("7a Hilbert symmetry and total", hilbert_properties),
        ("7b multiplication rank duality", rank_duality),
        ("7c maximal-n lemma, randomized", maximal_n_lemma),
        ("7d distance lemma equivalence", distance_lemma),
    ];
    assert!(is_prime(311));
    let mut failures = 0;
    for (name, check) in criteria {
        let started = Instant::now();
        let outcome = check();
        let secs = started.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} [{secs:.2}s]"),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {name}: {detail} [{secs:.2}s]");
            }
        }
    }
    assert_eq!(failures, 0, "{failures} acceptance criteria failed");
}
