mod common;

use std::process::ExitCode;
use std::time::Instant;

use arrgraph::actions::{
    action_kernel, conjecture_candidate_group, induce_action, quotient_action, verify_block_system,
    BlockSystem,
};
use arrgraph::arrangement::candidate_aut_generators;
use arrgraph::aut::{automorphism_group, canonical_certificate, AutResult, DEFAULT_NODE_BUDGET};
use arrgraph::connection::ConnectionKind;
use arrgraph::graph::Graph;
use arrgraph::indsets::{is_independent, is_maximal_independent, max_independent_sets, MisMode};
use arrgraph::schreier::{StabilizerChain, DEFAULT_ENUMERATION_THRESHOLD};
use arrgraph::tuple::all_tuples;
use common::*;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn aut(g: &Graph) -> Result<AutResult, String> {
    automorphism_group(g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())
}

fn below_n_instances() -> Vec<(usize, usize)> {
    let mut out: Vec<_> = (3..=5).flat_map(|n| (1..n).map(move |k| (n, k))).collect();
    out.push((6, 2));
    out
}

/// `Delta_ij` built straight from the tuple list, rows `i`, columns `j`.
fn deltas(n: usize, k: usize) -> Vec<Vec<Vec<usize>>> {
    let tuples = all_tuples(n, k).unwrap();
    (0..n)
        .map(|i| {
            (0..k)
                .map(|j| {
                    tuples
                        .iter()
                        .filter(|t| t.get(j) == i && (0..k).filter(|&c| t.get(c) == i).count() == 1)
                        .map(|t| t.rank())
                        .collect()
                })
                .collect()
        })
        .collect()
}

fn flat(d: &[Vec<Vec<usize>>]) -> Vec<Vec<usize>> {
    d.iter().flatten().cloned().collect()
}

fn criterion_1() -> Outcome {
    let mut seen = Vec::new();
    for (n, k) in below_n_instances() {
        let order = aut(&arr(n, k, k))?.order;
        let expected = factorial(n) * factorial(k);
        if order != expected {
            return Err(format!("A({n},{k},{k}): {order} != {expected}"));
        }
        seen.push(format!("({n},{k})={order}"));
    }
    Ok(seen.join(" "))
}

fn criterion_2() -> Outcome {
    let mut seen = Vec::new();
    for n in 3..=5 {
        let expected = 2 * factorial(n) * factorial(n);
        for r in [n, 2] {
            let order = aut(&arr(n, n, r))?.order;
            if order != expected {
                return Err(format!("A({n},{n},{r}): {order} != {expected}"));
            }
            seen.push(format!("A({n},{n},{r})={order}"));
        }
    }
    Ok(seen.join(" "))
}

fn criterion_3() -> Outcome {
    let mut instances: Vec<_> = below_n_instances()
        .into_iter()
        .map(|(n, k)| (n, k, k))
        .collect();
    for n in 3..=5 {
        instances.push((n, n, n));
        instances.push((n, n, 2));
    }
    for &(n, k, r) in &instances {
        let g = arr(n, k, r);
        let a = aut(&g)?;
        let gens = candidate_aut_generators(&g).map_err(|e| e.to_string())?;
        if let Some(i) = gens.iter().position(|c| !a.chain.contains(c)) {
            return Err(format!("A({n},{k},{r}): candidate {i} does not sift"));
        }
        let order = StabilizerChain::new(g.vertex_count(), &gens)
            .and_then(|c| c.order())
            .map_err(|e| e.to_string())?;
        let expected = if k < n {
            factorial(n) * factorial(k)
        } else {
            2 * factorial(n) * factorial(n)
        };
        if order != expected {
            return Err(format!(
                "A({n},{k},{r}): candidate order {order} != {expected}"
            ));
        }
    }
    Ok(format!("{} instances", instances.len()))
}

fn criterion_4() -> Outcome {
    let mut notes = Vec::new();
    for n in 3..=5 {
        for k in 1..=n {
            let g = arr(n, k, k);
            let alpha = (factorial(n - 1) / factorial(n - k)) as usize;
            let mut family = flat(&deltas(n, k));
            if g.vertex_count() <= 60 {
                let found = max_independent_sets(&g, MisMode::EnumerateAll, 60)
                    .map_err(|e| e.to_string())?;
                let sets = found.sets.unwrap();
                family.sort();
                if found.size != alpha || sets.len() != n * k || sets != family {
                    return Err(format!(
                        "A({n},{k},{k}): alpha {} count {} (want {alpha}, {})",
                        found.size,
                        sets.len(),
                        n * k
                    ));
                }
                notes.push(format!("({n},{k}) enum"));
            } else {
                let found =
                    max_independent_sets(&g, MisMode::SizeOnly, 60).map_err(|e| e.to_string())?;
                if found.size != alpha {
                    return Err(format!("A({n},{k},{k}): alpha {} != {alpha}", found.size));
                }
                for d in &family {
                    if d.len() != alpha || !is_independent(&g, d) || !is_maximal_independent(&g, d)
                    {
                        return Err(format!("A({n},{k},{k}): a Delta set is not maximum"));
                    }
                }
                notes.push(format!("({n},{k}) size"));
            }
        }
    }
    Ok(notes.join(" "))
}

fn criterion_5() -> Outcome {
    let mut orders = Vec::new();
    for n in 3..=5 {
        for k in 1..=n {
            let a = aut(&arr(n, k, k))?;
            let kernel = action_kernel(
                &a.chain,
                &flat(&deltas(n, k)),
                DEFAULT_ENUMERATION_THRESHOLD,
            )
            .map_err(|e| e.to_string())?;
            if kernel.len() != 1 || !kernel[0].is_identity() {
                return Err(format!(
                    "A({n},{k},{k}): kernel has {} elements",
                    kernel.len()
                ));
            }
            orders.push(a.order);
        }
    }
    Ok(format!(
        "{} instances, largest group {}",
        orders.len(),
        orders.iter().max().unwrap()
    ))
}

fn criterion_6() -> Outcome {
    let mut count = 0;
    for (n, k) in below_n_instances() {
        if n > 5 {
            continue;
        }
        let d = deltas(n, k);
        let family = flat(&d);
        let a = aut(&arr(n, k, k))?;
        let action = induce_action(&a.generators, &family).map_err(|e| e.to_string())?;
        let rows = BlockSystem::new(
            (0..n)
                .map(|i| (0..k).map(|j| i * k + j).collect())
                .collect(),
        );
        let cols = BlockSystem::new(
            (0..k)
                .map(|j| (0..n).map(|i| i * k + j).collect())
                .collect(),
        );
        let ok = verify_block_system(&action, &rows).map_err(|e| e.to_string())?
            && verify_block_system(&action, &cols).map_err(|e| e.to_string())?;
        if !ok {
            return Err(format!("A({n},{k},{k}): rows or columns are not blocks"));
        }
        let q = quotient_action(&action, &rows).map_err(|e| e.to_string())?;
        if q.order != factorial(n) || q.kernel_order != factorial(k) {
            return Err(format!(
                "A({n},{k},{k}): quotient {} kernel {} (want {}, {})",
                q.order,
                q.kernel_order,
                factorial(n),
                factorial(k)
            ));
        }
        count += 1;
    }
    Ok(format!("{count} instances"))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    for n in 3..=5usize {
        let mut pairs = vec![
            (cay(n, ConnectionKind::Transpositions), arr(n, n, 2)),
            (cay(n, ConnectionKind::Derangements), arr(n, n, n)),
        ];
        for k in 0..=n - 2 {
            pairs.push((cay(n, ConnectionKind::Fixed(k)), arr(n, n, n - k)));
        }
        for (i, (c, a)) in pairs.iter().enumerate() {
            let seed = (n * 100 + i) as u64;
            let cc = canonical_certificate(&c.shuffled(seed).0, DEFAULT_NODE_BUDGET)
                .map_err(|e| e.to_string())?;
            let ca = canonical_certificate(&a.shuffled(seed + 7).0, DEFAULT_NODE_BUDGET)
                .map_err(|e| e.to_string())?;
            if cc != ca {
                return Err(format!("n = {n}: pair {i} certificates differ"));
            }
            count += 1;
        }
    }
    Ok(format!("{count} pairs"))
}

fn criterion_8() -> Outcome {
    let mut verdicts = Vec::new();
    for n in 4..=5usize {
        let expected = 2 * factorial(n) * factorial(n);
        let gens = conjecture_candidate_group(n).map_err(|e| e.to_string())?;
        let cand_order = StabilizerChain::new(factorial(n) as usize, &gens)
            .and_then(|c| c.order())
            .map_err(|e| e.to_string())?;
        if cand_order != expected {
            return Err(format!(
                "n = {n}: candidate order {cand_order} != {expected}"
            ));
        }
        for k in 0..=n - 2 {
            let g = cay(n, ConnectionKind::Fixed(k));
            let a = aut(&g)?;
            if !gens.iter().all(|x| a.chain.contains(x)) {
                return Err(format!("({n},{k}): candidate group not contained"));
            }
            let equal = a.order == cand_order;
            if (k == 0 || k == n - 2) && !equal {
                return Err(format!(
                    "({n},{k}): |Aut| = {} at an anchored case",
                    a.order
                ));
            }
            verdicts.push(format!(
                "({n},{k}) |Aut|={} equal={equal} connected={}",
                a.order,
                g.is_connected()
            ));
        }
    }
    Ok(verdicts.join("; "))
}

fn criterion_9() -> Outcome {
    let parts = [
        permutation_laws(10_000)?,
        tuple_map_laws()?,
        neighborhood_covariance(100)?,
        schreier_sims_vs_closure(20)?,
        alpha_oracle()?,
        certificate_invariance(50)?,
    ];
    Ok(parts.join("; "))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (
            "|Aut(A(n,k,k))| = n!k! for 3<=n<=5, k<n, and (6,2)",
            criterion_1,
        ),
        (
            "|Aut(A(n,n,n))| = |Aut(A(n,n,2))| = 2(n!)^2 for n = 3,4,5",
            criterion_2,
        ),
        (
            "candidate generators sift into Aut with the expected order",
            criterion_3,
        ),
        (
            "maximum independent sets of A(n,k,k) are the Delta_ij",
            criterion_4,
        ),
        ("Aut(A(n,k,k)) acts faithfully on the Delta_ij", criterion_5),
        (
            "rows/columns are blocks; quotient n!, kernel k!",
            criterion_6,
        ),
        (
            "Cayley graphs on S_n match A(n,n,r) by certificate",
            criterion_7,
        ),
        ("conjecture harness for n = 4,5", criterion_8),
        ("property suites", criterion_9),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS criterion {}: {name} [{secs:.2}s] {detail}", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL criterion {}: {name} [{secs:.2}s] {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failures,
        criteria.len()
    );
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
