#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use arrgraph::arrangement::{
    apply_h, build_arrangement_graph, build_cayley_graph, h_vertex_map, p_vertex_map, q_vertex_map,
    DEFAULT_VERTEX_GUARD,
};
use arrgraph::aut::{
    automorphism_group, canonical_certificate, common_neighborhood, DEFAULT_NODE_BUDGET,
};
use arrgraph::connection::{ConnectionKind, ConnectionSet};
use arrgraph::graph::Graph;
use arrgraph::indsets::{max_independent_sets, MisMode};
use arrgraph::perm::{all_permutations, Permutation};
use arrgraph::schreier::StabilizerChain;
use arrgraph::tuple::all_tuples;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<String, String>;

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn arr(n: usize, k: usize, r: usize) -> Graph {
    build_arrangement_graph(n, k, r, DEFAULT_VERTEX_GUARD).unwrap()
}

pub fn cay(n: usize, kind: ConnectionKind) -> Graph {
    build_cayley_graph(&ConnectionSet::new(n, kind).unwrap(), DEFAULT_VERTEX_GUARD).unwrap()
}

fn cycle(n: usize) -> Graph {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::from_edges(a + b, &edges).unwrap()
}

fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}

fn cube() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for b in 0..3 {
            let v = u ^ (1 << b);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &edges).unwrap()
}

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Small named graphs used by the property checks.
pub fn corpus() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = Vec::new();
    for (n, k, r) in [
        (3, 1, 1),
        (3, 2, 1),
        (3, 2, 2),
        (3, 3, 1),
        (3, 3, 2),
        (3, 3, 3),
        (4, 1, 1),
        (4, 2, 1),
        (4, 2, 2),
        (4, 3, 2),
        (4, 3, 3),
        (4, 4, 2),
        (4, 4, 3),
        (4, 4, 4),
        (5, 2, 2),
    ] {
        out.push((format!("A({n},{k},{r})"), arr(n, k, r)));
    }
    for (n, kind) in [
        (3, ConnectionKind::Transpositions),
        (3, ConnectionKind::Derangements),
        (3, ConnectionKind::Fixed(1)),
        (4, ConnectionKind::Transpositions),
        (4, ConnectionKind::Fixed(1)),
    ] {
        out.push((format!("Cay(S{n},{kind})"), cay(n, kind)));
    }
    out.push(("petersen".into(), petersen()));
    out.push(("cube".into(), cube()));
    out.push(("C6".into(), cycle(6)));
    out.push(("C8".into(), cycle(8)));
    out.push(("K3,3".into(), complete_bipartite(3, 3)));
    out.push(("K1,5".into(), complete_bipartite(1, 5)));
    out.push((
        "2K3".into(),
        Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]).unwrap(),
    ));
    out.push((
        "P7".into(),
        Graph::from_edges(7, &(0..6).map(|i| (i, i + 1)).collect::<Vec<_>>()).unwrap(),
    ));
    out.push(("empty5".into(), Graph::from_edges(5, &[]).unwrap()));
    for (i, (n, p)) in [(12, 0.3), (14, 0.4), (16, 0.25), (16, 0.5)]
        .into_iter()
        .enumerate()
    {
        out.push((format!("gnp{i}"), random_graph(n, p, 0xc0ffee + i as u64)));
    }
    out
}

/// Largest independent set found by checking every vertex subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 20);
    let masks: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).iter().fold(0u32, |m, &v| m | 1 << v))
        .collect();
    (0u32..1 << n)
        .filter(|&s| (0..n).all(|u| s >> u & 1 == 0 || masks[u] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// All elements of the group generated by `gens`, or `None` past `cap`.
pub fn brute_closure(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Option<HashSet<Vec<usize>>> {
    let id: Vec<usize> = (0..degree).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g.apply(i)).collect();
            if seen.insert(y.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push_back(y);
            }
        }
    }
    Some(seen)
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Permutation::from_images(v).unwrap()
}

pub fn permutation_laws(samples: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for i in 0..samples {
        let n = rng.gen_range(1..=12);
        let (p, q, r) = (
            random_perm(&mut rng, n),
            random_perm(&mut rng, n),
            random_perm(&mut rng, n),
        );
        let left = p.compose(&q).unwrap().compose(&r).unwrap();
        let right = p.compose(&q.compose(&r).unwrap()).unwrap();
        if left != right {
            return Err(format!("associativity fails at sample {i}: {p} {q} {r}"));
        }
        if p.inverse().inverse() != p || !p.compose(&p.inverse()).unwrap().is_identity() {
            return Err(format!("inverse law fails at sample {i}: {p}"));
        }
        for x in 0..n {
            if p.compose(&q).unwrap().apply(x) != q.apply(p.apply(x)) {
                return Err(format!("composition order fails at sample {i}"));
            }
        }
    }
    Ok(format!("{samples} random triples"))
}

pub fn tuple_map_laws() -> Check {
    let mut checked = 0;
    for n in 1..=4 {
        for t in all_tuples(n, n).unwrap() {
            if apply_h(&apply_h(&t).unwrap()).unwrap() != t {
                return Err(format!("h is not an involution at {t}"));
            }
        }
        let hv = h_vertex_map(n).unwrap();
        for g in all_permutations(n) {
            let conj = hv
                .inverse()
                .compose(&p_vertex_map(&g, n).unwrap())
                .unwrap()
                .compose(&hv)
                .unwrap();
            if conj != q_vertex_map(&g, n).unwrap() {
                return Err(format!("h does not conjugate P({g}) to Q({g}) at n = {n}"));
            }
        }
        for k in 1..=n {
            for g in all_permutations(n) {
                let p = p_vertex_map(&g, k).unwrap();
                for h in all_permutations(k) {
                    let q = q_vertex_map(&h, n).unwrap();
                    if p.compose(&q).unwrap() != q.compose(&p).unwrap() {
                        return Err(format!("P({g}) and Q({h}) do not commute at ({n},{k})"));
                    }
                    checked += 1;
                }
            }
        }
    }
    Ok(format!("{checked} (g, h) pairs for n <= 4"))
}

pub fn neighborhood_covariance(subsets: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let mut checked = 0;
    for (name, g) in corpus() {
        let aut = automorphism_group(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        let n = g.vertex_count();
        for gen in &aut.generators {
            for _ in 0..subsets {
                let size = rng.gen_range(0..=n.min(4));
                let mut pool: Vec<usize> = (0..n).collect();
                pool.shuffle(&mut rng);
                let set = &pool[..size];
                let mut lhs: Vec<usize> = common_neighborhood(&g, set)
                    .iter()
                    .map(|&v| gen.apply(v))
                    .collect();
                lhs.sort_unstable();
                let image: Vec<usize> = set.iter().map(|&v| gen.apply(v)).collect();
                let rhs = common_neighborhood(&g, &image);
                if lhs != rhs {
                    return Err(format!("{name}: N(S)^g != N(S^g) for S = {set:?}"));
                }
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (graph, generator, subset) triples"))
}

pub fn schreier_sims_vs_closure(groups: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(5000);
    let mut orders = Vec::new();
    let mut attempts = 0;
    while orders.len() < groups {
        attempts += 1;
        if attempts > 10_000 {
            return Err("could not sample enough small groups".into());
        }
        let degree = rng.gen_range(3..=9);
        let count = rng.gen_range(1..=3);
        let gens: Vec<Permutation> = (0..count)
            .map(|_| {
                let mut support: Vec<usize> = (0..degree).collect();
                support.shuffle(&mut rng);
                support.truncate(rng.gen_range(2..=degree));
                let mut images: Vec<usize> = (0..degree).collect();
                let mut moved = support.clone();
                moved.shuffle(&mut rng);
                for (a, b) in support.iter().zip(&moved) {
                    images[*a] = *b;
                }
                Permutation::from_images(images).unwrap()
            })
            .collect();
        let Some(elements) = brute_closure(degree, &gens, 5000) else {
            continue;
        };
        let chain = StabilizerChain::new(degree, &gens).map_err(|e| e.to_string())?;
        let order = chain.order().map_err(|e| e.to_string())?;
        if order != elements.len() as u128 {
            return Err(format!(
                "order {order} but closure has {} elements",
                elements.len()
            ));
        }
        for e in &elements {
            if !chain.contains(&Permutation::from_images(e.clone()).unwrap()) {
                return Err(format!("closure element {e:?} not recognised"));
            }
        }
        for _ in 0..20 {
            let x = random_perm(&mut rng, degree);
            let inside = elements.contains(&(0..degree).map(|i| x.apply(i)).collect::<Vec<_>>());
            if chain.contains(&x) != inside {
                return Err(format!("membership of {x} disagrees with closure"));
            }
        }
        orders.push(order);
    }
    Ok(format!("{groups} groups, orders {orders:?}"))
}

pub fn alpha_oracle() -> Check {
    let mut checked = 0;
    for (name, g) in corpus() {
        if g.vertex_count() > 16 {
            continue;
        }
        let expected = brute_alpha(&g);
        let size = max_independent_sets(&g, MisMode::SizeOnly, 60)
            .map_err(|e| e.to_string())?
            .size;
        let all = max_independent_sets(&g, MisMode::EnumerateAll, 60).map_err(|e| e.to_string())?;
        if size != expected || all.size != expected {
            return Err(format!(
                "{name}: alpha {size}/{} but oracle says {expected}",
                all.size
            ));
        }
        for s in all.sets.unwrap() {
            if s.len() != expected
                || (0..s.len()).any(|i| s[i + 1..].iter().any(|&v| g.has_edge(s[i], v)))
            {
                return Err(format!(
                    "{name}: emitted set {s:?} is not a maximum independent set"
                ));
            }
        }
        checked += 1;
    }
    Ok(format!("{checked} graphs"))
}

pub fn certificate_invariance(relabelings: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(50);
    let mut checked = 0;
    for (name, g) in corpus() {
        let base = canonical_certificate(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        for _ in 0..relabelings {
            let f = random_perm(&mut rng, g.vertex_count());
            let h = g.relabeled(&f).unwrap();
            if canonical_certificate(&h, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())? != base {
                return Err(format!("{name}: certificate changed under relabeling {f}"));
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} relabeled copies"))
}
