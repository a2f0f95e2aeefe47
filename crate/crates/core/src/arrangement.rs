//! Arrangement graphs `A(n,k,r)`, Cayley graphs `Cay(S_n, S)`, and the
//! vertex maps between and on them.
//!
//! Vertex `i` of `A(n,k,r)` is the tuple of rank `i`. Vertex `i` of a
//! Cayley graph on `S_n` is the permutation whose one-line form has rank
//! `i` in `[n]^(n)`, so `psi` is the identity on vertex indexes.

use crate::connection::ConnectionSet;
use crate::error::{Error, Result};
use crate::graph::{row_words, Family, Graph, Labels};
use crate::perm::{all_permutations, symmetric_generators, Permutation};
use crate::tuple::{all_tuples, tuple_count, KTuple};

/// Default cap on vertex count for constructed graphs.
pub const DEFAULT_VERTEX_GUARD: usize = 50_000;

fn check_guard(count: u128, guard: usize) -> Result<usize> {
    if count > guard as u128 {
        return Err(Error::LimitExceeded {
            what: "graph",
            count,
            limit: guard as u128,
        });
    }
    Ok(count as usize)
}

/// Checks `1 <= r <= k <= n`.
pub fn validate_arrangement(n: usize, k: usize, r: usize) -> Result<()> {
    if !(1 <= r && r <= k && k <= n) {
        return Err(Error::InvalidParameters(format!(
            "A(n,k,r) needs 1 <= r <= k <= n, got ({n},{k},{r})"
        )));
    }
    Ok(())
}

/// `A(n,k,r)`: tuples of `[n]^(k)`, adjacent when they differ in exactly
/// `r` positions.
pub fn build_arrangement_graph(n: usize, k: usize, r: usize, guard: usize) -> Result<Graph> {
    validate_arrangement(n, k, r)?;
    let count = check_guard(tuple_count(n, k)?, guard)?;
    let tuples = all_tuples(n, k)?;
    let words = row_words(count);
    let mut adjacency = vec![0u64; words * count];
    for u in 0..count {
        for v in u + 1..count {
            if tuples[u].distance(&tuples[v]) == r {
                adjacency[u * words + v / 64] |= 1 << (v % 64);
                adjacency[v * words + u / 64] |= 1 << (u % 64);
            }
        }
    }
    Ok(Graph::from_adjacency(
        count,
        adjacency,
        Labels::Tuples(tuples),
        Family::Arrangement { n, k, r },
    ))
}

/// Rank of a permutation's one-line form among all of `S_n`.
pub fn permutation_rank(p: &Permutation) -> usize {
    psi_inverse(p).rank()
}

/// `Cay(S_n, S)` with edges `{g, s g}` (apply `s`, then `g`).
pub fn build_cayley_graph(set: &ConnectionSet, guard: usize) -> Result<Graph> {
    let n = set.degree();
    let count = check_guard(tuple_count(n, n)?, guard)?;
    let perms: Vec<Permutation> = all_permutations(n).collect();
    let words = row_words(count);
    let mut adjacency = vec![0u64; words * count];
    for (u, g) in perms.iter().enumerate() {
        for s in set.elements() {
            let v = permutation_rank(&s.then(g));
            adjacency[u * words + v / 64] |= 1 << (v % 64);
            adjacency[v * words + u / 64] |= 1 << (u % 64);
        }
    }
    Ok(Graph::from_adjacency(
        count,
        adjacency,
        Labels::Perms(perms),
        Family::Cayley {
            n,
            kind: set.kind(),
        },
    ))
}

/// The permutation `i -> s_i` of a full-length tuple.
pub fn psi(t: &KTuple) -> Result<Permutation> {
    if t.k() != t.n() {
        return Err(Error::InvalidParameters(format!(
            "psi needs k = n, got k = {}, n = {}",
            t.k(),
            t.n()
        )));
    }
    Ok(Permutation::from_raw(t.entries().to_vec()))
}

pub fn psi_inverse(p: &Permutation) -> KTuple {
    KTuple::from_raw(p.degree(), p.images().to_vec())
}

/// `P(g)`: replace every entry `s` by `g(s)`.
pub fn apply_p(g: &Permutation, v: &KTuple) -> Result<KTuple> {
    if g.degree() != v.n() {
        return Err(Error::DegreeMismatch {
            left: v.n(),
            right: g.degree(),
        });
    }
    Ok(KTuple::from_raw(
        v.n(),
        v.entries()
            .iter()
            .map(|&s| g.apply(s as usize) as u32)
            .collect(),
    ))
}

/// `Q(h)`: position `j` of the result holds position `h^{-1}(j)` of `v`.
pub fn apply_q(h: &Permutation, v: &KTuple) -> Result<KTuple> {
    if h.degree() != v.k() {
        return Err(Error::DegreeMismatch {
            left: v.k(),
            right: h.degree(),
        });
    }
    let inv = h.inverse();
    Ok(KTuple::from_raw(
        v.n(),
        (0..v.k()).map(|j| v.entries()[inv.apply(j)]).collect(),
    ))
}

/// The map `h`: `x_j = i` whenever `s_i = j`, i.e. the one-line form of
/// the inverse permutation.
pub fn apply_h(v: &KTuple) -> Result<KTuple> {
    let p = psi(v)?;
    Ok(psi_inverse(&p.inverse()))
}

/// Lifts a tuple map to a permutation of the vertex indexes of `A(n,k,·)`.
pub fn tuple_vertex_map<F>(n: usize, k: usize, map: F) -> Result<Permutation>
where
    F: Fn(&KTuple) -> Result<KTuple>,
{
    let images = all_tuples(n, k)?
        .iter()
        .map(|t| map(t).map(|u| u.rank()))
        .collect::<Result<Vec<_>>>()?;
    Permutation::from_images(images)
}

pub fn p_vertex_map(g: &Permutation, k: usize) -> Result<Permutation> {
    tuple_vertex_map(g.degree(), k, |t| apply_p(g, t))
}

pub fn q_vertex_map(h: &Permutation, n: usize) -> Result<Permutation> {
    tuple_vertex_map(n, h.degree(), |t| apply_q(h, t))
}

pub fn h_vertex_map(n: usize) -> Result<Permutation> {
    tuple_vertex_map(n, n, apply_h)
}

/// Whether `f` preserves both adjacency and non-adjacency.
pub fn is_automorphism(graph: &Graph, f: &Permutation) -> Result<bool> {
    if f.degree() != graph.vertex_count() {
        return Err(Error::DegreeMismatch {
            left: graph.vertex_count(),
            right: f.degree(),
        });
    }
    // Bijective and degree-preserving, so edges onto edges suffices.
    Ok((0..graph.vertex_count()).all(|u| {
        graph.degree(u) == graph.degree(f.apply(u))
            && graph
                .neighbors(u)
                .iter()
                .all(|&v| graph.has_edge(f.apply(u), f.apply(v as usize)))
    }))
}

/// `P(g)` for `g` in `{(1 2), (1 2 .. n)}`, `Q(h)` for `h` in
/// `{(1 2), (1 2 .. k)}`, and the map `h` when `k = n`. Each map is checked
/// against `graph` before it is returned.
pub fn candidate_aut_generators(graph: &Graph) -> Result<Vec<Permutation>> {
    let Family::Arrangement { n, k, r } = graph.family() else {
        return Err(Error::InvalidParameters(
            "candidate generators need an arrangement graph".into(),
        ));
    };
    validate_arrangement(n, k, r)?;
    let mut out = Vec::new();
    for g in symmetric_generators(n) {
        out.push(p_vertex_map(&g, k)?);
    }
    for h in symmetric_generators(k) {
        out.push(q_vertex_map(&h, n)?);
    }
    if k == n {
        out.push(h_vertex_map(n)?);
    }
    for (i, f) in out.iter().enumerate() {
        if !is_automorphism(graph, f)? {
            return Err(Error::UnverifiedCandidate(format!(
                "generator {i} on A({n},{k},{r})"
            )));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::ConnectionKind;
    use crate::schreier::StabilizerChain;

    fn t(n: usize, e: &[usize]) -> KTuple {
        KTuple::from_one_based(n, e).unwrap()
    }

    fn perm(images: &[usize]) -> Permutation {
        Permutation::from_one_based(images).unwrap()
    }

    const GUARD: usize = DEFAULT_VERTEX_GUARD;

    /// Neighbors of `[1,2]` in A(4,2,2) by direct scan over ordered pairs.
    fn brute_neighbors_of_12() -> usize {
        let mut count = 0;
        for a in 1..=4 {
            for b in 1..=4 {
                if a != b && a != 1 && b != 2 {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn arrangement_sizes() {
        assert_eq!(brute_neighbors_of_12(), 7);
        let g = build_arrangement_graph(4, 2, 2, GUARD).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert_eq!(g.regular_degree(), Some(7));
        assert_eq!(g.edge_count(), 42);

        let g = build_arrangement_graph(4, 2, 1, GUARD).unwrap();
        assert_eq!(g.regular_degree(), Some(4));

        for n in 2..=5 {
            let g = build_arrangement_graph(n, n, 1, GUARD).unwrap();
            assert_eq!(g.edge_count(), 0);
        }
    }

    #[test]
    fn arrangement_parameter_errors() {
        assert!(build_arrangement_graph(4, 2, 3, GUARD).is_err());
        assert!(build_arrangement_graph(3, 4, 2, GUARD).is_err());
        assert!(build_arrangement_graph(4, 2, 0, GUARD).is_err());
        assert!(matches!(
            build_arrangement_graph(9, 9, 9, GUARD),
            Err(Error::LimitExceeded { count: 362880, .. })
        ));
    }

    #[test]
    fn arrangement_vertex_counts_and_regularity() {
        for n in 1..=5 {
            for k in 1..=n {
                for r in 1..=k {
                    let g = build_arrangement_graph(n, k, r, GUARD).unwrap();
                    assert_eq!(g.vertex_count() as u128, tuple_count(n, k).unwrap());
                    assert!(g.regular_degree().is_some(), "A({n},{k},{r}) not regular");
                }
            }
        }
    }

    /// Degree of A(n,k,r) by choosing the r changed positions and counting
    /// their fillings by inclusion–exclusion over positions kept equal.
    fn degree_oracle(n: usize, k: usize, r: usize) -> usize {
        let binom = |a: usize, b: usize| -> i64 {
            if b > a {
                0
            } else {
                (0..b).fold(1i64, |acc, i| acc * (a - i) as i64 / (i + 1) as i64)
            }
        };
        let falling = |a: usize, b: usize| -> i64 { (0..b).map(|i| (a - i) as i64).product() };
        // Fill r chosen positions with distinct values avoiding the k-r kept
        // values, each differing from its old entry.
        let mut total = 0i64;
        for j in 0..=r {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            total += sign * binom(r, j) * falling(n - (k - r) - j, r - j);
        }
        (binom(k, r) * total) as usize
    }

    #[test]
    fn degree_matches_inclusion_exclusion() {
        for n in 2..=5 {
            for k in 1..=n {
                for r in 1..=k {
                    let g = build_arrangement_graph(n, k, r, GUARD).unwrap();
                    assert_eq!(g.degree(0), degree_oracle(n, k, r), "A({n},{k},{r})");
                }
            }
        }
    }

    #[test]
    fn cayley_graph_degrees() {
        let cay =
            |n, kind| build_cayley_graph(&ConnectionSet::new(n, kind).unwrap(), GUARD).unwrap();
        let g = cay(3, ConnectionKind::Transpositions);
        assert_eq!((g.vertex_count(), g.regular_degree()), (6, Some(3)));
        let g = cay(4, ConnectionKind::Derangements);
        assert_eq!((g.vertex_count(), g.regular_degree()), (24, Some(9)));
        assert_eq!(g.edge_count(), 108);
        let g = cay(4, ConnectionKind::Fixed(1));
        assert_eq!((g.vertex_count(), g.regular_degree()), (24, Some(8)));
        assert!(!g.is_connected());
    }

    #[test]
    fn psi_examples() {
        let p = psi(&t(3, &[2, 3, 1])).unwrap();
        assert_eq!((p.apply(0), p.apply(1), p.apply(2)), (1, 2, 0));
        assert!(psi(&t(4, &[1, 2, 3, 4])).unwrap().is_identity());
        for tup in all_tuples(4, 4).unwrap() {
            assert_eq!(psi_inverse(&psi(&tup).unwrap()), tup);
        }
        assert!(psi(&t(4, &[1, 2])).is_err());
    }

    #[test]
    fn p_and_q_examples() {
        let v = t(4, &[1, 3]);
        assert_eq!(apply_p(&perm(&[2, 1, 3, 4]), &v).unwrap(), t(4, &[2, 3]));
        assert_eq!(apply_p(&Permutation::identity(4), &v).unwrap(), v);
        assert_eq!(
            apply_p(&perm(&[2, 3, 4, 1]), &t(4, &[4, 1])).unwrap(),
            t(4, &[1, 2])
        );
        assert!(apply_p(&Permutation::identity(3), &v).is_err());

        assert_eq!(apply_q(&perm(&[2, 1]), &v).unwrap(), t(4, &[3, 1]));
        assert_eq!(apply_q(&Permutation::identity(2), &v).unwrap(), v);
        assert!(apply_q(&Permutation::identity(3), &v).is_err());
    }

    #[test]
    fn q_is_a_right_action() {
        let h1 = perm(&[2, 3, 1]);
        let h2 = perm(&[1, 3, 2]);
        for v in all_tuples(5, 3).unwrap() {
            let twice = apply_q(&h2, &apply_q(&h1, &v).unwrap()).unwrap();
            assert_eq!(twice, apply_q(&h1.compose(&h2).unwrap(), &v).unwrap());
        }
    }

    #[test]
    fn h_examples() {
        assert_eq!(apply_h(&t(3, &[2, 3, 1])).unwrap(), t(3, &[3, 1, 2]));
        let id = t(4, &[1, 2, 3, 4]);
        assert_eq!(apply_h(&id).unwrap(), id);
        for v in all_tuples(4, 4).unwrap() {
            let hv = apply_h(&v).unwrap();
            assert_eq!(apply_h(&hv).unwrap(), v);
            assert_eq!(psi(&hv).unwrap(), psi(&v).unwrap().inverse());
        }
        assert!(apply_h(&t(4, &[1, 2])).is_err());
    }

    #[test]
    fn p_and_q_commute_on_vertices() {
        for n in 2..=4 {
            for k in 1..=n {
                let ps: Vec<_> = all_permutations(n)
                    .map(|g| p_vertex_map(&g, k).unwrap())
                    .collect();
                let qs: Vec<_> = all_permutations(k)
                    .map(|h| q_vertex_map(&h, n).unwrap())
                    .collect();
                for p in &ps {
                    for q in &qs {
                        assert_eq!(p.then(q), q.then(p));
                    }
                }
            }
        }
    }

    #[test]
    fn h_conjugates_p_into_q() {
        for n in 2..=4 {
            let h = h_vertex_map(n).unwrap();
            for g in all_permutations(n) {
                let conj = h.then(&p_vertex_map(&g, n).unwrap()).then(&h);
                assert_eq!(conj, q_vertex_map(&g, n).unwrap());
            }
        }
        let h = h_vertex_map(5).unwrap();
        for g in symmetric_generators(5) {
            let conj = h.then(&p_vertex_map(&g, 5).unwrap()).then(&h);
            assert_eq!(conj, q_vertex_map(&g, 5).unwrap());
        }
    }

    #[test]
    fn psi_witnesses_cayley_isomorphisms() {
        for n in 2..=4 {
            for (r, kind) in [
                (2, ConnectionKind::Transpositions),
                (n, ConnectionKind::Derangements),
            ] {
                let set = ConnectionSet::new(n, kind).unwrap();
                let arr = build_arrangement_graph(n, n, r, GUARD).unwrap();
                let cay = build_cayley_graph(&set, GUARD).unwrap();
                let Labels::Tuples(tuples) = arr.labels() else {
                    panic!()
                };
                for (u, su) in tuples.iter().enumerate() {
                    for (v, sv) in tuples.iter().enumerate() {
                        let quotient = psi(su).unwrap().then(&psi(sv).unwrap().inverse());
                        assert_eq!(arr.has_edge(u, v), set.contains(&quotient));
                        assert_eq!(arr.has_edge(u, v), cay.has_edge(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn is_automorphism_examples() {
        let g = build_arrangement_graph(4, 2, 2, GUARD).unwrap();
        assert!(is_automorphism(&g, &Permutation::identity(12)).unwrap());
        assert!(is_automorphism(&g, &p_vertex_map(&perm(&[2, 1, 3, 4]), 2).unwrap()).unwrap());
        assert!(is_automorphism(&g, &Permutation::identity(5)).is_err());

        // Scan vertex transpositions for one that breaks adjacency.
        let mut found = false;
        'scan: for a in 0..12 {
            for b in a + 1..12 {
                let swap = Permutation::transposition(12, a, b).unwrap();
                if !is_automorphism(&g, &swap).unwrap() {
                    found = true;
                    break 'scan;
                }
            }
        }
        assert!(found);
        let swap = Permutation::transposition(12, 0, 1).unwrap();
        assert!(!is_automorphism(&g, &swap).unwrap());
    }

    #[test]
    fn candidate_generator_counts_and_orders() {
        for ((n, k, r), count, order) in [
            ((4, 2, 2), 4, 48u128),
            ((4, 4, 2), 5, 1152),
            ((4, 4, 4), 5, 1152),
        ] {
            let g = build_arrangement_graph(n, k, r, GUARD).unwrap();
            let gens = candidate_aut_generators(&g).unwrap();
            assert_eq!(gens.len(), count);
            let chain = StabilizerChain::new(g.vertex_count(), &gens).unwrap();
            assert_eq!(chain.order().unwrap(), order);
        }
        let free = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(candidate_aut_generators(&free).is_err());
    }

    #[test]
    fn graphdoc_round_trip_is_exact() {
        let a = build_arrangement_graph(4, 3, 2, GUARD).unwrap();
        assert_eq!(Graph::from_graphdoc(&a.to_graphdoc()).unwrap(), a);
        let c = build_cayley_graph(
            &ConnectionSet::new(4, ConnectionKind::Fixed(1)).unwrap(),
            GUARD,
        )
        .unwrap();
        assert_eq!(Graph::parse(&c.to_graphdoc()).unwrap(), c);
        let (s, _) = a.shuffled(3);
        assert_eq!(Graph::from_graphdoc(&s.to_graphdoc()).unwrap(), s);
    }

    #[test]
    fn dot_uses_tuple_labels() {
        let a = build_arrangement_graph(3, 2, 2, GUARD).unwrap();
        assert!(a.to_dot().contains("0 [label=\"[1,2]\"];"));
    }
}
