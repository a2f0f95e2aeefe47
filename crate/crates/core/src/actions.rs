//! Actions of vertex permutation groups on families of vertex sets, and
//! their block systems.

use std::collections::HashMap;

use crate::arrangement::permutation_rank;
use crate::error::{Error, Result};
use crate::perm::{all_permutations, symmetric_generators, Permutation};
use crate::schreier::StabilizerChain;

/// A group acting on a family of vertex sets through setwise images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionOnSets {
    /// Family members, each sorted.
    pub domain: Vec<Vec<usize>>,
    /// One permutation of family indexes per group generator.
    pub movers: Vec<Permutation>,
}

impl ActionOnSets {
    pub fn len(&self) -> usize {
        self.domain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.domain.is_empty()
    }

    /// Group generated by the movers, on family indexes.
    pub fn chain(&self) -> Result<StabilizerChain> {
        StabilizerChain::new(self.domain.len(), &self.movers)
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.domain.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for m in &self.movers {
                let y = m.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        reached == n
    }
}

/// Movers for each generator, found by looking up setwise images.
pub fn induce_action(generators: &[Permutation], family: &[Vec<usize>]) -> Result<ActionOnSets> {
    if family.is_empty() {
        return Err(Error::InvalidParameters("empty family".into()));
    }
    let domain: Vec<Vec<usize>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect();
    let index: HashMap<&[usize], usize> = domain
        .iter()
        .enumerate()
        .map(|(i, s)| (s.as_slice(), i))
        .collect();
    if index.len() != domain.len() {
        return Err(Error::InvalidParameters(
            "family has repeated members".into(),
        ));
    }
    let mut movers = Vec::with_capacity(generators.len());
    for (gi, g) in generators.iter().enumerate() {
        let mut images = Vec::with_capacity(domain.len());
        for (si, set) in domain.iter().enumerate() {
            let mut image: Vec<usize> = set.iter().map(|&v| g.apply(v)).collect();
            image.sort_unstable();
            let target = index.get(image.as_slice()).ok_or_else(|| {
                Error::NotInvariant(format!(
                    "generator {gi} maps member {si} outside the family"
                ))
            })?;
            images.push(*target);
        }
        movers.push(Permutation::from_images(images)?);
    }
    Ok(ActionOnSets { domain, movers })
}

/// Every element of the group that fixes each family member setwise.
/// Enumerates the group, so its order must not exceed `threshold`.
pub fn action_kernel(
    chain: &StabilizerChain,
    family: &[Vec<usize>],
    threshold: u128,
) -> Result<Vec<Permutation>> {
    let sorted: Vec<Vec<usize>> = family
        .iter()
        .map(|s| {
            let mut s = s.clone();
            s.sort_unstable();
            s
        })
        .collect();
    let mut marks = vec![false; chain.degree()];
    let fixes = |g: &Permutation, marks: &mut Vec<bool>| {
        sorted.iter().all(|set| {
            set.iter().for_each(|&v| marks[v] = true);
            let ok = set.iter().all(|&v| marks[g.apply(v)]);
            set.iter().for_each(|&v| marks[v] = false);
            ok
        })
    };
    Ok(chain
        .elements(threshold)?
        .filter(|g| fixes(g, &mut marks))
        .collect())
}

/// A partition of family indexes; blocks sorted, ordered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<usize>>,
}

impl BlockSystem {
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Self {
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        BlockSystem { blocks }
    }

    /// Whether the system is the single block or all singletons.
    pub fn is_trivial(&self) -> bool {
        self.blocks.len() == 1 || self.blocks.iter().all(|b| b.len() == 1)
    }

    pub fn labeled(&self, label: impl Fn(usize) -> String) -> Vec<Vec<String>> {
        self.blocks
            .iter()
            .map(|b| b.iter().map(|&i| label(i)).collect())
            .collect()
    }

    fn block_of(&self, len: usize) -> Result<Vec<usize>> {
        let mut owner = vec![usize::MAX; len];
        for (bi, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::NotBlockSystem("empty block".into()));
            }
            for &x in block {
                if x >= len || owner[x] != usize::MAX {
                    return Err(Error::NotBlockSystem(format!(
                        "{x} is out of range or in two blocks"
                    )));
                }
                owner[x] = bi;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(Error::NotBlockSystem(
                "blocks do not cover the family".into(),
            ));
        }
        Ok(owner)
    }
}

/// A block whose image meets another block without being equal to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockViolation {
    pub mover: usize,
    pub block: usize,
    pub image: Vec<usize>,
    pub overlapping_block: usize,
}

/// The first block, in generator-then-block order, whose image under a
/// mover is neither equal to nor disjoint from some block.
pub fn find_block_violation(
    action: &ActionOnSets,
    candidate: &BlockSystem,
) -> Result<Option<BlockViolation>> {
    let owner = candidate.block_of(action.len())?;
    for (mi, m) in action.movers.iter().enumerate() {
        for (bi, block) in candidate.blocks.iter().enumerate() {
            let mut image: Vec<usize> = block.iter().map(|&x| m.apply(x)).collect();
            image.sort_unstable();
            let target = owner[image[0]];
            if image.iter().all(|&y| owner[y] == target)
                && candidate.blocks[target].len() == image.len()
            {
                continue;
            }
            let overlapping_block = (0..candidate.blocks.len())
                .find(|&c| {
                    let hits = candidate.blocks[c]
                        .iter()
                        .filter(|x| image.binary_search(x).is_ok())
                        .count();
                    hits > 0 && (hits < image.len() || hits < candidate.blocks[c].len())
                })
                .expect("a non-block image overlaps some block partially");
            return Ok(Some(BlockViolation {
                mover: mi,
                block: bi,
                image,
                overlapping_block,
            }));
        }
    }
    Ok(None)
}

/// Whether every mover permutes the blocks of `candidate`.
pub fn verify_block_system(action: &ActionOnSets, candidate: &BlockSystem) -> Result<bool> {
    Ok(find_block_violation(action, candidate)?.is_none())
}

/// Finest block system in which `seed.0` and `seed.1` share a block.
pub fn minimal_block_system(action: &ActionOnSets, seed: (usize, usize)) -> Result<BlockSystem> {
    let n = action.len();
    if seed.0 >= n || seed.1 >= n {
        return Err(Error::InvalidParameters(format!(
            "seed {seed:?} out of range for {n} points"
        )));
    }
    if !action.is_transitive() {
        return Err(Error::Intransitive(n));
    }
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut pending = vec![seed];
    while let Some((a, b)) = pending.pop() {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            continue;
        }
        parent[ra.max(rb)] = ra.min(rb);
        for m in &action.movers {
            pending.push((m.apply(a), m.apply(b)));
        }
    }
    let mut blocks: HashMap<usize, Vec<usize>> = HashMap::new();
    for x in 0..n {
        let r = find(&mut parent, x);
        blocks.entry(r).or_default().push(x);
    }
    Ok(BlockSystem::new(blocks.into_values().collect()))
}

/// The action induced on the blocks of a verified block system.
#[derive(Debug, Clone)]
pub struct QuotientAction {
    pub action: ActionOnSets,
    /// Order of the group acting on the family.
    pub group_order: u128,
    /// Order of its image on the blocks.
    pub order: u128,
    /// Order of the kernel of the map onto the block action.
    pub kernel_order: u128,
}

pub fn quotient_action(action: &ActionOnSets, blocks: &BlockSystem) -> Result<QuotientAction> {
    if let Some(v) = find_block_violation(action, blocks)? {
        return Err(Error::NotBlockSystem(format!(
            "block {} is not mapped onto a block by mover {}",
            v.block, v.mover
        )));
    }
    let owner = blocks.block_of(action.len())?;
    let movers = action
        .movers
        .iter()
        .map(|m| {
            Permutation::from_images(blocks.blocks.iter().map(|b| owner[m.apply(b[0])]).collect())
        })
        .collect::<Result<Vec<_>>>()?;
    let quotient = ActionOnSets {
        domain: blocks.blocks.clone(),
        movers,
    };
    let group_order = action.chain()?.order()?;
    let order = quotient.chain()?.order()?;
    if group_order % order != 0 {
        return Err(Error::NotBlockSystem(format!(
            "quotient order {order} does not divide {group_order}"
        )));
    }
    Ok(QuotientAction {
        action: quotient,
        group_order,
        order,
        kernel_order: group_order / order,
    })
}

/// Generators of `<R(S_n), Inn(S_n), inversion>` acting on the vertexes of
/// a Cayley graph on `S_n` (vertex `i` is the permutation of rank `i`):
/// right multiplications `x -> x g`, conjugations `x -> g^{-1} x g` for
/// `g` in `{(1 2), (1 2 .. n)}`, and `x -> x^{-1}`.
pub fn conjecture_candidate_group(n: usize) -> Result<Vec<Permutation>> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!("need n >= 3, got {n}")));
    }
    let elements: Vec<Permutation> = all_permutations(n).collect();
    let lift = |f: &dyn Fn(&Permutation) -> Result<Permutation>| -> Result<Permutation> {
        let images = elements
            .iter()
            .map(|x| f(x).map(|y| permutation_rank(&y)))
            .collect::<Result<Vec<_>>>()?;
        Permutation::from_images(images)
    };
    let mut out = Vec::new();
    for g in symmetric_generators(n) {
        out.push(lift(&|x| x.compose(&g))?);
    }
    for g in symmetric_generators(n) {
        out.push(lift(&|x| x.conjugate_by(&g))?);
    }
    out.push(lift(&|x| Ok(x.inverse()))?);
    Ok(out)
}
