//! Set partitions of finite integer ground sets and the refinement lattice.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{factorial, Composition, IntPartition};
use crate::error::{domain, Error, Result};
use crate::perm::Perm;
use crate::unionfind::UnionFind;

/// Blocks are sorted internally and ordered by minimum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SetPartition {
    ground: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<SetPartition> {
        let mut blocks: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .collect();
        if blocks.iter().any(|b| b.is_empty()) {
            return domain("empty block");
        }
        let mut ground: Vec<usize> = blocks.iter().flatten().copied().collect();
        ground.sort_unstable();
        if ground.windows(2).any(|w| w[0] == w[1]) {
            return domain("blocks are not disjoint");
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(SetPartition { ground, blocks })
    }

    pub fn singletons(ground: &[usize]) -> SetPartition {
        let mut g = ground.to_vec();
        g.sort_unstable();
        g.dedup();
        SetPartition { blocks: g.iter().map(|&x| vec![x]).collect(), ground: g }
    }

    pub fn singletons_n(n: usize) -> SetPartition {
        Self::singletons(&(1..=n).collect::<Vec<_>>())
    }

    pub fn one_block(n: usize) -> SetPartition {
        SetPartition { ground: (1..=n).collect(), blocks: vec![(1..=n).collect()] }
    }

    /// The tie partition e_{i,j}: {i,j} plus singletons of [n].
    pub fn tie(i: usize, j: usize, n: usize) -> SetPartition {
        let mut blocks: Vec<Vec<usize>> = (1..=n).filter(|&x| x != i && x != j).map(|x| vec![x]).collect();
        blocks.push(vec![i.min(j), i.max(j)]);
        SetPartition::new(blocks).expect("valid tie")
    }

    pub fn ground(&self) -> &[usize] {
        &self.ground
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// |I|: number of blocks.
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// ‖I‖: block sizes in block order.
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    pub fn block_of(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        matches!((self.block_of(a), self.block_of(b)), (Some(x), Some(y)) if x == y)
    }

    fn from_labels(ground: &[usize], labels: impl Fn(usize) -> usize) -> SetPartition {
        let mut map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (k, &x) in ground.iter().enumerate() {
            map.entry(labels(k)).or_default().push(x);
        }
        SetPartition::new(map.into_values().collect()).expect("labels give a partition")
    }

    /// Finest common coarsening; ground sets are merged with singleton extension.
    pub fn join(&self, other: &SetPartition) -> SetPartition {
        let mut ground: Vec<usize> = self.ground.iter().chain(&other.ground).copied().collect();
        ground.sort_unstable();
        ground.dedup();
        let idx = |x: usize| ground.binary_search(&x).unwrap();
        let mut uf = UnionFind::new(ground.len());
        for b in self.blocks.iter().chain(&other.blocks) {
            for w in b.windows(2) {
                uf.union(idx(w[0]), idx(w[1]));
            }
        }
        let labels = uf.labels();
        Self::from_labels(&ground, |k| labels[k] as usize)
    }

    /// I ⪯ J: every block of J is a union of blocks of I.
    pub fn is_finer(&self, other: &SetPartition) -> Result<bool> {
        if self.ground != other.ground {
            return domain("ground sets differ");
        }
        Ok(self.blocks.iter().all(|b| {
            let k = other.block_of(b[0]);
            b.iter().all(|&x| other.block_of(x) == k)
        }))
    }

    pub fn restrict(&self, x: &[usize]) -> SetPartition {
        let blocks: Vec<Vec<usize>> = self
            .blocks
            .iter()
            .map(|b| b.iter().copied().filter(|v| x.contains(v)).collect::<Vec<_>>())
            .filter(|b| !b.is_empty())
            .collect();
        SetPartition::new(blocks).expect("restriction is a partition")
    }

    pub fn type_of(&self) -> IntPartition {
        let mut sizes = self.block_sizes();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Composition::new(sizes).expect("nonempty partition")
    }

    pub fn is_linear(&self) -> bool {
        self.blocks.iter().all(|b| b[b.len() - 1] - b[0] + 1 == b.len())
    }

    /// Linear partition of [n] to its composition.
    pub fn to_composition(&self) -> Result<Composition> {
        if !self.is_linear() {
            return domain(format!("{self} is not linear"));
        }
        Composition::new(self.block_sizes())
    }

    pub fn from_composition(mu: &Composition) -> SetPartition {
        let mut k = 1;
        let blocks = mu
            .parts()
            .iter()
            .map(|&p| {
                let b: Vec<usize> = (k..k + p).collect();
                k += p;
                b
            })
            .collect();
        SetPartition::new(blocks).expect("composition gives a partition")
    }

    /// I·w = {(B)w}: images of blocks under a permutation of [n].
    pub fn act(&self, w: &Perm) -> SetPartition {
        SetPartition::new(self.blocks.iter().map(|b| b.iter().map(|&x| w.apply(x)).collect()).collect())
            .expect("permuted partition")
    }

    /// All partitions of a ground set, in restricted-growth order.
    pub fn all(ground: &[usize]) -> Vec<SetPartition> {
        let n = ground.len();
        let mut out = Vec::new();
        if n == 0 {
            out.push(SetPartition { ground: vec![], blocks: vec![] });
            return out;
        }
        let mut rgs = vec![0usize; n];
        fn rec(k: usize, max: usize, rgs: &mut Vec<usize>, ground: &[usize], out: &mut Vec<SetPartition>) {
            if k == rgs.len() {
                out.push(SetPartition::from_labels(ground, |i| rgs[i]));
                return;
            }
            for v in 0..=max + 1 {
                rgs[k] = v;
                rec(k + 1, max.max(v), rgs, ground, out);
            }
        }
        rec(1, 0, &mut rgs, ground, &mut out);
        out
    }

    pub fn all_n(n: usize) -> Vec<SetPartition> {
        Self::all(&(1..=n).collect::<Vec<_>>())
    }

    /// All coarsenings J ⪰ self.
    pub fn coarsenings(&self) -> Vec<SetPartition> {
        let k = self.num_blocks();
        SetPartition::all(&(0..k).collect::<Vec<_>>())
            .into_iter()
            .map(|p| {
                SetPartition::new(
                    p.blocks.iter().map(|bb| bb.iter().flat_map(|&i| self.blocks[i].clone()).collect()).collect(),
                )
                .unwrap()
            })
            .collect()
    }

    pub fn all_linear(n: usize) -> Vec<SetPartition> {
        crate::combinatorics::compositions(n)
            .expect("n within bound")
            .iter()
            .map(SetPartition::from_composition)
            .collect()
    }
}

/// Möbius function of the linear-partition lattice.
pub fn mobius_linear(i: &SetPartition, j: &SetPartition) -> i64 {
    if !i.is_linear() || !j.is_linear() || !i.is_finer(j).unwrap_or(false) {
        return 0;
    }
    if (i.num_blocks() - j.num_blocks()) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Möbius function of the full partition lattice: Π_B (−1)^{k_B−1}(k_B−1)!.
pub fn mobius_partition_lattice(i: &SetPartition, j: &SetPartition) -> i64 {
    if !i.is_finer(j).unwrap_or(false) {
        return 0;
    }
    j.blocks
        .iter()
        .map(|b| {
            let k = i.blocks.iter().filter(|ib| b.contains(&ib[0])).count();
            let sign = if (k - 1) % 2 == 0 { 1 } else { -1 };
            sign * factorial(k - 1) as i64
        })
        .product()
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> =
            self.blocks.iter().map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", s.join("|"))
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl FromStr for SetPartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(SetPartition { ground: vec![], blocks: vec![] });
        }
        let blocks = s
            .split('|')
            .map(|b| {
                b.split(',')
                    .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{s}: {e}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SetPartition::new(blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bell;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    #[test]
    fn text_round_trip() {
        let x = p("1,3,8|2,5,7|4,6");
        assert_eq!(x.to_string(), "1,3,8|2,5,7|4,6");
        assert_eq!(p("4,6|2,7,5|8,3,1"), x);
        assert!("1,2|2".parse::<SetPartition>().is_err());
    }

    #[test]
    fn restrict_and_type() {
        let x = p("1,3,8|2,5,7|4,6");
        assert_eq!(x.restrict(&[1, 2, 3]), p("1,3|2"));
        assert_eq!(x.restrict(x.ground()), x);
        assert_eq!(x.restrict(&[]).num_blocks(), 0);
        assert_eq!(x.type_of().parts(), &[3, 3, 2]);
        assert_eq!(SetPartition::singletons_n(4).type_of().parts(), &[1, 1, 1, 1]);
        let c = SetPartition::all_n(3).iter().filter(|x| x.type_of().parts() == [2, 1]).count();
        assert_eq!(c, 3);
    }

    #[test]
    fn join_examples() {
        let e12 = SetPartition::tie(1, 2, 4);
        let e23 = SetPartition::tie(2, 3, 4);
        assert_eq!(e12.join(&e23), p("1,2,3|4"));
        assert_eq!(e12.join(&e12), e12);
        let x = p("1,4|2|3");
        assert_eq!(SetPartition::singletons_n(4).join(&x), x);
        // auto-extension by singletons
        assert_eq!(p("1,2").join(&p("3")), p("1,2|3"));
    }

    #[test]
    fn linear_bijection() {
        let x = p("1,2,3|4|5,6|7,8,9");
        assert_eq!(x.to_composition().unwrap().parts(), &[3, 1, 2, 3]);
        assert_eq!(SetPartition::from_composition(&x.to_composition().unwrap()), x);
        assert!(p("1,3|2").to_composition().is_err());
        for n in 1..=8 {
            assert_eq!(SetPartition::all_linear(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn enumeration_counts() {
        for n in 0..=7 {
            assert_eq!(SetPartition::all_n(n).len() as u128, bell(n));
        }
    }

    #[test]
    fn lattice_laws_exhaustive() {
        for n in 1..=4 {
            let all = SetPartition::all_n(n);
            for a in &all {
                assert!(a.is_finer(a).unwrap());
                assert!(SetPartition::singletons_n(n).is_finer(a).unwrap());
                for b in &all {
                    let ab = a.join(b);
                    assert_eq!(ab, b.join(a));
                    assert!(a.is_finer(&ab).unwrap() && b.is_finer(&ab).unwrap());
                    if a.is_finer(b).unwrap() && b.is_finer(a).unwrap() {
                        assert_eq!(a, b);
                    }
                    for k in &all {
                        if a.is_finer(k).unwrap() && b.is_finer(k).unwrap() {
                            assert!(ab.is_finer(k).unwrap());
                        }
                        assert_eq!(ab.join(k), a.join(&b.join(k)));
                    }
                }
            }
        }
        assert!(!p("1,2|3").is_finer(&p("1,3|2")).unwrap());
        assert!(p("1,2").is_finer(&p("1,2|3")).is_err());
    }

    #[test]
    fn linear_partitions_closed_under_join() {
        let all = SetPartition::all_linear(5);
        for a in &all {
            for b in &all {
                assert!(a.join(b).is_linear());
            }
        }
    }

    #[test]
    fn mobius_inversion() {
        // Σ_{I ⪯ K ⪯ J} μ(K, J) = δ(I, J)
        for n in 1..=5 {
            let all = SetPartition::all_n(n);
            for i in &all {
                for j in &all {
                    if !i.is_finer(j).unwrap() {
                        continue;
                    }
                    let s: i64 = all
                        .iter()
                        .filter(|k| i.is_finer(k).unwrap() && k.is_finer(j).unwrap())
                        .map(|k| mobius_partition_lattice(k, j))
                        .sum();
                    assert_eq!(s, (i == j) as i64);
                }
            }
        }
        for n in 1..=4 {
            let all = SetPartition::all_linear(n);
            for i in &all {
                for j in &all {
                    if !i.is_finer(j).unwrap() {
                        continue;
                    }
                    let s: i64 = all
                        .iter()
                        .filter(|k| i.is_finer(k).unwrap() && k.is_finer(j).unwrap())
                        .map(|k| mobius_linear(k, j))
                        .sum();
                    assert_eq!(s, (i == j) as i64);
                }
            }
        }
        assert_eq!(mobius_partition_lattice(&SetPartition::singletons_n(3), &SetPartition::one_block(3)), 2);
        let x = p("1,2|3");
        assert_eq!(mobius_linear(&x, &x), 1);
    }

    #[test]
    fn coarsenings_count() {
        let x = p("1,2|3|4");
        let cs = x.coarsenings();
        assert_eq!(cs.len(), 5);
        assert!(cs.iter().all(|c| x.is_finer(c).unwrap()));
    }
}
