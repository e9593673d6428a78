//! Set partitions of [2n] as n-strand diagrams, with concatenation.
//!
//! Points 1..n are the top row and n+1..2n the bottom row. Internally a
//! diagram is a restricted-growth labelling of the 2n points, which is
//! canonical and doubles as the hash key.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::Composition;
use crate::error::{domain, Error, Result};
use crate::monoid::Monoid;
use crate::perm::Perm;
use crate::setpart::SetPartition;
use crate::unionfind::UnionFind;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Diagram {
    n: u8,
    labels: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConcatResult {
    pub diagram: Diagram,
    pub loops: usize,
}

impl Diagram {
    fn from_uf(n: usize, uf: &mut UnionFind) -> Diagram {
        Diagram { n: n as u8, labels: uf.labels() }
    }

    /// Build from 0-based point pairs to be joined.
    fn from_links(n: usize, links: &[(usize, usize)]) -> Diagram {
        let mut uf = UnionFind::new(2 * n);
        for &(a, b) in links {
            uf.union(a, b);
        }
        Self::from_uf(n, &mut uf)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn identity(n: usize) -> Diagram {
        Self::from_links(n, &(0..n).map(|i| (i, n + i)).collect::<Vec<_>>())
    }

    pub fn from_perm(w: &Perm) -> Diagram {
        let n = w.n();
        Self::from_links(n, &(1..=n).map(|i| (i - 1, n + w.apply(i) - 1)).collect::<Vec<_>>())
    }

    fn check_index(i: usize, n: usize) -> Result<()> {
        if i == 0 || i >= n {
            return domain(format!("generator index {i} out of range for n={n}"));
        }
        Ok(())
    }

    pub fn s(i: usize, n: usize) -> Result<Diagram> {
        Self::check_index(i, n)?;
        Ok(Self::from_perm(&Perm::s(i, n)))
    }

    pub fn t(i: usize, n: usize) -> Result<Diagram> {
        Self::check_index(i, n)?;
        let mut links: Vec<(usize, usize)> = (0..n).filter(|&k| k + 1 != i && k != i).map(|k| (k, n + k)).collect();
        links.push((i - 1, i));
        links.push((n + i - 1, n + i));
        Ok(Self::from_links(n, &links))
    }

    pub fn b(i: usize, n: usize) -> Result<Diagram> {
        Self::check_index(i, n)?;
        let mut links: Vec<(usize, usize)> = (0..n).map(|k| (k, n + k)).collect();
        links.push((i - 1, i));
        Ok(Self::from_links(n, &links))
    }

    /// Identity with the strands i and j tied together.
    pub fn tie(i: usize, j: usize, n: usize) -> Result<Diagram> {
        if i == 0 || i >= j || j > n {
            return domain(format!("tie ({i},{j}) out of range for n={n}"));
        }
        let mut links: Vec<(usize, usize)> = (0..n).map(|k| (k, n + k)).collect();
        links.push((i - 1, j - 1));
        Ok(Self::from_links(n, &links))
    }

    /// b_μ: the boxed partition of a composition.
    pub fn boxed(mu: &Composition) -> Diagram {
        let n = mu.size();
        let mut links: Vec<(usize, usize)> = (0..n).map(|k| (k, n + k)).collect();
        for (o, &p) in mu.offsets().iter().zip(mu.parts()) {
            for k in *o..o + p - 1 {
                links.push((k, k + 1));
            }
        }
        Self::from_links(n, &links)
    }

    pub fn to_setpartition(&self) -> SetPartition {
        let k = self.labels.iter().copied().max().map_or(0, |m| m as usize + 1);
        let mut blocks = vec![Vec::new(); k];
        for (p, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(p + 1);
        }
        SetPartition::new(blocks).expect("labels form a partition")
    }

    pub fn from_setpartition(n: usize, sp: &SetPartition) -> Result<Diagram> {
        if sp.ground() != (1..=2 * n).collect::<Vec<_>>().as_slice() {
            return domain(format!("{sp} is not a partition of [{}]", 2 * n));
        }
        let mut uf = UnionFind::new(2 * n);
        for b in sp.blocks() {
            for w in b.windows(2) {
                uf.union(w[0] - 1, w[1] - 1);
            }
        }
        Ok(Self::from_uf(n, &mut uf))
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().copied().max().map_or(0, |m| m as usize + 1)
    }

    /// Label of the 0-based point.
    pub fn label(&self, p: usize) -> u8 {
        self.labels[p]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn concatenate(&self, other: &Diagram) -> Result<ConcatResult> {
        if self.n != other.n {
            return domain(format!("strand mismatch {} vs {}", self.n, other.n));
        }
        Ok(self.concat_unchecked(other))
    }

    fn concat_unchecked(&self, other: &Diagram) -> ConcatResult {
        let n = self.n();
        // points: top 0..n, middle n..2n, bottom 2n..3n
        let mut uf = UnionFind::new(3 * n);
        let mut first = vec![usize::MAX; 2 * n + 2];
        for (p, &l) in self.labels.iter().enumerate() {
            let f = &mut first[l as usize];
            if *f == usize::MAX {
                *f = p;
            } else {
                uf.union(*f, p);
            }
        }
        let mut first = vec![usize::MAX; 2 * n + 2];
        for (p, &l) in other.labels.iter().enumerate() {
            let q = p + n;
            let f = &mut first[l as usize];
            if *f == usize::MAX {
                *f = q;
            } else {
                uf.union(*f, q);
            }
        }
        let mut outer = vec![false; 3 * n];
        for p in (0..n).chain(2 * n..3 * n) {
            let r = uf.find(p);
            outer[r] = true;
        }
        let mut counted = vec![false; 3 * n];
        let mut loops = 0;
        for p in n..2 * n {
            let r = uf.find(p);
            if !outer[r] && !counted[r] {
                counted[r] = true;
                loops += 1;
            }
        }
        let mut map = vec![u8::MAX; 3 * n];
        let mut next = 0u8;
        let mut labels = Vec::with_capacity(2 * n);
        for p in (0..n).chain(2 * n..3 * n) {
            let r = uf.find(p);
            if map[r] == u8::MAX {
                map[r] = next;
                next += 1;
            }
            labels.push(map[r]);
        }
        ConcatResult { diagram: Diagram { n: self.n, labels }, loops }
    }

    /// Top and bottom rows exchanged (the diagram anti-involution).
    pub fn flip(&self) -> Diagram {
        let n = self.n();
        let mut uf = UnionFind::new(2 * n);
        let mut first = vec![usize::MAX; 2 * n];
        for p in 0..2 * n {
            let q = if p < n { p + n } else { p - n };
            let l = self.labels[p] as usize;
            if first[l] == usize::MAX {
                first[l] = q;
            } else {
                uf.union(first[l], q);
            }
        }
        Self::from_uf(n, &mut uf)
    }

    /// I ⪯ J.
    pub fn is_finer(&self, other: &Diagram) -> bool {
        if self.n != other.n {
            return false;
        }
        let mut map = vec![u8::MAX; 2 * self.n() + 1];
        for (a, b) in self.labels.iter().zip(&other.labels) {
            let m = &mut map[*a as usize];
            if *m == u8::MAX {
                *m = *b;
            } else if *m != *b {
                return false;
            }
        }
        true
    }

    pub fn join(&self, other: &Diagram) -> Diagram {
        assert_eq!(self.n, other.n);
        let n = self.n();
        let mut uf = UnionFind::new(2 * n);
        for labels in [&self.labels, &other.labels] {
            let mut first = vec![usize::MAX; 2 * n];
            for (p, &l) in labels.iter().enumerate() {
                let f = &mut first[l as usize];
                if *f == usize::MAX {
                    *f = p;
                } else {
                    uf.union(*f, p);
                }
            }
        }
        Self::from_uf(n, &mut uf)
    }

    /// Join with a partition of the top points [n].
    pub fn join_top(&self, top: &SetPartition) -> Diagram {
        let n = self.n();
        let mut links = Vec::new();
        for b in top.blocks() {
            for w in b.windows(2) {
                links.push((w[0] - 1, w[1] - 1));
            }
        }
        self.join(&Self::from_links(n, &links))
    }

    /// I ∩ [n] as a partition of the top points.
    pub fn top(&self) -> SetPartition {
        self.to_setpartition().restrict(&(1..=self.n()).collect::<Vec<_>>())
    }

    pub fn coarsens_identity(&self) -> bool {
        let n = self.n();
        (0..n).all(|p| self.labels[p] == self.labels[p + n])
    }

    pub fn is_boxed(&self) -> bool {
        self.coarsens_identity() && self.top().is_linear()
    }

    /// The composition μ with self = b_μ, if boxed.
    pub fn boxed_composition(&self) -> Option<Composition> {
        if !self.is_boxed() {
            return None;
        }
        self.top().to_composition().ok()
    }

    pub fn is_permutation(&self) -> bool {
        let n = self.n();
        self.is_brauer() && (0..n).all(|p| self.labels[n..].contains(&self.labels[p]))
    }

    pub fn to_perm(&self) -> Option<Perm> {
        if !self.is_permutation() {
            return None;
        }
        let n = self.n();
        let images: Vec<usize> =
            (0..n).map(|p| (n..2 * n).find(|&q| self.labels[q] == self.labels[p]).unwrap() - n + 1).collect();
        Perm::from_images(&images).ok()
    }

    pub fn is_brauer(&self) -> bool {
        let mut count = vec![0u8; 2 * self.n()];
        for &l in &self.labels {
            count[l as usize] += 1;
        }
        count.iter().all(|&c| c == 0 || c == 2)
    }

    /// Brauer diagram with no crossing when the points are read around the
    /// boundary (top left to right, then bottom right to left).
    pub fn is_planar_brauer(&self) -> bool {
        if !self.is_brauer() {
            return false;
        }
        let n = self.n();
        let pos = |p: usize| if p < n { p } else { 3 * n - 1 - p };
        let mut arcs: Vec<(usize, usize)> = Vec::new();
        for p in 0..2 * n {
            for q in p + 1..2 * n {
                if self.labels[p] == self.labels[q] {
                    let (a, b) = (pos(p).min(pos(q)), pos(p).max(pos(q)));
                    arcs.push((a, b));
                }
            }
        }
        arcs.iter().all(|&(a, b)| arcs.iter().all(|&(c, d)| !(a < c && c < b && b < d)))
    }

    /// Cuts 1..n−1 at which no block straddles.
    fn separable_cuts(&self) -> Vec<usize> {
        let n = self.n();
        (1..n)
            .filter(|&c| {
                let left: Vec<u8> = (0..c).chain(n..n + c).map(|p| self.labels[p]).collect();
                (c..n).chain(n + c..2 * n).all(|p| !left.contains(&self.labels[p]))
            })
            .collect()
    }

    /// Restriction to strands [a, b) as a standalone diagram.
    fn substrands(&self, a: usize, b: usize) -> Diagram {
        let n = self.n();
        let m = b - a;
        let pts: Vec<usize> = (a..b).chain(n + a..n + b).collect();
        let mut uf = UnionFind::new(2 * m);
        for i in 0..2 * m {
            for j in i + 1..2 * m {
                if self.labels[pts[i]] == self.labels[pts[j]] {
                    uf.union(i, j);
                }
            }
        }
        Self::from_uf(m, &mut uf)
    }

    /// Maximal factorization under the over product.
    pub fn boxed_decomposition(&self) -> Vec<Diagram> {
        let mut bounds = vec![0];
        bounds.extend(self.separable_cuts());
        bounds.push(self.n());
        bounds.windows(2).map(|w| self.substrands(w[0], w[1])).collect()
    }

    /// I/J: J placed to the right of I.
    pub fn over_product(&self, other: &Diagram) -> Diagram {
        let (a, b) = (self.n(), other.n());
        let n = a + b;
        let map_a = |p: usize| if p < a { p } else { n + p - a };
        let map_b = |p: usize| if p < b { a + p } else { n + a + p - b };
        let mut uf = UnionFind::new(2 * n);
        for p in 0..2 * a {
            for q in p + 1..2 * a {
                if self.labels[p] == self.labels[q] {
                    uf.union(map_a(p), map_a(q));
                }
            }
        }
        for p in 0..2 * b {
            for q in p + 1..2 * b {
                if other.labels[p] == other.labels[q] {
                    uf.union(map_b(p), map_b(q));
                }
            }
        }
        Self::from_uf(n, &mut uf)
    }

    /// The (r,s)-shift: top points move by r, bottom points by s.
    pub fn shift(&self, r: usize, s: usize) -> Result<SetPartition> {
        if r > s {
            return domain(format!("shift requires r ≤ s, got ({r},{s})"));
        }
        let n = self.n();
        let sp = self.to_setpartition();
        SetPartition::new(
            sp.blocks().iter().map(|b| b.iter().map(|&x| if x <= n { x + r } else { x + s }).collect()).collect(),
        )
    }

    pub fn is_mu_partition(&self, mu: &Composition) -> bool {
        mu.size() == self.n() && self.is_finer(&Diagram::boxed(mu))
    }

    /// All I ⪯ b_μ, built as over products of arbitrary diagrams on each part.
    pub fn mu_partitions(mu: &Composition) -> Vec<Diagram> {
        let mut out: Vec<Option<Diagram>> = vec![None];
        for &p in mu.parts() {
            let pieces = Diagram::all(p);
            out = out
                .into_iter()
                .flat_map(|pre| {
                    pieces.iter().map(move |d| {
                        Some(match &pre {
                            None => d.clone(),
                            Some(x) => x.over_product(d),
                        })
                    })
                })
                .collect();
        }
        let mut v: Vec<Diagram> = out.into_iter().flatten().collect();
        v.sort();
        v
    }

    /// Every set partition of [2n].
    pub fn all(n: usize) -> Vec<Diagram> {
        SetPartition::all_n(2 * n).iter().map(|sp| Diagram::from_setpartition(n, sp).unwrap()).collect()
    }

    pub fn all_permutations(n: usize) -> Vec<Diagram> {
        let mut v: Vec<Diagram> = Perm::all(n).iter().map(Diagram::from_perm).collect();
        v.sort();
        v
    }

    /// All perfect matchings of the 2n points.
    pub fn all_brauer(n: usize) -> Vec<Diagram> {
        fn rec(free: &mut Vec<usize>, links: &mut Vec<(usize, usize)>, n: usize, out: &mut Vec<Diagram>) {
            if free.is_empty() {
                out.push(Diagram::from_links(n, links));
                return;
            }
            let a = free.remove(0);
            for k in 0..free.len() {
                let b = free.remove(k);
                links.push((a, b));
                rec(free, links, n, out);
                links.pop();
                free.insert(k, b);
            }
            free.insert(0, a);
        }
        let mut out = Vec::new();
        rec(&mut (0..2 * n).collect(), &mut Vec::new(), n, &mut out);
        out.sort();
        out
    }

    /// Non-crossing perfect matchings of the 2n boundary points, read around the rectangle.
    pub fn all_jones(n: usize) -> Vec<Diagram> {
        fn rec(lo: usize, hi: usize) -> Vec<Vec<(usize, usize)>> {
            if lo >= hi {
                return vec![Vec::new()];
            }
            let mut out = Vec::new();
            for m in (lo + 1..hi).step_by(2) {
                for inner in rec(lo + 1, m) {
                    for outer in rec(m + 1, hi) {
                        let mut v = vec![(lo, m)];
                        v.extend_from_slice(&inner);
                        v.extend_from_slice(&outer);
                        out.push(v);
                    }
                }
            }
            out
        }
        // boundary position k is top point k for k < n, then the bottom row right to left
        let point = |k: usize| if k < n { k } else { 3 * n - 1 - k };
        let mut out: Vec<Diagram> = rec(0, 2 * n)
            .into_iter()
            .map(|m| Diagram::from_links(n, &m.iter().map(|&(a, b)| (point(a), point(b))).collect::<Vec<_>>()))
            .collect();
        out.sort();
        out
    }
}

impl Monoid for Diagram {
    fn mul(&self, other: &Self) -> Self {
        self.concat_unchecked(other).diagram
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}", self.n, self.to_setpartition())
    }
}

impl fmt::Debug for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for Diagram {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (n, rest) = s.split_once(';').ok_or_else(|| Error::Parse(format!("missing ';' in {s:?}")))?;
        let n: usize = n.trim().parse().map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        if n == 0 {
            return domain("diagram needs at least one strand");
        }
        Diagram::from_setpartition(n, &rest.parse()?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{bell, catalan, double_factorial_odd};
    use crate::monoid::closure;
    use proptest::prelude::*;

    fn d(s: &str) -> Diagram {
        s.parse().unwrap()
    }

    #[test]
    fn generators_in_two_strands() {
        assert_eq!(Diagram::s(1, 2).unwrap(), d("2; 1,4|2,3"));
        assert_eq!(Diagram::t(1, 2).unwrap(), d("2; 1,2|3,4"));
        assert_eq!(Diagram::b(1, 2).unwrap(), d("2; 1,2,3,4"));
        assert!(Diagram::s(2, 2).is_err());
        assert!(Diagram::tie(2, 2, 3).is_err());
    }

    #[test]
    fn concatenation_examples() {
        let n = 4;
        for i in 1..n {
            let s = Diagram::s(i, n).unwrap();
            let r = s.concatenate(&s).unwrap();
            assert_eq!(r.diagram, Diagram::identity(n));
            assert_eq!(r.loops, 0);
            let t = Diagram::t(i, n).unwrap();
            let r = t.concatenate(&t).unwrap();
            assert_eq!((r.diagram, r.loops), (t.clone(), 1));
        }
        let (t1, t2) = (Diagram::t(1, 3).unwrap(), Diagram::t(2, 3).unwrap());
        let a = t1.concatenate(&t2).unwrap();
        let b = a.diagram.concatenate(&t1).unwrap();
        assert_eq!((b.diagram, a.loops + b.loops), (t1, 0));
        assert!(Diagram::identity(2).concatenate(&Diagram::identity(3)).is_err());
    }

    #[test]
    fn permutation_diagrams_multiply_like_permutations() {
        let all = Perm::all(4);
        for w in &all {
            assert_eq!(Diagram::from_perm(w).to_perm().as_ref(), Some(w));
            for v in &all {
                assert_eq!(Diagram::from_perm(w).mul(&Diagram::from_perm(v)), Diagram::from_perm(&w.then(v)));
            }
        }
    }

    #[test]
    fn closure_cardinalities() {
        for n in 1..=5 {
            let ss: Vec<Diagram> = (1..n).map(|i| Diagram::s(i, n).unwrap()).collect();
            let ts: Vec<Diagram> = (1..n).map(|i| Diagram::t(i, n).unwrap()).collect();
            let both: Vec<Diagram> = ss.iter().chain(&ts).cloned().collect();
            let id = Some(Diagram::identity(n));
            let sn = closure(&ss, id.clone(), 1 << 20).unwrap();
            let jn = closure(&ts, id.clone(), 1 << 20).unwrap();
            let br = closure(&both, id, 1 << 20).unwrap();
            assert_eq!(sn, Diagram::all_permutations(n));
            assert_eq!(jn, Diagram::all_jones(n));
            assert_eq!(jn.len() as u128, catalan(n));
            assert_eq!(br, Diagram::all_brauer(n));
            assert_eq!(br.len() as u128, double_factorial_odd(n));
        }
    }

    #[test]
    fn jones_are_the_planar_brauer_diagrams() {
        for n in 1..=6 {
            let planar: Vec<Diagram> = Diagram::all_brauer(n).into_iter().filter(|d| d.is_planar_brauer()).collect();
            assert_eq!(Diagram::all_jones(n), planar);
        }
    }

    #[test]
    fn brauer_relations() {
        for n in 2..=6 {
            let s = |i| Diagram::s(i, n).unwrap();
            let t = |i| Diagram::t(i, n).unwrap();
            let m = |xs: &[Diagram]| xs.iter().skip(1).fold(xs[0].clone(), |a, b| a.mul(b));
            for i in 1..n {
                assert_eq!(m(&[t(i), s(i)]), t(i));
                assert_eq!(m(&[s(i), t(i)]), t(i));
                for j in 1..n {
                    let dist = i.abs_diff(j);
                    if dist == 1 {
                        assert_eq!(m(&[s(i), s(j), s(i)]), m(&[s(j), s(i), s(j)]));
                        assert_eq!(m(&[t(i), t(j), t(i)]), t(i));
                        assert_eq!(m(&[s(i), t(j), t(i)]), m(&[s(j), t(i)]));
                        assert_eq!(m(&[t(i), t(j), s(i)]), m(&[t(i), s(j)]));
                    } else if dist > 1 {
                        assert_eq!(m(&[s(i), s(j)]), m(&[s(j), s(i)]));
                        assert_eq!(m(&[t(i), t(j)]), m(&[t(j), t(i)]));
                        assert_eq!(m(&[s(i), t(j)]), m(&[t(j), s(i)]));
                    }
                }
            }
        }
    }

    #[test]
    fn associativity_exhaustive_small() {
        for n in 1..=2 {
            let all = Diagram::all(n);
            for a in &all {
                assert_eq!(a.mul(&Diagram::identity(n)), *a);
                assert_eq!(Diagram::identity(n).concatenate(a).unwrap().loops, 0);
                for b in &all {
                    let ab = a.mul(b);
                    for c in &all {
                        assert_eq!(ab.mul(c), a.mul(&b.mul(c)));
                    }
                }
            }
        }
    }

    #[test]
    fn boxed_examples() {
        assert!(Diagram::identity(3).is_boxed());
        let mu = Composition::new(vec![3, 1, 2, 3]).unwrap();
        let b = Diagram::boxed(&mu);
        let prod = [1, 2, 5, 7, 8].iter().fold(Diagram::identity(9), |a, &i| a.mul(&Diagram::b(i, 9).unwrap()));
        assert_eq!(b, prod);
        assert!(b.is_boxed());
        assert_eq!(b.boxed_composition(), Some(mu));
        assert!(!Diagram::s(1, 2).unwrap().is_boxed());
        let dec = Diagram::identity(3).boxed_decomposition();
        assert_eq!(dec, vec![Diagram::identity(1); 3]);
        let b21 = Diagram::boxed(&Composition::new(vec![2, 1]).unwrap());
        assert_eq!(b21.boxed_decomposition().iter().map(|x| x.n()).collect::<Vec<_>>(), vec![2, 1]);
        let b2 = Diagram::boxed(&Composition::new(vec![2]).unwrap());
        let b1 = Diagram::boxed(&Composition::new(vec![1]).unwrap());
        assert_eq!(b2.over_product(&b1), b21);
    }

    #[test]
    fn boxed_iff_equals_b_mu() {
        for n in 1..=3 {
            for x in Diagram::all(n) {
                let via = x.top().is_linear() && x == Diagram::boxed(&x.top().to_composition().unwrap());
                assert_eq!(x.is_boxed(), via, "{x}");
            }
        }
    }

    #[test]
    fn mu_partition_counts() {
        let c = |v: Vec<usize>| Composition::new(v).unwrap();
        assert_eq!(Diagram::mu_partitions(&c(vec![1])).len() as u128, bell(2));
        assert_eq!(Diagram::mu_partitions(&c(vec![2, 1])).len() as u128, bell(4) * bell(2));
        assert_eq!(Diagram::mu_partitions(&c(vec![1, 1, 1])).len() as u128, bell(2).pow(3));
        let mu = c(vec![2, 1]);
        let brute: Vec<Diagram> = Diagram::all(3).into_iter().filter(|x| x.is_mu_partition(&mu)).collect();
        assert_eq!(brute, Diagram::mu_partitions(&mu));
        let x = Diagram::mu_partitions(&c(vec![4, 2, 3]));
        assert_eq!(x.len() as u128, bell(8) * bell(4) * bell(6));
    }

    #[test]
    fn decomposition_of_mu_partition() {
        let c = Composition::new(vec![4, 2, 3]).unwrap();
        let x = Diagram::b(1, 4)
            .unwrap()
            .mul(&Diagram::t(2, 4).unwrap())
            .mul(&Diagram::b(3, 4).unwrap())
            .over_product(&Diagram::s(1, 2).unwrap())
            .over_product(&Diagram::t(1, 3).unwrap().mul(&Diagram::b(2, 3).unwrap()));
        assert!(x.is_mu_partition(&c));
        let parts = x.boxed_decomposition();
        assert_eq!(parts.iter().map(|p| p.n()).collect::<Vec<_>>(), vec![4, 2, 3]);
        let back = parts.iter().skip(1).fold(parts[0].clone(), |a, b| a.over_product(b));
        assert_eq!(back, x);
    }

    #[test]
    fn shift_errors_and_values() {
        let x = Diagram::s(1, 2).unwrap();
        assert!(x.shift(2, 1).is_err());
        assert_eq!(x.shift(1, 3).unwrap().to_string(), "2,7|3,6");
    }

    #[test]
    fn text_encoding() {
        let x = d("2; 1,4|2,3");
        assert_eq!(x.to_string(), "2; 1,4|2,3");
        assert!("2; 1,2".parse::<Diagram>().is_err());
        assert!("x".parse::<Diagram>().is_err());
    }

    fn arb_diagram(n: usize) -> impl Strategy<Value = Diagram> {
        proptest::collection::vec(0usize..2 * n, 2 * n).prop_map(move |v| {
            let mut uf = UnionFind::new(2 * n);
            for (i, &j) in v.iter().enumerate() {
                if j <= i {
                    uf.union(i, j);
                }
            }
            Diagram::from_uf(n, &mut uf)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(300))]
        #[test]
        fn associativity_random(a in arb_diagram(5), b in arb_diagram(5), c in arb_diagram(5)) {
            let l = a.concatenate(&b).unwrap();
            let l2 = l.diagram.concatenate(&c).unwrap();
            let r = b.concatenate(&c).unwrap();
            let r2 = a.concatenate(&r.diagram).unwrap();
            prop_assert_eq!(&l2.diagram, &r2.diagram);
            prop_assert_eq!(l.loops + l2.loops, r.loops + r2.loops);
        }

        #[test]
        fn flip_is_antiautomorphism(a in arb_diagram(4), b in arb_diagram(4)) {
            prop_assert_eq!(a.mul(&b).flip(), b.flip().mul(&a.flip()));
            prop_assert_eq!(a.flip().flip(), a);
        }

        #[test]
        fn over_product_preserves_coarsening(a in arb_diagram(2), h in arb_diagram(3), x in arb_diagram(2), y in arb_diagram(3)) {
            let j = a.join(&x);
            let k = h.join(&y);
            prop_assert!(a.over_product(&h).is_finer(&j.over_product(&k)));
        }

        #[test]
        fn shift_preserves_coarsening(a in arb_diagram(3), x in arb_diagram(3), r in 0usize..3, s in 3usize..5) {
            let j = a.join(&x);
            prop_assert!(a.shift(r, s).unwrap().is_finer(&j.shift(r, s).unwrap()).unwrap());
        }

        #[test]
        fn setpartition_round_trip(a in arb_diagram(4)) {
            prop_assert_eq!(Diagram::from_setpartition(4, &a.to_setpartition()).unwrap(), a);
        }
    }
}
