//! Shortlex Knuth–Bendix completion for finitely presented monoids.
//!
//! Letters are `usize` indices; the letter order is the index order.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Word = Vec<usize>;

pub fn shortlex(u: &[usize], v: &[usize]) -> Ordering {
    u.len().cmp(&v.len()).then_with(|| u.cmp(v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KbBudget {
    pub max_rules: usize,
    pub max_reductions: usize,
}

impl Default for KbBudget {
    fn default() -> Self {
        KbBudget { max_rules: 20_000, max_reductions: 1_000_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Completion {
    Complete,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rule {
    pub lhs: Word,
    pub rhs: Word,
}

#[derive(Clone, Debug)]
pub struct RewriteSystem {
    alphabet: usize,
    rules: Vec<Rule>,
    live: Vec<bool>,
    index: HashMap<Word, usize>,
    lengths: BTreeMap<usize, usize>,
    status: Completion,
    reductions: usize,
}

fn contains(hay: &[usize], needle: &[usize]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

impl RewriteSystem {
    fn empty(alphabet: usize) -> Self {
        RewriteSystem {
            alphabet,
            rules: Vec::new(),
            live: Vec::new(),
            index: HashMap::new(),
            lengths: BTreeMap::new(),
            status: Completion::BudgetExhausted,
            reductions: 0,
        }
    }

    pub fn alphabet(&self) -> usize {
        self.alphabet
    }

    pub fn status(&self) -> Completion {
        self.status
    }

    pub fn is_complete(&self) -> bool {
        self.status == Completion::Complete
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().zip(&self.live).filter(|(_, l)| **l).map(|(r, _)| r)
    }

    pub fn num_rules(&self) -> usize {
        self.live.iter().filter(|l| **l).count()
    }

    /// Critical-pair reductions spent during completion.
    pub fn reductions(&self) -> usize {
        self.reductions
    }

    pub fn reduce(&self, w: &[usize]) -> Word {
        let mut out: Word = Vec::with_capacity(w.len());
        let mut input: Word = w.iter().rev().copied().collect();
        while let Some(x) = input.pop() {
            out.push(x);
            for &l in self.lengths.keys() {
                if l > out.len() {
                    break;
                }
                if let Some(&k) = self.index.get(&out[out.len() - l..]) {
                    out.truncate(out.len() - l);
                    input.extend(self.rules[k].rhs.iter().rev());
                    break;
                }
            }
        }
        out
    }

    pub fn is_reducible(&self, w: &[usize]) -> bool {
        (0..w.len()).any(|end| {
            self.lengths.keys().take_while(|&&l| l <= end + 1).any(|&l| self.index.contains_key(&w[end + 1 - l..=end]))
        })
    }

    fn add_rule(&mut self, lhs: Word, rhs: Word) -> usize {
        let k = self.rules.len();
        *self.lengths.entry(lhs.len()).or_default() += 1;
        self.index.insert(lhs.clone(), k);
        self.rules.push(Rule { lhs, rhs });
        self.live.push(true);
        k
    }

    fn kill(&mut self, k: usize) {
        self.live[k] = false;
        let l = self.rules[k].lhs.len();
        self.index.remove(&self.rules[k].lhs);
        if let Some(c) = self.lengths.get_mut(&l) {
            *c -= 1;
            if *c == 0 {
                self.lengths.remove(&l);
            }
        }
    }

    /// Add equations as rules, keeping the system interreduced.
    fn settle(&mut self, mut pending: Vec<(Word, Word)>, budget: &KbBudget) -> bool {
        while let Some((u, v)) = pending.pop() {
            let u = self.reduce(&u);
            let v = self.reduce(&v);
            if u == v {
                continue;
            }
            let (l, r) = if shortlex(&u, &v) == Ordering::Greater { (u, v) } else { (v, u) };
            let k = self.add_rule(l.clone(), r);
            for j in 0..self.rules.len() {
                if j == k || !self.live[j] {
                    continue;
                }
                if contains(&self.rules[j].lhs, &l) {
                    self.kill(j);
                    pending.push((self.rules[j].lhs.clone(), self.rules[j].rhs.clone()));
                } else if contains(&self.rules[j].rhs, &l) {
                    let r = self.reduce(&self.rules[j].rhs);
                    self.rules[j].rhs = r;
                }
            }
            if self.num_rules() > budget.max_rules {
                return false;
            }
        }
        true
    }

    /// Critical pairs from suffixes of rule a overlapping prefixes of rule b.
    fn overlaps(&self, a: usize, b: usize) -> Vec<(Word, Word)> {
        let (la, ra) = (&self.rules[a].lhs, &self.rules[a].rhs);
        let (lb, rb) = (&self.rules[b].lhs, &self.rules[b].rhs);
        let mut out = Vec::new();
        for k in 1..la.len().min(lb.len()) {
            if la[la.len() - k..] == lb[..k] {
                let mut x = ra.clone();
                x.extend_from_slice(&lb[k..]);
                let mut y = la[..la.len() - k].to_vec();
                y.extend_from_slice(rb);
                out.push((x, y));
            }
        }
        out
    }

    fn pair_joins(&self, a: usize, b: usize) -> bool {
        self.overlaps(a, b).into_iter().all(|(x, y)| self.reduce(&x) == self.reduce(&y))
    }

    /// Recheck local confluence on every critical pair of the live rules.
    pub fn verify_confluence(&self) -> bool {
        let live: Vec<usize> = (0..self.rules.len()).filter(|&k| self.live[k]).collect();
        let no_nested =
            live.iter().all(|&a| live.iter().all(|&b| a == b || !contains(&self.rules[a].lhs, &self.rules[b].lhs)));
        no_nested && live.iter().all(|&a| live.iter().all(|&b| self.pair_joins(a, b)))
    }

    /// All irreducible words in shortlex order, or `None` if there are more than `cap`.
    pub fn irreducible_words(&self, cap: usize) -> Option<Vec<Word>> {
        let ws = self.first_irreducible_words(cap + 1);
        (ws.len() <= cap).then_some(ws)
    }

    /// The shortlex-first `limit` irreducible words (fewer if there are fewer).
    pub fn first_irreducible_words(&self, limit: usize) -> Vec<Word> {
        let mut all: Vec<Word> = vec![Vec::new()];
        let mut layer: Vec<Word> = vec![Vec::new()];
        while !layer.is_empty() && all.len() < limit {
            let mut next = Vec::new();
            for w in &layer {
                for x in 0..self.alphabet {
                    let mut v = w.clone();
                    v.push(x);
                    let suffix_hit = self
                        .lengths
                        .keys()
                        .take_while(|&&l| l <= v.len())
                        .any(|&l| self.index.contains_key(&v[v.len() - l..]));
                    if !suffix_hit {
                        next.push(v);
                    }
                }
            }
            all.extend(next.iter().cloned());
            layer = next;
        }
        all.truncate(limit);
        all
    }

    /// Normal forms of a complete system; `Resource` if there are more than `cap`.
    pub fn normal_forms(&self, cap: usize) -> Result<Vec<Word>> {
        if !self.is_complete() {
            return Err(Error::Domain("rewriting system is not complete".into()));
        }
        self.irreducible_words(cap).ok_or_else(|| Error::Resource(format!("more than {cap} normal forms")))
    }

    pub fn word_equiv(&self, u: &[usize], v: &[usize]) -> Result<bool> {
        if !self.is_complete() {
            return Err(Error::Domain("rewriting system is not complete".into()));
        }
        Ok(self.reduce(u) == self.reduce(v))
    }
}

/// Knuth–Bendix completion of the relations under shortlex.
pub fn kb_complete(alphabet: usize, relations: &[(Word, Word)], budget: &KbBudget) -> RewriteSystem {
    let mut rs = RewriteSystem::empty(alphabet);
    if !rs.settle(relations.iter().rev().cloned().collect(), budget) {
        return rs;
    }
    let mut done: HashSet<(usize, usize)> = HashSet::new();
    loop {
        let mut i = 0;
        while i < rs.rules.len() {
            let mut j = 0;
            while j <= i && rs.live[i] {
                if rs.live[j] {
                    for (a, b) in [(i, j), (j, i)] {
                        if !rs.live[a] || !rs.live[b] || !done.insert((a, b)) {
                            continue;
                        }
                        let pairs = rs.overlaps(a, b);
                        rs.reductions += pairs.len();
                        if rs.reductions > budget.max_reductions || !rs.settle(pairs, budget) {
                            return rs;
                        }
                    }
                }
                j += 1;
            }
            i += 1;
        }
        if rs.verify_confluence() {
            rs.status = Completion::Complete;
            return rs;
        }
        done.clear();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_presentation() {
        let rs = kb_complete(1, &[(vec![0], vec![])], &KbBudget::default());
        assert!(rs.is_complete());
        assert_eq!(rs.normal_forms(10).unwrap(), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn free_commutative_idempotents() {
        let rels = vec![(vec![0, 0], vec![0]), (vec![1, 1], vec![1]), (vec![1, 0], vec![0, 1])];
        let rs = kb_complete(2, &rels, &KbBudget::default());
        assert_eq!(rs.normal_forms(10).unwrap().len(), 4);
    }

    #[test]
    fn symmetric_group_s3() {
        let rels = vec![(vec![0, 0], vec![]), (vec![1, 1], vec![]), (vec![0, 1, 0], vec![1, 0, 1])];
        let rs = kb_complete(2, &rels, &KbBudget::default());
        assert!(rs.is_complete() && rs.verify_confluence());
        assert_eq!(rs.normal_forms(100).unwrap().len(), 6);
        assert!(rs.word_equiv(&[0, 1, 0, 1], &[1, 0]).unwrap());
    }

    #[test]
    fn infinite_monoid_hits_cap() {
        let rs = kb_complete(2, &[(vec![1, 0], vec![0, 1])], &KbBudget::default());
        assert!(rs.is_complete());
        assert!(rs.normal_forms(50).is_err());
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        // a b a = b a b with no finiteness: completion under shortlex does not terminate
        let rels = vec![(vec![0, 1, 0], vec![1, 0, 1]), (vec![0, 0, 1], vec![1, 0, 0])];
        let rs = kb_complete(2, &rels, &KbBudget { max_rules: 30, max_reductions: 1_000 });
        if !rs.is_complete() {
            assert!(rs.normal_forms(10).is_err());
            assert!(rs.word_equiv(&[0], &[0]).is_err());
        }
    }

    #[test]
    fn incomplete_system_errors() {
        let rs = RewriteSystem::empty(1);
        assert!(matches!(rs.normal_forms(3), Err(Error::Domain(_))));
    }
}
