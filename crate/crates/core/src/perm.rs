//! Permutations of {1..n} in one-line notation acting on the right.
//!
//! Stored 0-based: `p.0[i]` is the image of point `i+1` minus one. Products
//! follow the right-action rule (i)(w·v) = ((i)w)v, so a word
//! s_{i1} s_{i2} ... s_{ik} is applied left to right.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm((0..n as u8).collect())
    }

    /// Build from 1-based one-line images.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return domain(format!("{images:?} is not a permutation"));
            }
            seen[x - 1] = true;
        }
        Ok(Perm(images.iter().map(|&x| (x - 1) as u8).collect()))
    }

    /// The simple transposition s_i = (i, i+1), 1 ≤ i < n.
    pub fn s(i: usize, n: usize) -> Perm {
        assert!(i >= 1 && i < n, "s_{i} out of range for n={n}");
        let mut p = Perm::identity(n);
        p.0.swap(i - 1, i);
        p
    }

    /// Product of simple transpositions s_{w[0]} s_{w[1]} ... (1-based letters).
    pub fn from_word(word: &[usize], n: usize) -> Perm {
        let mut p = Perm::identity(n);
        for &i in word {
            p.swap_values(i);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Image of the 1-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1] as usize + 1
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.n()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    /// Right-action product self·other.
    pub fn then(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    /// In place w ← w·s_i (swaps the values i and i+1).
    pub fn swap_values(&mut self, i: usize) {
        for x in self.0.iter_mut() {
            if *x as usize == i - 1 {
                *x = i as u8;
            } else if *x as usize == i {
                *x = (i - 1) as u8;
            }
        }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.0;
        let mut c = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    c += 1;
                }
            }
        }
        c
    }

    /// ℓ(w·s_i) < ℓ(w).
    pub fn is_right_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.0[i - 1] > inv.0[i]
    }

    /// ℓ(s_i·w) < ℓ(w).
    pub fn is_left_descent(&self, i: usize) -> bool {
        self.0[i - 1] > self.0[i]
    }

    /// Lexicographically least reduced word (greedy smallest left descent).
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::with_capacity(self.length());
        'outer: loop {
            for i in 1..w.n() {
                if w.is_left_descent(i) {
                    word.push(i);
                    w.0.swap(i - 1, i);
                    continue 'outer;
                }
            }
            return word;
        }
    }

    /// All permutations of n points in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
                return out;
            };
            let j = (i + 1..n).rev().find(|&j| cur[j] > cur[i]).unwrap();
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
    }

    /// Whether every block of the given 1-based blocks is mapped to itself.
    pub fn stabilizes_blocks(&self, blocks: &[Vec<usize>]) -> bool {
        blocks.iter().all(|b| b.iter().all(|&x| b.contains(&self.apply(x))))
    }

    pub fn raw(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.images().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn right_action_composition() {
        let s1 = Perm::s(1, 3);
        let s2 = Perm::s(2, 3);
        // (1)(s1 s2) = (2)s2 = 3
        assert_eq!(s1.then(&s2).apply(1), 3);
        assert_eq!(Perm::from_word(&[1, 2], 3), s1.then(&s2));
    }

    #[test]
    fn all_count_and_order() {
        let all = Perm::all(4);
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn longest_element_word() {
        let w0 = Perm::from_images(&[3, 2, 1]).unwrap();
        assert_eq!(w0.length(), 3);
        assert_eq!(w0.reduced_word(), vec![1, 2, 1]);
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Perm> {
        Just((0..n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Perm::from_images(&v.into_iter().map(|x| x + 1).collect::<Vec<_>>()).unwrap())
    }

    proptest! {
        #[test]
        fn reduced_word_is_reduced(w in arb_perm(6)) {
            let word = w.reduced_word();
            prop_assert_eq!(word.len(), w.length());
            prop_assert_eq!(Perm::from_word(&word, 6), w);
        }

        #[test]
        fn descents_match_length(w in arb_perm(5), i in 1usize..5) {
            let ws = w.then(&Perm::s(i, 5));
            prop_assert_eq!(w.is_right_descent(i), ws.length() < w.length());
            let sw = Perm::s(i, 5).then(&w);
            prop_assert_eq!(w.is_left_descent(i), sw.length() < w.length());
        }

        #[test]
        fn inverse_is_inverse(w in arb_perm(6)) {
            prop_assert!(w.then(&w.inverse()).is_identity());
        }
    }
}
