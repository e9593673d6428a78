//! Ramified partitions (I, J) with I ⪯ J, the monoids R(M) and BR(M), and
//! normal forms.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinatorics::{compositions, Composition};
use crate::diagram::Diagram;
use crate::error::{domain, Error, Result};
use crate::monoid::{closure, Monoid};
use crate::perm::Perm;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RamifiedPartition {
    left: Diagram,
    right: Diagram,
}

impl RamifiedPartition {
    pub fn new(left: Diagram, right: Diagram) -> Result<RamifiedPartition> {
        if left.n() != right.n() {
            return domain("strand mismatch");
        }
        if !left.is_finer(&right) {
            return domain(format!("({left}) is not finer than ({right})"));
        }
        Ok(RamifiedPartition { left, right })
    }

    pub fn left(&self) -> &Diagram {
        &self.left
    }

    pub fn right(&self) -> &Diagram {
        &self.right
    }

    pub fn n(&self) -> usize {
        self.left.n()
    }

    pub fn identity(n: usize) -> RamifiedPartition {
        let id = Diagram::identity(n);
        RamifiedPartition { left: id.clone(), right: id }
    }

    /// (I, I): the diagonal embedding of a diagram.
    pub fn diagonal(d: &Diagram) -> RamifiedPartition {
        RamifiedPartition { left: d.clone(), right: d.clone() }
    }

    /// e_i = (1, b_i).
    pub fn e(i: usize, n: usize) -> Result<RamifiedPartition> {
        RamifiedPartition::new(Diagram::identity(n), Diagram::b(i, n)?)
    }

    /// e_{i,j} = (1, tie).
    pub fn tie(i: usize, j: usize, n: usize) -> Result<RamifiedPartition> {
        RamifiedPartition::new(Diagram::identity(n), Diagram::tie(i, j, n)?)
    }

    pub fn s(i: usize, n: usize) -> Result<RamifiedPartition> {
        Ok(Self::diagonal(&Diagram::s(i, n)?))
    }

    pub fn t(i: usize, n: usize) -> Result<RamifiedPartition> {
        Ok(Self::diagonal(&Diagram::t(i, n)?))
    }

    /// z_i = (s_i, b_i).
    pub fn z(i: usize, n: usize) -> Result<RamifiedPartition> {
        RamifiedPartition::new(Diagram::s(i, n)?, Diagram::b(i, n)?)
    }

    /// d_i = (t_i, b_i).
    pub fn d(i: usize, n: usize) -> Result<RamifiedPartition> {
        RamifiedPartition::new(Diagram::t(i, n)?, Diagram::b(i, n)?)
    }

    /// z^r_{i,j} = e_{i,j} s_r.
    pub fn zt(r: usize, i: usize, j: usize, n: usize) -> Result<RamifiedPartition> {
        Ok(Self::tie(i, j, n)?.mul(&Self::s(r, n)?))
    }

    /// (w, w ∨ P) for a permutation and a partition of the top points.
    pub fn from_perm_ties(w: &Perm, ties: &crate::setpart::SetPartition) -> RamifiedPartition {
        let d = Diagram::from_perm(w);
        let j = d.join_top(ties);
        RamifiedPartition { left: d, right: j }
    }

    pub fn rproduct(&self, other: &RamifiedPartition) -> Result<(RamifiedPartition, (usize, usize))> {
        let l = self.left.concatenate(&other.left)?;
        let r = self.right.concatenate(&other.right)?;
        let out = RamifiedPartition::new(l.diagram, r.diagram)
            .map_err(|e| Error::Internal(format!("ramified product broke coarsening: {e}")))?;
        Ok((out, (l.loops, r.loops)))
    }
}

impl Monoid for RamifiedPartition {
    fn mul(&self, other: &Self) -> Self {
        RamifiedPartition { left: self.left.mul(&other.left), right: self.right.mul(&other.right) }
    }
}

impl fmt::Display for RamifiedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ; {}", self.left, self.right)
    }
}

impl fmt::Debug for RamifiedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

impl FromStr for RamifiedPartition {
    type Err = Error;
    /// `n; left ; n; right` or `n; left ; right`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(';').map(str::trim).collect();
        let (l, r) = match parts.as_slice() {
            [n, l, n2, r] => (format!("{n}; {l}"), format!("{n2}; {r}")),
            [n, l, r] => (format!("{n}; {l}"), format!("{n}; {r}")),
            _ => return Err(Error::Parse(format!("bad ramified partition {s:?}"))),
        };
        RamifiedPartition::new(l.parse()?, r.parse()?)
    }
}

/// Which diagram monoid supplies the left components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MonoidKind {
    Symmetric,
    Jones,
    Brauer,
    Full,
}

impl MonoidKind {
    pub fn elements(self, n: usize) -> Vec<Diagram> {
        match self {
            MonoidKind::Symmetric => Diagram::all_permutations(n),
            MonoidKind::Jones => Diagram::all_jones(n),
            MonoidKind::Brauer => Diagram::all_brauer(n),
            MonoidKind::Full => Diagram::all(n),
        }
    }

    /// Exhaustive enumeration limits for R(M) and BR(M).
    fn bound(self, boxed: bool) -> usize {
        match (self, boxed) {
            (MonoidKind::Full, true) => 4,
            (_, true) => 6,
            (MonoidKind::Symmetric, false) => 5,
            (MonoidKind::Full, false) => 3,
            (_, false) => 4,
        }
    }
}

/// R(M) (all coarsenings) or BR(M) (boxed right components).
pub fn enumerate_ramified(kind: MonoidKind, n: usize, boxed: bool) -> Result<Vec<RamifiedPartition>> {
    if n == 0 {
        return domain("n must be positive");
    }
    if n > kind.bound(boxed) {
        return Err(Error::Resource(format!("{kind:?} n={n} beyond enumeration bound {}", kind.bound(boxed))));
    }
    let base = kind.elements(n);
    let mut out = Vec::new();
    if boxed {
        for mu in compositions(n)? {
            let b = Diagram::boxed(&mu);
            for i in base.iter().filter(|i| i.is_finer(&b)) {
                out.push(RamifiedPartition { left: i.clone(), right: b.clone() });
            }
        }
    } else {
        for i in &base {
            for j in i.to_setpartition().coarsenings() {
                let right = Diagram::from_setpartition(n, &j)?;
                out.push(RamifiedPartition { left: i.clone(), right });
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The singular part sR(S_n) = R(S_n) minus its units.
pub fn singular_part(n: usize) -> Result<Vec<RamifiedPartition>> {
    Ok(enumerate_ramified(MonoidKind::Symmetric, n, false)?.into_iter().filter(|x| x.left != x.right).collect())
}

/// e_1, …, e_{n−1} and z_1, …, z_{n−1}.
pub fn brs_generators(n: usize) -> Vec<RamifiedPartition> {
    (1..n)
        .map(|i| RamifiedPartition::e(i, n).unwrap())
        .chain((1..n).map(|i| RamifiedPartition::z(i, n).unwrap()))
        .collect()
}

pub fn brbr_generators(n: usize) -> Vec<RamifiedPartition> {
    let mut g = brs_generators(n);
    g.extend((1..n).map(|i| RamifiedPartition::d(i, n).unwrap()));
    g
}

pub fn brj_generators(n: usize) -> Vec<RamifiedPartition> {
    (1..n)
        .map(|i| RamifiedPartition::e(i, n).unwrap())
        .chain((1..n).map(|i| RamifiedPartition::d(i, n).unwrap()))
        .collect()
}

/// e_{i,j} (i<j) and z^r_{i,j}.
pub fn srs_generators(n: usize) -> Vec<RamifiedPartition> {
    let mut g = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            g.push(RamifiedPartition::tie(i, j, n).unwrap());
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for r in 1..n {
                g.push(RamifiedPartition::zt(r, i, j, n).unwrap());
            }
        }
    }
    g
}

/// Whether the closure of the generators is exactly the target set.
pub fn generation_check(target: &[RamifiedPartition], gens: &[RamifiedPartition], with_identity: bool) -> Result<bool> {
    let n = target.first().map_or(1, |x| x.n());
    let id = with_identity.then(|| RamifiedPartition::identity(n));
    let c = closure(gens, id, target.len() + 1)?;
    let mut t = target.to_vec();
    t.sort();
    Ok(c == t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Flavor {
    /// BR(S_n): e z.
    Brs,
    /// sR(S_n): e z^r_{i,j} ….
    Srs,
    /// BR(Br_n): e z d_1 d_3 … z′.
    BrBr,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    Z(usize),
    D(usize),
    /// z^r_{i,j}
    Zt {
        r: usize,
        i: usize,
        j: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub flavor_srs: bool,
    /// Tie generators e_{i,j}; consecutive ones print as e_i outside sR.
    pub e_part: Vec<(usize, usize)>,
    pub word: Vec<Letter>,
}

fn sub(k: usize) -> String {
    if k < 10 {
        k.to_string()
    } else {
        format!("{{{k}}}")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e_part.is_empty() && self.word.is_empty() {
            return write!(f, "1");
        }
        for &(i, j) in &self.e_part {
            if self.flavor_srs {
                write!(f, "e_{{{i},{j}}}")?;
            } else {
                write!(f, "e_{}", sub(i))?;
            }
        }
        for l in &self.word {
            match l {
                Letter::Z(i) => write!(f, "z_{}", sub(*i))?,
                Letter::D(i) => write!(f, "d_{}", sub(*i))?,
                Letter::Zt { r, i, j } => write!(f, "z_{{{i},{j}}}^{}", sub(*r))?,
            }
        }
        Ok(())
    }
}

impl NormalForm {
    /// Re-multiply the factors.
    pub fn evaluate(&self, n: usize) -> Result<RamifiedPartition> {
        let mut x = RamifiedPartition::identity(n);
        for &(i, j) in &self.e_part {
            x = x.mul(&RamifiedPartition::tie(i, j, n)?);
        }
        for l in &self.word {
            let g = match *l {
                Letter::Z(i) => RamifiedPartition::z(i, n)?,
                Letter::D(i) => RamifiedPartition::d(i, n)?,
                Letter::Zt { r, i, j } => RamifiedPartition::zt(r, i, j, n)?,
            };
            x = x.mul(&g);
        }
        Ok(x)
    }
}

fn consecutive_ties(top: &crate::setpart::SetPartition) -> Vec<(usize, usize)> {
    top.blocks().iter().flat_map(|b| b.windows(2).map(|w| (w[0], w[1])).collect::<Vec<_>>()).collect()
}

/// Normal form with the fixed lexicographically least reduced words.
pub fn normal_form(x: &RamifiedPartition, flavor: Flavor) -> Result<NormalForm> {
    match flavor {
        Flavor::Brs | Flavor::Srs => {
            let w = x.left.to_perm().ok_or_else(|| Error::Domain(format!("{x} has a non-permutation left part")))?;
            normal_form_with_word(x, flavor, &w.reduced_word())
        }
        Flavor::BrBr => brbr_normal_form(x),
    }
}

/// Normal form of an element of BR(S_n) or sR(S_n) using a caller-chosen
/// reduced word for the permutation part.
pub fn normal_form_with_word(x: &RamifiedPartition, flavor: Flavor, word: &[usize]) -> Result<NormalForm> {
    let n = x.n();
    let w = x.left.to_perm().ok_or_else(|| Error::Domain(format!("{x} has a non-permutation left part")))?;
    if word.len() != w.length() || Perm::from_word(word, n) != w {
        return domain(format!("{word:?} is not a reduced word of {w}"));
    }
    let top = x.right.top();
    match flavor {
        Flavor::Brs => {
            if !x.right.is_boxed() {
                return domain(format!("{x} is not in BR(S_n)"));
            }
            Ok(NormalForm {
                flavor_srs: false,
                e_part: consecutive_ties(&top),
                word: word.iter().map(|&i| Letter::Z(i)).collect(),
            })
        }
        Flavor::Srs => {
            if x.left == x.right {
                return domain(format!("{x} is a unit, not in sR(S_n)"));
            }
            let mut ties = consecutive_ties(&top);
            if word.is_empty() {
                return Ok(NormalForm { flavor_srs: true, e_part: ties, word: vec![] });
            }
            let (mut p, mut q) = ties.remove(0);
            let mut letters = Vec::new();
            for &r in word {
                letters.push(Letter::Zt { r, i: p, j: q });
                let s = Perm::s(r, n);
                let (a, b) = (s.apply(p), s.apply(q));
                (p, q) = (a.min(b), a.max(b));
            }
            Ok(NormalForm { flavor_srs: true, e_part: ties, word: letters })
        }
        Flavor::BrBr => domain("BR(Br_n) normal forms do not take a permutation word"),
    }
}

/// (I, J) = e · z(s) · d… · z(s′), factoring I box by box as s·t_{o+1}t_{o+3}…·s′.
fn brbr_normal_form(x: &RamifiedPartition) -> Result<NormalForm> {
    let n = x.n();
    if !x.left.is_brauer() || !x.right.is_boxed() {
        return domain(format!("{x} is not in BR(Br_n)"));
    }
    let mu = x.right.boxed_composition().expect("boxed");
    let lab = x.left.labels();
    let mut s_img = vec![0usize; n];
    let mut s2_img = vec![0usize; n];
    let mut ds = Vec::new();
    for (o, &m) in mu.offsets().iter().zip(mu.parts()) {
        let top: Vec<usize> = (*o..o + m).collect();
        let bot: Vec<usize> = (n + o..n + o + m).collect();
        let mut top_arcs = Vec::new();
        let mut through = Vec::new();
        for &p in &top {
            if let Some(&q) = top.iter().find(|&&q| q > p && lab[q] == lab[p]) {
                top_arcs.push((p, q));
            } else if top.iter().all(|&q| q == p || lab[q] != lab[p]) {
                let b = *bot.iter().find(|&&q| lab[q] == lab[p]).expect("brauer strand stays in its box");
                through.push((p, b - n));
            }
        }
        let mut bot_arcs = Vec::new();
        for &p in &bot {
            if let Some(&q) = bot.iter().find(|&&q| q > p && lab[q] == lab[p]) {
                bot_arcs.push((p - n, q - n));
            }
        }
        let k = top_arcs.len();
        if k == 0 {
            for &(p, b) in &through {
                s_img[p] = p;
                s2_img[p] = b;
            }
            continue;
        }
        for (idx, (&(a, b), &(a2, b2))) in top_arcs.iter().zip(&bot_arcs).enumerate() {
            s_img[a] = o + 2 * idx;
            s_img[b] = o + 2 * idx + 1;
            s2_img[o + 2 * idx] = a2;
            s2_img[o + 2 * idx + 1] = b2;
            ds.push(o + 2 * idx + 1);
        }
        for (j, &(p, b)) in through.iter().enumerate() {
            s_img[p] = o + 2 * k + j;
            s2_img[o + 2 * k + j] = b;
        }
    }
    let s = Perm::from_images(&s_img.iter().map(|x| x + 1).collect::<Vec<_>>())?;
    let s2 = Perm::from_images(&s2_img.iter().map(|x| x + 1).collect::<Vec<_>>())?;
    let mut word: Vec<Letter> = s.reduced_word().into_iter().map(Letter::Z).collect();
    word.extend(ds.into_iter().map(Letter::D));
    word.extend(s2.reduced_word().into_iter().map(Letter::Z));
    Ok(NormalForm { flavor_srs: false, e_part: consecutive_ties(&x.right.top()), word })
}

/// Z(M) for an enumerated monoid, checked against generators and elements.
pub fn center(elements: &[RamifiedPartition], gens: &[RamifiedPartition]) -> Result<Vec<RamifiedPartition>> {
    let a = crate::monoid::center_by_generators(elements, gens);
    let b = crate::monoid::center_by_elements(elements);
    if a != b {
        return Err(Error::Internal("generator and element centers differ".into()));
    }
    Ok(a)
}

/// The central elements (1, b_μ) of BR(M).
pub fn boxed_identities(n: usize) -> Result<BTreeSet<RamifiedPartition>> {
    Ok(compositions(n)?
        .iter()
        .map(|mu: &Composition| RamifiedPartition { left: Diagram::identity(n), right: Diagram::boxed(mu) })
        .collect())
}
