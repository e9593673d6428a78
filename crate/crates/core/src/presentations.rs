//! Monoid presentations of the diagram and ramified monoids, and a checker that
//! compares each presentation with the enumerated monoid.
//!
//! Generators are ordered ties first, then permutation type, then tangle type
//! (e < s, z < t, d), lowest index first. Completion depends on this order.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::diagram::Diagram;
use crate::error::{Error, Result};
use crate::kb::{kb_complete, KbBudget, RewriteSystem, Word};
use crate::monoid::{closure, Monoid};
use crate::ramified::{enumerate_ramified, singular_part, MonoidKind, RamifiedPartition};
use crate::report::Status;
use crate::setpart::SetPartition;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    pub name: String,
    pub alphabet: Vec<String>,
    pub relations: Vec<(Word, Word)>,
    /// A semigroup presentation; the empty word plays the adjoined identity.
    pub semigroup: bool,
}

impl Presentation {
    pub fn new(name: impl Into<String>, alphabet: Vec<String>) -> Presentation {
        Presentation { name: name.into(), alphabet, relations: Vec::new(), semigroup: false }
    }

    fn letter(&self, g: &str) -> Result<usize> {
        self.alphabet.iter().position(|a| a == g).ok_or_else(|| Error::Parse(format!("unknown generator {g:?}")))
    }

    /// Space-separated generator names; `1` is the empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word> {
        s.split_whitespace().filter(|t| *t != "1").map(|t| self.letter(t)).collect()
    }

    pub fn format_word(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "1".into();
        }
        w.iter().map(|&x| self.alphabet[x].as_str()).collect::<Vec<_>>().join(" ")
    }

    fn rel(&mut self, u: &str, v: &str) {
        let (a, b) = (self.parse_word(u).expect("preset word"), self.parse_word(v).expect("preset word"));
        self.relations.push((a, b));
    }

    /// One relation per line, `u = v`; blank lines and `#` comments are skipped.
    pub fn from_text(name: &str, alphabet: Vec<String>, text: &str) -> Result<Presentation> {
        let mut p = Presentation::new(name, alphabet);
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            let (u, v) = line.split_once('=').ok_or_else(|| Error::Parse(format!("no '=' in {line:?}")))?;
            let pair = (p.parse_word(u)?, p.parse_word(v)?);
            p.relations.push(pair);
        }
        Ok(p)
    }

    pub fn to_text(&self) -> String {
        self.relations.iter().map(|(u, v)| format!("{} = {}\n", self.format_word(u), self.format_word(v))).collect()
    }

    pub fn without_relation(&self, u: &str, v: &str) -> Result<Presentation> {
        let pair = (self.parse_word(u)?, self.parse_word(v)?);
        let mut p = self.clone();
        p.relations.retain(|r| r != &pair && (r.1.clone(), r.0.clone()) != pair);
        if p.relations.len() == self.relations.len() {
            return Err(Error::Domain(format!("relation {u} = {v} not present")));
        }
        p.name = format!("{} without {u} = {v}", self.name);
        Ok(p)
    }

    pub fn complete(&self, budget: &KbBudget) -> RewriteSystem {
        kb_complete(self.alphabet.len(), &self.relations, budget)
    }
}

fn names(prefix: &str, n: usize) -> Vec<String> {
    (1..n).map(|i| format!("{prefix}{i}")).collect()
}

fn adjacent(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) == 1 {
                v.push((i, j));
            }
        }
    }
    v
}

fn far(n: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for i in 1..n {
        for j in i + 2..n {
            v.push((i, j));
        }
    }
    v
}

fn tie_name(i: usize, j: usize) -> String {
    format!("e_{}_{}", i.min(j), i.max(j))
}

fn ztie_name(r: usize, i: usize, j: usize) -> String {
    format!("z_{}_{}^{r}", i.min(j), i.max(j))
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect()
}

/// Tie relations e_i² = e_i, e_ie_j = e_je_i.
fn tie_relations(p: &mut Presentation, n: usize, e: &str) {
    for i in 1..n {
        p.rel(&format!("{e}{i} {e}{i}"), &format!("{e}{i}"));
        for j in i + 1..n {
            p.rel(&format!("{e}{i} {e}{j}"), &format!("{e}{j} {e}{i}"));
        }
    }
}

/// Braid and far-commutation relations for one family.
fn braid_relations(p: &mut Presentation, n: usize, z: &str) {
    for (i, j) in adjacent(n).into_iter().filter(|(i, j)| i < j) {
        p.rel(&format!("{z}{i} {z}{j} {z}{i}"), &format!("{z}{j} {z}{i} {z}{j}"));
    }
    for (i, j) in far(n) {
        p.rel(&format!("{z}{i} {z}{j}"), &format!("{z}{j} {z}{i}"));
    }
}

/// z relations of the boxed symmetric case: braids, e_iz_j = z_je_i, z_i² = e_i, e_iz_i = z_i.
fn tied_braid_relations(p: &mut Presentation, n: usize, e: &str, z: &str) {
    braid_relations(p, n, z);
    for i in 1..n {
        for j in 1..n {
            p.rel(&format!("{e}{i} {z}{j}"), &format!("{z}{j} {e}{i}"));
        }
    }
    for i in 1..n {
        p.rel(&format!("{z}{i} {z}{i}"), &format!("{e}{i}"));
        p.rel(&format!("{e}{i} {z}{i}"), &format!("{z}{i}"));
    }
}

/// d relations: d_i² = d_i, far commutation, d_ie_j = e_jd_i, d_ie_i = d_i, d_id_jd_i = e_jd_ie_j.
fn tangle_relations(p: &mut Presentation, n: usize, e: &str, d: &str) {
    for i in 1..n {
        p.rel(&format!("{d}{i} {d}{i}"), &format!("{d}{i}"));
    }
    for (i, j) in far(n) {
        p.rel(&format!("{d}{i} {d}{j}"), &format!("{d}{j} {d}{i}"));
    }
    for i in 1..n {
        for j in 1..n {
            p.rel(&format!("{d}{i} {e}{j}"), &format!("{e}{j} {d}{i}"));
        }
        p.rel(&format!("{d}{i} {e}{i}"), &format!("{d}{i}"));
    }
    for (i, j) in adjacent(n) {
        p.rel(&format!("{d}{i} {d}{j} {d}{i}"), &format!("{e}{j} {d}{i} {e}{j}"));
    }
}

/// Mixed z/d relations of the boxed Brauer case.
fn mixed_relations(p: &mut Presentation, n: usize, z: &str, d: &str) {
    for (i, j) in adjacent(n) {
        p.rel(&format!("{z}{i} {d}{j} {d}{i}"), &format!("{z}{j} {d}{i}"));
        p.rel(&format!("{d}{i} {d}{j} {z}{i}"), &format!("{d}{i} {z}{j}"));
    }
    for i in 1..n {
        p.rel(&format!("{z}{i} {d}{i}"), &format!("{d}{i}"));
        p.rel(&format!("{d}{i} {z}{i}"), &format!("{d}{i}"));
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                p.rel(&format!("{z}{i} {d}{j}"), &format!("{d}{j} {z}{i}"));
            }
        }
    }
}

/// Set partitions of [n] under join, on the ties e_{i,j}.
pub fn pn(n: usize) -> Presentation {
    let alphabet = pairs(n).into_iter().map(|(i, j)| tie_name(i, j)).collect();
    let mut p = Presentation::new(format!("pn({n})"), alphabet);
    let ps = pairs(n);
    for &(i, j) in &ps {
        p.rel(&format!("{0} {0}", tie_name(i, j)), &tie_name(i, j));
    }
    for (a, &(i, j)) in ps.iter().enumerate() {
        for &(r, s) in &ps[a + 1..] {
            p.rel(&format!("{} {}", tie_name(i, j), tie_name(r, s)), &format!("{} {}", tie_name(r, s), tie_name(i, j)));
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (ij, ik, jk) = (tie_name(i, j), tie_name(i, k), tie_name(j, k));
                p.rel(&format!("{ij} {ik}"), &format!("{ij} {jk}"));
                p.rel(&format!("{ij} {jk}"), &format!("{ik} {jk}"));
            }
        }
    }
    p
}

/// The Brauer monoid on s_i, t_i.
pub fn brauer(n: usize) -> Presentation {
    let mut alphabet = names("s", n);
    alphabet.extend(names("t", n));
    let mut p = Presentation::new(format!("brauer({n})"), alphabet);
    for i in 1..n {
        p.rel(&format!("s{i} s{i}"), "1");
    }
    braid_relations(&mut p, n, "s");
    for i in 1..n {
        p.rel(&format!("t{i} t{i}"), &format!("t{i}"));
    }
    for (i, j) in adjacent(n) {
        p.rel(&format!("t{i} t{j} t{i}"), &format!("t{i}"));
    }
    for (i, j) in far(n) {
        p.rel(&format!("t{i} t{j}"), &format!("t{j} t{i}"));
    }
    for (i, j) in adjacent(n) {
        p.rel(&format!("s{i} t{j} t{i}"), &format!("s{j} t{i}"));
        p.rel(&format!("t{i} t{j} s{i}"), &format!("t{i} s{j}"));
    }
    for i in 1..n {
        p.rel(&format!("t{i} s{i}"), &format!("t{i}"));
        p.rel(&format!("s{i} t{i}"), &format!("t{i}"));
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                p.rel(&format!("t{i} s{j}"), &format!("s{j} t{i}"));
            }
        }
    }
    p
}

/// The ramified symmetric monoid on e_i, s_i.
pub fn rsn(n: usize) -> Presentation {
    let mut alphabet = names("e", n);
    alphabet.extend(names("s", n));
    let mut p = Presentation::new(format!("rsn({n})"), alphabet);
    tie_relations(&mut p, n, "e");
    for i in 1..n {
        p.rel(&format!("s{i} s{i}"), "1");
    }
    braid_relations(&mut p, n, "s");
    for (i, j) in adjacent(n) {
        p.rel(&format!("e{i} s{j} s{i}"), &format!("s{j} s{i} e{j}"));
        p.rel(&format!("e{i} e{j} s{i}"), &format!("e{j} s{i} e{j}"));
        p.rel(&format!("e{j} s{i} e{j}"), &format!("s{i} e{j} e{i}"));
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) != 1 {
                p.rel(&format!("s{i} e{j}"), &format!("e{j} s{i}"));
            }
        }
    }
    p
}

/// BR(S_n) on e_i, z_i.
pub fn brsn(n: usize) -> Presentation {
    let mut alphabet = names("e", n);
    alphabet.extend(names("z", n));
    let mut p = Presentation::new(format!("brsn({n})"), alphabet);
    tie_relations(&mut p, n, "e");
    tied_braid_relations(&mut p, n, "e", "z");
    p
}

/// BR(S_n) on z_i alone, after eliminating e_i = z_i².
pub fn brsn_z(n: usize) -> Presentation {
    let mut p = Presentation::new(format!("brsn-z({n})"), names("z", n));
    braid_relations(&mut p, n, "z");
    for i in 1..n {
        p.rel(&format!("z{i} z{i} z{i}"), &format!("z{i}"));
        for j in 1..n {
            if i < j {
                p.rel(&format!("z{i} z{i} z{j} z{j}"), &format!("z{j} z{j} z{i} z{i}"));
            }
            if i != j {
                p.rel(&format!("z{i} z{i} z{j}"), &format!("z{j} z{i} z{i}"));
            }
        }
    }
    p
}

/// s_r applied to a point.
fn sr(r: usize, x: usize) -> usize {
    if x == r {
        r + 1
    } else if x == r + 1 {
        r
    } else {
        x
    }
}

/// sR(S_n) on e_{i,j} and z^r_{i,j}, with the permutation actions expanded into ground instances.
pub fn srsn(n: usize) -> Presentation {
    let mut alphabet: Vec<String> = pairs(n).into_iter().map(|(i, j)| tie_name(i, j)).collect();
    for (i, j) in pairs(n) {
        for r in 1..n {
            alphabet.push(ztie_name(r, i, j));
        }
    }
    let mut p = pn(n);
    p.alphabet = alphabet;
    p.name = format!("srsn({n})");
    p.semigroup = true;
    let z = |r: usize, i: usize, j: usize| ztie_name(r, i, j);
    for (i, j) in pairs(n) {
        for r in 1..n {
            for t in 1..n {
                if r.abs_diff(t) == 1 {
                    let (ri, rj) = (sr(r, i), sr(r, j));
                    let (ti, tj) = (sr(t, i), sr(t, j));
                    let lhs = format!("{} {} {}", z(r, i, j), z(t, ri, rj), z(r, sr(t, ri), sr(t, rj)));
                    let rhs = format!("{} {} {}", z(t, i, j), z(r, ti, tj), z(t, sr(r, ti), sr(r, tj)));
                    p.rel(&lhs, &rhs);
                } else if r.abs_diff(t) > 1 && r < t {
                    let lhs = format!("{} {}", z(r, i, j), z(t, sr(r, i), sr(r, j)));
                    let rhs = format!("{} {}", z(t, i, j), z(r, sr(t, i), sr(t, j)));
                    p.rel(&lhs, &rhs);
                }
            }
        }
    }
    for (i, j) in pairs(n) {
        for r in 1..n {
            for (h, k) in pairs(n) {
                let img = tie_name(sr(r, h), sr(r, k));
                p.rel(&format!("{} {}", z(r, i, j), z(r, h, k)), &format!("{} {img}", tie_name(i, j)));
                p.rel(&format!("{} {}", z(r, i, j), tie_name(h, k)), &format!("{img} {}", z(r, i, j)));
            }
            p.rel(&format!("{} {}", tie_name(i, j), z(r, i, j)), &z(r, i, j));
        }
    }
    p
}

/// BR(J_n) on e_i, d_i.
pub fn brjn(n: usize) -> Presentation {
    let mut alphabet = names("e", n);
    alphabet.extend(names("d", n));
    let mut p = Presentation::new(format!("brjn({n})"), alphabet);
    tie_relations(&mut p, n, "e");
    tangle_relations(&mut p, n, "e", "d");
    p
}

/// BR(Br_n) on e_i, z_i, d_i.
pub fn brbrn(n: usize) -> Presentation {
    let mut alphabet = names("e", n);
    alphabet.extend(names("z", n));
    alphabet.extend(names("d", n));
    let mut p = Presentation::new(format!("brbrn({n})"), alphabet);
    tie_relations(&mut p, n, "e");
    tied_braid_relations(&mut p, n, "e", "z");
    tangle_relations(&mut p, n, "e", "d");
    mixed_relations(&mut p, n, "z", "d");
    p
}

/// The abstract monoid on letters E_i, Z_i, D_i, written out relation by relation.
pub fn brbrn_abstract(n: usize) -> Presentation {
    let mut alphabet = names("E", n);
    alphabet.extend(names("Z", n));
    alphabet.extend(names("D", n));
    let mut p = Presentation::new(format!("brbrn-abstract({n})"), alphabet);
    let idx: Vec<usize> = (1..n).collect();
    for &i in &idx {
        p.rel(&format!("E{i} E{i}"), &format!("E{i}"));
        for &j in &idx {
            if i != j {
                p.rel(&format!("E{i} E{j}"), &format!("E{j} E{i}"));
            }
        }
    }
    for &i in &idx {
        for &j in &idx {
            match i.abs_diff(j) {
                1 => p.rel(&format!("Z{i} Z{j} Z{i}"), &format!("Z{j} Z{i} Z{j}")),
                0 => {}
                _ => p.rel(&format!("Z{i} Z{j}"), &format!("Z{j} Z{i}")),
            }
        }
    }
    for &i in &idx {
        for &j in &idx {
            p.rel(&format!("E{i} Z{j}"), &format!("Z{j} E{i}"));
        }
        p.rel(&format!("Z{i} Z{i}"), &format!("E{i}"));
        p.rel(&format!("E{i} Z{i}"), &format!("Z{i}"));
    }
    for &i in &idx {
        p.rel(&format!("D{i} D{i}"), &format!("D{i}"));
        for &j in &idx {
            if i.abs_diff(j) > 1 {
                p.rel(&format!("D{i} D{j}"), &format!("D{j} D{i}"));
            }
        }
    }
    for &i in &idx {
        for &j in &idx {
            p.rel(&format!("D{i} E{j}"), &format!("E{j} D{i}"));
            if i.abs_diff(j) == 1 {
                p.rel(&format!("D{i} D{j} D{i}"), &format!("E{j} D{i} E{j}"));
            }
        }
        p.rel(&format!("D{i} E{i}"), &format!("D{i}"));
    }
    for &i in &idx {
        for &j in &idx {
            match i.abs_diff(j) {
                1 => {
                    p.rel(&format!("Z{i} D{j} D{i}"), &format!("Z{j} D{i}"));
                    p.rel(&format!("D{i} D{j} Z{i}"), &format!("D{i} Z{j}"));
                }
                0 => {
                    p.rel(&format!("Z{i} D{i}"), &format!("D{i}"));
                    p.rel(&format!("D{i} Z{i}"), &format!("D{i}"));
                }
                _ => p.rel(&format!("Z{i} D{j}"), &format!("D{j} Z{i}")),
            }
        }
    }
    p
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    Pn,
    Brauer,
    Rsn,
    Brsn,
    BrsnZ,
    Srsn,
    Brjn,
    Brbrn,
    BrbrnAbstract,
}

impl Preset {
    pub const ALL: [Preset; 9] = [
        Preset::Pn,
        Preset::Brauer,
        Preset::Rsn,
        Preset::Brsn,
        Preset::BrsnZ,
        Preset::Srsn,
        Preset::Brjn,
        Preset::Brbrn,
        Preset::BrbrnAbstract,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Pn => "pn",
            Preset::Brauer => "brauer",
            Preset::Rsn => "rsn",
            Preset::Brsn => "brsn",
            Preset::BrsnZ => "brsn-z",
            Preset::Srsn => "srsn",
            Preset::Brjn => "brjn",
            Preset::Brbrn => "brbrn",
            Preset::BrbrnAbstract => "brbrn-abstract",
        }
    }

    pub fn presentation(self, n: usize) -> Presentation {
        match self {
            Preset::Pn => pn(n),
            Preset::Brauer => brauer(n),
            Preset::Rsn => rsn(n),
            Preset::Brsn => brsn(n),
            Preset::BrsnZ => brsn_z(n),
            Preset::Srsn => srsn(n),
            Preset::Brjn => brjn(n),
            Preset::Brbrn => brbrn(n),
            Preset::BrbrnAbstract => brbrn_abstract(n),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Preset {
    type Err = Error;
    fn from_str(s: &str) -> Result<Preset> {
        Preset::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| Error::Parse(format!("unknown preset {s:?}")))
    }
}

/// The concrete monoid: enumerated elements, images of the generators and the identity.
pub struct Target<T> {
    pub elements: Vec<T>,
    pub images: Vec<T>,
    pub identity: T,
}

fn ramified_images(p: &Presentation, n: usize) -> Result<Vec<RamifiedPartition>> {
    p.alphabet
        .iter()
        .map(|g| {
            let g = g.to_lowercase();
            if let Some(rest) = g.strip_prefix("e_") {
                let (i, j) = rest.split_once('_').ok_or_else(|| Error::Parse(g.clone()))?;
                return RamifiedPartition::tie(parse(i)?, parse(j)?, n);
            }
            if let Some(rest) = g.strip_prefix("z_") {
                let (ij, r) = rest.split_once('^').ok_or_else(|| Error::Parse(g.clone()))?;
                let (i, j) = ij.split_once('_').ok_or_else(|| Error::Parse(g.clone()))?;
                return RamifiedPartition::zt(parse(r)?, parse(i)?, parse(j)?, n);
            }
            let i = parse(&g[1..])?;
            match &g[..1] {
                "e" => RamifiedPartition::e(i, n),
                "s" => RamifiedPartition::s(i, n),
                "z" => RamifiedPartition::z(i, n),
                "d" => RamifiedPartition::d(i, n),
                "t" => RamifiedPartition::t(i, n),
                _ => Err(Error::Parse(format!("generator {g:?}"))),
            }
        })
        .collect()
}

fn parse(s: &str) -> Result<usize> {
    s.parse().map_err(|_| Error::Parse(format!("bad index {s:?}")))
}

pub fn ramified_target(preset: Preset, n: usize) -> Result<Target<RamifiedPartition>> {
    let p = preset.presentation(n);
    let elements = match preset {
        Preset::Pn => {
            let id = Diagram::identity(n);
            SetPartition::all_n(n)
                .into_iter()
                .map(|sp| RamifiedPartition::new(id.clone(), id.join_top(&sp)))
                .collect::<Result<Vec<_>>>()?
        }
        Preset::Rsn => enumerate_ramified(MonoidKind::Symmetric, n, false)?,
        Preset::Brsn | Preset::BrsnZ => enumerate_ramified(MonoidKind::Symmetric, n, true)?,
        Preset::Srsn => singular_part(n)?,
        Preset::Brjn => enumerate_ramified(MonoidKind::Jones, n, true)?,
        Preset::Brbrn | Preset::BrbrnAbstract => enumerate_ramified(MonoidKind::Brauer, n, true)?,
        Preset::Brauer => return Err(Error::Domain("the Brauer preset targets plain diagrams".into())),
    };
    Ok(Target { elements, images: ramified_images(&p, n)?, identity: RamifiedPartition::identity(n) })
}

pub fn brauer_target(n: usize) -> Result<Target<Diagram>> {
    let images = (1..n).map(|i| Diagram::s(i, n)).chain((1..n).map(|i| Diagram::t(i, n))).collect::<Result<_>>()?;
    Ok(Target { elements: Diagram::all_brauer(n), images, identity: Diagram::identity(n) })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Injectivity {
    /// Completion finished and the normal forms were counted.
    KnuthBendix,
    /// Completion ran out of budget; the irreducible words of the partial system were counted.
    IrreducibleCount,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationReport {
    pub presentation: String,
    pub generators: usize,
    pub relations: usize,
    pub target_size: usize,
    /// First relation failing in the target.
    pub hom_witness: Option<String>,
    pub surjective: bool,
    pub normal_forms: Option<usize>,
    pub injectivity: Injectivity,
    pub rules: usize,
    pub status: Status,
    pub witness: Option<String>,
}

fn evaluate<T: Monoid>(w: &[usize], images: &[T], identity: &T) -> T {
    w.iter().fold(identity.clone(), |acc, &x| acc.mul(&images[x]))
}

/// Homomorphism, surjectivity and injectivity of the presentation onto the target.
pub fn presentation_check<T: Monoid>(
    p: &Presentation,
    target: &Target<T>,
    budget: &KbBudget,
) -> Result<PresentationReport> {
    if target.images.len() != p.alphabet.len() {
        return Err(Error::Domain("one image per generator is required".into()));
    }
    let images = &target.images;
    let hom_witness = p.relations.iter().find_map(|(u, v)| {
        (evaluate(u, images, &target.identity) != evaluate(v, images, &target.identity))
            .then(|| format!("{} = {}", p.format_word(u), p.format_word(v)))
    });
    let mut elements = target.elements.clone();
    elements.sort();
    let id = (!p.semigroup).then(|| target.identity.clone());
    let surjective = closure(images, id, elements.len() + 1).map(|c| c == elements).unwrap_or(false);

    let rs = p.complete(budget);
    let extra = usize::from(p.semigroup);
    let cap = elements.len() + extra;
    let (normal_forms, injectivity, words) = match rs.irreducible_words(cap) {
        Some(ws) => {
            let how = if rs.is_complete() { Injectivity::KnuthBendix } else { Injectivity::IrreducibleCount };
            (Some(ws.len() - extra), how, ws)
        }
        None if rs.is_complete() => (None, Injectivity::KnuthBendix, rs.first_irreducible_words(cap + 1)),
        None => (None, Injectivity::Unknown, Vec::new()),
    };

    let mut witness = hom_witness.clone();
    let status = if hom_witness.is_some() || !surjective {
        if witness.is_none() {
            witness = Some("generator images do not generate the target".into());
        }
        Status::Fail
    } else {
        match (&injectivity, normal_forms) {
            (_, Some(k)) if k == elements.len() => Status::Pass,
            (Injectivity::IrreducibleCount, Some(_)) => Status::Inconclusive,
            (Injectivity::KnuthBendix, _) => {
                witness = collision(p, &words, images, &target.identity)
                    .or_else(|| Some(format!("more than {} normal forms", elements.len())));
                Status::Fail
            }
            _ => Status::Inconclusive,
        }
    };
    Ok(PresentationReport {
        presentation: p.name.clone(),
        generators: p.alphabet.len(),
        relations: p.relations.len(),
        target_size: elements.len(),
        hom_witness,
        surjective,
        normal_forms,
        injectivity,
        rules: rs.num_rules(),
        status,
        witness,
    })
}

/// Two distinct normal forms with the same image.
fn collision<T: Monoid>(p: &Presentation, words: &[Word], images: &[T], identity: &T) -> Option<String> {
    let mut seen: HashMap<T, &Word> = HashMap::new();
    for w in words.iter().filter(|w| !(p.semigroup && w.is_empty())) {
        if let Some(u) = seen.insert(evaluate(w, images, identity), w) {
            return Some(format!("{} and {} have the same image", p.format_word(u), p.format_word(w)));
        }
    }
    None
}

pub fn run_preset(preset: Preset, n: usize, budget: &KbBudget) -> Result<PresentationReport> {
    if n < 2 {
        return Err(Error::Domain("presets need n ≥ 2".into()));
    }
    let p = preset.presentation(n);
    match preset {
        Preset::Brauer => presentation_check(&p, &brauer_target(n)?, budget),
        _ => presentation_check(&p, &ramified_target(preset, n)?, budget),
    }
}

/// Instances of three identities among the z^r_{i,j}, e_{i,j} generators, as word pairs.
pub fn srs_identities(n: usize) -> BTreeMap<&'static str, Vec<(Word, Word)>> {
    let p = srsn(n);
    let w = |s: String| p.parse_word(&s).expect("srs word");
    let mut out: BTreeMap<&'static str, Vec<(Word, Word)>> = BTreeMap::new();
    let ps = pairs(n);
    for &(i, j) in &ps {
        for &(h, k) in &ps {
            for r in 1..n {
                out.entry("tie-swap").or_default().push((
                    w(format!("{} {}", tie_name(i, j), ztie_name(r, h, k))),
                    w(format!("{} {}", tie_name(h, k), ztie_name(r, i, j))),
                ));
                for t in 1..n {
                    let tr = |x: usize| sr(t, sr(r, x));
                    if r.abs_diff(t) > 1 {
                        out.entry("far").or_default().push((
                            w(format!("{} {}", ztie_name(r, i, j), ztie_name(t, h, k))),
                            w(format!("{} {}", ztie_name(t, i, j), ztie_name(r, tr(h), tr(k)))),
                        ));
                    }
                    if r.abs_diff(t) == 1 {
                        for &(a, b) in &ps {
                            out.entry("braid").or_default().push((
                                w(format!("{} {} {}", ztie_name(r, i, j), ztie_name(t, h, k), ztie_name(r, a, b))),
                                w(format!(
                                    "{} {} {}",
                                    ztie_name(t, i, j),
                                    ztie_name(r, tr(h), tr(k)),
                                    ztie_name(t, tr(a), tr(b))
                                )),
                            ));
                        }
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::bell;

    fn pass(preset: Preset, n: usize) -> PresentationReport {
        let r = run_preset(preset, n, &KbBudget::default()).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
        r
    }

    #[test]
    fn set_partitions() {
        for n in 2..=4 {
            assert_eq!(pass(Preset::Pn, n).normal_forms, Some(bell(n) as usize));
        }
    }

    #[test]
    fn brauer_n3() {
        assert_eq!(pass(Preset::Brauer, 3).normal_forms, Some(15));
    }

    #[test]
    fn brauer_without_absorption_fails() {
        let mut p = brauer(3);
        for i in 1..3 {
            p = p.without_relation(&format!("t{i} s{i}"), &format!("t{i}")).unwrap();
        }
        let r = presentation_check(&p, &brauer_target(3).unwrap(), &KbBudget::default()).unwrap();
        assert_eq!(r.status, Status::Fail, "{r:?}");
        assert!(r.hom_witness.is_none() && r.surjective);
        assert!(r.witness.unwrap().contains("same image"));
    }

    #[test]
    fn boxed_symmetric() {
        assert_eq!(pass(Preset::Brsn, 3).normal_forms, Some(11));
        assert_eq!(pass(Preset::BrsnZ, 3).normal_forms, Some(11));
    }

    #[test]
    fn ramified_symmetric() {
        assert_eq!(pass(Preset::Rsn, 3).normal_forms, Some(30));
    }

    #[test]
    fn boxed_jones_and_brauer() {
        assert_eq!(pass(Preset::Brjn, 3).normal_forms, Some(10));
        assert_eq!(pass(Preset::Brbrn, 3).normal_forms, Some(22));
        assert_eq!(pass(Preset::BrbrnAbstract, 3).normal_forms, Some(22));
    }

    #[test]
    fn singular_part_semigroup() {
        let r = pass(Preset::Srsn, 3);
        assert_eq!(r.normal_forms, Some(24));
        assert_eq!(r.generators, 9);
    }

    #[test]
    fn n4_rows() {
        assert_eq!(pass(Preset::Brauer, 4).normal_forms, Some(105));
        assert_eq!(pass(Preset::Brsn, 4).normal_forms, Some(47));
        assert_eq!(pass(Preset::BrsnZ, 4).normal_forms, Some(47));
        assert_eq!(pass(Preset::Brjn, 4).normal_forms, Some(35));
    }

    #[test]
    fn wrong_image_is_caught() {
        let mut t = ramified_target(Preset::Brsn, 3).unwrap();
        t.images.swap(0, 2);
        let r = presentation_check(&brsn(3), &t, &KbBudget::default()).unwrap();
        assert_eq!(r.status, Status::Fail);
        assert!(r.hom_witness.is_some());
    }

    #[test]
    fn text_round_trip() {
        let p = brjn(3);
        let q = Presentation::from_text("copy", p.alphabet.clone(), &p.to_text()).unwrap();
        assert_eq!(p.relations, q.relations);
        assert!(Presentation::from_text("x", vec!["a".into()], "a b = a").is_err());
    }

    #[test]
    fn srs_far_identities_n4() {
        let r = pass(Preset::Srsn, 4);
        assert_eq!(r.normal_forms, Some(336));
        let p = srsn(4);
        let rs = p.complete(&KbBudget::default());
        let far = &srs_identities(4)["far"];
        assert!(!far.is_empty());
        assert!(far.iter().all(|(u, v)| rs.word_equiv(u, v).unwrap()));
    }

    #[test]
    fn srs_identities_hold() {
        let p = srsn(3);
        let rs = p.complete(&KbBudget::default());
        let t = ramified_target(Preset::Srsn, 3).unwrap();
        let id = RamifiedPartition::identity(3);
        for (name, inst) in srs_identities(3) {
            for (u, v) in inst {
                assert!(rs.word_equiv(&u, &v).unwrap(), "{name}: {} = {}", p.format_word(&u), p.format_word(&v));
                assert_eq!(evaluate(&u, &t.images, &id), evaluate(&v, &t.images, &id));
            }
        }
    }
}
