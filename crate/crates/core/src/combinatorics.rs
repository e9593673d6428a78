//! Compositions, partitions, multicompositions, tableaux and counting functions.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::perm::Perm;

/// Largest n accepted by the exhaustive composition enumerators.
pub const COMPOSITION_BOUND: usize = 20;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.is_empty() || parts.contains(&0) {
            return domain(format!("{parts:?} is not a composition"));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_partition(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Number of columns of the Young diagram (the largest part).
    pub fn columns(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Internal cut points {μ_1, μ_1+μ_2, ...} excluding the total.
    pub fn cuts(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.0[..self.0.len() - 1] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn from_cuts(n: usize, cuts: &[usize]) -> Composition {
        let mut parts = Vec::new();
        let mut prev = 0;
        for &c in cuts.iter().chain(std::iter::once(&n)) {
            parts.push(c - prev);
            prev = c;
        }
        Composition(parts)
    }

    /// Start offsets of the parts (0-based).
    pub fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.0
            .iter()
            .map(|&p| {
                let o = acc;
                acc += p;
                o
            })
            .collect()
    }

    /// μ ⊴ λ in dominance order (partial sums of μ never exceed those of λ).
    pub fn dominated_by(&self, other: &Composition) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for k in 0..self.len().max(other.len()) {
            a += self.0.get(k).copied().unwrap_or(0);
            b += other.0.get(k).copied().unwrap_or(0);
            if a > b {
                return false;
            }
        }
        true
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{s}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

/// A composition with non-increasing parts.
pub type IntPartition = Composition;

pub fn compositions(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return domain("compositions of 0");
    }
    if n > COMPOSITION_BOUND {
        return Err(Error::Resource(format!("compositions({n}) exceeds bound {COMPOSITION_BOUND}")));
    }
    fn rec(n: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in 1..=n {
            prefix.push(p);
            rec(n - p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Partitions of n in lexicographic order of their parts.
pub fn partitions(n: usize) -> Vec<IntPartition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if n == 0 {
            out.push(Composition(prefix.clone()));
            return;
        }
        for p in 1..=n.min(max) {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, n, &mut Vec::new(), &mut out);
    }
    out
}

/// Supremum in the composition lattice: intersect the cut sets.
pub fn composition_join(a: &Composition, b: &Composition) -> Result<Composition> {
    if a.size() != b.size() {
        return domain(format!("size mismatch {a} vs {b}"));
    }
    let cb = b.cuts();
    let cuts: Vec<usize> = a.cuts().into_iter().filter(|c| cb.contains(c)).collect();
    Ok(Composition::from_cuts(a.size(), &cuts))
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multicomposition(pub Vec<Composition>);

impl Multicomposition {
    pub fn components(&self) -> &[Composition] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|c| c.size()).sum()
    }

    /// comp(𝛍): the composition of component sizes.
    pub fn comp(&self) -> Composition {
        Composition(self.0.iter().map(|c| c.size()).collect())
    }

    pub fn is_multipartition(&self) -> bool {
        self.0.iter().all(|c| c.is_partition())
    }

    pub fn at_most_two_columns(&self) -> bool {
        self.0.iter().all(|c| c.columns() <= 2)
    }
}

impl fmt::Debug for Multicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Multicomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// All multipartitions 𝛌 with comp(𝛌) = μ.
pub fn multipartitions_with_comp(mu: &Composition) -> Vec<Multicomposition> {
    let mut out: Vec<Vec<Composition>> = vec![Vec::new()];
    for &m in mu.parts() {
        let ps = partitions(m);
        out = out
            .into_iter()
            .flat_map(|pre| {
                ps.iter().map(move |p| {
                    let mut v = pre.clone();
                    v.push(p.clone());
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Multicomposition).collect()
}

/// All linear multipartitions of n, grouped by composition in lexicographic order.
pub fn linear_multipartitions(n: usize) -> Result<Vec<Multicomposition>> {
    Ok(compositions(n)?.iter().flat_map(multipartitions_with_comp).collect())
}

/// A filling of a composition's Young diagram; rows and entries are 1-based values.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Tableau> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return domain(format!("{rows:?} is not a bijection onto [{n}]"));
            }
            seen[x] = true;
        }
        if rows.iter().any(|r| r.is_empty()) {
            return domain("empty row");
        }
        Ok(Tableau { rows })
    }

    /// t^μ: entries 1..n placed along rows.
    pub fn initial(shape: &Composition) -> Tableau {
        Self::initial_from(shape, 1)
    }

    fn initial_from(shape: &Composition, start: usize) -> Tableau {
        let mut k = start;
        let rows = shape
            .parts()
            .iter()
            .map(|&len| {
                let r: Vec<usize> = (k..k + len).collect();
                k += len;
                r
            })
            .collect();
        Tableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Composition {
        Composition(self.rows.iter().map(|r| r.len()).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Entry at the 1-based node (row, col).
    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row.checked_sub(1)?)?.get(col.checked_sub(1)?).copied()
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_standard(&self) -> bool {
        if !self.shape().is_partition() || !self.is_row_standard() {
            return false;
        }
        self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo))
    }

    /// Entries mapped through a permutation of the ambient [N].
    pub fn act(&self, w: &Perm) -> Tableau {
        Tableau { rows: self.rows.iter().map(|r| r.iter().map(|&x| w.apply(x)).collect()).collect() }
    }

    /// d(s): the permutation with t^μ d(s) = s.
    pub fn d(&self) -> Perm {
        let n = self.size();
        let init = Tableau::initial(&self.shape());
        let mut images = vec![0; n];
        for (ri, r) in init.rows.iter().enumerate() {
            for (ci, &x) in r.iter().enumerate() {
                images[x - 1] = self.rows[ri][ci];
            }
        }
        Perm::from_images(&images).expect("tableau is a bijection")
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join("/"))
    }
}

pub fn standard_tableaux(lambda: &IntPartition) -> Vec<Tableau> {
    standard_tableaux_from(lambda, 1)
}

fn standard_tableaux_from(lambda: &IntPartition, start: usize) -> Vec<Tableau> {
    fn rec(parts: &[usize], rows: &mut Vec<Vec<usize>>, k: usize, last: usize, out: &mut Vec<Tableau>) {
        if k > last {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for r in 0..parts.len() {
            let len = rows[r].len();
            if len < parts[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(k);
                rec(parts, rows, k + 1, last, out);
                rows[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut rows = vec![Vec::new(); lambda.len()];
    rec(lambda.parts(), &mut rows, start, start + lambda.size() - 1, &mut out);
    out.sort();
    out
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multitableau(pub Vec<Tableau>);

impl Multitableau {
    pub fn components(&self) -> &[Tableau] {
        &self.0
    }

    pub fn shape(&self) -> Multicomposition {
        Multicomposition(self.0.iter().map(|t| t.shape()).collect())
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|t| t.size()).sum()
    }

    pub fn initial(shape: &Multicomposition) -> Multitableau {
        let mut start = 1;
        Multitableau(
            shape
                .0
                .iter()
                .map(|c| {
                    let t = Tableau::initial_from(c, start);
                    start += c.size();
                    t
                })
                .collect(),
        )
    }

    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|t| t.shape().is_partition() && t.is_row_standard())
            && self.0.iter().all(|t| t.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo)))
    }

    /// Component i holds exactly the entries of component i of t^𝛍.
    pub fn is_initial_kind(&self) -> bool {
        let init = Multitableau::initial(&self.shape());
        self.0.iter().zip(&init.0).all(|(a, b)| {
            let mut x: Vec<usize> = a.rows.iter().flatten().copied().collect();
            let mut y: Vec<usize> = b.rows.iter().flatten().copied().collect();
            x.sort_unstable();
            y.sort_unstable();
            x == y
        })
    }

    /// d(𝐬): t^𝛍 d(𝐬) = 𝐬.
    pub fn d(&self) -> Perm {
        let n = self.size();
        let init = Multitableau::initial(&self.shape());
        let mut images = vec![0; n];
        for (ti, t) in init.0.iter().enumerate() {
            for (ri, r) in t.rows.iter().enumerate() {
                for (ci, &x) in r.iter().enumerate() {
                    images[x - 1] = self.0[ti].rows[ri][ci];
                }
            }
        }
        Perm::from_images(&images).expect("multitableau is a bijection")
    }
}

impl fmt::Debug for Multitableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ";")?;
            }
            write!(f, "{t:?}")?;
        }
        write!(f, ")")
    }
}

/// Standard multitableaux of the initial kind, T(𝛌).
pub fn initial_kind_multitableaux(lambda: &Multicomposition) -> Result<Vec<Multitableau>> {
    if !lambda.is_multipartition() {
        return domain(format!("{lambda} is not a multipartition"));
    }
    let mut out: Vec<Vec<Tableau>> = vec![Vec::new()];
    let mut start = 1;
    for c in &lambda.0 {
        let ts = standard_tableaux_from(c, start);
        start += c.size();
        out = out
            .into_iter()
            .flat_map(|pre| {
                ts.iter().map(move |t| {
                    let mut v = pre.clone();
                    v.push(t.clone());
                    v
                })
            })
            .collect();
    }
    Ok(out.into_iter().map(Multitableau).collect())
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

pub fn double_factorial_odd(n: usize) -> u128 {
    // (2n-1)!!
    (1..=n as u128).map(|k| 2 * k - 1).product()
}

pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i as u128 + 1);
    }
    r
}

pub fn catalan(n: usize) -> u128 {
    binomial(2 * n, n) / (n as u128 + 1)
}

/// Bell numbers through the Bell triangle.
pub fn bell(n: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![*row.last().unwrap()];
        for &x in &row {
            let y = *next.last().unwrap() + x;
            next.push(y);
        }
        row = next;
    }
    row[0]
}

/// b_n(α): number of set partitions of [n] whose block sizes form α.
pub fn type_count(alpha: &IntPartition) -> u128 {
    let n = alpha.size();
    let mut denom: u128 = alpha.parts().iter().map(|&p| factorial(p)).product();
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable();
    for (_, group) in &itertools_group(&parts) {
        denom *= factorial(*group);
    }
    factorial(n) / denom
}

fn itertools_group(sorted: &[usize]) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for &x in sorted {
        match out.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// Multiplicities (part, count) of a partition.
pub fn multiplicities(alpha: &IntPartition) -> Vec<(usize, usize)> {
    let mut parts = alpha.parts().to_vec();
    parts.sort_unstable();
    itertools_group(&parts)
}

/// Σ over compositions μ of n of Π f(μ_i).
pub fn composition_sum(n: usize, f: impl Fn(usize) -> u128) -> Result<u128> {
    Ok(compositions(n)?.iter().map(|mu| mu.parts().iter().map(|&p| f(p)).product::<u128>()).sum())
}

/// dim PTL_n = Σ_α b_n(α)² Π_i c_{k_i}^{m_i} m_i!.
pub fn ptl_dimension(n: usize) -> u128 {
    partitions(n)
        .iter()
        .map(|alpha| {
            let b = type_count(alpha);
            let prod: u128 =
                multiplicities(alpha).iter().map(|&(k, m)| catalan(k).pow(m as u32) * factorial(m)).product();
            b * b * prod
        })
        .sum()
}
