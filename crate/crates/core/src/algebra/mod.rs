//! Basis-level arithmetic in the Hecke-type algebras.

pub mod bh;
pub mod bt;
pub mod btl;
pub mod checks;
pub mod hecke;
pub mod ideal;
pub mod relations;
pub mod tensor;
pub mod tl;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use crate::laurent::LaurentPoly;
use crate::linalg::SparseRow;

/// A finitely supported linear combination of basis indices.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element<B: Ord> {
    terms: BTreeMap<B, LaurentPoly>,
}

impl<B: Ord + Clone> Element<B> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn basis(b: B) -> Self {
        Self::term(b, LaurentPoly::one())
    }

    pub fn term(b: B, c: LaurentPoly) -> Self {
        let mut e = Self::zero();
        e.add_term(b, &c);
        e
    }

    pub fn add_term(&mut self, b: B, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element<B>, c: &LaurentPoly) {
        if c.is_zero() {
            return;
        }
        for (b, x) in &other.terms {
            if c.is_one() {
                self.add_term(b.clone(), x);
            } else {
                self.add_term(b.clone(), &(x * c));
            }
        }
    }

    pub fn add(&self, other: &Element<B>) -> Element<B> {
        let mut r = self.clone();
        r.add_scaled(other, &LaurentPoly::one());
        r
    }

    pub fn sub(&self, other: &Element<B>) -> Element<B> {
        let mut r = self.clone();
        r.add_scaled(other, &LaurentPoly::constant(-1));
        r
    }

    pub fn scale(&self, c: &LaurentPoly) -> Element<B> {
        let mut r = Self::zero();
        r.add_scaled(self, c);
        r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> LaurentPoly {
        self.terms.get(b).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&B, &LaurentPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coordinates with respect to an indexed basis.
    pub fn coordinates(&self, index: &HashMap<B, usize>) -> SparseRow
    where
        B: Hash,
    {
        let mut row: Vec<(usize, LaurentPoly)> = self.terms.iter().map(|(b, c)| (index[b], c.clone())).collect();
        row.sort_by_key(|x| x.0);
        row
    }

    /// Apply a linear map given on basis elements.
    pub fn map<C: Ord + Clone>(&self, f: impl Fn(&B) -> Element<C>) -> Element<C> {
        let mut r = Element::zero();
        for (b, c) in &self.terms {
            r.add_scaled(&f(b), c);
        }
        r
    }

    /// Specialize every coefficient at q = 1 (exact integers).
    pub fn at_one(&self) -> BTreeMap<B, num_bigint::BigInt> {
        self.terms
            .iter()
            .map(|(b, c)| (b.clone(), c.evaluate_i64(1).expect("q=1").to_integer()))
            .filter(|(_, c)| c != &num_bigint::BigInt::from(0))
            .collect()
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Display for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(b, c)| format!("({c}) * {b}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl<B: Ord + Clone + fmt::Display> fmt::Debug for Element<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// An associative algebra over Z[q, q^{−1}] with a distinguished basis.
pub trait Algebra {
    type Basis: Clone + Ord + Hash + fmt::Debug + fmt::Display;

    fn name(&self) -> String;

    /// Basis in canonical order.
    fn basis(&self) -> Vec<Self::Basis>;

    fn one(&self) -> Element<Self::Basis>;

    fn mul_basis(&self, a: &Self::Basis, b: &Self::Basis) -> Element<Self::Basis>;

    /// Named algebra generators.
    fn generators(&self) -> Vec<(String, Element<Self::Basis>)>;

    /// The anti-involution on basis elements, when the algebra has one.
    fn star_basis(&self, _b: &Self::Basis) -> Option<Element<Self::Basis>> {
        None
    }

    fn dim(&self) -> usize {
        self.basis().len()
    }

    fn mul(&self, x: &Element<Self::Basis>, y: &Element<Self::Basis>) -> Element<Self::Basis> {
        let mut r = Element::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                r.add_scaled(&self.mul_basis(a, b), &(ca * cb));
            }
        }
        r
    }

    fn product(&self, xs: &[Element<Self::Basis>]) -> Element<Self::Basis> {
        xs.iter().fold(self.one(), |acc, x| self.mul(&acc, x))
    }

    fn star(&self, x: &Element<Self::Basis>) -> Option<Element<Self::Basis>> {
        let mut r = Element::zero();
        for (b, c) in x.terms() {
            r.add_scaled(&self.star_basis(b)?, c);
        }
        Some(r)
    }

    fn generator(&self, name: &str) -> Option<Element<Self::Basis>> {
        self.generators().into_iter().find(|(n, _)| n == name).map(|(_, e)| e)
    }

    fn basis_index(&self) -> HashMap<Self::Basis, usize> {
        self.basis().into_iter().enumerate().map(|(i, b)| (b, i)).collect()
    }
}

/// Memo table for basis products.
pub(crate) struct Memo<B: Ord> {
    table: std::sync::RwLock<HashMap<(B, B), Element<B>>>,
}

impl<B: Ord + Clone + Hash> Memo<B> {
    pub fn new() -> Self {
        Memo { table: std::sync::RwLock::new(HashMap::new()) }
    }

    pub fn get_or(&self, a: &B, b: &B, f: impl FnOnce() -> Element<B>) -> Element<B> {
        let key = (a.clone(), b.clone());
        if let Some(v) = self.table.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let v = f();
        self.table.write().expect("memo lock").insert(key, v.clone());
        v
    }
}
