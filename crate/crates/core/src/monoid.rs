//! Finite monoid utilities: breadth-first closure and centers.

use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Default element budget for closure enumeration.
pub const DEFAULT_BUDGET: usize = 10_000_000;

pub trait Monoid: Clone + Eq + Hash + Ord {
    fn mul(&self, other: &Self) -> Self;
}

/// The submonoid (or subsemigroup, when `identity` is `None`) generated by `gens`,
/// sorted canonically.
pub fn closure<T: Monoid>(gens: &[T], identity: Option<T>, budget: usize) -> Result<Vec<T>> {
    let mut seen: HashSet<T> = HashSet::new();
    let mut frontier: Vec<T> = Vec::new();
    for x in identity.into_iter().chain(gens.iter().cloned()) {
        if seen.insert(x.clone()) {
            frontier.push(x);
        }
    }
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for x in &frontier {
            for g in gens {
                let y = x.mul(g);
                if !seen.contains(&y) {
                    if seen.len() >= budget {
                        return Err(Error::Resource(format!("closure exceeded {budget} elements")));
                    }
                    seen.insert(y.clone());
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    let mut out: Vec<T> = seen.into_iter().collect();
    out.sort();
    Ok(out)
}

/// Elements commuting with every generator.
pub fn center_by_generators<T: Monoid>(elements: &[T], gens: &[T]) -> Vec<T> {
    elements.iter().filter(|x| gens.iter().all(|g| x.mul(g) == g.mul(x))).cloned().collect()
}

/// Elements commuting with every element.
pub fn center_by_elements<T: Monoid>(elements: &[T]) -> Vec<T> {
    center_by_generators(elements, elements)
}
