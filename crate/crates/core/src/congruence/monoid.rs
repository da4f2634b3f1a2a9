use std::collections::{HashMap, VecDeque};

use crate::elements::{Element, Kind};
use crate::error::{Error, Result};

/// Largest monoid [`FiniteMonoid`] will tabulate by default.
pub const DEFAULT_MONOID_CAP: usize = 4096;

/// An enumerated monoid with a full multiplication table.
///
/// The identity sits at index 0. The opposite monoid shares the element list
/// and reverses the multiplication.
#[derive(Debug, Clone)]
pub struct FiniteMonoid<E> {
    elements: Vec<E>,
    index: HashMap<E, usize>,
    generators: Vec<usize>,
    table: Vec<u32>,
    opposite: bool,
}

impl<E: Element> FiniteMonoid<E> {
    /// The submonoid of degree-`degree` elements generated by `gens`.
    pub fn generated(degree: usize, gens: &[E], cap: usize) -> Result<Self> {
        for g in gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let mut elements = vec![E::identity(degree)];
        let mut index: HashMap<E, usize> = HashMap::from([(elements[0].clone(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let p = elements[i].mul(g);
                if !index.contains_key(&p) {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded {
                            kind: "generated submonoid".into(),
                            degree,
                            predicted: elements.len() as u128 + 1,
                            cap,
                        });
                    }
                    index.insert(p.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(p);
                }
            }
        }
        let generators = gens.iter().map(|g| index[g]).collect::<Vec<_>>();
        let mut monoid = Self::tabulate(elements, index);
        monoid.generators = dedup_keep_order(generators);
        Ok(monoid)
    }

    /// Every element of `kind` at degree `n`, with a greedily chosen
    /// generating set.
    pub fn full(kind: Kind, n: usize, cap: usize) -> Result<Self> {
        let mut elements = E::enumerate(kind, n, cap)?;
        let id = E::identity(n);
        let pos = elements
            .iter()
            .position(|x| *x == id)
            .expect("enumeration contains the identity");
        let id = elements.remove(pos);
        elements.insert(0, id);
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, x)| (x.clone(), i))
            .collect();
        let mut monoid = Self::tabulate(elements, index);
        monoid.generators = monoid.greedy_generators();
        Ok(monoid)
    }

    fn tabulate(elements: Vec<E>, index: HashMap<E, usize>) -> Self {
        let size = elements.len();
        let mut table = Vec::with_capacity(size * size);
        for a in &elements {
            for b in &elements {
                table.push(index[&a.mul(b)] as u32);
            }
        }
        FiniteMonoid {
            elements,
            index,
            generators: Vec::new(),
            table,
            opposite: false,
        }
    }

    /// Walks the elements in order, keeping each one not yet generated.
    fn greedy_generators(&self) -> Vec<usize> {
        let size = self.size();
        let mut inside = vec![false; size];
        inside[0] = true;
        let mut members = vec![0usize];
        let mut gens = Vec::new();
        for cand in 0..size {
            if inside[cand] {
                continue;
            }
            gens.push(cand);
            let mut fresh = Vec::new();
            for &m in &members {
                let p = self.mul(m, cand);
                if !inside[p] {
                    inside[p] = true;
                    fresh.push(p);
                }
            }
            while let Some(x) = fresh.pop() {
                members.push(x);
                for &g in &gens {
                    let p = self.mul(x, g);
                    if !inside[p] {
                        inside[p] = true;
                        fresh.push(p);
                    }
                }
            }
        }
        gens
    }
}

impl<E> FiniteMonoid<E> {
    pub fn size(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &E {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_opposite(&self) -> bool {
        self.opposite
    }

    /// Product `ab` in this monoid (reversed for an opposite monoid).
    pub fn mul(&self, a: usize, b: usize) -> usize {
        let n = self.size();
        if self.opposite {
            self.table[b * n + a] as usize
        } else {
            self.table[a * n + b] as usize
        }
    }

    pub fn opposite(&self) -> Self
    where
        E: Clone,
    {
        FiniteMonoid {
            elements: self.elements.clone(),
            index: self.index.clone(),
            generators: self.generators.clone(),
            table: self.table.clone(),
            opposite: !self.opposite,
        }
    }

    /// Membership mask of the principal right ideal `aS`.
    pub fn right_ideal(&self, a: usize) -> Vec<bool> {
        let mut mask = vec![false; self.size()];
        for s in 0..self.size() {
            mask[self.mul(a, s)] = true;
        }
        mask
    }

    /// Membership mask of the principal left ideal `Sa`.
    pub fn left_ideal(&self, a: usize) -> Vec<bool> {
        let mut mask = vec![false; self.size()];
        for s in 0..self.size() {
            mask[self.mul(s, a)] = true;
        }
        mask
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> Vec<usize> {
        (0..self.size())
            .filter(|&a| self.is_idempotent(a))
            .collect()
    }

    /// `1, s, s², ...` up to the first repetition.
    pub fn powers(&self, s: usize) -> Vec<usize> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        let mut x = self.identity();
        while !seen[x] {
            seen[x] = true;
            out.push(x);
            x = self.mul(x, s);
        }
        out
    }

    /// Re-closing the generators from the identity recovers every element.
    pub fn generators_generate(&self) -> bool {
        let mut inside = vec![false; self.size()];
        inside[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &g in &self.generators {
                let p = self.mul(x, g);
                if !inside[p] {
                    inside[p] = true;
                    count += 1;
                    stack.push(p);
                }
            }
        }
        count == self.size()
    }
}

impl<E: Element> FiniteMonoid<E> {
    pub fn index_of(&self, x: &E) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn require(&self, x: &E) -> Result<usize> {
        self.index_of(x)
            .ok_or_else(|| Error::NotInMonoid(x.to_string()))
    }
}

fn dedup_keep_order(v: Vec<usize>) -> Vec<usize> {
    let mut seen = std::collections::HashSet::new();
    v.into_iter().filter(|x| seen.insert(*x)).collect()
}
