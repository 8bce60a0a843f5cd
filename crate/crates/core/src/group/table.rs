use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use crate::perm::Perm;
use crate::symbolic::{compose, generator_element, DualityElement};
use crate::word::{Generator, Word};

use super::GroupError;

/// Closure bound for enumeration; hitting it means the representation is broken.
pub const SAFETY_BOUND: usize = 100_000;

/// Minimal interface needed to enumerate a finite group from generators.
pub trait GroupElement: Clone + Eq + Hash {
    fn identity() -> Self;
    /// `self` applied first, then `next`.
    fn then(&self, next: &Self) -> Self;
}

/// Elements carrying a permutation image in `S_N`.
pub trait PermImage<const N: usize> {
    fn perm_image(&self) -> Perm<N>;
}

impl GroupElement for DualityElement {
    fn identity() -> Self {
        DualityElement::identity()
    }

    fn then(&self, next: &Self) -> Self {
        compose(self, next)
    }
}

impl PermImage<4> for DualityElement {
    fn perm_image(&self) -> Perm<4> {
        self.perm
    }
}

/// A finite group enumerated from labeled generators.
///
/// Elements are in BFS order from the identity; within a depth, in
/// lexicographic order of their witness words (X < Y < Z). Each witness is
/// the lexicographically least among the shortest words for its element.
#[derive(Clone, Debug)]
pub struct GroupTable<E> {
    pub elements: Vec<E>,
    pub witnesses: Vec<Word>,
    /// `mult[i][j]` is the index of "element i, then element j".
    pub mult: Vec<Vec<usize>>,
    pub inverse: Vec<usize>,
    pub generators: Vec<Generator>,
    pub gen_indices: Vec<usize>,
    lookup: HashMap<E, usize>,
}

impl<E: GroupElement> GroupTable<E> {
    pub fn generate(gens: &[(Generator, E)], bound: usize) -> Result<Self, GroupError> {
        let mut elements = vec![E::identity()];
        let mut witnesses = vec![Word::empty()];
        let mut lookup = HashMap::from([(E::identity(), 0)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for (g, ge) in gens {
                let next = elements[i].then(ge);
                if lookup.contains_key(&next) {
                    continue;
                }
                if elements.len() >= bound {
                    return Err(GroupError::SafetyBound(bound));
                }
                let mut w = witnesses[i].clone();
                w.push(*g);
                lookup.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
                witnesses.push(w);
            }
        }

        let n = elements.len();
        let mut mult = vec![vec![0; n]; n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                mult[i][j] = *lookup.get(&a.then(b)).ok_or(GroupError::NotClosed)?;
            }
        }
        let inverse = (0..n)
            .map(|i| {
                (0..n)
                    .find(|&j| mult[i][j] == 0)
                    .ok_or(GroupError::NotClosed)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let gen_indices = gens.iter().map(|(_, e)| lookup[e]).collect();
        Ok(GroupTable {
            elements,
            witnesses,
            mult,
            inverse,
            generators: gens.iter().map(|(g, _)| *g).collect(),
            gen_indices,
            lookup,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.lookup.get(e).copied()
    }

    /// Index of the element a word evaluates to; `None` if it uses a letter
    /// that is not a generator of this table.
    pub fn index_of_word(&self, w: &Word) -> Option<usize> {
        w.letters().iter().try_fold(0, |acc, g| {
            let k = self.generators.iter().position(|h| h == g)?;
            Some(self.mult[acc][self.gen_indices[k]])
        })
    }

    /// `h⁻¹ g h`.
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mult[self.mult[self.inverse[h]][g]][h]
    }

    pub fn power(&self, g: usize, n: usize) -> usize {
        (0..n).fold(0, |acc, _| self.mult[acc][g])
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut n = 1;
        let mut x = g;
        while x != 0 {
            x = self.mult[x][g];
            n += 1;
        }
        n
    }

    /// Checks associativity exhaustively and that every row and column of
    /// the Cayley table is a permutation.
    pub fn check_axioms(&self) -> AxiomReport {
        let n = self.order();
        let latin = (0..n).all(|i| {
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for j in 0..n {
                row[self.mult[i][j]] = true;
                col[self.mult[j][i]] = true;
            }
            row.iter().all(|&b| b) && col.iter().all(|&b| b)
        });
        let mut assoc_violations = 0;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mult[a][b];
                for c in 0..n {
                    if self.mult[ab][c] != self.mult[a][self.mult[b][c]] {
                        assoc_violations += 1;
                    }
                }
            }
        }
        let identity_ok = (0..n).all(|i| self.mult[0][i] == i && self.mult[i][0] == i);
        let inverse_ok = (0..n)
            .all(|i| self.mult[i][self.inverse[i]] == 0 && self.mult[self.inverse[i]][i] == 0);
        AxiomReport {
            latin,
            assoc_violations,
            identity_ok,
            inverse_ok,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct AxiomReport {
    pub latin: bool,
    pub assoc_violations: usize,
    pub identity_ok: bool,
    pub inverse_ok: bool,
}

impl AxiomReport {
    pub fn ok(&self) -> bool {
        self.latin && self.assoc_violations == 0 && self.identity_ok && self.inverse_ok
    }
}

impl GroupTable<DualityElement> {
    /// Element at `i` with its stored witness attached.
    pub fn element(&self, i: usize) -> DualityElement {
        let mut e = self.elements[i].clone();
        e.witness = self.witnesses[i].clone();
        e
    }
}

/// The triple duality group, enumerated from X, Y, Z.
pub fn enumerate_dg3() -> Result<GroupTable<DualityElement>, GroupError> {
    let gens: Vec<_> = Generator::ALL
        .iter()
        .map(|&g| (g, generator_element(g)))
        .collect();
    let mut t = GroupTable::generate(&gens, SAFETY_BOUND)?;
    for (e, w) in t.elements.iter_mut().zip(&t.witnesses) {
        e.witness = w.clone();
    }
    Ok(t)
}
