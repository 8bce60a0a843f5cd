use serde::Serialize;

use crate::word::Word;

use super::table::{GroupElement, GroupTable};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConjClass {
    pub representative: usize,
    pub members: Vec<usize>,
    pub order: usize,
}

impl ConjClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupDescriptor {
    pub members: Vec<usize>,
    pub is_normal: bool,
    pub generator_witnesses: Vec<Word>,
}

impl SubgroupDescriptor {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }
}

/// Classes sorted by (size, element order, representative index); the
/// representative is the class member with the smallest index.
pub fn conjugacy_classes<E: GroupElement>(t: &GroupTable<E>) -> Vec<ConjClass> {
    let n = t.order();
    let mut seen = vec![false; n];
    let mut classes = Vec::new();
    for g in 0..n {
        if seen[g] {
            continue;
        }
        let mut members: Vec<usize> = (0..n).map(|h| t.conjugate(g, h)).collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            seen[m] = true;
        }
        classes.push(ConjClass {
            representative: g,
            order: t.element_order(g),
            members,
        });
    }
    classes.sort_by_key(|c| (c.size(), c.order, c.representative));
    classes
}

fn is_closed<E: GroupElement>(t: &GroupTable<E>, mask: &[bool]) -> bool {
    let members: Vec<usize> = (0..t.order()).filter(|&i| mask[i]).collect();
    members
        .iter()
        .all(|&a| members.iter().all(|&b| mask[t.mult[a][b]]))
}

/// Subgroup generated by the given element indices, as a sorted index list.
pub fn generate_subgroup<E: GroupElement>(t: &GroupTable<E>, gens: &[usize]) -> Vec<usize> {
    let mut mask = vec![false; t.order()];
    mask[0] = true;
    let mut members = vec![0];
    let mut k = 0;
    while k < members.len() {
        let a = members[k];
        for &g in gens {
            let b = t.mult[a][g];
            if !mask[b] {
                mask[b] = true;
                members.push(b);
            }
        }
        k += 1;
    }
    members.sort_unstable();
    members
}

/// Smallest normal subgroup containing the given elements.
pub fn normal_closure<E: GroupElement>(t: &GroupTable<E>, gens: &[usize]) -> Vec<usize> {
    let conjugates: Vec<usize> = gens
        .iter()
        .flat_map(|&g| (0..t.order()).map(move |h| (g, h)))
        .map(|(g, h)| t.conjugate(g, h))
        .collect();
    generate_subgroup(t, &conjugates)
}

pub fn is_normal<E: GroupElement>(t: &GroupTable<E>, members: &[usize]) -> bool {
    let mut mask = vec![false; t.order()];
    for &m in members {
        mask[m] = true;
    }
    members
        .iter()
        .all(|&g| (0..t.order()).all(|h| mask[t.conjugate(g, h)]))
}

pub fn is_abelian<E: GroupElement>(t: &GroupTable<E>, members: &[usize]) -> bool {
    members
        .iter()
        .all(|&a| members.iter().all(|&b| t.mult[a][b] == t.mult[b][a]))
}

/// Least common multiple of the element orders.
pub fn exponent<E: GroupElement>(t: &GroupTable<E>, members: &[usize]) -> usize {
    fn gcd(a: usize, b: usize) -> usize {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    members
        .iter()
        .map(|&g| t.element_order(g))
        .fold(1, |acc, o| acc / gcd(acc, o) * o)
}

/// A small generating set, picked greedily in table order.
pub fn greedy_generators<E: GroupElement>(t: &GroupTable<E>, members: &[usize]) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = vec![0];
    for &m in members {
        if span.binary_search(&m).is_err() {
            gens.push(m);
            span = generate_subgroup(t, &gens);
        }
        if span.len() == members.len() {
            break;
        }
    }
    gens
}

pub fn describe_subgroup<E: GroupElement>(
    t: &GroupTable<E>,
    members: Vec<usize>,
) -> SubgroupDescriptor {
    let generator_witnesses = greedy_generators(t, &members)
        .into_iter()
        .map(|g| t.witnesses[g].clone())
        .collect();
    SubgroupDescriptor {
        is_normal: is_normal(t, &members),
        members,
        generator_witnesses,
    }
}

/// All normal subgroups, found among unions of conjugacy classes; sorted by
/// size, then by member list.
pub fn normal_subgroups<E: GroupElement>(t: &GroupTable<E>) -> Vec<SubgroupDescriptor> {
    let classes = conjugacy_classes(t);
    let rest: Vec<&ConjClass> = classes.iter().filter(|c| c.representative != 0).collect();
    assert!(
        rest.len() < 24,
        "too many conjugacy classes for union search"
    );
    let mut found = Vec::new();
    for subset in 0u32..(1 << rest.len()) {
        let mut mask = vec![false; t.order()];
        mask[0] = true;
        let mut size = 1;
        for (k, c) in rest.iter().enumerate() {
            if subset & (1 << k) != 0 {
                size += c.size();
                for &m in &c.members {
                    mask[m] = true;
                }
            }
        }
        if !t.order().is_multiple_of(size) || !is_closed(t, &mask) {
            continue;
        }
        let members: Vec<usize> = (0..t.order()).filter(|&i| mask[i]).collect();
        found.push(describe_subgroup(t, members));
    }
    found.sort_by(|a, b| (a.size(), &a.members).cmp(&(b.size(), &b.members)));
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{enumerate_dg2, enumerate_dg3};
    use crate::word::parse_word;

    #[test]
    fn dg3_class_structure() {
        let t = enumerate_dg3().unwrap();
        let classes = conjugacy_classes(&t);
        assert_eq!(classes.len(), 10);
        assert_eq!(classes.iter().map(ConjClass::size).sum::<usize>(), 96);
        let mut shape: Vec<(usize, usize)> = classes.iter().map(|c| (c.size(), c.order)).collect();
        shape.sort();
        assert_eq!(
            shape,
            vec![
                (1, 1),
                (3, 2),
                (3, 4),
                (3, 4),
                (6, 4),
                (12, 2),
                (12, 4),
                (12, 8),
                (12, 8),
                (32, 3)
            ]
        );
        let z = t.index_of_word(&parse_word("Z").unwrap()).unwrap();
        let zc = classes.iter().find(|c| c.members.contains(&z)).unwrap();
        assert_eq!((zc.size(), zc.order), (12, 2));
        for c in &classes {
            assert!(c.members.iter().all(|&m| t.element_order(m) == c.order));
        }
    }

    #[test]
    fn dg3_normal_subgroups() {
        let t = enumerate_dg3().unwrap();
        let normals = normal_subgroups(&t);
        let sizes: Vec<usize> = normals.iter().map(SubgroupDescriptor::size).collect();
        assert_eq!(sizes, vec![1, 4, 16, 48, 96]);
        assert!(normals.iter().all(|n| n.is_normal && 96 % n.size() == 0));
        for n in &normals {
            let gens: Vec<usize> = n
                .generator_witnesses
                .iter()
                .map(|w| t.index_of_word(w).unwrap())
                .collect();
            assert_eq!(generate_subgroup(&t, &gens), n.members);
        }
    }

    #[test]
    fn dg2_has_three_normal_subgroups() {
        let t = enumerate_dg2().unwrap();
        let sizes: Vec<usize> = normal_subgroups(&t).iter().map(|n| n.size()).collect();
        assert_eq!(sizes, vec![1, 3, 6]);
        assert_eq!(conjugacy_classes(&t).len(), 3);
    }

    #[test]
    fn closure_helpers() {
        let t = enumerate_dg3().unwrap();
        let x = t.gen_indices[0];
        assert_eq!(generate_subgroup(&t, &[x]), vec![0, x]);
        assert_eq!(normal_closure(&t, &[x]).len(), 96);
        assert_eq!(exponent(&t, &(0..96).collect::<Vec<_>>()), 24);
        assert!(!is_abelian(&t, &(0..96).collect::<Vec<_>>()));
    }
}
