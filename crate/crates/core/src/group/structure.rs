use serde::Serialize;

use crate::perm::Perm4;
use crate::symbolic::DualityElement;
use crate::word::{parse_word, Word};

use super::analysis::{exponent, generate_subgroup, is_abelian, is_normal};
use super::table::GroupTable;
use super::GroupError;

fn lookup(t: &GroupTable<DualityElement>, text: &str) -> Result<usize, GroupError> {
    let w = parse_word(text).expect("literal words parse");
    t.index_of_word(&w).ok_or(GroupError::ForeignWord(w))
}

/// The Klein four-subgroup `V` of `S₄`.
pub fn klein_v() -> [Perm4; 4] {
    [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]]
        .map(|im| Perm4::from_images(im).expect("Klein elements are bijections"))
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub ok: bool,
    /// Orders of `a = (ZXY)²`, `b = (XYZ)²`, `c = (YZX)²`.
    pub orders: [usize; 3],
    pub pairwise_commute: bool,
    pub abc_is_identity: bool,
    pub h_order: usize,
    pub h_normal: bool,
    pub h_abelian: bool,
    pub h_exponent: usize,
    pub h_is_pi_inverse_of_v: bool,
    pub s3_order: usize,
    pub trivial_intersection: bool,
    pub product_is_whole_group: bool,
    /// For X, Y, Z: where conjugation sends `a`, `b`, `c` (as positions 0..3),
    /// or `None` if some image leaves `{a, b, c}`.
    pub conjugation_action: [Option<[usize; 3]>; 3],
}

/// Checks that the group is `(ℤ₄ × ℤ₄) ⋊ S₃` with `H = ⟨a, b⟩` and
/// `S₃ = ⟨X, Y⟩`.
pub fn semidirect_structure_check(
    t: &GroupTable<DualityElement>,
) -> Result<StructureReport, GroupError> {
    let abc = [
        lookup(t, "(ZXY)^2")?,
        lookup(t, "(XYZ)^2")?,
        lookup(t, "(YZX)^2")?,
    ];
    let [a, b, c] = abc;
    let orders = abc.map(|g| t.element_order(g));
    let pairwise_commute = is_abelian(t, &abc);
    let abc_is_identity = t.mult[t.mult[a][b]][c] == 0;

    let h = generate_subgroup(t, &[a, b]);
    let v = klein_v();
    let pi_inv_v: Vec<usize> = (0..t.order())
        .filter(|&i| v.contains(&t.elements[i].perm))
        .collect();
    let s3 = generate_subgroup(t, &t.gen_indices[..2]);
    let trivial_intersection = h.iter().filter(|g| s3.contains(g)).count() == 1;
    let mut product: Vec<usize> = h
        .iter()
        .flat_map(|&x| s3.iter().map(move |&y| (x, y)))
        .map(|(x, y)| t.mult[x][y])
        .collect();
    product.sort_unstable();
    product.dedup();

    let conjugation_action = [0, 1, 2].map(|k| {
        let g = t.gen_indices[k];
        let images: Option<Vec<usize>> = abc
            .iter()
            .map(|&x| abc.iter().position(|&y| y == t.conjugate(x, g)))
            .collect();
        images.map(|v| [v[0], v[1], v[2]])
    });

    let mut report = StructureReport {
        ok: false,
        orders,
        pairwise_commute,
        abc_is_identity,
        h_order: h.len(),
        h_normal: is_normal(t, &h),
        h_abelian: is_abelian(t, &h),
        h_exponent: exponent(t, &h),
        h_is_pi_inverse_of_v: h == pi_inv_v,
        s3_order: s3.len(),
        trivial_intersection,
        product_is_whole_group: product.len() == t.order(),
        conjugation_action,
    };
    report.ok = report.orders == [4, 4, 4]
        && report.pairwise_commute
        && report.abc_is_identity
        && report.h_order == 16
        && report.h_normal
        && report.h_abelian
        && report.h_exponent == 4
        && report.h_is_pi_inverse_of_v
        && report.s3_order == 6
        && report.trivial_intersection
        && report.product_is_whole_group
        && report.conjugation_action.iter().all(Option::is_some);
    Ok(report)
}

#[derive(Clone, Debug, Serialize)]
pub struct ModulePair {
    pub kernel_element: Word,
    pub klein_element: Perm4,
}

#[derive(Clone, Debug, Serialize)]
pub struct ModuleReport {
    pub ok: bool,
    /// The three conjugation identities `g (XYXZ)² g⁻¹` for g = X, Y, Z.
    pub conjugation_identities: [bool; 3],
    pub acts_through_pi: bool,
    pub bijection: Vec<ModulePair>,
    pub equivariant_bijections: usize,
}

/// Verifies the conjugation action of X, Y, Z on `K₄` and finds the
/// `S₄`-equivariant bijections `K₄ → V`.
pub fn k4_module_check(t: &GroupTable<DualityElement>) -> Result<ModuleReport, GroupError> {
    let k1 = lookup(t, "(XYXZ)^2")?;
    let expected = [
        t.inverse[lookup(t, "(ZXZY)^2")?],
        t.inverse[lookup(t, "(YZYX)^2")?],
        t.inverse[k1],
    ];
    let conjugation_identities =
        [0, 1, 2].map(|k| t.conjugate(k1, t.gen_indices[k]) == expected[k]);

    let kernel: Vec<usize> = (0..t.order())
        .filter(|&i| t.elements[i].perm.is_identity())
        .collect();
    // Elements in the same π-fiber differ by a kernel element, which commutes
    // with the abelian kernel, so they must conjugate identically.
    let acts_through_pi = (0..t.order()).all(|g| {
        (0..t.order())
            .filter(|&h| t.elements[h].perm == t.elements[g].perm)
            .all(|h| {
                kernel
                    .iter()
                    .all(|&k| t.conjugate(k, g) == t.conjugate(k, h))
            })
    });

    let nontrivial_k: Vec<usize> = kernel.iter().copied().filter(|&k| k != 0).collect();
    let nontrivial_v: Vec<Perm4> = klein_v()[1..].to_vec();
    let mut found: Vec<[Perm4; 3]> = Vec::new();
    for p in crate::perm::Perm3::all() {
        let assign: [Perm4; 3] = std::array::from_fn(|i| nontrivial_v[p.apply(i)]);
        let image = |k: usize| -> Perm4 {
            if k == 0 {
                Perm4::identity()
            } else {
                assign[nontrivial_k
                    .iter()
                    .position(|&x| x == k)
                    .expect("kernel member")]
            }
        };
        let equivariant = (0..t.order()).all(|g| {
            let s = t.elements[g].perm;
            nontrivial_k.iter().all(|&k| {
                // h⁻¹ k h corresponds to s⁻¹ v s under the frame convention.
                image(t.conjugate(k, g)) == s.inverse().compose(&image(k)).compose(&s)
            })
        });
        if equivariant {
            found.push(assign);
        }
    }

    let bijection = found
        .first()
        .map(|assign| {
            nontrivial_k
                .iter()
                .zip(assign)
                .map(|(&k, &v)| ModulePair {
                    kernel_element: t.witnesses[k].clone(),
                    klein_element: v,
                })
                .collect()
        })
        .unwrap_or_default();
    let ok = conjugation_identities.iter().all(|&b| b) && acts_through_pi && !found.is_empty();
    if found.is_empty() {
        return Err(GroupError::NoEquivariantBijection);
    }
    Ok(ModuleReport {
        ok,
        conjugation_identities,
        acts_through_pi,
        bijection,
        equivariant_bijections: found.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_dg3;

    #[test]
    fn semidirect_decomposition() {
        let t = enumerate_dg3().unwrap();
        let r = semidirect_structure_check(&t).unwrap();
        assert!(r.ok, "{r:?}");
        // X fixes a and swaps b, c; Y swaps a, c; Z swaps a, b.
        assert_eq!(
            r.conjugation_action,
            [Some([0, 2, 1]), Some([2, 1, 0]), Some([1, 0, 2])]
        );
    }

    #[test]
    fn k4_module() {
        let t = enumerate_dg3().unwrap();
        let r = k4_module_check(&t).unwrap();
        assert!(r.ok);
        assert_eq!(r.equivariant_bijections, 1);
        let partner = |w: &str| {
            let w = parse_word(w).unwrap();
            let i = t.index_of_word(&w).unwrap();
            r.bijection
                .iter()
                .find(|p| t.index_of_word(&p.kernel_element) == Some(i))
                .unwrap()
                .klein_element
        };
        // The partner of (XYXZ)² is the Klein element commuting with (03).
        let k = partner("(XYXZ)^2");
        let s = Perm4::transposition(0, 3);
        assert_eq!(s.compose(&k), k.compose(&s));
        assert_eq!(k.to_string(), "(03)(12)");
        assert_eq!(partner("(ZXZY)^2").to_string(), "(02)(13)");
        assert_eq!(partner("(YZYX)^2").to_string(), "(01)(23)");
    }
}
