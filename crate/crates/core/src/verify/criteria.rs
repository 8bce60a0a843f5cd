//! The numbered acceptance checks, each returning a one-line verdict.

use std::cell::OnceCell;
use std::collections::HashSet;
use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::concrete::{
    apply_theta_concrete, check_pairing_invariance, dualize_symbolic, dualize_word,
    dvb_pairing_violations, flip_correspondence, flip_violations, identify_dvb, random_dvb,
    random_g3, solve_dual_oracle, theta_dvb, BuildingDims, IndexFrame,
};
use crate::group::{
    conjugacy_classes, enumerate_dg2, enumerate_dg3, exponent, generate_subgroup, is_abelian,
    is_split_extension, k4_module_check, kernel_of_pi, normal_subgroups, s4_relators,
    semidirect_structure_check, split_control, GroupTable,
};
use crate::perm::Perm4;
use crate::symbolic::{compose, element_order, eval_word, DualityElement};
use crate::word::{format_word, parse_word, Generator, Word};

use super::tables::verify_paper_tables;

/// Short names accepted by `--check`, in criterion order.
pub const CRITERIA: [(u8, &str); 14] = [
    (1, "order"),
    (2, "kernel"),
    (3, "tables"),
    (4, "classes"),
    (5, "normal"),
    (6, "semidirect"),
    (7, "split"),
    (8, "historical"),
    (9, "dg2"),
    (10, "oracle"),
    (11, "coherence"),
    (12, "flip"),
    (13, "faithful"),
    (14, "properties"),
];

pub fn criterion_id(name: &str) -> Option<u8> {
    if let Ok(n) = name.parse::<u8>() {
        return CRITERIA.iter().any(|&(id, _)| id == n).then_some(n);
    }
    CRITERIA
        .iter()
        .find(|&&(_, n)| n == name)
        .map(|&(id, _)| id)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} criterion {:>2} ({}): {}",
            self.id, self.name, self.detail
        )
    }
}

/// Holds the enumerated group so several criteria can share it.
#[derive(Default)]
pub struct Verifier {
    dg3: OnceCell<GroupTable<DualityElement>>,
}

fn w(text: &str) -> Word {
    parse_word(text).expect("fixed words parse")
}

impl Verifier {
    pub fn new() -> Self {
        Self::default()
    }

    fn dg3(&self) -> &GroupTable<DualityElement> {
        self.dg3
            .get_or_init(|| enumerate_dg3().expect("the duality group is finite"))
    }

    fn idx(&self, text: &str) -> usize {
        self.dg3()
            .index_of_word(&w(text))
            .expect("word lies in the group")
    }

    pub fn run(&self, id: u8) -> CriterionResult {
        let name = CRITERIA
            .iter()
            .find(|&&(i, _)| i == id)
            .map(|&(_, n)| n)
            .unwrap_or("unknown");
        let (pass, detail) = match id {
            1 => self.order(),
            2 => self.kernel(),
            3 => self.tables(),
            4 => self.classes(),
            5 => self.normal(),
            6 => self.semidirect(),
            7 => self.split(),
            8 => self.historical(),
            9 => self.dg2(),
            10 => self.oracle(),
            11 => self.coherence(),
            12 => self.flip(),
            13 => self.faithful(),
            14 => self.properties(),
            _ => (false, format!("no criterion {id}")),
        };
        CriterionResult {
            id,
            name,
            pass,
            detail,
        }
    }

    pub fn run_all(&self) -> Vec<CriterionResult> {
        CRITERIA.iter().map(|&(id, _)| self.run(id)).collect()
    }

    fn order(&self) -> (bool, String) {
        let start = Instant::now();
        let t = enumerate_dg3();
        let elapsed = start.elapsed();
        match t {
            Ok(t) => {
                let ok = t.order() == 96 && elapsed.as_secs_f64() < 1.0;
                (
                    ok,
                    format!("order {} in {:.3} s", t.order(), elapsed.as_secs_f64()),
                )
            }
            Err(e) => (false, e.to_string()),
        }
    }

    fn kernel(&self) -> (bool, String) {
        let t = self.dg3();
        let report = match kernel_of_pi(t, &s4_relators()) {
            Ok(r) => r,
            Err(e) => return (false, e.to_string()),
        };
        let expected: HashSet<usize> = ["1", "(XYXZ)^2", "(YZYX)^2", "(ZXZY)^2"]
            .iter()
            .map(|s| self.idx(s))
            .collect();
        let members: HashSet<usize> = report.kernel.members.iter().copied().collect();
        let product = t.mult[self.idx("(YZYX)^2")][self.idx("(XYXZ)^2")] == self.idx("(ZXZY)^2");
        let module = k4_module_check(t).map(|m| m.ok).unwrap_or(false);
        let ok = members == expected
            && report.is_klein_four
            && report.matches_normal_closure
            && product
            && module;
        let words: Vec<String> = report
            .kernel
            .members
            .iter()
            .map(|&i| format_word(&t.witnesses[i]))
            .collect();
        (
            ok,
            format!(
                "kernel {{{}}}, Klein four {}, equals relator closure {}, (YZYX)²(XYXZ)² = (ZXZY)² {}, equivariant module {}",
                words.join(", "),
                report.is_klein_four,
                report.matches_normal_closure,
                product,
                module
            ),
        )
    }

    fn tables(&self) -> (bool, String) {
        let r = verify_paper_tables(self.dg3());
        let mut total = 0;
        let mut failed = Vec::new();
        for table in 2..=5 {
            let sub = r.for_table(table);
            total += sub.checks.len();
            failed.extend(sub.failures().map(|c| format!("table {table} {}", c.label)));
        }
        if failed.is_empty() {
            (true, format!("{total}/{total} rows of tables 2-5 match"))
        } else {
            (false, format!("mismatched: {}", failed.join("; ")))
        }
    }

    fn classes(&self) -> (bool, String) {
        let t = self.dg3();
        let classes = conjugacy_classes(t);
        let mut got: Vec<(usize, usize)> = classes.iter().map(|c| (c.size(), c.order)).collect();
        let mut want = vec![
            (1, 1),
            (3, 2),
            (3, 4),
            (3, 4),
            (6, 4),
            (32, 3),
            (12, 2),
            (12, 4),
            (12, 8),
            (12, 8),
        ];
        got.sort_unstable();
        want.sort_unstable();
        let rows = verify_paper_tables(t).for_table(6);
        let failed: Vec<String> = rows
            .failures()
            .map(|c| {
                format!(
                    "{} printed [{}] computed [{}]",
                    c.label, c.expected, c.computed
                )
            })
            .collect();
        let ok = classes.len() == 10 && got == want && failed.is_empty();
        let mut detail = format!(
            "{} classes, (size, order) multiset matches {}",
            classes.len(),
            got == want
        );
        if !failed.is_empty() {
            detail.push_str(&format!("; row mismatch: {}", failed.join("; ")));
        }
        (ok, detail)
    }

    fn normal(&self) -> (bool, String) {
        let t = self.dg3();
        let normals = normal_subgroups(t);
        let sizes: Vec<usize> = normals.iter().map(|n| n.size()).collect();
        let h = generate_subgroup(t, &[self.idx("(ZXY)^2"), self.idx("(XYZ)^2")]);
        let v: HashSet<Perm4> = crate::group::klein_v().into_iter().collect();
        let pi_v: Vec<usize> = (0..t.order())
            .filter(|&i| v.contains(&t.elements[i].perm))
            .collect();
        let involutions = h.iter().filter(|&&i| t.mult[i][i] == 0).count();
        let z4z4 = h.len() == 16 && is_abelian(t, &h) && exponent(t, &h) == 4 && involutions == 4;
        let even: Vec<usize> = (0..t.order())
            .filter(|&i| t.witnesses[i].len().is_multiple_of(2))
            .collect();
        let a4: Vec<usize> = (0..t.order())
            .filter(|&i| t.elements[i].perm.signature() == 1)
            .collect();
        let n16 = normals
            .iter()
            .find(|n| n.size() == 16)
            .map(|n| n.members.clone());
        let n48 = normals
            .iter()
            .find(|n| n.size() == 48)
            .map(|n| n.members.clone());
        let ok = sizes == [1, 4, 16, 48, 96]
            && n16.as_ref() == Some(&h)
            && h == pi_v
            && z4z4
            && n48.as_ref() == Some(&even)
            && even == a4;
        (
            ok,
            format!(
                "sizes {sizes:?}; 16 = π⁻¹(V) = ⟨(ZXY)², (XYZ)²⟩ ≅ ℤ₄×ℤ₄ {}; 48 = π⁻¹(A₄) = even words {}",
                n16.as_ref() == Some(&h) && h == pi_v && z4z4,
                n48.as_ref() == Some(&even) && even == a4
            ),
        )
    }

    fn semidirect(&self) -> (bool, String) {
        match semidirect_structure_check(self.dg3()) {
            Ok(r) => (
                r.ok,
                format!(
                    "orders {:?}, commute {}, abc = 1 {}, |H| = {} normal {}, |⟨X,Y⟩| = {}, H ∩ ⟨X,Y⟩ = 1 {}, H·⟨X,Y⟩ = whole group {}",
                    r.orders,
                    r.pairwise_commute,
                    r.abc_is_identity,
                    r.h_order,
                    r.h_normal,
                    r.s3_order,
                    r.trivial_intersection,
                    r.product_is_whole_group
                ),
            ),
            Err(e) => (false, e.to_string()),
        }
    }

    fn split(&self) -> (bool, String) {
        let r = is_split_extension(self.dg3());
        let control = split_control().map(|c| (c.order(), is_split_extension(&c).split));
        let control_ok = matches!(control, Ok((96, true)));
        let ok = !r.split && r.candidates == 64 && r.failing == 64 && control_ok;
        (
            ok,
            format!("{r}; control semidirect product splits {control_ok}"),
        )
    }

    fn historical(&self) -> (bool, String) {
        let xyz4 = eval_word(&w("(XYZ)^4"));
        let k = eval_word(&w("(ZXZY)^2"));
        let order = element_order(&eval_word(&w("XYZ")));
        let ok = xyz4 == k && !xyz4.is_identity() && order == 8 && self.dg3().order() == 96;
        (
            ok,
            format!(
                "(XYZ)⁴ = (ZXZY)² {}, (XYZ)⁴ ≠ 1 {}, order of XYZ {order}, group order {} (not 72)",
                xyz4 == k,
                !xyz4.is_identity(),
                self.dg3().order()
            ),
        )
    }

    fn dg2(&self) -> (bool, String) {
        let t = match enumerate_dg2() {
            Ok(t) => t,
            Err(e) => return (false, e.to_string()),
        };
        let relators: Vec<Word> = ["X^2", "Y^2", "(XY)^3"].iter().map(|r| w(r)).collect();
        let trivial_kernel = kernel_of_pi(&t, &relators).is_ok_and(|k| k.kernel.size() == 1);
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let mut checked = 0;
        let mut bad = 0;
        for seed in 0..24u64 {
            let dims = [
                1 + seed as usize % 3,
                1 + (seed as usize / 3) % 3,
                1 + (seed as usize / 9) % 3,
            ];
            let lam = random_dvb(dims, seed);
            for axis in [Generator::X, Generator::Y] {
                checked += 1;
                let ok = theta_dvb(axis, &lam)
                    .and_then(|t| {
                        let back = identify_dvb(axis, &t)?;
                        let v = dvb_pairing_violations(axis, &lam, &t, 5, &mut rng)?;
                        Ok(back == lam.neg() && v == 0)
                    })
                    .unwrap_or(false);
                if !ok {
                    bad += 1;
                }
            }
        }
        let ok = t.order() == 6 && trivial_kernel && bad == 0;
        (
            ok,
            format!(
                "order {}, trivial kernel {trivial_kernel}, θ_X = θ_Y = −id on {}/{checked} random λ",
                t.order(),
                checked - bad
            ),
        )
    }

    fn oracle(&self) -> (bool, String) {
        let dims = BuildingDims::uniform(2);
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        let mut runs = 0;
        let mut mismatches = Vec::new();
        let mut violations = 0;
        for axis in Generator::ALL {
            for seed in 0..20 {
                runs += 1;
                let g = random_g3(dims, seed);
                let result =
                    dualize_symbolic(&g, IndexFrame::identity(), axis).and_then(|(h, _)| {
                        let same = solve_dual_oracle(&g, axis)? == h;
                        let inv = check_pairing_invariance(&g, &h, axis, 100, &mut rng)?;
                        Ok((same, inv.violations))
                    });
                match result {
                    Ok((same, v)) => {
                        if !same {
                            mismatches.push(format!("{axis}/{seed}"));
                        }
                        violations += v;
                    }
                    Err(e) => mismatches.push(format!("{axis}/{seed}: {e}")),
                }
            }
        }
        let ok = mismatches.is_empty() && violations == 0;
        (
            ok,
            format!(
                "{}/{runs} oracle solves equal the symbolic dual at dims 2; pairing violations {violations} over {} pairs{}",
                runs - mismatches.len(),
                runs * 100,
                if mismatches.is_empty() { String::new() } else { format!("; mismatched {}", mismatches.join(", ")) }
            ),
        )
    }

    fn coherence(&self) -> (bool, String) {
        let dims = BuildingDims::from_array([2, 1, 2, 2, 1, 2, 2]);
        let mut total = 0;
        let mut bad = Vec::new();
        for word in ["(XYXZ)^2", "(YZYX)^2", "(ZXZY)^2", "(XYZ)^4"] {
            let e = eval_word(&w(word));
            for seed in 0..10 {
                total += 1;
                let g = random_g3(dims, 1000 + seed);
                let ok = dualize_word(&g, &w(word))
                    .and_then(|(chained, frame)| {
                        Ok(frame.is_identity() && chained == apply_theta_concrete(&e, &g)?)
                    })
                    .unwrap_or(false);
                if !ok {
                    bad.push(format!("{word}/{seed}"));
                }
            }
        }
        (
            bad.is_empty(),
            format!(
                "{}/{total} chained dualizations equal θ of the symbolic element",
                total - bad.len()
            ),
        )
    }

    fn flip(&self) -> (bool, String) {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        let mut ok = 0;
        let n = 20;
        for seed in 0..n {
            let dims = [
                rng.gen_range(1..=3),
                rng.gen_range(1..=3),
                rng.gen_range(1..=3),
            ];
            let mu = random_dvb(dims, 500 + seed);
            let lam = flip_correspondence(&mu);
            let doubled = lam.lambda.scale_int(2) == mu.lambda;
            if doubled && flip_violations(&mu, 20, &mut rng) == Ok(0) {
                ok += 1;
            }
        }
        (
            ok == n,
            format!("2λ = μ and φ̃_λ∘φ̃_λ = φ̃_μ pointwise for {ok}/{n} random μ"),
        )
    }

    fn faithful(&self) -> (bool, String) {
        let t = self.dg3();
        let distinct: HashSet<[[i8; 6]; 6]> = t.elements.iter().map(|e| e.matrix6()).collect();
        (
            distinct.len() == t.order() && t.order() == 96,
            format!(
                "{} distinct matrices for {} elements",
                distinct.len(),
                t.order()
            ),
        )
    }

    fn properties(&self) -> (bool, String) {
        let t = self.dg3();
        let axioms = t.check_axioms();
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        let random_word = |rng: &mut ChaCha8Rng| {
            let n = rng.gen_range(0..16);
            Word::new(
                (0..n)
                    .map(|_| Generator::ALL[rng.gen_range(0..3)])
                    .collect(),
            )
        };
        let mut mult_bad = 0;
        for _ in 0..500 {
            let (u, v) = (random_word(&mut rng), random_word(&mut rng));
            if eval_word(&u.concat(&v)) != compose(&eval_word(&u), &eval_word(&v)) {
                mult_bad += 1;
            }
        }
        let sign_bad = t
            .elements
            .iter()
            .filter(|e| e.theta.rho.eps != e.perm.signature())
            .count();
        let pairs_bad = t
            .elements
            .iter()
            .filter(|e| !e.theta.slots.preserves_pairs())
            .count();
        let coeff_bad = t
            .elements
            .iter()
            .filter(|e| !e.theta.rho.coeffs_bounded())
            .count();
        let follow_bad = t.elements.iter().filter(|e| !e.slots_follow_perm()).count();
        let ok = axioms.ok() && mult_bad + sign_bad + pairs_bad + coeff_bad + follow_bad == 0;
        (
            ok,
            format!(
                "axioms {}, associativity violations {}, multiplicativity {mult_bad}/500, eps ≠ sgn {sign_bad}, pairs broken {pairs_bad}, unbounded ρ coefficients {coeff_bad}, slots off the permutation {follow_bad}",
                axioms.ok(),
                axioms.assoc_violations
            ),
        )
    }
}

/// Runs the named criteria (all of them for an empty list).
pub fn run_criteria(ids: &[u8]) -> Vec<CriterionResult> {
    let v = Verifier::new();
    if ids.is_empty() {
        v.run_all()
    } else {
        ids.iter().map(|&id| v.run(id)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(criterion_id("split"), Some(7));
        assert_eq!(criterion_id("14"), Some(14));
        assert_eq!(criterion_id("15"), None);
        assert_eq!(criterion_id("nope"), None);
    }

    #[test]
    fn split_detail() {
        let r = run_criteria(&[7]);
        assert!(r[0].pass);
        assert!(r[0].detail.starts_with("not split: 64/64 sections fail"));
        assert!(r[0].to_string().starts_with("PASS criterion  7 (split)"));
    }

    #[test]
    fn unknown_criterion_fails() {
        assert!(!Verifier::new().run(0).pass);
    }
}
