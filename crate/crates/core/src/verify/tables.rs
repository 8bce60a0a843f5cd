//! Published action tables, transcribed as printed, and a row-by-row check
//! of each against the symbolic engine.

use std::fmt;

use serde::Serialize;

use crate::group::{conjugacy_classes, GroupTable};
use crate::symbolic::{
    describe_row, element_order, eval_word, parse_row, DualityElement, RhoStyle, Slot,
    CLASS_TABLE_ORDER, GENERATOR_TABLE_ORDER,
};
use crate::word::parse_word;

/// Action of the generators, with the domain of the new ρ.
pub const GENERATOR_ROWS: [(&str, &str, &str); 3] = [
    ("X", "−μ, −ν, α, −λ, −γ, −β, γν + βμ − ρ", "0,2,3"),
    ("Y", "−λ, β, −ν, −γ, −μ, −α, αλ + γν − ρ", "1,0,3"),
    ("Z", "γ, −λ, −μ, −β, −α, −ν, αλ + βμ − ρ", "1,2,0"),
];

/// Step-by-step action of `(XYXZ)²`.
pub const XYXZ_STEPS: [(&str, &str); 5] = [
    ("X", "−μ, −ν, α, −λ, −γ, −β, γν + βμ − ρ"),
    ("YX", "μ, α, −ν, γ, λ, −β, ρ − βμ − γν"),
    ("XYX", "−γ, α, β, −μ, −λ, ν, −ρ"),
    ("XYXZ", "−γ, μ, λ, −α, −β, −ν, ρ − αλ − βμ"),
    ("(XYXZ)^2", "γ, −β, −α, −λ, −μ, ν, ρ"),
];

/// The non-identity elements of the kernel of π.
pub const KERNEL_ROWS: [(&str, &str); 3] = [
    ("(XYXZ)^2", "γ, −β, −α, −λ, −μ, ν, ρ"),
    ("(YZYX)^2", "−γ, −β, α, λ, −μ, −ν, ρ"),
    ("(ZXZY)^2", "−γ, β, −α, −λ, μ, −ν, ρ"),
];

pub const XYZ4_ROW: (&str, &str) = ("(XYZ)^4", "−γ, β, −α, −λ, μ, −ν, ρ");

/// Class representative, class size, element order, and action in the
/// column order (α, β, γ, λ, μ, ν, ρ).
pub const CLASS_ROWS: [(&str, usize, usize, &str); 9] = [
    ("(XYXZ)^2", 3, 2, "−α, −β, γ, −λ, −μ, ν, ρ"),
    ("(XYZ)^2", 3, 4, "−λ, β, ν, α, μ, −γ, ρ − αλ − γν"),
    ("(ZYX)^2", 3, 4, "λ, β, −ν, −α, μ, γ, ρ − αλ − γν"),
    ("XZXY", 6, 4, "λ, −μ, ν, −α, −β, −γ, ρ − αλ − γν"),
    ("XY", 32, 3, "β, −ν, λ, μ, γ, −α, ρ − αλ − γν"),
    ("Z", 12, 2, "−μ, −λ, γ, −β, −α, −ν, −ρ + αλ + βμ"),
    ("XYZYXZY", 12, 4, "μ, −λ, −γ, β, −α, ν, −ρ + αλ + βμ"),
    ("XYZ", 12, 8, "−γ, −μ, −λ, ν, −β, α, −ρ + αλ + βμ"),
    ("ZYX", 12, 8, "ν, −μ, −α, γ, −β, λ, −ρ + βμ + γν"),
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowCheck {
    pub table: u8,
    pub label: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

impl fmt::Display for RowCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.pass { "ok  " } else { "FAIL" };
        write!(
            f,
            "{status} table {} {}: {}",
            self.table, self.label, self.expected
        )?;
        if !self.pass {
            write!(f, "\n       computed: {}", self.computed)?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerificationReport {
    pub checks: Vec<RowCheck>,
}

impl VerificationReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowCheck> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn for_table(&self, table: u8) -> VerificationReport {
        VerificationReport {
            checks: self
                .checks
                .iter()
                .filter(|c| c.table == table)
                .cloned()
                .collect(),
        }
    }
}

fn element(word: &str) -> DualityElement {
    eval_word(&parse_word(word).expect("table words parse"))
}

fn action_check(
    table: u8,
    word: &str,
    printed: &str,
    order: &[Slot; 6],
    style: RhoStyle,
) -> RowCheck {
    let e = element(word);
    let computed = describe_row(&e).render(order, style);
    let pass = parse_row(printed, order).is_ok_and(|t| t == e.theta);
    RowCheck {
        table,
        label: word.to_string(),
        expected: printed.to_string(),
        computed,
        pass,
    }
}

fn fact(table: u8, label: &str, expected: String, computed: String) -> RowCheck {
    RowCheck {
        table,
        label: label.to_string(),
        pass: expected == computed,
        expected,
        computed,
    }
}

fn mask_of(list: &str) -> u8 {
    list.split(',')
        .map(|i| 1u8 << i.trim().parse::<u8>().expect("index"))
        .sum()
}

fn table2() -> Vec<RowCheck> {
    let mut out = Vec::new();
    for (word, row, domain) in GENERATOR_ROWS {
        out.push(action_check(
            2,
            word,
            row,
            &GENERATOR_TABLE_ORDER,
            RhoStyle::PairsFirst,
        ));
        let image = element(word).perm.apply_mask(mask_of("1,2,3"));
        out.push(fact(
            2,
            &format!("{word} ρ domain"),
            format!("{:#06b}", mask_of(domain)),
            format!("{image:#06b}"),
        ));
    }
    out
}

fn table3() -> Vec<RowCheck> {
    XYXZ_STEPS
        .iter()
        .map(|(w, row)| action_check(3, w, row, &GENERATOR_TABLE_ORDER, RhoStyle::PairsFirst))
        .collect()
}

fn table4() -> Vec<RowCheck> {
    KERNEL_ROWS
        .iter()
        .map(|(w, row)| action_check(4, w, row, &GENERATOR_TABLE_ORDER, RhoStyle::PairsFirst))
        .collect()
}

fn table5() -> Vec<RowCheck> {
    let (w, row) = XYZ4_ROW;
    let e = element(w);
    vec![
        action_check(5, w, row, &GENERATOR_TABLE_ORDER, RhoStyle::PairsFirst),
        fact(
            5,
            "(XYZ)^4 is not the identity",
            "true".into(),
            (!e.is_identity()).to_string(),
        ),
        fact(
            5,
            "(XYZ)^4 = (ZXZY)^2",
            "true".into(),
            (e == element("(ZXZY)^2")).to_string(),
        ),
        fact(
            5,
            "order of XYZ",
            "8".into(),
            element_order(&element("XYZ")).to_string(),
        ),
    ]
}

fn table6(t: &GroupTable<DualityElement>) -> Vec<RowCheck> {
    let classes = conjugacy_classes(t);
    let mut out = Vec::new();
    for (word, size, order, row) in CLASS_ROWS {
        let i = t
            .index_of(&element(word))
            .expect("every word lies in the group");
        let class = classes
            .iter()
            .find(|c| c.members.contains(&i))
            .expect("classes partition the group");
        out.push(fact(
            6,
            &format!("{word} size, order"),
            format!("{size}, {order}"),
            format!("{}, {}", class.size(), class.order),
        ));
        out.push(action_check(
            6,
            word,
            row,
            &CLASS_TABLE_ORDER,
            RhoStyle::RhoFirst,
        ));
    }
    out
}

/// Checks every printed row; failures keep the printed and computed rows.
pub fn verify_paper_tables(t: &GroupTable<DualityElement>) -> VerificationReport {
    let mut checks = table2();
    checks.extend(table3());
    checks.extend(table4());
    checks.extend(table5());
    checks.extend(table6(t));
    VerificationReport { checks }
}

/// Whether a printed row is the action of any element of the group.
pub fn row_occurs(t: &GroupTable<DualityElement>, printed: &str, order: &[Slot; 6]) -> bool {
    parse_row(printed, order).is_ok_and(|theta| t.elements.iter().any(|e| e.theta == theta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::enumerate_dg3;

    #[test]
    fn generator_and_kernel_tables_match() {
        let t = enumerate_dg3().unwrap();
        let r = verify_paper_tables(&t);
        for table in 2..=5 {
            let sub = r.for_table(table);
            assert!(sub.all_pass(), "{:#?}", sub.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn class_table_has_exactly_two_misprinted_rows() {
        let t = enumerate_dg3().unwrap();
        let r = verify_paper_tables(&t).for_table(6);
        let failed: Vec<&str> = r.failures().map(|c| c.label.as_str()).collect();
        assert_eq!(failed, ["XZXY", "XYZ"]);
        for (word, _, _, row) in CLASS_ROWS {
            let printed_exists = row_occurs(&t, row, &CLASS_TABLE_ORDER);
            assert_eq!(printed_exists, !failed.contains(&word), "{word}");
        }
        let computed: Vec<&str> = r.failures().map(|c| c.computed.as_str()).collect();
        assert_eq!(
            computed,
            [
                "λ, −β, ν, −α, −μ, −γ, ρ − αλ − γν",
                "−γ, −μ, λ, ν, −β, α, −ρ + αλ + βμ"
            ]
        );
    }

    #[test]
    fn a_wrong_row_is_reported() {
        let c = action_check(
            2,
            "X",
            "μ, −ν, α, −λ, −γ, −β, γν + βμ − ρ",
            &GENERATOR_TABLE_ORDER,
            RhoStyle::PairsFirst,
        );
        assert!(!c.pass);
        assert!(c.to_string().contains("computed: −μ"));
    }
}
