//! Human-readable action rows such as `−μ, −ν, α, −λ, −γ, −β, γν + βμ − ρ`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use super::element::DualityElement;
use super::slot::{PairKey, Slot};
use super::theta::{RhoPart, SignedSlotMap, ThetaAut};
use crate::perm::Perm4;

const MINUS: char = '−';

/// Column order of the per-generator action table.
pub const GENERATOR_TABLE_ORDER: [Slot; 6] = Slot::ALL;

/// Column order of the conjugacy-class table (α, β, γ, λ, μ, ν).
pub const CLASS_TABLE_ORDER: [Slot; 6] = [
    Slot::Alpha,
    Slot::Beta,
    Slot::Gamma,
    Slot::Lambda,
    Slot::Mu,
    Slot::Nu,
];

/// How the ρ entry is written.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RhoStyle {
    /// `αλ + βμ − ρ`
    PairsFirst,
    /// `−ρ + αλ + βμ`
    RhoFirst,
}

/// Structured rendering of an element's action on `G₃`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ActionRow {
    pub perm: Perm4,
    pub slots: SignedSlotMap,
    pub rho: RhoPart,
}

pub fn describe_row(e: &DualityElement) -> ActionRow {
    ActionRow {
        perm: e.perm,
        slots: e.theta.slots,
        rho: e.theta.rho,
    }
}

impl ActionRow {
    pub fn theta(&self) -> ThetaAut {
        ThetaAut {
            slots: self.slots,
            rho: self.rho,
        }
    }

    pub fn render(&self, order: &[Slot; 6], style: RhoStyle) -> String {
        let mut parts: Vec<String> = order
            .iter()
            .map(|&s| signed(self.slots.sign(s) as i64, &self.slots.target(s).to_string()))
            .collect();
        parts.push(render_rho(&self.rho, style));
        parts.join(", ")
    }
}

/// Generator-table column order with the pair products written first.
impl fmt::Display for ActionRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}",
            self.render(&GENERATOR_TABLE_ORDER, RhoStyle::PairsFirst)
        )
    }
}

fn signed(sign: i64, body: &str) -> String {
    if sign < 0 {
        format!("{MINUS}{body}")
    } else {
        body.to_string()
    }
}

pub fn render_rho(rho: &RhoPart, style: RhoStyle) -> String {
    let pairs: Vec<(i64, String)> = PairKey::ALL
        .iter()
        .filter(|q| rho.coeff(**q) != 0)
        .map(|&q| {
            let c = rho.coeff(q);
            let body = if c.abs() == 1 {
                q.symbol()
            } else {
                format!("{}{}", c.abs(), q.symbol())
            };
            (c.signum(), body)
        })
        .collect();
    let rho_term = (i64::from(rho.eps), "ρ".to_string());
    let terms: Vec<(i64, String)> = match style {
        RhoStyle::PairsFirst => pairs.into_iter().chain(std::iter::once(rho_term)).collect(),
        RhoStyle::RhoFirst => std::iter::once(rho_term).chain(pairs).collect(),
    };
    let mut out = String::new();
    for (i, (sign, body)) in terms.iter().enumerate() {
        if i == 0 {
            out.push_str(&signed(*sign, body));
        } else {
            out.push_str(if *sign < 0 { " − " } else { " + " });
            out.push_str(body);
        }
    }
    out
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum RowParseError {
    #[error("expected 7 comma-separated entries, found {0}")]
    EntryCount(usize),
    #[error("bad slot entry {0:?}")]
    BadSlot(String),
    #[error("entries do not form a signed bijection")]
    NotBijective,
    #[error("bad ρ term {0:?}")]
    BadRhoTerm(String),
    #[error("ρ expression must contain ±ρ exactly once")]
    RhoMissing,
}

/// Parses a row written in the given column order; `-` and `−` both denote minus.
pub fn parse_row(text: &str, order: &[Slot; 6]) -> Result<ThetaAut, RowParseError> {
    let fields: Vec<&str> = text.split(',').map(str::trim).collect();
    if fields.len() != 7 {
        return Err(RowParseError::EntryCount(fields.len()));
    }
    let mut entries = [(1i8, Slot::Gamma); 6];
    for (col, field) in order.iter().zip(&fields) {
        let (sign, body) = split_sign(field);
        let mut chars = body.chars();
        let src = match (chars.next().and_then(Slot::from_symbol), chars.next()) {
            (Some(s), None) => s,
            _ => return Err(RowParseError::BadSlot(field.to_string())),
        };
        entries[col.index()] = (sign, src);
    }
    let slots = SignedSlotMap::new(entries).ok_or(RowParseError::NotBijective)?;
    let rho = parse_rho(fields[6])?;
    Ok(ThetaAut { slots, rho })
}

fn split_sign(s: &str) -> (i8, &str) {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('-').or_else(|| s.strip_prefix(MINUS)) {
        (-1, rest.trim())
    } else if let Some(rest) = s.strip_prefix('+') {
        (1, rest.trim())
    } else {
        (1, s)
    }
}

pub fn parse_rho(text: &str) -> Result<RhoPart, RowParseError> {
    let normalized = text.replace(MINUS, "-");
    // Split into signed terms.
    let mut terms: Vec<(i8, String)> = Vec::new();
    let mut sign = 1i8;
    let mut current = String::new();
    for c in normalized.chars() {
        match c {
            '+' | '-' => {
                if !current.trim().is_empty() {
                    terms.push((sign, current.trim().to_string()));
                    current.clear();
                }
                sign = if c == '-' { -1 } else { 1 };
            }
            c if c.is_whitespace() => {}
            c => current.push(c),
        }
    }
    if !current.trim().is_empty() {
        terms.push((sign, current.trim().to_string()));
    }

    let mut eps = None;
    let mut coeff = [0i64; 3];
    for (sign, body) in terms {
        if body == "ρ" {
            if eps.replace(sign).is_some() {
                return Err(RowParseError::RhoMissing);
            }
            continue;
        }
        let letters: Vec<Slot> = body.chars().filter_map(Slot::from_symbol).collect();
        match letters.as_slice() {
            [a, b] if body.chars().count() == 2 && a.complement() == *b => {
                coeff[a.pair_key().index()] += i64::from(sign);
            }
            _ => return Err(RowParseError::BadRhoTerm(body)),
        }
    }
    let eps = eps.ok_or(RowParseError::RhoMissing)?;
    Ok(RhoPart::new(eps, coeff))
}
