use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::slot::Slot;
use super::theta::{RhoPart, SignedSlotMap, ThetaAut};
use crate::perm::Perm4;
use crate::word::{Generator, Word};

/// Canonical form of an element of the triple duality group.
///
/// Two elements are equal iff their permutation parts and θ parts agree;
/// the witness word is informational only.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DualityElement {
    pub perm: Perm4,
    #[serde(flatten)]
    pub theta: ThetaAut,
    pub witness: Word,
}

impl PartialEq for DualityElement {
    fn eq(&self, other: &Self) -> bool {
        self.perm == other.perm && self.theta == other.theta
    }
}

impl Eq for DualityElement {}

impl Hash for DualityElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.perm.hash(state);
        self.theta.hash(state);
    }
}

// Flattened layout for `{"perm":..,"slots":..,"rho":..,"witness":..}`.
impl Serialize for ThetaAut {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("ThetaAut", 2)?;
        st.serialize_field("slots", &self.slots)?;
        st.serialize_field("rho", &self.rho)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for ThetaAut {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            slots: SignedSlotMap,
            rho: RhoPart,
        }
        let raw = Raw::deserialize(deserializer)?;
        Ok(ThetaAut {
            slots: raw.slots,
            rho: raw.rho,
        })
    }
}

impl DualityElement {
    pub fn identity() -> Self {
        DualityElement {
            perm: Perm4::identity(),
            theta: ThetaAut::identity(),
            witness: Word::empty(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.is_identity() && self.theta.is_identity()
    }

    /// Signed slot-map matrix in slot order (γ, β, α, λ, μ, ν).
    pub fn matrix6(&self) -> [[i8; 6]; 6] {
        self.theta.slots.matrix()
    }

    /// The slot map transports index pairs exactly as the permutation does.
    pub fn slots_follow_perm(&self) -> bool {
        Slot::ALL.iter().all(|&s| {
            Slot::from_pair_mask(self.perm.apply_mask(s.pair_mask()))
                == Some(self.theta.slots.target(s))
        })
    }
}

/// Canonical element of a single dualization.
pub fn generator_element(g: Generator) -> DualityElement {
    use Slot::*;
    let (entries, coeff) = match g {
        Generator::X => (
            [
                (-1, Mu),
                (-1, Nu),
                (1, Alpha),
                (-1, Lambda),
                (-1, Gamma),
                (-1, Beta),
            ],
            [0, 1, 1],
        ),
        Generator::Y => (
            [
                (-1, Lambda),
                (1, Beta),
                (-1, Nu),
                (-1, Gamma),
                (-1, Mu),
                (-1, Alpha),
            ],
            [1, 0, 1],
        ),
        Generator::Z => (
            [
                (1, Gamma),
                (-1, Lambda),
                (-1, Mu),
                (-1, Beta),
                (-1, Alpha),
                (-1, Nu),
            ],
            [1, 1, 0],
        ),
    };
    DualityElement {
        perm: Perm4::transposition(0, g.axis()),
        theta: ThetaAut {
            slots: SignedSlotMap::new(entries).expect("generator rows are bijections"),
            rho: RhoPart::new(-1, coeff),
        },
        witness: Word::from(g),
    }
}

/// The element "apply `first`, then `second`".
pub fn compose(first: &DualityElement, second: &DualityElement) -> DualityElement {
    DualityElement {
        perm: first.perm.compose(&second.perm),
        theta: first.theta.then(&second.theta),
        witness: first.witness.concat(&second.witness),
    }
}

pub fn invert(e: &DualityElement) -> DualityElement {
    DualityElement {
        perm: e.perm.inverse(),
        theta: e.theta.inverse(),
        witness: e.witness.reversed(),
    }
}

/// Evaluates a word letter by letter, leftmost letter first.
pub fn eval_word(w: &Word) -> DualityElement {
    let mut acc = DualityElement::identity();
    for &g in w.letters() {
        acc = compose(&acc, &generator_element(g));
    }
    acc.witness = w.clone();
    acc
}

/// Whether two words represent naturally isomorphic functors.
pub fn equal(w1: &Word, w2: &Word) -> bool {
    eval_word(w1) == eval_word(w2)
}

pub fn element_order(e: &DualityElement) -> usize {
    let mut n = 1;
    let mut power = e.clone();
    while !power.is_identity() {
        power = compose(&power, e);
        n += 1;
    }
    n
}

pub fn matrix6(e: &DualityElement) -> [[i8; 6]; 6] {
    e.matrix6()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::parse_word;

    fn ev(text: &str) -> DualityElement {
        eval_word(&parse_word(text).unwrap())
    }

    #[test]
    fn generators_are_involutions() {
        for g in Generator::ALL {
            let e = generator_element(g);
            assert!(compose(&e, &e).is_identity());
            assert_eq!(invert(&e), e);
            assert!(e.slots_follow_perm());
        }
    }

    #[test]
    fn coxeter_relations() {
        for w in ["(XY)^3", "(YZ)^3", "(ZX)^3", "XX", "YY", "ZZ"] {
            assert!(ev(w).is_identity(), "{w}");
        }
    }

    #[test]
    fn equalities_from_relations() {
        assert!(equal(
            &parse_word("XYX").unwrap(),
            &parse_word("YXY").unwrap()
        ));
        assert!(equal(
            &parse_word("(XYZ)^4").unwrap(),
            &parse_word("(ZXZY)^2").unwrap()
        ));
        assert!(!equal(&parse_word("X").unwrap(), &parse_word("Y").unwrap()));
        assert!(!equal(
            &parse_word("(XYXZ)^2").unwrap(),
            &parse_word("1").unwrap()
        ));
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&ev("XYZ")), 8);
        assert_eq!(element_order(&ev("1")), 1);
        assert_eq!(element_order(&ev("(XYXZ)^2")), 2);
        assert_eq!(element_order(&ev("XY")), 3);
    }

    #[test]
    fn inverse_of_product() {
        let e = ev("XYZ");
        assert!(compose(&e, &invert(&e)).is_identity());
        assert!(compose(&invert(&e), &e).is_identity());
        assert_eq!(invert(&e), ev("ZYX"));
        assert_eq!(
            invert(&DualityElement::identity()),
            DualityElement::identity()
        );
    }

    #[test]
    fn witness_excluded_from_equality() {
        let mut e = ev("XYX");
        e.witness = parse_word("YXY").unwrap();
        assert_eq!(e, ev("XYX"));
        assert_eq!(eval_word(&Word::empty()).witness, Word::empty());
    }

    #[test]
    fn element_json_layout() {
        let json = serde_json::to_value(generator_element(Generator::X)).unwrap();
        assert_eq!(json["perm"], serde_json::json!([1, 0, 2, 3]));
        assert_eq!(
            json["slots"]["gamma"],
            serde_json::json!({"src": "mu", "sign": -1})
        );
        assert_eq!(json["rho"]["eps"], serde_json::json!(-1));
        assert_eq!(json["witness"], serde_json::json!("X"));
        let back: DualityElement = serde_json::from_value(json).unwrap();
        assert_eq!(back, generator_element(Generator::X));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn any_word(max: usize) -> impl Strategy<Value = Word> {
            prop::collection::vec(prop::sample::select(Generator::ALL.to_vec()), 0..=max)
                .prop_map(Word::new)
        }

        fn mat_mul(a: &[[i8; 6]; 6], b: &[[i8; 6]; 6]) -> [[i8; 6]; 6] {
            let mut m = [[0i8; 6]; 6];
            for i in 0..6 {
                for j in 0..6 {
                    m[i][j] = (0..6).map(|k| a[i][k] * b[k][j]).sum();
                }
            }
            m
        }

        proptest! {
            #[test]
            fn eval_is_multiplicative(w1 in any_word(12), w2 in any_word(12)) {
                prop_assert_eq!(
                    eval_word(&w1.concat(&w2)),
                    compose(&eval_word(&w1), &eval_word(&w2))
                );
            }

            #[test]
            fn reachable_elements_are_well_formed(w in any_word(24)) {
                let e = eval_word(&w);
                prop_assert_eq!(e.theta.rho.eps, e.perm.signature());
                prop_assert!(e.theta.slots.preserves_pairs());
                prop_assert!(e.theta.rho.coeffs_bounded());
                prop_assert!(e.slots_follow_perm());
            }

            #[test]
            fn matrix_is_antihomomorphic(w1 in any_word(10), w2 in any_word(10)) {
                let (a, b) = (eval_word(&w1), eval_word(&w2));
                prop_assert_eq!(matrix6(&compose(&a, &b)), mat_mul(&matrix6(&b), &matrix6(&a)));
            }

            #[test]
            fn reversal_inverts(w in any_word(16)) {
                prop_assert_eq!(eval_word(&w.reversed()), invert(&eval_word(&w)));
            }
        }
    }
}
