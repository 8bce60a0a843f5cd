//! Dense tensors over the rationals.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Row-major dense tensor of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tensor {
    shape: Vec<usize>,
    entries: Vec<Q>,
}

impl Tensor {
    pub fn zeros(shape: &[usize]) -> Self {
        Tensor {
            shape: shape.to_vec(),
            entries: vec![Q::zero(); shape.iter().product()],
        }
    }

    pub fn from_entries(shape: &[usize], entries: Vec<Q>) -> Option<Self> {
        (entries.len() == shape.iter().product::<usize>()).then(|| Tensor {
            shape: shape.to_vec(),
            entries,
        })
    }

    pub fn from_fn(shape: &[usize], mut f: impl FnMut(&[usize]) -> Q) -> Self {
        let mut t = Tensor::zeros(shape);
        let mut idx = vec![0; shape.len()];
        for k in 0..t.entries.len() {
            t.entries[k] = f(&idx);
            advance(&mut idx, shape);
        }
        t
    }

    pub fn shape(&self) -> &[usize] {
        &self.shape
    }

    pub fn entries(&self) -> &[Q] {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut [Q] {
        &mut self.entries
    }

    pub fn rank(&self) -> usize {
        self.shape.len()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.shape.len());
        idx.iter().zip(&self.shape).fold(0, |acc, (&i, &n)| {
            debug_assert!(i < n);
            acc * n + i
        })
    }

    pub fn get(&self, idx: &[usize]) -> &Q {
        &self.entries[self.offset(idx)]
    }

    pub fn set(&mut self, idx: &[usize], v: Q) {
        let k = self.offset(idx);
        self.entries[k] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Axis `i` of the result is axis `order[i]` of `self`.
    pub fn permute_axes(&self, order: &[usize]) -> Tensor {
        assert_eq!(order.len(), self.rank());
        let shape: Vec<usize> = order.iter().map(|&a| self.shape[a]).collect();
        let mut src = vec![0; self.rank()];
        Tensor::from_fn(&shape, |idx| {
            for (i, &a) in order.iter().enumerate() {
                src[a] = idx[i];
            }
            self.get(&src).clone()
        })
    }

    /// Sums over axis `i` of `self` against axis `j` of `other`; the result
    /// carries the remaining axes of `self`, then those of `other`.
    pub fn contract(&self, i: usize, other: &Tensor, j: usize) -> Tensor {
        assert_eq!(
            self.shape[i], other.shape[j],
            "contracted axes differ in size"
        );
        let a_rest: Vec<usize> = (0..self.rank()).filter(|&k| k != i).collect();
        let b_rest: Vec<usize> = (0..other.rank()).filter(|&k| k != j).collect();
        let shape: Vec<usize> = a_rest
            .iter()
            .map(|&k| self.shape[k])
            .chain(b_rest.iter().map(|&k| other.shape[k]))
            .collect();
        let mut ai = vec![0; self.rank()];
        let mut bi = vec![0; other.rank()];
        Tensor::from_fn(&shape, |idx| {
            for (n, &k) in a_rest.iter().enumerate() {
                ai[k] = idx[n];
            }
            for (n, &k) in b_rest.iter().enumerate() {
                bi[k] = idx[a_rest.len() + n];
            }
            let mut acc = Q::zero();
            for s in 0..self.shape[i] {
                ai[i] = s;
                bi[j] = s;
                let x = self.get(&ai);
                if !x.is_zero() {
                    acc += x * other.get(&bi);
                }
            }
            acc
        })
    }

    /// Contracts the leading axes with the given vectors, leaving the last axis.
    pub fn eval(&self, vectors: &[&[Q]]) -> Vec<Q> {
        assert_eq!(
            vectors.len() + 1,
            self.rank(),
            "one vector per leading axis"
        );
        for (v, &n) in vectors.iter().zip(&self.shape) {
            assert_eq!(v.len(), n, "vector length does not match axis");
        }
        let out_len = *self.shape.last().expect("rank at least one");
        let mut out = vec![Q::zero(); out_len];
        let mut idx = vec![0; self.rank()];
        for (k, x) in self.entries.iter().enumerate() {
            if !x.is_zero() {
                let mut w = x.clone();
                for (v, &i) in vectors.iter().zip(&idx) {
                    if v[i].is_zero() {
                        w = Q::zero();
                        break;
                    }
                    w *= &v[i];
                }
                if !w.is_zero() {
                    out[idx[self.rank() - 1]] += w;
                }
            }
            if k + 1 < self.entries.len() {
                advance(&mut idx, &self.shape);
            }
        }
        out
    }

    pub fn scale(&self, c: &Q) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|x| x * c).collect(),
        }
    }

    pub fn scale_int(&self, c: i64) -> Tensor {
        self.scale(&q(c))
    }

    pub fn add(&self, other: &Tensor) -> Tensor {
        assert_eq!(self.shape, other.shape, "shape mismatch in addition");
        Tensor {
            shape: self.shape.clone(),
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn neg(&self) -> Tensor {
        Tensor {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(|x| -x).collect(),
        }
    }
}

/// Row-major successor of a multi-index; wraps to all zeros.
pub(crate) fn advance(idx: &mut [usize], shape: &[usize]) {
    for k in (0..idx.len()).rev() {
        idx[k] += 1;
        if idx[k] < shape[k] {
            return;
        }
        idx[k] = 0;
    }
}

pub fn dot(a: &[Q], b: &[Q]) -> Q {
    assert_eq!(a.len(), b.len(), "dot of vectors of different length");
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(Q::zero(), |acc, (x, y)| acc + x * y)
}

pub fn format_q(x: &Q) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Serde adapter writing rational vectors as strings.
pub(crate) mod qvec {
    use super::{format_q, Q};
    use serde::{de::Error, Deserialize, Deserializer, Serializer};
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(v: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|x| Q::from_str(x).map_err(|_| D::Error::custom(format!("bad rational {x:?}"))))
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct TensorJson {
    shape: Vec<usize>,
    entries: Vec<String>,
}

impl Serialize for Tensor {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        TensorJson {
            shape: self.shape.clone(),
            entries: self.entries.iter().map(format_q).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Tensor {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let j = TensorJson::deserialize(deserializer)?;
        let entries = j
            .entries
            .iter()
            .map(|s| Q::from_str(s).map_err(|_| D::Error::custom(format!("bad rational {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Tensor::from_entries(&j.shape, entries)
            .ok_or_else(|| D::Error::custom("entry count does not match shape"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(shape: &[usize], xs: &[i64]) -> Tensor {
        Tensor::from_entries(shape, xs.iter().map(|&x| q(x)).collect()).unwrap()
    }

    #[test]
    fn permute_matches_index_swap() {
        let a = t(&[2, 3], &[1, 2, 3, 4, 5, 6]);
        let b = a.permute_axes(&[1, 0]);
        assert_eq!(b.shape(), &[3, 2]);
        assert_eq!(b.get(&[2, 1]), a.get(&[1, 2]));
        assert_eq!(b.permute_axes(&[1, 0]), a);
    }

    #[test]
    fn contraction_is_matrix_product() {
        let a = t(&[2, 2], &[1, 2, 3, 4]);
        let b = t(&[2, 2], &[5, 6, 7, 8]);
        // (AB)[i][k] = Σ_j A[i][j] B[j][k]
        assert_eq!(a.contract(1, &b, 0), t(&[2, 2], &[19, 22, 43, 50]));
    }

    #[test]
    fn eval_contracts_leading_axes() {
        let a = t(&[2, 2, 1], &[1, 2, 3, 4]);
        let out = a.eval(&[&[q(1), q(1)], &[q(0), q(1)]]);
        assert_eq!(out, vec![q(6)]);
    }

    #[test]
    fn json_uses_lowest_terms() {
        let x = Tensor::from_entries(&[2], vec![Q::new(BigInt::from(2), BigInt::from(4)), q(-3)])
            .unwrap();
        let json = serde_json::to_value(&x).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"shape": [2], "entries": ["1/2", "-3"]})
        );
        let back: Tensor = serde_json::from_value(json).unwrap();
        assert_eq!(back, x);
        assert!(serde_json::from_value::<Tensor>(
            serde_json::json!({"shape": [3], "entries": ["1"]})
        )
        .is_err());
    }

    #[test]
    fn empty_shapes_are_allowed() {
        let z = Tensor::zeros(&[0, 2]);
        assert!(z.is_empty());
        assert!(z.is_zero());
        assert_eq!(z.permute_axes(&[1, 0]).shape(), &[2, 0]);
    }
}
