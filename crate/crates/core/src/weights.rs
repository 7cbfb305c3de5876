//! Serre weights.
//!
//! A local weight is a non-increasing integer tuple. A weight for a residue
//! field of degree `f` is a family of `f` such tuples indexed by the
//! embeddings `σ_j = σ_0 ∘ Frob^j` of the residue field, so that
//! `σ_j(x) = σ_0(x)^{l^j}`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::prime::OddPrime;

/// A non-increasing tuple `a_1 >= a_2 >= ... >= a_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "WeightRecord")]
pub struct LocalWeight {
    entries: Vec<i64>,
}

#[derive(Deserialize)]
struct WeightRecord {
    entries: Vec<i64>,
}

impl TryFrom<WeightRecord> for LocalWeight {
    type Error = Error;

    fn try_from(r: WeightRecord) -> Result<Self> {
        LocalWeight::new(r.entries)
    }
}

impl LocalWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptyWeight);
        }
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing(entries));
        }
        Ok(LocalWeight { entries })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn last(&self) -> i64 {
        *self.entries.last().expect("non-empty")
    }

    /// `a_i - a_{i+1}` for `i = 1..n-1`.
    pub fn differences(&self) -> impl Iterator<Item = i64> + '_ {
        self.entries.windows(2).map(|w| w[0] - w[1])
    }

    /// `a + k·(1, ..., 1)`.
    pub fn shifted(&self, k: i64) -> LocalWeight {
        LocalWeight {
            entries: self.entries.iter().map(|&x| x + k).collect(),
        }
    }
}

impl FromStr for LocalWeight {
    type Err = Error;

    /// Parses `"a1,a2,...,an"`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|x| x.parse::<i64>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::MalformedWeight(s.to_string()))?;
        LocalWeight::new(entries)
    }
}

impl fmt::Display for LocalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

/// Degree of the residue field over `F_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ResidueDegree(u32);

impl ResidueDegree {
    pub const ONE: ResidueDegree = ResidueDegree(1);

    pub fn new(f: u32) -> Result<Self> {
        if f == 0 {
            return Err(Error::ZeroResidueDegree);
        }
        Ok(ResidueDegree(f))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

fn same_rank(family: &[LocalWeight]) -> Option<usize> {
    let n = family.first()?.rank();
    family.iter().all(|a| a.rank() == n).then_some(n)
}

/// Every successive difference in every component is at most `l - 1`.
///
/// Families of the wrong length or of mixed rank are not weights.
pub fn is_serre_weight(l: OddPrime, f: ResidueDegree, family: &[LocalWeight]) -> bool {
    let bound = l.get() as i64 - 1;
    family.len() == f.get() as usize
        && same_rank(family).is_some()
        && family.iter().all(|a| a.differences().all(|d| d <= bound))
}

/// Two weights are equivalent when their successive differences agree and
/// the character `x ↦ ∏_j σ_j(x)^{a_{σ_j,n} - b_{σ_j,n}}` of `F_{l^f}^×` is
/// trivial, i.e. `Σ_j l^j (a_{σ_j,n} - b_{σ_j,n}) ≡ 0 mod l^f - 1`.
pub fn equivalent(l: OddPrime, f: ResidueDegree, a: &[LocalWeight], b: &[LocalWeight]) -> bool {
    let fu = f.get() as usize;
    if a.len() != fu || b.len() != fu {
        return false;
    }
    if a.iter()
        .zip(b)
        .any(|(x, y)| x.rank() != y.rank() || x.differences().ne(y.differences()))
    {
        return false;
    }
    let Ok(modulus) = l.modulus(f.get()) else {
        return false;
    };
    let modulus = modulus as i128;
    let lp = l.get() as i128;
    let mut total = 0i128;
    let mut power = 1i128;
    for (x, y) in a.iter().zip(b) {
        total = (total + power * (x.last() - y.last()) as i128).rem_euclid(modulus);
        power = power * lp % modulus;
    }
    total == 0
}

/// The equivalent weight with `a_n ∈ [0, l-2]` (residue degree one).
pub fn canonical_rep(l: OddPrime, a: &LocalWeight) -> LocalWeight {
    let p = l.get() as i64 - 1;
    let last = a.last();
    a.shifted(last.rem_euclid(p) - last)
}

/// [`canonical_rep`] on a family; only residue degree one has a canonical
/// shift.
pub fn canonical_rep_family(
    l: OddPrime,
    f: ResidueDegree,
    family: &[LocalWeight],
) -> Result<Vec<LocalWeight>> {
    if f.get() != 1 {
        return Err(Error::ResidueDegreeUnsupported(f.get()));
    }
    Ok(family.iter().map(|a| canonical_rep(l, a)).collect())
}

/// Canonical representatives of all weights of rank `n` for residue degree
/// one, in lexicographic order. There are `(l-1)·l^{n-1}` of them.
pub fn enumerate_weights(l: OddPrime, n: usize) -> Vec<LocalWeight> {
    if n == 0 {
        return Vec::new();
    }
    let lp = l.get() as i64;
    let mut out = Vec::new();
    for last in 0..lp - 1 {
        let mut stack = vec![vec![last]];
        while let Some(tail) = stack.pop() {
            if tail.len() == n {
                let mut entries = tail;
                entries.reverse();
                out.push(LocalWeight { entries });
                continue;
            }
            let top = *tail.last().unwrap();
            for d in 0..lp {
                let mut next = tail.clone();
                next.push(top + d);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

/// Hodge–Tate weights of a crystalline lift of Hodge type `a`:
/// `a_i + n - i` for `i = 1..n`, strictly decreasing.
pub fn hodge_type(a: &LocalWeight) -> Vec<i64> {
    let n = a.rank() as i64;
    a.entries
        .iter()
        .enumerate()
        .map(|(i, &x)| x + n - 1 - i as i64)
        .collect()
}

/// Whether `lift` is a lift of the weight `a`.
///
/// `lift` lists one weight per embedding `τ` of the local field, tagged with
/// the index of the residue embedding `σ` it lies over. It is a lift when
/// over every `σ` some `τ` carries `a_σ` and every other `τ` carries zero.
pub fn is_lift(lift: &[(usize, LocalWeight)], a: &[LocalWeight]) -> bool {
    if lift.iter().any(|(s, _)| *s >= a.len()) {
        return false;
    }
    a.iter().enumerate().all(|(s, target)| {
        let above: Vec<&LocalWeight> = lift
            .iter()
            .filter(|(t, _)| *t == s)
            .map(|(_, w)| w)
            .collect();
        if above.iter().any(|w| w.rank() != target.rank()) {
            return false;
        }
        let nonzero: Vec<&&LocalWeight> = above
            .iter()
            .filter(|w| w.entries.iter().any(|&x| x != 0))
            .collect();
        match nonzero.as_slice() {
            [] => !above.is_empty() && target.entries.iter().all(|&x| x == 0),
            [only] => **only == target,
            _ => false,
        }
    })
}

/// `(-a_n, ..., -a_1)`, the weight at the conjugate place.
pub fn dual_weight(a: &LocalWeight) -> LocalWeight {
    LocalWeight {
        entries: a.entries.iter().rev().map(|&x| -x).collect(),
    }
}

/// One place above `l` of a global weight.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Place {
    /// Label of the conjugate place `w^c`.
    pub partner: String,
    /// Weights indexed by residue embeddings `σ_j`; the conjugate place uses
    /// the same indexing.
    pub family: Vec<LocalWeight>,
}

/// Weights at all places above `l`, with the conjugation pairing supplied by
/// the caller.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GlobalWeight {
    pub places: BTreeMap<String, Place>,
}

impl GlobalWeight {
    pub fn insert_pair(
        &mut self,
        w: &str,
        wc: &str,
        at_w: Vec<LocalWeight>,
        at_wc: Vec<LocalWeight>,
    ) {
        self.places.insert(
            w.to_string(),
            Place {
                partner: wc.to_string(),
                family: at_w,
            },
        );
        self.places.insert(
            wc.to_string(),
            Place {
                partner: w.to_string(),
                family: at_wc,
            },
        );
    }
}

/// `a_{σ,i} + a_{σc,n+1-i} = 0` at every paired place.
pub fn check_global_duality(g: &GlobalWeight) -> Result<bool> {
    for (label, place) in &g.places {
        let partner = g
            .places
            .get(&place.partner)
            .filter(|p| &p.partner == label)
            .ok_or_else(|| Error::UnpairedPlace(label.clone()))?;
        if place.family.len() != partner.family.len() {
            return Ok(false);
        }
        for (a, b) in place.family.iter().zip(&partner.family) {
            if &dual_weight(a) != b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(p: i64) -> OddPrime {
        OddPrime::new(p).unwrap()
    }

    fn w(xs: &[i64]) -> LocalWeight {
        LocalWeight::new(xs.to_vec()).unwrap()
    }

    const F1: ResidueDegree = ResidueDegree::ONE;

    #[test]
    fn construction() {
        assert_eq!(LocalWeight::new(vec![]), Err(Error::EmptyWeight));
        assert!(matches!(
            LocalWeight::new(vec![0, 1]),
            Err(Error::NotDecreasing(_))
        ));
        assert_eq!("7,3,0".parse::<LocalWeight>().unwrap(), w(&[7, 3, 0]));
        assert_eq!("-1,-2,-2".parse::<LocalWeight>().unwrap(), w(&[-1, -2, -2]));
        assert!(matches!(
            "7, 3".parse::<LocalWeight>(),
            Err(Error::MalformedWeight(_))
        ));
        assert!(matches!(
            "".parse::<LocalWeight>(),
            Err(Error::MalformedWeight(_))
        ));
        assert!(ResidueDegree::new(0).is_err());
    }

    #[test]
    fn serre_weight_examples() {
        assert!(is_serre_weight(l(5), F1, &[w(&[4, 2, 0])]));
        assert!(!is_serre_weight(l(5), F1, &[w(&[9, 2, 0])]));
        assert!(is_serre_weight(l(3), F1, &[w(&[2, 0, -2])]));
        assert!(!is_serre_weight(l(3), F1, &[w(&[2, 0, -2]), w(&[0, 0, 0])]));
        let f2 = ResidueDegree::new(2).unwrap();
        assert!(is_serre_weight(l(3), f2, &[w(&[2, 0]), w(&[1, 1])]));
        assert!(!is_serre_weight(l(3), f2, &[w(&[2, 0]), w(&[1, 1, 1])]));
    }

    #[test]
    fn equivalence_examples() {
        assert!(equivalent(l(5), F1, &[w(&[1, 0, 0])], &[w(&[5, 4, 4])]));
        assert!(!equivalent(l(5), F1, &[w(&[1, 0, 0])], &[w(&[2, 1, 1])]));
        assert!(!equivalent(l(5), F1, &[w(&[2, 0, 0])], &[w(&[5, 4, 4])]));
        let f2 = ResidueDegree::new(2).unwrap();
        assert!(equivalent(
            l(3),
            f2,
            &[w(&[0]), w(&[1])],
            &[w(&[3]), w(&[0])]
        ));
        assert!(!equivalent(
            l(3),
            f2,
            &[w(&[0]), w(&[1])],
            &[w(&[1]), w(&[0])]
        ));
    }

    #[test]
    fn residue_degree_two_equivalence_matches_character_evaluation() {
        // F_9 = F_3[i], i^2 = -1; g = 1 + i generates F_9^×. Represent
        // elements as (re, im) mod 3. σ_0 is the identity, σ_1 = Frobenius.
        fn mul(x: (i64, i64), y: (i64, i64)) -> (i64, i64) {
            (
                (x.0 * y.0 - x.1 * y.1).rem_euclid(3),
                (x.0 * y.1 + x.1 * y.0).rem_euclid(3),
            )
        }
        fn pow(x: (i64, i64), k: i64) -> (i64, i64) {
            (0..k.rem_euclid(8)).fold((1, 0), |acc, _| mul(acc, x))
        }
        let g = (1, 1);
        assert_ne!(pow(g, 4), (1, 0));
        let frob = |x| pow(x, 3);
        // character value at g for shifts (k0, k1) = a_n - b_n per embedding
        let value = |k0: i64, k1: i64| mul(pow(g, k0), pow(frob(g), k1));
        let lp = l(3);
        let f2 = ResidueDegree::new(2).unwrap();
        for k0 in -4..=4 {
            for k1 in -4..=4 {
                let a = [w(&[k0]), w(&[k1])];
                let b = [w(&[0]), w(&[0])];
                assert_eq!(
                    equivalent(lp, f2, &a, &b),
                    value(k0, k1) == (1, 0),
                    "{k0} {k1}"
                );
            }
        }
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_rep(l(5), &w(&[5, 4, 4])), w(&[1, 0, 0]));
        assert_eq!(canonical_rep(l(5), &w(&[4, 2, 0])), w(&[4, 2, 0]));
        assert_eq!(canonical_rep(l(3), &w(&[-1, -2, -2])), w(&[1, 0, 0]));
        let f2 = ResidueDegree::new(2).unwrap();
        assert_eq!(
            canonical_rep_family(l(3), f2, &[w(&[0]), w(&[0])]),
            Err(Error::ResidueDegreeUnsupported(2))
        );
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_weights(l(3), 1), vec![w(&[0]), w(&[1])]);
        assert_eq!(enumerate_weights(l(3), 2).len(), 6);
        assert_eq!(enumerate_weights(l(5), 3).len(), 100);
        assert_eq!(enumerate_weights(l(7), 3).len(), 6 * 49);
        assert!(enumerate_weights(l(5), 0).is_empty());
    }

    #[test]
    fn hodge_examples() {
        assert_eq!(hodge_type(&w(&[0, 0, 0])), vec![2, 1, 0]);
        assert_eq!(hodge_type(&w(&[7, 3, 0])), vec![9, 4, 0]);
        assert_eq!(hodge_type(&w(&[5])), vec![5]);
    }

    #[test]
    fn lift_examples() {
        // one embedding per residue embedding: a lift is the weight itself
        assert!(is_lift(&[(0, w(&[4, 2, 0]))], &[w(&[4, 2, 0])]));
        assert!(!is_lift(&[(0, w(&[4, 2, 1]))], &[w(&[4, 2, 0])]));
        // two embeddings over one residue embedding
        let a = [w(&[1, 0])];
        assert!(is_lift(&[(0, w(&[1, 0])), (0, w(&[0, 0]))], &a));
        assert!(is_lift(&[(0, w(&[0, 0])), (0, w(&[1, 0]))], &a));
        assert!(!is_lift(&[(0, w(&[1, 0])), (0, w(&[1, 0]))], &a));
        assert!(is_lift(&[(0, w(&[0, 0])), (0, w(&[0, 0]))], &[w(&[0, 0])]));
        // residue embedding with nothing above it
        assert!(!is_lift(&[(0, w(&[1, 0]))], &[w(&[1, 0]), w(&[0, 0])]));
        assert!(!is_lift(&[(3, w(&[1, 0]))], &a));
    }

    #[test]
    fn dual_examples() {
        assert_eq!(dual_weight(&w(&[7, 3, 0])), w(&[0, -3, -7]));
        assert_eq!(dual_weight(&w(&[0, 0, 0])), w(&[0, 0, 0]));
        assert_eq!(dual_weight(&dual_weight(&w(&[4, 2, 0]))), w(&[4, 2, 0]));
    }

    #[test]
    fn global_duality_examples() {
        let mut g = GlobalWeight::default();
        g.insert_pair("w", "wc", vec![w(&[7, 3, 0])], vec![w(&[0, -3, -7])]);
        assert_eq!(check_global_duality(&g), Ok(true));

        let mut g = GlobalWeight::default();
        g.insert_pair("w", "wc", vec![w(&[0, 0, 0])], vec![w(&[0, 0, 0])]);
        assert_eq!(check_global_duality(&g), Ok(true));

        let mut g = GlobalWeight::default();
        g.insert_pair("w", "wc", vec![w(&[1, 0, 0])], vec![w(&[1, 0, 0])]);
        assert_eq!(check_global_duality(&g), Ok(false));

        let mut g = GlobalWeight::default();
        g.places.insert(
            "w".into(),
            Place {
                partner: "v".into(),
                family: vec![w(&[0])],
            },
        );
        assert_eq!(
            check_global_duality(&g),
            Err(Error::UnpairedPlace("w".into()))
        );
    }

    #[test]
    fn weight_wire_format() {
        let a = w(&[7, 3, 0]);
        let json = serde_json::to_string(&a).unwrap();
        assert_eq!(json, r#"{"entries":[7,3,0]}"#);
        assert_eq!(serde_json::from_str::<LocalWeight>(&json).unwrap(), a);
        assert!(serde_json::from_str::<LocalWeight>(r#"{"entries":[0,1]}"#).is_err());
    }
}
