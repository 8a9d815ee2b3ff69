//! Decidable sets, cohesiveness violations, and the stable-order enumerator.

use crate::tuple::Tuple;
use std::rc::Rc;
use thiserror::Error;

/// A decidable set of naturals.
#[derive(Clone)]
pub struct DecSet {
    pred: Rc<dyn Fn(u64) -> bool>,
    pub label: String,
}

impl DecSet {
    pub fn new(label: impl Into<String>, pred: Rc<dyn Fn(u64) -> bool>) -> Self {
        DecSet {
            pred,
            label: label.into(),
        }
    }

    pub fn evens() -> Self {
        DecSet::new("evens", Rc::new(|x| x % 2 == 0))
    }

    pub fn mod_class(residue: u64, modulus: u64) -> Self {
        DecSet::new(
            format!("mod{modulus}={residue}"),
            Rc::new(move |x| x % modulus == residue),
        )
    }

    /// Seeded pseudo-random decidable set; membership is a pure hash of
    /// `(seed, x)` so replays are bit-exact.
    pub fn seeded_random(seed: u64) -> Self {
        DecSet::new(
            format!("rand({seed})"),
            Rc::new(move |x| splitmix(seed ^ x.wrapping_mul(0x9e3779b97f4a7c15)) & 1 == 1),
        )
    }

    pub fn contains(&self, x: u64) -> bool {
        (self.pred)(x)
    }
}

pub(crate) fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Indices `n` such that `C ∩ [tail_start, max C]` meets both `A_n` and its
/// complement. An empty result means `C` looks cohesive from `tail_start`.
pub fn cohesive_violations(c: &Tuple, a_list: &[DecSet], tail_start: u64) -> Vec<usize> {
    let max = c.max_elem().unwrap_or(0);
    let tail: Vec<u64> = c
        .elements()
        .iter()
        .copied()
        .filter(|&x| x >= tail_start && x <= max)
        .collect();
    let mut out = Vec::new();
    for (n, a) in a_list.iter().enumerate() {
        let inside = tail.iter().any(|&x| a.contains(x));
        let outside = tail.iter().any(|&x| !a.contains(x));
        if inside && outside {
            out.push(n);
        }
    }
    out
}

/// A decidable binary relation used as a linear order.
#[derive(Clone)]
pub struct OrderRel {
    less: Rc<dyn Fn(u64, u64) -> bool>,
    pub label: String,
}

impl OrderRel {
    pub fn new(label: impl Into<String>, less: Rc<dyn Fn(u64, u64) -> bool>) -> Self {
        OrderRel {
            less,
            label: label.into(),
        }
    }

    pub fn usual() -> Self {
        OrderRel::new("usual", Rc::new(|a, b| a < b))
    }

    /// A stable order of type ω + ω* on ω: evens form the ascending ω-part,
    /// odds the descending ω*-part sitting above every even.
    pub fn omega_plus_omega_star() -> Self {
        fn rank(x: u64) -> (u8, i64) {
            if x % 2 == 0 {
                (0, (x / 2) as i64)
            } else {
                (1, -((x / 2) as i64))
            }
        }
        OrderRel::new("omega+omega*", Rc::new(|a, b| rank(a) < rank(b)))
    }

    pub fn less(&self, a: u64, b: u64) -> bool {
        (self.less)(a, b)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SadsError {
    #[error("input sequence is not ascending in the order at position {0}")]
    NotAscending(usize),
}

/// Finite-horizon Σ⁰₁ approximation of the ω-part of a stable order:
/// `{i < bound : ∃j ∈ S, i <_L j}` for an `<_L`-ascending `S`.
pub fn sads_enumerator(order: &OrderRel, s: &[u64], bound: u64) -> Result<Vec<u64>, SadsError> {
    for k in 1..s.len() {
        if !order.less(s[k - 1], s[k]) {
            return Err(SadsError::NotAscending(k));
        }
    }
    Ok((0..bound)
        .filter(|&i| s.iter().any(|&j| order.less(i, j)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cohesive_evens_never_violates() {
        let c = Tuple::new((0..30).map(|k| 2 * k).collect()).unwrap();
        for t in [0u64, 10, 40] {
            assert!(cohesive_violations(&c, &[DecSet::evens()], t).is_empty());
        }
    }

    #[test]
    fn cohesive_prefix_violates_at_zero() {
        let c = Tuple::new((0..20).collect()).unwrap();
        assert_eq!(cohesive_violations(&c, &[DecSet::evens()], 0), vec![0]);
    }

    #[test]
    fn cohesive_matches_two_sided_scan() {
        let a_list = vec![
            DecSet::seeded_random(3),
            DecSet::seeded_random(17),
            DecSet::mod_class(1, 3),
        ];
        let c = Tuple::new((0..60).map(|k| 3 * k + 1).collect()).unwrap();
        for tail in [0u64, 31, 100] {
            let got = cohesive_violations(&c, &a_list, tail);
            for (n, a) in a_list.iter().enumerate() {
                let tail_elems: Vec<u64> = c
                    .elements()
                    .iter()
                    .copied()
                    .filter(|&x| x >= tail)
                    .collect();
                let both = tail_elems.iter().any(|&x| a.contains(x))
                    && tail_elems.iter().any(|&x| !a.contains(x));
                assert_eq!(got.contains(&n), both);
            }
        }
    }

    #[test]
    fn sads_usual_order() {
        let got = sads_enumerator(&OrderRel::usual(), &[10], 20).unwrap();
        assert_eq!(got, (0..10).collect::<Vec<_>>());
        assert!(sads_enumerator(&OrderRel::usual(), &[], 20)
            .unwrap()
            .is_empty());
        assert_eq!(
            sads_enumerator(&OrderRel::usual(), &[5, 2], 20),
            Err(SadsError::NotAscending(1))
        );
    }

    #[test]
    fn sads_recovers_omega_part() {
        let ord = OrderRel::omega_plus_omega_star();
        // The ω-part is the evens. Brute-force it from the definition:
        // i is in the ω-part iff all but finitely many j sit above i.
        let probe = 400u64;
        let omega_part: Vec<u64> = (0..40)
            .filter(|&i| (0..probe).filter(|&j| j != i && ord.less(j, i)).count() < 50)
            .collect();
        assert_eq!(omega_part, (0..20).map(|k| 2 * k).collect::<Vec<_>>());

        // ascending sequence in the order: evens going up
        let s: Vec<u64> = (0..50).map(|k| 2 * k).collect();
        let got = sads_enumerator(&ord, &s, 40).unwrap();
        assert_eq!(got, omega_part);
    }
}
