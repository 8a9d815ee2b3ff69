//! Tournaments induced by 2-colorings of pairs, and transitivity checking.

use crate::tuple::Tuple;
use std::rc::Rc;

/// A tournament: for `x ≠ y` exactly one of `x R y`, `y R x` holds.
///
/// Derived from a 2-coloring `c` of pairs `{x, y}` with `x < y`:
/// `c(x,y) = 1` puts `x R y`, `c(x,y) = 0` puts `y R x`.
#[derive(Clone)]
pub struct Tournament {
    color: Rc<dyn Fn(u64, u64) -> u8>,
    pub label: String,
}

impl Tournament {
    /// `color(x, y)` is queried only with `x < y` and must return 0 or 1.
    pub fn from_coloring(label: impl Into<String>, color: Rc<dyn Fn(u64, u64) -> u8>) -> Self {
        Tournament {
            color,
            label: label.into(),
        }
    }

    /// The tournament of the usual order: `x R y` iff `x < y`.
    pub fn from_linear_order() -> Self {
        Tournament::from_coloring("linear", Rc::new(|_, _| 1))
    }

    /// `x R y`?
    pub fn beats(&self, x: u64, y: u64) -> bool {
        assert_ne!(x, y, "tournament edges join distinct vertices");
        if x < y {
            (self.color)(x, y) == 1
        } else {
            (self.color)(y, x) == 0
        }
    }
}

/// True iff `R ∩ X²` is transitive, i.e. no 3-cycle within `X`.
pub fn is_transitive(r: &Tournament, x: &Tuple) -> bool {
    let e = x.elements();
    for a in 0..e.len() {
        for b in a + 1..e.len() {
            for c in b + 1..e.len() {
                let (p, q, s) = (e[a], e[b], e[c]);
                // a 3-cycle is p->q->s->p or its reverse
                let pq = r.beats(p, q);
                let qs = r.beats(q, s);
                let sp = r.beats(s, p);
                if pq == qs && qs == sp {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn linear_order_is_transitive() {
        let r = Tournament::from_linear_order();
        assert!(is_transitive(&r, &Tuple::from_slice(&[0, 3, 7, 12])));
    }

    #[test]
    fn three_cycle_detected() {
        // a->b->c->a on vertices 0,1,2: c(0,1)=1, c(1,2)=1, c(0,2)=0
        let r = Tournament::from_coloring(
            "cycle",
            Rc::new(|x, y| match (x, y) {
                (0, 1) => 1,
                (1, 2) => 1,
                (0, 2) => 0,
                _ => 1,
            }),
        );
        assert!(!is_transitive(&r, &Tuple::from_slice(&[0, 1, 2])));
    }

    /// Exhaustive 3-cycle scan over index triples, written independently.
    fn brute_transitive(bits: &[Vec<u8>], verts: &[u64]) -> bool {
        let beats = |x: u64, y: u64| -> bool {
            if x < y {
                bits[x as usize][y as usize] == 1
            } else {
                bits[y as usize][x as usize] == 0
            }
        };
        for &p in verts {
            for &q in verts {
                for &s in verts {
                    if p != q && q != s && p != s && beats(p, q) && beats(q, s) && beats(s, p) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn random_tournaments_match_bruteforce() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..1000 {
            let n = rng.gen_range(3..=8u64);
            let bits: Vec<Vec<u8>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(0..2u8)).collect())
                .collect();
            let b2 = bits.clone();
            let r = Tournament::from_coloring(
                "rand",
                Rc::new(move |x, y| b2[x as usize][y as usize]),
            );
            let verts: Vec<u64> = (0..n).filter(|_| rng.gen_bool(0.8)).collect();
            let x = Tuple::new(verts.clone()).unwrap();
            assert_eq!(is_transitive(&r, &x), brute_transitive(&bits, &verts));
        }
    }
}
