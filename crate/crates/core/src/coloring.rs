//! Colorings of `[X]^n` and decision procedures for the combinatorial
//! notions: homogeneous, free, thin, rainbow, 2-bounded.
//!
//! Degenerate inputs are legal throughout: a set with fewer than `n`
//! elements has no n-subsets, so homogeneity and freeness hold vacuously
//! and every color below the bound is avoided.

use crate::tuple::Tuple;
use std::collections::BTreeMap;

/// An n-ary coloring, total on the sets it is queried against.
pub trait Coloring {
    fn arity(&self) -> usize;
    fn color(&self, t: &Tuple) -> u64;
}

pub struct FnColoring<F: Fn(&Tuple) -> u64> {
    arity: usize,
    f: F,
}

impl<F: Fn(&Tuple) -> u64> FnColoring<F> {
    pub fn new(arity: usize, f: F) -> Self {
        FnColoring { arity, f }
    }
}

impl<F: Fn(&Tuple) -> u64> Coloring for FnColoring<F> {
    fn arity(&self) -> usize {
        self.arity
    }
    fn color(&self, t: &Tuple) -> u64 {
        (self.f)(t)
    }
}

/// All k-element subsets of `base` as increasing tuples, in lexicographic
/// order of index vectors. `base` must be strictly increasing.
pub fn subsets(base: &[u64], k: usize) -> Vec<Tuple> {
    let mut out = Vec::new();
    if k > base.len() {
        return out;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        out.push(Tuple::from_slice(
            &idx.iter().map(|&i| base[i]).collect::<Vec<_>>(),
        ));
        if k == 0 {
            break;
        }
        // advance the index vector
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            if idx[pos] + 1 <= base.len() - (k - pos) {
                idx[pos] += 1;
                for p in pos + 1..k {
                    idx[p] = idx[p - 1] + 1;
                }
                break;
            }
        }
    }
    out
}

/// True iff `c` is constant on `[H]^n`. Vacuously true when `|H| < n`.
pub fn is_homogeneous(c: &dyn Coloring, h: &Tuple, n: usize) -> bool {
    debug_assert_eq!(c.arity(), n);
    let mut first: Option<u64> = None;
    for s in subsets(h.elements(), n) {
        let v = c.color(&s);
        match first {
            None => first = Some(v),
            Some(w) if w != v => return false,
            _ => {}
        }
    }
    true
}

/// Free-set check: `c(σ) ∉ H − σ` for every `σ ∈ [H]^n`.
pub fn is_free(c: &dyn Coloring, h: &Tuple) -> bool {
    let n = c.arity();
    for s in subsets(h.elements(), n) {
        let v = c.color(&s);
        if h.contains(v) && !s.contains(v) {
            return false;
        }
    }
    true
}

/// Colors below `color_bound` avoided by `c` on `[G]^n`.
/// `G` is thin at this bound iff the result is nonempty.
pub fn thin_report(c: &dyn Coloring, g: &Tuple, color_bound: u64) -> Vec<u64> {
    let n = c.arity();
    let mut hit = vec![false; color_bound as usize];
    for s in subsets(g.elements(), n) {
        let v = c.color(&s);
        if v < color_bound {
            hit[v as usize] = true;
        }
    }
    (0..color_bound).filter(|&i| !hit[i as usize]).collect()
}

/// Rainbow and 2-boundedness verdicts for `c` restricted to `[G]^n`.
pub fn rainbow_report(c: &dyn Coloring, g: &Tuple) -> (bool, bool) {
    let n = c.arity();
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for s in subsets(g.elements(), n) {
        *counts.entry(c.color(&s)).or_insert(0) += 1;
    }
    let max = counts.values().copied().max().unwrap_or(0);
    (max <= 1, max <= 2)
}

/// Greedy rainbow extraction: scans `H` in increasing order and keeps an
/// element unless it would repeat a color. The output always passes
/// `rainbow_report`; it is maximal for the greedy order, not optimal.
pub fn extract_subrainbow(h: &Tuple, c: &dyn Coloring) -> Tuple {
    let n = c.arity();
    let mut kept: Vec<u64> = Vec::new();
    let mut used: BTreeMap<u64, ()> = BTreeMap::new();
    'next: for &x in h.elements() {
        if kept.len() + 1 < n {
            kept.push(x);
            continue;
        }
        // colors of the new tuples created by adjoining x
        let mut fresh = Vec::new();
        for mut s in subsets(&kept, n - 1) {
            s = s.push(x).expect("x above previous elements");
            let v = c.color(&s);
            if used.contains_key(&v) || fresh.contains(&v) {
                continue 'next;
            }
            fresh.push(v);
        }
        for v in fresh {
            used.insert(v, ());
        }
        kept.push(x);
    }
    Tuple::new(kept).expect("kept elements scanned in increasing order")
}
