//! Compensated (Neumaier) accumulation and a fixed-order parallel reduction.

use rayon::prelude::*;

/// Running sum with Neumaier's compensation term.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

impl Extend<f64> for NeumaierSum {
    fn extend<I: IntoIterator<Item = f64>>(&mut self, iter: I) {
        for v in iter {
            self.add(v);
        }
    }
}

impl FromIterator<f64> for NeumaierSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = Self::new();
        s.extend(iter);
        s
    }
}

pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<NeumaierSum>().value()
}

const BLOCK: u64 = 1 << 16;

/// Σ_{k=start}^{end-1} term(k) split into fixed blocks of 65536 indices.
/// Blocks are summed in parallel and combined in index order, so the result
/// does not depend on the thread count.
pub fn par_range_sum<F>(start: u64, end: u64, term: F) -> f64
where
    F: Fn(u64) -> f64 + Sync,
{
    if end <= start {
        return 0.0;
    }
    let nblocks = (end - start).div_ceil(BLOCK);
    let partials: Vec<NeumaierSum> = (0..nblocks)
        .into_par_iter()
        .map(|b| {
            let lo = start + b * BLOCK;
            let hi = (lo + BLOCK).min(end);
            (lo..hi).map(&term).collect()
        })
        .collect();
    let mut total = NeumaierSum::new();
    for p in &partials {
        total.add(p.sum);
        total.add(p.comp);
    }
    total.value()
}
