//! Runtime-switchable data parallelism.
//!
//! Grid scans, quadratures and sampling loops are embarrassingly parallel
//! over their index. `map_indexed` runs the closure over `0..n` either on
//! rayon or sequentially; output order is always index order, so results
//! are bit-identical across modes and thread counts.

/// True when the crate was built with the `parallel` feature.
pub fn default_parallelism() -> bool {
    cfg!(feature = "parallel")
}

/// Map `f` over `0..n`, collecting results in index order.
#[cfg(feature = "parallel")]
pub fn map_indexed<T, F>(parallel: bool, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    use rayon::prelude::*;
    if parallel {
        (0..n).into_par_iter().map(f).collect()
    } else {
        (0..n).map(f).collect()
    }
}

#[cfg(not(feature = "parallel"))]
pub fn map_indexed<T, F>(_parallel: bool, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync,
{
    (0..n).map(f).collect()
}

/// Pairwise (tree) summation. Deterministic for a fixed input order and
/// better conditioned than a running sum on long quadrature vectors.
pub fn pairwise_sum<T>(values: &[T]) -> T
where
    T: Copy + std::ops::Add<Output = T> + num_complex::ComplexFloat,
{
    match values.len() {
        0 => T::zero(),
        1 => values[0],
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum(lo) + pairwise_sum(hi)
        }
    }
}

/// Pairwise sum of plain f64 slices.
pub fn pairwise_sum_f64(values: &[f64]) -> f64 {
    match values.len() {
        0 => 0.0,
        1 => values[0],
        n => {
            let (lo, hi) = values.split_at(n / 2);
            pairwise_sum_f64(lo) + pairwise_sum_f64(hi)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn map_indexed_preserves_order_in_both_modes() {
        let seq = map_indexed(false, 100, |i| i * i);
        let par = map_indexed(true, 100, |i| i * i);
        assert_eq!(seq, par);
    }

    #[test]
    fn pairwise_sum_matches_naive() {
        let xs: Vec<f64> = (0..1000).map(|i| (i as f64).sin()).collect();
        let naive: f64 = xs.iter().sum();
        assert!((pairwise_sum_f64(&xs) - naive).abs() < 1e-9);
    }
}
