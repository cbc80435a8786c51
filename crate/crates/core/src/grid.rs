/// `n` log-uniform points from `lo` to `hi`, endpoints exact.
pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.log10(), hi.log10());
    spaced(a, b, n)
        .into_iter()
        .enumerate()
        .map(|(i, x)| match i {
            0 => lo,
            _ if i + 1 == n => hi,
            _ => 10f64.powf(x).clamp(lo, hi),
        })
        .collect()
}

/// `n` evenly spaced points from `lo` to `hi`, endpoints exact.
pub fn lin_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    spaced(lo, hi, n)
}

fn spaced(a: f64, b: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![a],
        _ => {
            let step = (b - a) / (n - 1) as f64;
            (0..n)
                .map(|i| if i + 1 == n { b } else { a + step * i as f64 })
                .collect()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn endpoints_exact() {
        let g = log_space(5.391247e-44, 1e-32, 7);
        assert_eq!(g.len(), 7);
        assert_eq!(g[0], 5.391247e-44);
        assert_eq!(g[6], 1e-32);
        assert!(g.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(log_space(1.0, 10.0, 2), vec![1.0, 10.0]);
        assert_eq!(lin_space(0.0, 60.0, 4), vec![0.0, 20.0, 40.0, 60.0]);
    }

    #[test]
    fn decades_are_uniform() {
        let g = log_space(1e-10, 1e10, 21);
        for (i, v) in g.iter().enumerate() {
            let expected = 10f64.powi(i as i32 - 10);
            assert!(((v - expected) / expected).abs() < 1e-12);
        }
    }
}
