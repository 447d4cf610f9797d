//! Seeded, reproducible sampling of forms and substitutions.
//!
//! Everything here is a pure function of `(shape, seed, bound)`: the stream
//! is ChaCha8 keyed by the seed, so results are identical across runs and
//! platforms. Bounds are inclusive and apply to the integer entries drawn.

use num_traits::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::forms::{Form, LinearChange, MultiIndex};
use crate::matrix::Matrix;
use crate::rational::{rat, Rational};

fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn draw_linear(rng: &mut ChaCha8Rng, nvars: u8, bound: i64) -> Vec<Rational> {
    assert!(bound >= 1, "bound must be at least 1");
    loop {
        let l: Vec<Rational> = (0..nvars)
            .map(|_| rat(rng.random_range(-bound..=bound)))
            .collect();
        // A zero vector is useless as a "random linear form" (its power is
        // the zero form); redraw, which keeps the function deterministic.
        if l.iter().any(|c| !c.is_zero()) {
            return l;
        }
    }
}

/// Random nonzero linear form with integer entries in `[-bound, bound]`.
pub fn random_linear(nvars: u8, seed: u64, bound: i64) -> Vec<Rational> {
    draw_linear(&mut rng_for(seed), nvars, bound)
}

/// Random form with integer tensor coordinates in `[-bound, bound]`.
pub fn random_form(nvars: u8, degree: usize, seed: u64, bound: i64) -> Form {
    assert!(bound >= 1, "bound must be at least 1");
    let mut rng = rng_for(seed);
    let mut f = Form::zero_form(nvars, degree);
    for mi in MultiIndex::all(nvars, degree) {
        f.set_coeff(mi, rat(rng.random_range(-bound..=bound)))
            .expect("indices enumerated for this shape");
    }
    f
}

/// Random determinant-1 substitution: a product of four alternating upper-
/// and lower-unitriangular integer matrices with entries in `[-bound, bound]`.
pub fn random_sl(nvars: u8, seed: u64, bound: i64) -> LinearChange {
    assert!(bound >= 1, "bound must be at least 1");
    let mut rng = rng_for(seed);
    let n = nvars as usize;
    let mut g = LinearChange::identity(nvars);
    for factor in 0..4 {
        let upper = factor % 2 == 0;
        let mut m = Matrix::<Rational>::zeros(n, n);
        for i in 0..n {
            m.set(i, i, rat(1));
        }
        for i in 0..n {
            for j in i + 1..n {
                let e = rat(rng.random_range(-bound..=bound));
                if upper {
                    m.set(i, j, e);
                } else {
                    m.set(j, i, e);
                }
            }
        }
        let t = LinearChange::new(m).expect("square by construction");
        g = g.compose(&t).expect("matching sizes");
    }
    g
}

/// Reproducible sum of `k` degree-`d` powers of nonzero linear forms, all
/// drawn from one seeded stream. Returns the summands along with the sum.
pub fn random_powers_sum(
    nvars: u8,
    degree: usize,
    k: usize,
    seed: u64,
    bound: i64,
) -> (Vec<Vec<Rational>>, Form) {
    let mut rng = rng_for(seed);
    let ls: Vec<Vec<Rational>> = (0..k)
        .map(|_| draw_linear(&mut rng, nvars, bound))
        .collect();
    let f = Form::sum_of_powers(&ls, degree, nvars).expect("consistent arity");
    (ls, f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn deterministic_for_fixed_seed() {
        assert_eq!(random_linear(3, 9, 5), random_linear(3, 9, 5));
        assert_eq!(random_form(5, 3, 9, 3), random_form(5, 3, 9, 3));
        assert_eq!(random_sl(4, 9, 2), random_sl(4, 9, 2));
        assert_eq!(random_powers_sum(5, 3, 7, 9, 2), random_powers_sum(5, 3, 7, 9, 2));
        // Different seeds give different draws (overwhelmingly).
        assert_ne!(random_form(5, 3, 9, 3), random_form(5, 3, 10, 3));
    }

    #[test]
    fn linear_entries_bounded_and_nonzero() {
        for seed in 0..50 {
            let l = random_linear(3, seed, 5);
            assert!(l.iter().any(|c| !c.is_zero()));
            for c in &l {
                assert!(c.denom().is_one());
                assert!(rat(-5) <= *c && *c <= rat(5));
            }
        }
    }

    #[test]
    fn sl_has_determinant_one() {
        for seed in 0..20 {
            assert_eq!(random_sl(5, seed, 3).determinant(), rat(1));
            assert_eq!(random_sl(3, seed, 4).determinant(), rat(1));
        }
    }

    #[test]
    fn powers_sum_matches_components() {
        let (ls, f) = random_powers_sum(5, 3, 7, 4, 2);
        assert_eq!(ls.len(), 7);
        let rebuilt = Form::sum_of_powers(&ls, 3, 5).unwrap();
        assert_eq!(f, rebuilt);
    }
}
