//! Closed forms, bounds and difference identities evaluated in exact rationals.
//!
//! Every public evaluator works in [`Rational`] and converts to an integer at
//! the end, failing with [`Error::NonIntegral`] if the denominator is not 1.
//! The long Wiener-index expressions are written one display line per source
//! line so they can be desk-checked term by term.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{build_g3, build_g4, G3Params, G4Params};
use crate::graph::Graph;

pub type Rational = BigRational;

fn q(x: i64) -> Rational {
    Rational::from_integer(BigInt::from(x))
}

fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `C(n, k)` for integers, zero when `n < k` or `n < 0`.
fn binom(n: i64, k: i64) -> Rational {
    if k < 0 || n < k {
        return q(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Rational::from_integer(acc)
}

fn integral(r: Rational, what: &str) -> Result<i64> {
    if !r.is_integer() {
        return Err(Error::NonIntegral(format!("{what} = {r}")));
    }
    r.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonIntegral(format!("{what} = {r} overflows i64")))
}

fn non_negative(x: i64, what: &str) -> Result<u64> {
    u64::try_from(x).map_err(|_| Error::NonIntegral(format!("{what} = {x} is negative")))
}

fn check_unicyclic_domain(n: usize, m: usize) -> Result<()> {
    if m < 2 || n < 2 * m {
        return Err(Error::Domain(format!(
            "need 2 <= m <= floor(n/2), got n={n}, m={m}"
        )));
    }
    Ok(())
}

fn check_connected_domain(n: usize, m: usize) -> Result<()> {
    if m < 1 || n < 2 * m {
        return Err(Error::Domain(format!(
            "need 1 <= m <= floor(n/2), got n={n}, m={m}"
        )));
    }
    Ok(())
}

// ---------------------------------------------------------------------------
// Closed-form Wiener indices of the configurations
// ---------------------------------------------------------------------------

fn wiener_g3_rational(p: &G3Params) -> Rational {
    let [a, b, c, j, k, l] = [p.a, p.b, p.c, p.j, p.k, p.l].map(|x| x as i64);
    // paths through pairs of brooms
    binom(k + l + 3, 3) + binom(j + k + 3, 3) + binom(l + j + 3, 3)
        - binom(k + 2, 3) - binom(l + 2, 3) - binom(j + 2, 3)
        // leaves within one star
        + q(2) * (binom(a, 2) + binom(b, 2) + binom(c, 2))
        // leaves of two different stars
        + q(a * c * (l + j + 3) + a * b * (k + j + 3) + b * c * (k + l + 3))
        // leaves against the path vertices
        + q(a + b + c) * (binom(j + 2, 2) + binom(k + 2, 2) + binom(l + 2, 2))
        + q(a * (k + l + 2) * (j + 1) + b * (k + 1) * (l + j + 2) + c * (l + 1) * (k + j + 2))
}

/// Wiener index of the triangle configuration.
pub fn wiener_g3_closed(p: &G3Params) -> Result<u64> {
    let w = integral(wiener_g3_rational(p), "W(G3)")?;
    non_negative(w, "W(G3)")
}

fn wiener_g4_rational(p: &G4Params) -> Rational {
    let [a, b, c, d, h, j, k, l] = [p.a, p.b, p.c, p.d, p.h, p.j, p.k, p.l].map(|x| x as i64);
    // inside each path
    binom(h + 2, 3) + binom(j + 2, 3) + binom(k + 2, 3) + binom(l + 2, 3)
        // between paths at adjacent / opposite cycle vertices
        + q((k + 1) * (j + 1)) * frac(k + j + 2, 2)
        + q((k + 1) * (l + 1)) * frac(k + l + 2, 2)
        + q((k + 1) * (h + 1)) * frac(k + h + 4, 2)
        + q((l + 1) * (j + 1)) * frac(l + j + 4, 2)
        + q((h + 1) * (j + 1)) * frac(h + j + 2, 2)
        + q((h + 1) * (l + 1)) * frac(l + h + 2, 2)
        // leaves of two different stars
        + q(a * b * (k + j + 3) + b * c * (k + l + 3) + c * d * (l + h + 3) + a * d * (h + j + 3))
        + q(a * c * (j + l + 4) + b * d * (k + h + 4))
        // leaves within one star
        + q(2) * (binom(a, 2) + binom(b, 2) + binom(c, 2) + binom(d, 2))
        // leaves against path vertices
        + q(a + b + c + d) * (binom(h + 2, 2) + binom(j + 2, 2) + binom(k + 2, 2) + binom(l + 2, 2))
        + q(a * (j + 1) * (k + h + 2) + b * (k + 1) * (l + j + 2) + c * (l + 1) * (k + h + 2) + d * (h + 1) * (l + j + 2))
        + q(a * (j + 2) * (l + 1) + b * (k + 2) * (h + 1) + c * (l + 2) * (j + 1) + d * (h + 2) * (k + 1))
}

/// Wiener index of the four-cycle configuration.
pub fn wiener_g4_closed(p: &G4Params) -> Result<u64> {
    let w = integral(wiener_g4_rational(p), "W(G4)")?;
    non_negative(w, "W(G4)")
}

// ---------------------------------------------------------------------------
// Collapse differences
// ---------------------------------------------------------------------------

/// All three paths merged into the `A` broom: `j' = j + k + l`, `k' = l' = 0`.
pub fn g3_collapse_target(p: &G3Params) -> G3Params {
    G3Params {
        j: p.j + p.k + p.l,
        k: 0,
        l: 0,
        ..*p
    }
}

/// `W(G') - W(G)` for [`g3_collapse_target`]; requires `a = max(a, b, c)`.
pub fn delta_g3_collapse(p: &G3Params) -> Result<i64> {
    if p.a < p.b || p.a < p.c {
        return Err(Error::Precondition(format!(
            "collapse identity needs a = max(a, b, c), got a={}, b={}, c={}",
            p.a, p.b, p.c
        )));
    }
    let [a, b, c, j, k, l] = [p.a, p.b, p.c, p.j, p.k, p.l].map(|x| x as i64);
    Ok(j * k * l
        + j * k
        + j * l
        + k * l
        + k * (a - b) * c
        + l * (a - c) * b
        + a * k * l
        + b * j * l
        + c * j * k
        + k * (a - b)
        + l * (a - c))
}

fn parity_epsilon(p: &G4Params) -> usize {
    (p.a + p.b + p.c + p.d) % 2
}

/// Leaves balanced across one opposite pair, all path length on `A`.
pub fn g4_collapse_target(p: &G4Params) -> G4Params {
    let s = p.a + p.b + p.c + p.d;
    let eps = parity_epsilon(p);
    G4Params::reduced((s + eps) / 2, (s - eps) / 2, p.h + p.j + p.k + p.l)
}

/// `W(G') - W(G)` for [`g4_collapse_target`]; always non-negative.
pub fn delta_g4_collapse(p: &G4Params) -> Result<i64> {
    let [a, b, c, d, h, j, k, l] = [p.a, p.b, p.c, p.d, p.h, p.j, p.k, p.l].map(|x| x as i64);
    let e = parity_epsilon(p) as i64;
    let sq = |x: i64| x * x;
    let quarter = |x: i64, y: i64| frac(sq(x) - sq(e - 1), 4) * q(y);
    let value = q(h * j * k
        + h * j * l
        + h * k * l
        + j * k * l
        + 2 * h * j
        + h * k
        + 2 * h * l
        + 2 * j * k
        + j * l
        + 2 * k * l)
        + q(a * h * k
            + a * h * l
            + a * k * l
            + b * h * j
            + b * h * l
            + b * j * l
            + c * h * j
            + c * h * k
            + c * j * k
            + d * j * k
            + d * j * l
            + d * k * l)
        + q(a * h + a * k + b * j + b * l + c * h + c * k + d * j + d * l)
        + quarter(d - a - b - c - 1, h)
        + quarter(a - b - c - d - 1, j)
        + quarter(b - a - c - d - 1, k)
        + quarter(c - a - b - d - 1, l)
        + frac(sq(a - c) + sq(b - d) - sq(e), 2);
    integral(value, "W(G4') - W(G4)")
}

// ---------------------------------------------------------------------------
// Maximum over unicyclic graphs and its extremal graphs
// ---------------------------------------------------------------------------

/// The three-case upper bound on `W` over unicyclic graphs of order `n` and
/// matching number `m`.
pub fn bound_max_unicyclic(n: usize, m: usize) -> Result<u64> {
    check_unicyclic_domain(n, m)?;
    let (n, m) = (n as i64, m as i64);
    let value = if n <= 2 * m + 2 {
        q(2) - frac(8, 3) * q(m * m * m)
            + q(2 * m * m)
            + frac(5, 3) * q(m)
            + q(2 * m * m * n - 3 * m * n - 2 * n + n * n)
    } else if n % 2 == 1 {
        frac(9, 2) - q(n) - frac(2, 3) * q(m * m * m) + frac(1, 2) * q(n * n) - q(2 * n * m)
            + q(2 * m * m)
            + frac(1, 2) * q(m * n * n)
            - frac(11, 6) * q(m)
    } else {
        q(6) - q(n) - frac(2, 3) * q(m * m * m) + frac(1, 2) * q(n * n) - q(2 * n * m)
            + q(2 * m * m)
            + frac(1, 2) * q(m * n * n)
            - frac(7, 3) * q(m)
    };
    non_negative(integral(value, "W(U(n,m))")?, "W(U(n,m))")
}

/// A named member of the two configuration families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Configuration {
    G3(G3Params),
    G4(G4Params),
}

impl Configuration {
    pub fn build(&self) -> Graph {
        match self {
            Configuration::G3(p) => build_g3(p),
            Configuration::G4(p) => build_g4(p),
        }
    }

    pub fn wiener_closed(&self) -> Result<u64> {
        match self {
            Configuration::G3(p) => wiener_g3_closed(p),
            Configuration::G4(p) => wiener_g4_closed(p),
        }
    }
}

/// Parameters of the characterized extremal graphs for `(n, m)`.
pub fn extremal_configurations(n: usize, m: usize) -> Result<Vec<Configuration>> {
    use Configuration::{G3, G4};
    check_unicyclic_domain(n, m)?;
    Ok(match (n, m) {
        (4, 2) => vec![G4(G4Params::reduced(0, 0, 0)), G3(G3Params::reduced(0, 1))],
        (6, 2) => vec![G4(G4Params::reduced(1, 1, 0)), G3(G3Params::reduced(2, 1))],
        _ if n <= 2 * m + 2 => vec![G3(G3Params::reduced(n - 2 * m, 2 * m - 3))],
        _ if n % 2 == 1 => vec![G4(G4Params::reduced(
            n.div_ceil(2) - m,
            (n - 1) / 2 - m,
            2 * m - 4,
        ))],
        _ => vec![G4(G4Params::reduced(n / 2 - m, n / 2 - m, 2 * m - 4))],
    })
}

pub fn extremal_set_predicted(n: usize, m: usize) -> Result<Vec<Graph>> {
    Ok(extremal_configurations(n, m)?
        .iter()
        .map(Configuration::build)
        .collect())
}

// ---------------------------------------------------------------------------
// Bounds over connected graphs and the known minima
// ---------------------------------------------------------------------------

/// Minimum `W` over connected graphs of order `n` and matching number `m`.
///
/// For `m < ⌊n/2⌋` the minimizer `K_m + (n-m)K_1` has `C(m,2) + m(n-m)`
/// edges, which gives the `C(m+1, 2)` term.
pub fn bound_dankelmann_min(n: usize, m: usize) -> Result<u64> {
    check_connected_domain(n, m)?;
    let (ni, mi) = (n as i64, m as i64);
    let value = if m == n / 2 {
        binom(ni, 2)
    } else {
        q(2) * binom(ni, 2) - q(mi * ni) + binom(mi + 1, 2)
    };
    non_negative(integral(value, "Dankelmann min")?, "Dankelmann min")
}

/// Maximum `W` over connected graphs of order `n` and matching number `m`.
pub fn bound_dankelmann_max(n: usize, m: usize) -> Result<u64> {
    check_connected_domain(n, m)?;
    let (n, m) = (n as i64, m as i64);
    let head = binom(2 * m, 3) + binom(2 * m, 2) * q(n - 2 * m + 1);
    let value = if n % 2 == 0 {
        head + q(2 * m) * frac(n - 2 * m + 2, 2) * frac(n - 2 * m, 2)
            + frac(1, 2) * q((n - 2 * m) * (n - 2 * m))
    } else {
        let half = (n - 2 * m + 1) / 2;
        head + q(2 * m) * q(half * half) + q(4) * binom(half, 2)
    };
    non_negative(integral(value, "Dankelmann max")?, "Dankelmann max")
}

/// Minimum `W` over trees with matching number `m`.
pub fn bound_duzhou_tree_min(n: usize, m: usize) -> Result<u64> {
    check_unicyclic_domain(n, m)?;
    let (n, m) = (n as i64, m as i64);
    non_negative(n * n + (m - 3) * n - 3 * m + 4, "tree minimum")
}

/// Minimum `W` over unicyclic graphs with matching number `m`.
pub fn bound_duzhou_unicyclic_min(n: usize, m: usize) -> Result<u64> {
    check_unicyclic_domain(n, m)?;
    if (n, m) == (6, 3) {
        return Ok(26);
    }
    let (n, m) = (n as i64, m as i64);
    non_negative(n * n + (m - 4) * n - 3 * m + 6, "unicyclic minimum")
}

// ---------------------------------------------------------------------------
// Comparisons between candidate extremal graphs
// ---------------------------------------------------------------------------

/// The two `G⁴` candidates of the same order compared by parity of `n`:
/// the `j = 2m - 4` graph first, the `j = 2m - 5` graph second.
pub fn g4_parity_comparands(n: usize, m: usize) -> Result<(G4Params, G4Params)> {
    check_unicyclic_domain(n, m)?;
    if m < 3 {
        return Err(Error::Domain(format!(
            "the j = 2m-5 comparand does not exist for m={m}"
        )));
    }
    if n.is_multiple_of(2) {
        Ok((
            G4Params::reduced(n / 2 - m, n / 2 - m, 2 * m - 4),
            G4Params::reduced(n / 2 - m + 1, n / 2 - m, 2 * m - 5),
        ))
    } else {
        if n < 2 * m + 1 {
            return Err(Error::Domain(format!("odd n={n} below 2m+1")));
        }
        Ok((
            G4Params::reduced(n.div_ceil(2) - m, (n - 1) / 2 - m, 2 * m - 4),
            G4Params::reduced(n.div_ceil(2) - m, n.div_ceil(2) - m, 2 * m - 5),
        ))
    }
}

/// `W(first) - W(second)` for [`g4_parity_comparands`].
pub fn compare_g4_parity(n: usize, m: usize) -> Result<i64> {
    g4_parity_comparands(n, m)?;
    let (ni, mi) = (n as i64, m as i64);
    let mut value = frac(1, 4) * q((ni - 2 * mi) * (ni + 2 * mi - 4));
    if n % 2 == 1 {
        value = value + q(mi) - frac(13, 4);
    }
    integral(value, "G4 parity difference")
}

/// The best `G⁴` candidate for `(n, m)` and the `G³_{n-2m, 2m-3}` candidate.
pub fn g4_vs_g3_comparands(n: usize, m: usize) -> Result<(G4Params, G3Params)> {
    check_unicyclic_domain(n, m)?;
    let g4 = if n.is_multiple_of(2) {
        G4Params::reduced(n / 2 - m, n / 2 - m, 2 * m - 4)
    } else {
        if n < 2 * m + 1 {
            return Err(Error::Domain(format!("odd n={n} below 2m+1")));
        }
        G4Params::reduced(n.div_ceil(2) - m, (n - 1) / 2 - m, 2 * m - 4)
    };
    Ok((g4, G3Params::reduced(n - 2 * m, 2 * m - 3)))
}

/// `W(G⁴) - W(G³)` for [`g4_vs_g3_comparands`], in the `k = n - 2m` form.
pub fn compare_g4_vs_g3(n: usize, m: usize) -> Result<i64> {
    g4_vs_g3_comparands(n, m)?;
    let (k, mi) = ((n - 2 * m) as i64, m as i64);
    let value = if n % 2 == 1 {
        q(1) + frac(1, 2) * q((k - 3) * (k + 1) * (mi - 1))
    } else {
        q(2) + frac(1, 2) * q((k * k - 2 * k - 4) * (mi - 1))
    };
    integral(value, "G4 - G3 difference")
}

/// The same difference as a polynomial in `n` and `m`.
pub fn compare_g4_vs_g3_expanded(n: usize, m: usize) -> Result<i64> {
    g4_vs_g3_comparands(n, m)?;
    let (n, m) = (n as i64, m as i64);
    let common = q(n + 2 * m * m * m + n * m) + frac(1, 2) * q(m * n * n)
        - frac(1, 2) * q(n * n)
        - q(2 * n * m * m);
    let value = if n % 2 == 1 {
        common - frac(7, 2) * q(m) + frac(5, 2)
    } else {
        common + q(4) - q(4 * m)
    };
    integral(value, "G4 - G3 difference")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binom(6, 3), q(20));
        assert_eq!(binom(2, 3), q(0));
        assert_eq!(binom(0, 2), q(0));
    }

    #[test]
    fn path_wiener_identity() {
        for len in 1..=50usize {
            let direct = Graph::path(len).wiener_index().unwrap();
            assert_eq!(q(direct as i64), binom(len as i64 + 1, 3), "P_{len}");
        }
    }

    #[test]
    fn g3_closed_examples() {
        assert_eq!(wiener_g3_closed(&G3Params::default()).unwrap(), 3);
        assert_eq!(wiener_g3_closed(&G3Params::reduced(2, 1)).unwrap(), 28);
        let p = G3Params::new(1, 1, 1, 2, 1, 0);
        assert_eq!(
            wiener_g3_closed(&p).unwrap(),
            build_g3(&p).wiener_index().unwrap()
        );
    }

    #[test]
    fn g4_closed_examples() {
        assert_eq!(wiener_g4_closed(&G4Params::default()).unwrap(), 8);
        assert_eq!(wiener_g4_closed(&G4Params::reduced(2, 2, 2)).unwrap(), 129);
        let p = G4Params::new(1, 1, 1, 1, 0, 0, 0, 0);
        assert_eq!(
            wiener_g4_closed(&p).unwrap(),
            build_g4(&p).wiener_index().unwrap()
        );
    }

    #[test]
    fn g3_collapse_examples() {
        let p = G3Params::new(2, 1, 1, 1, 0, 0);
        assert_eq!(delta_g3_collapse(&p).unwrap(), 0);

        let p = G3Params::new(2, 1, 1, 1, 1, 1);
        let lhs = delta_g3_collapse(&p).unwrap();
        let rhs = wiener_g3_closed(&G3Params::new(2, 1, 1, 3, 0, 0)).unwrap() as i64
            - wiener_g3_closed(&p).unwrap() as i64;
        assert_eq!(lhs, rhs);

        assert!(delta_g3_collapse(&G3Params::new(1, 1, 1, 0, 1, 1)).unwrap() > 0);
        assert!(matches!(
            delta_g3_collapse(&G3Params::new(0, 1, 0, 1, 1, 1)),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn g4_collapse_examples() {
        for p in [
            G4Params::reduced(1, 1, 0),
            G4Params::reduced(2, 1, 3),
            G4Params::reduced(0, 0, 2),
        ] {
            assert_eq!(delta_g4_collapse(&p).unwrap(), 0, "{p:?}");
        }
        let p = G4Params::new(1, 1, 1, 1, 0, 0, 0, 0);
        let target = g4_collapse_target(&p);
        assert_eq!(target, G4Params::reduced(2, 2, 0));
        assert_eq!(
            delta_g4_collapse(&p).unwrap(),
            wiener_g4_closed(&target).unwrap() as i64 - wiener_g4_closed(&p).unwrap() as i64
        );
        assert!(delta_g4_collapse(&G4Params::new(0, 3, 0, 0, 1, 0, 0, 0)).unwrap() >= 0);
    }

    #[test]
    fn max_bound_examples() {
        assert_eq!(bound_max_unicyclic(4, 2).unwrap(), 8);
        assert_eq!(bound_max_unicyclic(6, 2).unwrap(), 28);
        assert_eq!(bound_max_unicyclic(6, 3).unwrap(), 31);
        assert_eq!(bound_max_unicyclic(9, 3).unwrap(), 98);
        assert_eq!(bound_max_unicyclic(10, 3).unwrap(), 129);
        assert!(bound_max_unicyclic(3, 1).is_err());
        assert!(bound_max_unicyclic(7, 4).is_err());
    }

    #[test]
    fn extremal_sets() {
        assert_eq!(extremal_set_predicted(6, 2).unwrap().len(), 2);
        assert_eq!(extremal_set_predicted(4, 2).unwrap().len(), 2);
        assert_eq!(
            extremal_configurations(9, 3).unwrap(),
            vec![Configuration::G4(G4Params::reduced(2, 1, 2))]
        );
        assert_eq!(
            extremal_configurations(6, 3).unwrap(),
            vec![Configuration::G3(G3Params::reduced(0, 3))]
        );
        for n in 4..=30 {
            for m in 2..=n / 2 {
                for c in extremal_configurations(n, m).unwrap() {
                    assert_eq!(c.build().order(), n);
                    assert_eq!(
                        c.wiener_closed().unwrap(),
                        bound_max_unicyclic(n, m).unwrap()
                    );
                }
            }
        }
    }

    #[test]
    fn dankelmann_examples() {
        assert_eq!(bound_dankelmann_min(6, 3).unwrap(), 15);
        assert_eq!(bound_dankelmann_min(6, 2).unwrap(), 21);
        assert_eq!(bound_dankelmann_max(8, 3).unwrap(), 79);
        assert_eq!(bound_dankelmann_max(7, 3).unwrap(), 56);
        assert!(bound_dankelmann_min(5, 0).is_err());
    }

    #[test]
    fn duzhou_examples() {
        assert_eq!(bound_duzhou_tree_min(7, 3).unwrap(), 44);
        assert_eq!(bound_duzhou_unicyclic_min(6, 3).unwrap(), 26);
        assert_eq!(bound_duzhou_unicyclic_min(7, 3).unwrap(), 39);
        assert!(bound_duzhou_tree_min(3, 1).is_err());
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(compare_g4_parity(10, 3).unwrap(), 12);
        assert_eq!(compare_g4_vs_g3(9, 3).unwrap(), 1);
        assert_eq!(compare_g4_vs_g3(8, 2).unwrap(), 4);
        assert!(compare_g4_parity(8, 2).is_err());
        assert!(compare_g4_parity(7, 4).is_err());
        assert!(compare_g4_parity(7, 3).is_ok());
    }

    #[test]
    fn comparisons_match_closed_forms() {
        for n in 4..=40 {
            for m in 2..=n / 2 {
                if let Ok((x, y)) = g4_parity_comparands(n, m) {
                    let diff =
                        wiener_g4_closed(&x).unwrap() as i64 - wiener_g4_closed(&y).unwrap() as i64;
                    assert_eq!(compare_g4_parity(n, m).unwrap(), diff, "parity n={n} m={m}");
                }
                if let Ok((x, y)) = g4_vs_g3_comparands(n, m) {
                    let diff =
                        wiener_g4_closed(&x).unwrap() as i64 - wiener_g3_closed(&y).unwrap() as i64;
                    assert_eq!(compare_g4_vs_g3(n, m).unwrap(), diff, "vs n={n} m={m}");
                    assert_eq!(
                        compare_g4_vs_g3_expanded(n, m).unwrap(),
                        diff,
                        "expanded n={n} m={m}"
                    );
                }
            }
        }
    }

    #[test]
    fn bounds_are_integral_and_monotone_in_m() {
        for n in 2..=40 {
            for m in 1..=n / 2 {
                bound_dankelmann_min(n, m).unwrap();
                bound_dankelmann_max(n, m).unwrap();
            }
            for m in 2..=n / 2 {
                bound_max_unicyclic(n, m).unwrap();
                bound_duzhou_tree_min(n, m).unwrap();
                bound_duzhou_unicyclic_min(n, m).unwrap();
                if m > 2 {
                    assert!(
                        bound_max_unicyclic(n, m - 1).unwrap() < bound_max_unicyclic(n, m).unwrap(),
                        "n={n} m={m}"
                    );
                }
            }
        }
    }
}
