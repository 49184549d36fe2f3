//! Closed-form calculators for the packing-argument quantities: multiset
//! counts, ball and chain-set lower bounds, the minimal tolerance t, and the
//! resulting weight bound and exponents. Comparisons run in the logarithm
//! domain and are confirmed with arbitrary-precision integers whenever the
//! margin is small.

use num_bigint::BigUint;
use num_rational::Ratio;

use crate::{Error, Result};

/// Relative log-domain margin below which comparisons are re-done exactly.
const EXACT_CONFIRM_MARGIN: f64 = 1e-6;

/// c = k(r-2) + r, the reduced multisupport size.
pub fn c_of(r: usize, k: usize) -> usize {
    k * (r - 2) + r
}

fn ln_factorial(x: usize) -> f64 {
    (2..=x).map(|i| (i as f64).ln()).sum()
}

fn big_factorial(x: usize) -> BigUint {
    (2..=x).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(i))
}

/// |V_c|: exact count of weight-c non-negative integer m-tuples, plus the
/// (m+c)^c / c! real upper bound.
pub fn v_c_size(m: usize, c: usize) -> (BigUint, f64) {
    // binomial(m+c-1, c)
    let mut exact = BigUint::from(1u32);
    for i in 0..c {
        exact = exact * BigUint::from(m + c - 1 - i) / BigUint::from(i + 1);
    }
    let upper_ln = c as f64 * ((m + c) as f64).ln() - ln_factorial(c);
    (exact, upper_ln.exp())
}

/// Lower bound t^c / c! on a ball size, evaluated in the log domain.
pub fn b_lower(t: usize, c: usize) -> f64 {
    (c as f64 * (t as f64).ln() - ln_factorial(c)).exp()
}

/// Lower bound (n-m) t^k / (k+1)! on the chain-set size; requires t > 2k.
pub fn m_k_lower(n: usize, m: usize, t: usize, k: usize) -> Result<f64> {
    if t <= 2 * k {
        return Err(Error::HypothesisViolated { t, limit: 2 * k });
    }
    let ln = ((n - m) as f64).ln() + k as f64 * (t as f64).ln() - ln_factorial(k + 1);
    Ok(ln.exp())
}

/// The packing condition (n-m) t^{k+c} / (k+1)! >= (m+c)^c.
pub fn packing_satisfied(n: usize, m: usize, r: usize, k: usize, t: usize) -> bool {
    let c = c_of(r, k);
    if t == 0 {
        return false;
    }
    let lhs = ((n - m) as f64).ln() + (k + c) as f64 * (t as f64).ln() - ln_factorial(k + 1);
    let rhs = c as f64 * ((m + c) as f64).ln();
    let margin = (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0);
    if margin >= EXACT_CONFIRM_MARGIN {
        return lhs >= rhs;
    }
    let exact_lhs = BigUint::from(n - m) * BigUint::from(t).pow((k + c) as u32);
    let exact_rhs = big_factorial(k + 1) * BigUint::from(m + c).pow(c as u32);
    exact_lhs >= exact_rhs
}

fn sufficient_condition_holds(m: usize, r: usize, k: usize, c: usize, t: usize) -> bool {
    if t == 0 {
        return false;
    }
    // t^{k+c} m >= r (k+1)! (m+c)^c, checked exactly.
    let lhs = BigUint::from(t).pow((k + c) as u32) * BigUint::from(m);
    let rhs = BigUint::from(r) * big_factorial(k + 1) * BigUint::from(m + c).pow(c as u32);
    lhs >= rhs
}

/// Smallest t with t^{k+c} >= r (k+1)! (m+c)^c / m: the ceiling of the
/// displayed root, located via logs and pinned down exactly.
pub fn choose_t(m: usize, r: usize, k: usize) -> usize {
    let c = c_of(r, k);
    let ln_t = ((r as f64).ln() + ln_factorial(k + 1) + c as f64 * ((m + c) as f64).ln()
        - (m as f64).ln())
        / (k + c) as f64;
    let mut t = ln_t.exp().ceil() as usize;
    t = t.max(1);
    while !sufficient_condition_holds(m, r, k, c, t) {
        t += 1;
    }
    while t > 1 && sufficient_condition_holds(m, r, k, c, t - 1) {
        t -= 1;
    }
    t
}

/// The codeword weight bound 2(k+1) + t(k+1)r.
pub fn weight_bound(t: usize, k: usize, r: usize) -> usize {
    2 * (k + 1) + t * (k + 1) * r
}

/// |S| + t |S| r / 2, with the pair count rounded up when |S|r is odd.
/// The formula presumes an even total weight that fully partitions into
/// pairs; the ceiling covers the odd case conservatively.
pub fn pairwise_collision_bound(s_size: usize, t: usize, r: usize) -> usize {
    s_size + t * ((s_size * r).div_ceil(2))
}

/// ε = 1 / ((r-1)(k(r-1)+r)), exact.
pub fn epsilon(r: usize, k: usize) -> Ratio<u64> {
    let den = (r as u64 - 1) * (k as u64 * (r as u64 - 1) + r as u64);
    Ratio::new(1, den)
}

/// The three distance exponents: the new bound (r-2)/(r-1)+ε, the older
/// upper bound (r-1)/r, and the reference lower-bound exponent (r-2)/r.
pub fn exponents(r: usize, k: usize) -> (Ratio<u64>, Ratio<u64>, Ratio<u64>) {
    let r64 = r as u64;
    let new = Ratio::new(r64 - 2, r64 - 1) + epsilon(r, k);
    let old = Ratio::new(r64 - 1, r64);
    let lower = Ratio::new(r64 - 2, r64);
    (new, old, lower)
}

/// One parameter point, fully evaluated.
#[derive(Debug, Clone)]
pub struct BoundReport {
    pub r: usize,
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub c: usize,
    pub t_star: usize,
    pub weight_bound: usize,
    pub epsilon: Ratio<u64>,
    pub new_exponent: Ratio<u64>,
    pub old_exponent: Ratio<u64>,
    pub lower_exponent: Ratio<u64>,
}

pub const BOUND_REPORT_CSV_HEADER: &str =
    "r,k,m,n,c,t_star,weight_bound,epsilon,new_exp,old_exp,lower_exp";

impl BoundReport {
    pub fn evaluate(r: usize, k: usize, m: usize, n: usize) -> BoundReport {
        let c = c_of(r, k);
        let t_star = choose_t(m, r, k);
        let (new, old, lower) = exponents(r, k);
        BoundReport {
            r,
            k,
            m,
            n,
            c,
            t_star,
            weight_bound: weight_bound(t_star, k, r),
            epsilon: epsilon(r, k),
            new_exponent: new,
            old_exponent: old,
            lower_exponent: lower,
        }
    }

    pub fn csv_row(&self) -> String {
        fn f(x: Ratio<u64>) -> f64 {
            *x.numer() as f64 / *x.denom() as f64
        }
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.r,
            self.k,
            self.m,
            self.n,
            self.c,
            self.t_star,
            self.weight_bound,
            f(self.epsilon),
            f(self.new_exponent),
            f(self.old_exponent),
            f(self.lower_exponent)
        )
    }
}
