//! The discrete bivariate family: a weight on the triangle 0 <= x + y <= N
//! inside the (N+1) x (N+1) grid, two families F_{m,n} and G_{m,n} of
//! Laurent polynomials in q^x, q^y (each with two series representations),
//! their biorthogonality normalization, and an exact inner product.
//!
//! Everything is generic over [`Field`]; run with `BigRational` parameters
//! the entire biorthogonality verification is exact — off-diagonal inner
//! products come out as the rational number 0, not a small float.

use crate::error::{Error, Result};
use crate::qseries::qpochhammer;
use crate::scalar::{Field, QBase};

/// Parameters (N; alpha, gamma, gamma', c; q) of the discrete family.
#[derive(Clone, Debug)]
pub struct RacahParams<T: Field> {
    n_max: i64,
    alpha: T,
    gamma: T,
    gamma_prime: T,
    c: T,
    base: QBase<T>,
}

impl<T: Field> RacahParams<T> {
    pub fn new(n_max: i64, alpha: T, gamma: T, gamma_prime: T, c: T, q: T) -> Result<Self> {
        if n_max < 0 {
            return Err(Error::InvalidParams("N must be nonnegative".into()));
        }
        for (name, v) in [
            ("alpha", &alpha),
            ("gamma", &gamma),
            ("gamma'", &gamma_prime),
            ("c", &c),
        ] {
            if v.is_zero() {
                return Err(Error::InvalidParams(format!("{name} must be nonzero")));
            }
        }
        Ok(RacahParams {
            n_max,
            alpha,
            gamma,
            gamma_prime,
            c,
            base: QBase::new(q)?,
        })
    }

    pub fn n_max(&self) -> i64 {
        self.n_max
    }

    pub fn base(&self) -> &QBase<T> {
        &self.base
    }

    fn q(&self) -> &T {
        self.base.value()
    }

    /// gamma * gamma'.
    fn gg(&self) -> T {
        self.gamma.clone() * self.gamma_prime.clone()
    }
}

/// A lattice point of the (N+1) x (N+1) grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GridPoint {
    pub x: i64,
    pub y: i64,
}

/// A degree pair (m, n).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreePair {
    pub m: i64,
    pub n: i64,
}

fn check_grid<T: Field>(pt: GridPoint, params: &RacahParams<T>) -> Result<()> {
    if pt.x < 0 || pt.y < 0 || pt.x > params.n_max || pt.y > params.n_max {
        return Err(Error::Domain(format!(
            "grid point ({}, {}) outside [0, {}]^2",
            pt.x, pt.y, params.n_max
        )));
    }
    Ok(())
}

fn check_degree<T: Field>(pair: DegreePair, params: &RacahParams<T>) -> Result<()> {
    if pair.m < 0 || pair.n < 0 {
        return Err(Error::Domain("degrees must be nonnegative".into()));
    }
    if pair.m + pair.n > params.n_max {
        return Err(Error::Domain(format!(
            "degree pair ({}, {}) violates m + n <= N = {}",
            pair.m, pair.n, params.n_max
        )));
    }
    Ok(())
}

/// A denominator factor that vanishes for admissible-looking indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    /// Human-readable name of the vanishing factor, e.g.
    /// "1 - c q^{-N} (weight)".
    pub factor: String,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "vanishing denominator factor: {}", self.factor)
    }
}

/// Scans every denominator q-shifted-factorial factor of the weight, the
/// two F forms, the two G forms, and the normalization over the full index
/// ranges (x, y in [0,N]; m + n <= N; inner summation indices included) and
/// reports each one that vanishes. An empty list means the parameter set is
/// admissible for exact verification.
pub fn validate_params<T: Field>(params: &RacahParams<T>) -> Vec<Violation> {
    let mut out = Vec::new();
    let q = params.q();
    let n_cap = params.n_max;
    let al = &params.alpha;
    let ga = &params.gamma;
    let gp = &params.gamma_prime;
    let c = &params.c;
    let gg = params.gg();

    // (1 - base q^s) for s in [lo, hi]
    let check_range = |name: &str, base_val: &T, lo: i64, hi: i64, out: &mut Vec<Violation>| {
        for s in lo..=hi {
            if (T::one() - base_val.clone() * q.ipow(s)).is_zero() {
                out.push(Violation {
                    factor: format!("1 - [{name}] q^{s}"),
                });
            }
        }
    };

    // ---- weight denominators, x, y in [0, N], both signs of x - y
    check_range("alpha q", al, 0, n_cap - 1 + 1, &mut out); // (alpha q;q)_N
    check_range("1/c", &(T::one() / c.clone()), -n_cap, n_cap - 1, &mut out); // (1/c;q)_N and (1/c;q)_{x-y}
    check_range(
        "alpha c q / gamma gamma'",
        &(al.clone() * c.clone() * q.clone() / gg.clone()),
        0,
        n_cap - 1,
        &mut out,
    );
    check_range(
        "gamma gamma' / (alpha c)",
        &(gg.clone() / (al.clone() * c.clone())),
        -(2 * n_cap + 1),
        2 * n_cap,
        &mut out,
    ); // covers (..;q)_{x-y}, the x-indexed factor with offset -N-1, and shifted series factors
    check_range(
        "c q^{-N} block",
        &(c.clone()),
        -(2 * n_cap),
        n_cap + 1,
        &mut out,
    ); // covers 1 - c q^{-N}, (c q^{1-N}/gamma' ... base c shifts), series factors c q^{1+y-x-n}
    check_range(
        "gamma gamma' q^{-N} / alpha",
        &(gg.clone() / al.clone()),
        -(2 * n_cap + 1),
        n_cap,
        &mut out,
    ); // (..;q)_{x+y} weight factor and (5.2) series denominators
    check_range(
        "gamma' q^{-N} / (alpha c)",
        &(gp.clone() / (al.clone() * c.clone())),
        -n_cap,
        n_cap - 1,
        &mut out,
    );
    check_range(
        "c q^{1-N} / gamma'",
        &(c.clone() / gp.clone()),
        1 - n_cap,
        n_cap + 1,
        &mut out,
    ); // also covers gamma'/c-based factors via reciprocity scan below

    // ---- series denominators over degrees and inner indices
    check_range("gamma", ga, 0, n_cap - 1, &mut out);
    check_range("gamma'", gp, 0, n_cap - 1, &mut out);
    check_range("alpha", al, 0, 2 * n_cap, &mut out); // (alpha;q)_{m+n} and 1 - alpha q^{2m+2n}
    check_range(
        "gamma' / c",
        &(gp.clone() / c.clone()),
        0,
        2 * n_cap,
        &mut out,
    ); // (gamma'/c;q)_m and (gamma' q^n / c;q)_i ranges
    check_range(
        "alpha c q / gamma'",
        &(al.clone() * c.clone() / gp.clone()),
        1,
        2 * n_cap + 1,
        &mut out,
    ); // (alpha c q/gamma';q)_n and (alpha c q^{m+1}/gamma';q)_j ranges
    check_range(
        "alpha q^{N+1}",
        &(al.clone() * q.ipow(n_cap + 1)),
        0,
        2 * n_cap - 1,
        &mut out,
    );

    out
}

/// Exact weight w_N(x, y); zero whenever x + y > N.
pub fn racah_weight<T: Field>(pt: GridPoint, params: &RacahParams<T>) -> Result<T> {
    check_grid(pt, params)?;
    let q = params.q();
    let base = params.base();
    let n_cap = params.n_max;
    let (x, y) = (pt.x, pt.y);
    if x + y > n_cap {
        return Ok(T::zero());
    }
    let al = &params.alpha;
    let ga = &params.gamma;
    let gp = &params.gamma_prime;
    let c = &params.c;
    let gg = params.gg();
    let alc = al.clone() * c.clone();
    let gg_alc = gg.clone() / alc.clone();

    let mut num = qpochhammer(&(al.clone() * q.clone() / gg.clone()), base, n_cap)?;
    num = num * qpochhammer(&(gp.clone() / c.clone()), base, n_cap)?;
    num = num * qpochhammer(&(alc.clone() * q.clone() / gp.clone()), base, n_cap)?;
    let mut den = qpochhammer(&(al.clone() * q.clone()), base, n_cap)?;
    den = den * qpochhammer(&(T::one() / c.clone()), base, n_cap)?;
    den = den * qpochhammer(&(al.clone() * c.clone() * q.clone() / gg.clone()), base, n_cap)?;
    let mut w = num / den;

    num = (T::one() - gg_alc.clone() * q.ipow(2 * x - n_cap - 1))
        * (T::one() - c.clone() * q.ipow(2 * y - n_cap));
    num = num * qpochhammer(&(gg_alc.clone() * q.ipow(-n_cap - 1)), base, x)?;
    num = num * qpochhammer(ga, base, x)?;
    num = num * qpochhammer(&(c.clone() * q.ipow(-n_cap)), base, y)?;
    num = num * qpochhammer(gp, base, y)?;
    den = (T::one() - gg_alc.clone() * q.ipow(-n_cap - 1))
        * (T::one() - c.clone() * q.ipow(-n_cap));
    den = den * qpochhammer(q, base, x)?;
    den = den * qpochhammer(&(gp.clone() * q.ipow(-n_cap) / alc.clone()), base, x)?;
    den = den * qpochhammer(q, base, y)?;
    den = den * qpochhammer(&(c.clone() * q.ipow(1 - n_cap) / gp.clone()), base, y)?;
    w = w * num / den;

    num = qpochhammer(&(T::one() / c.clone()), base, x - y)?;
    num = num * qpochhammer(&q.ipow(-n_cap), base, x + y)?;
    den = qpochhammer(&gg_alc, base, x - y)?;
    den = den * qpochhammer(&(gg.clone() * q.ipow(-n_cap) / al.clone()), base, x + y)?;
    w = w * num / den;

    Ok(w * al.ipow(-x) * gp.ipow(x - y))
}

/// First family F_{m,n}(x, y), primary double-series form. The prefactor
/// carries c^{n-m} q^{mx+ny+mn}; the q^{mn} is required for exact agreement
/// with the alternate representation and with the norm (both verified
/// exactly in the tests).
pub fn racah_f<T: Field>(
    pair: DegreePair,
    pt: GridPoint,
    params: &RacahParams<T>,
) -> Result<T> {
    check_grid(pt, params)?;
    check_degree(pair, params)?;
    let q = params.q();
    let base = params.base();
    let n_cap = params.n_max;
    let (x, y) = (pt.x, pt.y);
    let (m, n) = (pair.m, pair.n);
    let al = &params.alpha;
    let ga = &params.gamma;
    let gp = &params.gamma_prime;
    let c = &params.c;
    let gg = params.gg();
    let alc = al.clone() * c.clone();
    let gg_alc = gg.clone() / alc.clone();

    let mut pre = qpochhammer(&(al.clone() * q.ipow(n_cap + 1 - x - y) / gg.clone()), base, m + n)?;
    pre = pre * qpochhammer(&(q.ipow(x - y) / c.clone()), base, n)?;
    pre = pre * qpochhammer(&(alc.clone() * q.ipow(1 + y - x) / gg.clone()), base, m)?;
    pre = pre / qpochhammer(&q.ipow(-n_cap), base, m + n)?;
    pre = pre / qpochhammer(&(alc.clone() * q.clone() / gg.clone()), base, n)?;
    pre = pre / qpochhammer(&(T::one() / c.clone()), base, m)?;
    pre = pre * c.ipow(n - m) * q.ipow(m * x + n * y + m * n);

    let mut sum = T::zero();
    for i in 0..=m {
        for j in 0..=n {
            let mut t = qpochhammer(&q.ipow(-m), base, i)?;
            t = t * qpochhammer(&(ga.clone() * q.ipow(x)), base, i)?;
            t = t * qpochhammer(&(gg_alc.clone() * q.ipow(x - n_cap - 1)), base, i)?;
            t = t * qpochhammer(&q.ipow(-n), base, j)?;
            t = t * qpochhammer(&(gp.clone() * q.ipow(y)), base, j)?;
            t = t * qpochhammer(&(c.clone() * q.ipow(y - n_cap)), base, j)?;
            t = t * qpochhammer(&(gg.clone() * q.ipow(-m - n) / al.clone()), base, i + j)?;
            t = t / qpochhammer(q, base, i)?;
            t = t / qpochhammer(ga, base, i)?;
            t = t / qpochhammer(&(gg_alc.clone() * q.ipow(x - y - m)), base, i)?;
            t = t / qpochhammer(q, base, j)?;
            t = t / qpochhammer(gp, base, j)?;
            t = t / qpochhammer(&(c.clone() * q.ipow(1 + y - x - n)), base, j)?;
            t = t / qpochhammer(&(gg.clone() * q.ipow(x + y - n_cap - m - n) / al.clone()), base, i + j)?;
            sum = sum + t * q.ipow(i + j);
        }
    }
    Ok(pre * sum)
}

/// First family, alternate double-series form. Only defined on the support
/// triangle x + y <= N: its prefactor divides by (q^{-N};q)_{x+y}, which
/// vanishes above the diagonal.
pub fn racah_f_alt<T: Field>(
    pair: DegreePair,
    pt: GridPoint,
    params: &RacahParams<T>,
) -> Result<T> {
    check_grid(pt, params)?;
    check_degree(pair, params)?;
    let n_cap = params.n_max;
    let (x, y) = (pt.x, pt.y);
    if x + y > n_cap {
        return Err(Error::Domain(format!(
            "alternate F form undefined above the diagonal: x + y = {} > N = {}",
            x + y,
            n_cap
        )));
    }
    let q = params.q();
    let base = params.base();
    let (m, n) = (pair.m, pair.n);
    let al = &params.alpha;
    let ga = &params.gamma;
    let gp = &params.gamma_prime;
    let c = &params.c;
    let gg = params.gg();
    let alc = al.clone() * c.clone();
    let gg_alc = gg.clone() / alc.clone();
    let gg_al = gg.clone() / al.clone();

    let mut pre = qpochhammer(&(gg_al.clone() * q.ipow(-n_cap)), base, x + y)?;
    pre = pre * qpochhammer(&gg_alc, base, x - y)?;
    pre = pre / qpochhammer(&q.ipow(-n_cap), base, x + y)?;
    pre = pre / qpochhammer(&(T::one() / c.clone()), base, x - y)?;
    pre = pre * (al.clone() / gg.clone()).ipow(x);
    pre = pre * (al.clone() * q.ipow(n_cap + n + 1) / gg.clone()).ipow(m);
    pre = pre * q.ipow(n_cap * n);

    let mut sum = T::zero();
    for j in 0..=x {
        for k in 0..=y {
            let mut t = qpochhammer(&(gg_al.clone() * q.ipow(-m - n)), base, j + k)?;
            t = t * qpochhammer(&q.ipow(-x), base, j)?;
            t = t * qpochhammer(&(gg_alc.clone() * q.ipow(x - n_cap - 1)), base, j)?;
            t = t * qpochhammer(&(ga.clone() * q.ipow(m)), base, j)?;
            t = t * qpochhammer(&q.ipow(-y), base, k)?;
            t = t * qpochhammer(&(c.clone() * q.ipow(y - n_cap)), base, k)?;
            t = t * qpochhammer(&(gp.clone() * q.ipow(n)), base, k)?;
            t = t / qpochhammer(&(gg_al.clone() * q.ipow(-n_cap)), base, j + k)?;
            t = t / qpochhammer(q, base, j)?;
            t = t / qpochhammer(ga, base, j)?;
            t = t / qpochhammer(&(gg_alc.clone() * q.ipow(-n)), base, j)?;
            t = t / qpochhammer(q, base, k)?;
            t = t / qpochhammer(&(c.clone() * q.ipow(1 - m)), base, k)?;
            t = t / qpochhammer(gp, base, k)?;
            sum = sum + t * q.ipow(j + k);
        }
    }
    Ok(pre * sum)
}

/// Second family G_{m,n}(x, y), primary double-series form. A polynomial of
/// total degree m + n in the variables q^{-x} + (gamma gamma'/(alpha c))
/// q^{x-N-1} and q^{-y} + c q^{y-N}. Accepts any degrees with m, n <= N
/// (the biorthogonality is only certified for m + n <= N).
pub fn racah_g<T: Field>(
    pair: DegreePair,
    pt: GridPoint,
    params: &RacahParams<T>,
) -> Result<T> {
    check_grid(pt, params)?;
    if pair.m < 0 || pair.n < 0 || pair.m > params.n_max || pair.n > params.n_max {
        return Err(Error::Domain("degrees must lie in [0, N]".into()));
    }
    let q = params.q();
    let base = params.base();
    let n_cap = params.n_max;
    let (x, y) = (pt.x, pt.y);
    let (m, n) = (pair.m, pair.n);
    let al = &params.alpha;
    let ga = &params.gamma;
    let gp = &params.gamma_prime;
    let c = &params.c;
    let gg_alc = params.gg() / (al.clone() * c.clone());

    let mut sum = T::zero();
    // terms with i > x or j > y vanish through (q^{-x};q)_i, (q^{-y};q)_j
    for i in 0..=m.min(x) {
        for j in 0..=n.min(y) {
            let mut t = qpochhammer(&q.ipow(-m), base, i)?;
            t = t * qpochhammer(&q.ipow(-x), base, i)?;
            t = t * qpochhammer(&(gg_alc.clone() * q.ipow(x - n_cap - 1)), base, i)?;
            t = t * qpochhammer(&q.ipow(-n), base, j)?;
            t = t * qpochhammer(&q.ipow(-y), base, j)?;
            t = t * qpochhammer(&(c.clone() * q.ipow(y - n_cap)), base, j)?;
            t = t * qpochhammer(&(al.clone() * q.ipow(m + n)), base, i + j)?;
            t = t / qpochhammer(q, base, i)?;
            t = t / qpochhammer(ga, base, i)?;
            t = t / qpochhammer(&(gp.clone() * q.ipow(n) / c.clone()), base, i)?;
            t = t / qpochhammer(q, base, j)?;
            t = t / qpochhammer(gp, base, j)?;
            t = t / qpochhammer(&(al.clone() * c.clone() * q.ipow(m + 1) / gp.clone()), base, j)?;
            let dn = qpochhammer(&q.ipow(-n_cap), base, i + j)?;
            if dn.is_zero() {
                return Err(Error::Pole(format!(
                    "(q^(-N);q)_{} vanishes at ({x},{y}) for degrees ({m},{n})",
                    i + j
                )));
            }
            sum = sum + t / dn * q.ipow(i + j);
        }
    }
    Ok(sum)
}

/// Second family, alternate form with the summation-friendly prefactor;
/// requires m + n <= N.
pub fn racah_g_alt<T: Field>(
    pair: DegreePair,
    pt: GridPoint,
    params: &RacahParams<T>,
) -> Result<T> {
    check_grid(pt, params)?;
    check_degree(pair, params)?;
    let q = params.q();
    let base = params.base();
    let n_cap = params.n_max;
    let (x, y) = (pt.x, pt.y);
    let (m, n) = (pair.m, pair.n);
    let al = &params.alpha;
    let ga = &params.gamma;
    let gp = &params.gamma_prime;
    let c = &params.c;
    let alc_gp = al.clone() * c.clone() / gp.clone();
    let gp_c = gp.clone() / c.clone();

    let mut pre = qpochhammer(&(al.clone() * q.ipow(n_cap + 1)), base, m + n)?;
    pre = pre * qpochhammer(&(alc_gp.clone() * q.clone()), base, m)?;
    pre = pre * qpochhammer(&gp_c, base, n)?;
    pre = pre / qpochhammer(&q.ipow(-n_cap), base, m + n)?;
    pre = pre / qpochhammer(&gp_c, base, m)?;
    pre = pre / qpochhammer(&(alc_gp.clone() * q.clone()), base, n)?;
    pre = pre * (gp.clone() * q.ipow(-n_cap - 1) / (al.clone() * c.clone())).ipow(m);
    pre = pre * (c.clone() * q.ipow(-n_cap) / gp.clone()).ipow(n);

    let mut sum = T::zero();
    for j in 0..=m {
        for k in 0..=n {
            let mut t = qpochhammer(&(al.clone() * q.ipow(m + n)), base, j + k)?;
            t = t * qpochhammer(&q.ipow(-m), base, j)?;
            t = t * qpochhammer(&(ga.clone() * q.ipow(x)), base, j)?;
            t = t * qpochhammer(&(alc_gp.clone() * q.ipow(n_cap - x + 1)), base, j)?;
            t = t * qpochhammer(&q.ipow(-n), base, k)?;
            t = t * qpochhammer(&(gp.clone() * q.ipow(y)), base, k)?;
            t = t * qpochhammer(&(gp_c.clone() * q.ipow(n_cap - y)), base, k)?;
            t = t / qpochhammer(&(al.clone() * q.ipow(n_cap + 1)), base, j + k)?;
            t = t / qpochhammer(q, base, j)?;
            t = t / qpochhammer(ga, base, j)?;
            t = t / qpochhammer(&(alc_gp.clone() * q.ipow(n + 1)), base, j)?;
            t = t / qpochhammer(q, base, k)?;
            t = t / qpochhammer(gp, base, k)?;
            t = t / qpochhammer(&(gp_c.clone() * q.ipow(m)), base, k)?;
            sum = sum + t * q.ipow(j + k);
        }
    }
    Ok(pre * sum)
}

/// Biorthogonality normalization nu_{m,n}.
pub fn racah_norm<T: Field>(pair: DegreePair, params: &RacahParams<T>) -> Result<T> {
    check_degree(pair, params)?;
    let q = params.q();
    let base = params.base();
    let n_cap = params.n_max;
    let (m, n) = (pair.m, pair.n);
    let al = &params.alpha;
    let ga = &params.gamma;
    let gp = &params.gamma_prime;
    let c = &params.c;
    let gg = params.gg();

    let mut v = (T::one() - al.clone()) / (T::one() - al.clone() * q.ipow(2 * m + 2 * n));
    v = v * qpochhammer(q, base, m)?;
    v = v * qpochhammer(&(al.clone() * c.clone() * q.clone() / gp.clone()), base, m)?;
    v = v * qpochhammer(q, base, n)?;
    v = v * qpochhammer(&(gp.clone() / c.clone()), base, n)?;
    v = v * qpochhammer(&(al.clone() * q.clone() / gg.clone()), base, m + n)?;
    v = v * qpochhammer(&(al.clone() * q.ipow(n_cap + 1)), base, m + n)?;
    v = v / qpochhammer(ga, base, m)?;
    v = v / qpochhammer(&(T::one() / c.clone()), base, m)?;
    v = v / qpochhammer(gp, base, n)?;
    v = v / qpochhammer(&(al.clone() * c.clone() * q.clone() / gg.clone()), base, n)?;
    v = v / qpochhammer(al, base, m + n)?;
    v = v / qpochhammer(&q.ipow(-n_cap), base, m + n)?;
    Ok(v * c.ipow(n - m) * q.ipow(m * n))
}

/// Exact inner product sum_{x+y <= N} w_N(x,y) F_{m,n}(x,y) G_{m',n'}(x,y).
/// Equals nu_{m,n} when (m,n) = (m',n') and exactly zero otherwise.
pub fn inner_product<T: Field>(
    pair: DegreePair,
    pair2: DegreePair,
    params: &RacahParams<T>,
) -> Result<T> {
    check_degree(pair, params)?;
    check_degree(pair2, params)?;
    let n_cap = params.n_max;
    let mut total = T::zero();
    for x in 0..=n_cap {
        for y in 0..=(n_cap - x) {
            let pt = GridPoint { x, y };
            let w = racah_weight(pt, params)?;
            let f = racah_f(pair, pt, params)?;
            let g = racah_g(pair2, pt, params)?;
            total = total + w * f * g;
        }
    }
    Ok(total)
}

/// All degree pairs with m + n <= N, ordered lexicographically.
pub fn degree_pairs(n_max: i64) -> Vec<DegreePair> {
    let mut out = Vec::new();
    for m in 0..=n_max {
        for n in 0..=(n_max - m) {
            out.push(DegreePair { m, n });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn default_params(n_max: i64) -> RacahParams<BigRational> {
        RacahParams::new(n_max, rat(1, 3), rat(1, 5), rat(1, 7), rat(3, 2), rat(1, 2)).unwrap()
    }

    #[test]
    fn default_parameters_are_admissible() {
        let params = default_params(3);
        assert!(validate_params(&params).is_empty());
    }

    #[test]
    fn constructed_poles_are_reported() {
        // c = q^N makes 1 - c q^{-N} vanish in the weight
        let params =
            RacahParams::new(3, rat(1, 3), rat(1, 5), rat(1, 7), rat(1, 8), rat(1, 2)).unwrap();
        let violations = validate_params(&params);
        assert!(!violations.is_empty());
        assert!(violations.iter().any(|v| v.factor.contains("c q^{-N}") || v.factor.contains("1/c")),
            "{violations:?}");

        // gamma = q^{-1}: (gamma;q)_i vanishes at i = 2
        let params =
            RacahParams::new(3, rat(1, 3), rat(2, 1), rat(1, 7), rat(3, 2), rat(1, 2)).unwrap();
        let violations = validate_params(&params);
        assert!(violations.iter().any(|v| v.factor.contains("[gamma]")), "{violations:?}");
    }

    #[test]
    fn weight_vanishes_exactly_off_triangle() {
        let params = default_params(3);
        for x in 0..=3 {
            for y in 0..=3 {
                let w = racah_weight(GridPoint { x, y }, &params).unwrap();
                assert_eq!(w.is_zero(), x + y > 3, "({x},{y})");
            }
        }
    }

    #[test]
    fn weight_at_origin_is_the_prefactor_ratio() {
        let params = default_params(3);
        let base = params.base();
        let w = racah_weight(GridPoint { x: 0, y: 0 }, &params).unwrap();
        let gg = rat(1, 35);
        let al = rat(1, 3);
        let gp = rat(1, 7);
        let c = rat(3, 2);
        let num = qpochhammer(&(al.clone() * rat(1, 2) / gg.clone()), base, 3).unwrap()
            * qpochhammer(&(gp.clone() / c.clone()), base, 3).unwrap()
            * qpochhammer(&(al.clone() * c.clone() * rat(1, 2) / gp.clone()), base, 3).unwrap();
        let den = qpochhammer(&(al.clone() * rat(1, 2)), base, 3).unwrap()
            * qpochhammer(&(BigRational::one() / c.clone()), base, 3).unwrap()
            * qpochhammer(&(al * c * rat(1, 2) / gg), base, 3).unwrap();
        assert_eq!(w, num / den);
    }

    #[test]
    fn weight_normalization_exact() {
        for n_max in 1..=5 {
            let params = default_params(n_max);
            let mut total = BigRational::zero();
            for x in 0..=n_max {
                for y in 0..=n_max {
                    total = total + racah_weight(GridPoint { x, y }, &params).unwrap();
                }
            }
            assert_eq!(total, BigRational::one(), "N = {n_max}");
        }
    }

    #[test]
    fn degree_zero_families_are_one() {
        let params = default_params(3);
        let zero = DegreePair { m: 0, n: 0 };
        for x in 0..=3 {
            for y in 0..=3 {
                let pt = GridPoint { x, y };
                assert!(racah_g(zero, pt, &params).unwrap().is_one());
                assert!(racah_f(zero, pt, &params).unwrap().is_one());
                if x + y <= 3 {
                    // nontrivial summation identity collapsing to 1
                    assert!(racah_f_alt(zero, pt, &params).unwrap().is_one());
                }
            }
        }
    }

    #[test]
    fn f_representations_agree_exactly() {
        let params = default_params(3);
        for pair in degree_pairs(3) {
            for x in 0..=3 {
                for y in 0..=(3 - x) {
                    let pt = GridPoint { x, y };
                    let f1 = racah_f(pair, pt, &params).unwrap();
                    let f2 = racah_f_alt(pair, pt, &params).unwrap();
                    assert_eq!(f1, f2, "pair {pair:?} at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn g_representations_agree_exactly() {
        let params = default_params(3);
        for pair in degree_pairs(3) {
            for x in 0..=3 {
                for y in 0..=3 {
                    let pt = GridPoint { x, y };
                    let g1 = racah_g(pair, pt, &params).unwrap();
                    let g2 = racah_g_alt(pair, pt, &params).unwrap();
                    assert_eq!(g1, g2, "pair {pair:?} at ({x},{y})");
                }
            }
        }
    }

    #[test]
    fn f_alt_rejects_points_above_diagonal() {
        let params = default_params(3);
        let res = racah_f_alt(DegreePair { m: 1, n: 0 }, GridPoint { x: 2, y: 2 }, &params);
        assert!(matches!(res, Err(Error::Domain(_))));
    }

    #[test]
    fn f_primary_two_term_literal_expansion() {
        // (m,n) = (1,0), N = 2: prefactor x sum_{i=0,1} with j = 0 only
        let params = default_params(2);
        let q = rat(1, 2);
        let (x, y) = (1i64, 0i64);
        let al = rat(1, 3);
        let ga = rat(1, 5);
        let gp = rat(1, 7);
        let c = rat(3, 2);
        let gg = ga.clone() * gp.clone();
        let alc = al.clone() * c.clone();
        let n_cap = 2i64;
        let qp = |v: BigRational, k: i64| {
            let mut acc = BigRational::one();
            let mut vv = v;
            for _ in 0..k {
                acc = acc * (BigRational::one() - vv.clone());
                vv = vv * q.clone();
            }
            acc
        };
        let pw = |v: BigRational, e: i64| Field::ipow(&v, e);
        // prefactor at m=1, n=0 (the q^{mn} factor is q^0 here)
        let pre = qp(al.clone() * pw(q.clone(), n_cap + 1 - x - y) / gg.clone(), 1)
            * qp(alc.clone() * pw(q.clone(), 1 + y - x) / gg.clone(), 1)
            / (qp(pw(q.clone(), -n_cap), 1) * qp(BigRational::one() / c.clone(), 1))
            * pw(c.clone(), -1)
            * pw(q.clone(), x);
        // i = 0 term is 1; i = 1 term:
        let t1 = qp(pw(q.clone(), -1), 1)
            * qp(ga.clone() * pw(q.clone(), x), 1)
            * qp(gg.clone() / alc.clone() * pw(q.clone(), x - n_cap - 1), 1)
            * qp(gg.clone() / al.clone() * pw(q.clone(), -1), 1)
            / (qp(q.clone(), 1)
                * qp(ga.clone(), 1)
                * qp(gg.clone() / alc.clone() * pw(q.clone(), x - y - 1), 1)
                * qp(gg.clone() / al.clone() * pw(q.clone(), x + y - n_cap - 1), 1))
            * q.clone();
        let oracle = pre * (BigRational::one() + t1);
        let got = racah_f(DegreePair { m: 1, n: 0 }, GridPoint { x, y }, &params).unwrap();
        assert_eq!(got, oracle);
    }

    #[test]
    fn g_alt_boundary_degree_evaluates() {
        let params = default_params(3);
        // m + n = N boundary
        let v = racah_g_alt(DegreePair { m: 2, n: 1 }, GridPoint { x: 1, y: 2 }, &params);
        assert!(v.is_ok());
        let res = racah_g_alt(DegreePair { m: 3, n: 1 }, GridPoint { x: 0, y: 0 }, &params);
        assert!(matches!(res, Err(Error::Domain(_))));
    }

    #[test]
    fn g_is_affine_in_its_natural_variable_at_degree_one() {
        // (m,n) = (1,0): G is affine in u(x) = q^{-x} + gg/(al c) q^{x-N-1};
        // fit a line from two grid values, the third must match exactly.
        let params = default_params(3);
        let q = rat(1, 2);
        let u = |x: i64| {
            Field::ipow(&q, -x)
                + rat(1, 35) / (rat(1, 3) * rat(3, 2)) * Field::ipow(&q, x - 3 - 1)
        };
        let g = |x: i64| {
            racah_g(DegreePair { m: 1, n: 0 }, GridPoint { x, y: 1 }, &params).unwrap()
        };
        let (u0, u1, u2) = (u(0), u(1), u(2));
        let (g0, g1, g2) = (g(0), g(1), g(2));
        let slope = (g1.clone() - g0.clone()) / (u1.clone() - u0.clone());
        let intercept = g0 - slope.clone() * u0;
        assert_eq!(g2, slope * u2 + intercept);
    }

    #[test]
    fn norm_values_and_asymmetry() {
        let params = default_params(3);
        assert!(racah_norm(DegreePair { m: 0, n: 0 }, &params).unwrap().is_one());
        let nu10 = racah_norm(DegreePair { m: 1, n: 0 }, &params).unwrap();
        let nu01 = racah_norm(DegreePair { m: 0, n: 1 }, &params).unwrap();
        assert_ne!(nu10, nu01);
        // frozen exact values from the y-independent route (norm formula)
        assert_eq!(nu10, rat(-6815, 9856));
        assert_eq!(nu01, rat(-25897, 343728));
    }

    #[test]
    fn norm_matches_inner_product_diagonal() {
        let params = default_params(3);
        let pair = DegreePair { m: 1, n: 0 };
        let ip = inner_product(pair, pair, &params).unwrap();
        assert_eq!(ip, racah_norm(pair, &params).unwrap());
        let pair = DegreePair { m: 1, n: 1 };
        let ip = inner_product(pair, pair, &params).unwrap();
        assert_eq!(ip, racah_norm(pair, &params).unwrap());
    }

    #[test]
    fn off_diagonal_inner_products_vanish_exactly() {
        let params = default_params(3);
        let a = DegreePair { m: 1, n: 0 };
        let b = DegreePair { m: 0, n: 1 };
        assert!(inner_product(a, b, &params).unwrap().is_zero());
        let c = DegreePair { m: 0, n: 0 };
        assert!(inner_product(a, c, &params).unwrap().is_zero());
        assert!(inner_product(c, a, &params).unwrap().is_zero());
    }

    #[test]
    fn unit_pair_inner_product_is_one() {
        let params = default_params(3);
        let zero = DegreePair { m: 0, n: 0 };
        assert!(inner_product(zero, zero, &params).unwrap().is_one());
    }

    #[test]
    fn laurent_interpolation_in_qx() {
        // F(1,1) along x at fixed y is a Laurent polynomial in u = q^x with
        // monomials u^{-2}..u^{2}: fitting 5 coefficients from 5 of the 7
        // available points must reproduce the remaining 2 exactly.
        let n_max = 6i64;
        let params = default_params(n_max);
        let q = rat(1, 2);
        let pair = DegreePair { m: 1, n: 1 };
        let y = 0i64;
        let vals: Vec<BigRational> = (0..=n_max)
            .map(|x| racah_f(pair, GridPoint { x, y }, &params).unwrap())
            .collect();
        // solve the 5x5 system sum_{t=-2}^{2} c_t q^{x t} = F(x), x = 0..4
        let span: Vec<i64> = (-2..=2).collect();
        let mut mat: Vec<Vec<BigRational>> = Vec::new();
        let mut rhs: Vec<BigRational> = Vec::new();
        for x in 0..5i64 {
            mat.push(span.iter().map(|&t| Field::ipow(&q, x * t)).collect());
            rhs.push(vals[x as usize].clone());
        }
        // Gaussian elimination, exact
        let n = 5usize;
        for col in 0..n {
            let piv = (col..n).find(|&r| !mat[r][col].is_zero()).unwrap();
            mat.swap(col, piv);
            rhs.swap(col, piv);
            for r in (col + 1)..n {
                let f = mat[r][col].clone() / mat[col][col].clone();
                for cc in col..n {
                    let sub = f.clone() * mat[col][cc].clone();
                    mat[r][cc] = mat[r][cc].clone() - sub;
                }
                let sub = f * rhs[col].clone();
                rhs[r] = rhs[r].clone() - sub;
            }
        }
        let mut coef = vec![BigRational::zero(); n];
        for r in (0..n).rev() {
            let mut acc = rhs[r].clone();
            for cc in (r + 1)..n {
                acc = acc - mat[r][cc].clone() * coef[cc].clone();
            }
            coef[r] = acc / mat[r][r].clone();
        }
        // the two held-out points must fit exactly
        for x in 5..=6i64 {
            let mut pred = BigRational::zero();
            for (i, &t) in span.iter().enumerate() {
                pred = pred + coef[i].clone() * Field::ipow(&q, x * t);
            }
            assert_eq!(pred, vals[x as usize], "x = {x}");
        }
    }

    #[test]
    fn float_fallback_tracks_exact_values() {
        use num_complex::Complex64;
        let exact = default_params(2);
        let float = RacahParams::new(
            2,
            Complex64::new(1.0 / 3.0, 0.0),
            Complex64::new(0.2, 0.0),
            Complex64::new(1.0 / 7.0, 0.0),
            Complex64::new(1.5, 0.0),
            Complex64::new(0.5, 0.0),
        )
        .unwrap();
        let pair = DegreePair { m: 1, n: 1 };
        let pt = GridPoint { x: 1, y: 1 };
        let e = racah_f(pair, pt, &exact).unwrap();
        let f = racah_f(pair, pt, &float).unwrap();
        let ef = num_traits::ToPrimitive::to_f64(&e).unwrap();
        assert!((f.re - ef).abs() <= 1e-12 * ef.abs().max(1.0));
        assert_eq!(f.im, 0.0);
    }
}
