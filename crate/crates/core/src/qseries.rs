//! q-shifted factorials and basic hypergeometric series.
//!
//! Conventions (DLMF §17.2):
//!
//!   (a;q)_n   = prod_{k=0}^{n-1} (1 - a q^k),          n >= 0
//!   (a;q)_{-m} = 1 / (a q^{-m}; q)_m                   (inversion identity)
//!   (a;q)_inf = prod_{k>=0} (1 - a q^k),               |q| < 1
//!
//!   r_phi_s(a_1..a_r; b_1..b_s; q, z)
//!     = sum_k [(a_1..a_r;q)_k / ((q;q)_k (b_1..b_s;q)_k)]
//!       [(-1)^k q^(k(k-1)/2)]^(1+s-r) z^k
//!
//! Everything here is generic over [`Field`]: exact with rational inputs,
//! double precision with complex inputs. Terms are produced by the running
//! ratio t_{k+1}/t_k rather than quotients of factorials, so a terminating
//! series costs O(terms) field operations and no cancellation-prone
//! divisions of large products.

use num_complex::Complex64;
use num_traits::One;

use crate::error::{Error, Result};
use crate::scalar::{Field, QBase, Scalar};

/// (a;q)_n for any integer n. Exact in rational mode.
pub fn qpochhammer<T: Field>(a: &T, base: &QBase<T>, n: i64) -> Result<T> {
    let q = base.value();
    if n >= 0 {
        let mut acc = T::one();
        let mut aq = a.clone();
        for _ in 0..n {
            acc = acc * (T::one() - aq.clone());
            aq = aq * q.clone();
        }
        Ok(acc)
    } else {
        // (a;q)_{-m} = 1/(a q^{-m}; q)_m
        let m = -n;
        let mut acc = T::one();
        let mut aq = a.clone() * q.ipow(-m);
        for k in 0..m {
            let factor = T::one() - aq.clone();
            if factor.is_zero() {
                return Err(Error::Pole(format!(
                    "(a;q)_{{{n}}} with a = {a}: factor 1 - a q^{} vanishes",
                    k - m
                )));
            }
            acc = acc * factor;
            aq = aq * q.clone();
        }
        Ok(T::one() / acc)
    }
}

/// (a_1, a_2, ..., a_r; q)_n = prod_i (a_i;q)_n.
pub fn qpochhammer_multi<T: Field>(params: &[T], base: &QBase<T>, n: i64) -> Result<T> {
    let mut acc = T::one();
    for a in params {
        acc = acc * qpochhammer(a, base, n)?;
    }
    Ok(acc)
}

/// (a;q)_inf, truncated once |a q^k| < tol * (1 - |q|) and k >= 20.
///
/// The (1 - |q|) factor bounds the discarded tail: |log tail| <=
/// |a q^k| / (1 - |q|), so the relative error of the returned product is
/// at most ~tol. The floor of 20 iterations guards against premature exit
/// while the partial products are still adjusting for tiny |a|.
pub fn qpochhammer_inf(a: Complex64, base: &QBase<Complex64>, tol: f64) -> Result<Complex64> {
    let q = *base.value();
    let qn = q.norm();
    if qn >= 1.0 {
        return Err(Error::NonConvergent(qn));
    }
    let threshold = tol * (1.0 - qn);
    let mut acc = Complex64::one();
    let mut aq = a;
    let mut k = 0usize;
    while k < 20 || aq.norm() >= threshold {
        acc *= Complex64::one() - aq;
        aq *= q;
        k += 1;
        if k > 200_000 {
            return Err(Error::NonConvergent(qn));
        }
    }
    Ok(acc)
}

/// h(cos theta; a_1, ..., a_m; q) = prod_j (a_j e^{i theta}, a_j e^{-i theta}; q)_inf.
///
/// For real a_j (and real q) the two members of each pair are exact complex
/// conjugates, so the product is computed as |(a_j e^{i theta};q)_inf|^2 and
/// the result is exactly real.
pub fn h_factor(
    theta: f64,
    params: &[Complex64],
    base: &QBase<Complex64>,
    tol: f64,
) -> Result<Complex64> {
    let e = Complex64::new(0.0, theta).exp();
    let real_base = base.value().im == 0.0;
    let mut acc = Complex64::one();
    for a in params {
        let plus = qpochhammer_inf(a * e, base, tol)?;
        let minus = if a.im == 0.0 && real_base {
            plus.conj()
        } else {
            qpochhammer_inf(a * e.conj(), base, tol)?
        };
        acc *= plus * minus;
    }
    if real_base && params.iter().all(|a| a.im == 0.0) {
        debug_assert!(acc.im.abs() <= 10.0 * tol * acc.norm().max(1.0));
    }
    Ok(acc)
}

/// A basic hypergeometric series r_phi_s.
#[derive(Clone, Debug)]
pub struct SeriesSpec<T: Field> {
    pub numerator: Vec<T>,
    pub denominator: Vec<T>,
    pub base: QBase<T>,
    pub argument: T,
    /// Hard cap on the number of summed terms (also the scan range for
    /// detecting terminating parameters q^{-k}).
    pub max_terms: usize,
}

/// Result of summing a series.
#[derive(Clone, Debug)]
pub struct SeriesValue<T> {
    pub value: T,
    /// Number of terms actually summed.
    pub terms: usize,
    /// For non-terminating series, an upper bound on the truncated tail
    /// relative to the last summed term; `None` when the series terminated.
    pub truncation: Option<f64>,
}

/// Smallest k <= kmax with a q^k = 1, if any.
fn termination_index<T: Field>(a: &T, q: &T, kmax: usize) -> Option<usize> {
    let mut aq = a.clone();
    for k in 0..=kmax {
        if aq.detect_one() {
            return Some(k);
        }
        aq = aq.clone() * q.clone();
    }
    None
}

/// Sums r_phi_s by the running term ratio.
///
/// Terminating series (some numerator parameter q^{-k}) are summed exactly in
/// rational mode. Non-terminating series require |z| < 1 and are truncated at
/// `max_terms` or when terms fall below the working precision, whichever
/// comes first, with a tail bound reported in the result.
pub fn phi_series<T: Field>(spec: &SeriesSpec<T>) -> Result<SeriesValue<T>> {
    let q = spec.base.value();
    let z = &spec.argument;

    let stop = spec
        .numerator
        .iter()
        .filter_map(|a| termination_index(a, q, spec.max_terms))
        .min();

    // A denominator parameter q^{-j} poles the series unless it terminates first.
    for (i, b) in spec.denominator.iter().enumerate() {
        if let Some(j) = termination_index(b, q, spec.max_terms) {
            let reached = match stop {
                Some(n) => j < n,
                None => true,
            };
            if reached {
                return Err(Error::DenominatorPole { index: i, term: j });
            }
        }
    }

    let (n_terms, terminating) = match stop {
        Some(n) => (n + 1, true),
        None => {
            if z.abs_f64() >= 1.0 {
                return Err(Error::NonTerminating(z.abs_f64()));
            }
            (spec.max_terms, false)
        }
    };

    // [(-1)^k q^(k(k-1)/2)]^excess contributes [(-1) q^k]^excess to the ratio.
    let excess = 1 + spec.denominator.len() as i64 - spec.numerator.len() as i64;

    let mut sum = T::zero();
    let mut term = T::one();
    let mut qk = T::one(); // q^k
    let mut summed = 0usize;
    for k in 0..n_terms {
        sum = sum + term.clone();
        summed = k + 1;
        if k + 1 == n_terms {
            break;
        }
        if !terminating && term.abs_f64() <= 1e-17 * sum.abs_f64() && k >= 4 {
            break;
        }
        let mut num = z.clone();
        for a in &spec.numerator {
            num = num * (T::one() - a.clone() * qk.clone());
        }
        let mut den = T::one() - q.clone() * qk.clone();
        for b in &spec.denominator {
            den = den * (T::one() - b.clone() * qk.clone());
        }
        if den.is_zero() {
            return Err(Error::Pole(format!("series denominator vanished at term {k}")));
        }
        if excess != 0 {
            num = num * (qk.clone().neg()).ipow(excess);
        }
        term = term * num / den;
        qk = qk * q.clone();
    }

    let truncation = if terminating {
        None
    } else {
        // Tail dominated by a geometric series in |z| once q^k factors settle.
        let zn = z.abs_f64();
        Some(term.abs_f64() * zn / (1.0 - zn))
    };

    Ok(SeriesValue {
        value: sum,
        terms: summed,
        truncation,
    })
}

/// Mode-dispatching wrapper over [`qpochhammer`] for boundary callers
/// holding [`Scalar`] values. Mixing modes is an error.
pub fn qpochhammer_scalar(a: &Scalar, base: &Scalar, n: i64) -> Result<Scalar> {
    match (a, base) {
        (Scalar::Rational(a), Scalar::Rational(q)) => {
            let base = QBase::new(q.clone())?;
            Ok(Scalar::Rational(qpochhammer(a, &base, n)?))
        }
        (Scalar::Complex(a), Scalar::Complex(q)) => {
            let base = QBase::new(*q)?;
            Ok(Scalar::Complex(qpochhammer(a, &base, n)?))
        }
        _ => Err(Error::ModeMismatch),
    }
}
