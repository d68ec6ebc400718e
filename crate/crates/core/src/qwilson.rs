//! The continuous q-family on the p-torus: weight function, closed total
//! weight, the two biorthogonal Laurent-polynomial families, the closed
//! inner product, and a quadrature-backed biorthogonality verifier.
//!
//! Throughout, A = prod a_k, B = prod b_k, with tail products
//! A_j = prod_{k>=j} a_k and the beta chain beta_{k+1} = beta_k/(a_k b_{k+1})
//! threading an arbitrary parameter beta through the weight; beta cancels
//! from every integrated quantity.

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::index::{multi_range, MultiIndex};
use crate::qseries::{h_factor, qpochhammer, qpochhammer_inf, qpochhammer_multi};
use crate::quadrature::{torus_integrate, TorusGridSpec};
use crate::scalar::{Field, QBase};

/// Parameters (p; a_1..a_p; b_1..b_p; c, d; beta; q) of the continuous
/// family, with derived products and the beta chain fixed at construction.
#[derive(Clone, Debug)]
pub struct ContinuousParams {
    a: Vec<Complex64>,
    b: Vec<Complex64>,
    c: Complex64,
    d: Complex64,
    beta: Complex64,
    base: QBase<Complex64>,
    big_a: Complex64,
    big_b: Complex64,
    /// B_2 = prod_{k>=2} b_k (1 when p = 1); the weight's global beta factor
    /// is written beta/B_2 = beta b_1 / B to stay finite when b_1 = 0.
    b2: Complex64,
    betas: Vec<Complex64>,
}

impl ContinuousParams {
    pub fn new(
        q: Complex64,
        a: Vec<Complex64>,
        b: Vec<Complex64>,
        c: Complex64,
        d: Complex64,
        beta: Complex64,
    ) -> Result<Self> {
        let base = QBase::new(q)?;
        let p = a.len();
        if p == 0 || b.len() != p {
            return Err(Error::InvalidParams(
                "parameter vectors a, b must be nonempty and of equal length".into(),
            ));
        }
        for (k, v) in a.iter().chain(b.iter()).enumerate() {
            if v.norm() >= 1.0 {
                return Err(Error::InvalidParams(format!(
                    "all |a_k|, |b_k| must be < 1 (violated at position {k})"
                )));
            }
        }
        if c.norm() >= 1.0 || d.norm() >= 1.0 {
            return Err(Error::InvalidParams("|c| and |d| must be < 1".into()));
        }
        // the beta chain divides by a_1..a_{p-1} and b_2..b_p
        for k in 0..p.saturating_sub(1) {
            if a[k].is_zero() || b[k + 1].is_zero() {
                return Err(Error::InvalidParams(
                    "a_1..a_{p-1} and b_2..b_p must be nonzero for p >= 2".into(),
                ));
            }
        }
        // beta != q^{+-n}
        let qn = q.norm();
        let mut pw = Complex64::one();
        loop {
            for cand in [pw, Complex64::one() / pw] {
                if (beta - cand).norm() <= 1e-9 * (1.0 + cand.norm()) {
                    return Err(Error::InvalidParams(
                        "beta must avoid every integer power q^{+-n}".into(),
                    ));
                }
            }
            pw *= q;
            if pw.norm() < 1e-12 || qn >= 1.0 {
                break;
            }
        }
        let big_a = a.iter().product();
        let big_b = b.iter().product();
        let b2 = b.iter().skip(1).product();
        let mut betas = Vec::with_capacity(p);
        betas.push(beta);
        for k in 0..p - 1 {
            let next = betas[k] / (a[k] * b[k + 1]);
            betas.push(next);
        }
        Ok(ContinuousParams { a, b, c, d, beta, base, big_a, big_b, b2, betas })
    }

    pub fn dim(&self) -> usize {
        self.a.len()
    }

    pub fn base(&self) -> &QBase<Complex64> {
        &self.base
    }

    pub fn q(&self) -> Complex64 {
        *self.base.value()
    }

    pub fn a(&self) -> &[Complex64] {
        &self.a
    }

    pub fn b(&self) -> &[Complex64] {
        &self.b
    }

    pub fn c(&self) -> Complex64 {
        self.c
    }

    pub fn d(&self) -> Complex64 {
        self.d
    }

    pub fn beta(&self) -> Complex64 {
        self.beta
    }

    /// A = a_1 a_2 ... a_p.
    pub fn prod_a(&self) -> Complex64 {
        self.big_a
    }

    /// B = b_1 b_2 ... b_p.
    pub fn prod_b(&self) -> Complex64 {
        self.big_b
    }

    /// The chain beta_1 = beta, beta_{k+1} = beta_k / (a_k b_{k+1}).
    pub fn beta_chain(&self) -> &[Complex64] {
        &self.betas
    }

    /// Tail product of the b's starting at 1-based index j.
    fn b_tail(&self, j: usize) -> Complex64 {
        self.b[j - 1..].iter().product()
    }

    fn abcd(&self) -> Complex64 {
        self.big_a * self.big_b * self.c * self.d
    }
}

/// A point theta = (theta_1, ..., theta_p) on the torus, with tail sums
/// Theta_j = theta_j + ... + theta_p and Theta = Theta_1.
#[derive(Clone, Debug)]
pub struct TorusPoint {
    theta: Vec<f64>,
}

impl TorusPoint {
    pub fn new(theta: Vec<f64>) -> Result<Self> {
        if theta.is_empty() {
            return Err(Error::InvalidParams("torus point must be nonempty".into()));
        }
        for &t in &theta {
            if !(-std::f64::consts::PI..=std::f64::consts::PI).contains(&t) {
                return Err(Error::InvalidParams(format!("theta = {t} outside [-pi, pi]")));
            }
        }
        Ok(TorusPoint { theta })
    }

    pub fn coords(&self) -> &[f64] {
        &self.theta
    }

    pub fn total(&self) -> f64 {
        self.theta.iter().sum()
    }

    /// Theta_j (1-based j; j = p+1 gives 0).
    pub fn tail(&self, j: usize) -> f64 {
        self.theta[j - 1..].iter().sum()
    }
}

fn unit_phase(t: f64) -> Complex64 {
    Complex64::new(0.0, t).exp()
}

/// The weight w^(p)(x;q), including the (2 pi)^{-p} prefactor. Vanishes at
/// Theta = 0 through its (e^{2i Theta}, e^{-2i Theta}; q)_inf numerator.
pub fn weight_q(point: &TorusPoint, params: &ContinuousParams, tol: f64) -> Result<Complex64> {
    let p = params.dim();
    if point.coords().len() != p {
        return Err(Error::Domain("point dimension mismatch".into()));
    }
    let base = params.base();
    let q = params.q();
    let theta_sum = point.total();
    let e_total = unit_phase(theta_sum);

    let num = qpochhammer_inf(unit_phase(2.0 * theta_sum), base, tol)?
        * qpochhammer_inf(unit_phase(-2.0 * theta_sum), base, tol)?;

    let mut den = qpochhammer_inf(params.prod_a() / e_total, base, tol)?
        * qpochhammer_inf(params.prod_b() * e_total, base, tol)?;
    den *= h_factor(theta_sum, &[params.c(), params.d()], base, tol)?;
    // the global beta factor, written via beta/B_2 = beta b_1/B
    let bb2 = params.beta / params.b2;
    den *= qpochhammer_inf(bb2 * e_total, base, tol)?;
    den *= qpochhammer_inf(q * params.b2 / params.beta / e_total, base, tol)?;

    let mut prod = Complex64::one();
    for k in 0..p {
        let e_k = unit_phase(point.coords()[k]);
        prod *= qpochhammer_inf(params.betas[k] * e_k, base, tol)?;
        prod *= qpochhammer_inf(q / params.betas[k] / e_k, base, tol)?;
        prod /= qpochhammer_inf(params.a[k] * e_k, base, tol)?;
        prod /= qpochhammer_inf(params.b[k] / e_k, base, tol)?;
    }

    let two_pi_p = (2.0 * std::f64::consts::PI).powi(p as i32);
    Ok(num / den * prod / two_pi_p)
}

/// Closed form of the total weight
/// W^(p)(q) = integral of w^(p) over the torus:
///
///   2 (ABcd;q)_inf prod_{k=2}^p (b_k beta_k, q/(b_k beta_k); q)_inf
///   ------------------------------------------------------------------
///   (q;q)_inf^p (Ac, Ad, Bc, Bd, cd; q)_inf prod_{k=1}^p (a_k b_k;q)_inf
///
/// (the k = 2..p product is empty when p = 1).
pub fn total_weight_closed(params: &ContinuousParams, tol: f64) -> Result<Complex64> {
    let base = params.base();
    let q = params.q();
    let (big_a, big_b) = (params.prod_a(), params.prod_b());
    let mut num = 2.0 * qpochhammer_inf(params.abcd(), base, tol)?;
    for k in 1..params.dim() {
        let bb = params.b[k] * params.betas[k];
        num *= qpochhammer_inf(bb, base, tol)? * qpochhammer_inf(q / bb, base, tol)?;
    }
    let mut den = qpochhammer_inf(q, base, tol)?.ipow(params.dim() as i64);
    for v in [
        big_a * params.c,
        big_a * params.d,
        big_b * params.c,
        big_b * params.d,
        params.c * params.d,
    ] {
        den *= qpochhammer_inf(v, base, tol)?;
    }
    for k in 0..params.dim() {
        den *= qpochhammer_inf(params.a[k] * params.b[k], base, tol)?;
    }
    Ok(num / den)
}

fn check_index(n: &MultiIndex, params: &ContinuousParams) -> Result<()> {
    if n.len() != params.dim() {
        return Err(Error::Domain(format!(
            "degree vector has {} entries, parameters have p = {}",
            n.len(),
            params.dim()
        )));
    }
    Ok(())
}

/// The first Laurent family P_n(x;q):
///
///   (Ac, Ad;q)_N prod_k (a_k b_k;q)_{n_k}
///   x sum_j (ABcd q^{N-1}, A e^{-i Theta};q)_J / (Ac, Ad;q)_J q^J
///           prod_k (q^{-n_k}, a_k e^{i theta_k};q)_{j_k} / (q, a_k b_k;q)_{j_k}
///           prod_{r=1}^{p-1} e^{i j_r Theta_{r+1}} B_{r+1}^{-j_r} q^{-N_{r+1} j_r}.
pub fn poly_p(n: &MultiIndex, point: &TorusPoint, params: &ContinuousParams) -> Result<Complex64> {
    check_index(n, params)?;
    if point.coords().len() != params.dim() {
        return Err(Error::Domain("point dimension mismatch".into()));
    }
    let p = params.dim();
    let base = params.base();
    let q = params.q();
    let total_n = n.total() as i64;
    let abcd = params.abcd();
    let (ac, ad) = (params.big_a * params.c, params.big_a * params.d);

    let mut pre = qpochhammer_multi(&[ac, ad], base, total_n)?;
    for k in 0..p {
        pre *= qpochhammer(&(params.a[k] * params.b[k]), base, n.get(k) as i64)?;
    }

    let e_total = unit_phase(point.total());
    let mut sum = Complex64::zero();
    for j in multi_range(n.entries()) {
        let jj: i64 = j.iter().map(|&v| v as i64).sum();
        let mut t = qpochhammer_multi(
            &[abcd * q.ipow(total_n - 1), params.big_a / e_total],
            base,
            jj,
        )? / qpochhammer_multi(&[ac, ad], base, jj)?
            * q.ipow(jj);
        for k in 0..p {
            let jk = j[k] as i64;
            t *= qpochhammer_multi(
                &[q.ipow(-(n.get(k) as i64)), params.a[k] * unit_phase(point.coords()[k])],
                base,
                jk,
            )?;
            t /= qpochhammer_multi(&[q, params.a[k] * params.b[k]], base, jk)?;
        }
        for r in 1..p {
            // 1-based r = 1..p-1: phase Theta_{r+1}, denominator B_{r+1}^{j_r},
            // exponent shift q^{-N_{r+1} j_r}
            let jr = j[r - 1] as i64;
            t *= unit_phase(point.tail(r + 1) * jr as f64);
            t *= params.b_tail(r + 1).ipow(-jr);
            t *= q.ipow(-(n.tail(r + 1) as i64) * jr);
        }
        sum += t;
    }
    Ok(pre * sum)
}

/// The second Laurent family, mirror of [`poly_p`]:
///
///   (Bc, Bd;q)_M prod_k (a_k b_k;q)_{m_k}
///   x sum_k (ABcd q^{M-1}, B e^{i Theta};q)_K / (Bc, Bd;q)_K q^K
///           prod_r (q^{-m_r}, b_r e^{-i theta_r};q)_{k_r} / (q, a_r b_r;q)_{k_r}
///           e^{i sum_{r>=2} k_r (Theta_r - Theta)}
///           prod_{r=1}^{p-1} a_r^{-K_{r+1}}  q^{-sum_{r>=2} k_r (M - M_r)}.
pub fn poly_pbar(
    m: &MultiIndex,
    point: &TorusPoint,
    params: &ContinuousParams,
) -> Result<Complex64> {
    check_index(m, params)?;
    if point.coords().len() != params.dim() {
        return Err(Error::Domain("point dimension mismatch".into()));
    }
    let p = params.dim();
    let base = params.base();
    let q = params.q();
    let total_m = m.total() as i64;
    let abcd = params.abcd();
    let (bc, bd) = (params.big_b * params.c, params.big_b * params.d);

    let mut pre = qpochhammer_multi(&[bc, bd], base, total_m)?;
    for k in 0..p {
        pre *= qpochhammer(&(params.a[k] * params.b[k]), base, m.get(k) as i64)?;
    }

    let theta_sum = point.total();
    let e_total = unit_phase(theta_sum);
    let mut sum = Complex64::zero();
    for kv in multi_range(m.entries()) {
        let kk: i64 = kv.iter().map(|&v| v as i64).sum();
        let mut t = qpochhammer_multi(
            &[abcd * q.ipow(total_m - 1), params.big_b * e_total],
            base,
            kk,
        )? / qpochhammer_multi(&[bc, bd], base, kk)?
            * q.ipow(kk);
        for r in 0..p {
            let kr = kv[r] as i64;
            t *= qpochhammer_multi(
                &[q.ipow(-(m.get(r) as i64)), params.b[r] / unit_phase(point.coords()[r])],
                base,
                kr,
            )?;
            t /= qpochhammer_multi(&[q, params.a[r] * params.b[r]], base, kr)?;
        }
        let mut q_exp = 0i64;
        for r in 2..=p {
            let kr = kv[r - 1] as i64;
            t *= unit_phase((point.tail(r) - theta_sum) * kr as f64);
            q_exp -= kr * (total_m - m.tail(r) as i64);
        }
        t *= q.ipow(q_exp);
        for r in 1..p {
            // a_r^{-K_{r+1}} with K_j the tail sums of the summation index
            let k_tail: i64 = kv[r..].iter().map(|&v| v as i64).sum();
            t *= params.a[r - 1].ipow(-k_tail);
        }
        sum += t;
    }
    Ok(pre * sum)
}

/// L_p = (Ac, Ad;q)_N (Bc, Bd;q)_M W^(p)(q) prod_r (a_r b_r;q)_{m_r} (a_r b_r;q)_{n_r}.
pub fn l_p_constant(
    n: &MultiIndex,
    m: &MultiIndex,
    params: &ContinuousParams,
    tol: f64,
) -> Result<Complex64> {
    check_index(n, params)?;
    check_index(m, params)?;
    let base = params.base();
    let (big_a, big_b) = (params.prod_a(), params.prod_b());
    let mut v = qpochhammer_multi(&[big_a * params.c, big_a * params.d], base, n.total() as i64)?;
    v *= qpochhammer_multi(&[big_b * params.c, big_b * params.d], base, m.total() as i64)?;
    v *= total_weight_closed(params, tol)?;
    for r in 0..params.dim() {
        let ab = params.a[r] * params.b[r];
        v *= qpochhammer(&ab, base, m.get(r) as i64)?;
        v *= qpochhammer(&ab, base, n.get(r) as i64)?;
    }
    Ok(v)
}

/// Closed form of the inner product integral P_n . Pbar_m: zero when the
/// total degrees differ, and for N = M
///
///   L_p (ABcdq^{N-1};q)_N ((a_p b_p q^{1-N}/ABcd);q)_{n_p} (q;q)_{m_p}
///       / ((ABcd;q)_{N+m_p} (a_p b_p;q)_{n_p})
///   x (-1)^N q^{-binom(N,2)-n_p} (ABcd q^N)^{n_p}
///   x sum over k_1..k_{p-1} (0 <= k_r <= m_r) of
///       q^{k_1 + k_2 (1+n_1-m_1) + ... + k_{p-1}(1+n_1+...+n_{p-2}-m_1-...-m_{p-2})}
///       (ABcdq^{N-1}, ABcdq^N/(a_p b_p);q)_{k_1+...+k_{p-1}}
///       / (ABcdq^{N+m_p}, ABcdq^{N-n_p}/(a_p b_p);q)_{k_1+...+k_{p-1}}
///       prod_r (q^{-m_r}, a_r b_r q^{n_r};q)_{k_r} / (q, a_r b_r;q)_{k_r}.
///
/// The (q;q)_{m_p} factor and the q^{-n_p} exponent are required for the
/// closed form to agree with the integral (checked against quadrature and
/// against the reduced multisum route).
pub fn inner_product_closed(
    n: &MultiIndex,
    m: &MultiIndex,
    params: &ContinuousParams,
    tol: f64,
) -> Result<Complex64> {
    check_index(n, params)?;
    check_index(m, params)?;
    let total_n = n.total() as i64;
    let total_m = m.total() as i64;
    if total_n != total_m {
        return Ok(Complex64::zero());
    }
    let p = params.dim();
    let base = params.base();
    let q = params.q();
    let abcd = params.abcd();
    let ab_last = params.a[p - 1] * params.b[p - 1];
    let n_last = n.get(p - 1) as i64;
    let m_last = m.get(p - 1) as i64;

    let mut pre = qpochhammer(&(abcd * q.ipow(total_n - 1)), base, total_n)?;
    pre *= qpochhammer(&(ab_last * q.ipow(1 - total_n) / abcd), base, n_last)?;
    pre *= qpochhammer(&q, base, m_last)?;
    pre /= qpochhammer(&abcd, base, total_n + m_last)?;
    pre /= qpochhammer(&ab_last, base, n_last)?;
    let sign = if total_n % 2 == 0 { 1.0 } else { -1.0 };
    pre *= sign * q.ipow(-(total_n * (total_n - 1)) / 2 - n_last);
    pre *= (abcd * q.ipow(total_n)).ipow(n_last);

    let head_bounds = &m.entries()[..p - 1];
    let mut sum = Complex64::zero();
    for kv in multi_range(head_bounds) {
        let s: i64 = kv.iter().map(|&v| v as i64).sum();
        let mut expo = 0i64;
        for (j, &kj) in kv.iter().enumerate() {
            expo += kj as i64 * (1 + n.head(j) as i64 - m.head(j) as i64);
        }
        let mut t = q.ipow(expo);
        t *= qpochhammer_multi(
            &[abcd * q.ipow(total_n - 1), abcd * q.ipow(total_n) / ab_last],
            base,
            s,
        )?;
        t /= qpochhammer_multi(
            &[abcd * q.ipow(total_n + m_last), abcd * q.ipow(total_n - n_last) / ab_last],
            base,
            s,
        )?;
        for r in 0..p - 1 {
            let kr = kv[r] as i64;
            let ab = params.a[r] * params.b[r];
            t *= qpochhammer_multi(
                &[q.ipow(-(m.get(r) as i64)), ab * q.ipow(n.get(r) as i64)],
                base,
                kr,
            )?;
            t /= qpochhammer_multi(&[q, ab], base, kr)?;
        }
        sum += t;
    }
    Ok(l_p_constant(n, m, params, tol)? * pre * sum)
}

/// The reduced double multisum for the same integral (valid for N != M as
/// well): an independent finite-sum route used to cross-check
/// [`inner_product_closed`] and the quadrature.
pub fn inner_product_multisum(
    n: &MultiIndex,
    m: &MultiIndex,
    params: &ContinuousParams,
    tol: f64,
) -> Result<Complex64> {
    check_index(n, params)?;
    check_index(m, params)?;
    let p = params.dim();
    let base = params.base();
    let q = params.q();
    let abcd = params.abcd();
    let total_n = n.total() as i64;
    let total_m = m.total() as i64;

    let mut sum = Complex64::zero();
    for jv in multi_range(n.entries()) {
        for kv in multi_range(m.entries()) {
            let jj: i64 = jv.iter().map(|&v| v as i64).sum();
            let kk: i64 = kv.iter().map(|&v| v as i64).sum();
            let mut t = qpochhammer(&(abcd * q.ipow(total_n - 1)), base, jj)?
                * qpochhammer(&(abcd * q.ipow(total_m - 1)), base, kk)?
                / qpochhammer(&abcd, base, jj + kk)?
                * q.ipow(jj + kk);
            for r in 0..p {
                let ab = params.a[r] * params.b[r];
                let (jr, kr) = (jv[r] as i64, kv[r] as i64);
                t *= qpochhammer(&q.ipow(-(n.get(r) as i64)), base, jr)?;
                t *= qpochhammer(&q.ipow(-(m.get(r) as i64)), base, kr)?;
                t *= qpochhammer(&ab, base, jr + kr)?;
                t /= qpochhammer_multi(&[q, ab], base, jr)?;
                t /= qpochhammer_multi(&[q, ab], base, kr)?;
            }
            let mut expo = 0i64;
            for s in 2..=p {
                let k_tail: i64 = kv[s - 1..].iter().map(|&v| v as i64).sum();
                expo += jv[s - 2] as i64 * (k_tail - n.tail(s) as i64);
                expo += kv[s - 1] as i64 * (m.tail(s) as i64 - total_m);
            }
            t *= q.ipow(expo);
            sum += t;
        }
    }
    Ok(l_p_constant(n, m, params, tol)? * sum)
}

/// Outcome of one quadrature-vs-closed-form biorthogonality check.
#[derive(Clone, Copy, Debug)]
pub struct BiorthogonalityCheck {
    pub quadrature: Complex64,
    pub closed_form: Complex64,
    /// |quadrature - closed_form|.
    pub residual: f64,
    /// Two-resolution convergence estimate of the quadrature.
    pub estimate: f64,
    /// Scale used for pass/fail: the larger of the two diagonal magnitudes
    /// |I(n,n)|, |I(m,m)|.
    pub scale: f64,
    pub pass: bool,
    /// Set when the closed normalization is numerically degenerate (the
    /// parameters sit on a zero of the total weight); no assertion is made.
    pub degenerate: bool,
}

/// Integrates P_n Pbar_m w^(p) over the torus on a `grid`^p lattice and
/// compares with the closed form. `p <= 3` (lattice budget).
pub fn verify_biorthogonality(
    n: &MultiIndex,
    m: &MultiIndex,
    params: &ContinuousParams,
    grid: usize,
    tol: f64,
) -> Result<BiorthogonalityCheck> {
    check_index(n, params)?;
    check_index(m, params)?;
    if params.dim() > 3 {
        return Err(Error::Domain(
            "quadrature verification is limited to p <= 3".into(),
        ));
    }
    let spec = TorusGridSpec::new(params.dim(), grid)?;
    let prod_tol = (tol * 1e-6).max(1e-16);
    let quad = torus_integrate(&spec, |theta| {
        let point = TorusPoint { theta: theta.to_vec() };
        let w = weight_q(&point, params, prod_tol);
        let pn = poly_p(n, &point, params);
        let pm = poly_pbar(m, &point, params);
        match (w, pn, pm) {
            (Ok(w), Ok(pn), Ok(pm)) => w * pn * pm,
            // parameters were validated up front; a failure here would be a
            // programming error, surfaced as NaN rather than a panic inside
            // the parallel reduction
            _ => Complex64::new(f64::NAN, f64::NAN),
        }
    })?;
    let closed = inner_product_closed(n, m, params, prod_tol)?;
    let diag_n = inner_product_closed(n, n, params, prod_tol)?;
    let diag_m = inner_product_closed(m, m, params, prod_tol)?;
    let scale = diag_n.norm().max(diag_m.norm());
    let total_weight = total_weight_closed(params, prod_tol)?;
    let degenerate = scale <= 1e-12 * total_weight.norm().max(1.0) || total_weight.norm() < 1e-12;

    if quad.estimate > 10.0 * tol * scale.max(1e-300) && !degenerate {
        return Err(Error::GridTooCoarse {
            estimate: quad.estimate,
            allowed: 10.0 * tol * scale,
        });
    }
    let residual = (quad.value - closed).norm();
    let pass = if degenerate {
        false
    } else if n.total() == m.total() {
        residual <= tol * closed.norm().max(1e-3 * scale)
    } else {
        quad.value.norm() <= tol * scale
    };
    Ok(BiorthogonalityCheck {
        quadrature: quad.value,
        closed_form: closed,
        residual,
        estimate: quad.estimate,
        scale,
        pass,
        degenerate,
    })
}

/// Continuous parameters for the q -> 1 limit regime: a_k = q^{alpha_k},
/// b_k = q^{beta_k}, c = q^{gamma}, d = q^{delta} for classical exponents
/// taken from a Tratnik parameter set.
pub fn params_from_classical(
    q: f64,
    classical: &crate::classical::TratnikParams,
    beta: f64,
) -> Result<ContinuousParams> {
    let qc = Complex64::new(q, 0.0);
    let lift = |v: f64| Complex64::new(q.powf(v), 0.0);
    ContinuousParams::new(
        qc,
        classical.a.iter().map(|&v| lift(v)).collect(),
        classical.b.iter().map(|&v| lift(v)).collect(),
        lift(classical.c),
        lift(classical.d),
        Complex64::new(beta, 0.0),
    )
}

/// Scaled evaluation qP / (1-q)^{3N} at the torus point theta_k = x_k ln q,
/// the quantity whose q -> 1 limit is the classical family value.
pub fn scaled_limit_p(
    n: &MultiIndex,
    x: &[f64],
    params: &ContinuousParams,
) -> Result<Complex64> {
    let q = params.q().re;
    let theta: Vec<f64> = x.iter().map(|&v| v * q.ln()).collect();
    let point = TorusPoint::new(theta)?;
    let v = poly_p(n, &point, params)?;
    Ok(v / (1.0 - q).powi(3 * n.total() as i32))
}

/// Scaled evaluation of the second family, mirroring [`scaled_limit_p`].
pub fn scaled_limit_pbar(
    m: &MultiIndex,
    x: &[f64],
    params: &ContinuousParams,
) -> Result<Complex64> {
    let q = params.q().re;
    let theta: Vec<f64> = x.iter().map(|&v| v * q.ln()).collect();
    let point = TorusPoint::new(theta)?;
    let v = poly_pbar(m, &point, params)?;
    Ok(v / (1.0 - q).powi(3 * m.total() as i32))
}
