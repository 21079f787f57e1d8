//! Parameter arithmetic for the Hardy-Henon problem
//! `du/dt - Lap u = |x|^gamma |u|^(alpha-1) u` posed in weighted Lorentz
//! spaces `L^{q,r}_s`.
//!
//! Everything here is pure arithmetic on exact rationals: critical exponents,
//! regime classification with uniqueness verdicts, admissibility of the
//! semigroup smoothing estimates and of the endpoint space-time (Meyer)
//! estimate, and the solver constants delta/beta consumed by the Picard
//! machinery.

mod classify;
mod estimates;

pub use classify::{classify, classify_exterior, RegimeVerdict, SolutionSpace, TimeRegularity};
pub use estimates::{
    estimate_admissible, meyer_admissible, solver_constants, EstimateAnswer, EstimateQuery,
    LinearCondition, SolverConstants,
};

use crate::exact::{rat_int, rat_to_f64, Exp, Rat};
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum ParamError {
    #[error("dimension must be >= 1")]
    BadDimension,
    #[error("nonlinearity power alpha must satisfy alpha > 1")]
    BadAlpha,
    #[error("q must satisfy 1 <= q <= inf, got {0}")]
    BadQ(String),
    #[error("r must satisfy 0 < r <= inf, got {0}")]
    BadR(String),
    #[error("r = inf is forced when q = inf")]
    InfPairing,
    #[error("Q_c requires d + gamma > 0")]
    QcUndefined,
    #[error("{0}")]
    Precondition(String),
}

/// The equation data (d, gamma, alpha).
#[derive(Clone, Debug, PartialEq)]
pub struct ProblemParams {
    pub d: u32,
    pub gamma: Rat,
    pub alpha: Rat,
}

impl ProblemParams {
    pub fn new(d: u32, gamma: Rat, alpha: Rat) -> Result<Self, ParamError> {
        if d < 1 {
            return Err(ParamError::BadDimension);
        }
        if alpha <= Rat::one() {
            return Err(ParamError::BadAlpha);
        }
        Ok(Self { d, gamma, alpha })
    }

    pub fn d_rat(&self) -> Rat {
        rat_int(self.d as i64)
    }

    /// `gamma > -min{2, d}`: the Hardy-potential range in which the paper's
    /// standing assumptions operate. Consulted before every verdict except
    /// the critically singular branch d = 1, gamma = -1.
    pub fn hardy_admissible(&self) -> bool {
        let bound = -rat_int(self.d.min(2) as i64);
        self.gamma > bound
    }
}

/// The solution-space data (q, r, s) of `L^{q,r}_s`.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceParams {
    pub q: Exp,
    pub r: Exp,
    pub s: Rat,
}

impl SpaceParams {
    pub fn new(q: Exp, r: Exp, s: Rat) -> Result<Self, ParamError> {
        if let Exp::Finite(qv) = &q {
            if *qv < Rat::one() {
                return Err(ParamError::BadQ(format!("{}", q)));
            }
        }
        match &r {
            Exp::Finite(rv) if *rv <= Rat::zero() => return Err(ParamError::BadR(format!("{}", r))),
            _ => {}
        }
        // L^{inf,r}_s = {0} for r < inf; r = inf is forced when q = inf.
        if q.is_inf() && !r.is_inf() {
            return Err(ParamError::InfPairing);
        }
        Ok(Self { q, r, s })
    }

    /// The scaling sum s/d + 1/q that indexes the whole classification.
    pub fn scaling_sum(&self, d: u32) -> Rat {
        &self.s / rat_int(d as i64) + self.q.recip()
    }
}

/// All critical exponents attached to (d, gamma, alpha) and a choice of q.
///
/// `q_c` is scale-critical, `cap_q_c` governs local integrability of the
/// nonlinearity, `s_c`/`cap_s_c` are the same thresholds expressed on the
/// weight, `alpha_star` is the Serrin exponent, `alpha_fujita` and
/// `alpha_hardy_sobolev` bound the self-similar existence window, and
/// `q_star = d(alpha_star - 1)/2` enters the auxiliary-exponent window of the
/// regular-solution construction.
#[derive(Clone, Debug, PartialEq)]
pub struct CriticalExponents {
    pub q_c: Rat,
    pub cap_q_c: Rat,
    pub s_c: Rat,
    pub cap_s_c: Rat,
    pub alpha_star: Exp,
    pub alpha_fujita: Rat,
    pub alpha_hardy_sobolev: Exp,
    pub q_star: Exp,
}

impl CriticalExponents {
    pub fn q_c_f64(&self) -> f64 {
        rat_to_f64(&self.q_c)
    }
}

/// Compute every critical exponent. Requires d + gamma > 0 so that `Q_c` is
/// defined; the d = 1, gamma = -1 branch never calls this.
pub fn critical_exponents(
    p: &ProblemParams,
    sp: &SpaceParams,
) -> Result<CriticalExponents, ParamError> {
    let d = p.d_rat();
    let two = rat_int(2);
    let am1 = &p.alpha - Rat::one();
    let two_g = &two + &p.gamma;
    let d_g = &d + &p.gamma;
    if d_g <= Rat::zero() {
        return Err(ParamError::QcUndefined);
    }
    if two_g <= Rat::zero() {
        return Err(ParamError::Precondition("q_c requires gamma > -2".into()));
    }
    let q_c = &d * &am1 / &two_g;
    let cap_q_c = &d * &p.alpha / &d_g;
    let inv_q = sp.q.recip();
    let s_c = &two_g / &am1 - &d * &inv_q;
    let cap_s_c = &d_g / &p.alpha - &d * &inv_q;
    let (alpha_star, q_star) = if p.d >= 3 {
        let dm2 = &d - &two;
        let astar = &d_g / &dm2;
        let qs = &d * (&astar - Rat::one()) / &two;
        (Exp::Finite(astar), Exp::Finite(qs))
    } else {
        (Exp::Inf, Exp::Inf)
    };
    let alpha_fujita = Rat::one() + &two_g / &d;
    let alpha_hardy_sobolev = if p.d >= 3 {
        Exp::Finite((&d + &two + &two * &p.gamma) / (&d - &two))
    } else {
        Exp::Inf
    };
    Ok(CriticalExponents {
        q_c,
        cap_q_c,
        s_c,
        cap_s_c,
        alpha_star,
        alpha_fujita,
        alpha_hardy_sobolev,
        q_star,
    })
}

/// Local integrability of `|x|^gamma |u|^(alpha-1) u` for every u in
/// `L^{q,r}_s`: holds iff `s/d + 1/q < 1/Q_c`, or equality together with
/// `r <= alpha`.
pub fn nonlinearity_locally_integrable(
    p: &ProblemParams,
    sp: &SpaceParams,
) -> Result<bool, ParamError> {
    let d_g = p.d_rat() + &p.gamma;
    if d_g <= Rat::zero() {
        return Err(ParamError::QcUndefined);
    }
    let cap_q_c = p.d_rat() * &p.alpha / d_g;
    let x = sp.scaling_sum(p.d);
    let thr = cap_q_c.recip();
    if x < thr {
        Ok(true)
    } else if x == thr {
        Ok(sp.r <= Exp::Finite(p.alpha.clone()))
    } else {
        Ok(false)
    }
}

#[cfg(test)]
mod tests;
