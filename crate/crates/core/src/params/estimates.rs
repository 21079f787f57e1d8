//! Admissibility of the weighted smoothing estimates and the endpoint
//! space-time estimate, plus the solver constants delta and beta.

use super::{ParamError, ProblemParams, SpaceParams};
use crate::exact::{fmt_rat, rat_int, rat_to_f64, Exp, Rat};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// A (q, r, s) triple on one side of an estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct SpaceTriple {
    pub q: Exp,
    pub r: Exp,
    pub s: Rat,
}

impl SpaceTriple {
    pub fn new(q: Exp, r: Exp, s: Rat) -> Self {
        SpaceTriple { q, r, s }
    }

    fn sum(&self, d: u32) -> Rat {
        &self.s / rat_int(d as i64) + self.q.recip()
    }
}

impl fmt::Display for SpaceTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.q, self.r, fmt_rat(&self.s))
    }
}

/// `e^{t Lap}: L^(q1,r1)_s1 -> L^(q2,r2)_s2` query.
#[derive(Clone, Debug, PartialEq)]
pub struct EstimateQuery {
    pub source: SpaceTriple,
    pub target: SpaceTriple,
    pub d: u32,
}

impl EstimateQuery {
    pub fn new(d: u32, source: SpaceTriple, target: SpaceTriple) -> Result<Self, ParamError> {
        if d < 1 {
            return Err(ParamError::BadDimension);
        }
        for (side, t) in [("source", &source), ("target", &target)] {
            if let Exp::Finite(qv) = &t.q {
                if *qv < Rat::one() {
                    return Err(ParamError::BadQ(format!("{side} q = {}", t.q)));
                }
            }
            if let Exp::Finite(rv) = &t.r {
                if *rv <= Rat::zero() {
                    return Err(ParamError::BadR(format!("{side} r = {}", t.r)));
                }
            }
        }
        if target.q <= Exp::Finite(Rat::one()) {
            return Err(ParamError::Precondition("target q must satisfy q > 1".into()));
        }
        Ok(EstimateQuery { source, target, d })
    }
}

/// The individual hypotheses of the smoothing estimate. Display names follow
/// the numbering (3.2)-(3.7); primed variants belong to the endpoint
/// space-time estimate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LinearCondition {
    /// (3.2): 0 <= s2/d + 1/q2 <= s1/d + 1/q1 <= 1
    SumRange,
    /// (3.3): s2 <= s1
    WeightOrder,
    /// (3.4): r1 <= 1 if s1/d + 1/q1 = 1 or q1 = 1
    SourceSecondaryEndpoint,
    /// (3.5): r2 = inf if s2/d + 1/q2 = 0
    TargetSecondaryEndpoint,
    /// (3.6): r1 <= r2 if the sums coincide
    SecondaryOrder,
    /// (3.7): r_i = inf if q_i = inf
    InfinityPairing,
    /// (3.8'): strict sum ordering for the space-time estimate
    StrictSumRange,
    /// (3.19'): d/2 (1/q1 - 1/q2) + (s1 - s2)/2 = 1
    UnitScalingBalance,
}

impl fmt::Display for LinearCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self {
            LinearCondition::SumRange => "(3.2)",
            LinearCondition::WeightOrder => "(3.3)",
            LinearCondition::SourceSecondaryEndpoint => "(3.4)",
            LinearCondition::TargetSecondaryEndpoint => "(3.5)",
            LinearCondition::SecondaryOrder => "(3.6)",
            LinearCondition::InfinityPairing => "(3.7)",
            LinearCondition::StrictSumRange => "(3.8')",
            LinearCondition::UnitScalingBalance => "(3.19')",
        };
        write!(f, "{tag}")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EstimateAnswer {
    pub admissible: bool,
    /// Power of t in the operator bound; meaningful when admissible.
    pub decay_exponent: Rat,
    pub violated: Vec<LinearCondition>,
}

impl EstimateAnswer {
    pub fn decay_exponent_f64(&self) -> f64 {
        rat_to_f64(&self.decay_exponent)
    }
}

fn decay_exponent(q: &EstimateQuery) -> Rat {
    let d = rat_int(q.d as i64);
    let half = crate::exact::rat(1, 2);
    -(&d * &half) * (q.source.q.recip() - q.target.q.recip())
        - &half * (&q.source.s - &q.target.s)
}

/// Decide the smoothing estimate
/// `||e^{t Lap} f||_(q2,r2,s2) <= C t^exp ||f||_(q1,r1,s1)`,
/// reporting every violated hypothesis.
pub fn estimate_admissible(query: &EstimateQuery) -> EstimateAnswer {
    let one = Rat::one();
    let x1 = query.source.sum(query.d);
    let x2 = query.target.sum(query.d);
    let mut violated = Vec::new();

    if !(Rat::zero() <= x2 && x2 <= x1 && x1 <= one) {
        violated.push(LinearCondition::SumRange);
    }
    if query.target.s > query.source.s {
        violated.push(LinearCondition::WeightOrder);
    }
    let r_one = Exp::Finite(Rat::one());
    if (x1 == one || query.source.q == r_one) && query.source.r > r_one {
        violated.push(LinearCondition::SourceSecondaryEndpoint);
    }
    if x2.is_zero() && !query.target.r.is_inf() {
        violated.push(LinearCondition::TargetSecondaryEndpoint);
    }
    if x1 == x2 && query.source.r > query.target.r {
        violated.push(LinearCondition::SecondaryOrder);
    }
    if (query.source.q.is_inf() && !query.source.r.is_inf())
        || (query.target.q.is_inf() && !query.target.r.is_inf())
    {
        violated.push(LinearCondition::InfinityPairing);
    }

    EstimateAnswer {
        admissible: violated.is_empty(),
        decay_exponent: decay_exponent(query),
        violated,
    }
}

/// Decide the endpoint space-time estimate
/// `|| int_0^t e^{(t-tau) Lap} f(tau) dtau ||_(q2,inf,s2) <= C sup_tau ||f(tau)||_(q1,r1,s1)`.
/// Requires d >= 3 and a finite target q; the scaling balance forces a
/// time-uniform bound (decay exponent 0).
pub fn meyer_admissible(query: &EstimateQuery) -> Result<EstimateAnswer, ParamError> {
    if query.d < 3 {
        return Err(ParamError::Precondition(
            "space-time endpoint estimate requires d >= 3".into(),
        ));
    }
    if query.target.q.is_inf() {
        return Err(ParamError::Precondition(
            "space-time endpoint estimate requires q2 < inf".into(),
        ));
    }
    let one = Rat::one();
    let x1 = query.source.sum(query.d);
    let x2 = query.target.sum(query.d);
    let mut violated = Vec::new();

    if !(Rat::zero() < x2 && x2 < x1 && x1 <= one) {
        violated.push(LinearCondition::StrictSumRange);
    }
    if query.target.s > query.source.s {
        violated.push(LinearCondition::WeightOrder);
    }
    let d = rat_int(query.d as i64);
    let half = crate::exact::rat(1, 2);
    let balance = &d * &half * (query.source.q.recip() - query.target.q.recip())
        + &half * (&query.source.s - &query.target.s);
    if balance != one {
        violated.push(LinearCondition::UnitScalingBalance);
    }
    let r_one = Exp::Finite(Rat::one());
    if (x1 == one || query.source.q == r_one) && query.source.r > r_one {
        violated.push(LinearCondition::SourceSecondaryEndpoint);
    }
    if query.source.q.is_inf() && !query.source.r.is_inf() {
        violated.push(LinearCondition::InfinityPairing);
    }

    Ok(EstimateAnswer {
        admissible: violated.is_empty(),
        decay_exponent: Rat::zero(),
        violated,
    })
}

/// Constants consumed by the Picard solver.
#[derive(Clone, Debug, PartialEq)]
pub struct SolverConstants {
    /// Time gain `t^delta` of the nonlinear estimate.
    pub delta: Rat,
    /// Kato weight exponent `beta = d/2 (1/q - 1/q~)`.
    pub beta: Rat,
    /// Open window for `1/q~` (lo, hi); empty when lo >= hi.
    pub window: (Rat, Rat),
    /// Whether the supplied q~ falls inside the window.
    pub q_tilde_admissible: bool,
}

impl SolverConstants {
    pub fn window_is_empty(&self) -> bool {
        self.window.0 >= self.window.1
    }
}

/// delta = d(alpha-1)/2 [1/q_c - (s/d + 1/q)], beta = d/2 (1/q - 1/q~), and
/// the admissible window
/// `max{0, 1/q - 1/q*(0), 1/q - 2/(d alpha*)} < 1/q~ < 1/q`
/// for the auxiliary exponent of the regular-solution construction
/// (d >= 3 so that alpha* is finite).
pub fn solver_constants(
    p: &ProblemParams,
    sp: &SpaceParams,
    q_tilde: &Exp,
) -> Result<SolverConstants, ParamError> {
    let ce = super::critical_exponents(p, sp)?;
    let d = p.d_rat();
    let half = crate::exact::rat(1, 2);
    let am1 = &p.alpha - Rat::one();
    let x = sp.scaling_sum(p.d);
    let delta = &d * &am1 * &half * (ce.q_c.recip() - &x);
    let inv_q = sp.q.recip();
    let inv_qt = q_tilde.recip();
    let beta = &d * &half * (&inv_q - &inv_qt);

    let alpha_star = match &ce.alpha_star {
        Exp::Finite(a) => a.clone(),
        Exp::Inf => {
            return Err(ParamError::Precondition(
                "auxiliary window requires d >= 3".into(),
            ))
        }
    };
    // q*(0) evaluates q* at gamma = 0: d/(d-2).
    let q_star0 = &d / (&d - rat_int(2));
    let lo = [
        Rat::zero(),
        &inv_q - q_star0.recip(),
        &inv_q - rat_int(2) / (&d * &alpha_star),
    ]
    .into_iter()
    .max()
    .expect("nonempty");
    let window = (lo, inv_q.clone());
    let q_tilde_admissible = !window.0.ge(&window.1) && inv_qt > window.0 && inv_qt < window.1;

    Ok(SolverConstants {
        delta,
        beta,
        window,
        q_tilde_admissible,
    })
}
