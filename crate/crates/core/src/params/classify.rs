//! Regime classification and uniqueness verdicts.

use super::{critical_exponents, ParamError, ProblemParams, SpaceParams};
use crate::exact::{rat_int, rat_to_f64, Exp, Rat};
use num_traits::{One, Zero};
use serde::Serialize;
use std::fmt;

/// Position of (q, s) relative to the two critical thresholds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Regime {
    DoubleSubcritical,
    SingleCriticalI,
    SingleCriticalII,
    DoubleCritical,
    ScaleSupercritical,
    OutsideStandingAssumptions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    UnconditionalUniqueness,
    NonUniqueness,
    SufficientConditionOnly,
    UniquenessCriterion,
    IllPosedNonlinearity,
    Open,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TimeRegularity {
    /// `L^inf(0,T; X)`
    BoundedInTime,
    /// `C([0,T]; X)`
    ContinuousInTime,
}

/// The space in which the cited result operates.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolutionSpace {
    pub time: TimeRegularity,
    /// `true` when the result holds in the completion of smooth compactly
    /// supported functions rather than the full space (the r = inf variant).
    pub completion: bool,
    pub q: String,
    pub r: String,
    pub s: String,
}

impl SolutionSpace {
    fn new(time: TimeRegularity, completion: bool, sp: &SpaceParams) -> Self {
        SolutionSpace {
            time,
            completion,
            q: format!("{}", sp.q),
            r: format!("{}", sp.r),
            s: crate::exact::fmt_rat(&sp.s),
        }
    }
}

impl fmt::Display for SolutionSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let space = if self.completion {
            format!("cl-L^({},{})_({})", self.q, self.r, self.s)
        } else {
            format!("L^({},{})_({})", self.q, self.r, self.s)
        };
        match self.time {
            TimeRegularity::BoundedInTime => write!(f, "Linf(0,T; {space})"),
            TimeRegularity::ContinuousInTime => write!(f, "C([0,T]; {space})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegimeVerdict {
    pub regime: Regime,
    pub verdict: Verdict,
    pub solution_space: Option<SolutionSpace>,
    /// Identifier of the result the verdict is read from, e.g. "Thm 1.2(2)".
    pub citation: String,
    /// One-line explanation of the deciding inequality.
    pub note: String,
}

impl fmt::Display for RegimeVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} / {:?} / {}", self.regime, self.verdict, self.citation)?;
        if let Some(space) = &self.solution_space {
            write!(f, " in {space}")?;
        }
        Ok(())
    }
}

fn open(regime: Regime, note: impl Into<String>) -> RegimeVerdict {
    RegimeVerdict {
        regime,
        verdict: Verdict::Open,
        solution_space: None,
        citation: "-".into(),
        note: note.into(),
    }
}

/// Standing assumptions `alpha <= q <= inf`, `gamma/(alpha-1) <= s < d`,
/// `alpha > max{1, 1 + gamma/d}` under which the uniqueness theorems operate.
fn standing_assumptions_hold(p: &ProblemParams, sp: &SpaceParams) -> Result<(), String> {
    let am1 = &p.alpha - Rat::one();
    if p.alpha <= Rat::one() + &p.gamma / p.d_rat() {
        return Err("alpha <= 1 + gamma/d".into());
    }
    if sp.q < Exp::Finite(p.alpha.clone()) {
        return Err("q < alpha".into());
    }
    if sp.s < &p.gamma / &am1 {
        return Err("s < gamma/(alpha-1)".into());
    }
    if sp.s >= p.d_rat() {
        return Err("s >= d".into());
    }
    Ok(())
}

/// Classify (d, gamma, alpha, q, r, s) and return the sharpest available
/// uniqueness verdict with its citation. Every input maps to a verdict; when
/// no result applies the verdict is `Open`, never an extrapolation.
///
/// `tol` enters only through the single irrational boundary
/// `gamma <= sqrt(3) - 1` of the supercritical window at d = 3.
pub fn classify(p: &ProblemParams, sp: &SpaceParams, tol: f64) -> RegimeVerdict {
    // Critically singular branch d = 1, gamma = -1: handled before the
    // Hardy-admissibility gate.
    if p.d == 1 && p.gamma == rat_int(-1) {
        return classify_d1_gamma_m1(p, sp);
    }
    if !p.hardy_admissible() {
        return open(
            Regime::OutsideStandingAssumptions,
            "gamma <= -min{2,d}: outside the Hardy-admissible range",
        );
    }
    if p.alpha <= Rat::one() + &p.gamma / p.d_rat() {
        return open(
            Regime::OutsideStandingAssumptions,
            "alpha <= 1 + gamma/d: nonlinearity below the admissible range",
        );
    }

    let ce = critical_exponents(p, sp).expect("hardy-admissible parameters define q_c and Q_c");
    let x = sp.scaling_sum(p.d);
    let inv_qc = ce.q_c.recip();
    let inv_capqc = ce.cap_q_c.recip();

    // Scale-supercritical branch: the self-similar non-uniqueness result has
    // its own hypothesis set and does not require the standing assumptions.
    if x > inv_qc {
        return classify_supercritical(p, sp, &x, tol);
    }

    if let Err(why) = standing_assumptions_hold(p, sp) {
        return open(Regime::OutsideStandingAssumptions, why);
    }

    let alpha_exp = Exp::Finite(p.alpha.clone());

    if x == inv_qc && x == inv_capqc {
        // Double critical: alpha = alpha_star, q_c = Q_c.
        let note = format!(
            "s/d + 1/q = 1/q_c = 1/Q_c = {}",
            crate::exact::fmt_rat(&x)
        );
        if sp.q.is_inf() {
            return open(Regime::DoubleCritical, "q = inf not covered at double criticality");
        }
        let astar_m1 = match &ce.alpha_star {
            Exp::Finite(a) => a - Rat::one(),
            Exp::Inf => unreachable!("double criticality forces d >= 3"),
        };
        if sp.r <= Exp::Finite(astar_m1.clone()) {
            RegimeVerdict {
                regime: Regime::DoubleCritical,
                verdict: Verdict::UnconditionalUniqueness,
                solution_space: Some(SolutionSpace::new(
                    TimeRegularity::ContinuousInTime,
                    false,
                    sp,
                )),
                citation: "Thm 1.2(2)".into(),
                note: format!("{note}; r <= alpha*-1"),
            }
        } else {
            RegimeVerdict {
                regime: Regime::DoubleCritical,
                verdict: Verdict::NonUniqueness,
                solution_space: Some(SolutionSpace::new(
                    TimeRegularity::ContinuousInTime,
                    sp.r.is_inf(),
                    sp,
                )),
                citation: "Thm 1.5".into(),
                note: format!("{note}; r > alpha*-1: regular and singular solutions coexist"),
            }
        }
    } else if x == inv_capqc && x < inv_qc {
        // Single critical I.
        if sp.q.is_inf() {
            return open(Regime::SingleCriticalI, "q = inf not covered in single critical I");
        }
        if sp.r <= alpha_exp {
            RegimeVerdict {
                regime: Regime::SingleCriticalI,
                verdict: Verdict::UnconditionalUniqueness,
                solution_space: Some(SolutionSpace::new(TimeRegularity::BoundedInTime, false, sp)),
                citation: "Thm 1.1(2)".into(),
                note: "s/d + 1/q = 1/Q_c < 1/q_c and r <= alpha".into(),
            }
        } else {
            RegimeVerdict {
                regime: Regime::SingleCriticalI,
                verdict: Verdict::SufficientConditionOnly,
                solution_space: Some(SolutionSpace::new(TimeRegularity::BoundedInTime, false, sp)),
                citation: "Prop 1.4".into(),
                note: "r > alpha: uniqueness known only under the auxiliary Duhamel condition"
                    .into(),
            }
        }
    } else if x == inv_qc && x < inv_capqc {
        // Single critical II.
        if p.d < 3 || sp.q.is_inf() {
            return open(
                Regime::SingleCriticalII,
                "scale-critical result requires d >= 3 and q < inf",
            );
        }
        RegimeVerdict {
            regime: Regime::SingleCriticalII,
            verdict: Verdict::UnconditionalUniqueness,
            solution_space: Some(SolutionSpace::new(
                TimeRegularity::ContinuousInTime,
                sp.r.is_inf(),
                sp,
            )),
            citation: "Thm 1.2(1)".into(),
            note: "s/d + 1/q = 1/q_c < 1/Q_c".into(),
        }
    } else if x < inv_qc && x < inv_capqc {
        // Double subcritical.
        if x <= Rat::zero() {
            return open(
                Regime::DoubleSubcritical,
                "s/d + 1/q <= 0: below the subcritical window",
            );
        }
        if sp.q == alpha_exp && sp.r > alpha_exp {
            return open(
                Regime::DoubleSubcritical,
                "q = alpha with r > alpha: not covered",
            );
        }
        RegimeVerdict {
            regime: Regime::DoubleSubcritical,
            verdict: Verdict::UnconditionalUniqueness,
            solution_space: Some(SolutionSpace::new(TimeRegularity::BoundedInTime, false, sp)),
            citation: "Thm 1.1(1)".into(),
            note: "0 < s/d + 1/q < min{1/q_c, 1/Q_c}".into(),
        }
    } else {
        // 1/Q_c < x < 1/q_c (possible only when alpha < alpha_star): the
        // nonlinearity is not locally integrable on the whole space, so the
        // Duhamel term is not well-defined for generic data.
        RegimeVerdict {
            regime: Regime::OutsideStandingAssumptions,
            verdict: Verdict::IllPosedNonlinearity,
            solution_space: None,
            citation: "-".into(),
            note: "1/Q_c < s/d + 1/q < 1/q_c: |x|^gamma |u|^(alpha-1) u need not be locally integrable"
                .into(),
        }
    }
}

fn classify_supercritical(
    p: &ProblemParams,
    sp: &SpaceParams,
    x: &Rat,
    tol: f64,
) -> RegimeVerdict {
    let regime = Regime::ScaleSupercritical;
    if p.d < 3 {
        return open(regime, "supercritical non-uniqueness requires d >= 3");
    }
    // gamma <= sqrt(3)-1 (d=3) or gamma <= 0 (d>=4).
    let gamma_ok = if p.d == 3 {
        rat_to_f64(&p.gamma) <= 3.0_f64.sqrt() - 1.0 + tol
    } else {
        p.gamma <= Rat::zero()
    };
    if !gamma_ok {
        return open(regime, "gamma outside the supercritical window");
    }
    let ce = critical_exponents(p, sp).expect("q_c defined");
    let af = Exp::Finite(ce.alpha_fujita.clone());
    let alpha_e = Exp::Finite(p.alpha.clone());
    if !(alpha_e > af && Exp::Finite(p.alpha.clone()) < ce.alpha_hardy_sobolev) {
        return open(regime, "alpha outside (alpha_F, alpha_HS)");
    }
    if sp.q <= Exp::Finite(Rat::one()) {
        return open(regime, "supercritical result needs q > 1");
    }
    if !(x < &Rat::one()) {
        return open(regime, "s/d + 1/q >= 1");
    }
    RegimeVerdict {
        regime,
        verdict: Verdict::NonUniqueness,
        solution_space: Some(SolutionSpace::new(
            TimeRegularity::ContinuousInTime,
            false,
            sp,
        )),
        citation: "Prop 1.7".into(),
        note: "1/q_c < s/d + 1/q < 1: a global positive solution emanates from zero data".into(),
    }
}

/// d = 1, gamma = -1: the critically singular case, decided through the
/// double-endpoint linear estimate. Requires alpha <= q < inf and
/// s/d + 1/q = 0.
fn classify_d1_gamma_m1(p: &ProblemParams, sp: &SpaceParams) -> RegimeVerdict {
    let regime = Regime::OutsideStandingAssumptions;
    let x = sp.scaling_sum(1);
    if !x.is_zero() {
        return open(regime, "d=1, gamma=-1 results require s + 1/q = 0");
    }
    if sp.q.is_inf() || sp.q < Exp::Finite(p.alpha.clone()) {
        return open(regime, "d=1, gamma=-1 results require alpha <= q < inf");
    }
    let am1 = &p.alpha - Rat::one();
    if sp.r <= Exp::Finite(am1.clone()) {
        RegimeVerdict {
            regime,
            verdict: Verdict::UnconditionalUniqueness,
            solution_space: Some(SolutionSpace::new(TimeRegularity::BoundedInTime, false, sp)),
            citation: "Thm 8.1(i)".into(),
            note: "d=1, gamma=-1, r <= alpha-1".into(),
        }
    } else {
        RegimeVerdict {
            regime,
            verdict: Verdict::UniquenessCriterion,
            solution_space: Some(SolutionSpace::new(TimeRegularity::BoundedInTime, false, sp)),
            citation: "Thm 8.1(ii)".into(),
            note: "d=1, gamma=-1, r > alpha-1: uniqueness iff the Duhamel terms lie in L^(q,alpha-1)_s"
                .into(),
        }
    }
}

/// Exterior-domain mode (unit-ball complement, Dirichlet boundary): the
/// origin is excluded, so the thresholds are the unweighted
/// `q_c(0) = d(alpha-1)/2` and `Q_c(0) = alpha`, with s constrained to the
/// window `-d/q < s < d(1 - alpha/q)`, `gamma/(alpha-1) <= s`. Verdict-only:
/// no exterior numerics are attached.
pub fn classify_exterior(p: &ProblemParams, sp: &SpaceParams) -> RegimeVerdict {
    let d = p.d_rat();
    let am1 = &p.alpha - Rat::one();
    let q_c0 = &d * &am1 / rat_int(2);
    let cap_q_c0 = p.alpha.clone();

    if sp.q < Exp::Finite(p.alpha.clone()) {
        return open(Regime::OutsideStandingAssumptions, "exterior mode requires alpha <= q");
    }
    let inv_q = sp.q.recip();
    let s_lo = -&d * &inv_q;
    let s_hi = &d * (Rat::one() - &p.alpha * &inv_q);
    if !(sp.s > s_lo && sp.s < s_hi) {
        return open(
            Regime::OutsideStandingAssumptions,
            "exterior mode requires -d/q < s < d(1 - alpha/q)",
        );
    }
    if sp.s < &p.gamma / &am1 {
        return open(Regime::OutsideStandingAssumptions, "exterior mode requires gamma/(alpha-1) <= s");
    }

    let q_c0_e = Exp::Finite(q_c0.clone());
    let cap_q_c0_e = Exp::Finite(cap_q_c0.clone());
    let min_crit = if q_c0 <= cap_q_c0 { q_c0_e.clone() } else { cap_q_c0_e.clone() };
    let am1_e = Exp::Finite(am1.clone());
    let alpha_e = Exp::Finite(p.alpha.clone());

    if sp.q > min_crit {
        if sp.r.is_inf() {
            return RegimeVerdict {
                regime: Regime::DoubleSubcritical,
                verdict: Verdict::UnconditionalUniqueness,
                solution_space: Some(SolutionSpace::new(TimeRegularity::BoundedInTime, false, sp)),
                citation: "Prop 8.2(i)".into(),
                note: "exterior: q > min{q_c(0), Q_c(0)}, r = inf".into(),
            };
        }
        return open(Regime::DoubleSubcritical, "exterior subcritical covered only for r = inf");
    }
    if sp.q == cap_q_c0_e && q_c0 < cap_q_c0 {
        if sp.r == alpha_e {
            return RegimeVerdict {
                regime: Regime::SingleCriticalI,
                verdict: Verdict::UnconditionalUniqueness,
                solution_space: Some(SolutionSpace::new(TimeRegularity::BoundedInTime, false, sp)),
                citation: "Prop 8.2(i)".into(),
                note: "exterior: q = Q_c(0) > q_c(0), r = alpha".into(),
            };
        }
        return open(Regime::SingleCriticalI, "exterior single critical I covered only for r = alpha");
    }
    if sp.q == q_c0_e && cap_q_c0 < q_c0 {
        if sp.r.is_inf() {
            return RegimeVerdict {
                regime: Regime::SingleCriticalII,
                verdict: Verdict::UnconditionalUniqueness,
                solution_space: Some(SolutionSpace::new(
                    TimeRegularity::ContinuousInTime,
                    false,
                    sp,
                )),
                citation: "Prop 8.2(ii)".into(),
                note: "exterior: q = q_c(0) > Q_c(0), r = inf".into(),
            };
        }
        return open(Regime::SingleCriticalII, "exterior single critical II covered only for r = inf");
    }
    if sp.q == q_c0_e && q_c0 == cap_q_c0 {
        if sp.r == am1_e {
            return RegimeVerdict {
                regime: Regime::DoubleCritical,
                verdict: Verdict::UnconditionalUniqueness,
                solution_space: Some(SolutionSpace::new(
                    TimeRegularity::ContinuousInTime,
                    false,
                    sp,
                )),
                citation: "Prop 8.2(ii)".into(),
                note: "exterior: q = q_c(0) = Q_c(0), r = alpha-1".into(),
            };
        }
        return open(Regime::DoubleCritical, "exterior double critical covered only for r = alpha-1");
    }
    open(Regime::ScaleSupercritical, "exterior supercritical range: no result")
}
