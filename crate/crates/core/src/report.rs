//! Pass/fail records shared by the verification routines.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One named identity or law, how many concrete instances were checked,
/// and the first failing instance if any.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub identity: String,
    pub status: Status,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    /// Largest observed residual, for floating-point checks.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
}

impl IdentityCheck {
    pub fn new(identity: impl Into<String>) -> Self {
        Self {
            identity: identity.into(),
            status: Status::Pass,
            cases: 0,
            witness: None,
            max_residual: None,
            tolerance: None,
        }
    }

    /// A floating-point check: each instance passes when its residual is at
    /// most `tolerance`.
    pub fn with_tolerance(identity: impl Into<String>, tolerance: f64) -> Self {
        Self { tolerance: Some(tolerance), max_residual: Some(0.0), ..Self::new(identity) }
    }

    /// Records a residual against the configured tolerance. NaN fails.
    pub fn record_residual(&mut self, residual: f64, witness: impl FnOnce() -> String) {
        let tol = self.tolerance.expect("record_residual needs a tolerance");
        let worst = self.max_residual.get_or_insert(0.0);
        if residual.is_nan() || residual > *worst {
            *worst = if residual.is_nan() { f64::INFINITY } else { residual };
        }
        self.record(residual <= tol, || format!("{} (residual {residual:e} > {tol:e})", witness()));
    }

    /// Records one instance; the first failure becomes the witness.
    pub fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = Some(witness());
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
#[serde(transparent)]
pub struct VerificationReport {
    pub checks: Vec<IdentityCheck>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(IdentityCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn push(&mut self, check: IdentityCheck) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.checks.extend(other.checks);
    }
}
