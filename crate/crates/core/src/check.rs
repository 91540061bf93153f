//! Outcome records for theorem and lemma checks.

use std::fmt;

/// Result of a single check.
///
/// `PreconditionUnmet` means the hypotheses of the statement did not hold for
/// this input; it is never a falsification.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Pass,
    Fail,
    PreconditionUnmet,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PreconditionUnmet => "precondition-unmet",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A named tuple of element indices, e.g. `(x=0,a=1,b=2,y=0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Witness(pub Vec<(String, usize)>);

impl Witness {
    pub fn new<'a, I: IntoIterator<Item = (&'a str, usize)>>(fields: I) -> Self {
        Witness(
            fields
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect(),
        )
    }

    /// Unnamed values in order.
    pub fn values(&self) -> Vec<usize> {
        self.0.iter().map(|(_, v)| *v).collect()
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.0.iter().find(|(k, _)| k == name).map(|(_, v)| *v)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, (k, v)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

/// One labelled stage of a multi-step check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub check: String,
    pub status: Status,
    pub witness: Option<Witness>,
    pub detail: String,
    pub stages: Vec<Stage>,
}

impl CheckReport {
    pub fn new(check: impl Into<String>) -> Self {
        CheckReport {
            check: check.into(),
            status: Status::Pass,
            witness: None,
            detail: String::new(),
            stages: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn failed(&self) -> bool {
        self.status == Status::Fail
    }

    /// Records a stage outcome; the first failing stage sets the status,
    /// witness and detail.
    pub(crate) fn stage(
        &mut self,
        name: &'static str,
        passed: bool,
        witness: impl FnOnce() -> Option<Witness>,
        detail: impl FnOnce() -> String,
    ) -> bool {
        self.stages.push(Stage { name, passed });
        if !passed && self.status == Status::Pass {
            self.status = Status::Fail;
            self.witness = witness();
            self.detail = format!("{name}: {}", detail());
        }
        passed
    }

    pub(crate) fn unmet(mut self, witness: Option<Witness>, detail: impl Into<String>) -> Self {
        self.status = Status::PreconditionUnmet;
        self.witness = witness;
        self.detail = detail.into();
        self
    }

    pub(crate) fn with_detail(mut self, detail: impl Into<String>) -> Self {
        if self.status == Status::Pass {
            self.detail = detail.into();
        }
        self
    }

    /// Structured-text record: `check=.. status=.. witness=.. detail=".."`.
    pub fn to_record(&self) -> String {
        format!(
            "check={} status={} witness={} detail={:?}",
            self.check,
            self.status,
            self.witness
                .as_ref()
                .map_or_else(|| "-".to_string(), Witness::to_string),
            self.detail
        )
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " {w}")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}
