//! Machine-readable outcome of one identity check.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::poly::Poly;
use crate::rat::{self, Rat};

/// One NDJSON line of `verify` output.
///
/// Exact identities pass iff `residual == "0"`; floating ones pass iff
/// `|residual| < tol`. `forms` holds intermediate expressions of the same
/// identity (e.g. a middle line of a chained display); an exact report
/// only passes if every form equals `lhs` as well.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub params: BTreeMap<String, String>,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub forms: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

pub type Params = BTreeMap<String, String>;

pub trait ParamValue {
    fn param_text(&self) -> String;
}

impl ParamValue for Rat {
    fn param_text(&self) -> String {
        rat::format(self)
    }
}

impl ParamValue for &Rat {
    fn param_text(&self) -> String {
        rat::format(self)
    }
}

macro_rules! int_param {
    ($($t:ty),*) => {$(
        impl ParamValue for $t {
            fn param_text(&self) -> String {
                self.to_string()
            }
        }
    )*};
}
int_param!(i64, usize, u32, i32);

impl ParamValue for f64 {
    fn param_text(&self) -> String {
        format!("{self}")
    }
}

impl ParamValue for &str {
    fn param_text(&self) -> String {
        (*self).to_string()
    }
}

/// `params! { "m" => m, "beta" => &beta }`
#[macro_export]
macro_rules! params {
    ($($k:expr => $v:expr),* $(,)?) => {{
        #[allow(unused_mut)]
        let mut p = $crate::report::Params::new();
        $( p.insert($k.to_string(), $crate::report::ParamValue::param_text(&$v)); )*
        p
    }};
}

impl VerificationReport {
    pub fn exact(id: &str, params: Params, lhs: &Rat, rhs: &Rat) -> Self {
        let residual = lhs - rhs;
        VerificationReport {
            identity_id: id.to_string(),
            params,
            lhs: rat::format(lhs),
            rhs: rat::format(rhs),
            residual: rat::format(&residual),
            pass: residual.is_zero(),
            forms: BTreeMap::new(),
            note: None,
        }
    }

    /// Polynomial identity; sides are printed in descending powers and the
    /// residual is the difference polynomial.
    pub fn poly(id: &str, params: Params, lhs: &Poly, rhs: &Poly) -> Self {
        let residual = lhs - rhs;
        VerificationReport {
            identity_id: id.to_string(),
            params,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            residual: residual.to_string(),
            pass: residual.is_zero(),
            forms: BTreeMap::new(),
            note: None,
        }
    }

    /// Adds an intermediate exact form; the report fails unless it equals `lhs`.
    pub fn with_form(mut self, name: &str, value: &Rat) -> Self {
        let text = rat::format(value);
        if text != self.lhs {
            self.pass = false;
        }
        self.forms.insert(name.to_string(), text);
        self
    }

    pub fn approx(id: &str, params: Params, lhs: f64, rhs: f64, tol: f64) -> Self {
        let residual = lhs - rhs;
        VerificationReport {
            identity_id: id.to_string(),
            params,
            lhs: format!("{lhs}"),
            rhs: format!("{rhs}"),
            residual: format!("{residual}"),
            pass: residual.abs() < tol,
            forms: BTreeMap::new(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
