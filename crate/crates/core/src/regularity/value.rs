use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

pub(crate) fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `ξ = (ξ₀, ξ₁)`, exact rationals, not both zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    pub xi0: BigRational,
    pub xi1: BigRational,
}

impl Weight {
    pub fn new(xi0: BigRational, xi1: BigRational) -> Result<Self> {
        if xi0.is_zero() && xi1.is_zero() {
            return Err(Error::Input("a weight needs a nonzero component".into()));
        }
        Ok(Weight { xi0, xi1 })
    }

    pub fn ints(xi0: i64, xi1: i64) -> Self {
        Weight::new(q(xi0), q(xi1)).expect("nonzero weight")
    }

    /// `(1, ξ₁)`.
    pub fn one(xi1: BigRational) -> Self {
        Weight { xi0: BigRational::one(), xi1 }
    }

    /// `(1, a/b)`.
    pub fn frac(a: i64, b: i64) -> Self {
        Weight::one(BigRational::new(BigInt::from(a), BigInt::from(b)))
    }

    pub fn classic() -> Self {
        Weight::ints(1, 1)
    }

    pub fn pdim() -> Self {
        Weight::ints(0, -1)
    }

    pub fn sup() -> Self {
        Weight::ints(0, 1)
    }

    /// `ξ₀·m + ξ₁·n`.
    pub fn eval(&self, m: i64, n: i64) -> BigRational {
        &self.xi0 * q(m) + &self.xi1 * q(n)
    }

    pub fn scaled(&self, lambda: &BigRational) -> Weight {
        Weight { xi0: &self.xi0 * lambda, xi1: &self.xi1 * lambda }
    }

    /// `ξ₁/ξ₀`, for the `ξ = (1, ξ)` convention.
    pub fn normalized(&self) -> Option<BigRational> {
        if self.xi0.is_positive() {
            Some(&self.xi1 / &self.xi0)
        } else {
            None
        }
    }

    /// `"1,3/2"`, or one of `classic`, `pdim`, `sup`.
    pub fn parse(text: &str) -> Result<Self> {
        match text.trim() {
            "classic" => return Ok(Weight::classic()),
            "pdim" => return Ok(Weight::pdim()),
            "sup" => return Ok(Weight::sup()),
            _ => {}
        }
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Input(format!("weight `{text}` should be two rationals separated by a comma")));
        }
        let parse = |s: &str| {
            s.trim()
                .parse::<BigRational>()
                .map_err(|_| Error::Input(format!("`{}` is not a rational number", s.trim())))
        };
        Weight::new(parse(parts[0])?, parse(parts[1])?)
    }

    pub fn to_json(&self) -> Value {
        json!([self.xi0.to_string(), self.xi1.to_string()])
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.xi0, self.xi1)
    }
}

/// `−∞`, a rational, or `+∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Ext {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl Ext {
    pub fn int(n: i64) -> Self {
        Ext::Finite(q(n))
    }

    pub fn finite(&self) -> Option<&BigRational> {
        match self {
            Ext::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Ext::Finite(_))
    }

    pub fn add(&self, other: &Ext) -> Option<Ext> {
        match (self, other) {
            (Ext::Finite(a), Ext::Finite(b)) => Some(Ext::Finite(a + b)),
            (Ext::NegInf, Ext::PosInf) | (Ext::PosInf, Ext::NegInf) => None,
            (Ext::NegInf, _) | (_, Ext::NegInf) => Some(Ext::NegInf),
            _ => Some(Ext::PosInf),
        }
    }

    pub fn neg(&self) -> Ext {
        match self {
            Ext::NegInf => Ext::PosInf,
            Ext::PosInf => Ext::NegInf,
            Ext::Finite(v) => Ext::Finite(-v),
        }
    }

    /// Multiplication by a positive rational.
    pub fn scale(&self, lambda: &BigRational) -> Ext {
        match self {
            Ext::Finite(v) => Ext::Finite(v * lambda),
            other => other.clone(),
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Ext::NegInf => "-inf".into(),
            Ext::PosInf => "+inf".into(),
            Ext::Finite(v) => v.to_string(),
        }
    }
}

impl Ord for Ext {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Ext::Finite(a), Ext::Finite(b)) => a.cmp(b),
            (a, b) => rank(a).cmp(&rank(b)),
        }
    }
}

fn rank(e: &Ext) -> u8 {
    match e {
        Ext::NegInf => 0,
        Ext::Finite(_) => 1,
        Ext::PosInf => 2,
    }
}

impl PartialOrd for Ext {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Ext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Status {
    Exact,
    /// The true value is at least the reported one.
    ObservedLowerBound,
    /// The true value is at most the reported one.
    UpperBound,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Exact => "exact",
            Status::ObservedLowerBound => "observed_lower_bound",
            Status::UpperBound => "upper_bound",
        }
    }

    /// Status of a sum or max of values that are each bounded the same way.
    pub fn combine(self, other: Status) -> Status {
        match (self, other) {
            (Status::Exact, s) | (s, Status::Exact) => s,
            (a, b) if a == b => a,
            _ => Status::ObservedLowerBound,
        }
    }
}

/// A value with its certification status and the window it came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExtendedValue {
    pub value: Ext,
    pub status: Status,
    /// `(hmax, dmax)` of the data used; `None` for closed forms.
    pub window: Option<(i64, i64)>,
}

impl ExtendedValue {
    pub fn exact(value: Ext) -> Self {
        ExtendedValue { value, status: Status::Exact, window: None }
    }

    pub fn with_window(mut self, window: Option<(i64, i64)>) -> Self {
        self.window = window;
        self
    }

    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    pub fn to_json(&self) -> Value {
        json!({
            "value": self.value.to_text(),
            "status": self.status.name(),
            "window": self.window.map(|(h, d)| json!({"hmax": h, "dmax": d})),
        })
    }
}

impl fmt::Display for ExtendedValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({})", self.value, self.status.name())?;
        if let Some((h, d)) = self.window {
            write!(f, " [hmax = {h}, dmax = {d}]")?;
        }
        Ok(())
    }
}
