//! Structured verdicts with independently checkable counterexamples.

use serde::Serialize;

use crate::ring::{Elem, FiniteRing};

/// An element reference that survives serialization: canonical index plus
/// the owning ring's label.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WElem {
    pub index: usize,
    pub label: String,
}

impl WElem {
    pub fn new(ring: &FiniteRing, e: Elem) -> Self {
        WElem {
            index: e.index(),
            label: ring.label(e).to_string(),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct WIdeal {
    pub generators: Vec<WElem>,
    pub elements: Vec<usize>,
}

/// A counterexample attached to a failed verdict. Indices refer to the ring
/// the check ran on (factor witnesses are lifted to the host ring, with the
/// factor idempotent recorded).
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// Two non-units whose sum is a unit (ring is not local).
    NonUnitSum { a: WElem, b: WElem, sum: WElem },
    /// A pair breaking the local Gaussian pair criterion. `clause` is 1 for
    /// "(a,b)^2 is neither (a^2) nor (b^2)" and 2 for the annihilation
    /// clause. The three ideals are recorded by element index.
    GaussianPair {
        a: WElem,
        b: WElem,
        clause: u8,
        factor_idempotent: Option<WElem>,
        pair_square: Vec<usize>,
        a_square: Vec<usize>,
        b_square: Vec<usize>,
    },
    /// Two incomparable principal ideals (ring is not a chain ring).
    IncomparablePrincipals {
        a: WElem,
        b: WElem,
        factor_idempotent: Option<WElem>,
    },
    /// A triple of ideals breaking lattice distributivity.
    Distributivity {
        i: WIdeal,
        k: WIdeal,
        l: WIdeal,
        lhs: Vec<usize>,
        rhs: Vec<usize>,
    },
    /// A two-generated regular ideal that failed to be invertible.
    NonInvertibleIdeal { a: WElem, b: WElem },
    /// An element that is neither a unit, nor zero, nor a zero-divisor.
    NotUnitOrZeroDivisor { elem: WElem },
    /// A polynomial pair with c(fg) ≠ c(f)c(g); coefficients are listed in
    /// ascending degree.
    ContentPair {
        f: Vec<WElem>,
        g: Vec<WElem>,
        content_fg: Vec<usize>,
        content_f_times_g: Vec<usize>,
    },
    Note { text: String },
}

impl Witness {
    pub fn summary(&self) -> String {
        match self {
            Witness::NonUnitSum { a, b, sum } => format!(
                "non-units {} + {} = {} is a unit",
                a.label, b.label, sum.label
            ),
            Witness::GaussianPair { a, b, clause, .. } => format!(
                "pair ({}, {}) breaks clause {} of the local Gaussian criterion",
                a.label, b.label, clause
            ),
            Witness::IncomparablePrincipals { a, b, .. } => format!(
                "principal ideals ({}) and ({}) are incomparable",
                a.label, b.label
            ),
            Witness::Distributivity { i, k, l, .. } => {
                let gens = |w: &WIdeal| {
                    w.generators
                        .iter()
                        .map(|g| g.label.clone())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                format!(
                    "I=({}), K=({}), L=({}) break I∩(K+L) = (I∩K)+(I∩L)",
                    gens(i),
                    gens(k),
                    gens(l)
                )
            }
            Witness::NonInvertibleIdeal { a, b } => format!(
                "regular ideal ({}, {}) is not invertible",
                a.label, b.label
            ),
            Witness::NotUnitOrZeroDivisor { elem } => format!(
                "{} is neither a unit nor a zero-divisor",
                elem.label
            ),
            Witness::ContentPair { f, g, .. } => {
                let poly = |cs: &[WElem]| {
                    cs.iter()
                        .enumerate()
                        .map(|(k, c)| format!("({})*X^{k}", c.label))
                        .collect::<Vec<_>>()
                        .join(" + ")
                };
                format!("c(fg) ≠ c(f)c(g) for f = {}, g = {}", poly(f), poly(g))
            }
            Witness::Note { text } => text.clone(),
        }
    }
}

/// Outcome of a property check. A failed verdict always carries a witness.
#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub holds: bool,
    pub method: String,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn yes(method: impl Into<String>) -> Self {
        Verdict {
            holds: true,
            method: method.into(),
            witness: None,
        }
    }

    pub fn no(method: impl Into<String>, witness: Witness) -> Self {
        Verdict {
            holds: false,
            method: method.into(),
            witness: Some(witness),
        }
    }

    pub fn summary(&self) -> String {
        match (&self.holds, &self.witness) {
            (true, _) => "holds".to_string(),
            (false, Some(w)) => format!("fails: {}", w.summary()),
            (false, None) => "fails".to_string(),
        }
    }
}
