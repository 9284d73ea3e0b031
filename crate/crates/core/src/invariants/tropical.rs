use serde::Serialize;

use super::Specialized;
use crate::numkernel::{Rational, Valuation};

/// A point of tropical weighted projective space: valuations modulo
/// shifts by multiples of the weight vector.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TropicalPoint {
    pub labels: Vec<String>,
    pub valuations: Vec<Valuation>,
    pub weights: Vec<u32>,
}

impl TropicalPoint {
    /// Representative with `min v_i / w_i = 0` over the finite entries.
    pub fn canonical(&self) -> Vec<Valuation> {
        let lambda = self
            .valuations
            .iter()
            .zip(&self.weights)
            .filter_map(|(v, &w)| v.finite().map(|q| q / Rational::from_integer(w.into())))
            .min();
        match lambda {
            None => self.valuations.clone(),
            Some(l) => self
                .valuations
                .iter()
                .zip(&self.weights)
                .map(|(v, &w)| v.shift(&-(&l * Rational::from_integer(w.into()))))
                .collect(),
        }
    }
}

/// Valuations paired with the invariant degrees as weights.
pub fn tropicalize(s: &Specialized) -> TropicalPoint {
    TropicalPoint {
        labels: s.names.iter().map(|n| n.to_string()).collect(),
        valuations: s.valuations.clone(),
        weights: s.degrees.clone(),
    }
}
