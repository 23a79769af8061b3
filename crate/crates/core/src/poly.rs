//! Dense univariate polynomials over a finite ring, used by the content
//! ideal machinery. Coefficients sit in ascending degree order; the vector
//! is empty for the zero polynomial and never ends in a zero.

use std::fmt;

use crate::ideal::{span, Ideal};
use crate::ring::{Elem, FiniteRing};

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: FiniteRing,
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(ring: &FiniteRing, coeffs: Vec<Elem>) -> Poly {
        let mut p = Poly {
            ring: ring.clone(),
            coeffs,
        };
        for c in &p.coeffs {
            assert!(c.ring_id() == p.ring.id(), "coefficient of a different ring");
        }
        p.normalize();
        p
    }

    pub fn zero(ring: &FiniteRing) -> Poly {
        Poly {
            ring: ring.clone(),
            coeffs: Vec::new(),
        }
    }

    fn normalize(&mut self) {
        while self
            .coeffs
            .last()
            .is_some_and(|&c| self.ring.is_zero(c))
        {
            self.coeffs.pop();
        }
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly) -> Poly {
        assert!(self.ring == other.ring, "polynomials over different rings");
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.ring.zero();
        let coeffs = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or(zero);
                let b = other.coeffs.get(k).copied().unwrap_or(zero);
                self.ring.add(a, b)
            })
            .collect();
        Poly::new(&self.ring, coeffs)
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        assert!(self.ring == other.ring, "polynomials over different rings");
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.ring);
        }
        let mut coeffs = vec![self.ring.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = self.ring.add(coeffs[i + j], self.ring.mul(a, b));
            }
        }
        Poly::new(&self.ring, coeffs)
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, &c)| format!("({})*X^{k}", self.ring.label(c)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({})", self.render())
    }
}

/// The content ideal: the span of the coefficients.
pub fn content(p: &Poly) -> Ideal {
    span(p.ring(), p.coeffs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{make_monomial_quotient, make_zmod};

    #[test]
    fn content_examples() {
        let z4 = make_zmod(4).unwrap();
        // 2X + 2 over Z/4 has content (2)
        let p = Poly::new(&z4, vec![z4.elem(2), z4.elem(2)]);
        assert_eq!(content(&p).sorted_indices(), vec![0, 2]);
        assert!(content(&Poly::zero(&z4)).is_zero());

        let f2xy = make_monomial_quotient(2, &["x", "y"], &[2, 2], &[]).unwrap();
        let x = f2xy.by_label("x").unwrap();
        let y = f2xy.by_label("y").unwrap();
        // xX + y has content (x, y), the 8-element maximal ideal
        let q = Poly::new(&f2xy, vec![y, x]);
        assert_eq!(content(&q).len(), 8);
    }

    #[test]
    fn normalization_and_arithmetic() {
        let z4 = make_zmod(4).unwrap();
        let p = Poly::new(&z4, vec![z4.elem(1), z4.elem(0), z4.elem(0)]);
        assert_eq!(p.degree(), Some(0));
        let q = Poly::new(&z4, vec![z4.elem(3)]);
        assert!(p.add(&q).is_zero());
        let two_x = Poly::new(&z4, vec![z4.elem(0), z4.elem(2)]);
        assert!(two_x.mul(&two_x).is_zero()); // 4X^2 = 0
    }
}
