//! Exponent vectors and monomial orders.

use std::cmp::Ordering;

/// A monomial as a fixed-length exponent vector, one entry per variable.
///
/// The derived `Ord` (plain lexicographic on the vector) is only a storage
/// order; ranking for computation goes through [`MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        Monomial(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.len(), other.len());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial(
            other
                .0
                .iter()
                .zip(&self.0)
                .map(|(b, a)| b - a)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.len(), other.len());
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// True when the two monomials have no common variable.
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Restricts to the variables listed in `keep`, in that order.
    pub fn project(&self, keep: &[usize]) -> Monomial {
        Monomial(keep.iter().map(|&j| self.0[j]).collect())
    }
}

/// The two supported order kinds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    /// Graded reverse lexicographic; the workhorse order.
    Grevlex,
    /// Pure lexicographic; an elimination order for every variable prefix.
    Lex,
}

/// A total monomial order: an order kind plus a variable priority.
///
/// `priority[0]` is the most significant variable index. The order is
/// compatible with multiplication and has 1 as the minimal monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub priority: Vec<usize>,
}

impl MonomialOrder {
    pub fn grevlex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            priority: (0..n).collect(),
        }
    }

    pub fn lex(n: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            priority: (0..n).collect(),
        }
    }

    /// Lex order ranking the `drop` variables above everything else;
    /// a Groebner basis under this order eliminates them.
    pub fn elimination(n: usize, drop: &[usize]) -> Self {
        let mut priority: Vec<usize> = drop.to_vec();
        priority.extend((0..n).filter(|j| !drop.contains(j)));
        MonomialOrder {
            kind: OrderKind::Lex,
            priority,
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        debug_assert_eq!(a.len(), self.priority.len());
        match self.kind {
            OrderKind::Lex => {
                for &j in &self.priority {
                    match a.0[j].cmp(&b.0[j]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            OrderKind::Grevlex => {
                match a.total_degree().cmp(&b.total_degree()) {
                    Ordering::Equal => {}
                    ord => return ord,
                }
                // ties: larger is the one whose last difference is negative
                for &j in self.priority.iter().rev() {
                    match a.0[j].cmp(&b.0[j]) {
                        Ordering::Equal => continue,
                        Ordering::Less => return Ordering::Greater,
                        Ordering::Greater => return Ordering::Less,
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn grevlex_basics() {
        let o = MonomialOrder::grevlex(2);
        // x^3 > y^2 (degree), x^2 > x*y > y^2 (reverse lex tie-break)
        assert_eq!(o.cmp(&m(&[3, 0]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2, 0]), &m(&[1, 1])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 1]), &m(&[0, 2])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Less);
    }

    #[test]
    fn lex_basics() {
        let o = MonomialOrder::lex(2);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 2]), &m(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn elimination_ranks_dropped_first() {
        // variables (t, u, v), dropping t
        let o = MonomialOrder::elimination(3, &[0]);
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 9, 9])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 3])), Ordering::Greater);
    }

    #[test]
    fn multiplicative_and_one_minimal() {
        let o = MonomialOrder::grevlex(3);
        let a = m(&[1, 2, 0]);
        let b = m(&[0, 1, 1]);
        let c = m(&[2, 0, 1]);
        let ord = o.cmp(&a, &b);
        assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ord);
        assert_eq!(o.cmp(&Monomial::one(3), &a), Ordering::Less);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[1, 2]);
        let b = m(&[2, 2]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.div(&b), m(&[1, 0]));
        assert_eq!(a.lcm(&m(&[3, 0])), m(&[3, 2]));
        assert!(m(&[1, 0]).coprime(&m(&[0, 2])));
        assert!(!m(&[1, 1]).coprime(&m(&[0, 2])));
    }
}
