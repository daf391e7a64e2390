use std::cmp::Ordering;

use serde::Serialize;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderKind {
    Lex,
    GrevLex,
}

/// A monomial order with a variable precedence: `precedence[0]` is the index
/// of the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    pub precedence: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        Self {
            kind,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::GrevLex, nvars)
    }

    /// Panics unless `precedence` is a permutation of `0..n`.
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Self {
        let mut seen = vec![false; precedence.len()];
        for &i in &precedence {
            assert!(
                i < seen.len() && !std::mem::replace(&mut seen[i], true),
                "not a permutation"
            );
        }
        Self { kind, precedence }
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self.kind {
            OrderKind::Lex => self
                .precedence
                .iter()
                .map(|&i| a[i].cmp(&b[i]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal),
            OrderKind::GrevLex => {
                let da: u32 = a.iter().sum();
                let db: u32 = b.iter().sum();
                da.cmp(&db).then_with(|| {
                    self.precedence
                        .iter()
                        .rev()
                        .map(|&i| b[i].cmp(&a[i]))
                        .find(|o| o.is_ne())
                        .unwrap_or(Ordering::Equal)
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn lex_and_grevlex_differ() {
        let lex = MonomialOrder::lex(3);
        let grl = MonomialOrder::grevlex(3);
        // x vs y^2
        assert_eq!(lex.cmp(&[1, 0, 0], &[0, 2, 0]), Ordering::Greater);
        assert_eq!(grl.cmp(&[1, 0, 0], &[0, 2, 0]), Ordering::Less);
        // x*z vs y^2 under grevlex: z is smallest, x*z has more of it
        assert_eq!(grl.cmp(&[1, 0, 1], &[0, 2, 0]), Ordering::Less);
        let rev = MonomialOrder::with_precedence(OrderKind::Lex, vec![2, 1, 0]);
        assert_eq!(rev.cmp(&[1, 0, 0], &[0, 0, 1]), Ordering::Less);
    }

    fn mono() -> impl Strategy<Value = Vec<u32>> {
        proptest::collection::vec(0u32..4, 3)
    }

    proptest! {
        #[test]
        fn orders_are_multiplicative_with_one_minimal(a in mono(), b in mono(), c in mono(), grev in any::<bool>()) {
            let o = if grev { MonomialOrder::grevlex(3) } else { MonomialOrder::lex(3) };
            let add = |x: &[u32], y: &[u32]| x.iter().zip(y).map(|(p, q)| p + q).collect::<Vec<_>>();
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&add(&a, &c), &add(&b, &c)));
            prop_assert_ne!(o.cmp(&a, &[0, 0, 0]), Ordering::Less);
            prop_assert_eq!(o.cmp(&a, &b), o.cmp(&b, &a).reverse());
        }
    }
}
