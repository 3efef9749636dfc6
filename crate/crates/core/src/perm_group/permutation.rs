use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., degree-1}`.
///
/// Points are 0-based internally. Parsing and display use 1-based cycle
/// notation, e.g. `(1 2 3)(4 5)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &p in &images {
            if p >= degree {
                return Err(Error::Parse(format!("image {} out of range", p + 1)));
            }
            if std::mem::replace(&mut seen[p], true) {
                return Err(Error::Parse(format!("image {} repeated", p + 1)));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|p| p as u32).collect(),
        })
    }

    /// Parses disjoint-cycle notation over the points `1..=degree`.
    ///
    /// Points inside a cycle may be separated by whitespace or commas. `()`
    /// is the identity.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty permutation text".into()));
        }
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = vec![false; degree];
        let mut rest = text;
        while !rest.is_empty() {
            let body_start = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' in {text:?}")))?;
            let close = body_start
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &body_start[..close];
            if body.contains('(') {
                return Err(Error::Parse(format!("nested '(' in {text:?}")));
            }
            let mut cycle = Vec::new();
            for token in body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
            {
                let point: usize = token
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad point {token:?} in {text:?}")))?;
                if point == 0 || point > degree {
                    return Err(Error::Parse(format!(
                        "point {point} out of range 1..={degree}"
                    )));
                }
                if std::mem::replace(&mut used[point - 1], true) {
                    return Err(Error::Parse(format!("point {point} repeated in {text:?}")));
                }
                cycle.push(point - 1);
            }
            for (pos, &p) in cycle.iter().enumerate() {
                images[p] = cycle[(pos + 1) % cycle.len()] as u32;
            }
            rest = body_start[close + 1..].trim_start();
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn image(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&p| p as usize)
    }

    /// Images of the points `1..=degree`, 1-based.
    pub fn images_one_based(&self) -> Vec<usize> {
        self.images().map(|p| p + 1).collect()
    }

    /// The product "apply `self`, then `other`".
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self
                .images
                .iter()
                .map(|&p| other.images[p as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (p, &q) in self.images.iter().enumerate() {
            images[q as usize] = p as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(p, &q)| p == q as usize)
    }

    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.image(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.image(p);
            }
            cycles.push(cycle);
        }
        cycles
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let points: Vec<String> = cycle.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", points.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parse_three_cycle() {
        let p = Permutation::parse("(1 2 3)", 4).unwrap();
        assert_eq!(p.images_one_based(), vec![2, 3, 1, 4]);
    }

    #[test]
    fn parse_identity() {
        let p = Permutation::parse("()", 3).unwrap();
        assert!(p.is_identity());
        assert_eq!(p.degree(), 3);
    }

    #[test]
    fn parse_double_transposition() {
        let p = Permutation::parse("(1 2)(3 4)", 4).unwrap();
        assert_eq!(p.images_one_based(), vec![2, 1, 4, 3]);
        let q = Permutation::parse("(1,2)(3,4)", 4).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            Permutation::parse("(1 5)", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse("(0 1)", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse("(1 2)(2 3)", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse("(1 2 1)", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse("(1 2", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse("1 2)", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse("(1 (2))", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            Permutation::parse("(a b)", 4),
            Err(Error::Parse(_))
        ));
        assert!(matches!(Permutation::parse("", 4), Err(Error::Parse(_))));
    }

    #[test]
    fn product_applies_left_factor_first() {
        let a = Permutation::parse("(1 2)", 3).unwrap();
        let b = Permutation::parse("(1 3)", 3).unwrap();
        // 1 -> 2 -> 2, 2 -> 1 -> 3, 3 -> 3 -> 1
        assert_eq!(a.then(&b).to_string(), "(1 2 3)");
    }

    #[test]
    fn display_round_trips() {
        let p = Permutation::parse("(2 5)(1 3 4)", 6).unwrap();
        assert_eq!(p.to_string(), "(1 3 4)(2 5)");
        assert_eq!(Permutation::parse(&p.to_string(), 6).unwrap(), p);
    }

    fn arb_perm(degree: usize) -> impl Strategy<Value = Permutation> {
        Just((0..degree).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(v).unwrap())
    }

    proptest! {
        #[test]
        fn inverse_and_display_are_consistent(p in arb_perm(7), q in arb_perm(7)) {
            prop_assert!(p.then(&p.inverse()).is_identity());
            prop_assert_eq!(Permutation::parse(&p.to_string(), 7).unwrap(), p.clone());
            prop_assert_eq!(p.then(&q).inverse(), q.inverse().then(&p.inverse()));
        }
    }
}
