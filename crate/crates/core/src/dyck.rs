//! Balanced up/down step sequences, the domain of the nonnesting bijection.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Step {
    Up,
    Down,
}

/// A sequence of n up and n down steps in which no prefix has more downs
/// than ups. Serialized as a string over {U, D}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::Up => height += 1,
                Step::Down => height -= 1,
            }
            if height < 0 {
                return Err(Error::InvalidDyckPath {
                    reason: format!("prefix of length {} has more downs than ups", i + 1),
                });
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckPath {
                reason: "unequal numbers of up and down steps".into(),
            });
        }
        Ok(DyckPath { steps })
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of up steps.
    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Number of UD factors.
    pub fn peaks(&self) -> u32 {
        self.steps
            .windows(2)
            .filter(|w| matches!(w, [Step::Up, Step::Down]))
            .count() as u32
    }

    /// All Dyck paths of semilength n, depth-first with Up tried before Down.
    pub fn enumerate_all(n: usize) -> Vec<DyckPath> {
        let mut out = Vec::new();
        let mut steps = Vec::with_capacity(2 * n);
        fn go(steps: &mut Vec<Step>, ups: usize, downs: usize, n: usize, out: &mut Vec<DyckPath>) {
            if ups == n && downs == n {
                out.push(DyckPath {
                    steps: steps.clone(),
                });
                return;
            }
            if ups < n {
                steps.push(Step::Up);
                go(steps, ups + 1, downs, n, out);
                steps.pop();
            }
            if downs < ups {
                steps.push(Step::Down);
                go(steps, ups, downs + 1, n, out);
                steps.pop();
            }
        }
        go(&mut steps, 0, 0, n, &mut out);
        out
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath[{self}]")
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut steps = Vec::with_capacity(s.len());
        for (i, ch) in s.trim().chars().enumerate() {
            match ch {
                'U' | 'u' => steps.push(Step::Up),
                'D' | 'd' => steps.push(Step::Down),
                other => {
                    return Err(Error::InvalidDyckPath {
                        reason: format!("unexpected character {other:?} at position {i}"),
                    })
                }
            }
        }
        DyckPath::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let p: DyckPath = "UUDUDD".parse().unwrap();
        assert_eq!(p.to_string(), "UUDUDD");
        assert_eq!(p.semilength(), 3);
        assert_eq!(p.peaks(), 2);
    }

    #[test]
    fn peaks_extremes() {
        let staircase: DyckPath = "UDUDUD".parse().unwrap();
        assert_eq!(staircase.peaks(), 3);
        let pyramid: DyckPath = "UUUDDD".parse().unwrap();
        assert_eq!(pyramid.peaks(), 1);
    }

    #[test]
    fn rejects_invalid() {
        assert!("UD D".parse::<DyckPath>().is_err());
        assert!("DU".parse::<DyckPath>().is_err());
        assert!("UUD".parse::<DyckPath>().is_err());
        assert!("UDD".parse::<DyckPath>().is_err());
    }

    #[test]
    fn enumerate_catalan_counts() {
        for (n, expect) in [(0, 1usize), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
            let all = DyckPath::enumerate_all(n);
            assert_eq!(all.len(), expect);
            let mut sorted = all.clone();
            sorted.dedup();
            assert_eq!(sorted.len(), all.len());
        }
    }
}
