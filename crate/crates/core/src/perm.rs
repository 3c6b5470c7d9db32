use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{invalid, Result};

/// A permutation of `0..degree`, stored as its image sequence.
///
/// Products compose left to right: `a.then(b)` applies `a` first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree as u32).collect())
    }

    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let mut seen = alloc::vec![false; images.len()];
        for &i in &images {
            let slot = seen
                .get_mut(i as usize)
                .ok_or_else(|| invalid!("image {i} out of range"))?;
            if *slot {
                return Err(invalid!("image {i} repeated"));
            }
            *slot = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation from 1-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[Vec<u32>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut used = alloc::vec![false; degree];
        for cycle in cycles {
            for &pt in cycle {
                if pt == 0 || pt as usize > degree {
                    return Err(invalid!("point {pt} outside 1..={degree}"));
                }
                if core::mem::replace(&mut used[pt as usize - 1], true) {
                    return Err(invalid!("point {pt} appears twice"));
                }
            }
            for (i, &pt) in cycle.iter().enumerate() {
                images[pt as usize - 1] = cycle[(i + 1) % cycle.len()] - 1;
            }
        }
        Ok(Perm(images))
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    #[inline]
    pub fn apply(&self, point: u32) -> u32 {
        self.0[point as usize]
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&i| other.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut out = alloc::vec![0u32; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            out[j as usize] = i as u32;
        }
        Perm(out)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i as u32 == j)
    }

    /// Disjoint union action: `self` on the first points, `other` shifted after them.
    pub fn disjoint_union(&self, other: &Perm) -> Perm {
        let shift = self.0.len() as u32;
        Perm(self.0.iter().copied().chain(other.0.iter().map(|&i| i + shift)).collect())
    }

    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let mut seen = alloc::vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut pt = start;
            while !seen[pt] {
                seen[pt] = true;
                cycle.push(pt as u32 + 1);
                pt = self.0[pt] as usize;
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            let parts: Vec<String> = cycle.iter().map(|p| alloc::format!("{p}")).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Parses cycle notation such as `(1 2 3)(4 5)` or `(1,2)`; `()` is the identity.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<u32>>> {
    let mut cycles = Vec::new();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let body_start = rest
            .strip_prefix('(')
            .ok_or_else(|| invalid!("expected '(' in cycle notation: {text:?}"))?;
        let close = body_start
            .find(')')
            .ok_or_else(|| invalid!("unterminated cycle in {text:?}"))?;
        let body = &body_start[..close];
        let points = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<u32>().map_err(|_| invalid!("bad point {s:?} in {text:?}")))
            .collect::<Result<Vec<u32>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = body_start[close + 1..].trim_start();
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn cycle_round_trip() {
        let cycles = parse_cycles("(1 2 3 4 5)(6,7)").unwrap();
        let p = Perm::from_cycles(7, &cycles).unwrap();
        assert_eq!(p.images(), &[1, 2, 3, 4, 0, 6, 5]);
        assert_eq!(p.to_string(), "(1 2 3 4 5)(6 7)");
        assert!(p.then(&p.inverse()).is_identity());
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn rejects_invalid() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 4]]).is_err());
        assert!(Perm::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(parse_cycles("(1 2").is_err());
        assert!(parse_cycles("1 2").is_err());
    }

    #[test]
    fn composition_order() {
        let a = Perm::from_cycles(3, &[vec![1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[vec![2, 3]]).unwrap();
        // 1 -a-> 2 -b-> 3.
        assert_eq!(a.then(&b).apply(0), 2);
    }
}
