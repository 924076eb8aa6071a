//! The modification-fairness measure and its normalized form.
//!
//! For a modification set `S`, `ed_S(v)` counts the pairs of `S` incident to
//! `v`, and `diff(S)` is the absolute difference between the mean of `ed_S`
//! over red vertices and the mean over blue vertices.

use crate::graph::{Color, ColoredGraph, GraphError, ModificationSet, Pair};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FairnessReport {
    pub diff: Rational,
    /// `diff / (2|S| / min(|R|, |B|))`, and 0 for the empty set.
    pub delta_norm: Rational,
    pub red_edit_sum: u64,
    pub blue_edit_sum: u64,
    pub mono_red: u64,
    pub mono_blue: u64,
    pub bicolored: u64,
}

impl FairnessReport {
    pub fn size(&self) -> u64 {
        self.mono_red + self.mono_blue + self.bicolored
    }
}

/// Pair counts by endpoint colors.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EditCounts {
    pub mono_red: u64,
    pub mono_blue: u64,
    pub bicolored: u64,
}

impl EditCounts {
    pub fn of(g: &ColoredGraph, pairs: impl IntoIterator<Item = Pair>) -> Self {
        let mut counts = EditCounts::default();
        for p in pairs {
            counts.add(g, p);
        }
        counts
    }

    #[inline]
    pub fn add(&mut self, g: &ColoredGraph, p: Pair) {
        match (g.color(p.lo()), g.color(p.hi())) {
            (Color::Red, Color::Red) => self.mono_red += 1,
            (Color::Blue, Color::Blue) => self.mono_blue += 1,
            _ => self.bicolored += 1,
        }
    }

    #[inline]
    pub fn remove(&mut self, g: &ColoredGraph, p: Pair) {
        match (g.color(p.lo()), g.color(p.hi())) {
            (Color::Red, Color::Red) => self.mono_red -= 1,
            (Color::Blue, Color::Blue) => self.mono_blue -= 1,
            _ => self.bicolored -= 1,
        }
    }

    pub fn size(&self) -> u64 {
        self.mono_red + self.mono_blue + self.bicolored
    }

    pub fn red_sum(&self) -> u64 {
        2 * self.mono_red + self.bicolored
    }

    pub fn blue_sum(&self) -> u64 {
        2 * self.mono_blue + self.bicolored
    }

    pub fn plus(self, other: EditCounts) -> EditCounts {
        EditCounts {
            mono_red: self.mono_red + other.mono_red,
            mono_blue: self.mono_blue + other.mono_blue,
            bicolored: self.bicolored + other.bicolored,
        }
    }
}

/// Color-class sizes of the original instance; evaluates fairness from
/// edit counts alone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FairnessScale {
    reds: u64,
    blues: u64,
}

impl FairnessScale {
    pub fn new(reds: usize, blues: usize) -> Result<Self, GraphError> {
        if reds == 0 {
            return Err(GraphError::EmptyColorClass(Color::Red));
        }
        if blues == 0 {
            return Err(GraphError::EmptyColorClass(Color::Blue));
        }
        Ok(FairnessScale {
            reds: reds as u64,
            blues: blues as u64,
        })
    }

    pub fn of(g: &ColoredGraph) -> Result<Self, GraphError> {
        Self::new(g.red_count(), g.blue_count())
    }

    pub fn reds(&self) -> u64 {
        self.reds
    }

    pub fn blues(&self) -> u64 {
        self.blues
    }

    pub fn min_class(&self) -> u64 {
        self.reds.min(self.blues)
    }

    /// `diff * |R| * |B|`, an integer.
    #[inline]
    pub fn scaled_diff(&self, counts: &EditCounts) -> u128 {
        let lhs = counts.red_sum() as i128 * self.blues as i128;
        let rhs = counts.blue_sum() as i128 * self.reds as i128;
        (lhs - rhs).unsigned_abs()
    }

    pub fn diff(&self, counts: &EditCounts) -> Rational {
        let num = self.scaled_diff(counts);
        crate::rational::reduced(num as i128, (self.reds * self.blues) as i128)
    }

    /// `diff <= delta` decided exactly in integers.
    #[inline]
    pub fn within(&self, counts: &EditCounts, delta: Rational) -> bool {
        if delta.is_negative() {
            return false;
        }
        let lhs = self.scaled_diff(counts) as i128 * delta.denom() as i128;
        let rhs = delta.numer() as i128 * (self.reds * self.blues) as i128;
        lhs <= rhs
    }

    pub fn delta_norm(&self, counts: &EditCounts) -> Rational {
        let size = counts.size();
        if size == 0 {
            return Rational::ZERO;
        }
        // diff / (2|S| / m) = scaled / (|R||B|) * m / (2|S|)
        let num = self.scaled_diff(counts) as i128 * self.min_class() as i128;
        let den = (self.reds * self.blues) as i128 * 2 * size as i128;
        crate::rational::reduced(num, den)
    }

    /// The absolute `delta` corresponding to a normalized bound for
    /// solutions of size `k`: `delta_norm * 2k / min(|R|, |B|)`.
    pub fn delta_from_norm(&self, delta_norm: Rational, k: u64) -> Rational {
        delta_norm * Rational::new(2 * k as i64, self.min_class() as i64)
    }

    pub fn report(&self, counts: &EditCounts) -> FairnessReport {
        FairnessReport {
            diff: self.diff(counts),
            delta_norm: self.delta_norm(counts),
            red_edit_sum: counts.red_sum(),
            blue_edit_sum: counts.blue_sum(),
            mono_red: counts.mono_red,
            mono_blue: counts.mono_blue,
            bicolored: counts.bicolored,
        }
    }
}

/// Full fairness report of `s` applied to `g`.
pub fn fairness_report(g: &ColoredGraph, s: &ModificationSet) -> Result<FairnessReport, GraphError> {
    let scale = FairnessScale::of(g)?;
    if let Some(max) = s.max_vertex() {
        if max >= g.n() {
            return Err(GraphError::VertexOutOfRange { vertex: max, n: g.n() });
        }
    }
    Ok(scale.report(&EditCounts::of(g, s.iter().copied())))
}
