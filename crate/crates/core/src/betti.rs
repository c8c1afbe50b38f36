//! Graded Betti tables.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Whether a table describes an ideal `I` or the quotient `R/I`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Subject {
    Ideal,
    Quotient,
}

/// `(i, j) ↦ β_{i,j}`, storing only non-zero entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BettiTable {
    subject: Subject,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn new(subject: Subject) -> Self {
        Self { subject, entries: BTreeMap::new() }
    }

    pub fn from_entries(subject: Subject, entries: impl IntoIterator<Item = ((usize, usize), u64)>) -> Self {
        let mut t = Self::new(subject);
        for ((i, j), v) in entries {
            t.add(i, j, v);
        }
        t
    }

    pub fn subject(&self) -> Subject {
        self.subject
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn add(&mut self, i: usize, j: usize, value: u64) {
        if value > 0 {
            *self.entries.entry((i, j)).or_insert(0) += value;
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`, or `None` for the zero module.
    pub fn reg(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// `max { i : β_{i,j} ≠ 0 }`, or `None` for the zero module.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    /// Total Betti number `Σ_j β_{i,j}`.
    pub fn total(&self, i: usize) -> u64 {
        self.entries.iter().filter(|(&(a, _), _)| a == i).map(|(_, &v)| v).sum()
    }

    /// Table with every internal degree raised by `shift`: `β_{i,j}(mI) = β_{i,j-deg m}(I)`.
    pub fn shifted(&self, shift: usize) -> Self {
        Self::from_entries(self.subject, self.entries().map(|((i, j), v)| ((i, j + shift), v)))
    }

    /// Table of `R/I` from the table of `I`: `β_{0,0} = 1`, `β_{i,j}(R/I) = β_{i-1,j}(I)`.
    ///
    /// The unit ideal gives the zero module, i.e. an empty table.
    pub fn quotient(&self) -> Result<Self> {
        if self.subject != Subject::Ideal {
            return Err(Error::SubjectMismatch);
        }
        if self.get(0, 0) > 0 {
            return Ok(Self::new(Subject::Quotient));
        }
        let mut q = Self::new(Subject::Quotient);
        q.add(0, 0, 1);
        for ((i, j), v) in self.entries() {
            q.add(i + 1, j, v);
        }
        Ok(q)
    }

    /// `i j rank` per line, sorted.
    pub fn to_flat(&self) -> String {
        let mut out = String::new();
        for ((i, j), v) in self.entries() {
            writeln!(out, "{i} {j} {v}").unwrap();
        }
        out
    }

    /// Grid with one row per homological degree `i` and one column per `j - i`.
    pub fn to_grid(&self) -> String {
        if self.is_empty() {
            return "(zero module)\n".to_string();
        }
        let lo = self.entries.keys().map(|&(i, j)| j as i64 - i as i64).min().unwrap();
        let hi = self.reg().unwrap();
        let pd = self.pd().unwrap();
        let width = self.entries.values().map(|v| v.to_string().len()).max().unwrap().max(hi.to_string().len()).max(2);
        let mut out = String::new();
        write!(out, "i\\j-i|").unwrap();
        for c in lo..=hi {
            write!(out, " {c:>width$}").unwrap();
        }
        out.push('\n');
        out.push_str(&"-".repeat(6 + (width + 1) * (hi - lo + 1) as usize));
        out.push('\n');
        for i in 0..=pd {
            write!(out, "{i:>4} |").unwrap();
            for c in lo..=hi {
                let j = i as i64 + c;
                let v = if j < 0 { 0 } else { self.get(i, j as usize) };
                if v == 0 {
                    write!(out, " {:>width$}", ".").unwrap();
                } else {
                    write!(out, " {v:>width$}").unwrap();
                }
            }
            out.push('\n');
        }
        out
    }
}
