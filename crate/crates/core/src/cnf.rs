//! CNF encoding of the maximum transitive sub-relation problem.
//!
//! One variable per arc. For every ordered triple `(i, k, j)` with `i ≠ k`,
//! `k ≠ j` and both `(i, k)` and `(k, j)` present, the clause
//! `x_ij ∨ ¬x_ik ∨ ¬x_kj` is emitted, with `x_ij` dropped when `(i, j)` is
//! absent. `i = j` is included, so a digon `i ⇄ k` requires the loop `(i, i)`.
//! Satisfying assignments are exactly the transitive sub-relations, and a
//! max-ones solution is a maximum one.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::relation::{Arc, Relation};

pub const DEFAULT_VAR_BUDGET: usize = 24;

/// A DIMACS literal: `+v` or `-v` for 1-based variable `v`.
pub type Literal = i32;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    pub clauses: Vec<Vec<Literal>>,
    /// `var_to_arc[v - 1]` is the arc of variable `v`.
    pub var_to_arc: Vec<Arc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub values: Vec<bool>,
}

impl Assignment {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn true_count(&self) -> usize {
        self.values.iter().filter(|&&b| b).count()
    }

    /// Indicator of `t` over the variables of `f`.
    pub fn indicator(f: &CnfFormula, t: &Relation) -> Self {
        Assignment {
            values: f
                .var_to_arc
                .iter()
                .map(|&(i, j)| t.contains(i, j))
                .collect(),
        }
    }
}

fn literal_holds(lit: Literal, values: &[bool]) -> bool {
    let v = lit.unsigned_abs() as usize - 1;
    values[v] == (lit > 0)
}

impl CnfFormula {
    /// Index of the first clause `a` falsifies.
    pub fn first_unsatisfied(&self, a: &Assignment) -> Result<Option<usize>> {
        if a.len() != self.num_vars {
            return Err(Error::AssignmentLength {
                expected: self.num_vars,
                found: a.len(),
            });
        }
        Ok(self
            .clauses
            .iter()
            .position(|c| !c.iter().any(|&lit| literal_holds(lit, &a.values))))
    }

    pub fn is_satisfied_by(&self, a: &Assignment) -> Result<bool> {
        Ok(self.first_unsatisfied(a)?.is_none())
    }

    /// DIMACS text: `c var v = arc i j` lines (1-based), the `p cnf` header,
    /// then one `0`-terminated clause per line.
    pub fn to_dimacs(&self) -> String {
        let mut out = String::new();
        for (v, (i, j)) in self.var_to_arc.iter().enumerate() {
            let _ = writeln!(out, "c var {} = arc {} {}", v + 1, i + 1, j + 1);
        }
        let _ = writeln!(out, "p cnf {} {}", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                let _ = write!(out, "{lit} ");
            }
            out.push_str("0\n");
        }
        out
    }
}

pub fn encode_mts_to_cnf(r: &Relation) -> CnfFormula {
    let n = r.n();
    let var_to_arc: Vec<Arc> = r.iter_arcs().collect();
    let mut var_of = vec![0 as Literal; n * n];
    for (v, &(i, j)) in var_to_arc.iter().enumerate() {
        var_of[i * n + j] = v as Literal + 1;
    }
    let var = |i: usize, j: usize| var_of[i * n + j];

    let mut clauses = Vec::new();
    for i in 0..n {
        for k in r.successors(i).filter(|&k| k != i) {
            for j in r.successors(k).filter(|&j| j != k) {
                let mut clause = Vec::with_capacity(3);
                if r.contains(i, j) {
                    clause.push(var(i, j));
                }
                clause.push(-var(i, k));
                clause.push(-var(k, j));
                clauses.push(clause);
            }
        }
    }
    CnfFormula {
        num_vars: var_to_arc.len(),
        clauses,
        var_to_arc,
    }
}

/// The sub-relation of `r` selected by a satisfying assignment.
pub fn decode_assignment(r: &Relation, f: &CnfFormula, a: &Assignment) -> Result<Relation> {
    if let Some(c) = f.first_unsatisfied(a)? {
        return Err(Error::Unsatisfied(c));
    }
    let mut t = Relation::empty(r.n());
    for (&(i, j), _) in f.var_to_arc.iter().zip(&a.values).filter(|(_, &b)| b) {
        if !r.contains(i, j) {
            return Err(Error::NotContained);
        }
        t.insert(i, j);
    }
    Ok(t)
}

/// Max-ones satisfying assignment by exhaustive search, visiting assignments
/// in decreasing lexicographic order (variable 1 most significant, `true`
/// first) so the first optimum found is the lexicographically largest.
pub fn max_ones_brute_force(f: &CnfFormula, var_budget: usize) -> Result<(Assignment, usize)> {
    let nv = f.num_vars;
    if nv > var_budget.min(63) {
        return Err(Error::BudgetExceeded {
            what: "variable count",
            budget: var_budget.min(63),
            actual: nv,
        });
    }
    // bit (nv - v) of a word is variable v, so integer order is lexicographic order
    let bit = |lit: Literal| 1u64 << (nv - lit.unsigned_abs() as usize);
    let masks: Vec<(u64, u64)> = f
        .clauses
        .iter()
        .map(|c| {
            c.iter().fold((0, 0), |(pos, neg), &lit| {
                if lit > 0 {
                    (pos | bit(lit), neg)
                } else {
                    (pos, neg | bit(lit))
                }
            })
        })
        .collect();

    let mut best: Option<(u64, u32)> = None;
    let top: u64 = if nv == 0 { 0 } else { (1u64 << nv) - 1 };
    let mut word = top;
    loop {
        let ones = word.count_ones();
        if best.is_none_or(|(_, b)| ones > b)
            && masks
                .iter()
                .all(|&(pos, neg)| word & pos != 0 || !word & neg != 0)
        {
            best = Some((word, ones));
        }
        if word == 0 {
            break;
        }
        word -= 1;
    }
    let (word, ones) = best.ok_or(Error::Unsatisfiable)?;
    let values = (1..=nv).map(|v| word >> (nv - v) & 1 == 1).collect();
    Ok((Assignment { values }, ones as usize))
}
