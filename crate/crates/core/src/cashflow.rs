//! Projects with finitely many transactions.
//!
//! A project is identified with its cumulative cash flow `x(t)`, the running
//! balance of inflows minus outflows over `[0, t]`. With finitely many
//! transactions `x` is a right-continuous step function, so every quantity
//! below reduces to a finite scan over breakpoints.

use std::ops::{Add, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;

/// A single transaction: `amount` received at `time` (negative = outflow).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Transaction {
    #[serde(rename = "t")]
    pub time: f64,
    pub amount: f64,
}

impl Transaction {
    pub fn new(time: f64, amount: f64) -> Result<Self> {
        if !time.is_finite() || time < 0.0 {
            return Err(Error::InvalidTime(time));
        }
        if !amount.is_finite() {
            return Err(Error::InvalidAmount(amount));
        }
        Ok(Self { time, amount })
    }
}

/// A project with finitely many transactions, kept in canonical form:
/// strictly increasing times, no zero amounts.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(try_from = "RawCashFlow")]
pub struct StepCashFlow {
    transactions: Vec<Transaction>,
}

#[derive(Deserialize)]
struct RawCashFlow {
    transactions: Vec<Transaction>,
}

impl TryFrom<RawCashFlow> for StepCashFlow {
    type Error = Error;

    fn try_from(raw: RawCashFlow) -> Result<Self> {
        StepCashFlow::new(raw.transactions.into_iter().map(|t| (t.time, t.amount)))
    }
}

impl StepCashFlow {
    /// Builds a canonical flow from `(time, amount)` pairs in any order.
    /// Equal times are merged; amounts that cancel to zero are dropped.
    pub fn new<I: IntoIterator<Item = (f64, f64)>>(pairs: I) -> Result<Self> {
        let mut txs = pairs
            .into_iter()
            .map(|(t, a)| Transaction::new(t, a))
            .collect::<Result<Vec<_>>>()?;
        txs.sort_by(|a, b| a.time.total_cmp(&b.time));
        Ok(Self::from_sorted(txs))
    }

    /// The zero project.
    pub fn zero() -> Self {
        Self::default()
    }

    /// `amount · 1_time`.
    pub fn unit_at(time: f64, amount: f64) -> Result<Self> {
        Self::new([(time, amount)])
    }

    fn from_sorted(txs: Vec<Transaction>) -> Self {
        let mut out: Vec<Transaction> = Vec::with_capacity(txs.len());
        let mut i = 0;
        while i < txs.len() {
            let time = txs[i].time;
            let mut acc = CompensatedSum::new();
            while i < txs.len() && txs[i].time == time {
                acc.add(txs[i].amount);
                i += 1;
            }
            let amount = acc.value();
            if amount != 0.0 {
                out.push(Transaction { time, amount });
            }
        }
        Self { transactions: out }
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    /// Transaction times in increasing order.
    pub fn times(&self) -> impl Iterator<Item = f64> + '_ {
        self.transactions.iter().map(|t| t.time)
    }

    /// Times of transactions strictly after 0.
    pub fn positive_times(&self) -> impl Iterator<Item = f64> + '_ {
        self.times().filter(|t| *t > 0.0)
    }

    pub fn last_time(&self) -> Option<f64> {
        self.transactions.last().map(|t| t.time)
    }

    /// True when every transaction happens at an integer time.
    pub fn is_discrete(&self) -> bool {
        self.times().all(|t| t.fract() == 0.0)
    }

    /// `x(t)`: sum of amounts with `time <= t`. `t = +inf` gives the total.
    pub fn cumulative_at(&self, t: f64) -> f64 {
        self.transactions
            .iter()
            .take_while(|tx| tx.time <= t)
            .map(|tx| tx.amount)
            .collect::<CompensatedSum>()
            .value()
    }

    /// `x(0)`.
    pub fn initial(&self) -> f64 {
        match self.transactions.first() {
            Some(tx) if tx.time == 0.0 => tx.amount,
            _ => 0.0,
        }
    }

    /// `x(+inf)`, the total of all amounts.
    pub fn terminal(&self) -> f64 {
        self.cumulative_at(f64::INFINITY)
    }

    /// Values of `x` on the segments `[0, t_1), [t_1, t_2), ...` where
    /// `t_k` are the positive transaction times. The first entry is `x(0)`.
    pub fn levels(&self) -> Vec<f64> {
        let mut acc = CompensatedSum::new();
        let mut levels = Vec::with_capacity(self.len() + 1);
        let mut iter = self.transactions.iter().peekable();
        if let Some(tx) = iter.peek() {
            if tx.time == 0.0 {
                acc.add(tx.amount);
                iter.next();
            }
        }
        levels.push(acc.value());
        for tx in iter {
            acc.add(tx.amount);
            levels.push(acc.value());
        }
        levels
    }

    /// Multiplies every amount by `factor > 0`.
    pub fn scale(&self, factor: f64) -> Result<Self> {
        if !(factor > 0.0) || !factor.is_finite() {
            return Err(Error::param("factor", factor, "scale factor must be positive and finite"));
        }
        Ok(self.map_amounts(|_, a| a * factor))
    }

    fn map_amounts<F: Fn(f64, f64) -> f64>(&self, f: F) -> Self {
        let txs = self
            .transactions
            .iter()
            .map(|tx| Transaction {
                time: tx.time,
                amount: f(tx.time, tx.amount),
            })
            .filter(|tx| tx.amount != 0.0)
            .collect();
        Self { transactions: txs }
    }

    /// `x_{<=tau}`: drops every transaction after `tau`.
    pub fn truncate(&self, tau: f64) -> Result<Self> {
        if !(tau >= 0.0) {
            return Err(Error::param("tau", tau, "truncation time must be nonnegative"));
        }
        let txs = self
            .transactions
            .iter()
            .copied()
            .filter(|tx| tx.time <= tau)
            .collect();
        Ok(Self { transactions: txs })
    }

    /// `x^{(+tau)}`: the project postponed by `tau`.
    pub fn postpone(&self, tau: f64) -> Result<Self> {
        if !(tau >= 0.0) || !tau.is_finite() {
            return Err(Error::param("tau", tau, "postponement must be finite and nonnegative"));
        }
        let txs = self
            .transactions
            .iter()
            .map(|tx| Transaction {
                time: tx.time + tau,
                amount: tx.amount,
            })
            .collect();
        Ok(Self::from_sorted(txs))
    }

    /// `x_gamma`: keeps the time-0 transaction, scales the future by `gamma`.
    pub fn reduce(&self, gamma: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&gamma) {
            return Err(Error::param("gamma", gamma, "reduction factor must lie in [0, 1]"));
        }
        Ok(self.map_amounts(|t, a| if t == 0.0 { a } else { a * gamma }))
    }

    /// `sup_t |x(t)|`.
    pub fn sup_norm(&self) -> f64 {
        self.levels().into_iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Sum of absolute amounts; a scale for tolerances.
    pub fn gross(&self) -> f64 {
        self.transactions.iter().map(|t| t.amount.abs()).sum()
    }

    fn min_level(&self) -> f64 {
        self.levels().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// `x ∈ P₊`: the balance never goes negative.
    pub fn is_in_p_plus(&self) -> bool {
        self.min_level() >= 0.0
    }

    /// `x ∈ P₊₊`: the balance stays bounded away from zero.
    pub fn is_in_p_plusplus(&self) -> bool {
        self.min_level() > 0.0
    }

    /// `x - y ∈ P₊`, the pointwise order `x >= y`.
    pub fn dominates(&self, other: &StepCashFlow) -> bool {
        (self - other).is_in_p_plus()
    }

    pub fn classify(&self) -> QMembership {
        QMembership::of(self)
    }
}

impl Add for &StepCashFlow {
    type Output = StepCashFlow;

    fn add(self, rhs: &StepCashFlow) -> StepCashFlow {
        let mut merged = Vec::with_capacity(self.len() + rhs.len());
        merged.extend_from_slice(&self.transactions);
        merged.extend_from_slice(&rhs.transactions);
        merged.sort_by(|a, b| a.time.total_cmp(&b.time));
        StepCashFlow::from_sorted(merged)
    }
}

impl Add for StepCashFlow {
    type Output = StepCashFlow;

    fn add(self, rhs: StepCashFlow) -> StepCashFlow {
        &self + &rhs
    }
}

impl Neg for &StepCashFlow {
    type Output = StepCashFlow;

    fn neg(self) -> StepCashFlow {
        self.map_amounts(|_, a| -a)
    }
}

impl Neg for StepCashFlow {
    type Output = StepCashFlow;

    fn neg(self) -> StepCashFlow {
        -&self
    }
}

impl Sub for &StepCashFlow {
    type Output = StepCashFlow;

    fn sub(self, rhs: &StepCashFlow) -> StepCashFlow {
        self + &(-rhs)
    }
}

/// Membership of a project in the distinguished project sets.
///
/// Primed sets are literal: `Q1'` is `{-1_0 + a·1_tau : a >= 1, tau > 0}`,
/// with the outflow normalized to exactly one money unit. `S` is the cone
/// `{-a·1_t + b·1_tau : 0 <= t < tau, 0 < a <= b}` spanned by `Q2''`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct QMembership {
    pub q1: bool,
    pub q2: bool,
    pub q3: bool,
    pub q4: bool,
    pub q5: bool,
    pub q1_prime: bool,
    pub q2_prime: bool,
    pub q2_double_prime: bool,
    pub q4_prime: bool,
    pub q5_prime: bool,
    pub q5_double_prime: bool,
    pub s: bool,
}

impl QMembership {
    fn of(x: &StepCashFlow) -> Self {
        let x0 = x.initial();
        // increments at positive times, in time order
        let future: Vec<f64> = x
            .transactions
            .iter()
            .filter(|t| t.time > 0.0)
            .map(|t| t.amount)
            .collect();
        let levels = x.levels();

        let q1 = x0 < 0.0 && future.iter().all(|a| *a > 0.0);
        let q2 = q1 || (x0 <= 0.0 && !x.is_in_p_plus() && down_then_up(&future));
        let q3 = single_sign_switch(&levels);
        let q4 = x0 < 0.0;
        let q5 = q4 || (x0 == 0.0 && future.first().is_some_and(|a| *a < 0.0));
        let q5_double_prime = x0 <= 0.0;

        let txs = &x.transactions;
        let two = |pred: &dyn Fn(&Transaction, &Transaction) -> bool| {
            txs.len() == 2 && txs[0].time < txs[1].time && pred(&txs[0], &txs[1])
        };
        let q1_prime = two(&|a, b| a.time == 0.0 && a.amount == -1.0 && b.amount >= 1.0);
        let q2_prime = two(&|a, b| a.amount == -1.0 && b.amount > 0.0);
        let q2_double_prime = two(&|a, b| a.amount == -1.0 && b.amount >= 1.0);
        let s = two(&|a, b| a.amount < 0.0 && b.amount >= -a.amount);
        let q4_prime = txs.len() <= 3 && txs.first().is_some_and(|t| t.time == 0.0 && t.amount == -1.0);
        let q5_prime = txs.len() <= 3 && txs.first().is_some_and(|t| t.amount == -1.0);

        Self {
            q1,
            q2,
            q3,
            q4,
            q5,
            q1_prime,
            q2_prime,
            q2_double_prime,
            q4_prime,
            q5_prime,
            q5_double_prime,
            s,
        }
    }
}

/// Nonincreasing on `[0, tau)` and nondecreasing on `[tau, inf)` for some
/// `tau > 0`. The jump at `tau` itself is unconstrained, so one increment
/// may break the pattern.
fn down_then_up(increments: &[f64]) -> bool {
    (0..=increments.len()).any(|k| {
        let (before, after) = increments.split_at(k);
        let after = after.get(1..).unwrap_or(&[]);
        before.iter().all(|a| *a <= 0.0) && after.iter().all(|a| *a >= 0.0)
    })
}

/// Nonpositive on `[0, tau)` and nonnegative on `[tau, inf)` for some
/// `tau > 0`. Choosing `tau` at a breakpoint splits the level sequence;
/// choosing it inside a segment forces that segment's level to be zero.
fn single_sign_switch(levels: &[f64]) -> bool {
    let at_breakpoint = (1..levels.len()).any(|k| {
        levels[..k].iter().all(|v| *v <= 0.0) && levels[k..].iter().all(|v| *v >= 0.0)
    });
    let inside_segment = (0..levels.len()).any(|k| {
        levels[k] == 0.0
            && levels[..k].iter().all(|v| *v <= 0.0)
            && levels[k + 1..].iter().all(|v| *v >= 0.0)
    });
    at_breakpoint || inside_segment
}
