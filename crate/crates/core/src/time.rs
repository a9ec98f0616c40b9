//! Fixed-point simulation time and energy.
//!
//! Event ordering and energy conservation are tested for exact equality, so
//! both quantities are integers: time in picoseconds, energy in femtojoules.
//! Floating point appears only at the edges (scenario files, metric
//! estimates) and in geometry.

use std::fmt;
use std::ops::{Add, AddAssign, Sub, SubAssign};

pub const PS_PER_SECOND: i64 = 1_000_000_000_000;
pub const FJ_PER_JOULE: i128 = 1_000_000_000_000_000;

/// A point (or span) in simulation time, picosecond fixed point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SimTime(i64);

impl SimTime {
    pub const ZERO: SimTime = SimTime(0);
    pub const MAX: SimTime = SimTime(i64::MAX);

    pub const fn from_ps(ps: i64) -> Self {
        SimTime(ps)
    }

    pub const fn ps(self) -> i64 {
        self.0
    }

    /// Nearest-picosecond conversion; scenario inputs go through here.
    pub fn from_secs_f64(secs: f64) -> Self {
        SimTime((secs * PS_PER_SECOND as f64).round() as i64)
    }

    /// Rounds up, and adds one extra tick for a nonzero span. Propagation
    /// delays use this so a delivery can never land outside the light cone
    /// once times are quantized.
    pub fn from_secs_f64_ceil_guard(secs: f64) -> Self {
        if secs <= 0.0 {
            return SimTime(0);
        }
        let ps = (secs * PS_PER_SECOND as f64).ceil() as i64;
        SimTime(ps.saturating_add(1))
    }

    /// Division by an exactly representable constant keeps friendly values
    /// exact (1e12 ps -> 1.0).
    pub fn as_secs_f64(self) -> f64 {
        self.0 as f64 / PS_PER_SECOND as f64
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn saturating_add(self, other: SimTime) -> SimTime {
        SimTime(self.0.saturating_add(other.0))
    }
}

impl Add for SimTime {
    type Output = SimTime;
    fn add(self, rhs: SimTime) -> SimTime {
        SimTime(self.0 + rhs.0)
    }
}

impl AddAssign for SimTime {
    fn add_assign(&mut self, rhs: SimTime) {
        self.0 += rhs.0;
    }
}

impl Sub for SimTime {
    type Output = SimTime;
    fn sub(self, rhs: SimTime) -> SimTime {
        SimTime(self.0 - rhs.0)
    }
}

impl SubAssign for SimTime {
    fn sub_assign(&mut self, rhs: SimTime) {
        self.0 -= rhs.0;
    }
}

/// Canonical decimal form used in traces: seconds with exactly twelve
/// fractional digits, so every picosecond value round-trips.
impl fmt::Display for SimTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let abs = self.0.unsigned_abs();
        write!(
            f,
            "{sign}{}.{:012}",
            abs / PS_PER_SECOND as u64,
            abs % PS_PER_SECOND as u64
        )
    }
}

impl fmt::Debug for SimTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimTime({self})")
    }
}

/// Energy in femtojoule fixed point.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Energy(i128);

impl Energy {
    pub const ZERO: Energy = Energy(0);

    pub const fn from_fj(fj: i128) -> Self {
        Energy(fj)
    }

    pub const fn fj(self) -> i128 {
        self.0
    }

    pub fn from_joules(j: f64) -> Self {
        Energy((j * FJ_PER_JOULE as f64).round() as i128)
    }

    pub fn as_joules(self) -> f64 {
        self.0 as f64 / FJ_PER_JOULE as f64
    }

    /// Per-bit cost times a bit count, the only multiplication energy
    /// accounting needs.
    pub fn scale(self, bits: u64) -> Energy {
        Energy(self.0 * bits as i128)
    }

    pub fn checked_sub(self, other: Energy) -> Option<Energy> {
        if other.0 > self.0 {
            None
        } else {
            Some(Energy(self.0 - other.0))
        }
    }
}

impl Add for Energy {
    type Output = Energy;
    fn add(self, rhs: Energy) -> Energy {
        Energy(self.0 + rhs.0)
    }
}

impl AddAssign for Energy {
    fn add_assign(&mut self, rhs: Energy) {
        self.0 += rhs.0;
    }
}

impl Sub for Energy {
    type Output = Energy;
    fn sub(self, rhs: Energy) -> Energy {
        Energy(self.0 - rhs.0)
    }
}

impl fmt::Display for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Energy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Energy({}fJ)", self.0)
    }
}

/// A node's remaining energy. `Unlimited` is the infinity sentinel scenarios
/// may declare.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Battery {
    Unlimited,
    Finite(Energy),
}

impl Battery {
    pub fn from_joules(j: f64) -> Self {
        if j.is_infinite() {
            Battery::Unlimited
        } else {
            Battery::Finite(Energy::from_joules(j))
        }
    }

    /// Debits `cost`, or reports how much was available. Never goes below
    /// zero.
    pub fn debit(&mut self, cost: Energy) -> Result<(), Energy> {
        match self {
            Battery::Unlimited => Ok(()),
            Battery::Finite(level) => match level.checked_sub(cost) {
                Some(rest) => {
                    *level = rest;
                    Ok(())
                }
                None => Err(*level),
            },
        }
    }

    pub fn remaining(&self) -> Option<Energy> {
        match self {
            Battery::Unlimited => None,
            Battery::Finite(level) => Some(*level),
        }
    }
}
