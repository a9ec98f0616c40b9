//! Physical bounds: light-cone reachability and Planck-resolution clock
//! sizing.
//!
//! Clock sizing is exact for interval counts up to and beyond 2^256, so it
//! runs on arbitrary-precision rationals; the light cone works on plain
//! geometry.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::time::SimTime;

pub const SPEED_OF_LIGHT_M_PER_S: f64 = 299_792_458.0;

/// Planck time, the resolution floor for any physical clock.
pub const PLANCK_TIME_SECONDS: f64 = 5.39e-44;

/// Planck time as the exact rational 539 / 10^46 seconds.
pub fn planck_time() -> BigRational {
    BigRational::new(BigInt::from(539u32), BigInt::from(10u32).pow(46))
}

/// Seconds per year, using 365.25 days per year.
pub const SECONDS_PER_YEAR: u64 = 31_557_600;

/// A position in physical space and simulation time.
#[derive(Clone, Copy, PartialEq, Debug)]
pub struct SpaceTimePoint {
    pub t: SimTime,
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl SpaceTimePoint {
    pub fn new(t: SimTime, x: f64, y: f64, z: f64) -> Self {
        SpaceTimePoint { t, x, y, z }
    }

    pub fn position(&self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }

    /// Euclidean distance in meters, ignoring the time coordinate.
    pub fn distance_to(&self, other: &SpaceTimePoint) -> f64 {
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dz = self.z - other.z;
        (dx * dx + dy * dy + dz * dz).sqrt()
    }
}

/// A clock requirement: cover `duration` at `resolution`, both in seconds.
#[derive(Clone, PartialEq, Debug)]
pub struct ClockSpec {
    pub duration: BigRational,
    pub resolution: BigRational,
}

impl ClockSpec {
    pub fn new(duration: BigRational, resolution: BigRational) -> Self {
        ClockSpec {
            duration,
            resolution,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !self.duration.is_positive() {
            return Err(Error::validation("clock duration must be positive"));
        }
        if !self.resolution.is_positive() {
            return Err(Error::validation("clock resolution must be positive"));
        }
        if self.resolution > self.duration {
            return Err(Error::validation(
                "clock resolution must not exceed duration",
            ));
        }
        Ok(())
    }

    /// Number of distinguishable intervals, `ceil(duration / resolution)`.
    pub fn interval_count(&self) -> Result<BigUint> {
        self.validate()?;
        let n = (&self.duration / &self.resolution).ceil().to_integer();
        Ok(n.to_biguint().expect("positive by validation"))
    }
}

/// Bits needed to count every interval of the clock: `ceil(log2(N))` for
/// `N = ceil(duration / resolution)`, and 0 when a single interval suffices.
pub fn clock_bits(spec: &ClockSpec) -> Result<u64> {
    let n = spec.interval_count()?;
    if n <= BigUint::one() {
        return Ok(0);
    }
    Ok((n - BigUint::one()).bits())
}

fn validate_signal_speed(signal_speed: f64) -> Result<()> {
    if !(signal_speed > 0.0) {
        return Err(Error::validation(format!(
            "signal speed must be positive, got {signal_speed}"
        )));
    }
    if signal_speed > SPEED_OF_LIGHT_M_PER_S {
        return Err(Error::validation(format!(
            "signal speed {signal_speed} m/s exceeds the speed of light"
        )));
    }
    Ok(())
}

fn delta_t_secs(origin: &SpaceTimePoint, target: &SpaceTimePoint) -> f64 {
    (target.t.ps() as i128 - origin.t.ps() as i128) as f64 / 1e12
}

/// True iff a signal at `signal_speed` leaving `origin` can reach `target`:
/// the target lies in the future cone and the spatial separation is within
/// `signal_speed * dt`. The cone boundary is inside.
pub fn light_cone_reachable(
    origin: &SpaceTimePoint,
    target: &SpaceTimePoint,
    signal_speed: f64,
) -> Result<bool> {
    validate_signal_speed(signal_speed)?;
    if target.t < origin.t {
        return Ok(false);
    }
    let dt = delta_t_secs(origin, target);
    Ok(origin.distance_to(target) <= signal_speed * dt)
}

/// Signed margin `signal_speed * dt - distance`; non-negative exactly when
/// the target is reachable (given `dt >= 0`).
pub fn light_cone_slack(
    origin: &SpaceTimePoint,
    target: &SpaceTimePoint,
    signal_speed: f64,
) -> Result<f64> {
    validate_signal_speed(signal_speed)?;
    let dt = delta_t_secs(origin, target);
    Ok(signal_speed * dt - origin.distance_to(target))
}

/// Parses a decimal quantity with a time unit into exact rational seconds.
///
/// Units: `s`, `ms`, `us`, `ns`, `d` (86 400 s), `y` (365.25 d), `planck`.
/// A bare unit means one of it ("planck" is one Planck time). Scientific
/// notation is accepted and kept exact, e.g. `5.39e-44`.
pub fn parse_seconds(input: &str) -> Result<BigRational> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::validation("empty quantity"));
    }
    // longest suffix first so "ms" is not read as "s"
    const UNITS: &[(&str, fn() -> BigRational)] = &[
        ("planck", planck_time),
        ("ms", || milli()),
        ("us", || micro()),
        ("ns", || nano()),
        ("s", || BigRational::one()),
        ("y", || BigRational::from_integer(SECONDS_PER_YEAR.into())),
        ("d", || BigRational::from_integer(86_400.into())),
    ];
    fn milli() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(1_000))
    }
    fn micro() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(1_000_000))
    }
    fn nano() -> BigRational {
        BigRational::new(BigInt::one(), BigInt::from(1_000_000_000))
    }

    for (suffix, factor) in UNITS {
        if let Some(mantissa) = s.strip_suffix(suffix) {
            let value = if mantissa.is_empty() {
                BigRational::one()
            } else {
                parse_decimal(mantissa.trim())?
            };
            return Ok(value * factor());
        }
    }
    // no unit: plain seconds
    parse_decimal(s)
}

/// Exact decimal-with-exponent parser: `-12.34e-5` becomes the rational
/// -1234 / 10^6.
pub fn parse_decimal(s: &str) -> Result<BigRational> {
    let bad = || Error::validation(format!("malformed decimal quantity {s:?}"));
    let (mantissa, exponent) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (sign, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (-1, rest),
        None => (1, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = match digits.split_once('.') {
        Some((i, f)) => (i, f),
        None => (digits, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.chars().all(|c| c.is_ascii_digit())
        || !frac_part.chars().all(|c| c.is_ascii_digit())
    {
        return Err(bad());
    }
    let scaled: BigInt = format!("{int_part}{frac_part}")
        .parse()
        .map_err(|_| bad())?;
    let power = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let value = if power >= 0 {
        BigRational::from_integer(scaled * ten.pow(power as u32))
    } else {
        BigRational::new(scaled, ten.pow(power.unsigned_abs() as u32))
    };
    Ok(BigRational::from_integer(BigInt::from(sign)) * value)
}

/// Shortest decimal rendering of a rational that is exactly a terminating
/// decimal, falling back to `numer/denom` otherwise. Used by the CLI echo.
pub fn format_rational(value: &BigRational) -> String {
    if value.is_zero() {
        return "0".to_string();
    }
    let mut denom = value.denom().clone();
    let mut twos = 0u32;
    let mut fives = 0u32;
    let two = BigInt::from(2u32);
    let five = BigInt::from(5u32);
    while (&denom % &two).is_zero() {
        denom /= &two;
        twos += 1;
    }
    while (&denom % &five).is_zero() {
        denom /= &five;
        fives += 1;
    }
    if !denom.is_one() {
        return format!("{}/{}", value.numer(), value.denom());
    }
    let shift = twos.max(fives);
    let scaled = (value.numer() * BigInt::from(10u32).pow(shift)) / value.denom();
    let digits = scaled.magnitude().to_string();
    let sign = if value.is_negative() { "-" } else { "" };
    let shift = shift as usize;
    if shift == 0 {
        return format!("{sign}{digits}");
    }
    let padded = format!("{digits:0>width$}", width = shift + 1);
    let split = padded.len() - shift;
    let frac = padded[split..].trim_end_matches('0');
    if frac.is_empty() {
        format!("{sign}{}", &padded[..split])
    } else {
        format!("{sign}{}.{frac}", &padded[..split])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn secs(n: u64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    #[test]
    fn planck_clock_for_a_millennium() {
        // 1000 years of Planck intervals: the number that motivates wide
        // clock fields
        let spec = ClockSpec::new(secs(1000 * SECONDS_PER_YEAR), planck_time());
        assert_eq!(clock_bits(&spec).unwrap(), 179);
    }

    #[test]
    fn single_interval_needs_no_counter() {
        let spec = ClockSpec::new(secs(5), secs(5));
        assert_eq!(clock_bits(&spec).unwrap(), 0);
    }

    #[test]
    fn exact_power_of_two() {
        let spec = ClockSpec::new(secs(256), secs(1));
        assert_eq!(clock_bits(&spec).unwrap(), 8);
        let spec = ClockSpec::new(secs(257), secs(1));
        assert_eq!(clock_bits(&spec).unwrap(), 9);
    }

    #[test]
    fn exact_far_beyond_u128() {
        let spec = ClockSpec::new(
            BigRational::from_integer(BigInt::from(2u32).pow(256)),
            secs(1),
        );
        assert_eq!(clock_bits(&spec).unwrap(), 256);
        let spec = ClockSpec::new(
            BigRational::from_integer(BigInt::from(2u32).pow(256) + 1),
            secs(1),
        );
        assert_eq!(clock_bits(&spec).unwrap(), 257);
    }

    #[test]
    fn invalid_specs_rejected() {
        assert!(clock_bits(&ClockSpec::new(secs(0), secs(1))).is_err());
        assert!(clock_bits(&ClockSpec::new(secs(1), secs(2))).is_err());
        assert!(clock_bits(&ClockSpec::new(
            secs(1),
            BigRational::from_integer((-1).into())
        ))
        .is_err());
    }

    fn at(t: f64, x: f64) -> SpaceTimePoint {
        SpaceTimePoint::new(SimTime::from_secs_f64(t), x, 0.0, 0.0)
    }

    #[test]
    fn zero_distance_is_reachable() {
        let a = at(0.0, 0.0);
        let b = at(1.0, 0.0);
        assert!(light_cone_reachable(&a, &b, 1.0).unwrap());
    }

    #[test]
    fn past_cone_is_unreachable() {
        let a = at(1.0, 0.0);
        let b = at(0.0, 0.0);
        assert!(!light_cone_reachable(&a, &b, SPEED_OF_LIGHT_M_PER_S).unwrap());
        assert!(light_cone_slack(&a, &b, SPEED_OF_LIGHT_M_PER_S).unwrap() < 0.0);
    }

    #[test]
    fn boundary_is_inclusive() {
        let a = at(0.0, 0.0);
        let b = at(1.0, SPEED_OF_LIGHT_M_PER_S);
        assert!(light_cone_reachable(&a, &b, SPEED_OF_LIGHT_M_PER_S).unwrap());
        assert_eq!(
            light_cone_slack(&a, &b, SPEED_OF_LIGHT_M_PER_S).unwrap(),
            0.0
        );
        // one meter past the boundary is out
        let c = at(1.0, SPEED_OF_LIGHT_M_PER_S + 1.0);
        assert!(!light_cone_reachable(&a, &c, SPEED_OF_LIGHT_M_PER_S).unwrap());
    }

    #[test]
    fn speed_validation() {
        let a = at(0.0, 0.0);
        let b = at(1.0, 0.0);
        assert!(light_cone_reachable(&a, &b, 0.0).is_err());
        assert!(light_cone_reachable(&a, &b, -5.0).is_err());
        assert!(light_cone_reachable(&a, &b, SPEED_OF_LIGHT_M_PER_S * 1.001).is_err());
    }

    #[test]
    fn quantity_parsing() {
        assert_eq!(parse_seconds("1000y").unwrap(), secs(31_557_600_000));
        assert_eq!(parse_seconds("planck").unwrap(), planck_time());
        assert_eq!(parse_seconds("5.39e-44").unwrap(), planck_time());
        assert_eq!(
            parse_seconds("250ms").unwrap(),
            BigRational::new(1.into(), 4.into())
        );
        assert_eq!(parse_seconds("1d").unwrap(), secs(86_400));
        assert_eq!(parse_seconds("3s").unwrap(), secs(3));
        assert_eq!(
            parse_seconds("2.5us").unwrap(),
            BigRational::new(1.into(), 400_000.into())
        );
        assert!(parse_seconds("12 parsecs").is_err());
        assert!(parse_seconds("").is_err());
        assert!(parse_seconds("1.2.3s").is_err());
    }

    #[test]
    fn rational_formatting() {
        assert_eq!(format_rational(&secs(31_557_600_000)), "31557600000");
        assert_eq!(
            format_rational(&BigRational::new(1.into(), 4.into())),
            "0.25"
        );
        assert_eq!(format_rational(&planck_time()), "0.0000000000000000000000000000000000000000000539");
        assert_eq!(
            format_rational(&BigRational::new(1.into(), 3.into())),
            "1/3"
        );
    }
}
