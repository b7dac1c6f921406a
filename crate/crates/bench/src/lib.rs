//! Inputs shared by the criterion benches.

use riordan::rational::ratio;
use riordan::FormalPowerSeries;

/// A dense series with constant term 1 and small, varied rational coefficients.
pub fn unit_series(len: usize) -> FormalPowerSeries {
    FormalPowerSeries::from_fn(len, |i| {
        if i == 0 {
            ratio(1, 1)
        } else {
            ratio((i as i64 * 7) % 11 - 5, (i as i64 % 5) + 1)
        }
    })
    .expect("len > 0")
}

/// `t * unit_series(len - 1)`, a series of order exactly one.
pub fn order_one_series(len: usize) -> FormalPowerSeries {
    unit_series(len - 1).shift_up(1)
}
