use polycore::IntPoly;

/// Coefficient magnitudes of a working polynomial, kept as certified
/// log2 brackets.
///
/// `up[i] >= log2 |a_i| >= lo[i]`; a `None` entry is a coefficient known to
/// be zero (or, in the soft representation, one whose interval contains
/// zero, which is treated as "no usable lower bound").
pub(crate) struct LogMagPoly {
    pub up: Vec<Option<f64>>,
    pub lo: Vec<Option<f64>>,
}

/// Absolute slack in log2 space; corresponds to a value factor of about
/// `1 + 7e-13` per operation.
const LOG_EPS: f64 = 1.0 / (1u64 << 40) as f64;

pub(crate) fn log_slack_up(x: f64) -> f64 {
    (x + (x.abs() + 1.0) * LOG_EPS).next_up()
}

pub(crate) fn log_slack_down(x: f64) -> f64 {
    (x - (x.abs() + 1.0) * LOG_EPS).next_down()
}

impl LogMagPoly {
    pub fn degree(&self) -> usize {
        self.up.len() - 1
    }

    pub fn from_int(f: &IntPoly) -> Self {
        let up = f
            .coeffs()
            .iter()
            .map(polycore_log2_up)
            .collect::<Vec<_>>();
        let lo = f
            .coeffs()
            .iter()
            .map(polycore_log2_down)
            .collect::<Vec<_>>();
        LogMagPoly { up, lo }
    }
}

fn polycore_log2_up(n: &num_bigint::BigInt) -> Option<f64> {
    crate::soft::bigint_log2_up(n)
}

fn polycore_log2_down(n: &num_bigint::BigInt) -> Option<f64> {
    crate::soft::bigint_log2_down(n)
}
