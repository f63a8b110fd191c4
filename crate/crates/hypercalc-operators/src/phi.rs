/// The p-Laplacian nonlinearity x ↦ |x|^{p−2}·x, continuously extended by
/// 0 at x = 0 (which also covers the 1 < p < 2 singularity).
pub fn signed_power(x: f64, p: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.abs().powf(p - 2.0) * x
    }
}

/// Validates a p-Laplacian exponent: finite and strictly greater than 1.
pub(crate) fn check_p(p: f64) -> Result<(), crate::OperatorError> {
    if p.is_finite() && p > 1.0 {
        Ok(())
    } else {
        Err(crate::OperatorError::InvalidP { p })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_maps_to_zero_for_every_p() {
        for p in [1.5, 2.0, 3.0, 10.0] {
            assert_eq!(signed_power(0.0, p), 0.0);
        }
    }

    #[test]
    fn p_two_is_the_identity() {
        for x in [-3.5, -1.0, 0.25, 7.0] {
            assert_eq!(signed_power(x, 2.0), x);
        }
    }

    #[test]
    fn sign_is_preserved() {
        assert_eq!(signed_power(-1.5, 3.0), -2.25);
        assert_eq!(signed_power(1.5, 3.0), 2.25);
        assert!((signed_power(4.0, 1.5) - 2.0).abs() < 1e-15);
    }

    #[test]
    fn p_outside_the_open_interval_is_rejected() {
        for p in [1.0, 0.5, f64::INFINITY, f64::NAN] {
            assert!(check_p(p).is_err(), "p = {p} should be rejected");
        }
        assert!(check_p(1.0001).is_ok());
    }
}
