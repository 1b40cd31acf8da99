//! Decimal display of exact values.

/// Six significant digits.
pub fn sig6(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    let s = format!("{:.*}", decimals, x);
    // Rounding can carry into a new digit (9.999995 -> 10.00000).
    let carried = s.parse::<f64>().is_ok_and(|y| y.abs() >= 10f64.powi(mag + 1));
    if carried && decimals > 0 {
        format!("{:.*}", decimals - 1, x)
    } else {
        s
    }
}
