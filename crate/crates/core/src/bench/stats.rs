/// Arithmetic mean at full precision; rounding is left to display.
pub fn mean_seconds(values: &[f64]) -> f64 {
    assert!(!values.is_empty(), "mean of an empty run list");
    values.iter().sum::<f64>() / values.len() as f64
}

/// `|other - proposed| / proposed * 100`, relative to the proposed average.
pub fn speedup_percent(proposed_avg: f64, other_avg: f64) -> f64 {
    (other_avg - proposed_avg).abs() / proposed_avg * 100.0
}
