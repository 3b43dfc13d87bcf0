//! Text renderings of sweep results.

use super::config::Units;
use super::sweep::Point;
use crate::entangle::EntanglementReport;

/// Fixed-point rendering with `digits` significant digits.
pub fn format_sig(x: f64, digits: usize) -> String {
    assert!(digits >= 1);
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { format!("{:.*}", digits - 1, 0.0) } else { x.to_string() };
    }
    // The exponent after rounding to `digits` significant figures.
    let sci = format!("{:.*e}", digits - 1, x);
    let exp: i32 = sci.rsplit_once('e').and_then(|(_, e)| e.parse().ok()).unwrap_or(0);
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

pub fn value_in(report: &EntanglementReport, units: Units) -> f64 {
    match units {
        Units::Bits => report.measure_bits,
        Units::Nats => report.measure_nats,
    }
}

pub fn csv_header(units: Units) -> String {
    format!("t,m,family,N,S_f_{units}")
}

/// CSV with one row per existing state; LF line endings.
pub fn render_csv(points: &[Point], units: Units) -> String {
    let mut out = csv_header(units);
    out.push('\n');
    for p in points {
        if let Ok(r) = &p.result {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                p.spec.t(),
                p.spec.m,
                p.spec.family,
                p.spec.n,
                format_sig(value_in(r, units), 12)
            ));
        }
    }
    out
}

/// JSON array mirroring the report fields; missing states carry an `error`.
pub fn render_json(points: &[Point]) -> String {
    let rows: Vec<serde_json::Value> = points
        .iter()
        .map(|p| match &p.result {
            Ok(r) => serde_json::to_value(r).expect("serializable"),
            Err(e) => serde_json::json!({
                "family": p.spec.family,
                "N": p.spec.n,
                "m": p.spec.m,
                "t": p.spec.t(),
                "error": e.to_string(),
            }),
        })
        .collect();
    serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
}

pub fn render_report_json(report: &EntanglementReport) -> String {
    serde_json::to_string_pretty(report).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::sweep::sweep;
    use crate::states::{Family, FamilySpec};

    #[test]
    fn significant_digits() {
        assert_eq!(format_sig(0.811278124459133, 12), "0.811278124459");
        assert_eq!(format_sig(1.5, 12), "1.50000000000");
        assert_eq!(format_sig(0.0, 12), "0.00000000000");
        assert_eq!(format_sig(9.9999999999999, 12), "10.0000000000");
        assert_eq!(format_sig(0.000123456789012345, 12), "0.000123456789012");
    }

    #[test]
    fn csv_layout() {
        let pts = sweep(&[FamilySpec::new(Family::Laughlin, 2, 3), FamilySpec::new(Family::Chi, 2, 7)], 1, 5);
        let csv = render_csv(&pts, Units::Bits);
        assert_eq!(csv, "t,m,family,N,S_f_bits\n1,3,laughlin,2,0.811278124459\n");
        let json = render_json(&pts);
        let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(parsed[0]["family"], "laughlin");
        assert!(parsed[1]["error"].as_str().unwrap().contains("zero wavefunction"));
    }
}
