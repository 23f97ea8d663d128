//! Per-point reports, parameter scans and plot-ready figure data.
//!
//! All text output is locale-independent: `.` decimal point, `\n` line ends,
//! numbers with 10 significant digits, booleans as `true`/`false`.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{
    antidegradability_contour, antidegradability_test, best_quantum_upper_bound, classical_equals_a_boundary,
    entanglement_breaking_test, flag_bound_a, flag_bound_b, private_capacity_upper, quantum_capacity_interval,
    BoundSource, BOUNDARY_TOL,
};
use crate::channel::ChannelParams;
use crate::error::{Error, Result};
use crate::exact::{classical_capacity, entanglement_assisted_capacity, Branch};
use crate::optimize::OptimizerConfig;
use crate::oracle::simplex_lattice;

pub const SIGNIFICANT_DIGITS: usize = 10;

/// `%g`-style rendering with [`SIGNIFICANT_DIGITS`] significant digits and
/// trailing zeros trimmed.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa.to_owned()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        let t = s.trim_end_matches('0').trim_end_matches('.');
        if t == "-0" {
            "0".into()
        } else {
            t.to_owned()
        }
    } else {
        s
    }
}

/// Round to [`SIGNIFICANT_DIGITS`] digits (used for JSON output).
pub fn round_sig(x: f64) -> f64 {
    fmt_num(x).parse().unwrap_or(x)
}

/// Everything computed at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CapacityReport {
    pub p0: f64,
    pub p3: f64,
    pub p1: f64,
    pub epsilon: f64,
    pub c_cl: f64,
    pub xi: f64,
    pub branch: Branch,
    pub c_e: f64,
    pub upper_a: f64,
    pub upper_b: f64,
    pub best_upper: f64,
    pub best_upper_source: BoundSource,
    pub lower: f64,
    pub lower_argmax: Option<(f64, f64)>,
    pub private_upper: f64,
    pub eb: bool,
    pub ad: bool,
    pub ad_margin: f64,
    pub pt_eigenvalues: [f64; 4],
    pub known_zero: bool,
}

impl CapacityReport {
    pub fn compute(p: &ChannelParams, cfg: &OptimizerConfig) -> Self {
        let cl = classical_capacity(p);
        let q = quantum_capacity_interval(p, cfg);
        let eb = entanglement_breaking_test(p);
        let ad = antidegradability_test(p);
        Self {
            p0: p.p0(),
            p3: p.p3(),
            p1: p.p1(),
            epsilon: p.epsilon(),
            c_cl: cl.value,
            xi: cl.xi,
            branch: cl.branch,
            c_e: entanglement_assisted_capacity(p),
            upper_a: q.upper_a,
            upper_b: q.upper_b,
            best_upper: q.best_upper,
            best_upper_source: q.best_upper_source,
            lower: q.lower_single_shot,
            lower_argmax: q.lower_argmax,
            private_upper: private_capacity_upper(p),
            eb: eb.entanglement_breaking,
            ad: ad.antidegradable,
            ad_margin: ad.margin,
            pt_eigenvalues: eb.pt_eigenvalues,
            known_zero: q.capacity_known_zero,
        }
    }

    /// Aligned `key = value` text.
    pub fn to_text(&self) -> String {
        let n = fmt_num;
        let argmax = match self.lower_argmax {
            Some((r, z)) => format!("({}, {})", n(r), n(z)),
            None => "-".into(),
        };
        let pt = self.pt_eigenvalues.map(n).join(", ");
        let lines: Vec<(&str, String)> = vec![
            ("p0", n(self.p0)),
            ("p3", n(self.p3)),
            ("p1", n(self.p1)),
            ("epsilon", n(self.epsilon)),
            ("C_cl", n(self.c_cl)),
            ("xi", n(self.xi)),
            ("branch", self.branch.to_string()),
            ("C_E", n(self.c_e)),
            ("A", n(self.upper_a)),
            ("B", n(self.upper_b)),
            ("best_upper", n(self.best_upper)),
            ("best_upper_source", self.best_upper_source.to_string()),
            ("lower", n(self.lower)),
            ("lower_argmax", argmax),
            ("private_upper", n(self.private_upper)),
            ("eb", self.eb.to_string()),
            ("ad", self.ad.to_string()),
            ("ad_margin", n(self.ad_margin)),
            ("pt_eigenvalues", format!("[{pt}]")),
            ("known_zero", self.known_zero.to_string()),
        ];
        let width = lines.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in lines {
            writeln!(out, "{k:<width$} = {v}").expect("write to string");
        }
        out
    }

    /// Copy with every float rounded to [`SIGNIFICANT_DIGITS`] digits.
    pub fn rounded(&self) -> Self {
        let r = round_sig;
        Self {
            p0: r(self.p0),
            p3: r(self.p3),
            p1: r(self.p1),
            epsilon: r(self.epsilon),
            c_cl: r(self.c_cl),
            xi: r(self.xi),
            c_e: r(self.c_e),
            upper_a: r(self.upper_a),
            upper_b: r(self.upper_b),
            best_upper: r(self.best_upper),
            lower: r(self.lower),
            lower_argmax: self.lower_argmax.map(|(a, b)| (r(a), r(b))),
            private_upper: r(self.private_upper),
            ad_margin: r(self.ad_margin),
            pt_eigenvalues: self.pt_eigenvalues.map(r),
            ..self.clone()
        }
    }
}

/// One row of a parameter scan.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRow {
    pub p0: f64,
    pub p3: f64,
    pub p1: f64,
    pub c_cl: f64,
    pub xi: f64,
    pub branch: Branch,
    pub c_e: f64,
    pub a: f64,
    pub b: f64,
    pub best_upper: f64,
    pub best_upper_source: BoundSource,
    /// `None` when the scan skipped the optimizer.
    pub lower: Option<f64>,
    pub eb: bool,
    pub ad: bool,
    pub known_zero: bool,
}

pub const SCAN_HEADER: &str = "p0,p3,p1,C_cl,xi,branch,C_E,A,B,best_upper,best_upper_source,lower,eb,ad,known_zero";
pub const SCAN_HEADER_SKIP_LOWER: &str = "p0,p3,p1,C_cl,xi,branch,C_E,A,B,best_upper,best_upper_source,eb,ad,known_zero";

impl ScanRow {
    pub fn compute(p: &ChannelParams, lower: Option<&OptimizerConfig>) -> Self {
        let cl = classical_capacity(p);
        let (best_upper, best_upper_source) = best_quantum_upper_bound(p);
        let ad = antidegradability_test(p).antidegradable;
        let lower = lower.map(|cfg| quantum_capacity_interval(p, cfg).lower_single_shot);
        Self {
            p0: p.p0(),
            p3: p.p3(),
            p1: p.p1(),
            c_cl: cl.value,
            xi: cl.xi,
            branch: cl.branch,
            c_e: entanglement_assisted_capacity(p),
            a: flag_bound_a(p),
            b: flag_bound_b(p),
            best_upper,
            best_upper_source,
            lower,
            eb: entanglement_breaking_test(p).entanglement_breaking,
            ad,
            known_zero: ad,
        }
    }

    pub fn to_csv(&self) -> String {
        let n = fmt_num;
        let mut fields = vec![
            n(self.p0),
            n(self.p3),
            n(self.p1),
            n(self.c_cl),
            n(self.xi),
            self.branch.to_string(),
            n(self.c_e),
            n(self.a),
            n(self.b),
            n(self.best_upper),
            self.best_upper_source.to_string(),
        ];
        if let Some(lower) = self.lower {
            fields.push(n(lower));
        }
        fields.extend([self.eb.to_string(), self.ad.to_string(), self.known_zero.to_string()]);
        fields.join(",")
    }
}

/// Rows for every feasible point of the `grid_n × grid_n` lattice, ordered by
/// `(p0, p3)`. `lower = None` skips the optimizer.
pub fn scan(grid_n: usize, lower: Option<&OptimizerConfig>) -> Result<Vec<ScanRow>> {
    if grid_n < 2 {
        return Err(Error::Domain(format!("grid size {grid_n} must be at least 2")));
    }
    Ok(simplex_lattice(grid_n)
        .par_iter()
        .map(|p| ScanRow::compute(p, lower))
        .collect())
}

pub fn scan_csv(rows: &[ScanRow], with_lower: bool) -> String {
    let mut out = String::new();
    out.push_str(if with_lower { SCAN_HEADER } else { SCAN_HEADER_SKIP_LOWER });
    out.push('\n');
    for row in rows {
        out.push_str(&row.to_csv());
        out.push('\n');
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Figure {
    Fig2,
    Fig3,
    Fig4,
    Fig5,
}

impl std::str::FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fig2" => Ok(Figure::Fig2),
            "fig3" => Ok(Figure::Fig3),
            "fig4" => Ok(Figure::Fig4),
            "fig5" => Ok(Figure::Fig5),
            other => Err(Error::Domain(format!("unknown figure id {other:?} (expected fig2|fig3|fig4|fig5)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureOptions {
    /// Lattice size for the region maps (fig2–fig4).
    pub grid: usize,
    /// Points along `s = p0 + p3 ∈ [0, 1]` for fig5.
    pub samples: usize,
    /// Asymmetry values for fig5.
    pub eps: Vec<f64>,
    /// Points along the contour/boundary polylines.
    pub curve_samples: usize,
    pub optimizer: OptimizerConfig,
}

impl Default for FigureOptions {
    fn default() -> Self {
        Self {
            grid: 201,
            samples: 101,
            eps: vec![0.2, 0.4, 0.6, 0.8, 1.0],
            curve_samples: 100,
            optimizer: OptimizerConfig::default(),
        }
    }
}

/// A named CSV document produced by a figure command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FigureFile {
    pub name: String,
    pub contents: String,
}

pub fn figure_data(which: Figure, opts: &FigureOptions) -> Result<Vec<FigureFile>> {
    if opts.grid < 2 {
        return Err(Error::Domain(format!("grid size {} must be at least 2", opts.grid)));
    }
    let n = fmt_num;
    let lattice = simplex_lattice(opts.grid);
    let files = match which {
        Figure::Fig2 => {
            let body = rows_csv("p0,p3,xi,branch,C_cl", &lattice, |p| {
                let c = classical_capacity(p);
                format!("{},{},{},{},{}", n(p.p0()), n(p.p3()), n(c.xi), c.branch, n(c.value))
            });
            vec![FigureFile { name: "fig2.csv".into(), contents: body }]
        }
        Figure::Fig3 => {
            let body = rows_csv("p0,p3,eb,ad,ad_margin", &lattice, |p| {
                let eb = entanglement_breaking_test(p);
                let ad = antidegradability_test(p);
                format!(
                    "{},{},{},{},{}",
                    n(p.p0()),
                    n(p.p3()),
                    eb.entanglement_breaking,
                    ad.antidegradable,
                    n(ad.margin)
                )
            });
            let mut contour = String::from("p0,p3\n");
            for (p0, p3) in antidegradability_contour(opts.curve_samples.max(2)) {
                writeln!(contour, "{},{}", n(p0), n(p3)).expect("write to string");
            }
            vec![
                FigureFile { name: "fig3.csv".into(), contents: body },
                FigureFile { name: "fig3_contour.csv".into(), contents: contour },
            ]
        }
        Figure::Fig4 => {
            let body = rows_csv("p0,p3,best_upper,best_upper_source,A,C_cl", &lattice, |p| {
                let (best, source) = best_quantum_upper_bound(p);
                format!(
                    "{},{},{},{},{},{}",
                    n(p.p0()),
                    n(p.p3()),
                    n(best),
                    source,
                    n(flag_bound_a(p)),
                    n(classical_capacity(p).value)
                )
            });
            let mut boundary = String::from("s,eps,p0,p3,A,C_cl\n");
            for (s, eps) in classical_a_boundary_curve(opts.curve_samples.max(1))? {
                for e in [eps, -eps] {
                    let p = ChannelParams::from_weight_asymmetry(s, e)?;
                    writeln!(
                        boundary,
                        "{},{},{},{},{},{}",
                        n(s),
                        n(e),
                        n(p.p0()),
                        n(p.p3()),
                        n(flag_bound_a(&p)),
                        n(classical_capacity(&p).value)
                    )
                    .expect("write to string");
                    if eps == 0.0 {
                        break;
                    }
                }
            }
            vec![
                FigureFile { name: "fig4.csv".into(), contents: body },
                FigureFile { name: "fig4_boundary.csv".into(), contents: boundary },
            ]
        }
        Figure::Fig5 => {
            let mut files = Vec::new();
            for &eps in &opts.eps {
                let rows = fig5_curve(eps, opts.samples, &opts.optimizer)?;
                let mut body = String::from("s,upper,lower\n");
                for (s, upper, lower) in rows {
                    writeln!(body, "{},{},{}", n(s), n(upper), n(lower)).expect("write to string");
                }
                files.push(FigureFile {
                    name: format!("fig5_eps_{}.csv", n(eps)),
                    contents: body,
                });
            }
            files
        }
    };
    Ok(files)
}

fn rows_csv(header: &str, lattice: &[ChannelParams], row: impl Fn(&ChannelParams) -> String + Sync + Send) -> String {
    let rows: Vec<String> = lattice.par_iter().map(&row).collect();
    let mut out = String::with_capacity(rows.len() * 48);
    out.push_str(header);
    out.push('\n');
    for r in rows {
        out.push_str(&r);
        out.push('\n');
    }
    out
}

/// `(s, ε)` roots of `C_cl = A` for `s = k/samples`, `k = 1..=samples`.
pub fn classical_a_boundary_curve(samples: usize) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::new();
    for k in 1..=samples {
        let s = k as f64 / samples as f64;
        if let Some(eps) = classical_equals_a_boundary(s, BOUNDARY_TOL)? {
            out.push((s, eps));
        }
    }
    Ok(out)
}

/// `(s, best upper, single-shot lower)` along a line of fixed asymmetry.
pub fn fig5_curve(eps: f64, samples: usize, cfg: &OptimizerConfig) -> Result<Vec<(f64, f64, f64)>> {
    if samples < 2 {
        return Err(Error::Domain(format!("need at least two samples, got {samples}")));
    }
    let points: Vec<f64> = (0..samples).map(|i| i as f64 / (samples - 1) as f64).collect();
    let params: Vec<ChannelParams> = points
        .iter()
        .map(|&s| ChannelParams::from_weight_asymmetry(s, eps))
        .collect::<Result<_>>()?;
    Ok(params
        .iter()
        .zip(&points)
        .map(|(p, &s)| {
            let q = quantum_capacity_interval(p, cfg);
            (s, q.best_upper, q.lower_single_shot)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formatting() {
        assert_eq!(fmt_num(0.0), "0");
        assert_eq!(fmt_num(-0.0), "0");
        assert_eq!(fmt_num(1.0), "1");
        assert_eq!(fmt_num(0.5), "0.5");
        assert_eq!(fmt_num(2.0 / 3.0), "0.6666666667");
        assert_eq!(fmt_num(0.1887218755408671), "0.1887218755");
        assert_eq!(fmt_num(-0.2), "-0.2");
        assert_eq!(fmt_num(1.5e-7), "1.5e-7");
        assert_eq!(fmt_num(123456.789), "123456.789");
        assert_eq!(fmt_num(0.99999999999), "1");
        assert_eq!(fmt_num(-1e-17), "-1e-17");
        assert_eq!(round_sig(0.1887218755408671), 0.1887218755);
    }

    #[test]
    fn scan_row_count_and_order() {
        let rows = scan(3, None).unwrap();
        assert_eq!(rows.len(), 6);
        let keys: Vec<_> = rows.iter().map(|r| (r.p0, r.p3)).collect();
        let mut sorted = keys.clone();
        sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert_eq!(keys, sorted);
        assert!(scan(1, None).is_err());
    }

    #[test]
    fn csv_headers() {
        let rows = scan(2, None).unwrap();
        let csv = scan_csv(&rows, false);
        assert!(csv.starts_with(SCAN_HEADER_SKIP_LOWER));
        for line in csv.lines() {
            assert_eq!(line.split(',').count(), 14);
        }
        let rows = scan(2, Some(&OptimizerConfig { grid_resolution: 11, ..Default::default() })).unwrap();
        let csv = scan_csv(&rows, true);
        assert_eq!(csv.lines().next().unwrap(), SCAN_HEADER);
        for line in csv.lines() {
            assert_eq!(line.split(',').count(), 15);
        }
    }

    #[test]
    fn unknown_figure() {
        assert!("fig9".parse::<Figure>().is_err());
        assert_eq!("fig4".parse::<Figure>().unwrap(), Figure::Fig4);
    }

    #[test]
    fn point_report_identity_channel() {
        let p = ChannelParams::new(1.0, 0.0).unwrap();
        let r = CapacityReport::compute(&p, &OptimizerConfig::default());
        assert_eq!((r.c_cl, r.c_e, r.best_upper), (1.0, 2.0, 1.0));
        assert!((r.lower - 1.0).abs() < 1e-12);
        assert!(!r.known_zero);
        let text = r.to_text();
        assert!(text.contains("C_E               = 2\n"), "{text}");
    }
}
