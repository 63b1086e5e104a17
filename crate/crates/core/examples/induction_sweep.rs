//! Log sweep over B, written as CSV to stdout, plus the fitted power laws.

use vacrad::cli::{fmt_f64, sweep_rows, GridScale, SweepSpec};
use vacrad::quantities::ConstantsTable;
use vacrad::vacuum_radiation::{EvalMode, ReportOptions};

fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let (lx, ly): (Vec<f64>, Vec<f64>) = xs.iter().zip(ys).map(|(x, y)| (x.ln(), y.ln())).unzip();
    let (mx, my) = (lx.iter().sum::<f64>() / n, ly.iter().sum::<f64>() / n);
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

fn main() {
    let spec = SweepSpec {
        field: "B",
        min: 1.0,
        max: 100.0,
        points: 9,
        scale: GridScale::Log,
    };
    let k = ConstantsTable::codata();
    let rows = sweep_rows(
        &spec,
        EvalMode::PaperCoefficients,
        &ReportOptions::default(),
        k,
    );

    println!("B_T,omega,energy_J,intensity_J_per_s");
    for r in &rows {
        println!(
            "{},{},{},{}",
            fmt_f64(r.induction),
            fmt_f64(r.omega.unwrap()),
            fmt_f64(r.energy_j.unwrap()),
            fmt_f64(r.intensity_j_per_s.unwrap())
        );
    }

    let b: Vec<f64> = rows.iter().map(|r| r.induction).collect();
    let energy: Vec<f64> = rows.iter().map(|r| r.energy_j.unwrap()).collect();
    let omega: Vec<f64> = rows.iter().map(|r| r.omega.unwrap()).collect();
    eprintln!("slope energy ~ B: {:.12}", slope(&b, &energy));
    eprintln!("slope omega ~ B:  {:.12}", slope(&b, &omega));
}
