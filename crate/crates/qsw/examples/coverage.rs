//! Coverage of the real sphere by preparation families of growing size.
//!
//! Prints the covering radius (largest projective angle from any probe to
//! its nearest family state) for a few families, including the 101x101
//! family at theta = 9/101, phi = 4 pi / 101.

use std::f64::consts::{PI, TAU};

use qsw::prep::{covering_radius, PrepFamily};

fn main() {
    for n in [13usize, 26, 52] {
        let spacing = TAU / n as f64;
        let family = PrepFamily::real(spacing, spacing, n).unwrap();
        let report = covering_radius(&family, 10_000, 42).unwrap();
        println!(
            "n = {n:3}  states = {:5}  covering radius = {:.15}",
            report.num_states, report.covering_radius
        );
    }

    let family = PrepFamily::real(9.0 / 101.0, 4.0 * PI / 101.0, 101).unwrap();
    let report = covering_radius(&family, 10_000, 42).unwrap();
    let w = report.worst_target.amplitudes();
    println!(
        "n = 101  states = {}  covering radius = {:.15}",
        report.num_states, report.covering_radius
    );
    println!(
        "worst-covered target: ({:.12}, {:.12}, {:.12})",
        w.0[0].re, w.0[1].re, w.0[2].re
    );
}
