//! Classical genera of ℂPⁿ, both through localization and through the
//! face ring.
//!
//!     cargo run --example projective_spaces

use torus_genus::exactalg::fmt_rational;
use torus_genus::genus::{a_hat_genus, cohomological_index, elliptic_genus, euler_characteristic, index, signature, BundleSpec};
use torus_genus::polytope::QuasitoricManifold;

fn main() -> torus_genus::Result<()> {
    for n in 1..=4 {
        let m = QuasitoricManifold::projective_space(n)?;
        print!("CP{n}: χ = {}", euler_characteristic(&m)?);
        if n % 2 == 0 {
            print!(", σ = {}", fmt_rational(&signature(&m)?));
        }
        if m.is_spin() {
            print!(", Â = {}", fmt_rational(&a_hat_genus(&m)?));
            let ell = elliptic_genus(&m, 2)?;
            print!(", elliptic genus {}", ell.to_strings().join(" "));
        }
        println!();

        // Spin^c Dirac index with the default class c = Σ vᵢ: the Todd genus, 1.
        let todd = index(&m, &BundleSpec::none(), 0)?;
        let check = cohomological_index(&m, &BundleSpec::none(), 0)?;
        assert_eq!(todd, check);
        println!("      Spin^c index {}", fmt_rational(todd.coeff(0)));
    }
    Ok(())
}
