//! Manifests and the report commands behind the `torus-genus` binary.
//!
//!     cargo run --example manifest_cli

use torus_genus::cli::{describe, genus, main_with, verify, Manifest, Report, Theorem, Twist};

const HIRZEBRUCH: &str = "
# Hirzebruch surface H₁ with one twisting line bundle
[polytope]
builtin = cube 2
[lambda]
row = 1 0 -1 0
row = 0 1 1 -1
[bundles]
v = 1 0 0 0
";

fn main() -> torus_genus::Result<()> {
    let manifest = Manifest::parse(HIRZEBRUCH)?;
    print!("{}", describe(&manifest)?.text);
    print!("{}", genus(&manifest, Twist::Custom, 3, None)?.text);
    print!("{}", genus(&manifest, Twist::Custom, 1, Some(&[1, 3]))?.text);

    // Failed hypotheses become reports too, with their exit status.
    for theorem in [Theorem::IndexI, Theorem::Thm34] {
        let report = verify(Some(&manifest), theorem, 2, 3).unwrap_or_else(|e| Report::from_error(&e));
        println!("{} (exit {})", report.json, report.status as i32);
    }

    // Round trip through the canonical text form.
    let text = manifest.serialize();
    assert_eq!(Manifest::parse(&text)?, manifest);
    print!("{text}");

    // The same entry point the binary uses.
    let code = main_with(["torus-genus", "verify", "--theorem", "table1"]);
    println!("exit {code}");
    Ok(())
}
