//! Runs the command-line front end in process on a shipped fixture.

use std::path::Path;

fn main() {
    let fixture = Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/b4co.bundle");
    let code = tripoisson::cli::main_with([
        "tripoisson",
        "verify",
        fixture.to_str().unwrap(),
        "--family",
        "admissible",
    ]);
    println!("exit code {code}");
}
