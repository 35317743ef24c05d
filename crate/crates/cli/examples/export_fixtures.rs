//! Writes the `.gsa` fixtures shipped in `fixtures/`.
//!
//! Usage: `cargo run -p superlr-cli --example export_fixtures [-- OUT_DIR]`

use std::path::PathBuf;

fn main() {
    let out = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "fixtures".into()));
    std::fs::create_dir_all(&out).expect("output directory");
    for (name, text) in superlr_cli::shipped::fixture_files() {
        std::fs::write(out.join(name), text).expect("write fixture");
    }
}
