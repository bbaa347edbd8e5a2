//! Load the bundled suites and print one line per verification.
//!
//! ```text
//! cargo run --example run_suite -- path/to/manifest.json
//! ```

use std::path::PathBuf;

use bordyn::scenario::run_suite;

fn main() -> bordyn::Result<()> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    let suites: Vec<PathBuf> = match std::env::args_os().nth(1) {
        Some(path) => vec![path.into()],
        None => vec![
            dir.join("default.suite.json"),
            dir.join("controls.suite.json"),
        ],
    };
    for suite in suites {
        println!("{}", suite.display());
        for r in run_suite(&suite)? {
            let mark = if r.as_expected { "ok  " } else { "MISS" };
            println!(
                "  {mark} {:<26} {:<26} {:?}",
                r.entry, r.outcome.verifier, r.outcome.status
            );
        }
    }
    Ok(())
}
