// Running verification suites and reading their summaries.

use gallai::harness::{run_suite, Suite, SuiteParams};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let params = SuiteParams {
        max_n: Some(5),
        ..SuiteParams::default()
    };
    for suite in [Suite::Theorem31Sweep, Suite::OracleEq] {
        let out = run_suite(suite, &params)?;
        println!("{}", serde_json::to_string(&out.summary)?);
        if let Some(first) = out.lines.first() {
            println!("  first line: {}", &first[..first.len().min(120)]);
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
