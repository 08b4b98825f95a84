// A seeded verification campaign over several fields, with JSON and CSV output.
//
// `cargo run --example campaign`

use pinned_dot::harness::{run_campaign_with, CampaignConfig, Check, Execution, FieldId, SetSize};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let fields = ["2,2", "5,1", "3,2"]
        .map(|s| s.parse::<FieldId>())
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let mut config = CampaignConfig::new(fields, Check::ALL);
    config.trials = 20;
    config.set_size = SetSize::QPlusOne;
    config.seed = 11;

    let report = run_campaign_with(&config, Execution::Parallel)?;
    for row in &report.summary {
        println!(
            "{:>4} {:<10} pass {:>3} fail {:>3} defects {}",
            row.field,
            row.check.name(),
            row.passed,
            row.failed,
            row.defects
        );
    }
    assert_eq!(report.defects(), 0);

    let serial = run_campaign_with(&config, Execution::Serial)?;
    assert_eq!(report.to_json()?, serial.to_json()?);
    let csv = report.to_csv()?;
    println!(
        "CSV: {} rows, header {:?}",
        csv.lines().count() - 1,
        csv.lines().next().unwrap_or("")
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
