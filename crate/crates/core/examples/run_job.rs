// Running a JSON job in process, as the command line tool does.

use twisted_mackey::job::{run_source, RunConfig};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let job = r#"{
        "group": {"cyclic": 2},
        "ring": {"gf": {"p": 3, "k": 2}},
        "action": {"frobenius": 1},
        "task": {"verify-mackey": {"instance": "endomorphism"}}
    }"#;
    let outcome = run_source(job, &RunConfig::default())?;
    print!("{}", outcome.text);
    println!("exit status {:?}, report of {} bytes", outcome.status, outcome.report.to_json().len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
