// Driving the command line in-process: generate, then check from stdin.
//
// `cargo run --example cli_pipeline`

use geodkit::cli::run;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let generated = run(
        &["geodkit", "gen", "diam2", "--q", "2", "--cycle"],
        &mut std::io::empty(),
    );
    print!("{}", generated.stdout);
    let checked = run(
        &["geodkit", "check", "-", "--json"],
        &mut generated.stdout.as_bytes(),
    );
    print!("{}", checked.stdout);
    println!("exit code {}", checked.exit_code);

    let square = run(
        &["geodkit", "check", "-"],
        &mut "4\n0 1\n1 2\n2 3\n3 0".as_bytes(),
    );
    print!("{}", square.stdout);
    println!("exit code {}", square.exit_code);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
