// Recompute the published estimates and print the verdict table.

use qubit_dephasing::report::{audit_entries, render_audit_text, Verdict};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let entries = audit_entries();
    print!("{}", render_audit_text(&entries));
    let flagged = entries.iter().filter(|e| e.verdict != Verdict::Match).count();
    println!("{flagged} of {} claims need a closer look", entries.len());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
