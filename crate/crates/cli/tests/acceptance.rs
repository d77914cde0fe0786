//! One verdict line per acceptance criterion, from the golden table.
//!
//! Known failure: the expansion `y ∼ 2 + 3t` at the second ideal point of
//! 5.2 cannot hold. Along that branch `x` has a simple pole and
//! `x²(y − 1)(y − 2) → 1` as `y → 2`, which forces `v(y − 2) = 2`; the
//! computed expansion is `y = 2 + t² + …`. The row is reported as FAIL and
//! criterion 4 fails with it; every other row must pass.

use knot_model::Database;
use torvar::goldens::{run, summary};
use torvar::Settings;

const KNOWN_FAILURES: [(u8, &str); 1] = [(4, "5.2 ideal-2: y ∼ 2 + 3t")];

fn main() {
    let rows = run(&Settings::new(Database::bundled()), None).unwrap();
    for (n, title, pass, count) in summary(&rows) {
        println!("criterion {n} ({title}): {} [{count} rows]", if pass { "PASS" } else { "FAIL" });
        for r in rows.iter().filter(|r| r.criterion == n && !r.pass) {
            println!("    FAIL {}: expected {}, computed {}", r.name, r.expected, r.computed);
        }
    }
    assert_eq!(summary(&rows).len(), 10);
    let unexpected: Vec<String> = rows
        .iter()
        .filter(|r| !r.pass && !KNOWN_FAILURES.contains(&(r.criterion, r.name.as_str())))
        .map(|r| format!("criterion {} {}: expected {}, computed {}", r.criterion, r.name, r.expected, r.computed))
        .collect();
    // A known failure that starts passing should be removed from the list.
    let stale: Vec<&str> = KNOWN_FAILURES
        .iter()
        .filter(|(n, name)| rows.iter().any(|r| r.criterion == *n && r.name == *name && r.pass))
        .map(|(_, name)| *name)
        .collect();
    if !unexpected.is_empty() || !stale.is_empty() {
        eprintln!("unexpected failures:\n{}", unexpected.join("\n"));
        eprintln!("known failures now passing: {stale:?}");
        std::process::exit(1);
    }
    println!("acceptance: no failures outside the documented known list");
}
