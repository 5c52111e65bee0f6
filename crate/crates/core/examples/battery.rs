//! Runs every theorem battery over the given corpora and prints one summary
//! line per run. Finite rings are swept exhaustively; `Q`, `QI` and `GF<p>`
//! select a seeded random matrix corpus of dimensions 1 to 4.
//!
//! ```text
//! cargo run --release --example battery -- Zn:6 MatZp:2x2:p2 Q GF5
//! ```

use bccore::oracle::{run_battery, BatteryOptions, Corpus, Theorem};
use bccore::ring::FieldTag;

fn corpus(arg: &str) -> bccore::Result<Corpus> {
    let field = match arg {
        "Q" => Some(FieldTag::Rationals),
        "QI" => Some(FieldTag::GaussianRationals),
        _ => arg.strip_prefix("GF").and_then(|p| p.parse().ok()).map(FieldTag::Prime),
    };
    Ok(match field {
        Some(field) => Corpus::Matrix { field, dims: 1..=4, bound: 3, count: 300 },
        None => Corpus::Finite { ring: arg.parse()?, samples: None },
    })
}

fn main() -> bccore::Result<()> {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = vec!["Zn:6".into(), "Q".into()];
    }
    let opts = BatteryOptions { seed: 1, ..BatteryOptions::default() };
    for arg in args {
        let corpus = corpus(&arg)?;
        for t in Theorem::ALL {
            match run_battery(t, &corpus, &opts) {
                Ok(rep) => {
                    println!(
                        "{:<22} {:<38} {:>6}/{:<6} {:>6}ms {}",
                        rep.theorem,
                        rep.corpus,
                        rep.agreements,
                        rep.tuples,
                        rep.wall_ms,
                        rep.notes.join("; ")
                    );
                    for d in rep.disagreements.iter().take(3) {
                        println!("    {d}");
                    }
                }
                Err(e) => println!("{:<22} {arg:<38} skipped: {e}", t.tag()),
            }
        }
    }
    Ok(())
}
