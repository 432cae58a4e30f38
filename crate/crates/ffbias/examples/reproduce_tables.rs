//! Recompute the two reference density tables.
//!
//! Each cell is the share of positive signs among `b(n)` (or the cumulative
//! `B(n)`) for `n ≤ horizon`, with the series expanded exactly via its
//! linear recurrence — integer arithmetic throughout, so the cells are
//! reproducible to the last digit. Table 1 is the `q = 5` cubic modulus
//! `T³+T+4` (one zero pair); table 2 is the `q = 3` degree-5 modulus
//! `(T²+1)(T³+2T+1)` (two pairs). The λ columns drift toward their
//! model limits 0.6168/0.6892 and 0.5849/0.7393 while the μ columns hover
//! around 1/2 — Möbius has no main term, so no bias.
//!
//! Run with: `cargo run --example reproduce_tables`

use ffbias::scan::{reproduce_tables, write_tables_csv};

fn main() -> ffbias::Result<()> {
    let rows = reproduce_tables()?;
    let mut csv = Vec::new();
    write_tables_csv(&mut csv, &rows)?;
    print!("{}", String::from_utf8(csv).expect("CSV output is always UTF-8"));
    Ok(())
}
