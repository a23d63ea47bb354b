//! Exhaustive search for coalgebra structures with invertible `σ_λ` over small
//! prime fields.

use opcheck::ins::{brute_force_search, SEARCH_BUDGET};
use opcheck::Result;

fn main() -> Result<()> {
    for (p, d, m) in [(2, 1, 0), (3, 1, 0), (2, 2, 1), (2, 1, 1), (3, 2, 2)] {
        let out = brute_force_search(p, d, m, SEARCH_BUDGET)?;
        println!(
            "p={p} d={d} m={m}: space {}, {} coassociative, {} valid",
            out.space,
            out.coassociative,
            out.structures.len()
        );
    }
    Ok(())
}
