//! Integer homology of Hol(Z_{p^r}): assembled from the resolution by exact
//! Smith reduction, next to the closed-form tables.
//!
//!     cargo run --example homology_tables

use hollab::cli::{cmd_homology, HomologyMode, OutputFormat};

fn main() {
    for (p, r, qmax) in [(2u64, 3u32, 10usize), (2, 4, 10), (3, 1, 8), (3, 3, 8)] {
        println!("integer homology of Hol(Z_{}^{}):", p, r);
        let (table, all_agree) = cmd_homology(p, r, qmax, HomologyMode::Both).unwrap();
        print!("{}", table.render(OutputFormat::Markdown));
        println!("all degrees agree: {all_agree}\n");
    }
}
