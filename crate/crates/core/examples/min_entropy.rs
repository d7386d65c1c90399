//! Smallest positive entropy among short 3-braids.
//!
//! BRAIDMOD_THREADS=2 cargo run --release --example min_entropy -- 10

use std::time::Instant;

use braidmod::b3::min_entropy_search;

fn main() -> Result<(), braidmod::Error> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(8);
    for len in 1..=max {
        let start = Instant::now();
        match min_entropy_search(len)? {
            Some((b, h)) => println!("len {len:>2}: {b}  h={h}  ({:?})", start.elapsed()),
            None => println!("len {len:>2}: no positive entropy"),
        }
    }
    Ok(())
}
