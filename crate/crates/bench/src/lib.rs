//! Rings shared by the benchmarks.

use nilring::{FiniteRing, RingDescriptor};

/// Representative rings of increasing lattice size.
pub fn fixtures() -> Vec<(&'static str, FiniteRing)> {
    ["Z64", "Z8 x Z8", "Z2 x Z2 x Z4", "Z8(+)Z2", "Z4[x]^2"]
        .into_iter()
        .map(|s| {
            let d: RingDescriptor = s.parse().expect("fixture parses");
            (s, FiniteRing::build(&d).expect("fixture builds"))
        })
        .collect()
}
