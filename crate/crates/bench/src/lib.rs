//! Shared inputs for the benchmarks.

use sallytype_core::SallyParams;

/// A spread of parameters per `e`: first, middle and last admissible pair.
pub fn sample(e: u32) -> Vec<SallyParams> {
    let all = SallyParams::all_for(e);
    let mut picks = vec![all[0], all[all.len() / 2], all[all.len() - 1]];
    picks.dedup();
    picks
}
