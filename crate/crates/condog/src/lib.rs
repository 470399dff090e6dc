//! IO companion to `condog-core`: graph file formats, JSON reports, and
//! the verification suites behind the `condog` command-line tool.

pub mod formats;
pub mod report;
pub mod verify;

/// Transposition-table memory cap from `CONDOGAME_MEMO_BYTES`, converted
/// to an entry count. Unset or unparsable means unbounded.
pub fn memo_capacity_from_env() -> Option<usize> {
    // generous per-entry estimate covering the 128-bit key width
    const ENTRY_BYTES: usize = 48;
    let bytes: u64 = std::env::var("CONDOGAME_MEMO_BYTES").ok()?.parse().ok()?;
    Some((bytes / ENTRY_BYTES as u64).max(1) as usize)
}
