//! Runner, file formats and command-line front end for `quotsing-core`.

pub mod cli;
pub mod fanfile;
pub mod output;
pub mod properties;

use std::time::Instant;

use quotsing_core::report::Clock;

/// Milliseconds since the clock was created.
#[derive(Clone, Copy, Debug)]
pub struct SystemClock {
    start: Instant,
}

impl SystemClock {
    pub fn new() -> Self {
        Self { start: Instant::now() }
    }
}

impl Default for SystemClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for SystemClock {
    fn now_millis(&self) -> u64 {
        self.start.elapsed().as_millis() as u64
    }
}

/// Environment variable lifting the desk-scale caps of the heavier oracles.
pub const UNSAFE_CAPS_VAR: &str = "QUOTSING_UNSAFE_CAPS";

/// Whether the cap override is set (to anything but the empty string or `0`).
pub fn unsafe_caps() -> bool {
    std::env::var(UNSAFE_CAPS_VAR).map_or(false, |v| !v.is_empty() && v != "0")
}
