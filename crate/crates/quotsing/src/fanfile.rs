//! Plain-text fan interchange format:
//!
//! ```text
//! rank 2
//! ray 1: 1 0
//! ray 2: 0 1
//! ray 3: -1 -1
//! cone: 1 2
//! cone: 2 3
//! cone: 1 3
//! ```
//!
//! Coordinates are integral-basis coordinates and indices are 1-based. The
//! embedding of the lattice is not recorded: [`read_fan`] places the fan in
//! `Z^r`, [`read_fan_in`] in a lattice supplied by the caller.

use std::fmt::Write as _;

use quotsing_core::{Fan, Lattice, LatticePoint};

#[derive(Debug, thiserror::Error)]
pub enum FanFileError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("fan rejected: {0}")]
    Invalid(#[from] quotsing_core::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> FanFileError {
    FanFileError::Syntax { line, message: message.into() }
}

pub fn write_fan(fan: &Fan) -> String {
    let mut out = String::new();
    writeln!(out, "rank {}", fan.rank()).unwrap();
    for (i, r) in fan.rays().iter().enumerate() {
        write!(out, "ray {}:", i + 1).unwrap();
        for c in r.iter() {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    for c in fan.max_cones() {
        out.push_str("cone:");
        for i in c {
            write!(out, " {}", i + 1).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn read_fan(text: &str) -> Result<Fan, FanFileError> {
    let (rank, rays, cones) = parse(text)?;
    Ok(Fan::new(Lattice::standard(rank), rays, cones)?)
}

/// As [`read_fan`], with the coordinates taken in the basis of `lattice`.
pub fn read_fan_in(text: &str, lattice: &Lattice) -> Result<Fan, FanFileError> {
    let (rank, rays, cones) = parse(text)?;
    if rank != lattice.rank() {
        return Err(syntax(1, format!("rank {rank} does not match the lattice rank {}", lattice.rank())));
    }
    Ok(Fan::new(lattice.clone(), rays, cones)?)
}

type Parsed = (usize, Vec<LatticePoint>, Vec<Vec<usize>>);

fn parse(text: &str) -> Result<Parsed, FanFileError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
    let (first, header) = lines.next().ok_or_else(|| syntax(1, "empty fan file"))?;
    let rank: usize = header
        .strip_prefix("rank ")
        .and_then(|r| r.trim().parse().ok())
        .filter(|&r| r > 0)
        .ok_or_else(|| syntax(first, "expected `rank r` with r > 0"))?;
    let mut rays = Vec::new();
    let mut cones = Vec::new();
    for (no, line) in lines {
        if let Some(rest) = line.strip_prefix("ray ") {
            if !cones.is_empty() {
                return Err(syntax(no, "ray after the first cone"));
            }
            let (idx, coords) = rest.split_once(':').ok_or_else(|| syntax(no, "expected `ray i: c1 ... cr`"))?;
            let idx: usize = idx.trim().parse().map_err(|_| syntax(no, "bad ray index"))?;
            if idx != rays.len() + 1 {
                return Err(syntax(no, format!("ray {idx} out of order, expected {}", rays.len() + 1)));
            }
            let coords = ints::<i64>(coords).map_err(|m| syntax(no, m))?;
            if coords.len() != rank {
                return Err(syntax(no, format!("{} coordinates for rank {rank}", coords.len())));
            }
            rays.push(LatticePoint::new(coords));
        } else if let Some(rest) = line.strip_prefix("cone:") {
            let idx = ints::<usize>(rest).map_err(|m| syntax(no, m))?;
            if idx.iter().any(|&i| i == 0 || i > rays.len()) {
                return Err(syntax(no, "cone refers to an unknown ray"));
            }
            let mut c: Vec<usize> = idx.into_iter().map(|i| i - 1).collect();
            c.sort_unstable();
            cones.push(c);
        } else {
            return Err(syntax(no, format!("unrecognized line `{line}`")));
        }
    }
    Ok((rank, rays, cones))
}

fn ints<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, String> {
    s.split_whitespace().map(|t| t.parse().map_err(|_| format!("bad integer `{t}`"))).collect()
}
