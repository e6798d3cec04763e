//! Dimension bounds from the long exact sequence of a short exact sequence
//! `0 → A → B → C → 0` when two of the three members are known.
//!
//! Connecting maps are never guessed: each unknown `h^i` is bounded by the
//! possible ranks of the two maps adjacent to it, then tightened with the
//! additivity of the Euler characteristic when that pins a single degree.

use alloc::format;
use alloc::vec::Vec;

use super::{Bound, CohomologyVector};
use crate::{Error, Result};

/// Which member of `0 → A → B → C → 0` is unknown.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Position {
    Sub,
    Middle,
    Quotient,
}

/// Fills in the unknown member. Exactly one of `a`, `b`, `c` must be
/// `None`; at least one of the other two must be exact.
pub fn solve_sequence(
    a: Option<&CohomologyVector>,
    b: Option<&CohomologyVector>,
    c: Option<&CohomologyVector>,
) -> Result<(CohomologyVector, CohomologyVector, CohomologyVector)> {
    let (unknown, x, y) = match (a, b, c) {
        (None, Some(b), Some(c)) => (Position::Sub, b, c),
        (Some(a), None, Some(c)) => (Position::Middle, a, c),
        (Some(a), Some(b), None) => (Position::Quotient, a, b),
        _ => return Err(Error::InvalidArgument("exactly one member must be unknown".into())),
    };
    if x.top() != y.top() {
        return Err(Error::DimensionMismatch { expected: x.top(), got: y.top() });
    }
    if !x.is_exact() && !y.is_exact() {
        return Err(Error::Refused("both known members are interval-valued".into()));
    }
    let top = x.top();
    let lo = |v: &CohomologyVector, i: isize| if i < 0 { 0 } else { v.get(i as usize).lo };
    let hi = |v: &CohomologyVector, i: isize| if i < 0 { 0 } else { v.get(i as usize).hi };
    let pos = |p: u64, q: u64| p.saturating_sub(q);
    let mut dims: Vec<Bound> = (0..=top as isize)
        .map(|i| {
            let (l, h) = match unknown {
                // … → H^{i-1}(C) → H^i(A) → H^i(B) → H^i(C) → H^{i+1}(A) → …
                Position::Middle => {
                    let (a, c) = (x, y);
                    (pos(lo(a, i), hi(c, i - 1)) + pos(lo(c, i), hi(a, i + 1)), hi(a, i) + hi(c, i))
                }
                Position::Quotient => {
                    let (a, b) = (x, y);
                    (pos(lo(b, i), hi(a, i)) + pos(lo(a, i + 1), hi(b, i + 1)), hi(b, i) + hi(a, i + 1))
                }
                Position::Sub => {
                    let (b, c) = (x, y);
                    (pos(lo(c, i - 1), hi(b, i - 1)) + pos(lo(b, i), hi(c, i)), hi(c, i - 1) + hi(b, i))
                }
            };
            Bound::range(l, h)
        })
        .collect();
    if let (Some(cx), Some(cy)) = (x.euler_characteristic(), y.euler_characteristic()) {
        let target = match unknown {
            Position::Middle => cx + cy,
            Position::Quotient => cy - cx,
            Position::Sub => cx - cy,
        };
        let open: Vec<usize> = (0..dims.len()).filter(|&i| !dims[i].is_exact()).collect();
        let sign = |i: usize| if i % 2 == 0 { 1i64 } else { -1 };
        match open.as_slice() {
            [] => {
                let chi = CohomologyVector::from_bounds(dims.clone()).euler_characteristic().expect("exact");
                if chi != target {
                    return Err(Error::Internal(format!("Euler characteristic {chi} != {target}")));
                }
            }
            [i] => {
                let rest: i64 = (0..dims.len())
                    .filter(|j| j != i)
                    .map(|j| sign(j) * dims[j].lo as i64)
                    .sum();
                let v = sign(*i) * (target - rest);
                if v < dims[*i].lo as i64 || v > dims[*i].hi as i64 {
                    return Err(Error::Internal(format!(
                        "Euler characteristic forces h^{i} = {v} outside {}",
                        dims[*i]
                    )));
                }
                dims[*i] = Bound::exact(v as u64);
            }
            _ => {}
        }
    }
    let z = CohomologyVector::from_bounds(dims);
    Ok(match unknown {
        Position::Sub => (z, x.clone(), y.clone()),
        Position::Middle => (x.clone(), z, y.clone()),
        Position::Quotient => (x.clone(), y.clone(), z),
    })
}
