//! Double description: extreme rays of a pointed cone `{x : <a_i, x> >= 0}`.
//!
//! Rays are kept primitive and integral; adjacency uses the combinatorial
//! test on zero sets, which is exact for pointed cones.

use alloc::vec::Vec;

use super::matrix::IntMatrix;
use crate::arith::{dot, make_primitive, Int};
use crate::{Error, Result};

/// Maximum number of inequalities supported by the bitset representation.
pub const MAX_INEQUALITIES: usize = 128;

struct Ray {
    v: Vec<Int>,
    zeros: u128,
}

/// Extreme rays of `{x in Q^dim : <a, x> >= 0 for a in ineqs}`.
///
/// The inequality system must have rank `dim` (the cone is pointed);
/// otherwise [`Error::NotPointed`] is returned. The cone `{0}` yields an
/// empty list.
pub fn extreme_rays(ineqs: &[Vec<Int>], dim: usize) -> Result<Vec<Vec<Int>>> {
    if ineqs.len() > MAX_INEQUALITIES {
        return Err(Error::Capacity(alloc::format!(
            "{} inequalities exceed the double-description cap of {MAX_INEQUALITIES}",
            ineqs.len()
        )));
    }
    if let Some(bad) = ineqs.iter().find(|a| a.len() != dim) {
        return Err(Error::DimensionMismatch { expected: dim, got: bad.len() });
    }
    // pick a row basis greedily
    let mut basis_rows: Vec<usize> = Vec::with_capacity(dim);
    for (i, a) in ineqs.iter().enumerate() {
        if basis_rows.len() == dim {
            break;
        }
        let mut trial: Vec<&[Int]> = basis_rows.iter().map(|&k| ineqs[k].as_slice()).collect();
        trial.push(a);
        if IntMatrix::from_rows(&trial, dim)?.rank() == trial.len() {
            basis_rows.push(i);
        }
    }
    if basis_rows.len() < dim {
        return Err(Error::NotPointed);
    }
    let a_b = IntMatrix::from_rows(
        &basis_rows.iter().map(|&k| ineqs[k].as_slice()).collect::<Vec<_>>(),
        dim,
    )?;
    let (inv, _) = a_b.inverse()?;
    let mut processed: u128 = basis_rows.iter().fold(0, |m, &k| m | (1u128 << k));
    let mut rays: Vec<Ray> = (0..dim)
        .map(|j| {
            let mut v = inv.col(j);
            make_primitive(&mut v);
            let zeros = basis_rows
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != j)
                .fold(0u128, |m, (_, &k)| m | (1u128 << k));
            Ray { v, zeros }
        })
        .collect();

    for (k, a) in ineqs.iter().enumerate() {
        if processed & (1u128 << k) != 0 {
            continue;
        }
        let values: Vec<Int> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let bit = 1u128 << k;
        if values.iter().all(|&s| s >= 0) {
            for (r, &s) in rays.iter_mut().zip(&values) {
                if s == 0 {
                    r.zeros |= bit;
                }
            }
            processed |= bit;
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i] > 0).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i] < 0).collect();
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len());
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].zeros & rays[q].zeros;
                if (common.count_ones() as usize) + 2 < dim {
                    continue;
                }
                let adjacent = rays.iter().enumerate().all(|(i, r)| {
                    i == p || i == q || (r.zeros & common) != common
                });
                if !adjacent {
                    continue;
                }
                let (sp, sq) = (values[p], values[q]);
                let mut v: Vec<Int> =
                    rays[q].v.iter().zip(&rays[p].v).map(|(x, y)| sp * x - sq * y).collect();
                make_primitive(&mut v);
                next.push(Ray { v, zeros: common | bit });
            }
        }
        for (i, r) in rays.into_iter().enumerate() {
            match values[i] {
                0 => next.push(Ray { v: r.v, zeros: r.zeros | bit }),
                s if s > 0 => next.push(r),
                _ => {}
            }
        }
        rays = next;
        processed |= bit;
    }
    let mut out: Vec<Vec<Int>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    Ok(out)
}
