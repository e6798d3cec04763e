use alloc::format;
use alloc::vec::Vec;

use super::{Fan, TDivisor};
use crate::arith::{integral, Int};
use crate::lattice_core::IntMatrix;
use crate::{Error, Result};

/// The wall relation `v_a + v_b + Σ b_ρ v_ρ = 0` of an interior wall in a
/// smooth fan: returns `(a, b, [(ρ, b_ρ)])`.
pub fn wall_relation(fan: &Fan, wall: &[usize]) -> Result<(usize, usize, Vec<(usize, Int)>)> {
    let r = fan.rank();
    let mut wall = wall.to_vec();
    wall.sort_unstable();
    if wall.len() + 1 != r {
        return Err(Error::InvalidArgument(format!("{wall:?} is not a codimension-one cone")));
    }
    let cones = fan.cones_containing(&wall);
    if cones.len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "wall {wall:?} lies in {} maximal cones: the curve is not complete",
            cones.len()
        )));
    }
    let other = |c: usize| -> Result<usize> {
        let cone = &fan.max_cones()[c];
        if cone.len() != r {
            return Err(Error::InvalidFan("lower-dimensional maximal cone at a wall".into()));
        }
        Ok(*cone.iter().find(|i| !wall.contains(i)).expect("one extra ray"))
    };
    let (a, b) = (other(cones[0])?, other(cones[1])?);
    for &c in &cones {
        if !fan.cone(c).is_regular() {
            return Err(Error::NotSmooth(format!("maximal cone {:?}", fan.max_cones()[c])));
        }
    }
    // -v_b in the basis (v_a, wall rays)
    let basis: Vec<&[Int]> = core::iter::once(fan.ray(a).coords())
        .chain(wall.iter().map(|&i| fan.ray(i).coords()))
        .collect();
    let g = IntMatrix::from_cols(&basis, r)?;
    let minus_vb: Vec<Int> = fan.ray(b).iter().map(|x| -x).collect();
    let coeffs = integral(&g.solve(&minus_vb)?)?;
    if coeffs[0] != 1 {
        return Err(Error::Internal("wall relation with a non-unit leading coefficient".into()));
    }
    let rest = wall.iter().zip(&coeffs[1..]).map(|(&i, &c)| (i, c)).collect();
    Ok((a, b, rest))
}

/// Degree of `O(D)` on the invariant curve `V(wall)`.
pub fn curve_degree(fan: &Fan, wall: &[usize], d: &TDivisor) -> Result<Int> {
    if d.len() != fan.num_rays() {
        return Err(Error::DimensionMismatch { expected: fan.num_rays(), got: d.len() });
    }
    let (a, b, rest) = wall_relation(fan, wall)?;
    Ok(d.coefficient(a) + d.coefficient(b) + rest.iter().map(|&(i, c)| c * d.coefficient(i)).sum::<Int>())
}
