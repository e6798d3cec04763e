use alloc::vec::Vec;

use super::{vanishing_order, Fan, MonomialIdeal};
use crate::arith::Int;
use crate::{Error, Result};

/// Pairwise intersection of two exceptional components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionReport {
    pub pair: (usize, usize),
    pub nonempty: bool,
    /// Dimension of the intersection when nonempty.
    pub dim: Option<usize>,
    pub smooth: bool,
    pub complete: bool,
    pub connected: bool,
}

/// Structure of the exceptional divisor of a smooth toric blow-up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SncReport {
    /// Rays along which the ideal vanishes, i.e. the components of the
    /// exceptional locus.
    pub components: Vec<usize>,
    pub component_count: usize,
    /// Whether `components` equals the declared exceptional rays.
    pub matches_declared: bool,
    pub component_smooth: Vec<bool>,
    pub component_complete: Vec<bool>,
    pub component_dims: Vec<usize>,
    pub intersections: Vec<IntersectionReport>,
    /// Vanishing order of the ideal along each declared exceptional ray.
    pub reducedness_orders: Vec<Int>,
}

impl SncReport {
    /// Reduced with smooth complete components and smooth intersections.
    /// Transversality is automatic for torus-invariant divisors of a smooth
    /// fan.
    pub fn is_snc(&self) -> bool {
        self.matches_declared
            && self.reducedness_orders.iter().all(|&o| o == 1)
            && self.component_smooth.iter().all(|&s| s)
            && self.component_complete.iter().all(|&c| c)
            && self.intersections.iter().all(|i| !i.nonempty || (i.smooth && i.complete))
    }

    pub fn all_intersections_connected(&self) -> bool {
        self.intersections.iter().all(|i| !i.nonempty || i.connected)
    }
}

/// Certificate for the exceptional divisor of `fan` over the ideal: its
/// components, their smoothness and completeness, and the combinatorics of
/// their pairwise intersections.
pub fn snc_certificate(fan: &Fan, exceptional_rays: &[usize], ideal: &MonomialIdeal) -> Result<SncReport> {
    if !fan.is_smooth() {
        return Err(Error::NotSmooth("normal crossings are only certified on smooth fans".into()));
    }
    let mut components = Vec::new();
    for (i, v) in fan.rays().iter().enumerate() {
        if vanishing_order(ideal, v)? > 0 {
            components.push(i);
        }
    }
    let mut declared = exceptional_rays.to_vec();
    declared.sort_unstable();
    let matches_declared = declared == components;
    let r = fan.rank();
    let mut component_smooth = Vec::new();
    let mut component_complete = Vec::new();
    let mut component_dims = Vec::new();
    for &c in &components {
        if r == 1 {
            // a point
            component_smooth.push(true);
            component_complete.push(true);
            component_dims.push(0);
            continue;
        }
        let star = fan.star(c)?;
        component_smooth.push(star.is_smooth());
        component_complete.push(star.is_complete());
        component_dims.push(star.rank());
    }
    let mut intersections = Vec::new();
    for (k, &a) in components.iter().enumerate() {
        for &b in &components[k + 1..] {
            let pair = (a, b);
            if !fan.is_cone(&[a, b]) {
                intersections.push(IntersectionReport {
                    pair,
                    nonempty: false,
                    dim: None,
                    smooth: true,
                    complete: true,
                    connected: true,
                });
                continue;
            }
            if r == 2 {
                intersections.push(IntersectionReport {
                    pair,
                    nonempty: true,
                    dim: Some(0),
                    smooth: true,
                    complete: true,
                    connected: true,
                });
                continue;
            }
            let star = fan.star_of_cone(&[a, b])?.fan;
            intersections.push(IntersectionReport {
                pair,
                nonempty: true,
                dim: Some(star.rank()),
                smooth: star.is_smooth(),
                complete: star.is_complete(),
                connected: star.is_connected(),
            });
        }
    }
    let reducedness_orders = declared
        .iter()
        .map(|&i| vanishing_order(ideal, fan.ray(i)))
        .collect::<Result<_>>()?;
    Ok(SncReport {
        component_count: components.len(),
        components,
        matches_declared,
        component_smooth,
        component_complete,
        component_dims,
        intersections,
        reducedness_orders,
    })
}
