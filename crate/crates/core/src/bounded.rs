//! Bounded highest weights of `sl(n+1)` and `sp(2n)`, the arrow relation
//! between them, and its connected components. Each component labels one
//! irreducible semisimple coherent family.
//!
//! All functions here work in the local labels of a simple algebra of type
//! A or C (the `rs` argument is that algebra's own root system).

use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, q};
use crate::rootsys::{AlgebraType, RootSystem, Series, Weight};

/// A connected component of the bounded set under the arrow relation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentClass {
    pub ideal_type: AlgebraType,
    /// Sorted lexicographically; the first entry is `canonical`.
    pub members: Vec<Weight>,
    pub canonical: Weight,
    pub integral: bool,
}

impl ComponentClass {
    pub fn contains(&self, w: &Weight) -> bool {
        self.members.binary_search(w).is_ok()
    }
}

fn require(rs: &RootSystem, series: &[Series]) -> Result<()> {
    let t = rs.algebra_type();
    if series.contains(&t.series()) {
        Ok(())
    } else {
        let expected = if series.len() == 1 { "A" } else { "A or C" };
        Err(Error::WrongType { expected, found: t.to_string() })
    }
}

fn a_set_unchecked(w: &Weight) -> BTreeSet<usize> {
    (1..=w.rank()).filter(|&i| !rational::is_nonneg_integer(w.label(i))).collect()
}

/// `A(lambda)`: nodes where `<lambda + rho, alpha_i^vee>` is not a positive
/// integer, i.e. where the label is not in `Z>=0`.
pub fn a_set(rs: &RootSystem, w: &Weight) -> Result<BTreeSet<usize>> {
    require(rs, &[Series::A])?;
    rs.check_weight(w)?;
    Ok(a_set_unchecked(w))
}

fn bounded_a(w: &Weight) -> bool {
    let n = w.rank();
    let a: Vec<usize> = a_set_unchecked(w).into_iter().collect();
    // <lambda + rho, alpha_i^vee + alpha_j^vee> in Z>0
    let pair_positive = |i: usize, j: usize| rational::is_positive_integer(&(w.label(i) + w.label(j) + q(2)));
    match a.as_slice() {
        [i] if *i == 1 || *i == n => true,
        [i] => pair_positive(*i, i - 1) || pair_positive(*i, i + 1),
        [i, j] if *j == i + 1 => pair_positive(*i, *j),
        _ => false,
    }
}

fn bounded_c(w: &Weight) -> bool {
    let n = w.rank();
    (1..n).all(|i| rational::is_nonneg_integer(w.label(i))) && rational::is_half_odd(w.label(n)) && {
        let x = w.label(n - 1) + q(2) * w.label(n);
        x.is_integer() && x >= q(-2)
    }
}

fn bounded_unchecked(rs: &RootSystem, w: &Weight) -> bool {
    match rs.algebra_type().series() {
        Series::A => bounded_a(w),
        Series::C => bounded_c(w),
        _ => unreachable!("checked by caller"),
    }
}

/// Membership in the set of bounded highest weights.
pub fn is_bounded(rs: &RootSystem, w: &Weight) -> Result<bool> {
    require(rs, &[Series::A, Series::C])?;
    rs.check_weight(w)?;
    Ok(bounded_unchecked(rs, w))
}

fn require_bounded(rs: &RootSystem, w: &Weight) -> Result<()> {
    if is_bounded(rs, w)? {
        Ok(())
    } else {
        Err(Error::NotBounded(w.to_string()))
    }
}

/// Targets of the arrows leaving `w`.
///
/// Type A: `w -> s_i . w` for `i` in `A(w)`. Type C: `w -> s_n . w`.
/// Only targets inside the bounded set count.
pub fn arrows(rs: &RootSystem, w: &Weight) -> Result<BTreeSet<Weight>> {
    require_bounded(rs, w)?;
    let nodes: Vec<usize> = match rs.algebra_type().series() {
        Series::A => a_set_unchecked(w).into_iter().collect(),
        _ => vec![rs.rank()],
    };
    Ok(nodes.into_iter().map(|i| rs.shifted_reflection(i, w)).filter(|y| bounded_unchecked(rs, y)).collect())
}

/// Neighbours of `w` in the undirected arrow graph.
fn weak_neighbours(rs: &RootSystem, w: &Weight) -> Vec<Weight> {
    let n = rs.rank();
    match rs.algebra_type().series() {
        Series::A => {
            let a = a_set_unchecked(w);
            (1..=n)
                .filter_map(|i| {
                    let y = rs.shifted_reflection(i, w);
                    let linked = a.contains(&i) || a_set_unchecked(&y).contains(&i);
                    (linked && bounded_a(&y)).then_some(y)
                })
                .collect()
        }
        _ => {
            let y = rs.shifted_reflection(n, w);
            if bounded_c(&y) {
                vec![y]
            } else {
                vec![]
            }
        }
    }
}

/// The component of `w` under the undirected closure of the arrows.
///
/// Panics if the component size disagrees with the known sizes (`n` or
/// `n + 1` in type `A_n`, always 2 in type C); that would be a bug here.
pub fn connected_component(rs: &RootSystem, w: &Weight, cap: usize) -> Result<ComponentClass> {
    require_bounded(rs, w)?;
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for y in weak_neighbours(rs, &x) {
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::OrbitCapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let members: Vec<Weight> = seen.into_iter().collect();
    let canonical = members[0].clone();
    let integral = canonical.is_integral();
    let n = rs.rank();
    let expected = match rs.algebra_type().series() {
        Series::A if integral => n,
        Series::A => n + 1,
        _ => 2,
    };
    assert_eq!(members.len(), expected, "component of {w} in {} has unexpected size", rs.algebra_type());
    Ok(ComponentClass { ideal_type: rs.algebra_type(), members, canonical, integral })
}

/// Whether the highest weights `a` and `b` are linked by the shifted
/// Weyl group action.
pub fn same_central_character(rs: &RootSystem, a: &Weight, b: &Weight, cap: usize) -> Result<bool> {
    rs.check_weight(a)?;
    rs.check_weight(b)?;
    if a == b {
        return Ok(true);
    }
    if rs.casimir(a) != rs.casimir(b) {
        return Ok(false);
    }
    Ok(rs.dot_orbit(a, cap)?.contains(b))
}
