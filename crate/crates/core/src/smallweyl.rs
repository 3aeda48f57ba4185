//! Small Weyl groups and twist counting.
//!
//! A small Weyl group here is always a standard parabolic subgroup of `W`,
//! so it is carried as its generating nodes plus its order. Elements are
//! never enumerated.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::parabolic::LeviDecomposition;
use crate::rational;
use crate::rootsys::{AlgebraType, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmallWeylGroup {
    pub generator_nodes: Vec<usize>,
    pub order: u64,
    pub component_types: Vec<AlgebraType>,
}

impl SmallWeylGroup {
    fn generated_by(rs: &RootSystem, nodes: BTreeSet<usize>) -> Self {
        let component_types = rs.dynkin_components(&nodes).into_iter().map(|c| c.local_type).collect();
        SmallWeylGroup {
            order: rs.parabolic_subgroup_order(&nodes),
            generator_nodes: nodes.into_iter().collect(),
            component_types,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.generator_nodes.is_empty()
    }

    /// Short description such as `<s1,s3>` or `1`.
    pub fn describe(&self) -> String {
        if self.is_trivial() {
            return "1".to_string();
        }
        let gens: Vec<String> = self.generator_nodes.iter().map(|i| format!("s{i}")).collect();
        format!("<{}>", gens.join(","))
    }
}

/// Small Weyl group of the simple highest-weight module `L(lambda)`:
/// generated by the `s_i` with `lambda_i` in `Z>=0`.
pub fn small_weyl_hw(rs: &RootSystem, w: &Weight) -> SmallWeylGroup {
    let nodes = (1..=rs.rank()).filter(|&i| rational::is_nonneg_integer(w.label(i))).collect();
    SmallWeylGroup::generated_by(rs, nodes)
}

/// Small Weyl group of the standard parabolic family generated by the
/// bounded highest weight `w`: the `s_i` with `i` orthogonal to `S` and
/// `w_i` in `Z>=0`.
pub fn small_weyl_family(rs: &RootSystem, ld: &LeviDecomposition, w: &Weight) -> SmallWeylGroup {
    let nodes = ld.perp_nodes().iter().copied().filter(|&i| rational::is_nonneg_integer(w.label(i))).collect();
    SmallWeylGroup::generated_by(rs, nodes)
}

/// `|W| / (|small Weyl group| * |W_l|)`. Pass `None` for highest-weight
/// modules, where the Levi factor is the Cartan subalgebra.
pub fn twist_count(rs: &RootSystem, swg: &SmallWeylGroup, ld: Option<&LeviDecomposition>) -> u64 {
    let levi_order = ld.map_or(1, |ld| rs.parabolic_subgroup_order(ld.subset()));
    let denom = swg.order * levi_order;
    assert_eq!(rs.weyl_order() % denom, 0, "twist count is not an integer");
    rs.weyl_order() / denom
}
