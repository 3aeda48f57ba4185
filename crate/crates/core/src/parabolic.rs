//! Standard parabolic subalgebras, described by a subset `S` of Dynkin
//! nodes, and the weight bookkeeping for their Levi factors
//! `l = s_1 + ... + s_m + z`.

use std::collections::BTreeSet;

use num_traits::Zero;

use crate::linalg;
use crate::rootsys::{AlgebraType, RootSystem, Weight};

/// One simple ideal of a Levi factor: a connected component of `S`.
#[derive(Debug, Clone)]
pub struct SimpleIdeal {
    /// Global node numbers, listed in the local numbering of the ideal:
    /// `nodes[a]` is local node `a + 1`.
    nodes: Vec<usize>,
    local: RootSystem,
}

impl SimpleIdeal {
    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    pub fn local_type(&self) -> AlgebraType {
        self.local.algebra_type()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.local
    }

    /// Local (1-based) node of a global node, if it belongs to this ideal.
    pub fn local_node(&self, global: usize) -> Option<usize> {
        self.nodes.iter().position(|&x| x == global).map(|a| a + 1)
    }

    /// Orthogonal projection onto the ideal, in the ideal's own labels.
    pub fn project(&self, w: &Weight) -> Weight {
        Weight::new(self.nodes.iter().map(|&i| w.label(i).clone()).collect())
    }

    /// The unique combination of this ideal's simple roots whose local
    /// labels are `local`, as a global weight.
    pub fn embed(&self, rs: &RootSystem, local: &Weight) -> Weight {
        assert_eq!(local.rank(), self.nodes.len());
        let coeffs = linalg::mul_vec(self.local.inverse_cartan(), local.labels());
        let mut out = Weight::zero(rs.rank());
        for (c, &node) in coeffs.iter().zip(&self.nodes) {
            if !c.is_zero() {
                out = &out + &rs.simple_root(node).scale(c);
            }
        }
        out
    }
}

#[derive(Debug, Clone)]
pub struct LeviDecomposition {
    subset: BTreeSet<usize>,
    ideals: Vec<SimpleIdeal>,
    center_rank: usize,
    perp_nodes: BTreeSet<usize>,
}

/// Levi decomposition of the standard parabolic determined by `subset`.
pub fn levi(rs: &RootSystem, subset: &BTreeSet<usize>) -> LeviDecomposition {
    assert!(subset.iter().all(|i| (1..=rs.rank()).contains(i)), "node out of range in {subset:?}");
    let ideals = rs
        .dynkin_components(subset)
        .into_iter()
        .map(|c| SimpleIdeal { nodes: c.nodes, local: RootSystem::new(c.local_type) })
        .collect();
    let perp_nodes =
        (1..=rs.rank()).filter(|i| !subset.contains(i) && !subset.iter().any(|&j| rs.adjacent(*i, j))).collect();
    LeviDecomposition { subset: subset.clone(), ideals, center_rank: rs.rank() - subset.len(), perp_nodes }
}

impl LeviDecomposition {
    pub fn subset(&self) -> &BTreeSet<usize> {
        &self.subset
    }

    pub fn ideals(&self) -> &[SimpleIdeal] {
        &self.ideals
    }

    pub fn center_rank(&self) -> usize {
        self.center_rank
    }

    /// Nodes outside `S` with no Dynkin edge into `S`.
    pub fn perp_nodes(&self) -> &BTreeSet<usize> {
        &self.perp_nodes
    }

    /// Every simple ideal is of series A or C.
    pub fn is_ac_type(&self) -> bool {
        self.ideals.iter().all(|i| i.local_type().is_ac())
    }

    /// Ideal types sorted and joined, e.g. `A1+A1`. Empty for a Borel.
    pub fn shape(&self) -> String {
        let mut types: Vec<AlgebraType> = self.ideals.iter().map(SimpleIdeal::local_type).collect();
        types.sort();
        types.iter().map(ToString::to_string).collect::<Vec<_>>().join("+")
    }

    /// `lambda` minus the embedded projections onto every simple ideal.
    pub fn central_weight(&self, rs: &RootSystem, w: &Weight) -> Weight {
        self.ideals.iter().fold(w.clone(), |acc, ideal| &acc - &ideal.embed(rs, &ideal.project(w)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, q};
    use proptest::prelude::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(labels: &[(i64, i64)]) -> Weight {
        Weight::new(labels.iter().map(|&(a, b)| frac(a, b)).collect())
    }

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    #[test]
    fn levi_examples() {
        let a2 = rs("A2");
        let ld = levi(&a2, &set(&[1]));
        assert_eq!(ld.ideals().len(), 1);
        assert_eq!(ld.ideals()[0].local_type().to_string(), "A1");
        assert_eq!(ld.center_rank(), 1);
        assert!(ld.perp_nodes().is_empty());

        let d4 = rs("D4");
        let ld = levi(&d4, &set(&[1]));
        assert_eq!(ld.perp_nodes(), &set(&[3, 4]));
        let ld = levi(&d4, &set(&[1, 2, 3]));
        assert_eq!(ld.shape(), "A3");
        assert_eq!(levi(&d4, &set(&[1, 3, 4])).shape(), "A1+A1+A1");
        assert_eq!(levi(&d4, &BTreeSet::new()).center_rank(), 4);
    }

    #[test]
    fn ac_type() {
        assert!(!levi(&rs("D4"), &set(&[1, 2, 3, 4])).is_ac_type());
        assert!(!levi(&rs("G2"), &set(&[1, 2])).is_ac_type());
        assert!(levi(&rs("D4"), &set(&[1, 2, 3])).is_ac_type());
        assert!(levi(&rs("C3"), &set(&[2, 3])).is_ac_type());
        assert!(levi(&rs("B3"), &set(&[2, 3])).is_ac_type());
        assert!(!levi(&rs("B3"), &set(&[1, 2, 3])).is_ac_type());
    }

    #[test]
    fn projection_examples() {
        let a2 = rs("A2");
        let ld = levi(&a2, &set(&[1]));
        assert_eq!(ld.ideals()[0].project(&w(&[(-3, 2), (0, 1)])), w(&[(-3, 2)]));
        let c2 = rs("C2");
        let ld = levi(&c2, &set(&[2]));
        assert_eq!(ld.ideals()[0].project(&w(&[(1, 1), (-3, 2)])), w(&[(-3, 2)]));
        assert!(ld.ideals()[0].project(&w(&[(5, 1), (0, 1)])).is_zero());
    }

    #[test]
    fn embedding_examples() {
        let a2 = rs("A2");
        let ld = levi(&a2, &set(&[1]));
        let e = ld.ideals()[0].embed(&a2, &w(&[(-3, 2)]));
        assert_eq!(e, w(&[(-3, 2), (3, 4)]));
        assert_eq!(&w(&[(-3, 2), (0, 1)]) - &e, w(&[(0, 1), (-3, 4)]));
        assert!(ld.ideals()[0].embed(&a2, &Weight::zero(1)).is_zero());

        let d4 = rs("D4");
        let ld = levi(&d4, &set(&[1]));
        let e = ld.ideals()[0].embed(&d4, &Weight::from_ints(&[-2]));
        assert_eq!(e, Weight::from_ints(&[-2, 1, 0, 0]));
        assert_eq!(&Weight::from_ints(&[-2, 0, 0, 0]) - &e, Weight::from_ints(&[0, -1, 0, 0]));
    }

    #[test]
    fn central_weight_examples() {
        let a2 = rs("A2");
        let ld = levi(&a2, &set(&[1]));
        assert_eq!(ld.central_weight(&a2, &w(&[(-3, 2), (0, 1)])), w(&[(0, 1), (-3, 4)]));
        let c2 = rs("C2");
        let ld = levi(&c2, &set(&[2]));
        assert_eq!(ld.central_weight(&c2, &w(&[(0, 1), (-1, 2)])), w(&[(-1, 2), (0, 1)]));
        let d4 = rs("D4");
        let ld = levi(&d4, &set(&[2]));
        assert_eq!(ld.central_weight(&d4, &Weight::from_ints(&[0, -1, 0, 0])), w(&[(-1, 2), (0, 1), (-1, 2), (-1, 2)]));
        // A weight made of roots of S has zero central part.
        let ld = levi(&d4, &set(&[1, 2]));
        let lam = &d4.simple_root(1).scale(&frac(2, 7)) - &d4.simple_root(2).scale(&q(3));
        assert!(ld.central_weight(&d4, &lam).is_zero());
    }

    fn type_and_subset() -> impl Strategy<Value = (&'static str, u32)> {
        prop::sample::select(vec!["A3", "A4", "B3", "C3", "C4", "D4", "D5", "F4", "G2"]).prop_flat_map(|name| {
            let n = RootSystem::new(name.parse().unwrap()).rank();
            (Just(name), 1u32..(1 << n))
        })
    }

    proptest! {
        #[test]
        fn decomposition_properties((name, mask) in type_and_subset(), labels in prop::collection::vec((-12i64..12, 1i64..5), 5)) {
            let r = rs(name);
            let n = r.rank();
            let subset: BTreeSet<usize> = (1..=n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let ld = levi(&r, &subset);
            let lam = Weight::new(labels[..n].iter().map(|&(a, b)| frac(a, b)).collect());

            // project . embed = id
            for ideal in ld.ideals() {
                let x = ideal.project(&lam);
                prop_assert_eq!(ideal.project(&ideal.embed(&r, &x)), x);
            }
            // central part is orthogonal to S
            let mu = ld.central_weight(&r, &lam);
            for &i in &subset {
                prop_assert!(mu.label(i).is_zero());
            }
            // lambda = mu + sum of embedded projections
            let total = ld.ideals().iter().fold(mu.clone(), |acc, id| &acc + &id.embed(&r, &id.project(&lam)));
            prop_assert_eq!(total, lam.clone());
            // ideals are mutually orthogonal
            for (a, ia) in ld.ideals().iter().enumerate() {
                let e = ia.embed(&r, &ia.project(&lam));
                for (b, ib) in ld.ideals().iter().enumerate() {
                    if a != b {
                        prop_assert!(ib.project(&e).is_zero());
                    }
                }
            }
        }
    }
}
