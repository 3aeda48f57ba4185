//! The classification algorithm.
//!
//! For every non-empty node subset `S` whose Levi factor is of AC-type,
//! each infinite-dimensional input highest weight is projected onto the
//! simple ideals of the Levi factor. When every projection is bounded the
//! weight generates a standard parabolic family, identified by `S`, the
//! central weight `mu` and the connected component of each projection.
//! Families with `S` equal to the full node set are coherent families.
//! Non-standard families are counted, not listed: each standard family has
//! `|W| / (|W_small| |W_l|)` Weyl-group twists.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::bounded::{self, ComponentClass};
use crate::error::{Error, Result};
use crate::parabolic::{levi, LeviDecomposition, SimpleIdeal};
use crate::rational::{self, q, Q};
use crate::rootsys::{AlgebraType, LevelDiagnostic, RootSystem, Series, Weight};
use crate::smallweyl::{self, SmallWeylGroup};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeightInput {
    pub label: Option<String>,
    pub weight: Weight,
}

impl HighestWeightInput {
    pub fn new(label: impl Into<String>, weight: Weight) -> Self {
        HighestWeightInput { label: Some(label.into()), weight }
    }

    pub fn unlabelled(weight: Weight) -> Self {
        HighestWeightInput { label: None, weight }
    }

    /// The label, or the weight itself when there is none.
    pub fn name(&self) -> String {
        self.label.clone().unwrap_or_else(|| self.weight.to_string())
    }
}

/// One simple ideal of a family's Levi factor and the component it carries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRecord {
    pub nodes: Vec<usize>,
    pub local_type: AlgebraType,
    pub component: ComponentClass,
    #[serde(with = "rational::serde_q")]
    pub casimir: Q,
}

/// A finite-dimensional highest-weight module of an `sl2` ideal lying in
/// that ideal's coherent family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FindimConstituent {
    pub ideal_nodes: Vec<usize>,
    pub weight: Weight,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyRecord {
    pub key: String,
    pub subset: Vec<usize>,
    pub levi_shape: String,
    pub coherent: bool,
    pub ideals: Vec<IdealRecord>,
    pub central_weight: Weight,
    #[serde(with = "rational::serde_opt_q")]
    pub conformal_weight: Option<Q>,
    pub small_weyl: SmallWeylGroup,
    pub twist_count: u64,
    pub generators: Vec<HighestWeightInput>,
    pub findim_constituents: Vec<FindimConstituent>,
    pub extra_hw_contained: Vec<HighestWeightInput>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HighestWeightSummary {
    pub input: HighestWeightInput,
    pub finite_dimensional: bool,
    pub small_weyl: SmallWeylGroup,
    pub twist_count: u64,
    #[serde(with = "rational::serde_opt_q")]
    pub conformal_weight: Option<Q>,
}

/// Counts after Weyl-group twisting, except `standard_parabolic`, which
/// counts standard (untwisted) parabolic families.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub finite_dimensional: u64,
    pub highest_weight: u64,
    pub standard_parabolic: u64,
    pub parabolic: u64,
    pub coherent: u64,
    pub by_levi_shape: BTreeMap<String, u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub algebra: AlgebraType,
    #[serde(with = "rational::serde_q")]
    pub level: Q,
    pub level_diagnostic: LevelDiagnostic,
    pub weyl_order: u64,
    pub highest_weights: Vec<HighestWeightSummary>,
    pub families: Vec<FamilyRecord>,
    pub totals: Totals,
}

impl ClassificationReport {
    pub fn families_at(&self, subset: &[usize]) -> Vec<&FamilyRecord> {
        self.families.iter().filter(|f| f.subset == subset).collect()
    }

    pub fn coherent_families(&self) -> impl Iterator<Item = &FamilyRecord> {
        self.families.iter().filter(|f| f.coherent)
    }
}

fn format_nodes(nodes: &[usize]) -> String {
    nodes.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn key_from_parts(subset: &[usize], mu: &Weight, canonicals: &[&Weight]) -> String {
    let comps: Vec<String> = canonicals.iter().map(ToString::to_string).collect();
    format!("S={{{}}};mu={};components={}", format_nodes(subset), mu, comps.join("|"))
}

/// Deterministic identity of a family: its node subset, central weight and
/// the canonical representative of each ideal's component.
pub fn family_key(record: &FamilyRecord) -> String {
    let canon: Vec<&Weight> = record.ideals.iter().map(|i| &i.component.canonical).collect();
    key_from_parts(&record.subset, &record.central_weight, &canon)
}

/// Non-empty subsets of `1..=rank`, by size and then lexicographically.
fn node_subsets(rank: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> =
        (1u32..(1 << rank)).map(|mask| (1..=rank).filter(|i| mask & (1 << (i - 1)) != 0).collect()).collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

/// How an input relates to one ideal of an existing family.
enum IdealMatch {
    InComponent,
    FindimConstituent,
    CentralCharacterOnly,
    None,
}

struct FamilyBuilder<'a> {
    rs: &'a RootSystem,
    ld: LeviDecomposition,
    level: &'a Q,
    cap: usize,
}

impl FamilyBuilder<'_> {
    /// Per-ideal components of `w`, if every projection is bounded.
    fn components(&self, w: &Weight) -> Result<Option<Vec<ComponentClass>>> {
        let mut comps = Vec::with_capacity(self.ld.ideals().len());
        for ideal in self.ld.ideals() {
            let local = ideal.project(w);
            if !bounded::is_bounded(ideal.root_system(), &local)? {
                return Ok(None);
            }
            comps.push(bounded::connected_component(ideal.root_system(), &local, self.cap)?);
        }
        Ok(Some(comps))
    }

    fn conformal(&self, w: &Weight) -> Option<Q> {
        self.rs.conformal_weight(w, self.level).ok()
    }

    fn ideal_match(
        &self,
        ideal: &SimpleIdeal,
        record: &IdealRecord,
        findim: &[FindimConstituent],
        w: &Weight,
    ) -> Result<IdealMatch> {
        let local = ideal.project(w);
        if record.component.contains(&local) {
            return Ok(IdealMatch::InComponent);
        }
        if findim.iter().any(|c| c.ideal_nodes == record.nodes && c.weight == local) {
            return Ok(IdealMatch::FindimConstituent);
        }
        if ideal.local_type().rank() >= 2
            && local.is_dominant_integral()
            && bounded::same_central_character(ideal.root_system(), &record.component.canonical, &local, self.cap)?
        {
            return Ok(IdealMatch::CentralCharacterOnly);
        }
        Ok(IdealMatch::None)
    }

    fn finish(&self, mut record: FamilyRecord, inputs: &[HighestWeightInput]) -> Result<FamilyRecord> {
        let first = &record.generators[0].weight;
        record.small_weyl = smallweyl::small_weyl_family(self.rs, &self.ld, first);
        for g in &record.generators[1..] {
            assert_eq!(
                smallweyl::small_weyl_family(self.rs, &self.ld, &g.weight),
                record.small_weyl,
                "generators of {} disagree on the small Weyl group",
                record.key
            );
            assert_eq!(
                self.conformal(&g.weight),
                record.conformal_weight,
                "conformal weight differs within {}",
                record.key
            );
        }
        record.twist_count = smallweyl::twist_count(self.rs, &record.small_weyl, Some(&self.ld));

        // sl2 ideals whose component is integral, {c} with c <= -2, contain
        // the finite-dimensional module of highest weight s . c.
        for (ideal, ir) in self.ld.ideals().iter().zip(&record.ideals) {
            if ideal.local_type().series() == Series::A && ideal.local_type().rank() == 1 && ir.component.integral {
                let image = ideal.root_system().shifted_reflection(1, &ir.component.canonical);
                if image.is_dominant_integral() {
                    record.findim_constituents.push(FindimConstituent { ideal_nodes: ir.nodes.clone(), weight: image });
                }
            }
        }

        let generators: BTreeSet<&Weight> = record.generators.iter().map(|g| &g.weight).collect();
        for input in inputs {
            if generators.contains(&input.weight)
                || self.ld.central_weight(self.rs, &input.weight) != record.central_weight
            {
                continue;
            }
            let mut via_findim = false;
            let mut undetermined = Vec::new();
            let mut all_match = true;
            for (ideal, ir) in self.ld.ideals().iter().zip(&record.ideals) {
                match self.ideal_match(ideal, ir, &record.findim_constituents, &input.weight)? {
                    IdealMatch::InComponent => {}
                    IdealMatch::FindimConstituent => via_findim = true,
                    IdealMatch::CentralCharacterOnly => undetermined.push(ir),
                    IdealMatch::None => {
                        all_match = false;
                        break;
                    }
                }
            }
            if !all_match {
                continue;
            }
            if !undetermined.is_empty() {
                for ir in undetermined {
                    record.notes.push(format!(
                        "{}: central-character match on ideal {{{}}} ({}), containment undetermined",
                        input.name(),
                        format_nodes(&ir.nodes),
                        ir.local_type
                    ));
                }
            } else if via_findim {
                record.extra_hw_contained.push(input.clone());
            }
        }
        Ok(record)
    }

    fn new_record(
        &self,
        subset: &[usize],
        mu: Weight,
        comps: Vec<ComponentClass>,
        generator: &HighestWeightInput,
    ) -> FamilyRecord {
        let canon: Vec<&Weight> = comps.iter().map(|c| &c.canonical).collect();
        let key = key_from_parts(subset, &mu, &canon);
        let ideals = self
            .ld
            .ideals()
            .iter()
            .zip(comps)
            .map(|(ideal, component)| IdealRecord {
                nodes: ideal.nodes().to_vec(),
                local_type: ideal.local_type(),
                casimir: ideal.root_system().casimir(&component.canonical),
                component,
            })
            .collect();
        FamilyRecord {
            key,
            subset: subset.to_vec(),
            levi_shape: self.ld.shape(),
            coherent: subset.len() == self.rs.rank(),
            ideals,
            central_weight: mu,
            conformal_weight: self.conformal(&generator.weight),
            small_weyl: SmallWeylGroup { generator_nodes: vec![], order: 1, component_types: vec![] },
            twist_count: 0,
            generators: vec![generator.clone()],
            findim_constituents: vec![],
            extra_hw_contained: vec![],
            notes: vec![],
        }
    }
}

fn validate(rs: &RootSystem, inputs: &[HighestWeightInput]) -> Result<()> {
    if inputs.is_empty() {
        return Err(Error::EmptyInput);
    }
    let mut seen = BTreeSet::new();
    for input in inputs {
        rs.check_weight(&input.weight)?;
        if !seen.insert(&input.weight) {
            return Err(Error::DuplicateWeight(input.weight.to_string()));
        }
    }
    Ok(())
}

/// Classifies the irreducible semisimple standard parabolic and coherent
/// families generated by the given highest weights at level `level`.
///
/// The inputs are trusted to be the complete list of highest weights of
/// simple highest-weight modules over the quotient algebra. `cap` bounds
/// every orbit and component search.
pub fn classify(rs: &RootSystem, level: &Q, inputs: &[HighestWeightInput], cap: usize) -> Result<ClassificationReport> {
    validate(rs, inputs)?;

    let highest_weights: Vec<HighestWeightSummary> = inputs
        .iter()
        .map(|input| {
            let small_weyl = smallweyl::small_weyl_hw(rs, &input.weight);
            HighestWeightSummary {
                input: input.clone(),
                finite_dimensional: input.weight.is_dominant_integral(),
                twist_count: smallweyl::twist_count(rs, &small_weyl, None),
                small_weyl,
                conformal_weight: rs.conformal_weight(&input.weight, level).ok(),
            }
        })
        .collect();

    let infinite: Vec<&HighestWeightInput> = inputs.iter().filter(|i| !i.weight.is_dominant_integral()).collect();
    let mut families = Vec::new();
    for subset in node_subsets(rs.rank()) {
        let ld = levi(rs, &subset.iter().copied().collect());
        if !ld.is_ac_type() {
            continue;
        }
        let builder = FamilyBuilder { rs, ld, level, cap };
        let mut found: BTreeMap<String, FamilyRecord> = BTreeMap::new();
        for input in &infinite {
            let Some(comps) = builder.components(&input.weight)? else { continue };
            let mu = builder.ld.central_weight(rs, &input.weight);
            let canon: Vec<&Weight> = comps.iter().map(|c| &c.canonical).collect();
            let key = key_from_parts(&subset, &mu, &canon);
            match found.get_mut(&key) {
                Some(record) => record.generators.push((*input).clone()),
                None => {
                    let record = builder.new_record(&subset, mu, comps, input);
                    found.insert(key, record);
                }
            }
        }
        for record in found.into_values() {
            families.push(builder.finish(record, inputs)?);
        }
    }

    let mut totals = Totals {
        finite_dimensional: 0,
        highest_weight: 0,
        standard_parabolic: 0,
        parabolic: 0,
        coherent: 0,
        by_levi_shape: BTreeMap::new(),
    };
    for hw in &highest_weights {
        if hw.finite_dimensional {
            totals.finite_dimensional += hw.twist_count;
        } else {
            totals.highest_weight += hw.twist_count;
        }
    }
    for f in &families {
        if f.coherent {
            totals.coherent += f.twist_count;
        } else {
            totals.standard_parabolic += 1;
            totals.parabolic += f.twist_count;
        }
        *totals.by_levi_shape.entry(f.levi_shape.clone()).or_default() += f.twist_count;
    }

    Ok(ClassificationReport {
        algebra: rs.algebra_type(),
        level: level.clone(),
        level_diagnostic: rs.level_diagnostic(level),
        weyl_order: rs.weyl_order(),
        highest_weights,
        families,
        totals,
    })
}

/// Highest weights `lambda_{r,s} = (r - 1 - (u/v) s) omega_1` of the
/// admissible-level `sl2` example, labelled `lambda(r,s)`.
pub fn sl2_admissible_inputs(u: u64, v: u64) -> Result<Vec<HighestWeightInput>> {
    if u < 2 || v < 2 || u.gcd(&v) != 1 {
        return Err(Error::InvalidParameters(format!("need u, v >= 2 coprime, got u={u}, v={v}")));
    }
    let ratio = Q::new(BigInt::from(u), BigInt::from(v));
    let mut out = Vec::new();
    for r in 1..u {
        for s in 0..v {
            let label = q(r as i64 - 1) - &ratio * q(s as i64);
            out.push(HighestWeightInput::new(format!("lambda({r},{s})"), Weight::new(vec![label])));
        }
    }
    Ok(out)
}

/// Runs the classifier for `sl2` at the admissible level `k = u/v - 2`.
pub fn sl2_admissible(u: u64, v: u64) -> Result<ClassificationReport> {
    let inputs = sl2_admissible_inputs(u, v)?;
    let level = Q::new(BigInt::from(u), BigInt::from(v)) - q(2);
    let rs = RootSystem::new(AlgebraType::new(Series::A, 1)?);
    classify(&rs, &level, &inputs, crate::rootsys::DEFAULT_ORBIT_CAP)
}

/// Parses a `lambda(r,s)` label back into `(r, s)`.
pub fn parse_sl2_label(label: &str) -> Option<(u64, u64)> {
    let inner = label.strip_prefix("lambda(")?.strip_suffix(')')?;
    let (r, s) = inner.split_once(',')?;
    Some((r.trim().parse().ok()?, s.trim().parse().ok()?))
}

/// `((v r - u s)^2 - v^2) / (4 u v)`.
pub fn sl2_conformal_weight(u: u64, v: u64, r: u64, s: u64) -> Q {
    let (u, v, r, s) = (u as i64, v as i64, r as i64, s as i64);
    let d = v * r - u * s;
    Q::new(BigInt::from(d * d - v * v), BigInt::from(4 * u * v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::frac;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap())
    }

    fn w(labels: &[(i64, i64)]) -> Weight {
        Weight::new(labels.iter().map(|&(a, b)| frac(a, b)).collect())
    }

    fn sl3_inputs() -> Vec<HighestWeightInput> {
        vec![
            HighestWeightInput::new("0", Weight::zero(2)),
            HighestWeightInput::new("L1", w(&[(-3, 2), (0, 1)])),
            HighestWeightInput::new("L2", w(&[(0, 1), (-3, 2)])),
            HighestWeightInput::new("L3", w(&[(-1, 2), (-1, 2)])),
        ]
    }

    fn names(v: &[HighestWeightInput]) -> Vec<String> {
        v.iter().map(HighestWeightInput::name).collect()
    }

    #[test]
    fn sl3_example() {
        let report = classify(&rs("A2"), &frac(-3, 2), &sl3_inputs(), 1000).unwrap();
        let twists: Vec<u64> = report.highest_weights.iter().map(|h| h.twist_count).collect();
        assert_eq!(twists, vec![1, 3, 3, 6]);
        let p1 = report.families_at(&[1]);
        assert_eq!(p1.len(), 1);
        assert_eq!(names(&p1[0].generators), vec!["L1", "L3"]);
        assert_eq!(p1[0].ideals[0].casimir, frac(-3, 8));
        assert_eq!(p1[0].central_weight, w(&[(0, 1), (-3, 4)]));
        assert_eq!(p1[0].twist_count, 3);
        let p2 = report.families_at(&[2]);
        assert_eq!(names(&p2[0].generators), vec!["L2", "L3"]);
        assert_eq!(p2[0].twist_count, 3);
        let coh: Vec<_> = report.coherent_families().collect();
        assert_eq!(coh.len(), 1);
        assert_eq!(names(&coh[0].generators), vec!["L1", "L2", "L3"]);
        assert_eq!((report.totals.parabolic, report.totals.coherent), (6, 1));
    }

    #[test]
    fn sp4_example() {
        let inputs = vec![
            HighestWeightInput::new("0", Weight::zero(2)),
            HighestWeightInput::new("w1", Weight::from_ints(&[1, 0])),
            HighestWeightInput::new("L1", w(&[(0, 1), (-1, 2)])),
            HighestWeightInput::new("L2", w(&[(1, 1), (-3, 2)])),
        ];
        let report = classify(&rs("C2"), &frac(-1, 2), &inputs, 1000).unwrap();
        let t = &report.totals;
        assert_eq!((t.finite_dimensional, t.highest_weight, t.parabolic, t.coherent), (2, 8, 4, 1));
        assert_eq!(report.families_at(&[1]).len(), 0);
        let p = report.families_at(&[2]);
        assert_eq!(p[0].ideals[0].casimir, frac(-3, 8));
        assert_eq!(p[0].central_weight, w(&[(-1, 2), (0, 1)]));
        assert_eq!(p[0].twist_count, 4);
    }

    #[test]
    fn family_keys() {
        let report = classify(&rs("A2"), &frac(-3, 2), &sl3_inputs(), 1000).unwrap();
        for f in &report.families {
            assert_eq!(family_key(f), f.key);
        }
        let keys: BTreeSet<&String> = report.families.iter().map(|f| &f.key).collect();
        assert_eq!(keys.len(), report.families.len());
    }

    #[test]
    fn input_errors() {
        let a2 = rs("A2");
        assert_eq!(classify(&a2, &q(1), &[], 10), Err(Error::EmptyInput));
        let dup =
            vec![HighestWeightInput::unlabelled(Weight::zero(2)), HighestWeightInput::unlabelled(Weight::zero(2))];
        assert!(matches!(classify(&a2, &q(1), &dup, 10), Err(Error::DuplicateWeight(_))));
        let bad = vec![HighestWeightInput::unlabelled(Weight::zero(3))];
        assert!(matches!(classify(&a2, &q(1), &bad, 10), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn critical_level_has_no_conformal_weights() {
        let report = classify(&rs("A2"), &q(-3), &sl3_inputs(), 1000).unwrap();
        assert!(report.level_diagnostic.critical);
        assert!(report.highest_weights.iter().all(|h| h.conformal_weight.is_none()));
    }

    #[test]
    fn sl2_admissible_examples() {
        assert_eq!(sl2_admissible(3, 2).unwrap().totals.coherent, 1);
        let r = sl2_admissible(3, 2).unwrap();
        assert_eq!(r.families[0].conformal_weight, Some(frac(-1, 8)));
        assert_eq!(sl2_admissible(5, 2).unwrap().totals.coherent, 2);
        let r = sl2_admissible(2, 3).unwrap();
        assert_eq!(r.totals.coherent, 1);
        assert_eq!(names(&r.families[0].generators), vec!["lambda(1,1)", "lambda(1,2)"]);
        assert!(matches!(sl2_admissible(4, 2), Err(Error::InvalidParameters(_))));
        assert!(matches!(sl2_admissible(1, 2), Err(Error::InvalidParameters(_))));
        assert_eq!(parse_sl2_label("lambda(3,1)"), Some((3, 1)));
        assert_eq!(sl2_conformal_weight(3, 2, 1, 1), frac(-1, 8));
    }
}
