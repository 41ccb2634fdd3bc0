use rand::Rng;

use crate::angles::{cos_dixmier_exact, cos_dixmier_faces, cos_friedrichs};
use crate::cone::PolyhedralCone;
use crate::error::Result;
use crate::linalg::Vector;

use super::random::trial_rng;
use super::{cone_json, vector_json, TheoremReport, CLOSURE_NOTE, HYPOTHESIS_MARGIN};

/// Slack for cone identities tested by generator membership.
pub const SET_TOL: f64 = 1e-7;
/// Slack for equalities and inequalities between cosines.
pub const ANGLE_TOL: f64 = 1e-7;
/// Slack for the sampled inner-product bound.
pub const BOUND_TOL: f64 = 1e-8;

const SAMPLE_SEED: u64 = 0x5eed;

fn c0(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<f64> {
    Ok(cos_dixmier_exact(a, b)?.cosine)
}

fn cf(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<f64> {
    Ok(cos_friedrichs(a, b)?.cosine)
}

fn meet_is_zero(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<bool> {
    Ok(a.intersect(b)?.is_zero())
}

fn linear(k: &PolyhedralCone) -> bool {
    k.is_linear_subspace(SET_TOL)
}

/// `(A + B) ∩ B^⊥ = A`, the shape shared by several closure hypotheses.
fn sum_meets_complement_is(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<bool> {
    a.sum(b)?
        .intersect(&b.orthogonal_complement()?)?
        .equals(a, SET_TOL)
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= ANGLE_TOL
}

/// Random nonnegative combination of the generators.
fn sample_member(k: &PolyhedralCone, rng: &mut impl Rng) -> Vector {
    let mut x = Vector::zeros(k.dim());
    for g in k.generators() {
        let w: f64 = rng.random::<f64>();
        x.axpy(w * w, g, 1.0);
    }
    x
}

/// All basic facts about the pair: polar and dual involutions, polar of an
/// intersection, angle ranges, the sampled inner-product bound, and the
/// finite-dimensional characterisations of `K1 ∩ K2 = {0}`.
pub fn check_basic_facts(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    samples: usize,
) -> Result<Vec<TheoremReport>> {
    let p1 = k1.polar()?;
    let p2 = k2.polar()?;
    Ok(vec![
        check_polar_involution(k1, k2)?,
        check_dual_involution(k1, k2)?,
        check_polar_of_intersection(k1, k2, &p1, &p2)?,
        check_angle_ranges(k1, k2)?,
        check_inner_product_bound(k1, k2, samples)?,
        check_common_ray_unit_cosine(k1, k2)?,
        check_trivial_meet_iff_polar_sum_full(k1, k2)?,
        check_finite_dim_dichotomy(k1, k2)?,
        check_polar_dual_meets_nontrivial(k1, k2)?,
    ])
}

/// `K⊖⊖ = K` for both cones.
pub fn check_polar_involution(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("polar_involution", SET_TOL);
    let a = k1.polar()?.polar()?.equals(k1, SET_TOL)?;
    let b = k2.polar()?.polar()?.equals(k2, SET_TOL)?;
    r.witness("first", a).witness("second", b).conclude(a && b);
    Ok(r)
}

/// `K⊕⊕ = K` and `(-K)⊖ = -K⊖ = K⊕` for both cones.
pub fn check_dual_involution(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("dual_involution", SET_TOL);
    let mut ok = true;
    for (name, k) in [("first", k1), ("second", k2)] {
        let dual = k.dual()?;
        let involution = dual.dual()?.equals(k, SET_TOL)?;
        let negation = k.negate().polar()?.equals(&dual, SET_TOL)?
            && k.polar()?.negate().equals(&dual, SET_TOL)?;
        r.witness(&format!("{name}_involution"), involution)
            .witness(&format!("{name}_negation"), negation);
        ok &= involution && negation;
    }
    r.conclude(ok);
    Ok(r)
}

/// `(K1 ∩ K2)⊖ = K1⊖ + K2⊖`, with the polars passed in so that corrupted
/// inputs can be shown to fail.
pub fn check_polar_of_intersection(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    polar1: &PolyhedralCone,
    polar2: &PolyhedralCone,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("polar_of_intersection", SET_TOL);
    let lhs = k1.intersect(k2)?.polar()?;
    let rhs = polar1.sum(polar2)?;
    let ok = lhs.equals(&rhs, SET_TOL)?;
    r.note(CLOSURE_NOTE)
        .witness("polar_of_meet", cone_json(&lhs))
        .witness("sum_of_polars", cone_json(&rhs))
        .conclude(ok);
    Ok(r)
}

/// `0 <= c <= c0 <= 1`, symmetry of `c0`, and invariance of `c0` and `c`
/// under negating both cones.
pub fn check_angle_ranges(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("angle_ranges_and_symmetries", 1e-10);
    let d12 = c0(k1, k2)?;
    let d21 = c0(k2, k1)?;
    let f12 = cf(k1, k2)?;
    let (n1, n2) = (k1.negate(), k2.negate());
    let dn = c0(&n1, &n2)?;
    let fn_ = cf(&n1, &n2)?;
    let ordered = 0.0 <= f12 && f12 <= d12 + 1e-10 && d12 <= 1.0;
    let ok = ordered
        && (d12 - d21).abs() <= 1e-10
        && (d12 - dn).abs() <= 1e-10
        && (f12 - fn_).abs() <= 1e-10;
    r.witness("c0", d12)
        .witness("c0_swapped", d21)
        .witness("c", f12)
        .witness("c0_negated", dn)
        .witness("c_negated", fn_)
        .conclude(ok);
    Ok(r)
}

/// `<x, y> <= c0 ||x|| ||y||` on sampled members, and `|<x, y>|` on the
/// left when one of the cones is a subspace.
pub fn check_inner_product_bound(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    samples: usize,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("inner_product_bound", BOUND_TOL);
    let c = c0(k1, k2)?;
    let two_sided = linear(k1) || linear(k2);
    let mut rng = trial_rng(SAMPLE_SEED, 0);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..samples {
        let x = sample_member(k1, &mut rng);
        let y = sample_member(k2, &mut rng);
        let ip = x.dot(&y);
        let lhs = if two_sided { ip.abs() } else { ip };
        worst = worst.max(lhs - c * x.norm() * y.norm());
    }
    r.witness("c0", c)
        .witness("two_sided", two_sided)
        .witness("samples", samples)
        .witness("worst_excess", if samples == 0 { 0.0 } else { worst })
        .conclude(samples == 0 || worst <= BOUND_TOL);
    Ok(r)
}

/// A common nonzero vector forces `c0 = 1`, computed without the
/// intersection shortcut.
pub fn check_common_ray_unit_cosine(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("common_ray_unit_cosine", HYPOTHESIS_MARGIN);
    let meets = !meet_is_zero(k1, k2)?;
    r.hypothesis("cones_share_nonzero_vector", meets);
    if meets {
        let c = cos_dixmier_faces(k1, k2)?.cosine;
        r.witness("c0", c).conclude(c >= 1.0 - HYPOTHESIS_MARGIN);
    }
    Ok(r)
}

/// `K1 ∩ K2 = {0}` iff `K1⊖ + K2⊖` is the whole space.
pub fn check_trivial_meet_iff_polar_sum_full(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("trivial_meet_iff_polar_sum_full", SET_TOL);
    let trivial = meet_is_zero(k1, k2)?;
    let full = k1.polar()?.sum(&k2.polar()?)?.is_whole_space(SET_TOL);
    r.note(CLOSURE_NOTE)
        .witness("trivial_meet", trivial)
        .witness("polar_sum_is_whole_space", full)
        .conclude(trivial == full);
    Ok(r)
}

/// In finite dimensions: `K1 ∩ K2 ≠ {0}` iff `c0 = 1`; `K1 ∩ K2 = {0}` iff
/// `c0 = c`; `K1 ∩ K2 = {0}` iff `c0 < 1`.
pub fn check_finite_dim_dichotomy(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("finite_dim_dichotomy", HYPOTHESIS_MARGIN);
    let trivial = meet_is_zero(k1, k2)?;
    let d = cos_dixmier_faces(k1, k2)?.cosine;
    let f = cf(k1, k2)?;
    let unit = d >= 1.0 - HYPOTHESIS_MARGIN;
    let equal = (d - f).abs() <= HYPOTHESIS_MARGIN;
    r.witness("trivial_meet", trivial)
        .witness("c0", d)
        .witness("c", f)
        .conclude(trivial != unit && trivial == equal);
    Ok(r)
}

/// For `K1 ∩ K2 = {0}` with `K1` not linear, both `K1⊖ ∩ K2⊕` and
/// `K1⊕ ∩ K2⊖` are nonzero.
pub fn check_polar_dual_meets_nontrivial(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("polar_dual_meets_nontrivial", SET_TOL);
    r.hypothesis("trivial_meet", meet_is_zero(k1, k2)?)
        .hypothesis("first_cone_not_linear", !linear(k1));
    if r.hypotheses_hold {
        let a = !meet_is_zero(&k1.polar()?, &k2.dual()?)?;
        let b = !meet_is_zero(&k1.dual()?, &k2.polar()?)?;
        r.witness("polar_meets_dual", a)
            .witness("dual_meets_polar", b)
            .conclude(a && b);
    }
    Ok(r)
}

/// `K1 ⊆ K2` implies `c(K1, K2) = 0 = c(K1⊖, K2⊖)`.
pub fn check_nested(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("nested_cones_zero_friedrichs", 1e-8);
    r.hypothesis("first_inside_second", k1.is_subset_of(k2, SET_TOL)?);
    if r.hypotheses_hold {
        let a = cf(k1, k2)?;
        let b = cf(&k1.polar()?, &k2.polar()?)?;
        r.witness("c", a)
            .witness("c_polars", b)
            .conclude(a <= 1e-8 && b <= 1e-8);
    }
    Ok(r)
}

/// For `c0(K1, K2) < 1` and a convex cone `X ⊇ K1 - K2`:
/// `c0(K1, K2) <= c0(K1⊕ ∩ X, K2⊖ ∩ X) <= c0(K1⊕, K2⊖)`.
/// `X` defaults to `K1 - K2`.
pub fn check_hundal_extension(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    x_cone: Option<&PolyhedralCone>,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("conical_hundal_chain", ANGLE_TOL);
    let diff = k1.difference(k2)?;
    let x = x_cone.unwrap_or(&diff);
    let base = c0(k1, k2)?;
    r.witness("c0", base)
        .hypothesis("c0_below_one", base < 1.0 - HYPOTHESIS_MARGIN)
        .hypothesis("difference_inside_x", diff.is_subset_of(x, SET_TOL)?);
    if r.hypotheses_hold {
        let d1 = k1.dual()?;
        let p2 = k2.polar()?;
        let middle = c0(&d1.intersect(x)?, &p2.intersect(x)?)?;
        let top = c0(&d1, &p2)?;
        r.witness("c0_restricted", middle)
            .witness("c0_dual_polar", top)
            .conclude(base <= middle + ANGLE_TOL && middle <= top + ANGLE_TOL);
    }
    Ok(r)
}

/// For `K1 ∩ K2 = {0}` the following are equivalent: `K1 - K2` is a
/// subspace; `(-K1) ∪ K2 ⊆ K1 - K2`; both cones are subspaces.
pub fn check_difference_lemma(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("difference_subspace_equivalence", SET_TOL);
    r.hypothesis("trivial_meet", meet_is_zero(k1, k2)?);
    if r.hypotheses_hold {
        let diff = k1.difference(k2)?;
        let a = linear(&diff);
        let b = k1.negate().is_subset_of(&diff, SET_TOL)? && k2.is_subset_of(&diff, SET_TOL)?;
        let c = linear(k1) && linear(k2);
        r.witness("difference_is_subspace", a)
            .witness("contains_negated_first_and_second", b)
            .witness("both_subspaces", c)
            .conclude(a == b && b == c);
    }
    Ok(r)
}

/// `K1 ∩ K2 = {0}` and `K1 - K2 = R^n` force both cones to be subspaces and
/// `c0(K1, K2) = c0(K1⊕, K2⊖) = c0(K1⊖, K2⊕) = c0(K1^⊥, K2^⊥)`.
pub fn check_kkm_conical(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("conical_complement_equalities", ANGLE_TOL);
    r.hypothesis("trivial_meet", meet_is_zero(k1, k2)?)
        .hypothesis(
            "difference_is_whole_space",
            k1.difference(k2)?.is_whole_space(SET_TOL),
        );
    if r.hypotheses_hold {
        let both = linear(k1) && linear(k2);
        let vals = [
            c0(k1, k2)?,
            c0(&k1.dual()?, &k2.polar()?)?,
            c0(&k1.polar()?, &k2.dual()?)?,
            c0(&k1.orthogonal_complement()?, &k2.orthogonal_complement()?)?,
        ];
        r.witness("both_subspaces", both)
            .witness("cosines", vals.to_vec())
            .conclude(both && vals.iter().all(|&v| close(v, vals[0])));
    }
    Ok(r)
}

/// Hypotheses of the conical Solmon inequality, evaluated in order of cost.
/// With `short_circuit` evaluation stops at the first failure.
pub fn solmon_hypotheses(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
    short_circuit: bool,
) -> Result<Vec<(&'static str, bool)>> {
    let mut out = Vec::new();
    macro_rules! record {
        ($name:expr, $holds:expr) => {{
            let holds = $holds;
            out.push(($name, holds));
            if short_circuit && !holds {
                return Ok(out);
            }
        }};
    }
    let meet = k1.intersect(k2)?;
    record!("meet_is_subspace", linear(&meet));
    let d1 = k1.dual()?;
    let p2 = k2.polar()?;
    record!("dual_polar_meet_is_subspace", linear(&d1.intersect(&p2)?));
    record!("dual_restores", sum_meets_complement_is(&d1, &meet)?);
    record!("polar_restores", sum_meets_complement_is(&p2, &meet)?);
    record!("c_below_one", cf(k1, k2)? < 1.0 - HYPOTHESIS_MARGIN);
    Ok(out)
}

/// Under `c(K1, K2) < 1`, linear `K1 ∩ K2` and `K1⊕ ∩ K2⊖`, and the two
/// restoration identities, `c(K1, K2) <= c(K1⊕, K2⊖)`; with the mirrored
/// hypotheses as well, equality.
pub fn check_solmon_conical(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("conical_solmon_inequality", ANGLE_TOL);
    r.note(CLOSURE_NOTE);
    for (name, holds) in solmon_hypotheses(k1, k2, false)? {
        r.hypothesis(name, holds);
    }
    let d1 = k1.dual()?;
    let p2 = k2.polar()?;
    let e = d1.intersect(&p2)?;
    r.witness("first_linear", linear(k1))
        .witness("second_linear", linear(k2))
        .witness("dual_polar_meet", cone_json(&e));
    if r.hypotheses_hold {
        let c = cf(k1, k2)?;
        let cd = cf(&d1, &p2)?;
        let eq_hyps = cd < 1.0 - HYPOTHESIS_MARGIN
            && sum_meets_complement_is(k1, &e)?
            && sum_meets_complement_is(k2, &e)?;
        let inequality = c <= cd + ANGLE_TOL;
        let equality = close(c, cd);
        r.witness("c", c)
            .witness("c_dual_polar", cd)
            .witness("equality_hypotheses_hold", eq_hyps)
            .witness("equality_holds", equality)
            .conclude(inequality && (!eq_hyps || equality));
    }
    Ok(r)
}

/// For subspaces `M`, `N`: `c(M, N) = c(M^⊥, N^⊥)`.
pub fn check_subspace_solmon(m: &PolyhedralCone, n: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("subspace_friedrichs_complement", ANGLE_TOL);
    r.hypothesis("both_subspaces", linear(m) && linear(n));
    if r.hypotheses_hold {
        let a = cf(m, n)?;
        let b = cf(&m.orthogonal_complement()?, &n.orthogonal_complement()?)?;
        r.witness("c", a)
            .witness("c_complements", b)
            .conclude(close(a, b));
    }
    Ok(r)
}

/// For `A ⊥ B`: `(A + B) ∩ B⊖ = A`, and `(A + B) ∩ B^⊥ = A` when `B` is a
/// subspace.
pub fn check_orthogonal_sum_polar(a: &PolyhedralCone, b: &PolyhedralCone) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("orthogonal_sum_meets_polar", SET_TOL);
    let orthogonal = a.generators().iter().all(|x| {
        b.generators()
            .iter()
            .all(|y| x.dot(y).abs() <= SET_TOL * x.norm() * y.norm())
    });
    r.hypothesis("origin_in_second", true)
        .hypothesis("first_orthogonal_to_second", orthogonal);
    if r.hypotheses_hold {
        let s = a.sum(b)?;
        let ok = s.intersect(&b.polar()?)?.equals(a, SET_TOL)?;
        let sub = linear(b);
        let ok_perp = !sub
            || s.intersect(&b.orthogonal_complement()?)?
                .equals(a, SET_TOL)?;
        r.witness("polar_form", ok)
            .witness("second_is_subspace", sub)
            .witness("complement_form", ok_perp)
            .conclude(ok && ok_perp);
    }
    Ok(r)
}

/// For `K1 ∩ K2 = {0}` and `K1⊕ ∩ K2⊖ = {0}` in finite dimensions:
/// `c0(K1, K2) = c(K1, K2) = c(K1⊕, K2⊖) = c0(K1⊕, K2⊖)`.
pub fn check_finite_dim_equalities(
    k1: &PolyhedralCone,
    k2: &PolyhedralCone,
) -> Result<TheoremReport> {
    let mut r = TheoremReport::new("finite_dim_four_way_equality", ANGLE_TOL);
    let d1 = k1.dual()?;
    let p2 = k2.polar()?;
    r.hypothesis("trivial_meet", meet_is_zero(k1, k2)?)
        .hypothesis("trivial_dual_polar_meet", meet_is_zero(&d1, &p2)?);
    if r.hypotheses_hold {
        let vals = [c0(k1, k2)?, cf(k1, k2)?, cf(&d1, &p2)?, c0(&d1, &p2)?];
        r.witness("cosines", vals.to_vec())
            .conclude(vals.iter().all(|&v| close(v, vals[0])));
    }
    Ok(r)
}

/// Certificate payload for a computed Dixmier cosine.
pub fn angle_witness(k1: &PolyhedralCone, k2: &PolyhedralCone) -> Result<serde_json::Value> {
    let res = cos_dixmier_exact(k1, k2)?;
    let mut m = serde_json::Map::new();
    m.insert("cosine".into(), res.cosine.into());
    if let Some(c) = &res.certificate {
        m.insert("x".into(), vector_json(&c.x));
        m.insert("y".into(), vector_json(&c.y));
    }
    Ok(m.into())
}

#[cfg(test)]
mod tests {
    use super::super::Verdict;
    use super::*;
    use crate::cone::ConeSpec;

    fn cone(dim: usize, gens: &[&[f64]]) -> PolyhedralCone {
        let spec = ConeSpec::new(dim, gens.iter().map(|g| g.to_vec()).collect());
        PolyhedralCone::from_spec(&spec, 1e-9).unwrap()
    }

    fn orthant() -> PolyhedralCone {
        cone(2, &[&[1.0, 0.0], &[0.0, 1.0]])
    }

    fn lower_halfplane() -> PolyhedralCone {
        cone(2, &[&[1.0, -1.0], &[-1.0, 1.0], &[-1.0, -1.0]])
    }

    fn lines() -> (PolyhedralCone, PolyhedralCone) {
        (
            cone(2, &[&[1.0, 0.0], &[-1.0, 0.0]]),
            cone(2, &[&[1.0, 1.0], &[-1.0, -1.0]]),
        )
    }

    #[test]
    fn basic_facts_on_example_pair() {
        let reports = check_basic_facts(&orthant(), &lower_halfplane(), 200).unwrap();
        for r in &reports {
            assert!(r.passed(), "{}", r.theorem_id);
        }
        let meet = reports
            .iter()
            .find(|r| r.theorem_id == "trivial_meet_iff_polar_sum_full")
            .unwrap();
        assert_eq!(meet.conclusion, Verdict::Holds);
        assert_eq!(meet.witness["trivial_meet"], true);
    }

    #[test]
    fn corrupted_polar_fails() {
        let k1 = orthant();
        let k2 = lower_halfplane();
        let bad = cone(2, &[&[1.0, 0.0], &[0.0, -1.0]]);
        let r = check_polar_of_intersection(&k1, &k2, &bad, &k2.polar().unwrap()).unwrap();
        assert_eq!(r.conclusion, Verdict::Fails);
    }

    #[test]
    fn nested_examples() {
        let ray = cone(2, &[&[1.0, 0.0]]);
        assert_eq!(
            check_nested(&ray, &orthant()).unwrap().conclusion,
            Verdict::Holds
        );
        assert_eq!(
            check_nested(&orthant(), &orthant()).unwrap().conclusion,
            Verdict::Holds
        );
        let r = check_nested(&orthant(), &lower_halfplane()).unwrap();
        assert_eq!(r.conclusion, Verdict::NotApplicable);
        assert!(!r.hypotheses_hold);
    }

    #[test]
    fn hundal_examples() {
        let full = PolyhedralCone::full(2).unwrap();
        let r = check_hundal_extension(&orthant(), &lower_halfplane(), Some(&full)).unwrap();
        assert_eq!(r.conclusion, Verdict::Holds);
        let r = check_hundal_extension(&orthant(), &orthant(), None).unwrap();
        assert_eq!(r.conclusion, Verdict::NotApplicable);
    }

    #[test]
    fn difference_examples() {
        let r = check_difference_lemma(&orthant(), &lower_halfplane()).unwrap();
        assert_eq!(r.conclusion, Verdict::Holds);
        assert_eq!(r.witness["both_subspaces"], false);
        let (a, b) = lines();
        let r = check_difference_lemma(&a, &b).unwrap();
        assert_eq!(r.conclusion, Verdict::Holds);
        assert_eq!(r.witness["difference_is_subspace"], true);
        let r = check_difference_lemma(&orthant(), &orthant()).unwrap();
        assert_eq!(r.conclusion, Verdict::NotApplicable);
    }

    #[test]
    fn kkm_examples() {
        let (a, b) = lines();
        let r = check_kkm_conical(&a, &b).unwrap();
        assert_eq!(r.conclusion, Verdict::Holds);
        let r = check_kkm_conical(&orthant(), &lower_halfplane()).unwrap();
        assert_eq!(r.conclusion, Verdict::NotApplicable);
        assert!(!r.hypotheses[1].holds);
    }

    #[test]
    fn solmon_linearity_hypothesis_flagged() {
        // M = R(1,0), K = {x2 >= x1 >= 0}
        let m = cone(2, &[&[1.0, 0.0], &[-1.0, 0.0]]);
        let k = cone(2, &[&[0.0, 1.0], &[1.0, 1.0]]);
        let r = check_solmon_conical(&m, &k).unwrap();
        assert_eq!(r.conclusion, Verdict::NotApplicable);
        let failed: Vec<_> = r.hypotheses.iter().filter(|h| !h.holds).collect();
        assert_eq!(failed.len(), 1);
        assert_eq!(failed[0].name, "dual_polar_meet_is_subspace");
    }

    #[test]
    fn solmon_on_lines() {
        let (a, b) = lines();
        let r = check_solmon_conical(&a, &b).unwrap();
        assert_eq!(r.conclusion, Verdict::Holds);
        assert_eq!(r.witness["equality_holds"], true);
    }

    #[test]
    fn orthogonal_sum_examples() {
        let a = cone(2, &[&[0.0, 1.0]]);
        let b = cone(2, &[&[1.0, 0.0], &[-1.0, 0.0]]);
        assert_eq!(
            check_orthogonal_sum_polar(&a, &b).unwrap().conclusion,
            Verdict::Holds
        );
        let z = PolyhedralCone::zero(2).unwrap();
        assert_eq!(
            check_orthogonal_sum_polar(&z, &b).unwrap().conclusion,
            Verdict::Holds
        );
        let r = check_orthogonal_sum_polar(&orthant(), &b).unwrap();
        assert_eq!(r.conclusion, Verdict::NotApplicable);
    }

    #[test]
    fn finite_dim_examples() {
        let (a, b) = lines();
        let r = check_finite_dim_equalities(&a, &b).unwrap();
        assert_eq!(r.conclusion, Verdict::Holds);
        let r = check_finite_dim_equalities(&orthant(), &lower_halfplane()).unwrap();
        assert_eq!(r.conclusion, Verdict::NotApplicable);
    }
}
