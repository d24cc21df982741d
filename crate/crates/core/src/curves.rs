//! Point counts for the two curve families attached to the BCH and Melas
//! duals, and censuses of whole families.
//!
//! Counting uses the Artin–Schreier criterion: over F_{2^m}, `y² + y = c`
//! has two solutions when `Tr(c) = 0` and none otherwise. That makes every
//! count O(q). Double-loop counters are kept for small fields as oracles.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::classnum::class_number_row;
use crate::error::{Error, Result};
use crate::exec::{add_histograms, map_reduce, Execution};
use crate::gf2m::{FieldContext, FieldElement};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveParams {
    /// `Y² + Y = λX + μX³`.
    Cubic { lambda: FieldElement, mu: FieldElement },
    /// `Y² + XY = X³ + ν²X`.
    Melas { nu: FieldElement },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveCount {
    pub params: CurveParams,
    pub q: u64,
    /// `#E(F_q)`, including the point at infinity.
    pub points: u64,
    /// `t = q + 1 − #E(F_q)`.
    pub frobenius_trace: i64,
}

impl CurveCount {
    fn new(params: CurveParams, q: u64, points: u64) -> Self {
        Self {
            params,
            q,
            points,
            frobenius_trace: q as i64 + 1 - points as i64,
        }
    }

    pub fn satisfies_hasse(&self) -> bool {
        let t = self.frobenius_trace;
        (t * t) as u64 <= 4 * self.q
    }
}

fn cubic_rhs(ctx: &FieldContext, lambda: FieldElement, mu: FieldElement, x: FieldElement) -> FieldElement {
    let x3 = ctx.mul(ctx.square(x), x);
    ctx.add(ctx.mul(lambda, x), ctx.mul(mu, x3))
}

/// `#E(F_q)` for `Y² + Y = λX + μX³`, `μ ≠ 0`.
pub fn count_points_cubic(ctx: &FieldContext, lambda: FieldElement, mu: FieldElement) -> Result<CurveCount> {
    if mu.is_zero() {
        return Err(Error::ZeroParameter("mu"));
    }
    let zeros = ctx
        .elements()
        .filter(|&x| ctx.trace(cubic_rhs(ctx, lambda, mu, x)) == 0)
        .count() as u64;
    Ok(CurveCount::new(CurveParams::Cubic { lambda, mu }, ctx.q() as u64, 1 + 2 * zeros))
}

/// Double loop over `(x, y)`; oracle for [`count_points_cubic`].
pub fn count_points_cubic_naive(ctx: &FieldContext, lambda: FieldElement, mu: FieldElement) -> CurveCount {
    let mut affine = 0u64;
    for x in ctx.elements() {
        let rhs = cubic_rhs(ctx, lambda, mu, x);
        for y in ctx.elements() {
            if ctx.add(ctx.square(y), y) == rhs {
                affine += 1;
            }
        }
    }
    CurveCount::new(CurveParams::Cubic { lambda, mu }, ctx.q() as u64, affine + 1)
}

/// `#E(F_q)` for `Y² + XY = X³ + ν²X`, `ν ≠ 0`.
///
/// For `x ≠ 0`, `Y = xZ` turns the equation into `Z² + Z = x + ν²/x`; the
/// line `X = 0` contributes only `(0, 0)`.
pub fn count_points_melas_curve(ctx: &FieldContext, nu: FieldElement) -> Result<CurveCount> {
    if nu.is_zero() {
        return Err(Error::ZeroParameter("nu"));
    }
    let nu2 = ctx.square(nu);
    let zeros = ctx
        .nonzero_elements()
        .filter(|&x| {
            let inv = ctx.inverse(x).expect("nonzero");
            ctx.trace(ctx.add(x, ctx.mul(nu2, inv))) == 0
        })
        .count() as u64;
    Ok(CurveCount::new(CurveParams::Melas { nu }, ctx.q() as u64, 2 + 2 * zeros))
}

/// Double loop over `(x, y)`; oracle for [`count_points_melas_curve`].
pub fn count_points_melas_curve_naive(ctx: &FieldContext, nu: FieldElement) -> CurveCount {
    let nu2 = ctx.square(nu);
    let mut affine = 0u64;
    for x in ctx.elements() {
        let rhs = ctx.add(ctx.mul(ctx.square(x), x), ctx.mul(nu2, x));
        for y in ctx.elements() {
            if ctx.add(ctx.square(y), ctx.mul(x, y)) == rhs {
                affine += 1;
            }
        }
    }
    CurveCount::new(CurveParams::Melas { nu }, ctx.q() as u64, affine + 1)
}

/// Weight of the BCH dual word attached to a cubic curve with `points` points.
pub fn bch_weight_from_points(q: u64, points: u64) -> u64 {
    (q - 1) - (points - 3) / 2
}

/// Weight of the Melas dual word attached to a curve with Frobenius trace `t`.
pub fn melas_weight_from_trace(q: u64, t: i64) -> u64 {
    ((q as i64 - 1 + t) / 2) as u64
}

/// Number of parameter pairs `(λ, μ ≠ 0)` giving each point count.
pub fn bch_family_census(ctx: &FieldContext) -> BTreeMap<u64, u64> {
    bch_family_census_with(ctx, Execution::default())
}

pub fn bch_family_census_with(ctx: &FieldContext, exec: Execution) -> BTreeMap<u64, u64> {
    let q = ctx.q() as u64;
    let hist = map_reduce(
        exec,
        q * (q - 1),
        vec![0u64; 2 * q as usize + 2],
        |range| {
            let mut hist = vec![0u64; 2 * q as usize + 2];
            for idx in range {
                let lambda = ctx.element(idx % q);
                let mu = ctx.element(idx / q + 1);
                let c = count_points_cubic(ctx, lambda, mu).expect("mu nonzero");
                hist[c.points as usize] += 1;
            }
            hist
        },
        add_histograms,
    );
    sparse_map(hist.into_iter().enumerate().map(|(n, c)| (n as u64, c)))
}

/// Number of `ν ∈ F_q*` giving each Frobenius trace.
pub fn melas_family_census(ctx: &FieldContext) -> BTreeMap<i64, u64> {
    melas_family_census_with(ctx, Execution::default())
}

pub fn melas_family_census_with(ctx: &FieldContext, exec: Execution) -> BTreeMap<i64, u64> {
    let q = ctx.q() as u64;
    let hist = map_reduce(
        exec,
        q - 1,
        vec![0u64; 2 * q as usize + 2],
        |range| {
            let mut hist = vec![0u64; 2 * q as usize + 2];
            for idx in range {
                let c = count_points_melas_curve(ctx, ctx.element(idx + 1)).expect("nu nonzero");
                hist[c.points as usize] += 1;
            }
            hist
        },
        add_histograms,
    );
    sparse_map(
        hist.into_iter()
            .enumerate()
            .map(|(n, c)| (q as i64 + 1 - n as i64, c)),
    )
}

fn sparse_map<K: Ord>(it: impl Iterator<Item = (K, u64)>) -> BTreeMap<K, u64> {
    it.filter(|&(_, c)| c > 0).collect()
}

/// The irrational unit in supersingular point counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Root {
    /// `√(2q)`, integral for odd `m`.
    Sqrt2q,
    /// `√q`, integral for even `m`.
    Sqrtq,
}

/// One isomorphism class: `#E = q + 1 + multiple·root`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SupersingularClass {
    pub multiple: i32,
    pub root: Root,
    pub frequency: u32,
    pub automorphisms: u32,
}

impl SupersingularClass {
    pub fn points(&self, m: u32) -> u64 {
        let q = 1i64 << m;
        let root = match self.root {
            Root::Sqrt2q => 1i64 << m.div_ceil(2),
            Root::Sqrtq => 1i64 << (m / 2),
        };
        (q + 1 + self.multiple as i64 * root) as u64
    }
}

impl fmt::Display for SupersingularClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let root = match self.root {
            Root::Sqrt2q => "√(2q)",
            Root::Sqrtq => "√q",
        };
        match self.multiple {
            0 => write!(f, "q+1"),
            1 => write!(f, "q+1+{root}"),
            -1 => write!(f, "q+1−{root}"),
            k if k > 0 => write!(f, "q+1+{k}{root}"),
            k => write!(f, "q+1−{}{root}", -k),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SupersingularClassTable {
    pub m: u32,
    pub m_odd: bool,
    pub rows: Vec<SupersingularClass>,
}

impl SupersingularClassTable {
    pub fn class_count(&self) -> u32 {
        self.rows.iter().map(|r| r.frequency).sum()
    }
}

/// Supersingular isomorphism classes over F_{2^m}, sorted by point count.
pub fn supersingular_classes(m: u32) -> Result<SupersingularClassTable> {
    if m < 2 {
        return Err(Error::DegreeOutOfRange(m));
    }
    let row = |multiple, root, frequency, automorphisms| SupersingularClass {
        multiple,
        root,
        frequency,
        automorphisms,
    };
    let rows = if m % 2 == 1 {
        vec![
            row(-1, Root::Sqrt2q, 1, 4),
            row(0, Root::Sqrt2q, 1, 2),
            row(1, Root::Sqrt2q, 1, 4),
        ]
    } else {
        vec![
            row(-2, Root::Sqrtq, 1, 24),
            row(-1, Root::Sqrtq, 2, 6),
            row(0, Root::Sqrtq, 1, 4),
            row(1, Root::Sqrtq, 2, 6),
            row(2, Root::Sqrtq, 1, 24),
        ]
    };
    Ok(SupersingularClassTable { m, m_odd: m % 2 == 1, rows })
}

/// Expected census: each class with `N` points occurs
/// `(q − 1)(N − 1)·frequency / #Aut` times in the cubic family.
pub fn bch_census_prediction(m: u32) -> Result<BTreeMap<u64, u64>> {
    let q = 1u64 << m;
    let mut out = BTreeMap::new();
    for class in supersingular_classes(m)?.rows {
        let n = class.points(m);
        let num = (q - 1) * (n - 1) * class.frequency as u64;
        debug_assert_eq!(num % class.automorphisms as u64, 0);
        *out.entry(n).or_insert(0) += num / class.automorphisms as u64;
    }
    Ok(out)
}

/// Expected Melas census: `H(t² − 4q)` for each admissible trace.
pub fn melas_census_prediction(m: u32) -> Result<BTreeMap<i64, u64>> {
    Ok(class_number_row(1u64 << m)?
        .entries
        .into_iter()
        .filter(|e| e.h > 0)
        .map(|e| (e.t, e.h))
        .collect())
}

/// Census result with its prediction, serialized as a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub q: u64,
    pub family: String,
    pub histogram: BTreeMap<i64, u64>,
    pub predicted: BTreeMap<i64, u64>,
    #[serde(rename = "match")]
    pub matches: bool,
}

pub fn bch_census_report(ctx: &FieldContext) -> Result<CensusReport> {
    let to_signed = |m: BTreeMap<u64, u64>| m.into_iter().map(|(k, v)| (k as i64, v)).collect::<BTreeMap<_, _>>();
    let histogram = to_signed(bch_family_census(ctx));
    let predicted = to_signed(bch_census_prediction(ctx.m())?);
    Ok(CensusReport {
        q: ctx.q() as u64,
        family: "bch2".into(),
        matches: histogram == predicted,
        histogram,
        predicted,
    })
}

pub fn melas_census_report(ctx: &FieldContext) -> Result<CensusReport> {
    let histogram = melas_family_census(ctx);
    let predicted = melas_census_prediction(ctx.m())?;
    Ok(CensusReport {
        q: ctx.q() as u64,
        family: "melas".into(),
        matches: histogram == predicted,
        histogram,
        predicted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{trace_word, Family};
    use crate::gf2m::make_field;

    #[test]
    fn trace_count_matches_naive_count() {
        for m in 2..=5 {
            let ctx = make_field(m).unwrap();
            for lambda in ctx.elements() {
                for mu in ctx.nonzero_elements() {
                    assert_eq!(
                        count_points_cubic(&ctx, lambda, mu).unwrap(),
                        count_points_cubic_naive(&ctx, lambda, mu)
                    );
                }
            }
            for nu in ctx.nonzero_elements() {
                assert_eq!(
                    count_points_melas_curve(&ctx, nu).unwrap(),
                    count_points_melas_curve_naive(&ctx, nu)
                );
            }
        }
    }

    #[test]
    fn zero_parameters_rejected() {
        let ctx = make_field(3).unwrap();
        assert_eq!(
            count_points_cubic(&ctx, FieldElement::ONE, FieldElement::ZERO),
            Err(Error::ZeroParameter("mu"))
        );
        assert_eq!(count_points_melas_curve(&ctx, FieldElement::ZERO), Err(Error::ZeroParameter("nu")));
    }

    #[test]
    fn cubic_counts_odd_degree() {
        let ctx = make_field(3).unwrap();
        let c = count_points_cubic(&ctx, FieldElement::ZERO, FieldElement::ONE).unwrap();
        assert_eq!(c, count_points_cubic_naive(&ctx, FieldElement::ZERO, FieldElement::ONE));
        for lambda in ctx.elements() {
            for mu in ctx.nonzero_elements() {
                let c = count_points_cubic(&ctx, lambda, mu).unwrap();
                assert!([5, 9, 13].contains(&c.points));
                assert_eq!(c.frobenius_trace % 2, 0);
            }
        }
    }

    #[test]
    fn census_q8() {
        let ctx = make_field(3).unwrap();
        let census = bch_family_census(&ctx);
        assert_eq!(census, BTreeMap::from([(5, 7), (9, 28), (13, 21)]));
        assert_eq!(census.values().sum::<u64>(), 56);
        assert_eq!(bch_census_prediction(3).unwrap(), census);
    }

    #[test]
    fn census_q16_has_five_counts() {
        let ctx = make_field(4).unwrap();
        let census = bch_family_census(&ctx);
        let keys: Vec<u64> = census.keys().copied().collect();
        assert_eq!(keys, vec![9, 13, 17, 21, 25]);
        assert_eq!(census.values().sum::<u64>(), 240);
    }

    #[test]
    fn melas_census_q16() {
        let ctx = make_field(4).unwrap();
        let census = melas_family_census(&ctx);
        assert_eq!(census, BTreeMap::from([(-7, 2), (-3, 4), (1, 5), (5, 4)]));
        assert_eq!(census.values().sum::<u64>(), 15);
        assert!(melas_census_report(&ctx).unwrap().matches);
    }

    #[test]
    fn melas_curves_have_order_four_point_trace() {
        for m in 2..=8 {
            let ctx = make_field(m).unwrap();
            let q = ctx.q() as i64;
            for nu in ctx.nonzero_elements() {
                let c = count_points_melas_curve(&ctx, nu).unwrap();
                let t = c.frobenius_trace;
                assert_eq!(t.rem_euclid(2), 1);
                assert_eq!(t.rem_euclid(4), (q + 1).rem_euclid(4));
                assert!(t * t < 4 * q);
                // (ν, 0) lies on the curve: both sides vanish.
                let nu2 = ctx.square(nu);
                let rhs = ctx.add(ctx.mul(ctx.square(nu), nu), ctx.mul(nu2, nu));
                assert_eq!(rhs, FieldElement::ZERO);
            }
        }
    }

    #[test]
    fn j_invariant_map_is_injective() {
        let ctx = make_field(6).unwrap();
        let images: std::collections::HashSet<_> = ctx
            .nonzero_elements()
            .map(|nu| ctx.pow(nu, -4).unwrap())
            .collect();
        assert_eq!(images.len() as u32, ctx.q() - 1);
    }

    #[test]
    fn weights_follow_point_counts() {
        for m in 3..=6 {
            let ctx = make_field(m).unwrap();
            let q = ctx.q() as u64;
            for lambda in ctx.elements() {
                for mu in ctx.nonzero_elements() {
                    let c = count_points_cubic(&ctx, lambda, mu).unwrap();
                    assert!(c.satisfies_hasse());
                    let w = trace_word(&ctx, Family::Bch2, lambda, mu).unwrap().weight() as u64;
                    assert_eq!(w, bch_weight_from_points(q, c.points));

                    if !lambda.is_zero() {
                        let nu = ctx.sqrt(ctx.mul(lambda, mu));
                        let e = count_points_melas_curve(&ctx, nu).unwrap();
                        let w = trace_word(&ctx, Family::Melas, lambda, mu).unwrap().weight() as u64;
                        assert_eq!(w, melas_weight_from_trace(q, e.frobenius_trace));
                    }
                }
            }
        }
    }

    #[test]
    fn class_tables() {
        let odd = supersingular_classes(5).unwrap();
        assert_eq!(odd.class_count(), 3);
        assert_eq!(odd.rows[0].to_string(), "q+1−√(2q)");
        assert_eq!((odd.rows[0].frequency, odd.rows[0].automorphisms), (1, 4));
        let even = supersingular_classes(4).unwrap();
        assert_eq!(even.class_count(), 7);
        assert_eq!(even.rows[0].to_string(), "q+1−2√q");
        assert_eq!(even.rows[0].automorphisms, 24);
        assert_eq!(even.rows.iter().map(|r| r.automorphisms).collect::<Vec<_>>(), vec![24, 6, 4, 6, 24]);
        assert_eq!(odd.rows.iter().map(|r| r.automorphisms).collect::<Vec<_>>(), vec![4, 2, 4]);
    }

    #[test]
    fn predictions_total_q_times_q_minus_one() {
        for m in 2..=16 {
            let q = 1u64 << m;
            assert_eq!(bch_census_prediction(m).unwrap().values().sum::<u64>(), q * (q - 1));
        }
    }
}
