//! Duals of the field families in trace form: words
//! `(Tr(λx + μx^e))_{x ∈ F_q*}`, with coordinate `i` at `x = α^i`.

use std::collections::HashSet;

use super::linear::{span, Codeword};
use super::{build_named_code, dual_basis, Family};
use crate::enumerator::WeightEnumerator;
use crate::error::{Error, Result};
use crate::exec::{add_histograms, map_reduce, Execution};
use crate::gf2m::{make_field, FieldContext, FieldElement};

fn second_exponent(family: Family) -> Result<Option<i64>> {
    match family {
        Family::Hamming => Ok(None),
        Family::Bch2 => Ok(Some(3)),
        Family::Melas => Ok(Some(-1)),
        other => Err(Error::Unsupported(format!(
            "{other} codes have no trace representation here"
        ))),
    }
}

fn field_for(family: Family, m: u32) -> Result<FieldContext> {
    // Reuses the family range checks.
    build_named_code(family, m)?;
    make_field(m)
}

/// Per-coordinate `(x, x^e)` for `x = α^i`, `0 <= i < q - 1`.
fn coordinates(ctx: &FieldContext, e: Option<i64>) -> Vec<(FieldElement, FieldElement)> {
    (0..ctx.q() as i64 - 1)
        .map(|i| {
            let x = ctx.alpha_pow(i);
            let xe = e.map_or(FieldElement::ZERO, |e| ctx.alpha_pow(i * e));
            (x, xe)
        })
        .collect()
}

/// The trace word for `(λ, μ)`; `μ` is ignored for the Hamming family.
pub fn trace_word(ctx: &FieldContext, family: Family, lambda: FieldElement, mu: FieldElement) -> Result<Codeword> {
    let e = second_exponent(family)?;
    let coords = coordinates(ctx, e);
    Ok(word_from_coords(ctx, &coords, lambda, mu))
}

fn word_from_coords(
    ctx: &FieldContext,
    coords: &[(FieldElement, FieldElement)],
    lambda: FieldElement,
    mu: FieldElement,
) -> Codeword {
    Codeword::from_bits(
        coords.len(),
        coords
            .iter()
            .map(|&(x, xe)| ctx.trace(ctx.add(ctx.mul(lambda, x), ctx.mul(mu, xe))) == 1),
    )
}

fn trace_weight(ctx: &FieldContext, coords: &[(FieldElement, FieldElement)], lambda: FieldElement, mu: FieldElement) -> usize {
    coords
        .iter()
        .filter(|&&(x, xe)| ctx.trace(ctx.add(ctx.mul(lambda, x), ctx.mul(mu, xe))) == 1)
        .count()
}

/// All words of the trace code, one per parameter choice (duplicates kept).
pub fn trace_code_words(family: Family, m: u32) -> Result<Vec<Codeword>> {
    let ctx = field_for(family, m)?;
    let e = second_exponent(family)?;
    let coords = coordinates(&ctx, e);
    let mus: Vec<FieldElement> = if e.is_some() {
        ctx.elements().collect()
    } else {
        vec![FieldElement::ZERO]
    };
    Ok(ctx
        .elements()
        .flat_map(|l| mus.iter().map(move |&u| (l, u)))
        .map(|(l, u)| word_from_coords(&ctx, &coords, l, u))
        .collect())
}

/// Weight distribution of the dual by direct enumeration of trace words.
pub fn dual_trace_distribution(family: Family, m: u32) -> Result<WeightEnumerator> {
    dual_trace_distribution_with(family, m, Execution::default())
}

pub fn dual_trace_distribution_with(family: Family, m: u32, exec: Execution) -> Result<WeightEnumerator> {
    let ctx = field_for(family, m)?;
    let e = second_exponent(family)?;
    let coords = coordinates(&ctx, e);
    let q = ctx.q() as u64;
    let n = q as usize - 1;
    let params = if e.is_some() { q * q } else { q };
    let hist = map_reduce(
        exec,
        params,
        vec![0u64; n + 1],
        |range| {
            let mut hist = vec![0u64; n + 1];
            for idx in range {
                let lambda = ctx.element(idx % q);
                let mu = ctx.element(idx / q);
                hist[trace_weight(&ctx, &coords, lambda, mu)] += 1;
            }
            hist
        },
        add_histograms,
    );
    Ok(WeightEnumerator::from_u64s(n, &hist))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelsarteReport {
    pub family: Family,
    pub m: u32,
    pub trace_words: usize,
    pub nullspace_words: usize,
    pub equal: bool,
}

/// Compares, as sets, the trace-representation words with the nullspace
/// dual of the cyclic code.
pub fn delsarte_check(family: Family, m: u32) -> Result<DelsarteReport> {
    let code = build_named_code(family, m)?;
    let trace: HashSet<Codeword> = trace_code_words(family, m)?.into_iter().collect();
    let dual: HashSet<Codeword> = span(&dual_basis(&code), code.n()).into_iter().collect();
    Ok(DelsarteReport {
        family,
        m,
        trace_words: trace.len(),
        nullspace_words: dual.len(),
        equal: trace == dual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{enumerate_weight_distribution, DEFAULT_WORK_LIMIT};

    #[test]
    fn hamming_dual_is_simplex() {
        let d = dual_trace_distribution(Family::Hamming, 3).unwrap();
        assert_eq!(d, WeightEnumerator::from_sparse(7, &[(0, 1u32), (4, 7u32)]));
    }

    #[test]
    fn bch_dual_m3() {
        let d = dual_trace_distribution(Family::Bch2, 3).unwrap();
        assert_eq!(d, WeightEnumerator::from_sparse(7, &[(0, 1u32), (2, 21), (4, 35), (6, 7)]));
    }

    #[test]
    fn melas_dual_m4() {
        // Computed by brute force over all 256 parameter pairs.
        let d = dual_trace_distribution(Family::Melas, 4).unwrap();
        assert_eq!(
            d,
            WeightEnumerator::from_sparse(15, &[(0, 1u32), (4, 30), (6, 60), (8, 105), (10, 60)])
        );
    }

    #[test]
    fn totals() {
        for m in 3..=6 {
            let q = 1u64 << m;
            for (family, size) in [(Family::Hamming, q), (Family::Bch2, q * q), (Family::Melas, q * q)] {
                let d = dual_trace_distribution(family, m).unwrap();
                assert_eq!(d.total(), size.into());
            }
        }
    }

    #[test]
    fn enumerated_dual_code_matches_trace_enumeration() {
        for m in 3..=4 {
            for family in [Family::Hamming, Family::Bch2, Family::Melas] {
                let dual = build_named_code(family, m).unwrap().dual_code();
                assert_eq!(
                    enumerate_weight_distribution(&dual, DEFAULT_WORK_LIMIT).unwrap(),
                    dual_trace_distribution(family, m).unwrap(),
                    "{family} m={m}"
                );
            }
        }
    }

    #[test]
    fn delsarte_small() {
        for family in [Family::Hamming, Family::Bch2, Family::Melas] {
            let r = delsarte_check(family, 3).unwrap();
            assert!(r.equal, "{r:?}");
        }
    }

    #[test]
    fn sequential_matches_parallel() {
        let a = dual_trace_distribution_with(Family::Melas, 5, Execution::Sequential).unwrap();
        let b = dual_trace_distribution_with(Family::Melas, 5, Execution::Parallel).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_other_families() {
        assert!(dual_trace_distribution(Family::Parity, 3).is_err());
        assert!(dual_trace_distribution(Family::Bch2, 2).is_err());
    }
}
