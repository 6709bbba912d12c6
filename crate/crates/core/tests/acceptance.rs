//! Acceptance suite: one line per criterion, nonzero exit status if any fails.

mod support;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;

use monodeg::cells::{cell_trace, Status};
use monodeg::degree::{degree, degree_sequence, functional_set, terms_from_i64};
use monodeg::recur::{berlekamp_massey, check_candidate, find_recurrence};
use monodeg::spectra::{ratio_polynomial, unity_ratio_orders};
use monodeg::verdict::{
    classify_d1, classify_d1_with_cap, classify_dual, cross_check, default_guard, Basis,
    Classification, Consistency,
};
use monodeg::{IntMatrix, IntPoly, Rational};
use support::{homogenized_degree, random_full_rank, rng, verdict_corpus};

/// Switch indices of the HP trace within 200 steps, recorded on the first
/// verified run.
const HP_SWITCHES_N200: usize = 199;

type Outcome = Result<(), String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn hp() -> IntMatrix {
    IntMatrix::from_i64([[-1, 1, 0], [-1, 0, 1], [1, 0, 0]])
}

fn hp_inverse() -> IntMatrix {
    IntMatrix::from_i64([[0, 0, 1], [1, 0, 1], [0, 1, 1]])
}

fn tribonacci() -> IntMatrix {
    IntMatrix::from_i64([[0, 1, 0], [0, 0, 1], [1, 1, 1]])
}

fn rotation() -> IntMatrix {
    IntMatrix::from_i64([[0, -1], [1, 0]])
}

fn trib_poly() -> IntPoly {
    IntPoly::from_i64s(&[-1, -1, -1, 1])
}

fn starts_with(a: &IntMatrix, n: usize, expect: &[i64]) -> Outcome {
    let seq = degree_sequence(a, n).map_err(|e| e.to_string())?;
    check(
        seq.terms[..expect.len()] == terms_from_i64(expect)[..],
        || format!("sequence of {a} starts {:?}", &seq.terms[..expect.len()]),
    )
}

fn verdict_is(v: &monodeg::verdict::Verdict, c: Classification, b: Basis) -> Outcome {
    check(v.classification == c && v.basis == Some(b), || {
        format!("got {} via {:?}", v.classification, v.basis)
    })
}

fn c1_degree_oracle() -> Outcome {
    let mut r = rng(1001);
    for i in 0..50 {
        let a = random_full_rank(&mut r, 2 + i % 3, 5);
        let (got, want) = (
            degree(&a).map_err(|e| e.to_string())?,
            homogenized_degree(&a),
        );
        check(got == want, || format!("{a}: degree {got}, oracle {want}"))?;
    }
    Ok(())
}

fn c2_functional_family() -> Outcome {
    let sizes: Vec<usize> = (1..=3).map(|k| functional_set(k).len()).collect();
    check(sizes == [4, 27, 256], || format!("sizes {sizes:?}"))
}

fn c3_hp_inverse_sequence() -> Outcome {
    let a = hp_inverse();
    starts_with(&a, 40, &[2, 4, 7, 13, 24, 44, 81, 149, 274, 504])?;
    let seq = degree_sequence(&a, 40).map_err(|e| e.to_string())?;
    let offset = check_candidate(&seq.terms, &trib_poly()).map_err(|e| e.to_string())?;
    check(offset == Some(1), || {
        format!("tribonacci relation offset {offset:?}")
    })?;
    let first12: Vec<Rational> = seq.terms[..12]
        .iter()
        .map(|x| Rational::from_integer(x.clone()))
        .collect();
    let bm = berlekamp_massey(&first12).and_then(|r| r.int_polynomial());
    check(bm == Some(trib_poly()), || {
        format!("Berlekamp-Massey gave {bm:?}")
    })
}

fn c4_hp_forward() -> Outcome {
    let a = hp();
    starts_with(&a, 60, &[2, 3, 4, 6])?;
    let seq = degree_sequence(&a, 60).map_err(|e| e.to_string())?;
    let search = find_recurrence(&seq.terms, 10, 20).map_err(|e| e.to_string())?;
    check(search.found.is_none(), || {
        format!("found {:?}", search.found)
    })?;
    verdict_is(
        &classify_d1(&a).map_err(|e| e.to_string())?,
        Classification::NoRecurrenceProven,
        Basis::Prop31,
    )?;
    let report = cross_check(&a, 60, 10).map_err(|e| e.to_string())?;
    check(report.status == Consistency::Consistent, || {
        format!("{:?}", report.conflicts)
    })
}

fn c5_positive_spectrum() -> Outcome {
    let a = tribonacci();
    starts_with(&a, 40, &[3, 5, 9, 17, 31, 57])?;
    let seq = degree_sequence(&a, 40).map_err(|e| e.to_string())?;
    let offset = check_candidate(&seq.terms, &a.char_poly()).map_err(|e| e.to_string())?;
    check(offset == Some(1), || format!("char poly offset {offset:?}"))?;
    verdict_is(
        &classify_d1(&a).map_err(|e| e.to_string())?,
        Classification::RecurrenceProven,
        Basis::Thm27CharPoly,
    )
}

fn c6_dichotomy() -> Outcome {
    for (a, fwd, back) in [
        (
            hp(),
            Classification::NoRecurrenceProven,
            Classification::RecurrenceProven,
        ),
        (
            tribonacci(),
            Classification::RecurrenceProven,
            Classification::NoRecurrenceProven,
        ),
    ] {
        let f = classify_d1(&a).map_err(|e| e.to_string())?.classification;
        let b = classify_dual(&a).map_err(|e| e.to_string())?.classification;
        check((f, b) == (fwd, back), || format!("{a}: d1 {f}, dual {b}"))?;
    }
    Ok(())
}

fn c7_rotation() -> Outcome {
    let a = rotation();
    let seq = degree_sequence(&a, 48).map_err(|e| e.to_string())?;
    let expect: Vec<i64> = (0..48).map(|i| [2, 2, 2, 1][i % 4]).collect();
    check(seq.terms == terms_from_i64(&expect), || {
        format!("sequence {:?}", seq.terms)
    })?;
    let search = find_recurrence(&seq.terms, 8, default_guard(48, 8)).map_err(|e| e.to_string())?;
    let poly = search.found.as_ref().and_then(|r| r.int_polynomial());
    check(poly == Some(IntPoly::from_i64s(&[-1, 0, 0, 0, 1])), || {
        format!("found {poly:?}")
    })?;
    let v = classify_d1(&a).map_err(|e| e.to_string())?;
    verdict_is(&v, Classification::RecurrenceProven, Basis::Thm11Part1)?;
    check(v.unity_orders == [2], || {
        format!("unity orders {:?}", v.unity_orders)
    })
}

fn c8_two_by_two() -> Outcome {
    let a = IntMatrix::from_i64([[1, -2], [1, 1]]);
    let chi = a.char_poly();
    let orders = unity_ratio_orders(&chi).map_err(|e| e.to_string())?;
    check(orders.is_empty(), || format!("orders {orders:?}"))?;
    let (_, reduced) = ratio_polynomial(&chi).map_err(|e| e.to_string())?;
    check(
        reduced.primitive_part() == IntPoly::from_i64s(&[3, 2, 3]),
        || format!("reduced {reduced}"),
    )?;
    let v = classify_d1(&a).map_err(|e| e.to_string())?;
    check(
        v.classification == Classification::NoRecurrenceProven,
        || v.classification.to_string(),
    )?;
    let seq = degree_sequence(&a, 40).map_err(|e| e.to_string())?;
    let search = find_recurrence(&seq.terms, 8, default_guard(40, 8)).map_err(|e| e.to_string())?;
    check(search.found.is_none(), || {
        format!("found {:?}", search.found)
    })
}

fn c9_ratio_structure() -> Outcome {
    let mut r = rng(1009);
    let diag = IntPoly::from_i64s(&[-1, 1]);
    for i in 0..100 {
        let k = 1 + i % 4;
        let a = random_full_rank(&mut r, k, 3);
        let (full, reduced) = ratio_polynomial(&a.char_poly()).map_err(|e| e.to_string())?;
        check(full.degree() == Some(k * k), || {
            format!("{a}: degree {:?}", full.degree())
        })?;
        check(
            full.exact_quotient(&diag.pow(k)).as_ref() == Some(&reduced),
            || format!("{a}: (x-1)^k does not divide exactly"),
        )?;
        check(reduced.reversed().eq_up_to_sign(&reduced), || {
            format!("{a}: reduced not reversal-symmetric")
        })?;
    }
    Ok(())
}

fn c10_cell_traces() -> Outcome {
    let t = cell_trace(&tribonacci(), 40).map_err(|e| e.to_string())?;
    check(t.status.is_stabilized(), || {
        format!("tribonacci {:?}", t.status)
    })?;
    let t = cell_trace(&rotation(), 40).map_err(|e| e.to_string())?;
    check(
        matches!(t.status, Status::Periodic { period: 4, .. }),
        || format!("rotation {:?}", t.status),
    )?;
    let t = cell_trace(&hp(), 200).map_err(|e| e.to_string())?;
    let n = t.switch_indices.len();
    check(n >= 10 && n == HP_SWITCHES_N200, || {
        format!("HP switches {n}")
    })?;
    check(!t.status.is_stabilized(), || "HP trace stabilized".into())
}

fn c11_determinism() -> Outcome {
    for a in verdict_corpus() {
        let base = classify_d1(&a).map_err(|e| e.to_string())?;
        let fine = classify_d1_with_cap(&a, 512).map_err(|e| e.to_string())?;
        let decided = |c: Classification| c != Classification::Unknown;
        if decided(base.classification) && decided(fine.classification) {
            check(base.classification == fine.classification, || {
                format!(
                    "{a}: {} at 256 bits, {} at 512 bits",
                    base.classification, fine.classification
                )
            })?;
        }
        if decided(base.classification) {
            check(base == fine, || {
                format!("{a}: verdict details differ across precisions")
            })?;
        }
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (
            "degree formula equals homogenization oracle",
            c1_degree_oracle,
        ),
        ("functional family sizes 4, 27, 256", c2_functional_family),
        (
            "HP inverse golden sequence and recurrence",
            c3_hp_inverse_sequence,
        ),
        (
            "HP forward: no recurrence, PROP_3_1, consistent",
            c4_hp_forward,
        ),
        (
            "positive spectrum: char poly recurrence",
            c5_positive_spectrum,
        ),
        ("forward/inverse dichotomy", c6_dichotomy),
        ("quarter rotation: unity order 2", c7_rotation),
        ("2x2 non-unity pair: no recurrence", c8_two_by_two),
        ("ratio polynomial structure", c9_ratio_structure),
        ("cell-trace coherence", c10_cell_traces),
        (
            "verdict determinism under doubled precision",
            c11_determinism,
        ),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
