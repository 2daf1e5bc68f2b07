//! Matrix elements of the fundamental tensor operator between adjacent
//! Gelfand-Tsetlin patterns, evaluated with Louck's pattern calculus.
//!
//! For an insertion of letter `k` with shift `(τ_k, …, τ_n)` into pattern
//! `m`, the element is
//!
//! ```text
//!   ∏_{j=k+1}^{n} sgn(τ_{j-1} − τ_j)
//!   · ∏_{j=k+1}^{n} √| A_j / B_j |
//!   · √| ∏_{i<k} (p_{τ_k,k} − p_{i,k−1}) / ∏_{i≤k, i≠τ_k} (p_{τ_k,k} − p_{i,k}) |
//! ```
//!
//! with
//!
//! ```text
//!   A_j = ∏_{i<j, i≠τ_{j−1}} (p_{τ_j,j} − p_{i,j−1}) · ∏_{i≤j, i≠τ_j} (p_{τ_{j−1},j−1} − p_{i,j} + 1)
//!   B_j = ∏_{i≤j, i≠τ_j} (p_{τ_j,j} − p_{i,j}) · ∏_{i<j, i≠τ_{j−1}} (p_{τ_{j−1},j−1} − p_{i,j−1} + 1)
//! ```
//!
//! All partial hooks `p_{i,j} = m[j][i] + j − i` are taken on the initial
//! pattern, `sgn(0) = +1`, and empty products are 1.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Result, SwtError};
use crate::gt::{GtPattern, ShiftVector};
use crate::radical::SignedRadical;

/// One evaluated operator element: the edge weight for a single insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorElement {
    pub initial: GtPattern,
    pub shift: ShiftVector,
    pub value: SignedRadical,
}

impl OperatorElement {
    pub fn evaluate(initial: GtPattern, shift: ShiftVector) -> Result<Self> {
        let value = fundamental_element(&initial, &shift)?;
        Ok(Self {
            initial,
            shift,
            value,
        })
    }
}

/// `⟨m + shift| F_{k,τ_n} |m⟩` as an exact signed radical.
pub fn fundamental_element(initial: &GtPattern, shift: &ShiftVector) -> Result<SignedRadical> {
    let n = initial.n();
    let k = shift.letter();
    if k > n || shift.top_row() != n {
        return Err(SwtError::OutOfRange(format!(
            "shift for letter {k} covering rows {k}..={} does not fit a {n}-row pattern",
            shift.top_row()
        )));
    }
    let h = |i: usize, j: usize| initial.hook(i, j);

    let mut negative = false;
    let mut num = BigInt::one();
    let mut den = BigInt::one();

    for j in k + 1..=n {
        let tj = shift.tau(j);
        let tjm = shift.tau(j - 1);
        if tjm < tj {
            negative = !negative;
        }
        let top = h(tj, j);
        let below = h(tjm, j - 1);
        for i in (1..j).filter(|&i| i != tjm) {
            num *= top - h(i, j - 1);
            den *= below - h(i, j - 1) + 1;
        }
        for i in (1..=j).filter(|&i| i != tj) {
            num *= below - h(i, j) + 1;
            den *= top - h(i, j);
        }
    }

    let tk = shift.tau(k);
    for i in 1..k {
        num *= h(tk, k) - h(i, k - 1);
    }
    for i in (1..=k).filter(|&i| i != tk) {
        den *= h(tk, k) - h(i, k);
    }

    if den.is_zero() {
        return Err(SwtError::Domain(format!(
            "vanishing denominator for shift ({shift}) of letter {k} on {initial}"
        )));
    }
    if num.is_zero() {
        return Ok(SignedRadical::zero());
    }
    let radicand = BigRational::new(num, den).abs();
    SignedRadical::new(if negative { -1 } else { 1 }, radicand)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::radical::{rational, RadicalSum};
    use crate::tableaux::{enumerate_partitions, Partition};
    use num_bigint::BigUint;

    fn pat(top_down: &[&[usize]]) -> GtPattern {
        GtPattern::from_top_down(top_down.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn shift(k: usize, taus: &[usize]) -> ShiftVector {
        ShiftVector::new(k, taus.to_vec()).unwrap()
    }

    fn canon(n: i64, d: i64, r: u64) -> RadicalSum {
        RadicalSum::term(BigUint::from(r), rational(n, d))
    }

    #[test]
    fn worked_example_factors() {
        let cases = [
            (
                pat(&[&[1, 0, 0], &[1, 0], &[1]]),
                shift(3, &[1]),
                1,
                (1, 2),
                canon(1, 2, 2),
            ),
            (
                pat(&[&[2, 0, 0], &[1, 0], &[1]]),
                shift(2, &[1, 2]),
                -1,
                (1, 6),
                canon(-1, 6, 6),
            ),
            (
                pat(&[&[2, 1, 0], &[2, 0], &[1]]),
                shift(1, &[1, 2, 1]),
                -1,
                (1, 48),
                canon(-1, 12, 3),
            ),
            (
                pat(&[&[2, 0, 0], &[1, 0], &[1]]),
                shift(2, &[2, 2]),
                1,
                (1, 2),
                canon(1, 2, 2),
            ),
            (
                pat(&[&[2, 1, 0], &[1, 1], &[1]]),
                shift(1, &[1, 1, 1]),
                1,
                (9, 16),
                canon(3, 4, 1),
            ),
        ];
        for (initial, s, sign, (rn, rd), canonical) in cases {
            let v = fundamental_element(&initial, &s).unwrap();
            assert_eq!(
                v,
                SignedRadical::new(sign, rational(rn, rd)).unwrap(),
                "{initial} {s}"
            );
            assert_eq!(v.canonicalize(), canonical);
        }
    }

    #[test]
    fn first_insertion_into_zero_is_one() {
        let v = fundamental_element(&GtPattern::zero(3), &shift(1, &[1, 1, 1])).unwrap();
        assert_eq!(v, SignedRadical::one());
    }

    #[test]
    fn singlet_second_step() {
        // inserting 1 into (1,0/0) towards (1,1): −√(1/2)
        let v = fundamental_element(&pat(&[&[1, 0], &[0]]), &shift(1, &[1, 2])).unwrap();
        assert_eq!(v, SignedRadical::new(-1, rational(1, 2)).unwrap());
    }

    #[test]
    fn single_level_elements_are_one() {
        for m in 0..6 {
            let p = pat(&[&[m]]);
            assert_eq!(
                fundamental_element(&p, &shift(1, &[1])).unwrap(),
                SignedRadical::one()
            );
        }
    }

    #[test]
    fn mismatched_shift_rejected() {
        let p = GtPattern::zero(3);
        assert!(fundamental_element(&p, &shift(2, &[1])).is_err());
        assert!(fundamental_element(&p, &shift(1, &[1, 1, 1, 1])).is_err());
    }

    #[test]
    fn valid_insertions_give_positive_radicands() {
        for n in 1..=4 {
            for total in 0..=4 {
                let shapes = if total == 0 {
                    vec![Partition::new(vec![0; n]).unwrap()]
                } else {
                    enumerate_partitions(total, n)
                };
                for lambda in shapes {
                    for p in GtPattern::enumerate(&lambda.padded(n).unwrap()) {
                        for grow in 1..=n {
                            let mut parts = p.top().padded(n).unwrap().parts().to_vec();
                            parts[grow - 1] += 1;
                            let Ok(target) = Partition::new(parts) else {
                                continue;
                            };
                            for k in 1..=n {
                                for (_, s) in p.insert_letter(k, &target).unwrap() {
                                    let v = fundamental_element(&p, &s).unwrap();
                                    assert!(v.radicand() >= &rational(0, 1));
                                    assert!(v.radicand() <= &rational(1, 1), "{p} {s} {v}");
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}
