//! Norm-bounded searches for the reduced Jones polynomial of each normal
//! form.

use crate::bracket::{
    determinant_filter, v1_closed, v2_closed, v3_closed, v5_closed, JonesInvariants,
};
use crate::cyclo::{complex_norm, doteq_canonical, eval_at_root, HalfLaurent};

/// Relative tolerance of the norm windows. Only the exact comparison of
/// `V̄` decides a match.
pub const NORM_TOLERANCE: f64 = 1e-9;

/// Hard stop for every search loop.
pub const MAX_SEARCH_STEPS: u32 = 10_000;

/// `|p(t)|` at `t = e^(n π i/5)` for `p` given by `(t-exponent, coefficient)`.
pub fn norm_at(terms: &[(i32, i64)], n: i64) -> f64 {
    let p = HalfLaurent::from_t_terms(terms);
    complex_norm(&eval_at_root(&p, n).expect("n is 1 or 3"), 1)
}

/// The norms the searches need at one root.
#[derive(Clone, Copy, Debug)]
struct Norms {
    t_plus_1: f64,
    t2_plus_1: f64,
    t2_minus_1: f64,
    one_minus_t: f64,
    r: f64,
}

impl Norms {
    fn at(n: i64) -> Self {
        Norms {
            t_plus_1: norm_at(&[(1, 1), (0, 1)], n),
            t2_plus_1: norm_at(&[(2, 1), (0, 1)], n),
            t2_minus_1: norm_at(&[(2, 1), (0, -1)], n),
            one_minus_t: norm_at(&[(0, 1), (1, -1)], n),
            r: norm_at(&[(1, 1), (0, 1), (-1, 1)], n),
        }
    }
}

fn close(x: f64, y: f64) -> bool {
    (x - y).abs() <= NORM_TOLERANCE * x.abs().max(y.abs()).max(1.0)
}

fn divides_power_of_five(det: u64, e: u32) -> bool {
    det == 0 || 5u64.checked_pow(e).is_some_and(|p| det.is_multiple_of(p))
}

/// An upper bound on the `m` visited by the form 1 search for a given `v1`.
pub fn form1_max_m(v1: f64) -> u32 {
    let n = Norms::at(1);
    let rhs = n.t_plus_1 * v1 + n.one_minus_t.powi(3) * n.r;
    let mut m = 3;
    while n.t2_plus_1.powi(m as i32 + 1) <= rhs * (1.0 + NORM_TOLERANCE) && m < MAX_SEARCH_STEPS {
        m += 1;
    }
    m
}

/// All `(k, l)` with `V̄ = V̄1(k, l)`.
pub fn probe_form1(inv: &JonesInvariants) -> Vec<(u32, u32)> {
    let n = Norms::at(1);
    let target = n.t_plus_1 * inv.v1;
    let rhs = target + n.one_minus_t.powi(3) * n.r;
    let mut out = Vec::new();
    let mut m = 3u32;
    while n.t2_plus_1.powi(m as i32) <= rhs * (1.0 + NORM_TOLERANCE) && m < MAX_SEARCH_STEPS {
        let window = n.one_minus_t.powi(m as i32) * n.r;
        if (n.t2_plus_1.powi(m as i32) - target).abs() <= window * (1.0 + NORM_TOLERANCE) {
            for l in 0..=4.min(m) {
                let k = m - l;
                if !determinant_filter(inv.det, k as i64 - l as i64) {
                    continue;
                }
                let v = v1_closed(k.into(), l.into()).expect("valid form 1 parameters");
                if doteq_canonical(&v) == inv.vbar {
                    out.push((k, l));
                }
            }
        }
        m += 1;
    }
    out
}

/// All `(k, l)` with `V̄ = V̄2(k, l)`.
pub fn probe_form2(inv: &JonesInvariants) -> Vec<(u32, u32)> {
    let n = Norms::at(3);
    let target = n.t_plus_1 * inv.v3;
    let mut out = Vec::new();
    let mut l = 1u32;
    while l < MAX_SEARCH_STEPS
        && divides_power_of_five(inv.det, l - 1)
        && n.t2_minus_1.powi(l as i32) * n.r <= target * (1.0 + NORM_TOLERANCE)
    {
        let mut k = 3u32.saturating_sub(l);
        loop {
            let lhs = n.t2_minus_1.powi(l as i32) * n.one_minus_t.powi(k as i32) * n.r;
            if lhs > target * (1.0 + NORM_TOLERANCE) || k >= MAX_SEARCH_STEPS {
                break;
            }
            if close(lhs, target) {
                let v = v2_closed(k.into(), l.into()).expect("valid form 2 parameters");
                if doteq_canonical(&v) == inv.vbar {
                    out.push((k, l));
                }
            }
            k += 1;
        }
        l += 1;
    }
    out
}

/// All `(k, l)` with `V̄ = V̄3(k, l)`: `k` Hopf summands, `l` split circles.
pub fn probe_form3(inv: &JonesInvariants) -> Vec<(u32, u32)> {
    let n = Norms::at(1);
    let target = inv.v1;
    let mut out = Vec::new();
    let mut l = 0u32;
    while l < MAX_SEARCH_STEPS
        && divides_power_of_five(inv.det, l)
        && n.t_plus_1.powi(l as i32) <= target * (1.0 + NORM_TOLERANCE)
    {
        let mut k = 0u32;
        loop {
            let lhs = n.t_plus_1.powi(l as i32) * n.t2_plus_1.powi(k as i32);
            if lhs > target * (1.0 + NORM_TOLERANCE) || k >= MAX_SEARCH_STEPS {
                break;
            }
            if close(lhs, target) {
                let v = v3_closed(k.into(), l.into()).expect("valid form 3 parameters");
                if doteq_canonical(&v) == inv.vbar {
                    out.push((k, l));
                }
            }
            k += 1;
        }
        l += 1;
    }
    out
}

/// Whether `V̄` vanishes (form 4) and whether it equals `V̄5`.
pub fn probe_forms45(inv: &JonesInvariants) -> (bool, bool) {
    (
        inv.vbar.is_zero(),
        inv.vbar == doteq_canonical(&v5_closed()),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bracket::jones_invariants;
    use crate::link::{LinkDiagram, MontesinosDescriptor};

    fn inv(d: &LinkDiagram) -> JonesInvariants {
        jones_invariants(d).unwrap()
    }

    #[test]
    fn unknot_is_form_three_only() {
        let u = inv(&LinkDiagram::unknot());
        assert!(probe_form1(&u).is_empty());
        assert!(probe_form2(&u).is_empty());
        assert_eq!(probe_form3(&u), vec![(0, 0)]);
        assert_eq!(probe_forms45(&u), (false, false));
    }

    #[test]
    fn unlink_is_form_three() {
        assert!(probe_form3(&inv(&LinkDiagram::unlink(2))).contains(&(0, 1)));
    }

    #[test]
    fn templates_are_found() {
        let m = |s: &str| inv(&s.parse::<MontesinosDescriptor>().unwrap().to_diagram());
        assert!(probe_form1(&m("M(1/2,1/2,-1/2)")).contains(&(2, 1)));
        assert!(probe_form2(&m("M(1/2,2/5,2/5)")).contains(&(1, 2)));
        assert!(probe_form2(&inv(&crate::link::Tangle::integer(2).numerator())).is_empty());
        assert_eq!(probe_forms45(&m("M(1/2,1/2,1/2;1)")), (false, true));
    }

    #[test]
    fn form_one_loop_is_short() {
        assert_eq!(form1_max_m(0.0), 3);
        for v1 in [1.0, 10.0, 1e3, 1e6, 1e12] {
            let m = form1_max_m(v1);
            // |t^2 + 1| is the golden ratio, so m grows like log_phi(v1)
            assert!(m as f64 <= 6.0 + v1.ln() / 1.618f64.ln(), "{v1} -> {m}");
        }
    }
}
