use crate::cyclo::QuotientElement as Q;
use crate::error::{Error, Result};

fn t_pow(k: i64) -> Q {
    Q::t_pow(k)
}

/// `-t - 1/t`
fn p_term() -> Q {
    -(&t_pow(1) + &t_pow(-1))
}

/// `t + 1 + 1/t`
fn r_term() -> Q {
    &(&t_pow(1) + &Q::one()) + &t_pow(-1)
}

/// `-sqrt(t) - 1/sqrt(t)`, the Jones polynomial of the 2-component unlink.
fn d_term() -> Q {
    -(&Q::s_pow(1) + &Q::s_pow(-1))
}

fn one_minus(x: Q) -> Q {
    &Q::one() - &x
}

fn divide_by_d(x: Q) -> Q {
    let inv = d_term().inverse().expect("s + 1/s is a unit");
    &x * &inv
}

fn param_error(form: u8, k: i64, l: i64) -> Error {
    Error::Parameter(format!("form {form} does not allow k={k}, l={l}"))
}

/// `[(-t-1/t)^(k+l) + (-1/t)^l (1-t)^(k+l) (t+1+1/t)] / (-sqrt t - 1/sqrt t)`
/// for any integers with `k + l >= 0`, including formal arguments.
pub fn v1_formal(k: i64, l: i64) -> Result<Q> {
    let m = k + l;
    if m < 0 {
        return Err(param_error(1, k, l));
    }
    let m = m as u32;
    let sign = if l.rem_euclid(2) == 0 {
        Q::one()
    } else {
        -Q::one()
    };
    let second = &(&(&sign * &t_pow(-l)) * &one_minus(t_pow(1)).pow(m)) * &r_term();
    Ok(divide_by_d(&p_term().pow(m) + &second))
}

/// Form 1: `k, l >= 0`, `l <= 4`, `k + l >= 3`.
pub fn v1_closed(k: i64, l: i64) -> Result<Q> {
    if k < 0 || !(0..=4).contains(&l) || k + l < 3 {
        return Err(param_error(1, k, l));
    }
    v1_formal(k, l)
}

/// Form 2: `(1-t^2)^l (1-t)^k (t+1+1/t) / (-sqrt t - 1/sqrt t)`, with
/// `k >= 0`, `l >= 1`, `k + l >= 3`. Only meaningful in the quotient field.
pub fn v2_closed(k: i64, l: i64) -> Result<Q> {
    if k < 0 || l < 1 || k + l < 3 {
        return Err(param_error(2, k, l));
    }
    let x = &(&one_minus(t_pow(2)).pow(l as u32) * &one_minus(t_pow(1)).pow(k as u32)) * &r_term();
    Ok(divide_by_d(x))
}

/// Form 3: `(-sqrt t - 1/sqrt t)^l (-t-1/t)^k`, `k` Hopf links and `l`
/// extra split components.
pub fn v3_closed(k: i64, l: i64) -> Result<Q> {
    if k < 0 || l < 0 {
        return Err(param_error(3, k, l));
    }
    Ok(&d_term().pow(l as u32) * &p_term().pow(k as u32))
}

/// Form 4 vanishes in the quotient.
pub fn v4_closed() -> Q {
    Q::zero()
}

/// Form 5: `[(-t-1/t)^3 - (1-t)^3 t (t+1+1/t)] / (-sqrt t - 1/sqrt t)`.
pub fn v5_closed() -> Q {
    let second = &(&one_minus(t_pow(1)).pow(3) * &t_pow(1)) * &r_term();
    divide_by_d(&p_term().pow(3) - &second)
}

/// False exactly when 5 divides one but not both of `det` and
/// `residue_condition`.
pub fn determinant_filter(det: u64, residue_condition: i64) -> bool {
    det.is_multiple_of(5) == (residue_condition.rem_euclid(5) == 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclo::doteq_canonical;

    #[test]
    fn form_five_is_formal_form_one() {
        assert_eq!(v5_closed(), v1_formal(4, -1).unwrap());
        assert_eq!(
            doteq_canonical(&v5_closed()),
            doteq_canonical(&v1_formal(4, -1).unwrap())
        );
    }

    #[test]
    fn trivial_values() {
        assert!(v4_closed().is_zero());
        assert!(v3_closed(0, 0).unwrap().is_one());
        assert!(v1_closed(1, 1).is_err());
        assert!(v1_closed(0, 5).is_err());
        assert!(v2_closed(3, 0).is_err());
        assert!(v3_closed(-1, 0).is_err());
    }

    #[test]
    fn filter() {
        assert!(determinant_filter(20, 5));
        assert!(!determinant_filter(20, 3));
        assert!(determinant_filter(3, 4));
        assert!(!determinant_filter(3, -5));
    }
}
