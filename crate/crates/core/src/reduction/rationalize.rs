//! Best rational approximation by continued-fraction convergents.

use crate::error::{Result, ZetaError};
use crate::exact::{to_f64, BigRational};
use num_bigint::BigInt;
use num_traits::{FromPrimitive, One, Zero};

pub const DEFAULT_MAX_DEN: u64 = 1_000_000;

/// Last continued-fraction convergent of `value` whose denominator does not
/// exceed `max_den`. Only convergents are considered, not semiconvergents.
pub fn best_convergent(value: f64, max_den: u64) -> Result<BigRational> {
    if !(value.is_finite() && value > 0.0) {
        return Err(ZetaError::Approximation {
            value,
            reason: "expected a positive finite number".into(),
        });
    }
    if max_den == 0 {
        return Err(ZetaError::Domain("max_den must be at least 1".into()));
    }
    let bound = BigInt::from(max_den);
    let a0 = value.floor();
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (BigInt::from_f64(a0).expect("finite"), BigInt::one());
    let mut frac = value - a0;
    while frac > 0.0 && to_f64(&BigRational::new(p.clone(), q.clone())) != value {
        let inv = frac.recip();
        if !inv.is_finite() {
            break;
        }
        let a = inv.floor();
        let a_big = BigInt::from_f64(a).expect("finite");
        let q_next = &a_big * &q + &q_prev;
        if q_next > bound {
            break;
        }
        let p_next = &a_big * &p + &p_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        frac = inv - a;
    }
    if p.is_zero() {
        return Err(ZetaError::Approximation {
            value,
            reason: format!("best convergent with denominator <= {max_den} is 0"),
        });
    }
    Ok(BigRational::new(p, q))
}
