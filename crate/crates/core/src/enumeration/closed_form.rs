//! Closed-form Cantorian counts for `n = 2, 3, 4` and the two-letter counts
//! `c(n, p)` by number of occurrences of the second letter.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

fn poly(coeffs: &[i64], s: &BigInt) -> BigInt {
    coeffs.iter().fold(BigInt::zero(), |acc, &c| acc * s + BigInt::from(c))
}

/// `C(n, s)` from the polynomial formulas, for `n` in `2..=4`.
pub fn closed_form_c(n: usize, s: usize) -> Result<BigUint> {
    if s < 2 {
        return Err(Error::input(format!("closed forms need s >= 2, got {s}")));
    }
    let x = BigInt::from(s);
    let x1 = &x - 1;
    let prefix: BigInt = num_traits::Pow::pow(&x, n as u32) * &x1 * &x1;
    let value = match n {
        2 => prefix,
        3 => prefix * poly(&[1, 2, -15, 16, -1], &x),
        4 => prefix * poly(&[1, 2, 3, -92, -43, 1014, -449, -5680, 12045, -9406, 2629], &x),
        _ => return Err(Error::input(format!("no closed form for n = {n}; available for n = 2, 3, 4"))),
    };
    if value.is_negative() {
        return Err(Error::internal(format!("closed form C({n},{s}) evaluated to {value}")));
    }
    Ok(value.to_biguint().expect("non-negative"))
}

/// The value of `c(n, p)` when it is one of the known closed cases:
/// `0` for `p < n`, `n` for `p = n >= 3`, `0` for `p = n + 1 >= 5` and
/// `0` for `p = n + 2 >= 7`.
pub fn known_c_n_p(n: usize, p: usize) -> Option<u64> {
    if p < n {
        Some(0)
    } else if p == n && n >= 3 {
        Some(n as u64)
    } else if (p == n + 1 && n >= 4) || (p == n + 2 && n >= 5) {
        Some(0)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_values() {
        assert_eq!(closed_form_c(2, 3).unwrap(), BigUint::from(36u32));
        assert_eq!(closed_form_c(3, 2).unwrap(), BigUint::from(24u32));
        assert_eq!(closed_form_c(4, 2).unwrap(), BigUint::from(1744u32));
        assert_eq!(closed_form_c(3, 3).unwrap(), BigUint::from(5076u32));
        assert_eq!(closed_form_c(4, 3).unwrap(), BigUint::from(8_111_664u32));
        assert!(matches!(closed_form_c(5, 2), Err(Error::Input(_))));
        assert!(closed_form_c(3, 1).is_err());
    }

    #[test]
    fn known_cases() {
        assert_eq!(known_c_n_p(5, 4), Some(0));
        assert_eq!(known_c_n_p(4, 4), Some(4));
        assert_eq!(known_c_n_p(5, 7), Some(0));
        assert_eq!(known_c_n_p(4, 6), None);
        assert_eq!(known_c_n_p(2, 2), None);
    }
}
