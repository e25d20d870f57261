//! Closed-form extremal values.

use crate::error::{Error, Result};
use crate::radical::{int, rat, RadicalSum};

/// Names accepted by [`closed_form`].
pub const CLOSED_FORM_NAMES: [&str; 9] = [
    "th1",
    "th2",
    "min_m2",
    "second_min_m2",
    "second_min_n5",
    "second_min_large",
    "max",
    "second_max",
    "b2_value",
];

fn q(num: i64, s: u64) -> RadicalSum {
    RadicalSum::over_sqrt(num, s)
}

fn one() -> RadicalSum {
    RadicalSum::rational(int(1))
}

fn half(num: i64) -> RadicalSum {
    RadicalSum::rational(rat(num, 2))
}

/// Value of the closed form `name` at `(n, m)`. Forms that depend on only
/// one parameter ignore the other.
pub fn closed_form(name: &str, n: usize, m: usize) -> Result<RadicalSum> {
    let range = |reason: &'static str| Error::ClosedFormRange {
        name: name.to_string(),
        n,
        m,
        reason,
    };
    let (ni, mi) = (n as i64, m as i64);
    let (nu, mu) = (n as u64, m as u64);
    let value = match name {
        "th1" => {
            if m < 3 {
                return Err(range("needs m >= 3"));
            }
            q(mi + 1, mu + 4) + q(1, mu + 3) + q(mi - 3, 3) + one()
        }
        "th2" => {
            if m < 3 || 2 * m > n {
                return Err(range("needs 3 <= m <= floor(n/2)"));
            }
            q(mi + 1, nu - mu + 4) + q(ni - 2 * mi + 1, nu - mu + 3) + q(mi - 3, 3) + one()
        }
        "min_m2" => {
            if n < 4 {
                return Err(range("needs n >= 4"));
            }
            q(1, nu + 2) + q(ni - 4, nu) + q(2, nu + 1) + q(2, 5)
        }
        "second_min_m2" => {
            if n < 6 {
                return Err(range("needs n >= 6"));
            }
            q(1, nu + 2) + q(2, nu) + q(ni - 5, nu - 1) + q(2, 6) + q(1, 5)
        }
        "second_min_n5" => {
            if n != 5 {
                return Err(range("defined only at n = 5"));
            }
            q(3, 6) + q(2, 5) + half(1)
        }
        "second_min_large" => {
            if n < 6 {
                return Err(range("needs n >= 6"));
            }
            q(4, nu + 1) + q(ni - 5, nu) + one()
        }
        "max" => {
            if n < 4 {
                return Err(range("needs n >= 4"));
            }
            half(ni - 4) + q(1, 6) + q(4, 5)
        }
        "second_max" => {
            if n < 5 {
                return Err(range("needs n >= 5"));
            }
            half(ni - 5) + q(6, 5)
        }
        "b2_value" => {
            if n < 5 {
                return Err(range("needs n >= 5"));
            }
            half(ni - 3) + q(4, 6)
        }
        _ => return Err(Error::UnknownClosedForm(name.to_string())),
    };
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        build_b4_plus_pendant, build_bnab, build_bnm, members_b1_1, members_b3_2,
    };
    use crate::invariants::sum_connectivity;

    fn cf(name: &str, n: usize, m: usize) -> RadicalSum {
        closed_form(name, n, m).unwrap()
    }

    #[test]
    fn pinned_values() {
        assert_eq!(cf("th2", 6, 3), q(4, 7) + q(1, 6) + one());
        assert_eq!(cf("max", 5, 0), half(1) + q(1, 6) + q(4, 5));
        for m in 3..=6 {
            assert_eq!(cf("th1", 0, m), cf("th2", 2 * m, m));
        }
        // second-min for large n is the value of B_{n,3}
        for n in 6..=12 {
            assert_eq!(cf("second_min_large", n, 0), cf("th2", n, 3));
        }
        assert_eq!(cf("second_min_large", 8, 0), q(4, 9) + q(3, 8) + one());
    }

    #[test]
    fn forms_match_their_graphs() {
        for n in 6..=14 {
            for m in 3..=n / 2 {
                assert_eq!(sum_connectivity(&build_bnm(n, m).unwrap()), cf("th2", n, m));
            }
            assert_eq!(sum_connectivity(&build_bnab(n, n - 1, 3).unwrap()), cf("min_m2", n, 0));
            assert_eq!(sum_connectivity(&build_bnab(n, n - 2, 4).unwrap()), cf("second_min_m2", n, 0));
            assert_eq!(sum_connectivity(&members_b1_1(n)[0]), cf("max", n, 0));
            assert_eq!(sum_connectivity(&members_b3_2(n)[0]), cf("second_max", n, 0));
        }
        assert_eq!(sum_connectivity(&build_b4_plus_pendant()), cf("second_min_n5", 5, 0));
    }

    #[test]
    fn errors() {
        assert!(matches!(closed_form("nope", 6, 3), Err(Error::UnknownClosedForm(_))));
        assert!(matches!(closed_form("th2", 5, 3), Err(Error::ClosedFormRange { .. })));
        assert!(closed_form("th1", 0, 2).is_err());
        assert!(closed_form("second_min_n5", 6, 0).is_err());
        assert!(closed_form("second_max", 4, 0).is_err());
        for name in CLOSED_FORM_NAMES {
            assert!(closed_form(name, 0, 0).is_err(), "{name}");
        }
    }
}
