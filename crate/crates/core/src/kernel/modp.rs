//! Arithmetic modulo the prime `2^61 - 1`, used to test group closure at
//! random points.

pub const P: u64 = (1 << 61) - 1;

pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

pub fn mul(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let lo = (p as u64) & P;
    let hi = (p >> 61) as u64;
    add(lo, hi)
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub fn inv(a: u64) -> Option<u64> {
    (a != 0).then(|| pow(a, P - 2))
}

pub fn from_i64(n: i64) -> u64 {
    n.rem_euclid(P as i64) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_laws() {
        let a = 123_456_789_012_345u64;
        assert_eq!(mul(a, inv(a).unwrap()), 1);
        assert_eq!(add(P - 1, 2), 1);
        assert_eq!(from_i64(-1), P - 1);
    }
}
