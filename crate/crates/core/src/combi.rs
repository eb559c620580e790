use crate::error::{Error, Result};

/// `C(n, k)` in `u64`, erroring on overflow.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow(format!("C({n}, {k})")));
        }
    }
    Ok(acc as u64)
}
