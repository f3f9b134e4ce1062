use crate::diagram::{Bipartition, Partition};
use crate::error::{Error, Result};

/// Number of standard tableaux of shape `p` by the hook length formula.
fn standard_tableaux(p: &Partition) -> Option<u128> {
    let n = p.size() as u128;
    let mut numerator: u128 = 1;
    for k in 2..=n {
        numerator = numerator.checked_mul(k)?;
    }
    let mut hooks: u128 = 1;
    for row in 1..=p.len() {
        let len = p.row(row) as usize;
        for col in 1..=len {
            let arm = len - col;
            let leg = (row + 1..=p.len()).take_while(|&r| p.row(r) as usize >= col).count();
            hooks = hooks.checked_mul((arm + leg + 1) as u128)?;
        }
    }
    Some(numerator / hooks)
}

fn binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul(n - i)? / (i + 1);
    }
    Some(acc)
}

/// Number of standard bitableaux of shape `lambda`:
/// `C(n, |λ¹|) · f^{λ¹} · f^{λ²}`, in exact integer arithmetic.
pub fn bipartition_dimension(lambda: &Bipartition) -> Result<u128> {
    let n = lambda.size() as u128;
    let k = lambda.first().size() as u128;
    binomial(n, k)
        .and_then(|b| b.checked_mul(standard_tableaux(lambda.first())?))
        .and_then(|b| b.checked_mul(standard_tableaux(lambda.second())?))
        .ok_or_else(|| Error::Overflow(lambda.clone()))
}
