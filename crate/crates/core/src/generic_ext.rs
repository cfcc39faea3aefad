//! Generic extensions in `H_1`, computed through the tableau operations.

use crate::error::{Error, Result};
use crate::picket::H1Object;
use crate::star::{fill, star_ext, star_lr1};
use crate::tableau::ExtTableau;

/// `N * M`: the generic extension of `n` by `m` (`m` is the sub-object).
pub fn generic_extension(n: &H1Object, m: &H1Object) -> H1Object {
    let z = star_ext(&m.gamma_hat(), &n.gamma_hat());
    H1Object::from_ext_tableau(&z)
}

/// `N * M` for objects of `S_1`, using only the `LR_1` product.
pub fn generic_extension_s1(n: &H1Object, m: &H1Object) -> Result<H1Object> {
    if !n.in_s1() || !m.in_s1() {
        return Err(Error::NotInS1);
    }
    let z = star_lr1(&m.gamma_hat().tab, &n.gamma_hat().tab);
    Ok(H1Object::from_ext_tableau(&z.into()))
}

/// `(P1^0)^n * M` for `m` in `S_1`.
pub fn generic_extension_by_free(m: &H1Object, n: u64) -> Result<H1Object> {
    if !m.in_s1() {
        return Err(Error::NotInS1);
    }
    let (tab, leftover) = fill(&m.gamma_hat().tab, n);
    Ok(H1Object::from_ext_tableau(&ExtTableau::new(tab, leftover)))
}
