//! Graded bracket on `g`-valued cochains.
//!
//! A `g`-valued cochain of degree `p + 1` has graded degree `p`. For `alpha`
//! of degree `p + 1` and `beta` of degree `q + 1`,
//!
//! ```text
//! (alpha o beta)(x_1..x_{p+q+1}) = sum_{k=0}^{p} (-1)^{kq} sum_{s in sh(k,q)} sgn(s)
//!     alpha(x_s(1)..x_s(k), beta(x_s(k+1)..x_s(k+q), x_{k+q+1}), x_{k+q+2}..x_{p+q+1})
//! [alpha, beta] = alpha o beta + (-1)^{pq+1} beta o alpha
//! ```

use crate::error::{Error, Result};
use crate::scalar::{axpy, Field};

use super::cochain::Cochain;

/// A `(k, q)`-shuffle: a permutation of `0..k+q` increasing on its first `k`
/// and its last `q` positions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Shuffle {
    /// `perm[i]` is the image of position `i`.
    pub perm: Vec<usize>,
    /// `+1` or `-1`.
    pub sign: i8,
}

/// All `(k, q)`-shuffles, ordered by their first block.
pub fn shuffles(k: usize, q: usize) -> Vec<Shuffle> {
    let total = k + q;
    let mut out = Vec::new();
    let mut chosen = Vec::with_capacity(k);
    subsets(total, k, 0, &mut chosen, &mut |first| {
        let mut in_first = vec![false; total];
        for &a in first {
            in_first[a] = true;
        }
        let second: Vec<usize> = (0..total).filter(|&b| !in_first[b]).collect();
        let inversions: usize = first
            .iter()
            .map(|&a| second.iter().filter(|&&b| a > b).count())
            .sum();
        let perm = first.iter().chain(&second).copied().collect();
        out.push(Shuffle {
            perm,
            sign: if inversions.is_multiple_of(2) { 1 } else { -1 },
        });
    });
    out
}

fn subsets(total: usize, k: usize, start: usize, chosen: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
    if chosen.len() == k {
        emit(chosen);
        return;
    }
    let remaining = k - chosen.len();
    for a in start..=total - remaining {
        chosen.push(a);
        subsets(total, k, a + 1, chosen, emit);
        chosen.pop();
    }
}

fn require_g_valued<F: Field>(c: &Cochain<F>, what: &'static str) -> Result<()> {
    if c.m != c.n {
        return Err(Error::dimension(what, c.n, c.m));
    }
    if c.degree == 0 {
        return Err(Error::Input(format!("{what}: graded bracket needs degree at least 1")));
    }
    Ok(())
}

/// The circle product `alpha o beta` of two `g`-valued cochains.
pub fn circle_product<F: Field>(alpha: &Cochain<F>, beta: &Cochain<F>) -> Result<Cochain<F>> {
    require_g_valued(alpha, "alpha values")?;
    require_g_valued(beta, "beta values")?;
    if alpha.n != beta.n {
        return Err(Error::dimension("beta algebra dimension", alpha.n, beta.n));
    }
    let n = alpha.n;
    let p = alpha.degree - 1;
    let q = beta.degree - 1;
    let total = p + q + 1;
    let blocks: Vec<(F, Vec<Shuffle>)> = (0..=p)
        .map(|k| (F::sign(k * q), shuffles(k, q)))
        .collect();

    Ok(Cochain::from_fn(total, n, n, |x| {
        let mut out = vec![F::zero(); n];
        let mut inner = Vec::with_capacity(q + 1);
        let mut prefix = Vec::with_capacity(p);
        for (k, (outer_sign, shs)) in blocks.iter().enumerate() {
            let suffix = &x[k + q + 1..];
            for sh in shs {
                prefix.clear();
                prefix.extend(sh.perm[..k].iter().map(|&i| x[i]));
                inner.clear();
                inner.extend(sh.perm[k..].iter().map(|&i| x[i]));
                inner.push(x[k + q]);
                let value = alpha.value_with_vector(&prefix, beta.value(&inner), suffix);
                let coeff = if sh.sign > 0 { outer_sign.clone() } else { -outer_sign.clone() };
                axpy(&mut out, &coeff, &value);
            }
        }
        out
    }))
}

/// `[alpha, beta] = alpha o beta + (-1)^{pq+1} beta o alpha`.
pub fn graded_bracket<F: Field>(alpha: &Cochain<F>, beta: &Cochain<F>) -> Result<Cochain<F>> {
    let ab = circle_product(alpha, beta)?;
    let ba = circle_product(beta, alpha)?;
    let p = alpha.degree - 1;
    let q = beta.degree - 1;
    let mut out = ab;
    axpy(&mut out.coeffs, &F::sign(p * q + 1), &ba.coeffs);
    Ok(out)
}
