use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::scalar::{axpy, is_zero_vec, zero_vec, Field};

/// Lexicographic index of a basis tuple `(i_1, ..., i_k)`, first index most significant.
pub fn tuple_index(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &i| acc * n + i)
}

/// Inverse of [`tuple_index`].
pub fn tuple_of(mut index: usize, k: usize, n: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    out
}

/// A `k`-linear map `g^{(x)k} -> V` stored densely.
///
/// `coeffs[tuple_index(t) * m + a]` is coordinate `a` of the value on the basis
/// tuple `t`. Degree 0 is a single vector of `V`.
#[derive(Clone, Debug, PartialEq)]
pub struct Cochain<F> {
    pub degree: usize,
    pub n: usize,
    pub m: usize,
    pub coeffs: Vec<F>,
}

impl<F: Field> Cochain<F> {
    pub fn zero(degree: usize, n: usize, m: usize) -> Self {
        Cochain {
            degree,
            n,
            m,
            coeffs: zero_vec(n.pow(degree as u32) * m),
        }
    }

    pub fn new(degree: usize, n: usize, m: usize, coeffs: Vec<F>) -> Result<Self> {
        let expected = n.pow(degree as u32) * m;
        if coeffs.len() != expected {
            return Err(Error::dimension("cochain coefficients", expected, coeffs.len()));
        }
        Ok(Cochain {
            degree,
            n,
            m,
            coeffs,
        })
    }

    /// Cochain built from its values on basis tuples.
    pub fn from_fn(degree: usize, n: usize, m: usize, mut f: impl FnMut(&[usize]) -> Vec<F>) -> Self {
        let count = n.pow(degree as u32);
        let mut coeffs = Vec::with_capacity(count * m);
        for idx in 0..count {
            let value = f(&tuple_of(idx, degree, n));
            assert_eq!(value.len(), m, "cochain value has wrong length");
            coeffs.extend(value);
        }
        Cochain {
            degree,
            n,
            m,
            coeffs,
        }
    }

    /// The basis cochain with a single 1 at flat position `index`.
    pub fn basis(degree: usize, n: usize, m: usize, index: usize) -> Self {
        let mut c = Self::zero(degree, n, m);
        c.coeffs[index] = F::one();
        c
    }

    /// The structure tensor of an algebra as a `g`-valued 2-cochain.
    pub fn from_algebra(g: &LeibnizAlgebra<F>) -> Self {
        Cochain {
            degree: 2,
            n: g.dim(),
            m: g.dim(),
            coeffs: g.structure_constants().to_vec(),
        }
    }

    /// Reads a `g`-valued 2-cochain as a (not necessarily Leibniz) bracket.
    pub fn to_algebra(&self) -> Result<LeibnizAlgebra<F>> {
        if self.degree != 2 || self.m != self.n {
            return Err(Error::Input("only g-valued 2-cochains define brackets".into()));
        }
        LeibnizAlgebra::new(self.n, self.coeffs.clone())
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.coeffs)
    }

    /// Value on a basis tuple.
    pub fn value(&self, tuple: &[usize]) -> &[F] {
        debug_assert_eq!(tuple.len(), self.degree);
        let start = tuple_index(tuple, self.n) * self.m;
        &self.coeffs[start..start + self.m]
    }

    /// Value on `(e_prefix.., v, e_suffix..)` for an arbitrary vector `v`.
    pub fn value_with_vector(&self, prefix: &[usize], v: &[F], suffix: &[usize]) -> Vec<F> {
        debug_assert_eq!(prefix.len() + 1 + suffix.len(), self.degree);
        debug_assert_eq!(v.len(), self.n);
        let mut tuple = Vec::with_capacity(self.degree);
        tuple.extend_from_slice(prefix);
        tuple.push(0);
        tuple.extend_from_slice(suffix);
        let slot = prefix.len();
        let mut out = zero_vec(self.m);
        for (s, vs) in v.iter().enumerate() {
            if vs.is_zero() {
                continue;
            }
            tuple[slot] = s;
            axpy(&mut out, vs, self.value(&tuple));
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.degree, self.n, self.m), (other.degree, other.n, other.m));
        let mut out = self.clone();
        axpy(&mut out.coeffs, &F::one(), &other.coeffs);
        out
    }

    pub fn scale(&self, factor: &F) -> Self {
        let mut out = self.clone();
        for x in &mut out.coeffs {
            *x = x.clone() * factor;
        }
        out
    }
}
