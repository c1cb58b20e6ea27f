use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::elim;
use super::matrix::Matrix;

/// Exact rational numbers, always kept in lowest terms with positive denominator.
pub type Rational = BigRational;

/// A field whose elements are represented exactly.
///
/// Arithmetic is spelled out as named methods taking references so that the
/// elimination kernels can be written once for both the rationals and the
/// small prime fields.
pub trait Field: Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` exactly when `self` is zero.
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    /// Rank of `m`. Fields with a better kernel than plain Gaussian
    /// elimination override this.
    fn matrix_rank(m: &Matrix<Self>) -> usize {
        elim::gauss_rank(m)
    }

    /// Determinant of the square matrix `m`.
    fn matrix_det(m: &Matrix<Self>) -> Self {
        elim::gauss_det(m)
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn matrix_rank(m: &Matrix<Self>) -> usize {
        elim::bareiss_rank(m)
    }
    fn matrix_det(m: &Matrix<Self>) -> Self {
        elim::bareiss_det(m)
    }
}

/// Parse a rational from `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let value = match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            BigRational::new(p, q)
        }
        None => BigRational::from_integer(s.parse().ok()?),
    };
    Some(value)
}

/// Canonical decimal form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

const fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field `F_P` for primes `P < 2^16`.
///
/// Instantiating with a composite or oversized `P` is a compile-time error
/// as soon as an element is constructed.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const VALID: () = assert!(P < (1 << 16) && is_prime(P), "modulus must be a prime below 2^16");

    pub fn new(v: u32) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Fp(v % P)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub const fn modulus() -> u32 {
        P
    }

    /// Reduce a rational with denominator prime to `P`.
    pub fn from_rational(r: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let num = r.numer() % &p;
        let den = r.denom() % &p;
        let num = u32::try_from((num + &p) % &p).ok()?;
        let den = u32::try_from((den + &p) % &p).ok()?;
        Some(Fp::new(num).times(&Fp::new(den).inverse()?))
    }
}

impl<const P: u32> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn one() -> Self {
        Fp::new(1)
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v.rem_euclid(P as i64) as u32)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, rhs: &Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
    fn minus(&self, rhs: &Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
    fn times(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
    fn negated(&self) -> Self {
        Fp((P - self.0) % P)
    }
    fn inverse(&self) -> Option<Self> {
        if self.0 == 0 {
            return None;
        }
        // Fermat: a^(P-2)
        let mut base = *self;
        let mut exp = P - 2;
        let mut acc = Fp::new(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.times(&base);
            }
            base = base.times(&base);
            exp >>= 1;
        }
        Some(acc)
    }
}
