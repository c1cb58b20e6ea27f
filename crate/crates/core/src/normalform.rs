//! Generic nilpotent matrices under Borel conjugation.
//!
//! A nilpotent `A` is generic when every corner minor
//! `det((A^{n-k})_{(k,k)})`, `1 ≤ k < n`, is nonzero. Such an `A` is
//! conjugate under the upper-triangular group to exactly one strictly
//! lower-triangular matrix with unit subdiagonal. Determinants of block
//! matrices built from corner submatrices of `P(A)` are semiinvariants,
//! and suitable choices recover the entries of that normal form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Rational, RationalRepr};

fn as_u32(e: usize) -> u32 {
    u32::try_from(e).expect("exponent fits in u32")
}

/// Checks `A^n = 0`.
pub fn require_nilpotent(a: &Matrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::NotSquare { rows: a.rows(), cols: a.cols() });
    }
    if !a.pow(as_u32(a.rows()))?.is_zero() {
        return Err(Error::NotNilpotent);
    }
    Ok(())
}

/// Corner minors of the powers of a nilpotent matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenericityReport {
    pub generic: bool,
    /// Smallest `k` whose minor vanishes.
    pub failing_k: Option<usize>,
    /// `minors[k-1] = det((A^{n-k})_{(k,k)})`.
    pub minors: Vec<RationalRepr>,
}

pub fn genericity(a: &Matrix) -> Result<GenericityReport> {
    require_nilpotent(a)?;
    let n = a.rows();
    let mut minors = Vec::with_capacity(n.saturating_sub(1));
    let mut columns_independent = true;
    for k in 1..n {
        let power = a.pow(as_u32(n - k))?;
        minors.push(power.submatrix_corner(k, k)?.det()?);
        columns_independent &= power.block(0, n, 0, k)?.rank() == k;
    }
    let failing_k = minors.iter().position(Field::is_zero).map(|i| i + 1);
    let generic = failing_k.is_none();
    // independence of the first k columns of A^{n-k} for all k is the
    // equivalent formulation; disagreement means a bug, not bad input
    if generic != columns_independent {
        return Err(Error::Internal(format!(
            "minor test says generic = {generic}, column test says {columns_independent}"
        )));
    }
    Ok(GenericityReport { generic, failing_k, minors: minors.into_iter().map(RationalRepr).collect() })
}

/// `h = g · a · g⁻¹` with `g` upper triangular.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NormalForm {
    pub h: Matrix,
    pub g: Matrix,
}

/// Whether `h` is strictly lower triangular with ones on the subdiagonal.
pub fn has_normal_shape(h: &Matrix) -> bool {
    let n = h.rows();
    h.is_square()
        && (0..n).all(|i| {
            (i..n).all(|j| h.get(i, j).is_zero()) && (i + 1 >= n || h.get(i + 1, i).is_one())
        })
}

/// The unique normal form of a generic nilpotent matrix.
///
/// For each `k` solve `A^{n-1} e_1 = Σ_{i ≤ k} b_{k,i} A^{n-k} e_i`; the
/// vectors `v_k = Σ_i b_{k,i} e_i` form an upper-triangular basis change
/// `T`, and `H = T⁻¹ A T`.
pub fn normal_form(a: &Matrix) -> Result<NormalForm> {
    let report = genericity(a)?;
    if let Some(k) = report.failing_k {
        return Err(Error::NotGeneric { k, power: a.rows() - k });
    }
    let n = a.rows();
    if n == 0 {
        return Ok(NormalForm { h: a.clone(), g: a.clone() });
    }
    let top = a.pow(as_u32(n - 1))?.block(0, n, 0, 1)?;
    let mut t = Matrix::zeros(n, n);
    for k in 1..=n {
        let system = a.pow(as_u32(n - k))?.block(0, n, 0, k)?;
        let b = system
            .solve_unique(&top)?
            .ok_or_else(|| Error::Internal(format!("basis equation {k} has no unique solution")))?;
        for i in 0..k {
            t[(i, k - 1)] = b.get(i, 0).clone();
        }
    }
    let g = t.inverse()?.ok_or_else(|| Error::Internal("basis change is singular".into()))?;
    let h = &(&g * a) * &t;
    if !has_normal_shape(&h) {
        return Err(Error::Internal("conjugate does not have normal shape".into()));
    }
    Ok(NormalForm { h, g })
}

/// Block sizes `a`, `b` and the polynomial grid `P` of a determinantal
/// semiinvariant. `P[i][j]` lists coefficients from the constant term up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DatumRepr", into = "DatumRepr")]
pub struct SemiinvariantDatum {
    a: Vec<usize>,
    b: Vec<usize>,
    p: Vec<Vec<Vec<Rational>>>,
}

#[derive(Serialize, Deserialize)]
struct DatumRepr {
    a: Vec<usize>,
    b: Vec<usize>,
    #[serde(rename = "P")]
    p: Vec<Vec<Vec<RationalRepr>>>,
}

impl TryFrom<DatumRepr> for SemiinvariantDatum {
    type Error = Error;
    fn try_from(r: DatumRepr) -> Result<Self> {
        let p = r.p.into_iter().map(|row| row.into_iter().map(|c| c.into_iter().map(|x| x.0).collect()).collect()).collect();
        SemiinvariantDatum::new(r.a, r.b, p)
    }
}

impl From<SemiinvariantDatum> for DatumRepr {
    fn from(d: SemiinvariantDatum) -> Self {
        let p = d.p.into_iter().map(|row| row.into_iter().map(|c| c.into_iter().map(RationalRepr).collect()).collect()).collect();
        DatumRepr { a: d.a, b: d.b, p }
    }
}

impl SemiinvariantDatum {
    pub fn new(a: Vec<usize>, b: Vec<usize>, p: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        if p.len() != a.len() || p.iter().any(|row| row.len() != b.len()) {
            return Err(Error::InvalidDatum(format!(
                "polynomial grid must be {}x{}",
                a.len(),
                b.len()
            )));
        }
        let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
        if sa != sb {
            return Err(Error::InvalidDatum(format!("row blocks sum to {sa}, column blocks to {sb}")));
        }
        Ok(SemiinvariantDatum { a, b, p })
    }

    pub fn a(&self) -> &[usize] {
        &self.a
    }

    pub fn b(&self) -> &[usize] {
        &self.b
    }

    pub fn polynomial(&self, i: usize, j: usize) -> &[Rational] {
        &self.p[i][j]
    }

    /// Size of the block matrix.
    pub fn k(&self) -> usize {
        self.a.iter().sum()
    }

    /// Every block must fit in an `n × n` corner.
    pub fn check_size(&self, n: usize) -> Result<()> {
        if let Some(x) = self.a.iter().chain(&self.b).find(|&&x| x > n) {
            return Err(Error::mismatch("semiinvariant datum", format!("block size {x} exceeds n = {n}")));
        }
        Ok(())
    }
}

/// `x^e` as a coefficient list.
fn monomial(e: usize) -> Vec<Rational> {
    let mut c = vec![Rational::zero(); e + 1];
    c[e] = Rational::one();
    c
}

/// The datum whose semiinvariant returns the entry `H_{i,j}` of a normal
/// form, for `1 ≤ j ≤ n-2` and `j+2 ≤ i ≤ n`.
///
/// Row blocks `(j-1, n-i+1)`, column blocks `(j, n-i)`, polynomials
/// `x^{n-j+1}`, `0`, `x`, `x^i`. The block matrix is then lower triangular
/// with ones on the diagonal except `H_{i,j}` in position `j`.
pub fn entry_datum(i: usize, j: usize, n: usize) -> Result<SemiinvariantDatum> {
    if !(1 <= j && j + 2 <= n && j + 2 <= i && i <= n) {
        return Err(Error::OutOfRange {
            what: "entry_datum",
            detail: format!("(i, j) = ({i}, {j}) needs 1 <= j <= n-2 and j+2 <= i <= n for n = {n}"),
        });
    }
    SemiinvariantDatum::new(
        vec![j - 1, n - i + 1],
        vec![j, n - i],
        vec![vec![monomial(n - j + 1), Vec::new()], vec![monomial(1), monomial(i)]],
    )
}

/// `A^P`: block `(i, j)` is the last `a_i` rows and first `b_j` columns of
/// `P_{i,j}(A)`; empty blocks are skipped.
pub fn block_matrix(a: &Matrix, datum: &SemiinvariantDatum) -> Result<Matrix> {
    require_nilpotent(a)?;
    datum.check_size(a.rows())?;
    let k = datum.k();
    let mut out = Matrix::zeros(k, k);
    let mut r0 = 0;
    for (i, &ai) in datum.a.iter().enumerate() {
        let mut c0 = 0;
        for (j, &bj) in datum.b.iter().enumerate() {
            if ai > 0 && bj > 0 {
                let block = a.poly_eval(&datum.p[i][j])?.submatrix_corner(ai, bj)?;
                for r in 0..ai {
                    for c in 0..bj {
                        out[(r0 + r, c0 + c)] = block.get(r, c).clone();
                    }
                }
            }
            c0 += bj;
        }
        r0 += ai;
    }
    Ok(out)
}

/// `D^P(A) = det(A^P)`.
pub fn semiinvariant(a: &Matrix, datum: &SemiinvariantDatum) -> Result<Rational> {
    block_matrix(a, datum)?.det()
}

/// Exponents `c` such that `D^P(g A g⁻¹) = Π g_{i,i}^{c_i} · D^P(A)`.
///
/// Each row block of height `a > 0` contributes `+1` on the last `a`
/// positions (the determinant of the lower-right `a × a` corner of `g`),
/// and each column block of width `b` contributes `-1` on the first `b`.
pub fn weight(datum: &SemiinvariantDatum, n: usize) -> Result<Vec<i64>> {
    datum.check_size(n)?;
    let mut w = vec![0i64; n];
    for &a in &datum.a {
        for x in &mut w[n - a..] {
            *x += 1;
        }
    }
    for &b in &datum.b {
        for x in &mut w[..b] {
            *x -= 1;
        }
    }
    Ok(w)
}

/// `Π g_{i,i}^{w_i}`.
pub fn character(g: &Matrix, w: &[i64]) -> Result<Rational> {
    if !g.is_square() || g.rows() != w.len() {
        return Err(Error::mismatch("character", format!("{}x{} matrix, {} weights", g.rows(), g.cols(), w.len())));
    }
    let mut out = Rational::one();
    for (i, &e) in w.iter().enumerate() {
        let d = g.get(i, i);
        if d.is_zero() {
            return Err(Error::InvalidDatum(format!("diagonal entry {} is zero", i + 1)));
        }
        let factor = if e >= 0 { d.clone() } else { d.inverse().expect("nonzero") };
        for _ in 0..e.unsigned_abs() {
            out = out * &factor;
        }
    }
    Ok(out)
}
