//! Matrices of `T` on `F(d, ℓ)`, triangularity, and the exact spectrum.
//!
//! Bases are ordered greatest first: monomials by decreasing partition,
//! `S(d, ℓ)` by decreasing `≻`. In the latter order the matrix of `T` is
//! upper triangular and its diagonal is the spectrum.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::genfun::{gbasis, GProduct};
pub use crate::genfun::s_basis;
use crate::linalg::{polynomial_from_roots, Matrix};
use crate::operator::{apply_t, factor_eigenvalue};
use crate::partition::{admissible_sequences, profile_to_partition, Partition};
use crate::poly::{inner_product, monomial_basis, Bidegree, Monomial, Polynomial};
use crate::rational::Rational;

fn check_bidegree(d: usize, len: usize) -> Result<()> {
    if len == 0 || d < len {
        return Err(Error::InvalidBidegree { d, len });
    }
    Ok(())
}

/// `½ Σ (ℓ_i - 1)(2d_i - ℓ_i)` over an index sequence.
pub fn eigenvalue_of_sequence(seq: &[(usize, usize)]) -> u64 {
    seq.iter().map(|&(d, len)| factor_eigenvalue(d, len)).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisKind {
    Monomial,
    #[serde(rename = "gbasis")]
    GBasis,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BasisLabel {
    Monomial(Monomial),
    Product(GProduct),
}

impl std::fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BasisLabel::Monomial(m) => m.fmt(f),
            BasisLabel::Product(p) => p.fmt(f),
        }
    }
}

/// Matrix of `T` on `F(d, ℓ)`: column `j` holds the coordinates of
/// `T(labels[j])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    pub bidegree: Bidegree,
    pub basis: BasisKind,
    pub labels: Vec<BasisLabel>,
    pub matrix: Matrix,
}

pub fn t_matrix(d: usize, len: usize, basis: BasisKind) -> Result<OperatorMatrix> {
    check_bidegree(d, len)?;
    let (labels, columns): (Vec<BasisLabel>, Vec<Vec<Rational>>) = match basis {
        BasisKind::Monomial => {
            let monomials = monomial_basis(d, len);
            let index: BTreeMap<&Monomial, usize> =
                monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
            let columns: Vec<Vec<Rational>> = monomials
                .par_iter()
                .map(|m| {
                    let image = apply_t(&Polynomial::monomial(m.clone(), Rational::from_integer(1.into())));
                    let mut col = vec![Rational::zero(); monomials.len()];
                    for (mm, c) in image.terms() {
                        col[index[mm]] = c.clone();
                    }
                    col
                })
                .collect();
            (monomials.into_iter().map(BasisLabel::Monomial).collect(), columns)
        }
        BasisKind::GBasis => {
            let basis = gbasis(d, len)?;
            let columns = basis
                .products
                .par_iter()
                .map(|p| basis.coordinates(&apply_t(&p.expand())))
                .collect::<Result<Vec<_>>>()?;
            (
                basis.products.iter().cloned().map(BasisLabel::Product).collect(),
                columns,
            )
        }
    };
    let matrix = Matrix::from_columns(labels.len(), &columns);
    Ok(OperatorMatrix {
        bidegree: Bidegree::new(d, len),
        basis,
        labels,
        matrix,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangularCheck {
    pub upper_triangular: bool,
    pub diagonal: Vec<Rational>,
}

/// Whether the matrix of `T` in `S(d, ℓ)` (greatest first) has nothing below
/// the diagonal.
pub fn verify_triangular(d: usize, len: usize) -> Result<TriangularCheck> {
    let m = t_matrix(d, len, BasisKind::GBasis)?.matrix;
    Ok(TriangularCheck {
        upper_triangular: m.is_upper_triangular(),
        diagonal: m.diagonal(),
    })
}

pub fn dominant_eigenvalue(d: usize, len: usize) -> Result<u64> {
    check_bidegree(d, len)?;
    Ok(factor_eigenvalue(d, len))
}

/// `0` is an eigenvalue on `F(d, ℓ)` exactly when `d >= ℓ²`.
pub fn has_zero_eigenvalue(d: usize, len: usize) -> Result<bool> {
    check_bidegree(d, len)?;
    Ok(d >= len * len)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenVector {
    /// Coordinates in `S(d, ℓ)`.
    #[serde(with = "fraction_vec")]
    pub coordinates: Vec<Rational>,
    pub polynomial: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Eigenspace {
    pub eigenvalue: u64,
    pub vectors: Vec<EigenVector>,
}

fn integral_eigenvalue(q: &Rational) -> Result<u64> {
    if !q.is_integer() {
        return Err(Error::Internal(format!("non-integral eigenvalue {q}")));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::Internal(format!("negative or oversized eigenvalue {q}")))
}

/// For each distinct eigenvalue (ascending), a basis of its eigenspace
/// computed as the exact kernel of `M - λI` on the `S(d, ℓ)` matrix.
///
/// Kernel vectors come out in increasing order of their free coordinate.
pub fn eigenbasis(d: usize, len: usize) -> Result<Vec<Eigenspace>> {
    let basis = gbasis(d, len)?;
    let m = t_matrix(d, len, BasisKind::GBasis)?.matrix;
    let mut multiplicity: BTreeMap<u64, usize> = BTreeMap::new();
    for q in m.diagonal() {
        *multiplicity.entry(integral_eigenvalue(&q)?).or_default() += 1;
    }
    let mut out = Vec::with_capacity(multiplicity.len());
    for (&lambda, &mult) in &multiplicity {
        let kernel = m.shift(&Rational::from_integer(BigInt::from(lambda))).kernel();
        if kernel.len() != mult {
            return Err(Error::Internal(format!(
                "eigenvalue {lambda} on F({d},{len}) has multiplicity {mult} but a {}-dimensional eigenspace",
                kernel.len()
            )));
        }
        let vectors = kernel
            .into_iter()
            .map(|coordinates| EigenVector {
                polynomial: basis.reconstruct(&coordinates),
                coordinates,
            })
            .collect();
        out.push(Eigenspace {
            eigenvalue: lambda,
            vectors,
        });
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    pub eigenvalue: u64,
    /// The admissible `(d_i, ℓ_i)` sequence indexing this eigenvalue.
    pub sequence: Vec<(usize, usize)>,
    /// The Young diagram with that hook/increment sequence.
    pub diagram: Partition,
    pub eigenvector: EigenVector,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub bidegree: Bidegree,
    /// Sorted by eigenvalue, ties in `S(d, ℓ)` order.
    pub entries: Vec<SpectrumEntry>,
    pub dominant: u64,
    pub has_zero: bool,
}

impl SpectrumReport {
    pub fn eigenvalues(&self) -> Vec<u64> {
        self.entries.iter().map(|e| e.eigenvalue).collect()
    }
}

/// Exact spectrum of `T` on `F(d, ℓ)`: one entry per admissible sequence,
/// with the eigenvalue from the closed formula. The formula multiset is
/// checked against the diagonal of the triangular matrix, and each entry is
/// paired with an eigenvector.
pub fn spectrum(d: usize, len: usize) -> Result<SpectrumReport> {
    check_bidegree(d, len)?;
    let sequences = admissible_sequences(d, len);
    let formula: Vec<u64> = sequences.iter().map(|s| eigenvalue_of_sequence(s)).collect();

    let tri = verify_triangular(d, len)?;
    if !tri.upper_triangular {
        return Err(Error::Internal(format!("matrix of T on S({d},{len}) is not triangular")));
    }
    let diagonal = tri
        .diagonal
        .iter()
        .map(integral_eigenvalue)
        .collect::<Result<Vec<_>>>()?;
    if diagonal != formula {
        return Err(Error::Internal(format!(
            "diagonal {diagonal:?} disagrees with the eigenvalue formula {formula:?} on F({d},{len})"
        )));
    }

    // position j of S(d, ℓ) is matched with the kernel vector whose free
    // coordinate is the j-th among those carrying the same eigenvalue
    let mut spaces: BTreeMap<u64, std::vec::IntoIter<EigenVector>> = eigenbasis(d, len)?
        .into_iter()
        .map(|s| (s.eigenvalue, s.vectors.into_iter()))
        .collect();
    let mut entries = Vec::with_capacity(sequences.len());
    for (seq, lambda) in sequences.into_iter().zip(formula) {
        let eigenvector = spaces
            .get_mut(&lambda)
            .and_then(Iterator::next)
            .ok_or_else(|| Error::Internal(format!("missing eigenvector for {lambda}")))?;
        entries.push(SpectrumEntry {
            eigenvalue: lambda,
            diagram: profile_to_partition(&seq)?,
            sequence: seq,
            eigenvector,
        });
    }
    entries.sort_by_key(|e| e.eigenvalue);

    let dominant = entries.iter().map(|e| e.eigenvalue).max().unwrap_or(0);
    let has_zero = entries.first().is_some_and(|e| e.eigenvalue == 0);
    Ok(SpectrumReport {
        bidegree: Bidegree::new(d, len),
        entries,
        dominant,
        has_zero,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrthogonalVector {
    pub eigenvalue: u64,
    pub polynomial: Polynomial,
    #[serde(with = "fraction_vec")]
    pub coordinates: Vec<Rational>,
    #[serde(with = "crate::rational::serde_fraction")]
    pub norm_squared: Rational,
}

/// Eigenbasis made orthogonal by Gram–Schmidt inside each eigenspace.
///
/// Vectors are not normalised: norms are square roots of rationals. Scaling
/// each vector by `1/sqrt(norm_squared)` gives an orthonormal eigenbasis.
pub fn orthogonal_eigenbasis(d: usize, len: usize) -> Result<Vec<OrthogonalVector>> {
    let mut out: Vec<OrthogonalVector> = Vec::new();
    for space in eigenbasis(d, len)? {
        let start = out.len();
        for v in space.vectors {
            let mut poly = v.polynomial;
            let mut coords = v.coordinates;
            for u in &out[start..] {
                let c = inner_product(&poly, &u.polynomial) / &u.norm_squared;
                if c.is_zero() {
                    continue;
                }
                poly = &poly - &u.polynomial.scale(&c);
                for (x, y) in coords.iter_mut().zip(&u.coordinates) {
                    *x -= &c * y;
                }
            }
            let norm_squared = inner_product(&poly, &poly);
            if norm_squared <= Rational::zero() {
                return Err(Error::Internal(format!(
                    "non-positive norm {norm_squared} in eigenspace {} of F({d},{len})",
                    space.eigenvalue
                )));
            }
            out.push(OrthogonalVector {
                eigenvalue: space.eigenvalue,
                polynomial: poly,
                coordinates: coords,
                norm_squared,
            });
        }
    }
    for (i, a) in out.iter().enumerate() {
        for b in &out[i + 1..] {
            if !inner_product(&a.polynomial, &b.polynomial).is_zero() {
                return Err(Error::Internal(format!(
                    "eigenvectors for {} and {} on F({d},{len}) are not orthogonal",
                    a.eigenvalue, b.eigenvalue
                )));
            }
        }
    }
    Ok(out)
}

/// Diagonal Gram matrix of the monomial basis: `<μ, μ> = Π a_k!`.
pub fn gram_matrix(d: usize, len: usize) -> Matrix {
    let diag: Vec<Rational> = monomial_basis(d, len)
        .iter()
        .map(|m| Rational::from_integer(m.norm_squared()))
        .collect();
    Matrix::diagonal_matrix(&diag)
}

/// `Mᵀ G = G M` for the monomial-basis matrix `M` and Gram matrix `G`.
pub fn verify_self_adjoint(d: usize, len: usize) -> Result<bool> {
    let m = t_matrix(d, len, BasisKind::Monomial)?.matrix;
    let g = gram_matrix(d, len);
    Ok(&m.transpose() * &g == &g * &m)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPolyCheck {
    /// `det(xI - M)` for the monomial-basis matrix, lowest degree first.
    pub characteristic: Vec<Rational>,
    /// `Π (x - λ)` over the spectrum from the eigenvalue formula.
    pub from_spectrum: Vec<Rational>,
}

impl CharPolyCheck {
    pub fn matches(&self) -> bool {
        self.characteristic == self.from_spectrum
    }
}

pub fn char_poly_check(d: usize, len: usize) -> Result<CharPolyCheck> {
    check_bidegree(d, len)?;
    let m = t_matrix(d, len, BasisKind::Monomial)?.matrix;
    let roots: Vec<Rational> = admissible_sequences(d, len)
        .iter()
        .map(|s| Rational::from_integer(BigInt::from(eigenvalue_of_sequence(s))))
        .collect();
    Ok(CharPolyCheck {
        characteristic: m.characteristic_polynomial(),
        from_spectrum: polynomial_from_roots(&roots),
    })
}

pub(crate) mod fraction_vec {
    use super::*;
    use crate::rational::{parse_rational, to_fraction_string};
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(to_fraction_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<Rational>, D::Error> {
        Vec::<String>::deserialize(d)?
            .iter()
            .map(|s| parse_rational(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::g_poly;
    use crate::rational::{int, ratio};

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn f42_matrices() {
        let mono = t_matrix(4, 2, BasisKind::Monomial).unwrap().matrix;
        assert_eq!(mono.to_rows(), vec![ints(&[2, 2]), ints(&[1, 1])]);
        let g = t_matrix(4, 2, BasisKind::GBasis).unwrap().matrix;
        assert_eq!(g.to_rows(), vec![ints(&[3, 2]), ints(&[0, 0])]);
        let row = t_matrix(6, 1, BasisKind::GBasis).unwrap().matrix;
        assert_eq!(row.to_rows(), vec![ints(&[0])]);
    }

    #[test]
    fn triangular_small() {
        let t = verify_triangular(4, 2).unwrap();
        assert!(t.upper_triangular);
        assert_eq!(t.diagonal, ints(&[3, 0]));
        let t = verify_triangular(3, 2).unwrap();
        assert!(t.upper_triangular);
        assert_eq!(t.diagonal, ints(&[2]));
    }

    #[test]
    fn spectrum_small() {
        assert_eq!(spectrum(4, 2).unwrap().eigenvalues(), vec![0, 3]);
        assert_eq!(spectrum(5, 1).unwrap().eigenvalues(), vec![0]);
        for d in 1..8u64 {
            let s = spectrum(d as usize, d as usize).unwrap();
            assert_eq!(s.eigenvalues(), vec![d * (d - 1) / 2]);
        }
        assert!(spectrum(2, 3).is_err());
        assert!(spectrum(2, 0).is_err());
    }

    #[test]
    fn spectrum_f12_4() {
        let s = spectrum(12, 4).unwrap();
        assert_eq!(
            s.eigenvalues(),
            vec![1, 3, 3, 5, 6, 7, 7, 10, 10, 10, 13, 15, 17, 19, 30]
        );
        assert_eq!(s.dominant, 30);
        assert!(!s.has_zero);
    }

    #[test]
    fn dominant_and_zero() {
        assert_eq!(dominant_eigenvalue(12, 4).unwrap(), 30);
        assert_eq!(dominant_eigenvalue(9, 1).unwrap(), 0);
        assert_eq!(dominant_eigenvalue(4, 2).unwrap(), 3);
        assert!(has_zero_eigenvalue(4, 2).unwrap());
        assert!(!has_zero_eigenvalue(12, 4).unwrap());
        assert!(has_zero_eigenvalue(1, 1).unwrap());
    }

    #[test]
    fn eigenvectors_f42() {
        let spaces = eigenbasis(4, 2).unwrap();
        assert_eq!(spaces.len(), 2);
        assert_eq!(spaces[0].eigenvalue, 0);
        assert_eq!(spaces[0].vectors[0].coordinates, vec![ratio(-2, 3), int(1)]);
        assert_eq!(spaces[1].eigenvalue, 3);
        assert_eq!(spaces[1].vectors[0].polynomial, g_poly(4, 2));
        let spaces = eigenbasis(3, 2).unwrap();
        assert_eq!(spaces[0].eigenvalue, 2);
        assert_eq!(spaces[0].vectors[0].polynomial, &Polynomial::var(1) * &Polynomial::var(2));
    }

    #[test]
    fn orthogonal_small() {
        let ob = orthogonal_eigenbasis(4, 2).unwrap();
        assert_eq!(ob.len(), 2);
        assert!(inner_product(&ob[0].polynomial, &ob[1].polynomial).is_zero());
        let single = orthogonal_eigenbasis(5, 1).unwrap();
        assert_eq!(single[0].polynomial, Polynomial::var(5));
        assert_eq!(single[0].norm_squared, int(1));
        let single = orthogonal_eigenbasis(3, 2).unwrap();
        assert_eq!(single[0].norm_squared, int(1));
    }

    #[test]
    fn self_adjoint_small() {
        assert!(verify_self_adjoint(4, 2).unwrap());
        assert!(verify_self_adjoint(7, 1).unwrap());
        assert!(verify_self_adjoint(6, 3).unwrap());
        let g = gram_matrix(4, 2);
        assert_eq!(g.diagonal(), ints(&[1, 2]));
    }

    #[test]
    fn char_poly_small() {
        let c = char_poly_check(4, 2).unwrap();
        assert_eq!(c.characteristic, ints(&[0, -3, 1]));
        assert!(c.matches());
        let c = char_poly_check(3, 2).unwrap();
        assert_eq!(c.characteristic, ints(&[-2, 1]));
        assert!(c.matches());
        assert!(char_poly_check(12, 4).unwrap().matches());
    }
}
