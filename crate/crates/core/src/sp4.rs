//! The Lie algebra sp(4) in the antidiagonal realization.
//!
//! Elements are 4×4 rational matrices `X` with `ᵗX·J + J·X = 0`, where `J` is
//! the antidiagonal form `antidiag(1, 1, -1, -1)`. The fixed basis consists of
//! the eight root vectors of the C2 root system followed by the two torus
//! generators `h1 = diag(1,0,0,-1)` and `h2 = diag(0,1,-1,0)`.

use std::fmt;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::qlinalg::{self, rat, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Sp4Error {
    #[error("matrix is not 4x4 (got {rows}x{cols})")]
    NotFourByFour { rows: usize, cols: usize },
    #[error("matrix does not satisfy tX*J + J*X = 0")]
    NotInSp4,
    #[error("symmetric form must be a symmetric 2x2 matrix")]
    NotSymmetric,
    #[error("symmetric form must be invertible")]
    Singular,
}

/// The eight roots of C2, written `n1*e1 + n2*e2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Root {
    E1MinusE2,
    MinusE1PlusE2,
    E1PlusE2,
    MinusE1MinusE2,
    TwoE1,
    MinusTwoE1,
    TwoE2,
    MinusTwoE2,
}

impl Root {
    pub const ALL: [Root; 8] = [
        Root::E1MinusE2,
        Root::MinusE1PlusE2,
        Root::E1PlusE2,
        Root::MinusE1MinusE2,
        Root::TwoE1,
        Root::MinusTwoE1,
        Root::TwoE2,
        Root::MinusTwoE2,
    ];

    /// Coefficients `(n1, n2)` of the root in the basis `e1, e2`.
    pub fn coefficients(self) -> (i64, i64) {
        match self {
            Root::E1MinusE2 => (1, -1),
            Root::MinusE1PlusE2 => (-1, 1),
            Root::E1PlusE2 => (1, 1),
            Root::MinusE1MinusE2 => (-1, -1),
            Root::TwoE1 => (2, 0),
            Root::MinusTwoE1 => (-2, 0),
            Root::TwoE2 => (0, 2),
            Root::MinusTwoE2 => (0, -2),
        }
    }

    pub fn negative(self) -> Root {
        match self {
            Root::E1MinusE2 => Root::MinusE1PlusE2,
            Root::MinusE1PlusE2 => Root::E1MinusE2,
            Root::E1PlusE2 => Root::MinusE1MinusE2,
            Root::MinusE1MinusE2 => Root::E1PlusE2,
            Root::TwoE1 => Root::MinusTwoE1,
            Root::MinusTwoE1 => Root::TwoE1,
            Root::TwoE2 => Root::MinusTwoE2,
            Root::MinusTwoE2 => Root::TwoE2,
        }
    }

    /// Nonzero entries `(row, col, value)` of the root vector `L_α`.
    fn entries(self) -> &'static [(usize, usize, i64)] {
        match self {
            Root::E1MinusE2 => &[(0, 1, 1), (2, 3, -1)],
            Root::MinusE1PlusE2 => &[(1, 0, 1), (3, 2, -1)],
            Root::E1PlusE2 => &[(0, 2, 1), (1, 3, 1)],
            Root::MinusE1MinusE2 => &[(2, 0, 1), (3, 1, 1)],
            Root::TwoE1 => &[(0, 3, 1)],
            Root::MinusTwoE1 => &[(3, 0, 1)],
            Root::TwoE2 => &[(1, 2, 1)],
            Root::MinusTwoE2 => &[(2, 1, 1)],
        }
    }

    /// The matrix entry whose value is the coordinate of `L_α`.
    fn coordinate_entry(self) -> (usize, usize) {
        let (i, j, _) = self.entries()[0];
        (i, j)
    }

    pub fn vector(self) -> Sp4Element {
        let mut m = RatMatrix::zeros(4, 4);
        for &(i, j, v) in self.entries() {
            m[(i, j)] = rat(v);
        }
        Sp4Element(m)
    }

    pub fn name(self) -> &'static str {
        match self {
            Root::E1MinusE2 => "L_{e1-e2}",
            Root::MinusE1PlusE2 => "L_{-e1+e2}",
            Root::E1PlusE2 => "L_{e1+e2}",
            Root::MinusE1MinusE2 => "L_{-e1-e2}",
            Root::TwoE1 => "L_{2e1}",
            Root::MinusTwoE1 => "L_{-2e1}",
            Root::TwoE2 => "L_{2e2}",
            Root::MinusTwoE2 => "L_{-2e2}",
        }
    }
}

/// One element of the fixed 10-element basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisVector {
    Root(Root),
    H1,
    H2,
}

/// The basis ordering used for every coordinate vector and 10×10 matrix.
pub const BASIS: [BasisVector; 10] = [
    BasisVector::Root(Root::E1MinusE2),
    BasisVector::Root(Root::MinusE1PlusE2),
    BasisVector::Root(Root::E1PlusE2),
    BasisVector::Root(Root::MinusE1MinusE2),
    BasisVector::Root(Root::TwoE1),
    BasisVector::Root(Root::MinusTwoE1),
    BasisVector::Root(Root::TwoE2),
    BasisVector::Root(Root::MinusTwoE2),
    BasisVector::H1,
    BasisVector::H2,
];

pub const DIM: usize = 10;

impl BasisVector {
    pub fn element(self) -> Sp4Element {
        match self {
            BasisVector::Root(r) => r.vector(),
            BasisVector::H1 => Sp4Element(RatMatrix::from_i64(&[
                [1, 0, 0, 0],
                [0, 0, 0, 0],
                [0, 0, 0, 0],
                [0, 0, 0, -1],
            ])),
            BasisVector::H2 => Sp4Element(RatMatrix::from_i64(&[
                [0, 0, 0, 0],
                [0, 1, 0, 0],
                [0, 0, -1, 0],
                [0, 0, 0, 0],
            ])),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisVector::Root(r) => r.name(),
            BasisVector::H1 => "h1",
            BasisVector::H2 => "h2",
        }
    }
}

pub fn basis() -> Vec<Sp4Element> {
    BASIS.iter().map(|b| b.element()).collect()
}

/// The form `J` defining sp(4) and GSp(4).
pub fn symplectic_form() -> RatMatrix {
    RatMatrix::from_i64(&[
        [0, 0, 0, 1],
        [0, 0, 1, 0],
        [0, -1, 0, 0],
        [-1, 0, 0, 0],
    ])
}

/// The 2×2 antidiagonal swap `[[0,1],[1,0]]`.
pub fn swap2() -> RatMatrix {
    RatMatrix::from_i64(&[[0, 1], [1, 0]])
}

pub fn is_in_sp4(m: &RatMatrix) -> bool {
    if m.rows() != 4 || m.cols() != 4 {
        return false;
    }
    let j = symplectic_form();
    (&(&m.transpose() * &j) + &(&j * m)).is_zero()
}

/// A 4×4 rational matrix known to lie in sp(4).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sp4Element(RatMatrix);

impl Sp4Element {
    pub fn new(m: RatMatrix) -> Result<Self, Sp4Error> {
        if m.rows() != 4 || m.cols() != 4 {
            return Err(Sp4Error::NotFourByFour {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !is_in_sp4(&m) {
            return Err(Sp4Error::NotInSp4);
        }
        Ok(Sp4Element(m))
    }

    pub fn zero() -> Self {
        Sp4Element(RatMatrix::zeros(4, 4))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> RatMatrix {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Coordinates in [`BASIS`] order.
    pub fn coordinates(&self) -> Vec<Rational> {
        BASIS
            .iter()
            .map(|b| match b {
                BasisVector::Root(r) => self.0[r.coordinate_entry()].clone(),
                BasisVector::H1 => self.0[(0, 0)].clone(),
                BasisVector::H2 => self.0[(1, 1)].clone(),
            })
            .collect()
    }

    pub fn from_coordinates(coords: &[Rational]) -> Self {
        assert_eq!(coords.len(), DIM, "sp(4) coordinates have length 10");
        let mut m = RatMatrix::zeros(4, 4);
        for (c, b) in coords.iter().zip(BASIS.iter()) {
            if c.is_zero() {
                continue;
            }
            m = &m + &b.element().0.scale(c);
        }
        Sp4Element(m)
    }

    pub fn add(&self, other: &Sp4Element) -> Sp4Element {
        Sp4Element(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Sp4Element) -> Sp4Element {
        Sp4Element(&self.0 - &other.0)
    }

    pub fn scale(&self, c: &Rational) -> Sp4Element {
        Sp4Element(self.0.scale(c))
    }

    /// Conjugation `g·X·g⁻¹`; the caller is responsible for `g` lying in
    /// GSp(4) so that the result stays in sp(4).
    pub fn conjugate_by(&self, g: &RatMatrix, g_inv: &RatMatrix) -> RatMatrix {
        &(g * &self.0) * g_inv
    }

    /// Root vectors and torus generators with nonzero coordinate.
    pub fn support(&self) -> Vec<BasisVector> {
        self.coordinates()
            .iter()
            .zip(BASIS.iter())
            .filter(|(c, _)| !c.is_zero())
            .map(|(_, b)| *b)
            .collect()
    }
}

impl fmt::Debug for Sp4Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Sp4Element({self})")
    }
}

impl fmt::Display for Sp4Element {
    /// Prints the element as a combination of basis vectors, e.g.
    /// `L_{2e2} + L_{e1-e2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, b) in self.coordinates().iter().zip(BASIS.iter()) {
            if c.is_zero() {
                continue;
            }
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (first, neg) {
                (true, true) => write!(f, "-")?,
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
                (true, false) => {}
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}", b.name())?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The Lie bracket `[x, y] = xy - yx`.
pub fn bracket(x: &Sp4Element, y: &Sp4Element) -> Sp4Element {
    Sp4Element(&(&x.0 * &y.0) - &(&y.0 * &x.0))
}

/// A symmetric invertible 2×2 rational matrix `S`, the datum of the Siegel
/// nilpotent `[[0, B], [0, 0]]` with `B = [[0,1],[1,0]]·S`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SymmetricForm(RatMatrix);

impl SymmetricForm {
    pub fn new(s: RatMatrix) -> Result<Self, Sp4Error> {
        if s.rows() != 2 || s.cols() != 2 || s[(0, 1)] != s[(1, 0)] {
            return Err(Sp4Error::NotSymmetric);
        }
        if s.determinant().is_none_or(|d| d.is_zero()) {
            return Err(Sp4Error::Singular);
        }
        Ok(SymmetricForm(s))
    }

    /// `[[a, b], [b, d]]`.
    pub fn from_entries(a: Rational, b: Rational, d: Rational) -> Result<Self, Sp4Error> {
        Self::new(RatMatrix::from_rows(vec![vec![a, b.clone()], vec![b, d]]).expect("2x2"))
    }

    pub fn identity() -> Self {
        SymmetricForm(RatMatrix::identity(2))
    }

    pub fn matrix(&self) -> &RatMatrix {
        &self.0
    }

    /// `B = [[0,1],[1,0]]·S`.
    pub fn b_block(&self) -> RatMatrix {
        &swap2() * &self.0
    }
}

/// The nilpotent parts that occur in the parameters handled here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum StandardNilpotent {
    Zero,
    N1,
    N2,
    N3,
    N4,
    N5,
    SiegelSym(SymmetricForm),
}

impl StandardNilpotent {
    pub fn tag(&self) -> &'static str {
        match self {
            StandardNilpotent::Zero => "0",
            StandardNilpotent::N1 => "N1",
            StandardNilpotent::N2 => "N2",
            StandardNilpotent::N3 => "N3",
            StandardNilpotent::N4 => "N4",
            StandardNilpotent::N5 => "N5",
            StandardNilpotent::SiegelSym(_) => "SiegelSym",
        }
    }

    pub fn matrix(&self) -> RatMatrix {
        let z = |entries: &[(usize, usize, i64)]| {
            let mut m = RatMatrix::zeros(4, 4);
            for &(i, j, v) in entries {
                m[(i, j)] = rat(v);
            }
            m
        };
        match self {
            StandardNilpotent::Zero => RatMatrix::zeros(4, 4),
            StandardNilpotent::N1 => z(&[(1, 2, 1)]),
            StandardNilpotent::N2 => z(&[(0, 3, 1)]),
            StandardNilpotent::N3 => z(&[(0, 3, 1), (1, 2, 1)]),
            StandardNilpotent::N4 => z(&[(0, 1, 1), (2, 3, -1)]),
            StandardNilpotent::N5 => z(&[(0, 1, 1), (1, 2, 1), (2, 3, -1)]),
            StandardNilpotent::SiegelSym(s) => {
                let b = s.b_block();
                let mut m = RatMatrix::zeros(4, 4);
                for i in 0..2 {
                    for j in 0..2 {
                        m[(i, j + 2)] = b[(i, j)].clone();
                    }
                }
                m
            }
        }
    }

    pub fn element(&self) -> Result<Sp4Element, Sp4Error> {
        Sp4Element::new(self.matrix())
    }

    /// The spanning sets exhibited for `ker(ad N)` in the reference
    /// computation, for N1…N5.
    pub fn exhibited_kernel(&self) -> Option<Vec<Sp4Element>> {
        use Root::*;
        let r = |root: Root| root.vector();
        let h1 = BasisVector::H1.element();
        let h2 = BasisVector::H2.element();
        Some(match self {
            StandardNilpotent::N1 => vec![
                h1,
                r(TwoE1),
                r(E1PlusE2),
                r(TwoE2),
                r(MinusE1PlusE2),
                r(MinusTwoE1),
            ],
            StandardNilpotent::N2 => vec![
                h2,
                r(TwoE1),
                r(E1PlusE2),
                r(TwoE2),
                r(MinusTwoE2),
                r(E1MinusE2),
            ],
            StandardNilpotent::N3 => vec![
                r(TwoE1),
                r(E1PlusE2),
                r(TwoE2),
                r(E1MinusE2).sub(&r(MinusE1PlusE2)),
            ],
            StandardNilpotent::N4 => vec![
                h1.add(&h2),
                r(MinusTwoE2),
                r(E1MinusE2),
                r(TwoE1),
            ],
            StandardNilpotent::N5 => vec![r(TwoE1), r(TwoE2).add(&r(E1MinusE2))],
            StandardNilpotent::Zero | StandardNilpotent::SiegelSym(_) => return None,
        })
    }
}

/// Matrix of `ad(x)` in [`BASIS`] coordinates: column `j` holds the
/// coordinates of `[x, basis_j]`.
pub fn ad_matrix(x: &Sp4Element) -> RatMatrix {
    let columns: Vec<Vec<Rational>> = BASIS
        .iter()
        .map(|b| bracket(x, &b.element()).coordinates())
        .collect();
    RatMatrix::from_columns(DIM, &columns).expect("10 coordinates per column")
}

pub fn ad_in_basis(n: &StandardNilpotent) -> Result<RatMatrix, Sp4Error> {
    Ok(ad_matrix(&n.element()?))
}

/// A basis of `ker(ad n)`. For N1…N5 the exhibited generators are returned
/// when they span the computed kernel; otherwise (and for the Siegel family)
/// the reduced echelon basis is returned.
pub fn kernel_of_ad(n: &StandardNilpotent) -> Result<Vec<Sp4Element>, Sp4Error> {
    let ad = ad_in_basis(n)?;
    let kernel = qlinalg::kernel_basis(&ad);
    if let Some(exhibited) = n.exhibited_kernel() {
        let coords: Vec<Vec<Rational>> = exhibited.iter().map(Sp4Element::coordinates).collect();
        if qlinalg::same_row_space(&kernel, &coords).unwrap_or(false) {
            return Ok(exhibited);
        }
    }
    Ok(kernel
        .iter()
        .map(|v| Sp4Element::from_coordinates(v))
        .collect())
}

/// The matrix `A₀ = [[0,1],[1,0]]·S·diag(-1, 1)`.
pub fn a0_matrix(s: &RatMatrix) -> Result<RatMatrix, Sp4Error> {
    let form = SymmetricForm::new(s.clone())?;
    let flip = RatMatrix::diagonal(&[rat(-1), rat(1)]);
    Ok(&(&swap2() * form.matrix()) * &flip)
}

/// `A' = -[[0,1],[1,0]]·ᵗA·[[0,1],[1,0]]`, the lower block that makes
/// `diag(A, A')` an element of sp(4).
pub fn lower_levi_block(a: &RatMatrix) -> RatMatrix {
    let k = swap2();
    -&(&(&k * &a.transpose()) * &k)
}

/// Whether `A₀·B = -B·[[0,1],[1,0]]·ᵗA₀·[[0,1],[1,0]]`.
pub fn a0_relation_holds(a0: &RatMatrix, b: &RatMatrix) -> bool {
    a0 * b == b * &lower_levi_block(a0)
}

/// The element `diag(A₀, A₀')` of sp(4) spanning the Levi part of the kernel
/// of the Siegel nilpotent.
pub fn a0_line_element(s: &SymmetricForm) -> Sp4Element {
    let a0 = a0_matrix(s.matrix()).expect("validated form");
    let a0p = lower_levi_block(&a0);
    let mut m = RatMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            m[(i, j)] = a0[(i, j)].clone();
            m[(i + 2, j + 2)] = a0p[(i, j)].clone();
        }
    }
    Sp4Element::new(m).expect("diag(A, A') lies in sp(4)")
}

/// `⟨α, h⟩` for the torus generators: `(⟨α,h1⟩, ⟨α,h2⟩) = (n1, n2)`.
pub fn torus_pairing(root: Root) -> (Rational, Rational) {
    let (n1, n2) = root.coefficients();
    (rat(n1), rat(n2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qlinalg::{rank, same_row_space};

    #[test]
    fn basis_lies_in_sp4_and_is_independent() {
        let b = basis();
        for x in &b {
            assert!(is_in_sp4(x.matrix()));
        }
        let coords: Vec<_> = b.iter().map(Sp4Element::coordinates).collect();
        assert_eq!(qlinalg::span_dimension(&coords).unwrap(), 10);
        for x in &b {
            for y in &b {
                assert!(is_in_sp4(bracket(x, y).matrix()));
            }
        }
    }

    #[test]
    fn coordinates_round_trip() {
        for (i, b) in basis().iter().enumerate() {
            let c = b.coordinates();
            for (j, v) in c.iter().enumerate() {
                assert_eq!(v, &rat((i == j) as i64));
            }
            assert_eq!(&Sp4Element::from_coordinates(&c), b);
        }
    }

    #[test]
    fn bracket_examples() {
        let x = Root::E1PlusE2.vector();
        assert!(bracket(&x, &x).is_zero());
        let h1 = BasisVector::H1.element();
        let l = Root::TwoE1.vector();
        assert_eq!(bracket(&h1, &l), l.scale(&rat(2)));
    }

    #[test]
    fn bracket_of_opposite_short_roots() {
        // direct product: E12 - E43 times E21 - E34, minus the reverse
        let x = Root::E1MinusE2.vector();
        let y = Root::MinusE1PlusE2.vector();
        let xy = x.matrix() * y.matrix();
        let yx = y.matrix() * x.matrix();
        let expected = &xy - &yx;
        assert_eq!(expected, RatMatrix::diagonal(&[rat(1), rat(-1), rat(1), rat(-1)]));
        let h = BasisVector::H1.element().sub(&BasisVector::H2.element());
        assert_eq!(bracket(&x, &y), h);
    }

    #[test]
    fn root_vectors_are_weight_vectors() {
        let h1 = BasisVector::H1.element();
        let h2 = BasisVector::H2.element();
        for root in Root::ALL {
            let (p1, p2) = torus_pairing(root);
            let l = root.vector();
            assert_eq!(bracket(&h1, &l), l.scale(&p1), "{}", root.name());
            assert_eq!(bracket(&h2, &l), l.scale(&p2), "{}", root.name());
        }
    }

    #[test]
    fn kernel_dimensions() {
        let cases = [
            (StandardNilpotent::Zero, 10),
            (StandardNilpotent::N1, 6),
            (StandardNilpotent::N2, 6),
            (StandardNilpotent::N3, 4),
            (StandardNilpotent::N4, 4),
            (StandardNilpotent::N5, 2),
        ];
        for (n, dim) in cases {
            let ad = ad_in_basis(&n).unwrap();
            assert_eq!(rank(&ad), 10 - dim, "{}", n.tag());
            assert_eq!(kernel_of_ad(&n).unwrap().len(), dim, "{}", n.tag());
        }
    }

    #[test]
    fn exhibited_kernels_match_computed() {
        for n in [
            StandardNilpotent::N1,
            StandardNilpotent::N2,
            StandardNilpotent::N3,
            StandardNilpotent::N4,
            StandardNilpotent::N5,
        ] {
            let computed = qlinalg::kernel_basis(&ad_in_basis(&n).unwrap());
            let shown: Vec<_> = n
                .exhibited_kernel()
                .unwrap()
                .iter()
                .map(Sp4Element::coordinates)
                .collect();
            assert!(same_row_space(&computed, &shown).unwrap(), "{}", n.tag());
        }
    }

    #[test]
    fn nilpotents_are_nilpotent() {
        for n in [
            StandardNilpotent::N1,
            StandardNilpotent::N2,
            StandardNilpotent::N3,
            StandardNilpotent::N4,
            StandardNilpotent::N5,
            StandardNilpotent::SiegelSym(SymmetricForm::identity()),
        ] {
            let m = n.matrix();
            let m4 = &(&m * &m) * &(&m * &m);
            assert!(m4.is_zero());
            assert!(n.element().is_ok());
        }
    }

    #[test]
    fn a0_examples() {
        let a0 = a0_matrix(&RatMatrix::identity(2)).unwrap();
        assert_eq!(a0, RatMatrix::from_i64(&[[0, 1], [-1, 0]]));
        let s = RatMatrix::from_i64(&[[1, 0], [0, 2]]);
        let a0 = a0_matrix(&s).unwrap();
        assert_eq!(a0, RatMatrix::from_i64(&[[0, 2], [-1, 0]]));
        let b = &swap2() * &s;
        // hand expansion of both sides of the relation
        let lhs = &a0 * &b;
        let rhs = &(&(&(-&b) * &swap2()) * &a0.transpose()) * &swap2();
        assert_eq!(lhs, rhs);
        assert!(a0_relation_holds(&a0, &b));
    }

    #[test]
    fn a0_rejects_bad_forms() {
        assert_eq!(
            a0_matrix(&RatMatrix::from_i64(&[[1, 2], [3, 4]])),
            Err(Sp4Error::NotSymmetric)
        );
        assert_eq!(
            a0_matrix(&RatMatrix::from_i64(&[[1, 1], [1, 1]])),
            Err(Sp4Error::Singular)
        );
    }

    #[test]
    fn siegel_kernel_structure_identity_form() {
        let s = SymmetricForm::identity();
        let n = StandardNilpotent::SiegelSym(s.clone());
        let k = kernel_of_ad(&n).unwrap();
        assert_eq!(k.len(), 4);
        assert_eq!(rank(&ad_in_basis(&n).unwrap()), 6);
        let expected: Vec<_> = [
            Root::TwoE1.vector(),
            Root::E1PlusE2.vector(),
            Root::TwoE2.vector(),
            a0_line_element(&s),
        ]
        .iter()
        .map(Sp4Element::coordinates)
        .collect();
        let got: Vec<_> = k.iter().map(Sp4Element::coordinates).collect();
        assert!(same_row_space(&got, &expected).unwrap());
    }

    #[test]
    fn rejects_non_sp4_matrix() {
        assert_eq!(
            Sp4Element::new(RatMatrix::identity(4)),
            Err(Sp4Error::NotInSp4)
        );
        assert!(matches!(
            Sp4Element::new(RatMatrix::identity(3)),
            Err(Sp4Error::NotFourByFour { .. })
        ));
    }
}
