//! Deformations of a tropical curve inside its combinatorial type: the cone
//! of curves of that type, its integral dual (the basic monoid), the point
//! of the cone given by a curve, and superabundance.
//!
//! Coordinates are vertex positions (vertices by sorted id, `n` each)
//! followed by edge lengths (edges by sorted id).

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::curve::TropicalCurve;
use crate::error::{Error, Result};
use crate::lattice::dd::{self, dot_q};
use crate::lattice::linalg::{integer_kernel_basis, kernel_dimension};
use crate::lattice::{IntVec, PrimitiveVec, RatMatrix};
use crate::num::{format_rational, Rational};

/// Bound on the number of coordinates for Hilbert basis enumeration.
pub const MAX_HILBERT_COORDINATES: usize = 10;
/// Bound on the sum of the side lengths of the enumeration box.
pub const MAX_HILBERT_BOX: usize = 25;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeEdge {
    pub id: String,
    pub ends: [String; 2],
    pub direction: PrimitiveVec,
    pub weight: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TypeRay {
    pub id: String,
    pub base: String,
    pub direction: PrimitiveVec,
    pub weight: i64,
}

/// A curve with positions and lengths forgotten.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CombinatorialType {
    pub ambient_dim: usize,
    /// Sorted.
    pub vertices: Vec<String>,
    /// Sorted by id.
    pub edges: Vec<TypeEdge>,
    /// Sorted by id.
    pub rays: Vec<TypeRay>,
}

impl CombinatorialType {
    pub fn valence(&self, v: &str) -> usize {
        let e = self
            .edges
            .iter()
            .map(|e| e.ends.iter().filter(|x| *x == v).count())
            .sum::<usize>();
        e + self.rays.iter().filter(|r| r.base == v).count()
    }

    pub fn genus(&self) -> usize {
        (self.edges.len() + 1).saturating_sub(self.vertices.len())
    }

    pub fn ends(&self) -> usize {
        self.rays.len()
    }

    /// `sum_v (valence(v) - 3)`, negative contributions from 2-valent
    /// vertices included.
    pub fn overvalence(&self) -> i64 {
        self.vertices.iter().map(|v| self.valence(v) as i64 - 3).sum()
    }
}

pub fn combinatorial_type(c: &TropicalCurve) -> Result<CombinatorialType> {
    c.require_valid()?;
    let mut edges = Vec::with_capacity(c.edges.len());
    for e in &c.edges {
        edges.push(TypeEdge {
            id: e.id.clone(),
            ends: e.ends.clone(),
            direction: c.edge_data(&e.id)?.direction,
            weight: e.weight,
        });
    }
    edges.sort_by(|a, b| a.id.cmp(&b.id));
    let mut rays: Vec<TypeRay> = c
        .rays
        .iter()
        .map(|r| TypeRay {
            id: r.id.clone(),
            base: r.base.clone(),
            direction: r.direction.clone(),
            weight: r.weight,
        })
        .collect();
    rays.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(CombinatorialType {
        ambient_dim: c.ambient_dim,
        vertices: c.vertex_ids_sorted(),
        edges,
        rays,
    })
}

/// `{ x : A x = 0, lengths >= 0 }` for a combinatorial type.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationCone {
    pub ambient_dim: usize,
    /// Coordinate names: `"<vertex>[i]"` for positions, `"<edge>"` for lengths.
    pub coordinates: Vec<String>,
    /// `n` rows per bounded edge: `pos(w) - pos(u) - l * d = 0`.
    pub equations: Vec<IntVec>,
    /// Index of the first length coordinate.
    pub first_length: usize,
}

impl DeformationCone {
    pub fn num_coordinates(&self) -> usize {
        self.coordinates.len()
    }

    pub fn length_coordinates(&self) -> std::ops::Range<usize> {
        self.first_length..self.coordinates.len()
    }

    pub fn matrix(&self) -> RatMatrix {
        RatMatrix::new(
            self.coordinates.len(),
            self.equations.iter().map(|r| r.to_rat().0).collect(),
        )
    }

    /// Dimension of the solution space of the equations; this is the cone
    /// dimension since every type realized by a curve has a point with all
    /// lengths positive.
    pub fn dimension(&self) -> usize {
        kernel_dimension(&self.matrix())
    }

    /// Indices of the equations violated by `x`.
    pub fn residual(&self, x: &[Rational]) -> Vec<usize> {
        self.equations
            .iter()
            .enumerate()
            .filter(|(_, row)| !dot_q(&row.0, x).is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.len() == self.coordinates.len()
            && self.residual(x).is_empty()
            && self.length_coordinates().all(|i| !x[i].is_negative())
    }

    fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        self.equations.iter().map(|r| r.0.clone()).collect()
    }
}

pub fn deformation_cone(t: &CombinatorialType) -> DeformationCone {
    let n = t.ambient_dim;
    let index: BTreeMap<&str, usize> = t.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let first_length = n * t.vertices.len();
    let total = first_length + t.edges.len();

    let mut coordinates = Vec::with_capacity(total);
    for v in &t.vertices {
        for i in 0..n {
            coordinates.push(format!("{v}[{i}]"));
        }
    }
    coordinates.extend(t.edges.iter().map(|e| e.id.clone()));

    let mut equations = Vec::with_capacity(n * t.edges.len());
    for (k, e) in t.edges.iter().enumerate() {
        let u = index[e.ends[0].as_str()];
        let w = index[e.ends[1].as_str()];
        for i in 0..n {
            let mut row = vec![BigInt::zero(); total];
            row[w * n + i] += 1;
            row[u * n + i] -= 1;
            row[first_length + k] = -e.direction.coords()[i].clone();
            equations.push(IntVec(row));
        }
    }
    DeformationCone {
        ambient_dim: n,
        coordinates,
        equations,
        first_length,
    }
}

/// The coordinates `(positions, lengths)` of `c` in the cone of its type.
pub fn point_of_curve(c: &TropicalCurve) -> Result<Vec<Rational>> {
    let t = combinatorial_type(c)?;
    let cone = deformation_cone(&t);
    let mut x = Vec::with_capacity(cone.num_coordinates());
    for v in &t.vertices {
        x.extend(c.position(v)?.coords().iter().cloned());
    }
    for e in &t.edges {
        x.extend([c.edge_data(&e.id)?.length]);
    }
    check_point(&cone, &x)?;
    Ok(x)
}

/// Errors with `TypeMismatch` unless `x` solves the equations with all
/// lengths positive.
pub fn check_point(cone: &DeformationCone, x: &[Rational]) -> Result<()> {
    if x.len() != cone.num_coordinates() {
        return Err(Error::TypeMismatch(format!(
            "{} coordinates, expected {}",
            x.len(),
            cone.num_coordinates()
        )));
    }
    let bad = cone.residual(x);
    if !bad.is_empty() {
        return Err(Error::TypeMismatch(format!("equations {bad:?} do not vanish")));
    }
    if let Some(i) = cone.length_coordinates().find(|&i| !x[i].is_positive()) {
        return Err(Error::TypeMismatch(format!(
            "length of {} is {}",
            cone.coordinates[i],
            format_rational(&x[i])
        )));
    }
    Ok(())
}

/// `ends + (n - 3)(1 - g) - sum_v (valence(v) - 3)`.
pub fn expected_dimension(t: &CombinatorialType, genus: usize, ends: usize) -> i64 {
    let n = t.ambient_dim as i64;
    ends as i64 + (n - 3) * (1 - genus as i64) - t.overvalence()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Superabundance {
    pub dimension: usize,
    pub expected: i64,
    pub excess: i64,
    pub superabundant: bool,
}

pub fn is_superabundant(c: &TropicalCurve) -> Result<Superabundance> {
    let t = combinatorial_type(c)?;
    let dimension = deformation_cone(&t).dimension();
    let expected = expected_dimension(&t, t.genus(), t.ends());
    let excess = dimension as i64 - expected;
    Ok(Superabundance {
        dimension,
        expected,
        excess,
        superabundant: excess > 0,
    })
}

/// Report of the `defcone` command.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefconeReport {
    pub dimension: usize,
    pub expected: i64,
    pub excess: i64,
    pub equations: Vec<IntVec>,
    pub coordinates: Vec<String>,
}

pub fn defcone_report(c: &TropicalCurve) -> Result<DefconeReport> {
    let t = combinatorial_type(c)?;
    let cone = deformation_cone(&t);
    point_of_curve(c)?;
    let s = is_superabundant(c)?;
    Ok(DefconeReport {
        dimension: s.dimension,
        expected: s.expected,
        excess: s.excess,
        equations: cone.equations,
        coordinates: cone.coordinates,
    })
}

/// `L + cone(R)` with integer generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeGenerators {
    pub lineality: Vec<IntVec>,
    pub rays: Vec<IntVec>,
}

impl From<dd::Generators> for ConeGenerators {
    fn from(g: dd::Generators) -> Self {
        ConeGenerators {
            lineality: g.lineality.into_iter().map(IntVec).collect(),
            rays: g.rays.into_iter().map(IntVec).collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum HilbertBasis {
    NotRequested,
    /// Elements are written in the dual of `lattice_basis`: `h` pairs with
    /// the point `sum_i z_i b_i` as `h . z`.
    Computed {
        lattice_basis: Vec<IntVec>,
        elements: Vec<IntVec>,
    },
    TooLarge {
        reason: String,
    },
}

/// The dual of a cone `{ x : A x = 0, x_i >= 0 (i in nonneg) }`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicMonoidView {
    /// The cone itself, in ambient coordinates.
    pub cone: ConeGenerators,
    /// Its dual cone, in ambient coordinates.
    pub dual_cone: ConeGenerators,
    pub hilbert: HilbertBasis,
}

impl BasicMonoidView {
    pub fn hilbert_basis(&self) -> Result<&[IntVec]> {
        match &self.hilbert {
            HilbertBasis::Computed { elements, .. } => Ok(elements),
            HilbertBasis::TooLarge { reason } => Err(Error::TooLargeForHilbert(reason.clone())),
            HilbertBasis::NotRequested => Err(Error::TooLargeForHilbert("not requested".into())),
        }
    }
}

pub fn basic_monoid(t: &CombinatorialType, hilbert: bool) -> BasicMonoidView {
    let cone = deformation_cone(t);
    let nonneg: Vec<usize> = cone.length_coordinates().collect();
    dual_monoid(&cone.integer_rows(), &nonneg, cone.num_coordinates(), hilbert)
}

fn unit(n: usize, i: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(); n];
    v[i] = 1.into();
    v
}

fn neg(v: &[BigInt]) -> Vec<BigInt> {
    v.iter().map(|x| -x).collect()
}

/// Dual cone and (optionally) Hilbert basis of the integral dual of
/// `{ x in R^n : A x = 0, x_i >= 0 for i in nonneg }`.
///
/// The Hilbert basis is intrinsic: the integral points of the cone form a
/// monoid in the lattice `ker A ∩ Z^n`, and the basis is taken in the dual
/// of that lattice.
pub fn dual_monoid(equations: &[Vec<BigInt>], nonneg: &[usize], n: usize, hilbert: bool) -> BasicMonoidView {
    let mut ineq: Vec<Vec<BigInt>> = Vec::new();
    for row in equations {
        ineq.push(row.clone());
        ineq.push(neg(row));
    }
    ineq.extend(nonneg.iter().map(|&i| unit(n, i)));
    let primal = dd::cone_from_inequalities(&ineq, n);

    let mut gens: Vec<Vec<BigInt>> = primal.rays.clone();
    for l in &primal.lineality {
        gens.push(l.clone());
        gens.push(neg(l));
    }
    let dual = dd::cone_from_inequalities(&gens, n);

    let hilbert = if !hilbert {
        HilbertBasis::NotRequested
    } else if n > MAX_HILBERT_COORDINATES {
        HilbertBasis::TooLarge {
            reason: format!("{n} coordinates, at most {MAX_HILBERT_COORDINATES} supported"),
        }
    } else {
        intrinsic_hilbert_basis(equations, nonneg, n)
    };

    BasicMonoidView {
        cone: primal.into(),
        dual_cone: dual.into(),
        hilbert,
    }
}

fn intrinsic_hilbert_basis(equations: &[Vec<BigInt>], nonneg: &[usize], n: usize) -> HilbertBasis {
    // Columns of the lattice basis; `rows[i]` is coordinate `i` of each.
    let basis = integer_kernel_basis(equations, n);
    let d = basis.len();
    let rows: Vec<Vec<BigInt>> = nonneg
        .iter()
        .map(|&i| basis.iter().map(|b| b[i].clone()).collect())
        .collect();
    // Dual monoid = cone(rows) ∩ Z^d.
    match hilbert_basis_of(&rows, d) {
        Ok(elements) => HilbertBasis::Computed {
            lattice_basis: basis.into_iter().map(IntVec).collect(),
            elements: elements.into_iter().map(IntVec).collect(),
        },
        Err(reason) => HilbertBasis::TooLarge { reason },
    }
}

/// Hilbert basis of `cone(generators) ∩ Z^d` for a pointed cone, by
/// enumerating the lattice points of the zonotope spanned by the
/// generators and keeping the irreducible ones.
pub fn hilbert_basis_of(generators: &[Vec<BigInt>], d: usize) -> Result<Vec<Vec<BigInt>>, String> {
    let gens: Vec<Vec<BigInt>> = generators
        .iter()
        .filter(|g| g.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    if gens.is_empty() {
        return Ok(Vec::new());
    }
    let h = dd::facets_of(&gens, d);
    let mut lo = vec![BigInt::zero(); d];
    let mut hi = vec![BigInt::zero(); d];
    for g in &gens {
        for j in 0..d {
            if g[j].is_negative() {
                lo[j] += &g[j];
            } else {
                hi[j] += &g[j];
            }
        }
    }
    let width: BigInt = (0..d).map(|j| &hi[j] - &lo[j]).sum();
    if width > BigInt::from(MAX_HILBERT_BOX) {
        return Err(format!(
            "enumeration box has side lengths summing to {width}, at most {MAX_HILBERT_BOX} supported"
        ));
    }

    let inside = |v: &[BigInt]| {
        let q: Vec<Rational> = v.iter().cloned().map(Rational::from_integer).collect();
        h.contains(&q)
    };

    let mut candidates: Vec<Vec<BigInt>> = Vec::new();
    let mut cur = lo.clone();
    loop {
        if cur.iter().any(|x| !x.is_zero()) && inside(&cur) {
            candidates.push(cur.clone());
        }
        // odometer
        let mut j = 0;
        loop {
            if j == d {
                candidates.sort();
                return Ok(irreducible(&candidates, inside));
            }
            if cur[j] < hi[j] {
                cur[j] += 1;
                break;
            }
            cur[j] = lo[j].clone();
            j += 1;
        }
    }
}

fn irreducible(candidates: &[Vec<BigInt>], inside: impl Fn(&[BigInt]) -> bool) -> Vec<Vec<BigInt>> {
    candidates
        .iter()
        .filter(|x| {
            !candidates.iter().any(|y| {
                y != *x && {
                    let diff: Vec<BigInt> = x.iter().zip(y).map(|(a, b)| a - b).collect();
                    inside(&diff)
                }
            })
        })
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::RatVec;
    use crate::num::{int, rat_int};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn type_forgets_positions_and_lengths() {
        let t = fixtures::tripod();
        let moved = t.translated(&RatVec::from_ints(&[7, 5]));
        assert_eq!(combinatorial_type(&t).unwrap(), combinatorial_type(&moved).unwrap());

        let s = fixtures::segfan();
        let mut longer = s.clone();
        longer.vertices[1].coords = RatVec::from_ints(&[5, 0]);
        assert_eq!(combinatorial_type(&s).unwrap(), combinatorial_type(&longer).unwrap());

        assert_ne!(
            combinatorial_type(&fixtures::cycle3()).unwrap(),
            combinatorial_type(&t).unwrap()
        );
    }

    #[test]
    fn cone_dimensions() {
        let dim = |c: TropicalCurve| deformation_cone(&combinatorial_type(&c).unwrap()).dimension();
        let t = deformation_cone(&combinatorial_type(&fixtures::tripod()).unwrap());
        assert_eq!((t.num_coordinates(), t.equations.len()), (2, 0));
        assert_eq!(dim(fixtures::tripod()), 2);
        assert_eq!(dim(fixtures::cycle3()), 3);
        assert_eq!(dim(fixtures::speyer3()), 4);
        let s = deformation_cone(&combinatorial_type(&fixtures::speyer3()).unwrap());
        assert_eq!((s.equations.len(), s.num_coordinates()), (9, 12));
    }

    #[test]
    fn points_of_fixture_curves() {
        let x = point_of_curve(&fixtures::segfan()).unwrap();
        assert_eq!(x, vec![rat_int(0), rat_int(0), rat_int(2), rat_int(0), rat_int(2)]);

        let c = fixtures::cycle3();
        let x = point_of_curve(&c).unwrap();
        assert_eq!(&x[6..], &[rat_int(1), rat_int(1), rat_int(1)]);

        let cone = deformation_cone(&combinatorial_type(&c).unwrap());
        let mut bad = x.clone();
        bad[0] += rat_int(1);
        assert!(matches!(check_point(&cone, &bad), Err(Error::TypeMismatch(_))));

        for (_, c) in fixtures::all_curves().into_iter().chain(fixtures::extra_curves()) {
            point_of_curve(&c).unwrap();
        }
    }

    #[test]
    fn expected_dimensions() {
        let v = |c: TropicalCurve| is_superabundant(&c).unwrap();
        assert_eq!(
            v(fixtures::tripod()),
            Superabundance {
                dimension: 2,
                expected: 2,
                excess: 0,
                superabundant: false
            }
        );
        assert_eq!(
            v(fixtures::cycle3()),
            Superabundance {
                dimension: 3,
                expected: 3,
                excess: 0,
                superabundant: false
            }
        );
        assert_eq!(
            v(fixtures::speyer3()),
            Superabundance {
                dimension: 4,
                expected: 3,
                excess: 1,
                superabundant: true
            }
        );
        // 2-valent vertices
        assert_eq!(v(fixtures::line()).excess, 0);
        assert_eq!(v(fixtures::segfan()).excess, 0);
    }

    #[test]
    fn dimension_is_at_least_ambient() {
        for (name, c) in fixtures::all_curves().into_iter().chain(fixtures::extra_curves()) {
            let t = combinatorial_type(&c).unwrap();
            let cone = deformation_cone(&t);
            assert!(cone.dimension() >= c.ambient_dim, "{name}");
            // translations are solutions
            for i in 0..c.ambient_dim {
                let mut x = vec![Rational::zero(); cone.num_coordinates()];
                for v in 0..t.vertices.len() {
                    x[v * c.ambient_dim + i] = rat_int(1);
                }
                assert!(cone.residual(&x).is_empty(), "{name}");
            }
        }
    }

    /// Rank of a 3x3 integer matrix from its minors.
    fn rank3(m: [[i64; 3]; 3]) -> usize {
        let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if det != 0 {
            return 3;
        }
        let mut minors = Vec::new();
        for r in [(0, 1), (0, 2), (1, 2)] {
            for c in [(0, 1), (0, 2), (1, 2)] {
                minors.push(m[r.0][c.0] * m[r.1][c.1] - m[r.0][c.1] * m[r.1][c.0]);
            }
        }
        if minors.iter().any(|&x| x != 0) {
            2
        } else if m.iter().flatten().any(|&x| x != 0) {
            1
        } else {
            0
        }
    }

    #[test]
    fn speyer3_excess_is_cycle_corank() {
        let c = fixtures::speyer3();
        // columns: primitive directions of e01, e12, e20
        let d: Vec<Vec<i64>> = ["e01", "e12", "e20"]
            .iter()
            .map(|e| {
                let p = c.edge_data(e).unwrap().direction;
                p.coords().iter().map(|x| i64::try_from(x).unwrap()).collect()
            })
            .collect();
        let m = [
            [d[0][0], d[1][0], d[2][0]],
            [d[0][1], d[1][1], d[2][1]],
            [d[0][2], d[1][2], d[2][2]],
        ];
        let corank = 3 - rank3(m) as i64;
        // 3 closing equations, rank 2: one is trivial
        assert_eq!(corank, 1);
        assert_eq!(is_superabundant(&c).unwrap().excess, corank);
    }

    #[test]
    fn dual_monoid_examples() {
        // R>=0
        let m = dual_monoid(&[], &[0], 1, true);
        assert_eq!(m.hilbert_basis().unwrap(), &[IntVec(ints(&[1]))]);
        assert_eq!(m.dual_cone.rays, vec![IntVec(ints(&[1]))]);

        // R^2: the dual is {0}
        let m = dual_monoid(&[], &[], 2, true);
        assert!(m.hilbert_basis().unwrap().is_empty());
        assert!(m.dual_cone.rays.is_empty() && m.dual_cone.lineality.is_empty());

        // a = b >= 0: one lattice generator (1,1); the dual monoid is N.
        let m = dual_monoid(&[ints(&[1, -1])], &[0, 1], 2, true);
        assert_eq!(m.cone.rays, vec![IntVec(ints(&[1, 1]))]);
        assert_eq!(m.hilbert_basis().unwrap(), &[IntVec(ints(&[1]))]);
        // ambient dual: half-plane a + b >= 0
        assert_eq!(m.dual_cone.rays, vec![IntVec(ints(&[1, 1]))]);
        assert_eq!(m.dual_cone.lineality.len(), 1);
    }

    /// Brute force: irreducible lattice points of `cone(gens)` in a box,
    /// using the LP-free test "x = y + z with y, z in the cone".
    fn brute_hilbert(gens: &[[i64; 2]], bound: i64) -> Vec<Vec<BigInt>> {
        // membership in a 2d pointed cone: between the two extreme rays
        let cross = |a: [i64; 2], b: [i64; 2]| a[0] * b[1] - a[1] * b[0];
        let mut ext = (gens[0], gens[0]);
        for &g in gens {
            if cross(ext.0, g) < 0 {
                ext.0 = g;
            }
            if cross(ext.1, g) > 0 {
                ext.1 = g;
            }
        }
        let inside = |p: [i64; 2]| cross(ext.0, p) >= 0 && cross(p, ext.1) >= 0;
        let pts: Vec<[i64; 2]> = (-bound..=bound)
            .flat_map(|a| (-bound..=bound).map(move |b| [a, b]))
            .filter(|&p| p != [0, 0] && inside(p))
            .collect();
        let mut out: Vec<Vec<BigInt>> = pts
            .iter()
            .filter(|&&x| !pts.iter().any(|&y| y != x && inside([x[0] - y[0], x[1] - y[1]])))
            .map(|x| ints(x))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn hilbert_basis_matches_brute_force() {
        for gens in [
            vec![[1, 0], [1, 2]],
            vec![[1, 0], [1, 3]],
            vec![[2, -1], [-1, 2]],
            vec![[1, 0], [0, 1]],
            vec![[3, 1], [1, 3], [2, 2]],
            vec![[1, -2], [1, 2]],
        ] {
            let g: Vec<Vec<BigInt>> = gens.iter().map(|x| ints(x)).collect();
            let hb = hilbert_basis_of(&g, 2).unwrap();
            assert_eq!(hb, brute_hilbert(&gens, 6), "{gens:?}");
        }
    }

    #[test]
    fn hilbert_elements_pair_nonnegatively() {
        for (name, c) in [
            ("segfan", fixtures::segfan()),
            ("cycle3", fixtures::cycle3()),
            ("tripod", fixtures::tripod()),
            ("diag", fixtures::diag()),
        ] {
            let t = combinatorial_type(&c).unwrap();
            let view = basic_monoid(&t, true);
            let HilbertBasis::Computed {
                lattice_basis,
                elements,
            } = &view.hilbert
            else {
                panic!("{name}: {:?}", view.hilbert);
            };
            let cone = deformation_cone(&t);
            // intrinsic cone: z with every length coordinate of B z >= 0
            let ineq: Vec<Vec<BigInt>> = cone
                .length_coordinates()
                .map(|i| lattice_basis.iter().map(|b| b.0[i].clone()).collect())
                .collect();
            let gens = dd::cone_from_inequalities(&ineq, lattice_basis.len());
            for h in elements {
                for r in &gens.rays {
                    let p: BigInt = h.0.iter().zip(r).map(|(a, b)| a * b).sum();
                    assert!(!p.is_negative(), "{name}");
                }
                for l in &gens.lineality {
                    let p: BigInt = h.0.iter().zip(l).map(|(a, b)| a * b).sum();
                    assert!(p.is_zero(), "{name}");
                }
            }
            // the ambient dual pairs nonnegatively with the ambient cone
            for y in &view.dual_cone.rays {
                for r in &view.cone.rays {
                    let p: BigInt = y.0.iter().zip(&r.0).map(|(a, b)| a * b).sum();
                    assert!(!p.is_negative(), "{name}");
                }
            }
        }
    }

    #[test]
    fn single_length_types_have_free_rank_one_monoid() {
        let t = combinatorial_type(&fixtures::segfan()).unwrap();
        let view = basic_monoid(&t, true);
        assert_eq!(view.hilbert_basis().unwrap().len(), 1);
        let t = combinatorial_type(&fixtures::cycle3()).unwrap();
        assert_eq!(basic_monoid(&t, true).hilbert_basis().unwrap().len(), 1);
    }

    #[test]
    fn hilbert_guards() {
        let t = combinatorial_type(&fixtures::speyer3()).unwrap();
        let view = basic_monoid(&t, true);
        assert!(matches!(view.hilbert_basis(), Err(Error::TooLargeForHilbert(_))));
        // the dual cone is still there
        assert!(!view.dual_cone.rays.is_empty());

        let big = vec![ints(&[20, 1]), ints(&[1, 20])];
        assert!(hilbert_basis_of(&big, 2).is_err());
    }
}
