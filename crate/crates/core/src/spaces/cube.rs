use serde::Serialize;

use crate::error::{invalid, unsupported, Result};
use crate::spaces::SpaceExpr;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Variance {
    Covariant,
    /// Maps go from larger subsets to smaller ones.
    Contravariant,
}

/// A cube of spaces indexed by the subsets of a finite set of labels.
///
/// Vertices are stored by bitmask: bit `i` set means `elements[i]` is in
/// the subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CubeOfSpaces {
    elements: Vec<usize>,
    vertices: Vec<SpaceExpr>,
    variance: Variance,
}

impl CubeOfSpaces {
    pub fn new(elements: Vec<usize>, vertices: Vec<SpaceExpr>, variance: Variance) -> Result<Self> {
        if elements.len() >= usize::BITS as usize - 1 {
            return Err(invalid("cube dimension too large"));
        }
        let expected = 1usize << elements.len();
        if vertices.len() != expected {
            return Err(invalid(format!(
                "a {}-cube needs {expected} vertices, got {}",
                elements.len(),
                vertices.len()
            )));
        }
        Ok(CubeOfSpaces {
            elements,
            vertices,
            variance,
        })
    }

    pub fn dimension(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn variance(&self) -> Variance {
        self.variance
    }

    /// Vertex at the subset encoded by `mask`.
    pub fn vertex(&self, mask: usize) -> &SpaceExpr {
        &self.vertices[mask]
    }

    /// Labels in the subset encoded by `mask`, ascending.
    pub fn subset(&self, mask: usize) -> Vec<usize> {
        self.elements
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect()
    }

    /// `(subset, vertex)` pairs in mask order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<usize>, &SpaceExpr)> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .map(move |(mask, v)| (self.subset(mask), v))
    }
}

/// The contravariant `(k-1)`-cube `R ↦ ΣY ∨ (R_+ ∧ S^{n-1})` over subsets
/// `R ⊆ {2..k}`, whose total homotopy fiber is the fiber of the classifying
/// fibration of the `k`-th layer when `N ≃ ΣY`.
///
/// Each vertex is an unnormalized wedge whose first summand is `ΣY` and
/// whose remaining summands are one `S^{n-1}` per element of `R`, in
/// increasing order.
pub fn build_layer_cube(k: usize, n: u32, y: &SpaceExpr) -> Result<CubeOfSpaces> {
    if k < 2 {
        return Err(invalid(format!("layer cubes need k >= 2, got {k}")));
    }
    if n < 4 {
        return Err(unsupported(format!("layer cubes need n >= 4, got {n}")));
    }
    y.validate()?;
    if !y.is_connected() {
        return Err(invalid(format!("Y = {y} is not connected")));
    }
    let elements: Vec<usize> = (2..=k).collect();
    let vertices = (0..1usize << (k - 1))
        .map(|mask| {
            let mut summands = vec![SpaceExpr::susp(1, y.clone())];
            summands.extend(
                (0..k - 1)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|_| SpaceExpr::sphere(n - 1)),
            );
            SpaceExpr::Wedge(summands)
        })
        .collect();
    CubeOfSpaces::new(elements, vertices, Variance::Contravariant)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ext::ExtInt;

    #[test]
    fn one_cube_over_a_point() {
        let cube = build_layer_cube(2, 5, &SpaceExpr::Point).unwrap();
        assert_eq!(cube.dimension(), 1);
        assert_eq!(cube.vertex(0).normalize(), SpaceExpr::Point);
        assert_eq!(cube.vertex(1).normalize(), SpaceExpr::sphere(4));
        assert_eq!(cube.variance(), Variance::Contravariant);
    }

    #[test]
    fn two_cube_over_a_sphere() {
        let cube = build_layer_cube(3, 4, &SpaceExpr::sphere(2)).unwrap();
        let vs: Vec<(Vec<usize>, String)> = cube.iter().map(|(r, v)| (r, v.normalize().to_string())).collect();
        assert_eq!(
            vs,
            [
                (vec![], "S^3".to_string()),
                (vec![2], "S^3 ∨ S^3".to_string()),
                (vec![3], "S^3 ∨ S^3".to_string()),
                (vec![2, 3], "S^3 ∨ S^3 ∨ S^3".to_string()),
            ]
        );
    }

    #[test]
    fn generic_target() {
        let y = SpaceExpr::generic("Y", ExtInt::Finite(0)).unwrap();
        let cube = build_layer_cube(2, 4, &y).unwrap();
        assert_eq!(
            cube.vertex(1),
            &SpaceExpr::Wedge(vec![SpaceExpr::susp(1, y), SpaceExpr::sphere(3)])
        );
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(build_layer_cube(1, 5, &SpaceExpr::Point).is_err());
        assert!(build_layer_cube(2, 5, &SpaceExpr::sphere(0)).is_err());
        assert!(matches!(
            build_layer_cube(2, 3, &SpaceExpr::Point),
            Err(crate::Error::UnsupportedRange(_))
        ));
    }
}
