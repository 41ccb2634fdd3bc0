use std::collections::HashSet;

use crate::cone::PolyhedralCone;
use crate::linalg::{orthonormal_basis, Vector};

/// A nonzero face of a polyhedral cone.
#[derive(Debug, Clone)]
pub struct FaceDescriptor {
    /// Indices into [`PolyhedralCone::halfspaces`] that are tight on the face.
    pub active_set: Vec<usize>,
    /// Orthonormal basis of the face's linear hull.
    pub span_basis: Vec<Vector>,
    /// Bit `i` set iff generator `i` lies on the face.
    pub generator_mask: u64,
}

/// Enumerates every face of `k` other than `{0}`, breadth-first from `k`
/// itself, each face appearing exactly once.
///
/// A face is identified by the generators it contains; its subfaces are
/// obtained by making one more halfspace tight. Every face is an intersection
/// of `k` with some set of tight halfspaces, so the search reaches all of them.
pub fn enumerate_faces(k: &PolyhedralCone, tol: f64) -> Vec<FaceDescriptor> {
    let gens = k.generators();
    let hs = k.halfspaces();
    debug_assert!(gens.len() <= 64);
    let tight: Vec<u64> = hs
        .iter()
        .map(|a| {
            gens.iter()
                .enumerate()
                .filter(|(_, g)| a.dot(g).abs() <= tol)
                .fold(0u64, |m, (i, _)| m | (1u64 << i))
        })
        .collect();

    let full: u64 = if gens.len() == 64 {
        u64::MAX
    } else {
        (1u64 << gens.len()) - 1
    };
    let mut seen: HashSet<u64> = HashSet::new();
    let mut queue: Vec<u64> = vec![full];
    seen.insert(full);
    let mut head = 0;
    while head < queue.len() {
        let mask = queue[head];
        head += 1;
        for &t in &tight {
            let sub = mask & t;
            if sub != mask && seen.insert(sub) {
                queue.push(sub);
            }
        }
    }

    queue
        .into_iter()
        .filter_map(|mask| {
            let members: Vec<Vector> = (0..gens.len())
                .filter(|i| mask & (1u64 << i) != 0)
                .map(|i| gens[i].clone())
                .collect();
            let span_basis = orthonormal_basis(&members, tol).ok()?;
            if span_basis.is_empty() {
                return None;
            }
            let active_set = tight
                .iter()
                .enumerate()
                .filter(|(_, &t)| t & mask == mask)
                .map(|(i, _)| i)
                .collect();
            Some(FaceDescriptor {
                active_set,
                span_basis,
                generator_mask: mask,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::ConeSpec;

    fn cone(dim: usize, gens: &[&[f64]]) -> PolyhedralCone {
        let spec = ConeSpec::new(dim, gens.iter().map(|g| g.to_vec()).collect());
        PolyhedralCone::from_spec(&spec, 1e-9).unwrap()
    }

    #[test]
    fn orthant_faces() {
        // R^3_+ has 7 nonzero faces: itself, 3 quadrants, 3 rays.
        let k = cone(3, &[&[1.0, 0.0, 0.0], &[0.0, 1.0, 0.0], &[0.0, 0.0, 1.0]]);
        let faces = enumerate_faces(&k, 1e-9);
        assert_eq!(faces.len(), 7);
        let mut dims: Vec<usize> = faces.iter().map(|f| f.span_basis.len()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 1, 1, 2, 2, 2, 3]);
    }

    #[test]
    fn halfplane_faces() {
        // A halfplane has itself and its boundary line.
        let k = cone(2, &[&[1.0, -1.0], &[-1.0, 1.0], &[-1.0, -1.0]]);
        let faces = enumerate_faces(&k, 1e-9);
        assert_eq!(faces.len(), 2);
    }

    #[test]
    fn zero_cone_has_no_faces() {
        let k = PolyhedralCone::zero(2).unwrap();
        assert!(enumerate_faces(&k, 1e-9).is_empty());
    }

    #[test]
    fn square_pyramid_faces() {
        // 4 rays + 4 two-dimensional facets + the cone itself.
        let k = cone(
            3,
            &[
                &[1.0, 1.0, 1.0],
                &[1.0, -1.0, 1.0],
                &[-1.0, 1.0, 1.0],
                &[-1.0, -1.0, 1.0],
            ],
        );
        let faces = enumerate_faces(&k, 1e-9);
        assert_eq!(faces.len(), 9);
        for f in &faces {
            for &i in &f.active_set {
                for b in &f.span_basis {
                    assert!(k.halfspaces()[i].dot(b).abs() < 1e-9);
                }
            }
        }
    }
}
