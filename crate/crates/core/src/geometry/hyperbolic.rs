//! Poincaré-disk and hyperboloid helpers.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Area of a hyperbolic triangle with the given interior angles.
pub fn hyperbolic_area(alpha: f64, beta: f64, gamma: f64) -> Result<f64> {
    let sum = alpha + beta + gamma;
    if !(alpha > 0.0 && beta > 0.0 && gamma > 0.0) || sum >= PI {
        return Err(Error::AngleSum(sum));
    }
    Ok(PI - sum)
}

/// Hyperbolic distance between two points of the open unit disk.
pub fn disk_distance(z: Complex64, w: Complex64) -> f64 {
    let num = (z - w).norm();
    let den = (Complex64::new(1.0, 0.0) - z.conj() * w).norm();
    2.0 * (num / den).min(1.0 - 1e-16).atanh()
}

/// `cosh d - 1` up to the factor 2; monotone in the distance and cheap.
pub fn disk_separation(z: Complex64, w: Complex64) -> f64 {
    (z - w).norm_sqr() / ((1.0 - z.norm_sqr()) * (1.0 - w.norm_sqr()))
}

/// Möbius map of the disk sending `a` to the origin.
pub fn to_origin(a: Complex64, z: Complex64) -> Complex64 {
    (z - a) / (Complex64::new(1.0, 0.0) - a.conj() * z)
}

/// Inverse of [`to_origin`].
pub fn from_origin(a: Complex64, z: Complex64) -> Complex64 {
    (z + a) / (Complex64::new(1.0, 0.0) + a.conj() * z)
}

/// Euclidean radius in the disk of a point at hyperbolic distance `d` from the origin.
pub fn radius_at_distance(d: f64) -> f64 {
    (d / 2.0).tanh()
}

/// Euclidean centre and radius of the hyperbolic circle about `z` of radius `r`.
pub fn euclidean_circle(z: Complex64, r: f64) -> (Complex64, f64) {
    let s = z.norm();
    if s < 1e-300 {
        return (Complex64::new(0.0, 0.0), radius_at_distance(r));
    }
    let d = 2.0 * s.atanh();
    let near = ((d - r) / 2.0).tanh();
    let far = ((d + r) / 2.0).tanh();
    (z / s * ((near + far) / 2.0), (far - near) / 2.0)
}

/// Point of the hyperboloid `-t² + x² + y² = -1`, `t > 0`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Hyperboloid(pub [f64; 3]);

impl Hyperboloid {
    pub fn from_disk(z: Complex64) -> Hyperboloid {
        let s = z.norm_sqr();
        let k = 1.0 / (1.0 - s);
        Hyperboloid([(1.0 + s) * k, 2.0 * z.re * k, 2.0 * z.im * k])
    }

    pub fn to_disk(self) -> Complex64 {
        let [t, x, y] = self.0;
        Complex64::new(x / (1.0 + t), y / (1.0 + t))
    }

    /// Normalized sum: the midpoint of two points, the centroid of three.
    pub fn centroid(points: &[Hyperboloid]) -> Hyperboloid {
        let mut s = [0.0; 3];
        for p in points {
            for (acc, x) in s.iter_mut().zip(p.0) {
                *acc += x;
            }
        }
        let norm = (-minkowski(s, s)).sqrt();
        Hyperboloid([s[0] / norm, s[1] / norm, s[2] / norm])
    }
}

fn minkowski(a: [f64; 3], b: [f64; 3]) -> f64 {
    -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Interior angle at `x` of the geodesic triangle `x y z`.
pub fn angle_at(x: Hyperboloid, y: Hyperboloid, z: Hyperboloid) -> f64 {
    let tangent = |p: Hyperboloid| {
        let k = minkowski(x.0, p.0);
        [p.0[0] + k * x.0[0], p.0[1] + k * x.0[1], p.0[2] + k * x.0[2]]
    };
    let (u, v) = (tangent(y), tangent(z));
    let c = minkowski(u, v) / (minkowski(u, u) * minkowski(v, v)).sqrt();
    c.clamp(-1.0, 1.0).acos()
}

/// Area of the geodesic triangle with the given disk vertices.
pub fn triangle_area(a: Complex64, b: Complex64, c: Complex64) -> f64 {
    let (x, y, z) = (Hyperboloid::from_disk(a), Hyperboloid::from_disk(b), Hyperboloid::from_disk(c));
    (PI - angle_at(x, y, z) - angle_at(y, z, x) - angle_at(z, x, y)).max(0.0)
}

/// Klein-model image of a disk point; geodesics become straight chords.
pub fn to_klein(z: Complex64) -> Complex64 {
    z * (2.0 / (1.0 + z.norm_sqr()))
}

/// Area density of the Poincaré metric at `z`.
pub fn disk_density(z: Complex64) -> f64 {
    4.0 / (1.0 - z.norm_sqr()).powi(2)
}

/// Circle orthogonal to the unit circle through `p` and `q`, or `None`
/// when the geodesic is a diameter.
pub fn geodesic_circle(p: Complex64, q: Complex64) -> Option<(Complex64, f64)> {
    let cross = p.re * q.im - p.im * q.re;
    if cross.abs() < 1e-12 {
        return None;
    }
    // Centre c satisfies 2 Re(c conj(p)) = |p|² + 1 and likewise for q.
    let (a1, b1, r1) = (2.0 * p.re, 2.0 * p.im, p.norm_sqr() + 1.0);
    let (a2, b2, r2) = (2.0 * q.re, 2.0 * q.im, q.norm_sqr() + 1.0);
    let det = a1 * b2 - a2 * b1;
    let c = Complex64::new((r1 * b2 - r2 * b1) / det, (a1 * r2 - a2 * r1) / det);
    Some((c, (c.norm_sqr() - 1.0).sqrt()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn distance_matches_radius_map() {
        let z = Complex64::new(radius_at_distance(1.3), 0.0);
        assert!((disk_distance(Complex64::new(0.0, 0.0), z) - 1.3).abs() < 1e-12);
    }

    #[test]
    fn mobius_round_trip_preserves_distance() {
        let a = Complex64::new(0.3, -0.2);
        let z = Complex64::new(-0.1, 0.5);
        let w = Complex64::new(0.4, 0.4);
        assert!((from_origin(a, to_origin(a, z)) - z).norm() < 1e-14);
        let d0 = disk_distance(z, w);
        let d1 = disk_distance(to_origin(a, z), to_origin(a, w));
        assert!((d0 - d1).abs() < 1e-12);
    }

    #[test]
    fn circle_image_has_the_right_extent() {
        let z = Complex64::new(0.0, 0.6);
        let (c, rho) = euclidean_circle(z, 0.8);
        let top = c + Complex64::new(0.0, rho);
        assert!((disk_distance(z, top) - 0.8).abs() < 1e-12);
    }

    #[test]
    fn area_rejects_euclidean_angles() {
        assert!(hyperbolic_area(1.0, 1.0, PI - 2.0).is_err());
        assert!((hyperbolic_area(PI / 4.0, PI / 4.0, PI / 4.0).unwrap() - PI / 4.0).abs() < 1e-15);
    }
}
