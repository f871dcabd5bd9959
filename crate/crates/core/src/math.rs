//! Small dense linear algebra helpers shared by the simulator and the compiler.

use std::ops::Mul;

pub use num_complex::Complex64;

/// Dense square complex matrix.
pub type Matrix = nalgebra::DMatrix<Complex64>;

pub const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[inline]
pub fn cis(angle: f64) -> Complex64 {
    Complex64::from_polar(1.0, angle)
}

/// A 2x2 complex matrix in row-major order.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2(pub [[Complex64; 2]; 2]);

/// `M = e^{i phase} RZ(phi) RY(theta) RZ(lambda)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Zyz {
    pub phase: f64,
    pub phi: f64,
    pub theta: f64,
    pub lambda: f64,
}

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2([[ONE, ZERO], [ZERO, ONE]]);
    pub const X: Mat2 = Mat2([[ZERO, ONE], [ONE, ZERO]]);

    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Mat2([[a, b], [c, d]])
    }

    pub fn rx(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Mat2::new(
            Complex64::new(c, 0.0),
            Complex64::new(0.0, -s),
            Complex64::new(0.0, -s),
            Complex64::new(c, 0.0),
        )
    }

    pub fn ry(theta: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        Mat2::new(
            Complex64::new(c, 0.0),
            Complex64::new(-s, 0.0),
            Complex64::new(s, 0.0),
            Complex64::new(c, 0.0),
        )
    }

    pub fn rz(lambda: f64) -> Self {
        Mat2::new(cis(-lambda / 2.0), ZERO, ZERO, cis(lambda / 2.0))
    }

    pub fn phase(lambda: f64) -> Self {
        Mat2::new(ONE, ZERO, ZERO, cis(lambda))
    }

    /// The coin parametrization
    /// `e^{i alpha} [[cos t/2, -e^{i lambda} sin t/2], [e^{i phi} sin t/2, e^{i(phi+lambda)} cos t/2]]`.
    pub fn coin(alpha: f64, theta: f64, phi: f64, lambda: f64) -> Self {
        let (s, c) = (theta / 2.0).sin_cos();
        let g = cis(alpha);
        Mat2::new(
            g * c,
            -g * cis(lambda) * s,
            g * cis(phi) * s,
            g * cis(phi + lambda) * c,
        )
    }

    pub fn scale(&self, k: Complex64) -> Self {
        let m = &self.0;
        Mat2::new(k * m[0][0], k * m[0][1], k * m[1][0], k * m[1][1])
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Mat2::new(
            m[0][0].conj(),
            m[1][0].conj(),
            m[0][1].conj(),
            m[1][1].conj(),
        )
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        let mut worst = 0.0f64;
        for r in 0..2 {
            for c in 0..2 {
                worst = worst.max((self.0[r][c] - other.0[r][c]).norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        (*self * self.adjoint()).max_abs_diff(&Mat2::IDENTITY) < tol
    }

    /// Euler decomposition of a unitary.
    pub fn zyz(&self) -> Zyz {
        let phase = self.det().arg() / 2.0;
        let u = self.scale(cis(-phase));
        let a = u.0[0][0];
        let b = u.0[1][0];
        let theta = 2.0 * b.norm().atan2(a.norm());
        let sum = if a.norm() > 1e-14 {
            -2.0 * a.arg()
        } else {
            0.0
        };
        let diff = if b.norm() > 1e-14 { 2.0 * b.arg() } else { 0.0 };
        Zyz {
            phase,
            phi: (sum + diff) / 2.0,
            theta,
            lambda: (sum - diff) / 2.0,
        }
    }

    /// Principal-branch square root of a unitary: `V * V == self`.
    pub fn sqrt(&self) -> Self {
        let gamma = self.det().arg() / 2.0;
        let u = self.scale(cis(-gamma));
        let a = u.0[0][0];
        let b = u.0[1][0];
        // u = cos(w) I - i sin(w) (v . sigma) with v = sin(w) n
        let (vx, vy, vz) = (-b.im, b.re, -a.im);
        let s = (vx * vx + vy * vy + vz * vz).sqrt();
        let w = s.atan2(a.re);
        let half = w / 2.0;
        let (vx, vy, vz, r) = if s > 1e-15 {
            (vx, vy, vz, half.sin() / s)
        } else {
            // u = +-I; any axis works, pick z.
            (0.0, 0.0, 1.0, half.sin())
        };
        let c = Complex64::new(half.cos(), 0.0);
        let i = Complex64::new(0.0, 1.0);
        let root = Mat2::new(
            c - i * (r * vz),
            -i * r * Complex64::new(vx, -vy),
            -i * r * Complex64::new(vx, vy),
            c + i * (r * vz),
        );
        root.scale(cis(gamma / 2.0))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        let (a, b) = (&self.0, &rhs.0);
        let mut out = [[ZERO; 2]; 2];
        for r in 0..2 {
            for c in 0..2 {
                out[r][c] = a[r][0] * b[0][c] + a[r][1] * b[1][c];
            }
        }
        Mat2(out)
    }
}

impl Zyz {
    pub fn matrix(&self) -> Mat2 {
        (Mat2::rz(self.phi) * Mat2::ry(self.theta) * Mat2::rz(self.lambda)).scale(cis(self.phase))
    }
}

/// Largest entrywise modulus of `a - b`.
pub fn max_abs_diff(a: &Matrix, b: &Matrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `max |U^dagger U - I|` entrywise.
pub fn unitarity_defect(u: &Matrix) -> f64 {
    let prod = u.adjoint() * u;
    let id = Matrix::identity(u.nrows(), u.ncols());
    max_abs_diff(&prod, &id)
}

/// Frobenius distance between `a` and `b` after removing the global phase that
/// best aligns `b` onto `a`.
pub fn phase_aligned_distance(a: &Matrix, b: &Matrix) -> f64 {
    let overlap: Complex64 = a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum();
    let align = if overlap.norm() > 0.0 {
        (overlap / overlap.norm()).conj()
    } else {
        ONE
    };
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y * align).norm_sqr())
        .sum::<f64>()
        .sqrt()
}
