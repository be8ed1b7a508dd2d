//! Seeded deterministic generators: rational points, polytopes, simplices,
//! unimodular maps and cutting hyperplanes.

use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::geom::{Hyperplane, LinearMap, Polytope, Vector};
use crate::scalar::{Rational, Scalar};

/// Stable 64-bit mix for per-trial sub-seeds.
pub fn sub_seed(seed: u64, trial: u64) -> u64 {
    let mut z = seed ^ trial.wrapping_mul(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[derive(Clone, Copy, Debug)]
pub struct GenConfig {
    pub max_vertices: usize,
    pub max_coord: i64,
    pub max_den: u64,
    pub max_shears: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_vertices: 12,
            max_coord: 4,
            max_den: 8,
            max_shears: 6,
        }
    }
}

/// Whether generated polytopes must contain the origin.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OriginPolicy {
    Free,
    Contain,
}

/// Deterministic generator: one seed, one stream.
pub struct Generator<S: Scalar> {
    rng: ChaCha8Rng,
    n: usize,
    cfg: GenConfig,
    _marker: std::marker::PhantomData<S>,
}

impl<S: Scalar> Generator<S> {
    pub fn new(seed: u64, n: usize) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
            n,
            cfg: GenConfig::default(),
            _marker: std::marker::PhantomData,
        }
    }

    pub fn for_trial(seed: u64, trial: u64, n: usize) -> Self {
        Self::new(sub_seed(seed, trial), n)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.rng.gen_range(-self.cfg.max_coord..=self.cfg.max_coord);
        let den = self.rng.gen_range(1..=self.cfg.max_den) as i64;
        Rational::new(num.into(), den.into())
    }

    /// Strictly positive rational with bounded magnitude.
    pub fn positive_rational(&mut self) -> Rational {
        let num = self.rng.gen_range(1..=self.cfg.max_coord.max(1));
        let den = self.rng.gen_range(1..=self.cfg.max_den) as i64;
        Rational::new(num.into(), den.into())
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        let q = self.positive_rational();
        if self.rng.gen_bool(0.5) {
            -q
        } else {
            q
        }
    }

    /// Rational strictly between zero and one.
    pub fn unit_interval_rational(&mut self) -> Rational {
        let den = self.rng.gen_range(2..=self.cfg.max_den) as i64;
        let num = self.rng.gen_range(1..den);
        Rational::new(num.into(), den.into())
    }

    /// Random field element; over the quadratic extension a sqrt(2)
    /// component is mixed in half the time.
    pub fn scalar(&mut self) -> S {
        let a = S::from_rational(self.rational());
        match S::sqrt2() {
            Some(r2) if self.rng.gen_bool(0.5) => {
                let b = Rational::new(
                    self.rng.gen_range(-2..=2i64).into(),
                    (self.rng.gen_range(1..=4u64) as i64).into(),
                );
                a + r2 * S::from_rational(b)
            }
            _ => a,
        }
    }

    pub fn point(&mut self) -> Vector<S> {
        Vector::new((0..self.n).map(|_| self.scalar()).collect())
    }

    /// Nonzero direction with small integer coordinates.
    pub fn direction(&mut self) -> Vector<S> {
        loop {
            let coords: Vec<i64> = (0..self.n).map(|_| self.rng.gen_range(-3..=3)).collect();
            if coords.iter().any(|&c| c != 0) {
                return Vector::from_ints(&coords);
            }
        }
    }

    /// Random full-dimensional polytope (retries a few times on degenerate
    /// draws, then falls back to a fattened simplex).
    pub fn polytope(&mut self, origin: OriginPolicy) -> Polytope<S> {
        for _ in 0..16 {
            let p = self.polytope_any(origin);
            if p.dim() == self.n as isize {
                return p;
            }
        }
        let mut pts: Vec<Vector<S>> = (0..self.n).map(|i| Vector::unit(self.n, i)).collect();
        pts.push(Vector::zero(self.n));
        Polytope::hull(self.n, pts).expect("fallback simplex")
    }

    /// Random polytope without a dimension guarantee; degenerate draws stay
    /// in the stream on purpose.
    pub fn polytope_any(&mut self, origin: OriginPolicy) -> Polytope<S> {
        let count = self.rng.gen_range(self.n + 1..=self.cfg.max_vertices);
        let mut pts: Vec<Vector<S>> = Vec::with_capacity(count + 2);
        for _ in 0..count {
            pts.push(self.point());
        }
        if origin == OriginPolicy::Contain {
            pts.push(Vector::zero(self.n));
            // Half the time reflect one point so the origin can be interior.
            if self.rng.gen_bool(0.5) {
                let pick = self.rng.gen_range(0..count);
                let reflected = pts[pick].neg();
                pts.push(reflected);
            }
        }
        Polytope::hull(self.n, pts).expect("generated points share the ambient dimension")
    }

    /// `s T^d` with a random positive rational scale.
    pub fn scaled_standard_simplex(&mut self, d: usize) -> Polytope<S> {
        let s = S::from_rational(self.positive_rational());
        Polytope::standard_simplex(self.n, d, s).expect("valid simplex dimensions")
    }

    /// Random `d`-dimensional simplex, optionally anchored at the origin,
    /// with affinely independent rational vertices.
    pub fn lower_simplex(&mut self, d: usize, include_origin: bool) -> Polytope<S> {
        loop {
            let mut pts: Vec<Vector<S>> = Vec::with_capacity(d + 1);
            if include_origin {
                pts.push(Vector::zero(self.n));
            }
            while pts.len() < d + 1 {
                pts.push(self.point());
            }
            let p = Polytope::hull(self.n, pts).expect("dimension checked");
            if p.dim() == d as isize {
                return p;
            }
        }
    }

    /// Product of up to `max_shears` integer elementary shears: determinant
    /// exactly one.
    pub fn unimodular(&mut self) -> LinearMap<S> {
        let count = self.rng.gen_range(1..=self.cfg.max_shears);
        let mut m = LinearMap::identity(self.n);
        for _ in 0..count {
            let i = self.rng.gen_range(0..self.n);
            let mut j = self.rng.gen_range(0..self.n);
            while j == i {
                j = self.rng.gen_range(0..self.n);
            }
            let c = self.rng.gen_range(-3..=3i64);
            if c == 0 {
                continue;
            }
            let shear = LinearMap::shear(self.n, i, j, S::from_int(c)).expect("off-diagonal");
            m = shear.compose(&m);
        }
        m
    }

    /// A hyperplane that properly cuts `p` (vertices strictly on both
    /// sides), through the origin when requested. `None` after bounded
    /// retries.
    pub fn cut_hyperplane(
        &mut self,
        p: &Polytope<S>,
        through_origin: bool,
    ) -> Option<Hyperplane<S>> {
        for _ in 0..64 {
            let normal = self.direction();
            let heights: Vec<S> = p.vertices().iter().map(|v| normal.dot(v)).collect();
            let offset = if through_origin {
                S::zero()
            } else {
                let lo = heights.iter().min()?.clone();
                let hi = heights.iter().max()?.clone();
                if lo == hi {
                    continue;
                }
                // A point strictly between two distinct support values.
                let lam = S::from_rational(self.unit_interval_rational());
                lo.clone() + lam * (hi - lo)
            };
            let has_pos = heights.iter().any(|h| (h.clone() - offset.clone()).sign() > 0);
            let has_neg = heights.iter().any(|h| (h.clone() - offset.clone()).sign() < 0);
            if has_pos && has_neg {
                return Some(Hyperplane::new(normal, offset).expect("nonzero direction"));
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    #[test]
    fn same_seed_same_stream() {
        let mut a = Generator::<Rational>::new(42, 3);
        let mut b = Generator::<Rational>::new(42, 3);
        let pa = a.polytope(OriginPolicy::Contain);
        let pb = b.polytope(OriginPolicy::Contain);
        assert_eq!(pa, pb);
        assert_eq!(a.unimodular(), b.unimodular());
    }

    #[test]
    fn unimodular_maps_have_determinant_one() {
        let mut g = Generator::<Rational>::new(7, 3);
        for _ in 0..20 {
            assert!(g.unimodular().is_unimodular());
        }
    }

    #[test]
    fn origin_cuts_have_zero_offset() {
        let mut g = Generator::<Rational>::new(3, 3);
        let p = g.polytope(OriginPolicy::Contain);
        if let Some(h) = g.cut_hyperplane(&p, true) {
            assert!(h.offset.is_zero());
        }
    }

    #[test]
    fn lower_simplices_have_requested_dimension() {
        let mut g = Generator::<Rational>::new(11, 3);
        for d in 0..3 {
            let with_o = g.lower_simplex(d, true);
            assert_eq!(with_o.dim(), d as isize);
            assert!(with_o.contains_origin());
            let without = g.lower_simplex(d, false);
            assert_eq!(without.dim(), d as isize);
        }
    }
}
