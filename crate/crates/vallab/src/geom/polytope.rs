use std::collections::BTreeSet;
use std::fmt;


use super::hull::{
    affine_rank_and_pivots, area_over_norm, extreme_indices_full, supporting_facets,
    triangulate_full, volume_full, RawFacet,
};
use super::linalg::{canonical_direction, nullspace_direction, rank_of};
use super::matrix::LinearMap;
use super::vector::Vector;
use crate::error::Error;
use crate::scalar::Scalar;

/// Affine hyperplane `{x : normal . x = offset}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyperplane<S: Scalar> {
    pub normal: Vector<S>,
    pub offset: S,
}

impl<S: Scalar> Hyperplane<S> {
    pub fn new(normal: Vector<S>, offset: S) -> Result<Self, Error> {
        if normal.is_zero() {
            return Err(Error::ZeroVector);
        }
        Ok(Hyperplane { normal, offset })
    }

    pub fn through_origin(normal: Vector<S>) -> Result<Self, Error> {
        Self::new(normal, S::zero())
    }

    /// Signed position of a point relative to the hyperplane.
    pub fn height(&self, p: &Vector<S>) -> S {
        self.normal.dot(p) - self.offset.clone()
    }
}

/// Where the origin sits relative to a polytope.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OriginStatus {
    Outside,
    Boundary,
    /// In the relative interior (for a point polytope: equal to it).
    Interior,
}

/// One facet of a polytope.
///
/// `normal` is the canonical primitive outward normal (integer entries with
/// content one over the rationals). `support` is the support value at that
/// normal, `normalized_area` is the facet area divided by the Euclidean norm
/// of `normal`, and `cone_volume` is the signed volume of the cone from the
/// origin over the facet. These satisfy
/// `cone_volume = support * normalized_area / n` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetData<S: Scalar> {
    pub normal: Vector<S>,
    pub support: S,
    pub normalized_area: S,
    pub cone_volume: S,
    pub vertex_indices: Vec<usize>,
}

impl<S: Scalar> FacetData<S> {
    /// Facets whose affine hull misses the origin are the ones with nonzero
    /// support.
    pub fn misses_origin(&self) -> bool {
        self.support.sign() != 0
    }
}

/// Convex polytope in vertex representation with cached facet data.
///
/// Vertices are exactly the extreme points, sorted for determinism. Facet
/// data is populated for affine dimension `n` (ordinary facets) and `n - 1`
/// (two opposite normals bounding the polytope inside its hyperplane); lower
/// dimensions carry no facets, so their surface measures vanish.
#[derive(Clone, PartialEq, Eq)]
pub struct Polytope<S: Scalar> {
    ambient: usize,
    vertices: Vec<Vector<S>>,
    dim: isize,
    facets: Vec<FacetData<S>>,
    origin: OriginStatus,
}

/// The two halves and the section produced by cutting with a hyperplane.
#[derive(Clone, Debug)]
pub struct CutPieces<S: Scalar> {
    pub minus: Polytope<S>,
    pub plus: Polytope<S>,
    pub slice: Polytope<S>,
}

enum Side {
    Minus,
    Plus,
}

impl<S: Scalar> Polytope<S> {
    pub fn empty(ambient: usize) -> Result<Self, Error> {
        if ambient < 2 {
            return Err(Error::AmbientTooSmall(ambient));
        }
        Ok(Polytope {
            ambient,
            vertices: Vec::new(),
            dim: -1,
            facets: Vec::new(),
            origin: OriginStatus::Outside,
        })
    }

    /// Convex hull of a point cloud: deduplicates, prunes non-extreme
    /// points and populates the facet cache.
    pub fn hull(ambient: usize, points: impl IntoIterator<Item = Vector<S>>) -> Result<Self, Error> {
        if ambient < 2 {
            return Err(Error::AmbientTooSmall(ambient));
        }
        let mut set: BTreeSet<Vector<S>> = BTreeSet::new();
        for p in points {
            if p.dim() != ambient {
                return Err(Error::DimensionMismatch {
                    expected: ambient,
                    got: p.dim(),
                });
            }
            set.insert(p);
        }
        let pts: Vec<Vector<S>> = set.into_iter().collect();
        if pts.is_empty() {
            return Self::empty(ambient);
        }
        if pts.len() == 1 {
            let origin = if pts[0].is_zero() {
                OriginStatus::Interior
            } else {
                OriginStatus::Outside
            };
            return Ok(Polytope {
                ambient,
                vertices: pts,
                dim: 0,
                facets: Vec::new(),
                origin,
            });
        }
        let (rank, pivots) = affine_rank_and_pivots(&pts);
        if rank == ambient {
            Ok(Self::build_full_dim(ambient, pts))
        } else {
            Ok(Self::build_lower_dim(ambient, pts, rank, &pivots))
        }
    }

    fn build_full_dim(ambient: usize, pts: Vec<Vector<S>>) -> Self {
        let raw = supporting_facets(&pts);
        let extreme = extreme_indices_full(&pts, &raw);
        let vertices: Vec<Vector<S>> = extreme.iter().map(|&i| pts[i].clone()).collect();
        let mut remap = vec![usize::MAX; pts.len()];
        for (new, &old) in extreme.iter().enumerate() {
            remap[old] = new;
        }
        let n_scalar = S::from_int(ambient as i64);
        let mut facets: Vec<FacetData<S>> = raw
            .iter()
            .map(|f| {
                let area = area_over_norm(&pts, &f.members, &f.normal);
                let cone = f.support.clone() * area.clone() / n_scalar.clone();
                let mut idx: Vec<usize> = f
                    .members
                    .iter()
                    .filter(|&&m| remap[m] != usize::MAX)
                    .map(|&m| remap[m])
                    .collect();
                idx.sort_unstable();
                FacetData {
                    normal: f.normal.clone(),
                    support: f.support.clone(),
                    normalized_area: area,
                    cone_volume: cone,
                    vertex_indices: idx,
                }
            })
            .collect();
        sort_facets(&mut facets);
        let origin = classify_origin_full(&facets);
        Polytope {
            ambient,
            vertices,
            dim: ambient as isize,
            facets,
            origin,
        }
    }

    fn build_lower_dim(ambient: usize, pts: Vec<Vector<S>>, rank: usize, pivots: &[usize]) -> Self {
        debug_assert!(rank >= 1 && rank < ambient);
        let proj: Vec<Vector<S>> = pts.iter().map(|p| p.select_coords(pivots)).collect();
        let (extreme, proj_facets) = if rank == 1 {
            let mut lo = 0usize;
            let mut hi = 0usize;
            for (i, p) in proj.iter().enumerate() {
                if p.get(0) < proj[lo].get(0) {
                    lo = i;
                }
                if p.get(0) > proj[hi].get(0) {
                    hi = i;
                }
            }
            (vec![lo.min(hi), lo.max(hi)], Vec::new())
        } else {
            let raw = supporting_facets(&proj);
            (extreme_indices_full(&proj, &raw), raw)
        };
        let vertices: Vec<Vector<S>> = extreme.iter().map(|&i| pts[i].clone()).collect();
        let origin = classify_origin_lower(&pts, rank, pivots, &proj, &proj_facets);

        let mut facets = Vec::new();
        if rank + 1 == ambient {
            // Two-sided facet pair inside the spanning hyperplane.
            let base = &vertices[0];
            let rows: Vec<Vec<S>> = vertices[1..]
                .iter()
                .map(|v| v.sub(base).into_coords())
                .collect();
            let normal = Vector::new(canonical_direction(
                nullspace_direction(&rows, ambient).expect("rank n-1 spans a hyperplane"),
            ));
            let support = normal.dot(base);
            let all_idx: Vec<usize> = (0..vertices.len()).collect();
            let members: Vec<usize> = all_idx.clone();
            let area = {
                let axis = normal
                    .coords()
                    .iter()
                    .position(|c| c.sign() != 0)
                    .expect("nonzero normal");
                let dropped: Vec<Vector<S>> =
                    vertices.iter().map(|v| v.drop_coord(axis)).collect();
                volume_full(&dropped) / normal.get(axis).abs()
            };
            let n_scalar = S::from_int(ambient as i64);
            let cone = support.clone() * area.clone() / n_scalar.clone();
            facets.push(FacetData {
                normal: normal.clone(),
                support: support.clone(),
                normalized_area: area.clone(),
                cone_volume: cone.clone(),
                vertex_indices: members.clone(),
            });
            facets.push(FacetData {
                normal: normal.neg(),
                support: -support,
                normalized_area: area,
                cone_volume: -cone,
                vertex_indices: members,
            });
            sort_facets(&mut facets);
        }
        Polytope {
            ambient,
            vertices,
            dim: rank as isize,
            facets,
            origin,
        }
    }

    pub fn point(v: Vector<S>) -> Result<Self, Error> {
        let ambient = v.dim();
        Self::hull(ambient, [v])
    }

    pub fn segment(a: Vector<S>, b: Vector<S>) -> Result<Self, Error> {
        let ambient = a.dim();
        Self::hull(ambient, [a, b])
    }

    /// `s T^d`: the scaled standard simplex with vertices `o, s e_1, ..., s e_d`.
    pub fn standard_simplex(ambient: usize, d: usize, scale: S) -> Result<Self, Error> {
        if d > ambient {
            return Err(Error::invalid("simplex dimension exceeds ambient"));
        }
        let mut pts = vec![Vector::zero(ambient)];
        for i in 0..d {
            pts.push(Vector::unit(ambient, i).scale(&scale));
        }
        Self::hull(ambient, pts)
    }

    /// `s [e_1, ..., e_d]`: the scaled facet simplex opposite the origin.
    pub fn basis_simplex(ambient: usize, d: usize, scale: S) -> Result<Self, Error> {
        if d == 0 || d > ambient {
            return Err(Error::invalid("basis simplex needs 1 <= d <= ambient"));
        }
        let pts: Vec<Vector<S>> = (0..d)
            .map(|i| Vector::unit(ambient, i).scale(&scale))
            .collect();
        Self::hull(ambient, pts)
    }

    pub fn unit_cube(ambient: usize) -> Result<Self, Error> {
        if ambient >= usize::BITS as usize {
            return Err(Error::invalid("cube dimension too large"));
        }
        let pts = (0..(1usize << ambient)).map(|mask| {
            Vector::new(
                (0..ambient)
                    .map(|i| {
                        if mask >> i & 1 == 1 {
                            S::one()
                        } else {
                            S::zero()
                        }
                    })
                    .collect(),
            )
        });
        Self::hull(ambient, pts)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    /// Affine dimension; `-1` for the empty polytope.
    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertices(&self) -> &[Vector<S>] {
        &self.vertices
    }

    pub fn facets(&self) -> &[FacetData<S>] {
        &self.facets
    }

    pub fn origin_status(&self) -> OriginStatus {
        self.origin
    }

    pub fn contains_origin(&self) -> bool {
        self.origin != OriginStatus::Outside
    }

    /// Euler characteristic: one unless empty.
    pub fn euler(&self) -> i64 {
        i64::from(!self.is_empty())
    }

    /// Is the origin in the relative interior?
    pub fn contains_origin_relint(&self) -> Result<bool, Error> {
        if self.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        Ok(self.origin == OriginStatus::Interior)
    }

    /// Support value `max { u . v : v in P }`.
    pub fn support(&self, u: &Vector<S>) -> Result<S, Error> {
        if self.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if u.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: u.dim(),
            });
        }
        Ok(self
            .vertices
            .iter()
            .map(|v| u.dot(v))
            .max()
            .expect("nonempty polytope"))
    }

    /// Image under an invertible linear map (re-hulled, every cache exact).
    pub fn apply_linear(&self, phi: &LinearMap<S>) -> Result<Self, Error> {
        if phi.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: phi.dim(),
            });
        }
        if phi.is_singular() {
            return Err(Error::SingularMap);
        }
        Self::hull(self.ambient, self.vertices.iter().map(|v| phi.apply(v)))
    }

    pub fn translate(&self, t: &Vector<S>) -> Result<Self, Error> {
        if t.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: t.dim(),
            });
        }
        Self::hull(self.ambient, self.vertices.iter().map(|v| v.add(t)))
    }

    pub fn scale_by(&self, factor: &S) -> Result<Self, Error> {
        if factor.sign() == 0 {
            return Err(Error::invalid("scaling factor must be nonzero"));
        }
        Self::hull(self.ambient, self.vertices.iter().map(|v| v.scale(factor)))
    }

    /// `[P, o]`: the convex hull with the origin adjoined.
    pub fn hull_with_origin(&self) -> Self {
        if self.contains_origin() && !self.is_empty() {
            return self.clone();
        }
        let mut pts = self.vertices.clone();
        pts.push(Vector::zero(self.ambient));
        Self::hull(self.ambient, pts).expect("ambient already validated")
    }

    /// Exact cut by a hyperplane into `P \cap H^-`, `P \cap H^+`, `P \cap H`.
    pub fn cut(&self, h: &Hyperplane<S>) -> Result<CutPieces<S>, Error> {
        if h.normal.dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: h.normal.dim(),
            });
        }
        let empty = Self::empty(self.ambient)?;
        if self.is_empty() {
            return Ok(CutPieces {
                minus: empty.clone(),
                plus: empty.clone(),
                slice: empty,
            });
        }
        let heights: Vec<S> = self.vertices.iter().map(|v| h.height(v)).collect();
        let signs: Vec<i8> = heights.iter().map(|d| d.sign()).collect();
        let has_neg = signs.iter().any(|&s| s < 0);
        let has_pos = signs.iter().any(|&s| s > 0);
        let on_plane: Vec<usize> = (0..signs.len()).filter(|&i| signs[i] == 0).collect();

        if !has_neg && !has_pos {
            // P lies inside the hyperplane.
            return Ok(CutPieces {
                minus: self.clone(),
                plus: self.clone(),
                slice: self.clone(),
            });
        }
        if !has_pos || !has_neg {
            // Supporting or disjoint hyperplane.
            let slice = if on_plane.is_empty() {
                empty.clone()
            } else {
                Self::hull(
                    self.ambient,
                    on_plane.iter().map(|&i| self.vertices[i].clone()),
                )?
            };
            return Ok(if has_neg {
                CutPieces {
                    minus: self.clone(),
                    plus: slice.clone(),
                    slice,
                }
            } else {
                CutPieces {
                    minus: slice.clone(),
                    plus: self.clone(),
                    slice,
                }
            });
        }

        if self.dim < self.ambient as isize {
            return self.cut_lower_dim(h, &signs);
        }
        self.cut_full_dim(h, &heights, &signs)
    }

    /// Generic cut for lower-dimensional polytopes: candidate points from
    /// every straddling vertex pair, then hull pruning.
    fn cut_lower_dim(&self, h: &Hyperplane<S>, signs: &[i8]) -> Result<CutPieces<S>, Error> {
        let mut crossings: Vec<Vector<S>> = Vec::new();
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                if signs[i] as i32 * signs[j] as i32 == -1 {
                    crossings.push(segment_crossing(
                        &self.vertices[i],
                        &self.vertices[j],
                        &h.height(&self.vertices[i]),
                        &h.height(&self.vertices[j]),
                    ));
                }
            }
        }
        let side_points = |keep: &dyn Fn(i8) -> bool| -> Vec<Vector<S>> {
            let mut pts: Vec<Vector<S>> = (0..self.vertices.len())
                .filter(|&i| keep(signs[i]))
                .map(|i| self.vertices[i].clone())
                .collect();
            pts.extend(crossings.iter().cloned());
            pts
        };
        Ok(CutPieces {
            minus: Self::hull(self.ambient, side_points(&|s| s <= 0))?,
            plus: Self::hull(self.ambient, side_points(&|s| s >= 0))?,
            slice: Self::hull(self.ambient, side_points(&|s| s == 0))?,
        })
    }

    /// Clip-based cut for full-dimensional polytopes: both halves inherit
    /// clipped facets from `self` plus one section facet, so no global
    /// re-hull is needed.
    fn cut_full_dim(
        &self,
        h: &Hyperplane<S>,
        heights: &[S],
        signs: &[i8],
    ) -> Result<CutPieces<S>, Error> {
        let edges = self.edge_pairs();
        // Crossing points, tagged with their edge.
        let mut crossings: Vec<(usize, usize, Vector<S>)> = Vec::new();
        for &(i, j) in &edges {
            if signs[i] as i32 * signs[j] as i32 == -1 {
                crossings.push((
                    i,
                    j,
                    segment_crossing(&self.vertices[i], &self.vertices[j], &heights[i], &heights[j]),
                ));
            }
        }
        let mut slice_points: BTreeSet<Vector<S>> = crossings.iter().map(|c| c.2.clone()).collect();
        for (i, &s) in signs.iter().enumerate() {
            if s == 0 {
                slice_points.insert(self.vertices[i].clone());
            }
        }
        let slice_vec: Vec<Vector<S>> = slice_points.iter().cloned().collect();
        let slice = Self::hull(self.ambient, slice_vec.clone())?;

        // Shared section facet data (same unsigned area on both sides).
        let section_normal = Vector::new(canonical_direction(h.normal.coords().to_vec()));
        let section_support = section_normal.dot(&slice_vec[0]);
        let section_indices: Vec<usize> = (0..slice_vec.len()).collect();
        let section_area = area_over_norm(&slice_vec, &section_indices, &section_normal);

        let minus = self.clipped_half(
            Side::Minus,
            signs,
            &crossings,
            &section_normal,
            &section_support,
            &section_area,
        );
        let plus = self.clipped_half(
            Side::Plus,
            signs,
            &crossings,
            &section_normal,
            &section_support,
            &section_area,
        );
        Ok(CutPieces { minus, plus, slice })
    }

    fn clipped_half(
        &self,
        side: Side,
        signs: &[i8],
        crossings: &[(usize, usize, Vector<S>)],
        section_normal: &Vector<S>,
        section_support: &S,
        section_area: &S,
    ) -> Self {
        let keep = |s: i8| match side {
            Side::Minus => s <= 0,
            Side::Plus => s >= 0,
        };
        let strict_lost = |s: i8| match side {
            Side::Minus => s > 0,
            Side::Plus => s < 0,
        };
        let mut vert_set: BTreeSet<Vector<S>> = (0..self.vertices.len())
            .filter(|&i| keep(signs[i]))
            .map(|i| self.vertices[i].clone())
            .collect();
        for (_, _, p) in crossings {
            vert_set.insert(p.clone());
        }
        let vertices: Vec<Vector<S>> = vert_set.into_iter().collect();
        let n_scalar = S::from_int(self.ambient as i64);

        let mut facets: Vec<FacetData<S>> = Vec::new();
        for facet in &self.facets {
            let touched = facet.vertex_indices.iter().any(|&i| strict_lost(signs[i]));
            let mut kept: Vec<Vector<S>> = facet
                .vertex_indices
                .iter()
                .filter(|&&i| keep(signs[i]))
                .map(|&i| self.vertices[i].clone())
                .collect();
            for (i, j, p) in crossings {
                if facet.vertex_indices.contains(i) && facet.vertex_indices.contains(j) {
                    kept.push(p.clone());
                }
            }
            if kept.len() < self.ambient {
                continue;
            }
            let (rank, _) = affine_rank_and_pivots(&kept);
            if rank + 1 != self.ambient {
                continue;
            }
            let area = if touched {
                let idx: Vec<usize> = (0..kept.len()).collect();
                area_over_norm(&kept, &idx, &facet.normal)
            } else {
                facet.normalized_area.clone()
            };
            let cone = facet.support.clone() * area.clone() / n_scalar.clone();
            facets.push(FacetData {
                normal: facet.normal.clone(),
                support: facet.support.clone(),
                normalized_area: area,
                cone_volume: cone,
                vertex_indices: Vec::new(),
            });
        }
        // Section facet, oriented outward from this half.
        let (normal, support) = match side {
            Side::Minus => (section_normal.clone(), section_support.clone()),
            Side::Plus => (section_normal.neg(), -section_support.clone()),
        };
        let cone = support.clone() * section_area.clone() / n_scalar;
        facets.push(FacetData {
            normal,
            support,
            normalized_area: section_area.clone(),
            cone_volume: cone,
            vertex_indices: Vec::new(),
        });

        for facet in facets.iter_mut() {
            facet.vertex_indices = vertices
                .iter()
                .enumerate()
                .filter(|(_, v)| (facet.normal.dot(v) - facet.support.clone()).sign() == 0)
                .map(|(i, _)| i)
                .collect();
        }
        sort_facets(&mut facets);
        let origin = classify_origin_full(&facets);
        Polytope {
            ambient: self.ambient,
            vertices,
            dim: self.ambient as isize,
            facets,
            origin,
        }
    }

    /// Vertex index pairs forming edges, from facet incidence (the common
    /// facet normals of an edge span a rank `n - 1` space). Full-dim only.
    fn edge_pairs(&self) -> Vec<(usize, usize)> {
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.vertices.len()];
        for (f_id, facet) in self.facets.iter().enumerate() {
            for &v in &facet.vertex_indices {
                incident[v].push(f_id);
            }
        }
        let mut edges = Vec::new();
        let need = self.ambient - 1;
        for i in 0..self.vertices.len() {
            for j in (i + 1)..self.vertices.len() {
                let common: Vec<usize> = incident[i]
                    .iter()
                    .filter(|f| incident[j].contains(f))
                    .copied()
                    .collect();
                if common.len() < need {
                    continue;
                }
                let rows: Vec<Vec<S>> = common
                    .iter()
                    .map(|&f| self.facets[f].normal.coords().to_vec())
                    .collect();
                if rank_of(rows, self.ambient) == need {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// Approximate Hausdorff distance from support differences over a fixed
    /// sign-vector direction sample. Diagnostic only.
    pub fn hausdorff_distance_approx(&self, other: &Self) -> Result<f64, Error> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptyPolytope);
        }
        if other.ambient_dim() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient_dim(),
            });
        }
        let mut best = 0.0f64;
        let n = self.ambient;
        let total = 3usize.pow(n as u32);
        for code in 1..total {
            let mut c = code;
            let mut coords = Vec::with_capacity(n);
            let mut norm_sq = 0.0f64;
            for _ in 0..n {
                let digit = (c % 3) as i64 - 1;
                c /= 3;
                norm_sq += (digit * digit) as f64;
                coords.push(digit);
            }
            if norm_sq == 0.0 {
                continue;
            }
            let u = Vector::from_ints(&coords);
            let d = (self.support(&u)?.to_f64() - other.support(&u)?.to_f64()).abs()
                / norm_sq.sqrt();
            if d > best {
                best = d;
            }
        }
        Ok(best)
    }
}

fn segment_crossing<S: Scalar>(a: &Vector<S>, b: &Vector<S>, ha: &S, hb: &S) -> Vector<S> {
    // a + t (b - a) with t = ha / (ha - hb); signs of ha, hb are opposite.
    let t = ha.clone() / (ha.clone() - hb.clone());
    a.add(&b.sub(a).scale(&t))
}

fn sort_facets<S: Scalar>(facets: &mut [FacetData<S>]) {
    facets.sort_by(|f, g| {
        f.normal
            .cmp(&g.normal)
            .then_with(|| f.support.cmp(&g.support))
    });
}

fn classify_origin_full<S: Scalar>(facets: &[FacetData<S>]) -> OriginStatus {
    let mut boundary = false;
    for f in facets {
        match f.support.sign() {
            -1 => return OriginStatus::Outside,
            0 => boundary = true,
            _ => {}
        }
    }
    if boundary {
        OriginStatus::Boundary
    } else {
        OriginStatus::Interior
    }
}

fn classify_origin_lower<S: Scalar>(
    pts: &[Vector<S>],
    rank: usize,
    pivots: &[usize],
    proj: &[Vector<S>],
    proj_facets: &[RawFacet<S>],
) -> OriginStatus {
    // The origin must first lie in the affine hull.
    let base = &pts[0];
    let mut rows: Vec<Vec<S>> = pts[1..].iter().map(|p| p.sub(base).into_coords()).collect();
    rows.push(base.neg().into_coords());
    if rank_of(rows, pts[0].dim()) != rank {
        return OriginStatus::Outside;
    }
    let origin_proj = Vector::<S>::zero(pivots.len());
    if rank == 1 {
        let mut lo = proj[0].get(0).clone();
        let mut hi = lo.clone();
        for p in proj {
            if *p.get(0) < lo {
                lo = p.get(0).clone();
            }
            if *p.get(0) > hi {
                hi = p.get(0).clone();
            }
        }
        let zero = S::zero();
        return if zero > lo && zero < hi {
            OriginStatus::Interior
        } else if zero == lo || zero == hi {
            OriginStatus::Boundary
        } else {
            OriginStatus::Outside
        };
    }
    let mut boundary = false;
    for f in proj_facets {
        match (f.normal.dot(&origin_proj) - f.support.clone()).sign() {
            1 => return OriginStatus::Outside,
            0 => boundary = true,
            _ => {}
        }
    }
    if boundary {
        OriginStatus::Boundary
    } else {
        OriginStatus::Interior
    }
}

impl<S: Scalar> fmt::Debug for Polytope<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Polytope(dim {} in R^{}, {} vertices, {} facets)",
            self.dim,
            self.ambient,
            self.vertices.len(),
            self.facets.len()
        )
    }
}
