//! Closed-polyline queries: winding tests, distances, self-intersection.
//!
//! Polylines are closed implicitly (last sample connects back to the first)
//! and densely sampled, so segment-level tests at f64 precision are reliable
//! at the tolerances this crate works with.

use super::Vec2;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Aabb {
    pub min: Vec2,
    pub max: Vec2,
}

impl Aabb {
    pub fn of_points(pts: &[Vec2]) -> Aabb {
        let mut min = Vec2::new(f64::INFINITY, f64::INFINITY);
        let mut max = Vec2::new(f64::NEG_INFINITY, f64::NEG_INFINITY);
        for p in pts {
            min.x = min.x.min(p.x);
            min.y = min.y.min(p.y);
            max.x = max.x.max(p.x);
            max.y = max.y.max(p.y);
        }
        Aabb { min, max }
    }

    pub fn inflate(&self, pad: f64) -> Aabb {
        Aabb {
            min: Vec2::new(self.min.x - pad, self.min.y - pad),
            max: Vec2::new(self.max.x + pad, self.max.y + pad),
        }
    }

    pub fn contains(&self, p: Vec2) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn disjoint(&self, other: &Aabb) -> bool {
        self.max.x < other.min.x
            || other.max.x < self.min.x
            || self.max.y < other.min.y
            || other.max.y < self.min.y
    }
}

/// Squared distance from `p` to segment `a`-`b`.
pub fn seg_dist_sq(p: Vec2, a: Vec2, b: Vec2) -> f64 {
    let ab = b - a;
    let len_sq = ab.norm_sq();
    if len_sq == 0.0 {
        return (p - a).norm_sq();
    }
    let t = ((p - a).dot(ab) / len_sq).clamp(0.0, 1.0);
    (p - (a + ab * t)).norm_sq()
}

/// Minimal distance between segments `a0`-`a1` and `b0`-`b1`.
pub fn seg_seg_dist(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2) -> f64 {
    if segments_intersect(a0, a1, b0, b1) {
        return 0.0;
    }
    seg_dist_sq(a0, b0, b1)
        .min(seg_dist_sq(a1, b0, b1))
        .min(seg_dist_sq(b0, a0, a1))
        .min(seg_dist_sq(b1, a0, a1))
        .sqrt()
}

fn orient(a: Vec2, b: Vec2, c: Vec2) -> f64 {
    (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
}

/// Proper or touching intersection of two closed segments.
pub fn segments_intersect(a0: Vec2, a1: Vec2, b0: Vec2, b1: Vec2) -> bool {
    let d1 = orient(b0, b1, a0);
    let d2 = orient(b0, b1, a1);
    let d3 = orient(a0, a1, b0);
    let d4 = orient(a0, a1, b1);
    if ((d1 > 0.0 && d2 < 0.0) || (d1 < 0.0 && d2 > 0.0))
        && ((d3 > 0.0 && d4 < 0.0) || (d3 < 0.0 && d4 > 0.0))
    {
        return true;
    }
    let on = |d: f64, p: Vec2, q: Vec2, r: Vec2| {
        d == 0.0
            && r.x >= p.x.min(q.x)
            && r.x <= p.x.max(q.x)
            && r.y >= p.y.min(q.y)
            && r.y <= p.y.max(q.y)
    };
    on(d1, b0, b1, a0) || on(d2, b0, b1, a1) || on(d3, a0, a1, b0) || on(d4, a0, a1, b1)
}

/// Twice the signed area of the closed polyline (positive = CCW).
pub fn signed_area2(pts: &[Vec2]) -> f64 {
    let n = pts.len();
    let mut acc = 0.0;
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        acc += a.x * b.y - a.y * b.x;
    }
    acc
}

/// Uniform-grid index over the segments of one closed polyline.
///
/// Built once per disk; answers point-in-curve (even-odd crossing), distance
/// to the curve and curve-curve proximity queries.
#[derive(Clone, Debug)]
pub struct SegmentGrid {
    pts: Vec<Vec2>,
    bbox: Aabb,
    cell: f64,
    nx: usize,
    ny: usize,
    // Per-row segment lists for ray casting, per-cell lists for distances.
    rows: Vec<Vec<u32>>,
    cells: Vec<Vec<u32>>,
}

impl SegmentGrid {
    pub fn build(pts: &[Vec2]) -> SegmentGrid {
        assert!(pts.len() >= 3, "closed polyline needs at least 3 points");
        let bbox = Aabb::of_points(pts);
        let span = (bbox.max.x - bbox.min.x).max(bbox.max.y - bbox.min.y).max(1e-300);
        let target = (pts.len() as f64).sqrt().clamp(8.0, 96.0) as usize;
        let cell = span / target as f64;
        let nx = (((bbox.max.x - bbox.min.x) / cell).ceil() as usize + 1).max(1);
        let ny = (((bbox.max.y - bbox.min.y) / cell).ceil() as usize + 1).max(1);
        let mut rows: Vec<Vec<u32>> = vec![Vec::new(); ny];
        let mut cells: Vec<Vec<u32>> = vec![Vec::new(); nx * ny];
        let n = pts.len();
        for i in 0..n {
            let a = pts[i];
            let b = pts[(i + 1) % n];
            let (ylo, yhi) = (a.y.min(b.y), a.y.max(b.y));
            let r0 = (((ylo - bbox.min.y) / cell).floor() as isize).clamp(0, ny as isize - 1) as usize;
            let r1 = (((yhi - bbox.min.y) / cell).floor() as isize).clamp(0, ny as isize - 1) as usize;
            for r in r0..=r1 {
                rows[r].push(i as u32);
            }
            let (xlo, xhi) = (a.x.min(b.x), a.x.max(b.x));
            let c0 = (((xlo - bbox.min.x) / cell).floor() as isize).clamp(0, nx as isize - 1) as usize;
            let c1 = (((xhi - bbox.min.x) / cell).floor() as isize).clamp(0, nx as isize - 1) as usize;
            for r in r0..=r1 {
                for c in c0..=c1 {
                    cells[r * nx + c].push(i as u32);
                }
            }
        }
        SegmentGrid { pts: pts.to_vec(), bbox, cell, nx, ny, rows, cells }
    }

    pub fn points(&self) -> &[Vec2] {
        &self.pts
    }

    pub fn bbox(&self) -> Aabb {
        self.bbox
    }

    #[inline]
    fn seg(&self, i: u32) -> (Vec2, Vec2) {
        let n = self.pts.len();
        let i = i as usize;
        (self.pts[i], self.pts[(i + 1) % n])
    }

    /// Even-odd test: is `p` inside the closed curve? Points within `2^-40`
    /// of the curve may land on either side; callers that care use
    /// `dist_below` first.
    pub fn point_inside(&self, p: Vec2) -> bool {
        if !self.bbox.contains(p) {
            return false;
        }
        let r = (((p.y - self.bbox.min.y) / self.cell).floor() as isize)
            .clamp(0, self.ny as isize - 1) as usize;
        let mut crossings = 0u32;
        for &i in &self.rows[r] {
            let (a, b) = self.seg(i);
            // Half-open rule: count the lower endpoint, exclude the upper.
            if (a.y <= p.y) != (b.y <= p.y) {
                let t = (p.y - a.y) / (b.y - a.y);
                let x = a.x + t * (b.x - a.x);
                if x > p.x {
                    crossings += 1;
                }
            }
        }
        crossings % 2 == 1
    }

    /// Distance from `p` to the curve if it is below `cutoff`, else `None`.
    pub fn dist_below(&self, p: Vec2, cutoff: f64) -> Option<f64> {
        let mut best = cutoff * cutoff;
        let mut found = false;
        // Ring search outward from p's cell until the ring cannot improve.
        let cx = (((p.x - self.bbox.min.x) / self.cell).floor() as isize).clamp(0, self.nx as isize - 1);
        let cy = (((p.y - self.bbox.min.y) / self.cell).floor() as isize).clamp(0, self.ny as isize - 1);
        let max_ring = (self.nx.max(self.ny)) as isize
            + ((cutoff / self.cell).ceil() as isize)
            + 1;
        for ring in 0..=max_ring {
            // Once a hit exists, stop when the ring is provably farther.
            let ring_min_dist = (ring - 1).max(0) as f64 * self.cell;
            if found && ring_min_dist * ring_min_dist > best {
                break;
            }
            if ring_min_dist * ring_min_dist > best {
                break;
            }
            let mut visit = |ix: isize, iy: isize| {
                if ix < 0 || iy < 0 || ix >= self.nx as isize || iy >= self.ny as isize {
                    return;
                }
                for &i in &self.cells[iy as usize * self.nx + ix as usize] {
                    let (a, b) = self.seg(i);
                    let d = seg_dist_sq(p, a, b);
                    if d < best {
                        best = d;
                        found = true;
                    }
                }
            };
            if ring == 0 {
                visit(cx, cy);
            } else {
                for dx in -ring..=ring {
                    visit(cx + dx, cy - ring);
                    visit(cx + dx, cy + ring);
                }
                for dy in (-ring + 1)..ring {
                    visit(cx - ring, cy + dy);
                    visit(cx + ring, cy + dy);
                }
            }
        }
        if found {
            Some(best.sqrt())
        } else {
            None
        }
    }

    /// Exact distance from `p` to the curve.
    pub fn dist(&self, p: Vec2) -> f64 {
        // Seed the cutoff with the distance to an arbitrary vertex.
        let seed = (p - self.pts[0]).norm() + self.cell;
        self.dist_below(p, seed * 1.0001).expect("seeded cutoff must find the curve")
    }

    /// Minimal distance between this curve and another, at segment level.
    /// Early-out: returns as soon as a value `<= stop_below` is certain.
    pub fn min_dist_to(&self, other: &SegmentGrid, stop_below: f64) -> f64 {
        let mut best = f64::INFINITY;
        let n = other.pts.len();
        for i in 0..n {
            let a = other.pts[i];
            let b = other.pts[(i + 1) % n];
            let mid = (a + b) * 0.5;
            let half = (b - a).norm() * 0.5;
            let cutoff = if best.is_finite() { best + half } else { f64::INFINITY };
            if let Some(d) = self.dist_below(mid, cutoff.min(1e300)) {
                // Refine against actual segments near the midpoint hit.
                if d - half < best {
                    let refine = self.refine_seg_dist(a, b, best);
                    if refine < best {
                        best = refine;
                    }
                }
            }
            if best <= stop_below {
                return best;
            }
        }
        best
    }

    fn refine_seg_dist(&self, a: Vec2, b: Vec2, best: f64) -> f64 {
        let pad = if best.is_finite() { best } else { (b - a).norm() + self.cell * 4.0 };
        let lo = Vec2::new(a.x.min(b.x) - pad, a.y.min(b.y) - pad);
        let hi = Vec2::new(a.x.max(b.x) + pad, a.y.max(b.y) + pad);
        let c0 = (((lo.x - self.bbox.min.x) / self.cell).floor() as isize).clamp(0, self.nx as isize - 1);
        let c1 = (((hi.x - self.bbox.min.x) / self.cell).floor() as isize).clamp(0, self.nx as isize - 1);
        let r0 = (((lo.y - self.bbox.min.y) / self.cell).floor() as isize).clamp(0, self.ny as isize - 1);
        let r1 = (((hi.y - self.bbox.min.y) / self.cell).floor() as isize).clamp(0, self.ny as isize - 1);
        let mut out = best;
        let mut seen = vec![false; self.pts.len()];
        for r in r0..=r1 {
            for c in c0..=c1 {
                for &i in &self.cells[r as usize * self.nx + c as usize] {
                    if seen[i as usize] {
                        continue;
                    }
                    seen[i as usize] = true;
                    let (p, q) = self.seg(i);
                    let d = seg_seg_dist(p, q, a, b);
                    if d < out {
                        out = d;
                    }
                }
            }
        }
        out
    }

    /// Does any segment of `other` intersect a segment of this curve?
    pub fn crosses(&self, other: &SegmentGrid) -> bool {
        if self.bbox.disjoint(&other.bbox) {
            return false;
        }
        let n = other.pts.len();
        for i in 0..n {
            let a = other.pts[i];
            let b = other.pts[(i + 1) % n];
            if self.segment_hits(a, b) {
                return true;
            }
        }
        false
    }

    fn segment_hits(&self, a: Vec2, b: Vec2) -> bool {
        let lo = Vec2::new(a.x.min(b.x), a.y.min(b.y));
        let hi = Vec2::new(a.x.max(b.x), a.y.max(b.y));
        if hi.x < self.bbox.min.x || lo.x > self.bbox.max.x || hi.y < self.bbox.min.y || lo.y > self.bbox.max.y {
            return false;
        }
        let c0 = (((lo.x - self.bbox.min.x) / self.cell).floor() as isize).clamp(0, self.nx as isize - 1);
        let c1 = (((hi.x - self.bbox.min.x) / self.cell).floor() as isize).clamp(0, self.nx as isize - 1);
        let r0 = (((lo.y - self.bbox.min.y) / self.cell).floor() as isize).clamp(0, self.ny as isize - 1);
        let r1 = (((hi.y - self.bbox.min.y) / self.cell).floor() as isize).clamp(0, self.ny as isize - 1);
        for r in r0..=r1 {
            for c in c0..=c1 {
                for &i in &self.cells[r as usize * self.nx + c as usize] {
                    let (p, q) = self.seg(i);
                    if segments_intersect(p, q, a, b) {
                        return true;
                    }
                }
            }
        }
        false
    }
}

/// Self-intersection test for a closed polyline (non-adjacent segments only).
pub fn self_intersects(pts: &[Vec2]) -> bool {
    let n = pts.len();
    if n < 4 {
        return false;
    }
    let grid = SegmentGrid::build(pts);
    for i in 0..n {
        let a = pts[i];
        let b = pts[(i + 1) % n];
        let lo = Vec2::new(a.x.min(b.x), a.y.min(b.y));
        let hi = Vec2::new(a.x.max(b.x), a.y.max(b.y));
        let c0 = (((lo.x - grid.bbox.min.x) / grid.cell).floor() as isize).clamp(0, grid.nx as isize - 1);
        let c1 = (((hi.x - grid.bbox.min.x) / grid.cell).floor() as isize).clamp(0, grid.nx as isize - 1);
        let r0 = (((lo.y - grid.bbox.min.y) / grid.cell).floor() as isize).clamp(0, grid.ny as isize - 1);
        let r1 = (((hi.y - grid.bbox.min.y) / grid.cell).floor() as isize).clamp(0, grid.ny as isize - 1);
        for r in r0..=r1 {
            for c in c0..=c1 {
                for &jj in &grid.cells[r as usize * grid.nx + c as usize] {
                    let j = jj as usize;
                    if j <= i {
                        continue;
                    }
                    // Skip adjacent segments (shared endpoint).
                    if j == i + 1 || (i == 0 && j == n - 1) {
                        continue;
                    }
                    let p = pts[j];
                    let q = pts[(j + 1) % n];
                    if segments_intersect(a, b, p, q) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Convex hull (monotone chain), returning hull points in CCW order.
pub fn convex_hull(pts: &[Vec2]) -> Vec<Vec2> {
    let mut v: Vec<Vec2> = pts.to_vec();
    v.sort_by(|a, b| a.x.partial_cmp(&b.x).unwrap().then(a.y.partial_cmp(&b.y).unwrap()));
    v.dedup_by(|a, b| a.x == b.x && a.y == b.y);
    if v.len() < 3 {
        return v;
    }
    let mut hull: Vec<Vec2> = Vec::with_capacity(v.len() * 2);
    for &p in v.iter().chain(v.iter().rev().skip(1)) {
        while hull.len() >= 2 && orient(hull[hull.len() - 2], hull[hull.len() - 1], p) <= 0.0 {
            let stop = hull.len() == v.len() + 1;
            hull.pop();
            if stop {
                break;
            }
        }
        hull.push(p);
    }
    hull.pop();
    hull
}

/// Maximal pairwise distance over the points (rotating calipers on the hull).
pub fn diameter(pts: &[Vec2]) -> f64 {
    let hull = convex_hull(pts);
    let n = hull.len();
    if n == 1 {
        return 0.0;
    }
    if n == 2 {
        return (hull[1] - hull[0]).norm();
    }
    let mut best = 0.0f64;
    let mut j = 1;
    for i in 0..n {
        let edge_from = hull[i];
        let edge_to = hull[(i + 1) % n];
        loop {
            let nj = (j + 1) % n;
            let cur = orient(edge_from, edge_to, hull[j]).abs();
            let nxt = orient(edge_from, edge_to, hull[nj]).abs();
            if nxt > cur {
                j = nj;
            } else {
                break;
            }
        }
        best = best.max((hull[j] - edge_from).norm()).max((hull[j] - edge_to).norm());
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle_pts(c: Vec2, r: f64, m: usize) -> Vec<Vec2> {
        (0..m)
            .map(|i| {
                let th = 2.0 * std::f64::consts::PI * i as f64 / m as f64;
                Vec2::new(c.x + r * th.cos(), c.y + r * th.sin())
            })
            .collect()
    }

    #[test]
    fn winding_on_circle() {
        let pts = circle_pts(Vec2::new(0.0, 0.0), 1.0, 512);
        let g = SegmentGrid::build(&pts);
        assert!(g.point_inside(Vec2::new(0.0, 0.0)));
        assert!(g.point_inside(Vec2::new(0.7, 0.3)));
        assert!(!g.point_inside(Vec2::new(2.0, 0.0)));
        assert!(!g.point_inside(Vec2::new(0.9, 0.9)));
    }

    #[test]
    fn distance_to_circle() {
        let pts = circle_pts(Vec2::new(0.0, 0.0), 2.0, 1024);
        let g = SegmentGrid::build(&pts);
        let d = g.dist(Vec2::new(0.5, 0.0));
        assert!((d - 1.5).abs() < 1e-4, "d = {d}");
        let d = g.dist(Vec2::new(3.0, 0.0));
        assert!((d - 1.0).abs() < 1e-4, "d = {d}");
        assert!(g.dist_below(Vec2::new(3.0, 0.0), 0.5).is_none());
    }

    #[test]
    fn min_dist_between_circles() {
        let a = SegmentGrid::build(&circle_pts(Vec2::new(0.0, 0.0), 1.0, 512));
        let b = SegmentGrid::build(&circle_pts(Vec2::new(5.0, 0.0), 1.0, 512));
        let d = a.min_dist_to(&b, 0.0);
        assert!((d - 3.0).abs() < 1e-3, "d = {d}");
    }

    #[test]
    fn self_intersection_detects_figure_eight() {
        let mut pts = Vec::new();
        for i in 0..256 {
            let t = 2.0 * std::f64::consts::PI * i as f64 / 256.0;
            pts.push(Vec2::new(t.sin(), (2.0 * t).sin()));
        }
        assert!(self_intersects(&pts));
        assert!(!self_intersects(&circle_pts(Vec2::new(0.0, 0.0), 1.0, 256)));
    }

    #[test]
    fn hull_diameter_of_circle() {
        let pts = circle_pts(Vec2::new(3.0, -1.0), 1.5, 2048);
        let d = diameter(&pts);
        assert!((d - 3.0).abs() < 1e-4, "d = {d}");
    }

    #[test]
    fn signed_area_orientation() {
        let ccw = circle_pts(Vec2::new(0.0, 0.0), 1.0, 128);
        assert!(signed_area2(&ccw) > 0.0);
        let cw: Vec<Vec2> = ccw.iter().rev().copied().collect();
        assert!(signed_area2(&cw) < 0.0);
    }
}
