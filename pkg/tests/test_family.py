import math

import numpy as np
import pytest

from quadellipse.conic import (
    ConicKind,
    classify_conic,
    conic_to_ellipse,
    ellipse_area,
    proportional,
)
from quadellipse.errors import (
    CenterOffLocus,
    IsParallelogram,
    ParameterOutOfRange,
    TrapezoidUnsupported,
)
from quadellipse.family import (
    area_sq,
    ellipse_at_center,
    family_areas,
    locus_line,
    max_area_by_search,
    max_area_ellipse,
    max_area_param,
    midpoint_ellipse,
    parallelogram_family,
    rectangle_family,
    rectangle_semi_axes_sq,
)
from quadellipse.geom import AffineMap, distance
from quadellipse.quad import parallelogram_frame, quad_area, validate

GENERIC = validate(((0.0, 0.0), (1.0, 0.0), (2.0, 3.0), (0.0, 1.0)))


def canonical_quad(s, t):
    return validate(((0.0, 0.0), (1.0, 0.0), (s, t), (0.0, 1.0)))


class TestRectangleFamily:
    def test_unit_example_conic(self):
        member = rectangle_family(1.0, 2.0, 1.0)
        want = (4.0, 1.0, 0.0, -4.0, -2.0, 1.0)
        got = member.conic.canonical().as_tuple()
        ratio = want[0] / got[0]
        assert got == pytest.approx(tuple(w / ratio for w in want), abs=1e-12)

    def test_tangency_points_by_formula(self):
        l, k, v = 3.0, 2.0, 0.5
        member = rectangle_family(l, k, v)
        want = {
            (l * v / k, 0.0),
            (l, k - v),
            (l * (k - v) / k, k),
            (0.0, v),
        }
        got = {tuple(round(c, 12) for c in p) for p in member.tangency}
        assert got == {tuple(round(c, 12) for c in p) for p in want}

    def test_tangency_points_satisfy_conic(self):
        member = rectangle_family(2.5, 1.25, 0.9)
        scale = member.conic.max_abs()
        for x, y in member.tangency:
            assert abs(member.conic.evaluate(x, y)) < 1e-9 * scale

    def test_members_are_ellipses_throughout(self):
        for v in np.linspace(0.05, 1.95, 15):
            member = rectangle_family(1.0, 2.0, float(v))
            assert classify_conic(member.conic) is ConicKind.ELLIPSE

    def test_semi_axes_match_geometry(self):
        for v in (0.2, 0.7, 1.0, 1.6):
            member = rectangle_family(1.5, 2.0, v)
            big, small = rectangle_semi_axes_sq(1.5, 2.0, v)
            assert member.geom.a ** 2 == pytest.approx(big, rel=1e-10)
            assert member.geom.b ** 2 == pytest.approx(small, rel=1e-10)

    def test_midpoint_member_axes(self):
        # v = k/2 gives the inscribed ellipse with semi-axes l/2, k/2.
        member = rectangle_family(2.0, 1.0, 0.5)
        assert member.geom.a == pytest.approx(1.0, rel=1e-12)
        assert member.geom.b == pytest.approx(0.5, rel=1e-12)

    def test_parameter_validation(self):
        with pytest.raises(ParameterOutOfRange):
            rectangle_family(1.0, 2.0, 0.0)
        with pytest.raises(ParameterOutOfRange):
            rectangle_family(1.0, 2.0, 2.0)
        with pytest.raises(ParameterOutOfRange):
            rectangle_family(-1.0, 2.0, 0.5)


class TestParallelogramFamily:
    def test_zero_shear_matches_rectangle(self):
        rect = rectangle_family(1.5, 2.5, 0.8)
        para = parallelogram_family(1.5, 2.5, 0.0, 0.8)
        assert proportional(rect.conic, para.conic, tol=1e-12)

    def test_tangency_on_all_sides(self):
        member = parallelogram_family(2.0, 1.0, 0.7, 0.4)
        corners = ((0.0, 0.0), (2.0, 0.0), (2.7, 1.0), (0.7, 1.0))
        scale = member.conic.max_abs()
        for x, y in member.tangency:
            assert abs(member.conic.evaluate(x, y)) < 1e-8 * scale
        # One tangency point inside each closed side segment.
        for p, (u, w) in zip(
            member.tangency,
            [(corners[i], corners[(i + 1) % 4]) for i in range(4)],
        ):
            seg = distance(u, w)
            assert distance(u, p) + distance(p, w) == pytest.approx(seg, rel=1e-9)

    def test_midpoint_ellipse_centers_on_parallelogram_center(self):
        verts = ((1.0, 1.0), (4.0, 2.0), (5.0, 5.0), (2.0, 4.0))
        q = validate(verts)
        member = midpoint_ellipse(parallelogram_frame(q))
        cx = sum(v[0] for v in verts) / 4.0
        cy = sum(v[1] for v in verts) / 4.0
        assert member.geom.center == pytest.approx((cx, cy), abs=1e-10)

    def test_midpoint_ellipse_touches_side_midpoints(self):
        verts = ((1.0, 1.0), (4.0, 2.0), (5.0, 5.0), (2.0, 4.0))
        q = validate(verts)
        member = midpoint_ellipse(parallelogram_frame(q))
        mids = {
            (
                round((q.vertices[i][0] + q.vertices[(i + 1) % 4][0]) / 2.0, 9),
                round((q.vertices[i][1] + q.vertices[(i + 1) % 4][1]) / 2.0, 9),
            )
            for i in range(4)
        }
        got = {tuple(round(c, 9) for c in p) for p in member.tangency}
        assert got == mids

    def test_midpoint_ellipse_area_ratio(self):
        verts = ((0.0, 0.0), (3.0, 1.0), (4.0, 4.0), (1.0, 3.0))
        q = validate(verts)
        member = midpoint_ellipse(parallelogram_frame(q))
        assert ellipse_area(member.geom) / quad_area(q) == pytest.approx(
            math.pi / 4.0, rel=1e-12
        )


class TestLocusAndAreaProfile:
    def test_locus_endpoints_are_diagonal_midpoints(self):
        s, t = 2.0, 3.0
        locus = locus_line(s, t)
        assert locus.line_at(0.5) == pytest.approx(0.5)
        assert locus.line_at(s / 2.0) == pytest.approx(t / 2.0)

    def test_interval_is_sorted(self):
        lo, hi = locus_line(2.0, 3.0).interval()
        assert (lo, hi) == (0.5, 1.0)
        lo, hi = locus_line(0.8, 0.7).interval()
        assert (lo, hi) == (0.4, 0.5)

    def test_area_sq_vanishes_at_interval_ends(self):
        s, t = 2.0, 3.0
        lo, hi = locus_line(s, t).interval()
        assert area_sq(lo, s, t) == pytest.approx(0.0, abs=1e-12)
        assert area_sq(hi, s, t) == pytest.approx(0.0, abs=1e-12)

    def test_area_sq_rejects_outside_interval(self):
        with pytest.raises(ParameterOutOfRange):
            area_sq(0.3, 2.0, 3.0)
        with pytest.raises(ParameterOutOfRange):
            area_sq(1.2, 2.0, 3.0)

    def test_known_critical_point(self):
        # s=2, t=3: the cubic's maximum sits at (2 + sqrt 7)/6.
        assert max_area_param(2.0, 3.0) == pytest.approx((2.0 + math.sqrt(7.0)) / 6.0, rel=1e-14)

    def test_critical_point_beats_grid(self):
        rng = np.random.default_rng(5)
        for _ in range(40):
            s = float(rng.uniform(1.1, 4.0))
            t = float(rng.uniform(1.1, 4.0))
            lo, hi = locus_line(s, t).interval()
            h = max_area_param(s, t)
            assert lo < h < hi
            best = area_sq(h, s, t)
            grid = np.linspace(lo, hi, 400)
            assert best >= max(area_sq(float(g), s, t) for g in grid) - 1e-12 * best

    def test_near_unit_t_uses_stable_branch(self):
        # Either side of the |t - 1| switchover must give the same abscissa.
        s = 3.0
        h_quad = max_area_param(s, 1.0 + 5e-9)
        h_form = max_area_param(s, 1.0 + 2e-8)
        assert h_quad == pytest.approx(h_form, abs=1e-6)
        lo, hi = locus_line(s, 1.0 + 5e-9).interval()
        assert lo < h_quad < hi
        h_below = max_area_param(s, 1.0 - 5e-9)
        assert h_below == pytest.approx(h_quad, abs=1e-6)


class TestEllipseAtCenter:
    def test_reproduces_requested_center(self):
        locus = locus_line(2.0, 3.0)
        q = canonical_quad(2.0, 3.0)
        for h in (0.55, 0.7, 0.9):
            member = ellipse_at_center(q, (h, locus.line_at(h)))
            assert member.geom.center == pytest.approx((h, locus.line_at(h)), abs=1e-10)

    def test_tangent_to_all_sides(self):
        q = canonical_quad(2.0, 3.0)
        member = ellipse_at_center(q, (0.7, locus_line(2.0, 3.0).line_at(0.7)))
        assert len(member.tangency) == 4
        for p, side in zip(member.tangency, q.sides()):
            assert side.distance_to(p) < 1e-9

    def test_area_matches_profile(self):
        s, t = 2.0, 3.0
        q = canonical_quad(s, t)
        for h in (0.6, 0.75, 0.95):
            member = ellipse_at_center(q, (h, locus_line(s, t).line_at(h)))
            assert ellipse_area(member.geom) ** 2 == pytest.approx(
                area_sq(h, s, t), rel=1e-10
            )

    def test_rejects_center_off_locus_line(self):
        q = canonical_quad(2.0, 3.0)
        with pytest.raises(CenterOffLocus):
            ellipse_at_center(q, (0.7, locus_line(2.0, 3.0).line_at(0.7) + 0.05))

    def test_rejects_center_beyond_segment(self):
        s, t = 2.0, 3.0
        q = canonical_quad(s, t)
        locus = locus_line(s, t)
        with pytest.raises(CenterOffLocus):
            ellipse_at_center(q, (0.3, locus.line_at(0.3)))
        with pytest.raises(CenterOffLocus):
            ellipse_at_center(q, (1.4, locus.line_at(1.4)))

    def test_rejects_parallelogram(self):
        q = validate(((0.0, 0.0), (2.0, 0.0), (3.0, 1.0), (1.0, 1.0)))
        with pytest.raises(IsParallelogram):
            ellipse_at_center(q, (1.5, 0.5))

    def test_works_on_generic_frames(self):
        # Same construction after rotating and translating the quad.
        tmap = AffineMap.rotation(0.8, (0.0, 0.0)).compose(AffineMap.translation(2.0, -1.0))
        q = validate(tuple(tmap(v) for v in GENERIC.vertices))
        from quadellipse.quad import diagonal_midpoints

        m1, m2 = diagonal_midpoints(q)
        center = (0.5 * (m1[0] + m2[0]), 0.5 * (m1[1] + m2[1]))
        member = ellipse_at_center(q, center)
        assert member.geom.center == pytest.approx(center, abs=1e-9)
        for side in q.sides():
            assert min(side.distance_to(p) for p in member.tangency) < 1e-8


class TestMaximalMember:
    def test_closed_form_matches_search(self):
        member = max_area_ellipse(GENERIC)
        searched = max_area_by_search(GENERIC)
        assert ellipse_area(member.geom) == pytest.approx(
            ellipse_area(searched.geom), rel=1e-9
        )
        assert member.geom.center == pytest.approx(searched.geom.center, abs=1e-6)

    def test_parallelogram_route_gives_midpoint_member(self):
        verts = ((0.0, 0.0), (3.0, 1.0), (4.0, 4.0), (1.0, 3.0))
        q = validate(verts)
        member = max_area_ellipse(q)
        assert ellipse_area(member.geom) / quad_area(q) == pytest.approx(
            math.pi / 4.0, rel=1e-12
        )

    def test_trapezoid_refused_in_closed_form(self):
        q = validate(((0.0, 0.0), (4.0, 0.0), (3.0, 1.0), (1.0, 1.0)))
        with pytest.raises(TrapezoidUnsupported):
            max_area_ellipse(q)

    def test_trapezoid_by_search_stays_under_bound(self):
        q = validate(((0.0, 0.0), (4.0, 0.0), (3.0, 1.0), (1.0, 1.0)))
        member = max_area_by_search(q)
        ratio = ellipse_area(member.geom) / quad_area(q)
        assert 0.0 < ratio < math.pi / 4.0
        for side in q.sides():
            assert min(side.distance_to(p) for p in member.tangency) < 1e-7

    def test_search_refuses_parallelogram(self):
        q = validate(((0.0, 0.0), (2.0, 0.0), (3.0, 1.0), (1.0, 1.0)))
        with pytest.raises(IsParallelogram):
            max_area_by_search(q)

    def test_ratio_is_affine_invariant(self):
        base = max_area_ellipse(GENERIC)
        base_ratio = ellipse_area(base.geom) / quad_area(GENERIC)
        for tmap in [
            AffineMap(2.0, 0.5, -0.3, 1.5, 3.0, -2.0),
            AffineMap(0.4, 0.0, 0.0, 0.4, 0.0, 0.0),
            AffineMap.rotation(1.1, (0.5, 0.5)),
        ]:
            moved = validate(tuple(tmap(v) for v in GENERIC.vertices))
            member = max_area_ellipse(moved)
            ratio = ellipse_area(member.geom) / quad_area(moved)
            assert ratio == pytest.approx(base_ratio, rel=1e-9)

    def test_maximum_dominates_family(self):
        member = max_area_ellipse(GENERIC)
        best = ellipse_area(member.geom)
        for _, area, _ in family_areas(GENERIC, 97):
            assert area <= best * (1.0 + 1e-9)


class TestFamilyAreas:
    def test_row_count_and_shape(self):
        rows = family_areas(GENERIC, 25)
        assert len(rows) == 25
        for param, area, center in rows:
            assert 0.0 < param < 1.0
            assert area > 0.0
            assert len(center) == 2

    def test_parallelogram_sweep_in_v(self):
        q = validate(((0.0, 0.0), (2.0, 0.0), (3.0, 1.0), (1.0, 1.0)))
        frame = parallelogram_frame(q)
        rows = family_areas(q, 11)
        assert len(rows) == 11
        for param, area, _ in rows:
            assert 0.0 < param < frame.k
            assert area > 0.0

    def test_peak_matches_closed_form(self):
        rows = family_areas(GENERIC, 301)
        best_area = max(area for _, area, _ in rows)
        member = max_area_ellipse(GENERIC)
        assert best_area <= ellipse_area(member.geom) * (1.0 + 1e-9)
        assert best_area >= ellipse_area(member.geom) * (1.0 - 1e-3)

    def test_count_validation(self):
        with pytest.raises(ParameterOutOfRange):
            family_areas(GENERIC, 0)
