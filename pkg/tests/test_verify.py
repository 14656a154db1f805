import json
import math

import numpy as np
import pytest

from quadellipse.conic import ellipse_area, foci
from quadellipse.errors import (
    CanonicalFormViolated,
    DomainError,
    IdentityMismatch,
)
from quadellipse.family import midpoint_ellipse
from quadellipse.geom import AffineMap
from quadellipse.quad import ParallelogramFrame, parallelogram_frame, quad_area, validate
from quadellipse.verify import (
    b_fn,
    c_fn,
    check_area_inequality,
    check_foci_on_bestfit,
    check_lemma22,
    check_ratio_formula,
    circumscribed_min_ratio,
    conjecture_scan,
    d_fn,
    marden_check,
    proof_vars,
    run_verification_suite,
    sample_canonical_pair,
    sample_convex_quad,
    sample_parallelogram_vertices,
    scan_sample_vertices,
    scan_z_bound,
    z_fn,
)

HALF_PI = math.pi / 2.0


class TestProfile:
    def test_half_is_three_root_three(self):
        assert z_fn(0.5) == pytest.approx(3.0 * math.sqrt(3.0), rel=1e-14)

    def test_branch_crossover_is_continuous(self):
        below = z_fn(0.5 - 1e-12)
        above = z_fn(0.5 + 1e-12)
        assert below == pytest.approx(above, rel=1e-11)

    def test_limit_at_zero(self):
        assert z_fn(1e-9) == pytest.approx(4.0, abs=1e-6)

    def test_limit_at_one(self):
        assert z_fn(1.0 - 1e-6) == pytest.approx(27.0 / 4.0, abs=1e-4)

    def test_strictly_below_bound_inside(self):
        for w in np.linspace(0.001, 0.999, 997):
            assert z_fn(float(w)) < 27.0 / 4.0

    def test_domain_enforced(self):
        for bad in (0.0, 1.0, -0.3, 1.3, 2.0):
            with pytest.raises(DomainError):
                z_fn(bad)

    def test_scan_returns_supremum_side(self):
        zmax = scan_z_bound(4000)
        assert 6.7 < zmax < 27.0 / 4.0

    def test_scan_needs_grid(self):
        with pytest.raises(DomainError):
            scan_z_bound(1)


class TestSubstitutionPolynomials:
    def test_exact_integer_case(self):
        assert b_fn(2.0, 3.0) == 28.0
        assert c_fn(4.0, 6.0) == 28.0

    def test_b_equals_c_after_substitution(self):
        rng = np.random.default_rng(2)
        for _ in range(300):
            s, t = sample_canonical_pair(rng)
            u, v = s + t - 1.0, s * t
            assert b_fn(s, t) == pytest.approx(c_fn(u, v), rel=1e-12)

    def test_b_positive_on_domain(self):
        rng = np.random.default_rng(8)
        for _ in range(200):
            s, t = sample_canonical_pair(rng)
            assert b_fn(s, t) > 0.0

    def test_d_known_value(self):
        # u=4, v=6: ((6-8)(12-4)(10) + 2*28^{3/2}) / (25*16/4) -> 1.3632...
        want = (-160.0 + 2.0 * 28.0 * math.sqrt(28.0)) / 100.0
        assert d_fn(4.0, 6.0) == pytest.approx(want, rel=1e-15)

    def test_d_singular_on_diagonal(self):
        with pytest.raises(DomainError):
            d_fn(2.0, 2.0)

    def test_domain_guards(self):
        with pytest.raises(DomainError):
            b_fn(0.2, 0.3)
        with pytest.raises(DomainError):
            c_fn(1.0, 5.0)


class TestProofVars:
    def test_case_one_when_both_above_one(self):
        pv = proof_vars(2.0, 3.0)
        assert pv.case == 1
        assert pv.u == 4.0 and pv.v == 6.0
        assert pv.w == pytest.approx(2.0 / 3.0)

    def test_case_one_when_both_below_one(self):
        pv = proof_vars(0.8, 0.9)
        assert pv.case == 1
        assert 0.0 < pv.w < 1.0

    def test_case_two_for_mixed_signs(self):
        pv = proof_vars(0.5, 2.0)
        assert pv.case == 2
        assert pv.w == pytest.approx(1.0 / 1.5)

    def test_rejects_boundary(self):
        with pytest.raises(CanonicalFormViolated):
            proof_vars(1.0, 2.0)
        with pytest.raises(CanonicalFormViolated):
            proof_vars(0.4, 0.6)


class TestRatioFormula:
    def test_known_value(self):
        want = (math.pi * math.pi / 27.0) * d_fn(4.0, 6.0)
        assert check_ratio_formula(2.0, 3.0) == pytest.approx(want, rel=1e-12)

    def test_symmetric_exactly(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            s, t = sample_canonical_pair(rng)
            assert check_ratio_formula(s, t) == check_ratio_formula(t, s)

    def test_always_below_parallelogram_bound(self):
        rng = np.random.default_rng(9)
        bound = (math.pi / 4.0) ** 2
        for _ in range(300):
            s, t = sample_canonical_pair(rng)
            assert 0.0 < check_ratio_formula(s, t) < bound

    def test_matches_geometric_construction(self):
        from quadellipse.family import max_area_ellipse

        rng = np.random.default_rng(14)
        for _ in range(40):
            s, t = sample_canonical_pair(rng)
            q = validate(((0.0, 0.0), (1.0, 0.0), (s, t), (0.0, 1.0)))
            geo = ellipse_area(max_area_ellipse(q).geom) / quad_area(q)
            assert geo * geo == pytest.approx(check_ratio_formula(s, t), rel=1e-8)

    def test_rejects_invalid_pairs(self):
        with pytest.raises(CanonicalFormViolated):
            check_ratio_formula(1.0, 3.0)
        with pytest.raises(CanonicalFormViolated):
            check_ratio_formula(-2.0, 3.0)


class TestInequalityAndInterval:
    def test_parallelogram_reports_equality(self):
        q = validate(((0.0, 0.0), (2.0, 0.5), (2.5, 2.0), (0.5, 1.5)))
        report = check_area_inequality(q, quad_id="p")
        assert report.is_parallelogram
        assert report.quad_id == "p"
        assert report.bound_gap == pytest.approx(0.0, abs=1e-13)

    def test_generic_quad_strictly_below(self):
        q = validate(((0.0, 0.0), (1.0, 0.0), (2.0, 3.0), (0.0, 1.0)))
        report = check_area_inequality(q)
        assert not report.is_parallelogram
        assert report.bound_gap > 1e-4

    def test_trapezoid_goes_through_search(self):
        q = validate(((0.0, 0.0), (4.0, 0.0), (3.0, 1.0), (1.0, 1.0)))
        report = check_area_inequality(q)
        assert report.is_trapezoid and not report.is_parallelogram
        assert 0.0 < report.ratio < math.pi / 4.0

    def test_interval_membership_across_regimes(self):
        counts = check_lemma22(200, seed=12)
        assert set(counts) == {"s>1,t>1", "s<1<t", "t<1<s", "s<1,t<1"}
        for label, (passed, failed) in counts.items():
            assert failed == 0, label
            assert passed == 50


class TestFociAndMarden:
    def test_rectangle_foci_identity(self):
        # Vertex second moment gives the foci directly: g +/- sqrt(Z)/2.
        frame = ParallelogramFrame(l=1.0, k=2.0, d=0.0, placement=AffineMap.identity())
        member = midpoint_ellipse(frame)
        f1, f2 = foci(member.geom)
        got = {tuple(round(c, 12) for c in f) for f in (f1, f2)}
        want = {
            (0.5, round(1.0 + math.sqrt(3.0) / 2.0, 12)),
            (0.5, round(1.0 - math.sqrt(3.0) / 2.0, 12)),
        }
        assert got == want

    def test_foci_on_line_random_parallelograms(self):
        rng = np.random.default_rng(6)
        for _ in range(50):
            frame = parallelogram_frame(validate(sample_parallelogram_vertices(rng)))
            assert check_foci_on_bestfit(frame) < 1e-9

    def test_square_takes_degenerate_branch(self):
        frame = ParallelogramFrame(l=2.0, k=2.0, d=0.0, placement=AffineMap.identity())
        assert check_foci_on_bestfit(frame) == pytest.approx(0.0, abs=1e-12)

    def test_marden_rectangle_roots(self):
        frame = ParallelogramFrame(l=1.0, k=2.0, d=0.0, placement=AffineMap.identity())
        report = marden_check(frame)
        roots = sorted(report.second_derivative_roots, key=lambda z: z.imag)
        assert roots[0] == pytest.approx(0.5 + 0.5j, abs=1e-12)
        assert roots[1] == pytest.approx(0.5 + 1.5j, abs=1e-12)
        assert report.min_distance > 0.1

    def test_marden_roots_average_to_centroid(self):
        # Q'' roots always average to e1/4, the vertex centroid.
        rng = np.random.default_rng(21)
        frame = parallelogram_frame(validate(sample_parallelogram_vertices(rng)))
        report = marden_check(frame)
        mean_root = sum(report.second_derivative_roots) / 2.0
        mean_vertex = sum(report.vertices) / 4.0
        assert mean_root == pytest.approx(mean_vertex, abs=1e-12)


class TestCircumscribed:
    def test_square_attains_half_pi(self):
        q = validate(((0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)))
        assert circumscribed_min_ratio(q) == pytest.approx(HALF_PI, abs=1e-12)

    def test_rectangle_attains_half_pi(self):
        q = validate(((0.0, 0.0), (3.0, 0.0), (3.0, 1.0), (0.0, 1.0)))
        assert circumscribed_min_ratio(q) == pytest.approx(HALF_PI, abs=1e-9)

    def test_sheared_parallelogram_attains_half_pi(self):
        q = validate(((0.0, 0.0), (2.0, 0.5), (2.7, 2.1), (0.7, 1.6)))
        assert circumscribed_min_ratio(q) == pytest.approx(HALF_PI, abs=1e-9)

    def test_generic_quads_stay_above(self):
        rng = np.random.default_rng(31)
        for _ in range(60):
            q = sample_convex_quad(rng)
            assert circumscribed_min_ratio(q) >= HALF_PI - 1e-9

    def test_affine_invariance(self):
        verts = ((0.0, 0.0), (1.0, 0.0), (2.0, 3.0), (0.0, 1.0))
        base = circumscribed_min_ratio(validate(verts))
        tmap = AffineMap(1.5, 0.4, -0.2, 2.0, 1.0, -3.0)
        moved = circumscribed_min_ratio(validate(tuple(tmap(v) for v in verts)))
        assert moved == pytest.approx(base, rel=1e-9)


class TestScan:
    def test_slot_zero_is_unit_square(self):
        assert scan_sample_vertices(42, 0) == (
            (0.0, 0.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (0.0, 1.0),
        )

    def test_slots_are_deterministic(self):
        for i in (1, 2, 3, 7, 20):
            assert scan_sample_vertices(9, i) == scan_sample_vertices(9, i)
        assert scan_sample_vertices(9, 5) != scan_sample_vertices(10, 5)

    def test_parallelogram_stratum(self):
        for i in (2, 6, 10):
            q = validate(scan_sample_vertices(1, i))
            assert q.is_parallelogram

    def test_report_contents(self):
        report = conjecture_scan(60, seed=42)
        assert report.sample_count == 60
        assert report.seed == 42
        assert sum(report.histogram) == 60
        assert report.min_ratio >= HALF_PI - 1e-9
        assert report.candidates == ()
        assert len(report.argmin_vertices) == 4

    def test_scan_is_reproducible(self):
        a = conjecture_scan(40, seed=5)
        b = conjecture_scan(40, seed=5)
        assert a == b

    def test_candidate_file_untouched_without_candidates(self, tmp_path):
        path = tmp_path / "candidates.jsonl"
        conjecture_scan(20, seed=5, candidate_path=str(path))
        assert not path.exists()

    def test_rejects_empty_scan(self):
        with pytest.raises(DomainError):
            conjecture_scan(0, seed=1)


class TestSamplers:
    def test_canonical_pair_regimes(self):
        rng = np.random.default_rng(40)
        for regime, check in [
            ("s>1,t>1", lambda s, t: s > 1.0 and t > 1.0),
            ("s<1<t", lambda s, t: s < 1.0 < t),
            ("t<1<s", lambda s, t: t < 1.0 < s),
            ("s<1,t<1", lambda s, t: s < 1.0 and t < 1.0 and s + t > 1.0),
        ]:
            for _ in range(50):
                s, t = sample_canonical_pair(rng, regime)
                assert check(s, t), (regime, s, t)
                assert min(abs(s - 1.0), abs(t - 1.0)) >= 0.05 - 1e-12

    def test_unknown_regime_rejected(self):
        rng = np.random.default_rng(1)
        with pytest.raises(DomainError):
            sample_canonical_pair(rng, "nonsense")

    def test_convex_sampler_respects_canonical_margin(self):
        from quadellipse.quad import normalize

        rng = np.random.default_rng(44)
        for _ in range(30):
            q = sample_convex_quad(rng, require_canonical=True)
            assert not q.is_trapezoid
            nq = normalize(q)
            assert min(abs(nq.s - 1.0), abs(nq.t - 1.0)) >= 0.05

    def test_parallelogram_sampler_is_exact(self):
        rng = np.random.default_rng(45)
        for _ in range(30):
            v0, v1, v2, v3 = sample_parallelogram_vertices(rng)
            assert v2[0] - v1[0] == v3[0] - v0[0]
            assert v2[1] - v1[1] == v3[1] - v0[1]


class TestSuite:
    def test_small_suite_passes(self):
        outcomes = run_verification_suite(samples=120, seed=3)
        names = [o.name for o in outcomes]
        assert len(names) == len(set(names)) == 10
        for outcome in outcomes:
            assert outcome.passed, f"{outcome.name}: {outcome.detail}"
