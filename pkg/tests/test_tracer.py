import math

import numpy as np
import pytest

from maxmod import (
    CurveBirthDeathError,
    FloorViolationError,
    MonomialAllPlaneError,
    Polynomial,
    TraceConfig,
    ambiguity_radius,
    brute_force_mset,
    circle_argmax,
    classify,
    expand,
    floor_radius,
    normalize,
    parse_poly,
    reciprocal,
    trace,
    trace_at_infinity,
    write_csv,
)
from maxmod.tracer import radius_schedule
from maxmod.util import circ_dist

CFG = TraceConfig()


def cluster_count(angles: np.ndarray, grid: int) -> int:
    if angles.size <= 1:
        return angles.size
    idx = np.sort(np.round((angles + math.pi) / (2 * math.pi / grid)).astype(int))
    gaps = np.diff(np.concatenate([idx, [idx[0] + grid]]))
    return int(np.sum(gaps > 1))


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            TraceConfig(r_min=0.5, r_max=0.1)
        with pytest.raises(ValueError):
            TraceConfig(n_radii=1)
        with pytest.raises(ValueError):
            TraceConfig(grid=32)

    def test_schedule_geometric(self):
        cfg = TraceConfig(r_min=1e-3, r_max=0.3, n_radii=50)
        rs = radius_schedule(cfg)
        assert rs[0] == pytest.approx(0.3) and rs[-1] == pytest.approx(1e-3)
        ratios = rs[1:] / rs[:-1]
        assert np.allclose(ratios, ratios[0])


class TestCircleArgmax:
    @pytest.mark.parametrize("a,k", [(1.0, 2), (2j, 3), (-1.5, 1), (0.5 - 0.5j, 5)])
    def test_two_term_exact_rays(self, a, k):
        coeffs = [1.0 + 0j] + [0j] * (k - 1) + [a]
        p = Polynomial(tuple(coeffs))
        e = expand(p)
        h = normalize(p)
        from maxmod import omega_angles

        omega = omega_angles(h)
        for r in (0.05, 0.2):
            pts = circle_argmax(e, r, CFG)
            assert len(pts) == k
            got = sorted(t for t, _ in pts)
            want = sorted(float(w) for w in omega)
            for g, w in zip(got, want):
                assert circ_dist(g, w) < 1e-12

    def test_magic_cubic_two_symmetric(self):
        e = expand(parse_poly("1,0,1,1i"))
        pts = circle_argmax(e, 0.1, CFG)
        assert len(pts) == 2
        (t1, m1), (t2, m2) = sorted(pts)
        assert circ_dist(t1, math.pi - t2) < 1e-12
        assert abs(m1 - m2) <= 1e-14 * m1

    def test_real_cubic_single_max(self):
        e = expand(parse_poly("1,0,1,1"))
        pts = circle_argmax(e, 0.1, CFG)
        assert len(pts) == 1
        assert abs(pts[0][0]) < 0.2

    def test_brute_force_oracle_agreement(self):
        polys = ("1,0,1,1i", "1,0,1,0.001+1i", "1,0,1,1", "1,0,0,0,1,0,1", "1,1")
        grid = 1 << 16
        for text in polys:
            p = parse_poly(text)
            e = expand(p)
            for r in (0.05, 0.1, 0.25):
                refined = circle_argmax(e, r, CFG)
                bf = brute_force_mset(p, r, grid)
                assert cluster_count(bf, grid) == len(refined)
                for t, _ in refined:
                    assert min(circ_dist(t, b) for b in bf) <= 2 * math.pi / grid

    def test_brute_force_single_cluster(self):
        bf = brute_force_mset(parse_poly("1,1"), 0.5, 4096)
        assert cluster_count(bf, 4096) == 1
        assert np.all(np.abs(bf) < 0.01)


class TestTrace:
    def test_two_term_components_on_rays(self):
        res = trace(parse_poly("1,0,1"), TraceConfig(r_min=1e-3, r_max=0.3, n_radii=60))
        assert res.n_components == 2
        assert res.stable_radius == pytest.approx(0.3)
        for t in res.tangents:
            assert t.on_ray
            assert t.omega_error < 1e-12
        for s in res.samples:
            assert min(circ_dist(s.theta, 0.0), circ_dist(s.theta, math.pi)) < 1e-12

    def test_sample_invariants(self):
        p = parse_poly("1,0,1,1i")
        cfg = TraceConfig(r_min=1e-3, r_max=0.3, n_radii=60)
        res = trace(p, cfg)
        e = expand(p)
        for s in res.samples:
            d1 = e.dmod2_dtheta(s.r, s.theta)
            d2 = e.d2mod2_dtheta2(s.r, s.theta)
            assert abs(d1) <= cfg.newton_tol * max(e.d1_bound(s.r), 1e-300)
            assert d2 <= cfg.newton_tol * e.d2_bound(s.r)
            assert abs(s.mod2 - e.mod2(s.r, s.theta)) <= 1e-12 * max(1.0, s.mod2)

    def test_one_sample_per_radius_per_curve(self):
        res = trace(parse_poly("1,0,1,1i"), TraceConfig(r_min=1e-3, r_max=0.3, n_radii=60))
        for cid in res.component_ids:
            rs = [s.r for s in res.curve_samples(cid)]
            assert len(rs) == len(set(rs)) == 60

    def test_count_consistency_non_exceptional(self):
        for text in ("1,0,1,1", "1,0,1,0.001+1i", "1,2,0,0,1i"):
            c = classify(parse_poly(text))
            assert not c.exceptional
            res = trace(parse_poly(text), TraceConfig(r_min=1e-3, r_max=0.2, n_radii=60))
            assert res.n_components == c.mu

    def test_sector_confinement(self):
        p = parse_poly("1,0,1,1i")
        res = trace(p, TraceConfig(r_min=1e-3, r_max=0.3, n_radii=80))
        k = 2
        by_id = {t.curve_id: t for t in res.tangents}
        for s in res.samples:
            if s.r <= 0.15:
                assert circ_dist(s.theta, by_id[s.curve_id].matched_omega) < math.pi / k

    def test_rotation_symmetry_even_poly(self):
        res = trace(parse_poly("1,0,0,0,1,0,1"), TraceConfig(r_min=1e-2, r_max=0.3, n_radii=80))
        assert res.n_components == 2 and res.mu == 2
        assert res.symmetry
        for pair in res.symmetry:
            assert pair.max_dev <= 1e-9
            assert pair.curve_a != pair.curve_b

    def test_floor_violation(self):
        with pytest.raises(FloorViolationError) as exc:
            trace(parse_poly("1,0,1,1i"), TraceConfig(r_min=1e-9, r_max=0.3))
        assert exc.value.required > 1e-9
        # the reported floor is admissible
        trace(
            parse_poly("1,0,1,1i"),
            TraceConfig(r_min=2 * exc.value.required, r_max=0.05, n_radii=20),
        )

    def test_monomial_rejected(self):
        with pytest.raises(MonomialAllPlaneError):
            trace(parse_poly("0,0,3"))

    def test_phantom_birth_detection(self):
        # weak odd separator: below the ambiguity radius the losing sector
        # re-enters co-maximality and a curve is born mid-schedule
        p = parse_poly("1,0,1,0,0,0.5")
        amb = ambiguity_radius(normalize(p))
        assert 1e-4 < amb < 1e-2
        cfg = TraceConfig(r_min=5e-5, r_max=0.3, n_radii=120)
        with pytest.raises(CurveBirthDeathError):
            trace(p, cfg, on_anomaly="raise")
        res = trace(p, cfg, on_anomaly="warn")
        assert any(e.kind == "birth" and e.legitimate is False for e in res.events)
        # tracing only above the ambiguity radius is clean
        res2 = trace(p, TraceConfig(r_min=3 * amb, r_max=0.3, n_radii=60))
        assert res2.n_components == 1 and not res2.events

    def test_trace_mu_two_with_threads(self, monkeypatch):
        monkeypatch.setenv("MAXMOD_THREADS", "4")
        res = trace(parse_poly("1,0,0,0,1,0,1"), TraceConfig(r_min=1e-2, r_max=0.3, n_radii=40))
        assert res.n_components == 2

    def test_floor_radius_formula(self):
        h = normalize(parse_poly("1,0,1,1i"))
        eps = np.finfo(float).eps
        want = math.sqrt(1e6 * eps * 9.0 / 2.0)
        assert floor_radius(h) == pytest.approx(want, rel=1e-12)


class TestAtInfinity:
    def test_self_reciprocal_binomial(self):
        cfg = TraceConfig(r_min=1e-2, r_max=0.2, n_radii=30)
        res0 = trace(parse_poly("1,1"), cfg)
        res1 = trace_at_infinity(parse_poly("1,1"), cfg)
        assert res1.inverted
        t0 = sorted((s.r, s.theta) for s in res0.samples)
        t1 = sorted((s.r, s.theta) for s in res1.samples)
        assert t0 == t1

    def test_cubic_reciprocal_structure(self):
        # i + z + z^3 reverses to 1 + z^2 + i z^3: two curves near infinity
        cfg = TraceConfig(r_min=1e-3, r_max=0.2, n_radii=60)
        res = trace_at_infinity(parse_poly("1i,1,0,1"), cfg)
        assert res.inverted and res.n_components == 2

    def test_involution_revisits(self):
        p = parse_poly("1,0,1,1i")
        cfg = TraceConfig(r_min=1e-3, r_max=0.2, n_radii=40)
        direct = trace(p, cfg)
        back = trace_at_infinity(reciprocal(p), cfg)
        t0 = sorted((s.r, s.theta) for s in direct.samples)
        t1 = sorted((s.r, s.theta) for s in back.samples)
        assert t0 == t1


class TestCsv:
    def test_format_and_sorting(self, tmp_path):
        cfg = TraceConfig(r_min=1e-3, r_max=0.3, n_radii=25)
        res = trace(parse_poly("1,0,1,1i"), cfg)
        path = tmp_path / "out.csv"
        write_csv(res, str(path))
        lines = path.read_text().strip().split("\n")
        assert lines[0] == "r,theta,re,im,mod,curve_id"
        rows = [line.split(",") for line in lines[1:]]
        assert len(rows) == res.n_components * cfg.n_radii
        keys = [(int(row[5]), -float(row[0])) for row in rows]
        assert keys == sorted(keys)
        r, th, re_, im, mod, _ = rows[0]
        assert float(re_) == pytest.approx(float(r) * math.cos(float(th)), rel=1e-15)
        assert float(im) == pytest.approx(float(r) * math.sin(float(th)), rel=1e-15)
        assert float(mod) > 0


class TestTruncatedInput:
    def test_trace_refuses_truncations(self):
        from maxmod import TruncatedSeriesError

        p = Polynomial((1, 0, 1, 1j), truncated=True)
        with pytest.raises(TruncatedSeriesError):
            trace(p, TraceConfig(r_min=1e-2, r_max=0.2, n_radii=20))
