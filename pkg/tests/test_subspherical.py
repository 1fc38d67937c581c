import math

import numpy as np
import pytest

from subsphere.errors import DomainError
from subsphere.sphere import build_grid
from subsphere.subspherical import (
    DEFAULT_MEAN_RADII,
    add,
    certified_examples,
    check_mean_inequality,
    check_operator_positivity,
    check_radial_subharmonicity,
    check_trig_convexity,
    constant_function,
    cosine_multiple,
    default_probes,
    default_trig_triples,
    eval_radial_extension,
    example_cap_cosine,
    example_kernel_slice,
    example_support_function,
    maximum,
    positive_part,
    run_all_checks,
    scale,
    table_function,
)

E1 = np.array([1.0, 0.0])


@pytest.fixture(scope="module")
def circle_grid():
    return build_grid(2, 2048)


class TestRadialExtension:
    def test_power_scaling(self):
        h = constant_function(2, 1.0)
        assert eval_radial_extension(h, [0.5, 0.0], rho=2.0) == pytest.approx(0.25)

    def test_origin_is_zero(self):
        h = example_cap_cosine(E1, 1.0)
        assert eval_radial_extension(h, [0.0, 0.0]) == 0.0

    def test_cosine_gives_coordinate(self):
        h = cosine_multiple(1)
        assert eval_radial_extension(h, [0.3, 0.0], rho=1.0) == pytest.approx(0.3)


class TestExampleValues:
    def test_cap_cosine_center(self):
        h = example_cap_cosine(E1, 1.0)
        assert h(E1) == pytest.approx(1.0)

    def test_cap_cosine_boundary_zero(self):
        rho = 2.0
        h = example_cap_cosine(E1, rho)
        boundary = math.pi / (2 * rho)
        pt = np.array([math.cos(boundary), math.sin(boundary)])
        assert h(pt) == 0.0

    def test_cap_cosine_interior_value(self):
        h = example_cap_cosine(E1, 1.0)
        pt = np.array([math.cos(math.pi / 3), math.sin(math.pi / 3)])
        assert h(pt) == pytest.approx(0.5)

    def test_cap_values_within_unit_interval(self):
        h = example_cap_cosine(E1, 2.0)
        vals = h.at_angles(np.linspace(0, 2 * math.pi, 500))
        assert vals.min() >= 0.0 and vals.max() <= 1.0

    def test_kernel_slice_spot_value(self):
        h = example_kernel_slice(1.0, 1.0, E1)
        assert h(E1) == pytest.approx(8.0 / 3.0, rel=1e-12)

    def test_kernel_slice_orthogonal_zero(self):
        h = example_kernel_slice(1.0, 0.6, E1)
        assert h(np.array([0.0, 1.0])) == 0.0

    def test_kernel_slice_nonnegative(self):
        h = example_kernel_slice(1.5, 0.8, E1)
        vals = h.at_angles(np.linspace(0, 2 * math.pi, 400))
        assert vals.min() >= 0.0

    def test_support_of_origin_only(self):
        h = example_support_function([[0.0, 0.0]])
        vals = h.at_angles(np.linspace(0, 2 * math.pi, 64))
        assert np.allclose(vals, 0.0)

    def test_support_origin_and_axis_is_positive_cosine(self):
        h = example_support_function([[0.0, 0.0], [1.0, 0.0]])
        thetas = np.linspace(0, 2 * math.pi, 256, endpoint=False)
        expected = np.maximum(np.cos(thetas), 0.0)
        assert np.allclose(h.at_angles(thetas), expected)

    def test_support_of_dense_sphere_sample_is_one(self):
        angles = np.linspace(0, 2 * math.pi, 720, endpoint=False)
        pts = np.stack([np.cos(angles), np.sin(angles)], axis=1)
        h = example_support_function(np.vstack([[0.0, 0.0], pts]))
        vals = h.at_angles(np.linspace(0, 2 * math.pi, 100))
        assert np.allclose(vals, 1.0, atol=1e-4)

    def test_support_empty_set_rejected(self):
        with pytest.raises(DomainError):
            example_support_function([])


class TestCombinators:
    def test_positive_part_clips(self):
        h = positive_part(cosine_multiple(1))
        theta = 2 * math.pi / 3
        assert h.at_angles(np.array([theta]))[0] == 0.0

    def test_max_idempotent(self):
        h = example_cap_cosine(E1, 1.0)
        hm = maximum(h, h)
        thetas = np.linspace(0, 2 * math.pi, 100)
        assert np.allclose(hm.at_angles(thetas), h.at_angles(thetas))

    def test_scale_doubles(self):
        h = example_cap_cosine(E1, 1.0)
        h2 = scale(2.0, h)
        thetas = np.linspace(0, 2 * math.pi, 50)
        assert np.allclose(h2.at_angles(thetas), 2 * h.at_angles(thetas))

    def test_scale_rejects_negative(self):
        with pytest.raises(DomainError):
            scale(-1.0, constant_function(2, 1.0))

    def test_add_and_order_propagation(self):
        h1 = example_cap_cosine(E1, 1.0)
        h2 = example_cap_cosine(E1, 2.0)
        hs = add(h1, h2)
        assert hs.rho == 2.0
        thetas = np.linspace(0, 2 * math.pi, 50)
        assert np.allclose(hs.at_angles(thetas), h1.at_angles(thetas) + h2.at_angles(thetas))

    def test_dimension_mismatch(self):
        with pytest.raises(DomainError):
            maximum(constant_function(2, 1.0), constant_function(3, 1.0))

    def test_positive_part_detects_crossings(self):
        h = positive_part(cosine_multiple(1))
        kinks = np.sort(np.array(h.kink_angles))
        assert np.allclose(kinks, [math.pi / 2, 3 * math.pi / 2], atol=1e-9)


class TestTrigConvexity:
    def test_cosine_equality(self):
        h = cosine_multiple(1)
        rep = check_trig_convexity(h, 1.0, [(-math.pi / 4, 0.0, math.pi / 4)])
        assert abs(rep.worst_residual) < 1e-12 and rep.passed

    def test_constant_strict_inequality(self):
        h = constant_function(2, 1.0)
        rep = check_trig_convexity(h, 1.0, [(0.0, math.pi / 4, math.pi / 2)])
        assert rep.worst_residual == pytest.approx(math.sqrt(2) - 1)

    def test_misdeclared_order_fails(self):
        h = cosine_multiple(2)
        rep = check_trig_convexity(h, 1.0, [(-math.pi / 3, 0.0, math.pi / 3)])
        assert rep.worst_residual == pytest.approx(-2.0)
        assert not rep.passed

    def test_window_violation_rejected(self):
        h = constant_function(2, 1.0)
        with pytest.raises(DomainError):
            check_trig_convexity(h, 1.0, [(0.0, 1.0, 0.5 + math.pi)])
        with pytest.raises(DomainError):
            check_trig_convexity(h, 1.0, [(0.5, 0.2, 0.9)])


class TestOperatorPositivity:
    def test_cap_smooth_region_residual_near_zero(self):
        rho = 2.0
        h = example_cap_cosine(E1, rho)
        rep = check_operator_positivity(h, rho, 1e-3)
        assert rep.passed
        assert abs(rep.worst_residual) <= 10 * (1e-3) ** 2 * 1.1

    def test_constant_residual_is_order_term(self):
        h = constant_function(2, 1.0)
        rep = check_operator_positivity(h, 1.0, 1e-3)
        assert rep.worst_residual == pytest.approx(1.0, rel=1e-9)

    def test_misdeclared_cosine_fails_with_residual_minus_three(self):
        h = cosine_multiple(2)
        rep = check_operator_positivity(h, 1.0, 1e-3)
        assert not rep.passed
        assert rep.worst_residual == pytest.approx(-3.0, rel=1e-4)

    def test_kink_spike_is_positive_and_excluded(self):
        h = example_cap_cosine(E1, 1.0)
        rep = check_operator_positivity(h, 1.0, 1e-3)
        assert rep.passed
        assert rep.details["excluded"] > 0
        assert rep.details["spike_max"] > 100.0

    def test_bad_delta(self):
        with pytest.raises(DomainError):
            check_operator_positivity(constant_function(2, 1.0), 1.0, 0.0)

    def test_table_function_checked_on_its_knots(self):
        thetas = np.linspace(0, 2 * math.pi, 512, endpoint=False)
        h = table_function(thetas, np.cos(thetas), rho=1.0)
        step = float(thetas[1] - thetas[0])
        rep = check_operator_positivity(h, 1.0, step, thetas=thetas)
        assert rep.passed


class TestMeanInequality:
    def test_constant_passes_everywhere(self, circle_grid):
        h = constant_function(2, 1.0)
        rep = check_mean_inequality(h, 1.0, circle_grid, [0.5])
        assert rep.passed and rep.worst_residual >= 0.0

    def test_cap_passes_at_own_center(self, circle_grid):
        h = example_cap_cosine(E1, 1.0)
        rep = check_mean_inequality(h, 1.0, circle_grid, DEFAULT_MEAN_RADII)
        assert rep.passed

    def test_misdeclared_cosine_fails_all_radii(self, circle_grid):
        h = cosine_multiple(2)
        rep = check_mean_inequality(h, 1.0, circle_grid, DEFAULT_MEAN_RADII)
        assert not rep.passed
        assert rep.details["radii_succeeding_at_worst"] == []

    def test_empty_radii_rejected(self, circle_grid):
        with pytest.raises(DomainError):
            check_mean_inequality(constant_function(2, 1.0), 1.0, circle_grid, [])


class TestRadialSubharmonicity:
    def test_norm_is_strictly_submean(self, circle_grid):
        h = constant_function(2, 1.0)
        probes = [(np.array([0.5, 0.0]), 0.04), (np.array([0.0, 1.5]), 0.1)]
        rep = check_radial_subharmonicity(h, 1.0, circle_grid, probes)
        assert rep.passed and rep.worst_residual > 0.0

    def test_positive_part_of_cosine_passes(self, circle_grid):
        h = positive_part(cosine_multiple(1))
        rep = check_radial_subharmonicity(h, 1.0, circle_grid, default_probes(circle_grid))
        assert rep.passed

    def test_misdeclared_cosine_fails(self, circle_grid):
        h = cosine_multiple(2)
        rep = check_radial_subharmonicity(h, 1.0, circle_grid, default_probes(circle_grid))
        assert not rep.passed

    def test_probe_constraints_enforced(self, circle_grid):
        h = constant_function(2, 1.0)
        with pytest.raises(DomainError):
            check_radial_subharmonicity(h, 1.0, circle_grid, [(np.array([0.05, 0.0]), 0.001)])
        with pytest.raises(DomainError):
            check_radial_subharmonicity(h, 1.0, circle_grid, [(np.array([0.5, 0.0]), 0.2)])


class TestLibraryConsistency:
    def test_all_library_examples_pass_every_applicable_check(self, circle_grid):
        for h, rho in certified_examples(2):
            for rep in run_all_checks(h, rho, grid=circle_grid):
                assert rep.passed, f"{h.label} failed {rep.criterion}: {rep.worst_residual}"

    def test_higher_dimension_library(self):
        grid = build_grid(4, 24)
        for h, rho in certified_examples(4):
            for rep in run_all_checks(h, rho, grid=grid):
                assert rep.passed, f"{h.label} failed {rep.criterion}: {rep.worst_residual}"

    def test_undeclared_slice_parameters_fail(self, circle_grid):
        # r < 1 slices vanish like sqrt at the support boundary: every
        # criterion must reject them, which documents why the certified
        # library pins r = 1.
        h = example_kernel_slice(1.0, 0.5, E1)
        reports = run_all_checks(h, 1.0, grid=circle_grid)
        assert all(not rep.passed for rep in reports)

    def test_cap_of_high_order_fails_off_the_circle(self):
        grid = build_grid(4, 32)
        cap = example_cap_cosine([1.0, 0.0, 0.0, 0.0], 2.0)
        rep = check_radial_subharmonicity(cap, 2.0, grid, default_probes(grid))
        assert not rep.passed


class TestStructuralProperties:
    def test_operator_residual_order_monotonicity(self):
        # residuals at two orders differ exactly by the shift of the
        # zero-order term: rho'(rho'+m-2) - rho(rho+m-2) times h
        h = example_cap_cosine(E1, 1.0)
        n = 4096
        thetas = 2 * math.pi * np.arange(n) / n
        delta = 2 * math.pi / n
        vals = h.at_angles(thetas)
        lap = (np.roll(vals, -1) - 2 * vals + np.roll(vals, 1)) / delta**2
        rho1, rho2 = 1.0, 2.5
        r1 = lap + rho1**2 * vals
        r2 = lap + rho2**2 * vals
        shift = (rho2 * rho2 - rho1 * rho1) * vals
        assert np.allclose(r2 - r1, shift, atol=1e-9)
        assert (shift >= 0).all()

    def test_closure_under_max_at_probes(self, circle_grid):
        h1 = example_cap_cosine(E1, 1.0)
        h2 = example_support_function([[0.0, 0.0], [0.0, 0.8]])
        probes = default_probes(circle_grid)
        rep1 = check_radial_subharmonicity(h1, 1.0, circle_grid, probes)
        rep2 = check_radial_subharmonicity(h2, 1.0, circle_grid, probes)
        repm = check_radial_subharmonicity(maximum(h1, h2), 1.0, circle_grid, probes)
        assert rep1.passed and rep2.passed and repm.passed

    def test_positive_part_never_decreases_operator_residual_where_negative(self):
        h = cosine_multiple(1)
        hp = positive_part(h)
        n = 2000
        thetas = 2 * math.pi * np.arange(n) / n
        delta = 2 * math.pi / n
        vals = h.at_angles(thetas)
        res_h = (np.roll(vals, -1) - 2 * vals + np.roll(vals, 1)) / delta**2 + vals
        vp = hp.at_angles(thetas)
        res_p = (np.roll(vp, -1) - 2 * vp + np.roll(vp, 1)) / delta**2 + vp
        # away from the two crossings, compare where h < 0
        near_kink = np.zeros(n, dtype=bool)
        for kink in hp.kink_angles:
            near_kink |= np.abs((thetas - kink + math.pi) % (2 * math.pi) - math.pi) <= 2 * delta
        region = (vals < 0) & ~near_kink
        assert (res_p[region] >= res_h[region] - 1e-9).all()

    def test_default_triples_respect_window(self):
        trips = default_trig_triples(2.0)
        assert ((trips[:, 2] - trips[:, 0]) < math.pi / 2.0).all()
        assert ((trips[:, 0] < trips[:, 1]) & (trips[:, 1] < trips[:, 2])).all()
