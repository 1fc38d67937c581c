import math

import pytest

from subsphere.errors import DomainError
from subsphere.normalization import (
    DimensionContext,
    ball_volume,
    ball_volume_parity_form,
    hausdorff_weight,
    norm_constants,
    riesz_normalizer,
    riesz_normalizer_complex_form,
    sphere_area,
)

REL = 1e-12


def rel_err(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def test_ball_volume_spot_values():
    assert rel_err(ball_volume(2), math.pi) < REL
    assert rel_err(ball_volume(1), 2.0) < REL
    assert rel_err(ball_volume(4), math.pi**2 / 2) < REL
    # odd-dimension cross-check against Gamma(3/2) = sqrt(pi)/2
    assert rel_err(ball_volume(1), math.pi**0.5 / (math.sqrt(math.pi) / 2)) < REL


def test_sphere_area_spot_values():
    assert rel_err(sphere_area(2), 2 * math.pi) < REL
    assert rel_err(sphere_area(3), 4 * math.pi) < REL
    assert rel_err(sphere_area(4), 2 * math.pi**2) < REL


def test_riesz_normalizer_spot_values():
    assert rel_err(riesz_normalizer(2), 2 * math.pi) < REL
    assert rel_err(riesz_normalizer(3), 4 * math.pi) < REL
    assert rel_err(riesz_normalizer(4), 4 * math.pi**2) < REL


def test_hausdorff_weight():
    assert hausdorff_weight(0) == 1.0
    assert rel_err(hausdorff_weight(2), math.pi) < REL
    # p = 2n - 2 with n = 2 is the same normalizer
    assert hausdorff_weight(2 * 2 - 2) == hausdorff_weight(2)


@pytest.mark.parametrize("m", range(2, 13))
def test_constant_identities(m):
    assert rel_err(sphere_area(m), m * ball_volume(m)) < REL
    assert rel_err(riesz_normalizer(m), (1 + max(0, m - 3)) * sphere_area(m)) < REL


@pytest.mark.parametrize("m", range(1, 13))
def test_parity_form_agrees_with_gamma_form(m):
    assert rel_err(ball_volume_parity_form(m), ball_volume(m)) < REL


@pytest.mark.parametrize("n", range(1, 7))
def test_complex_form_of_riesz_normalizer(n):
    assert rel_err(riesz_normalizer(2 * n), riesz_normalizer_complex_form(n)) < REL


def test_domain_errors():
    with pytest.raises(DomainError):
        ball_volume(0)
    with pytest.raises(DomainError):
        sphere_area(1)
    with pytest.raises(DomainError):
        riesz_normalizer(1)
    with pytest.raises(DomainError):
        hausdorff_weight(-1)


def test_dimension_context():
    ctx = DimensionContext.of_complex(2)
    assert ctx.m == 4 and ctx.n == 2 and ctx.is_complex
    assert not DimensionContext.real(3).is_complex
    with pytest.raises(DomainError):
        DimensionContext(m=3, n=2)
    with pytest.raises(DomainError):
        DimensionContext(m=0)


def test_norm_constants_bundle():
    c = norm_constants(4)
    assert c.as_dict() == {
        "ball_volume": ball_volume(4),
        "sphere_area": sphere_area(4),
        "riesz_normalizer": riesz_normalizer(4),
    }
