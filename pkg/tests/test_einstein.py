from fractions import Fraction

import pytest

from kahlerimm.einstein import (EinsteinResult, GaugeError, NotEinstein,
                                einstein_estimate, hessian_det,
                                rescale_bochner)
from kahlerimm.models import build_model, space_form_diastasis
from kahlerimm.scalars import CScalar
from kahlerimm.series import BiSeries


def test_hessian_det_projective_line():
    # D = log(1+|z|^2): mixed Hessian 1/(1+|z|^2)^2 = 1 - 2x + 3x^2 - ...
    d = space_form_diastasis(1, 1, 4)
    h = hessian_det(d, 4)
    assert h.get_index((0,), (0,)) == CScalar(1)
    assert h.get_index((1,), (1,)) == CScalar(-2)
    assert h.get_index((2,), (2,)) == CScalar(3)


def test_hessian_det_flat():
    d = space_form_diastasis(2, 0, 3)
    h = hessian_det(d, 3)
    assert h == BiSeries(2, 2, {(0, 0): CScalar(1)})


def test_hessian_det_degree_validation():
    d = space_form_diastasis(1, 1, 3)
    with pytest.raises(ValueError):
        hessian_det(d, 0)
    with pytest.raises(ValueError):
        hessian_det(d, 9)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("b", [1, -1])
def test_space_forms_einstein_constant(n, b):
    d = space_form_diastasis(n, b, 4)
    result = einstein_estimate(d, 4)
    assert result == EinsteinResult(Fraction(2 * b * (n + 1)), flat=False)


def test_flat_metric_flagged():
    result = einstein_estimate(space_form_diastasis(2, 0, 3), 3)
    assert result.flat and result.lam == 0


def test_cigar_is_not_einstein():
    result = einstein_estimate(build_model("cigar", {}, 4), 4)
    assert isinstance(result, NotEinstein)
    assert result.location == ((2,), (2,))
    assert result.got == CScalar(Fraction(1, 2))
    assert result.want == CScalar(Fraction(1, 4))


def test_requires_bochner_gauge():
    half = space_form_diastasis(1, 1, 4).scale(Fraction(1, 2))
    with pytest.raises(GaugeError):
        einstein_estimate(half, 4)


def test_rescale_bochner_recovers_gauge():
    # c * FS is Einstein with lambda = 4/c after rescaling coordinates
    for c in (Fraction(2), Fraction(1, 3)):
        fixed = rescale_bochner(space_form_diastasis(1, 1, 4), c)
        result = einstein_estimate(fixed, 4)
        assert result == EinsteinResult(Fraction(4) / c, flat=False)


def test_rescale_bochner_rejects_odd_bidegree():
    d = BiSeries.term(1, 3, (2,), (1,)) + BiSeries.term(1, 3, (1,), (2,))
    with pytest.raises(ValueError):
        rescale_bochner(d, 2)
    with pytest.raises(ValueError):
        rescale_bochner(space_form_diastasis(1, 1, 2), 0)
