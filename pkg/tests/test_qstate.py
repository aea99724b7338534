import json

import numpy as np
import pytest

from twoatom.errors import DimensionError, StateFormatError, StateValidationError
from twoatom.linalg import tensor_product
from twoatom.qstate import (
    BASIS_LABELS,
    dicke_state,
    load_state,
    product_state,
    save_state,
    state_from_dict,
    state_to_dict,
    validate,
    werner_state,
)

from conftest import random_density_matrix

DICKE_MATRIX = np.array(
    [
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, 0.5, 0.0],
        [0.0, 0.5, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ]
)


def test_dicke_matrix():
    np.testing.assert_allclose(dicke_state().matrix, DICKE_MATRIX, atol=1e-15)


def test_dicke_is_pure_projector():
    assert dicke_state().purity() == pytest.approx(1.0, abs=1e-12)


def test_dicke_from_tensor_products():
    # (|eg> + |ge>)(<eg| + <ge|)/2 assembled term by term
    ket_e = np.array([0.0, 1.0])
    ket_g = np.array([1.0, 0.0])
    terms = np.zeros((4, 4), dtype=complex)
    for left in ((ket_e, ket_g), (ket_g, ket_e)):
        for right in ((ket_e, ket_g), (ket_g, ket_e)):
            terms += tensor_product(
                np.outer(left[0], right[0].conj()), np.outer(left[1], right[1].conj())
            )
    np.testing.assert_allclose(terms / 2.0, dicke_state().matrix, atol=1e-15)


@pytest.mark.parametrize(
    "alpha_sq,expected_vector",
    [
        (1.0, [1.0, 0.0, 0.0, 0.0]),
        (0.0, [0.0, 0.0, 0.0, 1.0]),
    ],
)
def test_product_state_endpoints(alpha_sq, expected_vector):
    expected = np.outer(expected_vector, expected_vector)
    np.testing.assert_allclose(product_state(alpha_sq).matrix, expected, atol=1e-15)


def test_product_state_balanced():
    np.testing.assert_allclose(
        product_state(0.5).matrix, np.full((4, 4), 0.25), atol=1e-15
    )


def test_product_state_entries():
    alpha_sq = 0.3
    a = np.sqrt(alpha_sq)
    b = np.sqrt(1 - alpha_sq)
    m = product_state(alpha_sq).matrix
    assert m[0, 0] == pytest.approx(a**4)
    assert m[0, 1] == pytest.approx(a**3 * b)
    assert m[1, 2] == pytest.approx(a**2 * b**2)
    assert m[3, 3] == pytest.approx(b**4)


def test_product_state_is_pure():
    for alpha_sq in np.linspace(0.0, 1.0, 11):
        assert product_state(alpha_sq).purity() == pytest.approx(1.0, abs=1e-12)


def test_product_state_swap_symmetry():
    swap = np.eye(4)[[0, 2, 1, 3]]  # exchanges the eg and ge axes
    for alpha_sq in (0.2, 0.5, 0.9):
        m = product_state(alpha_sq).matrix
        np.testing.assert_allclose(swap @ m @ swap.T, m, atol=1e-15)


def test_werner_extremes():
    np.testing.assert_allclose(werner_state(0.0).matrix, np.eye(4) / 4, atol=1e-15)
    np.testing.assert_allclose(werner_state(1.0).matrix, dicke_state().matrix, atol=1e-15)


def test_werner_half():
    m = werner_state(0.5).matrix
    np.testing.assert_allclose(np.diag(m).real, [1 / 8, 3 / 8, 3 / 8, 1 / 8], atol=1e-15)
    assert m[1, 2] == pytest.approx(0.25)
    assert m[2, 1] == pytest.approx(0.25)


def test_werner_is_mixed_below_one():
    assert werner_state(0.7).purity() < 1.0
    assert werner_state(0.0).purity() == pytest.approx(0.25, abs=1e-12)


@pytest.mark.parametrize("bad", [-0.1, 1.1, np.nan])
def test_parameter_range_checks(bad):
    with pytest.raises(ValueError):
        product_state(bad)
    with pytest.raises(ValueError):
        werner_state(bad)


def test_validate_accepts_maximally_mixed():
    validate(np.eye(4) / 4)


def test_validate_accepts_random_states():
    rng = np.random.default_rng(5)
    for _ in range(20):
        validate(random_density_matrix(rng))


def test_validate_flags_constructed_negativity():
    # trace of this matrix is exactly 1, so only the negativity check fires
    with pytest.raises(StateValidationError) as excinfo:
        validate(np.diag([0.5, 0.6, 0.0, -0.1]))
    defects = dict(excinfo.value.defects)
    assert defects["negativity"] == pytest.approx(0.1)


def test_validate_reports_all_defects_at_once():
    with pytest.raises(StateValidationError) as excinfo:
        validate(np.diag([0.5, 0.7, 0.0, -0.1]))
    names = [name for name, _ in excinfo.value.defects]
    assert "trace deviation" in names
    assert "negativity" in names


def test_validate_reports_hermiticity_defect():
    m = np.eye(4, dtype=complex) / 4
    m[0, 1] = 0.2
    with pytest.raises(StateValidationError) as excinfo:
        validate(m)
    defects = dict(excinfo.value.defects)
    assert defects["hermiticity violation"] == pytest.approx(0.2)


def test_validate_rejects_non_finite():
    m = np.eye(4) / 4
    m[0, 0] = np.nan
    with pytest.raises(StateValidationError):
        validate(m)


def test_validate_rejects_wrong_shape():
    with pytest.raises(DimensionError):
        validate(np.eye(2) / 2)


def test_matrix_is_read_only():
    dm = dicke_state()
    with pytest.raises(ValueError):
        dm.matrix[0, 0] = 1.0


def test_entry_by_label():
    dm = werner_state(0.5)
    assert dm.entry("eg", "ge") == pytest.approx(0.25)
    assert dm.entry("gg", "gg") == pytest.approx(0.125)


def test_json_dict_round_trip():
    dm = werner_state(0.37)
    again = state_from_dict(state_to_dict(dm))
    np.testing.assert_array_equal(again.matrix, dm.matrix)


def test_json_file_round_trip(tmp_path):
    dm = product_state(0.42)
    path = tmp_path / "state.json"
    save_state(dm, path)
    again = load_state(path)
    np.testing.assert_array_equal(again.matrix, dm.matrix)
    assert json.loads(path.read_text())["basis"] == list(BASIS_LABELS)


@pytest.mark.parametrize(
    "mangle",
    [
        lambda d: d.update(dim=2),
        lambda d: d.update(basis=["00", "01", "10", "11"]),
        lambda d: d.update(entries=[[0.0] * 4] * 4),
        lambda d: d.update(entries="nonsense"),
        lambda d: d.pop("entries"),
    ],
)
def test_state_from_dict_schema_errors(mangle):
    doc = state_to_dict(dicke_state())
    mangle(doc)
    with pytest.raises(StateFormatError):
        state_from_dict(doc)


def test_state_from_dict_validates_physics():
    doc = state_to_dict(dicke_state())
    doc["entries"][0][0] = [0.5, 0.0]  # breaks the trace
    with pytest.raises(StateValidationError):
        state_from_dict(doc)


def test_load_state_rejects_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    with pytest.raises(StateFormatError):
        load_state(path)
