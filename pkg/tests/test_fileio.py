import json

import numpy as np
import pytest

import oracles
from qudit_concurrence.errors import DensityMatrixError, NormalizationError, StateFormatError
from qudit_concurrence.fileio import dumps, from_dict, load_state, loads, save
from qudit_concurrence.states import DensityMatrix, PureState, catalog_state, werner


def test_pure_round_trip(tmp_path):
    rng = np.random.default_rng(1)
    for shape in [(2, 2), (2, 3), (3, 3), (4, 3)]:
        ps = PureState(oracles.random_coeffs(rng, *shape))
        path = tmp_path / "s.json"
        save(ps, path)
        back = load_state(path)
        assert isinstance(back, PureState)
        assert np.max(np.abs(back.coeffs - ps.coeffs)) <= 1e-15


def test_density_round_trip(tmp_path):
    rng = np.random.default_rng(2)
    rho = DensityMatrix(oracles.random_density(rng, 6), 2, 3)
    path = tmp_path / "rho.json"
    save(rho, path)
    back = load_state(path)
    assert (back.dim_a, back.dim_b) == (2, 3)
    assert np.max(np.abs(back.matrix - rho.matrix)) <= 1e-15


def test_upper_triangle_only():
    doc = json.loads(dumps(werner(0.5)))
    assert all(e["row"] <= e["col"] for e in doc["entries"])


def test_density_dims_from_square():
    doc = {"dim": 4, "entries": [{"row": k, "col": k, "re": 0.25, "im": 0} for k in range(1, 5)]}
    rho = from_dict(doc)
    assert (rho.dim_a, rho.dim_b) == (2, 2)
    with pytest.raises(StateFormatError):
        from_dict({"dim": 6, "entries": []})


def test_normalize_flag():
    doc = {"dimA": 2, "dimB": 2, "amplitudes": [{"i": 1, "j": 1, "re": 0.9, "im": 0},
                                                 {"i": 2, "j": 2, "re": 0.9, "im": 0}]}
    with pytest.raises(NormalizationError):
        from_dict(doc)
    ps = from_dict(doc, normalize=True)
    np.testing.assert_allclose(ps.coeffs, catalog_state("bell.phi+").coeffs, atol=1e-15)
    dens = {"dim": 4, "entries": [{"row": k, "col": k, "re": 1, "im": 0} for k in range(1, 5)]}
    with pytest.raises(DensityMatrixError):
        from_dict(dens)
    np.testing.assert_allclose(from_dict(dens, normalize=True).matrix, np.eye(4) / 4)


@pytest.mark.parametrize("text", [
    "not json",
    "[1, 2]",
    '{"dimA": 2}',
    '{"dimA": 0, "dimB": 2, "amplitudes": []}',
    '{"dimA": 2, "dimB": 2, "amplitudes": [{"i": 3, "j": 1, "re": 1}]}',
    '{"dimA": 2, "dimB": 2, "amplitudes": [{"i": 1, "re": 1}]}',
    '{"dimA": 2, "dimB": 2, "amplitudes": [{"i": 1, "j": 1, "re": "x"}]}',
    '{"dim": 4, "entries": [{"row": 2, "col": 1, "re": 1}]}',
    '{"dim": 4, "entries": [{"row": 1, "col": 1, "re": 1, "im": 0.5}]}',
    '{"dimA": 2, "dimB": 3, "dim": 4, "entries": []}',
])
def test_malformed_documents(text):
    with pytest.raises(StateFormatError):
        loads(text)
