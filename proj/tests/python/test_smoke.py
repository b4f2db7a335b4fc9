import json
import os

import pytest

import wsbound

MODELS = os.environ.get(
    "WSBOUND_MODELS",
    os.path.join(os.path.dirname(__file__), "..", "..", "models"),
)


def load(name):
    return wsbound.load_model(os.path.join(MODELS, name))


def test_semigroup_surface():
    h = wsbound.NumericalSemigroup.from_generators([3, 5, 7])
    assert h.gaps() == [1, 2, 4]
    assert h.multiplicity() == 3
    assert h.conductor() == 5
    assert 8 in h and 4 not in h
    assert h.apery_set(8) == [0, 9, 10, 3, 12, 5, 6, 7]
    assert len(h.shifted_sum_complement(8)) == 24


def test_single_point_bounds():
    h = wsbound.NumericalSemigroup.from_generators([3, 5, 7])
    assert wsbound.geil_matsumoto_bound(h, 8) == 25
    assert wsbound.lewittes_bound(h, 8) == 25
    assert wsbound.single_point_t_bound(h, 8) == 21
    assert wsbound.hasse_weil_bound(3, 8) == 25
    h45 = wsbound.NumericalSemigroup.from_generators([4, 5])
    assert wsbound.geil_matsumoto_bound(h45, 8) == 33


def test_klein_model():
    model = load("klein_quartic.model")
    assert model.q == 8 and model.genus == 3
    assert model.distinguished == ["P1", "P2"]
    assert wsbound.place_semigroup(model, 0).generators() == [3, 5, 7]
    assert wsbound.horizon(model, 0) == 29
    assert wsbound.multipoint_bound(model) == 24

    cert = wsbound.min_weight_path(model, 4)
    assert cert.weight == 22 and cert.bound == 24

    text = wsbound.certificate_json(cert, model)
    assert json.loads(text)["bound"] == 24
    assert wsbound.verify_certificate(text)["bound"] == 24


def test_genus6_model():
    model = load("genus6_newton.model")
    assert wsbound.multipoint_bound(model) <= 31
    p2 = model.restricted_to(["P2"])
    assert wsbound.multipoint_bound(p2) == 33
    cert = wsbound.t_min_weight_path(p2, 0, 5)
    assert cert.q_bound == 26
    assert cert.total_bound == 31


def test_delta_and_witnesses():
    model = load("klein_quartic.model")
    value, witness = wsbound.delta(model, [23, 0], 0)
    assert value == 0
    assert witness["kind"] == "decomposition"
    assert witness["mu"] + model.q * witness["lambda"] == 24
    value, witness = wsbound.delta(model, [-1, 0], 0)
    assert value == 1 and witness["kind"] == "non-negligible"


def test_errors_are_python_exceptions():
    with pytest.raises(wsbound.WsboundError):
        wsbound.parse_model("{}")
    with pytest.raises(wsbound.WsboundError):
        wsbound.NumericalSemigroup.from_generators([2, 4])
