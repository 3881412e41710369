import json

import pytest

import wexp


def test_root_datum_preset():
    rd = json.loads(wexp.root_datum("SL3"))
    assert len(rd["cartan"]) == 2


def test_length_and_word():
    assert wexp.length("SL2", "t(1)") == 2
    assert wexp.length("PGL2", "t(1)") == 1
    omega, word = wexp.reduced_word("SL2", "s0s1")
    assert omega == "t(0)"
    assert word == [0, 1]


def test_hecke_quadratic():
    assert wexp.hecke_mul("SL2", "s1", "s1") == {"t(0)": "q", "t(0)s1": "q - 1"}


def test_spherical_square():
    assert wexp.spherical_mul("SL2", [1], [1]) == {(2,): "1", (1,): "q - 1", (0,): "q^2 + q"}


def test_exp_action():
    assert wexp.exp_action("SL2", [0], [1]) == {(1,): "1", (0,): "-1"}
    assert wexp.exp_action("PGL2", [0], [1]) == {(1,): "1"}


def test_window_and_counts():
    assert wexp.gr_window_size("SL2", 3, [1]) == 13
    counted = wexp.structure_constants("SL2", 3, [1], [1])
    assert counted == {(2,): 1, (1,): 2, (0,): 9}
    assert wexp.exp_action("SL2", [1], [1]) == {(2,): "1", (1,): "q - 1", (0,): "q^2"}


def test_errors():
    with pytest.raises(wexp.ConfigError):
        wexp.spherical_mul("SL2", [-1], [1])
    with pytest.raises(ValueError):
        wexp.root_datum("E9")
