"""Constellation layer: pinned labelings, Gray property, round trips."""

import math

import numpy as np
import pytest

from optofdm import constellations as cs

SQ2 = math.sqrt(2.0)


def test_qam4_pinned_table():
    c = cs.qam(4)
    want = {
        (0, 0): (1 + 1j) / SQ2,
        (0, 1): (1 - 1j) / SQ2,
        (1, 0): (-1 + 1j) / SQ2,
        (1, 1): (-1 - 1j) / SQ2,
    }
    for bits, point in want.items():
        got = cs.gray_map(c, np.array(bits, dtype=np.uint8))
        assert np.allclose(got, [point], atol=1e-12)


@pytest.mark.parametrize("name", ["qam4", "qam16", "qam64", "qam256",
                                  "pam2", "pam4", "pam8", "psk2", "psk4",
                                  "psk8", "psk16"])
def test_normalization(name):
    c = cs.make_constellation(name)
    assert abs(np.mean(c.points)) < 1e-12
    assert math.isclose(float(np.mean(np.abs(c.points) ** 2)), 1.0,
                        rel_tol=1e-12)
    assert c.size == len(c.points) == len(set(map(tuple, c.labels.tolist())))
    assert c.bits_per_symbol == int(math.log2(c.size))


@pytest.mark.parametrize("name", ["qam4", "qam16", "qam64", "pam4", "pam8",
                                  "psk8", "psk16"])
def test_map_demap_round_trip(name):
    c = cs.make_constellation(name)
    rng = np.random.default_rng(sum(map(ord, name)))
    bits = rng.integers(0, 2, 60 * c.bits_per_symbol, dtype=np.uint8)
    sym = cs.gray_map(c, bits)
    assert sym.shape == (60,)
    back = cs.gray_demap_hard(c, sym)
    assert np.all(back == bits)


@pytest.mark.parametrize("name", ["qam16", "pam8", "psk16"])
def test_demap_robust_to_small_perturbation(name):
    c = cs.make_constellation(name)
    rng = np.random.default_rng(3)
    bits = rng.integers(0, 2, 200 * c.bits_per_symbol, dtype=np.uint8)
    sym = cs.gray_map(c, bits)
    noisy = sym + 1e-6 * (rng.standard_normal(200)
                          + 1j * rng.standard_normal(200))
    assert np.all(cs.gray_demap_hard(c, noisy) == bits)


def _bit_distance(a, b):
    return int(np.sum(np.asarray(a) != np.asarray(b)))


@pytest.mark.parametrize("m", [4, 16, 64])
def test_qam_gray_property(m):
    # nearest neighbors on the square grid differ in exactly one bit
    c = cs.qam(m)
    d_min = np.min([abs(p - q) for i, p in enumerate(c.points)
                    for q in c.points[i + 1:]])
    for i, p in enumerate(c.points):
        for j, q in enumerate(c.points):
            if i != j and abs(p - q) < d_min * 1.01:
                assert _bit_distance(c.labels[i], c.labels[j]) == 1


@pytest.mark.parametrize("m", [4, 8, 16])
def test_psk_gray_property(m):
    c = cs.psk(m)
    order = np.argsort(np.angle(c.points))
    ring = c.labels[order]
    for a, b in zip(ring, np.roll(ring, -1, axis=0)):
        assert _bit_distance(a, b) == 1


@pytest.mark.parametrize("m", [2, 4, 8])
def test_pam_gray_property(m):
    c = cs.pam(m)
    assert np.max(np.abs(c.points.imag)) == 0.0
    order = np.argsort(c.points.real)
    line = c.labels[order]
    for a, b in zip(line, line[1:]):
        assert _bit_distance(a, b) == 1


def test_demap_tie_breaks_deterministically():
    c = cs.pam(2)
    mid = np.array([0.0])
    first = cs.gray_demap_hard(c, mid)
    for _ in range(5):
        assert np.all(cs.gray_demap_hard(c, mid) == first)


def test_make_constellation_parsing():
    assert cs.make_constellation("QAM-16").size == 16
    assert cs.make_constellation("pam_4").size == 4
    with pytest.raises(ValueError):
        cs.make_constellation("qam12")
    with pytest.raises(ValueError):
        cs.make_constellation("frob8")


def test_gray_map_rejects_ragged_bits():
    c = cs.qam(16)
    with pytest.raises(ValueError):
        cs.gray_map(c, np.zeros(6, dtype=np.uint8))
