"""Unit-energy constellations with fixed Gray labelings.

The labeling is a repo constant so detector decisions are reproducible:

* Square QAM splits the label into an I group (first half of the bits) and a
  Q group, each group Gray-coding one axis.  Within an axis, bit group b
  selects the level at inverse-Gray position b of the levels listed in
  descending order (+(m-1), ..., +1, -1, ..., -(m-1)).  For QAM-4 this makes
  00 -> (+1+1j)/sqrt(2), 01 -> (+1-1j)/sqrt(2), 10 -> (-1+1j)/sqrt(2),
  11 -> (-1-1j)/sqrt(2).
* PAM-M uses the same single-axis rule on the real line.
* PSK-M places point k at angle pi/M + 2*pi*k/M with label gray(k).

All alphabets are scaled to zero mean and unit average energy.  Hard
demapping is nearest-point (Euclidean), ties resolved toward the lowest
point index.
"""

from dataclasses import dataclass, field

import numpy as np

__all__ = ["Constellation", "qam", "pam", "psk", "make_constellation",
           "gray_map", "gray_demap_hard"]


# Explicit table for the smallest alphabet; larger ones are generated by the
# same rule in _gray_axis_levels below.
_QAM4_TABLE = {
    (0, 0): 1 + 1j,
    (0, 1): 1 - 1j,
    (1, 0): -1 + 1j,
    (1, 1): -1 - 1j,
}


def _gray(i):
    return i ^ (i >> 1)


def _inverse_gray(g):
    i = 0
    while g:
        i ^= g
        g >>= 1
    return i


def _gray_axis_levels(m):
    """Level for each bit-group value 0..m-1 on one Gray-coded axis."""
    descending = np.arange(m - 1, -m, -2, dtype=float)
    return np.array([descending[_inverse_gray(b)] for b in range(m)])


@dataclass
class Constellation:
    """Finite complex alphabet with Gray bit labels.

    points[k] is the unit-energy symbol whose label is labels[k]
    (a row of bits_per_symbol bits).
    """

    name: str
    points: np.ndarray
    labels: np.ndarray
    bits_per_symbol: int = field(init=False)

    def __post_init__(self):
        self.points = np.asarray(self.points, dtype=np.complex128)
        self.labels = np.asarray(self.labels, dtype=np.uint8)
        m = len(self.points)
        if self.labels.shape != (m, int(np.log2(m))):
            raise ValueError("labels shape inconsistent with alphabet size")
        self.bits_per_symbol = self.labels.shape[1]
        # normalize: zero mean, unit average energy
        self.points = self.points - self.points.mean()
        self.points = self.points / np.sqrt(np.mean(np.abs(self.points) ** 2))
        # label value -> point index, for the mapper
        self._index_of_label = np.zeros(m, dtype=np.intp)
        weights = 1 << np.arange(self.bits_per_symbol - 1, -1, -1)
        self._index_of_label[self.labels @ weights] = np.arange(m)

    @property
    def size(self):
        return len(self.points)


def qam(m):
    """Square Gray-labeled QAM, m in {4, 16, 64, 256}."""
    side = int(round(np.sqrt(m)))
    if side * side != m or side < 2 or (side & (side - 1)) != 0:
        raise ValueError(f"square QAM needs m a power of 4, got {m}")
    axis = _gray_axis_levels(side)
    bits_axis = int(np.log2(side))
    points = np.empty(m, dtype=np.complex128)
    labels = np.empty((m, 2 * bits_axis), dtype=np.uint8)
    for bi in range(side):
        for bq in range(side):
            k = bi * side + bq
            points[k] = axis[bi] + 1j * axis[bq]
            word = (bi << bits_axis) | bq
            labels[k] = [(word >> (2 * bits_axis - 1 - t)) & 1
                         for t in range(2 * bits_axis)]
    return Constellation(f"qam{m}", points, labels)


def pam(m):
    """Real Gray-labeled PAM with m levels."""
    if m < 2 or (m & (m - 1)) != 0:
        raise ValueError(f"PAM size must be a power of two, got {m}")
    axis = _gray_axis_levels(m)
    bits = int(np.log2(m))
    labels = np.array([[(b >> (bits - 1 - t)) & 1 for t in range(bits)]
                       for b in range(m)], dtype=np.uint8)
    return Constellation(f"pam{m}", axis.astype(np.complex128), labels)


def psk(m):
    """Gray-labeled M-PSK, points offset by pi/M off the axes."""
    if m < 2 or (m & (m - 1)) != 0:
        raise ValueError(f"PSK size must be a power of two, got {m}")
    bits = int(np.log2(m))
    k = np.arange(m)
    points = np.exp(1j * (np.pi / m + 2 * np.pi * k / m))
    labels = np.array([[(_gray(i) >> (bits - 1 - t)) & 1 for t in range(bits)]
                       for i in k], dtype=np.uint8)
    return Constellation(f"psk{m}", points, labels)


def make_constellation(name):
    """Build a constellation from a name like 'qam16', 'pam4', 'psk8'."""
    name = name.lower().replace("-", "").replace("_", "")
    for prefix, factory in (("qam", qam), ("pam", pam), ("psk", psk)):
        if name.startswith(prefix):
            return factory(int(name[len(prefix):]))
    raise ValueError(f"unknown constellation {name!r}")


def gray_map(constellation, bits):
    """Map a flat bit vector (or batch of them) to constellation symbols."""
    bits = np.asarray(bits, dtype=np.uint8)
    b = constellation.bits_per_symbol
    if bits.shape[-1] % b != 0:
        raise ValueError(
            f"bit count {bits.shape[-1]} not a multiple of {b}")
    groups = bits.reshape(bits.shape[:-1] + (-1, b))
    weights = 1 << np.arange(b - 1, -1, -1)
    words = groups @ weights
    return constellation.points[constellation._index_of_label[words]]


def gray_demap_hard(constellation, received):
    """Nearest-point hard demap back to a flat bit vector.

    Ties go to the lowest point index (argmin picks the first minimum).
    """
    received = np.asarray(received, dtype=np.complex128)
    d2 = np.abs(received[..., None] - constellation.points) ** 2
    idx = np.argmin(d2, axis=-1)
    bits = constellation.labels[idx]
    return bits.reshape(bits.shape[:-2] + (-1,))
