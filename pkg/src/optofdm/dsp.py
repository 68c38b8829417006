"""Block transforms and frame structure for unipolar optical OFDM.

All transforms are unitary (1/sqrt(N) in both directions), so frequency and
time blocks carry the same energy and Parseval holds exactly up to rounding.
The FFT here is a radix-2 decimation-in-time implementation that operates on
the last axis, so batches of frames transform in one call.

ACO frames load data on the odd bins only, with Hermitian mirroring for a
real time signal.  The resulting time block is antisymmetric between halves,
x[i] = -x[i + N/2], which is what makes clipping at zero information-lossless:
the clipped block keeps one sample of each (+x, -x) pair and the odd bins of
its DFT come out as exactly half the loaded symbols.
"""

import numpy as np

__all__ = [
    "dft",
    "idft",
    "load_aco_frame",
    "clip_intensity",
    "is_hermitian",
    "aco_data_bins",
]


def _check_n(n):
    if n < 2 or (n & (n - 1)) != 0:
        raise ValueError(f"block length must be a power of two, got {n}")


def _bit_reverse_indices(n):
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.intp)
    bits = n.bit_length() - 1
    for _ in range(bits):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    return rev


_REV_CACHE = {}
_TWIDDLE_CACHE = {}


def _fft_core(a):
    """In-order radix-2 DIT FFT along the last axis (no normalization)."""
    n = a.shape[-1]
    if n not in _REV_CACHE:
        _REV_CACHE[n] = _bit_reverse_indices(n)
        tw = []
        m = 2
        while m <= n:
            tw.append(np.exp(-2j * np.pi * np.arange(m // 2) / m))
            m *= 2
        _TWIDDLE_CACHE[n] = tw
    a = np.asarray(a, dtype=np.complex128)[..., _REV_CACHE[n]]
    lead = a.shape[:-1]
    for stage, w in enumerate(_TWIDDLE_CACHE[n]):
        m = 2 << stage
        a = a.reshape(lead + (n // m, m))
        top = a[..., : m // 2]
        bot = a[..., m // 2 :] * w
        a = np.concatenate((top + bot, top - bot), axis=-1)
    return a.reshape(lead + (n,))


def dft(samples):
    """Unitary DFT of a time block (last axis, power-of-two length)."""
    samples = np.asarray(samples)
    _check_n(samples.shape[-1])
    return _fft_core(samples) / np.sqrt(samples.shape[-1])


def idft(bins):
    """Unitary inverse DFT.  Returns a complex array; Hermitian input
    yields an imaginary part at rounding level only."""
    bins = np.asarray(bins, dtype=np.complex128)
    _check_n(bins.shape[-1])
    return np.conj(_fft_core(np.conj(bins))) / np.sqrt(bins.shape[-1])


def aco_data_bins(n):
    """Indices of the odd data bins 1, 3, ..., N/2-1."""
    _check_n(n)
    if n % 4 != 0:
        raise ValueError(f"ACO framing needs N divisible by 4, got {n}")
    return np.arange(1, n // 2, 2)


def load_aco_frame(symbols, n):
    """Place N/4 complex symbols on the odd bins of an N-bin frame.

    Bins 1, 3, ..., N/2-1 carry the symbols, bins N/2+1, ..., N-1 their
    conjugate mirror, every even bin (including DC and N/2) is zero.
    Accepts a leading batch axis on `symbols`.
    """
    symbols = np.asarray(symbols, dtype=np.complex128)
    data = aco_data_bins(n)
    if symbols.shape[-1] != len(data):
        raise ValueError(
            f"expected {len(data)} symbols for N={n}, got {symbols.shape[-1]}")
    bins = np.zeros(symbols.shape[:-1] + (n,), dtype=np.complex128)
    bins[..., data] = symbols
    bins[..., n - data] = np.conj(symbols)
    return bins


def clip_intensity(samples):
    """Zero-clip a bipolar time block into a nonnegative intensity block."""
    return np.maximum(np.asarray(samples), 0.0)


def is_hermitian(bins, tol=1e-10):
    """True when bins[k] == conj(bins[N-k]) for all k (real time signal)."""
    bins = np.asarray(bins)
    n = bins.shape[-1]
    mirrored = np.conj(np.roll(bins[..., ::-1], 1, axis=-1))
    scale = max(np.max(np.abs(bins)), 1.0)
    return bool(np.max(np.abs(bins - mirrored)) <= tol * scale)
