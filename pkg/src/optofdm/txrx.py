"""Transmit chains, intensity channel, and the receiver suite.

Three unipolar schemes share one pair structure: every transmitted bipolar
sample x appears in the channel as a clipped pair (max(x,0) in one slot,
max(-x,0) in a partner slot).  Differencing the pair gives y1 = x + z1 and
summing gives y2 = |x| + z2, with z1, z2 independent Gaussians of variance
2*sigma^2.  Receivers differ only in how they combine a pair into an
estimate of x; detection is then a unitary DFT back to the data bins and a
nearest-point demap.

Pairings:
* ACO:     (i, i + N/2) within one block of N samples.
* Flip:    (block1[i], block2[i]) across two consecutive blocks.
* PAM-DMT: (i, N - i) within one block; the two self-paired samples
  0 and N/2 (always zero signal) pair with each other in slot 0.

All functions accept a leading batch axis so Monte-Carlo trials vectorize.
"""

from dataclasses import dataclass

import numpy as np

from .dsp import aco_data_bins, clip_intensity, dft, idft, load_aco_frame
from .constellations import gray_demap_hard, gray_map

__all__ = [
    "SCHEMES", "ChannelSpec", "TxFrame", "EquivalentObservation",
    "SnrOperatingPoint", "symbol_scale", "payload_bits_per_frame",
    "channel_uses_per_frame", "tx_aco", "tx_flip", "tx_pamdmt", "transmit",
    "channel", "split_pairs", "reconstruct", "true_sign_pattern",
    "rx_conventional", "rx_negative_clipping", "rx_noise_filtering",
    "rx_pairwise_clip", "rx_decision_directed", "rx_genie",
]

SCHEMES = ("aco", "flip", "pamdmt")


@dataclass
class ChannelSpec:
    """Intensity channel r = gain*s + w, w ~ N(0, sigma^2), gain fixed 1."""
    sigma: float
    gain: float = 1.0

    def __post_init__(self):
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")


@dataclass
class TxFrame:
    scheme: str
    payload_bits: np.ndarray
    freq: np.ndarray
    intensity: np.ndarray  # (..., N) or (..., 2, N) for flip


@dataclass
class EquivalentObservation:
    """The per-pair observation (y1, y2) of one received frame."""
    scheme: str
    n: int
    y1: np.ndarray
    y2: np.ndarray


@dataclass
class SnrOperatingPoint:
    """Operating point in both SNR conventions.

    optical SNR = E[S]/sigma, electrical SNR = E[S^2]/sigma^2; for
    clipped-Gaussian inputs E[S] = sigma_x/sqrt(2*pi), E[S^2] = sigma_x^2/2,
    hence SNR_e = pi * SNR_o^2 on a linear scale.
    """
    snr_optical_db: float
    snr_electrical_db: float
    sigma_x: float


def _check_scheme(scheme):
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")


def _full_bins(n):
    """Data bins 1..N/2-1 used by flip and pamdmt (DC, Nyquist nulled)."""
    return np.arange(1, n // 2)


def symbol_scale(scheme, n, sigma_x):
    """Amplitude multiplying unit-energy symbols so the bipolar time signal
    has per-sample std exactly sigma_x."""
    _check_scheme(scheme)
    if scheme == "aco":
        return np.sqrt(2.0) * sigma_x  # N/2 active bins out of N
    return sigma_x * np.sqrt(n / (n - 2.0))  # N-2 active bins out of N


def payload_bits_per_frame(scheme, n, constellation):
    _check_scheme(scheme)
    k = n // 4 if scheme == "aco" else n // 2 - 1
    return k * constellation.bits_per_symbol


def channel_uses_per_frame(scheme, n):
    """Flip spends two blocks per frame, the others one."""
    return 2 * n if scheme == "flip" else n


def _load_full_frame(symbols, n, imag_axis=False):
    symbols = np.asarray(symbols, dtype=np.complex128)
    bins = np.zeros(symbols.shape[:-1] + (n,), dtype=np.complex128)
    data = _full_bins(n)
    loaded = 1j * symbols.real if imag_axis else symbols
    bins[..., data] = loaded
    bins[..., n - data] = np.conj(loaded)
    return bins


def _check_bits(bits, scheme, n, constellation):
    bits = np.asarray(bits, dtype=np.uint8)
    need = payload_bits_per_frame(scheme, n, constellation)
    if bits.shape[-1] != need:
        raise ValueError(
            f"{scheme} frame with N={n} needs {need} bits, "
            f"got {bits.shape[-1]}")
    return bits


def tx_aco(bits, constellation, n, sigma_x):
    """ACO frame: odd bins loaded, time block clipped at zero."""
    bits = _check_bits(bits, "aco", n, constellation)
    syms = gray_map(constellation, bits)
    freq = load_aco_frame(symbol_scale("aco", n, sigma_x) * syms, n)
    x = idft(freq).real
    return TxFrame("aco", bits, freq, clip_intensity(x))


def tx_flip(bits, constellation, n, sigma_x):
    """Flip frame: positive part and negated negative part in two blocks."""
    bits = _check_bits(bits, "flip", n, constellation)
    syms = gray_map(constellation, bits)
    freq = _load_full_frame(symbol_scale("flip", n, sigma_x) * syms, n)
    x = idft(freq).real
    s = np.stack((clip_intensity(x), clip_intensity(-x)), axis=-2)
    return TxFrame("flip", bits, freq, s)


def tx_pamdmt(bits, constellation, n, sigma_x):
    """PAM-DMT frame: real PAM on the imaginary (sine) bin components."""
    if np.max(np.abs(constellation.points.imag)) > 1e-12:
        raise ValueError("PAM-DMT needs a real PAM constellation")
    bits = _check_bits(bits, "pamdmt", n, constellation)
    syms = gray_map(constellation, bits)
    freq = _load_full_frame(
        symbol_scale("pamdmt", n, sigma_x) * syms, n, imag_axis=True)
    x = idft(freq).real
    return TxFrame("pamdmt", bits, freq, clip_intensity(x))


_TX = {"aco": tx_aco, "flip": tx_flip, "pamdmt": tx_pamdmt}


def transmit(scheme, bits, constellation, n, sigma_x):
    _check_scheme(scheme)
    return _TX[scheme](bits, constellation, n, sigma_x)


def channel(intensity, spec, rng):
    """r = s + w with w IID N(0, sigma^2)."""
    intensity = np.asarray(intensity)
    return spec.gain * intensity + rng.normal(0.0, spec.sigma,
                                              size=intensity.shape)


# ---------------------------------------------------------------------------
# pair decomposition
# ---------------------------------------------------------------------------

def _pair_views(received, scheme, n):
    """First and second sample of every pair, as (..., L) views."""
    if scheme == "aco":
        return received[..., : n // 2], received[..., n // 2:]
    if scheme == "flip":
        return received[..., 0, :], received[..., 1, :]
    # pamdmt: slot 0 holds (r[0], r[N/2]); slot j holds (r[j], r[N-j])
    first = received[..., : n // 2]
    idx = np.concatenate(([n // 2], np.arange(n - 1, n // 2, -1)))
    return first, received[..., idx]


def split_pairs(received, scheme, n=None):
    """Difference/sum decomposition of a received frame into (Y1, Y2)."""
    _check_scheme(scheme)
    received = np.asarray(received)
    if n is None:
        n = received.shape[-1]
    a, b = _pair_views(received, scheme, n)
    return EquivalentObservation(scheme, n, a - b, a + b)


def reconstruct(obs):
    """Invert split_pairs exactly."""
    a = (obs.y1 + obs.y2) / 2.0
    b = (obs.y2 - obs.y1) / 2.0
    n = obs.n
    if obs.scheme == "aco":
        return np.concatenate((a, b), axis=-1)
    if obs.scheme == "flip":
        return np.stack((a, b), axis=-2)
    r = np.empty(a.shape[:-1] + (n,), dtype=a.dtype)
    r[..., : n // 2] = a
    r[..., n // 2] = b[..., 0]
    r[..., n // 2 + 1:] = b[..., :0:-1]
    return r


def true_sign_pattern(frame):
    """Boolean per pair: does the first slot carry the positive part."""
    if frame.scheme == "flip":
        return frame.intensity[..., 0, :] > 0
    n = frame.intensity.shape[-1]
    return frame.intensity[..., : n // 2] > 0


# ---------------------------------------------------------------------------
# detection back-end shared by all receivers
# ---------------------------------------------------------------------------

def _detect(xhat, scheme, n, constellation, ref_amplitude):
    """Demap a per-pair bipolar estimate to bits via the data bins."""
    if scheme == "aco":
        full = np.concatenate((xhat, -xhat), axis=-1)
        sym_obs = dft(full)[..., aco_data_bins(n)]
    elif scheme == "flip":
        sym_obs = dft(xhat)[..., _full_bins(n)]
    else:
        full = np.zeros(xhat.shape[:-1] + (n,), dtype=xhat.dtype)
        full[..., 1: n // 2] = xhat[..., 1:]
        full[..., n // 2 + 1:] = -xhat[..., :0:-1]
        sym_obs = dft(full)[..., _full_bins(n)].imag
    return gray_demap_hard(constellation, sym_obs / ref_amplitude)


def _pairs_of(obs):
    a = (obs.y1 + obs.y2) / 2.0
    b = (obs.y2 - obs.y1) / 2.0
    return a, b


def rx_conventional(obs, constellation, sigma_x):
    """Detection from Y1 alone (the odd/sine data bins of the received DFT)."""
    amp = symbol_scale(obs.scheme, obs.n, sigma_x)
    return _detect(obs.y1, obs.scheme, obs.n, constellation, amp)


def rx_negative_clipping(received, scheme, constellation, sigma_x, n=None):
    """Clip the received signal at zero, then run conventional detection."""
    clipped = np.maximum(np.asarray(received), 0.0)
    obs = split_pairs(clipped, scheme, n)
    return rx_conventional(obs, constellation, sigma_x)


def rx_noise_filtering(obs, constellation, sigma_x):
    """Pick the pair slot indicated by the sign of y1, keeping one noise
    sample per pair instead of two."""
    a, b = _pairs_of(obs)
    xhat = np.where(obs.y1 >= 0, a, -b)
    amp = symbol_scale(obs.scheme, obs.n, sigma_x)
    return _detect(xhat, obs.scheme, obs.n, constellation, amp)


def rx_pairwise_clip(obs, constellation, sigma_x):
    """Clip each pair slot at zero and difference."""
    a, b = _pairs_of(obs)
    xhat = np.maximum(a, 0.0) - np.maximum(b, 0.0)
    amp = symbol_scale(obs.scheme, obs.n, sigma_x)
    return _detect(xhat, obs.scheme, obs.n, constellation, amp)


def _rebuild_signs(bits, scheme, n, constellation, sigma_x):
    """Sign pattern of the bipolar signal implied by decided bits."""
    syms = gray_map(constellation, bits)
    amp = symbol_scale(scheme, n, sigma_x)
    if scheme == "aco":
        freq = load_aco_frame(amp * syms, n)
    else:
        freq = _load_full_frame(amp * syms, n, imag_axis=(scheme == "pamdmt"))
    x = idft(freq).real
    half = x if scheme == "flip" else x[..., : n // 2]
    return half >= 0


def rx_decision_directed(obs, constellation, sigma_x, iterations=2):
    """Conventional pass, then re-detect with signs taken from the decisions.

    iterations=0 returns the conventional decisions unchanged.
    """
    bits = rx_conventional(obs, constellation, sigma_x)
    a, b = _pairs_of(obs)
    amp = symbol_scale(obs.scheme, obs.n, sigma_x)
    for _ in range(iterations):
        signs = _rebuild_signs(bits, obs.scheme, obs.n, constellation,
                               sigma_x)
        xhat = np.where(signs, a, -b)
        bits = _detect(xhat, obs.scheme, obs.n, constellation, amp)
    return bits


def rx_genie(received, true_signs, scheme, constellation, sigma_x, n=None,
             negative_clip=False):
    """Selection combining with the true zero pattern supplied.

    Without the flag each pair contributes the slot that carries the
    signal (noise variance sigma^2 per estimate, half of conventional's).
    With the flag that slot is additionally clipped at zero before use.
    """
    obs = split_pairs(received, scheme, n)
    a, b = _pairs_of(obs)
    if negative_clip:
        xhat = np.where(true_signs, np.maximum(a, 0.0), -np.maximum(b, 0.0))
    else:
        xhat = np.where(true_signs, a, -b)
    amp = symbol_scale(obs.scheme, obs.n, sigma_x)
    return _detect(xhat, obs.scheme, obs.n, constellation, amp)
