"""Quick invariant battery behind `optofdm selftest`.

Each check exercises one structural identity that must hold exactly (up to
float rounding) regardless of parameters: transform round trips, frame
antisymmetry, pair-splitting bijectivity, noiseless detection, density
normalization, and entropy identities.  Runs in a few seconds.
"""

import math

import numpy as np

from . import dsp, txrx
from .constellations import make_constellation
from .inforate import (GaussianClipModel, cond_pdf_y2_given_y1, delta_gain,
                       entropy_identity_check, snr_convert)


def _check_dft_round_trip():
    rng = np.random.default_rng(11)
    for n in (4, 16, 64, 256):
        x = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        if not np.allclose(dsp.idft(dsp.dft(x)), x, atol=1e-12):
            return False
        # unitary: energy preserved
        if not math.isclose(float(np.sum(np.abs(dsp.dft(x)) ** 2)),
                            float(np.sum(np.abs(x) ** 2)), rel_tol=1e-12):
            return False
    return True


def _check_frame_antisymmetry():
    rng = np.random.default_rng(12)
    constellation = make_constellation("qam4")
    bits = rng.integers(0, 2, 2 * len(dsp.aco_data_bins(64)), dtype=np.uint8)
    frame = txrx.tx_aco(bits, constellation, 64, 1.3)
    x = dsp.idft(frame.freq).real
    ok = np.allclose(x[:32], -x[32:], atol=1e-12)
    ok &= int(np.sum(frame.intensity == 0.0)) >= 32
    return bool(ok)


def _check_pair_bijectivity():
    rng = np.random.default_rng(13)
    for scheme in txrx.SCHEMES:
        shape = (2, 64) if scheme == "flip" else (64,)
        r = rng.standard_normal(shape)
        obs = txrx.split_pairs(r, scheme, 64)
        if not np.allclose(txrx.reconstruct(obs), r, atol=1e-12):
            return False
    return True


def _check_noiseless_detection():
    rng = np.random.default_rng(14)
    qam4 = make_constellation("qam4")
    pam2 = make_constellation("pam2")
    for scheme in txrx.SCHEMES:
        constellation = pam2 if scheme == "pamdmt" else qam4
        payload = txrx.payload_bits_per_frame(scheme, 64, constellation)
        bits = rng.integers(0, 2, (8, payload), dtype=np.uint8)
        frame = txrx.transmit(scheme, bits, constellation, 64, 2.0)
        obs = txrx.split_pairs(frame.intensity, scheme, 64)
        for rx in (txrx.rx_conventional, txrx.rx_pairwise_clip,
                   txrx.rx_noise_filtering):
            if np.any(rx(obs, constellation, 2.0) != bits):
                return False
        if np.any(txrx.rx_decision_directed(obs, constellation, 2.0) != bits):
            return False
        signs = txrx.true_sign_pattern(frame)
        if np.any(txrx.rx_genie(frame.intensity, signs, scheme,
                                constellation, 2.0, 64) != bits):
            return False
    return True


def _check_density_normalization():
    from .inforate import _panel_quadrature
    for ratio in (0.3, 3.0, 30.0):
        model = GaussianClipModel(ratio, 1.0)
        tf = 10.0 * model.sigma_f
        for y1 in (0.0, 3.0 * model.sigma_y1, -3.0 * model.sigma_y1):
            mu = model.rho * abs(y1)
            xn, wn = _panel_quadrature(-mu - tf, min(-mu + tf, 0.0), 8, 30)
            xp, wp = _panel_quadrature(max(mu - tf, 0.0), mu + tf, 8, 30)
            mass = float(
                np.sum(wn * cond_pdf_y2_given_y1(y1, xn, model))
                + np.sum(wp * cond_pdf_y2_given_y1(y1, xp, model)))
            if abs(mass - 1.0) > 1e-8:
                return False
    return True


def _check_snr_conversion():
    point = snr_convert(optical_db=3.0)
    back = snr_convert(electrical_db=point.snr_electrical_db)
    ok = math.isclose(back.snr_optical_db, 3.0, abs_tol=1e-12)
    ok &= math.isclose(point.snr_electrical_db,
                       10.0 * math.log10(math.pi) + 6.0, abs_tol=1e-12)
    return ok


def _check_entropy_identities():
    if entropy_identity_check() > 1e-12:
        return False
    # delta collapses with the signal
    return delta_gain(GaussianClipModel(1e-3, 1.0)) < 1e-6


CHECKS = (
    ("dft round trip + unitarity", _check_dft_round_trip),
    ("frame antisymmetry and zero count", _check_frame_antisymmetry),
    ("pair split bijectivity", _check_pair_bijectivity),
    ("noiseless detection", _check_noiseless_detection),
    ("conditional density normalization", _check_density_normalization),
    ("snr conversion round trip", _check_snr_conversion),
    ("entropy identities", _check_entropy_identities),
)


def run(stream):
    failures = 0
    for name, check in CHECKS:
        try:
            ok = bool(check())
        except Exception as exc:  # a crash is a failure, keep going
            print(f"FAIL {name} ({exc!r})", file=stream)
            failures += 1
            continue
        print(("ok   " if ok else "FAIL ") + name, file=stream)
        failures += 0 if ok else 1
    print(f"{len(CHECKS) - failures}/{len(CHECKS)} checks passed",
          file=stream)
    return 0 if failures == 0 else 1
