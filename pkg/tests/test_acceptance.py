"""Acceptance battery: one test per headline numerical claim.

Each test prints a single PASS/FAIL line (run with -s to see them all)
and then asserts, so the battery doubles as a human-readable report:

    pytest tests/test_acceptance.py -v -s
"""

import math
import time

import numpy as np
from scipy import integrate
from scipy.special import ndtr

import optofdm as o
from optofdm.harness import SimConfig, run_ber_sweep, threshold_crossing_db
from optofdm.inforate import GaussianClipModel, cond_pdf_y2_given_y1, delta_gain


def _report(k, ok, detail):
    print(f"criterion {k:02d} {'PASS' if ok else 'FAIL'}: {detail}")
    return ok


def _gaussian_q(x):
    return ndtr(-x)


def test_criterion_01_delta_high_snr_limit():
    pt = o.snr_convert(optical_db=30.0)
    t0 = time.perf_counter()
    d = delta_gain(GaussianClipModel(pt.sigma_x, 1.0))
    dt = time.perf_counter() - t0
    ok = abs(d - 0.25) < 0.005 and dt < 60.0
    assert _report(1, ok,
                   f"delta(30 dB) = {d:.9f} (|d-1/4| = {abs(d-0.25):.2e}), "
                   f"quadrature took {dt:.2f} s")


def test_criterion_02_delta_low_snr_fraction():
    E = 1e-3  # -30 dB optical
    d = delta_gain(GaussianClipModel(math.sqrt(2.0 * math.pi) * E, 1.0))
    ratio = d / o.rate_conventional_gaussian(E, 1.0)
    ok = abs(ratio - 0.363) < 0.005
    assert _report(2, ok, f"delta/rate at -30 dB = {ratio:.6f}")


def test_criterion_03_gain_curve():
    grid = np.arange(-30.0, 31.0, 2.0)
    gains = [o.optical_gain_db(10.0 ** (db / 10.0), 1.0) for db in grid]
    monotone = all(b >= a - 2e-5 for a, b in zip(gains, gains[1:]))
    lo_ok = abs(gains[0] - 0.67) <= 0.03
    hi_ok = abs(gains[-1] - 1.50) <= 0.02
    e_lo_ok = abs(2.0 * gains[0] - 1.35) <= 0.06
    e_hi_ok = abs(2.0 * gains[-1] - 3.00) <= 0.04
    ok = monotone and lo_ok and hi_ok and e_lo_ok and e_hi_ok
    assert _report(3, ok,
                   f"optical gain {gains[0]:.4f} -> {gains[-1]:.4f} dB "
                   f"(electrical {2*gains[0]:.4f} -> {2*gains[-1]:.4f}), "
                   f"monotone={monotone}")


def test_criterion_04_clipped_pam_gap():
    grid = np.arange(-30.0, 31.0, 5.0)
    dominated = True
    for db in grid:
        E = 10.0 ** (db / 10.0)
        if o.rate_clipped_pam(E, 1.0) < o.rate_improved_gaussian(E, 1.0) - 1e-9:
            dominated = False
    gap = o.rate_clipped_pam(1000.0, 1.0) - o.rate_improved_gaussian(1000.0, 1.0)
    ok = dominated and abs(gap - 0.50) <= 0.02
    assert _report(4, ok,
                   f"high-SNR gap = {gap:.6f} bits, dominance on grid: "
                   f"{dominated}")


def test_criterion_05_quadrature_mc_duality():
    zs = []
    for sigma_x in (0.1, 1.0, 10.0):
        m = GaussianClipModel(sigma_x, 1.0)
        want = 2.0 * delta_gain(m)
        got, se = o.mc_mutual_information(m, 4_000_000,
                                          rng=np.random.default_rng(7))
        zs.append(abs(got - want) / se)
    ok = all(z < 3.0 for z in zs)
    assert _report(5, ok,
                   "MC vs quadrature |z| = "
                   + ", ".join(f"{z:.2f}" for z in zs)
                   + " (4e6 samples each)")


def test_criterion_06_transmitter_invariants():
    rng = np.random.default_rng(6)
    n = 64
    c = o.make_constellation("qam4")
    bits = rng.integers(0, 2, size=(10_000, o.payload_bits_per_frame("aco", n, c)))
    fr = o.transmit("aco", bits, c, n, math.sqrt(2.0 * math.pi))
    s = fr.intensity
    nonneg = float(s.min()) >= 0.0
    zeros_ok = bool(np.all((s == 0.0).sum(axis=-1) >= n // 2))
    spec_half = o.dft(s)
    odd = o.aco_data_bins(n)
    halving = float(np.max(np.abs(spec_half[..., odd] - fr.freq[..., odd] / 2.0)))
    x = o.idft(fr.freq)
    imag_res = float(np.max(np.abs(x.imag)))
    xr = x.real
    antisym = float(np.max(np.abs(xr + np.roll(xr, n // 2, axis=-1))))
    ok = nonneg and zeros_ok and halving < 1e-10 and antisym < 1e-12 \
        and imag_res < 1e-12
    assert _report(6, ok,
                   f"nonneg={nonneg}, >=N/2 zeros={zeros_ok}, "
                   f"odd-bin halving residue={halving:.2e}, "
                   f"antisymmetry residue={antisym:.2e} over 1e4 frames")


def test_criterion_07_genie_noise_halving():
    rng = np.random.default_rng(99)
    n = 64
    sigma_x = math.sqrt(2.0 * math.pi)
    c = o.make_constellation("qam4")
    bits = rng.integers(0, 2,
                        size=(100_000, o.payload_bits_per_frame("aco", n, c)))
    fr = o.transmit("aco", bits, c, n, sigma_x)
    x = o.split_pairs(fr.intensity, "aco").y1
    signs = np.where(o.true_sign_pattern(fr), 1.0, -1.0)
    r = o.channel(fr.intensity, o.ChannelSpec(1.0), rng)
    obs = o.split_pairs(r, "aco")
    conv_res = obs.y1 - x
    genie_res = (obs.y1 + signs * obs.y2) / 2.0 - x
    ratio = float(conv_res.var() / genie_res.var())
    ok = abs(ratio - 2.0) <= 0.10
    assert _report(7, ok,
                   f"residual variance ratio conventional/genie = {ratio:.4f} "
                   f"over 1e5 frames")


def test_criterion_08_receiver_ordering_16qam():
    receivers = ("conventional", "negative_clipping", "pairwise_clip",
                 "noise_filtering", "decision_directed", "genie_clip")
    cfg = SimConfig(scheme="aco", constellation="qam16", receivers=receivers,
                    n=64, snr_grid_db=tuple(np.arange(3.0, 7.51, 0.5)),
                    target_errors=600, max_frames=30_000, batch_frames=1000,
                    master_seed=2024)
    points = run_ber_sweep(cfg)
    thr = {}
    for r in receivers:
        curve = [p for p in points if p.receiver == r]
        thr[r] = threshold_crossing_db(curve, 1e-3)  # (mid, hi, lo)
    improved = ("negative_clipping", "pairwise_clip", "noise_filtering",
                "decision_directed")
    sep_lower = all(thr["genie_clip"][1] < thr[r][2] for r in improved)
    sep_upper = all(thr[r][1] < thr["conventional"][2] for r in improved)
    order = all(thr["genie_clip"][0] <= thr[r][0] <= thr["conventional"][0]
                for r in improved)
    adv = thr["conventional"][0] - thr["genie_clip"][0]
    ok = sep_lower and sep_upper and order and 1.5 <= adv <= 2.2
    detail = ", ".join(f"{r}={thr[r][0]:.3f}" for r in receivers)
    assert _report(8, ok,
                   f"SNR at BER 1e-3 (dB): {detail}; "
                   f"genie advantage = {adv:.3f} dB, CI-separated: "
                   f"{sep_lower and sep_upper}")


def test_criterion_09_scheme_equivalence():
    grid = (-2.0, 0.0, 2.0)
    curves = {}
    for scheme, constellation in (("aco", "qam4"), ("flip", "qam4"),
                                  ("pamdmt", "pam2")):
        cfg = SimConfig(scheme=scheme, constellation=constellation,
                        receivers=("conventional",), n=256,
                        snr_grid_db=grid, target_errors=300,
                        max_frames=20_000, batch_frames=500,
                        master_seed=2024)
        curves[scheme] = {p.snr_optical_db: p for p in run_ber_sweep(cfg)}
    overlaps = []
    names = list(curves)
    for snr in grid:
        for i in range(len(names)):
            for j in range(i + 1, len(names)):
                a = curves[names[i]][snr]
                b = curves[names[j]][snr]
                overlaps.append(max(a.ci_lo, b.ci_lo) < min(a.ci_hi, b.ci_hi))
    ok = all(overlaps)
    assert _report(9, ok,
                   f"{sum(overlaps)}/{len(overlaps)} pairwise CI overlaps "
                   f"across {names} at {grid} dB")


def test_criterion_10_analytic_ber_oracle():
    grid = tuple(float(v) for v in np.arange(-3.0, 3.1, 1.0))
    cfg = SimConfig(scheme="aco", constellation="qam4",
                    receivers=("conventional",), n=64, snr_grid_db=grid,
                    target_errors=500, max_frames=60_000, batch_frames=250,
                    master_seed=2024)
    points = run_ber_sweep(cfg)
    covered = []
    for p in points:
        snr_o = 10.0 ** (p.snr_optical_db / 10.0)
        theory = _gaussian_q(math.sqrt(math.pi) * snr_o)
        covered.append(p.ci_lo <= theory <= p.ci_hi)
    ok = all(covered)
    assert _report(10, ok,
                   f"{sum(covered)}/{len(covered)} grid points cover the "
                   f"closed-form 4-QAM BER")


def test_criterion_11_entropy_identity():
    residues = [o.entropy_identity_check(sx) for sx in (0.5, 1.0, 4.0)]
    ok = all(r < 1e-12 for r in residues)
    assert _report(11, ok,
                   "identity residues = "
                   + ", ".join(f"{r:.2e}" for r in residues))


def test_criterion_12_conditional_density_normalization():
    worst = 0.0
    for ratio in (0.3, 3.0, 30.0):
        m = GaussianClipModel(sigma_x=ratio, sigma=1.0)
        w = 12.0 * m.sigma_f + 12.0 * m.sigma_z
        for y1 in (0.0, 3.0 * m.sigma_y1, -3.0 * m.sigma_y1):
            mu = abs(m.rho * y1)
            windows = ((-mu - w, min(-mu + w, 0.0)),
                       (max(mu - w, 0.0), mu + w))
            mass = 0.0
            for lo, hi in windows:
                if hi > lo:
                    mass += integrate.quad(
                        lambda t: cond_pdf_y2_given_y1(y1, t, m),
                        lo, hi, limit=400)[0]
            worst = max(worst, abs(mass - 1.0))
    ok = worst <= 1e-8
    assert _report(12, ok,
                   f"max |mass - 1| = {worst:.2e} over 9 (SNR, y1) combos")
