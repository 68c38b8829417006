"""Monte-Carlo BER sweeps and rate sweeps with reproducible seeding.

Every (SNR point, receiver, batch) triple gets its own child RNG derived
from SeedSequence((master_seed, snr_key, receiver_id, batch_index)), where
snr_key quantizes the optical SNR in dB.  Batches have a fixed frame count
and the stopping rule is only checked between batches, so the random numbers
consumed at one grid point do not depend on which other points are in the
sweep: shrinking or reordering the grid leaves each point's result
byte-identical.
"""

import csv
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import txrx
from .constellations import make_constellation
from .inforate import (GaussianClipModel, QuadratureSpec, RatePoint,
                       _gain_db_from_delta, capacity_high_snr_asymptote,
                       delta_gain_with_error, rate_clipped_pam,
                       rate_conventional_gaussian, rate_discrete_conventional,
                       rate_genie_bound, snr_convert)

__all__ = [
    "RECEIVER_IDS", "SimConfig", "BerPoint", "wilson_interval",
    "run_ber_sweep", "run_rate_sweep", "write_ber_csv", "write_rate_csv",
    "CSV_HEADER", "GAUSSIAN_QUANTITIES", "DISCRETE_QUANTITIES",
    "threshold_crossing_db",
]

# stable ids feeding the seed derivation; never renumber
RECEIVER_IDS = {
    "conventional": 1,
    "negative_clipping": 2,
    "pairwise_clip": 3,
    "noise_filtering": 4,
    "decision_directed": 5,
    "genie": 6,
    "genie_clip": 7,
}

_Z95 = 1.959963984540054

CSV_HEADER = ("snr_o_db", "snr_e_db", "quantity", "receiver_or_method",
              "value", "ci_lo", "ci_hi", "meta")


@dataclass
class SimConfig:
    scheme: str = "aco"
    constellation: str = "qam4"
    receivers: tuple = ("conventional",)
    n: int = 64
    snr_grid_db: tuple = ()
    snr_axis: str = "optical"
    target_errors: int = 200
    max_frames: int = 100_000
    batch_frames: int = 250
    master_seed: int = 2024
    sigma: float = 1.0

    def __post_init__(self):
        if self.scheme not in txrx.SCHEMES:
            raise ValueError(f"unknown scheme {self.scheme!r}")
        if self.n < 4 or self.n % 4:
            raise ValueError("n must be a multiple of 4 (and >= 4)")
        if self.n & (self.n - 1):
            raise ValueError("n must be a power of two")
        if self.target_errors < 100:
            raise ValueError("target_errors below 100 gives junk CIs")
        if self.max_frames < 0 or self.batch_frames < 1:
            raise ValueError("bad frame counts")
        if self.snr_axis not in ("optical", "electrical"):
            raise ValueError("snr_axis must be optical or electrical")
        if self.master_seed < 0:
            raise ValueError("master_seed must be nonnegative")
        unknown = set(self.receivers) - set(RECEIVER_IDS)
        if unknown:
            raise ValueError(f"unknown receivers {sorted(unknown)}")


@dataclass
class BerPoint:
    snr_optical_db: float
    snr_electrical_db: float
    receiver: str
    ber: float
    ci_lo: float
    ci_hi: float
    errors: int
    bits: int
    frames: int


def wilson_interval(errors, trials, z=_Z95):
    """Wilson score interval for a binomial proportion."""
    if trials <= 0:
        return (0.0, 1.0)
    p = errors / trials
    denom = 1.0 + z * z / trials
    center = (p + z * z / (2.0 * trials)) / denom
    half = z * math.sqrt(
        p * (1.0 - p) / trials + z * z / (4.0 * trials * trials)) / denom
    # center == half exactly at the edges; don't let round-off leak past them
    lo = 0.0 if errors == 0 else max(0.0, center - half)
    hi = 1.0 if errors == trials else min(1.0, center + half)
    return (lo, hi)


def _snr_key(snr_o_db):
    # quantized dB value keeps the key grid-position independent
    return int(round(snr_o_db * 1e6)) + (1 << 31)


def _detect_bits(received, frame, config, constellation, sigma_x, receiver):
    n = config.n
    if receiver == "negative_clipping":
        return txrx.rx_negative_clipping(received, config.scheme,
                                         constellation, sigma_x, n)
    if receiver == "genie":
        return txrx.rx_genie(received, txrx.true_sign_pattern(frame),
                             config.scheme, constellation, sigma_x, n)
    if receiver == "genie_clip":
        return txrx.rx_genie(received, txrx.true_sign_pattern(frame),
                             config.scheme, constellation, sigma_x, n,
                             negative_clip=True)
    obs = txrx.split_pairs(received, config.scheme, n)
    if receiver == "conventional":
        return txrx.rx_conventional(obs, constellation, sigma_x)
    if receiver == "pairwise_clip":
        return txrx.rx_pairwise_clip(obs, constellation, sigma_x)
    if receiver == "noise_filtering":
        return txrx.rx_noise_filtering(obs, constellation, sigma_x)
    if receiver == "decision_directed":
        return txrx.rx_decision_directed(obs, constellation, sigma_x)
    raise ValueError(f"unknown receiver {receiver!r}")


def _simulate_point(config, snr_o_db, receiver):
    constellation = make_constellation(config.constellation)
    point = snr_convert(optical_db=snr_o_db, sigma=config.sigma)
    sigma_x = point.sigma_x
    spec = txrx.ChannelSpec(sigma=config.sigma)
    payload = txrx.payload_bits_per_frame(config.scheme, config.n,
                                          constellation)
    key = _snr_key(snr_o_db)
    rid = RECEIVER_IDS[receiver]

    errors = bits = frames = batch = 0
    while frames < config.max_frames and errors < config.target_errors:
        size = min(config.batch_frames, config.max_frames - frames)
        rng = np.random.default_rng(np.random.SeedSequence(
            (config.master_seed, key, rid, batch)))
        tx_bits = rng.integers(0, 2, (size, payload), dtype=np.uint8)
        frame = txrx.transmit(config.scheme, tx_bits, constellation,
                              config.n, sigma_x)
        received = txrx.channel(frame.intensity, spec, rng)
        rx_bits = _detect_bits(received, frame, config, constellation,
                               sigma_x, receiver)
        errors += int(np.sum(rx_bits != tx_bits))
        bits += size * payload
        frames += size
        batch += 1

    lo, hi = wilson_interval(errors, bits)
    ber = errors / bits if bits else float("nan")
    # report the requested grid value, not its linear round trip
    snr_e_db = 10.0 * math.log10(math.pi) + 2.0 * snr_o_db
    return BerPoint(snr_o_db, snr_e_db, receiver, ber, lo, hi, errors, bits,
                    frames)


def _optical_grid(config):
    grid = []
    for v in config.snr_grid_db:
        if config.snr_axis == "electrical":
            grid.append(snr_convert(electrical_db=v).snr_optical_db)
        else:
            grid.append(float(v))
    return grid


def run_ber_sweep(config, output=None):
    """Simulate every (grid point, receiver) pair; returns BerPoint list.

    Honors OPTOFDM_THREADS for coarse-grained parallelism across points;
    results are identical regardless of the thread count.
    """
    grid = _optical_grid(config)
    if config.max_frames == 0:
        if output is not None:
            write_ber_csv([], output)
        return []
    jobs = [(s, r) for s in grid for r in config.receivers]
    threads = int(os.environ.get("OPTOFDM_THREADS", "1") or "1")
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            points = list(pool.map(
                lambda j: _simulate_point(config, *j), jobs))
    else:
        points = [_simulate_point(config, s, r) for s, r in jobs]
    if output is not None:
        write_ber_csv(points, output)
    return points


def _fmt(x):
    if isinstance(x, float):
        if math.isnan(x):
            return "nan"
        return repr(float(x))
    return str(x)


def _write_rows(rows, output):
    close = False
    if isinstance(output, (str, os.PathLike)):
        output = open(output, "w", newline="", encoding="utf-8")
        close = True
    try:
        writer = csv.writer(output, lineterminator="\n")
        writer.writerow(CSV_HEADER)
        for row in rows:
            writer.writerow([_fmt(v) for v in row])
    finally:
        if close:
            output.close()


def write_ber_csv(points, output):
    rows = [(p.snr_optical_db, p.snr_electrical_db, "ber", p.receiver,
             p.ber, p.ci_lo, p.ci_hi,
             f"errors={p.errors};bits={p.bits};frames={p.frames}")
            for p in points]
    _write_rows(rows, output)


GAUSSIAN_QUANTITIES = (
    "rate_conventional", "rate_improved", "delta_gain", "optical_gain_db",
    "electrical_gain_db", "rate_clipped_pam", "rate_genie_bound",
    "capacity_asymptote",
)

DISCRETE_QUANTITIES = (
    "rate_discrete_conventional", "rate_upper_bound", "delta_gain",
    "rate_genie_bound",
)


def _rate_rows_gaussian(snr_o_db, quantities, spec, sigma):
    point = snr_convert(optical_db=snr_o_db, sigma=sigma)
    snr_e_db = 10.0 * math.log10(math.pi) + 2.0 * snr_o_db
    e_mean = point.sigma_x / math.sqrt(2.0 * math.pi)
    snr_o = 10.0 ** (snr_o_db / 10.0)
    need_delta = bool({"rate_improved", "delta_gain", "optical_gain_db",
                       "electrical_gain_db"} & set(quantities))
    delta = err = 0.0
    if need_delta:
        delta, err = delta_gain_with_error(
            GaussianClipModel(point.sigma_x, sigma), spec)
    conv = rate_conventional_gaussian(e_mean, sigma)
    out = []

    def add(name, value, method, error=0.0):
        if name in quantities:
            out.append(RatePoint(snr_o_db, snr_e_db, value, method, error,
                                 name))

    add("rate_conventional", conv, "closed-form")
    add("rate_improved", conv + delta, "quadrature", err)
    add("delta_gain", delta, "quadrature", err)
    if "optical_gain_db" in quantities or "electrical_gain_db" in quantities:
        g = _gain_db_from_delta(snr_o, delta)
        add("optical_gain_db", g, "quadrature+bisection", 1e-4)
        add("electrical_gain_db", 2.0 * g, "quadrature+bisection", 2e-4)
    add("rate_clipped_pam", rate_clipped_pam(e_mean, sigma, spec),
        "quadrature", spec.tol_bits)
    add("rate_genie_bound", rate_genie_bound(point), "closed-form")
    add("capacity_asymptote", capacity_high_snr_asymptote(e_mean, sigma),
        "closed-form")
    return out


def _rate_rows_discrete(snr_o_db, quantities, spec, sigma, name):
    constellation = make_constellation(name)
    point = snr_convert(optical_db=snr_o_db, sigma=sigma)
    snr_e_db = 10.0 * math.log10(math.pi) + 2.0 * snr_o_db
    need_delta = bool({"rate_upper_bound", "delta_gain"} & set(quantities))
    delta = err = 0.0
    if need_delta:
        delta, err = delta_gain_with_error(
            GaussianClipModel(point.sigma_x, sigma), spec)
    out = []
    disc = None
    if {"rate_discrete_conventional", "rate_upper_bound"} & set(quantities):
        disc = rate_discrete_conventional(constellation, point)

    def add(q, value, method, error=0.0):
        if q in quantities:
            out.append(RatePoint(snr_o_db, snr_e_db, value, method, error, q))

    add("rate_discrete_conventional", disc, "gauss-hermite")
    add("rate_upper_bound", (disc + delta) if disc is not None else None,
        "gauss-hermite+quadrature", err)
    add("delta_gain", delta, "quadrature", err)
    add("rate_genie_bound", rate_genie_bound(point, constellation),
        "gauss-hermite")
    return out


def run_rate_sweep(snr_grid_db, input_kind="gaussian", quantities=None,
                   spec=None, sigma=1.0, output=None):
    """Numerical rate quantities over an optical-SNR grid (dB).

    input_kind is "gaussian" or a constellation name like "qam16";
    quantities defaults to everything available for that input.
    """
    spec = spec or QuadratureSpec()
    if input_kind == "gaussian":
        available = GAUSSIAN_QUANTITIES
    else:
        available = DISCRETE_QUANTITIES
    quantities = tuple(quantities) if quantities else available
    unknown = set(quantities) - set(available)
    if unknown:
        raise ValueError(f"unknown quantities {sorted(unknown)}")
    points = []
    for snr_o_db in snr_grid_db:
        if input_kind == "gaussian":
            points.extend(_rate_rows_gaussian(float(snr_o_db), quantities,
                                              spec, sigma))
        else:
            points.extend(_rate_rows_discrete(float(snr_o_db), quantities,
                                              spec, sigma, input_kind))
    if output is not None:
        write_rate_csv(points, output)
    return points


def write_rate_csv(points, output):
    rows = [(p.snr_optical_db, p.snr_electrical_db, p.quantity, p.method,
             p.rate_bits_per_cu, p.rate_bits_per_cu - p.error_estimate,
             p.rate_bits_per_cu + p.error_estimate, "")
            for p in points]
    _write_rows(rows, output)


def threshold_crossing_db(points, target_ber):
    """Interpolated SNR (dB, optical) where a BER curve hits target_ber.

    Expects the points of a single receiver sorted by SNR; interpolates
    log10(BER) linearly between the bracketing grid points.  Returns the
    crossing for (ber, ci_lo, ci_hi) so callers can propagate uncertainty.
    """
    pts = sorted(points, key=lambda p: p.snr_optical_db)

    def crossing(values):
        logs = [math.log10(v) if v > 0 else -12.0 for v in values]
        t = math.log10(target_ber)
        for (p0, l0), (p1, l1) in zip(zip(pts, logs), zip(pts[1:], logs[1:])):
            if (l0 - t) * (l1 - t) <= 0 and l0 != l1:
                frac = (l0 - t) / (l0 - l1)
                return p0.snr_optical_db + frac * (
                    p1.snr_optical_db - p0.snr_optical_db)
        return float("nan")

    mid = crossing([p.ber for p in pts])
    # wider BER CI edge crosses later, narrower earlier
    hi = crossing([p.ci_hi for p in pts])
    lo = crossing([p.ci_lo for p in pts])
    return mid, hi, lo
