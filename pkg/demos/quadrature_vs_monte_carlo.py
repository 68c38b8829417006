"""
Two roads to the pair-sum information bonus
===========================================

The extra rate from decoding the pair-sum magnitude is half the
conditional mutual information I(X; Y2 | Y1).  The package computes it
two ways: deterministic panel quadrature over the conditional entropy,
and a Monte Carlo average of the information density.  They must agree
within MC error; this demo shows both numbers across the SNR range and
the saturation of the bonus at 1/4 bit.
"""

import numpy as np

from optofdm.inforate import (GaussianClipModel, delta_gain,
                              mc_mutual_information)

rng = np.random.default_rng(42)

print("sigma_x/sigma   quadrature Delta   MC Delta (+-1 s.e.)       |z|")
for ratio in (0.1, 0.5, 1.0, 2.5, 10.0, 100.0):
    m = GaussianClipModel(ratio, 1.0)
    dq = delta_gain(m)
    mi, se = mc_mutual_information(m, 1_000_000, rng=rng)
    dmc, dse = mi / 2.0, se / 2.0
    z = abs(dmc - dq) / dse
    print(f"{ratio:13.1f}   {dq:16.8f}   {dmc:.8f} +- {dse:.1e}   {z:5.2f}")

print("\nDelta saturates at 1/4 bit; the shortfall decays like 1/SNR:")
for db in (10.0, 20.0, 30.0):
    sx = np.sqrt(2 * np.pi) * 10.0 ** (db / 10.0)
    print(f"  {db:4.0f} dB optical: 1/4 - Delta ="
          f" {0.25 - delta_gain(GaussianClipModel(sx, 1.0)):.3e}")
