"""Clipped optical OFDM: simulation and information-rate analysis.

Covers the three unipolar OFDM constructions that spend half their degrees
of freedom on nonnegativity (odd-subcarrier clipping, frame repetition with
flipped polarity, and imaginary-part loading with in-frame mirroring), a
family of receivers that exploit the redundant clipped samples, and
numerical machinery for the achievable rates of such receivers under an
average-intensity constraint.
"""

from .constellations import (Constellation, gray_demap_hard, gray_map,
                             make_constellation, pam, psk, qam)
from .dsp import (aco_data_bins, clip_intensity, dft, idft, is_hermitian,
                  load_aco_frame)
from .harness import (RECEIVER_IDS, BerPoint, SimConfig, run_ber_sweep,
                      run_rate_sweep, threshold_crossing_db, wilson_interval,
                      write_ber_csv, write_rate_csv)
from .inforate import (GaussianClipModel, QuadratureSpec, RatePoint,
                       capacity_high_snr_asymptote, cond_entropy_y2_given_y1,
                       cond_pdf_y2_given_y1, delta_gain, delta_gain_with_error,
                       electrical_gain_db, entropy_identity_check,
                       log_cond_pdf_y2_given_y1,
                       mc_mutual_information, optical_gain_db,
                       rate_clipped_pam, rate_conventional_gaussian,
                       rate_discrete_conventional, rate_genie_bound,
                       rate_improved_gaussian, rate_upper_bound_discrete,
                       snr_convert)
from .txrx import (SCHEMES, ChannelSpec, EquivalentObservation,
                   SnrOperatingPoint, TxFrame, channel,
                   channel_uses_per_frame, payload_bits_per_frame,
                   reconstruct, rx_conventional, rx_decision_directed,
                   rx_genie, rx_negative_clipping, rx_noise_filtering,
                   rx_pairwise_clip, split_pairs, symbol_scale, transmit,
                   true_sign_pattern, tx_aco, tx_flip, tx_pamdmt)

__version__ = "0.1.0"

__all__ = [
    "Constellation", "gray_demap_hard", "gray_map", "make_constellation",
    "pam", "psk", "qam",
    "aco_data_bins", "clip_intensity", "dft", "idft", "is_hermitian",
    "load_aco_frame",
    "RECEIVER_IDS", "BerPoint", "SimConfig", "run_ber_sweep",
    "run_rate_sweep", "threshold_crossing_db", "wilson_interval",
    "write_ber_csv", "write_rate_csv",
    "GaussianClipModel", "QuadratureSpec", "RatePoint",
    "capacity_high_snr_asymptote", "cond_entropy_y2_given_y1",
    "cond_pdf_y2_given_y1", "delta_gain", "delta_gain_with_error",
    "electrical_gain_db", "entropy_identity_check",
    "log_cond_pdf_y2_given_y1",
    "mc_mutual_information", "optical_gain_db", "rate_clipped_pam",
    "rate_conventional_gaussian", "rate_discrete_conventional",
    "rate_genie_bound", "rate_improved_gaussian",
    "rate_upper_bound_discrete", "snr_convert",
    "SCHEMES", "ChannelSpec", "EquivalentObservation", "SnrOperatingPoint",
    "TxFrame", "channel", "channel_uses_per_frame", "payload_bits_per_frame",
    "reconstruct", "rx_conventional", "rx_decision_directed", "rx_genie",
    "rx_negative_clipping", "rx_noise_filtering", "rx_pairwise_clip",
    "split_pairs", "symbol_scale", "transmit", "true_sign_pattern", "tx_aco",
    "tx_flip", "tx_pamdmt",
    "__version__",
]
