"""
Evaluation metrics and system-level ranking
===========================================

Predictions are scored with MSE, Pearson (LCC), Spearman (SRCC), and
Kendall tau-b (KTAU), both per utterance and per system (the mean score of
each enhancement system).  Rank metrics use tie-aware definitions because
subjective labels repeat heavily.
"""

import numpy as np

from speechqi import ScorePairs, ktau, lcc, mse, srcc, system_level

###############################################################################
# Rank metrics see through monotone distortions
# ----------------------------------------------

truth = np.array([1.0, 2.0, 3.0, 4.0, 4.5])
warped = np.exp(truth)  # order preserved, values wildly nonlinear
pairs = ScorePairs(predicted=warped, truth=truth)
print(f"monotone warp:  LCC {lcc(pairs):+.3f}  SRCC {srcc(pairs):+.3f}  "
      f"KTAU {ktau(pairs):+.3f}")

###############################################################################
# Ties are handled with average ranks and tau-b
# ----------------------------------------------

truth = np.array([1.0, 2.0, 2.0, 3.0])
predicted = np.array([1.0, 3.0, 2.0, 4.0])
pairs = ScorePairs(predicted, truth)
print(f"tied labels:    SRCC {srcc(pairs):+.4f}  KTAU {ktau(pairs):+.4f}")

###############################################################################
# System-level ranking
# ---------------------
# Utterances are grouped by their enhancement system; correlations over the
# per-system means measure how well a metric ranks whole systems.  Here
# system B is uniformly better than A, and C is best.

rng = np.random.default_rng(0)
systems = np.repeat(["sysA", "sysB", "sysC"], 20)
base = {"sysA": 2.0, "sysB": 3.0, "sysC": 4.2}
truth = np.array([base[s] + 0.4 * rng.standard_normal() for s in systems])
truth = np.clip(truth, 1, 5)
predicted = truth + 0.5 * rng.standard_normal(truth.shape)  # noisy predictor

utt = ScorePairs(predicted, truth, tuple(systems))
sys_pairs = system_level(utt)
print("\nper-system means (predicted vs truth):")
for sid, p, t in zip(sys_pairs.group_id, sys_pairs.predicted, sys_pairs.truth):
    print(f"  {sid}: {p:.2f} vs {t:.2f}")
print(f"utterance level: LCC {lcc(utt):.3f}  SRCC {srcc(utt):.3f}  "
      f"KTAU {ktau(utt):.3f}  MSE {mse(utt):.3f}")
print(f"system level:    LCC {lcc(sys_pairs):.3f}  SRCC {srcc(sys_pairs):.3f}  "
      f"KTAU {ktau(sys_pairs):.3f}  MSE {mse(sys_pairs):.3f}")
print("\nsystem-level correlations are higher: averaging removes per-utterance noise")
