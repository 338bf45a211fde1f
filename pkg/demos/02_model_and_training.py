"""
Model graph and a miniature training run
========================================

The assessment model fuses its three input streams by temporal
concatenation: spectrogram and filter-bank frames are stacked along time
and run through a 12-layer CNN; adapted encoder frames are appended along
time; a BLSTM plus shared dense layer feed two attention heads that emit
frame-level quality and intelligibility scores, averaged into utterance
scores.

This script inspects the forward pass and then overfits a handful of
synthetic utterances to show the objective and the loop mechanics (the full
50-utterance probe lives in tests/test_acceptance.py).
"""

from pathlib import Path

import numpy as np
import torch

from speechqi import (
    AssessmentModel,
    LossConfig,
    Manifest,
    ModelConfig,
    StftConfig,
    StubEncoderBackend,
    TrainConfig,
    UtteranceRecord,
    compute_power_spectrogram,
    extract_embedding,
    fit,
    predict,
)
from speechqi.features import FeatureBundle

OUT = Path(__file__).parent / "output" / "training"
OUT.mkdir(parents=True, exist_ok=True)
SR = 16000

###############################################################################
# Build the model and inspect one forward pass
# ---------------------------------------------

backend = StubEncoderBackend()
torch.manual_seed(0)
model = AssessmentModel(ModelConfig(embed_dim=backend.embedding_dim))
print(f"trainable parameters: {model.parameter_count():,}")
print(f"per-frame CNN output dimension (d_c): {model.config.d_c}")


def make_bundle(uid: str, seed: int, duration_s: float) -> FeatureBundle:
    rng = np.random.default_rng(seed)
    n = int(duration_s * SR)
    freq = rng.uniform(300, 3000)
    wave = (
        0.4 * np.sin(2 * np.pi * freq * np.arange(n) / SR)
        + 0.1 * rng.standard_normal(n)
    ).astype(np.float32)
    return FeatureBundle(
        utterance_id=uid,
        waveform=wave,
        sample_rate=SR,
        ps=compute_power_spectrogram(wave, SR, StftConfig()),
        ws=extract_embedding(wave, SR, backend),
    )


bundle = make_bundle("demo", seed=1, duration_s=1.0)
pred = predict(model, bundle)
print(
    f"frame count {pred.frame_count} = 61 (spectrogram) + 61 (filter bank) "
    f"+ 50 (encoder)"
)
print(f"utterance quality {pred.utterance_quality:+.3f} "
      f"= mean of {pred.frame_count} frame scores")

###############################################################################
# Overfit a tiny labelled set
# ----------------------------
# Ten utterances with random labels; the objective combines utterance-level
# and frame-level squared errors for both tasks.  Validation here is the
# training set itself, so the report tracks memorization.

rng = np.random.default_rng(7)
bundles = {}
records = []
for i in range(10):
    uid = f"d{i}"
    bundles[uid] = make_bundle(uid, seed=100 + i, duration_s=float(rng.uniform(0.5, 1.0)))
    records.append(
        UtteranceRecord(
            uid, f"{uid}.wav",
            float(rng.uniform(1, 5)), float(rng.uniform(0, 1)), f"sys{i % 2}",
        )
    )
manifest = Manifest(records=tuple(records))

result = fit(
    model,
    manifest,
    manifest,
    lambda record: bundles[record.utterance_id],
    LossConfig(),
    TrainConfig(learning_rate=1e-4, max_epochs=25, batch_size=1, seed=7),
    OUT,
    log=print,
)
print(f"\nbest validation loss {result.best_valid_loss:.4f} "
      f"at epoch {result.best_epoch}")
print(f"checkpoint: {result.checkpoint_path}")
print(f"report:     {result.report_path}")

###############################################################################
# Scores after training
# ----------------------

for record in records[:3]:
    pred = predict(model, bundles[record.utterance_id])
    print(
        f"{record.utterance_id}: quality {pred.utterance_quality:.2f} "
        f"(label {record.quality:.2f}), intelligibility "
        f"{pred.utterance_intelligibility:.2f} (label {record.intelligibility:.2f})"
    )
