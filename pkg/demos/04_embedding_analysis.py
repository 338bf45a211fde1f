"""
Clean-vs-degraded embedding distances across encoders
=====================================================

For paired clean/degraded audio, each frozen encoder yields a per-utterance
distance (mean squared difference of the two embedding matrices).  The
pairwise correlation of those distance vectors across encoders shows how
similarly the encoders perceive degradation: highly correlated encoders
carry redundant information, which is why combining them buys little.
"""

from pathlib import Path

import numpy as np

from speechqi import (
    Manifest,
    StubEncoderBackend,
    UtteranceRecord,
    run_analysis,
    save_waveform,
)

OUT = Path(__file__).parent / "output" / "analysis"
AUDIO = OUT / "audio"
AUDIO.mkdir(parents=True, exist_ok=True)
SR = 16000

###############################################################################
# A paired corpus: clean tones and noisy copies at increasing noise levels
# -------------------------------------------------------------------------

rng = np.random.default_rng(3)
records = []
for i in range(8):
    n = int(SR * rng.uniform(0.5, 0.9))
    freq = rng.uniform(300, 3000)
    clean = (0.5 * np.sin(2 * np.pi * freq * np.arange(n) / SR)).astype(np.float32)
    noise_level = 0.02 + 0.06 * i
    degraded = np.clip(
        clean + noise_level * rng.standard_normal(n), -0.99, 0.99
    ).astype(np.float32)
    save_waveform(AUDIO / f"clean{i}.wav", clean, SR)
    save_waveform(AUDIO / f"deg{i}.wav", degraded, SR)
    records.append(
        UtteranceRecord(f"clean{i}", str(AUDIO / f"clean{i}.wav"), 5.0, 1.0, "clean")
    )
    records.append(
        UtteranceRecord(
            f"deg{i}", str(AUDIO / f"deg{i}.wav"),
            float(np.clip(4.5 - 4 * noise_level, 1, 5)), 0.8, "noisy",
            pair_id=f"clean{i}",
        )
    )
manifest = Manifest(records=tuple(records))

###############################################################################
# Three stub encoders: two independent, one a scaled copy of the first
# ---------------------------------------------------------------------
# The scaled copy must correlate perfectly with its source; the independent
# encoder correlates because both respond to the same noise levels, but not
# perfectly.

backends = [
    StubEncoderBackend(encoder_id="stub-a"),
    StubEncoderBackend(encoder_id="stub-a-scaled", seed_tag="stub-a", scale=2.0),
    StubEncoderBackend(encoder_id="stub-c", embedding_dim=48),
]
result = run_analysis(manifest, backends, OUT)

print("per-pair distances (first encoder):")
for rec in result.distances[:8]:
    print(f"  {rec.utterance_id}: {rec.distance:.5f}")

print("\ncorrelation matrix:")
print("  " + "  ".join(f"{e:>13}" for e in result.matrix.encoder_ids))
for i, enc in enumerate(result.matrix.encoder_ids):
    row = "  ".join(f"{v:13.4f}" for v in result.matrix.values[i])
    print(f"  {enc:>13}: {row}")

print(f"\nartifacts: {result.distances_path}")
print(f"           {result.correlations_path}")
print(f"           {result.heatmap_path}")
