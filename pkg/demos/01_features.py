"""
Cross-domain input features
===========================

The model consumes three feature streams per utterance: an STFT power
spectrogram, a learnable sinc filter-bank response over the raw waveform,
and a frozen encoder embedding.  This script walks through the two fixed
streams and the on-disk feature cache.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from speechqi import (
    StftConfig,
    StubEncoderBackend,
    UtteranceRecord,
    cache_features,
    compute_power_spectrogram,
    extract_embedding,
    save_waveform,
)

OUT = Path(__file__).parent / "output" / "features"
OUT.mkdir(parents=True, exist_ok=True)
SR = 16000

###############################################################################
# A synthetic test signal: a 1 kHz tone plus a little noise
# ----------------------------------------------------------

rng = np.random.default_rng(0)
t = np.arange(SR) / SR
wave = (0.5 * np.sin(2 * np.pi * 1000.0 * t) + 0.05 * rng.standard_normal(SR)).astype(
    np.float32
)

###############################################################################
# Power spectrogram: 512-point FFT, 32 ms Hamming window, 16 ms hop
# ------------------------------------------------------------------
# One second of 16 kHz audio yields 61 frames x 257 bins; the tone sits at
# bin 32 (= 1000 Hz / (16000 Hz / 512)).

ps = compute_power_spectrogram(wave, SR, StftConfig())
print(f"spectrogram shape: {ps.values.shape}")
print(f"strongest bin per frame: {np.argmax(ps.values, axis=1)[:8]} ...")

fig, ax = plt.subplots(figsize=(8, 4))
ax.imshow(
    10 * np.log10(ps.values.T + 1e-10),
    origin="lower",
    aspect="auto",
    extent=[0, 1.0, 0, SR / 2],
)
ax.set_xlabel("time (s)")
ax.set_ylabel("frequency (Hz)")
ax.set_title("Power spectrogram of a 1 kHz tone in noise (dB)")
fig.tight_layout()
fig.savefig(OUT / "spectrogram.png", dpi=110)
print(f"wrote {OUT / 'spectrogram.png'}")

###############################################################################
# Frozen encoder embeddings via the deterministic stub backend
# -------------------------------------------------------------
# The stub frames the waveform at 20 ms and applies a fixed random projection;
# it stands in for a pretrained encoder wherever tests or demos must not
# download weights.  Embeddings are bit-reproducible.

backend = StubEncoderBackend()
emb = extract_embedding(wave, SR, backend)
emb_again = extract_embedding(wave, SR, backend)
print(f"embedding shape: {emb.values.shape} (T3 = ceil(16000 / 320) = 50)")
print(f"deterministic: {np.array_equal(emb.values, emb_again.values)}")

###############################################################################
# The feature cache
# ------------------
# cache_features computes both fixed streams once and stores them in a
# single .npz per utterance, keyed by the STFT config and encoder identity.
# A second call is a pure cache hit: the encoder is not invoked again.

audio_path = OUT / "tone.wav"
save_waveform(audio_path, wave, SR)
record = UtteranceRecord("tone", str(audio_path), 4.5, 0.95, "clean")

bundle = cache_features(record, StftConfig(), backend, OUT / "cache")
calls_before = backend.invocations
bundle_warm = cache_features(record, StftConfig(), backend, OUT / "cache")
print(f"cache hit skipped the encoder: {backend.invocations == calls_before}")
print(f"bundle carries waveform ({bundle.waveform.shape[0]} samples), "
      f"ps {bundle.ps.values.shape}, ws {bundle.ws.values.shape}")
