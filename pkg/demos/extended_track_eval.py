"""
Extended full-scale run against the released challenge data
===========================================================

This is the optional, manually-run reproduction at real scale.  It needs:

  * the released noisy-and-enhanced track audio plus ground-truth scores
    (clean/noisy/enhanced Mandarin utterances with quality ratings averaged
    per utterance), converted to this package's manifest CSV schema;
  * a pretrained encoder available to `transformers` (downloaded weights or
    a local directory passed as encoder.weights_path);
  * hours of CPU (or a GPU port) for full training.

Procedure:

  1. Build manifests: one row per utterance,
     `utterance_id,audio_path,quality,intelligibility,system_id,listener_id,pair_id`
     with listener-averaged labels; intelligibility may be a constant column
     if the track only scores quality (training then effectively weights the
     quality task; set loss.gamma_intelligibility to 0 in that case).
  2. Point the config at a real encoder and the full training protocol:

         encoder:
           encoder_id: whisper-medium      # or whisper-large-v3
           layer_tag: encoder_final
         train:
           learning_rate: 1.0e-05
           max_epochs: 100
           early_stop_patience: 10

  3. `speechqi prepare --config full.yaml` (caches features once),
     `speechqi train --config full.yaml`,
     `speechqi predict ... --manifest test_manifest.csv --out pred/`,
     `speechqi evaluate --predictions pred/predictions.csv
         --manifest test_manifest.csv --out eval/`.

  4. Compare eval/eval_report.json against the published full-scale numbers
     (utterance-level quality LCC around 0.80, system-level SRCC around
     0.96).  The acceptance suite checks these within +-0.05 when
     SPEECHQI_EXTENDED_DATA points at a directory containing the manifests
     and a predictions.csv produced by steps 1-3.

Run this script with SPEECHQI_EXTENDED_DATA set to execute step 4 directly.
"""

import os
import sys
from pathlib import Path

from speechqi import evaluate, load_manifest
from speechqi.metrics import render_table

data_root = os.environ.get("SPEECHQI_EXTENDED_DATA")
if not data_root:
    print(__doc__)
    print("SPEECHQI_EXTENDED_DATA is not set; nothing to evaluate.")
    sys.exit(0)

root = Path(data_root)
manifest = load_manifest(root / "test_manifest.csv", mode="strict")
summary = evaluate(root / "predictions.csv", manifest)
print(render_table(summary))
print()
q = summary.quality
print(f"utterance-level quality LCC: {q.utt_lcc:.3f} (target 0.803 +- 0.05)")
print(f"system-level quality SRCC:   {q.sys_srcc:.3f} (target 0.956 +- 0.05)")
ok = abs(q.utt_lcc - 0.803) <= 0.05 and abs(q.sys_srcc - 0.956) <= 0.05
print("PASS" if ok else "FAIL")
sys.exit(0 if ok else 1)
