"""
The command-line pipeline end to end
====================================

Every stage is also available as a CLI driven by one YAML config:

    speechqi prepare   --config cfg.yaml        # populate the feature cache
    speechqi train     --config cfg.yaml        # train + checkpoint + report
    speechqi predict   --config cfg.yaml --checkpoint ... --manifest ... --out ...
    speechqi evaluate  --predictions ... --manifest ... --out ...
    speechqi analyze   --config cfg.yaml --manifest ... --out ...
    speechqi show-config                         # print all defaults

This script builds a small synthetic corpus and drives the whole chain
in-process.  Exit codes: 0 success, 2 config error, 3 data error, 4 numeric
failure.
"""

from pathlib import Path

import numpy as np
import yaml

from speechqi import Manifest, UtteranceRecord, save_manifest, save_waveform
from speechqi.cli import main as speechqi_main
from speechqi.config import config_to_dict, default_config

OUT = Path(__file__).parent / "output" / "pipeline"
AUDIO = OUT / "audio"
AUDIO.mkdir(parents=True, exist_ok=True)
SR = 16000

###############################################################################
# Synthetic corpus + manifest CSV
# --------------------------------

rng = np.random.default_rng(11)
records = []
for i in range(6):
    n = int(SR * rng.uniform(0.5, 0.8))
    wave = (0.3 * rng.standard_normal(n)).astype(np.float32)
    save_waveform(AUDIO / f"u{i}.wav", wave, SR)
    records.append(
        UtteranceRecord(
            f"u{i}", f"audio/u{i}.wav",
            float(rng.uniform(1, 5)), float(rng.uniform(0, 1)), f"sys{i % 2}",
        )
    )
manifest_path = OUT / "manifest.csv"
save_manifest(Manifest(records=tuple(records)), manifest_path)

###############################################################################
# A config file with explicit paths and a short training budget
# ---------------------------------------------------------------

cfg = config_to_dict(default_config())
cfg["paths"] = {
    "train_manifest": str(manifest_path),
    "valid_manifest": str(manifest_path),
    "cache_dir": str(OUT / "cache"),
    "output_dir": str(OUT / "run"),
}
cfg["train"].update({"learning_rate": 1e-4, "max_epochs": 2, "batch_size": 2, "seed": 5})
cfg_path = OUT / "config.yaml"
cfg_path.write_text(yaml.safe_dump(cfg), encoding="utf-8")

###############################################################################
# prepare -> train -> predict -> evaluate
# ----------------------------------------

for argv in (
    ["prepare", "--config", str(cfg_path)],
    ["train", "--config", str(cfg_path)],
    [
        "predict",
        "--config", str(cfg_path),
        "--checkpoint", str(OUT / "run" / "best.pt"),
        "--manifest", str(manifest_path),
        "--out", str(OUT / "pred"),
    ],
    [
        "evaluate",
        "--predictions", str(OUT / "pred" / "predictions.csv"),
        "--manifest", str(manifest_path),
        "--out", str(OUT / "eval"),
    ],
):
    print(f"\n$ speechqi {' '.join(argv)}")
    code = speechqi_main(argv)
    assert code == 0, f"command failed with exit code {code}"

print("\nartifacts under", OUT)
for p in sorted(OUT.rglob("*")):
    if p.is_file() and "cache" not in p.parts and "audio" not in p.parts:
        print(" ", p.relative_to(OUT))
