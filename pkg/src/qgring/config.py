"""Runtime defaults, optionally overridden by a JSON config file.

Documented keys: order_cap, witness_budget, probe_seed (and probe_budget).
Search order for the file: explicit path argument, $QGRING_CONFIG, then
./qgring.config.json. CLI flags override whatever is loaded.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional


@dataclass
class Config:
    order_cap: int = 250
    witness_budget: int = 10 ** 6
    probe_budget: int = 2000
    probe_seed: int = 0


def load_config(path: Optional[str] = None) -> Config:
    cfg = Config()
    candidate = path or os.environ.get("QGRING_CONFIG") or "qgring.config.json"
    p = Path(candidate)
    if p.is_file():
        data = json.loads(p.read_text())
        for key in ("order_cap", "witness_budget", "probe_budget", "probe_seed"):
            if key in data:
                setattr(cfg, key, int(data[key]))
    return cfg
