"""Run manifests: every emitted artifact points back to how it was made."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

from .. import __version__


@dataclass
class RunManifest:
    command: str
    config: dict
    seed: int
    version: str = __version__
    wall_clock_seconds: float = 0.0
    outputs: dict[str, str] = field(default_factory=dict)
    started_at: float = field(default_factory=time.time)

    def finish(self) -> None:
        self.wall_clock_seconds = round(time.time() - self.started_at, 3)

    def write(self, out_dir: Path) -> Path:
        path = Path(out_dir) / "manifest.json"
        payload = {
            "command": self.command,
            "config": self.config,
            "seed": self.seed,
            "version": self.version,
            "wall_clock_seconds": self.wall_clock_seconds,
            "outputs": self.outputs,
        }
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
        return path

    @classmethod
    def read(cls, path: Path) -> "RunManifest":
        with open(path) as fh:
            obj = json.load(fh)
        m = cls(command=obj["command"], config=obj["config"], seed=obj["seed"],
                version=obj.get("version", "?"))
        m.wall_clock_seconds = obj.get("wall_clock_seconds", 0.0)
        m.outputs = obj.get("outputs", {})
        return m
