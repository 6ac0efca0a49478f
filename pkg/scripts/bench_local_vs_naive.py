#!/usr/bin/env python3
"""Sweep the global-vs-local evaluation benchmark over complex families.

Writes one JSON line per run (same schema as `higherchar bench --json`).
The local path wins big on sparse complexes and for m = 3; on small dense
complexes the nominal operation-count advantage can be eaten by constant
factors, which the time column shows honestly.

    python scripts/bench_local_vs_naive.py
"""

import io
import json
import sys
import tempfile
from contextlib import redirect_stdout
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from higherchar.cli import main as cli_main
from higherchar.files import save_complex
from higherchar.generators import cycle, random_whitney

CASES = [
    ("cycle(24)", cycle(24)),
    ("cycle(60)", cycle(60)),
    ("random_whitney(12,30,1)", random_whitney(12, 30, seed=1)),
    ("random_whitney(14,45,1)", random_whitney(14, 45, seed=1)),
    ("random_whitney(16,24,2)", random_whitney(16, 24, seed=2)),
]


def main() -> int:
    rc_total = 0
    with tempfile.TemporaryDirectory() as tmp:
        for name, g in CASES:
            path = str(Path(tmp) / "g.facets")
            save_complex(g, path)
            for m in ("2", "3"):
                buf = io.StringIO()
                with redirect_stdout(buf):
                    rc = cli_main(["bench", path, "-m", m, "--json"])
                rc_total |= rc
                row = json.loads(buf.getvalue())
                row["complex"] = name
                print(json.dumps(row))
    return rc_total


if __name__ == "__main__":
    sys.exit(main())
