"""Seeded sweep to CSV, then a single match written as a trace and replayed."""
import tempfile
from pathlib import Path

from aegame.graph import TargetFamily
from aegame.rules import GameConfig, RuleSet
from aegame.traces import SweepSpec, read_trace, replay_trace, rows_to_csv, run_named, \
    sweep_rows, write_trace

spec = SweepSpec([100], 3, "strict", "star", "min-dmax", "strict-star",
                 b_gen="geometric", gen_args={"lo": 50, "hi": 3000, "count": 8},
                 repetitions=1, seed_base=11)
print(rows_to_csv(sweep_rows(spec)))

cfg = GameConfig(120, 60, RuleSet.STRICT, TargetFamily("star", 3), seed=5)
res = run_named(cfg, "random", "strict-star")
path = Path(tempfile.mkdtemp()) / "match.jsonl"
write_trace(path, cfg, "random", "strict-star", res)
block, same = replay_trace(read_trace(path))
print(path.read_text().splitlines()[0])
print("replayed:", block, "identical" if same else "DIFFERENT")
