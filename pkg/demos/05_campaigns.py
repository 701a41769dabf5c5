"""Exhaustive small-graph checks and a census of matching permutations.

Set PERMGRAPH_THREADS to spread shards over several processes.
"""
import json
import tempfile
from pathlib import Path

from permgraph.search import campaign_classify, campaign_lemma31, campaign_part2, campaign_theorem32

r = campaign_lemma31(8)
print("lemma31:", r.examined, "graphs,", r.stats["eligible_nu_ge_4"], "with a 4-matching,",
      len(r.counterexamples), "counterexamples")
print("  tightest case:", r.stats["min_margin"]["m1"], r.stats["min_margin"]["m2"])

for report in (campaign_theorem32(7), campaign_part2(2, 7), campaign_part2(3, 7)):
    print(f"{report.name} {report.params}: {report.examined} graphs, {len(report.counterexamples)} counterexamples")

with tempfile.TemporaryDirectory() as tmp:
    out = Path(tmp) / "census.jsonl"
    r = campaign_classify(6, out=out)
    print("census (lower bounds):", json.dumps(r.census))
    for line in out.read_text().splitlines()[:6]:
        print(" ", line)
