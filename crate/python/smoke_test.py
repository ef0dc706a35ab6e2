#!/usr/bin/env python3
"""Builds the extension module and exercises every binding once.

Run from anywhere: python3 python/smoke_test.py
"""

import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def build_module() -> Path:
    subprocess.run(["cargo", "build", "-p", "widthfill-py"], cwd=ROOT, check=True)
    built = ROOT / "target" / "debug" / "libwidthfill_py.so"
    stage = Path(tempfile.mkdtemp(prefix="widthfill-py-"))
    shutil.copy2(built, stage / "widthfill_py.so")
    return stage


sys.path.insert(0, str(build_module()))

import widthfill_py as wf  # noqa: E402

# graphs and the exact solvers
p4 = wf.Graph(4, [(1, 2), (2, 3), (3, 4)])
c4 = wf.Graph(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
k3 = wf.Graph(3, [(1, 2), (1, 3), (2, 3)])
assert (p4.n, p4.m) == (4, 3)
assert p4.has_edge(2, 3) and not p4.has_edge(1, 3)
assert wf.Graph.parse(str(c4)).edges() == c4.edges()
assert not c4.is_chordal() and k3.is_chordal()

assert wf.profile(p4).value == 3
assert wf.pathwidth(p4).value == 1
assert wf.iwid(p4).value == 2
assert wf.profile(c4).value == 5
assert wf.pathwidth(c4).value == 2
assert wf.treewidth(c4).value == 2
assert wf.fillin(c4).value == 1
assert wf.iwid(c4).value == wf.pathwidth(c4).value + 1

# representations: cost identity, round-trip, greedy rebuild
res = wf.profile(c4)
r = res.representation
assert r is not None
assert r.icost() == 5 and r.to_graph().m == 5
assert wf.Representation.parse(str(r)).intervals() == r.intervals()
assert wf.greedy_representation(c4, res.ordering).icost() == 5
assert wf.treewidth(c4).representation is None

# frontiers
assert [(k, c) for k, c, _ in wf.width_cost_frontier(p4)] == [(2, 3)]
assert [(k, c) for k, c, _ in wf.clique_fill_frontier(k3)] == [(3, 3)]

# tradeoff completion: both bounds hold for every admissible t
for t in (1, 2, 3):
    out, splices = wf.run_ic(c4, t)
    report = wf.check_tradeoff(c4, t, out)
    assert report.satisfied, repr(report)
    assert report.wid_bound[1] >= 1
try:
    wf.run_ic(c4, 0)
except ValueError as e:
    assert "out of range" in str(e)
else:
    raise AssertionError("t=0 must raise")

# witness family: both frontiers spread at the known points
w = wf.build_witness(2, 3, 5)
assert (w.n, w.m) == (13, 59)
holds, ppm, tfm = wf.verify_orthogonality(2, 3, 5)
assert holds
assert ppm == [(10, 69), (11, 68)]
assert tfm == [(10, 69), (11, 68)]
try:
    wf.build_witness(1, 2, 3)
except ValueError as e:
    assert "b^2" in str(e)
else:
    raise AssertionError("bad block sizes must raise")

# strategies: derivation, metrics, text round-trip, validation
active = wf.derive_strategy(p4, "active")
assert active.flavor == "active"
assert active.cost() == 3 and active.searchers() == 2 and active.monotone()
valid, violations, _ = wf.validate_strategy(p4, active)
assert valid and not violations
assert wf.Strategy.parse(str(active), "active").steps() == active.steps()

inert = wf.derive_strategy(c4, "inert")
assert inert.cost() == c4.m + wf.fillin(c4).value
assert wf.validate_strategy(c4, inert)[0]

from_repr = wf.active_strategy(c4, r)
assert from_repr.cost() == r.icost()

k2 = wf.Graph(2, [(1, 2)])
guarded = wf.Strategy.parse("0 | - | -\n1 | 1 | 1\n2 | 1,2 | -\n", "active")
assert wf.validate_strategy(k2, guarded)[0]
unguarded = wf.Strategy.parse("0 | - | -\n1 | 1 | -\n2 | 1,2 | -\n", "active")
valid, violations, _ = wf.validate_strategy(k2, unguarded)
assert not valid and violations

print("smoke test passed: graphs, solvers, frontiers, tradeoff, witness, strategies")
