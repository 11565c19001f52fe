"""Produce a non-zpd witness for age(1), then check it two ways.

Over GF(5) the scan visits every projective point, so the witness is exact
for that field.  Over Q the witness rests on sampling and is checked on
fresh commuting pairs.  Run with ``python3 demos/witness_replay.py``.
"""

import dataclasses

from zpdlie import GF, SamplerConfig, age1, decide_zpd, verify_witness
from zpdlie.exactla import dot

cfg = SamplerConfig(seed=42)

for L, c in ((age1(GF(5)), dataclasses.replace(cfg, exhaustive=True)), (age1(), cfg)):
    rep = decide_zpd(L, c)
    wit = rep.witness
    F = L.field
    mp, kp = rep.dims["M'"], rep.dims["K'"]
    print(f"field {rep.field}: {rep.verdict}, dim M' = {mp}, dim span K' = {kp}")
    print("  xi =", [F.format(a) for a in wit.xi])
    print("  mu =", [F.format(a) for a in wit.mu], " xi(mu) =", F.format(dot(F, wit.xi, wit.mu)))
    for x, y in wit.terms:
        print("   ", [F.format(a) for a in x], "^", [F.format(a) for a in y])
    print("  fresh pairs checked:", wit.validated)
    print("  replay:", verify_witness(L, wit, exhaustive=bool(F.char)).ok)
