"""Walk through the Galilei algebras sl2 |x V(m) and the simple modules V(m).

For each m the module check compares dim M_V with the span of the pairs
(x, v) with x v = 0, and the algebra check does the same for wedges of
commuting pairs.  Run with ``python3 demos/galilei_tour.py``.
"""

from zpdlie import SamplerConfig, decide_zad, decide_zpd, galilei, vm_module

cfg = SamplerConfig(seed=42)

print("module   M_V  K_V  verdict")
for m in range(1, 7):
    rep = decide_zad(vm_module(m), cfg)
    print(f"V({m})    {rep.dims['M_V']:3d}  {rep.dims['K_V']:3d}  {rep.verdict}")

print()
print("algebra      M'   K'  verdict")
for m in range(1, 6):
    rep = decide_zpd(galilei(m), cfg)
    mp, kp = rep.dims["M'"], rep.dims["K'"]
    print(f"galilei({m})  {mp:3d}  {kp:3d}  {rep.verdict}")
