"""
Mapping-torus invariants
========================

For an integer monodromy U in SL(2,Z) the graded trace S(trace U) is the
mapping-torus invariant of Rozansky-Witten type attached to the manifold.
It depends on U only through its trace, so it is a conjugacy invariant, and
the polynomial S(t) tabulates it over all conjugacy classes at once.
"""

import random

from hkgenus import SL2Element, builtin, random_sl2, rozansky_witten_invariant

##############################################################################
# The invariant for K3 across small traces.  Trace 2 covers the identity and
# all parabolic elements; trace 0 the quarter turn; negative traces their
# negatives.

k3 = builtin("K3").diamond
examples = {
    "identity        (1,0;0,1)": SL2Element.identity(),
    "parabolic       (1,1;0,1)": SL2Element(1, 1, 0, 1),
    "quarter turn    (0,-1;1,0)": SL2Element(0, -1, 1, 0),
    "minus identity  (-1,0;0,-1)": SL2Element(-1, 0, 0, -1),
    "hyperbolic      (2,1;1,1)": SL2Element(2, 1, 1, 1),
}
print("K3 mapping-torus invariants:")
for label, u in examples.items():
    result = rozansky_witten_invariant(k3, u)
    print(f"  {label:<28} trace {result.trace:>3}  ->  {result.value}")

##############################################################################
# The same polynomial evaluated for the fourfold: S(t) = 3t^2 + 42t + 228,
# so the trace-3 hyperbolic element gives 3*9 + 42*3 + 228 = 381.

fourfold = builtin("K3[2]").diamond
result = rozansky_witten_invariant(fourfold, SL2Element(2, 1, 1, 1))
print()
print("K3[2]: S(t) =", result.supertrace.to_string("t"))
print("K3[2] at the trace-3 element:", result.value)

##############################################################################
# Conjugacy invariance, checked literally: conjugating the monodromy by
# random group elements never changes the invariant.

rng = random.Random(11)
u = SL2Element(2, 1, 1, 1)
base = rozansky_witten_invariant(k3, u).value
checks = []
for _ in range(100):
    g = random_sl2(rng, length=rng.randint(1, 10))
    checks.append(rozansky_witten_invariant(k3, u.conjugate_by(g)).value == base)
print()
print(f"100 random conjugations of a trace-3 element: all equal {base}:",
      all(checks))

##############################################################################
# A table of the invariant over traces, for every built-in manifold.

print()
traces = list(range(-3, 4)) + [10]
header = "trace".ljust(8) + "".join(f"{t:>10}" for t in traces)
print(header)
for name in ("K3", "K3[2]", "K3[3]"):
    diamond = builtin(name).diamond
    s_t = rozansky_witten_invariant(diamond, SL2Element.identity()).supertrace
    row = "".join(f"{int(s_t.evaluate(t)):>10}" for t in traces)
    print(name.ljust(8) + row)
