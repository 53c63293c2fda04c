"""Walk the rank-two left pre-Lie classification: one instance per case, then a basis change.

    python3 demos/classification.py
"""

from fractions import Fraction

from pseudoalg import abelian, check_axiom, equivalent, instantiate
from pseudoalg.catalog import REDUCTIONS, apply_reduction
from pseudoalg.verify import CASE_TABLE

L = abelian(2)
s1, s2 = (Fraction(1), Fraction(0)), (Fraction(2), Fraction(0))
samples = {
    "thm3.8": ("thm3.8/1", {}),
    "thm3.9": ("thm3.9/1", {"s": s1, "t": 2, "l": 1, "k": 3, "alpha": "t"}),
    "thm3.10": ("thm3.10", {"t": 2, "g": 1, "alpha": "t"}),
    "thm3.11": ("thm3.11/4", {"t1": 1, "t2": 1}),
    "thm3.13": ("thm3.13/2", {"s1": s2, "s2": s1, "c": 2}),
    "thm3.15": ("thm3.15/1", {"s": s1, "t": 2}),
    "thm3.17": ("thm3.17/1", {"s1": s1, "s2": s2, "t": 2}),
    "thm3.19": ("thm3.19/5", {"s": s1, "t1": 1, "t2": 2}),
    "thm3.6": ("thm3.6/3", {"s1": s1, "s2": s2, "t1": 1, "t2": 3}),
}

print("which of s1, s2, t1, t2 vanish decides the family:\n")
for case, family in CASE_TABLE:
    eid, params = samples[family]
    T, report = instantiate(eid, params, L)
    status = "pass" if check_axiom(T, "left-prelie").passed else "FAIL"
    print(f"  {case:<28} {eid:<11} side conditions {'ok' if report.satisfied else 'violated'}, left pre-Lie {status}")

red = next(r for r in REDUCTIONS if r.source == "thm3.11/2")
moved, target = apply_reduction(L, red, {"t1": Fraction(2), "t2": Fraction(-1, 3)})
print(f"\nbasis change {red.P} takes {red.source} to {red.target}: {equivalent(moved, target)}")
print(moved)
