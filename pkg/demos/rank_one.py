"""Rank-one pseudoalgebras over k[d]: which products e*e = alpha (x)_H e satisfy which axiom.

    python3 demos/rank_one.py
"""

from pseudoalg import AXIOMS, Tensor, UEl, abelian, check_axiom, rank1
from pseudoalg.pseudo import format_pseudo
from pseudoalg.tensor import format_tensor

L = abelian(1)
one, d = UEl.one(L), UEl.gen(L, 0)

candidates = {
    "1(x)d + 3": Tensor.outer(one, d) + 3,
    "d(x)1 - 2": Tensor.outer(d, one) - 2,
    "5": Tensor.scalar(L, 2, 5),
    "1(x)d^2": Tensor.outer(one, d * d),
}

print(f"{'alpha':<12}" + "".join(f"{ax:>14}" for ax in AXIOMS))
for name, alpha in candidates.items():
    row = [check_axiom(rank1(alpha), ax).passed for ax in AXIOMS]
    print(f"{name:<12}" + "".join(f"{'pass' if ok else 'fail':>14}" for ok in row))

alpha = candidates["1(x)d^2"]
report = check_axiom(rank1(alpha), "left-prelie")
triple, defect = report.failures[0]
print()
print(f"alpha = {format_tensor(alpha)}")
names = ", ".join(f"e{i + 1}" for i in triple)
print(f"left pre-Lie defect on ({names}): {format_pseudo(defect)}")
