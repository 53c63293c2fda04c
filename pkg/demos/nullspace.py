"""Exact bounded-degree solution spaces of the linear lemma equation eq3.8 in k[d].

    python3 demos/nullspace.py
"""

from pseudoalg import abelian, linear_nullspace
from pseudoalg.tensor import format_tensor

L = abelian(1)
for degree in range(5):
    basis = linear_nullspace("eq3.8", degree, L, s=(1,), t=5)
    print(f"D={degree}: dimension {len(basis)}: " + ", ".join(format_tensor(b) for b in basis))
