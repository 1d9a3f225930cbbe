"""The generic symmetric rank over C and the dimension of its fiber.

For almost every order-k symmetric tensor in dimension n the minimal number
of k-th powers of linear forms needed is ceil(C(n+k-1, k) / n), except on
exactly four pairs (k, n) where one more is needed.  The fiber dimension
n * rank - C(n+k-1, k) measures how many decompositions a generic tensor
has: zero means finitely many.
"""

from waring import (
    EXCEPTIONAL_PAIRS,
    fiber_dimension,
    finitely_many_generic_decompositions,
    generic_symmetric_rank,
    rank_report,
    sym_dimension,
)

ks = range(3, 7)
ns = range(2, 11)

print("generic symmetric rank (* marks the exceptional pairs)")
print("  k |" + "".join(f"{n:>5}" for n in ns))
for k in ks:
    cells = [
        str(generic_symmetric_rank(k, n)) + ("*" if (k, n) in EXCEPTIONAL_PAIRS else "")
        for n in ns
    ]
    print(f"  {k} |" + "".join(c.rjust(5) for c in cells))

print("\nfiber dimension of the set of generic decompositions")
print("  k |" + "".join(f"{n:>5}" for n in ns))
for k in ks:
    print(f"  {k} |" + "".join(f"{fiber_dimension(k, n):>5}" for n in ns))

print("\npairs with finitely many generic decompositions (fiber 0, n divides dim):")
finite = [
    (k, n)
    for k in ks
    for n in ns
    if (k, n) not in EXCEPTIONAL_PAIRS and finitely_many_generic_decompositions(k, n)
]
print(" ", finite)

print("\nfull report for the exceptional pair k=4, n=3:")
rep = rank_report(4, 3)
print(f"  space dimension {sym_dimension(4, 3)}, generic rank {rep.generic_rank} "
      f"(one above the ceiling), bounds [{rep.lower_bound}, {rep.upper_bound}], "
      f"fiber {rep.fiber_dim}")
