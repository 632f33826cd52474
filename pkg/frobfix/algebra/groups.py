from fractions import Fraction
from itertools import permutations
from typing import List, Sequence, Tuple

from frobfix.algebra.structure import LinearFunctional, StructureAlgebra
from frobfix.errors import NotAGroup
from frobfix.exactlin.rational import basis_vector

Table = Sequence[Sequence[int]]


def _check_group(table: Table, unit_index: int) -> None:
    n = len(table)
    if n == 0:
        raise NotAGroup("empty multiplication table")
    if any(len(row) != n for row in table):
        raise NotAGroup("closure: the table is not square")
    if any(not isinstance(v, int) or not 0 <= v < n for row in table for v in row):
        raise NotAGroup("closure: table entries must be element indices")
    if not 0 <= unit_index < n:
        raise NotAGroup(f"unit: index {unit_index} out of range")
    for g in range(n):
        if table[unit_index][g] != g or table[g][unit_index] != g:
            raise NotAGroup(f"unit: element {unit_index} does not fix element {g}")
    for g in range(n):
        for h in range(n):
            for k in range(n):
                if table[table[g][h]][k] != table[g][table[h][k]]:
                    raise NotAGroup(f"associativity: ({g}*{h})*{k} != {g}*({h}*{k})")
    for g in range(n):
        if not any(table[g][h] == unit_index and table[h][g] == unit_index for h in range(n)):
            raise NotAGroup(f"inverses: element {g} has no inverse")


def group_algebra(table: Table, unit_index: int) -> Tuple[StructureAlgebra, LinearFunctional]:
    """Q[G] in the group basis with the form sum a_g g -> a_e."""
    _check_group(table, unit_index)
    n = len(table)
    constants = tuple(tuple(basis_vector(n, table[i][j]) for j in range(n)) for i in range(n))
    unit = basis_vector(n, unit_index)
    return StructureAlgebra(n, constants, unit), LinearFunctional(unit)


def cyclic_group_table(n: int) -> List[List[int]]:
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def symmetric_group_table(k: int) -> List[List[int]]:
    """Multiplication table of S_k on sorted permutations; (p q)(x) = p(q(x)), identity is 0."""
    elements = sorted(permutations(range(k)))
    index = {p: i for i, p in enumerate(elements)}
    return [[index[tuple(p[q[x]] for x in range(k))] for q in elements] for p in elements]


def class_sums(table: Table, unit_index: int) -> List[Tuple[Fraction, ...]]:
    n = len(table)
    inverse = [next(h for h in range(n) if table[g][h] == unit_index) for g in range(n)]
    seen = set()
    sums = []
    for g in range(n):
        if g in seen:
            continue
        cls = {table[table[h][g]][inverse[h]] for h in range(n)}
        seen |= cls
        sums.append(tuple(Fraction(1 if x in cls else 0) for x in range(n)))
    return sums
