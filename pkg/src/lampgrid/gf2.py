"""GF(2) linear solving over int-bitmask vectors."""

from __future__ import annotations


def solve_subset_xor(columns: list[int], target: int) -> int | None:
    """Bitmask of column indexes whose vectors XOR to ``target``.

    Columns are consumed in the given order and redundant columns are
    never selected, so the canonical solution for ``target == 0`` is the
    empty set.  Returns ``None`` when the target is outside the span.
    """
    basis: dict[int, tuple[int, int]] = {}
    for i, vec in enumerate(columns):
        vec, combo = _reduce(vec, 1 << i, basis)
        if vec:
            basis[vec & -vec] = (vec, combo)
    vec, combo = _reduce(target, 0, basis)
    if vec:
        return None
    return combo


def _reduce(vec: int, combo: int, basis: dict[int, tuple[int, int]]) -> tuple[int, int]:
    while vec:
        hit = basis.get(vec & -vec)
        if hit is None:
            break
        vec ^= hit[0]
        combo ^= hit[1]
    return vec, combo
