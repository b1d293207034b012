"""Genus-tree enumeration of numerical semigroups.

Children of a semigroup are obtained by deleting one minimal generator
larger than the Frobenius number; every semigroup of positive genus has a
unique parent (put its Frobenius number back), so the tree enumerates each
semigroup exactly once.
"""

from __future__ import annotations

from typing import Iterator

from .semigroup import NumericalSemigroup, new_semigroup

__all__ = ["children", "by_genus"]


def children(s: NumericalSemigroup) -> list[NumericalSemigroup]:
    """All semigroups obtained by deleting one eligible minimal generator."""
    out = []
    for g in s.generators:
        if g > s.frobenius:
            # generating set of the deletion: keep the others, then add enough
            # multiples and translates of g to recover everything above it
            gens = [h for h in s.generators if h != g]
            gens += [g + m for m in s.generators]
            gens += [2 * g, 3 * g]
            out.append(new_semigroup(gens))
    return out


def by_genus(max_genus: int) -> Iterator[tuple[int, list[NumericalSemigroup]]]:
    """Yield (genus, all semigroups of that genus) for genus 1..max_genus."""
    level = [new_semigroup([1])]
    for genus in range(1, max_genus + 1):
        level = [child for s in level for child in children(s)]
        yield genus, level
