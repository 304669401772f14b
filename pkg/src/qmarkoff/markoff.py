"""Markoff triples: tree generation and number enumeration.

Triples are kept with the middle component maximal, which is the orientation
the branching rule preserves.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


@dataclass(frozen=True)
class MarkoffTriple:
    """A positive solution of x^2 + y^2 + z^2 = 3xyz with y >= x and y >= z."""

    x: int
    y: int
    z: int

    def __post_init__(self) -> None:
        if min(self.x, self.y, self.z) < 1:
            raise ValueError("components must be positive")
        if self.x * self.x + self.y * self.y + self.z * self.z != 3 * self.x * self.y * self.z:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) does not solve the triple equation")
        if self.y < self.x or self.y < self.z:
            raise ValueError("middle component must be maximal")

    def children(self) -> tuple[MarkoffTriple, MarkoffTriple]:
        x, y, z = self.x, self.y, self.z
        return (MarkoffTriple(x, 3 * x * y - z, y),
                MarkoffTriple(y, 3 * y * z - x, z))

    def components(self) -> tuple[int, int, int]:
        return (self.x, self.y, self.z)


ROOT = MarkoffTriple(1, 1, 1)


def triple_children(t: MarkoffTriple) -> tuple[MarkoffTriple, MarkoffTriple]:
    """Both branches below a triple; each satisfies the equation by construction."""
    return t.children()


def markoff_numbers(depth: int) -> list[int]:
    """Sorted distinct components of every triple within ``depth`` levels of the root."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    nums: set[int] = set()
    level = [ROOT]
    seen = {ROOT}
    nums.update(ROOT.components())
    for _ in range(depth):
        nxt = []
        for t in level:
            for child in t.children():
                nums.update(child.components())
                if child not in seen:
                    seen.add(child)
                    nxt.append(child)
        level = nxt
    return sorted(nums)


def markoff_numbers_up_to(bound: int) -> list[int]:
    """Every Markoff number <= bound.

    The middle component strictly increases along each branch, so pruning
    children whose middle exceeds the bound still visits every triple whose
    maximum is within it.
    """
    if bound < 1:
        return []
    nums: set[int] = set()
    stack = [ROOT]
    seen = {ROOT}
    while stack:
        t = stack.pop()
        nums.update(c for c in t.components() if c <= bound)
        for child in t.children():
            if child.y <= bound and child not in seen:
                seen.add(child)
                stack.append(child)
    return sorted(nums)


# The integer letter matrices recovered at q = 1.
_A1 = ((2, 1), (1, 1))
_B1 = ((5, 2), (2, 1))


def _imul(m, g):
    return ((m[0][0] * g[0][0] + m[0][1] * g[1][0], m[0][0] * g[0][1] + m[0][1] * g[1][1]),
            (m[1][0] * g[0][0] + m[1][1] * g[1][0], m[1][0] * g[0][1] + m[1][1] * g[1][1]))


def christoffel_entry_values(max_len: int) -> dict[str, int]:
    """Upper-right integer matrix entry for every Christoffel word <= max_len.

    Matrices are propagated along the Christoffel tree, so each word costs
    one 2x2 integer multiplication.
    """
    values = {"a": 1, "b": 2}
    queue = deque([("a", "b", _A1, _B1)])
    while queue:
        u, v, mu_u, mu_v = queue.popleft()
        if len(u) + len(v) > max_len:
            continue
        mu_uv = _imul(mu_u, mu_v)
        values[u + v] = mu_uv[0][1]
        queue.append((u, u + v, mu_u, mu_uv))
        queue.append((u + v, v, mu_uv, mu_v))
    return values
