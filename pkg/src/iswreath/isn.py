"""Partial bijections of {1..n}: the symmetric inverse semigroup IS_n.

Maps act on the right, so ``f * g`` first applies ``f`` and then ``g``:
``x(fg) = (xf)g``. An element is stored as the tuple of images of 1..n with
0 standing for "undefined"; tuple equality is element equality and tuple
order is the enumeration order.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .config import DEFAULT_BOUNDS
from .errors import (
    DuplicateImage,
    DuplicatePoint,
    DuplicateSource,
    EmptySupport,
    NotIdempotent,
    ParseError,
    PointOutOfRange,
    RankMismatch,
    RankTooLarge,
)

UNDEFINED = 0


@dataclass(frozen=True, order=True)
class PartialBijection:
    n: int
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.images) != self.n:
            raise RankMismatch(f"expected {self.n} images, got {len(self.images)}")
        seen = set()
        for y in self.images:
            if y == UNDEFINED:
                continue
            if not 1 <= y <= self.n:
                raise PointOutOfRange(f"image {y} outside 1..{self.n}")
            if y in seen:
                raise DuplicateImage(f"image {y} is hit twice")
            seen.add(y)

    def __call__(self, x: int) -> int | None:
        y = self.images[x - 1]
        return None if y == UNDEFINED else y

    def __mul__(self, other: PartialBijection) -> PartialBijection:
        return compose(self, other)

    def __str__(self) -> str:
        return format_element(self)

    @property
    def dom(self) -> frozenset[int]:
        return frozenset(x for x, y in enumerate(self.images, 1) if y)

    @property
    def ran(self) -> frozenset[int]:
        return frozenset(y for y in self.images if y)

    @property
    def rank(self) -> int:
        """Size of the domain."""
        return sum(1 for y in self.images if y)

    def pairs(self) -> list[tuple[int, int]]:
        return [(x, y) for x, y in enumerate(self.images, 1) if y]

    def is_idempotent(self) -> bool:
        return all(y in (UNDEFINED, x) for x, y in enumerate(self.images, 1))

    def is_permutation(self) -> bool:
        return UNDEFINED not in self.images

    def restrict(self, points: Iterable[int]) -> PartialBijection:
        """Restriction of the map to ``points`` (intersected with its domain)."""
        keep = set(points)
        return PartialBijection(
            self.n, tuple(y if x in keep else UNDEFINED for x, y in enumerate(self.images, 1))
        )

    def inverse(self) -> PartialBijection:
        return inverse(self)

    def to_json(self) -> dict:
        return {"n": self.n, "map": [y or None for y in self.images]}

    @classmethod
    def from_json(cls, data: dict) -> PartialBijection:
        try:
            n = int(data["n"])
            images = tuple(UNDEFINED if y is None else int(y) for y in data["map"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad partial bijection JSON: {data!r}") from exc
        return cls(n, images)


def _check_point(n: int, x: int) -> None:
    if not 1 <= x <= n:
        raise PointOutOfRange(f"point {x} outside 1..{n}")


def make(n: int, pairs: Iterable[tuple[int, int]]) -> PartialBijection:
    """Build the partial bijection with exactly the assignments ``x -> y`` in ``pairs``."""
    images = [UNDEFINED] * n
    used = set()
    for x, y in pairs:
        _check_point(n, x)
        _check_point(n, y)
        if images[x - 1]:
            raise DuplicateSource(f"point {x} assigned twice")
        if y in used:
            raise DuplicateImage(f"image {y} is hit twice")
        images[x - 1] = y
        used.add(y)
    return PartialBijection(n, tuple(images))


def zero(n: int) -> PartialBijection:
    return PartialBijection(n, (UNDEFINED,) * n)


def identity(n: int) -> PartialBijection:
    return PartialBijection(n, tuple(range(1, n + 1)))


def id_on(n: int, points: Iterable[int]) -> PartialBijection:
    """The idempotent ``id_A`` for ``A = points``."""
    keep = set(points)
    for x in keep:
        _check_point(n, x)
    return PartialBijection(n, tuple(x if x in keep else UNDEFINED for x in range(1, n + 1)))


def from_permutation(perm: Sequence[int]) -> PartialBijection:
    """Total map from a one-line permutation (``perm[i-1]`` is the image of ``i``)."""
    return PartialBijection(len(perm), tuple(perm))


def compose(f: PartialBijection, g: PartialBijection) -> PartialBijection:
    if f.n != g.n:
        raise RankMismatch(f"cannot compose ranks {f.n} and {g.n}")
    gi = g.images
    return PartialBijection(f.n, tuple(gi[y - 1] if y else UNDEFINED for y in f.images))


def inverse(f: PartialBijection) -> PartialBijection:
    images = [UNDEFINED] * f.n
    for x, y in enumerate(f.images, 1):
        if y:
            images[y - 1] = x
    return PartialBijection(f.n, tuple(images))


def _check_support(n: int, points: Sequence[int], allow_empty: bool) -> None:
    if not points and not allow_empty:
        raise EmptySupport("support must be non-empty")
    for x in points:
        _check_point(n, x)
    if len(set(points)) != len(points):
        raise DuplicatePoint(f"repeated point in {list(points)}")


def cycle(n: int, points: Sequence[int]) -> PartialBijection:
    """The cycle ``(x1, ..., xk)``: total, cyclic on the support, identity elsewhere."""
    _check_support(n, points, allow_empty=True)
    images = list(range(1, n + 1))
    for i, x in enumerate(points):
        images[x - 1] = points[(i + 1) % len(points)]
    return PartialBijection(n, tuple(images))


def chain(n: int, points: Sequence[int]) -> PartialBijection:
    """The chain ``[x1, ..., xk]``: ``xi -> x(i+1)``, ``xk`` undefined, identity elsewhere."""
    _check_support(n, points, allow_empty=False)
    images = list(range(1, n + 1))
    for a, b in zip(points, points[1:]):
        images[a - 1] = b
    images[points[-1] - 1] = UNDEFINED
    return PartialBijection(n, tuple(images))


def open_chain(n: int, points: Sequence[int]) -> PartialBijection:
    """The open chain ``<x1, ..., xk>``: defined only on ``x1 .. x(k-1)``."""
    _check_support(n, points, allow_empty=False)
    return make(n, zip(points, points[1:]))


@dataclass(frozen=True)
class ChainDecomposition:
    n: int
    cycles: tuple[tuple[int, ...], ...]
    chains: tuple[tuple[int, ...], ...]

    def factors(self) -> list[PartialBijection]:
        return [cycle(self.n, c) for c in self.cycles] + [chain(self.n, c) for c in self.chains]

    def product(self) -> PartialBijection:
        result = identity(self.n)
        for factor in self.factors():
            result = result * factor
        return result


def chain_decompose(f: PartialBijection) -> ChainDecomposition:
    """Canonical decomposition into disjoint cycles and chains.

    Fixed points are omitted. Every maximal path starting at a point with no
    preimage and ending outside the domain becomes a chain (a singleton chain
    when the point is neither in the domain nor in the range). Cycles start at
    their least point and are sorted by it; chains are sorted by head.
    """
    n, images = f.n, f.images
    ran = f.ran
    seen = set()
    chains = []
    for x in range(1, n + 1):
        if x in ran:
            continue
        path = [x]
        while images[path[-1] - 1]:
            path.append(images[path[-1] - 1])
        seen.update(path)
        chains.append(tuple(path))
    cycles = []
    for x in range(1, n + 1):
        if x in seen or images[x - 1] == x:
            continue
        orbit = [x]
        y = images[x - 1]
        while y != x:
            orbit.append(y)
            y = images[y - 1]
        seen.update(orbit)
        cycles.append(tuple(orbit))
    return ChainDecomposition(n, tuple(cycles), tuple(chains))


def green_R(a: PartialBijection, b: PartialBijection) -> bool:
    if a.n != b.n:
        raise RankMismatch(f"ranks {a.n} and {b.n} differ")
    return a.dom == b.dom


def green_L(a: PartialBijection, b: PartialBijection) -> bool:
    if a.n != b.n:
        raise RankMismatch(f"ranks {a.n} and {b.n} differ")
    return a.ran == b.ran


def green_H(a: PartialBijection, b: PartialBijection) -> bool:
    return green_R(a, b) and green_L(a, b)


def size_is(n: int) -> int:
    """|IS_n| = sum_k C(n,k)^2 k!."""
    from math import comb, factorial

    return sum(comb(n, k) ** 2 * factorial(k) for k in range(n + 1))


@lru_cache(maxsize=None)
def _enumerate(n: int) -> tuple[PartialBijection, ...]:
    out = []
    for images in itertools.product(range(n + 1), repeat=n):
        defined = [y for y in images if y]
        if len(defined) == len(set(defined)):
            out.append(PartialBijection(n, images))
    return tuple(out)


def enumerate_is(n: int, max_n: int | None = None) -> list[PartialBijection]:
    """All elements of IS_n in lexicographic order of their image tuples."""
    bound = DEFAULT_BOUNDS.max_n if max_n is None else max_n
    if n < 0:
        raise PointOutOfRange(f"rank must be non-negative, got {n}")
    if n > bound:
        raise RankTooLarge(f"n={n} exceeds max_n={bound}")
    return list(_enumerate(n))


def idempotents(n: int) -> list[PartialBijection]:
    """The 2^n idempotents ``id_A``, in enumeration order."""
    return sorted(id_on(n, A) for k in range(n + 1) for A in itertools.combinations(range(1, n + 1), k))


def natural_order(e: PartialBijection, f: PartialBijection) -> bool:
    """``e <= f`` iff ``ef = fe = e``."""
    for x in (e, f):
        if not x.is_idempotent():
            raise NotIdempotent(f"{x} is not idempotent")
    return e * f == e and f * e == e


# -- text notation -------------------------------------------------------------

def format_element(f: PartialBijection) -> str:
    if f == zero(f.n):
        return "0"
    if f == identity(f.n):
        return "1"
    d = chain_decompose(f)
    parts = ["(" + ",".join(map(str, c)) + ")" for c in d.cycles]
    parts += ["[" + ",".join(map(str, c)) + "]" for c in d.chains]
    return "".join(parts)


_TERM = re.compile(r"\s*([(\[<])\s*([0-9\s,]*?)\s*([)\]>])\s*")
_CLOSE = {"(": ")", "[": "]", "<": ">"}


def parse_element(text: str, n: int) -> PartialBijection:
    """Parse cycle/chain/open-chain notation; terms multiply left to right."""
    s = text.strip()
    if s == "0":
        return zero(n)
    if s in ("1", ""):
        return identity(n)
    result = identity(n)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or _CLOSE[m.group(1)] != m.group(3):
            raise ParseError(f"cannot parse {text!r} at offset {pos}")
        try:
            pts = [int(p) for p in m.group(2).split(",")] if m.group(2).strip() else []
        except ValueError as exc:
            raise ParseError(f"bad point list in {m.group(0)!r}") from exc
        builder = {"(": cycle, "[": chain, "<": open_chain}[m.group(1)]
        result = result * builder(n, pts)
        pos = m.end()
    return result
