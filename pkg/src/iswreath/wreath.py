"""The partial wreath product IS_m wr_p IS_n.

An element is a pair ``(f, a)`` with ``a`` in IS_n and ``f`` assigning an
element of IS_m to every point of ``dom(a)``. ``f`` is stored as a length-n
tuple holding ``None`` exactly off ``dom(a)``.

Multiplication is ``(f, a)(g, b) = (f g^a, ab)`` with ``g^a(x) = g(xa)``.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from . import isn
from .config import DEFAULT_BOUNDS
from .errors import InvalidWreathElement, ParseError, RankMismatch, RankTooLarge
from .isn import PartialBijection

InnerMap = tuple  # tuple[PartialBijection | None, ...], indexed by point - 1


@dataclass(frozen=True)
class WreathElement:
    m: int
    n: int
    a: PartialBijection
    f: InnerMap

    def __post_init__(self):
        if self.a.n != self.n:
            raise RankMismatch(f"outer part has rank {self.a.n}, expected {self.n}")
        if len(self.f) != self.n:
            raise InvalidWreathElement(f"inner map has length {len(self.f)}, expected {self.n}")
        for x, (y, v) in enumerate(zip(self.a.images, self.f), 1):
            if (y == isn.UNDEFINED) != (v is None):
                raise InvalidWreathElement(f"inner map and outer part disagree on domain at {x}")
            if v is not None and v.n != self.m:
                raise RankMismatch(f"inner value at {x} has rank {v.n}, expected {self.m}")

    def __mul__(self, other: WreathElement) -> WreathElement:
        return w_compose(self, other)

    def __lt__(self, other: WreathElement) -> bool:
        return self.sort_key() < other.sort_key()

    def __str__(self) -> str:
        return format_wreath(self)

    def sort_key(self) -> tuple:
        return (self.a.images, tuple(v.images if v is not None else () for v in self.f))

    def inner(self, x: int) -> PartialBijection | None:
        return self.f[x - 1]

    def is_idempotent(self) -> bool:
        return w_idempotent(self)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "a": self.a.to_json(),
            "f": [None if v is None else v.to_json() for v in self.f],
        }

    @classmethod
    def from_json(cls, data: dict) -> WreathElement:
        try:
            a = PartialBijection.from_json(data["a"])
            f = tuple(None if v is None else PartialBijection.from_json(v) for v in data["f"])
            return cls(int(data["m"]), int(data["n"]), a, f)
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad wreath element JSON: {data!r}") from exc


def make_wreath(m: int, a: PartialBijection, inner: Mapping[int, PartialBijection]) -> WreathElement:
    """Build ``(f, a)`` from the outer part and a dict ``{x: f(x)}`` over ``dom(a)``."""
    if set(inner) != set(a.dom):
        raise InvalidWreathElement(
            f"inner map defined on {sorted(inner)}, outer domain is {sorted(a.dom)}"
        )
    f = tuple(inner.get(x) for x in range(1, a.n + 1))
    return WreathElement(m, a.n, a, f)


def w_identity(m: int, n: int) -> WreathElement:
    return WreathElement(m, n, isn.identity(n), (isn.identity(m),) * n)


def w_zero(m: int, n: int) -> WreathElement:
    return WreathElement(m, n, isn.zero(n), (None,) * n)


def act_super(f: InnerMap, a: PartialBijection) -> InnerMap:
    """``f^a``: ``x -> f(xa)`` on ``{x in dom(a) : xa in dom(f)}``."""
    if len(f) != a.n:
        raise RankMismatch(f"inner map of length {len(f)} against outer rank {a.n}")
    return tuple(f[y - 1] if y else None for y in a.images)


def w_compose(p: WreathElement, q: WreathElement) -> WreathElement:
    if (p.m, p.n) != (q.m, q.n):
        raise RankMismatch(f"IS_{p.m} wr IS_{p.n} vs IS_{q.m} wr IS_{q.n}")
    ab = p.a * q.a
    ga = act_super(q.f, p.a)
    f = tuple(
        isn.compose(p.f[i], ga[i]) if ab.images[i] else None for i in range(p.n)
    )
    return WreathElement(p.m, p.n, ab, f)


def w_inverse(p: WreathElement) -> WreathElement:
    """``(f, a)^-1 = (f', a^-1)`` with ``f'(y) = f(y a^-1)^-1``."""
    ainv = isn.inverse(p.a)
    f = tuple(isn.inverse(p.f[x - 1]) if x else None for x in ainv.images)
    return WreathElement(p.m, p.n, ainv, f)


def w_green_R(p: WreathElement, q: WreathElement) -> bool:
    """Equal outer domains and pointwise R-related inner values."""
    if (p.m, p.n) != (q.m, q.n):
        raise RankMismatch("wreath products differ")
    if not isn.green_R(p.a, q.a):
        return False
    return all(isn.green_R(p.f[z - 1], q.f[z - 1]) for z in p.a.dom)


def w_green_L(p: WreathElement, q: WreathElement) -> bool:
    """Equal outer ranges and ``g^(b^-1)(z) L f^(a^-1)(z)`` on the range."""
    if (p.m, p.n) != (q.m, q.n):
        raise RankMismatch("wreath products differ")
    if not isn.green_L(p.a, q.a):
        return False
    fa = act_super(p.f, isn.inverse(p.a))
    gb = act_super(q.f, isn.inverse(q.a))
    return all(isn.green_L(gb[z - 1], fa[z - 1]) for z in p.a.ran)


def r_class_key(p: WreathElement) -> tuple:
    """Invariant of the R-class: outer domain plus inner domains over it."""
    return (p.a.dom, tuple(p.f[x - 1].dom for x in sorted(p.a.dom)))


def l_class_key(p: WreathElement) -> tuple:
    return r_class_key(w_inverse(p))


def w_idempotent(p: WreathElement) -> bool:
    return p.a.is_idempotent() and all(v.is_idempotent() for v in p.f if v is not None)


def count_wreath_idempotents(m: int, n: int) -> int:
    return (1 + 2 ** m) ** n


def size_wreath(m: int, n: int) -> int:
    """sum over a in IS_n of |IS_m|^|dom(a)|."""
    from math import comb, factorial

    s = isn.size_is(m)
    return sum(comb(n, k) ** 2 * factorial(k) * s ** k for k in range(n + 1))


def check_wreath_bounds(m: int, n: int, spot: bool = False, bounds=DEFAULT_BOUNDS) -> None:
    if m <= bounds.max_wreath_m and n <= bounds.max_wreath_n:
        return
    if spot and m <= bounds.spot_wreath_m and n <= bounds.spot_wreath_n:
        return
    raise RankTooLarge(
        f"(m, n) = ({m}, {n}) exceeds max_wreath_m={bounds.max_wreath_m}, "
        f"max_wreath_n={bounds.max_wreath_n}"
        + (f" (spot mode: {bounds.spot_wreath_m}, {bounds.spot_wreath_n})" if spot else "")
    )


@lru_cache(maxsize=None)
def _enumerate_wreath(m: int, n: int) -> tuple[WreathElement, ...]:
    inner = isn._enumerate(m)
    out = []
    for a in isn._enumerate(n):
        dom = sorted(a.dom)
        for values in itertools.product(inner, repeat=len(dom)):
            f = [None] * n
            for x, v in zip(dom, values):
                f[x - 1] = v
            out.append(WreathElement(m, n, a, tuple(f)))
    return tuple(out)


def enumerate_wreath(m: int, n: int, spot: bool = False, bounds=DEFAULT_BOUNDS) -> list[WreathElement]:
    """All elements, ordered by outer part and then lexicographically by inner map."""
    check_wreath_bounds(m, n, spot=spot, bounds=bounds)
    return list(_enumerate_wreath(m, n))


def random_wreath(m: int, n: int, rng: random.Random) -> WreathElement:
    """A uniformly random element (uniform outer part, uniform inner values)."""
    outer = rng.choice(isn._enumerate(n))
    inner = isn._enumerate(m)
    f = tuple(rng.choice(inner) if y else None for y in outer.images)
    return WreathElement(m, n, outer, f)


def from_pairs(m: int, n: int, outer: Sequence[tuple[int, int]], inner: Mapping[int, Sequence[tuple[int, int]]]) -> WreathElement:
    """Convenience constructor from assignment lists."""
    a = isn.make(n, outer)
    return make_wreath(m, a, {x: isn.make(m, pairs) for x, pairs in inner.items()})


def format_wreath(p: WreathElement) -> str:
    """``<outer> | x:<inner> ...`` in cycle/chain notation."""
    inner = " ".join(f"{x}:{isn.format_element(p.f[x - 1])}" for x in sorted(p.a.dom))
    return f"{isn.format_element(p.a)} | {inner}".rstrip()
