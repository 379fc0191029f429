"""R- and L-cross-sections of IS_n and of IS_m wr_p IS_n.

Every R-cross-section of IS_n comes from an ordered partition of {1..n}: a
set partition whose blocks each carry a linear order. On the element with
domain A, block ``M = (m_1 < ... < m_k)`` sends the chosen points of ``A``
order-preservingly onto the top ``|A n M|`` points of ``M``.

The wreath construction glues, block by block, ``R_i wr_p R(M_i)`` with one
IS_m R-cross-section ``R_i`` per block.
"""
from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Sequence, Union

from . import isn, wreath
from .config import DEFAULT_BOUNDS, Bounds
from .errors import (
    AmbientTooLarge,
    ComponentNotCrossSection,
    InvalidPartition,
    NoPartitionRecoverable,
    ParseError,
)
from .isn import PartialBijection
from .semigroup import FiniteSemigroup
from .wreath import WreathElement

Element = Union[PartialBijection, WreathElement]


# -- ordered partitions ----------------------------------------------------------

@dataclass(frozen=True)
class OrderedPartition:
    """Blocks listed in their linear order; blocks kept sorted by least point."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(tuple(int(x) for x in b) for b in self.blocks)
        if any(not b for b in blocks):
            raise InvalidPartition("empty block")
        points = [x for b in blocks for x in b]
        if sorted(points) != list(range(1, self.n + 1)):
            raise InvalidPartition(f"blocks {[list(b) for b in blocks]} do not partition 1..{self.n}")
        object.__setattr__(self, "blocks", tuple(sorted(blocks, key=min)))

    def __str__(self) -> str:
        return "".join("[" + "<".join(map(str, b)) + "]" for b in self.blocks)

    def block_of(self, x: int) -> int:
        for i, b in enumerate(self.blocks):
            if x in b:
                return i
        raise InvalidPartition(f"point {x} not covered")

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    @classmethod
    def from_json(cls, data: dict) -> OrderedPartition:
        try:
            return cls(int(data["n"]), tuple(tuple(b) for b in data["blocks"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad ordered partition JSON: {data!r}") from exc


_BLOCK = re.compile(r"\[\s*(\d+(?:\s*<\s*\d+)*)\s*\]")


def parse_partition(text: str, n: int | None = None) -> OrderedPartition:
    """Parse ``[1<2][3]``; ``n`` defaults to the largest listed point."""
    s = re.sub(r"\s+", "", text)
    blocks, pos = [], 0
    while pos < len(s):
        m = _BLOCK.match(s, pos)
        if not m:
            raise ParseError(f"cannot parse partition {text!r} at offset {pos}")
        blocks.append(tuple(int(p) for p in m.group(1).split("<")))
        pos = m.end()
    if not blocks:
        raise ParseError(f"empty partition {text!r}")
    if n is None:
        n = max(x for b in blocks for x in b)
    return OrderedPartition(n, tuple(blocks))


def _set_partitions(points: list[int]):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def set_partitions(n: int) -> list[list[list[int]]]:
    return list(_set_partitions(list(range(1, n + 1))))


def all_ordered_partitions(n: int) -> list[OrderedPartition]:
    """Every ordered partition of {1..n}, sorted by canonical string."""
    out = set()
    for part in _set_partitions(list(range(1, n + 1))):
        for orders in itertools.product(*(itertools.permutations(b) for b in part)):
            out.add(OrderedPartition(n, tuple(orders)))
    return sorted(out, key=lambda op: op.blocks)


# -- ambients and cross-section values ---------------------------------------------

@dataclass(frozen=True)
class Ambient:
    kind: str            # "isn" or "wreath"
    n: int
    m: int | None = None

    def __str__(self) -> str:
        return f"IS_{self.n}" if self.kind == "isn" else f"IS_{self.m} wr IS_{self.n}"

    @property
    def idempotent_count(self) -> int:
        if self.kind == "isn":
            return 2 ** self.n
        return wreath.count_wreath_idempotents(self.m, self.n)

    def contains(self, x) -> bool:
        if self.kind == "isn":
            return isinstance(x, PartialBijection) and x.n == self.n
        return isinstance(x, WreathElement) and (x.m, x.n) == (self.m, self.n)

    def class_key(self, kind: str) -> Callable:
        if self.kind == "isn":
            return (lambda a: a.dom) if kind == "R" else (lambda a: a.ran)
        return wreath.r_class_key if kind == "R" else wreath.l_class_key

    def to_json(self) -> dict:
        if self.kind == "isn":
            return {"type": "isn", "n": self.n}
        return {"type": "wreath", "m": self.m, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> Ambient:
        if data.get("type") == "isn":
            return cls("isn", int(data["n"]))
        if data.get("type") == "wreath":
            return cls("wreath", int(data["n"]), int(data["m"]))
        raise ParseError(f"bad ambient {data!r}")


def isn_ambient(n: int) -> Ambient:
    return Ambient("isn", n)


def wreath_ambient(m: int, n: int) -> Ambient:
    return Ambient("wreath", n, m)


def _sort_key(x):
    return x.sort_key() if isinstance(x, WreathElement) else (x.images,)


@dataclass(frozen=True)
class CrossSection:
    kind: str
    ambient: Ambient
    elements: tuple
    partition: OrderedPartition | None = None
    components: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in ("R", "L"):
            raise ValueError(f"kind must be 'R' or 'L', got {self.kind!r}")
        object.__setattr__(self, "elements", tuple(sorted(set(self.elements), key=_sort_key)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self.element_set

    @cached_property
    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    @cached_property
    def semigroup(self) -> FiniteSemigroup:
        return FiniteSemigroup.from_elements(self.elements)

    def representative(self, key) -> Element:
        """The unique element in the class with the given class key."""
        return self._by_key[key]

    @cached_property
    def _by_key(self) -> dict:
        k = self.ambient.class_key(self.kind)
        return {k(x): x for x in self.elements}

    def idempotents(self) -> list:
        return [x for x in self.elements if x.is_idempotent()]

    def to_json(self) -> dict:
        prov = None
        if self.partition is not None:
            prov = {"partition": self.partition.to_json()}
            if self.components is not None:
                prov["components"] = [
                    c.partition.to_json() if c.partition is not None else None for c in self.components
                ]
        return {
            "kind": self.kind,
            "ambient": self.ambient.to_json(),
            "provenance": prov,
            "elements": [x.to_json() for x in self.elements],
        }

    @classmethod
    def from_json(cls, data: dict) -> CrossSection:
        try:
            ambient = Ambient.from_json(data["ambient"])
            decode = PartialBijection.from_json if ambient.kind == "isn" else WreathElement.from_json
            elements = tuple(decode(x) for x in data["elements"])
            kind = data["kind"]
            prov = data.get("provenance") or {}
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad cross-section JSON: {exc}") from exc
        partition = OrderedPartition.from_json(prov["partition"]) if prov.get("partition") else None
        return cls(kind, ambient, elements, partition)


# -- validation ---------------------------------------------------------------------

@dataclass(frozen=True)
class Diagnosis:
    ok: bool
    clause: str | None = None
    witness: tuple = ()
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        return "valid" if self.ok else f"{self.clause}: {self.message}"


def validate_cross_section(cand: Iterable, ambient: Ambient, kind: str, bounds: Bounds = DEFAULT_BOUNDS) -> Diagnosis:
    """Check closure, then that every R- (L-) class is hit exactly once.

    Class membership uses the domain/range criteria (with pointwise inner
    criteria in the wreath case); those criteria are checked against the
    definitional relations by the oracle tests.
    """
    if ambient.n > bounds.max_validate_n or (ambient.m or 0) > bounds.max_validate_n:
        raise AmbientTooLarge(f"{ambient} exceeds max_validate_n={bounds.max_validate_n}")
    elems = list(dict.fromkeys(cand))
    for x in elems:
        if not ambient.contains(x):
            return Diagnosis(False, "membership", (x,), f"{x} is not an element of {ambient}")
    present = set(elems)
    for x in elems:
        for y in elems:
            p = x * y
            if p not in present:
                return Diagnosis(False, "closure", (x, y, p), f"({x}) * ({y}) = {p} is not in the set")
    key = ambient.class_key(kind)
    seen = {}
    for x in elems:
        k = key(x)
        if k in seen:
            return Diagnosis(False, "unique-representative", (seen[k], x),
                             f"{seen[k]} and {x} lie in the same {kind}-class")
        seen[k] = x
    expected = ambient.idempotent_count
    if len(seen) != expected:
        return Diagnosis(False, "every-class", (), f"hits {len(seen)} of {expected} {kind}-classes")
    return Diagnosis(True)


# -- IS_n construction -----------------------------------------------------------------

def closure(generators: Iterable, mul: Callable = lambda x, y: x * y) -> set:
    """Subsemigroup generated by ``generators``."""
    gens = list(dict.fromkeys(generators))
    found = set(gens)
    queue = deque(gens)
    while queue:
        x = queue.popleft()
        for g in gens:
            for p in (mul(x, g), mul(g, x)):
                if p not in found:
                    found.add(p)
                    queue.append(p)
    return found


def r_elements_direct(op: OrderedPartition) -> set[PartialBijection]:
    """One element per domain A: each block maps A's points onto its top points."""
    n = op.n
    out = set()
    for mask in range(2 ** n):
        pairs = []
        for block in op.blocks:
            chosen = [x for x in block if mask >> (x - 1) & 1]
            top = block[len(block) - len(chosen):]
            pairs.extend(zip(chosen, top))
        out.add(isn.make(n, pairs))
    return out


def chain_generators(op: OrderedPartition) -> list[PartialBijection]:
    """The chains ``[m_1, ..., m_j]`` over every block prefix."""
    return [isn.chain(op.n, block[:j]) for block in op.blocks for j in range(1, len(block) + 1)]


def r_elements_generated(op: OrderedPartition) -> set[PartialBijection]:
    """Closure of the block-prefix chains, with the unity adjoined."""
    return closure(chain_generators(op)) | {isn.identity(op.n)}


def build_r_cross_section(op: OrderedPartition, check: bool = True) -> CrossSection:
    direct = r_elements_direct(op)
    if check:
        generated = r_elements_generated(op)
        if generated != direct:
            raise AssertionError(f"generated and direct constructions differ for {op}")
    return CrossSection("R", isn_ambient(op.n), tuple(direct), op)


def build_l_cross_section(op: OrderedPartition) -> CrossSection:
    r = build_r_cross_section(op)
    return CrossSection("L", r.ambient, tuple(isn.inverse(x) for x in r.elements), op)


def all_r_cross_sections(n: int) -> list[CrossSection]:
    return [build_r_cross_section(op) for op in all_ordered_partitions(n)]


def inverse_cross_section(cs: CrossSection) -> CrossSection:
    """Elementwise inverse: R-cross-sections to L-cross-sections and back."""
    inv = isn.inverse if cs.ambient.kind == "isn" else wreath.w_inverse
    return CrossSection("L" if cs.kind == "R" else "R", cs.ambient,
                        tuple(inv(x) for x in cs.elements), cs.partition, cs.components)


# -- wreath construction ---------------------------------------------------------------

ComponentSpec = Union[CrossSection, OrderedPartition]


def _component(c: ComponentSpec, m: int | None) -> CrossSection:
    if isinstance(c, OrderedPartition):
        return build_r_cross_section(c)
    if c.ambient.kind != "isn" or c.kind != "R" or (m is not None and c.ambient.n != m):
        raise ComponentNotCrossSection(f"component must be an R-cross-section of IS_{m}, got {c.kind} in {c.ambient}")
    diag = validate_cross_section(c.elements, c.ambient, "R")
    if not diag:
        raise ComponentNotCrossSection(f"component is not an R-cross-section: {diag}")
    return c


def wreath_r_elements(op: OrderedPartition, comps: Sequence[CrossSection]) -> list[WreathElement]:
    m = comps[0].ambient.n
    outer = r_elements_direct(op)
    out = []
    for a in sorted(outer):
        dom = sorted(a.dom)
        choices = [comps[op.block_of(x)].elements for x in dom]
        for values in itertools.product(*choices):
            out.append(wreath.make_wreath(m, a, dict(zip(dom, values))))
    return out


def build_wreath_r_cross_section(op: OrderedPartition, comps: Sequence[ComponentSpec]) -> CrossSection:
    """``phi_mu`` applied to the product of ``comps[i] wr_p R(M_i)`` over the blocks."""
    if len(comps) != len(op.blocks):
        raise InvalidPartition(f"{len(op.blocks)} blocks but {len(comps)} components")
    first = comps[0]
    m = first.n if isinstance(first, OrderedPartition) else first.ambient.n
    cs = tuple(_component(c, m) for c in comps)
    return CrossSection("R", wreath_ambient(m, op.n), tuple(wreath_r_elements(op, cs)), op, cs)


def build_wreath_l_cross_section(op: OrderedPartition, comps: Sequence[ComponentSpec]) -> CrossSection:
    return inverse_cross_section(build_wreath_r_cross_section(op, comps))


def all_wreath_r_cross_sections(m: int, n: int) -> list[CrossSection]:
    """Every constructed one: each ordered partition of n with each choice of components."""
    inner = all_r_cross_sections(m)
    out = []
    for op in all_ordered_partitions(n):
        for comps in itertools.product(inner, repeat=len(op.blocks)):
            out.append(build_wreath_r_cross_section(op, comps))
    return out


def restrict_to_block(x: WreathElement, block: Sequence[int]) -> tuple:
    """``(f|_M, a|_M)`` as a hashable value."""
    a = x.a.restrict(block)
    return (a, tuple(x.f[p - 1] if a.images[p - 1] else None for p in range(1, x.n + 1)))


# -- type vectors ---------------------------------------------------------------------

def type_vector(cs: CrossSection) -> tuple[int, ...]:
    """``u_k`` = number of blocks of size ``k``."""
    if cs.ambient.kind != "isn":
        raise NoPartitionRecoverable("type vectors are defined for IS_n cross-sections")
    op = cs.partition
    if op is None:
        from .structure import recover_partition

        try:
            op = recover_partition(cs)
        except Exception as exc:
            raise NoPartitionRecoverable(str(exc)) from exc
    return partition_type(op)


def partition_type(op: OrderedPartition) -> tuple[int, ...]:
    u = [0] * op.n
    for b in op.blocks:
        u[len(b) - 1] += 1
    return tuple(u)

