"""Brute-force ground truth over fully tabulated semigroups.

Nothing here uses the domain/range criteria: Green's relations are computed
from principal one-sided ideals, cross-sections are found by search over
those classes, and isomorphism classes come from the table-level search.
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .config import DEFAULT_BOUNDS, Bounds
from .errors import NoIdentity, TooLarge
from .semigroup import FiniteSemigroup
from .structure import element_profiles, find_isomorphisms


def _ideals(S: FiniteSemigroup, side: str, adjoin: bool) -> list[frozenset[int]]:
    if not adjoin and S.identity() is None:
        raise NoIdentity("semigroup has no identity; pass adjoin=True to use S^1")
    get = S.right_ideal if side == "R" else S.left_ideal
    return [get(i, adjoin) for i in range(len(S))]


def green_r_definitional(a, b, S: FiniteSemigroup, adjoin: bool = False) -> bool:
    """``aS = bS`` (``aS^1 = bS^1`` with ``adjoin``)."""
    i, j = S.index[a], S.index[b]
    if not adjoin and S.identity() is None:
        raise NoIdentity("semigroup has no identity; pass adjoin=True to use S^1")
    return S.right_ideal(i, adjoin) == S.right_ideal(j, adjoin)


def green_l_definitional(a, b, S: FiniteSemigroup, adjoin: bool = False) -> bool:
    """``Sa = Sb`` (``S^1 a = S^1 b`` with ``adjoin``)."""
    i, j = S.index[a], S.index[b]
    if not adjoin and S.identity() is None:
        raise NoIdentity("semigroup has no identity; pass adjoin=True to use S^1")
    return S.left_ideal(i, adjoin) == S.left_ideal(j, adjoin)


def green_classes(S: FiniteSemigroup, kind: str, adjoin: bool = False) -> list[list[int]]:
    """R- or L-classes as sorted index lists, ordered by (size, least member)."""
    groups: dict[frozenset, list[int]] = {}
    for i, ideal in enumerate(_ideals(S, kind, adjoin)):
        groups.setdefault(ideal, []).append(i)
    return sorted(groups.values(), key=lambda c: (len(c), c[0]))


def iter_cross_sections(S: FiniteSemigroup, kind: str, adjoin: bool = False,
                        bounds: Bounds = DEFAULT_BOUNDS,
                        time_budget: float | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every cross-section (as a sorted index tuple) in deterministic order.

    Classes are filled smallest first. Every choice is closed against the
    choices already made: a product landing in a class whose representative is
    already fixed must equal it, and a product landing in an open class fixes
    that class's representative.

    With ``time_budget`` (seconds) the search raises :class:`TooLarge` once
    the budget is spent; results already yielded stay valid.
    """
    if len(S) > bounds.max_oracle_size:
        raise TooLarge(f"|S| = {len(S)} exceeds max_oracle_size={bounds.max_oracle_size}")
    classes = green_classes(S, kind, adjoin)
    if len(classes) > bounds.max_oracle_classes:
        raise TooLarge(f"{len(classes)} classes exceed max_oracle_classes={bounds.max_oracle_classes}")
    cls_of = {}
    for c, members in enumerate(classes):
        for i in members:
            cls_of[i] = c
    rows = S.rows
    k = len(classes)
    deadline = None if time_budget is None else time.monotonic() + time_budget

    def close(rep: list, chosen: list, new: int) -> bool:
        pending = [new]
        while pending:
            x = pending.pop()
            chosen.append(x)
            for y in list(chosen):
                for p in (rows[x][y], rows[y][x]):
                    c = cls_of[p]
                    if rep[c] == -1:
                        rep[c] = p
                        pending.append(p)
                    elif rep[c] != p:
                        return False
        return True

    def search(rep: list, chosen: list):
        c = next((c for c in range(k) if rep[c] == -1), None)
        if c is None:
            yield tuple(sorted(rep))
            return
        if deadline is not None and time.monotonic() > deadline:
            raise TooLarge(f"search exceeded its time budget of {time_budget}s")
        for x in classes[c]:
            rep2, chosen2 = rep[:], chosen[:]
            rep2[c] = x
            if close(rep2, chosen2, x):
                yield from search(rep2, chosen2)

    yield from search([-1] * k, [])


def find_all_cross_sections(S: FiniteSemigroup, kind: str, adjoin: bool = False,
                            bounds: Bounds = DEFAULT_BOUNDS) -> list[list]:
    """Every R- (L-) cross-section of ``S``, as lists of elements."""
    return [[S.elements[i] for i in sel] for sel in iter_cross_sections(S, kind, adjoin, bounds)]


def stream_cross_sections_jsonl(S: FiniteSemigroup, kind: str, out, adjoin: bool = False,
                                time_budget: float | None = None) -> int:
    """Write one JSON line per cross-section; returns the number written."""
    count = 0
    for sel in iter_cross_sections(S, kind, adjoin, time_budget=time_budget):
        out.write(json.dumps({"kind": kind, "elements": [S.elements[i].to_json() for i in sel]}) + "\n")
        count += 1
    return count


@dataclass
class Classification:
    classes: list[list[int]]
    witnesses: dict[tuple[int, int], tuple[int, ...]] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, i: int) -> int:
        for c, members in enumerate(self.classes):
            if i in members:
                return c
        raise KeyError(i)


def classify_isomorphism(semigroups: Sequence[FiniteSemigroup], bounds: Bounds = DEFAULT_BOUNDS) -> Classification:
    """Group by isomorphism; store one isomorphism for every intra-class pair.

    Witnesses map the first class member onto each other member; other pairs
    are composed from those.
    """
    for S in semigroups:
        if len(S) > bounds.max_iso_size:
            raise TooLarge(f"semigroup of size {len(S)} exceeds max_iso_size={bounds.max_iso_size}")
    fingerprints = [(len(S), tuple(sorted(element_profiles(S)))) for S in semigroups]
    classes: list[list[int]] = []
    from_rep: dict[int, tuple[int, ...]] = {}
    for i, S in enumerate(semigroups):
        for members in classes:
            r = members[0]
            if fingerprints[r] != fingerprints[i]:
                continue
            found = find_isomorphisms(semigroups[r], S, limit=1, max_size=bounds.max_iso_size)
            if found:
                members.append(i)
                from_rep[i] = found[0]
                break
        else:
            classes.append([i])
            from_rep[i] = tuple(range(len(S)))
    witnesses = {}
    for members in classes:
        for i in members:
            inv_i = _invert(from_rep[i])
            for j in members:
                witnesses[(i, j)] = tuple(from_rep[j][r] for r in inv_i)
    return Classification(classes, witnesses)


def _invert(phi: Sequence[int]) -> list[int]:
    out = [0] * len(phi)
    for i, j in enumerate(phi):
        out[j] = i
    return out
