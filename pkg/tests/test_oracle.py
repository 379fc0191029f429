import io
import json

import pytest

from iswreath import cross_sections as cs
from iswreath import isn, oracle, wreath
from iswreath.config import Bounds
from iswreath.errors import NoIdentity, TooLarge
from iswreath.isn import make
from iswreath.semigroup import FiniteSemigroup
from iswreath.structure import is_isomorphism


def test_definitional_green_example(is2):
    a, b = make(2, [(1, 2)]), make(2, [(1, 1)])
    assert oracle.green_r_definitional(a, b, is2)
    assert not oracle.green_l_definitional(a, b, is2)


def test_definitional_matches_criteria_is3(is3):
    for a in is3.elements:
        for b in is3.elements:
            assert oracle.green_r_definitional(a, b, is3) == isn.green_R(a, b)
            assert oracle.green_l_definitional(a, b, is3) == isn.green_L(a, b)


def test_definitional_matches_criteria_wreath(w22):
    R = oracle.green_classes(w22, "R")
    L = oracle.green_classes(w22, "L")
    key_R = {frozenset(c) for c in R}
    key_L = {frozenset(c) for c in L}
    by_r, by_l = {}, {}
    for i, p in enumerate(w22.elements):
        by_r.setdefault(wreath.r_class_key(p), set()).add(i)
        by_l.setdefault(wreath.l_class_key(p), set()).add(i)
    assert {frozenset(s) for s in by_r.values()} == key_R
    assert {frozenset(s) for s in by_l.values()} == key_L
    assert len(R) == len(L) == wreath.count_wreath_idempotents(2, 2)


def test_no_identity():
    ideal = [x for x in isn.enumerate_is(2) if x.rank <= 1]
    S = FiniteSemigroup.from_elements(ideal)
    with pytest.raises(NoIdentity):
        oracle.green_r_definitional(ideal[0], ideal[1], S)
    # with S^1 the rank-1 elements split by domain as usual
    for a in ideal:
        for b in ideal:
            assert oracle.green_r_definitional(a, b, S, adjoin=True) == isn.green_R(a, b)
    # (1->2, 2->1) fails closure: their product 1->1 shares a class with 1->2
    assert len(oracle.find_all_cross_sections(S, "R", adjoin=True)) == 3


@pytest.mark.parametrize("n, count", [(1, 1), (2, 3), (3, 13)])
def test_search_finds_the_built_sections(n, count):
    S = FiniteSemigroup.from_elements(isn.enumerate_is(n))
    for kind, build in (("R", cs.build_r_cross_section), ("L", cs.build_l_cross_section)):
        found = {frozenset(x) for x in oracle.find_all_cross_sections(S, kind)}
        built = {frozenset(build(op).elements) for op in cs.all_ordered_partitions(n)}
        assert len(found) == count and found == built


def test_search_is_deterministic(is3):
    assert list(oracle.iter_cross_sections(is3, "R")) == list(oracle.iter_cross_sections(is3, "R"))


def test_classification_is2_is3(is3):
    sections = [r.semigroup for r in cs.all_r_cross_sections(2)]
    assert len(oracle.classify_isomorphism(sections)) == 2
    sections = [r.semigroup for r in cs.all_r_cross_sections(3)]
    cl = oracle.classify_isomorphism(sections)
    assert sorted(len(c) for c in cl.classes) == [1, 6, 6]
    for (i, j), phi in cl.witnesses.items():
        assert is_isomorphism(sections[i], sections[j], phi)
    assert len(cl.witnesses) == 1 + 36 + 36


def test_classification_singleton():
    S = cs.build_r_cross_section(cs.parse_partition("[1<2]")).semigroup
    cl = oracle.classify_isomorphism([S])
    assert cl.classes == [[0]] and cl.class_of(0) == 0


def test_stream_jsonl(is2):
    buf = io.StringIO()
    assert oracle.stream_cross_sections_jsonl(is2, "R", buf) == 3
    lines = [json.loads(line) for line in buf.getvalue().splitlines()]
    assert len(lines) == 3 and all(d["kind"] == "R" for d in lines)
    back = {frozenset(isn.PartialBijection.from_json(e) for e in d["elements"]) for d in lines}
    assert back == {frozenset(cs.build_r_cross_section(op).elements) for op in cs.all_ordered_partitions(2)}


def test_bounds(is3, w22):
    with pytest.raises(TooLarge):
        list(oracle.iter_cross_sections(is3, "R", bounds=Bounds(max_oracle_size=10)))
    with pytest.raises(TooLarge):
        list(oracle.iter_cross_sections(w22, "R", bounds=Bounds(max_oracle_classes=20)))
    with pytest.raises(TooLarge):
        oracle.classify_isomorphism([w22])
    with pytest.raises(TooLarge):
        list(oracle.iter_cross_sections(w22, "R", time_budget=0))


@pytest.mark.slow
def test_wreath_search_2_2(w22, wreath22_sections):
    found = {frozenset(x) for x in oracle.find_all_cross_sections(w22, "R")}
    built = {frozenset(r.elements) for r in wreath22_sections}
    assert built <= found and len(found) == 21
