import itertools

import numpy as np
import pytest

from iswreath import cross_sections as cs
from iswreath import isn, structure, wreath
from iswreath.cross_sections import CrossSection, parse_partition
from iswreath.errors import NotIdempotent, NotIsomorphism, TooLarge
from iswreath.structure import (
    IdempotentPoset,
    check_conjugacy_isn,
    check_conjugacy_wreath,
    conjugator_isn,
    conjugator_wreath,
    count_N_e,
    count_N_e_direct,
    cross_section_isomorphisms,
    find_isomorphisms,
    recover_partition,
)


def R(text):
    return cs.build_r_cross_section(parse_partition(text))


def brute_isomorphisms(S, T):
    """Every bijection, filtered by the homomorphism property."""
    out = []
    for perm in itertools.permutations(range(len(T))):
        p = np.asarray(perm)
        if np.array_equal(p[S.table], T.table[np.ix_(p, p)]):
            out.append(tuple(perm))
    return sorted(out)


# -- block idempotents ---------------------------------------------------------------

def test_block_idempotent_examples():
    r = R("[1<2][3]")
    assert structure.is_block_idempotent(isn.zero(3), r)
    assert structure.is_block_idempotent(isn.id_on(3, [1, 2]), r)
    assert not structure.is_block_idempotent(isn.identity(3), r)
    with pytest.raises(NotIdempotent):
        structure.is_block_idempotent(isn.make(3, [(1, 2)]), r)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_two_block_tests_agree(n):
    for op in cs.all_ordered_partitions(n):
        r = cs.build_r_cross_section(op)
        for e in r.idempotents():
            assert (structure.is_block_idempotent(e, r, "order")
                    == structure.is_block_idempotent(e, r, "definition"))
        if len(op.blocks) == 1:
            assert all(structure.is_block_idempotent(e, r) for e in r.idempotents())


def test_idempotent_poset():
    for r in cs.all_r_cross_sections(3):
        poset = IdempotentPoset.of(r)
        assert poset.is_partial_order()
        assert poset.minimum() == isn.zero(3)
        # idempotents of R(M_1..M_s) are id of upper segments, one per block cut
        assert len(poset.elements) == np.prod([len(b) + 1 for b in r.partition.blocks])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_recover_partition_round_trip(n):
    for op in cs.all_ordered_partitions(n):
        r = cs.build_r_cross_section(op)
        assert recover_partition(CrossSection("R", r.ambient, r.elements)) == op
        l = cs.build_l_cross_section(op)
        assert recover_partition(CrossSection("L", l.ambient, l.elements)) == op


def test_recover_semilattice():
    E = CrossSection("R", cs.isn_ambient(3), tuple(isn.idempotents(3)))
    assert recover_partition(E).blocks == ((1,), (2,), (3,))


# -- isomorphism search ------------------------------------------------------------------

def test_find_isomorphisms_against_brute_force_is2():
    sections = cs.all_r_cross_sections(2)
    for a in sections:
        for b in sections:
            assert find_isomorphisms(a.semigroup, b.semigroup) == brute_isomorphisms(a.semigroup, b.semigroup)


@pytest.mark.parametrize("p, q", [("[1<2<3]", "[3<1<2]"), ("[1<2][3]", "[1][2<3]"), ("[1][2][3]", "[1][2][3]")])
def test_find_isomorphisms_against_brute_force_is3(p, q):
    S, T = R(p).semigroup, R(q).semigroup
    assert find_isomorphisms(S, T) == brute_isomorphisms(S, T)


def test_find_isomorphisms_examples(isn3_sections):
    for r in isn3_sections:
        S = r.semigroup
        assert tuple(range(len(S))) in find_isomorphisms(S, S)
    assert find_isomorphisms(R("[1][2]").semigroup, R("[1<2]").semigroup) == []
    assert len(find_isomorphisms(R("[1<2<3]").semigroup, R("[2<3<1]").semigroup)) >= 1


def test_find_isomorphisms_bound(w22):
    with pytest.raises(TooLarge):
        find_isomorphisms(w22, w22)


# -- IS_n conjugators -----------------------------------------------------------------------

def test_conjugator_identity():
    r = R("[1<2][3]")
    phi = {x: x for x in r}
    c = conjugator_isn(r, r, phi)
    assert check_conjugacy_isn(c.theta, phi) is None


def test_conjugator_transposition():
    r1, r2 = R("[1<2]"), R("[2<1]")
    (phi,) = cross_section_isomorphisms(r1, r2)
    c = conjugator_isn(r1, r2, phi)
    assert c.theta == (2, 1) and c.via == "construction"
    assert c.to_json() == {"theta": [2, 1], "vartheta": None}


def test_conjugator_every_is3_isomorphism(isn3_sections):
    count = 0
    for a in isn3_sections:
        for b in isn3_sections:
            for phi in cross_section_isomorphisms(a, b):
                c = conjugator_isn(a, b, phi)
                assert c.via == "construction"
                theta = isn.from_permutation(c.theta)
                for alpha in a:
                    assert phi[alpha] == isn.inverse(theta) * alpha * theta
                count += 1
    assert count > 0


def test_conjugator_l_sections():
    a, b = cs.build_l_cross_section(parse_partition("[1<2][3]")), cs.build_l_cross_section(parse_partition("[3<1][2]"))
    for phi in cross_section_isomorphisms(a, b):
        c = conjugator_isn(a, b, phi)
        assert check_conjugacy_isn(c.theta, phi) is None


def test_search_fallback_agrees(monkeypatch, isn3_sections):
    built = {}
    pairs = [(a, b, phi) for a in isn3_sections[:4] for b in isn3_sections
             for phi in cross_section_isomorphisms(a, b)]
    for i, (a, b, phi) in enumerate(pairs):
        built[i] = conjugator_isn(a, b, phi).theta
    monkeypatch.setattr(structure, "_nu_construction", lambda *args: None)
    for i, (a, b, phi) in enumerate(pairs):
        c = conjugator_isn(a, b, phi)
        assert c.via == "search" and c.theta == built[i]


def test_conjugator_rejects_non_isomorphism():
    r = R("[1<2]")
    phi = {x: isn.identity(2) for x in r}
    with pytest.raises(NotIsomorphism):
        conjugator_isn(r, r, phi)


# -- wreath conjugators -----------------------------------------------------------------------

def test_wreath_conjugator_identity(wreath22_sections):
    for r in wreath22_sections:
        phi = {x: x for x in r}
        c = conjugator_wreath(r, r, phi)
        assert c.theta == (1, 2) and c.vartheta == ((1, 2), (1, 2))


def test_wreath_conjugator_all_2_2(wreath22_sections):
    total = 0
    for a in wreath22_sections:
        for b in wreath22_sections:
            for phi in cross_section_isomorphisms(a, b):
                c = conjugator_wreath(a, b, phi)
                assert c.via == "construction"
                assert check_conjugacy_wreath(c.theta, c.vartheta, phi) is None
                assert all(structure.conjugate(p, c) == q for p, q in phi.items())
                total += 1
    assert total > 0


@pytest.mark.parametrize("m, n", [(1, 2), (2, 1), (1, 3), (3, 1)])
def test_wreath_conjugator_other_sizes(m, n):
    sections = cs.all_wreath_r_cross_sections(m, n)
    for a in sections:
        for b in sections[:6]:
            for phi in cross_section_isomorphisms(a, b):
                c = conjugator_wreath(a, b, phi)
                assert check_conjugacy_wreath(c.theta, c.vartheta, phi) is None


def test_wreath_fallback_agrees(monkeypatch, wreath22_sections):
    a, b = wreath22_sections[0], wreath22_sections[1]
    isos = cross_section_isomorphisms(a, b) or cross_section_isomorphisms(a, a)
    target = b if cross_section_isomorphisms(a, b) else a
    expected = [conjugator_wreath(a, target, phi) for phi in isos]
    monkeypatch.setattr(structure, "_wreath_construction", lambda *args: None)
    for phi, c0 in zip(isos, expected):
        c = conjugator_wreath(a, target, phi)
        assert c.via == "search" and (c.theta, c.vartheta) == (c0.theta, c0.vartheta)


def test_wreath_conjugator_l_sections(wreath22_sections):
    ls = [cs.inverse_cross_section(r) for r in wreath22_sections[:5]]
    for a in ls:
        for b in ls:
            for phi in cross_section_isomorphisms(a, b):
                c = conjugator_wreath(a, b, phi)
                assert all(structure.conjugate(p, c) == q for p, q in phi.items())


# -- N_e counts ------------------------------------------------------------------------------

def test_count_N_e_examples(wreath22_sections):
    r = wreath22_sections[0]
    assert count_N_e(wreath.w_zero(2, 2), r) == 1 == count_N_e_direct(wreath.w_zero(2, 2), r)
    e0 = wreath.WreathElement(2, 2, isn.identity(2), (isn.zero(2), isn.zero(2)))
    assert count_N_e(e0, r) == 2 ** 2 == count_N_e_direct(e0, r)
    assert count_N_e(wreath.w_identity(2, 2), r) == 25 == len(r)
    with pytest.raises(NotIdempotent):
        count_N_e(from_pairs_swap(), r)


def from_pairs_swap():
    return wreath.from_pairs(2, 2, [(1, 2), (2, 1)], {1: [], 2: []})


def test_count_N_e_all_idempotents(wreath22_sections):
    for r in wreath22_sections:
        for e in r.idempotents():
            assert count_N_e(e, r) == count_N_e_direct(e, r)
