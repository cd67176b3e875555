import pytest

from nakct import (
    Case,
    Indec,
    InvalidParameter,
    Kind,
    KindMismatch,
    admits_homog_nct,
    classify_nz,
    decompose,
    enumerate_ct,
    glue,
    homogeneous,
    is_homogeneous,
    projectives,
    self_glue,
    simple,
)
from nakct.tilting import subcategory_key
from conftest import random_algebras


def test_admits_fixtures():
    assert admits_homog_nct(Kind.ACYCLIC, 7, 3, 4)
    assert not admits_homog_nct(Kind.CYCLIC, 4, 3, 2)
    assert admits_homog_nct(Kind.ACYCLIC, 9, 2, 4)
    with pytest.raises(InvalidParameter):
        admits_homog_nct(Kind.ACYCLIC, 7, 1, 4)


def test_admits_agrees_with_brute_force_small():
    for kind, m_range in ((Kind.ACYCLIC, range(2, 8)), (Kind.CYCLIC, range(1, 7))):
        for m in m_range:
            for l in range(2, 5):
                algebra = homogeneous(kind, m, l)
                for n in (2, 3, 4):
                    brute = bool(enumerate_ct(algebra, n, "n", max_ground_set=96))
                    assert admits_homog_nct(kind, m, l, n) == brute, (kind, m, l, n)


def test_decompose_fixtures(glued15, lam_a):
    pieces = decompose(glued15, 4).pieces
    assert [(p.start, p.end, p.loewy) for p in pieces] == [(1, 7, 3), (7, 11, 2), (11, 15, 2)]
    refined = decompose(homogeneous(Kind.ACYCLIC, 9, 2), 4).pieces
    assert [(p.start, p.end, p.loewy) for p in refined] == [(1, 5, 2), (5, 9, 2)]
    assert decompose(lam_a, 4) is None
    with pytest.raises(KindMismatch):
        decompose(homogeneous(Kind.CYCLIC, 4, 2), 2)


def test_decompose_needs_even_n_for_deep_pieces():
    algebra = homogeneous(Kind.ACYCLIC, 7, 4)  # would need n = 3 on an l = 4 piece
    assert decompose(algebra, 3) is None
    assert decompose(homogeneous(Kind.ACYCLIC, 4, 2), 3).pieces[0].loewy == 2


def test_classify_homogeneous_cases():
    stacked = classify_nz(homogeneous(Kind.CYCLIC, 6, 5), 3)
    assert stacked.exists and stacked.case is Case.CYCLIC_HOMOG_STACKED
    assert len(stacked.subcategories) == 3

    radsq = classify_nz(homogeneous(Kind.CYCLIC, 6, 4), 2)
    assert radsq.exists and radsq.case is Case.CYCLIC_HOMOG_STACKED
    assert len(radsq.subcategories) == 2

    acyc = classify_nz(homogeneous(Kind.ACYCLIC, 9, 2), 4)
    assert acyc.case is Case.ACYCLIC_HOMOG_RADSQ
    algebra = homogeneous(Kind.ACYCLIC, 9, 2)
    assert acyc.subcategories[0] == frozenset(
        projectives(algebra) | {simple(algebra, 1), simple(algebra, 5), simple(algebra, 9)}
    )

    deep = classify_nz(homogeneous(Kind.ACYCLIC, 7, 3), 4)
    assert deep.case is Case.ACYCLIC_HOMOG_DEEP and len(deep.subcategories) == 1

    nothing = classify_nz(homogeneous(Kind.CYCLIC, 6, 3), 3)
    assert not nothing.exists and nothing.case is Case.NONE and not nothing.subcategories


def test_classify_glued(glued15):
    result = classify_nz(glued15, 4)
    assert result.exists and result.case is Case.ACYCLIC_GLUED
    assert [(p.start, p.end, p.loewy) for p in result.decomposition.pieces] == [
        (1, 7, 3), (7, 11, 2), (11, 15, 2),
    ]
    assert len(result.subcategories) == 1


def test_classify_self_glued(lam_c):
    result = classify_nz(lam_c, 4)
    assert result.exists and result.case is Case.CYCLIC_SELF_GLUED
    assert len(result.subcategories) == 1
    members = result.subcategories[0]
    assert len(members) == 18
    expected = {
        (1, 1), (1, 2), (1, 3), (2, 4), (3, 5), (4, 6), (5, 7), (6, 7), (7, 7),
        (7, 8), (8, 9), (9, 10), (10, 11), (11, 11), (11, 12), (12, 13),
        (13, 14), (14, 15),
    }
    assert {(x.i, x.j) for x in members} == expected
    assert {Indec(1, 1), Indec(7, 7), Indec(11, 11)} <= members
    assert result.decomposition.self_glued


def test_classify_none_cases(lam_a, lam_b):
    for n in (2, 3, 4, 5):
        assert not classify_nz(lam_a, n).exists
        assert not classify_nz(lam_b, n).exists


def test_cardinality_law():
    samples = [
        (homogeneous(Kind.CYCLIC, 8, 2), 4, 4),
        (homogeneous(Kind.CYCLIC, 6, 5), 3, 3),
        (homogeneous(Kind.ACYCLIC, 9, 2), 4, 1),
        (homogeneous(Kind.ACYCLIC, 7, 3), 4, 1),
        (homogeneous(Kind.CYCLIC, 6, 3), 2, 0),
    ]
    for algebra, n, count in samples:
        assert len(classify_nz(algebra, n).subcategories) == count


def test_odd_n_needs_homogeneous():
    # non-homogeneous algebras never admit for odd n
    for algebra in random_algebras(999, 40, total_cap=30):
        assert is_homogeneous(algebra) is None
        for n in (3, 5):
            assert not classify_nz(algebra, n).exists


def test_gluing_compatibility():
    a1 = homogeneous(Kind.ACYCLIC, 7, 3)
    a2 = homogeneous(Kind.ACYCLIC, 5, 2)
    glued = glue(a1, a2)
    shift = a1.m - 1
    left = classify_nz(a1, 4).subcategories[0]
    right = classify_nz(a2, 4).subcategories[0]
    union = set(left) | {Indec(x.i + shift, x.j + shift) for x in right}
    assert classify_nz(glued, 4).subcategories[0] == frozenset(union)


def test_self_gluing_compatibility():
    base = glue(homogeneous(Kind.ACYCLIC, 5, 2), homogeneous(Kind.ACYCLIC, 9, 4))
    closed = self_glue(base)
    upstairs = classify_nz(base, 4)
    downstairs = classify_nz(closed, 4)
    assert upstairs.exists and downstairs.exists
    m = closed.m
    mapped = set()
    for x in upstairs.subcategories[0]:
        shift = x.i - ((x.i - 1) % m + 1)
        mapped.add(Indec(x.i - shift, x.j - shift))
    assert downstairs.subcategories[0] == frozenset(mapped)


def test_classify_agrees_with_enumeration_random():
    for algebra in random_algebras(31337, 30, total_cap=36):
        for n in (2, 3, 4):
            got = sorted(map(subcategory_key, classify_nz(algebra, n).subcategories))
            want = sorted(map(subcategory_key, enumerate_ct(algebra, n, "nZ", max_ground_set=96)))
            assert got == want, (algebra, n)


def test_forced_boundary_simples(lam_c):
    # in the admitting cyclic non-homogeneous case each block start
    # contributes a simple member that is neither projective nor injective
    from nakct import is_injective, is_projective

    result = classify_nz(lam_c, 4)
    members = result.subcategories[0]
    for piece in result.decomposition.pieces:
        boundary = simple(lam_c, piece.start)
        assert boundary in members
        assert not is_projective(lam_c, boundary)
        assert not is_injective(lam_c, boundary)
