"""Closed-form decision procedures for the existence of nZ-cluster tilting.

Four families admit one: homogeneous algebras subject to arithmetic
conditions on (m, l, n), and non-homogeneous algebras that decompose into
(or self-glue from) homogeneous pieces of global dimension n.  In each
admitting case the subcategories are written down explicitly and re-verified
before being returned; the brute-force enumerator is the ground truth the
decision procedure is tested against, never a fallback.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .algebra import Algebra, Kind, cut_points, is_homogeneous, unglue
from .errors import InternalError, InvalidParameter, KindMismatch
from .modules import Indec, canonical, injectives, projectives, simple
from .tilting import subcategory_key, tau_n_closure, verify_ct


class Case(enum.Enum):
    ACYCLIC_HOMOG_RADSQ = "AcyclicHomogRadSq"
    ACYCLIC_HOMOG_DEEP = "AcyclicHomogDeep"
    CYCLIC_HOMOG_RADSQ = "CyclicHomogRadSq"
    CYCLIC_HOMOG_STACKED = "CyclicHomogStacked"
    ACYCLIC_GLUED = "AcyclicGlued"
    CYCLIC_SELF_GLUED = "CyclicSelfGlued"
    NONE = "None"


@dataclass(frozen=True)
class Piece:
    """A homogeneous stretch from vertex start to vertex end with Loewy length loewy."""

    start: int
    end: int
    loewy: int


@dataclass(frozen=True)
class Decomposition:
    pieces: tuple[Piece, ...]
    self_glued: bool = False


@dataclass(frozen=True)
class ClassificationResult:
    exists: bool
    case: Case
    decomposition: Decomposition | None
    subcategories: tuple[frozenset[Indec], ...]


def admits_homog_nct(kind: Kind | str, m: int, l: int, n: int) -> bool:
    """Whether the homogeneous algebra on (kind, m, l) has an n-cluster
    tilting subcategory (not necessarily nZ); in the cyclic case this is a
    pair of gcd divisibility conditions."""
    if isinstance(kind, str):
        kind = Kind(kind.lower())
    if l < 2 or n < 2 or m < 1 or (kind is Kind.ACYCLIC and m < 2):
        raise InvalidParameter(f"bad parameters kind={kind}, m={m}, l={l}, n={n}")
    d = l * (n - 1) + 2
    if kind is Kind.ACYCLIC:
        if l == 2 and (m - 1) % n == 0:
            return True
        return n % 2 == 0 and (m - 1 - (n // 2) * l) % d == 0
    t = math.gcd(n + 1, 2 * (l - 1))
    return (2 * m) % d == 0 or (t * m) % d == 0


def decompose(algebra: Algebra, n: int) -> Decomposition | None:
    """Parse an acyclic algebra into homogeneous pieces of global dimension n.

    At each piece start the Loewy length is read off as the plateau value of
    the Kupisch pattern c_{s+t} = min(t+1, l); the piece length is then
    forced to n*l/2 and the pattern checked.  Runs of l = 2 are cut into
    length-n pieces, which makes the parse canonical.  Returns None whenever
    any step fails.
    """
    if algebra.kind is not Kind.ACYCLIC:
        raise KindMismatch("decompose applies to acyclic algebras")
    if n < 2:
        raise InvalidParameter("needs n >= 2")
    c = algebra.kupisch
    m = algebra.m
    pieces = []
    s = 1
    while s < m:
        t = 1
        while s + t <= m and c[s + t - 1] == t + 1:
            t += 1
        if s + t > m or c[s + t - 1] != t:
            return None
        l = t
        if (n * l) % 2 or (l >= 3 and n % 2):
            return None
        length = n * l // 2
        if s + length > m:
            return None
        for u in range(1, length + 1):
            if c[s + u - 1] != min(u + 1, l):
                return None
        pieces.append(Piece(s, s + length, l))
        s += length
    return Decomposition(tuple(pieces))


def _acyclic_radsq_members(algebra: Algebra, n: int) -> frozenset[Indec]:
    extra = {simple(algebra, 1 + k * n) for k in range((algebra.m - 1) // n + 1)}
    return frozenset(projectives(algebra) | extra)


def _cyclic_radsq_members(algebra: Algebra, n: int, i: int) -> frozenset[Indec]:
    extra = {simple(algebra, i + k * n) for k in range(algebra.m // n)}
    return frozenset(projectives(algebra) | extra)


def _cyclic_stacked_members(algebra: Algebra, n: int, i: int) -> frozenset[Indec]:
    extra = set()
    for k in range(algebra.m // n):
        extra.add(simple(algebra, i + k * n))
        extra.add(canonical(algebra, i + k * n, i + (k + 1) * n))
    return frozenset(projectives(algebra) | extra)


def _classify_homogeneous(algebra: Algebra, n: int, l: int) -> ClassificationResult:
    m = algebra.m
    if algebra.kind is Kind.ACYCLIC:
        if l == 2 and (m - 1) % n == 0:
            pieces = tuple(Piece(1 + k * n, 1 + (k + 1) * n, 2) for k in range((m - 1) // n))
            return ClassificationResult(
                True,
                Case.ACYCLIC_HOMOG_RADSQ,
                Decomposition(pieces),
                (_acyclic_radsq_members(algebra, n),),
            )
        if l >= 3 and (m - 1) % l == 0 and n == 2 * (m - 1) // l:
            members = frozenset(projectives(algebra) | injectives(algebra))
            return ClassificationResult(
                True,
                Case.ACYCLIC_HOMOG_DEEP,
                Decomposition((Piece(1, m, l),)),
                (members,),
            )
        return ClassificationResult(False, Case.NONE, None, ())
    if l == 2 and m % n == 0:
        subs = tuple(_cyclic_radsq_members(algebra, n, i) for i in range(1, n + 1))
        return ClassificationResult(True, Case.CYCLIC_HOMOG_RADSQ, None, subs)
    if l >= 4 and n == l - 2 and m % n == 0:
        subs = tuple(_cyclic_stacked_members(algebra, n, i) for i in range(1, n + 1))
        return ClassificationResult(True, Case.CYCLIC_HOMOG_STACKED, None, subs)
    return ClassificationResult(False, Case.NONE, None, ())


def _classify_acyclic_glued(algebra: Algebra, n: int) -> ClassificationResult:
    candidate = tau_n_closure(algebra, n)
    verdict = verify_ct(algebra, candidate, n, "nZ").verdict
    decomposition = decompose(algebra, n)
    if verdict != (decomposition is not None):
        raise InternalError(
            f"tau_n-closure verification and decomposition disagree on {algebra}, n={n}"
        )
    if not verdict:
        return ClassificationResult(False, Case.NONE, None, ())
    return ClassificationResult(True, Case.ACYCLIC_GLUED, decomposition, (candidate,))


def _classify_cyclic_selfglued(algebra: Algebra, n: int) -> ClassificationResult:
    m = algebra.m
    found: list[tuple[frozenset[Indec], Decomposition]] = []
    seen_acyclic: set[tuple[int, ...]] = set()
    for p in sorted(cut_points(algebra)):
        unglued = unglue(algebra, p)
        if unglued.kupisch in seen_acyclic:
            continue
        seen_acyclic.add(unglued.kupisch)
        sub = classify_nz(unglued, n)
        if not sub.exists:
            continue
        (members,) = sub.subcategories
        shifted = frozenset(
            canonical(algebra, x.i + p - 1, x.j + p - 1) for x in members
        )
        # piece starts land in 1..m; ends stay un-reduced so that
        # consecutive pieces visibly share endpoints around the cycle
        pieces = []
        for piece in sub.decomposition.pieces:
            start = (piece.start + p - 2) % m + 1
            pieces.append(Piece(start, start + piece.end - piece.start, piece.loewy))
        pieces = tuple(pieces)
        found.append((shifted, Decomposition(pieces, self_glued=True)))
    if not found:
        return ClassificationResult(False, Case.NONE, None, ())
    distinct = {subcategory_key(members) for members, _ in found}
    if len(distinct) > 1:
        raise InternalError(
            f"distinct ungluings of {algebra} induced different subcategories"
        )
    members, decomposition = found[0]
    return ClassificationResult(True, Case.CYCLIC_SELF_GLUED, decomposition, (members,))


def classify_nz(algebra: Algebra, n: int) -> ClassificationResult:
    """Decide existence of nZ-cluster tilting subcategories and construct them."""
    if n < 2:
        raise InvalidParameter("cluster tilting needs n >= 2")
    spec = is_homogeneous(algebra)
    if spec is not None:
        result = _classify_homogeneous(algebra, n, spec.l)
    elif algebra.kind is Kind.ACYCLIC:
        result = _classify_acyclic_glued(algebra, n)
    else:
        result = _classify_cyclic_selfglued(algebra, n)
    for members in result.subcategories:
        if not verify_ct(algebra, members, n, "nZ").verdict:
            raise InternalError(
                f"constructed subcategory failed re-verification on {algebra}, n={n}"
            )
    return result


def result_to_json_dict(result: ClassificationResult) -> dict:
    from .tilting import members_to_json

    out = {
        "exists": result.exists,
        "case": result.case.value,
        "subcategories": [members_to_json(s) for s in result.subcategories],
    }
    if result.decomposition is not None:
        out["pieces"] = [
            [p.start, p.end, p.loewy] for p in result.decomposition.pieces
        ]
        out["self_glued"] = result.decomposition.self_glued
    return out
