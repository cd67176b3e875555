"""Verification and exhaustive enumeration of cluster-tilting subcategories.

A candidate subcategory is a set of indecomposables (standing for its
additive closure).  Verification checks containment of projectives and
injectives, pairwise Ext-orthogonality in degrees 1..n-1, the two
perpendicularity equalities, and (in nZ mode) closure under the n-th
syzygy.  Enumeration walks maximal orthogonal supersets of the forced
members and filters them through the verifier: maximality is necessary but
not sufficient.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .algebra import Algebra
from .errors import GroundSetTooLarge, InvalidParameter, InvalidSubcategory
from .modules import (
    ZERO,
    Indec,
    ext_dims_upto,
    indecomposables,
    injectives,
    is_projective,
    omega,
    projectives,
    tau_n,
)

DEFAULT_MAX_GROUND_SET = 64
_ENV_MAX_GROUND_SET = "NAKCT_MAX_GROUND_SET"


@dataclass(frozen=True)
class Failure:
    kind: str
    module: Indec | None = None
    other: Indec | None = None
    degree: int | None = None
    side: str | None = None

    def to_json_dict(self) -> dict:
        out = {"kind": self.kind}
        if self.module is not None:
            out["module"] = [self.module.i, self.module.j]
        if self.other is not None:
            out["other"] = [self.other.i, self.other.j]
        if self.degree is not None:
            out["degree"] = self.degree
        if self.side is not None:
            out["side"] = self.side
        return out


@dataclass(frozen=True)
class VerifyReport:
    verdict: bool
    failures: tuple[Failure, ...]


def subcategory_key(members) -> tuple:
    """Canonical sort key: the lexicographically ordered member list."""
    return tuple(sorted(members))


def members_to_json(members) -> list:
    return [[m.i, m.j] for m in sorted(members)]


def members_from_json(algebra: Algebra, data) -> frozenset[Indec]:
    from .modules import indec

    if isinstance(data, dict):
        data = data.get("members")
    if not isinstance(data, list):
        raise InvalidSubcategory("subcategory JSON must be {\"members\": [[i,j],...]}")
    out = set()
    for pair in data:
        try:
            i, j = int(pair[0]), int(pair[1])
        except (TypeError, ValueError, IndexError):
            raise InvalidSubcategory(f"bad member entry {pair!r}")
        try:
            out.add(indec(algebra, i, j))
        except InvalidParameter as exc:
            raise InvalidSubcategory(str(exc))
    return frozenset(out)


def verify_ct(algebra: Algebra, members, n: int, mode: str = "nZ") -> VerifyReport:
    """Check whether ``members`` is an n- (or nZ-) cluster tilting subcategory."""
    if n < 2:
        raise InvalidParameter("cluster tilting needs n >= 2")
    if mode not in ("n", "nZ"):
        raise InvalidParameter("mode must be 'n' or 'nZ'")
    members = frozenset(members)
    ground = indecomposables(algebra)
    ground_set = set(ground)
    if not members <= ground_set:
        bad = sorted(members - ground_set)[0]
        raise InvalidSubcategory(f"{bad} is not a module over {algebra}")

    failures: list[Failure] = []
    kmax = n - 1

    for p in sorted(projectives(algebra)):
        if p not in members:
            failures.append(Failure("MissingProjective", module=p))
    for q in sorted(injectives(algebra)):
        if q not in members:
            failures.append(Failure("MissingInjective", module=q))

    ordered = sorted(members)
    for x in ordered:
        for y in ordered:
            dims = ext_dims_upto(algebra, x, y, kmax)
            for k in range(1, kmax + 1):
                if dims[k - 1]:
                    failures.append(
                        Failure("OrthogonalityFailure", module=x, other=y, degree=k)
                    )

    for z in ground:
        if z in members:
            continue
        hit_left = any(
            any(ext_dims_upto(algebra, c, z, kmax)) for c in ordered
        )
        hit_right = any(
            any(ext_dims_upto(algebra, z, c, kmax)) for c in ordered
        )
        if hit_left and hit_right:
            continue
        side = "both" if not hit_left and not hit_right else ("left" if not hit_left else "right")
        failures.append(Failure("PerpGap", module=z, side=side))

    if mode == "nZ":
        for x in ordered:
            if is_projective(algebra, x):
                continue
            image = omega(algebra, x, n)
            if image is not ZERO and image not in members:
                failures.append(Failure("NotClosedUnderOmegaN", module=x))

    return VerifyReport(verdict=not failures, failures=tuple(failures))


def tau_n_closure(algebra: Algebra, n: int) -> frozenset[Indec]:
    """Smallest member set containing the projectives and closed under tau_n^-."""
    if n < 2:
        raise InvalidParameter("needs n >= 2")
    members = set(projectives(algebra))
    queue = sorted(members)
    while queue:
        current = queue.pop()
        succ = tau_n(algebra, current, n, "bwd")
        if succ is not ZERO and succ not in members:
            members.add(succ)
            queue.append(succ)
    return frozenset(members)


def _ground_bound(max_ground_set: int | None) -> int:
    if max_ground_set is not None:
        return max_ground_set
    env = os.environ.get(_ENV_MAX_GROUND_SET)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InvalidParameter(f"bad {_ENV_MAX_GROUND_SET}={env!r}")
    return DEFAULT_MAX_GROUND_SET


def enumerate_ct(
    algebra: Algebra,
    n: int,
    mode: str = "nZ",
    max_ground_set: int | None = None,
) -> list[frozenset[Indec]]:
    """All n- or nZ-cluster tilting subcategories, by exhaustive search.

    Candidates are the maximal conflict-free supersets of the forced members
    (projectives and injectives), where two modules conflict when some Ext
    between them in degrees 1..n-1 is nonzero; each candidate then passes
    through the full verifier.  Output is sorted lexicographically.
    """
    if n < 2:
        raise InvalidParameter("cluster tilting needs n >= 2")
    if mode not in ("n", "nZ"):
        raise InvalidParameter("mode must be 'n' or 'nZ'")
    bound = _ground_bound(max_ground_set)
    if sum(algebra.kupisch) > bound:
        raise GroundSetTooLarge(
            f"{sum(algebra.kupisch)} indecomposables exceeds the bound {bound}"
        )

    ground = indecomposables(algebra)
    kmax = n - 1
    size = len(ground)
    index = {module: x for x, module in enumerate(ground)}

    nonzero = [[False] * size for _ in range(size)]
    for x, mx in enumerate(ground):
        for y, my in enumerate(ground):
            nonzero[x][y] = any(ext_dims_upto(algebra, mx, my, kmax))

    conflict = [0] * size
    for x in range(size):
        for y in range(size):
            if nonzero[x][y] or nonzero[y][x]:
                conflict[x] |= 1 << y

    forced = sorted({index[p] for p in projectives(algebra) | injectives(algebra)})
    forced_mask = 0
    for x in forced:
        forced_mask |= 1 << x
    for x in forced:
        if conflict[x] & forced_mask:
            return []

    free = [
        x
        for x in range(size)
        if not (forced_mask >> x) & 1
        and not (conflict[x] >> x) & 1
        and not conflict[x] & forced_mask
    ]
    # branch on high-conflict vertices first; prunes fastest
    free.sort(key=lambda x: (-bin(conflict[x]).count("1"), x))
    free_mask = 0
    for x in free:
        free_mask |= 1 << x

    maximal: list[int] = []

    def expand(included: int, candidates: int, excluded: int):
        # Bron-Kerbosch with pivoting on the compatibility (conflict-free) graph
        if not candidates:
            if not excluded:
                maximal.append(included)
            return
        pool = candidates | excluded
        pivot = max(
            (x for x in free if (pool >> x) & 1),
            key=lambda x: bin(candidates & ~conflict[x] & ~(1 << x)).count("1"),
        )
        branch = (candidates & conflict[pivot]) | (candidates & (1 << pivot))
        for x in free:
            if not (branch >> x) & 1:
                continue
            bit = 1 << x
            expand(
                included | bit,
                candidates & ~conflict[x] & ~bit,
                excluded & ~conflict[x] & ~bit,
            )
            candidates &= ~bit
            excluded |= bit

    expand(0, free_mask, 0)

    results = []
    for mask in maximal:
        chosen = forced_mask | mask
        members = frozenset(ground[x] for x in range(size) if (chosen >> x) & 1)
        if _passes(algebra, ground, index, nonzero, conflict, chosen, members, n, mode):
            results.append(members)
    results.sort(key=subcategory_key)
    return results


def _passes(algebra, ground, index, nonzero, conflict, chosen, members, n, mode) -> bool:
    """Fast verifier for enumeration candidates (conflict-freeness is given)."""
    for z, mz in enumerate(ground):
        if (chosen >> z) & 1:
            continue
        hit_left = hit_right = False
        for c in range(len(ground)):
            if not (chosen >> c) & 1:
                continue
            hit_left = hit_left or nonzero[c][z]
            hit_right = hit_right or nonzero[z][c]
            if hit_left and hit_right:
                break
        if not (hit_left and hit_right):
            return False
    if mode == "nZ":
        for module in members:
            if is_projective(algebra, module):
                continue
            image = omega(algebra, module, n)
            if image is not ZERO and image not in members:
                return False
    return True
