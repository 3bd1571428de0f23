"""The six weight families of circle actions with four fixed points.

Jang's classification lists, for every almost complex circle action on a
closed 6-manifold with exactly four fixed points, the possible weight
multisets as one of six parametric families. This module generates those
families and solves the inverse problem: given arbitrary 4-point weight
data, find every (case, parameters) pair that reproduces it, up to
permutation of points, permutation of weights within a point, and global
reversal of the action.

Matching is exhaustive rather than deductive: for each case we enumerate
assignments of data points to the four family slots and of weights to the
three slot entries, and solve the resulting linear system for the
parameters over exact rationals, accepting integral solutions that satisfy
the case's positivity/distinctness constraints. Inconsistent branches are
pruned as soon as the partial system becomes unsolvable, which keeps the
nominal 4! * (3!)^4 search tree small in practice.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Callable, Mapping

from .core import FixedPointData, HomologyProfile, dataset, validate
from .errors import BadParams, InvalidData, MissingProfile, WrongDimension, WrongPointCount


class CaseTag(Enum):
    """The six cases, tagged by their model manifolds."""

    A_CP3 = "A_CP3"
    B_Q3 = "B_Q3"
    C_Fano = "C_Fano"
    D_S6_union = "D_S6_union"
    E_BlP_S6 = "E_BlP_S6"
    F_BlC_S6 = "F_BlC_S6"

    @property
    def letter(self) -> str:
        return self.name[0]


@dataclass(frozen=True)
class JangCase:
    """One family member: a case tag plus its integer parameters."""

    tag: CaseTag
    params: tuple[int, ...]


def jang_case(tag: CaseTag | str, *params: int) -> JangCase:
    """Sugar: jang_case("A", 1, 2, 3) or jang_case(CaseTag.A_CP3, 1, 2, 3)."""
    return JangCase(_coerce_tag(tag), tuple(params))


def _coerce_tag(tag: CaseTag | str) -> CaseTag:
    if isinstance(tag, CaseTag):
        return tag
    text = str(tag).strip()
    for t in CaseTag:
        if text.upper() == t.letter or text == t.value:
            return t
    raise BadParams(f"unknown case tag {tag!r}; expected A..F or one of "
                    f"{[t.value for t in CaseTag]}")


# Weight rows of each family as functions of the parameters. These are the
# single source of truth: the matcher derives its linear forms from them.
_FAMILIES: Mapping[CaseTag, tuple[tuple[str, ...], Callable[..., tuple]]] = {
    CaseTag.A_CP3: (("a", "b", "c"), lambda a, b, c: (
        (a, b, c), (-a, b - a, c - a), (-b, a - b, c - b), (-c, a - c, b - c))),
    CaseTag.B_Q3: (("a", "b"), lambda a, b: (
        (a, a + b, a + 2 * b), (-a, b, a + 2 * b),
        (-a - 2 * b, -b, a), (-a - 2 * b, -a - b, -a))),
    CaseTag.C_Fano: (("a",), lambda a: (
        (1, 2, 3), (-1, 1, a), (-1, 1, -a), (-1, -2, -3))),
    CaseTag.D_S6_union: (("a", "b", "c", "d"), lambda a, b, c, d: (
        (a, b, -a - b), (-a, -b, a + b), (c, d, -c - d), (-c, -d, c + d))),
    CaseTag.E_BlP_S6: (("a", "b"), lambda a, b: (
        (-3 * a - b, a, b), (-2 * a - b, 3 * a + b, 3 * a + 2 * b),
        (-a, -a - b, 2 * a + b), (-b, -3 * a - 2 * b, a + b))),
    CaseTag.F_BlC_S6: (("a", "b"), lambda a, b: (
        (-a - b, 2 * a + b, b), (-2 * a - b, a, b),
        (-b, -2 * a - b, a + b), (-a, -b, 2 * a + b))),
}


def _all_positive(params: tuple[int, ...]) -> bool:
    return all(p >= 1 for p in params)


_CONSTRAINTS: Mapping[CaseTag, Callable[[tuple[int, ...]], bool]] = {
    CaseTag.A_CP3: lambda ps: _all_positive(ps) and len(set(ps)) == 3,
    CaseTag.B_Q3: _all_positive,
    # Case C takes *any* integer a; a = 0 is accepted syntactically even
    # though the resulting zero weight fails dataset validation downstream.
    CaseTag.C_Fano: lambda ps: True,
    CaseTag.D_S6_union: _all_positive,
    CaseTag.E_BlP_S6: _all_positive,
    CaseTag.F_BlC_S6: _all_positive,
}

# Number of all-positive weight vectors each family forces (its Todd genus):
# one for the cases with Td = 1, none for the cases with Td = 0. Used to
# prune whole cases before any linear algebra.
_EXPECTED_N0: Mapping[CaseTag, int] = {
    CaseTag.A_CP3: 1, CaseTag.B_Q3: 1, CaseTag.C_Fano: 1,
    CaseTag.D_S6_union: 0, CaseTag.E_BlP_S6: 0, CaseTag.F_BlC_S6: 0,
}


def _pin_positive(coeff: int, rhs: int) -> bool:
    # coeff * x = rhs with coeff > 0: solvable by an integer x >= 1?
    return rhs % coeff == 0 and rhs >= coeff


def _pin_integer(coeff: int, rhs: int) -> bool:
    return rhs % coeff == 0


# Mid-search prune for parameters the solver has already pinned: every case
# needs integral parameters, and all but case C need positive ones.
_PIN_OK: Mapping[CaseTag, Callable[[int, int], bool]] = {
    tag: (_pin_integer if tag is CaseTag.C_Fano else _pin_positive)
    for tag in CaseTag
}


def _derive_forms(fn: Callable[..., tuple], k: int):
    """Affine forms (coeffs, const) of every template entry, by probing."""
    zero = fn(*([0] * k))
    units = [fn(*(1 if j == i else 0 for j in range(k))) for i in range(k)]
    forms = []
    for s in range(4):
        slot = []
        for e in range(3):
            const = zero[s][e]
            slot.append((tuple(units[i][s][e] - const for i in range(k)), const))
        forms.append(tuple(slot))
    return tuple(forms)


_FORMS = {tag: _derive_forms(fn, len(names)) for tag, (names, fn) in _FAMILIES.items()}


def param_names(tag: CaseTag | str) -> tuple[str, ...]:
    """The parameter names a case expects, in order."""
    return _FAMILIES[_coerce_tag(tag)][0]


def gen_family(case: JangCase) -> FixedPointData:
    """The 4-point dataset of a family member, points named p1..p4.

    Raises BadParams when the parameters violate the case's constraints
    (wrong arity, non-positive entries where positivity is required, or a
    repeated value in case A).
    """
    names, fn = _FAMILIES[case.tag]
    if len(case.params) != len(names):
        raise BadParams(f"case {case.tag.value} takes parameters {names}, "
                        f"got {len(case.params)} value(s)")
    if not all(isinstance(p, int) and not isinstance(p, bool) for p in case.params):
        raise BadParams(f"parameters must be integers, got {case.params!r}")
    if not _CONSTRAINTS[case.tag](case.params):
        raise BadParams(f"parameters {case.params} violate the constraints of case "
                        f"{case.tag.value}")
    rows = fn(*case.params)
    return dataset(3, ((f"p{i + 1}", ws) for i, ws in enumerate(rows)))


# ---------------------------------------------------------------------------
# inverse problem
# ---------------------------------------------------------------------------

class _IncrementalSolver:
    """Exact integer-row Gaussian elimination with O(1) backtracking.

    Equations coeffs . x = rhs are pushed one at a time; push() reports an
    immediate contradiction, which is what makes the assignment search
    prune. Rows are kept as gcd-reduced integer vectors so no Fractions
    appear until the final back-substitution.
    """

    __slots__ = ("_k", "_pivots")

    def __init__(self, k: int):
        self._k = k
        self._pivots: list[tuple[int, list[int]]] = []

    def mark(self) -> int:
        return len(self._pivots)

    def rollback(self, mark: int) -> None:
        del self._pivots[mark:]

    def push(self, coeffs, rhs: int) -> bool:
        row = list(coeffs)
        row.append(rhs)
        for col, prow in self._pivots:
            rc = row[col]
            if rc:
                pc = prow[col]
                row = [x * pc - y * rc for x, y in zip(row, prow)]
        piv = -1
        for i in range(self._k):
            if row[i]:
                piv = i
                break
        if piv < 0:
            return row[self._k] == 0
        if row[piv] < 0:
            row = [-x for x in row]
        g = 0
        for x in row:
            g = gcd(g, x)
        if g > 1:
            row = [x // g for x in row]
        self._pivots.append((piv, row))
        return True

    def solution(self) -> list[Fraction] | None:
        if len(self._pivots) < self._k:
            return None
        xs: list[Fraction] = [Fraction(0)] * self._k
        for col, row in sorted(self._pivots, key=lambda cr: -cr[0]):
            acc = Fraction(row[self._k])
            for m in range(col + 1, self._k):
                if row[m]:
                    acc -= row[m] * xs[m]
            xs[col] = acc / row[col]
        return xs


def _distinct_orders(ws: tuple[int, ...]):
    return sorted(set(permutations(ws)))


def _search(tag: CaseTag, pts: tuple[tuple[int, ...], ...],
            orders: list[list[tuple[int, ...]]],
            group: list[int]):
    """All (params, slot->point) pairs reproducing pts for the given case.

    Points with equal weight multisets are interchangeable in any
    assignment, so the search places only the first unused member of each
    group and leaves the bookkeeping of which twin went where to the
    caller. A complete consistent system forces template(params) == data
    entry by entry, so no re-generation check is needed at the leaves.
    """
    forms = _FORMS[tag]
    constraint = _CONSTRAINTS[tag]
    pin_ok = _PIN_OK[tag]
    k = len(_FAMILIES[tag][0])
    solver = _IncrementalSolver(k)
    pivots = solver._pivots
    assignment = [-1] * 4
    used = [False] * 4
    results: list[tuple[tuple[int, ...], tuple[int, ...]]] = []

    def place(slot: int) -> None:
        if slot == 4:
            sol = solver.solution()
            if sol is None or any(v.denominator != 1 for v in sol):
                return
            params = tuple(int(v) for v in sol)
            if constraint(params):
                results.append((params, tuple(assignment)))
            return
        for pi in range(4):
            if used[pi]:
                continue
            if any(group[pj] == group[pi] and not used[pj] for pj in range(pi)):
                continue  # an identical twin already stands for this branch
            for ordering in orders[pi]:
                mk = solver.mark()
                ok = True
                for (coeffs, const), value in zip(forms[slot], ordering):
                    if not solver.push(coeffs, value - const):
                        ok = False
                        break
                if ok:
                    # prune on parameters this slot has pinned outright:
                    # a singleton row coeff * x_j = rhs admits no integral
                    # (resp. positive) solution exactly when the whole
                    # branch admits none
                    for col, row in pivots[mk:]:
                        if not any(row[i] for i in range(k) if i != col):
                            if not pin_ok(row[col], row[k]):
                                ok = False
                                break
                if ok:
                    used[pi] = True
                    assignment[slot] = pi
                    place(slot + 1)
                    used[pi] = False
                solver.rollback(mk)

    place(0)
    return results


@dataclass(frozen=True)
class CaseMatch:
    """One way the data fits a family.

    assignment[s] is the name of the data point occupying family slot s.
    When reversed is true the family reproduces the data only after
    negating all generated weights (the reversed circle action).
    """

    case: JangCase
    assignment: tuple[str, str, str, str]
    reversed: bool


@dataclass(frozen=True)
class ClassificationResult:
    """Every match, deduplicated by (case, params, reversed) and sorted."""

    matches: tuple[CaseMatch, ...]

    def tags(self) -> set[CaseTag]:
        return {m.case.tag for m in self.matches}

    def __bool__(self) -> bool:
        return bool(self.matches)


_TAG_ORDER = {tag: i for i, tag in enumerate(CaseTag)}


def classify(data: FixedPointData) -> ClassificationResult:
    """Match 4-point weight data against all six families.

    Returns every (case, parameters, assignment, reversed) tuple whose
    generated family equals the data as a multiset of weight multisets;
    the list is empty when nothing fits (that is a report, not an error).
    Ties in parameter recovery coming from different assignments are
    deduplicated, keeping the lexicographically smallest assignment, so the
    result does not depend on the order of points or of weights within a
    point.
    """
    violations = validate(data)
    if violations:
        raise InvalidData(violations)
    if data.n != 3:
        raise WrongDimension(f"classification needs n = 3, got n = {data.n}")
    if len(data.points) != 4:
        raise WrongPointCount(f"classification needs exactly 4 fixed points, "
                              f"got {len(data.points)}")
    names = data.names()
    rows = data.weight_rows()
    multisets = [tuple(sorted(ws)) for ws in rows]
    group_keys = sorted(set(multisets))
    group = [group_keys.index(m) for m in multisets]
    names_by_group = {g: sorted(names[i] for i in range(4) if group[i] == g)
                      for g in set(group)}
    found: dict[tuple[CaseTag, tuple[int, ...], bool], tuple[str, ...]] = {}
    for rev in (False, True):
        pts = rows if not rev else tuple(tuple(-w for w in ws) for ws in rows)
        n0 = sum(1 for ws in pts if all(w > 0 for w in ws))
        orders = [_distinct_orders(ws) for ws in pts]
        for tag in CaseTag:
            if n0 != _EXPECTED_N0[tag]:
                continue
            for params, assign in _search(tag, pts, orders, group):
                key = (tag, params, rev)
                if key in found:
                    continue
                # canonical assignment: all assignments for fixed params
                # differ only by permuting identical points, so handing out
                # each group's sorted names in slot order gives the
                # lexicographically smallest one
                slot_names = [""] * 4
                handed: dict[int, int] = {}
                for s in range(4):
                    g = group[assign[s]]
                    slot_names[s] = names_by_group[g][handed.get(g, 0)]
                    handed[g] = handed.get(g, 0) + 1
                found[key] = tuple(slot_names)
    ordered = sorted(found.items(),
                     key=lambda kv: (_TAG_ORDER[kv[0][0]], kv[0][1], kv[0][2]))
    return ClassificationResult(tuple(
        CaseMatch(JangCase(tag, params), slots, rev)
        for (tag, params, rev), slots in ordered))


# ---------------------------------------------------------------------------
# diffeotype recognition
# ---------------------------------------------------------------------------

QUADRIC_Q3 = "quadric Q^3"
S4_X_S2 = "S^4 x S^2"


def recognize_diffeotype(
    data: FixedPointData,
    profile: HomologyProfile,
    context: Mapping[str, str] | None = None,
    classification: ClassificationResult | None = None,
) -> str | None:
    """Name the diffeomorphism type when one of the recognition rules applies.

    Two rules are implemented; anything else returns None rather than
    guessing:

    * data matching case F on a simply connected, torsion-free manifold
      with b3 = 0 (integrally equivariantly formal) is the quadric 3-fold;
    * data marked as the fiber connect sum of two standard 6-spheres
      (labels construction = "kustarev-sum", summands = "S^6,S^6") is
      S^4 x S^2.

    `context` defaults to the dataset's own labels; pass a precomputed
    `classification` to skip re-running classify().
    """
    if profile is None:
        raise MissingProfile("diffeotype recognition needs a homology profile")
    # the two rules are mutually exclusive (case-F rows have nonzero weight
    # sums, sphere-sum rows sum to zero), so the cheap provenance check goes
    # first and spares sum data a classification pass
    ctx = dict(context) if context is not None else dict(data.labels)
    if ctx.get("construction") == "kustarev-sum" and ctx.get("summands") == "S^6,S^6":
        return S4_X_S2
    if len(data.points) == 4:
        result = classification if classification is not None else classify(data)
        fits_case_f = any(m.case.tag is CaseTag.F_BlC_S6 for m in result.matches)
        if (fits_case_f and profile.simply_connected and profile.torsion_free
                and profile.b3 == 0):
            return QUADRIC_Q3
    return None
