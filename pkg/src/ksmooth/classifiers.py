"""Closed-form smoothness classifiers for operators with every domain vertex norming.

Two families are covered:

* ``linf^n -> Y`` with ``Y`` two-dimensional: the order depends on the operator
  rank, on whether some vertex image sits inside an edge of ``T(B_X)``, and on
  the rank of the vertices whose images are not smooth;
* ``linf^3 -> l1^3``: vertices are partitioned by the order of their images
  into ``S1, S2, S3`` and a decision table maps the counts plus a condition on
  the supporting sets to the order.

Conditions on supporting sets are evaluated on the finite sets
``+-Ext J(Tx) = Ext J(Tx) u -Ext J(Tx)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Union

from . import linalg as la
from .errors import HypothesisViolation, InfeasibleTriple, InputError, UnmappedCase
from .geometry import PolyhedralSpace, UnitVector, space_l1, space_linf, support_set
from .operators import (
    Operator,
    interior_segment_flag,
    normalize,
    norming_extremes,
    operator_rank,
    oracle_order,
    smoothness_order_operator,
)

INFEASIBLE = "infeasible"
QUANTIFIER_READINGS = ("forall", "exists")


@dataclass(frozen=True)
class SmoothnessPartition:
    """Domain vertices grouped by the order of smoothness of their images."""

    operator: Operator = field(repr=False, compare=False)
    s1: tuple
    s2: tuple
    s3: tuple
    support: dict = field(repr=False, compare=False, default_factory=dict)

    @property
    def counts(self) -> tuple:
        return (len(self.s1), len(self.s2), len(self.s3))

    @property
    def vertices(self) -> tuple:
        return tuple(sorted(self.support))

    def pm_ext(self, v) -> frozenset:
        ext = self.support[v].ext_functionals
        return frozenset(ext) | frozenset(la.neg(g) for g in ext)

    def representatives(self) -> list:
        """One vertex from each antipodal pair, lexicographically largest first."""
        seen, reps = set(), []
        for v in sorted(self.support, reverse=True):
            if la.neg(v) not in seen:
                seen.add(v)
                reps.append(v)
        return reps


def partition(t: Operator) -> SmoothnessPartition:
    if t.codomain.dim > 3:
        raise HypothesisViolation("codomain dimension must be at most 3")
    tn = normalize(t)
    verts = tn.domain.ball.vertices
    norming = norming_extremes(tn)
    if len(norming) != len(verts):
        raise HypothesisViolation(f"only {len(norming)} of {len(verts)} domain vertices are norming")
    groups = {1: [], 2: [], 3: []}
    support = {}
    for v in verts:
        sup = support_set(UnitVector(tn.codomain, tn.apply(v)))
        support[v] = sup
        groups[sup.order].append(v)
    return SmoothnessPartition(tn, tuple(groups[1]), tuple(groups[2]), tuple(groups[3]), support)


@dataclass(frozen=True)
class ConditionProfile:
    eq_s1: bool
    s1_in_ext_s2: bool
    cap_s2_ge2: bool
    cap_all4: int
    pairwise_ext_ne2_forall: bool
    pairwise_ext_ne2_exists: bool
    cap_s2_ext_eq4: bool
    operator_rank: int
    s1_rank: int
    nonsmooth_rank: int
    interior_segment: bool

    def pairwise_ext_ne2(self, reading: str = "forall") -> bool:
        if reading not in QUANTIFIER_READINGS:
            raise InputError(f"quantifier reading must be one of {QUANTIFIER_READINGS}")
        return self.pairwise_ext_ne2_forall if reading == "forall" else self.pairwise_ext_ne2_exists

    def as_dict(self) -> dict:
        return {
            "eqS1": self.eq_s1,
            "s1InExtS2": self.s1_in_ext_s2,
            "capS2Ge2": self.cap_s2_ge2,
            "capAll4": self.cap_all4,
            "pairwiseExtNe2Forall": self.pairwise_ext_ne2_forall,
            "pairwiseExtNe2Exists": self.pairwise_ext_ne2_exists,
            "capS2ExtEq4": self.cap_s2_ext_eq4,
            "operatorRank": self.operator_rank,
            "s1Rank": self.s1_rank,
            "nonsmoothRank": self.nonsmooth_rank,
            "interiorSegment": self.interior_segment,
        }


def _intersection(sets: list) -> frozenset:
    if not sets:
        return frozenset()
    out = sets[0]
    for s in sets[1:]:
        out = out & s
    return out


def eval_conditions(t: Operator, part: Optional[SmoothnessPartition] = None) -> ConditionProfile:
    part = part or partition(t)
    pm = part.pm_ext
    s1 = [pm(v) for v in part.s1]
    s2 = [pm(v) for v in part.s2]
    reps = [pm(v) for v in part.representatives()]
    pair_sizes = [len(a & b) for a, b in combinations(reps, 2)]
    cap_s2 = len(_intersection(s2))
    tn = part.operator
    return ConditionProfile(
        eq_s1=all(a == s1[0] for a in s1),
        s1_in_ext_s2=all(a <= b for a in s1 for b in s2),
        cap_s2_ge2=bool(s2) and cap_s2 >= 2,
        cap_all4=len(_intersection(reps)),
        pairwise_ext_ne2_forall=all(k != 2 for k in pair_sizes),
        pairwise_ext_ne2_exists=any(k != 2 for k in pair_sizes),
        cap_s2_ext_eq4=bool(s2) and cap_s2 == 4,
        operator_rank=operator_rank(tn),
        s1_rank=la.span_dim(list(part.s1)),
        nonsmooth_rank=la.span_dim(list(part.s2) + list(part.s3)),
        interior_segment=interior_segment_flag(tn) if tn.codomain.dim == 2 else False,
    )


# -- decision table for linf^3 -> l1^3 ----------------------------------------


@dataclass(frozen=True)
class TableRow:
    triple: tuple
    condition: str
    order: int

    @property
    def rule_id(self) -> str:
        a, b, c = self.triple
        return f"linf3-l1:3 ({a},{b},{c}) {self.condition}"


# Conditions are tried top to bottom within a triple; "otherwise" always matches.
TABLE_ROWS = (
    TableRow((8, 0, 0), "eq-s1", 3),
    TableRow((8, 0, 0), "otherwise", 4),
    TableRow((6, 2, 0), "eq-s1 & s1-in-ext-s2", 4),
    TableRow((6, 2, 0), "otherwise", 5),
    TableRow((4, 4, 0), "eq-s1 & s1-in-ext-s2", 5),
    TableRow((4, 4, 0), "otherwise", 6),
    TableRow((2, 6, 0), "cap-s2>=2 & s1-in-ext-s2", 6),
    TableRow((2, 6, 0), "otherwise", 7),
    TableRow((0, 8, 0), "cap-all=4", 6),
    TableRow((0, 8, 0), "cap-all=2 | pairwise-ext!=2", 7),
    TableRow((0, 8, 0), "otherwise", 8),
    TableRow((6, 0, 2), "eq-s1", 5),
    TableRow((6, 0, 2), "otherwise", 6),
    TableRow((4, 2, 2), "eq-s1 & s1-in-ext-s2", 6),
    TableRow((4, 2, 2), "otherwise", 7),
    TableRow((2, 4, 2), "unconditional", 7),
    TableRow((0, 6, 2), "cap-s2-ext=4", 7),
    TableRow((0, 6, 2), "otherwise", 8),
    TableRow((4, 0, 4), "unconditional", 7),
    TableRow((0, 4, 4), "unconditional", 8),
    TableRow((0, 0, 8), "unconditional", 9),
)
INFEASIBLE_TRIPLES = frozenset({(2, 2, 4), (2, 0, 6), (0, 2, 6)})
TABLE_TRIPLES = tuple(dict.fromkeys(r.triple for r in TABLE_ROWS))


def _condition_holds(name: str, prof: ConditionProfile, reading: str) -> bool:
    if name in ("otherwise", "unconditional"):
        return True
    if name == "eq-s1":
        return prof.eq_s1
    if name == "eq-s1 & s1-in-ext-s2":
        return prof.eq_s1 and prof.s1_in_ext_s2
    if name == "cap-s2>=2 & s1-in-ext-s2":
        return prof.cap_s2_ge2 and prof.s1_in_ext_s2
    if name == "cap-all=4":
        return prof.cap_all4 == 4
    if name == "cap-all=2 | pairwise-ext!=2":
        return prof.cap_all4 == 2 or prof.pairwise_ext_ne2(reading)
    if name == "cap-s2-ext=4":
        return prof.cap_s2_ext_eq4
    raise UnmappedCase(f"unknown table condition {name!r}")


def table_lookup(triple: tuple, prof: ConditionProfile, reading: str = "forall") -> TableRow:
    triple = tuple(triple)
    if triple in INFEASIBLE_TRIPLES:
        raise InfeasibleTriple(f"partition counts {triple} are listed as infeasible")
    rows = [r for r in TABLE_ROWS if r.triple == triple]
    if not rows:
        raise UnmappedCase(f"no table row for partition counts {triple}")
    for row in rows:
        if _condition_holds(row.condition, prof, reading):
            return row
    raise UnmappedCase(f"no condition matched for {triple}")


# -- verdicts -----------------------------------------------------------------


@dataclass
class ClassifierVerdict:
    source_rule: str
    predicted: Union[int, str]
    computed: Optional[int]
    oracle: Optional[int] = None
    triple: Optional[tuple] = None
    profile: Optional[ConditionProfile] = field(default=None, repr=False)

    @property
    def agree(self) -> bool:
        if self.predicted == INFEASIBLE or self.computed is None:
            return False
        return self.predicted == self.computed and (self.oracle is None or self.oracle == self.computed)

    def as_dict(self) -> dict:
        out = {
            "sourceRule": self.source_rule,
            "predicted": self.predicted,
            "computed": self.computed,
            "oracle": self.oracle,
            "agree": self.agree,
        }
        if self.triple is not None:
            out["partition"] = list(self.triple)
        if self.profile is not None:
            out["conditions"] = self.profile.as_dict()
        return out


def _is_linf(space: PolyhedralSpace) -> bool:
    return space.ball == space_linf(space.dim).ball


def _finish(v: ClassifierVerdict, t: Operator, with_oracle: bool) -> ClassifierVerdict:
    v.computed = smoothness_order_operator(t).order
    if with_oracle and t.domain.dim * t.codomain.dim <= 9:
        v.oracle = oracle_order(t)
    return v


def classify_linf_to_2d(t: Operator, with_oracle: bool = True) -> ClassifierVerdict:
    """Order predicted from rank, edge membership of vertex images, and the rank
    of vertices with non-smooth images."""
    n = t.domain.dim
    if n < 2 or not _is_linf(t.domain):
        raise HypothesisViolation("domain must be linf^n with n >= 2")
    if t.codomain.dim != 2:
        raise HypothesisViolation("codomain must be two-dimensional")
    part = partition(t)
    prof = eval_conditions(t, part)
    if not part.s2:
        if prof.operator_rank == 1:
            rule, k = "linf-2d all-smooth rank-1", n
        elif prof.interior_segment:
            rule, k = "linf-2d all-smooth rank-2 interior-segment", n
        else:
            rule, k = "linf-2d all-smooth rank-2 no-interior-segment", 2 * n - 2
    else:
        rule, k = "linf-2d non-smooth n+rank", n + prof.nonsmooth_rank
    return _finish(ClassifierVerdict(rule, k, None, triple=part.counts, profile=prof), part.operator, with_oracle)


def classify_linf3_to_l13(t: Operator, reading: str = "forall", with_oracle: bool = True) -> ClassifierVerdict:
    if t.domain.ball != space_linf(3).ball or t.codomain.ball != space_l1(3).ball:
        raise HypothesisViolation("classifier requires linf^3 -> l1^3")
    part = partition(t)
    prof = eval_conditions(t, part)
    triple = part.counts
    try:
        row = table_lookup(triple, prof, reading)
    except InfeasibleTriple as exc:
        verdict = _finish(ClassifierVerdict(f"linf3-l1:3 {triple} infeasible", INFEASIBLE, None, triple=triple, profile=prof), part.operator, with_oracle)
        raise InfeasibleTriple(str(exc), verdict) from None
    return _finish(ClassifierVerdict(row.rule_id, row.order, None, triple=triple, profile=prof), part.operator, with_oracle)


def classify(t: Operator, reading: str = "forall", with_oracle: bool = True) -> ClassifierVerdict:
    """Dispatch to whichever classifier covers the operator's spaces."""
    if t.codomain.dim == 2:
        return classify_linf_to_2d(t, with_oracle)
    if t.codomain.dim == 3:
        return classify_linf3_to_l13(t, reading, with_oracle)
    raise HypothesisViolation("no classifier for this pair of spaces")
