"""Seeded verification campaigns.

Every campaign is a pure function of its configuration: operator ``i`` is
built from ``derive_seed(seed, i)`` alone, so results do not depend on worker
count and extending ``count`` only appends records.
"""

from __future__ import annotations

import random
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from . import linalg as la
from .classifiers import (
    INFEASIBLE,
    INFEASIBLE_TRIPLES,
    QUANTIFIER_READINGS,
    TABLE_ROWS,
    classify_linf3_to_l13,
    classify_linf_to_2d,
    table_lookup,
)
from .errors import GeneratorExhausted, InfeasibleTriple, InputError, KSmoothError
from .generators import DEFAULT_DENOMINATOR_BOUND, STRATEGIES, generate_all_vertices_norming, random_operator
from .geometry import space_l1, verify_face_theorem
from .io import operator_to_json, resolve_space
from .operators import normalize, operator_rank, oracle_order, segment_pair_structure, smoothness_order_operator
from .polytope import HPolytope, all_faces, polar, random_polytope, vertex_enumeration

SEED_STRIDE = 1_000_003


def derive_seed(seed: int, index: int) -> int:
    return seed * SEED_STRIDE + index


@dataclass(frozen=True)
class CampaignConfig:
    domain: str = "linf3"
    codomain: str = "l1:3"
    count: int = 200
    seed: int = 0
    denominator_bound: int = DEFAULT_DENOMINATOR_BOUND
    quantifier_reading: str = "forall"
    strategy: str = "mixed"
    with_oracle: bool = True

    def __post_init__(self):
        if self.count < 0:
            raise InputError("count must be non-negative")
        if self.denominator_bound < 1:
            raise InputError("denominator bound must be positive")
        if self.quantifier_reading not in QUANTIFIER_READINGS:
            raise InputError(f"quantifier reading must be one of {QUANTIFIER_READINGS}")
        if self.strategy not in STRATEGIES + ("mixed",):
            raise InputError(f"strategy must be one of {STRATEGIES + ('mixed',)}")
        x, y = self.spaces()
        if x.ball != resolve_space(f"linf{x.dim}").ball or x.dim not in (3, 4):
            raise InputError("campaign domain must be linf3 or linf4")
        if y.dim == 3 and (x.dim != 3 or y.ball != space_l1(3).ball):
            raise InputError("three-dimensional campaigns need linf3 -> l1:3")
        if y.dim not in (2, 3):
            raise InputError("codomain must be two-dimensional or l1:3")
        if self.strategy == "structural" and y.dim != 2:
            raise InputError("structural strategy needs a two-dimensional codomain")

    def spaces(self) -> tuple:
        return resolve_space(self.domain), resolve_space(self.codomain)

    @classmethod
    def from_json(cls, obj: dict) -> "CampaignConfig":
        if not isinstance(obj, dict):
            raise InputError("campaign config must be an object")
        keys = {
            "domain": "domain", "codomain": "codomain", "count": "count", "seed": "seed",
            "denominatorBound": "denominator_bound", "quantifierReading": "quantifier_reading",
            "strategy": "strategy", "withOracle": "with_oracle",
        }
        unknown = set(obj) - set(keys)
        if unknown:
            raise InputError(f"unknown campaign config fields: {sorted(unknown)}")
        kwargs = {keys[k]: v for k, v in obj.items()}
        for k in ("count", "seed", "denominator_bound"):
            if k in kwargs and (not isinstance(kwargs[k], int) or isinstance(kwargs[k], bool)):
                raise InputError(f"{k} must be an integer")
        return cls(**kwargs)

    def as_dict(self) -> dict:
        return {
            "domain": self.domain, "codomain": self.codomain, "count": self.count, "seed": self.seed,
            "denominatorBound": self.denominator_bound, "quantifierReading": self.quantifier_reading,
            "strategy": self.strategy, "withOracle": self.with_oracle,
        }


@dataclass
class CampaignRecord:
    index: int
    seed: int
    strategy: str
    operator: Optional[dict] = None
    rule: Optional[str] = None
    predicted: object = None
    computed: Optional[int] = None
    oracle: Optional[int] = None
    triple: Optional[tuple] = None
    other_reading: object = None
    agree: bool = False
    error: Optional[str] = None

    def as_dict(self) -> dict:
        d = asdict(self)
        d["triple"] = list(self.triple) if self.triple is not None else None
        return {k: d[k] for k in sorted(d)}


def _strategy_for(config: CampaignConfig, index: int, codim: int) -> str:
    if config.strategy != "mixed":
        return config.strategy
    if codim != 2:
        return "basis"
    return "basis" if index % 2 == 0 else "structural"


def run_one(config: CampaignConfig, index: int) -> CampaignRecord:
    x, y = config.spaces()
    seed = derive_seed(config.seed, index)
    strategy = _strategy_for(config, index, y.dim)
    rec = CampaignRecord(index, seed, strategy)
    try:
        t = normalize(generate_all_vertices_norming(x.dim, y, seed, config.denominator_bound, strategy))
    except GeneratorExhausted as exc:
        rec.error = f"exhausted: {exc}"
        return rec
    rec.operator = operator_to_json(t, config.domain, config.codomain)
    try:
        if y.dim == 2:
            v = classify_linf_to_2d(t, config.with_oracle)
        else:
            v = classify_linf3_to_l13(t, config.quantifier_reading, config.with_oracle)
            other = "exists" if config.quantifier_reading == "forall" else "forall"
            rec.other_reading = table_lookup(v.triple, v.profile, other).order
    except InfeasibleTriple as exc:
        v = exc.verdict
        rec.error = f"infeasible: {exc}"
    except KSmoothError as exc:
        rec.error = f"{type(exc).__name__}: {exc}"
        return rec
    rec.rule, rec.predicted, rec.computed, rec.oracle = v.source_rule, v.predicted, v.computed, v.oracle
    rec.triple = v.triple
    rec.agree = v.agree
    return rec


@dataclass
class CampaignReport:
    config: CampaignConfig
    records: list

    @property
    def disagreements(self) -> list:
        return [r for r in self.records if r.error is None and not r.agree]

    @property
    def infeasible_hits(self) -> list:
        return [r for r in self.records if r.predicted == INFEASIBLE]

    @property
    def errors(self) -> list:
        return [r for r in self.records if r.error is not None and r.predicted != INFEASIBLE]

    @property
    def rows_reached(self) -> list:
        return sorted({r.rule for r in self.records if r.rule and r.predicted != INFEASIBLE})

    @property
    def passed(self) -> bool:
        return not (self.disagreements or self.infeasible_hits or self.errors)

    def row_stats(self) -> dict:
        stats = defaultdict(lambda: [0, 0])
        for r in self.records:
            if r.rule:
                stats[r.rule][0] += 1
                stats[r.rule][1] += int(r.agree)
        return dict(stats)

    def reading_check(self) -> dict:
        """Agreement counts of both quantifier readings on the rows where they can differ."""
        out = {q: 0 for q in QUANTIFIER_READINGS}
        total = 0
        for r in self.records:
            if r.other_reading is None or r.computed is None or r.triple != (0, 8, 0):
                continue
            total += 1
            readings = {self.config.quantifier_reading: r.predicted}
            readings["exists" if self.config.quantifier_reading == "forall" else "forall"] = r.other_reading
            for q, k in readings.items():
                out[q] += int(k == r.computed)
        return {"operators": total, "agreements": out}

    def as_dict(self) -> dict:
        return {
            "config": self.config.as_dict(),
            "operators": len(self.records),
            "disagreements": [r.as_dict() for r in self.disagreements],
            "infeasibleHits": [r.as_dict() for r in self.infeasible_hits],
            "errors": [r.as_dict() for r in self.errors],
            "rowsReached": self.rows_reached,
            "rowStats": {k: {"operators": v[0], "agree": v[1]} for k, v in sorted(self.row_stats().items())},
            "quantifierReadingCheck": self.reading_check(),
            "passed": self.passed,
        }

    def to_markdown(self) -> str:
        stats = self.row_stats()
        x, y = self.config.spaces()
        lines = [f"## Classifier campaign: {self.config.domain} -> {self.config.codomain}", ""]
        lines.append(f"operators: {len(self.records)}, disagreements: {len(self.disagreements)}, "
                     f"infeasible hits: {len(self.infeasible_hits)}, errors: {len(self.errors)}")
        lines.append("")
        if y.dim == 3:
            lines += ["| S1 | S2 | S3 | condition | k | operators | verified |", "|---|---|---|---|---|---|---|"]
            for row in TABLE_ROWS:
                n, ok = stats.get(row.rule_id, [0, 0])
                a, b, c = row.triple
                cond = row.condition.replace("|", "\\|")
                lines.append(f"| {a} | {b} | {c} | {cond} | {row.order} | {n} | {_verified(n, ok)} |")
            hits = Counter(r.triple for r in self.infeasible_hits)
            for tr in sorted(INFEASIBLE_TRIPLES, reverse=True):
                a, b, c = tr
                lines.append(f"| {a} | {b} | {c} | listed infeasible | - | {hits.get(tr, 0)} | "
                             f"{'yes' if not hits.get(tr) else 'no'} |")
        else:
            lines += ["| rule | k | operators | verified |", "|---|---|---|---|"]
            by_rule = defaultdict(set)
            for r in self.records:
                if r.rule:
                    by_rule[r.rule].add(r.predicted)
            for rule in sorted(stats):
                n, ok = stats[rule]
                ks = ", ".join(str(k) for k in sorted(by_rule[rule]))
                lines.append(f"| {rule} | {ks} | {n} | {_verified(n, ok)} |")
        if self.disagreements:
            lines += ["", "### Disagreements", ""]
            for r in self.disagreements:
                lines.append(f"- #{r.index} (seed {r.seed}, {r.strategy}): {r.rule} predicted {r.predicted}, "
                             f"computed {r.computed}, oracle {r.oracle}, matrix {r.operator['matrix']}")
        return "\n".join(lines) + "\n"


def _verified(n: int, ok: int) -> str:
    if n == 0:
        return "unreached"
    return "yes" if ok == n else f"no ({n - ok} disagree)"


def _run_chunk(args) -> list:
    config, indices = args
    return [run_one(config, i) for i in indices]


def cross_validate(config: CampaignConfig, workers: int = 1) -> CampaignReport:
    indices = list(range(config.count))
    if workers <= 1 or len(indices) < 2:
        records = [run_one(config, i) for i in indices]
    else:
        chunks = [(config, indices[k::workers]) for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_chunk, chunks))
        records = sorted((r for part in parts for r in part), key=lambda r: r.index)
    return CampaignReport(config, records)


# -- other verification suites -------------------------------------------------


@dataclass
class SuiteReport:
    name: str
    checks: int
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {"suite": self.name, "checks": self.checks, "failures": self.failures,
                "details": self.details, "passed": self.passed}

    def to_markdown(self) -> str:
        lines = [f"## Suite {self.name}", "", f"checks: {self.checks}, failures: {len(self.failures)}", ""]
        if self.details:
            lines += ["| item | value |", "|---|---|"]
            lines += [f"| {k} | {v} |" for k, v in sorted(self.details.items())]
        for f in self.failures:
            lines.append(f"- FAIL {f}")
        return "\n".join(lines) + "\n"


def face_theorem_suite(spaces: list, samples: int = 3, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("face-theorem", 0)
    for space in spaces:
        r = verify_face_theorem(space, samples, seed)
        rep.checks += r.total_samples
        rep.details[str(space)] = f"{len(r.records)} faces, {r.total_samples} samples"
        rep.failures += [f"{space}: face dim {f.face_dim} orders {f.orders}" for f in r.failures]
    return rep


def _fixture_polytopes() -> list:
    from .geometry import space_hexagon, space_linf

    out = [("hexagon", space_hexagon().ball)]
    out += [(f"linf{n}", space_linf(n).ball) for n in (2, 3, 4)]
    out += [(f"l1:{n}", space_l1(n).ball) for n in (2, 3, 4)]
    return out


def polar_suite(polygons: int = 50, seed: int = 0) -> SuiteReport:
    rep = SuiteReport("polar", 0)
    items = _fixture_polytopes()
    rng = random.Random(seed)
    for i in range(polygons):
        s = derive_seed(seed, i)
        items.append((f"polygon seed {s}", random_polytope(2, rng.randint(2, 6), s)))
    for name, p in items:
        rep.checks += 1
        if polar(polar(p)) != p:
            rep.failures.append(name)
    rep.details = {"fixtures": len(items) - polygons, "polygons": polygons}
    return rep


def vertex_enumeration_suite(count: int = 30, seed: int = 0, max_dim: int = 6) -> SuiteReport:
    """Double description against the brute-force basic-solution method."""
    rep = SuiteReport("vertex-enumeration", 0)
    rng = random.Random(seed)
    dims = Counter()
    for i in range(count):
        s = derive_seed(seed, i)
        dim = 2 + i % (max_dim - 1)
        p = random_polytope(dim, dim + rng.randint(0, 3), s, bound=4)
        fs = list(p.vertices)
        if rng.random() < 0.5:
            fs.append(la.scale(Fraction(1, 2), fs[0]))
        h = HPolytope(dim, tuple(fs))
        rep.checks += 1
        dims[dim] += 1
        if vertex_enumeration(h, "dd") != vertex_enumeration(h, "brute"):
            rep.failures.append(f"dim {dim} seed {s}")
    rep.details = {f"dim {d}": c for d, c in sorted(dims.items())}
    return rep


def cube_faces_suite(dims=(2, 3, 4, 5)) -> SuiteReport:
    """Every face of the cube with ``2^k`` vertices spans ``k + 1`` dimensions."""
    from .geometry import space_linf

    rep = SuiteReport("cube-faces", 0)
    for n in dims:
        faces = all_faces(space_linf(n).ball)
        rep.details[f"linf{n}"] = f"{len(faces)} faces"
        for f in faces:
            rep.checks += 1
            k = len(f.vertices).bit_length() - 1
            if len(f.vertices) != 2 ** k or la.span_dim(f.vertices) != k + 1:
                rep.failures.append(f"linf{n}: face with {len(f.vertices)} vertices")
    return rep


def _two_dim_codomains() -> list:
    return [resolve_space("l1:2"), resolve_space("linf2"), resolve_space("hexagon")]


def segment_pair_suite(count: int = 100, seed: int = 0, bound: int = DEFAULT_DENOMINATOR_BOUND) -> SuiteReport:
    """Rank-two all-vertices-norming operators into the plane: four image extreme
    points, and every vertex image on ``+-[z1, z2]`` or on ``+-[z1, -z2]``."""
    rep = SuiteReport("segment-pairs", 0)
    ys = _two_dim_codomains()
    i = 0
    tally = Counter()
    while rep.checks < count:
        s = derive_seed(seed, i)
        n, y = (3, 4)[i % 2], ys[(i // 2) % 3]
        strategy = ("basis", "structural")[(i // 6) % 2]
        i += 1
        t = generate_all_vertices_norming(n, y, s, bound, strategy)
        if operator_rank(t) != 2:
            continue
        rep.checks += 1
        tally[f"linf{n}->{y} {strategy}"] += 1
        ext, ok = segment_pair_structure(t)
        if len(ext) != 4 or not ok:
            rep.failures.append(f"seed {s}: {len(ext)} extreme points, dichotomy {ok}")
    rep.details = dict(tally)
    rep.details["generated"] = i
    return rep


def oracle_suite(count: int = 200, seed: int = 0) -> SuiteReport:
    """Tensor-span order against the operator-space face oracle.

    Half of the operators attain their norm at every vertex (generated), the
    other half are unconstrained random matrices.
    """
    from .geometry import space_linf

    rep = SuiteReport("oracle", 0)
    pairs = [(space_linf(3), y) for y in _two_dim_codomains() + [space_l1(3)]] + [(space_linf(4), resolve_space("l1:2"))]
    tally = Counter()
    for i in range(count):
        s = derive_seed(seed, i)
        x, y = pairs[i % len(pairs)]
        if (i // len(pairs)) % 2 == 0:
            t = generate_all_vertices_norming(x.dim, y, s)
            kind = "norming"
        else:
            t = random_operator(x, y, s)
            kind = "random"
        k, o = smoothness_order_operator(t).order, oracle_order(t)
        rep.checks += 1
        tally[f"{x}->{y}"] += 1
        tally[kind] += 1
        if k != o:
            rep.failures.append(f"{x}->{y} seed {s}: tensor {k}, oracle {o}")
    rep.details = dict(tally)
    return rep
