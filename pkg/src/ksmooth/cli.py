"""Command-line interface.

Exit codes: 0 success, 1 a mathematical check failed (disagreement,
infeasible partition, failed verification), 2 usage or input error.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import Optional, Sequence

from . import __version__
from . import linalg as la
from .campaigns import (
    CampaignConfig,
    cross_validate,
    cube_faces_suite,
    face_theorem_suite,
    oracle_suite,
    polar_suite,
    segment_pair_suite,
    vertex_enumeration_suite,
)
from .classifiers import QUANTIFIER_READINGS, classify
from .errors import InfeasibleTriple, InputError, KSmoothError, TheoremCheckFailed
from .generators import DEFAULT_DENOMINATOR_BOUND
from .geometry import smoothness_order_point, unit_vector
from .io import dumps, format_vector, load_json, operator_from_json, parse_vector, polytope_to_json, resolve_space
from .operators import smoothness_order_operator
from .polytope import all_faces, polar

SUITES = ("face-theorem", "classifier", "polar", "vertex-enumeration", "cube-faces", "segment-pairs", "oracle")
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _fmt(v) -> str:
    return "(" + ", ".join(format_vector(v)) + ")"


def _emit(args, data: dict, text: str, markdown: Optional[str] = None) -> None:
    if args.json:
        sys.stdout.write(dumps(data))
    elif args.markdown:
        sys.stdout.write(markdown if markdown is not None else "```\n" + text + "```\n")
    else:
        sys.stdout.write(text)


def _space_arg(args):
    if getattr(args, "file", None):
        return resolve_space(load_json(args.file))
    if not args.space:
        raise UsageError("--space or --file is required")
    return resolve_space(args.space)


def run_point(args) -> int:
    space = _space_arg(args)
    if args.x is None:
        raise UsageError("--x is required")
    rep = smoothness_order_point(unit_vector(space, parse_vector(args.x)))
    lines = [
        f"space: {space}",
        f"point: {_fmt(rep.point.coords)}",
        f"order: {rep.order}",
        f"minimal face dimension: {rep.face_dim}",
        f"extreme supporting functionals: {', '.join(_fmt(g) for g in rep.support.ext_functionals)}",
        f"face check k = n - dim F: {'pass' if rep.theorem_check else 'FAIL'}",
    ]
    _emit(args, rep.as_dict(), "\n".join(lines) + "\n")
    return EXIT_OK


def _load_operator(args):
    if not args.file:
        raise UsageError("--file is required")
    return operator_from_json(load_json(args.file))


def run_operator(args) -> int:
    t = _load_operator(args)
    rep = smoothness_order_operator(t)
    lines = [
        f"operator: {t.domain} -> {t.codomain}",
        f"norm: {la.format_rational(rep.op_norm)}",
        f"norming vertices: {len(rep.norming_extremes)} of {len(t.domain.ball.vertices)}",
        f"extreme supporting tensors: {len(rep.ext_j)}",
        f"order: {rep.order}",
    ]
    _emit(args, rep.as_dict(), "\n".join(lines) + "\n")
    return EXIT_OK


def _verdict_text(v) -> str:
    lines = [f"rule: {v.source_rule}", f"predicted: {v.predicted}", f"computed: {v.computed}"]
    if v.oracle is not None:
        lines.append(f"oracle: {v.oracle}")
    if v.triple is not None:
        lines.append(f"partition: {tuple(v.triple)}")
    lines.append(f"agree: {'yes' if v.agree else 'NO'}")
    return "\n".join(lines) + "\n"


def run_classify(args) -> int:
    t = _load_operator(args)
    try:
        v = classify(t, args.quantifier_reading)
    except InfeasibleTriple as exc:
        sys.stderr.write(f"infeasible partition: {exc}\n")
        if exc.verdict is not None:
            _emit(args, exc.verdict.as_dict(), _verdict_text(exc.verdict))
        return EXIT_FAIL
    _emit(args, v.as_dict(), _verdict_text(v))
    return EXIT_OK if v.agree else EXIT_FAIL


def _workers(args) -> int:
    if args.workers is not None:
        return args.workers
    env = os.environ.get("KSMOOTH_WORKERS")
    if env is None:
        return 1
    try:
        n = int(env)
    except ValueError:
        raise UsageError(f"KSMOOTH_WORKERS must be an integer, got {env!r}") from None
    if n < 1:
        raise UsageError("KSMOOTH_WORKERS must be positive")
    return n


def run_verify(args) -> int:
    suite = args.suite
    seed = args.seed
    if suite == "classifier":
        if args.file:
            cfg = CampaignConfig.from_json(load_json(args.file))
        else:
            cfg = CampaignConfig(
                domain=args.domain or "linf3",
                codomain=args.codomain or args.space or "l1:3",
                count=args.count if args.count is not None else 200,
                seed=seed,
                denominator_bound=args.denominator_bound,
                quantifier_reading=args.quantifier_reading,
            )
        rep = cross_validate(cfg, _workers(args))
        text = rep.to_markdown()
        _emit(args, rep.as_dict(), text, text)
        return EXIT_OK if rep.passed else EXIT_FAIL
    if suite == "face-theorem":
        spaces = [resolve_space(s) for s in (args.space or "linf3").split(",")]
        rep = face_theorem_suite(spaces, args.samples, seed)
    elif suite == "polar":
        rep = polar_suite(args.count if args.count is not None else 50, seed)
    elif suite == "vertex-enumeration":
        rep = vertex_enumeration_suite(args.count if args.count is not None else 30, seed)
    elif suite == "cube-faces":
        rep = cube_faces_suite()
    elif suite == "segment-pairs":
        rep = segment_pair_suite(args.count if args.count is not None else 100, seed, args.denominator_bound)
    else:
        rep = oracle_suite(args.count if args.count is not None else 200, seed)
    text = rep.to_markdown()
    _emit(args, rep.as_dict(), text, text)
    return EXIT_OK if rep.passed else EXIT_FAIL


def run_polar(args) -> int:
    space = _space_arg(args)
    d = polar(space.ball)
    data = {"space": str(space), "ball": polytope_to_json(space.ball), "polar": polytope_to_json(d)}
    lines = [f"space: {space}", "ball vertices:"] + [f"  {_fmt(v)}" for v in space.ball.vertices]
    lines += ["polar vertices (facet functionals of the ball):"] + [f"  {_fmt(v)}" for v in d.vertices]
    _emit(args, data, "\n".join(lines) + "\n")
    return EXIT_OK


def run_faces(args) -> int:
    space = _space_arg(args)
    faces = all_faces(space.ball)
    n = space.dim
    data = {
        "space": str(space),
        "faces": [{"dim": f.dim, "order": n - f.dim, "vertices": [format_vector(v) for v in f.vertices]} for f in faces],
    }
    lines = [f"space: {space}", f"proper faces: {len(faces)}"]
    for k in range(n):
        count = sum(1 for f in faces if f.dim == k)
        lines.append(f"  dim {k}: {count} faces, relative-interior points are {n - k}-smooth")
    _emit(args, data, "\n".join(lines) + "\n")
    return EXIT_OK


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return v


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ksmooth", description="Exact smoothness orders in polyhedral normed spaces.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        fmt = sp.add_mutually_exclusive_group()
        fmt.add_argument("--json", action="store_true", help="emit canonical JSON")
        fmt.add_argument("--markdown", action="store_true", help="emit markdown")

    sp = sub.add_parser("point", help="order of smoothness of a unit vector")
    sp.add_argument("--space", help="space alias, e.g. linf3, l1:3, hexagon")
    sp.add_argument("--file", help="space JSON file")
    sp.add_argument("--x", help="comma-separated rational coordinates, e.g. 1,1/2,0")
    common(sp)
    sp.set_defaults(func=run_point)

    for name, func, helptext in (
        ("operator", run_operator, "order of smoothness of an operator"),
        ("classify", run_classify, "closed-form classifier verdict for an operator"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--file", help="operator JSON file")
        sp.add_argument("--quantifier-reading", choices=QUANTIFIER_READINGS, default="forall")
        common(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("verify", help="run a seeded verification suite")
    sp.add_argument("--suite", choices=SUITES, required=True)
    sp.add_argument("--space", help="space alias (comma-separated for face-theorem; codomain for classifier)")
    sp.add_argument("--domain", help="classifier campaign domain alias (linf3 or linf4)")
    sp.add_argument("--codomain", help="classifier campaign codomain alias")
    sp.add_argument("--file", help="campaign config JSON (classifier suite)")
    sp.add_argument("--samples", type=_positive, default=3)
    sp.add_argument("--count", type=_nonneg)
    sp.add_argument("--seed", type=_nonneg, default=0)
    sp.add_argument("--denominator-bound", type=_positive, default=DEFAULT_DENOMINATOR_BOUND)
    sp.add_argument("--quantifier-reading", choices=QUANTIFIER_READINGS, default="forall")
    sp.add_argument("--workers", type=_positive)
    common(sp)
    sp.set_defaults(func=run_verify)

    for name, func, helptext in (
        ("polar", run_polar, "unit ball and dual ball vertices"),
        ("faces", run_faces, "face counts of the unit ball"),
    ):
        sp = sub.add_parser(name, help=helptext)
        sp.add_argument("--space")
        sp.add_argument("--file", help="space JSON file")
        common(sp)
        sp.set_defaults(func=func)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except TheoremCheckFailed as exc:
        sys.stderr.write(f"check failed: {exc}\n")
        return EXIT_FAIL
    except (UsageError, InputError, KSmoothError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
