"""Command-line front end emitting JSON reports.

Exit codes: 0 the job ran (false verdicts included), 2 invalid
configuration, 3 a bound or the search ceiling was exceeded, 4 an internal
invariant broke.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass, field

import yaml

from . import __version__
from .annihilator import RightIdealSpec, check_quasi_baer
from .corpus import run_corpus
from .endo import construct_endomorphism, identity
from .errors import BoundTooLarge, InvalidSpec, NoProgress, RingforgeError
from .modules import construct_module
from .properties import PROPERTY_IDS, SIGMA_PROPERTIES, check_property
from .rings import construct_ring
from .skewpoly import SkewRing
from .suites import SUITE_IDS, run_implication_suite
from .witness import extract_witness

EXIT_OK, EXIT_CONFIG, EXIT_BOUND, EXIT_INTERNAL = 0, 2, 3, 4
COMMANDS = ("check", "witness", "suite", "corpus")
CHECKABLE = PROPERTY_IDS + ("skew-semicommutative", "quasi-baer")
BOUND_KEYS = {"degree", "power", "element_bound", "ceiling", "generators"}


@dataclass
class JobConfig:
    command: str
    ring: object = None
    endo: object = None
    module: object = None
    property: str | None = None
    suite: str | None = None
    ideal: list = field(default_factory=list)
    g: str | None = None
    mode: str | None = None
    bounds: dict = field(default_factory=dict)
    output: str | None = None
    seed: int = 0
    threads: int = 1
    trials: int = 100

    @classmethod
    def from_mapping(cls, data):
        if not isinstance(data, dict):
            raise InvalidSpec("configuration document must be a mapping")
        known = set(cls.__dataclass_fields__)
        unknown = set(data) - known
        if unknown:
            raise InvalidSpec(f"unknown configuration keys: {', '.join(sorted(unknown))}")
        bounds = data.get("bounds") or {}
        if not isinstance(bounds, dict):
            raise InvalidSpec("bounds must be a mapping")
        bad = set(bounds) - BOUND_KEYS
        if bad:
            raise InvalidSpec(f"unknown bound keys: {', '.join(sorted(bad))}")
        cfg = cls(**{**data, "bounds": dict(bounds)})
        cfg.validate()
        return cfg

    def validate(self):
        if self.command not in COMMANDS:
            raise InvalidSpec(f"unknown command {self.command!r}")
        for key, value in self.bounds.items():
            if value is not None and (not isinstance(value, int) or value < (0 if key == "power" else 1)):
                raise InvalidSpec(f"bound {key} must be a positive integer")
        if not isinstance(self.threads, int) or self.threads < 1:
            raise InvalidSpec("threads must be >= 1")
        if self.command in ("check", "witness") and self.ring is None:
            raise InvalidSpec(f"{self.command} needs a ring")
        if self.command == "check" and self.property not in CHECKABLE:
            raise InvalidSpec(f"unknown property {self.property!r}")
        if self.command == "suite" and self.suite not in SUITE_IDS:
            raise InvalidSpec(f"unknown suite {self.suite!r}")
        if self.command == "witness" and (self.g is None or self.mode is None):
            raise InvalidSpec("witness needs --g and --mode")

    def echo(self):
        out = asdict(self)
        out.pop("output")
        return out


def load_document(path):
    with open(path) as fh:
        text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        try:
            return yaml.safe_load(text)
        except yaml.YAMLError as exc:
            mark = getattr(exc, "problem_mark", None)
            where = f" at line {mark.line + 1}, column {mark.column + 1}" if mark else ""
            raise InvalidSpec(f"{path}: malformed configuration{where}") from None


def _build_parser():
    parser = argparse.ArgumentParser(prog="ringforge", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="YAML or JSON job document")
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--ceiling", type=int, default=None)
        p.add_argument("--output", default=None)
        p.add_argument("--seed", type=int, default=None)

    check = sub.add_parser("check", help="check one property")
    common(check)
    check.add_argument("--property", choices=CHECKABLE)
    check.add_argument("--ring", help="ring spec or path to a job document")
    check.add_argument("--endo")
    check.add_argument("--module")
    check.add_argument("--degree", type=int)
    check.add_argument("--power", type=int)
    check.add_argument("--bound", type=int, help="element bound for infinite rings")
    check.add_argument("--generators", type=int, help="generator bound for quasi-baer")

    wit = sub.add_parser("witness", help="extract a constant annihilator by degree descent")
    common(wit)
    wit.add_argument("--ring")
    wit.add_argument("--endo")
    wit.add_argument("--ideal", help="semicolon-separated generator polynomials")
    wit.add_argument("--g")
    wit.add_argument("--mode", choices=("stable", "compatible", "sigma-stable", "sigma-compatible"))
    wit.add_argument("--degree", type=int)
    wit.add_argument("--power", type=int)

    suite = sub.add_parser("suite", help="run an implication suite")
    common(suite)
    suite.add_argument("--id", dest="suite", choices=SUITE_IDS)
    suite.add_argument("--trials", type=int)

    corpus = sub.add_parser("corpus", help="replay the built-in example vectors")
    common(corpus)
    return parser


def config_from_args(args):
    data = {"command": args.command}
    path = getattr(args, "config", None)
    ring_arg = getattr(args, "ring", None)
    if path is None and ring_arg is not None and os.path.isfile(ring_arg):
        path, ring_arg = ring_arg, None
    if path is not None:
        doc = load_document(path)
        if not isinstance(doc, dict):
            raise InvalidSpec(f"{path}: configuration document must be a mapping")
        doc = dict(doc)
        if doc.setdefault("command", args.command) != args.command:
            raise InvalidSpec(f"{path} is a {doc['command']!r} job, not {args.command!r}")
        data.update(doc)
    bounds = dict(data.get("bounds") or {})
    for flag, key in (("degree", "degree"), ("power", "power"), ("bound", "element_bound"),
                      ("ceiling", "ceiling"), ("generators", "generators")):
        value = getattr(args, flag, None)
        if value is not None:
            bounds[key] = value
    data["bounds"] = bounds
    if ring_arg is not None:
        data["ring"] = ring_arg
    for key in ("endo", "module", "property", "suite", "g", "mode", "output", "seed", "threads", "trials"):
        value = getattr(args, key, None)
        if value is not None:
            data[key] = value
    ideal = getattr(args, "ideal", None)
    if ideal is not None:
        data["ideal"] = [s.strip() for s in ideal.split(";") if s.strip()]
    return JobConfig.from_mapping(data)


def execute(cfg):
    """Run a validated job and return the list of result objects."""
    b = cfg.bounds
    ceiling = b.get("ceiling")
    if cfg.command == "corpus":
        return [run_corpus()]
    if cfg.command == "suite":
        return [run_implication_suite(cfg.suite, threads=cfg.threads, ceiling=ceiling,
                                      trials=cfg.trials, seed=cfg.seed)]
    ring = construct_ring(cfg.ring)
    endo = None
    if cfg.endo is not None:
        endo = construct_endomorphism(ring, cfg.endo)
    if cfg.command == "check":
        return [_check(cfg, ring, endo, ceiling).to_dict()]
    if endo is None:
        endo = identity(ring)
    S = SkewRing(ring, endo)
    ideal = RightIdealSpec.in_skew(S, cfg.ideal, degree_bound=b.get("degree"), power_bound=b.get("power"))
    return [extract_witness(ideal, cfg.g, cfg.mode, ceiling=ceiling).to_dict()]


def _check(cfg, ring, endo, ceiling):
    b = cfg.bounds
    prop = cfg.property
    if prop == "quasi-baer":
        return check_quasi_baer(ring, b.get("generators", 1), cfg.threads, ceiling)
    if prop in SIGMA_PROPERTIES or prop.startswith("condition-"):
        if endo is None:
            endo = identity(ring) if prop == "sigma-skew-mccoy" else None
    obj = ring
    if cfg.module is not None:
        obj = construct_module(ring, cfg.module)
    elif prop == "armendariz-module":
        obj = construct_module(ring, "self")
    return check_property(obj, prop, endo=endo, degree=b.get("degree", 2),
                          bound=b.get("element_bound"), threads=cfg.threads, ceiling=ceiling)


def _summary(cfg, results):
    if cfg.command == "check":
        r = results[0]
        return f"{r['property']} on {r['ring']}: {r['holds']}"
    if cfg.command == "witness":
        r = results[0]
        return f"descent finished after {len(r['steps'])} step(s): {r['result']}"
    if cfg.command == "corpus":
        return "corpus " + ("matched" if results[0]["matched"] else "MISMATCH")
    return f"suite {cfg.suite}: {results[0]['summary']}"


def run(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    try:
        cfg = config_from_args(args)
        results = execute(cfg)
    except BoundTooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except NoProgress as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (RingforgeError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    report = {"schema": 1, "version": __version__, "config": cfg.echo(), "results": results,
              "elapsed_ms": round((time.perf_counter() - start) * 1000, 3)}
    text = json.dumps(report, indent=2, sort_keys=True, default=str)
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    print(_summary(cfg, results), file=sys.stderr)
    if cfg.command == "corpus" and not results[0]["matched"]:
        return EXIT_INTERNAL
    return EXIT_OK


def main():
    sys.exit(run())
