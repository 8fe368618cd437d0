"""Command-line entry point.

Exit codes: 0 for true or success, 1 for false or refuted, 2 for errors.
Results go to standard output as JSON (or plain text with ``--format text``);
diagnostics go to standard error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .base import DEFAULT_TOLERANCE
from .completion import karoubi, morita_equivalent, quantale_completion
from .contexts import (decompose_cd, groupoid_domain_classify, monoid_cd, monoid_epi_refute,
                       pi0)
from .errors import CauchydenError, PreconditionError, StructureError
from .fincat import (FinCategory, FinFunctor, Monoid, MonoidHom, QuantCategory, QuantFunctor,
                     deloop, deloop_hom, hom_of_functor, MAX_MORPHISMS, MAX_OBJECTS)
from .functors import Caps
from .jsonio import dumps, functor_to_json, jsonable, load, read_json, to_json
from .monoids import MAX_ENUMERATION_ORDER
from .prof import (is_absolutely_dense_lan, is_cauchy_dense, is_fully_faithful, is_split_full,
                   lan_condition, laxepi_check, shortcut_report)

EXIT_TRUE, EXIT_FALSE, EXIT_ERROR = 0, 1, 2

CHECK_KINDS = ("cauchy-dense", "fully-faithful", "split-full", "dense-lan", "lax-epi", "shortcut")

# option name -> (environment variable, type, default)
OPTIONS = {
    "tolerance": ("CAUCHYDEN_TOLERANCE", float, DEFAULT_TOLERANCE),
    "max_objects": ("CAUCHYDEN_MAX_OBJECTS", int, MAX_OBJECTS),
    "max_morphisms": ("CAUCHYDEN_MAX_MORPHISMS", int, MAX_MORPHISMS),
    "seed": ("CAUCHYDEN_SEED", int, 42),
    "samples": ("CAUCHYDEN_SAMPLES", int, 100),
    "cap": ("CAUCHYDEN_CAP", int, MAX_ENUMERATION_ORDER),
    "format": ("CAUCHYDEN_FORMAT", str, "json"),
}
MANIFEST_KEYS = {"command", "kind", "inputs", "target", "options"}


class UsageError(CauchydenError):
    pass


def _env_default(name: str):
    var, typ, default = OPTIONS[name]
    raw = os.environ.get(var)
    if raw is None:
        return default
    try:
        value = typ(raw)
    except ValueError:
        raise UsageError(f"{var}={raw!r} is not a valid {typ.__name__}") from None
    if name == "format" and value not in ("json", "text"):
        raise UsageError(f"{var} must be 'json' or 'text'")
    return value


def _common_options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("options (environment variable in brackets)")
    g.add_argument("--tolerance", type=float, default=_env_default("tolerance"),
                   help="equality tolerance for real-valued homs [CAUCHYDEN_TOLERANCE] "
                        "(default: %(default)s)")
    g.add_argument("--max-objects", type=int, default=_env_default("max_objects"),
                   help="object cap for inputs and constructions [CAUCHYDEN_MAX_OBJECTS] "
                        "(default: %(default)s)")
    g.add_argument("--max-morphisms", type=int, default=_env_default("max_morphisms"),
                   help="morphism cap [CAUCHYDEN_MAX_MORPHISMS] (default: %(default)s)")
    g.add_argument("--seed", type=int, default=_env_default("seed"),
                   help="property-suite seed [CAUCHYDEN_SEED] (default: %(default)s)")
    g.add_argument("--samples", type=int, default=_env_default("samples"),
                   help="samples per property [CAUCHYDEN_SAMPLES] (default: %(default)s)")
    g.add_argument("--cap", type=int, default=_env_default("cap"),
                   help="largest monoid order tried by the explorer [CAUCHYDEN_CAP] "
                        "(default: %(default)s)")
    g.add_argument("--format", choices=("json", "text"), default=_env_default("format"),
                   help="output format [CAUCHYDEN_FORMAT] (default: %(default)s)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="cauchyden",
        description="Cauchy density, completions and Morita equivalence for finite categories.",
        epilog="Exit codes: 0 true/success, 1 false/refuted, 2 error.")
    parser.add_argument("--manifest", metavar="FILE",
                        help="JSON file with keys command, kind, inputs, target, options; "
                             "unknown keys are rejected")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("check", parents=[common], help="decide a property of a functor")
    p.add_argument("kind", choices=CHECK_KINDS)
    p.add_argument("input", help="functor or monoid hom JSON file")
    p.add_argument("--target", help="target category for lax-epi (default: a built-in pool)")

    p = sub.add_parser("complete", parents=[common],
                       help="Karoubi envelope or quantale completion of a category")
    p.add_argument("input", help="category, enriched category or monoid JSON file")
    p.add_argument("-o", "--output", help="write the completed category here")
    p.add_argument("--embedding-output", help="write the embedding functor here")

    p = sub.add_parser("morita", parents=[common], help="decide Morita equivalence")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("decompose", parents=[common],
                       help="split a Cauchy dense functor along connected components")
    p.add_argument("input")

    p = sub.add_parser("explore", parents=[common],
                       help="search small monoids for a witness that a hom is not epi")
    p.add_argument("input", help="monoid hom JSON file")

    p = sub.add_parser("props", parents=[common], help="run the property suite")
    p.add_argument("--property", action="append", dest="properties", metavar="ID",
                   help="run only this property (repeatable)")
    p.add_argument("--timing", action="store_true", help="include runtimes in the JSON lines")
    p.add_argument("--no-shrink", action="store_true", help="report failures unshrunk")
    p.add_argument("--list", action="store_true", help="list property ids and exit")
    return parser


# ---------------------------------------------------------------------------
# helpers


def _load(path, args):
    return load(path, tolerance=args.tolerance, max_objects=args.max_objects,
                max_morphisms=args.max_morphisms)


def _as_functor(x):
    if isinstance(x, MonoidHom):
        return deloop_hom(x)
    if isinstance(x, (FinFunctor, QuantFunctor)):
        return x
    raise StructureError(f"expected a functor or monoid hom, got a {type(x).__name__}")


def _as_category(x):
    if isinstance(x, Monoid):
        return deloop(x)
    if isinstance(x, (FinCategory, QuantCategory)):
        return x
    raise StructureError(f"expected a category or monoid, got a {type(x).__name__}")


def _emit(args, payload: dict):
    payload = jsonable(payload)
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
        return
    for key, value in payload.items():
        if isinstance(value, (dict, list)):
            value = json.dumps(value, sort_keys=True)
        print(f"{key}: {value}")


def _verdict_exit(result: bool) -> int:
    return EXIT_TRUE if result else EXIT_FALSE


# ---------------------------------------------------------------------------
# commands


def cmd_check(args) -> int:
    loaded = _load(args.input, args)
    F = _as_functor(loaded)
    kind = args.kind
    out = {"command": "check", "kind": kind}
    if kind == "cauchy-dense":
        v = is_cauchy_dense(F)
        result, out["certificate"] = bool(v), v.certificate
    elif kind == "fully-faithful":
        v = is_fully_faithful(F)
        result, out["certificate"] = bool(v), v.certificate
    elif kind == "split-full":
        w = is_split_full(F)
        result = w is not None
        if result and isinstance(F, FinFunctor):
            out["certificate"] = {"sections": {f"{a}->{a2}": s for (a, a2), s in w.sections.items()}}
    elif kind == "shortcut":
        if not isinstance(F, FinFunctor):
            raise PreconditionError("the shortcut report needs an ordinary functor", {})
        r = shortcut_report(F)
        result, out["report"] = r.cauchy_dense, r.to_json()
    else:
        if not isinstance(F, FinFunctor):
            raise PreconditionError(f"{kind} needs an ordinary functor", {})
        if kind == "dense-lan":
            v = lan_condition(F)
            result, out["certificate"] = bool(v), v.certificate
            out["pointwise"] = {str(b): bool(is_absolutely_dense_lan(F, b))
                                for b in F.cod.objects}
        else:
            result, out["targets"] = _lax_epi(F, args)
    if isinstance(loaded, MonoidHom) and kind == "cauchy-dense":
        out["monoid_cd"] = bool(monoid_cd(loaded))
    out["result"] = result
    _emit(args, out)
    return _verdict_exit(result)


def _lax_epi(F: FinFunctor, args):
    caps = Caps(max_objects=args.max_objects, max_morphisms=args.max_morphisms)
    if args.target:
        targets = [(args.target, _as_category(_load(args.target, args)))]
    else:
        from .harness import laxepi_targets
        targets = laxepi_targets(F)
    report = {}
    for name, C in targets:
        if not isinstance(C, FinCategory):
            raise StructureError("lax-epi targets must be ordinary categories")
        v = laxepi_check(F, C, caps)
        report[name] = {"result": bool(v), "certificate": v.certificate}
    return all(r["result"] for r in report.values()), report


def _write(path, data):
    Path(path).write_text(dumps(data) + "\n")


def cmd_complete(args) -> int:
    A = _as_category(_load(args.input, args))
    if isinstance(A, FinCategory):
        env = karoubi(A, args.max_objects, args.max_morphisms)
        C, z, kind = env.category, env.embedding, "karoubi"
    else:
        comp = quantale_completion(A)
        C, z, kind = comp.category, comp.embedding, "quantale_completion"
    cat_json, emb_json = to_json(C), functor_to_json(z)
    if args.output:
        _write(args.output, cat_json)
    if args.embedding_output:
        _write(args.embedding_output, emb_json)
    _emit(args, {"command": "complete", "construction": kind, "objects": len(C.objects),
                 "category": cat_json, "embedding": emb_json})
    return EXIT_TRUE


def cmd_morita(args) -> int:
    A = _as_category(_load(args.a, args))
    B = _as_category(_load(args.b, args))
    if not (isinstance(A, FinCategory) and isinstance(B, FinCategory)):
        raise PreconditionError("morita needs two ordinary categories or monoids", {})
    v = morita_equivalent(A, B)
    out = {"command": "morita", "result": bool(v)}
    if v:
        z = v.certificate["zigzag"]
        out["zigzag"] = {"verified": z.verify(),
                         "legs": [functor_to_json(G) for G in z.legs()]}
    else:
        out["certificate"] = v.certificate
    _emit(args, out)
    return _verdict_exit(bool(v))


def cmd_decompose(args) -> int:
    F = _as_functor(_load(args.input, args))
    if not isinstance(F, FinFunctor):
        raise PreconditionError("decompose needs an ordinary functor", {})
    pieces = decompose_cd(F)
    out = {"command": "decompose", "result": True,
           "components": [[list(map(str, p.dom.objects)), list(map(str, p.cod.objects))]
                          for p in pieces],
           "pieces": [functor_to_json(p) for p in pieces]}
    if F.dom.is_groupoid():
        out["groupoid"] = groupoid_domain_classify(F).to_json()
    out["codomain_components"] = len(pi0(F.cod))
    _emit(args, out)
    return EXIT_TRUE


def cmd_explore(args) -> int:
    f = _load(args.input, args)
    if isinstance(f, FinFunctor):
        f = hom_of_functor(f)
    if not isinstance(f, MonoidHom):
        raise StructureError("explore needs a monoid hom")
    exploration = monoid_epi_refute(f, args.cap)
    out = {"command": "explore", "cauchy_dense": bool(monoid_cd(f)), **exploration.to_json()}
    _emit(args, out)
    return EXIT_FALSE if exploration.refuted else EXIT_TRUE


def cmd_props(args) -> int:
    from .generators import GenConfig
    from .harness import PROPERTIES, report_lines, run_properties, summary_table
    if args.list:
        for pid in PROPERTIES:
            print(pid)
        return EXIT_TRUE
    if args.samples < 1:
        raise UsageError("--samples must be positive")
    for pid in args.properties or ():
        if pid not in PROPERTIES:
            raise UsageError(f"unknown property {pid!r}")
    cfg = GenConfig(seed=args.seed)
    reports = run_properties(cfg, args.properties, samples=args.samples,
                             do_shrink=not args.no_shrink)
    for line in report_lines(reports, timing=args.timing):
        print(line)
    table = summary_table(reports)
    if args.format == "text":
        print(table)
    else:
        print(table, file=sys.stderr)
    return EXIT_TRUE if all(r.passed for r in reports) else EXIT_FALSE


COMMANDS = {"check": cmd_check, "complete": cmd_complete, "morita": cmd_morita,
            "decompose": cmd_decompose, "explore": cmd_explore, "props": cmd_props}


def manifest_argv(path) -> list[str]:
    """Translate a manifest file into command-line arguments."""
    data = read_json(path)
    if not isinstance(data, dict):
        raise StructureError(f"{path}: manifest must be a JSON object")
    unknown = set(data) - MANIFEST_KEYS
    if unknown:
        raise StructureError(f"{path}: unknown manifest keys {sorted(unknown)}")
    if data.get("command") not in COMMANDS:
        raise StructureError(f"{path}: command must be one of {sorted(COMMANDS)}")
    argv = [data["command"]]
    if "kind" in data:
        argv.append(str(data["kind"]))
    base = Path(path).parent
    argv += [str(base / p) for p in data.get("inputs", [])]
    if "target" in data:
        argv += ["--target", str(base / data["target"])]
    options = data.get("options", {})
    if not isinstance(options, dict):
        raise StructureError(f"{path}: options must be an object")
    for key, value in options.items():
        if key not in OPTIONS:
            raise StructureError(f"{path}: unknown option {key!r}")
        argv += ["--" + key.replace("_", "-"), str(value)]
    return argv


def _fail(message: str, certificate=None) -> int:
    print(f"error: {message}", file=sys.stderr)
    payload = {"error": message}
    if certificate:
        payload["certificate"] = jsonable(certificate)
    print(json.dumps(payload, sort_keys=True))
    return EXIT_ERROR


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        parser = build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:
            # argparse exits 0 for --help and 2 for usage errors
            return EXIT_TRUE if exc.code == 0 else EXIT_ERROR
        if args.manifest:
            if args.command:
                raise UsageError("give either --manifest or a command, not both")
            return main(manifest_argv(args.manifest))
        if not args.command:
            parser.print_help(sys.stderr)
            return EXIT_ERROR
        return COMMANDS[args.command](args)
    except PreconditionError as exc:
        return _fail(str(exc), exc.certificate)
    except (CauchydenError, OSError) as exc:
        return _fail(str(exc))
    except Exception as exc:  # anything else is still an error, not a verdict
        return _fail(f"internal error: {type(exc).__name__}: {exc}")


if __name__ == "__main__":
    raise SystemExit(main())
