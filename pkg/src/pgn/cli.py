"""Command line front end.

Verbs: validate, build, eval, exponents, extend, translate, selfsim, chain,
spectrum (check / construct / realize / sample), plot, sample.

Exit codes: 0 on success, 1 on a domain-negative result (invalid object,
non-member point, impossible construction), 2 on malformed input.  Errors go
to stderr as single-line JSON {"error": ...}; everything written to stdout or
an output file is deterministic for fixed inputs and flags.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import canvas as canvasmod
from . import chains3, deform, exponents, nsystem, spectrum6
from .core import InputError, PgnError, TOOL_VERSION, dec12, fmt, rat


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _err(message)
        raise SystemExit(2)


def _err(msg) -> None:
    sys.stderr.write(json.dumps({"error": str(msg)}, separators=(",", ":")) + "\n")


def _load(path):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"cannot read {path}")
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc.msg} at line {exc.lineno}")


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _dump_line(obj) -> str:
    return json.dumps(obj, separators=(",", ":")) + "\n"


def _version(doc: dict) -> dict:
    doc["tool_version"] = TOOL_VERSION
    return doc


def _jsonable(x):
    if isinstance(x, Fraction):
        return fmt(x)
    if isinstance(x, dict):
        return {k: _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if x is None or isinstance(x, (bool, int, float, str)):
        return x
    raise InputError(f"cannot serialize {type(x).__name__}")


_PATH_KEYS = ("A", "Astar", "Bstar", "Cstar", "C", "B")


def _detect(obj) -> str:
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    if "points" in obj:
        return "canvas"
    if "events" in obj:
        return "system"
    if "vertices" in obj:
        return "chain"
    if all(k in obj for k in _PATH_KEYS):
        return "path"
    if "lower" in obj and "upper" in obj:
        return "point"
    raise InputError("unrecognized JSON object: no canvas, system, chain, path, or spectrum point keys")


def _load_point(path) -> exponents.SpectrumPoint6:
    obj = _load(path)
    if isinstance(obj, list):
        if len(obj) != 6:
            raise InputError(f"expected six rationals, got {len(obj)}")
        t = tuple(rat(v) for v in obj)
        return exponents.SpectrumPoint6(lower=t[:3], upper=t[3:])
    return exponents.spectrum_point_from_json(obj)


def _point_decimal(pt: exponents.SpectrumPoint6) -> dict:
    return {"lower": [dec12(v) for v in pt.lower],
            "upper": [dec12(v) for v in pt.upper]}


def _cmd_validate(args) -> int:
    obj = _load(args.file)
    kind = _detect(obj)
    if kind == "canvas":
        c = canvasmod.canvas_from_json(obj)
        rep = canvasmod.validate(c, strict=not args.pre)
        doc = {"kind": kind, **rep.to_json()}
        ok = rep.ok
    elif kind == "system":
        s = nsystem.system_from_json(obj)
        rep = nsystem.validate_system(s)
        doc = {"kind": kind, **rep.to_json()}
        ok = rep.ok
    elif kind == "chain":
        ch = chains3.chain_from_json(obj)
        rep = chains3.validate_chain(ch)
        doc = {"kind": kind, **rep.to_json()}
        ok = rep.ok
    elif kind == "path":
        p = chains3.path_from_json(obj)
        rep = chains3.validate_path(p)
        doc = {"kind": kind, **rep.to_json()}
        ok = rep.ok
    else:
        pt = exponents.spectrum_point_from_json(obj)
        doc = {"kind": kind, "ok": True, "point": pt.to_json()}
        ok = True
    _emit(_dump(_version(doc)), args.output)
    return 0 if ok else 1


def _cmd_build(args) -> int:
    c = canvasmod.canvas_from_json(_load(args.canvas))
    s = canvasmod.build_system(c)
    _emit(_dump(_version(nsystem.system_to_json(s))), args.output)
    return 0


def _cmd_eval(args) -> int:
    s = nsystem.system_from_json(_load(args.system))
    nsystem.require_valid(s)
    value = s.eval(rat(args.q))
    _emit(json.dumps([fmt(x) for x in value], separators=(",", ":")) + "\n",
          args.output)
    return 0


def _cmd_exponents(args) -> int:
    s = nsystem.system_from_json(_load(args.system))
    pt = exponents.six_exponents(s)
    _emit(_dump_line(_version(pt.to_json())), args.output)
    return 0


def _cmd_extend(args) -> int:
    s = nsystem.system_from_json(_load(args.system))
    target = args.target.split(",")
    ext, amap = deform.extend_to(s, target)
    bounds = deform.extension_bounds(s, ext, amap)
    report = _jsonable(bounds)
    report["excess_max_decimal"] = [dec12(x) for x in bounds["excess_max"]]
    report["excess_bound_decimal"] = [dec12(x) for x in bounds["excess_bound"]]
    report["map"] = {"breakpoints": _jsonable(amap.breakpoints)}
    sysdoc = _version(nsystem.system_to_json(ext))
    if args.output:
        _emit(_dump(sysdoc), args.output)
        sys.stdout.write(_dump(_version(report)))
    else:
        sys.stdout.write(_dump(_version({"system": sysdoc, "report": report})))
    return 0 if bounds["ok"] else 1


def _cmd_translate(args) -> int:
    s = nsystem.system_from_json(_load(args.system))
    out = deform.translate_by(s, rat(args.by))
    _emit(_dump(_version(nsystem.system_to_json(out))), args.output)
    return 0


def _cmd_selfsim(args) -> int:
    s = nsystem.system_from_json(_load(args.system))
    out, raw = deform.selfsimilarize(s, args.eps)
    report = _jsonable(raw)
    for key in ("dist", "eps", "drift", "drift_bound"):
        if key in raw:
            report[key + "_decimal"] = dec12(raw[key])
    sysdoc = _version(nsystem.system_to_json(out))
    if args.output:
        _emit(_dump(sysdoc), args.output)
        sys.stdout.write(_dump(_version(report)))
    else:
        sys.stdout.write(_dump(_version({"system": sysdoc, "report": report})))
    return 0


def _cmd_chain(args) -> int:
    obj = _load(args.file)
    kind = _detect(obj)
    if kind == "system":
        s = nsystem.system_from_json(obj)
        ch = chains3.chain_from_system(s)
        doc = chains3.chain_to_json(ch)
    elif kind == "chain":
        ch = chains3.chain_from_json(obj)
        s = chains3.system_from_chain(ch)
        doc = nsystem.system_to_json(s)
    else:
        raise InputError("chain verb needs a system or chain JSON")
    if args.paths:
        doc["paths"] = [chains3.path_to_json(p) for p in chains3.extract_paths(ch)]
    _emit(_dump(_version(doc)), args.output)
    return 0


def _cmd_plot(args) -> int:
    obj = _load(args.file)
    kind = _detect(obj)
    if kind == "chain":
        svg = chains3.plot_chain(chains3.chain_from_json(obj))
    else:
        if kind == "canvas":
            s = canvasmod.build_system(canvasmod.canvas_from_json(obj))
        elif kind == "system":
            s = nsystem.system_from_json(obj)
        else:
            raise InputError("plot verb needs a system, canvas, or chain JSON")
        if args.qmax is not None:
            qmax = rat(args.qmax)
        elif s.hi is not None:
            qmax = s.hi
        else:
            qmax = s.rho * s.rho * s.period_start
        svg = nsystem.export_graph(s, qmax)
    _emit(svg, args.output)
    return 0


def _cmd_spectrum_check(args) -> int:
    pt = _load_point(args.point)
    member, rep = spectrum6.membership(pt)
    doc = {
        "member": member,
        "point": pt.to_json(),
        "point_decimal": _point_decimal(pt),
        "constraints": rep.to_json(),
    }
    _emit(_dump(_version(doc)), args.output)
    return 0 if member else 1


def _cmd_spectrum_construct(args) -> int:
    pt = _load_point(args.point)
    doc: dict = {"point": pt.to_json()}
    if args.side in ("lower", "both"):
        doc["lower"] = spectrum6.construct_path_lower(pt).to_json()
    if args.side in ("upper", "both"):
        doc["upper"] = spectrum6.construct_path_upper(pt).to_json()
    _emit(_dump(_version(doc)), args.output)
    return 0


def _cmd_spectrum_realize(args) -> int:
    pt = _load_point(args.point)
    res = spectrum6.realize(pt, rat(args.eps))
    doc = res.to_json()
    doc["deviation_decimal"] = dec12(res.deviation)
    sys.stdout.write(_dump(_version(doc)))
    if args.output:
        _emit(_dump(_version(nsystem.system_to_json(res.system))), args.output)
    return 0


def _cmd_spectrum_sample(args) -> int:
    records = spectrum6.sample_spectrum(args.count, args.seed, workers=args.jobs)
    lines = [spectrum6.CSV_HEADER]
    lines.extend(spectrum6.sample_csv_row(r) for r in records)
    _emit("\n".join(lines) + "\n", args.output)
    return 0


def _cmd_sample(args) -> int:
    from . import sampling

    items = []
    for i in range(args.count):
        rng = random.Random(f"{args.seed}/{args.kind}/{i}")
        if args.kind == "canvas3":
            items.append(canvasmod.canvas_to_json(sampling.random_periodic_canvas3(rng)))
        elif args.kind == "system3":
            items.append(nsystem.system_to_json(sampling.random_selfsimilar3(rng)))
        else:
            items.append(sampling.random_member_interior(rng).to_json())
    doc = {"kind": args.kind, "seed": str(args.seed), "items": items}
    _emit(_dump(_version(doc)), args.output)
    return 0


def _add_output(p) -> None:
    p.add_argument("-o", "--output", metavar="FILE", default=None,
                   help="write the result here instead of stdout")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="pgn", description="n-systems, canvases, exponents, and "
                                        "the six-exponent spectrum for n=3")
    p.add_argument("--version", action="version", version=f"pgn {TOOL_VERSION}")
    sub = p.add_subparsers(dest="verb", metavar="verb", required=True)

    q = sub.add_parser("validate", help="validate a canvas, system, chain, or path JSON")
    q.add_argument("file")
    q.add_argument("--pre", action="store_true",
                   help="canvases: check the crossing conditions without strictness")
    _add_output(q)
    q.set_defaults(func=_cmd_validate)

    q = sub.add_parser("build", help="compile a canvas into a system")
    q.add_argument("canvas")
    _add_output(q)
    q.set_defaults(func=_cmd_build)

    q = sub.add_parser("eval", help="evaluate a system at one parameter")
    q.add_argument("system")
    q.add_argument("--q", required=True, help="parameter value, a rational")
    _add_output(q)
    q.set_defaults(func=_cmd_eval)

    q = sub.add_parser("exponents", help="six exponents of a self-similar 3-system")
    q.add_argument("system")
    _add_output(q)
    q.set_defaults(func=_cmd_exponents)

    q = sub.add_parser("extend", help="extend a bounded rigid system to a target endpoint value")
    q.add_argument("system")
    q.add_argument("--target", required=True, metavar="C1,...,CN",
                   help="comma-separated target values, rationals")
    _add_output(q)
    q.set_defaults(func=_cmd_extend)

    q = sub.add_parser("translate", help="translate a bounded rigid system by b")
    q.add_argument("system")
    q.add_argument("--by", required=True, help="translation amount, a rational")
    _add_output(q)
    q.set_defaults(func=_cmd_translate)

    q = sub.add_parser("selfsim", help="wrap a rigid system into a self-similar one")
    q.add_argument("system")
    q.add_argument("--eps", required=True, help="ratio-set drift tolerance, a rational")
    _add_output(q)
    q.set_defaults(func=_cmd_selfsim)

    q = sub.add_parser("chain", help="convert between a 3-system and its closed chain")
    q.add_argument("file")
    q.add_argument("--paths", action="store_true",
                   help="also extract the elementary paths of the chain")
    _add_output(q)
    q.set_defaults(func=_cmd_chain)

    q = sub.add_parser("plot", help="render a system graph or a chain triangle as SVG")
    q.add_argument("file")
    q.add_argument("--qmax", default=None,
                   help="right edge of a system plot (default: domain end, or two periods)")
    _add_output(q)
    q.set_defaults(func=_cmd_plot)

    spec = sub.add_parser("spectrum", help="six-exponent spectrum operations")
    ssub = spec.add_subparsers(dest="subverb", metavar="subverb", required=True)

    q = ssub.add_parser("check", help="membership test for a six-exponent point")
    q.add_argument("point")
    _add_output(q)
    q.set_defaults(func=_cmd_spectrum_check)

    q = ssub.add_parser("construct", help="build the witness paths for a point")
    q.add_argument("point")
    q.add_argument("--side", choices=("lower", "upper", "both"), default="both")
    _add_output(q)
    q.set_defaults(func=_cmd_spectrum_construct)

    q = ssub.add_parser("realize", help="build a self-similar system attaining a point")
    q.add_argument("point")
    q.add_argument("--eps", default="1/1000",
                   help="deviation budget for boundary points, a rational")
    q.add_argument("-o", "--output", metavar="FILE", default=None,
                   help="also write the realized system JSON here")
    q.set_defaults(func=_cmd_spectrum_realize)

    q = ssub.add_parser("sample", help="sample spectrum points to CSV")
    q.add_argument("-n", "--count", required=True, type=int)
    q.add_argument("--seed", required=True)
    q.add_argument("--jobs", type=int, default=1, help="worker threads")
    _add_output(q)
    q.set_defaults(func=_cmd_spectrum_sample)

    q = sub.add_parser("sample", help="sample random canvases, systems, or members")
    q.add_argument("--kind", choices=("canvas3", "system3", "member"), required=True)
    q.add_argument("-n", "--count", required=True, type=int)
    q.add_argument("--seed", required=True)
    _add_output(q)
    q.set_defaults(func=_cmd_sample)

    return p


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _err(exc)
        return 2
    except PgnError as exc:
        _err(exc)
        return 1
    except OSError as exc:
        _err(exc)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
