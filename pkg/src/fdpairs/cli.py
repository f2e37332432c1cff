"""Command-line interface.

Exit status: 0 when the command succeeds or the pair verifies, 1 when a
verification or self-test fails (a witness is printed), 2 on usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence, TextIO

from . import __version__
from .characters import character_spectrum
from .constructions import FAMILIES, mix, predict
from .duality import DIRECTIONS, verify_formally_dual, verify_primitive
from .errors import FormalDualityError
from .group_ring import GroupRingElement, SpectrumMultiset, difference_spectrum, theta
from .groups import make_group
from .io import PairFile, read_pair_file
from .search import SearchTask, classify_by_invariants, exhaustive_pairs

THREADS_ENV = "FDPAIRS_THREADS"

OK, FAILED, USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _jsonable(v):
    if isinstance(v, Fraction):
        return str(v)
    if isinstance(v, tuple):
        return list(v)
    if isinstance(v, (int, str, bool)) or v is None:
        return v
    return str(v)


def _default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        raise _UsageError(f"{THREADS_ENV}={raw!r} is not an integer") from None


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=None,
                        help=f"worker processes for search (default ${THREADS_ENV} or 1)")

    p = _Parser(prog="fdpairs", description="Construct, verify and search formally dual pairs.")
    p.add_argument("--version", action="version", version=f"fdpairs {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", parents=[common], help="build a family pair and write a pair file")
    c.add_argument("--family", required=True, choices=sorted(FAMILIES) + ["mix"])
    c.add_argument("--m", type=int, help="family parameter (dircon1, dircon2)")
    c.add_argument("--m1", type=int, help="J part of a mix pair")
    c.add_argument("--m2", type=int, help="L part of a mix pair")
    c.add_argument("--out", help="output path (default stdout)")

    v = sub.add_parser("verify", parents=[common], help="check formal duality of a pair file")
    v.add_argument("--pair", required=True)
    v.add_argument("--direction", choices=DIRECTIONS, default="both")
    v.add_argument("--primitive", action="store_true", help="also check primitivity of S and T")
    v.add_argument("--max-failures", type=int, default=16)

    s = sub.add_parser("spectrum", parents=[common], help="difference or character spectrum of one side")
    s.add_argument("--pair", required=True)
    s.add_argument("--side", choices=("S", "T"), default="T")
    s.add_argument("--kind", choices=("difference", "character"), default="difference")

    t = sub.add_parser("theta", parents=[common], help="number of non-differences of one side")
    t.add_argument("--pair", required=True)
    t.add_argument("--side", choices=("S", "T"), default="T")

    pr = sub.add_parser("predict", parents=[common], help="closed-form spectrum or theta")
    pr.add_argument("--family", required=True, choices=("dircon1-spectrum", "dircon2-theta", "mix-theta"))
    pr.add_argument("--m", type=int)
    pr.add_argument("--m1", type=int)
    pr.add_argument("--m2", type=int)

    se = sub.add_parser("search", parents=[common], help="exhaustive search in a small group")
    se.add_argument("--group", required=True, type=int, nargs="+", metavar="N")
    se.add_argument("--sizes", required=True, type=int, nargs=2, metavar=("|S|", "|T|"))
    se.add_argument("--all", action="store_true", help="keep non-primitive pairs")
    se.add_argument("--classify", action="store_true", help="group results by invariant key")

    st = sub.add_parser("selftest", parents=[common], help="run the reproduction checks")
    st.add_argument("--verbose", "-v", action="store_true", help="print every sub-check")
    st.add_argument("--only", type=int, nargs="+", metavar="K", help="run only these checks")
    return p


def _m_params(args, family: str) -> tuple:
    if family.startswith("mix"):
        if args.m1 is None or args.m2 is None:
            raise _UsageError(f"{family} needs --m1 and --m2")
        return (args.m1, args.m2)
    if args.m is None:
        raise _UsageError(f"{family} needs --m")
    return (args.m,)


def _emit(out: TextIO, args, text_lines, payload):
    if args.json:
        out.write(json.dumps(payload, default=_jsonable, sort_keys=True) + "\n")
    else:
        for line in text_lines:
            out.write(f"{line}\n")


def _cmd_construct(args, out):
    params = _m_params(args, args.family)
    pair = mix(*params) if args.family == "mix" else FAMILIES[args.family](*params)
    pf = PairFile.from_pair(pair)
    if args.out:
        pf.write(args.out)
        _emit(out, args, [f"wrote {args.out}: |G| = {pf.group.order}, |S| = {len(pf.S)}, |T| = {len(pf.T)}"],
              {"out": args.out, "group": list(pf.group.orders), "size_S": len(pf.S), "size_T": len(pf.T)})
    else:
        out.write(json.dumps(pf.to_dict(), sort_keys=True) + "\n" if args.json else pf.dumps())
    return OK


def _cmd_verify(args, out):
    pf = read_pair_file(args.pair)
    G = pf.group
    rep = verify_formally_dual(G, pf.S, pf.T, args.direction, args.max_failures)
    lines = [f"formally dual ({rep.checked_direction}): {'yes' if rep.ok else 'no'}"]
    if not rep.ok:
        lines.append(f"failures: {rep.n_failures}")
        lines += [f"  {f}" for f in rep.failures]
    payload = {"ok": rep.ok, "direction": rep.checked_direction, "n_failures": rep.n_failures,
               "failures": [{"side": f.side, "witness": f.witness, "lhs": f.lhs, "rhs": f.rhs,
                             "required_nu": f.required_nu, "message": str(f)} for f in rep.failures]}
    ok = rep.ok
    if args.primitive:
        payload["primitive"] = {}
        for side, A in (("S", pf.S), ("T", pf.T)):
            pr = verify_primitive(G, A)
            ok &= pr.primitive
            lines.append(f"{side} primitive: {'yes' if pr.primitive else 'no'}")
            if pr.coset_confined:
                lines.append(f"  {side} lies in a coset of a subgroup of order {pr.confinement_witness.order}")
            if pr.stabilized:
                lines.append(f"  {side} is a union of cosets of <{pr.stabilizer_witness}>")
            if not pr.character_criterion_agrees:
                lines.append(f"  {side}: character criterion disagrees with direct coset test")
            payload["primitive"][side] = {
                "primitive": pr.primitive, "coset_confined": pr.coset_confined,
                "confinement_subgroup_order": pr.confinement_witness.order,
                "stabilized": pr.stabilized, "stabilizer": pr.stabilizer_witness,
                "character_criterion_agrees": pr.character_criterion_agrees}
    payload["verified"] = ok
    _emit(out, args, lines, payload)
    return OK if ok else FAILED


def _side(pf: PairFile, side: str):
    return pf.S if side == "S" else pf.T


def _cmd_spectrum(args, out):
    pf = read_pair_file(args.pair)
    A = _side(pf, args.side)
    if args.kind == "difference":
        spec = difference_spectrum(pf.group, A)
    else:
        spec = character_spectrum(GroupRingElement.from_set(pf.group, A))
    _emit(out, args, spec.lines(), {"side": args.side, "kind": args.kind,
                                    "spectrum": [[_jsonable(v), m] for v, m in spec.items()]})
    return OK


def _cmd_theta(args, out):
    pf = read_pair_file(args.pair)
    th = theta(pf.group, _side(pf, args.side))
    _emit(out, args, [str(th)], {"side": args.side, "theta": th})
    return OK


def _cmd_predict(args, out):
    params = _m_params(args, args.family)
    value = predict(args.family, *params)
    if isinstance(value, SpectrumMultiset):
        _emit(out, args, value.lines(), {"family": args.family, "params": params,
                                         "spectrum": [[v, m] for v, m in value.items()]})
    else:
        _emit(out, args, [str(value)], {"family": args.family, "params": params, "value": value})
    return OK


def _fmt(A) -> str:
    return json.dumps([list(x) for x in A])


def _cmd_search(args, out):
    G = make_group(args.group)
    task = SearchTask(G, args.sizes[0], args.sizes[1], require_primitive=not args.all)
    threads = args.threads if args.threads is not None else _default_threads()
    pairs = exhaustive_pairs(task, n_jobs=threads)
    if args.classify:
        buckets = classify_by_invariants(G, pairs)
        for i, members in enumerate(buckets.values()):
            for S, T in members:
                _emit(out, args, [f"bucket {i}: S={_fmt(S)} T={_fmt(T)}"], {"bucket": i, "S": S, "T": T})
    else:
        for S, T in pairs:
            _emit(out, args, [f"S={_fmt(S)} T={_fmt(T)}"], {"S": S, "T": T})
    summary = f"{len(pairs)} pair(s)" + (f" in {len(buckets)} invariant bucket(s)" if args.classify else "")
    if not args.json:
        out.write(summary + "\n")
    return OK


def _cmd_selftest(args, out):
    from .selftest import CRITERIA, run_check

    numbers = args.only or [num for num, _, _ in CRITERIA]
    results = []
    for num in numbers:
        try:
            results.append(run_check(num))
        except KeyError:
            raise _UsageError(f"no check numbered {num}") from None
    failed = [r for r in results if not r.ok]
    lines = []
    for r in results:
        lines.append(r.line())
        lines += [f"      {d}" for d in r.details if args.verbose or not r.ok and d.startswith("BAD")]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    _emit(out, args, lines, {"results": [{"number": r.number, "name": r.name, "ok": r.ok,
                                          "details": list(r.details)} for r in results],
                             "passed": len(results) - len(failed), "total": len(results)})
    return FAILED if failed else OK


COMMANDS = {
    "construct": _cmd_construct, "verify": _cmd_verify, "spectrum": _cmd_spectrum,
    "theta": _cmd_theta, "predict": _cmd_predict, "search": _cmd_search, "selftest": _cmd_selftest,
}


def run_command(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None,
                err: Optional[TextIO] = None) -> int:
    """Run one command and return its exit status."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args, out)
    except _UsageError as exc:
        err.write(f"{exc}\n")
        return USAGE
    except FormalDualityError as exc:
        err.write(f"error: {exc}\n")
        return USAGE
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
