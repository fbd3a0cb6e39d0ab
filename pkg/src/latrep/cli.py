"""Command-line interface.

Exit codes: 0 PASS or Witness, 1 FAIL or CertifiedUnsat, 2 BoundExhausted,
3 input error.  Machine-readable output goes to stdout with ``--json``;
a one-line summary always goes to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .coloring import EXHAUSTED, UNSAT, WITNESS, ColoredChain, decide_chain_representable, extract_colored_chain
from .congruence import check_containment_chain, con_lattice
from .construction import PreconditionViolated, assemble
from .io import export_dot, lattice_to_json, load_lattice
from .order import LatticeError, join_irreducibles, subposet
from .pipeline import exit_code, regression_known_results, verify_theorem13, verify_theorem15

EXIT_INPUT = 3


class InputError(Exception):
    pass


def _max_len(args):
    if getattr(args, "max_len", None) is not None:
        return args.max_len
    env = os.environ.get("LATREP_MAX_LEN")
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"LATREP_MAX_LEN is not an integer: {env!r}")
    return None


def _parse_q(D, text):
    Q = {x.strip() for x in text.split(",") if x.strip()}
    unknown = Q - set(D.elements)
    if unknown:
        raise InputError(f"unknown elements in --q: {sorted(unknown)}")
    return Q


def _load(path):
    try:
        return load_lattice(path)
    except (OSError, json.JSONDecodeError, KeyError, TypeError) as e:
        raise InputError(f"cannot read lattice {path}: {e}")


def _load_chain(path, D):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as e:
        raise InputError(f"cannot read chain {path}: {e}")
    if "witness" in data:
        data = data["witness"]
    if not data:
        raise InputError(f"{path} holds no witness chain")
    P = subposet(D, join_irreducibles(D))
    return ColoredChain.from_json(data, None if "colorPoset" in data else P)


def _emit(args, payload, text):
    if args.json:
        json.dump(payload, sys.stdout, indent=1, default=sorted)
        sys.stdout.write("\n")
    elif text:
        print(text)


def _summary(msg):
    print(msg, file=sys.stderr)


def cmd_analyze(args):
    L = _load(args.lattice)
    CL = con_lattice(L)
    D = CL.lattice
    jplus = set(join_irreducibles(D)) | {D.zero, D.one}
    ok = check_containment_chain(L, CL)
    if args.dot:
        sys.stdout.write(export_dot(D, name="Con"))
        _summary(f"{'PASS' if ok else 'FAIL'} |Con L|={len(D)} |Princ L|={len(CL.principal)}")
        return 0 if ok else 1
    table = [
        {
            "congruence": x,
            "blocks": [sorted(b, key=L.index.__getitem__) for b in CL.congruence_of[x].blocks],
            "in_J+": x in jplus,
            "principal": x in CL.principal,
        }
        for x in D.elements
    ]
    payload = {
        "con_size": len(D),
        "princ_size": len(CL.principal),
        "containment": ok,
        "table": table,
        "con_lattice": lattice_to_json(D),
    }
    lines = [f"|Con L| = {len(D)}", f"|Princ L| = {len(CL.principal)}", "congruence  J+  principal"]
    lines += [f"{r['congruence']:<10}  {'y' if r['in_J+'] else '-':<2}  {'y' if r['principal'] else '-'}" for r in table]
    lines.append(f"J+(Con L) <= Princ L <= Con L: {'PASS' if ok else 'FAIL'}")
    _emit(args, payload, "\n".join(lines))
    _summary(f"{'PASS' if ok else 'FAIL'} |Con L|={len(D)} |Princ L|={len(CL.principal)}")
    return 0 if ok else 1


def cmd_chainrep(args):
    D = _load(args.lattice)
    Q = _parse_q(D, args.q)
    v = decide_chain_representable(D, Q, _max_len(args))
    text = v.status
    if v.witness is not None:
        text += f"\nlength {v.witness.length}: {' '.join(v.witness.colors)}"
    elif v.certificate:
        text += f"\n{v.certificate}"
    _emit(args, v.to_json(), text)
    _summary(f"{v.status} (bound {v.bound})")
    return exit_code(v.status)


def _witness_chain(args, D, Q):
    if args.chain:
        return _load_chain(args.chain, D), None
    v = decide_chain_representable(D, Q, _max_len(args))
    return v.witness, v


def cmd_construct(args):
    D = _load(args.lattice)
    Q = _parse_q(D, args.q)
    C, v = _witness_chain(args, D, Q)
    if C is None:
        _summary(f"{v.status}: no colored chain, nothing to construct")
        return exit_code(v.status)
    asm = assemble(C, D)
    if args.dot:
        sys.stdout.write(export_dot(asm.L, asm.provenance(), name="L"))
    else:
        out = lattice_to_json(asm.L)
        out["provenance"] = asm.provenance()
        out["chain"] = C.to_json()
        json.dump(out, sys.stdout, indent=1)
        sys.stdout.write("\n")
    _summary(f"{WITNESS} |L|={len(asm.L)} covers={len(asm.L.cover_indices)} components={len(asm.components)}")
    return 0


def cmd_extract(args):
    L = _load(args.lattice)
    ex = extract_colored_chain(L)
    payload = ex.colored.to_json()
    json.dump(payload, sys.stdout, indent=1)
    sys.stdout.write("\n")
    _summary(f"chain of length {ex.colored.length} from {len(ex.components)} maximal chains")
    return 0


def _report(args, rep):
    _emit(args, rep.to_json(), "\n".join(f"{'ok ' if s.ok else 'BAD'} {s.name}: {s.detail}" for s in rep.stages))
    _summary(rep.summary())
    if rep.passed:
        return 0
    if rep.status in (UNSAT, EXHAUSTED):
        return exit_code(rep.status)
    return 1


def cmd_verify13(args):
    return _report(args, verify_theorem13(_load(args.lattice), name=args.lattice))


def cmd_verify15(args):
    D = _load(args.lattice)
    Q = _parse_q(D, args.q)
    chain = _load_chain(args.chain, D) if args.chain else None
    rep = verify_theorem15(D, Q, _max_len(args), name=args.lattice, chain=chain)
    if rep.status == "PreconditionViolated":
        _summary(rep.summary())
        return EXIT_INPUT
    for key in ("lattice", "assembly", "con"):
        rep.artifacts.pop(key, None)
    return _report(args, rep)


def cmd_regression(args):
    reports = regression_known_results()
    ok = all(r.passed for r in reports)
    _emit(args, [r.to_json() for r in reports], "\n".join(r.summary() for r in reports))
    _summary(f"{'PASS' if ok else 'FAIL'} {sum(r.passed for r in reports)}/{len(reports)} known results")
    return 0 if ok else 1


def cmd_export_dot(args):
    L = _load(args.lattice)
    grouping = None
    if args.provenance:
        try:
            with open(args.provenance) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as e:
            raise InputError(f"cannot read provenance {args.provenance}: {e}")
        grouping = data.get("provenance", data)
    sys.stdout.write(export_dot(L, grouping))
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output on stdout")
    bound = argparse.ArgumentParser(add_help=False)
    bound.add_argument("--max-len", type=int, default=None, help="chain length bound (default |J(D)|*|Q|)")

    p = argparse.ArgumentParser(prog="latrep", description="Principal congruence representations of finite lattices.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="congruence lattice and principal congruences of L")
    s.add_argument("lattice")
    s.add_argument("--dot", action="store_true", help="emit the congruence lattice as DOT")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("chainrep", parents=[common, bound], help="decide chain representability of Q in D")
    s.add_argument("lattice")
    s.add_argument("--q", required=True, help="comma-separated elements of D")
    s.set_defaults(func=cmd_chainrep)

    s = sub.add_parser("construct", parents=[common, bound], help="build L with Con L = D and Princ L = Q")
    s.add_argument("lattice")
    s.add_argument("--q", required=True)
    s.add_argument("--chain", help="colored chain JSON (a chainrep verdict also works)")
    s.add_argument("--dot", action="store_true")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("extract", parents=[common], help="colored chain realizing Princ L")
    s.add_argument("lattice")
    s.set_defaults(func=cmd_extract)

    s = sub.add_parser("verify13", parents=[common], help="check Rep C = Princ L for the extracted chain")
    s.add_argument("lattice")
    s.set_defaults(func=cmd_verify13)

    s = sub.add_parser("verify15", parents=[common, bound], help="full construction pipeline for (D, Q)")
    s.add_argument("lattice")
    s.add_argument("--q", required=True)
    s.add_argument("--chain")
    s.set_defaults(func=cmd_verify15)

    s = sub.add_parser("regression", parents=[common], help="known results on the small catalog")
    s.set_defaults(func=cmd_regression)

    s = sub.add_parser("export-dot", parents=[common], help="Hasse diagram of a lattice as DOT")
    s.add_argument("lattice")
    s.add_argument("--provenance", help="JSON mapping elements to components (construct output works)")
    s.set_defaults(func=cmd_export_dot)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, PreconditionViolated, LatticeError) as e:
        _summary(f"input error: {e}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
