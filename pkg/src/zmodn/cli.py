"""Command-line interface.

    zmodn [--format json|text] [--enum-bound B] <command> ...

Exit codes: 0 success, 1 usage error, 2 domain error, 3 verification
mismatch, 4 enumeration bound exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import cohomology as co
from . import cyclic_module as cm
from .cyclic_module import CyclicModule
from .errors import DomainError, ZModNError
from .factor import DEFAULT_ENUM_BOUND, is_squarefree, radical
from .verify import verify_modulus

EXIT_USAGE = 1
_JSON_SAFE = 2**53


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def num(x: int):
    """JSON-lossless integer: decimal string once it leaves the double range."""
    return str(x) if abs(x) > _JSON_SAFE else x


def _factorization(M: CyclicModule) -> list:
    return [[num(p), k] for p, k in M.factorization]


def _presentation(q: co.QuotientPresentation) -> dict:
    return {"p": num(q.p), "k": q.k, "a": q.a, "b": q.b}


def _group(g) -> list:
    return [num(q) for q in g.orders]


def _module(M: CyclicModule) -> dict:
    return {"n": num(M.n), "factorization": _factorization(M)}


def _header(n: int, command: str) -> dict:
    return {"n": num(n), "command": command}


# Each command returns (json payload, text lines).

def cmd_factor(args):
    M = CyclicModule.of(args.n)
    f = M.factorization
    out = _header(M.n, "factor")
    out.update(
        factorization=_factorization(M),
        radical=num(radical(f)),
        squarefree=is_squarefree(f),
    )
    return out, [f"{M.n} = {f}", f"radical = {radical(f)}"]


def cmd_classify(args):
    M = CyclicModule.of(args.n)
    out = _header(M.n, "classify")
    out.update(
        factorization=_factorization(M),
        reduced=cm.is_reduced(M),
        semisimple=cm.is_semisimple(M),
        non_nilpotent_count=num(cm.non_nilpotent_count(M)),
        radical=num(radical(M.factorization)),
    )
    text = [
        f"M = {M}, n = {M.factorization}",
        f"reduced: {out['reduced']}",
        f"semisimple: {out['semisimple']}",
        f"non-nilpotent elements: {cm.non_nilpotent_count(M)}",
        f"radical: {out['radical']}",
    ]
    return out, text


def cmd_elements(args):
    M = CyclicModule.of(args.n)
    if args.kind == "nilpotent":
        elems = cm.nilpotent_elements(M, args.limit, args.enum_bound)
    else:
        elems = cm.non_nilpotent_elements(M, args.limit, args.enum_bound)
    out = _header(M.n, "elements")
    out.update(kind=args.kind, limit=args.limit, elements=[num(e) for e in elems])
    return out, [" ".join(map(str, elems))]


def cmd_element(args):
    M = CyclicModule.of(args.n)
    cls = cm.classify_element(M, args.m)
    out = _header(M.n, "element")
    out.update(m=num(args.m), **{"class": cls.value})
    return out, [f"{args.m} in {M}: {cls.value}"]


def cmd_cohomology(args):
    M = CyclicModule.of(args.n)
    first = co.first_valid_index(M)
    top = max(M.factorization.max_exponent, 1)
    lo = first if args.lo is None else args.lo
    hi = max(lo, top + 1) if args.hi is None else args.hi
    if hi < lo:
        raise DomainError(f"--to {hi} is below --from {lo}")
    groups = [co.cohomology_composite(M, i) for i in range(lo, hi + 1)]
    out = _header(M.n, "cohomology")
    out.update(
        factorization=_factorization(M),
        defined_from=first,
        stabilization_index=co.cohomology_sequence(M, top).stabilization_index,
        groups=[
            {
                "index": h.index,
                "presentation": [_presentation(q) for q in h.presentations],
                "canonical": _group(h.group),
            }
            for h in groups
        ],
    )
    text = []
    for h in groups:
        shown = " x ".join(str(q) for q in h.presentations) or "0"
        if args.view == "presentation":
            text.append(f"H^{h.index}(M) = {shown}")
        elif args.view == "canonical":
            text.append(f"H^{h.index}(M) ~= {h.group}")
        else:
            text.append(f"H^{h.index}(M) = {shown}  ~=  {h.group}")
    text.append(f"stabilization index: {out['stabilization_index']}")
    return out, text


def cmd_stabilize(args):
    M = CyclicModule.of(args.n)
    top = max(M.factorization.max_exponent, 1)
    seq = co.cohomology_sequence(M, top)
    out = _header(M.n, "stabilize")
    out.update(
        factorization=_factorization(M),
        defined_from=seq.defined_from,
        stabilization_index=seq.stabilization_index,
        limit=_group(seq.limit),
        constant=co.is_constant_sequence(M, max(top, 2)),
        distinct_from_limit=[
            [num(p), k, co.distinct_from_limit_count(p, k)] for p, k in M.factorization if k > 1
        ],
    )
    text = [
        f"H^n({M}) defined from n = {seq.defined_from}",
        f"stable from n = {seq.stabilization_index}, limit {seq.limit}",
        f"constant sequence: {out['constant']}",
    ]
    return out, text


def cmd_reduce(args):
    M = CyclicModule.of(args.n)
    out = _header(M.n, "reduce")
    red = cm.reduce_once(M)
    out.update(
        factorization=_factorization(M),
        generator=num(red.generator),
        quotient=_module(red.quotient),
    )
    text = [f"N = <{red.generator}> in {M}", f"M/N = {red.quotient}"]
    if args.chain:
        chain = cm.reduction_chain(M)
        out["chain"] = [_module(step) for step in chain.steps]
        text.append(" -> ".join(str(step) for step in chain.steps))
    return out, text


def cmd_same_class(args):
    M1, M2 = CyclicModule.of(args.n), CyclicModule.of(args.n2)
    same = cm.same_class(M1, M2)
    out = _header(M1.n, "same-class")
    out.update(
        n2=num(M2.n),
        radicals=[num(radical(M1.factorization)), num(radical(M2.factorization))],
        same_class=same,
    )
    return out, [f"{M1} and {M2}: {'same class' if same else 'different classes'}"]


def cmd_verify(args):
    if args.n is None and args.through is None:
        raise UsageError("verify: give n, --through N, or both")
    start = 1 if args.n is None else args.n
    stop = start if args.through is None else args.through
    if start < 1:
        raise DomainError(f"n must be positive, got {start}")
    mismatches = []
    for n in range(start, stop + 1):
        mismatches.extend(verify_modulus(n, args.enum_bound))
    out = _header(start, "verify")
    out.update(
        through=num(stop),
        checked=max(0, stop - start + 1),
        ok=not mismatches,
        mismatches=[
            {"n": num(m.n), "check": m.check, "expected": m.expected, "actual": m.actual}
            for m in mismatches
        ],
    )
    text = [f"verified {out['checked']} moduli in [{start}, {stop}]: "
            + ("all agree" if not mismatches else f"{len(mismatches)} mismatches")]
    text += [f"  n={m.n} {m.check}: expected {m.expected}, got {m.actual}" for m in mismatches]
    return out, text


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
    common.add_argument("--enum-bound", type=int, default=argparse.SUPPRESS, metavar="B")

    parser = _Parser(prog="zmodn", description=__doc__.splitlines()[0] if __doc__ else None)
    parser.add_argument("--format", choices=["json", "text"], default="text")
    parser.add_argument("--enum-bound", type=int, default=DEFAULT_ENUM_BOUND, metavar="B")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    add("factor", cmd_factor, "prime factorization").add_argument("n", type=int)
    add("classify", cmd_classify, "reducedness, semisimplicity, class invariant").add_argument("n", type=int)

    p = add("elements", cmd_elements, "list nilpotent or non-nilpotent elements")
    p.add_argument("n", type=int)
    p.add_argument("--kind", choices=["nilpotent", "non-nilpotent"], default="non-nilpotent")
    p.add_argument("--limit", type=int)

    p = add("element", cmd_element, "classify one residue")
    p.add_argument("n", type=int)
    p.add_argument("m", type=int)

    p = add("cohomology", cmd_cohomology, "H^i for a range of indices")
    p.add_argument("n", type=int)
    p.add_argument("--from", dest="lo", type=int)
    p.add_argument("--to", dest="hi", type=int)
    view = p.add_mutually_exclusive_group()
    view.add_argument("--presentation", dest="view", action="store_const", const="presentation")
    view.add_argument("--canonical", dest="view", action="store_const", const="canonical")

    add("stabilize", cmd_stabilize, "stabilization index and limit").add_argument("n", type=int)

    p = add("reduce", cmd_reduce, "quotient by {0} + non-nilpotents")
    p.add_argument("n", type=int)
    p.add_argument("--chain", action="store_true")

    p = add("same-class", cmd_same_class, "compare class invariants")
    p.add_argument("n", type=int)
    p.add_argument("n2", type=int)

    p = add("verify", cmd_verify, "check closed forms against brute force")
    p.add_argument("n", type=int, nargs="?")
    p.add_argument("--through", type=int, metavar="N")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        payload, text = args.func(args)
    except UsageError as exc:
        print(exc, file=stderr)
        return EXIT_USAGE
    except ZModNError as exc:
        print(f"zmodn: {type(exc).__name__}: {exc}", file=stderr)
        return exc.exit_code
    if args.format == "json":
        print(json.dumps(payload), file=stdout)
    else:
        print("\n".join(text), file=stdout)
    if args.command == "verify" and not payload["ok"]:
        return 3
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
