"""
Command-line interface.

Exit codes: 0 success or a positive answer, 1 a negative answer or a
mismatch against the published data, 2 invalid input, 3 a cap exceeded,
4 a failed internal consistency check.
"""

import argparse
import json
import logging
import sys
from typing import List, Optional

from clone_minors.config import load_limits
from clone_minors.errors import (
    CapExceededError,
    ConsistencyError,
    DomainError,
    UnsupportedCloneError,
)
from clone_minors.parsing import parse_op
from clone_minors.clones.registry import get_clone
from clone_minors.boolean.catalog import class_label
from clone_minors.boolean.figures import expected_poset, representative
from clone_minors.minors.decide import METHODS, boolean_clone_id, equivalent, minor
from clone_minors.minors.classes import enumerate_classes
from clone_minors.minors.nu import nu_map
from clone_minors.bounds.counting import check_bound
from clone_minors.bounds.reduction import reduce_to_d_ary
from clone_minors.bounds.witnesses import WITNESS_CLONES, chain_holds, witness_matrix
from clone_minors.visualization.hasse import poset_to_dict, poset_to_dot, poset_to_json
from clone_minors.visualization.comparison import nu_rows, nu_to_dot

logger = logging.getLogger("clone_minors")

EXIT_OK, EXIT_NO, EXIT_INPUT, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4


def _emit(args, text: str, payload: dict) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _boolean_id(clone):
    cid = boolean_clone_id(clone)
    if cid is None:
        raise UnsupportedCloneError(f"{clone.name} is not a Boolean discriminator clone")
    return cid


def cmd_classify(args, limits) -> int:
    f = parse_op(args.op)
    cid = _boolean_id(get_clone(args.clone, f.k, limits))
    label = class_label(f, cid)
    rep = representative(label, cid)
    _emit(
        args,
        f"{label.text}\nrepresentative: {rep.text}",
        {"clone": cid.value, "op": f.text, "label": label.text, "representative": rep.text},
    )
    return EXIT_OK


def cmd_minor(args, limits) -> int:
    f, g = parse_op(args.f), parse_op(args.g)
    clone = get_clone(args.clone, f.k, limits)
    result = minor(f, g, clone, args.method)
    witness = [h.text for h in result.witness] if result.witness else None
    text = "yes" if result.holds else "no"
    if witness:
        text += "\nwitness: " + " ".join(witness)
    _emit(args, text, {"clone": clone.name, "f": f.text, "g": g.text, "minor": result.holds, "witness": witness})
    return EXIT_OK if result.holds else EXIT_NO


def cmd_equiv(args, limits) -> int:
    f, g = parse_op(args.f), parse_op(args.g)
    clone = get_clone(args.clone, f.k, limits)
    same = equivalent(f, g, clone, args.method)
    _emit(args, "yes" if same else "no", {"clone": clone.name, "f": f.text, "g": g.text, "equivalent": same})
    return EXIT_OK if same else EXIT_NO


def cmd_classes(args, limits) -> int:
    clone = get_clone(args.clone, args.k, limits)
    poset = enumerate_classes(clone, args.max_arity, args.method)
    lines = [f"{len(poset)} classes"]
    lines += [f"{node.label}\t{node.representative.text}" for node in poset.nodes]
    _emit(args, "\n".join(lines), poset_to_dict(poset))
    return EXIT_OK


def cmd_hasse(args, limits) -> int:
    clone = get_clone(args.clone, args.k, limits)
    poset = enumerate_classes(clone, args.max_arity)
    if args.format == "dot":
        print(poset_to_dot(poset), end="")
    else:
        print(poset_to_json(poset))

    cid = boolean_clone_id(clone)
    if cid is None:
        return EXIT_OK
    published = expected_poset(cid)
    if published.same_shape(poset):
        return EXIT_OK
    for kind, items in published.differences(poset).items():
        for item in sorted(items):
            print(f"{kind}: {item}", file=sys.stderr)
    return EXIT_NO


def cmd_verify_bound(args, limits) -> int:
    report = check_bound(args.k)
    if args.json:
        print(json.dumps(report.to_dict(), sort_keys=True))
    else:
        print(f"k={report.k} d={report.d}")
        print(report.to_frame().to_string(index=False))
    return EXIT_OK if report.ok else EXIT_NO


def cmd_reduce(args, limits) -> int:
    f = parse_op(args.op)
    g = reduce_to_d_ary(f, args.d, args.method, limits)
    _emit(args, g.text, {"op": f.text, "d": args.d, "reduced": g.text, "equivalent": True})
    return EXIT_OK


def cmd_witness(args, limits) -> int:
    frame = witness_matrix(args.clone, args.max, limits)
    holds = chain_holds(frame)
    payload = {
        "clone": args.clone,
        "matrix": [[bool(v) for v in row] for row in frame.to_numpy()],
        "chain": holds,
    }
    _emit(args, frame.astype(int).to_string(), payload)
    return EXIT_OK if holds else EXIT_NO


def cmd_clone_gen(args, limits) -> int:
    clone = get_clone(args.clone, args.k, limits)
    members = clone.members(args.arity)
    text = "\n".join([f"{len(members)} operations of arity {args.arity}"] + [h.text for h in members])
    _emit(args, text, {"clone": clone.name, "arity": args.arity, "members": [h.text for h in members]})
    return EXIT_OK


def cmd_nu(args, limits) -> int:
    sub, sup = get_clone(args.sub, args.k, limits), get_clone(args.sup, args.k, limits)
    poset_sub = enumerate_classes(sub, args.max_arity)
    poset_sup = enumerate_classes(sup, args.max_arity)
    nu = nu_map(sub, sup, poset_sub, poset_sup)
    if args.format == "dot":
        print(nu_to_dot(nu, poset_sub, poset_sup), end="")
    elif args.json or args.format == "json":
        print(json.dumps({"sub": sub.name, "sup": sup.name, "map": nu}, sort_keys=True))
    else:
        for source, target in nu_rows(nu, poset_sub):
            print(f"{source} -> {target}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--verbose", "-v", action="store_true", help="debug logging on stderr")
    common.add_argument("--cap", type=int, default=None, help="cell cap (overrides CLONE_MINOR_CAP)")

    parser = argparse.ArgumentParser(
        prog="clone-minors",
        description="Minors and equivalence of finite operations relative to clones.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="class label of a Boolean operation")
    p.add_argument("op")
    p.add_argument("--clone", default="D")
    p.set_defaults(handler=cmd_classify)

    for name, handler, text in (
        ("minor", cmd_minor, "is F a minor of G"),
        ("equiv", cmd_equiv, "are F and G equivalent"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("f")
        p.add_argument("g")
        p.add_argument("--clone", default="D")
        p.add_argument("--method", choices=METHODS, default="auto")
        p.set_defaults(handler=handler)

    p = sub.add_parser("classes", parents=[common], help="list equivalence classes")
    p.add_argument("--clone", default="D")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-arity", type=int, default=3)
    p.add_argument("--method", choices=METHODS, default="auto")
    p.set_defaults(handler=cmd_classes)

    p = sub.add_parser("hasse", parents=[common], help="Hasse diagram of the classes")
    p.add_argument("--clone", default="D")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-arity", type=int, default=3)
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    p.set_defaults(handler=cmd_hasse)

    p = sub.add_parser("verify-bound", parents=[common], help="check the counting inequalities")
    p.add_argument("--k", type=int, default=2)
    p.set_defaults(handler=cmd_verify_bound)

    p = sub.add_parser("reduce", parents=[common], help="D-equivalent operation of arity d")
    p.add_argument("op")
    p.add_argument("--d", type=int, default=3)
    p.add_argument("--method", choices=("decide", "auto"), default="decide")
    p.set_defaults(handler=cmd_reduce)

    p = sub.add_parser("witness", parents=[common], help="infinite chain check")
    p.add_argument("--clone", choices=WITNESS_CLONES, default="M")
    p.add_argument("--max", type=int, default=3)
    p.set_defaults(handler=cmd_witness)

    p = sub.add_parser("clone-gen", parents=[common], help="members of a clone at one arity")
    p.add_argument("--clone", default="D")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--arity", type=int, default=2)
    p.set_defaults(handler=cmd_clone_gen)

    p = sub.add_parser("nu", parents=[common], help="natural map between class posets")
    p.add_argument("--sub", default="D")
    p.add_argument("--sup", default="S")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--max-arity", type=int, default=3)
    p.add_argument("--format", choices=("text", "dot", "json"), default="text")
    p.set_defaults(handler=cmd_nu)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        limits = load_limits(cells=args.cap)
        logger.debug("%s with %s", args.command, limits)
        return args.handler(args, limits)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (DomainError, UnsupportedCloneError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
