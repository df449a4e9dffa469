"""Command-line interface.

Exit status: 0 on success, 1 when the requested object does not exist (a
witness or certificate is printed), 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from . import extension, lattice
from .action import GroupElem, PermAction, condition_no_finite_orbits, finite_orbit_witness, orbits, sim_g
from .errors import InadmissiblePair, InputError, InvorderError, MathematicalFailure, OrbitConditionError
from .relations import Relation, chain_summary, classify, invariance_violation, to_dot


def _load_json(path: str) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _action(args) -> PermAction:
    if not args.action:
        raise InputError("--action is required")
    return PermAction.from_json(_load_json(args.action))


def _relation(args, a: PermAction | None = None) -> Relation:
    if not args.relation:
        raise InputError("--relation is required")
    r = Relation.from_json(_load_json(args.relation))
    if a is not None:
        if a.n != r.n:
            raise InputError(f"action on {a.n} points, relation on {r.n}")
        if r.universe.labels != a.universe.labels and any(l != str(i) for i, l in enumerate(r.universe.labels)):
            raise InputError("relation and action labels differ")
        r = r.with_universe(a.universe)
    return r


def _cone(args) -> lattice.ConeOrder:
    if not args.cone:
        raise InputError("--cone is required")
    return lattice.ConeOrder.from_json(_load_json(args.cone))


def _int_vector(text: str | None, flag: str) -> tuple[int, ...]:
    if text is None:
        raise InputError(f"{flag} is required")
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError as exc:
        raise InputError(f"{flag} must be comma-separated integers") from exc


def _pair(text: str | None, r: Relation) -> tuple[int, int]:
    if text is None:
        raise InputError("--pair is required")
    parts = text.split(",")
    if len(parts) != 2:
        raise InputError("--pair takes two elements, e.g. --pair 0,3")
    out = []
    for p in parts:
        p = p.strip()
        if p in r.universe.labels:
            out.append(r.universe.index(p))
        elif p.isdigit() and int(p) < r.n:
            out.append(int(p))
        else:
            raise InputError(f"unknown element {p!r}")
    return out[0], out[1]


def _elem_json(g: GroupElem, a: PermAction | None = None) -> dict:
    out: dict[str, Any] = {"map": list(g.perm.images), "cycles": str(g.perm)}
    if a is not None:
        out["word"] = g.word_str(a.generator_names)
    return out


def _witness_json(w: Any) -> Any:
    if hasattr(w, "to_json"):
        return w.to_json()
    if isinstance(w, (list, tuple)):
        return [_witness_json(v) for v in w]
    return w


def _emit(obj: Any) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _emit_relation(r: Relation, args) -> None:
    if args.dot:
        sys.stdout.write(to_dot(r))
    elif args.summary:
        sys.stdout.write(chain_summary(r) + "\n")
    else:
        _emit(r.to_json())


# -- commands -----------------------------------------------------------------


def cmd_check(args) -> int:
    a = _action(args) if args.action else None
    r = _relation(args, a)
    out: dict[str, Any] = {"class": classify(r).to_json()}
    if a is not None:
        bad = invariance_violation(r, a)
        out["invariant"] = bad is None
        if bad is not None:
            out["violation"] = {"generator": bad[0], "x": bad[1], "y": bad[2]}
    _emit(out)
    return 0


def cmd_orbits(args) -> int:
    a = _action(args)
    classes = orbits(a)
    if args.summary:
        sys.stdout.write(", ".join(classes.labels()) + "\n")
        return 0
    out: dict[str, Any] = {
        "order": a.order,
        "abelian": a.abelian,
        "orbits": [[a.universe.labels[x] for x in sorted(c)] for c in classes.classes()],
        "conditionNoFiniteOrbits": condition_no_finite_orbits(a),
    }
    bad = finite_orbit_witness(a)
    if bad is not None:
        out["witness"] = {"element": _elem_json(bad[0], a), "orbit": sorted(bad[1])}
    _emit(out)
    return 0


def cmd_simg(args) -> int:
    _emit_relation(sim_g(_action(args)), args)
    return 0


def cmd_leqg(args) -> int:
    a = _action(args)
    _emit_relation(extension.leq_g(a, _relation(args, a)), args)
    return 0


def cmd_extend_linear(args) -> int:
    a = _action(args)
    r = _relation(args, a)
    if args.pair:
        x, y = _pair(args.pair, r)
        out = extension.extend_step(a, r, x, y)
    else:
        out = extension.invariant_linear_extension(a, r)
    _emit_relation(out, args)
    return 0


def cmd_extend_preorder(args) -> int:
    a = _action(args)
    _emit_relation(extension.invariant_linear_preorder_extension(a, _relation(args, a)), args)
    return 0


def cmd_powerset_order(args) -> int:
    _emit_relation(extension.powerset_preorder(_action(args)), args)
    return 0


def cmd_strong_invariance(args) -> int:
    a = _action(args)
    r = _relation(args, a)
    bad = extension.strong_invariance_violation(r, a)
    out: dict[str, Any] = {"stronglyInvariant": bad is None}
    if bad is not None:
        out["witness"] = {"element": _elem_json(bad[0], a), "x": bad[1], "y": bad[2]}
    _emit(out)
    return 0


def cmd_cone_check(args) -> int:
    c = _cone(args)
    cert = lattice.gordan_certificate(c)
    _emit(cert.to_json())
    return 1 if isinstance(cert, lattice.ZeroCombo) else 0


def cmd_cone_member(args) -> int:
    c = _cone(args)
    d = _int_vector(args.vector, "--vector")
    if args.bound is not None:
        coeffs = lattice.monoid_member_bounded(c, d, args.bound)
        _emit({"found": coeffs is not None, "bound": args.bound, "coeffs": list(coeffs) if coeffs else None})
    else:
        _emit(lattice.cone_member(c, d).to_json())
    return 0


def cmd_cone_extend(args) -> int:
    _emit(lattice.weight_extension(_cone(args)).to_json())
    return 0


def cmd_cone_separate(args) -> int:
    c = _cone(args)
    w = lattice.separating_extension(c, _int_vector(args.x, "--x"), _int_vector(args.y, "--y"))
    _emit(w.to_json())
    return 0


def cmd_export_dot(args) -> int:
    sys.stdout.write(to_dot(_relation(args)))
    return 0


COMMANDS = {
    "check": (cmd_check, "classify a relation (and test invariance under --action)"),
    "orbits": (cmd_orbits, "group order, orbits and the finite-orbit condition"),
    "simg": (cmd_simg, "orbit equivalence ~G"),
    "leqg": (cmd_leqg, "the relation <=_G of an invariant order"),
    "extend-linear": (cmd_extend_linear, "invariant linear extension (one extension step with --pair)"),
    "extend-preorder": (cmd_extend_preorder, "invariant linear preorder keeping strict pairs"),
    "powerset-order": (cmd_powerset_order, "invariant linear preorder on subsets refining proper inclusion"),
    "strong-invariance": (cmd_strong_invariance, "test strong invariance"),
    "cone-check": (cmd_cone_check, "Gordan certificate for a cone order"),
    "cone-member": (cmd_cone_member, "rational cone membership (bounded monoid search with --bound)"),
    "cone-extend": (cmd_cone_extend, "weight-matrix linear extension"),
    "cone-separate": (cmd_cone_separate, "weight-matrix extension with x < y"),
    "export-dot": (cmd_export_dot, "Hasse diagram in DOT"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="invorder", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--action", help="action JSON file")
        p.add_argument("--relation", help="relation JSON file")
        p.add_argument("--cone", help="cone JSON file")
        p.add_argument("--pair", help="two elements x,y (index or label)")
        p.add_argument("--vector", help="lattice vector d, e.g. 1,1")
        p.add_argument("--x", help="lattice vector x")
        p.add_argument("--y", help="lattice vector y")
        p.add_argument("--bound", type=int, help="coefficient bound for monoid search")
        out = p.add_mutually_exclusive_group()
        out.add_argument("--summary", action="store_true", help="print a chain summary instead of JSON")
        out.add_argument("--dot", action="store_true", help="print a DOT Hasse diagram instead of JSON")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OrbitConditionError as exc:
        g, orb = exc.witness
        _emit({"error": str(exc), "witness": {"element": _elem_json(g), "orbit": sorted(orb)}})
        return 1
    except InadmissiblePair as exc:
        _emit({"error": str(exc), "witness": {"sequence": [_elem_json(g) for g in exc.witness]}})
        return 1
    except MathematicalFailure as exc:
        _emit({"error": str(exc), "witness": _witness_json(exc.witness)})
        return 1
    except InvorderError as exc:
        sys.stderr.write(f"invorder: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
