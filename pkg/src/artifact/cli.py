"""Command-line surface: every checker and constructor behind one entry point.

Exit codes: 0 when the requested check passes (or the object exists), 1 when
it fails (or does not exist), 2 on invalid input of any kind.  With
--format json every report is a single json.dumps line with sorted keys, so
identical inputs produce byte-identical output.
"""

import argparse
import json
import sys
from fractions import Fraction

from .actions import (action_from_json, check_action_axioms,
                      check_derived_action, semidirect)
from .algebra import CATEGORIES, InputError, algebra_from_json, identity_suite
from .constructions import (ConstructionError, actor_from_json,
                            biderivations, bimultipliers, canonical_d,
                            crossed_module_check, derivations, multipliers)
from .corpus import generate_atlas
from .existence import actor_pipeline
from .fields import QQ, FieldError, field_from_json
from .groups import (CapError, automorphisms, group_from_json,
                     group_universality_check, holomorph_check,
                     inner_automorphisms)
from .linalg import LinAlgError
from .words import (MODES, check_swap_symmetry, check_T_coverage,
                    expand_condition4, parse_word, validate_word_on_algebra)


def _jdefault(o):
    if isinstance(o, Fraction):
        return int(o) if o.denominator == 1 else f"{o.numerator}/{o.denominator}"
    return str(o)


def _text_lines(obj, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k in sorted(obj):
            v = obj[k]
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}{k}:")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_text_lines(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{obj}")
    return lines


def _emit(payload, fmt):
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True, default=_jdefault))
    else:
        print("\n".join(_text_lines(payload)))


def _load(path):
    with open(path) as fh:
        return json.load(fh)


def _parse_field_flag(s: str):
    if s.strip().upper() == "Q":
        return QQ
    return field_from_json({"p": int(s)})


# ---------------------------------------------------------------------------
# subcommands


def _cmd_check(args):
    a = algebra_from_json(_load(args.algebra))
    rep = identity_suite(a)
    payload = {"category": a.category, "dim": a.dim,
               "report": rep.to_json(a.field.to_json)}
    return (0 if rep.passed else 1), payload


def _cmd_construct(args):
    a = algebra_from_json(_load(args.algebra))
    if args.kind == "der":
        actor = derivations(a)
    elif args.kind == "bim":
        actor = bimultipliers(a)
    elif args.kind == "bider":
        actor = biderivations(a, args.variant)
    else:
        actor = multipliers(a)
    payload = actor.to_json()
    payload["dim"] = actor.dim
    return 0, payload


def _cmd_actor(args):
    a = algebra_from_json(_load(args.algebra))
    v = actor_pipeline(a, args.variant)
    return (0 if v.exists else 1), v.to_json(a.field.to_json)


def _cmd_semidirect(args):
    act = action_from_json(_load(args.action))
    return 0, semidirect(act).to_json()


def _cmd_action_check(args):
    act = action_from_json(_load(args.action))
    category = args.category or act.A.category
    derived = check_derived_action(category, act)
    axioms = check_action_axioms(act)
    payload = {"category": category,
               "derived": derived.to_json(act.A.field.to_json),
               "axioms": axioms.to_json(act.A.field.to_json)}
    return (0 if derived.passed and axioms.passed else 1), payload


def _cmd_xmod_check(args):
    a = algebra_from_json(_load(args.algebra))
    actor = actor_from_json(_load(args.actor))
    t = actor.target
    if a.field != t.field or a.tensor != t.tensor:
        raise InputError("algebra does not match the actor's target")
    d = canonical_d(a, actor)
    rep = crossed_module_check(d, actor.action_pair())
    payload = {"canonical_d": [[a.field.to_json(x) for x in row]
                               for row in d.rows],
               "report": rep.to_json(a.field.to_json)}
    return (0 if rep.passed else 1), payload


def _cmd_words(args):
    if args.action == "coverage":
        rep = check_T_coverage(parse_word(args.w1, "W1"),
                               parse_word(args.w2, "W2"), args.mode)
        return (0 if rep.passed else 1), rep.to_json()
    if args.action == "symmetry":
        rep = check_swap_symmetry(parse_word(args.w2, "W2"), args.sign)
        return (0 if rep.passed else 1), rep.to_json()
    if args.action == "cond4":
        rep = expand_condition4(parse_word(args.w1, "W1"),
                                parse_word(args.w2, "W2"),
                                depth=args.depth, mode=args.mode)
        return (0 if rep.passed else 1), rep.to_json()
    a = algebra_from_json(_load(args.algebra))
    rep = validate_word_on_algebra(a, parse_word(args.w1, "W1"),
                                   parse_word(args.w2, "W2"))
    return (0 if rep.passed else 1), rep.to_json(a.field.to_json)


def _cmd_group(args):
    g = group_from_json(_load(args.group))
    if args.action == "aut":
        aut = automorphisms(g, args.cap)
        return 0, {"order": aut.order, "perms": [list(p) for p in aut.perms]}
    if args.action == "inn":
        inn = inner_automorphisms(g, automorphisms(g, args.cap))
        return 0, {"inn_order": len(inn.indices), "tau": list(inn.tau),
                   "center": [g.names[a] for a in inn.center]}
    if args.action == "holomorph":
        rep = holomorph_check(g, args.cap)
    else:
        rep = group_universality_check(g, args.max_b, args.cap)
    return (0 if rep.passed else 1), rep.to_json()


def _cmd_atlas(args):
    field = _parse_field_flag(args.field)
    summary = generate_atlas(field, args.dim, args.category, args.samples,
                             args.seed, args.out)
    return 0, summary


# ---------------------------------------------------------------------------
# parser


def _build_parser():
    p = argparse.ArgumentParser(
        prog="artifact",
        description="actor existence, construction and verification for "
                    "structure-constant algebras and small groups")
    p.add_argument("--format", choices=("json", "text"), default="json")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check", help="run an algebra's identity suite")
    s.add_argument("algebra")
    s.set_defaults(func=_cmd_check)

    s = sub.add_parser("construct", help="build one actor candidate")
    s.add_argument("kind", choices=("der", "bim", "bider", "mult"))
    s.add_argument("algebra")
    s.add_argument("--variant", type=int, choices=(1, 2), default=1)
    s.set_defaults(func=_cmd_construct)

    s = sub.add_parser("actor", help="decide actor existence")
    s.add_argument("algebra")
    s.add_argument("--variant", type=int, choices=(1, 2), default=1)
    s.set_defaults(func=_cmd_actor)

    s = sub.add_parser("semidirect", help="build the semidirect product of an action")
    s.add_argument("action")
    s.set_defaults(func=_cmd_semidirect)

    s = sub.add_parser("action-check", help="derived-action conditions for an action")
    s.add_argument("action")
    s.add_argument("--category", choices=CATEGORIES, default=None)
    s.set_defaults(func=_cmd_action_check)

    s = sub.add_parser("xmod-check", help="crossed-module conditions for the canonical map")
    s.add_argument("algebra")
    s.add_argument("--actor", required=True)
    s.set_defaults(func=_cmd_xmod_check)

    s = sub.add_parser("words", help="replacement-word checks")
    ws = s.add_subparsers(dest="action", required=True)
    w = ws.add_parser("coverage", help="T-set coverage of a word pair")
    w.add_argument("--w1", required=True)
    w.add_argument("--w2", required=True)
    w.add_argument("--mode", choices=MODES, default="plain")
    w.set_defaults(func=_cmd_words)
    w = ws.add_parser("symmetry", help="y/z swap symmetry of a W2 word")
    w.add_argument("--w2", required=True)
    w.add_argument("--sign", choices=("+", "-"), required=True)
    w.set_defaults(func=_cmd_words)
    w = ws.add_parser("cond4", help="agreement of the two rewrite orders")
    w.add_argument("--w1", required=True)
    w.add_argument("--w2", required=True)
    w.add_argument("--depth", type=int, default=3)
    w.add_argument("--mode", choices=MODES, default="plain")
    w.set_defaults(func=_cmd_words)
    w = ws.add_parser("validate", help="ground a word pair on an algebra")
    w.add_argument("--algebra", required=True)
    w.add_argument("--w1", required=True)
    w.add_argument("--w2", required=True)
    w.set_defaults(func=_cmd_words)

    s = sub.add_parser("group", help="finite-group checks")
    s.add_argument("action", choices=("aut", "inn", "holomorph", "universality"))
    s.add_argument("group")
    s.add_argument("--cap", type=int, default=24)
    s.add_argument("--max-b", type=int, default=6, dest="max_b")
    s.set_defaults(func=_cmd_group)

    s = sub.add_parser("atlas", help="seeded random corpus classification")
    s.add_argument("--field", required=True, help='"Q" or a prime p')
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--category", choices=CATEGORIES, required=True)
    s.add_argument("--samples", type=int, required=True)
    s.add_argument("--seed", type=int, required=True)
    s.add_argument("--out", required=True)
    s.set_defaults(func=_cmd_atlas)

    return p


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        code, payload = args.func(args)
    except ConstructionError as exc:
        _emit({"passed": False, "error": f"{type(exc).__name__}: {exc}"},
              args.format)
        return 1
    except (InputError, FieldError, LinAlgError, CapError, ValueError,
            OSError, KeyError, TypeError, AttributeError) as exc:
        _emit({"error": f"{type(exc).__name__}: {exc}"}, args.format)
        return 2
    _emit(payload, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
