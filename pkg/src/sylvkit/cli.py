"""Command-line interface.

Exit codes: 0 success, 1 negative verdict (not equal, UNSAT, not derivable,
failed verification), 2 malformed input, 3 search or derivation budget
exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import verify as suites
from .bst import p_sylv, p_sylvh, to_ascii, to_dot
from .congruence import canonicalize, equal, left_precedences, right_precedences
from .deduce import BudgetExceeded, derive
from .embed import phi_vector
from .evalsearch import BoundExceeded, refute, shortest_identities
from .idcheck import check_id
from .words import Identity, ParseError, format_word, parse_word

MONOIDS = ("sylv", "sylvh", "baxt")

# JSON documents emitted with --json, one per invocation
SCHEMAS = {
    "canon": {
        "type": "object",
        "required": ["monoid", "word", "canonical"],
        "properties": {
            "monoid": {"enum": list(MONOIDS)},
            "word": {"type": "string"},
            "canonical": {"type": "string"},
            "trees": {"type": "array", "items": {"type": "string"}, "minItems": 2, "maxItems": 2},
        },
    },
    "prec": {
        "type": "object",
        "required": ["side", "precedences"],
        "properties": {
            "side": {"enum": ["right", "left"]},
            "precedences": {
                "type": "array",
                "items": {
                    "type": "object",
                    "required": ["greater", "smaller", "index"],
                    "properties": {"index": {"type": "integer", "minimum": 1}},
                },
            },
        },
    },
    "equal": {
        "type": "object",
        "required": ["monoid", "u", "v", "equal"],
        "properties": {"equal": {"type": "boolean"}},
    },
    "check-id": {
        "type": "object",
        "required": ["monoid", "identity", "satisfied", "witness"],
        "properties": {"satisfied": {"type": "boolean"}, "witness": {"type": ["string", "null"]}},
    },
    "refute": {
        "type": "object",
        "required": ["monoid", "identity", "refuted", "assignment"],
        "properties": {
            "refuted": {"type": "boolean"},
            "assignment": {"type": ["object", "null"], "additionalProperties": {"type": "string"}},
        },
    },
    "search": {
        "type": "object",
        "required": ["monoid", "n_vars", "minimal_length", "identities", "candidates_examined", "elapsed"],
        "properties": {
            "n_vars": {"type": "integer"},
            "minimal_length": {"type": ["integer", "null"]},
            "identities": {"type": "array", "items": {"type": "string"}},
            "candidates_examined": {"type": "integer"},
            "elapsed": {"type": "number"},
        },
    },
    "derive": {
        "type": "object",
        "required": ["monoid", "identity", "derivable", "derivation"],
        "properties": {
            "derivable": {"type": "boolean"},
            "derivation": {
                "type": ["object", "null"],
                "required": ["start", "steps"],
                "properties": {
                    "steps": {
                        "type": "array",
                        "items": {
                            "type": "object",
                            "required": ["basis", "direction", "left_context", "substitution", "right_context", "result"],
                        },
                    }
                },
            },
        },
    },
    "embed": {
        "type": "object",
        "required": ["monoid", "rank", "word", "components"],
        "properties": {"components": {"type": "object", "additionalProperties": {"type": "string"}}},
    },
    "verify": {
        "type": "object",
        "required": ["passed", "suites"],
        "properties": {"passed": {"type": "boolean"}, "suites": {"type": "array"}},
    },
}


def _word_text(w) -> str:
    return "" if not w else format_word(w)


def _emit(args, doc, text_lines):
    if args.json:
        print(json.dumps(doc, ensure_ascii=False, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_canon(args):
    w = parse_word(args.word)
    e = canonicalize(args.monoid, w)
    doc = {"monoid": args.monoid, "word": _word_text(w)}
    if args.monoid == "baxt":
        # the tree pair is not a word; print the least word of the class instead
        doc["canonical"] = _word_text(e.rep)
        doc["trees"] = [_word_text(c) for c in e.canonical]
    else:
        doc["canonical"] = _word_text(e.canonical)
    _emit(args, doc, [doc["canonical"] or "ε"])
    return 0


def cmd_tree(args):
    w = parse_word(args.word)
    render = to_dot if args.format == "dot" else to_ascii
    if args.monoid == "sylv":
        out = [render(p_sylv(w))]
    elif args.monoid == "sylvh":
        out = [render(p_sylvh(w))]
    elif args.format == "dot":
        out = [render(p_sylvh(w), "TL"), render(p_sylv(w), "TR")]
    else:
        out = ["left-strict:", render(p_sylvh(w)), "right-strict:", render(p_sylv(w))]
    for chunk in out:
        print(chunk)
    return 0


def cmd_prec(args):
    w = parse_word(args.word)
    table = right_precedences(w) if args.side == "right" else left_precedences(w)
    _emit(args, table.to_json(), table.lines())
    return 0


def cmd_equal(args):
    u, v = parse_word(args.u), parse_word(args.v)
    same = equal(args.monoid, u, v)
    if same:
        text = ["equal"]
    else:
        cu, cv = canonicalize(args.monoid, u), canonicalize(args.monoid, v)
        text = [f"not equal: {cu} ≠ {cv}"]
    _emit(args, {"monoid": args.monoid, "u": _word_text(u), "v": _word_text(v), "equal": same}, text)
    return 0 if same else 1


def cmd_check_id(args):
    identity = Identity.parse(args.identity)
    verdict = check_id(args.monoid, identity)
    doc = {"monoid": args.monoid, "identity": str(identity)}
    doc.update(verdict.to_json())
    _emit(args, doc, [verdict.render()])
    return 0 if verdict else 1


def cmd_refute(args):
    identity = Identity.parse(args.identity)
    psi = refute(identity, args.monoid, rank=args.rank, max_word_len=args.max_word_len)
    if psi is None:
        text = ["no refuting assignment found"]
        assignment = None
    else:
        assignment = {x: _word_text(w) for x, w in sorted(psi.items())}
        text = ["{" + ", ".join(f"{x}↦{format_word(w)}" for x, w in sorted(psi.items())) + "}"]
    doc = {"monoid": args.monoid, "identity": str(identity), "refuted": psi is not None, "assignment": assignment}
    _emit(args, doc, text)
    return 0


def cmd_search(args):
    try:
        report = shortest_identities(args.monoid, args.vars, args.max_len, jobs=args.jobs)
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    # text output omits elapsed time so repeated runs print identical bytes
    _emit(args, report.to_json(), report.lines())
    return 0


def cmd_derive(args):
    identity = Identity.parse(args.identity)
    try:
        d = derive(args.monoid, identity, budget=args.budget)
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    doc = {
        "monoid": args.monoid,
        "identity": str(identity),
        "derivable": d is not None,
        "derivation": d.to_json() if d is not None else None,
    }
    if d is None:
        text = [f"not satisfied by {args.monoid}: {check_id(args.monoid, identity).render()}"]
    else:
        text = d.lines()
    _emit(args, doc, text)
    return 0 if d is not None else 1


def cmd_embed(args):
    w = parse_word(args.word)
    vec = phi_vector(w, args.rank, args.monoid)
    doc = {
        "monoid": args.monoid,
        "rank": args.rank,
        "word": _word_text(w),
        "components": {f"({i},{j})": str(e) for (i, j), e in vec.components},
    }
    _emit(args, doc, vec.lines())
    return 0


def cmd_verify(args):
    if args.what == "embedding":
        cases = tuple((n, args.max_len) for n in range(2, args.rank + 1))
        results = [suites.embedding(cases)]
    elif args.what == "relations":
        results = [suites.relations(args.rank)]
    else:
        results = [
            suites.identity_table(),
            suites.relations(),
            suites.twins(),
            suites.characterization(),
            suites.embedding(),
        ]
    passed = all(r.passed for r in results)
    doc = {"passed": passed, "suites": [r.to_json() for r in results]}
    _emit(args, doc, [r.line() for r in results])
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sylvkit",
        description="Sylvester, #-sylvester and Baxter monoids: canonical forms and identities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, monoid=True, monoids=MONOIDS, json_flag=True):
        p = sub.add_parser(name, help=help_text)
        if monoid:
            p.add_argument("-m", "--monoid", choices=monoids, required=True)
        if json_flag:
            p.add_argument("--json", action="store_true", help="emit one JSON document")
        p.set_defaults(func=func)
        return p

    p = add("canon", cmd_canon, "canonical word(s) of a word's class")
    p.add_argument("word")

    p = add("tree", cmd_tree, "draw the insertion tree(s) of a word", json_flag=False)
    p.add_argument("word")
    p.add_argument("--format", choices=("ascii", "dot"), default="ascii")

    p = add("prec", cmd_prec, "right or left precedences of a word", monoid=False)
    p.add_argument("--side", choices=("right", "left"), required=True)
    p.add_argument("word")

    p = add("equal", cmd_equal, "do two words represent the same element?")
    p.add_argument("u")
    p.add_argument("v")

    p = add("check-id", cmd_check_id, "decide whether the monoid satisfies an identity")
    p.add_argument("identity", help='e.g. "xyxy = yxxy"')

    p = add("refute", cmd_refute, "find an assignment separating the two sides")
    p.add_argument("identity")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--max-word-len", type=int, default=0, help="also try all words up to this length")

    p = add("search", cmd_search, "shortest satisfied identities in n variables")
    p.add_argument("--vars", type=int, required=True)
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--jobs", type=int, default=1)

    p = add("derive", cmd_derive, "derive an identity from the monoid's finite basis")
    p.add_argument("identity")
    p.add_argument("--budget", type=int, default=None)

    p = add("embed", cmd_embed, "components of the rank-2 embedding of a word")
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("word")

    p = add("verify", cmd_verify, "run the exhaustive property sweeps", monoid=False)
    p.add_argument("what", choices=("embedding", "relations", "suite"))
    p.add_argument("--rank", type=int, default=None)
    p.add_argument("--max-len", type=int, default=4)
    p.add_argument("--jobs", type=int, default=1, help="accepted for compatibility; sweeps run serially")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and args.rank is None:
        args.rank = 4 if args.what == "relations" else 3
    try:
        return args.func(args)
    except (ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
