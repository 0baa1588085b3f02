"""Command-line front end.

Systems are described by JSON files::

    {
      "alphabet": ["a", "b"],
      "substitutions": {
        "f": {"a": "ab", "b": "ba"},
        "g": {"a": "ba", "b": "ab"}
      },
      "title": "optional"
    }

Reports are JSON with sorted keys and embedded parameters, so identical
invocations produce identical bytes and no report can be mistaken for a
statement about the infinite objects themselves.

Exit codes: 0 success, 1 usage or parse error, 2 precondition failure,
3 enumeration cap exceeded, 4 requested resolution unreachable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import dimension as dim
from . import flgraph, hull, limitset, oracles
from .errors import (
    EnumerationCapError,
    PreconditionError,
    ResolutionError,
    SubsemigroupError,
    ValidationError,
)
from .fixedpoints import find_anchors, fix_language, fixed_point_prefix
from .semigroup import DEFAULT_CAP, GeneratorSet, fixed_letter_witness, is_irreducible
from .substitution import Substitution
from .words import Alphabet

ENV_CAP = "SUBSEMIGROUP_MAX_ENUM"


def parse_system(text: str) -> GeneratorSet:
    """Validated generator set from system-file JSON, or a pointed diagnostic."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValidationError("system file must be a JSON object")
    if "alphabet" not in data:
        raise ValidationError("alphabet: missing")
    if "substitutions" not in data:
        raise ValidationError("substitutions: missing")
    alphabet = Alphabet(data["alphabet"])
    subs = data["substitutions"]
    if not isinstance(subs, dict) or not subs:
        raise ValidationError("substitutions: must be a nonempty object")
    generators = []
    for name, images in subs.items():
        if not isinstance(images, dict):
            raise ValidationError(f"substitutions.{name}: must be an object")
        for ch in alphabet:
            if ch not in images:
                raise ValidationError(f"substitutions.{name}.{ch}: missing image")
        for ch, img in images.items():
            if ch not in alphabet:
                raise ValidationError(
                    f"substitutions.{name}.{ch}: letter not in alphabet"
                )
            if not isinstance(img, str) or not img:
                raise ValidationError(
                    f"substitutions.{name}.{ch}: erasing morphism rejected, "
                    "every image must be a nonempty word"
                )
            for c in img:
                if c not in alphabet:
                    raise ValidationError(
                        f"substitutions.{name}.{ch}: image letter {c!r} "
                        "not in alphabet"
                    )
        generators.append(Substitution(alphabet, images, name=name))
    return GeneratorSet(alphabet, generators)


def serialize_system(gens: GeneratorSet, title: str | None = None) -> str:
    """Byte-stable system-file JSON; parse_system(serialize_system(G)) == G."""
    data = {
        "alphabet": list(gens.alphabet.letters),
        "substitutions": {g.name: g.as_dict() for g in gens},
    }
    if title:
        data["title"] = title
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def load_system(path: str) -> GeneratorSet:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return parse_system(handle.read())
    except OSError as exc:
        raise ValidationError(f"cannot read system file: {exc}") from None


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # route argparse failures to exit code 1
        raise ValidationError(message)


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if out:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _word(gens: GeneratorSet, word) -> str:
    return gens.format_word(word)


def _decomposition_payload(gens: GeneratorSet) -> dict:
    graph = flgraph.build(gens)
    decomp = flgraph.decompose(graph)
    return {
        "recurrent_letters": list(decomp.recurrent_letters()),
        "components": [
            {"letters": list(comp), "terminal": term}
            for comp, term in zip(decomp.components, decomp.terminal)
        ],
        "terminal_components": [
            list(c) for c in decomp.terminal_components()
        ],
        "non_recurrent": list(decomp.non_recurrent),
    }


def cmd_analyze(args) -> dict:
    gens = load_system(args.system)
    witness = fixed_letter_witness(gens)
    payload = {
        "command": "analyze",
        "letters": list(gens.alphabet.letters),
        "generators": sorted(g.name for g in gens),
        "fixed_letter_free": witness is None,
        "fixed_letter_witness": None
        if witness is None
        else {"word": _word(gens, witness[0]), "letter": witness[1]},
        "irreducible": is_irreducible(gens),
        "graph": _decomposition_payload(gens),
        "dimension": dim.dimension_bound(gens).to_json_dict(),
    }
    return payload


def cmd_graph(args) -> dict:
    gens = load_system(args.system)
    graph = flgraph.build(gens)
    decomp = flgraph.decompose(graph)
    dot = flgraph.dot_export(graph, decomp)
    with open(args.dot, "w", encoding="utf-8") as handle:
        handle.write(dot)
    return {
        "command": "graph",
        "dot_file": args.dot,
        "vertices": len(graph.letters),
        "edges": len(graph.edges),
        "graph": _decomposition_payload(gens),
    }


def cmd_limit(args) -> dict:
    gens = load_system(args.system)
    language = limitset.limit_language(
        gens, args.letters, args.depth, args.k,
        allow_partial=args.allow_partial, cap=args.cap,
    )
    return {
        "command": "limit",
        "letters": list(args.letters),
        "depth": args.depth,
        "k": args.k,
        "allow_partial": args.allow_partial,
        "cover_only": True,
        "size": len(language),
        "members": list(language),
    }


def cmd_fixed_points(args) -> dict:
    gens = load_system(args.system)
    anchors = find_anchors(gens, args.depth, cap=args.cap)
    language = fix_language(gens, args.depth, args.k, cap=args.cap)
    return {
        "command": "fixed-points",
        "depth": args.depth,
        "k": args.k,
        "anchors": [
            {
                "word": _word(gens, anchor.word),
                "letter": anchor.letter,
                "prefix": fixed_point_prefix(gens, anchor, args.k),
            }
            for anchor in anchors
        ],
        "language_size": len(language),
        "language": list(language),
    }


def cmd_dimension(args) -> dict:
    gens = load_system(args.system)
    payload = {"command": "dimension", "power": args.power}
    if args.power > 1:
        gens = dim.power_generating_set(gens, args.power, cap=args.cap)
        payload["powered_generators"] = sorted(g.name for g in gens)
    payload["report"] = dim.dimension_bound(gens).to_json_dict()
    return payload


def cmd_certify(args) -> dict:
    gens = load_system(args.system)
    report = limitset.certify_uncountable(gens, args.depth, args.k, cap=args.cap)
    payload = {
        "command": "certify-uncountable",
        "depth": args.depth,
        "k": args.k,
        "status": report.status,
        "prefix_injectivity": [
            {"generator": name, "passes": w is None,
             "witness": None if w is None else list(w)}
            for name, w in report.injectivity
        ],
    }
    if report.certificate:
        cert = report.certificate
        payload["certificate"] = {
            "first_anchor": {"word": _word(gens, cert.first.word), "letter": cert.first.letter},
            "second_anchor": {"word": _word(gens, cert.second.word), "letter": cert.second.letter},
            "shared_letter": cert.letter,
            "prefixes": [cert.prefix_first, cert.prefix_second],
            "differ_at": cert.disagreement,
            "revalidated": limitset.validate_certificate(gens, cert),
        }
    else:
        payload["reason"] = report.reason
        if report.hint:
            payload["hint"] = report.hint
    return payload


def cmd_hull(args) -> dict:
    gens = load_system(args.system)
    result = hull.hull_language(
        gens, args.letter, args.depth, args.k, args.shift_budget,
        allow_partial=args.allow_partial, cap=args.cap,
    )
    return {
        "command": "hull",
        "letter": args.letter,
        "depth": args.depth,
        "k": args.k,
        "shift_budget": args.shift_budget,
        "allow_partial": args.allow_partial,
        "cover_only": True,
        "size": len(result.words),
        "members": list(result.words),
    }


def cmd_extremal(args) -> dict:
    alphabet = Alphabet(args.letters)
    gens = dim.extremal_family(alphabet, args.r, args.s)
    return {
        "command": "extremal",
        "r": args.r,
        "s": args.s,
        "system": json.loads(serialize_system(gens)),
        "report": dim.dimension_bound(gens).to_json_dict(),
    }


def cmd_oracle(args) -> dict:
    if args.oracle == "balanced":
        if args.word is None:
            raise ValidationError("oracle balanced requires --word")
        if args.system:
            alphabet = load_system(args.system).alphabet
        else:
            letters = sorted(set(args.word))
            if len(letters) == 1:
                letters.append("b" if letters != ["b"] else "a")
            alphabet = Alphabet(letters)
        return {
            "command": "oracle",
            "oracle": "balanced",
            "word": args.word,
            "balanced": oracles.balanced(args.word, alphabet),
        }
    if args.system is None:
        raise ValidationError(f"oracle {args.oracle} requires --system")
    gens = load_system(args.system)
    if args.oracle == "relation":
        if args.left is None or args.right is None:
            raise ValidationError("oracle relation requires --left and --right")
        claim = oracles.RelationClaim(
            gens.parse_word(args.left), gens.parse_word(args.right)
        )
        return {
            "command": "oracle",
            "oracle": "relation",
            "left": args.left,
            "right": args.right,
            "equal": oracles.check_relation(gens, claim),
        }
    if args.oracle == "fixed-letter":
        found = oracles.brute_fixed_letter(gens, args.depth, cap=args.cap)
        return {
            "command": "oracle",
            "oracle": "fixed-letter",
            "depth": args.depth,
            "found": found is not None,
            "witness": None
            if found is None
            else {"word": _word(gens, found[0]), "letter": found[1]},
        }
    if args.oracle == "normal-form":
        report = oracles.normal_form_coverage(gens, args.depth, cap=args.cap)
        return {
            "command": "oracle",
            "oracle": "normal-form",
            "depth": args.depth,
            "checked": report.checked,
            "complete": report.complete,
            "exceptions": list(report.exceptions),
        }
    raise ValidationError(f"unknown oracle {args.oracle!r}")


def build_parser() -> _Parser:
    parser = _Parser(prog="subsemigroup", description=__doc__.splitlines()[0])
    parser.add_argument("--out", help="write the JSON report here instead of stdout")
    parser.add_argument(
        "--max-enumeration",
        type=int,
        default=None,
        help=f"composition-word cap (default {DEFAULT_CAP}, env {ENV_CAP})",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def with_system(sub):
        sub.add_argument("--system", required=True, help="path to a system JSON file")
        return sub

    with_system(commands.add_parser("analyze", help="classification summary"))

    graph_cmd = with_system(commands.add_parser("graph", help="export the first-letter graph"))
    graph_cmd.add_argument("--dot", required=True, help="output DOT file")

    limit_cmd = with_system(commands.add_parser("limit", help="limit-set cover language"))
    limit_cmd.add_argument("--letters", required=True)
    limit_cmd.add_argument("--depth", type=int, required=True)
    limit_cmd.add_argument("--k", type=int, required=True)
    limit_cmd.add_argument("--allow-partial", action="store_true")

    fp_cmd = with_system(commands.add_parser("fixed-points", help="anchors and fixed-point prefixes"))
    fp_cmd.add_argument("--depth", type=int, required=True)
    fp_cmd.add_argument("--k", type=int, required=True)

    dim_cmd = with_system(commands.add_parser("dimension", help="dimension bound report"))
    dim_cmd.add_argument("--power", type=int, default=1)

    cert_cmd = with_system(
        commands.add_parser("certify-uncountable", help="uncountability certificate")
    )
    cert_cmd.add_argument("--depth", type=int, required=True)
    cert_cmd.add_argument("--k", type=int, required=True)

    hull_cmd = with_system(commands.add_parser("hull", help="hull cover language"))
    hull_cmd.add_argument("--letter", required=True)
    hull_cmd.add_argument("--depth", type=int, required=True)
    hull_cmd.add_argument("--k", type=int, required=True)
    hull_cmd.add_argument("--shift-budget", type=int, required=True)
    hull_cmd.add_argument("--allow-partial", action="store_true")

    extremal_cmd = commands.add_parser("extremal", help="construct an extremal family")
    extremal_cmd.add_argument("--letters", required=True)
    extremal_cmd.add_argument("--r", type=int, required=True)
    extremal_cmd.add_argument("--s", type=int, required=True)

    oracle_cmd = commands.add_parser("oracle", help="brute-force cross-checks")
    oracle_cmd.add_argument(
        "oracle", choices=["balanced", "relation", "fixed-letter", "normal-form"]
    )
    oracle_cmd.add_argument("--system")
    oracle_cmd.add_argument("--word")
    oracle_cmd.add_argument("--left")
    oracle_cmd.add_argument("--right")
    oracle_cmd.add_argument("--depth", type=int, default=4)
    return parser


_HANDLERS = {
    "analyze": cmd_analyze,
    "graph": cmd_graph,
    "limit": cmd_limit,
    "fixed-points": cmd_fixed_points,
    "dimension": cmd_dimension,
    "certify-uncountable": cmd_certify,
    "hull": cmd_hull,
    "extremal": cmd_extremal,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.max_enumeration is not None:
            args.cap = args.max_enumeration
        elif os.environ.get(ENV_CAP):
            try:
                args.cap = int(os.environ[ENV_CAP])
            except ValueError:
                raise ValidationError(f"{ENV_CAP} must be an integer") from None
        else:
            args.cap = DEFAULT_CAP
        payload = _HANDLERS[args.command](args)
        _emit(payload, args.out)
        return 0
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return 2
    except EnumerationCapError as exc:
        print(f"enumeration cap: {exc}", file=sys.stderr)
        return 3
    except ResolutionError as exc:
        print(f"resolution unreachable: {exc}", file=sys.stderr)
        return 4
    except SubsemigroupError as exc:  # fallback, should not happen
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
