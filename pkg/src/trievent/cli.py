"""Command-line front end.

Every subcommand loads a model file, runs one library operation and
renders the result in one of three formats.  Output is a pure function
of the inputs (model, command, flags, seed), so identical invocations
produce byte-identical reports.

Exit codes: 0 on success, 1 for domain and model errors (impossible
antecedents, unknown names, invalid layer structure, atom limits),
2 for syntax errors in model files, event expressions or terms.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from fractions import Fraction

from .betting import bet
from .conditionals import (
    DEFAULT_ATOM_LIMIT,
    atom_chain_weight,
    atom_set,
    mu_p,
)
from .errors import ModelError, ParseError, TrieventError
from .laws import LawsReport, run_laws
from .model import Model
from .parsing import load_model, parse_term
from .prevision import PrevisionEngine
from .rationals import parse_rational, rational_json
from .terms import CondTerm, reduce as reduce_term, term_to_str

ATOM_LIMIT_ENV = "TRIEVENT_ATOM_LIMIT"


def _rational_arg(text: str):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trievent",
        description="Evaluate compound conditionals as exact-rational random quantities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str, *, term=False, term2=False, world=False,
            seeded=False, perturb=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--model", required=True, help="model file path")
        if term:
            cmd.add_argument("--term", required=True, help="conditional term")
        if term2:
            cmd.add_argument("--term2", required=True, help="second conditional term")
        if world:
            cmd.add_argument("--world", required=True, help="world name")
        if seeded:
            cmd.add_argument("--seed", type=int, default=0, help="random seed (default 0)")
            cmd.add_argument("--cases", type=int, default=100,
                             help="cases per law (default 100)")
            cmd.add_argument("--depth", type=int, default=3,
                             help="term nesting depth (default 3)")
        if perturb:
            cmd.add_argument("--perturb", type=_rational_arg, default=Fraction(0),
                             help="overpay the fair price by this rational")
        cmd.add_argument("--format", choices=("text", "csv", "json"), default="text",
                         help="output format (default text)")
        cmd.add_argument("--atom-limit", type=int, default=None,
                         help=f"max worlds for atom enumeration "
                              f"(default {DEFAULT_ATOM_LIMIT}, env {ATOM_LIMIT_ENV})")
        return cmd

    add("eval", "per-world value table and prevision of a term", term=True)
    add("prevision", "prevision of a term", term=True)
    add("reduce", "residual of a term at a world", term=True, world=True)
    add("atoms", "atoms below a term with their chain weights", term=True)
    add("equiv", "decide equivalence of two terms", term=True, term2=True)
    add("laws", "run the randomized law suites", seeded=True)
    add("bet", "price a term and show the per-world gains", term=True, perturb=True)
    return parser


def _atom_limit(args) -> int:
    if args.atom_limit is not None:
        return args.atom_limit
    env = os.environ.get(ATOM_LIMIT_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ParseError(f"{ATOM_LIMIT_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_ATOM_LIMIT


def _render(model: Model, term: CondTerm) -> str:
    return term_to_str(term, model.event_name)


def _csv_writer(out):
    return csv.writer(out, lineterminator="\n")


def cmd_eval(model: Model, args, out) -> int:
    term = parse_term(args.term, model)
    engine = PrevisionEngine(model.cp)
    quantity = engine.random_quantity(term)
    support = engine.support(term)
    prevision = engine.prevision(term)
    rendered = _render(model, term)
    names = model.space.worlds
    if args.format == "text":
        out.write(f"term: {rendered}\n")
        out.write(f"support: {support}\n")
        width = max(len(name) for name in names)
        for i, name in enumerate(names):
            marker = "*" if support.has(i) else " "
            out.write(f"  {name:<{width}}  {marker}  {quantity.values[i]}\n")
        out.write(f"prevision: {prevision}\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["kind", "world", "in_support", "value"])
        for i, name in enumerate(names):
            writer.writerow(["world", name, int(support.has(i)), quantity.values[i]])
        writer.writerow(["prevision", "", "", prevision])
    else:
        payload = {
            "term": rendered,
            "support": list(support.names()),
            "values": {name: rational_json(quantity.values[i])
                       for i, name in enumerate(names)},
            "prevision": rational_json(prevision),
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_prevision(model: Model, args, out) -> int:
    term = parse_term(args.term, model)
    engine = PrevisionEngine(model.cp)
    prevision = engine.prevision(term)
    if args.format == "text":
        out.write(f"{prevision}\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["kind", "value"])
        writer.writerow(["prevision", prevision])
    else:
        payload = {"term": _render(model, term), "prevision": rational_json(prevision)}
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_reduce(model: Model, args, out) -> int:
    term = parse_term(args.term, model)
    try:
        index = model.space.index(args.world)
    except KeyError:
        raise ModelError(f"unknown world name: {args.world!r}") from None
    residual = reduce_term(term, index)
    rendered = _render(model, residual)
    if args.format == "text":
        out.write(f"{rendered}\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["kind", "value"])
        writer.writerow(["reduct", rendered])
    else:
        payload = {
            "term": _render(model, term),
            "world": args.world,
            "reduct": rendered,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_atoms(model: Model, args, out) -> int:
    term = parse_term(args.term, model)
    limit = _atom_limit(args)
    atoms = sorted(atom_set(term, model.space, limit), key=lambda a: a.seq)
    weights = [atom_chain_weight(atom, model.cp) for atom in atoms]
    positive = model.cp.is_positive
    total = mu_p(term, model.cp, limit) if positive else None
    if args.format == "text":
        out.write(f"term: {_render(model, term)}\n")
        out.write(f"atoms: {len(atoms)}\n")
        for atom, weight in zip(atoms, weights):
            out.write(f"  {atom}  {weight}\n")
        if positive:
            out.write(f"mu: {total}\n")
        else:
            out.write("mu: not defined for a layered probability "
                      "(atom-sum prevision needs a positive one)\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["kind", "atom", "weight"])
        for atom, weight in zip(atoms, weights):
            writer.writerow(["atom", " ".join(atom.names()), weight])
        writer.writerow(["mu", "", total if positive else ""])
    else:
        payload = {
            "term": _render(model, term),
            "atoms": [
                {"sequence": list(atom.names()), "weight": rational_json(weight)}
                for atom, weight in zip(atoms, weights)
            ],
            "mu": rational_json(total) if positive else None,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_equiv(model: Model, args, out) -> int:
    left = parse_term(args.term, model)
    right = parse_term(args.term2, model)
    limit = _atom_limit(args)
    left_atoms = atom_set(left, model.space, limit)
    right_atoms = atom_set(right, model.space, limit)
    equivalent = left_atoms == right_atoms
    witness = None
    side = None
    if not equivalent:
        difference = left_atoms.symmetric_difference(right_atoms)
        witness = min(difference, key=lambda a: a.seq)
        side = "first" if witness in left_atoms else "second"
    if args.format == "text":
        if equivalent:
            out.write("equivalent\n")
        else:
            out.write("not equivalent\n")
            out.write(f"witness: {witness} satisfies the {side} term only\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["kind", "value", "detail"])
        writer.writerow(["equivalent", int(equivalent), ""])
        if not equivalent:
            writer.writerow(["witness", " ".join(witness.names()), side])
    else:
        payload = {
            "term": _render(model, left),
            "term2": _render(model, right),
            "equivalent": equivalent,
            "witness": None if equivalent else
                {"sequence": list(witness.names()), "satisfies": side},
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def cmd_laws(model: Model, args, out) -> int:
    limit = _atom_limit(args)
    report = run_laws(model.space, args.seed, args.cases, args.depth, limit)
    if args.format == "text":
        _laws_text(report, out)
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["kind", "name", "cases", "failures", "detail"])
        for result in report.results:
            writer.writerow([
                "law", result.name, result.cases, result.failures,
                result.counterexample or "",
            ])
        for note in report.notes:
            writer.writerow(["note", "", "", "", note])
        writer.writerow(["result", "", "", "", "pass" if report.ok else "fail"])
    else:
        payload = {
            "space": list(report.space.worlds),
            "seed": report.seed,
            "cases": report.cases,
            "depth": report.depth,
            "laws": [
                {
                    "name": result.name,
                    "cases": result.cases,
                    "failures": result.failures,
                    "counterexample": result.counterexample,
                }
                for result in report.results
            ],
            "notes": report.notes,
            "ok": report.ok,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


def _laws_text(report: LawsReport, out) -> None:
    out.write("law suites\n")
    out.write(f"space: {' '.join(report.space.worlds)}\n")
    out.write(f"seed: {report.seed}\n")
    out.write(f"cases: {report.cases}\n")
    out.write(f"depth: {report.depth}\n")
    for result in report.results:
        if result.ok:
            out.write(f"PASS {result.name} ({result.cases} cases)\n")
        else:
            out.write(
                f"FAIL {result.name} ({result.failures}/{result.cases} failed): "
                f"{result.counterexample}\n"
            )
    for note in report.notes:
        out.write(note + "\n")
    out.write(f"result: {'all laws hold' if report.ok else 'LAW FAILURES FOUND'}\n")


def cmd_bet(model: Model, args, out) -> int:
    term = parse_term(args.term, model)
    engine = PrevisionEngine(model.cp)
    report = bet(engine, term, args.perturb)
    names = model.space.worlds
    verdict = "coherent" if report.coherent else "NOT coherent"
    if args.format == "text":
        out.write(f"term: {_render(model, term)}\n")
        out.write(f"paid: {report.paid}\n")
        width = max(len(name) for name in names)
        for i, name in enumerate(names):
            marker = "*" if report.support.has(i) else " "
            out.write(f"  {name:<{width}}  {marker}  {report.gains.values[i]}\n")
        out.write(f"gain prevision on support: {report.gain_prevision}\n")
        out.write(f"{verdict}\n")
    elif args.format == "csv":
        writer = _csv_writer(out)
        writer.writerow(["kind", "world", "in_support", "value"])
        writer.writerow(["paid", "", "", report.paid])
        for i, name in enumerate(names):
            writer.writerow(["gain", name, int(report.support.has(i)),
                             report.gains.values[i]])
        writer.writerow(["gain_prevision", "", "", report.gain_prevision])
        writer.writerow(["coherent", "", "", int(report.coherent)])
    else:
        payload = {
            "term": _render(model, term),
            "paid": rational_json(report.paid),
            "support": list(report.support.names()),
            "gains": {name: rational_json(report.gains.values[i])
                      for i, name in enumerate(names)},
            "gain_prevision": rational_json(report.gain_prevision),
            "coherent": report.coherent,
        }
        out.write(json.dumps(payload, indent=2) + "\n")
    return 0


_COMMANDS = {
    "eval": cmd_eval,
    "prevision": cmd_prevision,
    "reduce": cmd_reduce,
    "atoms": cmd_atoms,
    "equiv": cmd_equiv,
    "laws": cmd_laws,
    "bet": cmd_bet,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    if hasattr(out, "reconfigure"):
        try:
            out.reconfigure(encoding="utf-8")
        except Exception:
            pass
    try:
        model = load_model(args.model)
        return _COMMANDS[args.command](model, args, out)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TrieventError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
