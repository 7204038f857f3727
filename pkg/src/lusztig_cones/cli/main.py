"""``lusztig-cones`` command line.

Exit status: 0 on success, 1 when a verification suite reports failures,
2 on bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings

from .. import __version__
from ..cone import cone_matrix, label_str, spanning_vectors
from ..crystal.conjecture import conjecture_explore
from ..errors import CapacityError, DomainError, InputError
from ..quiver import parse_partial_quiver
from ..rectangle import DegenerateCentralLine, diagram, monomial_word, mu, s_set, v_vector
from ..weyl import as_word, commutation_classes, enumerate_reduced_words, reduced_words_array
from ..wiring import chamber_diagram, chamber_sets
from . import render
from .suites import SUITES

FORMAT = 1


def _emit(obj):
    print(json.dumps({"format": FORMAT, **obj}, sort_keys=True))


def _word_str(letters):
    return "(" + ",".join(map(str, letters)) + ")"


def _label(n: int, text: str):
    text = text.strip()
    if text.isdigit():
        j = int(text)
        if not 1 <= j <= n:
            raise InputError(f"simple index {j} out of range [1, {n}]")
        return j
    return parse_partial_quiver(n, text)


def cmd_words(args):
    if args.classes:
        cc = commutation_classes(args.n)
        reps = cc.representatives()
        if args.count:
            out = {"n": args.n, "classes": len(reps)}
            _emit(out) if args.json else print(len(reps))
            return 0
        if args.json:
            _emit({"n": args.n, "representatives": [list(w.letters) for w in reps]})
        else:
            for w in reps:
                print(_word_str(w.letters))
        return 0
    if args.count:
        count = int(reduced_words_array(args.n).shape[0])
        _emit({"n": args.n, "count": count}) if args.json else print(count)
        return 0
    words = list(enumerate_reduced_words(args.n))
    if args.json:
        _emit({"n": args.n, "words": [list(w.letters) for w in words]})
    else:
        for w in words:
            print(_word_str(w.letters))
    return 0


def cmd_cone(args):
    word = as_word(args.n, args.word)
    cm = cone_matrix(word)
    svs = spanning_vectors(word)
    if args.json:
        _emit({
            "word": list(word.letters),
            "matrix": [list(r) for r in cm.rows],
            "inverse": [list(r) for r in cm.inverse()],
            "spanning_vectors": [sv.to_json() for sv in svs],
        })
        return 0
    print(f"word {word}")
    print("cone matrix (rows: simple roots, then minimal pairs)")
    for lab, row in zip(cm.row_labels, cm.rows):
        tag = f"a{lab}" if isinstance(lab, int) else f"pair({lab.s},{lab.s_prime})"
        print(f"  {tag:<12} " + " ".join(f"{x:>2}" for x in row))
    print("spanning vectors")
    for sv in svs:
        print(f"  a({label_str(sv.label)}) = {_word_str(sv.coords)}  roots {sv.roots}")
    return 0


def cmd_rectangle(args):
    label = _label(args.n, args.P)
    D = diagram(args.n, label)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateCentralLine)
        S = sorted(s_set(args.n, label))
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render.rectangle_svg(D))
    if args.json:
        obj = D.to_json()
        obj.update({
            "mu": list(mu(args.n, label)),
            "monomial": [[s, m] for s, m in monomial_word(args.n, label).letters],
            "S": [[r.i, r.j] for r in S],
            "v": list(v_vector(args.n, label)),
        })
        _emit(obj)
        return 0
    name = label_str(label)
    if args.ascii or not args.svg:
        print(render.rectangle_ascii(D))
        print()
    print(f"mu({name}) = {_word_str(mu(args.n, label))}")
    print(f"F({name}) = {monomial_word(args.n, label)}")
    print(f"box rows = {_word_str(D.box_row_counts)}" + ("  (central line by convention)" if D.degenerate else ""))
    print(f"S({name}) = {{{', '.join(str(r) for r in S)}}}")
    print(f"v({name}) = {_word_str(v_vector(args.n, label))}")
    return 0


def cmd_chambers(args):
    word = as_word(args.n, args.word)
    cd = chamber_diagram(word)
    chambers = chamber_sets(word)
    if args.svg:
        with open(args.svg, "w") as fh:
            fh.write(render.chamber_svg(cd))
    if args.json:
        _emit({
            "word": list(word.letters),
            "chambers": [
                {"s": c.pair.s, "s_prime": c.pair.s_prime, "letter": c.pair.letter, "label": sorted(c.label)}
                for c in chambers
            ],
        })
        return 0
    if args.ascii:
        print(render.chamber_ascii(cd))
    if not chambers:
        print("no bounded chambers")
    for c in chambers:
        print(f"({c.pair.s},{c.pair.s_prime}) letter {c.pair.letter}: {''.join(map(str, sorted(c.label)))}")
    return 0


def cmd_verify(args):
    names = list(SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in names:
        kwargs = {"seed": args.seed}
        if args.n is not None:
            kwargs["n_max"] = args.n
        if args.samples is not None:
            kwargs["samples"] = args.samples
            kwargs["combos"] = args.samples
        if name == "theorem63":
            kwargs["stretch"] = args.stretch
        reports.append(SUITES[name](**kwargs))
    if args.json:
        objs = [r.to_json() for r in reports]
        if not args.timing:
            for o in objs:
                o.pop("elapsed")
        _emit({"reports": objs, "ok": all(r.ok for r in reports)})
    else:
        for r in reports:
            line = r.summary()
            print(line if args.timing else line.rsplit(" (", 1)[0])
            for what, exp, got in r.failures[:10]:
                print(f"  {what}: expected {exp}, got {got}")
    return 0 if all(r.ok for r in reports) else 1


def cmd_conjecture(args):
    rep = conjecture_explore(args.n, samples=args.samples, seed=args.seed)
    if args.json:
        _emit(rep.to_json())
        return 0
    print(f"k  = {_word_str(rep.k_word)}")
    print(f"k' = {_word_str(rep.k_prime)}")
    for c in rep.classes:
        print(
            f"class {c.class_id} {_word_str(c.representative)}: rank {c.rank}"
            f" ({'independent' if c.independent else 'dependent'}),"
            f" {c.additivity_violations} additivity / {c.homogeneity_violations} homogeneity"
            f" violations in {c.samples} samples"
        )
    print(f"braid adjacency between classes: {len(rep.adjacency)} edges")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lusztig-cones", description="Lusztig cones and crystal combinatorics in type A.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("words", help="reduced words of w0")
    s.add_argument("n", type=int)
    s.add_argument("--classes", action="store_true", help="one representative per commutation class")
    s.add_argument("--count", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_words)

    s = sub.add_parser("cone", help="cone matrix and spanning vectors of a word")
    s.add_argument("n", type=int)
    s.add_argument("word", help='e.g. "1,3,2,1,3,2"')
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_cone)

    s = sub.add_parser("rectangle", help="rectangle diagram D(P), mu, S and v")
    s.add_argument("n", type=int)
    s.add_argument("P", help='partial quiver such as "LRL-", or a simple index')
    s.add_argument("--svg", metavar="FILE")
    s.add_argument("--ascii", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_rectangle)

    s = sub.add_parser("chambers", help="chamber sets of a word")
    s.add_argument("n", type=int)
    s.add_argument("word")
    s.add_argument("--svg", metavar="FILE")
    s.add_argument("--ascii", action="store_true")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_chambers)

    s = sub.add_parser("verify", help="run a verification suite")
    s.add_argument("suite", choices=[*SUITES, "all"])
    s.add_argument("-n", type=int, default=None, help="largest rank (suite default if omitted)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=None, help="random states / combinations per rank")
    s.add_argument("--stretch", action="store_true", help="theorem63: also run rank 6")
    s.add_argument("--timing", action="store_true", help="include elapsed times")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("conjecture", help="explore linearity of the alternating-word transition map")
    s.add_argument("n", type=int)
    s.add_argument("--samples", type=int, default=50)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_conjecture)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, DomainError, CapacityError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
