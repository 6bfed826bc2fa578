"""Command-line front end.

Boolean subcommands exit 0 for true/ok and 1 for false; every usage or
domain error exits 2 with a diagnostic on stderr. Identical invocations
produce identical output. Numeric output is exact ("p/q") unless
--decimal K asks for a K-digit decimal rendering.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from . import io as uio
from .balls import PointMap, all_balls, check_arc_surjective_hom, hasse_diagram
from .census import enumerate_extremal, kappa
from .diametrical import diametrical_decompose
from .errors import UltrametricsError
from .extremal import (
    CharacteristicCycle,
    CharacteristicPath,
    characteristic_ham_path,
    is_extremal,
    path_to_cycle,
    reconstruct_from_cycle,
    reconstruct_from_path,
)
from .spaces import check_ultrametric, gomory_hu_margin, spectrum_of
from .trees import build_representing_tree, are_isometric, are_weakly_similar
from .transforms import approximate_extremal, compose_pipeline, lift_semimetric

__all__ = ["main", "run"]


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ultrametrics",
        description="Exact tools for finite ultrametric and semimetric spaces.",
    )
    parser.add_argument(
        "--decimal",
        type=int,
        metavar="K",
        default=None,
        help="render numeric output as K-digit decimals (display only)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, *, paths=1, dot=False, epsilon=False):
        p = sub.add_parser(name, help=help_text)
        for i in range(paths):
            p.add_argument("file" if paths == 1 else f"file{i + 1}", type=Path)
        if dot:
            p.add_argument("--dot", action="store_true", help="emit DOT instead of text")
        if epsilon:
            p.add_argument("--epsilon", required=True, help="tolerance, e.g. 1/2 or 0.001")
        return p

    add("check", "decide the strong triangle inequality")
    add("spectrum", "print the sorted distance values")
    add("extremal", "decide |Sp X| = |X|")
    add("diametrical", "diameter and diametrical parts", dot=True)
    add("path", "characteristic Hamiltonian path of an extremal space")
    add("cycle", "characteristic Hamiltonian cycle of an extremal space")
    add("reconstruct", "rebuild the space determined by a path/cycle file")
    add("tree", "representing tree", dot=True)
    add("balls", "list all closed balls")
    add("hasse", "Hasse diagram of the ball poset", dot=True)
    add("lift", "lift a semimetric space through a ball-preserving projection")
    add("approx", "extremal approximation within epsilon", epsilon=True)
    add("pipeline", "lift then approximate", epsilon=True)
    add("similar", "decide weak similarity of two spaces", paths=2)
    add("isometric", "decide isometry of two spaces", paths=2)

    count = sub.add_parser("count", help="number of extremal spaces up to weak similarity")
    count.add_argument("n", type=int)
    enum = sub.add_parser("enumerate", help="write every extremal space with spectrum 0..n-1")
    enum.add_argument("n", type=int)
    enum.add_argument("--out", type=Path, required=True, metavar="DIR")
    return parser


def _fmt(value, decimals):
    return uio.format_value(value, decimals)


def _map_json(pmap: PointMap) -> dict:
    return {p: q for p, q in pmap.pairs}


def _space_json(space, decimals) -> dict:
    return {
        "points": list(space.points),
        "distances": [[_fmt(v, decimals) for v in row] for row in space.dist],
    }


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2))


def main(argv: Optional[list] = None) -> int:
    """Dispatch one invocation; returns the exit code (0 true/ok, 1 false,
    2 usage or domain error)."""
    args = _build_parser().parse_args(argv)
    try:
        return _dispatch(args)
    except (UltrametricsError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def _dispatch(args) -> int:
    decimals = args.decimal
    cmd = args.command

    if cmd == "count":
        print(kappa(args.n))
        return 0

    if cmd == "enumerate":
        spaces = enumerate_extremal(args.n)
        args.out.mkdir(parents=True, exist_ok=True)
        manifest = {"n": args.n, "count": len(spaces), "spaces": []}
        for i, space in enumerate(spaces):
            name = f"space_{i:04d}.json"
            uio.save_space(space, args.out / name)
            code = _isometry_code(space)
            manifest["spaces"].append({"file": name, "code": code})
        with open(args.out / "manifest.json", "w", encoding="utf-8") as handle:
            json.dump(manifest, handle, indent=2)
            handle.write("\n")
        print(f"wrote {len(spaces)} spaces to {args.out}")
        return 0

    if cmd in ("similar", "isometric"):
        a = uio.load_space(args.file1)
        b = uio.load_space(args.file2)
        if cmd == "isometric":
            if are_isometric(a, b):
                print("isometric")
                return 0
            print("not isometric")
            return 1
        witness = are_weakly_similar(a, b)
        if witness is None:
            print("not weakly similar")
            return 1
        _emit(
            {
                "phi": witness.phi,
                "f": {_fmt(k, decimals): _fmt(v, decimals) for k, v in witness.f.items()},
            }
        )
        return 0

    space = uio.load_space(args.file)

    if cmd == "check":
        triple = check_ultrametric(space)
        if triple is None:
            print("ultrametric")
            return 0
        print(f"violation ({triple[0]},{triple[1]},{triple[2]})")
        return 1

    if cmd == "spectrum":
        print(" ".join(_fmt(v, decimals) for v in spectrum_of(space)))
        return 0

    if cmd == "extremal":
        s, n = gomory_hu_margin(space)
        if s == n:
            print(f"extremal |Sp|={s} |X|={n}")
            return 0
        print(f"not extremal |Sp|={s} |X|={n}")
        return 1

    if cmd == "diametrical":
        if args.dot:
            sys.stdout.write(uio.diametrical_dot(space))
            return 0
        decomposition = diametrical_decompose(space)
        print(f"diameter {_fmt(decomposition.diameter, decimals)}")
        for part in decomposition.parts:
            print("part " + " ".join(part))
        return 0

    if cmd == "path":
        path = characteristic_ham_path(space)
        _emit({"order": list(path.order), "weights": [_fmt(w, decimals) for w in path.weights]})
        return 0

    if cmd == "cycle":
        cycle = path_to_cycle(characteristic_ham_path(space), space)
        _emit({"order": list(cycle.order), "weights": [_fmt(w, decimals) for w in cycle.weights]})
        return 0

    if cmd == "reconstruct":
        order, weights = uio.parse_path_text(args.file.read_text(encoding="utf-8"))
        if len(weights) == len(order):
            rebuilt = reconstruct_from_cycle(CharacteristicCycle(order, weights))
        else:
            rebuilt = reconstruct_from_path(CharacteristicPath(order, weights))
        _emit(_space_json(rebuilt, decimals))
        return 0

    if cmd == "tree":
        tree = build_representing_tree(space)
        sys.stdout.write(uio.tree_dot(tree) if args.dot else uio.tree_to_text(tree))
        return 0

    if cmd == "balls":
        index = {p: i for i, p in enumerate(space.points)}
        for ball in all_balls(space):
            print("{" + ",".join(sorted(ball.members, key=index.get)) + "}")
        return 0

    if cmd == "hasse":
        diagram = hasse_diagram(all_balls(space))
        if args.dot:
            sys.stdout.write(uio.hasse_dot(diagram, space.points))
            return 0
        index = {p: i for i, p in enumerate(space.points)}

        def name(ball):
            return "{" + ",".join(sorted(ball.members, key=index.get)) + "}"

        for small, big in diagram.arcs:
            print(f"{name(small)} -> {name(big)}")
        return 0

    if cmd == "lift":
        lifted = lift_semimetric(space)
        _emit(
            {
                "lifted": _space_json(lifted.lifted, decimals),
                "projection": _map_json(lifted.projection),
                "ball_preserving": True,
                "hasse_map": check_arc_surjective_hom(lifted.projection).value,
            }
        )
        return 0

    if cmd == "approx":
        approx, witness = approximate_extremal(space, args.epsilon)
        _emit(
            {
                "space": _space_json(approx, decimals),
                "map": _map_json(witness.map),
                "epsilon": _fmt(witness.epsilon, decimals),
                "max_deviation": _fmt(witness.max_deviation, decimals),
            }
        )
        return 0

    if cmd == "pipeline":
        extremal_space, phi, proj = compose_pipeline(space, args.epsilon)
        _emit(
            {
                "extremal": _space_json(extremal_space, decimals),
                "phi": _map_json(phi),
                "projection": _map_json(proj),
                "extremal_check": is_extremal(extremal_space),
            }
        )
        return 0

    raise AssertionError(f"unhandled command {cmd!r}")


def _isometry_code(space) -> str:
    from .trees import canonical_code

    return canonical_code(build_representing_tree(space)).code


def run() -> None:
    sys.exit(main())
