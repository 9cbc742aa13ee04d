"""Command-line interface.

Algebra arguments accept either a path to an algebra file or a builtin name
(abelian(n), L1..L4, heisenberg3, sl2). Output is deterministic: identical
inputs and seed produce byte-identical reports. Exit code 0 iff every
requested check passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .algebras import Algebra, builtin, check_kind
from .bilinear import BilinearTensor
from .biderivations import (basis_tensors, bider_space, is_bider, is_right_bider,
                            left_bider_bilinear_space, left_bider_witness,
                            right_bider_bilinear_space)
from .brackets import (PolyLeftMap, PolyRightMap, counterexample_bracket, from_tensor,
                       from_tensor_left, lhd, rhd)
from .derivations import derivation_space
from .formats import FormatError, parse_algebra, parse_map, serialize_map
from .linalg import Matrix
from .report import (all_ok, format_element, render_table, to_json_checks, triple_str,
                     witness_from_triple)
from .verify import run_all


class CliError(Exception):
    pass


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _load_algebra(arg: str) -> Algebra:
    path = Path(arg)
    if path.exists():
        try:
            return parse_algebra(path.read_text())
        except FormatError as exc:
            raise CliError(f"{arg}: {exc}") from exc
    try:
        return builtin(arg)
    except ValueError:
        raise CliError(f"{arg}: no such file or builtin algebra") from None


def _load_map(arg: str):
    path = Path(arg)
    if not path.exists():
        raise CliError(f"{arg}: no such file")
    try:
        return parse_map(path.read_text())
    except FormatError as exc:
        raise CliError(f"{arg}: {exc}") from exc


def _algebra_line(A: Algebra) -> str:
    return f"algebra {A.name} (dim {A.dim}, kind {A.kind})"


def cmd_check(args) -> int:
    A = _load_algebra(args.algebra)
    rep = check_kind(A)
    if args.json:
        payload = {"command": "check", "algebra": A.name, "dim": A.dim, "kind": A.kind,
                   "ok": rep.ok}
        if not rep.ok:
            payload["witness"] = witness_from_triple(rep.witness)
        _emit_json(payload)
    else:
        print(_algebra_line(A))
        if rep.ok:
            print(f"kind check ({rep.kind}): pass")
        else:
            w = rep.witness
            print(f"kind check ({rep.kind}): FAIL")
            print(f"  {w.identity} fails at {triple_str(w.triple)}: "
                  f"lhs = {format_element(w.lhs)}, rhs = {format_element(w.rhs)}, "
                  f"residual = {format_element(w.residual)}")
    return 0 if rep.ok else 1


def _matrix_lines(m: Matrix) -> list[str]:
    return ["  " + " ".join(str(x) for x in row) for row in m.data]


def cmd_der(args) -> int:
    A = _load_algebra(args.algebra)
    space = derivation_space(A)
    if args.json:
        basis = [[str(x) for x in v] for v in space.vectors]
        _emit_json({"command": "der", "algebra": A.name, "dim": A.dim, "kind": A.kind,
                    "derivation_dim": space.dim, "basis_col_major": basis})
        return 0
    print(_algebra_line(A))
    print(f"dim Der = {space.dim}")
    for idx, v in enumerate(space.vectors, start=1):
        print(f"basis matrix {idx}:")
        for line in _matrix_lines(Matrix.from_col_major(v, A.dim)):
            print(line)
    return 0


def _tensor_lines(t: BilinearTensor) -> list[str]:
    n = t.dim
    lines = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                v = t.t[i][j][k]
                if v:
                    lines.append(f"  t {i + 1} {j + 1} {k + 1} = {v}")
    return lines or ["  (zero)"]


def cmd_bider(args) -> int:
    A = _load_algebra(args.algebra)
    if args.side == "right":
        label, space = "right biderivation space (bilinear)", right_bider_bilinear_space(A)
    elif args.side == "left":
        label, space = "left biderivation space (bilinear)", left_bider_bilinear_space(A)
    else:
        label, space = "biderivation space", bider_space(A)
    if args.json:
        basis = [[str(x) for x in v] for v in space.vectors]
        _emit_json({"command": "bider", "algebra": A.name, "dim": A.dim, "side": args.side,
                    "space_dim": space.dim, "basis_flat": basis})
        return 0
    print(_algebra_line(A))
    print(f"{label}: dim {space.dim}")
    for idx, t in enumerate(basis_tensors(space, A.dim), start=1):
        print(f"basis tensor {idx}:")
        for line in _tensor_lines(t):
            print(line)
    return 0


def cmd_bracket(args) -> int:
    A = _load_algebra(args.algebra)
    m1, m2 = _load_map(args.map1), _load_map(args.map2)
    for name, m in ((args.map1, m1), (args.map2, m2)):
        if m.dim != A.dim:
            raise CliError(f"{name}: map dimension {m.dim} does not match algebra dim {A.dim}")
    if args.op == "rhd":
        maps = []
        for name, m in ((args.map1, m1), (args.map2, m2)):
            if isinstance(m, BilinearTensor):
                m = from_tensor(m)
            if not isinstance(m, PolyRightMap):
                raise CliError(f"{name}: rhd needs a polyright or bilinear map")
            maps.append(m)
        result = rhd(*maps)
    else:
        maps = []
        for name, m in ((args.map1, m1), (args.map2, m2)):
            if isinstance(m, BilinearTensor):
                m = from_tensor_left(m)
            if not isinstance(m, PolyLeftMap):
                raise CliError(f"{name}: lhd needs a polyleft or bilinear map")
            maps.append(m)
        result = lhd(*maps)
    text = serialize_map(result)
    if args.json:
        _emit_json({"command": "bracket", "op": args.op, "algebra": A.name,
                    "result_mapfile": text})
    else:
        sys.stdout.write(text)
    return 0


def cmd_verify(args) -> int:
    A = _load_algebra(args.algebra)
    checks = run_all(A, seed=args.seed, samples=args.samples)
    ok = all_ok(checks)
    if args.json:
        _emit_json({"command": "verify", "algebra": A.name, "dim": A.dim, "kind": A.kind,
                    "seed": args.seed, "samples": args.samples, "ok": ok,
                    "checks": to_json_checks(checks)})
    else:
        print(_algebra_line(A))
        print(f"seed {args.seed}, samples {args.samples}")
        print(render_table(checks))
    return 0 if ok else 1


_B1_VALUES = {(0, 0, 2): 1, (1, 1, 2): -1, (0, 1, 0): 1, (1, 0, 0): 1,
              (1, 2, 2): 1, (2, 1, 2): 1}
_B2_VALUES = {(0, 0, 0): 1, (1, 1, 1): 1, (0, 2, 2): 1, (2, 0, 2): 1,
              (1, 2, 2): 1, (2, 1, 2): 1}


def heisenberg_example_maps() -> tuple[Algebra, BilinearTensor, BilinearTensor]:
    """The worked counterexample data: two symmetric biderivations of heisenberg3."""
    A = builtin("heisenberg3")
    b1 = BilinearTensor.from_entries(3, _B1_VALUES)
    b2 = BilinearTensor.from_entries(3, _B2_VALUES)
    return A, b1, b2


def cmd_example(args) -> int:
    if args.name not in ("heisenberg", "heisenberg3"):
        raise CliError(f"unknown example {args.name!r}; try: heisenberg")
    A, b1, b2 = heisenberg_example_maps()
    b1_ok, b2_ok = is_bider(A, b1), is_bider(A, b2)
    bracket = counterexample_bracket(A, b1, b2)
    right_ok = is_right_bider(A, bracket)
    left_witness = left_bider_witness(A, bracket)
    expected = b1_ok and b2_ok and right_ok and left_witness is not None
    if args.json:
        nonzero = [{"x": f"e{i + 1}", "y": f"e{j + 1}", "value": format_element(bracket.t[i][j])}
                   for i in range(3) for j in range(3) if any(bracket.t[i][j])]
        payload = {"command": "example", "algebra": A.name,
                   "b1_is_biderivation": b1_ok, "b2_is_biderivation": b2_ok,
                   "bracket_nonzero": nonzero, "bracket_is_right": right_ok,
                   "bracket_is_left": left_witness is None, "ok": expected}
        if left_witness is not None:
            payload["left_witness"] = witness_from_triple(left_witness)
        _emit_json(payload)
        return 0 if expected else 1
    print(_algebra_line(A))
    print("nonzero products: [e1,e2] = e3, [e2,e1] = -e3")
    for label, tensor in (("B1", b1), ("B2", b2)):
        print(f"{label} nonzero values:")
        for i in range(3):
            for j in range(3):
                if any(tensor.t[i][j]):
                    print(f"  {label}(e{i + 1},e{j + 1}) = {format_element(tensor.t[i][j])}")
    print(f"B1 is a biderivation: {'yes' if b1_ok else 'NO'}")
    print(f"B2 is a biderivation: {'yes' if b2_ok else 'NO'}")
    print("B = rhd(B1,B2) on basis pairs (nonzero values only):")
    for i in range(3):
        for j in range(3):
            if any(bracket.t[i][j]):
                print(f"B(e{i + 1},e{j + 1}) = {format_element(bracket.t[i][j])}")
    print(f"B is a right biderivation: {'yes' if right_ok else 'NO'}")
    if left_witness is None:
        print("B is a left biderivation: yes (unexpected)")
    else:
        print("B is a left biderivation: no")
        w = left_witness
        print(f"left-condition witness at {triple_str(w.triple)}: "
              f"lhs = {format_element(w.lhs)}, rhs = {format_element(w.rhs)}, "
              f"residual = {format_element(w.residual)}")
    return 0 if expected else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="biderlie",
        description="Exact derivation/biderivation computations for structure-constant algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify the declared product identity")
    c.add_argument("algebra", help="algebra file or builtin name")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("der", help="dimension and canonical basis of the derivation algebra")
    d.add_argument("algebra", help="algebra file or builtin name")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_der)

    b = sub.add_parser("bider", help="dimension and canonical basis of a biderivation space")
    b.add_argument("algebra", help="algebra file or builtin name")
    b.add_argument("--side", choices=["right", "left", "both"], default="both")
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bider)

    br = sub.add_parser("bracket", help="bracket of two maps, printed in map-file format")
    br.add_argument("map1", help="map file")
    br.add_argument("map2", help="map file")
    br.add_argument("--op", choices=["rhd", "lhd"], required=True)
    br.add_argument("--algebra", required=True, help="algebra file or builtin name")
    br.add_argument("--json", action="store_true")
    br.set_defaults(func=cmd_bracket)

    v = sub.add_parser("verify", help="run every identity suite and print a pass/fail table")
    v.add_argument("algebra", help="algebra file or builtin name")
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--samples", type=int, default=25)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("example", help="reproduce the worked counterexample end to end")
    e.add_argument("name", help="example name (heisenberg)")
    e.add_argument("--json", action="store_true")
    e.set_defaults(func=cmd_example)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
