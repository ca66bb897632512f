"""Command line front end: ``sp4-verma {tableaux,basis,verify,matrix}``.

Exit codes: 0 success, 1 a mathematical check failed, 2 usage error,
3 the state budget refused the request.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from contextlib import nullcontext

from .core import BudgetExceeded, ConsistencyError, HighestWeight, VerificationError
from .io import (
    basis_record,
    dumps_records,
    tableau_ascii,
    tableau_latex,
    tableau_to_json,
    write_coordinate_list,
)
from .tableaux import enumerate_kn4, tableau_weight
from .tensor import (
    check_budget,
    check_triangular,
    dim_W,
    independence_rank,
    relation_check,
    state_budget,
    verma_matrix,
    verma_vectors,
    weight_compatible,
)
from .verma import enumerate_tuples, monomial_string, tableau_to_tuple, tuple_to_tableau, verma_weight
from .weyl import weyl_dim

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

# full-basis commutator check only up to this dim W
RELATION_BASIS_LIMIT = 5000


def _nonneg(s: str) -> int:
    v = int(s)
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {s}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--m1", type=_nonneg, required=True, help="multiplicity of omega_1")
    common.add_argument("--m2", type=_nonneg, required=True, help="multiplicity of omega_2")
    common.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")

    p = argparse.ArgumentParser(prog="sp4-verma", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    t = sub.add_parser("tableaux", parents=[common], help="list KN tableaux, largest first")
    t.add_argument("--format", choices=("ascii", "json", "latex"), default="ascii")

    b = sub.add_parser("basis", parents=[common], help="list Verma basis records")
    b.add_argument("--format", choices=("ascii", "json", "latex"), default="json")

    v = sub.add_parser("verify", parents=[common], help="run every check and print a table")
    v.add_argument("--budget", type=_nonneg, default=None, help="maximum dim W (default 10^7 or $SYMP_VERMA_BUDGET)")
    v.add_argument("--skip-rank", action="store_true", help="skip the exact rank computation")

    m = sub.add_parser("matrix", parents=[common], help="export the Verma vectors as a coordinate list")
    m.add_argument("--budget", type=_nonneg, default=None)
    return p


def render_tableaux(hw: HighestWeight, fmt: str) -> str:
    tabs = enumerate_kn4(hw)
    if fmt == "json":
        return json.dumps([tableau_to_json(T) for T in tabs], indent=1) + "\n"
    if fmt == "latex":
        return "\n\n".join(tableau_latex(T) for T in tabs) + "\n"
    return "\n\n".join(tableau_ascii(T) for T in tabs) + "\n"


def render_basis(hw: HighestWeight, fmt: str) -> str:
    tuples = enumerate_tuples(hw)
    if fmt == "json":
        return dumps_records([basis_record(a, hw) for a in tuples]) + "\n"
    chunks = []
    for a in tuples:
        T = tuple_to_tableau(a, hw)
        if fmt == "latex":
            mono = monomial_string(a).replace(" ", "").replace("v", "v_\\lambda")
            chunks.append(f"% {tuple(a)}\n${mono}$\n{tableau_latex(T)}")
        else:
            c1, c2 = verma_weight(a, hw)
            chunks.append(f"{tuple(a)}  {monomial_string(a)}  wt=({c1}, {c2})\n{tableau_ascii(T)}")
    return "\n\n".join(chunks) + "\n"


def run_verify(hw: HighestWeight, budget: int | None, skip_rank: bool, out) -> int:
    """Run the whole pipeline; returns an exit code."""
    budget = state_budget() if budget is None else budget
    try:
        check_budget(hw, budget)
    except BudgetExceeded as exc:
        out.write(f"refused: {exc}\n")
        return EXIT_BUDGET

    results: list[tuple[str, bool, str]] = []

    def record(name, fn):
        try:
            ok, detail = fn()
        except (VerificationError, ConsistencyError) as exc:
            ok, detail = False, str(exc)
        results.append((name, ok, detail))

    tuples = enumerate_tuples(hw)
    tabs = enumerate_kn4(hw)
    dim = weyl_dim(*hw.partition)

    record("counts", lambda: (len(tuples) == len(tabs) == dim, f"|F|={len(tuples)} |KN|={len(tabs)} weyl={dim}"))

    def bijection():
        images = [tuple_to_tableau(a, hw) for a in tuples]
        back = all(tableau_to_tuple(T) == a for a, T in zip(tuples, images))
        onto = set(images) == set(tabs) and len(set(images)) == len(images)
        return back and onto, "round trip and image = KN set"

    record("bijection", bijection)
    record(
        "weights",
        lambda: (all(verma_weight(a, hw) == tableau_weight(tuple_to_tableau(a, hw)) for a in tuples), "wt(f^a v) = wt(T(a))"),
    )

    vectors = list(verma_vectors(hw, budget))
    record("h-eigenvalues", lambda: (all(weight_compatible(a, hw, v) for a, v in vectors), "h1, h2 act by the predicted weight"))

    def triangular():
        recs = check_triangular(hw, vectors=vectors)
        return True, f"{len(recs)} leading terms = c * u(T(a))"

    record("triangular", triangular)
    if not skip_rank:
        record("rank", lambda: ((r := independence_rank(hw, vectors=vectors)) == dim, f"rank={r} dim={dim}"))

    if dim_W(hw) <= RELATION_BASIS_LIMIT:
        record("relations", lambda: (relation_check(hw, budget), f"all {dim_W(hw)} pure tensors"))
    else:
        # the action on W is a derivation, so the relations reduce to V and wedge^2 V
        record("relations", lambda: (relation_check(HighestWeight(1, 1)), "on V (x) wedge^2 V (W too large)"))

    width = max(len(n) for n, _, _ in results)
    out.write(f"sp4 verify m1={hw.m1} m2={hw.m2}  dim W={dim_W(hw)}\n")
    for name, ok, detail in results:
        out.write(f"{'PASS' if ok else 'FAIL'}  {name:<{width}}  {detail}\n")
    return EXIT_OK if all(ok for _, ok, _ in results) else EXIT_FAIL


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    hw = HighestWeight(args.m1, args.m2)

    buf = io.StringIO()
    code = EXIT_OK
    try:
        if args.command == "tableaux":
            buf.write(render_tableaux(hw, args.format))
        elif args.command == "basis":
            buf.write(render_basis(hw, args.format))
        elif args.command == "verify":
            code = run_verify(hw, args.budget, args.skip_rank, buf)
        elif args.command == "matrix":
            rows = verma_matrix(hw, args.budget)
            write_coordinate_list(rows, dim_W(hw), buf)
    except BudgetExceeded as exc:
        sys.stderr.write(f"refused: {exc}\n")
        return EXIT_BUDGET

    with (open(args.out, "w", encoding="utf-8", newline="\n") if args.out else nullcontext(sys.stdout)) as fh:
        fh.write(buf.getvalue())
    return code


if __name__ == "__main__":
    sys.exit(main())
