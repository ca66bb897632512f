"""Text, JSON and LaTeX renderings of tableaux, basis records and matrices."""
from __future__ import annotations

import json
from typing import IO, Iterable

from .core import HighestWeight, InputError, format_entry, parse_entry
from .tableaux import Tableau


def _ascii_entry(x: int) -> str:
    return str(x) if x > 0 else f"{-x}'"


def tableau_ascii(T: Tableau) -> str:
    """Rows separated by newlines, barred letters primed: ``1 2 2'``."""
    if not T.rows:
        return "(empty)"
    return "\n".join(" ".join(f"{_ascii_entry(x):>2}" for x in row) for row in T.rows)


def tableau_to_json(T: Tableau) -> dict:
    return {"n": T.n, "shape": list(T.shape), "rows": [[format_entry(x) for x in row] for row in T.rows]}


def tableau_from_json(obj: dict) -> Tableau:
    try:
        n = obj["n"]
        rows = tuple(tuple(parse_entry(s, n) for s in row) for row in obj["rows"])
    except (KeyError, TypeError) as exc:
        raise InputError(f"malformed tableau record {obj!r}") from exc
    T = Tableau(rows, n)
    if "shape" in obj and list(T.shape) != [x for x in obj["shape"] if x]:
        raise InputError(f"shape {obj['shape']} does not match rows {obj['rows']}")
    return T


def _latex_entry(x: int) -> str:
    return str(x) if x > 0 else rf"\overline{{{-x}}}"


def tableau_latex(T: Tableau) -> str:
    if not T.rows:
        return "\\begin{ytableau}\n\\none\n\\end{ytableau}"
    body = " \\\\\n".join(" & ".join(_latex_entry(x) for x in row) for row in T.rows)
    return f"\\begin{{ytableau}}\n{body}\n\\end{{ytableau}}"


def basis_record(a, hw: HighestWeight) -> dict:
    """One Verma basis element: tuple, monomial, tableau and weight."""
    from .verma import monomial_string, tuple_to_tableau, verma_weight

    return {
        "tuple": list(a),
        "monomial": monomial_string(a),
        "tableau": tableau_to_json(tuple_to_tableau(a, hw)),
        "weight": list(verma_weight(a, hw)),
    }


def certificate_json(records) -> list[dict]:
    return [
        {
            "tuple": list(r.tuple),
            "leading_tableau": tableau_to_json(r.leading_tableau),
            "leading_coeff": str(r.leading_coeff),
            "num_terms": r.num_terms,
        }
        for r in records
    ]


def write_coordinate_list(rows: list[dict[int, int]], ncols: int, out: IO[str]) -> None:
    """Header ``rows cols nnz`` then one ``row col value`` line per nonzero, 1-based."""
    nnz = sum(len(r) for r in rows)
    out.write(f"{len(rows)} {ncols} {nnz}\n")
    for i, row in enumerate(rows, 1):
        for j in sorted(row):
            out.write(f"{i} {j + 1} {row[j]}\n")


def read_coordinate_list(lines: Iterable[str]) -> tuple[int, int, list[dict[int, int]]]:
    it = iter(lines)
    nrows, ncols, nnz = map(int, next(it).split())
    rows: list[dict[int, int]] = [{} for _ in range(nrows)]
    count = 0
    for line in it:
        if line.strip():
            i, j, v = map(int, line.split())
            rows[i - 1][j - 1] = v
            count += 1
    if count != nnz:
        raise InputError(f"header promises {nnz} entries, found {count}")
    return nrows, ncols, rows


def dumps_records(records: list[dict]) -> str:
    return json.dumps(records, indent=1, ensure_ascii=False)
