"""Plain-text formats for matrices, divide combinatorics, polynomials and inertia.

Blank lines and lines starting with ``#`` are ignored by every parser.
"""

from __future__ import annotations

from plumb.forms import DivideCombinatorics
from plumb.linalg import Inertia
from plumb.polynomials import Poly


class FormatError(ValueError):
    pass


def _lines(text: str) -> list[str]:
    out = []
    for ln in text.splitlines():
        ln = ln.strip()
        if ln and not ln.startswith("#"):
            out.append(ln)
    return out


def _ints(line: str, lineno: int) -> list[int]:
    try:
        return [int(x) for x in line.split()]
    except ValueError:
        raise FormatError(f"line {lineno}: expected integers, got {line!r}") from None


def parse_matrix(text: str) -> list[list[int]]:
    """First line the dimension d, then d rows of d integers."""
    lines = _lines(text)
    if not lines:
        raise FormatError("empty matrix file")
    head = _ints(lines[0], 1)
    if len(head) != 1 or head[0] < 0:
        raise FormatError(f"line 1: expected a dimension, got {lines[0]!r}")
    d = head[0]
    rows = [_ints(ln, k + 2) for k, ln in enumerate(lines[1:])]
    if len(rows) != d:
        raise FormatError(f"expected {d} rows, found {len(rows)}")
    for k, r in enumerate(rows):
        if len(r) != d:
            raise FormatError(f"row {k} has {len(r)} entries, expected {d}")
    return rows


def format_matrix(m) -> str:
    rows = m.tolist() if hasattr(m, "tolist") else [list(r) for r in m]
    return "\n".join([str(len(rows))] + [" ".join(str(int(x)) for x in r) for r in rows]) + "\n"


def parse_divide(text: str) -> DivideCombinatorics:
    """Sections ``dp <d>`` and ``faces <f>``, then ``ff i j n`` and ``df k j n`` lines."""
    d = f = None
    ff: dict = {}
    df: dict = {}
    for k, ln in enumerate(_lines(text), 1):
        word, *rest = ln.split()
        nums = _ints(" ".join(rest), k)
        if word in ("dp", "faces"):
            if len(nums) != 1:
                raise FormatError(f"line {k}: {word} takes one count")
            if word == "dp":
                d = nums[0]
            else:
                f = nums[0]
        elif word in ("ff", "df"):
            if len(nums) != 3:
                raise FormatError(f"line {k}: {word} takes three integers")
            i, j, n = nums
            target = ff if word == "ff" else df
            if (i, j) in target:
                raise FormatError(f"line {k}: pair ({i}, {j}) declared twice")
            target[(i, j)] = n
        else:
            raise FormatError(f"line {k}: unknown keyword {word!r}")
    if d is None or f is None:
        raise FormatError("divide file needs both 'dp' and 'faces' lines")
    return DivideCombinatorics(d, f, face_face=ff, dp_face=df)


def format_divide(dc: DivideCombinatorics) -> str:
    lines = [f"dp {dc.double_points}", f"faces {dc.inner_faces}"]
    lines += [f"ff {i} {j} {n}" for (i, j), n in sorted(dc.face_face.items())]
    lines += [f"df {k} {j} {n}" for (k, j), n in sorted(dc.dp_face.items())]
    return "\n".join(lines) + "\n"


def format_poly(p: Poly) -> str:
    return p.to_text()


def parse_poly(text: str) -> Poly:
    return Poly.from_text(text)


def format_inertia(i: Inertia) -> str:
    return str(i)
