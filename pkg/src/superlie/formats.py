"""Plain-text file formats for algebras, matrices and derivation subspaces.

Three line-oriented formats share one lexical layer: ``#`` starts a comment,
blank lines are skipped, fields are whitespace-separated, and every rational
is written as an integer or ``p/q`` with no decimal notation.  Errors carry
the file path and 1-based line number of the offending line.

Algebra files present a Lie superalgebra by structure constants::

    algebra sl2
    dim 3 0
    label 1 h
    bracket 1 2 2 2        # [x1, x2] = 2 x2

Matrix files hold one square rational matrix (``matrix <d>`` then d rows).
Subspace files describe a graded subspace of the derivation algebra of
L tensor Sym(n) by directives ``sym``, ``basis``, ``inner``, ``full`` and
``element``; see :func:`parse_subspace`.

Arguments starting with ``@`` name bundled fixtures in the package data
directory, e.g. ``@sl2`` for the packaged sl2 algebra file.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .derivations import TensorDerAlgebra, adjoint_derivations, tensor_der
from .liealg import LieSuperAlgebra, Subspace
from .linalg import unit_vec, zero_vec


class FormatError(ValueError):
    """Malformed input file; str() renders as ``path:line: message``."""

    def __init__(self, path: str, line: int, message: str):
        super().__init__(f"{path}:{line}: {message}")
        self.path = path
        self.line = line
        self.message = message


_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(token: str) -> Fraction:
    """Strict rational syntax: an integer or p/q; no decimals, no spaces."""
    if not _RATIONAL.match(token):
        raise ValueError(f"not a rational: {token!r} (write an integer or p/q)")
    num, _, den = token.partition("/")
    if den:
        if int(den) == 0:
            raise ValueError(f"zero denominator in {token!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(num))


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def _logical_lines(text: str):
    """Yield (lineno, fields) for each non-blank, non-comment line."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


# -- algebra files -------------------------------------------------------------


def parse_algebra(text: str, path: str = "<string>") -> LieSuperAlgebra:
    """Parse an algebra file into a LieSuperAlgebra.

    Indices in the file are 1-based.  Duplicate (i, j, k) entries and parity
    violations are reported with their line number; omitted entries are zero.
    """
    name = None
    m = n = None
    labels: dict[int, str] = {}
    brackets: dict[tuple[int, int], dict[int, Fraction]] = {}
    seen: set[tuple[int, int, int]] = set()
    last_line = 0

    def err(lineno: int, message: str) -> FormatError:
        return FormatError(path, lineno, message)

    def want_int(lineno: int, token: str, what: str) -> int:
        try:
            return int(token)
        except ValueError:
            raise err(lineno, f"{what} must be an integer, got {token!r}") from None

    for lineno, fields in _logical_lines(text):
        last_line = lineno
        kind = fields[0]
        if kind == "algebra":
            if name is not None:
                raise err(lineno, "second algebra line")
            if len(fields) != 2:
                raise err(lineno, "expected: algebra <name>")
            name = fields[1]
        elif kind == "dim":
            if name is None:
                raise err(lineno, "dim before the algebra line")
            if m is not None:
                raise err(lineno, "second dim line")
            if len(fields) != 3:
                raise err(lineno, "expected: dim <even> <odd>")
            m = want_int(lineno, fields[1], "even dimension")
            n = want_int(lineno, fields[2], "odd dimension")
            if m < 0 or n < 0:
                raise err(lineno, "dimensions must be nonnegative")
        elif kind == "label":
            if m is None:
                raise err(lineno, "label before the dim line")
            if len(fields) < 3:
                raise err(lineno, "expected: label <index> <text>")
            i = want_int(lineno, fields[1], "label index")
            if not 1 <= i <= m + n:
                raise err(lineno, f"label index {i} out of range 1..{m + n}")
            if i in labels:
                raise err(lineno, f"duplicate label for index {i}")
            labels[i] = " ".join(fields[2:])
        elif kind == "bracket":
            if m is None:
                raise err(lineno, "bracket before the dim line")
            if len(fields) != 5:
                raise err(lineno, "expected: bracket <i> <j> <k> <value>")
            i = want_int(lineno, fields[1], "index i")
            j = want_int(lineno, fields[2], "index j")
            k = want_int(lineno, fields[3], "index k")
            d = m + n
            for t in (i, j, k):
                if not 1 <= t <= d:
                    raise err(lineno, f"index {t} out of range 1..{d}")
            if (i, j, k) in seen:
                raise err(lineno, f"duplicate entry for ({i}, {j}, {k})")
            seen.add((i, j, k))
            try:
                value = parse_rational(fields[4])
            except ValueError as e:
                raise err(lineno, str(e)) from None
            par = (lambda t: 0 if t <= m else 1)
            if (par(i) + par(j) - par(k)) % 2:
                raise err(lineno, f"entry ({i}, {j}, {k}) violates parity "
                                  "homogeneity")
            if value:
                brackets.setdefault((i - 1, j - 1), {})[k - 1] = value
        else:
            raise err(lineno, f"unknown directive {kind!r}")

    if name is None:
        raise err(last_line or 1, "missing algebra line")
    if m is None:
        raise err(last_line or 1, "missing dim line")
    label_list = [labels.get(i + 1, f"x{i + 1}") for i in range(m + n)]
    return LieSuperAlgebra(m, n, brackets, label_list, name=name)


def serialize_algebra(L: LieSuperAlgebra) -> str:
    name = L.name or "unnamed"
    name = "-".join(name.split())
    lines = [f"algebra {name}", f"dim {L.m} {L.n}"]
    for i, label in enumerate(L.labels):
        if label != f"x{i + 1}":
            lines.append(f"label {i + 1} {label}")
    entries = sorted((i, j, k, v)
                     for (i, j), row in L.c.items() for k, v in row.items())
    for i, j, k, v in entries:
        lines.append(f"bracket {i + 1} {j + 1} {k + 1} {format_rational(v)}")
    return "\n".join(lines) + "\n"


# -- matrix files ----------------------------------------------------------------


def parse_matrix(text: str, path: str = "<string>") -> list[list[Fraction]]:
    """Parse a square rational matrix: ``matrix <d>`` then d rows of d values."""
    d = None
    rows: list[list[Fraction]] = []
    last_line = 0
    for lineno, fields in _logical_lines(text):
        last_line = lineno
        if d is None:
            if fields[0] != "matrix" or len(fields) != 2:
                raise FormatError(path, lineno, "expected: matrix <size>")
            try:
                d = int(fields[1])
            except ValueError:
                raise FormatError(path, lineno, "matrix size must be an "
                                                "integer") from None
            if d <= 0:
                raise FormatError(path, lineno, "matrix size must be positive")
            continue
        if len(rows) == d:
            raise FormatError(path, lineno, f"more than {d} rows")
        if len(fields) != d:
            raise FormatError(path, lineno,
                              f"expected {d} entries, got {len(fields)}")
        try:
            rows.append([parse_rational(t) for t in fields])
        except ValueError as e:
            raise FormatError(path, lineno, str(e)) from None
    if d is None:
        raise FormatError(path, last_line or 1, "missing matrix line")
    if len(rows) != d:
        raise FormatError(path, last_line or 1,
                          f"expected {d} rows, got {len(rows)}")
    return rows


def serialize_matrix(rows) -> str:
    lines = [f"matrix {len(rows)}"]
    for row in rows:
        lines.append(" ".join(format_rational(x) for x in row))
    return "\n".join(lines) + "\n"


# -- subspace files ---------------------------------------------------------------

_ATOM = re.compile(r"^([dz])(\d+)$")

# one element term: coefficient, derivative index i, monomial bitmask
Term = tuple[Fraction, int, int]


@dataclass
class SubspaceSpec:
    """A subspace of Der(L tensor Sym(n)) described by directives.

    ``elements`` holds combinations of the operators ((.) d_i) z_S written
    in the file as sums of ``[coeff] d<i> [z<j> ...]`` terms.
    """

    nodd: int
    basis_kind: str = "derivations"
    include_inner: bool = False
    include_full: bool = False
    elements: list[list[Term]] = field(default_factory=list)


def parse_subspace(text: str, path: str = "<string>") -> SubspaceSpec:
    """Parse a subspace file.

    Directives, one per line:

    - ``sym <n>``: required first; the odd tensor factor is Sym(n).
    - ``basis derivations|adjoint``: span derivations of L by the full
      derivation space (default) or by adjoint operators only.
    - ``inner``: include the adjoint image of L tensor Sym(n).
    - ``full``: include the whole derivation algebra.
    - ``element <term> [+|- <term> ...]``: include one operator; each term
      is an optional rational coefficient, then ``d<i>``, then ``z<j>``
      factors, naming x -> ((x) d_i) z_j... .
    """
    spec: SubspaceSpec | None = None
    last_line = 0
    for lineno, fields in _logical_lines(text):
        last_line = lineno
        kind = fields[0]
        if kind == "sym":
            if spec is not None:
                raise FormatError(path, lineno, "second sym line")
            if len(fields) != 2:
                raise FormatError(path, lineno, "expected: sym <n>")
            try:
                nodd = int(fields[1])
            except ValueError:
                raise FormatError(path, lineno,
                                  "sym count must be an integer") from None
            if nodd < 0:
                raise FormatError(path, lineno, "sym count must be nonnegative")
            spec = SubspaceSpec(nodd)
            continue
        if spec is None:
            raise FormatError(path, lineno, "first directive must be sym <n>")
        if kind == "basis":
            if len(fields) != 2 or fields[1] not in ("derivations", "adjoint"):
                raise FormatError(path, lineno,
                                  "expected: basis derivations|adjoint")
            spec.basis_kind = fields[1]
        elif kind == "inner":
            if len(fields) != 1:
                raise FormatError(path, lineno, "inner takes no arguments")
            spec.include_inner = True
        elif kind == "full":
            if len(fields) != 1:
                raise FormatError(path, lineno, "full takes no arguments")
            spec.include_full = True
        elif kind == "element":
            spec.elements.append(_parse_element(fields[1:], spec.nodd,
                                                path, lineno))
        else:
            raise FormatError(path, lineno, f"unknown directive {kind!r}")
    if spec is None:
        raise FormatError(path, last_line or 1, "missing sym line")
    return spec


def _parse_element(tokens: list[str], nodd: int, path: str,
                   lineno: int) -> list[Term]:
    def err(message: str) -> FormatError:
        return FormatError(path, lineno, message)

    if not tokens:
        raise err("empty element")
    terms: list[Term] = []
    sign = 1
    pos = 0
    while pos < len(tokens):
        if terms:
            if tokens[pos] not in ("+", "-"):
                raise err(f"expected + or - between terms, got {tokens[pos]!r}")
            sign = 1 if tokens[pos] == "+" else -1
            pos += 1
        elif tokens[pos] == "-":
            sign = -1
            pos += 1
        if pos >= len(tokens):
            raise err("dangling sign at end of element")
        coeff = Fraction(sign)
        if _RATIONAL.match(tokens[pos]):
            coeff *= parse_rational(tokens[pos])
            pos += 1
        if pos >= len(tokens):
            raise err("coefficient without an operator")
        hit = _ATOM.match(tokens[pos])
        if not hit or hit.group(1) != "d":
            raise err(f"expected a derivative d<i>, got {tokens[pos]!r}")
        i = int(hit.group(2))
        if not 1 <= i <= nodd:
            raise err(f"derivative index {i} out of range 1..{nodd}")
        pos += 1
        smask = 0
        while pos < len(tokens):
            hit = _ATOM.match(tokens[pos])
            if not hit or hit.group(1) != "z":
                break
            j = int(hit.group(2))
            if not 1 <= j <= nodd:
                raise err(f"generator index {j} out of range 1..{nodd}")
            bit = 1 << (j - 1)
            if smask & bit:
                raise err(f"repeated generator z{j} in one term")
            smask |= bit
            pos += 1
        terms.append((coeff, i, smask))
    return terms


def realize_subspace(L: LieSuperAlgebra,
                     spec: SubspaceSpec) -> tuple[TensorDerAlgebra, Subspace]:
    """Materialize a SubspaceSpec over L as a graded coordinate subspace."""
    der_basis = adjoint_derivations(L) if spec.basis_kind == "adjoint" else None
    tda = tensor_der(L, spec.nodd, der_basis=der_basis)
    dim = tda.algebra.dim
    vectors: list[list[Fraction]] = []
    if spec.include_full:
        vectors.extend(unit_vec(dim, t) for t in range(dim))
    if spec.include_inner:
        vectors.extend(tda.inner_coords(i, smask)
                       for i in range(L.dim)
                       for smask in range(1 << spec.nodd))
    for element in spec.elements:
        v = zero_vec(dim)
        for coeff, i, smask in element:
            v[tda.sym_index(i, smask)] += coeff
        vectors.append(v)
    return tda, Subspace.from_vectors(tda.algebra.parities, vectors)


# -- bundled fixtures ----------------------------------------------------------------


def data_text(filename: str) -> str:
    """Read one bundled data file by filename."""
    ref = resources.files("superlie").joinpath("data", filename)
    if not ref.is_file():
        raise FileNotFoundError(f"no bundled file named {filename!r}")
    return ref.read_text(encoding="utf-8")


def list_data() -> list[str]:
    ref = resources.files("superlie").joinpath("data")
    return sorted(entry.name for entry in ref.iterdir() if entry.is_file())


def resolve_input(arg: str, suffix: str) -> tuple[str, str]:
    """Return (display name, text) for a file argument.

    ``@name`` reads the bundled fixture ``name`` (the suffix may be
    omitted); anything else is a filesystem path.
    """
    if arg.startswith("@"):
        stem = arg[1:]
        for candidate in (stem, stem + suffix):
            try:
                return f"@{candidate}", data_text(candidate)
            except FileNotFoundError:
                continue
        raise FileNotFoundError(
            f"no bundled file {stem!r} (available: {', '.join(list_data())})")
    with open(arg, encoding="utf-8") as handle:
        return arg, handle.read()


def load_algebra(arg: str) -> LieSuperAlgebra:
    path, text = resolve_input(arg, ".alg")
    return parse_algebra(text, path)


def load_matrix(arg: str) -> list[list[Fraction]]:
    path, text = resolve_input(arg, ".mat")
    return parse_matrix(text, path)


def load_subspace(arg: str) -> SubspaceSpec:
    path, text = resolve_input(arg, ".sub")
    return parse_subspace(text, path)
