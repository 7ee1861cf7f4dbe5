"""Exact symmetric-matrix linear algebra over GF(2^k).

A :class:`SymMatrix` is an immutable order-n symmetric matrix over a
:class:`~eprseq.gfield.FieldSpec`.  Entries are stored densely as field
elements; over GF(2) every operation additionally has a fast path that
packs each row into one Python int and eliminates with word XORs.

Index sets handed to the public operations are 1-based, matching the
usual B[alpha] notation for principal submatrices.  All operations are
pure; instances are safe to share between threads.
"""

from __future__ import annotations

import io
from typing import Iterable, TextIO

from .gfield import GF2, GF4, FieldSpec


class SingularMatrixError(ValueError):
    """An operation required a nonsingular (sub)matrix."""


class MatrixFormatError(ValueError):
    """Malformed matrix text; carries a 1-based line/column diagnostic."""

    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _index_set(indices: Iterable[int], n: int, what: str = "index set") -> tuple[int, ...]:
    """Normalize a 1-based index set: sorted, distinct, within [1, n]."""
    seen = []
    for i in indices:
        if not isinstance(i, int) or not 1 <= i <= n:
            raise IndexError(f"{what}: index {i!r} out of range 1..{n}")
        if i in seen:
            raise IndexError(f"{what}: duplicate index {i}")
        seen.append(i)
    return tuple(sorted(seen))


def complement_labels(n: int, alpha: Iterable[int]) -> tuple[int, ...]:
    """Original 1-based labels kept by a Schur complement on pivot set alpha.

    Position j of the complement corresponds to original index
    ``complement_labels(n, alpha)[j - 1]``; order is preserved.
    """
    a = set(_index_set(alpha, n, "alpha"))
    return tuple(i for i in range(1, n + 1) if i not in a)


# ---------------------------------------------------------------------------
# low-level determinant / elimination kernels
# ---------------------------------------------------------------------------

def _gf2_det(rows: list[int], k: int) -> int:
    """Determinant over GF(2) of k bit-packed rows (destructive)."""
    for c in range(k):
        bit = 1 << c
        p = -1
        for r in range(c, k):
            if rows[r] & bit:
                p = r
                break
        if p < 0:
            return 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
        prow = rows[c]
        for r in range(c + 1, k):
            if rows[r] & bit:
                rows[r] ^= prow
    return 1


def _gf2_rank(rows: list[int], k: int, ncols: int) -> int:
    rank = 0
    for c in range(ncols):
        bit = 1 << c
        p = -1
        for r in range(rank, k):
            if rows[r] & bit:
                p = r
                break
        if p < 0:
            continue
        rows[rank], rows[p] = rows[p], rows[rank]
        prow = rows[rank]
        for r in range(rank + 1, k):
            if rows[r] & bit:
                rows[r] ^= prow
        rank += 1
    return rank


def _generic_det(grid: list[list[int]], spec: FieldSpec) -> int:
    """Determinant of a square entry grid by elimination (destructive).

    Row swaps carry no sign change in characteristic 2.
    """
    k = len(grid)
    det = 1
    mul = spec.mul
    inv = spec.inv
    for c in range(k):
        p = -1
        for r in range(c, k):
            if grid[r][c]:
                p = r
                break
        if p < 0:
            return 0
        if p != c:
            grid[c], grid[p] = grid[p], grid[c]
        piv = grid[c][c]
        det = mul(det, piv)
        pinv = inv(piv)
        prow = grid[c]
        for r in range(c + 1, k):
            f = grid[r][c]
            if f:
                f = mul(f, pinv)
                row = grid[r]
                for j in range(c, k):
                    row[j] ^= mul(f, prow[j])
    return det


def _generic_rank(grid: list[list[int]], spec: FieldSpec) -> int:
    if not grid:
        return 0
    k = len(grid)
    ncols = len(grid[0])
    mul = spec.mul
    inv = spec.inv
    rank = 0
    for c in range(ncols):
        p = -1
        for r in range(rank, k):
            if grid[r][c]:
                p = r
                break
        if p < 0:
            continue
        grid[rank], grid[p] = grid[p], grid[rank]
        prow = grid[rank]
        pinv = inv(prow[c])
        for r in range(rank + 1, k):
            f = grid[r][c]
            if f:
                f = mul(f, pinv)
                row = grid[r]
                for j in range(c, ncols):
                    row[j] ^= mul(f, prow[j])
        rank += 1
    return rank


def _generic_inverse(grid: list[list[int]], spec: FieldSpec) -> list[list[int]]:
    """Gauss-Jordan inverse of a square entry grid (destructive)."""
    k = len(grid)
    mul = spec.mul
    inv = spec.inv
    aug = [row + [1 if i == j else 0 for j in range(k)] for i, row in enumerate(grid)]
    for c in range(k):
        p = -1
        for r in range(c, k):
            if aug[r][c]:
                p = r
                break
        if p < 0:
            raise SingularMatrixError("matrix is singular")
        if p != c:
            aug[c], aug[p] = aug[p], aug[c]
        pinv = inv(aug[c][c])
        aug[c] = [mul(pinv, x) for x in aug[c]]
        prow = aug[c]
        for r in range(k):
            if r != c and aug[r][c]:
                f = aug[r][c]
                row = aug[r]
                for j in range(c, 2 * k):
                    row[j] ^= mul(f, prow[j])
    return [row[k:] for row in aug]


# ---------------------------------------------------------------------------
# SymMatrix
# ---------------------------------------------------------------------------

class SymMatrix:
    """Immutable symmetric matrix over a small binary field."""

    __slots__ = ("spec", "n", "rows", "_bits")

    def __init__(self, spec: FieldSpec, rows: Iterable[Iterable[int]]):
        grid = tuple(tuple(row) for row in rows)
        n = len(grid)
        for i, row in enumerate(grid):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, x in enumerate(row):
                spec.validate(x)
                if j < i and grid[j][i] != x:
                    raise ValueError(
                        f"asymmetric entries at ({i + 1},{j + 1}) and ({j + 1},{i + 1})"
                    )
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", grid)
        object.__setattr__(self, "_bits", None)

    def __setattr__(self, name, value):  # pragma: no cover - guard
        raise AttributeError("SymMatrix is immutable")

    # -- basics ------------------------------------------------------------

    def entry(self, i: int, j: int) -> int:
        """Entry at 1-based position (i, j)."""
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise IndexError(f"entry ({i},{j}) out of range 1..{self.n}")
        return self.rows[i - 1][j - 1]

    def bit_rows(self) -> tuple[int, ...]:
        """GF(2) rows packed into ints; bit j of row i is the (i, j) entry."""
        if self.spec is not GF2 and self.spec.degree != 1:
            raise ValueError("bit_rows is defined for GF(2) matrices only")
        cached = object.__getattribute__(self, "_bits")
        if cached is None:
            cached = tuple(
                sum(bit << j for j, bit in enumerate(row)) for row in self.rows
            )
            object.__setattr__(self, "_bits", cached)
        return cached

    def has_zero_diagonal(self) -> bool:
        return any(self.rows[i][i] == 0 for i in range(self.n))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SymMatrix)
            and self.spec == other.spec
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.rows))

    def __repr__(self) -> str:
        return f"SymMatrix({self.spec.name}, {[list(r) for r in self.rows]})"

    # -- determinant / rank / inverse ---------------------------------------

    def determinant(self) -> int:
        """Exact determinant; the order-0 determinant is 1."""
        if self.spec.degree == 1:
            return self._det_via_bits()
        return self._det_via_elimination()

    def _det_via_bits(self) -> int:
        return _gf2_det(list(self.bit_rows()), self.n)

    def _det_via_elimination(self) -> int:
        return _generic_det([list(r) for r in self.rows], self.spec)

    def rank(self) -> int:
        if self.spec.degree == 1:
            return self._rank_via_bits()
        return self._rank_via_elimination()

    def _rank_via_bits(self) -> int:
        return _gf2_rank(list(self.bit_rows()), self.n, self.n)

    def _rank_via_elimination(self) -> int:
        return _generic_rank([list(r) for r in self.rows], self.spec)

    def inverse(self) -> "SymMatrix":
        """Inverse matrix; raises SingularMatrixError when det == 0."""
        inv = _generic_inverse([list(r) for r in self.rows], self.spec)
        return SymMatrix(self.spec, inv)

    # -- submatrices ---------------------------------------------------------

    def principal_submatrix(self, alpha: Iterable[int]) -> "SymMatrix":
        """B[alpha]: rows and columns restricted to the 1-based set alpha."""
        idx = _index_set(alpha, self.n, "alpha")
        rows = self.rows
        return SymMatrix(
            self.spec, [[rows[i - 1][j - 1] for j in idx] for i in idx]
        )

    def minor(self, row_set: Iterable[int], col_set: Iterable[int]) -> int:
        """Determinant of the (possibly non-principal) submatrix B[rows|cols]."""
        ri = _index_set(row_set, self.n, "rows")
        ci = _index_set(col_set, self.n, "cols")
        if len(ri) != len(ci):
            raise ValueError(f"minor needs |rows| == |cols|, got {len(ri)} and {len(ci)}")
        if self.spec.degree == 1:
            bits = self.bit_rows()
            sub = []
            for i in ri:
                r = bits[i - 1]
                x = 0
                for t, j in enumerate(ci):
                    x |= ((r >> (j - 1)) & 1) << t
                sub.append(x)
            return _gf2_det(sub, len(ri))
        grid = [[self.rows[i - 1][j - 1] for j in ci] for i in ri]
        return _generic_det(grid, self.spec)

    # -- derived matrices -----------------------------------------------------

    def schur_complement(self, alpha: Iterable[int]) -> "SymMatrix":
        """Schur complement of the principal block B[alpha].

        Returns B(alpha) - B[comp, alpha] B[alpha]^{-1} B[alpha, comp]
        (minus is plus in characteristic 2), an order n-|alpha| symmetric
        matrix whose positions are renumbered 1..n-|alpha| in the original
        order; recover labels with :func:`complement_labels`.
        """
        a = _index_set(alpha, self.n, "alpha")
        if not a:
            return self
        comp = complement_labels(self.n, a)
        block = [[self.rows[i - 1][j - 1] for j in a] for i in a]
        try:
            block_inv = _generic_inverse(block, self.spec)
        except SingularMatrixError:
            raise SingularMatrixError(
                f"pivot block at {set(a)} is singular"
            ) from None
        mul = self.spec.mul
        k = len(a)
        cross = [[self.rows[i - 1][j - 1] for j in a] for i in comp]
        # Y = cross @ block_inv
        y = [
            [
                _xor_sum(mul(cross[r][s], block_inv[s][t]) for s in range(k))
                for t in range(k)
            ]
            for r in range(len(comp))
        ]
        out = []
        for r, i in enumerate(comp):
            row = []
            for t, j in enumerate(comp):
                acc = self.rows[i - 1][j - 1]
                acc ^= _xor_sum(mul(y[r][s], cross[t][s]) for s in range(k))
                row.append(acc)
            out.append(row)
        return SymMatrix(self.spec, out)

    def direct_sum(self, other: "SymMatrix") -> "SymMatrix":
        if self.spec != other.spec:
            raise ValueError(
                f"direct sum needs matching fields, got {self.spec.name} and {other.spec.name}"
            )
        n, m = self.n, other.n
        rows = [list(r) + [0] * m for r in self.rows]
        rows += [[0] * n + list(r) for r in other.rows]
        return SymMatrix(self.spec, rows)

    def append_duplicate_last(self) -> "SymMatrix":
        """Copy the last row down and the last column across (order n+1)."""
        if self.n < 1:
            raise ValueError("append_duplicate_last needs order >= 1")
        last = self.rows[-1]
        rows = [list(r) + [r[-1]] for r in self.rows]
        rows.append(list(last) + [last[-1]])
        return SymMatrix(self.spec, rows)

    def append_zero(self) -> "SymMatrix":
        """Direct sum with the 1x1 zero matrix."""
        rows = [list(r) + [0] for r in self.rows]
        rows.append([0] * (self.n + 1))
        return SymMatrix(self.spec, rows)

    # -- text format -----------------------------------------------------------

    def to_text(self) -> str:
        """Serialize in the exchange format (gf2/gf4 only)::

            field gf2
            n 3
            0 1 1
            1 0 1
            1 1 0
        """
        if self.spec not in (GF2, GF4):
            raise ValueError(f"text format supports gf2 and gf4, not {self.spec.name}")
        sym = self.spec.to_symbol
        lines = [f"field {self.spec.name}", f"n {self.n}"]
        lines += [" ".join(sym(x) for x in row) for row in self.rows]
        return "\n".join(lines) + "\n"

    def write(self, stream: TextIO) -> None:
        stream.write(self.to_text())


def _xor_sum(values: Iterable[int]) -> int:
    acc = 0
    for v in values:
        acc ^= v
    return acc


def sym_from_entries(spec: FieldSpec, rows: Iterable[Iterable[int]]) -> SymMatrix:
    """Validated construction from an n x n element grid."""
    return SymMatrix(spec, rows)


def read_matrix(source: str | TextIO) -> SymMatrix:
    """Parse the exchange format; leading '#' comment lines are skipped.

    Anything else malformed raises MatrixFormatError with a 1-based
    line/column diagnostic.
    """
    stream = io.StringIO(source) if isinstance(source, str) else source
    lines = stream.read().split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    pos = 0
    while pos < len(lines) and lines[pos].startswith("#"):
        pos += 1
    if pos >= len(lines):
        raise MatrixFormatError(pos + 1, 1, "missing 'field' header")
    header = lines[pos].split(" ")
    if len(header) != 2 or header[0] != "field":
        raise MatrixFormatError(pos + 1, 1, "expected 'field gf2' or 'field gf4'")
    if header[1] == "gf2":
        spec = GF2
    elif header[1] == "gf4":
        spec = GF4
    else:
        raise MatrixFormatError(pos + 1, 7, f"unknown field {header[1]!r}")
    pos += 1
    if pos >= len(lines):
        raise MatrixFormatError(pos + 1, 1, "missing 'n' header")
    order_line = lines[pos].split(" ")
    if len(order_line) != 2 or order_line[0] != "n" or not order_line[1].isdigit():
        raise MatrixFormatError(pos + 1, 1, "expected 'n <order>'")
    n = int(order_line[1])
    pos += 1
    rows = []
    for r in range(n):
        if pos >= len(lines):
            raise MatrixFormatError(pos + 1, 1, f"missing matrix row {r + 1}")
        tokens = lines[pos].split(" ")
        if len(tokens) != n:
            raise MatrixFormatError(
                pos + 1, 1, f"row {r + 1} has {len(tokens)} entries, expected {n}"
            )
        row = []
        for c, tok in enumerate(tokens):
            try:
                row.append(spec.from_symbol(tok))
            except Exception:
                raise MatrixFormatError(
                    pos + 1, c + 1, f"bad element symbol {tok!r} for {spec.name}"
                ) from None
        rows.append(row)
        pos += 1
    if pos != len(lines):
        raise MatrixFormatError(pos + 1, 1, "trailing content after matrix rows")
    try:
        return SymMatrix(spec, rows)
    except ValueError as exc:
        raise MatrixFormatError(pos - n + 1, 1, str(exc)) from None


# ---------------------------------------------------------------------------
# named constructions
# ---------------------------------------------------------------------------

def identity(n: int, spec: FieldSpec = GF2) -> SymMatrix:
    return SymMatrix(spec, [[1 if i == j else 0 for j in range(n)] for i in range(n)])


def zeros(n: int, spec: FieldSpec = GF2) -> SymMatrix:
    return SymMatrix(spec, [[0] * n for _ in range(n)])


def ones(n: int, spec: FieldSpec = GF2) -> SymMatrix:
    """The all-ones matrix J_n."""
    return SymMatrix(spec, [[1] * n for _ in range(n)])


def complete_graph(n: int, spec: FieldSpec = GF2) -> SymMatrix:
    """Adjacency matrix of the complete graph K_n (J_n minus the diagonal)."""
    return SymMatrix(spec, [[0 if i == j else 1 for j in range(n)] for i in range(n)])


def loop_split_graph(n: int, k: int) -> SymMatrix:
    """Adjacency of the complete split graph with loops on the independent side.

    Vertices 1..k are pairwise non-adjacent and each carries a loop;
    vertices k+1..n form a clique without loops; every cross edge is
    present.  k == n gives the identity, k == 0 the complete graph.
    """
    if not 0 <= k <= n:
        raise ValueError(f"loop_split_graph needs 0 <= k <= n, got k={k}, n={n}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(1 if i < k else 0)
            elif i < k and j < k:
                row.append(0)
            else:
                row.append(1)
        rows.append(row)
    return SymMatrix(GF2, rows)


def loop_complete_graph(n: int) -> SymMatrix:
    """Complete graph K_n with one loop added at vertex 1 (n >= 2)."""
    if n < 2:
        raise ValueError(f"loop_complete_graph needs n >= 2, got {n}")
    rows = [[0 if i == j else 1 for j in range(n)] for i in range(n)]
    rows[0][0] = 1
    return SymMatrix(GF2, rows)


def pendant_loop_complete(n: int) -> SymMatrix:
    """A looped pendant vertex attached to the loop vertex of a looped K_{n-1}.

    Row 1 is (1, 1, 0, ..., 0); the trailing block is
    loop_complete_graph(n - 1).  Defined for n >= 3.
    """
    if n < 3:
        raise ValueError(f"pendant_loop_complete needs n >= 3, got {n}")
    core = loop_complete_graph(n - 1).rows
    rows = [[1, 1] + [0] * (n - 2)]
    for i in range(n - 1):
        rows.append([1 if i == 0 else 0] + list(core[i]))
    return SymMatrix(GF2, rows)


def perfect_matching(n: int) -> SymMatrix:
    """Adjacency of a perfect matching on n vertices (n even >= 2)."""
    if n < 2 or n % 2:
        raise ValueError(f"perfect_matching needs even n >= 2, got {n}")
    rows = [[0] * n for _ in range(n)]
    for i in range(0, n, 2):
        rows[i][i + 1] = rows[i + 1][i] = 1
    return SymMatrix(GF2, rows)


def coned_matching(n: int) -> SymMatrix:
    """Perfect matching on n-1 vertices joined to one loopless apex (n odd >= 3)."""
    if n < 3 or n % 2 == 0:
        raise ValueError(f"coned_matching needs odd n >= 3, got {n}")
    core = perfect_matching(n - 1).rows
    rows = [list(r) + [1] for r in core]
    rows.append([1] * (n - 1) + [0])
    return SymMatrix(GF2, rows)


def loop_biclique(a: int, b: int) -> SymMatrix:
    """Complete bipartite graph K_{a,b} with a loop on every vertex."""
    if a < 1 or b < 1:
        raise ValueError(f"loop_biclique needs a, b >= 1, got {a}, {b}")
    n = a + b
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(1)
            else:
                row.append(1 if (i < a) != (j < a) else 0)
        rows.append(row)
    return SymMatrix(GF2, rows)


def clique_matching(n: int) -> SymMatrix:
    """Looped clique on n/2 vertices matched to a looped independent set.

    Block form [[J, I], [I, I]] with half-order blocks; defined for
    n == 2 (mod 4), n >= 6.
    """
    if n < 6 or n % 4 != 2:
        raise ValueError(f"clique_matching needs n == 2 (mod 4), n >= 6, got {n}")
    m = n // 2
    rows = []
    for i in range(m):
        rows.append([1] * m + [1 if j == i else 0 for j in range(m)])
    for i in range(m):
        rows.append([1 if j == i else 0 for j in range(m)] + [1 if j == i else 0 for j in range(m)])
    return SymMatrix(GF2, rows)


def wide_clique_matching(n: int) -> SymMatrix:
    """Variant of clique_matching with a wider independent side.

    Block form [[J, W], [W^T, I]] where the clique has n/2 - 1 vertices,
    the looped independent set n/2 + 1, and W = [I | J(:, 2)]; defined
    for n == 0 (mod 4), n >= 8.
    """
    if n < 8 or n % 4 != 0:
        raise ValueError(f"wide_clique_matching needs n == 0 (mod 4), n >= 8, got {n}")
    m = n // 2
    a = m - 1
    b = m + 1
    w = [[1 if (j == i or j >= a) else 0 for j in range(b)] for i in range(a)]
    rows = []
    for i in range(a):
        rows.append([1] * a + w[i])
    for j in range(b):
        rows.append([w[i][j] for i in range(a)] + [1 if t == j else 0 for t in range(b)])
    return SymMatrix(GF2, rows)


_NAMED = {
    "identity": (identity, 1),
    "zeros": (zeros, 1),
    "ones": (ones, 1),
    "complete_graph": (complete_graph, 1),
    "loop_split_graph": (loop_split_graph, 2),
    "loop_complete_graph": (loop_complete_graph, 1),
    "pendant_loop_complete": (pendant_loop_complete, 1),
    "perfect_matching": (perfect_matching, 1),
    "coned_matching": (coned_matching, 1),
    "loop_biclique": (loop_biclique, 2),
    "clique_matching": (clique_matching, 1),
    "wide_clique_matching": (wide_clique_matching, 1),
}


def construct_named(kind: str, params: Iterable[int], spec: FieldSpec = GF2) -> SymMatrix:
    """Dispatch constructor for the named matrices.

    Only identity/zeros/ones/complete_graph accept a non-GF(2) spec; the
    witness constructions are GF(2) by definition.
    """
    if kind not in _NAMED:
        raise ValueError(f"unknown construction {kind!r}; choose from {sorted(_NAMED)}")
    fn, arity = _NAMED[kind]
    args = list(params)
    if len(args) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(args)}")
    if kind in ("identity", "zeros", "ones", "complete_graph"):
        return fn(*args, spec)
    if spec is not GF2:
        raise ValueError(f"{kind} is a GF(2) construction")
    return fn(*args)
