"""Principal rank characteristic sequences.

For an order-n symmetric matrix B the epr-sequence is the word
``l_1 l_2 ... l_n`` over {A, S, N} where letter k records whether all,
some-but-not-all, or none of the order-k principal minors of B are
nonzero.  The pr-sequence ``r_0]r_1...r_n`` keeps one bit per order
(r_k = 1 iff some order-k principal minor is nonzero) plus the flag
r_0 = 1 iff B has a zero diagonal entry.

Computing either sequence enumerates all 2^n - 1 nonempty principal
index subsets, so the cost grows as 2^n determinants; a guardrail
rejects orders above DEFAULT_MAX_ORDER unless lifted explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .matrix import SymMatrix, _generic_det, _gf2_det

EPR_LETTERS = "ASN"
DEFAULT_MAX_ORDER = 24


class OrderLimitError(ValueError):
    """Direct sequence computation refused above the order guardrail."""


def parse_epr(text: str) -> str:
    """Strict parse of an epr word such as "NSNA"."""
    if not isinstance(text, str) or not text:
        raise ValueError("epr-sequence must be a nonempty string")
    for i, ch in enumerate(text):
        if ch not in EPR_LETTERS:
            raise ValueError(f"epr-sequence letter {i + 1} is {ch!r}, expected A, S or N")
    return text


@dataclass(frozen=True)
class PrSequence:
    """r0 flag plus the bit word r_1 ... r_n, rendered as "r0]bits"."""

    r0: int
    bits: str

    def __post_init__(self):
        if self.r0 not in (0, 1):
            raise ValueError(f"r0 must be 0 or 1, got {self.r0!r}")
        if not self.bits or any(b not in "01" for b in self.bits):
            raise ValueError(f"pr bits must be a nonempty 0/1 word, got {self.bits!r}")

    @property
    def order(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return f"{self.r0}]{self.bits}"


def parse_pr(text: str) -> PrSequence:
    """Strict parse of "r0]bits" such as "1]010"."""
    if not isinstance(text, str) or "]" not in text:
        raise ValueError(f"pr-sequence must look like '1]010', got {text!r}")
    head, _, tail = text.partition("]")
    if head not in ("0", "1"):
        raise ValueError(f"pr-sequence r0 must be 0 or 1, got {head!r}")
    return PrSequence(int(head), tail)


def pr_of_epr(epr: str, zero_diag: int | bool) -> PrSequence:
    """Associated pr-sequence: r_k = 0 iff letter k is N; r_0 as given."""
    word = parse_epr(epr)
    bits = "".join("0" if ch == "N" else "1" for ch in word)
    return PrSequence(1 if zero_diag else 0, bits)


def _check_order(m: SymMatrix, max_order: int | None) -> int:
    if m.n < 1:
        raise ValueError("sequences are defined for order >= 1")
    if max_order is not None and m.n > max_order:
        raise OrderLimitError(
            f"order {m.n} exceeds the guardrail {max_order} "
            "(cost grows as 2^n determinants); pass max_order=None to override"
        )
    return m.n


def _subset_dets(m: SymMatrix):
    """Return a mask -> determinant callable for principal submatrices."""
    if m.spec.degree == 1:
        bits = m.bit_rows()

        def det(mask: int) -> int:
            idx = []
            w = mask
            while w:
                low = w & -w
                idx.append(low.bit_length() - 1)
                w ^= low
            sub = []
            for i in idx:
                r = bits[i]
                x = 0
                for t, j in enumerate(idx):
                    x |= ((r >> j) & 1) << t
                sub.append(x)
            return _gf2_det(sub, len(idx))

        return det

    rows = m.rows
    spec = m.spec

    def det(mask: int) -> int:
        idx = []
        w = mask
        while w:
            low = w & -w
            idx.append(low.bit_length() - 1)
            w ^= low
        grid = [[rows[i][j] for j in idx] for i in idx]
        return _generic_det(grid, spec)

    return det


def compute_epr(m: SymMatrix, max_order: int | None = DEFAULT_MAX_ORDER) -> str:
    """epr-sequence of a symmetric matrix.

    Subsets are enumerated in increasing bitmask order, aggregated per
    popcount; once an order has seen both a zero and a nonzero minor its
    letter is S and further determinants of that order are skipped.
    """
    n = _check_order(m, max_order)
    det = _subset_dets(m)
    seen_zero = [False] * (n + 1)
    seen_nonzero = [False] * (n + 1)
    for mask in range(1, 1 << n):
        k = mask.bit_count()
        if seen_zero[k] and seen_nonzero[k]:
            continue
        if det(mask):
            seen_nonzero[k] = True
        else:
            seen_zero[k] = True
    letters = []
    for k in range(1, n + 1):
        if seen_nonzero[k] and seen_zero[k]:
            letters.append("S")
        elif seen_nonzero[k]:
            letters.append("A")
        else:
            letters.append("N")
    return "".join(letters)


def compute_pr(m: SymMatrix, max_order: int | None = DEFAULT_MAX_ORDER) -> PrSequence:
    """pr-sequence of a symmetric matrix (independent of compute_epr)."""
    n = _check_order(m, max_order)
    det = _subset_dets(m)
    hit = [False] * (n + 1)
    for mask in range(1, 1 << n):
        k = mask.bit_count()
        if hit[k]:
            continue
        if det(mask):
            hit[k] = True
    bits = "".join("1" if hit[k] else "0" for k in range(1, n + 1))
    return PrSequence(1 if m.has_zero_diagonal() else 0, bits)
