"""Exact linear algebra over formal Q-spans of logarithm symbols.

The symbols are purely formal: no numeric value of any logarithm enters a
verdict.  The module certifies Q-(in)dependence hypotheses exactly; the
six-exponentials theorem then supplies the rank conclusion, and Siegel's
lemma is realized by exhaustive search inside its pigeonhole box.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


# ----------------------------------------------------------------------
# vectors of rationals
# ----------------------------------------------------------------------

def q_independence(vectors: Sequence[Sequence[Fraction]]):
    """Exact fraction-free rank test.

    Returns (True, None) if the vectors are Q-linearly independent, else
    (False, relation) with an explicit nonzero integer relation vector.
    """
    vecs = [[Fraction(c) for c in v] for v in vectors]
    if not vecs:
        return True, None
    width = len(vecs[0])
    if any(len(v) != width for v in vecs):
        raise ValueError("inconsistent vector lengths")
    # row-reduce while carrying the transformation (relation tracking)
    rows = [list(v) + [Fraction(int(i == j)) for j in range(len(vecs))]
            for i, v in enumerate(vecs)]
    pivots = []
    for row in rows:
        r = list(row)
        for pc, pr in pivots:
            if r[pc]:
                f = r[pc] / pr[pc]
                r = [a - f * b for a, b in zip(r, pr)]
        nz = next((j for j in range(width) if r[j]), None)
        if nz is None:
            rel = r[width:]
            den = 1
            for c in rel:
                den = den * c.denominator // _gcd(den, c.denominator)
            ints = [int(c * den) for c in rel]
            g = 0
            for c in ints:
                g = _gcd(g, abs(c))
            rel_i = [c // g for c in ints] if g else ints
            return False, rel_i
        pivots.append((nz, r))
    return True, None


def _gcd(a: int, b: int) -> int:
    import math
    return math.gcd(a, b)


# ----------------------------------------------------------------------
# matrices of formal linear forms
# ----------------------------------------------------------------------

@dataclass
class LinFormMatrix:
    """m x n matrix whose entries are Q-coefficient vectors over the symbol
    list Lambda = (symbols); entry (i,j) represents sum_t coeff_t lambda_t."""

    symbols: tuple[str, ...]
    rows: list[list[tuple[Fraction, ...]]]

    def __post_init__(self):
        s = len(self.symbols)
        self.rows = [[tuple(Fraction(c) for c in entry) for entry in row]
                     for row in self.rows]
        for row in self.rows:
            for entry in row:
                if len(entry) != s:
                    raise ValueError("entry coefficient length != symbol count")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def row_vectors(self) -> list[list[Fraction]]:
        """Each row flattened to Q^(n*s) for exact independence tests."""
        return [[c for entry in row for c in entry] for row in self.rows]

    def col_vectors(self) -> list[list[Fraction]]:
        m, n = self.shape
        return [[c for i in range(m) for c in self.rows[i][j]]
                for j in range(n)]

    @classmethod
    def from_json_dict(cls, d: dict) -> "LinFormMatrix":
        symbols = tuple(d["symbols"])
        rows = [[tuple(Fraction(str(c)) for c in entry) for entry in row]
                for row in d["rows"]]
        return cls(symbols, rows)

    def to_json_dict(self) -> dict:
        return {"symbols": list(self.symbols),
                "rows": [[[str(c) for c in entry] for entry in row]
                         for row in self.rows]}


def _substitute(M: LinFormMatrix, values: list[int]) -> list[list[Fraction]]:
    return [[sum((c * v for c, v in zip(entry, values)), Fraction(0))
             for entry in row] for row in M.rows]


def _rank_with_minor(A: list[list[Fraction]]):
    """(rank, (row_idx, col_idx)) of an exactly nonsingular maximal minor."""
    m = len(A)
    n = len(A[0]) if m else 0
    work = [list(r) for r in A]
    row_sel, col_sel = [], []
    used_rows = set()
    for j in range(n):
        piv = next((i for i in range(m)
                    if i not in used_rows and work[i][j]), None)
        if piv is None:
            continue
        used_rows.add(piv)
        row_sel.append(piv)
        col_sel.append(j)
        for i in range(m):
            if i != piv and work[i][j]:
                f = work[i][j] / work[piv][j]
                work[i] = [a - f * b for a, b in zip(work[i], work[piv])]
    return len(row_sel), (sorted(row_sel), col_sel)


def _det(A: list[list[Fraction]]) -> Fraction:
    n = len(A)
    if n == 0:
        return Fraction(1)
    work = [list(r) for r in A]
    det = Fraction(1)
    for j in range(n):
        piv = next((i for i in range(j, n) if work[i][j]), None)
        if piv is None:
            return Fraction(0)
        if piv != j:
            work[j], work[piv] = work[piv], work[j]
            det = -det
        det *= work[j][j]
        for i in range(j + 1, n):
            if work[i][j]:
                f = work[i][j] / work[j][j]
                work[i] = [a - f * b for a, b in zip(work[i], work[j])]
    return det


_PRIME_FLOOR = 1 << 61


def _random_primes(rng: random.Random, count: int) -> list[int]:
    import gmpy2
    out = []
    while len(out) < count:
        cand = int(gmpy2.next_prime(rng.randrange(_PRIME_FLOOR, _PRIME_FLOOR << 1)))
        if cand not in out:
            out.append(cand)
    return out


def generic_rank(M: LinFormMatrix, seed: int = 20271, trials: int = 1) -> int:
    """Rank of M over the rational-function field in the symbols.

    Mechanism: substitute independent random >= 2^61 primes for the symbols
    and take the exact rank of the resulting rational matrix, confirming a
    nonsingular r x r minor exactly.

    Soundness notes: a nonzero r-minor at the substitution point certifies
    the corresponding symbolic minor is not identically zero, so the generic
    rank is >= r (unconditional lower bound).  Conversely specialization can
    only drop rank, so rank_at_point <= generic rank; equality can fail only
    when every maximal symbolic minor vanishes at the random point, which the
    large prime substitution makes improbable (and repeated independent
    substitutions make de facto impossible).
    """
    rng = random.Random(seed)
    best = 0
    for _ in range(max(1, trials)):
        vals = _random_primes(rng, len(M.symbols))
        A = _substitute(M, vals)
        r, (rs, cs) = _rank_with_minor(A)
        # exact confirmation of the located minor
        minor = [[A[i][j] for j in cs] for i in rs]
        assert _det(minor) != 0 or r == 0
        best = max(best, r)
    return best


# ----------------------------------------------------------------------
# six exponentials
# ----------------------------------------------------------------------

@dataclass
class SixExpVerdict:
    shape: tuple[int, int]
    rows_independent: bool
    cols_independent: bool
    row_relation: Optional[list[int]]
    col_relation: Optional[list[int]]
    verdict: str          # "hypotheses-fail" | "theorem-applies" | "conjecture-4EC"
    statement: str

    @property
    def asserts_rank_ge_2(self) -> bool:
        return self.verdict == "theorem-applies"


def six_exp_verdict(M: LinFormMatrix) -> SixExpVerdict:
    """Check the six-exponentials hypotheses on a 2x3 / 3x2 / 2x2 matrix of
    formal logarithms and report which conclusion (if any) applies.

    Rows and columns are treated as vectors of formal Q-linear forms; the
    theorem needs both families Q-linearly independent and mn > m + n.  The
    2x2 case is the four-exponentials conjecture and is only ever labeled as
    such, never asserted.
    """
    m, n = M.shape
    if (m, n) not in ((2, 3), (3, 2), (2, 2)):
        raise ValueError(f"six_exp_verdict needs shape 2x3, 3x2 or 2x2, got {m}x{n}")
    rows_ok, row_rel = q_independence(M.row_vectors())
    cols_ok, col_rel = q_independence(M.col_vectors())
    if not (rows_ok and cols_ok):
        return SixExpVerdict((m, n), rows_ok, cols_ok, row_rel, col_rel,
                             "hypotheses-fail",
                             "a Q-linear dependence falsifies the hypotheses; "
                             "no rank conclusion")
    if m * n > m + n:
        return SixExpVerdict((m, n), True, True, None, None, "theorem-applies",
                             "six exponentials theorem: rank M >= 2 "
                             "(mn > m + n holds)")
    return SixExpVerdict((m, n), True, True, None, None, "conjecture-4EC",
                         "2x2 case: rank M = 2 would follow from the (open) "
                         "four exponentials conjecture; nothing is asserted")


# ----------------------------------------------------------------------
# Siegel's lemma
# ----------------------------------------------------------------------

def siegel_bound(m: int, n: int, C0: int) -> int:
    """floor((n C0)^(m/(n-m))), computed exactly."""
    import gmpy2
    base = n * C0
    # largest B with B^(n-m) <= base^m
    root, _exact = gmpy2.iroot(gmpy2.mpz(base) ** m, n - m)
    return int(root)


def siegel_solve(C: Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """A nonzero integer solution of Cx = 0 with max|x_j| <= (n C0)^(m/(n-m)).

    Search order: max-norm shells ascending; inside a shell the coordinates
    run through t, -t, t-1, -(t-1), ..., 0 lexicographically, so the first
    hit has its first nonzero coordinate positive.  Returns (x, bound).
    The lemma guarantees a solution; exhausting the box without one would
    falsify it and aborts loudly.
    """
    rows = [list(map(int, r)) for r in C]
    m = len(rows)
    if m == 0:
        raise ValueError("empty system")
    n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise ValueError("ragged matrix")
    if n <= m:
        raise ValueError("need n > m")
    C0 = max((abs(c) for r in rows for c in r), default=0)
    if C0 == 0:
        raise ValueError("need a nonzero coefficient")
    B = siegel_bound(m, n, C0)

    def values(t: int):
        for v in range(t, 0, -1):
            yield v
            yield -v
        yield 0

    for t in range(1, B + 1):
        for x in itertools.product(*(list(values(t)) for _ in range(n))):
            if max(abs(v) for v in x) != t:
                continue
            if all(sum(c * v for c, v in zip(row, x)) == 0 for row in rows):
                return list(x), B
    raise ArithmeticError(
        "no kernel vector inside the Siegel box: this would falsify the "
        "lemma; the input must be corrupted")
