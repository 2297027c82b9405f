"""Permutations of [n] in one-line notation: inversion, descent and sign
statistics, Bruhat order, interval enumeration, and pattern containment.

The Bruhat machinery here is the project's oracle, so it favours the most
direct correct formulation over speed: comparison is the rank-count
criterion applied entrywise, and interval enumeration literally filters all
of S_n (with an early exit per candidate, which changes nothing about what
is accepted).
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional

from .qalgebra import BiPoly, LaurentPoly

__all__ = [
    "Permutation",
    "FORBIDDEN_PATTERNS",
    "all_permutations",
    "inversions",
    "rank_count",
    "descent_number",
    "contains_pattern",
    "avoids_forbidden",
    "flip_ud",
    "rotate180",
    "bruhat_leq",
    "bruhat_interval",
    "poincare_brute",
    "eulerian_gf",
]


@dataclass(frozen=True)
class Permutation:
    """A permutation of [n] = {1, ..., n}, 1-indexed throughout.

    word[i-1] is the image of i.  Text forms: space separated ("3 5 1 2 4")
    for any n, or a compact digit string ("35124") when n <= 9.
    """

    word: tuple[int, ...]

    def __post_init__(self):
        w = tuple(self.word)
        object.__setattr__(self, "word", w)
        if sorted(w) != list(range(1, len(w) + 1)):
            raise ValueError(f"{w!r} is not a permutation of [{len(w)}]")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        if n < 0:
            raise ValueError("size must be nonnegative")
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def from_text(cls, text: str) -> "Permutation":
        s = text.strip()
        if not s:
            raise ValueError("empty permutation text")
        if any(ch.isspace() for ch in s):
            try:
                vals = tuple(int(tok) for tok in s.split())
            except ValueError as exc:
                raise ValueError(f"bad permutation text {text!r}") from exc
        elif s.isdigit():
            if len(s) > 9:
                raise ValueError("compact digit form only covers n <= 9")
            vals = tuple(int(ch) for ch in s)
        else:
            raise ValueError(f"bad permutation text {text!r}")
        return cls(vals)

    def to_text(self) -> str:
        if self.size <= 9:
            return "".join(str(v) for v in self.word)
        return " ".join(str(v) for v in self.word)

    # -- basics -------------------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        if not 1 <= i <= len(self.word):
            raise ValueError(f"position {i} out of range 1..{len(self.word)}")
        return self.word[i - 1]

    def __str__(self):
        return self.to_text()

    # -- statistics ----------------------------------------------------------

    def inversions(self) -> int:
        """Number of pairs i < j with word(i) > word(j); the Coxeter length."""
        return _inversions(self.word)

    def rank_count(self, i: int, j: int) -> int:
        """Number of a <= i with word(a) >= j."""
        n = len(self.word)
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"indices ({i}, {j}) out of range 1..{n}")
        return sum(1 for a in range(i) if self.word[a] >= j)

    def descent_number(self) -> int:
        w = self.word
        return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])

    def neg_statistic(self) -> int:
        """For even size 2n, the count of i in [n+1, 2n] with word(i) <= n."""
        n2 = len(self.word)
        if n2 % 2:
            raise ValueError("neg statistic needs an even size")
        n = n2 // 2
        return sum(1 for i in range(n, n2) if self.word[i] <= n)

    # -- symmetries ------------------------------------------------------------

    def flip_ud(self) -> "Permutation":
        """Reverse the positions: result(i) = word(n + 1 - i)."""
        return Permutation(self.word[::-1])

    def rotate180(self) -> "Permutation":
        """Reverse positions and complement values: result(i) = n+1-word(n+1-i)."""
        n = len(self.word)
        return Permutation(tuple(n + 1 - v for v in self.word[::-1]))

    # -- patterns ---------------------------------------------------------------

    def contains_pattern(self, pattern: "Permutation") -> bool:
        """True if some subsequence of the word is order-isomorphic to pattern."""
        return self._find_pattern(pattern) is not None

    def _find_pattern(self, pattern: "Permutation") -> Optional[tuple[int, ...]]:
        k = pattern.size
        if k > self.size:
            return None
        pat = pattern.word
        for positions in itertools.combinations(range(self.size), k):
            sub = [self.word[p] for p in positions]
            ranks = sorted(range(k), key=lambda t: sub[t])
            std = [0] * k
            for r, t in enumerate(ranks, start=1):
                std[t] = r
            if tuple(std) == pat:
                return tuple(p + 1 for p in positions)
        return None

    def find_forbidden(self) -> Optional[tuple["Permutation", tuple[int, ...]]]:
        """First forbidden pattern occurrence, as (pattern, 1-indexed positions)."""
        for pat in FORBIDDEN_PATTERNS:
            hit = self._find_pattern(pat)
            if hit is not None:
                return pat, hit
        return None

    def avoids_forbidden(self) -> bool:
        """True if the word avoids 4231, 35142, 42513 and 351624."""
        return self.find_forbidden() is None


FORBIDDEN_PATTERNS = (
    Permutation((4, 2, 3, 1)),
    Permutation((3, 5, 1, 4, 2)),
    Permutation((4, 2, 5, 1, 3)),
    Permutation((3, 5, 1, 6, 2, 4)),
)


def all_permutations(n: int) -> Iterator[Permutation]:
    for word in itertools.permutations(range(1, n + 1)):
        yield Permutation(word)


# -- word-level helpers (used by the sweeps, kept free of object overhead) ---


def _inversions(word: tuple[int, ...]) -> int:
    n = len(word)
    return sum(1 for i in range(n) for j in range(i + 1, n) if word[i] > word[j])


def _rank_table(word: tuple[int, ...]) -> list[list[int]]:
    """t[i][j] = #{a <= i : word(a) >= j} for 0 <= i <= n, 1 <= j <= n."""
    n = len(word)
    table = [[0] * (n + 1)]
    for i in range(1, n + 1):
        prev = table[-1]
        v = word[i - 1]
        table.append([prev[j] + (1 if v >= j else 0) for j in range(n + 1)])
    return table


def _interval_words(u: tuple[int, ...], w: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Yield every word v of S_n with u <= v <= w, by filtering all of S_n.

    Per row only the rank constraints that can actually bind are checked;
    a row failure rules out every completion of the prefix, so breaking out
    early is purely an optimization.
    """
    n = len(u)
    ut, wt = _rank_table(u), _rank_table(w)
    row_cons: list[tuple[tuple[int, int, int], ...]] = []
    for i in range(1, n + 1):
        cons = []
        for j in range(2, n + 1):
            lo, hi = ut[i][j], wt[i][j]
            if lo > max(0, i - j + 1) or hi < min(i, n - j + 1):
                cons.append((j, lo, hi))
        row_cons.append(tuple(cons))
    for word in itertools.permutations(range(1, n + 1)):
        cnt = [0] * (n + 1)
        ok = True
        for i in range(n):
            v = word[i]
            for j in range(2, v + 1):
                cnt[j] += 1
            for j, lo, hi in row_cons[i]:
                c = cnt[j]
                if c < lo or c > hi:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            yield word


# function forms of the Permutation methods, matching the rest of the API
def inversions(p: Permutation) -> int:
    return p.inversions()


def rank_count(p: Permutation, i: int, j: int) -> int:
    return p.rank_count(i, j)


def descent_number(p: Permutation) -> int:
    return p.descent_number()


def contains_pattern(p: Permutation, pat: Permutation) -> bool:
    return p.contains_pattern(pat)


def avoids_forbidden(p: Permutation) -> bool:
    return p.avoids_forbidden()


def flip_ud(p: Permutation) -> Permutation:
    return p.flip_ud()


def rotate180(p: Permutation) -> Permutation:
    return p.rotate180()


def bruhat_leq(p: Permutation, r: Permutation) -> bool:
    """Bruhat order: p <= r iff every rank count of p is at most that of r."""
    if p.size != r.size:
        raise ValueError("permutations must have the same size")
    n = p.size
    pt, rt = _rank_table(p.word), _rank_table(r.word)
    for i in range(1, n + 1):
        pi, ri = pt[i], rt[i]
        for j in range(2, n + 1):
            if pi[j] > ri[j]:
                return False
    return True


def bruhat_interval(u: Permutation, w: Permutation) -> set[Permutation]:
    """The set {v : u <= v <= w}; empty when u and w are incomparable."""
    if u.size != w.size:
        raise ValueError("permutations must have the same size")
    return {Permutation(word) for word in _interval_words(u.word, w.word)}


def poincare_brute(u: Permutation, w: Permutation) -> LaurentPoly:
    """Sum of q^length over the Bruhat interval [u, w], by exhaustive filter."""
    if u.size != w.size:
        raise ValueError("permutations must have the same size")
    counts = Counter(_inversions(word) for word in _interval_words(u.word, w.word))
    return LaurentPoly(counts)


def eulerian_gf(u: Permutation, w: Permutation) -> BiPoly:
    """Sum of t^descents q^length over the Bruhat interval [u, w]."""
    if u.size != w.size:
        raise ValueError("permutations must have the same size")
    counts: Counter[tuple[int, int]] = Counter()
    for word in _interval_words(u.word, w.word):
        d = sum(1 for i in range(len(word) - 1) if word[i] > word[i + 1])
        counts[d, _inversions(word)] += 1
    acc: dict[int, dict[int, int]] = {}
    for (d, l), c in counts.items():
        acc.setdefault(d, {})[l] = c
    return BiPoly({d: LaurentPoly(m) for d, m in acc.items()})
