"""Balanced-word codec and streaming enumeration.

Scanning circle points 1..2n and writing U for the first endpoint of each
edge and D for the second is a bijection between non-crossing perfect
matchings and balanced words of n Us and n Ds (no prefix with more Ds than
Us).  Words are ordered lexicographically with U < D; a matching's rank in
that order is its vertex id everywhere in this package.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Iterator

from .chords import (Chord, Matching, is_centrally_symmetric,
                     opening_endpoint, segment)

_PAREN = str.maketrans("()", "UD")


def _catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def normalize_word(word: str) -> str:
    """Accept either the U/D or the ()-alphabet; return U/D."""
    w = word.translate(_PAREN)
    if any(ch not in "UD" for ch in w):
        raise ValueError(f"not a balanced word: {word!r}")
    return w


def validate_word(word: str) -> str:
    w = normalize_word(word)
    if len(w) % 2:
        raise ValueError("balanced words have even length")
    h = 0
    for ch in w:
        h += 1 if ch == "U" else -1
        if h < 0:
            raise ValueError(f"prefix of {word!r} closes more than it opens")
    if h:
        raise ValueError(f"{word!r} does not balance")
    return w


def to_dyck(m: Matching) -> str:
    """Balanced word of a matching: U at first endpoints, D at second."""
    p = m._partner
    return "".join("U" if p[x] > x else "D" for x in range(1, 2 * m.n + 1))


def _partner_from_word(w: str) -> list[int]:
    partner = [0] * (len(w) + 1)
    stack: list[int] = []
    for x, ch in enumerate(w, start=1):
        if ch == "U":
            stack.append(x)
        else:
            a = stack.pop()
            partner[a] = x
            partner[x] = a
    return partner


def from_dyck(word: str) -> Matching:
    """Matching encoded by a balanced word (inverse of to_dyck)."""
    w = validate_word(word)
    n = len(w) // 2
    if n == 0:
        raise ValueError("empty word")
    return Matching._from_partner(n, _partner_from_word(w))


def peaks(word: str) -> int:
    """Number of UD factors (local maxima of the lattice path)."""
    w = normalize_word(word)
    return w.count("UD")


def band_weight(word: str) -> int:
    """Number of upsteps starting at even height."""
    w = normalize_word(word)
    h = 0
    total = 0
    for ch in w:
        if ch == "U":
            if h % 2 == 0:
                total += 1
            h += 1
        else:
            h -= 1
    return total


@lru_cache(maxsize=None)
def _suffix_counts(n: int) -> tuple[tuple[int, ...], ...]:
    # t[u][d] = number of valid completions with u Us and d Ds left (d >= u)
    t = [[0] * (n + 1) for _ in range(n + 1)]
    for d in range(n + 1):
        t[0][d] = 1
    for u in range(1, n + 1):
        for d in range(u, n + 1):
            t[u][d] = t[u - 1][d] + (t[u][d - 1] if d > u else 0)
    return tuple(tuple(row) for row in t)


def _word_rank(w: str) -> int:
    n = len(w) // 2
    t = _suffix_counts(n)
    u, d = n, n
    r = 0
    for ch in w:
        if ch == "U":
            u -= 1
        else:
            if u:
                r += t[u - 1][d]
            d -= 1
    return r


def rank(m: Matching | str) -> int:
    """Position of a matching (or balanced word) in canonical order."""
    if isinstance(m, Matching):
        return _word_rank(to_dyck(m))
    return _word_rank(validate_word(m))


def unrank(n: int, r: int) -> Matching:
    """Matching with canonical rank r among the C_n matchings on 2n points."""
    total = _catalan(n)
    if not 0 <= r < total:
        raise ValueError(f"rank {r} out of range 0..{total - 1}")
    t = _suffix_counts(n)
    u, d = n, n
    out = []
    for _ in range(2 * n):
        if u:
            below = t[u - 1][d]
            if r < below:
                out.append("U")
                u -= 1
                continue
            r -= below
        out.append("D")
        d -= 1
    return from_dyck("".join(out))


def _advance(w: list[str], n: int) -> bool:
    """Replace w in place with its lexicographic successor; False at the end."""
    h = 0
    d_used = 0
    height_before = [0] * len(w)
    d_before = [0] * len(w)
    for i, ch in enumerate(w):
        height_before[i] = h
        d_before[i] = d_used
        if ch == "U":
            h += 1
        else:
            h -= 1
            d_used += 1
    for i in range(len(w) - 1, -1, -1):
        if w[i] == "U" and height_before[i] >= 1 and d_before[i] < n:
            u_rem = n - (i - d_before[i])
            d_rem = n - d_before[i] - 1
            w[i:] = ["D"] + ["U"] * u_rem + ["D"] * d_rem
            return True
    return False


def dyck_words(n: int, start_rank: int = 0) -> Iterator[str]:
    """Stream balanced words in canonical order, optionally from a rank."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if start_rank:
        w = list(to_dyck(unrank(n, start_rank)))
    else:
        w = ["U"] * n + ["D"] * n
    while True:
        yield "".join(w)
        if not _advance(w, n):
            return


def enumerate_matchings(n: int, start_rank: int = 0,
                        stop_rank: int | None = None) -> Iterator[Matching]:
    """Stream matchings in canonical rank order.

    The stream may be split by rank ranges: [start_rank, stop_rank) of the
    full order, so disjoint ranges partition the enumeration deterministically.
    """
    count = _catalan(n) if stop_rank is None else stop_rank
    r = start_rank
    for w in dyck_words(n, start_rank):
        if r >= count:
            return
        yield Matching._from_partner(n, _partner_from_word(w))
        r += 1


def symmetric_to_bits(m: Matching) -> str:
    """Encode a centrally symmetric matching (even n) as n balanced bits.

    Point p gets bit 1 when it is the opening endpoint of its edge (the
    endpoint whose clockwise successor arc is the edge's minority side).
    The bit pattern over all 2n points has period n, so the first half
    determines the matching.
    """
    n = m.n
    if n % 2:
        raise ValueError("the bit encoding is defined for even n only")
    if not is_centrally_symmetric(m):
        raise ValueError("matching is not centrally symmetric")
    bits = []
    for p in range(1, n + 1):
        q = m._partner[p]
        a, b = (p, q) if p < q else (q, p)
        bits.append("1" if p == opening_endpoint(n, (a, b)) else "0")
    return "".join(bits)


def bits_to_symmetric(n: int, bits: str) -> Matching:
    """Decode n balanced bits into a centrally symmetric matching (even n).

    The doubled bit string labels the 2n points; each 1-point is matched to
    a 0-point so that everything hidden behind the new edge is already
    matched, which is cyclic innermost-first parenthesis matching.
    """
    if n % 2:
        raise ValueError("the bit encoding is defined for even n only")
    if len(bits) != n or any(ch not in "01" for ch in bits):
        raise ValueError(f"need {n} bits, got {bits!r}")
    if 2 * bits.count("1") != n:
        raise ValueError("bit string must balance: n/2 ones and n/2 zeros")
    full = bits + bits
    # start right after a minimal prefix sum so the stack never underflows
    h = 0
    best = 0
    best_at = 0
    for i, ch in enumerate(full, start=1):
        h += 1 if ch == "1" else -1
        if h < best:
            best = h
            best_at = i
    partner = [0] * (2 * n + 1)
    stack: list[int] = []
    for off in range(2 * n):
        p = (best_at + off) % (2 * n) + 1
        if full[p - 1] == "1":
            stack.append(p)
        else:
            q = stack.pop()
            partner[p] = q
            partner[q] = p
    m = Matching._from_partner(n, partner)
    assert symmetric_to_bits(m) == bits
    return m


def segment_to_dyck(m: Matching, e: Chord) -> str:
    """Balanced word of the edges hidden behind visible edge e.

    The hidden points are relabeled in circular order starting just after
    the opening endpoint of e; a perimeter edge gives the empty word.
    """
    segment(m, e)  # validates membership and visibility
    n = m.n
    a, b = min(e), max(e)
    if b - a < n:
        pts = list(range(a + 1, b))
    else:
        pts = list(range(b + 1, 2 * n + 1)) + list(range(1, a))
    index = {p: i for i, p in enumerate(pts)}
    return "".join("U" if index[m._partner[p]] > index[p] else "D"
                   for p in pts)
