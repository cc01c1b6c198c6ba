"""Flips between non-crossing matchings.

Two edges spanning an empty quadrilateral can be exchanged for the other
pair of opposite sides.  A flip is "centered" when the quadrilateral
contains the circle center, decided here by the exact integer criterion:
the four side lengths sum to n-2 (any smaller sum means non-centered; a
center on the quadrilateral boundary still counts as centered).
"""

from __future__ import annotations

from dataclasses import dataclass

from .chords import Chord, Matching, chord_length, make_chord


@dataclass(frozen=True)
class Flip:
    """One flip: edges out1,out2 leave the matching, in1,in2 enter."""

    out1: Chord
    out2: Chord
    in1: Chord
    in2: Chord
    centered: bool

    def reversed(self) -> "Flip":
        return Flip(self.in1, self.in2, self.out1, self.out2, self.centered)


def _in_chords(e: Chord, f: Chord) -> tuple[Chord, Chord]:
    """The opposite pair of quadrilateral sides, for non-interleaved e, f."""
    p1, p2, p3, p4 = sorted(e + f)
    es = frozenset(e)
    if es in (frozenset((p1, p2)), frozenset((p3, p4))):
        return (p2, p3), (p1, p4)
    if es in (frozenset((p1, p4)), frozenset((p2, p3))):
        return (p1, p2), (p3, p4)
    raise ValueError(f"chords {e} and {f} interleave; no quadrilateral")


def is_centered(n: int, e: Chord, f: Chord) -> bool:
    """True iff the quadrilateral spanned by e and f contains the center."""
    e = make_chord(n, *e)
    f = make_chord(n, *f)
    if set(e) & set(f):
        raise ValueError(f"chords {e} and {f} share an endpoint")
    in1, in2 = _in_chords(e, f)
    total = (chord_length(n, e) + chord_length(n, f)
             + chord_length(n, in1) + chord_length(n, in2))
    return total == n - 2


def _arc_contains(x: int, y: int, u: int) -> bool:
    # u strictly inside the clockwise arc x -> y
    if x < y:
        return x < u < y
    return u > x or u < y


def _is_flippable(n: int, partner, e: Chord, f: Chord) -> bool:
    """Direct test: no edge has one endpoint in each connecting arc."""
    p1, p2, p3, p4 = sorted(e + f)
    es = frozenset(e)
    if es in (frozenset((p1, p2)), frozenset((p3, p4))):
        arc1, arc2 = (p2, p3), (p4, p1)
    elif es in (frozenset((p1, p4)), frozenset((p2, p3))):
        arc1, arc2 = (p1, p2), (p3, p4)
    else:
        return False
    for u in range(1, 2 * n + 1):
        if _arc_contains(*arc1, u) and _arc_contains(*arc2, partner[u]):
            return False
    return True


def _forest_pairs(n: int, partner) -> list[tuple[Chord, Chord]]:
    """All flippable pairs via the nesting forest.

    A pair is flippable exactly when the two chords are parent and child or
    siblings in the chord-containment forest (the virtual root makes all
    outermost chords mutual siblings).
    """
    kids: dict[int, list[Chord]] = {0: []}
    stack = [0]
    for x in range(1, 2 * n + 1):
        if partner[x] > x:
            kids[x] = []
            stack.append(x)
        else:
            stack.pop()
            kids[stack[-1]].append((partner[x], x))
    pairs = []
    for opener, group in kids.items():
        if opener:
            parent = (opener, partner[opener])
            for child in group:
                pairs.append((parent, child) if parent < child
                             else (child, parent))
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                pairs.append((group[i], group[j]))
    pairs.sort()
    return pairs


def flippable_pairs(m: Matching) -> list[tuple[Chord, Chord]]:
    """Unordered edge pairs of m that admit a flip, sorted canonically."""
    return _forest_pairs(m.n, m._partner)


def make_flip(n: int, e: Chord, f: Chord) -> Flip:
    """Build the Flip record for a pair (no matching-level validation)."""
    e = make_chord(n, *e)
    f = make_chord(n, *f)
    in1, in2 = _in_chords(e, f)
    return Flip(e, f, in1, in2, is_centered(n, e, f))


def apply_flip(m: Matching, e: Chord, f: Chord) -> Matching:
    """Flip edges e and f of m; raises if the pair is not flippable."""
    n = m.n
    e = make_chord(n, *e)
    f = make_chord(n, *f)
    if e not in m or f not in m:
        raise ValueError(f"{e} and {f} must both be edges of the matching")
    if e == f:
        raise ValueError("cannot flip an edge with itself")
    if not _is_flippable(n, m._partner, e, f):
        raise ValueError(f"pair {e}, {f} is blocked; quadrilateral not empty")
    in1, in2 = _in_chords(e, f)
    pairs = [c for c in m.pairs if c != e and c != f] + [in1, in2]
    return Matching(n, pairs)


def replay(m: Matching, flips) -> Matching:
    """Apply a flip sequence, validating each step; returns the endpoint."""
    cur = m
    for fl in flips:
        nxt = apply_flip(cur, fl.out1, fl.out2)
        if not (fl.in1 in nxt and fl.in2 in nxt):
            raise ValueError(f"flip {fl} recorded wrong in-chords")
        if fl.centered != is_centered(m.n, fl.out1, fl.out2):
            raise ValueError(f"flip {fl} recorded wrong centeredness")
        cur = nxt
    return cur


def _word(m: Matching) -> str:
    p = m._partner
    return "".join("U" if p[x] > x else "D" for x in range(1, 2 * m.n + 1))


def neighbors(m: Matching, mode: str = "all") -> list[Matching]:
    """Matchings one flip away, in canonical (balanced-word) rank order.

    mode="centered" keeps only centered flips.
    """
    if mode not in ("all", "centered"):
        raise ValueError(f"unknown mode {mode!r}")
    n = m.n
    out = []
    for e, f in _forest_pairs(n, m._partner):
        if mode == "centered" and not is_centered(n, e, f):
            continue
        in1, in2 = _in_chords(e, f)
        pairs = [c for c in m.pairs if c != e and c != f] + [in1, in2]
        out.append(Matching(n, pairs))
    out.sort(key=_word)
    return out
