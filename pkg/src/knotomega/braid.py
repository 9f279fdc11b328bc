"""Braid words, band and quasipositive presentations, and closure data.

Words are sequences of nonzero signed generator indices: g > 0 is the
positive Artin generator between strands g and g+1, g < 0 its inverse.
No word-problem solving happens here; invariants are computed on
representatives and presentation independence is checked by the test suite.

Text formats:
  braid           ``n: g1 g2 ...``
  band word       ``n: (i,j)(i,j)...``
  quasipositive   ``n: [g1 g2 ...|j][...|j]`` (conjugator letters, then the
                  positive generator index)
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import IndexOutOfRange, NegativeGenus, NotAKnot, ParseError


@dataclass(frozen=True)
class BraidWord:
    strands: int
    letters: tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise IndexOutOfRange("strand count must be at least 1")
        for g in self.letters:
            if g == 0 or not 1 <= abs(g) <= self.strands - 1:
                raise IndexOutOfRange(
                    f"generator {g} outside 1..{self.strands - 1} on {self.strands} strands")

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if self.strands != other.strands:
            raise IndexOutOfRange("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def text(self) -> str:
        return f"{self.strands}: " + " ".join(str(g) for g in self.letters)


@dataclass(frozen=True)
class BandWord:
    """Strongly quasipositive presentation: a list of bands (i, j), i < j."""

    strands: int
    bands: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, j in self.bands:
            if not 1 <= i < j <= self.strands:
                raise IndexOutOfRange(f"band ({i},{j}) invalid on {self.strands} strands")


@dataclass(frozen=True)
class QuasipositiveWord:
    """Product of conjugates w * sigma_j * w^-1 of positive generators."""

    strands: int
    factors: tuple[tuple[BraidWord, int], ...]

    def __post_init__(self):
        for conj, j in self.factors:
            if conj.strands != self.strands:
                raise IndexOutOfRange("conjugator strand count differs from the word's")
            if not 1 <= j <= self.strands - 1:
                raise IndexOutOfRange(f"generator index {j} outside 1..{self.strands - 1}")


# ---------------------------------------------------------------- parsing


def parse_braid(text: str) -> BraidWord:
    """Parse ``n: g1 g2 ...``; an empty letter list is the identity braid."""
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError("expected 'n: letters'", 0)
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"bad strand count {head.strip()!r}", 0) from None
    letters = []
    offset = len(head) + 1
    for m in re.finditer(r"\S+", rest):
        tok = m.group()
        try:
            g = int(tok)
        except ValueError:
            raise ParseError(f"bad letter {tok!r}", offset + m.start()) from None
        if g == 0:
            raise ParseError("letter 0 is not a generator", offset + m.start())
        letters.append(g)
    word = BraidWord(n, tuple(letters))
    return word


def parse_band_word(text: str) -> BandWord:
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError("expected 'n: (i,j)(i,j)...'", 0)
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"bad strand count {head.strip()!r}", 0) from None
    rest_stripped = rest.replace(" ", "")
    if not re.fullmatch(r"(\(\d+,\d+\))*", rest_stripped):
        raise ParseError("bands must look like (i,j)", len(head) + 1)
    bands = [(int(i), int(j)) for i, j in re.findall(r"\((\d+),(\d+)\)", rest)]
    return BandWord(n, tuple(bands))


def parse_quasipositive(text: str) -> QuasipositiveWord:
    head, sep, rest = text.partition(":")
    if not sep:
        raise ParseError("expected 'n: [w|j][w|j]...'", 0)
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"bad strand count {head.strip()!r}", 0) from None
    if not re.fullmatch(r"\s*(\[[^\[\]]*\|\s*\d+\s*\]\s*)*", rest):
        raise ParseError("factors must look like [letters|index]", len(head) + 1)
    factors = []
    for body, j in re.findall(r"\[([^\[\]|]*)\|\s*(\d+)\s*\]", rest):
        letters = tuple(int(tok) for tok in body.split())
        factors.append((BraidWord(n, letters), int(j)))
    return QuasipositiveWord(n, tuple(factors))


# ---------------------------------------------------------------- expansions


def expand_band(word: BandWord) -> BraidWord:
    """Replace each band (i, j) by its conjugated-generator normal form.

    The band (i, i+1) is the bare generator sigma_i; wider bands conjugate
    sigma_{j-1} by sigma_i ... sigma_{j-2}.
    """
    letters: list[int] = []
    for i, j in word.bands:
        run = list(range(i, j - 1))
        letters.extend(run)
        letters.append(j - 1)
        letters.extend(-g for g in reversed(run))
    return BraidWord(word.strands, tuple(letters))


def band_to_quasipositive(word: BandWord) -> QuasipositiveWord:
    factors = []
    for i, j in word.bands:
        conj = BraidWord(word.strands, tuple(range(i, j - 1)))
        factors.append((conj, j - 1))
    return QuasipositiveWord(word.strands, tuple(factors))


def expand_quasipositive(word: QuasipositiveWord) -> BraidWord:
    letters: list[int] = []
    for conj, j in word.factors:
        letters.extend(conj.letters)
        letters.append(j)
        letters.extend(-g for g in reversed(conj.letters))
    return BraidWord(word.strands, tuple(letters))


def free_reduce(b: BraidWord) -> BraidWord:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for g in b.letters:
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return BraidWord(b.strands, tuple(out))


def reduce_closure_word(b: BraidWord) -> BraidWord:
    """Shorten a word without changing its closure.

    Alternates free reduction with cyclic rotation (conjugation by a prefix),
    keeping the lexicographically least among the shortest rotations.  Both
    moves preserve the closure as a transverse link, so downstream drawings
    of the reduced word present the same closure.
    """
    word = free_reduce(b)
    while True:
        changed = False
        for k in range(len(word.letters)):
            rotated = BraidWord(word.strands,
                                word.letters[k:] + word.letters[:k])
            reduced = free_reduce(rotated)
            if len(reduced.letters) < len(word.letters):
                word = reduced
                changed = True
                break
        if not changed:
            break
    best = word.letters
    for k in range(1, len(word.letters)):
        rotated = word.letters[k:] + word.letters[:k]
        if rotated < best:
            best = rotated
    return BraidWord(word.strands, best)


# ---------------------------------------------------------------- closure data


def permutation(b: BraidWord) -> tuple[int, ...]:
    """Underlying permutation: position p (0-based) maps to perm[p]."""
    perm = list(range(b.strands))
    for g in b.letters:
        i = abs(g) - 1
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
    # perm[final position] = starting position; invert to map start -> end
    out = [0] * b.strands
    for pos, start in enumerate(perm):
        out[start] = pos
    return tuple(out)


def closure_components(b: BraidWord) -> int:
    perm = permutation(b)
    seen = [False] * b.strands
    count = 0
    for start in range(b.strands):
        if seen[start]:
            continue
        count += 1
        p = start
        while not seen[p]:
            seen[p] = True
            p = perm[p]
    return count


def writhe(b: BraidWord) -> int:
    return sum(1 if g > 0 else -1 for g in b.letters)


def self_linking(b: BraidWord) -> int:
    """Self-linking of the transverse closure: writhe minus strand count."""
    if closure_components(b) != 1:
        raise NotAKnot("self-linking needs a one-component closure")
    return writhe(b) - b.strands


def quasipositive_surface_chi(word: QuasipositiveWord | BandWord) -> int:
    """Euler characteristic of the ascending surface: births minus saddles."""
    k = len(word.factors if isinstance(word, QuasipositiveWord) else word.bands)
    return word.strands - k


def quasipositive_surface_genus(word: QuasipositiveWord | BandWord) -> int:
    braid = expand_quasipositive(word) if isinstance(word, QuasipositiveWord) \
        else expand_band(word)
    if closure_components(braid) != 1:
        raise NotAKnot("genus bookkeeping requires a knot closure")
    chi = quasipositive_surface_chi(word)
    if chi > 1 or chi % 2 == 0:
        raise NegativeGenus(f"chi = {chi} is impossible for a connected knot surface")
    return (1 - chi) // 2


# ---------------------------------------------------------------- grid construction


class _Run:
    __slots__ = ("height", "o_col", "x_col")

    def __init__(self, height, o_col):
        self.height = height
        self.o_col = o_col
        self.x_col = None


def _simulate(n: int, letters: tuple[int, ...]):
    """Run the strand-height simulation; returns (all runs, final runs by position).

    Strands are horizontal runs at exact rational heights; a positive letter
    makes the lower strand jump to a fresh height just above its neighbour
    (the jump column crossing over the neighbour's run), a negative letter
    makes the upper strand jump just below.  Initial run heights are 0..n-1,
    crossing columns start at n.
    """
    initial = [_Run(Fraction(i), Fraction(i)) for i in range(n)]
    runs = list(initial)
    positions = list(initial)

    def fresh(neighbour_h, above: bool):
        # strictly between the neighbour and the next open strand, distinct
        # from every existing row (closed runs keep their rows)
        if above:
            beyond = [r.height for r in positions if r.height > neighbour_h]
            new = (neighbour_h + min(beyond)) / 2 if beyond else neighbour_h + 1
        else:
            beyond = [r.height for r in positions if r.height < neighbour_h]
            new = (neighbour_h + max(beyond)) / 2 if beyond else neighbour_h - 1
        taken = {r.height for r in runs}
        while new in taken:
            new = (neighbour_h + new) / 2
        return new

    for t, g in enumerate(letters):
        col = Fraction(n + t)
        i = abs(g) - 1
        if g > 0:
            mover, neighbour = positions[i], positions[i + 1]
            new = _Run(fresh(neighbour.height, True), col)
            positions[i], positions[i + 1] = neighbour, new
        else:
            mover, neighbour = positions[i + 1], positions[i]
            new = _Run(fresh(neighbour.height, False), col)
            positions[i], positions[i + 1] = new, neighbour
        mover.x_col = col
        runs.append(new)
    return runs, positions


def _assemble(runs, extra):
    """Compress rational rows/columns and emit the grid."""
    from .gridhfk import GridDiagram

    all_rows = sorted([r.height for r in runs] + [h for h, _, _ in extra])
    all_cols = sorted({r.o_col for r in runs} | {r.x_col for r in runs}
                      | {c for _, c, _ in extra} | {c for _, _, c in extra})
    row_of = {h: k for k, h in enumerate(all_rows)}
    col_of = {c: k for k, c in enumerate(all_cols)}
    size = len(all_rows)
    x_cols = [None] * size
    o_cols = [None] * size
    for run in runs:
        o_cols[col_of[run.o_col]] = row_of[run.height]
        x_cols[col_of[run.x_col]] = row_of[run.height]
    for row2, x_col, o_col in extra:
        x_cols[col_of[x_col]] = row_of[row2]
        o_cols[col_of[o_col]] = row_of[row2]
    return GridDiagram(tuple(x_cols), tuple(o_cols))


def _elbow_grid(n: int, letters: tuple[int, ...]):
    """Size n+k closure: one elbow column per strand on the left.

    Returns (grid, clean); clean is False when some closure vertical would
    cross an incoming strand's run (a wire ends below a lower strand's entry
    height), in which case the drawing does not present the braid closure.
    """
    runs, positions = _simulate(n, letters)
    clean = True
    for j in range(n):
        h_final = positions[j].height
        for i in range(j):
            # the entering run of strand i extends past column j whenever the
            # strand jumps somewhere; the closure vertical of position j
            # crosses it when the wire's final height sank below row i
            if h_final < i and runs[i].x_col is not None:
                clean = False
    for j in range(n):
        positions[j].x_col = Fraction(j)

    # degenerate closures (x_col == o_col) become 2x2 unknot blocks
    extra = []
    for run in runs:
        if run.x_col == run.o_col:
            col2 = run.o_col + Fraction(1, 2)
            heights = [r.height for r in runs] + [h for h, _, _ in extra]
            above = [h for h in heights if h > run.height]
            row2 = (run.height + min(above)) / 2 if above else run.height + 1
            run.x_col = col2
            extra.append((row2, run.o_col, col2))
    return _assemble(runs, extra), clean


def _channel_grid(n: int, letters: tuple[int, ...]):
    """Size 2n+k closure: every strand returns through a channel below the
    braid, entering from the far left and exiting to the far right.

    The return arcs cross nothing (the channel rows lie below every braid
    row and the entry/exit verticals are nested), so the drawing presents
    the braid closure for every word.
    """
    runs, positions = _simulate(n, letters)
    k = len(letters)
    bottom = min(r.height for r in runs) - 1
    extra = []
    for j in range(n):
        final = positions[j]
        entry = runs[j]
        left = Fraction(-1 - j)
        right = Fraction(n + k + j)
        channel_row = bottom - j
        final.x_col = right
        entry.o_col = left
        # channel: O below the exit vertical, X below the entry vertical
        extra.append((channel_row, left, right))
    return _assemble(runs, extra)


def braid_to_grid(b: BraidWord):
    """Grid diagram of the braid closure.

    The default drawing uses one closure column per strand and one column
    per crossing (grid size strands + letters, plus a 2x2 block per strand
    untouched by any crossing).  Words whose strands sink below lower entry
    heights cannot be closed that way; they fall back to the mirrored
    drawing, and in the last resort to a channel closure of size
    2*strands + letters that is valid for every word.
    """
    n, letters = b.strands, b.letters
    grid, clean = _elbow_grid(n, letters)
    if clean:
        return grid
    mirrored, clean = _elbow_grid(n, tuple(-g for g in letters))
    if clean:
        size = mirrored.size
        return type(mirrored)(tuple(size - 1 - r for r in mirrored.x_cols),
                              tuple(size - 1 - r for r in mirrored.o_cols))
    return _channel_grid(n, letters)
