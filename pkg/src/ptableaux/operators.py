"""Crystal raising/lowering operators on words and ptableaux.

Word operators follow the convention in which, reading left to right,
raising acts at the first position achieving the maximal running count and
lowering at the last.  Ptableau operators are single jeu-de-taquin style
swaps: raising moves the rightmost "uncovered" entry of row i+1 up into the
blank above it (computed in the left-justified two-row restriction),
lowering is the mirror image on right-justified forms.  The two models
commute through the word-to-ptableau bijection.
"""
from __future__ import annotations

from .core import (
    ParsedWord,
    PTableau,
    Word,
    _pack_rows,
    is_anti_partition_shaped,
    is_partition_shaped,
    restrict,
    right_justify,
)
from .errors import InternalInvariantError


def _check_index(i: int, rank: int):
    if not 1 <= i <= rank - 1:
        raise ValueError(f"operator index {i} outside [1..{rank - 1}]")


# ---------------------------------------------------------------------------
# word operators


def _raise_letters(letters, i):
    """Position to change for raising, or None."""
    best = None
    best_j = None
    cur = 0
    prev_phi = 0
    for j, a in enumerate(letters):
        cur += (1 if a == i + 1 else 0) - prev_phi
        prev_phi = 1 if a == i else 0
        if best is None or cur > best:
            best = cur
            best_j = j
    if best is None or best <= 0:
        return None
    return best_j


def _lower_letters(letters, i):
    """Position to change for lowering, or None."""
    best = None
    best_j = None
    cur = 0
    prev_eps = 0
    for j in range(len(letters) - 1, -1, -1):
        a = letters[j]
        cur += (1 if a == i else 0) - prev_eps
        prev_eps = 1 if a == i + 1 else 0
        if best is None or cur > best:
            best = cur
            best_j = j
    if best is None or best <= 0:
        return None
    return best_j


def word_raising(word, i: int):
    """Change the selected i+1 into an i, or None when undefined."""
    pw = None
    if isinstance(word, ParsedWord):
        pw, word = word, word.word
    _check_index(i, word.rank)
    j = _raise_letters(word.letters, i)
    if j is None:
        return None
    if word.letters[j] != i + 1:
        raise InternalInvariantError("raising selected a letter that is not i+1")
    letters = word.letters[:j] + (i,) + word.letters[j + 1 :]
    out = Word(word.rank, letters)
    return ParsedWord(out, pw.cuts) if pw is not None else out


def word_lowering(word, i: int):
    """Change the selected i into an i+1, or None when undefined."""
    pw = None
    if isinstance(word, ParsedWord):
        pw, word = word, word.word
    _check_index(i, word.rank)
    j = _lower_letters(word.letters, i)
    if j is None:
        return None
    if word.letters[j] != i:
        raise InternalInvariantError("lowering selected a letter that is not i")
    letters = word.letters[:j] + (i + 1,) + word.letters[j + 1 :]
    out = Word(word.rank, letters)
    return ParsedWord(out, pw.cuts) if pw is not None else out


def word_epsilon(word, i: int) -> int:
    if isinstance(word, ParsedWord):
        word = word.word
    _check_index(i, word.rank)
    best = 0
    cur = 0
    prev_phi = 0
    for a in word.letters:
        cur += (1 if a == i + 1 else 0) - prev_phi
        prev_phi = 1 if a == i else 0
        best = max(best, cur)
    return best


def word_phi(word, i: int) -> int:
    if isinstance(word, ParsedWord):
        word = word.word
    _check_index(i, word.rank)
    best = 0
    cur = 0
    prev_eps = 0
    for j in range(len(word.letters) - 1, -1, -1):
        a = word.letters[j]
        cur += (1 if a == i else 0) - prev_eps
        prev_eps = 1 if a == i + 1 else 0
        best = max(best, cur)
    return best


# ---------------------------------------------------------------------------
# ptableau operators


def _move_cell(tab: PTableau, from_row: int, ordinal: int, to_row: int, col: int):
    """Move the ordinal-th content cell of ``from_row`` into ``to_row`` at the
    slot determined by ``col``, then re-canonicalize (rows are 0-based)."""
    rows_values = tab.row_values()
    value = rows_values[from_row].pop(ordinal)
    dest_pos = sum(1 for c in range(col) if tab.grid[to_row][c] is not None)
    rows_values[to_row].insert(dest_pos, value)
    return PTableau._make(_pack_rows(rows_values, tab.rows), tab.content_bound)


def ptab_raising(tab: PTableau, i: int):
    """Swap the rightmost uncovered entry of row i+1 with the blank above."""
    _check_index(i, tab.rows)
    two = restrict(tab, i)
    ordinal = None
    seen = -1
    for c in range(two.cols):
        if two.grid[1][c] is not None:
            seen += 1
            if two.grid[0][c] is None:
                ordinal = seen
    if ordinal is None:
        return None
    count = -1
    for col in range(tab.cols):
        if tab.grid[i][col] is not None:
            count += 1
            if count == ordinal:
                if tab.grid[i - 1][col] is not None:
                    raise InternalInvariantError("target cell is covered")
                return _move_cell(tab, i, ordinal, i - 1, col)
    raise InternalInvariantError("restricted cell missing from tableau")


def ptab_lowering(tab: PTableau, i: int):
    """Swap the leftmost entry of row i with a blank below, in right-justified
    coordinates."""
    _check_index(i, tab.rows)
    two_star = right_justify(restrict(tab, i).grid)
    ordinal = None
    seen = -1
    for c in range(len(two_star[0]) if two_star else 0):
        if two_star[0][c] is not None:
            seen += 1
            if two_star[1][c] is None and ordinal is None:
                ordinal = seen
    if ordinal is None:
        return None
    star = right_justify(tab.grid)
    count = -1
    for col in range(tab.cols):
        if star[i - 1][col] is not None:
            count += 1
            if count == ordinal:
                if star[i][col] is not None:
                    raise InternalInvariantError("target cell has content below")
                rows_values = [
                    [v for v in row if v is not None] for row in star
                ]
                value = rows_values[i - 1].pop(ordinal)
                dest = sum(1 for c in range(col) if star[i][c] is not None)
                rows_values[i].insert(dest, value)
                return PTableau._make(
                    _pack_rows(rows_values, tab.rows), tab.content_bound
                )
    raise InternalInvariantError("restricted cell missing from tableau")


def ptab_epsilon(tab: PTableau, i: int) -> int:
    """Blanks in row i of the two-row restriction."""
    _check_index(i, tab.rows)
    two = restrict(tab, i)
    return two.cols - sum(1 for v in two.grid[0] if v is not None)


def ptab_phi(tab: PTableau, i: int) -> int:
    """Blanks in row i+1 of the two-row restriction."""
    _check_index(i, tab.rows)
    two = restrict(tab, i)
    return two.cols - sum(1 for v in two.grid[1] if v is not None)


# ---------------------------------------------------------------------------
# dispatch over both models


def raising_operator(obj, i: int):
    if isinstance(obj, PTableau):
        return ptab_raising(obj, i)
    return word_raising(obj, i)


def lowering_operator(obj, i: int):
    if isinstance(obj, PTableau):
        return ptab_lowering(obj, i)
    return word_lowering(obj, i)


def epsilon(obj, i: int) -> int:
    if isinstance(obj, PTableau):
        return ptab_epsilon(obj, i)
    return word_epsilon(obj, i)


def phi(obj, i: int) -> int:
    if isinstance(obj, PTableau):
        return ptab_phi(obj, i)
    return word_phi(obj, i)


def _rank_of(obj) -> int:
    if isinstance(obj, PTableau):
        return obj.rows
    if isinstance(obj, ParsedWord):
        return obj.rank
    return obj.rank


def is_highest_weight(obj) -> bool:
    """All raising operators return None; for ptableaux, partition shaped."""
    if isinstance(obj, PTableau):
        return is_partition_shaped(obj)
    return all(
        word_raising(obj, i) is None for i in range(1, _rank_of(obj))
    )


def is_lowest_weight(obj) -> bool:
    if isinstance(obj, PTableau):
        return is_anti_partition_shaped(obj)
    return all(
        word_lowering(obj, i) is None for i in range(1, _rank_of(obj))
    )


def to_highest_weight(obj):
    """Apply raising operators (smallest index first) to exhaustion.

    Returns the highest weight element and the index sequence applied.
    """
    seq = []
    rank = _rank_of(obj)
    changed = True
    while changed:
        changed = False
        for i in range(1, rank):
            nxt = raising_operator(obj, i)
            if nxt is not None:
                obj = nxt
                seq.append(i)
                changed = True
                break
    return obj, tuple(seq)


def to_lowest_weight(obj):
    """Apply lowering operators (smallest index first) to exhaustion."""
    seq = []
    rank = _rank_of(obj)
    changed = True
    while changed:
        changed = False
        for i in range(1, rank):
            nxt = lowering_operator(obj, i)
            if nxt is not None:
                obj = nxt
                seq.append(i)
                changed = True
                break
    return obj, tuple(seq)


# ---------------------------------------------------------------------------
# rotation


def rotate(tab: PTableau) -> PTableau:
    """180-degree rotation with content t replaced by bound + 1 - t."""
    bound = tab.content_bound
    rotated = tuple(
        tuple(None if v is None else bound + 1 - v for v in reversed(row))
        for row in reversed(tab.grid)
    )
    rows_values = [[v for v in row if v is not None] for row in rotated]
    return PTableau._make(_pack_rows(rows_values, tab.rows), bound)


def rotate_word(word):
    """Reverse the word and complement each letter within the rank."""
    if isinstance(word, ParsedWord):
        inner = rotate_word(word.word)
        k = len(inner)
        cuts = tuple(sorted(k - c for c in word.cuts))
        return ParsedWord(inner, cuts)
    n = word.rank
    return Word(n, tuple(n + 1 - a for a in reversed(word.letters)))


def apply_ops(obj, ops):
    """Apply a sequence like [("e", 2), ("f", 1)] left to right; None is
    absorbing."""
    for kind, i in ops:
        if obj is None:
            return None
        obj = raising_operator(obj, i) if kind == "e" else lowering_operator(obj, i)
    return obj
