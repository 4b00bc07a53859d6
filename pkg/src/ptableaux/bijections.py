"""Bijections among parsed words, biwords, matrices, ptableaux and RSK pairs."""
from __future__ import annotations


from .core import (
    ParsedWord,
    PTableau,
    Word,
    _pack_rows,
    minimal_parsing,
)
from .errors import BiwordInvalid


class Biword:
    """Two-line array with weakly increasing top row and bottoms weakly
    decreasing under a constant top entry."""

    __slots__ = ("top_rank", "bottom_rank", "columns")

    def __init__(self, top_rank: int, bottom_rank: int, columns):
        columns = tuple((int(a), int(b)) for a, b in columns)
        for a, b in columns:
            if not 1 <= a <= top_rank:
                raise BiwordInvalid(f"top entry {a} outside [1..{top_rank}]")
            if not 1 <= b <= bottom_rank:
                raise BiwordInvalid(f"bottom entry {b} outside [1..{bottom_rank}]")
        for (a1, b1), (a2, b2) in zip(columns, columns[1:]):
            if a1 > a2:
                raise BiwordInvalid("top row not weakly increasing")
            if a1 == a2 and b1 < b2:
                raise BiwordInvalid(
                    "bottom row not weakly decreasing under constant top"
                )
        self.top_rank = top_rank
        self.bottom_rank = bottom_rank
        self.columns = columns

    def __len__(self):
        return len(self.columns)

    def __eq__(self, other):
        return (
            isinstance(other, Biword)
            and self.top_rank == other.top_rank
            and self.bottom_rank == other.bottom_rank
            and self.columns == other.columns
        )

    def __hash__(self):
        return hash((self.top_rank, self.bottom_rank, self.columns))

    def __repr__(self):
        return f"Biword({self.to_text()!r})"

    def top(self):
        return tuple(a for a, _ in self.columns)

    def bottom(self):
        return tuple(b for _, b in self.columns)

    @classmethod
    def from_text(cls, text: str, top_rank=None, bottom_rank=None):
        """Two lines of space-separated integers."""
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        if len(lines) != 2:
            raise BiwordInvalid("expected two lines")
        top = [int(t) for t in lines[0].split()]
        bottom = [int(t) for t in lines[1].split()]
        if len(top) != len(bottom):
            raise BiwordInvalid("rows have different lengths")
        if top_rank is None:
            top_rank = max(top, default=0)
        if bottom_rank is None:
            bottom_rank = max(bottom, default=0)
        return cls(top_rank, bottom_rank, zip(top, bottom))

    def to_text(self) -> str:
        return (
            " ".join(str(a) for a in self.top())
            + "\n"
            + " ".join(str(b) for b in self.bottom())
        )

    def to_json_obj(self):
        return {
            "topRank": self.top_rank,
            "bottomRank": self.bottom_rank,
            "columns": [list(col) for col in self.columns],
        }


class NNMatrix:
    """Matrix of non-negative integers."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = tuple(tuple(int(x) for x in row) for row in entries)
        widths = {len(row) for row in entries}
        if len(widths) > 1:
            raise ValueError("matrix is not rectangular")
        for row in entries:
            for x in row:
                if x < 0:
                    raise ValueError("negative entry")
        self.entries = entries
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0

    def transpose(self) -> "NNMatrix":
        return NNMatrix(zip(*self.entries)) if self.entries else NNMatrix(())

    def __eq__(self, other):
        return isinstance(other, NNMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"NNMatrix({self.entries!r})"

    @classmethod
    def from_text(cls, text: str):
        return cls(
            [int(t) for t in line.split()]
            for line in text.strip().splitlines()
            if line.strip()
        )

    def to_text(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)

    def to_json_obj(self):
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [list(row) for row in self.entries],
        }


class SSYTPair:
    """An insertion/recording pair of equal-shape semistandard tableaux."""

    __slots__ = ("insertion", "recording")

    def __init__(self, insertion: PTableau, recording: PTableau):
        from .core import is_partition_shaped, shape

        if not (is_partition_shaped(insertion) and is_partition_shaped(recording)):
            raise ValueError("both tableaux must be partition shaped")
        if shape(insertion) != shape(recording):
            raise ValueError("tableaux have different shapes")
        self.insertion = insertion
        self.recording = recording

    @property
    def shape(self):
        from .core import shape

        return shape(self.insertion)

    def __eq__(self, other):
        return (
            isinstance(other, SSYTPair)
            and self.insertion == other.insertion
            and self.recording == other.recording
        )

    def __hash__(self):
        return hash((self.insertion, self.recording))

    def __repr__(self):
        return f"SSYTPair(P={self.insertion.to_text()!r}, Q={self.recording.to_text()!r})"


# ---------------------------------------------------------------------------
# words <-> ptableaux


def ptableau_from_word(pw, rows: int | None = None) -> PTableau:
    """Build the left-justified ptableau of a parsed word.

    Factor s contributes the horizontal strip of s's; the letters name the
    rows, filled bottom-up with each cell as far left as the conditions
    allow.  A plain :class:`Word` is given its minimal parsing.
    """
    if isinstance(pw, Word):
        pw = minimal_parsing(pw)
    n = pw.rank if rows is None else rows
    rows_values: list[list[int]] = [[] for _ in range(n)]
    for s, factor in enumerate(pw.factors, start=1):
        for letter in factor:
            rows_values[letter - 1].append(s)
    grid = _pack_rows(rows_values, n)
    return PTableau._make(grid, pw.num_factors)


def word_from_ptableau(tab: PTableau) -> ParsedWord:
    """Inverse of :func:`ptableau_from_word`: read each strip head to tail."""
    letters: list[int] = []
    cuts: list[int] = []
    for v in range(1, tab.content_bound + 1):
        for r, _ in tab.cells_of(v):
            letters.append(r + 1)
        if v < tab.content_bound:
            cuts.append(len(letters))
    return ParsedWord(Word(tab.rows, letters), cuts)


# ---------------------------------------------------------------------------
# biwords and matrices


def biword_from_parsed(pw: ParsedWord) -> Biword:
    """Write a string of i's over the i-th factor (empty factors contribute
    no columns, so their label is skipped)."""
    columns = []
    for s, factor in enumerate(pw.factors, start=1):
        for letter in factor:
            columns.append((s, letter))
    return Biword(pw.num_factors, pw.rank, columns)


def parsed_from_biword(bw: Biword) -> ParsedWord:
    factors: list[list[int]] = [[] for _ in range(bw.top_rank)]
    for a, b in bw.columns:
        factors[a - 1].append(b)
    letters = [b for f in factors for b in f]
    cuts = []
    pos = 0
    for f in factors[:-1]:
        pos += len(f)
        cuts.append(pos)
    return ParsedWord(Word(bw.bottom_rank, letters), cuts)


def matrix_from_biword(bw: Biword) -> NNMatrix:
    """entry (i, j) counts how many times i appears over j."""
    m = [[0] * bw.bottom_rank for _ in range(bw.top_rank)]
    for a, b in bw.columns:
        m[a - 1][b - 1] += 1
    return NNMatrix(m)


def biword_from_matrix(mat: NNMatrix) -> Biword:
    columns = []
    for i in range(mat.rows):
        for j in range(mat.cols - 1, -1, -1):
            columns.extend([(i + 1, j + 1)] * mat.entries[i][j])
    return Biword(mat.rows, mat.cols, columns)


def matrix_from_ptableau(tab: PTableau) -> NNMatrix:
    """entry (i, j) counts the i's in row j; agrees with the biword route."""
    m = [[0] * tab.rows for _ in range(tab.content_bound)]
    for r, row in enumerate(tab.grid):
        for v in row:
            if v is not None:
                m[v - 1][r] += 1
    return NNMatrix(m)


def dual(tab: PTableau) -> PTableau:
    """The dual ptableau: row i of the input, read right to left, names the
    rows of the i-strip of the output.  An involution; its matrix is the
    transpose of the input's."""
    factors = [list(reversed(row)) for row in tab.row_values()]
    letters = [v for f in factors for v in f]
    cuts = []
    pos = 0
    for f in factors[:-1]:
        pos += len(f)
        cuts.append(pos)
    pw = ParsedWord(Word(tab.content_bound, letters), cuts)
    return ptableau_from_word(pw, rows=tab.content_bound)


# ---------------------------------------------------------------------------
# RSK


def rsk(bw: Biword) -> SSYTPair:
    """Column insertion of the bottom word, left to right, recording with the
    top word.

    Each letter enters column 1; in each column it bumps the topmost entry
    that is >= it, and settles at the bottom of the first column whose
    entries are all smaller.  This variant keeps the recording tableau
    constant along crystal components (the convention is pinned by tests).
    """
    cols_p: list[list[int]] = []
    cols_q: list[list[int]] = []
    for a, b in bw.columns:
        x = b
        c = 0
        while True:
            if c == len(cols_p):
                cols_p.append([x])
                cols_q.append([a])
                break
            col = cols_p[c]
            bumped = None
            for idx, y in enumerate(col):
                if y >= x:
                    bumped = y
                    col[idx] = x
                    break
            if bumped is None:
                col.append(x)
                cols_q[c].append(a)
                break
            x = bumped
            c += 1
    def to_tab(cols, n_rows, bound):
        rows_values = [[] for _ in range(n_rows)]
        for col in cols:
            for r, v in enumerate(col):
                rows_values[r].append(v)
        for row in rows_values:
            row.sort()
        return PTableau._make(_pack_rows(rows_values, n_rows), bound)

    p = to_tab(cols_p, bw.bottom_rank, bw.bottom_rank)
    q = to_tab(cols_q, bw.top_rank, bw.top_rank)
    return SSYTPair(p, q)


def longest_weakly_decreasing(word) -> int:
    """Length of the longest weakly decreasing subword (dynamic program)."""
    if isinstance(word, ParsedWord):
        word = word.word
    letters = word.letters
    best = [0] * len(letters)
    for i, v in enumerate(letters):
        best[i] = 1 + max(
            (best[j] for j in range(i) if letters[j] >= v), default=0
        )
    return max(best, default=0)
