"""Jeu de taquin slides, evacuation, Lusztig involution, and the push
algorithms computing commutators of highest weight tensor products."""
from __future__ import annotations

from .core import PTableau, _pack_rows, is_partition_shaped
from .errors import (
    InternalInvariantError,
    NotHighestWeight,
    NotPartitionShaped,
    NotTensorForm,
)
from .operators import rotate
from .tensor import tensor


def _mutable(grid):
    return [list(row) for row in grid]


def inward_slide_step(grid, pos):
    """One inward slide of the blank at ``pos``.

    With content b above and c to the left, the blank swaps with b iff
    b >= c, otherwise with c; a single content neighbor is taken; with
    neither the blank is fixed.  Returns (grid, new position).
    """
    grid = _mutable(grid)
    r, c = pos
    above = grid[r - 1][c] if r > 0 else None
    left = grid[r][c - 1] if c > 0 else None
    if above is None and left is None:
        return tuple(tuple(row) for row in grid), pos
    if left is None or (above is not None and above >= left):
        grid[r][c], grid[r - 1][c] = above, None
        new = (r - 1, c)
    else:
        grid[r][c], grid[r][c - 1] = left, None
        new = (r, c - 1)
    return tuple(tuple(row) for row in grid), new


def _run_blank(grid, pos):
    """Slide one blank inward until fixed; returns (grid, path)."""
    path = [pos]
    while True:
        grid, new = inward_slide_step(grid, pos)
        if new == pos:
            return grid, tuple(path)
        pos = new
        path.append(pos)


def _active(grid, r, c):
    """A blank still awaiting evacuation: some content lies weakly northwest
    of it.  Blanks whose whole northwest quadrant is blank have already
    joined the evacuated region."""
    return any(
        grid[r2][c2] is not None for r2 in range(r + 1) for c2 in range(c + 1)
    )


def processable_corners(grid):
    """Outer corners: active blanks with no active blank immediately left or
    above (top-to-bottom, left-to-right order)."""
    corners = []
    for r, row in enumerate(grid):
        for c, v in enumerate(row):
            if v is not None or not _active(grid, r, c):
                continue
            if r > 0 and grid[r - 1][c] is None and _active(grid, r - 1, c):
                continue
            if c > 0 and grid[r][c - 1] is None and _active(grid, r, c - 1):
                continue
            corners.append((r, c))
    return corners


def evacuate_with_paths(tab: PTableau):
    """Evacuation of a partition-shaped ptableau, recording each blank's path.

    Repeatedly takes the topmost-leftmost outer corner and slides it inward
    until fixed.  The result is the anti-partition-shaped lowest weight node
    of the input's component; the outcome is independent of corner order.
    """
    if not is_partition_shaped(tab):
        raise NotPartitionShaped("evacuation requires a partition-shaped input")
    grid = tab.grid
    paths = []
    while True:
        corners = processable_corners(grid)
        if not corners:
            break
        grid, path = _run_blank(grid, corners[0])
        paths.append(path)
    rows_values = [[v for v in row if v is not None] for row in grid]
    out = PTableau._make(_pack_rows(rows_values, tab.rows), tab.content_bound)
    return out, paths


def evacuate(tab: PTableau) -> PTableau:
    return evacuate_with_paths(tab)[0]


def evacuation_as_operators(tab: PTableau):
    """Lowering-operator indices whose product equals evacuation.

    A blank path climbing from row j+1 to row i contributes f_j, f_{j-1},
    ..., f_i (in application order).
    """
    _, paths = evacuate_with_paths(tab)
    seq = []
    for path in paths:
        for (r1, _), (r2, _) in zip(path, path[1:]):
            if r2 == r1 - 1:
                seq.append(r1)  # blank row r1 -> r1-1 moves content down from row r1
    return tuple(seq)


def lusztig_involution(tab: PTableau) -> PTableau:
    """Rotation of the evacuation; defined here for highest weight inputs."""
    if not is_partition_shaped(tab):
        raise NotPartitionShaped("input must be partition shaped")
    return rotate(evacuate(tab))


# ---------------------------------------------------------------------------
# BSS perforated checks


def is_bss_perforated(grid) -> bool:
    """Ignoring blanks, rows weakly increase and columns strictly increase."""
    rows = [list(row) for row in grid]
    for row in rows:
        values = [v for v in row if v is not None]
        if any(a > b for a, b in zip(values, values[1:])):
            return False
    width = max((len(row) for row in rows), default=0)
    for c in range(width):
        values = [row[c] for row in rows if c < len(row) and row[c] is not None]
        if any(a >= b for a, b in zip(values, values[1:])):
            return False
    return True


def is_bss_pair(tagged_grid) -> bool:
    """Each tag class of a two-class grid is separately BSS perforated.

    Cells are None or (tag, value) pairs with tag in {0, 1}.
    """
    tags = {cell[0] for row in tagged_grid for cell in row if cell is not None}
    for tag in tags:
        projected = [
            [cell[1] if cell is not None and cell[0] == tag else None for cell in row]
            for row in tagged_grid
        ]
        if not is_bss_perforated(projected):
            return False
    return True


# ---------------------------------------------------------------------------
# push algorithms (commutators of highest weight tensor elements)

_MU, _NU = 0, 1


def _split_tensor(product: PTableau, mu_bound: int):
    """Extract the two tensor factors of a highest weight product."""
    if not 0 <= mu_bound <= product.content_bound:
        raise NotTensorForm("split point outside the content bound")
    if not is_partition_shaped(product):
        raise NotHighestWeight("the tensor product is not highest weight")
    left_rows = [
        [v for v in row if v <= mu_bound] for row in product.row_values()
    ]
    right_rows = [
        [v - mu_bound for v in row if v > mu_bound]
        for row in product.row_values()
    ]
    left = PTableau._make(_pack_rows(left_rows, product.rows), mu_bound)
    right = PTableau._make(
        _pack_rows(right_rows, product.rows), product.content_bound - mu_bound
    )
    if not is_partition_shaped(left):
        raise NotHighestWeight("the left tensor factor is not highest weight")
    if tensor(left, right) != product:
        raise NotTensorForm("input is not the tensor of its two content classes")
    return left, right


def _tagged_grid(product: PTableau, mu_bound: int):
    return [
        [
            None
            if v is None
            else ((_MU, v) if v <= mu_bound else (_NU, v - mu_bound))
            for v in row
        ]
        for row in product.grid
    ]


def _assemble(tagged, rows, mu_bound, nu_bound):
    rows_values = []
    for row in tagged:
        vals = []
        for cell in row:
            if cell is None:
                continue
            tag, v = cell
            vals.append(v if tag == _NU else v + nu_bound)
        vals.sort()
        rows_values.append(vals)
    return PTableau._make(_pack_rows(rows_values, rows), mu_bound + nu_bound)


def _push(product: PTableau, mu_bound: int, down: bool):
    """Shared engine for the two push algorithms; returns (result, states)."""
    left, right = _split_tensor(product, mu_bound)
    nu_bound = product.content_bound - mu_bound
    tagged = _tagged_grid(product, mu_bound)
    n = product.rows
    states = [tuple(tuple(row) for row in tagged)]

    def cells_with(tag, value):
        return [
            (r, c)
            for r in range(n)
            for c in range(len(tagged[r]))
            if tagged[r][c] == (tag, value)
        ]

    if down:
        value_order = range(mu_bound, 0, -1)
    else:
        value_order = range(1, nu_bound + 1)
    for v in value_order:
        moving_tag = _MU if down else _NU
        other_tag = _NU if down else _MU
        cells = cells_with(moving_tag, v)
        cells.sort(key=lambda rc: rc[1], reverse=down)
        for r, c in cells:
            while True:
                if down:
                    first = (r + 1, c) if r + 1 < n else None
                    second = (r, c + 1) if c + 1 < len(tagged[r]) else None
                else:
                    first = (r - 1, c) if r > 0 else None
                    second = (r, c - 1) if c > 0 else None

                def other_at(p):
                    if p is None:
                        return None
                    cell = tagged[p[0]][p[1]]
                    return cell[1] if cell is not None and cell[0] == other_tag else None

                fval, sval = other_at(first), other_at(second)
                if fval is None and sval is None:
                    break
                if fval is not None and (
                    sval is None or (fval <= sval if down else fval >= sval)
                ):
                    target = first
                else:
                    target = second
                tr, tc = target
                tagged[r][c], tagged[tr][tc] = tagged[tr][tc], tagged[r][c]
                r, c = tr, tc
                states.append(tuple(tuple(row) for row in tagged))
    result = _assemble(tagged, n, mu_bound, nu_bound)
    if not is_partition_shaped(result):
        raise InternalInvariantError("push output is not highest weight")
    return result, states


def push_down(product: PTableau, mu_bound: int) -> PTableau:
    """Push the left factor's content down through the right factor's,
    largest value first, each cell from its strip tail to its head."""
    return _push(product, mu_bound, down=True)[0]


def push_up(product: PTableau, mu_bound: int) -> PTableau:
    """Push the right factor's content up through the left factor's,
    smallest value first, each cell from its strip head to its tail."""
    return _push(product, mu_bound, down=False)[0]


def push_states(product: PTableau, mu_bound: int, down: bool = True):
    """Intermediate two-class grids of a push run (for invariant checking)."""
    return _push(product, mu_bound, down=down)[1]
