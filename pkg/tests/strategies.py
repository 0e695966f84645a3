from hypothesis import strategies as st

from genexp.crystal import Tableau
from genexp.partitions import Partition


@st.composite
def partitions(draw, max_size=8, max_len=None):
    size = draw(st.integers(0, max_size))
    parts, rest = [], size
    while rest:
        cap = min(rest, parts[-1]) if parts else rest
        if max_len is not None and len(parts) == max_len:
            break
        x = draw(st.integers(1, cap))
        parts.append(x)
        rest -= x
    return Partition(parts)


@st.composite
def tableaux(draw, shape, m):
    """Random SSYT of ``shape`` over ``1..m`` (filled cell by cell, smallest legal value upward)."""
    rows = []
    for r, length in enumerate(shape):
        row = []
        for c in range(length):
            low = max(row[-1] if row else 1, rows[r - 1][c] + 1 if r else 1)
            # leave room for the cells below in this column
            below = sum(1 for rr in range(r + 1, len(shape)) if shape[rr] > c)
            high = m - below
            row.append(draw(st.integers(low, high)))
        rows.append(row)
    return Tableau(rows)
