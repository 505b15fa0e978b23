"""Hook-valued and mixed tableaux: validity, weights and classification.

A hook-valued tableau fills a partition shape with semistandard hooks
(hook entry h, weakly increasing arm h <= A1 <= ..., strictly increasing
leg h < L1 < ...), weakly increasing along rows and strictly increasing up
columns when comparing whole cells.  A mixed tableau fills a skew shape
with symbols alpha_k (k > 0) or beta_k (k any integer).
"""

from __future__ import annotations

from typing import Iterator, NamedTuple

from .polynomials import Monomial
from .shapes import (
    Cell,
    Partition,
    check_skew,
    contains,
    content,
    is_partition,
    part,
    skew_cells,
)


class NonpositiveBetaIndex(ValueError):
    """A beta entry with index <= 0 has no weight."""


class HookCell:
    """One cell of a hook-valued tableau."""

    __slots__ = ("hook", "arms", "legs")

    def __init__(self, hook: int, arms=(), legs=()):
        self.hook = hook
        self.arms = tuple(arms)
        self.legs = tuple(legs)

    def is_valid_hook(self) -> bool:
        vals = (self.hook,) + self.arms + self.legs
        if any(not isinstance(v, int) or v < 1 for v in vals):
            return False
        if any(a > b for a, b in zip(self.arms, self.arms[1:])):
            return False
        if any(a >= b for a, b in zip(self.legs, self.legs[1:])):
            return False
        if self.arms and self.arms[0] < self.hook:
            return False
        if self.legs and self.legs[0] <= self.hook:
            return False
        return True

    def entries(self) -> tuple[int, ...]:
        return (self.hook,) + self.arms + self.legs

    @property
    def max_entry(self) -> int:
        return max(self.entries())

    @property
    def min_entry(self) -> int:
        return min(self.entries())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HookCell)
            and self.hook == other.hook
            and self.arms == other.arms
            and self.legs == other.legs
        )

    def __hash__(self) -> int:
        return hash((self.hook, self.arms, self.legs))

    def __repr__(self) -> str:
        return f"HookCell({self.hook}, {self.arms}, {self.legs})"


class HookValuedTableau:
    """Immutable grid of hook cells, rows stored bottom-up."""

    __slots__ = ("rows",)

    def __init__(self, rows=()):
        self.rows = tuple(tuple(row) for row in rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(row) for row in self.rows)

    def cell(self, r: int, c: int) -> HookCell:
        return self.rows[r - 1][c - 1]

    def cell_at(self, r: int, c: int) -> HookCell | None:
        if 1 <= r <= len(self.rows) and 1 <= c <= len(self.rows[r - 1]):
            return self.rows[r - 1][c - 1]
        return None

    def cells(self) -> Iterator[tuple[Cell, HookCell]]:
        for r, row in enumerate(self.rows, 1):
            for c, cell in enumerate(row, 1):
                yield (r, c), cell

    @property
    def num_cells(self) -> int:
        return sum(len(row) for row in self.rows)

    @property
    def arm_excess(self) -> int:
        return sum(len(cell.arms) for _, cell in self.cells())

    @property
    def leg_excess(self) -> int:
        return sum(len(cell.legs) for _, cell in self.cells())

    def entry_multiset(self) -> tuple[int, ...]:
        out = []
        for _, cell in self.cells():
            out.extend(cell.entries())
        return tuple(sorted(out))

    def replace(self, r: int, c: int, cell: HookCell) -> "HookValuedTableau":
        rows = [list(row) for row in self.rows]
        rows[r - 1][c - 1] = cell
        return HookValuedTableau(rows)

    def add_cell(self, at: Cell, cell: HookCell) -> "HookValuedTableau":
        """Grow the shape by one cell; the result must still be a partition."""
        r, c = at
        rows = [list(row) for row in self.rows]
        if r == len(rows) + 1:
            rows.append([])
        if not (1 <= r <= len(rows) and c == len(rows[r - 1]) + 1):
            raise ValueError(f"cannot add cell at {at}")
        rows[r - 1].append(cell)
        grown = HookValuedTableau(rows)
        if not is_partition(grown.shape):
            raise ValueError(f"adding cell at {at} breaks the partition shape")
        return grown

    def __eq__(self, other) -> bool:
        return isinstance(other, HookValuedTableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        from .textform import serialize_hvt

        return f"HookValuedTableau({serialize_hvt(self)!r})"


def hvt_violations(T: HookValuedTableau) -> list[tuple]:
    """Every violated hook-valued-tableau condition with its witnesses.

    Violations are tuples: ("HookShapeViolation", cell),
    ("RowViolation", cell, right_cell), ("ColumnViolation", cell, upper_cell)
    and ("DomainMismatch", shape) when the row lengths fail to be a partition.
    """
    out: list[tuple] = []
    if not is_partition(T.shape):
        out.append(("DomainMismatch", T.shape))
    for (r, c), cell in T.cells():
        if not cell.is_valid_hook():
            out.append(("HookShapeViolation", (r, c)))
    for (r, c), cell in T.cells():
        right = T.cell_at(r, c + 1)
        if right is not None and cell.max_entry > right.min_entry:
            out.append(("RowViolation", (r, c), (r, c + 1)))
        above = T.cell_at(r + 1, c)
        if above is not None and cell.max_entry >= above.min_entry:
            out.append(("ColumnViolation", (r, c), (r + 1, c)))
    return out


def validate_hvt(shape, raw_cells) -> tuple[HookValuedTableau | None, list[tuple]]:
    """Assemble a tableau from a cell map, reporting all violations.

    Returns (tableau, []) when valid, else (None, violations).  The cell map
    must cover exactly the cells of shape, otherwise a single DomainMismatch
    is reported.
    """
    shape = tuple(shape)
    if not is_partition(shape) and shape != ():
        return None, [("DomainMismatch", shape)]
    wanted = {(r, c) for r, width in enumerate(shape, 1) for c in range(1, width + 1)}
    if set(raw_cells) != wanted:
        return None, [("DomainMismatch", shape)]
    rows = [
        [raw_cells[(r, c)] for c in range(1, width + 1)]
        for r, width in enumerate(shape, 1)
    ]
    T = HookValuedTableau(rows)
    bad = hvt_violations(T)
    return (T, []) if not bad else (None, bad)


def is_valid_hvt(T: HookValuedTableau) -> bool:
    return not hvt_violations(T)


def weight_hvt(T: HookValuedTableau) -> Monomial:
    """alpha_i per arm entry in column i, beta_i per leg entry in row i,
    x_i per occurrence of the value i."""
    a: dict[int, int] = {}
    b: dict[int, int] = {}
    x: dict[int, int] = {}
    for (r, c), cell in T.cells():
        if cell.arms:
            a[c] = a.get(c, 0) + len(cell.arms)
        if cell.legs:
            b[r] = b.get(r, 0) + len(cell.legs)
        for v in cell.entries():
            x[v] = x.get(v, 0) + 1
    return Monomial(x=x, a=a, b=b)


# ---------------------------------------------------------------------------
# Mixed tableaux


class MixedEntry(NamedTuple):
    kind: str  # "a" or "b"
    index: int


def alpha(k: int) -> MixedEntry:
    if k <= 0:
        raise ValueError(f"alpha index must be positive, got {k}")
    return MixedEntry("a", k)


def beta(k: int) -> MixedEntry:
    return MixedEntry("b", k)


class MixedTableau:
    """Skew-shaped filling by alpha/beta symbols; immutable."""

    __slots__ = ("outer", "inner", "entries", "_key")

    def __init__(self, outer, inner, entries):
        outer, inner = check_skew(outer, inner)
        wanted = set(skew_cells(outer, inner))
        entries = dict(entries)
        if set(entries) != wanted:
            raise ValueError("entries must fill the skew shape exactly")
        for e in entries.values():
            if e.kind not in ("a", "b") or (e.kind == "a" and e.index <= 0):
                raise ValueError(f"bad mixed entry {e}")
        self.outer = outer
        self.inner = inner
        self.entries = entries
        self._key = (outer, inner, tuple(sorted(entries.items())))

    def entry(self, r: int, c: int) -> MixedEntry | None:
        """The entry at (r, c); None for inner cells and cells outside outer."""
        return self.entries.get((r, c))

    def cells(self) -> list[Cell]:
        return sorted(self.entries)

    @property
    def num_cells(self) -> int:
        return len(self.entries)

    def swapped(self, p: Cell, q: Cell) -> "MixedTableau":
        entries = dict(self.entries)
        entries[p], entries[q] = entries[q], entries[p]
        return MixedTableau(self.outer, self.inner, entries)

    def with_entries(self, entries) -> "MixedTableau":
        return MixedTableau(self.outer, self.inner, entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, MixedTableau) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        from .textform import serialize_mixed

        return f"MixedTableau({serialize_mixed(self)!r})"


def weight_mixed(T: MixedTableau) -> Monomial:
    """Product of the entry symbols; defined only when all beta indices are
    positive (flagged-mixed tableaux always qualify)."""
    a: dict[int, int] = {}
    b: dict[int, int] = {}
    for e in T.entries.values():
        if e.kind == "a":
            a[e.index] = a.get(e.index, 0) + 1
        else:
            if e.index <= 0:
                raise NonpositiveBetaIndex(f"beta_{e.index} has no weight")
            b[e.index] = b.get(e.index, 0) + 1
    return Monomial(a=a, b=b)


class StrictnessFlags(NamedTuple):
    alpha_column_strict: bool
    alpha_row_strict: bool
    beta_column_strict: bool
    beta_row_strict: bool
    totally_column_strict: bool
    sorted_alpha_beta: bool
    sorted_beta_alpha: bool
    flagged_mixed: bool


def _gamma_strict(items: list[tuple[Cell, int]], same_axis: int) -> bool:
    # (1) an index weakly southwest of another must be at least as large;
    # (2) no repeated index in one column (axis 1) resp. row (axis 0)
    for (p, i) in items:
        for (q, j) in items:
            if p != q and p[0] <= q[0] and p[1] <= q[1] and i < j:
                return False
    seen = set()
    for ((r, c), i) in items:
        key = (c if same_axis == 1 else r, i)
        if key in seen:
            return False
        seen.add(key)
    return True


def _totally_column_strict(T: MixedTableau) -> bool:
    for (r, c), e in T.entries.items():
        above = T.entry(r + 1, c)
        if above is not None and not e.index > above.index:
            return False
        right = T.entry(r, c + 1)
        if right is not None and not e.index >= right.index:
            return False
    return True


def _is_sorted(T: MixedTableau, first_kind: str) -> bool:
    """True iff the first_kind cells form nu/inner and the others outer/nu."""
    nu = []
    for r, width in enumerate(T.outer, 1):
        lo = part(T.inner, r)
        block = [c for c in range(lo + 1, width + 1)
                 if T.entries[(r, c)].kind == first_kind]
        if block != list(range(lo + 1, lo + 1 + len(block))):
            return False
        nu.append(lo + len(block))
    return all(nu[i] >= nu[i + 1] for i in range(len(nu) - 1))


def _is_flagged(T: MixedTableau) -> bool:
    for (r, c), e in T.entries.items():
        bound = c if e.kind == "a" else r
        if not 0 < e.index < bound:
            return False
    return True


def classify_mixed(T: MixedTableau) -> StrictnessFlags:
    """Evaluate all strictness/sortedness/flag predicates on a mixed tableau."""
    alphas = [(p, e.index) for p, e in T.entries.items() if e.kind == "a"]
    betas = [(p, e.index) for p, e in T.entries.items() if e.kind == "b"]
    return StrictnessFlags(
        alpha_column_strict=_gamma_strict(alphas, 1),
        alpha_row_strict=_gamma_strict(alphas, 0),
        beta_column_strict=_gamma_strict(betas, 1),
        beta_row_strict=_gamma_strict(betas, 0),
        totally_column_strict=_totally_column_strict(T),
        sorted_alpha_beta=_is_sorted(T, "a"),
        sorted_beta_alpha=_is_sorted(T, "b"),
        flagged_mixed=_is_flagged(T),
    )


def c_beta_shift(T: MixedTableau, sign: str) -> MixedTableau:
    """Replace each beta_r in a cell of content c by beta_{r+c} ("+") or
    beta_{r-c} ("-"); alpha entries are untouched."""
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    entries = {}
    for cell, e in T.entries.items():
        if e.kind == "b":
            c = content(cell)
            entries[cell] = beta(e.index + c if sign == "+" else e.index - c)
        else:
            entries[cell] = e
    return MixedTableau(T.outer, T.inner, entries)


def is_exquisite(T: MixedTableau) -> bool:
    """Flagged-mixed with totally column-strict positive beta shift."""
    if not _is_flagged(T):
        return False
    return _totally_column_strict(c_beta_shift(T, "+"))
