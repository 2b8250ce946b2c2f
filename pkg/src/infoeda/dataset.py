"""Tabular data loading, validation, class partitioning, and standardization.

A dataset is an immutable N x P numeric matrix of named variables plus an
optional categorical class column. Categorical values (including the class)
are stored as dense integer codes assigned in first-appearance order, so two
loads of the same file produce bit-identical datasets.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, field

import numpy as np

CONTINUOUS = "continuous"
CATEGORICAL = "categorical"


class DatasetError(ValueError):
    """Unusable input table or invalid column request."""


@dataclass(frozen=True)
class VariableMeta:
    """Name, kind (continuous/categorical), and source-column ordinal of one variable."""

    name: str
    kind: str
    index: int


@dataclass(frozen=True, eq=False)
class ClassPartition:
    """Row indices of each class, codes listed in first-appearance order."""

    codes: tuple[int, ...]
    labels: tuple[str, ...]
    row_indices: tuple[np.ndarray, ...]
    counts: tuple[int, ...]

    @property
    def n_classes(self) -> int:
        return len(self.codes)


@dataclass(frozen=True, eq=False)
class Dataset:
    """Immutable table of n_rows x P variables plus an optional class column.

    ``matrix`` holds all non-class variables as float64 (categorical values as
    their integer codes); the class column lives separately in ``class_codes``.
    """

    variables: tuple[VariableMeta, ...]
    matrix: np.ndarray
    class_meta: VariableMeta | None = None
    class_codes: np.ndarray | None = None
    class_levels: tuple[str, ...] | None = None
    categorical_levels: dict[str, tuple[str, ...]] = field(default_factory=dict)
    n_dropped: int = 0

    def __post_init__(self):
        self.matrix.setflags(write=False)
        if self.class_codes is not None:
            self.class_codes.setflags(write=False)
        if self.n_rows < 2:
            raise DatasetError(f"need at least 2 rows, got {self.n_rows}")
        names = [v.name for v in self.variables]
        if self.class_meta is not None:
            names.append(self.class_meta.name)
        if len(set(names)) != len(names):
            raise DatasetError("variable names are not unique")

    @property
    def n_rows(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_variables(self) -> int:
        return self.matrix.shape[1]

    @property
    def variable_names(self) -> tuple[str, ...]:
        return tuple(v.name for v in self.variables)

    @classmethod
    def from_arrays(cls, names, matrix, class_name=None, class_codes=None,
                    kinds=None, class_levels=None) -> "Dataset":
        """Build a dataset from in-memory arrays (synthetic data, subsets)."""
        matrix = np.array(matrix, dtype=float, copy=True)
        if matrix.ndim != 2 or matrix.shape[1] != len(names):
            raise DatasetError("matrix shape does not match variable names")
        if not np.isfinite(matrix).all():
            raise DatasetError("matrix contains non-finite values")
        if kinds is None:
            kinds = [CONTINUOUS] * len(names)
        variables = tuple(
            VariableMeta(name=n, kind=k, index=i)
            for i, (n, k) in enumerate(zip(names, kinds))
        )
        class_meta = None
        levels = None
        if class_name is not None:
            if class_codes is None:
                raise DatasetError("class_codes required when class_name is given")
            class_codes = np.asarray(class_codes, dtype=np.int64).copy()
            if class_codes.shape != (matrix.shape[0],):
                raise DatasetError("class_codes length does not match matrix rows")
            class_meta = VariableMeta(name=class_name, kind=CATEGORICAL, index=len(names))
            if class_levels is None:
                levels = tuple(str(c) for c in range(int(class_codes.max()) + 1))
            else:
                levels = tuple(class_levels)
        return cls(variables=variables, matrix=matrix, class_meta=class_meta,
                   class_codes=class_codes, class_levels=levels)

    def column(self, name: str) -> np.ndarray:
        """Values of one variable in row order; the class column yields its codes."""
        if self.class_meta is not None and name == self.class_meta.name:
            return self.class_codes
        for j, v in enumerate(self.variables):
            if v.name == name:
                return self.matrix[:, j]
        raise DatasetError(f"unknown variable {name!r}")

    def columns(self, names) -> np.ndarray:
        """n_rows x k matrix of the named non-class variables, in the given order."""
        cols = []
        for name in names:
            if self.class_meta is not None and name == self.class_meta.name:
                raise DatasetError(f"{name!r} is the class column, not a variable")
            cols.append(self.column(name))
        return np.column_stack(cols)

    def variable(self, name: str) -> VariableMeta:
        if self.class_meta is not None and name == self.class_meta.name:
            return self.class_meta
        for v in self.variables:
            if v.name == name:
                return v
        raise DatasetError(f"unknown variable {name!r}")

    def class_label(self, code: int) -> str:
        if self.class_levels is not None and 0 <= code < len(self.class_levels):
            return self.class_levels[code]
        return str(code)

    def partition_by_class(self) -> ClassPartition:
        """Split rows by class code; every class must hold at least 2 rows."""
        if self.class_codes is None:
            raise DatasetError("dataset has no class column")
        codes = self.class_codes
        # first-appearance order of the distinct codes
        _, first_pos = np.unique(codes, return_index=True)
        ordered = codes[np.sort(first_pos)]
        if ordered.size < 2:
            raise DatasetError(
                f"class column {self.class_meta.name!r} has a single value; "
                "cannot form two classes"
            )
        rows = tuple(np.flatnonzero(codes == c) for c in ordered)
        counts = tuple(int(r.size) for r in rows)
        for c, k in zip(ordered, counts):
            if k < 2:
                raise DatasetError(
                    f"class {self.class_label(int(c))!r} has only {k} row(s); need at least 2"
                )
        return ClassPartition(
            codes=tuple(int(c) for c in ordered),
            labels=tuple(self.class_label(int(c)) for c in ordered),
            row_indices=rows,
            counts=counts,
        )

    def subset_rows(self, indices) -> "Dataset":
        """Materialize a new dataset from a row-index subset (original order kept)."""
        idx = np.asarray(indices, dtype=np.int64)
        if idx.ndim != 1 or idx.size == 0:
            raise DatasetError("row subset must be a non-empty 1-D index list")
        if idx.min() < 0 or idx.max() >= self.n_rows:
            raise DatasetError("row subset index out of range")
        if np.unique(idx).size != idx.size:
            raise DatasetError("row subset contains duplicate indices")
        idx = np.sort(idx)
        return Dataset(
            variables=self.variables,
            matrix=self.matrix[idx].copy(),
            class_meta=self.class_meta,
            class_codes=None if self.class_codes is None else self.class_codes[idx].copy(),
            class_levels=self.class_levels,
            categorical_levels=self.categorical_levels,
        )


def _is_float(token: str) -> bool:
    try:
        float(token)
    except ValueError:
        return False
    return True


def load_table(path, class_column: str | None = None, categorical=None) -> Dataset:
    """Load a headered CSV file into a Dataset.

    Rows with missing cells (empty, or non-finite in a numeric column) are
    dropped and counted in ``n_dropped``. A column is categorical if named in
    ``categorical``, if it is the class column, or if any non-empty cell fails
    to parse as a number. Categorical tokens become dense integer codes in
    first-appearance order over the surviving rows.
    """
    declared = set(categorical) if categorical else set()
    try:
        with open(path, newline="", encoding="utf-8-sig") as fh:
            reader = csv.reader(fh)
            raw = [row for row in reader if row]
    except OSError as exc:
        raise DatasetError(f"cannot read {path}: {exc}") from exc
    if not raw:
        raise DatasetError(f"{path} is empty")

    header = [name.strip() for name in raw[0]]
    if any(not name for name in header):
        raise DatasetError("header contains an empty column name")
    if len(set(header)) != len(header):
        dupes = sorted({n for n in header if header.count(n) > 1})
        raise DatasetError(f"duplicate header names: {', '.join(dupes)}")
    if class_column is not None and class_column not in header:
        raise DatasetError(f"class column {class_column!r} not found in header")
    for name in declared:
        if name not in header:
            raise DatasetError(f"categorical column {name!r} not found in header")

    ncols = len(header)
    cells = []
    for row in raw[1:]:
        row = [c.strip() for c in row]
        if len(row) < ncols:
            row = row + [""] * (ncols - len(row))  # short row: missing cells
        cells.append(row[:ncols])

    # decide column kinds: declared/class columns are categorical; otherwise a
    # column is categorical when any non-empty cell is non-numeric
    kinds = []
    for j, name in enumerate(header):
        if name in declared or name == class_column:
            kinds.append(CATEGORICAL)
            continue
        numeric = all(_is_float(row[j]) for row in cells if row[j] != "")
        kinds.append(CONTINUOUS if numeric else CATEGORICAL)

    # a row survives when every cell is present and, for numeric columns, finite
    keep = []
    for row in cells:
        ok = True
        for j in range(ncols):
            tok = row[j]
            if tok == "":
                ok = False
                break
            if kinds[j] == CONTINUOUS and not np.isfinite(float(tok)):
                ok = False
                break
        if ok:
            keep.append(row)
    n_dropped = len(cells) - len(keep)
    if len(keep) < 2:
        raise DatasetError(
            f"fewer than 2 usable rows in {path} ({n_dropped} dropped)"
        )

    code_maps: dict[str, dict[str, int]] = {}
    columns = []
    for j, name in enumerate(header):
        if kinds[j] == CONTINUOUS:
            columns.append(np.array([float(row[j]) for row in keep], dtype=float))
        else:
            mapping = code_maps.setdefault(name, {})
            out = np.empty(len(keep), dtype=np.int64)
            for i, row in enumerate(keep):
                tok = row[j]
                if tok not in mapping:
                    mapping[tok] = len(mapping)
                out[i] = mapping[tok]
            columns.append(out)

    variables = []
    feature_cols = []
    class_meta = None
    class_codes = None
    class_levels = None
    categorical_levels = {}
    for j, name in enumerate(header):
        levels = tuple(code_maps[name]) if name in code_maps else None
        if name == class_column:
            class_meta = VariableMeta(name=name, kind=CATEGORICAL, index=j)
            class_codes = columns[j]
            class_levels = levels
            if len(levels) < 2:
                raise DatasetError(
                    f"class column {name!r} has a single value; cannot form two classes"
                )
            continue
        variables.append(VariableMeta(name=name, kind=kinds[j], index=j))
        feature_cols.append(columns[j].astype(float))
        if levels is not None:
            categorical_levels[name] = levels

    if not variables:
        raise DatasetError("no variables besides the class column")
    matrix = np.column_stack(feature_cols)
    return Dataset(
        variables=tuple(variables),
        matrix=matrix,
        class_meta=class_meta,
        class_codes=class_codes,
        class_levels=class_levels,
        categorical_levels=categorical_levels,
        n_dropped=n_dropped,
    )


def standardize(matrix) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Shift/scale each column to sample mean 0, sample (N-1) standard deviation 1.

    Returns ``(standardized, shift, scale)``; ``standardized * scale + shift``
    recovers the input. Raises on a constant column.
    """
    m = np.asarray(matrix, dtype=float)
    if m.ndim == 1:
        m = m[:, None]
    if m.ndim != 2 or m.shape[1] < 1:
        raise DatasetError("expected an N x k matrix with k >= 1")
    if m.shape[0] < 2:
        raise DatasetError("standardization needs at least 2 rows")
    shift = m.mean(axis=0)
    scale = m.std(axis=0, ddof=1)
    dead = np.flatnonzero(scale == 0.0)
    if dead.size:
        raise DatasetError(f"constant column at position {int(dead[0])} (zero spread)")
    return (m - shift) / scale, shift, scale
