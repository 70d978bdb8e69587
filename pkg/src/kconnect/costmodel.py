"""Link-cost matrices, accumulated costs and the cost-sorted node numbering."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Mapping, Sequence, Union

Number = Union[int, float]


class CostMatrixError(ValueError):
    """Raised when a cost matrix is malformed or violates its invariants."""


@dataclass(frozen=True)
class CostMatrix:
    """Symmetric, zero-diagonal, nonnegative link-cost table.

    ``costs[i][j]`` is the cost of a link between ``labels[i]`` and
    ``labels[j]``. Values are kept as parsed (ints stay ints) so that sums
    over integer tables are exact.
    """

    labels: tuple[str, ...]
    costs: tuple[tuple[Number, ...], ...]

    def __init__(self, labels: Sequence[str], costs: Sequence[Sequence[Number]]):
        labels = tuple(str(label) for label in labels)
        rows = tuple(tuple(row) for row in costs)
        _validate(labels, rows)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "costs", rows)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def cost(self, a: str, b: str) -> Number:
        return self.costs[self.index(a)][self.index(b)]

    @classmethod
    def from_csv(cls, source: Union[str, Path, io.TextIOBase]) -> "CostMatrix":
        """Read the ``label,<L1>,...,<Ln>`` CSV layout from a path or stream."""
        if isinstance(source, (str, Path)):
            with open(source, newline="") as fh:
                return cls.parse_csv(fh.read())
        return cls.parse_csv(source.read())

    @classmethod
    def parse_csv(cls, text: str) -> "CostMatrix":
        rows = [
            [cell.strip() for cell in row]
            for row in csv.reader(io.StringIO(text))
            if row and any(cell.strip() for cell in row)
        ]
        if not rows:
            raise CostMatrixError("empty cost matrix file")
        header = rows[0]
        if header[0].lower() != "label":
            raise CostMatrixError(
                f"header must start with 'label', got {header[0]!r}"
            )
        labels = header[1:]
        if len(rows) - 1 != len(labels):
            raise CostMatrixError(
                f"header names {len(labels)} labels but found {len(rows) - 1} rows"
            )
        costs = []
        for lineno, row in enumerate(rows[1:], start=2):
            if row[0] != labels[lineno - 2]:
                raise CostMatrixError(
                    f"line {lineno}: row label {row[0]!r} does not match "
                    f"column label {labels[lineno - 2]!r}"
                )
            if len(row) - 1 != len(labels):
                raise CostMatrixError(
                    f"line {lineno}: expected {len(labels)} costs, got {len(row) - 1}"
                )
            costs.append([_parse_number(cell, row[0], labels[j]) for j, cell in enumerate(row[1:])])
        return cls(labels, costs)

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["label", *self.labels])
        for label, row in zip(self.labels, self.costs):
            writer.writerow([label, *row])
        return out.getvalue()


def _parse_number(cell: str, row: str, col: str) -> Number:
    try:
        return int(cell)
    except ValueError:
        pass
    try:
        return float(cell)
    except ValueError:
        raise CostMatrixError(
            f"entry ({row}, {col}) is not a number: {cell!r}"
        ) from None


def _validate(labels: tuple[str, ...], rows: tuple[tuple[Number, ...], ...]) -> None:
    n = len(labels)
    if n < 2:
        raise CostMatrixError(f"cost matrix needs at least 2 nodes, got {n}")
    if any(not label for label in labels):
        raise CostMatrixError("node labels must be non-empty")
    if len(set(labels)) != n:
        dupes = sorted({x for x in labels if labels.count(x) > 1})
        raise CostMatrixError(f"duplicate node labels: {', '.join(dupes)}")
    if len(rows) != n or any(len(row) != n for row in rows):
        raise CostMatrixError(f"cost matrix must be {n}x{n}")
    for i, row in enumerate(rows):
        for j, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, (int, float)):
                raise CostMatrixError(
                    f"entry ({labels[i]}, {labels[j]}) is not a number: {value!r}"
                )
            if not math.isfinite(value):
                raise CostMatrixError(
                    f"entry ({labels[i]}, {labels[j]}) is not finite: {value}"
                )
            if value < 0:
                raise CostMatrixError(
                    f"entry ({labels[i]}, {labels[j]}) is negative: {value}"
                )
        if row[i] != 0:
            raise CostMatrixError(
                f"diagonal entry ({labels[i]}, {labels[i]}) must be 0, got {row[i]}"
            )
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise CostMatrixError(
                    f"asymmetric entries ({labels[i]}, {labels[j]}) = {rows[i][j]} "
                    f"but ({labels[j]}, {labels[i]}) = {rows[j][i]}"
                )


def accumulated_costs(m: CostMatrix) -> dict[str, Number]:
    """Row sum of the cost matrix for every node label, in label order."""
    return {label: sum(row) for label, row in zip(m.labels, m.costs)}


@dataclass(frozen=True)
class Numbering:
    """Bijection between node labels and ranks ``1..n``."""

    rank: Mapping[str, int]
    inverse: Mapping[int, str]

    @classmethod
    def from_order(cls, ordered_labels: Iterable[str]) -> "Numbering":
        ordered = list(ordered_labels)
        if len(set(ordered)) != len(ordered):
            raise ValueError("numbering order contains duplicate labels")
        inverse = {i: label for i, label in enumerate(ordered, start=1)}
        return cls(rank={label: i for i, label in inverse.items()}, inverse=inverse)

    def __len__(self) -> int:
        return len(self.inverse)

    def labels_in_rank_order(self) -> list[str]:
        return [self.inverse[i] for i in range(1, len(self) + 1)]


def number_nodes(m: CostMatrix) -> Numbering:
    """Rank nodes by ascending accumulated cost.

    Ties keep the order in which labels appear in the matrix (Python's sort
    is stable), so the numbering is deterministic.
    """
    totals = accumulated_costs(m)
    return Numbering.from_order(sorted(m.labels, key=totals.__getitem__))


def numbering_table(m: CostMatrix) -> list[tuple[str, Number, int]]:
    """``(label, accumulated cost, number)`` rows in rank order."""
    totals = accumulated_costs(m)
    numbering = number_nodes(m)
    return [(label, totals[label], numbering.rank[label]) for label in numbering.labels_in_rank_order()]


def read_numbering_csv(source: Union[str, Path]) -> Numbering:
    """Load a numbering from ``label,accumulated_cost,number`` CSV rows."""
    with open(source, newline="") as fh:
        reader = csv.reader(fh)
        pairs = []
        for row in reader:
            row = [cell.strip() for cell in row]
            if not row or not any(row) or row[0] == "label":
                continue
            if len(row) < 3:
                raise ValueError(f"numbering row needs label,cost,number: {row}")
            pairs.append((int(row[2]), row[0]))
    pairs.sort()
    if [r for r, _ in pairs] != list(range(1, len(pairs) + 1)):
        raise ValueError("numbering file must assign ranks 1..n exactly once")
    return Numbering.from_order(label for _, label in pairs)
