"""Balanced multi-criteria scoring of lossless compressors.

Given per-method averages for encoding time, decoding time, and compression
ratio, this module computes normalized component scores whose magnitudes are
comparable across the three metrics, then turns any combination of them into
percentage shares that sum to 100. The method with the largest share is the
recommended compressor for that combination.

The balancing works as follows. Time scores reward small values by dividing
the column sum by each method's value, so for method ``j``::

    c_e[j] = sum(a_e) / a_e[j]
    c_d[j] = sum(a_d) / a_d[j]

The raw ratio score is the share ``a_r[j] / sum(a_r)``, which lives on a much
smaller scale than the time scores. It is rescaled by a balancing constant
``k_r = (y + z) / (2 * x)``, where ``x``, ``y``, ``z`` are the across-method
means of the raw ratio scores, ``c_e``, and ``c_d`` respectively. That aligns
the mean ratio score with the average of the two mean time scores::

    c_r[j] = k_r * a_r[j] / sum(a_r)

All sums accumulate left to right in table row order, so results are
bit-reproducible for a fixed input ordering. Ties in the final percentages
are resolved in favor of the earliest row (a strictly-greater scan).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import EmptyInput, InvalidCriteria, InvalidMetric

__all__ = [
    "Criterion",
    "CriteriaSet",
    "MethodMetrics",
    "MetricsTable",
    "ComponentScores",
    "ScoreBreakdown",
    "CombinationReport",
    "DEFAULT_COMBINATIONS",
    "average_metrics",
    "component_scores",
    "grand_totals",
    "select_optimal",
    "evaluate_all",
]


class Criterion(enum.Enum):
    """One of the three performance metrics a selection can care about."""

    ENCODE_TIME = "e"
    DECODE_TIME = "d"
    RATIO = "r"


# Canonical display/iteration order: encode, decode, ratio.
_CRITERION_ORDER = (Criterion.ENCODE_TIME, Criterion.DECODE_TIME, Criterion.RATIO)


@dataclass(frozen=True, slots=True)
class CriteriaSet:
    """A non-empty subset of {encoding time, decoding time, ratio}.

    Single-member sets are accepted; they reduce the grand total to the share
    of one component score and are flagged as an extension in reports, since
    picking a winner on one metric needs no balancing at all.
    """

    members: frozenset[Criterion]

    def __post_init__(self) -> None:
        if not self.members:
            raise InvalidCriteria("criteria set must name at least one metric")
        if not all(isinstance(m, Criterion) for m in self.members):
            raise InvalidCriteria(f"unknown criteria members: {self.members!r}")

    @classmethod
    def of(cls, *members: Criterion) -> "CriteriaSet":
        return cls(frozenset(members))

    @classmethod
    def from_token(cls, token: str) -> "CriteriaSet":
        """Build from a compact token such as ``ed``, ``dr``, ``edr`` or ``r``."""
        cleaned = token.strip().lower()
        if not cleaned:
            raise InvalidCriteria("empty criteria token")
        try:
            members = frozenset(Criterion(ch) for ch in cleaned)
        except ValueError:
            raise InvalidCriteria(
                f"criteria token {token!r} may only contain the letters e, d, r"
            ) from None
        return cls(members)

    def ordered(self) -> tuple[Criterion, ...]:
        return tuple(c for c in _CRITERION_ORDER if c in self.members)

    @property
    def token(self) -> str:
        return "".join(c.value for c in self.ordered())

    @property
    def label(self) -> str:
        """Human-facing name, e.g. ``E+D+R``."""
        return "+".join(c.value.upper() for c in self.ordered())

    @property
    def is_extension(self) -> bool:
        return len(self.members) == 1

    @classmethod
    def from_label(cls, label: str) -> "CriteriaSet":
        return cls.from_token(label.replace("+", ""))


#: The four combinations evaluated by default: the three pairs and the triple.
DEFAULT_COMBINATIONS: tuple[CriteriaSet, ...] = (
    CriteriaSet.from_token("ed"),
    CriteriaSet.from_token("er"),
    CriteriaSet.from_token("dr"),
    CriteriaSet.from_token("edr"),
)


def _require_positive(value: float, field_name: str, index: int | None = None) -> float:
    value = float(value)
    if not value > 0.0:
        where = f" at index {index}" if index is not None else ""
        raise InvalidMetric(
            f"{field_name}{where} must be > 0, got {value!r}",
            field=field_name, index=index, value=value,
        )
    return value


@dataclass(frozen=True, slots=True)
class MethodMetrics:
    """One compressor's averaged metrics: mean encode/decode seconds and mean ratio.

    Ratio is original size divided by compressed size, so larger is better;
    for the two times smaller is better. All three must be strictly positive:
    the scoring model divides by the times, and a zero ratio is meaningless.
    """

    method_id: str
    a_e: float
    a_d: float
    a_r: float

    def __post_init__(self) -> None:
        if not self.method_id:
            raise InvalidMetric("method_id must be non-empty", field="method_id")
        for name in ("a_e", "a_d", "a_r"):
            object.__setattr__(self, name, _require_positive(getattr(self, name), name))


@dataclass(frozen=True, slots=True)
class MetricsTable:
    """An ordered collection of per-method averages.

    Row order matters: it decides which of several exactly tied methods is
    reported as the winner, and it fixes the accumulation order of every sum.
    """

    rows: tuple[MethodMetrics, ...]
    source: str = "ingested"

    def __post_init__(self) -> None:
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise EmptyInput("a metrics table needs at least one method")
        seen: set[str] = set()
        for row in rows:
            if row.method_id in seen:
                raise InvalidMetric(
                    f"duplicate method_id {row.method_id!r}", field="method_id",
                    value=row.method_id,
                )
            seen.add(row.method_id)

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def method_ids(self) -> tuple[str, ...]:
        return tuple(row.method_id for row in self.rows)


@dataclass(frozen=True, slots=True)
class ComponentScores:
    """Balanced per-metric scores for one method. Higher is better on all three."""

    method_id: str
    c_e: float
    c_d: float
    c_r: float

    def for_criterion(self, criterion: Criterion) -> float:
        if criterion is Criterion.ENCODE_TIME:
            return self.c_e
        if criterion is Criterion.DECODE_TIME:
            return self.c_d
        return self.c_r


@dataclass(frozen=True, slots=True)
class ScoreBreakdown:
    """Component scores for every method plus the model's intermediates.

    ``x``, ``y``, ``z`` are the across-method means of the raw ratio share,
    ``c_e``, and ``c_d``; ``k_r`` is the ratio balancing constant derived from
    them. With ``m`` methods, ``x`` is analytically ``1/m`` because the raw
    ratio shares sum to one.
    """

    per_method: tuple[ComponentScores, ...]
    x: float
    y: float
    z: float
    k_r: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "per_method", tuple(self.per_method))
        if not self.per_method:
            raise EmptyInput("score breakdown needs at least one method")
        for cs in self.per_method:
            for name in ("c_e", "c_d", "c_r"):
                if not getattr(cs, name) > 0.0:
                    raise InvalidMetric(
                        f"{name} for {cs.method_id!r} must be > 0",
                        field=name, value=getattr(cs, name),
                    )
        m = len(self.per_method)
        if abs(self.x - 1.0 / m) > 1e-12 * m:
            raise InvalidMetric(
                f"x must equal 1/m = {1.0 / m!r}, got {self.x!r}", field="x", value=self.x
            )
        if self.k_r != (self.y + self.z) / (2.0 * self.x):
            raise InvalidMetric(
                f"k_r must equal (y + z) / (2 * x), got {self.k_r!r}",
                field="k_r", value=self.k_r,
            )

    @property
    def method_ids(self) -> tuple[str, ...]:
        return tuple(cs.method_id for cs in self.per_method)


@dataclass(frozen=True, slots=True)
class CombinationReport:
    """Grand-total percentages for one criteria combination.

    ``entries`` preserves table row order; percentages sum to 100. ``winner``
    is the earliest entry attaining the maximum share.
    """

    criteria: CriteriaSet
    entries: tuple[tuple[str, float], ...]
    winner: str
    winner_score: float

    def __post_init__(self) -> None:
        entries = tuple((str(mid), float(g)) for mid, g in self.entries)
        object.__setattr__(self, "entries", entries)
        if not entries:
            raise EmptyInput("combination report needs at least one entry")
        total = sum(g for _, g in entries)
        if abs(total - 100.0) > 1e-9 * 100.0:
            raise InvalidMetric(
                f"grand totals must sum to 100, got {total!r}", field="g", value=total
            )
        expected_winner, expected_score = select_optimal(entries)
        if self.winner != expected_winner or self.winner_score != expected_score:
            raise InvalidMetric(
                f"winner must be the first maximum entry {expected_winner!r}",
                field="winner", value=self.winner,
            )

    def score_of(self, method_id: str) -> float:
        for mid, g in self.entries:
            if mid == method_id:
                return g
        raise KeyError(method_id)


def average_metrics(
    per_file_triples: Sequence[tuple[float, float, float]],
    method_id: str = "method",
) -> MethodMetrics:
    """Average per-file (encode seconds, decode seconds, ratio) triples.

    Each metric is averaged independently with a plain arithmetic mean; in
    particular the aggregate ratio is the mean of per-file ratios, not the
    ratio of total sizes.
    """
    triples = list(per_file_triples)
    if not triples:
        raise EmptyInput("cannot average zero measurements")
    fields = ("e", "d", "r")
    for i, triple in enumerate(triples):
        for name, value in zip(fields, triple):
            if not float(value) > 0.0:
                raise InvalidMetric(
                    f"{name} at index {i} must be > 0, got {value!r}",
                    field=name, index=i, value=value,
                )
    n = len(triples)
    a_e = sum(t[0] for t in triples) / n
    a_d = sum(t[1] for t in triples) / n
    a_r = sum(t[2] for t in triples) / n
    return MethodMetrics(method_id=method_id, a_e=a_e, a_d=a_d, a_r=a_r)


def component_scores(table: MetricsTable) -> ScoreBreakdown:
    """Compute balanced per-metric scores for every method in the table."""
    rows = table.rows
    m = len(rows)
    sum_e = sum(r.a_e for r in rows)
    sum_d = sum(r.a_d for r in rows)
    sum_r = sum(r.a_r for r in rows)

    c_e = [sum_e / r.a_e for r in rows]
    c_d = [sum_d / r.a_d for r in rows]
    raw_ratio = [r.a_r / sum_r for r in rows]

    x = sum(raw_ratio) / m
    y = sum(c_e) / m
    z = sum(c_d) / m
    k_r = (y + z) / (2.0 * x)
    c_r = [k_r * share for share in raw_ratio]

    per_method = tuple(
        ComponentScores(method_id=r.method_id, c_e=ce, c_d=cd, c_r=cr)
        for r, ce, cd, cr in zip(rows, c_e, c_d, c_r)
    )
    return ScoreBreakdown(per_method=per_method, x=x, y=y, z=z, k_r=k_r)


def grand_totals(scores: ScoreBreakdown, criteria: CriteriaSet) -> CombinationReport:
    """Turn component scores into percentage shares for one combination.

    Each method's scores for the selected criteria are summed and expressed
    as a percentage of the all-method total, so shares sum to 100. Row order
    is inherited from the breakdown (and hence from the source table).
    """
    if not isinstance(criteria, CriteriaSet):
        raise InvalidCriteria(f"expected a CriteriaSet, got {criteria!r}")
    selected = criteria.ordered()
    sums = [
        sum(cs.for_criterion(c) for c in selected)
        for cs in scores.per_method
    ]
    total = sum(sums)
    entries = tuple(
        (cs.method_id, s / total * 100.0)
        for cs, s in zip(scores.per_method, sums)
    )
    winner, winner_score = select_optimal(entries)
    return CombinationReport(
        criteria=criteria, entries=entries, winner=winner, winner_score=winner_score
    )


def select_optimal(entries: Iterable[tuple[str, float]]) -> tuple[str, float]:
    """Return the (method_id, share) with the greatest share.

    Uses a strictly-greater scan, so an exact tie keeps the earliest entry.
    """
    best_id: str | None = None
    best = float("-inf")
    for method_id, g in entries:
        if g > best:
            best = g
            best_id = method_id
    if best_id is None:
        raise EmptyInput("cannot select from zero entries")
    return best_id, best


def evaluate_all(table: MetricsTable) -> list[CombinationReport]:
    """Score the table for the three pairs and the triple, in that fixed order."""
    scores = component_scores(table)
    return [grand_totals(scores, criteria) for criteria in DEFAULT_COMBINATIONS]
