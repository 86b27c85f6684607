"""Scoring extracted communities against known ones.

The comparison is contingency-based: T[i][j] counts the nodes shared by
known community i and extracted community j. Sensitivity measures how
well each known community is covered by its best-matching extracted one;
positive predictive value measures how cleanly each extracted community
maps onto a single known one; accuracy is their geometric mean. The
clustering-wise values are size-weighted means (row sizes for Sn, column
sums for PPV).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import AbstractSet, Sequence

CommunitySet = Sequence[AbstractSet[str]]


@dataclass(frozen=True)
class EvaluationReport:
    """Full comparison of a known and an extracted community collection."""

    contingency: tuple[tuple[int, ...], ...]
    sn: float
    ppv: float
    acc: float
    per_known_sn: tuple[float, ...]
    per_extracted_ppv: tuple[float, ...]


def _check_communities(communities: CommunitySet, label: str) -> None:
    if not communities:
        raise ValueError(f"{label} community set is empty")
    for i, c in enumerate(communities):
        if not c:
            raise ValueError(f"{label} community {i} is empty")


def contingency_table(
    known: CommunitySet, extracted: CommunitySet
) -> tuple[tuple[int, ...], ...]:
    """T[i][j] = number of nodes shared by known_i and extracted_j."""
    return tuple(
        tuple(len(set(k) & set(e)) for e in extracted) for k in known
    )


def sensitivity(
    known: CommunitySet, extracted: CommunitySet
) -> tuple[tuple[float, ...], float]:
    """Coverage of each known community by its best-matching extracted one.

    Returns the per-known vector Sn_i = max_j T[i][j] / |known_i| and the
    clustering-wise value, weighted by known community sizes.
    """
    _check_communities(known, "known")
    _check_communities(extracted, "extracted")
    table = contingency_table(known, extracted)
    per_known = tuple(
        max(row) / len(k) for row, k in zip(table, known)
    )
    total = sum(len(k) for k in known)
    weighted = sum(len(k) * s for k, s in zip(known, per_known))
    return per_known, weighted / total


def ppv(
    known: CommunitySet, extracted: CommunitySet
) -> tuple[tuple[float, ...], float]:
    """How well each extracted community predicts a single known community.

    PPV_j = max_i T[i][j] / sum_i T[i][j] (0 for all-zero columns); the
    clustering-wise value weights columns by their sums, which reduces to
    sum_j max_i T[i][j] / sum_ij T[i][j].
    """
    _check_communities(known, "known")
    _check_communities(extracted, "extracted")
    table = contingency_table(known, extracted)
    per_extracted = []
    col_sums = []
    for j in range(len(extracted)):
        column = [table[i][j] for i in range(len(known))]
        col_sum = sum(column)
        col_sums.append(col_sum)
        per_extracted.append(max(column) / col_sum if col_sum else 0.0)
    grand = sum(col_sums)
    if grand == 0:
        return tuple(per_extracted), 0.0
    weighted = sum(c * p for c, p in zip(col_sums, per_extracted))
    return tuple(per_extracted), weighted / grand


def accuracy(sn: float, ppv_value: float) -> float:
    """Geometric mean of clustering-wise sensitivity and PPV."""
    for name, value in (("sn", sn), ("ppv", ppv_value)):
        if not (0.0 <= value <= 1.0):
            raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
    return math.sqrt(sn * ppv_value)


def evaluate(known: CommunitySet, extracted: CommunitySet) -> EvaluationReport:
    """Compute the full report: contingency, Sn, PPV and accuracy."""
    per_known, sn_value = sensitivity(known, extracted)
    per_extracted, ppv_value = ppv(known, extracted)
    return EvaluationReport(
        contingency=contingency_table(known, extracted),
        sn=sn_value,
        ppv=ppv_value,
        acc=accuracy(sn_value, ppv_value),
        per_known_sn=per_known,
        per_extracted_ppv=per_extracted,
    )
