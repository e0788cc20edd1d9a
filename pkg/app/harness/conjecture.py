"""Matching-number conjecture table for Γ3(P_n)."""

from typing import Optional

from app.core.config import settings
from app.core.errors import InvalidSizeError, ResourceError
from app.core.logging import get_logger
from app.graphs.graph import path_graph
from app.graphs.invariants import matching_number
from app.graphs.staircase import (
    conjecture_matching_set,
    conjectured_matching_number,
    is_matching,
    matching_edges,
    staircase_graph,
)
from app.graphs.tokens import token_graph
from app.models.schemas import ConjectureReport, ConjectureRow

logger = get_logger(__name__)

STATEMENT = (
    "alpha'(T3(P_n)) = (n^3 - 3n^2 + 2n)/12 for even n and (n^3 - 3n^2 - n + 3)/12 for odd n"
)


def conjecture_row(n: int) -> ConjectureRow:
    computed = matching_number(token_graph(path_graph(n), 3).graph)
    sg = staircase_graph(n)
    constructed = matching_edges(sg, conjecture_matching_set(n))
    formula = conjectured_matching_number(n)
    return ConjectureRow(
        n=n,
        computed=computed,
        constructed=len(constructed),
        formula=formula,
        constructed_is_matching=is_matching(constructed, sg.graph),
        computed_matches_formula=computed == formula,
        constructed_matches_formula=len(constructed) == formula,
    )


def conjecture_report(n_min: int, n_max: int, budget: Optional[int] = None) -> ConjectureReport:
    """Computed α′, constructed matching size and closed form for n_min ≤ n ≤ n_max."""
    budget = budget or settings.conjecture_budget
    if n_min < 4 or n_min > n_max:
        raise InvalidSizeError(f"need 4 <= n_min <= n_max, got {n_min}..{n_max}")
    if n_max > budget:
        raise ResourceError("conjecture_report", n_max, budget, unit="path length")
    rows = [conjecture_row(n) for n in range(n_min, n_max + 1)]
    report = ConjectureReport(statement=STATEMENT, rows=rows)
    logger.info("conjecture_report_complete", n_min=n_min, n_max=n_max, agree=report.all_agree)
    return report
