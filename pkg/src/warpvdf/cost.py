"""Gate-count comparison of the four variable-filter architectures.

Component counts come from the reference table; per-component gate costs are not
given, so they are recovered by solving the table's own totals.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from enum import Enum

import numpy as np


class Architecture(str, Enum):
    WARPED_REF1 = "warped_ref1"
    WARPED_2ND_ORDER_REF3 = "warped_2nd_order_ref3"
    WARPED_MEMORY_REF4 = "warped_memory_ref4"
    PROPOSED = "proposed"


LABELS = {
    Architecture.WARPED_REF1: "Warped filter [1]",
    Architecture.WARPED_2ND_ORDER_REF3: "Warped, 2nd-order transform [3]",
    Architecture.WARPED_MEMORY_REF4: "Warped with memory [4]",
    Architecture.PROPOSED: "Proposed VDF",
}


@dataclass(frozen=True)
class ComponentCounts:
    multipliers: int = 0
    multiplexers_4to1: int = 0
    adders: int = 0
    memory_words: int = 0

    def __post_init__(self):
        if min(self.as_vector()) < 0:
            raise ValueError("component counts must be non-negative")

    def as_vector(self) -> np.ndarray:
        return np.array([self.multipliers, self.multiplexers_4to1, self.adders, self.memory_words], dtype=float)


@dataclass(frozen=True)
class UnitGateCosts:
    mult_gates: float
    mux_gates: float
    adder_gates: float
    memword_gates: float

    def __post_init__(self):
        if min(self.as_vector()) <= 0:
            raise ValueError("unit gate costs must be positive")

    def as_vector(self) -> np.ndarray:
        return np.array([self.mult_gates, self.mux_gates, self.adder_gates, self.memword_gates])


_TABLE = {
    Architecture.WARPED_REF1: (ComponentCounts(3125, 0, 1750, 0), 5706250),
    Architecture.WARPED_2ND_ORDER_REF3: (ComponentCounts(1375, 0, 3300, 0), 3080000),
    Architecture.WARPED_MEMORY_REF4: (ComponentCounts(825, 0, 1650, 1275), 1820750),
    Architecture.PROPOSED: (ComponentCounts(901, 600, 1800, 0), 1957700),
}


def table1_counts(arch) -> ComponentCounts:
    return _TABLE[Architecture(arch)][0]


def table1_total(arch) -> int:
    return _TABLE[Architecture(arch)][1]


@dataclass(frozen=True)
class UnitCostFit:
    costs: UnitGateCosts
    residuals: dict
    # gates lost per row if each unit cost is rounded to an integer
    integer_residuals: dict


def derive_unit_costs() -> UnitCostFit:
    """Least-squares unit costs from the four (counts -> total) rows."""
    archs = list(Architecture)
    a = np.array([table1_counts(x).as_vector() for x in archs])
    b = np.array([table1_total(x) for x in archs], dtype=float)
    if np.linalg.matrix_rank(a) < a.shape[1]:
        raise np.linalg.LinAlgError("singular component-count matrix")
    sol, *_ = np.linalg.lstsq(a, b, rcond=None)
    costs = UnitGateCosts(*(float(v) for v in sol))
    rounded = np.round(sol)
    return UnitCostFit(
        costs=costs,
        residuals={x.value: float(b[i] - a[i] @ sol) for i, x in enumerate(archs)},
        integer_residuals={x.value: float(b[i] - a[i] @ rounded) for i, x in enumerate(archs)},
    )


def total_gates(counts: ComponentCounts, unit: UnitGateCosts) -> float:
    return float(counts.as_vector() @ unit.as_vector())


def truncate_pct(pct: float) -> int:
    """Whole percent, truncated toward zero (how the reference table quotes savings)."""
    return int(pct)


def savings_vs(proposed_total: float, other_total: float) -> float:
    """Percent of ``other_total`` saved by the proposed design."""
    if proposed_total <= 0 or other_total <= 0:
        raise ValueError("totals must be positive")
    return (other_total - proposed_total) / other_total * 100.0


@dataclass(frozen=True)
class CostReport:
    architecture: str
    counts: ComponentCounts
    total_gates: float
    delta_vs_proposed_pct: float


def cost_reports(unit: UnitGateCosts | None = None) -> list[CostReport]:
    unit = unit or derive_unit_costs().costs
    proposed = total_gates(table1_counts(Architecture.PROPOSED), unit)
    out = []
    for arch in Architecture:
        counts = table1_counts(arch)
        total = total_gates(counts, unit)
        out.append(CostReport(arch.value, counts, total, savings_vs(proposed, total)))
    return out


def reports_json(reports: list[CostReport], fit: UnitCostFit | None = None) -> str:
    doc = {"architectures": [asdict(r) for r in reports]}
    if fit is not None:
        doc["unit_costs"] = asdict(fit.costs)
        doc["residuals"] = fit.residuals
        doc["integer_residuals"] = fit.integer_residuals
    return json.dumps(doc, indent=2)


def format_table(reports: list[CostReport], fit: UnitCostFit | None = None) -> str:
    names = [LABELS[Architecture(r.architecture)] for r in reports]
    w = max(len(n) for n in names)
    lines = [
        f"{'Architecture':<{w}}  {'Mult':>6} {'Mux':>6} {'Adders':>7} {'MemWords':>8} {'Total gates':>12} {'vs proposed':>17}"
    ]
    for name, r in zip(names, reports):
        c = r.counts
        delta = "" if r.architecture == Architecture.PROPOSED.value else (
            f"{truncate_pct(r.delta_vs_proposed_pct):+d}% ({r.delta_vs_proposed_pct:+.2f})"
        )
        lines.append(
            f"{name:<{w}}  {c.multipliers:>6} {c.multiplexers_4to1:>6} {c.adders:>7} {c.memory_words:>8} "
            f"{r.total_gates:>12.0f} {delta:>17}"
        )
    if fit is not None:
        u = fit.costs
        lines.append("")
        lines.append(
            f"unit gate costs: multiplier {u.mult_gates:.4f}, 4:1 mux {u.mux_gates:.4f}, "
            f"adder {u.adder_gates:.4f}, memory word {u.memword_gates:.4f}"
        )
        worst = max(fit.integer_residuals.items(), key=lambda kv: abs(kv[1]))
        if abs(worst[1]) > 0.5:
            lines.append(
                f"note: integer unit costs leave a {worst[1]:+.0f}-gate residual on {worst[0]} "
                f"(memory-word cost {u.memword_gates:.4f} is not an integer)"
            )
    return "\n".join(lines)
