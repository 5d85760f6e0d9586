"""
Brute-force enumeration of the feasible design space and per-ratio-bin
cost minimization.

Every admissible decision vector (N_s, N_p, N_r, m, n_p) is generated
in a fixed lexicographic order, evaluated for efficiency, face width,
and full actuator mass, and scored with

    cost = K_m * actuator_mass - K_e * efficiency

The reduction-ratio axis is partitioned into half-open bins (default
[5,6) ... [14,15)) and the cheapest feasible design per bin and
architecture is reported. Ties break deterministically: lower mass,
then higher efficiency, then lexicographic (m, n_p, N_s, N_p).

Evaluation is embarrassingly parallel; the reduction is an associative
min-by-key fold, so results are identical for any worker count.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import chain
from math import ceil, floor
from typing import Iterator, Optional

from .efficiency import (EfficiencyBreakdown, EfficiencyParams,
                         GeometryInfeasibleError, ModelRangeError,
                         planetary_efficiency)
from .geometry import (Architecture, ConstraintParams, GearboxDesign,
                       MotorSpec, check_bounds, check_interference,
                       check_meshing, constraint_failures,
                       max_gearbox_diameter)
from .mass import (BearingModel, MassBreakdown, MassModelParams,
                   MaterialSpec, actuator_mass, load_bearing_model)
from .strength import LoadCase, StrengthParams, face_width

THREADS_ENV_VAR = "GBOPT_THREADS"
_CHUNK_SIZE = 512
# sun-teeth ceiling for empty-bin diagnostics; feasibility always
# appears first at small suns (smallest ring for a given ratio), so
# scanning this far is enough to name the dominant blocker
_DIAG_SUN_TEETH_CAP = 60


@dataclass(frozen=True)
class CostWeights:
    """Weights of the scalarized mass/efficiency objective."""
    k_m: float = 1.0  # per-kg penalty on actuator mass
    k_e: float = 2.0  # reward on overall efficiency

    def __post_init__(self):
        if self.k_m < 0 or self.k_e < 0:
            raise ValueError("cost weights must be >= 0")


@dataclass(frozen=True)
class EvalContext:
    """Everything a worker needs to score one design; fully immutable."""
    motor: MotorSpec
    load: LoadCase
    constraints: ConstraintParams
    efficiency: EfficiencyParams
    strength: StrengthParams
    materials: MaterialSpec
    mass_params: MassModelParams
    bearing: BearingModel
    cost: CostWeights

    @classmethod
    def with_defaults(cls, motor: MotorSpec, load: LoadCase) -> "EvalContext":
        """Context with every model parameter at its default and the
        packaged bearing table."""
        return cls(motor=motor, load=load, constraints=ConstraintParams(),
                   efficiency=EfficiencyParams(), strength=StrengthParams(),
                   materials=MaterialSpec(), mass_params=MassModelParams(),
                   bearing=load_bearing_model(), cost=CostWeights())


@dataclass(frozen=True)
class DesignEvaluation:
    """Scored design: the ranking unit of the search."""
    design: GearboxDesign
    feasible: bool
    failure_reasons: tuple[str, ...]
    reduction_ratio: float
    efficiency: Optional[EfficiencyBreakdown]
    face_width_mm: Optional[float]
    mass: Optional[MassBreakdown]
    cost: Optional[float]


@dataclass(frozen=True)
class BinResult:
    """Outcome of one (ratio bin, architecture) cell of the sweep."""
    lo: float                         # bin lower edge, inclusive
    hi: float                         # bin upper edge, exclusive
    arch: Architecture
    best: Optional[DesignEvaluation]  # min-cost feasible design
    candidates_examined: int          # enumerated designs in the bin
    feasible_count: int               # of those, fully evaluable
    empty_reason: Optional[str]       # dominant blocker when best is None


@dataclass(frozen=True)
class BinComparison:
    """Head-to-head verdict for one ratio bin."""
    lo: float
    hi: float
    winner: Optional[Architecture]
    mass_margin_kg: Optional[float]     # loser total minus winner total
    efficiency_margin: Optional[float]  # winner eta minus loser eta
    isspg_feasible: bool
    esspg_feasible: bool


def resolve_worker_count(explicit: Optional[int] = None) -> int:
    """Worker count: explicit arg, else GBOPT_THREADS, else all cores."""
    if explicit is not None:
        count = explicit
    else:
        env = os.environ.get(THREADS_ENV_VAR)
        count = int(env) if env else (os.cpu_count() or 1)
    if count < 1:
        raise ValueError(f"worker count must be >= 1, got {count}")
    return count


def validate_bins(bins: list[tuple[float, float]]) -> list[tuple[float, float]]:
    """Require ascending, non-overlapping, non-empty half-open bins."""
    if not bins:
        raise ValueError("at least one ratio bin is required")
    for lo, hi in bins:
        if not lo < hi:
            raise ValueError(f"bin [{lo}, {hi}) is empty")
    for (_, hi_prev), (lo_next, _) in zip(bins, bins[1:]):
        if lo_next < hi_prev:
            raise ValueError("bins must be ascending and non-overlapping")
    return list(bins)


def default_bins() -> list[tuple[float, float]]:
    """Unit-width reduction bins [5,6) through [14,15)."""
    return [(float(lo), float(lo + 1)) for lo in range(5, 15)]


def enumerate_feasible(motor: MotorSpec, arch: Architecture,
                       constraints: ConstraintParams,
                       module_set: list[float]) -> Iterator[GearboxDesign]:
    """
    Yield every feasible decision vector in lexicographic
    (m, n_p, N_s, N_p) order.

    The ring teeth follow from the concentricity condition, and the
    sun/planet upper bounds are derived from the ring-diameter limit,
    so no admissible vector is skipped.
    """
    d_max = max_gearbox_diameter(motor, arch, constraints)
    n_min = constraints.min_teeth
    n_cap = constraints.max_teeth
    for module_mm in sorted(module_set):
        max_ring = floor(d_max / module_mm + 1e-9)
        sun_max = max_ring - 2 * n_min
        if n_cap is not None:
            sun_max = min(sun_max, n_cap)
        for num_planets in range(constraints.min_planets,
                                 constraints.max_planets + 1):
            for sun_teeth in range(n_min, sun_max + 1):
                planet_max = (max_ring - sun_teeth) // 2
                if n_cap is not None:
                    planet_max = min(planet_max, n_cap)
                for planet_teeth in range(n_min, planet_max + 1):
                    design = GearboxDesign(
                        arch=arch,
                        sun_teeth=sun_teeth,
                        planet_teeth=planet_teeth,
                        ring_teeth=sun_teeth + 2 * planet_teeth,
                        module_mm=module_mm,
                        num_planets=num_planets,
                    )
                    if (check_meshing(design)
                            and check_interference(design, constraints)
                            and check_bounds(design, motor, constraints)):
                        yield design


def evaluate(design: GearboxDesign, ctx: EvalContext) -> DesignEvaluation:
    """
    Score one design: constraints, efficiency chain, Lewis width, mass,
    cost. Model errors become infeasibility reasons, never crashes.
    """
    reduction = design.reduction_ratio
    failures = constraint_failures(design, ctx.motor, ctx.constraints)
    if failures:
        return DesignEvaluation(design=design, feasible=False,
                                failure_reasons=tuple(failures),
                                reduction_ratio=reduction, efficiency=None,
                                face_width_mm=None, mass=None, cost=None)
    try:
        efficiency = planetary_efficiency(design, ctx.efficiency)
        width_mm = face_width(ctx.load, design, ctx.strength)
        mass = actuator_mass(design, ctx.motor, width_mm, ctx.bearing,
                             ctx.materials, ctx.mass_params)
    except GeometryInfeasibleError as exc:
        return DesignEvaluation(design=design, feasible=False,
                                failure_reasons=(f"tooth_form: {exc}",),
                                reduction_ratio=reduction, efficiency=None,
                                face_width_mm=None, mass=None, cost=None)
    except ModelRangeError as exc:
        return DesignEvaluation(design=design, feasible=False,
                                failure_reasons=(f"efficiency_range: {exc}",),
                                reduction_ratio=reduction, efficiency=None,
                                face_width_mm=None, mass=None, cost=None)
    except ValueError as exc:
        return DesignEvaluation(design=design, feasible=False,
                                failure_reasons=(f"model_error: {exc}",),
                                reduction_ratio=reduction, efficiency=None,
                                face_width_mm=None, mass=None, cost=None)
    cost = (ctx.cost.k_m * mass.total
            - ctx.cost.k_e * efficiency.eta_overall)
    return DesignEvaluation(design=design, feasible=True,
                            failure_reasons=(), reduction_ratio=reduction,
                            efficiency=efficiency, face_width_mm=width_mm,
                            mass=mass, cost=cost)


def ranking_key(evaluation: DesignEvaluation) -> tuple:
    """
    Total order over feasible evaluations: cost, then mass, then
    efficiency (higher wins), then the lexicographic design vector.
    """
    d = evaluation.design
    return (evaluation.cost, evaluation.mass.total,
            -evaluation.efficiency.eta_overall, d.module_mm, d.num_planets,
            d.sun_teeth, d.planet_teeth)


def _evaluate_chunk(ctx: EvalContext,
                    designs: list[GearboxDesign]) -> list[DesignEvaluation]:
    return [evaluate(design, ctx) for design in designs]


def _evaluations(designs: list[GearboxDesign], ctx: EvalContext,
                 workers: int) -> Iterator[DesignEvaluation]:
    if workers <= 1 or len(designs) <= _CHUNK_SIZE:
        return iter(_evaluate_chunk(ctx, designs))
    chunks = [designs[i:i + _CHUNK_SIZE]
              for i in range(0, len(designs), _CHUNK_SIZE)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves submission order, keeping the fold deterministic
        results = list(pool.map(_evaluate_chunk, [ctx] * len(chunks), chunks))
    return chain.from_iterable(results)


def _bin_index(bins: list[tuple[float, float]],
               reduction: float) -> Optional[int]:
    for index, (lo, hi) in enumerate(bins):
        if lo <= reduction < hi:
            return index
    return None


def diagnose_empty_bin(motor: MotorSpec, arch: Architecture,
                       constraints: ConstraintParams,
                       module_set: list[float], lo: float,
                       hi: float) -> str:
    """
    Name the constraint that blocks an empty ratio bin.

    Scans the bin's raw candidate rectangle (ratio window intersected
    with the tooth-count floor, suns capped at a diagnostic ceiling)
    without the feasibility filter and tallies every violated
    constraint; the most frequent one is the verdict.
    """
    counts: dict[str, int] = {}
    n_min = constraints.min_teeth
    for module_mm in sorted(module_set):
        for num_planets in range(constraints.min_planets,
                                 constraints.max_planets + 1):
            for sun_teeth in range(n_min, _DIAG_SUN_TEETH_CAP + 1):
                # R = 2 + 2*N_p/N_s in [lo, hi)
                planet_lo = max(n_min, ceil((lo - 2.0) * sun_teeth / 2.0))
                planet_hi = ceil((hi - 2.0) * sun_teeth / 2.0)
                for planet_teeth in range(planet_lo, planet_hi):
                    design = GearboxDesign(
                        arch=arch, sun_teeth=sun_teeth,
                        planet_teeth=planet_teeth,
                        ring_teeth=sun_teeth + 2 * planet_teeth,
                        module_mm=module_mm, num_planets=num_planets)
                    for name in constraint_failures(design, motor,
                                                    constraints):
                        counts[name] = counts.get(name, 0) + 1
    if not counts:
        return "no_candidates_in_ratio_window"
    return max(sorted(counts), key=lambda name: counts[name])


def optimize_bins(arch: Architecture, ctx: EvalContext,
                  module_set: list[float],
                  bins: list[tuple[float, float]],
                  workers: Optional[int] = None) -> list[BinResult]:
    """
    Evaluate all candidates whose reduction ratio falls in some bin and
    keep the min-cost feasible design per bin. Empty bins carry the
    dominant blocking constraint instead.
    """
    bins = validate_bins(bins)
    workers = resolve_worker_count(workers)
    binned: list[list[GearboxDesign]] = [[] for _ in bins]
    for design in enumerate_feasible(ctx.motor, arch, ctx.constraints,
                                     module_set):
        index = _bin_index(bins, design.reduction_ratio)
        if index is not None:
            binned[index].append(design)
    ordered = [design for bucket in binned for design in bucket]
    per_design = _evaluations(ordered, ctx, workers)

    best: list[Optional[DesignEvaluation]] = [None] * len(bins)
    feasible_count = [0] * len(bins)
    for bucket_index, bucket in enumerate(binned):
        for _ in bucket:
            evaluation = next(per_design)
            if not evaluation.feasible:
                continue
            feasible_count[bucket_index] += 1
            incumbent = best[bucket_index]
            if (incumbent is None
                    or ranking_key(evaluation) < ranking_key(incumbent)):
                best[bucket_index] = evaluation

    results = []
    for index, (lo, hi) in enumerate(bins):
        empty_reason = None
        if best[index] is None:
            empty_reason = diagnose_empty_bin(ctx.motor, arch,
                                              ctx.constraints, module_set,
                                              lo, hi)
        results.append(BinResult(lo=lo, hi=hi, arch=arch, best=best[index],
                                 candidates_examined=len(binned[index]),
                                 feasible_count=feasible_count[index],
                                 empty_reason=empty_reason))
    return results


def compare_architectures(
        results: dict[Architecture, list[BinResult]]) -> list[BinComparison]:
    """
    Per-bin head-to-head: the architecture with the cheaper winner takes
    the bin; margins report how much mass and efficiency separate them.
    """
    isspg = results.get(Architecture.ISSPG)
    esspg = results.get(Architecture.ESSPG)
    if isspg is None or esspg is None:
        raise ValueError("comparison needs results for both architectures")
    if [(r.lo, r.hi) for r in isspg] != [(r.lo, r.hi) for r in esspg]:
        raise ValueError("architecture sweeps used different bins")

    comparisons = []
    for bin_i, bin_e in zip(isspg, esspg):
        winner = None
        mass_margin = None
        eta_margin = None
        if bin_i.best is not None and bin_e.best is not None:
            key_i = ranking_key(bin_i.best)
            key_e = ranking_key(bin_e.best)
            # exact key tie falls to ISSPG (fixed, documented preference)
            winner_eval, loser_eval = ((bin_i.best, bin_e.best)
                                       if key_i <= key_e
                                       else (bin_e.best, bin_i.best))
            winner = winner_eval.design.arch
            mass_margin = loser_eval.mass.total - winner_eval.mass.total
            eta_margin = (winner_eval.efficiency.eta_overall
                          - loser_eval.efficiency.eta_overall)
        elif bin_i.best is not None:
            winner = Architecture.ISSPG
        elif bin_e.best is not None:
            winner = Architecture.ESSPG
        comparisons.append(BinComparison(
            lo=bin_i.lo, hi=bin_i.hi, winner=winner,
            mass_margin_kg=mass_margin, efficiency_margin=eta_margin,
            isspg_feasible=bin_i.best is not None,
            esspg_feasible=bin_e.best is not None))
    return comparisons
