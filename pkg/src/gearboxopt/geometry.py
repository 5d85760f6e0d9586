"""
Involute spur-gear geometry and feasibility rules for single-stage
planetary gearboxes.

Covers the two quasi-direct-drive actuator layouts:

- ISSPG: gearbox nested inside the motor stator bore (compact, the ring
  gear must fit within the stator inner diameter).
- ESSPG: gearbox stacked outside the motor body (ring gear may grow up
  to the motor outer diameter).

All diameters follow the standard involute relations (DIN 867 basic
rack, 20 deg full depth): pitch d = m*N, base d_b = m*N*cos(alpha),
tip d_a = m*N +/- 2m (external/internal teeth).

Units: lengths in mm, angles in rad, masses in kg unless suffixed
otherwise.
"""

from dataclasses import dataclass
from enum import Enum
from math import cos, pi, sin
from typing import Optional


# Standard metric module steps within typical small-actuator limits (mm)
STANDARD_MODULE_SET_MM = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2]


class Architecture(Enum):
    """Planetary gearbox placement relative to the motor."""
    ISSPG = "isspg"  # inside the stator bore
    ESSPG = "esspg"  # external, stacked on the motor


class GearRole(Enum):
    """Position of a gear in the planetary stage (sets tip-circle sign)."""
    SUN = "sun"
    PLANET = "planet"
    RING = "ring"


@dataclass(frozen=True)
class GearboxDesign:
    """Decision vector of a single-stage planetary gearbox."""
    arch: Architecture
    sun_teeth: int       # N_s
    planet_teeth: int    # N_p
    ring_teeth: int      # N_r
    module_mm: float     # gear module m (mm)
    num_planets: int     # n_p, count of planet gears

    def __post_init__(self):
        if self.sun_teeth < 1 or self.planet_teeth < 1 or self.ring_teeth < 1:
            raise ValueError("tooth counts must be >= 1")
        if self.num_planets < 1:
            raise ValueError("num_planets must be >= 1")
        if self.module_mm <= 0:
            raise ValueError("module_mm must be positive")

    @property
    def gear_ratio(self) -> float:
        """Speed ratio G = N_s/(N_s+N_r), carrier output over sun input."""
        return self.sun_teeth / (self.sun_teeth + self.ring_teeth)

    @property
    def reduction_ratio(self) -> float:
        """Reduction R = 1/G = (N_s+N_r)/N_s, quoted as "R:1"."""
        return (self.sun_teeth + self.ring_teeth) / self.sun_teeth


@dataclass(frozen=True)
class ConstraintParams:
    """Manufacturing and assembly limits for the feasibility checks."""
    module_min_mm: float = 0.5        # smallest cuttable module
    module_max_mm: float = 1.2        # largest allowed module
    min_teeth: int = 20               # undercutting bound for sun/planet
    max_teeth: Optional[int] = None   # optional sun/planet tooth cap
    min_planets: int = 2              # lower planet-count bound
    max_planets: int = 7              # upper planet-count bound
    planet_clearance_mm: float = 5.0  # delta_p, min gap between planets
    ring_clearance_mm: float = 10.0   # delta_clr, ring-to-housing margin

    def __post_init__(self):
        if self.module_min_mm > self.module_max_mm:
            raise ValueError("module_min_mm must not exceed module_max_mm")
        if self.max_teeth is not None and self.max_teeth < self.min_teeth:
            raise ValueError("max_teeth must be >= min_teeth")
        if self.min_planets > self.max_planets:
            raise ValueError("min_planets must not exceed max_planets")
        if self.planet_clearance_mm <= 0:
            raise ValueError("planet_clearance_mm must be positive")
        if self.ring_clearance_mm < 0:
            raise ValueError("ring_clearance_mm must be >= 0")


@dataclass(frozen=True)
class MotorSpec:
    """Envelope and performance limits of the driving motor (datasheet)."""
    outer_diameter_mm: float         # motor body OD
    stator_inner_diameter_mm: float  # clear bore inside the stator
    height_mm: float                 # axial body length
    mass_kg: float
    max_torque_nm: float             # peak torque applied at the sun gear
    max_speed_rad_s: float           # no-load speed bound
    name: str = "unnamed-motor"      # datasheet label

    def __post_init__(self):
        if not 0 < self.stator_inner_diameter_mm < self.outer_diameter_mm:
            raise ValueError(
                "stator_inner_diameter_mm must be positive and smaller "
                "than outer_diameter_mm")
        for field_name in ("height_mm", "mass_kg", "max_torque_nm",
                           "max_speed_rad_s"):
            if getattr(self, field_name) <= 0:
                raise ValueError(f"{field_name} must be positive")


def pitch_diameter(tooth_count: int, module_mm: float) -> float:
    """Pitch circle diameter d = m*N (mm)."""
    if tooth_count < 1:
        raise ValueError("tooth_count must be >= 1")
    if module_mm <= 0:
        raise ValueError("module_mm must be positive")
    return module_mm * tooth_count


def base_diameter(tooth_count: int, module_mm: float,
                  pressure_angle_rad: float) -> float:
    """Base circle diameter d_b = m*N*cos(alpha) (mm)."""
    if not 0 < pressure_angle_rad < pi / 2:
        raise ValueError("pressure_angle_rad must lie in (0, pi/2)")
    return pitch_diameter(tooth_count, module_mm) * cos(pressure_angle_rad)


def tip_diameter(tooth_count: int, module_mm: float, role: GearRole) -> float:
    """
    Tip circle diameter d_a = m*N + sgn*2m (mm).

    sgn = +1 for external teeth (sun, planet), -1 for the internal ring.
    """
    sgn = -1.0 if role is GearRole.RING else 1.0
    d_a = module_mm * tooth_count + sgn * 2.0 * module_mm
    if d_a <= 0:
        raise ValueError(
            f"degenerate ring tip circle: m*N - 2m = {d_a:.3f} mm <= 0")
    return d_a


def check_geometric(design: GearboxDesign) -> bool:
    """Concentric assembly condition N_r = N_s + 2*N_p."""
    return design.ring_teeth == design.sun_teeth + 2 * design.planet_teeth


def check_meshing(design: GearboxDesign) -> bool:
    """Equal planet spacing condition: (N_s + N_r) divisible by n_p."""
    return (design.sun_teeth + design.ring_teeth) % design.num_planets == 0


def interference_margin_mm(design: GearboxDesign) -> float:
    """
    Clearance between adjacent planet gears:
    2m(N_s+N_p)sin(pi/n_p) - 2mN_p (mm).
    """
    m = design.module_mm
    spread = 2.0 * m * (design.sun_teeth + design.planet_teeth)
    return spread * sin(pi / design.num_planets) - 2.0 * m * design.planet_teeth


def check_interference(design: GearboxDesign, params: ConstraintParams) -> bool:
    """True when adjacent planets keep at least planet_clearance_mm apart."""
    if design.num_planets < 2:
        raise ValueError("interference check requires num_planets >= 2")
    return interference_margin_mm(design) >= params.planet_clearance_mm


def max_gearbox_diameter(motor: MotorSpec, arch: Architecture,
                         params: ConstraintParams) -> float:
    """
    Largest ring-gear pitch diameter the motor envelope admits (mm).

    ESSPG rings may grow to the motor OD minus clearance; ISSPG rings
    must fit inside the stator bore minus the same clearance.
    """
    if arch is Architecture.ESSPG:
        bound = motor.outer_diameter_mm - params.ring_clearance_mm
    else:
        bound = motor.stator_inner_diameter_mm - params.ring_clearance_mm
    if bound <= 0:
        raise ValueError(
            f"motor {motor.name} leaves no room for a {arch.value} gearbox "
            f"(diameter bound {bound:.1f} mm)")
    return bound


def check_bounds(design: GearboxDesign, motor: MotorSpec,
                 params: ConstraintParams) -> bool:
    """Module range, undercutting, ring-diameter, and planet-count bounds."""
    d_max = max_gearbox_diameter(motor, design.arch, params)
    return (params.module_min_mm <= design.module_mm <= params.module_max_mm
            and design.sun_teeth >= params.min_teeth
            and design.planet_teeth >= params.min_teeth
            and (params.max_teeth is None
                 or max(design.sun_teeth, design.planet_teeth)
                 <= params.max_teeth)
            and design.module_mm * design.ring_teeth <= d_max
            and params.min_planets <= design.num_planets <= params.max_planets)


def constraint_failures(design: GearboxDesign, motor: MotorSpec,
                        params: ConstraintParams) -> list[str]:
    """
    Names of all violated feasibility constraints (empty when feasible).

    Bound checks are reported individually so empty search bins can name
    their dominant blocker.
    """
    failures = []
    if not check_geometric(design):
        failures.append("geometric")
    if not check_meshing(design):
        failures.append("meshing")
    if not check_interference(design, params):
        failures.append("planet_interference")
    if not (params.module_min_mm <= design.module_mm <= params.module_max_mm):
        failures.append("module_range")
    if design.sun_teeth < params.min_teeth or design.planet_teeth < params.min_teeth:
        failures.append("undercutting")
    if (params.max_teeth is not None
            and max(design.sun_teeth, design.planet_teeth) > params.max_teeth):
        failures.append("tooth_count_cap")
    d_max = max_gearbox_diameter(motor, design.arch, params)
    if design.module_mm * design.ring_teeth > d_max:
        failures.append("ring_diameter")
    if not params.min_planets <= design.num_planets <= params.max_planets:
        failures.append("planet_count")
    return failures
