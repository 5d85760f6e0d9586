"""
Tooth-bending strength sizing via the Lewis equation.

The gear face width is the free variable: given the sun torque split
equally across the planets, the width that keeps root bending stress at
the allowable value (divided by a factor of safety) is

    b = FOS * F_t / (sigma * y * K_v * P)

with circular pitch P = pi*m, Lewis form factor y evaluated at the
weakest external gear of the stage, and the Barth velocity factor K_v
derating for pitch-line speed. All gears of the stage share this width
(single mesh plane).
"""

from dataclasses import dataclass
from enum import Enum
from math import pi

from .geometry import GearboxDesign


class LewisFormula(Enum):
    """Form-factor fit selection."""
    FULL_DEPTH_20DEG = "full_depth_20deg"  # y = 0.154 - 0.912/N


class VelocityFormula(Enum):
    """Velocity-factor fit selection."""
    BARTH = "barth"  # K_v = 3 / (3 + V), V in m/s


@dataclass(frozen=True)
class StrengthParams:
    """Material allowable, safety factor, and formula selections."""
    allowable_bending_stress_pa: float = 138e6  # cast carbon steel
    fos: float = 2.0                            # factor of safety
    min_face_width_mm: float = 3.0              # manufacturing floor
    lewis_formula: LewisFormula = LewisFormula.FULL_DEPTH_20DEG
    velocity_formula: VelocityFormula = VelocityFormula.BARTH

    def __post_init__(self):
        if self.allowable_bending_stress_pa <= 0:
            raise ValueError("allowable_bending_stress_pa must be positive")
        if self.fos < 1:
            raise ValueError("fos must be >= 1")
        if self.min_face_width_mm <= 0:
            raise ValueError("min_face_width_mm must be positive")


@dataclass(frozen=True)
class LoadCase:
    """Joint requirement routed to the sun gear (motor shaft limits)."""
    sun_torque_nm: float   # peak torque applied at the sun
    sun_speed_rad_s: float # speed at which the torque is delivered

    def __post_init__(self):
        if self.sun_torque_nm < 0 or self.sun_speed_rad_s < 0:
            raise ValueError("load case values must be >= 0")


def sun_pitch_radius_m(design: GearboxDesign) -> float:
    """Sun pitch radius in meters (the load-path lever arm)."""
    return design.module_mm * design.sun_teeth / 2.0 / 1000.0


def tangential_force(load: LoadCase, design: GearboxDesign) -> float:
    """
    Tangential tooth force per mesh, N.

    The sun torque is shared equally among the planets:
    F_t = T / (n_p * r_sun).
    """
    return load.sun_torque_nm / (design.num_planets
                                 * sun_pitch_radius_m(design))


def lewis_form_factor(tooth_count: int,
                      formula: LewisFormula = LewisFormula.FULL_DEPTH_20DEG
                      ) -> float:
    """
    Lewis form factor y (circular-pitch form).

    The default fit is the 20 deg full-depth involute table fit
    y = 0.154 - 0.912/N; strictly increasing in N, bounded by 0.154.
    """
    if formula is LewisFormula.FULL_DEPTH_20DEG:
        return 0.154 - 0.912 / tooth_count
    raise ValueError(f"unknown Lewis formula {formula}")


def pitch_line_velocity_m_s(load: LoadCase, design: GearboxDesign) -> float:
    """Pitch-line speed of the sun mesh, V = omega * r_sun (m/s)."""
    return load.sun_speed_rad_s * sun_pitch_radius_m(design)


def velocity_factor(load: LoadCase, design: GearboxDesign,
                    formula: VelocityFormula = VelocityFormula.BARTH
                    ) -> float:
    """Dynamic derating factor K_v in (0, 1]; 1 at standstill."""
    if formula is VelocityFormula.BARTH:
        return 3.0 / (3.0 + pitch_line_velocity_m_s(load, design))
    raise ValueError(f"unknown velocity formula {formula}")


def face_width(load: LoadCase, design: GearboxDesign,
               params: StrengthParams) -> float:
    """
    Common face width of all stage gears, mm.

    Lewis factor is taken at the weaker (smaller) external gear of the
    sun-planet mesh; internal ring teeth are stronger at equal module
    and are not separately checked. The result is clamped below by
    min_face_width_mm so zero-torque cases stay manufacturable.
    """
    f_t = tangential_force(load, design)
    y = lewis_form_factor(min(design.sun_teeth, design.planet_teeth),
                          params.lewis_formula)
    k_v = velocity_factor(load, design, params.velocity_formula)
    if y <= 0:
        raise ValueError(f"non-positive Lewis form factor {y:.4f}")
    if k_v <= 0:
        raise ValueError(f"non-positive velocity factor {k_v:.4f}")
    pitch_m = pi * design.module_mm / 1000.0  # circular pitch, meters
    width_m = (params.fos * f_t
               / (params.allowable_bending_stress_pa * y * k_v * pitch_m))
    return max(width_m * 1000.0, params.min_face_width_mm)
