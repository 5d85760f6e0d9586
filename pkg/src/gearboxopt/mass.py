"""
Parametric mass model of the complete actuator.

Component rules:

- Gears are steel cylinders at pitch diameter; with the fastener-offset
  flag on (default) their bores are not subtracted, standing in for the
  mass of small fasteners excluded elsewhere.
- The ring gear is a steel annulus from its tip circle out to the pitch
  circle plus twice a radial wall (default 2.5 modules).
- Bearings follow a continuous power-law regression mass ~ c*bore^k
  fitted at startup to a thin-section deep-groove table shipped as CSV;
  OD and width get analogous fits for dimensioning neighbors.
- Carriers are aluminum hollow disks spanning the planet orbit, plus
  steel planet pins; the secondary (support) carrier repeats the disk
  without the pins.
- The casing is an aluminum hollow cylinder at the motor OD: motor
  height alone for ISSPG (gear train lives inside the stator), motor
  height plus the gearbox stack for ESSPG; a base-plate disk closes it.

Units: mm in, kg out; densities in kg/m^3.
"""

import csv
from dataclasses import dataclass
from math import pi
from pathlib import Path
from importlib import resources

import numpy as np

from .geometry import (Architecture, GearboxDesign, GearRole, MotorSpec,
                       pitch_diameter, tip_diameter)

_MM3_TO_M3 = 1e-9
_BEARING_CSV_HEADER = ["bore_mm", "od_mm", "width_mm", "mass_kg"]


@dataclass(frozen=True)
class MaterialSpec:
    """Densities of the two stock materials."""
    steel_density_kg_m3: float = 7850.0     # gears, pins, bearings
    aluminum_density_kg_m3: float = 2700.0  # carrier disks, casing, plate

    def __post_init__(self):
        if self.steel_density_kg_m3 <= 0 or self.aluminum_density_kg_m3 <= 0:
            raise ValueError("densities must be positive")


@dataclass(frozen=True)
class MassModelParams:
    """Assembly defaults that the mass rules need but the design vector
    does not carry; all are echoed into reports."""
    ring_radial_thickness_coeff: float = 2.5  # ring wall = coeff * module
    carrier_disk_thickness_mm: float = 5.0
    casing_wall_mm: float = 3.0
    base_plate_thickness_mm: float = 3.0
    pin_engagement_mm: float = 4.0            # pin length = face width + this
    planet_bearing_bore_mm: float = 10.0      # needle/ball bore in planets
    input_bearing_bore_mm: float = 15.0       # sun shaft support
    fastener_offset: bool = True              # keep gear bores solid

    def __post_init__(self):
        for field_name in ("ring_radial_thickness_coeff",
                           "carrier_disk_thickness_mm", "casing_wall_mm",
                           "base_plate_thickness_mm",
                           "planet_bearing_bore_mm",
                           "input_bearing_bore_mm"):
            if getattr(self, field_name) <= 0:
                raise ValueError(f"{field_name} must be positive")
        if self.pin_engagement_mm < 0:
            raise ValueError("pin_engagement_mm must be >= 0")


@dataclass(frozen=True)
class BearingRow:
    """One datasheet row of the thin-section bearing table."""
    bore_mm: float
    od_mm: float
    width_mm: float
    mass_kg: float


@dataclass(frozen=True)
class BearingModel:
    """Power-law fits over a bearing table: value ~ c * bore^k."""
    table: tuple[BearingRow, ...]
    mass_c: float
    mass_k: float
    od_c: float
    od_k: float
    width_c: float
    width_k: float

    @property
    def bore_min_mm(self) -> float:
        return self.table[0].bore_mm

    @property
    def bore_max_mm(self) -> float:
        return self.table[-1].bore_mm


@dataclass(frozen=True)
class MassBreakdown:
    """Per-component actuator masses, kg."""
    sun: float
    planets_total: float
    ring: float
    carrier: float
    secondary_carrier: float
    bearings_total: float
    casing: float
    base_plate: float
    motor: float
    total: float

    def as_dict(self) -> dict[str, float]:
        return {
            "sun": self.sun,
            "planets_total": self.planets_total,
            "ring": self.ring,
            "carrier": self.carrier,
            "secondary_carrier": self.secondary_carrier,
            "bearings_total": self.bearings_total,
            "casing": self.casing,
            "base_plate": self.base_plate,
            "motor": self.motor,
            "total": self.total,
        }


def default_bearing_table_path() -> Path:
    """Path of the packaged thin-section bearing CSV."""
    return Path(str(resources.files("gearboxopt").joinpath(
        "data/bearings_thin_section.csv")))


def load_bearing_table(path: str | Path) -> tuple[BearingRow, ...]:
    """
    Read a bearing CSV with header bore_mm,od_mm,width_mm,mass_kg.

    Rows must be strictly increasing in bore with positive entries.
    """
    with open(path, newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header != _BEARING_CSV_HEADER:
            raise ValueError(
                f"bearing table {path}: expected header "
                f"{','.join(_BEARING_CSV_HEADER)}, got {header}")
        rows = []
        for line_no, raw in enumerate(reader, start=2):
            if not raw or all(not cell.strip() for cell in raw):
                continue
            if len(raw) != 4:
                raise ValueError(
                    f"bearing table {path} line {line_no}: "
                    f"expected 4 columns, got {len(raw)}")
            try:
                row = BearingRow(*(float(cell) for cell in raw))
            except ValueError as exc:
                raise ValueError(
                    f"bearing table {path} line {line_no}: {exc}") from exc
            if min(row.bore_mm, row.od_mm, row.width_mm, row.mass_kg) <= 0:
                raise ValueError(
                    f"bearing table {path} line {line_no}: "
                    "all values must be positive")
            rows.append(row)
    if len(rows) < 3:
        raise ValueError(f"bearing table {path}: need at least 3 rows")
    bores = [row.bore_mm for row in rows]
    if any(b2 <= b1 for b1, b2 in zip(bores, bores[1:])):
        raise ValueError(
            f"bearing table {path}: bores must be strictly increasing")
    return tuple(rows)


def _power_law_fit(x: np.ndarray, y: np.ndarray) -> tuple[float, float]:
    """Least-squares fit of y = c*x^k in log-log space; returns (c, k)."""
    k, log_c = np.polyfit(np.log(x), np.log(y), 1)
    return float(np.exp(log_c)), float(k)


def fit_bearing_model(table: tuple[BearingRow, ...]) -> BearingModel:
    """Fit the three power laws over a loaded table."""
    bore = np.array([row.bore_mm for row in table])
    mass_c, mass_k = _power_law_fit(bore, np.array([r.mass_kg for r in table]))
    od_c, od_k = _power_law_fit(bore, np.array([r.od_mm for r in table]))
    width_c, width_k = _power_law_fit(bore,
                                      np.array([r.width_mm for r in table]))
    if mass_k <= 0:
        raise ValueError(
            f"bearing mass fit is not monotone increasing (k={mass_k:.3f})")
    return BearingModel(table=tuple(table), mass_c=mass_c, mass_k=mass_k,
                        od_c=od_c, od_k=od_k, width_c=width_c,
                        width_k=width_k)


def load_bearing_model(path: str | Path | None = None) -> BearingModel:
    """Load and fit a bearing table (packaged table when path is None)."""
    table_path = default_bearing_table_path() if path is None else path
    return fit_bearing_model(load_bearing_table(table_path))


def _check_bore_range(bore_mm: float, model: BearingModel,
                      extrapolate: bool) -> None:
    if extrapolate:
        return
    if not model.bore_min_mm <= bore_mm <= model.bore_max_mm:
        raise ValueError(
            f"bearing bore {bore_mm:.2f} mm outside the fitted range "
            f"[{model.bore_min_mm:.0f}, {model.bore_max_mm:.0f}] mm")


def bearing_mass(bore_mm: float, model: BearingModel,
                 extrapolate: bool = False) -> float:
    """Fitted bearing mass at a bore (kg); rejects out-of-range bores."""
    _check_bore_range(bore_mm, model, extrapolate)
    return model.mass_c * bore_mm ** model.mass_k


def bearing_od(bore_mm: float, model: BearingModel,
               extrapolate: bool = False) -> float:
    """Fitted bearing outer diameter at a bore (mm)."""
    _check_bore_range(bore_mm, model, extrapolate)
    return model.od_c * bore_mm ** model.od_k


def bearing_width(bore_mm: float, model: BearingModel,
                  extrapolate: bool = False) -> float:
    """Fitted bearing width at a bore (mm)."""
    _check_bore_range(bore_mm, model, extrapolate)
    return model.width_c * bore_mm ** model.width_k


def bearing_fit_report(model: BearingModel) -> dict:
    """
    Fit quality per column: coefficients, R^2 (in log space), and the
    per-row relative residuals of the fitted curve against the table.
    """
    bore = np.array([row.bore_mm for row in model.table])
    report = {}
    columns = {
        "mass_kg": (np.array([r.mass_kg for r in model.table]),
                    model.mass_c, model.mass_k),
        "od_mm": (np.array([r.od_mm for r in model.table]),
                  model.od_c, model.od_k),
        "width_mm": (np.array([r.width_mm for r in model.table]),
                     model.width_c, model.width_k),
    }
    for name, (actual, c, k) in columns.items():
        fitted = c * bore ** k
        log_actual = np.log(actual)
        ss_res = float(np.sum((log_actual - np.log(fitted)) ** 2))
        ss_tot = float(np.sum((log_actual - log_actual.mean()) ** 2))
        residuals = np.abs(fitted - actual) / actual
        report[name] = {
            "c": c,
            "k": k,
            "r_squared": 1.0 - ss_res / ss_tot,
            "max_relative_residual": float(residuals.max()),
            "relative_residuals": [float(r) for r in residuals],
        }
    return report


def spur_gear_mass(tooth_count: int, module_mm: float, face_width_mm: float,
                   bore_mm: float, materials: MaterialSpec) -> float:
    """Steel cylinder at pitch diameter with a central bore (kg)."""
    d_pitch = pitch_diameter(tooth_count, module_mm)
    if bore_mm < 0:
        raise ValueError("bore_mm must be >= 0")
    if bore_mm >= d_pitch:
        raise ValueError(
            f"gear bore {bore_mm:.2f} mm >= pitch diameter {d_pitch:.2f} mm")
    volume_mm3 = face_width_mm * pi / 4.0 * (d_pitch ** 2 - bore_mm ** 2)
    return materials.steel_density_kg_m3 * volume_mm3 * _MM3_TO_M3


def ring_gear_mass(ring_teeth: int, module_mm: float, face_width_mm: float,
                   radial_thickness_mm: float,
                   materials: MaterialSpec) -> float:
    """
    Steel annulus from the ring tip circle (tooth tips point inward) out
    to the pitch circle plus twice the radial wall (kg).
    """
    if radial_thickness_mm <= 0:
        raise ValueError("radial_thickness_mm must be positive")
    inner = tip_diameter(ring_teeth, module_mm, GearRole.RING)
    outer = pitch_diameter(ring_teeth, module_mm) + 2.0 * radial_thickness_mm
    volume_mm3 = face_width_mm * pi / 4.0 * (outer ** 2 - inner ** 2)
    return materials.steel_density_kg_m3 * volume_mm3 * _MM3_TO_M3


def pin_circle_diameter_mm(design: GearboxDesign) -> float:
    """Diameter of the circle through the planet centers, m(N_s+N_p)."""
    return design.module_mm * (design.sun_teeth + design.planet_teeth)


def carrier_disk_od_mm(design: GearboxDesign) -> float:
    """Carrier disk OD: pin circle plus a planet tip-radius allowance."""
    planet_tip = tip_diameter(design.planet_teeth, design.module_mm,
                              GearRole.PLANET)
    return pin_circle_diameter_mm(design) + planet_tip / 2.0


def output_bearing_bore_mm(design: GearboxDesign) -> float:
    """Main output bearing rides the carrier at the pin circle diameter."""
    return pin_circle_diameter_mm(design)


def _carrier_disk_mass(design: GearboxDesign, bearing: BearingModel,
                       materials: MaterialSpec,
                       params: MassModelParams) -> float:
    od = carrier_disk_od_mm(design)
    # central hole clears the sun-shaft bearing's outer diameter
    inner = bearing_od(params.input_bearing_bore_mm, bearing)
    if inner >= od:
        raise ValueError(
            f"carrier disk OD {od:.1f} mm does not clear the "
            f"{inner:.1f} mm sun-shaft bearing")
    volume_mm3 = (params.carrier_disk_thickness_mm * pi / 4.0
                  * (od ** 2 - inner ** 2))
    return materials.aluminum_density_kg_m3 * volume_mm3 * _MM3_TO_M3


def planet_pin_mass(face_width_mm: float, materials: MaterialSpec,
                    params: MassModelParams) -> float:
    """One steel planet pin: bearing-bore diameter, width plus engagement."""
    length = face_width_mm + params.pin_engagement_mm
    volume_mm3 = length * pi / 4.0 * params.planet_bearing_bore_mm ** 2
    return materials.steel_density_kg_m3 * volume_mm3 * _MM3_TO_M3


def carrier_mass(design: GearboxDesign, face_width_mm: float,
                 bearing: BearingModel, materials: MaterialSpec,
                 params: MassModelParams) -> float:
    """Main carrier: aluminum disk plus n_p steel planet pins (kg)."""
    disk = _carrier_disk_mass(design, bearing, materials, params)
    pins = design.num_planets * planet_pin_mass(face_width_mm, materials,
                                                params)
    return disk + pins


def secondary_carrier_mass(design: GearboxDesign, bearing: BearingModel,
                           materials: MaterialSpec,
                           params: MassModelParams) -> float:
    """Support-side carrier: the same disk rule, pins counted once only."""
    return _carrier_disk_mass(design, bearing, materials, params)


def gearbox_stack_height_mm(face_width_mm: float,
                            params: MassModelParams) -> float:
    """Axial span of the gear train: face width between two carrier disks."""
    return face_width_mm + 2.0 * params.carrier_disk_thickness_mm


def casing_length_mm(design: GearboxDesign, motor: MotorSpec,
                     face_width_mm: float, params: MassModelParams) -> float:
    """ISSPG hides the train inside the stator; ESSPG adds the stack."""
    if design.arch is Architecture.ISSPG:
        return motor.height_mm
    return motor.height_mm + gearbox_stack_height_mm(face_width_mm, params)


def casing_mass(design: GearboxDesign, motor: MotorSpec,
                face_width_mm: float, materials: MaterialSpec,
                params: MassModelParams) -> float:
    """Aluminum hollow cylinder at the motor OD with a uniform wall (kg)."""
    od = motor.outer_diameter_mm
    inner = od - 2.0 * params.casing_wall_mm
    if inner <= 0:
        raise ValueError("casing wall exceeds the motor radius")
    length = casing_length_mm(design, motor, face_width_mm, params)
    volume_mm3 = length * pi / 4.0 * (od ** 2 - inner ** 2)
    return materials.aluminum_density_kg_m3 * volume_mm3 * _MM3_TO_M3


def base_plate_mass(motor: MotorSpec, materials: MaterialSpec,
                    params: MassModelParams) -> float:
    """Aluminum disk closing the casing at the motor OD (kg)."""
    volume_mm3 = (params.base_plate_thickness_mm * pi / 4.0
                  * motor.outer_diameter_mm ** 2)
    return materials.aluminum_density_kg_m3 * volume_mm3 * _MM3_TO_M3


def bearings_total_mass(design: GearboxDesign, bearing: BearingModel,
                        params: MassModelParams) -> float:
    """n_p planet bearings, one input (sun) and one output (carrier)."""
    planet = bearing_mass(params.planet_bearing_bore_mm, bearing)
    sun_shaft = bearing_mass(params.input_bearing_bore_mm, bearing)
    output = bearing_mass(output_bearing_bore_mm(design), bearing)
    return design.num_planets * planet + sun_shaft + output


def actuator_mass(design: GearboxDesign, motor: MotorSpec,
                  face_width_mm: float, bearing: BearingModel,
                  materials: MaterialSpec,
                  params: MassModelParams) -> MassBreakdown:
    """
    Full actuator mass breakdown (kg).

    With fastener_offset on (default), gear bores stay solid; the extra
    material stands in for excluded nuts, bolts, and circlips.
    """
    if params.fastener_offset:
        sun_bore = planet_bore = 0.0
    else:
        sun_bore = params.input_bearing_bore_mm
        planet_bore = params.planet_bearing_bore_mm
    sun = spur_gear_mass(design.sun_teeth, design.module_mm, face_width_mm,
                         sun_bore, materials)
    planets_total = design.num_planets * spur_gear_mass(
        design.planet_teeth, design.module_mm, face_width_mm, planet_bore,
        materials)
    ring = ring_gear_mass(design.ring_teeth, design.module_mm, face_width_mm,
                          params.ring_radial_thickness_coeff
                          * design.module_mm, materials)
    carrier = carrier_mass(design, face_width_mm, bearing, materials, params)
    secondary = secondary_carrier_mass(design, bearing, materials, params)
    bearings = bearings_total_mass(design, bearing, params)
    casing = casing_mass(design, motor, face_width_mm, materials, params)
    plate = base_plate_mass(motor, materials, params)
    parts = (sun, planets_total, ring, carrier, secondary, bearings, casing,
             plate, motor.mass_kg)
    return MassBreakdown(sun=sun, planets_total=planets_total, ring=ring,
                         carrier=carrier, secondary_carrier=secondary,
                         bearings_total=bearings, casing=casing,
                         base_plate=plate, motor=motor.mass_kg,
                         total=sum(parts))
