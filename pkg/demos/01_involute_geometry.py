"""
Involute geometry of a single-stage planetary gearbox
=====================================================

Walk through the decision vector (sun teeth, planet teeth, ring teeth,
module, planet count), the circle diameters of each gear, and every
feasibility rule the search applies, on a 6.0:1 design that fits inside
the stator bore of a large-gap outrunner motor.
"""

from math import radians

from gearboxopt import (Architecture, ConstraintParams, GearboxDesign,
                        GearRole, MotorSpec, base_diameter, check_bounds,
                        check_geometric, check_interference, check_meshing,
                        constraint_failures, interference_margin_mm,
                        max_gearbox_diameter, pitch_diameter, tip_diameter)

PRESSURE_ANGLE_RAD = radians(20.0)  # standard full-depth involute

# the motor whose envelope the gearbox must share (datasheet values)
MOTOR = MotorSpec(outer_diameter_mm=105.6, stator_inner_diameter_mm=65.0,
                  height_mm=46.5, mass_kg=0.765, max_torque_nm=3.0,
                  max_speed_rad_s=418.9, name="U12")

# a reduction stage built entirely inside the stator bore
DESIGN = GearboxDesign(arch=Architecture.ISSPG, sun_teeth=20,
                       planet_teeth=40, ring_teeth=100, module_mm=0.5,
                       num_planets=3)

RULES = ConstraintParams()


def main() -> None:
    d = DESIGN
    print("decision vector")
    print(f"  architecture   {d.arch.value} (gearbox inside the stator)")
    print(f"  teeth          sun {d.sun_teeth}, planet {d.planet_teeth}, "
          f"ring {d.ring_teeth}")
    print(f"  module         {d.module_mm} mm")
    print(f"  planet count   {d.num_planets}")
    print(f"  gear ratio     {d.gear_ratio:.4f} (carrier speed per sun "
          "speed)")
    print(f"  reduction      {d.reduction_ratio:.1f}:1")
    print()

    # the three circles that define an involute gear: pitch (where the
    # module lives), base (where the involute starts), tip (outer or,
    # for the internal ring, inner boundary of the teeth)
    print("circle diameters, mm (pitch / base / tip)")
    for role, teeth in ((GearRole.SUN, d.sun_teeth),
                        (GearRole.PLANET, d.planet_teeth),
                        (GearRole.RING, d.ring_teeth)):
        pitch = pitch_diameter(teeth, d.module_mm)
        base = base_diameter(teeth, d.module_mm, PRESSURE_ANGLE_RAD)
        tip = tip_diameter(teeth, d.module_mm, role)
        print(f"  {role.value:<7} {pitch:7.3f} / {base:7.3f} / {tip:7.3f}")
    print()

    # feasibility rules, one by one
    print("feasibility rules")
    print(f"  concentricity  ring = sun + 2*planet: "
          f"{check_geometric(d)}")
    print(f"  even spacing   (sun + ring) divisible by planet count: "
          f"{check_meshing(d)}")
    margin = interference_margin_mm(d)
    print(f"  planet gap     {margin:.2f} mm between adjacent planet "
          f"tips (needs >= {RULES.planet_clearance_mm:.0f}): "
          f"{check_interference(d, RULES)}")
    envelope = max_gearbox_diameter(MOTOR, d.arch, RULES)
    print(f"  ring envelope  pitch ring "
          f"{d.module_mm * d.ring_teeth:.1f} mm inside the "
          f"{envelope:.1f} mm bound: {check_bounds(d, MOTOR, RULES)}")
    print()

    # the same checks as a single named-failure report
    print("constraint report for the design:",
          constraint_failures(d, MOTOR, RULES) or "feasible")

    # push the ring one size class up and watch the envelope rule trip
    big = GearboxDesign(arch=Architecture.ISSPG, sun_teeth=20,
                        planet_teeth=46, ring_teeth=112, module_mm=0.5,
                        num_planets=3)
    print("constraint report for a 56 mm ring:",
          constraint_failures(big, MOTOR, RULES))

    # the identical gear train mounted outside the stator has a wider
    # envelope (motor OD instead of stator bore) and becomes feasible
    external = GearboxDesign(arch=Architecture.ESSPG, sun_teeth=20,
                             planet_teeth=46, ring_teeth=112,
                             module_mm=0.5, num_planets=3)
    print("same train as an external stage:",
          constraint_failures(external, MOTOR, RULES) or "feasible")


if __name__ == "__main__":
    main()
