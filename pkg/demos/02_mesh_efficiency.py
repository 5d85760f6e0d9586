"""
Meshing efficiency of a planetary stage
=======================================

Compute the sliding-friction losses of both meshes (sun-planet and
planet-ring) from involute contact ratios, then combine them into the
stage efficiency of a fixed-ring, carrier-output planetary train. Show
how tooth counts and the friction coefficient move the result, and
check the frictionless limit exactly.
"""

from math import degrees

from gearboxopt import (Architecture, EfficiencyParams, GearboxDesign,
                        GearRole, MeshKind, basic_driving_efficiency,
                        contact_ratios, loss_parameter, overall_efficiency,
                        planetary_efficiency, tip_pressure_angle)

DESIGN = GearboxDesign(arch=Architecture.ISSPG, sun_teeth=20,
                       planet_teeth=40, ring_teeth=100, module_mm=0.5,
                       num_planets=3)


def main() -> None:
    params = EfficiencyParams()  # 20 degree pressure angle, mu = 0.06
    d = DESIGN

    # tip pressure angles: where the involute leaves the tooth tip
    print("tip pressure angles, degrees")
    for role, teeth in ((GearRole.SUN, d.sun_teeth),
                        (GearRole.PLANET, d.planet_teeth),
                        (GearRole.RING, d.ring_teeth)):
        angle = tip_pressure_angle(teeth, d.module_mm, role,
                                   params.pressure_angle_rad)
        print(f"  {role.value:<7} {degrees(angle):6.2f}")
    print()

    # approach/recess contact ratios of each mesh and the loss
    # parameter they combine into
    eps_a1, eps_a2 = contact_ratios(d.sun_teeth, d.planet_teeth,
                                    d.module_mm, MeshKind.SUN_PLANET,
                                    params.pressure_angle_rad)
    eps_b1, eps_b2 = contact_ratios(d.planet_teeth, d.ring_teeth,
                                    d.module_mm, MeshKind.PLANET_RING,
                                    params.pressure_angle_rad)
    print("contact ratios (approach, recess) and loss parameter")
    print(f"  sun-planet   ({eps_a1:.4f}, {eps_a2:.4f}) -> "
          f"{loss_parameter(eps_a1, eps_a2):.4f}")
    print(f"  planet-ring  ({eps_b1:.4f}, {eps_b2:.4f}) -> "
          f"{loss_parameter(eps_b1, eps_b2):.4f}")
    print()

    # per-mesh basic driving efficiencies and the stage blend: the
    # sun's share of the power passes through the carrier without
    # meshing losses, so the stage beats the plain mesh product
    eta_sp = basic_driving_efficiency(d.sun_teeth, d.planet_teeth,
                                      d.module_mm, MeshKind.SUN_PLANET,
                                      params)
    eta_pr = basic_driving_efficiency(d.planet_teeth, d.ring_teeth,
                                      d.module_mm, MeshKind.PLANET_RING,
                                      params)
    eta = overall_efficiency(d.sun_teeth, d.ring_teeth, eta_sp, eta_pr)
    print(f"mesh efficiencies: sun-planet {eta_sp:.6f}, "
          f"planet-ring {eta_pr:.6f}")
    print(f"plain product {eta_sp * eta_pr:.6f} vs stage blend "
          f"{eta:.6f}")
    print()

    # one call that returns the whole chain
    breakdown = planetary_efficiency(d, params)
    print(f"full breakdown in one call: eta_overall = "
          f"{breakdown.eta_overall:.6f}")
    print()

    # sensitivity to the friction coefficient, including the exact
    # frictionless limit at mu = 0
    print("friction sensitivity")
    print("  mu     eta_overall")
    for mu in (0.0, 0.03, 0.06, 0.09, 0.12):
        point = planetary_efficiency(d, EfficiencyParams(mu=mu))
        print(f"  {mu:.2f}   {point.eta_overall:.6f}")
    frictionless = planetary_efficiency(d, EfficiencyParams(mu=0.0))
    print(f"  frictionless limit is exact: "
          f"{frictionless.eta_overall == 1.0}")
    print()

    # more teeth mean shorter sliding arcs per unit pitch: compare a
    # coarse and a fine train at the same 6.0:1 reduction
    fine = GearboxDesign(arch=Architecture.ISSPG, sun_teeth=25,
                         planet_teeth=50, ring_teeth=125, module_mm=0.5,
                         num_planets=3)
    print("tooth-count sensitivity at 6.0:1")
    for variant in (d, fine):
        point = planetary_efficiency(variant, params)
        print(f"  Ns={variant.sun_teeth:<3} Np={variant.planet_teeth:<3} "
              f"Nr={variant.ring_teeth:<4} eta = "
              f"{point.eta_overall:.6f}")


if __name__ == "__main__":
    main()
