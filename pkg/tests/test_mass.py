"""Component mass rules and the bearing power-law regression.

Frozen values come from a 50-digit independent evaluation of the same
cylinder/annulus volumes and an explicit least-squares fit on the
packaged bearing table.
"""

from dataclasses import replace
from math import pi

import pytest

from gearboxopt import (Architecture, ConstraintParams, GearboxDesign,
                        MassModelParams, MaterialSpec, StrengthParams,
                        actuator_mass, base_plate_mass, bearing_fit_report,
                        bearing_mass, bearing_od, bearing_width,
                        bearings_total_mass, carrier_disk_od_mm,
                        carrier_mass, casing_length_mm, casing_mass,
                        default_bearing_table_path, face_width,
                        fit_bearing_model, gearbox_stack_height_mm,
                        load_bearing_model, load_bearing_table,
                        output_bearing_bore_mm, pin_circle_diameter_mm,
                        planet_pin_mass, ring_gear_mass,
                        secondary_carrier_mass, spur_gear_mass)
from gearboxopt.search import enumerate_feasible

REL = 1e-12

REFERENCE = GearboxDesign(arch=Architecture.ISSPG, sun_teeth=20,
                          planet_teeth=40, ring_teeth=100, module_mm=0.5,
                          num_planets=3)
FACE_REFERENCE_MM = 28.90760138979485  # Lewis width for the 3 Nm load

SPUR_SUN_KG = 0.006165375582669969        # N=20, m=0.5, b=10, solid
SPUR_PLANET_BORED_KG = 0.1017286971140545  # N=40, m=1.0, b=12, bore 15
RING_KG = 0.021902496757435066            # N=100, m=0.5, b=10, wall 1.25

FIT_MASS_C = 1.2605464023210938e-04
FIT_MASS_K = 1.5531439277425586
FIT_MASS_R2 = 0.997791458722656
FIT_MASS_MAX_RESIDUAL = 0.07570945451080643
FIT_OD_C = 2.8700690850804213
FIT_OD_K = 0.79508715489982903
FIT_WIDTH_C = 2.173037306600912
FIT_WIDTH_K = 0.33584711136533132
BEARING_MASS_30_KG = 0.024816512221256521
BEARING_OD_15_MM = 24.716524564602459
BEARING_WIDTH_30_MM = 6.8101094037136446

# full actuator, U12 motor, reference design at the frozen face width
BREAKDOWN_KG = {
    "sun": 0.017822621976219762,
    "planets_total": 0.21387146371463715,
    "ring": 0.063314864570520705,
    "carrier": 0.071780316384625735,
    "secondary_carrier": 0.010913999756762486,
    "bearings_total": 0.046788400073273029,
    "casing": 0.12140461756719351,
    "base_plate": 0.07094188707340853,
    "motor": 0.765,
    "total": 1.3818381711166409,
}


def write_table(path, rows, header="bore_mm,od_mm,width_mm,mass_kg"):
    lines = [header] + [",".join(str(v) for v in row) for row in rows]
    path.write_text("\n".join(lines) + "\n")
    return path


class TestBearingTable:
    def test_packaged_table_loads(self):
        assert default_bearing_table_path().is_file()
        table = load_bearing_table(default_bearing_table_path())
        assert len(table) == 13
        assert table[0].bore_mm == 10.0
        assert table[-1].bore_mm == 60.0

    def test_rejects_wrong_header(self, tmp_path):
        path = write_table(tmp_path / "t.csv",
                           [(10, 20, 5, 0.01), (20, 30, 6, 0.02),
                            (30, 40, 7, 0.04)],
                           header="bore,od,width,mass")
        with pytest.raises(ValueError, match="header"):
            load_bearing_table(path)

    def test_rejects_too_few_rows(self, tmp_path):
        path = write_table(tmp_path / "t.csv",
                           [(10, 20, 5, 0.01), (20, 30, 6, 0.02)])
        with pytest.raises(ValueError, match="at least 3"):
            load_bearing_table(path)

    def test_rejects_non_increasing_bores(self, tmp_path):
        path = write_table(tmp_path / "t.csv",
                           [(10, 20, 5, 0.01), (30, 40, 7, 0.04),
                            (30, 45, 7, 0.05)])
        with pytest.raises(ValueError, match="strictly increasing"):
            load_bearing_table(path)

    def test_rejects_bad_columns_and_values(self, tmp_path):
        path = write_table(tmp_path / "t.csv",
                           [(10, 20, 5, 0.01), (20, 30, 6),
                            (30, 40, 7, 0.04)])
        with pytest.raises(ValueError, match="4 columns"):
            load_bearing_table(path)
        path = write_table(tmp_path / "u.csv",
                           [(10, 20, 5, 0.01), (20, 30, 6, -0.02),
                            (30, 40, 7, 0.04)])
        with pytest.raises(ValueError, match="positive"):
            load_bearing_table(path)

    def test_blank_lines_tolerated(self, tmp_path):
        path = tmp_path / "t.csv"
        path.write_text("bore_mm,od_mm,width_mm,mass_kg\n"
                        "10,20,5,0.01\n\n20,30,6,0.02\n30,40,7,0.04\n")
        assert len(load_bearing_table(path)) == 3


class TestBearingFit:
    def test_frozen_fit_constants(self, bearing_model):
        assert bearing_model.mass_c == pytest.approx(FIT_MASS_C, rel=REL)
        assert bearing_model.mass_k == pytest.approx(FIT_MASS_K, rel=REL)
        assert bearing_model.od_c == pytest.approx(FIT_OD_C, rel=REL)
        assert bearing_model.od_k == pytest.approx(FIT_OD_K, rel=REL)
        assert bearing_model.width_c == pytest.approx(FIT_WIDTH_C, rel=REL)
        assert bearing_model.width_k == pytest.approx(FIT_WIDTH_K, rel=REL)

    def test_fit_quality_bounds(self, bearing_model):
        report = bearing_fit_report(bearing_model)
        stats = report["mass_kg"]
        assert stats["r_squared"] == pytest.approx(FIT_MASS_R2, rel=REL)
        assert stats["r_squared"] >= 0.95
        assert stats["max_relative_residual"] == pytest.approx(
            FIT_MASS_MAX_RESIDUAL, rel=REL)
        assert stats["max_relative_residual"] <= 0.15
        assert len(stats["relative_residuals"]) == 13

    def test_fitted_values(self, bearing_model):
        assert bearing_mass(30.0, bearing_model) == pytest.approx(
            BEARING_MASS_30_KG, rel=REL)
        assert bearing_od(15.0, bearing_model) == pytest.approx(
            BEARING_OD_15_MM, rel=REL)
        assert bearing_width(30.0, bearing_model) == pytest.approx(
            BEARING_WIDTH_30_MM, rel=REL)

    def test_range_guard(self, bearing_model):
        with pytest.raises(ValueError, match="outside the fitted range"):
            bearing_mass(5.0, bearing_model)
        with pytest.raises(ValueError, match="outside the fitted range"):
            bearing_od(70.0, bearing_model)
        # explicit extrapolation bypasses the guard
        assert bearing_mass(70.0, bearing_model, extrapolate=True) > \
            bearing_mass(60.0, bearing_model)

    def test_decreasing_mass_table_rejected(self, tmp_path):
        path = write_table(tmp_path / "t.csv",
                           [(10, 20, 5, 0.5), (20, 30, 6, 0.3),
                            (30, 40, 7, 0.1)])
        with pytest.raises(ValueError, match="monotone"):
            fit_bearing_model(load_bearing_table(path))

    def test_default_path_equals_explicit(self, bearing_model):
        explicit = load_bearing_model(default_bearing_table_path())
        assert explicit == bearing_model


class TestGearMasses:
    def test_spur_gear_frozen(self):
        materials = MaterialSpec()
        assert spur_gear_mass(20, 0.5, 10.0, 0.0, materials) == \
            pytest.approx(SPUR_SUN_KG, rel=REL)
        assert spur_gear_mass(40, 1.0, 12.0, 15.0, materials) == \
            pytest.approx(SPUR_PLANET_BORED_KG, rel=REL)

    def test_spur_gear_guards(self):
        materials = MaterialSpec()
        with pytest.raises(ValueError):
            spur_gear_mass(20, 0.5, 10.0, -1.0, materials)
        with pytest.raises(ValueError, match="pitch diameter"):
            spur_gear_mass(20, 0.5, 10.0, 10.0, materials)

    def test_ring_gear_frozen(self):
        assert ring_gear_mass(100, 0.5, 10.0, 1.25, MaterialSpec()) == \
            pytest.approx(RING_KG, rel=REL)

    def test_ring_gear_guard(self):
        with pytest.raises(ValueError):
            ring_gear_mass(100, 0.5, 10.0, 0.0, MaterialSpec())


class TestCarrierAndCasing:
    def test_layout_helpers(self):
        assert pin_circle_diameter_mm(REFERENCE) == pytest.approx(30.0)
        assert output_bearing_bore_mm(REFERENCE) == pytest.approx(30.0)
        # pin circle plus half the 21 mm planet tip diameter
        assert carrier_disk_od_mm(REFERENCE) == pytest.approx(40.5)

    def test_pin_mass(self):
        # 10 mm pin, length = width + 4 mm engagement
        expected = 7850.0 * (10.0 + 4.0) * pi / 4.0 * 100.0 * 1e-9
        assert planet_pin_mass(10.0, MaterialSpec(), MassModelParams()) == \
            pytest.approx(expected, rel=1e-15)

    def test_secondary_carrier_is_disk_only(self, bearing_model):
        materials = MaterialSpec()
        params = MassModelParams()
        disk = secondary_carrier_mass(REFERENCE, bearing_model, materials,
                                      params)
        full = carrier_mass(REFERENCE, 10.0, bearing_model, materials,
                            params)
        pins = 3 * planet_pin_mass(10.0, materials, params)
        assert full == pytest.approx(disk + pins, rel=1e-12)

    def test_carrier_must_clear_input_bearing(self, bearing_model):
        tight = GearboxDesign(arch=Architecture.ISSPG, sun_teeth=20,
                              planet_teeth=20, ring_teeth=60, module_mm=0.5,
                              num_planets=3)
        big_bore = MassModelParams(input_bearing_bore_mm=25.0)
        with pytest.raises(ValueError, match="clear"):
            carrier_mass(tight, 10.0, bearing_model, MaterialSpec(),
                         big_bore)

    def test_stack_and_casing_lengths(self, u12):
        params = MassModelParams()
        assert gearbox_stack_height_mm(10.0, params) == pytest.approx(20.0)
        assert casing_length_mm(REFERENCE, u12, 10.0, params) == \
            pytest.approx(46.5)
        external = replace(REFERENCE, arch=Architecture.ESSPG)
        assert casing_length_mm(external, u12, 10.0, params) == \
            pytest.approx(46.5 + 20.0)

    def test_casing_mass_scales_with_length(self, u12):
        materials = MaterialSpec()
        params = MassModelParams()
        internal = casing_mass(REFERENCE, u12, 10.0, materials, params)
        external = casing_mass(replace(REFERENCE, arch=Architecture.ESSPG),
                               u12, 10.0, materials, params)
        assert external / internal == pytest.approx((46.5 + 20.0) / 46.5,
                                                    rel=1e-12)

    def test_casing_wall_guard(self, u12):
        with pytest.raises(ValueError, match="wall"):
            casing_mass(REFERENCE, u12, 10.0, MaterialSpec(),
                        MassModelParams(casing_wall_mm=60.0))


class TestActuatorMass:
    def test_frozen_breakdown(self, u12, bearing_model):
        breakdown = actuator_mass(REFERENCE, u12, FACE_REFERENCE_MM,
                                  bearing_model, MaterialSpec(),
                                  MassModelParams())
        actual = breakdown.as_dict()
        assert actual.keys() == BREAKDOWN_KG.keys()
        for key, expected in BREAKDOWN_KG.items():
            assert actual[key] == pytest.approx(expected, rel=REL), key

    def test_total_is_component_sum(self, u12, bearing_model):
        breakdown = actuator_mass(REFERENCE, u12, FACE_REFERENCE_MM,
                                  bearing_model, MaterialSpec(),
                                  MassModelParams())
        parts = breakdown.as_dict()
        total = parts.pop("total")
        assert total == pytest.approx(sum(parts.values()), rel=1e-15)

    def test_bearing_count_rule(self, u12, bearing_model):
        params = MassModelParams()
        expected = (3 * bearing_mass(10.0, bearing_model)
                    + bearing_mass(15.0, bearing_model)
                    + bearing_mass(30.0, bearing_model))
        assert bearings_total_mass(REFERENCE, bearing_model, params) == \
            pytest.approx(expected, rel=1e-15)

    def test_base_plate(self, u12):
        expected = 2700.0 * 3.0 * pi / 4.0 * 105.6 ** 2 * 1e-9
        assert base_plate_mass(u12, MaterialSpec(), MassModelParams()) == \
            pytest.approx(expected, rel=1e-15)

    def test_fastener_offset_keeps_gears_solid(self, u12, bearing_model):
        # without the offset, gear bores are subtracted and mass drops
        bored_params = MassModelParams(fastener_offset=False)
        big = GearboxDesign(arch=Architecture.ISSPG, sun_teeth=20,
                            planet_teeth=40, ring_teeth=100, module_mm=1.0,
                            num_planets=3)
        solid = actuator_mass(big, u12, 10.0, bearing_model, MaterialSpec(),
                              MassModelParams())
        bored = actuator_mass(big, u12, 10.0, bearing_model, MaterialSpec(),
                              bored_params)
        assert bored.sun < solid.sun
        assert bored.planets_total < solid.planets_total
        assert bored.ring == solid.ring
        materials = MaterialSpec()
        assert bored.sun == pytest.approx(
            spur_gear_mass(20, 1.0, 10.0, 15.0, materials), rel=1e-15)
        assert bored.planets_total == pytest.approx(
            3 * spur_gear_mass(40, 1.0, 10.0, 10.0, materials), rel=1e-15)

    def test_internal_layout_never_heavier(self, u12, u12_load,
                                           bearing_model):
        # identical gear train: the internal layout's shorter casing keeps
        # its actuator total at or below the external one
        materials = MaterialSpec()
        mass_params = MassModelParams()
        strength = StrengthParams()
        constraints = ConstraintParams()
        modules = [0.5, 0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2]
        checked = 0
        for d in enumerate_feasible(u12, Architecture.ESSPG, constraints,
                                    modules):
            # the output bearing bore must stay inside the fitted catalog
            # range; it is the same for both layouts, so skipping wide
            # designs does not bias the comparison
            bore = output_bearing_bore_mm(d)
            if not (bearing_model.bore_min_mm <= bore
                    <= bearing_model.bore_max_mm):
                continue
            width = face_width(u12_load, d, strength)
            external = actuator_mass(d, u12, width, bearing_model,
                                     materials, mass_params)
            internal = actuator_mass(replace(d, arch=Architecture.ISSPG),
                                     u12, width, bearing_model, materials,
                                     mass_params)
            assert internal.total <= external.total
            checked += 1
        assert checked > 1000
