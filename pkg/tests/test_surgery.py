"""Connect-sum gates, framing parity, homology composition, gluing check."""

from __future__ import annotations

import random

import numpy as np
import pytest

from circle6 import (
    Admissibility,
    BadDimensions,
    DimensionPair,
    HomologyProfile,
    HomotopyGroup,
    InvalidData,
    MissingProfile,
    NotAdmissible,
    NotSimplyConnected,
    S4_X_S2,
    SPHERE_PROFILE,
    WrongDimension,
    c1_cubed,
    chi_y_profile,
    classify,
    dataset,
    equivariant_normal_framing_class,
    equivariantly_formal,
    gen_family,
    is_sphere_summand,
    jang_case,
    kustarev_admissible,
    kustarev_sum,
    psi_flip,
    rotation_loop_class,
    stable_pi_so_mod_u,
    standard_sphere,
    todd_genus,
    validate,
    verify_framing_reversal_identity,
)


# ---- stable homotopy table -------------------------------------------------

def test_stable_table_vanishing_residues():
    for q in range(0, 64):
        expected_zero = q % 8 in (1, 3, 4, 5)
        assert (stable_pi_so_mod_u(q) is HomotopyGroup.ZERO) == expected_zero


def test_stable_table_nonzero_entries():
    assert stable_pi_so_mod_u(0) is HomotopyGroup.Z2
    assert stable_pi_so_mod_u(2) is HomotopyGroup.Z
    assert stable_pi_so_mod_u(4) is HomotopyGroup.ZERO
    assert stable_pi_so_mod_u(5) is HomotopyGroup.ZERO
    assert stable_pi_so_mod_u(6) is HomotopyGroup.Z
    assert stable_pi_so_mod_u(7) is HomotopyGroup.Z2
    with pytest.raises(ValueError):
        stable_pi_so_mod_u(-1)


# ---- admissibility gate ------------------------------------------------------

def test_circle_actions_on_6_manifolds_are_admissible_and_unique():
    assert kustarev_admissible(DimensionPair(3, 1)) == Admissibility(True, True)


def test_8_manifolds_are_not_admissible():
    assert kustarev_admissible(DimensionPair(4, 1)) == Admissibility(False, False)


def test_2_torus_on_6_manifolds():
    assert kustarev_admissible(DimensionPair(3, 2)) == Admissibility(True, True)


def test_residue_truth_table():
    for m in range(1, 17):
        # realize slice dimension m with k = 1 or 2
        n, k = ((m + 1) // 2, 1) if m % 2 else ((m + 2) // 2, 2)
        dim = DimensionPair(n, k)
        assert dim.slice_dim == m
        adm = kustarev_admissible(dim)
        assert adm.exists == (m % 8 in (2, 4, 5, 6)), m
        assert adm.unique == (m % 8 in (4, 5)), m


@pytest.mark.parametrize("n,k", [(3, 0), (3, -1), (3, 6), (2, 7), (0, 1)])
def test_bad_dimension_pairs(n, k):
    with pytest.raises(BadDimensions):
        DimensionPair(n, k)


# ---- framing parity ---------------------------------------------------------

def test_orbit_rotation_loop_is_always_even():
    for a in range(1, 8):
        for b in range(1, 8):
            assert rotation_loop_class((-a, b, a + b)) == 0


def test_single_block_loop_generates():
    assert rotation_loop_class((1,)) == 1
    assert rotation_loop_class((2, 3, 5)) == 0
    assert rotation_loop_class(()) == 0


def test_loop_class_is_additive_under_concatenation():
    rng = random.Random(3)
    for _ in range(50):
        xs = [rng.randint(-9, 9) for _ in range(rng.randint(0, 5))]
        ys = [rng.randint(-9, 9) for _ in range(rng.randint(0, 5))]
        assert rotation_loop_class(xs + ys) == (
            rotation_loop_class(xs) + rotation_loop_class(ys)) % 2


def test_psi_flip_swaps_and_involutes():
    assert psi_flip(0) == 1
    assert psi_flip(1) == 0
    for x in (0, 1):
        assert psi_flip(psi_flip(x)) == x
    with pytest.raises(ValueError):
        psi_flip(2)


def test_equivariant_framing_is_always_nontrivial():
    assert equivariant_normal_framing_class(1, 1) == 1
    assert equivariant_normal_framing_class(2, 5) == 1
    assert equivariant_normal_framing_class(7, 3) == 1
    with pytest.raises(ValueError):
        equivariant_normal_framing_class(0, 1)


# ---- the sum ---------------------------------------------------------------

def test_sum_of_two_spheres():
    ks = kustarev_sum(standard_sphere(1, 2), None, standard_sphere(3, 4), None)
    assert ks.data.names() == ("m1.p1", "m1.p2", "m2.p1", "m2.p2")
    assert ks.homology == HomologyProfile(True, 1, 0, True)
    assert ks.report.unique is True
    assert ks.report.euler == 4
    assert ks.report.summands == ("S^6", "S^6")
    assert ks.report.diffeotype == S4_X_S2
    assert ks.data.labels["construction"] == "kustarev-sum"
    assert validate(ks.data) == []          # includes the euler consistency check
    assert ks.data.homology == ks.homology


def test_sum_of_sphere_and_projective_space():
    cp3 = gen_family(jang_case("A", 1, 2, 3))
    cp3_profile = HomologyProfile(True, 1, 0, True)
    ks = kustarev_sum(standard_sphere(1, 1), None, cp3, cp3_profile)
    assert ks.homology.b2 == 2
    assert ks.homology.b3 == 0
    assert ks.report.euler == 6 == len(ks.data.points)
    assert ks.report.summands == ("S^6", "generic")
    assert ks.report.diffeotype is None


def test_sum_classifies_as_the_sphere_union_case():
    ks = kustarev_sum(standard_sphere(2, 3), None, standard_sphere(1, 4), None)
    result = classify(ks.data)
    assert any(m.case == jang_case("D", 2, 3, 1, 4) and not m.reversed
               for m in result.matches)


def test_sum_localization_is_additive():
    d1, d2 = standard_sphere(1, 2), gen_family(jang_case("F", 2, 1))
    f_profile = HomologyProfile(True, 1, 0, True)
    ks = kustarev_sum(d1, None, d2, f_profile)
    assert c1_cubed(ks.data) == c1_cubed(d1) + c1_cubed(d2)
    assert todd_genus(ks.data) == todd_genus(d1) + todd_genus(d2)
    assert chi_y_profile(ks.data) == [
        x + y for x, y in zip(chi_y_profile(d1), chi_y_profile(d2))]


def test_sum_gates():
    with pytest.raises(NotAdmissible):
        kustarev_sum(dataset(4, [("p", (1, 2, 3, 4))]), SPHERE_PROFILE,
                     dataset(4, [("q", (-1, -2, -3, -4))]), SPHERE_PROFILE)
    not_sc = HomologyProfile(False, 0, 0, True)
    with pytest.raises(NotSimplyConnected):
        kustarev_sum(standard_sphere(1, 1), not_sc, standard_sphere(1, 1), None)
    with pytest.raises(MissingProfile):
        kustarev_sum(standard_sphere(1, 1), None,
                     dataset(3, [("p", (1, 2, -3)), ("q", (-1, -2, 3))]), None)
    with pytest.raises(WrongDimension):
        kustarev_sum(standard_sphere(1, 1), None,
                     dataset(2, [("p", (1, -1)), ("q", (-1, 1))]), SPHERE_PROFILE)
    with pytest.raises(InvalidData):
        kustarev_sum(dataset(3, []), SPHERE_PROFILE, standard_sphere(1, 1), None)


def test_torsion_flag_is_conjunction():
    torsion = HomologyProfile(True, 0, 0, False)
    sphere_like = dataset(3, [("p1", (1, 2, -3)), ("p2", (-1, -2, 3))])
    ks = kustarev_sum(sphere_like, torsion, standard_sphere(1, 1), None)
    assert ks.homology.torsion_free is False
    assert ks.report.summands[0] == "generic"  # torsion disqualifies the sphere shape
    assert ks.report.diffeotype is None


def test_is_sphere_summand():
    assert is_sphere_summand(standard_sphere(3, 7), SPHERE_PROFILE)
    reordered = dataset(3, [("x", (-4, 1, 3)), ("y", (4, -1, -3))])
    assert is_sphere_summand(reordered, SPHERE_PROFILE)
    assert not is_sphere_summand(gen_family(jang_case("F", 1, 1)),
                                 HomologyProfile(True, 1, 0, True))
    assert not is_sphere_summand(standard_sphere(1, 1), None)


def test_iterated_sums_keep_names_unique():
    ks1 = kustarev_sum(standard_sphere(1, 2), None, standard_sphere(1, 1), None)
    ks2 = kustarev_sum(ks1.data, None, standard_sphere(2, 3), None)
    assert len(set(ks2.data.names())) == 6
    assert ks2.homology.b2 == 2
    assert ks2.report.summands == ("generic", "S^6")


# ---- formality --------------------------------------------------------------

def test_formality():
    assert equivariantly_formal(SPHERE_PROFILE)
    assert equivariantly_formal(SPHERE_PROFILE, integral=True)
    assert not equivariantly_formal(HomologyProfile(True, 1, 2, True))
    assert not equivariantly_formal(HomologyProfile(False, 0, 0, True))
    assert equivariantly_formal(HomologyProfile(True, 0, 0, False))
    assert not equivariantly_formal(HomologyProfile(True, 0, 0, False), integral=True)
    with pytest.raises(MissingProfile):
        equivariantly_formal(None)
    ks = kustarev_sum(standard_sphere(1, 1), None, standard_sphere(2, 1), None)
    assert equivariantly_formal(ks.homology, integral=True)


# ---- gluing identity ---------------------------------------------------------

def test_gluing_identity_holds():
    check = verify_framing_reversal_identity(samples=1000, tolerance=1e-9, seed=7)
    assert check.passed
    assert check.worst_deviation < 1e-12


def test_gluing_check_is_deterministic_per_seed():
    a = verify_framing_reversal_identity(samples=500, tolerance=1e-9, seed=11)
    b = verify_framing_reversal_identity(samples=500, tolerance=1e-9, seed=11)
    assert a == b


def test_gluing_identity_for_other_radial_maps():
    for alpha in (lambda r: 2.0 / r, lambda r: 1.0 / r**3):
        check = verify_framing_reversal_identity(samples=400, tolerance=1e-9,
                                                 seed=5, alpha=alpha)
        assert check.passed, check


def test_mutated_collar_map_fails():
    def stretched(z1, z2, z3, t):
        return z1, z1 * z2, 2.0 * z3, t

    def stretched_inverse(z1, z2, z3, t):
        return z1, z2 / z1, z3 / 2.0, t

    check = verify_framing_reversal_identity(
        samples=400, tolerance=1e-9, seed=5,
        collar_map=stretched, collar_map_inverse=stretched_inverse)
    assert not check.passed
    assert check.worst_deviation > 1e-3


def test_phase_twisted_collar_is_the_same_map():
    # conj(z1) * z2 * z1^2 equals z1 * z2 on |z1| = 1, so this "mutation"
    # does not change the map at all and the identity still holds
    def twisted(z1, z2, z3, t):
        return z1, np.conj(z1) * z2 * z1**2, z3, t

    def twisted_inverse(z1, z2, z3, t):
        return z1, z2 / z1, z3, t

    check = verify_framing_reversal_identity(
        samples=400, tolerance=1e-9, seed=5,
        collar_map=twisted, collar_map_inverse=twisted_inverse)
    assert check.passed


def test_gluing_check_argument_validation():
    with pytest.raises(ValueError):
        verify_framing_reversal_identity(samples=0)
    with pytest.raises(ValueError):
        verify_framing_reversal_identity(tolerance=0.0)
