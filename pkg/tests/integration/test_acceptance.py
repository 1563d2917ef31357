"""
Seeded end-to-end properties of the lattice, the transform and the verdicts.
"""
from math import isqrt

import pytest

from src.lattice import NSClass, pair, square
from src.moduli import FMAction, check_consistency, decide, decide_existence, fm_ktheory
from src.mukai import POINT, V0, MukaiVector, chi, is_primitive, mukai_pair, self_pairing
from src.mukai.divisibility import congruent_mod2, gcd_divisibility
from src.surface import is_effective, isotropic_companion, weyl_reduce
from tests import models
from tests.oracle import OracleConfig, oracle_isotropic_exhaustive

# e, f, a1 and a3: the support of the sampled classes and of the oracle search.
SUPPORT = (0, 1, 2, 4)


def random_class(rng, span: int, support: tuple[int, ...] = tuple(range(10))) -> NSClass:
    coords = [0] * 10
    for i in support:
        coords[i] = rng.randint(-span, span)
    return NSClass(tuple(coords), rng.randint(0, 1))


def random_vector(rng, ranks: tuple[int, int], span: int, support=SUPPORT) -> MukaiVector:
    rank = rng.randint(*ranks)
    s = 2 * rng.randint(-4, 4) + rank % 2
    return MukaiVector(rank, random_class(rng, span, support), s)


@pytest.mark.integration
class TestWeylReductionProperties:
    """Weyl reduction over A2 and E8 configurations."""

    @pytest.mark.parametrize("build", [models.a2, models.e8])
    def test_reduction_on_seeded_classes(self, build, oracle_config: OracleConfig):
        """Test termination, invariance of the square and the nef end state."""
        model = build()
        rng = oracle_config.rng()
        for _ in range(500):
            d = random_class(rng, 5)
            trace = weyl_reduce(model, d)

            assert square(trace.final) == square(d)
            assert all(pair(trace.final, root) >= 0 for root in model.nodal_roots)
            degrees = [pair(d, model.ample)] + [pair(s.result, model.ample) for s in trace.steps]
            assert all(a > b for a, b in zip(degrees, degrees[1:]))


@pytest.mark.integration
@pytest.mark.slow
class TestIsotropicCompanionProperty:
    """Effective classes of positive square have a small isotropic companion."""

    @pytest.mark.parametrize("build", [models.single_root, models.a2])
    def test_companion_against_oracle(self, build, oracle_config: OracleConfig):
        """Test the companion bound and its minimality against exhaustive search."""
        model = build()
        rng = oracle_config.rng()
        checked = 0
        while checked < oracle_config.sample_count:
            d = random_class(rng, 6, SUPPORT).without_torsion()
            if not 2 <= square(d) <= 50 or not is_effective(model, d):
                continue
            checked += 1

            f = isotropic_companion(model, d)
            bound = isqrt(square(d))
            assert square(f) == 0
            assert 0 < pair(d, f) <= bound
            assert is_effective(model, f)

            nef = weyl_reduce(model, d).final
            pairings = [
                pair(nef, x)
                for x in oracle_isotropic_exhaustive(nef, 2, support=SUPPORT)
                if pair(nef, x) <= bound
            ]
            if pairings:
                assert pair(d, f) <= min(pairings)


@pytest.mark.integration
class TestFourierMukaiProperties:
    """The transform is an involutive isometry fixing chi."""

    @pytest.mark.parametrize("classical", [True, False])
    def test_seeded_vectors(self, classical: bool, oracle_config: OracleConfig):
        """Test involution, pairing, chi and the closed form on 1000 vectors."""
        rng = oracle_config.rng()
        phi = FMAction(classical)
        for _ in range(1000):
            v = random_vector(rng, (-4, 8), 5, support=tuple(range(10)))
            w = random_vector(rng, (-4, 8), 5, support=tuple(range(10)))

            assert phi.is_involution_on(v)
            assert mukai_pair(phi(v), phi(w)) == mukai_pair(v, w)
            assert chi(phi(v)) == chi(v)
            if not classical or v.rank % 2 == 0:
                assert check_consistency(v, classical)

    def test_point_and_v0(self):
        """Test that the point class and v0 are exchanged."""
        assert fm_ktheory(POINT) == V0
        assert fm_ktheory(V0) == POINT


@pytest.mark.integration
class TestStandardFixtures:
    """v0 and the rank-two spherical vectors on every test surface."""

    @pytest.mark.parametrize(
        "build", [models.unnodal, models.single_root, models.a2, models.a3, models.d4, models.e8]
    )
    def test_v0_is_case_iii(self, build):
        """Test that v0 gives a smooth two-dimensional moduli space."""
        verdict = decide_existence(build(), V0)
        assert verdict.nonempty is True
        assert verdict.case.value == "iii"
        assert verdict.dimension == 2

    def test_spherical_rank_two(self, single_root_model, non_classical_single_root_model):
        """Test that the torsion part matters on the classical surface only."""
        delta = models.DELTA
        with_k = decide_existence(single_root_model, MukaiVector(2, delta + models.K, 0))
        assert with_k.nonempty is True
        assert with_k.witness == delta
        assert decide_existence(single_root_model, MukaiVector(2, delta, 0)).nonempty is False
        twin = decide_existence(non_classical_single_root_model, MukaiVector(2, delta, 0))
        assert twin.nonempty is True


@pytest.mark.integration
class TestUnnodalDegeneracy:
    """Without nodal curves only the gcd and <v^2> matter."""

    def test_seeded_vectors(self, unnodal_model, oracle_config: OracleConfig):
        """Test the verdict on 200 primitive vectors."""
        rng = oracle_config.rng()
        checked = 0
        while checked < oracle_config.sample_count:
            v = random_vector(rng, (1, 4), 2)
            if not is_primitive(v):
                continue
            checked += 1

            q = self_pairing(v)
            g = gcd_divisibility(v).g_rs
            verdict = decide_existence(unnodal_model, v)
            if q == 0 and g == 2:
                expected = congruent_mod2(v.c1, (v.rank // 2) * models.K)
            else:
                expected = (g == 1 and q >= -1) or (g == 2 and q >= 2)
            assert verdict.nonempty is expected, str(v)
            if q == -2:
                assert verdict.nonempty is False


@pytest.mark.integration
class TestConstraintSoundness:
    """No stable sheaf has <v^2> < -2."""

    @pytest.mark.parametrize("build", [models.unnodal, models.single_root, models.a2])
    def test_seeded_vectors(self, build, oracle_config: OracleConfig):
        """Test 1000 vectors, most of them far below -2."""
        model = build()
        rng = oracle_config.rng()
        below = 0
        for _ in range(1000):
            v = random_vector(rng, (0, 4), 3)
            verdict = decide(model, v)
            assert verdict.invariant_violations() == []
            if self_pairing(v) < -2:
                below += 1
                assert verdict.nonempty is not True, str(v)
        assert below > 100


@pytest.mark.integration
class TestTransformCompatibility:
    """Existence is invariant under the transform."""

    @pytest.mark.parametrize("classical", [True, False])
    @pytest.mark.parametrize("build", [models.unnodal, models.single_root])
    def test_curated_vectors(self, build, classical: bool, oracle_config: OracleConfig):
        """Test v and its image on 100 primitive vectors with r > 0 and s > 0."""
        model = build(classical=classical)
        rng = oracle_config.rng()
        checked = 0
        while checked < 100:
            rank = rng.randint(1, 4)
            s = 2 * rng.randint(0, 3) + rank % 2
            if s <= 0:
                continue
            v = MukaiVector(rank, random_class(rng, 2, SUPPORT), s)
            if not is_primitive(v):
                continue
            checked += 1

            image = fm_ktheory(v, classical)
            assert image.rank == s
            verdict = decide_existence(model, v)
            image_verdict = decide_existence(model, image)
            assert verdict.nonempty == image_verdict.nonempty, str(v)
