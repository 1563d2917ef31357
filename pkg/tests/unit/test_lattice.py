"""
Unit tests for the Enriques lattice: Gram form, classes and reflections.
"""
import pytest
from hypothesis import given, strategies as st

from src.errors import NotARoot
from src.lattice import (
    CANONICAL,
    E,
    F,
    ZERO,
    GramForm,
    NSClass,
    Reflection,
    e8_root,
    enriques_form,
    pair,
    reflect,
    square,
)
from src.lattice.form import E8_EDGES

coords = st.lists(st.integers(min_value=-5, max_value=5), min_size=10, max_size=10)
classes = st.builds(
    lambda free, t: NSClass(tuple(free), t), coords, st.integers(min_value=0, max_value=1)
)
roots = st.sampled_from([e8_root(i) for i in range(1, 9)] + [E - F, e8_root(1) + e8_root(3)])


class TestGramForm:
    """Test the fixed U + E8(-1) form."""

    def test_determinant_is_minus_one(self):
        """Test that the form is unimodular with determinant -1."""
        assert enriques_form().determinant == -1

    def test_even_and_symmetric(self):
        """Test that the Gram matrix is even and symmetric."""
        form = enriques_form()
        assert form.is_even
        assert form.is_symmetric

    def test_signature(self):
        """Test the signature (1, 9)."""
        assert enriques_form().signature == (1, 9)

    def test_check_passes(self):
        """Test that the built-in checks pass."""
        GramForm.enriques().check()


class TestPair:
    """Test the intersection pairing."""

    def test_hyperbolic_plane(self):
        """Test the pairing on e and f."""
        assert pair(E, F) == 1
        assert pair(E, E) == 0
        assert pair(F, F) == 0

    def test_canonical_is_numerically_trivial(self):
        """Test that K_X pairs to zero with everything."""
        for x in (E, F, e8_root(4), E + F + CANONICAL):
            assert pair(CANONICAL, x) == 0

    def test_simple_roots(self):
        """Test that simple roots have square -2."""
        for i in range(1, 9):
            assert square(e8_root(i)) == -2

    def test_adjacent_roots_pair_to_one(self):
        """Test that roots joined in the Dynkin diagram pair to 1."""
        for i, j in E8_EDGES:
            assert pair(e8_root(i), e8_root(j)) == 1
        assert pair(e8_root(1), e8_root(2)) == 0

    @given(classes, classes, classes, st.integers(min_value=-4, max_value=4))
    def test_bilinear_and_symmetric(self, x, y, z, n):
        """Test bilinearity and symmetry of the pairing."""
        assert pair(x, y) == pair(y, x)
        assert pair(x + y, z) == pair(x, z) + pair(y, z)
        assert pair(n * x, y) == n * pair(x, y)


class TestNSClass:
    """Test class arithmetic with the 2-torsion bit."""

    def test_torsion_is_xor(self):
        """Test that torsion bits add modulo 2."""
        assert CANONICAL + CANONICAL == ZERO
        assert (E + CANONICAL) + CANONICAL == E

    def test_negation_keeps_torsion(self):
        """Test that negation keeps the torsion bit."""
        assert -CANONICAL == CANONICAL
        assert (-(E + CANONICAL)).torsion == 1

    def test_scalar_multiplication(self):
        """Test that multiplication reduces the torsion bit modulo 2."""
        assert 2 * CANONICAL == ZERO
        assert 3 * CANONICAL == CANONICAL
        assert (E + CANONICAL) * 4 == 4 * E

    def test_of_pads_coordinates(self):
        """Test zero padding and reduction of the torsion bit."""
        assert NSClass.of(2, 2, -1) == NSClass((2, 2, -1, 0, 0, 0, 0, 0, 0, 0))
        assert NSClass.of(torsion=3) == CANONICAL

    def test_invalid_arity_raises(self):
        """Test that a class needs 10 coordinates."""
        with pytest.raises(ValueError, match="10 coordinates"):
            NSClass((1, 2))

    def test_invalid_torsion_raises(self):
        """Test that the torsion bit must be 0 or 1."""
        with pytest.raises(ValueError, match="torsion bit"):
            NSClass((0,) * 10, 2)

    def test_divisibility_ignores_torsion(self):
        """Test that divisibility uses the free part only."""
        assert (2 * E + 4 * F).divisibility == 2
        assert (2 * E + 4 * F + CANONICAL).divisibility == 2
        assert CANONICAL.divisibility == 0
        assert ZERO.divisibility == 0

    def test_height(self):
        """Test the largest absolute coordinate."""
        assert NSClass.of(1, -7, 3).height == 7

    def test_str(self):
        """Test the bracket rendering."""
        assert str(E + CANONICAL) == "[1,0,0,0,0,0,0,0,0,0;1]"

    def test_e8_root_range(self):
        """Test that simple roots are numbered 1 to 8."""
        with pytest.raises(ValueError):
            e8_root(9)


class TestReflection:
    """Test reflections in (-2)-classes."""

    def test_root_is_negated(self):
        """Test that a root is sent to its negative."""
        delta = e8_root(1)
        assert reflect(delta, delta) == -delta

    def test_orthogonal_class_fixed(self):
        """Test that orthogonal classes are fixed."""
        assert reflect(e8_root(1), E + F) == E + F

    def test_torsion_bit_unchanged(self):
        """Test that reflection keeps the torsion bit."""
        x = E + e8_root(3) + CANONICAL
        assert reflect(e8_root(1), x).torsion == 1

    def test_non_root_rejected(self):
        """Test that reflecting in a non-root raises."""
        with pytest.raises(NotARoot):
            Reflection(E + F)

    def test_torsion_root_rejected(self):
        """Test that a root with a torsion bit is rejected."""
        with pytest.raises(NotARoot):
            reflect(e8_root(1) + CANONICAL, E)

    @given(roots, classes)
    def test_involution(self, root, x):
        """Test that a reflection squares to the identity."""
        assert reflect(root, reflect(root, x)) == x

    @given(roots, classes, classes)
    def test_preserves_pairing(self, root, x, y):
        """Test that reflection is an isometry."""
        assert pair(reflect(root, x), reflect(root, y)) == pair(x, y)
