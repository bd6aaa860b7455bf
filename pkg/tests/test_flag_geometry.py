"""
Tests for points, conics, fibers and configurations on the flag threefold
"""

from itertools import combinations

import pytest
from hypothesis import assume, given, settings as hyp_settings, strategies as st

from src.curves import Conic, FiberCurve, FiberKind, conic_param
from src.errors import (
    AllZero,
    DegenerateCross,
    NotOnFlag,
    NotSmooth,
    ParallelData,
    RepeatedConic,
    SameConic,
)
from src.flag_geometry import (
    Configuration,
    FlagPoint,
    are_disjoint,
    classify_config,
    collinear_triple,
    collinear_witness,
    connecting_curves,
    incidence_common_point,
    make_twistor_fiber,
    twistor_project,
)
from src.exact_matrix import det3
from src.gaussrat import I, GaussRat
from src.proj_point import ProjPoint, dot, plane_basis

E0, E1, E2 = (ProjPoint.unit(i) for i in range(3))
E01 = ProjPoint([1, 1, 0])

small = st.builds(GaussRat, st.integers(-3, 3), st.integers(-3, 3))
vectors = st.lists(small, min_size=3, max_size=3).filter(lambda v: any(v))
parameters = st.tuples(small, small).filter(lambda v: any(v))


class TestProjPoint:
    """Test canonical form and products."""

    def test_projective_equality(self):
        """Test that proportional vectors are the same point."""
        assert ProjPoint([2, 4, 0]) == ProjPoint([1, 2, 0])
        assert ProjPoint([0, I, 1]) == ProjPoint([0, 1, -I])
        assert hash(ProjPoint([3, 3, 3])) == hash(ProjPoint([1, 1, 1]))

    def test_all_zero(self):
        """Test that the zero vector is not a point."""
        with pytest.raises(AllZero):
            ProjPoint([0, 0, 0])

    def test_wrong_length(self):
        """Test that points need three coordinates."""
        with pytest.raises(ValueError, match="3 coordinates"):
            ProjPoint([1, 0])

    def test_conj_and_str(self):
        """Test conjugation and display."""
        assert str(ProjPoint([0, 1, I]).conj()) == "[0:1:-1i]"

    def test_cross(self):
        """Test the cross product of two points."""
        assert E0.cross(E1) == E2
        with pytest.raises(DegenerateCross):
            E0.cross(ProjPoint([3, 0, 0]))

    def test_plane_basis(self):
        """Test the deterministic plane basis for the normal e0."""
        u, v = plane_basis(E0.coords)
        assert list(u) == [0, 1, 0]
        assert list(v) == [0, 0, 1]


class TestConics:
    """Test conics and fibers."""

    def test_twistor_flag(self):
        """Test that L_{q, conj q} is a twistor fiber."""
        q = ProjPoint([1, I, 2])
        assert make_twistor_fiber(q).twistor
        assert not Conic(E0, E01).twistor

    def test_not_smooth(self):
        """Test that q.m = 0 is rejected."""
        with pytest.raises(NotSmooth):
            Conic(E0, E1)

    def test_parametrization(self):
        """Test the explicit parametrization of the fiber over e0."""
        gamma = make_twistor_fiber(E0).parametrization()
        p, l = gamma.point_at(1, 2)
        assert p == ProjPoint([0, 1, 2])
        assert l == ProjPoint([0, 2, -1])

    def test_parametrization_lies_on_conic(self):
        """Test that parametrized points satisfy the defining forms."""
        conic = Conic(ProjPoint([1, 2, I]), ProjPoint([1, 0, 1]))
        gamma = conic.parametrization()
        pm, ql = conic.defining_forms()
        for s, t in [(1, 0), (0, 1), (2, -3), (I, 1)]:
            p, l = gamma.point_at(s, t)
            assert conic.contains_point(p, l)
            assert not pm.evaluate(p, l)
            assert not ql.evaluate(p, l)

    def test_twistor_fiber_is_j_invariant(self):
        """Test that j maps a twistor fiber to itself."""
        fiber = make_twistor_fiber(ProjPoint([1, I, 2]))
        assert fiber.j_image() == fiber

    def test_fiber_curves(self):
        """Test fiber bidegrees, incidence and the j-image."""
        left = FiberCurve(FiberKind.PI2, E2)
        assert left.bidegree == (1, 0)
        assert left.meets(make_twistor_fiber(E0))
        assert not left.meets(make_twistor_fiber(E2))
        assert left.j_image() == FiberCurve(FiberKind.PI1, E2)
        p, l = left.parametrization().point_at(2, 3)
        assert left.contains_point(p, l)
        assert l == E2


class TestTwistorProjection:
    """Test the projection F -> P^2 onto twistor fiber labels."""

    def test_example(self):
        """Test that ([1:0:0], [0:0:1]) projects to [0:1:0]."""
        assert twistor_project(E0, E2) == E1

    def test_points_of_a_fiber(self):
        """Test that every point of the fiber over q projects to q."""
        q = ProjPoint([1, I, 2])
        gamma = make_twistor_fiber(q).parametrization()
        for s, t in [(1, 0), (0, 1), (1, 1), (3, -I)]:
            p, l = gamma.point_at(s, t)
            assert twistor_project(p, l) == q

    def test_j_invariance(self):
        """Test that x and j(x) project to the same point."""
        x = FlagPoint(ProjPoint([1, I, 0]), ProjPoint([0, 0, 1]))
        assert twistor_project(x.p, x.l) == twistor_project(x.j().p, x.j().l)

    def test_off_flag(self):
        """Test that points off F are rejected."""
        with pytest.raises(NotOnFlag):
            twistor_project(E0, E0)
        with pytest.raises(NotOnFlag):
            FlagPoint(E0, E01)


class TestIncidence:
    """Test disjointness and collinearity."""

    def test_twistor_fibers_disjoint(self):
        """Test that distinct twistor fibers never meet."""
        assert are_disjoint(make_twistor_fiber(E0), make_twistor_fiber(E1))
        assert are_disjoint(make_twistor_fiber(E01), make_twistor_fiber(ProjPoint([1, I, 0])))

    def test_meeting_pair(self):
        """Test a pair meeting at (e1, e2) and agreement with direct solving."""
        c1 = Conic(E0, E0)
        c2 = Conic(E01, ProjPoint([1, 0, 1]))
        assert not are_disjoint(c1, c2)
        assert incidence_common_point(c1, c2) == FlagPoint(E1, E2)

    def test_parallel_meeting_pair(self):
        """Test that parallel m data forces a common point."""
        c1 = Conic(E0, E0)
        c2 = Conic(E01, E0)
        assert not are_disjoint(c1, c2)
        assert incidence_common_point(c1, c2) == FlagPoint(E1, E2)

    def test_disjoint_has_no_common_point(self):
        """Test that the direct solver agrees on a disjoint pair."""
        assert incidence_common_point(make_twistor_fiber(E0), make_twistor_fiber(E1)) is None

    def test_same_conic(self):
        """Test that comparing a conic with itself is an error."""
        with pytest.raises(SameConic):
            are_disjoint(make_twistor_fiber(E0), make_twistor_fiber(ProjPoint([5, 0, 0])))

    def test_collinear_triple(self):
        """Test that e0, e1, [1:1:0] are collinear and e0, e1, e2 are not."""
        fibers = [make_twistor_fiber(q) for q in (E0, E1, E01)]
        assert collinear_triple(*fibers)
        assert not collinear_triple(*fibers[:2], make_twistor_fiber(E2))
        assert collinear_witness(fibers) == FiberCurve(FiberKind.PI2, E2)

    def test_repeated_q(self):
        """Test that collinearity needs distinct q points."""
        with pytest.raises(RepeatedConic):
            collinear_triple(Conic(E0, E0), Conic(E0, E01), make_twistor_fiber(E1))

    def test_connecting_curves(self):
        """Test that R = j(L) for twistor fibers and both meet both conics."""
        c1, c2 = make_twistor_fiber(E0), make_twistor_fiber(E1)
        left, right = connecting_curves(c1, c2)
        assert left == FiberCurve(FiberKind.PI2, E2)
        assert right == left.j_image()
        assert left.meets(c1) and left.meets(c2)
        assert right.meets(c1) and right.meets(c2)

    def test_connecting_curves_parallel(self):
        """Test that shared m data has no connecting pair."""
        with pytest.raises(ParallelData):
            connecting_curves(Conic(E0, E0), Conic(E01, E0))

    @hyp_settings(deadline=None, max_examples=60)
    @given(vectors, vectors, parameters, vectors)
    def test_pi2_fiber_meets_iff_q_dot_base_vanishes(self, q, m, point_params, b):
        """Test q.b = 0 iff the pi2-fiber over b meets L_{q,m}, against points of the conic."""
        assume(dot(q, m))
        conic = Conic(ProjPoint(q), ProjPoint(m))
        gamma = conic_param(conic)

        p, l = gamma.point_at(*point_params)
        through = FiberCurve(FiberKind.PI2, l)
        assert through.meets(conic)
        assert through.contains_point(p, l) and conic.contains_point(p, l)

        # the l-map of the conic spans exactly the lines through q
        l_span = [gamma.point_at(1, 0)[1].coords, gamma.point_at(0, 1)[1].coords]
        reached = not det3(*l_span, b)
        assert FiberCurve(FiberKind.PI2, ProjPoint(b)).meets(conic) == reached == (not dot(q, b))


class TestConfiguration:
    """Test classification of configurations."""

    def test_star_triple(self):
        """Test the coordinate twistor triple."""
        config = classify_config([make_twistor_fiber(q) for q in (E0, E1, E2)])
        assert config.category() == "T*(3)"
        assert config.collinear_witness is None

    def test_collinear_triple(self):
        """Test that a collinear twistor triple is T(3)-."""
        config = classify_config([make_twistor_fiber(q) for q in (E0, E1, E01)])
        assert config.category() == "T(3)-"
        assert config.summary()["collinear_witness"] == str(E2)

    def test_not_twistor(self):
        """Test that one general conic makes the family C."""
        config = classify_config([make_twistor_fiber(E1), Conic(E0, E01)])
        assert config.all_twistor is False
        assert config.category().startswith("C")

    def test_not_disjoint(self):
        """Test the label of a meeting pair."""
        config = classify_config([Conic(E0, E0), Conic(E01, ProjPoint([1, 0, 1]))])
        assert not config.pairwise_disjoint
        assert config.category() == "not disjoint (2 conics)"

    def test_single_conic_has_no_witness(self):
        """Test that one conic does not fix a witness line."""
        assert Configuration([make_twistor_fiber(E0)]).collinear_witness is None

    def test_empty(self):
        """Test that an empty configuration is allowed but cannot be classified."""
        assert Configuration().n == 0
        with pytest.raises(ValueError, match="empty"):
            classify_config([])

    def test_repeated_member(self):
        """Test that a repeated conic is rejected during classification."""
        with pytest.raises(SameConic):
            classify_config([make_twistor_fiber(E0), make_twistor_fiber(E0)])

    def test_without(self):
        """Test dropping one member."""
        config = Configuration([make_twistor_fiber(q) for q in (E0, E1, E2)])
        smaller = config.without(1)
        assert smaller.n == 2
        assert smaller[1] == make_twistor_fiber(E2)

    @hyp_settings(deadline=None, max_examples=60)
    @given(st.lists(vectors, min_size=3, max_size=4), st.booleans(), small, small)
    def test_c_star_agrees_on_m(self, qs, on_a_line, a, b):
        """Test that C* membership from the q's matches the same test on the m's."""
        if on_a_line:
            qs = qs[:2] + [[a * x + b * y for x, y in zip(qs[0], qs[1])]]
            assume(any(qs[2]))
        points = [ProjPoint(q) for q in qs]
        assume(all(x != y for x, y in combinations(points, 2)))
        config = Configuration([make_twistor_fiber(x) for x in points])
        from_m = all(
            det3(x.m.coords, y.m.coords, z.m.coords) for x, y, z in combinations(config, 3)
        )
        assert config.in_c_star == from_m
        if on_a_line:
            assert not config.in_c_star
