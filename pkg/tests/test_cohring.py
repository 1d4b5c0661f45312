from fractions import Fraction as F

import pytest

from epg.cohring import CohomRing, CohomSeries, fixed_loci, pushforward, tangent_chern_roots
from epg.errors import RingMismatchError
from epg.pseries import PuiseuxSeries


def c(v):
    return PuiseuxSeries.constant(2, v)


def test_rings():
    p2 = CohomRing.projective(3)
    p1 = CohomRing.projective(2, "y")
    prod = CohomRing.product(p2, p1)
    assert prod.nvars == 2 and prod.degrees == (3, 2) and prod.top == (2, 1) and prod.dimension == 3
    assert len(list(prod.monomials())) == 6
    with pytest.raises(ValueError):
        CohomRing.projective(0)


def test_truncated_product_and_pushforward():
    ring = CohomRing.projective(3)
    h = CohomSeries(ring, {(0,): c(1), (1,): c(1)})  # 1 + x
    cube = h * h * h  # (1+x)^3 = 1 + 3x + 3x^2 in Q[x]/x^3
    assert pushforward(cube) == c(3)
    assert cube.coefficient((1,)) == c(3)
    assert pushforward(CohomSeries.scalar(ring, c(5))).is_zero()


def test_ring_mismatch():
    a = CohomSeries(CohomRing.projective(2), {(0,): c(1)})
    b = CohomSeries(CohomRing.projective(3), {(0,): c(1)})
    with pytest.raises(RingMismatchError):
        a + b
    with pytest.raises(RingMismatchError):
        pushforward(a, CohomRing.projective(3))


def test_fixed_loci_of_grading_element():
    g = (F(1, 2), F(1, 6), F(1, 6), F(1, 6))  # J for weights (3,1,1,1), degree 6
    h = (0, 0, 0, 0)
    loci = fixed_loci(4, g, h)
    assert [L.coords for L in loci] == [(0,), (1, 2, 3)]
    assert [L.dim for L in loci] == [0, 2]


def test_tangent_roots():
    g = (F(1, 3), 0, 0)
    locus = fixed_loci(3, g, (0, 0, 0))[0]
    roots = tangent_chern_roots(locus, 3, g, (0, 0, 0))
    assert len(roots) == 4
    assert roots[-1].removed and roots[-1].xcoef == 0 and roots[-1].trivial
    assert sum(r.trivial for r in roots[:3]) == len(locus.coords)
