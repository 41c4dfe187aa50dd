import numpy as np
import pytest

from PlanarEuler.euler_utils import (
    Classification,
    FVector,
    PreconditionError,
    classify,
    classify_graph,
    delete_degree2_preserves_complex,
    euler_polynomial,
    factorization_holds,
    fvector_of,
    inequality_one,
    inequality_two,
    numeric_all_real,
    numeric_roots,
    quadratic_bound_window,
    quadratic_edge_bound,
    roots,
)
from PlanarEuler.generator_utils import GridSpec, complete, fig2_vertex, grid, path
from PlanarEuler.graph_utils import from_edge_list

REAL = Classification.REAL
COMPLEX = Classification.COMPLEX


def euler_vectors(f0_max):
    for f0 in range(1, f0_max + 1):
        for f1 in range(f0 - 1, max(f0 - 1, 3 * f0 - 6) + 1):
            yield FVector(f0, f1, f1 - f0 + 2)


def test_fvector_of(witness):
    assert fvector_of(path(5)) == (5, 4, 1)
    assert fvector_of(grid(GridSpec(2, 3))) == (6, 7, 3)
    assert fvector_of(witness) == (9, 14, 7)


@pytest.mark.parametrize("f, coefficients, delta", [
    ((5, 4, 1), (1, 4, 5, 2), 1),
    ((6, 6, 2), (2, 6, 6, 2), 0),
    ((4, 6, 4), (4, 6, 4, 2), -28),
])
def test_euler_polynomial(f, coefficients, delta):
    p = euler_polynomial(FVector(*f))
    assert p.coefficients == coefficients
    assert p.delta == delta
    assert p(-1) == 0


@pytest.mark.parametrize("f, verdict", [
    ((5, 4, 1), REAL),
    ((5, 5, 2), COMPLEX),
    ((6, 7, 3), COMPLEX),
    ((10, 16, 8), REAL),
    ((6, 6, 2), REAL),
    ((4, 6, 4), COMPLEX),
])
def test_classify(f, verdict):
    assert classify(FVector(*f)) is verdict


def test_classify_accepts_non_euler_vectors():
    assert classify(FVector(20, 0, 0)) is REAL
    assert classify(FVector(3, 0, 5)) is COMPLEX


def test_classify_graph(witness):
    assert classify_graph(grid(GridSpec(3, 3))) is REAL
    assert classify_graph(grid(GridSpec(2, 2))) is COMPLEX
    assert classify_graph(witness) is COMPLEX


def test_inequalities_agree_on_euler_vectors():
    for f in euler_vectors(40):
        assert np.sign(inequality_one(f)) == np.sign(inequality_two(f))


def test_roots_cycle_six_triple_root():
    rs = roots(euler_polynomial(FVector(6, 6, 2)))
    assert rs.known_root == -1
    assert rs.discriminant == 0 and rs.all_real
    assert np.allclose(rs.approximations, [-1, -1, -1])


def test_roots_path_five():
    rs = roots(euler_polynomial(FVector(5, 4, 1)))
    assert rs.quadratic == (1, 3, 2)
    assert sorted(z.real for z in rs.approximations) == pytest.approx([-2, -1, -1])


def test_roots_k4_complex_pair():
    rs = roots(euler_polynomial(FVector(4, 6, 4)))
    assert rs.quadratic == (4, 2, 2)
    assert rs.discriminant == -28
    assert not rs.all_real
    pair = rs.approximations[1:]
    assert abs(pair[0] - pair[1].conjugate()) < 1e-12
    assert abs(pair[0].imag) == pytest.approx(np.sqrt(28) / 8)


def test_roots_degenerate_and_inconsistent():
    rs = roots(euler_polynomial(FVector(3, 2, 0)))
    assert rs.degenerate and rs.known_root is None
    assert rs.quadratic == (2, 3, 2)
    with pytest.raises(ValueError):
        roots(euler_polynomial(FVector(5, 5, 1)))


def test_roots_to_dict():
    data = roots(euler_polynomial(FVector(5, 4, 1))).to_dict()
    assert data["known_root"] == -1
    assert data["discriminant"] == 1
    assert data["all_real"] is True
    assert len(data["approximations"]) == 3


def test_factorization():
    assert all(factorization_holds(f) for f in euler_vectors(30))
    assert not factorization_holds(FVector(5, 5, 1))


def test_numeric_oracle_agrees():
    for f in euler_vectors(25):
        p = euler_polynomial(f)
        if p.delta != 0:
            assert numeric_all_real(p) == (classify(f) is REAL)
        else:
            a, b = numeric_roots(p)[1:]
            assert abs(a - b) < 1e-6


def test_numeric_roots_without_euler_relation():
    p = euler_polynomial(FVector(1, 2, 3))
    assert len(numeric_roots(p)) == 3


def test_adding_an_edge_never_makes_a_complex_graph_real():
    for f in euler_vectors(25):
        if f.f1 + 1 <= 3 * f.f0 - 6 and classify(f) is COMPLEX:
            assert classify(FVector(f.f0, f.f1 + 1, f.f2 + 1)) is COMPLEX


def test_quadratic_edge_bound():
    assert quadratic_edge_bound(17) == 43
    assert classify(FVector(17, 43, 28)) is REAL
    assert classify(FVector(17, 44, 29)) is COMPLEX
    assert quadratic_edge_bound(18) == 48
    for f in euler_vectors(30):
        assert (classify(f) is REAL) == (f.f1 <= quadratic_edge_bound(f.f0))


def test_quadratic_bound_window():
    assert quadratic_bound_window(200) == tuple(range(3, 18))
    assert quadratic_bound_window(200, triangle_free=True) == tuple(range(3, 10))


def test_degree2_deletion_on_witness(witness):
    assert delete_degree2_preserves_complex(witness, fig2_vertex("c"))


def test_degree2_deletion_preconditions(witness):
    with pytest.raises(PreconditionError, match="f0 >= 7"):
        delete_degree2_preserves_complex(complete(4), 0)
    with pytest.raises(PreconditionError, match="complex"):
        delete_degree2_preserves_complex(path(8), 1)
    with pytest.raises(PreconditionError, match="degree"):
        delete_degree2_preserves_complex(witness, fig2_vertex("a"))
    # two K4 joined through a vertex of degree 2
    k4 = [(u, v) for u in range(4) for v in range(u + 1, 4)]
    bridge = from_edge_list(9, k4 + [(u + 4, v + 4) for u, v in k4] + [(8, 0), (8, 4)])
    with pytest.raises(PreconditionError, match="connected"):
        delete_degree2_preserves_complex(bridge, 8)
