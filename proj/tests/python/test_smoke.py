"""End-to-end smoke tests for the python bindings.

The heavy property testing lives in the C++ suites; here we only prove the
bindings expose the operations faithfully: values cross the boundary intact,
verdicts match, and library errors surface as the right python exceptions.
"""

import math

import pytest

import opsysdual as osd


def path3():
    return osd.ToleranceRelation(3, [(0, 1), (1, 2)])


def pattern_matrix(relation, rows):
    return osd.PartialHermitianMatrix(
        relation, [[complex(v) for v in row] for row in rows]
    )


def test_graph_basics():
    r = path3()
    assert r.n == 3
    assert r.edges == [(0, 1), (1, 2)]
    assert osd.is_chordal(r)
    assert osd.maximal_cliques(r) == [[0, 1], [1, 2]]
    assert osd.propagation_primal(r) == 2
    assert osd.propagation_dual(r) == 2

    c4 = osd.ToleranceRelation(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert not osd.is_chordal(c4)
    with pytest.raises(osd.NotChordalError):
        osd.maximal_cliques(c4)


def test_band_envelope():
    env = osd.envelope_of_dual(osd.band_relation(5, 2))
    assert env.block_sizes == [2, 2, 2, 2]
    assert env.algebra_dim() == 16
    assert osd.band_vector_extremal([1, 1, 1, 1, 1], 2)
    assert not osd.band_vector_extremal([1, 0, 1], 2)


def test_chordal_completion_round_trip():
    x = pattern_matrix(path3(), [[1, 1, 0], [1, 1, 1], [0, 1, 1]])
    m = osd.chordal_complete(x)
    assert m[0][2] == pytest.approx(1.0)
    assert osd.is_psd(m)


def test_dykstra_rejects_the_four_cycle_witness():
    c4 = osd.ToleranceRelation(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    w = pattern_matrix(
        c4, [[1, 1, 0, -1], [1, 1, 1, 0], [0, 1, 1, 1], [-1, 0, 1, 1]]
    )
    # Partial positivity is only defined through a clique cover, so the
    # non-chordal witness is a hard error there -- while the approximate
    # projection method still gets to pronounce on completability.
    with pytest.raises(osd.NotChordalError):
        osd.is_partially_positive(w)
    res = osd.dykstra_complete(w)
    assert not res.feasible
    assert res.residual == pytest.approx(2 - math.sqrt(2), rel=1e-6)


def test_certification_and_recovery():
    x = osd.extremal_from_vector([1, 1j, -1], path3())
    report = osd.certify_extremal(x)
    assert report.is_extremal
    assert report.face_dimension == 1
    v = osd.recover_generating_vector(x)
    assert [abs(z) for z in v] == pytest.approx([1.0, 1.0, 1.0])


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        osd.ToleranceRelation(2, [(0, 5)])
    bad = pattern_matrix(path3(), [[1, 2, 0], [2, 1, 0.5], [0, 0.5, 1]])
    with pytest.raises(osd.NotPartiallyPositiveError):
        osd.chordal_complete(bad)
    with pytest.raises(osd.NotInConeError):
        osd.certify_extremal(bad)
    with pytest.raises(osd.ZeroElementError):
        osd.recover_generating_vector(
            pattern_matrix(path3(), [[0, 0, 0], [0, 0, 0], [0, 0, 0]])
        )


def test_span_propagation():
    gens = osd.pattern_space_basis(path3())
    res = osd.span_propagation(gens, 9)
    assert res.reached
    assert res.propagation == 2
    assert res.dims == [7, 9]
