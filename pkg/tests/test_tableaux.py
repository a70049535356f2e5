import pytest

from supergt.tableaux import (
    GTTableau,
    HookDiagram,
    ShapeError,
    SkewShape,
    SSYT,
    TableauError,
    _enumerate_brute,
    check_admissible,
    content_table,
    covariant_weights,
    enumerate_ssyt,
    enumerate_tableaux,
    hook_diagram,
    is_admissible,
    skew_shapes,
    ssyt_to_tableau,
    tableau_to_ssyt,
    transformation_graph,
)


def shape_11(lam, mu=(), r=0):
    return SkewShape(1, 1, r, lam, mu)


def tab(shape, *rows):
    return GTTableau(shape, tuple(tuple(r) for r in rows))


# -- hook diagrams -------------------------------------------------------------


def test_hook_diagram_examples():
    assert hook_diagram((2, 1), 1, 1).rows == (2, 1)
    assert hook_diagram((0, 0), 1, 1).rows == ()
    assert hook_diagram((3, 0), 1, 1).rows == (3,)


def test_hook_diagram_rejects_noncovariant():
    with pytest.raises(ShapeError, match="nonzero odd"):
        hook_diagram((0, 1), 1, 1)


def test_hook_diagram_pure_odd_is_conjugate():
    assert hook_diagram((3, 1), 0, 2).rows == (2, 1, 1)


# -- admissibility -------------------------------------------------------------


def test_vector_representation_tableaux():
    sh = shape_11((1, 0))
    assert is_admissible(tab(sh, (), (1,), (1, 0)))
    assert is_admissible(tab(sh, (), (0,), (1, 0)))
    bad = check_admissible(tab(sh, (), (2,), (1, 0)))
    assert bad is not None and bad.condition == "A(2)"


def test_trivial_module_single_tableau():
    sh = shape_11((0, 0))
    assert is_admissible(tab(sh, (), (0,), (0, 0)))
    assert len(enumerate_tableaux(sh)) == 1


def test_enumeration_counts_1_1_0():
    assert len(enumerate_tableaux(shape_11((1, 0)))) == 2
    assert len(enumerate_tableaux(shape_11((2, 1)))) == 2


def test_canonical_order_is_descending_reading_word():
    ts = enumerate_tableaux(shape_11((1, 0)))
    assert [t.row(1) for t in ts] == [(1,), (0,)]
    assert ts == enumerate_tableaux(shape_11((1, 0)))  # deterministic


# -- the A(3) reading (surfaced discrepancy, see module docstring) -------------


def test_a3_literal_reading_contradicts_ssyt_count():
    sh = shape_11((1, 1))
    ts = enumerate_tableaux(sh)
    ssyt = enumerate_ssyt(1, 1, sh.outer_diagram(), sh.inner_diagram())
    assert len(ts) == len(ssyt) == 2
    # the literal count (starting at column m') rejects every basis tableau here
    for t in ts:
        bad = check_admissible(t, a3_literal=True)
        assert bad is not None and bad.condition == "A(3)"


# -- content tables ------------------------------------------------------------


def test_content_table_values():
    sh = shape_11((1, 0))
    c1 = content_table(tab(sh, (), (1,), (1, 0)))
    assert c1.l(1, 1) == 1 and c1.l(2, 1) == 1 and c1.l(2, 2) == 0
    c0 = content_table(tab(sh, (), (0,), (1, 0)))
    assert c0.l(1, 1) == 0


def test_content_table_offset_with_r():
    sh = SkewShape(1, 1, 2, (1, 0, 0, 0), (0, 0))
    for t in enumerate_tableaux(sh):
        c = content_table(t)
        for k in range(0, 3):
            assert c.l(k, 1) == t.entry(2 + k, 1) + 2


def test_content_strictly_decreasing_in_even_columns():
    for shape in list(skew_shapes(1, 1, 1, 3)) + list(skew_shapes(2, 1, 0, 4)):
        for t in enumerate_tableaux(shape):
            c = content_table(t)
            for k in range(1, shape.m + shape.n + 1):
                ls = [c.l(k, i) for i in range(1, min(shape.m_prime, shape.r + k) + 1)]
                assert all(a > b for a, b in zip(ls, ls[1:]))


# -- SSYT bijection ------------------------------------------------------------


def test_bijection_examples_2_1():
    sh = shape_11((2, 1))
    t_bottom2 = tab(sh, (), (2,), (2, 1))
    s = tableau_to_ssyt(t_bottom2)
    assert s.filling == ((1, 1), (2,))
    t_bottom1 = tab(sh, (), (1,), (2, 1))
    s1 = tableau_to_ssyt(t_bottom1)
    assert s1.filling == ((1, 2), (2,))


def test_bijection_empty_shape():
    sh = shape_11((0, 0))
    (t,) = enumerate_tableaux(sh)
    s = tableau_to_ssyt(t)
    assert s.filling == ()
    assert ssyt_to_tableau(s, sh) == t


@pytest.mark.parametrize(
    "m,n,r,maxw",
    [(1, 1, 0, 4), (1, 1, 1, 3), (2, 1, 0, 3), (1, 2, 0, 3), (0, 2, 0, 3)],
)
def test_bijection_roundtrip_and_counts(m, n, r, maxw):
    for shape in skew_shapes(m, n, r, maxw):
        ts = enumerate_tableaux(shape)
        ssyt = enumerate_ssyt(m, n, shape.outer_diagram(), shape.inner_diagram())
        assert len(ts) == len(ssyt)
        images = set()
        for t in ts:
            s = tableau_to_ssyt(t)
            assert ssyt_to_tableau(s, shape) == t
            images.add(s.filling)
        assert images == {s.filling for s in ssyt}


def test_ssyt_rejects_non_semistandard():
    with pytest.raises(TableauError):
        SSYT(1, 1, HookDiagram((2,)), HookDiagram(()), ((2, 2),))


# -- brute-force oracle agreement ----------------------------------------------


@pytest.mark.parametrize(
    "shape",
    [
        shape_11((1, 0)),
        shape_11((2, 1)),
        shape_11((2, 2)),
        SkewShape(1, 1, 1, (2, 1, 0), (1,)),
        SkewShape(2, 0, 0, (2, 1), ()),
        SkewShape(0, 2, 0, (2, 1), ()),
    ],
)
def test_backtracking_matches_brute_force(shape):
    assert enumerate_tableaux(shape) == _enumerate_brute(shape)


# -- transformation graph --------------------------------------------------------


def test_transformation_graph_vector_rep():
    g = transformation_graph(shape_11((1, 0)))
    assert len(g.vertices) == 2
    assert g.connected
    undirected = {frozenset((e[0], e[1])) for e in g.edges}
    assert undirected == {frozenset((0, 1))}


def test_transformation_graph_trivial():
    g = transformation_graph(shape_11((0, 0)))
    assert len(g.vertices) == 1 and g.connected and not g.edges


@pytest.mark.parametrize("m,n,r,maxw", [(1, 1, 0, 4), (1, 1, 1, 3), (2, 1, 0, 3)])
def test_transformation_graph_connected_on_sweep(m, n, r, maxw):
    for shape in skew_shapes(m, n, r, maxw):
        g = transformation_graph(shape)
        if g.vertices:
            assert g.connected, shape
            if len(g.vertices) > 1:
                assert len(g.spanning_tree()) == len(g.vertices) - 1


# -- shape validation -------------------------------------------------------------


def test_shape_rejects_containment_failure():
    with pytest.raises(ShapeError, match="contained"):
        SkewShape(1, 1, 1, (1, 0, 0), (2,))


def test_shape_rejects_noncovariant_lambda():
    with pytest.raises(ShapeError, match="lambda"):
        SkewShape(1, 1, 0, (0, 2), ())


def test_covariant_weights_small():
    ws = list(covariant_weights(1, 1, 2))
    assert (1, 1) in ws and (2, 0) in ws and (0, 0) in ws and (0, 1) not in ws


def test_serialization_roundtrip():
    sh = SkewShape(1, 1, 1, (2, 1, 0), (1,))
    assert SkewShape.from_json_dict(sh.to_json_dict()) == sh
    t = enumerate_tableaux(sh)[0]
    assert GTTableau.from_json_dict(t.to_json_dict()) == t
    s = tableau_to_ssyt(t)
    assert SSYT.from_json_dict(s.to_json_dict()) == s
