import pytest

from lcmkit.cm import is_cohen_macaulay, is_l_cm
from lcmkit.complexes import (
    SimplicialComplex,
    boundary_simplex,
    cycle,
    full_simplex,
    path,
)
from lcmkit.errors import (
    MultipleMinimalError,
    NonBooleanIntervalError,
    ParseError,
    PosetValidationError,
    RankMismatchError,
)
from lcmkit.linalg import FieldSpec
from lcmkit.posets import (
    SimplicialPoset,
    atom_class,
    delete_atoms,
    face_poset,
    face_ring_module,
    format_poset_file,
    glued_simplices,
    is_poset_cm,
    is_poset_l_cm,
    join_set,
    max_poset_l,
    order_complex,
    parse_poset_file,
    poset_skeleton,
    random_simplicial_poset,
    restrict_poset,
)
from lcmkit.squarefree import from_complex, is_module_l_cm

QQ = FieldSpec.rationals()


def test_face_poset_is_valid_and_sized():
    fp = face_poset(cycle(4))
    assert fp.size == 9  # empty face + 4 vertices + 4 edges
    assert fp.max_rank() == 2
    assert fp.vertex_count == 4
    assert face_poset(SimplicialComplex.empty(0)).size == 1


def test_glued_simplices_validation_and_shape():
    for d in (1, 2, 3):
        for m in (1, 2, 3):
            p = glued_simplices(d, m)
            assert p.max_rank() == d + 1
            assert p.vertex_count == d + 1
            tops = [x for x in range(p.size) if p.rank[x] == d + 1]
            assert len(tops) == m
    assert glued_simplices(2, 1).size == 2 ** 3  # boolean lattice of a triangle


def test_invalid_posets():
    with pytest.raises(RankMismatchError):
        SimplicialPoset.build(["o", "a", "b"], "o", [("o", "a"), ("a", "b")])
    with pytest.raises(MultipleMinimalError):
        SimplicialPoset.build(["o", "a"], "o", [])
    # rank-consistent but the interval below x misses the face over {b, c}
    with pytest.raises(NonBooleanIntervalError):
        SimplicialPoset.build(
            ["o", "a", "b", "c", "ab", "ac", "x"],
            "o",
            [
                ("o", "a"), ("o", "b"), ("o", "c"),
                ("a", "ab"), ("b", "ab"), ("a", "ac"), ("c", "ac"),
                ("ab", "x"), ("ac", "x"),
            ],
        )
    with pytest.raises(PosetValidationError):
        SimplicialPoset.build(["o", "a"], "o", [("o", "a"), ("a", "o")])


def test_join_set():
    g22 = glued_simplices(2, 2)
    e1 = g22.index_of("1,2")
    e2 = g22.index_of("1,3")
    tops = {g22.ids[x] for x in join_set(g22, e1, e2)}
    assert tops == {"T1", "T2"}
    a = g22.index_of("1")
    assert join_set(g22, a, g22.bottom) == frozenset({a})
    # in a face poset joins have at most one element
    fp = face_poset(cycle(4))
    x = fp.index_of("1")
    y = fp.index_of("3")
    assert join_set(fp, x, y) == frozenset()
    assert {fp.ids[z] for z in join_set(fp, x, fp.index_of("2"))} == {"1,2"}


def test_partition_into_join_classes():
    for p in [glued_simplices(2, 2), face_poset(cycle(4)), random_simplicial_poset(4, 3, 1)]:
        total = 0
        seen = set()
        supports = {p.support[x] for x in range(p.size)}
        for u in supports:
            cls = atom_class(p, u)
            total += len(cls)
            seen.update(cls)
        assert total == p.size and len(seen) == p.size


def test_restrict_poset():
    g22 = glued_simplices(2, 2)
    r = restrict_poset(g22, {1, 2})
    assert r.max_rank() == 2  # the edge 1,2 survives, tops are gone
    assert r.size == 4
    assert restrict_poset(g22, {1, 2, 3}) == g22
    assert delete_atoms(g22, {3}) == r


def test_restrict_face_poset_commutes(fieldspec):
    for delta in [cycle(4), boundary_simplex(2), path(4)]:
        fp = face_poset(delta)
        for keep in [(1, 2), (1, 2, 3), ()]:
            lhs = restrict_poset(fp, set(keep))
            rhs = face_poset(delta.induced_subcomplex(keep))
            # same structure up to the order-preserving relabeling of ids
            assert lhs.size == rhs.size
            assert sorted(lhs.rank) == sorted(rhs.rank)
            assert sorted(map(sorted, lhs.support)) == sorted(map(sorted, rhs.support))
            assert order_complex(lhs) == order_complex(rhs)


def test_poset_skeleton():
    g22 = glued_simplices(2, 2)
    assert poset_skeleton(g22, g22.max_rank()) == g22
    sphere = poset_skeleton(g22, 2)
    assert sphere.size == 1 + 3 + 3
    assert sphere.max_rank() == 2
    fp = face_poset(boundary_simplex(3))
    assert poset_skeleton(fp, 2) == face_poset(boundary_simplex(3).skeleton(1))


def test_order_complex_shapes():
    edge_poset = face_poset(full_simplex(2))
    oc = order_complex(edge_poset)
    assert oc.facets == frozenset({frozenset({1, 3}), frozenset({2, 3})})
    c4 = order_complex(glued_simplices(1, 2))
    assert c4.dimension() == 1
    assert len(c4.facets) == 4
    assert is_l_cm(c4, 2, QQ)
    single_atom = SimplicialPoset.build(["o", "a"], "o", [("o", "a")])
    assert order_complex(single_atom).facets == frozenset({frozenset({1})})
    just_bottom = face_poset(SimplicialComplex.empty(0))
    assert order_complex(just_bottom) == SimplicialComplex.empty(0)


def test_order_complex_dimension_is_rank_minus_one():
    for p in [glued_simplices(2, 2), face_poset(cycle(4)), random_simplicial_poset(5, 3, 3)]:
        assert order_complex(p).dimension() == p.max_rank() - 1


def test_poset_cm_examples(fieldspec):
    for d in (1, 2, 3):
        p = glued_simplices(d, 2)
        assert is_poset_cm(p, fieldspec)
        assert not is_poset_l_cm(p, 2, fieldspec)
        assert is_l_cm(order_complex(p), 2, fieldspec)
    assert max_poset_l(glued_simplices(3, 1), QQ) == 1  # boolean poset


def test_poset_l_cm_matches_complex_route(fieldspec):
    for delta in [cycle(4), path(3), boundary_simplex(2)]:
        fp = face_poset(delta)
        for l in range(1, delta.vertex_count + 2):
            assert is_poset_l_cm(fp, l, fieldspec) == is_l_cm(delta, l, fieldspec)


def test_face_ring_module_of_face_poset_is_face_ring(fieldspec):
    for delta in [cycle(4), boundary_simplex(2), path(3)]:
        assert face_ring_module(face_poset(delta)) == from_complex(delta)


def test_face_ring_module_glued():
    m = face_ring_module(glued_simplices(1, 2))
    assert m.comp == {
        frozenset(): 1,
        frozenset({1}): 1,
        frozenset({2}): 1,
        frozenset({1, 2}): 2,
    }
    assert m.map_matrix((), 1) == ((1,),)
    assert m.map_matrix((1,), 2) == ((1,), (1,))
    for d in (1, 2, 3):
        from lcmkit.squarefree import module_dim

        p = glued_simplices(d, 2)
        assert module_dim(face_ring_module(p)) == p.max_rank()


def test_route_agreement(fieldspec):
    posets = [
        face_poset(cycle(4)),
        glued_simplices(1, 2),
        glued_simplices(2, 2),
        random_simplicial_poset(4, 2, 5),
        random_simplicial_poset(5, 3, 8),
    ]
    for p in posets:
        m = face_ring_module(p)
        for l in range(1, p.vertex_count + 2):
            assert is_poset_l_cm(p, l, fieldspec) == is_module_l_cm(m, l, fieldspec), (p, l)


def test_theorem44_small(fieldspec):
    for p in [face_poset(boundary_simplex(2)), glued_simplices(2, 2), face_poset(cycle(5))]:
        l = max_poset_l(p, fieldspec)
        if l < 1:
            continue
        d = p.max_rank()
        for i in range(1, d):
            assert is_poset_l_cm(poset_skeleton(p, i), l + d - i, fieldspec)


def test_two_cm_poset_has_two_cm_order_complex(fieldspec):
    p = face_poset(cycle(4))
    assert is_poset_l_cm(p, 2, fieldspec)
    assert is_l_cm(order_complex(p), 2, fieldspec)


def test_random_posets_deterministic_and_valid():
    a = random_simplicial_poset(5, 3, 42)
    b = random_simplicial_poset(5, 3, 42)
    assert a == b
    c = random_simplicial_poset(5, 3, 43)
    assert a != c  # astronomically unlikely to coincide
    for seed in range(10):
        p = random_simplicial_poset(4, 3, seed)
        assert p.max_rank() <= 3
        assert p.vertex_count == 4


def test_poset_file_roundtrip():
    for p in [glued_simplices(2, 2), face_poset(cycle(4)), random_simplicial_poset(4, 2, 0)]:
        assert parse_poset_file(format_poset_file(p)) == p


def test_poset_file_parse_errors():
    with pytest.raises(ParseError):
        parse_poset_file("bottom o\n")
    with pytest.raises(ParseError):
        parse_poset_file("elements o a\n")
    with pytest.raises(ParseError):
        parse_poset_file("elements o a\nbottom o\ncover o\n")


def test_poset_file_is_purely_structural():
    # ranks and supports are derived, never read
    text = "elements o a b e1 e2\nbottom o\ncover o a\ncover o b\ncover a e1\ncover b e1\ncover a e2\ncover b e2\n"
    p = parse_poset_file(text)
    assert p.max_rank() == 2
    assert sorted(p.support[p.index_of("e1")]) == [1, 2]
