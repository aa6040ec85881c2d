import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from spectralbounds.graph import (
    FamilySpec,
    Graph,
    GraphError,
    ParseError,
    XorShift64Star,
    degree_sequence,
    generate_family,
    is_connected,
    parse_edge_list,
    random_connected,
    serialize_edge_list,
)


def test_parse_single_edge():
    g = parse_edge_list("2\n0 1")
    assert g.n == 2
    assert g.edges == {(0, 1)}


def test_parse_triangle_is_k3():
    assert parse_edge_list("3\n0 1\n1 2\n0 2") == generate_family(FamilySpec("complete", 3))


def test_parse_comments_duplicates_and_orientation():
    text = "# header\n4  # order\n\n0 1\n1 0\n2 3 # tail\n0 1\n"
    g = parse_edge_list(text)
    assert g.sorted_edges() == [(0, 1), (2, 3)]


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("3\n0 3", 2, "endpoint out of range"),
        ("3\n0 1\n1 x", 3, "malformed integer"),
        ("3\n# c\n1 1", 3, "self-loop"),
        ("0", 1, "vertex count"),
        ("abc", 1, "malformed integer"),
        ("3\n0 1 2", 2, "two endpoints"),
    ],
)
def test_parse_errors_name_line(text, line, fragment):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line
    assert fragment in str(exc.value)
    assert str(exc.value).endswith(f"line {line}")


def test_parse_error_message_matches_format():
    with pytest.raises(ParseError, match=r"^endpoint out of range, line 2$"):
        parse_edge_list("3\n0 3")


def test_empty_input():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")


def test_graph_rejects_bad_edges():
    with pytest.raises(GraphError):
        Graph(3, [(1, 1)])
    with pytest.raises(GraphError):
        Graph(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(0)


def test_adjacency_consistent():
    g = Graph(4, [(0, 1), (2, 1), (1, 0), (3, 0)])
    assert g.adjacency == ((1, 3), (0, 2), (1,), (0,))
    assert sum(len(a) for a in g.adjacency) == 2 * g.m


def test_star_4():
    assert generate_family(FamilySpec("star", 4)).sorted_edges() == [(0, 1), (0, 2), (0, 3)]


def test_cycle_5():
    g = generate_family(FamilySpec("cycle", 5))
    assert g.m == 5
    assert g.degrees() == [2] * 5


def test_k33():
    g = generate_family(FamilySpec("complete-bipartite", 6, 3))
    assert g.m == 9
    assert g.degrees() == [3] * 6


@pytest.mark.parametrize("n", range(1, 16))
def test_family_edge_counts(n):
    assert generate_family(FamilySpec("complete", n)).m == n * (n - 1) // 2
    assert generate_family(FamilySpec("path", n)).m == n - 1
    assert generate_family(FamilySpec("star", n)).m == n - 1
    if n >= 3:
        assert generate_family(FamilySpec("cycle", n)).m == n
    for a in range(1, n):
        assert generate_family(FamilySpec("complete-bipartite", n, a)).m == a * (n - a)


@pytest.mark.parametrize(
    "kind, n, a",
    [("cycle", 2, None), ("complete-bipartite", 4, 0), ("complete-bipartite", 4, 4),
     ("complete-bipartite", 4, None), ("wheel", 5, None), ("path", 0, None)],
)
def test_family_spec_invalid(kind, n, a):
    with pytest.raises(GraphError):
        FamilySpec(kind, n, a)


def test_family_labels():
    assert FamilySpec("complete-bipartite", 7, 3).label == "K3,4"
    assert FamilySpec("path", 3).label == "P3"


def test_random_forced_edge():
    assert random_connected(2, 1.0, 7).sorted_edges() == [(0, 1)]


def test_random_p1_is_complete():
    assert random_connected(5, 1.0, 0) == generate_family(FamilySpec("complete", 5))


def test_random_deterministic():
    a = serialize_edge_list(random_connected(20, 0.3, 42))
    b = serialize_edge_list(random_connected(20, 0.3, 42))
    assert a.encode() == b.encode()
    assert a != serialize_edge_list(random_connected(20, 0.3, 43))


def test_random_rejects_bad_args():
    with pytest.raises(GraphError):
        random_connected(1, 0.5, 0)
    with pytest.raises(GraphError):
        random_connected(5, 0.0, 0)


def test_random_resample_cap():
    # p tiny on 40 vertices: connectivity essentially impossible
    with pytest.raises(GraphError, match="connectivity resample cap"):
        random_connected(40, 1e-9, 3)


def _xorshift64star_numpy(seed, count):
    """Independent uint64 re-implementation used as an oracle."""
    with np.errstate(over="ignore"):
        z = np.uint64(seed) + np.uint64(0x9E3779B97F4A7C15)
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        s = z ^ (z >> np.uint64(31))
        out = []
        for _ in range(count):
            s ^= s >> np.uint64(12)
            s ^= s << np.uint64(25)
            s ^= s >> np.uint64(27)
            out.append(int(s * np.uint64(0x2545F4914F6CDD1D)))
    return out


@pytest.mark.parametrize("seed", [0, 1, 42, 2**63 + 5, 2**64 - 1])
def test_xorshift_matches_independent_implementation(seed):
    rng = XorShift64Star(seed)
    assert [rng.next_u64() for _ in range(50)] == _xorshift64star_numpy(seed, 50)


def test_xorshift_uniform_range():
    rng = XorShift64Star(9)
    xs = [rng.random() for _ in range(5000)]
    assert 0.0 <= min(xs) and max(xs) < 1.0
    assert abs(np.mean(xs) - 0.5) < 0.02
    ks = {rng.randint(3, 5) for _ in range(200)}
    assert ks == {3, 4, 5}


def test_is_connected_examples():
    assert is_connected(generate_family(FamilySpec("path", 3)))
    assert not is_connected(Graph(3, [(0, 1)]))
    assert is_connected(generate_family(FamilySpec("complete", 10)))
    assert is_connected(Graph(1))


def test_degree_sequences():
    assert degree_sequence(generate_family(FamilySpec("star", 4))) == [3, 1, 1, 1]
    assert degree_sequence(generate_family(FamilySpec("cycle", 5))) == [2] * 5
    assert degree_sequence(generate_family(FamilySpec("complete-bipartite", 6, 3))) == [3] * 6


edge_sets = st.integers(min_value=1, max_value=12).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.sets(st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]), max_size=40),
    )
)


@given(edge_sets)
def test_serialize_parse_roundtrip(data):
    n, edges = data
    g = Graph(n, edges)
    text = serialize_edge_list(g)
    assert parse_edge_list(text) == g
    lines = text.splitlines()[1:]
    pairs = [tuple(map(int, ln.split())) for ln in lines]
    assert pairs == sorted(pairs)
    assert all(u < v for u, v in pairs)


@given(edge_sets)
def test_degree_sum(data):
    g = Graph(*data)
    degs = degree_sequence(g)
    assert sum(degs) == 2 * g.m
    assert degs == sorted(degs, reverse=True)


@settings(max_examples=40, deadline=None)
@given(st.integers(2, 25), st.sampled_from([0.2, 0.5, 0.9]), st.integers(0, 2**64 - 1))
def test_random_connected_is_connected(n, p, seed):
    assert is_connected(random_connected(n, p, seed))
